//! C interface to `fanopoly`.
//!
//! Polygons cross the boundary as opaque `FpPolygon` handles created by
//! `fp_polygon_parse` or `fp_polygon_mutate` and released with
//! `fp_polygon_free`. Every fallible call returns an `FpStatus`; on failure
//! `fp_last_error` gives a message for the calling thread. Strings returned by
//! the library are freed with `fp_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fanopoly::io::{analysis_value, parse_polygon};
use fanopoly::{degree, is_minimal, mutate, Error, FanoPolygon};
use num_traits::ToPrimitive;

/// Result of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotFano = 4,
    NoMutation = 5,
    BadInput = 6,
    Overflow = 7,
    CrossCheck = 8,
    Internal = 9,
}

/// Opaque polygon handle.
pub struct FpPolygon(FanoPolygon);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FpStatus {
    match e {
        Error::Parse(_) => FpStatus::Parse,
        Error::NotFano(_) | Error::Degenerate(_) => FpStatus::NotFano,
        Error::NoMutation(_) => FpStatus::NoMutation,
        e if e.is_cross_check() => FpStatus::CrossCheck,
        _ => FpStatus::BadInput,
    }
}

/// Run `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), (FpStatus, String)>) -> FpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FpStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FpStatus::Internal
        }
    }
}

fn lib(e: Error) -> (FpStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (FpStatus, String) {
    (FpStatus::NullPointer, format!("{what} is null"))
}

unsafe fn polygon_ref<'a>(p: *const FpPolygon) -> Result<&'a FanoPolygon, (FpStatus, String)> {
    // SAFETY: the caller passes a handle from this library or null.
    unsafe { p.as_ref() }.map(|h| &h.0).ok_or_else(|| null("polygon"))
}

/// Parse a polygon from text (JSON `[[x,y],...]` or `x,y;x,y;...`).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fp_polygon_parse(text: *const c_char, out: *mut *mut FpPolygon) -> FpStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        // SAFETY: checked non-null; the caller guarantees nul termination.
        let s = unsafe { CStr::from_ptr(text) }.to_str().map_err(|e| (FpStatus::InvalidUtf8, e.to_string()))?;
        let p = parse_polygon(s).map_err(lib)?;
        // SAFETY: checked non-null.
        unsafe { *out = Box::into_raw(Box::new(FpPolygon(p))) };
        Ok(())
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fp_polygon_free(p: *mut FpPolygon) {
    if !p.is_null() {
        // SAFETY: created by Box::into_raw in this library.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Number of vertices.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fp_polygon_vertex_count(p: *const FpPolygon, out: *mut usize) -> FpStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p) }?;
        if out.is_null() {
            return Err(null("out"));
        }
        // SAFETY: checked non-null.
        unsafe { *out = p.len() };
        Ok(())
    })
}

/// Copy vertex `i` into `x`, `y`. Fails with `FP_STATUS_OVERFLOW` when a
/// coordinate does not fit in 64 bits.
///
/// # Safety
/// `p` must be a live handle; `x` and `y` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn fp_polygon_vertex(p: *const FpPolygon, i: usize, x: *mut i64, y: *mut i64) -> FpStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p) }?;
        if x.is_null() || y.is_null() {
            return Err(null("output coordinate"));
        }
        let v = p.vertices().get(i).ok_or((FpStatus::BadInput, format!("vertex {i} out of range")))?;
        let (vx, vy) = v.to_i64().ok_or((FpStatus::Overflow, "coordinate exceeds 64 bits".to_string()))?;
        // SAFETY: checked non-null.
        unsafe {
            *x = vx;
            *y = vy;
        }
        Ok(())
    })
}

/// Anticanonical degree as a reduced fraction `num/den`.
///
/// # Safety
/// `p` must be a live handle; `num` and `den` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn fp_polygon_degree(p: *const FpPolygon, num: *mut i64, den: *mut i64) -> FpStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p) }?;
        if num.is_null() || den.is_null() {
            return Err(null("output"));
        }
        let d = degree(p);
        let overflow = || (FpStatus::Overflow, format!("degree {d} exceeds 64 bits"));
        let (n, m) = (d.numer().to_i64().ok_or_else(overflow)?, d.denom().to_i64().ok_or_else(overflow)?);
        // SAFETY: checked non-null.
        unsafe {
            *num = n;
            *den = m;
        }
        Ok(())
    })
}

/// Whether no single mutation lowers the boundary point count.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fp_polygon_is_minimal(p: *const FpPolygon, out: *mut bool) -> FpStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p) }?;
        if out.is_null() {
            return Err(null("out"));
        }
        // SAFETY: checked non-null.
        unsafe { *out = is_minimal(p) };
        Ok(())
    })
}

/// Mutate at edge `edge` (edges are numbered from vertex `edge` to the next).
/// The result is in canonical form and must be freed by the caller.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fp_polygon_mutate(p: *const FpPolygon, edge: usize, out: *mut *mut FpPolygon) -> FpStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p) }?;
        if out.is_null() {
            return Err(null("out"));
        }
        let q = mutate(p, edge).map_err(lib)?;
        // SAFETY: checked non-null.
        unsafe { *out = Box::into_raw(Box::new(FpPolygon(q))) };
        Ok(())
    })
}

/// Full analysis as a JSON string (content, degree, Hilbert coefficients up
/// to `hilbert_degree`, divisors, minimality, quiver). Free with `fp_string_free`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fp_polygon_analyze_json(
    p: *const FpPolygon,
    hilbert_degree: u32,
    out: *mut *mut c_char,
) -> FpStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p) }?;
        if out.is_null() {
            return Err(null("out"));
        }
        let v = analysis_value(p, false, hilbert_degree as usize).map_err(lib)?;
        let s = CString::new(v.to_string()).expect("JSON has no nul");
        // SAFETY: checked non-null.
        unsafe { *out = s.into_raw() };
        Ok(())
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fp_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: created by CString::into_raw in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread; empty if nothing failed yet.
#[no_mangle]
pub extern "C" fn fp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn fp_status_name(status: FpStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        FpStatus::Ok => b"ok\0",
        FpStatus::NullPointer => b"null pointer\0",
        FpStatus::InvalidUtf8 => b"invalid UTF-8\0",
        FpStatus::Parse => b"parse error\0",
        FpStatus::NotFano => b"not a Fano polygon\0",
        FpStatus::NoMutation => b"no mutation at this edge\0",
        FpStatus::BadInput => b"bad input\0",
        FpStatus::Overflow => b"value exceeds 64 bits\0",
        FpStatus::CrossCheck => b"internal cross-check failed\0",
        FpStatus::Internal => b"internal error\0",
    };
    s.as_ptr().cast()
}
