use std::ffi::{CStr, CString};
use std::ptr;

use fanopoly_ffi::*;

fn parse(text: &str) -> (FpStatus, *mut FpPolygon) {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { fp_polygon_parse(c.as_ptr(), &mut out) };
    (status, out)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(fp_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn degree_of_weighted_plane() {
    let (status, p) = parse("[[1,0],[0,1],[-1,-3]]");
    assert_eq!(status, FpStatus::Ok);
    let (mut num, mut den) = (0, 0);
    assert_eq!(unsafe { fp_polygon_degree(p, &mut num, &mut den) }, FpStatus::Ok);
    assert_eq!((num, den), (25, 3));
    let mut n = 0;
    assert_eq!(unsafe { fp_polygon_vertex_count(p, &mut n) }, FpStatus::Ok);
    assert_eq!(n, 3);
    let mut minimal = false;
    assert_eq!(unsafe { fp_polygon_is_minimal(p, &mut minimal) }, FpStatus::Ok);
    assert!(minimal);
    unsafe { fp_polygon_free(p) };
}

#[test]
fn mutation_round_trip() {
    let (status, p) = parse("1,0; 0,1; -1,0; 0,-1");
    assert_eq!(status, FpStatus::Ok, "{}", last_error());
    // try every edge; the inadmissible ones must say so
    let mut n = 0;
    assert_eq!(unsafe { fp_polygon_vertex_count(p, &mut n) }, FpStatus::Ok);
    let mut mutated = 0;
    for edge in 0..n {
        let mut q = ptr::null_mut();
        match unsafe { fp_polygon_mutate(p, edge, &mut q) } {
            FpStatus::Ok => {
                let (mut a, mut b) = (0, 0);
                unsafe { fp_polygon_degree(q, &mut a, &mut b) };
                // degree is a mutation invariant
                assert_eq!((a, b), (8, 1));
                let (mut x, mut y) = (0, 0);
                assert_eq!(unsafe { fp_polygon_vertex(q, 0, &mut x, &mut y) }, FpStatus::Ok);
                unsafe { fp_polygon_free(q) };
                mutated += 1;
            }
            FpStatus::NoMutation => assert!(!last_error().is_empty()),
            other => panic!("unexpected {other:?}: {}", last_error()),
        }
    }
    assert!(mutated > 0);
    unsafe { fp_polygon_free(p) };
}

#[test]
fn analysis_json() {
    let (_, p) = parse("[[1,0],[0,1],[-1,0],[0,-1]]");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { fp_polygon_analyze_json(p, 4, &mut s) }, FpStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    assert_eq!(v["degree"], 8);
    assert_eq!(v["hilbert"].as_array().unwrap().len(), 5);
    unsafe {
        fp_string_free(s);
        fp_polygon_free(p);
    }
}

#[test]
fn errors_are_reported() {
    let (status, p) = parse("[[2,0],[0,1],[-1,-1]]");
    assert_eq!(status, FpStatus::NotFano);
    assert!(p.is_null());
    assert!(last_error().contains("not a Fano polygon"));
    assert_eq!(parse("[[1,0],[0,").0, FpStatus::Parse);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { fp_polygon_parse(ptr::null(), &mut out) }, FpStatus::NullPointer);
    let mut n = 0;
    assert_eq!(unsafe { fp_polygon_vertex_count(ptr::null(), &mut n) }, FpStatus::NullPointer);
    let name = unsafe { CStr::from_ptr(fp_status_name(FpStatus::NotFano)) };
    assert_eq!(name.to_str().unwrap(), "not a Fano polygon");
    unsafe {
        fp_polygon_free(ptr::null_mut());
        fp_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/fanopoly.h")).unwrap();
    for name in [
        "fp_polygon_parse",
        "fp_polygon_free",
        "fp_polygon_degree",
        "fp_polygon_mutate",
        "fp_polygon_analyze_json",
        "fp_string_free",
        "fp_last_error",
        "FP_STATUS_NOT_FANO",
        "typedef struct FpPolygon FpPolygon",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = std::process::Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(cc.status.success());
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let dir = std::env::temp_dir().join(format!("fanopoly-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use.c");
    std::fs::write(
        &src,
        "#include <fanopoly.h>\nint main(void) { FpPolygon *p = 0; FpStatus s = fp_polygon_parse(\"[[1,0],[0,1],[-1,-1]]\", &p); fp_polygon_free(p); return s == FP_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let out = std::process::Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", include]).arg(&src).output().unwrap();
    let _ = std::fs::remove_dir_all(&dir);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
