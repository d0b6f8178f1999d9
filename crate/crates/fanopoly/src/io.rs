//! Polygon interchange formats.
//!
//! A polygon is written as `{"vertices": [[x, y], ...]}`. Readers also accept a
//! bare `[[x, y], ...]` array and the compact text form `x,y;x,y;...`.
//! Coordinates that do not fit in 64 bits are written as decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serializer;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{canonical, edge_data, make_polygon, FanoPolygon, IntVec2, Rat};
use crate::mutations::{is_minimal, t_sublattice_invariant};
use crate::quivers::quiver_of;
use crate::singularities::{classify_cone, degree, hilbert_window, singularity_content, SingularityContent};

pub(crate) fn ser_rats<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

pub(crate) fn ser_rat<S: Serializer>(q: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(v.to_string()),
    }
}

/// Exact rational as JSON: an integer when integral, otherwise the string `"p/q"`.
pub fn rat_value(q: &Rat) -> Value {
    if q.is_integer() {
        int_value(q.numer())
    } else {
        Value::String(q.to_string())
    }
}

pub fn vertices_value(p: &FanoPolygon) -> Value {
    Value::Array(p.vertices().iter().map(|v| json!([int_value(&v.x), int_value(&v.y)])).collect())
}

/// `{"vertices": ...}` of the canonical form, or of `p` itself when `raw`.
pub fn polygon_value(p: &FanoPolygon, raw: bool) -> Value {
    if raw {
        json!({ "vertices": vertices_value(p) })
    } else {
        json!({ "vertices": vertices_value(&canonical(p)) })
    }
}

pub fn content_value(sc: &SingularityContent) -> Value {
    json!({
        "n": int_value(&sc.n),
        "basket": sc.basket.iter().map(|s| s.text()).collect::<Vec<_>>(),
    })
}

/// Full invariant report for one polygon. Edge data refers to the printed
/// coordinates (canonical unless `raw`); the Hilbert window is checked
/// against a direct lattice point count.
pub fn analysis_value(p: &FanoPolygon, raw: bool, hilbert_degree: usize) -> Result<Value> {
    let shown = if raw { p.clone() } else { canonical(p) };
    let edges: Vec<Value> = edge_data(&shown)
        .iter()
        .map(|e| {
            let sigma = classify_cone(&e.start, &e.end).expect("edges of a Fano polygon span proper cones");
            json!({
                "start": [int_value(&e.start.x), int_value(&e.start.y)],
                "end": [int_value(&e.end.x), int_value(&e.end.y)],
                "normal": [int_value(&e.w.x), int_value(&e.w.y)],
                "height": int_value(&e.r),
                "width": int_value(&e.k),
                "t_cones": int_value(&e.t_cones()),
                "singularity": sigma.text(),
            })
        })
        .collect();
    let hilbert = hilbert_window(&shown, hilbert_degree)?;
    let sub = t_sublattice_invariant(&shown);
    let quiver = quiver_of(&shown).ok().map(|q| q.to_json());
    Ok(json!({
        "vertices": vertices_value(&shown),
        "edges": edges,
        "content": content_value(&singularity_content(&shown)),
        "degree": rat_value(&degree(&shown)),
        "hilbert": hilbert.coefficients.iter().map(rat_value).collect::<Vec<_>>(),
        "divisors": [int_value(&sub.d1), int_value(&sub.d2)],
        "minimal": is_minimal(&shown),
        "quiver": quiver,
    }))
}

fn int_of(v: &Value, at: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("{at}: expected an integer, got {n}"))),
        Value::String(s) => s.trim().parse().map_err(|_| Error::Parse(format!("{at}: expected an integer, got {s:?}"))),
        other => Err(Error::Parse(format!("{at}: expected an integer, got {other}"))),
    }
}

/// Points from a JSON array of pairs.
pub fn points_from_value(v: &Value) -> Result<Vec<IntVec2>> {
    let arr = match v {
        Value::Array(a) => a,
        Value::Object(o) => match o.get("vertices") {
            Some(Value::Array(a)) => a,
            _ => return Err(Error::Parse("expected an object with a \"vertices\" array".into())),
        },
        _ => return Err(Error::Parse("expected a vertex array or {\"vertices\": [...]}".into())),
    };
    arr.iter()
        .enumerate()
        .map(|(i, pt)| match pt {
            Value::Array(xy) if xy.len() == 2 => Ok(IntVec2::from_big(
                int_of(&xy[0], &format!("vertex {i}, x"))?,
                int_of(&xy[1], &format!("vertex {i}, y"))?,
            )),
            other => Err(Error::Parse(format!("vertex {i}: expected [x, y], got {other}"))),
        })
        .collect()
}

fn points_from_compact(s: &str) -> Result<Vec<IntVec2>> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(i, t)| {
            let mut parts = t.split(',');
            let mut next = |name: &str| -> Result<BigInt> {
                let raw = parts.next().ok_or_else(|| Error::Parse(format!("vertex {i} ({t:?}): missing {name}")))?;
                raw.trim().parse().map_err(|_| Error::Parse(format!("vertex {i} ({t:?}): bad {name} {raw:?}")))
            };
            let x = next("x")?;
            let y = next("y")?;
            if parts.next().is_some() {
                return Err(Error::Parse(format!("vertex {i} ({t:?}): more than two coordinates")));
            }
            Ok(IntVec2::from_big(x, y))
        })
        .collect()
}

/// Points from any accepted text form.
pub fn parse_points(text: &str) -> Result<Vec<IntVec2>> {
    let t = text.trim();
    if t.starts_with('[') || t.starts_with('{') {
        let v: Value = serde_json::from_str(t)
            .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        points_from_value(&v)
    } else {
        points_from_compact(t)
    }
}

/// A Fano polygon (convex hull of the given points) from any accepted text form.
pub fn parse_polygon(text: &str) -> Result<FanoPolygon> {
    make_polygon(&parse_points(text)?)
}

/// A list of polygons: a JSON array of polygons, an object with a `"polygons"`
/// array, or one compact polygon per line.
pub fn parse_polygon_list(text: &str) -> Result<Vec<FanoPolygon>> {
    let t = text.trim();
    if t.starts_with('[') || t.starts_with('{') {
        let v: Value = serde_json::from_str(t)
            .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        let items = match &v {
            Value::Object(o) if o.contains_key("polygons") => match &o["polygons"] {
                Value::Array(a) => a.clone(),
                _ => return Err(Error::Parse("\"polygons\" must be an array".into())),
            },
            Value::Object(o) if o.contains_key("rows") => match &o["rows"] {
                Value::Array(a) => a.clone(),
                _ => return Err(Error::Parse("\"rows\" must be an array".into())),
            },
            Value::Array(a) if a.first().is_some_and(|x| x.is_object() || is_point_list(x)) => a.clone(),
            _ => vec![v.clone()],
        };
        items
            .iter()
            .enumerate()
            .map(|(i, item)| {
                make_polygon(&points_from_value(item).map_err(|e| Error::Parse(format!("polygon {i}: {e}")))?)
            })
            .collect()
    } else {
        t.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .enumerate()
            .map(|(i, l)| parse_polygon(l).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1))))
            .collect()
    }
}

fn is_point_list(v: &Value) -> bool {
    matches!(v, Value::Array(a) if a.first().is_some_and(|p| p.is_array()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms_agree() {
        let a = parse_polygon("[[1,0],[0,1],[-1,-3]]").unwrap();
        let b = parse_polygon(r#"{"vertices": [[0,1],[-1,-3],[1,0]]}"#).unwrap();
        let c = parse_polygon("1,0; 0,1; -1,-3").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn big_coordinates_as_strings() {
        let p = parse_polygon(r#"[["1","0"],[0,1],["-1","-3"]]"#).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(int_value(&"123456789012345678901234567890".parse().unwrap()), json!("123456789012345678901234567890"));
    }

    #[test]
    fn diagnostics_name_the_vertex() {
        let e = parse_polygon("[[1,0],[0,1],[-1]]").unwrap_err().to_string();
        assert!(e.contains("vertex 2"), "{e}");
        let e = parse_polygon("1,0;0,x;-1,-1").unwrap_err().to_string();
        assert!(e.contains("vertex 1"), "{e}");
    }

    #[test]
    fn round_trip_through_json() {
        let p = parse_polygon("[[1,1],[0,1],[-1,-2]]").unwrap();
        let text = polygon_value(&p, false).to_string();
        assert_eq!(canonical(&parse_polygon(&text).unwrap()), canonical(&p));
    }

    #[test]
    fn polygon_lists() {
        let list = parse_polygon_list("[[[1,0],[0,1],[-1,-1]], {\"vertices\": [[1,0],[0,1],[-1,0],[0,-1]]}]").unwrap();
        assert_eq!(list.len(), 2);
        let list = parse_polygon_list("1,0;0,1;-1,-1\n# comment\n1,0;0,1;-1,0;0,-1\n").unwrap();
        assert_eq!(list.len(), 2);
        let single = parse_polygon_list("[[1,0],[0,1],[-1,-1]]").unwrap();
        assert_eq!(single.len(), 1);
    }
}
