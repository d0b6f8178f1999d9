use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Write as _;

use super::iso::quivers_isomorphic;
use crate::error::{Error, Result};
use crate::lattice::{edge_data, FanoPolygon, IntVec2};
use crate::mutations::{mutate_raw, mutation_spec};

/// A quiver as a skew-symmetric exchange matrix: `b[i][j] > 0` counts arrows `i → j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quiver {
    pub b: Vec<Vec<i64>>,
    /// Edge index of the polygon edge owning each vertex, when built from a polygon.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<usize>,
}

impl Quiver {
    pub fn new(b: Vec<Vec<i64>>) -> Result<Self> {
        let n = b.len();
        for (i, row) in b.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadInput(format!("row {i} has length {}, expected {n}", row.len())));
            }
            for j in 0..n {
                if row[j] != -b[j][i] {
                    return Err(Error::BadInput(format!("matrix is not skew-symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Quiver { b, labels: Vec::new() })
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n(), "B": self.b })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph quiver {\n");
        for i in 0..self.n() {
            match self.labels.get(i) {
                Some(e) => {
                    let _ = writeln!(s, "  v{i} [label=\"{i} (edge {e})\"];");
                }
                None => {
                    let _ = writeln!(s, "  v{i};");
                }
            }
        }
        for i in 0..self.n() {
            for j in 0..self.n() {
                if self.b[i][j] > 0 {
                    let _ = writeln!(s, "  v{i} -> v{j} [label=\"{}\"];", self.b[i][j]);
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Quiver of a polygon: one vertex per primitive T-cone, in edge order, with
/// `b[i][j] = w_i ∧ w_j` for the inner normals of the owning edges.
pub fn quiver_of(p: &FanoPolygon) -> Result<Quiver> {
    let mut normals: Vec<IntVec2> = Vec::new();
    let mut labels = Vec::new();
    for e in edge_data(p) {
        let t = e.t_cones().to_usize().expect("T-cone count fits in usize");
        for _ in 0..t {
            normals.push(e.w.clone());
            labels.push(e.index);
        }
    }
    if normals.is_empty() {
        return Err(Error::NoTCones);
    }
    let n = normals.len();
    let mut b = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            b[i][j] = normals[i]
                .det(&normals[j])
                .to_i64()
                .ok_or_else(|| Error::Unsupported("quiver entry exceeds 64 bits".into()))?;
        }
    }
    Ok(Quiver { b, labels })
}

/// Matrix mutation at vertex `v`.
pub fn mutate_quiver(q: &Quiver, v: usize) -> Result<Quiver> {
    let n = q.n();
    if v >= n {
        return Err(Error::BadInput(format!("vertex {v} out of range for a quiver on {n} vertices")));
    }
    let b = &q.b;
    let mut out = b.clone();
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == v || j == v {
                -b[i][j]
            } else {
                b[i][j] + (b[i][v].abs() * b[v][j] + b[i][v] * b[v][j].abs()) / 2
            };
        }
    }
    Ok(Quiver { b: out, labels: q.labels.clone() })
}

/// Mutation at `v` by arrow surgery: compose paths through `v`, reverse the
/// arrows at `v`, then cancel opposite arrows pairwise.
pub fn mutate_quiver_by_arrows(q: &Quiver, v: usize) -> Result<Quiver> {
    let n = q.n();
    if v >= n {
        return Err(Error::BadInput(format!("vertex {v} out of range for a quiver on {n} vertices")));
    }
    let mut a: Vec<Vec<i64>> = q.b.iter().map(|row| row.iter().map(|&x| x.max(0)).collect()).collect();
    let before = a.clone();
    for i in 0..n {
        for j in 0..n {
            if i != v && j != v && i != j {
                a[i][j] += before[i][v] * before[v][j];
            }
        }
    }
    for i in 0..n {
        let (x, y) = (a[i][v], a[v][i]);
        a[i][v] = y;
        a[v][i] = x;
    }
    for i in 0..n {
        for j in i + 1..n {
            let c = a[i][j].min(a[j][i]);
            a[i][j] -= c;
            a[j][i] -= c;
        }
    }
    let b = (0..n).map(|i| (0..n).map(|j| a[i][j] - a[j][i]).collect()).collect();
    Ok(Quiver { b, labels: q.labels.clone() })
}

/// True iff every entry is even.
pub fn all_even(q: &Quiver) -> bool {
    q.b.iter().flatten().all(|x| x % 2 == 0)
}

/// Check that mutating `p` at the edge owning quiver vertex `v` yields the
/// quiver mutation of `quiver_of(p)` at `v`, up to isomorphism.
pub fn quiver_commutes_check(p: &FanoPolygon, v: usize) -> Result<bool> {
    let q = quiver_of(p)?;
    let edge = *q.labels.get(v).ok_or_else(|| Error::BadInput(format!("quiver has no vertex {v}")))?;
    let spec = mutation_spec(p, edge)?;
    let p2 = mutate_raw(p, &spec)?;
    let lhs = quiver_of(&p2)?;
    let rhs = mutate_quiver(&q, v)?;
    quivers_isomorphic(&lhs, &rhs)
}
