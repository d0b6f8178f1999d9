use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::io::{content_value, rat_value, vertices_value};
use crate::lattice::{canonical, Rat};
use crate::lattice::FanoPolygon;
use crate::mutations::{orbit, t_sublattice_invariant, OrbitBudget, SublatticeInvariant};
use crate::quivers::{all_even, quiver_of, separate_quivers, QuiverSeparation};
use crate::singularities::{degree, hilbert_window_unchecked, singularity_content, CyclicQuotientSingularity};

/// Hilbert coefficients compared when fingerprinting.
pub const FINGERPRINT_HILBERT_DEGREE: usize = 8;

/// Mutation invariants of a polygon. Polygons with different fingerprints are
/// not mutation-equivalent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fingerprint {
    pub n: BigInt,
    pub basket: Vec<CyclicQuotientSingularity>,
    pub degree: Rat,
    pub hilbert: Vec<Rat>,
    pub sublattice: SublatticeInvariant,
    /// `None` when the polygon has no T-cones.
    pub quiver_even: Option<bool>,
}

pub fn fingerprint(p: &FanoPolygon) -> Fingerprint {
    let sc = singularity_content(p);
    Fingerprint {
        n: sc.n.clone(),
        basket: sc.basket_sorted(),
        degree: degree(p),
        hilbert: hilbert_window_unchecked(p, FINGERPRINT_HILBERT_DEGREE).coefficients,
        sublattice: t_sublattice_invariant(p),
        quiver_even: quiver_of(p).ok().map(|q| all_even(&q)),
    }
}

impl Fingerprint {
    /// The first invariant on which `self` and `other` differ.
    pub fn differing(&self, other: &Fingerprint) -> Option<&'static str> {
        if self.n != other.n || self.basket != other.basket {
            Some("singularity content")
        } else if self.degree != other.degree {
            Some("degree")
        } else if self.hilbert != other.hilbert {
            Some("Hilbert series")
        } else if self.sublattice != other.sublattice {
            Some("T-sublattice")
        } else if self.quiver_even != other.quiver_even {
            Some("quiver parity")
        } else {
            None
        }
    }
}

/// Limits for [`partition_into_classes`].
#[derive(Clone, Debug)]
pub struct ClassBudget {
    /// Budget for each orbit search joining same-fingerprint polygons.
    pub orbit: OrbitBudget,
    /// Node cap for quiver mutation-class exploration.
    pub quiver_cap: usize,
}

impl Default for ClassBudget {
    fn default() -> Self {
        ClassBudget { orbit: OrbitBudget { max_nodes: 5_000, ..OrbitBudget::default() }, quiver_cap: 500 }
    }
}

/// Why two classes are known to be different.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctPair {
    pub a: usize,
    pub b: usize,
    pub reason: String,
}

/// Result of partitioning polygons into mutation-equivalence classes.
///
/// `classes` lists the members of each class found by orbit search.
/// Every pair of classes is either in `distinct` (certified by an invariant)
/// or in `unresolved`.
#[derive(Clone, Debug)]
pub struct ClassReport {
    pub polygons: Vec<FanoPolygon>,
    pub fingerprints: Vec<Fingerprint>,
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub distinct: Vec<DistinctPair>,
    pub unresolved: Vec<(usize, usize)>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, i: usize) -> usize {
        let p = self.0[i];
        if p == i {
            return i;
        }
        let r = self.find(p);
        self.0[i] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Group `polys` into mutation-equivalence classes.
///
/// Polygons are joined when an orbit search from one reaches the other.
/// Classes are separated by fingerprint, or, when fingerprints agree, by
/// comparing quiver mutation classes; anything else is reported unresolved.
pub fn partition_into_classes(polys: &[FanoPolygon], budget: &ClassBudget) -> ClassReport {
    let mut polygons: Vec<FanoPolygon> = polys.iter().map(canonical).collect();
    polygons.sort();
    polygons.dedup();
    let fingerprints: Vec<Fingerprint> = polygons.iter().map(fingerprint).collect();

    let mut groups: BTreeMap<&Fingerprint, Vec<usize>> = BTreeMap::new();
    for (i, f) in fingerprints.iter().enumerate() {
        groups.entry(f).or_default().push(i);
    }

    let mut uf = UnionFind((0..polygons.len()).collect());
    let group_list: Vec<Vec<usize>> = groups.into_values().collect();
    let joins: Vec<Vec<(usize, usize)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = group_list
            .iter()
            .map(|members| {
                let polygons = &polygons;
                scope.spawn(move || join_group(polygons, members, &budget.orbit))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("orbit worker")).collect()
    });
    for (a, b) in joins.into_iter().flatten() {
        uf.union(a, b);
    }

    let mut root_to_class: BTreeMap<usize, usize> = BTreeMap::new();
    let mut class_of = vec![0; polygons.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..polygons.len() {
        let r = uf.find(i);
        let c = *root_to_class.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class_of[i] = c;
        classes[c].push(i);
    }

    let mut distinct = Vec::new();
    let mut unresolved = Vec::new();
    for a in 0..classes.len() {
        for b in a + 1..classes.len() {
            let (pa, pb) = (classes[a][0], classes[b][0]);
            if let Some(why) = fingerprints[pa].differing(&fingerprints[pb]) {
                distinct.push(DistinctPair { a, b, reason: why.to_string() });
                continue;
            }
            let verdict = match (quiver_of(&polygons[pa]), quiver_of(&polygons[pb])) {
                (Ok(qa), Ok(qb)) => separate_quivers(&qa, &qb, budget.quiver_cap),
                _ => QuiverSeparation::Unknown,
            };
            if verdict == QuiverSeparation::Distinct {
                distinct.push(DistinctPair { a, b, reason: "quiver mutation class".to_string() });
            } else {
                unresolved.push((a, b));
            }
        }
    }

    ClassReport { polygons, fingerprints, class_of, classes, distinct, unresolved }
}

/// Pairs of group members connected by mutation within the budget.
fn join_group(polygons: &[FanoPolygon], members: &[usize], budget: &OrbitBudget) -> Vec<(usize, usize)> {
    let mut joins = Vec::new();
    let mut reached = vec![false; members.len()];
    for (i, &m) in members.iter().enumerate() {
        if members.len() == 1 || reached[i] {
            continue;
        }
        let Ok(graph) = orbit(&polygons[m], budget) else { continue };
        for (j, &other) in members.iter().enumerate() {
            if j != i && graph.contains(&polygons[other]) {
                joins.push((m, other));
                reached[j] = true;
            }
        }
        if reached.iter().enumerate().all(|(k, &r)| r || k == i) {
            break;
        }
    }
    joins
}

impl ClassReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Canonical representative of each class: its smallest member.
    pub fn representatives(&self) -> Vec<&FanoPolygon> {
        self.classes.iter().map(|c| &self.polygons[c[0]]).collect()
    }

    /// One row per polygon: vertices, n, basket, degree, divisors, class id.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("vertices,n,basket,degree,divisors,class\n");
        for (i, p) in self.polygons.iter().enumerate() {
            let f = &self.fingerprints[i];
            let verts: Vec<String> = p.vertices().iter().map(|v| format!("({},{})", v.x, v.y)).collect();
            let basket: Vec<String> = f.basket.iter().map(|b| b.text()).collect();
            let _ = writeln!(
                s,
                "\"{}\",{},\"{}\",{},\"{}\",{}",
                verts.join(" "),
                f.n,
                basket.join(" "),
                f.degree,
                f.sublattice,
                self.class_of[i]
            );
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .polygons
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let f = &self.fingerprints[i];
                json!({
                    "vertices": vertices_value(p),
                    "content": content_value(&singularity_content(p)),
                    "degree": rat_value(&f.degree),
                    "divisors": [f.sublattice.d1.to_string(), f.sublattice.d2.to_string()],
                    "quiver_even": f.quiver_even,
                    "class": self.class_of[i],
                })
            })
            .collect();
        json!({
            "polygons": rows,
            "classes": self.classes,
            "distinct": self.distinct.iter().map(|d| json!({"a": d.a, "b": d.b, "reason": d.reason})).collect::<Vec<_>>(),
            "unresolved": self.unresolved,
        })
    }
}
