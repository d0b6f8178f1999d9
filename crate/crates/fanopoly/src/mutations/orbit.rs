use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::fmt::Write as _;

use super::mutate::{mutate_raw, mutation_spec};
use super::sublattice::t_sublattice_invariant;
use crate::error::{Error, Result};
use crate::io::{int_value, vertices_value};
use crate::lattice::{canonical, counts, normalized_dual_volume, FanoPolygon, IntVec2};
use crate::singularities::singularity_content;

/// A canonical neighbor together with every edge normal realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Neighbor {
    pub polygon: FanoPolygon,
    pub normals: Vec<IntVec2>,
}

/// One canonical neighbor per admissible edge of `p`, deduplicated; normals
/// are in the coordinates of `p`. Ordered by first realizing edge.
pub fn neighbors(p: &FanoPolygon) -> Vec<Neighbor> {
    let mut out: Vec<Neighbor> = Vec::new();
    for i in 0..p.len() {
        let Ok(spec) = mutation_spec(p, i) else { continue };
        let q = canonical(&mutate_raw(p, &spec).expect("admissible mutation of a Fano polygon is Fano"));
        match out.iter_mut().find(|nb| nb.polygon == q) {
            Some(nb) => nb.normals.push(spec.w),
            None => out.push(Neighbor { polygon: q, normals: vec![spec.w] }),
        }
    }
    out
}

/// Limits for orbit exploration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitBudget {
    pub max_nodes: usize,
    /// Polygons with more boundary points than this are not added. `None`
    /// means the largest input boundary count plus 10.
    pub max_boundary: Option<BigInt>,
    pub max_depth: Option<usize>,
    /// Worker threads used to expand each breadth-first level.
    pub jobs: usize,
}

impl Default for OrbitBudget {
    fn default() -> Self {
        OrbitBudget { max_nodes: 10_000, max_boundary: None, max_depth: None, jobs: 1 }
    }
}

impl OrbitBudget {
    pub fn with_depth(depth: usize) -> Self {
        OrbitBudget { max_depth: Some(depth), ..Self::default() }
    }
}

/// Canonical polygons joined by mutations. Nodes are sorted; each edge
/// `(i, j, w)` has `i < j` and `w` an inner normal of node `i` realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationGraph {
    pub nodes: Vec<FanoPolygon>,
    pub edges: Vec<(usize, usize, IntVec2)>,
    /// Breadth-first distance from the nearest start polygon.
    pub depth: Vec<usize>,
    pub truncated: bool,
}

impl MutationGraph {
    pub fn contains(&self, p: &FanoPolygon) -> bool {
        self.nodes.binary_search(&canonical(p)).is_ok()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nodes": self.nodes.iter().map(vertices_value).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(i, j, w)| json!({
                "source": i,
                "target": j,
                "w": [int_value(&w.x), int_value(&w.y)],
            })).collect::<Vec<_>>(),
            "truncated": self.truncated,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph mutations {\n");
        for (i, p) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{p}\"];");
        }
        for (i, j, w) in &self.edges {
            let _ = writeln!(s, "  n{i} -- n{j} [label=\"{w}\"];");
        }
        if self.truncated {
            s.push_str("  // truncated\n");
        }
        s.push_str("}\n");
        s
    }
}

#[derive(PartialEq)]
struct Fingerprint {
    n: BigInt,
    basket: Vec<crate::singularities::CyclicQuotientSingularity>,
    volume: crate::lattice::Rat,
    divisors: super::sublattice::SublatticeInvariant,
}

fn fingerprint(p: &FanoPolygon) -> Fingerprint {
    let sc = singularity_content(p);
    let basket = sc.basket_sorted();
    Fingerprint { n: sc.n, basket, volume: normalized_dual_volume(p), divisors: t_sublattice_invariant(p) }
}

fn expand(frontier: &[FanoPolygon], jobs: usize) -> Vec<Vec<Neighbor>> {
    if jobs <= 1 || frontier.len() < 2 {
        return frontier.iter().map(neighbors).collect();
    }
    let chunk = frontier.len().div_ceil(jobs);
    std::thread::scope(|s| {
        let handles: Vec<_> = frontier
            .chunks(chunk)
            .map(|c| s.spawn(move || c.iter().map(neighbors).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("orbit worker panicked")).collect()
    })
}

/// Breadth-first closure of `starts` under mutation, deduplicated by canonical form.
///
/// Every inserted polygon is checked to share singularity content, dual volume
/// and T-sublattice divisors with the first start polygon.
pub fn orbit_of(starts: &[FanoPolygon], budget: &OrbitBudget) -> Result<MutationGraph> {
    let starts: Vec<FanoPolygon> = starts.iter().map(canonical).collect();
    let first = starts.first().ok_or_else(|| Error::BadInput("orbit needs a start polygon".into()))?;
    let reference = fingerprint(first);
    let max_boundary = budget
        .max_boundary
        .clone()
        .unwrap_or_else(|| starts.iter().map(|p| counts(p).0).max().expect("nonempty") + BigInt::from(10));

    let mut index: HashMap<FanoPolygon, usize> = HashMap::new();
    let mut nodes: Vec<FanoPolygon> = Vec::new();
    let mut depth: Vec<usize> = Vec::new();
    let mut labels: HashMap<(usize, usize), IntVec2> = HashMap::new();
    let mut truncated = false;

    for s in &starts {
        if index.contains_key(s) {
            continue;
        }
        if fingerprint(s) != reference {
            return Err(Error::CrossCheck(format!("start polygons {first} and {s} have different invariants")));
        }
        index.insert(s.clone(), nodes.len());
        nodes.push(s.clone());
        depth.push(0);
    }

    let mut frontier: Vec<usize> = (0..nodes.len()).collect();
    let mut level = 0usize;
    while !frontier.is_empty() {
        let polys: Vec<FanoPolygon> = frontier.iter().map(|&i| nodes[i].clone()).collect();
        let expanded = expand(&polys, budget.jobs);
        let at_depth_limit = budget.max_depth.is_some_and(|d| level >= d);
        let mut next = Vec::new();
        for (&src, nbs) in frontier.iter().zip(expanded) {
            for nb in nbs {
                let dst = match index.get(&nb.polygon) {
                    Some(&j) => j,
                    None => {
                        if at_depth_limit || counts(&nb.polygon).0 > max_boundary {
                            truncated = true;
                            continue;
                        }
                        if nodes.len() >= budget.max_nodes {
                            truncated = true;
                            continue;
                        }
                        if fingerprint(&nb.polygon) != reference {
                            return Err(Error::CrossCheck(format!(
                                "mutation of {} produced {} with different invariants",
                                nodes[src], nb.polygon
                            )));
                        }
                        let j = nodes.len();
                        index.insert(nb.polygon.clone(), j);
                        nodes.push(nb.polygon.clone());
                        depth.push(level + 1);
                        next.push(j);
                        j
                    }
                };
                if dst != src {
                    labels.entry((src, dst)).or_insert_with(|| nb.normals[0].clone());
                }
            }
        }
        frontier = next;
        level += 1;
    }

    // Sort nodes canonically; each edge keeps a label from its smaller endpoint when one was seen.
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&a, &b| nodes[a].cmp(&nodes[b]));
    let mut pos = vec![0usize; nodes.len()];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let sorted_nodes: Vec<FanoPolygon> = order.iter().map(|&i| nodes[i].clone()).collect();
    let sorted_depth: Vec<usize> = order.iter().map(|&i| depth[i]).collect();
    let mut by_pair: HashMap<(usize, usize), (bool, IntVec2)> = HashMap::new();
    for ((src, dst), w) in labels {
        let (a, b) = (pos[src], pos[dst]);
        let key = (a.min(b), a.max(b));
        let from_smaller = a < b;
        match by_pair.get(&key) {
            Some((true, _)) => {}
            Some((false, _)) if !from_smaller => {}
            _ => {
                by_pair.insert(key, (from_smaller, w));
            }
        }
    }
    let mut sorted_edges: Vec<(usize, usize, IntVec2)> =
        by_pair.into_iter().map(|((a, b), (_, w))| (a, b, w)).collect();
    sorted_edges.sort();
    Ok(MutationGraph { nodes: sorted_nodes, edges: sorted_edges, depth: sorted_depth, truncated })
}

/// Orbit of a single polygon.
pub fn orbit(p: &FanoPolygon, budget: &OrbitBudget) -> Result<MutationGraph> {
    orbit_of(std::slice::from_ref(p), budget)
}
