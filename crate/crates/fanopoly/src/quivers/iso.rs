use std::collections::HashMap;

use super::quiver::{mutate_quiver, Quiver};
use crate::error::{Error, Result};

/// Per-vertex signature invariant under relabelling: sorted row entries.
fn signatures(q: &Quiver) -> Vec<Vec<i64>> {
    q.b.iter()
        .map(|row| {
            let mut r = row.clone();
            r.sort_unstable();
            r
        })
        .collect()
}

/// Relabelling-invariant summary of a quiver, used to bucket candidates.
pub fn quiver_key(q: &Quiver) -> Vec<Vec<i64>> {
    let mut s = signatures(q);
    s.sort();
    s
}

/// True iff some vertex permutation carries `q1` to `q2`.
pub fn quivers_isomorphic(q1: &Quiver, q2: &Quiver) -> Result<bool> {
    if q1.n() != q2.n() {
        return Err(Error::SizeMismatch(q1.n(), q2.n()));
    }
    Ok(find_isomorphism(q1, q2).is_some())
}

/// A permutation `perm` with `q2.b[perm[i]][perm[j]] = q1.b[i][j]`, if any.
pub fn find_isomorphism(q1: &Quiver, q2: &Quiver) -> Option<Vec<usize>> {
    let n = q1.n();
    if n != q2.n() {
        return None;
    }
    let (s1, s2) = (signatures(q1), signatures(q2));
    let mut a = s1.clone();
    let mut b = s2.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    // Assign the most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    let mut freq: HashMap<&Vec<i64>, usize> = HashMap::new();
    for s in &s1 {
        *freq.entry(s).or_default() += 1;
    }
    order.sort_by_key(|&i| (freq[&s1[i]], i));
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(0, &order, q1, q2, &s1, &s2, &mut perm, &mut used) {
        Some(perm)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    q1: &Quiver,
    q2: &Quiver,
    s1: &[Vec<i64>],
    s2: &[Vec<i64>],
    perm: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let i = order[depth];
    for j in 0..q2.n() {
        if used[j] || s1[i] != s2[j] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&k| {
            let pk = perm[k];
            q1.b[i][k] == q2.b[j][pk] && q1.b[k][i] == q2.b[pk][j]
        });
        if !consistent {
            continue;
        }
        perm[i] = j;
        used[j] = true;
        if extend(depth + 1, order, q1, q2, s1, s2, perm, used) {
            return true;
        }
        used[j] = false;
        perm[i] = usize::MAX;
    }
    false
}

/// Quivers reachable from `q` by mutation, up to isomorphism, stopping at `cap`
/// classes. Returns the classes found and whether the cap cut the search short.
pub fn quiver_orbit(q: &Quiver, cap: usize) -> (Vec<Quiver>, bool) {
    let start = Quiver { b: q.b.clone(), labels: Vec::new() };
    let mut buckets: HashMap<Vec<Vec<i64>>, Vec<usize>> = HashMap::new();
    let mut found: Vec<Quiver> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    buckets.entry(quiver_key(&start)).or_default().push(0);
    found.push(start.clone());
    queue.push_back(0usize);
    let mut truncated = false;
    while let Some(idx) = queue.pop_front() {
        let cur = found[idx].clone();
        for v in 0..cur.n() {
            let next = mutate_quiver(&cur, v).expect("vertex in range");
            let key = quiver_key(&next);
            let seen = buckets
                .get(&key)
                .is_some_and(|ids| ids.iter().any(|&k| find_isomorphism(&found[k], &next).is_some()));
            if seen {
                continue;
            }
            if found.len() >= cap {
                truncated = true;
                continue;
            }
            buckets.entry(key).or_default().push(found.len());
            queue.push_back(found.len());
            found.push(next);
        }
    }
    (found, truncated)
}

/// Verdict of comparing two quivers' mutation classes within a budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuiverSeparation {
    /// One quiver lies in the other's mutation class.
    Equivalent,
    /// A complete orbit of one quiver misses the other.
    Distinct,
    /// Neither conclusion was reached within the cap.
    Unknown,
}

pub fn separate_quivers(q1: &Quiver, q2: &Quiver, cap: usize) -> QuiverSeparation {
    if q1.n() != q2.n() {
        return QuiverSeparation::Distinct;
    }
    for (a, b) in [(q1, q2), (q2, q1)] {
        let (orbit, truncated) = quiver_orbit(a, cap);
        if orbit.iter().any(|x| find_isomorphism(x, b).is_some()) {
            return QuiverSeparation::Equivalent;
        }
        if !truncated {
            return QuiverSeparation::Distinct;
        }
    }
    QuiverSeparation::Unknown
}
