use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::fmt;

use crate::lattice::{edge_data, FanoPolygon, IntVec2};

/// Elementary divisors `(d1, d2)` of a sublattice of `M`; `d2 = 0` means rank one
/// and `(0, 0)` the zero sublattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SublatticeInvariant {
    pub d1: BigInt,
    pub d2: BigInt,
}

impl SublatticeInvariant {
    pub fn rank(&self) -> usize {
        if self.d1.is_zero() {
            0
        } else if self.d2.is_zero() {
            1
        } else {
            2
        }
    }

    /// Index in `M`, when the sublattice has full rank.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == 2).then(|| &self.d1 * &self.d2)
    }
}

impl fmt::Display for SublatticeInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d1, self.d2)
    }
}

/// Elementary divisors of the lattice generated by `gens`: `d1` is the gcd of
/// all coordinates and `d1·d2` the gcd of all 2×2 minors.
pub fn elementary_divisors(gens: &[IntVec2]) -> SublatticeInvariant {
    let mut d1 = BigInt::zero();
    for g in gens {
        d1 = d1.gcd(&g.x).gcd(&g.y);
    }
    let mut minors = BigInt::zero();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            minors = minors.gcd(&gens[i].det(&gens[j]));
        }
    }
    let d2 = if d1.is_zero() { BigInt::zero() } else { minors.abs() / &d1 };
    SublatticeInvariant { d1, d2 }
}

/// Elementary divisors of the sublattice of `M` generated by the inner normals
/// of the edges carrying at least one primitive T-cone.
pub fn t_sublattice_invariant(p: &FanoPolygon) -> SublatticeInvariant {
    let gens: Vec<IntVec2> = edge_data(p).into_iter().filter(|e| e.admits_mutation()).map(|e| e.w).collect();
    elementary_divisors(&gens)
}

/// Same divisors for the sublattice generated by every inner normal.
pub fn all_normals_invariant(p: &FanoPolygon) -> SublatticeInvariant {
    let gens: Vec<IntVec2> = edge_data(p).into_iter().map(|e| e.w).collect();
    elementary_divisors(&gens)
}
