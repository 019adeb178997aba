//! Vertex-wise linear algebra for direct sums of interval modules.
//!
//! Used to decompose the cokernel of a map `X -> V_1 + ... + V_r` built from
//! canonical maps. Multiplicities of interval summands are recovered from the
//! ranks `r(a, b)` of the path maps `C_a -> C_b` by inclusion-exclusion.

use crate::algebra::{hom_dim, AlgebraSpec, Interval, Vertex};

const PRIME: i128 = (1 << 61) - 1;

fn inverse(a: i128) -> i128 {
    let (mut result, mut base, mut e) = (1i128, a.rem_euclid(PRIME), PRIME - 2);
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % PRIME;
        }
        base = base * base % PRIME;
        e >>= 1;
    }
    result
}

/// Rank of a small integer matrix given as columns.
///
/// Elimination runs modulo the Mersenne prime `2^61 - 1`; the matrices here
/// have tiny entries, so every nonzero minor is far below the modulus and the
/// result equals the rank over the rationals.
pub fn rank(columns: &[Vec<i64>]) -> usize {
    let Some(rows) = columns.first().map(Vec::len) else {
        return 0;
    };
    let cols = columns.len();
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|r| {
            columns
                .iter()
                .map(|c| i128::from(c[r]).rem_euclid(PRIME))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inverse(m[rank][col]);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail {
            let factor = row[col] * inv % PRIME;
            if factor == 0 {
                continue;
            }
            for (x, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (*x - factor * p).rem_euclid(PRIME);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// The canonical map `source -> target_1 + ... + target_r`, one component per target.
#[derive(Clone, Debug)]
pub struct SumMap {
    pub source: Interval,
    pub targets: Vec<Interval>,
}

impl SumMap {
    /// Coordinates of the target at vertex `v`: the targets containing `v`.
    fn coords(&self, v: Vertex) -> Vec<usize> {
        (0..self.targets.len())
            .filter(|&j| self.targets[j].contains(v))
            .collect()
    }

    /// Image of the map at vertex `v`, as columns over the target coordinates.
    fn image_at(&self, v: Vertex) -> Vec<Vec<i64>> {
        if !self.source.contains(v) {
            return Vec::new();
        }
        let col = self
            .coords(v)
            .iter()
            .map(|&j| {
                i64::from(hom_dim(self.source, self.targets[j]) == 1 && v <= self.targets[j].socle)
            })
            .collect();
        vec![col]
    }

    /// Whether the map is injective at every vertex.
    pub fn is_injective(&self) -> bool {
        self.source.vertices().all(|v| rank(&self.image_at(v)) == 1)
    }

    /// Rank of the path map `C_a -> C_b` on the cokernel, for `a <= b`.
    fn cokernel_rank(&self, a: Vertex, b: Vertex) -> usize {
        let ca = self.coords(a);
        let cb = self.coords(b);
        let kb = self.image_at(b);
        let path: Vec<Vec<i64>> = ca
            .iter()
            .map(|&j| {
                cb.iter()
                    .map(|&i| i64::from(i == j && self.targets[j].contains(b)))
                    .collect()
            })
            .collect();
        let mut joint = path;
        joint.extend(kb.iter().cloned());
        let joint: Vec<Vec<i64>> = joint.into_iter().filter(|c| !c.is_empty()).collect();
        rank(&joint) - rank(&kb.into_iter().filter(|c| !c.is_empty()).collect::<Vec<_>>())
    }

    /// Interval summands of the cokernel with multiplicities.
    pub fn cokernel(&self, alg: &AlgebraSpec) -> Vec<(Interval, usize)> {
        let n = alg.n();
        let r = |a: Vertex, b: Vertex| -> i64 {
            if a == 0 || b > n || a > b {
                0
            } else {
                self.cokernel_rank(a, b) as i64
            }
        };
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a..=n {
                let m = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
                debug_assert!(m >= 0);
                if m > 0 {
                    out.push((Interval::new(a, b), m as usize));
                }
            }
        }
        out
    }
}
