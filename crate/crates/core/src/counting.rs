//! Catalan numbers, the recursive tilting count, the partition of the
//! tilting set by the last summands, and the nodal qhs count.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, BasicModule, Interval, Vertex};
use crate::error::{Error, Result};
use crate::homological::homdims;
use crate::qhs::{enumerate_qhs, order_from_tilting, standard_costandard, QhsStrategy};

pub fn catalan(m: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..m as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Memoized recursive tilting counts.
#[derive(Default)]
pub struct CountTable {
    memo: HashMap<AlgebraSpec, u128>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Peels off the last run of relations `[l - k, l]` and the free tail of length `m = n - l`:
    /// `|tilt| = C_m |tilt A'| + (C_{m+1} + (k - 1) C_m) |tilt A|`, where `A` lives on
    /// `[1, l - k - 1]` and `A'` on `[1, l - k]`, both keeping the earlier relations.
    pub fn count(&mut self, alg: &AlgebraSpec) -> u128 {
        if let Some(&c) = self.memo.get(alg) {
            return c;
        }
        let n = alg.n();
        let rel = alg.relations();
        let value = match rel.last() {
            None => catalan(n),
            Some(&l) => {
                let m = n - l;
                let mut first = rel.len() - 1;
                while first > 0 && rel[first - 1] + 1 == rel[first] {
                    first -= 1;
                }
                let k = l - rel[first];
                let j = rel[first] - 1;
                let earlier = &rel[..first];
                let base = AlgebraSpec::new(j, earlier.iter().copied())
                    .expect("prefix relations stay in range");
                let extended = AlgebraSpec::new(j + 1, earlier.iter().copied())
                    .expect("prefix relations stay in range");
                let (cm, cm1) = (catalan(m) as i128, catalan(m + 1) as i128);
                let t = self.count(&base) as i128;
                let te = self.count(&extended) as i128;
                let total = cm * te + (cm1 + (k as i128 - 1) * cm) * t;
                u128::try_from(total).expect("counts are positive")
            }
        };
        self.memo.insert(alg.clone(), value);
        value
    }
}

pub fn count_tilt_recursive(alg: &AlgebraSpec) -> u128 {
    CountTable::new().count(alg)
}

/// The fiber index `i` of `t` in the partition of the tilting set.
///
/// `i = n` when `S(n)` is a summand; otherwise `i = n - 1` when `n - 1` is a
/// relation; otherwise the unique `i` with `M[i, n]` and `M[i, n - 1]` both
/// summands. The result is checked against `Nabla(n) = P(i)` for the
/// associated structure.
pub fn classify_decomposition(alg: &AlgebraSpec, t: &BasicModule) -> Result<Vertex> {
    let n = alg.n();
    if n < 2 {
        return Err(Error::ClassificationFailed(
            "the algebra is semisimple".into(),
        ));
    }
    let l = alg.relations().last().copied().unwrap_or(1);
    let i = if t.contains(Interval::simple(n)) {
        n
    } else if alg.has_relation(n - 1) {
        n - 1
    } else {
        let mut hits = (l..n)
            .filter(|&i| t.contains(Interval::new(i, n)) && t.contains(Interval::new(i, n - 1)));
        match (hits.next(), hits.next()) {
            (Some(i), None) => i,
            (None, _) => {
                return Err(Error::ClassificationFailed(format!(
                    "no fiber contains {t}"
                )))
            }
            _ => {
                return Err(Error::ClassificationFailed(format!(
                    "several fibers contain {t}"
                )))
            }
        }
    };
    let order = order_from_tilting(alg, t)?.order;
    let nabla = standard_costandard(alg, &order)?.nabla(n);
    if alg.projective(i)? != nabla {
        return Err(Error::ClassificationFailed(format!(
            "fiber {i} but Nabla({n}) = {nabla}"
        )));
    }
    Ok(i)
}

/// The algebra `B` glued at its sink with a radical-square-zero chain on `k + 1`
/// vertices and then with a path on `m + 1` vertices.
pub fn nodal_glue(b: &AlgebraSpec, k: usize, m: usize) -> Result<AlgebraSpec> {
    let nb = b.n();
    let n = nb + k + m;
    AlgebraSpec::new(
        n,
        b.relations()
            .iter()
            .copied()
            .chain(nb.max(2)..=nb + k)
            .filter(|&v| v < n),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodalCount {
    pub glued: AlgebraSpec,
    pub qhs_b: usize,
    /// Structures of `B` in which the sink lies below its predecessor.
    pub n_sink: usize,
    pub formula: u128,
    /// `Some(agrees)` when the injective dimension of the sink simple is at most 1.
    pub reduced_check: Option<bool>,
}

/// `|qhs B| C_m + N (C_{m+1} + (k - 1) C_m)` for the glued algebra.
pub fn count_qhs_nodal(b: &AlgebraSpec, k: usize, m: usize) -> Result<NodalCount> {
    if m == 0 {
        return Err(Error::ClassificationFailed(
            "the free tail must have at least one arrow".into(),
        ));
    }
    let glued = nodal_glue(b, k, m)?;
    let structures = enumerate_qhs(b, QhsStrategy::ViaTilting)?;
    let sink = b.n();
    let n_sink = if sink == 1 {
        structures.len()
    } else {
        structures.iter().filter(|o| o.less(sink, sink - 1)).count()
    };
    let (cm, cm1) = (catalan(m) as i128, catalan(m + 1) as i128);
    let formula = structures.len() as i128 * cm + n_sink as i128 * (cm1 + (k as i128 - 1) * cm);
    let reduced_check = match b.without_sink() {
        Some(reduced) if homdims(b, Interval::simple(sink)).1 <= 1 => {
            Some(enumerate_qhs(&reduced, QhsStrategy::ViaTilting)?.len() == n_sink)
        }
        _ => None,
    };
    Ok(NodalCount {
        glued,
        qhs_b: structures.len(),
        n_sink,
        formula: u128::try_from(formula).expect("counts are positive"),
        reduced_check,
    })
}

/// Splits of the local structure counts used by the nodal formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalSplits {
    /// Structures of the radical-square-zero chain on `k + 1` vertices with `1 < 2`, and with `2 < 1`.
    pub bang_up: usize,
    pub bang_down: usize,
    /// All structures of the path on `m + 1` vertices, and those with `1 < 2`.
    pub path_total: usize,
    pub path_up: usize,
}

pub fn local_splits(k: usize, m: usize) -> Result<LocalSplits> {
    let bang = enumerate_qhs(
        &AlgebraSpec::radical_square_zero(k + 1),
        QhsStrategy::ViaTilting,
    )?;
    let path = enumerate_qhs(&AlgebraSpec::path(m + 1), QhsStrategy::ViaTilting)?;
    let up = |os: &[crate::order::PartialOrder]| {
        os.iter().filter(|o| o.len() > 1 && o.less(1, 2)).count()
    };
    let down = |os: &[crate::order::PartialOrder]| {
        os.iter().filter(|o| o.len() > 1 && o.less(2, 1)).count()
    };
    Ok(LocalSplits {
        bang_up: up(&bang),
        bang_down: down(&bang),
        path_total: path.len(),
        path_up: up(&path),
    })
}
