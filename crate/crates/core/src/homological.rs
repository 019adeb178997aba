//! Minimal resolutions and Ext dimensions.
//!
//! The minimal projective resolution of an interval module has one
//! indecomposable projective in each degree, so every `Hom(P_k, N)` is zero or
//! one dimensional and the differentials of the Hom complex are decided by
//! [`composite_nonzero`](crate::algebra::composite_nonzero).

use crate::algebra::{hom_dim, AlgebraSpec, BasicModule, Interval};

/// `Omega(M)`: the kernel of the projective cover, if nonzero.
pub fn syzygy(alg: &AlgebraSpec, m: Interval) -> Option<Interval> {
    let e = alg.proj_socle(m.top);
    (m.socle < e).then(|| Interval::new(m.socle + 1, e))
}

/// Dual of [`syzygy`]: the cokernel of the injective envelope.
pub fn cosyzygy(alg: &AlgebraSpec, m: Interval) -> Option<Interval> {
    let c = alg.inj_top(m.socle);
    (c < m.top).then(|| Interval::new(c, m.top - 1))
}

/// The projectives `P_0, P_1, ...` of the minimal projective resolution.
pub fn resolution(alg: &AlgebraSpec, m: Interval) -> Vec<Interval> {
    let mut out = Vec::new();
    let mut cur = Some(m);
    while let Some(x) = cur {
        out.push(Interval::new(x.top, alg.proj_socle(x.top)));
        cur = syzygy(alg, x);
    }
    out
}

/// The injectives `I^0, I^1, ...` of the minimal injective coresolution.
pub fn coresolution(alg: &AlgebraSpec, m: Interval) -> Vec<Interval> {
    let mut out = Vec::new();
    let mut cur = Some(m);
    while let Some(x) = cur {
        out.push(Interval::new(alg.inj_top(x.socle), x.socle));
        cur = cosyzygy(alg, x);
    }
    out
}

fn ext_from_resolution(res: &[Interval], n: Interval, k: usize) -> u8 {
    let h = |i: usize| res.get(i).map_or(0, |&p| hom_dim(p, n));
    // rank of the differential Hom(P_{i-1}, N) -> Hom(P_i, N)
    let delta = |i: usize| -> u8 {
        if i == 0 || h(i - 1) == 0 || h(i) == 0 {
            return 0;
        }
        u8::from(res[i].top <= n.socle)
    };
    h(k) - delta(k) - delta(k + 1)
}

/// `dim Ext^k(m, n)`, always 0 or 1.
pub fn ext_dim(alg: &AlgebraSpec, m: Interval, n: Interval, k: usize) -> u8 {
    ext_from_resolution(&resolution(alg, m), n, k)
}

/// Whether `Ext^k(m, n) = 0` for every `k >= 1`.
pub fn ext_vanishes(alg: &AlgebraSpec, m: Interval, n: Interval) -> bool {
    let res = resolution(alg, m);
    (1..res.len()).all(|k| ext_from_resolution(&res, n, k) == 0)
}

/// `(pdim m, idim m)`.
pub fn homdims(alg: &AlgebraSpec, m: Interval) -> (usize, usize) {
    (resolution(alg, m).len() - 1, coresolution(alg, m).len() - 1)
}

pub fn is_rigid(alg: &AlgebraSpec, t: &BasicModule) -> bool {
    t.iter().all(|m| t.iter().all(|n| ext_vanishes(alg, m, n)))
}

/// Tilting iff rigid with `n` pairwise distinct summands (global dimension is finite).
pub fn is_tilting(alg: &AlgebraSpec, t: &BasicModule) -> bool {
    t.len() == alg.n() && t.check_valid(alg).is_ok() && is_rigid(alg, t)
}
