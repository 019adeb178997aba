//! Quadratic linear Nakayama algebras and their interval modules.
//!
//! The algebra on `n` vertices is the path algebra of `1 -> 2 -> ... -> n`
//! modulo a set of length-two zero relations. A relation vertex `l` kills the
//! composite `(l-1) -> l -> (l+1)`. Every indecomposable module is uniserial
//! and is determined by its top and socle, so modules are represented as
//! vertex intervals `[top, socle]`. All Hom spaces between intervals are zero
//! or one dimensional; nothing here depends on the ground field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex of the linear quiver, numbered from 1.
pub type Vertex = usize;

/// The interval module `M[top, socle]` with composition factors
/// `S(top), S(top+1), ..., S(socle)`, each once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[Vertex; 2]", into = "[Vertex; 2]")]
pub struct Interval {
    pub top: Vertex,
    pub socle: Vertex,
}

impl Interval {
    /// Panics if `top > socle`; use [`AlgebraSpec::interval`] for checked construction.
    pub fn new(top: Vertex, socle: Vertex) -> Self {
        assert!(top <= socle, "interval [{top},{socle}] is reversed");
        Interval { top, socle }
    }

    pub fn simple(v: Vertex) -> Self {
        Interval { top: v, socle: v }
    }

    pub fn len(&self) -> usize {
        self.socle - self.top + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_simple(&self) -> bool {
        self.top == self.socle
    }

    /// Whether `S(v)` is a composition factor.
    pub fn contains(&self, v: Vertex) -> bool {
        self.top <= v && v <= self.socle
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        self.top..=self.socle
    }

    /// Idempotent truncation to the vertices `[start, end]`.
    pub fn restrict(&self, start: Vertex, end: Vertex) -> Option<Interval> {
        let top = self.top.max(start);
        let socle = self.socle.min(end);
        (top <= socle).then_some(Interval { top, socle })
    }

    /// Renumbers the vertices by `offset` (which may be negative).
    pub fn shift(&self, offset: isize) -> Interval {
        Interval {
            top: self
                .top
                .checked_add_signed(offset)
                .expect("shift below zero"),
            socle: self
                .socle
                .checked_add_signed(offset)
                .expect("shift below zero"),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.top, self.socle)
    }
}

impl TryFrom<[Vertex; 2]> for Interval {
    type Error = String;

    fn try_from([top, socle]: [Vertex; 2]) -> Result<Self, String> {
        if top == 0 || top > socle {
            return Err(format!(
                "[{top},{socle}] is not an interval of positive vertices"
            ));
        }
        Ok(Interval { top, socle })
    }
}

impl From<Interval> for [Vertex; 2] {
    fn from(iv: Interval) -> Self {
        [iv.top, iv.socle]
    }
}

/// Dimension of `Hom(m, n)` for interval modules: 1 iff `n.top <= m.top <= n.socle <= m.socle`.
///
/// The nonzero map is the canonical one with image `M[m.top, n.socle]`.
pub fn hom_dim(m: Interval, n: Interval) -> u8 {
    u8::from(n.top <= m.top && m.top <= n.socle && n.socle <= m.socle)
}

/// Whether the composite of the canonical maps `m -> n -> l` is nonzero.
///
/// Both factors must be nonzero; the composite then survives iff `m.top <= l.socle`.
pub fn composite_nonzero(m: Interval, n: Interval, l: Interval) -> bool {
    hom_dim(m, n) == 1 && hom_dim(n, l) == 1 && m.top <= l.socle
}

/// A quadratic linear Nakayama algebra, given by its vertex count and relation vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawAlgebra", into = "RawAlgebra")]
pub struct AlgebraSpec {
    n: usize,
    relations: Vec<Vertex>,
}

#[derive(Serialize, Deserialize)]
struct RawAlgebra {
    vertices: usize,
    #[serde(default)]
    relations: Vec<Vertex>,
}

impl TryFrom<RawAlgebra> for AlgebraSpec {
    type Error = Error;

    fn try_from(raw: RawAlgebra) -> Result<Self> {
        AlgebraSpec::new(raw.vertices, raw.relations)
    }
}

impl From<AlgebraSpec> for RawAlgebra {
    fn from(a: AlgebraSpec) -> Self {
        RawAlgebra {
            vertices: a.n,
            relations: a.relations,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructuralKind {
    Projective,
    Injective,
    Simple,
}

impl AlgebraSpec {
    pub fn new(n: usize, relations: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        if n < 1 {
            return Err(Error::NonPositiveSize);
        }
        let mut relations: Vec<Vertex> = relations.into_iter().collect();
        relations.sort_unstable();
        relations.dedup();
        if let Some(&relation) = relations.iter().find(|&&l| l < 2 || l + 1 > n) {
            return Err(Error::RelationOutOfRange { relation, n });
        }
        Ok(AlgebraSpec { n, relations })
    }

    /// The path algebra of `1 -> ... -> n`.
    pub fn path(n: usize) -> Self {
        AlgebraSpec::new(n, []).expect("n >= 1")
    }

    /// The radical square zero algebra `A_n^!`.
    pub fn radical_square_zero(n: usize) -> Self {
        AlgebraSpec::new(n, 2..n).expect("n >= 1")
    }

    /// Every algebra on `n` vertices, one per subset of `[2, n-1]`.
    pub fn all_with_vertices(n: usize) -> Vec<AlgebraSpec> {
        let inner: Vec<Vertex> = (2..n).collect();
        (0u64..1 << inner.len())
            .map(|mask| {
                let rels = inner
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &l)| l);
                AlgebraSpec::new(n, rels).expect("relations in range")
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[Vertex] {
        &self.relations
    }

    pub fn has_relation(&self, l: Vertex) -> bool {
        self.relations.binary_search(&l).is_ok()
    }

    pub fn is_semisimple(&self) -> bool {
        self.n == 1
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    /// An interval is a module iff no relation vertex lies strictly inside it.
    pub fn is_valid(&self, iv: Interval) -> bool {
        iv.top >= 1
            && iv.top <= iv.socle
            && iv.socle <= self.n
            && !self.relations.iter().any(|&l| iv.top < l && l < iv.socle)
    }

    pub fn interval(&self, top: Vertex, socle: Vertex) -> Result<Interval> {
        let iv = Interval { top, socle };
        if top > socle || !self.is_valid(iv) {
            return Err(Error::InvalidInterval(iv));
        }
        Ok(iv)
    }

    pub fn indecomposables(&self) -> BasicModule {
        let mut out = Vec::new();
        for a in 1..=self.n {
            let e = self.proj_socle(a);
            out.extend((a..=e).map(|b| Interval { top: a, socle: b }));
        }
        BasicModule::from_sorted_unchecked(out)
    }

    /// Socle of `P(i)`: the first relation vertex after `i`, or `n`.
    pub fn proj_socle(&self, i: Vertex) -> Vertex {
        self.relations
            .iter()
            .copied()
            .find(|&l| l > i)
            .unwrap_or(self.n)
    }

    /// Top of `I(i)`: the last relation vertex before `i`, or 1.
    pub fn inj_top(&self, i: Vertex) -> Vertex {
        self.relations
            .iter()
            .rev()
            .copied()
            .find(|&l| l < i)
            .unwrap_or(1)
    }

    pub fn projective(&self, i: Vertex) -> Result<Interval> {
        self.check_vertex(i)?;
        Ok(Interval {
            top: i,
            socle: self.proj_socle(i),
        })
    }

    pub fn injective(&self, i: Vertex) -> Result<Interval> {
        self.check_vertex(i)?;
        Ok(Interval {
            top: self.inj_top(i),
            socle: i,
        })
    }

    pub fn simple(&self, i: Vertex) -> Result<Interval> {
        self.check_vertex(i)?;
        Ok(Interval::simple(i))
    }

    pub fn structural_module(&self, kind: StructuralKind, i: Vertex) -> Result<Interval> {
        match kind {
            StructuralKind::Projective => self.projective(i),
            StructuralKind::Injective => self.injective(i),
            StructuralKind::Simple => self.simple(i),
        }
    }

    pub fn is_projective(&self, iv: Interval) -> bool {
        iv.socle == self.proj_socle(iv.top)
    }

    pub fn is_injective(&self, iv: Interval) -> bool {
        iv.top == self.inj_top(iv.socle)
    }

    /// The regular module `P(1) + ... + P(n)`.
    pub fn regular_module(&self) -> BasicModule {
        BasicModule::new((1..=self.n).map(|i| Interval {
            top: i,
            socle: self.proj_socle(i),
        }))
    }

    /// `D(A) = I(1) + ... + I(n)`.
    pub fn dual_module(&self) -> BasicModule {
        BasicModule::new((1..=self.n).map(|i| Interval {
            top: self.inj_top(i),
            socle: i,
        }))
    }

    /// The algebra on the vertices `[start, end]`, renumbered from 1.
    pub fn sub_algebra(&self, start: Vertex, end: Vertex) -> Result<AlgebraSpec> {
        self.check_vertex(start)?;
        self.check_vertex(end)?;
        if start > end {
            return Err(Error::InvalidInterval(Interval {
                top: start,
                socle: end,
            }));
        }
        let rels = self
            .relations
            .iter()
            .filter(|&&l| start < l && l < end)
            .map(|&l| l - start + 1);
        AlgebraSpec::new(end - start + 1, rels)
    }

    /// The relation-free algebra obtained by dropping the last vertex.
    pub fn without_sink(&self) -> Option<AlgebraSpec> {
        (self.n > 1).then(|| {
            self.sub_algebra(1, self.n - 1)
                .expect("range inside algebra")
        })
    }

    /// Inline syntax `n:l1,l2,...`.
    pub fn inline(&self) -> String {
        let rels: Vec<String> = self.relations.iter().map(|l| l.to_string()).collect();
        format!("{}:{}", self.n, rels.join(","))
    }

    pub fn parse_inline(s: &str) -> Result<Self> {
        let (n, rels) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected n:l1,l2,... in {s:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {n:?}")))?;
        let rels = rels
            .split(',')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.parse::<Vertex>()
                    .map_err(|_| Error::Parse(format!("bad relation {r:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraSpec::new(n, rels)
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inline())
    }
}

/// A basic module: a set of pairwise distinct interval modules, sorted by `(top, socle)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Interval>", into = "Vec<Interval>")]
pub struct BasicModule(Vec<Interval>);

impl BasicModule {
    pub fn new(summands: impl IntoIterator<Item = Interval>) -> Self {
        let mut v: Vec<Interval> = summands.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        BasicModule(v)
    }

    fn from_sorted_unchecked(v: Vec<Interval>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        BasicModule(v)
    }

    pub fn summands(&self) -> &[Interval] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, iv: Interval) -> bool {
        self.0.binary_search(&iv).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Interval> + '_ {
        self.0.iter().copied()
    }

    pub fn without(&self, iv: Interval) -> BasicModule {
        BasicModule(self.0.iter().copied().filter(|&x| x != iv).collect())
    }

    pub fn with(&self, iv: Interval) -> BasicModule {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&iv) {
            v.insert(pos, iv);
        }
        BasicModule(v)
    }

    pub fn check_valid(&self, alg: &AlgebraSpec) -> Result<()> {
        match self.0.iter().find(|&&iv| !alg.is_valid(iv)) {
            Some(&iv) => Err(Error::InvalidInterval(iv)),
            None => Ok(()),
        }
    }

    /// Truncation of every summand to `[start, end]`, dropping zeros and duplicates.
    pub fn restrict(&self, start: Vertex, end: Vertex) -> BasicModule {
        BasicModule::new(self.0.iter().filter_map(|iv| iv.restrict(start, end)))
    }

    pub fn shift(&self, offset: isize) -> BasicModule {
        BasicModule(self.0.iter().map(|iv| iv.shift(offset)).collect())
    }
}

impl From<Vec<Interval>> for BasicModule {
    fn from(v: Vec<Interval>) -> Self {
        BasicModule::new(v)
    }
}

impl From<BasicModule> for Vec<Interval> {
    fn from(m: BasicModule) -> Self {
        m.0
    }
}

impl FromIterator<Interval> for BasicModule {
    fn from_iter<I: IntoIterator<Item = Interval>>(iter: I) -> Self {
        BasicModule::new(iter)
    }
}

impl fmt::Display for BasicModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: Vertex, b: Vertex) -> Interval {
        Interval::new(a, b)
    }

    #[test]
    fn make_algebra_validates_relations() {
        let a = AlgebraSpec::new(3, [2]).unwrap();
        assert_eq!(a.relations(), &[2]);
        assert_eq!(
            AlgebraSpec::new(3, []).unwrap().relations(),
            &[] as &[Vertex]
        );
        let a = AlgebraSpec::new(10, [9, 5, 7, 6]).unwrap();
        assert_eq!(a.relations(), &[5, 6, 7, 9]);
        assert_eq!(AlgebraSpec::new(0, []), Err(Error::NonPositiveSize));
        assert_eq!(
            AlgebraSpec::new(3, [3]),
            Err(Error::RelationOutOfRange { relation: 3, n: 3 })
        );
        assert_eq!(
            AlgebraSpec::new(4, [1]),
            Err(Error::RelationOutOfRange { relation: 1, n: 4 })
        );
    }

    #[test]
    fn indecomposables_of_small_algebras() {
        let bang = AlgebraSpec::radical_square_zero(3);
        assert_eq!(
            bang.indecomposables().summands(),
            &[iv(1, 1), iv(1, 2), iv(2, 2), iv(2, 3), iv(3, 3)]
        );
        assert_eq!(AlgebraSpec::path(3).indecomposables().len(), 6);

        let running = AlgebraSpec::new(10, [5, 6, 7, 9]).unwrap();
        let indecs = running.indecomposables();
        for m in [
            iv(1, 1),
            iv(1, 3),
            iv(3, 3),
            iv(1, 5),
            iv(5, 6),
            iv(6, 6),
            iv(6, 7),
            iv(7, 9),
            iv(9, 10),
            iv(10, 10),
        ] {
            assert!(indecs.contains(m), "{m} missing");
        }
    }

    #[test]
    fn indecomposable_counts() {
        for n in 1..=9 {
            assert_eq!(
                AlgebraSpec::path(n).indecomposables().len(),
                n * (n + 1) / 2
            );
            assert_eq!(
                AlgebraSpec::radical_square_zero(n).indecomposables().len(),
                2 * n - 1
            );
        }
    }

    #[test]
    fn structural_modules() {
        let bang = AlgebraSpec::radical_square_zero(3);
        assert_eq!(bang.projective(1).unwrap(), iv(1, 2));
        assert_eq!(bang.injective(3).unwrap(), iv(2, 3));
        assert_eq!(bang.simple(2).unwrap(), iv(2, 2));
        let running = AlgebraSpec::new(10, [5, 6, 7, 9]).unwrap();
        assert_eq!(running.projective(7).unwrap(), iv(7, 9));
        assert_eq!(running.injective(5).unwrap(), iv(1, 5));
        assert_eq!(running.injective(10).unwrap(), iv(9, 10));
        assert_eq!(
            bang.projective(4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            bang.structural_module(StructuralKind::Injective, 0),
            Err(Error::VertexOutOfRange { vertex: 0, n: 3 })
        );
    }

    #[test]
    fn injective_is_maximal_valid_interval_with_given_socle() {
        for n in 1..=7 {
            for alg in AlgebraSpec::all_with_vertices(n) {
                for i in 1..=n {
                    let inj = alg.injective(i).unwrap();
                    assert!(alg.is_valid(inj));
                    assert!(inj.top == 1 || !alg.is_valid(iv(inj.top - 1, i)));
                }
            }
        }
    }

    #[test]
    fn hom_examples() {
        assert_eq!(hom_dim(iv(2, 3), iv(1, 2)), 1);
        assert_eq!(hom_dim(iv(1, 2), iv(2, 3)), 0);
        assert_eq!(hom_dim(iv(2, 2), iv(2, 3)), 0);
    }

    #[test]
    fn projectives_detect_composition_factors() {
        for alg in AlgebraSpec::all_with_vertices(6) {
            for m in alg.indecomposables().iter() {
                for i in 1..=alg.n() {
                    let p = alg.projective(i).unwrap();
                    assert_eq!(hom_dim(p, m) == 1, m.contains(i), "{alg} P({i}) -> {m}");
                }
            }
        }
    }

    #[test]
    fn hom_is_directed_off_the_diagonal() {
        for alg in AlgebraSpec::all_with_vertices(6) {
            let ind = alg.indecomposables();
            for m in ind.iter() {
                assert_eq!(hom_dim(m, m), 1);
                for n in ind.iter().filter(|&n| n != m) {
                    assert!(hom_dim(m, n) * hom_dim(n, m) == 0, "{m} <-> {n}");
                }
            }
        }
    }

    #[test]
    fn restriction_to_a_range() {
        assert_eq!(iv(1, 5).restrict(5, 7), Some(iv(5, 5)));
        assert_eq!(iv(7, 9).restrict(5, 7), Some(iv(7, 7)));
        assert_eq!(iv(1, 3).restrict(5, 7), None);
    }

    #[test]
    fn sub_algebra_renumbers() {
        let running = AlgebraSpec::new(10, [5, 6, 7, 9]).unwrap();
        assert_eq!(
            running.sub_algebra(5, 7).unwrap(),
            AlgebraSpec::radical_square_zero(3)
        );
        assert_eq!(running.sub_algebra(1, 5).unwrap(), AlgebraSpec::path(5));
        assert_eq!(
            running.sub_algebra(7, 10).unwrap(),
            AlgebraSpec::new(4, [3]).unwrap()
        );
    }

    #[test]
    fn inline_round_trip() {
        let a = AlgebraSpec::parse_inline("10:5,6,7,9").unwrap();
        assert_eq!(a.inline(), "10:5,6,7,9");
        assert_eq!(
            AlgebraSpec::parse_inline("5:").unwrap(),
            AlgebraSpec::path(5)
        );
        assert!(AlgebraSpec::parse_inline("5").is_err());
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"vertices":10,"relations":[5,6,7,9]}"#);
        assert_eq!(serde_json::from_str::<AlgebraSpec>(&json).unwrap(), a);
        assert!(serde_json::from_str::<AlgebraSpec>(r#"{"vertices":3,"relations":[3]}"#).is_err());
    }
}
