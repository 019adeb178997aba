//! Partial orders on a vertex range `[start, end]`.
//!
//! Stored as a dense relation matrix. `leq(x, y)` reads "x is below or equal
//! to y". Hasse covers are reported as `(greater, lesser)` pairs, matching
//! the convention that an arrow `x -> y` of the Hasse quiver means `y` is
//! covered by `x`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Vertex;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawOrder", into = "RawOrder")]
pub struct PartialOrder {
    start: Vertex,
    len: usize,
    // rel[i * len + j] <=> (start + i) <= (start + j)
    rel: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct RawOrder {
    n: usize,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    start: Vertex,
    covers: Vec<[Vertex; 2]>,
}

fn one() -> Vertex {
    1
}

fn is_one(v: &Vertex) -> bool {
    *v == 1
}

impl TryFrom<RawOrder> for PartialOrder {
    type Error = Error;

    fn try_from(raw: RawOrder) -> Result<Self> {
        if raw.n == 0 || raw.start == 0 {
            return Err(Error::NotAPartialOrder("empty ground set".into()));
        }
        let pairs: Vec<(Vertex, Vertex)> = raw.covers.iter().map(|&[g, l]| (g, l)).collect();
        let order = PartialOrder::from_relations(raw.start, raw.start + raw.n - 1, &pairs)?;
        if order.covers() != {
            let mut p = pairs.clone();
            p.sort_unstable();
            p.dedup();
            p
        } {
            return Err(Error::NotAPartialOrder(
                "listed pairs are not exactly the Hasse covers".into(),
            ));
        }
        Ok(order)
    }
}

impl From<PartialOrder> for RawOrder {
    fn from(o: PartialOrder) -> Self {
        RawOrder {
            n: o.len,
            start: o.start,
            covers: o.covers().into_iter().map(|(g, l)| [g, l]).collect(),
        }
    }
}

impl PartialOrder {
    /// Only the reflexive pairs on `[start, end]`.
    pub fn discrete(start: Vertex, end: Vertex) -> Self {
        assert!(start >= 1 && start <= end);
        let len = end - start + 1;
        let mut rel = vec![false; len * len];
        for i in 0..len {
            rel[i * len + i] = true;
        }
        PartialOrder { start, len, rel }
    }

    /// The transitive closure of `(greater, lesser)` pairs.
    pub fn from_relations(start: Vertex, end: Vertex, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut o = PartialOrder::discrete(start, end);
        for &(g, l) in pairs {
            if !o.in_range(g) || !o.in_range(l) {
                return Err(Error::NotAPartialOrder(format!(
                    "pair ({g},{l}) outside [{start},{end}]"
                )));
            }
            let (gi, li) = (g - start, l - start);
            o.rel[li * o.len + gi] = true;
        }
        o.close()?;
        Ok(o)
    }

    /// The chain `seq[0] < seq[1] < ...`; `seq` must be a permutation of the range.
    pub fn chain(seq: &[Vertex]) -> Result<Self> {
        let start = *seq
            .iter()
            .min()
            .ok_or_else(|| Error::NotAPartialOrder("empty chain".into()))?;
        let end = start + seq.len() - 1;
        let pairs: Vec<(Vertex, Vertex)> = seq.windows(2).map(|w| (w[1], w[0])).collect();
        let o = PartialOrder::from_relations(start, end, &pairs)?;
        if !o.is_total() {
            return Err(Error::NotAPartialOrder(format!(
                "{seq:?} is not a permutation of [{start},{end}]"
            )));
        }
        Ok(o)
    }

    fn close(&mut self) -> Result<()> {
        let n = self.len;
        for k in 0..n {
            for i in 0..n {
                if self.rel[i * n + k] {
                    for j in 0..n {
                        if self.rel[k * n + j] {
                            self.rel[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.rel[i * n + j] && self.rel[j * n + i] {
                    return Err(Error::NotAPartialOrder(format!(
                        "{} and {} lie on a cycle",
                        self.start + i,
                        self.start + j
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn end(&self) -> Vertex {
        self.start + self.len - 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        self.start..=self.end()
    }

    pub fn in_range(&self, v: Vertex) -> bool {
        v >= self.start && v <= self.end()
    }

    /// `x <= y`.
    pub fn leq(&self, x: Vertex, y: Vertex) -> bool {
        debug_assert!(self.in_range(x) && self.in_range(y));
        self.rel[(x - self.start) * self.len + (y - self.start)]
    }

    /// `x < y`.
    pub fn less(&self, x: Vertex, y: Vertex) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: Vertex, y: Vertex) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn is_total(&self) -> bool {
        self.vertices()
            .all(|x| self.vertices().all(|y| self.comparable(x, y)))
    }

    /// Whether every pair of `self` also holds in `other`.
    pub fn is_subrelation_of(&self, other: &PartialOrder) -> bool {
        self.start == other.start
            && self.len == other.len
            && self.rel.iter().zip(&other.rel).all(|(&a, &b)| !a || b)
    }

    /// Hasse covers as sorted `(greater, lesser)` pairs.
    pub fn covers(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for g in self.vertices() {
            for l in self.vertices() {
                if self.less(l, g) && !self.vertices().any(|m| self.less(l, m) && self.less(m, g)) {
                    out.push((g, l));
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<Vertex> {
        self.vertices()
            .filter(|&x| !self.vertices().any(|y| self.less(y, x)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<Vertex> {
        self.vertices()
            .filter(|&x| !self.vertices().any(|y| self.less(x, y)))
            .collect()
    }

    /// Whether the Hasse diagram, viewed as an undirected graph, is a tree.
    pub fn is_tree(&self) -> bool {
        let covers = self.covers();
        if covers.len() + 1 != self.len {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.len).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (g, l) in covers {
            let (a, b) = (
                find(&mut parent, g - self.start),
                find(&mut parent, l - self.start),
            );
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// The induced order on `[start, end]`.
    pub fn restrict(&self, start: Vertex, end: Vertex) -> Result<PartialOrder> {
        if start > end || !self.in_range(start) || !self.in_range(end) {
            return Err(Error::NotAPartialOrder(format!(
                "[{start},{end}] is not inside [{},{}]",
                self.start,
                self.end()
            )));
        }
        let mut o = PartialOrder::discrete(start, end);
        for x in start..=end {
            for y in start..=end {
                o.rel[(x - start) * o.len + (y - start)] = self.leq(x, y);
            }
        }
        Ok(o)
    }

    /// Renumbers the ground set by `offset`.
    pub fn shift(&self, offset: isize) -> PartialOrder {
        PartialOrder {
            start: self
                .start
                .checked_add_signed(offset)
                .expect("shift below 1"),
            len: self.len,
            rel: self.rel.clone(),
        }
    }

    /// The transitive closure of the union of two orders whose ranges overlap in one vertex.
    pub fn glue(&self, other: &PartialOrder) -> Result<PartialOrder> {
        if self.end() != other.start {
            return Err(Error::NotAPartialOrder(format!(
                "ranges [{},{}] and [{},{}] do not meet in one vertex",
                self.start,
                self.end(),
                other.start,
                other.end()
            )));
        }
        let mut pairs = Vec::new();
        for o in [self, other] {
            for x in o.vertices() {
                for y in o.vertices() {
                    if o.less(x, y) {
                        pairs.push((y, x));
                    }
                }
            }
        }
        PartialOrder::from_relations(self.start, other.end(), &pairs)
    }

    /// Text form: sorted covers `greater>lesser`.
    pub fn cover_text(&self) -> String {
        let parts: Vec<String> = self
            .covers()
            .iter()
            .map(|(g, l)| format!("{g}>{l}"))
            .collect();
        if parts.is_empty() {
            format!("(discrete on [{},{}])", self.start, self.end())
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Debug for PartialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PartialOrder[{},{}]{{{}}}",
            self.start,
            self.end(),
            self.cover_text()
        )
    }
}

impl fmt::Display for PartialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cover_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_covers() {
        let o = PartialOrder::chain(&[3, 2, 1]).unwrap();
        assert!(o.less(3, 1));
        assert_eq!(o.covers(), vec![(1, 2), (2, 3)]);
        assert!(o.is_total());
        assert!(o.is_tree());
        assert_eq!(o.minimal_elements(), vec![3]);
        assert!(PartialOrder::chain(&[1, 1, 2]).is_err());
    }

    #[test]
    fn cycles_are_rejected() {
        assert!(matches!(
            PartialOrder::from_relations(1, 3, &[(1, 2), (2, 1)]),
            Err(Error::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn glue_examples() {
        let a = PartialOrder::chain(&[2, 1]).unwrap();
        let b = PartialOrder::chain(&[3, 2]).unwrap();
        assert_eq!(
            a.glue(&b).unwrap(),
            PartialOrder::chain(&[3, 2, 1]).unwrap()
        );

        let a = PartialOrder::chain(&[1, 2]).unwrap();
        let v = a.glue(&b).unwrap();
        assert_eq!(v.covers(), vec![(2, 1), (2, 3)]);
        assert_eq!(v.maximal_elements(), vec![2]);

        let c = PartialOrder::chain(&[2, 3]).unwrap();
        assert_eq!(
            a.glue(&c).unwrap(),
            PartialOrder::chain(&[1, 2, 3]).unwrap()
        );
        assert_eq!(v.restrict(1, 2).unwrap(), a);
        assert_eq!(v.restrict(2, 3).unwrap(), b);
        assert!(a.glue(&a).is_err());
    }

    #[test]
    fn restriction() {
        let o = PartialOrder::chain(&[3, 2, 1]).unwrap();
        assert_eq!(
            o.restrict(2, 3).unwrap(),
            PartialOrder::chain(&[3, 2]).unwrap()
        );
        assert_eq!(o.restrict(1, 3).unwrap(), o);
    }

    #[test]
    fn serde_uses_covers() {
        let o = PartialOrder::from_relations(1, 3, &[(2, 1), (1, 3)]).unwrap();
        let json = serde_json::to_string(&o).unwrap();
        assert_eq!(json, r#"{"n":3,"covers":[[1,3],[2,1]]}"#);
        assert_eq!(serde_json::from_str::<PartialOrder>(&json).unwrap(), o);
        let shifted = o.shift(4);
        let json = serde_json::to_string(&shifted).unwrap();
        assert_eq!(json, r#"{"n":3,"start":5,"covers":[[5,7],[6,5]]}"#);
        assert_eq!(
            serde_json::from_str::<PartialOrder>(&json).unwrap(),
            shifted
        );
        // a non-cover pair is rejected
        assert!(
            serde_json::from_str::<PartialOrder>(r#"{"n":3,"covers":[[3,2],[2,1],[3,1]]}"#)
                .is_err()
        );
    }

    #[test]
    fn discrete_is_a_forest_not_a_tree() {
        let o = PartialOrder::discrete(1, 3);
        assert!(o.covers().is_empty());
        assert!(!o.is_tree());
        assert!(PartialOrder::discrete(4, 4).is_tree());
    }
}
