//! Local structures on blocks: binary trees for relation-free blocks and
//! apex vertices for radical-square-zero blocks.
//!
//! A binary tree on `[s, t]` carries its vertices as in-order labels. Its
//! order has the covers `parent > child`, and its tilting module assigns to
//! `j` the interval spanned by the subtree rooted at `j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{BasicModule, Interval, Vertex};
use crate::error::{Error, Result};
use crate::order::PartialOrder;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinaryTree {
    pub label: Vertex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Box<BinaryTree>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Box<BinaryTree>>,
}

impl BinaryTree {
    pub fn leaf(label: Vertex) -> Self {
        BinaryTree {
            label,
            left: None,
            right: None,
        }
    }

    pub fn node(label: Vertex, left: Option<BinaryTree>, right: Option<BinaryTree>) -> Self {
        BinaryTree {
            label,
            left: left.map(Box::new),
            right: right.map(Box::new),
        }
    }

    /// Root `start` with a chain of right children.
    pub fn right_comb(start: Vertex, end: Vertex) -> Self {
        (start..=end)
            .rev()
            .fold(None, |acc, v| Some(BinaryTree::node(v, None, acc)))
            .expect("empty range")
    }

    /// Root `end` with a chain of left children.
    pub fn left_comb(start: Vertex, end: Vertex) -> Self {
        (start..=end)
            .fold(None, |acc, v| Some(BinaryTree::node(v, acc, None)))
            .expect("empty range")
    }

    /// All binary trees with in-order labels `start..=end`.
    pub fn all(start: Vertex, end: Vertex) -> Vec<BinaryTree> {
        fn go(a: Vertex, b: Vertex) -> Vec<Option<BinaryTree>> {
            if a > b {
                return vec![None];
            }
            let mut out = Vec::new();
            for root in a..=b {
                let lefts = go(a, root - 1);
                let rights = go(root + 1, b);
                for l in &lefts {
                    for r in &rights {
                        out.push(Some(BinaryTree::node(root, l.clone(), r.clone())));
                    }
                }
            }
            out
        }
        go(start, end).into_iter().flatten().collect()
    }

    pub fn size(&self) -> usize {
        1 + self.children().map(BinaryTree::size).sum::<usize>()
    }

    fn children(&self) -> impl Iterator<Item = &BinaryTree> {
        self.left.iter().chain(self.right.iter()).map(|b| &**b)
    }

    pub fn in_order(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        self.walk(&mut out);
        out
    }

    fn walk(&self, out: &mut Vec<Vertex>) {
        if let Some(l) = &self.left {
            l.walk(out);
        }
        out.push(self.label);
        if let Some(r) = &self.right {
            r.walk(out);
        }
    }

    /// Smallest and largest label.
    pub fn span(&self) -> Interval {
        let lo = self.left.as_ref().map_or(self.label, |l| l.span().top);
        let hi = self.right.as_ref().map_or(self.label, |r| r.span().socle);
        Interval::new(lo, hi)
    }

    /// Checks that the in-order labels are exactly `start..=end`.
    pub fn check_range(&self, start: Vertex, end: Vertex) -> Result<()> {
        if self.in_order() != (start..=end).collect::<Vec<_>>() {
            return Err(Error::NotATree(format!(
                "in-order labels of {self} are not [{start},{end}]"
            )));
        }
        Ok(())
    }

    /// Covers `parent > child`.
    pub fn to_order(&self) -> PartialOrder {
        let span = self.span();
        let mut pairs = Vec::new();
        self.edges(&mut pairs);
        PartialOrder::from_relations(span.top, span.socle, &pairs).expect("trees are acyclic")
    }

    fn edges(&self, out: &mut Vec<(Vertex, Vertex)>) {
        for c in self.children() {
            out.push((self.label, c.label));
            c.edges(out);
        }
    }

    /// `T(j)` is the span of the subtree rooted at `j`.
    pub fn to_tilting(&self) -> BasicModule {
        self.labeled_tilting().into_iter().map(|(_, m)| m).collect()
    }

    /// `(j, T(j))` pairs in label order.
    pub fn labeled_tilting(&self) -> Vec<(Vertex, Interval)> {
        let mut out = Vec::new();
        self.spans(&mut out);
        out.sort();
        out
    }

    fn spans(&self, out: &mut Vec<(Vertex, Interval)>) {
        out.push((self.label, self.span()));
        for c in self.children() {
            c.spans(out);
        }
    }

    /// Inverse of [`BinaryTree::to_order`] on `[order.start(), order.end()]`.
    pub fn from_order(order: &PartialOrder) -> Result<BinaryTree> {
        let max = order.maximal_elements();
        let [root] = max[..] else {
            return Err(Error::NotATree(format!("{} maximal elements", max.len())));
        };
        if !order.is_tree() {
            return Err(Error::NotATree(format!(
                "Hasse diagram of {order} is not a tree"
            )));
        }
        let covers = order.covers();
        fn build(v: Vertex, covers: &[(Vertex, Vertex)]) -> Result<BinaryTree> {
            let kids: Vec<Vertex> = covers.iter().filter(|c| c.0 == v).map(|c| c.1).collect();
            let (mut left, mut right) = (None, None);
            for k in kids {
                let slot = if k < v { &mut left } else { &mut right };
                if slot.is_some() {
                    return Err(Error::NotATree(format!("{v} has two children on one side")));
                }
                *slot = Some(build(k, covers)?);
            }
            Ok(BinaryTree::node(v, left, right))
        }
        let tree = build(root, &covers)?;
        tree.check_range(order.start(), order.end())?;
        Ok(tree)
    }

    /// Builds the tree of a tilting module over the path algebra on `[start, end]`.
    ///
    /// Summands are inserted by increasing length. Each one adds a node for
    /// the single vertex of its interval not yet covered, which becomes the
    /// parent of the current roots spanning the rest of the interval.
    pub fn from_tilting(start: Vertex, end: Vertex, t: &BasicModule) -> Result<BinaryTree> {
        let bad = |why: String| Error::NotATree(format!("{t} over [{start},{end}]: {why}"));
        if t.len() != end + 1 - start || t.iter().any(|m| m.top < start || m.socle > end) {
            return Err(Error::NotTilting);
        }
        let mut summands: Vec<Interval> = t.iter().collect();
        summands.sort_by_key(|m| (m.len(), m.top));
        let mut roots: Vec<BinaryTree> = Vec::new();
        for m in summands {
            let (inside, rest): (Vec<_>, Vec<_>) = roots.into_iter().partition(|r| {
                let s = r.span();
                s.top >= m.top && s.socle <= m.socle
            });
            roots = rest;
            if roots.iter().any(|r| {
                let s = r.span();
                s.top <= m.socle && s.socle >= m.top
            }) {
                return Err(bad(format!("{m} cuts through an earlier subtree")));
            }
            let covered: usize = inside.iter().map(|r| r.span().len()).sum();
            if covered + 1 != m.len() {
                return Err(bad(format!("{m} does not add exactly one vertex")));
            }
            let x = m
                .vertices()
                .find(|&v| !inside.iter().any(|r| r.span().contains(v)))
                .unwrap();
            let (mut left, mut right) = (None, None);
            for r in inside {
                if r.span().socle + 1 == x {
                    left = Some(r);
                } else if r.span().top == x + 1 {
                    right = Some(r);
                } else {
                    return Err(bad(format!("{m} merges more than two subtrees")));
                }
            }
            roots.push(BinaryTree::node(x, left, right));
        }
        match <[BinaryTree; 1]>::try_from(roots) {
            Ok([tree]) => Ok(tree),
            Err(r) => Err(bad(format!("{} components remain", r.len()))),
        }
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.left.is_none() && self.right.is_none() {
            return write!(f, "{}", self.label);
        }
        write!(f, "(")?;
        if let Some(l) = &self.left {
            write!(f, "{l} ")?;
        }
        write!(f, "{}", self.label)?;
        if let Some(r) = &self.right {
            write!(f, " {r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_apex(start: Vertex, end: Vertex, apex: Vertex) -> Result<()> {
    if apex < start || apex > end {
        return Err(Error::ApexOutOfRange { apex, start, end });
    }
    Ok(())
}

/// The V-shaped order on a radical-square-zero block with minimum `apex`.
pub fn apex_order(start: Vertex, end: Vertex, apex: Vertex) -> Result<PartialOrder> {
    check_apex(start, end, apex)?;
    let pairs: Vec<(Vertex, Vertex)> = (start..apex)
        .map(|j| (j, j + 1))
        .chain((apex + 1..=end).map(|j| (j, j - 1)))
        .collect();
    PartialOrder::from_relations(start, end, &pairs)
}

/// `(j, T(j))` for the apex structure: `P(j)` left of the apex, `S(apex)`, `P(j - 1)` right of it.
pub fn apex_labeled_tilting(
    start: Vertex,
    end: Vertex,
    apex: Vertex,
) -> Result<Vec<(Vertex, Interval)>> {
    check_apex(start, end, apex)?;
    Ok((start..=end)
        .map(|j| {
            let m = match j.cmp(&apex) {
                std::cmp::Ordering::Less => Interval::new(j, j + 1),
                std::cmp::Ordering::Equal => Interval::simple(j),
                std::cmp::Ordering::Greater => Interval::new(j - 1, j),
            };
            (j, m)
        })
        .collect())
}

pub fn apex_tilting(start: Vertex, end: Vertex, apex: Vertex) -> Result<BasicModule> {
    Ok(apex_labeled_tilting(start, end, apex)?
        .into_iter()
        .map(|(_, m)| m)
        .collect())
}

/// The apex of a tilting module over a radical-square-zero block.
pub fn apex_of_tilting(start: Vertex, end: Vertex, t: &BasicModule) -> Result<Vertex> {
    let mut simples = t.iter().filter(|m| m.is_simple());
    let (Some(s), None) = (simples.next(), simples.next()) else {
        return Err(Error::NotTilting);
    };
    if apex_tilting(start, end, s.top).ok().as_ref() != Some(t) {
        return Err(Error::NotTilting);
    }
    Ok(s.top)
}

/// The apex of a V-shaped order: its unique minimal element.
pub fn apex_of_order(order: &PartialOrder) -> Result<Vertex> {
    let mins = order.minimal_elements();
    let [apex] = mins[..] else {
        return Err(Error::NotQuasiHereditary);
    };
    if apex_order(order.start(), order.end(), apex)? != *order {
        return Err(Error::NotQuasiHereditary);
    }
    Ok(apex)
}
