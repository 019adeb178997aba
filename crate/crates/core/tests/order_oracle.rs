//! Minimal adapted orders recomputed from scratch: every total order is tested
//! for quasi-heredity by greedy standard filtrations of the projectives, orders
//! are grouped by their standard modules, and each group's intersection is the
//! minimal adapted order.

use std::collections::BTreeMap;

use itertools::Itertools;
use nakayama_qhs::qhs::{enumerate_qhs, QhsStrategy};
use nakayama_qhs::tilting::{enumerate_tilting, Strategy};
use nakayama_qhs::{AlgebraSpec, PartialOrder};

fn proj_socle(alg: &AlgebraSpec, i: usize) -> usize {
    (i + 1..=alg.n())
        .find(|&j| alg.has_relation(j) || j == alg.n())
        .unwrap_or(i)
}

/// `rank[v]` is the position of `v` in the total order, smallest first.
fn standard_ends(alg: &AlgebraSpec, rank: &[usize]) -> Vec<usize> {
    (0..=alg.n())
        .map(|i| {
            if i == 0 {
                return 0;
            }
            let mut d = i;
            while d < proj_socle(alg, i) && rank[d + 1] < rank[i] {
                d += 1;
            }
            d
        })
        .collect()
}

fn quasi_hereditary(alg: &AlgebraSpec, rank: &[usize], ends: &[usize]) -> bool {
    (1..=alg.n()).all(|i| {
        let s = proj_socle(alg, i);
        let mut cur = i;
        while cur <= s {
            if ends[cur] > s || (cur != i && rank[cur] < rank[i]) {
                return false;
            }
            cur = ends[cur] + 1;
        }
        true
    })
}

fn classes(alg: &AlgebraSpec) -> BTreeMap<Vec<usize>, Vec<Vec<usize>>> {
    let n = alg.n();
    let mut out: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    for perm in (1..=n).permutations(n) {
        let mut rank = vec![0; n + 1];
        for (p, &v) in perm.iter().enumerate() {
            rank[v] = p;
        }
        let ends = standard_ends(alg, &rank);
        if quasi_hereditary(alg, &rank, &ends) {
            out.entry(ends).or_default().push(rank);
        }
    }
    out
}

fn intersection(n: usize, ranks: &[Vec<usize>]) -> PartialOrder {
    let pairs: Vec<_> = (1..=n)
        .cartesian_product(1..=n)
        .filter(|&(g, l)| g != l && ranks.iter().all(|r| r[g] > r[l]))
        .collect();
    PartialOrder::from_relations(1, n, &pairs).unwrap()
}

#[test]
fn minimal_adapted_orders_are_class_intersections() {
    for alg in (1..=6).flat_map(AlgebraSpec::all_with_vertices) {
        let cls = classes(&alg);
        let tilt = enumerate_tilting(&alg, Strategy::Mutation).unwrap();
        assert_eq!(cls.len(), tilt.len(), "{alg}");
        let mut expected: Vec<_> = cls.values().map(|r| intersection(alg.n(), r)).collect();
        expected.sort();
        assert_eq!(
            enumerate_qhs(&alg, QhsStrategy::ViaTilting).unwrap(),
            expected,
            "{alg}"
        );
        assert_eq!(
            enumerate_qhs(&alg, QhsStrategy::TotalOrderOracle).unwrap(),
            expected,
            "{alg}"
        );
    }
}

#[test]
fn path_structures_are_catalan() {
    let catalan = [1, 1, 2, 5, 14, 42, 132];
    for (n, &c) in catalan.iter().enumerate().skip(1) {
        assert_eq!(classes(&AlgebraSpec::path(n)).len(), c);
    }
}
