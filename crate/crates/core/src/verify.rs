//! The bundled acceptance suite.
//!
//! Every criterion sweeps algebras up to its own size bound, capped by the
//! caller's `max_n`; fixed worked examples always run. Sweeps fan out over a
//! rayon pool with `jobs` workers.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraSpec, BasicModule};
use crate::counting::{
    catalan, classify_decomposition, count_qhs_nodal, count_tilt_recursive, local_splits,
    CountTable,
};
use crate::dot::order_dot;
use crate::error::Error;
use crate::gluing::{
    admissible_from_tilting, assemble, block_decomposition, gluing_conditions, local_tiltings,
};
use crate::homological::is_tilting;
use crate::io::{parse_modules, to_json};
use crate::order::PartialOrder;
use crate::qhs::{
    char_tilting, enumerate_qhs, is_quasi_hereditary, minimal_adapted_order, order_from_tilting,
    reciprocity_holds, standard_costandard, total_order_oracle, QhsStrategy, ORACLE_LIMIT,
};
use crate::tilting::{enumerate_tilting, tilt_hasse, Strategy, EXHAUSTIVE_LIMIT};
use crate::tree::BinaryTree;

/// Wall-clock budget for the single-threaded suite at `max_n = 7`.
pub const TIME_BUDGET: Duration = Duration::from_secs(300);

pub const CRITERIA: [(u8, &str); 13] = [
    (1, "catalan counts"),
    (2, "radical-square-zero counts and shape"),
    (3, "strategy equivalence"),
    (4, "tilting modules are characteristic"),
    (5, "total-order oracle"),
    (6, "reciprocity"),
    (7, "decomposition"),
    (8, "recursion"),
    (9, "gluing"),
    (10, "worked-example regressions"),
    (11, "tree shape"),
    (12, "nodal counting"),
    (13, "suite runtime"),
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {:>2} {}: {} ({} ms)",
            self.id, self.title, self.detail, self.elapsed_ms
        )
    }
}

type Check = Result<String, String>;

fn cap(bound: usize, max_n: usize) -> usize {
    bound.min(max_n)
}

fn algebras(lo: usize, hi: usize) -> Vec<AlgebraSpec> {
    (lo..=hi).flat_map(AlgebraSpec::all_with_vertices).collect()
}

fn err(alg: &AlgebraSpec, e: Error) -> String {
    format!("{alg}: {} ({e})", e.name())
}

/// Runs `f` on every item in parallel; the first failure in input order wins.
fn sweep<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<(), String> + Sync + Send,
) -> Result<(), String> {
    items
        .par_iter()
        .map(f)
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tiltings(alg: &AlgebraSpec) -> Result<Vec<BasicModule>, String> {
    enumerate_tilting(alg, Strategy::Mutation).map_err(|e| err(alg, e))
}

fn structures(alg: &AlgebraSpec) -> Result<Vec<PartialOrder>, String> {
    enumerate_qhs(alg, QhsStrategy::ViaTilting).map_err(|e| err(alg, e))
}

fn criterion_1(max_n: usize) -> Check {
    let (mutation, exhaustive) = (cap(9, max_n), cap(EXHAUSTIVE_LIMIT.min(7), max_n));
    for n in 1..=10 {
        let alg = AlgebraSpec::path(n);
        ensure(count_tilt_recursive(&alg) == catalan(n), || {
            format!("recursion at n = {n}")
        })?;
    }
    ensure(
        (catalan(5), catalan(8), catalan(10)) == (42, 1430, 16796),
        || "catalan values".into(),
    )?;
    let ns: Vec<usize> = (1..=mutation).collect();
    sweep(&ns, |&n| {
        let alg = AlgebraSpec::path(n);
        let m = tiltings(&alg)?;
        ensure(m.len() as u128 == catalan(n), || {
            format!("mutation count {} at n = {n}", m.len())
        })?;
        if n <= exhaustive {
            let e = enumerate_tilting(&alg, Strategy::Exhaustive).map_err(|e| err(&alg, e))?;
            ensure(e.len() as u128 == catalan(n), || {
                format!("exhaustive count {} at n = {n}", e.len())
            })?;
        }
        Ok(())
    })?;
    Ok(format!(
        "recursion n <= 10, mutation n <= {mutation}, exhaustive n <= {exhaustive}"
    ))
}

fn criterion_2(max_n: usize) -> Check {
    let hi = cap(10, max_n);
    let ns: Vec<usize> = (2..=hi).collect();
    sweep(&ns, |&n| {
        let alg = AlgebraSpec::radical_square_zero(n);
        let p = tilt_hasse(&alg);
        ensure(p.elements.len() == n, || {
            format!("{} tilting modules at n = {n}", p.elements.len())
        })?;
        let sources = (0..n).filter(|&i| p.in_degree(i) == 0).count();
        let is_path = p.edges.len() == n - 1
            && (0..n).all(|i| p.in_degree(i) <= 1 && p.out_degree(i) <= 1)
            && sources == 1
            && p.in_degree(p.top) == 0;
        ensure(is_path, || format!("Hasse quiver at n = {n} is not a path"))
    })?;
    Ok(format!("n in [2, {hi}]"))
}

fn criterion_3(max_n: usize) -> Check {
    let hi = cap(7, max_n);
    let algs = algebras(1, hi);
    sweep(&algs, |alg| {
        let e = enumerate_tilting(alg, Strategy::Exhaustive).map_err(|e| err(alg, e))?;
        ensure(e == tiltings(alg)?, || {
            format!("{alg}: strategies disagree")
        })
    })?;
    Ok(format!("{} algebras, n <= {hi}", algs.len()))
}

fn criterion_4(max_n: usize) -> Check {
    let hi = cap(7, max_n);
    let algs = algebras(1, hi);
    let total: usize = algs
        .par_iter()
        .map(|alg| {
            let ts = tiltings(alg)?;
            for t in &ts {
                let ex =
                    order_from_tilting(alg, t).map_err(|e| format!("{} at {t}", err(alg, e)))?;
                ensure(is_quasi_hereditary(alg, &ex.order) == Ok(true), || {
                    format!("{alg}: {t} gives a non-qh order")
                })?;
                let back = char_tilting(alg, &ex.order).map_err(|e| err(alg, e))?;
                ensure(back.module() == *t, || {
                    format!("{alg}: {t} round-trips to {}", back.module())
                })?;
                ensure(back == ex.labeled, || {
                    format!("{alg}: labels of {t} differ")
                })?;
                let mao = minimal_adapted_order(alg, &ex.order).map_err(|e| err(alg, e))?;
                ensure(mao == ex.order, || {
                    format!("{alg}: {t} does not yield its minimal adapted order")
                })?;
            }
            Ok(ts.len())
        })
        .collect::<Vec<Result<usize, String>>>()
        .into_iter()
        .sum::<Result<usize, String>>()?;
    Ok(format!(
        "{total} tilting modules over {} algebras, n <= {hi}",
        algs.len()
    ))
}

fn criterion_5(max_n: usize) -> Check {
    let hi = cap(6, max_n);
    let algs = algebras(1, hi);
    sweep(&algs, |alg| {
        let classes = total_order_oracle(alg, ORACLE_LIMIT).map_err(|e| err(alg, e))?;
        let ts = tiltings(alg)?;
        ensure(classes.len() == ts.len(), || {
            format!("{alg}: {} classes vs {} tilting", classes.len(), ts.len())
        })?;
        let mut ringels = BTreeSet::new();
        for c in &classes {
            let m = BasicModule::new(c.ringel.iter().copied());
            ensure(m.len() == alg.n() && is_tilting(alg, &m), || {
                format!("{alg}: class module {m} is not tilting")
            })?;
            ringels.insert(m);
        }
        ensure(ringels.into_iter().eq(ts), || {
            format!("{alg}: class modules differ from the tilting set")
        })
    })?;
    Ok(format!("{} algebras, n <= {hi}", algs.len()))
}

fn criterion_6(max_n: usize) -> Check {
    let hi = cap(6, max_n);
    let algs = algebras(1, hi);
    sweep(&algs, |alg| {
        for o in structures(alg)? {
            let std = standard_costandard(alg, &o).map_err(|e| err(alg, e))?;
            ensure(reciprocity_holds(alg, &std), || {
                format!("{alg}: reciprocity fails for {o}")
            })?;
        }
        for c in total_order_oracle(alg, ORACLE_LIMIT).map_err(|e| err(alg, e))? {
            ensure(reciprocity_holds(alg, &c.standard), || {
                format!("{alg}: reciprocity fails for {}", c.order)
            })?;
        }
        Ok(())
    })?;
    Ok(format!("{} algebras, n <= {hi}", algs.len()))
}

fn fibers(alg: &AlgebraSpec) -> Result<Vec<usize>, String> {
    let mut sizes = vec![0; alg.n() + 1];
    for t in tiltings(alg)? {
        sizes[classify_decomposition(alg, &t).map_err(|e| format!("{} at {t}", err(alg, e)))?] += 1;
    }
    Ok(sizes)
}

fn criterion_7(max_n: usize) -> Check {
    let bang = fibers(&AlgebraSpec::radical_square_zero(3))?;
    ensure(bang[2..] == [2, 1] && bang[..2] == [0, 0], || {
        format!("radical-square-zero fibers {bang:?}")
    })?;
    let path = fibers(&AlgebraSpec::path(3))?;
    ensure(path[1..] == [2, 1, 2], || format!("path fibers {path:?}"))?;
    let hi = cap(7, max_n);
    let algs = algebras(2, hi);
    sweep(&algs, |alg| {
        let sizes = fibers(alg)?;
        let l = alg.relations().last().copied().unwrap_or(1);
        let support: Vec<usize> = (1..=alg.n()).filter(|&i| sizes[i] > 0).collect();
        ensure(support == (l..=alg.n()).collect::<Vec<_>>(), || {
            format!("{alg}: fiber support {support:?}")
        })
    })?;
    Ok(format!("{} algebras, 2 <= n <= {hi}", algs.len()))
}

fn criterion_8(max_n: usize) -> Check {
    let running = AlgebraSpec::new(10, [5, 6, 7, 9]).expect("valid algebra");
    ensure(count_tilt_recursive(&running) == 266, || {
        "recursion at the running example".into()
    })?;
    ensure(tiltings(&running)?.len() == 266, || {
        "enumeration at the running example".into()
    })?;
    let hi = cap(9, max_n);
    let algs = algebras(1, hi);
    sweep(&algs, |alg| {
        let (r, e) = (CountTable::new().count(alg), tiltings(alg)?.len() as u128);
        ensure(r == e, || format!("{alg}: recursion {r}, enumeration {e}"))
    })?;
    Ok(format!(
        "{} algebras, n <= {hi}; 266 at 10:5,6,7,9",
        algs.len()
    ))
}

fn restricted_pair(
    alg: &AlgebraSpec,
    left: &AlgebraSpec,
    right: &AlgebraSpec,
    o: &PartialOrder,
    v: usize,
) -> Result<(PartialOrder, PartialOrder), Error> {
    let l = minimal_adapted_order(left, &o.restrict(1, v)?)?;
    let r = minimal_adapted_order(right, &o.restrict(v, alg.n())?.shift(1 - v as isize))?;
    Ok((l, r.shift(v as isize - 1)))
}

fn criterion_9(max_n: usize) -> Check {
    let hi = cap(7, max_n);
    let algs = algebras(3, hi);
    let cuts: usize = algs
        .par_iter()
        .map(|alg| {
            let global = structures(alg)?;
            for &v in alg.relations() {
                let left = alg.sub_algebra(1, v).map_err(|e| err(alg, e))?;
                let right = alg.sub_algebra(v, alg.n()).map_err(|e| err(alg, e))?;
                let image: BTreeSet<_> = global
                    .iter()
                    .map(|o| restricted_pair(alg, &left, &right, o, v))
                    .collect::<Result<_, _>>()
                    .map_err(|e| format!("{} at cut {v}", err(alg, e)))?;
                ensure(image.len() == global.len(), || {
                    format!("{alg}: restriction at {v} is not injective")
                })?;
                let lefts = structures(&left)?;
                let rights: Vec<_> = structures(&right)?
                    .iter()
                    .map(|o| o.shift(v as isize - 1))
                    .collect();
                let (mut delta, mut nabla) = (BTreeSet::new(), BTreeSet::new());
                for l in &lefts {
                    for r in &rights {
                        let c = gluing_conditions(l, r, v);
                        if c.delta_ok {
                            delta.insert((l.clone(), r.clone()));
                        }
                        if c.nabla_ok {
                            nabla.insert((l.clone(), r.clone()));
                        }
                    }
                }
                ensure(image == delta, || {
                    format!("{alg}: image at {v} differs from the Delta pairs")
                })?;
                ensure(image == nabla, || {
                    format!("{alg}: image at {v} differs from the Nabla pairs")
                })?;
            }
            Ok(alg.relations().len())
        })
        .collect::<Vec<Result<usize, String>>>()
        .into_iter()
        .sum::<Result<usize, String>>()?;
    Ok(format!(
        "{cuts} cut vertices over {} algebras, n <= {hi}",
        algs.len()
    ))
}

const FIVE_VERTEX_TREE: &str = include_str!("../tests/fixtures/five_vertex_tree.json");
const RUNNING_BLOCKS: &str = include_str!("../tests/fixtures/running_blocks.json");
const RUNNING_LOCAL: &str = include_str!("../tests/fixtures/running_local_tiltings.json");
const RUNNING_SEQUENCE: &str = include_str!("../tests/fixtures/running_sequence.json");
const RUNNING_LABELS: &str = include_str!("../tests/fixtures/running_labeled_tilting.json");
const RUNNING_ORDER: &str = include_str!("../tests/fixtures/running_order.dot");

fn same(what: &str, got: String, fixture: &str) -> Result<(), String> {
    ensure(got == fixture, || format!("{what}: got {got:?}"))
}

fn criterion_10() -> Check {
    let e = |e: Error| format!("{} ({e})", e.name());
    let five = parse_modules("[1,1] [3,3] [5,5] [1,3] [1,5]").map_err(e)?;
    same(
        "tree",
        to_json(&BinaryTree::from_tilting(1, 5, &five).map_err(e)?) + "\n",
        FIVE_VERTEX_TREE,
    )?;

    let alg = AlgebraSpec::new(10, [5, 6, 7, 9]).expect("valid algebra");
    let t = parse_modules("[1,1] [1,3] [3,3] [1,5] [5,6] [6,6] [6,7] [7,9] [9,10] [10,10]")
        .map_err(e)?;
    same(
        "blocks",
        to_json(&block_decomposition(&alg)) + "\n",
        RUNNING_BLOCKS,
    )?;
    same(
        "local tiltings",
        to_json(&local_tiltings(&alg, &t).map_err(e)?) + "\n",
        RUNNING_LOCAL,
    )?;
    let seq = admissible_from_tilting(&alg, &t).map_err(e)?;
    same("sequence", to_json(&seq) + "\n", RUNNING_SEQUENCE)?;
    let ex = order_from_tilting(&alg, &t).map_err(e)?;
    same("labels", to_json(&ex.labeled.labels) + "\n", RUNNING_LABELS)?;
    same("glued order", order_dot(&ex.order), RUNNING_ORDER)?;
    let assembly = assemble(&alg, &seq).map_err(e)?;
    same("assembled order", order_dot(&assembly.order), RUNNING_ORDER)?;
    same(
        "assembled labels",
        to_json(&assembly.tilting.labels) + "\n",
        RUNNING_LABELS,
    )?;
    ensure(ex.order.covers().len() == 9, || {
        "glued order does not have nine covers".into()
    })?;
    Ok("tree, blocks, local tiltings, sequence, labels, glued order".into())
}

fn criterion_11(max_n: usize) -> Check {
    let hi = cap(7, max_n);
    let algs = algebras(1, hi);
    sweep(&algs, |alg| {
        for o in structures(alg)? {
            ensure(o.is_tree(), || format!("{alg}: {o} is not a tree"))?;
        }
        Ok(())
    })?;
    Ok(format!("{} algebras, n <= {hi}", algs.len()))
}

fn criterion_12(max_n: usize) -> Check {
    let splits_hi = cap(6, max_n.saturating_sub(1));
    for k in 1..=splits_hi {
        for m in 1..=splits_hi {
            let s = local_splits(k, m).map_err(|e| format!("{} ({e})", e.name()))?;
            let expected = (1, k, catalan(m + 1) as usize, catalan(m) as usize);
            ensure(
                (s.bang_up, s.bang_down, s.path_total, s.path_up) == expected,
                || format!("splits at k = {k}, m = {m}: {s:?}"),
            )?;
        }
    }
    let hi = cap(9, max_n);
    let mut cases = Vec::new();
    for nb in 1..hi {
        for b in AlgebraSpec::all_with_vertices(nb) {
            for k in 0..hi - nb {
                for m in 1..=hi - nb - k {
                    cases.push((b.clone(), k, m));
                }
            }
        }
    }
    let glued: BTreeMap<_, _> = cases
        .iter()
        .map(|(b, k, m)| {
            crate::counting::nodal_glue(b, *k, *m)
                .map(|g| (g, ()))
                .map_err(|e| err(b, e))
        })
        .collect::<Result<_, _>>()?;
    let glued: Vec<_> = glued.into_keys().collect();
    let counts: HashMap<_, _> = glued
        .par_iter()
        .map(|g| structures(g).map(|s| (g.clone(), s.len() as u128)))
        .collect::<Result<_, _>>()?;
    sweep(&cases, |(b, k, m)| {
        let c = count_qhs_nodal(b, *k, *m).map_err(|e| err(b, e))?;
        let e = counts[&c.glued];
        ensure(c.formula == e, || {
            format!("B = {b}, k = {k}, m = {m}: formula {} vs {e}", c.formula)
        })?;
        ensure(c.reduced_check != Some(false), || {
            format!("B = {b}: reduced count disagrees")
        })
    })?;
    Ok(format!(
        "{} triples with glued size <= {hi}; splits k, m <= {splits_hi}",
        cases.len()
    ))
}

fn run_one(id: u8, max_n: usize) -> Check {
    match id {
        1 => criterion_1(max_n),
        2 => criterion_2(max_n),
        3 => criterion_3(max_n),
        4 => criterion_4(max_n),
        5 => criterion_5(max_n),
        6 => criterion_6(max_n),
        7 => criterion_7(max_n),
        8 => criterion_8(max_n),
        9 => criterion_9(max_n),
        10 => criterion_10(),
        11 => criterion_11(max_n),
        12 => criterion_12(max_n),
        _ => Err(format!("unknown criterion {id}")),
    }
}

fn report(id: u8, check: Check, elapsed: Duration) -> CriterionReport {
    let title = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map_or("unknown", |c| c.1);
    let (passed, detail) = match check {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionReport {
        id,
        title,
        passed,
        detail,
        elapsed_ms: elapsed.as_millis(),
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}

/// Runs criterion `id` (1 to 12) with `jobs` workers (0 for one per core).
pub fn run_criterion(id: u8, max_n: usize, jobs: usize) -> CriterionReport {
    let start = Instant::now();
    let check = pool(jobs).install(|| run_one(id, max_n));
    report(id, check, start.elapsed())
}

/// Times criteria 1 to 12 at `max_n = min(max_n, 7)` on one thread.
pub fn run_timing(max_n: usize) -> CriterionReport {
    let bound = max_n.min(7);
    let start = Instant::now();
    let failed: Vec<u8> =
        pool(1).install(|| (1..=12).filter(|&id| run_one(id, bound).is_err()).collect());
    let elapsed = start.elapsed();
    let check = if !failed.is_empty() {
        Err(format!("criteria {failed:?} failed during the timed run"))
    } else if elapsed >= TIME_BUDGET {
        Err(format!(
            "{:.1} s at max-n {bound}, budget {} s",
            elapsed.as_secs_f64(),
            TIME_BUDGET.as_secs()
        ))
    } else {
        Ok(format!(
            "{:.1} s single-threaded at max-n {bound}",
            elapsed.as_secs_f64()
        ))
    };
    report(13, check, elapsed)
}

/// Runs the selected criteria in order, calling `each` after every report.
pub fn verify(
    max_n: usize,
    jobs: usize,
    only: &[u8],
    mut each: impl FnMut(&CriterionReport),
) -> Vec<CriterionReport> {
    let ids: Vec<u8> = if only.is_empty() {
        (1..=13).collect()
    } else {
        only.to_vec()
    };
    let mut out = Vec::new();
    for id in ids {
        let r = if id == 13 {
            run_timing(max_n)
        } else {
            run_criterion(id, max_n, jobs)
        };
        each(&r);
        out.push(r);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        for id in 1..=12 {
            let r = run_criterion(id, 4, 2);
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn report_line() {
        let r = report(3, Err("x".into()), Duration::from_millis(5));
        assert_eq!(r.to_string(), "[FAIL]  3 strategy equivalence: x (5 ms)");
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(14, 3, 1).passed);
    }
}
