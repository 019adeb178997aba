//! Left approximations, mutation, and enumeration of tilting modules.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::algebra::{hom_dim, AlgebraSpec, BasicModule, Interval};
use crate::error::{Error, Result};
use crate::homological::ext_vanishes;
use crate::repr::SumMap;

/// Largest `n` accepted by the exhaustive strategy unless a limit is given.
pub const EXHAUSTIVE_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Exhaustive,
    Mutation,
}

/// Pairwise Ext-vanishing data for all indecomposables of one algebra.
pub struct TiltingContext {
    alg: AlgebraSpec,
    indecs: Vec<Interval>,
    index: HashMap<Interval, usize>,
    // ext_free[i][j]: Ext^{>0}(indecs[i], indecs[j]) = 0
    ext_free: Vec<Vec<bool>>,
}

impl TiltingContext {
    pub fn new(alg: &AlgebraSpec) -> Self {
        let indecs: Vec<Interval> = alg.indecomposables().iter().collect();
        let index = indecs.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let ext_free = indecs
            .iter()
            .map(|&m| indecs.iter().map(|&n| ext_vanishes(alg, m, n)).collect())
            .collect();
        TiltingContext {
            alg: alg.clone(),
            indecs,
            index,
            ext_free,
        }
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        &self.alg
    }

    fn idx(&self, m: Interval) -> Result<usize> {
        self.index.get(&m).copied().ok_or(Error::InvalidInterval(m))
    }

    fn compatible(&self, i: usize, j: usize) -> bool {
        self.ext_free[i][j] && self.ext_free[j][i]
    }

    /// `T >= U` in the tilting order: `Ext^{>0}(T, U) = 0`.
    pub fn geq(&self, t: &BasicModule, u: &BasicModule) -> Result<bool> {
        let ti = t.iter().map(|m| self.idx(m)).collect::<Result<Vec<_>>>()?;
        let ui = u.iter().map(|m| self.idx(m)).collect::<Result<Vec<_>>>()?;
        Ok(ti.iter().all(|&i| ui.iter().all(|&j| self.ext_free[i][j])))
    }

    /// Left mutation at `x` by scanning the complements of `T / x`.
    ///
    /// The complements strictly below `x` form a chain; the mutation is its maximum.
    pub fn left_mutation(&self, t: &BasicModule, x: Interval) -> Result<BasicModule> {
        if !t.contains(x) {
            return Err(Error::NotMutable(x));
        }
        let xi = self.idx(x)?;
        let rest = t
            .without(x)
            .iter()
            .map(|m| self.idx(m))
            .collect::<Result<Vec<_>>>()?;
        let below: Vec<usize> = (0..self.indecs.len())
            .filter(|&yi| {
                yi != xi
                    && !rest.contains(&yi)
                    && self.ext_free[yi][yi]
                    && self.ext_free[xi][yi]
                    && rest.iter().all(|&r| self.compatible(r, yi))
            })
            .collect();
        let mut top = below
            .iter()
            .filter(|&&yi| below.iter().all(|&zi| self.ext_free[yi][zi]));
        match (top.next(), top.next()) {
            (Some(&yi), None) => Ok(t.without(x).with(self.indecs[yi])),
            (Some(_), Some(_)) => Err(Error::AmbiguousComplement(x)),
            (None, _) if below.is_empty() => Err(Error::NotMutable(x)),
            (None, _) => Err(Error::AmbiguousComplement(x)),
        }
    }

    /// All basic tilting modules, by backtracking over pairwise rigid sets.
    pub fn enumerate_exhaustive(&self) -> Vec<BasicModule> {
        let candidates: Vec<usize> = (0..self.indecs.len())
            .filter(|&i| self.ext_free[i][i])
            .collect();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(self.alg.n());
        self.backtrack(&candidates, 0, &mut chosen, &mut out);
        out.sort();
        out
    }

    fn backtrack(
        &self,
        cand: &[usize],
        from: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<BasicModule>,
    ) {
        let n = self.alg.n();
        if chosen.len() == n {
            out.push(BasicModule::new(chosen.iter().map(|&i| self.indecs[i])));
            return;
        }
        for pos in from..cand.len() {
            if cand.len() - pos < n - chosen.len() {
                break;
            }
            let c = cand[pos];
            if chosen.iter().all(|&o| self.compatible(o, c)) {
                chosen.push(c);
                self.backtrack(cand, pos + 1, chosen, out);
                chosen.pop();
            }
        }
    }

    /// Breadth-first closure of left mutations starting from the regular module.
    pub fn mutation_graph(&self) -> TiltPoset {
        let start = self.alg.regular_module();
        let mut elements = vec![start.clone()];
        let mut seen = HashMap::from([(start, 0usize)]);
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(src) = queue.pop_front() {
            let t = elements[src].clone();
            for x in t.iter() {
                let Ok(next) = self.left_mutation(&t, x) else {
                    continue;
                };
                let dst = *seen.entry(next.clone()).or_insert_with(|| {
                    elements.push(next);
                    queue.push_back(elements.len() - 1);
                    elements.len() - 1
                });
                edges.push(TiltEdge {
                    source: src,
                    target: dst,
                    summand: x,
                });
            }
        }
        TiltPoset {
            elements,
            edges,
            top: 0,
        }
    }
}

/// A left mutation `source -> target` replacing `summand`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltEdge {
    pub source: usize,
    pub target: usize,
    pub summand: Interval,
}

/// The Hasse quiver of the tilting poset, discovered from the regular module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltPoset {
    pub elements: Vec<BasicModule>,
    pub edges: Vec<TiltEdge>,
    /// Index of the regular module, the maximum.
    pub top: usize,
}

impl TiltPoset {
    pub fn index_of(&self, t: &BasicModule) -> Option<usize> {
        self.elements.iter().position(|e| e == t)
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.source == i).count()
    }

    pub fn in_degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.target == i).count()
    }
}

/// Result of [`min_left_approx`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftApproximation {
    pub targets: BasicModule,
    pub injective: bool,
}

/// Minimal left `add(U)`-approximation of `x`.
///
/// A map `x -> V` factors through `x -> V'` whenever `V'` dominates `V`
/// componentwise on `(top, socle)`, so only the maximal targets are kept.
pub fn min_left_approx(x: Interval, u: &BasicModule) -> LeftApproximation {
    let reach: Vec<Interval> = u.iter().filter(|&v| v != x && hom_dim(x, v) == 1).collect();
    let targets: BasicModule = reach
        .iter()
        .copied()
        .filter(|v| {
            !reach
                .iter()
                .any(|w| w != v && w.top >= v.top && w.socle >= v.socle)
        })
        .collect();
    let injective = targets.iter().any(|v| v.socle == x.socle);
    LeftApproximation { targets, injective }
}

/// Left mutation `mu_x(T)` by complement scan.
pub fn left_mutation(alg: &AlgebraSpec, t: &BasicModule, x: Interval) -> Result<BasicModule> {
    TiltingContext::new(alg).left_mutation(t, x)
}

/// Left mutation computed as `Cok f + T/x` for the minimal left approximation `f`.
pub fn mutation_by_approximation(
    alg: &AlgebraSpec,
    t: &BasicModule,
    x: Interval,
) -> Result<BasicModule> {
    if !t.contains(x) {
        return Err(Error::NotMutable(x));
    }
    let rest = t.without(x);
    let approx = min_left_approx(x, &rest);
    let map = SumMap {
        source: x,
        targets: approx.targets.iter().collect(),
    };
    debug_assert_eq!(map.is_injective(), approx.injective);
    if !approx.injective {
        return Err(Error::NotMutable(x));
    }
    let cok = map.cokernel(alg);
    Ok(BasicModule::new(
        rest.iter().chain(cok.into_iter().map(|(m, _)| m)),
    ))
}

pub fn enumerate_tilting(alg: &AlgebraSpec, strategy: Strategy) -> Result<Vec<BasicModule>> {
    match strategy {
        Strategy::Exhaustive => enumerate_exhaustive(alg, EXHAUSTIVE_LIMIT),
        Strategy::Mutation => {
            let mut all = TiltingContext::new(alg).mutation_graph().elements;
            all.sort();
            Ok(all)
        }
    }
}

pub fn enumerate_exhaustive(alg: &AlgebraSpec, limit: usize) -> Result<Vec<BasicModule>> {
    if alg.n() > limit {
        return Err(Error::SizeLimitExceeded {
            what: "exhaustive tilting search",
            n: alg.n(),
            limit,
        });
    }
    Ok(TiltingContext::new(alg).enumerate_exhaustive())
}

pub fn tilt_hasse(alg: &AlgebraSpec) -> TiltPoset {
    TiltingContext::new(alg).mutation_graph()
}

pub fn tilt_geq(alg: &AlgebraSpec, t: &BasicModule, u: &BasicModule) -> bool {
    t.iter().all(|m| u.iter().all(|n| ext_vanishes(alg, m, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: usize, b: usize) -> Interval {
        Interval::new(a, b)
    }

    fn module(v: &[(usize, usize)]) -> BasicModule {
        v.iter().map(|&(a, b)| iv(a, b)).collect()
    }

    #[test]
    fn approximation_examples() {
        let u = module(&[(1, 2), (2, 3)]);
        assert_eq!(
            min_left_approx(iv(3, 3), &u),
            LeftApproximation {
                targets: module(&[(2, 3)]),
                injective: true
            }
        );
        assert_eq!(
            min_left_approx(iv(1, 1), &u),
            LeftApproximation {
                targets: BasicModule::default(),
                injective: false
            }
        );
        assert_eq!(
            min_left_approx(iv(2, 3), &module(&[(1, 3), (3, 3)])),
            LeftApproximation {
                targets: module(&[(1, 3)]),
                injective: true
            }
        );
    }

    #[test]
    fn mutation_examples() {
        let bang = AlgebraSpec::radical_square_zero(3);
        let regular = bang.regular_module();
        assert_eq!(
            left_mutation(&bang, &regular, iv(3, 3)).unwrap(),
            module(&[(1, 2), (2, 2), (2, 3)])
        );
        let dual = module(&[(1, 2), (2, 3), (1, 1)]);
        assert_eq!(
            left_mutation(&bang, &dual, iv(1, 1)),
            Err(Error::NotMutable(iv(1, 1)))
        );

        let path = AlgebraSpec::path(3);
        let t = module(&[(1, 3), (2, 3), (3, 3)]);
        assert_eq!(
            left_mutation(&path, &t, iv(3, 3)).unwrap(),
            module(&[(1, 3), (2, 3), (2, 2)])
        );
    }

    #[test]
    fn approximation_route_agrees_on_examples() {
        let bang = AlgebraSpec::radical_square_zero(3);
        assert_eq!(
            mutation_by_approximation(&bang, &bang.regular_module(), iv(3, 3)).unwrap(),
            module(&[(1, 2), (2, 2), (2, 3)])
        );
        let path = AlgebraSpec::path(3);
        let t = module(&[(1, 3), (2, 3), (3, 3)]);
        assert_eq!(
            mutation_by_approximation(&path, &t, iv(3, 3)).unwrap(),
            module(&[(1, 3), (2, 3), (2, 2)])
        );
    }

    #[test]
    fn enumeration_examples() {
        let bang = AlgebraSpec::radical_square_zero(3);
        assert_eq!(
            enumerate_tilting(&bang, Strategy::Mutation).unwrap().len(),
            3
        );
        assert_eq!(
            enumerate_tilting(&bang, Strategy::Exhaustive)
                .unwrap()
                .len(),
            3
        );
        let path = AlgebraSpec::path(3);
        assert_eq!(
            enumerate_tilting(&path, Strategy::Mutation).unwrap().len(),
            5
        );
        let running = AlgebraSpec::new(10, [5, 6, 7, 9]).unwrap();
        let by_mutation = enumerate_tilting(&running, Strategy::Mutation).unwrap();
        assert_eq!(by_mutation.len(), 266);
        assert_eq!(
            enumerate_tilting(&running, Strategy::Exhaustive).unwrap(),
            by_mutation
        );
        assert!(matches!(
            enumerate_exhaustive(&running, 7),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn hasse_examples() {
        let bang = AlgebraSpec::radical_square_zero(3);
        let poset = tilt_hasse(&bang);
        assert_eq!(poset.elements.len(), 3);
        assert_eq!(poset.edges.len(), 2);
        let path2 = AlgebraSpec::path(2);
        let poset = tilt_hasse(&path2);
        assert_eq!(
            poset.elements,
            vec![path2.regular_module(), path2.dual_module()]
        );
        assert_eq!(
            poset.edges,
            vec![TiltEdge {
                source: 0,
                target: 1,
                summand: iv(2, 2)
            }]
        );
    }

    #[test]
    fn strategies_agree_and_mutation_validators_coincide() {
        for n in 1..=6 {
            for alg in AlgebraSpec::all_with_vertices(n) {
                let ctx = TiltingContext::new(&alg);
                let poset = ctx.mutation_graph();
                let mut by_mutation = poset.elements.clone();
                by_mutation.sort();
                assert_eq!(ctx.enumerate_exhaustive(), by_mutation, "{alg}");
                for t in &by_mutation {
                    assert!(crate::homological::is_tilting(&alg, t));
                    for x in t.iter() {
                        let scan = ctx.left_mutation(t, x);
                        let approx = mutation_by_approximation(&alg, t, x);
                        assert_eq!(scan, approx, "{alg} {t} at {x}");
                        if let Ok(m) = scan {
                            assert_eq!(m.len(), n);
                        }
                    }
                }
            }
        }
    }
}
