//! Python bindings. Intervals are `(top, socle)` tuples, modules are lists of
//! intervals and orders are lists of cover pairs `(greater, lesser)`.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use nakayama_qhs::counting::{
    catalan, classify_decomposition, count_qhs_nodal, count_tilt_recursive,
};
use nakayama_qhs::dot::{order_dot, tilt_poset_dot};
use nakayama_qhs::gluing::{
    admissible_from_tilting, assemble, block_decomposition, AdmissibleSequence, BlockKind,
};
use nakayama_qhs::io::{from_json, to_json};
use nakayama_qhs::qhs::{char_tilting, enumerate_qhs, order_from_tilting, QhsStrategy};
use nakayama_qhs::tilting::{enumerate_tilting, left_mutation, tilt_hasse, Strategy};
use nakayama_qhs::tree::BinaryTree;
use nakayama_qhs::{AlgebraSpec, BasicModule, Error, Interval, PartialOrder, Vertex};

create_exception!(
    nakayama,
    NakayamaError,
    PyException,
    "Domain error raised by the library."
);

type Pair = (Vertex, Vertex);

fn py_err(e: Error) -> PyErr {
    NakayamaError::new_err(format!("{}: {e}", e.name()))
}

fn intervals(m: &[Pair]) -> PyResult<Vec<Interval>> {
    m.iter()
        .map(|&(a, b)| Interval::try_from([a, b]).map_err(|e| py_err(Error::Parse(e))))
        .collect()
}

fn module(alg: &AlgebraSpec, m: &[Pair]) -> PyResult<BasicModule> {
    let t = BasicModule::new(intervals(m)?);
    t.check_valid(alg).map_err(py_err)?;
    Ok(t)
}

fn pairs(m: impl IntoIterator<Item = Interval>) -> Vec<Pair> {
    m.into_iter().map(|iv| (iv.top, iv.socle)).collect()
}

fn order(n: usize, covers: &[Pair]) -> PyResult<PartialOrder> {
    PartialOrder::from_relations(1, n, covers).map_err(py_err)
}

/// A quadratic linear Nakayama algebra.
#[pyclass(name = "Algebra", module = "nakayama", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyAlgebra(AlgebraSpec);

#[pymethods]
impl PyAlgebra {
    #[new]
    #[pyo3(signature = (n, relations = Vec::new()))]
    fn new(n: usize, relations: Vec<Vertex>) -> PyResult<Self> {
        AlgebraSpec::new(n, relations)
            .map(PyAlgebra)
            .map_err(py_err)
    }

    /// Parses `n:l1,l2,...` or a JSON object.
    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        nakayama_qhs::io::parse_algebra(s)
            .map(PyAlgebra)
            .map_err(py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn relations(&self) -> Vec<Vertex> {
        self.0.relations().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Algebra.parse('{}')", self.0.inline())
    }

    fn __str__(&self) -> String {
        self.0.inline()
    }

    fn indecomposables(&self) -> Vec<Pair> {
        pairs(self.0.indecomposables().iter())
    }

    /// Sorted basic tilting modules; `strategy` is `"mutation"` or `"exhaustive"`.
    #[pyo3(signature = (strategy = "mutation"))]
    fn tilting_modules(&self, strategy: &str) -> PyResult<Vec<Vec<Pair>>> {
        let strategy = match strategy {
            "mutation" => Strategy::Mutation,
            "exhaustive" => Strategy::Exhaustive,
            other => return Err(py_err(Error::Parse(format!("unknown strategy {other:?}")))),
        };
        Ok(enumerate_tilting(&self.0, strategy)
            .map_err(py_err)?
            .into_iter()
            .map(|t| pairs(t.iter()))
            .collect())
    }

    /// Tilting count by the recursion.
    fn tilt_count(&self) -> u128 {
        count_tilt_recursive(&self.0)
    }

    /// Left mutation of `modules` at `summand`.
    fn mutate(&self, modules: Vec<Pair>, summand: Pair) -> PyResult<Vec<Pair>> {
        let t = module(&self.0, &modules)?;
        let x = intervals(&[summand])?[0];
        Ok(pairs(left_mutation(&self.0, &t, x).map_err(py_err)?.iter()))
    }

    fn tilt_hasse_dot(&self) -> String {
        tilt_poset_dot(&tilt_hasse(&self.0))
    }

    /// Minimal adapted orders of all structures; `strategy` is `"via-tilting"` or `"oracle"`.
    #[pyo3(signature = (strategy = "via-tilting"))]
    fn structures(&self, strategy: &str) -> PyResult<Vec<Vec<Pair>>> {
        let strategy = match strategy {
            "via-tilting" => QhsStrategy::ViaTilting,
            "oracle" => QhsStrategy::TotalOrderOracle,
            other => return Err(py_err(Error::Parse(format!("unknown strategy {other:?}")))),
        };
        Ok(enumerate_qhs(&self.0, strategy)
            .map_err(py_err)?
            .iter()
            .map(PartialOrder::covers)
            .collect())
    }

    /// `(covers, labels)` where `labels[x - 1] = T(x)`.
    fn order_from_tilting(&self, modules: Vec<Pair>) -> PyResult<(Vec<Pair>, Vec<Pair>)> {
        let ex = order_from_tilting(&self.0, &module(&self.0, &modules)?).map_err(py_err)?;
        Ok((ex.order.covers(), pairs(ex.labeled.labels)))
    }

    /// Labels `T(1), ..., T(n)` of the characteristic tilting module of the order given by its covers.
    fn char_tilting(&self, covers: Vec<Pair>) -> PyResult<Vec<Pair>> {
        let o = order(self.0.n(), &covers)?;
        Ok(pairs(char_tilting(&self.0, &o).map_err(py_err)?.labels))
    }

    /// `[(kind, start, end)]` with kind `"path"` or `"bang"`.
    fn blocks(&self) -> Vec<(String, Vertex, Vertex)> {
        block_decomposition(&self.0)
            .blocks
            .iter()
            .map(|b| {
                let kind = match b.kind {
                    BlockKind::Path => "path",
                    BlockKind::Bang => "bang",
                };
                (kind.to_string(), b.range.0, b.range.1)
            })
            .collect()
    }

    /// The admissible sequence of a tilting module, as JSON.
    fn admissible_sequence(&self, modules: Vec<Pair>) -> PyResult<String> {
        let seq = admissible_from_tilting(&self.0, &module(&self.0, &modules)?).map_err(py_err)?;
        Ok(to_json(&seq))
    }

    /// Glues a JSON admissible sequence into `(covers, labels)`.
    fn assemble(&self, sequence: &str) -> PyResult<(Vec<Pair>, Vec<Pair>)> {
        let seq: AdmissibleSequence = from_json(sequence).map_err(py_err)?;
        let a = assemble(&self.0, &seq).map_err(py_err)?;
        Ok((a.order.covers(), pairs(a.tilting.labels)))
    }

    fn classify_decomposition(&self, modules: Vec<Pair>) -> PyResult<Vertex> {
        classify_decomposition(&self.0, &module(&self.0, &modules)?).map_err(py_err)
    }
}

#[pyfunction(name = "catalan")]
fn py_catalan(m: usize) -> u128 {
    catalan(m)
}

/// `(count, qhs_b, n_sink)` for `b` glued with a radical-square-zero chain on
/// `k + 1` vertices and a path on `m + 1` vertices.
#[pyfunction]
fn nodal_count(b: &PyAlgebra, k: usize, m: usize) -> PyResult<(u128, usize, usize)> {
    let c = count_qhs_nodal(&b.0, k, m).map_err(py_err)?;
    Ok((c.formula, c.qhs_b, c.n_sink))
}

/// The binary tree of a tilting module over the path algebra on `n` vertices, as JSON.
#[pyfunction]
fn tree_of_tilting(n: usize, modules: Vec<Pair>) -> PyResult<String> {
    let tree =
        BinaryTree::from_tilting(1, n, &BasicModule::new(intervals(&modules)?)).map_err(py_err)?;
    Ok(to_json(&tree))
}

/// DOT text for the order on `[1, n]` generated by the given pairs.
#[pyfunction(name = "order_dot")]
fn py_order_dot(n: usize, covers: Vec<Pair>) -> PyResult<String> {
    Ok(order_dot(&order(n, &covers)?))
}

/// `[(id, title, passed, detail)]` for the selected criteria (all when empty).
#[pyfunction]
#[pyo3(signature = (max_n = 7, jobs = 0, criteria = Vec::new()))]
fn verify(
    py: Python<'_>,
    max_n: usize,
    jobs: usize,
    criteria: Vec<u8>,
) -> Vec<(u8, String, bool, String)> {
    let reports = py.detach(|| nakayama_qhs::verify::verify(max_n, jobs, &criteria, |_| {}));
    reports
        .into_iter()
        .map(|r| (r.id, r.title.to_string(), r.passed, r.detail))
        .collect()
}

#[pymodule]
fn nakayama(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add("NakayamaError", m.py().get_type::<NakayamaError>())?;
    m.add_function(wrap_pyfunction!(py_catalan, m)?)?;
    m.add_function(wrap_pyfunction!(nodal_count, m)?)?;
    m.add_function(wrap_pyfunction!(tree_of_tilting, m)?)?;
    m.add_function(wrap_pyfunction!(py_order_dot, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions() {
        assert_eq!(
            intervals(&[(1, 3), (2, 2)]).unwrap(),
            vec![Interval::new(1, 3), Interval::simple(2)]
        );
        assert_eq!(pairs([Interval::new(1, 3)]), vec![(1, 3)]);
        let alg = AlgebraSpec::new(3, [2]).unwrap();
        assert!(module(&alg, &[(1, 2), (2, 3), (3, 3)]).is_ok());
        assert!(order(3, &[(2, 1), (3, 2)]).unwrap().less(1, 3));
    }
}
