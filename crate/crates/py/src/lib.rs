//! Python bindings: graphs, 3-arc graphs, exact domination, the bound
//! constructions, and certificate-based recognition.
//!
//! Structured results (plans, bound records, certificates) cross the
//! boundary as JSON text with the same schema the CLI emits; callers
//! decode them with `json.loads`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use threearc::constructions as cons;
use threearc::domination::{gamma_exact as solve, vi_set};
use threearc::recognition::{self as rec, CharacterizationCertificate};
use threearc::{generators, Error};

fn to_py(e: Error) -> PyErr {
    if e.is_resource_limit() || matches!(e, Error::Verification(_)) {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("result types serialize")
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "pythreearc", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
pub struct PyGraph {
    inner: threearc::Graph,
}

impl From<threearc::Graph> for PyGraph {
    fn from(inner: threearc::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        threearc::Graph::from_edges(n, edges)
            .map(PyGraph::from)
            .map_err(to_py)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        threearc::Graph::from_graph6(text)
            .map(PyGraph::from)
            .map_err(to_py)
    }

    /// Edge list text (`u v` per line) or a graph6 line.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        threearc::Graph::parse_any(text)
            .map(PyGraph::from)
            .map_err(to_py)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_claw_free(&self) -> bool {
        self.inner.is_claw_free()
    }

    fn to_graph6(&self) -> String {
        self.inner.to_graph6()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(order={}, size={}, graph6={:?})",
            self.inner.order(),
            self.inner.size(),
            self.inner.to_graph6()
        )
    }
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    generators::generate(&generators::GraphFamilySpec::Cycle { n })
        .map(PyGraph::from)
        .map_err(to_py)
}

#[pyfunction]
fn complete(n: usize) -> PyGraph {
    generators::complete(n).into()
}

#[pyfunction]
fn star(k: usize) -> PyGraph {
    generators::star(k).into()
}

#[pyfunction]
fn friendship(k: usize) -> PyResult<PyGraph> {
    generators::generate(&generators::GraphFamilySpec::Friendship { k })
        .map(PyGraph::from)
        .map_err(to_py)
}

#[pyfunction]
fn two_cliques(s: usize, t: usize) -> PyResult<PyGraph> {
    generators::generate(&generators::GraphFamilySpec::TwoCliques { s, t })
        .map(PyGraph::from)
        .map_err(to_py)
}

#[pyfunction]
fn petersen() -> PyGraph {
    generators::petersen().into()
}

#[pyfunction]
fn cone(h: &PyGraph) -> PyGraph {
    rec::cone(&h.inner).into()
}

/// X(G) and the arc `(tail, head)` behind each of its vertices.
#[pyfunction]
fn three_arc_graph(g: &PyGraph) -> (PyGraph, Vec<(usize, usize)>) {
    let x = threearc::threearc::three_arc_graph(&g.inner);
    let labels = x.labels.iter().map(|a| (a.tail, a.head)).collect();
    (x.graph.into(), labels)
}

/// Minimum dominating set as `(size, vertices)`. With `min_degree = i`
/// only vertices of degree at least i must be dominated.
#[pyfunction]
#[pyo3(signature = (g, min_degree = None))]
fn gamma_exact(g: &PyGraph, min_degree: Option<usize>) -> PyResult<(usize, Vec<usize>)> {
    let target = min_degree.map(|i| vi_set(&g.inner, i));
    let cert = solve(&g.inner, target.as_ref()).map_err(to_py)?;
    Ok((cert.size, cert.vertices))
}

/// The general bound as a fraction string, e.g. `"5"`.
#[pyfunction]
fn theorem3_bound(g: &PyGraph) -> PyResult<String> {
    let b = cons::theorem3_bound(&g.inner, cons::DEFAULT_GAMMA_SET_CAP).map_err(to_py)?;
    Ok(b.value.to_string())
}

/// JSON record of the minimum-degree bounds (entries are fraction strings or null).
#[pyfunction]
fn theorem4_bounds(g: &PyGraph) -> PyResult<String> {
    cons::theorem4_bounds(&g.inner)
        .map(|b| to_json(&b))
        .map_err(to_py)
}

/// Arc-domination plan as JSON. `method` is `thm3`, `thm4` or `clawfree`.
#[pyfunction]
#[pyo3(signature = (g, method = "thm3"))]
fn dominate_x(g: &PyGraph, method: &str) -> PyResult<String> {
    let plan = match method {
        "thm3" => cons::theorem3_construct(&g.inner),
        "thm4" => cons::theorem4b_construct(&g.inner),
        "clawfree" => cons::theorem5_clawfree_construct(&g.inner),
        other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
    }
    .map_err(to_py)?;
    Ok(to_json(&plan))
}

/// Certificate of X(H) as JSON with keys v1, v2, e.
#[pyfunction]
fn derive_certificate(h: &PyGraph) -> PyResult<String> {
    rec::derive_certificate(&h.inner)
        .map(|c| to_json(&c))
        .map_err(to_py)
}

/// `(valid, condition, witness)`; condition and witness are `None` when valid.
#[pyfunction]
fn verify_certificate(
    g: &PyGraph,
    cert_json: &str,
) -> PyResult<(bool, Option<String>, Option<String>)> {
    let cert: CharacterizationCertificate = serde_json::from_str(cert_json)
        .map_err(|e| PyValueError::new_err(format!("certificate: {e}")))?;
    let check = rec::verify_certificate(&g.inner, &cert).map_err(to_py)?;
    Ok(match check.violation {
        None => (true, None, None),
        Some(v) => (
            false,
            Some(to_json(&v.condition).trim_matches('"').to_string()),
            Some(v.witness),
        ),
    })
}

/// A graph H from a valid certificate, with X(H) isomorphic to `g`.
#[pyfunction]
fn construct_h(g: &PyGraph, cert_json: &str) -> PyResult<PyGraph> {
    let cert: CharacterizationCertificate = serde_json::from_str(cert_json)
        .map_err(|e| PyValueError::new_err(format!("certificate: {e}")))?;
    rec::construct_h(&g.inner, &cert)
        .map(|r| r.h.into())
        .map_err(to_py)
}

/// Some H with X(H) isomorphic to `g`, or `None` when no such H exists.
#[pyfunction]
#[pyo3(signature = (g, limit = rec::DEFAULT_RECOGNITION_LIMIT))]
fn recognize(g: &PyGraph, limit: usize) -> PyResult<Option<PyGraph>> {
    let found = rec::recognize_small(&g.inner, limit, rec::DEFAULT_CANDIDATE_CAP).map_err(to_py)?;
    Ok(found.map(|r| r.h.into()))
}

#[pyfunction]
fn embed_in_cone_check(h: &PyGraph) -> bool {
    rec::embed_in_cone_check(&h.inner).holds
}

/// Adds every class and function to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(friendship, m)?)?;
    m.add_function(wrap_pyfunction!(two_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(petersen, m)?)?;
    m.add_function(wrap_pyfunction!(cone, m)?)?;
    m.add_function(wrap_pyfunction!(three_arc_graph, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_exact, m)?)?;
    m.add_function(wrap_pyfunction!(theorem3_bound, m)?)?;
    m.add_function(wrap_pyfunction!(theorem4_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(dominate_x, m)?)?;
    m.add_function(wrap_pyfunction!(derive_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(construct_h, m)?)?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(embed_in_cone_check, m)?)?;
    Ok(())
}

#[pymodule]
fn pythreearc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
