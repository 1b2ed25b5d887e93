use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sofic::oracle::{self, OracleBounds};
use sofic::report::AttractorEntry;

create_exception!(pysofic, SoficError, PyValueError);

fn err(e: sofic::Error) -> PyErr {
    SoficError::new_err(e.to_string())
}

fn encode(g: &sofic::LabelledGraph, word: &[String]) -> PyResult<Vec<usize>> {
    g.encode_word(word).ok_or_else(|| SoficError::new_err(format!("word {word:?} uses letters outside the alphabet")))
}

fn vertex(g: &sofic::LabelledGraph, name: &str) -> PyResult<usize> {
    g.vertex_index(name).ok_or_else(|| SoficError::new_err(format!("unknown vertex {name:?}")))
}

/// Labelled graph presenting a sofic shift.
#[pyclass(frozen, module = "pysofic")]
struct Graph {
    inner: sofic::LabelledGraph,
}

#[pymethods]
impl Graph {
    /// Parses the line-oriented graph format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        sofic::parse_graph(text).map(|inner| Graph { inner }).map_err(err)
    }

    #[new]
    fn new(alphabet: Vec<String>, vertices: Vec<String>, edges: Vec<(String, String, String)>) -> PyResult<Self> {
        sofic::LabelledGraph::from_named(alphabet, vertices, &edges).map(|inner| Graph { inner }).map_err(err)
    }

    #[getter]
    fn alphabet(&self) -> Vec<String> {
        self.inner.alphabet().to_vec()
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String, String)> {
        let g = &self.inner;
        g.edges()
            .iter()
            .map(|e| (g.vertex_name(e.source).into(), g.letter_name(e.label).into(), g.vertex_name(e.target).into()))
            .collect()
    }

    fn is_essential(&self) -> bool {
        self.inner.is_essential()
    }

    fn essentialize(&self) -> Graph {
        Graph { inner: sofic::essentialize(&self.inner) }
    }

    /// Strongly connected components as lists of vertex names.
    fn scc(&self) -> Vec<Vec<String>> {
        let d = sofic::scc(&self.inner);
        d.components().iter().map(|c| c.iter().map(|&v| self.inner.vertex_name(v).to_string()).collect()).collect()
    }

    fn period(&self, component: Vec<String>) -> PyResult<u64> {
        let idx = component.iter().map(|v| vertex(&self.inner, v)).collect::<PyResult<Vec<_>>>()?;
        sofic::period(&self.inner, &idx).map_err(err)
    }

    #[pyo3(signature = (highlight = None))]
    fn to_dot(&self, highlight: Option<Vec<String>>) -> PyResult<String> {
        let idx =
            highlight.map(|h| h.iter().map(|v| vertex(&self.inner, v)).collect::<PyResult<Vec<_>>>()).transpose()?;
        Ok(sofic::export_dot(&self.inner, idx.as_deref()))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Graph(<{} vertices, {} edges>)", self.inner.vertex_count(), self.inner.edge_count())
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }
}

/// Eventually periodic point `left^∞ · center · right^∞`.
#[pyclass(frozen, eq, hash, module = "pysofic")]
#[derive(PartialEq, Eq, Hash)]
struct Point {
    inner: sofic::EventuallyPeriodicPoint,
}

#[pymethods]
impl Point {
    #[new]
    #[pyo3(signature = (left, center, right, origin = 0))]
    fn new(left: Vec<String>, center: Vec<String>, right: Vec<String>, origin: i64) -> PyResult<Self> {
        sofic::EventuallyPeriodicPoint::new(left, center, right, origin).map(|inner| Point { inner }).map_err(err)
    }

    #[staticmethod]
    fn periodic(word: Vec<String>) -> PyResult<Self> {
        sofic::EventuallyPeriodicPoint::periodic(word).map(|inner| Point { inner }).map_err(err)
    }

    fn shifted(&self, n: i64) -> Point {
        Point { inner: self.inner.shifted(n) }
    }

    fn letter_at(&self, i: i64) -> String {
        self.inner.letter_at(i).to_string()
    }

    fn is_periodic(&self) -> bool {
        self.inner.is_periodic()
    }

    /// Least `n > 0` with `other = σⁿ(self)`, or `None`.
    fn shift_to(&self, other: &Point) -> Option<u64> {
        sofic::shift_relation(&self.inner, &other.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Point({})", self.inner)
    }
}

/// Linking graph and derived dynamics of an essential graph.
#[pyclass(frozen, module = "pysofic")]
struct Analysis {
    inner: sofic::Analysis,
}

#[pymethods]
impl Analysis {
    #[new]
    fn new(graph: &Graph) -> PyResult<Self> {
        sofic::Analysis::new(&graph.inner).map(|inner| Analysis { inner }).map_err(err)
    }

    fn is_chain_transitive(&self) -> bool {
        self.inner.is_chain_transitive()
    }

    fn is_chain_mixing(&self) -> bool {
        self.inner.is_chain_mixing()
    }

    fn quotient_period(&self) -> Option<u64> {
        self.inner.quotient_period()
    }

    /// The linking graph `G/≈`.
    fn quotient(&self) -> Graph {
        Graph { inner: self.inner.linking().quotient().clone() }
    }

    /// Map from vertex of G to vertex of `G/≈`.
    fn projection(&self) -> Vec<(String, String)> {
        let g = self.inner.graph();
        let lg = self.inner.linking();
        (0..g.vertex_count())
            .map(|v| (g.vertex_name(v).into(), lg.quotient().vertex_name(lg.project(v)).into()))
            .collect()
    }

    /// Attractors as `(quotient_vertices, preimage_vertices)` pairs.
    fn attractors(&self) -> Vec<(Vec<String>, Vec<String>)> {
        self.inner
            .attractors()
            .iter()
            .map(|a| {
                let e = AttractorEntry::new(a, &self.inner);
                (e.quotient_vertices, e.preimage_vertices)
            })
            .collect()
    }

    /// Quotient components of `α(x)` and `ω(x)`.
    fn point_ends(&self, x: &Point) -> PyResult<(usize, usize)> {
        let ends = self.inner.point_ends(&x.inner).map_err(err)?;
        Ok((ends.alpha, ends.omega))
    }

    fn chain_related(&self, x: &Point, y: &Point) -> PyResult<bool> {
        self.inner.chain_related(&x.inner, &y.inner).map_err(err)
    }

    fn report_json(&self) -> String {
        sofic::Report::from_analysis(&self.inner, Vec::new()).to_json()
    }
}

#[pyfunction]
fn member(graph: &Graph, word: Vec<String>) -> PyResult<bool> {
    Ok(oracle::member(&encode(&graph.inner, &word)?, &graph.inner))
}

#[pyfunction]
fn linked_oracle(graph: &Graph, u: &str, v: &str) -> PyResult<bool> {
    Ok(oracle::linked_oracle(vertex(&graph.inner, u)?, vertex(&graph.inner, v)?, &graph.inner))
}

#[pyfunction]
fn chain_exists(graph: &Graph, u: Vec<String>, v: Vec<String>, n: usize) -> PyResult<bool> {
    let g = &graph.inner;
    oracle::chain_exists(&encode(g, &u)?, &encode(g, &v)?, n, g).map_err(err)
}

#[pyfunction]
fn chain_lengths(graph: &Graph, u: Vec<String>, v: Vec<String>, bound: usize) -> PyResult<Vec<usize>> {
    let g = &graph.inner;
    let set = oracle::chain_lengths(&encode(g, &u)?, &encode(g, &v)?, bound, g).map_err(err)?;
    Ok(set.achievable.into_iter().collect())
}

#[pyfunction]
fn cofinite_threshold(generators: Vec<u64>) -> PyResult<u64> {
    oracle::cofinite_threshold(&generators).map_err(err)
}

/// Runs the oracle cross-validation and returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (graph, max_word_len = 4, max_chain_len = 64, budget = oracle::DEFAULT_BUDGET))]
fn cross_validate(graph: &Graph, max_word_len: usize, max_chain_len: usize, budget: usize) -> PyResult<String> {
    let bounds = OracleBounds { max_word_len, max_chain_len, budget };
    let report = oracle::cross_validate(&graph.inner, bounds).map_err(err)?;
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

#[pymodule]
fn pysofic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SoficError", m.py().get_type::<SoficError>())?;
    m.add_class::<Graph>()?;
    m.add_class::<Point>()?;
    m.add_class::<Analysis>()?;
    m.add_function(wrap_pyfunction!(member, m)?)?;
    m.add_function(wrap_pyfunction!(linked_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(chain_exists, m)?)?;
    m.add_function(wrap_pyfunction!(chain_lengths, m)?)?;
    m.add_function(wrap_pyfunction!(cofinite_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(cross_validate, m)?)?;
    Ok(())
}
