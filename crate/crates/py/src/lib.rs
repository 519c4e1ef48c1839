//! Python bindings. Rational numbers cross the boundary as `"num/den"`
//! strings and symmetric functions as `SymFunc` objects or dicts keyed by
//! comma-separated partitions.

use std::collections::BTreeMap;
use std::path::PathBuf;

use eulergraph::cache::DiskCache;
use eulergraph::pipeline::{self, interpolate_in_r};
use eulergraph::rational::{format_q, parse_q};
use eulergraph::{
    graph, Coefficients, DecoratedGraph, FixtureTable, GenPartition, GenusSeries, HalfEdgeGraph,
    Partition, RPolynomial, TwoPartition, WreathSymFunc,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn coefficients(cache_dir: Option<PathBuf>) -> PyResult<Coefficients> {
    let cache = match cache_dir {
        Some(dir) => Some(DiskCache::open(dir).map_err(value_error)?),
        None => None,
    };
    Ok(Coefficients::with_cache(cache))
}

fn wreath_dict(w: &WreathSymFunc) -> BTreeMap<String, String> {
    w.terms()
        .map(|(t, c)| (t.to_string(), format_q(c)))
        .collect()
}

/// An integer partition.
#[pyclass(
    name = "Partition",
    module = "eulergraph_py",
    frozen,
    from_py_object,
    eq,
    hash
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<u32>) -> Self {
        PyPartition(Partition::new(parts))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Partition::parse(text).map(PyPartition).map_err(value_error)
    }

    #[staticmethod]
    fn all_of(n: u32) -> Vec<PyPartition> {
        Partition::all_of(n).into_iter().map(PyPartition).collect()
    }

    #[getter]
    fn parts(&self) -> Vec<u32> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> u32 {
        self.0.size()
    }

    /// Centralizer order of the cycle type, as a decimal string.
    fn z(&self) -> String {
        self.0.z().to_string()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

/// A 2-partition: a finite map from partitions to partitions, naming a
/// conjugacy class of a product of wreath products.
#[pyclass(
    name = "TwoPartition",
    module = "eulergraph_py",
    frozen,
    from_py_object,
    eq,
    hash
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTwoPartition(TwoPartition);

#[pymethods]
impl PyTwoPartition {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        TwoPartition::parse(text)
            .map(PyTwoPartition)
            .map_err(value_error)
    }

    #[getter]
    fn norm(&self) -> u32 {
        self.0.norm()
    }

    /// The valence profile, e.g. `"3^2"`.
    #[getter]
    fn profile(&self) -> String {
        self.0.profile().to_string()
    }

    fn pairs(&self) -> Vec<(Vec<u32>, Vec<u32>)> {
        self.0
            .iter()
            .map(|(mu, l)| (mu.parts().to_vec(), l.parts().to_vec()))
            .collect()
    }

    fn centralizer_order(&self) -> String {
        eulergraph::centralizer_order(&self.0).to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("TwoPartition.parse({:?})", self.0.to_string())
    }
}

/// A symmetric function with rational coefficients in the power-sum basis.
#[pyclass(name = "SymFunc", module = "eulergraph_py", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct PySymFunc(eulergraph::SymFunc);

#[pymethods]
impl PySymFunc {
    /// Build from `{"3,1": "1/2", "": "1"}`.
    #[new]
    #[pyo3(signature = (terms = None))]
    fn new(terms: Option<BTreeMap<String, String>>) -> PyResult<Self> {
        let mut out = eulergraph::SymFunc::zero();
        for (k, v) in terms.unwrap_or_default() {
            let lambda = Partition::parse(&k).map_err(value_error)?;
            out.add_term(lambda, parse_q(&v).map_err(value_error)?);
        }
        Ok(PySymFunc(out))
    }

    #[staticmethod]
    fn p(parts: Vec<u32>) -> Self {
        PySymFunc(eulergraph::SymFunc::p(&parts))
    }

    #[staticmethod]
    fn h(n: u32) -> Self {
        PySymFunc(eulergraph::SymFunc::h(n))
    }

    fn coefficient(&self, parts: Vec<u32>) -> String {
        format_q(&self.0.coefficient(&Partition::new(parts)))
    }

    fn to_dict(&self) -> BTreeMap<String, String> {
        self.0
            .terms()
            .map(|(l, c)| (l.to_csv(), format_q(c)))
            .collect()
    }

    fn skew(&self, parts: Vec<u32>) -> Self {
        PySymFunc(self.0.skew(&Partition::new(parts)))
    }

    fn adams(&self, k: u32) -> PyResult<Self> {
        self.0.adams(k).map(PySymFunc).map_err(value_error)
    }

    fn degree_part(&self, n: u32) -> Self {
        PySymFunc(self.0.degree_part(n))
    }

    /// `(χ, χ of the quotient)` read off the degree-`n` part.
    fn euler(&self, n: u32) -> (String, String) {
        let (plain, quotient) = self.0.euler_specializations(n);
        (format_q(&plain), format_q(&quotient))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &PySymFunc) -> Self {
        PySymFunc(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PySymFunc) -> Self {
        PySymFunc(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PySymFunc) -> Self {
        PySymFunc(&self.0 * &other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SymFunc({})", self.0)
    }
}

/// A multigraph with loops, given by its vertex count and edge list.
#[pyclass(name = "Graph", module = "eulergraph_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(HalfEdgeGraph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        HalfEdgeGraph::new(vertex_count, edges)
            .map(PyGraph)
            .map_err(value_error)
    }

    /// Parse `vertices: 2; edges: [(0,1),(0,1)]`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        HalfEdgeGraph::parse(text).map(PyGraph).map_err(value_error)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn valences(&self) -> Vec<usize> {
        self.0.valences()
    }

    fn automorphism_count(&self) -> usize {
        graph::automorphisms(&self.0).len()
    }

    /// The Pólya–Petersen character as `{class: coefficient}`.
    fn zeta(&self) -> BTreeMap<String, String> {
        wreath_dict(&graph::polya_petersen(&self.0))
    }

    /// The character specialized to the cycle index of `Aut(G)` on edges.
    fn zeta_specialized(&self) -> PySymFunc {
        PySymFunc(graph::polya_petersen(&self.0).specialize())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A graph with vertex colours in `0..=r` and positive edge weights.
#[pyclass(
    name = "DecoratedGraph",
    module = "eulergraph_py",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyDecoratedGraph(DecoratedGraph);

#[pymethods]
impl PyDecoratedGraph {
    #[new]
    fn new(base: &PyGraph, colors: Vec<u32>, weights: Vec<u32>) -> PyResult<Self> {
        DecoratedGraph::new(base.0.clone(), colors, weights)
            .map(PyDecoratedGraph)
            .map_err(value_error)
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.0.degree()
    }

    fn automorphism_count(&self) -> usize {
        self.0.automorphism_count()
    }

    fn zeta(&self) -> BTreeMap<String, String> {
        wreath_dict(&self.0.polya_petersen())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A table of genus-`g`, `n`-point characters with provenance.
#[pyclass(
    name = "Fixtures",
    module = "eulergraph_py",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyFixtures(FixtureTable);

#[pymethods]
impl PyFixtures {
    /// The built-in genus-zero data, compactified unless `kind="open"`.
    #[staticmethod]
    #[pyo3(signature = (kind = "compactified"))]
    fn builtin(kind: &str) -> PyResult<Self> {
        let kind = eulergraph::FixtureKind::parse(kind).map_err(value_error)?;
        Ok(PyFixtures(FixtureTable::builtin_of(kind)))
    }

    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        pipeline::load_fixtures(&path)
            .map(PyFixtures)
            .map_err(|e| value_error(format!("{}: {e}", path.display())))
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.0.kind().as_str()
    }

    fn get(&self, g: i64, n: u32) -> Option<PySymFunc> {
        self.0.get(g, n).map(|e| PySymFunc(e.value.clone()))
    }

    fn cells(&self) -> Vec<(i64, u32)> {
        self.0.entries().map(|(cell, _)| cell).collect()
    }
}

/// A polynomial in `r` written in the basis `C(r+1, k)`.
#[pyclass(
    name = "RPolynomial",
    module = "eulergraph_py",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyRPolynomial(RPolynomial);

#[pymethods]
impl PyRPolynomial {
    fn evaluate(&self, r: i64) -> PySymFunc {
        PySymFunc(self.0.evaluate(r))
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// Coefficient of `C(r+1, k)` at index `k`.
    fn coefficients(&self) -> Vec<PySymFunc> {
        self.0
            .binomial_coeffs
            .iter()
            .cloned()
            .map(PySymFunc)
            .collect()
    }

    fn __str__(&self) -> String {
        self.0.binomial_form()
    }
}

fn cells_of(
    series: &GenusSeries,
    g_max: i64,
    n_max: u32,
) -> PyResult<BTreeMap<(i64, u32), PySymFunc>> {
    let mut out = BTreeMap::new();
    for g in 0..=g_max {
        for n in 0..=n_max {
            let value = series.genus_entry(g, n).map_err(value_error)?;
            out.insert((g, n), PySymFunc(value));
        }
    }
    Ok(out)
}

/// Conjugacy classes of the group attached to a valence profile such as
/// `"3^2"`, with centralizer orders.
#[pyfunction]
fn classes(profile: &str) -> PyResult<Vec<(PyTwoPartition, String)>> {
    let profile = GenPartition::parse(profile).map_err(value_error)?;
    Ok(eulergraph::class_enumeration(&profile)
        .into_iter()
        .map(|t| {
            let z = eulergraph::centralizer_order(&t).to_string();
            (PyTwoPartition(t), z)
        })
        .collect())
}

/// The graph-count coefficient of a class; with `r` and `d`, the coloured
/// count used for stable maps.
#[pyfunction]
#[pyo3(signature = (theta, r = None, d = None, cache_dir = None))]
fn o_theta(
    theta: &PyTwoPartition,
    r: Option<u32>,
    d: Option<u32>,
    cache_dir: Option<PathBuf>,
) -> PyResult<String> {
    let coeffs = coefficients(cache_dir)?;
    let value = match (r, d) {
        (Some(r), Some(d)) => coeffs.o_theta_colored(&theta.0, r, d),
        (None, None) => coeffs.o_theta(&theta.0),
        _ => return Err(PyValueError::new_err("give both r and d, or neither")),
    }
    .map_err(value_error)?;
    Ok(format_q(&value))
}

/// Compactified characters from open ones, for `g <= g_max`, `n <= n_max`.
#[pyfunction]
#[pyo3(signature = (fixtures, g_max, n_max, cache_dir = None))]
fn compactify(
    py: Python<'_>,
    fixtures: &PyFixtures,
    g_max: i64,
    n_max: u32,
    cache_dir: Option<PathBuf>,
) -> PyResult<BTreeMap<(i64, u32), PySymFunc>> {
    if fixtures.0.kind() != eulergraph::FixtureKind::Open {
        return Err(PyValueError::new_err("compactify needs open fixtures"));
    }
    let coeffs = coefficients(cache_dir)?;
    let input = fixtures.0.to_series();
    let series = py
        .detach(|| pipeline::compactified_series(&input, g_max, n_max, &coeffs))
        .map_err(value_error)?;
    cells_of(&series, g_max, n_max)
}

/// Characters of stable-map spaces to `P^r` in degree `d`.
#[pyfunction]
#[pyo3(signature = (r, d, g_max = 0, n_max = 0, fixtures = None, cache_dir = None))]
fn stable_maps(
    py: Python<'_>,
    r: u32,
    d: u32,
    g_max: i64,
    n_max: u32,
    fixtures: Option<&PyFixtures>,
    cache_dir: Option<PathBuf>,
) -> PyResult<BTreeMap<(i64, u32), PySymFunc>> {
    let table = fixtures.map_or_else(FixtureTable::builtin, |f| f.0.clone());
    let coeffs = coefficients(cache_dir)?;
    let series = py
        .detach(|| pipeline::stable_maps_series(&table, r, d, g_max, n_max, &coeffs))
        .map_err(value_error)?;
    cells_of(&series, g_max, n_max)
}

/// Fit the polynomial in `r` through `(r, value)` samples, checking it
/// against any samples beyond the `d + 2` needed.
#[pyfunction]
fn interpolate(d: u32, g: i64, n: u32, samples: Vec<(i64, PySymFunc)>) -> PyResult<PyRPolynomial> {
    let samples: Vec<_> = samples.into_iter().map(|(r, f)| (r, f.0)).collect();
    interpolate_in_r(d, g, n, &samples)
        .map(PyRPolynomial)
        .map_err(value_error)
}

#[pymodule]
fn eulergraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyTwoPartition>()?;
    m.add_class::<PySymFunc>()?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDecoratedGraph>()?;
    m.add_class::<PyFixtures>()?;
    m.add_class::<PyRPolynomial>()?;
    m.add_function(wrap_pyfunction!(classes, m)?)?;
    m.add_function(wrap_pyfunction!(o_theta, m)?)?;
    m.add_function(wrap_pyfunction!(compactify, m)?)?;
    m.add_function(wrap_pyfunction!(stable_maps, m)?)?;
    m.add_function(wrap_pyfunction!(interpolate, m)?)?;
    Ok(())
}
