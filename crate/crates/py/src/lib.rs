//! Python bindings. Build with `--features extension-module` and import as
//! `cobweb`.

use num_bigint::{BigInt, BigUint};
use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyException, PyValueError};
use pyo3::prelude::*;

use cobweb_core::cobweb::{CobwebPoset as Poset, IncMatrix, VertexCoord};
use cobweb_core::tiling::{CopyModel, TilingSolution};
use cobweb_core::verify::{Suite, VerifyOptions};
use cobweb_core::weighted::WeightVector;
use cobweb_core::{fence, gvpaths, seqcore, tiling, verify as suites, weighted, Error, Limits, Nat};

create_exception!(cobweb, GuardExceeded, PyException, "A size guard was hit.");

fn to_py(e: Error) -> PyErr {
    match e {
        Error::InvalidArgument(_) => PyValueError::new_err(e.to_string()),
        Error::GuardExceeded { .. } => GuardExceeded::new_err(e.to_string()),
        Error::NegativePathCount { .. } => PyArithmeticError::new_err(e.to_string()),
    }
}

fn big(n: Nat) -> BigUint {
    n.into_biguint()
}

fn limits(unsafe_limits: bool) -> Limits {
    if unsafe_limits {
        Limits::unlimited()
    } else {
        Limits::default()
    }
}

fn model(name: &str) -> PyResult<CopyModel> {
    match name {
        "aligned" => Ok(CopyModel::Aligned),
        "permuted" => Ok(CopyModel::Permuted),
        _ => Err(PyValueError::new_err(format!(
            "unknown model {name:?}; use 'aligned' or 'permuted'"
        ))),
    }
}

fn weights(ws: Vec<BigUint>, sort: bool) -> PyResult<WeightVector> {
    WeightVector::new(ws.into_iter().map(Nat::from).collect(), sort).map_err(to_py)
}

#[pyfunction]
fn fib(n: usize) -> BigUint {
    big(seqcore::fib(n))
}

#[pyfunction]
fn f_factorial(n: usize) -> BigUint {
    big(seqcore::f_factorial(n))
}

#[pyfunction]
fn f_falling(n: usize, k: usize) -> PyResult<BigUint> {
    seqcore::f_falling(n, k).map(big).map_err(to_py)
}

/// `method` is "product", "a" or "b".
#[pyfunction]
#[pyo3(signature = (n, k, method = "product"))]
fn fibonomial(n: usize, k: usize, method: &str) -> PyResult<BigUint> {
    let v = match method {
        "product" => seqcore::fibonomial(n, k),
        "a" => seqcore::fibonomial_rec(n, k, seqcore::Recurrence::A),
        "b" => seqcore::fibonomial_rec(n, k, seqcore::Recurrence::B),
        _ => return Err(PyValueError::new_err(format!("unknown method {method:?}"))),
    };
    Ok(big(v))
}

/// Coefficients of the Gaussian binomial, constant term first.
#[pyfunction]
fn q_binomial(n: usize, k: usize) -> Vec<BigInt> {
    seqcore::q_binomial(n, k).coefficients().to_vec()
}

#[pyfunction]
#[pyo3(signature = (weights, k, sort = false))]
fn c_coeff(weights: Vec<BigUint>, k: usize, sort: bool) -> PyResult<BigUint> {
    Ok(big(weighted::c_coeff(&self::weights(weights, sort)?, k)))
}

#[pyfunction]
#[pyo3(signature = (weights, k, sort = false))]
fn s_coeff(weights: Vec<BigUint>, k: usize, sort: bool) -> PyResult<BigUint> {
    weighted::s_coeff(&self::weights(weights, sort)?, k)
        .map(big)
        .map_err(to_py)
}

fn rows(m: &IncMatrix) -> Vec<Vec<BigInt>> {
    m.rows().map(<[BigInt]>::to_vec).collect()
}

/// The cobweb poset truncated to levels `1..=levels`. Vertices are `(j, s)`
/// pairs or 1-based linear indices.
#[pyclass(frozen, name = "CobwebPoset", module = "cobweb")]
struct PyCobwebPoset {
    inner: Poset,
}

#[pymethods]
impl PyCobwebPoset {
    #[new]
    fn new(levels: usize) -> PyResult<Self> {
        Poset::build(levels).map(|inner| PyCobwebPoset { inner }).map_err(to_py)
    }

    #[getter]
    fn levels(&self) -> usize {
        self.inner.max_level()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn level_sizes(&self) -> Vec<usize> {
        self.inner.level_sizes().to_vec()
    }

    fn linear_index(&self, j: usize, s: usize) -> PyResult<usize> {
        self.inner.linear_index(VertexCoord::new(j, s)).map_err(to_py)
    }

    fn coord_of(&self, x: usize) -> PyResult<(usize, usize)> {
        self.inner.coord_of(x).map(|v| (v.j, v.s)).map_err(to_py)
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        self.inner.leq(x, y)
    }

    #[pyo3(signature = (explicit = false, unsafe_limits = false))]
    fn zeta(&self, explicit: bool, unsafe_limits: bool) -> PyResult<Vec<Vec<BigInt>>> {
        let l = limits(unsafe_limits);
        let m = if explicit {
            self.inner.zeta_explicit(&l)
        } else {
            self.inner.zeta_from_order(&l)
        };
        m.map(|m| rows(&m)).map_err(to_py)
    }

    #[pyo3(signature = (unsafe_limits = false))]
    fn mobius(&self, unsafe_limits: bool) -> PyResult<Vec<Vec<BigInt>>> {
        self.inner
            .mobius(&limits(unsafe_limits))
            .map(|m| rows(&m))
            .map_err(to_py)
    }

    #[pyo3(signature = (x, y, unsafe_limits = false))]
    fn count_all_chains(&self, x: usize, y: usize, unsafe_limits: bool) -> PyResult<BigUint> {
        self.inner
            .count_all_chains(x, y, &limits(unsafe_limits))
            .map(big)
            .map_err(to_py)
    }

    /// Maximal chains from `(j, s)` up to level `n`.
    fn count_max_chains(&self, j: usize, s: usize, n: usize) -> PyResult<BigUint> {
        self.inner
            .count_max_chains_from_vertex(VertexCoord::new(j, s), n)
            .map(big)
            .map_err(to_py)
    }

    #[pyo3(signature = (j, s, n, unsafe_limits = false))]
    fn enumerate_max_chains(
        &self,
        j: usize,
        s: usize,
        n: usize,
        unsafe_limits: bool,
    ) -> PyResult<Vec<Vec<(usize, usize)>>> {
        let chains = self
            .inner
            .enumerate_max_chains(VertexCoord::new(j, s), n, &limits(unsafe_limits))
            .map_err(to_py)?;
        Ok(chains
            .into_iter()
            .map(|c| c.into_iter().map(|v| (v.j, v.s)).collect())
            .collect())
    }

    fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.inner.hasse_edges().collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "CobwebPoset(levels={}, vertices={})",
            self.inner.max_level(),
            self.inner.vertex_count()
        )
    }
}

/// A tiling of the maximal chains above one root.
#[pyclass(frozen, name = "Tiling", module = "cobweb")]
struct PyTiling {
    inner: TilingSolution,
}

#[pymethods]
impl PyTiling {
    #[getter]
    fn root(&self) -> (usize, usize) {
        (self.inner.root.j, self.inner.root.s)
    }

    #[getter]
    fn height(&self) -> usize {
        self.inner.height
    }

    #[getter]
    fn model(&self) -> String {
        self.inner.model.to_string()
    }

    /// Per copy, the positions picked on each level above the root.
    #[getter]
    fn copies(&self) -> Vec<Vec<Vec<usize>>> {
        self.inner.copies.iter().map(|c| c.chosen.clone()).collect()
    }

    /// `(chain positions, copy index)` pairs.
    #[getter]
    fn cover(&self) -> Vec<(Vec<usize>, usize)> {
        self.inner.cover.iter().map(|(ch, &i)| (ch.0.clone(), i)).collect()
    }

    fn is_valid(&self) -> bool {
        tiling::verify_tiling(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.copies.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Tiling(root=<{},{}>, height={}, model={}, copies={})",
            self.inner.root.j,
            self.inner.root.s,
            self.inner.height,
            self.inner.model,
            self.inner.copies.len()
        )
    }
}

/// `None` when no tiling exists.
#[pyfunction]
#[pyo3(signature = (k, r, m, model = "aligned", unsafe_limits = false))]
fn find_tiling(
    py: Python<'_>,
    k: usize,
    r: usize,
    m: usize,
    model: &str,
    unsafe_limits: bool,
) -> PyResult<Option<PyTiling>> {
    let model = self::model(model)?;
    let l = limits(unsafe_limits);
    let found = py.detach(|| tiling::find_tiling(k, r, m, model, &l)).map_err(to_py)?;
    Ok(found.map(|inner| PyTiling { inner }))
}

#[pyfunction]
fn aligned_obstruction(k: usize, m: usize) -> Option<String> {
    tiling::aligned_obstruction(k, m)
}

/// Number of non-intersecting path systems for the index set `r` of `{0..n}`.
#[pyfunction]
fn n_of_r(r: Vec<usize>, n: usize) -> PyResult<BigUint> {
    let set = gvpaths::IndexSet::new(r, n).map_err(to_py)?;
    gvpaths::n_of_r(&set).map(big).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, k, unsafe_limits = false))]
fn fibonomial_via_paths(n: usize, k: usize, unsafe_limits: bool) -> PyResult<BigUint> {
    gvpaths::fibonomial_via_paths(n, k, &limits(unsafe_limits))
        .map(big)
        .map_err(to_py)
}

#[pyfunction]
fn count_ideals(m: usize) -> BigUint {
    big(fence::count_ideals(m))
}

#[pyfunction]
fn beck_identities(n: usize, k: usize) -> PyResult<bool> {
    fence::beck_identities(n, k).map_err(to_py)
}

/// Runs a verification suite; returns `(suite, property, passed, detail)` rows.
#[pyfunction]
#[pyo3(signature = (suite = "all"))]
fn verify(py: Python<'_>, suite: &str) -> PyResult<Vec<(String, String, bool, String)>> {
    let suite: Suite = suite.parse().map_err(PyValueError::new_err)?;
    let reports = py.detach(|| suites::run(suite, &VerifyOptions::default()));
    Ok(reports
        .into_iter()
        .map(|r| (r.suite.to_string(), r.name.to_string(), r.passed, r.detail))
        .collect())
}

#[pymodule]
pub fn cobweb(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("GuardExceeded", m.py().get_type::<GuardExceeded>())?;
    m.add_class::<PyCobwebPoset>()?;
    m.add_class::<PyTiling>()?;
    m.add_function(wrap_pyfunction!(fib, m)?)?;
    m.add_function(wrap_pyfunction!(f_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(f_falling, m)?)?;
    m.add_function(wrap_pyfunction!(fibonomial, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(c_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(s_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(find_tiling, m)?)?;
    m.add_function(wrap_pyfunction!(aligned_obstruction, m)?)?;
    m.add_function(wrap_pyfunction!(n_of_r, m)?)?;
    m.add_function(wrap_pyfunction!(fibonomial_via_paths, m)?)?;
    m.add_function(wrap_pyfunction!(count_ideals, m)?)?;
    m.add_function(wrap_pyfunction!(beck_identities, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
