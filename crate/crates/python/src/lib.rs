//! Python bindings. Matrices cross the boundary as lists of rows of `complex`.

use entsym_core::linalg::{Operator, C64};
use entsym_core::measures::{self, OptimizerConfig};
use entsym_core::state::{self, Bipartition, DEFAULT_RANK_TOL};
use entsym_core::symmetry;
use entsym_core::Error;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(entsym, EntsymError, PyValueError, "Raised for invalid input or failed computations.");

fn err(e: Error) -> PyErr {
    EntsymError::new_err(e.to_string())
}

fn to_rows(m: &Operator) -> Vec<Vec<C64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

fn from_rows(rows: Vec<Vec<C64>>) -> PyResult<Operator> {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    if n == 0 || m == 0 || rows.iter().any(|r| r.len() != m) {
        return Err(EntsymError::new_err("matrix must be a non-empty list of equal-length rows"));
    }
    Ok(Operator::from_fn(n, m, |i, j| rows[i][j]))
}

fn split(dims: &[usize], side_a: Option<Vec<usize>>) -> PyResult<Bipartition> {
    Bipartition::new(dims, &side_a.unwrap_or_else(|| vec![0])).map_err(err)
}

/// Unit-norm pure state on a tensor product of subsystems.
#[pyclass(name = "PureState", module = "entsym", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPureState(state::PureState);

#[pymethods]
impl PyPureState {
    #[new]
    #[pyo3(signature = (amplitudes, dims, normalize = true))]
    fn new(amplitudes: Vec<C64>, dims: Vec<usize>, normalize: bool) -> PyResult<Self> {
        let opts = state::NormalizeOptions { auto_normalize: normalize, ..Default::default() };
        let (s, _) = state::make_pure_state(amplitudes, dims, opts).map_err(err)?;
        Ok(Self(s))
    }

    /// Two-party state `Σ_i σ_i |i⟩|i⟩` in dimension `d`.
    #[staticmethod]
    fn from_schmidt(sigma: Vec<f64>, d: usize) -> PyResult<Self> {
        state::schmidt_state(&sigma, d).map(Self).map_err(err)
    }

    #[staticmethod]
    fn max_entangled(d: usize) -> PyResult<Self> {
        state::max_entangled(d).map(Self).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (dims, seed = 0))]
    fn random(dims: Vec<usize>, seed: u64) -> PyResult<Self> {
        state::random_pure(&dims, seed).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        entsym_core::io::parse_state(text).map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        entsym_core::io::write_state(&self.0)
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.0.dims().to_vec()
    }

    #[getter]
    fn amplitudes(&self) -> Vec<C64> {
        self.0.amplitudes().iter().copied().collect()
    }

    fn density(&self) -> PyDensityMatrix {
        PyDensityMatrix(self.0.to_density())
    }

    #[pyo3(signature = (side_a = None, rank_tol = DEFAULT_RANK_TOL))]
    fn schmidt(&self, side_a: Option<Vec<usize>>, rank_tol: f64) -> PyResult<PySchmidt> {
        let bp = split(self.0.dims(), side_a)?;
        state::schmidt_decompose(&self.0, &bp, rank_tol).map(PySchmidt).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("PureState(dims={:?})", self.0.dims())
    }
}

/// Validated density operator.
#[pyclass(name = "DensityMatrix", module = "entsym", frozen, from_py_object)]
#[derive(Clone)]
struct PyDensityMatrix(state::DensityMatrix);

#[pymethods]
impl PyDensityMatrix {
    #[new]
    fn new(matrix: Vec<Vec<C64>>, dims: Vec<usize>) -> PyResult<Self> {
        state::DensityMatrix::new(from_rows(matrix)?, dims).map(Self).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (dims, seed = 0))]
    fn random(dims: Vec<usize>, seed: u64) -> PyResult<Self> {
        state::random_density(&dims, seed).map(Self).map_err(err)
    }

    #[staticmethod]
    fn maximally_mixed(dims: Vec<usize>) -> PyResult<Self> {
        state::DensityMatrix::maximally_mixed(dims).map(Self).map_err(err)
    }

    #[staticmethod]
    fn mixture(states: Vec<PyDensityMatrix>, weights: Vec<f64>) -> PyResult<Self> {
        let states: Vec<_> = states.into_iter().map(|s| s.0).collect();
        state::DensityMatrix::mixture(&states, &weights).map(Self).map_err(err)
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.0.dims().to_vec()
    }

    #[getter]
    fn matrix(&self) -> Vec<Vec<C64>> {
        to_rows(self.0.matrix())
    }

    fn eigenvalues(&self) -> Vec<f64> {
        self.0.eigenvalues()
    }

    fn partial_trace(&self, keep: Vec<usize>) -> PyResult<Self> {
        state::partial_trace(&self.0, &keep).map(Self).map_err(err)
    }

    fn purify(&self) -> PyResult<PyPureState> {
        state::purify(&self.0).map(PyPureState).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("DensityMatrix(dims={:?})", self.0.dims())
    }
}

/// Schmidt decomposition `C = Y Σ Z` of a pure state across a bipartition.
#[pyclass(name = "SchmidtDecomposition", module = "entsym", frozen)]
struct PySchmidt(state::SchmidtDecomposition);

#[pymethods]
impl PySchmidt {
    #[getter]
    fn sigma(&self) -> Vec<f64> {
        self.0.sigma.clone()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank
    }

    #[getter]
    fn left(&self) -> Vec<Vec<C64>> {
        to_rows(&self.0.left)
    }

    #[getter]
    fn right(&self) -> Vec<Vec<C64>> {
        to_rows(&self.0.right)
    }

    #[getter]
    fn d_a(&self) -> usize {
        self.0.d_a()
    }

    #[getter]
    fn d_b(&self) -> usize {
        self.0.d_b()
    }

    fn is_fully_entangled(&self) -> bool {
        symmetry::is_fully_entangled(&self.0)
    }

    #[pyo3(signature = (tol = 1e-9))]
    fn is_maximally_entangled(&self, tol: f64) -> bool {
        symmetry::is_maximally_entangled(&self.0, tol)
    }

    /// Operator on side B acting on the state like `u` does on side A.
    fn related_operator(&self, u: Vec<Vec<C64>>) -> PyResult<Vec<Vec<C64>>> {
        symmetry::related_operator(&from_rows(u)?, &self.0).map(|v| to_rows(&v)).map_err(err)
    }

    /// `max_V |⟨ψ|U†⊗V|ψ⟩|` and the maximizing `V`.
    fn max_fidelity(&self, u: Vec<Vec<C64>>) -> PyResult<(f64, Vec<Vec<C64>>)> {
        let r = measures::max_fidelity_unitary(&from_rows(u)?, &self.0).map_err(err)?;
        Ok((r.value, to_rows(&r.v_opt)))
    }

    fn min_fidelity(&self) -> f64 {
        measures::min_fidelity_pure(&self.0)
    }

    /// Monte Carlo estimate as `(value, std_error)`.
    #[pyo3(signature = (n_samples = 100_000, seed = 0))]
    fn symmetry_of_entanglement(&self, py: Python<'_>, n_samples: usize, seed: u64) -> PyResult<(f64, f64)> {
        let e = py.detach(|| measures::symmetry_of_entanglement_pure(&self.0, n_samples, seed)).map_err(err)?;
        Ok((e.value, e.std_error))
    }

    fn entropy(&self) -> f64 {
        measures::entanglement_entropy(&self.0)
    }

    fn negativity(&self) -> f64 {
        measures::negativity_pure(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("SchmidtDecomposition(sigma={:?}, rank={})", self.0.sigma, self.0.rank)
    }
}

/// Quantum operation given by Kraus operators.
#[pyclass(name = "KrausMap", module = "entsym", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyKrausMap(symmetry::KrausMap);

#[pymethods]
impl PyKrausMap {
    #[new]
    fn new(ops: Vec<Vec<Vec<C64>>>) -> PyResult<Self> {
        let ops = ops.into_iter().map(from_rows).collect::<PyResult<Vec<_>>>()?;
        let (out_dim, in_dim) = ops.first().map_or((0, 0), |k| k.shape());
        symmetry::KrausMap::new(in_dim, out_dim, ops).map(Self).map_err(err)
    }

    #[staticmethod]
    fn amplitude_damping(gamma: f64) -> PyResult<Self> {
        symmetry::KrausMap::amplitude_damping(gamma).map(Self).map_err(err)
    }

    #[getter]
    fn ops(&self) -> Vec<Vec<Vec<C64>>> {
        self.0.ops().iter().map(to_rows).collect()
    }

    fn apply(&self, rho: Vec<Vec<C64>>) -> PyResult<Vec<Vec<C64>>> {
        let rho = from_rows(rho)?;
        if rho.shape() != (self.0.in_dim(), self.0.in_dim()) {
            return Err(err(Error::DimensionMismatch { expected: self.0.in_dim(), found: rho.nrows() }));
        }
        Ok(to_rows(&self.0.apply(&rho)))
    }

    /// Related map on side B with its CP/TP/unital diagnostics.
    fn related(&self, sd: PyRef<'_, PySchmidt>) -> PyResult<PySymmetryReport> {
        symmetry::analyze_related_map(&self.0, &sd.0).map(PySymmetryReport).map_err(err)
    }
}

#[pyclass(name = "SymmetryReport", module = "entsym", frozen)]
struct PySymmetryReport(symmetry::SymmetryReport);

#[pymethods]
impl PySymmetryReport {
    #[getter]
    fn residual(&self) -> f64 {
        self.0.residual
    }
    #[getter]
    fn is_cp(&self) -> bool {
        self.0.related_is_cp
    }
    #[getter]
    fn is_tp(&self) -> bool {
        self.0.related_is_tp
    }
    #[getter]
    fn is_unital(&self) -> bool {
        self.0.related_is_unital
    }
    #[getter]
    fn choi_min_eigenvalue(&self) -> f64 {
        self.0.choi_min_eigenvalue
    }
    #[getter]
    fn tp_deviation(&self) -> f64 {
        self.0.tp_deviation
    }
    #[getter]
    fn unital_deviation(&self) -> f64 {
        self.0.unital_deviation
    }
    #[getter]
    fn related(&self) -> PyKrausMap {
        PyKrausMap(self.0.related.clone())
    }
}

/// Numerical `min_U max_V |Tr[(U†⊗V)ρ]|` as `(value, argmin_u, converged_restarts)`.
#[pyfunction]
#[pyo3(signature = (rho, side_a = None, restarts = 16, seed = 0))]
fn min_fidelity(
    py: Python<'_>,
    rho: PyRef<'_, PyDensityMatrix>,
    side_a: Option<Vec<usize>>,
    restarts: usize,
    seed: u64,
) -> PyResult<(f64, Vec<Vec<C64>>, usize)> {
    let bp = split(rho.0.dims(), side_a)?;
    let cfg = OptimizerConfig { n_restarts: restarts, seed, ..Default::default() };
    let rho = rho.0.clone();
    let r = py.detach(|| measures::min_fidelity_numeric(&rho, &bp, &cfg)).map_err(err)?;
    Ok((r.value, to_rows(&r.argmin), r.converged_restarts))
}

/// Monte Carlo `E_S` of a density operator as `(value, std_error)`.
#[pyfunction]
#[pyo3(signature = (rho, side_a = None, n_samples = 100_000, seed = 0))]
fn symmetry_of_entanglement(
    py: Python<'_>,
    rho: PyRef<'_, PyDensityMatrix>,
    side_a: Option<Vec<usize>>,
    n_samples: usize,
    seed: u64,
) -> PyResult<(f64, f64)> {
    let bp = split(rho.0.dims(), side_a)?;
    let rho = rho.0.clone();
    let e = py.detach(|| measures::symmetry_of_entanglement(&rho, &bp, n_samples, seed)).map_err(err)?;
    Ok((e.value, e.std_error))
}

#[pyfunction]
fn separable_baseline(d: usize) -> PyResult<f64> {
    measures::separable_baseline(d).map_err(err)
}

#[pyfunction]
fn normalized_symmetry(value: f64, d: usize) -> PyResult<f64> {
    measures::normalized_symmetry(value, d).map_err(err)
}

/// Haar-random unitary for sample `k` of `seed`.
#[pyfunction]
#[pyo3(signature = (d, seed = 0, k = 0))]
fn haar_unitary(d: usize, seed: u64, k: u64) -> PyResult<Vec<Vec<C64>>> {
    if d == 0 {
        return Err(err(Error::DomainError("dimension must be positive".into())));
    }
    Ok(to_rows(&entsym_core::haar::haar_unitary_seeded(d, seed, k)))
}

#[pymodule]
fn entsym(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("EntsymError", m.py().get_type::<EntsymError>())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyPureState>()?;
    m.add_class::<PyDensityMatrix>()?;
    m.add_class::<PySchmidt>()?;
    m.add_class::<PyKrausMap>()?;
    m.add_class::<PySymmetryReport>()?;
    m.add_function(wrap_pyfunction!(min_fidelity, m)?)?;
    m.add_function(wrap_pyfunction!(symmetry_of_entanglement, m)?)?;
    m.add_function(wrap_pyfunction!(separable_baseline, m)?)?;
    m.add_function(wrap_pyfunction!(normalized_symmetry, m)?)?;
    m.add_function(wrap_pyfunction!(haar_unitary, m)?)?;
    Ok(())
}
