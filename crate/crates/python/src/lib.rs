//! Python bindings for the regularized PT-symmetric Pöschl–Teller model.
//!
//! ```python
//! import rpt_py
//! c = rpt_py.Couplings(3.3, 1.1, 0.5)
//! [s.energy for s in rpt_py.enumerate_spectrum(c)]   # [-11.56, -1.96, -1.44]
//! ```

use rpt::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use rpt::spectrum::{self, FamilyLabel, Sign};
use rpt::verify::{self, DiscretizationSpec};
use rpt::{potential, specialfn};

fn to_py_err(e: rpt::Error) -> PyErr {
    match e {
        rpt::Error::NoConvergence { .. } | rpt::Error::DerivativeBreakdown { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn family(sigma: i32, tau: i32) -> PyResult<FamilyLabel> {
    let sign = |v: i32, name: &str| {
        Sign::from_i32(v).ok_or_else(|| PyValueError::new_err(format!("{name} must be +1 or -1, got {v}")))
    };
    Ok(FamilyLabel::new(sign(sigma, "sigma")?, sign(tau, "tau")?))
}

fn grid(half_width: f64, step: f64) -> PyResult<DiscretizationSpec> {
    DiscretizationSpec::new(half_width, step).map_err(to_py_err)
}

/// Model parameters (alpha, beta, epsilon) with alpha, beta > 0 and 0 < epsilon < pi/2.
#[pyclass(name = "Couplings", frozen, from_py_object)]
#[derive(Clone, Copy)]
struct PyCouplings(rpt::Couplings);

#[pymethods]
impl PyCouplings {
    #[new]
    fn new(alpha: f64, beta: f64, epsilon: f64) -> PyResult<Self> {
        rpt::Couplings::new(alpha, beta, epsilon).map(Self).map_err(to_py_err)
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.0.alpha()
    }

    #[getter]
    fn beta(&self) -> f64 {
        self.0.beta()
    }

    #[getter]
    fn epsilon(&self) -> f64 {
        self.0.epsilon()
    }

    /// A = alpha - 1/2.
    #[getter]
    fn a(&self) -> f64 {
        self.0.a()
    }

    /// B = beta + 1/2.
    #[getter]
    fn b(&self) -> f64 {
        self.0.b()
    }

    fn with_epsilon(&self, epsilon: f64) -> PyResult<Self> {
        self.0.with_epsilon(epsilon).map(Self).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Couplings(alpha={}, beta={}, epsilon={})",
            self.0.alpha(),
            self.0.beta(),
            self.0.epsilon()
        )
    }
}

/// One closed-form bound state.
#[pyclass(name = "BoundState", frozen, from_py_object)]
#[derive(Clone, Copy)]
struct PyBoundState(spectrum::BoundState);

#[pymethods]
impl PyBoundState {
    #[new]
    fn new(couplings: &PyCouplings, sigma: i32, tau: i32, n: usize) -> PyResult<Self> {
        spectrum::BoundState::new(&couplings.0, family(sigma, tau)?, n)
            .map(Self)
            .map_err(to_py_err)
    }

    #[getter]
    fn sigma(&self) -> i32 {
        self.0.family.sigma.as_i32()
    }

    #[getter]
    fn tau(&self) -> i32 {
        self.0.family.tau.as_i32()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn energy(&self) -> f64 {
        self.0.energy
    }

    #[getter]
    fn kappa(&self) -> f64 {
        self.0.kappa
    }

    #[getter]
    fn p_sinh(&self) -> f64 {
        self.0.p_sinh
    }

    #[getter]
    fn p_cosh(&self) -> f64 {
        self.0.p_cosh
    }

    fn __repr__(&self) -> String {
        format!(
            "BoundState(family={}, n={}, energy={}, kappa={})",
            self.0.family, self.0.n, self.0.energy, self.0.kappa
        )
    }
}

fn wrap_states(states: Vec<spectrum::BoundState>) -> Vec<PyBoundState> {
    states.into_iter().map(PyBoundState).collect()
}

#[pyfunction]
fn jacobi_poly(n: usize, p: f64, q: f64, w: Complex64) -> Complex64 {
    specialfn::jacobi_poly(n, p, q, w)
}

/// 2F1(-n, a; c; w) as a finite sum.
#[pyfunction]
fn terminating_2f1(n: usize, a: f64, c: f64, w: Complex64) -> PyResult<Complex64> {
    specialfn::terminating_2f1(n, a, c, w).map_err(to_py_err)
}

/// n! Gamma(1 + t) / Gamma(n + 1 + t).
#[pyfunction]
fn gamma_ratio(n: usize, t: f64) -> PyResult<f64> {
    specialfn::gamma_ratio(n, t).map_err(to_py_err)
}

#[pyfunction]
fn eval_potential(couplings: &PyCouplings, x: f64) -> Complex64 {
    potential::eval_potential(&couplings.0, x)
}

#[pyfunction]
fn potential_bound(couplings: &PyCouplings) -> f64 {
    potential::potential_bound(&couplings.0)
}

#[pyfunction]
fn levai_g(couplings: &PyCouplings, x: f64) -> Complex64 {
    potential::levai_g(&couplings.0, x)
}

#[pyfunction]
fn small_eps_expansion(x: f64, eps: f64) -> PyResult<Complex64> {
    potential::small_eps_expansion(x, eps).map_err(to_py_err)
}

#[pyfunction]
fn n_max(couplings: &PyCouplings, sigma: i32, tau: i32) -> PyResult<Option<usize>> {
    Ok(spectrum::n_max(&couplings.0, family(sigma, tau)?))
}

#[pyfunction]
fn energy(couplings: &PyCouplings, sigma: i32, tau: i32, n: usize) -> PyResult<f64> {
    spectrum::energy(&couplings.0, family(sigma, tau)?, n).map_err(to_py_err)
}

#[pyfunction]
fn enumerate_spectrum(couplings: &PyCouplings) -> Vec<PyBoundState> {
    wrap_states(spectrum::enumerate_spectrum(&couplings.0))
}

#[pyfunction]
fn s_wave_subset(couplings: &PyCouplings) -> Vec<PyBoundState> {
    wrap_states(spectrum::s_wave_subset(&couplings.0))
}

#[pyfunction]
fn eval_wavefunction(couplings: &PyCouplings, state: &PyBoundState, x: f64) -> PyResult<Complex64> {
    spectrum::eval_wavefunction(&couplings.0, &state.0, x).map_err(to_py_err)
}

/// Returns (x values, complex psi values) on the uniform grid.
#[pyfunction]
fn sample_wavefunction(
    couplings: &PyCouplings,
    state: &PyBoundState,
    x_min: f64,
    x_max: f64,
    h: f64,
) -> PyResult<(Vec<f64>, Vec<Complex64>)> {
    let g = spectrum::sample_wavefunction(&couplings.0, &state.0, x_min, x_max, h).map_err(to_py_err)?;
    Ok((g.nodes().collect(), g.values().to_vec()))
}

#[pyfunction]
#[pyo3(signature = (couplings, state, half_width=12.0, step=1e-3))]
fn fd_residual(couplings: &PyCouplings, state: &PyBoundState, half_width: f64, step: f64) -> PyResult<f64> {
    verify::fd_residual(&couplings.0, &state.0, &grid(half_width, step)?).map_err(to_py_err)
}

/// Numeric eigenvalues of the discretized Hamiltonian, sorted by real part.
#[pyfunction]
#[pyo3(signature = (couplings, half_width=12.0, step=2e-3))]
fn numeric_spectrum(py: Python<'_>, couplings: &PyCouplings, half_width: f64, step: f64) -> PyResult<Vec<Complex64>> {
    let d = grid(half_width, step)?;
    let c = couplings.0;
    Ok(py.detach(|| verify::numeric_spectrum(&c, &d)).energies())
}

/// Full verification report as a JSON string.
#[pyfunction]
#[pyo3(signature = (couplings, half_width=12.0, step=2e-3))]
fn verify_json(py: Python<'_>, couplings: &PyCouplings, half_width: f64, step: f64) -> PyResult<String> {
    let d = grid(half_width, step)?;
    let c = couplings.0;
    let report = py.detach(|| verify::verify(&c, &d));
    serde_json::to_string(&report).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Epsilon scan report as a JSON string.
#[pyfunction]
#[pyo3(signature = (couplings, eps_list, half_width=12.0, step=2e-3))]
fn epsilon_scan_json(
    py: Python<'_>,
    couplings: &PyCouplings,
    eps_list: Vec<f64>,
    half_width: f64,
    step: f64,
) -> PyResult<String> {
    let d = grid(half_width, step)?;
    let c = couplings.0;
    let report = py.detach(|| verify::epsilon_scan(&c, &eps_list, &d)).map_err(to_py_err)?;
    serde_json::to_string(&report).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pymodule]
fn rpt_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCouplings>()?;
    m.add_class::<PyBoundState>()?;
    m.add_function(wrap_pyfunction!(jacobi_poly, m)?)?;
    m.add_function(wrap_pyfunction!(terminating_2f1, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(eval_potential, m)?)?;
    m.add_function(wrap_pyfunction!(potential_bound, m)?)?;
    m.add_function(wrap_pyfunction!(levai_g, m)?)?;
    m.add_function(wrap_pyfunction!(small_eps_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(n_max, m)?)?;
    m.add_function(wrap_pyfunction!(energy, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(s_wave_subset, m)?)?;
    m.add_function(wrap_pyfunction!(eval_wavefunction, m)?)?;
    m.add_function(wrap_pyfunction!(sample_wavefunction, m)?)?;
    m.add_function(wrap_pyfunction!(fd_residual, m)?)?;
    m.add_function(wrap_pyfunction!(numeric_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    m.add_function(wrap_pyfunction!(epsilon_scan_json, m)?)?;
    Ok(())
}
