//! Numerical cross-check of the closed-form spectrum.
//!
//! The Hamiltonian `-d²/dx² + V(x)` is discretized with the three-point
//! stencil on `[-L, L]` with Dirichlet walls. Its characteristic value is
//! evaluated by the tridiagonal determinant recurrence and polished with
//! Newton's method from the analytic energies; a coarse real-axis scan
//! looks for roots the closed form did not predict.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{eval_potential, potential_bound, Couplings};
use crate::spectrum::{enumerate_spectrum, eval_wavefunction, sample_wavefunction, BoundState, FamilyLabel};

/// Relative agreement required between numeric and analytic energies.
pub const ENERGY_REL_TOL: f64 = 1e-4;
/// Largest admissible `|Im E| / |E|` of a polished root.
pub const REALITY_REL_TOL: f64 = 1e-8;
/// Largest admissible normalized residual on the finer grid of a verify run.
pub const RESIDUAL_TOL: f64 = 1e-4;
/// Admissible error reduction when the step halves.
pub const HALVING_RATIO_RANGE: [f64; 2] = [3.5, 4.5];
/// Admissible convergence order of the stencil residual.
pub const ORDER_RANGE: [f64; 2] = [1.7, 2.3];
/// Guideline for `κ_min L` below which wall truncation is no longer negligible.
pub const TRUNCATION_GUIDELINE: f64 = 14.0;

/// Grid `x_j = (j - M) h`, `j = 0..=2M`, with `M = L/h` and `ψ(±L) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscretizationSpec {
    half_width: f64,
    step: f64,
    intervals_per_side: usize,
}

impl DiscretizationSpec {
    pub const MIN_INTERVALS: usize = 16;

    pub fn new(half_width: f64, step: f64) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidDiscretization(format!(
                "half width L must be > 0, got {half_width}"
            )));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidDiscretization(format!("step h must be > 0, got {step}")));
        }
        let ratio = half_width / step;
        let m = ratio.round();
        if (ratio - m).abs() > 1e-9 * ratio.max(1.0) {
            return Err(Error::InvalidDiscretization(format!(
                "L/h must be an integer, got {ratio}"
            )));
        }
        if m < Self::MIN_INTERVALS as f64 {
            return Err(Error::InvalidDiscretization(format!(
                "L/h must be at least {}, got {m}",
                Self::MIN_INTERVALS
            )));
        }
        Ok(Self { half_width, step, intervals_per_side: m as usize })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// `M = L/h`.
    pub fn intervals_per_side(&self) -> usize {
        self.intervals_per_side
    }

    /// Number of unknowns `2M - 1`.
    pub fn interior_len(&self) -> usize {
        2 * self.intervals_per_side - 1
    }

    /// `x_j` for `j = 0..=2M`; exactly antisymmetric about the origin.
    pub fn node(&self, j: usize) -> f64 {
        (j as f64 - self.intervals_per_side as f64) * self.step
    }

    pub fn interior_nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (1..=self.interior_len()).map(|j| self.node(j))
    }

    /// Same `L` with `h/2`.
    pub fn refined(&self) -> Self {
        Self {
            half_width: self.half_width,
            step: self.step / 2.0,
            intervals_per_side: 2 * self.intervals_per_side,
        }
    }

    /// `κ L ≥ 14` guideline for the slowest-decaying state.
    pub fn truncation_ok(&self, kappa: f64) -> bool {
        kappa * self.half_width >= TRUNCATION_GUIDELINE
    }
}

/// Normalized sup-norm residual of the analytic state under the discrete
/// operator: `max_j |-δ²ψ_j + (V_j - E) ψ_j| / max_j |ψ_j|` over interior nodes.
pub fn fd_residual(c: &Couplings, s: &BoundState, d: &DiscretizationSpec) -> Result<f64> {
    let h = d.step();
    let nodes = 2 * d.intervals_per_side() + 1;
    let psi = (0..nodes)
        .map(|j| eval_wavefunction(c, s, d.node(j)))
        .collect::<Result<Vec<_>>>()?;
    let inv_h2 = 1.0 / (h * h);
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for j in 1..nodes - 1 {
        let lap = (psi[j + 1] - psi[j] * 2.0 + psi[j - 1]) * inv_h2;
        let v = eval_potential(c, d.node(j));
        let r = -lap + (v - s.energy) * psi[j];
        worst = worst.max(r.norm());
        scale = scale.max(psi[j].norm());
    }
    Ok(worst / scale)
}

/// Characteristic value `D(E) = det(h²(H - E))` and `dD/dE`, both carried as
/// `value · 2^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharDet {
    pub value: Complex64,
    pub derivative: Complex64,
    pub exponent: i64,
}

impl CharDet {
    /// Newton correction `D / D'`; independent of the common scale.
    pub fn newton_step(&self) -> Complex64 {
        self.value / self.derivative
    }

    /// `ln |D|` including the scale exponent.
    pub fn ln_abs(&self) -> f64 {
        self.value.norm().ln() + self.exponent as f64 * std::f64::consts::LN_2
    }
}

const RESCALE_BITS: i32 = 512;

/// The discretized Hamiltonian, stored as its potential samples on the
/// interior nodes.
#[derive(Debug, Clone)]
pub struct DiscreteHamiltonian {
    step: f64,
    potential: Vec<Complex64>,
}

impl DiscreteHamiltonian {
    pub fn new(c: &Couplings, d: &DiscretizationSpec) -> Self {
        let potential = d.interior_nodes().map(|x| eval_potential(c, x)).collect();
        Self { step: d.step(), potential }
    }

    /// Arbitrary potential samples on a uniform interior grid with step `step`.
    pub fn from_potential(step: f64, potential: Vec<Complex64>) -> Self {
        Self { step, potential }
    }

    pub fn len(&self) -> usize {
        self.potential.len()
    }

    pub fn is_empty(&self) -> bool {
        self.potential.is_empty()
    }

    /// Three-term recurrence `p_j = (2 + h²(V_j - E)) p_{j-1} - p_{j-2}`,
    /// differentiated alongside. It is run in difference form,
    /// `u_j = u_{j-1} + h²(V_j - E) p_{j-1}`, `p_j = p_{j-1} + u_j`, so the
    /// small term `h²(V - E)` is never added to 2. All carried quantities are
    /// rescaled by powers of two whenever they leave `[2^-512, 2^512]`.
    pub fn char_det(&self, e: Complex64) -> CharDet {
        let h2 = self.step * self.step;
        let up = 2f64.powi(RESCALE_BITS);
        let down = 2f64.powi(-RESCALE_BITS);
        let zero = Complex64::new(0.0, 0.0);

        // p_{-1} = 0, p_0 = 1, and the same for the E-derivative with zeros.
        let mut p = Complex64::new(1.0, 0.0);
        let mut u = p;
        let (mut q, mut w) = (zero, zero);
        let mut exponent = 0i64;
        for &v in &self.potential {
            let g = (v - e) * h2;
            w += g * q - p * h2;
            u += g * p;
            p += u;
            q += w;

            let size = p.l1_norm().max(u.l1_norm()).max(q.l1_norm()).max(w.l1_norm());
            if size > up {
                p *= down;
                u *= down;
                q *= down;
                w *= down;
                exponent += RESCALE_BITS as i64;
            } else if size < down && size > 0.0 {
                p *= up;
                u *= up;
                q *= up;
                w *= up;
                exponent -= RESCALE_BITS as i64;
            }
        }
        CharDet { value: p, derivative: q, exponent }
    }

    /// Newton iteration on `D` from `seed` until `|ΔE| < tol`.
    pub fn newton_polish(&self, seed: Complex64, tol: f64, max_iter: usize) -> Result<Complex64> {
        let mut e = seed;
        let mut last_step = f64::INFINITY;
        for _ in 0..max_iter {
            let cd = self.char_det(e);
            if cd.derivative.norm() == 0.0 {
                return Err(Error::DerivativeBreakdown { re: e.re, im: e.im });
            }
            let step = cd.newton_step();
            if !step.is_finite() {
                return Err(Error::DerivativeBreakdown { re: e.re, im: e.im });
            }
            e -= step;
            last_step = step.norm();
            if last_step < tol {
                return Ok(e);
            }
        }
        Err(Error::NoConvergence { seed: seed.re, iterations: max_iter, last_step })
    }
}

/// `D(E)` and `dD/dE` for the discretized Hamiltonian of `c`.
pub fn char_det(c: &Couplings, d: &DiscretizationSpec, e: Complex64) -> CharDet {
    DiscreteHamiltonian::new(c, d).char_det(e)
}

/// Newton polishing of a real seed.
pub fn newton_polish(
    c: &Couplings,
    d: &DiscretizationSpec,
    seed: f64,
    tol: f64,
    max_iter: usize,
) -> Result<Complex64> {
    DiscreteHamiltonian::new(c, d).newton_polish(Complex64::new(seed, 0.0), tol, max_iter)
}

/// Knobs of the numeric eigensolver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverSettings {
    /// Newton stopping threshold on `|ΔE|`.
    pub tol: f64,
    pub max_iter: usize,
    /// Points of the coarse real-axis scan over `[1.2 E_min, 0)`.
    pub scan_points: usize,
}

impl Default for SolverSettings {
    fn default() -> Self {
        Self { tol: 1e-9, max_iter: 60, scan_points: 1500 }
    }
}

/// A polished root with the analytic states that converged onto it.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericRoot {
    pub energy: Complex64,
    pub states: Vec<(FamilyLabel, usize)>,
}

impl NumericRoot {
    pub fn multiplicity(&self) -> usize {
        self.states.len().max(1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeedFailure {
    pub family: FamilyLabel,
    pub n: usize,
    pub seed: f64,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericSpectrum {
    /// Roots seeded from analytic energies, sorted by real part.
    pub roots: Vec<NumericRoot>,
    /// Confirmed scan roots in `[E_lo, 0)` that no analytic seed reached.
    pub unpredicted: Vec<Complex64>,
    pub failures: Vec<SeedFailure>,
    /// Lower end of the scan window.
    pub scan_floor: f64,
}

impl NumericSpectrum {
    /// All distinct roots, sorted by real part.
    pub fn energies(&self) -> Vec<Complex64> {
        let mut all: Vec<Complex64> = self
            .roots
            .iter()
            .map(|r| r.energy)
            .chain(self.unpredicted.iter().copied())
            .collect();
        all.sort_by(|a, b| a.re.total_cmp(&b.re));
        all
    }

    /// Polished root of one analytic state.
    pub fn root_of(&self, family: FamilyLabel, n: usize) -> Option<Complex64> {
        self.roots
            .iter()
            .find(|r| r.states.contains(&(family, n)))
            .map(|r| r.energy)
    }
}

/// Scan window floor: `1.2 E_min`, or `-max(bound, 1)` when nothing is predicted.
fn scan_floor(c: &Couplings, states: &[BoundState]) -> f64 {
    match states.first() {
        Some(s) => 1.2 * s.energy,
        None => -potential_bound(c).max(1.0),
    }
}

/// Candidate seeds from a real-axis scan: sign changes of `Re D` (the
/// determinant is real on the real axis for a PT-symmetric grid) and local
/// minima of the Newton step `|D/D'|` smaller than the scan spacing.
fn scan_candidates(ham: &DiscreteHamiltonian, floor: f64, points: usize) -> Vec<f64> {
    let points = points.max(2);
    let spacing = -floor / points as f64;
    let grid: Vec<f64> = (0..points).map(|k| floor + k as f64 * spacing).collect();
    let dets: Vec<CharDet> = grid
        .par_iter()
        .map(|&e| ham.char_det(Complex64::new(e, 0.0)))
        .collect();
    let steps: Vec<f64> = dets.iter().map(|cd| cd.newton_step().norm()).collect();

    let mut out = Vec::new();
    for k in 0..points {
        if k + 1 < points {
            let (a, b) = (dets[k].value.re, dets[k + 1].value.re);
            if a == 0.0 {
                out.push(grid[k]);
            } else if a.signum() != b.signum() && b != 0.0 {
                out.push(0.5 * (grid[k] + grid[k + 1]));
            }
        }
        let left = if k > 0 { steps[k - 1] } else { f64::INFINITY };
        let right = if k + 1 < points { steps[k + 1] } else { f64::INFINITY };
        if steps[k] < spacing && steps[k] <= left && steps[k] <= right {
            out.push(grid[k]);
        }
    }
    out
}

/// Roots of the discretized Hamiltonian near every analytic energy, plus any
/// confirmed roots of the coarse scan that the closed form did not predict.
pub fn numeric_spectrum(c: &Couplings, d: &DiscretizationSpec) -> NumericSpectrum {
    numeric_spectrum_with(c, d, &SolverSettings::default())
}

pub fn numeric_spectrum_with(
    c: &Couplings,
    d: &DiscretizationSpec,
    settings: &SolverSettings,
) -> NumericSpectrum {
    let ham = DiscreteHamiltonian::new(c, d);
    let states = enumerate_spectrum(c);
    let merge_radius = 10.0 * settings.tol;

    let polished: Vec<(BoundState, Result<Complex64>)> = states
        .par_iter()
        .map(|s| {
            let root = ham.newton_polish(Complex64::new(s.energy, 0.0), settings.tol, settings.max_iter);
            (*s, root)
        })
        .collect();

    let mut roots: Vec<NumericRoot> = Vec::new();
    let mut failures = Vec::new();
    for (s, root) in polished {
        match root {
            Ok(e) => match roots.iter_mut().find(|r| (r.energy - e).norm() < merge_radius) {
                Some(r) => r.states.push((s.family, s.n)),
                None => roots.push(NumericRoot { energy: e, states: vec![(s.family, s.n)] }),
            },
            Err(error) => failures.push(SeedFailure { family: s.family, n: s.n, seed: s.energy, error }),
        }
    }
    roots.sort_by(|a, b| a.energy.re.total_cmp(&b.energy.re));

    let floor = scan_floor(c, &states);
    let candidates = scan_candidates(&ham, floor, settings.scan_points);
    let confirmed: Vec<Complex64> = candidates
        .par_iter()
        .filter_map(|&e| ham.newton_polish(Complex64::new(e, 0.0), settings.tol, settings.max_iter).ok())
        .collect();
    let mut unpredicted: Vec<Complex64> = Vec::new();
    for e in confirmed {
        let in_window = e.re >= floor && e.re < 0.0;
        let known = roots.iter().any(|r| (r.energy - e).norm() < merge_radius)
            || unpredicted.iter().any(|u| (u - e).norm() < merge_radius);
        if in_window && !known {
            unpredicted.push(e);
        }
    }
    unpredicted.sort_by(|a, b| a.re.total_cmp(&b.re));

    NumericSpectrum { roots, unpredicted, failures, scan_floor: floor }
}

/// Echo of the couplings in a report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingsEcho {
    pub alpha: f64,
    pub beta: f64,
    pub epsilon: f64,
}

impl From<&Couplings> for CouplingsEcho {
    fn from(c: &Couplings) -> Self {
        Self { alpha: c.alpha(), beta: c.beta(), epsilon: c.epsilon() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub energy_rel: f64,
    pub reality_rel: f64,
    pub residual: f64,
    pub halving_ratio: [f64; 2],
    pub order: [f64; 2],
    pub newton_tol: f64,
}

impl Tolerances {
    fn with_newton_tol(newton_tol: f64) -> Self {
        Self {
            energy_rel: ENERGY_REL_TOL,
            reality_rel: REALITY_REL_TOL,
            residual: RESIDUAL_TOL,
            halving_ratio: HALVING_RATIO_RANGE,
            order: ORDER_RANGE,
            newton_tol,
        }
    }
}

/// Numeric-vs-analytic record for one analytic state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateRecord {
    pub sigma: i32,
    pub tau: i32,
    pub n: usize,
    pub analytic_energy: f64,
    pub kappa: f64,
    pub numeric_energy_re: Option<f64>,
    pub numeric_energy_im: Option<f64>,
    pub abs_deviation: Option<f64>,
    pub rel_deviation: Option<f64>,
    /// Relative deviation on the grid with `h/2`.
    pub refined_rel_deviation: Option<f64>,
    /// `deviation(h) / deviation(h/2)`.
    pub halving_ratio: Option<f64>,
    pub energy_order: Option<f64>,
    pub residual: Option<f64>,
    pub refined_residual: Option<f64>,
    pub residual_order: Option<f64>,
    /// Analytic states sharing the polished root.
    pub multiplicity: usize,
}

/// Numeric energies at one `ε`, one slot per analytic state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpsilonSample {
    pub epsilon: f64,
    pub energies_re: Vec<Option<f64>>,
    pub energies_im: Vec<Option<f64>>,
    /// `max |ψ|` on `[-1, 1]` per analytic state.
    pub max_abs_psi_near_origin: Vec<Option<f64>>,
    pub unpredicted_roots: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub threshold: String,
    pub passed: bool,
}

impl Check {
    fn at_most(name: &str, value: f64, limit: f64) -> Self {
        Self {
            name: name.into(),
            value,
            threshold: format!("<= {limit:e}"),
            passed: value <= limit,
        }
    }

    fn within(name: &str, value: f64, range: [f64; 2]) -> Self {
        Self {
            name: name.into(),
            value,
            threshold: format!("in [{}, {}]", range[0], range[1]),
            passed: value >= range[0] && value <= range[1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub couplings: CouplingsEcho,
    pub discretization: DiscretizationSpec,
    pub tolerances: Tolerances,
    pub states: Vec<StateRecord>,
    pub unpredicted_roots: Vec<[f64; 2]>,
    pub failures: Vec<String>,
    pub epsilon_scan: Vec<EpsilonSample>,
    /// Per analytic state: largest pairwise relative deviation across the scan.
    pub pairwise_deviation_per_state: Vec<Option<f64>>,
    pub max_pairwise_energy_deviation: f64,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub passed: bool,
}

impl VerificationReport {
    /// True when some seed or per-`ε` run failed to converge.
    pub fn has_convergence_failures(&self) -> bool {
        !self.failures.is_empty() || self.epsilon_scan.iter().any(|s| !s.failures.is_empty())
    }
}

fn rel(num: Complex64, analytic: f64) -> f64 {
    (num - analytic).norm() / analytic.abs()
}

fn max_opt(values: impl Iterator<Item = Option<f64>>) -> f64 {
    values.flatten().fold(0.0, f64::max)
}

fn failure_text(f: &SeedFailure) -> String {
    format!("{} n={} seed={}: {}", f.family, f.n, f.seed, f.error)
}

fn state_records(c: &Couplings, d: &DiscretizationSpec, settings: &SolverSettings) -> (Vec<StateRecord>, NumericSpectrum) {
    let fine = d.refined();
    let (coarse_spec, fine_spec) = rayon::join(
        || numeric_spectrum_with(c, d, settings),
        || numeric_spectrum_with(c, &fine, settings),
    );
    let states = enumerate_spectrum(c);
    let records = states
        .par_iter()
        .map(|s| {
            let root = coarse_spec.root_of(s.family, s.n);
            let fine_root = fine_spec.root_of(s.family, s.n);
            let dev = root.map(|e| rel(e, s.energy));
            let fine_dev = fine_root.map(|e| rel(e, s.energy));
            let halving_ratio = match (dev, fine_dev) {
                (Some(a), Some(b)) if b > 0.0 => Some(a / b),
                _ => None,
            };
            let residual = fd_residual(c, s, d).ok();
            let refined_residual = fd_residual(c, s, &fine).ok();
            let residual_order = match (residual, refined_residual) {
                (Some(a), Some(b)) if b > 0.0 => Some((a / b).log2()),
                _ => None,
            };
            let multiplicity = coarse_spec
                .roots
                .iter()
                .find(|r| r.states.contains(&(s.family, s.n)))
                .map_or(0, |r| r.multiplicity());
            StateRecord {
                sigma: s.family.sigma.as_i32(),
                tau: s.family.tau.as_i32(),
                n: s.n,
                analytic_energy: s.energy,
                kappa: s.kappa,
                numeric_energy_re: root.map(|e| e.re),
                numeric_energy_im: root.map(|e| e.im),
                abs_deviation: root.map(|e| (e - s.energy).norm()),
                rel_deviation: dev,
                refined_rel_deviation: fine_dev,
                halving_ratio,
                energy_order: halving_ratio.map(f64::log2),
                residual,
                refined_residual,
                residual_order,
                multiplicity,
            }
        })
        .collect();
    let mut merged = coarse_spec;
    merged.failures.extend(fine_spec.failures);
    merged.unpredicted.extend(fine_spec.unpredicted);
    (records, merged)
}

fn epsilon_sample(c: &Couplings, d: &DiscretizationSpec, settings: &SolverSettings) -> EpsilonSample {
    let spec = numeric_spectrum_with(c, d, settings);
    let states = enumerate_spectrum(c);
    let roots: Vec<Option<Complex64>> = states.iter().map(|s| spec.root_of(s.family, s.n)).collect();
    let max_abs_psi_near_origin = states
        .iter()
        .map(|s| sample_wavefunction(c, s, -1.0, 1.0, 1e-3).ok().map(|g| g.max_norm()))
        .collect();
    EpsilonSample {
        epsilon: c.epsilon(),
        energies_re: roots.iter().map(|r| r.map(|e| e.re)).collect(),
        energies_im: roots.iter().map(|r| r.map(|e| e.im)).collect(),
        max_abs_psi_near_origin,
        unpredicted_roots: spec.unpredicted.len(),
        failures: spec.failures.iter().map(failure_text).collect(),
    }
}

fn pairwise_deviation(samples: &[EpsilonSample], analytic: &[BoundState]) -> Vec<Option<f64>> {
    analytic
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let values: Vec<Complex64> = samples
                .iter()
                .filter_map(|smp| Some(Complex64::new(smp.energies_re[k]?, smp.energies_im[k]?)))
                .collect();
            if values.len() < samples.len() {
                return None;
            }
            let mut worst = 0.0f64;
            for i in 0..values.len() {
                for j in i + 1..values.len() {
                    worst = worst.max((values[i] - values[j]).norm() / s.energy.abs());
                }
            }
            Some(worst)
        })
        .collect()
}

fn assemble(
    c: &Couplings,
    d: &DiscretizationSpec,
    settings: &SolverSettings,
    epsilon_scan: Vec<EpsilonSample>,
) -> VerificationReport {
    let analytic = enumerate_spectrum(c);
    let (states, spectrum) = state_records(c, d, settings);
    let pairwise = pairwise_deviation(&epsilon_scan, &analytic);
    let max_pairwise = max_opt(pairwise.iter().copied());

    let mut warnings = Vec::new();
    if let Some(kappa_min) = analytic.iter().map(|s| s.kappa).reduce(f64::min) {
        if !d.truncation_ok(kappa_min) {
            warnings.push(format!(
                "kappa_min * L = {:.3} is below {TRUNCATION_GUIDELINE}; wall truncation may dominate",
                kappa_min * d.half_width()
            ));
        }
    }

    let mut failures: Vec<String> = spectrum.failures.iter().map(failure_text).collect();
    failures.extend(
        epsilon_scan
            .iter()
            .flat_map(|s| s.failures.iter().map(move |f| format!("epsilon={}: {f}", s.epsilon))),
    );

    let matched = states.iter().filter(|r| r.numeric_energy_re.is_some()).count();
    let reality = max_opt(states.iter().map(|r| {
        Some(r.numeric_energy_im?.abs() / r.numeric_energy_re?.hypot(r.numeric_energy_im?))
    }))
    .max(max_opt(epsilon_scan.iter().flat_map(|s| {
        s.energies_re
            .iter()
            .zip(&s.energies_im)
            .map(|(re, im)| Some(im.as_ref()?.abs() / re.as_ref()?.hypot(*im.as_ref()?)))
    })));
    let spurious = spectrum.unpredicted.len() + epsilon_scan.iter().map(|s| s.unpredicted_roots).sum::<usize>();

    let mut checks = vec![
        Check::at_most("unmatched_states", (analytic.len() - matched) as f64, 0.0),
        Check::at_most("energy_rel_deviation", max_opt(states.iter().map(|r| r.rel_deviation)), ENERGY_REL_TOL),
        Check::at_most("reality", reality, REALITY_REL_TOL),
        Check::at_most("unpredicted_roots", spurious as f64, 0.0),
        Check::at_most("epsilon_independence", max_pairwise, ENERGY_REL_TOL),
        Check::at_most(
            "refined_residual",
            max_opt(states.iter().map(|r| r.refined_residual)),
            RESIDUAL_TOL,
        ),
    ];
    for r in &states {
        let label = format!("({},{}) n={}", r.sigma, r.tau, r.n);
        if let Some(ratio) = r.halving_ratio {
            checks.push(Check::within(&format!("halving_ratio {label}"), ratio, HALVING_RATIO_RANGE));
        }
        if let Some(order) = r.residual_order {
            checks.push(Check::within(&format!("residual_order {label}"), order, ORDER_RANGE));
        }
    }
    let passed = checks.iter().all(|c| c.passed);

    VerificationReport {
        couplings: c.into(),
        discretization: *d,
        tolerances: Tolerances::with_newton_tol(settings.tol),
        states,
        unpredicted_roots: spectrum.unpredicted.iter().map(|e| [e.re, e.im]).collect(),
        failures,
        epsilon_scan,
        pairwise_deviation_per_state: pairwise,
        max_pairwise_energy_deviation: max_pairwise,
        checks,
        warnings,
        passed,
    }
}

/// Full check at the couplings' own `ε`: numeric roots at `h` and `h/2`,
/// residuals and convergence orders for every analytic state.
pub fn verify(c: &Couplings, d: &DiscretizationSpec) -> VerificationReport {
    verify_with(c, d, &SolverSettings::default())
}

pub fn verify_with(c: &Couplings, d: &DiscretizationSpec, settings: &SolverSettings) -> VerificationReport {
    let scan = vec![epsilon_sample(c, d, settings)];
    assemble(c, d, settings, scan)
}

/// Runs the numeric spectrum at every `ε` of `eps_list` (same `α, β`) and
/// records the spread of matched energies and the growth of `max |ψ|` near
/// the origin. Per-state records refer to `c_base` itself.
pub fn epsilon_scan(c_base: &Couplings, eps_list: &[f64], d: &DiscretizationSpec) -> Result<VerificationReport> {
    epsilon_scan_with(c_base, eps_list, d, &SolverSettings::default())
}

pub fn epsilon_scan_with(
    c_base: &Couplings,
    eps_list: &[f64],
    d: &DiscretizationSpec,
    settings: &SolverSettings,
) -> Result<VerificationReport> {
    let shifted = eps_list
        .iter()
        .map(|&e| c_base.with_epsilon(e))
        .collect::<Result<Vec<_>>>()?;
    let scan: Vec<EpsilonSample> = shifted.par_iter().map(|c| epsilon_sample(c, d, settings)).collect();
    Ok(assemble(c_base, d, settings, scan))
}
