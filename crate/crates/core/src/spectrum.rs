//! Closed-form bound states of the regularized model.
//!
//! A state is labelled by a sign family `(σ, τ)` and a degree `N`. It exists
//! iff `2N + 1 < -σα - τβ`, has energy `E = -(2N + 1 + σα + τβ)²` and, with
//! the normalization `C₁ = 1, C₂ = 0`, the wavefunction
//!
//! ```text
//! ψ(x) = sinh(r)^{τβ+1/2} cosh(r)^{σα+1/2} · N!Γ(1+τβ)/Γ(N+1+τβ) · P_N^{(τβ, σα)}(cosh 2r).
//! ```
//!
//! Fractional powers take the principal branch. On the contour `sinh r`
//! stays in the open lower half-plane and `cosh r` in the open right
//! half-plane, so neither crosses the cut.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{cosh_shifted, levai_g, sinh_shifted, ComplexGridFunction, Couplings};
use crate::specialfn::{gamma_ratio, jacobi_poly, HypergeometricParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Minus => -1.0,
            Sign::Plus => 1.0,
        }
    }

    pub fn from_i32(s: i32) -> Option<Self> {
        match s {
            -1 => Some(Sign::Minus),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

/// Sign pair `(σ, τ)` in the exponents `2ν = σα + 1/2`, `2μ = τβ + 1/2`.
///
/// Ordered `(-,-) < (-,+) < (+,-) < (+,+)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyLabel {
    pub sigma: Sign,
    pub tau: Sign,
}

impl FamilyLabel {
    pub const MINUS_MINUS: Self = Self::new(Sign::Minus, Sign::Minus);
    pub const MINUS_PLUS: Self = Self::new(Sign::Minus, Sign::Plus);
    pub const PLUS_MINUS: Self = Self::new(Sign::Plus, Sign::Minus);
    pub const PLUS_PLUS: Self = Self::new(Sign::Plus, Sign::Plus);

    /// All four labels in canonical order.
    pub const ALL: [Self; 4] = [
        Self::MINUS_MINUS,
        Self::MINUS_PLUS,
        Self::PLUS_MINUS,
        Self::PLUS_PLUS,
    ];

    pub const fn new(sigma: Sign, tau: Sign) -> Self {
        Self { sigma, tau }
    }

    pub fn sigma_alpha(&self, c: &Couplings) -> f64 {
        self.sigma.value() * c.alpha()
    }

    pub fn tau_beta(&self, c: &Couplings) -> f64 {
        self.tau.value() * c.beta()
    }

    /// `-σα - τβ`, the strict upper bound on `2N + 1`.
    pub fn admissibility_limit(&self, c: &Couplings) -> f64 {
        -self.sigma_alpha(c) - self.tau_beta(c)
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.sigma, self.tau)
    }
}

/// One admissible bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub family: FamilyLabel,
    pub n: usize,
    pub energy: f64,
    /// Asymptotic decay rate `√(-E)`.
    pub kappa: f64,
    /// Exponent of `sinh r`: `τβ + 1/2`.
    pub p_sinh: f64,
    /// Exponent of `cosh r`: `σα + 1/2`.
    pub p_cosh: f64,
}

impl BoundState {
    pub fn new(c: &Couplings, family: FamilyLabel, n: usize) -> Result<Self> {
        let energy = energy(c, family, n)?;
        let sa = family.sigma_alpha(c);
        let tb = family.tau_beta(c);
        Ok(Self {
            family,
            n,
            energy,
            kappa: family.admissibility_limit(c) - (2.0 * n as f64 + 1.0),
            p_sinh: tb + 0.5,
            p_cosh: sa + 0.5,
        })
    }

    /// Jacobi parameters `(p, q) = (τβ, σα)`.
    pub fn jacobi_params(&self) -> (f64, f64) {
        (self.p_sinh - 0.5, self.p_cosh - 0.5)
    }

    pub fn hypergeometric_params(&self) -> HypergeometricParams {
        let (tb, sa) = self.jacobi_params();
        HypergeometricParams::new(self.n, sa, tb)
    }
}

/// Largest `N ≥ 0` with `2N + 1 < -σα - τβ`, if any.
pub fn n_max(c: &Couplings, f: FamilyLabel) -> Option<usize> {
    let limit = f.admissibility_limit(c);
    if limit <= 1.0 {
        return None;
    }
    let mut n = ((limit - 1.0) / 2.0).floor() as usize;
    while n > 0 && 2.0 * n as f64 + 1.0 >= limit {
        n -= 1;
    }
    while 2.0 * (n + 1) as f64 + 1.0 < limit {
        n += 1;
    }
    Some(n)
}

/// `E = -(2n + 1 + σα + τβ)²`. Independent of `ε` by construction.
pub fn energy(c: &Couplings, f: FamilyLabel, n: usize) -> Result<f64> {
    let limit = f.admissibility_limit(c);
    let lead = 2.0 * n as f64 + 1.0;
    if lead >= limit {
        return Err(Error::NotABoundState { family: f.to_string(), n, limit });
    }
    Ok(-(lead - limit).powi(2))
}

fn energy_order(a: &BoundState, b: &BoundState) -> Ordering {
    a.energy
        .total_cmp(&b.energy)
        .then(a.family.cmp(&b.family))
        .then(a.n.cmp(&b.n))
}

/// All states of one family, ascending in `N`.
pub fn family_states(c: &Couplings, f: FamilyLabel) -> Vec<BoundState> {
    match n_max(c, f) {
        Some(top) => (0..=top)
            .map(|n| BoundState::new(c, f, n).expect("n <= n_max is admissible"))
            .collect(),
        None => Vec::new(),
    }
}

/// Every admissible state, sorted by energy; exact ties ordered by family.
pub fn enumerate_spectrum(c: &Couplings) -> Vec<BoundState> {
    let mut states: Vec<BoundState> = FamilyLabel::ALL
        .iter()
        .flat_map(|&f| family_states(c, f))
        .collect();
    states.sort_by(energy_order);
    states
}

/// The `(σ, τ) = (-, +)` states: continuations of the singular s-wave levels.
pub fn s_wave_subset(c: &Couplings) -> Vec<BoundState> {
    family_states(c, FamilyLabel::MINUS_PLUS)
}

fn check_state(c: &Couplings, s: &BoundState) -> Result<()> {
    energy(c, s.family, s.n).map(|_| ())
}

/// `ψ(x)` on the contour with `C₁ = 1, C₂ = 0`.
pub fn eval_wavefunction(c: &Couplings, s: &BoundState, x: f64) -> Result<Complex64> {
    check_state(c, s)?;
    let (p, q) = s.jacobi_params();
    let norm = gamma_ratio(s.n, p)?;
    Ok(envelope(c, s, x) * jacobi_poly(s.n, p, q, levai_g(c, x)) * norm)
}

// sinh(r)^{p_sinh} cosh(r)^{p_cosh}, principal branch, combined in log space.
fn envelope(c: &Couplings, s: &BoundState, x: f64) -> Complex64 {
    let eps = c.epsilon();
    let log = sinh_shifted(x, eps).ln() * s.p_sinh + cosh_shifted(x, eps).ln() * s.p_cosh;
    log.exp()
}

/// `ψ(x)` through the Gauss form `z^μ (1+z)^ν ₂F₁(a, -N; c; -z)`, `z = sinh² r`,
/// written as `sinh^{2μ} cosh^{2ν}` on the principal branch.
pub fn eval_wavefunction_2f1(c: &Couplings, s: &BoundState, x: f64) -> Result<Complex64> {
    check_state(c, s)?;
    let z = sinh_shifted(x, c.epsilon()).powi(2);
    Ok(envelope(c, s, x) * s.hypergeometric_params().evaluate(z)?)
}

/// `ψ` sampled on `[x_min, x_max]` with step `h`; not normalized.
pub fn sample_wavefunction(
    c: &Couplings,
    s: &BoundState,
    x_min: f64,
    x_max: f64,
    h: f64,
) -> Result<ComplexGridFunction> {
    check_state(c, s)?;
    let (p, q) = s.jacobi_params();
    let norm = gamma_ratio(s.n, p)?;
    ComplexGridFunction::sample(x_min, x_max, h, |x| {
        envelope(c, s, x) * jacobi_poly(s.n, p, q, levai_g(c, x)) * norm
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cpl(a: f64, b: f64) -> Couplings {
        Couplings::new(a, b, 0.5).unwrap()
    }

    #[test]
    fn n_max_examples() {
        let c = cpl(3.3, 1.1);
        assert_eq!(n_max(&c, FamilyLabel::MINUS_MINUS), Some(1));
        assert_eq!(n_max(&c, FamilyLabel::MINUS_PLUS), Some(0));
        assert_eq!(n_max(&c, FamilyLabel::PLUS_MINUS), None);
        assert_eq!(n_max(&c, FamilyLabel::PLUS_PLUS), None);
    }

    #[test]
    fn n_max_boundary_is_strict() {
        // 2N + 1 = 3 = α + β is the E = 0 threshold, not a state.
        let c = cpl(1.5, 1.5);
        assert_eq!(n_max(&c, FamilyLabel::MINUS_MINUS), Some(0));
        assert!(energy(&c, FamilyLabel::MINUS_MINUS, 1).is_err());
        let c = cpl(0.5, 0.5);
        assert_eq!(n_max(&c, FamilyLabel::MINUS_MINUS), None);
    }

    #[test]
    fn energy_examples() {
        let c = cpl(3.3, 1.1);
        let e = |f, n| energy(&c, f, n).unwrap();
        assert!((e(FamilyLabel::MINUS_MINUS, 0) + 11.56).abs() < 1e-12);
        assert!((e(FamilyLabel::MINUS_MINUS, 1) + 1.96).abs() < 1e-12);
        assert!((e(FamilyLabel::MINUS_PLUS, 0) + 1.44).abs() < 1e-12);
        assert!(matches!(
            energy(&c, FamilyLabel::PLUS_MINUS, 0),
            Err(Error::NotABoundState { .. })
        ));
    }

    #[test]
    fn enumerate_examples() {
        let energies = |a, b| -> Vec<f64> {
            enumerate_spectrum(&cpl(a, b)).iter().map(|s| s.energy).collect()
        };
        let close = |got: Vec<f64>, want: &[f64]| {
            assert_eq!(got.len(), want.len(), "{got:?}");
            for (g, w) in got.iter().zip(want) {
                assert!((g - w).abs() < 1e-12, "{got:?} vs {want:?}");
            }
        };
        close(energies(3.3, 1.1), &[-11.56, -1.96, -1.44]);
        close(energies(0.4, 0.4), &[]);
        close(energies(1.1, 3.4), &[-12.25, -2.25, -1.69]);
        let s = enumerate_spectrum(&cpl(1.1, 3.4));
        assert_eq!(s[2].family, FamilyLabel::PLUS_MINUS);
        assert_eq!((s[0].n, s[1].n), (0, 1));
    }

    #[test]
    fn degenerate_energies_are_kept_and_ordered() {
        // σα + τβ = -4 for (-,-) and -2 for (-,+): (-,-) n=1 and (-,+) n=0 both give E = -1.
        let c = cpl(3.0, 1.0);
        let s = enumerate_spectrum(&c);
        let at_minus_one: Vec<_> = s.iter().filter(|b| (b.energy + 1.0).abs() < 1e-12).collect();
        assert_eq!(at_minus_one.len(), 2);
        assert_eq!(at_minus_one[0].family, FamilyLabel::MINUS_MINUS);
        assert_eq!(at_minus_one[1].family, FamilyLabel::MINUS_PLUS);
    }

    #[test]
    fn s_wave_examples() {
        let s = s_wave_subset(&cpl(3.3, 1.1));
        assert_eq!(s.len(), 1);
        assert!((s[0].energy + 1.44).abs() < 1e-12);
        assert!(s_wave_subset(&cpl(1.1, 3.4)).is_empty());
    }

    #[test]
    fn bound_state_fields() {
        let c = cpl(3.3, 1.1);
        let s = BoundState::new(&c, FamilyLabel::MINUS_MINUS, 1).unwrap();
        assert!((s.kappa - 1.4).abs() < 1e-12);
        assert!((s.kappa * s.kappa + s.energy).abs() < 1e-12);
        assert!((s.p_sinh - (-0.6)).abs() < 1e-12);
        assert!((s.p_cosh - (-2.8)).abs() < 1e-12);
    }

    #[test]
    fn plus_minus_ground_state_closed_form() {
        // ψ₀^{(+,-)} = cosh^{A+1}(r) sinh^{1-B}(r)
        let c = Couplings::new(1.1, 3.4, 0.5).unwrap();
        let s = BoundState::new(&c, FamilyLabel::PLUS_MINUS, 0).unwrap();
        for &x in &[-2.0, -0.3, 0.0, 0.7, 4.0] {
            let r = Complex64::new(x, -0.5);
            let want = r.cosh().powf(c.a() + 1.0) * r.sinh().powf(1.0 - c.b());
            let got = eval_wavefunction(&c, &s, x).unwrap();
            assert!((got - want).norm() < 1e-12 * want.norm(), "{x}: {got} vs {want}");
        }
    }

    #[test]
    fn mismatched_state_is_rejected() {
        let strong = cpl(3.3, 1.1);
        let weak = cpl(0.4, 0.4);
        let s = BoundState::new(&strong, FamilyLabel::MINUS_MINUS, 0).unwrap();
        assert!(matches!(
            eval_wavefunction(&weak, &s, 0.0),
            Err(Error::NotABoundState { .. })
        ));
    }

    #[test]
    fn gamma_pole_propagates() {
        // τβ = -1 with N = 1: 1 + τβ = 0.
        let c = cpl(5.0, 1.0);
        let s = BoundState::new(&c, FamilyLabel::MINUS_MINUS, 1).unwrap();
        assert!(matches!(
            eval_wavefunction(&c, &s, 0.3),
            Err(Error::PoleInGammaRatio { .. })
        ));
    }

    #[test]
    fn three_point_grid() {
        let c = cpl(3.3, 1.1);
        let s = BoundState::new(&c, FamilyLabel::MINUS_MINUS, 1).unwrap();
        let g = sample_wavefunction(&c, &s, -1.0, 1.0, 1.0).unwrap();
        assert_eq!(g.len(), 3);
        for (x, v) in g.iter() {
            assert_eq!(v, eval_wavefunction(&c, &s, x).unwrap());
        }
    }
}
