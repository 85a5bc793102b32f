//! Complex-argument special functions used by the closed-form bound states.
//!
//! Only terminating objects live here: Jacobi polynomials of small degree,
//! finite Gauss sums `₂F₁(-N, a; c; w)` and the gamma ratio
//! `N! Γ(1 + t) / Γ(N + 1 + t)` written as a finite product.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parameters of the terminating Gauss equation attached to one bound state.
///
/// With `ψ = z^μ (1 + z)^ν φ(z)`, `z = sinh² r`, the factor `φ` solves the
/// hypergeometric equation with upper parameters `a`, `b = -N` and lower
/// parameter `c`. The exponents satisfy `2μ = τβ + 1/2`, `2ν = σα + 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub mu: f64,
    pub nu: f64,
}

impl HypergeometricParams {
    /// Builds the parameters for degree `n` from the signed couplings
    /// `σα` and `τβ`.
    pub fn new(n: usize, sigma_alpha: f64, tau_beta: f64) -> Self {
        let n_f = n as f64;
        Self {
            a: n_f + 1.0 + sigma_alpha + tau_beta,
            b: -n_f,
            c: tau_beta + 1.0,
            mu: 0.5 * (tau_beta + 0.5),
            nu: 0.5 * (sigma_alpha + 0.5),
        }
    }

    /// Polynomial degree `N = -b`.
    pub fn degree(&self) -> usize {
        (-self.b).round() as usize
    }

    /// `E = -(a - b)²`.
    pub fn energy(&self) -> f64 {
        -(self.a - self.b).powi(2)
    }

    /// `₂F₁(a, -N; c; -z)`.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        terminating_2f1(self.degree(), self.a, self.c, -z)
    }
}

/// Jacobi polynomial `P_n^{(p,q)}(w)` by the degree-ascending three-term
/// recurrence.
///
/// For the exceptional parameters where the recurrence's leading
/// coefficient `2n (n + p + q)(2n + p + q - 2)` vanishes, the explicit
/// binomial sum is used instead.
pub fn jacobi_poly(n: usize, p: f64, q: f64, w: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if n == 0 {
        return one;
    }
    let s = p + q;
    let p1 = ((s + 2.0) * w + (p - q)) * 0.5;
    if n == 1 {
        return p1;
    }
    let singular = (2..=n).any(|k| {
        let k = k as f64;
        (k + s).abs() < 1e-12 || (2.0 * k + s - 2.0).abs() < 1e-12
    });
    if singular {
        return jacobi_explicit(n, p, q, w);
    }

    let (mut prev, mut curr) = (one, p1);
    for k in 2..=n {
        let k = k as f64;
        let t = 2.0 * k + s;
        let lead = 2.0 * k * (k + s) * (t - 2.0);
        let lin = (t - 1.0) * (p * p - q * q);
        let quad = (t - 2.0) * (t - 1.0) * t;
        let back = 2.0 * (k + p - 1.0) * (k + q - 1.0) * t;
        let next = ((lin + quad * w) * curr - back * prev) / lead;
        prev = curr;
        curr = next;
    }
    curr
}

// Σ_k C(n+p, n-k) C(n+q, k) ((w-1)/2)^k ((w+1)/2)^{n-k}
fn jacobi_explicit(n: usize, p: f64, q: f64, w: Complex64) -> Complex64 {
    let minus = (w - 1.0) * 0.5;
    let plus = (w + 1.0) * 0.5;
    let nf = n as f64;
    (0..=n)
        .map(|k| {
            let coeff = binomial(nf + p, n - k) * binomial(nf + q, k);
            coeff * minus.powu(k as u32) * plus.powu((n - k) as u32)
        })
        .sum()
}

fn binomial(x: f64, m: usize) -> f64 {
    (0..m).fold(1.0, |acc, i| acc * (x - i as f64) / (i as f64 + 1.0))
}

/// Terminating Gauss sum `₂F₁(-n, a; c; w) = Σ_{k=0}^{n} (-n)_k (a)_k / (c)_k · w^k / k!`.
///
/// Terms are accumulated left to right with running Pochhammer ratios.
/// Fails when `(c)_k` vanishes for some `k ≤ n`, i.e. when `c` is a
/// non-positive integer with `-c < n`.
pub fn terminating_2f1(n: usize, a: f64, c: f64, w: Complex64) -> Result<Complex64> {
    if (0..n).any(|k| c + k as f64 == 0.0) {
        return Err(Error::PoleInLowerParameter { c, degree: n });
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let nf = n as f64;
    for k in 0..n {
        let k = k as f64;
        term *= w * ((k - nf) * (a + k) / ((c + k) * (k + 1.0)));
        sum += term;
    }
    Ok(sum)
}

/// `n! Γ(1 + t) / Γ(n + 1 + t)` evaluated as `∏_{k=1}^{n} k / (t + k)`.
pub fn gamma_ratio(n: usize, t: f64) -> Result<f64> {
    let mut ratio = 1.0;
    for k in 1..=n {
        let k = k as f64;
        let den = t + k;
        if den == 0.0 {
            return Err(Error::PoleInGammaRatio { t, degree: n });
        }
        ratio *= k / den;
    }
    Ok(ratio)
}
