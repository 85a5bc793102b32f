//! The complexified Pöschl–Teller potential on the contour `r = x - iε`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Model parameters `(α, β, ε)`.
///
/// `α = A + 1/2` sets the smooth `1/cosh²` well, `β = B - 1/2` the singular
/// `1/sinh²` term, and `ε ∈ (0, π/2)` is the downward shift of the contour.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Couplings {
    alpha: f64,
    beta: f64,
    epsilon: f64,
}

impl Couplings {
    pub fn new(alpha: f64, beta: f64, epsilon: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::InvalidCouplings(format!("alpha must be > 0, got {alpha}")));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::InvalidCouplings(format!("beta must be > 0, got {beta}")));
        }
        if !(epsilon > 0.0 && epsilon < FRAC_PI_2) {
            return Err(Error::InvalidCouplings(format!(
                "epsilon must lie in the open interval (0, pi/2), got {epsilon}"
            )));
        }
        Ok(Self { alpha, beta, epsilon })
    }

    /// Same `(α, β)` with a different shift.
    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        Self::new(self.alpha, self.beta, epsilon)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `A = α - 1/2`.
    pub fn a(&self) -> f64 {
        self.alpha - 0.5
    }

    /// `B = β + 1/2`.
    pub fn b(&self) -> f64 {
        self.beta + 0.5
    }

    /// Coefficient of `1/sinh² r`: `β² - 1/4 = B(B - 1)`.
    pub fn f_sinh(&self) -> f64 {
        self.beta * self.beta - 0.25
    }

    /// Coefficient of `1/cosh² r`: `-(α² - 1/4) = -A(A + 1)`.
    pub fn f_cosh(&self) -> f64 {
        -(self.alpha * self.alpha - 0.25)
    }
}

/// `r = x - iε`.
pub fn shifted_coordinate(x: f64, c: &Couplings) -> Complex64 {
    Complex64::new(x, -c.epsilon)
}

/// `sinh(x - iε) = sinh x cos ε - i cosh x sin ε`.
pub fn sinh_shifted(x: f64, eps: f64) -> Complex64 {
    Complex64::new(x.sinh() * eps.cos(), -x.cosh() * eps.sin())
}

/// `cosh(x - iε) = cosh x cos ε - i sinh x sin ε`.
pub fn cosh_shifted(x: f64, eps: f64) -> Complex64 {
    Complex64::new(x.cosh() * eps.cos(), -x.sinh() * eps.sin())
}

// 1/z² without forming |z|² (which overflows well before z does).
fn inv_square(z: Complex64) -> Complex64 {
    let m = z.norm();
    let u = z.conj() / m / m;
    u * u
}

/// `V(x) = (β² - 1/4)/sinh²(x - iε) - (α² - 1/4)/cosh²(x - iε)`.
pub fn eval_potential(c: &Couplings, x: f64) -> Complex64 {
    let s = sinh_shifted(x, c.epsilon);
    let ch = cosh_shifted(x, c.epsilon);
    let f_s = c.f_sinh();
    let f_c = c.f_cosh();
    let mut v = Complex64::new(0.0, 0.0);
    if f_s != 0.0 {
        v += inv_square(s) * f_s;
    }
    if f_c != 0.0 {
        v += inv_square(ch) * f_c;
    }
    v
}

/// Uniform bound `|β² - 1/4| / sin²ε + |α² - 1/4| / cos²ε` on `|V(x)|`.
///
/// Follows from `|sinh(x - iε)|² = sinh²x + sin²ε` and
/// `|cosh(x - iε)|² = sinh²x + cos²ε`.
pub fn potential_bound(c: &Couplings) -> f64 {
    let (s, co) = c.epsilon.sin_cos();
    c.f_sinh().abs() / (s * s) + c.f_cosh().abs() / (co * co)
}

/// Lévai variable `g(x - iε) = cosh 2x cos 2ε - i sinh 2x sin 2ε`.
pub fn levai_g(c: &Couplings, x: f64) -> Complex64 {
    let (s2, c2) = (2.0 * c.epsilon).sin_cos();
    Complex64::new((2.0 * x).cosh() * c2, -(2.0 * x).sinh() * s2)
}

/// First-order expansion of `1/sinh²(x - iε)` in `ε`:
/// `1/sinh²x + 2iε cosh x / sinh³x`.
pub fn small_eps_expansion(x: f64, eps: f64) -> Result<Complex64> {
    if x == 0.0 {
        return Err(Error::DegenerateInput(
            "small-epsilon expansion is singular at x = 0".into(),
        ));
    }
    let sh = x.sinh();
    Ok(Complex64::new(1.0 / (sh * sh), 2.0 * eps * x.cosh() / (sh * sh * sh)))
}

/// Complex samples on a uniform real grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexGridFunction {
    x_min: f64,
    x_max: f64,
    step: f64,
    values: Vec<Complex64>,
}

impl ComplexGridFunction {
    /// Number of nodes `round((x_max - x_min)/h) + 1` for a window.
    pub fn node_count(x_min: f64, x_max: f64, step: f64) -> Result<usize> {
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return Err(Error::InvalidGrid(format!(
                "need finite x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidGrid(format!("step must be > 0, got {step}")));
        }
        Ok(((x_max - x_min) / step).round() as usize + 1)
    }

    /// Samples `f` at `x_min + j h`, stopping at the first error.
    pub fn try_sample<F>(x_min: f64, x_max: f64, step: f64, mut f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Result<Complex64>,
    {
        let n = Self::node_count(x_min, x_max, step)?;
        let values = (0..n)
            .map(|j| f(x_min + j as f64 * step))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { x_min, x_max, step, values })
    }

    pub fn sample<F>(x_min: f64, x_max: f64, step: f64, mut f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Complex64,
    {
        Self::try_sample(x_min, x_max, step, |x| Ok(f(x)))
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn node(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.step
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.values.len()).map(|j| self.node(j))
    }

    /// `(x_j, value_j)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (f64, Complex64)> + '_ {
        self.nodes().zip(self.values.iter().copied())
    }

    pub fn max_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// `V` sampled on a window.
pub fn sample_potential(c: &Couplings, x_min: f64, x_max: f64, step: f64) -> Result<ComplexGridFunction> {
    ComplexGridFunction::sample(x_min, x_max, step, |x| eval_potential(c, x))
}
