//! Regularized Pöschl–Teller model on the complex contour `r = x - iε`.
//!
//! The potential
//!
//! ```text
//! V(x) = (β² - 1/4) / sinh²(x - iε) - (α² - 1/4) / cosh²(x - iε),   0 < ε < π/2,
//! ```
//!
//! is non-Hermitian but PT symmetric, bounded on the whole real line and
//! exactly solvable. Its bound states come in sign families `(σ, τ)` with
//! energies `E = -(2N + 1 + σα + τβ)²` and wavefunctions built from Jacobi
//! polynomials in `cosh 2r`.
//!
//! Modules:
//!
//! * [`specialfn`]: Jacobi polynomials, terminating ₂F₁ sums, gamma ratios.
//! * [`potential`]: couplings, the shifted potential and its bounds.
//! * [`spectrum`]: closed-form spectrum and wavefunctions.
//! * [`verify`]: finite-difference residuals, a determinant-recurrence
//!   eigensolver for the discretized complex Hamiltonian, and ε scans.

pub mod error;
pub mod potential;
pub mod specialfn;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use potential::{ComplexGridFunction, Couplings};
pub use spectrum::{BoundState, FamilyLabel, Sign};
pub use verify::{DiscretizationSpec, VerificationReport};
