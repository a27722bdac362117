//! Numerical evaluation of the Hurwitz-Lerch zeta function Φ(s, a, z), its
//! single-variable specializations (Hurwitz zeta, polylogarithm, Dirichlet
//! L-functions), and the two-variable Euler-Zagier double sum
//! Φ₂(s₁, s₂, a, z₁, z₂), together with machinery for locating their real
//! zeros and verifying their sign behaviour on real intervals.
//!
//! The crate is organized bottom-up:
//!
//! * [`numerics`] — complex gamma, Bernoulli numbers/polynomials, Pochhammer
//!   symbols, and double-exponential quadrature on (0,1], [1,∞) and (0,∞)².
//! * [`kernel`] — the integrand kernel H(a,x) = e^((1-a)x)/(eˣ-1) - 1/x used
//!   by the integral representations, plus a grid negativity certificate.
//! * [`zeta_single`] — series, Euler-Maclaurin and integral evaluators for
//!   ζ(s,a) and Φ(s,a,z); polylogarithms; Dirichlet characters, L-functions
//!   and the finite Fourier bridges between all three families.
//! * [`zeta_double`] — double series, iterated-integral, critical-strip and
//!   Euler-Maclaurin-continued evaluators for Φ₂/ζ₂, the diagonal identity
//!   2ζ₂(s,s;a) = ζ(s,a)² - ζ(2s,a), and the harmonic product check.
//! * [`zeros`] — bracketing/bisection, the zero curve σ*(a) of ζ(σ,a), and
//!   the sign-theorem verification harness.
//!
//! All evaluators return [`Result`] and refuse out-of-domain input instead of
//! silently extrapolating; every analytic-continuation path is cross-checked
//! against an independent representation in the test suite.

pub mod config;
pub mod error;
pub mod kernel;
pub mod numerics;
pub mod zeros;
pub mod zeta_double;
pub mod zeta_single;

pub use config::{EvalConfig, Quadrature};
pub use error::{Error, Result};

/// Complex double-precision scalar used throughout.
pub type C64 = num_complex::Complex64;

/// A computed value together with an honest accuracy estimate and the amount
/// of work spent (series terms or integrand evaluations).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: C64,
    /// Upper estimate of the absolute error: truncation bounds plus level
    /// differences plus a roundoff allowance, depending on the method.
    pub err_estimate: f64,
    pub work: usize,
}
