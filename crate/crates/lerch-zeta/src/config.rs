//! Precision budgets and validated argument bundles.

use crate::error::{Error, Result};
use crate::C64;

/// Budget for the double-exponential quadrature rules.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    /// Maximum number of step-halving refinement levels (level k uses
    /// trapezoid step 2⁻ᵏ in the transformed variable).
    pub max_depth: usize,
    /// Absolute tolerance on the last-two-level difference.
    pub abs_tol: f64,
    /// Relative tolerance on the last-two-level difference.
    pub rel_tol: f64,
    /// Endpoint behaviour x^e of the integrand at 0 on (0,1]; must satisfy
    /// e > -1 (integrability). The transform absorbs any integrable power,
    /// so this is a validity check and diagnostic, not a tuning knob.
    pub singularity_exponent: f64,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            max_depth: 10,
            abs_tol: 1e-11,
            rel_tol: 1e-11,
            singularity_exponent: 0.0,
        }
    }
}

impl Quadrature {
    pub fn validate(&self) -> Result<()> {
        if !(self.singularity_exponent > -1.0) {
            return Err(Error::Domain(format!(
                "endpoint exponent {} not integrable (need > -1)",
                self.singularity_exponent
            )));
        }
        if self.max_depth == 0 || !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(Error::Domain(
                "quadrature budget must have depth >= 1 and positive tolerances".into(),
            ));
        }
        Ok(())
    }

    pub fn with_singularity(mut self, exponent: f64) -> Self {
        self.singularity_exponent = exponent;
        self
    }

    /// Budget for the inner integral of an iterated double integral: one
    /// order tighter than the outer budget so inner noise stays subdominant.
    pub fn inner(&self) -> Self {
        Quadrature {
            abs_tol: self.abs_tol / 10.0,
            rel_tol: self.rel_tol / 10.0,
            ..*self
        }
    }
}

/// Precision budget shared by the series/continuation evaluators.
#[derive(Debug, Clone, Copy)]
pub struct EvalConfig {
    /// Target absolute tolerance for truncated series and continuations.
    pub tol: f64,
    /// Hard cap on summed terms before declaring non-convergence.
    pub max_terms: usize,
    /// Budget for 1-D quadrature-backed evaluators.
    pub quad: Quadrature,
    /// Budget for the outer rule of iterated double integrals (the inner
    /// rule runs at `double_quad.inner()`).
    pub double_quad: Quadrature,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            tol: 1e-10,
            max_terms: 20_000_000,
            quad: Quadrature::default(),
            double_quad: Quadrature {
                max_depth: 8,
                abs_tol: 3e-9,
                rel_tol: 3e-9,
                singularity_exponent: 0.0,
            },
        }
    }
}

impl EvalConfig {
    pub fn with_tol(tol: f64) -> Self {
        let base = EvalConfig::default();
        EvalConfig {
            tol,
            quad: Quadrature {
                abs_tol: (tol / 10.0).max(1e-14),
                rel_tol: (tol / 10.0).max(1e-14),
                ..base.quad
            },
            double_quad: Quadrature {
                abs_tol: tol.max(1e-12),
                rel_tol: tol.max(1e-12),
                ..base.double_quad
            },
            ..base
        }
    }
}

/// Validated argument bundle for the single-variable functions.
///
/// The normalization a ∈ (0,1] and |z| ≤ 1 is enforced here, at the public
/// boundary; internal shifted sums may use larger a.
#[derive(Debug, Clone, Copy)]
pub struct EvalPoint {
    pub s: C64,
    pub a: f64,
    pub z: C64,
}

impl EvalPoint {
    pub fn new(s: C64, a: f64, z: C64) -> Result<Self> {
        check_shift(a)?;
        check_twist(z, "z")?;
        Ok(EvalPoint { s, a, z })
    }
}

/// Validated argument bundle for the double sum.
#[derive(Debug, Clone, Copy)]
pub struct DoublePoint {
    pub s1: C64,
    pub s2: C64,
    pub a: f64,
    pub z1: C64,
    pub z2: C64,
}

impl DoublePoint {
    pub fn new(s1: C64, s2: C64, a: f64, z1: C64, z2: C64) -> Result<Self> {
        check_shift(a)?;
        check_twist(z1, "z1")?;
        check_twist(z2, "z2")?;
        Ok(DoublePoint { s1, s2, a, z1, z2 })
    }
}

pub(crate) fn check_shift(a: f64) -> Result<()> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!("shift a = {a} outside (0, 1]")));
    }
    Ok(())
}

pub(crate) fn check_twist(z: C64, name: &str) -> Result<()> {
    if !(z.norm() <= 1.0 + 1e-12) {
        return Err(Error::Domain(format!("twist {name} = {z} outside the closed unit disk")));
    }
    Ok(())
}

/// True when z is numerically the special value 1 (series/integral case split).
pub(crate) fn is_one(z: C64) -> bool {
    (z - C64::new(1.0, 0.0)).norm() < 1e-12
}
