//! The two-variable twisted double sum
//!
//!   Φ₂(s₁, s₂, a, z₁, z₂) = Σ_{m≥0} z₁^m (m+a)^{-s₁} Σ_{n≥1} z₂^{n-1} (m+n+a)^{-s₂},
//!
//! whose z₁ = z₂ = 1 case is the shifted Euler-Zagier double zeta
//! ζ₂(s₁, s₂; a). Four evaluators cover complementary argument regions:
//!
//! * [`double_series`] — direct summation where the sum converges absolutely;
//! * [`double_integral`] — the iterated Γ-integral, the only route for
//!   general twists at small Re s, and the basis of the sign classification
//!   in [`twist_sign_parts`];
//! * [`double_strip`] — the kernel-split integral on the critical strip
//!   0 < Re s₁ < 1, Re s₂ > 1, 1 < Re(s₁+s₂) < 2 (unit twists), in two
//!   algebraically equal but numerically independent forms;
//! * [`shifted_zeta_continuation`] — the Euler-Maclaurin-style reduction to
//!   single zetas, the fastest route and the analytic continuation to
//!   Re(s₁+s₂) > -l.
//!
//! [`zeta2`] picks a suitable evaluator automatically; the identities module
//! adds the diagonal closed form and the harmonic-product consistency check.

mod continuation;
mod identities;
mod integral;
mod series;
mod strip;

pub use continuation::{phi_l_remainder, shifted_zeta_continuation, AiRemainderSpec};
pub use identities::{diagonal_identity, harmonic_product_residual};
pub use integral::{double_integral, twist_sign_parts, TwistSignEvidence};
pub use series::double_series;
pub use strip::{double_strip, SecondTermForm};

use crate::config::{is_one, DoublePoint, EvalConfig};
use crate::error::{Error, Result};
use crate::Evaluation;

/// Which evaluator's validity region the arguments fall in (real parts only;
/// the imaginary parts never affect convergence).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Absolutely convergent double sum.
    Series,
    /// Unit twists, 0 < σ₁ < 1, σ₂ > 1, 1 < σ₁+σ₂ < 2.
    Strip,
    /// Unit twists, anywhere the shifted-zeta continuation reaches
    /// (σ₁+σ₂ > -l for some table-supported l) but outside the above.
    Continued,
    /// Non-unit twists with 0 < σ₁, σ₂ too small for the series: the
    /// iterated integral is the only route.
    Integral,
    /// Nothing applies (off all supported regions or on a pole hyperplane).
    Unsupported,
}

/// Classify the arguments by which evaluator regions apply.
pub fn classify(p: &DoublePoint) -> Region {
    let (s1, s2) = (p.s1.re, p.s2.re);
    let both_one = is_one(p.z1) && is_one(p.z2);
    if both_one {
        if s1 > 0.0 && s2 > 1.0 && s1 + s2 > 2.0 {
            return Region::Series;
        }
        if s1 > 0.0 && s1 < 1.0 && s2 > 1.0 && s1 + s2 > 1.0 && s1 + s2 < 2.0 {
            return Region::Strip;
        }
        return Region::Continued;
    }
    if s1 > 1.0 && s2 > 1.0 {
        return Region::Series;
    }
    let (c2, c3) = (is_one(p.z1), is_one(p.z2));
    let ok = if c2 {
        s1 > 1.0 && s2 > 0.0 // z₁ = 1, z₂ ≠ 1
    } else if c3 {
        s1 > 0.0 && s2 > 1.0 // z₁ ≠ 1, z₂ = 1
    } else {
        s1 > 0.0 && s2 > 0.0
    };
    if ok {
        Region::Integral
    } else {
        Region::Unsupported
    }
}

/// Φ₂ by the best evaluator for the arguments.
///
/// Unit twists go through the shifted-zeta continuation (orders of magnitude
/// faster than quadrature and valid across the strip); its excluded pole
/// hyperplanes fall back to direct summation where absolute convergence
/// holds. Twisted arguments use the series when it converges fast enough and
/// the iterated integral otherwise.
pub fn zeta2(p: &DoublePoint, cfg: &EvalConfig) -> Result<Evaluation> {
    let region = classify(p);
    let both_one = is_one(p.z1) && is_one(p.z2);
    if both_one {
        let spec = AiRemainderSpec::default();
        match shifted_zeta_continuation(p, &spec, cfg) {
            Ok(eval) => Ok(eval),
            Err(Error::Pole(_)) if region == Region::Series => double_series(p, cfg),
            Err(e) => Err(e),
        }
    } else {
        match region {
            Region::Series => match double_series(p, cfg) {
                Ok(eval) => Ok(eval),
                Err(Error::NonConvergence(_)) => double_integral(p, cfg),
                Err(e) => Err(e),
            },
            Region::Integral => double_integral(p, cfg),
            _ => Err(Error::Domain(format!(
                "no evaluator covers twisted arguments at (Re s1, Re s2) = ({}, {})",
                p.s1.re, p.s2.re
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;

    fn pt(s1: f64, s2: f64, a: f64) -> DoublePoint {
        DoublePoint::new(C64::new(s1, 0.0), C64::new(s2, 0.0), a, C64::new(1.0, 0.0), C64::new(1.0, 0.0))
            .unwrap()
    }

    #[test]
    fn region_classification() {
        assert_eq!(classify(&pt(2.0, 2.0, 1.0)), Region::Series);
        assert_eq!(classify(&pt(0.5, 1.2, 1.0)), Region::Strip);
        assert_eq!(classify(&pt(-0.5, 1.3, 1.0)), Region::Continued);
        assert_eq!(classify(&pt(0.85, 0.85, 1.0)), Region::Continued);
        let twisted = DoublePoint::new(
            C64::new(0.7, 0.0),
            C64::new(0.8, 0.0),
            1.0,
            C64::new(0.0, 1.0),
            C64::new(0.0, 1.0),
        )
        .unwrap();
        assert_eq!(classify(&twisted), Region::Integral);
        let hopeless = DoublePoint::new(
            C64::new(-0.5, 0.0),
            C64::new(0.8, 0.0),
            1.0,
            C64::new(0.0, 1.0),
            C64::new(0.0, 1.0),
        )
        .unwrap();
        assert_eq!(classify(&hopeless), Region::Unsupported);
    }
}
