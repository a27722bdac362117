//! The iterated-integral representation
//!
//!   Γ(s₁)Γ(s₂) Φ₂ = ∫₀^∞ y^{s₂-1}/(e^y - z₂) ∫₀^∞ x^{s₁-1} e^{(1-a)(x+y)}/(e^{x+y} - z₁) dx dy,
//!
//! computed in the stable form
//!
//!   exp((s₁-1)ln x + (s₂-1)ln y - y - a(x+y) - ln(1 - z₂e^{-y}) - ln(1 - z₁e^{-(x+y)})),
//!
//! where both denominators go through the cancellation-free `1 - z e^{-t}`
//! helper and enter as logs: near the corner of the quadrature window the
//! numerator and the denominator product can underflow f64 separately while
//! their ratio stays moderate. Convergence requirements depend on which
//! twists sit at 1:
//!
//! * z₁ = z₂ = 1:  Re s₁ > 0, Re s₂ > 1, Re(s₁+s₂) > 2;
//! * z₁ = 1 only:  Re s₁ > 1, Re s₂ > 0;
//! * z₂ = 1 only:  Re s₁ > 0, Re s₂ > 1;
//! * neither:      Re s₁ > 0, Re s₂ > 0.
//!
//! The same integral drives [`twist_sign_parts`]: for real exponents and
//! non-real conjugate twists the integrand's imaginary part has one fixed
//! sign whenever sin(2πθ₁)·sin(2πθ₂) > 0 (θᵢ the conjugate angles), and the
//! real part is positive whenever the product is negative — so Φ₂ cannot
//! vanish there. This module evaluates the parts and checks the observed
//! value against that classification.

use crate::config::{is_one, DoublePoint, EvalConfig};
use crate::error::{Error, Result};
use crate::numerics::{gamma, integrate_double_semi_infinite, one_minus_twist_exp};
use crate::Evaluation;

/// Validate the case-dependent convergence region; returns the outer (y)
/// endpoint exponent at 0, which the quadrature budget needs.
fn validate(p: &DoublePoint) -> Result<f64> {
    let (sig1, sig2) = (p.s1.re, p.s2.re);
    let sum = sig1 + sig2;
    let (one1, one2) = (is_one(p.z1), is_one(p.z2));
    let ok = match (one1, one2) {
        (true, true) => sig1 > 0.0 && sig2 > 1.0 && sum > 2.0,
        (true, false) => sig1 > 1.0 && sig2 > 0.0,
        (false, true) => sig1 > 0.0 && sig2 > 1.0,
        (false, false) => sig1 > 0.0 && sig2 > 0.0,
    };
    if !ok {
        return Err(Error::Domain(format!(
            "iterated integral diverges at (Re s1, Re s2) = ({sig1}, {sig2}) \
             for twists (z1, z2) = ({}, {})",
            p.z1, p.z2
        )));
    }
    // Inner behaviour near y → 0: with z₁ = 1 the inner integral carries an
    // extra (x+y)^{-1} from the unit-twist pole, so the outer integrand goes
    // like y^{σ₂-2} (σ₁ < 1) after the inner x-singularity is absorbed;
    // a non-unit z₂ cancels nothing and leaves y^{σ₂-1}.
    let outer_exponent = if one2 {
        if one1 && sig1 < 1.0 {
            (sum - 3.0).max(sig2 - 2.0)
        } else {
            sig2 - 2.0
        }
    } else {
        sig2 - 1.0
    };
    Ok(outer_exponent)
}

pub fn double_integral(p: &DoublePoint, cfg: &EvalConfig) -> Result<Evaluation> {
    let outer_exponent = validate(p)?;
    let DoublePoint { s1, s2, a, z1, z2 } = *p;
    let g = gamma(s1)? * gamma(s2)?;
    let sm1 = s1 - 1.0;
    let sm2 = s2 - 1.0;
    let f = |x: f64, y: f64| {
        let u = x + y;
        // Fully in log space: near the corner both the numerator and the
        // denominator factors underflow f64 while their ratio stays moderate,
        // so the logs must be combined before a single exp.
        (sm1 * x.ln() + sm2 * y.ln()
            - y
            - a * u
            - one_minus_twist_exp(z2, y).ln()
            - one_minus_twist_exp(z1, u).ln())
        .exp()
    };
    let outer_q = cfg.double_quad.with_singularity(outer_exponent);
    let inner_q = cfg.double_quad.inner().with_singularity(s1.re - 1.0);
    let quad = integrate_double_semi_infinite(f, &outer_q, &inner_q)?;
    let value = quad.value / g;
    Ok(Evaluation {
        value,
        err_estimate: quad.err_estimate / g.norm() + 1e-15 * value.norm(),
        work: quad.evals,
    })
}

/// Sign evidence for Φ₂ with conjugate non-real twists and real exponents.
#[derive(Debug, Clone, Copy)]
pub struct TwistSignEvidence {
    /// sin(2πθ₁)·sin(2πθ₂) for the conjugate angles θᵢ (z̄ᵢ = rᵢe^{2πiθᵢ}).
    pub classifier: f64,
    /// classifier > 0: the imaginary part is bounded away from zero.
    pub expects_imaginary: bool,
    /// Sign of Im Φ₂ when `expects_imaginary`, of Re Φ₂ (always +1) otherwise.
    pub predicted_sign: f64,
    /// The evaluated Φ₂.
    pub phi: Evaluation,
    /// The relevant part of the value (Im or Re per the classification).
    pub observed: f64,
    /// Whether the observation matches the prediction outside the error bar.
    pub consistent: bool,
}

/// Evaluate Φ₂ by the iterated integral and check the fixed-sign prediction.
///
/// Requires real s₁, s₂ in the integral's case-4 region and non-real twists;
/// the classification is exact for conjugate pairs, so z₁, z₂ are taken as
/// given and their conjugate angles drive the classifier.
pub fn twist_sign_parts(p: &DoublePoint, cfg: &EvalConfig) -> Result<TwistSignEvidence> {
    if p.s1.im.abs() > 1e-12 || p.s2.im.abs() > 1e-12 {
        return Err(Error::Domain(
            "sign classification is defined for real exponents s1, s2".into(),
        ));
    }
    if p.z1.im.abs() < 1e-12 || p.z2.im.abs() < 1e-12 {
        return Err(Error::Domain(
            "sign classification needs non-real twists z1, z2".into(),
        ));
    }
    // z̄ = r e^{2πiθ} ⇒ sin(2πθ) = -Im(z)/r.
    let sin1 = -p.z1.im / p.z1.norm();
    let sin2 = -p.z2.im / p.z2.norm();
    let classifier = sin1 * sin2;
    let expects_imaginary = classifier > 0.0;
    // Both integrand parentheses (e^y - r₂cos2πθ₂), (e^{x+y} - r₁cos2πθ₁)
    // are positive, so Im(integrand) = -r₁sin2πθ₁(…) - r₂sin2πθ₂(…) carries
    // the sign of -sin1 (= sign Im z₁) when sin1, sin2 agree.
    let predicted_sign = if expects_imaginary { -sin1.signum() } else { 1.0 };
    let phi = double_integral(p, cfg)?;
    let observed = if expects_imaginary { phi.value.im } else { phi.value.re };
    let consistent = observed.signum() == predicted_sign && observed.abs() > phi.err_estimate;
    Ok(TwistSignEvidence {
        classifier,
        expects_imaginary,
        predicted_sign,
        phi,
        observed,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta_double::double_series;
    use crate::C64;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    fn one() -> C64 {
        C64::new(1.0, 0.0)
    }

    fn pt(s1: C64, s2: C64, a: f64, z1: C64, z2: C64) -> DoublePoint {
        DoublePoint::new(s1, s2, a, z1, z2).unwrap()
    }

    #[test]
    fn matches_series_at_unit_twists() {
        // π⁴/120 and a shifted point, both also summable directly
        let e = double_integral(&pt(re(2.0), re(2.0), 1.0, one(), one()), &cfg()).unwrap();
        assert!((e.value.re - 0.8117424252833536).abs() < 1e-7, "{}", e.value.re);
        assert!(e.value.im.abs() < 1e-9);

        let p = pt(re(2.5), re(2.0), 0.5, one(), one());
        let ser = double_series(&p, &cfg()).unwrap();
        let int = double_integral(&p, &cfg()).unwrap();
        assert!(
            (ser.value - int.value).norm() < 1e-6 * ser.value.norm(),
            "series {} vs integral {}",
            ser.value,
            int.value
        );
    }

    #[test]
    fn matches_series_at_interior_twist() {
        let p = pt(re(2.0), re(2.0), 1.0, re(0.5), one());
        let ser = double_series(&p, &cfg()).unwrap();
        let int = double_integral(&p, &cfg()).unwrap();
        assert!(
            (ser.value - int.value).norm() < 1e-7,
            "series {} vs integral {}",
            ser.value,
            int.value
        );
    }

    #[test]
    fn matches_series_at_alternating_twist() {
        let p = pt(re(2.0), re(2.0), 1.0, one(), re(-1.0));
        let ser = double_series(&p, &cfg()).unwrap();
        let int = double_integral(&p, &cfg()).unwrap();
        assert!(
            (ser.value - int.value).norm() < 1e-7,
            "series {} vs integral {}",
            ser.value,
            int.value
        );
    }

    #[test]
    fn continues_below_the_series_region() {
        // (1.7, 1.3 | i, -1): series needs Abel patience, integral is direct;
        // frozen: 0.2496307276055183 + 0.0393072878678822 i
        let i = C64::new(0.0, 1.0);
        let e = double_integral(&pt(re(1.7), re(1.3), 1.0, i, re(-1.0)), &cfg()).unwrap();
        assert!((e.value.re - 0.2496307276055183).abs() < 1e-7, "{}", e.value.re);
        assert!((e.value.im - 0.0393072878678822).abs() < 1e-7, "{}", e.value.im);
    }

    #[test]
    fn sign_prediction_imaginary_case() {
        // z₁ = z₂ = i: conjugate angles θ = -1/4, sin·sin = 1 > 0 ⇒ Im ≠ 0
        // with sign of Im z₁ = +1. Case-4 exponents inside (0, 1).
        let i = C64::new(0.0, 1.0);
        let ev = twist_sign_parts(&pt(re(0.7), re(0.8), 1.0, i, i), &cfg()).unwrap();
        assert!(ev.expects_imaginary);
        assert!((ev.predicted_sign - 1.0).abs() < 1e-15);
        assert!(ev.consistent, "Im = {}, err = {}", ev.observed, ev.phi.err_estimate);

        // conjugated twists flip the predicted sign
        let ev =
            twist_sign_parts(&pt(re(0.7), re(0.8), 1.0, -i, -i), &cfg()).unwrap();
        assert!(ev.expects_imaginary);
        assert!((ev.predicted_sign + 1.0).abs() < 1e-15);
        assert!(ev.consistent, "Im = {}", ev.observed);
    }

    #[test]
    fn sign_prediction_real_case() {
        // opposite half-planes: sin·sin < 0 ⇒ Re Φ₂ > 0
        let i = C64::new(0.0, 1.0);
        let ev = twist_sign_parts(&pt(re(0.6), re(0.9), 0.5, i, -i), &cfg()).unwrap();
        assert!(!ev.expects_imaginary);
        assert!(ev.consistent, "Re = {}", ev.observed);
        assert!(ev.observed > 0.0);
    }

    #[test]
    fn sign_rejects_real_twists() {
        assert!(matches!(
            twist_sign_parts(&pt(re(0.7), re(0.8), 1.0, re(-1.0), re(-1.0)), &cfg()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn refuses_divergent_cases() {
        // z₁ = 1, z₂ ≠ 1 needs Re s1 > 1
        assert!(matches!(
            double_integral(&pt(re(0.8), re(2.0), 1.0, one(), re(-1.0)), &cfg()),
            Err(Error::Domain(_))
        ));
        // unit twists in the strip: handled by double_strip, not here
        assert!(matches!(
            double_integral(&pt(re(0.5), re(1.2), 1.0, one(), one()), &cfg()),
            Err(Error::Domain(_))
        ));
    }
}
