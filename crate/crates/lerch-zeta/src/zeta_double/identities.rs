//! Algebraic identities tying ζ₂ to single zetas, used both as evaluators
//! (the diagonal) and as cross-method consistency checks (the harmonic
//! product).

use crate::config::{check_shift, DoublePoint, EvalConfig};
use crate::error::{Error, Result};
use crate::zeta_double::zeta2;
use crate::zeta_single::hurwitz_any_shift;
use crate::{Evaluation, C64};

/// ζ₂(s, s; a) through the diagonal identity
///
///   2 ζ₂(s, s; a) = ζ(s, a)² - ζ(2s, a),
///
/// valid by continuation everywhere both single zetas are finite. This is an
/// independent route to diagonal values (no double-sum machinery at all) and
/// the backbone of the diagonal zero search.
pub fn diagonal_identity(s: C64, a: f64, cfg: &EvalConfig) -> Result<Evaluation> {
    check_shift(a)?;
    if (s - 1.0).norm() < 1e-6 {
        return Err(Error::Pole("ζ(s, a) pole at s = 1".into()));
    }
    if (s - 0.5).norm() < 1e-6 {
        return Err(Error::Pole("ζ(2s, a) pole at s = 1/2".into()));
    }
    let single = hurwitz_any_shift(s, a, 0, cfg)?;
    let double = hurwitz_any_shift(s + s, a, 0, cfg)?;
    let value = (single.value * single.value - double.value) / 2.0;
    let err = single.value.norm() * single.err_estimate
        + 0.5 * double.err_estimate
        + 1e-15 * value.norm();
    Ok(Evaluation { value, err_estimate: err, work: single.work + double.work })
}

/// Residual of the harmonic (stuffle) product
///
///   ζ(s₁,a)ζ(s₂,a) = ζ₂(s₁,s₂;a) + ζ₂(s₂,s₁;a) + ζ(s₁+s₂,a),
///
/// which every correct evaluator pair must satisfy to within its error
/// bars. Returns |lhs - rhs|.
pub fn harmonic_product_residual(s1: C64, s2: C64, a: f64, cfg: &EvalConfig) -> Result<f64> {
    check_shift(a)?;
    let z1 = hurwitz_any_shift(s1, a, 0, cfg)?;
    let z2 = hurwitz_any_shift(s2, a, 0, cfg)?;
    let zsum = hurwitz_any_shift(s1 + s2, a, 0, cfg)?;
    let one = C64::new(1.0, 0.0);
    let d12 = zeta2(&DoublePoint::new(s1, s2, a, one, one)?, cfg)?;
    let d21 = zeta2(&DoublePoint::new(s2, s1, a, one, one)?, cfg)?;
    let lhs = z1.value * z2.value;
    let rhs = d12.value + d21.value + zsum.value;
    Ok((lhs - rhs).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta_double::double_series;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    fn one() -> C64 {
        C64::new(1.0, 0.0)
    }

    #[test]
    fn diagonal_matches_direct_summation() {
        for &(s, a) in &[(2.3, 1.0), (2.5, 0.6), (3.0, 0.3), (2.2, 0.8)] {
            let ident = diagonal_identity(re(s), a, &cfg()).unwrap();
            let p = DoublePoint::new(re(s), re(s), a, one(), one()).unwrap();
            let direct = double_series(&p, &cfg()).unwrap();
            let diff = (ident.value - direct.value).norm();
            assert!(
                diff < 1e-8,
                "(s, a) = ({s}, {a}): identity {} vs series {} (Δ = {diff:.2e})",
                ident.value,
                direct.value
            );
        }
    }

    #[test]
    fn diagonal_continues_below_the_series_region() {
        // frozen: ζ₂(0.85, 0.85; 1) — also reproduced by the continuation
        let e = diagonal_identity(re(0.85), 1.0, &cfg()).unwrap();
        assert!((e.value.re - 17.580790998444900).abs() < 1e-9, "{}", e.value.re);
        // negative diagonal values exist too: continue to σ < 1/2
        let e = diagonal_identity(re(0.25), 1.0, &cfg()).unwrap();
        assert!(e.value.re.is_finite());
    }

    #[test]
    fn diagonal_pole_guards() {
        assert!(matches!(diagonal_identity(re(1.0), 1.0, &cfg()), Err(Error::Pole(_))));
        assert!(matches!(diagonal_identity(re(0.5), 1.0, &cfg()), Err(Error::Pole(_))));
    }

    #[test]
    fn harmonic_product_holds_in_region() {
        for &(s1, s2, a) in &[
            (2.0, 2.0, 1.0),
            (2.5, 1.7, 0.5),
            (3.0, 2.2, 0.75),
            (1.9, 1.6, 0.3),
        ] {
            let r = harmonic_product_residual(re(s1), re(s2), a, &cfg()).unwrap();
            assert!(r < 1e-8, "residual at ({s1}, {s2}; {a}) = {r:.2e}");
        }
    }

    #[test]
    fn harmonic_product_holds_under_continuation() {
        // one exponent inside the strip: only the continuation reaches both
        // orders, and the identity continues analytically
        let r = harmonic_product_residual(re(0.5), re(1.8), 1.0, &cfg()).unwrap();
        assert!(r < 1e-7, "residual = {r:.2e}");
    }

    #[test]
    fn harmonic_product_complex() {
        let r =
            harmonic_product_residual(C64::new(2.0, 1.5), re(2.2), 0.8, &cfg()).unwrap();
        assert!(r < 1e-8, "residual = {r:.2e}");
    }
}
