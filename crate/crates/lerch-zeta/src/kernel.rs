//! The real kernel h(a, x) = e^{(1-a)x}/(eˣ - 1) - 1/x whose sign on (0, ∞)
//! governs where the shifted zeta functions can have real zeros.
//!
//! The two competing terms both blow up like 1/x at the origin, so the
//! difference is formed three ways depending on x: a Taylor quotient below
//! [`TAYLOR_CUTOFF`], the exponentially-stable form in the midrange, and the
//! same form with the underflowing exponential dropped for very large x.

use crate::error::{Error, Result};

/// Below this x the direct difference loses digits to cancellation and the
/// kernel switches to a Taylor quotient. At the cutoff the direct form still
/// carries ~13 correct digits, so the two branches overlap safely.
const TAYLOR_CUTOFF: f64 = 1e-3;

/// Terms kept in the Taylor quotient; the truncation error is O(x⁸) ≈ 10⁻²⁴
/// relative at the cutoff.
const TAYLOR_TERMS: usize = 8;

fn check_shift(a: f64) -> Result<()> {
    if !(a > 0.0 && a <= 1.0) || !a.is_finite() {
        return Err(Error::Domain(format!("shift a = {a} outside (0, 1]")));
    }
    Ok(())
}

/// h(a, x) for x > 0. Continuous across the branch cutoff to ~1e-12.
pub fn zeta_kernel(a: f64, x: f64) -> Result<f64> {
    check_shift(a)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("kernel argument x = {x} outside (0, ∞)")));
    }
    Ok(kernel_value(a, x))
}

/// Unchecked kernel for integrand closures whose arguments are produced by
/// the quadrature rules (always finite and positive) with a pre-validated a.
pub(crate) fn kernel_value(a: f64, x: f64) -> f64 {
    if x < TAYLOR_CUTOFF {
        // h = Σ_{k≥2} c_k x^k / Σ_{k≥2} x^k/(k-1)! with
        // c_k = (1-a)^{k-1}/(k-1)! - 1/k!; both series share the factor x².
        let mut num = 0.0;
        let mut den = 0.0;
        let mut pow = 1.0; // x^{k-2}
        let mut shift_pow = 1.0 - a; // (1-a)^{k-1}
        let mut fact_km1 = 1.0; // (k-1)!
        for j in 0..TAYLOR_TERMS {
            let k = (j + 2) as f64;
            let c = shift_pow / fact_km1 - 1.0 / (fact_km1 * k);
            num += c * pow;
            den += pow / fact_km1;
            pow *= x;
            shift_pow *= 1.0 - a;
            fact_km1 *= k;
        }
        return num / den;
    }
    // e^{(1-a)x}/(eˣ-1) = e^{-ax}/(1 - e^{-x}): every exponential stays ≤ 1,
    // and expm1 keeps the denominator fully accurate for small x.
    (-a * x).exp() / -(-x).exp_m1() - 1.0 / x
}

/// Numerator n(a, x) = x e^{(1-a)x} - eˣ + 1 of the kernel over the positive
/// denominator x(eˣ - 1); it carries the kernel's sign without cancellation
/// concerns and is the quantity the negativity proof differentiates.
pub fn kernel_numerator(a: f64, x: f64) -> Result<f64> {
    check_shift(a)?;
    if !x.is_finite() {
        return Err(Error::Domain(format!("numerator argument x = {x} is not finite")));
    }
    Ok(x * ((1.0 - a) * x).exp() - x.exp() + 1.0)
}

/// Numerical certificate that h(a, ·) < 0 on all of (0, ∞).
///
/// Two independent checks run over a logarithmic grid:
/// 1. h(a, x) < 0 at every grid point, and
/// 2. the derivative inequality 1 + (1-a)x < e^{ax}, which forces the
///    numerator (zero at x = 0) to decrease and therefore pins the sign
///    *between* grid points as well whenever a ≥ 1/2.
#[derive(Debug, Clone, Copy)]
pub struct NegativityCertificate {
    /// Both checks passed at every grid point.
    pub holds: bool,
    /// Largest kernel value seen on the grid.
    pub max_value: f64,
    /// Abscissa of the largest kernel value.
    pub argmax_x: f64,
    /// A grid point with h(a, x) ≥ 0, when one exists.
    pub witness: Option<f64>,
    pub grid_points: usize,
}

pub fn negativity_certificate(a: f64) -> Result<NegativityCertificate> {
    check_shift(a)?;
    const POINTS: usize = 200;
    let (lo, hi) = (1e-6_f64, 50.0_f64);
    let ratio = (hi / lo).ln() / (POINTS - 1) as f64;
    let mut max_value = f64::NEG_INFINITY;
    let mut argmax_x = lo;
    let mut witness = None;
    let mut derivative_ok = true;
    for i in 0..POINTS {
        let x = lo * (ratio * i as f64).exp();
        let h = zeta_kernel(a, x)?;
        if h > max_value {
            max_value = h;
            argmax_x = x;
        }
        if h >= 0.0 && witness.is_none() {
            witness = Some(x);
        }
        if 1.0 + (1.0 - a) * x >= (a * x).exp() {
            derivative_ok = false;
        }
    }
    Ok(NegativityCertificate {
        holds: witness.is_none() && derivative_ok,
        max_value,
        argmax_x,
        witness,
        grid_points: POINTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn frozen_values() {
        // h(1, 1) = 1/(e-1) - 1
        let h = zeta_kernel(1.0, 1.0).unwrap();
        assert!((h + 0.41802329313067355).abs() < 1e-15);
        // n(1, 1) = 2 - e
        let n = kernel_numerator(1.0, 1.0).unwrap();
        assert!((n + 0.71828182845904523).abs() < 1e-15);
    }

    #[test]
    fn small_x_limit_is_half_minus_a() {
        for a in [0.25, 0.5, 0.75, 1.0] {
            let h = zeta_kernel(a, 1e-9).unwrap();
            assert!((h - (0.5 - a)).abs() < 1e-9, "a = {a}: {h}");
        }
    }

    #[test]
    fn branches_agree_at_the_cutoff() {
        for a in [0.1, 0.5, 0.9, 1.0] {
            let below = zeta_kernel(a, TAYLOR_CUTOFF * (1.0 - 1e-9)).unwrap();
            let above = zeta_kernel(a, TAYLOR_CUTOFF * (1.0 + 1e-9)).unwrap();
            assert!((below - above).abs() < 1e-11, "a = {a}: {below} vs {above}");
        }
    }

    #[test]
    fn sign_structure_below_one_half() {
        // For a < 1/2 the kernel starts positive and ends negative.
        assert!(zeta_kernel(0.3, 1e-4).unwrap() > 0.0);
        assert!(zeta_kernel(0.3, 1.0).unwrap() > 0.0);
        assert!(zeta_kernel(0.3, 50.0).unwrap() < 0.0);
    }

    #[test]
    fn certificate_splits_at_one_half() {
        for a in [0.5, 0.6, 0.75, 1.0] {
            let cert = negativity_certificate(a).unwrap();
            assert!(cert.holds, "certificate should hold at a = {a}");
            assert!(cert.max_value < 0.0);
        }
        for a in [0.1, 0.3, 0.49] {
            let cert = negativity_certificate(a).unwrap();
            assert!(!cert.holds, "certificate should fail at a = {a}");
            assert!(cert.witness.is_some());
            assert!(cert.max_value > 0.0);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(zeta_kernel(0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(zeta_kernel(1.5, 1.0), Err(Error::Domain(_))));
        assert!(matches!(zeta_kernel(0.5, 0.0), Err(Error::Domain(_))));
        assert!(matches!(zeta_kernel(0.5, -1.0), Err(Error::Domain(_))));
    }

    proptest! {
        #[test]
        fn kernel_negative_for_large_shift(a in 0.5f64..=1.0, x in 1e-6f64..100.0) {
            prop_assert!(zeta_kernel(a, x).unwrap() < 0.0);
        }

        #[test]
        fn kernel_sign_matches_numerator(a in 0.01f64..=1.0, x in 1e-6f64..500.0) {
            let h = zeta_kernel(a, x).unwrap();
            let n = kernel_numerator(a, x).unwrap();
            // Signs agree whenever the numerator is clear of rounding noise.
            if n.abs() > 1e-12 * x.exp() {
                prop_assert_eq!(h > 0.0, n > 0.0);
            }
        }
    }
}
