//! Direct summation of Φ₂ over the outer index, with the inner sum
//! recognized as a shifted single-variable Φ:
//!
//!   Φ₂(s₁, s₂, a, z₁, z₂) = Σ_{m≥0} z₁^m (m+a)^{-s₁} · Φ(s₂, m+a+1, z₂).
//!
//! Valid where the double sum converges absolutely: Re s₁ > 0, Re s₂ > 1 and
//! Re(s₁+s₂) > 2 for unit twists, Re s₁ > 1 and Re s₂ > 1 otherwise. The
//! outer tail bound adapts to the twist class — integral comparison for
//! z₁ = 1, Abel summation on the unit circle, geometric decay inside the
//! disk — and the inner values are summed with their own tolerance three
//! orders below the outer target so inner noise never dominates.

use crate::config::{is_one, DoublePoint, EvalConfig};
use crate::error::{Error, Result};
use crate::numerics::{pow_real_base, KahanSum};
use crate::zeta_single::lerch_phi_any_shift;
use crate::{Evaluation, C64};

/// Outer-term budget beyond which direct summation is refused; slowly
/// converging cases belong to the continuation or integral evaluators.
const MAX_OUTER_TERMS: usize = 2_000_000;

/// How the outer twist z₁ controls the tail of the outer sum.
enum OuterTail {
    /// z₁ = 1: Σ_{k>M} F(k) ≤ ∫ = c (M+a)^{2-σ₁-σ₂} / (σ₁+σ₂-2).
    Unit,
    /// |z₁| = 1, z₁ ≠ 1: Abel summation, ≤ factor · F(M).
    Boundary { factor: f64 },
    /// |z₁| < 1: geometric, ≤ F(M) · r/(1-r).
    Interior { r: f64 },
}

impl OuterTail {
    /// Envelope bound on the tail after summing index m, where
    /// F(m) = c·(m+a)^{1-σ₁-σ₂} dominates |z₁^m (m+a)^{-s₁} Φ(s₂, m+a+1, z₂)|.
    fn bound(&self, envelope: f64, base: f64, decay: f64) -> f64 {
        match *self {
            OuterTail::Unit => envelope * base / decay,
            OuterTail::Boundary { factor } => factor * envelope,
            OuterTail::Interior { r } => envelope * r / (1.0 - r),
        }
    }
}

pub fn double_series(p: &DoublePoint, cfg: &EvalConfig) -> Result<Evaluation> {
    let DoublePoint { s1, s2, a, z1, z2 } = *p;
    let (sig1, sig2) = (s1.re, s2.re);
    let unit_twists = is_one(z1) && is_one(z2);
    if unit_twists {
        if !(sig1 > 0.0 && sig2 > 1.0 && sig1 + sig2 > 2.0) {
            return Err(Error::Domain(format!(
                "double series with unit twists needs Re s1 > 0, Re s2 > 1, \
                 Re(s1+s2) > 2; got ({sig1}, {sig2})"
            )));
        }
    } else if !(sig1 > 1.0 && sig2 > 1.0) {
        return Err(Error::Domain(format!(
            "double series with a non-unit twist needs Re s1 > 1 and Re s2 > 1, \
             got ({sig1}, {sig2})"
        )));
    }

    // |inner(m)| ≤ ζ(σ₂, m+a+1) ≤ σ₂/(σ₂-1)·(m+a)^{1-σ₂} =: part of F(m).
    let c = sig2 / (sig2 - 1.0);
    let decay = sig1 + sig2 - 2.0; // > 0 in both admissible branches
    let r1 = z1.norm();
    let tail = if is_one(z1) {
        OuterTail::Unit
    } else if r1 > 1.0 - 1e-12 {
        let factor =
            2.0 * (1.0 + (s1.norm() + s2.norm()) / (sig1 + sig2 - 1.0)) / (C64::new(1.0, 0.0) - z1).norm();
        OuterTail::Boundary { factor }
    } else {
        OuterTail::Interior { r: r1 }
    };

    let cap = MAX_OUTER_TERMS.min(cfg.max_terms);
    let target = 0.5 * cfg.tol;
    // Cheap a-priori refusal for the algebraic tails (the geometric one is
    // checked by the walk itself).
    let worst_base = cap as f64 + a;
    let worst = tail.bound(c * worst_base.powf(1.0 - sig1 - sig2), worst_base, decay);
    if !matches!(tail, OuterTail::Interior { .. }) && worst > target {
        return Err(Error::NonConvergence(format!(
            "outer sum cannot reach tolerance {:.1e} within {cap} terms \
             (tail bound {worst:.2e}); use the continuation or integral evaluator",
            cfg.tol
        )));
    }

    let inner_cfg = EvalConfig { tol: (cfg.tol * 1e-3).max(1e-14), ..*cfg };
    let boundary_z1 = r1 > 1.0 - 1e-12 && !is_one(z1);
    let mut acc = KahanSum::new();
    let mut inner_err = 0.0;
    let mut work = 0usize;
    let mut z1pow = C64::new(1.0, 0.0);
    let mut m = 0usize;
    loop {
        let weight = z1pow * pow_real_base(m as f64 + a, -s1);
        let inner = lerch_phi_any_shift(s2, m as f64 + a + 1.0, z2, &inner_cfg)?;
        acc.add(weight * inner.value);
        inner_err += weight.norm() * inner.err_estimate;
        work += inner.work + 1;

        let base = m as f64 + a;
        let envelope = z1pow.norm() * c * base.powf(1.0 - sig1 - sig2);
        let bound = tail.bound(envelope, base, decay);
        if bound <= target {
            let value = acc.value();
            return Ok(Evaluation {
                value,
                err_estimate: bound + inner_err + 4e-16 * (m as f64).sqrt() * value.norm(),
                work,
            });
        }
        m += 1;
        if m > cap {
            return Err(Error::NonConvergence(format!(
                "outer sum exceeded {cap} terms with tail bound {bound:.2e} \
                 (target {target:.1e})"
            )));
        }
        z1pow *= z1;
        if boundary_z1 && m % 4096 == 0 {
            // powers of a unit-modulus twist drift off the circle; renorm
            z1pow /= z1pow.norm();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta_single::root_of_unity;

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

    // Frozen reference values (20-digit independent evaluation).
    const Z2_2_2_1: f64 = 0.8117424252833536; // π⁴/120
    const Z2_25_2_HALF: f64 = 5.5214888820320730;
    const Z2_2_2_03: f64 = 13.045996045615286;
    const Z2_3_15_075: f64 = 4.5048765597552017;
    const Z2_2PI_2_1_RE: f64 = 0.7295447874492094;
    const Z2_2PI_2_1_IM: f64 = -0.1233027773954949;
    const Z2_HALFTWIST: f64 = 0.7045653567950742; // z₁ = 1/2
    const Z2_ALT: f64 = 0.2029356063208384; // z₂ = -1
    const Z2_ALT_GEN: f64 = 2.2405546848387139; // (2.5, 1.5; 0.5), z₂ = -1

    #[test]
    fn unit_twist_values() {
        let e = double_series(&pt(re(2.0), re(2.0), 1.0, one(), one()), &cfg()).unwrap();
        assert!((e.value.re - Z2_2_2_1).abs() < 1e-10, "{}", e.value.re);
        assert!(e.value.im.abs() < 1e-12);
        assert!((e.value.re - Z2_2_2_1).abs() <= e.err_estimate * 10.0);

        let e = double_series(&pt(re(2.5), re(2.0), 0.5, one(), one()), &cfg()).unwrap();
        assert!((e.value.re - Z2_25_2_HALF).abs() < 2e-10, "{}", e.value.re);

        let e = double_series(&pt(re(2.0), re(2.0), 0.3, one(), one()), &cfg()).unwrap();
        assert!((e.value.re - Z2_2_2_03).abs() < 2e-10, "{}", e.value.re);

        let e = double_series(&pt(re(3.0), re(1.5), 0.75, one(), one()), &cfg()).unwrap();
        assert!((e.value.re - Z2_3_15_075).abs() < 2e-10, "{}", e.value.re);
    }

    #[test]
    fn complex_exponent() {
        let e =
            double_series(&pt(C64::new(2.0, 1.0), re(2.0), 1.0, one(), one()), &cfg()).unwrap();
        assert!((e.value.re - Z2_2PI_2_1_RE).abs() < 1e-10, "{}", e.value.re);
        assert!((e.value.im - Z2_2PI_2_1_IM).abs() < 1e-10, "{}", e.value.im);
    }

    #[test]
    fn twisted_values() {
        // interior z₁: geometric outer tail
        let e = double_series(&pt(re(2.0), re(2.0), 1.0, re(0.5), one()), &cfg()).unwrap();
        assert!((e.value.re - Z2_HALFTWIST).abs() < 1e-10, "{}", e.value.re);
        assert!(e.work < 20_000, "geometric tail should need few terms, used {}", e.work);
        // alternating inner sum (root-of-unity split path)
        let e = double_series(&pt(re(2.0), re(2.0), 1.0, one(), re(-1.0)), &cfg()).unwrap();
        assert!((e.value.re - Z2_ALT).abs() < 1e-10, "{}", e.value.re);
        let e = double_series(&pt(re(2.5), re(1.5), 0.5, one(), re(-1.0)), &cfg()).unwrap();
        assert!((e.value.re - Z2_ALT_GEN).abs() < 1e-9, "{}", e.value.re);
    }

    #[test]
    fn complex_boundary_twists() {
        // (1.7, 1.3; 1 | i, -1) and (1.6, 1.4; 1 | i, i), frozen independently.
        // The Abel-bounded outer walk needs ~(1/tol)^{1/2} terms; 1e-8 keeps
        // the test quick while still checking 8 digits.
        let loose = EvalConfig::with_tol(1e-8);
        let i = C64::new(0.0, 1.0);
        let e = double_series(&pt(re(1.7), re(1.3), 1.0, i, re(-1.0)), &loose).unwrap();
        assert!((e.value.re - 0.2496307276055183).abs() < 1e-8, "{}", e.value.re);
        assert!((e.value.im - 0.0393072878678822).abs() < 1e-8, "{}", e.value.im);
        let e = double_series(&pt(re(1.6), re(1.4), 1.0, i, i), &loose).unwrap();
        assert!((e.value.re - 0.2446730315154194).abs() < 1e-8, "{}", e.value.re);
        assert!((e.value.im - 0.1830479100159840).abs() < 1e-8, "{}", e.value.im);
        // the twists must be recognized as 4th roots of unity internally
        assert_eq!(crate::zeta_single::detect_root_of_unity(i), Some((1, 4)));
        assert!((root_of_unity(1, 4) - i).norm() < 1e-15);
    }

    #[test]
    fn refusals() {
        // strip arguments: absolutely divergent, must refuse loudly
        assert!(matches!(
            double_series(&pt(re(0.5), re(1.2), 1.0, one(), one()), &cfg()),
            Err(Error::Domain(_))
        ));
        // in-region but hopelessly slow at this tolerance
        assert!(matches!(
            double_series(&pt(re(1.0), re(1.05), 1.0, one(), one()), &cfg()),
            Err(Error::NonConvergence(_))
        ));
        // non-unit twist needs both re parts > 1
        assert!(matches!(
            double_series(&pt(re(0.8), re(2.0), 1.0, re(-1.0), one()), &cfg()),
            Err(Error::Domain(_))
        ));
    }
}
