//! Hurwitz zeta ζ(s, a) = Σ_{n≥0} (n+a)^{-s} by three routes:
//!
//! * direct summation with an integral tail bound (Re s > 1 only);
//! * Euler-Maclaurin with a rigorously bounded asymptotic tail, the general
//!   workhorse and the analytic continuation to Re s > -35;
//! * the real-integral representation through the kernel h(a, x), valid on
//!   0 < Re s (s ≠ 1), kept as an independent cross-check of the other two.

use crate::config::{check_shift, EvalConfig};
use crate::error::{Error, Result};
use crate::kernel::kernel_value;
use crate::numerics::{
    default_bernoulli, expm1_over, gamma, integrate_from_one, integrate_unit_interval,
    periodic_tail_integral, pow_real_base, KahanSum,
};
use crate::{Evaluation, C64};

/// Treat s within this distance of 1 as the pole itself.
const POLE_RADIUS: f64 = 1e-14;

fn check_pole(s: C64) -> Result<()> {
    if (s - C64::new(1.0, 0.0)).norm() < POLE_RADIUS {
        return Err(Error::Pole("ζ(s, a) has its simple pole at s = 1".into()));
    }
    Ok(())
}

/// Direct summation. Refuses Re s ≤ 1 and tolerances that would need more
/// than `cfg.max_terms` terms; the tail is bounded by ∫_N^∞ (x+a)^{-σ} dx.
pub fn hurwitz_zeta_series(s: C64, a: f64, cfg: &EvalConfig) -> Result<Evaluation> {
    check_shift(a)?;
    let sigma = s.re;
    if sigma <= 1.0 {
        return Err(Error::Domain(format!(
            "direct sum for ζ(s, a) requires Re s > 1, got {sigma}"
        )));
    }
    // (N+a)^{1-σ}/(σ-1) ≤ tol  ⇔  N+a ≥ (tol·(σ-1))^{1/(1-σ)}
    let needed = (cfg.tol * (sigma - 1.0)).powf(1.0 / (1.0 - sigma));
    if !needed.is_finite() || needed >= cfg.max_terms as f64 {
        return Err(Error::NonConvergence(format!(
            "direct sum needs ≥ {needed:.2e} terms to reach tolerance {:.1e}; \
             use the Euler-Maclaurin evaluator",
            cfg.tol
        )));
    }
    let last = (needed - a).ceil().max(1.0) as usize;
    let mut acc = KahanSum::new();
    for n in 0..=last {
        acc.add(pow_real_base(n as f64 + a, -s));
    }
    let base = last as f64 + a;
    let tail = base.powf(1.0 - sigma) / (sigma - 1.0);
    let value = acc.value();
    Ok(Evaluation { value, err_estimate: tail + 4e-16 * value.norm(), work: last + 1 })
}

/// Euler-Maclaurin evaluation with an arbitrary positive shift. The public
/// wrappers restrict a to (0, 1]; continuation code reuses this directly for
/// shifted sums with a ≫ 1, where the boundary sum shrinks to nothing.
pub(crate) fn hurwitz_any_shift(
    s: C64,
    a: f64,
    boundary_terms: usize,
    cfg: &EvalConfig,
) -> Result<Evaluation> {
    check_pole(s)?;
    em_core(s, a, boundary_terms, cfg, false)
}

/// ζ(s, a) - 1/(s-1): the pole removed analytically, so s = 1 is a regular
/// point (value -ψ(a)). Character sums whose coefficients annihilate the
/// pole use this to stay finite at and near s = 1.
pub(crate) fn hurwitz_any_shift_deflated(
    s: C64,
    a: f64,
    cfg: &EvalConfig,
) -> Result<Evaluation> {
    em_core(s, a, 0, cfg, true)
}

fn em_core(
    s: C64,
    a: f64,
    boundary_terms: usize,
    cfg: &EvalConfig,
    deflate: bool,
) -> Result<Evaluation> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("shift a = {a} must be positive and finite")));
    }
    if s.re < -35.0 {
        return Err(Error::Domain(format!(
            "Re s = {} is below the supported continuation range (Re s ≥ -35)",
            s.re
        )));
    }
    if s.norm() > 60.0 {
        return Err(Error::Domain(format!(
            "|s| = {:.2} exceeds the supported range (|s| ≤ 60)",
            s.norm()
        )));
    }

    let bern = default_bernoulli();

    // At s = -n the continuation collapses to the exact closed form
    // ζ(-n, a) = -B_{n+1}(a)/(n+1): a short polynomial, with none of the
    // catastrophic boundary-sum cancellation a generic negative-σ evaluation
    // suffers in double precision. Valid for every a > 0.
    if s.im == 0.0 && s.re <= 0.0 {
        let n = (-s.re).round();
        if (s.re + n).abs() < 1e-12 {
            let k = n as usize;
            let poly = bern.polynomial(k + 1, a);
            let mut v = C64::new(-poly / (n + 1.0), 0.0);
            if deflate {
                v -= 1.0 / (s - 1.0);
            }
            return Ok(Evaluation {
                value: v,
                err_estimate: 1e-15 * (n + 2.0) * v.norm().max(poly.abs()),
                work: k + 1,
            });
        }
    }

    // Push the summation boundary far enough out that the asymptotic tail
    // terms shrink geometrically: their ratio is ≈ |s+j|²/(2π(M+a))², so
    // M+a ≳ 1.2|s| gives a comfortable margin, with an absolute floor.
    let target_base = 16.0_f64.max(2.0 + 1.2 * s.norm());
    let m = boundary_terms.max((target_base - a).ceil().max(0.0) as usize);

    let mut head = KahanSum::new();
    let mut head_max = 0.0f64;
    for n in 0..=m {
        let term = pow_real_base(n as f64 + a, -s);
        head_max = head_max.max(term.norm());
        head.add(term);
    }
    let base = m as f64 + a;
    let ln_base = base.ln();
    // (M+a)^{1-s}/(s-1), or with the global 1/(s-1) subtracted:
    // (base^{1-s} - 1)/(s-1) = -ln(base) · (e^w - 1)/w at w = (1-s)ln(base).
    let pole_term = if deflate {
        -ln_base * expm1_over((C64::new(1.0, 0.0) - s) * ln_base)
    } else {
        (-(s - 1.0) * ln_base).exp() / (s - 1.0)
    };
    let half_term = -0.5 * (-s * ln_base).exp();
    head_max = head_max.max(pole_term.norm()).max(half_term.norm());
    // Below σ = 0 the boundary sum and the pole term grow like (M+a)^{-σ}
    // while the result stays moderate; their cancellation leaves an
    // irreducible double-precision noise floor that the error estimate must
    // carry and the tail target must respect (no point chasing a tail bound
    // finer than the noise the head already made).
    let floor = 1e-15 * (1.0 + s.norm()) * head_max;
    let tol_abs = (0.05 * cfg.tol).max(floor);

    // Tail: -s ∫_M^∞ B̃₁(x)(x+a)^{-s-1} dx, integrated by parts repeatedly
    // (see `periodic_tail_integral`); the -s prefactor scales both the
    // partial sums and the attainable bound.
    let s_norm = s.norm().max(1e-300);
    let (raw, raw_bound, steps) =
        periodic_tail_integral(bern, 1, s + 1.0, base, tol_abs / s_norm).ok_or_else(|| {
            Error::NonConvergence("Euler-Maclaurin tail never reached a bounded state".into())
        })?;
    let tail_sum = -s * raw;
    let bound = s_norm * raw_bound;
    if bound > 1000.0 * tol_abs {
        return Err(Error::NonConvergence(format!(
            "Euler-Maclaurin tail stalled at {bound:.2e} (target {tol_abs:.2e})"
        )));
    }
    let value = head.value() + pole_term + half_term + tail_sum;
    Ok(Evaluation {
        value,
        err_estimate: bound + floor + 4e-16 * value.norm(),
        work: m + 1 + steps,
    })
}

/// Euler-Maclaurin evaluation of ζ(s, a). `boundary_terms` is the requested
/// direct-sum cutoff; it is raised automatically whenever the asymptotic
/// tail needs a larger base, so any value (including 0) gives full accuracy.
pub fn hurwitz_zeta_em(s: C64, a: f64, boundary_terms: usize, cfg: &EvalConfig) -> Result<Evaluation> {
    check_shift(a)?;
    hurwitz_any_shift(s, a, boundary_terms, cfg)
}

/// Kernel-integral evaluation, valid on Re s > 0, s ≠ 1:
///
///   Γ(s) ζ(s, a) = ∫₀¹ x^{s-1} h(a,x) dx + 1/(s-1) + ∫₁^∞ x^{s-1} e^{-ax}/(1-e^{-x}) dx.
///
/// Slower than Euler-Maclaurin and deliberately independent of it: it shares
/// no Bernoulli machinery, so agreement in the critical strip is meaningful.
pub fn hurwitz_zeta_integral(s: C64, a: f64, cfg: &EvalConfig) -> Result<Evaluation> {
    check_shift(a)?;
    check_pole(s)?;
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "integral evaluator requires Re s > 0, got {}",
            s.re
        )));
    }
    let g = gamma(s)?;
    let sm1 = s - 1.0;
    let head_budget = cfg.quad.with_singularity(s.re - 1.0);
    let head = integrate_unit_interval(
        |x| (sm1 * x.ln()).exp() * kernel_value(a, x),
        &head_budget,
    )?;
    let tail = integrate_from_one(
        |x| (sm1 * x.ln() - a * x).exp() / -(-x).exp_m1(),
        &cfg.quad,
    )?;
    let total = head.value + tail.value + 1.0 / sm1;
    let value = total / g;
    Ok(Evaluation {
        value,
        err_estimate: (head.err_estimate + tail.err_estimate) / g.norm() + 1e-15 * value.norm(),
        work: head.evals + tail.evals,
    })
}

/// ζ(s, a) by the best method for the arguments: Euler-Maclaurin everywhere
/// it applies — it is the fastest and the only route below Re s = 0.
pub fn hurwitz_zeta(s: C64, a: f64, cfg: &EvalConfig) -> Result<Evaluation> {
    hurwitz_zeta_em(s, a, 0, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    // Frozen classical values.
    const ZETA_2: f64 = 1.6449340668482264; // π²/6
    const ZETA_4: f64 = 1.0823232337111382; // π⁴/90
    const ZETA_3: f64 = 1.2020569031595943;
    const ZETA_HALF: f64 = -1.4603545088095868;
    const EULER_GAMMA: f64 = 0.5772156649015329;

    #[test]
    fn series_hits_classical_values() {
        // The integral tail bound needs ~(1/tol)^{1/(σ-1)} terms, so direct
        // summation is only reasonable from σ = 3 up at these tolerances.
        let e3 = hurwitz_zeta_series(re(3.0), 1.0, &cfg()).unwrap();
        assert!((e3.value.re - ZETA_3).abs() < 2e-10, "ζ(3) = {}", e3.value.re);
        assert!(e3.err_estimate < 1e-9);
        let sharp = EvalConfig::with_tol(1e-12);
        let e4 = hurwitz_zeta_series(re(4.0), 1.0, &sharp).unwrap();
        assert!((e4.value.re - ZETA_4).abs() < 1e-12);
        // Odd-denominator split: ζ(s, 1/2) = (2^s - 1)ζ(s), so 15·ζ(4) here.
        let eh = hurwitz_zeta_series(re(4.0), 0.5, &sharp).unwrap();
        assert!((eh.value.re - 15.0 * ZETA_4).abs() < 2e-11, "{}", eh.value.re);
    }

    #[test]
    fn series_refuses_out_of_domain() {
        assert!(matches!(
            hurwitz_zeta_series(re(0.8), 1.0, &cfg()),
            Err(Error::Domain(_))
        ));
        // In-domain but hopeless within the term cap.
        assert!(matches!(
            hurwitz_zeta_series(re(1.2), 1.0, &cfg()),
            Err(Error::NonConvergence(_))
        ));
    }

    #[test]
    fn euler_maclaurin_matches_series_where_both_run() {
        for &(sig, im, a) in
            &[(3.2, 0.0, 1.0), (3.0, 0.0, 0.3), (7.5, -2.0, 0.6), (12.0, 5.0, 1.0), (4.0, 1.0, 0.25)]
        {
            let s = C64::new(sig, im);
            let em = hurwitz_zeta_em(s, a, 0, &cfg()).unwrap();
            let ser = hurwitz_zeta_series(s, a, &cfg()).unwrap();
            let diff = (em.value - ser.value).norm();
            assert!(
                diff <= 1e-9 * em.value.norm().max(1.0),
                "s = {s}, a = {a}: EM {} vs series {} (Δ = {diff:.2e})",
                em.value,
                ser.value
            );
        }
    }

    #[test]
    fn continuation_values_at_nonpositive_integers() {
        // ζ(-n, a) = -B_{n+1}(a)/(n+1)
        let bern = default_bernoulli();
        for &a in &[0.25, 0.3, 0.5, 0.75, 1.0] {
            for n in 0..=4usize {
                let e = hurwitz_zeta_em(re(-(n as f64)), a, 0, &cfg()).unwrap();
                let expected = -bern.polynomial(n + 1, a) / (n as f64 + 1.0);
                assert!(
                    (e.value.re - expected).abs() < 1e-12,
                    "ζ(-{n}, {a}) = {} expected {expected}",
                    e.value.re
                );
                assert!(e.value.im.abs() < 1e-13);
            }
        }
    }

    #[test]
    fn classical_continuation_points() {
        let sharp = EvalConfig::with_tol(1e-13);
        let z_half = hurwitz_zeta_em(re(0.5), 1.0, 0, &sharp).unwrap();
        assert!((z_half.value.re - ZETA_HALF).abs() < 1e-12, "{}", z_half.value.re);
        let z2 = hurwitz_zeta_em(re(2.0), 1.0, 0, &sharp).unwrap();
        assert!((z2.value.re - ZETA_2).abs() < 1e-12, "{}", z2.value.re);
        let z3 = hurwitz_zeta_em(re(3.0), 1.0, 0, &sharp).unwrap();
        assert!((z3.value.re - ZETA_3).abs() < 1e-12);
        // ζ(2, 1/4) = π² + 8·Catalan
        let e14 = hurwitz_zeta_em(re(2.0), 0.25, 0, &sharp).unwrap();
        assert!((e14.value.re - 17.197329154507113).abs() < 1e-11, "{}", e14.value.re);
    }

    #[test]
    fn laurent_expansion_near_the_pole() {
        // ζ(1+ε) = 1/ε + γ + O(ε)
        let eps = 1e-6;
        let e = hurwitz_zeta_em(re(1.0 + eps), 1.0, 0, &cfg()).unwrap();
        assert!((e.value.re - 1.0 / eps - EULER_GAMMA).abs() < 1e-4);
    }

    #[test]
    fn deflated_value_is_regular_at_the_pole() {
        // lim_{s→1} [ζ(s, a) - 1/(s-1)] = -ψ(a): γ at a = 1, γ + 2ln2 at a = ½.
        let at_one = hurwitz_any_shift_deflated(re(1.0), 1.0, &cfg()).unwrap();
        assert!((at_one.value.re - EULER_GAMMA).abs() < 1e-12, "{}", at_one.value.re);
        let at_half = hurwitz_any_shift_deflated(re(1.0), 0.5, &cfg()).unwrap();
        assert!((at_half.value.re - 1.9635100260214235).abs() < 1e-12, "{}", at_half.value.re);
        // Away from the pole it must differ from ζ by exactly 1/(s-1).
        let s = C64::new(2.5, 1.0);
        let plain = hurwitz_zeta_em(s, 0.7, 0, &cfg()).unwrap();
        let defl = hurwitz_any_shift_deflated(s, 0.7, &cfg()).unwrap();
        let diff = (plain.value - defl.value - 1.0 / (s - 1.0)).norm();
        assert!(diff < 1e-12);
        // And it must vary smoothly across s = 1.
        let below = hurwitz_any_shift_deflated(re(1.0 - 1e-9), 0.3, &cfg()).unwrap();
        let above = hurwitz_any_shift_deflated(re(1.0 + 1e-9), 0.3, &cfg()).unwrap();
        assert!((below.value - above.value).norm() < 1e-7);
    }

    #[test]
    fn pole_and_domain_errors() {
        assert!(matches!(hurwitz_zeta_em(re(1.0), 0.5, 0, &cfg()), Err(Error::Pole(_))));
        assert!(matches!(
            hurwitz_zeta_integral(re(1.0), 0.5, &cfg()),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            hurwitz_zeta_em(re(-40.0), 0.5, 0, &cfg()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            hurwitz_zeta_integral(re(-0.5), 0.5, &cfg()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(hurwitz_zeta_em(re(2.0), 1.5, 0, &cfg()), Err(Error::Domain(_))));
    }

    #[test]
    fn integral_agrees_with_euler_maclaurin_in_the_strip() {
        for &(sig, im) in &[(0.2, 0.0), (0.5, 0.0), (0.8, 0.0), (0.5, 1.5), (0.3, -2.0)] {
            for &a in &[0.3, 0.75, 1.0] {
                let s = C64::new(sig, im);
                let quad = hurwitz_zeta_integral(s, a, &cfg()).unwrap();
                let em = hurwitz_zeta_em(s, a, 0, &cfg()).unwrap();
                let diff = (quad.value - em.value).norm();
                assert!(
                    diff <= 1e-9 * em.value.norm().max(1.0),
                    "s = {s}, a = {a}: integral {} vs EM {} (Δ = {diff:.2e})",
                    quad.value,
                    em.value
                );
            }
        }
    }

    #[test]
    fn integral_agrees_above_the_strip_too() {
        let s = C64::new(2.0, 0.0);
        let quad = hurwitz_zeta_integral(s, 1.0, &cfg()).unwrap();
        assert!((quad.value.re - ZETA_2).abs() < 1e-10, "{}", quad.value.re);
    }

    #[test]
    fn err_estimates_cover_true_error() {
        let exact = ZETA_HALF;
        let e = hurwitz_zeta_em(re(0.5), 1.0, 0, &cfg()).unwrap();
        assert!((e.value.re - exact).abs() <= e.err_estimate.max(1e-15) * 10.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// The value must not depend on the user-requested boundary cutoff.
        #[test]
        fn boundary_cutoff_invariance(
            sig in -5.0f64..10.0,
            im in -10.0f64..10.0,
            a in 0.05f64..=1.0,
        ) {
            let s = C64::new(sig, im);
            prop_assume!((s - C64::new(1.0, 0.0)).norm() > 0.05);
            let base = hurwitz_zeta_em(s, a, 0, &cfg()).unwrap();
            for m in [5usize, 50] {
                let other = hurwitz_zeta_em(s, a, m, &cfg()).unwrap();
                let diff = (base.value - other.value).norm();
                // Each result carries its own error bar (negative σ with a
                // large boundary sum is roundoff-limited); consistency means
                // agreement within the combined bars.
                let allowed = 2.0 * (base.err_estimate + other.err_estimate)
                    + 1e-12 * base.value.norm().max(1.0);
                prop_assert!(
                    diff <= allowed,
                    "M = {} changed the value by {:.2e} (allowed {:.2e})", m, diff, allowed
                );
            }
        }

        /// Forward recurrence ζ(s, a) - ζ(s, a+1)… over the unit shift:
        /// ζ(s, a) = a^{-s} + ζ(s, 1+a-1) holds as Σ starts one step later.
        #[test]
        fn unit_shift_recurrence(
            sig in -3.0f64..8.0,
            im in -8.0f64..8.0,
            a in 0.1f64..=1.0,
        ) {
            let s = C64::new(sig, im);
            prop_assume!((s - C64::new(1.0, 0.0)).norm() > 0.05);
            let whole = hurwitz_any_shift(s, a, 0, &cfg()).unwrap();
            let shifted = hurwitz_any_shift(s, a + 1.0, 0, &cfg()).unwrap();
            let first = pow_real_base(a, -s);
            let diff = (whole.value - shifted.value - first).norm();
            let allowed = 2.0 * (whole.err_estimate + shifted.err_estimate)
                + 1e-12 * whole.value.norm().max(1.0);
            prop_assert!(diff <= allowed, "Δ = {:.2e} (allowed {:.2e})", diff, allowed);
        }
    }
}
