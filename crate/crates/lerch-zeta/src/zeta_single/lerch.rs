//! The twisted sum Φ(s, a, z) = Σ_{n≥0} zⁿ (n+a)^{-s} on the closed unit
//! disk, and the polylogarithm Li_s(z) = z Φ(s, 1, z).
//!
//! Inside the disk the defining series converges for every s and carries a
//! geometric tail bound. On the boundary (z ≠ 1) it converges conditionally
//! for Re s > 0 with an Abel-summation tail bound, and the real-integral
//! representation provides an independent and usually cheaper route. At
//! z = 1 everything delegates to the Hurwitz evaluators.

use crate::config::{check_shift, check_twist, is_one, EvalConfig};
use crate::error::{Error, Result};
use crate::numerics::{
    gamma, integrate_semi_infinite, one_minus_twist_exp, pow_real_base, KahanSum,
};
use crate::zeta_single::hurwitz::{
    hurwitz_any_shift, hurwitz_zeta, hurwitz_zeta_integral, hurwitz_zeta_series,
};
use crate::{Evaluation, C64};
use std::f64::consts::PI;

/// Largest root-of-unity order recognised when splitting a boundary twist
/// into shifted zeta values.
const MAX_ROOT_ORDER: u32 = 120;

/// Direct summation of Φ(s, a, z).
///
/// * |z| < 1: valid for every s (the twist forces convergence);
/// * |z| = 1, z ≠ 1: valid for Re s > 0, tail bounded via Abel summation;
/// * z = 1: delegates to the Hurwitz direct sum (Re s > 1).
pub fn lerch_phi_series(s: C64, a: f64, z: C64, cfg: &EvalConfig) -> Result<Evaluation> {
    check_shift(a)?;
    check_twist(z, "z")?;
    if is_one(z) {
        return hurwitz_zeta_series(s, a, cfg);
    }
    let r = z.norm();
    if r < 1.0 - 1e-12 {
        return interior_series(s, a, z, cfg);
    }
    boundary_series(s, a, z, cfg)
}

/// |z| < 1: walk terms until the geometric tail bound meets tolerance.
fn interior_series(s: C64, a: f64, z: C64, cfg: &EvalConfig) -> Result<Evaluation> {
    let r = z.norm();
    let sigma = s.re;
    let mut acc = KahanSum::new();
    let mut zpow = C64::new(1.0, 0.0);
    for n in 0..cfg.max_terms {
        let base = n as f64 + a;
        let term = zpow * pow_real_base(base, -s);
        acc.add(term);
        // Ratio of successive term magnitudes: r · ((n+1+a)/(n+a))^{-σ},
        // eventually < 1 even for σ < 0.
        let ratio = r * ((base + 1.0) / base).powf(-sigma);
        if ratio < 1.0 {
            let tail = term.norm() * ratio / (1.0 - ratio);
            if tail <= cfg.tol {
                let value = acc.value();
                return Ok(Evaluation {
                    value,
                    err_estimate: tail + 4e-16 * value.norm(),
                    work: n + 1,
                });
            }
        }
        zpow *= z;
    }
    Err(Error::NonConvergence(format!(
        "twisted series did not meet tolerance {:.1e} within {} terms (|z| = {r})",
        cfg.tol, cfg.max_terms
    )))
}

/// |z| = 1, z ≠ 1: partial sums oscillate; Abel summation bounds the
/// remainder by 2 (N+a)^{-σ} (1 + |s|/σ) / |1-z|, which needs Re s > 0.
fn boundary_series(s: C64, a: f64, z: C64, cfg: &EvalConfig) -> Result<Evaluation> {
    let sigma = s.re;
    if sigma <= 0.0 {
        return Err(Error::Domain(format!(
            "boundary series (|z| = 1, z ≠ 1) requires Re s > 0, got {sigma}"
        )));
    }
    let gap = (C64::new(1.0, 0.0) - z).norm();
    let factor = 2.0 * (1.0 + s.norm() / sigma) / gap;
    // (N+a)^{-σ} · factor ≤ tol
    let needed = (cfg.tol / factor).powf(-1.0 / sigma);
    if !needed.is_finite() || needed >= cfg.max_terms as f64 {
        return Err(Error::NonConvergence(format!(
            "boundary series needs ≥ {needed:.2e} terms at Re s = {sigma}; \
             use the integral evaluator"
        )));
    }
    let last = (needed - a).ceil().max(1.0) as usize;
    let mut acc = KahanSum::new();
    let mut zpow = C64::new(1.0, 0.0);
    for n in 0..=last {
        acc.add(zpow * pow_real_base(n as f64 + a, -s));
        zpow *= z;
    }
    let tail = factor * (last as f64 + a).powf(-sigma);
    let value = acc.value();
    Ok(Evaluation {
        value,
        err_estimate: tail + 4e-16 * (last as f64).sqrt() * value.norm(),
        work: last + 1,
    })
}

/// Integral representation Γ(s) Φ(s, a, z) = ∫₀^∞ x^{s-1} e^{-ax}/(1 - z e^{-x}) dx,
/// valid for Re s > 0 whenever z ≠ 1 (at z = 1 the Hurwitz kernel split
/// takes over). Everything is exponentially stable: e^{-x} ≤ 1 throughout.
pub fn lerch_phi_integral(s: C64, a: f64, z: C64, cfg: &EvalConfig) -> Result<Evaluation> {
    check_shift(a)?;
    check_twist(z, "z")?;
    if is_one(z) {
        return hurwitz_zeta_integral(s, a, cfg);
    }
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "integral evaluator requires Re s > 0, got {}",
            s.re
        )));
    }
    let g = gamma(s)?;
    let sm1 = s - 1.0;
    let budget = cfg.quad.with_singularity(s.re - 1.0);
    let integral = integrate_semi_infinite(
        |x| (sm1 * x.ln() - a * x).exp() / one_minus_twist_exp(z, x),
        &budget,
    )?;
    let value = integral.value / g;
    Ok(Evaluation {
        value,
        err_estimate: integral.err_estimate / g.norm() + 1e-15 * value.norm(),
        work: integral.evals,
    })
}

/// Φ(s, a, z) by the most suitable route for the arguments.
pub fn lerch_phi(s: C64, a: f64, z: C64, cfg: &EvalConfig) -> Result<Evaluation> {
    check_shift(a)?;
    check_twist(z, "z")?;
    if is_one(z) {
        return hurwitz_zeta(s, a, cfg);
    }
    let r = z.norm();
    if r < 1.0 - 1e-12 {
        // Interior: the series always converges; it only gets slow very
        // close to the boundary, where the integral takes over (if legal).
        let expected_terms = (cfg.tol.ln() / r.ln()).abs();
        if s.re > 0.0 && expected_terms > 20_000.0 {
            return lerch_phi_integral(s, a, z, cfg);
        }
        return interior_series(s, a, z, cfg);
    }
    // Boundary, z ≠ 1: prefer the cheap series when its a-priori bound is
    // modest, otherwise integrate.
    if let Ok(eval) = boundary_series_if_cheap(s, a, z, cfg) {
        return Ok(eval);
    }
    lerch_phi_integral(s, a, z, cfg)
}

fn boundary_series_if_cheap(s: C64, a: f64, z: C64, cfg: &EvalConfig) -> Result<Evaluation> {
    let sigma = s.re;
    if sigma <= 1.0 {
        return Err(Error::Domain("boundary series too slow below Re s = 1".into()));
    }
    let gap = (C64::new(1.0, 0.0) - z).norm();
    let factor = 2.0 * (1.0 + s.norm() / sigma) / gap;
    let needed = (cfg.tol / factor).powf(-1.0 / sigma);
    if !needed.is_finite() || needed > 200_000.0 {
        return Err(Error::NonConvergence("boundary series too slow here".into()));
    }
    boundary_series(s, a, z, cfg)
}

/// Polylogarithm Li_s(z) = z Φ(s, 1, z) for |z| ≤ 1 (z = 0 gives 0).
pub fn polylog(s: C64, z: C64, cfg: &EvalConfig) -> Result<Evaluation> {
    check_twist(z, "z")?;
    if z.norm() == 0.0 {
        return Ok(Evaluation { value: C64::new(0.0, 0.0), err_estimate: 0.0, work: 0 });
    }
    let phi = lerch_phi(s, 1.0, z, cfg)?;
    Ok(Evaluation { value: z * phi.value, err_estimate: phi.err_estimate, work: phi.work })
}

/// Polylogarithm at a root of unity z = e^{2πi p/q} through shifted zetas:
///
///   Li_s(z) = q^{-s} Σ_{r=1}^{q} z^r ζ(s, r/q).
///
/// Since each ζ(s, r/q) continues to Re s ≤ 0 by Euler-Maclaurin, this
/// extends the boundary polylogarithm far beyond the series/integral domain.
pub fn polylog_from_hurwitz(s: C64, p: i64, q: u32, cfg: &EvalConfig) -> Result<Evaluation> {
    if q == 0 {
        return Err(Error::Domain("root-of-unity order q must be positive".into()));
    }
    let z = root_of_unity(p, q);
    let mut acc = KahanSum::new();
    let mut err = 0.0;
    let mut work = 0;
    let mut zpow = C64::new(1.0, 0.0);
    let scale = pow_real_base(q as f64, -s);
    for r in 1..=q {
        zpow *= z;
        let zeta = hurwitz_zeta(s, r as f64 / q as f64, cfg)?;
        acc.add(zpow * zeta.value);
        err += zeta.err_estimate;
        work += zeta.work;
    }
    let value = scale * acc.value();
    Ok(Evaluation {
        value,
        err_estimate: err * scale.norm() + 4e-16 * value.norm(),
        work,
    })
}

/// e^{2πi p/q} with the angle reduced exactly in rationals first.
pub(crate) fn root_of_unity(p: i64, q: u32) -> C64 {
    let q = q as i64;
    let p = p.rem_euclid(q);
    let theta = 2.0 * PI * (p as f64) / (q as f64);
    C64::new(theta.cos(), theta.sin())
}

/// Recognise z = e^{2πi p/q} (lowest q first, so the fraction comes out
/// reduced). None for interior points, z = 1, and boundary angles that are
/// not a rational multiple of 2π with denominator ≤ `MAX_ROOT_ORDER`.
pub(crate) fn detect_root_of_unity(z: C64) -> Option<(i64, u32)> {
    if (z.norm() - 1.0).abs() > 1e-12 || is_one(z) {
        return None;
    }
    let theta = z.arg() / (2.0 * PI);
    for q in 2..=MAX_ROOT_ORDER {
        let p = (theta * q as f64).round() as i64;
        if (theta - p as f64 / q as f64).abs() < 1e-12
            && (z - root_of_unity(p, q)).norm() < 1e-10
        {
            return Some((p, q));
        }
    }
    None
}

/// Φ(s, w, z) for an arbitrary positive shift w, the inner evaluator of the
/// double sums (whose shifted tails have w = a + m + 1 ≫ 1).
///
/// * z = 1 → shifted zeta by Euler-Maclaurin (all s in the supported range);
/// * |z| < 1 → the interior series (entire in s);
/// * z = e^{2πi p/q} → exact residue split into q shifted zetas,
///   Φ(s, w, z) = Σ_{r=0}^{q-1} z^r q^{-s} ζ(s, (w+r)/q), which continues
///   the boundary case to Re s ≤ 0;
/// * other boundary angles → conditionally convergent series (Re s > 0 only).
pub(crate) fn lerch_phi_any_shift(s: C64, w: f64, z: C64, cfg: &EvalConfig) -> Result<Evaluation> {
    if !(w > 0.0) || !w.is_finite() {
        return Err(Error::Domain(format!("shift {w} must be positive and finite")));
    }
    if is_one(z) {
        return hurwitz_any_shift(s, w, 0, cfg);
    }
    if z.norm() < 1.0 - 1e-12 {
        return interior_series(s, w, z, cfg);
    }
    if let Some((p, q)) = detect_root_of_unity(z) {
        let scale = pow_real_base(q as f64, -s);
        let mut acc = KahanSum::new();
        let mut err = 0.0;
        let mut work = 0;
        for r in 0..q {
            let zeta = hurwitz_any_shift(s, (w + r as f64) / q as f64, 0, cfg)?;
            // z^r from the reduced angle: exact, no multiplicative drift.
            acc.add(root_of_unity(p * r as i64, q) * zeta.value);
            err += zeta.err_estimate;
            work += zeta.work;
        }
        let value = scale * acc.value();
        return Ok(Evaluation {
            value,
            err_estimate: err * scale.norm() + 4e-16 * value.norm(),
            work,
        });
    }
    boundary_series(s, w, z, cfg)
}
