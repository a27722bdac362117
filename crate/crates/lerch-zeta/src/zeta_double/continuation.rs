//! Reduction of ζ₂(s₁, s₂; a) to single shifted zetas via Euler-Maclaurin
//! applied to the inner sum:
//!
//!   ζ₂(s₁, s₂; a) = a^{-s₁}(ζ(s₂,a) - a^{-s₂})
//!                 + (ζ(s₁+s₂-1,a) - a^{1-s₁-s₂})/(s₂-1)
//!                 + Σ_{r=0}^{l} [B_{r+1}/(r+1)!] (s₂)_r (ζ(s₁+s₂+r,a) - a^{-s₁-s₂-r})
//!                 - Σ_{n≥1} Φ_l(s₂ | n, a) (n+a)^{-s₁},
//!
//! valid for Re(s₁+s₂) > -l and Re s₂ > -l away from the pole hyperplanes
//! s₂ = 1 and s₁+s₂ = 2, 1, 0, …, 1-l. The remainder
//!
//!   Φ_l(s | λ, a) = ((s)_{l+1}/(l+1)!) ∫_λ^∞ B̃_{l+1}(x) (x+a)^{-s-l-1} dx
//!
//! is a genuine one-dimensional object shared across the outer sum: panels
//! over unit periods are computed once and reused as suffix sums, and the
//! far tail collapses by integration by parts. This is the fastest evaluator
//! and the analytic continuation used by the zero-finding layer.

use crate::config::{check_shift, is_one, DoublePoint, EvalConfig, Quadrature};
use crate::error::{Error, Result};
use crate::numerics::{
    default_bernoulli, integrate_finite, periodic_tail_integral, pochhammer, pow_real_base,
    KahanSum,
};
use crate::zeta_single::hurwitz_any_shift;
use crate::{Evaluation, C64};

/// Largest supported remainder order (table headroom for the far tail).
const MAX_ORDER: usize = 20;

/// Minimum admissible distance from the pole hyperplanes.
const HYPERPLANE_RADIUS: f64 = 1e-6;

/// Tuning for the shifted-zeta continuation.
#[derive(Debug, Clone, Copy)]
pub struct AiRemainderSpec {
    /// Remainder order l: validity extends to Re(s₁+s₂) > -l, and the outer
    /// remainder sum decays like n^{-Re(s₁+s₂)-l-1}.
    pub l: usize,
    /// Cap on outer remainder terms before declaring non-convergence.
    pub inner_terms: usize,
}

impl Default for AiRemainderSpec {
    fn default() -> Self {
        AiRemainderSpec { l: 2, inner_terms: 100_000 }
    }
}

/// Φ_l(s | λ, a) for real λ ≥ 0 (λ + a > 0). Exact zero when s ∈ {0,…,-l}.
pub fn phi_l_remainder(s: C64, lambda: f64, a: f64, l: usize, cfg: &EvalConfig) -> Result<Evaluation> {
    check_shift(a)?;
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::Domain(format!("lower limit λ = {lambda} must be ≥ 0")));
    }
    validate_order(l, s)?;
    let pref = pochhammer(s, l as u32 + 1) / default_bernoulli().factorial(l + 1);
    if pref.norm() == 0.0 {
        return Ok(Evaluation { value: C64::new(0.0, 0.0), err_estimate: 0.0, work: 0 });
    }
    let target = 0.5 * cfg.tol / pref.norm();
    let (raw, bound, evals) = periodic_power_integral(s, lambda, a, l, target, &cfg.quad)?;
    let value = pref * raw;
    Ok(Evaluation {
        value,
        err_estimate: pref.norm() * bound + 4e-16 * value.norm(),
        work: evals,
    })
}

fn validate_order(l: usize, s: C64) -> Result<()> {
    if l > MAX_ORDER {
        return Err(Error::Domain(format!(
            "remainder order l = {l} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    if !(s.re + l as f64 > 0.05) {
        return Err(Error::Domain(format!(
            "remainder integral needs Re s > -l (with margin); got Re s = {}, l = {l}",
            s.re
        )));
    }
    Ok(())
}

/// ∫_λ^∞ B̃_{l+1}(x) (x+a)^{-s-l-1} dx: unit panels to a safe base, then the
/// integration-by-parts tail. Returns (value, bound, integrand evals).
fn periodic_power_integral(
    s: C64,
    lambda: f64,
    a: f64,
    l: usize,
    target: f64,
    quad: &Quadrature,
) -> Result<(C64, f64, usize)> {
    let bern = default_bernoulli();
    let p = s + (l as f64 + 1.0);
    let n_start = lambda.ceil();
    let n0 = asymptotic_base(n_start, p);
    let panel_budget = Quadrature {
        abs_tol: (target / (n0 - lambda + 1.0)).clamp(1e-15, 1e-3),
        rel_tol: 1e-12,
        ..*quad
    };
    let mut acc = C64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut evals = 0usize;
    let poly = |x: f64, period: f64| {
        C64::new(bern.polynomial(l + 1, x - period), 0.0) * (-p * (x + a).ln()).exp()
    };
    if lambda < n_start {
        let period = lambda.floor();
        let part = integrate_finite(|x| poly(x, period), lambda, n_start, &panel_budget)?;
        acc += part.value;
        err += part.err_estimate;
        evals += part.evals;
    }
    let mut k = n_start;
    while k < n0 {
        let part = integrate_finite(|x| poly(x, k), k, k + 1.0, &panel_budget)?;
        acc += part.value;
        err += part.err_estimate;
        evals += part.evals;
        k += 1.0;
    }
    let (tail, tail_bound, steps) = periodic_tail_integral(bern, l + 1, p, n0 + a, target)
        .ok_or_else(|| {
            Error::NonConvergence("periodic tail never reached a bounded state".into())
        })?;
    Ok((acc + tail, err + tail_bound, evals + steps))
}

/// Integer base from which the integration-by-parts tail converges fast:
/// comfortably past |p|/2π so successive bounds shrink geometrically.
fn asymptotic_base(n_start: f64, p: C64) -> f64 {
    n_start.max(12.0).max((0.5 * p.norm()).ceil())
}

/// ζ₂(s₁, s₂; a) reduced to single shifted zetas (unit twists only).
pub fn shifted_zeta_continuation(
    p: &DoublePoint,
    spec: &AiRemainderSpec,
    cfg: &EvalConfig,
) -> Result<Evaluation> {
    if !(is_one(p.z1) && is_one(p.z2)) {
        return Err(Error::Domain(
            "shifted-zeta continuation is defined for unit twists z1 = z2 = 1".into(),
        ));
    }
    let DoublePoint { s1, s2, a, .. } = *p;
    let l = spec.l;
    validate_order(l, s2)?;
    let sum = s1 + s2;
    if !(sum.re + l as f64 > 0.05) {
        return Err(Error::Domain(format!(
            "continuation of order l = {l} needs Re(s1+s2) > -l (with margin); \
             got Re(s1+s2) = {}",
            sum.re
        )));
    }
    if (s2 - 1.0).norm() < HYPERPLANE_RADIUS {
        return Err(Error::Pole("inner sum has its pole on the hyperplane s2 = 1".into()));
    }
    if (sum - 2.0).norm() < HYPERPLANE_RADIUS {
        return Err(Error::Pole(
            "ζ(s1+s2-1, a) pole on the hyperplane s1+s2 = 2".into(),
        ));
    }
    for r in 0..=l {
        if (sum + r as f64 - 1.0).norm() < HYPERPLANE_RADIUS {
            return Err(Error::Pole(format!(
                "ζ(s1+s2+{r}, a) pole on the hyperplane s1+s2 = {}",
                1 - r as i64
            )));
        }
    }

    let bern = default_bernoulli();
    let zeta_cfg = EvalConfig { tol: (cfg.tol * 1e-2).max(1e-14), ..*cfg };
    let hz = |s: C64| hurwitz_any_shift(s, a, 0, &zeta_cfg);

    let mut err = 0.0;
    let mut work = 0usize;

    let z_s2 = hz(s2)?;
    let t0 = pow_real_base(a, -s1) * (z_s2.value - pow_real_base(a, -s2));
    err += pow_real_base(a, -s1).norm() * z_s2.err_estimate;
    work += z_s2.work;

    let z_sum1 = hz(sum - 1.0)?;
    let t1 = (z_sum1.value - pow_real_base(a, 1.0 - sum)) / (s2 - 1.0);
    err += z_sum1.err_estimate / (s2 - 1.0).norm();
    work += z_sum1.work;

    let mut t2 = C64::new(0.0, 0.0);
    for r in 0..=l {
        let b = bern.number(r + 1);
        if b == 0.0 {
            continue;
        }
        let coeff = b / bern.factorial(r + 1) * pochhammer(s2, r as u32);
        let z_r = hz(sum + r as f64)?;
        t2 += coeff * (z_r.value - pow_real_base(a, -sum - r as f64));
        err += coeff.norm() * z_r.err_estimate;
        work += z_r.work;
    }

    let (t3, t3_err, t3_work) = remainder_sum(s1, s2, a, l, spec.inner_terms, cfg)?;
    err += t3_err;
    work += t3_work;

    let value = t0 + t1 + t2 - t3;
    Ok(Evaluation { value, err_estimate: err + 4e-16 * value.norm(), work })
}

/// Σ_{n≥1} Φ_l(s₂ | n, a) (n+a)^{-s₁} with panels shared across n:
/// Φ_l(s₂ | n, a) = pref · (Σ_{k=n}^{N₀-1} P_k + J(N₀)) for n < N₀ and
/// pref · J(n) beyond, with per-n tail targets that keep the total error
/// budget at a fixed fraction of the requested tolerance.
fn remainder_sum(
    s1: C64,
    s2: C64,
    a: f64,
    l: usize,
    cap: usize,
    cfg: &EvalConfig,
) -> Result<(C64, f64, usize)> {
    let bern = default_bernoulli();
    let pref = pochhammer(s2, l as u32 + 1) / bern.factorial(l + 1);
    if pref.norm() == 0.0 {
        return Ok((C64::new(0.0, 0.0), 0.0, 0));
    }
    let p = s2 + (l as f64 + 1.0);
    let n0 = asymptotic_base(1.0, p) as usize;
    let budget = 0.1 * cfg.tol;

    // Shared unit panels P_k, k = 1..n0, and their suffix sums.
    let panel_budget = Quadrature {
        abs_tol: (budget / pref.norm() / n0 as f64).clamp(1e-15, 1e-3),
        rel_tol: 1e-12,
        ..cfg.quad
    };
    let mut panels = Vec::with_capacity(n0 - 1);
    let mut panel_err = 0.0;
    let mut work = 0usize;
    for k in 1..n0 {
        let kk = k as f64;
        let part = integrate_finite(
            |x| C64::new(bern.polynomial(l + 1, x - kk), 0.0) * (-p * (x + a).ln()).exp(),
            kk,
            kk + 1.0,
            &panel_budget,
        )?;
        panels.push(part.value);
        panel_err += part.err_estimate;
        work += part.evals;
    }
    let mut suffix = vec![C64::new(0.0, 0.0); n0];
    for k in (1..n0).rev() {
        suffix[k - 1] = suffix[k] + panels[k - 1];
    }
    let (j_n0, j_n0_bound, j_steps) =
        periodic_tail_integral(bern, l + 1, p, n0 as f64 + a, budget / pref.norm() * 1e-2)
            .ok_or_else(|| {
                Error::NonConvergence("periodic tail never reached a bounded state".into())
            })?;
    work += j_steps;

    // Truncation envelope: |Φ_l(s₂|n,a)| ≤ |pref| C_next (n+a)^{-σ₂-l-1}
    // via one more integration by parts, so the sum beyond N is bounded by
    // |pref| C_next (N+a)^{-σ₁-σ₂-l} / (σ₁+σ₂+l).
    let sig_sum = s1.re + s2.re;
    let c_next = bern.number(l + 2).abs() / (l as f64 + 2.0)
        + p.norm() * bern.sup_bound(l + 2) / ((l as f64 + 2.0) * (s2.re + l as f64 + 1.0));
    let decay = sig_sum + l as f64;

    let mut acc = KahanSum::new();
    let mut err = 0.0;
    let mut n = 1usize;
    loop {
        let weight = pow_real_base(n as f64 + a, -s1);
        let (raw, raw_bound, steps) = if n < n0 {
            // the shared panels and J(N₀) carry their bounds into every term
            (suffix[n - 1] + j_n0, panel_err + j_n0_bound, 0)
        } else {
            // fresh IBP tail from n; spend tolerance like 1/n² across n
            let t_n = budget / pref.norm() / weight.norm().max(1e-300)
                * (0.6 / ((n - n0 + 1) as f64).powi(2));
            periodic_tail_integral(bern, l + 1, p, n as f64 + a, t_n).ok_or_else(|| {
                Error::NonConvergence("periodic tail never reached a bounded state".into())
            })?
        };
        acc.add(weight * (pref * raw));
        err += weight.norm() * pref.norm() * raw_bound;
        work += steps + 1;

        let tail = pref.norm() * c_next * (n as f64 + a).powf(-decay) / decay;
        if tail <= budget {
            return Ok((acc.value(), err + tail, work));
        }
        n += 1;
        if n > cap {
            return Err(Error::NonConvergence(format!(
                "remainder sum exceeded {cap} terms with tail bound {tail:.2e} \
                 (target {budget:.1e}); raise the remainder order l"
            )));
        }
    }
}
