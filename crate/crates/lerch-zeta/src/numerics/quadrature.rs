//! Double-exponential (tanh-sinh / exp-sinh) quadrature.
//!
//! Three building blocks cover every integral in the crate:
//!
//! * [`integrate_unit_interval`] — tanh-sinh on (0, 1), tolerant of an
//!   integrable power singularity at the left endpoint;
//! * [`integrate_from_one`] — exp-sinh on [1, ∞) for integrands with
//!   exponential decay;
//! * [`integrate_semi_infinite`] — the two glued at the pivot x = 1.
//!
//! Each rule refines a trapezoid sum over the transformed real line, halving
//! the step per level, and reports the difference of the last two levels as
//! its error estimate. Reaching the refinement cap before the estimate meets
//! tolerance is a hard non-convergence error, never a silent best-effort.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::config::Quadrature;
use crate::error::{Error, Result};
use crate::numerics::KahanSum;
use crate::C64;

/// Node walk stops past this |t|; the unit-interval map saturates f64 just
/// beyond it (x rounds to 0 or 1), so walking further cannot add terms.
const T_CAP: f64 = 6.0;
/// Consecutive negligible terms required before a direction is abandoned.
const NEGLIGIBLE_RUN: u32 = 4;
/// Levels 0 and 1 are too coarse to trust an agreement between them.
const MIN_TRUSTED_LEVEL: usize = 2;
/// Extra shrink applied to inner tolerances of an iterated double integral.
/// Inner errors do not cancel between outer refinement levels the way a
/// smooth integrand does, so the outer differences plateau near the total
/// inner error; holding the inner rule three digits below the outer budget
/// keeps that plateau under the outer acceptance threshold.
const INNER_NOISE_MARGIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: C64,
    /// Difference between the last two refinement levels, plus bounds on the
    /// mass truncated beyond the sampled window.
    pub err_estimate: f64,
    /// Refinement level at which the tolerance was met.
    pub levels: usize,
    /// Total integrand evaluations.
    pub evals: usize,
}

/// How a directional node walk ended at the final level, for truncation
/// accounting by the rule wrappers.
#[derive(Debug, Clone, Copy, Default)]
struct WalkExit {
    /// The walk ran out of admissible nodes while terms were still live.
    hit_range_end: bool,
    last_x: f64,
    last_f_norm: f64,
    last_term_norm: f64,
}

/// Shared refinement driver. `node(t)` maps an abscissa on the transformed
/// line to `(x, dx/dt)`, or `None` past the admissible range.
fn refine<F, N>(f: &F, node: &N, q: &Quadrature) -> Result<(QuadResult, WalkExit, WalkExit)>
where
    F: Fn(f64) -> C64,
    N: Fn(f64) -> Option<(f64, f64)>,
{
    q.validate()?;
    let mut evals = 0usize;
    let mut prev: Option<C64> = None;
    let mut last_err = f64::INFINITY;
    // Farthest |t| per direction where the previous level still saw a live
    // term. Comparing successive levels is only meaningful when they cover
    // the same region, so a walk may not stop on negligible terms before
    // reaching the frontier of the level it is being compared against: an
    // integrand whose mass sits far from t = 0 has near-origin terms that
    // shrink with h, and without this rule a deep level would mistake that
    // pre-peak valley for the tail and agree with its equally truncated
    // neighbour on a value missing the peak entirely.
    let mut frontier = [0.0f64; 2];
    for level in 0..=q.max_depth {
        let h = 0.5f64.powi(level as i32);
        let mut acc = KahanSum::new();
        let mut exits = [WalkExit::default(), WalkExit::default()];
        for (idx, dir) in [1i64, -1i64].into_iter().enumerate() {
            let mut j: i64 = if dir > 0 { 0 } else { -1 };
            let mut misses = 0u32;
            let mut live_reach = 0.0f64;
            loop {
                let t = j as f64 * h;
                let Some((x, w)) = node(t) else {
                    exits[idx].hit_range_end = misses == 0;
                    break;
                };
                let fx = f(x);
                evals += 1;
                if !fx.is_finite() {
                    // Past the negligible threshold the transformed integrand
                    // may leave f64 range (huge-but-integrable endpoint
                    // singularities) even though its weighted terms no longer
                    // matter; that is a range end, not a failure. A non-finite
                    // sample while terms are still live stays a hard error.
                    if misses >= 1 {
                        break;
                    }
                    return Err(Error::NonConvergence(format!(
                        "integrand returned a non-finite value at x = {x:.6e}"
                    )));
                }
                let term = fx * (w * h);
                acc.add(term);
                let mag = term.norm();
                exits[idx].last_x = x;
                exits[idx].last_f_norm = fx.norm();
                exits[idx].last_term_norm = mag;
                let floor = 0.01 * (q.abs_tol + q.rel_tol * acc.value().norm());
                if mag <= floor {
                    misses += 1;
                    if misses >= NEGLIGIBLE_RUN && t.abs() >= frontier[idx] {
                        break;
                    }
                } else {
                    misses = 0;
                    live_reach = t.abs();
                }
                j += dir;
            }
            frontier[idx] = live_reach;
        }
        let cur = acc.value();
        if let Some(p) = prev {
            last_err = (cur - p).norm();
            if level >= MIN_TRUSTED_LEVEL && last_err <= q.abs_tol.max(q.rel_tol * cur.norm()) {
                let result = QuadResult { value: cur, err_estimate: last_err, levels: level, evals };
                return Ok((result, exits[0], exits[1]));
            }
        }
        prev = Some(cur);
    }
    Err(Error::NonConvergence(format!(
        "quadrature reached refinement cap {} with level difference {:.3e} above tolerance",
        q.max_depth, last_err
    )))
}

/// x = logistic(π sinh t), with the complement 1-x carried separately so
/// neither endpoint suffers cancellation.
fn unit_node(t: f64) -> Option<(f64, f64)> {
    if t.abs() > T_CAP {
        return None;
    }
    let v = PI * t.sinh();
    let e = (-v.abs()).exp();
    let denom = 1.0 + e;
    let (x, complement) = if v >= 0.0 { (1.0 / denom, e / denom) } else { (e / denom, 1.0 / denom) };
    if x <= 0.0 || x >= 1.0 {
        return None;
    }
    Some((x, PI * t.cosh() * x * complement))
}

/// x = 1 + exp((π/2) sinh t); nodes flood [1, ∞) with exponential reach.
fn from_one_node(t: f64) -> Option<(f64, f64)> {
    if t.abs() > T_CAP {
        return None;
    }
    let u = FRAC_PI_2 * t.sinh();
    if u > 690.0 {
        return None;
    }
    let g = u.exp();
    Some((1.0 + g, FRAC_PI_2 * t.cosh() * g))
}

fn tolerance_of(q: &Quadrature, value: C64) -> f64 {
    q.abs_tol.max(q.rel_tol * value.norm())
}

/// ∫₀¹ f(x) dx. An integrable power singularity f ~ x^α (α > -1) at the left
/// endpoint is handled; set `q.singularity_exponent` to α so the truncated
/// tail below the smallest sampled node is accounted for honestly.
pub fn integrate_unit_interval<F>(f: F, q: &Quadrature) -> Result<QuadResult>
where
    F: Fn(f64) -> C64,
{
    let (mut r, pos, neg) = refine(&f, &unit_node, q)?;
    // Mass below the smallest sampled x, extrapolating |f| with the declared
    // endpoint exponent: ∫₀^x c u^α du with c = |f(x)| x^{-α}. For a bounded
    // integrand this is |f| · x ≈ 10^{-275} — negligible automatically.
    r.err_estimate += neg.last_f_norm * neg.last_x / (1.0 + q.singularity_exponent);
    if pos.hit_range_end {
        r.err_estimate += 8.0 * pos.last_term_norm;
    }
    if r.err_estimate > 10.0 * tolerance_of(q, r.value) {
        return Err(Error::NonConvergence(format!(
            "endpoint truncation dominates the error estimate ({:.3e}); \
             the integrand decays too slowly at an endpoint",
            r.err_estimate
        )));
    }
    Ok(r)
}

/// ∫₁^∞ f(x) dx for integrands with (at least) exponential decay.
pub fn integrate_from_one<F>(f: F, q: &Quadrature) -> Result<QuadResult>
where
    F: Fn(f64) -> C64,
{
    let (mut r, pos, _neg) = refine(&f, &from_one_node, q)?;
    if pos.hit_range_end {
        // Terms were still live when the node range ran out: the integrand
        // decays too slowly for this rule. Surface it through the estimate.
        r.err_estimate += 8.0 * pos.last_term_norm;
    }
    if r.err_estimate > 10.0 * tolerance_of(q, r.value) {
        return Err(Error::NonConvergence(format!(
            "tail truncation dominates the error estimate ({:.3e}); \
             the integrand decays too slowly at infinity",
            r.err_estimate
        )));
    }
    Ok(r)
}

/// ∫₀^∞ f(x) dx, split at x = 1 into the two specialised rules.
pub fn integrate_semi_infinite<F>(f: F, q: &Quadrature) -> Result<QuadResult>
where
    F: Fn(f64) -> C64,
{
    let head = integrate_unit_interval(&f, q)?;
    let tail = integrate_from_one(&f, q)?;
    Ok(QuadResult {
        value: head.value + tail.value,
        err_estimate: head.err_estimate + tail.err_estimate,
        levels: head.levels.max(tail.levels),
        evals: head.evals + tail.evals,
    })
}

/// ∫_lo^hi f(x) dx by an affine map onto (0, 1). A power singularity, if any,
/// must sit at `lo` (that is where `singularity_exponent` is applied).
pub fn integrate_finite<F>(f: F, lo: f64, hi: f64, q: &Quadrature) -> Result<QuadResult>
where
    F: Fn(f64) -> C64,
{
    if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!(
            "finite integration range [{lo}, {hi}] must be ordered and finite"
        )));
    }
    let span = hi - lo;
    let scaled = Quadrature { abs_tol: q.abs_tol / span, ..*q };
    let r = integrate_unit_interval(|xi| f(lo + span * xi), &scaled)?;
    Ok(QuadResult { value: r.value * span, err_estimate: r.err_estimate * span, ..r })
}

#[derive(Debug, Clone, Copy)]
pub struct DoubleQuadResult {
    pub value: C64,
    pub err_estimate: f64,
    pub outer_levels: usize,
    /// Integrand evaluations, inner and outer combined.
    pub evals: usize,
}

/// ∫₀^∞ ∫₀^∞ f(x, y) dx dy as an iterated integral: for each outer node y
/// the inner integral over x runs under `inner_q` (conventionally a tenth of
/// the outer tolerance, see [`Quadrature::inner`], and with its own endpoint
/// exponent — the two axes rarely share one). Inner values are memoised on
/// the outer abscissa, which the level-halving outer rule revisits constantly.
pub fn integrate_double_semi_infinite<F>(
    f: F,
    q: &Quadrature,
    inner_q: &Quadrature,
) -> Result<DoubleQuadResult>
where
    F: Fn(f64, f64) -> C64,
{
    let cache: RefCell<HashMap<u64, C64>> = RefCell::new(HashMap::new());
    let inner_evals = Cell::new(0usize);
    let inner_failure: RefCell<Option<Error>> = RefCell::new(None);

    // An inner error survives into the outer sum multiplied by the outer
    // transform weight, which grows like y·ln y on the exp-sinh tail, and
    // inner noise is un-smooth across outer nodes, so the outer level
    // differences stall near the summed inner error instead of collapsing
    // geometrically. Each live node therefore needs its absolute tolerance
    // shrunk by a bound on that weight and both tolerances shrunk by a flat
    // margin. Demanding that everywhere is wasteful — and on the far tail,
    // where values sink toward the underflow floor, outright unsatisfiable —
    // so nodes are resolved at the caller's budget first and re-polished only
    // when the result is big enough for the outer sum to notice at all.
    let guard = INNER_NOISE_MARGIN * q.abs_tol;
    // Bound on the outer rule's transform weight at node y: x(1-x)·π cosh t
    // on the unit piece, (x-1)·(π/2) cosh t beyond it, with cosh t growing
    // like the logarithm of the distance to the nearest endpoint.
    let outer_weight_bound = |y: f64| -> f64 {
        if y < 1.0 {
            let side = y.min(1.0 - y).max(f64::MIN_POSITIVE);
            side * (4.0 + (y / (1.0 - y)).ln().abs())
        } else {
            let excess = (y - 1.0).max(f64::MIN_POSITIVE);
            excess * (4.0 + excess.ln().abs())
        }
    };
    let resolve_inner = |y: f64| -> Result<QuadResult> {
        let weight_bound = outer_weight_bound(y);
        // A coarse failure is not yet fatal: an integrand feature that is
        // narrow on the transformed axis (it shrinks like 1/cosh t as the
        // feature moves out) may simply need levels the caller's budget does
        // not carry, so the deep pass below gets its chance first.
        let coarse_evals = match integrate_semi_infinite(|x| f(x, y), inner_q) {
            Ok(c) if (c.value.norm() + c.err_estimate) * weight_bound < guard => {
                return Ok(c);
            }
            Ok(c) => c.evals,
            Err(_) => 0,
        };
        let scaled = Quadrature {
            abs_tol: (INNER_NOISE_MARGIN * inner_q.abs_tol / weight_bound)
                .max(f64::MIN_POSITIVE),
            rel_tol: (INNER_NOISE_MARGIN * inner_q.rel_tol).max(1e-14),
            max_depth: inner_q.max_depth + 4,
            ..*inner_q
        };
        let fine = integrate_semi_infinite(|x| f(x, y), &scaled)?;
        Ok(QuadResult { evals: fine.evals + coarse_evals, ..fine })
    };

    let outer_integrand = |y: f64| -> C64 {
        if let Some(v) = cache.borrow().get(&y.to_bits()) {
            return *v;
        }
        match resolve_inner(y) {
            Ok(r) => {
                inner_evals.set(inner_evals.get() + r.evals);
                cache.borrow_mut().insert(y.to_bits(), r.value);
                r.value
            }
            Err(e) => {
                if inner_failure.borrow().is_none() {
                    *inner_failure.borrow_mut() = Some(e);
                }
                // Poison the outer sum; `refine` aborts on the first
                // non-finite sample and the stored error is surfaced below.
                C64::new(f64::NAN, f64::NAN)
            }
        }
    };

    match integrate_semi_infinite(&outer_integrand, q) {
        Ok(outer) => {
            let inner_err = 10.0 * (inner_q.abs_tol + inner_q.rel_tol * outer.value.norm());
            Ok(DoubleQuadResult {
                value: outer.value,
                err_estimate: outer.err_estimate + inner_err,
                outer_levels: outer.levels,
                evals: outer.evals + inner_evals.get(),
            })
        }
        Err(outer_err) => Err(match inner_failure.into_inner() {
            Some(inner) => inner,
            None => outer_err,
        }),
    }
}
