//! Real-zero localization and sign-theorem verification.
//!
//! Every existence claim the evaluators support is an intermediate-value
//! argument: a function that is provably positive somewhere and provably
//! negative somewhere else on a real segment. This module turns those
//! arguments into machine-checkable artifacts:
//!
//! * [`bracket_scan`] + [`refine_zero`] — the generic certificate machinery:
//!   a sign-change bracket plus a bisection-refined location with a small
//!   residual.
//! * [`hurwitz_real_zero`] / [`hurwitz_zero_curve`] — the zero σ*(a) of
//!   ζ(σ, a) in (0, 1), which exists exactly when a < 1/2, traced over an
//!   a-grid and cross-checked with the kernel-integral evaluator.
//! * [`diagonal_zero`] — the zero of ζ₂(σ, σ; a) in (1/2, 1) via the diagonal
//!   identity, cross-checked against the shifted-zeta continuation.
//! * [`divergence_probe`] / [`double_path_zeros`] — the two-variable search
//!   along the horizontal path σ₂ = 1 + ε. On it
//!   ζ₂(σ₁, 1+ε; a) = ζ(σ₁, a)/ε − 1/(2(σ₁+ε)) + O(1), so once ε is small
//!   enough the path inherits a sign change from ζ(·, a) near its zero;
//!   [`double_path_zero_adaptive`] descends an ε-ladder until that happens.
//! * [`verify_clause`] — per-clause verification reports with one verdict per
//!   grid sample, suitable for machine-readable output.
//!
//! Root polishing is pure bisection: the evaluators are smooth but expensive,
//! and bisection's sign-based bracket guarantee matches the intermediate-value
//! structure of every claim being checked. Grid samples are independent and
//! evaluated concurrently; report assembly is a single-threaded reduction.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{DoublePoint, EvalConfig};
use crate::error::{Error, Result};
use crate::zeta_double::{diagonal_identity, double_strip, zeta2, SecondTermForm};
use crate::zeta_single::{hurwitz_zeta_em, hurwitz_zeta_integral, lerch_phi};
use crate::C64;

/// Buffer keeping scan grids away from pole hyperplanes (σ = 1 for the single
/// function; σ₂ = 1 and σ₁ + σ₂ = 2 for the double one).
pub const POLE_BUFFER: f64 = 1e-3;

/// Lower edge of the Hurwitz scan window. As a → 1/2⁻ the zero approaches 0
/// like (1/2 − a)/|ζ'(0, a)|, so the window must open far below any coarse
/// buffer or the curve would lose its left end (σ*(0.4999) ≈ 2.9e-4).
const HURWITZ_SCAN_LO: f64 = 1e-6;
const HURWITZ_SCAN_HI: f64 = 1.0 - POLE_BUFFER;

/// ε-ladder for the path search. The spec path ε = 0.1 works only while
/// sup_σ ζ(σ, a) is large (small a); closer to a = 1/2 the O(1) part of
/// ζ₂(σ₁, 1+ε; a) swamps ζ(σ₁, a)/ε and the ladder must descend.
const PATH_EPSILON_LADDER: [f64; 7] = [0.1, 0.03, 0.01, 3e-3, 1e-3, 3e-4, 1e-4];

/// Resolution of the ζ(·, a) argmax grid used to place the positive probe.
const PROBE_GRID_POINTS: usize = 97;

/// Hard cap on bisection steps (41 suffice for a unit bracket at width 1e-12).
const MAX_BISECTIONS: u32 = 200;

/// Magnitude both divergence probes must exceed to count as "diverging".
const PROBE_THRESHOLD: f64 = 1e3;

/// Twists with |Im z| at or below this are treated as real.
const REAL_TWIST_IM: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Search configuration and certificate types
// ---------------------------------------------------------------------------

/// Tolerances and resolution for bracketing and bisection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroSearch {
    /// Bound the final residual |f(σ*)| must meet.
    pub zero_tol: f64,
    /// Final bracket width the bisection shrinks to.
    pub bracket_tol: f64,
    /// Number of scan samples (inclusive of window endpoints).
    pub scan_points: usize,
}

impl Default for ZeroSearch {
    /// Defaults for the single-variable evaluators: zero_tol an order below
    /// cross-method agreement so certified zeros survive method swaps.
    fn default() -> Self {
        ZeroSearch { zero_tol: 1e-10, bracket_tol: 1e-12, scan_points: 64 }
    }
}

impl ZeroSearch {
    /// Residual budget for zeros of ζ₂ along ε-paths: the continued evaluator
    /// carries ~1e-9 absolute noise near σ₂ = 1, where values scale like 1/ε.
    pub fn for_double_path() -> Self {
        ZeroSearch { zero_tol: 1e-8, ..ZeroSearch::default() }
    }

    /// Residual budget for diagonal zeros via the closed-form identity.
    pub fn for_diagonal() -> Self {
        ZeroSearch { zero_tol: 1e-9, ..ZeroSearch::default() }
    }
}

/// A sign-change interval: f(lo)·f(hi) < 0, or a degenerate point bracket
/// (lo = hi) where the scan already saw |f| ≤ zero_tol.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    fn straddles(&self) -> bool {
        self.f_lo * self.f_hi < 0.0
    }
}

/// Output of [`refine_zero`]: the polished location with its final bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RefinedZero {
    pub location: f64,
    pub bracket: (f64, f64),
    /// |f(location)|, re-evaluated after the final bisection step.
    pub residual: f64,
    pub iterations: u32,
}

/// A certified real zero with its provenance: which evaluator produced it,
/// on which ray/region, and how an independent evaluator re-scores it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub a: f64,
    /// Human-readable description of the search ray or region.
    pub path: String,
    pub location: f64,
    pub bracket: (f64, f64),
    pub residual: f64,
    /// Identifier of the evaluator the bisection ran on.
    pub method: String,
    pub iterations: u32,
    /// Identifier of the independent cross-check evaluator, when one covers
    /// the point at certification accuracy.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_method: Option<String>,
    /// |f(location)| under the cross-check evaluator.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_residual: Option<f64>,
}

/// The zero curve σ*(a) over an a-grid, with continuity diagnostics.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroCurve {
    pub records: Vec<ZeroRecord>,
    /// Adjacent-record jumps larger than the continuity heuristic allows
    /// (0.2 per 0.05 of grid step). Flagged, never fatal.
    pub continuity_flags: Vec<String>,
}

// ---------------------------------------------------------------------------
// Generic bracketing and bisection
// ---------------------------------------------------------------------------

/// Prefix an error with the sample coordinate it occurred at.
fn with_coordinate(e: Error, name: &str, x: f64) -> Error {
    let tag = |m: String| format!("at {name} = {x:.17}: {m}");
    match e {
        Error::Domain(m) => Error::Domain(tag(m)),
        Error::Pole(m) => Error::Pole(tag(m)),
        Error::NonConvergence(m) => Error::NonConvergence(tag(m)),
        Error::TheoremContradiction(m) => Error::TheoremContradiction(tag(m)),
    }
}

/// Sample `f` at `n_points` equally spaced points spanning `window`
/// (endpoints included) and return every sign-change bracket. Samples with
/// |f| ≤ `zero_tol` become degenerate brackets and never pair into
/// sign-change brackets; non-finite samples are evaluation errors.
pub fn bracket_scan<F>(
    mut f: F,
    window: (f64, f64),
    n_points: usize,
    zero_tol: f64,
) -> Result<Vec<Bracket>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (lo, hi) = window;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Domain(format!(
            "scan window must be a finite non-empty interval, got ({lo}, {hi})"
        )));
    }
    if n_points < 2 {
        return Err(Error::Domain(format!(
            "scan needs at least 2 sample points, got {n_points}"
        )));
    }

    let step = (hi - lo) / (n_points - 1) as f64;
    let mut brackets = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for k in 0..n_points {
        let x = if k + 1 == n_points { hi } else { lo + step * k as f64 };
        let v = f(x).map_err(|e| with_coordinate(e, "sample", x))?;
        if !v.is_finite() {
            return Err(Error::NonConvergence(format!(
                "evaluator returned a non-finite value at sample = {x:.17}"
            )));
        }
        if v.abs() <= zero_tol {
            brackets.push(Bracket { lo: x, hi: x, f_lo: v, f_hi: v });
            prev = None;
            continue;
        }
        if let Some((px, pv)) = prev {
            if pv * v < 0.0 {
                brackets.push(Bracket { lo: px, hi: x, f_lo: pv, f_hi: v });
            }
        }
        prev = Some((x, v));
    }
    Ok(brackets)
}

/// Shrink a sign-change bracket by bisection until its width is at most
/// `search.bracket_tol`, then re-evaluate the midpoint for the residual.
///
/// Degenerate brackets are returned as-is (the scan already certified them).
/// If the final residual exceeds `search.zero_tol`, the evaluator's noise
/// exceeds its sign resolution near the zero and the refinement reports
/// non-convergence carrying the final bracket.
pub fn refine_zero<F>(mut f: F, bracket: Bracket, search: &ZeroSearch) -> Result<RefinedZero>
where
    F: FnMut(f64) -> Result<f64>,
{
    if bracket.is_degenerate() {
        return Ok(RefinedZero {
            location: bracket.lo,
            bracket: (bracket.lo, bracket.hi),
            residual: bracket.f_lo.abs(),
            iterations: 0,
        });
    }
    if !bracket.straddles() {
        return Err(Error::Domain(format!(
            "refinement needs a sign change: f({:.17}) = {:.6e}, f({:.17}) = {:.6e}",
            bracket.lo, bracket.f_lo, bracket.hi, bracket.f_hi
        )));
    }

    let Bracket { mut lo, mut hi, f_lo: mut flo, .. } = bracket;
    let mut iterations = 0u32;
    while hi - lo > search.bracket_tol && iterations < MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval no longer splittable in f64
        }
        let fm = f(mid).map_err(|e| with_coordinate(e, "sample", mid))?;
        iterations += 1;
        if fm == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }

    let location = 0.5 * (lo + hi);
    let residual = f(location).map_err(|e| with_coordinate(e, "sample", location))?.abs();
    if residual > search.zero_tol {
        return Err(Error::NonConvergence(format!(
            "bisection shrank the bracket to [{lo:.17}, {hi:.17}] but the residual \
             {residual:.3e} stays above zero_tol {:.1e}: evaluator noise exceeds its \
             sign resolution near the zero",
            search.zero_tol
        )));
    }
    Ok(RefinedZero { location, bracket: (lo, hi), residual, iterations })
}

// ---------------------------------------------------------------------------
// Hurwitz zero curve
// ---------------------------------------------------------------------------

fn hurwitz_re(sigma: f64, a: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(hurwitz_zeta_em(C64::new(sigma, 0.0), a, 0, cfg)?.value.re)
}

/// Sign-change brackets of σ ↦ ζ(σ, a) on `window`. Useful on its own for
/// the a ≥ 1/2 direction, where the certified outcome is an empty list.
pub fn hurwitz_brackets(
    a: f64,
    window: (f64, f64),
    n_points: usize,
    cfg: &EvalConfig,
) -> Result<Vec<Bracket>> {
    bracket_scan(
        |sigma| hurwitz_re(sigma, a, cfg),
        window,
        n_points,
        ZeroSearch::default().zero_tol,
    )
}

/// Locate the zero of ζ(σ, a) in (0, 1) for a single a < 1/2.
///
/// Primary evaluator: Euler-Maclaurin. Cross-check: the kernel-integral
/// evaluator, which shares no Bernoulli machinery with it. A missing zero
/// would falsify a proven claim and is reported loudly as a contradiction.
pub fn hurwitz_real_zero(a: f64, search: &ZeroSearch, cfg: &EvalConfig) -> Result<ZeroRecord> {
    if !(a > 0.0 && a < 0.5) {
        return Err(Error::Domain(format!(
            "the zero curve of ζ(σ, a) exists only for 0 < a < 1/2, got a = {a}"
        )));
    }
    let f = |sigma: f64| hurwitz_re(sigma, a, cfg);
    let window = (HURWITZ_SCAN_LO, HURWITZ_SCAN_HI);
    let brackets = bracket_scan(f, window, search.scan_points, search.zero_tol)?;
    let Some(first) = brackets.first() else {
        return Err(Error::TheoremContradiction(format!(
            "no sign change of ζ(σ, {a}) on ({}, {}) at {} samples; a zero is guaranteed \
             for a < 1/2, so this is an evaluator or resolution defect",
            window.0, window.1, search.scan_points
        )));
    };
    let refined = refine_zero(f, *first, search)?;
    let cross = hurwitz_zeta_integral(C64::new(refined.location, 0.0), a, cfg)?;
    Ok(ZeroRecord {
        a,
        path: format!("sigma in ({}, {})", window.0, window.1),
        location: refined.location,
        bracket: refined.bracket,
        residual: refined.residual,
        method: "hurwitz-euler-maclaurin".into(),
        iterations: refined.iterations,
        cross_method: Some("hurwitz-kernel-integral".into()),
        cross_residual: Some(cross.value.re.abs()),
    })
}

/// Trace σ*(a) over an a-grid (each entry in (0, 1/2)).
pub fn hurwitz_zero_curve(
    a_grid: &[f64],
    search: &ZeroSearch,
    cfg: &EvalConfig,
) -> Result<ZeroCurve> {
    if a_grid.is_empty() {
        return Err(Error::Domain("empty a-grid".into()));
    }
    for &a in a_grid {
        if !(a > 0.0 && a < 0.5) {
            return Err(Error::Domain(format!(
                "zero curve grid must lie in (0, 1/2); got a = {a}"
            )));
        }
    }
    let records = a_grid
        .par_iter()
        .map(|&a| hurwitz_real_zero(a, search, cfg))
        .collect::<Result<Vec<_>>>()?;

    let mut continuity_flags = Vec::new();
    for pair in records.windows(2) {
        let (r0, r1) = (&pair[0], &pair[1]);
        let da = (r1.a - r0.a).abs();
        let jump = (r1.location - r0.location).abs();
        // Heuristic regression check: < 0.2 per 0.05 of grid step.
        let allowance = 0.2 * (da / 0.05).max(1.0);
        if jump >= allowance {
            continuity_flags.push(format!(
                "sigma*({}) = {:.9} -> sigma*({}) = {:.9} jumps by {jump:.3} \
                 (allowance {allowance:.3})",
                r0.a, r0.location, r1.a, r1.location
            ));
        }
    }
    Ok(ZeroCurve { records, continuity_flags })
}

// ---------------------------------------------------------------------------
// Diagonal zero (two variables, σ₁ = σ₂)
// ---------------------------------------------------------------------------

fn diagonal_re(sigma: f64, a: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(diagonal_identity(C64::new(sigma, 0.0), a, cfg)?.value.re)
}

/// Locate the real zero of σ ↦ ζ₂(σ, σ; a) in (1/2, 1).
///
/// Primary evaluator: the closed-form diagonal identity
/// 2ζ₂(σ, σ; a) = ζ(σ, a)² − ζ(2σ, a). Cross-check: the shifted-zeta
/// continuation evaluated at (σ*, σ*).
pub fn diagonal_zero(a: f64, search: &ZeroSearch, cfg: &EvalConfig) -> Result<ZeroRecord> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!(
            "diagonal zero search needs 0 < a <= 1, got a = {a}"
        )));
    }
    let window = (0.5 + POLE_BUFFER, 1.0 - POLE_BUFFER);
    let f = |sigma: f64| diagonal_re(sigma, a, cfg);
    let brackets = bracket_scan(f, window, search.scan_points, search.zero_tol)?;
    let Some(first) = brackets.first() else {
        return Err(Error::TheoremContradiction(format!(
            "no sign change of ζ₂(σ, σ; {a}) on ({}, {}) at {} samples; at least one \
             zero in (1/2, 1) is guaranteed for 0 < a <= 1",
            window.0, window.1, search.scan_points
        )));
    };
    let refined = refine_zero(f, *first, search)?;
    let unit = C64::new(1.0, 0.0);
    let s = C64::new(refined.location, 0.0);
    let cross = zeta2(&DoublePoint::new(s, s, a, unit, unit)?, cfg)?;
    Ok(ZeroRecord {
        a,
        path: format!("sigma1 = sigma2 = sigma in ({}, {})", window.0, window.1),
        location: refined.location,
        bracket: refined.bracket,
        residual: refined.residual,
        method: "diagonal-identity".into(),
        iterations: refined.iterations,
        cross_method: Some("shifted-zeta-continuation".into()),
        cross_residual: Some(cross.value.re.abs()),
    })
}

/// Boundary behaviour of the diagonal: ζ₂(σ, σ; a) → −∞ as σ → 1/2⁺ (the
/// ζ(2σ, a) pole) and → +∞ as σ → 1⁻ (the squared ζ(σ, a) pole).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DiagonalProbes {
    pub a: f64,
    pub lower_sigma: f64,
    pub lower_value: f64,
    pub upper_sigma: f64,
    pub upper_value: f64,
    /// lower_value < 0 and upper_value > 0, as proven.
    pub signs_correct: bool,
}

/// Evaluate the diagonal just inside both ends of (1/2, 1).
pub fn diagonal_boundary_probes(a: f64, cfg: &EvalConfig) -> Result<DiagonalProbes> {
    let lower_sigma = 0.5001;
    let upper_sigma = 0.999;
    let lower_value = diagonal_re(lower_sigma, a, cfg)?;
    let upper_value = diagonal_re(upper_sigma, a, cfg)?;
    Ok(DiagonalProbes {
        a,
        lower_sigma,
        lower_value,
        upper_sigma,
        upper_value,
        signs_correct: lower_value < 0.0 && upper_value > 0.0,
    })
}

// ---------------------------------------------------------------------------
// Horizontal-path search for ζ₂ (unit twists, a < 1/2)
// ---------------------------------------------------------------------------

fn zeta2_on_path(sigma1: f64, epsilon: f64, a: f64, cfg: &EvalConfig) -> Result<f64> {
    let unit = C64::new(1.0, 0.0);
    let p = DoublePoint::new(
        C64::new(sigma1, 0.0),
        C64::new(1.0 + epsilon, 0.0),
        a,
        unit,
        unit,
    )?;
    Ok(zeta2(&p, cfg)?.value.re)
}

/// The two divergence directions the existence proof pits against each other,
/// evaluated at finite ε: ζ₂(σ₀ − ε, 1+ε; a) near the ζ(·, a) argmax σ₀
/// (→ +∞ as ε → 0⁺ when ζ(σ₀, a) > 0) and ζ₂(1−2ε, 1+ε; a) (→ −∞).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DivergenceProbe {
    pub a: f64,
    pub epsilon: f64,
    /// argmax of ζ(·, a) over the probe grid on [2ε, 1−2ε].
    pub sigma0: f64,
    pub zeta_at_sigma0: f64,
    /// σ₁ the positive probe was evaluated at: max(σ₀ − ε, POLE_BUFFER).
    pub positive_location: f64,
    pub positive_probe: f64,
    pub negative_probe: f64,
    /// positive_probe > 0 and negative_probe < 0.
    pub signs_diverge: bool,
    /// positive_probe > 10³ and negative_probe < −10³. At ε = 1e-3 this needs
    /// sup_σ ζ(σ, a) ≳ 1, which holds for small a only; nearer a = 1/2 the
    /// finite-ε probe undershoots even though the ε → 0 divergence is proven.
    pub threshold_met: bool,
}

/// Evaluate both divergence probes for a < 1/2 at finite ε.
pub fn divergence_probe(a: f64, epsilon: f64, cfg: &EvalConfig) -> Result<DivergenceProbe> {
    if !(a > 0.0 && a < 0.5) {
        return Err(Error::Domain(format!(
            "divergence probes assume a < 1/2 (so that sup ζ(·, a) > 0), got a = {a}"
        )));
    }
    if !(epsilon >= 1e-5 && epsilon <= 0.1) {
        return Err(Error::Domain(format!(
            "probe epsilon must lie in [1e-5, 0.1], got {epsilon}"
        )));
    }

    // argmax of ζ(·, a) over the buffered grid
    let glo = 2.0 * epsilon;
    let ghi = 1.0 - 2.0 * epsilon;
    let mut sigma0 = glo;
    let mut best = f64::NEG_INFINITY;
    for k in 0..PROBE_GRID_POINTS {
        let s = glo + (ghi - glo) * k as f64 / (PROBE_GRID_POINTS - 1) as f64;
        let v = hurwitz_re(s, a, cfg)?;
        if v > best {
            best = v;
            sigma0 = s;
        }
    }

    let positive_location = (sigma0 - epsilon).max(POLE_BUFFER);
    let positive_probe = zeta2_on_path(positive_location, epsilon, a, cfg)?;
    let negative_probe = zeta2_on_path(1.0 - 2.0 * epsilon, epsilon, a, cfg)?;
    Ok(DivergenceProbe {
        a,
        epsilon,
        sigma0,
        zeta_at_sigma0: best,
        positive_location,
        positive_probe,
        negative_probe,
        signs_diverge: positive_probe > 0.0 && negative_probe < 0.0,
        threshold_met: positive_probe > PROBE_THRESHOLD && negative_probe < -PROBE_THRESHOLD,
    })
}

/// All real zeros of σ₁ ↦ ζ₂(σ₁, 1 + ε; a) on the buffered admissible
/// segment (POLE_BUFFER, 1 − ε − POLE_BUFFER), in increasing order.
///
/// Primary evaluator: the shifted-zeta continuation (via [`zeta2`]).
/// Cross-check: the critical-strip integral in its reflected form, recorded
/// whenever its own error estimate is tight enough to certify at this scale.
pub fn double_path_zeros(
    a: f64,
    epsilon: f64,
    search: &ZeroSearch,
    cfg: &EvalConfig,
) -> Result<Vec<ZeroRecord>> {
    if !(a > 0.0 && a < 0.5) {
        return Err(Error::Domain(format!(
            "the path search looks for zeros guaranteed when a < 1/2, got a = {a}"
        )));
    }
    if !(epsilon >= 1e-5 && epsilon < 0.5) {
        return Err(Error::Domain(format!(
            "path epsilon must lie in [1e-5, 0.5), got {epsilon}"
        )));
    }
    let window = (POLE_BUFFER, 1.0 - epsilon - POLE_BUFFER);
    if window.0 >= window.1 {
        return Err(Error::Domain(format!(
            "degenerate path window ({}, {}) at epsilon = {epsilon}",
            window.0, window.1
        )));
    }

    let f = |s1: f64| zeta2_on_path(s1, epsilon, a, cfg);
    let brackets = bracket_scan(f, window, search.scan_points, search.zero_tol)?;
    let path = format!(
        "sigma2 = 1 + {epsilon}; sigma1 in ({:.6}, {:.6})",
        window.0, window.1
    );
    brackets
        .iter()
        .map(|&b| {
            let refined = refine_zero(f, b, search)?;
            let (cross_method, cross_residual) = strip_cross_check(
                refined.location,
                1.0 + epsilon,
                a,
                search.zero_tol,
                cfg,
            );
            Ok(ZeroRecord {
                a,
                path: path.clone(),
                location: refined.location,
                bracket: refined.bracket,
                residual: refined.residual,
                method: "shifted-zeta-continuation".into(),
                iterations: refined.iterations,
                cross_method,
                cross_residual,
            })
        })
        .collect()
}

/// Re-score a path zero with the strip integral when the integral's own error
/// estimate is small enough to certify at 10× zero_tol.
fn strip_cross_check(
    sigma1: f64,
    sigma2: f64,
    a: f64,
    zero_tol: f64,
    cfg: &EvalConfig,
) -> (Option<String>, Option<f64>) {
    let unit = C64::new(1.0, 0.0);
    let point = match DoublePoint::new(
        C64::new(sigma1, 0.0),
        C64::new(sigma2, 0.0),
        a,
        unit,
        unit,
    ) {
        Ok(p) => p,
        Err(_) => return (None, None),
    };
    match double_strip(&point, SecondTermForm::Reflected, cfg) {
        Ok(ev) if ev.err_estimate <= 5.0 * zero_tol => {
            (Some("strip-integral-reflected".into()), Some(ev.value.re.abs()))
        }
        _ => (None, None),
    }
}

/// Zeros found on the first ε-path of the ladder that exhibits a sign change.
#[derive(Debug, Clone, Serialize)]
pub struct PathZeros {
    pub a: f64,
    /// The ε the ladder settled on.
    pub epsilon: f64,
    /// All zeros on that path, in increasing σ₁ order. The last one tracks
    /// the single-function zero σ*(a) as ε → 0.
    pub records: Vec<ZeroRecord>,
}

/// Descend the ε-ladder until the path σ₂ = 1 + ε shows a sign change.
pub fn double_path_zero_adaptive(
    a: f64,
    search: &ZeroSearch,
    cfg: &EvalConfig,
) -> Result<PathZeros> {
    for &epsilon in PATH_EPSILON_LADDER.iter() {
        let records = double_path_zeros(a, epsilon, search, cfg)?;
        if !records.is_empty() {
            return Ok(PathZeros { a, epsilon, records });
        }
    }
    Err(Error::TheoremContradiction(format!(
        "no sign change of ζ₂(σ₁, 1+ε; {a}) on any ε in {PATH_EPSILON_LADDER:?}; \
         a zero is guaranteed for a < 1/2, so this is an evaluator or resolution defect"
    )))
}

// ---------------------------------------------------------------------------
// Clause verification
// ---------------------------------------------------------------------------

/// Stable identifiers for the seven verified sign/zero claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClauseId {
    /// ζ(σ, a), 0 < σ < 1: zero-free iff a ≥ 1/2.
    #[serde(rename = "T1.2-1")]
    SingleUnit,
    /// Φ(σ, a, z), z ≠ 1: never zero on 0 < σ < 1, 0 < a ≤ 1.
    #[serde(rename = "T1.2-2")]
    SingleTwisted,
    /// ζ₂(σ₁, σ₂; a) on 0<σ₁<1, σ₂>1, 1<σ₁+σ₂<2: zero-free iff a ≥ 1/2.
    #[serde(rename = "T1.4-1")]
    DoubleUnit,
    /// Φ₂ with z₁ = 1, z₂ ≠ 1: never zero on σ₁ > 1, σ₂ > 0.
    #[serde(rename = "T1.4-2")]
    DoubleInnerTwist,
    /// Φ₂ with z₁ ≠ 1, z₂ = 1: never zero on σ₁ > 0, σ₂ > 1.
    #[serde(rename = "T1.4-3")]
    DoubleOuterTwist,
    /// Φ₂ with z₁ ≠ 1, z₂ ≠ 1: never zero on σ₁ > 0, σ₂ > 0.
    #[serde(rename = "T1.4-4")]
    DoubleBothTwists,
    /// ζ₂(σ, σ; a) has a real zero in (1/2, 1).
    #[serde(rename = "P1.5")]
    Diagonal,
}

/// Every clause, in report order.
pub const ALL_CLAUSES: [ClauseId; 7] = [
    ClauseId::SingleUnit,
    ClauseId::SingleTwisted,
    ClauseId::DoubleUnit,
    ClauseId::DoubleInnerTwist,
    ClauseId::DoubleOuterTwist,
    ClauseId::DoubleBothTwists,
    ClauseId::Diagonal,
];

impl ClauseId {
    pub fn token(self) -> &'static str {
        match self {
            ClauseId::SingleUnit => "T1.2-1",
            ClauseId::SingleTwisted => "T1.2-2",
            ClauseId::DoubleUnit => "T1.4-1",
            ClauseId::DoubleInnerTwist => "T1.4-2",
            ClauseId::DoubleOuterTwist => "T1.4-3",
            ClauseId::DoubleBothTwists => "T1.4-4",
            ClauseId::Diagonal => "P1.5",
        }
    }

    /// The claim being checked, in words.
    pub fn statement(self) -> &'static str {
        match self {
            ClauseId::SingleUnit => {
                "zeta(sigma, a) on 0 < sigma < 1 is negative (zero-free) for a >= 1/2 \
                 and has at least one real zero for a < 1/2"
            }
            ClauseId::SingleTwisted => {
                "Phi(sigma, a, z) is nonzero on 0 < sigma < 1 for 0 < a <= 1, |z| <= 1, \
                 z != 1: positive for real z, fixed Im sign for non-real z"
            }
            ClauseId::DoubleUnit => {
                "zeta2(sigma1, sigma2; a) on 0<sigma1<1, sigma2>1, 1<sigma1+sigma2<2 is \
                 negative (zero-free) for a >= 1/2 and has a real zero for a < 1/2"
            }
            ClauseId::DoubleInnerTwist => {
                "Phi2 with z1 = 1, z2 != 1 is nonzero for sigma1 > 1, sigma2 > 0"
            }
            ClauseId::DoubleOuterTwist => {
                "Phi2 with z1 != 1, z2 = 1 is nonzero for sigma1 > 0, sigma2 > 1"
            }
            ClauseId::DoubleBothTwists => {
                "Phi2 with z1 != 1 and z2 != 1 is nonzero for sigma1 > 0, sigma2 > 0"
            }
            ClauseId::Diagonal => {
                "zeta2(sigma, sigma; a) has at least one real zero in (1/2, 1)"
            }
        }
    }
}

impl fmt::Display for ClauseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ClauseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_CLAUSES
            .iter()
            .copied()
            .find(|c| c.token().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let valid: Vec<_> = ALL_CLAUSES.iter().map(|c| c.token()).collect();
                Error::Domain(format!("unknown clause id {s:?}; valid ids: {valid:?}"))
            })
    }
}

/// Per-sample outcome of a clause check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Verdict {
    /// A certified sign change, refined to a zero record.
    ZeroFound(ZeroRecord),
    /// One sign across the whole sweep; `extreme` is the sampled value
    /// closest to zero.
    SignConstant { sign: i8, extreme: f64 },
    /// Im f kept one sign and stayed outside the error bar; `min_abs` is the
    /// smallest |Im f| seen.
    ImNonvanishing { sign: i8, min_abs: f64 },
    /// Re f stayed positive outside the error bar.
    RePositive { min_value: f64 },
}

/// One grid sample with its verdict and whether it matches the clause.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleVerdict {
    pub a: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z1: Option<(f64, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z2: Option<(f64, f64)>,
    /// What was swept to produce the verdict.
    pub sweep: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe: Option<DivergenceProbe>,
    pub consistent: bool,
}

/// Machine-checkable verification report for one clause.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub clause: ClauseId,
    pub statement: String,
    pub samples: Vec<SampleVerdict>,
    /// True iff every sample is consistent with the clause.
    pub passed: bool,
    pub notes: Vec<String>,
}

/// Grids and tolerances for [`verify_clause`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub a_values: Vec<f64>,
    /// σ sweep resolution for one-dimensional sign sweeps.
    pub sigma_points: usize,
    /// Per-axis resolution of the two-dimensional negativity grid.
    pub grid_points: usize,
    /// (σ₁, σ₂) sample pairs for the twisted double clauses.
    pub sigma_pairs: Vec<(f64, f64)>,
    /// Real twist values (each in [−1, 1)).
    pub real_twists: Vec<f64>,
    /// Non-real twist values as (re, im), each with modulus ≤ 1.
    pub complex_twists: Vec<(f64, f64)>,
    /// ε for the divergence probes.
    pub epsilon: f64,
    pub search: ZeroSearch,
}

impl VerifyOptions {
    /// Default grids per clause: small enough to run in seconds, dense enough
    /// to exercise every case split.
    pub fn for_clause(clause: ClauseId) -> Self {
        let base = VerifyOptions {
            a_values: vec![0.3, 0.7, 1.0],
            sigma_points: 16,
            grid_points: 20,
            sigma_pairs: Vec::new(),
            real_twists: vec![-1.0, 0.5],
            complex_twists: vec![
                (0.0, 1.0),                 // i
                (0.5, 0.866025403784438647), // exp(i pi/3)
            ],
            epsilon: 1e-3,
            search: ZeroSearch::default(),
        };
        match clause {
            ClauseId::SingleUnit => VerifyOptions {
                a_values: (1..=20).map(|k| k as f64 * 0.05).collect(),
                sigma_points: 256,
                ..base
            },
            ClauseId::SingleTwisted => VerifyOptions {
                real_twists: vec![-1.0, -0.5, 0.5],
                complex_twists: vec![(0.0, 1.0), (0.0, -1.0), (0.5, 0.866025403784438647)],
                ..base
            },
            ClauseId::DoubleUnit => VerifyOptions {
                a_values: vec![0.1, 0.3, 0.45, 0.6, 0.75, 1.0],
                search: ZeroSearch::for_double_path(),
                ..base
            },
            ClauseId::DoubleInnerTwist => VerifyOptions {
                sigma_pairs: vec![(1.2, 0.3), (1.5, 0.5), (2.0, 1.5), (2.5, 0.2), (3.0, 2.5)],
                ..base
            },
            ClauseId::DoubleOuterTwist => VerifyOptions {
                sigma_pairs: vec![(0.3, 1.2), (0.5, 1.5), (1.5, 2.0), (0.2, 2.5), (2.5, 3.0)],
                ..base
            },
            ClauseId::DoubleBothTwists => VerifyOptions {
                sigma_pairs: vec![(0.3, 0.4), (0.5, 0.5), (1.5, 0.2), (0.7, 1.3), (2.0, 2.0)],
                ..base
            },
            ClauseId::Diagonal => VerifyOptions { search: ZeroSearch::for_diagonal(), ..base },
        }
    }
}

/// What the sign classification predicts for a twisted sample.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Expected {
    /// All twists real: the value is real and positive.
    PositiveReal,
    /// At least one non-real twist with this Im sign drives Im f away from 0.
    ImSign(i8),
    /// Two non-real twists with opposite Im signs: Re f > 0.
    RePositive,
}

fn is_real_twist(z: C64) -> bool {
    z.im.abs() <= REAL_TWIST_IM
}

/// The conjugate-angle product sin(2πθ₁)sin(2πθ₂) classification, reduced to
/// Im signs: same-sign Im ⇒ fixed Im sign (that of z₁); opposite ⇒ Re > 0;
/// a single non-real twist drives Im on its own.
fn expected_verdict(z1: C64, z2: C64) -> Expected {
    match (is_real_twist(z1), is_real_twist(z2)) {
        (true, true) => Expected::PositiveReal,
        (false, true) => Expected::ImSign(z1.im.signum() as i8),
        (true, false) => Expected::ImSign(z2.im.signum() as i8),
        (false, false) => {
            if z1.im * z2.im > 0.0 {
                Expected::ImSign(z1.im.signum() as i8)
            } else {
                Expected::RePositive
            }
        }
    }
}

/// Fold per-point values into a verdict matching `expected`.
struct SweepAccumulator {
    expected: Expected,
    min_margin: f64,
    consistent: bool,
}

impl SweepAccumulator {
    fn new(expected: Expected) -> Self {
        SweepAccumulator { expected, min_margin: f64::INFINITY, consistent: true }
    }

    fn push(&mut self, value: C64, err: f64) {
        match self.expected {
            Expected::PositiveReal => {
                self.min_margin = self.min_margin.min(value.re);
                // Real positivity needs the value clear of zero and a truly
                // real evaluation.
                if !(value.re > err && value.im.abs() <= err.max(1e-9)) {
                    self.consistent = false;
                }
            }
            Expected::ImSign(sign) => {
                let signed = f64::from(sign) * value.im;
                self.min_margin = self.min_margin.min(signed.abs().min(value.im.abs()));
                if !(signed > err) {
                    self.consistent = false;
                }
            }
            Expected::RePositive => {
                self.min_margin = self.min_margin.min(value.re);
                if !(value.re > err) {
                    self.consistent = false;
                }
            }
        }
    }

    fn verdict(&self) -> Verdict {
        match self.expected {
            Expected::PositiveReal => Verdict::SignConstant {
                sign: 1,
                extreme: self.min_margin,
            },
            Expected::ImSign(sign) => Verdict::ImNonvanishing {
                sign,
                min_abs: self.min_margin,
            },
            Expected::RePositive => Verdict::RePositive { min_value: self.min_margin },
        }
    }
}

/// Run the verification harness for one clause.
///
/// A sample that contradicts the clause never aborts the run: it is recorded
/// with `consistent: false`, the report fails, and the caller decides how to
/// surface it (the CLI maps a failed report to the contradiction exit code).
pub fn verify_clause(
    clause: ClauseId,
    opts: &VerifyOptions,
    cfg: &EvalConfig,
) -> Result<TheoremReport> {
    let (samples, notes) = match clause {
        ClauseId::SingleUnit => verify_single_unit(opts, cfg)?,
        ClauseId::SingleTwisted => verify_single_twisted(opts, cfg)?,
        ClauseId::DoubleUnit => verify_double_unit(opts, cfg)?,
        ClauseId::DoubleInnerTwist | ClauseId::DoubleOuterTwist | ClauseId::DoubleBothTwists => {
            verify_double_twisted(clause, opts, cfg)?
        }
        ClauseId::Diagonal => verify_diagonal(opts, cfg)?,
    };
    let passed = samples.iter().all(|s| s.consistent);
    Ok(TheoremReport {
        clause,
        statement: clause.statement().into(),
        samples,
        passed,
        notes,
    })
}

type SamplesAndNotes = (Vec<SampleVerdict>, Vec<String>);

fn verify_single_unit(opts: &VerifyOptions, cfg: &EvalConfig) -> Result<SamplesAndNotes> {
    let window = (0.01, 0.99);
    let results = opts
        .a_values
        .par_iter()
        .map(|&a| -> Result<(SampleVerdict, Option<String>)> {
            if a < 0.5 {
                match hurwitz_real_zero(a, &opts.search, cfg) {
                    Ok(record) => Ok((
                        SampleVerdict {
                            a,
                            z1: None,
                            z2: None,
                            sweep: record.path.clone(),
                            verdict: Verdict::ZeroFound(record),
                            probe: None,
                            consistent: true,
                        },
                        None,
                    )),
                    Err(Error::TheoremContradiction(msg)) => Ok((
                        SampleVerdict {
                            a,
                            z1: None,
                            z2: None,
                            sweep: format!("sigma in ({}, {})", HURWITZ_SCAN_LO, HURWITZ_SCAN_HI),
                            verdict: Verdict::SignConstant { sign: 0, extreme: 0.0 },
                            probe: None,
                            consistent: false,
                        },
                        Some(msg),
                    )),
                    Err(e) => Err(e),
                }
            } else {
                // a >= 1/2: every sample on the sweep must be negative.
                let n = opts.sigma_points.max(2);
                let mut max_value = f64::NEG_INFINITY;
                let mut worst = window.0;
                for k in 0..n {
                    let sigma = window.0 + (window.1 - window.0) * k as f64 / (n - 1) as f64;
                    let v = hurwitz_re(sigma, a, cfg)
                        .map_err(|e| with_coordinate(e, "sigma", sigma))?;
                    if v > max_value {
                        max_value = v;
                        worst = sigma;
                    }
                }
                let consistent = max_value < 0.0;
                let note = (!consistent).then(|| {
                    format!(
                        "zeta({worst}, {a}) = {max_value:.6e} >= 0 contradicts negativity \
                         for a >= 1/2"
                    )
                });
                Ok((
                    SampleVerdict {
                        a,
                        z1: None,
                        z2: None,
                        sweep: format!("{n} sigma samples on [{}, {}]", window.0, window.1),
                        verdict: Verdict::SignConstant { sign: -1, extreme: max_value },
                        probe: None,
                        consistent,
                    },
                    note,
                ))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(split_notes(results))
}

fn verify_single_twisted(opts: &VerifyOptions, cfg: &EvalConfig) -> Result<SamplesAndNotes> {
    let window = (0.01, 0.99);
    let mut cases: Vec<(f64, C64)> = Vec::new();
    for &a in &opts.a_values {
        for &r in &opts.real_twists {
            cases.push((a, C64::new(r, 0.0)));
        }
        for &(re, im) in &opts.complex_twists {
            cases.push((a, C64::new(re, im)));
        }
    }
    let samples = cases
        .par_iter()
        .map(|&(a, z)| -> Result<SampleVerdict> {
            let expected = expected_verdict(z, C64::new(0.0, 0.0));
            // A single twist: reuse the pair classification by passing a
            // dummy real second twist, which leaves z's own case.
            let mut acc = SweepAccumulator::new(expected);
            let n = opts.sigma_points.max(2);
            for k in 0..n {
                let sigma = window.0 + (window.1 - window.0) * k as f64 / (n - 1) as f64;
                let ev = lerch_phi(C64::new(sigma, 0.0), a, z, cfg)
                    .map_err(|e| with_coordinate(e, "sigma", sigma))?;
                acc.push(ev.value, ev.err_estimate);
            }
            Ok(SampleVerdict {
                a,
                z1: Some((z.re, z.im)),
                z2: None,
                sweep: format!("{n} sigma samples on [{}, {}]", window.0, window.1),
                verdict: acc.verdict(),
                probe: None,
                consistent: acc.consistent,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((samples, Vec::new()))
}

fn verify_double_unit(opts: &VerifyOptions, cfg: &EvalConfig) -> Result<SamplesAndNotes> {
    let unit = C64::new(1.0, 0.0);
    let results = opts
        .a_values
        .par_iter()
        .map(|&a| -> Result<(SampleVerdict, Vec<String>)> {
            if a >= 0.5 {
                // Negativity over the whole region on a grid-by-grid basis.
                let g = opts.grid_points.max(2);
                let mut max_value = f64::NEG_INFINITY;
                let mut worst = (0.0, 0.0);
                for i in 0..g {
                    let s1 = 0.01 + (0.99 - 0.01) * i as f64 / (g - 1) as f64;
                    let lo2 = 1.0 + POLE_BUFFER;
                    let hi2 = 2.0 - s1 - POLE_BUFFER;
                    for j in 0..g {
                        let s2 = lo2 + (hi2 - lo2) * j as f64 / (g - 1) as f64;
                        let p = DoublePoint::new(
                            C64::new(s1, 0.0),
                            C64::new(s2, 0.0),
                            a,
                            unit,
                            unit,
                        )?;
                        let v = zeta2(&p, cfg)?.value.re;
                        if v > max_value {
                            max_value = v;
                            worst = (s1, s2);
                        }
                    }
                }
                let consistent = max_value < 0.0;
                let mut notes = Vec::new();
                if !consistent {
                    notes.push(format!(
                        "zeta2({}, {}; {a}) = {max_value:.6e} >= 0 contradicts negativity \
                         for a >= 1/2",
                        worst.0, worst.1
                    ));
                }
                Ok((
                    SampleVerdict {
                        a,
                        z1: None,
                        z2: None,
                        sweep: format!(
                            "{g}x{g} grid over 0<sigma1<1, sigma2>1, 1<sigma1+sigma2<2 \
                             (buffer {POLE_BUFFER})"
                        ),
                        verdict: Verdict::SignConstant { sign: -1, extreme: max_value },
                        probe: None,
                        consistent,
                    },
                    notes,
                ))
            } else {
                let probe = divergence_probe(a, opts.epsilon, cfg)?;
                let mut notes = Vec::new();
                if !probe.signs_diverge {
                    notes.push(format!(
                        "positive probe at sigma1 = {:.6} is {:.3e} <= 0 for a = {a}: the \
                         zeta argmax sits where the -1/(2(sigma1+eps)) part of the path \
                         expansion dominates; the scan finds the positive window further \
                         right instead",
                        probe.positive_location, probe.positive_probe
                    ));
                }
                if !probe.threshold_met {
                    notes.push(format!(
                        "divergence probes at eps = {} stay under the 10^3 gate for a = {a} \
                         (positive probe {:.4}): along the path |zeta2| scales like \
                         sup zeta(., a)/eps = {:.1}, which only clears 10^3 for small a",
                        probe.epsilon,
                        probe.positive_probe,
                        probe.zeta_at_sigma0 / probe.epsilon
                    ));
                }
                match double_path_zero_adaptive(a, &opts.search, cfg) {
                    Ok(path) => {
                        let record = path
                            .records
                            .last()
                            .cloned()
                            .expect("adaptive search returns at least one record");
                        Ok((
                            SampleVerdict {
                                a,
                                z1: None,
                                z2: None,
                                sweep: format!(
                                    "epsilon ladder settled on sigma2 = 1 + {}",
                                    path.epsilon
                                ),
                                verdict: Verdict::ZeroFound(record),
                                probe: Some(probe),
                                consistent: true,
                            },
                            notes,
                        ))
                    }
                    Err(Error::TheoremContradiction(msg)) => {
                        notes.push(msg);
                        Ok((
                            SampleVerdict {
                                a,
                                z1: None,
                                z2: None,
                                sweep: "epsilon ladder exhausted".into(),
                                verdict: Verdict::SignConstant { sign: 0, extreme: 0.0 },
                                probe: Some(probe),
                                consistent: false,
                            },
                            notes,
                        ))
                    }
                    Err(e) => Err(e),
                }
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let mut samples = Vec::with_capacity(results.len());
    let mut notes = Vec::new();
    for (sample, mut sample_notes) in results {
        samples.push(sample);
        notes.append(&mut sample_notes);
    }
    Ok((samples, notes))
}

fn verify_double_twisted(
    clause: ClauseId,
    opts: &VerifyOptions,
    cfg: &EvalConfig,
) -> Result<SamplesAndNotes> {
    let unit = C64::new(1.0, 0.0);
    let mut twist_values: Vec<C64> = opts
        .real_twists
        .iter()
        .map(|&r| C64::new(r, 0.0))
        .collect();
    twist_values.extend(opts.complex_twists.iter().map(|&(re, im)| C64::new(re, im)));

    let mut cases: Vec<(f64, C64, C64)> = Vec::new();
    for &a in &opts.a_values {
        match clause {
            ClauseId::DoubleInnerTwist => {
                for &z2 in &twist_values {
                    cases.push((a, unit, z2));
                }
            }
            ClauseId::DoubleOuterTwist => {
                for &z1 in &twist_values {
                    cases.push((a, z1, unit));
                }
            }
            ClauseId::DoubleBothTwists => {
                for &z1 in &twist_values {
                    for &z2 in &twist_values {
                        cases.push((a, z1, z2));
                    }
                }
            }
            _ => unreachable!("twisted verification called for twisted clauses only"),
        }
    }

    let samples = cases
        .par_iter()
        .map(|&(a, z1, z2)| -> Result<SampleVerdict> {
            let expected = match clause {
                ClauseId::DoubleInnerTwist => expected_verdict(z2, C64::new(0.0, 0.0)),
                ClauseId::DoubleOuterTwist => expected_verdict(z1, C64::new(0.0, 0.0)),
                _ => expected_verdict(z1, z2),
            };
            let mut acc = SweepAccumulator::new(expected);
            for &(s1, s2) in &opts.sigma_pairs {
                let p = DoublePoint::new(C64::new(s1, 0.0), C64::new(s2, 0.0), a, z1, z2)?;
                let ev = zeta2(&p, cfg).map_err(|e| {
                    with_coordinate(with_coordinate(e, "sigma2", s2), "sigma1", s1)
                })?;
                acc.push(ev.value, ev.err_estimate);
            }
            Ok(SampleVerdict {
                a,
                z1: Some((z1.re, z1.im)),
                z2: Some((z2.re, z2.im)),
                sweep: format!("{} sigma-pairs", opts.sigma_pairs.len()),
                verdict: acc.verdict(),
                probe: None,
                consistent: acc.consistent,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((samples, Vec::new()))
}

fn verify_diagonal(opts: &VerifyOptions, cfg: &EvalConfig) -> Result<SamplesAndNotes> {
    let results = opts
        .a_values
        .par_iter()
        .map(|&a| -> Result<(SampleVerdict, Vec<String>)> {
            let probes = diagonal_boundary_probes(a, cfg)?;
            let mut notes = vec![format!(
                "diagonal boundary probes for a = {a}: f({}) = {:.4e}, f({}) = {:.4e}",
                probes.lower_sigma, probes.lower_value, probes.upper_sigma, probes.upper_value
            )];
            match diagonal_zero(a, &opts.search, cfg) {
                Ok(record) => Ok((
                    SampleVerdict {
                        a,
                        z1: None,
                        z2: None,
                        sweep: record.path.clone(),
                        verdict: Verdict::ZeroFound(record),
                        probe: None,
                        consistent: probes.signs_correct,
                    },
                    notes,
                )),
                Err(Error::TheoremContradiction(msg)) => {
                    notes.push(msg);
                    Ok((
                        SampleVerdict {
                            a,
                            z1: None,
                            z2: None,
                            sweep: "diagonal scan".into(),
                            verdict: Verdict::SignConstant { sign: 0, extreme: 0.0 },
                            probe: None,
                            consistent: false,
                        },
                        notes,
                    ))
                }
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let mut samples = Vec::with_capacity(results.len());
    let mut notes = Vec::new();
    for (sample, mut sample_notes) in results {
        samples.push(sample);
        notes.append(&mut sample_notes);
    }
    Ok((samples, notes))
}

fn split_notes(results: Vec<(SampleVerdict, Option<String>)>) -> SamplesAndNotes {
    let mut samples = Vec::with_capacity(results.len());
    let mut notes = Vec::new();
    for (sample, note) in results {
        samples.push(sample);
        notes.extend(note);
    }
    (samples, notes)
}

// ---------------------------------------------------------------------------
