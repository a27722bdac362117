//! ζ₂ on the critical strip 0 < Re s₁ < 1, Re s₂ > 1, 1 < Re(s₁+s₂) < 2
//! (unit twists only), where neither the double sum nor the plain iterated
//! integral converges. Subtracting the 1/(x+y) pole from the inner kernel
//! splits Γ(s₁)Γ(s₂) ζ₂ into
//!
//!   I₁ = ∬ y^{s₂-1}/(e^y-1) · H(a, x+y) x^{s₁-1} dx dy
//!
//! plus a correction carrying the subtracted pole, available in two
//! algebraically equal but numerically independent forms:
//!
//! * [`SecondTermForm::Reflected`] — the inner x-integral of x^{s₁-1}/(x+y)
//!   collapsed in closed form to Γ(s₁)Γ(1-s₁) y^{s₁-1}, leaving the single
//!   integral Γ(s₁)Γ(1-s₁) ∫ H(1,y) y^{s₁+s₂-2} dy;
//! * [`SecondTermForm::Iterated`] — the same correction kept as a genuine
//!   double integral ∬ x^{s₁-1}/(x+y) · H(1,y) y^{s₂-1} dx dy.
//!
//! Agreement between the two forms checks the reflection identity inside the
//! evaluator itself; agreement with the shifted-zeta continuation checks the
//! whole representation.

use crate::config::{is_one, DoublePoint, EvalConfig};
use crate::error::{Error, Result};
use crate::kernel::kernel_value;
use crate::numerics::{
    gamma, integrate_double_semi_infinite, integrate_semi_infinite, reflection_product,
};
use crate::{Evaluation, C64};

/// Which representation of the subtracted-pole correction term to integrate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondTermForm {
    /// Closed-form inner integral: Γ(s₁)Γ(1-s₁) ∫₀^∞ H(1,y) y^{s₁+s₂-2} dy.
    Reflected,
    /// Full double integral: ∬ x^{s₁-1}/(x+y) · H(1,y) y^{s₂-1} dx dy.
    Iterated,
}

fn check_strip(p: &DoublePoint) -> Result<()> {
    if !(is_one(p.z1) && is_one(p.z2)) {
        return Err(Error::Domain(
            "strip evaluator is defined for unit twists z1 = z2 = 1".into(),
        ));
    }
    let (sig1, sig2) = (p.s1.re, p.s2.re);
    let sum = sig1 + sig2;
    if !(sig1 > 0.0 && sig1 < 1.0 && sig2 > 1.0 && sum > 1.0 && sum < 2.0) {
        return Err(Error::Domain(format!(
            "strip evaluator needs 0 < Re s1 < 1, Re s2 > 1, 1 < Re(s1+s2) < 2; \
             got ({sig1}, {sig2})"
        )));
    }
    Ok(())
}

pub fn double_strip(p: &DoublePoint, form: SecondTermForm, cfg: &EvalConfig) -> Result<Evaluation> {
    check_strip(p)?;
    let DoublePoint { s1, s2, a, .. } = *p;
    let g = gamma(s1)? * gamma(s2)?;
    let sm1 = s1 - 1.0;
    let sm2 = s2 - 1.0;

    // I₁: bounded kernel, exponential outer decay, x^{σ₁-1} inner and
    // y^{σ₂-2} outer endpoint behaviour (the 1/(e^y-1) pole contributes y⁻¹).
    // The power factors and the 1/(e^y-1) pole combine in log space — their
    // product can leave f64 range near the corner where the kernel factor,
    // bounded by 1 in magnitude, is harmless.
    let f1 = |x: f64, y: f64| {
        let pole_log = (-(-y).exp_m1()).ln();
        C64::new(kernel_value(a, x + y), 0.0)
            * (sm1 * x.ln() + sm2 * y.ln() - y - pole_log).exp()
    };
    let outer_q = cfg.double_quad.with_singularity(s2.re - 2.0);
    let inner_q = cfg.double_quad.inner().with_singularity(s1.re - 1.0);
    let i1 = integrate_double_semi_infinite(f1, &outer_q, &inner_q)?;

    let (second, second_err, second_evals) = match form {
        SecondTermForm::Reflected => {
            let refl = reflection_product(s1)?;
            let sum_m2 = s1 + s2 - 2.0;
            let budget = cfg.quad.with_singularity(sum_m2.re);
            let i2 = integrate_semi_infinite(
                |y| C64::new(kernel_value(1.0, y), 0.0) * (sum_m2 * y.ln()).exp(),
                &budget,
            )?;
            (refl * i2.value, refl.norm() * i2.err_estimate, i2.evals)
        }
        SecondTermForm::Iterated => {
            // Computed in scaled coordinates y = xτ, which turn the integrand
            // into x^{s₁+s₂-2} τ^{s₂-1} H(1, xτ)/(1+τ). In the raw (x, y)
            // plane the 1/(x+y) crossover sits at y ≈ x: far from the origin
            // it is separated from the node-map centre by a wide band of
            // negligible samples, which the adaptive walk rightly refuses to
            // cross, and the mass beyond it is lost. Scaling pins that
            // crossover at τ ≈ 1 for every x, so each inner integral is a
            // single hump the maps are centred on. The inner keeps the
            // τ^{σ₂-1} endpoint; the outer behaves like x^{σ₁-1} at 0 since
            // the inner integral grows like x^{1-σ₂} there.
            let ssum_m2 = s1 + s2 - 2.0;
            let f2 = |tau: f64, x: f64| {
                C64::new(kernel_value(1.0, x * tau), 0.0)
                    * (ssum_m2 * x.ln() + sm2 * tau.ln() - (1.0 + tau).ln()).exp()
            };
            let outer2 = cfg.double_quad.with_singularity(s1.re - 1.0);
            let inner2 = cfg.double_quad.inner().with_singularity(s2.re - 1.0);
            let i2 = integrate_double_semi_infinite(f2, &outer2, &inner2)?;
            (i2.value, i2.err_estimate, i2.evals)
        }
    };

    let total = i1.value + second;
    let value = total / g;
    Ok(Evaluation {
        value,
        err_estimate: (i1.err_estimate + second_err) / g.norm() + 1e-15 * value.norm(),
        work: i1.evals + second_evals,
    })
}
