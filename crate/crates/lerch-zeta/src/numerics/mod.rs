//! Shared numerical primitives: complex gamma, Bernoulli data, Pochhammer
//! symbols, compensated summation, and double-exponential quadrature.

mod bernoulli;
mod gamma;
mod quadrature;

pub use bernoulli::{default_bernoulli, BernoulliTable};
pub(crate) use bernoulli::periodic_tail_integral;
pub use gamma::{gamma, reflection_product};
pub use quadrature::{
    integrate_double_semi_infinite, integrate_finite, integrate_from_one, integrate_semi_infinite,
    integrate_unit_interval, DoubleQuadResult, QuadResult,
};

use crate::C64;

/// Ascending factorial (s)ₗ = s(s+1)⋯(s+l-1), with (s)₀ = 1.
pub fn pochhammer(s: C64, l: u32) -> C64 {
    let mut acc = C64::new(1.0, 0.0);
    for i in 0..l {
        acc *= s + i as f64;
    }
    acc
}

/// base^e for a positive real base: exp(e·ln base). One log and one complex
/// exp, with none of the branch bookkeeping of a general complex power.
#[inline]
pub fn pow_real_base(base: f64, e: C64) -> C64 {
    debug_assert!(base > 0.0, "pow_real_base needs a positive base, got {base}");
    (e * base.ln()).exp()
}

/// (e^w - 1)/w, stable near w = 0 where the direct form cancels. Used to
/// deflate simple poles of the form (x^w - 1)/w.
pub(crate) fn expm1_over(w: C64) -> C64 {
    if w.norm() < 1e-2 {
        // 1 + w/2 + w²/6 + … ; eight terms leave truncation below 1e-21.
        let mut acc = C64::new(1.0, 0.0);
        let mut term = C64::new(1.0, 0.0);
        for k in 2..=8 {
            term *= w / k as f64;
            acc += term;
        }
        acc
    } else {
        (w.exp() - 1.0) / w
    }
}

/// 1 - z·e^{-x} without cancellation: rewritten as (1 - z) - z·expm1(-x),
/// whose two pieces cannot cancel for |z| ≤ 1 (Re(1-z) ≥ 0 on the closed
/// unit disk and -expm1(-x) > 0 for x > 0). The naive form loses digits
/// exactly where geometric-series integrands need them most: z near 1 and
/// x near 0.
#[inline]
pub(crate) fn one_minus_twist_exp(z: C64, x: f64) -> C64 {
    (C64::new(1.0, 0.0) - z) - z * (-x).exp_m1()
}

/// Compensated (Kahan) accumulator for complex terms. Long series with 10⁵+
/// terms need this to keep the summation error near one ulp of the result
/// instead of growing linearly in the term count.
#[derive(Debug, Clone, Copy)]
pub struct KahanSum {
    sum: C64,
    carry: C64,
}

impl KahanSum {
    pub fn new() -> Self {
        KahanSum { sum: C64::new(0.0, 0.0), carry: C64::new(0.0, 0.0) }
    }

    #[inline]
    pub fn add(&mut self, term: C64) {
        let y = term - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> C64 {
        self.sum
    }
}

impl Default for KahanSum {
    fn default() -> Self {
        Self::new()
    }
}
