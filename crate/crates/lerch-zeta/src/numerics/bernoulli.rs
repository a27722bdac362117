//! Bernoulli numbers and polynomials, generated once in exact rational
//! arithmetic and frozen to f64 tables. Exact generation keeps the table
//! trustworthy to the last bit; the recurrence in floating point loses
//! digits catastrophically past index ~20.

use crate::C64;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::f64::consts::PI;

/// Highest Bernoulli index kept in the shared table. Euler-Maclaurin tails
/// and the shifted-argument continuation never need more than ~30 orders;
/// 48 leaves comfortable slack.
const DEFAULT_MAX_INDEX: usize = 48;

pub struct BernoulliTable {
    /// numbers[k] = B_k with the B_1 = -1/2 convention (values of B_k(0)).
    numbers: Vec<f64>,
    /// poly[l][k] = C(l,k) · B_k, the coefficient of x^{l-k} in B_l(x).
    poly: Vec<Vec<f64>>,
    /// sup[l] bounds |B̃_l(x)| on ℝ: 4 · l! / (2π)^l.
    sup: Vec<f64>,
    factorial: Vec<f64>,
}

impl BernoulliTable {
    pub fn new(max_index: usize) -> Self {
        let exact = exact_numbers(max_index);
        let numbers: Vec<f64> = exact
            .iter()
            .map(|b| b.to_f64().expect("Bernoulli number out of f64 range"))
            .collect();

        let mut poly = Vec::with_capacity(max_index + 1);
        for l in 0..=max_index {
            let binom = binomial_row(l);
            let coeffs: Vec<f64> = (0..=l)
                .map(|k| {
                    let c = BigRational::from_integer(binom[k].clone()) * &exact[k];
                    c.to_f64().expect("polynomial coefficient out of f64 range")
                })
                .collect();
            poly.push(coeffs);
        }

        let mut factorial = Vec::with_capacity(max_index + 2);
        factorial.push(1.0);
        for k in 1..=max_index + 1 {
            factorial.push(factorial[k - 1] * k as f64);
        }

        let sup = (0..=max_index)
            .map(|l| {
                if l == 0 {
                    1.0
                } else {
                    4.0 * factorial[l] / (2.0 * PI).powi(l as i32)
                }
            })
            .collect();

        BernoulliTable { numbers, poly, sup, factorial }
    }

    pub fn max_index(&self) -> usize {
        self.numbers.len() - 1
    }

    /// B_k as f64.
    pub fn number(&self, k: usize) -> f64 {
        self.numbers[k]
    }

    /// Bernoulli polynomial B_l(x), Horner evaluation in descending powers.
    pub fn polynomial(&self, l: usize, x: f64) -> f64 {
        let coeffs = &self.poly[l];
        let mut acc = coeffs[0];
        for &c in &coeffs[1..] {
            acc = acc * x + c;
        }
        acc
    }

    /// Periodic extension B̃_l(x) = B_l(x - ⌊x⌋).
    pub fn periodic(&self, l: usize, x: f64) -> f64 {
        let mut frac = x.fract();
        if frac < 0.0 {
            frac += 1.0;
        }
        self.polynomial(l, frac)
    }

    /// Upper bound for sup_x |B̃_l(x)|.
    pub fn sup_bound(&self, l: usize) -> f64 {
        self.sup[l]
    }

    /// k! as f64 (valid up to max_index + 1).
    pub fn factorial(&self, k: usize) -> f64 {
        self.factorial[k]
    }
}

/// The process-wide table. Building it costs a few milliseconds once.
pub fn default_bernoulli() -> &'static BernoulliTable {
    static TABLE: Lazy<BernoulliTable> = Lazy::new(|| BernoulliTable::new(DEFAULT_MAX_INDEX));
    &TABLE
}

/// ∫_λ^∞ B̃_{j₀}(x) (x+a)^{-p₀} dx at an *integer* boundary λ, where
/// `base` = λ + a. Repeated integration by parts trades B̃_j for
/// B̃_{j+1}/(j+1) while raising the power; each step emits the boundary
/// contribution coeff_j · (-B_{j+1}/(j+1)) · base^{-p_j} and truncating after
/// it is off by at most |coeff_{j+1}| · sup|B̃_{j+1}| · base^{1-Re p}/(Re p - 1).
///
/// Returns the partial sum at the smallest bound reached, that bound, and
/// the step count; the walk stops early once the bound meets `target` or the
/// (asymptotic, eventually divergent) bounds start growing away from their
/// minimum. `None` means no step ever produced a finite bound (Re p never
/// exceeded 1 within the table).
pub(crate) fn periodic_tail_integral(
    table: &BernoulliTable,
    j0: usize,
    p0: C64,
    base: f64,
    target: f64,
) -> Option<(C64, f64, usize)> {
    debug_assert!(base > 0.0);
    let ln_base = base.ln();
    let mut coeff = C64::new(1.0, 0.0);
    let mut p = p0;
    let mut acc = C64::new(0.0, 0.0);
    let mut best: Option<(C64, f64)> = None;
    let mut steps = 0usize;
    for j in j0..table.max_index() {
        steps = j - j0 + 1;
        let b_next = table.number(j + 1);
        if b_next != 0.0 {
            acc += coeff * (-b_next / (j as f64 + 1.0)) * (-p * ln_base).exp();
        }
        coeff = coeff * p / (j as f64 + 1.0);
        p += 1.0;
        if p.re > 1.0 + 1e-9 {
            let bound =
                coeff.norm() * table.sup_bound(j + 1) * base.powf(1.0 - p.re) / (p.re - 1.0);
            match best {
                Some((_, b)) if bound >= b => {
                    if bound > 100.0 * b {
                        break;
                    }
                }
                _ => best = Some((acc, bound)),
            }
            if bound <= target {
                break;
            }
        }
    }
    best.map(|(v, b)| (v, b, steps))
}

/// Row l of Pascal's triangle as exact integers.
fn binomial_row(l: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(l + 1);
    row.push(BigInt::one());
    for k in 1..=l {
        let next = (&row[k - 1] * BigInt::from(l + 1 - k)) / BigInt::from(k);
        row.push(next);
    }
    row
}

/// B_0..=B_max by the defining recurrence Σ_{j≤m} C(m+1, j) B_j = [m = 0].
fn exact_numbers(max_index: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(max_index + 1);
    b.push(BigRational::one());
    for m in 1..=max_index {
        if m > 1 && m % 2 == 1 {
            // Odd-index numbers past B_1 vanish identically; skip the sum
            // so the table holds exact zeros.
            b.push(BigRational::zero());
            continue;
        }
        let binom = binomial_row(m + 1);
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += BigRational::from_integer(binom[j].clone()) * bj;
            }
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_numbers() {
        let t = default_bernoulli();
        assert_eq!(t.number(0), 1.0);
        assert_eq!(t.number(1), -0.5);
        assert!((t.number(2) - 1.0 / 6.0).abs() < 1e-16);
        assert!((t.number(4) + 1.0 / 30.0).abs() < 1e-16);
        assert!((t.number(12) + 691.0 / 2730.0).abs() < 1e-15);
    }

    #[test]
    fn odd_numbers_vanish_exactly() {
        let t = default_bernoulli();
        for k in (3..=t.max_index()).step_by(2) {
            assert_eq!(t.number(k), 0.0, "B_{k} should be exactly zero");
        }
    }

    #[test]
    fn large_index_value() {
        // B_30 = 8615841276005 / 14322
        let t = default_bernoulli();
        let expected = 8_615_841_276_005.0 / 14_322.0;
        assert!((t.number(30) - expected).abs() <= 1e-12 * expected.abs());
    }

    #[test]
    fn polynomial_low_orders() {
        let t = default_bernoulli();
        // B_1(x) = x - 1/2, B_2(x) = x² - x + 1/6
        assert!((t.polynomial(1, 0.25) + 0.25).abs() < 1e-16);
        let x: f64 = 0.3;
        let b2 = x * x - x + 1.0 / 6.0;
        assert!((t.polynomial(2, x) - b2).abs() < 1e-15);
        // B_l(0) = B_l
        for l in 0..=12 {
            assert!((t.polynomial(l, 0.0) - t.number(l)).abs() < 1e-15);
        }
    }

    #[test]
    fn periodic_extension_wraps() {
        let t = default_bernoulli();
        assert!((t.periodic(1, 2.75) - 0.25).abs() < 1e-15);
        assert!((t.periodic(2, -0.7) - t.polynomial(2, 0.3)).abs() < 1e-15);
        for l in 1..=8 {
            let a = t.periodic(l, 0.37);
            let b = t.periodic(l, 5.37);
            assert!((a - b).abs() < 1e-13, "period-1 violated for l = {l}");
        }
    }

    #[test]
    fn sup_bound_dominates_samples() {
        let t = default_bernoulli();
        for l in 1..=20 {
            let bound = t.sup_bound(l);
            for i in 0..=200 {
                let x = i as f64 / 200.0;
                assert!(
                    t.polynomial(l, x).abs() <= bound * (1.0 + 1e-12),
                    "sup bound violated at l = {l}, x = {x}"
                );
            }
        }
    }

    #[test]
    fn factorials() {
        let t = default_bernoulli();
        assert_eq!(t.factorial(0), 1.0);
        assert_eq!(t.factorial(5), 120.0);
        assert_eq!(t.factorial(10), 3_628_800.0);
    }
}
