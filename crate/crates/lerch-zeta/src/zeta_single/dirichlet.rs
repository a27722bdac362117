//! Dirichlet characters for small moduli and the finite-Fourier bridges
//! connecting L-functions, shifted zetas and boundary polylogarithms:
//!
//!   L(s,χ)        = q^{-s} Σ_r χ(r) ζ(s, r/q)
//!   ζ(s, r/q)     = (q^s/φ(q)) Σ_χ χ̄(r) L(s,χ)                (gcd(r,q) = 1)
//!   ζ(s, r/q)     = q^{s-1} Σ_n e^{-2πi rn/q} Li_s(e^{2πi n/q})
//!   Li_s(e^{2πi r/q}) = q^{-s} Σ_n e^{2πi rn/q} ζ(s, n/q)
//!   L(s,χ)        = (1/G(χ̄)) Σ_r χ̄(r) Li_s(e^{2πi r/q})      (χ primitive)
//!   Li_s(e^{2πi r/q}) = Σ_{d|q} (q/d)^{-s} (1/φ(d)) Σ_{χ mod d} G_r(χ̄) L(s,χ)
//!
//! where G_r(χ) = Σ_n χ(n) e^{2πi rn/modulus}. The last relation runs over
//! the divisors of q because the polylogarithm sums over *all* n ≥ 1 while
//! the characters mod q only see the n coprime to q; each divisor d accounts
//! for the n with gcd(n, q) = q/d.

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::numerics::{pow_real_base, KahanSum};
use crate::zeta_single::hurwitz::{hurwitz_any_shift, hurwitz_any_shift_deflated};
use crate::zeta_single::lerch::root_of_unity;
use crate::{Evaluation, C64};

/// Generators (with their orders) of the unit group (ℤ/qℤ)* for each
/// supported modulus. Products of generator powers enumerate every unit, so
/// characters are defined by their values on this list alone.
const UNIT_GROUP_GENERATORS: &[(u32, &[(u32, u32)])] = &[
    (1, &[]),
    (2, &[]),
    (3, &[(2, 2)]),
    (4, &[(3, 2)]),
    (5, &[(2, 4)]),
    (6, &[(5, 2)]),
    (7, &[(3, 6)]),
    (8, &[(7, 2), (3, 2)]),
    (9, &[(2, 6)]),
    (10, &[(3, 4)]),
    (11, &[(2, 10)]),
    (12, &[(5, 2), (7, 2)]),
];

pub const MAX_MODULUS: u32 = 12;

/// A Dirichlet character mod q ≤ 12, stored as its full value table.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletCharacter {
    modulus: u32,
    /// Position in the deterministic `all_characters` enumeration (mixed
    /// radix over the generator orders; 0 is the principal character).
    index: u32,
    conductor: u32,
    /// values[n % q] = χ(n); zero off the unit group.
    values: Vec<C64>,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Smallest modulus f | q through which χ factors.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_principal(&self) -> bool {
        self.index == 0
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    /// True when every value is real (a quadratic or principal character).
    pub fn is_real(&self) -> bool {
        self.values.iter().all(|v| v.im.abs() < 1e-14)
    }

    /// χ(-1): +1 for even characters, -1 for odd.
    pub fn parity(&self) -> i32 {
        let v = self.eval(self.modulus as u64 - 1 + 2 * self.modulus as u64);
        if v.re > 0.0 {
            1
        } else {
            -1
        }
    }

    pub fn eval(&self, n: u64) -> C64 {
        self.values[(n % self.modulus as u64) as usize]
    }

    /// Twisted Gauss sum G_r(χ) = Σ_{n=1}^{q} χ(n) e^{2πi r n / q}.
    pub fn gauss_sum_shifted(&self, r: i64) -> C64 {
        let q = self.modulus;
        let mut acc = C64::new(0.0, 0.0);
        for n in 1..=q {
            let v = self.values[(n % q) as usize];
            if v.norm_sqr() > 0.0 {
                acc += v * root_of_unity(r * n as i64, q);
            }
        }
        acc
    }

    /// Classical Gauss sum G(χ) = G₁(χ).
    pub fn gauss_sum(&self) -> C64 {
        self.gauss_sum_shifted(1)
    }
}

fn generators_for(q: u32) -> Result<&'static [(u32, u32)]> {
    UNIT_GROUP_GENERATORS
        .iter()
        .find(|(m, _)| *m == q)
        .map(|(_, gens)| *gens)
        .ok_or_else(|| {
            Error::Domain(format!(
                "modulus {q} outside the supported character table (1..={MAX_MODULUS})"
            ))
        })
}

fn divisors(q: u32) -> Vec<u32> {
    (1..=q).filter(|d| q % d == 0).collect()
}

/// Euler totient, as the unit-group order from the generator table.
fn totient(q: u32) -> Result<u32> {
    Ok(generators_for(q)?.iter().map(|&(_, ord)| ord).product::<u32>().max(1))
}

/// Every character mod q in a fixed deterministic order; index 0 is
/// principal. Exponent vectors over the generators run in mixed radix with
/// the first generator most significant.
pub fn all_characters(q: u32) -> Result<Vec<DirichletCharacter>> {
    let gens = generators_for(q)?;
    let phi = totient(q)?;

    // Discrete logarithm table: unit n → exponent vector over the generators.
    let mut dlog: Vec<Option<Vec<u32>>> = vec![None; q as usize];
    let mut exps = vec![0u32; gens.len()];
    loop {
        let mut n: u64 = 1;
        for (i, &(g, _)) in gens.iter().enumerate() {
            for _ in 0..exps[i] {
                n = n * g as u64 % q as u64;
            }
        }
        dlog[n as usize % q as usize] = Some(exps.clone());
        // Mixed-radix increment (last generator fastest).
        let mut i = gens.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            exps[i] += 1;
            if exps[i] < gens[i].1 {
                break;
            }
            exps[i] = 0;
        }
        if exps.iter().all(|&e| e == 0) {
            break;
        }
    }
    if q == 1 {
        dlog[0] = Some(vec![]);
    }

    let mut chars = Vec::with_capacity(phi as usize);
    for index in 0..phi {
        // Decompose the character index in the same mixed radix.
        let mut rem = index;
        let mut cvec = vec![0u32; gens.len()];
        for i in (0..gens.len()).rev() {
            cvec[i] = rem % gens[i].1;
            rem /= gens[i].1;
        }
        let values: Vec<C64> = (0..q as usize)
            .map(|n| match &dlog[n] {
                None => C64::new(0.0, 0.0),
                Some(k) => {
                    // χ(n) = exp(2πi Σ c_i k_i / e_i)
                    let angle: f64 = cvec
                        .iter()
                        .zip(k)
                        .zip(gens)
                        .map(|((&c, &ki), &(_, e))| (c * ki % e) as f64 / e as f64)
                        .sum();
                    let theta = 2.0 * std::f64::consts::PI * angle;
                    C64::new(theta.cos(), theta.sin())
                }
            })
            .collect();
        chars.push(DirichletCharacter { modulus: q, index, conductor: 0, values });
    }

    // Conductors: smallest divisor f with χ(n) = 1 whenever n ≡ 1 (mod f)
    // and gcd(n, q) = 1.
    for chi in &mut chars {
        'divisor: for &f in &divisors(q) {
            for n in 1..=q.max(1) {
                let v = chi.values[(n % q) as usize];
                if v.norm_sqr() > 0.0 && n % f == 1 % f && (v - C64::new(1.0, 0.0)).norm() > 1e-12
                {
                    continue 'divisor;
                }
            }
            chi.conductor = f;
            break;
        }
        debug_assert!(chi.conductor > 0);
    }
    Ok(chars)
}

/// Direct Dirichlet series Σ χ(n) n^{-s}. Principal characters need
/// Re s > 1; non-principal ones converge for Re s > 0 with an Abel tail
/// bound using the modulus as the partial-sum bound.
pub fn l_series_direct(s: C64, chi: &DirichletCharacter, cfg: &EvalConfig) -> Result<Evaluation> {
    let sigma = s.re;
    let q = chi.modulus as f64;
    let needed = if chi.is_principal() {
        if sigma <= 1.0 {
            return Err(Error::Domain(format!(
                "principal-character series requires Re s > 1, got {sigma}"
            )));
        }
        (cfg.tol * (sigma - 1.0)).powf(1.0 / (1.0 - sigma))
    } else {
        if sigma <= 0.0 {
            return Err(Error::Domain(format!(
                "non-principal series requires Re s > 0, got {sigma}"
            )));
        }
        (cfg.tol / (2.0 * q * (1.0 + s.norm() / sigma))).powf(-1.0 / sigma)
    };
    if !needed.is_finite() || needed >= cfg.max_terms as f64 {
        return Err(Error::NonConvergence(format!(
            "direct L-series needs ≥ {needed:.2e} terms; use the shifted-zeta route"
        )));
    }
    let last = needed.ceil().max(1.0) as usize;
    let mut acc = KahanSum::new();
    for n in 1..=last {
        let v = chi.eval(n as u64);
        if v.norm_sqr() > 0.0 {
            acc.add(v * pow_real_base(n as f64, -s));
        }
    }
    let tail = if chi.is_principal() {
        (last as f64).powf(1.0 - sigma) / (sigma - 1.0)
    } else {
        2.0 * q * (1.0 + s.norm() / sigma) * (last as f64).powf(-sigma)
    };
    let value = acc.value();
    Ok(Evaluation { value, err_estimate: tail + 4e-16 * value.norm(), work: last })
}

/// L(s,χ) = q^{-s} Σ_{r=1}^{q} χ(r) ζ(s, r/q), analytically continued by the
/// Euler-Maclaurin zetas. For non-principal χ the coefficients sum to zero,
/// so the pole-deflated zeta makes s = 1 a regular point, as it must be.
pub fn l_from_hurwitz(s: C64, chi: &DirichletCharacter, cfg: &EvalConfig) -> Result<Evaluation> {
    let q = chi.modulus;
    let deflate = !chi.is_principal();
    let mut acc = KahanSum::new();
    let mut err = 0.0;
    let mut work = 0;
    for r in 1..=q {
        let coeff = chi.eval(r as u64);
        if coeff.norm_sqr() == 0.0 {
            continue;
        }
        let a = r as f64 / q as f64;
        let zeta = if deflate {
            hurwitz_any_shift_deflated(s, a, cfg)?
        } else {
            hurwitz_any_shift(s, a, 0, cfg)?
        };
        acc.add(coeff * zeta.value);
        err += zeta.err_estimate;
        work += zeta.work;
    }
    let scale = pow_real_base(q as f64, -s);
    let value = scale * acc.value();
    Ok(Evaluation {
        value,
        err_estimate: err * scale.norm() + 4e-16 * value.norm(),
        work,
    })
}

/// ζ(s, r/q) = (q^s / φ(q)) Σ_{χ mod q} χ̄(r) L(s,χ), for gcd(r, q) = 1.
pub fn hurwitz_from_l(s: C64, r: u32, q: u32, cfg: &EvalConfig) -> Result<Evaluation> {
    let chars = all_characters(q)?;
    if r == 0 || r > q {
        return Err(Error::Domain(format!("residue r = {r} outside 1..={q}")));
    }
    if chars[0].eval(r as u64).norm_sqr() == 0.0 {
        return Err(Error::Domain(format!(
            "character inversion needs gcd(r, q) = 1, got r = {r}, q = {q}"
        )));
    }
    let phi = chars.len() as f64;
    let mut acc = KahanSum::new();
    let mut err = 0.0;
    let mut work = 0;
    for chi in &chars {
        let l = l_from_hurwitz(s, chi, cfg)?;
        acc.add(chi.eval(r as u64).conj() * l.value);
        err += l.err_estimate;
        work += l.work;
    }
    let scale = pow_real_base(q as f64, s) / phi;
    let value = scale * acc.value();
    Ok(Evaluation {
        value,
        err_estimate: err * scale.norm() + 4e-16 * value.norm(),
        work,
    })
}

/// ζ(s, r/q) = q^{s-1} Σ_{n=1}^{q} e^{-2πi rn/q} Li_s(e^{2πi n/q}), the
/// finite Fourier inversion of the polylogarithm decomposition.
pub fn hurwitz_from_polylog(s: C64, r: u32, q: u32, cfg: &EvalConfig) -> Result<Evaluation> {
    if q == 0 || r == 0 || r > q {
        return Err(Error::Domain(format!("residue r = {r} outside 1..={q}")));
    }
    let mut acc = KahanSum::new();
    let mut err = 0.0;
    let mut work = 0;
    for n in 1..=q {
        let li = crate::zeta_single::lerch::polylog_from_hurwitz(s, n as i64, q, cfg)?;
        acc.add(root_of_unity(-((r * n) as i64), q) * li.value);
        err += li.err_estimate;
        work += li.work;
    }
    let scale = pow_real_base(q as f64, s - 1.0);
    let value = scale * acc.value();
    Ok(Evaluation {
        value,
        err_estimate: err * scale.norm() + 4e-16 * value.norm(),
        work,
    })
}

/// L(s,χ) = (1/G(χ̄)) Σ_{r=1}^{q} χ̄(r) Li_s(e^{2πi r/q}), valid for
/// primitive χ (otherwise the twisted Gauss sums fail to separate).
pub fn l_from_polylog(s: C64, chi: &DirichletCharacter, cfg: &EvalConfig) -> Result<Evaluation> {
    if !chi.is_primitive() {
        return Err(Error::Domain(format!(
            "polylogarithm route requires a primitive character; χ mod {} has conductor {}",
            chi.modulus(),
            chi.conductor()
        )));
    }
    let q = chi.modulus;
    // G(χ̄) for the conjugate character.
    let mut gauss = C64::new(0.0, 0.0);
    for n in 1..=q {
        let v = chi.eval(n as u64);
        if v.norm_sqr() > 0.0 {
            gauss += v.conj() * root_of_unity(n as i64, q);
        }
    }
    if gauss.norm() < 1e-12 {
        return Err(Error::Domain("vanishing Gauss sum; character not primitive".into()));
    }
    let mut acc = KahanSum::new();
    let mut err = 0.0;
    let mut work = 0;
    for r in 1..=q {
        let coeff = chi.eval(r as u64).conj();
        if coeff.norm_sqr() == 0.0 {
            continue;
        }
        let li = crate::zeta_single::lerch::polylog_from_hurwitz(s, r as i64, q, cfg)?;
        acc.add(coeff * li.value);
        err += li.err_estimate;
        work += li.work;
    }
    let value = acc.value() / gauss;
    Ok(Evaluation {
        value,
        err_estimate: err / gauss.norm() + 4e-16 * value.norm(),
        work,
    })
}

/// Li_s(e^{2πi r/q}) from L-functions over every divisor modulus:
///
///   Li_s(e^{2πi r/q}) = Σ_{d|q} (q/d)^{-s} (1/φ(d)) Σ_{χ mod d} G_r(χ̄) L(s,χ).
///
/// Characters mod q only reach n coprime to q; the terms with gcd(n, q) =
/// q/d belong to modulus d after pulling the common factor out of n^{-s}.
pub fn polylog_from_l(s: C64, r: u32, q: u32, cfg: &EvalConfig) -> Result<Evaluation> {
    if q == 0 || r == 0 || r > q {
        return Err(Error::Domain(format!("residue r = {r} outside 1..={q}")));
    }
    let mut total = C64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut work = 0;
    for d in divisors(q) {
        let chars = all_characters(d)?;
        let phi = chars.len() as f64;
        let mut inner = KahanSum::new();
        for chi in &chars {
            let l = l_from_hurwitz(s, chi, cfg)?;
            // G_r(χ̄) at modulus d.
            let mut gauss = C64::new(0.0, 0.0);
            for n in 1..=d {
                let v = chi.eval(n as u64);
                if v.norm_sqr() > 0.0 {
                    gauss += v.conj() * root_of_unity(r as i64 * n as i64, d);
                }
            }
            inner.add(gauss * l.value);
            err += l.err_estimate;
            work += l.work;
        }
        total += pow_real_base(q as f64 / d as f64, -s) / phi * inner.value();
    }
    Ok(Evaluation { value: total, err_estimate: err + 4e-16 * total.norm(), work })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta_single::hurwitz::hurwitz_zeta;
    use crate::zeta_single::lerch::{polylog, polylog_from_hurwitz};

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    const CATALAN: f64 = 0.9159655941772190;

    fn nonprincipal_mod4() -> DirichletCharacter {
        all_characters(4).unwrap().into_iter().find(|c| !c.is_principal()).unwrap()
    }

    #[test]
    fn character_tables_are_groups() {
        for q in 1..=MAX_MODULUS {
            let chars = all_characters(q).unwrap();
            let phi = totient(q).unwrap() as usize;
            assert_eq!(chars.len(), phi, "φ({q})");
            for chi in &chars {
                // Multiplicativity on a full residue sweep.
                for m in 1..=q as u64 {
                    for n in 1..=q as u64 {
                        let lhs = chi.eval(m * n);
                        let rhs = chi.eval(m) * chi.eval(n);
                        assert!((lhs - rhs).norm() < 1e-12, "q={q} χ_{}", chi.index());
                    }
                }
            }
            // Orthogonality: Σ_n χ(n) χ̄'(n) = φ(q) δ_{χχ'}.
            for a in &chars {
                for b in &chars {
                    let dot: C64 =
                        (1..=q as u64).map(|n| a.eval(n) * b.eval(n).conj()).sum();
                    let expected = if a.index() == b.index() { phi as f64 } else { 0.0 };
                    assert!(
                        (dot - re(expected)).norm() < 1e-10,
                        "q={q}: <χ_{}, χ_{}> = {dot}",
                        a.index(),
                        b.index()
                    );
                }
            }
        }
    }

    #[test]
    fn conductor_classification() {
        let q12: Vec<u32> = all_characters(12).unwrap().iter().map(|c| c.conductor()).collect();
        let mut sorted = q12.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 3, 4, 12]);
        // Primitive count mod 8: principal (cond 1), one lifted from 4, two primitive.
        let q8 = all_characters(8).unwrap();
        assert_eq!(q8.iter().filter(|c| c.is_primitive()).count(), 2);
        assert_eq!(q8.iter().filter(|c| c.conductor() == 4).count(), 1);
        // Every character mod a prime except the principal one is primitive.
        for q in [3u32, 5, 7, 11] {
            let chars = all_characters(q).unwrap();
            assert!(chars.iter().skip(1).all(|c| c.is_primitive()));
            assert_eq!(chars[0].conductor(), 1);
        }
    }

    #[test]
    fn parity_and_reality() {
        let chi4 = nonprincipal_mod4();
        assert!(chi4.is_real());
        assert_eq!(chi4.parity(), -1);
        let q5 = all_characters(5).unwrap();
        assert_eq!(q5.iter().filter(|c| c.is_real()).count(), 2);
        // Gauss sum modulus: |G(χ)| = √q for primitive χ.
        for q in [3u32, 4, 5, 7, 8, 11] {
            for chi in all_characters(q).unwrap().iter().filter(|c| c.is_primitive()) {
                assert!(
                    (chi.gauss_sum().norm() - (q as f64).sqrt()).abs() < 1e-10,
                    "q={q} χ_{}",
                    chi.index()
                );
            }
        }
    }

    #[test]
    fn classical_l_values() {
        // L(2, χ₄) = Catalan's constant.
        let chi4 = nonprincipal_mod4();
        let l2 = l_from_hurwitz(re(2.0), &chi4, &cfg()).unwrap();
        assert!((l2.value.re - CATALAN).abs() < 1e-12, "{}", l2.value.re);
        // L(1, χ₄) = π/4 — finite at s = 1 thanks to pole deflation.
        let l1 = l_from_hurwitz(re(1.0), &chi4, &cfg()).unwrap();
        assert!((l1.value.re - std::f64::consts::FRAC_PI_4).abs() < 1e-12, "{}", l1.value.re);
        // L(1, χ₃) = π/(3√3).
        let chi3 = all_characters(3).unwrap().into_iter().nth(1).unwrap();
        let l13 = l_from_hurwitz(re(1.0), &chi3, &cfg()).unwrap();
        assert!((l13.value.re - 0.6045997880780726).abs() < 1e-12, "{}", l13.value.re);
        // Principal character mod 6 at s = 2: ζ(2)(1 - 2^{-2})(1 - 3^{-2}).
        let chi0 = all_characters(6).unwrap().into_iter().next().unwrap();
        let l6 = l_from_hurwitz(re(2.0), &chi0, &cfg()).unwrap();
        assert!((l6.value.re - 1.0966227112321509).abs() < 1e-12, "{}", l6.value.re);
        // Principal character keeps the pole.
        assert!(matches!(
            l_from_hurwitz(re(1.0), &chi0, &cfg()),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn direct_series_agrees_with_the_hurwitz_route() {
        let s = C64::new(3.0, 0.7);
        for q in [5u32, 7, 12] {
            for chi in all_characters(q).unwrap().iter() {
                let direct = l_series_direct(s, chi, &cfg()).unwrap();
                let routed = l_from_hurwitz(s, chi, &cfg()).unwrap();
                let diff = (direct.value - routed.value).norm();
                assert!(
                    diff <= 2e-9,
                    "q={q} χ_{}: direct {} vs routed {} (Δ={diff:.2e})",
                    chi.index(),
                    direct.value,
                    routed.value
                );
            }
        }
    }

    #[test]
    fn character_inversion_recovers_hurwitz() {
        for &(r, q) in &[(1u32, 3u32), (2, 5), (3, 4), (5, 12), (7, 8)] {
            for &sig in &[0.5, 2.0] {
                let s = re(sig);
                let via_l = hurwitz_from_l(s, r, q, &cfg()).unwrap();
                let direct = hurwitz_zeta(s, r as f64 / q as f64, &cfg()).unwrap();
                let diff = (via_l.value - direct.value).norm();
                assert!(
                    diff <= 1e-10 * direct.value.norm().max(1.0),
                    "ζ({sig}, {r}/{q}): {} vs {} (Δ={diff:.2e})",
                    via_l.value,
                    direct.value
                );
            }
        }
        assert!(matches!(hurwitz_from_l(re(2.0), 2, 4, &cfg()), Err(Error::Domain(_))));
    }

    #[test]
    fn fourier_inversion_recovers_hurwitz_from_polylogs() {
        // Known closed form first: ζ(s, 1/2) = (2^s - 1) ζ(s).
        for &sig in &[0.5, 2.0, -1.5] {
            let s = re(sig);
            let lhs = hurwitz_from_polylog(s, 1, 2, &cfg()).unwrap();
            let direct = hurwitz_zeta(s, 0.5, &cfg()).unwrap();
            assert!(
                (lhs.value - direct.value).norm() <= 1e-9 * direct.value.norm().max(1.0),
                "σ={sig}: {} vs {}",
                lhs.value,
                direct.value
            );
        }
        for &(r, q) in &[(1u32, 3u32), (2, 5), (3, 4)] {
            for &sig in &[0.5, 2.0] {
                let s = re(sig);
                let lhs = hurwitz_from_polylog(s, r, q, &cfg()).unwrap();
                let direct = hurwitz_zeta(s, r as f64 / q as f64, &cfg()).unwrap();
                let diff = (lhs.value - direct.value).norm();
                assert!(
                    diff <= 1e-9 * direct.value.norm().max(1.0),
                    "ζ({sig}, {r}/{q}): Δ={diff:.2e}"
                );
            }
        }
    }

    #[test]
    fn primitive_characters_reach_l_through_polylogs() {
        let chi4 = nonprincipal_mod4();
        let viali = l_from_polylog(re(2.0), &chi4, &cfg()).unwrap();
        assert!((viali.value.re - CATALAN).abs() < 1e-10, "{}", viali.value.re);
        // Strip point: cross-check against the Hurwitz route.
        for q in [5u32, 7] {
            for chi in all_characters(q).unwrap().iter().filter(|c| c.is_primitive()) {
                let s = re(0.5);
                let a = l_from_polylog(s, chi, &cfg()).unwrap();
                let b = l_from_hurwitz(s, chi, &cfg()).unwrap();
                assert!(
                    (a.value - b.value).norm() <= 1e-9 * b.value.norm().max(1e-3),
                    "q={q} χ_{}: {} vs {}",
                    chi.index(),
                    a.value,
                    b.value
                );
            }
        }
        // Imprimitive input is refused.
        let chi0 = all_characters(4).unwrap().into_iter().next().unwrap();
        assert!(matches!(l_from_polylog(re(2.0), &chi0, &cfg()), Err(Error::Domain(_))));
    }

    #[test]
    fn divisor_decomposition_recovers_boundary_polylogs() {
        // The q = 2 case that breaks the naive single-modulus inversion:
        // Li_s(-1) = (2^{1-s} - 1) ζ(s).
        for &sig in &[0.5, 2.0, 3.5] {
            let s = re(sig);
            let via_l = polylog_from_l(s, 1, 2, &cfg()).unwrap();
            let zeta = hurwitz_zeta(s, 1.0, &cfg()).unwrap();
            let expected = (pow_real_base(2.0, C64::new(1.0, 0.0) - s) - 1.0) * zeta.value;
            assert!(
                (via_l.value - expected).norm() <= 1e-10 * expected.norm().max(1.0),
                "σ={sig}: {} vs {}",
                via_l.value,
                expected
            );
        }
        // Composite moduli, including non-coprime r, against the bridge.
        for &(r, q) in &[(1u32, 4u32), (2, 4), (1, 6), (5, 12), (4, 12)] {
            for &sig in &[0.75, 2.0] {
                let s = re(sig);
                let via_l = polylog_from_l(s, r, q, &cfg()).unwrap();
                let bridge = polylog_from_hurwitz(s, r as i64, q, &cfg()).unwrap();
                let diff = (via_l.value - bridge.value).norm();
                assert!(
                    diff <= 1e-9 * bridge.value.norm().max(1e-3),
                    "r/q = {r}/{q}, σ={sig}: {} vs {} (Δ={diff:.2e})",
                    via_l.value,
                    bridge.value
                );
            }
        }
    }

    #[test]
    fn boundary_polylog_through_characters_matches_direct_series() {
        // Fully independent check: direct boundary summation vs the
        // character decomposition, away from special points.
        let s = re(2.5);
        let direct = polylog(s, root_of_unity(1, 3), &cfg()).unwrap();
        let via_l = polylog_from_l(s, 1, 3, &cfg()).unwrap();
        assert!((direct.value - via_l.value).norm() < 1e-8);
    }

    #[test]
    fn unsupported_modulus_is_refused() {
        assert!(matches!(all_characters(13), Err(Error::Domain(_))));
        assert!(matches!(all_characters(0), Err(Error::Domain(_))));
    }
}
