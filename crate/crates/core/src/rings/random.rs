//! Seeded generators of small random ring elements.
//!
//! Exponents of `v` in `V` and `R` come from the pool
//! `{1/2, 1, 3/2, 2, √2, 2−√2}`; coefficients are small rationals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FracElem, MonoidElem, RElem, VElem, WElem};
use crate::exact::{BiPoly, QuadScalar, RatFun1, RatFun2, UniPoly};
use crate::laurent::{ExpVec, LaurentPoly};
use crate::scalar::{rat, Rational};

/// The generator used by every suite.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The fixed exponent pool.
pub fn exponent_pool() -> Vec<QuadScalar> {
    let half = |n: i64| QuadScalar::from_rational(rat(n, 2));
    vec![
        half(1),
        half(2),
        half(3),
        half(4),
        QuadScalar::sqrt2(),
        QuadScalar::from_int(2) - QuadScalar::sqrt2(),
    ]
}

pub fn random_exponent<G: Rng>(rng: &mut G) -> QuadScalar {
    exponent_pool().choose(rng).unwrap().clone()
}

/// A nonzero rational `p/q` with `|p| ≤ 3`, `1 ≤ q ≤ 3`.
pub fn random_rational<G: Rng>(rng: &mut G) -> Rational {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-3..=3);
    }
    rat(p, rng.gen_range(1..=3))
}

/// A nonzero element of Q(u): a rational, `c·u`, or a ratio of linear
/// polynomials.
pub fn random_ratfun1<G: Rng>(rng: &mut G) -> RatFun1 {
    let linear = |rng: &mut G| UniPoly::new(vec![random_rational(rng), random_rational(rng)]);
    match rng.gen_range(0..4) {
        0 => RatFun1::from_rational(random_rational(rng)),
        1 => RatFun1::from_poly(UniPoly::monomial(random_rational(rng), 1)),
        2 => RatFun1::from_poly(linear(rng)),
        _ => RatFun1::new(linear(rng), linear(rng)),
    }
}

/// A denominator `1 + c·v^β` of the localization, or 1.
fn random_s<K: super::BaseField, G: Rng>(rng: &mut G, coeff: impl Fn(&mut G) -> K) -> MonoidElem<K> {
    if rng.gen_bool(0.5) {
        return MonoidElem::one();
    }
    let beta = random_exponent(rng);
    &MonoidElem::one() + &MonoidElem::monomial(coeff(rng), beta)
}

/// A nonzero element `v^γ·(c + tail)/s` of `V`; `unit` forces `γ = 0`,
/// otherwise `γ` is drawn from the pool (maximal ideal).
pub fn random_v_with<G: Rng>(rng: &mut G, unit: bool) -> VElem {
    let gamma = if unit { QuadScalar::from_int(0) } else { random_exponent(rng) };
    let mut num = MonoidElem::monomial(random_rational(rng), gamma.clone());
    for _ in 0..rng.gen_range(0..=2) {
        let extra = &gamma + &random_exponent(rng);
        num = &num + &MonoidElem::monomial(random_rational(rng), extra);
    }
    let den = random_s(rng, random_rational);
    FracElem::localized(num, den).expect("denominator in S")
}

/// A nonzero element of `V`, a unit with probability 1/3.
pub fn random_v<G: Rng>(rng: &mut G) -> VElem {
    let unit = rng.gen_ratio(1, 3);
    random_v_with(rng, unit)
}

/// A nonzero element of the maximal ideal of `V`.
pub fn random_v_maximal<G: Rng>(rng: &mut G) -> VElem {
    random_v_with(rng, false)
}

/// A nonzero element `c₀ + (f/s)·v^α` of `R`; `unit` chooses `c₀ ≠ 0`.
pub fn random_r_with<G: Rng>(rng: &mut G, unit: bool) -> RElem {
    let c0 = if unit { random_rational(rng) } else { Rational::from_integer(0.into()) };
    let alpha = random_exponent(rng);
    let mut tail = MonoidElem::monomial(random_ratfun1(rng), alpha.clone());
    if rng.gen_bool(0.3) {
        let extra = &alpha + &random_exponent(rng);
        tail = &tail + &MonoidElem::monomial(random_ratfun1(rng), extra);
    }
    let den = random_s(rng, random_ratfun1);
    let tail = FracElem::localized(tail, den).expect("denominator in S");
    &RElem::constant(RatFun1::from_rational(c0)) + &tail
}

/// A nonzero element of `R`, invertible with probability 1/2.
pub fn random_r<G: Rng>(rng: &mut G) -> RElem {
    let unit = rng.gen_bool(0.5);
    random_r_with(rng, unit)
}

/// A unit of `W`: `(p + v·q)/(r + v·s)` with `p(0), r(0) ≠ 0`.
fn random_w_unit<G: Rng>(rng: &mut G) -> RatFun2 {
    let part = |rng: &mut G| {
        let constant = UniPoly::new(vec![random_rational(rng), rat(rng.gen_range(-2..=2), 1)]);
        let v_coeff = UniPoly::new(vec![rat(rng.gen_range(-2..=2), 1), rat(rng.gen_range(-2..=2), 1)]);
        BiPoly::new(vec![constant, v_coeff])
    };
    let num = part(rng);
    let den = part(rng);
    RatFun2::new(num, den)
}

/// A nonzero element `v^i u^j · unit` of `W` with `(i, j) ≥_lex (0, 0)`.
pub fn random_w<G: Rng>(rng: &mut G) -> WElem {
    let i = rng.gen_range(0..=2);
    let j = if i == 0 { rng.gen_range(0..=3) } else { rng.gen_range(-3..=3) };
    let value = &RatFun2::monomial(i, j) * &random_w_unit(rng);
    WElem::new(value)
}

/// A nonzero Laurent polynomial over `V` in `n` variables with at most
/// `max_terms` terms and exponents in `-3..=3`.
pub fn random_laurent_v<G: Rng>(rng: &mut G, n: usize, max_terms: usize) -> LaurentPoly<VElem> {
    loop {
        let terms = (0..rng.gen_range(1..=max_terms)).map(|_| {
            let e: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            (ExpVec::from_i64(&e), random_v(rng))
        });
        let terms: Vec<_> = terms.collect();
        let p = LaurentPoly::from_terms(n, terms).expect("consistent arity");
        if !p.is_zero() {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Domain;
    use num_traits::Zero;

    #[test]
    fn generators_respect_their_rings() {
        let mut rng = seeded(11);
        for _ in 0..50 {
            let a = random_v(&mut rng);
            assert!(a.contains() && !a.is_zero());
            assert!(!random_v_maximal(&mut rng).is_unit());
            let r = random_r(&mut rng);
            assert!(r.contains());
            let w = random_w(&mut rng);
            assert!(w.contains());
        }
    }

    #[test]
    fn generators_are_reproducible() {
        let a: Vec<String> = (0..5).map(|_| random_r(&mut seeded(3)).to_string()).collect();
        let b: Vec<String> = (0..5).map(|_| random_r(&mut seeded(3)).to_string()).collect();
        assert_eq!(a, b);
    }
}
