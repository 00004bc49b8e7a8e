//! Products in `Q{v}` on integer coordinates.
//!
//! Exponents of both factors lie in `(1/N)(Z + Z√2)`, so each becomes a
//! pair of integers; coefficients are scaled to integers. Terms are summed
//! in a hash map and sorted once by the exact value of `i + j√2`.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::MonoidElem;
use crate::exact::QuadScalar;
use crate::scalar::Rational;

/// Below this many term products the plain loop is faster.
const MIN_WORK: usize = 64;

/// Sign of `i + j√2` for integers.
fn sign(i: i128, j: i128) -> Ordering {
    let si = i.cmp(&0);
    let sj = j.cmp(&0);
    if sj == Ordering::Equal || si == sj {
        return if si == Ordering::Equal { sj } else { si };
    }
    if si == Ordering::Equal {
        return sj;
    }
    // Opposite signs: compare i² with 2j².
    if i * i > 2 * j * j {
        si
    } else {
        sj
    }
}

fn lcm_all<'a>(values: impl Iterator<Item = &'a BigInt>) -> BigInt {
    values.fold(BigInt::one(), |acc, d| acc.lcm(d))
}

type Coords = Vec<((i64, i64), BigInt)>;

fn coords(x: &MonoidElem<Rational>, scale: &BigInt, coeff_scale: &BigInt) -> Option<Coords> {
    x.terms()
        .map(|(a, c)| {
            let i = (&a.rat * Rational::from_integer(scale.clone())).to_integer().to_i64()?;
            let j = (&a.irr * Rational::from_integer(scale.clone())).to_integer().to_i64()?;
            let c = (c * Rational::from_integer(coeff_scale.clone())).to_integer();
            Some(((i, j), c))
        })
        .collect()
}

/// `a·b`, or `None` when the plain product is cheaper or the coordinates
/// do not fit.
pub(crate) fn multiply_rational(a: &MonoidElem<Rational>, b: &MonoidElem<Rational>) -> Option<MonoidElem<Rational>> {
    if a.len() * b.len() < MIN_WORK {
        return None;
    }
    let terms = || a.terms().chain(b.terms());
    let scale = lcm_all(terms().flat_map(|(e, _)| [e.rat.denom(), e.irr.denom()]));
    let ca = lcm_all(a.terms().map(|(_, c)| c.denom()));
    let cb = lcm_all(b.terms().map(|(_, c)| c.denom()));
    let xa = coords(a, &scale, &ca)?;
    let xb = coords(b, &scale, &cb)?;
    let mut acc: HashMap<(i64, i64), BigInt> = HashMap::with_capacity(xa.len() * xb.len());
    for ((i, j), x) in &xa {
        for ((k, l), y) in &xb {
            let key = (i.checked_add(*k)?, j.checked_add(*l)?);
            *acc.entry(key).or_insert_with(BigInt::zero) += x * y;
        }
    }
    let mut out: Vec<((i64, i64), BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_unstable_by(|(p, _), (q, _)| sign(p.0 as i128 - q.0 as i128, p.1 as i128 - q.1 as i128));
    let denom = ca * cb;
    let n = Rational::from_integer(scale);
    Some(MonoidElem::from_sorted(out.into_iter().map(|((i, j), c)| {
        let e = QuadScalar::new(Rational::from_integer(i.into()) / &n, Rational::from_integer(j.into()) / &n);
        (e, Rational::new(c, denom.clone()))
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn integer_sign() {
        assert_eq!(sign(3, -2), Ordering::Greater);
        assert_eq!(sign(2, -2), Ordering::Less);
        assert_eq!(sign(-3, 2), Ordering::Less);
        assert_eq!(sign(0, 0), Ordering::Equal);
        assert_eq!(sign(0, -1), Ordering::Less);
    }

    #[test]
    fn agrees_with_plain_product() {
        let half = QuadScalar::new(rat(1, 2), Rational::zero());
        let s2 = QuadScalar::sqrt2();
        let x = MonoidElem::from_terms((0..9).map(|k| {
            let e = &(&half * &QuadScalar::from_int(k)) + &(&s2 * &QuadScalar::from_int(k % 3));
            (e, rat(k + 1, 3))
        }));
        let y = MonoidElem::from_terms((0..12).map(|k| {
            let e = &(&s2 * &QuadScalar::from_int(-k)) + &QuadScalar::from_int(2 * k);
            (e, rat(1 - k, 2))
        }));
        let fast = multiply_rational(&x, &y).unwrap();
        let mut plain = MonoidElem::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                plain = &plain + &MonoidElem::monomial(c * d, a + b);
            }
        }
        assert_eq!(fast, plain);
    }
}
