//! Witnesses from a single element or a pair of values.

use super::{checked, ValuedRing, Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::laurent::{ExpVec, LaurentPoly};
use crate::order::OrderMatrix;
use crate::scalar::Domain;

/// `X_i` for `a = 0`, `1 − a⁻¹X_i` for a unit `a`, in `n` variables.
pub(crate) fn trivial_poly<T: Domain>(n: usize, i: usize, a: &T) -> Option<LaurentPoly<T>> {
    if a.is_zero() {
        return Some(LaurentPoly::var(n, i));
    }
    if !a.is_unit() {
        return None;
    }
    let inv = a.inv()?;
    let terms = [(ExpVec::zeros(n), T::one()), (ExpVec::unit(n, i), -inv)];
    LaurentPoly::from_terms(n, terms).ok()
}

/// The one-variable witness `X` for 0 or `1 − a⁻¹X` for a unit.
pub fn witness_trivial<T: Domain>(a: &T) -> Option<Witness<T>> {
    let poly = trivial_poly(1, 0, a)?;
    checked(Witness {
        poly,
        order: OrderMatrix::lex(1),
        elements: vec![a.clone()],
        kind: WitnessKind::OrderWitness,
    })
    .ok()
}

/// Lex order on two variables; `x_greater` selects `X > Y`.
fn pair_lex(x_greater: bool) -> OrderMatrix {
    if x_greater {
        OrderMatrix::lex(2)
    } else {
        OrderMatrix::lex_with_priority(&[1, 0])
    }
}

fn require_max_ideal<T: ValuedRing>(a: &T, name: &str) -> Result<()> {
    if a.is_zero() || a.is_unit() || !a.contains() {
        return Err(Error::Precondition(format!(
            "{name} = {a} must be a nonzero nonunit of {}",
            T::NAME
        )));
    }
    Ok(())
}

/// `Y^n − cX` with `c = b^n/a` for `X > Y`, or `X^n − cY` with
/// `c = a^n/b` for `Y > X`; `n` from [`ValuedRing::pair_power`].
pub fn witness_value_pair<T: ValuedRing>(a: &T, b: &T, x_greater: bool) -> Result<Witness<T>> {
    require_max_ideal(a, "a")?;
    require_max_ideal(b, "b")?;
    let alpha = a.value().unwrap();
    let beta = b.value().unwrap();
    // The lex-smaller variable carries the power.
    let (small, big, small_idx, big_idx, n) = if x_greater {
        (b, a, 1, 0, T::pair_power(&alpha, &beta)?)
    } else {
        (a, b, 0, 1, T::pair_power(&beta, &alpha)?)
    };
    let c = small.pow_big(&n).unwrap() * big.inv().unwrap();
    let mut power = ExpVec::zeros(2);
    power.0[small_idx] = n;
    let poly = LaurentPoly::from_terms(2, [(power, T::one()), (ExpVec::unit(2, big_idx), -c)])?;
    checked(Witness {
        poly,
        order: pair_lex(x_greater),
        elements: vec![a.clone(), b.clone()],
        kind: WitnessKind::OrderWitness,
    })
}

/// A lex witness for any pair: trivial on a zero or unit entry, otherwise
/// from the values.
pub fn lex_witness_pair<T: ValuedRing>(a: &T, b: &T, x_greater: bool) -> Result<Witness<T>> {
    for (i, x) in [a, b].into_iter().enumerate() {
        if let Some(poly) = trivial_poly(2, i, x) {
            return checked(Witness {
                poly,
                order: pair_lex(x_greater),
                elements: vec![a.clone(), b.clone()],
                kind: WitnessKind::OrderWitness,
            });
        }
    }
    witness_value_pair(a, b, x_greater)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::exact::{QuadScalar, RatFun1};
    use crate::rings::{RElem, VElem};
    use crate::scalar::{rat, rat_int};
    use crate::witness::verify_witness;

    fn q(r: (i64, i64), i: (i64, i64)) -> QuadScalar {
        QuadScalar::new(rat(r.0, r.1), rat(i.0, i.1))
    }

    #[test]
    fn trivial_examples() {
        let w = witness_trivial(&VElem::zero()).unwrap();
        assert_eq!(w.poly.to_string(), "X1");
        let a = &RElem::constant(RatFun1::from_rational(rat_int(2))) + &RElem::v_pow(QuadScalar::one());
        let w = witness_trivial(&a).unwrap();
        assert!(verify_witness(&w).passed);
        assert!(witness_trivial(&VElem::v_pow(QuadScalar::one())).is_none());
    }

    #[test]
    fn value_pair_examples() {
        let a = RElem::v_pow(q((3, 2), (0, 1)));
        let b = RElem::v_pow(QuadScalar::one());
        let w = witness_value_pair(&a, &b, true).unwrap();
        assert_eq!(w.poly.to_string(), "-v^(1/2)*X1+X2^2");

        let a = VElem::v_pow(QuadScalar::sqrt2());
        let b = VElem::v_pow(QuadScalar::one());
        let w = witness_value_pair(&a, &b, true).unwrap();
        assert_eq!(w.poly.to_string(), "-v^(2-1 s2)*X1+X2^2");

        let v = VElem::v_pow(QuadScalar::one());
        let w = witness_value_pair(&v, &v, true).unwrap();
        assert_eq!(w.poly.to_string(), "-X1+X2");

        let w = witness_value_pair(&a, &b, false).unwrap();
        assert!(verify_witness(&w).passed);
        assert!(witness_value_pair(&VElem::one(), &b, true).is_err());
    }

    #[test]
    fn pair_dispatch() {
        let unit = &VElem::one() + &VElem::v_pow(QuadScalar::one());
        let v = VElem::v_pow(QuadScalar::one());
        for x_greater in [true, false] {
            for (a, b) in [(&unit, &v), (&v, &unit), (&VElem::zero(), &v), (&v, &v)] {
                let w = lex_witness_pair(a, b, x_greater).unwrap();
                assert!(verify_witness(&w).passed, "{w}");
            }
        }
    }
}
