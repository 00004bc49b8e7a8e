//! Homogeneous relations with a unit coefficient, from preorder witnesses
//! under the total-degree row.

use num_bigint::BigInt;
use num_traits::Signed;

use super::{verify_witness, Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::exact::QuadScalar;
use crate::laurent::{ExpVec, LaurentPoly};
use crate::order::OrderMatrix;
use crate::scalar::Domain;

/// A homogeneous polynomial of degree `degree` and a monomial `t0` of it
/// whose coefficient is a unit.
#[derive(Clone, Debug)]
pub struct Homogenized<T> {
    pub poly: LaurentPoly<T>,
    pub degree: BigInt,
    pub t0: ExpVec,
}

/// Whether `x` is in the maximal ideal of a local ring.
fn in_maximal_ideal<T: Domain>(x: &T) -> bool {
    x.contains() && !x.is_unit()
}

/// Splits `e` into a part of total degree `d0`, filled from `X₁` onwards,
/// and the remainder.
fn split(e: &ExpVec, d0: &BigInt) -> (ExpVec, ExpVec) {
    let mut left = d0.clone();
    let head: Vec<BigInt> = e
        .0
        .iter()
        .map(|x| {
            let take = x.min(&left).clone();
            left -= &take;
            take
        })
        .collect();
    let head = ExpVec(head);
    let rest = e - &head;
    (head, rest)
}

/// Moves every term of degree `d > d₀` down to degree `d₀` by evaluating a
/// degree `d − d₀` factor at the elements.
pub fn homogenize_witness<T: Domain>(w: &Witness<T>) -> Result<Homogenized<T>> {
    let n = w.elements.len();
    let ones = OrderMatrix::new(vec![vec![QuadScalar::from_int(1); n]])?;
    let as_preorder = w.reinterpret(ones, WitnessKind::PreorderWitness);
    if let Some(reason) = verify_witness(&as_preorder).reason {
        return Err(Error::Precondition(format!("not a witness under the total-degree row: {reason}")));
    }
    if let Some(x) = w.elements.iter().find(|x| !in_maximal_ideal(*x)) {
        return Err(Error::Precondition(format!("{x} is not in the maximal ideal of {}", T::NAME)));
    }
    let d0 = w.poly.terms().map(|(e, _)| e.total_degree()).min().expect("nonzero witness");
    let mut terms = Vec::with_capacity(w.poly.len());
    for (e, c) in w.poly.terms() {
        let (head, rest) = split(e, &d0);
        let factor = LaurentPoly::monomial(T::one(), rest).evaluate(&w.elements)?;
        terms.push((head, c.clone() * factor));
    }
    let poly = LaurentPoly::from_terms(n, terms)?;
    let t0 = poly
        .terms()
        .find(|(_, c)| c.is_unit())
        .map(|(e, _)| e.clone())
        .ok_or_else(|| Error::Unverified(format!("{poly} has no unit coefficient")))?;
    let vanishes = poly.evaluate(&w.elements)?.is_zero();
    let homogeneous = poly.terms().all(|(e, _)| e.total_degree() == d0 && !e.0.iter().any(Signed::is_negative));
    if !vanishes || !homogeneous {
        return Err(Error::Unverified(format!("{poly} is not a homogeneous relation")));
    }
    Ok(Homogenized { poly, degree: d0, t0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::rings::random::{random_v_maximal, seeded};
    use crate::rings::VElem;
    use crate::witness::{vdim_witness, ValuationOracle};

    fn v(alpha: i64) -> VElem {
        VElem::v_pow(QuadScalar::from_int(alpha))
    }

    fn witness(poly: &[(&[i64], VElem)], elements: Vec<VElem>) -> Witness<VElem> {
        let poly = LaurentPoly::from_terms(2, poly.iter().map(|(e, c)| (ExpVec::from_i64(e), c.clone()))).unwrap();
        Witness { poly, order: OrderMatrix::from_ints(&[&[1, 1]]).unwrap(), elements, kind: WitnessKind::PreorderWitness }
    }

    #[test]
    fn splits_high_degree_term() {
        let w = witness(&[(&[1, 0], VElem::one()), (&[0, 3], -VElem::one())], vec![v(3), v(1)]);
        let h = homogenize_witness(&w).unwrap();
        assert_eq!(h.poly.to_string(), "X1-v^2*X2");
        assert_eq!(h.t0, ExpVec::from_i64(&[1, 0]));
        assert_eq!(h.degree, BigInt::from(1));
    }

    #[test]
    fn homogeneous_input_unchanged() {
        let w = witness(&[(&[1, 0], VElem::one()), (&[0, 1], -v(1))], vec![v(2), v(1)]);
        let h = homogenize_witness(&w).unwrap();
        assert_eq!(h.poly, w.poly);
    }

    #[test]
    fn rejects_units() {
        let w = witness(&[(&[1, 0], VElem::one()), (&[0, 0], -VElem::one())], vec![VElem::one(), v(1)]);
        assert!(homogenize_witness(&w).is_err());
    }

    #[test]
    fn split_fills_from_first_variable() {
        let (head, rest) = split(&ExpVec::from_i64(&[1, 3]), &BigInt::from(2));
        assert_eq!(head, ExpVec::from_i64(&[1, 1]));
        assert_eq!(rest, ExpVec::from_i64(&[0, 2]));
    }

    #[test]
    fn random_maximal_pairs() {
        let m = OrderMatrix::from_ints(&[&[1, 1]]).unwrap();
        let mut rng = seeded(23);
        for _ in 0..30 {
            let a = vec![random_v_maximal(&mut rng), random_v_maximal(&mut rng)];
            let w = vdim_witness(&m, &a, &ValuationOracle).unwrap().witness;
            let h = homogenize_witness(&w).unwrap();
            assert!(h.poly.coeff(&h.t0).unwrap().is_unit());
        }
    }
}
