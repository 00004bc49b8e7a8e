//! The constant-coefficient argument against independence witnesses.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, WeightVector};
use crate::rings::{BaseField, FracElem};

/// For a polynomial vanishing at `elements`, checks that the constant
/// coefficient map kills every coefficient of the component of smallest
/// weighted degree. When it does, no coefficient there equals 1.
pub fn phi_refutation_check<K: BaseField>(
    p: &LaurentPoly<FracElem<K>>,
    elements: &[FracElem<K>],
    weights: &WeightVector,
) -> Result<bool> {
    if !p.evaluate(elements)?.is_zero() {
        return Err(Error::Precondition(format!("{p} does not vanish at the elements")));
    }
    let components = p.weighted_components(weights)?;
    let (_, lowest) = components.first().ok_or(Error::ZeroInput("polynomial"))?;
    let killed = lowest.terms().all(|(_, c)| {
        c.const_coefficient()
            .and_then(|k| k.as_rational())
            .is_some_and(|q| q.is_zero())
    });
    Ok(killed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::exact::{QuadScalar, RatFun1};
    use crate::laurent::ExpVec;
    use crate::rings::{RElem, VElem};

    #[test]
    fn v_example() {
        let s2 = QuadScalar::sqrt2();
        let elements = [VElem::v_pow(QuadScalar::one()), VElem::v_pow(s2.clone())];
        let p = LaurentPoly::from_terms(
            2,
            [
                (ExpVec::from_i64(&[1, 0]), VElem::v_pow(s2.clone())),
                (ExpVec::from_i64(&[0, 1]), -VElem::v_pow(QuadScalar::one())),
            ],
        )
        .unwrap();
        let w = WeightVector::new(vec![QuadScalar::one(), s2]).unwrap();
        assert!(phi_refutation_check(&p, &elements, &w).unwrap());
        let shifted = LaurentPoly::from_terms(2, [(ExpVec::from_i64(&[1, 0]), VElem::one())]).unwrap();
        assert!(phi_refutation_check(&shifted, &elements, &w).is_err());
    }

    #[test]
    fn r_trivial_combination() {
        let u = RElem::constant(RatFun1::u());
        let v = RElem::v_pow(QuadScalar::one());
        let elements = [v.clone(), &u * &v];
        // X·Y − u·v² vanishes; the constant term is the lowest component.
        let c = &u * &(&v * &v);
        let p = LaurentPoly::from_terms(2, [(ExpVec::from_i64(&[1, 1]), RElem::one()), (ExpVec::zeros(2), -c)]).unwrap();
        let w = WeightVector::new(vec![QuadScalar::one(), QuadScalar::one()]).unwrap();
        assert!(phi_refutation_check(&p, &elements, &w).unwrap());
    }
}
