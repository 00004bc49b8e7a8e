//! Witnesses through overrings: the pipeline behind the valuative
//! dimension bound and its converse.
//!
//! [`vdim_witness`] builds a witness for `a₁..a_n` under a rational preorder
//! from lex witnesses for elements of the fraction field, supplied by a
//! [`LexOracle`]. [`overring_lex_witness`] goes the other way: lex witnesses
//! for elements of an overring from order witnesses in the ring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{basic, checked, transport, Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::laurent::{ExpVec, LaurentPoly};
use crate::order::{integerize, inverse_scaled, refine_to_order, OrderMatrix, ScaledInverse};
use crate::rings::VElem;
use crate::scalar::{Domain, Scalar};

/// A polynomial whose coefficients are given as polynomials `C(X)` over the
/// ring, to be read at the elements the witness is for.
#[derive(Clone, Debug)]
pub struct LiftedPoly<T> {
    pub nvars: usize,
    pub terms: Vec<(ExpVec, LaurentPoly<T>)>,
}

impl<T: Domain> LiftedPoly<T> {
    /// Lifts a polynomial whose coefficients already lie in the ring.
    pub fn constant_coefficients(p: &LaurentPoly<T>) -> Self {
        let n = p.nvars();
        LiftedPoly {
            nvars: n,
            terms: p.terms().map(|(e, c)| (e.clone(), LaurentPoly::constant(n, c.clone()))).collect(),
        }
    }

    /// `Σ_e C_e(X)·X^e`, checking that each `C_e` is a polynomial over the
    /// ring.
    pub fn fold(&self) -> Result<LaurentPoly<T>> {
        let mut total = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if c.nvars() != self.nvars || e.len() != self.nvars {
                return Err(Error::DimensionMismatch { expected: self.nvars, found: c.nvars() });
            }
            if !c.is_polynomial() || !c.coefficients_in_ring() {
                return Err(Error::Oracle(format!("lifted coefficient {c} is not in {}[X]", T::NAME)));
            }
            total = &total + &c.shift(e);
        }
        Ok(total)
    }

    /// The polynomial with each `C_e` evaluated at `points`.
    pub fn evaluate_coefficients(&self, points: &[T]) -> Result<LaurentPoly<T>> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((e.clone(), c.evaluate(points)?)))
            .collect::<Result<Vec<_>>>()?;
        LaurentPoly::from_terms(self.nvars, terms)
    }
}

/// Lex order witnesses, with lifted coefficients, for any `n` elements of
/// the fraction field.
pub trait LexOracle<T> {
    fn lex_witness(&self, b: &[T]) -> Result<LiftedPoly<T>>;
}

/// Order witnesses in the ring itself for a given total order.
pub trait OrderOracle<T> {
    fn order_witness(&self, m: &OrderMatrix, elements: &[T]) -> Result<Witness<T>>;
}

/// The lex oracle for the fraction field of `V`: a zero entry gives `X_i`,
/// an entry of value `≤ 0` gives `1 − b_i⁻¹X_i`, and two entries of positive
/// value give the value-pair witness on `X₁, X₂`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ValuationOracle;

impl LexOracle<VElem> for ValuationOracle {
    fn lex_witness(&self, b: &[VElem]) -> Result<LiftedPoly<VElem>> {
        let n = b.len();
        for (i, x) in b.iter().enumerate() {
            if x.is_zero() {
                return Ok(LiftedPoly::constant_coefficients(&LaurentPoly::var(n, i)));
            }
        }
        for (i, x) in b.iter().enumerate() {
            if !x.valuation()?.is_positive() {
                let inv = x.inv().ok_or(Error::ZeroInput("oracle element"))?;
                let poly = LaurentPoly::from_terms(n, [(ExpVec::zeros(n), VElem::one()), (ExpVec::unit(n, i), -inv)])?;
                return Ok(LiftedPoly::constant_coefficients(&poly));
            }
        }
        if n < 2 {
            return Err(Error::Oracle(format!("a single element of positive value {} is lex-independent", b[0])));
        }
        let pair = basic::witness_value_pair(&b[0], &b[1], true)?;
        let poly = LaurentPoly::from_terms(
            n,
            pair.poly.terms().map(|(e, c)| {
                let mut full = ExpVec::zeros(n);
                full.0[..2].clone_from_slice(&e.0);
                (full, c.clone())
            }),
        )?;
        Ok(LiftedPoly::constant_coefficients(&poly))
    }
}

/// Order witnesses obtained by running [`vdim_witness`] with a lex oracle.
#[derive(Clone, Copy, Debug, Default)]
pub struct VdimOracle<O>(pub O);

impl<T: Domain, O: LexOracle<T>> OrderOracle<T> for VdimOracle<O> {
    fn order_witness(&self, m: &OrderMatrix, elements: &[T]) -> Result<Witness<T>> {
        Ok(vdim_witness(m, elements, &self.0)?.witness)
    }
}

/// Result of [`vdim_witness`] with the intermediate data.
#[derive(Clone, Debug)]
pub struct VdimOutcome<T> {
    /// Witness for the inputs under `refined`.
    pub witness: Witness<T>,
    pub refined: OrderMatrix,
    /// `L = k·M⁻¹` for the integer form of `refined`; absent on the zero shortcut.
    pub scaled: Option<ScaledInverse>,
    /// The elements `b_i = ∏_j a_j^{L_{j,i}}` given to the oracle.
    pub overring: Vec<T>,
}

/// A witness for `a` under the refinement of the rational preorder `m`
/// (so a preorder witness under `m`).
pub fn vdim_witness<T: Domain>(m: &OrderMatrix, a: &[T], oracle: &impl LexOracle<T>) -> Result<VdimOutcome<T>> {
    let n = a.len();
    if m.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.cols() });
    }
    let refined = refine_to_order(m)?;
    if let Some(i) = a.iter().position(Zero::is_zero) {
        let witness = checked(Witness {
            poly: LaurentPoly::var(n, i),
            order: refined.clone(),
            elements: a.to_vec(),
            kind: WitnessKind::OrderWitness,
        })?;
        return Ok(VdimOutcome { witness, refined, scaled: None, overring: Vec::new() });
    }
    let scaled = inverse_scaled(&integerize(&refined)?)?;
    let b = transport::power_products(a, &scaled.l)?;
    let lifted = oracle.lex_witness(&b)?;
    let p = lifted.fold()?;
    let q = p.apply_monomial_map(&scaled.l)?.clear_denominators();
    let witness = checked(Witness {
        poly: q,
        order: refined.clone(),
        elements: a.to_vec(),
        kind: WitnessKind::OrderWitness,
    })?;
    Ok(VdimOutcome { witness, refined, scaled: Some(scaled), overring: b })
}

/// A formal quotient `num/den` of ring elements.
#[derive(Clone, Debug)]
pub struct OverringElement<T> {
    pub num: T,
    pub den: T,
}

impl<T: Domain> OverringElement<T> {
    pub fn new(num: T, den: T) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInput("denominator"));
        }
        for (x, name) in [(&num, "numerator"), (&den, "denominator")] {
            if !x.contains() {
                return Err(Error::NotMember { ring: T::NAME, reason: format!("{name} {x}") });
            }
        }
        Ok(OverringElement { num, den })
    }

    /// The quotient in the ambient field.
    pub fn value(&self) -> T {
        self.num.clone() * self.den.inv().expect("nonzero denominator")
    }
}

/// The product of the distinct denominators: `a·b_i` lies in the ring for
/// every `i`.
pub fn common_denominator<T: Domain>(b: &[OverringElement<T>]) -> T {
    let mut distinct: Vec<&T> = Vec::new();
    for x in b {
        if !distinct.contains(&&x.den) {
            distinct.push(&x.den);
        }
    }
    distinct.into_iter().fold(T::one(), |acc, d| acc * d.clone())
}

/// A lex witness for the quotients `b` from an order witness in the ring
/// under the graded, square, nonnegative integer matrix `m`.
pub fn overring_lex_witness<T: Domain>(
    m: &OrderMatrix,
    oracle: &impl OrderOracle<T>,
    b: &[OverringElement<T>],
) -> Result<Witness<T>> {
    let n = b.len();
    if m.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.cols() });
    }
    let int = transport::transport_matrix(m)?;
    let top = &int.rows()[0];
    if top.iter().any(|x| !x.is_positive()) {
        return Err(Error::Precondition(format!("{m} is not graded")));
    }
    // k·M[0][i] ≥ Σ_j M[j][i] for every column.
    let k = (0..n)
        .map(|i| {
            let sum: BigInt = int.rows().iter().map(|r| &r[i]).sum();
            sum.div_ceil(&top[i])
        })
        .max()
        .unwrap_or_else(BigInt::one);
    let a = common_denominator(b);
    let ak = a.pow_big(&k).ok_or(Error::ZeroInput("common denominator"))?;
    let mut scaled: Vec<T> = b.iter().map(OverringElement::value).collect();
    let values = scaled.clone();
    scaled[0] = ak.clone() * scaled[0].clone();
    let base = transport::power_products(&scaled, &int)?;
    if let Some(x) = base.iter().find(|x| !x.contains()) {
        return Err(Error::Precondition(format!("power product {x} is not in {}", T::NAME)));
    }
    let w = oracle.order_witness(m, &base)?;
    let lex = transport::transport_witness_to_lex(&w.reinterpret(m.clone(), WitnessKind::OrderWitness), &scaled)?;
    let e = lex.poly.leading_monomial(&lex.order)?.0[0].clone();
    let poly = lex.poly.scale_variable(0, &ak, &e)?;
    checked(Witness { poly, order: lex.order, elements: values, kind: WitnessKind::OrderWitness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::exact::QuadScalar;
    use crate::rings::random::{random_v, seeded};
    use crate::scalar::rat;
    use crate::witness::verify_witness;

    fn vq(p: i64, q: i64) -> VElem {
        VElem::v_pow(QuadScalar::from_rational(rat(p, q)))
    }

    #[test]
    fn spec_pipeline_example() {
        let m = OrderMatrix::from_ints(&[&[1, 1], &[1, 0]]).unwrap();
        let a = [vq(1, 1), VElem::v_pow(QuadScalar::sqrt2())];
        let out = vdim_witness(&m, &a, &ValuationOracle).unwrap();
        let s = out.scaled.as_ref().unwrap();
        assert_eq!(s.k, BigInt::one());
        assert_eq!(s.l.to_string(), "0,1;1,-1");
        assert_eq!(out.overring[0], a[1]);
        assert_eq!(out.overring[1], VElem::v_pow(QuadScalar::one() - QuadScalar::sqrt2()));
        assert!(verify_witness(&out.witness).passed);
    }

    #[test]
    fn refinement_path() {
        let m = OrderMatrix::from_ints(&[&[1, 1]]).unwrap();
        let a = [vq(1, 2), vq(3, 2)];
        let out = vdim_witness(&m, &a, &ValuationOracle).unwrap();
        assert_eq!(out.refined, OrderMatrix::from_ints(&[&[1, 1], &[1, 0]]).unwrap());
        let pre = out.witness.reinterpret(m, WitnessKind::PreorderWitness);
        assert!(verify_witness(&pre).passed);
    }

    #[test]
    fn random_pipeline() {
        let mut rng = seeded(3);
        let mats = [
            OrderMatrix::lex(2),
            OrderMatrix::from_ints(&[&[1, 1], &[1, 0]]).unwrap(),
            OrderMatrix::from_ints(&[&[2, 1], &[1, 1]]).unwrap(),
            OrderMatrix::from_ints(&[&[1, 1]]).unwrap(),
        ];
        for m in &mats {
            for _ in 0..15 {
                let a = [random_v(&mut rng), random_v(&mut rng)];
                let out = vdim_witness(m, &a, &ValuationOracle).unwrap();
                assert!(verify_witness(&out.witness).passed);
            }
        }
    }

    #[test]
    fn zero_and_single_element() {
        let out = vdim_witness(&OrderMatrix::lex(2), &[vq(1, 1), VElem::zero()], &ValuationOracle).unwrap();
        assert_eq!(out.witness.poly.to_string(), "X2");
        assert!(vdim_witness(&OrderMatrix::lex(1), &[vq(1, 1)], &ValuationOracle).is_err());
    }

    #[test]
    fn lifted_fold() {
        // P = X2 − b1·X1 lifted with C = X1 for the coefficient b1.
        let n = 2;
        let lifted = LiftedPoly {
            nvars: n,
            terms: vec![
                (ExpVec::from_i64(&[0, 1]), LaurentPoly::constant(n, VElem::one())),
                (ExpVec::from_i64(&[1, 0]), -LaurentPoly::var(n, 0)),
            ],
        };
        assert_eq!(lifted.fold().unwrap().to_string(), "-X1^2+X2");
        let b = [vq(1, 2), vq(1, 1)];
        assert!(lifted.fold().unwrap().evaluate(&b).unwrap().is_zero());
        assert_eq!(lifted.evaluate_coefficients(&b).unwrap().to_string(), "-v^(1/2)*X1+X2");
        let bad = LiftedPoly { nvars: n, terms: vec![(ExpVec::zeros(n), LaurentPoly::constant(n, vq(-1, 1)))] };
        assert!(bad.fold().is_err());
    }

    #[test]
    fn overring_examples() {
        let m = OrderMatrix::from_ints(&[&[1, 1], &[1, 0]]).unwrap();
        let oracle = VdimOracle(ValuationOracle);
        let b = [OverringElement::new(vq(1, 2), vq(1, 1)).unwrap(), OverringElement::new(vq(1, 1), VElem::one()).unwrap()];
        assert_eq!(common_denominator(&b), vq(1, 1));
        let w = overring_lex_witness(&m, &oracle, &b).unwrap();
        assert!(verify_witness(&w).passed);
        assert_eq!(w.elements[0], vq(-1, 2));

        let b = [
            OverringElement::new(VElem::v_pow(QuadScalar::sqrt2()), vq(1, 1)).unwrap(),
            OverringElement::new(vq(1, 2), VElem::one()).unwrap(),
        ];
        assert!(verify_witness(&overring_lex_witness(&m, &oracle, &b).unwrap()).passed);

        let plain = [OverringElement::new(vq(1, 1), VElem::one()).unwrap(), OverringElement::new(vq(2, 1), VElem::one()).unwrap()];
        assert!(verify_witness(&overring_lex_witness(&m, &oracle, &plain).unwrap()).passed);

        let ungraded = OrderMatrix::from_ints(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(overring_lex_witness(&ungraded, &oracle, &b).is_err());
    }

    #[test]
    fn overring_random() {
        let m = OrderMatrix::from_ints(&[&[1, 1], &[1, 0]]).unwrap();
        let oracle = VdimOracle(ValuationOracle);
        let mut rng = seeded(17);
        for _ in 0..20 {
            let den = random_v(&mut rng);
            let b = [
                OverringElement::new(random_v(&mut rng), den.clone()).unwrap(),
                OverringElement::new(random_v(&mut rng), den).unwrap(),
            ];
            let w = overring_lex_witness(&m, &oracle, &b).unwrap();
            assert!(verify_witness(&w).passed);
        }
    }
}
