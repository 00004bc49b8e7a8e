//! Fractions over the monoid rings: the localizations `V = Q{v}_p`,
//! `S⁻¹Q(u){v}` and the pullback `R = Q + S⁻¹p`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monoid::MonoidElem;
use super::BaseField;
use crate::error::{Error, Result};
use crate::exact::{QuadScalar, RatFun1};
use crate::scalar::{Domain, Linearize, Rational, Scalar};

/// `num/den` with `den` in `S` (least exponent 0, constant coefficient 1).
///
/// The numerator may carry negative exponents, so these fractions cover the
/// whole fraction field; membership in the ring is a predicate
/// ([`Domain::contains`]).
#[derive(Clone, Debug)]
pub struct FracElem<K> {
    num: MonoidElem<K>,
    den: MonoidElem<K>,
}

/// Elements of `V = Q{v}_p` and its fraction field.
pub type VElem = FracElem<Rational>;

/// Elements of `R = Q + S⁻¹p` and its fraction field.
pub type RElem = FracElem<RatFun1>;

/// An element of `R` together with its rational constant part.
#[derive(Clone, PartialEq, Debug)]
pub struct RMembership {
    pub element: RElem,
    pub const_part: Rational,
}

impl<K: BaseField> FracElem<K> {
    /// Any nonzero denominator; a power of `v` is moved to the numerator.
    pub fn new(num: MonoidElem<K>, den: MonoidElem<K>) -> Result<Self> {
        let gamma = den.min_support()?;
        let lowest = den.lowest_coefficient().unwrap().inv().expect("nonzero coefficient");
        let shift = -gamma;
        Ok(FracElem { num: num.shift(&shift).scale(&lowest), den: den.shift(&shift).scale(&lowest) })
    }

    /// A fraction of the localization proper: the denominator must already
    /// have a nonzero constant coefficient.
    pub fn localized(num: MonoidElem<K>, den: MonoidElem<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInput("denominator"));
        }
        if !den.is_monoid() || den.const_coefficient().is_zero() {
            return Err(Error::NotMember {
                ring: "S",
                reason: format!("denominator {den} has zero constant coefficient"),
            });
        }
        Self::new(num, den)
    }

    pub fn from_monoid(num: MonoidElem<K>) -> Self {
        FracElem { num, den: MonoidElem::one() }
    }

    pub fn constant(c: K) -> Self {
        Self::from_monoid(MonoidElem::constant(c))
    }

    pub fn monomial(c: K, alpha: QuadScalar) -> Self {
        Self::from_monoid(MonoidElem::monomial(c, alpha))
    }

    pub fn v_pow(alpha: QuadScalar) -> Self {
        Self::from_monoid(MonoidElem::v_pow(alpha))
    }

    pub fn num(&self) -> &MonoidElem<K> {
        &self.num
    }

    pub fn den(&self) -> &MonoidElem<K> {
        &self.den
    }

    /// The `v`-adic value: least exponent of the numerator.
    pub fn valuation(&self) -> Result<QuadScalar> {
        self.num.min_support()
    }

    /// The constant-coefficient homomorphism; `None` when the element has a
    /// pole (negative value).
    pub fn const_coefficient(&self) -> Option<K> {
        if self.num.is_monoid() {
            Some(self.num.const_coefficient())
        } else {
            None
        }
    }

    /// Division inside the localization; rejects divisors whose numerator
    /// has zero constant coefficient.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroInput("divisor"));
        }
        Self::localized(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn map_base<L: BaseField>(&self, f: impl Fn(&K) -> L) -> FracElem<L> {
        FracElem { num: self.num.map_coeffs(&f), den: self.den.map_coeffs(&f) }
    }
}

impl<K: BaseField> PartialEq for FracElem<K> {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<K: BaseField> Zero for FracElem<K> {
    fn zero() -> Self {
        Self::from_monoid(MonoidElem::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<K: BaseField> One for FracElem<K> {
    fn one() -> Self {
        Self::from_monoid(MonoidElem::one())
    }
}

impl<K: BaseField> Add for &FracElem<K> {
    type Output = FracElem<K>;
    fn add(self, rhs: &FracElem<K>) -> FracElem<K> {
        if self.den == rhs.den {
            return FracElem { num: &self.num + &rhs.num, den: self.den.clone() };
        }
        // With b = g·b', d = g·d' the sum a·d' + c·b' can only share factors
        // with g, so coprime denominators need no further cancellation.
        let Some((b1, d1)) = K::cancel(&self.den, &rhs.den) else {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return FracElem::zero();
            }
            return FracElem { num, den: &self.den * &rhs.den };
        };
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return FracElem::zero();
        }
        let (num, d2) = K::cancel(&num, &rhs.den).unwrap_or_else(|| (num, rhs.den.clone()));
        FracElem::new(num, &b1 * &d2).expect("nonzero denominator")
    }
}

impl<K: BaseField> Sub for &FracElem<K> {
    type Output = FracElem<K>;
    fn sub(self, rhs: &FracElem<K>) -> FracElem<K> {
        self + &(-rhs.clone())
    }
}

impl<K: BaseField> Mul for &FracElem<K> {
    type Output = FracElem<K>;
    fn mul(self, rhs: &FracElem<K>) -> FracElem<K> {
        if self.is_zero() || rhs.is_zero() {
            return FracElem::zero();
        }
        // Cancel matching denominators against numerators when possible.
        if self.den == rhs.num {
            return FracElem { num: self.num.clone(), den: rhs.den.clone() };
        }
        if rhs.den == self.num {
            return FracElem { num: rhs.num.clone(), den: self.den.clone() };
        }
        // For reduced factors only the cross pairs can share a factor.
        let (n1, d2) = K::cancel(&self.num, &rhs.den).unwrap_or_else(|| (self.num.clone(), rhs.den.clone()));
        let (n2, d1) = K::cancel(&rhs.num, &self.den).unwrap_or_else(|| (rhs.num.clone(), self.den.clone()));
        FracElem::new(&n1 * &n2, &d1 * &d2).expect("nonzero denominator")
    }
}

impl<K: BaseField> Add for FracElem<K> {
    type Output = FracElem<K>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<K: BaseField> Sub for FracElem<K> {
    type Output = FracElem<K>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<K: BaseField> Mul for FracElem<K> {
    type Output = FracElem<K>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<K: BaseField> Div for FracElem<K> {
    type Output = FracElem<K>;
    /// Division in the fraction field; panics on a zero divisor.
    fn div(self, rhs: Self) -> Self {
        &self * &rhs.inv().expect("division by zero")
    }
}

impl<K: BaseField> Neg for FracElem<K> {
    type Output = FracElem<K>;
    fn neg(self) -> Self {
        FracElem { num: -self.num, den: self.den }
    }
}

impl<K: BaseField> Scalar for FracElem<K> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        FracElem::new(self.den.clone(), self.num.clone()).ok()
    }

    fn split(&self) -> Option<(Self, Self)> {
        Some((Self::from_monoid(self.num.clone()), Self::from_monoid(self.den.clone())))
    }

    // Powers of a reduced fraction stay reduced.
    fn pow_u(&self, exp: u64) -> Self {
        FracElem { num: self.num.pow(exp), den: self.den.pow(exp) }
    }
}

impl<K: BaseField> FracElem<K> {
    fn in_ring(&self) -> bool {
        self.is_zero()
            || (self.num.is_monoid() && self.num.const_coefficient().as_rational().is_some())
    }

    fn ring_unit(&self) -> bool {
        !self.is_zero()
            && self.num.min_support().is_ok_and(|g| g.is_zero())
            && self.in_ring()
    }
}

impl Domain for VElem {
    const NAME: &'static str = "V";

    fn contains(&self) -> bool {
        self.in_ring()
    }

    fn is_unit(&self) -> bool {
        self.ring_unit()
    }
}

impl Domain for RElem {
    const NAME: &'static str = "R";

    fn contains(&self) -> bool {
        self.in_ring()
    }

    fn is_unit(&self) -> bool {
        self.ring_unit()
    }
}

impl<K: BaseField> Linearize for FracElem<K> {
    type Form = MonoidElem<K>;

    /// Numerators over the product of the distinct denominators.
    fn common_forms(values: &[Self]) -> Vec<Self::Form> {
        let mut dens: Vec<MonoidElem<K>> = Vec::new();
        let mut index: HashMap<MonoidElem<K>, usize> = HashMap::new();
        let slots: Vec<usize> = values
            .iter()
            .map(|x| {
                *index.entry(x.den.clone()).or_insert_with(|| {
                    dens.push(x.den.clone());
                    dens.len() - 1
                })
            })
            .collect();
        let cofactors: Vec<MonoidElem<K>> = (0..dens.len())
            .map(|i| {
                dens.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .fold(MonoidElem::one(), |acc, (_, d)| &acc * d)
            })
            .collect();
        values.iter().zip(slots).map(|(x, s)| &x.num * &cofactors[s]).collect()
    }
}

impl<K: BaseField> From<K> for FracElem<K> {
    fn from(value: K) -> Self {
        FracElem::constant(value)
    }
}

fn parenthesize(text: String) -> String {
    if text.trim_start_matches('-').contains(['+', '-', '*', '/', '^']) {
        format!("({text})")
    } else {
        text
    }
}

impl<K: BaseField> fmt::Display for FracElem<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/({})", parenthesize(self.num.to_string()), self.den)
        }
    }
}

/// The element with its constant part, when the constant coefficient is a
/// rational number and there is no pole.
pub fn r_membership(a: &RElem) -> Option<RMembership> {
    let c = a.const_coefficient()?;
    let const_part = c.as_rational()?;
    Some(RMembership { element: a.clone(), const_part })
}

/// The inverse in `R` of an element with nonzero constant part:
/// `a = c₀ + g/s` gives `a⁻¹ = c₀⁻¹ − (c₀⁻¹ g)/(c₀ s + g)`.
pub fn r_invert(a: &RMembership) -> Option<RMembership> {
    if a.const_part.is_zero() {
        return None;
    }
    let c0 = RatFun1::from_rational(a.const_part.clone());
    let c0_inv = c0.inv().unwrap();
    let elem = &a.element;
    let g = &elem.num - &elem.den.scale(&c0);
    let tail = FracElem::localized(g.scale(&c0_inv), elem.num.clone()).ok()?;
    let inverse = &FracElem::constant(c0_inv) - &tail;
    r_membership(&inverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn q(r: (i64, i64), i: (i64, i64)) -> QuadScalar {
        QuadScalar::new(rat(r.0, r.1), rat(i.0, i.1))
    }

    fn v(alpha: QuadScalar) -> VElem {
        VElem::v_pow(alpha)
    }

    fn vr(alpha: QuadScalar) -> RElem {
        RElem::v_pow(alpha)
    }

    fn u() -> RElem {
        RElem::constant(RatFun1::u())
    }

    fn c(n: i64) -> VElem {
        VElem::constant(rat_int(n))
    }

    #[test]
    fn const_coefficient_examples() {
        let a = &c(3) + &v(q((1, 2), (0, 1)));
        assert_eq!(a.const_coefficient(), Some(rat_int(3)));
        let b = &c(2) + &v(QuadScalar::one());
        let d = &c(1) + &v(QuadScalar::one());
        let frac = b.checked_div(&d).unwrap();
        assert_eq!(frac.const_coefficient(), Some(rat_int(2)));
        assert_eq!(v(QuadScalar::sqrt2()).const_coefficient(), Some(rat_int(0)));
    }

    #[test]
    fn division_examples() {
        let a = &c(3) + &v(QuadScalar::one());
        assert_eq!(&a * &a.inv().unwrap(), VElem::one());
        let x = v(QuadScalar::one());
        let y = &c(1) + &v(QuadScalar::one());
        let z = x.checked_div(&y).unwrap();
        assert_eq!(z.num(), x.num());
        assert_eq!(z.den(), y.num());
        assert!(x.checked_div(&v(q((1, 2), (0, 1)))).is_err());
        // In the fraction field the same quotient is v^(1/2).
        assert_eq!(x / v(q((1, 2), (0, 1))), v(q((1, 2), (0, 1))));
    }

    #[test]
    fn membership_and_units() {
        assert!(v(QuadScalar::one()).contains());
        assert!(!v(QuadScalar::one()).is_unit());
        assert!((&c(2) + &v(QuadScalar::one())).is_unit());
        assert!(!v(-QuadScalar::one()).contains());
        assert!(!u().contains());
        assert!((&u() * &vr(QuadScalar::one())).contains());
        assert!(RElem::zero().contains());
    }

    #[test]
    fn r_membership_examples() {
        let a = &RElem::constant(RatFun1::from_rational(rat(1, 2)))
            + &RElem::monomial(RatFun1::u(), q((1, 3), (0, 1)));
        assert_eq!(r_membership(&a).unwrap().const_part, rat(1, 2));
        assert!(r_membership(&(&u() + &vr(QuadScalar::one()))).is_none());
        assert_eq!(r_membership(&RElem::zero()).unwrap().const_part, rat_int(0));
    }

    #[test]
    fn r_invert_examples() {
        let a = &RElem::constant(RatFun1::from_rational(rat_int(2))) + &vr(QuadScalar::one());
        let m = r_membership(&a).unwrap();
        let inv = r_invert(&m).unwrap();
        assert_eq!(&a * &inv.element, RElem::one());
        assert_eq!(inv.const_part, rat(1, 2));
        assert!(r_invert(&r_membership(&vr(q((1, 2), (0, 1)))).unwrap()).is_none());
        let one = r_invert(&r_membership(&RElem::one()).unwrap()).unwrap();
        assert_eq!(one.element, RElem::one());
        // A denominator and a u-dependent tail: 1 + u v^(√2) / (1 - v).
        let s = &MonoidElem::one() - &MonoidElem::v_pow(QuadScalar::one());
        let tail = FracElem::localized(MonoidElem::monomial(RatFun1::u(), QuadScalar::sqrt2()), s).unwrap();
        let b = &RElem::one() + &tail;
        let inv = r_invert(&r_membership(&b).unwrap()).unwrap();
        assert_eq!(&b * &inv.element, RElem::one());
    }

    #[test]
    fn common_forms_detect_cancellation() {
        let s = &MonoidElem::one() + &MonoidElem::v_pow(QuadScalar::one());
        let a = VElem::localized(MonoidElem::v_pow(QuadScalar::sqrt2()), s.clone()).unwrap();
        let b = VElem::v_pow(QuadScalar::sqrt2());
        let forms = VElem::common_forms(&[a.clone(), -a, b]);
        assert!((forms[0].clone() + forms[1].clone()).is_zero());
        assert!(!(forms[0].clone() + forms[2].clone()).is_zero());
    }

    #[test]
    fn display_shapes() {
        let s = &MonoidElem::one() + &MonoidElem::v_pow(QuadScalar::one());
        let a = VElem::localized(MonoidElem::v_pow(QuadScalar::one()), s).unwrap();
        assert_eq!(a.to_string(), "v/(1+v)");
        assert_eq!(v(q((3, 2), (0, 1))).to_string(), "v^(3/2)");
    }
}
