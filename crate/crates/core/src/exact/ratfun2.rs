//! The rational function field Q(u, v).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::bipoly::BiPoly;
use super::ratfun1::RatFun1;
use crate::error::{Error, Result};
use crate::scalar::{Linearize, Rational, Scalar};

/// A reduced fraction of bivariate polynomials; the denominator's leading
/// rational coefficient (highest `v` power, then highest `u` power) is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun2 {
    num: BiPoly,
    den: BiPoly,
}

impl RatFun2 {
    /// Builds and normalizes `num/den`; panics if `den` is zero.
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(u,v)");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        Self::scaled(num, den)
    }

    fn scaled(num: BiPoly, den: BiPoly) -> Self {
        let inv = den.leading_rational().expect("nonzero denominator").recip();
        RatFun2 { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(num: BiPoly) -> Self {
        RatFun2 { num, den: BiPoly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn u() -> Self {
        Self::from_poly(BiPoly::u())
    }

    pub fn v() -> Self {
        Self::from_poly(BiPoly::v())
    }

    /// `v^i u^j` for integers of any sign.
    pub fn monomial(i: i64, j: i64) -> Self {
        let num = BiPoly::monomial(Rational::one(), j.max(0) as usize, i.max(0) as usize);
        let den = BiPoly::monomial(Rational::one(), (-j).max(0) as usize, (-i).max(0) as usize);
        RatFun2 { num, den }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }
}

/// `v`-multiplicity of the numerator minus that of the denominator.
pub fn v_adic_valuation(a: &RatFun2) -> Result<i64> {
    let n = a.num.v_multiplicity().ok_or(Error::ZeroInput("v-adic valuation"))?;
    let d = a.den.v_multiplicity().expect("nonzero denominator");
    Ok(n as i64 - d as i64)
}

/// Substitutes `v = 0`; the denominator must not be divisible by `v`.
pub fn eval_at_v0(a: &RatFun2) -> Result<RatFun1> {
    let den = a.den.at_v0();
    if den.is_zero() {
        return Err(Error::Undefined(format!("denominator of {a} vanishes at v = 0")));
    }
    Ok(RatFun1::new(a.num.at_v0(), den))
}

impl Zero for RatFun2 {
    fn zero() -> Self {
        RatFun2 { num: BiPoly::zero(), den: BiPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFun2 {
    fn one() -> Self {
        RatFun2 { num: BiPoly::one(), den: BiPoly::one() }
    }
}

impl<'a> Add<&'a RatFun2> for &'a RatFun2 {
    type Output = RatFun2;
    fn add(self, rhs: &RatFun2) -> RatFun2 {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun2::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFun2::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Add for RatFun2 {
    type Output = RatFun2;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'a> Sub<&'a RatFun2> for &'a RatFun2 {
    type Output = RatFun2;
    fn sub(self, rhs: &RatFun2) -> RatFun2 {
        self + &(-rhs.clone())
    }
}

impl Sub for RatFun2 {
    type Output = RatFun2;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<'a> Mul<&'a RatFun2> for &'a RatFun2 {
    type Output = RatFun2;
    fn mul(self, rhs: &RatFun2) -> RatFun2 {
        if self.is_zero() || rhs.is_zero() {
            return RatFun2::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFun2::scaled(&n1 * &n2, &d1 * &d2)
    }
}

impl Mul for RatFun2 {
    type Output = RatFun2;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Div for RatFun2 {
    type Output = RatFun2;
    /// Panics on division by zero.
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in Q(u,v)")
    }
}

impl Neg for RatFun2 {
    type Output = RatFun2;
    fn neg(self) -> Self {
        RatFun2 { num: -self.num, den: self.den }
    }
}

impl Scalar for RatFun2 {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFun2::scaled(self.den.clone(), self.num.clone()))
        }
    }

    fn pow_u(&self, exp: u64) -> Self {
        let exp = u32::try_from(exp).expect("exponent too large");
        RatFun2 { num: self.num.pow(exp), den: self.den.pow(exp) }
    }
}

impl Linearize for RatFun2 {
    type Form = BiPoly;

    /// Numerators over the product of the distinct denominators.
    fn common_forms(values: &[Self]) -> Vec<BiPoly> {
        let mut dens: Vec<BiPoly> = Vec::new();
        let mut index = HashMap::new();
        for v in values {
            index.entry(v.den.clone()).or_insert_with(|| {
                dens.push(v.den.clone());
                dens.len() - 1
            });
        }
        let total = dens.iter().fold(BiPoly::one(), |acc, d| &acc * d);
        values
            .iter()
            .map(|v| {
                let cofactor = total.exact_div(&v.den).expect("denominator divides product");
                &v.num * &cofactor
            })
            .collect()
    }
}

impl From<Rational> for RatFun2 {
    fn from(value: Rational) -> Self {
        RatFun2::from_rational(value)
    }
}

impl fmt::Display for RatFun2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = self.num.to_string();
        let num = if num.trim_start_matches('-').contains(['+', '-', '*', '/']) {
            format!("({num})")
        } else {
            num
        };
        write!(f, "{num}/{}", crate::scalar::wrap_compound(&self.den.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn u() -> RatFun2 {
        RatFun2::u()
    }
    fn v() -> RatFun2 {
        RatFun2::v()
    }

    #[test]
    fn valuation_examples() {
        let a = (v() * v() * u()) / (u() + v());
        assert_eq!(v_adic_valuation(&a).unwrap(), 2);
        assert_eq!(v_adic_valuation(&u()).unwrap(), 0);
        assert_eq!(v_adic_valuation(&v().inv().unwrap()).unwrap(), -1);
        assert!(v_adic_valuation(&RatFun2::zero()).is_err());
    }

    #[test]
    fn eval_examples() {
        let a = (u() + v()) / u();
        assert_eq!(eval_at_v0(&a).unwrap(), RatFun1::one());
        assert_eq!(eval_at_v0(&u()).unwrap(), RatFun1::u());
        let b = v() / (RatFun2::one() + v());
        assert_eq!(eval_at_v0(&b).unwrap(), RatFun1::zero());
        assert!(eval_at_v0(&v().inv().unwrap()).is_err());
    }

    #[test]
    fn normalization_is_canonical() {
        let a = (u() * v() + v()) / (u() * v() * rat_int(2).into_ratfun2() + v());
        let b = (u() + RatFun2::one()) / (u() * rat_int(2).into_ratfun2() + RatFun2::one());
        assert_eq!(a, b);
        assert_eq!(RatFun2::monomial(2, -3), v() * v() / (u() * u() * u()));
    }

    trait IntoR2 {
        fn into_ratfun2(self) -> RatFun2;
    }
    impl IntoR2 for Rational {
        fn into_ratfun2(self) -> RatFun2 {
            RatFun2::from_rational(self)
        }
    }

    #[test]
    fn common_forms_share_denominator() {
        let a = RatFun2::one() / (u() + v());
        let b = -(RatFun2::one() / (u() + v()));
        let c = u() / (RatFun2::one() + v());
        let forms = RatFun2::common_forms(&[a, b, c]);
        assert!((forms[0].clone() + forms[1].clone()).is_zero());
        assert!(!forms[2].is_zero());
    }
}
