//! The rational function field Q(u).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::unipoly::UniPoly;
use crate::scalar::{Domain, Linearize, Rational, Scalar};

/// A reduced fraction `num/den` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun1 {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun1 {
    /// Builds and normalizes `num/den`; panics if `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(u)");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.leading().cloned().expect("nonzero denominator");
        let inv = lc.recip();
        RatFun1 { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(num: UniPoly) -> Self {
        RatFun1 { num, den: UniPoly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        Self::from_poly(UniPoly::var())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// `u`-adic valuation; `None` for zero.
    pub fn u_valuation(&self) -> Option<i64> {
        let n = self.num.u_multiplicity()? as i64;
        let d = self.den.u_multiplicity().expect("nonzero denominator") as i64;
        Some(n - d)
    }

    pub fn u_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(UniPoly::monomial(Rational::one(), k as usize))
        } else {
            RatFun1 { num: UniPoly::one(), den: UniPoly::monomial(Rational::one(), (-k) as usize) }
        }
    }

    /// Value at `u = 0`, when the denominator does not vanish there.
    pub fn eval_at_zero(&self) -> Option<Rational> {
        let d = self.den.coeff(0);
        if d.is_zero() {
            None
        } else {
            Some(self.num.coeff(0) / d)
        }
    }
}

/// The value of a constant rational function, or `None`.
pub fn is_rational_constant(a: &RatFun1) -> Option<Rational> {
    // Normalized fractions are constant iff both parts have degree 0.
    if a.num.is_constant() && a.den.is_constant() {
        Some(a.num.coeff(0) / a.den.coeff(0))
    } else {
        None
    }
}

impl Zero for RatFun1 {
    fn zero() -> Self {
        RatFun1 { num: UniPoly::zero(), den: UniPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFun1 {
    fn one() -> Self {
        RatFun1 { num: UniPoly::one(), den: UniPoly::one() }
    }
}

impl<'a> Add<&'a RatFun1> for &'a RatFun1 {
    type Output = RatFun1;
    fn add(self, rhs: &RatFun1) -> RatFun1 {
        if self.den == rhs.den {
            return RatFun1::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFun1::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Add for RatFun1 {
    type Output = RatFun1;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'a> Sub<&'a RatFun1> for &'a RatFun1 {
    type Output = RatFun1;
    fn sub(self, rhs: &RatFun1) -> RatFun1 {
        self + &(-rhs.clone())
    }
}

impl Sub for RatFun1 {
    type Output = RatFun1;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<'a> Mul<&'a RatFun1> for &'a RatFun1 {
    type Output = RatFun1;
    fn mul(self, rhs: &RatFun1) -> RatFun1 {
        if self.is_zero() || rhs.is_zero() {
            return RatFun1::zero();
        }
        // Cross cancellation keeps the intermediate products reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading().unwrap().recip();
        RatFun1 { num: num.scale(&lc), den: den.scale(&lc) }
    }
}

impl Mul for RatFun1 {
    type Output = RatFun1;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Div for RatFun1 {
    type Output = RatFun1;
    /// Panics on division by zero.
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in Q(u)")
    }
}

impl Neg for RatFun1 {
    type Output = RatFun1;
    fn neg(self) -> Self {
        RatFun1 { num: -self.num, den: self.den }
    }
}

impl Scalar for RatFun1 {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFun1::new(self.den.clone(), self.num.clone()))
        }
    }

    fn pow_u(&self, exp: u64) -> Self {
        // Powers of a reduced fraction stay reduced.
        let exp = u32::try_from(exp).expect("exponent too large");
        let num = self.num.pow(exp);
        let den = self.den.pow(exp);
        RatFun1 { num, den }
    }
}

impl Domain for RatFun1 {
    const NAME: &'static str = "Q(u)";

    fn contains(&self) -> bool {
        true
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
}

impl Linearize for RatFun1 {
    type Form = RatFun1;

    fn common_forms(values: &[Self]) -> Vec<Self::Form> {
        values.to_vec()
    }
}

impl From<Rational> for RatFun1 {
    fn from(value: Rational) -> Self {
        RatFun1::from_rational(value)
    }
}

impl fmt::Display for RatFun1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let num = self.num.to_string();
            let num = if num.trim_start_matches('-').contains(['+', '-', '*']) {
                format!("({num})")
            } else {
                num
            };
            write!(f, "{num}/({})", self.den)
        }
    }
}
