//! The ordered field Q(√2).
//!
//! Elements are pairs `rat + irr·√2` with rational components. Since √2 is
//! irrational the pair representation is unique, and the sign of an element
//! can be decided exactly by comparing `rat²` against `2·irr²`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{rational_pq, Rational, Scalar};

/// An exact element `rat + irr·√2` of Q(√2).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QuadScalar {
    pub rat: Rational,
    pub irr: Rational,
}

/// Rounding direction for [`quad_floor_ratio`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rounding {
    Floor,
    Ceil,
}

impl QuadScalar {
    pub fn new(rat: Rational, irr: Rational) -> Self {
        QuadScalar { rat, irr }
    }

    pub fn from_rational(rat: Rational) -> Self {
        QuadScalar { rat, irr: Rational::zero() }
    }

    pub fn from_int(value: i64) -> Self {
        Self::from_rational(Rational::from_integer(value.into()))
    }

    /// √2 itself.
    pub fn sqrt2() -> Self {
        QuadScalar { rat: Rational::zero(), irr: Rational::one() }
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// The rational value, if the √2 component vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rat)
    }

    /// The integer value, if the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn sign(&self) -> i8 {
        quad_sign(self)
    }

    pub fn is_positive(&self) -> bool {
        quad_sign(self) > 0
    }

    pub fn is_negative(&self) -> bool {
        quad_sign(self) < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Conjugate `rat - irr·√2`.
    pub fn conjugate(&self) -> Self {
        QuadScalar { rat: self.rat.clone(), irr: -self.irr.clone() }
    }

    /// Field norm `rat² - 2·irr²`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(2.into()) * &self.irr * &self.irr
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        QuadScalar { rat: &self.rat * factor, irr: &self.irr * factor }
    }

    pub fn mul_int(&self, factor: &BigInt) -> Self {
        self.scale(&Rational::from_integer(factor.clone()))
    }

    /// Largest integer not exceeding the element.
    pub fn floor(&self) -> BigInt {
        // floor(sqrt(x)) == isqrt(floor(x)) for x >= 0, and 2·irr² is never
        // a perfect square for irr != 0.
        let irr_floor = if self.irr.is_zero() {
            BigInt::zero()
        } else {
            let two_sq = Rational::from_integer(2.into()) * &self.irr * &self.irr;
            let root = two_sq.floor().to_integer().sqrt();
            if self.irr.is_positive() {
                root
            } else {
                -root - 1
            }
        };
        let mut k = self.rat.floor().to_integer() + irr_floor;
        while (self.clone() - QuadScalar::from_rational(Rational::from_integer(&k + 1))).sign() >= 0 {
            k += 1;
        }
        while (self.clone() - QuadScalar::from_rational(Rational::from_integer(k.clone()))).sign() < 0 {
            k -= 1;
        }
        k
    }

    /// Smallest integer not below the element.
    pub fn ceil(&self) -> BigInt {
        -(-self.clone()).floor()
    }

    /// Exact inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        Some(QuadScalar { rat: &self.rat / &norm, irr: -(&self.irr / &norm) })
    }
}

/// Sign of `rat + irr·√2`, decided without floating point.
pub fn quad_sign(x: &QuadScalar) -> i8 {
    let sr = signum(&x.rat);
    let si = signum(&x.irr);
    if si == 0 {
        return sr;
    }
    if sr == 0 || sr == si {
        return si;
    }
    // Opposite signs: the component with the larger square dominates.
    let lhs = &x.rat * &x.rat;
    let rhs = Rational::from_integer(2.into()) * &x.irr * &x.irr;
    if lhs > rhs {
        sr
    } else {
        si
    }
}

fn signum(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// `⌊α/β⌋` or `⌈α/β⌉` for `β > 0`, computed exactly.
pub fn quad_floor_ratio(alpha: &QuadScalar, beta: &QuadScalar, mode: Rounding) -> Result<BigInt> {
    if !beta.is_positive() {
        return Err(Error::NonPositive("ratio denominator"));
    }
    let ratio = alpha.clone() / beta.clone();
    Ok(match mode {
        Rounding::Floor => ratio.floor(),
        Rounding::Ceil => ratio.ceil(),
    })
}

impl PartialOrd for QuadScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.irr == other.irr {
            return self.rat.cmp(&other.rat);
        }
        if self.rat == other.rat {
            return self.irr.cmp(&other.irr);
        }
        let diff = QuadScalar { rat: &self.rat - &other.rat, irr: &self.irr - &other.irr };
        match quad_sign(&diff) {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Add for QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: Self) -> Self {
        QuadScalar { rat: self.rat + rhs.rat, irr: self.irr + rhs.irr }
    }
}

impl<'a> Add<&'a QuadScalar> for &'a QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: &QuadScalar) -> QuadScalar {
        QuadScalar { rat: &self.rat + &rhs.rat, irr: &self.irr + &rhs.irr }
    }
}

impl Sub for QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: Self) -> Self {
        QuadScalar { rat: self.rat - rhs.rat, irr: self.irr - rhs.irr }
    }
}

impl<'a> Sub<&'a QuadScalar> for &'a QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: &QuadScalar) -> QuadScalar {
        QuadScalar { rat: &self.rat - &rhs.rat, irr: &self.irr - &rhs.irr }
    }
}

impl Mul for QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a QuadScalar> for &'a QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: &QuadScalar) -> QuadScalar {
        let two = Rational::from_integer(2.into());
        QuadScalar {
            rat: &self.rat * &rhs.rat + two * &self.irr * &rhs.irr,
            irr: &self.rat * &rhs.irr + &self.irr * &rhs.rat,
        }
    }
}

impl Div for QuadScalar {
    type Output = QuadScalar;
    /// Panics on division by zero, like the rational division it wraps.
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip().expect("division by zero in Q(sqrt 2)")
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> Self {
        QuadScalar { rat: -self.rat, irr: -self.irr }
    }
}

impl Zero for QuadScalar {
    fn zero() -> Self {
        QuadScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        QuadScalar::from_int(1)
    }
}

impl Scalar for QuadScalar {
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
}

impl From<Rational> for QuadScalar {
    fn from(value: Rational) -> Self {
        QuadScalar::from_rational(value)
    }
}

impl From<i64> for QuadScalar {
    fn from(value: i64) -> Self {
        QuadScalar::from_int(value)
    }
}

impl fmt::Display for QuadScalar {
    /// Renders `p/q+r/s s2`, the literal syntax accepted by the parsers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{} s2", self.irr),
            (false, false) => {
                if self.irr.is_negative() {
                    write!(f, "{}-{} s2", self.rat, -self.irr.clone())
                } else {
                    write!(f, "{}+{} s2", self.rat, self.irr)
                }
            }
        }
    }
}

impl Serialize for QuadScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("QuadScalar", 2)?;
        state.serialize_field("rat", &rational_pq(&self.rat))?;
        state.serialize_field("irr", &rational_pq(&self.irr))?;
        state.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn q(a: (i64, i64), b: (i64, i64)) -> QuadScalar {
        QuadScalar::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn sign_cases() {
        assert_eq!(quad_sign(&QuadScalar::zero()), 0);
        assert_eq!(quad_sign(&q((3, 1), (-2, 1))), 1);
        assert_eq!(quad_sign(&q((-3, 1), (2, 1))), -1);
        assert_eq!(quad_sign(&q((-1, 1), (1, 1))), 1);
        assert_eq!(quad_sign(&q((7, 5), (-1, 1))), -1);
    }

    #[test]
    fn floor_ratio_examples() {
        let f = quad_floor_ratio(&q((3, 2), (0, 1)), &QuadScalar::one(), Rounding::Floor).unwrap();
        assert_eq!(f, BigInt::from(1));
        let c = quad_floor_ratio(&QuadScalar::sqrt2(), &QuadScalar::one(), Rounding::Ceil).unwrap();
        assert_eq!(c, BigInt::from(2));
        let five = QuadScalar::from_int(5);
        assert_eq!(quad_floor_ratio(&five, &five, Rounding::Floor).unwrap(), BigInt::from(1));
        assert!(quad_floor_ratio(&five, &QuadScalar::zero(), Rounding::Floor).is_err());
        assert!(quad_floor_ratio(&five, &-QuadScalar::one(), Rounding::Ceil).is_err());
    }

    #[test]
    fn floor_of_negative_irrationals() {
        // -√2 ≈ -1.414
        assert_eq!((-QuadScalar::sqrt2()).floor(), BigInt::from(-2));
        assert_eq!((-QuadScalar::sqrt2()).ceil(), BigInt::from(-1));
        // 5·√2 ≈ 7.07, 6 - 5√2 ≈ -1.07
        assert_eq!(q((0, 1), (5, 1)).floor(), BigInt::from(7));
        assert_eq!(q((6, 1), (-5, 1)).floor(), BigInt::from(-2));
        assert_eq!(QuadScalar::from_int(-3).floor(), BigInt::from(-3));
    }

    #[test]
    fn inverse_and_display() {
        let x = q((1, 1), (1, 1));
        assert_eq!(x.clone() * x.recip().unwrap(), QuadScalar::one());
        assert_eq!(x.to_string(), "1+1 s2");
        assert_eq!(q((2, 1), (-1, 1)).to_string(), "2-1 s2");
        assert_eq!(QuadScalar::sqrt2().to_string(), "1 s2");
        assert_eq!(q((3, 2), (0, 1)).to_string(), "3/2");
    }

    #[test]
    fn serializes_as_pq_strings() {
        let json = serde_json::to_string(&q((3, 2), (-1, 1))).unwrap();
        assert_eq!(json, r#"{"rat":"3/2","irr":"-1/1"}"#);
    }
}
