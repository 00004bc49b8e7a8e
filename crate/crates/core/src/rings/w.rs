//! The valuation domain `W = Q[u]_(u) + vQ(u)[v]_(v)` inside Q(u, v), with
//! value group Z² ordered lexicographically (`w(v) = (1,0)`, `w(u) = (0,1)`).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{eval_at_v0, v_adic_valuation, BiPoly, RatFun2};
use crate::scalar::{Domain, Linearize, Rational, Scalar};

/// An element of Q(u, v) with its cached value; `wval` is `None` for zero.
#[derive(Clone, Debug)]
pub struct WElem {
    value: RatFun2,
    wval: Option<(i64, i64)>,
}

/// `(i, j)` with `a = v^i u^j · unit`; `None` for zero.
pub fn w_value(a: &RatFun2) -> Option<(i64, i64)> {
    let i = v_adic_valuation(a).ok()?;
    let normalized = a * &RatFun2::monomial(-i, 0);
    let at_zero = eval_at_v0(&normalized).expect("v-adic unit has a value at v = 0");
    let j = at_zero.u_valuation().expect("nonzero after normalization");
    Some((i, j))
}

/// Whether `a` lies in `W`.
pub fn w_membership(a: &RatFun2) -> bool {
    w_value(a).is_none_or(|w| w >= (0, 0))
}

/// Whether `a` divides `b` in `W`.
pub fn w_divides(a: &RatFun2, b: &RatFun2) -> Result<bool> {
    let inv = a.inv().ok_or(Error::ZeroInput("divisor"))?;
    Ok(w_membership(&(b * &inv)))
}

impl WElem {
    pub fn new(value: RatFun2) -> Self {
        let wval = w_value(&value);
        WElem { value, wval }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::new(RatFun2::from_rational(c))
    }

    pub fn u() -> Self {
        Self::new(RatFun2::u())
    }

    pub fn v() -> Self {
        Self::new(RatFun2::v())
    }

    /// `v^i u^j`.
    pub fn monomial(i: i64, j: i64) -> Self {
        WElem { value: RatFun2::monomial(i, j), wval: Some((i, j)) }
    }

    pub fn value(&self) -> &RatFun2 {
        &self.value
    }

    pub fn wval(&self) -> Option<(i64, i64)> {
        self.wval
    }

    /// Integer power; negative exponents invert in Q(u, v).
    pub fn pow_int(&self, e: &BigInt) -> Option<Self> {
        self.pow_big(e)
    }
}

impl PartialEq for WElem {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Zero for WElem {
    fn zero() -> Self {
        WElem { value: RatFun2::zero(), wval: None }
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl One for WElem {
    fn one() -> Self {
        WElem { value: RatFun2::one(), wval: Some((0, 0)) }
    }
}

impl Add for WElem {
    type Output = WElem;
    fn add(self, rhs: Self) -> Self {
        WElem::new(&self.value + &rhs.value)
    }
}

impl Sub for WElem {
    type Output = WElem;
    fn sub(self, rhs: Self) -> Self {
        WElem::new(&self.value - &rhs.value)
    }
}

impl Mul for WElem {
    type Output = WElem;
    fn mul(self, rhs: Self) -> Self {
        let wval = match (self.wval, rhs.wval) {
            (Some(a), Some(b)) => Some((a.0 + b.0, a.1 + b.1)),
            _ => None,
        };
        WElem { value: &self.value * &rhs.value, wval }
    }
}

impl Div for WElem {
    type Output = WElem;
    /// Panics on a zero divisor.
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in Q(u,v)")
    }
}

impl Neg for WElem {
    type Output = WElem;
    fn neg(self) -> Self {
        WElem { value: -self.value, wval: self.wval }
    }
}

impl Scalar for WElem {
    fn inv(&self) -> Option<Self> {
        let value = self.value.inv()?;
        let (i, j) = self.wval.expect("nonzero");
        Some(WElem { value, wval: Some((-i, -j)) })
    }

    fn pow_u(&self, exp: u64) -> Self {
        let k = exp as i64;
        WElem { value: self.value.pow_u(exp), wval: self.wval.map(|(i, j)| (i * k, j * k)) }
    }
}

impl Domain for WElem {
    const NAME: &'static str = "W";

    fn contains(&self) -> bool {
        self.wval.is_none_or(|w| w >= (0, 0))
    }

    fn is_unit(&self) -> bool {
        self.wval == Some((0, 0))
    }
}

impl Linearize for WElem {
    type Form = BiPoly;

    fn common_forms(values: &[Self]) -> Vec<BiPoly> {
        let raw: Vec<RatFun2> = values.iter().map(|x| x.value.clone()).collect();
        RatFun2::common_forms(&raw)
    }
}

impl From<RatFun2> for WElem {
    fn from(value: RatFun2) -> Self {
        WElem::new(value)
    }
}

impl From<Rational> for WElem {
    fn from(value: Rational) -> Self {
        WElem::from_rational(value)
    }
}

impl fmt::Display for WElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
