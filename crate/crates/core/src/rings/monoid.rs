//! Finite sums `Σ c_α v^α` with exponents in Q(√2).

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::BaseField;
use crate::error::{Error, Result};
use crate::exact::QuadScalar;
use crate::scalar::wrap_compound;

/// An element of the group ring of `Q + Q√2` over `K`.
///
/// The monoid ring `K{v}` is the subring of elements whose exponents are all
/// nonnegative, see [`MonoidElem::is_monoid`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonoidElem<K> {
    terms: BTreeMap<QuadScalar, K>,
}

impl<K: BaseField> MonoidElem<K> {
    pub fn zero() -> Self {
        MonoidElem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, QuadScalar::zero())
    }

    /// `c·v^α`.
    pub fn monomial(c: K, alpha: QuadScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(alpha, c);
        }
        MonoidElem { terms }
    }

    /// `v^α`.
    pub fn v_pow(alpha: QuadScalar) -> Self {
        Self::monomial(K::one(), alpha)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (QuadScalar, K)>) -> Self {
        let mut out = Self::zero();
        for (alpha, c) in terms {
            out.add_term(alpha, c);
        }
        out
    }

    /// Terms already in ascending exponent order with nonzero coefficients.
    pub(crate) fn from_sorted(terms: impl IntoIterator<Item = (QuadScalar, K)>) -> Self {
        MonoidElem { terms: terms.into_iter().collect() }
    }

    fn add_term(&mut self, alpha: QuadScalar, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&alpha) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(alpha, sum);
                }
            }
            None => {
                self.terms.insert(alpha, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.const_coefficient().is_one()
    }

    /// Terms by ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&QuadScalar, &K)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether every exponent is nonnegative.
    pub fn is_monoid(&self) -> bool {
        self.terms.keys().next().is_none_or(|a| !a.is_negative())
    }

    /// Least exponent in the support.
    pub fn min_support(&self) -> Result<QuadScalar> {
        self.terms.keys().next().cloned().ok_or(Error::ZeroInput("min_support"))
    }

    /// Coefficient of `v^0`.
    pub fn const_coefficient(&self) -> K {
        self.terms.get(&QuadScalar::zero()).cloned().unwrap_or_else(K::zero)
    }

    /// Coefficient of the least exponent.
    pub fn lowest_coefficient(&self) -> Option<&K> {
        self.terms.values().next()
    }

    /// Single-term elements `c·v^α`.
    pub fn as_monomial(&self) -> Option<(&QuadScalar, &K)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    /// Multiplies by `v^γ`.
    pub fn shift(&self, gamma: &QuadScalar) -> Self {
        MonoidElem {
            terms: self.terms.iter().map(|(a, c)| (a + gamma, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MonoidElem {
            terms: self.terms.iter().map(|(a, x)| (a.clone(), x.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map_coeffs<L: BaseField>(&self, f: impl Fn(&K) -> L) -> MonoidElem<L> {
        MonoidElem::from_terms(self.terms.iter().map(|(a, c)| (a.clone(), f(c))))
    }
}

impl<K: BaseField> MonoidElem<K> {
    /// `self + sign·rhs` by a merge of the sorted supports.
    fn merge(&self, rhs: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut left = self.terms.iter().peekable();
        let mut right = rhs.terms.iter().map(|(a, c)| (a, if negate { -c.clone() } else { c.clone() })).peekable();
        loop {
            let order = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some((a, _)), Some((b, _))) => a.cmp(b),
            };
            match order {
                Ordering::Less => {
                    let (a, c) = left.next().unwrap();
                    out.push((a.clone(), c.clone()));
                }
                Ordering::Greater => {
                    let (b, c) = right.next().unwrap();
                    out.push((b.clone(), c));
                }
                Ordering::Equal => {
                    let (a, x) = left.next().unwrap();
                    let (_, y) = right.next().unwrap();
                    let sum = x.clone() + y;
                    if !sum.is_zero() {
                        out.push((a.clone(), sum));
                    }
                }
            }
        }
        MonoidElem { terms: out.into_iter().collect() }
    }
}

impl<K: BaseField> Add for &MonoidElem<K> {
    type Output = MonoidElem<K>;
    fn add(self, rhs: &MonoidElem<K>) -> MonoidElem<K> {
        self.merge(rhs, false)
    }
}

impl<K: BaseField> Sub for &MonoidElem<K> {
    type Output = MonoidElem<K>;
    fn sub(self, rhs: &MonoidElem<K>) -> MonoidElem<K> {
        self.merge(rhs, true)
    }
}

impl<K: BaseField> Mul for &MonoidElem<K> {
    type Output = MonoidElem<K>;
    fn mul(self, rhs: &MonoidElem<K>) -> MonoidElem<K> {
        if let Some(product) = K::multiply(self, rhs) {
            return product;
        }
        let mut acc: HashMap<QuadScalar, K> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let c = x.clone() * y.clone();
                match acc.entry(a + b) {
                    Entry::Occupied(mut e) => {
                        let sum = e.get().clone() + c;
                        *e.get_mut() = sum;
                    }
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(QuadScalar, K)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        MonoidElem { terms: terms.into_iter().collect() }
    }
}

impl<K: BaseField> Neg for MonoidElem<K> {
    type Output = MonoidElem<K>;
    fn neg(self) -> Self {
        MonoidElem { terms: self.terms.into_iter().map(|(a, c)| (a, -c)).collect() }
    }
}

impl<K: BaseField> Add for MonoidElem<K> {
    type Output = MonoidElem<K>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<K: BaseField> Mul for MonoidElem<K> {
    type Output = MonoidElem<K>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<K: BaseField> Zero for MonoidElem<K> {
    fn zero() -> Self {
        MonoidElem::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `v`, `v^(3/2)`, `v^(1 s2)`; exponents in the quad literal syntax.
pub(crate) fn v_power_text(alpha: &QuadScalar) -> String {
    if alpha.is_one() {
        "v".to_string()
    } else if let Some(n) = alpha.as_integer().filter(|n| n.is_positive()) {
        format!("v^{n}")
    } else {
        format!("v^({alpha})")
    }
}

impl<K: BaseField> fmt::Display for MonoidElem<K> {
    /// Terms by ascending exponent, e.g. `3+u*v^(1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (alpha, c) in &self.terms {
            let text = if alpha.is_zero() {
                c.to_string()
            } else {
                let mono = v_power_text(alpha);
                if c.is_one() {
                    mono
                } else if (-c.clone()).is_one() {
                    format!("-{mono}")
                } else {
                    format!("{}*{mono}", wrap_compound(&c.to_string()))
                }
            };
            if !first && !text.starts_with('-') {
                write!(f, "+")?;
            }
            write!(f, "{text}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RatFun1;
    use crate::scalar::{rat, rat_int, Rational};

    type M = MonoidElem<Rational>;

    fn q(r: (i64, i64), i: (i64, i64)) -> QuadScalar {
        QuadScalar::new(rat(r.0, r.1), rat(i.0, i.1))
    }

    fn vp(alpha: QuadScalar) -> M {
        M::v_pow(alpha)
    }

    #[test]
    fn arithmetic_examples() {
        let s2 = vp(QuadScalar::sqrt2());
        let rest = vp(q((2, 1), (-1, 1)));
        assert_eq!(&s2 * &rest, vp(QuadScalar::from_int(2)));
        let a = &M::one() + &vp(QuadScalar::one());
        assert_eq!(&a + &M::zero(), a);
        let b = &M::one() - &vp(QuadScalar::one());
        assert_eq!(&a * &b, &M::one() - &vp(QuadScalar::from_int(2)));
    }

    #[test]
    fn support_examples() {
        let a = &vp(q((1, 2), (0, 1))) + &vp(QuadScalar::from_int(2));
        assert_eq!(a.min_support().unwrap(), q((1, 2), (0, 1)));
        let b = &M::one() + &vp(QuadScalar::one());
        assert_eq!(b.min_support().unwrap(), QuadScalar::zero());
        let c = &vp(QuadScalar::sqrt2()) + &vp(q((3, 2), (0, 1)));
        assert_eq!(c.min_support().unwrap(), QuadScalar::sqrt2());
        assert!(M::zero().min_support().is_err());
    }

    #[test]
    fn constant_coefficient_examples() {
        let a = &M::constant(rat_int(3)) + &vp(q((1, 2), (0, 1)));
        assert_eq!(a.const_coefficient(), rat_int(3));
        assert_eq!(vp(QuadScalar::one()).const_coefficient(), rat_int(0));
    }

    #[test]
    fn display_shapes() {
        let a = &M::constant(rat_int(3)) + &vp(q((1, 2), (0, 1)));
        assert_eq!(a.to_string(), "3+v^(1/2)");
        let b = &vp(QuadScalar::sqrt2()).scale(&rat(-1, 2)) + &vp(QuadScalar::from_int(2));
        assert_eq!(b.to_string(), "(-1/2)*v^(1 s2)+v^2");
        let u = MonoidElem::<RatFun1>::monomial(RatFun1::u(), QuadScalar::one());
        assert_eq!(u.to_string(), "u*v");
        assert_eq!(M::zero().to_string(), "0");
    }
}
