//! Sparse Laurent polynomials over a pluggable coefficient ring.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::QuadScalar;
use crate::order::{compare_difference, IntMatrix, OrderMatrix};
use crate::scalar::{wrap_compound, Domain, Scalar};

/// An integer exponent vector. The derived order is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ExpVec(pub Vec<BigInt>);

impl ExpVec {
    pub fn zeros(n: usize) -> Self {
        ExpVec(vec![BigInt::zero(); n])
    }

    pub fn from_i64(e: &[i64]) -> Self {
        ExpVec(e.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// The `i`-th unit vector of length `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = Self::zeros(n);
        e.0[i] = BigInt::one();
        e
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn total_degree(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        ExpVec(self.0.iter().map(|x| x * k).collect())
    }
}

impl Add for &ExpVec {
    type Output = ExpVec;
    fn add(self, rhs: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExpVec {
    type Output = ExpVec;
    fn sub(self, rhs: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Strictly positive weights, one per variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightVector(Vec<QuadScalar>);

impl WeightVector {
    pub fn new(weights: Vec<QuadScalar>) -> Result<Self> {
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::NonPositive("weight"));
        }
        Ok(WeightVector(weights))
    }

    pub fn weights(&self) -> &[QuadScalar] {
        &self.0
    }

    pub fn degree(&self, e: &ExpVec) -> QuadScalar {
        self.0
            .iter()
            .zip(&e.0)
            .fold(QuadScalar::zero(), |acc, (w, x)| acc + w.mul_int(x))
    }
}

/// `Σ c_e X^e` with nonzero coefficients, keyed by exponent vector.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<T> {
    nvars: usize,
    terms: BTreeMap<ExpVec, T>,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        Self::monomial(c, ExpVec::zeros(nvars))
    }

    pub fn monomial(c: T, e: ExpVec) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, c);
        p
    }

    /// The variable `X_{i+1}` in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(T::one(), ExpVec::unit(n, i))
    }

    /// Sums the given terms; colliding exponents are added.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExpVec, T)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExpVec, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(e, sum);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExpVec) -> Option<&T> {
        self.terms.get(e)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(ExpVec::is_nonnegative)
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            p.add_term(e.clone(), x.clone() * c.clone());
        }
        p
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        let mut p = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), f(c));
        }
        p
    }

    pub fn try_map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> Result<U>) -> Result<LaurentPoly<U>> {
        let mut p = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), f(c)?);
        }
        Ok(p)
    }

    /// Multiplies by the monomial `X^shift`.
    pub fn shift(&self, shift: &ExpVec) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Value at `points` in the ambient field of `T`. Negative exponents
    /// need the point to be invertible there.
    pub fn evaluate(&self, points: &[T]) -> Result<T> {
        if points.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: points.len() });
        }
        if let Some(value) = self.evaluate_split(points)? {
            return Ok(value);
        }
        let mut cache: HashMap<(usize, BigInt), T> = HashMap::new();
        let mut total = T::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, x) in e.0.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let key = (i, x.clone());
                let power = match cache.get(&key) {
                    Some(p) => p.clone(),
                    None => {
                        let p = points[i].pow_big(x).ok_or_else(|| {
                            Error::NotInvertible(format!("{} raised to {x}", points[i]))
                        })?;
                        cache.insert(key, p.clone());
                        p
                    }
                };
                term = term * power;
            }
            total = total + term;
        }
        Ok(total)
    }

    /// [`LaurentPoly::evaluate`] over one common denominator, for types
    /// with [`Scalar::split`]: each `x_i = n_i/d_i` enters as
    /// `n_i^{e−lo} d_i^{hi−e}`, and the single division comes last.
    fn evaluate_split(&self, points: &[T]) -> Result<Option<T>> {
        let Some(parts) = points.iter().map(Scalar::split).collect::<Option<Vec<_>>>() else {
            return Ok(None);
        };
        let Some(coeffs) = self.terms.values().map(Scalar::split).collect::<Option<Vec<_>>>() else {
            return Ok(None);
        };
        let zero = BigInt::zero();
        let bounds: Vec<(BigInt, BigInt)> = (0..self.nvars)
            .map(|i| {
                let exps = self.terms.keys().map(|e| &e.0[i]);
                let lo = exps.clone().chain([&zero]).min().unwrap().clone();
                let hi = exps.chain([&zero]).max().unwrap().clone();
                (lo, hi)
            })
            .collect();
        for (i, (lo, _)) in bounds.iter().enumerate() {
            if lo.is_negative() && parts[i].0.is_zero() {
                return Err(Error::NotInvertible(format!("{} raised to {lo}", points[i])));
            }
        }
        // Coefficients over the product of their distinct denominators.
        let mut dens: Vec<&T> = Vec::new();
        for (_, d) in &coeffs {
            if !dens.contains(&d) {
                dens.push(d);
            }
        }
        let cofactors: Vec<T> = (0..dens.len())
            .map(|j| dens.iter().enumerate().filter(|(k, _)| *k != j).fold(T::one(), |acc, (_, x)| acc * (*x).clone()))
            .collect();
        let cofactor = |d: &T| cofactors[dens.iter().position(|x| *x == d).unwrap()].clone();
        let mut cache: HashMap<(usize, bool, BigInt), T> = HashMap::new();
        let mut power = |i: usize, of_num: bool, k: BigInt| -> T {
            cache
                .entry((i, of_num, k.clone()))
                .or_insert_with(|| {
                    let base = if of_num { &parts[i].0 } else { &parts[i].1 };
                    base.pow_big(&k).expect("nonnegative power")
                })
                .clone()
        };
        let mut total = T::zero();
        for ((e, _), (cn, cd)) in self.terms.iter().zip(&coeffs) {
            let mut term = cn.clone() * cofactor(cd);
            for (i, x) in e.0.iter().enumerate() {
                let (lo, hi) = &bounds[i];
                term = term * power(i, true, x - lo) * power(i, false, hi - x);
            }
            total = total + term;
        }
        if total.is_zero() {
            return Ok(Some(total));
        }
        let mut den = dens.into_iter().fold(T::one(), |acc, d| acc * d.clone());
        for (i, (lo, hi)) in bounds.iter().enumerate() {
            den = den * power(i, true, -lo) * power(i, false, hi.clone());
        }
        let inv = den.inv().ok_or_else(|| Error::NotInvertible(format!("common denominator {den}")))?;
        Ok(Some(total * inv))
    }

    /// Exponents of the terms that are minimal under `m` (mutually tied).
    pub fn minimal_monomials(&self, m: &OrderMatrix) -> Result<Vec<ExpVec>> {
        if m.cols() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: m.cols() });
        }
        let mut keys = self.terms.keys();
        let first = keys.next().ok_or(Error::ZeroInput("minimal monomials"))?;
        let mut minimal = vec![first.clone()];
        for e in keys {
            match compare_difference(m, &(e - &minimal[0]).0) {
                Ordering::Less => minimal = vec![e.clone()],
                Ordering::Equal => minimal.push(e.clone()),
                Ordering::Greater => {}
            }
        }
        Ok(minimal)
    }

    /// Exponent of the smallest monomial; ties are rejected.
    pub fn leading_monomial(&self, m: &OrderMatrix) -> Result<ExpVec> {
        let mut minimal = self.minimal_monomials(m)?;
        if minimal.len() > 1 {
            return Err(Error::NotTotalOrder);
        }
        Ok(minimal.pop().unwrap())
    }

    /// Coefficient of the smallest monomial; ties are rejected.
    pub fn leading_coefficient(&self, m: &OrderMatrix) -> Result<T> {
        let e = self.leading_monomial(m)?;
        Ok(self.terms[&e].clone())
    }

    /// The substitution `X^e ↦ X^{L·e}`, summing collisions.
    pub fn apply_monomial_map(&self, l: &IntMatrix) -> Result<Self> {
        if l.cols() != self.nvars || l.rows().len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: l.cols() });
        }
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(ExpVec(l.mul_vec(&e.0)), c.clone());
        }
        Ok(p)
    }

    /// Multiplies by the least monomial making every exponent nonnegative.
    pub fn clear_denominators(&self) -> Self {
        let shift = ExpVec(
            (0..self.nvars)
                .map(|i| {
                    let low = self.terms.keys().map(|e| &e.0[i]).min().cloned().unwrap_or_default();
                    (-low).max(BigInt::zero())
                })
                .collect(),
        );
        self.shift(&shift)
    }

    /// Groups terms by weighted degree, ascending.
    pub fn weighted_components(&self, w: &WeightVector) -> Result<Vec<(QuadScalar, Self)>> {
        if w.weights().len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: w.weights().len() });
        }
        let mut groups: BTreeMap<QuadScalar, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            groups
                .entry(w.degree(e))
                .or_insert_with(|| Self::zero(self.nvars))
                .add_term(e.clone(), c.clone());
        }
        Ok(groups.into_iter().collect())
    }

    /// Sum of `c·X^e` over all terms minus the sum in `other`.
    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), if negate { -c.clone() } else { c.clone() });
        }
        p
    }
}

impl<T: Domain> LaurentPoly<T> {
    /// `factor^{-divide_power} · P(..., factor·X_index, ...)`, requiring
    /// every resulting coefficient to lie in the ring.
    pub fn scale_variable(&self, index: usize, factor: &T, divide_power: &BigInt) -> Result<Self> {
        if index >= self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: index + 1 });
        }
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let exp = &e.0[index] - divide_power;
            let power = factor
                .pow_big(&exp)
                .ok_or_else(|| Error::NotInvertible(format!("{factor} raised to {exp}")))?;
            let coeff = c.clone() * power;
            if !coeff.contains() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {coeff} of {e} is not in {}",
                    T::NAME
                )));
            }
            p.add_term(e.clone(), coeff);
        }
        Ok(p)
    }

    /// Whether every coefficient lies in the ring.
    pub fn coefficients_in_ring(&self) -> bool {
        self.terms.values().all(Domain::contains)
    }
}

impl<T: Scalar> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        self.combine(rhs, false)
    }
}

impl<T: Scalar> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        self.combine(rhs, true)
    }
}

impl<T: Scalar> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut p = LaurentPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            for (f, b) in &rhs.terms {
                p.add_term(e + f, a.clone() * b.clone());
            }
        }
        p
    }
}

impl<T: Scalar> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

fn monomial_text(e: &ExpVec) -> String {
    e.0.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| {
            if x.is_one() {
                format!("X{}", i + 1)
            } else {
                format!("X{}^{x}", i + 1)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl<T: Scalar> fmt::Display for LaurentPoly<T> {
    /// Terms in descending lexicographic order, e.g. `X1^6-(v/u^5)*X2^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono = monomial_text(e);
            let coeff = c.to_string();
            let text = if mono.is_empty() {
                coeff
            } else if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{mono}")
            } else {
                let neg = (-c.clone()).to_string();
                if coeff.starts_with('-') && !neg.starts_with('-') {
                    format!("-{}*{mono}", wrap_compound(&neg))
                } else {
                    format!("{}*{mono}", wrap_compound(&coeff))
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
