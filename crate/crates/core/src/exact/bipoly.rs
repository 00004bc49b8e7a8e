//! Bivariate polynomials over Q, stored recursively as polynomials in `v`
//! with coefficients in Q[u].
//!
//! The gcd uses content/primitive-part reduction with a primitive
//! pseudo-remainder sequence in `v`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::unipoly::{power_text, write_terms, UniPoly};
use crate::scalar::Rational;

/// `Σ_i c_i(u) v^i`, low `v`-degree first, no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_u(UniPoly::constant(c))
    }

    pub fn from_u(c: UniPoly) -> Self {
        Self::new(vec![c])
    }

    /// `c·u^i·v^j`.
    pub fn monomial(c: Rational, i: usize, j: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(); j + 1];
        coeffs[j] = UniPoly::monomial(c, i);
        Self::new(coeffs)
    }

    pub fn u() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Coefficients in Q[u], indexed by the power of `v`.
    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> UniPoly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn v_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplicity of `v` as a factor; `None` for zero.
    pub fn v_multiplicity(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops `k` factors of `v`; the caller guarantees divisibility.
    pub fn shift_v_down(&self, k: usize) -> Self {
        Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    pub fn shift_v_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Substitutes `v = 0`.
    pub fn at_v0(&self) -> UniPoly {
        self.coeff(0)
    }

    /// Leading rational coefficient: highest `v` power, then highest `u` power.
    pub fn leading_rational(&self) -> Option<&Rational> {
        self.coeffs.last().and_then(|c| c.leading())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    pub fn scale_u(&self, c: &UniPoly) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Gcd of the coefficients in Q[u] (monic).
    pub fn content(&self) -> UniPoly {
        self.coeffs
            .iter()
            .fold(UniPoly::zero(), |acc, c| acc.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self::new(
            self.coeffs
                .iter()
                .map(|x| x.exact_div(&c).expect("content divides coefficients"))
                .collect(),
        )
    }

    /// Makes the leading rational coefficient 1.
    pub fn normalized(&self) -> Self {
        match self.leading_rational() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Pseudo-remainder of `self` by `divisor` with respect to `v`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.coeffs.len() - 1;
        let lc = divisor.coeffs.last().unwrap();
        let mut rem = self.clone();
        while let Some(rd) = rem.v_degree() {
            if rd < dd {
                break;
            }
            let top = rem.coeffs[rd].clone();
            let lhs = rem.scale_u(lc);
            let rhs = divisor.scale_u(&top).shift_v_up(rd - dd);
            rem = &lhs - &rhs;
        }
        rem
    }

    /// Greatest common divisor, normalized by [`BiPoly::normalized`].
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        super::modular_gcd(self, other).unwrap_or_else(|| self.gcd_prs(other))
    }

    /// [`BiPoly::gcd`] by the primitive remainder sequence over `Q[u]`.
    pub(crate) fn gcd_prs(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.gcd(other);
        }
        let content = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.v_degree() < b.v_degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.v_degree() == Some(0) {
                // A primitive polynomial free of v is a unit.
                a = BiPoly::one();
                break;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.scale_u(&content).normalized()
    }

    /// Exact quotient, when `divisor` divides `self` in Q[u, v].
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.v_degree()?;
        let lc = divisor.coeffs.last().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![UniPoly::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.v_degree() {
            if rd < dd {
                return None;
            }
            let c = rem.coeffs[rd].exact_div(lc)?;
            let step = divisor.scale_u(&c).shift_v_up(rd - dd);
            rem = &rem - &step;
            quot[rd - dd] = c;
        }
        Some(Self::new(quot))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
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
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect())
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|j| &self.coeff(j) - &rhs.coeff(j)).collect())
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> Self {
        BiPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().rev().flat_map(|(j, c)| {
            c.coeffs().iter().enumerate().rev().map(move |(i, r)| {
                let mono = match (power_text("u", i), power_text("v", j)) {
                    (a, b) if a.is_empty() => b,
                    (a, b) if b.is_empty() => a,
                    (a, b) => format!("{a}*{b}"),
                };
                (r, mono)
            })
        });
        write_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn m(c: i64, i: usize, j: usize) -> BiPoly {
        BiPoly::monomial(rat_int(c), i, j)
    }

    #[test]
    fn gcd_recovers_common_factor() {
        // (u + v)(u - 2v + 1) and (u + v)(v^2 + u)
        let g = &m(1, 1, 0) + &m(1, 0, 1);
        let a = &g * &(&(&m(1, 1, 0) - &m(2, 0, 1)) + &m(1, 0, 0));
        let b = &g * &(&m(1, 0, 2) + &m(1, 1, 0));
        assert_eq!(a.gcd(&b), g.normalized());
        assert_eq!(a.exact_div(&g).unwrap(), &(&m(1, 1, 0) - &m(2, 0, 1)) + &m(1, 0, 0));
    }

    #[test]
    fn gcd_with_u_content() {
        // u^2·v and u·(v + 1): gcd u
        let a = m(1, 2, 1);
        let b = &m(1, 1, 1) + &m(1, 1, 0);
        assert_eq!(a.gcd(&b), m(1, 1, 0));
        assert_eq!(m(3, 0, 2).gcd(&m(5, 0, 1)), m(1, 0, 1));
    }

    #[test]
    fn coprime_inputs() {
        let a = &m(1, 1, 0) + &m(1, 0, 1);
        let b = &m(1, 1, 0) - &m(1, 0, 1);
        assert_eq!(a.gcd(&b), BiPoly::one());
        assert!(a.exact_div(&b).is_none());
    }

    #[test]
    fn display() {
        let a = &(&m(2, 1, 1) - &m(1, 0, 2)) + &m(3, 0, 0);
        assert_eq!(a.to_string(), "-v^2+2*u*v+3");
    }
}
