//! Coefficient abstractions shared by every ring in the crate.
//!
//! All concrete element types are elements of a field (or of a group ring)
//! that contains the ring of interest. [`Scalar`] captures the ambient
//! arithmetic, [`Domain`] adds the membership test for the designated
//! subring, and [`Linearize`] supplies hashable additive normal forms for
//! the exhaustive searches.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational numbers.
pub type Rational = BigRational;

/// Exact arithmetic on the ambient structure of a ring.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Multiplicative inverse in the ambient field, when one exists.
    fn inv(&self) -> Option<Self>;

    /// `(n, d)` with `self = n/d`, where sums and products of such parts
    /// skip normalization. `None` for types without a cheaper form.
    fn split(&self) -> Option<(Self, Self)> {
        None
    }

    fn pow_u(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Integer power; negative exponents go through [`Scalar::inv`].
    fn pow_i(&self, exp: i64) -> Option<Self> {
        if exp >= 0 {
            Some(self.pow_u(exp as u64))
        } else {
            self.inv().map(|inv| inv.pow_u(exp.unsigned_abs()))
        }
    }

    fn pow_big(&self, exp: &BigInt) -> Option<Self> {
        let small: i64 = exp.try_into().ok()?;
        self.pow_i(small)
    }
}

/// A designated subring of the ambient field of [`Scalar`].
pub trait Domain: Scalar {
    /// Short name used in diagnostics.
    const NAME: &'static str;

    /// Whether the element lies in the subring.
    fn contains(&self) -> bool;

    /// Whether the element is a unit of the subring.
    fn is_unit(&self) -> bool;
}

/// Hashable additive normal forms over a common denominator.
///
/// `common_forms(values)` maps each value `x_i` to `D * x_i` for a fixed
/// nonzero `D`, in a representation where equality is structural. A signed
/// sum of values vanishes iff the same sum of forms does.
pub trait Linearize: Scalar {
    type Form: Clone + Eq + Hash + Zero + Add<Output = Self::Form> + Neg<Output = Self::Form>;

    fn common_forms(values: &[Self]) -> Vec<Self::Form>;
}

impl Scalar for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Domain for Rational {
    const NAME: &'static str = "Q";

    fn contains(&self) -> bool {
        true
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
}

impl Linearize for Rational {
    type Form = Rational;

    fn common_forms(values: &[Self]) -> Vec<Self::Form> {
        values.to_vec()
    }
}

impl Scalar for BigInt {
    fn inv(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Domain for BigInt {
    const NAME: &'static str = "Z";

    fn contains(&self) -> bool {
        true
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

impl Linearize for BigInt {
    type Form = BigInt;

    fn common_forms(values: &[Self]) -> Vec<Self::Form> {
        values.to_vec()
    }
}

/// Shorthand for a rational from two machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integral rational.
pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `p/q` rendering with an explicit denominator, used by the JSON reports.
pub fn rational_pq(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Wraps a rendered coefficient in parentheses unless it is a bare atom:
/// operators nested in parentheses do not count.
pub(crate) fn wrap_compound(text: &str) -> String {
    let body = text.strip_prefix('-').unwrap_or(text);
    let mut depth = 0i32;
    let compound = body.chars().any(|ch| {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        depth == 0 && matches!(ch, '+' | '-' | '/' | '*' | ' ')
    });
    if compound {
        format!("({text})")
    } else {
        text.to_string()
    }
}
