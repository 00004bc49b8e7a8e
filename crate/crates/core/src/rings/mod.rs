//! The rings `V = Q{v}_p`, `R = Q + S⁻¹p` and `W`, plus seeded generators.
//!
//! `V` and `R` share one representation: fractions whose numerator lives in
//! the group ring of `Q + Q√2` over a base field `K` (`Q` for `V`, `Q(u)`
//! for `R`) and whose denominator has constant coefficient 1. Such fractions
//! cover the fraction field, so overring elements need no separate type.

mod cancel;
mod fraction;
mod monoid;
mod product;
pub mod random;
mod w;

use std::hash::Hash;

pub use fraction::{r_invert, r_membership, FracElem, RElem, RMembership, VElem};
pub use monoid::MonoidElem;
pub use w::{w_divides, w_membership, w_value, WElem};

use crate::exact::{is_rational_constant, RatFun1};
use crate::scalar::{Linearize, Rational};

/// Coefficient fields of the monoid rings.
pub trait BaseField: Linearize + Eq + Hash {
    /// The value as a rational number, when it is one.
    fn as_rational(&self) -> Option<Rational>;

    /// `num/den` with a common factor removed, when one is found.
    fn cancel(_num: &MonoidElem<Self>, _den: &MonoidElem<Self>) -> Option<(MonoidElem<Self>, MonoidElem<Self>)>
    where
        Self: Sized,
    {
        None
    }

    /// A faster product than the generic term loop, when one applies.
    fn multiply(_a: &MonoidElem<Self>, _b: &MonoidElem<Self>) -> Option<MonoidElem<Self>>
    where
        Self: Sized,
    {
        None
    }
}

impl BaseField for Rational {
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn cancel(num: &MonoidElem<Self>, den: &MonoidElem<Self>) -> Option<(MonoidElem<Self>, MonoidElem<Self>)> {
        cancel::cancel_rational(num, den)
    }

    fn multiply(a: &MonoidElem<Self>, b: &MonoidElem<Self>) -> Option<MonoidElem<Self>> {
        product::multiply_rational(a, b)
    }
}

impl BaseField for RatFun1 {
    fn as_rational(&self) -> Option<Rational> {
        is_rational_constant(self)
    }
}
