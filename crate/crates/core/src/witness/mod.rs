//! Dependence witnesses: construction and exact re-verification.
//!
//! A witness for `a_1, ..., a_n` under a (pre)order `<` is a polynomial `P`
//! with coefficients in the ring such that `P(a) = 0` and the coefficient of
//! the `<`-smallest monomial is 1 (for preorders: of some minimal monomial).

mod basic;
mod eqma;
mod homogenize;
mod refute;
mod search;
mod transport;
mod vdim;

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

pub use basic::{lex_witness_pair, witness_trivial, witness_value_pair};
pub use eqma::{reduce_w_matrix, solve_eqma, witness_from_eqma, witness_w_preorder, EqMASystem};
pub use homogenize::{homogenize_witness, Homogenized};
pub use refute::phi_refutation_check;
pub use search::{homogeneous_relation_search, independence_search};
pub use transport::{power_products, tdim_witness, transport_witness_to_lex};
pub use vdim::{
    common_denominator, overring_lex_witness, vdim_witness, LexOracle, LiftedPoly, OrderOracle, OverringElement,
    ValuationOracle, VdimOracle, VdimOutcome,
};

use crate::error::{Error, Result};
use crate::exact::{quad_floor_ratio, QuadScalar, Rounding};
use crate::laurent::LaurentPoly;
use crate::order::{classify, OrderMatrix};
use crate::rings::{RElem, VElem};
use crate::scalar::{Domain, Linearize};

/// Whether the smallest monomial or merely some minimal monomial carries
/// the coefficient 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    OrderWitness,
    PreorderWitness,
}

/// A claimed dependence witness.
#[derive(Clone, Debug)]
pub struct Witness<T> {
    pub poly: LaurentPoly<T>,
    pub order: OrderMatrix,
    pub elements: Vec<T>,
    pub kind: WitnessKind,
}

/// Outcome of [`verify_witness`]; `reason` names the failing clause.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub passed: bool,
    pub reason: Option<String>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { passed: true, reason: None }
    }

    pub fn fail(reason: impl Into<String>) -> Self {
        Verdict { passed: false, reason: Some(reason.into()) }
    }
}

impl<T: Domain> Witness<T> {
    /// Same witness, re-read under another matrix and kind.
    pub fn reinterpret(&self, order: OrderMatrix, kind: WitnessKind) -> Self {
        Witness { poly: self.poly.clone(), order, elements: self.elements.clone(), kind }
    }
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::OrderWitness => "order-witness",
            WitnessKind::PreorderWitness => "preorder-witness",
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for WitnessKind {
    type Err = Error;

    /// Accepts `order`, `preorder` and the full names.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().trim_end_matches("-witness") {
            "order" => Ok(WitnessKind::OrderWitness),
            "preorder" => Ok(WitnessKind::PreorderWitness),
            _ => Err(Error::Parse { pos: 0, expected: "order or preorder".into() }),
        }
    }
}

impl<T: Domain> fmt::Display for Witness<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Re-checks a witness from scratch, with ring membership of the
/// coefficients decided by [`Domain::contains`].
pub fn verify_witness<T: Domain>(w: &Witness<T>) -> Verdict {
    verify_witness_with(w, |c: &T| c.contains())
}

/// As [`verify_witness`], with a caller-supplied membership test for the
/// coefficient ring (used for witnesses over overrings).
pub fn verify_witness_with<T: Domain>(w: &Witness<T>, member: impl Fn(&T) -> bool) -> Verdict {
    let n = w.poly.nvars();
    if w.elements.len() != n || w.order.cols() != n {
        return Verdict::fail(format!(
            "shape: {} variables, {} elements, {} matrix columns",
            n,
            w.elements.len(),
            w.order.cols()
        ));
    }
    if w.poly.is_zero() {
        return Verdict::fail("polynomial is zero");
    }
    if !w.poly.is_polynomial() {
        return Verdict::fail("polynomial has negative exponents");
    }
    if let Some((e, c)) = w.poly.terms().find(|(_, c)| !member(c)) {
        return Verdict::fail(format!("coefficient {c} of {e} is not in the ring"));
    }
    match w.poly.evaluate(&w.elements) {
        Ok(value) if value.is_zero() => {}
        Ok(value) => return Verdict::fail(format!("evaluation is {value}, not 0")),
        Err(e) => return Verdict::fail(format!("evaluation failed: {e}")),
    }
    let minimal = match w.poly.minimal_monomials(&w.order) {
        Ok(m) => m,
        Err(e) => return Verdict::fail(format!("minimal monomials: {e}")),
    };
    match w.kind {
        WitnessKind::OrderWitness => {
            if !classify(&w.order).is_total_order {
                return Verdict::fail(format!("order witness under {} which is not a total order", w.order));
            }
            let lc = w.poly.coeff(&minimal[0]).unwrap();
            if !lc.is_one() {
                return Verdict::fail(format!("leading coefficient is {lc}, not 1"));
            }
        }
        WitnessKind::PreorderWitness => {
            if !minimal.iter().any(|e| w.poly.coeff(e).unwrap().is_one()) {
                return Verdict::fail("no minimal monomial has coefficient 1");
            }
        }
    }
    Verdict::pass()
}

/// Rings with a `v`-adic value on the fraction field: `V` and `R`.
pub trait ValuedRing: Domain + Linearize {
    /// The value of a nonzero element.
    fn value(&self) -> Option<QuadScalar>;

    /// The exponent `n` in the witness `Y^n − cX` for values `α`, `β > 0`,
    /// chosen so that `c = b^n/a` lies in the ring.
    fn pair_power(alpha: &QuadScalar, beta: &QuadScalar) -> Result<BigInt>;
}

impl ValuedRing for VElem {
    fn value(&self) -> Option<QuadScalar> {
        self.valuation().ok()
    }

    /// `⌈α/β⌉`: a nonnegative value suffices in `V`.
    fn pair_power(alpha: &QuadScalar, beta: &QuadScalar) -> Result<BigInt> {
        quad_floor_ratio(alpha, beta, Rounding::Ceil)
    }
}

impl ValuedRing for RElem {
    fn value(&self) -> Option<QuadScalar> {
        self.valuation().ok()
    }

    /// `⌊α/β⌋ + 1`: `c` must have positive value so its constant
    /// coefficient is 0.
    fn pair_power(alpha: &QuadScalar, beta: &QuadScalar) -> Result<BigInt> {
        Ok(quad_floor_ratio(alpha, beta, Rounding::Floor)? + 1)
    }
}

/// Verifies a freshly built witness, turning a failure into an error.
pub(crate) fn checked<T: Domain>(w: Witness<T>) -> Result<Witness<T>> {
    match verify_witness(&w).reason {
        None => Ok(w),
        Some(reason) => Err(crate::error::Error::Unverified(format!("{w}: {reason}"))),
    }
}
