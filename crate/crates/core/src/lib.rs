//! Exact monomial (pre)orders given by matrices, the non-Noetherian test
//! rings `R`, `V` and `W`, and constructive dependence witnesses.
//!
//! A sequence `a_1, ..., a_n` of ring elements is dependent with respect to
//! a monomial preorder `<` when some polynomial vanishes at it and one of
//! its `<`-minimal monomials has coefficient 1. The [`witness`] module turns
//! every constructive argument about such dependences into a procedure that
//! builds the polynomial, and re-checks it with exact arithmetic.

pub mod error;
pub mod exact;
pub mod laurent;
pub mod order;
pub mod rings;
pub mod scalar;
pub mod suite;
pub mod text;
pub mod witness;

pub use error::{Error, Result};
pub use exact::{QuadScalar, RatFun1, RatFun2};
pub use laurent::{ExpVec, LaurentPoly, WeightVector};
pub use order::{IntMatrix, OrderClass, OrderMatrix, ScaledInverse};
pub use rings::{FracElem, MonoidElem, RElem, VElem, WElem};
pub use scalar::{Domain, Linearize, Rational, Scalar};
pub use witness::{Witness, WitnessKind};
pub use suite::{run_suite, Report, SuiteName};
pub use text::RingKind;
