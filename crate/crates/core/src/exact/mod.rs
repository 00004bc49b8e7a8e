//! Exact arithmetic kernels: Q(√2), Q[u], Q(u), Q[u, v] and Q(u, v).

mod bipoly;
mod modular;
mod quad;
mod ratfun1;
mod ratfun2;
mod unipoly;

pub use bipoly::BiPoly;
pub(crate) use modular::gcd as modular_gcd;
pub use quad::{quad_floor_ratio, quad_sign, QuadScalar, Rounding};
pub use ratfun1::{is_rational_constant, RatFun1};
pub use ratfun2::{eval_at_v0, v_adic_valuation, RatFun2};
pub use unipoly::UniPoly;
