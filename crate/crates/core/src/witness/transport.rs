//! Moving witnesses along monomial maps: an order witness for the power
//! products `b_i = ∏_j a_j^{M_{j,i}}` becomes a lex witness for the `a_j`.

use super::{checked, OrderOracle, Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::order::{IntMatrix, OrderMatrix};
use crate::scalar::{Domain, Scalar};

/// `b_i = ∏_j a_j^{M_{j,i}}`, in the ambient field.
pub fn power_products<T: Scalar>(base: &[T], m: &IntMatrix) -> Result<Vec<T>> {
    if m.rows().len() != base.len() {
        return Err(Error::DimensionMismatch { expected: base.len(), found: m.rows().len() });
    }
    (0..m.cols())
        .map(|i| {
            base.iter().enumerate().try_fold(T::one(), |acc, (j, a)| {
                let e = m.get(j, i);
                let p = a.pow_big(e).ok_or_else(|| Error::NotInvertible(format!("{a} raised to {e}")))?;
                Ok(acc * p)
            })
        })
        .collect()
}

/// The integer matrix with exactly the entries of `m`.
pub(crate) fn exact_integers(m: &OrderMatrix) -> Result<IntMatrix> {
    let rows = m
        .entries()
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.as_integer().ok_or_else(|| Error::InvalidMatrix(format!("{m} has non-integer entry {x}"))))
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::new(rows)
}

/// Square, nonnegative, integer and of full rank.
pub(crate) fn transport_matrix(m: &OrderMatrix) -> Result<IntMatrix> {
    let int = exact_integers(m)?;
    if !int.is_square() {
        return Err(Error::InvalidMatrix(format!("{m} is not square")));
    }
    if !int.is_nonnegative() {
        return Err(Error::InvalidMatrix(format!("{m} has negative entries")));
    }
    if m.rank() != m.cols() {
        return Err(Error::Singular);
    }
    Ok(int)
}

/// `φ_M(P)` as a lex witness for `base`, where `w` is an order witness
/// under `M` for the power products of `base`.
pub fn transport_witness_to_lex<T: Domain>(w: &Witness<T>, base: &[T]) -> Result<Witness<T>> {
    let m = transport_matrix(&w.order)?;
    if w.kind != WitnessKind::OrderWitness {
        return Err(Error::Precondition("transport needs an order witness".into()));
    }
    if power_products(base, &m)? != w.elements {
        return Err(Error::Precondition(format!(
            "witness elements are not the power products of the base under {}",
            w.order
        )));
    }
    checked(Witness {
        poly: w.poly.apply_monomial_map(&m)?,
        order: OrderMatrix::lex(base.len()),
        elements: base.to_vec(),
        kind: WitnessKind::OrderWitness,
    })
}

/// A lex witness for `a` through an `M`-witness for the power products.
pub fn tdim_witness<T: Domain>(m: &OrderMatrix, a: &[T], oracle: &impl OrderOracle<T>) -> Result<Witness<T>> {
    let int = transport_matrix(m)?;
    let b = power_products(a, &int)?;
    let w = oracle.order_witness(m, &b)?;
    transport_witness_to_lex(&w.reinterpret(m.clone(), WitnessKind::OrderWitness), a)
}
