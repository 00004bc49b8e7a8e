//! Bounded exhaustive searches for witnesses and homogeneous relations.
//!
//! A candidate fixes one monomial `t` with a designated coefficient and
//! draws the remaining coefficients from a finite pool. Vanishing is a
//! linear condition on hashable normal forms, so each family is searched by
//! meeting in the middle: sums over the first half of the free monomials
//! are tabulated, sums over the second half are looked up.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{checked, Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::laurent::{ExpVec, LaurentPoly};
use crate::order::{classify, compare_exponents, OrderMatrix};
use crate::scalar::{Domain, Linearize};

/// Exponent vectors in `n` variables of total degree `≤ d`, by total degree
/// and then lexicographically.
fn monomials_up_to(n: usize, d: u32) -> Vec<ExpVec> {
    fn fill(n: usize, left: u32, prefix: &mut Vec<i64>, out: &mut Vec<ExpVec>) {
        if prefix.len() == n {
            out.push(ExpVec::from_i64(prefix));
            return;
        }
        for x in 0..=left as i64 {
            prefix.push(x);
            fill(n, left - x as u32, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, d, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
    out
}

/// Forms of `p·a^e` for each monomial `e` (outer) and pool entry `p`
/// (inner), over one common denominator.
fn term_forms<T: Linearize>(elements: &[T], monomials: &[ExpVec], pool: &[T]) -> Result<Vec<Vec<T::Form>>> {
    let mut values = Vec::with_capacity(monomials.len() * pool.len());
    for e in monomials {
        let power = LaurentPoly::monomial(T::one(), e.clone()).evaluate(elements)?;
        values.extend(pool.iter().map(|p| p.clone() * power.clone()));
    }
    let forms = T::common_forms(&values);
    Ok(forms.chunks(pool.len().max(1)).map(<[_]>::to_vec).collect())
}

/// Calls `visit` on every choice tuple in lexicographic order with the sum
/// of the chosen forms; stops when `visit` returns `true`.
fn enumerate<F: Clone + Zero>(choices: &[Vec<F>], visit: &mut impl FnMut(&[usize], &F) -> bool) -> bool {
    fn go<F: Clone + Zero>(
        choices: &[Vec<F>],
        idx: &mut Vec<usize>,
        acc: &F,
        visit: &mut impl FnMut(&[usize], &F) -> bool,
    ) -> bool {
        let depth = idx.len();
        if depth == choices.len() {
            return visit(idx, acc);
        }
        for (k, f) in choices[depth].iter().enumerate() {
            idx.push(k);
            let stop = go(choices, idx, &(acc.clone() + f.clone()), visit);
            idx.pop();
            if stop {
                return true;
            }
        }
        false
    }
    go(choices, &mut Vec::with_capacity(choices.len()), &F::zero(), visit)
}

/// Indices `i_k` with `target + Σ_k choices[k][i_k] = 0`, if any. The hit
/// returned is the first in the order of the second-half tuples, paired with
/// the first matching first-half tuple.
fn find_combination<F>(target: &F, choices: &[Vec<F>]) -> Option<Vec<usize>>
where
    F: Clone + Eq + std::hash::Hash + Zero + std::ops::Neg<Output = F>,
{
    let (left, right) = choices.split_at(choices.len() / 2);
    let mut table: HashMap<F, Vec<usize>> = HashMap::new();
    enumerate(left, &mut |idx, sum| {
        table.entry(sum.clone()).or_insert_with(|| idx.to_vec());
        false
    });
    let mut found = None;
    enumerate(right, &mut |idx, sum| {
        let need = -(target.clone() + sum.clone());
        if let Some(first) = table.get(&need) {
            found = Some(first.iter().chain(idx).copied().collect());
            return true;
        }
        false
    });
    found
}

/// The polynomial with `lead` at `t` and `pool[idx_k]` at `free[k]`.
fn assemble<T: Domain>(n: usize, t: &ExpVec, lead: &T, free: &[&ExpVec], idx: &[usize], pool: &[T]) -> Result<LaurentPoly<T>> {
    let terms = std::iter::once((t.clone(), lead.clone()))
        .chain(free.iter().zip(idx).map(|(e, &k)| ((*e).clone(), pool[k].clone())));
    LaurentPoly::from_terms(n, terms)
}

/// Searches every polynomial of total degree `≤ degree_bound` with
/// coefficients from `pool` for a witness under `m`; `None` means no
/// candidate in the family is one.
pub fn independence_search<T: Domain + Linearize>(
    elements: &[T],
    m: &OrderMatrix,
    degree_bound: u32,
    pool: &[T],
) -> Result<Option<Witness<T>>> {
    let n = elements.len();
    if m.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.cols() });
    }
    let Some(one) = pool.iter().position(|p| p.is_one()) else {
        return Ok(None);
    };
    let kind = if classify(m).is_total_order { WitnessKind::OrderWitness } else { WitnessKind::PreorderWitness };
    let monomials = monomials_up_to(n, degree_bound);
    let forms = term_forms(elements, &monomials, pool)?;
    for (ti, t) in monomials.iter().enumerate() {
        // t is minimal with coefficient 1: smaller monomials are absent.
        let mut free = Vec::new();
        let mut choices = Vec::new();
        for (ei, e) in monomials.iter().enumerate() {
            if ei != ti && compare_exponents(m, &e.0, &t.0)? != Ordering::Less {
                free.push(e);
                choices.push(forms[ei].clone());
            }
        }
        if let Some(idx) = find_combination(&forms[ti][one], &choices) {
            let poly = assemble(n, t, &T::one(), &free, &idx, pool)?;
            let order = m.clone();
            return checked(Witness { poly, order, elements: elements.to_vec(), kind }).map(Some);
        }
    }
    Ok(None)
}

/// Searches homogeneous polynomials of degree `1..=degree_bound` with
/// coefficients from `pool` and at least one unit coefficient for one
/// vanishing at `elements`.
pub fn homogeneous_relation_search<T: Domain + Linearize>(
    elements: &[T],
    degree_bound: u32,
    pool: &[T],
) -> Result<Option<LaurentPoly<T>>> {
    let n = elements.len();
    let units: Vec<usize> = (0..pool.len()).filter(|&k| pool[k].is_unit()).collect();
    for d in 1..=degree_bound {
        let monomials: Vec<ExpVec> =
            monomials_up_to(n, d).into_iter().filter(|e| e.total_degree() == BigInt::from(d)).collect();
        let forms = term_forms(elements, &monomials, pool)?;
        for (ti, t) in monomials.iter().enumerate() {
            let free: Vec<&ExpVec> = monomials.iter().enumerate().filter(|&(i, _)| i != ti).map(|(_, e)| e).collect();
            let choices: Vec<Vec<T::Form>> =
                (0..monomials.len()).filter(|&i| i != ti).map(|i| forms[i].clone()).collect();
            for &u in &units {
                if let Some(idx) = find_combination(&forms[ti][u], &choices) {
                    let poly = assemble(n, t, &pool[u], &free, &idx, pool)?;
                    if !poly.evaluate(elements)?.is_zero() {
                        return Err(Error::Unverified(format!("{poly} does not vanish")));
                    }
                    return Ok(Some(poly));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::exact::{QuadScalar, RatFun1};
    use crate::rings::{RElem, VElem};
    use crate::witness::verify_witness;

    fn v(alpha: QuadScalar) -> VElem {
        VElem::v_pow(alpha)
    }

    fn signed<T: Domain>(xs: &[T]) -> Vec<T> {
        let mut pool = vec![T::zero()];
        for x in xs {
            pool.push(x.clone());
            pool.push(-x.clone());
        }
        pool
    }

    #[test]
    fn monomial_order() {
        let ms: Vec<String> = monomials_up_to(2, 2).iter().map(ToString::to_string).collect();
        assert_eq!(ms, ["(0,0)", "(0,1)", "(1,0)", "(0,2)", "(1,1)", "(2,0)"]);
    }

    #[test]
    fn finds_equal_elements() {
        let x = v(QuadScalar::one());
        let m = OrderMatrix::from_ints(&[&[1, 1]]).unwrap();
        let w = independence_search(&[x.clone(), x], &m, 1, &signed(&[VElem::one()])).unwrap().unwrap();
        assert!(verify_witness(&w).passed);
        assert_eq!(w.poly.to_string(), "-X1+X2");
    }

    #[test]
    fn finds_value_pair_witness() {
        let a = v(QuadScalar::from_int(2));
        let b = v(QuadScalar::one());
        let w = independence_search(&[a, b], &OrderMatrix::lex(2), 2, &signed(&[VElem::one()])).unwrap().unwrap();
        assert!(verify_witness(&w).passed);
    }

    #[test]
    fn r_pair_independent() {
        let vv = RElem::v_pow(QuadScalar::one());
        let uv = &RElem::constant(RatFun1::u()) * &vv;
        let pool = signed(&[RElem::one(), vv.clone(), uv.clone()]);
        let m = OrderMatrix::from_ints(&[&[1, 1]]).unwrap();
        assert!(independence_search(&[vv.clone(), uv.clone()], &m, 2, &pool).unwrap().is_none());
        assert!(homogeneous_relation_search(&[vv, uv], 2, &pool).unwrap().is_none());
    }

    #[test]
    fn homogeneous_relation_found_in_v() {
        let a = v(QuadScalar::from_int(2));
        let b = v(QuadScalar::one());
        let pool = signed(&[VElem::one(), b.clone()]);
        let p = homogeneous_relation_search(&[a, b], 1, &pool).unwrap().unwrap();
        assert_eq!(p.to_string(), "X1-v*X2");
    }

    #[test]
    fn pool_without_one() {
        let x = v(QuadScalar::one());
        let m = OrderMatrix::lex(2);
        assert!(independence_search(&[x.clone(), x.clone()], &m, 2, &[VElem::zero(), x]).unwrap().is_none());
    }
}
