//! Preorder witnesses in `W` from the integer system
//! `αe + βf ≤ 0`, `A·(e, f) ≥_lex (0, 0)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{checked, Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::exact::QuadScalar;
use crate::laurent::{ExpVec, LaurentPoly};
use crate::order::{normalize_rows, OrderMatrix};
use crate::rings::WElem;
use crate::scalar::Scalar;

/// A solved instance: `order_row = (α, β)`, `value_matrix = ((i₁,i₂),(j₁,j₂))`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EqMASystem {
    pub order_row: (QuadScalar, QuadScalar),
    pub value_matrix: [[i64; 2]; 2],
    pub solution: (i64, i64),
}

fn weight(alpha: &QuadScalar, beta: &QuadScalar, x: (i64, i64)) -> QuadScalar {
    alpha.mul_int(&BigInt::from(x.0)) + beta.mul_int(&BigInt::from(x.1))
}

fn dot(r: [i64; 2], x: (i64, i64)) -> i64 {
    r[0] * x.0 + r[1] * x.1
}

impl EqMASystem {
    /// Both inequalities, checked exactly.
    pub fn is_satisfied(&self) -> bool {
        let (alpha, beta) = &self.order_row;
        let x = self.solution;
        let [r, j] = self.value_matrix;
        x != (0, 0)
            && !weight(alpha, beta, x).is_positive()
            && (dot(r, x), dot(j, x)) >= (0, 0)
    }
}

/// `r = λ·(α, β)` for some `λ > 0`.
fn positive_multiple(r: [i64; 2], alpha: &QuadScalar, beta: &QuadScalar) -> bool {
    let cross = beta.mul_int(&BigInt::from(r[0])) - alpha.mul_int(&BigInt::from(r[1]));
    r != [0, 0] && r[0] >= 0 && r[1] >= 0 && cross.is_zero()
}

/// The first integer point, by growing max-norm shells, with
/// `αe + βf < 0` and `r·(e, f) > 0`. Such points exist whenever `r` is not
/// a nonnegative multiple of `(α, β)`.
fn strict_scan(alpha: &QuadScalar, beta: &QuadScalar, r: [i64; 2]) -> (i64, i64) {
    for radius in 1i64.. {
        for e in -radius..=radius {
            for f in -radius..=radius {
                if e.abs().max(f.abs()) != radius {
                    continue;
                }
                if dot(r, (e, f)) > 0 && weight(alpha, beta, (e, f)).is_negative() {
                    return (e, f);
                }
            }
        }
    }
    unreachable!("the open cone contains integer points")
}

/// `(r₂, −r₁)` reduced to primitive form.
fn orthogonal(r: [i64; 2]) -> (i64, i64) {
    let g = r[0].gcd(&r[1]).max(1);
    (r[1] / g, -r[0] / g)
}

/// Solves the system by the case analysis on the first row of `A`.
pub fn solve_eqma(alpha: &QuadScalar, beta: &QuadScalar, a: [[i64; 2]; 2]) -> Result<EqMASystem> {
    if !alpha.is_positive() || !beta.is_positive() {
        return Err(Error::NonPositive("order row entry"));
    }
    let [r, j] = a;
    let solution = if r == [0, 0] {
        if j == [0, 0] {
            (-1, -1)
        } else if positive_multiple(j, alpha, beta) {
            orthogonal(j)
        } else {
            strict_scan(alpha, beta, j)
        }
    } else if positive_multiple(r, alpha, beta) {
        // Equal ratios: stay on the line αe + βf = 0 and fix the sign with j.
        let x = orthogonal(r);
        if dot(j, x) < 0 {
            (-x.0, -x.1)
        } else {
            x
        }
    } else {
        strict_scan(alpha, beta, r)
    };
    let system = EqMASystem { order_row: (alpha.clone(), beta.clone()), value_matrix: a, solution };
    debug_assert!(system.is_satisfied());
    Ok(system)
}

/// Reduces a two-column matrix to one positive row defining the same
/// preorder. Rational total orders are rejected: the construction does not
/// cover them.
pub fn reduce_w_matrix(m: &OrderMatrix) -> Result<(QuadScalar, QuadScalar)> {
    if m.cols() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: m.cols() });
    }
    let m = normalize_rows(m)?;
    let first = m.row(0);
    let (alpha, beta) = (first[0].clone(), first[1].clone());
    let rational_order = || {
        Err(Error::Unsupported(format!("{m} defines a rational monomial order")))
    };
    if !alpha.is_positive() || !beta.is_positive() {
        return rational_order();
    }
    let ratio = alpha.clone() / beta.clone();
    if !ratio.is_rational() {
        return Ok((alpha, beta));
    }
    // Ties along (β, −α): any later row breaking them makes a rational order.
    let breaks_tie = m.entries()[1..]
        .iter()
        .any(|row| !(row[0].clone() * beta.clone() - row[1].clone() * alpha.clone()).is_zero());
    if breaks_tie {
        return rational_order();
    }
    Ok((alpha, beta))
}

/// `X^{e₁}Y^{f₁} − c·X^{e₂}Y^{f₂}` with `c = a^e b^f` for a solution
/// `(e, f) = (e₁ − e₂, f₁ − f₂)`.
pub fn witness_from_eqma(m: &OrderMatrix, a: &WElem, b: &WElem, solution: (i64, i64)) -> Result<Witness<WElem>> {
    let (e, f) = solution;
    let c = a.pow_i(e).ok_or(Error::ZeroInput("a"))? * b.pow_i(f).ok_or(Error::ZeroInput("b"))?;
    let plus = ExpVec::from_i64(&[e.max(0), f.max(0)]);
    let minus = ExpVec::from_i64(&[(-e).max(0), (-f).max(0)]);
    let poly = LaurentPoly::from_terms(2, [(plus, WElem::one()), (minus, -c)])?;
    checked(Witness {
        poly,
        order: m.clone(),
        elements: vec![a.clone(), b.clone()],
        kind: WitnessKind::PreorderWitness,
    })
}

/// The preorder witness for nonzero `a`, `b` in `W`.
pub fn witness_w_preorder(m: &OrderMatrix, a: &WElem, b: &WElem) -> Result<Witness<WElem>> {
    let (alpha, beta) = reduce_w_matrix(m)?;
    let (i1, j1) = a.wval().ok_or(Error::ZeroInput("a"))?;
    let (i2, j2) = b.wval().ok_or(Error::ZeroInput("b"))?;
    let system = solve_eqma(&alpha, &beta, [[i1, i2], [j1, j2]])?;
    witness_from_eqma(m, a, b, system.solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::exact::RatFun2;
    use crate::rings::random::{random_w, seeded};
    use crate::witness::verify_witness;

    fn one_sqrt2() -> (QuadScalar, QuadScalar) {
        (QuadScalar::one(), QuadScalar::sqrt2())
    }

    #[test]
    fn irrational_row() {
        let (alpha, beta) = one_sqrt2();
        let s = solve_eqma(&alpha, &beta, [[1, 1], [0, 1]]).unwrap();
        assert!(s.is_satisfied());
        assert_eq!(s.solution, (4, -3));
        let other = EqMASystem { solution: (6, -5), ..s };
        assert!(other.is_satisfied());
    }

    #[test]
    fn equal_ratio_rows() {
        let one = QuadScalar::one();
        let s = solve_eqma(&one, &one, [[1, 1], [0, 1]]).unwrap();
        assert_eq!(s.solution, (-1, 1));
        let s = solve_eqma(&one, &one, [[1, 1], [1, 1]]).unwrap();
        assert_eq!(s.solution, (1, -1));
        assert!(solve_eqma(&-one.clone(), &one, [[1, 1], [1, 1]]).is_err());
    }

    #[test]
    fn degenerate_rows() {
        let (alpha, beta) = one_sqrt2();
        for a in [[[0, 0], [0, 0]], [[0, 0], [3, -2]], [[0, 0], [1, 0]], [[-2, -3], [5, 1]], [[2, 0], [0, 0]]] {
            assert!(solve_eqma(&alpha, &beta, a).unwrap().is_satisfied(), "{a:?}");
        }
        let two = QuadScalar::from_int(2);
        let one = QuadScalar::one();
        assert!(solve_eqma(&two, &one, [[0, 0], [4, 2]]).unwrap().is_satisfied());
    }

    #[test]
    fn spec_witnesses() {
        let m = OrderMatrix::new(vec![vec![QuadScalar::one(), QuadScalar::sqrt2()]]).unwrap();
        let a = WElem::v();
        let b = WElem::new(RatFun2::v() * RatFun2::u());
        let w = witness_from_eqma(&m, &a, &b, (6, -5)).unwrap();
        assert_eq!(w.poly.to_string(), "X1^6-(v/u^5)*X2^5");
        assert!(witness_w_preorder(&m, &a, &b).is_ok());

        let m11 = OrderMatrix::from_ints(&[&[1, 1]]).unwrap();
        let w = witness_w_preorder(&m11, &a, &a).unwrap();
        assert_eq!(w.poly.to_string(), "X1-X2");
        let w = witness_w_preorder(&m11, &a, &b).unwrap();
        assert_eq!(w.poly.to_string(), "-u*X1+X2");
        assert!(witness_w_preorder(&m11, &WElem::zero(), &a).is_err());
    }

    #[test]
    fn matrix_reduction() {
        let lex = OrderMatrix::lex(2);
        assert!(reduce_w_matrix(&lex).is_err());
        let graded = OrderMatrix::from_ints(&[&[1, 1], &[1, 0]]).unwrap();
        assert!(reduce_w_matrix(&graded).is_err());
        let rank_one = OrderMatrix::from_ints(&[&[1, 1], &[2, 2]]).unwrap();
        assert_eq!(reduce_w_matrix(&rank_one).unwrap(), (QuadScalar::one(), QuadScalar::one()));
        let irr = OrderMatrix::new(vec![
            vec![QuadScalar::one(), QuadScalar::sqrt2()],
            vec![QuadScalar::one(), QuadScalar::zero()],
        ])
        .unwrap();
        assert_eq!(reduce_w_matrix(&irr).unwrap(), one_sqrt2());
    }

    #[test]
    fn random_pairs_verify() {
        let mut rng = seeded(5);
        let mats = [
            OrderMatrix::from_ints(&[&[1, 1]]).unwrap(),
            OrderMatrix::from_ints(&[&[2, 1]]).unwrap(),
            OrderMatrix::new(vec![vec![QuadScalar::one(), QuadScalar::sqrt2()]]).unwrap(),
        ];
        for m in &mats {
            for _ in 0..10 {
                let (a, b) = (random_w(&mut rng), random_w(&mut rng));
                let w = witness_w_preorder(m, &a, &b).unwrap();
                assert!(verify_witness(&w).passed);
            }
        }
    }
}
