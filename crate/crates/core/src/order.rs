//! Monomial preorders given by matrices over Q(√2).
//!
//! A matrix `M` with `n` columns compares exponent vectors `e`, `f` by the
//! lexicographic comparison of `M·e` and `M·f`. Ties between distinct
//! vectors are allowed; they are reported as [`Ordering::Equal`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{quad_floor_ratio, QuadScalar, Rounding};
use crate::scalar::{Rational, Scalar};

/// An `m × n` matrix of [`QuadScalar`] entries defining a monomial preorder.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct OrderMatrix {
    entries: Vec<Vec<QuadScalar>>,
}

/// Classification flags of an order matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct OrderClass {
    /// Every entry is rational.
    pub is_rational: bool,
    /// The first row is strictly positive.
    pub is_graded: bool,
    /// No two distinct integer vectors tie.
    pub is_total_order: bool,
}

/// A dense integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
}

/// `L = k·M⁻¹` with `k` the least positive integer making `L` integral.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledInverse {
    pub k: BigInt,
    pub l: IntMatrix,
}

impl OrderMatrix {
    pub fn new(entries: Vec<Vec<QuadScalar>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        if entries.is_empty() || cols == 0 {
            return Err(Error::InvalidMatrix("matrix must have at least one row and column".into()));
        }
        if let Some(bad) = entries.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(OrderMatrix { entries })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| QuadScalar::from_int(x)).collect())
                .collect(),
        )
    }

    /// The lexicographic order with `X_1 > X_2 > ... > X_n`.
    pub fn lex(n: usize) -> Self {
        OrderMatrix {
            entries: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { QuadScalar::one() } else { QuadScalar::zero() })
                        .collect()
                })
                .collect(),
        }
    }

    /// The lexicographic order with the variables ranked by `priority`:
    /// `priority[0]` is the greatest variable.
    pub fn lex_with_priority(priority: &[usize]) -> Self {
        let n = priority.len();
        OrderMatrix {
            entries: priority
                .iter()
                .map(|&p| {
                    (0..n)
                        .map(|j| if j == p { QuadScalar::one() } else { QuadScalar::zero() })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn entries(&self) -> &[Vec<QuadScalar>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[QuadScalar] {
        &self.entries[i]
    }

    pub fn is_lex(&self) -> bool {
        *self == Self::lex(self.cols())
    }

    /// `M·e` over Q(√2).
    pub fn apply(&self, e: &[BigInt]) -> Vec<QuadScalar> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(e)
                    .filter(|(_, x)| !x.is_zero())
                    .fold(QuadScalar::zero(), |acc, (m, x)| acc + m.mul_int(x))
            })
            .collect()
    }

    /// Rank over Q(√2).
    pub fn rank(&self) -> usize {
        rank_of(self.entries.clone())
    }

    /// Rational matrix with the same kernel on Q^n: the rational parts
    /// stacked over the √2 parts.
    fn rational_split(&self) -> Vec<Vec<Rational>> {
        let mut rows: Vec<Vec<Rational>> =
            self.entries.iter().map(|r| r.iter().map(|x| x.rat.clone()).collect()).collect();
        rows.extend(self.entries.iter().map(|r| r.iter().map(|x| x.irr.clone()).collect()));
        rows
    }
}

impl fmt::Display for OrderMatrix {
    /// Row-major text: rows joined by `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

/// Gaussian elimination rank over any exact field.
fn rank_of<F: Scalar>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() * inv.clone();
            for c in col..ncols {
                let delta = factor.clone() * rows[rank][c].clone();
                rows[r][c] = rows[r][c].clone() - delta;
            }
        }
        rank += 1;
    }
    rank
}

/// All columns nonzero with a positive first nonzero entry.
pub fn validate_matrix(m: &OrderMatrix) -> bool {
    (0..m.cols()).all(|j| {
        m.entries
            .iter()
            .map(|row| &row[j])
            .find(|x| !x.is_zero())
            .is_some_and(QuadScalar::is_positive)
    })
}

/// Adds positive integer multiples of earlier rows to later rows until all
/// entries are nonnegative. The preorder is unchanged.
pub fn normalize_rows(m: &OrderMatrix) -> Result<OrderMatrix> {
    if !validate_matrix(m) {
        return Err(Error::InvalidMatrix(format!("{m} is not a valid preorder matrix")));
    }
    let mut out = m.entries.clone();
    for r in 1..out.len() {
        // Sum of the (already nonnegative) rows above; positive in every
        // column whose first nonzero entry lies above row r.
        let above = (0..m.cols())
            .map(|j| out[..r].iter().fold(QuadScalar::zero(), |acc, row| acc + row[j].clone()))
            .collect::<Vec<_>>();
        let mut t = BigInt::zero();
        for j in 0..m.cols() {
            if out[r][j].is_negative() {
                let need = quad_floor_ratio(&-out[r][j].clone(), &above[j], Rounding::Ceil)?;
                t = t.max(need);
            }
        }
        if t.is_positive() {
            for j in 0..m.cols() {
                out[r][j] = out[r][j].clone() + above[j].mul_int(&t);
            }
        }
    }
    Ok(OrderMatrix { entries: out })
}

pub fn classify(m: &OrderMatrix) -> OrderClass {
    let is_rational = m.entries.iter().flatten().all(QuadScalar::is_rational);
    let is_graded = m.entries[0].iter().all(QuadScalar::is_positive);
    // M·e = 0 for rational e iff both the rational and √2 parts annihilate e.
    let is_total_order = rank_of(m.rational_split()) == m.cols();
    OrderClass { is_rational, is_graded, is_total_order }
}

/// Compares exponent vectors under `m`; `Equal` means a tie.
pub fn compare_exponents(m: &OrderMatrix, e: &[BigInt], f: &[BigInt]) -> Result<Ordering> {
    for v in [e, f] {
        if v.len() != m.cols() {
            return Err(Error::DimensionMismatch { expected: m.cols(), found: v.len() });
        }
    }
    let diff: Vec<BigInt> = e.iter().zip(f).map(|(a, b)| a - b).collect();
    Ok(compare_difference(m, &diff))
}

/// Sign of `e - f` under `m`, given the difference vector.
pub(crate) fn compare_difference(m: &OrderMatrix, diff: &[BigInt]) -> Ordering {
    if diff.iter().all(Zero::is_zero) {
        return Ordering::Equal;
    }
    for row in &m.entries {
        let val = row
            .iter()
            .zip(diff)
            .filter(|(_, x)| !x.is_zero())
            .fold(QuadScalar::zero(), |acc, (a, x)| acc + a.mul_int(x));
        match val.sign() {
            -1 => return Ordering::Less,
            1 => return Ordering::Greater,
            _ => {}
        }
    }
    Ordering::Equal
}

/// Drops rows dependent on earlier ones, then appends unit rows (in index
/// order, skipping those that do not raise the rank) until the matrix is
/// square of rank `n`. Strict comparisons are preserved; ties may be broken.
pub fn refine_to_order(m: &OrderMatrix) -> Result<OrderMatrix> {
    if !validate_matrix(m) {
        return Err(Error::InvalidMatrix(format!("{m} is not a valid preorder matrix")));
    }
    if !classify(m).is_rational {
        return Err(Error::Irrational);
    }
    let n = m.cols();
    let mut kept: Vec<Vec<QuadScalar>> = Vec::new();
    for row in &m.entries {
        let mut trial = kept.clone();
        trial.push(row.clone());
        if rank_of(trial.clone()) > kept.len() {
            kept = trial;
        }
    }
    for i in 0..n {
        if kept.len() == n {
            break;
        }
        let unit: Vec<QuadScalar> =
            (0..n).map(|j| if i == j { QuadScalar::one() } else { QuadScalar::zero() }).collect();
        let mut trial = kept.clone();
        trial.push(unit);
        if rank_of(trial.clone()) > kept.len() {
            kept = trial;
        }
    }
    Ok(OrderMatrix { entries: kept })
}

/// Nonnegative integer matrix defining the same preorder: rows are made
/// nonnegative, then each row is multiplied by the lcm of its denominators.
pub fn integerize(m: &OrderMatrix) -> Result<IntMatrix> {
    if !classify(m).is_rational {
        return Err(Error::Irrational);
    }
    let normalized = normalize_rows(m)?;
    let rows = normalized
        .entries
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.rat.denom()));
            row.iter().map(|x| (&x.rat * Rational::from_integer(lcm.clone())).to_integer()).collect()
        })
        .collect();
    Ok(IntMatrix { rows })
}

/// `k·M⁻¹` for the least positive `k` making it integral.
pub fn inverse_scaled(m: &IntMatrix) -> Result<ScaledInverse> {
    let n = m.rows.len();
    if m.rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: m.cols() });
    }
    // Gauss-Jordan on [M | I].
    let mut aug: Vec<Vec<Rational>> = m
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .map(|x| Rational::from_integer(x.clone()))
                .chain((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).ok_or(Error::Singular)?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            for c in 0..2 * n {
                let delta = &factor * &aug[col][c];
                aug[r][c] -= delta;
            }
        }
    }
    let inverse: Vec<&[Rational]> = aug.iter().map(|r| &r[n..]).collect();
    let k = inverse.iter().flat_map(|r| r.iter()).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let kr = Rational::from_integer(k.clone());
    let l = inverse
        .iter()
        .map(|r| r.iter().map(|x| (x * &kr).to_integer()).collect())
        .collect();
    Ok(ScaledInverse { k, l: IntMatrix { rows: l } })
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::InvalidMatrix("empty integer matrix".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(IntMatrix { rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            rows: (0..n)
                .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
                .collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.rows.iter().flatten().all(|x| !x.is_negative())
    }

    pub fn mul_vec(&self, e: &[BigInt]) -> Vec<BigInt> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(e).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        let n = rhs.cols();
        IntMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| {
                    (0..n)
                        .map(|j| r.iter().zip(&rhs.rows).map(|(a, row)| a * &row[j]).sum())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_order_matrix(&self) -> OrderMatrix {
        OrderMatrix {
            entries: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| QuadScalar::from_rational(Rational::from_integer(x.clone()))).collect())
                .collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}
