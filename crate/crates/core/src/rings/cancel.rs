//! Cancelling common factors of fractions over `Q`.
//!
//! All exponents of a pair `num/den` lie in `(1/N)(Z + Z√2)` for a common
//! `N`, so after a monomial shift both are polynomials in `s = v^{1/N}` and
//! `t = v^{√2/N}`, and the bivariate gcd applies.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::MonoidElem;
use crate::exact::{modular_gcd, BiPoly, QuadScalar, UniPoly};
use crate::scalar::Rational;

/// Dense grids beyond this side length are left alone.
const MAX_SPAN: i64 = 256;

struct Lattice {
    scale: BigInt,
}

impl Lattice {
    fn of(elems: &[&MonoidElem<Rational>]) -> Self {
        let scale = elems
            .iter()
            .flat_map(|x| x.terms())
            .fold(BigInt::one(), |acc, (a, _)| acc.lcm(a.rat.denom()).lcm(a.irr.denom()));
        Lattice { scale }
    }

    fn coords(&self, a: &QuadScalar) -> Option<(i64, i64)> {
        let s = Rational::from_integer(self.scale.clone());
        Some(((&a.rat * &s).to_integer().to_i64()?, (&a.irr * &s).to_integer().to_i64()?))
    }

    fn exponent(&self, i: i64, j: i64) -> QuadScalar {
        let s = Rational::from_integer(self.scale.clone());
        QuadScalar::new(Rational::from_integer(i.into()) / &s, Rational::from_integer(j.into()) / s)
    }

    /// The polynomial in `s` (as `u`) and `t` (as `v`) with the lowest
    /// coordinates shifted to 0, plus that shift.
    fn to_bipoly(&self, x: &MonoidElem<Rational>) -> Option<(BiPoly, (i64, i64))> {
        let pts = x
            .terms()
            .map(|(a, c)| Some((self.coords(a)?, c)))
            .collect::<Option<Vec<_>>>()?;
        let lo_i = pts.iter().map(|((i, _), _)| *i).min()?;
        let lo_j = pts.iter().map(|((_, j), _)| *j).min()?;
        let hi_i = pts.iter().map(|((i, _), _)| *i).max()?;
        let hi_j = pts.iter().map(|((_, j), _)| *j).max()?;
        if hi_i - lo_i > MAX_SPAN || hi_j - lo_j > MAX_SPAN {
            return None;
        }
        let mut grid = vec![vec![Rational::zero(); (hi_i - lo_i + 1) as usize]; (hi_j - lo_j + 1) as usize];
        for ((i, j), c) in pts {
            grid[(j - lo_j) as usize][(i - lo_i) as usize] = c.clone();
        }
        Some((BiPoly::new(grid.into_iter().map(UniPoly::new).collect()), (lo_i, lo_j)))
    }

    fn from_bipoly(&self, p: &BiPoly, shift: (i64, i64)) -> MonoidElem<Rational> {
        MonoidElem::from_terms(p.coeffs().iter().enumerate().flat_map(|(j, c)| {
            c.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(move |(i, x)| (self.exponent(i as i64 + shift.0, j as i64 + shift.1), x.clone()))
        }))
    }
}

/// `(num/g, den/g)` for the gcd `g` of `num` and `den`, when it is not a
/// monomial; `None` when nothing cancels or the supports are too spread.
pub(crate) fn cancel_rational(
    num: &MonoidElem<Rational>,
    den: &MonoidElem<Rational>,
) -> Option<(MonoidElem<Rational>, MonoidElem<Rational>)> {
    if num.len() < 2 || den.len() < 2 {
        return None;
    }
    let lattice = Lattice::of(&[num, den]);
    let (pn, sn) = lattice.to_bipoly(num)?;
    let (pd, sd) = lattice.to_bipoly(den)?;
    let g = modular_gcd(&pn, &pd)?;
    if g.coeffs().iter().map(|c| c.coeffs().iter().filter(|x| !x.is_zero()).count()).sum::<usize>() < 2 {
        return None;
    }
    let qn = pn.exact_div(&g)?;
    let qd = pd.exact_div(&g)?;
    Some((lattice.from_bipoly(&qn, sn), lattice.from_bipoly(&qd, sd)))
}
