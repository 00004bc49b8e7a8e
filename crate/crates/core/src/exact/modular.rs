//! Bivariate polynomials over Q seen modulo word-sized primes: a
//! coprimality certificate and a gcd by evaluation, interpolation and
//! Chinese remaindering.
//!
//! Grids are indexed `[j][i]` for `u^i v^j`. Neither routine ever claims a
//! false result: the certificate only fires on degree-preserving
//! substitutions, and a modular gcd is returned only after it divides both
//! inputs exactly over Q.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{BiPoly, UniPoly};
use crate::scalar::Rational;

type Poly = Vec<u64>;
type Grid = Vec<Poly>;

/// Evaluation points tried by the certificate.
const POINTS: [u64; 3] = [3, 1_000_003, 987_654_321_987];

/// Primes spent on one gcd before giving up.
const MAX_PRIMES: usize = 48;

#[derive(Clone, Copy)]
struct Zp {
    p: u64,
}

impl Zp {
    fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn inv(self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    fn reduce_int(self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    fn reduce(self, x: &Rational) -> Option<u64> {
        let d = self.reduce_int(x.denom());
        (d != 0).then(|| self.mul(self.reduce_int(x.numer()), self.inv(d)))
    }

    fn grid(self, f: &BiPoly) -> Option<Grid> {
        f.coeffs()
            .iter()
            .map(|row| Some(trim(row.coeffs().iter().map(|c| self.reduce(c)).collect::<Option<Vec<_>>>()?)))
            .collect()
    }

    fn horner(self, row: &[u64], x: u64) -> u64 {
        row.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    fn eval_rows(self, g: &[Poly], x: u64) -> Poly {
        trim(g.iter().map(|row| self.horner(row, x)).collect())
    }

    fn scale(self, a: &[u64], c: u64) -> Poly {
        trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    fn monic(self, a: Poly) -> Poly {
        match a.last() {
            Some(&lc) => self.scale(&a, self.inv(lc)),
            None => a,
        }
    }

    fn poly_mul(self, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        trim(out)
    }

    fn div_rem(self, mut a: Poly, b: &[u64]) -> (Poly, Poly) {
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a);
        }
        let lc = self.inv(b[db]);
        let mut quot = vec![0; a.len() - db];
        while a.len() > db {
            let top = a.len() - 1;
            let c = self.mul(a[top], lc);
            quot[top - db] = c;
            for (k, &x) in b.iter().enumerate() {
                let idx = top - db + k;
                a[idx] = self.sub(a[idx], self.mul(c, x));
            }
            a = trim(a);
        }
        (trim(quot), a)
    }

    /// Monic gcd; empty only when both inputs are zero.
    fn gcd(self, mut a: Poly, mut b: Poly) -> Poly {
        while !b.is_empty() {
            let (_, r) = self.div_rem(a, &b);
            a = b;
            b = r;
        }
        self.monic(a)
    }

    fn content(self, g: &[Poly]) -> Poly {
        g.iter().fold(Vec::new(), |acc, row| self.gcd(acc, row.clone()))
    }

    fn primitive(self, g: &[Poly]) -> Grid {
        let c = self.content(g);
        g.iter().map(|row| self.div_rem(row.clone(), &c).0).collect()
    }

    /// Newton interpolation through `(xs[k], ys[k])` for small increasing
    /// nodes; `inverses[d]` is the inverse of `d`.
    fn interpolate(self, xs: &[u64], ys: &[u64], inverses: &[u64]) -> Poly {
        let n = xs.len();
        let mut dd = ys.to_vec();
        for level in 1..n {
            for k in (level..n).rev() {
                let num = self.sub(dd[k], dd[k - 1]);
                dd[k] = self.mul(num, inverses[(xs[k] - xs[k - level]) as usize]);
            }
        }
        let mut out = vec![0; n];
        for k in (0..n).rev() {
            // out = out·(u - xs[k]) + dd[k]
            let mut next = vec![0; n];
            for (i, &c) in out.iter().enumerate() {
                if i + 1 < n {
                    next[i + 1] = self.add(next[i + 1], c);
                }
                next[i] = self.sub(next[i], self.mul(c, xs[k]));
            }
            next[0] = self.add(next[0], dd[k]);
            out = next;
        }
        trim(out)
    }

    /// Gcd of primitive grids of positive degree in `v`, up to a scalar.
    fn primitive_gcd(self, a: &[Poly], b: &[Poly]) -> Option<Grid> {
        let (lca, lcb) = (a.last()?, b.last()?);
        let gamma = self.gcd(lca.clone(), lcb.clone());
        let width = |g: &[Poly]| g.iter().map(Vec::len).max().unwrap_or(1);
        let needed = gamma.len() + width(a).min(width(b)) - 1;
        let mut xs = Vec::new();
        let mut images: Vec<Poly> = Vec::new();
        let mut best = usize::MAX;
        for x in 1..(needed as u64 + 64) {
            if self.horner(lca, x) == 0 || self.horner(lcb, x) == 0 {
                continue;
            }
            let h = self.gcd(self.eval_rows(a, x), self.eval_rows(b, x));
            let d = h.len() - 1;
            if d == 0 {
                return Some(vec![vec![1]]);
            }
            if d > best {
                continue;
            }
            if d < best {
                best = d;
                xs.clear();
                images.clear();
            }
            xs.push(x);
            images.push(self.scale(&h, self.horner(&gamma, x)));
            if xs.len() == needed {
                let inverses: Vec<u64> = (0..=x).map(|d| if d == 0 { 0 } else { self.inv(d) }).collect();
                let rows: Grid = (0..=best)
                    .map(|j| self.interpolate(&xs, &images.iter().map(|h| h[j]).collect::<Vec<_>>(), &inverses))
                    .collect();
                return Some(self.primitive(&rows));
            }
        }
        None
    }

    /// The gcd of `f` and `g` mod `p`, with leading coefficient 1.
    fn gcd_image(self, f: &[Poly], g: &[Poly]) -> Option<Grid> {
        let (cf, cg) = (self.content(f), self.content(g));
        if cf.is_empty() || cg.is_empty() {
            return None;
        }
        let c = self.gcd(cf.clone(), cg.clone());
        let a: Grid = trim_rows(f.iter().map(|row| self.div_rem(row.clone(), &cf).0).collect());
        let b: Grid = trim_rows(g.iter().map(|row| self.div_rem(row.clone(), &cg).0).collect());
        let h = if a.len() == 1 || b.len() == 1 { vec![vec![1]] } else { self.primitive_gcd(&a, &b)? };
        let mut out: Grid = h.iter().map(|row| self.poly_mul(row, &c)).collect();
        let lc = *out.last()?.last()?;
        let norm = self.inv(lc);
        for row in &mut out {
            *row = self.scale(row, norm);
        }
        Some(out)
    }
}

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn trim_rows(mut g: Grid) -> Grid {
    while g.last().is_some_and(Vec::is_empty) {
        g.pop();
    }
    g
}

fn transpose(g: &[Poly]) -> Grid {
    let width = g.iter().map(Vec::len).max().unwrap_or(0);
    trim_rows((0..width).map(|i| trim(g.iter().map(|row| row.get(i).copied().unwrap_or(0)).collect())).collect())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if let Some(&b) = BASES.iter().find(|&&b| n.is_multiple_of(b)) {
        return n == b;
    }
    let f = Zp { p: n };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    BASES.iter().all(|&a| {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            return true;
        }
        (1..s).any(|_| {
            x = f.mul(x, x);
            x == n - 1
        })
    })
}

/// The largest primes below `2^62`, in decreasing order.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| (0..).map(|k| (1u64 << 62) - 1 - 2 * k).filter(|&n| is_prime(n)).take(MAX_PRIMES).collect())
}

/// `a/b` with `|a|, b <= sqrt(m/2)` and `a ≡ b·x (mod m)`, when one exists.
fn rational_reconstruct(x: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// `true` only when `f` and `g` certainly have a constant gcd over Q.
///
/// A substitution for one variable that keeps the leading coefficient in
/// the other and leaves a constant univariate gcd proves the gcd has degree
/// 0 in that other variable. Both directions together prove it constant.
pub(crate) fn certainly_coprime(f: &BiPoly, g: &BiPoly) -> bool {
    let zp = Zp { p: primes()[0] };
    let (Some(fg), Some(gg)) = (zp.grid(f), zp.grid(g)) else {
        return false;
    };
    let outer_degree_zero = |f: &[Poly], g: &[Poly]| {
        POINTS.iter().any(|&x| {
            let fx: Poly = f.iter().map(|row| zp.horner(row, x)).collect();
            let gx: Poly = g.iter().map(|row| zp.horner(row, x)).collect();
            // A vanishing leading value means the degree dropped.
            fx.last().is_some_and(|&c| c != 0) && gx.last().is_some_and(|&c| c != 0) && zp.gcd(fx, gx).len() == 1
        })
    };
    let width = |g: &BiPoly| g.coeffs().iter().map(|r| r.coeffs().len()).max().unwrap_or(0);
    let (ft, gt) = (transpose(&fg), transpose(&gg));
    // The reductions must keep the extreme rows and columns.
    ft.len() == width(f) && gt.len() == width(g) && outer_degree_zero(&fg, &gg) && outer_degree_zero(&ft, &gt)
}

/// The gcd of nonzero `f` and `g` over Q with leading coefficient 1, or
/// `None` when the modular images do not settle within the prime budget.
pub(crate) fn gcd(f: &BiPoly, g: &BiPoly) -> Option<BiPoly> {
    if certainly_coprime(f, g) {
        return Some(BiPoly::one());
    }
    let mut shape: Option<(usize, usize)> = None;
    let mut residues: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::one();
    let mut previous: Option<BiPoly> = None;
    for &p in primes() {
        let zp = Zp { p };
        let (Some(fg), Some(gg)) = (zp.grid(f), zp.grid(g)) else { continue };
        if fg.len() != f.coeffs().len() || gg.len() != g.coeffs().len() {
            continue;
        }
        let Some(image) = zp.gcd_image(&fg, &gg) else { continue };
        let width = image.iter().map(Vec::len).max().unwrap_or(0);
        let key = (image.len(), width);
        match shape {
            Some(s) if key > s => continue,
            Some(s) if key == s => {}
            _ => {
                shape = Some(key);
                residues = vec![vec![BigInt::zero(); width]; image.len()];
                modulus = BigInt::one();
                previous = None;
            }
        }
        // Chinese remaindering coefficient by coefficient.
        let m_inv = zp.inv(zp.reduce_int(&modulus));
        for (row, res_row) in image.iter().zip(&mut residues) {
            for (i, r) in res_row.iter_mut().enumerate() {
                let target = row.get(i).copied().unwrap_or(0);
                let t = zp.mul(zp.sub(target, zp.reduce_int(r)), m_inv);
                *r += &modulus * BigInt::from(t);
            }
        }
        modulus *= BigInt::from(p);
        let candidate = residues
            .iter()
            .map(|row| {
                row.iter().map(|r| rational_reconstruct(r, &modulus)).collect::<Option<Vec<_>>>().map(UniPoly::new)
            })
            .collect::<Option<Vec<_>>>()
            .map(BiPoly::new);
        let Some(candidate) = candidate else { continue };
        if previous.as_ref() == Some(&candidate) {
            // Coprime cofactors make a common divisor the gcd.
            if let (Some(qf), Some(qg)) = (f.exact_div(&candidate), g.exact_div(&candidate)) {
                if certainly_coprime(&qf, &qg) {
                    return Some(candidate);
                }
            }
        }
        previous = Some(candidate);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn bp(rows: &[&[i64]]) -> BiPoly {
        BiPoly::new(rows.iter().map(|r| UniPoly::new(r.iter().map(|&c| rat(c, 1)).collect())).collect())
    }

    #[test]
    fn primes_are_prime() {
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(3_215_031_751));
        let ps = primes();
        assert_eq!(ps.len(), MAX_PRIMES);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn reconstructs_small_fractions() {
        let m = BigInt::from(primes()[0]);
        let x = (BigInt::from(-7) * BigInt::from(Zp { p: primes()[0] }.inv(12))).mod_floor(&m);
        assert_eq!(rational_reconstruct(&x, &m), Some(rat(-7, 12)));
    }

    #[test]
    fn certifies_coprime_pairs() {
        // 1 + u·v and 1 + v
        assert!(certainly_coprime(&bp(&[&[1], &[0, 1]]), &bp(&[&[1], &[1]])));
        // 1 + u and 1 - u
        assert!(certainly_coprime(&bp(&[&[1, 1]]), &bp(&[&[1, -1]])));
    }

    #[test]
    fn never_certifies_common_factors() {
        let f = bp(&[&[1, 1], &[1]]);
        let g = bp(&[&[2, 3]]);
        let h = bp(&[&[1], &[0, 0, 1]]);
        let k = bp(&[&[0, 1], &[5]]);
        assert!(!certainly_coprime(&(&f * &g), &(&f * &h)));
        assert!(!certainly_coprime(&(&g * &k), &(&g * &h)));
        assert!(!certainly_coprime(&f, &f));
    }

    #[test]
    fn gcd_matches_the_plain_algorithm() {
        let f = bp(&[&[1, 1], &[1]]);
        let g = bp(&[&[2, 3]]);
        let h = bp(&[&[1], &[0, 0, 1]]);
        let k = bp(&[&[0, 1], &[5]]);
        let w = bp(&[&[3, 0, -1], &[0, 7], &[1, 0, 0, 2]]);
        for (x, y) in [
            (&f * &g, &f * &h),
            (&(&g * &k) * &w, &(&g * &h) * &w),
            (&(&f * &f) * &k, &(&f * &w) * &h),
            (&h * &k, &w * &g),
            (f.clone(), f.clone()),
        ] {
            assert_eq!(gcd(&x, &y), Some(x.gcd_prs(&y)), "{x} / {y}");
        }
    }

    #[test]
    fn rational_coefficients() {
        let f = BiPoly::new(vec![UniPoly::new(vec![rat(1, 3), rat(-2, 7)]), UniPoly::new(vec![rat(5, 11)])]);
        let g = bp(&[&[1, 2], &[0, 1, 1]]);
        let h = bp(&[&[4], &[1, 0, 3]]);
        assert_eq!(gcd(&(&f * &g), &(&f * &h)), Some(f.normalized()));
    }
}
