//! Text formats: quadratic literals, order matrices, ring elements and
//! Laurent polynomials.
//!
//! Quadratic literals are sums of terms `p/q` and `r/s s2`, where `s2`
//! stands for √2, e.g. `3/2`, `2-1 s2`. Matrices separate rows by `;` and
//! entries by `,`. Elements and polynomials share one grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := unary (('*'|'/') unary)*
//! unary  := '-' unary | power
//! power  := atom ['^' exp]
//! exp    := ['-'] int | '(' quad ')'
//! atom   := int | 'u' | 'v' | 'X' int | '(' expr ')'
//! ```
//!
//! `v^(γ)` accepts any quadratic exponent; other powers must be integers.
//! Division is allowed by monomials only.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{QuadScalar, RatFun1};
use crate::laurent::{ExpVec, LaurentPoly};
use crate::order::OrderMatrix;
use crate::rings::{BaseField, FracElem, RElem, VElem, WElem};
use crate::scalar::{Domain, Rational};

/// Ring elements that can be written in the element grammar.
pub trait ElementSyntax: Domain {
    fn from_rational(c: Rational) -> Self;

    /// The transcendental `u`, when the ring has it.
    fn atom_u() -> Option<Self>;

    /// `v^γ`, when the ring has it.
    fn atom_v_pow(gamma: &QuadScalar) -> Option<Self>;
}

impl ElementSyntax for VElem {
    fn from_rational(c: Rational) -> Self {
        VElem::constant(c)
    }

    fn atom_u() -> Option<Self> {
        None
    }

    fn atom_v_pow(gamma: &QuadScalar) -> Option<Self> {
        Some(VElem::v_pow(gamma.clone()))
    }
}

impl ElementSyntax for RElem {
    fn from_rational(c: Rational) -> Self {
        RElem::constant(RatFun1::from_rational(c))
    }

    fn atom_u() -> Option<Self> {
        Some(RElem::constant(RatFun1::u()))
    }

    fn atom_v_pow(gamma: &QuadScalar) -> Option<Self> {
        Some(RElem::v_pow(gamma.clone()))
    }
}

impl ElementSyntax for WElem {
    fn from_rational(c: Rational) -> Self {
        WElem::from_rational(c)
    }

    fn atom_u() -> Option<Self> {
        Some(WElem::u())
    }

    fn atom_v_pow(gamma: &QuadScalar) -> Option<Self> {
        gamma.as_integer()?.to_i64().map(|i| WElem::monomial(i, 0))
    }
}

/// The rings selectable from the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingKind {
    R,
    V,
    W,
    /// The monoid ring `Q{v}`.
    MonoidQ,
    /// The monoid ring `Q(u){v}`.
    MonoidQu,
}

impl RingKind {
    pub const ALL: [RingKind; 5] = [RingKind::R, RingKind::V, RingKind::W, RingKind::MonoidQ, RingKind::MonoidQu];

    pub fn name(self) -> &'static str {
        match self {
            RingKind::R => "R",
            RingKind::V => "V",
            RingKind::W => "W",
            RingKind::MonoidQ => "monoid-Q",
            RingKind::MonoidQu => "monoid-Qu",
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingKind::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse { pos: 0, expected: "one of R, V, W, monoid-Q, monoid-Qu".into() })
    }
}

/// Membership in the monoid ring inside the fraction field: no denominator
/// and no negative exponent.
pub fn monoid_member<K: BaseField>(x: &FracElem<K>) -> bool {
    x.den().is_one() && x.num().is_monoid()
}

fn parse_err<T>(pos: usize, expected: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, expected: expected.into() })
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
    /// Offset of `text` in the caller's string, for error positions.
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, base: usize) -> Self {
        Cursor { text: text.as_bytes(), pos: 0, base }
    }

    fn at(&self) -> usize {
        self.base + self.pos
    }

    fn skip_ws(&mut self) {
        while self.text.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, ch: u8) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            parse_err(self.at(), format!("'{}'", ch as char))
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.text.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return parse_err(self.at(), "an integer");
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => parse_err(self.at(), "end of input"),
        }
    }

    /// One signed term `p/q`, `p/q s2` or `s2`.
    fn quad_term(&mut self, negative: bool) -> Result<QuadScalar> {
        let start = self.at();
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let p = self.integer()?;
                let q = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
                if q.is_zero() {
                    return parse_err(start, "a nonzero denominator");
                }
                Some(Rational::new(p, q))
            }
            _ => None,
        };
        let irrational = self.eat_word("s2");
        let value = match (coeff, irrational) {
            (Some(c), false) => QuadScalar::from_rational(c),
            (Some(c), true) => QuadScalar::new(Rational::zero(), c),
            (None, true) => QuadScalar::sqrt2(),
            (None, false) => return parse_err(start, "a rational or s2"),
        };
        Ok(if negative { -value } else { value })
    }

    fn quad(&mut self) -> Result<QuadScalar> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut value = self.quad_term(negative)?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    value = value + self.quad_term(false)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    value = value + self.quad_term(true)?;
                }
                _ => return Ok(value),
            }
        }
    }
}

/// Parses a quadratic literal such as `1/2+3 s2`.
pub fn parse_quad(text: &str) -> Result<QuadScalar> {
    let mut c = Cursor::new(text, 0);
    let q = c.quad()?;
    c.finish()?;
    Ok(q)
}

/// Splits at top-level occurrences of `sep`, with byte offsets.
fn split_top(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, &text[start..]));
    parts
}

/// Parses `1,1;1,0`-style matrices; entries are quadratic literals.
pub fn parse_matrix(text: &str) -> Result<OrderMatrix> {
    let rows = split_top(text, ';')
        .into_iter()
        .map(|(row_at, row)| {
            split_top(row, ',')
                .into_iter()
                .map(|(at, entry)| {
                    let mut c = Cursor::new(entry, row_at + at);
                    let q = c.quad()?;
                    c.finish()?;
                    Ok(q)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    OrderMatrix::new(rows)
}

/// Parses an integer exponent vector `1,-2,0`, optionally in parentheses.
pub fn parse_exponents(text: &str) -> Result<ExpVec> {
    let trimmed = text.trim();
    let (inner, base) = match trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        Some(inner) => (inner, text.find('(').unwrap() + 1),
        None => (trimmed, text.len() - text.trim_start().len()),
    };
    let entries = split_top(inner, ',')
        .into_iter()
        .map(|(at, entry)| {
            let mut c = Cursor::new(entry, base + at);
            let negative = c.eat(b'-');
            let x = c.integer()?;
            c.finish()?;
            Ok(if negative { -x } else { x })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExpVec(entries))
}

struct Parser<'a, T> {
    cur: Cursor<'a>,
    nvars: usize,
    marker: std::marker::PhantomData<T>,
}

impl<'a, T: ElementSyntax> Parser<'a, T> {
    fn constant(&self, c: T) -> LaurentPoly<T> {
        LaurentPoly::constant(self.nvars, c)
    }

    fn expr(&mut self) -> Result<LaurentPoly<T>> {
        let mut acc = if self.cur.eat(b'-') {
            -self.term()?
        } else {
            self.cur.eat(b'+');
            self.term()?
        };
        loop {
            if self.cur.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.cur.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly<T>> {
        let mut acc = self.unary()?;
        loop {
            if self.cur.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.cur.peek() == Some(b'/') {
                let at = self.cur.at();
                self.cur.pos += 1;
                let rhs = self.unary()?;
                acc = &acc * &self.invert(&rhs, at)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPoly<T>> {
        if self.cur.eat(b'-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn invert(&self, p: &LaurentPoly<T>, at: usize) -> Result<LaurentPoly<T>> {
        let mut terms = p.terms();
        match (terms.next(), terms.next()) {
            (Some((e, c)), None) => match c.inv() {
                Some(inv) => Ok(LaurentPoly::monomial(inv, e.scaled(&BigInt::from(-1)))),
                None => parse_err(at, "a nonzero divisor"),
            },
            (None, _) => parse_err(at, "a nonzero divisor"),
            _ => parse_err(at, "a monomial divisor"),
        }
    }

    fn exponent(&mut self) -> Result<QuadScalar> {
        if self.cur.eat(b'(') {
            let q = self.cur.quad()?;
            self.cur.expect(b')')?;
            return Ok(q);
        }
        let negative = self.cur.eat(b'-');
        let k = self.cur.integer()?;
        Ok(QuadScalar::from_rational(Rational::from_integer(if negative { -k } else { k })))
    }

    fn power(&mut self) -> Result<LaurentPoly<T>> {
        self.cur.skip_ws();
        let at = self.cur.at();
        if self.cur.eat_word("v") {
            let gamma = if self.cur.eat(b'^') { self.exponent()? } else { QuadScalar::one() };
            return match T::atom_v_pow(&gamma) {
                Some(x) => Ok(self.constant(x)),
                None => parse_err(at, format!("an element of {} (v^({gamma}) is not available)", T::NAME)),
            };
        }
        let base = self.atom()?;
        if !self.cur.eat(b'^') {
            return Ok(base);
        }
        let exp_at = self.cur.at();
        let k = match self.exponent()?.as_integer() {
            Some(k) => k,
            None => return parse_err(exp_at, "an integer exponent"),
        };
        let k = match k.to_i64() {
            Some(k) if k.abs() <= 4096 => k,
            _ => return parse_err(exp_at, "an exponent of at most 4096"),
        };
        let base = if k < 0 { self.invert(&base, exp_at)? } else { base };
        let mut acc = self.constant(T::one());
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<LaurentPoly<T>> {
        let at = self.cur.at();
        match self.cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.cur.integer()?;
                Ok(self.constant(T::from_rational(Rational::from_integer(n))))
            }
            Some(b'(') => {
                self.cur.pos += 1;
                let inner = self.expr()?;
                self.cur.expect(b')')?;
                Ok(inner)
            }
            Some(b'u') => {
                self.cur.pos += 1;
                match T::atom_u() {
                    Some(x) => Ok(self.constant(x)),
                    None => parse_err(at, format!("an element of {} (u is not available)", T::NAME)),
                }
            }
            Some(b'X') => {
                self.cur.pos += 1;
                let i = self.cur.integer()?.to_usize().unwrap_or(0);
                if i == 0 || i > self.nvars {
                    return parse_err(at, format!("a variable X1..X{}", self.nvars));
                }
                Ok(LaurentPoly::var(self.nvars, i - 1))
            }
            _ => parse_err(at, "a number, u, v, a variable or '('"),
        }
    }
}

fn parse_with<T: ElementSyntax>(text: &str, base: usize, nvars: usize) -> Result<LaurentPoly<T>> {
    let mut p = Parser { cur: Cursor::new(text, base), nvars, marker: std::marker::PhantomData };
    let poly = p.expr()?;
    p.cur.finish()?;
    Ok(poly)
}

/// Parses an element of the fraction field without a membership check.
pub fn parse_fraction<T: ElementSyntax>(text: &str) -> Result<T> {
    let p = parse_with::<T>(text, 0, 0)?;
    Ok(p.coeff(&ExpVec::zeros(0)).cloned().unwrap_or_else(T::zero))
}

/// Parses an element and checks that it lies in the ring.
pub fn parse_element<T: ElementSyntax>(text: &str) -> Result<T> {
    let x = parse_fraction::<T>(text)?;
    if !x.contains() {
        return Err(Error::NotMember { ring: T::NAME, reason: format!("{x}") });
    }
    Ok(x)
}

/// Parses a comma-separated list of fraction-field elements.
pub fn parse_fraction_list<T: ElementSyntax>(text: &str) -> Result<Vec<T>> {
    split_top(text, ',')
        .into_iter()
        .map(|(at, part)| {
            let p = parse_with::<T>(part, at, 0)?;
            Ok(p.coeff(&ExpVec::zeros(0)).cloned().unwrap_or_else(T::zero))
        })
        .collect()
}

/// Parses a Laurent polynomial in `X1..Xn`.
pub fn parse_poly<T: ElementSyntax>(text: &str, nvars: usize) -> Result<LaurentPoly<T>> {
    parse_with(text, 0, nvars)
}
