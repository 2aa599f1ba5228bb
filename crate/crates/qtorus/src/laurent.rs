//! Exact arithmetic in the fraction field of Laurent polynomials over the
//! rationals, in one formal variable `q`.
//!
//! `q` is treated as a formal indeterminate, never a concrete number, so an
//! equality that holds here holds for every complex specialization of `q`
//! that is not a root of unity. In particular `q^n - 1` is nonzero for every
//! nonzero integer `n`, which keeps the divisors used elsewhere in the crate
//! invertible.
//!
//! [`RatFunc`] values are kept in a canonical reduced form, so equality is
//! plain structural equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Largest exponent magnitude accepted by the text parser.
///
/// Untrusted input could otherwise request `q^1000000000` and drive the
/// gcd/division loops into unbounded work. Everything produced by the
/// algebra itself stays far below this.
pub const MAX_PARSED_EXPONENT: i64 = 9_999;

/// A Laurent polynomial: finitely many terms `c * q^e` with integer `e`
/// (possibly negative) and exact rational `c`.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    /// The single term `c * q^e` (or zero when `c` is zero).
    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: i64, coeff: &BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by `q^n`.
    pub fn shifted(&self, n: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + n, c.clone())).collect(),
        }
    }

    /// Multiply every coefficient by the rational `c`.
    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Leading (highest-exponent) coefficient; zero polynomial yields zero.
    fn leading_coeff(&self) -> BigRational {
        self.max_exp().map(|e| self.coeff(e)).unwrap_or_else(BigRational::zero)
    }

    /// Long division for ordinary polynomials (`min_exp >= 0`), returning
    /// `(quotient, remainder)` with `deg r < deg d`.
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.max_exp().unwrap();
        let dl = d.leading_coeff();
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(rd) = r.max_exp() {
            if rd < dd {
                break;
            }
            let t = r.coeff(rd) / &dl;
            let te = rd - dd;
            q.add_term(te, &t);
            for (e, c) in &d.terms {
                r.add_term(e + te, &(-(c * &t)));
            }
        }
        (q, r)
    }

    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd over Q[q] of two ordinary polynomials, not both zero.
    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        let lead = a.leading_coeff();
        a.scaled(&lead.recip())
    }
}

/// An exact rational function in `q`, stored as `num / den` in canonical
/// form:
///
/// * `num` and `den` contain no negative exponents (negative powers of `q`
///   are cleared into the other side of the fraction);
/// * `num` and `den` share no polynomial factor, and not both are divisible
///   by `q`;
/// * `den` has integer, collectively coprime coefficients and a positive
///   leading coefficient.
///
/// These choices make the representation unique, so `==` decides equality
/// in the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("division by zero")]
pub struct DivisionByZero;

/// Scale factor turning `p` (nonzero, rational coefficients) into an integer
/// polynomial with coprime coefficients and positive leading coefficient.
fn primitive_normalizer(p: &LaurentPoly) -> BigRational {
    let mut denom_lcm = BigInt::one();
    for (_, c) in p.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut numer_gcd = BigInt::zero();
    for (_, c) in p.terms() {
        numer_gcd = numer_gcd.gcd(&(c.numer() * &denom_lcm / c.denom()));
    }
    let mut lambda = BigRational::new(denom_lcm, numer_gcd);
    if p.leading_coeff().is_negative() {
        lambda = -lambda;
    }
    lambda
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self { num: LaurentPoly::from_int(n), den: LaurentPoly::one() }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self { num: LaurentPoly::monomial(0, c), den: LaurentPoly::one() }
    }

    /// The monomial `q^n` (with `1/q^{-n}` as canonical form for `n < 0`).
    pub fn q_pow(n: i64) -> Self {
        if n >= 0 {
            Self { num: LaurentPoly::monomial(n, BigRational::one()), den: LaurentPoly::one() }
        } else {
            Self {
                num: LaurentPoly::one(),
                den: LaurentPoly::monomial(-n, BigRational::one()),
            }
        }
    }

    /// Canonicalize an arbitrary fraction of Laurent polynomials.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, DivisionByZero> {
        if den.is_zero() {
            return Err(DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let a = num.min_exp().unwrap();
        let b = den.min_exp().unwrap();
        let pn = num.shifted(-a);
        let pd = den.shifted(-b);
        let (mut n, mut d) = if pd.max_exp() == Some(0) {
            // Constant denominator: nothing to cancel.
            (pn, pd)
        } else {
            let g = pn.gcd(&pd);
            if g.is_one() {
                (pn, pd)
            } else {
                (pn.div_exact(&g), pd.div_exact(&g))
            }
        };
        let shift = a - b;
        match shift.cmp(&0) {
            Ordering::Greater => n = n.shifted(shift),
            Ordering::Less => d = d.shifted(-shift),
            Ordering::Equal => {}
        }
        let lambda = primitive_normalizer(&d);
        Ok(Self { num: n.scaled(&lambda), den: d.scaled(&lambda) })
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self::new(num, LaurentPoly::one()).unwrap()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self { num: self.num.add(&other.num), den: LaurentPoly::one() };
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self { num: self.num.mul(&other.num), den: LaurentPoly::one() };
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn recip(&self) -> Result<Self, DivisionByZero> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, DivisionByZero> {
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Multiply by an exact rational scalar.
    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scaled(c), den: self.den.clone() }
    }

    pub fn scaled_int(&self, c: i64) -> Self {
        self.scaled(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Check the canonical-form invariants (used by tests).
    pub fn is_canonical(&self) -> bool {
        if self.num.is_zero() {
            return self.den.is_one();
        }
        if self.den.is_zero() || self.num.min_exp().unwrap() < 0 || self.den.min_exp().unwrap() < 0
        {
            return false;
        }
        if self.num.min_exp().unwrap() > 0 && self.den.min_exp().unwrap() > 0 {
            return false;
        }
        if !self.den.leading_coeff().is_positive() {
            return false;
        }
        if !primitive_normalizer(&self.den).is_one() {
            return false;
        }
        let shift_n = self.num.min_exp().unwrap();
        let shift_d = self.den.min_exp().unwrap();
        self.num.shifted(-shift_n).gcd(&self.den.shifted(-shift_d)).is_one()
    }
}

macro_rules! forward_ratfunc_binop {
    ($trait:ident, $method:ident, $func:ident) => {
        impl std::ops::$trait<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$func(self, rhs)
            }
        }
        impl std::ops::$trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$func(&self, &rhs)
            }
        }
        impl std::ops::$trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$func(&self, rhs)
            }
        }
        impl std::ops::$trait<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$func(self, &rhs)
            }
        }
    };
}

forward_ratfunc_binop!(Add, add, add);
forward_ratfunc_binop!(Sub, sub, sub);
forward_ratfunc_binop!(Mul, mul, mul);

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl std::ops::Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

// ---- textual form -------------------------------------------------------
//
// Grammar (whitespace allowed between tokens):
//
//   ratfunc := numerator [ '/' denominator ]
//   numerator := '(' sum ')' | sum
//   denominator := '(' sum ')' | term        (a single unsigned term)
//   sum     := ['+'|'-'] term { ('+'|'-') term }
//   term    := uint [ '*' ] [ qpow ] | qpow
//   qpow    := 'q' [ '^' int ]
//
// Canonical output renders both sides with integer coefficients in
// ascending exponent order, e.g. `1-q`, `(1+q^2)/q`, `q/4`, `1/q^3`.

/// Error from the `RatFunc` text parser, with a 1-based position.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("{message} at line {line} column {col}")]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub col: usize,
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self { chars: text.chars().collect(), pos: 0, text }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let mut line = 1;
        let mut col = 1;
        for ch in self.chars.iter().take(self.pos) {
            if *ch == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        let _ = self.text;
        ParseError { message: message.into(), line, col }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a digit"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digit run"))
    }

    fn parse_exponent(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            if self.peek() == Some('+') {
                self.pos += 1;
            }
            false
        };
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an exponent"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let mag: i64 = digits
            .parse()
            .ok()
            .filter(|m| *m <= MAX_PARSED_EXPONENT)
            .ok_or_else(|| self.error(format!("exponent exceeds {MAX_PARSED_EXPONENT}")))?;
        Ok(if neg { -mag } else { mag })
    }

    /// One unsigned term: `uint ['*'] [qpow] | qpow`.
    fn parse_term(&mut self) -> Result<LaurentPoly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.parse_uint()?;
                let starred = self.eat('*');
                self.skip_ws();
                if self.peek() == Some('q') {
                    self.pos += 1;
                    let exp = if self.eat('^') { self.parse_exponent()? } else { 1 };
                    Ok(LaurentPoly::monomial(exp, BigRational::from_integer(coeff)))
                } else if starred {
                    Err(self.error("expected q after '*'"))
                } else {
                    Ok(LaurentPoly::monomial(0, BigRational::from_integer(coeff)))
                }
            }
            Some('q') => {
                self.pos += 1;
                let exp = if self.eat('^') { self.parse_exponent()? } else { 1 };
                Ok(LaurentPoly::monomial(exp, BigRational::one()))
            }
            Some(c) => Err(self.error(format!("unexpected character '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn parse_sum(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = LaurentPoly::zero();
        let mut negate = false;
        self.skip_ws();
        if self.peek() == Some('-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let term = self.parse_term()?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some('-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// `'(' sum ')'` or, when `bare_sum` is allowed, an unparenthesized sum;
    /// otherwise a single term.
    fn parse_operand(&mut self, bare_sum: bool) -> Result<LaurentPoly, ParseError> {
        self.skip_ws();
        if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.parse_sum()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            Ok(inner)
        } else if bare_sum {
            self.parse_sum()
        } else {
            self.parse_term()
        }
    }

    fn parse_ratfunc(&mut self) -> Result<RatFunc, ParseError> {
        let num = self.parse_operand(true)?;
        self.skip_ws();
        let value = if self.eat('/') {
            let den = self.parse_operand(false)?;
            RatFunc::new(num, den).map_err(|_| self.error("denominator is zero"))?
        } else {
            RatFunc::from_poly(num)
        };
        self.skip_ws();
        if let Some(c) = self.peek() {
            return Err(self.error(format!("trailing input '{c}'")));
        }
        Ok(value)
    }
}

impl FromStr for RatFunc {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).parse_ratfunc()
    }
}

/// Render an integer-coefficient polynomial in ascending exponent order.
fn render_int_poly(p: &LaurentPoly, out: &mut String) {
    use std::fmt::Write;
    if p.is_zero() {
        out.push('0');
        return;
    }
    for (i, (exp, c)) in p.terms().enumerate() {
        debug_assert!(c.denom().is_one());
        let mag = c.numer().abs();
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        if exp == 0 {
            let _ = write!(out, "{mag}");
        } else {
            if !mag.is_one() {
                let _ = write!(out, "{mag}*");
            }
            if exp == 1 {
                out.push('q');
            } else {
                let _ = write!(out, "q^{exp}");
            }
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Clear rational coefficients of the numerator into the printed
        // denominator so the text never needs a fraction inside a term.
        let mut denom_lcm = BigInt::one();
        for (_, c) in self.num.terms() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let scale = BigRational::from_integer(denom_lcm);
        let n = self.num.scaled(&scale);
        let d = self.den.scaled(&scale);
        let mut out = String::new();
        if d.is_one() {
            render_int_poly(&n, &mut out);
            return f.write_str(&out);
        }
        if n.num_terms() > 1 {
            out.push('(');
            render_int_poly(&n, &mut out);
            out.push(')');
        } else {
            render_int_poly(&n, &mut out);
        }
        out.push('/');
        if d.num_terms() > 1 {
            out.push('(');
            render_int_poly(&d, &mut out);
            out.push(')');
        } else {
            render_int_poly(&d, &mut out);
        }
        f.write_str(&out)
    }
}
