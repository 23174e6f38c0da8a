//! Exact numbers in `ℚ` and in real quadratic fields `ℚ(√d)`.
//!
//! A [`Scalar`] stores `a + b·√d` with `a, b` arbitrary-precision rationals and
//! `d` a square-free integer. Rational values always carry `d = 0`, so two
//! scalars are interoperable when their fields agree or one of them is rational.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cannot combine values from Q(sqrt({0})) and Q(sqrt({1}))")]
    FieldMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar literal `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// An exact element `a + b·√d` of `ℚ` or of a real quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    d: u64,
}

/// Splits `n` as `s²·f` with `f` square-free.
fn square_free_split(mut n: u64) -> (u64, u64) {
    let mut outer = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        while n.is_multiple_of(p * p) {
            n /= p * p;
            outer *= p;
        }
        p += 1;
    }
    (outer, n)
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let q = BigInt::from_str(q.trim()).ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => BigInt::from_str(s).ok().map(BigRational::from_integer),
    }
}

impl Scalar {
    /// Builds `a + b·√d`, pulling square factors of `d` into `b`.
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Self {
        let (outer, core) = square_free_split(d);
        let b = b * BigRational::from_integer(BigInt::from(outer));
        match core {
            0 => Self::from_rational(a),
            1 => Self::from_rational(a + b),
            _ if b.is_zero() => Self::from_rational(a),
            _ => Scalar { a, b, d: core },
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(a: BigRational) -> Self {
        Scalar {
            a,
            b: BigRational::zero(),
            d: 0,
        }
    }

    /// `√n` as an exact scalar (`√8 = 2√2`, `√9 = 3`).
    pub fn sqrt_of(n: u64) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), n)
    }

    /// Rational coefficient `a`.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of `√d`.
    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    /// The square-free radicand, `0` for rationals.
    pub fn field(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.a.is_integer()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.a.to_integer())
    }

    /// `a + b√d ↦ a − b√d`.
    pub fn conjugate(&self) -> Self {
        Scalar {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Field norm `a² − b²d`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d))
    }

    /// Sign relative to zero, decided exactly.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d));
        if a2 > b2d {
            sa
        } else {
            sb
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    fn join_field(&self, other: &Self) -> Result<u64, ScalarError> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(ScalarError::FieldMismatch(d, e)),
        }
    }

    /// Field shared by all values, or the mismatch that prevents one.
    pub fn common_field<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> Result<u64, ScalarError> {
        let mut d = 0;
        for v in values {
            d = match (d, v.d) {
                (0, e) | (e, 0) => e,
                (x, y) if x == y => x,
                (x, y) => return Err(ScalarError::FieldMismatch(x, y)),
            };
        }
        Ok(d)
    }

    fn assemble(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            Self::from_rational(a)
        } else {
            Scalar { a, b, d }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join_field(other)?;
        Ok(Self::assemble(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join_field(other)?;
        Ok(Self::assemble(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join_field(other)?;
        let dq = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dq;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::assemble(a, b, d))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::assemble(&self.a / &n, -&self.b / &n, self.d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.join_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Greatest integer `≤ self`.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.a.floor().to_integer();
        }
        let b2d = &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d));
        let pq = b2d.numer() * b2d.denom();
        let root_floor = pq.sqrt().div_floor(b2d.denom());
        let base = self.a.floor().to_integer();
        let mut guess = if self.b.is_positive() {
            base + root_floor
        } else {
            base - root_floor - 1
        };
        while Scalar::from_bigint(guess.clone()) > *self {
            guess -= 1;
        }
        while Scalar::from_bigint(&guess + 1) <= *self {
            guess += 1;
        }
        guess
    }

    /// Least integer `≥ self`.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Approximate value; used for rendering only.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        a + self.b.to_f64().unwrap_or(f64::NAN) * (self.d as f64).sqrt()
    }

    /// Structural total order on `(a, b, d)`; used for canonical sorting, not numeric comparison.
    pub fn structural_cmp(&self, other: &Self) -> Ordering {
        self.a
            .cmp(&other.a)
            .then_with(|| self.b.cmp(&other.b))
            .then_with(|| self.d.cmp(&other.d))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).ok().map(|diff| diff.signum())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let mut out = String::new();
        if !self.a.is_zero() {
            out.push_str(&fmt_rational(&self.a));
            if self.b.is_positive() {
                out.push('+');
            }
        }
        if self.b == BigRational::one() {
        } else if self.b == -BigRational::one() {
            out.push('-');
        } else {
            out.push_str(&fmt_rational(&self.b));
            out.push('*');
        }
        out.push_str(&format!("sqrt({})", self.d));
        f.write_str(&out)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar arithmetic failed: {e}"),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_bigint(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

// Literal grammar: integers, `p/q`, `sqrt(n)`, parentheses and `+ - * /`.

struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn err(&self, reason: impl Into<String>) -> ScalarError {
        ScalarError::Parse {
            input: self.src.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ScalarError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}` at offset {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.checked_add(&rhs)?;
                }
                Some('-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.checked_sub(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.checked_mul(&rhs)?;
                }
                Some('/') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.checked_div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.src[self.pos..].starts_with('.') {
            return Err(self.err("decimal literals are not accepted; write p/q"));
        }
        if start == self.pos {
            return Err(self.err(format!("expected a number at offset {start}")));
        }
        Ok(BigInt::from_str(&self.src[start..self.pos]).expect("digits"))
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some('+') => {
                self.pos += 1;
                self.factor()
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::from_bigint(self.integer()?)),
            Some(_) if self.src[self.pos..].starts_with("sqrt") => {
                self.pos += 4;
                self.expect('(')?;
                let n = self.integer()?;
                self.expect(')')?;
                let n = n
                    .to_u64()
                    .ok_or_else(|| self.err("sqrt argument must be a non-negative 64-bit integer"))?;
                Ok(Scalar::sqrt_of(n))
            }
            Some(c) => Err(self.err(format!("unexpected `{c}` at offset {}", self.pos))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s, pos: 0 };
        let v = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err(format!("trailing input at offset {}", p.pos)));
        }
        Ok(v)
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    a: String,
    b: String,
    d: u64,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            a: fmt_rational(&self.a),
            b: fmt_rational(&self.b),
            d: self.d,
        }
        .serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarInput {
    Repr(ScalarRepr),
    Literal(String),
    Int(i64),
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match ScalarInput::deserialize(de)? {
            ScalarInput::Repr(r) => {
                let a = parse_rational(&r.a).ok_or_else(|| D::Error::custom(format!("bad rational `{}`", r.a)))?;
                let b = parse_rational(&r.b).ok_or_else(|| D::Error::custom(format!("bad rational `{}`", r.b)))?;
                Ok(Scalar::new(a, b, r.d))
            }
            ScalarInput::Literal(s) => s.parse().map_err(D::Error::custom),
            ScalarInput::Int(n) => Ok(Scalar::from_int(n)),
        }
    }
}

/// Free-function form of [`Scalar::conjugate`].
pub fn galois_conjugate(x: &Scalar) -> Scalar {
    x.conjugate()
}
