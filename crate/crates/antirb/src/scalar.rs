//! Exact scalars: complex numbers with arbitrary-precision rational parts.
//!
//! [`Scalar`] is the field every other module computes over. Values are kept
//! in canonical form at construction (reduced fractions, positive
//! denominators), so equality and hashing are plain component comparisons.
//!
//! The text grammar is bit-exact and round-trips through [`Scalar::parse`]
//! and [`Display`](std::fmt::Display):
//!
//! ```text
//! rat    := '-'? digits ('/' digits)?
//! scalar := rat | rat ('+'|'-') rat 'i' | rat 'i'
//! ```
//!
//! Whitespace is forbidden inside tokens and a zero denominator is a parse
//! error.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Reduced fraction of arbitrary-precision integers, denominator > 0.
///
/// `num_rational` keeps values reduced with a positive denominator, which is
/// exactly the canonical form required here.
pub type Rational = BigRational;

/// An element of the Gaussian rational field Q(i).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Parse failure with the byte offset of the offending input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// Real rational `num/den`. Panics if `den == 0`; callers pass literals.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(
            Rational::new(BigInt::from(num), BigInt::from(den)),
            Rational::zero(),
        )
    }

    /// Gaussian rational from two (num, den) pairs.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        assert!(re_den != 0 && im_den != 0, "zero denominator");
        Scalar::new(
            Rational::new(BigInt::from(re_num), BigInt::from(re_den)),
            Rational::new(BigInt::from(im_num), BigInt::from(im_den)),
        )
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Multiplicative inverse: `a * a.inv() == 1` exactly.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // 1/(x+yi) = (x-yi)/(x^2+y^2)
        let norm = &self.re * &self.re + &self.im * &self.im;
        Ok(Scalar::new(&self.re / &norm, -&self.im / &norm))
    }

    /// Parse per the bit-exact scalar grammar.
    pub fn parse(text: &str) -> Result<Scalar, ParseError> {
        let bytes = text.as_bytes();
        let mut pos = 0usize;

        let first = parse_rat(bytes, &mut pos)?;
        match bytes.get(pos) {
            None => Ok(Scalar::new(first, Rational::zero())),
            Some(b'i') => {
                pos += 1;
                expect_end(bytes, pos)?;
                Ok(Scalar::new(Rational::zero(), first))
            }
            Some(sign @ (b'+' | b'-')) => {
                let negate = *sign == b'-';
                pos += 1;
                let second = parse_rat(bytes, &mut pos)?;
                match bytes.get(pos) {
                    Some(b'i') => {
                        pos += 1;
                        expect_end(bytes, pos)?;
                        let im = if negate { -second } else { second };
                        Ok(Scalar::new(first, im))
                    }
                    _ => Err(ParseError {
                        pos,
                        msg: "expected 'i' after imaginary part".into(),
                    }),
                }
            }
            Some(other) => Err(ParseError {
                pos,
                msg: format!("unexpected character {:?}", *other as char),
            }),
        }
    }
}

fn expect_end(bytes: &[u8], pos: usize) -> Result<(), ParseError> {
    if pos == bytes.len() {
        Ok(())
    } else {
        Err(ParseError {
            pos,
            msg: "trailing input".into(),
        })
    }
}

fn parse_digits(bytes: &[u8], pos: &mut usize) -> Result<BigInt, ParseError> {
    let start = *pos;
    while let Some(b'0'..=b'9') = bytes.get(*pos) {
        *pos += 1;
    }
    if *pos == start {
        return Err(ParseError {
            pos: start,
            msg: "expected digits".into(),
        });
    }
    let text = std::str::from_utf8(&bytes[start..*pos]).expect("digits are ascii");
    Ok(text.parse::<BigInt>().expect("digit run parses"))
}

fn parse_rat(bytes: &[u8], pos: &mut usize) -> Result<Rational, ParseError> {
    let neg = if bytes.get(*pos) == Some(&b'-') {
        *pos += 1;
        true
    } else {
        false
    };
    let num = parse_digits(bytes, pos)?;
    let den = if bytes.get(*pos) == Some(&b'/') {
        *pos += 1;
        let den_pos = *pos;
        let den = parse_digits(bytes, pos)?;
        if den.is_zero() {
            return Err(ParseError {
                pos: den_pos,
                msg: "zero denominator".into(),
            });
        }
        den
    } else {
        BigInt::one()
    };
    let value = Rational::new(num, den);
    Ok(if neg { -value } else { value })
}

fn fmt_rat(q: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            fmt_rat(&self.re, f)
        } else if self.re.is_zero() {
            fmt_rat(&self.im, f)?;
            write!(f, "i")
        } else {
            fmt_rat(&self.re, f)?;
            if self.im.is_positive() {
                write!(f, "+")?;
            } else {
                write!(f, "-")?;
            }
            fmt_rat(&self.im.abs(), f)?;
            write!(f, "i")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.re, -&self.im)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}
