//! Exact rationals and Hirzebruch–Jung continued fractions.
//!
//! A box label `e/m` with `0 <= e < m` stands for the chain `[-k1, ..., -kn]`
//! where `m/e = k1 - 1/(k2 - 1/(... - 1/kn))` and every `ki >= 2`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Ordered list of curve weights.
pub type Chain = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_int(n: i64) -> Rational {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Largest integer `<= self`, so `floor(-1/3) = -1`.
    pub fn floor(&self) -> Rational {
        Rational(self.0.floor())
    }

    /// `self - floor(self)`, always in `[0, 1)`.
    pub fn fract(&self) -> Rational {
        Rational(&self.0 - self.0.floor())
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Rational {
        Rational(self.0.recip())
    }

    pub fn to_i64(&self) -> Result<i64> {
        if !self.is_integer() {
            return Err(Error::Internal(format!("{self} is not an integer")));
        }
        self.0.to_integer().to_i64().ok_or(Error::Overflow)
    }

    pub fn numer_i64(&self) -> Result<i64> {
        self.numer().to_i64().ok_or(Error::Overflow)
    }

    pub fn denom_i64(&self) -> Result<i64> {
        self.denom().to_i64().ok_or(Error::Overflow)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                Rational($tr::$f(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $f(self, rhs: &'a Rational) -> Rational {
                Rational($tr::$f(&self.0, &rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let bad = || Error::ParseRational(s.to_string());
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s).ok_or_else(bad)?))),
            Some((n, d)) => {
                let n = parse_int(n).ok_or_else(bad)?;
                if d.starts_with('-') {
                    return Err(bad());
                }
                let d = parse_int(d).ok_or_else(bad)?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rational(BigRational::new(n, d)))
            }
        }
    }
}

/// Box label `e/m`; `(0,1)` is the empty box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxLabel {
    e: i64,
    m: i64,
}

impl BoxLabel {
    pub const EMPTY: BoxLabel = BoxLabel { e: 0, m: 1 };

    pub fn new(e: i64, m: i64) -> Result<BoxLabel> {
        let ok = m >= 1 && (0..m).contains(&e) && (e > 0 || m == 1) && e.gcd(&m) == 1;
        if ok {
            Ok(BoxLabel { e, m })
        } else {
            Err(Error::BadLabel { e, m })
        }
    }

    /// Label of a value in `[0,1)`, e.g. a fractional part.
    pub fn from_fraction(x: &Rational) -> Result<BoxLabel> {
        if x.is_negative() || x >= &Rational::from_int(1) {
            return Err(Error::Internal(format!("{x} is not in [0,1)")));
        }
        BoxLabel::new(x.numer_i64()?, x.denom_i64()?)
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.e == 0
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.e, self.m)
    }
}

impl fmt::Display for BoxLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.e, self.m)
    }
}

pub fn hj_chain(label: BoxLabel) -> Chain {
    let (mut num, mut den) = (label.m, label.e);
    let mut out = Vec::new();
    while den > 0 {
        let k = Integer::div_ceil(&num, &den);
        out.push(-k);
        (num, den) = (den, k * den - num);
    }
    out
}

pub fn chain_to_label(chain: &[i64]) -> Result<BoxLabel> {
    if chain.iter().any(|&w| w > -2) {
        return Err(Error::ChainNotAdmissible(chain.to_vec()));
    }
    // evaluate from the far end; (p, q) = (1, 0) is infinity
    let (mut p, mut q) = (1i64, 0i64);
    for &w in chain.iter().rev() {
        let k = -w;
        let next = k.checked_mul(p).and_then(|kp| kp.checked_sub(q)).ok_or(Error::Overflow)?;
        (p, q) = (next, p);
    }
    if chain.is_empty() {
        return Ok(BoxLabel::EMPTY);
    }
    BoxLabel::new(q, p)
}

/// `e'/m` with `e e' = 1 mod m`; its chain is the reversed chain of `e/m`.
pub fn dual_label(label: BoxLabel) -> BoxLabel {
    if label.is_empty() {
        return label;
    }
    BoxLabel { e: mod_inverse(label.e, label.m).expect("label entries are coprime"), m: label.m }
}

/// Inverse of `a` modulo `m`, in `[0, m)`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let g = a.extended_gcd(&m);
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m))
}

/// Returns `(a, b)` with `a*x - b*y = 1`; requires `gcd(x, y) = 1`.
pub fn det_witness(x: i64, y: i64) -> Option<(i64, i64)> {
    let g = x.extended_gcd(&y);
    match g.gcd {
        1 => Some((g.x, -g.y)),
        -1 => Some((-g.x, g.y)),
        _ => None,
    }
}

/// Convenience for tests and examples: `BoxLabel` from a fraction `e/m`.
pub fn label(e: i64, m: i64) -> BoxLabel {
    BoxLabel::new(e, m).expect("valid label")
}
