//! Exact arithmetic over Q and the quadratic fields Q(√d).
//!
//! Every value carries its own radicand. Two values compose when their
//! radicands agree or when either one is purely rational; anything else is
//! an [`Error::IncompatibleRadicand`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical rational number (reduced, positive denominator).
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Total order by cross multiplication. Much faster than the generic
/// `Ord` for large operands.
pub fn rat_cmp(x: &Rat, y: &Rat) -> Ordering {
    (x.numer() * y.denom()).cmp(&(y.numer() * x.denom()))
}

pub fn rat_sign(r: &Rat) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Serde adapter encoding a rational as the string `"p/q"`.
pub mod rat_serde {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rat(&raw).map_err(de::Error::custom)
    }
}

const TRIAL_LIMIT: u64 = 1 << 16;

/// Splits `n = s² · d` with `d` square-free.
///
/// Primes below 2¹⁶ are removed by trial division; a cofactor below 2⁴⁸
/// is then square-free unless it is itself a square. Larger cofactors are
/// only checked for being perfect squares.
pub fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    if let Some(small) = n.to_u64() {
        let (s, d) = split_u64(small);
        return (BigUint::from(s), BigUint::from(d));
    }
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p = 2u64;
    while p < TRIAL_LIMIT {
        let bp = BigUint::from(p);
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            square *= bp.pow(e / 2);
            if e % 2 == 1 {
                free *= &bp;
            }
        }
        if let Some(r) = rest.to_u64() {
            let (s, d) = split_u64(r);
            return (square * s, free * d);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        (square * root, free)
    } else {
        (square, free * rest)
    }
}

fn split_u64(mut n: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p < TRIAL_LIMIT && p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= p;
        }
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = n.sqrt();
    if root * root == n {
        (square * root, free)
    } else {
        (square, free * n)
    }
}

/// Exact number `a + b·√d` with rational `a`, `b`.
///
/// Invariant: `b = 0` iff `d = 0`; otherwise `d > 1` is square-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadNum {
    a: Rat,
    b: Rat,
    d: BigUint,
}

impl QuadNum {
    /// Builds `a + b·√d`, pulling square factors out of `d`.
    pub fn new(a: Rat, b: Rat, d: impl Into<BigUint>) -> QuadNum {
        let d = d.into();
        if b.is_zero() || d.is_zero() {
            return QuadNum::from_rat(a);
        }
        let (s, free) = square_free_split(&d);
        let b = b * Rat::from_integer(BigInt::from(s));
        if free.is_one() {
            QuadNum::from_rat(a + b)
        } else {
            QuadNum { a, b, d: free }
        }
    }

    pub fn from_rat(a: Rat) -> QuadNum {
        QuadNum { a, b: Rat::zero(), d: BigUint::zero() }
    }

    pub fn from_int(n: i64) -> QuadNum {
        QuadNum::from_rat(int(n))
    }

    pub fn zero() -> QuadNum {
        QuadNum::from_int(0)
    }

    pub fn one() -> QuadNum {
        QuadNum::from_int(1)
    }

    /// `√d` for a non-negative integer `d`.
    pub fn sqrt_int(d: u64) -> QuadNum {
        QuadNum::new(Rat::zero(), Rat::one(), d)
    }

    /// Exact square root of a non-negative rational.
    pub fn sqrt_rat(r: &Rat) -> Result<QuadNum> {
        if r.is_negative() {
            return Err(Error::InvalidInput(format!("square root of negative {r}")));
        }
        let pq = (r.numer() * r.denom()).to_biguint().unwrap_or_default();
        let inv_q = Rat::new(BigInt::one(), r.denom().clone());
        Ok(QuadNum::new(Rat::zero(), inv_q, pq))
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    /// The radicand, or `None` for a rational value.
    pub fn radicand(&self) -> Option<&BigUint> {
        if self.b.is_zero() {
            None
        } else {
            Some(&self.d)
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn joint_radicand(&self, other: &QuadNum) -> Result<BigUint> {
        match (self.radicand(), other.radicand()) {
            (Some(x), Some(y)) if x != y => {
                Err(Error::IncompatibleRadicand(x.to_string(), y.to_string()))
            }
            (Some(x), _) | (None, Some(x)) => Ok(x.clone()),
            (None, None) => Ok(BigUint::zero()),
        }
    }

    fn build(a: Rat, b: Rat, d: BigUint) -> QuadNum {
        if b.is_zero() {
            QuadNum::from_rat(a)
        } else {
            QuadNum { a, b, d }
        }
    }

    pub fn checked_add(&self, other: &QuadNum) -> Result<QuadNum> {
        let d = self.joint_radicand(other)?;
        Ok(QuadNum::build(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &QuadNum) -> Result<QuadNum> {
        let d = self.joint_radicand(other)?;
        Ok(QuadNum::build(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &QuadNum) -> Result<QuadNum> {
        let d = self.joint_radicand(other)?;
        let dr = Rat::from_integer(BigInt::from(d.clone()));
        let a = &self.a * &other.a + &self.b * &other.b * dr;
        let b = &self.a * &other.b + &other.a * &self.b;
        Ok(QuadNum::build(a, b, d))
    }

    pub fn checked_div(&self, other: &QuadNum) -> Result<QuadNum> {
        self.checked_mul(&other.inv()?)
    }

    /// `a − b√d`.
    pub fn conj(&self) -> QuadNum {
        QuadNum::build(self.a.clone(), -self.b.clone(), self.d.clone())
    }

    /// Field norm `a² − b²d`.
    pub fn norm(&self) -> Rat {
        let dr = Rat::from_integer(BigInt::from(self.d.clone()));
        &self.a * &self.a - &self.b * &self.b * dr
    }

    pub fn inv(&self) -> Result<QuadNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadNum::build(&self.a / &n, -(&self.b / &n), self.d.clone()))
    }

    pub fn scale(&self, r: &Rat) -> QuadNum {
        QuadNum::build(&self.a * r, &self.b * r, self.d.clone())
    }

    pub fn square(&self) -> QuadNum {
        self * self
    }

    /// Exact sign via the a/b sign table and one rational comparison.
    pub fn sign(&self) -> i8 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        let dr = Rat::from_integer(BigInt::from(self.d.clone()));
        match rat_cmp(&(&self.a * &self.a), &(&self.b * &self.b * dr)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn cmp_exact(&self, other: &QuadNum) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.sign().cmp(&0))
    }

    pub fn abs(&self) -> QuadNum {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }
}

/// The common radicand of a collection, `None` when all are rational.
pub fn common_radicand<'a>(xs: impl IntoIterator<Item = &'a QuadNum>) -> Result<Option<BigUint>> {
    let mut found: Option<BigUint> = None;
    for x in xs {
        if let Some(d) = x.radicand() {
            match &found {
                Some(f) if f != d => {
                    return Err(Error::IncompatibleRadicand(f.to_string(), d.to_string()))
                }
                Some(_) => {}
                None => found = Some(d.clone()),
            }
        }
    }
    Ok(found)
}

// Operator sugar for call sites that have already validated radicands.
// These panic on incompatible radicands.
impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        self.checked_add(rhs).expect("radicand mismatch in add")
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        self.checked_sub(rhs).expect("radicand mismatch in sub")
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        self.checked_mul(rhs).expect("radicand mismatch in mul")
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum::build(-self.a.clone(), -self.b.clone(), self.d.clone())
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

impl From<Rat> for QuadNum {
    fn from(r: Rat) -> Self {
        QuadNum::from_rat(r)
    }
}

impl From<i64> for QuadNum {
    fn from(n: i64) -> Self {
        QuadNum::from_int(n)
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}·√{}", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadNum({self})")
    }
}

impl Serialize for QuadNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("QuadNum", 3)?;
        st.serialize_field("a", &rat_to_string(&self.a))?;
        st.serialize_field("b", &rat_to_string(&self.b))?;
        match self.d.to_u64() {
            Some(d) => st.serialize_field("d", &d)?,
            None => st.serialize_field("d", &self.d.to_string())?,
        }
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRadicand {
    Num(u64),
    Str(String),
}

#[derive(Deserialize)]
struct RawQuad {
    a: String,
    #[serde(default)]
    b: Option<String>,
    #[serde(default)]
    d: Option<RawRadicand>,
}

impl<'de> Deserialize<'de> for QuadNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawQuad::deserialize(d)?;
        let a = parse_rat(&raw.a).map_err(de::Error::custom)?;
        let b = match raw.b {
            Some(b) => parse_rat(&b).map_err(de::Error::custom)?,
            None => Rat::zero(),
        };
        let radicand = match raw.d {
            None => BigUint::zero(),
            Some(RawRadicand::Num(n)) => BigUint::from(n),
            Some(RawRadicand::Str(s)) => BigUint::from_str(&s).map_err(de::Error::custom)?,
        };
        if !b.is_zero() && radicand.is_zero() {
            return Err(de::Error::custom("nonzero irrational part with radicand 0"));
        }
        Ok(QuadNum::new(a, b, radicand))
    }
}
