//! Outward-rounded interval arithmetic on dyadic rationals.
//!
//! Only square roots are inexact; every other operation is exact on the
//! endpoints and then rounded outward to `prec` fractional bits to keep the
//! numbers small.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use std::cmp::Ordering;

use crate::quad::{rat_cmp, QuadNum, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

fn pow2(prec: u32) -> BigInt {
    BigInt::one() << prec
}

fn round_down(x: &Rat, prec: u32) -> Rat {
    let scale = pow2(prec);
    Rat::new((x * Rat::from_integer(scale.clone())).floor().to_integer(), scale)
}

fn round_up(x: &Rat, prec: u32) -> Rat {
    let scale = pow2(prec);
    Rat::new((x * Rat::from_integer(scale.clone())).ceil().to_integer(), scale)
}

impl Interval {
    pub fn point(x: Rat) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    fn rounded(lo: Rat, hi: Rat, prec: u32) -> Interval {
        Interval { lo: round_down(&lo, prec), hi: round_up(&hi, prec) }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn add(&self, o: &Interval, prec: u32) -> Interval {
        Interval::rounded(&self.lo + &o.lo, &self.hi + &o.hi, prec)
    }

    pub fn sub(&self, o: &Interval, prec: u32) -> Interval {
        Interval::rounded(&self.lo - &o.hi, &self.hi - &o.lo, prec)
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, o: &Interval, prec: u32) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min_by(|x, y| rat_cmp(x, y)).unwrap().clone();
        let hi = c.iter().max_by(|x, y| rat_cmp(x, y)).unwrap().clone();
        Interval::rounded(lo, hi, prec)
    }

    pub fn scale(&self, r: &Rat, prec: u32) -> Interval {
        self.mul(&Interval::point(r.clone()), prec)
    }

    /// Division by an interval that excludes zero.
    pub fn div(&self, o: &Interval, prec: u32) -> Option<Interval> {
        if !o.lo.is_positive() && !o.hi.is_negative() {
            return None;
        }
        let inv = Interval::rounded(o.hi.recip(), o.lo.recip(), prec);
        Some(self.mul(&inv, prec))
    }

    /// Square root; negative parts of the interval are clamped to zero.
    pub fn sqrt(&self, prec: u32) -> Interval {
        let lo = if self.lo.is_positive() { sqrt_down(&self.lo, prec) } else { Rat::zero() };
        let hi = if self.hi.is_positive() { sqrt_up(&self.hi, prec) } else { Rat::zero() };
        Interval { lo, hi }
    }

    pub fn of_quad(x: &QuadNum, prec: u32) -> Interval {
        match x.radicand() {
            None => Interval::point(x.a().clone()),
            Some(d) => {
                let root = sqrt_of_int(d, prec);
                root.scale(x.b(), prec).add(&Interval::point(x.a().clone()), prec)
            }
        }
    }

    /// Certainly strictly below `o`.
    pub fn lt(&self, o: &Interval) -> bool {
        rat_cmp(&self.hi, &o.lo) == Ordering::Less
    }
}

fn sqrt_of_int(d: &BigUint, prec: u32) -> Interval {
    let scaled = d << (2 * prec as usize);
    let root = scaled.sqrt();
    let exact = &root * &root == scaled;
    let scale = pow2(prec);
    let lo = Rat::new(BigInt::from(root.clone()), scale.clone());
    let hi = if exact { lo.clone() } else { Rat::new(BigInt::from(root + 1u32), scale) };
    Interval { lo, hi }
}

fn sqrt_down(x: &Rat, prec: u32) -> Rat {
    let scaled = (x * Rat::from_integer(pow2(2 * prec))).floor().to_integer();
    let root = scaled.to_biguint().unwrap_or_default().sqrt();
    Rat::new(BigInt::from(root), pow2(prec))
}

fn sqrt_up(x: &Rat, prec: u32) -> Rat {
    let scaled = (x * Rat::from_integer(pow2(2 * prec))).ceil().to_integer();
    let root = scaled.to_biguint().unwrap_or_default().sqrt();
    Rat::new(BigInt::from(root + 1u32), pow2(prec))
}

/// Exact test `x ≤ 2^-bits` for a non-negative rational.
pub fn at_most_pow2_neg(x: &Rat, bits: u32) -> bool {
    rat_cmp(x, &Rat::new(BigInt::one(), pow2(bits))) != Ordering::Greater
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{int, rat};

    #[test]
    fn sqrt_brackets_the_root() {
        for p in [16u32, 64, 200] {
            let r = Interval::point(int(2)).sqrt(p);
            assert!(&r.lo * &r.lo <= int(2) && &r.hi * &r.hi >= int(2));
            assert!(at_most_pow2_neg(&r.width(), p - 1));
        }
        let exact = Interval::point(rat(9, 4)).sqrt(8);
        assert!(exact.lo <= rat(3, 2) && exact.hi >= rat(3, 2));
    }

    #[test]
    fn quad_enclosure() {
        let x = QuadNum::new(int(5), int(-3), 3u32);
        let i = Interval::of_quad(&x, 100);
        assert!(i.hi.is_negative());
        let f = x.to_f64();
        assert!(i.lo <= Rat::from_float(f + 1e-12).unwrap() && i.hi >= Rat::from_float(f - 1e-12).unwrap());
    }

    #[test]
    fn division_needs_nonzero_divisor() {
        let a = Interval::point(int(1));
        assert!(a.div(&Interval { lo: int(-1), hi: int(1) }, 10).is_none());
        let q = a.div(&Interval::point(int(3)), 20).unwrap();
        assert!(q.lo <= rat(1, 3) && q.hi >= rat(1, 3));
    }
}
