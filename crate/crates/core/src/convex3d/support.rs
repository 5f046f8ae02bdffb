//! Supporting planes of the union of balls.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{Plane3, Point3};
use crate::quad::{rat_cmp, rat_sign, QuadNum, Rat};

use super::ConvexSystem3;

/// Compares `a + √x` with `b + √y` for non-negative `x`, `y`.
pub fn cmp_rat_plus_sqrt(a: &Rat, x: &Rat, b: &Rat, y: &Rat) -> Ordering {
    let delta = a - b;
    // sign of L = δ + √x
    let sl = match rat_sign(&delta) {
        s if s >= 0 => {
            if s == 0 && rat_sign(x) == 0 {
                0
            } else {
                1
            }
        }
        _ => match rat_cmp(x, &(&delta * &delta)) {
            Ordering::Greater => 1,
            Ordering::Equal => 0,
            Ordering::Less => -1,
        },
    };
    if sl < 0 {
        return Ordering::Less;
    }
    // both sides non-negative: compare L² = δ² + x + 2δ√x with y
    let p = &delta * &delta + x - y;
    let two = Rat::from_integer(2.into());
    let root = QuadNum::sqrt_rat(x).expect("non-negative");
    let diff = &QuadNum::from_rat(p) + &root.scale(&(two * delta));
    diff.sign().cmp(&0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contact {
    pub ball: usize,
    pub point: Point3,
}

/// The supporting plane of the union with outer normal `u` and the balls it
/// touches. Ball `i` maximizes `⟨cᵢ,u⟩ + rᵢ|u|` and touches at
/// `cᵢ + rᵢ·u/|u|`.
pub fn supporting_plane_contacts(s: &ConvexSystem3, u: &Point3) -> Result<(Plane3, Vec<Contact>)> {
    if !u.is_rational() || u.is_zero() {
        return Err(Error::InvalidInput("direction must be rational and nonzero".into()));
    }
    let uu = u.norm2().as_rat().cloned().expect("rational");
    let key = |i: usize| {
        let b = &s.balls()[i];
        let a = b.center().dot(u).as_rat().cloned().expect("rational");
        (a, &b.radius_sq * &uu)
    };
    let keys: Vec<(Rat, Rat)> = (0..s.len()).map(key).collect();
    let mut best = vec![0];
    for i in 1..s.len() {
        let (a, x) = &keys[i];
        let (b, y) = &keys[best[0]];
        match cmp_rat_plus_sqrt(a, x, b, y) {
            Ordering::Greater => best = vec![i],
            Ordering::Equal => best.push(i),
            Ordering::Less => {}
        }
    }
    let contacts: Vec<Contact> = best
        .into_iter()
        .map(|i| {
            let b = &s.balls()[i];
            let k = QuadNum::sqrt_rat(&(&b.radius_sq / &uu)).expect("positive");
            Contact { ball: i, point: b.center().add(&u.scale(&k)) }
        })
        .collect();
    let plane = Plane3::new(u.clone(), u.dot(&contacts[0].point))?;
    Ok((plane, contacts))
}
