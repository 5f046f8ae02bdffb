//! Planar sections of a ball system.

use crate::convex2d::{ConvexSystem2, Disc};
use crate::error::{Error, Result};
use crate::kernel::{Line2, Line3, Plane3, Point3};
use crate::quad::{QuadNum, Rat};

use super::ConvexSystem3;

/// A section with its frame: plane point `origin + x·e1 + y·e2` has planar
/// coordinates `(x, y)`. `balls[k]` is the ball behind disc `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    pub system: ConvexSystem2,
    pub balls: Vec<usize>,
    pub origin: Point3,
    pub e1: Point3,
    pub e2: Point3,
}

impl Slice {
    /// Lifts a line of the plane to 3-space.
    pub fn lift(&self, l: &Line2) -> Result<Line3> {
        let nn = &l.a.square() + &l.b.square();
        let t = (-&l.c).checked_div(&nn)?;
        let (px, py) = (l.a.checked_mul(&t)?, l.b.checked_mul(&t)?);
        let point = self.origin.add(&self.e1.scale(&px)).add(&self.e2.scale(&py));
        let dir = self.e2.scale(&l.a).sub(&self.e1.scale(&l.b));
        Line3::new(point, dir)
    }
}

fn rat(q: &QuadNum) -> Result<Rat> {
    q.as_rat().cloned().ok_or_else(|| Error::InvalidInput("plane must be rational".into()))
}

/// Rational orthonormal basis of the plane orthogonal to the unit vector
/// `n`: the first two columns of the reflection swapping `e₃` and `n`.
fn frame(n: [Rat; 3]) -> (Point3, Point3) {
    let zero = Rat::from_integer(0.into());
    let one = Rat::from_integer(1.into());
    let v = [-n[0].clone(), -n[1].clone(), &one - &n[2]];
    let vv: Rat = v.iter().map(|c| c * c).sum();
    let col = |k: usize| {
        let e: Vec<Rat> = (0..3)
            .map(|r| {
                let id = if r == k { one.clone() } else { zero.clone() };
                if vv == zero {
                    id
                } else {
                    id - Rat::from_integer(2.into()) * &v[k] * &v[r] / &vv
                }
            })
            .collect();
        Point3::rat(e[0].clone(), e[1].clone(), e[2].clone())
    };
    (col(0), col(1))
}

/// Intersects every ball with `p`. The plane normal must have rational
/// length so that the frame is rational and orthonormal; squared radii of
/// the sections are `r² − dist(c, p)²`.
pub fn slice(s: &ConvexSystem3, p: &Plane3) -> Result<Slice> {
    let normal: Vec<Rat> = p.normal.coords().iter().map(|c| rat(c)).collect::<Result<_>>()?;
    let offset = rat(&p.offset)?;
    let nn: Rat = normal.iter().map(|c| c * c).sum();
    let len = QuadNum::sqrt_rat(&nn)?
        .as_rat()
        .cloned()
        .ok_or_else(|| Error::InvalidInput("plane normal must have rational length".into()))?;
    let unit = [&normal[0] / &len, &normal[1] / &len, &normal[2] / &len];
    let (e1, e2) = frame(unit.clone());
    let n = Point3::rat(normal[0].clone(), normal[1].clone(), normal[2].clone());
    let origin = n.scale_rat(&(&offset / &nn));

    let mut discs = Vec::new();
    let mut balls = Vec::new();
    for (k, b) in s.balls().iter().enumerate() {
        let c = b.center();
        let h = rat(&p.eval(&c))? / &len;
        let r2 = &b.radius_sq - &h * &h;
        if r2 <= Rat::from_integer(0.into()) {
            continue;
        }
        let w = c.sub(&origin);
        discs.push(Disc::new(rat(&w.dot(&e1))?, rat(&w.dot(&e2))?, r2)?);
        balls.push(k);
    }
    if discs.len() < 2 {
        return Err(Error::TooFewIntersected);
    }
    Ok(Slice { system: ConvexSystem2::from_discs(discs)?, balls, origin, e1, e2 })
}
