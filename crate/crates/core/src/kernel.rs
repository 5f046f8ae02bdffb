//! Exact planar and spatial primitives shared by the geometry modules.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::{common_radicand, QuadNum, Rat};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point2 {
    pub x: QuadNum,
    pub y: QuadNum,
}

impl Point2 {
    pub fn new(x: QuadNum, y: QuadNum) -> Point2 {
        Point2 { x, y }
    }

    pub fn rat(x: Rat, y: Rat) -> Point2 {
        Point2 { x: x.into(), y: y.into() }
    }

    pub fn ints(x: i64, y: i64) -> Point2 {
        Point2 { x: x.into(), y: y.into() }
    }

    pub fn radicand(&self) -> Result<Option<BigUint>> {
        common_radicand([&self.x, &self.y])
    }

    pub fn sub(&self, o: &Point2) -> Point2 {
        Point2 { x: &self.x - &o.x, y: &self.y - &o.y }
    }

    pub fn add(&self, o: &Point2) -> Point2 {
        Point2 { x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn scale(&self, s: &QuadNum) -> Point2 {
        Point2 { x: &self.x * s, y: &self.y * s }
    }

    pub fn dot(&self, o: &Point2) -> QuadNum {
        &(&self.x * &o.x) + &(&self.y * &o.y)
    }

    pub fn cross(&self, o: &Point2) -> QuadNum {
        &(&self.x * &o.y) - &(&self.y * &o.x)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    fn from_sign(s: i8) -> Orientation {
        match s {
            s if s > 0 => Orientation::CounterClockwise,
            0 => Orientation::Collinear,
            _ => Orientation::Clockwise,
        }
    }
}

/// Sign of `det[q − p, r − p]`.
pub fn orient2(p: &Point2, q: &Point2, r: &Point2) -> Result<Orientation> {
    common_radicand([&p.x, &p.y, &q.x, &q.y, &r.x, &r.y])?;
    Ok(Orientation::from_sign(q.sub(p).cross(&r.sub(p)).sign()))
}

/// The line `A·x + B·y + C = 0`, scaled so the first nonzero of `A`, `B` is 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Line2 {
    #[serde(rename = "A")]
    pub a: QuadNum,
    #[serde(rename = "B")]
    pub b: QuadNum,
    #[serde(rename = "C")]
    pub c: QuadNum,
}

impl fmt::Debug for Line2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]x + [{}]y + [{}] = 0", self.a, self.b, self.c)
    }
}

impl Line2 {
    /// Canonical line from raw coefficients.
    pub fn new(a: QuadNum, b: QuadNum, c: QuadNum) -> Result<Line2> {
        common_radicand([&a, &b, &c])?;
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(Error::DegenerateLine);
        };
        let inv = lead.inv()?;
        Ok(Line2 { a: &a * &inv, b: &b * &inv, c: &c * &inv })
    }

    /// Signed residual `A·x + B·y + C`.
    pub fn eval(&self, p: &Point2) -> QuadNum {
        &(&(&self.a * &p.x) + &(&self.b * &p.y)) + &self.c
    }

    pub fn normal(&self) -> Point2 {
        Point2::new(self.a.clone(), self.b.clone())
    }

    /// Direction vector `(B, −A)`.
    pub fn direction(&self) -> Point2 {
        Point2::new(self.b.clone(), -&self.a)
    }

    pub fn radicand(&self) -> Option<BigUint> {
        common_radicand([&self.a, &self.b, &self.c]).ok().flatten()
    }

    /// Orthogonal projection of `p` onto the line.
    pub fn foot(&self, p: &Point2) -> Point2 {
        let n = self.normal();
        let t = self.eval(p).checked_div(&n.dot(&n)).expect("nonzero normal");
        p.sub(&n.scale(&t))
    }

    /// Some point on the line.
    pub fn point(&self) -> Point2 {
        self.foot(&Point2::ints(0, 0))
    }

    pub fn key(&self) -> LineKey {
        line_key(self)
    }
}

/// Line through two distinct points.
pub fn line_through(p: &Point2, q: &Point2) -> Result<Line2> {
    common_radicand([&p.x, &p.y, &q.x, &q.y])?;
    if p == q {
        return Err(Error::DegenerateLine);
    }
    let a = &p.y - &q.y;
    let b = &q.x - &p.x;
    let c = -&(&(&a * &p.x) + &(&b * &p.y));
    Line2::new(a, b, c)
}

type QuadParts = (Rat, Rat, BigUint);

fn parts(x: &QuadNum) -> QuadParts {
    (x.a().clone(), x.b().clone(), x.radicand().cloned().unwrap_or_default())
}

/// Structural key of a canonical line: equal iff the lines coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineKey([QuadParts; 3]);

pub fn line_key(l: &Line2) -> LineKey {
    LineKey([parts(&l.a), parts(&l.b), parts(&l.c)])
}

pub fn point_on_line2(p: &Point2, l: &Line2) -> bool {
    l.eval(p).is_zero()
}

/// Squared distance from `p` to `l` as the unreduced pair
/// `((A·x + B·y + C)², A² + B²)`.
pub fn dist2_sq_num_den(p: &Point2, l: &Line2) -> (QuadNum, QuadNum) {
    let r = l.eval(p);
    (r.square(), l.normal().dot(&l.normal()))
}

/// A point or vector in 3-space.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point3 {
    pub x: QuadNum,
    pub y: QuadNum,
    pub z: QuadNum,
}

pub type Vec3 = Point3;

impl fmt::Debug for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl Point3 {
    pub fn new(x: QuadNum, y: QuadNum, z: QuadNum) -> Point3 {
        Point3 { x, y, z }
    }

    pub fn rat(x: Rat, y: Rat, z: Rat) -> Point3 {
        Point3 { x: x.into(), y: y.into(), z: z.into() }
    }

    pub fn ints(x: i64, y: i64, z: i64) -> Point3 {
        Point3 { x: x.into(), y: y.into(), z: z.into() }
    }

    pub fn coords(&self) -> [&QuadNum; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn radicand(&self) -> Result<Option<BigUint>> {
        common_radicand(self.coords())
    }

    pub fn is_rational(&self) -> bool {
        self.coords().iter().all(|c| c.is_rational())
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Point3) -> Point3 {
        Point3::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn sub(&self, o: &Point3) -> Point3 {
        Point3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    pub fn scale(&self, s: &QuadNum) -> Point3 {
        Point3::new(&self.x * s, &self.y * s, &self.z * s)
    }

    pub fn scale_rat(&self, s: &Rat) -> Point3 {
        Point3::new(self.x.scale(s), self.y.scale(s), self.z.scale(s))
    }

    pub fn dot(&self, o: &Point3) -> QuadNum {
        &(&(&self.x * &o.x) + &(&self.y * &o.y)) + &(&self.z * &o.z)
    }

    pub fn cross(&self, o: &Point3) -> Point3 {
        Point3::new(
            &(&self.y * &o.z) - &(&self.z * &o.y),
            &(&self.z * &o.x) - &(&self.x * &o.z),
            &(&self.x * &o.y) - &(&self.y * &o.x),
        )
    }

    pub fn norm2(&self) -> QuadNum {
        self.dot(self)
    }

    pub fn checked_sub(&self, o: &Point3) -> Result<Point3> {
        Ok(Point3::new(
            self.x.checked_sub(&o.x)?,
            self.y.checked_sub(&o.y)?,
            self.z.checked_sub(&o.z)?,
        ))
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }
}

/// Plane `⟨normal, x⟩ = offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plane3 {
    pub normal: Vec3,
    pub offset: QuadNum,
}

impl Plane3 {
    /// Builds a plane; a rational normal is scaled to a primitive integer
    /// vector with positive leading entry.
    pub fn new(normal: Vec3, offset: QuadNum) -> Result<Plane3> {
        if normal.is_zero() {
            return Err(Error::InvalidInput("plane normal is zero".into()));
        }
        common_radicand(normal.coords().into_iter().chain([&offset]))?;
        if !normal.is_rational() || !offset.is_rational() {
            return Ok(Plane3 { normal, offset });
        }
        let coords: Vec<Rat> = normal.coords().iter().map(|c| c.a().clone()).collect();
        let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coords.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let lead_neg = ints.iter().find(|c| !c.is_zero()).map(|c| c.is_negative()).unwrap_or(false);
        let mut factor = Rat::new(lcm, gcd);
        if lead_neg {
            factor = -factor;
        }
        Ok(Plane3 { normal: normal.scale_rat(&factor), offset: offset.scale(&factor) })
    }

    /// Plane through `p` with the given normal.
    pub fn through(normal: Vec3, p: &Point3) -> Result<Plane3> {
        let offset = normal.dot(p);
        Plane3::new(normal, offset)
    }

    /// `⟨normal, p⟩ − offset`.
    pub fn eval(&self, p: &Point3) -> QuadNum {
        &self.normal.dot(p) - &self.offset
    }
}

/// Line `point + t·dir`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line3 {
    pub point: Point3,
    pub dir: Vec3,
}

impl Line3 {
    pub fn new(point: Point3, dir: Vec3) -> Result<Line3> {
        if dir.is_zero() {
            return Err(Error::DegenerateLine);
        }
        common_radicand(point.coords().into_iter().chain(dir.coords()))?;
        Ok(Line3 { point, dir })
    }

    pub fn through(p: &Point3, q: &Point3) -> Result<Line3> {
        Line3::new(p.clone(), q.checked_sub(p)?)
    }

    /// Squared distance from `c` as `(|(c − p) × d|², |d|²)`.
    pub fn dist2_num_den(&self, c: &Point3) -> (QuadNum, QuadNum) {
        let w = c.sub(&self.point);
        (w.cross(&self.dir).norm2(), self.dir.norm2())
    }

    pub fn foot(&self, c: &Point3) -> Point3 {
        let w = c.sub(&self.point);
        let t = w.dot(&self.dir).checked_div(&self.dir.norm2()).expect("nonzero direction");
        self.point.add(&self.dir.scale(&t))
    }

    pub fn contains(&self, p: &Point3) -> bool {
        p.sub(&self.point).cross(&self.dir).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{int, rat};

    fn s3(b: Rat) -> QuadNum {
        QuadNum::new(int(0), b, 3u32)
    }

    #[test]
    fn orient2_examples() {
        let o = |p, q, r| orient2(&p, &q, &r).unwrap();
        assert_eq!(o(Point2::ints(0, 0), Point2::ints(1, 0), Point2::ints(2, 0)), Orientation::Collinear);
        assert_eq!(
            o(Point2::ints(0, 0), Point2::ints(1, 0), Point2::ints(0, 1)),
            Orientation::CounterClockwise
        );
        let p = Point2::ints(1, 0);
        let q = Point2::new(rat(-1, 2).into(), s3(rat(1, 2)));
        let s = Point2::new(rat(1, 4).into(), s3(rat(1, 4)));
        assert_eq!(o(p, q, s), Orientation::Collinear);
    }

    #[test]
    fn orient2_rejects_mixed_fields() {
        let p = Point2::new(QuadNum::sqrt_int(2), int(0).into());
        let q = Point2::new(QuadNum::sqrt_int(3), int(0).into());
        assert!(orient2(&p, &q, &Point2::ints(0, 1)).is_err());
    }

    #[test]
    fn line_through_examples() {
        let l = line_through(&Point2::ints(0, 0), &Point2::ints(1, 0)).unwrap();
        assert_eq!((l.a.clone(), l.b.clone(), l.c.clone()), (0.into(), 1.into(), 0.into()));
        let l = line_through(&Point2::ints(0, 0), &Point2::ints(0, 1)).unwrap();
        assert_eq!((l.a.clone(), l.b.clone(), l.c.clone()), (1.into(), 0.into(), 0.into()));
        let l = line_through(&Point2::ints(1, 0), &Point2::ints(0, 1)).unwrap();
        assert_eq!((l.a.clone(), l.b.clone(), l.c.clone()), (1.into(), 1.into(), (-1).into()));
        assert_eq!(line_through(&Point2::ints(3, 3), &Point2::ints(3, 3)), Err(Error::DegenerateLine));
    }

    #[test]
    fn line_key_examples() {
        let k1 = line_key(&line_through(&Point2::ints(0, 0), &Point2::ints(1, 0)).unwrap());
        let k2 = line_key(&line_through(&Point2::ints(2, 0), &Point2::ints(5, 0)).unwrap());
        assert_eq!(k1, k2);
        let k3 = line_key(&line_through(&Point2::ints(0, 1), &Point2::ints(1, 1)).unwrap());
        assert_ne!(k1, k3);
        let tri = [Point2::ints(0, 0), Point2::ints(4, 0), Point2::ints(1, 3)];
        let keys: Vec<_> = (0..3).map(|i| line_through(&tri[i], &tri[(i + 1) % 3]).unwrap().key()).collect();
        assert!(keys[0] != keys[1] && keys[1] != keys[2] && keys[0] != keys[2]);
    }

    #[test]
    fn distance_examples() {
        let y0 = line_through(&Point2::ints(0, 0), &Point2::ints(1, 0)).unwrap();
        let (n, d) = dist2_sq_num_den(&Point2::ints(0, 2), &y0);
        assert_eq!(n.checked_div(&d).unwrap(), QuadNum::from_int(4));
        assert!(point_on_line2(&Point2::ints(7, 0), &y0));
        let (n, _) = dist2_sq_num_den(&Point2::ints(7, 0), &y0);
        assert!(n.is_zero());
        let diag = line_through(&Point2::ints(1, 0), &Point2::ints(0, 1)).unwrap();
        let (n, d) = dist2_sq_num_den(&Point2::ints(1, 1), &diag);
        assert_eq!(n.checked_div(&d).unwrap(), QuadNum::from_rat(rat(1, 2)));
    }

    #[test]
    fn irrational_lines_are_canonical() {
        let p = Point2::new(int(1).into(), s3(int(1)));
        let q = Point2::new(int(2).into(), s3(int(3)));
        let l1 = line_through(&p, &q).unwrap();
        let l2 = line_through(&q, &p).unwrap();
        assert_eq!(l1, l2);
        assert!(point_on_line2(&p, &l1) && point_on_line2(&q, &l1));
        assert_eq!(l1.a, QuadNum::one());
    }

    #[test]
    fn plane_canonical_form() {
        let p = Plane3::new(Point3::ints(0, -2, -4), (-6).into()).unwrap();
        assert_eq!(p.normal, Point3::ints(0, 1, 2));
        assert_eq!(p.offset, QuadNum::from_int(3));
    }

    #[test]
    fn line3_distance() {
        let l = Line3::new(Point3::ints(0, 0, 0), Point3::ints(1, 0, 0)).unwrap();
        let (n, d) = l.dist2_num_den(&Point3::ints(5, 0, 2));
        assert_eq!(n.checked_div(&d).unwrap(), QuadNum::from_int(4));
        assert_eq!(l.foot(&Point3::ints(5, 0, 2)), Point3::ints(5, 0, 0));
    }
}
