//! Exact common tangents of circles with rational centers and a rational
//! radius ratio, built through the homothety centers so that every line
//! lives in a single quadratic field.

use crate::error::{Error, Result};
use crate::kernel::{line_through, Line2, Point2};
use crate::quad::{QuadNum, Rat};

use super::Disc;

/// Which family a common tangent belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TangentKind {
    External,
    Internal,
    /// Tangent from a corner to a circle.
    CornerArc,
    /// Line through two corners.
    CornerCorner,
}

fn perp(v: &Point2) -> Point2 {
    Point2::new(-&v.y, v.x.clone())
}

/// Lines through the rational point `h` tangent to `circle`. Empty if `h`
/// is inside, one line if `h` is on the circle.
pub fn tangents_from_point(h: &Point2, circle: &Disc) -> Result<Vec<Line2>> {
    let v = circle.center().sub(h);
    let big_v = v.dot(&v);
    let r2 = QuadNum::from_rat(circle.r2.clone());
    let excess = big_v.checked_sub(&r2)?;
    let line = |n: Point2| -> Result<Line2> {
        let c = -&n.dot(h);
        Line2::new(n.x, n.y, c)
    };
    match excess.sign() {
        s if s < 0 => Ok(Vec::new()),
        0 => Ok(vec![line(v)?]),
        _ => {
            let beta_sq = excess.checked_div(&r2)?.as_rat().cloned().ok_or_else(|| {
                Error::InvalidInput("tangent point must be rational".into())
            })?;
            let beta = QuadNum::sqrt_rat(&beta_sq)?;
            let vp = perp(&v);
            let plus = line(v.add(&vp.scale(&beta)))?;
            let minus = line(v.sub(&vp.scale(&beta)))?;
            Ok(vec![plus, minus])
        }
    }
}

/// `ρ1/ρ2` when it is rational.
pub fn radius_ratio(c1: &Disc, c2: &Disc) -> Result<Rat> {
    let q = &c1.r2 / &c2.r2;
    QuadNum::sqrt_rat(&q)?.as_rat().cloned().ok_or(Error::IrrationalRadiusRatio)
}

/// All common tangent lines of two circles, externals first, each family
/// in a fixed order. Fewer than four lines come back when the circles
/// overlap or nest; concentric circles have none.
pub fn circle_tangents(c1: &Disc, c2: &Disc) -> Result<Vec<(TangentKind, Line2)>> {
    let (p1, p2) = (c1.center(), c2.center());
    if p1 == p2 {
        return Ok(Vec::new());
    }
    let mu = QuadNum::from_rat(radius_ratio(c1, c2)?);
    let one = QuadNum::one();
    let mut out = Vec::new();

    if mu == one {
        // parallel externals: <x − p1, w⊥> = ±ρ|w⊥|
        let wp = perp(&p2.sub(&p1));
        let len = QuadNum::sqrt_rat(&(&c1.r2 * wp.dot(&wp).as_rat().expect("rational")))?;
        let base = wp.dot(&p1);
        for off in [len.clone(), -&len] {
            let c = -&base.checked_add(&off)?;
            out.push((TangentKind::External, Line2::new(wp.x.clone(), wp.y.clone(), c)?));
        }
    } else {
        let den = one.checked_sub(&mu)?.inv()?;
        let h = p1.sub(&p2.scale(&mu)).scale(&den);
        for l in tangents_from_point(&h, c1)? {
            out.push((TangentKind::External, l));
        }
    }

    let den = one.checked_add(&mu)?.inv()?;
    let h = p1.add(&p2.scale(&mu)).scale(&den);
    for l in tangents_from_point(&h, c1)? {
        out.push((TangentKind::Internal, l));
    }
    Ok(out)
}

/// Line through two distinct corners.
pub fn corner_line(a: &Point2, b: &Point2) -> Result<Line2> {
    line_through(a, b)
}
