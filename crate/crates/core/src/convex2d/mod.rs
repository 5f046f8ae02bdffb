//! Ordinary lines of planar convex systems.
//!
//! Bodies are discs (every predicate exact) or arc-gons, the intersection
//! of finitely many discs, whose classification falls back to certified
//! interval arithmetic when no exact shortcut applies.
//!
//! The search is finite because of a completeness argument. Let `L` meet
//! the union `U` in exactly two points. If `L` crossed some body it would
//! meet `U` in a segment, so `L` misses or supports every body. A
//! supporting line of a strictly convex body touches it in one point, so
//! `L` supports exactly two bodies and misses the rest. Its contact with a
//! body is either a corner or a smooth boundary point where `L` is tangent
//! to that arc's circle. Hence `L` is a common tangent of two circles, a
//! tangent from a corner to a circle, or a line through two corners, taken
//! over all pairs of bodies. Each such candidate is classified against
//! every body.

mod classify;
mod fig3;
mod search;
pub mod tangent;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{orient2, Orientation, Point2};
use crate::quad::{rat_serde, QuadNum, Rat};

pub use classify::{classify_body, classify_line, Certainty, LineBodyRelation, Verdict};
pub use fig3::{chain_arcgon, fig3_counterexample, ChainSpec, FIG3_BULGE, FIG3_MIDDLE, FIG3_OUTER};
pub use search::{
    candidate_lines, no_ordinary_line_check, ordinary_lines, ordinary_lines_disc_system, Candidate,
    CheckOptions, NoOrdinaryReport, OrdinaryLineCertificate,
};
pub use tangent::{circle_tangents, TangentKind};

/// A closed disc, or the circle bounding it, with rational center and
/// rational squared radius.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Disc {
    #[serde(with = "rat_serde")]
    pub cx: Rat,
    #[serde(with = "rat_serde")]
    pub cy: Rat,
    #[serde(with = "rat_serde")]
    pub r2: Rat,
}

impl Disc {
    pub fn new(cx: Rat, cy: Rat, r2: Rat) -> Result<Disc> {
        let d = Disc { cx, cy, r2 };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        if self.r2 <= Rat::from_integer(0.into()) {
            return Err(Error::InvalidInput("disc radius must be positive".into()));
        }
        Ok(())
    }

    pub fn center(&self) -> Point2 {
        Point2::rat(self.cx.clone(), self.cy.clone())
    }

    pub fn radius_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.r2.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// `|p − c|² − r²`: negative inside, zero on the circle.
    pub fn power(&self, p: &Point2) -> QuadNum {
        let v = p.sub(&self.center());
        &v.dot(&v) - &QuadNum::from_rat(self.r2.clone())
    }
}

/// A rational point in JSON form `{"x": "p/q", "y": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatPoint {
    #[serde(with = "rat_serde")]
    pub x: Rat,
    #[serde(with = "rat_serde")]
    pub y: Rat,
}

impl RatPoint {
    pub fn to_point(&self) -> Point2 {
        Point2::rat(self.x.clone(), self.y.clone())
    }
}

/// A strictly convex body bounded by circular arcs: the intersection of the
/// discs in `arcs`. Corner `k` is where arc `k−1` ends and arc `k` begins,
/// corners run counterclockwise, and arc `k` joins corner `k` to `k+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcGon {
    pub corners: Vec<RatPoint>,
    pub arcs: Vec<Disc>,
}

impl ArcGon {
    pub fn new(corners: Vec<RatPoint>, arcs: Vec<Disc>) -> Result<ArcGon> {
        let g = ArcGon { corners, arcs };
        g.validate()?;
        Ok(g)
    }

    pub fn corner_points(&self) -> Vec<Point2> {
        self.corners.iter().map(RatPoint::to_point).collect()
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInput(m));
        let m = self.corners.len();
        if m < 2 || self.arcs.len() != m {
            return bad(format!("arc-gon needs matching corners and arcs, got {m} and {}", self.arcs.len()));
        }
        for a in &self.arcs {
            a.validate()?;
        }
        let pts = self.corner_points();
        for k in 0..m {
            let prev = (k + m - 1) % m;
            for (j, arc) in self.arcs.iter().enumerate() {
                let s = arc.power(&pts[k]).sign();
                let on_boundary = j == k || j == prev;
                if on_boundary && s != 0 {
                    return bad(format!("corner {k} is not on arc {j}"));
                }
                if !on_boundary && s >= 0 {
                    return bad(format!("corner {k} is not strictly inside arc {j}"));
                }
            }
            let next = (k + 1) % m;
            // the arc bulges outward, so its center is left of the chord
            if orient2(&pts[k], &pts[next], &self.arcs[k].center())? != Orientation::CounterClockwise {
                return bad(format!("arc {k} is not the outward minor arc"));
            }
            if m >= 3 && orient2(&pts[k], &pts[next], &pts[(k + 2) % m])? != Orientation::CounterClockwise {
                return bad(format!("corners are not in convex counterclockwise order at {k}"));
            }
        }
        Ok(())
    }

    /// Mean of the corners, an interior point.
    pub fn interior_point(&self) -> Point2 {
        let m = Rat::from_integer((self.corners.len() as i64).into());
        let sx: Rat = self.corners.iter().map(|c| c.x.clone()).sum();
        let sy: Rat = self.corners.iter().map(|c| c.y.clone()).sum();
        Point2::rat(sx / &m, sy / m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body2 {
    Disc(Disc),
    ArcGon(ArcGon),
}

impl Body2 {
    /// Circles carrying the boundary.
    pub fn circles(&self) -> &[Disc] {
        match self {
            Body2::Disc(d) => std::slice::from_ref(d),
            Body2::ArcGon(g) => &g.arcs,
        }
    }

    pub fn corners(&self) -> Vec<Point2> {
        match self {
            Body2::Disc(_) => Vec::new(),
            Body2::ArcGon(g) => g.corner_points(),
        }
    }

    pub fn interior_point(&self) -> Point2 {
        match self {
            Body2::Disc(d) => d.center(),
            Body2::ArcGon(g) => g.interior_point(),
        }
    }

    pub fn is_disc(&self) -> bool {
        matches!(self, Body2::Disc(_))
    }
}

/// A validated convex system: at least two pairwise disjoint bodies. Discs
/// are numbered before arc-gons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSystem", into = "RawSystem")]
pub struct ConvexSystem2 {
    bodies: Vec<Body2>,
}

#[derive(Serialize, Deserialize)]
struct RawSystem {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    discs: Vec<Disc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    arcgons: Vec<ArcGon>,
}

impl TryFrom<RawSystem> for ConvexSystem2 {
    type Error = Error;
    fn try_from(raw: RawSystem) -> Result<Self> {
        let mut bodies: Vec<Body2> = Vec::new();
        for d in raw.discs {
            d.validate()?;
            bodies.push(Body2::Disc(d));
        }
        for g in raw.arcgons {
            g.validate()?;
            bodies.push(Body2::ArcGon(g));
        }
        ConvexSystem2::new(bodies)
    }
}

impl From<ConvexSystem2> for RawSystem {
    fn from(s: ConvexSystem2) -> Self {
        let mut raw = RawSystem { discs: Vec::new(), arcgons: Vec::new() };
        for b in s.bodies {
            match b {
                Body2::Disc(d) => raw.discs.push(d),
                Body2::ArcGon(g) => raw.arcgons.push(g),
            }
        }
        raw
    }
}

impl ConvexSystem2 {
    pub fn new(mut bodies: Vec<Body2>) -> Result<ConvexSystem2> {
        if bodies.len() < 2 {
            return Err(Error::TooFewPoints { needed: 2, got: bodies.len() });
        }
        bodies.sort_by_key(|b| !b.is_disc());
        for i in 0..bodies.len() {
            for j in i + 1..bodies.len() {
                if !disjoint(&bodies[i], &bodies[j])? {
                    return Err(Error::BodiesIntersect(i, j));
                }
            }
        }
        Ok(ConvexSystem2 { bodies })
    }

    pub fn from_discs(discs: Vec<Disc>) -> Result<ConvexSystem2> {
        ConvexSystem2::new(discs.into_iter().map(Body2::Disc).collect())
    }

    pub fn bodies(&self) -> &[Body2] {
        &self.bodies
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }

    pub fn all_discs(&self) -> bool {
        self.bodies.iter().all(Body2::is_disc)
    }
}

/// Disjoint discs: `|c1 − c2|² > (ρ1 + ρ2)²`, decided without roots.
pub fn discs_disjoint(d1: &Disc, d2: &Disc) -> bool {
    let v = d1.center().sub(&d2.center());
    let dist2 = v.dot(&v).as_rat().cloned().expect("rational centers");
    let slack = dist2 - &d1.r2 - &d2.r2;
    slack > Rat::from_integer(0.into()) && &slack * &slack > Rat::from_integer(4.into()) * &d1.r2 * &d2.r2
}

/// Two bodies are disjoint iff a common tangent separates them with
/// distinct contact points. Candidates are exact or certified.
fn disjoint(a: &Body2, b: &Body2) -> Result<bool> {
    if let (Body2::Disc(d1), Body2::Disc(d2)) = (a, b) {
        return Ok(discs_disjoint(d1, d2));
    }
    let opts = CheckOptions::default();
    let (ia, ib) = (a.interior_point(), b.interior_point());
    for cand in search::pair_candidates(a, b)? {
        // cheap side test first: the interiors must be strictly apart
        if cand.line.eval(&ia).sign() * cand.line.eval(&ib).sign() >= 0 {
            continue;
        }
        let va = classify_body(&cand.line, a, opts.precision_cap);
        let vb = classify_body(&cand.line, b, opts.precision_cap);
        if let (Some(LineBodyRelation::Tangent { point: pa }), Some(LineBodyRelation::Tangent { point: pb })) =
            (va.relation, vb.relation)
        {
            if pa != pb {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests;
