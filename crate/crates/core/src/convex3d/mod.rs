//! Ordinary lines of ball systems in 3-space.
//!
//! Every returned line is certified exactly: the squared distance from each
//! center is compared with the squared radius in the line's quadratic field.
//! The search that proposes lines runs in floating point and is only a
//! heuristic. Proposals are snapped to exactly representable lines tangent
//! to two balls (see `snap`) before certification.

mod float;
mod search;
mod slice;
mod snap;
mod support;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{Line3, Point3};
use crate::quad::{int, rat_serde, Rat};

pub use search::{
    find_ordinary_line_3d, find_ordinary_line_3d_seeded, pstar_route, strategies, Attempt, RandomSlices,
    SearchOutcome, Strategy3, SupportingPlane, ThroughCenters,
};
pub use slice::{slice, Slice};
pub use support::{cmp_rat_plus_sqrt, supporting_plane_contacts, Contact};

/// A rational point in JSON form `{"x", "y", "z"}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatPoint3 {
    #[serde(with = "rat_serde")]
    pub x: Rat,
    #[serde(with = "rat_serde")]
    pub y: Rat,
    #[serde(with = "rat_serde")]
    pub z: Rat,
}

impl RatPoint3 {
    pub fn to_point(&self) -> Point3 {
        Point3::rat(self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn to_f64(&self) -> [f64; 3] {
        self.to_point().to_f64()
    }
}

/// A closed ball with rational center and rational squared radius.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ball {
    pub center: RatPoint3,
    #[serde(with = "rat_serde")]
    pub radius_sq: Rat,
}

impl Ball {
    pub fn new(x: Rat, y: Rat, z: Rat, radius_sq: Rat) -> Result<Ball> {
        let b = Ball { center: RatPoint3 { x, y, z }, radius_sq };
        b.validate()?;
        Ok(b)
    }

    pub fn ints(x: i64, y: i64, z: i64, radius_sq: i64) -> Result<Ball> {
        Ball::new(int(x), int(y), int(z), int(radius_sq))
    }

    fn validate(&self) -> Result<()> {
        if self.radius_sq <= Rat::from_integer(0.into()) {
            return Err(Error::InvalidInput("ball radius must be positive".into()));
        }
        Ok(())
    }

    pub fn center(&self) -> Point3 {
        self.center.to_point()
    }

    pub fn radius_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.radius_sq.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BallRelation {
    Miss,
    Tangent,
    Cross,
}

/// Exact relation of a line to a closed ball.
pub fn classify_line3(l: &Line3, b: &Ball) -> BallRelation {
    let (num, den) = l.dist2_num_den(&b.center());
    match (&num - &den.scale(&b.radius_sq)).sign() {
        s if s > 0 => BallRelation::Miss,
        0 => BallRelation::Tangent,
        _ => BallRelation::Cross,
    }
}

/// Pairwise disjoint balls, at least two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSystem3", into = "RawSystem3")]
pub struct ConvexSystem3 {
    balls: Vec<Ball>,
}

#[derive(Serialize, Deserialize)]
struct RawSystem3 {
    balls: Vec<Ball>,
}

impl TryFrom<RawSystem3> for ConvexSystem3 {
    type Error = Error;
    fn try_from(raw: RawSystem3) -> Result<Self> {
        for b in &raw.balls {
            b.validate()?;
        }
        ConvexSystem3::new(raw.balls)
    }
}

impl From<ConvexSystem3> for RawSystem3 {
    fn from(s: ConvexSystem3) -> Self {
        RawSystem3 { balls: s.balls }
    }
}

impl ConvexSystem3 {
    pub fn new(balls: Vec<Ball>) -> Result<ConvexSystem3> {
        if balls.len() < 2 {
            return Err(Error::TooFewPoints { needed: 2, got: balls.len() });
        }
        for i in 0..balls.len() {
            for j in i + 1..balls.len() {
                if !balls_disjoint(&balls[i], &balls[j]) {
                    return Err(Error::BodiesIntersect(i, j));
                }
            }
        }
        Ok(ConvexSystem3 { balls })
    }

    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }
}

/// `|c1 − c2|² > (ρ1 + ρ2)²`, decided without roots.
pub fn balls_disjoint(b1: &Ball, b2: &Ball) -> bool {
    let v = b1.center().sub(&b2.center());
    let dist2 = v.norm2().as_rat().cloned().expect("rational centers");
    let slack = dist2 - &b1.radius_sq - &b2.radius_sq;
    slack > Rat::from_integer(0.into()) && &slack * &slack > Rat::from_integer(4.into()) * &b1.radius_sq * &b2.radius_sq
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrdinaryLine3Certificate {
    pub line: Line3,
    pub balls: (usize, usize),
    pub contacts: (Point3, Point3),
    pub relations: Vec<BallRelation>,
    /// Name of the strategy that proposed the line.
    pub route: String,
}

impl OrdinaryLine3Certificate {
    /// Certifies `l` against every ball: `Some` iff exactly two are touched
    /// and the rest missed.
    pub fn certify(s: &ConvexSystem3, l: &Line3, route: &str) -> Option<OrdinaryLine3Certificate> {
        let mut relations = Vec::with_capacity(s.len());
        let mut touched = Vec::new();
        for (k, b) in s.balls().iter().enumerate() {
            let r = classify_line3(l, b);
            match r {
                BallRelation::Cross => return None,
                BallRelation::Tangent if touched.len() == 2 => return None,
                BallRelation::Tangent => touched.push(k),
                BallRelation::Miss => {}
            }
            relations.push(r);
        }
        let [i, j] = touched[..] else { return None };
        let contact = |k: usize| l.foot(&s.balls()[k].center());
        Some(OrdinaryLine3Certificate {
            line: l.clone(),
            balls: (i, j),
            contacts: (contact(i), contact(j)),
            relations,
            route: route.to_string(),
        })
    }

    /// Independent exact re-check.
    pub fn verify(&self, s: &ConvexSystem3) -> bool {
        let rel: Vec<BallRelation> = s.balls().iter().map(|b| classify_line3(&self.line, b)).collect();
        let touched: Vec<usize> = (0..rel.len()).filter(|&k| rel[k] == BallRelation::Tangent).collect();
        rel == self.relations
            && touched == [self.balls.0, self.balls.1]
            && rel.iter().all(|r| *r != BallRelation::Cross)
            && self.line.contains(&self.contacts.0)
            && self.line.contains(&self.contacts.1)
    }
}
