//! Unions of line segments plus finitely many extra points: exact meet
//! counts, a complete ordinary-line search over the dual arrangement, the
//! segment graph and the six-segment classification.

mod arrangement;
mod figs;
mod graph;
mod six;

use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::{Line2, Point2};
use crate::quad::{parse_rat, rat_cmp, rat_sign, rat_to_string, QuadNum, Rat};

pub use arrangement::{
    face_samples, no_ordinary_line_certificate, ordinary_line_search, CellKind, CellRecord, DualSample,
    NoOrdinaryLineCertificate, OrdinaryWitness,
};
pub use figs::{fig5_family, fig6_family, FIG6_PANELS};
pub use graph::{build_geometric_graph, canonical_form, is_3_connected, is_3_connected_edges, GeometricGraph};
pub use six::{
    classify_six, hull_vertex_claim_check, theorem5_harness, ClaimStatus, HullClaimReport, SixClassification,
    SixType, Theorem5Verdict,
};

/// A rational point, serialized as `["x", "y"]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pt {
    pub x: Rat,
    pub y: Rat,
}

impl Pt {
    pub fn new(x: Rat, y: Rat) -> Pt {
        Pt { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Pt {
        Pt::new(Rat::from_integer(x.into()), Rat::from_integer(y.into()))
    }

    pub fn to_point(&self) -> Point2 {
        Point2::rat(self.x.clone(), self.y.clone())
    }

    pub fn to_f64(&self) -> [f64; 2] {
        use num_traits::ToPrimitive;
        [self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN)]
    }

    /// `p + t·(q − p)`.
    pub fn lerp(&self, q: &Pt, t: &Rat) -> Pt {
        Pt::new(&self.x + t * (&q.x - &self.x), &self.y + t * (&q.y - &self.y))
    }
}

impl Serialize for Pt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [rat_to_string(&self.x), rat_to_string(&self.y)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Pt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Pt, D::Error> {
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let p = |s: &str| parse_rat(s).map_err(serde::de::Error::custom);
        Ok(Pt::new(p(&x)?, p(&y)?))
    }
}

/// Sign of the orientation determinant of `p, q, r`.
pub fn orient(p: &Pt, q: &Pt, r: &Pt) -> i8 {
    let d = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    rat_sign(&d)
}

/// A closed segment with distinct endpoints, serialized as `[p, q]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[Pt; 2]", into = "[Pt; 2]")]
pub struct Segment {
    pub p: Pt,
    pub q: Pt,
}

impl TryFrom<[Pt; 2]> for Segment {
    type Error = Error;
    fn try_from([p, q]: [Pt; 2]) -> Result<Segment> {
        Segment::new(p, q)
    }
}

impl From<Segment> for [Pt; 2] {
    fn from(s: Segment) -> Self {
        [s.p, s.q]
    }
}

impl Segment {
    pub fn new(p: Pt, q: Pt) -> Result<Segment> {
        if p == q {
            return Err(Error::SamePoint);
        }
        Ok(Segment { p, q })
    }

    pub fn ints(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::new(Pt::ints(a.0, a.1), Pt::ints(b.0, b.1)).expect("distinct endpoints")
    }

    pub fn has_endpoint(&self, x: &Pt) -> bool {
        &self.p == x || &self.q == x
    }

    /// Parameter of a point of the carrier line, `0` at `p` and `1` at `q`.
    fn param(&self, x: &Pt) -> Rat {
        let (dx, dy) = (&self.q.x - &self.p.x, &self.q.y - &self.p.y);
        let num = (&x.x - &self.p.x) * &dx + (&x.y - &self.p.y) * &dy;
        num / (&dx * &dx + &dy * &dy)
    }

    /// `x` lies on the closed segment.
    pub fn contains(&self, x: &Pt) -> bool {
        if orient(&self.p, &self.q, x) != 0 {
            return false;
        }
        let t = self.param(x);
        rat_sign(&t) >= 0 && rat_cmp(&t, &Rat::from_integer(1.into())).is_le()
    }

    /// `x` lies in the relative interior.
    pub fn contains_interior(&self, x: &Pt) -> bool {
        self.contains(x) && !self.has_endpoint(x)
    }
}

/// Intersection type of two closed segments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SegmentIntersection {
    Empty,
    Point { point: Pt },
    Subsegment { from: Pt, to: Pt },
}

pub fn intersect_segments(s: &Segment, t: &Segment) -> SegmentIntersection {
    let (o1, o2) = (orient(&s.p, &s.q, &t.p), orient(&s.p, &s.q, &t.q));
    if o1 == 0 && o2 == 0 {
        // collinear: overlap of parameter intervals along s
        let (a, b) = (s.param(&t.p), s.param(&t.q));
        let (lo, hi) = if rat_cmp(&a, &b).is_le() { (a, b) } else { (b, a) };
        let zero = Rat::from_integer(0.into());
        let one = Rat::from_integer(1.into());
        let from = if rat_cmp(&lo, &zero).is_ge() { lo } else { zero };
        let to = if rat_cmp(&hi, &one).is_le() { hi } else { one };
        return match rat_cmp(&from, &to) {
            std::cmp::Ordering::Less => SegmentIntersection::Subsegment { from: s.p.lerp(&s.q, &from), to: s.p.lerp(&s.q, &to) },
            std::cmp::Ordering::Equal => SegmentIntersection::Point { point: s.p.lerp(&s.q, &from) },
            std::cmp::Ordering::Greater => SegmentIntersection::Empty,
        };
    }
    let (o3, o4) = (orient(&t.p, &t.q, &s.p), orient(&t.p, &t.q, &s.q));
    if o1 * o2 > 0 || o3 * o4 > 0 {
        return SegmentIntersection::Empty;
    }
    // proper or touching crossing of non-parallel carriers
    let den = (&s.q.x - &s.p.x) * (&t.q.y - &t.p.y) - (&s.q.y - &s.p.y) * (&t.q.x - &t.p.x);
    let num = (&t.p.x - &s.p.x) * (&t.q.y - &t.p.y) - (&t.p.y - &s.p.y) * (&t.q.x - &t.p.x);
    SegmentIntersection::Point { point: s.p.lerp(&s.q, &(num / den)) }
}

/// Segments plus the finite rest `M \ ∪F`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SegmentFamily {
    pub segments: Vec<Segment>,
    #[serde(default)]
    pub extra_points: Vec<Pt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conflict {
    pub segments: (usize, usize),
    pub intersection: SegmentIntersection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub conflicts: Vec<Conflict>,
}

impl SegmentFamily {
    pub fn new(segments: Vec<Segment>) -> SegmentFamily {
        SegmentFamily { segments, extra_points: Vec::new() }
    }

    /// Distinct endpoints and extra points, sorted.
    pub fn points(&self) -> Vec<Pt> {
        let set: BTreeSet<Pt> =
            self.segments.iter().flat_map(|s| [s.p.clone(), s.q.clone()]).chain(self.extra_points.iter().cloned()).collect();
        set.into_iter().collect()
    }

    /// Distinct segment endpoints, sorted.
    pub fn endpoints(&self) -> Vec<Pt> {
        let set: BTreeSet<Pt> = self.segments.iter().flat_map(|s| [s.p.clone(), s.q.clone()]).collect();
        set.into_iter().collect()
    }

    /// `M` lies on one line.
    pub fn is_collinear(&self) -> bool {
        let pts = self.points();
        let Some(q) = pts.get(1) else { return true };
        pts.iter().all(|r| orient(&pts[0], q, r) == 0)
    }
}

/// Closed segments may share points, but never a point interior to both
/// and never a subsegment.
pub fn validate_family(f: &SegmentFamily) -> ValidationReport {
    let mut conflicts = Vec::new();
    for i in 0..f.segments.len() {
        for j in i + 1..f.segments.len() {
            let (s, t) = (&f.segments[i], &f.segments[j]);
            let x = intersect_segments(s, t);
            let bad = match &x {
                SegmentIntersection::Empty => false,
                SegmentIntersection::Point { point } => s.contains_interior(point) && t.contains_interior(point),
                SegmentIntersection::Subsegment { .. } => true,
            };
            if bad {
                conflicts.push(Conflict { segments: (i, j), intersection: x });
            }
        }
    }
    ValidationReport { valid: conflicts.is_empty(), conflicts }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineMeetCount {
    Finite(usize),
    Infinite,
}

/// Rational line `a·x + b·y + c = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RLine {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl RLine {
    fn eval(&self, p: &Pt) -> Rat {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn to_line2(&self) -> Line2 {
        Line2::new(self.a.clone().into(), self.b.clone().into(), self.c.clone().into()).expect("nonzero normal")
    }
}

/// Meet count with the hit points when finite.
pub(crate) fn meet_rational(l: &RLine, f: &SegmentFamily) -> (LineMeetCount, Vec<Pt>) {
    let mut hits: BTreeSet<Pt> = BTreeSet::new();
    for s in &f.segments {
        let (ep, eq) = (l.eval(&s.p), l.eval(&s.q));
        let (sp, sq) = (rat_sign(&ep), rat_sign(&eq));
        match (sp, sq) {
            (0, 0) => return (LineMeetCount::Infinite, Vec::new()),
            (0, _) => {
                hits.insert(s.p.clone());
            }
            (_, 0) => {
                hits.insert(s.q.clone());
            }
            _ if sp != sq => {
                let t = &ep / (&ep - &eq);
                hits.insert(s.p.lerp(&s.q, &t));
            }
            _ => {}
        }
    }
    for x in &f.extra_points {
        if rat_sign(&l.eval(x)) == 0 {
            hits.insert(x.clone());
        }
    }
    (LineMeetCount::Finite(hits.len()), hits.into_iter().collect())
}

/// Number of distinct points of `M` on `l`, or `Infinite` when `l` contains
/// a subsegment of some member.
pub fn line_meet_count(l: &Line2, f: &SegmentFamily) -> LineMeetCount {
    let rational = [&l.a, &l.b, &l.c].iter().all(|c| c.is_rational());
    if rational {
        let r = |q: &QuadNum| q.as_rat().cloned().expect("rational");
        return meet_rational(&RLine { a: r(&l.a), b: r(&l.b), c: r(&l.c) }, f).0;
    }
    // an irrational line holds at most one rational point
    let mut hits: Vec<Point2> = Vec::new();
    for s in &f.segments {
        let (p, q) = (s.p.to_point(), s.q.to_point());
        let (ep, eq) = (l.eval(&p), l.eval(&q));
        let x = match (ep.sign(), eq.sign()) {
            (0, 0) => return LineMeetCount::Infinite,
            (0, _) => p,
            (_, 0) => q,
            (a, b) if a != b => {
                let t = ep.checked_div(&(&ep - &eq)).expect("opposite signs");
                p.add(&q.sub(&p).scale(&t))
            }
            _ => continue,
        };
        if !hits.contains(&x) {
            hits.push(x);
        }
    }
    for x in &f.extra_points {
        let x = x.to_point();
        if l.eval(&x).is_zero() && !hits.contains(&x) {
            hits.push(x);
        }
    }
    LineMeetCount::Finite(hits.len())
}
