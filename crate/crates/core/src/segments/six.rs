//! The six-segment classification, the hull-vertex claim and the
//! five-segment harness.

use serde::Serialize;

use crate::error::{Error, Result};

use super::arrangement::{no_ordinary_line_certificate, ordinary_line_search, OrdinaryWitness};
use super::graph::build_geometric_graph;
use super::{intersect_segments, orient, validate_family, Pt, Segment, SegmentFamily, SegmentIntersection};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SixType {
    A,
    B,
    C,
    D,
}

impl SixType {
    pub const ALL: [SixType; 4] = [SixType::A, SixType::B, SixType::C, SixType::D];

    pub fn letter(self) -> char {
        match self {
            SixType::A => 'a',
            SixType::B => 'b',
            SixType::C => 'c',
            SixType::D => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<SixType> {
        SixType::ALL.into_iter().find(|t| t.letter() == c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixClassification {
    pub tag: SixType,
    /// Hull triangle `a, b, c`.
    pub hull: [Pt; 3],
    /// Segment indices of the sides `bc`, `ca`, `ab`.
    pub sides: [usize; 3],
    /// Segment indices of `A, B, C`, ending at `a, b, c`.
    pub spokes: [usize; 3],
}

/// Strict convex hull vertices in counterclockwise order.
pub fn convex_hull(points: &[Pt]) -> Vec<Pt> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Pt> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Pt>> = if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for p in iter {
            while hull.len() >= start + 2 && orient(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
    }
    hull
}

fn violated<T>(m: &str) -> Result<T> {
    Err(Error::HypothesisViolated(m.into()))
}

/// `y` meets the relative interior of `x`.
fn meets_interior(y: &Segment, x: &Segment) -> bool {
    match intersect_segments(y, x) {
        SegmentIntersection::Point { point } => x.contains_interior(&point),
        SegmentIntersection::Subsegment { .. } => true,
        SegmentIntersection::Empty => false,
    }
}

fn far_end(s: &Segment, v: &Pt) -> Pt {
    if &s.p == v {
        s.q.clone()
    } else {
        s.p.clone()
    }
}

/// Walks the case analysis for a 3-connected six-segment family without an
/// ordinary line and reports which of the four configurations it is.
pub fn classify_six(f: &SegmentFamily) -> Result<SixClassification> {
    if f.segments.len() != 6 {
        return violated(&format!("expected 6 segments, got {}", f.segments.len()));
    }
    if !validate_family(f).valid {
        return violated("segments overlap");
    }
    if !no_ordinary_line_certificate(f).no_ordinary_line {
        return violated("the family has an ordinary line");
    }
    if !build_geometric_graph(f).is_3_connected() {
        return violated("the segment graph is not 3-connected");
    }
    let hull = convex_hull(&f.endpoints());
    let [a, b, c]: [Pt; 3] = match hull.try_into() {
        Ok(h) => h,
        Err(h) => return violated(&format!("hull has {} vertices", h.len())),
    };
    let corners = [a.clone(), b.clone(), c.clone()];
    let side = |u: &Pt, v: &Pt| f.segments.iter().position(|s| s.has_endpoint(u) && s.has_endpoint(v));
    let sides = match (side(&b, &c), side(&c, &a), side(&a, &b)) {
        (Some(x), Some(y), Some(z)) => [x, y, z],
        _ => return violated("a hull side is not a member"),
    };
    let mut spokes = [usize::MAX; 3];
    for (i, s) in f.segments.iter().enumerate() {
        if sides.contains(&i) {
            continue;
        }
        let at: Vec<usize> = (0..3).filter(|&k| s.has_endpoint(&corners[k])).collect();
        match at.as_slice() {
            [k] if spokes[*k] == usize::MAX => spokes[*k] = i,
            _ => return violated("remaining segments do not start at distinct corners"),
        }
    }
    let seg = |k: usize| &f.segments[spokes[k]];
    let ends: Vec<Pt> = (0..3).map(|k| far_end(seg(k), &corners[k])).collect();

    let tag = if ends[0] == ends[1] && ends[1] == ends[2] {
        SixType::A
    } else if let Some(k) = (0..3).find(|&k| ends[(k + 1) % 3] == ends[(k + 2) % 3]) {
        if !seg(k).contains_interior(&ends[(k + 1) % 3]) {
            return violated("two spokes share an endpoint that the third misses");
        }
        SixType::B
    } else {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        if perms.iter().any(|[x, y, z]| meets_interior(seg(*y), seg(*x)) && meets_interior(seg(*z), seg(*y))) {
            SixType::C
        } else {
            // one spoke reaches the opposite side and carries the other two
            let carries = (0..3).any(|x| {
                f.segments[sides[x]].contains_interior(&ends[x])
                    && (0..3).filter(|&y| y != x).all(|y| meets_interior(seg(y), seg(x)))
            });
            if !carries {
                return violated("spokes match none of the four configurations");
            }
            SixType::D
        }
    };
    Ok(SixClassification { tag, hull: corners, sides, spokes })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullClaimReport {
    pub status: ClaimStatus,
    /// Hull vertex and the number of members ending there.
    pub counts: Vec<(Pt, usize)>,
    pub reason: Option<String>,
}

/// Checks that every hull vertex of `∪F` is an endpoint of at least three
/// members, for valid non-collinear families with no ordinary line.
pub fn hull_vertex_claim_check(f: &SegmentFamily) -> HullClaimReport {
    let na = |reason: &str| HullClaimReport { status: ClaimStatus::NotApplicable, counts: Vec::new(), reason: Some(reason.into()) };
    if !validate_family(f).valid {
        return na("segments overlap");
    }
    if f.is_collinear() {
        return na("M is collinear");
    }
    if ordinary_line_search(f).is_some() {
        return na("the family has an ordinary line");
    }
    let counts: Vec<(Pt, usize)> = convex_hull(&f.endpoints())
        .into_iter()
        .map(|v| {
            let n = f.segments.iter().filter(|s| s.has_endpoint(&v)).count();
            (v, n)
        })
        .collect();
    let status = if counts.iter().all(|(_, n)| *n >= 3) { ClaimStatus::Pass } else { ClaimStatus::Fail };
    HullClaimReport { status, counts, reason: None }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Theorem5Verdict {
    Consistent { collinear: bool, witness: Option<OrdinaryWitness> },
    RefutesTheorem,
}

/// For at most five segments, `M` is collinear or has an ordinary line.
pub fn theorem5_harness(f: &SegmentFamily) -> Result<Theorem5Verdict> {
    if f.segments.len() > 5 {
        return Err(Error::TooManySegments(f.segments.len()));
    }
    let witness = ordinary_line_search(f);
    let collinear = f.is_collinear();
    Ok(if collinear || witness.is_some() { Theorem5Verdict::Consistent { collinear, witness } } else { Theorem5Verdict::RefutesTheorem })
}
