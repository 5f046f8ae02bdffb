//! Determined and ordinary lines of finite planar point sets.
//!
//! Two interchangeable finders are registered: `grouped` buckets all
//! C(n,2) pairs by canonical line key, `brute` checks every pair against
//! every point. The brute finder is kept as the oracle for the fast one.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{line_through, orient2, point_on_line2, Line2, LineKey, Orientation, Point2};
use crate::quad::common_radicand;

/// Pairwise distinct points sharing one quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPointSet", into = "RawPointSet")]
pub struct PointSet {
    points: Vec<Point2>,
}

#[derive(Serialize, Deserialize)]
struct RawPointSet {
    points: Vec<Point2>,
}

impl TryFrom<RawPointSet> for PointSet {
    type Error = Error;
    fn try_from(raw: RawPointSet) -> Result<Self> {
        PointSet::new(raw.points)
    }
}

impl From<PointSet> for RawPointSet {
    fn from(s: PointSet) -> Self {
        RawPointSet { points: s.points }
    }
}

impl PointSet {
    /// Rejects duplicates rather than silently merging them.
    pub fn new(points: Vec<Point2>) -> Result<PointSet> {
        common_radicand(points.iter().flat_map(|p| [&p.x, &p.y]))?;
        let mut seen: BTreeMap<(LineKeyPart, LineKeyPart), usize> = BTreeMap::new();
        for (i, p) in points.iter().enumerate() {
            if let Some(j) = seen.insert((key_part(&p.x), key_part(&p.y)), i) {
                return Err(Error::DuplicatePoint(j, i));
            }
        }
        Ok(PointSet { points })
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

type LineKeyPart = (crate::quad::Rat, crate::quad::Rat);

fn key_part(x: &crate::quad::QuadNum) -> LineKeyPart {
    (x.a().clone(), x.b().clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminedLine {
    pub line: Line2,
    pub members: Vec<usize>,
}

impl DeterminedLine {
    pub fn is_ordinary(&self) -> bool {
        self.members.len() == 2
    }
}

/// A strategy for enumerating the determined lines of a point set.
pub trait LineFinder: Send + Sync {
    fn name(&self) -> &'static str;

    /// Every distinct line through at least two points, with maximal member
    /// lists, sorted by line key.
    fn determined_lines(&self, set: &PointSet) -> Result<Vec<DeterminedLine>>;
}

pub struct GroupedFinder;

impl LineFinder for GroupedFinder {
    fn name(&self) -> &'static str {
        "grouped"
    }

    fn determined_lines(&self, set: &PointSet) -> Result<Vec<DeterminedLine>> {
        require_two(set)?;
        let pts = set.points();
        let mut groups: BTreeMap<LineKey, (Line2, Vec<usize>)> = BTreeMap::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let line = line_through(&pts[i], &pts[j])?;
                let entry = groups.entry(line.key()).or_insert_with(|| (line, Vec::new()));
                entry.1.push(i);
                entry.1.push(j);
            }
        }
        Ok(groups
            .into_values()
            .map(|(line, mut members)| {
                members.sort_unstable();
                members.dedup();
                DeterminedLine { line, members }
            })
            .collect())
    }
}

pub struct BruteForceFinder;

impl LineFinder for BruteForceFinder {
    fn name(&self) -> &'static str {
        "brute"
    }

    fn determined_lines(&self, set: &PointSet) -> Result<Vec<DeterminedLine>> {
        require_two(set)?;
        let pts = set.points();
        let mut out = Vec::new();
        for i in 0..pts.len() {
            'pair: for j in i + 1..pts.len() {
                let mut members = vec![i, j];
                for k in 0..pts.len() {
                    if k == i || k == j {
                        continue;
                    }
                    if orient2(&pts[i], &pts[j], &pts[k])? == Orientation::Collinear {
                        // the line is reported from its two smallest members only
                        if k < j {
                            continue 'pair;
                        }
                        members.push(k);
                    }
                }
                members.sort_unstable();
                out.push(DeterminedLine { line: line_through(&pts[i], &pts[j])?, members });
            }
        }
        out.sort_by_key(|a| a.line.key());
        Ok(out)
    }
}

fn require_two(set: &PointSet) -> Result<()> {
    if set.len() < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: set.len() });
    }
    Ok(())
}

pub fn finders() -> Vec<Box<dyn LineFinder>> {
    vec![Box::new(GroupedFinder), Box::new(BruteForceFinder)]
}

pub fn finder_by_name(name: &str) -> Result<Box<dyn LineFinder>> {
    finders()
        .into_iter()
        .find(|f| f.name() == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown line finder {name:?}")))
}

pub fn determined_lines(set: &PointSet) -> Result<Vec<DeterminedLine>> {
    GroupedFinder.determined_lines(set)
}

pub fn ordinary_lines_with(finder: &dyn LineFinder, set: &PointSet) -> Result<Vec<DeterminedLine>> {
    Ok(finder.determined_lines(set)?.into_iter().filter(DeterminedLine::is_ordinary).collect())
}

pub fn ordinary_lines(set: &PointSet) -> Result<Vec<DeterminedLine>> {
    ordinary_lines_with(&GroupedFinder, set)
}

/// True iff all points lie on one line (vacuously for fewer than 3 distinct
/// points).
pub fn is_collinear_set(points: &[Point2]) -> Result<bool> {
    let Some(first) = points.first() else { return Ok(true) };
    let Some(second) = points.iter().find(|p| *p != first) else { return Ok(true) };
    let line = line_through(first, second)?;
    Ok(points.iter().all(|p| point_on_line2(p, &line)))
}

/// `n` distinct points of the integer grid `[0, grid]²`, seeded.
pub fn random_point_set(n: usize, grid: i64, seed: u64) -> Result<PointSet> {
    use rand::{Rng, SeedableRng};
    let cells = (grid.max(0) as u128 + 1).pow(2);
    if grid < 0 || n as u128 > cells {
        return Err(Error::InvalidInput(format!("cannot place {n} distinct points on a grid of side {grid}")));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::BTreeSet::new();
    let mut points = Vec::with_capacity(n);
    while points.len() < n {
        let (x, y) = (rng.gen_range(0..=grid), rng.gen_range(0..=grid));
        if seen.insert((x, y)) {
            points.push(Point2::ints(x, y));
        }
    }
    PointSet::new(points)
}
