//! The countably infinite bounded point set on six rays with no ordinary
//! line, built and certified exactly over Q(√3).
//!
//! Ray `k` (1..=6) leaves the origin at angle `(k−1)·π/3`. Depth `j ≥ 1`
//! sits at radius `1/(3j−2)` on odd rays and `1/(3j−1)` on even rays. For
//! any two members, [`third_point`] names a third member on their line; the
//! three rules below all follow from the bisector identity
//! `1/b = 1/x + 1/y` for the `2π/3` angle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{orient2, Orientation, Point2};
use crate::quad::{int, rat, QuadNum, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HPoint {
    pub ray: u8,
    pub j: u64,
}

impl HPoint {
    pub fn new(ray: u8, j: u64) -> Result<HPoint> {
        let h = HPoint { ray, j };
        if !h.is_valid() {
            return Err(Error::InvalidPoint(format!("ray {ray}, depth {j}")));
        }
        Ok(h)
    }

    pub fn is_valid(&self) -> bool {
        (1..=6).contains(&self.ray) && self.j >= 1
    }

    /// `1/(3j−2)` on odd rays, `1/(3j−1)` on even rays.
    pub fn radius(&self) -> Rat {
        let j = self.j as i64;
        if self.ray % 2 == 1 {
            rat(1, 3 * j - 2)
        } else {
            rat(1, 3 * j - 1)
        }
    }
}

/// Ray index shifted by `steps`, wrapping within 1..=6.
fn ray_step(ray: u8, steps: i64) -> u8 {
    ((ray as i64 - 1 + steps).rem_euclid(6) + 1) as u8
}

/// `(cos, sin)` of `(ray−1)·π/3`, as multiples of `(1, √3)`.
fn unit_direction(ray: u8) -> (Rat, Rat) {
    match ray {
        1 => (int(1), int(0)),
        2 => (rat(1, 2), rat(1, 2)),
        3 => (rat(-1, 2), rat(1, 2)),
        4 => (int(-1), int(0)),
        5 => (rat(-1, 2), rat(-1, 2)),
        _ => (rat(1, 2), rat(-1, 2)),
    }
}

fn sqrt3(coeff: Rat) -> QuadNum {
    QuadNum::new(int(0), coeff, 3u32)
}

/// Exact coordinates over Q(√3).
pub fn embed(h: &HPoint) -> Point2 {
    let r = h.radius();
    let (c, s) = unit_direction(h.ray);
    Point2::new(QuadNum::from_rat(&r * c), sqrt3(&r * s))
}

/// Length of the `2π/3` angle bisector: `b = xy/(x+y)`.
pub fn bisector_length(x: &Rat, y: &Rat) -> Result<Rat> {
    let zero = int(0);
    if *x <= zero || *y <= zero {
        return Err(Error::NonPositiveSide);
    }
    Ok(x * y / (x + y))
}

/// Checks `½xy·sin(2π/3) = ½xb·sin(π/3) + ½by·sin(π/3)` in Q(√3).
pub fn bisector_area_identity(x: &Rat, y: &Rat) -> Result<bool> {
    let b = bisector_length(x, y)?;
    let half_sin = sqrt3(rat(1, 4));
    let whole = half_sin.scale(&(x * y));
    let parts = half_sin.scale(&(x * &b)).checked_add(&half_sin.scale(&(&b * y)))?;
    Ok(whole == parts)
}

/// A member of the set on the line through `p` and `q`, other than both.
pub fn third_point(p: &HPoint, q: &HPoint) -> Result<HPoint> {
    if p == q {
        return Err(Error::SamePoint);
    }
    if !p.is_valid() || !q.is_valid() {
        return Err(Error::InvalidPoint(format!("{p:?} / {q:?}")));
    }
    let diff = (q.ray as i64 - p.ray as i64).rem_euclid(6);
    let s = match diff {
        // the line passes through the origin
        0 => HPoint { ray: p.ray, j: p.j.max(q.j) + 1 },
        3 => HPoint { ray: p.ray, j: p.j + 1 },
        1 | 5 => {
            let (f, g) = if p.ray % 2 == 1 { (p, q) } else { (q, p) };
            let turn: i64 = if ray_step(f.ray, 1) == g.ray { 1 } else { -1 };
            if f.j > g.j {
                HPoint { ray: ray_step(f.ray, -turn), j: f.j - g.j }
            } else {
                HPoint { ray: ray_step(f.ray, 2 * turn), j: g.j - f.j + 1 }
            }
        }
        _ => {
            let middle = if diff == 2 { ray_step(p.ray, 1) } else { ray_step(p.ray, -1) };
            if p.ray % 2 == 1 {
                HPoint { ray: middle, j: p.j + q.j - 1 }
            } else {
                HPoint { ray: middle, j: p.j + q.j }
            }
        }
    };
    Ok(s)
}

/// A labelled point: the member it claims to be and its actual coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HMember {
    pub label: HPoint,
    pub point: Point2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HTruncation {
    pub depth: u64,
    pub members: Vec<HMember>,
}

impl HTruncation {
    /// The `6·depth` members with `j ≤ depth`, ordered by depth then ray.
    pub fn new(depth: u64) -> Result<HTruncation> {
        if depth == 0 {
            return Err(Error::InvalidInput("depth must be at least 1".into()));
        }
        let members = (1..=depth)
            .flat_map(|j| (1..=6u8).map(move |ray| HPoint { ray, j }))
            .map(|label| HMember { point: embed(&label), label })
            .collect();
        Ok(HTruncation { depth, members })
    }

    pub fn points(&self) -> Vec<Point2> {
        self.members.iter().map(|m| m.point.clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureFailure {
    pub p: HPoint,
    pub q: HPoint,
    pub predicted: Option<HPoint>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub depth: u64,
    pub pairs_checked: u64,
    pub passed: bool,
    pub failure: Option<ClosureFailure>,
}

fn check_pair(a: &HMember, b: &HMember) -> Option<ClosureFailure> {
    let fail = |predicted, reason: &str| {
        Some(ClosureFailure { p: a.label, q: b.label, predicted, reason: reason.to_string() })
    };
    let s = match third_point(&a.label, &b.label) {
        Ok(s) => s,
        Err(e) => return fail(None, &e.to_string()),
    };
    if !s.is_valid() || s == a.label || s == b.label {
        return fail(Some(s), "predicted point is not a new member");
    }
    match orient2(&a.point, &b.point, &embed(&s)) {
        Ok(Orientation::Collinear) => None,
        Ok(_) => fail(Some(s), "predicted point is off the line"),
        Err(e) => fail(Some(s), &e.to_string()),
    }
}

/// Checks every pair of the truncation. Pairs are split across threads in
/// contiguous blocks and the first failure in pair order is reported.
pub fn verify_closure(t: &HTruncation) -> ClosureReport {
    let m = &t.members;
    let pairs: Vec<(usize, usize)> =
        (0..m.len()).flat_map(|i| (i + 1..m.len()).map(move |j| (i, j))).collect();
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8);
    let chunk = pairs.len().div_ceil(workers).max(1);
    let failures: Vec<Option<ClosureFailure>> = std::thread::scope(|scope| {
        let handles: Vec<_> = pairs
            .chunks(chunk)
            .map(|block| scope.spawn(move || block.iter().find_map(|&(i, j)| check_pair(&m[i], &m[j]))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let failure = failures.into_iter().flatten().next();
    ClosureReport {
        depth: t.depth,
        pairs_checked: pairs.len() as u64,
        passed: failure.is_none(),
        failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point_sg::is_collinear_set;

    fn h(ray: u8, j: u64) -> HPoint {
        HPoint::new(ray, j).unwrap()
    }

    #[test]
    fn bisector_examples() {
        assert_eq!(bisector_length(&int(1), &int(1)).unwrap(), rat(1, 2));
        assert_eq!(bisector_length(&int(1), &rat(1, 2)).unwrap(), rat(1, 3));
        for i in 1..6i64 {
            for j in 1..6i64 {
                let b = bisector_length(&rat(1, 3 * i - 2), &rat(1, 3 * j - 2)).unwrap();
                assert_eq!(b, rat(1, 3 * (i + j - 1) - 1));
            }
        }
        assert_eq!(bisector_length(&int(0), &int(1)), Err(Error::NonPositiveSide));
        assert!(bisector_area_identity(&rat(2, 7), &rat(5, 3)).unwrap());
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed(&h(1, 1)), Point2::ints(1, 0));
        assert_eq!(embed(&h(2, 1)), Point2::new(rat(1, 4).into(), sqrt3(rat(1, 4))));
        assert_eq!(embed(&h(4, 1)), Point2::new(rat(-1, 2).into(), QuadNum::zero()));
        assert_eq!(embed(&h(5, 1)), Point2::new(rat(-1, 2).into(), sqrt3(rat(-1, 2))));
    }

    #[test]
    fn third_point_examples() {
        assert_eq!(third_point(&h(1, 1), &h(3, 1)).unwrap(), h(2, 1));
        assert_eq!(third_point(&h(1, 1), &h(4, 1)).unwrap(), h(1, 2));
        assert_eq!(third_point(&h(1, 2), &h(2, 1)).unwrap(), h(6, 1));
        assert_eq!(third_point(&h(2, 1), &h(4, 1)).unwrap(), h(3, 2));
        assert_eq!(third_point(&h(3, 3), &h(3, 3)), Err(Error::SamePoint));
    }

    #[test]
    fn closure_small_depths() {
        let r = verify_closure(&HTruncation::new(1).unwrap());
        assert!(r.passed);
        assert_eq!(r.pairs_checked, 15);
        let r = verify_closure(&HTruncation::new(4).unwrap());
        assert!(r.passed, "{:?}", r.failure);
    }

    #[test]
    fn corrupted_member_is_caught() {
        let mut t = HTruncation::new(2).unwrap();
        let first = t.members.iter_mut().find(|m| m.label == h(1, 2)).unwrap();
        first.point = Point2::rat(rat(1, 3), int(0));
        let r = verify_closure(&t);
        assert!(!r.passed);
        let f = r.failure.unwrap();
        assert!(f.p == h(1, 2) || f.q == h(1, 2));
    }

    #[test]
    fn geometry_of_truncation() {
        let t = HTruncation::new(3).unwrap();
        assert_eq!(t.members.len(), 18);
        assert!(!is_collinear_set(&t.points()).unwrap());
        let min = t.members.iter().map(|m| m.label.radius()).min().unwrap();
        assert_eq!(min, rat(1, 8));
        assert!(t.members.iter().all(|m| m.label.radius() <= int(1)));
    }
}
