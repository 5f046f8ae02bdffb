//! Line versus body classification.

use num_traits::Zero;
use serde::Serialize;

use crate::interval::Interval;
use crate::kernel::{Line2, Point2};
use crate::quad::{rat_cmp, QuadNum, Rat};

use super::{Body2, Disc};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LineBodyRelation {
    Miss,
    Tangent { point: Point2 },
    Cross,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "certainty", rename_all = "snake_case")]
pub enum Certainty {
    Exact,
    /// Decided by intervals of width at most `eps`.
    Certified {
        #[serde(with = "crate::quad::rat_serde")]
        eps: Rat,
    },
    Uncertain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub relation: Option<LineBodyRelation>,
    pub certainty: Certainty,
}

impl Verdict {
    fn exact(relation: LineBodyRelation) -> Verdict {
        Verdict { relation: Some(relation), certainty: Certainty::Exact }
    }
}

/// Exact relation of a line to a closed disc.
pub fn classify_line(l: &Line2, d: &Disc) -> LineBodyRelation {
    let r = l.eval(&d.center());
    let n = l.normal();
    let gap = &r.square() - &n.dot(&n).scale(&d.r2);
    match gap.sign() {
        s if s > 0 => LineBodyRelation::Miss,
        0 => LineBodyRelation::Tangent { point: l.foot(&d.center()) },
        _ => LineBodyRelation::Cross,
    }
}

/// Chords in projection coordinates `t = ⟨x, dir⟩` with `dir = (B, −A)`:
/// circle `k` covers `mid ± √Δ` where `mid = ⟨c, dir⟩` and
/// `Δ = r²|n|² − e²` with `e` the residual of the center. No division.
struct Chords {
    dir: Point2,
    nn: QuadNum,
    data: Vec<(QuadNum, QuadNum, QuadNum)>,
}

fn chords(l: &Line2, circles: &[Disc]) -> Chords {
    let dir = l.direction();
    let nn = dir.dot(&dir);
    let data = circles
        .iter()
        .map(|c| {
            let mid = &l.b.scale(&c.cx) - &l.a.scale(&c.cy);
            let e = &(&l.a.scale(&c.cx) + &l.b.scale(&c.cy)) + &l.c;
            let delta = &nn.scale(&c.r2) - &e.square();
            (mid, e, delta)
        })
        .collect();
    Chords { dir, nn, data }
}

/// Relation of `l` to a body. Discs and every degenerate configuration are
/// exact; otherwise chord endpoints are enclosed at doubling precision up
/// to `cap` bits.
pub fn classify_body(l: &Line2, body: &Body2, cap: u32) -> Verdict {
    let circles = body.circles();
    let ch = chords(l, circles);

    if ch.data.iter().any(|(_, _, delta)| delta.sign() < 0) {
        return Verdict::exact(LineBodyRelation::Miss);
    }
    if let Some((k, (_, e, _))) = ch.data.iter().enumerate().find(|(_, (_, _, delta))| delta.is_zero()) {
        let t = e.checked_div(&ch.nn).expect("nonzero normal");
        let foot = circles[k].center().sub(&l.normal().scale(&t));
        let inside = circles.iter().enumerate().all(|(j, c)| j == k || c.power(&foot).sign() <= 0);
        return Verdict::exact(if inside { LineBodyRelation::Tangent { point: foot } } else { LineBodyRelation::Miss });
    }
    let Body2::ArcGon(g) = body else {
        return Verdict::exact(LineBodyRelation::Cross);
    };

    let corners = g.corner_points();
    let m = corners.len();
    for (k, v) in corners.iter().enumerate() {
        if !l.eval(v).is_zero() {
            continue;
        }
        let n1 = v.sub(&circles[(k + m - 1) % m].center());
        let n2 = v.sub(&circles[k].center());
        let (s1, s2) = (ch.dir.dot(&n1).sign(), ch.dir.dot(&n2).sign());
        let enters = (s1 < 0 && s2 < 0) || (s1 > 0 && s2 > 0);
        return Verdict::exact(if enters { LineBodyRelation::Cross } else { LineBodyRelation::Tangent { point: v.clone() } });
    }

    let mut prec = cap.min(128);
    loop {
        if let Some(v) = chord_verdict(&ch, prec) {
            return v;
        }
        if prec >= cap {
            return Verdict { relation: None, certainty: Certainty::Uncertain };
        }
        prec = (prec * 2).min(cap);
    }
}

/// Decides miss or cross from the 1D intersection of the chord intervals.
fn chord_verdict(ch: &Chords, prec: u32) -> Option<Verdict> {
    let mut los = Vec::with_capacity(ch.data.len());
    let mut his = Vec::with_capacity(ch.data.len());
    for (mid, _, delta) in &ch.data {
        let root = Interval::of_quad(delta, prec).sqrt(prec);
        let mid = Interval::of_quad(mid, prec);
        los.push(mid.sub(&root, prec));
        his.push(mid.add(&root, prec));
    }
    let eps = los.iter().chain(his.iter()).map(Interval::width).max_by(rat_cmp).unwrap_or_else(Rat::zero);
    let certified = |relation| Some(Verdict { relation: Some(relation), certainty: Certainty::Certified { eps: eps.clone() } });

    // some chord ends before another starts: the intersection is empty
    if his.iter().any(|h| los.iter().any(|lo| h.lt(lo))) {
        return certified(LineBodyRelation::Miss);
    }
    let max_lo = los.iter().map(|i| &i.hi).max_by(|x, y| rat_cmp(x, y))?;
    let min_hi = his.iter().map(|i| &i.lo).min_by(|x, y| rat_cmp(x, y))?;
    if rat_cmp(max_lo, min_hi) == std::cmp::Ordering::Less {
        return certified(LineBodyRelation::Cross);
    }
    None
}
