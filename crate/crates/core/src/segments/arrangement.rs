//! Complete ordinary-line search. A non-vertical line `y = m·x − k` is the
//! dual point `(m, k)`, and the point `(a, b)` is the dual line
//! `k = a·m − b`. The meet count depends only on which side of the line
//! each point of `M` lies, so it is constant on every face, edge and vertex
//! of the arrangement of dual lines. One rational sample per cell, plus a
//! sweep over vertical lines, decides every line of the plane.

use serde::Serialize;

use crate::kernel::Line2;
use crate::quad::{rat_cmp, rat_serde, Rat};

use super::{meet_rational, LineMeetCount, Pt, RLine, SegmentFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellKind {
    Vertex,
    Edge,
    Face,
    Vertical,
}

/// A sample line: dual point `(m, k)` for `y = m·x − k`, or `x = c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum DualSample {
    Dual {
        #[serde(with = "rat_serde")]
        m: Rat,
        #[serde(with = "rat_serde")]
        k: Rat,
    },
    Vertical {
        #[serde(with = "rat_serde")]
        x: Rat,
    },
}

impl DualSample {
    pub(crate) fn rline(&self) -> RLine {
        match self {
            DualSample::Dual { m, k } => RLine { a: m.clone(), b: Rat::from_integer((-1).into()), c: -k },
            DualSample::Vertical { x } => RLine { a: Rat::from_integer(1.into()), b: Rat::from_integer(0.into()), c: -x },
        }
    }

    pub fn line(&self) -> Line2 {
        self.rline().to_line2()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellRecord {
    pub kind: CellKind,
    pub sample: DualSample,
    pub count: LineMeetCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrdinaryWitness {
    pub line: Line2,
    pub sample: DualSample,
    pub points: (Pt, Pt),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoOrdinaryLineCertificate {
    pub points: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub verticals: usize,
    pub cells: Vec<CellRecord>,
    pub witness: Option<OrdinaryWitness>,
    /// True iff no cell has meet count exactly two.
    pub no_ordinary_line: bool,
}

fn r(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn half(x: &Rat, y: &Rat) -> Rat {
    (x + y) / r(2)
}

fn sorted_unique(mut v: Vec<Rat>) -> Vec<Rat> {
    v.sort_by(rat_cmp);
    v.dedup();
    v
}

/// One value in each open interval cut out by `cuts`, including both rays.
fn gaps(cuts: &[Rat]) -> Vec<Rat> {
    match (cuts.first(), cuts.last()) {
        (Some(lo), Some(hi)) => std::iter::once(lo - r(1))
            .chain(cuts.windows(2).map(|w| half(&w[0], &w[1])))
            .chain(std::iter::once(hi + r(1)))
            .collect(),
        _ => vec![r(0)],
    }
}

/// Dual line of a point: `k = a·m − b`.
fn dual_at(p: &Pt, m: &Rat) -> Rat {
    &p.x * m - &p.y
}

/// Slope of the dual vertex of two points with distinct `x`.
fn vertex_m(p: &Pt, q: &Pt) -> Option<Rat> {
    (p.x != q.x).then(|| (&p.y - &q.y) / (&p.x - &q.x))
}

/// Ordered cell samples: vertices, edges, faces, then vertical lines.
fn samples(f: &SegmentFamily) -> Vec<(CellKind, DualSample)> {
    let pts = f.points();
    let n = pts.len();
    let mut out = Vec::new();
    let mut on_line: Vec<Vec<Rat>> = vec![Vec::new(); n];
    let mut all_m = Vec::new();
    let mut verts: Vec<(Rat, Rat)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if let Some(m) = vertex_m(&pts[i], &pts[j]) {
                verts.push((dual_at(&pts[i], &m), m.clone()));
                on_line[i].push(m.clone());
                on_line[j].push(m.clone());
                all_m.push(m);
            }
        }
    }
    verts.sort_by(|a, b| rat_cmp(&a.1, &b.1).then(rat_cmp(&a.0, &b.0)));
    verts.dedup();
    out.extend(verts.into_iter().map(|(k, m)| (CellKind::Vertex, DualSample::Dual { m, k })));
    for (i, ms) in on_line.into_iter().enumerate() {
        for m in gaps(&sorted_unique(ms)) {
            let k = dual_at(&pts[i], &m);
            out.push((CellKind::Edge, DualSample::Dual { m, k }));
        }
    }
    for m in gaps(&sorted_unique(all_m)) {
        let ks = sorted_unique(pts.iter().map(|p| dual_at(p, &m)).collect());
        for k in gaps(&ks) {
            out.push((CellKind::Face, DualSample::Dual { m: m.clone(), k }));
        }
    }
    let xs = sorted_unique(pts.iter().map(|p| p.x.clone()).collect());
    let mut vx = xs.clone();
    vx.extend(gaps(&xs));
    for x in sorted_unique(vx) {
        out.push((CellKind::Vertical, DualSample::Vertical { x }));
    }
    out
}

fn witness(sample: &DualSample, hits: Vec<Pt>) -> OrdinaryWitness {
    let mut it = hits.into_iter();
    let (a, b) = (it.next().expect("two hits"), it.next().expect("two hits"));
    OrdinaryWitness { line: sample.line(), sample: sample.clone(), points: (a, b) }
}

/// An ordinary line of `M` if one exists. Complete: `None` proves that no
/// line meets `M` in exactly two points.
pub fn ordinary_line_search(f: &SegmentFamily) -> Option<OrdinaryWitness> {
    samples(f).into_iter().find_map(|(_, s)| match meet_rational(&s.rline(), f) {
        (LineMeetCount::Finite(2), hits) => Some(witness(&s, hits)),
        _ => None,
    })
}

/// Cell-by-cell log of the whole arrangement with the meet count of each.
pub fn no_ordinary_line_certificate(f: &SegmentFamily) -> NoOrdinaryLineCertificate {
    let mut cert = NoOrdinaryLineCertificate {
        points: f.points().len(),
        vertices: 0,
        edges: 0,
        faces: 0,
        verticals: 0,
        cells: Vec::new(),
        witness: None,
        no_ordinary_line: true,
    };
    for (kind, sample) in samples(f) {
        let (count, hits) = meet_rational(&sample.rline(), f);
        match kind {
            CellKind::Vertex => cert.vertices += 1,
            CellKind::Edge => cert.edges += 1,
            CellKind::Face => cert.faces += 1,
            CellKind::Vertical => cert.verticals += 1,
        }
        if count == LineMeetCount::Finite(2) {
            cert.no_ordinary_line = false;
            if cert.witness.is_none() {
                cert.witness = Some(witness(&sample, hits));
            }
        }
        cert.cells.push(CellRecord { kind, sample, count });
    }
    cert
}

/// Three samples inside each face: the slab midpoint and two points a
/// quarter slab to either side, all between the same pair of dual lines.
pub fn face_samples(f: &SegmentFamily) -> Vec<[DualSample; 3]> {
    let pts = f.points();
    let mut all_m = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            all_m.extend(vertex_m(&pts[i], &pts[j]));
        }
    }
    let cuts = sorted_unique(all_m);
    let mids = gaps(&cuts);
    let mut out = Vec::new();
    for (s, m) in mids.iter().enumerate() {
        let width = if cuts.len() >= 2 && s > 0 && s < mids.len() - 1 { &cuts[s] - &cuts[s - 1] } else { r(1) };
        let offsets = [m.clone(), m - &width / r(4), m + &width / r(4)];
        let mut order: Vec<usize> = (0..pts.len()).collect();
        order.sort_by(|&a, &b| rat_cmp(&dual_at(&pts[a], m), &dual_at(&pts[b], m)));
        order.dedup_by(|a, b| dual_at(&pts[*a], m) == dual_at(&pts[*b], m));
        let face_k = |mm: &Rat, slot: usize| -> Rat {
            let lo = (slot > 0).then(|| dual_at(&pts[order[slot - 1]], mm));
            let hi = order.get(slot).map(|&i| dual_at(&pts[i], mm));
            match (lo, hi) {
                (Some(l), Some(h)) => half(&l, &h),
                (Some(l), None) => l + r(1),
                (None, Some(h)) => h - r(1),
                (None, None) => r(0),
            }
        };
        for slot in 0..=order.len() {
            let [a, b, c] = offsets.clone().map(|mm| {
                let k = face_k(&mm, slot);
                DualSample::Dual { m: mm, k }
            });
            out.push([a, b, c]);
        }
    }
    out
}
