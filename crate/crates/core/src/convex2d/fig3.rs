//! A four-body system with no ordinary line, plus middle bodies.
//!
//! `K1` (left) and `K3` (right) are quadrilaterals owning the corners of
//! the square hull; `K2` (bottom) and `K4` (top) are pentagons whose apex
//! lies on a hull edge, so each horizontal hull line supports three bodies.
//! Adjacent bodies are separated by thin gaps along a pinwheel of lines,
//! and the extension of every gap crosses the far side of the frame. Edges
//! are replaced by circular arcs of very large radius.
//!
//! Each outer body is an edge chain: a start corner, one rational unit
//! direction per edge and all edge lengths but the last two, which are
//! solved for so the chain closes. Every edge therefore has rational length
//! and every arc a rational center and radius. `K3` and `K4` are the point
//! reflections of `K1` and `K2`.

use crate::error::{Error, Result};
use crate::quad::{int, parse_rat, Rat};

use super::{no_ordinary_line_check, ArcGon, Body2, CheckOptions, ConvexSystem2, Disc, RatPoint};

/// Closed chain of edges with rational lengths.
pub struct ChainSpec {
    pub start: (&'static str, &'static str),
    /// Half-angle tangents `t` of the edge directions.
    pub dirs: &'static [&'static str],
    /// Lengths of all edges but the last two.
    pub lengths: &'static [&'static str],
}

/// Arc sagitta as a fraction of the half chord.
pub const FIG3_BULGE: &str = "1/4000";

/// `K1` and `K2`. The gap between them runs along direction `(4, 3)`
/// (`t = 1/3` and `t = −3`), the gap between `K2` and `K3` along `(−3, 4)`
/// (`t = 2`); the remaining values come from `examples/fig3_search.rs`.
pub const FIG3_OUTER: [ChainSpec; 2] = [
    ChainSpec { start: ("-1", "1"), dirs: &["-1", "1/3", "139/100", "2"], lengths: &["2", "1"] },
    ChainSpec {
        start: ("0", "-1"),
        dirs: &["1/100", "2", "-154/25", "-3", "-1/100"],
        lengths: &["24/25", "97/100", "11/20"],
    },
];

/// Middle discs `(cx, cy, r2)` used for `n ≥ 5`, in order.
pub const FIG3_MIDDLE: &[(&str, &str, &str)] = &[
    ("0", "0", "1/100"),
    ("1/5", "0", "1/400"),
    ("-1/5", "0", "1/400"),
    ("0", "1/5", "1/400"),
    ("0", "-1/5", "1/400"),
];

fn p(s: &str) -> Rat {
    parse_rat(s).expect("valid constant")
}

/// `((1 − t²)/(1 + t²), 2t/(1 + t²))`.
pub fn unit_direction(t: &Rat) -> (Rat, Rat) {
    let one = int(1);
    let den = &one + t * t;
    ((&one - t * t) / &den, (int(2) * t) / den)
}

/// Corners and edge lengths of a closed chain; the last two lengths solve
/// a 2×2 linear system.
pub fn chain_corners(start: (Rat, Rat), dirs: &[Rat], lengths: &[Rat]) -> Result<(Vec<(Rat, Rat)>, Vec<Rat>)> {
    let m = dirs.len();
    if m < 3 || lengths.len() != m - 2 {
        return Err(Error::InvalidInput("chain needs m directions and m − 2 lengths".into()));
    }
    let units: Vec<(Rat, Rat)> = dirs.iter().map(unit_direction).collect();
    let mut pts = vec![start.clone()];
    for (u, len) in units.iter().zip(lengths) {
        let last = pts.last().unwrap().clone();
        pts.push((last.0 + &u.0 * len, last.1 + &u.1 * len));
    }
    // start − last = λ·u[m−2] + μ·u[m−1]
    let last = pts.last().unwrap();
    let (gx, gy) = (&start.0 - &last.0, &start.1 - &last.1);
    let (u, w) = (&units[m - 2], &units[m - 1]);
    let det = &u.0 * &w.1 - &u.1 * &w.0;
    if det == int(0) {
        return Err(Error::ConstructionFailed("closing directions are parallel".into()));
    }
    let lambda = (&gx * &w.1 - &gy * &w.0) / &det;
    let mu = (&u.0 * &gy - &u.1 * &gx) / det;
    if lambda <= int(0) || mu <= int(0) {
        return Err(Error::ConstructionFailed("chain does not close with positive lengths".into()));
    }
    let last = last.clone();
    pts.push((last.0 + &u.0 * &lambda, last.1 + &u.1 * &lambda));
    let mut all = lengths.to_vec();
    all.extend([lambda, mu]);
    Ok((pts, all))
}

/// Circle through `v0`, `v1` bulging to the right of `v0 → v1` with
/// sagitta `bulge · |v1 − v0| / 2`. The chord length must be rational.
pub fn arc_through(v0: &(Rat, Rat), v1: &(Rat, Rat), bulge: &Rat, chord: &Rat) -> Disc {
    let half = chord / int(2);
    let m = bulge.recip();
    let offset = &half * (&m * &m - int(1)) / (int(2) * &m);
    let radius = &half * (&m * &m + int(1)) / (int(2) * &m);
    // left normal of the chord, scaled to unit length
    let (ex, ey) = (&v1.0 - &v0.0, &v1.1 - &v0.1);
    let (nx, ny) = (-&ey / chord, &ex / chord);
    let cx = (&v0.0 + &v1.0) / int(2) + &nx * &offset;
    let cy = (&v0.1 + &v1.1) / int(2) + &ny * &offset;
    Disc { cx, cy, r2: &radius * &radius }
}

/// Arc-gon over a closed chain whose edge lengths are known.
fn bulged(corners: &[(Rat, Rat)], lengths: &[Rat], bulge: &Rat) -> Result<ArcGon> {
    let m = corners.len();
    let arcs = (0..m).map(|k| arc_through(&corners[k], &corners[(k + 1) % m], bulge, &lengths[k])).collect();
    let corners = corners.iter().map(|(x, y)| RatPoint { x: x.clone(), y: y.clone() }).collect();
    ArcGon::new(corners, arcs)
}

/// Builds one outer body from a chain description.
pub fn chain_body(spec: &ChainSpec, bulge: &Rat, reflect: bool) -> Result<ArcGon> {
    let start = (p(spec.start.0), p(spec.start.1));
    let dirs: Vec<Rat> = spec.dirs.iter().map(|s| p(s)).collect();
    let lengths: Vec<Rat> = spec.lengths.iter().map(|s| p(s)).collect();
    chain_arcgon(start, &dirs, &lengths, bulge, reflect)
}

/// Arc-gon over a closed chain, optionally reflected through the origin.
pub fn chain_arcgon(start: (Rat, Rat), dirs: &[Rat], lengths: &[Rat], bulge: &Rat, reflect: bool) -> Result<ArcGon> {
    let (mut corners, lens) = chain_corners(start, dirs, lengths)?;
    if reflect {
        for c in corners.iter_mut() {
            *c = (-c.0.clone(), -c.1.clone());
        }
    }
    bulged(&corners, &lens, bulge)
}

/// Outer bodies in the order `K1, K2, K3, K4`.
pub fn fig3_outer() -> Result<Vec<ArcGon>> {
    let bulge = p(FIG3_BULGE);
    let k1 = chain_body(&FIG3_OUTER[0], &bulge, false)?;
    let k2 = chain_body(&FIG3_OUTER[1], &bulge, false)?;
    let k3 = chain_body(&FIG3_OUTER[0], &bulge, true)?;
    let k4 = chain_body(&FIG3_OUTER[1], &bulge, true)?;
    Ok(vec![k1, k2, k3, k4])
}

/// The released system for `n` bodies, checked before it is returned.
pub fn fig3_counterexample(n: usize) -> Result<ConvexSystem2> {
    if n < 4 {
        return Err(Error::InvalidInput(format!("no such system exists for n = {n}; need n ≥ 4")));
    }
    if n - 4 > FIG3_MIDDLE.len() {
        return Err(Error::InvalidInput(format!("released parameters cover n ≤ {}", 4 + FIG3_MIDDLE.len())));
    }
    let mut bodies: Vec<Body2> = FIG3_MIDDLE[..n - 4]
        .iter()
        .map(|(x, y, r2)| Disc::new(p(x), p(y), p(r2)).map(Body2::Disc))
        .collect::<Result<_>>()?;
    bodies.extend(fig3_outer()?.into_iter().map(Body2::ArcGon));
    let system = ConvexSystem2::new(bodies).map_err(|e| Error::ConstructionFailed(e.to_string()))?;
    let report = no_ordinary_line_check(&system, CheckOptions::default())?;
    if !report.no_ordinary_line {
        return Err(Error::ConstructionFailed(format!(
            "{} witnesses, {} undecided candidates",
            report.witnesses.len(),
            report.uncertain
        )));
    }
    Ok(system)
}
