//! SVG figures. Coordinates are mathematical (y up) and flipped on output.

use std::path::Path;

use serde::{Deserialize, Serialize};
use svg::node::element::path::Data;
use svg::node::element::{Circle, Line, Path as SvgPath, Rectangle};
use svg::Document;

use crate::convex2d::{ArcGon, Body2, Disc};
use crate::kernel::{Line2, Point2};
use crate::segments::SegmentFamily;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Style {
    pub stroke: String,
    pub fill: String,
    pub width: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style { stroke: "black".into(), fill: "none".into(), width: 1.0 }
    }
}

impl Style {
    pub fn stroke(color: &str) -> Style {
        Style { stroke: color.into(), ..Style::default() }
    }

    pub fn filled(color: &str) -> Style {
        Style { stroke: color.into(), fill: color.into(), width: 1.0 }
    }
}

/// One arc of an arc-gon boundary ending at `to`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArcTo {
    pub to: [f64; 2],
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Drawable {
    Point { at: [f64; 2], radius: f64 },
    Segment { from: [f64; 2], to: [f64; 2] },
    /// `a·x + b·y + c = 0`, clipped to the viewport.
    Line { a: f64, b: f64, c: f64 },
    Disc { center: [f64; 2], radius: f64 },
    /// Closed boundary of outward minor arcs, counterclockwise.
    ArcGon { start: [f64; 2], arcs: Vec<ArcTo> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Item {
    pub shape: Drawable,
    pub style: Style,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FigureSpec {
    /// `[xmin, ymin, xmax, ymax]`.
    pub viewport: [f64; 4],
    /// Output width in pixels; the height keeps the aspect ratio.
    pub pixels: f64,
    pub items: Vec<Item>,
}

impl Default for FigureSpec {
    fn default() -> Self {
        FigureSpec { viewport: [-1.0, -1.0, 1.0, 1.0], pixels: 400.0, items: Vec::new() }
    }
}

/// Fixed-precision number with no negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "-0" | "" => "0".into(),
        s => s.into(),
    }
}

/// The part of a line inside the box, if any.
pub fn clip_line(a: f64, b: f64, c: f64, [x0, y0, x1, y1]: [f64; 4]) -> Option<([f64; 2], [f64; 2])> {
    // parametrize from the foot of the origin along (b, −a)
    let n2 = a * a + b * b;
    if n2 == 0.0 || !n2.is_finite() {
        return None;
    }
    let p = [-a * c / n2, -b * c / n2];
    let d = [b, -a];
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for (pk, dk, min, max) in [(p[0], d[0], x0, x1), (p[1], d[1], y0, y1)] {
        if dk == 0.0 {
            if pk < min || pk > max {
                return None;
            }
            continue;
        }
        let (t1, t2) = ((min - pk) / dk, (max - pk) / dk);
        lo = lo.max(t1.min(t2));
        hi = hi.min(t1.max(t2));
    }
    (lo < hi).then(|| ([p[0] + lo * d[0], p[1] + lo * d[1]], [p[0] + hi * d[0], p[1] + hi * d[1]]))
}

fn styled<N: svg::Node>(mut node: N, s: &Style) -> N {
    node.assign("stroke", s.stroke.as_str());
    node.assign("fill", s.fill.as_str());
    node.assign("stroke-width", num(s.width));
    node
}

/// Deterministic SVG 1.1 text.
pub fn render_svg(spec: &FigureSpec) -> String {
    let [x0, y0, x1, y1] = spec.viewport;
    let (w, h) = ((x1 - x0).max(f64::MIN_POSITIVE), (y1 - y0).max(f64::MIN_POSITIVE));
    let scale = spec.pixels / w;
    let tx = |p: [f64; 2]| [(p[0] - x0) * scale, (y1 - p[1]) * scale];
    let mut doc = Document::new()
        .set("version", "1.1")
        .set("width", num(spec.pixels))
        .set("height", num(h * scale))
        .set("viewBox", format!("0 0 {} {}", num(spec.pixels), num(h * scale)))
        .add(Rectangle::new().set("width", "100%").set("height", "100%").set("fill", "white"));
    for item in &spec.items {
        let s = &item.style;
        match &item.shape {
            Drawable::Point { at, radius } => {
                let p = tx(*at);
                doc = doc.add(styled(Circle::new().set("cx", num(p[0])).set("cy", num(p[1])).set("r", num(*radius)), s));
            }
            Drawable::Segment { from, to } => {
                let (p, q) = (tx(*from), tx(*to));
                doc = doc.add(styled(
                    Line::new().set("x1", num(p[0])).set("y1", num(p[1])).set("x2", num(q[0])).set("y2", num(q[1])),
                    s,
                ));
            }
            Drawable::Line { a, b, c } => {
                if let Some((p, q)) = clip_line(*a, *b, *c, spec.viewport) {
                    let (p, q) = (tx(p), tx(q));
                    doc = doc.add(styled(
                        Line::new().set("x1", num(p[0])).set("y1", num(p[1])).set("x2", num(q[0])).set("y2", num(q[1])),
                        s,
                    ));
                }
            }
            Drawable::Disc { center, radius } => {
                let p = tx(*center);
                doc = doc.add(styled(
                    Circle::new().set("cx", num(p[0])).set("cy", num(p[1])).set("r", num(radius * scale)),
                    s,
                ));
            }
            Drawable::ArcGon { start, arcs } => {
                let p = tx(*start);
                // path data is f32; round first so the text is stable
                let f = |x: f64| ((x * 1e4).round() / 1e4) as f32;
                let mut data = Data::new().move_to((f(p[0]), f(p[1])));
                for arc in arcs {
                    let q = tx(arc.to);
                    let r = f(arc.radius * scale);
                    // counterclockwise in the plane is clockwise on screen
                    data = data.elliptical_arc_to((r, r, 0, 0, 1, f(q[0]), f(q[1])));
                }
                doc = doc.add(styled(SvgPath::new().set("d", data.close()), s));
            }
        }
    }
    doc.to_string()
}

pub fn export_svg(spec: &FigureSpec, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, render_svg(spec))
}

fn f2(p: &Point2) -> [f64; 2] {
    let (x, y) = p.to_f64();
    [x, y]
}

/// Bounding box of the points, padded by a tenth of its size.
pub fn fit_viewport(points: &[[f64; 2]]) -> [f64; 4] {
    if points.is_empty() {
        return FigureSpec::default().viewport;
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        x0 = x0.min(p[0]);
        y0 = y0.min(p[1]);
        x1 = x1.max(p[0]);
        y1 = y1.max(p[1]);
    }
    let pad = 0.1 * (x1 - x0).max(y1 - y0).max(1.0);
    [x0 - pad, y0 - pad, x1 + pad, y1 + pad]
}

pub fn point_items(points: &[Point2], style: &Style) -> Vec<Item> {
    points.iter().map(|p| Item { shape: Drawable::Point { at: f2(p), radius: 3.0 }, style: style.clone() }).collect()
}

pub fn line_item(l: &Line2, style: &Style) -> Item {
    Item { shape: Drawable::Line { a: l.a.to_f64(), b: l.b.to_f64(), c: l.c.to_f64() }, style: style.clone() }
}

fn disc_item(d: &Disc, style: &Style) -> Item {
    Item { shape: Drawable::Disc { center: f2(&d.center()), radius: d.radius_f64() }, style: style.clone() }
}

fn arcgon_item(g: &ArcGon, style: &Style) -> Item {
    let corners = g.corner_points();
    let m = corners.len();
    let arcs = (0..m).map(|k| ArcTo { to: f2(&corners[(k + 1) % m]), radius: g.arcs[k].radius_f64() }).collect();
    Item { shape: Drawable::ArcGon { start: f2(&corners[0]), arcs }, style: style.clone() }
}

pub fn body_item(b: &Body2, style: &Style) -> Item {
    match b {
        Body2::Disc(d) => disc_item(d, style),
        Body2::ArcGon(g) => arcgon_item(g, style),
    }
}

/// Bounding points of a body for viewport fitting.
pub fn body_extent(b: &Body2) -> Vec<[f64; 2]> {
    b.circles()
        .iter()
        .filter(|_| b.is_disc())
        .flat_map(|d| {
            let [x, y] = f2(&d.center());
            let r = d.radius_f64();
            [[x - r, y - r], [x + r, y + r]]
        })
        .chain(b.corners().iter().map(f2))
        .collect()
}

/// Segments as edges and their endpoints as vertices; extra points hollow.
pub fn segment_family_figure(f: &SegmentFamily) -> FigureSpec {
    let mut items: Vec<Item> = f
        .segments
        .iter()
        .map(|s| Item { shape: Drawable::Segment { from: s.p.to_f64(), to: s.q.to_f64() }, style: Style { width: 2.0, ..Style::default() } })
        .collect();
    items.extend(f.endpoints().iter().map(|p| Item { shape: Drawable::Point { at: p.to_f64(), radius: 4.0 }, style: Style::filled("black") }));
    items.extend(f.extra_points.iter().map(|p| Item { shape: Drawable::Point { at: p.to_f64(), radius: 4.0 }, style: Style::stroke("black") }));
    let pts: Vec<[f64; 2]> = f.points().iter().map(|p| p.to_f64()).collect();
    FigureSpec { viewport: fit_viewport(&pts), pixels: 400.0, items }
}
