//! Floating-point geometry used only to propose candidate lines.

use super::Ball;

pub type V = [f64; 3];

pub fn add(a: V, b: V) -> V {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub(a: V, b: V) -> V {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn scale(a: V, s: f64) -> V {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub fn dot(a: V, b: V) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: V, b: V) -> V {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub fn norm(a: V) -> f64 {
    dot(a, a).sqrt()
}

pub fn unit(a: V) -> V {
    scale(a, 1.0 / norm(a))
}

/// Some unit vector orthogonal to `a`.
pub fn orthogonal(a: V) -> V {
    let k = (0..3).min_by(|&i, &j| a[i].abs().total_cmp(&a[j].abs())).unwrap_or(0);
    let mut e = [0.0; 3];
    e[k] = 1.0;
    unit(cross(a, e))
}

/// A proposed line tangent to balls `balls.0` and `balls.1` at `touch`.
#[derive(Clone, Copy, Debug)]
pub struct Proposal {
    pub balls: (usize, usize),
    pub dir: V,
    pub touch: (V, V),
}

/// Common tangents, inside the plane through `o` with unit normal `n`, of
/// the sections of two balls. Empty unless the plane meets both interiors.
pub fn plane_bitangents(o: V, n: V, (i, bi): (usize, &Ball), (j, bj): (usize, &Ball)) -> Vec<Proposal> {
    let section = |b: &Ball| {
        let c = b.center.to_f64();
        let h = dot(sub(c, o), n);
        let r2 = b.radius_f64().powi(2) - h * h;
        (sub(c, scale(n, h)), if r2 > 0.0 { r2.sqrt() } else { f64::NAN })
    };
    let ((p1, r1), (p2, r2)) = (section(bi), section(bj));
    if !(r1 > 0.0 && r2 > 0.0) {
        return Vec::new();
    }
    let d = sub(p2, p1);
    let len = norm(d);
    let (dh, perp) = (scale(d, 1.0 / len), unit(cross(n, d)));
    let mut out = Vec::new();
    for sigma in [1.0, -1.0] {
        let k = (sigma * r2 - r1) / len;
        if k.abs() >= 1.0 {
            continue;
        }
        let q = (1.0 - k * k).sqrt();
        for s in [1.0, -1.0] {
            // unit normal m inside the plane: ⟨m,p1⟩ − t = r1, ⟨m,p2⟩ − t = σ·r2
            let m = add(scale(dh, k), scale(perp, s * q));
            let t1 = sub(p1, scale(m, r1));
            let t2 = sub(p2, scale(m, sigma * r2));
            out.push(Proposal { balls: (i, j), dir: cross(n, m), touch: (t1, t2) });
        }
    }
    out
}

/// Outer unit normals of planes tangent to both balls with both on the
/// inner side, sampled at `count` angles.
pub fn pair_tangent_normals(bi: &Ball, bj: &Ball, count: usize) -> Vec<V> {
    let v = sub(bi.center.to_f64(), bj.center.to_f64());
    let len = norm(v);
    let alpha = (bj.radius_f64() - bi.radius_f64()) / len;
    let beta = (1.0 - alpha * alpha).sqrt();
    let e1 = orthogonal(v);
    let e2 = unit(cross(v, e1));
    (0..count)
        .map(|k| {
            let th = std::f64::consts::TAU * (k as f64 + 0.5) / count as f64;
            add(scale(v, alpha / len), add(scale(e1, beta * th.cos()), scale(e2, beta * th.sin())))
        })
        .collect()
}

/// Support value `⟨c,u⟩ + r` of a ball in unit direction `u`.
pub fn support(b: &Ball, u: V) -> f64 {
    dot(b.center.to_f64(), u) + b.radius_f64()
}
