//! Exact lines tangent to two balls near a floating-point proposal.
//!
//! Two constructions keep every coordinate in one field `Q(√s)`:
//!
//! * cone lines: when `ρᵢ/ρⱼ` is rational the homothety centers are
//!   rational, and a line through a center tangent to one ball inside a
//!   plane through the axis is tangent to both;
//! * pencil lines: through a rational point `b` of sphere `i` run the
//!   tangent directions `d₀ + λ·d₁`; tangency to ball `j` is a quadratic
//!   in `λ` with rational coefficients.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::kernel::{Line3, Point3};
use crate::quad::{QuadNum, Rat};

use super::float::{self, Proposal, V};
use super::Ball;

/// Dyadic rationalizations tried in order, in bits.
pub const SNAP_BITS: [u32; 3] = [12, 24, 40];

fn to_rat(x: f64, bits: u32) -> Rat {
    let scale = (1u64 << bits) as f64;
    Rat::new(BigInt::from((x * scale).round() as i64), BigInt::from(1u64 << bits))
}

fn rat_vec(v: V, bits: u32) -> Point3 {
    Point3::rat(to_rat(v[0], bits), to_rat(v[1], bits), to_rat(v[2], bits))
}

fn r(q: &QuadNum) -> Rat {
    q.as_rat().cloned().expect("rational")
}

/// Rational radius ratio `ρᵢ/ρⱼ`, if any.
pub fn radius_ratio(bi: &Ball, bj: &Ball) -> Option<Rat> {
    QuadNum::sqrt_rat(&(&bi.radius_sq / &bj.radius_sq)).ok()?.as_rat().cloned()
}

/// The cone lines of `bi` and `bj` inside the plane through their axis with
/// normal `n`, which must be rational and orthogonal to the axis.
pub fn cone_lines(bi: &Ball, bj: &Ball, n: &Point3) -> Vec<Line3> {
    let Some(mu) = radius_ratio(bi, bj) else { return Vec::new() };
    let (ci, cj) = (bi.center(), bj.center());
    let one = Rat::from_integer(1.into());
    let nn = r(&n.norm2());
    let mut out = Vec::new();
    if mu == one {
        // external tangents are parallel to the axis
        let v = cj.sub(&ci);
        let side = n.cross(&v);
        let k = QuadNum::sqrt_rat(&(&bi.radius_sq / (&nn * r(&v.norm2())))).expect("positive");
        for s in [k.clone(), -&k] {
            out.extend(Line3::new(ci.add(&side.scale(&s)), v.clone()).ok());
        }
    }
    let centers = [(&one - &mu, -&mu), (&one + &mu, mu.clone())];
    for (den, coef) in centers {
        if den.is_zero() {
            continue;
        }
        // H = (cᵢ + coef·cⱼ)/den
        let h = ci.add(&cj.scale_rat(&coef)).scale_rat(&(&one / &den));
        let w = ci.sub(&h);
        let dd = r(&w.norm2());
        let tail = &dd - &bi.radius_sq;
        if tail <= Rat::zero() {
            continue;
        }
        let k = QuadNum::sqrt_rat(&(&bi.radius_sq / (&tail * &nn))).expect("positive");
        let side = n.cross(&w);
        for s in [k.clone(), -&k] {
            out.extend(Line3::new(h.clone(), w.add(&side.scale(&s))).ok());
        }
    }
    out
}

/// Rational orthogonal matrix of the quaternion `(a, b, c, d)` applied to
/// `w`.
fn rotate(q: [Rat; 4], w: &Point3) -> Point3 {
    let [a, b, c, d] = q;
    let two = Rat::from_integer(2.into());
    let n = &a * &a + &b * &b + &c * &c + &d * &d;
    let m = [
        [&a * &a + &b * &b - &c * &c - &d * &d, &two * (&b * &c - &a * &d), &two * (&b * &d + &a * &c)],
        [&two * (&b * &c + &a * &d), &a * &a - &b * &b + &c * &c - &d * &d, &two * (&c * &d - &a * &b)],
        [&two * (&b * &d - &a * &c), &two * (&c * &d + &a * &b), &a * &a - &b * &b - &c * &c + &d * &d],
    ];
    let w = [r(&w.x), r(&w.y), r(&w.z)];
    let row = |k: usize| (&m[k][0] * &w[0] + &m[k][1] * &w[1] + &m[k][2] * &w[2]) / &n;
    Point3::rat(row(0), row(1), row(2))
}

/// `x² + y² + z² = n` by bounded search from the largest `x`.
fn three_squares(n: &BigUint) -> Option<[BigUint; 3]> {
    let mut budget = 200_000u32;
    let mut x = n.sqrt();
    loop {
        let rest = n - &x * &x;
        let mut y = rest.sqrt();
        loop {
            let z2 = &rest - &y * &y;
            let z = z2.sqrt();
            if &z * &z == z2 {
                return Some([x, y, z]);
            }
            budget = budget.checked_sub(1)?;
            if y.is_zero() || &y * &y * 2u32 < rest {
                break;
            }
            y -= 1u32;
        }
        if x.is_zero() {
            return None;
        }
        x -= 1u32;
    }
}

/// A rational vector of squared length `r²`, if one is found.
pub fn sphere_base(radius_sq: &Rat) -> Option<Point3> {
    let (p, q) = (radius_sq.numer().abs().to_biguint()?, radius_sq.denom().to_biguint()?);
    let [x, y, z] = three_squares(&(&p * &q))?;
    let q = Rat::from_integer(BigInt::from(q));
    let f = |v: BigUint| Rat::from_integer(BigInt::from(v)) / &q;
    Some(Point3::rat(f(x), f(y), f(z)))
}

/// A rational point of the sphere of `b` near the float point `target`,
/// reached by rotating `base` with a rationalized quaternion.
pub fn sphere_point_near(b: &Ball, base: &Point3, target: V, bits: u32) -> Point3 {
    let w0 = float::unit(base.to_f64());
    let t = float::unit(float::sub(target, b.center.to_f64()));
    let cos = float::dot(w0, t);
    let q = if cos > -0.999 {
        let ax = float::cross(w0, t);
        [1.0 + cos, ax[0], ax[1], ax[2]]
    } else {
        let ax = float::orthogonal(w0);
        [0.0, ax[0], ax[1], ax[2]]
    };
    let s = (q.iter().map(|x| x * x).sum::<f64>()).sqrt();
    let q = q.map(|x| to_rat(x / s, bits));
    b.center().add(&rotate(q, base))
}

/// Lines through the rational point `b` of sphere `bi`, tangent to it
/// there and tangent to `bj`, with direction near `dir`.
pub fn pencil_lines(bi: &Ball, bj: &Ball, b: &Point3, dir: V, bits: u32) -> Vec<Line3> {
    let n = b.sub(&bi.center());
    let nn = r(&n.norm2());
    let d = rat_vec(dir, bits);
    let d0 = d.sub(&n.scale_rat(&(r(&d.dot(&n)) / &nn)));
    if d0.is_zero() {
        return Vec::new();
    }
    let d1 = n.cross(&d0);
    let w = bj.center().sub(b);
    let (a0, a1) = (w.cross(&d0), w.cross(&d1));
    let rj = &bj.radius_sq;
    // |w × d|² − ρⱼ²|d|² for d = d₀ + λd₁
    let qa = r(&a1.norm2()) - rj * r(&d1.norm2());
    let qb = Rat::from_integer(2.into()) * (r(&a0.dot(&a1)) - rj * r(&d0.dot(&d1)));
    let qc = r(&a0.norm2()) - rj * r(&d0.norm2());
    let mut lambdas: Vec<QuadNum> = Vec::new();
    if qa.is_zero() {
        if !qb.is_zero() {
            lambdas.push(QuadNum::from_rat(-qc / qb));
        }
    } else {
        let disc = &qb * &qb - Rat::from_integer(4.into()) * &qa * &qc;
        if disc < Rat::zero() {
            return Vec::new();
        }
        let two_a = Rat::from_integer(2.into()) * &qa;
        let root = QuadNum::sqrt_rat(&disc).expect("non-negative").scale(&(Rat::from_integer(1.into()) / &two_a));
        let mid = QuadNum::from_rat(-&qb / &two_a);
        lambdas.push(&mid + &root);
        lambdas.push(&mid - &root);
        lambdas.sort_by(|x, y| x.to_f64().abs().total_cmp(&y.to_f64().abs()));
    }
    lambdas
        .into_iter()
        .filter_map(|l| {
            let d = d0.add(&d1.scale(&l));
            Line3::new(b.clone(), d).ok()
        })
        .collect()
}

/// Exact candidates near a proposal, cone lines first.
pub fn snap(balls: &[Ball], p: &Proposal, bits: u32) -> Vec<Line3> {
    let (i, j) = p.balls;
    let (bi, bj) = (&balls[i], &balls[j]);
    let mut out = Vec::new();
    let axis = float::sub(bj.center.to_f64(), bi.center.to_f64());
    let plane_n = float::cross(axis, p.dir);
    if float::norm(plane_n) > 1e-9 * float::norm(axis) * float::norm(p.dir) {
        let v = bj.center().sub(&bi.center());
        let n0 = rat_vec(float::unit(plane_n), bits);
        let n = n0.sub(&v.scale_rat(&(r(&n0.dot(&v)) / r(&v.norm2()))));
        if !n.is_zero() {
            out.extend(cone_lines(bi, bj, &n));
        }
    }
    for (k, other, touch) in [(i, j, p.touch.0), (j, i, p.touch.1)] {
        if let Some(base) = sphere_base(&balls[k].radius_sq) {
            let b = sphere_point_near(&balls[k], &base, touch, bits);
            out.extend(pencil_lines(&balls[k], &balls[other], &b, p.dir, bits));
        }
    }
    out
}
