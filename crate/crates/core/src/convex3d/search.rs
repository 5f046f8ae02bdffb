//! The search ladder: strategies propose lines, certification is exact.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::convex2d::ordinary_lines_disc_system;
use crate::error::{Error, Result};
use crate::kernel::{Line3, Plane3, Point2, Point3};
use crate::point_sg::{is_collinear_set, ordinary_lines, PointSet};
use crate::quad::{QuadNum, Rat};

use super::float::{self, plane_bitangents, Proposal, V};
use super::slice::slice;
use super::snap::{snap, SNAP_BITS};
use super::support::{supporting_plane_contacts, Contact};
use super::{ConvexSystem3, OrdinaryLine3Certificate};

/// One logged proposal, for reproducing a seeded run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attempt {
    pub strategy: String,
    pub detail: String,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub certificate: OrdinaryLine3Certificate,
    pub attempts: Vec<Attempt>,
}

pub trait Strategy3: Send + Sync {
    fn name(&self) -> &'static str;

    fn applies(&self, _s: &ConvexSystem3) -> bool {
        true
    }

    fn run(&self, s: &ConvexSystem3, rng: &mut ChaCha8Rng, log: &mut Vec<Attempt>) -> Option<OrdinaryLine3Certificate>;
}

/// The default ladder in order of preference.
pub fn strategies() -> Vec<Box<dyn Strategy3>> {
    vec![Box::new(ThroughCenters), Box::new(SupportingPlane), Box::new(RandomSlices { budget: 400 })]
}

pub fn find_ordinary_line_3d(s: &ConvexSystem3) -> Result<OrdinaryLine3Certificate> {
    find_ordinary_line_3d_seeded(s, 0).map(|o| o.certificate)
}

pub fn find_ordinary_line_3d_seeded(s: &ConvexSystem3, seed: u64) -> Result<SearchOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = Vec::new();
    for strategy in strategies() {
        if !strategy.applies(s) {
            continue;
        }
        if let Some(certificate) = strategy.run(s, &mut rng, &mut attempts) {
            return Ok(SearchOutcome { certificate, attempts });
        }
    }
    Err(Error::SearchBudgetExhausted(attempts.len()))
}

fn log_line(log: &mut Vec<Attempt>, route: &str, detail: String, cert: Option<OrdinaryLine3Certificate>) -> Option<OrdinaryLine3Certificate> {
    log.push(Attempt { strategy: route.to_string(), detail, certified: cert.is_some() });
    cert
}

fn certify_exact(s: &ConvexSystem3, l: &Line3, route: &str, detail: String, log: &mut Vec<Attempt>) -> Option<OrdinaryLine3Certificate> {
    let cert = OrdinaryLine3Certificate::certify(s, l, route);
    log_line(log, route, detail, cert)
}

/// Snaps each proposal at increasing precision and certifies the results.
fn try_proposals(s: &ConvexSystem3, props: &[Proposal], route: &str, log: &mut Vec<Attempt>) -> Option<OrdinaryLine3Certificate> {
    for p in props {
        let mut found = None;
        'bits: for bits in SNAP_BITS {
            for l in snap(s.balls(), p, bits) {
                if let Some(c) = OrdinaryLine3Certificate::certify(s, &l, route) {
                    found = Some(c);
                    break 'bits;
                }
            }
        }
        let detail = format!("proposal tangent to balls {} and {}", p.balls.0, p.balls.1);
        if let Some(c) = log_line(log, route, detail, found) {
            return Some(c);
        }
    }
    None
}

fn unit_f64(p: &Point3) -> V {
    float::unit(p.to_f64())
}

/// A plane containing all centers when `n ≤ 3`, then the common tangents
/// of each pair inside it.
pub struct ThroughCenters;

impl ThroughCenters {
    fn normals(s: &ConvexSystem3) -> Vec<Point3> {
        let c: Vec<Point3> = s.balls().iter().map(|b| b.center()).collect();
        let v = c[1].sub(&c[0]);
        if c.len() == 3 {
            let m = v.cross(&c[2].sub(&c[0]));
            if !m.is_zero() {
                return vec![m];
            }
        }
        (0..3)
            .map(|k| {
                let mut e = Point3::ints(0, 0, 0);
                *[&mut e.x, &mut e.y, &mut e.z][k] = QuadNum::one();
                v.cross(&e)
            })
            .filter(|m| !m.is_zero())
            .collect()
    }
}

impl Strategy3 for ThroughCenters {
    fn name(&self) -> &'static str {
        "through-centers"
    }

    fn applies(&self, s: &ConvexSystem3) -> bool {
        s.len() <= 3
    }

    fn run(&self, s: &ConvexSystem3, _rng: &mut ChaCha8Rng, log: &mut Vec<Attempt>) -> Option<OrdinaryLine3Certificate> {
        let c0 = s.balls()[0].center();
        let normals = Self::normals(s);
        // exact route: rational frame, planar certificates, lift
        for m in &normals {
            let Ok(plane) = Plane3::through(m.clone(), &c0) else { continue };
            let Ok(sec) = slice(s, &plane) else { continue };
            let Ok(certs) = ordinary_lines_disc_system(&sec.system) else { continue };
            for c in certs {
                let Ok(l) = sec.lift(&c.line) else { continue };
                let detail = format!("planar certificate lifted from plane {:?}", plane.normal);
                if let Some(c) = certify_exact(s, &l, self.name(), detail, log) {
                    return Some(c);
                }
            }
        }
        // float route inside the same plane
        let m = normals.first()?;
        let (o, n) = (c0.to_f64(), unit_f64(m));
        let mut props = Vec::new();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                props.extend(plane_bitangents(o, n, (i, &s.balls()[i]), (j, &s.balls()[j])));
            }
        }
        try_proposals(s, &props, self.name(), log)
    }
}

/// Supporting planes of the union: contacts of two balls give the line
/// through them; several non-collinear contacts give an ordinary line of
/// the contact set; collinear contacts go through the tilted plane.
pub struct SupportingPlane;

impl SupportingPlane {
    fn directions(rng: &mut ChaCha8Rng) -> Vec<Point3> {
        let mut out = Vec::new();
        for k in 0..3 {
            for s in [1, -1] {
                let mut u = [0i64; 3];
                u[k] = s;
                out.push(Point3::ints(u[0], u[1], u[2]));
            }
        }
        while out.len() < 22 {
            let u: [i64; 3] = std::array::from_fn(|_| rng.gen_range(-5..=5));
            if u != [0, 0, 0] {
                out.push(Point3::ints(u[0], u[1], u[2]));
            }
        }
        out
    }

    fn two_contacts(&self, s: &ConvexSystem3, a: &Contact, b: &Contact, log: &mut Vec<Attempt>) -> Option<OrdinaryLine3Certificate> {
        let detail = format!("line through contacts of balls {} and {}", a.ball, b.ball);
        match Line3::through(&a.point, &b.point) {
            Ok(l) => certify_exact(s, &l, self.name(), detail, log),
            Err(_) => {
                let (pa, pb) = (a.point.to_f64(), b.point.to_f64());
                let p = Proposal { balls: (a.ball, b.ball), dir: float::sub(pb, pa), touch: (pa, pb) };
                try_proposals(s, &[p], self.name(), log)
            }
        }
    }

    fn many_contacts(&self, s: &ConvexSystem3, u: &Point3, contacts: &[Contact], log: &mut Vec<Attempt>) -> Option<OrdinaryLine3Certificate> {
        // an affine projection along the largest normal coordinate keeps
        // incidences inside the plane
        let drop = (0..3).max_by(|&i, &j| u.coords()[i].abs().to_f64().total_cmp(&u.coords()[j].abs().to_f64()))?;
        let flat: Vec<Point2> = contacts
            .iter()
            .map(|c| {
                let k: Vec<&QuadNum> = (0..3).filter(|&i| i != drop).map(|i| c.point.coords()[i]).collect();
                Point2::new(k[0].clone(), k[1].clone())
            })
            .collect();
        if is_collinear_set(&flat).ok()? {
            return pstar_logged(s, u, contacts, log);
        }
        let set = PointSet::new(flat).ok()?;
        for line in ordinary_lines(&set).ok()? {
            let (a, b) = (&contacts[line.members[0]], &contacts[line.members[1]]);
            if let Some(c) = self.two_contacts(s, a, b, log) {
                return Some(c);
            }
        }
        None
    }
}

impl Strategy3 for SupportingPlane {
    fn name(&self) -> &'static str {
        "supporting-plane"
    }

    fn run(&self, s: &ConvexSystem3, rng: &mut ChaCha8Rng, log: &mut Vec<Attempt>) -> Option<OrdinaryLine3Certificate> {
        for u in Self::directions(rng) {
            let Ok((_, contacts)) = supporting_plane_contacts(s, &u) else { continue };
            let found = match contacts.len() {
                1 => None,
                2 => self.two_contacts(s, &contacts[0], &contacts[1], log),
                _ => self.many_contacts(s, &u, &contacts, log),
            };
            if found.is_some() {
                return found;
            }
        }
        // planes tangent to a pair with every other ball strictly inside
        let balls = s.balls();
        let scale = 1.0 + balls.iter().map(|b| float::norm(b.center.to_f64()) + b.radius_f64()).fold(0.0, f64::max);
        let mut props = Vec::new();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                for u in float::pair_tangent_normals(&balls[i], &balls[j], 12) {
                    let top = float::support(&balls[i], u);
                    let inside = (0..s.len()).all(|k| k == i || k == j || float::support(&balls[k], u) < top - 1e-9 * scale);
                    if !inside {
                        continue;
                    }
                    let a = float::add(balls[i].center.to_f64(), float::scale(u, balls[i].radius_f64()));
                    let b = float::add(balls[j].center.to_f64(), float::scale(u, balls[j].radius_f64()));
                    props.push(Proposal { balls: (i, j), dir: float::sub(b, a), touch: (a, b) });
                    break;
                }
            }
        }
        try_proposals(s, &props, self.name(), log)
    }
}

/// The tilted-plane route for a supporting plane with outer normal `u`
/// whose contacts `a₁, …, aₘ` (m ≥ 3) are collinear, in order along their
/// line. The plane with normal `u + ε(a₁ − a₂)` through `(a₂ + a₃)/2`
/// meets only the first two balls once `ε` is small; `ε` is halved until
/// that holds exactly, then a common tangent of the two sections is
/// certified.
pub fn pstar_route(s: &ConvexSystem3, u: &Point3) -> Result<Option<OrdinaryLine3Certificate>> {
    let (_, contacts) = supporting_plane_contacts(s, u)?;
    if contacts.len() < 3 {
        return Err(Error::InvalidInput(format!("supporting plane touches {} balls, need 3", contacts.len())));
    }
    let mut log = Vec::new();
    Ok(pstar_logged(s, u, &contacts, &mut log))
}

fn pstar_logged(s: &ConvexSystem3, u: &Point3, contacts: &[Contact], log: &mut Vec<Attempt>) -> Option<OrdinaryLine3Certificate> {
    const ROUTE: &str = "supporting-plane/tilted";
    let p0 = &contacts[0].point;
    let dir = contacts[1].point.checked_sub(p0).ok()?;
    let mut keyed: Vec<(QuadNum, &Contact)> = Vec::new();
    for c in contacts {
        let w = c.point.checked_sub(p0).ok()?;
        if !w.cross(&dir).is_zero() {
            return None;
        }
        keyed.push((w.dot(&dir), c));
    }
    let mut order: Vec<&Contact> = Vec::new();
    keyed.sort_by(|x, y| x.0.cmp_exact(&y.0).unwrap_or(std::cmp::Ordering::Equal));
    order.extend(keyed.iter().map(|(_, c)| *c));
    let (a1, a2, a3) = (order[0], order[1], order[2]);
    let tilt = a1.point.checked_sub(&a2.point).ok()?;
    let through = a2.point.add(&a3.point).scale_rat(&Rat::new(1.into(), 2.into()));
    let mut eps = Rat::from_integer(1.into());
    for _ in 0..60 {
        eps /= Rat::from_integer(2.into());
        let n = u.add(&tilt.scale_rat(&eps));
        let nn = n.norm2();
        let mut valid = true;
        for (k, b) in s.balls().iter().enumerate() {
            let e = n.dot(&b.center()).checked_sub(&n.dot(&through)).ok()?;
            let g = e.square().checked_sub(&nn.scale(&b.radius_sq)).ok()?.sign();
            let wanted = if k == a1.ball || k == a2.ball { -1 } else { 1 };
            if g != wanted {
                valid = false;
                break;
            }
        }
        if !valid {
            continue;
        }
        let detail = format!("tilted plane with eps {eps}");
        log.push(Attempt { strategy: ROUTE.into(), detail, certified: false });
        let props = plane_bitangents(
            through.to_f64(),
            unit_f64(&n),
            (a1.ball, &s.balls()[a1.ball]),
            (a2.ball, &s.balls()[a2.ball]),
        );
        if let Some(c) = try_proposals(s, &props, ROUTE, log) {
            return Some(c);
        }
    }
    None
}

/// Seeded random planes meeting two balls, with the common tangents of the
/// two sections.
pub struct RandomSlices {
    pub budget: usize,
}

impl Strategy3 for RandomSlices {
    fn name(&self) -> &'static str {
        "random-slices"
    }

    fn run(&self, s: &ConvexSystem3, rng: &mut ChaCha8Rng, log: &mut Vec<Attempt>) -> Option<OrdinaryLine3Certificate> {
        let balls = s.balls();
        for _ in 0..self.budget {
            let i = rng.gen_range(0..s.len());
            let j = (i + rng.gen_range(1..s.len())) % s.len();
            let (ci, cj) = (balls[i].center.to_f64(), balls[j].center.to_f64());
            let axis = float::sub(cj, ci);
            let o = float::add(ci, float::scale(axis, rng.gen_range(0.0..1.0)));
            let spin: V = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            let tilt: V = std::array::from_fn(|_| rng.gen_range(-0.3..0.3));
            let n = float::unit(float::add(float::unit(float::cross(axis, spin)), tilt));
            let props = plane_bitangents(o, n, (i, &balls[i]), (j, &balls[j]));
            if props.is_empty() {
                log.push(Attempt { strategy: self.name().into(), detail: format!("plane missed ball {i} or {j}"), certified: false });
                continue;
            }
            if let Some(c) = try_proposals(s, &props, self.name(), log) {
                return Some(c);
            }
        }
        None
    }
}
