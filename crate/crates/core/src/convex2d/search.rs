//! Candidate enumeration, ordinary-line certificates and the
//! no-ordinary-line report.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{Line2, LineKey, Point2};
use crate::quad::Rat;

use super::classify::{classify_body, classify_line, Certainty, LineBodyRelation, Verdict};
use super::tangent::{circle_tangents, corner_line, tangents_from_point, TangentKind};
use super::{Body2, ConvexSystem2, Disc};

pub const DEFAULT_PRECISION_CAP: u32 = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Upper bound on interval precision in bits.
    pub precision_cap: u32,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { precision_cap: DEFAULT_PRECISION_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub pair: (usize, usize),
    pub kind: TangentKind,
    pub line: Line2,
}

/// Supporting-line candidates for one pair of bodies, deduplicated, in the
/// order circle–circle, corner–circle, corner–corner.
pub(super) fn pair_candidates(a: &Body2, b: &Body2) -> Result<Vec<Candidate>> {
    let mut out: Vec<(TangentKind, Line2)> = Vec::new();
    for ca in a.circles() {
        for cb in b.circles() {
            out.extend(circle_tangents(ca, cb)?);
        }
    }
    let (ka, kb) = (a.corners(), b.corners());
    for (corners, circles) in [(&ka, b.circles()), (&kb, a.circles())] {
        for v in corners {
            for c in circles {
                out.extend(tangents_from_point(v, c)?.into_iter().map(|l| (TangentKind::CornerArc, l)));
            }
        }
    }
    for u in &ka {
        for v in &kb {
            out.push((TangentKind::CornerCorner, corner_line(u, v)?));
        }
    }
    let mut seen: BTreeSet<LineKey> = BTreeSet::new();
    Ok(out
        .into_iter()
        .filter(|(_, l)| seen.insert(l.key()))
        .map(|(kind, line)| Candidate { pair: (0, 0), kind, line })
        .collect())
}

/// All candidates of the system ordered by pair, then tangent type.
pub fn candidate_lines(s: &ConvexSystem2) -> Result<Vec<Candidate>> {
    let b = s.bodies();
    let mut out = Vec::new();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            for mut c in pair_candidates(&b[i], &b[j])? {
                c.pair = (i, j);
                out.push(c);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrdinaryLineCertificate {
    pub line: Line2,
    pub kind: TangentKind,
    pub bodies: (usize, usize),
    pub contacts: (Point2, Point2),
    pub relations: Vec<LineBodyRelation>,
}

impl OrdinaryLineCertificate {
    /// Re-checks the certificate against disc bodies with the exact
    /// classifier alone.
    pub fn verify_discs(&self, discs: &[Disc]) -> bool {
        let rel: Vec<LineBodyRelation> = discs.iter().map(|d| classify_line(&self.line, d)).collect();
        let tangent: Vec<usize> =
            rel.iter().enumerate().filter(|(_, r)| matches!(r, LineBodyRelation::Tangent { .. })).map(|(i, _)| i).collect();
        tangent == [self.bodies.0, self.bodies.1]
            && rel.iter().all(|r| matches!(r, LineBodyRelation::Miss | LineBodyRelation::Tangent { .. }))
            && rel == self.relations
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Outcome {
    Ordinary(OrdinaryLineCertificate),
    NotOrdinary,
    Uncertain,
}

/// Classifies one candidate, visiting the bodies outside its pair first
/// and stopping at the first proof that it is not ordinary.
fn evaluate(s: &ConvexSystem2, cand: &Candidate, cap: u32) -> (Outcome, Certainty) {
    let n = s.len();
    let (i, j) = cand.pair;
    let order = (0..n).filter(|&k| k != i && k != j).chain([i, j]);
    let mut verdicts: Vec<Option<Verdict>> = vec![None; n];
    let mut tangents = 0;
    let mut undecided = false;
    for k in order {
        let v = classify_body(&cand.line, &s.bodies()[k], cap);
        let stop = match &v.relation {
            Some(LineBodyRelation::Cross) => true,
            Some(LineBodyRelation::Tangent { .. }) => {
                tangents += 1;
                tangents >= 3
            }
            Some(LineBodyRelation::Miss) => false,
            None => {
                undecided = true;
                false
            }
        };
        verdicts[k] = Some(v);
        if stop {
            let worst = worst_certainty(verdicts.iter().flatten().filter(|v| v.relation.is_some()).map(|v| &v.certainty));
            return (Outcome::NotOrdinary, worst);
        }
    }
    if undecided {
        return (Outcome::Uncertain, Certainty::Uncertain);
    }
    let verdicts: Vec<Verdict> = verdicts.into_iter().flatten().collect();
    let worst = worst_certainty(verdicts.iter().map(|v| &v.certainty));
    let touched: Vec<usize> = verdicts
        .iter()
        .enumerate()
        .filter(|(_, v)| matches!(v.relation, Some(LineBodyRelation::Tangent { .. })))
        .map(|(k, _)| k)
        .collect();
    if touched.len() != 2 {
        return (Outcome::NotOrdinary, worst);
    }
    let relations: Vec<LineBodyRelation> = verdicts.into_iter().filter_map(|v| v.relation).collect();
    let contact = |k: usize| match &relations[k] {
        LineBodyRelation::Tangent { point } => point.clone(),
        _ => unreachable!("tangent index"),
    };
    let cert = OrdinaryLineCertificate {
        line: cand.line.clone(),
        kind: cand.kind,
        bodies: (touched[0], touched[1]),
        contacts: (contact(touched[0]), contact(touched[1])),
        relations,
    };
    (Outcome::Ordinary(cert), worst)
}

fn worst_certainty<'a>(cs: impl Iterator<Item = &'a Certainty>) -> Certainty {
    let mut worst = Certainty::Exact;
    for c in cs {
        match (c, &worst) {
            (Certainty::Uncertain, _) => return Certainty::Uncertain,
            (Certainty::Certified { eps }, Certainty::Certified { eps: w }) if eps <= w => {}
            (Certainty::Certified { .. }, _) => worst = c.clone(),
            (Certainty::Exact, _) => {}
        }
    }
    worst
}

/// Evaluates candidates on scoped threads and merges in candidate order.
fn evaluate_all(s: &ConvexSystem2, cands: &[Candidate], cap: u32) -> Vec<(Outcome, Certainty)> {
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8);
    let chunk = cands.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = cands
            .chunks(chunk)
            .map(|block| scope.spawn(move || block.iter().map(|c| evaluate(s, c, cap)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Every ordinary line of the system, with its certificate. Candidates
/// that stay undecided at the precision cap are an error.
pub fn ordinary_lines(s: &ConvexSystem2, opts: CheckOptions) -> Result<Vec<OrdinaryLineCertificate>> {
    let cands = candidate_lines(s)?;
    let mut out = Vec::new();
    for (outcome, _) in evaluate_all(s, &cands, opts.precision_cap) {
        match outcome {
            Outcome::Ordinary(c) => out.push(c),
            Outcome::NotOrdinary => {}
            Outcome::Uncertain => {
                return Err(Error::ConstructionFailed("candidate undecided at the precision cap".into()))
            }
        }
    }
    Ok(out)
}

/// Exact enumeration for systems made only of discs.
pub fn ordinary_lines_disc_system(s: &ConvexSystem2) -> Result<Vec<OrdinaryLineCertificate>> {
    if !s.all_discs() {
        return Err(Error::InvalidInput("system contains non-disc bodies".into()));
    }
    ordinary_lines(s, CheckOptions::default())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoOrdinaryReport {
    pub bodies: usize,
    pub candidates: usize,
    pub exact: usize,
    pub certified: usize,
    pub uncertain: usize,
    /// Largest interval width behind a certified verdict.
    #[serde(serialize_with = "opt_rat")]
    pub max_eps: Option<Rat>,
    pub precision_cap: u32,
    pub witnesses: Vec<OrdinaryLineCertificate>,
    pub uncertain_lines: Vec<Candidate>,
    /// True iff every candidate was decided and none is ordinary.
    pub no_ordinary_line: bool,
}

fn opt_rat<S: serde::Serializer>(r: &Option<Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&crate::quad::rat_to_string(r)),
        None => s.serialize_none(),
    }
}

pub fn no_ordinary_line_check(s: &ConvexSystem2, opts: CheckOptions) -> Result<NoOrdinaryReport> {
    let cands = candidate_lines(s)?;
    let results = evaluate_all(s, &cands, opts.precision_cap);
    let mut report = NoOrdinaryReport {
        bodies: s.len(),
        candidates: cands.len(),
        exact: 0,
        certified: 0,
        uncertain: 0,
        max_eps: None,
        precision_cap: opts.precision_cap,
        witnesses: Vec::new(),
        uncertain_lines: Vec::new(),
        no_ordinary_line: false,
    };
    for (cand, (outcome, certainty)) in cands.into_iter().zip(results) {
        match certainty {
            Certainty::Exact => report.exact += 1,
            Certainty::Certified { eps } => {
                report.certified += 1;
                if report.max_eps.as_ref().is_none_or(|m| eps > *m) {
                    report.max_eps = Some(eps);
                }
            }
            Certainty::Uncertain => report.uncertain += 1,
        }
        match outcome {
            Outcome::Ordinary(c) => report.witnesses.push(c),
            Outcome::Uncertain => report.uncertain_lines.push(cand),
            Outcome::NotOrdinary => {}
        }
    }
    report.no_ordinary_line = report.uncertain == 0 && report.witnesses.is_empty();
    Ok(report)
}
