//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//! Tolerances and budgets are pinned below and must not be loosened.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sg_core::convex2d::{self, CheckOptions, ConvexSystem2, Disc};
use sg_core::convex3d::{self, Ball, BallRelation, ConvexSystem3};
use sg_core::hset::{bisector_area_identity, verify_closure, HTruncation};
use sg_core::interval::at_most_pow2_neg;
use sg_core::kernel::{Point2, Point3};
use sg_core::point_sg::{finder_by_name, is_collinear_set, ordinary_lines_with, PointSet};
use sg_core::quad::{int, rat, Rat};
use sg_core::segments::{
    build_geometric_graph, canonical_form, classify_six, fig5_family, fig6_family, hull_vertex_claim_check,
    no_ordinary_line_certificate, theorem5_harness, validate_family, ClaimStatus, Pt, Segment, SegmentFamily,
    SixType, Theorem5Verdict,
};

/// Certified interval widths must be at most `2^-EPS_BITS`.
const EPS_BITS: u32 = 64;
/// Interval precision cap in bits.
const PRECISION_CAP: u32 = 512;
const CLOSURE_DEPTH: u64 = 10;
const CLOSURE_PAIRS: u64 = 1770;
const LARGE_DEPTH: u64 = 50;
const LARGE_PAIRS: u64 = 44850;
const LARGE_BUDGET: Duration = Duration::from_secs(30);
const IDENTITY_SAMPLES: usize = 10_000;
const POINT_SETS: usize = 500;
const POINT_BUDGET: Duration = Duration::from_secs(10);
const DISC_PAIRS: usize = 200;
const DISC_TRIPLES: usize = 500;
const TRIPLE_BUDGET: Duration = Duration::from_secs(5);
const BALL_SYSTEMS: usize = 1000;
const BALL_BUDGET: Duration = Duration::from_secs(60);
const SEGMENT_FAMILIES: usize = 1000;
const SEGMENT_BUDGET: Duration = Duration::from_secs(60);
const LEMMA_FUZZ: usize = 3000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn sg(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_sg")).args(args).env_remove("SG_PRECISION_BITS").output().expect("sg runs")
}

fn closure() -> Outcome {
    let out = sg(&["hset", "verify", "--depth", &CLOSURE_DEPTH.to_string()]);
    let line = String::from_utf8_lossy(&out.stdout);
    let cli_ok = out.status.code() == Some(0) && line.contains(&format!("\"pairs_checked\":{CLOSURE_PAIRS}"));
    let t = Instant::now();
    let r = verify_closure(&HTruncation::new(LARGE_DEPTH).expect("depth"));
    let elapsed = t.elapsed();
    let large_ok = r.passed && r.pairs_checked == LARGE_PAIRS && elapsed < LARGE_BUDGET;
    outcome(cli_ok && large_ok, format!("depth {CLOSURE_DEPTH} via sg, depth {LARGE_DEPTH}: {} pairs in {elapsed:.2?}", r.pairs_checked))
}

fn lemma_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut bad = 0;
    for _ in 0..IDENTITY_SAMPLES {
        let mut unit = || {
            let d = rng.gen_range(1..=1_000_000i64);
            rat(rng.gen_range(1..=d), d)
        };
        let (x, y) = (unit(), unit());
        if !bisector_area_identity(&x, &y).unwrap_or(false) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{IDENTITY_SAMPLES} samples, {bad} mismatches"))
}

fn point_sets() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (fast, brute) = (finder_by_name("grouped").unwrap(), finder_by_name("brute").unwrap());
    let t = Instant::now();
    let mut failures = 0;
    let mut done = 0;
    while done < POINT_SETS {
        let n = rng.gen_range(3..=12);
        let mut pts: Vec<Point2> = Vec::new();
        while pts.len() < n {
            let p = Point2::ints(rng.gen_range(0..100), rng.gen_range(0..100));
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        if is_collinear_set(&pts).unwrap() {
            continue;
        }
        let set = PointSet::new(pts).unwrap();
        let a = ordinary_lines_with(fast.as_ref(), &set).unwrap();
        let b = ordinary_lines_with(brute.as_ref(), &set).unwrap();
        if a.is_empty() || a != b {
            failures += 1;
        }
        done += 1;
    }
    let elapsed = t.elapsed();
    outcome(failures == 0 && elapsed < POINT_BUDGET, format!("{done} sets, {failures} failures, {elapsed:.2?}"))
}

fn random_discs(rng: &mut ChaCha8Rng, n: usize) -> (ConvexSystem2, Vec<Disc>) {
    loop {
        let discs: Vec<Disc> = (0..n)
            .map(|_| {
                let r = rng.gen_range(1..=6i64);
                Disc::new(int(rng.gen_range(-40..=40)), int(rng.gen_range(-40..=40)), int(r * r)).unwrap()
            })
            .collect();
        if let Ok(s) = ConvexSystem2::from_discs(discs.clone()) {
            return (s, discs);
        }
    }
}

fn disc_pairs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bad = 0;
    for _ in 0..DISC_PAIRS {
        let (s, discs) = random_discs(&mut rng, 2);
        let ok = convex2d::ordinary_lines_disc_system(&s)
            .map(|c| c.len() == 4 && c.iter().all(|c| c.verify_discs(&discs)))
            .unwrap_or(false);
        bad += usize::from(!ok);
    }
    outcome(bad == 0, format!("{DISC_PAIRS} pairs, {bad} without exactly four verified certificates"))
}

fn disc_triples() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let t = Instant::now();
    let mut bad = 0;
    for _ in 0..DISC_TRIPLES {
        let (s, discs) = random_discs(&mut rng, 3);
        let ok = convex2d::ordinary_lines_disc_system(&s)
            .map(|c| !c.is_empty() && c.iter().all(|c| c.verify_discs(&discs)))
            .unwrap_or(false);
        bad += usize::from(!ok);
    }
    let elapsed = t.elapsed();
    outcome(bad == 0 && elapsed < TRIPLE_BUDGET, format!("{DISC_TRIPLES} systems, {bad} failures, {elapsed:.2?}"))
}

fn frame_systems() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for n in [4, 5] {
        let r = convex2d::fig3_counterexample(n)
            .and_then(|s| convex2d::no_ordinary_line_check(&s, CheckOptions { precision_cap: PRECISION_CAP }));
        match r {
            Ok(r) => {
                let eps_ok = r.max_eps.as_ref().is_none_or(|e| at_most_pow2_neg(e, EPS_BITS));
                pass &= r.no_ordinary_line && r.uncertain == 0 && eps_ok;
                details.push(format!("n={n}: {} exact, {} certified, {} uncertain", r.exact, r.certified, r.uncertain));
            }
            Err(e) => {
                pass = false;
                details.push(format!("n={n}: {e}"));
            }
        }
    }
    outcome(pass, details.join("; "))
}

fn three_squares(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let [a, b, c]: [i64; 3] = std::array::from_fn(|_| rng.gen_range(0..=6));
        let d = rng.gen_range(1..=3i64);
        if a + b + c > 0 {
            return rat(a * a + b * b + c * c, d * d);
        }
    }
}

fn ball_systems() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let t = Instant::now();
    let (mut bad, mut route_bad) = (0, 0);
    for k in 0..BALL_SYSTEMS {
        let n = 2 + k % 5;
        let s = loop {
            let balls: Vec<Ball> = (0..n)
                .map(|_| {
                    let r2 = if rng.gen_bool(0.5) { int(rng.gen_range(1..=5i64).pow(2)) } else { three_squares(&mut rng) };
                    let mut c = || int(rng.gen_range(-20..=20));
                    Ball::new(c(), c(), c(), r2).unwrap()
                })
                .collect();
            if let Ok(s) = ConvexSystem3::new(balls) {
                break s;
            }
        };
        match convex3d::find_ordinary_line_3d(&s) {
            Ok(c) if c.verify(&s) => route_bad += usize::from(n <= 3 && c.route != "through-centers"),
            _ => bad += 1,
        }
    }
    let fixture = [(0, 0, 0, 1), (4, 0, 0, 1), (8, 0, 0, 1), (4, 5, -2, 1)];
    let s = ConvexSystem3::new(fixture.iter().map(|&(x, y, z, r)| Ball::ints(x, y, z, r).unwrap()).collect()).unwrap();
    let tilted = matches!(
        convex3d::pstar_route(&s, &Point3::ints(0, 0, 1)),
        Ok(Some(c)) if c.verify(&s) && c.relations.iter().filter(|r| **r == BallRelation::Tangent).count() == 2
    );
    let elapsed = t.elapsed();
    outcome(
        bad == 0 && route_bad == 0 && tilted && elapsed < BALL_BUDGET,
        format!("{BALL_SYSTEMS} systems, {bad} uncertified, {route_bad} off-route, tilted fixture {tilted}, {elapsed:.2?}"),
    )
}

fn random_family(rng: &mut ChaCha8Rng) -> SegmentFamily {
    loop {
        let k = rng.gen_range(1..=5);
        let extras = rng.gen_range(0..=3);
        let mut pt = || Pt::ints(rng.gen_range(0..=8), rng.gen_range(0..=8));
        let segments: Vec<Segment> = (0..k).filter_map(|_| Segment::new(pt(), pt()).ok()).collect();
        let extra_points = (0..extras).map(|_| pt()).collect();
        let f = SegmentFamily { segments, extra_points };
        if !f.segments.is_empty() && validate_family(&f).valid {
            return f;
        }
    }
}

fn five_segments() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let t = Instant::now();
    let mut refuted = 0;
    for _ in 0..SEGMENT_FAMILIES {
        let f = random_family(&mut rng);
        if !matches!(theorem5_harness(&f), Ok(Theorem5Verdict::Consistent { .. })) {
            refuted += 1;
        }
    }
    let elapsed = t.elapsed();
    outcome(refuted == 0 && elapsed < SEGMENT_BUDGET, format!("{SEGMENT_FAMILIES} families, {refuted} refutations, {elapsed:.2?}"))
}

fn six_families() -> Outcome {
    let prism = canonical_form(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]);
    let mut details = Vec::new();
    let mut pass = true;
    for tag in SixType::ALL {
        let f = fig5_family(tag);
        let certified = no_ordinary_line_certificate(&f).no_ordinary_line;
        let g = build_geometric_graph(&f);
        let connected = g.is_3_connected();
        let classified = classify_six(&f).map(|c| c.tag == tag).unwrap_or(false);
        let prism_ok = !matches!(tag, SixType::C | SixType::D) || g.canonical_form() == prism;
        pass &= certified && connected && classified && prism_ok;
        details.push(format!("{}: {}", tag.letter(), if certified && connected && classified && prism_ok { "ok" } else { "bad" }));
    }
    outcome(pass, details.join(", "))
}

fn hull_claim() -> Outcome {
    let mut corpus: Vec<SegmentFamily> = SixType::ALL.into_iter().map(fig5_family).collect();
    corpus.extend((1..=8).filter_map(fig6_family));
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for k in 0..LEMMA_FUZZ {
        let hull = [Pt::ints(0, 0), Pt::ints(12, 0), Pt::ints(rng.gen_range(0..=12), 9)];
        let mut f = SegmentFamily::new((0..3).map(|i| Segment::new(hull[i].clone(), hull[(i + 1) % 3].clone()).unwrap()).collect());
        while f.segments.len() < 6 + k % 2 {
            let mut anchors = f.endpoints();
            for s in &f.segments {
                anchors.extend([rat(1, 3), rat(1, 2), rat(2, 3)].iter().map(|t| s.p.lerp(&s.q, t)));
            }
            let mut pick = || anchors[rng.gen_range(0..anchors.len())].clone();
            // retry until the new member keeps the family valid
            let added = (0..64).any(|_| {
                let Ok(s) = Segment::new(pick(), pick()) else { return false };
                f.segments.push(s);
                if validate_family(&f).valid {
                    return true;
                }
                f.segments.pop();
                false
            });
            if !added {
                break;
            }
        }
        corpus.push(f);
    }
    let (mut checked, mut failed) = (0, 0);
    for f in &corpus {
        match hull_vertex_claim_check(f).status {
            ClaimStatus::Pass => checked += 1,
            ClaimStatus::Fail => failed += 1,
            ClaimStatus::NotApplicable => {}
        }
    }
    outcome(failed == 0 && checked >= 12, format!("{} families, {checked} certified, {failed} exceptions", corpus.len()))
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("sg-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = |name: &str| dir.join(name).display().to_string();
    std::fs::write(p("two.json"), r#"{"discs":[{"cx":"0","cy":"0","r2":"1"},{"cx":"5","cy":"0","r2":"4"}]}"#).unwrap();
    std::fs::write(
        p("balls.json"),
        r#"{"balls":[{"center":{"x":"0","y":"0","z":"0"},"radius_sq":"1"},{"center":{"x":"5","y":"1","z":"0"},"radius_sq":"1"},{"center":{"x":"0","y":"7","z":"2"},"radius_sq":"4"},{"center":{"x":"9","y":"9","z":"9"},"radius_sq":"9"}]}"#,
    )
    .unwrap();
    let prep: [&[&str]; 3] = [
        &["points", "generate", "--n", "10", "--seed", "7", "--out", &p("pts.json")],
        &["segs", "gen", "--fig", "5c", "--out", &p("f5c.json")],
        &["convex2", "fig3", "--n", "4", "--out", &p("fig3.json"), "--svg", &p("fig3.svg")],
    ];
    let runs: Vec<Vec<String>> = [
        vec!["hset", "verify", "--depth", "8"],
        vec!["hset", "svg", "--depth", "3", "--out", &p("h.svg")],
        vec!["points", "generate", "--n", "10", "--seed", "7"],
        vec!["points", "ordinary", &p("pts.json")],
        vec!["points", "svg", &p("pts.json"), "--out", &p("pts.svg")],
        vec!["convex2", "ordinary", &p("two.json")],
        vec!["convex2", "certify-none", &p("two.json")],
        vec!["convex2", "svg", &p("two.json"), "--out", &p("two.svg")],
        vec!["convex3", "ordinary", &p("balls.json"), "--seed", "11"],
        vec!["segs", "verify", &p("f5c.json")],
        vec!["segs", "certify-none", &p("f5c.json")],
        vec!["segs", "classify", &p("f5c.json")],
        vec!["segs", "gen", "--fig", "6e"],
        vec!["segs", "svg", &p("f5c.json"), "--out", &p("f5c.svg")],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();
    let mut prepared = true;
    let mut first_fig3 = None;
    for round in 0..2 {
        for args in prep {
            prepared &= sg(args).status.code() == Some(0);
        }
        let svg = std::fs::read(p("fig3.svg")).ok();
        if round == 0 {
            first_fig3 = svg;
        } else {
            prepared &= first_fig3 == svg;
        }
    }
    let mut differing = Vec::new();
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let file = args.iter().position(|a| *a == "--out").map(|k| args[k + 1]);
        let mut outputs = Vec::new();
        for _ in 0..2 {
            let out = sg(&args);
            let svg = file.map(|f| std::fs::read(f).unwrap_or_default());
            outputs.push((out.status.code(), out.stdout, svg));
        }
        if outputs[0] != outputs[1] || outputs[0].0.is_none_or(|c| c > 1) {
            differing.push(args.join(" "));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    outcome(prepared && differing.is_empty(), format!("{} commands twice, differing: {differing:?}", runs.len() + prep.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("H closure over every pair", closure),
        ("bisector area identity", lemma_identity),
        ("point sets have ordinary lines", point_sets),
        ("disc pairs have four ordinary lines", disc_pairs),
        ("disc triples have an ordinary line", disc_triples),
        ("frame systems have none", frame_systems),
        ("ball systems have certified lines", ball_systems),
        ("five segments or fewer", five_segments),
        ("released six-segment families", six_families),
        ("hull vertices carry three members", hull_claim),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        failed += usize::from(!o.pass);
        println!("criterion {:>2} {} {name}: {} ({:.2?})", k + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail, t.elapsed());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
