//! Regenerates the released parameters of the four-body frame: rationalizes
//! a float template into edge chains, then runs the certified checker.
//!
//! cargo run --release -p sg-core --example fig3_search -- [gap] [denominator]

use num_bigint::BigInt;
use sg_core::convex2d::{
    chain_arcgon, no_ordinary_line_check, Body2, CheckOptions, ConvexSystem2, Disc, FIG3_BULGE,
};
use sg_core::quad::{parse_rat, rat_to_string, Rat};

type P = (f64, f64);

fn approx(x: f64, den: i64) -> Rat {
    Rat::new(BigInt::from((x * den as f64).round() as i64), BigInt::from(den))
}

/// Half-angle tangent of the direction of `b − a`.
fn half_tan(a: P, b: P) -> f64 {
    let th = (b.1 - a.1).atan2(b.0 - a.0);
    (th / 2.0).tan()
}

fn dist(a: P, b: P) -> f64 {
    ((b.0 - a.0).powi(2) + (b.1 - a.1).powi(2)).sqrt()
}

struct Chain {
    start: (Rat, Rat),
    dirs: Vec<Rat>,
    lengths: Vec<Rat>,
}

fn chain(corners: &[P], start: (Rat, Rat), den: i64, fixed: &[(usize, Rat)]) -> Chain {
    let m = corners.len();
    let mut dirs: Vec<Rat> = (0..m).map(|k| approx(half_tan(corners[k], corners[(k + 1) % m]), den)).collect();
    for (k, t) in fixed {
        dirs[*k] = t.clone();
    }
    let lengths = (0..m - 2).map(|k| approx(dist(corners[k], corners[k + 1]), den)).collect();
    Chain { start, dirs, lengths }
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    if args.get(1).map(String::as_str) == Some("verify") {
        for n in 4..=4 + sg_core::convex2d::FIG3_MIDDLE.len() {
            let t = std::time::Instant::now();
            let r = sg_core::convex2d::fig3_counterexample(n).map(|_| ());
            println!("n={n}: {r:?} ({:.2?})", t.elapsed());
        }
        return;
    }
    let g: f64 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(0.02);
    let den: i64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(1000);

    let (a1, b1) = ((-1.0, 1.0), (-1.0, -1.0));
    let (p12, p14) = ((-0.2, -0.4), (-0.4, 0.2));
    let (a3, p23) = ((1.0, -1.0), (0.4, -0.2));
    let h = g;
    // K2 corners on the gap lines shifted toward K2 by g
    let a_s = (h + 0.6 * g) / 0.8;
    let corner_a = (a3.0 - 0.8 * g - 0.6 * a_s, a3.1 - 0.6 * g + 0.8 * a_s);
    let b_s = (h + 0.8 * g) / 0.6;
    let corner_b = (b1.0 + 0.6 * g + 0.8 * b_s, b1.1 - 0.8 * g + 0.6 * b_s);
    // inner corners: gap lines meet the hole edge p12–p23
    let meet = |o: P, d: P| -> P {
        let e = (p23.0 - p12.0, p23.1 - p12.1);
        let det = d.0 * (-e.1) - d.1 * (-e.0);
        let r = (p12.0 - o.0, p12.1 - o.1);
        let s = (r.0 * (-e.1) - r.1 * (-e.0)) / det;
        (o.0 + s * d.0, o.1 + s * d.1)
    };
    let inner_23 = meet((a3.0 - 0.8 * g, a3.1 - 0.6 * g), (-0.6, 0.8));
    let inner_12 = meet((b1.0 + 0.6 * g, b1.1 - 0.8 * g), (0.8, 0.6));

    let k1 = chain(&[a1, b1, p12, p14], (parse_rat("-1").unwrap(), parse_rat("1").unwrap()), den, &[(0, parse_rat("-1").unwrap()), (1, parse_rat("1/3").unwrap()), (3, parse_rat("2").unwrap())]);
    let mut k1 = k1;
    k1.lengths[0] = parse_rat("2").unwrap();
    let k2 = chain(
        &[(0.0, -1.0), corner_a, inner_23, inner_12, corner_b],
        (parse_rat("0").unwrap(), parse_rat("-1").unwrap()),
        den,
        &[],
    );

    let bulge = parse_rat(FIG3_BULGE).unwrap();
    let build = |c: &Chain, reflect| chain_arcgon(c.start.clone(), &c.dirs, &c.lengths, &bulge, reflect);
    let outer = match (build(&k1, false), build(&k2, false), build(&k1, true), build(&k2, true)) {
        (Ok(a), Ok(b), Ok(c), Ok(d)) => vec![a, b, c, d],
        e => panic!("construction failed: {:?}", (e.0.err(), e.1.err(), e.2.err(), e.3.err())),
    };

    for (name, c) in [("K1", &k1), ("K2", &k2)] {
        let dirs: Vec<String> = c.dirs.iter().map(rat_to_string).collect();
        let lens: Vec<String> = c.lengths.iter().map(rat_to_string).collect();
        println!("{name}: start ({}, {}) dirs {:?} lengths {:?}", rat_to_string(&c.start.0), rat_to_string(&c.start.1), dirs, lens);
    }

    for middle in [vec![], vec![Disc::new(parse_rat("0").unwrap(), parse_rat("0").unwrap(), parse_rat("1/100").unwrap()).unwrap()]] {
        let mut bodies: Vec<Body2> = middle.into_iter().map(Body2::Disc).collect();
        bodies.extend(outer.iter().cloned().map(Body2::ArcGon));
        let t0 = std::time::Instant::now();
        let system = match ConvexSystem2::new(bodies) {
            Ok(s) => s,
            Err(e) => {
                println!("invalid system: {e}");
                continue;
            }
        };
        println!("validated in {:.2?}", t0.elapsed());
        stats(&system);
        let t = std::time::Instant::now();
        let c = sg_core::convex2d::candidate_lines(&system).unwrap();
        println!("{} candidates in {:.2?}", c.len(), t.elapsed());
        let t = std::time::Instant::now();
        let r = no_ordinary_line_check(&system, CheckOptions::default()).unwrap();
        println!(
            "n={} candidates={} exact={} certified={} uncertain={} witnesses={} max_eps={:?} ({:.2?})",
            system.len(),
            r.candidates,
            r.exact,
            r.certified,
            r.uncertain,
            r.witnesses.len(),
            r.max_eps.as_ref().map(|e| e.to_string().len()),
            t.elapsed()
        );
        for w in r.witnesses.iter().take(10) {
            let (a, b, c) = (w.line.a.to_f64(), w.line.b.to_f64(), w.line.c.to_f64());
            println!(
                "  witness {:?} {:?}: {a:.4}x + {b:.4}y + {c:.4} = 0 at {:?} {:?}",
                w.bodies,
                w.kind,
                w.contacts.0.to_f64(),
                w.contacts.1.to_f64()
            );
        }
    }
}

#[allow(dead_code)]
fn stats(system: &ConvexSystem2) {
    let c = sg_core::convex2d::candidate_lines(system).unwrap();
    let bits: Vec<u64> = c.iter().map(|c| c.line.radicand().map(|d| d.bits()).unwrap_or(0)).collect();
    let coef: Vec<u64> = c.iter().map(|c| c.line.c.a().denom().bits()).collect();
    println!("radicand bits max {} mean {}", bits.iter().max().unwrap(), bits.iter().sum::<u64>() / bits.len() as u64);
    println!("C denominators bits max {} mean {}", coef.iter().max().unwrap(), coef.iter().sum::<u64>() / coef.len() as u64);
    for b in system.bodies() {
        let r: Vec<u64> = b.circles().iter().map(|d| d.r2.denom().bits() + d.r2.numer().bits()).collect();
        println!("circle r2 bits {:?}", r);
    }
}
