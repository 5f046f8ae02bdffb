use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sg_core::convex2d::{
    chain_arcgon, classify_body, fig3_counterexample, no_ordinary_line_check, ordinary_lines_disc_system, ArcGon,
    Body2, ChainSpec, CheckOptions, ConvexSystem2, Disc, LineBodyRelation, FIG3_BULGE, FIG3_MIDDLE, FIG3_OUTER,
};
use sg_core::kernel::Line2;
use sg_core::quad::{int, parse_rat, Rat};

fn random_disc(rng: &mut ChaCha8Rng) -> Disc {
    let r: i64 = rng.gen_range(1..=6);
    Disc::new(int(rng.gen_range(-40..=40)), int(rng.gen_range(-40..=40)), int(r * r)).unwrap()
}

fn random_system(rng: &mut ChaCha8Rng, n: usize) -> (ConvexSystem2, Vec<Disc>) {
    loop {
        let discs: Vec<Disc> = (0..n).map(|_| random_disc(rng)).collect();
        if let Ok(s) = ConvexSystem2::from_discs(discs.clone()) {
            return (s, discs);
        }
    }
}

#[test]
fn random_pairs_have_exactly_four_ordinary_lines() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let (s, discs) = random_system(&mut rng, 2);
        let certs = ordinary_lines_disc_system(&s).unwrap();
        assert_eq!(certs.len(), 4);
        assert!(certs.iter().all(|c| c.verify_discs(&discs)));
    }
}

#[test]
fn random_triples_have_an_ordinary_line() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let (s, discs) = random_system(&mut rng, 3);
        let certs = ordinary_lines_disc_system(&s).unwrap();
        assert!(!certs.is_empty());
        assert!(certs.iter().all(|c| c.verify_discs(&discs)));
    }
}

fn outer_bodies() -> Vec<ArcGon> {
    let bulge = parse_rat(FIG3_BULGE).unwrap();
    let build = |spec: &ChainSpec, reflect| {
        let start = (parse_rat(spec.start.0).unwrap(), parse_rat(spec.start.1).unwrap());
        let dirs: Vec<Rat> = spec.dirs.iter().map(|s| parse_rat(s).unwrap()).collect();
        let lengths: Vec<Rat> = spec.lengths.iter().map(|s| parse_rat(s).unwrap()).collect();
        chain_arcgon(start, &dirs, &lengths, &bulge, reflect).unwrap()
    };
    vec![
        build(&FIG3_OUTER[0], false),
        build(&FIG3_OUTER[1], false),
        build(&FIG3_OUTER[0], true),
        build(&FIG3_OUTER[1], true),
    ]
}

#[test]
fn hull_lines_touch_three_bodies() {
    let bodies = outer_bodies();
    for y in [1, -1] {
        let line = Line2::new(0.into(), 1.into(), (-y).into()).unwrap();
        let touched = bodies
            .iter()
            .filter(|g| {
                let v = classify_body(&line, &Body2::ArcGon((*g).clone()), 512);
                matches!(v.relation, Some(LineBodyRelation::Tangent { .. }))
            })
            .count();
        assert_eq!(touched, 3, "y = {y}");
    }
}

#[test]
fn two_frame_bodies_alone_have_four_ordinary_lines() {
    let bodies = outer_bodies();
    let s = ConvexSystem2::new(vec![Body2::ArcGon(bodies[0].clone()), Body2::ArcGon(bodies[2].clone())]).unwrap();
    let r = no_ordinary_line_check(&s, CheckOptions::default()).unwrap();
    assert_eq!(r.uncertain, 0);
    assert_eq!(r.witnesses.len(), 4);
}

#[test]
fn three_frame_bodies_alone_have_an_ordinary_line() {
    let bodies = outer_bodies();
    let s = ConvexSystem2::new(bodies[..3].iter().cloned().map(Body2::ArcGon).collect()).unwrap();
    let r = no_ordinary_line_check(&s, CheckOptions::default()).unwrap();
    assert_eq!(r.uncertain, 0);
    assert!(!r.witnesses.is_empty());
}

#[test]
fn precision_cap_bounds_the_refinement() {
    use sg_core::convex2d::{Certainty, RatPoint};
    // lens spanning x ∈ [−1, 1]; the line x = 1 − 2⁻²⁰ cuts a tiny chord
    let corners = vec![RatPoint { x: int(0), y: int(-3) }, RatPoint { x: int(0), y: int(3) }];
    let arcs = vec![Disc::new(int(-4), int(0), int(25)).unwrap(), Disc::new(int(4), int(0), int(25)).unwrap()];
    let body = Body2::ArcGon(ArcGon::new(corners, arcs).unwrap());
    let c = int(1) - Rat::new(1.into(), (1i64 << 20).into());
    let line = Line2::new(1.into(), 0.into(), (-c).into()).unwrap();
    let coarse = classify_body(&line, &body, 4);
    assert_eq!(coarse.certainty, Certainty::Uncertain);
    assert_eq!(coarse.relation, None);
    let fine = classify_body(&line, &body, 512);
    assert_eq!(fine.relation, Some(LineBodyRelation::Cross));
    assert!(matches!(fine.certainty, Certainty::Certified { .. }));
}

#[test]
fn counterexample_preconditions() {
    assert!(fig3_counterexample(3).is_err());
    assert!(fig3_counterexample(5 + FIG3_MIDDLE.len()).is_err());
}
