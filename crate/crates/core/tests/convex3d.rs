use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sg_core::convex3d::{
    find_ordinary_line_3d, find_ordinary_line_3d_seeded, pstar_route, slice, Ball, BallRelation, ConvexSystem3,
};
use sg_core::convex2d::ordinary_lines_disc_system;
use sg_core::kernel::{Plane3, Point3};
use sg_core::quad::{int, rat, QuadNum, Rat};

/// `(a² + b² + c²)/d²`: a squared radius whose sphere has rational points,
/// usually not a square.
fn sum_of_three_squares(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let [a, b, c]: [i64; 3] = std::array::from_fn(|_| rng.gen_range(0..=6));
        let d = rng.gen_range(1..=3i64);
        if a + b + c > 0 {
            return rat(a * a + b * b + c * c, d * d);
        }
    }
}

fn random_system(rng: &mut ChaCha8Rng, n: usize, flat: bool) -> ConvexSystem3 {
    loop {
        let balls: Vec<Ball> = (0..n)
            .map(|_| {
                let z = if flat { 3 } else { rng.gen_range(-20..=20) };
                let r2 = if rng.gen_bool(0.5) { rat(rng.gen_range(1..=5i64).pow(2), 1) } else { sum_of_three_squares(rng) };
                Ball::new(int(rng.gen_range(-20..=20)), int(rng.gen_range(-20..=20)), int(z), r2).unwrap()
            })
            .collect();
        if let Ok(s) = ConvexSystem3::new(balls) {
            return s;
        }
    }
}

#[test]
fn every_random_system_gets_a_certificate() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let t = std::time::Instant::now();
    let mut routes = std::collections::BTreeMap::new();
    for k in 0..1000 {
        let n = 2 + k % 5;
        let s = random_system(&mut rng, n, false);
        let c = find_ordinary_line_3d(&s).unwrap_or_else(|e| panic!("system {k}: {e} {}", serde_json::to_string(&s).unwrap()));
        assert!(c.verify(&s));
        if n <= 3 {
            assert_eq!(c.route, "through-centers");
        }
        *routes.entry(c.route.clone()).or_insert(0) += 1;
    }
    println!("{routes:?} in {:.2?}", t.elapsed());
}

#[test]
fn planar_certificates_of_a_central_slice_lift() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let plane = Plane3::new(Point3::ints(0, 0, 1), QuadNum::from_int(3)).unwrap();
    for k in 0..100 {
        let s = loop {
            let s = random_system(&mut rng, 2 + k % 2, true);
            // integer radii keep the planar tangents exact
            if s.balls().iter().all(|b| QuadNum::sqrt_rat(&b.radius_sq).unwrap().is_rational()) {
                break s;
            }
        };
        let sec = slice(&s, &plane).unwrap();
        for c in ordinary_lines_disc_system(&sec.system).unwrap() {
            let l = sec.lift(&c.line).unwrap();
            let rel: Vec<BallRelation> = s.balls().iter().map(|b| sg_core::convex3d::classify_line3(&l, b)).collect();
            let tangent = rel.iter().filter(|r| **r == BallRelation::Tangent).count();
            assert_eq!(tangent, 2);
            assert!(!rel.contains(&BallRelation::Cross));
        }
    }
}

#[test]
fn seeded_search_is_reproducible() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let s = random_system(&mut rng, 6, false);
    let a = find_ordinary_line_3d_seeded(&s, 17).unwrap();
    let b = find_ordinary_line_3d_seeded(&s, 17).unwrap();
    assert_eq!(a, b);
}

#[test]
fn tilted_plane_fixture() {
    let balls = [(0, 0, 0, 1), (4, 0, 0, 1), (8, 0, 0, 1), (4, 5, -2, 1)];
    let s = ConvexSystem3::new(balls.iter().map(|&(x, y, z, r)| Ball::ints(x, y, z, r).unwrap()).collect()).unwrap();
    let c = pstar_route(&s, &Point3::ints(0, 0, 1)).unwrap().expect("certificate");
    assert!(c.verify(&s));
    assert!(c.balls == (0, 1) || c.balls == (1, 2));
    assert_eq!(c.relations.iter().filter(|r| **r == BallRelation::Tangent).count(), 2);
}
