use std::collections::BTreeSet;

use sg_core::hset::{verify_closure, HTruncation};
use sg_core::kernel::Point2;
use sg_core::point_sg::{finders, ordinary_lines, ordinary_lines_with, random_point_set, PointSet};

fn grid_points(n: usize, grid: i64, seed: u64) -> (PointSet, Vec<(i64, i64)>) {
    let set = random_point_set(n, grid, seed).unwrap();
    let raw = set
        .points()
        .iter()
        .map(|p| {
            let (x, y) = p.to_f64();
            (x as i64, y as i64)
        })
        .collect();
    (set, raw)
}

/// Ordinary lines as sorted index pairs, by integer cross products.
fn brute_ordinary(pts: &[(i64, i64)]) -> BTreeSet<(usize, usize)> {
    let on = |i: usize, j: usize, k: usize| {
        let (a, b, c) = (pts[i], pts[j], pts[k]);
        (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0) == 0
    };
    let mut out = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if (0..pts.len()).all(|k| k == i || k == j || !on(i, j, k)) {
                out.insert((i, j));
            }
        }
    }
    out
}

#[test]
fn finders_match_integer_oracle() {
    for seed in 0..40 {
        let (set, raw) = grid_points(12, 6, seed);
        let want = brute_ordinary(&raw);
        for f in finders() {
            let got: BTreeSet<(usize, usize)> = ordinary_lines_with(f.as_ref(), &set)
                .unwrap()
                .into_iter()
                .map(|l| (l.members[0].min(l.members[1]), l.members[0].max(l.members[1])))
                .collect();
            assert_eq!(got, want, "finder {} seed {seed}", f.name());
        }
    }
}

#[test]
fn noncollinear_sets_have_an_ordinary_line() {
    for seed in 0..200 {
        let (set, raw) = grid_points(3 + (seed as usize % 20), 5, seed);
        let (a, b) = (raw[0], raw[1]);
        let collinear = raw.iter().all(|c| (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0) == 0);
        assert_eq!(ordinary_lines(&set).unwrap().is_empty(), collinear, "seed {seed}");
    }
}

#[test]
fn collinear_set_has_no_ordinary_line() {
    let set = PointSet::new((0..6).map(|k| Point2::ints(k, 2 * k)).collect()).unwrap();
    assert!(ordinary_lines(&set).unwrap().is_empty());
}

#[test]
fn truncations_are_closed() {
    for depth in 1..=6 {
        let t = HTruncation::new(depth).unwrap();
        assert_eq!(t.members.len() as u64, 6 * depth);
        let r = verify_closure(&t);
        assert!(r.passed, "depth {depth}: {:?}", r.failure);
        let n = 6 * depth;
        assert_eq!(r.pairs_checked, n * (n - 1) / 2);
    }
}
