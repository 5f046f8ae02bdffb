use super::*;
use crate::kernel::{point_on_line2, Line2};
use crate::quad::{int, rat};

fn disc(x: i64, y: i64, r2: i64) -> Disc {
    Disc::new(int(x), int(y), int(r2)).unwrap()
}

fn tangent_to(l: &Line2, d: &Disc) -> bool {
    matches!(classify_line(l, d), LineBodyRelation::Tangent { .. })
}

#[test]
fn unit_disc_tangents() {
    let (d1, d2) = (disc(0, 0, 1), disc(4, 0, 1));
    let lines = circle_tangents(&d1, &d2).unwrap();
    assert_eq!(lines.len(), 4);
    for (_, l) in &lines {
        assert!(tangent_to(l, &d1) && tangent_to(l, &d2));
    }
    let ext: Vec<_> = lines.iter().filter(|(k, _)| *k == TangentKind::External).map(|(_, l)| l).collect();
    for l in ext {
        assert!(l.a.is_zero());
        assert!(l.c == QuadNum::from_int(1) || l.c == QuadNum::from_int(-1));
    }
    let mid = Point2::ints(2, 0);
    for (_, l) in lines.iter().filter(|(k, _)| *k == TangentKind::Internal) {
        assert!(point_on_line2(&mid, l));
        // slope ±1/√3 means B² = 3A²
        assert_eq!(l.b.square(), l.a.square().scale(&int(3)));
    }
}

#[test]
fn internal_tangents_split_centers_by_radius() {
    let (d1, d2) = (disc(0, 0, 1), disc(6, 0, 4));
    let lines = circle_tangents(&d1, &d2).unwrap();
    assert_eq!(lines.len(), 4);
    let h = Point2::ints(2, 0);
    for (k, l) in &lines {
        assert!(tangent_to(l, &d1) && tangent_to(l, &d2));
        if *k == TangentKind::Internal {
            assert!(point_on_line2(&h, l));
        }
    }
}

#[test]
fn congruent_externals_are_parallel_to_center_line() {
    let (d1, d2) = (disc(1, 2, 9), disc(7, 10, 9));
    for (k, l) in circle_tangents(&d1, &d2).unwrap() {
        if k == TangentKind::External {
            // direction (B, −A) is parallel to (6, 8)
            assert!((&l.b.scale(&int(8)) + &l.a.scale(&int(6))).is_zero());
        }
    }
}

#[test]
fn irrational_ratio_is_reported() {
    let (d1, d2) = (disc(0, 0, 1), disc(5, 0, 2));
    assert_eq!(circle_tangents(&d1, &d2), Err(Error::IrrationalRadiusRatio));
}

#[test]
fn classify_examples() {
    let d = disc(0, 0, 1);
    let horiz = |c: i64| Line2::new(0.into(), 1.into(), (-c).into()).unwrap();
    assert_eq!(classify_line(&horiz(2), &d), LineBodyRelation::Miss);
    assert_eq!(classify_line(&horiz(1), &d), LineBodyRelation::Tangent { point: Point2::ints(0, 1) });
    assert_eq!(classify_line(&horiz(0), &d), LineBodyRelation::Cross);
}

#[test]
fn two_discs_have_four_ordinary_lines() {
    let s = ConvexSystem2::from_discs(vec![disc(0, 0, 1), disc(4, 0, 1)]).unwrap();
    let certs = ordinary_lines_disc_system(&s).unwrap();
    assert_eq!(certs.len(), 4);
    let discs = [disc(0, 0, 1), disc(4, 0, 1)];
    assert!(certs.iter().all(|c| c.verify_discs(&discs)));
    let report = no_ordinary_line_check(&s, CheckOptions::default()).unwrap();
    assert!(!report.no_ordinary_line);
    assert_eq!(report.witnesses.len(), 4);
}

#[test]
fn three_discs_have_an_ordinary_line() {
    let s = ConvexSystem2::from_discs(vec![disc(0, 0, 1), disc(10, 0, 1), disc(5, 8, 1)]).unwrap();
    assert!(!ordinary_lines_disc_system(&s).unwrap().is_empty());
    // a middle disc blocks the bottom pair's internal tangents
    let s = ConvexSystem2::from_discs(vec![disc(0, 0, 1), disc(20, 0, 1), disc(10, 0, 4)]).unwrap();
    let certs = ordinary_lines_disc_system(&s).unwrap();
    assert!(!certs.is_empty());
    assert!(certs.iter().all(|c| !(c.bodies == (0, 1) && c.kind == TangentKind::Internal)));
}

#[test]
fn overlapping_discs_are_rejected() {
    assert_eq!(
        ConvexSystem2::from_discs(vec![disc(0, 0, 4), disc(3, 0, 4)]),
        Err(Error::BodiesIntersect(0, 1))
    );
    // touching counts as intersecting
    assert!(ConvexSystem2::from_discs(vec![disc(0, 0, 1), disc(2, 0, 1)]).is_err());
    assert!(ConvexSystem2::from_discs(vec![disc(0, 0, 1)]).is_err());
}

fn lens() -> ArcGon {
    // two arcs of radius 5 through (0, ±3)
    let corners = vec![RatPoint { x: int(0), y: int(-3) }, RatPoint { x: int(0), y: int(3) }];
    let arcs = vec![disc(-4, 0, 25), disc(4, 0, 25)];
    ArcGon::new(corners, arcs).unwrap()
}

#[test]
fn arcgon_validation() {
    let g = lens();
    assert_eq!(g.interior_point(), Point2::ints(0, 0));
    let bad = ArcGon::new(g.corners.clone(), vec![disc(4, 0, 25), disc(-4, 0, 25)]);
    assert!(bad.is_err());
}

#[test]
fn arcgon_classification() {
    let body = Body2::ArcGon(lens());
    let vert = |x: i64| Line2::new(1.into(), 0.into(), (-x).into()).unwrap();
    // the lens spans x ∈ [−1, 1]
    assert_eq!(classify_body(&vert(1), &body, 512).relation, Some(LineBodyRelation::Tangent { point: Point2::ints(1, 0) }));
    assert_eq!(classify_body(&vert(2), &body, 512).relation, Some(LineBodyRelation::Miss));
    assert_eq!(classify_body(&vert(0), &body, 512).relation, Some(LineBodyRelation::Cross));
    // supporting line through the top corner
    let top = Line2::new(0.into(), 1.into(), (-3).into()).unwrap();
    assert_eq!(classify_body(&top, &body, 512).relation, Some(LineBodyRelation::Tangent { point: Point2::ints(0, 3) }));
    // a slanted line through the lens needs intervals
    let slant = Line2::new(1.into(), 3.into(), rat(-1, 2).into()).unwrap();
    let v = classify_body(&slant, &body, 512);
    assert_eq!(v.relation, Some(LineBodyRelation::Cross));
    assert!(matches!(v.certainty, Certainty::Certified { .. } | Certainty::Exact));
    let far = Line2::new(1.into(), 3.into(), int(-10).into()).unwrap();
    assert_eq!(classify_body(&far, &body, 512).relation, Some(LineBodyRelation::Miss));
}

#[test]
fn lens_and_disc_system() {
    let s = ConvexSystem2::new(vec![Body2::ArcGon(lens()), Body2::Disc(disc(6, 0, 1))]).unwrap();
    let report = no_ordinary_line_check(&s, CheckOptions::default()).unwrap();
    assert_eq!(report.uncertain, 0);
    assert_eq!(report.witnesses.len(), 4);
    assert!(ConvexSystem2::new(vec![Body2::ArcGon(lens()), Body2::Disc(disc(2, 0, 4))]).is_err());
}

#[test]
fn fig3_needs_four_bodies() {
    assert!(fig3_counterexample(3).is_err());
}

#[test]
fn json_round_trip() {
    let s = ConvexSystem2::new(vec![Body2::ArcGon(lens()), Body2::Disc(disc(6, 0, 1))]).unwrap();
    let text = serde_json::to_string(&s).unwrap();
    assert!(text.starts_with("{\"discs\""));
    let back: ConvexSystem2 = serde_json::from_str(&text).unwrap();
    assert_eq!(back, s);
}
