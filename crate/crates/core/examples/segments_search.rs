//! Searches for seven-segment families whose graph is 3-connected and that
//! have no ordinary line. Extensions add one segment to a six-segment
//! family; fresh families are grown from a hull.
//!
//! cargo run --release -p sg-core --example segments_search -- [seed] [tries]
//! cargo run --release -p sg-core --example segments_search -- extensions

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sg_core::quad::{rat, rat_to_string};
use sg_core::segments::{
    build_geometric_graph, fig5_family, fig6_family, no_ordinary_line_certificate, ordinary_line_search, validate_family, Pt,
    Segment, SegmentFamily, SixType,
};

/// Vertices plus points at quarters and thirds of each segment.
fn anchors(f: &SegmentFamily) -> Vec<Pt> {
    let mut out = f.endpoints();
    for s in &f.segments {
        for t in [rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3), rat(3, 4)] {
            out.push(s.p.lerp(&s.q, &t));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn with(f: &SegmentFamily, s: Segment) -> Option<SegmentFamily> {
    let mut g = f.clone();
    g.segments.push(s);
    validate_family(&g).valid.then_some(g)
}

fn good(f: &SegmentFamily) -> bool {
    build_geometric_graph(f).is_3_connected() && ordinary_line_search(f).is_none()
}

fn print(name: &str, f: &SegmentFamily) {
    let g = build_geometric_graph(f);
    println!("{name}: {} vertices {} edges", g.vertices.len(), g.edges.len());
    for s in &f.segments {
        let p = |x: &Pt| format!("(\"{}\", \"{}\")", rat_to_string(&x.x), rat_to_string(&x.y));
        println!("    [{}, {}],", p(&s.p), p(&s.q));
    }
}

/// Every certified one-segment extension of `tag` whose graph is new.
fn all_extensions(tag: SixType, forms: &mut Vec<Vec<(usize, usize)>>) {
    let f = fig5_family(tag);
    let a = anchors(&f);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let Ok(s) = Segment::new(a[i].clone(), a[j].clone()) else { continue };
            let Some(g) = with(&f, s) else { continue };
            let form = build_geometric_graph(&g).canonical_form();
            if good(&g) && !forms.contains(&form) {
                print(&format!("new graph from {tag:?}"), &g);
                forms.push(form);
            }
        }
    }
}

fn extend(tag: SixType) -> Option<SegmentFamily> {
    let f = fig5_family(tag);
    let a = anchors(&f);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let Ok(s) = Segment::new(a[i].clone(), a[j].clone()) else { continue };
            if let Some(g) = with(&f, s) {
                if good(&g) {
                    print(&format!("extension of {tag:?}"), &g);
                    return Some(g);
                }
            }
        }
    }
    println!("no extension of {tag:?}");
    None
}

/// Removing any one segment leaves a family with an ordinary line or a
/// graph that is not 3-connected.
fn fresh(f: &SegmentFamily) -> bool {
    (0..f.segments.len()).all(|k| {
        let mut g = f.clone();
        g.segments.remove(k);
        !good(&g)
    })
}

fn grow(rng: &mut ChaCha8Rng) -> Option<SegmentFamily> {
    let hulls: [&[(i64, i64)]; 4] = [
        &[(0, 0), (12, 0), (6, 9)],
        &[(0, 0), (12, 0), (3, 9)],
        &[(0, 0), (12, 0), (12, 9), (0, 9)],
        &[(0, 0), (12, 0), (10, 8), (2, 9)],
    ];
    let hull = hulls.choose(rng)?;
    let mut f = SegmentFamily::new(
        (0..hull.len()).map(|k| Segment::ints(hull[k], hull[(k + 1) % hull.len()])).collect(),
    );
    while f.segments.len() < 7 {
        let a = anchors(&f);
        let s = Segment::new(a[rng.gen_range(0..a.len())].clone(), a[rng.gen_range(0..a.len())].clone()).ok()?;
        f = with(&f, s)?;
    }
    Some(f)
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    if args.get(1).map(String::as_str) == Some("extensions") {
        // graphs of the first six released families are taken
        let mut forms: Vec<_> =
            (1..=6).filter_map(fig6_family).map(|f| build_geometric_graph(&f).canonical_form()).collect();
        for tag in SixType::ALL {
            all_extensions(tag, &mut forms);
        }
        return;
    }
    let seed: u64 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(1);
    let tries: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(200_000);
    let mut forms: Vec<_> =
        SixType::ALL.into_iter().filter_map(extend).map(|g| build_geometric_graph(&g).canonical_form()).collect();
    let known = forms.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..tries {
        let Some(f) = grow(&mut rng) else { continue };
        if !good(&f) || !fresh(&f) {
            continue;
        }
        let form = build_geometric_graph(&f).canonical_form();
        if forms.contains(&form) {
            continue;
        }
        assert!(no_ordinary_line_certificate(&f).no_ordinary_line);
        print("fresh", &f);
        forms.push(form);
        if forms.len() == known + 4 {
            break;
        }
    }
}
