use sg_core::figure::{clip_line, render_svg, segment_family_figure, Drawable, FigureSpec, Item, Style};
use sg_core::report::{ReportVerdict, VerificationReport};
use sg_core::segments::{fig5_family, SegmentFamily, SixType};

#[test]
fn empty_figure_is_a_complete_document() {
    let svg = render_svg(&FigureSpec::default());
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains(r#"version="1.1""#));
}

#[test]
fn rendering_is_deterministic() {
    let f = fig5_family(SixType::A);
    let a = render_svg(&segment_family_figure(&f));
    let b = render_svg(&segment_family_figure(&f.clone()));
    assert_eq!(a, b);
    // six members and four vertices
    assert_eq!(a.matches("<line").count(), 6);
    assert_eq!(a.matches("<circle").count(), 4);
}

#[test]
fn lines_are_clipped_to_the_viewport() {
    let vp = [0.0, 0.0, 4.0, 2.0];
    let (p, q) = clip_line(1.0, -1.0, 0.0, vp).unwrap();
    assert_eq!((p, q), ([2.0, 2.0], [0.0, 0.0]));
    assert!(clip_line(0.0, 1.0, -5.0, vp).is_none());
    let spec = FigureSpec {
        viewport: vp,
        pixels: 100.0,
        items: vec![Item { shape: Drawable::Line { a: 0.0, b: 1.0, c: -5.0 }, style: Style::default() }],
    };
    assert!(!render_svg(&spec).contains("<line"));
}

#[test]
fn figure_spec_round_trips() {
    let spec = segment_family_figure(&fig5_family(SixType::B));
    let back: FigureSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
    assert_eq!(back, spec);
}

#[test]
fn family_round_trips() {
    let f = fig5_family(SixType::C);
    let back: SegmentFamily = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
    assert_eq!(back, f);
}

#[test]
fn reports_are_single_lines_and_failures_carry_witnesses() {
    let r = VerificationReport::fail("s", "op", serde_json::json!({"line": [1, 2]})).stat("cells", 10).seed(3);
    let line = r.to_line();
    assert!(!line.contains('\n'));
    assert_eq!(r.verdict, ReportVerdict::Fail);
    assert_eq!(r.exit_code(), 1);
    assert_eq!(line, r.clone().to_line());
    assert_eq!(VerificationReport::pass("s", "op").exit_code(), 0);
}
