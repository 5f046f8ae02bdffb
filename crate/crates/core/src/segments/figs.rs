//! Released six- and seven-segment families without ordinary lines. The
//! coordinates were chosen by construction and certified by the
//! arrangement search; the segments example regenerates the seven-segment
//! ones.

use crate::quad::parse_rat;

use super::{Pt, Segment, SegmentFamily, SixType};

type Spec = &'static [[(&'static str, &'static str); 2]];

fn family(spec: Spec) -> SegmentFamily {
    let pt = |(x, y): (&str, &str)| Pt::new(parse_rat(x).expect("constant"), parse_rat(y).expect("constant"));
    SegmentFamily::new(spec.iter().map(|[p, q]| Segment::new(pt(*p), pt(*q)).expect("distinct endpoints")).collect())
}

const SIDES: [[(&str, &str); 2]; 3] = [[("4", "0"), ("2", "3")], [("2", "3"), ("0", "0")], [("0", "0"), ("4", "0")]];

macro_rules! with_sides {
    ($($seg:expr),* $(,)?) => {
        &[SIDES[0], SIDES[1], SIDES[2], $($seg),*]
    };
}

/// Triangle `(0,0), (4,0), (2,3)` with spokes to a common point.
const FIG5_A: Spec = with_sides![[("0", "0"), ("2", "1")], [("4", "0"), ("2", "1")], [("2", "3"), ("2", "1")]];

/// Two spokes meet at `e = (2, 1)`; the third passes through `e` to `ab`.
const FIG5_B: Spec = with_sides![[("0", "0"), ("2", "1")], [("4", "0"), ("2", "1")], [("2", "3"), ("2", "0")]];

/// Pinwheel: each spoke ends inside the next one.
const FIG5_C: Spec = with_sides![
    [("0", "0"), ("16/7", "12/7")],
    [("4", "0"), ("8/7", "6/7")],
    [("2", "3"), ("18/7", "3/7")],
];

/// `A` runs to the midpoint of `bc`; `B` and `C` end on `A`.
const FIG5_D: Spec = with_sides![[("0", "0"), ("3", "3/2")], [("4", "0"), ("1", "1/2")], [("2", "3"), ("2", "1")]];

pub fn fig5_family(tag: SixType) -> SegmentFamily {
    family(match tag {
        SixType::A => FIG5_A,
        SixType::B => FIG5_B,
        SixType::C => FIG5_C,
        SixType::D => FIG5_D,
    })
}

/// Panel letters of the seven-segment families, by index. Families 1–4 add
/// one segment to the six-segment families a, b, c, d. Families 5 and 6
/// contain no six-segment family without an ordinary line. Families 7 and 8
/// add a segment to a and c again. All eight graphs are pairwise
/// non-isomorphic.
pub const FIG6_PANELS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

const FIG6_1: Spec = with_sides![
    [("0", "0"), ("2", "1")],
    [("4", "0"), ("2", "1")],
    [("2", "3"), ("2", "1")],
    [("0", "0"), ("2", "5/3")],
];

const FIG6_2: Spec = with_sides![
    [("0", "0"), ("2", "1")],
    [("4", "0"), ("2", "1")],
    [("2", "3"), ("2", "0")],
    [("0", "0"), ("2", "3/2")],
];

const FIG6_3: Spec = with_sides![
    [("0", "0"), ("16/7", "12/7")],
    [("4", "0"), ("8/7", "6/7")],
    [("2", "3"), ("18/7", "3/7")],
    [("0", "0"), ("44/21", "4/7")],
];

const FIG6_4: Spec = with_sides![
    [("0", "0"), ("3", "3/2")],
    [("4", "0"), ("1", "1/2")],
    [("2", "3"), ("2", "1")],
    [("0", "0"), ("2", "1/3")],
];

const FIG6_5: Spec = &[
    [("0", "0"), ("12", "0")],
    [("12", "0"), ("6", "9")],
    [("6", "9"), ("0", "0")],
    [("8", "0"), ("4", "6")],
    [("6", "9"), ("20/3", "2")],
    [("0", "0"), ("16/3", "4")],
    [("58/9", "13/3"), ("12", "0")],
];

const FIG6_6: Spec = &[
    [("0", "0"), ("12", "0")],
    [("12", "0"), ("12", "9")],
    [("12", "9"), ("0", "9")],
    [("0", "9"), ("0", "0")],
    [("0", "0"), ("12", "9")],
    [("12", "0"), ("8", "6")],
    [("0", "9"), ("4", "3")],
];

const FIG6_7: Spec = with_sides![
    [("0", "0"), ("2", "1")],
    [("4", "0"), ("2", "1")],
    [("2", "3"), ("2", "1")],
    [("2/3", "1"), ("10/3", "1")],
];

const FIG6_8: Spec = with_sides![
    [("0", "0"), ("16/7", "12/7")],
    [("4", "0"), ("8/7", "6/7")],
    [("2", "3"), ("18/7", "3/7")],
    [("1/2", "3/4"), ("32/21", "8/7")],
];

const FIG6: [Spec; 8] = [FIG6_1, FIG6_2, FIG6_3, FIG6_4, FIG6_5, FIG6_6, FIG6_7, FIG6_8];

/// Seven-segment family `index` in `1..=8`.
pub fn fig6_family(index: usize) -> Option<SegmentFamily> {
    FIG6.get(index.checked_sub(1)?).map(|s| family(s))
}
