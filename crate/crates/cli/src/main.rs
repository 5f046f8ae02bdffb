//! `sg`: command-line access to the ordinary-line tools.
//!
//! Every command prints one JSON report per line on stdout. Exit status is
//! 0 on pass, 1 on fail and 2 on usage or data errors, which are reported
//! as JSON on stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use thiserror::Error;

use sg_core::convex2d::{self, CheckOptions, ConvexSystem2};
use sg_core::convex3d::{self, ConvexSystem3};
use sg_core::figure::{self, Drawable, FigureSpec, Item, Style};
use sg_core::hset::{verify_closure, HTruncation};
use sg_core::point_sg::{self, PointSet};
use sg_core::report::VerificationReport;
use sg_core::segments::{self, SegmentFamily, SixType};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] sg_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(name = "sg", version, about = "Ordinary lines of points, convex bodies and segments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite point sets.
    Points {
        #[command(subcommand)]
        op: PointsOp,
    },
    /// The infinite set H without ordinary lines.
    Hset {
        #[command(subcommand)]
        op: HsetOp,
    },
    /// Planar systems of disjoint convex bodies.
    Convex2 {
        #[command(subcommand)]
        op: Convex2Op,
    },
    /// Systems of disjoint balls in space.
    Convex3 {
        #[command(subcommand)]
        op: Convex3Op,
    },
    /// Families of segments.
    Segs {
        #[command(subcommand)]
        op: SegsOp,
    },
}

#[derive(Subcommand)]
enum PointsOp {
    /// Random point set on an integer grid.
    Generate {
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        grid: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ordinary lines of a point set.
    Ordinary {
        file: PathBuf,
        #[arg(long, default_value = "grouped")]
        finder: String,
    },
    Svg {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum HsetOp {
    /// Closure of every pair of the depth truncation.
    Verify {
        #[arg(long, default_value_t = 10)]
        depth: u64,
    },
    Svg {
        #[arg(long, default_value_t = 3)]
        depth: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum Convex2Op {
    /// Every ordinary line of a system, certified.
    Ordinary { file: PathBuf },
    /// Certifies that no ordinary line exists.
    CertifyNone { file: PathBuf },
    /// The released frame system with `n` bodies.
    Fig3 {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    Svg {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum Convex3Op {
    /// An exactly certified ordinary line.
    Ordinary {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum SegsOp {
    /// Checks that members share no interior point or subsegment.
    Verify { file: PathBuf },
    /// Exhaustive arrangement proof that no ordinary line exists.
    CertifyNone { file: PathBuf },
    /// Type of a six-segment family without ordinary lines.
    Classify { file: PathBuf },
    /// Released family: `5a`–`5d` or `6a`–`6h`.
    Gen {
        #[arg(long)]
        fig: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Svg {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn to_value(x: impl serde::Serialize) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn subject(path: &Path) -> String {
    path.display().to_string()
}

/// Interval precision cap from `SG_PRECISION_BITS`, default 512.
fn precision_cap() -> Result<u32> {
    match std::env::var("SG_PRECISION_BITS") {
        Ok(s) => match s.parse::<u32>() {
            Ok(b) if b >= 2 => Ok(b),
            _ => Err(CliError::Usage(format!("SG_PRECISION_BITS must be an integer ≥ 2, got {s:?}"))),
        },
        Err(_) => Ok(CheckOptions::default().precision_cap),
    }
}

fn points(op: PointsOp) -> Result<Vec<VerificationReport>> {
    match op {
        PointsOp::Generate { n, grid, seed, out } => {
            let set = point_sg::random_point_set(n, grid, seed)?;
            let text = serde_json::to_string(&set).expect("serializable");
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    Ok(vec![VerificationReport::pass(&subject(&path), "points.generate").stat("points", n).seed(seed)])
                }
                None => {
                    println!("{text}");
                    Ok(Vec::new())
                }
            }
        }
        PointsOp::Ordinary { file, finder } => {
            let set: PointSet = read_json(&file)?;
            let finder = point_sg::finder_by_name(&finder)?;
            let lines = point_sg::ordinary_lines_with(finder.as_ref(), &set)?;
            let collinear = point_sg::is_collinear_set(set.points())?;
            let name = subject(&file);
            let report = if lines.is_empty() && !collinear {
                VerificationReport::fail(&name, "points.ordinary", json!({ "points": set.len(), "collinear": false }))
            } else if lines.is_empty() {
                VerificationReport::not_applicable(&name, "points.ordinary")
            } else {
                VerificationReport::pass(&name, "points.ordinary").with_witness(to_value(&lines))
            };
            Ok(vec![report.stat("points", set.len()).stat("ordinary_lines", lines.len()).stat("finder", finder.name())])
        }
        PointsOp::Svg { file, out } => {
            let set: PointSet = read_json(&file)?;
            let lines = point_sg::ordinary_lines(&set)?;
            let pts: Vec<[f64; 2]> = set.points().iter().map(|p| p.to_f64().into()).collect();
            let mut items: Vec<Item> = lines.iter().map(|l| figure::line_item(&l.line, &Style::stroke("steelblue"))).collect();
            items.extend(figure::point_items(set.points(), &Style::filled("black")));
            let spec = FigureSpec { viewport: figure::fit_viewport(&pts), pixels: 400.0, items };
            svg_report(&spec, &out, "points.svg")
        }
    }
}

fn svg_report(spec: &FigureSpec, out: &Path, op: &str) -> Result<Vec<VerificationReport>> {
    figure::export_svg(spec, out).map_err(|source| CliError::Io { path: out.into(), source })?;
    Ok(vec![VerificationReport::pass(&subject(out), op).stat("items", spec.items.len())])
}

fn hset(op: HsetOp) -> Result<Vec<VerificationReport>> {
    match op {
        HsetOp::Verify { depth } => {
            let r = verify_closure(&HTruncation::new(depth)?);
            let name = format!("H(depth={depth})");
            let report = match &r.failure {
                None => VerificationReport::pass(&name, "hset.verify"),
                Some(f) => VerificationReport::fail(&name, "hset.verify", to_value(f)),
            };
            Ok(vec![report.stat("depth", depth).stat("pairs_checked", r.pairs_checked)])
        }
        HsetOp::Svg { depth, out } => {
            let t = HTruncation::new(depth)?;
            let pts = t.points();
            let mut items = figure::point_items(&pts, &Style::filled("black"));
            items.push(Item { shape: Drawable::Point { at: [0.0, 0.0], radius: 4.0 }, style: Style::stroke("crimson") });
            let mut ext: Vec<[f64; 2]> = pts.iter().map(|p| p.to_f64().into()).collect();
            ext.push([0.0, 0.0]);
            let spec = FigureSpec { viewport: figure::fit_viewport(&ext), pixels: 400.0, items };
            svg_report(&spec, &out, "hset.svg")
        }
    }
}

fn convex2_figure(s: &ConvexSystem2, lines: &[sg_core::kernel::Line2]) -> FigureSpec {
    let ext: Vec<[f64; 2]> = s.bodies().iter().flat_map(figure::body_extent).collect();
    let mut items: Vec<Item> = s.bodies().iter().map(|b| figure::body_item(b, &Style::stroke("black"))).collect();
    items.extend(lines.iter().map(|l| figure::line_item(l, &Style::stroke("steelblue"))));
    FigureSpec { viewport: figure::fit_viewport(&ext), pixels: 400.0, items }
}

fn certify_none_report(name: &str, s: &ConvexSystem2) -> Result<VerificationReport> {
    let cap = precision_cap()?;
    let r = convex2d::no_ordinary_line_check(s, CheckOptions { precision_cap: cap })?;
    let report = if r.no_ordinary_line {
        VerificationReport::pass(name, "convex2.certify_none")
    } else if let Some(w) = r.witnesses.first() {
        VerificationReport::fail(name, "convex2.certify_none", to_value(w))
    } else {
        VerificationReport::fail(name, "convex2.certify_none", to_value(&r.uncertain_lines))
    };
    Ok(report
        .stat("bodies", r.bodies)
        .stat("candidates", r.candidates)
        .stat("exact", r.exact)
        .stat("certified", r.certified)
        .stat("uncertain", r.uncertain)
        .stat("max_eps", r.max_eps.as_ref().map(sg_core::quad::rat_to_string))
        .stat("precision_cap", cap))
}

fn convex2(op: Convex2Op) -> Result<Vec<VerificationReport>> {
    match op {
        Convex2Op::Ordinary { file } => {
            let s: ConvexSystem2 = read_json(&file)?;
            let certs = convex2d::ordinary_lines(&s, CheckOptions { precision_cap: precision_cap()? })?;
            let name = subject(&file);
            let report = if certs.is_empty() {
                VerificationReport::fail(&name, "convex2.ordinary", json!({ "bodies": s.len(), "ordinary_lines": 0 }))
            } else {
                VerificationReport::pass(&name, "convex2.ordinary").with_witness(to_value(&certs))
            };
            Ok(vec![report.stat("bodies", s.len()).stat("certificates", certs.len())])
        }
        Convex2Op::CertifyNone { file } => {
            let s: ConvexSystem2 = read_json(&file)?;
            Ok(vec![certify_none_report(&subject(&file), &s)?])
        }
        Convex2Op::Fig3 { n, out, svg } => {
            let s = convex2d::fig3_counterexample(n)?;
            if let Some(path) = &out {
                write_file(path, &serde_json::to_string(&s).expect("serializable"))?;
            }
            if let Some(path) = &svg {
                let spec = convex2_figure(&s, &[]);
                figure::export_svg(&spec, path).map_err(|source| CliError::Io { path: path.into(), source })?;
            }
            Ok(vec![certify_none_report(&format!("fig3(n={n})"), &s)?])
        }
        Convex2Op::Svg { file, out } => {
            let s: ConvexSystem2 = read_json(&file)?;
            let certs = convex2d::ordinary_lines(&s, CheckOptions { precision_cap: precision_cap()? })?;
            let lines: Vec<_> = certs.into_iter().map(|c| c.line).collect();
            svg_report(&convex2_figure(&s, &lines), &out, "convex2.svg")
        }
    }
}

fn convex3(op: Convex3Op) -> Result<Vec<VerificationReport>> {
    match op {
        Convex3Op::Ordinary { file, seed } => {
            let s: ConvexSystem3 = read_json(&file)?;
            let name = subject(&file);
            let report = match convex3d::find_ordinary_line_3d_seeded(&s, seed) {
                Ok(o) => {
                    let verified = o.certificate.verify(&s);
                    let r = if verified {
                        VerificationReport::pass(&name, "convex3.ordinary").with_witness(to_value(&o.certificate))
                    } else {
                        VerificationReport::fail(&name, "convex3.ordinary", to_value(&o.certificate))
                    };
                    r.stat("attempts", o.attempts.len()).stat("route", &o.certificate.route)
                }
                Err(sg_core::Error::SearchBudgetExhausted(n)) => {
                    VerificationReport::fail(&name, "convex3.ordinary", json!({ "search_budget_exhausted": n }))
                }
                Err(e) => return Err(e.into()),
            };
            Ok(vec![report.stat("balls", s.len()).seed(seed)])
        }
    }
}

fn released_family(fig: &str) -> Result<SegmentFamily> {
    let bad = || CliError::Usage(format!("unknown figure {fig:?}; expected 5a–5d or 6a–6h"));
    let mut chars = fig.chars();
    let (Some(number), Some(letter), None) = (chars.next(), chars.next(), chars.next()) else { return Err(bad()) };
    match number {
        '5' => SixType::from_letter(letter).map(segments::fig5_family).ok_or_else(bad),
        '6' => segments::FIG6_PANELS
            .iter()
            .position(|p| p.starts_with(letter))
            .and_then(|k| segments::fig6_family(k + 1))
            .ok_or_else(bad),
        _ => Err(bad()),
    }
}

fn segs(op: SegsOp) -> Result<Vec<VerificationReport>> {
    match op {
        SegsOp::Verify { file } => {
            let f: SegmentFamily = read_json(&file)?;
            let v = segments::validate_family(&f);
            let name = subject(&file);
            let report = if v.valid {
                VerificationReport::pass(&name, "segs.verify")
            } else {
                VerificationReport::fail(&name, "segs.verify", to_value(&v.conflicts))
            };
            Ok(vec![report.stat("segments", f.segments.len()).stat("extra_points", f.extra_points.len())])
        }
        SegsOp::CertifyNone { file } => {
            let f: SegmentFamily = read_json(&file)?;
            Ok(vec![certify_segments(&subject(&file), &f)?])
        }
        SegsOp::Classify { file } => {
            let f: SegmentFamily = read_json(&file)?;
            let c = segments::classify_six(&f)?;
            let g = segments::build_geometric_graph(&f);
            Ok(vec![VerificationReport::pass(&subject(&file), "segs.classify")
                .with_witness(to_value(&c))
                .stat("tag", c.tag.letter().to_string())
                .stat("vertices", g.vertices.len())
                .stat("edges", g.edges.len())])
        }
        SegsOp::Gen { fig, out } => {
            let f = released_family(&fig)?;
            let text = serde_json::to_string(&f).expect("serializable");
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    Ok(vec![certify_segments(&format!("fig{fig}"), &f)?])
                }
                None => {
                    println!("{text}");
                    Ok(Vec::new())
                }
            }
        }
        SegsOp::Svg { file, out } => {
            let f: SegmentFamily = read_json(&file)?;
            svg_report(&figure::segment_family_figure(&f), &out, "segs.svg")
        }
    }
}

fn certify_segments(name: &str, f: &SegmentFamily) -> Result<VerificationReport> {
    let v = segments::validate_family(f);
    if !v.valid {
        return Err(CliError::Usage(format!("{name}: invalid family, members {:?} overlap", v.conflicts[0].segments)));
    }
    let c = segments::no_ordinary_line_certificate(f);
    let report = match &c.witness {
        None => VerificationReport::pass(name, "segs.certify_none"),
        Some(w) => VerificationReport::fail(name, "segs.certify_none", to_value(w)),
    };
    Ok(report
        .stat("points", c.points)
        .stat("vertices", c.vertices)
        .stat("edges", c.edges)
        .stat("faces", c.faces)
        .stat("verticals", c.verticals)
        .stat("cells", c.cells.len()))
}

fn run(cli: Cli) -> Result<Vec<VerificationReport>> {
    match cli.command {
        Command::Points { op } => points(op),
        Command::Hset { op } => hset(op),
        Command::Convex2 { op } => convex2(op),
        Command::Convex3 { op } => convex3(op),
        Command::Segs { op } => segs(op),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(reports) => {
            for r in &reports {
                println!("{}", r.to_line());
            }
            let code = reports.iter().map(VerificationReport::exit_code).max().unwrap_or(0);
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
