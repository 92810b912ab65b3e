//! `sapgrid`: command-line front end over the exact-arithmetic curve
//! library. Every subcommand prints deterministic JSON to standard
//! output (DOT additionally goes to a file for `graph --emit-dot`).
//! Exit status: 0 success, 1 domain error (the error name from the
//! responsible module goes to standard error), 2 usage error.

mod args;
mod json;

use clap::{Parser, Subcommand, ValueEnum};
use json::{grid_value, obj, print, q, s};
use sapgrid_core::bisolve::SolutionBox;
use sapgrid_core::bounds::{
    applicability_threshold, general_constants, solve_max_k_elliptic, ConstantsMode, SolveVariant,
};
use sapgrid_core::budgets::special_point_budgets;
use sapgrid_core::bipoly::parse_bipoly;
use sapgrid_core::convex::{convex_decomposition, ArcShape, RatRect};
use sapgrid_core::graph::{build_translate_graph, count_crossings_geometric, graph_stats};
use sapgrid_core::grid::{
    fit_curve_through_points, grid_points_on_curve, verify_sap, Grid, Sap,
};
use sapgrid_core::scaling::scaling_experiment;
use sapgrid_core::search::search_saps;
use sapgrid_core::weierstrass::{
    curve_translate_intersections, BranchPoly, WeierstrassCurve,
};
use serde_json::Value;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "sapgrid",
    version,
    about = "Exact arithmetic for simultaneous arithmetic progressions on plane curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Intersect a plane curve with its translate by (u, v)
    Intersect {
        /// Polynomial in x and y, e.g. "y^2 - x^3 + x"
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// Translation vector u,v (rationals)
        #[arg(long, allow_hyphen_values = true)]
        translate: String,
    },
    /// Translate intersection of a Weierstrass curve, with branch report
    #[command(name = "weierstrass-intersect")]
    WeierstrassIntersect {
        /// a,b,c,d,e for y^2 + a*x*y + b*y = x^3 + c*x^2 + d*x + e
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Translation vector u,v (rationals)
        #[arg(long, allow_hyphen_values = true)]
        translate: String,
    },
    /// Count grid points lying on a curve
    #[command(name = "grid-count")]
    GridCount {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// a1,d1,a2,d2,k: progression starts, steps, and length
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
    },
    /// Simultaneous-arithmetic-progression verification and search
    Sap {
        #[command(subcommand)]
        op: SapOp,
    },
    /// Fit curves of a given degree through a CSV point file
    Fit {
        #[arg(long)]
        degree: u32,
        /// CSV file: one "x,y" rational pair per line, '#' comments
        #[arg(long)]
        points: PathBuf,
    },
    /// Decompose a curve inside a box into convex arcs
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// x0,x1,y0,y1 (rationals)
        #[arg(long = "box", allow_hyphen_values = true)]
        window: String,
    },
    /// Special-point budgets for square-free curves of degree d
    Budgets {
        #[arg(long)]
        degree: u32,
    },
    /// Crossing-inequality bounds and constants
    Bounds {
        #[command(subcommand)]
        class: BoundsClass,
    },
    /// Build the translate multigraph of a progression on a Weierstrass curve
    Graph {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        /// Permutation images, e.g. 0,4,5,3,2,1; recovered by matching when omitted
        #[arg(long)]
        sigma: Option<String>,
        /// Write the graph in DOT format to this file
        #[arg(long = "emit-dot")]
        emit_dot: Option<PathBuf>,
        /// Also count crossings geometrically (translate pair intersections)
        #[arg(long)]
        crossings: bool,
    },
    /// Grid-count scaling experiment over increasing k
    Scaling {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// Comma-separated grid lengths, e.g. 16,64,256
        #[arg(long)]
        ks: String,
        /// Reference exponent p/q for the count ratio column
        #[arg(long, allow_hyphen_values = true)]
        exponent: String,
        /// a1,d1,a2,d2 template (default 0,1,0,1)
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
}

#[derive(Subcommand)]
enum SapOp {
    /// Find a permutation putting one grid point per column and row on the curve
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
    },
    /// Search x-progressions of bounded height for progressions on the curve
    Search {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Max numerator/denominator magnitude for x-start and x-step
        #[arg(long = "x-height")]
        x_height: u32,
        /// Length range L1..L2 (inclusive) or a single length
        #[arg(long)]
        lengths: String,
    },
}

#[derive(Subcommand)]
enum BoundsClass {
    /// Max progression length on an elliptic curve from the crossing chain
    Elliptic {
        #[arg(long, value_enum, default_value_t = Variant::T1)]
        variant: Variant,
    },
    /// Degree-dependent constants for general curves
    General {
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    /// Edge count k^3 (one translate fixes the curve)
    T1,
    /// Edge count k^2 (k + 1)
    Tn1,
}

impl Variant {
    fn solve(self) -> SolveVariant {
        match self {
            Variant::T1 => SolveVariant::T1,
            Variant::Tn1 => SolveVariant::TNot1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Variant::T1 => "t1",
            Variant::Tn1 => "tn1",
        }
    }

    fn stated_threshold(self) -> &'static str {
        match self {
            Variant::T1 => "k>16",
            Variant::Tn1 => "k>15",
        }
    }
}

enum CliError {
    Domain(sapgrid_core::Error),
    Usage(String),
    Io(String),
}

impl From<sapgrid_core::Error> for CliError {
    fn from(e: sapgrid_core::Error) -> Self {
        CliError::Domain(e)
    }
}

fn usage(e: String) -> CliError {
    CliError::Usage(e)
}

fn main() -> ExitCode {
    init_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(value) => {
            print(&value);
            ExitCode::SUCCESS
        }
        Err(CliError::Domain(e)) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("IoError: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Thread count from SAPGRID_THREADS; default is machine parallelism.
/// Results never depend on it.
#[cfg(feature = "parallel")]
fn init_threads() {
    if let Ok(v) = std::env::var("SAPGRID_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("warning: ignoring invalid SAPGRID_THREADS value `{v}`"),
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn init_threads() {}

fn run(command: Command) -> Result<Value, CliError> {
    match command {
        Command::Intersect { curve, translate } => {
            let f = parse_bipoly(&curve)?;
            let t = args::translate(&translate).map_err(usage)?;
            let report = curve_translate_intersections(&f, &t)?;
            Ok(obj(vec![
                ("complex_count_bound", s(report.complex_count_bound)),
                ("curve", s(&f)),
                ("real_count", s(report.real_count)),
                (
                    "real_points",
                    Value::Array(report.real_points.iter().map(box_value).collect()),
                ),
                ("shares_component", Value::Bool(report.shares_component)),
                (
                    "translate",
                    obj(vec![("u", q(&t.dx)), ("v", q(&t.dy))]),
                ),
            ]))
        }
        Command::WeierstrassIntersect { coeffs, translate } => {
            let curve = args::coeffs(&coeffs).map_err(usage)?;
            let t = args::translate(&translate).map_err(usage)?;
            let report = curve.translate_intersections(&t)?;
            let (branch, poly) = match &report.branch {
                BranchPoly::Quartic(p) => ("quartic", p),
                BranchPoly::Quadratic(p) => ("quadratic", p),
            };
            Ok(obj(vec![
                ("branch", s(branch)),
                (
                    "branch_degree",
                    s(poly.degree().map(|d| d.to_string()).unwrap_or_default()),
                ),
                ("branch_poly", s(poly)),
                ("coeffs", coeffs_value(&curve)),
                ("real_count", s(report.real_count)),
                (
                    "translate",
                    obj(vec![("u", q(&t.dx)), ("v", q(&t.dy))]),
                ),
            ]))
        }
        Command::GridCount { curve, grid } => {
            let f = parse_bipoly(&curve)?;
            let grid = args::grid(&grid).map_err(usage)?;
            let incidences = grid_points_on_curve(&f, &grid)?;
            let points: Vec<Value> = incidences
                .iter()
                .map(|inc| {
                    obj(vec![
                        ("col", s(inc.col)),
                        ("row", s(inc.row)),
                        ("x", q(&grid.x(inc.col))),
                        ("y", q(&grid.y(inc.row))),
                    ])
                })
                .collect();
            Ok(obj(vec![
                ("count", s(incidences.len())),
                ("curve", s(&f)),
                ("grid", grid_value(&grid)),
                ("points", Value::Array(points)),
            ]))
        }
        Command::Sap { op } => run_sap(op),
        Command::Fit { degree, points } => {
            let text = std::fs::read_to_string(&points)
                .map_err(|e| CliError::Io(format!("{}: {e}", points.display())))?;
            let pts = args::points_csv(&text).map_err(usage)?;
            let basis = fit_curve_through_points(&pts, degree)?;
            Ok(obj(vec![
                (
                    "basis",
                    Value::Array(basis.iter().map(|p| s(p)).collect()),
                ),
                ("basis_size", s(basis.len())),
                ("degree", s(degree)),
                ("point_count", s(pts.len())),
            ]))
        }
        Command::Decompose { curve, window } => {
            let f = parse_bipoly(&curve)?;
            let (x0, x1, y0, y1) = args::rect(&window).map_err(usage)?;
            let rect = RatRect::new(x0, x1, y0, y1)?;
            let dec = convex_decomposition(&f, &rect)?;
            let arcs: Vec<Value> = dec
                .arcs
                .iter()
                .map(|arc| {
                    let mut fields = vec![
                        ("convexity_sign", s(arc.convexity_sign)),
                        ("length_bound", q(&arc.length_bound)),
                        ("monotone_sign", s(arc.monotone_sign)),
                        ("x_hi", q(&arc.x_hi)),
                        ("x_lo", q(&arc.x_lo)),
                        ("y_hi", q(&arc.y_hi)),
                        ("y_lo", q(&arc.y_lo)),
                    ];
                    match arc.shape {
                        ArcShape::Graph { branch } => {
                            fields.push(("branch", s(branch)));
                            fields.push(("shape", s("graph")));
                        }
                        ArcShape::Vertical => fields.push(("shape", s("vertical"))),
                    }
                    obj(fields)
                })
                .collect();
            Ok(obj(vec![
                ("arc_count", s(dec.arcs.len())),
                ("arcs", Value::Array(arcs)),
                (
                    "box",
                    obj(vec![
                        ("x_hi", q(&rect.x_hi)),
                        ("x_lo", q(&rect.x_lo)),
                        ("y_hi", q(&rect.y_hi)),
                        ("y_lo", q(&rect.y_lo)),
                    ]),
                ),
                ("curve", s(&f)),
                ("cut_count", s(dec.cut_count)),
                ("gap_count", s(dec.gap_count)),
            ]))
        }
        Command::Budgets { degree } => {
            let b = special_point_budgets(degree)?;
            Ok(obj(vec![
                ("components_max", s(b.components_max)),
                ("critical_max", s(b.critical_max)),
                ("cuts_max", s(b.cuts_max)),
                ("degree", s(b.degree)),
                ("inflection_max", s(b.inflection_max)),
                ("singular_max", s(b.singular_max)),
            ]))
        }
        Command::Bounds { class } => run_bounds(class),
        Command::Graph {
            coeffs,
            grid,
            sigma,
            emit_dot,
            crossings,
        } => {
            let curve = args::coeffs(&coeffs).map_err(usage)?;
            let grid = args::grid(&grid).map_err(usage)?;
            let sigma = match sigma {
                Some(src) => {
                    let sigma = args::sigma(&src).map_err(usage)?;
                    check_permutation(&sigma, grid.len).map_err(usage)?;
                    sigma
                }
                None => match verify_sap(&curve.defining_poly(), &grid)? {
                    Some(sap) => sap.sigma,
                    None => {
                        return Err(sapgrid_core::Error::DegenerateInput(
                            "no simultaneous arithmetic progression on this grid".into(),
                        )
                        .into())
                    }
                },
            };
            let sap = Sap {
                grid: grid.clone(),
                sigma: sigma.clone(),
            };
            let g = build_translate_graph(&curve, &sap)?;
            let stats = graph_stats(&g);
            let mut fields = vec![
                ("coeffs", coeffs_value(&curve)),
                ("cr_upper", s(stats.cr_upper)),
                ("e", s(stats.e)),
                ("grid", grid_value(&grid)),
                ("infinity_m_max", s(stats.infinity_m_max)),
                ("m_max", s(stats.m_max)),
                ("n", s(stats.n)),
                (
                    "sigma",
                    Value::Array(sigma.iter().map(|v| s(v)).collect()),
                ),
                ("t", s(stats.t)),
            ];
            if crossings {
                let cr = count_crossings_geometric(&curve, &g)?;
                fields.push(("cr_geometric", s(cr)));
            }
            if let Some(path) = emit_dot {
                std::fs::write(&path, g.to_dot())
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                fields.push(("dot_file", s(path.display())));
            }
            Ok(obj(fields))
        }
        Command::Scaling {
            curve,
            ks,
            exponent,
            grid,
        } => {
            let f = parse_bipoly(&curve)?;
            let ks = args::ks(&ks).map_err(usage)?;
            let exponent = args::rational(&exponent).map_err(usage)?;
            let base = match grid {
                Some(src) => {
                    let parts = args::rect(&src)
                        .map_err(|_| usage(format!("--grid takes a1,d1,a2,d2, got `{src}`")))?;
                    Grid::new(parts.0, parts.1, parts.2, parts.3, 1)?
                }
                None => Grid::from_i64(0, 1, 0, 1, 1),
            };
            let table = scaling_experiment(&f, &base, &ks, &exponent)?;
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|r| {
                    obj(vec![
                        ("count", s(r.count)),
                        ("k", s(r.k)),
                        ("ratio_reference", s(&r.ratio_reference)),
                        ("ratio_two_thirds", s(&r.ratio_two_thirds)),
                    ])
                })
                .collect();
            Ok(obj(vec![
                ("curve", s(&f)),
                ("exponent", q(&table.reference_exponent)),
                ("rows", Value::Array(rows)),
                ("slope_approx", s(format!("{:.12}", table.slope))),
            ]))
        }
    }
}

fn run_sap(op: SapOp) -> Result<Value, CliError> {
    match op {
        SapOp::Verify { curve, grid } => {
            let f = parse_bipoly(&curve)?;
            let grid = args::grid(&grid).map_err(usage)?;
            match verify_sap(&f, &grid)? {
                Some(sap) => Ok(obj(vec![
                    ("curve", s(&f)),
                    ("found", Value::Bool(true)),
                    ("grid", grid_value(&grid)),
                    ("points", points_value(&sap)),
                    (
                        "sigma",
                        Value::Array(sap.sigma.iter().map(|v| s(v)).collect()),
                    ),
                ])),
                None => Ok(obj(vec![
                    ("curve", s(&f)),
                    ("found", Value::Bool(false)),
                    ("grid", grid_value(&grid)),
                ])),
            }
        }
        SapOp::Search {
            coeffs,
            x_height,
            lengths,
        } => {
            let curve = args::coeffs(&coeffs).map_err(usage)?;
            let range = args::lengths(&lengths).map_err(usage)?;
            let saps = search_saps(&curve, x_height, range.clone())?;
            let items: Vec<Value> = saps
                .iter()
                .map(|sap| {
                    obj(vec![
                        ("grid", grid_value(&sap.grid)),
                        ("points", points_value(sap)),
                        (
                            "sigma",
                            Value::Array(sap.sigma.iter().map(|v| s(v)).collect()),
                        ),
                    ])
                })
                .collect();
            Ok(obj(vec![
                ("coeffs", coeffs_value(&curve)),
                ("count", s(saps.len())),
                (
                    "lengths",
                    obj(vec![("max", s(range.end())), ("min", s(range.start()))]),
                ),
                ("saps", Value::Array(items)),
                ("x_height", s(x_height)),
            ]))
        }
    }
}

fn run_bounds(class: BoundsClass) -> Result<Value, CliError> {
    match class {
        BoundsClass::Elliptic { variant } => {
            let chain = solve_max_k_elliptic(variant.solve());
            let threshold = applicability_threshold(variant.solve());
            let cert_keys = [
                "holds_lhs",
                "holds_rhs",
                "violated_at",
                "violates_lhs",
                "violates_rhs",
            ];
            let certificate = obj(cert_keys
                .iter()
                .map(|k| (*k, s(&chain.constants[*k])))
                .collect());
            let scan_keys = [
                "below_bound",
                "below_e",
                "computed_min_k",
                "holds_bound",
                "holds_e",
            ];
            let computed = obj(scan_keys
                .iter()
                .map(|k| (*k, s(&threshold.constants[*k])))
                .collect());
            Ok(obj(vec![
                (
                    "applicability",
                    obj(vec![
                        ("computed", computed),
                        ("stated", s(variant.stated_threshold())),
                    ]),
                ),
                ("certificate", certificate),
                ("max_k", s(chain.max_k.expect("chain search terminates"))),
                ("variant", s(variant.name())),
            ]))
        }
        BoundsClass::General { degree } => {
            let irr = general_constants(degree, ConstantsMode::Irreducible)?;
            let red = general_constants(degree, ConstantsMode::Reducible)?;
            let pick = |r: &sapgrid_core::bounds::BoundReport, keys: &[&str]| {
                obj(keys.iter().map(|k| (*k, s(&r.constants[*k]))).collect())
            };
            Ok(obj(vec![
                ("C1", s(&irr.constants["C1"])),
                ("degree", s(degree)),
                (
                    "irreducible",
                    pick(
                        &irr,
                        &["C_ceil", "C_cubed", "C_floor", "k_bound_when_K_equals_k"],
                    ),
                ),
                ("reducible", pick(&red, &["C_ceil", "C_cubed", "C_floor"])),
            ]))
        }
    }
}

fn check_permutation(sigma: &[usize], k: usize) -> Result<(), String> {
    if sigma.len() != k {
        return Err(format!(
            "--sigma has {} entries, grid length is {k}",
            sigma.len()
        ));
    }
    let mut seen = vec![false; k];
    for &v in sigma {
        if v >= k || seen[v] {
            return Err("--sigma is not a permutation of 0..k-1".into());
        }
        seen[v] = true;
    }
    Ok(())
}

fn box_value(b: &SolutionBox) -> Value {
    obj(vec![
        ("x_hi", q(&b.x_hi)),
        ("x_lo", q(&b.x_lo)),
        ("y_hi", q(&b.y_hi)),
        ("y_lo", q(&b.y_lo)),
    ])
}

fn coeffs_value(c: &WeierstrassCurve) -> Value {
    obj(vec![
        ("a", q(&c.a)),
        ("b", q(&c.b)),
        ("c", q(&c.c)),
        ("d", q(&c.d)),
        ("e", q(&c.e)),
    ])
}

fn points_value(sap: &Sap) -> Value {
    Value::Array(
        sap.points()
            .iter()
            .map(|(x, y)| obj(vec![("x", q(x)), ("y", q(y))]))
            .collect(),
    )
}
