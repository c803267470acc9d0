use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hecke_strip::arith::{format_rational, parse_point, BigRational, RationalFunction};
use hecke_strip::hecke::{
    invariant_subspace, matrix_unit_lift, normalized_invariant, wedderburn_check, BlockConvention,
    SkewRepresentation,
};
use hecke_strip::par::Exec;
use hecke_strip::shapes::{enumerate_skew_tableaux, Cell, Partition, SkewShape, SkewTableau};
use hecke_strip::strip::{verify_morita_with, MoritaBounds};
use hecke_strip::verify::{verify_classical, verify_invariants, verify_relations, ShapeBounds};

const THREADS_ENV: &str = "HECKE_STRIP_THREADS";

#[derive(Parser)]
#[command(name = "hecke-strip", version, about = "Seminormal Hecke representations of skew shapes")]
struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ShapeArgs {
    /// Inner partition, comma-separated ("" for empty).
    #[arg(long, default_value = "")]
    inner: String,
    /// Outer partition, comma-separated.
    #[arg(long)]
    outer: String,
}

impl ShapeArgs {
    fn shape(&self) -> Result<SkewShape, String> {
        let inner: Partition = self.inner.parse().map_err(|e| format!("--inner: {e}"))?;
        let outer: Partition = self.outer.parse().map_err(|e| format!("--outer: {e}"))?;
        SkewShape::new(inner, outer).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the standard tableaux of a skew shape.
    Tableaux(ShapeArgs),
    /// Print a seminormal generator matrix.
    Matrix {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Generator index i (1-based).
        #[arg(long = "gen")]
        generator: usize,
        /// Evaluate at a = this rational.
        #[arg(long)]
        at: Option<String>,
    },
    /// Compute the Hecke invariants of a skew shape.
    Invariants {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        at: Option<String>,
    },
    /// Run a verification sweep.
    Verify {
        suite: Suite,
        /// Largest outer partition size.
        #[arg(long)]
        max_size: Option<usize>,
        /// Largest skew size (strip length for morita).
        #[arg(long)]
        max_strip: Option<usize>,
        /// Hecke algebra size for wedderburn.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Express a matrix unit of a straight-shape block in the T_w basis.
    WedderburnLift {
        #[arg(long)]
        n: usize,
        /// Partition of n labelling the block.
        #[arg(long)]
        outer: String,
        /// Row of the matrix unit (1-based).
        #[arg(long, default_value_t = 1)]
        row: usize,
        /// Column of the matrix unit (1-based).
        #[arg(long, default_value_t = 1)]
        col: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Invariants,
    Wedderburn,
    Morita,
    All,
}

/// JSON document plus its text rendering and whether it reports a pass.
struct Output {
    json: Value,
    text: String,
    pass: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Self { json, text, pass: true }
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn point(at: &Option<String>) -> Result<Option<BigRational>, String> {
    at.as_deref().map(|s| parse_point(s).map_err(|e| format!("--at: {e}"))).transpose()
}

fn eval_entry(f: &RationalFunction, x: &Option<BigRational>) -> Result<String, String> {
    match x {
        None => Ok(f.to_string()),
        Some(x) => f.eval(x).map(|v| format_rational(&v)).map_err(|e| e.to_string()),
    }
}

fn grid_text(grid: &[Vec<String>]) -> String {
    let width = grid.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for row in grid {
        let cells: Vec<_> = row.iter().map(|s| format!("{s:>width$}")).collect();
        writeln!(out, "[ {} ]", cells.join("  ")).unwrap();
    }
    out
}

fn tableau_text(t: &SkewTableau) -> String {
    let filling = t.filling();
    let outer = t.shape().outer();
    let inner = t.shape().inner();
    let width = t.len().to_string().len();
    let mut out = String::new();
    for r in 0..outer.len() {
        let row: Vec<String> = (0..outer.part(r))
            .map(|c| {
                if c < inner.part(r) {
                    format!("{:>width$}", ".")
                } else {
                    format!("{:>width$}", filling[&Cell::new(r + 1, c + 1)])
                }
            })
            .collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

fn cmd_tableaux(args: &ShapeArgs) -> Result<Output, String> {
    let shape = args.shape()?;
    let tableaux = enumerate_skew_tableaux(&shape);
    let mut text = format!("{shape}: {} tableaux\n", tableaux.len());
    for (k, t) in tableaux.iter().enumerate() {
        write!(text, "\nT{k}\n{}", tableau_text(t)).unwrap();
    }
    let json = json!({ "shape": shape, "count": tableaux.len(), "tableaux": tableaux });
    Ok(Output::ok(json, text))
}

fn cmd_matrix(args: &ShapeArgs, i: usize, at: &Option<String>) -> Result<Output, String> {
    let shape = args.shape()?;
    let x = point(at)?;
    let rep = SkewRepresentation::build_unchecked(&shape, BlockConvention::Standard).map_err(|e| e.to_string())?;
    let m = rep.generator(i).map_err(|e| e.to_string())?;
    let grid = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| eval_entry(&m.get(r, c), &x)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let matrix = match &x {
        None => to_json(m),
        Some(x) => to_json(&m.eval(x).map_err(|e| e.to_string())?),
    };
    let basis: Vec<_> = rep.basis().iter().map(SkewTableau::cells).collect();
    let text = format!("{shape}, g{i}{}\n{}", x.as_ref().map_or(String::new(), |x| format!(" at a = {}", format_rational(x))), grid_text(&grid));
    let json = json!({
        "shape": shape,
        "generator": i,
        "at": x.as_ref().map(format_rational),
        "basis": basis,
        "matrix": matrix,
        "display": grid,
    });
    Ok(Output::ok(json, text))
}

fn cmd_invariants(args: &ShapeArgs, at: &Option<String>) -> Result<Output, String> {
    let shape = args.shape()?;
    let x = point(at)?;
    let rep = SkewRepresentation::build(&shape, BlockConvention::Standard).map_err(|e| e.to_string())?;
    let dim = invariant_subspace(&rep).len();
    let vector = normalized_invariant(&rep)
        .map(|v| v.iter().map(|f| eval_entry(f, &x)).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    let mut text = format!("{shape}: representation dimension {}, invariant dimension {dim}\n", rep.dimension());
    if let Some(v) = &vector {
        for (t, c) in rep.basis().iter().zip(v) {
            write!(text, "\n{c}\n{}", tableau_text(t)).unwrap();
        }
    }
    let basis: Vec<_> = rep.basis().iter().map(SkewTableau::cells).collect();
    let json = json!({
        "shape": shape,
        "horizontal_strip": shape.is_horizontal_strip(),
        "dimension": rep.dimension(),
        "invariant_dimension": dim,
        "at": x.as_ref().map(format_rational),
        "basis": basis,
        "vector": vector,
    });
    Ok(Output::ok(json, text))
}

fn suite_text(name: &str, pass: bool, summary: String) -> String {
    format!("{name}: {} ({summary})\n", if pass { "pass" } else { "FAIL" })
}

fn run_suite(suite: Suite, max_size: Option<usize>, max_strip: Option<usize>, n: Option<usize>) -> Result<Output, String> {
    let exec = Exec::default();
    match suite {
        Suite::Relations => {
            let b = ShapeBounds {
                max_outer: max_size.unwrap_or(ShapeBounds::RELATIONS.max_outer),
                max_boxes: max_strip.unwrap_or(ShapeBounds::RELATIONS.max_boxes),
                ..ShapeBounds::RELATIONS
            };
            let rel = verify_relations(b, BlockConvention::Standard, exec);
            let cl = verify_classical(b, exec);
            let pass = rel.pass && cl.pass;
            let text = suite_text("relations", rel.pass, format!("{} shapes, {} checks", rel.shapes_checked, rel.checks))
                + &suite_text("classical limit", cl.pass, format!("{} shapes", cl.shapes_checked));
            Ok(Output { json: json!({ "suite": "relations", "pass": pass, "relations": rel, "classical_limit": cl }), text, pass })
        }
        Suite::Invariants => {
            let b = ShapeBounds {
                max_outer: max_size.unwrap_or(ShapeBounds::INVARIANTS.max_outer),
                max_boxes: max_strip.unwrap_or(ShapeBounds::INVARIANTS.max_boxes),
                ..ShapeBounds::INVARIANTS
            };
            let r = verify_invariants(b, exec);
            let text = suite_text("invariants", r.pass, format!("{} shapes", r.shapes_checked));
            Ok(Output { pass: r.pass, json: to_json(&r), text })
        }
        Suite::Wedderburn => {
            let n = n.unwrap_or(4);
            let r = wedderburn_check(n).map_err(|e| e.to_string())?;
            let pass = r.sum_of_squares == r.factorial && r.faithful;
            let summary = format!("dims {:?}, sum of squares {}, {n}! = {}, rank {}", r.dims, r.sum_of_squares, r.factorial, r.rank);
            let mut json = to_json(&r);
            json["suite"] = json!("wedderburn");
            json["pass"] = json!(pass);
            Ok(Output { json, text: suite_text("wedderburn", pass, summary), pass })
        }
        Suite::Morita => {
            let d = MoritaBounds::default();
            let bounds = MoritaBounds {
                max_outer_size: max_size.unwrap_or(d.max_outer_size),
                max_strip_len: max_strip.unwrap_or(d.max_strip_len),
            };
            let r = verify_morita_with(bounds, BlockConvention::Standard, exec);
            let summary = format!("{} shapes, {} chains, {} cocycles", r.shapes_checked, r.chains_checked, r.cocycles_checked);
            let text = suite_text("morita", r.pass, summary);
            Ok(Output { pass: r.pass, json: to_json(&r), text })
        }
        Suite::All => {
            let parts = [Suite::Relations, Suite::Invariants, Suite::Wedderburn, Suite::Morita]
                .into_iter()
                .map(|s| run_suite(s, max_size, max_strip, n))
                .collect::<Result<Vec<_>, _>>()?;
            let pass = parts.iter().all(|o| o.pass);
            let text = parts.iter().map(|o| o.text.as_str()).collect();
            let json = json!({
                "suite": "all",
                "pass": pass,
                "reports": parts.into_iter().map(|o| o.json).collect::<Vec<_>>(),
            });
            Ok(Output { json, text, pass })
        }
    }
}

fn cmd_lift(n: usize, outer: &str, row: usize, col: usize) -> Result<Output, String> {
    let shape: Partition = outer.parse().map_err(|e| format!("--outer: {e}"))?;
    if row == 0 || col == 0 {
        return Err("--row and --col are 1-based".into());
    }
    let lift = matrix_unit_lift(n, &shape, row - 1, col - 1).map_err(|e| e.to_string())?;
    let mut text = format!("E_{row}{col} in the {shape} block of H_{n}\n");
    for t in &lift.terms {
        writeln!(text, "  T{:?}: {}", t.word.letters(), t.coefficient).unwrap();
    }
    Ok(Output::ok(to_json(&lift), text))
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("{THREADS_ENV} must be a positive integer"))?;
    if n == 0 {
        return Err(format!("{THREADS_ENV} must be a positive integer"));
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Result<Output, String> {
    configure_threads()?;
    match &cli.command {
        Command::Tableaux(shape) => cmd_tableaux(shape),
        Command::Matrix { shape, generator, at } => cmd_matrix(shape, *generator, at),
        Command::Invariants { shape, at } => cmd_invariants(shape, at),
        Command::Verify { suite, max_size, max_strip, n } => run_suite(*suite, *max_size, *max_strip, *n),
        Command::WedderburnLift { n, outer, row, col } => cmd_lift(*n, outer, *row, *col),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = if cli.pretty { output.text } else { format!("{}\n", output.json) };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if output.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
