use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use amalgam_lat::export::{from_json, to_csv, to_json, to_tex, to_tex_copy, ReportDocument};
use amalgam_lat::oracle::{exact_chi_la, exact_chi_lat, OracleResult, SearchLimits};
use amalgam_lat::selftest::{selftest, Scope};
use amalgam_lat::{
    build_even, check, dispatch_with, extend_even_to_4k1, lift_to_join, magic_rectangle_with, matrix_to_labeling,
    sign_even, sign_odd, AmalgamGraph, BuildError, BuildOptions, BuildReport, GraphError, IoError, Labeling,
    MagicError, MagicMethod, MagicRectangle, OracleError, SimpleGraph, VerifyError,
};
use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

/// Local antimagic total labelings of amalgamated complete graphs.
#[derive(Parser)]
#[command(name = "amalgam", version)]
struct Cli {
    /// Accepted for scripting compatibility; every command is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a labeling of A(mK_n, K_r) and print it.
    Construct {
        #[arg(long = "copies", short = 'm')]
        m: usize,
        #[arg(long = "clique", short = 'n')]
        n: usize,
        #[arg(long = "overlap", short = 'r', default_value_t = 0)]
        r: usize,
        /// JSON file with the magic rectangle to use (array of rows).
        #[arg(long)]
        omega: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Move the diagonal onto edges to a new apex vertex.
        #[arg(long)]
        lift: bool,
        /// Turn a labeling of mK_4k into an edge labeling of mK_(4k+1).
        #[arg(long, conflicts_with = "lift")]
        extend: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Only print copy `i`'s block (tex format).
        #[arg(long)]
        copy: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeling file against a graph. Exit 1 if it is not a local
    /// antimagic (total) labeling.
    Verify {
        /// `amalgam:m,n,r` with an optional `+apex`.
        #[arg(long)]
        graph: String,
        /// A report written by `construct --format json`, or a labeling
        /// `{"kind", "vertices", "edges": [[a, b, label], ...]}`.
        #[arg(long)]
        labeling: PathBuf,
    },
    /// Exact chromatic numbers by exhaustive search on small graphs.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        /// `amalgam:m,n,r` with an optional `+apex`.
        #[arg(long, required_unless_present = "adjacency")]
        graph: Option<String>,
        /// Adjacency-list file, one `v: w1 w2 ...` line per vertex.
        #[arg(long, conflicts_with = "graph")]
        adjacency: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        max_elems: usize,
        /// Seconds before reporting the best labeling found.
        #[arg(long)]
        timeout: Option<f64>,
        /// Worker threads (1 gives a reproducible witness).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long)]
        no_prune: bool,
    },
    /// Print the sign matrix of order n.
    Signs {
        #[arg(long, short = 'n')]
        order: usize,
    },
    /// Print a magic rectangle.
    Magic {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value_t = 1)]
        lo: u64,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, value_enum, default_value_t = MagicFormat::Text)]
        format: MagicFormat,
    },
    /// Check the golden fixtures and the property sweep.
    Selftest {
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Convert a JSON report to another format.
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        copy: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Search,
}

impl From<Method> for MagicMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Auto => MagicMethod::Auto,
            Method::Search => MagicMethod::Search,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Tex,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MagicFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    ChiLat,
    ChiLa,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", describe(&e));
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Joins the error chain, skipping causes already quoted by their parent.
fn describe(e: &anyhow::Error) -> String {
    let mut out = e.to_string();
    for cause in e.chain().skip(1) {
        let msg = cause.to_string();
        if !out.ends_with(&msg) {
            out = format!("{out}: {msg}");
        }
    }
    out
}

/// 2 for malformed input, 3 for parameters no construction covers.
fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(b) = cause.downcast_ref::<BuildError>() {
            return match b {
                BuildError::UnsupportedParameters { .. }
                | BuildError::MagicRectangleUnavailable(_)
                | BuildError::Sign(_) => 3,
                _ => 2,
            };
        }
        if let Some(o) = cause.downcast_ref::<OracleError>() {
            return match o {
                OracleError::TooLarge { .. } => 3,
                _ => 2,
            };
        }
        if cause.downcast_ref::<MagicError>().is_some() {
            return 3;
        }
    }
    2
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Construct { m, n, r, omega, method, lift, extend, format, copy, out } => {
            let report = if extend {
                extend_even_to_4k1(&build_even(m, n, r)?)?
            } else {
                let mut opts = BuildOptions::with_method(method.into());
                if let Some(path) = omega {
                    opts.omega = Some(read_omega(&path)?);
                }
                let base = dispatch_with(m, n, r, &opts)?;
                if lift {
                    lift_to_join(&base)?
                } else {
                    base
                }
            };
            emit(&render(&report, format, copy)?, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { graph, labeling } => {
            let g: AmalgamGraph = graph.parse().map_err(|e: GraphError| anyhow!(e))?;
            let text = read(&labeling)?;
            let f = parse_labeling(&text, &g)?;
            let rep = check(&g, &f)?;
            println!("{}", serde_json::to_string(&rep)?);
            if rep.is_valid() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Oracle { kind, graph, adjacency, max_elems, timeout, jobs, target, no_symmetry, no_prune } => {
            let lim = SearchLimits {
                max_elems,
                time_budget: timeout.map(Duration::from_secs_f64),
                target,
                symmetry: !no_symmetry,
                prune: !no_prune,
                stop_at_lower_bound: !no_prune,
                jobs,
            };
            let res: OracleResult = match (graph, adjacency) {
                (Some(spec), _) => {
                    let g: AmalgamGraph = spec.parse().map_err(|e: GraphError| anyhow!(e))?;
                    match kind {
                        OracleKind::ChiLat => exact_chi_lat(&g, &lim)?,
                        OracleKind::ChiLa => exact_chi_la(&g, &lim)?,
                    }
                }
                (None, Some(path)) => {
                    let g = SimpleGraph::from_adjacency_list(&read(&path)?).map_err(IoError::from)?;
                    match kind {
                        OracleKind::ChiLat => exact_chi_lat(&g, &lim)?,
                        OracleKind::ChiLa => exact_chi_la(&g, &lim)?,
                    }
                }
                (None, None) => unreachable!("clap requires one of --graph and --adjacency"),
            };
            println!("{}", serde_json::to_string(&res)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Signs { order } => {
            let s = if order % 2 == 0 { sign_even(order) } else { sign_odd(order) };
            let s = s.map_err(BuildError::from)?;
            print!("{s}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Magic { rows, cols, lo, method, format } => {
            let rect = magic_rectangle_with(rows, cols, lo, method.into())?;
            match format {
                MagicFormat::Text => print!("{rect}"),
                MagicFormat::Json => println!("{}", serde_json::to_string(&rect.to_rows())?),
                MagicFormat::Csv => {
                    for row in rect.to_rows() {
                        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                        println!("{}", cells.join(","));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest { scope, method } => {
            let scope: Scope = scope.parse().map_err(|e: String| anyhow!(IoError::Malformed(e)))?;
            let summary = selftest(scope, method.into());
            print!("{summary}");
            Ok(if summary.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Export { input, format, copy, out } => {
            let report = from_json(&read(&input)?)?;
            emit(&render(&report, format, copy)?, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(IoError::from).with_context(|| format!("reading {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(IoError::from).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(report: &BuildReport, format: Format, copy: Option<usize>) -> Result<String> {
    let m = report.graph().m();
    if let Some(i) = copy {
        if format != Format::Tex {
            return Err(anyhow!(IoError::Malformed("--copy only applies to --format tex".into())));
        }
        if i == 0 || i > m {
            return Err(anyhow!(IoError::Malformed(format!("copy {i} out of range 1..={m}"))));
        }
    }
    Ok(match format {
        Format::Json => to_json(report)? + "\n",
        Format::Csv => to_csv(report)?,
        Format::Tex => match copy {
            Some(i) => to_tex_copy(report, i),
            None => to_tex(report),
        },
        Format::Text => format!(
            "{} via {}: {} colors ({})\n{}",
            report.graph(),
            report.theorem,
            report.colors,
            if report.is_exact() { "exact" } else { "upper bound" },
            report.matrix
        ),
    })
}

fn read_omega(path: &Path) -> Result<MagicRectangle> {
    let rows: Vec<Vec<u64>> = serde_json::from_str(&read(path)?).map_err(IoError::from)?;
    MagicRectangle::from_rows(rows).map_err(|e| anyhow!(BuildError::InvalidOmega(e.to_string())))
}

/// Accepts a report document or a bare labeling.
fn parse_labeling(text: &str, g: &AmalgamGraph) -> Result<Labeling> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(IoError::from)?;
    if value.get("entries").is_some() {
        let doc: ReportDocument = serde_json::from_value(value).map_err(IoError::from)?;
        let mat = doc.matrix()?;
        if mat.graph() != g {
            return Err(anyhow!(VerifyError::DomainMismatch(format!("file is for {}, not {g}", mat.graph()))));
        }
        return Ok(matrix_to_labeling(&mat, g)?);
    }
    Ok(serde_json::from_value(value).map_err(IoError::from)?)
}
