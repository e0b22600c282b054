//! `graphidx` command line: compute invariant reports, verify inequality
//! suites over files or generated batches, and emit graph corpora.
//!
//! Exit codes: 0 = success / no violations, 1 = at least one bound
//! violation (a reportable result, not a crash), 2 = usage, parse or I/O
//! error.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphidx::bounds::{run_suite, BoundId, SuiteReport};
use graphidx::generate::{
    complete, complete_bipartite, cycle, enumerate_trees, path, random_bipartite_diam3,
    random_gnm_connected, random_tree, seeded_rng, star,
};
use graphidx::indices::IndexReport;
use graphidx::{format_real, parse_edge_list, parse_graph6, write_graph6, Graph};
use rand::Rng;

#[derive(Parser)]
#[command(
    name = "graphidx",
    version,
    about = "Compute graph invariants and verify the inequalities that relate them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant report for each input graph
    Compute(ComputeArgs),
    /// Check bound suites over input or generated graphs
    Verify(VerifyArgs),
    /// Emit generated graphs as graph6 lines
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    #[value(name = "edge-list")]
    EdgeList,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "path")]
    Path,
    #[value(name = "cycle")]
    Cycle,
    #[value(name = "star")]
    Star,
    #[value(name = "complete")]
    Complete,
    #[value(name = "complete_bipartite")]
    CompleteBipartite,
    #[value(name = "random_tree")]
    RandomTree,
    #[value(name = "random_gnm_connected")]
    RandomGnmConnected,
    #[value(name = "random_bipartite_diam3")]
    RandomBipartiteDiam3,
    /// Every free tree with n between n-min and n-max, exhaustively
    #[value(name = "tree")]
    Tree,
}

impl Family {
    fn is_random(self) -> bool {
        matches!(
            self,
            Family::RandomTree | Family::RandomGnmConnected | Family::RandomBipartiteDiam3
        )
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// Input file; "-" reads stdin. graph6 lines or an edge list.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Input file with graphs to check; mutually exclusive with --family.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Graph family to generate and check.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Comma-separated bound ids (default: every bound).
    #[arg(long, value_delimiter = ',', value_parser = parse_bound_id)]
    bounds: Vec<BoundId>,
    /// Run every bound (the default when --bounds is absent).
    #[arg(long)]
    all_bounds: bool,
    /// Number of graphs for randomized families.
    #[arg(long)]
    count: Option<usize>,
    /// RNG seed; required for randomized families.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    params: FamilyParams,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Worker threads for the suite (output is identical at any degree).
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Number of graphs for randomized families.
    #[arg(long)]
    count: Option<usize>,
    /// RNG seed; required for randomized families.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    params: FamilyParams,
}

#[derive(Args)]
struct FamilyParams {
    /// Vertex count (fixed) where the family takes one.
    #[arg(long)]
    n: Option<usize>,
    /// First part size for bipartite families.
    #[arg(long)]
    n1: Option<usize>,
    /// Second part size for bipartite families.
    #[arg(long)]
    n2: Option<usize>,
    /// Edge count for random_gnm_connected.
    #[arg(long)]
    m: Option<usize>,
    /// Smallest vertex count for ranged families.
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    /// Largest vertex count for ranged families.
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    /// Force m > n^2/4 in random_gnm_connected draws.
    #[arg(long)]
    dense: bool,
}

fn parse_bound_id(s: &str) -> Result<BoundId, String> {
    BoundId::from_id(s).ok_or_else(|| {
        let known: Vec<&str> = BoundId::ALL.iter().map(|b| b.id()).collect();
        format!("unknown bound id {s:?}; known ids: {}", known.join(", "))
    })
}

struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Generate(args) => cmd_generate(args),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------------------
// input loading
// ---------------------------------------------------------------------------

struct NamedGraph {
    label: String,
    graph: Graph,
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| CliError(format!("{path}: {e}")))
    }
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| {
            let mut it = l.split_whitespace();
            let two = it.next().zip(it.next());
            two.is_some_and(|(a, b)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok())
                && it.next().is_none()
        })
}

/// Loads graphs from a file or stdin. The single shared parser for both
/// `compute` and `verify`: an edge list holds one graph, a graph6 file one
/// graph per line.
fn load_graphs(path: &str, format: InputFormat) -> Result<Vec<NamedGraph>, CliError> {
    let text = read_input(path)?;
    let format = match format {
        InputFormat::Auto if looks_like_edge_list(&text) => InputFormat::EdgeList,
        InputFormat::Auto => InputFormat::Graph6,
        other => other,
    };
    match format {
        InputFormat::EdgeList => {
            let graph = parse_edge_list(&text).map_err(|e| CliError(format!("{path}: {e}")))?;
            let label = write_graph6(&graph)
                .unwrap_or_else(|_| format!("n={};m={}", graph.order(), graph.size()));
            Ok(vec![NamedGraph { label, graph }])
        }
        InputFormat::Graph6 | InputFormat::Auto => {
            let mut graphs = Vec::new();
            for (idx, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let graph = parse_graph6(line)
                    .map_err(|e| CliError(format!("{path}: line {}: {e}", idx + 1)))?;
                graphs.push(NamedGraph { label: line.to_string(), graph });
            }
            if graphs.is_empty() {
                return Err(CliError(format!("{path}: no graphs found")));
            }
            Ok(graphs)
        }
    }
}

// ---------------------------------------------------------------------------
// generation shared by `verify --family` and `generate`
// ---------------------------------------------------------------------------

fn build_family(
    family: Family,
    params: &FamilyParams,
    count: Option<usize>,
    seed: Option<u64>,
) -> Result<Vec<Graph>, CliError> {
    if family.is_random() && seed.is_none() {
        return Err(CliError("--seed is required for randomized families".into()));
    }
    if !family.is_random() && count.is_some() {
        return Err(CliError(format!(
            "--count only applies to randomized families, not {}",
            family
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default()
        )));
    }
    let count = count.unwrap_or(1);
    let seed = seed.unwrap_or(0);
    let sizes = |least: usize| -> Vec<usize> {
        match params.n {
            Some(n) => vec![n],
            None => (params.n_min.max(least)..=params.n_max).collect(),
        }
    };

    let graphs = match family {
        Family::Path => sizes(2).into_iter().map(path).collect::<Result<Vec<_>, _>>()?,
        Family::Cycle => sizes(3).into_iter().map(cycle).collect::<Result<Vec<_>, _>>()?,
        Family::Star => sizes(2).into_iter().map(star).collect::<Result<Vec<_>, _>>()?,
        Family::Complete => sizes(1).into_iter().map(complete).collect::<Result<Vec<_>, _>>()?,
        Family::CompleteBipartite => match (params.n1, params.n2) {
            (Some(n1), Some(n2)) => vec![complete_bipartite(n1, n2)?],
            (Some(_), None) | (None, Some(_)) => {
                return Err(CliError("--n1 and --n2 must be given together".into()))
            }
            (None, None) => {
                let mut out = Vec::new();
                for n1 in 1..=params.n_max / 2 {
                    for n2 in n1..=params.n_max.saturating_sub(n1) {
                        out.push(complete_bipartite(n1, n2)?);
                    }
                }
                out
            }
        },
        Family::Tree => {
            let mut out = Vec::new();
            match params.n {
                Some(n) => out.extend(enumerate_trees(n)),
                None => {
                    for n in params.n_min.max(1)..=params.n_max {
                        out.extend(enumerate_trees(n));
                    }
                }
            }
            out
        }
        Family::RandomTree => {
            let lo = params.n_min.max(2);
            check_span("--n-min/--n-max", lo, params.n_max, params.n.is_some())?;
            (0..count)
                .map(|i| {
                    let mut rng = seeded_rng(seed, i as u64);
                    let n = params.n.unwrap_or_else(|| rng.random_range(lo..=params.n_max));
                    random_tree(n, &mut rng)
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        Family::RandomGnmConnected => {
            let lo = params.n_min.max(1);
            check_span("--n-min/--n-max", lo, params.n_max, params.n.is_some())?;
            (0..count)
                .map(|i| {
                    let mut rng = seeded_rng(seed, i as u64);
                    let n = params.n.unwrap_or_else(|| rng.random_range(lo..=params.n_max));
                    let max_m = n * (n - 1) / 2;
                    let least = if params.dense { n * n / 4 + 1 } else { n.saturating_sub(1) };
                    let m = match params.m {
                        Some(m) => m,
                        None if least > max_m => least, // generator reports infeasibility
                        None => rng.random_range(least..=max_m),
                    };
                    random_gnm_connected(n, m, &mut rng)
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        Family::RandomBipartiteDiam3 => {
            if params.n1.is_none() || params.n2.is_none() {
                check_span("--n-max", 4, params.n_max, false)?;
            }
            (0..count)
                .map(|i| {
                    let mut rng = seeded_rng(seed, i as u64);
                    let n1 = params.n1.unwrap_or_else(|| rng.random_range(2..=params.n_max - 2));
                    let n2 = match params.n2 {
                        Some(v) => v,
                        None if params.n_max.saturating_sub(n1) < 2 => 2,
                        None => rng.random_range(2..=params.n_max - n1),
                    };
                    random_bipartite_diam3(n1, n2, &mut rng)
                })
                .collect::<Result<Vec<_>, _>>()?
        }
    };
    if graphs.is_empty() {
        return Err(CliError("family parameters produce no graphs".into()));
    }
    Ok(graphs)
}

fn check_span(what: &str, lo: usize, hi: usize, fixed_n: bool) -> Result<(), CliError> {
    if !fixed_n && lo > hi {
        return Err(CliError(format!("{what}: empty range {lo}..={hi}")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct ReportRow<'a> {
    graph: &'a str,
    #[serde(flatten)]
    report: &'a IndexReport,
}

const UNDEFINED: &str = "undefined(disconnected)";

fn opt_i64(v: Option<i64>) -> String {
    v.map_or_else(|| UNDEFINED.to_string(), |x| x.to_string())
}

fn cmd_compute(args: ComputeArgs) -> Result<ExitCode, CliError> {
    let graphs = load_graphs(&args.input, args.input_format)?;
    let mut reports = Vec::with_capacity(graphs.len());
    for named in &graphs {
        let report = IndexReport::of(&named.graph).map_err(|e| CliError(format!("{}: {e}", named.label)))?;
        reports.push(report);
    }

    let mut out = String::new();
    match args.format {
        OutputFormat::Plain => {
            for (named, r) in graphs.iter().zip(&reports) {
                writeln!(out, "graph {}: n={} m={}", named.label, r.n, r.m).unwrap();
                writeln!(out, "  degree_variance      = {}", r.degree_variance).unwrap();
                writeln!(out, "  first_zagreb         = {}", r.first_zagreb).unwrap();
                writeln!(out, "  albertson            = {}", r.albertson).unwrap();
                writeln!(out, "  irb                  = {}", format_real(r.irb)).unwrap();
                writeln!(out, "  mostar               = {}", opt_i64(r.mostar)).unwrap();
                writeln!(out, "  szeged               = {}", opt_i64(r.szeged)).unwrap();
                writeln!(out, "  sum_n_uv             = {}", opt_i64(r.sum_n_uv)).unwrap();
                writeln!(out, "  triangle_count       = {}", r.triangle_count).unwrap();
                writeln!(out, "  energy               = {}", format_real(r.energy)).unwrap();
                writeln!(out, "  laplacian_lambda_max = {}", format_real(r.laplacian_lambda_max)).unwrap();
                writeln!(out, "  sqrt_degree_sum      = {}", format_real(r.sqrt_degree_sum)).unwrap();
            }
        }
        OutputFormat::Json => {
            let rows: Vec<ReportRow> = graphs
                .iter()
                .zip(&reports)
                .map(|(named, report)| ReportRow { graph: &named.label, report })
                .collect();
            out = serde_json::to_string_pretty(&rows).expect("reports serialize");
            out.push('\n');
        }
        OutputFormat::Csv => {
            out.push_str(
                "graph,n,m,degree_variance,first_zagreb,albertson,irb,mostar,szeged,sum_n_uv,triangle_count,energy,laplacian_lambda_max,sqrt_degree_sum\n",
            );
            for (named, r) in graphs.iter().zip(&reports) {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    named.label,
                    r.n,
                    r.m,
                    r.degree_variance,
                    r.first_zagreb,
                    r.albertson,
                    format_real(r.irb),
                    opt_i64(r.mostar),
                    opt_i64(r.szeged),
                    opt_i64(r.sum_n_uv),
                    r.triangle_count,
                    format_real(r.energy),
                    format_real(r.laplacian_lambda_max),
                    format_real(r.sqrt_degree_sum),
                )
                .unwrap();
            }
        }
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn render_plain_summary(report: &SuiteReport) -> String {
    let mut out = String::new();
    writeln!(out, "graphs checked: {}", report.summary.graphs).unwrap();
    writeln!(
        out,
        "{:<16} {:>10} {:>14} {:>8} {:>9} {:>10} {:>13}",
        "bound_id", "applicable", "not_applicable", "holds", "equality", "violations", "discrepancies"
    )
    .unwrap();
    for s in &report.summary.bounds {
        writeln!(
            out,
            "{:<16} {:>10} {:>14} {:>8} {:>9} {:>10} {:>13}",
            s.bound_id.id(),
            s.applicable,
            s.not_applicable,
            s.holds,
            s.equality,
            s.violations,
            s.discrepancies
        )
        .unwrap();
    }
    for check in &report.checks {
        if let Some(d) = &check.discrepancy {
            writeln!(out, "discrepancy: {} on {}: {}", check.bound_id, check.graph6, d).unwrap();
        }
    }
    for v in &report.violations {
        writeln!(
            out,
            "VIOLATION: {} on {}: lhs={} rhs={}",
            v.bound_id,
            v.graph6,
            v.lhs.map(format_real).unwrap_or_default(),
            v.rhs.map(format_real).unwrap_or_default()
        )
        .unwrap();
    }
    writeln!(
        out,
        "status: {}",
        if report.summary.violations == 0 { "ok" } else { "violations found" }
    )
    .unwrap();
    out
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let bounds: Vec<BoundId> = if args.bounds.is_empty() {
        BoundId::ALL.to_vec()
    } else if args.all_bounds {
        return Err(CliError("--all-bounds conflicts with an explicit --bounds list".into()));
    } else {
        args.bounds.clone()
    };

    let graphs: Vec<Graph> = match (&args.input, args.family) {
        (Some(_), Some(_)) => {
            return Err(CliError("--input and --family are mutually exclusive".into()))
        }
        (Some(path), None) => {
            load_graphs(path, args.input_format.unwrap_or(InputFormat::Auto))?
                .into_iter()
                .map(|n| n.graph)
                .collect()
        }
        (None, Some(family)) => build_family(family, &args.params, args.count, args.seed)?,
        (None, None) => {
            return Err(CliError("one of --input or --family is required".into()))
        }
    };

    if args.threads == 0 {
        return Err(CliError("--threads must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads)
        .build()
        .map_err(|e| CliError(format!("thread pool: {e}")))?;
    let report = pool.install(|| run_suite(&graphs, &bounds));

    match args.format {
        OutputFormat::Plain => print!("{}", render_plain_summary(&report)),
        OutputFormat::Json => println!("{}", report.to_json()),
        OutputFormat::Csv => print!("{}", report.to_csv()),
    }

    Ok(if report.summary.violations == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, CliError> {
    let graphs = build_family(args.family, &args.params, args.count, args.seed)?;
    let mut out = String::new();
    for g in &graphs {
        let line = write_graph6(g)?;
        out.push_str(&line);
        out.push('\n');
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}
