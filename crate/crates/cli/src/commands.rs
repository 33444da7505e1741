//! Subcommand implementations. Input format (graph, hypergraph, CSP) is
//! detected from the `p` header line.

use crate::record::{records_to_csv, BenchRecord};
use crate::suite::{self, SolverSpec, SuiteEntry, ORACLE_CAP_CHI, ORACLE_CAP_IS_VC};
use std::fs;
use std::path::Path;
use std::time::Instant;
use xta_core::*;

/// CLI-level error carrying its process exit code: 2 for input
/// problems, 3 for contract violations.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub msg: String,
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError {
            code: 2,
            msg: msg.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::Contract(_) => 3,
        };
        CliError {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn read_input(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub enum ParsedInput {
    G(Graph),
    H(Hypergraph),
    C(Csp),
}

pub fn parse_input(text: &str) -> CliResult<ParsedInput> {
    let header = text
        .lines()
        .find(|l| !l.trim().is_empty() && !l.trim_start().starts_with('c'))
        .unwrap_or("");
    let kind = header.split_whitespace().nth(1).unwrap_or("");
    match kind {
        "edge" => Ok(ParsedInput::G(parse_dimacs_col(text)?)),
        "hedge" => Ok(ParsedInput::H(parse_hypergraph(text)?)),
        "csp" => Ok(ParsedInput::C(parse_csp(text)?)),
        other => Err(CliError::input(format!(
            "cannot detect input format (header kind `{other}`)"
        ))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

fn emit_records(records: &[BenchRecord], format: OutputFormat) -> CliResult<String> {
    match format {
        OutputFormat::Csv => {
            records_to_csv(records).map_err(|e| CliError::input(format!("csv: {e}")))
        }
        OutputFormat::Json => {
            let mut out = String::new();
            for r in records {
                out.push_str(&serde_json::to_string_pretty(r).expect("serializable record"));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

pub struct SolveIsArgs {
    pub input: std::path::PathBuf,
    pub r: Option<usize>,
    pub p: f64,
    pub d: usize,
    pub leaf: String,
    pub trials: u32,
    pub seed: u64,
    pub baseline: String,
    pub format: OutputFormat,
    pub force_oracle: bool,
}

pub fn solve_is(args: &SolveIsArgs) -> CliResult<String> {
    let text = read_input(&args.input)?;
    let g = match parse_input(&text)? {
        ParsedInput::G(g) => g,
        _ => return Err(CliError::input("solve-is expects a DIMACS .col graph")),
    };
    let instance = args.input.display().to_string();
    let cfg = SolveConfig {
        p: args.p,
        d: args.d,
        leaf: LeafKind::by_name(&args.leaf)?,
        trials: args.trials,
        seed: args.seed,
    };
    let (set, stats) = boosted_is(&g, &cfg)?;
    let oracle = (g.alive_count() <= ORACLE_CAP_IS_VC || args.force_oracle)
        .then(|| exact_mis(&g).len());
    let mut records = vec![BenchRecord {
        instance: instance.clone(),
        generator: format!("file:{instance}"),
        solver: "branch_is".into(),
        p: Some(args.p),
        d: Some(args.d),
        leaf: Some(args.leaf.clone()),
        trials: Some(args.trials),
        seed: Some(args.seed),
        result_size: Some(set.len()),
        oracle,
        ratio: oracle.and_then(|o| ratio_is(o, set.len())),
        nodes: Some(stats.nodes as f64 / args.trials as f64),
        node_bound: node_bound(g.alive_count(), args.d, args.p).ok(),
        elapsed_us: stats.elapsed.as_micros() as u64,
        error: None,
    }];
    match args.baseline.as_str() {
        "none" => {}
        "partition" => {
            let r = args.r.ok_or_else(|| {
                CliError::input("--baseline partition requires --r (block count)")
            })?;
            let start = Instant::now();
            let set = partition_baseline_is(&g, r)?;
            records.push(BenchRecord {
                instance: instance.clone(),
                generator: format!("file:{instance}"),
                solver: "partition_baseline".into(),
                p: None,
                d: None,
                leaf: None,
                trials: None,
                seed: None,
                result_size: Some(set.len()),
                oracle,
                ratio: oracle.and_then(|o| ratio_is(o, set.len())),
                nodes: None,
                node_bound: None,
                elapsed_us: start.elapsed().as_micros() as u64,
                error: None,
            });
        }
        other => {
            return Err(CliError::input(format!(
                "unknown baseline `{other}` (expected none or partition)"
            )))
        }
    }
    emit_records(&records, args.format)
}

fn ratio_is(oracle: usize, result: usize) -> Option<f64> {
    match (oracle, result) {
        (0, _) => Some(1.0),
        (_, 0) => None,
        (o, r) => Some(o as f64 / r as f64),
    }
}

fn ratio_min(oracle: usize, result: usize) -> Option<f64> {
    match (oracle, result) {
        (0, 0) => Some(1.0),
        (0, _) => None,
        (o, r) => Some(r as f64 / o as f64),
    }
}

pub struct SolveColoringArgs {
    pub input: std::path::PathBuf,
    pub r: f64,
    pub seed: u64,
    pub inner_trials: u32,
    pub format: OutputFormat,
    pub force_oracle: bool,
}

pub fn solve_coloring(args: &SolveColoringArgs) -> CliResult<String> {
    let text = read_input(&args.input)?;
    let g = match parse_input(&text)? {
        ParsedInput::G(g) => g,
        _ => return Err(CliError::input("solve-coloring expects a DIMACS .col graph")),
    };
    let instance = args.input.display().to_string();
    let (coloring, stats) =
        coloring::chr_approx_wrapped_with(&g, args.r, args.seed, args.inner_trials)?;
    let oracle = if g.alive_count() <= ORACLE_CAP_CHI {
        Some(chromatic_bruteforce(&g)?)
    } else if args.force_oracle {
        Some(optcol(&g).num_classes())
    } else {
        None
    };
    let records = vec![BenchRecord {
        instance: instance.clone(),
        generator: format!("file:{instance}"),
        solver: "chr_approx_wrapped".into(),
        p: None,
        d: None,
        leaf: None,
        trials: Some(args.inner_trials),
        seed: Some(args.seed),
        result_size: Some(coloring.num_classes()),
        oracle,
        ratio: oracle.and_then(|o| ratio_min(o, coloring.num_classes())),
        nodes: Some(stats.nodes as f64),
        node_bound: None,
        elapsed_us: stats.elapsed.as_micros() as u64,
        error: None,
    }];
    emit_records(&records, args.format)
}

pub struct SolveVcArgs {
    pub input: std::path::PathBuf,
    pub d: usize,
    pub leaf: String,
    pub format: OutputFormat,
    pub force_oracle: bool,
}

pub fn solve_vc(args: &SolveVcArgs) -> CliResult<String> {
    let text = read_input(&args.input)?;
    let h = match parse_input(&text)? {
        ParsedInput::H(h) => h,
        ParsedInput::G(g) => Hypergraph::from_graph(&g),
        ParsedInput::C(_) => {
            return Err(CliError::input("solve-vc expects a graph or hypergraph"))
        }
    };
    let instance = args.input.display().to_string();
    let leaf = VcLeaf::by_name(&args.leaf)?;
    let start = Instant::now();
    let cover = vc_pipeline(&h, args.d, leaf)?;
    let elapsed = start.elapsed();
    let oracle =
        (h.n() <= ORACLE_CAP_IS_VC || args.force_oracle).then(|| exact_vc(&h).len());
    let records = vec![BenchRecord {
        instance: instance.clone(),
        generator: format!("file:{instance}"),
        solver: "vc_pipeline".into(),
        p: None,
        d: Some(args.d),
        leaf: Some(args.leaf.clone()),
        trials: None,
        seed: None,
        result_size: Some(cover.len()),
        oracle,
        ratio: oracle.and_then(|o| ratio_min(o, cover.len())),
        nodes: None,
        node_bound: None,
        elapsed_us: elapsed.as_micros() as u64,
        error: None,
    }];
    emit_records(&records, args.format)
}

pub fn reduce_fglss(input: &Path, out: &Path, labels: &Path) -> CliResult<()> {
    let text = read_input(input)?;
    let csp = match parse_input(&text)? {
        ParsedInput::C(c) => c,
        _ => return Err(CliError::input("reduce-fglss expects a `p csp` file")),
    };
    let fg = fglss_reduce(&csp);
    fs::write(out, emit_dimacs_col(&fg.graph))?;
    fs::write(labels, emit_labels(&fg))?;
    Ok(())
}

pub fn bench(suite_path: &Path, out: &Path, force_oracle: bool) -> CliResult<()> {
    let text = read_input(suite_path)?;
    let entries = suite::parse_suite(&text)?;
    let records = suite::run_suite(&entries, force_oracle);
    let csv = records_to_csv(&records).map_err(|e| CliError::input(format!("csv: {e}")))?;
    fs::write(out, csv)?;
    let flagged = records
        .iter()
        .filter(|r| {
            matches!((r.nodes, r.node_bound), (Some(n), Some(b)) if n > b)
        })
        .count();
    eprintln!(
        "bench: {} rows ({} errors, {} rows with mean nodes above node_bound)",
        records.len(),
        records.iter().filter(|r| r.error.is_some()).count(),
        flagged
    );
    Ok(())
}

/// Suite entry helper used by the acceptance tests.
pub fn entry(id: &str, generator: suite::GeneratorSpec, solver: SolverSpec) -> SuiteEntry {
    SuiteEntry {
        id: id.to_string(),
        generator,
        solver,
    }
}
