use clap::{Parser, Subcommand, ValueEnum};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use xta_cli::commands::{self, CliError, OutputFormat};
use xta_core::*;

/// Benchmark CLI for exponential-time approximation solvers:
/// randomized sparsifying branching for independent set, iterative
/// peeling for coloring, sparsify-then-approximate vertex cover, and
/// the FGLSS CSP-to-graph reduction.
///
/// File formats: DIMACS `.col` graphs (`p edge n m`, `e u v`),
/// hypergraphs (`p hedge n m k`, `h v1 .. vj`), CSPs (`p csp n m`, then
/// per predicate `s v1 .. vq` followed by `a b1 .. bq` accepting
/// lines). All indices are 1-based in files. Set XTA_THREADS to cap
/// bench workers (0 = auto).
#[derive(Parser)]
#[command(name = "xta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file from a seeded random model.
    Gen {
        #[command(subcommand)]
        model: GenModel,
    },
    /// Approximate a maximum independent set by randomized branching.
    SolveIs {
        #[arg(long)]
        input: PathBuf,
        /// Block count for the partition baseline.
        #[arg(long)]
        r: Option<usize>,
        /// Branch-probability denominator (include-branch explored with
        /// probability 1/p).
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        /// Degree threshold: branch while some vertex has degree >= d.
        #[arg(long, default_value_t = 4)]
        d: usize,
        #[arg(long, default_value = "exact")]
        leaf: String,
        #[arg(long, default_value_t = 1)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "none")]
        baseline: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Compute oracle optima even above the size caps.
        #[arg(long)]
        force_oracle: bool,
    },
    /// Color a graph by iterative peeling; certifies r * chi(G) colors.
    /// The peeling parameter must exceed r0 + 2, where r0 ~ 1.5596 is
    /// the smallest supported inner parameter.
    SolveColoring {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 6.0)]
        r: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Boosting trials per peeled class.
        #[arg(long, default_value_t = 1)]
        inner_trials: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        force_oracle: bool,
    },
    /// Cover a (hyper)graph via sparsification plus a leaf cover solver.
    SolveVc {
        #[arg(long)]
        input: PathBuf,
        /// Sparsifier degree threshold (>= 2).
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Residual solver: exact or matching.
        #[arg(long, default_value = "exact")]
        leaf: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        force_oracle: bool,
    },
    /// Apply the FGLSS reduction to a CSP, emitting a DIMACS graph and
    /// a `vertex predicate bits` label sidecar.
    ReduceFglss {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        labels: PathBuf,
    },
    /// Run a suite file (one JSON entry per line) and write a CSV.
    Bench {
        #[arg(long)]
        suite: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        force_oracle: bool,
    },
}

#[derive(Subcommand)]
enum GenModel {
    /// Erdos-Renyi G(n, p).
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// G(n, p) with a planted independent set on vertices 1..=s.
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Random hypergraph with m edges of size at most k.
    Hyper {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Random Boolean CSP with m predicates of the given arity and
    /// accepting-set size.
    Csp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        acc: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> std::result::Result<(), CliError> {
    match cli.command {
        Command::Gen { model } => {
            let (out, text) = match model {
                GenModel::Gnp { n, p, seed, out } => (out, emit_dimacs_col(&gen_gnp(n, p, seed)?)),
                GenModel::Planted { n, s, p, seed, out } => {
                    let (g, planted) = gen_planted_is(n, s, p, seed)?;
                    let mut text = format!(
                        "c planted{}\n",
                        planted
                            .iter()
                            .map(|v| format!(" {}", v + 1))
                            .collect::<String>()
                    );
                    text.push_str(&emit_dimacs_col(&g));
                    (out, text)
                }
                GenModel::Hyper { n, m, k, seed, out } => {
                    (out, emit_hypergraph(&gen_random_hypergraph(n, m, k, seed)?))
                }
                GenModel::Csp {
                    n,
                    m,
                    arity,
                    acc,
                    seed,
                    out,
                } => (out, emit_csp(&gen_random_csp(n, m, arity, acc, seed)?)),
            };
            fs::write(&out, text)?;
            Ok(())
        }
        Command::SolveIs {
            input,
            r,
            p,
            d,
            leaf,
            trials,
            seed,
            baseline,
            format,
            force_oracle,
        } => {
            let out = commands::solve_is(&commands::SolveIsArgs {
                input,
                r,
                p,
                d,
                leaf,
                trials,
                seed,
                baseline,
                format: format.into(),
                force_oracle,
            })?;
            print!("{out}");
            Ok(())
        }
        Command::SolveColoring {
            input,
            r,
            seed,
            inner_trials,
            format,
            force_oracle,
        } => {
            let out = commands::solve_coloring(&commands::SolveColoringArgs {
                input,
                r,
                seed,
                inner_trials,
                format: format.into(),
                force_oracle,
            })?;
            print!("{out}");
            Ok(())
        }
        Command::SolveVc {
            input,
            d,
            leaf,
            format,
            force_oracle,
        } => {
            let out = commands::solve_vc(&commands::SolveVcArgs {
                input,
                d,
                leaf,
                format: format.into(),
                force_oracle,
            })?;
            print!("{out}");
            Ok(())
        }
        Command::ReduceFglss { input, out, labels } => {
            commands::reduce_fglss(&input, &out, &labels)
        }
        Command::Bench {
            suite,
            out,
            force_oracle,
        } => commands::bench(&suite, &out, force_oracle),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code as u8)
        }
    }
}
