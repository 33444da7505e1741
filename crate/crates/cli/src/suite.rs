//! Suite files and the benchmark runner: one JSON object per line, each
//! pairing a generator with a solver configuration. Rows may execute
//! concurrently (capped by XTA_THREADS) but are emitted in suite order.

use crate::record::BenchRecord;
use serde::{Deserialize, Serialize};
use std::time::Instant;
use xta_core::*;

pub const ORACLE_CAP_IS_VC: usize = 25;
pub const ORACLE_CAP_CHI: usize = 12;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Gnp { n: usize, p: f64, seed: u64 },
    Planted { n: usize, s: usize, p: f64, seed: u64 },
    Hyper { n: usize, m: usize, k: usize, seed: u64 },
    Csp { n_vars: usize, m: usize, arity: usize, acc: usize, seed: u64 },
}

impl GeneratorSpec {
    pub fn describe(&self) -> String {
        match self {
            GeneratorSpec::Gnp { n, p, seed } => format!("gnp n={n} p={p} seed={seed}"),
            GeneratorSpec::Planted { n, s, p, seed } => {
                format!("planted n={n} s={s} p={p} seed={seed}")
            }
            GeneratorSpec::Hyper { n, m, k, seed } => {
                format!("hyper n={n} m={m} k={k} seed={seed}")
            }
            GeneratorSpec::Csp {
                n_vars,
                m,
                arity,
                acc,
                seed,
            } => format!("csp n={n_vars} m={m} arity={arity} acc={acc} seed={seed}"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolverSpec {
    BranchIs {
        p: f64,
        d: usize,
        leaf: String,
        trials: u32,
        seed: u64,
    },
    Partition {
        r: usize,
    },
    Coloring {
        r: f64,
        seed: u64,
        #[serde(default = "default_inner_trials")]
        inner_trials: u32,
    },
    Vc {
        d: usize,
        leaf: String,
    },
}

fn default_inner_trials() -> u32 {
    1
}

impl SolverSpec {
    pub fn name(&self) -> &'static str {
        match self {
            SolverSpec::BranchIs { .. } => "branch_is",
            SolverSpec::Partition { .. } => "partition_baseline",
            SolverSpec::Coloring { .. } => "chr_approx_wrapped",
            SolverSpec::Vc { .. } => "vc_pipeline",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub id: String,
    pub generator: GeneratorSpec,
    pub solver: SolverSpec,
}

/// Parses one JSON object per non-empty line.
pub fn parse_suite(text: &str) -> Result<Vec<SuiteEntry>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(idx, line)| {
            serde_json::from_str(line)
                .map_err(|e| Error::parse(idx + 1, format!("bad suite entry: {e}")))
        })
        .collect()
}

enum Instance {
    G(Graph),
    H(Hypergraph),
}

fn build_instance(spec: &GeneratorSpec) -> Result<Instance> {
    Ok(match spec {
        GeneratorSpec::Gnp { n, p, seed } => Instance::G(gen_gnp(*n, *p, *seed)?),
        GeneratorSpec::Planted { n, s, p, seed } => {
            Instance::G(gen_planted_is(*n, *s, *p, *seed)?.0)
        }
        GeneratorSpec::Hyper { n, m, k, seed } => {
            Instance::H(gen_random_hypergraph(*n, *m, *k, *seed)?)
        }
        GeneratorSpec::Csp {
            n_vars,
            m,
            arity,
            acc,
            seed,
        } => Instance::G(fglss_reduce(&gen_random_csp(*n_vars, *m, *arity, *acc, *seed)?).graph),
    })
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

/// Runs one entry; errors become error rows upstream.
pub fn run_entry(entry: &SuiteEntry, force_oracle: bool) -> Result<BenchRecord> {
    let instance = build_instance(&entry.generator)?;
    let mut rec = BenchRecord {
        instance: entry.id.clone(),
        generator: entry.generator.describe(),
        solver: entry.solver.name().to_string(),
        p: None,
        d: None,
        leaf: None,
        trials: None,
        seed: None,
        result_size: None,
        oracle: None,
        ratio: None,
        nodes: None,
        node_bound: None,
        elapsed_us: 0,
        error: None,
    };
    match (&entry.solver, instance) {
        (
            SolverSpec::BranchIs {
                p,
                d,
                leaf,
                trials,
                seed,
            },
            Instance::G(g),
        ) => {
            let cfg = SolveConfig {
                p: *p,
                d: *d,
                leaf: LeafKind::by_name(leaf)?,
                trials: *trials,
                seed: *seed,
            };
            let (set, stats) = boosted_is(&g, &cfg)?;
            rec.p = Some(*p);
            rec.d = Some(*d);
            rec.leaf = Some(leaf.clone());
            rec.trials = Some(*trials);
            rec.seed = Some(*seed);
            rec.result_size = Some(set.len());
            rec.nodes = Some(stats.nodes as f64 / *trials as f64);
            rec.node_bound = node_bound(g.alive_count(), *d, *p).ok();
            rec.elapsed_us = stats.elapsed.as_micros() as u64;
            if g.alive_count() <= ORACLE_CAP_IS_VC || force_oracle {
                let alpha = exact_mis(&g).len();
                rec.oracle = Some(alpha);
                rec.ratio = ratio_is(alpha, set.len());
            }
        }
        (SolverSpec::Partition { r }, Instance::G(g)) => {
            let start = Instant::now();
            let set = partition_baseline_is(&g, *r)?;
            rec.elapsed_us = start.elapsed().as_micros() as u64;
            rec.result_size = Some(set.len());
            if g.alive_count() <= ORACLE_CAP_IS_VC || force_oracle {
                let alpha = exact_mis(&g).len();
                rec.oracle = Some(alpha);
                rec.ratio = ratio_is(alpha, set.len());
            }
        }
        (
            SolverSpec::Coloring {
                r,
                seed,
                inner_trials,
            },
            Instance::G(g),
        ) => {
            let (coloring, stats) =
                coloring::chr_approx_wrapped_with(&g, *r, *seed, *inner_trials)?;
            rec.seed = Some(*seed);
            rec.trials = Some(*inner_trials);
            rec.result_size = Some(coloring.num_classes());
            rec.nodes = Some(stats.nodes as f64);
            rec.elapsed_us = stats.elapsed.as_micros() as u64;
            if g.alive_count() <= ORACLE_CAP_CHI {
                let chi = chromatic_bruteforce(&g)?;
                rec.oracle = Some(chi);
                rec.ratio = ratio_min(chi, coloring.num_classes());
            } else if force_oracle {
                let chi = optcol(&g).num_classes();
                rec.oracle = Some(chi);
                rec.ratio = ratio_min(chi, coloring.num_classes());
            }
        }
        (SolverSpec::Vc { d, leaf }, instance) => {
            let h = match instance {
                Instance::H(h) => h,
                Instance::G(g) => Hypergraph::from_graph(&g),
            };
            let leaf_kind = VcLeaf::by_name(leaf)?;
            let start = Instant::now();
            let cover = vc_pipeline(&h, *d, leaf_kind)?;
            rec.elapsed_us = start.elapsed().as_micros() as u64;
            rec.d = Some(*d);
            rec.leaf = Some(leaf.to_string());
            rec.result_size = Some(cover.len());
            if h.n() <= ORACLE_CAP_IS_VC || force_oracle {
                let opt = exact_vc(&h).len();
                rec.oracle = Some(opt);
                rec.ratio = ratio_min(opt, cover.len());
            }
        }
        (_, Instance::H(_)) => {
            return Err(Error::contract(format!(
                "solver {} requires a graph instance",
                entry.solver.name()
            )));
        }
    }
    Ok(rec)
}

fn thread_count() -> Option<usize> {
    match std::env::var("XTA_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(0) | Err(_) => None,
            Ok(n) => Some(n),
        },
        Err(_) => None,
    }
}

/// One record per entry, in suite order; per-entry failures become
/// error rows and the run continues.
pub fn run_suite(entries: &[SuiteEntry], force_oracle: bool) -> Vec<BenchRecord> {
    use rayon::prelude::*;
    let run_all = || {
        entries
            .par_iter()
            .map(|e| {
                run_entry(e, force_oracle).unwrap_or_else(|err| {
                    BenchRecord::error_row(
                        &e.id,
                        &e.generator.describe(),
                        e.solver.name(),
                        err.to_string(),
                    )
                })
            })
            .collect::<Vec<_>>()
    };
    match thread_count() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(run_all),
        None => run_all(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::records_to_csv;

    #[test]
    fn parse_and_run_minimal_suite() {
        let text = concat!(
            r#"{"id":"a","generator":{"kind":"gnp","n":10,"p":0.4,"seed":1},"solver":{"kind":"branch_is","p":2.0,"d":4,"leaf":"exact","trials":2,"seed":3}}"#,
            "\n",
            r#"{"id":"b","generator":{"kind":"hyper","n":8,"m":6,"k":2,"seed":1},"solver":{"kind":"vc","d":3,"leaf":"matching"}}"#,
            "\n"
        );
        let entries = parse_suite(text).unwrap();
        let records = run_suite(&entries, false);
        assert_eq!(records.len(), 2);
        assert!(records.iter().all(|r| r.error.is_none()));
        assert!(records[0].oracle.is_some());
        assert!(records[0].ratio.unwrap() >= 1.0);
        let csv = records_to_csv(&records).unwrap();
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn mismatched_solver_becomes_error_row() {
        let text = r#"{"id":"x","generator":{"kind":"hyper","n":6,"m":4,"k":2,"seed":1},"solver":{"kind":"partition","r":2}}"#;
        let entries = parse_suite(text).unwrap();
        let records = run_suite(&entries, false);
        assert_eq!(records.len(), 1);
        assert!(records[0].error.is_some());
    }

    #[test]
    fn suite_is_deterministic_apart_from_elapsed() {
        let text = r#"{"id":"a","generator":{"kind":"planted","n":20,"s":6,"p":0.5,"seed":9},"solver":{"kind":"branch_is","p":2.0,"d":4,"leaf":"greedy","trials":4,"seed":11}}"#;
        let entries = parse_suite(text).unwrap();
        let mut a = run_suite(&entries, false);
        let mut b = run_suite(&entries, false);
        for r in a.iter_mut().chain(b.iter_mut()) {
            r.elapsed_us = 0;
        }
        assert_eq!(a, b);
    }

    #[test]
    fn bad_suite_line_reports_line_number() {
        let err = parse_suite("\n{not json}\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn csp_generator_feeds_is_solver() {
        let text = r#"{"id":"c","generator":{"kind":"csp","n_vars":4,"m":5,"arity":2,"acc":2,"seed":2},"solver":{"kind":"branch_is","p":2.0,"d":4,"leaf":"exact","trials":1,"seed":0}}"#;
        let entries = parse_suite(text).unwrap();
        let records = run_suite(&entries, false);
        assert!(records[0].error.is_none());
        // alpha = val(phi) <= m
        assert!(records[0].oracle.unwrap() <= 5);
    }
}
