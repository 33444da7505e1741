//! Randomized sparsifying branching for maximum independent set: while
//! some vertex has degree >= d, the include-branch is explored only with
//! probability 1/p; below the threshold a pluggable leaf solver takes
//! over. Includes the 2^(lambda n) node-count bound, a best-of-trials
//! boosting wrapper, and the block-partition baseline.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::leaf::{exact_mis, LeafIsSolver, LeafKind};
use std::time::{Duration, Instant};

#[derive(Clone, Debug)]
pub struct SolveConfig {
    /// Branch-probability denominator: include-branch explored with
    /// probability 1/p.
    pub p: f64,
    /// Degree threshold: branch while some alive vertex has degree >= d.
    pub d: usize,
    pub leaf: LeafKind,
    pub trials: u32,
    pub seed: u64,
}

impl SolveConfig {
    pub fn validate(&self) -> Result<()> {
        if self.p < 1.0 {
            return Err(Error::contract(format!("p = {} must be >= 1", self.p)));
        }
        if self.d < 1 {
            return Err(Error::contract("d must be >= 1"));
        }
        if self.trials < 1 {
            return Err(Error::contract("trials must be >= 1"));
        }
        Ok(())
    }

    /// Ratio certified for this configuration: max(p, leaf ratio at
    /// degree d-1), since leaf instances have maximum degree <= d-1.
    pub fn certified_ratio(&self) -> f64 {
        self.p.max(self.leaf.advertised_ratio(self.d.saturating_sub(1)))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Recursive invocations, leaves included.
    pub nodes: u64,
    /// Leaf-solver invocations.
    pub leaves: u64,
    /// Random draws that came up true.
    pub include_branches_taken: u64,
    pub elapsed: Duration,
}

impl RunStats {
    pub fn merge(&mut self, other: &RunStats) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.include_branches_taken += other.include_branches_taken;
        self.elapsed += other.elapsed;
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Counter-based RNG keyed by (master seed, trial index); node `i`
/// always sees the same 64-bit word regardless of scheduling.
#[derive(Clone, Copy, Debug)]
pub struct NodeRng {
    key: u64,
}

impl NodeRng {
    pub fn new(seed: u64, trial: u64) -> Self {
        NodeRng {
            key: splitmix64(seed ^ splitmix64(trial.wrapping_mul(0xd1342543de82ef95))),
        }
    }

    /// Bernoulli(1/p) for node `node_index`. Realized as a 64-bit
    /// uniform compared against floor(2^64/p); bias < 2^-60.
    pub fn draw(&self, node_index: u64, p: f64) -> bool {
        if p <= 1.0 {
            return true;
        }
        let u = splitmix64(self.key ^ node_index.wrapping_mul(0xa076_1d64_78bd_642f));
        let threshold = (2f64.powi(64) / p) as u64;
        u < threshold
    }
}

/// lambda = log2(4d/p)/d, the exponent in the 2^(lambda n) expected
/// node bound. Requires d >= 2p.
pub fn compute_lambda(d: usize, p: f64) -> Result<f64> {
    if (d as f64) < 2.0 * p {
        return Err(Error::contract(format!(
            "d = {d} < 2p = {} violates the d(r) >= 2r hypothesis",
            2.0 * p
        )));
    }
    Ok((4.0 * d as f64 / p).log2() / d as f64)
}

/// Expected node-count bound 2^(lambda * n).
pub fn node_bound(n: usize, d: usize, p: f64) -> Result<f64> {
    Ok(2f64.powf(compute_lambda(d, p)? * n as f64))
}

/// One run of the randomized branching algorithm. The returned set is
/// always independent; its expected size is at least
/// alpha(G) / max(p, leaf ratio at d-1).
pub fn branch_is(g: &Graph, cfg: &SolveConfig) -> Result<(Bitset, RunStats)> {
    cfg.validate()?;
    branch_is_trial(g, cfg, 0)
}

fn branch_is_trial(g: &Graph, cfg: &SolveConfig, trial: u64) -> Result<(Bitset, RunStats)> {
    let rng = NodeRng::new(cfg.seed, trial);
    let mut stats = RunStats::default();
    let start = Instant::now();
    let mut work = g.clone();
    let set = branch_rec(&mut work, cfg, &rng, &mut stats);
    stats.elapsed = start.elapsed();
    debug_assert!(g.is_independent(&set));
    Ok((set, stats))
}

fn branch_rec(g: &mut Graph, cfg: &SolveConfig, rng: &NodeRng, stats: &mut RunStats) -> Bitset {
    let node_index = stats.nodes;
    stats.nodes += 1;
    match g.max_degree_vertex() {
        Some((v, deg)) if deg >= cfg.d => {
            let saved = g.alive().clone();
            if rng.draw(node_index, cfg.p) {
                stats.include_branches_taken += 1;
                g.remove_vertex(v);
                let excl = branch_rec(g, cfg, rng, stats);
                g.set_alive(saved.clone());

                g.remove_closed_neighborhood(v);
                let mut incl = branch_rec(g, cfg, rng, stats);
                incl.insert(v);
                g.set_alive(saved);

                if incl.len() > excl.len() {
                    incl
                } else {
                    excl
                }
            } else {
                g.remove_vertex(v);
                let s = branch_rec(g, cfg, rng, stats);
                g.set_alive(saved);
                s
            }
        }
        _ => {
            stats.leaves += 1;
            cfg.leaf.solve(g)
        }
    }
}

/// Best of `cfg.trials` independent runs, trial `t` seeded
/// `cfg.seed ^ t`. Ties keep the earliest trial, so the result is
/// schedule-independent.
pub fn boosted_is(g: &Graph, cfg: &SolveConfig) -> Result<(Bitset, RunStats)> {
    cfg.validate()?;
    let mut best: Option<Bitset> = None;
    let mut agg = RunStats::default();
    for t in 0..cfg.trials as u64 {
        let mut trial_cfg = cfg.clone();
        trial_cfg.seed = cfg.seed ^ t;
        let (set, stats) = branch_is_trial(g, &trial_cfg, t)?;
        agg.merge(&stats);
        if best.as_ref().map_or(true, |b| set.len() > b.len()) {
            best = Some(set);
        }
    }
    Ok((best.expect("trials >= 1"), agg))
}

/// The partition baseline: split the alive vertices into r contiguous
/// index blocks of near-equal size, solve each block exactly, return
/// the largest. Guarantees |result| >= ceil(alpha/r) by pigeonhole.
pub fn partition_baseline_is(g: &Graph, r: usize) -> Result<Bitset> {
    let n = g.alive_count();
    if r < 1 || r > n {
        return Err(Error::contract(format!(
            "partition count r = {r} outside 1..={n}"
        )));
    }
    let alive: Vec<usize> = g.alive().iter().collect();
    let base = n / r;
    let extra = n % r;
    let mut best = Bitset::new(g.n());
    let mut start = 0usize;
    for i in 0..r {
        let size = base + usize::from(i < extra);
        let block = Bitset::from_indices(g.n(), alive[start..start + size].iter().copied());
        start += size;
        let sub = g.induced_subgraph(&block)?;
        let s = exact_mis(&sub);
        if s.len() > best.len() {
            best = s;
        }
    }
    Ok(best)
}
