//! Sparsify-then-approximate pipeline for k-hypergraph vertex cover.
//! The sparsifier branches on high-degree vertices until every residual
//! instance has degree below the threshold, exposing the branch family
//! with its cover-equivalence contract.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::leaf::{exact_vc, matching_vc};

/// One leaf of the sparsification tree: `forced` is already committed
/// to the cover, `residual` has maximum degree below the threshold.
#[derive(Clone, Debug)]
pub struct SparsifiedBranch {
    pub forced: Bitset,
    pub residual: Hypergraph,
}

#[derive(Debug)]
pub struct SparsifiedFamily {
    pub branches: Vec<SparsifiedBranch>,
    pub d: usize,
}

impl SparsifiedFamily {
    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }
}

/// Cover-solver applied to each residual instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VcLeaf {
    Exact,
    Matching,
}

impl VcLeaf {
    pub fn by_name(name: &str) -> Result<VcLeaf> {
        match name {
            "exact" => Ok(VcLeaf::Exact),
            "matching" => Ok(VcLeaf::Matching),
            other => Err(Error::contract(format!(
                "unknown vertex-cover leaf `{other}` (expected exact or matching)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            VcLeaf::Exact => "exact",
            VcLeaf::Matching => "matching",
        }
    }

    pub fn solve(&self, h: &Hypergraph) -> Bitset {
        match self {
            VcLeaf::Exact => exact_vc(h),
            VcLeaf::Matching => matching_vc(h),
        }
    }
}

/// Branches on vertices of degree >= d: either the vertex joins the
/// cover (incident edges drop) or it is excluded (it leaves every edge;
/// a unit edge forces its vertex, an emptied edge kills the branch).
/// Every surviving residual has maximum degree < d, and X covers the
/// input iff some branch has X >= forced with X \ forced covering the
/// residual.
pub fn sparsify_vc(h: &Hypergraph, d: usize) -> Result<SparsifiedFamily> {
    if d < 2 {
        return Err(Error::contract(format!("degree threshold d = {d} must be >= 2")));
    }
    let mut branches = Vec::new();
    let forced = Bitset::new(h.n());
    sparsify_rec(h.n(), h.k(), h.edges().to_vec(), forced, d, &mut branches);
    Ok(SparsifiedFamily { branches, d })
}

fn sparsify_rec(
    n: usize,
    k: usize,
    mut edges: Vec<Bitset>,
    mut forced: Bitset,
    d: usize,
    out: &mut Vec<SparsifiedBranch>,
) {
    // Unit propagation to fixpoint; an emptied edge makes the branch
    // infeasible.
    loop {
        if edges.iter().any(|e| e.is_empty()) {
            return;
        }
        match edges.iter().find(|e| e.len() == 1) {
            Some(unit) => {
                let v = unit.first().expect("unit edge");
                forced.insert(v);
                edges.retain(|e| !e.contains(v));
            }
            None => break,
        }
    }

    let mut pick: Option<(usize, usize)> = None;
    for v in 0..n {
        let deg = edges.iter().filter(|e| e.contains(v)).count();
        match pick {
            Some((_, best)) if best >= deg => {}
            _ => pick = Some((v, deg)),
        }
    }
    match pick {
        Some((v, deg)) if deg >= d => {
            // Branch A: v joins the cover.
            let kept: Vec<Bitset> = edges.iter().filter(|e| !e.contains(v)).cloned().collect();
            let mut forced_a = forced.clone();
            forced_a.insert(v);
            sparsify_rec(n, k, kept, forced_a, d, out);

            // Branch B: v excluded from the cover; edges shrink.
            let shrunk: Vec<Bitset> = edges
                .iter()
                .map(|e| {
                    let mut e2 = e.clone();
                    e2.remove(v);
                    e2
                })
                .collect();
            sparsify_rec(n, k, shrunk, forced, d, out);
        }
        _ => out.push(SparsifiedBranch {
            forced,
            residual: Hypergraph::from_edge_sets(n, k, edges),
        }),
    }
}

/// Sparsify, solve every residual with the chosen leaf, return the best
/// forced-plus-leaf cover (ties by branch index). With the exact leaf
/// this is a minimum cover; with the matching leaf it is a
/// k-approximation.
pub fn vc_pipeline(h: &Hypergraph, d: usize, leaf: VcLeaf) -> Result<Bitset> {
    let family = sparsify_vc(h, d)?;
    let mut best: Option<Bitset> = None;
    for branch in &family.branches {
        let mut cover = branch.forced.clone();
        cover.union_with(&leaf.solve(&branch.residual));
        if best.as_ref().map_or(true, |b| cover.len() < b.len()) {
            best = Some(cover);
        }
    }
    let best = best.expect("the all-vertices cover always survives in some branch");
    debug_assert!(h.is_cover(&best));
    Ok(best)
}

/// The ratio the pipeline would certify with the SDP-based bounded
/// degree cover algorithm at its leaves:
/// k - k(k-1) * ln ln Delta / ln Delta. Reporting only.
pub fn halperin_gap_estimate(k: usize, delta: usize) -> Result<f64> {
    if delta < 16 {
        return Err(Error::contract(format!(
            "halperin_gap_estimate requires Delta >= 16, got {delta}"
        )));
    }
    let kf = k as f64;
    let ln_delta = (delta as f64).ln();
    Ok(kf - kf * (kf - 1.0) * ln_delta.ln() / ln_delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::hypergraph::gen_random_hypergraph;

    fn star() -> Hypergraph {
        let g = Graph::with_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        Hypergraph::from_graph(&g)
    }

    #[test]
    fn sparsify_star() {
        let fam = sparsify_vc(&star(), 3).unwrap();
        assert_eq!(fam.branch_count(), 2);
        assert_eq!(fam.branches[0].forced, Bitset::singleton(6, 0));
        assert!(fam.branches[0].residual.edges().is_empty());
        assert_eq!(
            fam.branches[1].forced,
            Bitset::from_indices(6, 1..6)
        );
        assert!(fam.branches[1].residual.edges().is_empty());
    }

    #[test]
    fn sparsify_identity_when_sparse() {
        let h = star();
        let fam = sparsify_vc(&h, 10).unwrap();
        assert_eq!(fam.branch_count(), 1);
        assert!(fam.branches[0].forced.is_empty());
        assert_eq!(fam.branches[0].residual.edges(), h.edges());
    }

    #[test]
    fn sparsify_triangle_min_cover() {
        let g = Graph::with_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = Hypergraph::from_graph(&g);
        let fam = sparsify_vc(&h, 2).unwrap();
        let best = fam
            .branches
            .iter()
            .map(|b| b.forced.len() + exact_vc(&b.residual).len())
            .min()
            .unwrap();
        assert_eq!(best, 2);
    }

    #[test]
    fn residual_degrees_below_threshold() {
        for seed in 0..20 {
            let h = gen_random_hypergraph(12, 18, 3, seed).unwrap();
            let fam = sparsify_vc(&h, 3).unwrap();
            for b in &fam.branches {
                assert!(b.residual.max_degree() < 3);
            }
        }
    }

    #[test]
    fn pipeline_examples() {
        let p3 = Hypergraph::from_graph(&Graph::with_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(vc_pipeline(&p3, 2, VcLeaf::Exact).unwrap().len(), 1);

        let mut single = Hypergraph::new(3, 3);
        single.add_edge(&[0, 1, 2]).unwrap();
        assert!(vc_pipeline(&single, 2, VcLeaf::Matching).unwrap().len() <= 3);
    }

    #[test]
    fn pipeline_exact_matches_oracle() {
        for seed in 0..15 {
            let h = gen_random_hypergraph(11, 14, 3, seed).unwrap();
            let cover = vc_pipeline(&h, 3, VcLeaf::Exact).unwrap();
            assert!(h.is_cover(&cover));
            assert_eq!(cover.len(), exact_vc(&h).len(), "seed {seed}");
        }
    }

    #[test]
    fn pipeline_matching_within_k() {
        for seed in 0..15 {
            let h = gen_random_hypergraph(11, 14, 3, seed).unwrap();
            let cover = vc_pipeline(&h, 3, VcLeaf::Matching).unwrap();
            assert!(h.is_cover(&cover));
            assert!(cover.len() <= 3 * exact_vc(&h).len());
        }
    }

    #[test]
    fn branch_count_non_increasing_in_d() {
        for seed in 0..10 {
            let h = gen_random_hypergraph(12, 18, 2, seed).unwrap();
            let counts: Vec<usize> = (2..7)
                .map(|d| sparsify_vc(&h, d).unwrap().branch_count())
                .collect();
            assert!(counts.windows(2).all(|w| w[0] >= w[1]), "{counts:?}");
        }
    }

    #[test]
    fn halperin_values() {
        let v = halperin_gap_estimate(2, 1 << 16).unwrap();
        assert!((v - 1.566).abs() < 1e-3, "{v}");
        // 2 - 2*ln(ln 16)/ln 16 = 2 - 2*1.01973/2.77259
        let v = halperin_gap_estimate(2, 16).unwrap();
        assert!((v - 1.26445).abs() < 1e-3, "{v}");
        assert!(halperin_gap_estimate(2, 15).is_err());
    }

    #[test]
    fn sparsify_rejects_small_d() {
        assert!(sparsify_vc(&star(), 1).is_err());
    }
}
