//! Leaf solvers: the algorithms invoked once sparsification has driven
//! the maximum degree below the threshold, plus exact oracles used by
//! the test suites.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// Pluggable bounded-degree independent-set solver.
pub trait LeafIsSolver {
    fn solve(&self, g: &Graph) -> Bitset;
    /// Certified approximation ratio on graphs of maximum degree `d`.
    fn advertised_ratio(&self, d: usize) -> f64;
    fn name(&self) -> &'static str;
}

/// The built-in leaf backends, selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafKind {
    Exact,
    Greedy,
    Enum,
}

impl LeafKind {
    pub fn by_name(name: &str) -> Result<LeafKind> {
        match name {
            "exact" => Ok(LeafKind::Exact),
            "greedy" => Ok(LeafKind::Greedy),
            "enum" => Ok(LeafKind::Enum),
            other => Err(Error::contract(format!(
                "unknown leaf solver `{other}` (expected exact, greedy or enum)"
            ))),
        }
    }
}

impl LeafIsSolver for LeafKind {
    fn solve(&self, g: &Graph) -> Bitset {
        match self {
            LeafKind::Exact => exact_mis(g),
            LeafKind::Greedy => greedy_is(g),
            LeafKind::Enum => enum_max_is(g),
        }
    }

    fn advertised_ratio(&self, d: usize) -> f64 {
        match self {
            LeafKind::Exact | LeafKind::Enum => 1.0,
            // Only the provable |IS| >= n/(d+1) bound is advertised.
            LeafKind::Greedy => (d + 1) as f64,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            LeafKind::Exact => "exact",
            LeafKind::Greedy => "greedy",
            LeafKind::Enum => "enum",
        }
    }
}

/// Greedy minimum-degree independent set: repeatedly take a minimum
/// alive-degree vertex (ties by index) and delete its closed
/// neighborhood. Guarantees |result| >= n/(maxdeg+1).
pub fn greedy_is(g: &Graph) -> Bitset {
    let mut work = g.clone();
    let mut result = Bitset::new(g.n());
    loop {
        let mut pick: Option<(usize, usize)> = None;
        for v in work.alive().iter() {
            let d = work.degree(v);
            match pick {
                Some((_, pd)) if pd <= d => {}
                _ => pick = Some((v, d)),
            }
        }
        match pick {
            Some((v, _)) => {
                result.insert(v);
                work.remove_closed_neighborhood(v);
            }
            None => return result,
        }
    }
}

/// Exact maximum independent set by include/exclude branching on a
/// maximum-degree vertex, with degree-<=1 vertices resolved greedily.
pub fn exact_mis(g: &Graph) -> Bitset {
    let mut work = g.clone();
    mis_rec(&mut work)
}

fn mis_rec(g: &mut Graph) -> Bitset {
    let mut chosen = Bitset::new(g.n());
    // Degree-<=1 vertices can always be taken, smallest index first.
    loop {
        let mut taken = false;
        for v in g.alive().clone().iter() {
            if g.degree(v) <= 1 {
                chosen.insert(v);
                g.remove_closed_neighborhood(v);
                taken = true;
                break;
            }
        }
        if !taken {
            break;
        }
    }
    let (v, _) = match g.max_degree_vertex() {
        Some(vd) => vd,
        None => return chosen,
    };
    let saved = g.alive().clone();

    g.remove_vertex(v);
    let excl = mis_rec(g);
    g.set_alive(saved.clone());

    g.remove_closed_neighborhood(v);
    let mut incl = mis_rec(g);
    incl.insert(v);
    g.set_alive(saved);

    let mut best = if incl.len() > excl.len() { incl } else { excl };
    best.union_with(&chosen);
    best
}

/// Lexicographically first independent set of size exactly `s`, or
/// `None` when no such set exists.
pub fn enumerate_is_of_size(g: &Graph, s: usize) -> Option<Bitset> {
    let alive: Vec<usize> = g.alive().iter().collect();
    let mut chosen = Bitset::new(g.n());
    fn rec(
        g: &Graph,
        alive: &[usize],
        start: usize,
        need: usize,
        chosen: &mut Bitset,
    ) -> bool {
        if need == 0 {
            return true;
        }
        if alive.len() - start < need {
            return false;
        }
        for i in start..alive.len() {
            let v = alive[i];
            if g.adjacency(v).intersects(chosen) {
                continue;
            }
            chosen.insert(v);
            if rec(g, alive, i + 1, need - 1, chosen) {
                return true;
            }
            chosen.remove(v);
        }
        false
    }
    if rec(g, &alive, 0, s, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Maximum independent set found by enumerating target sizes upward.
/// Same answer size as `exact_mis`; exists as the enumeration-style
/// leaf backend.
pub fn enum_max_is(g: &Graph) -> Bitset {
    let mut best = Bitset::new(g.n());
    let mut s = 1;
    while let Some(found) = enumerate_is_of_size(g, s) {
        best = found;
        s += 1;
    }
    best
}

/// Minimum-cardinality hypergraph vertex cover by branching on the
/// vertices of the first uncovered edge.
pub fn exact_vc(h: &Hypergraph) -> Bitset {
    let mut chosen = Bitset::new(h.n());
    let mut best = Bitset::full(h.n());
    vc_rec(h, &mut chosen, &mut best);
    best
}

fn vc_rec(h: &Hypergraph, chosen: &mut Bitset, best: &mut Bitset) {
    // Disjoint uncovered edges lower-bound the remaining work.
    let mut lb = 0usize;
    let mut touched = chosen.clone();
    let mut first_uncovered: Option<&Bitset> = None;
    for e in h.edges() {
        if e.intersects(chosen) {
            continue;
        }
        if first_uncovered.is_none() {
            first_uncovered = Some(e);
        }
        if !e.intersects(&touched) {
            lb += 1;
            touched.union_with(e);
        }
    }
    let edge = match first_uncovered {
        Some(e) => e,
        None => {
            if chosen.len() < best.len() {
                *best = chosen.clone();
            }
            return;
        }
    };
    if chosen.len() + lb >= best.len() {
        return;
    }
    for v in edge.clone().iter() {
        chosen.insert(v);
        vc_rec(h, chosen, best);
        chosen.remove(v);
    }
}

/// Maximal-matching style cover: take all vertices of the lowest-indexed
/// uncovered edge until everything is covered. A k-approximation.
pub fn matching_vc(h: &Hypergraph) -> Bitset {
    let mut cover = Bitset::new(h.n());
    for e in h.edges() {
        if !e.intersects(&cover) {
            cover.union_with(e);
        }
    }
    cover
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::gen_gnp;

    fn c5() -> Graph {
        Graph::with_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    pub fn petersen() -> Graph {
        // Outer C5, inner pentagram, spokes.
        Graph::with_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn greedy_edgeless_and_cycles() {
        assert_eq!(greedy_is(&Graph::new(4)).len(), 4);
        assert_eq!(greedy_is(&c5()).len(), 2);
        assert_eq!(greedy_is(&complete(6)).len(), 1);
    }

    #[test]
    fn greedy_result_is_independent_with_bound() {
        for seed in 0..30 {
            let g = gen_gnp(18, 0.4, seed).unwrap();
            let s = greedy_is(&g);
            assert!(g.is_independent(&s));
            let maxdeg = (0..g.n()).map(|v| g.degree(v)).max().unwrap();
            assert!(s.len() * (maxdeg + 1) >= g.n());
        }
    }

    #[test]
    fn exact_mis_known_graphs() {
        assert_eq!(exact_mis(&petersen()).len(), 4);
        assert_eq!(exact_mis(&complete(5)).len(), 1);
        assert_eq!(exact_mis(&c5()).len(), 2);
    }

    #[test]
    fn exact_mis_respects_alive_mask() {
        let mut g = petersen();
        g.remove_vertex(0);
        let s = exact_mis(&g);
        assert!(g.is_independent(&s));
        assert!(!s.contains(0));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_is_of_size(&c5(), 2),
            Some(Bitset::from_indices(5, [0, 2]))
        );
        assert_eq!(enumerate_is_of_size(&complete(4), 2), None);
        assert_eq!(
            enumerate_is_of_size(&complete(4), 0),
            Some(Bitset::new(4))
        );
    }

    #[test]
    fn enum_leaf_matches_exact() {
        for seed in 0..20 {
            let g = gen_gnp(12, 0.3, seed).unwrap();
            assert_eq!(enum_max_is(&g).len(), exact_mis(&g).len());
        }
    }

    #[test]
    fn exact_vc_path_and_hyperedge() {
        let p3 = Hypergraph::from_graph(
            &Graph::with_edges(3, &[(0, 1), (1, 2)]).unwrap(),
        );
        let c = exact_vc(&p3);
        assert_eq!(c.len(), 1);
        assert!(c.contains(1));

        let mut h = Hypergraph::new(3, 3);
        h.add_edge(&[0, 1, 2]).unwrap();
        assert_eq!(exact_vc(&h).len(), 1);
    }

    #[test]
    fn exact_vc_petersen_complements_mis() {
        let h = Hypergraph::from_graph(&petersen());
        assert_eq!(exact_vc(&h).len(), 6);
    }

    #[test]
    fn matching_vc_examples() {
        let p3 = Hypergraph::from_graph(
            &Graph::with_edges(3, &[(0, 1), (1, 2)]).unwrap(),
        );
        let c = matching_vc(&p3);
        assert_eq!(c, Bitset::from_indices(3, [0, 1]));

        let mut h = Hypergraph::new(3, 3);
        h.add_edge(&[0, 1, 2]).unwrap();
        assert_eq!(matching_vc(&h).len(), 3);

        // Perfect matching on 2m vertices: every vertex taken.
        let mut pm = Hypergraph::new(8, 2);
        for i in 0..4 {
            pm.add_edge(&[2 * i, 2 * i + 1]).unwrap();
        }
        assert_eq!(matching_vc(&pm).len(), 8);
        assert_eq!(exact_vc(&pm).len(), 4);
    }

    #[test]
    fn leaf_selection_by_name() {
        assert_eq!(LeafKind::by_name("exact").unwrap(), LeafKind::Exact);
        assert_eq!(LeafKind::by_name("greedy").unwrap(), LeafKind::Greedy);
        assert_eq!(LeafKind::by_name("enum").unwrap(), LeafKind::Enum);
        assert!(LeafKind::by_name("sdp").is_err());
        assert_eq!(LeafKind::Exact.advertised_ratio(7), 1.0);
        assert_eq!(LeafKind::Greedy.advertised_ratio(7), 8.0);
    }
}
