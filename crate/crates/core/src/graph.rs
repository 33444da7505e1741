//! Undirected simple graphs over vertex indices `0..n`, with an alive
//! mask so branching solvers can take induced subgraphs without copying
//! adjacency.

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// A set of vertices of some graph or hypergraph.
pub type VertexSet = Bitset;

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Bitset>,
    alive: Bitset,
}

impl Graph {
    /// Edgeless graph on `n` vertices, all alive.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Bitset::new(n); n],
            alive: Bitset::full(n),
        }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::contract(format!(
                "edge ({u}, {v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::contract(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alive(&self) -> &Bitset {
        &self.alive
    }

    pub fn alive_count(&self) -> usize {
        self.alive.len()
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive.contains(v)
    }

    /// Raw adjacency row (ignores the alive mask).
    pub fn adjacency(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Alive neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> Bitset {
        self.adj[v].intersection(&self.alive)
    }

    /// Alive-degree of `v`; 0 for a dead vertex.
    pub fn degree(&self, v: usize) -> usize {
        if !self.alive.contains(v) {
            return 0;
        }
        self.adj[v].intersection_len(&self.alive)
    }

    /// An alive vertex of maximum alive-degree, ties broken by smallest
    /// index. `None` when no vertex is alive.
    pub fn max_degree_vertex(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for v in self.alive.iter() {
            let d = self.adj[v].intersection_len(&self.alive);
            match best {
                Some((_, bd)) if bd >= d => {}
                _ => best = Some((v, d)),
            }
        }
        best
    }

    pub fn remove_vertex(&mut self, v: usize) {
        self.alive.remove(v);
    }

    /// Removes `v` and all its alive neighbors.
    pub fn remove_closed_neighborhood(&mut self, v: usize) {
        self.alive.subtract(&self.adj[v]);
        self.alive.remove(v);
    }

    pub fn set_alive(&mut self, mask: Bitset) {
        debug_assert_eq!(mask.capacity(), self.n);
        self.alive = mask;
    }

    /// Restricts the graph to `x`. Adjacency is shared; only the alive
    /// mask changes.
    pub fn induced_subgraph(&self, x: &Bitset) -> Result<Graph> {
        if !x.is_subset(&self.alive) {
            return Err(Error::contract(
                "induced_subgraph: vertex set is not a subset of the alive vertices",
            ));
        }
        let mut g = self.clone();
        g.alive = x.clone();
        Ok(g)
    }

    /// Edges with both endpoints alive, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.alive.iter() {
            for v in self.adj[u].intersection(&self.alive).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.alive
            .iter()
            .map(|u| self.adj[u].intersection_len(&self.alive))
            .sum::<usize>()
            / 2
    }

    /// True iff `s` is an alive subset with no internal edge.
    pub fn is_independent(&self, s: &Bitset) -> bool {
        if !s.is_subset(&self.alive) {
            return false;
        }
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// True iff every alive edge has an endpoint in `s`.
    pub fn is_vertex_cover(&self, s: &Bitset) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| s.contains(u) || s.contains(v))
    }
}

/// Parses DIMACS `.col`: one `p edge n m` header, `e u v` lines with
/// 1-indexed endpoints, `c` comment lines. Duplicate edges are merged;
/// self-loops are rejected.
pub fn parse_dimacs_col(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::parse(lineno, "duplicate p-line"));
                }
                if tok.next() != Some("edge") {
                    return Err(Error::parse(lineno, "expected `p edge n m`"));
                }
                let n: usize = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "bad vertex count in header"))?;
                let _m: usize = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "bad edge count in header"))?;
                graph = Some(Graph::new(n));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(lineno, "e-line before p-line"))?;
                let u: usize = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "bad endpoint"))?;
                let v: usize = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "bad endpoint"))?;
                if u == 0 || v == 0 || u > g.n() || v > g.n() {
                    return Err(Error::parse(
                        lineno,
                        format!("vertex index out of range 1..={}", g.n()),
                    ));
                }
                if u == v {
                    return Err(Error::parse(lineno, format!("self-loop at vertex {u}")));
                }
                g.add_edge(u - 1, v - 1)
                    .map_err(|e| Error::parse(lineno, e.to_string()))?;
            }
            _ => return Err(Error::parse(lineno, format!("unrecognized line: {line}"))),
        }
    }
    graph.ok_or_else(|| Error::parse(0, "missing p-line"))
}

/// Emits the alive part of `g` in DIMACS `.col` format, 1-indexed.
/// Dead vertices are kept in the numbering so indices stay stable.
pub fn emit_dimacs_col(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn c5() -> Graph {
        Graph::with_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn parse_path() {
        let g = parse_dimacs_col("p edge 3 2\ne 1 2\ne 2 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(2), 1);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = parse_dimacs_col("p edge 2 1\ne 1 1").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_empty_graph() {
        let g = parse_dimacs_col("p edge 4 0").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_out_of_range() {
        assert!(matches!(
            parse_dimacs_col("p edge 2 1\ne 1 3"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn induced_k3() {
        let g = Graph::with_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let sub = g
            .induced_subgraph(&Bitset::from_indices(3, [0, 1]))
            .unwrap();
        assert_eq!(sub.edge_count(), 1);
    }

    #[test]
    fn induced_identity() {
        let g = c5();
        let sub = g.induced_subgraph(&g.alive().clone()).unwrap();
        assert_eq!(sub.edges(), g.edges());
    }

    #[test]
    fn induced_c5_alternating() {
        // C5 on {0,2,4}: only 4-0 survives.
        let g = c5();
        let sub = g
            .induced_subgraph(&Bitset::from_indices(5, [0, 2, 4]))
            .unwrap();
        assert_eq!(sub.edges(), vec![(0, 4)]);
    }

    #[test]
    fn induced_rejects_non_subset() {
        let mut g = c5();
        g.remove_vertex(3);
        assert!(g
            .induced_subgraph(&Bitset::from_indices(5, [3]))
            .is_err());
    }

    #[test]
    fn max_degree_star() {
        let g = Graph::with_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(g.max_degree_vertex(), Some((0, 5)));
    }

    #[test]
    fn max_degree_tie_break_and_empty() {
        let g = Graph::new(3);
        assert_eq!(g.max_degree_vertex(), Some((0, 0)));
        let mut g = Graph::new(1);
        g.remove_vertex(0);
        assert_eq!(g.max_degree_vertex(), None);
    }

    #[test]
    fn degree_only_counts_alive() {
        let mut g = c5();
        g.remove_vertex(1);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 0);
    }

    #[test]
    fn dimacs_round_trip() {
        let g = c5();
        let g2 = parse_dimacs_col(&emit_dimacs_col(&g)).unwrap();
        assert_eq!(g2.edges(), g.edges());
    }
}
