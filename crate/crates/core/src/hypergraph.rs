//! Hypergraphs with edges of bounded size, the `p hedge` text format,
//! and a seeded random instance generator.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Bitset>,
}

impl Hypergraph {
    pub fn new(n: usize, k: usize) -> Self {
        Hypergraph {
            n,
            k,
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, verts: &[usize]) -> Result<()> {
        if verts.is_empty() {
            return Err(Error::contract("empty hyperedge"));
        }
        let e = Bitset::from_indices(self.n, verts.iter().copied());
        if verts.iter().any(|&v| v >= self.n) {
            return Err(Error::contract(format!(
                "hyperedge vertex out of range 0..{}",
                self.n
            )));
        }
        if e.len() > self.k {
            return Err(Error::contract(format!(
                "hyperedge of size {} exceeds k = {}",
                e.len(),
                self.k
            )));
        }
        self.edges.push(e);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Bitset] {
        &self.edges
    }

    pub fn from_edge_sets(n: usize, k: usize, edges: Vec<Bitset>) -> Self {
        debug_assert!(edges.iter().all(|e| !e.is_empty() && e.len() <= k));
        Hypergraph { n, k, edges }
    }

    /// The alive part of a graph as a 2-uniform hypergraph.
    pub fn from_graph(g: &Graph) -> Self {
        let edges = g
            .edges()
            .into_iter()
            .map(|(u, v)| Bitset::from_indices(g.n(), [u, v]))
            .collect();
        Hypergraph {
            n: g.n(),
            k: 2,
            edges,
        }
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Maximum vertex degree (0 for an edgeless hypergraph).
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_cover(&self, x: &Bitset) -> bool {
        self.edges.iter().all(|e| e.intersects(x))
    }
}

/// Parses the `p hedge n m k` format: header then `h v1 .. vj` lines,
/// 1-indexed, j <= k.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut h: Option<Hypergraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if h.is_some() {
                    return Err(Error::parse(lineno, "duplicate p-line"));
                }
                if tok.next() != Some("hedge") {
                    return Err(Error::parse(lineno, "expected `p hedge n m k`"));
                }
                let mut next_num = |what: &str| -> Result<usize> {
                    tok.next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::parse(lineno, format!("bad {what} in header")))
                };
                let n = next_num("vertex count")?;
                let _m = next_num("edge count")?;
                let k = next_num("max edge size")?;
                h = Some(Hypergraph::new(n, k));
            }
            Some("h") => {
                let hg = h
                    .as_mut()
                    .ok_or_else(|| Error::parse(lineno, "h-line before p-line"))?;
                let mut verts = Vec::new();
                for t in tok {
                    let v: usize = t
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("bad vertex `{t}`")))?;
                    if v == 0 || v > hg.n() {
                        return Err(Error::parse(
                            lineno,
                            format!("vertex index out of range 1..={}", hg.n()),
                        ));
                    }
                    verts.push(v - 1);
                }
                if verts.len() > hg.k() {
                    return Err(Error::parse(
                        lineno,
                        format!("edge size {} exceeds k = {}", verts.len(), hg.k()),
                    ));
                }
                hg.add_edge(&verts)
                    .map_err(|e| Error::parse(lineno, e.to_string()))?;
            }
            _ => return Err(Error::parse(lineno, format!("unrecognized line: {line}"))),
        }
    }
    h.ok_or_else(|| Error::parse(0, "missing p-line"))
}

pub fn emit_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("p hedge {} {} {}\n", h.n(), h.edges().len(), h.k());
    for e in h.edges() {
        out.push('h');
        for v in e.iter() {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    out
}

/// `m` random edges over `n` vertices, each a uniform sample of
/// `min(2,k)..=k` distinct vertices. Deterministic per seed.
pub fn gen_random_hypergraph(n: usize, m: usize, k: usize, seed: u64) -> Result<Hypergraph> {
    if k == 0 || k > n {
        return Err(Error::contract(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = Hypergraph::new(n, k);
    let lo = 2.min(k);
    for _ in 0..m {
        let size = rng.gen_range(lo..=k);
        let verts: Vec<usize> = sample(&mut rng, n, size).into_iter().collect();
        h.add_edge(&verts)?;
    }
    Ok(h)
}
