//! Seeded random graph generators for benchmark instances.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdos-Renyi G(n, p): each unordered pair independently with
/// probability `p`. Bit-reproducible for a fixed (n, p, seed).
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::contract(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v).expect("generated pair is valid");
            }
        }
    }
    Ok(g)
}

/// G(n, p) with vertices `0..s` kept as an independent set; returns the
/// planted set alongside the graph.
pub fn gen_planted_is(n: usize, s: usize, p: f64, seed: u64) -> Result<(Graph, Bitset)> {
    if s > n {
        return Err(Error::contract(format!("planted size {s} exceeds n = {n}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::contract(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            // Draw unconditionally so the planted set does not shift
            // the stream for later pairs.
            let coin = rng.gen::<f64>() < p;
            if coin && !(u < s && v < s) {
                g.add_edge(u, v).expect("generated pair is valid");
            }
        }
    }
    Ok((g, Bitset::from_indices(n, 0..s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_extremes() {
        let empty = gen_gnp(5, 0.0, 7).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let complete = gen_gnp(5, 1.0, 7).unwrap();
        assert_eq!(complete.edge_count(), 10);
    }

    #[test]
    fn gnp_deterministic() {
        let a = gen_gnp(30, 0.5, 1).unwrap();
        let b = gen_gnp(30, 0.5, 1).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn planted_full_density() {
        let (g, planted) = gen_planted_is(4, 4, 1.0, 3).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(planted, Bitset::full(4));

        let (g, _) = gen_planted_is(4, 2, 1.0, 3).unwrap();
        assert_eq!(g.edge_count(), 5); // all 6 pairs except (0, 1)
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn planted_set_is_independent() {
        for seed in 0..20 {
            let (g, planted) = gen_planted_is(20, 8, 0.6, seed).unwrap();
            assert!(g.is_independent(&planted));
        }
    }

    #[test]
    fn planted_rejects_oversized() {
        assert!(gen_planted_is(3, 4, 0.5, 0).is_err());
    }
}
