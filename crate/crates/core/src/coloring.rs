//! Graph coloring: an exact exponential backend (chromatic number via
//! the inclusion-exclusion count of covers by independent sets) and the
//! iterative-peeling approximation that repeatedly removes an
//! independent set found by the randomized branching solver, finishing
//! with the exact backend on the small residual.

use crate::bitset::Bitset;
use crate::branching::{boosted_is, RunStats, SolveConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::leaf::LeafKind;
use num_bigint::BigInt;
use num_traits::Zero;
use std::time::Instant;

/// An ordered partition of the alive vertices into independent classes.
#[derive(Clone, Debug)]
pub struct Coloring {
    pub classes: Vec<Bitset>,
}

impl Coloring {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }
}

/// True iff `coloring` partitions the alive vertices of `g` into
/// pairwise-disjoint independent classes.
pub fn verify_coloring(g: &Graph, coloring: &Coloring) -> bool {
    let mut seen = Bitset::new(g.n());
    for class in &coloring.classes {
        if class.intersects(&seen) {
            return false;
        }
        if !g.is_independent(class) {
            return false;
        }
        seen.union_with(class);
    }
    seen == *g.alive()
}

/// Compacted alive subgraph: vertex `i` is original vertex `verts[i]`,
/// `nb[i]` is the open-neighborhood mask.
struct Compact {
    verts: Vec<usize>,
    nb: Vec<u64>,
}

impl Compact {
    fn build(g: &Graph, subset: &Bitset) -> Compact {
        let verts: Vec<usize> = subset.iter().collect();
        assert!(verts.len() <= 60, "counting backend supports at most 60 vertices");
        let mut nb = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i != j && g.has_edge(u, v) {
                    nb[i] |= 1 << j;
                }
            }
        }
        Compact { verts, nb }
    }

    fn m(&self) -> usize {
        self.verts.len()
    }
}

/// i(S) for every S: the number of independent sets contained in S.
fn independent_set_counts(nb: &[u64]) -> Vec<u64> {
    let m = nb.len();
    assert!(m <= 26, "subset table too large for the exact backend");
    let mut table = vec![0u64; 1 << m];
    table[0] = 1;
    for s in 1..(1usize << m) {
        let v = s.trailing_zeros() as usize;
        let without_v = s & !(1 << v);
        let without_closed = s & !(nb[v] as usize) & !(1 << v);
        table[s] = table[without_v] + table[without_closed];
    }
    table
}

/// Whether the graph can be covered by k independent sets:
/// sum over S of (-1)^(m-|S|) i(S)^k > 0.
fn coverable(counts: &[u64], m: usize, k: usize) -> bool {
    let mut sum = BigInt::zero();
    for (s, &c) in counts.iter().enumerate() {
        let term = BigInt::from(c).pow(k as u32);
        if (m - (s as u64).count_ones() as usize) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum > BigInt::zero()
}

fn chromatic_of_compact(c: &Compact) -> usize {
    let m = c.m();
    if m == 0 {
        return 0;
    }
    let counts = independent_set_counts(&c.nb);
    (1..=m)
        .find(|&k| coverable(&counts, m, k))
        .expect("m singletons always cover")
}

/// First maximal independent set (in include-first DFS order over the
/// vertices of `sub`) accepted by `pred`.
fn first_good_maximal_is<F: FnMut(u64) -> bool>(
    nb: &[u64],
    sub: u64,
    pred: &mut F,
) -> Option<u64> {
    fn rec<F: FnMut(u64) -> bool>(
        nb: &[u64],
        sub: u64,
        rest: u64,
        chosen: u64,
        pred: &mut F,
    ) -> Option<u64> {
        if rest == 0 {
            // Maximal iff every excluded vertex of sub has a neighbor
            // in the chosen set.
            let mut v_bits = sub & !chosen;
            while v_bits != 0 {
                let v = v_bits.trailing_zeros() as usize;
                if nb[v] & chosen == 0 {
                    return None;
                }
                v_bits &= v_bits - 1;
            }
            return if pred(chosen) { Some(chosen) } else { None };
        }
        let v = rest.trailing_zeros() as usize;
        let rest_without = rest & !(1u64 << v);
        if nb[v] & chosen == 0 {
            if let Some(s) =
                rec(nb, sub, rest_without & !nb[v], chosen | (1 << v), pred)
            {
                return Some(s);
            }
        }
        rec(nb, sub, rest_without, chosen, pred)
    }
    rec(nb, sub, sub, 0, pred)
}

/// A proper coloring with exactly chi(G) classes. Chi is computed by
/// the inclusion-exclusion counting identity; classes are then peeled
/// off one at a time, each chosen as an independent set whose removal
/// drops the chromatic number, recomputing the identity on the
/// residual.
pub fn optcol(g: &Graph) -> Coloring {
    let mut classes = Vec::new();
    let mut current = g.alive().clone();
    while !current.is_empty() {
        let c = Compact::build(g, &current);
        let chi = chromatic_of_compact(&c);
        if chi == 1 {
            classes.push(current.clone());
            break;
        }
        let full = if c.m() == 64 { u64::MAX } else { (1u64 << c.m()) - 1 };
        let class_mask = first_good_maximal_is(&c.nb, full, &mut |s| {
            let residual: u64 = full & !s;
            let rest_verts: Vec<usize> =
                (0..c.m()).filter(|&i| residual & (1 << i) != 0).collect();
            let mut nb2 = vec![0u64; rest_verts.len()];
            for (a, &i) in rest_verts.iter().enumerate() {
                for (b, &j) in rest_verts.iter().enumerate() {
                    if a != b && c.nb[i] & (1 << j) != 0 {
                        nb2[a] |= 1 << b;
                    }
                }
            }
            if rest_verts.is_empty() {
                return true;
            }
            let counts = independent_set_counts(&nb2);
            coverable(&counts, rest_verts.len(), chi - 1)
        })
        .expect("an optimal coloring class extends to a maximal independent set");
        let mut class = Bitset::new(g.n());
        for i in 0..c.m() {
            if class_mask & (1 << i) != 0 {
                class.insert(c.verts[i]);
            }
        }
        current.subtract(&class);
        classes.push(class);
    }
    let coloring = Coloring { classes };
    assert!(verify_coloring(g, &coloring), "optcol produced an improper coloring");
    coloring
}

/// Minimum k admitting a proper k-coloring, by backtracking over color
/// assignments. Independent of the counting identity; capped at 12
/// alive vertices.
pub fn chromatic_bruteforce(g: &Graph) -> Result<usize> {
    let c = Compact::build_checked(g)?;
    let m = c.m();
    if m == 0 {
        return Ok(0);
    }
    fn colorable(nb: &[u64], colors: &mut [usize], v: usize, k: usize, max_used: usize) -> bool {
        if v == nb.len() {
            return true;
        }
        for col in 0..k.min(max_used + 2) {
            let mut ok = true;
            let mut bits = nb[v] & ((1u64 << v) - 1);
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                if colors[u] == col {
                    ok = false;
                    break;
                }
                bits &= bits - 1;
            }
            if ok {
                colors[v] = col;
                if colorable(nb, colors, v + 1, k, max_used.max(col)) {
                    return true;
                }
            }
        }
        false
    }
    for k in 1..=m {
        let mut colors = vec![usize::MAX; m];
        if colorable(&c.nb, &mut colors, 0, k, 0) {
            return Ok(k);
        }
    }
    unreachable!("m colors always suffice")
}

impl Compact {
    fn build_checked(g: &Graph) -> Result<Compact> {
        if g.alive_count() > 12 {
            return Err(Error::contract(format!(
                "chromatic_bruteforce capped at 12 alive vertices, got {}",
                g.alive_count()
            )));
        }
        Ok(Compact::build(g, g.alive()))
    }
}

/// Smallest r for which the peeling parameters are defined: the root of
/// r * log2(r) = 1, computed numerically. Any r strictly above it keeps
/// both r*log2(r) > 1 and r/ln(r*log2(r)) >= 1.
pub fn min_supported_r() -> f64 {
    let f = |r: f64| r * r.log2() - 1.0;
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..200 {
        let mid = (lo + hi) / 2.0;
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo + hi) / 2.0
}

/// Iterative peeling: while at least n/(r*log2 r) vertices remain, peel
/// an independent set found by the branching solver with denominator
/// p = max(1, r/ln(r*log2 r)); color the residual optimally. The output
/// is always a proper coloring.
pub fn chr_approx(g: &Graph, r: f64, seed: u64) -> Result<(Coloring, RunStats)> {
    chr_approx_with(g, r, seed, 1)
}

/// As `chr_approx`, with the per-peel boosting trial count exposed.
pub fn chr_approx_with(
    g: &Graph,
    r: f64,
    seed: u64,
    inner_trials: u32,
) -> Result<(Coloring, RunStats)> {
    let r0 = min_supported_r();
    if r <= r0 {
        return Err(Error::contract(format!(
            "peeling parameter r = {r} must exceed r0 = {r0:.6}"
        )));
    }
    let start = Instant::now();
    let n0 = g.alive_count();
    let threshold = n0 as f64 / (r * r.log2());
    let p = (r / (r * r.log2()).ln()).max(1.0);
    let d = ((2.0 * p).ceil() as usize).max(4);
    let mut work = g.clone();
    let mut classes = Vec::new();
    let mut stats = RunStats::default();
    let mut iteration: u64 = 0;
    while work.alive_count() > 0 && work.alive_count() as f64 >= threshold {
        let cfg = SolveConfig {
            p,
            d,
            leaf: LeafKind::Exact,
            trials: inner_trials,
            seed: seed ^ iteration.wrapping_mul(0x9e3779b97f4a7c15),
        };
        let (class, st) = boosted_is(&work, &cfg)?;
        stats.merge(&st);
        assert!(!class.is_empty(), "peeled class must be nonempty");
        let mut remaining = work.alive().clone();
        remaining.subtract(&class);
        work.set_alive(remaining);
        classes.push(class);
        iteration += 1;
    }
    let tail = optcol(&work);
    classes.extend(tail.classes);
    stats.elapsed = start.elapsed();
    let coloring = Coloring { classes };
    assert!(verify_coloring(g, &coloring));
    Ok((coloring, stats))
}

/// Invokes the peeling algorithm with parameter r-2, so that the bound
/// chain certifies a factor of r * chi(G).
pub fn chr_approx_wrapped(g: &Graph, r: f64, seed: u64) -> Result<(Coloring, RunStats)> {
    chr_approx_wrapped_with(g, r, seed, 1)
}

pub fn chr_approx_wrapped_with(
    g: &Graph,
    r: f64,
    seed: u64,
    inner_trials: u32,
) -> Result<(Coloring, RunStats)> {
    chr_approx_with(g, r - 2.0, seed, inner_trials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::gen_gnp;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn petersen() -> Graph {
        Graph::with_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn optcol_small_graphs() {
        assert_eq!(optcol(&complete(4)).num_classes(), 4);
        // Bipartite with an edge.
        let g = Graph::with_edges(6, &[(0, 3), (1, 4), (2, 5), (0, 4)]).unwrap();
        assert_eq!(optcol(&g).num_classes(), 2);
        assert_eq!(optcol(&petersen()).num_classes(), 3);
        assert_eq!(optcol(&Graph::new(0)).num_classes(), 0);
        assert_eq!(optcol(&Graph::new(5)).num_classes(), 1);
    }

    #[test]
    fn bruteforce_known_values() {
        let c5 = Graph::with_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(chromatic_bruteforce(&c5).unwrap(), 3);
        assert_eq!(chromatic_bruteforce(&Graph::new(6)).unwrap(), 1);
        assert_eq!(chromatic_bruteforce(&complete(7)).unwrap(), 7);
        assert!(chromatic_bruteforce(&Graph::new(13)).is_err());
    }

    #[test]
    fn optcol_matches_bruteforce() {
        for seed in 0..40 {
            let g = gen_gnp(9, 0.4, seed).unwrap();
            assert_eq!(
                optcol(&g).num_classes(),
                chromatic_bruteforce(&g).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn verify_coloring_examples() {
        let k3 = complete(3);
        let singletons = Coloring {
            classes: (0..3).map(|v| Bitset::singleton(3, v)).collect(),
        };
        assert!(verify_coloring(&k3, &singletons));
        let lump = Coloring {
            classes: vec![Bitset::full(3)],
        };
        assert!(!verify_coloring(&k3, &lump));
    }

    #[test]
    fn min_r_is_near_the_product_root() {
        let r0 = min_supported_r();
        assert!((r0 * r0.log2() - 1.0).abs() < 1e-9);
        assert!(r0 > 1.5 && r0 < 1.6);
    }

    #[test]
    fn chr_approx_edgeless_and_complete() {
        let (c, _) = chr_approx(&Graph::new(10), 8.0, 1).unwrap();
        assert_eq!(c.num_classes(), 1);
        let (c, _) = chr_approx(&complete(6), 8.0, 1).unwrap();
        assert_eq!(c.num_classes(), 6);
    }

    #[test]
    fn chr_approx_always_proper() {
        for seed in 0..30 {
            let g = gen_gnp(14, 0.4, seed).unwrap();
            let (c, _) = chr_approx(&g, 4.0, seed).unwrap();
            assert!(verify_coloring(&g, &c));
        }
    }

    #[test]
    fn chr_approx_rejects_small_r() {
        assert!(chr_approx(&Graph::new(5), 1.0, 0).is_err());
        assert!(chr_approx_wrapped(&Graph::new(5), 3.0, 0).is_err());
    }

    #[test]
    fn wrapped_trivial_cases() {
        let (c, _) = chr_approx_wrapped(&Graph::new(8), 10.0, 0).unwrap();
        assert_eq!(c.num_classes(), 1);
        let (c, _) = chr_approx_wrapped(&complete(5), 10.0, 0).unwrap();
        assert_eq!(c.num_classes(), 5);
    }
}
