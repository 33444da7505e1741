//! Boolean CSPs and the FGLSS reduction: one vertex per (predicate,
//! accepting local assignment), edges between conflicting
//! configurations. The maximum independent set of the output equals the
//! maximum number of simultaneously satisfiable predicates.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicate {
    /// Ordered list of distinct variable indices.
    pub scope: Vec<usize>,
    /// Duplicate-free accepting local assignments, one bool per scope
    /// position.
    pub accepting: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Csp {
    pub n_vars: usize,
    pub predicates: Vec<Predicate>,
}

impl Csp {
    pub fn validate(&self) -> Result<()> {
        for (i, pred) in self.predicates.iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            for &v in &pred.scope {
                if v >= self.n_vars {
                    return Err(Error::contract(format!(
                        "predicate {i}: variable {v} out of range 0..{}",
                        self.n_vars
                    )));
                }
                if !seen.insert(v) {
                    return Err(Error::contract(format!(
                        "predicate {i}: duplicate variable {v} in scope"
                    )));
                }
            }
            let mut assignments = std::collections::HashSet::new();
            for a in &pred.accepting {
                if a.len() != pred.scope.len() {
                    return Err(Error::contract(format!(
                        "predicate {i}: accepting assignment arity mismatch"
                    )));
                }
                if !assignments.insert(a.clone()) {
                    return Err(Error::contract(format!(
                        "predicate {i}: duplicate accepting assignment"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Maximum number of accepting assignments over all predicates; 0 for
/// an empty CSP.
pub fn freeness(csp: &Csp) -> usize {
    csp.predicates
        .iter()
        .map(|p| p.accepting.len())
        .max()
        .unwrap_or(0)
}

/// Maximum number of simultaneously satisfied predicates, over all 2^n
/// assignments.
pub fn csp_val_bruteforce(csp: &Csp) -> Result<usize> {
    if csp.n_vars > 20 {
        return Err(Error::contract(format!(
            "csp_val_bruteforce capped at 20 variables, got {}",
            csp.n_vars
        )));
    }
    let mut best = 0usize;
    for assignment in 0u64..(1u64 << csp.n_vars) {
        let satisfied = csp
            .predicates
            .iter()
            .filter(|pred| {
                pred.accepting.iter().any(|acc| {
                    pred.scope
                        .iter()
                        .zip(acc.iter())
                        .all(|(&v, &b)| (assignment >> v) & 1 == u64::from(b))
                })
            })
            .count();
        best = best.max(satisfied);
    }
    Ok(best)
}

/// The FGLSS conflict graph with its vertex labels.
#[derive(Clone, Debug)]
pub struct FglssGraph {
    pub graph: Graph,
    /// Per vertex: (predicate index, accepting assignment).
    pub labels: Vec<(usize, Vec<bool>)>,
}

/// One vertex per (predicate, accepting assignment); an edge wherever
/// two configurations give some shared variable different values.
/// Vertices of one predicate are pairwise adjacent.
pub fn fglss_reduce(csp: &Csp) -> FglssGraph {
    let mut labels: Vec<(usize, Vec<bool>)> = Vec::new();
    for (i, pred) in csp.predicates.iter().enumerate() {
        for acc in &pred.accepting {
            labels.push((i, acc.clone()));
        }
    }
    // Sorted (variable, value) pairs per vertex for conflict checks.
    let assignments: Vec<Vec<(usize, bool)>> = labels
        .iter()
        .map(|(i, acc)| {
            let mut a: Vec<(usize, bool)> = csp.predicates[*i]
                .scope
                .iter()
                .copied()
                .zip(acc.iter().copied())
                .collect();
            a.sort_unstable();
            a
        })
        .collect();
    let mut graph = Graph::new(labels.len());
    for u in 0..labels.len() {
        for v in (u + 1)..labels.len() {
            let conflict = if labels[u].0 == labels[v].0 {
                // Distinct accepting assignments to one scope always
                // disagree somewhere.
                true
            } else {
                let (mut a, mut b) = (assignments[u].iter().peekable(), assignments[v].iter().peekable());
                let mut found = false;
                while let (Some(&&(va, ba)), Some(&&(vb, bb))) = (a.peek(), b.peek()) {
                    match va.cmp(&vb) {
                        std::cmp::Ordering::Less => {
                            a.next();
                        }
                        std::cmp::Ordering::Greater => {
                            b.next();
                        }
                        std::cmp::Ordering::Equal => {
                            if ba != bb {
                                found = true;
                                break;
                            }
                            a.next();
                            b.next();
                        }
                    }
                }
                found
            };
            if conflict {
                graph.add_edge(u, v).expect("valid pair");
            }
        }
    }
    FglssGraph { graph, labels }
}

/// Reads the partial assignment labeled by an independent set of the
/// FGLSS graph. Returns `None` if some variable would receive two
/// values (cannot happen for an actual independent set).
pub fn labels_to_assignment(fg: &FglssGraph, csp: &Csp, set: &Bitset) -> Option<Vec<Option<bool>>> {
    let mut assignment: Vec<Option<bool>> = vec![None; csp.n_vars];
    for v in set.iter() {
        let (i, acc) = &fg.labels[v];
        for (&var, &val) in csp.predicates[*i].scope.iter().zip(acc.iter()) {
            match assignment[var] {
                Some(prev) if prev != val => return None,
                _ => assignment[var] = Some(val),
            }
        }
    }
    Some(assignment)
}

/// Random CSP: `m` predicates with uniform distinct scopes of the given
/// arity and duplicate-free accepting sets of the given size.
pub fn gen_random_csp(
    n_vars: usize,
    m: usize,
    arity: usize,
    accepting_count: usize,
    seed: u64,
) -> Result<Csp> {
    if arity > n_vars {
        return Err(Error::contract(format!(
            "arity {arity} exceeds n_vars = {n_vars}"
        )));
    }
    if accepting_count == 0 || accepting_count > 1 << arity {
        return Err(Error::contract(format!(
            "accepting_count {accepting_count} outside 1..=2^{arity}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut predicates = Vec::with_capacity(m);
    for _ in 0..m {
        let scope: Vec<usize> = sample(&mut rng, n_vars, arity).into_iter().collect();
        let mut chosen: Vec<usize> = Vec::new();
        while chosen.len() < accepting_count {
            let a = rng.gen_range(0..(1usize << arity));
            if !chosen.contains(&a) {
                chosen.push(a);
            }
        }
        let accepting = chosen
            .into_iter()
            .map(|bits| (0..arity).map(|j| (bits >> j) & 1 == 1).collect())
            .collect();
        predicates.push(Predicate { scope, accepting });
    }
    let csp = Csp { n_vars, predicates };
    csp.validate()?;
    Ok(csp)
}

/// Parses the line-oriented CSP format: `p csp n m` header, then per
/// predicate one `s v1 .. vq` line (1-indexed variables) followed by
/// its `a b1 .. bq` accepting-assignment lines (bits).
pub fn parse_csp(text: &str) -> Result<Csp> {
    let mut n_vars: Option<usize> = None;
    let mut predicates: Vec<Predicate> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if n_vars.is_some() {
                    return Err(Error::parse(lineno, "duplicate p-line"));
                }
                if tok.next() != Some("csp") {
                    return Err(Error::parse(lineno, "expected `p csp n m`"));
                }
                let n = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "bad variable count"))?;
                let _m: usize = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "bad predicate count"))?;
                n_vars = Some(n);
            }
            Some("s") => {
                let n = n_vars.ok_or_else(|| Error::parse(lineno, "s-line before p-line"))?;
                let mut scope = Vec::new();
                for t in tok {
                    let v: usize = t
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("bad variable `{t}`")))?;
                    if v == 0 || v > n {
                        return Err(Error::parse(
                            lineno,
                            format!("variable index out of range 1..={n}"),
                        ));
                    }
                    scope.push(v - 1);
                }
                predicates.push(Predicate {
                    scope,
                    accepting: Vec::new(),
                });
            }
            Some("a") => {
                let pred = predicates
                    .last_mut()
                    .ok_or_else(|| Error::parse(lineno, "a-line before any s-line"))?;
                let bits: Vec<bool> = tok
                    .map(|t| match t {
                        "0" => Ok(false),
                        "1" => Ok(true),
                        other => Err(Error::parse(lineno, format!("bad bit `{other}`"))),
                    })
                    .collect::<Result<_>>()?;
                if bits.len() != pred.scope.len() {
                    return Err(Error::parse(
                        lineno,
                        format!(
                            "assignment arity {} does not match scope arity {}",
                            bits.len(),
                            pred.scope.len()
                        ),
                    ));
                }
                pred.accepting.push(bits);
            }
            _ => return Err(Error::parse(lineno, format!("unrecognized line: {line}"))),
        }
    }
    let csp = Csp {
        n_vars: n_vars.ok_or_else(|| Error::parse(0, "missing p-line"))?,
        predicates,
    };
    csp.validate().map_err(|e| Error::parse(0, e.to_string()))?;
    Ok(csp)
}

pub fn emit_csp(csp: &Csp) -> String {
    let mut out = format!("p csp {} {}\n", csp.n_vars, csp.predicates.len());
    for pred in &csp.predicates {
        out.push('s');
        for &v in &pred.scope {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
        for acc in &pred.accepting {
            out.push('a');
            for &b in acc {
                out.push_str(if b { " 1" } else { " 0" });
            }
            out.push('\n');
        }
    }
    out
}

/// Sidecar label file: one `vertex predicate bits` line per FGLSS
/// vertex, 1-indexed.
pub fn emit_labels(fg: &FglssGraph) -> String {
    let mut out = String::new();
    for (v, (i, acc)) in fg.labels.iter().enumerate() {
        let bits: String = acc.iter().map(|&b| if b { '1' } else { '0' }).collect();
        out.push_str(&format!("{} {} {}\n", v + 1, i + 1, bits));
    }
    out
}
