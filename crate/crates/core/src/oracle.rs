//! Brute-force reference implementations.
//!
//! These share no code with the optimised routines they check: sums come
//! from the full cartesian power, cycles from vertex-subset enumeration and
//! arrow verdicts from sweeping every colouring.

use crate::config::Config;
use crate::error::{invalid, Error, Result};
use crate::nat::Nat;
use crate::ordgraph::OrderedGraph;
use crate::repset::FiniteSet;
use std::collections::{BTreeMap, BTreeSet};

/// Every target with its nondecreasing representations, from all `|X|^k`
/// ordered tuples.
pub fn sum_table(x: &FiniteSet, k: usize) -> BTreeMap<Nat, BTreeSet<Vec<Nat>>> {
    let elems = x.elements();
    let mut table: BTreeMap<Nat, BTreeSet<Vec<Nat>>> = BTreeMap::new();
    if elems.is_empty() || k == 0 {
        return table;
    }
    let mut idx = vec![0usize; k];
    loop {
        let mut terms: Vec<Nat> = idx.iter().map(|&i| elems[i].clone()).collect();
        terms.sort();
        let sum: Nat = terms.iter().sum();
        table.entry(sum).or_default().insert(terms);
        // odometer increment
        let mut pos = k;
        loop {
            if pos == 0 {
                return table;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < elems.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// `rho_k(X)` from [`sum_table`].
pub fn rho_max(x: &FiniteSet, k: usize) -> u64 {
    sum_table(x, k).values().map(|reps| reps.len() as u64).max().unwrap_or(0)
}

/// Induced cycles of length `3..=s`, found by testing every vertex subset for
/// being connected and 2-regular. Same rotation and order as
/// [`crate::ordgraph::induced_cycles_upto`].
pub fn induced_cycles(g: &OrderedGraph, s: usize, cfg: &Config) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > cfg.max_oracle_vertices || n > 63 {
        return Err(Error::GuardRefusal {
            what: "cycle oracle",
            size: n,
            limit: cfg.max_oracle_vertices.min(63),
        });
    }
    if s < 3 {
        return Err(invalid("cycle length bound must be at least 3"));
    }
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size < 3 || size > s {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let nbrs = |v: usize| -> Vec<usize> {
            g.neighbors(v).iter().copied().filter(|&w| mask & (1 << w) != 0).collect()
        };
        if verts.iter().any(|&v| nbrs(v).len() != 2) {
            continue;
        }
        // Walk from the smallest vertex towards its smaller neighbour.
        let start = verts[0];
        let first = *nbrs(start).iter().min().expect("degree 2");
        let mut cycle = vec![start, first];
        while cycle.len() < size {
            let (prev, cur) = (cycle[cycle.len() - 2], cycle[cycle.len() - 1]);
            let next = nbrs(cur).into_iter().find(|&w| w != prev).expect("degree 2");
            if next == start {
                break;
            }
            cycle.push(next);
        }
        if cycle.len() == size {
            out.push(cycle);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Outcome of sweeping all colourings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepVerdict {
    pub holds: bool,
    /// Lexicographically first colouring with no class of `rho_k = ell`.
    pub counterexample: Option<Vec<usize>>,
    pub colorings: u64,
}

/// Decides `X -> [k,l]_r` by evaluating all `r^|X|` colourings. Refuses
/// when `r^|X|` exceeds `2^max_oracle_vertices`.
pub fn arrow_sweep(x: &FiniteSet, k: usize, ell: u64, r: usize, cfg: &Config) -> Result<SweepVerdict> {
    if r == 0 || k == 0 {
        return Err(invalid("need r >= 1 and k >= 1"));
    }
    let n = x.len();
    let bits = n as f64 * (r as f64).log2();
    if bits > cfg.max_oracle_vertices as f64 + 1e-9 {
        return Err(Error::GuardRefusal {
            what: "colouring oracle",
            size: n,
            limit: (cfg.max_oracle_vertices as f64 / (r as f64).log2()).floor() as usize,
        });
    }
    let mut colors = vec![1usize; n];
    let mut count = 0u64;
    loop {
        count += 1;
        let good = (1..=r).any(|q| {
            let class = x.select(|i| colors[i] == q);
            rho_max(&class, k) == ell
        });
        if !good {
            return Ok(SweepVerdict {
                holds: false,
                counterexample: Some(colors),
                colorings: count,
            });
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(SweepVerdict {
                    holds: true,
                    counterexample: None,
                    colorings: count,
                });
            }
            pos -= 1;
            colors[pos] += 1;
            if colors[pos] <= r {
                break;
            }
            colors[pos] = 1;
        }
    }
}
