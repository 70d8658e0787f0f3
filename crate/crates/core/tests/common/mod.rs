#![allow(dead_code)]

use gsidon::encoder::{encode, Encoding};
use gsidon::ordgraph::{make_theta, Interleaving, ThetaSpec};
use gsidon::OrderedGraph;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn theta(k: usize, ell: usize) -> OrderedGraph {
    make_theta(&ThetaSpec::new(k, ell)).unwrap()
}

pub fn encoded_theta(k: usize, ell: usize) -> Encoding {
    encode(&theta(k, ell), k).unwrap()
}

/// A uniformly shuffled interleaving that keeps every path ascending.
pub fn random_interleaving<R: Rng>(k: usize, ell: usize, rng: &mut R) -> Interleaving {
    let mut labels: Vec<usize> = (0..ell).flat_map(|p| std::iter::repeat_n(p, k - 1)).collect();
    labels.shuffle(rng);
    let mut next = vec![1usize; ell];
    let order = labels
        .into_iter()
        .map(|p| {
            next[p] += 1;
            (next[p] - 1, p)
        })
        .collect();
    Interleaving::Explicit(order)
}

/// Two random theta graphs side by side, joined by a few bridges that keep
/// every cycle inside one of them, plus pendant vertices.
pub fn theta_forest<R: Rng>(k: usize, ell: usize, rng: &mut R) -> OrderedGraph {
    let a = make_theta(&ThetaSpec::new(k, ell).with_interleaving(random_interleaving(k, ell, rng))).unwrap();
    let b = make_theta(&ThetaSpec::new(k, ell).with_interleaving(random_interleaving(k, ell, rng))).unwrap();
    let na = a.vertex_count();
    let n = na + b.vertex_count();
    let pendants = rng.gen_range(0..3);
    let mut edges: Vec<(usize, usize)> = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (u + na, v + na)));
    if rng.gen_bool(0.7) {
        edges.push((rng.gen_range(0..na), rng.gen_range(na..n)));
    }
    for p in 0..pendants {
        edges.push((rng.gen_range(0..n + p), n + p));
    }
    // Random relabelling that interleaves the two blocks but keeps each
    // block's internal order (so every theta stays an ordered theta).
    let total = n + pendants;
    let mut blocks: Vec<u8> = (0..total).map(|v| if v < na { 0 } else if v < n { 1 } else { 2 }).collect();
    blocks.shuffle(rng);
    let mut counters = [0usize, na, n];
    let mut relabel = vec![0; total];
    for (pos, b) in blocks.into_iter().enumerate() {
        relabel[counters[b as usize]] = pos;
        counters[b as usize] += 1;
    }
    let edges = edges.into_iter().map(|(u, v)| {
        let (x, y) = (relabel[u], relabel[v]);
        (x.min(y), x.max(y))
    });
    OrderedGraph::new(total, edges).unwrap()
}
