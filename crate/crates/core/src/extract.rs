//! Large `B_k`-subsets of encoded sets.
//!
//! A finite `Y` inside an encoded set corresponds to an edge set `E'` on
//! power-of-`m` vertices. Splitting the touched vertices into `k` classes so
//! that at most `|E'|/k` edges stay inside a class, and keeping only the
//! cross edges whose class increases (or only those whose class decreases)
//! along the vertex order, leaves a graph without ascending paths of length
//! `k` on at least `(k-1)/(2k)` of the edges. Such a graph carries no `k`-sum
//! coincidence, so the matching subset of `Y` is a `B_k`-set.

use crate::cert::{Certificate, Check};
use crate::encoder::Encoding;
use crate::error::{invalid, Error, Result};
use crate::nat::{self, Nat};
use crate::repset::{classify, FiniteSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::BTreeMap;

/// An edge `(low, high)` between naturals, `low < high`.
pub type NatEdge = (Nat, Nat);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Cross edges whose class increases along the vertex order.
    Up,
    /// Cross edges whose class decreases along the vertex order.
    Down,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Up => "up",
            Side::Down => "down",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionWitness {
    pub k: usize,
    /// vertex -> class in `1..=k`
    pub classes: BTreeMap<Nat, usize>,
    pub edge_count: usize,
    pub same_class: usize,
    pub up: Vec<NatEdge>,
    pub down: Vec<NatEdge>,
    /// The larger of `up` and `down`; `up` on ties.
    pub chosen: Side,
}

impl PartitionWitness {
    pub fn cross_count(&self) -> usize {
        self.up.len() + self.down.len()
    }

    pub fn chosen_edges(&self) -> &[NatEdge] {
        match self.chosen {
            Side::Up => &self.up,
            Side::Down => &self.down,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let classes: serde_json::Map<String, serde_json::Value> = self
            .classes
            .iter()
            .map(|(v, c)| (v.to_str_radix(10), json!(c)))
            .collect();
        json!({
            "k": self.k,
            "classes": classes,
            "edges": self.edge_count,
            "same_class": self.same_class,
            "cross": self.cross_count(),
            "up": self.up.len(),
            "down": self.down.len(),
            "chosen": self.chosen.name(),
        })
    }
}

fn normalize(edges: &[NatEdge]) -> Result<Vec<NatEdge>> {
    let mut out = Vec::with_capacity(edges.len());
    for (a, b) in edges {
        if a == b {
            return Err(invalid(format!("self-loop at {a}")));
        }
        out.push(if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) });
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn split(k: usize, edges: Vec<NatEdge>, classes: BTreeMap<Nat, usize>) -> PartitionWitness {
    let mut up = Vec::new();
    let mut down = Vec::new();
    let mut same_class = 0;
    let edge_count = edges.len();
    for (a, b) in edges {
        let (ca, cb) = (classes[&a], classes[&b]);
        match ca.cmp(&cb) {
            std::cmp::Ordering::Less => up.push((a, b)),
            std::cmp::Ordering::Greater => down.push((a, b)),
            std::cmp::Ordering::Equal => same_class += 1,
        }
    }
    let chosen = if up.len() >= down.len() { Side::Up } else { Side::Down };
    PartitionWitness {
        k,
        classes,
        edge_count,
        same_class,
        up,
        down,
        chosen,
    }
}

/// Deterministic `k`-partition by conditional expectations: vertices in
/// increasing order each join the class holding the fewest of their earlier
/// neighbours (lowest class on ties). At most `floor(|E|/k)` edges end up
/// inside a class.
pub fn partition_edges(edges: &[NatEdge], k: usize) -> Result<PartitionWitness> {
    if k < 2 {
        return Err(invalid("partition needs k >= 2"));
    }
    let edges = normalize(edges)?;
    let mut lower: BTreeMap<&Nat, Vec<&Nat>> = BTreeMap::new();
    for (a, b) in &edges {
        lower.entry(a).or_default();
        lower.entry(b).or_default().push(a);
    }
    let mut classes: BTreeMap<Nat, usize> = BTreeMap::new();
    for (v, earlier) in &lower {
        let mut load = vec![0usize; k + 1];
        for u in earlier {
            load[classes[*u]] += 1;
        }
        let best = (1..=k).min_by_key(|&c| load[c]).expect("k >= 2");
        classes.insert((*v).clone(), best);
    }
    Ok(split(k, edges, classes))
}

/// Uniformly random classes from a seeded generator, for comparison runs.
pub fn partition_edges_random(edges: &[NatEdge], k: usize, seed: u64) -> Result<PartitionWitness> {
    if k < 2 {
        return Err(invalid("partition needs k >= 2"));
    }
    let edges = normalize(edges)?;
    let mut vertices: Vec<&Nat> = edges.iter().flat_map(|(a, b)| [a, b]).collect();
    vertices.sort();
    vertices.dedup();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let classes = vertices
        .into_iter()
        .map(|v| (v.clone(), rng.gen_range(1..=k)))
        .collect();
    Ok(split(k, edges, classes))
}

/// Longest ascending path of an edge set, reported against a length bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscendingPathCheck {
    /// Edge count of a longest ascending path.
    pub longest: usize,
    /// An ascending path with `k` edges, when one exists.
    pub offending: Option<Vec<Nat>>,
}

impl AscendingPathCheck {
    pub fn ok(&self) -> bool {
        self.offending.is_none()
    }
}

pub fn verify_no_ascending_path(edges: &[NatEdge], k: usize) -> Result<AscendingPathCheck> {
    if k < 1 {
        return Err(invalid("path length bound must be at least 1"));
    }
    let edges = normalize(edges)?;
    let mut lower: BTreeMap<&Nat, Vec<&Nat>> = BTreeMap::new();
    for (a, b) in &edges {
        lower.entry(a).or_default();
        lower.entry(b).or_default().push(a);
    }
    // Longest ascending path ending at each vertex, with its predecessor.
    let mut best: BTreeMap<&Nat, (usize, Option<&Nat>)> = BTreeMap::new();
    let mut longest = 0;
    let mut end: Option<&Nat> = None;
    for (v, earlier) in &lower {
        let mut here = (0, None);
        for u in earlier {
            let len = best[*u].0 + 1;
            if len > here.0 {
                here = (len, Some(*u));
            }
        }
        if here.0 > longest {
            longest = here.0;
            end = Some(*v);
        }
        best.insert(*v, here);
    }
    let offending = (longest >= k).then(|| {
        let mut path = vec![end.expect("a longest path exists").clone()];
        let mut cur = end.expect("a longest path exists");
        while let (_, Some(prev)) = best[cur] {
            path.push(prev.clone());
            cur = prev;
        }
        path.reverse();
        // Any k consecutive edges of the longest path will do.
        path.truncate(k + 1);
        path
    });
    Ok(AscendingPathCheck { longest, offending })
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub subset: FiniteSet,
    pub witness: PartitionWitness,
    pub certificate: Certificate,
}

/// `ceil((k - 1) n / (2k))`
pub fn guaranteed_size(k: usize, n: usize) -> usize {
    ((k - 1) * n).div_ceil(2 * k)
}

/// Extracts a `B_k`-subset of `y` of size at least `ceil((k-1)/(2k) |y|)`.
pub fn extract_bk(y: &FiniteSet, enc: &Encoding, k: usize) -> Result<Extraction> {
    if k != enc.k() {
        return Err(invalid(format!("extraction k={k} differs from the encoding's k={}", enc.k())));
    }
    let mut edges = Vec::with_capacity(y.len());
    let mut element_of: BTreeMap<NatEdge, Nat> = BTreeMap::new();
    for x in y.elements() {
        let (u, v) = enc.edge_of(x).ok_or_else(|| Error::NotInSet(x.to_string()))?;
        let e = (enc.value_of(u).clone(), enc.value_of(v).clone());
        element_of.insert(e.clone(), x.clone());
        edges.push(e);
    }
    let witness = partition_edges(&edges, k)?;
    let chosen = witness.chosen_edges();
    let subset = FiniteSet::from_unsorted(chosen.iter().map(|e| element_of[e].clone()).collect())?.0;

    let mut cert = Certificate::new("bk-extraction")
        .param("k", k)
        .param("input_size", y.len())
        .param("input", y.to_json());
    cert.stat("edges", witness.edge_count as u64);
    cert.stat("same_class", witness.same_class as u64);
    cert.stat("cross", witness.cross_count() as u64);
    cert.stat("up", witness.up.len() as u64);
    cert.stat("down", witness.down.len() as u64);

    let bound = guaranteed_size(k, y.len());
    let size_check = json!({ "size": subset.len(), "bound": bound });
    cert.push(if subset.len() >= bound {
        Check::pass("size_bound").with_witness(size_check)
    } else {
        Check::fail("size_bound", size_check)
    });

    let same_limit = witness.edge_count / k;
    let cross = json!({ "same_class": witness.same_class, "limit": same_limit });
    cert.push(if witness.same_class <= same_limit {
        Check::pass("cross_bound").with_witness(cross)
    } else {
        Check::fail("cross_bound", cross)
    });

    let paths = verify_no_ascending_path(chosen, k)?;
    cert.push(match &paths.offending {
        None => Check::pass("no_ascending_path").with_note(format!("longest ascending path has {} edges", paths.longest)),
        Some(p) => Check::fail("no_ascending_path", nat::list_to_json(p)),
    });

    let class = classify(&subset, k)?;
    cert.push(if class.ell <= 1 {
        Check::pass("bk_subset")
    } else {
        Check::fail("bk_subset", json!({ "rho_k": class.ell }))
    });
    cert.params.insert("subset".into(), subset.to_json());

    Ok(Extraction {
        subset,
        witness,
        certificate: cert,
    })
}
