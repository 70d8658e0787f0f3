//! Exhaustive decision of colouring arrow relations.
//!
//! `X -> [k,l]_r` holds when every `r`-colouring of `X` has a class `X_q`
//! with `rho_k(X_q) = l`. For edge colourings of an ordered graph the
//! analogue asks for a monochromatic induced theta copy.
//!
//! Both searches walk colourings in lexicographic order over restricted
//! growth strings (item `i` may use at most one colour more than items
//! `0..i`), so every colouring is visited up to a permutation of colours and
//! the first counterexample found is the lexicographically smallest one.
//! Subtrees below a fixed prefix depth run on the rayon pool; results are
//! merged in prefix order, which makes verdicts, counterexamples and
//! statistics independent of the number of threads.

use crate::cert::{Certificate, Check};
use crate::config::Config;
use crate::error::{invalid, Error, Result};
use crate::nat::{self, Nat};
use crate::ordgraph::{find_theta_copies, OrderedGraph, ThetaCopy};
use crate::repset::{for_each_tuple, rho_profile, FiniteSet, Representation};
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

/// A total colouring of an indexed domain with colours `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coloring {
    pub r: usize,
    /// colour of item `i` (set element or edge, by position)
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn new(r: usize, colors: Vec<usize>) -> Result<Self> {
        if r == 0 {
            return Err(invalid("a colouring needs at least one colour"));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > r) {
            return Err(invalid(format!("colour {c} outside 1..={r}")));
        }
        Ok(Coloring { r, colors })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Colour classes of `x`, indexed `0..r` for colours `1..=r`.
    pub fn set_classes(&self, x: &FiniteSet) -> Result<Vec<FiniteSet>> {
        if self.colors.len() != x.len() {
            return Err(invalid(format!(
                "colouring covers {} items but the set has {} elements",
                self.colors.len(),
                x.len()
            )));
        }
        Ok((1..=self.r).map(|q| x.select(|i| self.colors[i] == q)).collect())
    }

    pub fn set_json(&self, x: &FiniteSet) -> Result<serde_json::Value> {
        let classes = self.set_classes(x)?;
        Ok(json!({
            "r": self.r,
            "colors": self.colors,
            "classes": classes.iter().map(FiniteSet::to_json).collect::<Vec<_>>(),
        }))
    }

    pub fn edge_json(&self, h: &OrderedGraph) -> serde_json::Value {
        let classes: Vec<Vec<(usize, usize)>> = (1..=self.r)
            .map(|q| {
                h.edges()
                    .iter()
                    .zip(&self.colors)
                    .filter(|(_, &c)| c == q)
                    .map(|(e, _)| *e)
                    .collect()
            })
            .collect();
        json!({ "r": self.r, "colors": self.colors, "classes": classes })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowVerdict {
    pub holds: bool,
    pub counterexample: Option<Coloring>,
    /// Complete colourings evaluated.
    pub colorings_examined: u64,
    /// Partial colourings cut off because every completion satisfies the relation.
    pub pruned: u64,
}

impl ArrowVerdict {
    fn certificate(&self, property: &str, counterexample: Option<serde_json::Value>) -> Certificate {
        let mut cert = Certificate::new(property);
        cert.stat("colorings_examined", self.colorings_examined);
        cert.stat("pruned", self.pruned);
        cert.push(match counterexample {
            None => Check::pass("arrow"),
            Some(w) => Check::fail("arrow", w),
        });
        cert
    }

    /// Certificate for a set search; `passed` mirrors `holds`.
    pub fn set_certificate(&self, x: &FiniteSet, k: usize, ell: u64, r: usize) -> Result<Certificate> {
        let witness = self.counterexample.as_ref().map(|c| c.set_json(x)).transpose()?;
        let mut cert = self.certificate("arrow-set", witness);
        cert.params.insert("set".into(), x.to_json());
        cert.params.insert("k".into(), json!(k));
        cert.params.insert("ell".into(), json!(ell));
        cert.params.insert("r".into(), json!(r));
        Ok(cert)
    }

    pub fn edge_certificate(&self, h: &OrderedGraph, k: usize, ell: usize, r: usize) -> Certificate {
        let witness = self.counterexample.as_ref().map(|c| c.edge_json(h));
        let mut cert = self.certificate("arrow-graph", witness);
        cert.params.insert("graph".into(), h.to_json());
        cert.params.insert("k".into(), json!(k));
        cert.params.insert("ell".into(), json!(ell));
        cert.params.insert("r".into(), json!(r));
        cert
    }
}

/// Largest domain searchable with `r` colours when `max` is the two-colour
/// limit: `r^(n-1) <= 2^(max-1)`.
pub fn scaled_limit(max: usize, r: usize) -> usize {
    if r <= 2 {
        return max;
    }
    let budget = max.saturating_sub(1) as f64;
    let per_item = (r as f64).log2();
    1 + (budget / per_item + 1e-9).floor() as usize
}

fn guard(what: &'static str, size: usize, max: usize, r: usize) -> Result<()> {
    if r == 1 {
        return Ok(());
    }
    let limit = scaled_limit(max, r);
    if size > limit {
        return Err(Error::GuardRefusal { what, size, limit });
    }
    Ok(())
}

/// Incremental state of a partial colouring.
trait SearchState: Clone + Send + Sync {
    fn items(&self) -> usize;
    fn assign(&mut self, item: usize, color: usize);
    fn unassign(&mut self, item: usize, color: usize);
    /// Every completion of the current partial colouring satisfies the relation.
    fn settled(&self) -> bool;
    /// The current complete colouring violates the relation.
    fn violated(&self) -> bool;
}

#[derive(Default, Clone, Copy)]
struct Stats {
    examined: u64,
    pruned: u64,
}

fn dfs<S: SearchState>(state: &mut S, r: usize, colors: &mut Vec<usize>, used: usize, stats: &mut Stats) -> bool {
    if state.settled() {
        stats.pruned += 1;
        return false;
    }
    let i = colors.len();
    if i == state.items() {
        stats.examined += 1;
        return state.violated();
    }
    for c in 1..=r.min(used + 1) {
        state.assign(i, c);
        colors.push(c);
        if dfs(state, r, colors, used.max(c), stats) {
            state.unassign(i, c);
            return true;
        }
        colors.pop();
        state.unassign(i, c);
    }
    false
}

enum Task {
    /// A settled node above the split depth.
    Pruned,
    Prefix(Vec<usize>),
}

fn split<S: SearchState>(state: &mut S, r: usize, depth: usize, colors: &mut Vec<usize>, used: usize, out: &mut Vec<Task>) {
    if state.settled() {
        out.push(Task::Pruned);
        return;
    }
    if colors.len() == depth || colors.len() == state.items() {
        out.push(Task::Prefix(colors.clone()));
        return;
    }
    let i = colors.len();
    for c in 1..=r.min(used + 1) {
        state.assign(i, c);
        colors.push(c);
        split(state, r, depth, colors, used.max(c), out);
        colors.pop();
        state.unassign(i, c);
    }
}

fn run_search<S: SearchState>(base: &S, r: usize, split_depth: usize) -> (Option<Vec<usize>>, Stats) {
    let mut tasks = Vec::new();
    split(&mut base.clone(), r, split_depth.max(1), &mut Vec::new(), 0, &mut tasks);

    let first_hit = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<(Option<Vec<usize>>, Stats)>> = tasks
        .par_iter()
        .enumerate()
        .map(|(idx, task)| {
            if idx > first_hit.load(Ordering::Relaxed) {
                return None;
            }
            let mut stats = Stats::default();
            let prefix = match task {
                Task::Pruned => {
                    stats.pruned = 1;
                    return Some((None, stats));
                }
                Task::Prefix(p) => p,
            };
            let mut state = base.clone();
            for (i, &c) in prefix.iter().enumerate() {
                state.assign(i, c);
            }
            let mut colors = prefix.clone();
            let used = prefix.iter().copied().max().unwrap_or(0);
            let hit = dfs(&mut state, r, &mut colors, used, &mut stats).then_some(colors);
            if hit.is_some() {
                first_hit.fetch_min(idx, Ordering::Relaxed);
            }
            Some((hit, stats))
        })
        .collect();

    let mut total = Stats::default();
    for res in results {
        let (hit, stats) = res.expect("tasks before the first counterexample always run");
        total.examined += stats.examined;
        total.pruned += stats.pruned;
        if hit.is_some() {
            return (hit, total);
        }
    }
    (None, total)
}

/// Per-colour bookkeeping of k-tuple sums inside each class.
#[derive(Clone)]
struct SetState {
    n: usize,
    ell: u32,
    /// Pruning is sound only if no target can ever exceed `ell`.
    can_settle: bool,
    /// tuples whose largest position is `i`: (position mask, sum id)
    tuples_ending: Vec<Vec<(u64, u32)>>,
    masks: Vec<u64>,
    counts: Vec<Vec<u32>>,
    /// targets at exactly `ell` / above `ell`, per colour
    at_ell: Vec<u32>,
    above: Vec<u32>,
}

impl SetState {
    fn new(x: &FiniteSet, k: usize, ell: u64, r: usize, rho: u64) -> Self {
        let n = x.len();
        let mut ids: BTreeMap<Nat, u32> = BTreeMap::new();
        let mut tuples_ending = vec![Vec::new(); n];
        for_each_tuple(x.elements(), k, |idx, sum| {
            let next = ids.len() as u32;
            let id = *ids.entry(sum.clone()).or_insert(next);
            let mask = idx.iter().fold(0u64, |m, &i| m | (1 << i));
            tuples_ending[*idx.last().expect("k >= 1")].push((mask, id));
        });
        let ell32 = u32::try_from(ell).unwrap_or(u32::MAX);
        SetState {
            n,
            ell: ell32,
            can_settle: ell >= rho,
            tuples_ending,
            masks: vec![0; r],
            counts: vec![vec![0; ids.len()]; r],
            at_ell: vec![0; r],
            above: vec![0; r],
        }
    }
}

impl SearchState for SetState {
    fn items(&self) -> usize {
        self.n
    }

    fn assign(&mut self, item: usize, color: usize) {
        let q = color - 1;
        let mask = self.masks[q] | (1 << item);
        for &(t, id) in &self.tuples_ending[item] {
            if t & !mask == 0 {
                let c = &mut self.counts[q][id as usize];
                *c += 1;
                if *c == self.ell {
                    self.at_ell[q] += 1;
                } else if *c == self.ell + 1 {
                    self.at_ell[q] -= 1;
                    self.above[q] += 1;
                }
            }
        }
        self.masks[q] = mask;
    }

    fn unassign(&mut self, item: usize, color: usize) {
        let q = color - 1;
        let mask = self.masks[q];
        for &(t, id) in &self.tuples_ending[item] {
            if t & !mask == 0 {
                let c = &mut self.counts[q][id as usize];
                if *c == self.ell {
                    self.at_ell[q] -= 1;
                } else if *c == self.ell + 1 {
                    self.at_ell[q] += 1;
                    self.above[q] -= 1;
                }
                *c -= 1;
            }
        }
        self.masks[q] = mask & !(1 << item);
    }

    fn settled(&self) -> bool {
        self.can_settle && self.at_ell.iter().any(|&c| c > 0)
    }

    fn violated(&self) -> bool {
        (0..self.masks.len()).all(|q| self.at_ell[q] == 0 || self.above[q] > 0)
    }
}

/// Largest set the position masks of the set search can address.
pub const MAX_SET_ITEMS: usize = 64;

/// Decides `X -> [k,l]_r`.
pub fn arrow_check(x: &FiniteSet, k: usize, ell: u64, r: usize, cfg: &Config) -> Result<ArrowVerdict> {
    if k < 2 || ell < 2 {
        return Err(invalid(format!("arrow_check needs k >= 2 and ell >= 2, got k={k}, ell={ell}")));
    }
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    if x.len() > MAX_SET_ITEMS {
        return Err(Error::GuardRefusal {
            what: "set colouring search",
            size: x.len(),
            limit: MAX_SET_ITEMS,
        });
    }
    guard("set colouring search", x.len(), cfg.max_set_elements, r)?;

    let rho = crate::repset::classify(x, k)?.ell;
    let state = SetState::new(x, k, ell, r, rho);
    let (hit, stats) = run_search(&state, r, cfg.split_depth);
    let counterexample = hit.map(|colors| Coloring { r, colors });
    if let Some(c) = &counterexample {
        if let Some(w) = mono_class_witness(x, c, k, ell)? {
            return Err(Error::Tripwire(format!(
                "counterexample {:?} has class {} with rho_k = {ell} at target {}",
                c.colors, w.class, w.target
            )));
        }
    }
    Ok(ArrowVerdict {
        holds: counterexample.is_none(),
        counterexample,
        colorings_examined: stats.examined,
        pruned: stats.pruned,
    })
}

/// A colour class whose `rho_k` equals `ell`, with one target attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoWitness {
    pub class: usize,
    pub target: Nat,
    pub representations: Vec<Representation>,
}

impl MonoWitness {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "class": self.class,
            "target": nat::to_json(&self.target),
            "representations": self.representations.iter().map(Representation::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Lowest class `q` with `rho_k(X_q) = ell`, recomputed from scratch.
pub fn mono_class_witness(x: &FiniteSet, coloring: &Coloring, k: usize, ell: u64) -> Result<Option<MonoWitness>> {
    for (q, class) in coloring.set_classes(x)?.iter().enumerate() {
        let profile = rho_profile(class, k)?;
        if profile.max_value == ell {
            let w = &profile.witnesses[&ell];
            return Ok(Some(MonoWitness {
                class: q + 1,
                target: w.target.clone(),
                representations: w.representations.clone(),
            }));
        }
    }
    Ok(None)
}

/// Per-copy colour counts for edge colourings.
#[derive(Clone)]
struct EdgeState {
    m: usize,
    sizes: Vec<u32>,
    copies_of_edge: Vec<Vec<usize>>,
    counts: Vec<Vec<u32>>,
    complete: u32,
}

impl EdgeState {
    fn new(h: &OrderedGraph, copies: &[ThetaCopy], r: usize) -> Self {
        let mut copies_of_edge = vec![Vec::new(); h.edge_count()];
        let mut sizes = Vec::with_capacity(copies.len());
        for (ci, copy) in copies.iter().enumerate() {
            let edges = copy.copy.host_edges();
            sizes.push(edges.len() as u32);
            for (u, v) in edges {
                copies_of_edge[h.edge_index(u, v).expect("copy edges are host edges")].push(ci);
            }
        }
        EdgeState {
            m: h.edge_count(),
            counts: vec![vec![0; r]; copies.len()],
            sizes,
            copies_of_edge,
            complete: 0,
        }
    }
}

impl SearchState for EdgeState {
    fn items(&self) -> usize {
        self.m
    }

    fn assign(&mut self, item: usize, color: usize) {
        for &ci in &self.copies_of_edge[item] {
            self.counts[ci][color - 1] += 1;
            if self.counts[ci][color - 1] == self.sizes[ci] {
                self.complete += 1;
            }
        }
    }

    fn unassign(&mut self, item: usize, color: usize) {
        for &ci in &self.copies_of_edge[item] {
            if self.counts[ci][color - 1] == self.sizes[ci] {
                self.complete -= 1;
            }
            self.counts[ci][color - 1] -= 1;
        }
    }

    fn settled(&self) -> bool {
        self.complete > 0
    }

    fn violated(&self) -> bool {
        self.complete == 0
    }
}

/// Decides whether every `r`-colouring of `E(H)` leaves an induced
/// `Θ_{k,l}` copy monochromatic. Edges are coloured in the order of
/// [`OrderedGraph::edges`].
pub fn edge_arrow_check(h: &OrderedGraph, k: usize, ell: usize, r: usize, cfg: &Config) -> Result<ArrowVerdict> {
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    guard("edge colouring search", h.edge_count(), cfg.max_graph_edges, r)?;
    let copies = find_theta_copies(h, k, ell)?;
    let state = EdgeState::new(h, &copies, r);
    let (hit, stats) = run_search(&state, r, cfg.split_depth);
    let counterexample = hit.map(|colors| Coloring { r, colors });
    if let Some(c) = &counterexample {
        if let Some(copy) = mono_theta_witness(h, c, k, ell)? {
            return Err(Error::Tripwire(format!(
                "counterexample {:?} leaves the copy on {:?} monochromatic",
                c.colors, copy.copy.host_vertices
            )));
        }
    }
    Ok(ArrowVerdict {
        holds: counterexample.is_none(),
        counterexample,
        colorings_examined: stats.examined,
        pruned: stats.pruned,
    })
}

/// First theta copy whose edges all share a colour.
pub fn mono_theta_witness(h: &OrderedGraph, coloring: &Coloring, k: usize, ell: usize) -> Result<Option<ThetaCopy>> {
    if coloring.len() != h.edge_count() {
        return Err(invalid(format!(
            "colouring covers {} items but the graph has {} edges",
            coloring.len(),
            h.edge_count()
        )));
    }
    let color_of = |u: usize, v: usize| coloring.colors[h.edge_index(u, v).expect("copy edges are host edges")];
    Ok(find_theta_copies(h, k, ell)?.into_iter().find(|copy| {
        let edges = copy.copy.host_edges();
        let first = color_of(edges[0].0, edges[0].1);
        edges.iter().all(|&(u, v)| color_of(u, v) == first)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordgraph::{make_theta, ThetaSpec};

    fn theta_set() -> FiniteSet {
        FiniteSet::from_u64s(&[20, 120, 500, 600]).unwrap()
    }

    #[test]
    fn encoded_c4_examples() {
        let cfg = Config::default();
        let x = theta_set();
        let v = arrow_check(&x, 2, 2, 1, &cfg).unwrap();
        assert!(v.holds && v.counterexample.is_none());

        let v = arrow_check(&x, 2, 2, 2, &cfg).unwrap();
        assert!(!v.holds);
        // 1112 is the first colouring splitting the double target 620 = 20+600 = 120+500.
        assert_eq!(v.counterexample.unwrap().colors, vec![1, 1, 1, 2]);

        let split = Coloring::new(2, vec![1, 2, 2, 1]).unwrap();
        assert_eq!(mono_class_witness(&x, &split, 2, 2).unwrap(), None);

        let mono = Coloring::new(1, vec![1; 4]).unwrap();
        let w = mono_class_witness(&x, &mono, 2, 2).unwrap().unwrap();
        assert_eq!((w.class, w.target.clone()), (1, Nat::from(620u32)));
        assert_eq!(w.representations.len(), 2);
    }

    #[test]
    fn degenerate_sets() {
        let cfg = Config::default();
        let v = arrow_check(&FiniteSet::empty(), 2, 2, 2, &cfg).unwrap();
        assert!(!v.holds);
        assert_eq!(v.counterexample.unwrap().colors, Vec::<usize>::new());

        let one = FiniteSet::from_u64s(&[1]).unwrap();
        for colors in [vec![1], vec![2]] {
            let c = Coloring::new(2, colors).unwrap();
            assert_eq!(mono_class_witness(&one, &c, 2, 2).unwrap(), None);
        }
        assert!(mono_class_witness(&one, &Coloring::new(2, vec![]).unwrap(), 2, 2).is_err());
        assert!(Coloring::new(2, vec![3]).is_err());
        assert!(arrow_check(&one, 1, 2, 2, &cfg).is_err());
        assert!(arrow_check(&one, 2, 2, 0, &cfg).is_err());
    }

    #[test]
    fn counterexamples_are_confirmed() {
        let cfg = Config::default();
        let x = FiniteSet::from_u64s(&[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        let v = arrow_check(&x, 2, 2, 2, &cfg).unwrap();
        if let Some(c) = &v.counterexample {
            assert!(mono_class_witness(&x, c, 2, 2).unwrap().is_none());
        }
    }

    #[test]
    fn guard_refuses_large_sets() {
        let cfg = Config {
            max_set_elements: 5,
            ..Config::default()
        };
        let x = FiniteSet::from_u64s(&[1, 2, 3, 4, 5, 6]).unwrap();
        assert!(matches!(
            arrow_check(&x, 2, 2, 2, &cfg),
            Err(Error::GuardRefusal { size: 6, limit: 5, .. })
        ));
        assert!(arrow_check(&x, 2, 2, 1, &cfg).is_ok());
        assert_eq!(scaled_limit(24, 2), 24);
        assert_eq!(scaled_limit(24, 4), 12);
        assert_eq!(scaled_limit(24, 3), 15);
    }

    #[test]
    fn edge_examples() {
        let cfg = Config::default();
        let c4 = make_theta(&ThetaSpec::new(2, 2)).unwrap();
        assert!(edge_arrow_check(&c4, 2, 2, 1, &cfg).unwrap().holds);
        let v = edge_arrow_check(&c4, 2, 2, 2, &cfg).unwrap();
        assert!(!v.holds);
        assert_eq!(v.counterexample.unwrap().colors, vec![1, 1, 1, 2]);

        let t23 = make_theta(&ThetaSpec::new(2, 3)).unwrap();
        let v = edge_arrow_check(&t23, 2, 2, 2, &cfg).unwrap();
        assert!(!v.holds);
        let c = v.counterexample.unwrap();
        assert_eq!(mono_theta_witness(&t23, &c, 2, 2).unwrap(), None);
    }
}
