//! Ordered graphs, generalised theta graphs and their induced copies.
//!
//! Vertices are `0..n` and the vertex order is the index order, so an
//! order-preserving embedding is just a strictly increasing vertex map.
//! `Θ_{k,l}` consists of `l` internally disjoint ascending paths of length
//! `k` between a common minimum `a_0` and maximum `a_k`.

use crate::cert::{Certificate, Check};
use crate::error::{invalid, Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::collections::BTreeSet;
use std::fmt;

/// Simple undirected graph on `0..n`, ordered by index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedGraph(v={}, e={:?})", self.n, self.edges)
    }
}

impl OrderedGraph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// duplicate edges (in either orientation).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(invalid(format!("edge {u}-{v} out of range for {n} vertices")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(invalid(format!("duplicate edge {u}-{v}")));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(OrderedGraph {
            n,
            edges: set.into_iter().collect(),
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`edges`](Self::edges).
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// The subgraph induced by strictly increasing `vertices`, relabelled `0..p`.
    pub fn induced(&self, vertices: &[usize]) -> Result<OrderedGraph> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("induced subgraph vertices must be strictly increasing"));
        }
        if vertices.last().is_some_and(|&v| v >= self.n) {
            return Err(invalid("induced subgraph vertex out of range"));
        }
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        OrderedGraph::new(vertices.len(), edges)
    }

    /// Places `other` after `self` in the vertex order.
    pub fn disjoint_union(&self, other: &OrderedGraph) -> OrderedGraph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        OrderedGraph::new(self.n + other.n, edges).expect("disjoint union of valid graphs")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "vertices": self.n, "edges": self.edges })
    }
}

/// Parses the graph-file format: a `v <count>` line followed by `e <u> <v>`
/// lines; `#` comments and blank lines are ignored.
pub fn parse_graph_file(text: &str) -> Result<OrderedGraph> {
    parse_graph_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

pub(crate) fn parse_graph_lines<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<OrderedGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line_no, raw) in lines {
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |msg: String| Error::Parse { line: line_no, msg };
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(format!("expected a nonnegative integer, got {s:?}")))
        };
        match (toks[0], n) {
            ("v", None) if toks.len() == 2 => n = Some(num(toks[1])?),
            ("v", Some(_)) => return Err(parse_err("duplicate `v` line".into())),
            ("e", Some(count)) if toks.len() == 3 => {
                let (u, v) = (num(toks[1])?, num(toks[2])?);
                if u >= count || v >= count || u == v {
                    return Err(parse_err(format!("invalid edge {u} {v} for {count} vertices")));
                }
                edges.push((u, v));
            }
            (_, None) => return Err(parse_err("graph must start with `v <vertex_count>`".into())),
            _ => return Err(parse_err(format!("unrecognised line {line:?}"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: last_line,
        msg: "missing `v <vertex_count>` line".into(),
    })?;
    OrderedGraph::new(n, edges).map_err(|e| Error::Parse {
        line: last_line,
        msg: e.to_string(),
    })
}

pub fn write_graph_file(g: &OrderedGraph) -> String {
    let mut out = format!("v {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// How internal vertices of different theta paths compare.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Interleaving {
    /// `a_1^(1) < ... < a_1^(l) < a_2^(1) < ...`
    #[default]
    LevelMajor,
    /// `a_1^(1) < ... < a_{k-1}^(1) < a_1^(2) < ...`
    PathMajor,
    /// Internal vertices listed in increasing order as `(level, path)` with
    /// levels in `1..k` and paths in `0..l`.
    Explicit(Vec<(usize, usize)>),
}

impl Interleaving {
    pub fn name(&self) -> &'static str {
        match self {
            Interleaving::LevelMajor => "level-major",
            Interleaving::PathMajor => "path-major",
            Interleaving::Explicit(_) => "explicit",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSpec {
    pub k: usize,
    pub ell: usize,
    pub interleaving: Interleaving,
}

impl ThetaSpec {
    pub fn new(k: usize, ell: usize) -> Self {
        ThetaSpec {
            k,
            ell,
            interleaving: Interleaving::LevelMajor,
        }
    }

    pub fn with_interleaving(mut self, interleaving: Interleaving) -> Self {
        self.interleaving = interleaving;
        self
    }

    pub fn vertex_count(&self) -> usize {
        (self.k - 1) * self.ell + 2
    }
}

/// Vertex positions of a constructed theta graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaLayout {
    pub a0: usize,
    pub ak: usize,
    /// Each path as `a_0, a_1^(j), ..., a_{k-1}^(j), a_k`.
    pub paths: Vec<Vec<usize>>,
}

pub fn theta_layout(spec: &ThetaSpec) -> Result<ThetaLayout> {
    let (k, ell) = (spec.k, spec.ell);
    if k < 2 || ell < 2 {
        return Err(invalid(format!("theta graphs need k >= 2 and ell >= 2, got k={k}, ell={ell}")));
    }
    let internal = (k - 1) * ell;
    let ak = internal + 1;
    // pos[j][i - 1] = vertex of a_i^(j)
    let mut pos = vec![vec![usize::MAX; k - 1]; ell];
    match &spec.interleaving {
        Interleaving::LevelMajor => {
            for (j, row) in pos.iter_mut().enumerate() {
                for (i, p) in row.iter_mut().enumerate() {
                    *p = 1 + i * ell + j;
                }
            }
        }
        Interleaving::PathMajor => {
            for (j, row) in pos.iter_mut().enumerate() {
                for (i, p) in row.iter_mut().enumerate() {
                    *p = 1 + j * (k - 1) + i;
                }
            }
        }
        Interleaving::Explicit(order) => {
            if order.len() != internal {
                return Err(invalid(format!(
                    "explicit interleaving lists {} vertices, expected {internal}",
                    order.len()
                )));
            }
            let mut next_level = vec![1usize; ell];
            for (idx, &(level, path)) in order.iter().enumerate() {
                if path >= ell || level == 0 || level >= k {
                    return Err(invalid(format!("interleaving entry ({level}, {path}) out of range")));
                }
                if next_level[path] != level {
                    return Err(invalid(format!(
                        "interleaving places level {level} of path {path} out of ascending order"
                    )));
                }
                next_level[path] += 1;
                pos[path][level - 1] = idx + 1;
            }
        }
    }
    let paths = pos
        .into_iter()
        .map(|row| {
            let mut p = Vec::with_capacity(k + 1);
            p.push(0);
            p.extend(row);
            p.push(ak);
            p
        })
        .collect();
    Ok(ThetaLayout { a0: 0, ak, paths })
}

/// Builds `Θ_{k,l}` with `a_0 = 0`, `a_k = (k-1)l + 1`.
pub fn make_theta(spec: &ThetaSpec) -> Result<OrderedGraph> {
    let layout = theta_layout(spec)?;
    let edges = layout
        .paths
        .iter()
        .flat_map(|p| p.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>());
    OrderedGraph::new(spec.vertex_count(), edges)
}

/// All induced cycles of length `3..=s`, each once, rotated so the smallest
/// vertex comes first and its smaller cycle-neighbour second. Sorted by
/// length, then lexicographically.
pub fn induced_cycles_upto(g: &OrderedGraph, s: usize) -> Result<Vec<Vec<usize>>> {
    if s < 3 {
        return Err(invalid("cycle length bound must be at least 3"));
    }
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(s);
    let mut on_path = vec![false; g.vertex_count()];

    fn extend(
        g: &OrderedGraph,
        s: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let start = path[0];
        let last = *path.last().expect("path is nonempty");
        for &w in g.neighbors(last) {
            if w <= start || on_path[w] {
                continue;
            }
            // Chordless: w may only touch the last vertex and possibly the start.
            let interior = path.get(1..path.len() - 1).unwrap_or(&[]);
            if interior.iter().any(|&p| g.has_edge(p, w)) {
                continue;
            }
            if path.len() >= 2 && g.has_edge(start, w) {
                if path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    out.push(cycle);
                }
                continue;
            }
            if path.len() + 1 < s {
                path.push(w);
                on_path[w] = true;
                extend(g, s, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    for v in 0..g.vertex_count() {
        path.push(v);
        on_path[v] = true;
        extend(g, s, &mut path, &mut on_path, &mut out);
        on_path[v] = false;
        path.pop();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Length of a shortest cycle, by breadth-first search from every vertex.
pub fn girth(g: &OrderedGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w && parent[w] != u {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// An order-preserving induced embedding of `pattern` into a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Copy {
    /// Strictly increasing host vertices; pattern vertex `i` maps to entry `i`.
    pub host_vertices: Vec<usize>,
    pub pattern: OrderedGraph,
}

impl Copy {
    /// The copy induced in `host` by `vertices`.
    pub fn induced(host: &OrderedGraph, vertices: Vec<usize>) -> Result<Copy> {
        let pattern = host.induced(&vertices)?;
        Ok(Copy {
            host_vertices: vertices,
            pattern,
        })
    }

    /// Checks that this is an induced ordered copy inside `host`.
    pub fn validate(&self, host: &OrderedGraph) -> Result<()> {
        let expected = host.induced(&self.host_vertices)?;
        if expected != self.pattern {
            return Err(invalid(format!(
                "copy on {:?} is not induced: host edges differ from pattern edges",
                self.host_vertices
            )));
        }
        Ok(())
    }

    /// Pattern edges mapped to host vertices, `(u, v)` with `u < v`.
    pub fn host_edges(&self) -> Vec<(usize, usize)> {
        self.pattern
            .edges()
            .iter()
            .map(|&(a, b)| (self.host_vertices[a], self.host_vertices[b]))
            .collect()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.host_vertices.binary_search(&v).is_ok()
    }
}

/// An induced ordered copy of some interleaving of `Θ_{k,l}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaCopy {
    pub a0: usize,
    pub ak: usize,
    /// Host paths `a_0 .. a_k`, sorted lexicographically.
    pub paths: Vec<Vec<usize>>,
    pub copy: Copy,
}

impl ThetaCopy {
    pub fn to_json(&self) -> serde_json::Value {
        json!({ "a0": self.a0, "ak": self.ak, "paths": self.paths })
    }
}

/// Ascending paths `a0 < v_1 < ... < v_{k-1} < ak` of length `k` that are
/// induced in `g` (no chords, including `a0 ak`).
fn induced_ascending_paths(g: &OrderedGraph, a0: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(g: &OrderedGraph, k: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().expect("nonempty");
        for &w in g.neighbors(last) {
            if w <= last {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
                continue;
            }
            path.push(w);
            if path.len() == k + 1 {
                out.push(path.clone());
            } else {
                rec(g, k, path, out);
            }
            path.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, k, &mut vec![a0], &mut out);
    out
}

/// All induced ordered copies of `Θ_{k,l}` in `h`, for any interleaving.
/// Each copy appears once regardless of how its paths are labelled.
pub fn find_theta_copies(h: &OrderedGraph, k: usize, ell: usize) -> Result<Vec<ThetaCopy>> {
    if k < 2 || ell < 2 {
        return Err(invalid(format!("theta copies need k >= 2 and ell >= 2, got k={k}, ell={ell}")));
    }
    let mut out = Vec::new();
    for a0 in 0..h.vertex_count() {
        let mut by_end: std::collections::BTreeMap<usize, Vec<Vec<usize>>> = Default::default();
        for p in induced_ascending_paths(h, a0, k) {
            by_end.entry(p[k]).or_default().push(p);
        }
        for (ak, paths) in by_end {
            if paths.len() < ell {
                continue;
            }
            let compatible = |p: &[usize], q: &[usize]| {
                let (pi, qi) = (&p[1..k], &q[1..k]);
                pi.iter().all(|u| !qi.contains(u) && qi.iter().all(|&v| !h.has_edge(*u, v)))
            };
            let mut chosen: Vec<usize> = Vec::with_capacity(ell);
            collect_cliques(&paths, ell, 0, &mut chosen, &compatible, &mut |sel| {
                let mut verts: Vec<usize> = sel
                    .iter()
                    .flat_map(|&i| paths[i].iter().copied())
                    .collect();
                verts.sort_unstable();
                verts.dedup();
                let copy = Copy::induced(h, verts).expect("path vertices are in range");
                out.push(ThetaCopy {
                    a0,
                    ak,
                    paths: sel.iter().map(|&i| paths[i].clone()).collect(),
                    copy,
                });
            });
        }
    }
    out.sort_by(|a, b| {
        a.copy
            .host_vertices
            .cmp(&b.copy.host_vertices)
            .then_with(|| a.paths.cmp(&b.paths))
    });
    Ok(out)
}

fn collect_cliques<C, F>(
    paths: &[Vec<usize>],
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    compatible: &C,
    emit: &mut F,
) where
    C: Fn(&[usize], &[usize]) -> bool,
    F: FnMut(&[usize]),
{
    if chosen.len() == size {
        emit(chosen);
        return;
    }
    for i in start..paths.len() {
        if paths.len() - i < size - chosen.len() {
            break;
        }
        if chosen.iter().all(|&c| compatible(&paths[c], &paths[i])) {
            chosen.push(i);
            collect_cliques(paths, size, i + 1, chosen, compatible, emit);
            chosen.pop();
        }
    }
}

/// Checks the local structure needed by the encoding argument on a finite
/// graph: every induced cycle of length at most `s` has length `2k` and lies
/// in exactly one induced `Θ_{k,l}`, and the graph has no induced `Θ_{k,l+1}`.
pub fn check_local_structure(g: &OrderedGraph, k: usize, ell: usize, s: usize) -> Result<Certificate> {
    if k < 2 || ell < 2 {
        return Err(invalid(format!("need k >= 2 and ell >= 2, got k={k}, ell={ell}")));
    }
    if s < 2 * k {
        return Err(invalid(format!("cycle bound s={s} must be at least 2k={}", 2 * k)));
    }
    let cycles = induced_cycles_upto(g, s)?;
    let copies = find_theta_copies(g, k, ell)?;
    let larger = find_theta_copies(g, k, ell + 1)?;

    let mut cert = Certificate::new("local-structure")
        .param("k", k)
        .param("ell", ell)
        .param("s", s)
        .param("vertices", g.vertex_count())
        .param("edges", g.edge_count());
    cert.stat("induced_cycles", cycles.len() as u64);
    cert.stat("theta_copies", copies.len() as u64);
    cert.stat("larger_theta_copies", larger.len() as u64);

    match cycles.iter().find(|c| c.len() != 2 * k) {
        Some(bad) => cert.push(Check::fail(
            "cycle_lengths",
            json!({ "cycle": bad, "length": bad.len(), "expected": 2 * k }),
        )),
        None => cert.push(Check::pass("cycle_lengths")),
    }

    let mut unique = Check::pass("unique_theta");
    for c in cycles.iter().filter(|c| c.len() == 2 * k) {
        let containing = copies
            .iter()
            .filter(|t| c.iter().all(|&v| t.copy.contains_vertex(v)))
            .count();
        if containing != 1 {
            unique = Check::fail(
                "unique_theta",
                json!({ "cycle": c, "copies_containing": containing }),
            );
            break;
        }
    }
    cert.push(unique);

    match larger.first() {
        Some(t) => cert.push(Check::fail(
            "theta_ell_plus_one_free",
            json!({ "copy": t.to_json() }),
        )),
        None => cert.push(Check::pass("theta_ell_plus_one_free")),
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta(k: usize, ell: usize) -> OrderedGraph {
        make_theta(&ThetaSpec::new(k, ell)).unwrap()
    }

    #[test]
    fn theta_counts() {
        let g = theta(5, 3);
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 15));
        let c4 = theta(2, 2);
        assert_eq!(c4.edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let c6 = theta(3, 2);
        assert_eq!(c6.edges(), &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)]);
        assert_eq!(girth(&c6), Some(6));
        assert!(make_theta(&ThetaSpec::new(1, 3)).is_err());
        assert!(make_theta(&ThetaSpec::new(3, 1)).is_err());
    }

    #[test]
    fn path_major_and_explicit_layouts() {
        let g = make_theta(&ThetaSpec::new(3, 2).with_interleaving(Interleaving::PathMajor)).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 5), (3, 4), (4, 5)]);
        let order = vec![(1, 1), (1, 0), (2, 0), (2, 1)];
        let g = make_theta(&ThetaSpec::new(3, 2).with_interleaving(Interleaving::Explicit(order))).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 4), (2, 3), (3, 5), (4, 5)]);
        let bad = vec![(2, 0), (1, 0), (1, 1), (2, 1)];
        assert!(make_theta(&ThetaSpec::new(3, 2).with_interleaving(Interleaving::Explicit(bad))).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(induced_cycles_upto(&theta(2, 2), 4).unwrap(), vec![vec![0, 1, 3, 2]]);
        let cycles = induced_cycles_upto(&theta(5, 3), 10).unwrap();
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.len() == 10));

        let k4 = OrderedGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cycles = induced_cycles_upto(&k4, 4).unwrap();
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 3));
        assert!(induced_cycles_upto(&k4, 2).is_err());
    }

    #[test]
    fn theta_copy_examples() {
        let copies = find_theta_copies(&theta(3, 2), 3, 2).unwrap();
        assert_eq!(copies.len(), 1);
        assert_eq!(copies[0].copy.host_vertices, (0..6).collect::<Vec<_>>());

        assert_eq!(find_theta_copies(&theta(3, 3), 3, 2).unwrap().len(), 3);

        let path = OrderedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(find_theta_copies(&path, 3, 2).unwrap().is_empty());

        // A chord between two paths kills the copy.
        let mut edges = theta(3, 2).edges().to_vec();
        edges.push((1, 2));
        let chorded = OrderedGraph::new(6, edges).unwrap();
        assert!(find_theta_copies(&chorded, 3, 2).unwrap().is_empty());
    }

    #[test]
    fn local_structure_examples() {
        let cert = check_local_structure(&theta(2, 2), 2, 2, 4).unwrap();
        assert!(cert.passed);

        let cert = check_local_structure(&theta(2, 3), 2, 2, 4).unwrap();
        assert!(!cert.passed);
        assert!(cert.check("cycle_lengths").unwrap().passed);
        assert!(!cert.check("theta_ell_plus_one_free").unwrap().passed);
        assert_eq!(cert.stats["induced_cycles"], 3);

        let c7 = OrderedGraph::new(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        let g = theta(3, 2).disjoint_union(&c7);
        let cert = check_local_structure(&g, 3, 2, 7).unwrap();
        assert!(!cert.passed);
        let w = cert.check("cycle_lengths").unwrap().witness.as_ref().unwrap();
        assert_eq!(w["length"], 7);

        assert!(check_local_structure(&theta(3, 2), 3, 2, 5).is_err());
    }

    #[test]
    fn graph_file_round_trip() {
        let g = theta(3, 2);
        let text = write_graph_file(&g);
        assert_eq!(text.lines().next(), Some("v 6"));
        assert_eq!(parse_graph_file(&text).unwrap(), g);
        assert!(matches!(
            parse_graph_file("e 0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_graph_file("v 2\ne 0 2\n").is_err());
        assert!(parse_graph_file("v 2\ne 0 1\ne 1 0\n").is_err());
        assert!(parse_graph_file("# nothing\n").is_err());
    }

    #[test]
    fn graph_validation() {
        assert!(OrderedGraph::new(2, [(0, 0)]).is_err());
        assert!(OrderedGraph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(OrderedGraph::new(2, [(0, 2)]).is_err());
        let g = theta(2, 2);
        assert!(g.has_edge(3, 1) && !g.has_edge(0, 3));
        assert_eq!(g.induced(&[0, 1, 3]).unwrap().edges(), &[(0, 1), (1, 2)]);
        assert!(g.induced(&[1, 0]).is_err());
    }
}
