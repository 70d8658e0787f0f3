//! Forests of copies.
//!
//! A family of copies `F_1, ..., F_N` inside a host is a forest of copies if
//! some enumeration has each `F_j` meet `F_1 ∪ ... ∪ F_{j-1}` in nothing, in a
//! single vertex, or in a single edge that already belongs to an earlier
//! member. Whether a member can be added depends only on the set of members
//! placed so far, so the search runs over subsets.

use crate::config::Config;
use crate::error::{invalid, Error, Result};
use crate::ordgraph::{parse_graph_lines, write_graph_file, Copy, OrderedGraph};
use serde_json::json;

/// Host vertices addressable by the subset search.
pub const MAX_HOST_VERTICES: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub copy: Copy,
    pub pattern_id: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopyFamily {
    pub host: OrderedGraph,
    pub members: Vec<Member>,
}

impl CopyFamily {
    pub fn new(host: OrderedGraph) -> Self {
        CopyFamily {
            host,
            members: Vec::new(),
        }
    }

    /// Adds the copy induced on `vertices`. Returns `false` if the same copy
    /// is already present; members form a set.
    pub fn add(&mut self, vertices: Vec<usize>, pattern_id: Option<String>) -> Result<bool> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid(format!("copy vertices {vertices:?} must be strictly increasing")));
        }
        let copy = Copy::induced(&self.host, vertices)?;
        if self.members.iter().any(|m| m.copy == copy) {
            return Ok(false);
        }
        self.members.push(Member { copy, pattern_id });
        Ok(true)
    }

    /// Adds an already built copy after checking it against the host.
    pub fn add_copy(&mut self, copy: Copy, pattern_id: Option<String>) -> Result<bool> {
        copy.validate(&self.host)?;
        if self.members.iter().any(|m| m.copy == copy) {
            return Ok(false);
        }
        self.members.push(Member { copy, pattern_id });
        Ok(true)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `self` followed by the selected members of `other` (same host).
    pub fn union_with(&self, other: &CopyFamily, pick: &[usize]) -> Result<CopyFamily> {
        if self.host != other.host {
            return Err(invalid("families live in different hosts"));
        }
        let mut out = self.clone();
        for &i in pick {
            let m = &other.members[i];
            out.add_copy(m.copy.clone(), m.pattern_id.clone())?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "host": self.host.to_json(),
            "members": self.members.iter().map(|m| json!({
                "vertices": m.copy.host_vertices,
                "pattern": m.pattern_id,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Parses a copy-family file: a graph file for the host, then one
/// `c <v_1> ... <v_p> [p:<pattern id>]` line per copy.
pub fn parse_family_file(text: &str) -> Result<CopyFamily> {
    let mut graph_lines = Vec::new();
    let mut copy_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.starts_with("c ") || line == "c" {
            copy_lines.push((i + 1, line));
        } else {
            graph_lines.push((i + 1, raw));
        }
    }
    let host = parse_graph_lines(graph_lines.into_iter())?;
    let mut family = CopyFamily::new(host);
    for (line, text) in copy_lines {
        let mut vertices = Vec::new();
        let mut pattern = None;
        for tok in text.split_whitespace().skip(1) {
            if let Some(id) = tok.strip_prefix("p:") {
                pattern = Some(id.to_string());
            } else {
                vertices.push(tok.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("expected a vertex, got {tok:?}"),
                })?);
            }
        }
        if vertices.is_empty() {
            return Err(Error::Parse {
                line,
                msg: "copy line lists no vertices".into(),
            });
        }
        family.add(vertices, pattern).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
    }
    Ok(family)
}

pub fn write_family_file(family: &CopyFamily) -> String {
    let mut out = write_graph_file(&family.host);
    for m in &family.members {
        out.push('c');
        for v in &m.copy.host_vertices {
            out.push_str(&format!(" {v}"));
        }
        if let Some(id) = &m.pattern_id {
            out.push_str(&format!(" p:{id}"));
        }
        out.push('\n');
    }
    out
}

/// Why the remaining members cannot be placed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StuckCut {
    /// A largest placeable subfamily, in a valid insertion order.
    pub placed: Vec<usize>,
    /// Every other member with the host vertices it shares with `placed`.
    pub blocked: Vec<(usize, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestVerdict {
    pub is_forest: bool,
    /// Member indices in insertion order, when the family is a forest.
    pub ordering: Option<Vec<usize>>,
    pub cut: Option<StuckCut>,
}

impl ForestVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "is_forest": self.is_forest,
            "ordering": self.ordering,
            "cut": self.cut.as_ref().map(|c| json!({
                "placed": c.placed,
                "blocked": c.blocked.iter().map(|(i, shared)| json!({ "member": i, "shared": shared })).collect::<Vec<_>>(),
            })),
        })
    }
}

struct Prepared<'a> {
    family: &'a CopyFamily,
    vmask: Vec<u128>,
}

impl<'a> Prepared<'a> {
    fn new(family: &'a CopyFamily) -> Result<Self> {
        if family.host.vertex_count() > MAX_HOST_VERTICES {
            return Err(Error::GuardRefusal {
                what: "forest search host",
                size: family.host.vertex_count(),
                limit: MAX_HOST_VERTICES,
            });
        }
        let vmask = family
            .members
            .iter()
            .map(|m| m.copy.host_vertices.iter().fold(0u128, |acc, &v| acc | (1 << v)))
            .collect();
        Ok(Prepared { family, vmask })
    }

    /// Can member `j` join the members in `placed` whose vertices cover `union`?
    fn addable(&self, placed: u32, union: u128, j: usize) -> bool {
        let shared = union & self.vmask[j];
        match shared.count_ones() {
            0 | 1 => true,
            2 => {
                let u = shared.trailing_zeros() as usize;
                let v = 127 - shared.leading_zeros() as usize;
                let members = &self.family.members;
                members[j].copy.pattern_has_host_edge(u, v)
                    && (0..members.len())
                        .filter(|&i| placed & (1 << i) != 0)
                        .any(|i| members[i].copy.pattern_has_host_edge(u, v))
            }
            _ => false,
        }
    }

    fn shared_vertices(&self, union: u128, j: usize) -> Vec<usize> {
        let shared = union & self.vmask[j];
        (0..MAX_HOST_VERTICES).filter(|&v| shared & (1 << v) != 0).collect()
    }
}

impl Copy {
    /// Whether host vertices `u`, `v` are both in the copy and adjacent in its pattern.
    pub fn pattern_has_host_edge(&self, u: usize, v: usize) -> bool {
        match (self.host_vertices.binary_search(&u), self.host_vertices.binary_search(&v)) {
            (Ok(a), Ok(b)) => self.pattern.has_edge(a, b),
            _ => false,
        }
    }
}

/// Decides whether `family` is a forest of copies by dynamic programming over
/// subsets of members.
pub fn is_forest_of_copies(family: &CopyFamily, cfg: &Config) -> Result<ForestVerdict> {
    if family.is_empty() {
        return Err(invalid("a forest of copies needs at least one member"));
    }
    let n = family.len();
    if n > cfg.max_forest_copies || n > 30 {
        return Err(Error::GuardRefusal {
            what: "forest search",
            size: n,
            limit: cfg.max_forest_copies.min(30),
        });
    }
    let prep = Prepared::new(family)?;
    let full = 1u32.checked_shl(n as u32).unwrap_or(0).wrapping_sub(1);
    let states = 1usize << n;
    // prev[mask] = member added last on the first route found, or NONE.
    const NONE: u8 = u8::MAX;
    let mut prev = vec![NONE; states];
    let mut reachable = vec![false; states];
    let mut union = vec![0u128; states];
    reachable[0] = true;
    let mut best = 0u32;
    for mask in 0..states as u32 {
        if mask != 0 {
            let low = mask.trailing_zeros() as usize;
            union[mask as usize] = union[(mask & (mask - 1)) as usize] | prep.vmask[low];
        }
        if !reachable[mask as usize] {
            continue;
        }
        if mask.count_ones() > best.count_ones() {
            best = mask;
        }
        for j in 0..n {
            let bit = 1u32 << j;
            if mask & bit != 0 || reachable[(mask | bit) as usize] {
                continue;
            }
            if prep.addable(mask, union[mask as usize], j) {
                reachable[(mask | bit) as usize] = true;
                prev[(mask | bit) as usize] = j as u8;
            }
        }
    }
    let order_of = |mut mask: u32| {
        let mut order = Vec::new();
        while mask != 0 {
            let j = prev[mask as usize];
            order.push(j as usize);
            mask &= !(1 << j);
        }
        order.reverse();
        order
    };
    if reachable[full as usize] {
        return Ok(ForestVerdict {
            is_forest: true,
            ordering: Some(order_of(full)),
            cut: None,
        });
    }
    let blocked = (0..n)
        .filter(|&j| best & (1 << j) == 0)
        .map(|j| (j, prep.shared_vertices(union[best as usize], j)))
        .collect();
    Ok(ForestVerdict {
        is_forest: false,
        ordering: None,
        cut: Some(StuckCut {
            placed: order_of(best),
            blocked,
        }),
    })
}

/// Checks a proposed insertion order against the definition directly.
pub fn check_ordering(family: &CopyFamily, order: &[usize]) -> Result<bool> {
    let prep = Prepared::new(family)?;
    if family.len() > 32 {
        return Err(invalid("orderings are checked for at most 32 members"));
    }
    let mut placed = 0u32;
    let mut union = 0u128;
    for &j in order {
        if j >= family.len() || placed & (1 << j) != 0 {
            return Ok(false);
        }
        if !prep.addable(placed, union, j) {
            return Ok(false);
        }
        placed |= 1 << j;
        union |= prep.vmask[j];
    }
    Ok(placed.count_ones() as usize == family.len())
}

/// Smallest set of pool members (by size, then lexicographically) whose
/// addition turns `family` into a forest of copies, within `budget`.
pub fn find_extension(family: &CopyFamily, pool: &CopyFamily, budget: usize, cfg: &Config) -> Result<Option<Vec<usize>>> {
    if family.host != pool.host {
        return Err(invalid("family and pool live in different hosts"));
    }
    let combined = family.len() + pool.len();
    if combined > cfg.max_forest_copies {
        return Err(Error::GuardRefusal {
            what: "forest extension search",
            size: combined,
            limit: cfg.max_forest_copies,
        });
    }
    for size in 0..=budget.min(pool.len()) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let candidate = family.union_with(pool, &pick)?;
            if !candidate.is_empty() && is_forest_of_copies(&candidate, cfg)?.is_forest {
                return Ok(Some(pick));
            }
            if !next_combination(&mut pick, pool.len()) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Small hand-built families.
pub mod examples {
    use super::*;

    /// Ten vertices: a pentagon `0..4` whose sides carry the triangles
    /// `{i, i+1, 5 + (i+1) mod 5}`, plus the chords `0 2` and `0 3`.
    pub fn triangle_cycle_host() -> OrderedGraph {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (0, 3)];
        for (a, b, apex) in [(0, 1, 6), (1, 2, 7), (2, 3, 8), (3, 4, 9), (0, 4, 5)] {
            edges.push((a, apex));
            edges.push((b, apex));
        }
        OrderedGraph::new(10, edges).expect("fixture graph is valid")
    }

    fn family(triangles: &[[usize; 3]]) -> CopyFamily {
        let mut f = CopyFamily::new(triangle_cycle_host());
        for t in triangles {
            f.add(t.to_vec(), Some("triangle".into())).expect("fixture triangles are induced");
        }
        f
    }

    /// Five triangles, consecutive ones sharing one vertex, closing up in a cycle.
    pub fn triangle_cycle() -> CopyFamily {
        family(&[[0, 1, 6], [1, 2, 7], [2, 3, 8], [3, 4, 9], [0, 4, 5]])
    }

    /// The three triangles of the fan at vertex 0 spanning the pentagon.
    pub fn fan_triangles() -> CopyFamily {
        family(&[[0, 2, 3], [0, 1, 2], [0, 3, 4]])
    }

    /// The cycle together with the fan: eight triangles.
    pub fn triangle_cycle_with_fan() -> CopyFamily {
        let fan = fan_triangles();
        triangle_cycle().union_with(&fan, &[0, 1, 2]).expect("same host")
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn cycle_of_triangles_is_not_a_forest() {
        let cfg = Config::default();
        let v = is_forest_of_copies(&triangle_cycle(), &cfg).unwrap();
        assert!(!v.is_forest);
        let cut = v.cut.unwrap();
        assert_eq!(cut.placed.len(), 4);
        assert_eq!(cut.blocked.len(), 1);
        assert_eq!(cut.blocked[0].1.len(), 2);
    }

    #[test]
    fn adding_the_fan_makes_a_forest() {
        let cfg = Config::default();
        let fam = triangle_cycle_with_fan();
        assert_eq!(fam.len(), 8);
        let v = is_forest_of_copies(&fam, &cfg).unwrap();
        assert!(v.is_forest);
        assert!(check_ordering(&fam, &v.ordering.unwrap()).unwrap());
    }

    #[test]
    fn extension_examples() {
        let cfg = Config::default();
        let ext = find_extension(&triangle_cycle(), &fan_triangles(), 3, &cfg).unwrap();
        assert_eq!(ext, Some(vec![0, 1, 2]));
        let ext = find_extension(&triangle_cycle(), &fan_triangles(), 2, &cfg).unwrap();
        assert_eq!(ext, None);
        let empty = CopyFamily::new(triangle_cycle_host());
        assert_eq!(find_extension(&triangle_cycle(), &empty, 3, &cfg).unwrap(), None);
        assert_eq!(
            find_extension(&triangle_cycle_with_fan(), &fan_triangles(), 0, &cfg).unwrap(),
            Some(vec![])
        );
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let host = OrderedGraph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let mut f = CopyFamily::new(host);
        f.add(vec![0, 1, 2], None).unwrap();
        f.add(vec![2, 3, 4], None).unwrap();
        let cfg = Config::default();
        assert!(is_forest_of_copies(&f, &cfg).unwrap().is_forest);
        assert!(check_ordering(&f, &[0, 1]).unwrap());
        assert!(check_ordering(&f, &[1, 0]).unwrap());
    }

    #[test]
    fn shared_pair_must_be_a_copy_edge() {
        // Two paths 0-1-2 and 0-3-2 share {0, 2}, which is not an edge.
        let host = OrderedGraph::new(4, [(0, 1), (1, 2), (0, 3), (2, 3)]).unwrap();
        let mut f = CopyFamily::new(host);
        f.add(vec![0, 1, 2], None).unwrap();
        f.add(vec![0, 2, 3], None).unwrap();
        assert!(!is_forest_of_copies(&f, &Config::default()).unwrap().is_forest);
    }

    #[test]
    fn duplicates_collapse_and_files_round_trip() {
        let mut f = triangle_cycle();
        assert!(!f.add(vec![0, 1, 6], None).unwrap());
        assert_eq!(f.len(), 5);
        let text = write_family_file(&f);
        assert_eq!(parse_family_file(&text).unwrap(), f);
        assert!(f.add(vec![1, 0, 6], None).is_err());
        assert!(parse_family_file("v 3\ne 0 1\nc 0 x\n").is_err());
        assert!(is_forest_of_copies(&CopyFamily::new(triangle_cycle_host()), &Config::default()).is_err());
    }

    #[test]
    fn guard_limits_family_size() {
        let cfg = Config {
            max_forest_copies: 7,
            ..Config::default()
        };
        assert!(matches!(
            find_extension(&triangle_cycle(), &fan_triangles(), 3, &cfg),
            Err(Error::GuardRefusal { size: 8, .. })
        ));
    }
}
