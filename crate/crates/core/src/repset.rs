//! Additive representation counts over finite sets.
//!
//! `rho(X, k, n)` is the number of nondecreasing `k`-tuples from `X` summing
//! to `n`; `rho_k(X)` is its maximum over `n`. A set with `rho_k(X) = l` is a
//! `B_{k,l}`-set and a `B_{k,1}`-set is a `B_k`-set. All quantities are exact:
//! every achievable target is at most `k * max(X)`, so enumerating the
//! `binomial(|X| + k - 1, k)` nondecreasing tuples is complete.

use crate::cert::{Certificate, Check};
use crate::error::{invalid, Error, Result};
use crate::nat::{self, Nat};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Default number of representations materialised per target.
pub const DEFAULT_REP_CAP: usize = 10_000;

/// A finite set of positive naturals, stored strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteSet {
    #[serde(with = "nat::decimal_vec")]
    elems: Vec<Nat>,
}

impl FiniteSet {
    /// Builds a set from strictly increasing positive elements.
    pub fn new(elems: Vec<Nat>) -> Result<Self> {
        if elems.iter().any(Zero::is_zero) {
            return Err(invalid("set elements must be at least 1"));
        }
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("set elements must be strictly increasing"));
        }
        Ok(FiniteSet { elems })
    }

    /// Sorts and deduplicates; returns the set and the number of dropped duplicates.
    pub fn from_unsorted(mut elems: Vec<Nat>) -> Result<(Self, usize)> {
        let before = elems.len();
        elems.sort();
        elems.dedup();
        let dropped = before - elems.len();
        Ok((FiniteSet::new(elems)?, dropped))
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Ok(FiniteSet::from_unsorted(values.iter().map(|&v| Nat::from(v)).collect())?.0)
    }

    pub fn empty() -> Self {
        FiniteSet::default()
    }

    pub fn elements(&self) -> &[Nat] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn max(&self) -> Option<&Nat> {
        self.elems.last()
    }

    pub fn index_of(&self, x: &Nat) -> Option<usize> {
        self.elems.binary_search(x).ok()
    }

    pub fn contains(&self, x: &Nat) -> bool {
        self.index_of(x).is_some()
    }

    pub fn is_subset_of(&self, other: &FiniteSet) -> bool {
        self.elems.iter().all(|x| other.contains(x))
    }

    /// The subset selected by a predicate on element positions.
    pub fn select(&self, mut keep: impl FnMut(usize) -> bool) -> FiniteSet {
        FiniteSet {
            elems: self
                .elems
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(*i))
                .map(|(_, x)| x.clone())
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        nat::list_to_json(&self.elems)
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Parses the set-file format: one decimal natural per line, `#` comments,
/// blank lines ignored. Returns the set and the number of duplicate lines.
pub fn parse_set_file(text: &str) -> Result<(FiniteSet, usize)> {
    let mut elems = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let value = nat::parse(line).ok_or_else(|| Error::Parse {
            line: idx + 1,
            msg: format!("expected a decimal natural, got {line:?}"),
        })?;
        if value.is_zero() {
            return Err(Error::Parse {
                line: idx + 1,
                msg: "set elements must be at least 1".into(),
            });
        }
        elems.push(value);
    }
    let (set, dups) = FiniteSet::from_unsorted(elems)?;
    if dups > 0 {
        log::warn!("set file contained {dups} duplicate value(s); they were collapsed");
    }
    Ok((set, dups))
}

pub fn write_set_file(set: &FiniteSet) -> String {
    let mut out = String::new();
    for x in set.elements() {
        out.push_str(&x.to_str_radix(10));
        out.push('\n');
    }
    out
}

/// One nondecreasing tuple of set elements and its sum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Representation {
    #[serde(with = "nat::decimal_vec")]
    pub terms: Vec<Nat>,
    #[serde(with = "nat::decimal")]
    pub target: Nat,
}

impl Representation {
    pub fn to_json(&self) -> serde_json::Value {
        nat::list_to_json(&self.terms)
    }
}

/// Visits every nondecreasing `k`-tuple of positions in `0..elems.len()`
/// together with the sum of the selected elements, in lexicographic order.
pub(crate) fn for_each_tuple<F>(elems: &[Nat], k: usize, mut visit: F)
where
    F: FnMut(&[usize], &Nat),
{
    fn rec<F: FnMut(&[usize], &Nat)>(
        elems: &[Nat],
        k: usize,
        start: usize,
        idx: &mut Vec<usize>,
        sums: &mut Vec<Nat>,
        visit: &mut F,
    ) {
        if idx.len() == k {
            visit(idx, sums.last().expect("sum stack is never empty"));
            return;
        }
        for i in start..elems.len() {
            let next = sums.last().expect("sum stack is never empty") + &elems[i];
            idx.push(i);
            sums.push(next);
            rec(elems, k, i, idx, sums, visit);
            sums.pop();
            idx.pop();
        }
    }
    let mut idx = Vec::with_capacity(k);
    let mut sums = vec![Nat::zero()];
    rec(elems, k, 0, &mut idx, &mut sums, &mut visit);
}

/// Maps every target with a positive count to `rho(X, k, n)`.
pub fn sum_counts(x: &FiniteSet, k: usize) -> BTreeMap<Nat, u64> {
    let mut counts = BTreeMap::new();
    if k == 0 {
        return counts;
    }
    for_each_tuple(x.elements(), k, |_, sum| {
        *counts.entry(sum.clone()).or_insert(0) += 1;
    });
    counts
}

/// Result of [`rho_count`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoCount {
    pub count: u64,
    /// The first `min(count, cap)` representations in lexicographic order.
    pub representations: Vec<Representation>,
    pub truncated: bool,
}

/// `rho(X, k, n)` with its representations, materialising at most
/// [`DEFAULT_REP_CAP`] of them.
pub fn rho_count(x: &FiniteSet, k: usize, n: &Nat) -> Result<RhoCount> {
    rho_count_capped(x, k, n, DEFAULT_REP_CAP)
}

pub fn rho_count_capped(x: &FiniteSet, k: usize, n: &Nat, cap: usize) -> Result<RhoCount> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    struct Search<'a> {
        elems: &'a [Nat],
        target: &'a Nat,
        cap: usize,
        count: u64,
        reps: Vec<Representation>,
        cur: Vec<usize>,
    }
    impl Search<'_> {
        fn record(&mut self, last: usize) {
            self.count += 1;
            if self.reps.len() < self.cap {
                let mut terms: Vec<Nat> = self.cur.iter().map(|&i| self.elems[i].clone()).collect();
                terms.push(self.elems[last].clone());
                self.reps.push(Representation {
                    terms,
                    target: self.target.clone(),
                });
            }
        }

        fn run(&mut self, start: usize, terms_left: usize, rest: &Nat) {
            let tail = &self.elems[start..];
            if terms_left == 1 {
                if let Ok(pos) = tail.binary_search(rest) {
                    self.record(start + pos);
                }
                return;
            }
            for i in start..self.elems.len() {
                let x = &self.elems[i];
                // Remaining terms are all >= x.
                if x * Nat::from(terms_left) > *rest {
                    break;
                }
                self.cur.push(i);
                let next = rest - x;
                self.run(i, terms_left - 1, &next);
                self.cur.pop();
            }
        }
    }
    let mut search = Search {
        elems: x.elements(),
        target: n,
        cap,
        count: 0,
        reps: Vec::new(),
        cur: Vec::with_capacity(k),
    };
    search.run(0, k, n);
    Ok(RhoCount {
        truncated: search.count > search.reps.len() as u64,
        count: search.count,
        representations: search.reps,
    })
}

/// A sample target achieving a given count, with its representations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileWitness {
    #[serde(with = "nat::decimal")]
    pub target: Nat,
    pub representations: Vec<Representation>,
}

/// Distribution of `rho(X, k, .)` over all targets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoProfile {
    pub k: usize,
    /// `rho_k(X)`; zero for the empty set.
    pub max_value: u64,
    /// count -> number of targets achieving exactly that count.
    pub histogram: BTreeMap<u64, u64>,
    /// count -> the smallest target achieving it.
    pub witnesses: BTreeMap<u64, ProfileWitness>,
}

pub fn rho_profile(x: &FiniteSet, k: usize) -> Result<RhoProfile> {
    rho_profile_capped(x, k, DEFAULT_REP_CAP)
}

pub fn rho_profile_capped(x: &FiniteSet, k: usize, cap: usize) -> Result<RhoProfile> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let counts = sum_counts(x, k);
    let mut histogram = BTreeMap::new();
    let mut first_target: BTreeMap<u64, &Nat> = BTreeMap::new();
    for (n, &c) in &counts {
        *histogram.entry(c).or_insert(0) += 1;
        first_target.entry(c).or_insert(n);
    }
    let mut witnesses = BTreeMap::new();
    for (c, n) in first_target {
        let rc = rho_count_capped(x, k, n, cap)?;
        if rc.count != c {
            return Err(Error::Tripwire(format!(
                "profile count {c} for target {n} disagrees with direct count {}",
                rc.count
            )));
        }
        witnesses.insert(
            c,
            ProfileWitness {
                target: n.clone(),
                representations: rc.representations,
            },
        );
    }
    Ok(RhoProfile {
        k,
        max_value: histogram.keys().next_back().copied().unwrap_or(0),
        histogram,
        witnesses,
    })
}

/// Outcome of [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub k: usize,
    /// `rho_k(X)`; the set is a `B_{k,ell}`-set exactly for this `ell`.
    pub ell: u64,
    pub is_bkl: bool,
}

impl Classification {
    pub fn is_bk(&self) -> bool {
        self.ell == 1
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bkl {
            write!(f, "B_{{{},{}}}", self.k, self.ell)
        } else {
            write!(f, "not a B_{{{},l}}-set for any l >= 1", self.k)
        }
    }
}

pub fn classify(x: &FiniteSet, k: usize) -> Result<Classification> {
    if k < 2 {
        return Err(invalid("classify needs k >= 2"));
    }
    let ell = sum_counts(x, k).values().copied().max().unwrap_or(0);
    Ok(Classification {
        k,
        ell,
        is_bkl: ell >= 1,
    })
}

/// The checkable clauses of the main structural statement about encoded sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Clause {
    /// `rho_h(X) = 1` for every `2 <= h <= k - 1`.
    Iii,
    /// No target is reachable with both `i` and `j` terms, `1 <= i < j`, `i + j < 2k`.
    Iv,
    /// Every target has 0, 1 or exactly `ell` representations with `k` terms.
    V,
    /// Two distinct `k`-representations of one target use `2k` distinct terms.
    Vi,
}

impl Clause {
    pub const ALL: [Clause; 4] = [Clause::Iii, Clause::Iv, Clause::V, Clause::Vi];

    pub fn name(self) -> &'static str {
        match self {
            Clause::Iii => "iii",
            Clause::Iv => "iv",
            Clause::V => "v",
            Clause::Vi => "vi",
        }
    }
}

impl FromStr for Clause {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "iii" | "3" => Ok(Clause::Iii),
            "iv" | "4" => Ok(Clause::Iv),
            "v" | "5" => Ok(Clause::V),
            "vi" | "6" => Ok(Clause::Vi),
            other => Err(invalid(format!("unknown clause {other:?}"))),
        }
    }
}

// Witness lists are truncated to keep certificates small.
const MAX_LISTED: usize = 16;
const SAMPLE_REPS: usize = 8;

fn reps_json(x: &FiniteSet, h: usize, n: &Nat) -> Result<serde_json::Value> {
    let rc = rho_count_capped(x, h, n, SAMPLE_REPS)?;
    Ok(serde_json::Value::Array(
        rc.representations.iter().map(Representation::to_json).collect(),
    ))
}

fn all_distinct(terms: &[&Nat]) -> bool {
    let mut sorted = terms.to_vec();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Checks the requested clauses exhaustively on a finite set.
pub fn verify_theorem_properties(
    x: &FiniteSet,
    k: usize,
    ell: u64,
    which: &[Clause],
) -> Result<Certificate> {
    verify_theorem_properties_capped(x, k, ell, which, DEFAULT_REP_CAP)
}

pub fn verify_theorem_properties_capped(
    x: &FiniteSet,
    k: usize,
    ell: u64,
    which: &[Clause],
    cap: usize,
) -> Result<Certificate> {
    if k < 2 {
        return Err(invalid("verify needs k >= 2"));
    }
    if ell < 2 {
        return Err(invalid("verify needs ell >= 2"));
    }
    let mut clauses = which.to_vec();
    clauses.sort();
    clauses.dedup();

    let mut cert = Certificate::new("representation-clauses")
        .param("k", k)
        .param("ell", ell)
        .param("set_size", x.len())
        .param(
            "clauses",
            clauses.iter().map(|c| c.name()).collect::<Vec<_>>(),
        );

    // Sum tables for every term count any requested clause needs.
    let mut max_h = 0;
    for c in &clauses {
        max_h = max_h.max(match c {
            Clause::Iii => k - 1,
            Clause::Iv => 2 * k - 2,
            Clause::V | Clause::Vi => k,
        });
    }
    let mut tables: Vec<BTreeMap<Nat, u64>> = vec![BTreeMap::new()];
    let mut tuples = 0u64;
    for h in 1..=max_h {
        let t = sum_counts(x, h);
        tuples += t.values().sum::<u64>();
        tables.push(t);
    }
    cert.stat("tuples_enumerated", tuples);

    for clause in clauses {
        let check = match clause {
            Clause::Iii => check_iii(x, k, &tables)?,
            Clause::Iv => check_iv(x, k, &tables)?,
            Clause::V => check_v(x, k, ell, &tables[k])?,
            Clause::Vi => check_vi(x, k, &tables[k], cap)?,
        };
        cert.push(check);
    }
    Ok(cert)
}

fn check_iii(x: &FiniteSet, k: usize, tables: &[BTreeMap<Nat, u64>]) -> Result<Check> {
    let name = "iii";
    for (h, table) in tables.iter().enumerate().take(k).skip(2) {
        let rho_h = table.values().copied().max().unwrap_or(0);
        if rho_h != 1 {
            let witness = match table.iter().find(|(_, &c)| c >= 2) {
                Some((n, &c)) => json!({
                    "h": h, "rho_h": rho_h, "target": nat::to_json(n), "count": c,
                    "representations": reps_json(x, h, n)?,
                }),
                None => json!({ "h": h, "rho_h": rho_h }),
            };
            return Ok(Check::fail(name, witness));
        }
    }
    Ok(Check::pass(name))
}

fn check_iv(x: &FiniteSet, k: usize, tables: &[BTreeMap<Nat, u64>]) -> Result<Check> {
    let name = "iv";
    let mut pairs = 0u64;
    for i in 1..2 * k {
        for j in (i + 1)..(2 * k - i) {
            pairs += 1;
            let (small, large) = if tables[i].len() <= tables[j].len() {
                (&tables[i], &tables[j])
            } else {
                (&tables[j], &tables[i])
            };
            if let Some(n) = small.keys().find(|n| large.contains_key(*n)) {
                return Ok(Check::fail(
                    name,
                    json!({
                        "i": i, "j": j, "target": nat::to_json(n),
                        "rho_i": tables[i][n], "rho_j": tables[j][n],
                        "i_representations": reps_json(x, i, n)?,
                        "j_representations": reps_json(x, j, n)?,
                    }),
                ));
            }
        }
    }
    Ok(Check::pass(name).with_note(format!("{pairs} term-count pairs (i, j) checked")))
}

fn check_v(x: &FiniteSet, k: usize, ell: u64, table: &BTreeMap<Nat, u64>) -> Result<Check> {
    let name = "v";
    let bad: Vec<(&Nat, u64)> = table
        .iter()
        .filter(|(_, &c)| c != 1 && c != ell)
        .map(|(n, &c)| (n, c))
        .collect();
    if bad.is_empty() {
        let full = table.iter().find(|(_, &c)| c == ell);
        let check = Check::pass(name);
        return Ok(match full {
            Some((n, _)) => check.with_witness(json!({
                "target": nat::to_json(n), "count": ell,
                "representations": reps_json(x, k, n)?,
            })),
            None => check.with_note("no target reaches ell"),
        });
    }
    let mut listed = Vec::new();
    for (n, c) in bad.iter().take(MAX_LISTED) {
        listed.push(json!({
            "target": nat::to_json(n), "count": c,
            "representations": reps_json(x, k, n)?,
        }));
    }
    Ok(Check::fail(
        name,
        json!({ "violations": bad.len(), "targets": listed }),
    ))
}

fn check_vi(x: &FiniteSet, k: usize, table: &BTreeMap<Nat, u64>, cap: usize) -> Result<Check> {
    let name = "vi";
    let mut truncated = false;
    let mut sample = None;
    for (n, &c) in table {
        if c < 2 {
            continue;
        }
        let rc = rho_count_capped(x, k, n, cap)?;
        truncated |= rc.truncated;
        let reps = &rc.representations;
        for a in 0..reps.len() {
            for b in (a + 1)..reps.len() {
                let terms: Vec<&Nat> = reps[a].terms.iter().chain(&reps[b].terms).collect();
                if !all_distinct(&terms) {
                    return Ok(Check::fail(
                        name,
                        json!({
                            "target": nat::to_json(n),
                            "first": reps[a].to_json(),
                            "second": reps[b].to_json(),
                        }),
                    ));
                }
            }
        }
        if sample.is_none() {
            sample = Some(json!({
                "target": nat::to_json(n),
                "representations": reps.iter().map(Representation::to_json).collect::<Vec<_>>(),
            }));
        }
    }
    let mut check = Check::pass(name);
    if let Some(s) = sample {
        check = check.with_witness(s);
    }
    if truncated {
        check = check.with_note(format!("representation lists truncated at {cap}"));
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> FiniteSet {
        FiniteSet::from_u64s(v).unwrap()
    }

    fn terms(rep: &Representation) -> Vec<u64> {
        rep.terms.iter().map(|t| t.to_u64_digits().first().copied().unwrap_or(0)).collect()
    }

    #[test]
    fn rho_count_examples() {
        let x = set(&[20, 120, 500, 600]);
        assert_eq!(rho_count(&FiniteSet::empty(), 2, &Nat::from(10u32)).unwrap().count, 0);

        let rc = rho_count(&x, 2, &Nat::from(620u32)).unwrap();
        assert_eq!(rc.count, 2);
        assert_eq!(terms(&rc.representations[0]), vec![20, 600]);
        assert_eq!(terms(&rc.representations[1]), vec![120, 500]);

        let rc = rho_count(&x, 2, &Nat::from(40u32)).unwrap();
        assert_eq!(rc.count, 1);
        assert_eq!(terms(&rc.representations[0]), vec![20, 20]);
        assert!(rho_count(&x, 0, &Nat::from(1u32)).is_err());
    }

    #[test]
    fn rho_count_respects_cap() {
        let x = set(&[1, 2, 3, 4, 5, 6]);
        let rc = rho_count_capped(&x, 3, &Nat::from(9u32), 2).unwrap();
        assert_eq!(rc.representations.len(), 2);
        assert!(rc.truncated);
        let full = rho_count(&x, 3, &Nat::from(9u32)).unwrap();
        assert_eq!(full.count, rc.count);
        assert_eq!(&full.representations[..2], &rc.representations[..]);
    }

    #[test]
    fn profile_examples() {
        let p = rho_profile(&set(&[20, 120, 500, 600]), 2).unwrap();
        assert_eq!(p.max_value, 2);
        assert_eq!(p.histogram[&2], 1);
        assert_eq!(p.histogram[&1], 8);
        assert_eq!(p.witnesses[&2].target, Nat::from(620u32));

        let p = rho_profile(&set(&[1, 2, 4]), 2).unwrap();
        assert_eq!(p.max_value, 1);
        assert_eq!(p.histogram[&1], 6);

        let p = rho_profile(&set(&[1]), 3).unwrap();
        assert_eq!(p.max_value, 1);
        assert_eq!(p.witnesses[&1].target, Nat::from(3u32));

        let p = rho_profile(&FiniteSet::empty(), 2).unwrap();
        assert_eq!(p.max_value, 0);
        assert!(p.histogram.is_empty());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&set(&[20, 120, 500, 600]), 2).unwrap();
        assert_eq!((c.ell, c.is_bkl), (2, true));
        let c = classify(&set(&[1, 2, 4]), 2).unwrap();
        assert!(c.is_bk());
        let c = classify(&FiniteSet::empty(), 2).unwrap();
        assert_eq!((c.ell, c.is_bkl), (0, false));
        assert!(classify(&set(&[1]), 1).is_err());
    }

    #[test]
    fn verify_encoded_c4() {
        let x = set(&[20, 120, 500, 600]);
        let cert = verify_theorem_properties(&x, 2, 2, &[Clause::V, Clause::Vi]).unwrap();
        assert!(cert.passed, "{}", cert.to_json_pretty());
        assert_eq!(cert.checks.len(), 2);
        let cert = verify_theorem_properties(&x, 2, 2, &Clause::ALL).unwrap();
        assert!(cert.passed, "{}", cert.to_json_pretty());
    }

    #[test]
    fn clause_vi_needs_all_terms_distinct() {
        // 4 = 1 + 3 = 2 + 2: disjoint representations, but 2 repeats.
        let cert = verify_theorem_properties(&set(&[1, 2, 3]), 2, 2, &[Clause::Vi]).unwrap();
        assert!(!cert.passed);
        let w = cert.check("vi").unwrap().witness.as_ref().unwrap();
        assert_eq!(w["target"], "4");
    }

    #[test]
    fn clause_v_examples() {
        let cert = verify_theorem_properties(&set(&[1, 2, 3, 4]), 2, 2, &[Clause::V]).unwrap();
        assert!(cert.passed);

        let cert = verify_theorem_properties(&set(&[1, 2, 3, 4, 5]), 2, 3, &[Clause::V]).unwrap();
        assert!(!cert.passed);
        let w = cert.check("v").unwrap().witness.as_ref().unwrap();
        let targets = w["targets"].as_array().unwrap();
        assert!(targets.iter().any(|t| t["target"] == "5" && t["count"] == 2));
    }

    #[test]
    fn clause_iii_and_iv_failures() {
        // 1 + 4 = 2 + 3 with three terms allowed at k = 4.
        let x = set(&[1, 2, 3, 4]);
        let cert = verify_theorem_properties(&x, 4, 2, &[Clause::Iii]).unwrap();
        assert!(!cert.passed);
        assert_eq!(cert.check("iii").unwrap().witness.as_ref().unwrap()["h"], 2);

        // 3 is an element and also 1 + 2.
        let cert = verify_theorem_properties(&x, 2, 2, &[Clause::Iv]).unwrap();
        assert!(!cert.passed);
        let w = cert.check("iv").unwrap().witness.as_ref().unwrap();
        assert_eq!((w["i"].as_u64(), w["j"].as_u64()), (Some(1), Some(2)));
    }

    #[test]
    fn verify_rejects_bad_parameters() {
        let x = set(&[1, 2]);
        assert!(verify_theorem_properties(&x, 1, 2, &Clause::ALL).is_err());
        assert!(verify_theorem_properties(&x, 2, 1, &Clause::ALL).is_err());
    }

    #[test]
    fn set_file_parsing() {
        let (s, dups) = parse_set_file("# header\n600\n20\n\n120 # note\n500\n20\n").unwrap();
        assert_eq!(dups, 1);
        assert_eq!(s, set(&[20, 120, 500, 600]));
        assert_eq!(write_set_file(&s), "20\n120\n500\n600\n");
        assert!(matches!(parse_set_file("1\nx\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_set_file("0\n").is_err());
    }

    #[test]
    fn finite_set_validation() {
        assert!(FiniteSet::new(vec![Nat::from(2u32), Nat::from(1u32)]).is_err());
        assert!(FiniteSet::new(vec![Nat::from(0u32)]).is_err());
        assert!(FiniteSet::new(vec![Nat::from(1u32), Nat::from(1u32)]).is_err());
        assert_eq!(set(&[3, 1, 2]).to_string(), "{1, 2, 3}");
    }
}
