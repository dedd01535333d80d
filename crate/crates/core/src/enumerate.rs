//! Exhaustive enumeration of non-isomorphic trees.
//!
//! Two independent generation routes back every count:
//!
//! * [`free_trees`] walks canonical parent arrays (the classic level-sequence
//!   successor over rooted trees) and dedups underlying free trees by
//!   canonical code;
//! * [`free_trees_by_pruefer`] unions, over every tree degree sequence of the
//!   order, the labeled trees decoded from all distinct Prüfer multiset
//!   permutations.
//!
//! [`realizations`] enumerates the non-isomorphic trees of one degree
//! sequence. It first suppresses degree-2 vertices (they sit on paths), walks
//! the far smaller reduced multiset by Prüfer permutations, then re-expands
//! by distributing the suppressed vertices over reduced edges. That keeps
//! path-heavy sequences — where raw Prüfer enumeration is hopeless — cheap,
//! and agrees with the raw route wherever both run.
//!
//! All streams are sorted by canonical code and yield the canonical
//! (code-decoded) representative of each class.

use std::collections::BTreeSet;

use crate::canon::CanonicalCode;
use crate::degrees::DegreeSequence;
use crate::error::{Error, Result};
use crate::pruefer::{from_pruefer, PrueferSeq};
use crate::tree::Tree;

/// Enumeration bounds.
#[derive(Debug, Clone)]
pub struct EnumLimits {
    /// Largest order [`free_trees`] will enumerate (default 16).
    pub max_order: usize,
    /// Budget on raw permutation / composition walks inside
    /// [`realizations`]; exceeding it errors `CapExceeded` before any work.
    pub work_budget: u64,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            max_order: 16,
            work_budget: 20_000_000,
        }
    }
}

impl EnumLimits {
    /// Default limits with the order cap overridden by `TREEDEX_CAP` when the
    /// variable is set to a positive integer.
    pub fn from_env() -> EnumLimits {
        let mut limits = EnumLimits::default();
        if let Ok(v) = std::env::var("TREEDEX_CAP") {
            if let Ok(cap) = v.trim().parse::<usize>() {
                if cap >= 1 {
                    limits.max_order = cap;
                }
            }
        }
        limits
    }
}

// ---- rooted generation (canonical parent arrays) --------------------------

/// Streams the canonical level sequence of every rooted tree on `n` vertices
/// in reverse lexicographic order (path first, star last).
struct RootedLevels {
    levels: Vec<u32>,
    fresh: bool,
    done: bool,
}

impl RootedLevels {
    fn new(n: usize) -> RootedLevels {
        RootedLevels {
            levels: (1..=n as u32).collect(),
            fresh: true,
            done: n == 0,
        }
    }
}

impl Iterator for RootedLevels {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.levels.clone());
        }
        // Successor: find the last vertex deeper than a root child, lift it,
        // and tile the tail with the block starting at its parent.
        let n = self.levels.len();
        let p = match (0..n).rev().find(|&i| self.levels[i] > 2) {
            Some(p) => p,
            None => {
                self.done = true;
                return None;
            }
        };
        let q = (0..p)
            .rev()
            .find(|&i| self.levels[i] == self.levels[p] - 1)
            .expect("a parent level exists above");
        let width = p - q;
        for i in p..n {
            self.levels[i] = self.levels[i - width];
        }
        Some(self.levels.clone())
    }
}

/// Parent array from a canonical level sequence: each vertex's parent is the
/// nearest earlier vertex one level up.
fn levels_to_tree(levels: &[u32]) -> Tree {
    let n = levels.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] == levels[i] - 1)
            .expect("canonical level sequences have parents");
        edges.push((parent as u32, i as u32));
    }
    Tree::new(n, &edges).expect("level sequence describes a tree")
}

/// All non-isomorphic trees of order `n`, sorted by canonical code.
///
/// Errors `CapExceeded` when `n` exceeds `limits.max_order`.
pub fn free_trees(n: usize, limits: &EnumLimits) -> Result<Vec<Tree>> {
    if n > limits.max_order {
        return Err(Error::CapExceeded(format!(
            "order {n} exceeds the enumeration cap {}",
            limits.max_order
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut codes = BTreeSet::new();
    for levels in RootedLevels::new(n) {
        codes.insert(levels_to_tree(&levels).canonical_code());
    }
    Ok(decode_all(codes))
}

fn decode_all(codes: BTreeSet<CanonicalCode>) -> Vec<Tree> {
    codes
        .into_iter()
        .map(|c| c.decode().expect("canonical codes decode"))
        .collect()
}

// ---- Prüfer-route generation (independent cross-check) --------------------

/// All non-isomorphic trees of order `n` via exhaustive Prüfer multiset
/// permutations per degree sequence. Independent of [`free_trees`]; intended
/// for cross-checks at small orders (the walk is factorial in `n`).
pub fn free_trees_by_pruefer(n: usize, limits: &EnumLimits) -> Result<Vec<Tree>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![Tree::new(1, &[]).unwrap()]);
    }
    let mut codes = BTreeSet::new();
    for d in tree_degree_sequences(n) {
        collect_pruefer_realizations(&d, limits, &mut codes)?;
    }
    Ok(decode_all(codes))
}

/// Distinct multiset permutations walked straight from the full degree
/// multiset, deduped by canonical code.
fn collect_pruefer_realizations(
    d: &DegreeSequence,
    limits: &EnumLimits,
    codes: &mut BTreeSet<CanonicalCode>,
) -> Result<()> {
    let n = d.len();
    if n == 2 {
        codes.insert(Tree::path(2).canonical_code());
        return Ok(());
    }
    let mut multiset: Vec<u32> = Vec::with_capacity(n - 2);
    for (v, &deg) in d.degrees().iter().enumerate() {
        multiset.extend(std::iter::repeat(v as u32).take(deg as usize - 1));
    }
    guard_budget(multiset_permutation_count(&multiset), limits)?;
    multiset.sort_unstable();
    loop {
        let seq = PrueferSeq::new(multiset.clone(), n)?;
        codes.insert(from_pruefer(&seq)?.canonical_code());
        if !next_permutation(&mut multiset) {
            return Ok(());
        }
    }
}

fn guard_budget(count: Option<u64>, limits: &EnumLimits) -> Result<()> {
    match count {
        Some(c) if c <= limits.work_budget => Ok(()),
        _ => Err(Error::CapExceeded(format!(
            "enumeration walk of {} items exceeds the work budget {}",
            count.map_or("overflowing many".to_string(), |c| c.to_string()),
            limits.work_budget
        ))),
    }
}

/// Number of distinct permutations of the multiset, `None` on overflow.
fn multiset_permutation_count(multiset: &[u32]) -> Option<u64> {
    let mut counts = std::collections::HashMap::new();
    for &v in multiset {
        *counts.entry(v).or_insert(0u64) += 1;
    }
    // total! / prod(count_v!) computed incrementally to dodge overflow:
    // multinomial = prod over elements of C(running_total, count_v).
    let mut total = 0u64;
    let mut result = 1u64;
    for &c in counts.values() {
        for i in 1..=c {
            total += 1;
            result = result.checked_mul(total)?.checked_div(i)?;
            // binomial prefix products are exact at each step of this order
        }
    }
    Some(result)
}

/// Lexicographic next permutation; `false` once the multiset is exhausted.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

// ---- degree sequences of an order -----------------------------------------

/// Every tree degree sequence of order `n`, i.e. partitions of `2(n-1)` into
/// `n` positive parts, in descending lexicographic order.
pub fn tree_degree_sequences(n: usize) -> Vec<DegreeSequence> {
    if n < 2 {
        return Vec::new();
    }
    // Subtract 1 from every vertex: partitions of n - 2 with at most n parts
    // (a partition of n - 2 never has more than n - 2 parts, so all qualify).
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    partitions_desc((n - 2) as u32, u32::MAX, &mut parts, &mut |parts| {
        let mut degrees = vec![1u32; n];
        for (i, &p) in parts.iter().enumerate() {
            degrees[i] += p;
        }
        out.push(DegreeSequence::from_degrees(degrees));
    });
    out
}

fn partitions_desc(rest: u32, max: u32, parts: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if rest == 0 {
        emit(parts);
        return;
    }
    let hi = rest.min(max);
    for next in (1..=hi).rev() {
        parts.push(next);
        partitions_desc(rest - next, next, parts, emit);
        parts.pop();
    }
}

// ---- realizations of a degree sequence -------------------------------------

/// Result of [`realizations`]: canonical representatives sorted by code, and
/// whether the list was cut off at the requested cap.
#[derive(Debug, Clone)]
pub struct Realizations {
    pub trees: Vec<Tree>,
    pub truncated: bool,
}

/// All non-isomorphic trees with degree sequence `d`, up to `cap` of them.
///
/// Degree-2 vertices are suppressed first: the reduced multiset (degrees
/// other than 2) is enumerated by Prüfer permutations, then the suppressed
/// vertices are distributed over the reduced tree's edges in every way.
/// Results are deduped by canonical code, so overlapping distributions
/// collapse; when the reduced tree is a star its edges are interchangeable
/// and only sorted distributions are walked.
pub fn realizations(d: &DegreeSequence, cap: usize, limits: &EnumLimits) -> Result<Realizations> {
    d.require_tree_realizable()?;
    if cap < 1 {
        return Err(Error::DomainError("cap must be at least 1".into()));
    }
    let n = d.len();
    if n == 2 {
        return Ok(Realizations {
            trees: vec![Tree::path(2)],
            truncated: false,
        });
    }
    let reduced: Vec<u32> = d.degrees().iter().copied().filter(|&x| x != 2).collect();
    let two_count = n - reduced.len();
    let reduced = DegreeSequence::from_degrees(reduced);
    let n_red = reduced.len();
    debug_assert!(n_red >= 2, "a tree sequence keeps its leaves after reduction");
    debug_assert_eq!(reduced.degree_sum(), 2 * (n_red as u64 - 1));

    let mut codes: BTreeSet<CanonicalCode> = BTreeSet::new();
    let edge_count = n_red - 1;
    if reduced.max_degree() as usize == n_red - 1 {
        // The reduced tree is the unique star; its edges are equivalent, so
        // distributions are partitions of two_count into at most e parts.
        let star = star_with_degrees(&reduced);
        let mut parts = Vec::new();
        partitions_into_at_most(two_count as u32, edge_count, &mut parts, &mut |p| {
            let mut dist = vec![0u32; edge_count];
            dist[..p.len()].copy_from_slice(p);
            codes.insert(subdivide(&star, &dist).canonical_code());
        });
    } else {
        let mut reduced_codes = BTreeSet::new();
        collect_pruefer_realizations(&reduced, limits, &mut reduced_codes)?;
        let compositions = compositions_count(two_count as u64, edge_count as u64);
        let total = compositions.and_then(|c| c.checked_mul(reduced_codes.len() as u64));
        guard_budget(total, limits)?;
        for code in reduced_codes {
            let base = code.decode().expect("canonical codes decode");
            let mut dist = vec![0u32; edge_count];
            dist[0] = two_count as u32;
            loop {
                codes.insert(subdivide(&base, &dist).canonical_code());
                if !next_composition(&mut dist) {
                    break;
                }
            }
        }
    }

    let truncated = codes.len() > cap;
    let trees = codes.into_iter().take(cap).map(|c| c.decode().unwrap()).collect();
    Ok(Realizations { trees, truncated })
}

/// The star realizing a star degree sequence (center first).
fn star_with_degrees(d: &DegreeSequence) -> Tree {
    let n = d.len();
    debug_assert_eq!(d.max_degree() as usize, n - 1);
    Tree::star(n)
}

/// Inserts `dist[i]` degree-2 vertices into the `i`-th edge of `base`.
fn subdivide(base: &Tree, dist: &[u32]) -> Tree {
    let extra: u32 = dist.iter().sum();
    let n = base.order() as u32 + extra;
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(n as usize - 1);
    let mut next = base.order() as u32;
    for (e, &count) in base.edges().iter().zip(dist) {
        let mut prev = e.0;
        for _ in 0..count {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, e.1));
    }
    Tree::new(n as usize, &edges).expect("subdivision preserves treeness")
}

/// Partitions of `total` into at most `slots` parts, descending.
fn partitions_into_at_most(
    total: u32,
    slots: usize,
    parts: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    fn rec(rest: u32, max: u32, slots_left: usize, parts: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
        if rest == 0 {
            emit(parts);
            return;
        }
        if slots_left == 0 {
            return;
        }
        let hi = rest.min(max);
        for next in (1..=hi).rev() {
            parts.push(next);
            rec(rest - next, next, slots_left - 1, parts, emit);
            parts.pop();
        }
    }
    rec(total, total.max(1), slots, parts, emit);
}

/// Number of weak compositions of `total` into `slots` parts:
/// `C(total + slots - 1, slots - 1)`. `None` on overflow or zero slots.
fn compositions_count(total: u64, slots: u64) -> Option<u64> {
    if slots == 0 {
        return if total == 0 { Some(1) } else { None };
    }
    let n = total + slots - 1;
    let k = (slots - 1).min(total);
    let mut result = 1u64;
    for i in 1..=k {
        result = result.checked_mul(n - k + i)?.checked_div(i)?;
    }
    Some(result)
}

/// Steps `dist` to the next weak composition of its current sum, starting
/// from `[total, 0, ..]` and ending at `[0, .., total]`. Returns `false`
/// once exhausted. Each step moves one unit right from the leftmost nonzero
/// slot and pulls the slots before it back to the front.
fn next_composition(dist: &mut [u32]) -> bool {
    let len = dist.len();
    if len == 0 {
        return false;
    }
    let mut i = 0;
    while i < len - 1 && dist[i] == 0 {
        i += 1;
    }
    if i == len - 1 {
        return false;
    }
    let head = dist[i];
    dist[i] = 0;
    dist[0] = head - 1;
    dist[i + 1] += 1;
    true
}

// ---- corpora ---------------------------------------------------------------

/// Tree families selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Star,
    Spider,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::Spider => "spider",
        }
    }

    /// Membership predicate.
    pub fn contains(self, t: &Tree) -> bool {
        match self {
            Family::Path => t.max_degree() <= 2,
            Family::Star => t.order() >= 2 && t.max_degree() as usize == t.order() - 1,
            Family::Spider => t.degrees().iter().filter(|&&d| d >= 3).count() == 1,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "path" => Ok(Family::Path),
            "star" => Ok(Family::Star),
            "spider" => Ok(Family::Spider),
            _ => Err(Error::ParseError(format!("unknown family {s:?}"))),
        }
    }
}

/// A corpus description: which trees an audit or enumeration ranges over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSpec {
    /// Every tree with `n_min <= n <= n_max`.
    AllTrees { n_min: usize, n_max: usize },
    /// Every realization of one degree sequence.
    FixedSequence { sequence: DegreeSequence },
    /// Trees in the order range whose maximum degree is exactly `delta`.
    MaxDegreeFamily { n_min: usize, n_max: usize, delta: u32 },
    /// Named family members in the order range.
    NamedFamily { family: Family, n_min: usize, n_max: usize },
}

impl CorpusSpec {
    fn validate(&self) -> Result<()> {
        let range = match self {
            CorpusSpec::AllTrees { n_min, n_max } => Some((n_min, n_max)),
            CorpusSpec::MaxDegreeFamily { n_min, n_max, .. } => Some((n_min, n_max)),
            CorpusSpec::NamedFamily { n_min, n_max, .. } => Some((n_min, n_max)),
            CorpusSpec::FixedSequence { sequence } => {
                sequence.require_tree_realizable()?;
                None
            }
        };
        if let Some((&lo, &hi)) = range {
            if lo < 2 || lo > hi {
                return Err(Error::DomainError(format!(
                    "order range {lo}..{hi} must satisfy 2 <= lo <= hi"
                )));
            }
        }
        Ok(())
    }

    /// Stable descriptor used in report headers.
    pub fn describe(&self) -> String {
        match self {
            CorpusSpec::AllTrees { n_min, n_max } => format!("all_trees({n_min}..{n_max})"),
            CorpusSpec::FixedSequence { sequence } => format!("fixed_sequence({sequence})"),
            CorpusSpec::MaxDegreeFamily { n_min, n_max, delta } => {
                format!("max_degree_family({n_min}..{n_max}, delta={delta})")
            }
            CorpusSpec::NamedFamily { family, n_min, n_max } => {
                format!("named_family({}, {n_min}..{n_max})", family.name())
            }
        }
    }
}

/// A materialized corpus, ordered by (order, canonical code).
#[derive(Debug, Clone)]
pub struct Corpus {
    pub trees: Vec<Tree>,
    pub truncated: bool,
}

/// Materializes a corpus. Orders beyond `limits.max_order` are dropped with
/// the truncation flag set rather than failing the whole run; a fixed
/// sequence that cannot be walked within budget still errors.
pub fn corpus(spec: &CorpusSpec, limits: &EnumLimits) -> Result<Corpus> {
    spec.validate()?;
    let mut trees = Vec::new();
    let mut truncated = false;
    match spec {
        CorpusSpec::AllTrees { n_min, n_max } => {
            for n in *n_min..=*n_max {
                if n > limits.max_order {
                    truncated = true;
                    break;
                }
                trees.extend(free_trees(n, limits)?);
            }
        }
        CorpusSpec::FixedSequence { sequence } => {
            let r = realizations(sequence, usize::MAX, limits)?;
            trees = r.trees;
            truncated = r.truncated;
        }
        CorpusSpec::MaxDegreeFamily { n_min, n_max, delta } => {
            for n in *n_min..=*n_max {
                if n > limits.max_order {
                    truncated = true;
                    break;
                }
                trees.extend(
                    free_trees(n, limits)?
                        .into_iter()
                        .filter(|t| t.max_degree() == *delta),
                );
            }
        }
        CorpusSpec::NamedFamily { family, n_min, n_max } => {
            for n in *n_min..=*n_max {
                if n > limits.max_order {
                    truncated = true;
                    break;
                }
                trees.extend(free_trees(n, limits)?.into_iter().filter(|t| family.contains(t)));
            }
        }
    }
    Ok(Corpus { trees, truncated })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> DegreeSequence {
        DegreeSequence::from_degrees(v.to_vec())
    }

    #[test]
    fn free_tree_counts_small() {
        let limits = EnumLimits::default();
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(free_trees(n, &limits).unwrap().len(), want, "order {n}");
        }
    }

    #[test]
    fn both_methods_agree_to_order_nine() {
        let limits = EnumLimits::default();
        for n in 1..=9 {
            let a: Vec<_> = free_trees(n, &limits)
                .unwrap()
                .iter()
                .map(Tree::canonical_code)
                .collect();
            let b: Vec<_> = free_trees_by_pruefer(n, &limits)
                .unwrap()
                .iter()
                .map(Tree::canonical_code)
                .collect();
            assert_eq!(a, b, "order {n}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let limits = EnumLimits {
            max_order: 5,
            ..EnumLimits::default()
        };
        assert!(free_trees(5, &limits).is_ok());
        assert!(matches!(free_trees(6, &limits), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn stream_is_sorted_and_unique() {
        let limits = EnumLimits::default();
        let trees = free_trees(8, &limits).unwrap();
        let codes: Vec<_> = trees.iter().map(Tree::canonical_code).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(codes, sorted);
    }

    #[test]
    fn realization_counts() {
        let limits = EnumLimits::default();
        assert_eq!(
            realizations(&seq(&[3, 2, 2, 1, 1, 1]), usize::MAX, &limits)
                .unwrap()
                .trees
                .len(),
            2
        );
        assert_eq!(
            realizations(&seq(&[2, 2, 1, 1]), usize::MAX, &limits).unwrap().trees.len(),
            1
        );
        // Completed (2^11, 10): 55 spiders.
        let mut v = vec![10];
        v.extend(std::iter::repeat(2).take(11));
        v.extend(std::iter::repeat(1).take(10));
        let r = realizations(&seq(&v), usize::MAX, &limits).unwrap();
        assert_eq!(r.trees.len(), 55);
        assert!(!r.truncated);
    }

    #[test]
    fn realizations_match_raw_pruefer_route() {
        // The reduction-based engine agrees with the raw multiset walk.
        let limits = EnumLimits::default();
        for n in 2..=9 {
            for d in tree_degree_sequences(n) {
                let fast: Vec<_> = realizations(&d, usize::MAX, &limits)
                    .unwrap()
                    .trees
                    .iter()
                    .map(Tree::canonical_code)
                    .collect();
                let mut raw = BTreeSet::new();
                collect_pruefer_realizations(&d, &limits, &mut raw).unwrap();
                let raw: Vec<_> = raw.into_iter().collect();
                assert_eq!(fast, raw, "sequence {d}");
            }
        }
    }

    #[test]
    fn realization_classes_partition_free_trees() {
        let limits = EnumLimits::default();
        for n in 2..=9 {
            let total: usize = tree_degree_sequences(n)
                .iter()
                .map(|d| realizations(d, usize::MAX, &limits).unwrap().trees.len())
                .sum();
            assert_eq!(total, free_trees(n, &limits).unwrap().len(), "order {n}");
        }
    }

    #[test]
    fn realization_cap_truncates() {
        let limits = EnumLimits::default();
        let mut v = vec![10];
        v.extend(std::iter::repeat(2).take(11));
        v.extend(std::iter::repeat(1).take(10));
        let r = realizations(&seq(&v), 10, &limits).unwrap();
        assert_eq!(r.trees.len(), 10);
        assert!(r.truncated);
    }

    #[test]
    fn degree_sequence_partitions() {
        assert_eq!(tree_degree_sequences(2), vec![seq(&[1, 1])]);
        let got = tree_degree_sequences(5);
        assert_eq!(
            got,
            vec![seq(&[4, 1, 1, 1, 1]), seq(&[3, 2, 1, 1, 1]), seq(&[2, 2, 2, 1, 1])]
        );
        assert_eq!(tree_degree_sequences(8).len(), 11);
    }

    #[test]
    fn family_predicates() {
        assert!(Family::Path.contains(&Tree::path(5)));
        assert!(!Family::Path.contains(&Tree::star(5)));
        assert!(Family::Star.contains(&Tree::star(5)));
        assert!(Family::Star.contains(&Tree::path(3)));
        assert!(Family::Spider.contains(&Tree::star(5)));
        assert!(!Family::Spider.contains(&Tree::path(5)));
        // Double star has two branch vertices: not a spider.
        let ds = Tree::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert!(!Family::Spider.contains(&ds));
    }

    #[test]
    fn corpus_filters() {
        let limits = EnumLimits::default();
        let c = corpus(
            &CorpusSpec::MaxDegreeFamily { n_min: 5, n_max: 5, delta: 4 },
            &limits,
        )
        .unwrap();
        assert_eq!(c.trees.len(), 1);
        let c = corpus(
            &CorpusSpec::AllTrees { n_min: 2, n_max: 7 },
            &limits,
        )
        .unwrap();
        assert_eq!(c.trees.len(), 1 + 1 + 2 + 3 + 6 + 11);
        assert!(corpus(&CorpusSpec::AllTrees { n_min: 1, n_max: 3 }, &limits).is_err());
    }

    #[test]
    fn spider_corpus_counts() {
        // Spiders of order 6: degree-3 center (profiles {2,0,0}, {1,1,0},
        // {1,0,0} is order 5...), enumerate and cross-check by predicate.
        let limits = EnumLimits::default();
        let c = corpus(
            &CorpusSpec::NamedFamily { family: Family::Spider, n_min: 6, n_max: 6 },
            &limits,
        )
        .unwrap();
        let by_filter = free_trees(6, &limits)
            .unwrap()
            .into_iter()
            .filter(|t| Family::Spider.contains(t))
            .count();
        assert_eq!(c.trees.len(), by_filter);
    }
}
