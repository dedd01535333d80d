//! Building trees from degree data.
//!
//! Covers the `value^multiplicity` sequence grammar, leaf completion of
//! partial sequences, a deterministic greedy realization, the spine-plus-
//! leaves extremal construction, and the majorization partial order.

use std::fmt;

use crate::degrees::DegreeSequence;
use crate::error::{Error, Result};
use crate::tree::Tree;

/// A degree specification before leaves are filled in: distinct values with
/// positive multiplicities, in the order given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialDegreeSpec {
    entries: Vec<(u32, u32)>,
}

impl PartialDegreeSpec {
    pub fn new(entries: Vec<(u32, u32)>) -> Result<PartialDegreeSpec> {
        for &(v, m) in &entries {
            if v < 1 {
                return Err(Error::ParseError("degree values must be at least 1".into()));
            }
            if m < 1 {
                return Err(Error::ParseError("multiplicities must be at least 1".into()));
            }
        }
        for (i, &(v, _)) in entries.iter().enumerate() {
            if entries[..i].iter().any(|&(w, _)| w == v) {
                return Err(Error::ParseError(format!("duplicate degree value {v}")));
            }
        }
        Ok(PartialDegreeSpec { entries })
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn vertex_count(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m as u64).sum()
    }

    pub fn degree_sum(&self) -> u64 {
        self.entries.iter().map(|&(v, m)| v as u64 * m as u64).sum()
    }

    fn has_ones(&self) -> bool {
        self.entries.iter().any(|&(v, _)| v == 1)
    }

    /// Expands to a flat (unsorted) degree list.
    fn expand(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for &(v, m) in &self.entries {
            out.extend(std::iter::repeat(v).take(m as usize));
        }
        out
    }

    /// The explicit sequence without completion; must be tree-realizable.
    pub fn to_sequence(&self) -> Result<DegreeSequence> {
        let d = DegreeSequence::from_degrees(self.expand());
        d.require_tree_realizable()?;
        Ok(d)
    }
}

impl fmt::Display for PartialDegreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses the grammar `term ("," term)*` with `term = INT ("^" INT)?`.
///
/// `"2^11,10"` means eleven vertices of degree 2 and one of degree 10.
pub fn parse_degree_sequence(s: &str) -> Result<PartialDegreeSpec> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::ParseError("empty degree sequence".into()));
    }
    let mut entries = Vec::new();
    for term in s.split(',') {
        let term = term.trim();
        let (value, mult) = match term.split_once('^') {
            Some((v, m)) => (v.trim(), Some(m.trim())),
            None => (term, None),
        };
        let value: u32 = value
            .parse()
            .map_err(|_| Error::ParseError(format!("bad degree value {term:?}")))?;
        let mult: u32 = match mult {
            Some(m) => m
                .parse()
                .map_err(|_| Error::ParseError(format!("bad multiplicity in {term:?}")))?,
            None => 1,
        };
        entries.push((value, mult));
    }
    PartialDegreeSpec::new(entries)
}

/// Appends the unique number of leaves making the spec a tree sequence:
/// `L = degree_sum - 2 * vertex_count + 2`.
///
/// A spec that already lists degree-1 vertices must be realizable as given
/// (`L = 0`); otherwise the request is contradictory and errors `Infeasible`.
pub fn complete_with_leaves(spec: &PartialDegreeSpec) -> Result<DegreeSequence> {
    let sum = spec.degree_sum() as i64;
    let count = spec.vertex_count() as i64;
    let leaves = sum - 2 * count + 2;
    if leaves < 0 {
        return Err(Error::Infeasible(format!(
            "spec {spec} needs {leaves} leaves; no tree exists"
        )));
    }
    if spec.has_ones() && leaves != 0 {
        return Err(Error::Infeasible(format!(
            "spec {spec} lists explicit leaves but needs {leaves} more to balance"
        )));
    }
    let mut degrees = spec.expand();
    degrees.extend(std::iter::repeat(1).take(leaves as usize));
    let d = DegreeSequence::from_degrees(degrees);
    d.require_tree_realizable()?;
    Ok(d)
}

/// Deterministic greedy realization: vertices take the sorted degrees in
/// order, and each new vertex attaches to the earliest placed vertex that
/// still has capacity (breadth-first, so high degrees cluster at the top).
pub fn realize_canonical(d: &DegreeSequence) -> Result<Tree> {
    d.require_tree_realizable()?;
    let degrees = d.degrees();
    let n = degrees.len();
    let mut capacity: Vec<u32> = degrees.to_vec();
    let mut edges = Vec::with_capacity(n - 1);
    let mut cursor = 0usize;
    for v in 1..n {
        while capacity[cursor] == 0 {
            cursor += 1;
        }
        edges.push((cursor as u32, v as u32));
        capacity[cursor] -= 1;
        capacity[v] -= 1;
    }
    let t = Tree::new(n, &edges)?;
    debug_assert_eq!(t.degree_sequence(), *d);
    Ok(t)
}

/// Builds the spine-plus-leaves extremal tree: `x` vertices of degree
/// `mu + 2`, then `y` of degree `mu + 1`, laid out as a path, with `leaves`
/// pendant vertices attached greedily to the highest remaining capacity
/// (ties to the lowest label).
pub fn extremal_construction(x: u64, y: u64, leaves: u64, mu: u64) -> Result<Tree> {
    if mu < 1 {
        return Err(Error::Infeasible("mu must be at least 1".into()));
    }
    let spine = x + y;
    if spine < 1 {
        return Err(Error::Infeasible("need at least one spine vertex".into()));
    }
    let n = spine + leaves;
    let degree_sum = x * (mu + 2) + y * (mu + 1) + leaves;
    if degree_sum != 2 * (n - 1) {
        return Err(Error::Infeasible(format!(
            "degree sum {degree_sum} does not match 2(n-1) = {}",
            2 * (n - 1)
        )));
    }
    let n = usize::try_from(n).map_err(|_| Error::Infeasible("order overflows usize".into()))?;
    let spine = spine as usize;
    let mut target = vec![0u32; n];
    for (i, t) in target.iter_mut().enumerate().take(spine) {
        *t = if i < x as usize { mu as u32 + 2 } else { mu as u32 + 1 };
    }
    for t in target.iter_mut().skip(spine) {
        *t = 1;
    }
    let mut capacity = target.clone();
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..spine {
        edges.push((i as u32 - 1, i as u32));
        capacity[i - 1] = capacity[i - 1]
            .checked_sub(1)
            .ok_or_else(|| Error::Infeasible("spine exceeds degree budget".into()))?;
        capacity[i] = capacity[i]
            .checked_sub(1)
            .ok_or_else(|| Error::Infeasible("spine exceeds degree budget".into()))?;
    }
    for leaf in spine..n {
        let host = (0..spine)
            .max_by_key(|&i| (capacity[i], std::cmp::Reverse(i)))
            .filter(|&i| capacity[i] > 0)
            .ok_or_else(|| Error::Infeasible("no capacity left for leaves".into()))?;
        edges.push((host as u32, leaf as u32));
        capacity[host] -= 1;
        capacity[leaf] -= 1;
    }
    let t = Tree::new(n, &edges)?;
    debug_assert_eq!(
        t.degree_sequence(),
        DegreeSequence::from_degrees(target),
        "construction must hit the target degree multiset"
    );
    Ok(t)
}

/// Majorization order on degree sequences: `a` majorizes `b` iff every
/// prefix sum of `a` dominates, given equal length and equal total.
pub fn majorizes(a: &DegreeSequence, b: &DegreeSequence) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::IncomparableLength(format!(
            "lengths {} and {} differ",
            a.len(),
            b.len()
        )));
    }
    if a.degree_sum() != b.degree_sum() {
        return Err(Error::IncomparableLength(format!(
            "sums {} and {} differ",
            a.degree_sum(),
            b.degree_sum()
        )));
    }
    let mut pa = 0i64;
    let mut pb = 0i64;
    for (&x, &y) in a.degrees().iter().zip(b.degrees()) {
        pa += x as i64;
        pb += y as i64;
        if pa < pb {
            return Ok(false);
        }
    }
    Ok(true)
}
