//! Tree representation and the edge-list text format.

use crate::degrees::DegreeSequence;
use crate::error::{Error, Result};

/// An unrooted tree on vertices `0..n`.
///
/// Invariants (enforced at construction): exactly `n - 1` edges, connected,
/// acyclic, labels in range, no self-loops or duplicate edges. Edges are
/// stored normalized (`u < v`, sorted) so equal trees compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<(u32, u32)>,
    degrees: Vec<u32>,
}

impl Tree {
    /// Builds a tree from an edge list, validating every invariant.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::NotATree("order must be at least 1".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "expected {} edges for order {}, got {}",
                n - 1,
                n,
                edges.len()
            )));
        }
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        let mut degrees = vec![0u32; n];
        for &(a, b) in edges {
            if a as usize >= n || b as usize >= n {
                return Err(Error::BadLabel(format!(
                    "edge ({a}, {b}) out of range for order {n}"
                )));
            }
            if a == b {
                return Err(Error::BadLabel(format!("self-loop at {a}")));
            }
            norm.push((a.min(b), a.max(b)));
            degrees[a as usize] += 1;
            degrees[b as usize] += 1;
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadLabel("duplicate edge".into()));
        }
        let t = Tree {
            n,
            edges: norm,
            degrees,
        };
        if !t.is_connected() {
            return Err(Error::NotATree("edge set is not connected".into()));
        }
        Ok(t)
    }

    /// The path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Tree {
        let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
        Tree::new(n, &edges).expect("path is a tree")
    }

    /// The star with center `0`.
    pub fn star(n: usize) -> Tree {
        let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (0, v)).collect();
        Tree::new(n, &edges).expect("star is a tree")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges, always `order() - 1`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edge list (`u < v`, sorted).
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.degrees[v as usize]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// Adjacency lists, built on demand; neighbor lists are sorted.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        adj
    }

    /// Degree pair of an edge, for per-edge index sums.
    pub fn edge_degrees(&self, e: (u32, u32)) -> (u32, u32) {
        (self.degrees[e.0 as usize], self.degrees[e.1 as usize])
    }

    /// Sorted (nonincreasing) degree sequence.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees.clone())
    }

    fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    // ---- edge-list text format ------------------------------------------

    /// Parses the edge-list format: first non-comment line is `n`, then one
    /// `u v` pair per line. `#` starts a comment; blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Tree> {
        let mut lines = text.lines().filter_map(|l| {
            let l = match l.find('#') {
                Some(i) => &l[..i],
                None => l,
            };
            let l = l.trim();
            if l.is_empty() {
                None
            } else {
                Some(l)
            }
        });
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::ParseError("empty edge list".into()))?
            .parse()
            .map_err(|_| Error::ParseError("first line must be the order n".into()))?;
        let mut edges = Vec::new();
        for l in lines {
            let mut it = l.split_whitespace();
            let u: u32 = it
                .next()
                .ok_or_else(|| Error::ParseError(format!("bad edge line {l:?}")))?
                .parse()
                .map_err(|_| Error::ParseError(format!("bad edge line {l:?}")))?;
            let v: u32 = it
                .next()
                .ok_or_else(|| Error::ParseError(format!("bad edge line {l:?}")))?
                .parse()
                .map_err(|_| Error::ParseError(format!("bad edge line {l:?}")))?;
            if it.next().is_some() {
                return Err(Error::ParseError(format!("bad edge line {l:?}")));
            }
            edges.push((u, v));
        }
        Tree::new(n, &edges)
    }

    /// Renders the edge-list format. Re-reading the output reproduces the
    /// tree, and rendering again yields identical bytes.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(a, b) in &self.edges {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}
