//! Canonical codes for unrooted trees.
//!
//! The code is the classic AHU bracket encoding rooted at the centroid: a
//! vertex encodes as `(` + its children's codes in sorted order + `)`. Trees
//! with a centroid edge (two adjacent centroids) encode as the sorted
//! concatenation of the two halves' codes, which is distinguishable from a
//! single-centroid code because a balanced group closes only at the end.
//! Two trees have equal codes iff they are isomorphic.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Canonical form of an unrooted tree; `Ord` gives the deterministic order
/// used by enumeration streams and tie-breaks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Reconstructs a tree with this code (vertices numbered in preorder).
    /// The result's [`canonical_code`] equals `self`.
    pub fn decode(&self) -> Result<Tree> {
        let s = &self.0;
        if s.is_empty() {
            return Err(Error::ParseError("empty canonical code".into()));
        }
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let mut stack: Vec<u32> = Vec::new();
        let mut next: u32 = 0;
        let mut roots: Vec<u32> = Vec::new();
        for &b in s.iter() {
            match b {
                b'(' => {
                    let v = next;
                    next += 1;
                    if let Some(&p) = stack.last() {
                        edges.push((p, v));
                    } else {
                        roots.push(v);
                    }
                    stack.push(v);
                }
                b')' => {
                    if stack.pop().is_none() {
                        return Err(Error::ParseError("unbalanced canonical code".into()));
                    }
                }
                _ => return Err(Error::ParseError("canonical code must be parentheses".into())),
            }
        }
        if !stack.is_empty() {
            return Err(Error::ParseError("unbalanced canonical code".into()));
        }
        match roots.len() {
            1 => {}
            // Centroid-edge form: join the two half roots.
            2 => edges.push((roots[0], roots[1])),
            _ => return Err(Error::ParseError("canonical code must have 1 or 2 groups".into())),
        }
        Tree::new(next as usize, &edges)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("codes are ASCII"))
    }
}

impl FromStr for CanonicalCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<CanonicalCode> {
        let code = CanonicalCode(s.as_bytes().to_vec());
        code.decode()?;
        Ok(code)
    }
}

/// Centroid(s) of a tree: the one or two vertices minimizing the largest
/// component left by their removal.
pub fn centroids(t: &Tree) -> Vec<u32> {
    let n = t.order();
    if n == 1 {
        return vec![0];
    }
    let adj = t.adjacency();
    // Subtree sizes bottom-up over a BFS order rooted at 0.
    let (order, parent) = bfs_order_with_parents(&adj, 0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v as usize] != u32::MAX {
            size[parent[v as usize] as usize] += size[v as usize];
        }
    }
    let mut best = n;
    let mut cents = Vec::new();
    for v in 0..n as u32 {
        let mut largest = n - size[v as usize];
        for &w in &adj[v as usize] {
            if parent[w as usize] == v {
                largest = largest.max(size[w as usize]);
            }
        }
        if largest < best {
            best = largest;
            cents.clear();
            cents.push(v);
        } else if largest == best {
            cents.push(v);
        }
    }
    cents.sort_unstable();
    cents
}

fn bfs_order_with_parents(adj: &[Vec<u32>], root: u32) -> (Vec<u32>, Vec<u32>) {
    let n = adj.len();
    let mut parent = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(root);
    let mut seen = vec![false; n];
    seen[root as usize] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                parent[w as usize] = v;
                queue.push_back(w);
            }
        }
    }
    (order, parent)
}

/// AHU code of the tree rooted at `root`, with `banned` treated as absent
/// (used to split a centroid edge into halves).
fn rooted_code(adj: &[Vec<u32>], root: u32, banned: Option<u32>) -> Vec<u8> {
    let n = adj.len();
    let mut parent = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::new();
    let mut seen = vec![false; n];
    if let Some(b) = banned {
        seen[b as usize] = true;
    }
    seen[root as usize] = true;
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                parent[w as usize] = v;
                queue.push_back(w);
            }
        }
    }
    let mut codes: Vec<Option<Vec<u8>>> = vec![None; n];
    // Children come after parents in BFS order, so reverse order is bottom-up.
    for &v in order.iter().rev() {
        let mut kids: Vec<Vec<u8>> = adj[v as usize]
            .iter()
            .filter(|&&w| parent[w as usize] == v)
            .map(|&w| codes[w as usize].take().expect("child code ready"))
            .collect();
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in &kids {
            code.extend_from_slice(k);
        }
        code.push(b')');
        codes[v as usize] = Some(code);
    }
    codes[root as usize].take().expect("root code ready")
}

/// Canonical code of an unrooted tree.
pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let cents = centroids(t);
    let adj = t.adjacency();
    match cents.as_slice() {
        [c] => CanonicalCode(rooted_code(&adj, *c, None)),
        [c1, c2] => {
            let a = rooted_code(&adj, *c1, Some(*c2));
            let b = rooted_code(&adj, *c2, Some(*c1));
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let mut code = lo;
            code.extend_from_slice(&hi);
            CanonicalCode(code)
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

impl Tree {
    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_code(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_star_codes() {
        assert_eq!(Tree::path(4).canonical_code().to_string(), "(())(())");
        assert_eq!(Tree::star(4).canonical_code().to_string(), "(()()())");
        assert_eq!(Tree::path(1).canonical_code().to_string(), "()");
        assert_eq!(Tree::path(2).canonical_code().to_string(), "()()");
    }

    #[test]
    fn relabeling_is_invariant() {
        // P4 relabeled three ways.
        let a = Tree::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Tree::new(4, &[(2, 0), (0, 1), (1, 3)]).unwrap();
        let c = Tree::new(4, &[(3, 2), (2, 0), (0, 1)]).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
        assert_eq!(b.canonical_code(), c.canonical_code());
        // And the star differs.
        assert_ne!(a.canonical_code(), Tree::star(4).canonical_code());
    }

    #[test]
    fn centroid_pairs_are_adjacent() {
        let t = Tree::path(6);
        let c = centroids(&t);
        assert_eq!(c, vec![2, 3]);
        let t = Tree::path(7);
        assert_eq!(centroids(&t), vec![3]);
    }

    #[test]
    fn decode_round_trip() {
        for t in [Tree::path(1), Tree::path(2), Tree::path(7), Tree::star(9)] {
            let code = t.canonical_code();
            let back = code.decode().unwrap();
            assert_eq!(back.canonical_code(), code);
            assert_eq!(back.order(), t.order());
        }
    }

    #[test]
    fn decode_rejects_garbage() {
        assert!("(()".parse::<CanonicalCode>().is_err());
        assert!("()()()".parse::<CanonicalCode>().is_err());
        assert!("(a)".parse::<CanonicalCode>().is_err());
    }
}
