//! Prüfer sequences for labeled trees.
//!
//! Encoding repeatedly removes the smallest-labeled leaf and records its
//! neighbor, so every labeled tree on `n >= 2` vertices maps to a unique
//! sequence of length `n - 2`, and vertex `v` appears exactly `deg(v) - 1`
//! times.

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// A Prüfer sequence for a tree of order `len() + 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrueferSeq(Vec<u32>);

impl PrueferSeq {
    /// Wraps a raw sequence destined for a tree of order `n`.
    pub fn new(seq: Vec<u32>, n: usize) -> Result<PrueferSeq> {
        if n < 2 {
            return Err(Error::BadOrder("Prüfer sequences need order >= 2".into()));
        }
        if seq.len() != n - 2 {
            return Err(Error::BadOrder(format!(
                "sequence length {} does not match order {n}",
                seq.len()
            )));
        }
        if let Some(&v) = seq.iter().find(|&&v| v as usize >= n) {
            return Err(Error::BadLabel(format!("entry {v} out of range for order {n}")));
        }
        Ok(PrueferSeq(seq))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len() + 2
    }
}

/// Encodes a labeled tree (order >= 2) as its Prüfer sequence.
pub fn to_pruefer(t: &Tree) -> Result<PrueferSeq> {
    let n = t.order();
    if n < 2 {
        return Err(Error::BadOrder("Prüfer encoding needs order >= 2".into()));
    }
    let adj = t.adjacency();
    let mut degree: Vec<u32> = t.degrees().to_vec();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<u32>> = (0..n as u32)
        .filter(|&v| degree[v as usize] == 1)
        .map(Reverse)
        .collect();
    let mut seq = Vec::with_capacity(n - 2);
    while seq.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        removed[leaf as usize] = true;
        let neighbor = *adj[leaf as usize]
            .iter()
            .find(|&&w| !removed[w as usize])
            .expect("leaf has a live neighbor");
        seq.push(neighbor);
        degree[neighbor as usize] -= 1;
        if degree[neighbor as usize] == 1 {
            leaves.push(Reverse(neighbor));
        }
    }
    PrueferSeq::new(seq, n)
}

/// Decodes a Prüfer sequence back into the unique labeled tree.
pub fn from_pruefer(seq: &PrueferSeq) -> Result<Tree> {
    let n = seq.order();
    let mut degree = vec![1u32; n];
    for &v in seq.entries() {
        degree[v as usize] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<u32>> = (0..n as u32)
        .filter(|&v| degree[v as usize] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq.entries() {
        let Reverse(leaf) = leaves.pop().expect("decode always has a leaf");
        edges.push((leaf, v));
        degree[leaf as usize] -= 1;
        degree[v as usize] -= 1;
        if degree[v as usize] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Tree::new(n, &edges)
}

impl Tree {
    pub fn to_pruefer(&self) -> Result<PrueferSeq> {
        to_pruefer(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_encodes_to_1_2() {
        let seq = Tree::path(4).to_pruefer().unwrap();
        assert_eq!(seq.entries(), &[1, 2]);
    }

    #[test]
    fn all_zeros_decodes_to_star() {
        let seq = PrueferSeq::new(vec![0, 0], 4).unwrap();
        let t = from_pruefer(&seq).unwrap();
        assert_eq!(t, Tree::star(4));
    }

    #[test]
    fn p2_has_empty_sequence() {
        let seq = Tree::path(2).to_pruefer().unwrap();
        assert!(seq.entries().is_empty());
        assert_eq!(from_pruefer(&seq).unwrap(), Tree::path(2));
    }

    #[test]
    fn order_below_two_is_rejected() {
        assert!(matches!(Tree::path(1).to_pruefer(), Err(Error::BadOrder(_))));
        assert!(matches!(PrueferSeq::new(vec![], 1), Err(Error::BadOrder(_))));
        assert!(matches!(PrueferSeq::new(vec![4], 3), Err(Error::BadLabel(_))));
    }

    #[test]
    fn entry_multiplicity_is_degree_minus_one() {
        let t = Tree::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let seq = t.to_pruefer().unwrap();
        for v in 0..6u32 {
            let count = seq.entries().iter().filter(|&&x| x == v).count() as u32;
            assert_eq!(count, t.degree(v) - 1);
        }
    }
}
