//! Degree sequences of trees.

use std::fmt;

use crate::error::{Error, Result};

/// A degree sequence held in nonincreasing order.
///
/// A sequence is tree-realizable iff it has at least two entries, every entry
/// is at least 1, and the entries sum to `2(n - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    /// Normalizes (sorts nonincreasing) an arbitrary list of degrees.
    pub fn from_degrees(mut degrees: Vec<u32>) -> DegreeSequence {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.degrees.last().copied().unwrap_or(0)
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.degrees.iter().map(|&d| (d as u64) * (d as u64)).sum()
    }

    pub fn leaf_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    /// True iff some tree has exactly this degree multiset.
    pub fn is_tree_realizable(&self) -> bool {
        let n = self.len();
        n >= 2 && self.min_degree() >= 1 && self.degree_sum() == 2 * (n as u64 - 1)
    }

    /// Errors with `NotRealizable` unless [`Self::is_tree_realizable`].
    pub fn require_tree_realizable(&self) -> Result<()> {
        if self.is_tree_realizable() {
            Ok(())
        } else {
            Err(Error::NotRealizable(format!(
                "sequence {self} is not the degree sequence of any tree"
            )))
        }
    }
}

/// Compact display: runs collapse to `value^mult`, e.g. `10,2^11,1^10`.
impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.degrees.len() {
            let v = self.degrees[i];
            let mut j = i;
            while j < self.degrees.len() && self.degrees[j] == v {
                j += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{}^{}", v, j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}
