//! Partitions, weak compositions and skew shapes.

use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored; the empty partition is `Partition(vec![])`.
/// Drawn as a Young diagram in English convention, row `r` (0-based) has
/// `parts[r]` boxes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts: Vec<usize> = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Length of row `r` (0-based), zero beyond the last row.
    pub fn part(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.0.iter().enumerate().all(|(r, &p)| p <= self.part(r))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition(parts)
    }

    /// Positions `(row, col)` (0-based) where a single box can be added.
    pub fn addable_corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..=self.rows() {
            let len = self.part(r);
            let above = if r == 0 { usize::MAX } else { self.part(r - 1) };
            if len < above {
                out.push((r, len));
            }
        }
        out
    }

    /// Adds one box at each row index in `rows` (must be pairwise distinct
    /// addable corners); returns the resulting partition.
    pub fn with_corners_added(&self, rows: &[usize]) -> Result<Partition> {
        let mut parts = self.0.clone();
        for &r in rows {
            if r >= parts.len() {
                parts.resize(r + 1, 0);
            }
            parts[r] += 1;
        }
        Partition::new(parts)
    }

    /// All partitions contained in `self` (including the empty one).
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        let mut stack = vec![(Vec::new(), 0usize)];
        while let Some((prefix, r)) = stack.pop() {
            if r == self.rows() {
                continue;
            }
            let cap = self.part(r).min(prefix.last().copied().unwrap_or(usize::MAX));
            for len in 1..=cap {
                let mut next = prefix.clone();
                next.push(len);
                out.push(Partition(next.clone()));
                stack.push((next, r + 1));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// The weight of this shape padded to `n` entries.
    pub fn to_composition(&self, n: usize) -> WeakComposition {
        let mut entries = vec![0; n];
        for (i, &p) in self.0.iter().enumerate() {
            entries[i] = p;
        }
        WeakComposition::new(entries)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

/// A weak composition: a fixed-length vector of nonnegative integers.
///
/// Weights of tableaux live here, expressed in the `ε`-basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(entries: Vec<usize>) -> Self {
        WeakComposition(entries)
    }

    pub fn zeros(n: usize) -> Self {
        WeakComposition(vec![0; n])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Pairing `<h_i, self> = entries[i] - entries[i+1]` for `1 <= i < n`.
    pub fn coroot_pairing(&self, i: usize) -> i64 {
        assert!(i >= 1 && i < self.0.len());
        self.0[i - 1] as i64 - self.0[i] as i64
    }

    /// Sorts the entries weakly decreasing and strips trailing zeros.
    pub fn sort_decreasing(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted composition is a partition")
    }

    /// True if already weakly decreasing (a partition, possibly padded).
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Entry-wise reversal.
    pub fn reversed(&self) -> WeakComposition {
        let mut v = self.0.clone();
        v.reverse();
        WeakComposition(v)
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeNotContained {
                inner: inner.parts().to_vec(),
                outer: outer.parts().to_vec(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// True when no column holds two boxes of the skew shape (no vertical
    /// domino), i.e. `outer[r+1] <= inner[r]` for every row.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.rows()).all(|r| r == 0 || self.outer.part(r) <= self.inner.part(r - 1))
    }

    /// True when no row holds two boxes of the skew shape.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.rows()).all(|r| self.outer.part(r) <= self.inner.part(r) + 1)
    }

    /// Number of nonempty columns.
    pub fn column_count(&self) -> usize {
        (0..self.outer.part(0))
            .filter(|&c| {
                (0..self.outer.rows()).any(|r| c < self.outer.part(r) && c >= self.inner.part(r))
            })
            .count()
    }

    /// Cells `(row, col)` of the skew shape, row-major, 0-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.outer.rows() {
            for c in self.inner.part(r)..self.outer.part(r) {
                out.push((r, c));
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_basics() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().rows(), 2);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn addable_corners() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.addable_corners(), vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(Partition::empty().addable_corners(), vec![(0, 0)]);
    }

    #[test]
    fn subpartitions_of_22() {
        let p = Partition::new(vec![2, 2]).unwrap();
        let subs = p.subpartitions();
        assert_eq!(subs.len(), 6); // (), 1, 2, 11, 21, 22
    }

    #[test]
    fn horizontal_strip() {
        let outer = Partition::new(vec![3, 1]).unwrap();
        let inner = Partition::new(vec![1]).unwrap();
        assert!(SkewShape::new(outer, inner).unwrap().is_horizontal_strip());
        let outer = Partition::new(vec![2, 2]).unwrap();
        let inner = Partition::new(vec![1]).unwrap();
        assert!(!SkewShape::new(outer, inner).unwrap().is_horizontal_strip());
    }

    #[test]
    fn coroot_pairing() {
        let w = WeakComposition::new(vec![2, 1, 1]);
        assert_eq!(w.coroot_pairing(1), 1);
        assert_eq!(w.coroot_pairing(2), 0);
    }
}
