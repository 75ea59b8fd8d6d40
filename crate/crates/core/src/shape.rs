//! Partitions, skew shapes and boxes in matrix (English) coordinates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A box of a diagram. Rows and columns are 1-based; row 1 is the top row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// The box obtained by rotating an `rows × cols` rectangle by 180°.
    pub fn rotated(self, rows: usize, cols: usize) -> Cell {
        Cell::new(rows + 1 - self.row, cols + 1 - self.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Weakly decreasing sequence of positive parts. The empty partition is ∅.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a sequence that may carry trailing zeros.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), or zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of column `col` (1-based).
    pub fn column_height(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition {
            parts: (1..=width).map(|c| self.column_height(c)).collect(),
        }
    }

    pub fn contains(&self, b: Cell) -> bool {
        b.row >= 1 && b.col >= 1 && self.part(b.row - 1) >= b.col
    }

    pub fn contains_partition(&self, other: &Partition) -> bool {
        (0..other.num_rows()).all(|i| other.part(i) <= self.part(i))
    }

    /// `Some((rows, cols))` when the shape is a non-empty rectangle.
    pub fn rectangle_dims(&self) -> Option<(usize, usize)> {
        let first = *self.parts.first()?;
        self.parts
            .iter()
            .all(|&p| p == first)
            .then_some((self.parts.len(), first))
    }

    pub fn is_rectangle(&self) -> bool {
        self.rectangle_dims().is_some()
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// All partitions of `n`, parts in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !outer.contains_partition(&inner) {
            return Err(Error::InnerNotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, b: Cell) -> bool {
        self.outer.contains(b) && !self.inner.contains(b)
    }

    pub fn boxes(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer.boxes().filter(|&b| !self.inner.contains(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::from_padded(vec![3, 1, 0, 0]).is_ok());
    }

    #[test]
    fn partitions_of_small_sizes() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn conjugate_and_columns() {
        let p = Partition::new(vec![4, 4, 2]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 3, 2, 2]);
        assert_eq!(p.column_height(3), 2);
        assert!(p.contains(Cell::new(3, 2)));
        assert!(!p.contains(Cell::new(3, 3)));
    }

    #[test]
    fn skew_requires_containment() {
        let outer = Partition::new(vec![2, 1]).unwrap();
        assert!(SkewShape::new(outer.clone(), Partition::new(vec![1, 1]).unwrap()).is_ok());
        assert!(SkewShape::new(outer, Partition::new(vec![3]).unwrap()).is_err());
    }
}
