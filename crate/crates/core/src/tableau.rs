//! Fillings of (skew) Ferrers diagrams.
//!
//! A [`Tableau`] stores its entries densely, one `Vec` per row. Cells of the
//! inner shape of a skew tableau hold `0`; every other stored entry is a
//! positive value no larger than the ceiling. The outer shape is given by the
//! row lengths and the inner shape by the leading zeros of each row.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shape::{Cell, Partition, SkewShape};

/// Which family of fillings [`Tableau::validate`] should test membership in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauKind {
    /// Rows weakly increase, columns strictly increase.
    Semistandard,
    /// Semistandard with entries a bijection onto `1..=n`.
    Standard,
    /// Rows and columns strictly increase, entries exactly `1..=d`.
    Increasing,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
    ceiling: u32,
}

impl Tableau {
    /// A straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>, ceiling: u32) -> Result<Self> {
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidTableau { kind: "positive" });
        }
        Self::from_raw(rows, ceiling)
    }

    /// A possibly skew tableau; `None` marks a cell of the inner shape.
    pub fn from_skew_rows(rows: Vec<Vec<Option<u32>>>, ceiling: u32) -> Result<Self> {
        if rows.iter().flatten().any(|v| *v == Some(0)) {
            return Err(Error::InvalidTableau { kind: "positive" });
        }
        let raw = rows
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.unwrap_or(0)).collect())
            .collect();
        Self::from_raw(raw, ceiling)
    }

    /// Checks shape well-formedness and the ceiling. `0` marks inner cells.
    pub(crate) fn from_raw(mut rows: Vec<Vec<u32>>, ceiling: u32) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let outer: Vec<usize> = rows.iter().map(Vec::len).collect();
        let outer = Partition::new(outer)?;
        let mut inner = Vec::with_capacity(rows.len());
        for row in &rows {
            let lead = row.iter().take_while(|&&v| v == 0).count();
            if row[lead..].contains(&0) {
                return Err(Error::InvalidTableau { kind: "skew" });
            }
            inner.push(lead);
        }
        let inner = Partition::from_padded(inner)?;
        SkewShape::new(outer, inner)?;
        if let Some(&v) = rows.iter().flatten().find(|&&v| v > ceiling) {
            return Err(Error::EntryAboveCeiling { entry: v, ceiling });
        }
        Ok(Tableau { rows, ceiling })
    }

    /// Construction without validation, for internal operations that preserve
    /// well-formedness by construction.
    pub(crate) fn from_raw_unchecked(mut rows: Vec<Vec<u32>>, ceiling: u32) -> Self {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Tableau { rows, ceiling }
    }

    pub fn empty(ceiling: u32) -> Self {
        Tableau {
            rows: Vec::new(),
            ceiling,
        }
    }

    /// Raw rows; inner cells hold `0`.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn ceiling(&self) -> u32 {
        self.ceiling
    }

    pub fn with_ceiling(&self, ceiling: u32) -> Result<Self> {
        Self::from_raw(self.rows.clone(), ceiling)
    }

    pub fn outer(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows form a partition")
    }

    pub fn inner(&self) -> Partition {
        Partition::from_padded(
            self.rows
                .iter()
                .map(|r| r.iter().take_while(|&&v| v == 0).count())
                .collect(),
        )
        .expect("inner cells form a partition")
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape {
            outer: self.outer(),
            inner: self.inner(),
        }
    }

    pub fn is_straight(&self) -> bool {
        self.rows.iter().all(|r| r.first() != Some(&0))
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().flatten().all(|&v| v == 0)
    }

    /// Number of filled (non-inner) cells.
    pub fn size(&self) -> usize {
        self.rows.iter().flatten().filter(|&&v| v != 0).count()
    }

    /// Entry of a filled cell.
    pub fn get(&self, cell: Cell) -> Option<u32> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - 1))
            .copied()
            .filter(|&v| v != 0)
    }

    /// Filled cells with their entries, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(move |(c, &v)| (Cell::new(r + 1, c + 1), v))
        })
    }

    /// Filled entries concatenated row by row, top row first.
    pub fn row_reading(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().filter(|&v| v != 0).collect()
    }

    /// `Some((rows, cols))` for a non-empty straight rectangular tableau.
    pub fn rectangle_dims(&self) -> Option<(usize, usize)> {
        if !self.is_straight() {
            return None;
        }
        self.outer().rectangle_dims()
    }

    pub fn validate(&self, kind: TableauKind) -> bool {
        let strict_rows = kind == TableauKind::Increasing;
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                if v > self.ceiling {
                    return false;
                }
                if c > 0 && row[c - 1] != 0 {
                    let left = row[c - 1];
                    if left > v || (strict_rows && left == v) {
                        return false;
                    }
                }
                if r > 0 {
                    let above = self.rows[r - 1][c];
                    if above != 0 && above >= v {
                        return false;
                    }
                }
            }
        }
        match kind {
            TableauKind::Semistandard => true,
            TableauKind::Standard => {
                let mut seen = self.row_reading();
                seen.sort_unstable();
                seen.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
            }
            TableauKind::Increasing => {
                let mut seen = self.row_reading();
                seen.sort_unstable();
                seen.dedup();
                seen.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
            }
        }
    }

    /// `T⁺`: rotate by 180° and replace each entry `i` by `k + 1 − i`.
    pub fn rotate_complement(&self) -> Result<Tableau> {
        self.rectangle_dims().ok_or(Error::NotRectangular)?;
        let k = self.ceiling;
        let rows = self
            .rows
            .iter()
            .rev()
            .map(|row| row.iter().rev().map(|&v| k + 1 - v).collect())
            .collect();
        Ok(Tableau {
            rows,
            ceiling: self.ceiling,
        })
    }

    /// Sum of the entries in `cells`.
    pub fn cell_sum(&self, cells: &[Cell]) -> Result<u64> {
        cells.iter().try_fold(0u64, |acc, &c| {
            self.get(c).map(|v| acc + u64::from(v)).ok_or(Error::BoxOutside(c))
        })
    }

    /// Compact one-line rendering, rows separated by `/`.
    pub fn to_inline(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| if v == 0 { ".".to_string() } else { v.to_string() })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        rows.join("/")
    }
}

/// The plain-text format: a `k=<ceiling>` header, then one line per row
/// with space-separated entries and `.` for inner cells.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k={}", self.ceiling)?;
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|&v| if v == 0 { ".".to_string() } else { v.to_string() })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines: Vec<&str> = s.lines().collect();
        while lines.last().is_some_and(|l| l.trim().is_empty()) {
            lines.pop();
        }
        let header = lines
            .first()
            .ok_or_else(|| parse_err(1, "missing `k=` header".into()))?;
        let ceiling = header
            .trim()
            .strip_prefix("k=")
            .ok_or_else(|| parse_err(1, format!("expected `k=<ceiling>`, found `{header}`")))?
            .parse::<u32>()
            .map_err(|e| parse_err(1, format!("bad ceiling: {e}")))?;
        if ceiling == 0 {
            return Err(parse_err(1, "ceiling must be positive".into()));
        }
        let mut rows = Vec::new();
        for (i, line) in lines.iter().enumerate().skip(1) {
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                if tok == "." {
                    row.push(0);
                    continue;
                }
                let v: u32 = tok
                    .parse()
                    .map_err(|_| parse_err(i + 1, format!("bad entry `{tok}`")))?;
                if v == 0 {
                    return Err(parse_err(i + 1, "entries must be positive".into()));
                }
                row.push(v);
            }
            if row.is_empty() {
                return Err(parse_err(i + 1, "empty row".into()));
            }
            rows.push(row);
        }
        Tableau::from_raw(rows, ceiling).map_err(|e| parse_err(0, e.to_string()))
    }
}
