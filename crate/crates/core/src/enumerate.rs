//! Exhaustive enumeration of semistandard and standard tableaux.

use crate::shape::Partition;
use crate::tableau::Tableau;

/// Iterator over `SSYT_k(shape)` in row-major lexicographic order.
///
/// Each cell carries an upper bound `k − (cells below it in its column)`;
/// advancing bumps the last cell below its bound and refills every later
/// cell with its least admissible value.
pub struct SsytIter {
    shape: Partition,
    ceiling: u32,
    // row-major cell coordinates (0-based) and per-cell upper bound
    cells: Vec<(usize, usize)>,
    upper: Vec<u32>,
    rows: Vec<Vec<u32>>,
    state: IterState,
}

#[derive(PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl SsytIter {
    fn new(shape: &Partition, ceiling: u32) -> Self {
        let cells: Vec<(usize, usize)> = shape.boxes().map(|b| (b.row - 1, b.col - 1)).collect();
        let upper = cells
            .iter()
            .map(|&(r, c)| {
                let below = shape.column_height(c + 1) - r - 1;
                ceiling as i64 - below as i64
            })
            .collect::<Vec<i64>>();
        let feasible = upper.iter().all(|&u| u >= 1);
        let rows = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut it = SsytIter {
            shape: shape.clone(),
            ceiling,
            cells,
            upper: upper.into_iter().map(|u| u.max(0) as u32).collect(),
            rows,
            state: if feasible { IterState::Fresh } else { IterState::Done },
        };
        if feasible {
            it.fill_from(0);
        }
        it
    }

    fn least(&self, r: usize, c: usize) -> u32 {
        let left = if c > 0 { self.rows[r][c - 1] } else { 1 };
        let above = if r > 0 { self.rows[r - 1][c] + 1 } else { 1 };
        left.max(above)
    }

    fn fill_from(&mut self, start: usize) {
        for i in start..self.cells.len() {
            let (r, c) = self.cells[i];
            self.rows[r][c] = self.least(r, c);
        }
    }

    fn advance(&mut self) -> bool {
        for i in (0..self.cells.len()).rev() {
            let (r, c) = self.cells[i];
            if self.rows[r][c] < self.upper[i] {
                self.rows[r][c] += 1;
                self.fill_from(i + 1);
                return true;
            }
        }
        false
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => self.state = IterState::Running,
            IterState::Running => {
                if !self.advance() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        Some(Tableau::from_raw_unchecked(self.rows.clone(), self.ceiling))
    }
}

/// Every semistandard tableau of straight shape `shape` with entries `≤ ceiling`.
pub fn enumerate_ssyt(shape: &Partition, ceiling: u32) -> SsytIter {
    SsytIter::new(shape, ceiling)
}

/// Every standard tableau of `shape`, sorted by row reading.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut filled = vec![0usize; shape.num_rows()];
    let mut out = Vec::new();
    fn place(
        next: u32,
        n: u32,
        shape: &Partition,
        rows: &mut Vec<Vec<u32>>,
        filled: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if next > n {
            out.push(Tableau::from_raw_unchecked(rows.clone(), n));
            return;
        }
        for r in 0..filled.len() {
            let c = filled[r];
            let fits_row = c < shape.part(r);
            let fits_col = r == 0 || filled[r - 1] > c;
            if fits_row && fits_col {
                rows[r][c] = next;
                filled[r] += 1;
                place(next + 1, n, shape, rows, filled, out);
                filled[r] -= 1;
                rows[r][c] = 0;
            }
        }
    }
    place(1, n as u32, shape, &mut rows, &mut filled, &mut out);
    if n == 0 {
        out = vec![Tableau::empty(1)];
    }
    out.sort();
    out
}
