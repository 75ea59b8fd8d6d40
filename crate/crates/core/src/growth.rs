//! Growth diagrams of promotion orbits.
//!
//! A tableau with ceiling `k` is encoded by the multichain of Ferrers
//! diagrams `T_{≤0} ⊆ T_{≤1} ⊆ ⋯ ⊆ T_{≤k}`. A [`GrowthWindow`] stacks the
//! chains of consecutive promotions, each row shifted one column right of the
//! row above, so that row `i` occupies columns `i..=i+k`. The diagram at
//! `(row, col)` has rank `col − row`, its index within its row's chain.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::{evacuate, orbit, promote, promote_power, toggle, Direction};
use crate::enumerate::enumerate_ssyt;
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::shape::{Cell, Partition};
use crate::tableau::Tableau;

/// The multichain `(T_{≤j})_{0≤j≤k}` of a straight-shape tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainEncoding {
    diagrams: Vec<Partition>,
}

impl ChainEncoding {
    /// Validates that `diagrams` starts at ∅ and is weakly increasing.
    pub fn new(diagrams: Vec<Partition>) -> Result<Self> {
        let starts_empty = diagrams.first().is_some_and(Partition::is_empty);
        let nested = diagrams.windows(2).all(|w| w[1].contains_partition(&w[0]));
        if !starts_empty || !nested {
            return Err(Error::InvalidTableau { kind: "chain" });
        }
        Ok(ChainEncoding { diagrams })
    }

    pub fn diagrams(&self) -> &[Partition] {
        &self.diagrams
    }

    pub fn ceiling(&self) -> u32 {
        (self.diagrams.len() - 1) as u32
    }

    /// Each cell gets the least `j` with the cell in `T_{≤j}`.
    pub fn decode(&self) -> Result<Tableau> {
        let shape = self.diagrams.last().expect("chain is non-empty");
        let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        for (j, d) in self.diagrams.iter().enumerate().skip(1) {
            for (r, row) in rows.iter_mut().enumerate() {
                for v in row.iter_mut().take(d.part(r)) {
                    if *v == 0 {
                        *v = j as u32;
                    }
                }
            }
        }
        Tableau::from_raw(rows, self.ceiling())
    }
}

pub fn encode_chain(t: &Tableau) -> ChainEncoding {
    assert!(t.is_straight(), "chain encoding needs a straight shape");
    let k = t.ceiling();
    let diagrams = (0..=k)
        .map(|j| {
            let parts = t
                .rows()
                .iter()
                .map(|row| row.iter().take_while(|&&v| v <= j).count())
                .collect();
            Partition::from_padded(parts).expect("T_{<=j} is a Ferrers diagram")
        })
        .collect();
    ChainEncoding { diagrams }
}

/// A finite band of consecutive rows of the growth diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthWindow {
    /// Row `i` encodes `P^{first_power + i}(T)`.
    first_power: i64,
    rows: Vec<ChainEncoding>,
    ceiling: u32,
}

/// Window of `height` rows encoding `T, P(T), …, P^{height−1}(T)`.
pub fn build_window(t: &Tableau, height: usize) -> GrowthWindow {
    build_window_from(t, 0, height)
}

/// Window whose first row encodes `P^{first_power}(T)`; negative powers come
/// from inverse promotion.
pub fn build_window_from(t: &Tableau, first_power: i64, height: usize) -> GrowthWindow {
    let mut cur = promote_power(t, first_power);
    let mut rows = Vec::with_capacity(height);
    for _ in 0..height {
        rows.push(encode_chain(&cur));
        cur = promote(&cur);
    }
    GrowthWindow {
        first_power,
        rows,
        ceiling: t.ceiling(),
    }
}

impl GrowthWindow {
    pub fn rows(&self) -> &[ChainEncoding] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn first_power(&self) -> i64 {
        self.first_power
    }

    pub fn ceiling(&self) -> u32 {
        self.ceiling
    }

    /// Diagram at window coordinates; columns are offset so that row `i`
    /// starts at column `i`.
    pub fn diagram(&self, row: usize, col: usize) -> Option<&Partition> {
        let rank = col.checked_sub(row)?;
        self.rows.get(row)?.diagrams.get(rank)
    }

    pub fn num_columns(&self) -> usize {
        self.rows.len() + self.ceiling as usize
    }

    /// Diagrams of column `col`, bottom row first.
    pub fn column(&self, col: usize) -> Vec<&Partition> {
        (0..self.rows.len())
            .rev()
            .filter_map(|r| self.diagram(r, col))
            .collect()
    }

    /// Rank of the leftmost diagram in `row` that contains `cell`.
    pub fn row_minimal_rank(&self, row: usize, cell: Cell) -> Option<u32> {
        self.rows
            .get(row)?
            .diagrams
            .iter()
            .position(|d| d.contains(cell))
            .map(|j| j as u32)
    }

    /// Rank of the bottommost diagram in column `col` that contains `cell`.
    pub fn column_minimal_rank(&self, col: usize, cell: Cell) -> Option<u32> {
        (0..self.rows.len())
            .rev()
            .find(|&r| self.diagram(r, col).is_some_and(|d| d.contains(cell)))
            .map(|r| (col - r) as u32)
    }

    /// ASCII rendering: one line per row, diagrams as comma-separated parts
    /// (`-` for ∅), `*` after diagrams containing `marked`.
    pub fn render(&self, marked: Option<Cell>) -> String {
        let label = |d: &Partition| {
            let mut s = if d.is_empty() {
                "-".to_string()
            } else {
                d.parts().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            };
            if marked.is_some_and(|c| d.contains(c)) {
                s.push('*');
            }
            s
        };
        let width = self
            .rows
            .iter()
            .flat_map(|r| r.diagrams.iter().map(&label))
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1)
            + 1;
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut line = " ".repeat(width * i);
            for d in &row.diagrams {
                let _ = write!(line, "{:<width$}", label(d));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Decodes the full column through the rightmost diagram of row `row`.
pub fn column_evacuation(w: &GrowthWindow, row: usize) -> Result<Tableau> {
    let k = w.ceiling as usize;
    let needed = row + k + 1;
    if w.height() < needed {
        return Err(Error::WindowTooShort {
            needed,
            have: w.height(),
        });
    }
    let diagrams = w.column(row + k).into_iter().cloned().collect();
    ChainEncoding::new(diagrams)?.decode()
}

/// `dis(T, B)`: the entries of `B` in `T, P(T), …, P^{k−1}(T)`.
pub fn dis(t: &Tableau, cell: Cell) -> Result<Multiset> {
    let mut cur = t.clone();
    let mut out = Multiset::new();
    for _ in 0..t.ceiling() {
        out.insert(cur.get(cell).ok_or(Error::BoxOutside(cell))?);
        cur = promote(&cur);
    }
    Ok(out)
}

/// `dis` read from a window as ranks of row-minimal darkened diagrams over
/// rows `first..first + k`.
pub fn dis_by_rank(w: &GrowthWindow, cell: Cell, first: usize) -> Result<Multiset> {
    let k = w.ceiling as usize;
    if w.height() < first + k {
        return Err(Error::WindowTooShort {
            needed: first + k,
            have: w.height(),
        });
    }
    (first..first + k)
        .map(|r| w.row_minimal_rank(r, cell).ok_or(Error::BoxOutside(cell)))
        .collect()
}

/// Ranks of column-minimal darkened diagrams over `k` consecutive full
/// columns starting at `first_col`. On rectangles this is `dis(E(T), B)`.
pub fn column_dis_by_rank(w: &GrowthWindow, cell: Cell, first_col: usize) -> Result<Multiset> {
    let k = w.ceiling as usize;
    let needed = first_col + k;
    if first_col < k || w.height() < needed {
        return Err(Error::WindowTooShort {
            needed: needed.max(2 * k),
            have: w.height(),
        });
    }
    (first_col..first_col + k)
        .map(|c| w.column_minimal_rank(c, cell).ok_or(Error::BoxOutside(cell)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisViolation {
    pub tableau: String,
    pub cell: Cell,
    pub dis: Multiset,
    pub dis_of_evacuation: Multiset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisReport {
    pub shape: Partition,
    pub ceiling: u32,
    pub tableaux_checked: usize,
    pub violations: Vec<DisViolation>,
}

impl DisReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Which promotion powers a `dis` multiset ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisWindow {
    /// `P^0, …, P^{k−1}`.
    Ceiling,
    /// One full promotion orbit.
    Orbit,
}

/// Entries of `B` over the whole promotion orbit of `T`.
pub fn dis_over_orbit(t: &Tableau, cell: Cell) -> Result<Multiset> {
    orbit(t, Direction::Promote)
        .elements()
        .iter()
        .map(|x| x.get(cell).ok_or(Error::BoxOutside(cell)))
        .collect()
}

/// Checks `dis(T, B) = dis(E(T), B)` for every `T ∈ SSYT_k(shape)` and box.
///
/// With the ceiling window this holds on rectangles; other shapes generally
/// produce violations, which the report lists.
pub fn check_dis_invariance(shape: &Partition, ceiling: u32) -> DisReport {
    check_dis_invariance_with(shape, ceiling, DisWindow::Ceiling)
}

pub fn check_dis_invariance_with(shape: &Partition, ceiling: u32, window: DisWindow) -> DisReport {
    let measure = match window {
        DisWindow::Ceiling => dis,
        DisWindow::Orbit => dis_over_orbit,
    };
    let all: Vec<Tableau> = enumerate_ssyt(shape, ceiling).collect();
    let violations = all
        .par_iter()
        .flat_map_iter(|t| {
            let e = evacuate(t);
            shape
                .boxes()
                .filter_map(|b| {
                    let d = measure(t, b).expect("box inside shape");
                    let de = measure(&e, b).expect("box inside shape");
                    (d != de).then(|| DisViolation {
                        tableau: t.to_inline(),
                        cell: b,
                        dis: d,
                        dis_of_evacuation: de,
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    DisReport {
        shape: shape.clone(),
        ceiling,
        tableaux_checked: all.len(),
        violations,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hop {
    Up,
    Right,
}

/// A monotone path through a window: it starts at the ∅ of row
/// `start_row` and makes `k` hops, each one diagram up or one to the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start_row: usize,
    pub hops: Vec<Hop>,
}

impl LatticePath {
    /// The horizontal path along a single row.
    pub fn along_row(row: usize, k: u32) -> Self {
        LatticePath {
            start_row: row,
            hops: vec![Hop::Right; k as usize],
        }
    }

    /// Swaps hops `i` and `i + 1` (1-based) when they differ, bending the
    /// path at the corner between them.
    pub fn bend(&self, i: usize) -> Option<LatticePath> {
        let (a, b) = (*self.hops.get(i - 1)?, *self.hops.get(i)?);
        if a == b {
            return None;
        }
        let mut hops = self.hops.clone();
        hops.swap(i - 1, i);
        Some(LatticePath {
            start_row: self.start_row,
            hops,
        })
    }
}

/// Reads the chain of diagrams along `path` and decodes it.
pub fn path_toggle_correspondence(w: &GrowthWindow, path: &LatticePath) -> Result<Tableau> {
    if path.hops.len() != w.ceiling as usize {
        return Err(Error::PathLeavesWindow);
    }
    let (mut row, mut col) = (path.start_row, path.start_row);
    let mut diagrams = vec![w.diagram(row, col).ok_or(Error::PathLeavesWindow)?.clone()];
    for hop in &path.hops {
        match hop {
            Hop::Up => row = row.checked_sub(1).ok_or(Error::PathLeavesWindow)?,
            Hop::Right => col += 1,
        }
        diagrams.push(w.diagram(row, col).ok_or(Error::PathLeavesWindow)?.clone());
    }
    ChainEncoding::new(diagrams)?.decode()
}

/// The toggle that bending `path` at corner `i` should realize.
pub fn bend_toggle(t: &Tableau, i: usize) -> Tableau {
    toggle(t, i as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::evacuate;

    fn t(rows: &[&[u32]], k: u32) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect(), k).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::from_padded(parts.to_vec()).unwrap()
    }

    fn example() -> Tableau {
        t(&[&[1, 2, 3], &[3, 4, 4]], 5)
    }

    #[test]
    fn encode_two_row_tableau() {
        let chain = encode_chain(&example());
        assert_eq!(
            chain.diagrams(),
            &[p(&[]), p(&[1]), p(&[2]), p(&[3, 1]), p(&[3, 3]), p(&[3, 3])]
        );
        assert_eq!(chain.decode().unwrap(), example());
    }

    #[test]
    fn encode_trivial_cases() {
        let chain = encode_chain(&Tableau::empty(3));
        assert!(chain.diagrams().iter().all(Partition::is_empty));
        assert_eq!(chain.diagrams().len(), 4);
        let std = encode_chain(&t(&[&[1, 2], &[3, 4]], 4));
        assert_eq!(std.diagrams(), &[p(&[]), p(&[1]), p(&[2]), p(&[2, 1]), p(&[2, 2])]);
    }

    #[test]
    fn window_of_two_row_tableau() {
        let w = build_window(&example(), 6);
        let expected: [&[&[usize]]; 6] = [
            &[&[], &[1], &[2], &[3, 1], &[3, 3], &[3, 3]],
            &[&[], &[1], &[2, 1], &[3, 2], &[3, 2], &[3, 3]],
            &[&[], &[2], &[3, 1], &[3, 1], &[3, 2], &[3, 3]],
            &[&[], &[2], &[2], &[2, 1], &[3, 1], &[3, 3]],
            &[&[], &[], &[1], &[2], &[3, 1], &[3, 3]],
            &[&[], &[1], &[2], &[3, 1], &[3, 3], &[3, 3]],
        ];
        for (row, exp) in w.rows().iter().zip(expected) {
            let exp: Vec<Partition> = exp.iter().map(|parts| p(parts)).collect();
            assert_eq!(row.diagrams(), exp.as_slice());
        }
    }

    #[test]
    fn small_window() {
        let w = build_window(&t(&[&[1]], 2), 3);
        let decoded: Vec<Tableau> = w.rows().iter().map(|c| c.decode().unwrap()).collect();
        assert_eq!(decoded, vec![t(&[&[1]], 2), t(&[&[2]], 2), t(&[&[1]], 2)]);
    }

    #[test]
    fn column_evacuation_example() {
        let w = build_window(&example(), 6);
        assert_eq!(column_evacuation(&w, 0).unwrap(), evacuate(&example()));
        assert_eq!(
            column_evacuation(&w, 1),
            Err(Error::WindowTooShort { needed: 7, have: 6 })
        );
        let one = t(&[&[1]], 1);
        let w1 = build_window(&one, 2);
        assert_eq!(column_evacuation(&w1, 0).unwrap(), one);
    }

    #[test]
    fn dis_of_top_right_box() {
        let b = Cell::new(1, 3);
        let d = dis(&example(), b).unwrap();
        assert_eq!(d.values(), &[2, 3, 3, 4, 4]);
        assert_eq!(dis(&evacuate(&example()), b).unwrap(), d);
        let w = build_window(&example(), 10);
        assert_eq!(dis_by_rank(&w, b, 0).unwrap(), d);
        assert_eq!(column_dis_by_rank(&w, b, 5).unwrap(), d);
        assert_eq!(dis(&t(&[&[1]], 3), Cell::new(1, 1)).unwrap().values(), &[1, 2, 3]);
    }

    #[test]
    fn bent_paths_differ_by_one_toggle() {
        let w = build_window(&example(), 6);
        let solid = LatticePath {
            start_row: 2,
            hops: vec![Hop::Right, Hop::Up, Hop::Right, Hop::Right, Hop::Right],
        };
        let a = path_toggle_correspondence(&w, &solid).unwrap();
        assert_eq!(a, t(&[&[1, 1, 3], &[2, 3, 5]], 5));
        let dotted = solid.bend(2).unwrap();
        let b = path_toggle_correspondence(&w, &dotted).unwrap();
        assert_eq!(b, t(&[&[1, 1, 2], &[2, 3, 5]], 5));
        assert_eq!(toggle(&a, 2), b);
        assert_eq!(toggle(&b, 2), a);
        assert_eq!(
            path_toggle_correspondence(&w, &LatticePath::along_row(3, 5)).unwrap(),
            w.rows()[3].decode().unwrap()
        );
    }

    #[test]
    fn path_leaving_window_rejected() {
        let w = build_window(&example(), 6);
        let bad = LatticePath {
            start_row: 0,
            hops: vec![Hop::Up; 5],
        };
        assert_eq!(path_toggle_correspondence(&w, &bad), Err(Error::PathLeavesWindow));
    }

    #[test]
    fn dis_invariance_small() {
        assert!(check_dis_invariance(&p(&[1]), 3).passed());
        assert!(check_dis_invariance(&p(&[2, 2]), 3).passed());
    }

    #[test]
    fn k_window_dis_not_invariant_off_rectangles() {
        // orbit {T, P(T)} has length 2, and E(T) = P(T)
        let x = t(&[&[1, 2], &[3]], 3);
        assert_eq!(evacuate(&x), t(&[&[1, 3], &[2]], 3));
        let b = Cell::new(1, 2);
        assert_eq!(dis(&x, b).unwrap().values(), &[2, 2, 3]);
        assert_eq!(dis(&evacuate(&x), b).unwrap().values(), &[2, 3, 3]);
        let report = check_dis_invariance(&p(&[2, 1]), 3);
        assert_eq!(report.violations.len(), 4);
        assert!(check_dis_invariance_with(&p(&[2, 1]), 3, DisWindow::Orbit).passed());
    }

    #[test]
    fn render_marks_cells() {
        let w = build_window(&example(), 2);
        let text = w.render(Some(Cell::new(1, 3)));
        let first = text.lines().next().unwrap();
        assert!(first.starts_with("-"));
        assert!(first.contains("3,1*"));
        assert!(text.lines().nth(1).unwrap().starts_with(' '));
    }
}
