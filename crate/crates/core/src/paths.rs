//! Promotion paths and marker trajectories of standard rectangular tableaux.
//!
//! For `T ∈ SYT(m×n)` with `k = mn`, promotion moves the values along a single
//! lattice path from the upper-left to the lower-right box. Following the
//! values (markers) through the `k`-step progression `T → P(T) → ⋯` gives the
//! trajectories and the `inn`/`out` multisets of each box.

use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::{evacuate, promote};
use crate::enumerate::enumerate_syt;
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::shape::{Cell, Partition};
use crate::tableau::{Tableau, TableauKind};

/// A sequence of boxes with one label per box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledPath {
    pub boxes: Vec<Cell>,
    pub labels: Vec<u32>,
}

impl LabeledPath {
    /// The same boxes and labels traversed from the other end. A trajectory
    /// runs lower-right to upper-left, so it is compared with a promotion
    /// path through this.
    pub fn reversed(&self) -> LabeledPath {
        LabeledPath {
            boxes: self.boxes.iter().rev().copied().collect(),
            labels: self.labels.iter().rev().copied().collect(),
        }
    }
}

/// Values leaving and entering a box over one full progression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowMultisets {
    #[serde(rename = "box")]
    pub cell: Cell,
    pub inn: Multiset,
    pub out: Multiset,
}

fn standard_rectangle(t: &Tableau) -> Result<(usize, usize)> {
    let dims = t.rectangle_dims().ok_or(Error::NotRectangular)?;
    if !t.validate(TableauKind::Standard) || t.ceiling() as usize != t.size() {
        return Err(Error::NotStandard);
    }
    Ok(dims)
}

fn entry(t: &Tableau, c: Cell) -> u32 {
    t.rows()[c.row - 1][c.col - 1]
}

fn rho_unchecked(t: &Tableau, (m, n): (usize, usize)) -> LabeledPath {
    let mut cur = Cell::new(1, 1);
    let mut boxes = vec![cur];
    while cur != Cell::new(m, n) {
        let down = (cur.row < m).then(|| Cell::new(cur.row + 1, cur.col));
        let right = (cur.col < n).then(|| Cell::new(cur.row, cur.col + 1));
        cur = match (down, right) {
            (Some(d), Some(r)) => {
                let (vd, vr) = (entry(t, d), entry(t, r));
                assert_ne!(vd, vr, "standard tableaux have distinct entries");
                if vd < vr {
                    d
                } else {
                    r
                }
            }
            (Some(d), None) => d,
            (None, Some(r)) => r,
            (None, None) => unreachable!("stopped before the lower-right box"),
        };
        boxes.push(cur);
    }
    let labels = boxes.iter().map(|&b| entry(t, b)).collect();
    LabeledPath { boxes, labels }
}

/// `ρ(T)`: from `(1,1)`, step to whichever of the boxes below and to the
/// right holds the smaller value, until the lower-right box.
pub fn promotion_path(t: &Tableau) -> Result<LabeledPath> {
    let dims = standard_rectangle(t)?;
    Ok(rho_unchecked(t, dims))
}

/// Applies promotion along a given path: each label moves back one box, `k`
/// fills the last box, and every other value is decremented.
pub fn promote_along(t: &Tableau, path: &LabeledPath) -> Tableau {
    let k = t.ceiling();
    let mut rows: Vec<Vec<u32>> = t.rows().iter().map(|r| r.iter().map(|&v| v - 1).collect()).collect();
    for w in 0..path.boxes.len() {
        let b = path.boxes[w];
        rows[b.row - 1][b.col - 1] = path.labels.get(w + 1).map_or(k, |&v| v - 1);
    }
    Tableau::from_raw_unchecked(rows, k)
}

/// The progression `T, P(T), …, P^{k−1}(T)` together with each `ρ`.
struct Progression {
    tableaux: Vec<Tableau>,
    paths: Vec<LabeledPath>,
}

impl Progression {
    fn new(t: &Tableau) -> Result<Self> {
        let dims = standard_rectangle(t)?;
        let k = t.ceiling() as usize;
        let mut tableaux = Vec::with_capacity(k);
        let mut cur = t.clone();
        for _ in 0..k {
            let next = promote(&cur);
            tableaux.push(cur);
            cur = next;
        }
        let paths = tableaux.iter().map(|x| rho_unchecked(x, dims)).collect();
        Ok(Progression { tableaux, paths })
    }

    fn k(&self) -> usize {
        self.tableaux.len()
    }

    /// Trajectory of the marker in the lower-right box of `P^j(T)`.
    fn trajectory_from(&self, j: usize) -> LabeledPath {
        let k = self.k();
        let last = *self.paths[0].boxes.last().expect("non-empty path");
        let mut pos = last;
        let mut boxes = vec![pos];
        let mut labels = Vec::new();
        for s in 0..k - 1 {
            let path = &self.paths[(j + s) % k];
            if let Some(i) = path.boxes.iter().position(|&b| b == pos) {
                if i > 0 {
                    labels.push((k - s) as u32);
                    pos = path.boxes[i - 1];
                    boxes.push(pos);
                }
            }
        }
        labels.push(1);
        LabeledPath { boxes, labels }
    }
}

/// `τ(T)`: boxes visited by the marker starting in the lower-right box over
/// `k − 1` promotions, labelled by the marker's value as it leaves each box.
pub fn trajectory(t: &Tableau) -> Result<LabeledPath> {
    Ok(Progression::new(t)?.trajectory_from(0))
}

/// `τ(P^j(T))` for `0 ≤ j < k`, from a single pass over the progression.
pub fn all_trajectories(t: &Tableau) -> Result<Vec<LabeledPath>> {
    let prog = Progression::new(t)?;
    Ok((0..prog.k()).map(|j| prog.trajectory_from(j)).collect())
}

/// `out(T,B)` collects the labels leaving `B`. `inn(T,B)` collects the
/// decremented labels entering `B`, or `k` copies of `k` when `B` is the
/// lower-right box.
pub fn flow_multisets(t: &Tableau, cell: Cell) -> Result<FlowMultisets> {
    let prog = Progression::new(t)?;
    let k = prog.k() as u32;
    if t.get(cell).is_none() {
        return Err(Error::BoxOutside(cell));
    }
    let mut inn = Multiset::new();
    let mut out = Multiset::new();
    for path in &prog.paths {
        if let Some(i) = path.boxes.iter().position(|&b| b == cell) {
            out.insert(path.labels[i]);
            inn.insert(path.labels.get(i + 1).map_or(k, |&v| v - 1));
        }
    }
    Ok(FlowMultisets { cell, inn, out })
}

/// Pairs each value entering `B` with the value it has when it next leaves,
/// giving intervals `[a, b]` whose union is `dis(T,B)`. Sorted.
pub fn interval_decomposition(t: &Tableau, cell: Cell) -> Result<Vec<(u32, u32)>> {
    let prog = Progression::new(t)?;
    let k = prog.k();
    if t.get(cell).is_none() {
        return Err(Error::BoxOutside(cell));
    }
    let visits: Vec<Option<usize>> = prog
        .paths
        .iter()
        .map(|p| p.boxes.iter().position(|&b| b == cell))
        .collect();
    let mut intervals = Vec::new();
    for (j, visit) in visits.iter().enumerate() {
        let Some(i) = *visit else { continue };
        let b = prog.paths[j].labels.get(i + 1).map_or(k as u32, |&v| v - 1);
        let leave = (1..=k)
            .map(|s| (j + s) % k)
            .find(|&jj| visits[jj].is_some())
            .expect("the box is visited at step j");
        let a = entry(&prog.tableaux[leave], cell);
        intervals.push((a, b));
    }
    intervals.sort_unstable();
    Ok(intervals)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowViolation {
    pub tableau: Tableau,
    #[serde(rename = "box")]
    pub cell: Cell,
    pub original: FlowMultisets,
    pub evacuated: FlowMultisets,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlowReport {
    pub rows: usize,
    pub cols: usize,
    pub tableaux_checked: usize,
    pub violations: Vec<FlowViolation>,
}

impl FlowReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `inn` and `out` agree for `T` and `E(T)` over all of `SYT(m×n)`.
pub fn check_flow_invariance(rows: usize, cols: usize) -> FlowReport {
    let shape = Partition::rectangle(rows, cols);
    let all = enumerate_syt(&shape);
    let mut violations: Vec<FlowViolation> = all
        .par_iter()
        .flat_map_iter(|t| {
            let e = evacuate(t);
            shape
                .boxes()
                .filter_map(|b| {
                    let f = flow_multisets(t, b).expect("standard rectangle");
                    let fe = flow_multisets(&e, b).expect("standard rectangle");
                    (f.inn != fe.inn || f.out != fe.out).then(|| FlowViolation {
                        tableau: t.clone(),
                        cell: b,
                        original: f,
                        evacuated: fe,
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    violations.sort_by(|a, b| (&a.tableau, a.cell).cmp(&(&b.tableau, b.cell)));
    FlowReport {
        rows,
        cols,
        tableaux_checked: all.len(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::promote_power;
    use crate::growth::dis;

    fn t(rows: &[&[u32]], k: u32) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect(), k).unwrap()
    }

    fn cells(v: &[(usize, usize)]) -> Vec<Cell> {
        v.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    fn sample() -> Tableau {
        t(&[&[1, 2, 5], &[3, 4, 7], &[6, 8, 9]], 9)
    }

    #[test]
    fn promotion_path_of_3x3() {
        let rho = promotion_path(&sample()).unwrap();
        assert_eq!(rho.boxes, cells(&[(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)]));
        assert_eq!(rho.labels, vec![1, 2, 4, 7, 9]);
        let p = promote_along(&sample(), &rho);
        assert_eq!(p, t(&[&[1, 3, 4], &[2, 6, 8], &[5, 7, 9]], 9));
        assert_eq!(p, promote(&sample()));
    }

    #[test]
    fn single_row_path() {
        let row = t(&[&[1, 2, 3, 4]], 4);
        let rho = promotion_path(&row).unwrap();
        assert_eq!(rho.boxes, cells(&[(1, 1), (1, 2), (1, 3), (1, 4)]));
        assert_eq!(rho.labels, vec![1, 2, 3, 4]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(promotion_path(&t(&[&[1, 2], &[3]], 3)), Err(Error::NotRectangular));
        assert_eq!(promotion_path(&t(&[&[1, 1], &[2, 3]], 4)), Err(Error::NotStandard));
        assert_eq!(promotion_path(&t(&[&[1, 2], &[3, 4]], 5)), Err(Error::NotStandard));
    }

    #[test]
    fn trajectory_of_3x3() {
        let tau = trajectory(&sample()).unwrap();
        assert_eq!(tau.boxes, cells(&[(3, 3), (2, 3), (1, 3), (1, 2), (1, 1)]));
        assert_eq!(tau.labels, vec![9, 7, 4, 2, 1]);
        assert_eq!(tau.reversed(), promotion_path(&evacuate(&sample())).unwrap());
    }

    #[test]
    fn trivial_trajectory() {
        let one = t(&[&[1]], 1);
        let tau = trajectory(&one).unwrap();
        assert_eq!(tau.boxes, cells(&[(1, 1)]));
        assert_eq!(tau.labels, vec![1]);
    }

    #[test]
    fn flow_of_top_right_box() {
        let f = flow_multisets(&sample(), Cell::new(1, 3)).unwrap();
        assert_eq!(f.inn.values(), &[5, 6, 6]);
        assert_eq!(f.out.values(), &[3, 4, 4]);
        let iv = interval_decomposition(&sample(), Cell::new(1, 3)).unwrap();
        assert_eq!(iv, vec![(3, 6), (4, 5), (4, 6)]);
    }

    #[test]
    fn corner_flows() {
        let first = flow_multisets(&sample(), Cell::new(1, 1)).unwrap();
        assert_eq!(first.out.values(), &[1; 9]);
        let last = flow_multisets(&sample(), Cell::new(3, 3)).unwrap();
        assert_eq!(last.inn.values(), &[9; 9]);
        for (a, _) in interval_decomposition(&sample(), Cell::new(1, 1)).unwrap() {
            assert_eq!(a, 1);
        }
    }

    #[test]
    fn exhaustive_small_rectangles() {
        for (m, n) in [(1, 1), (1, 4), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (2, 5), (3, 4)] {
            let shape = Partition::rectangle(m, n);
            for x in enumerate_syt(&shape) {
                let k = x.ceiling() as i64;
                let rho = promotion_path(&x).unwrap();
                assert_eq!(promote_along(&x, &rho), promote(&x));
                let trajs = all_trajectories(&x).unwrap();
                let e = evacuate(&x);
                for i in 0..k {
                    let expected = promotion_path(&promote_power(&e, i)).unwrap();
                    assert_eq!(trajs[((k - i) % k) as usize].reversed(), expected);
                    assert_eq!(trajectory(&promote_power(&x, -i)).unwrap().reversed(), expected);
                }
                for b in shape.boxes() {
                    let f = flow_multisets(&x, b).unwrap();
                    assert_eq!(f.inn.len(), f.out.len());
                    let star = flow_multisets(&x, b.rotated(m, n)).unwrap();
                    assert_eq!(f.inn, star.out.complement(k as u32));
                    let iv = interval_decomposition(&x, b).unwrap();
                    let union: Multiset = iv.iter().flat_map(|&(a, b)| a..=b).collect();
                    assert_eq!(union, dis(&x, b).unwrap());
                    let lows: Multiset = iv.iter().map(|&(a, _)| a).collect();
                    let highs: Multiset = iv.iter().map(|&(_, b)| b).collect();
                    assert_eq!(lows, f.out);
                    assert_eq!(highs, f.inn);
                }
            }
        }
    }

    #[test]
    fn flow_invariance_reports() {
        let r = check_flow_invariance(2, 3);
        assert_eq!(r.tableaux_checked, 5);
        assert!(r.passed());
        let r = check_flow_invariance(3, 3);
        assert_eq!(r.tableaux_checked, 42);
        assert!(r.passed());
        assert!(check_flow_invariance(1, 5).passed());
    }
}
