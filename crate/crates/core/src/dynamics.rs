//! Jeu de taquin, promotion, Bender–Knuth toggles and evacuation on
//! semistandard tableaux.
//!
//! Promotion and evacuation are implemented twice: once through sliding
//! (delete the 1's, rectify, decrement, refill) and once as products of
//! Bender–Knuth toggles. The two routes are kept independent so that tests
//! can compare them.

use crate::error::{Error, Result};
use crate::orbit::Orbit;
use crate::shape::Cell;
use crate::tableau::Tableau;

/// Outcome of a single jeu de taquin slide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideRecord {
    pub start: Cell,
    /// Boxes visited by the hole, `start` first; the last one is vacated.
    pub path: Vec<Cell>,
    pub result: Tableau,
}

/// Inner corners of a skew tableau, top row first.
pub fn inner_corners(t: &Tableau) -> Vec<Cell> {
    let rows = t.rows();
    let mut corners = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let lead = row.iter().take_while(|&&v| v == 0).count();
        if lead == 0 {
            continue;
        }
        let c = lead - 1;
        let below_inner = rows.get(r + 1).is_some_and(|next| next.get(c) == Some(&0));
        if !below_inner {
            corners.push(Cell::new(r + 1, c + 1));
        }
    }
    corners
}

/// Moves the hole at `(r, c)` (0-based) southeast until it reaches the outer
/// boundary, then deletes it. Returns the visited cells (1-based).
fn slide_raw(rows: &mut Vec<Vec<u32>>, mut r: usize, mut c: usize) -> Vec<Cell> {
    let mut path = vec![Cell::new(r + 1, c + 1)];
    loop {
        let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
        let right = rows[r].get(c + 1).copied();
        let down = match (below, right) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(b), Some(rt)) => b <= rt,
        };
        let (nr, nc) = if down { (r + 1, c) } else { (r, c + 1) };
        rows[r][c] = rows[nr][nc];
        r = nr;
        c = nc;
        path.push(Cell::new(r + 1, c + 1));
    }
    debug_assert_eq!(c + 1, rows[r].len());
    rows[r].pop();
    while rows.last().is_some_and(|row| row.is_empty()) {
        rows.pop();
    }
    path
}

/// One jeu de taquin slide into the inner corner `corner`.
pub fn jdt_slide(t: &Tableau, corner: Cell) -> Result<SlideRecord> {
    if !inner_corners(t).contains(&corner) {
        return Err(Error::NotInnerCorner(corner));
    }
    let mut rows = t.rows().to_vec();
    let path = slide_raw(&mut rows, corner.row - 1, corner.col - 1);
    Ok(SlideRecord {
        start: corner,
        path,
        result: Tableau::from_raw_unchecked(rows, t.ceiling()),
    })
}

/// Rectification, sliding into the lowest inner corner each time.
pub fn rectify(t: &Tableau) -> Tableau {
    rectify_with(t, |corners| corners.len() - 1)
}

/// Rectification where `choose` picks which of the current inner corners
/// (by index) to slide into next.
pub fn rectify_with(t: &Tableau, mut choose: impl FnMut(&[Cell]) -> usize) -> Tableau {
    let mut cur = t.clone();
    loop {
        let corners = inner_corners(&cur);
        if corners.is_empty() {
            return cur;
        }
        let pick = corners[choose(&corners)];
        cur = jdt_slide(&cur, pick).expect("corner taken from inner_corners").result;
    }
}

fn assert_straight(t: &Tableau) {
    assert!(t.is_straight(), "operation requires a straight-shape tableau");
}

/// Promotion: delete the 1's, rectify, decrement, refill vacated boxes with `k`.
pub fn promote(t: &Tableau) -> Tableau {
    assert_straight(t);
    let k = t.ceiling();
    let shape: Vec<usize> = t.rows().iter().map(Vec::len).collect();
    let mut rows = t.rows().to_vec();
    let ones = rows.first().map_or(0, |r| r.iter().take_while(|&&v| v == 1).count());
    if ones > 0 {
        for v in &mut rows[0][..ones] {
            *v = 0;
        }
        // inner shape is the single row (ones); its only corner moves left
        for c in (0..ones).rev() {
            slide_raw(&mut rows, 0, c);
        }
    }
    for v in rows.iter_mut().flatten() {
        *v -= 1;
    }
    rows.resize(shape.len(), Vec::new());
    for (row, &len) in rows.iter_mut().zip(&shape) {
        row.resize(len, k);
    }
    Tableau::from_raw_unchecked(rows, k)
}

/// Inverse promotion: remove the `k`'s, reverse-slide their holes to the
/// top-left (leftmost hole first), increment, fill the holes with 1.
pub fn promote_inverse(t: &Tableau) -> Tableau {
    assert_straight(t);
    let k = t.ceiling();
    let mut rows = t.rows().to_vec();
    let mut holes: Vec<(usize, usize)> = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v == k {
                holes.push((r, c));
            }
        }
    }
    holes.sort_by_key(|&(r, c)| (c, r));
    for &(r, c) in &holes {
        rows[r][c] = 0;
    }
    for &(mut r, mut c) in &holes {
        loop {
            let above = (r > 0).then(|| rows[r - 1][c]).filter(|&v| v != 0);
            let left = (c > 0).then(|| rows[r][c - 1]).filter(|&v| v != 0);
            let up = match (above, left) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(a), Some(l)) => a >= l,
            };
            let (nr, nc) = if up { (r - 1, c) } else { (r, c - 1) };
            rows[r][c] = rows[nr][nc];
            rows[nr][nc] = 0;
            r = nr;
            c = nc;
        }
        debug_assert_eq!(r, 0);
    }
    for v in rows.iter_mut().flatten() {
        *v += 1;
    }
    Tableau::from_raw_unchecked(rows, k)
}

/// `P^n`, with negative `n` meaning powers of the inverse.
pub fn promote_power(t: &Tableau, n: i64) -> Tableau {
    let mut cur = t.clone();
    for _ in 0..n.unsigned_abs() {
        cur = if n > 0 { promote(&cur) } else { promote_inverse(&cur) };
    }
    cur
}

/// Bender–Knuth involution `τ_i`: in every row, the free `i`'s and `(i+1)`'s
/// (those without an `i+1` below, resp. `i` above) swap multiplicities.
pub fn toggle(t: &Tableau, i: u32) -> Tableau {
    let src = t.rows();
    let mut rows = src.to_vec();
    for (r, row) in src.iter().enumerate() {
        let mut free_lo = 0usize;
        let mut free_hi = 0usize;
        let mut start = usize::MAX;
        for (c, &v) in row.iter().enumerate() {
            let free = if v == i {
                src.get(r + 1).and_then(|n| n.get(c)) != Some(&(i + 1))
            } else if v == i + 1 {
                r == 0 || src[r - 1][c] != i
            } else {
                false
            };
            if free {
                start = start.min(c);
                if v == i {
                    free_lo += 1;
                } else {
                    free_hi += 1;
                }
            }
        }
        if free_lo + free_hi == 0 {
            continue;
        }
        let block = &mut rows[r][start..start + free_lo + free_hi];
        for (j, v) in block.iter_mut().enumerate() {
            *v = if j < free_hi { i } else { i + 1 };
        }
    }
    Tableau::from_raw_unchecked(rows, t.ceiling())
}

/// `τ_{k−1} ∘ ⋯ ∘ τ_1`.
pub fn promote_via_toggles(t: &Tableau) -> Tableau {
    (1..t.ceiling()).fold(t.clone(), |cur, i| toggle(&cur, i))
}

/// `P⁻¹ = τ_1 ∘ ⋯ ∘ τ_{k−1}`.
pub fn promote_inverse_via_toggles(t: &Tableau) -> Tableau {
    (1..t.ceiling()).rev().fold(t.clone(), |cur, i| toggle(&cur, i))
}

/// The three-step operator `t_k` on tableaux with ceiling `k + 1`: delete
/// the `k`'s, lift `(k+1)`'s into empty boxes directly above and pack the
/// rest left, then relabel `k+1 → k` and fill the holes with `k + 1`.
pub fn t_k_operator(t: &Tableau, k: u32) -> Tableau {
    assert_straight(t);
    let top = k + 1;
    let mut rows = t.rows().to_vec();
    for v in rows.iter_mut().flatten() {
        if *v == k {
            *v = 0;
        }
    }
    let mut lifts = Vec::new();
    for r in 1..rows.len() {
        for (c, &v) in rows[r].iter().enumerate() {
            if v == top && rows[r - 1].get(c) == Some(&0) {
                lifts.push((r, c));
            }
        }
    }
    for (r, c) in lifts {
        rows[r - 1][c] = top;
        rows[r][c] = 0;
    }
    for row in &mut rows {
        let Some(start) = row.iter().position(|&v| v == 0 || v == top) else {
            continue;
        };
        let tops = row[start..].iter().filter(|&&v| v == top).count();
        for (j, v) in row[start..].iter_mut().enumerate() {
            *v = if j < tops { k } else { top };
        }
    }
    Tableau::from_raw_unchecked(rows, t.ceiling())
}

/// `P_i`: freeze every entry `> i` and promote the rest with ceiling `i`.
pub fn partial_promote(t: &Tableau, i: u32) -> Tableau {
    assert_straight(t);
    if i >= t.ceiling() {
        return promote(t);
    }
    if i == 0 {
        return t.clone();
    }
    let low: Vec<Vec<u32>> = t
        .rows()
        .iter()
        .map(|row| row.iter().copied().take_while(|&v| v <= i).collect())
        .collect();
    let promoted = promote(&Tableau::from_raw_unchecked(low, i));
    let mut rows = t.rows().to_vec();
    for (row, low) in rows.iter_mut().zip(promoted.rows()) {
        row[..low.len()].copy_from_slice(low);
    }
    Tableau::from_raw_unchecked(rows, t.ceiling())
}

/// Evacuation `E = P_1 ∘ P_2 ∘ ⋯ ∘ P_k`, built by successive frozen promotions.
pub fn evacuate(t: &Tableau) -> Tableau {
    let k = t.ceiling();
    (1..=k).rev().fold(t.clone(), |cur, i| partial_promote(&cur, i))
}

/// Evacuation as the toggle product `τ_1·(τ_2τ_1)·…·(τ_{k−1}⋯τ_1)`.
pub fn evacuate_via_toggles(t: &Tableau) -> Tableau {
    let k = t.ceiling();
    let mut cur = t.clone();
    for j in (1..k).rev() {
        for i in 1..=j {
            cur = toggle(&cur, i);
        }
    }
    cur
}

/// Dual evacuation `E′(T) = E(T⁺)⁺` on rectangles.
pub fn dual_evacuate(t: &Tableau) -> Result<Tableau> {
    let plus = t.rotate_complement()?;
    evacuate(&plus).rotate_complement()
}

/// Dual evacuation as `τ_{k−1}·(τ_{k−2}τ_{k−1})·…·(τ_1⋯τ_{k−1})`.
pub fn dual_evacuate_via_toggles(t: &Tableau) -> Result<Tableau> {
    t.rectangle_dims().ok_or(Error::NotRectangular)?;
    let k = t.ceiling();
    let mut cur = t.clone();
    for j in 1..k {
        for i in (j..k).rev() {
            cur = toggle(&cur, i);
        }
    }
    Ok(cur)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Promote,
    PromoteInverse,
}

/// The orbit of `t` under promotion or its inverse.
pub fn orbit(t: &Tableau, direction: Direction) -> Orbit<Tableau> {
    assert_straight(t);
    match direction {
        Direction::Promote => Orbit::trace(t, promote),
        Direction::PromoteInverse => Orbit::trace(t, promote_inverse),
    }
}
