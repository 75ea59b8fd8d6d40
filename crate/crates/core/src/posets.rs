//! Finite posets, linear extensions, and the cominuscule families.
//!
//! Elements are indexed `0..d` in the API and `1..=d` in the text format.
//! Down-sets are stored as bitmasks, which caps posets at 64 elements.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homomesy::{verify_homomesy, CellStatistic, HomomesyReport, LinearExtensionSystem};
use crate::shape::{Cell, Partition};
use crate::tableau::Tableau;

pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Debug)]
pub struct FinitePoset {
    size: usize,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<u64>,
    upper_covers: Vec<u64>,
    below: Vec<u64>,
    embedding: Option<Vec<Cell>>,
    family: Option<CominusculeFamily>,
}

/// Posets are equal when they have the same elements and covers; the
/// embedding is presentation only.
impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.covers == other.covers
    }
}

impl Eq for FinitePoset {}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

impl FinitePoset {
    /// A poset from its cover relations `x ⋖ y` (0-based). Rejects cycles and
    /// covers implied by other covers.
    pub fn new(size: usize, covers: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if size > MAX_ELEMENTS {
            return Err(Error::PosetTooLarge(size));
        }
        let mut covers: Vec<(usize, usize)> = covers.into_iter().collect();
        covers.sort_unstable();
        let mut lower_covers = vec![0u64; size];
        let mut upper_covers = vec![0u64; size];
        for w in covers.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RedundantCover(w[0].0, w[0].1));
            }
        }
        for &(x, y) in &covers {
            for v in [x, y] {
                if v >= size {
                    return Err(Error::ElementOutOfRange(v));
                }
            }
            if x == y {
                return Err(Error::CyclicCovers);
            }
            lower_covers[y] |= 1 << x;
            upper_covers[x] |= 1 << y;
        }

        let mut indegree: Vec<u32> = lower_covers.iter().map(|m| m.count_ones()).collect();
        let mut ready: Vec<usize> = (0..size).filter(|&v| indegree[v] == 0).collect();
        let mut below = vec![0u64; size];
        let mut seen = 0;
        while let Some(x) = ready.pop() {
            seen += 1;
            for y in bits(upper_covers[x]) {
                below[y] |= below[x] | 1 << x;
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready.push(y);
                }
            }
        }
        if seen != size {
            return Err(Error::CyclicCovers);
        }
        for &(x, y) in &covers {
            if bits(lower_covers[y]).any(|z| z != x && below[z] >> x & 1 == 1) {
                return Err(Error::RedundantCover(x, y));
            }
        }
        Ok(FinitePoset {
            size,
            covers,
            lower_covers,
            upper_covers,
            below,
            embedding: None,
            family: None,
        })
    }

    /// The poset of a box diagram: each box is covered by the boxes
    /// immediately below it and immediately to its right. Elements are the
    /// cells in row-major order.
    pub fn from_cells(cells: &[Cell]) -> Result<Self> {
        let mut cells = cells.to_vec();
        cells.sort_unstable();
        cells.dedup();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut covers = Vec::new();
        for (i, c) in cells.iter().enumerate() {
            for next in [Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)] {
                if let Some(&j) = index.get(&next) {
                    covers.push((i, j));
                }
            }
        }
        let mut p = Self::new(cells.len(), covers)?;
        p.embedding = Some(cells);
        Ok(p)
    }

    pub fn ferrers(shape: &Partition) -> Self {
        let cells: Vec<Cell> = shape.boxes().collect();
        Self::from_cells(&cells).expect("Ferrers diagrams are small posets")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn embedding(&self) -> Option<&[Cell]> {
        self.embedding.as_deref()
    }

    pub fn family(&self) -> Option<CominusculeFamily> {
        self.family
    }

    /// Element sitting in `cell` of the embedding.
    pub fn element_at(&self, cell: Cell) -> Option<usize> {
        self.embedding.as_ref()?.binary_search(&cell).ok()
    }

    /// Strict down-set of `x`, as a bitmask.
    pub fn below_mask(&self, x: usize) -> u64 {
        self.below[x]
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.below[y] >> x & 1 == 1
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.less(x, y) || self.less(y, x)
    }

    /// Elements covering or covered by `x`.
    pub fn neighbours_mask(&self, x: usize) -> u64 {
        self.lower_covers[x] | self.upper_covers[x]
    }

    pub fn is_order_ideal(&self, mask: u64) -> bool {
        bits(mask).all(|x| self.below[x] & !mask == 0)
    }

    /// Length of a longest chain (number of elements) inside `mask`.
    pub fn height_within(&self, mask: u64) -> usize {
        let mut longest = vec![0usize; self.size];
        let mut best = 0;
        for x in self.topological_order() {
            if mask >> x & 1 == 0 {
                continue;
            }
            let h = 1 + bits(self.lower_covers[x] & mask).map(|z| longest[z]).max().unwrap_or(0);
            longest[x] = h;
            best = best.max(h);
        }
        best
    }

    fn topological_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&x| self.below[x].count_ones());
        order
    }

    pub fn all_mask(&self) -> u64 {
        if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        }
    }
}

impl fmt::Display for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "elements={}", self.size)?;
        for &(x, y) in &self.covers {
            writeln!(f, "{}<{}", x + 1, y + 1)?;
        }
        Ok(())
    }
}

impl FromStr for FinitePoset {
    type Err = Error;

    /// `elements=d` followed by one `x<y` cover per line (1-based).
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (n, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing `elements=` header".into()))?;
        let size: usize = header
            .strip_prefix("elements=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| parse_err(n, format!("expected `elements=<d>`, found `{header}`")))?;
        let mut covers = Vec::new();
        for (n, line) in lines {
            let (x, y) = line
                .split_once('<')
                .ok_or_else(|| parse_err(n, format!("expected `x<y`, found `{line}`")))?;
            let element = |v: &str| -> Result<usize> {
                let v: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(n, format!("bad element `{}`", v.trim())))?;
                if v == 0 || v > size {
                    return Err(parse_err(n, format!("element {v} outside 1..={size}")));
                }
                Ok(v - 1)
            };
            covers.push((element(x)?, element(y)?));
        }
        FinitePoset::new(size, covers)
    }
}

/// The cominuscule posets, drawn as box diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CominusculeFamily {
    Rectangle {
        rows: usize,
        cols: usize,
    },
    ShiftedStaircase {
        n: usize,
    },
    /// Two rows of length `n − 1` overlapping in two columns; `2n − 2`
    /// elements.
    Propeller {
        n: usize,
    },
    Cayley,
    Freudenthal,
}

const CAYLEY_ROWS: [(usize, usize); 4] = [(0, 5), (2, 3), (3, 3), (3, 5)];
const FREUDENTHAL_ROWS: [(usize, usize); 9] = [(0, 6), (3, 3), (4, 3), (4, 5), (4, 5), (7, 2), (8, 1), (8, 1), (8, 1)];

fn cells_from_rows(rows: &[(usize, usize)]) -> Vec<Cell> {
    rows.iter()
        .enumerate()
        .flat_map(|(r, &(offset, len))| (offset + 1..=offset + len).map(move |c| Cell::new(r + 1, c)))
        .collect()
}

impl CominusculeFamily {
    pub fn validate(self) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidFamily(msg.to_string()));
        match self {
            CominusculeFamily::Rectangle { rows, cols } if rows == 0 || cols == 0 => {
                bad("rectangle sides must be positive")
            }
            CominusculeFamily::ShiftedStaircase { n: 0 } => bad("staircase width must be positive"),
            CominusculeFamily::Propeller { n } if n < 3 => bad("propeller needs n >= 3"),
            _ => Ok(self),
        }
    }

    pub fn cells(self) -> Result<Vec<Cell>> {
        Ok(match self.validate()? {
            CominusculeFamily::Rectangle { rows, cols } => Partition::rectangle(rows, cols).boxes().collect(),
            CominusculeFamily::ShiftedStaircase { n } => {
                let rows: Vec<(usize, usize)> = (0..n).map(|r| (r, n - r)).collect();
                cells_from_rows(&rows)
            }
            CominusculeFamily::Propeller { n } => cells_from_rows(&[(0, n - 1), (n - 3, n - 1)]),
            CominusculeFamily::Cayley => cells_from_rows(&CAYLEY_ROWS),
            CominusculeFamily::Freudenthal => cells_from_rows(&FREUDENTHAL_ROWS),
        })
    }

    /// Image of a cell under `rotate`.
    ///
    /// For even-`n` propellers the two incomparable middle cells stay put;
    /// plain 180° rotation would swap them and disagree with evacuation.
    pub fn reflect(self, c: Cell) -> Cell {
        let (r, col) = (c.row, c.col);
        match self {
            CominusculeFamily::Propeller { n }
                if n % 2 == 0 && (c == Cell::new(1, n - 1) || c == Cell::new(2, n - 2)) =>
            {
                c
            }
            CominusculeFamily::Rectangle { rows, cols } => c.rotated(rows, cols),
            CominusculeFamily::ShiftedStaircase { n } => Cell::new(n + 1 - col, n + 1 - r),
            CominusculeFamily::Propeller { n } => Cell::new(3 - r, 2 * n - 3 - col),
            CominusculeFamily::Cayley => Cell::new(5 - r, 9 - col),
            CominusculeFamily::Freudenthal => Cell::new(10 - col, 10 - r),
        }
    }

    pub fn build(self) -> Result<FinitePoset> {
        let mut p = FinitePoset::from_cells(&self.cells()?)?;
        p.family = Some(self);
        Ok(p)
    }
}

impl fmt::Display for CominusculeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CominusculeFamily::Rectangle { rows, cols } => write!(f, "rectangle:{rows}x{cols}"),
            CominusculeFamily::ShiftedStaircase { n } => write!(f, "staircase:{n}"),
            CominusculeFamily::Propeller { n } => write!(f, "propeller:{n}"),
            CominusculeFamily::Cayley => write!(f, "cayley"),
            CominusculeFamily::Freudenthal => write!(f, "freudenthal"),
        }
    }
}

impl FromStr for CominusculeFamily {
    type Err = Error;

    /// `rectangle:MxN`, `staircase:N`, `propeller:N`, `cayley`, `freudenthal`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(s.to_string());
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let num = |a: Option<&str>| -> Result<usize> { a.and_then(|a| a.trim().parse().ok()).ok_or_else(bad) };
        let family = match name.trim() {
            "rectangle" => {
                let (m, n) = arg.and_then(|a| a.split_once('x')).ok_or_else(bad)?;
                CominusculeFamily::Rectangle {
                    rows: num(Some(m))?,
                    cols: num(Some(n))?,
                }
            }
            "staircase" | "shifted_staircase" => CominusculeFamily::ShiftedStaircase { n: num(arg)? },
            "propeller" => CominusculeFamily::Propeller { n: num(arg)? },
            "cayley" if arg.is_none() => CominusculeFamily::Cayley,
            "freudenthal" if arg.is_none() => CominusculeFamily::Freudenthal,
            _ => return Err(bad()),
        };
        family.validate()
    }
}

pub fn build_cominuscule(family: CominusculeFamily) -> Result<FinitePoset> {
    family.build()
}

/// The `rotate` involution as a permutation of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotateMap {
    mapping: Vec<usize>,
}

impl RotateMap {
    pub fn apply(&self, x: usize) -> usize {
        self.mapping[x]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn is_involution(&self) -> bool {
        self.mapping.iter().enumerate().all(|(x, &y)| self.mapping[y] == x)
    }

    /// `x < y` implies `rotate(y) < rotate(x)`.
    pub fn is_order_reversing(&self, p: &FinitePoset) -> bool {
        p.covers().iter().all(|&(x, y)| p.less(self.apply(y), self.apply(x)))
    }

    pub fn fixes(&self, elements: &[usize]) -> bool {
        let mut a = elements.to_vec();
        let mut b: Vec<usize> = elements.iter().map(|&x| self.apply(x)).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

pub fn rotate(p: &FinitePoset) -> Result<RotateMap> {
    let family = p.family.ok_or(Error::NoEmbedding)?;
    let cells = p.embedding().ok_or(Error::NoEmbedding)?;
    let mapping = cells
        .iter()
        .map(|&c| p.element_at(family.reflect(c)).ok_or(Error::NoEmbedding))
        .collect::<Result<_>>()?;
    Ok(RotateMap { mapping })
}

/// An order-preserving bijection onto `1..=d`; `labels[x]` is the label of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LinearExtension {
    labels: Vec<u32>,
}

impl LinearExtension {
    pub fn new(p: &FinitePoset, labels: Vec<u32>) -> Result<Self> {
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        let bijective = labels.len() == p.size() && sorted.iter().enumerate().all(|(i, &v)| v as usize == i + 1);
        let preserving = p.covers().iter().all(|&(x, y)| labels[x] < labels[y]);
        if !bijective || !preserving {
            return Err(Error::NotLinearExtension);
        }
        Ok(LinearExtension { labels })
    }

    /// Reads labels off a tableau through the embedding.
    pub fn from_tableau(p: &FinitePoset, t: &Tableau) -> Result<Self> {
        Self::new(p, labels_from_tableau(p, t)?)
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> u32 {
        self.labels[x]
    }

    pub fn to_tableau(&self, p: &FinitePoset) -> Result<Tableau> {
        labels_to_tableau(p, &self.labels, self.labels.len() as u32)
    }
}

pub(crate) fn labels_from_tableau(p: &FinitePoset, t: &Tableau) -> Result<Vec<u32>> {
    let cells = p.embedding().ok_or(Error::NoEmbedding)?;
    if t.size() != cells.len() {
        return Err(Error::NotLinearExtension);
    }
    cells.iter().map(|&c| t.get(c).ok_or(Error::BoxOutside(c))).collect()
}

/// Places labels in the embedded cells; the cells must form a straight shape.
pub(crate) fn labels_to_tableau(p: &FinitePoset, labels: &[u32], ceiling: u32) -> Result<Tableau> {
    let cells = p.embedding().ok_or(Error::NoEmbedding)?;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (&c, &v) in cells.iter().zip(labels) {
        if rows.len() < c.row {
            rows.resize(c.row, Vec::new());
        }
        let row = &mut rows[c.row - 1];
        if row.len() != c.col - 1 {
            return Err(Error::NotStraight);
        }
        row.push(v);
    }
    Tableau::from_rows(rows, ceiling)
}

/// Labels drawn on the embedding, or `element:label` pairs without one.
pub fn render_labels(p: &FinitePoset, labels: &[u32]) -> String {
    let Some(cells) = p.embedding() else {
        return labels
            .iter()
            .enumerate()
            .map(|(x, v)| format!("{}:{}", x + 1, v))
            .collect::<Vec<_>>()
            .join(" ")
            + "\n";
    };
    let width = labels.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
    let rows = cells.iter().map(|c| c.row).max().unwrap_or(0);
    let cols = cells.iter().map(|c| c.col).max().unwrap_or(0);
    let mut grid = vec![vec![String::new(); cols]; rows];
    for (&c, v) in cells.iter().zip(labels) {
        grid[c.row - 1][c.col - 1] = v.to_string();
    }
    let mut out = String::new();
    for row in grid {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// Depth-first enumeration over the lattice of order ideals. Extensions come
/// in lexicographic order of the sequence of elements labelled `1, 2, …`.
pub struct LinearExtensions<'a> {
    poset: &'a FinitePoset,
    order: Vec<usize>,
    mask: u64,
    started: bool,
}

impl<'a> LinearExtensions<'a> {
    fn available_from(&self, start: usize) -> Option<usize> {
        (start..self.poset.size()).find(|&x| self.mask >> x & 1 == 0 && self.poset.below[x] & !self.mask == 0)
    }

    fn push(&mut self, x: usize) {
        self.order.push(x);
        self.mask |= 1 << x;
    }

    fn extend_greedily(&mut self) {
        while self.order.len() < self.poset.size() {
            let x = self.available_from(0).expect("finite posets have minimal elements");
            self.push(x);
        }
    }

    fn current(&self) -> LinearExtension {
        let mut labels = vec![0; self.poset.size()];
        for (i, &x) in self.order.iter().enumerate() {
            labels[x] = i as u32 + 1;
        }
        LinearExtension { labels }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if !self.started {
            self.started = true;
            self.extend_greedily();
            return Some(self.current());
        }
        while let Some(x) = self.order.pop() {
            self.mask &= !(1 << x);
            if let Some(y) = self.available_from(x + 1) {
                self.push(y);
                self.extend_greedily();
                return Some(self.current());
            }
        }
        None
    }
}

pub fn linear_extensions(p: &FinitePoset) -> LinearExtensions<'_> {
    LinearExtensions {
        poset: p,
        order: Vec::with_capacity(p.size()),
        mask: 0,
        started: false,
    }
}

/// `|SYT(P)|` by dynamic programming over order ideals.
pub fn count_linear_extensions(p: &FinitePoset) -> u128 {
    fn go(p: &FinitePoset, mask: u64, memo: &mut HashMap<u64, u128>) -> u128 {
        if mask == p.all_mask() {
            return 1;
        }
        if let Some(&n) = memo.get(&mask) {
            return n;
        }
        let n = (0..p.size())
            .filter(|&x| mask >> x & 1 == 0 && p.below[x] & !mask == 0)
            .map(|x| go(p, mask | 1 << x, memo))
            .sum();
        memo.insert(mask, n);
        n
    }
    go(p, 0, &mut HashMap::new())
}

fn positions(labels: &[u32]) -> Vec<usize> {
    let mut pos = vec![0; labels.len() + 1];
    for (x, &v) in labels.iter().enumerate() {
        pos[v as usize] = x;
    }
    pos
}

fn toggle_in_place(p: &FinitePoset, labels: &mut [u32], pos: &mut [usize], i: usize) {
    let (a, b) = (pos[i], pos[i + 1]);
    if !p.less(a, b) {
        labels.swap(a, b);
        pos.swap(i, i + 1);
    }
}

/// `τ_i`: swaps labels `i` and `i + 1` unless their elements are comparable.
pub fn poset_toggle(p: &FinitePoset, t: &LinearExtension, i: u32) -> LinearExtension {
    let mut labels = t.labels.clone();
    if i >= 1 && (i as usize) < labels.len() {
        let mut pos = positions(&labels);
        toggle_in_place(p, &mut labels, &mut pos, i as usize);
    }
    LinearExtension { labels }
}

fn apply_toggles(p: &FinitePoset, t: &LinearExtension, seq: impl IntoIterator<Item = usize>) -> LinearExtension {
    let mut labels = t.labels.clone();
    let mut pos = positions(&labels);
    for i in seq {
        toggle_in_place(p, &mut labels, &mut pos, i);
    }
    LinearExtension { labels }
}

/// `P = τ_{d−1} ∘ ⋯ ∘ τ_1`.
pub fn poset_promote(p: &FinitePoset, t: &LinearExtension) -> LinearExtension {
    apply_toggles(p, t, 1..p.size())
}

pub fn poset_promote_inverse(p: &FinitePoset, t: &LinearExtension) -> LinearExtension {
    apply_toggles(p, t, (1..p.size()).rev())
}

/// `E = τ_1 (τ_2 τ_1) ⋯ (τ_{d−1} ⋯ τ_1)`.
pub fn poset_evacuate(p: &FinitePoset, t: &LinearExtension) -> LinearExtension {
    let d = p.size();
    apply_toggles(p, t, (1..d).rev().flat_map(|j| 1..=j))
}

/// `x ↦ d + 1 − T(rotate(x))`.
pub fn rotate_reverse(r: &RotateMap, t: &LinearExtension) -> LinearExtension {
    let d = t.labels.len() as u32;
    let labels = (0..t.labels.len()).map(|x| d + 1 - t.labels[r.apply(x)]).collect();
    LinearExtension { labels }
}

/// Promotion-orbit averages of `σ_S` over `SYT(P)` for a rotate-fixed `S`
/// given as cells of the family's diagram.
pub fn check_cominuscule_homomesy(
    family: CominusculeFamily,
    support: &[Cell],
    budget: usize,
) -> Result<HomomesyReport> {
    let p = family.build()?;
    let r = rotate(&p)?;
    let elements: Vec<usize> = support
        .iter()
        .map(|&c| p.element_at(c).ok_or(Error::BoxOutside(c)))
        .collect::<Result<_>>()?;
    if !r.fixes(&elements) {
        return Err(Error::NotRotateFixed);
    }
    let stat = CellStatistic::cells(support.to_vec());
    let system = LinearExtensionSystem::new(p, family.to_string());
    verify_homomesy(&system, &stat, budget)
}
