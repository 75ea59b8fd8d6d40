//! Cell-sum statistics and exact homomesy verification.
//!
//! A [`DynamicalSystem`] supplies a finite state set and a bijection on it.
//! [`verify_homomesy`] partitions the states into orbits in parallel and
//! compares the exact orbit averages of a statistic.

use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::dynamics::promote;
use crate::enumerate::enumerate_ssyt;
use crate::error::{Error, Result};
use crate::ktableaux::{enumerate_increasing, k_promote, IncreasingTableau};
use crate::posets::{linear_extensions, poset_promote, render_labels, rotate, FinitePoset, LinearExtension};
use crate::shape::{Cell, Partition};
use crate::tableau::Tableau;

pub type Rational = Ratio<i64>;

/// Reduced `p/q`, always with a denominator.
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fraction_string(r))
}

fn serialize_fractions<S: Serializer>(rs: &[Rational; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
    [fraction_string(&rs[0]), fraction_string(&rs[1])].serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Support {
    /// Boxes of a diagram.
    Cells(Vec<Cell>),
    /// Poset elements, 0-based. For a Ferrers shape, elements are its boxes
    /// in row-major order.
    Elements(Vec<usize>),
}

/// `σ_S`: the sum of the labels in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellStatistic {
    pub name: String,
    pub support: Support,
}

impl CellStatistic {
    pub fn cells(mut cells: Vec<Cell>) -> Self {
        cells.sort_unstable();
        cells.dedup();
        let name = format!(
            "sigma{{{}}}",
            cells.iter().map(Cell::to_string).collect::<Vec<_>>().join(",")
        );
        CellStatistic {
            name,
            support: Support::Cells(cells),
        }
    }

    pub fn elements(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let name = format!(
            "sigma{{{}}}",
            elements
                .iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        CellStatistic {
            name,
            support: Support::Elements(elements),
        }
    }

    pub fn len(&self) -> usize {
        match &self.support {
            Support::Cells(c) => c.len(),
            Support::Elements(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for CellStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// `σ_S(T)` on a tableau.
pub fn sigma(t: &Tableau, s: &CellStatistic) -> Result<i64> {
    match &s.support {
        Support::Cells(cells) => cells
            .iter()
            .map(|&c| t.get(c).map(i64::from).ok_or(Error::BoxOutside(c)))
            .sum(),
        Support::Elements(elements) => {
            let entries: Vec<u32> = t.entries().map(|(_, v)| v).collect();
            elements
                .iter()
                .map(|&x| entries.get(x).map(|&v| i64::from(v)).ok_or(Error::ElementOutOfRange(x)))
                .sum()
        }
    }
}

/// `σ_S` on a labelling of a poset's elements.
pub fn sigma_labels(p: &FinitePoset, labels: &[u32], s: &CellStatistic) -> Result<i64> {
    match &s.support {
        Support::Cells(cells) => cells
            .iter()
            .map(|&c| {
                p.element_at(c)
                    .map(|x| i64::from(labels[x]))
                    .ok_or(Error::BoxOutside(c))
            })
            .sum(),
        Support::Elements(elements) => elements
            .iter()
            .map(|&x| labels.get(x).map(|&v| i64::from(v)).ok_or(Error::ElementOutOfRange(x)))
            .sum(),
    }
}

pub fn mean(values: &[i64]) -> Rational {
    assert!(!values.is_empty(), "mean of an empty orbit");
    Rational::new(values.iter().sum(), values.len() as i64)
}

/// A finite set with a bijection on it.
pub trait DynamicalSystem: Sync {
    type State: Clone + Ord + Send + Sync;

    fn description(&self) -> String;

    /// Every state, or [`Error::BudgetExceeded`] if there are more than
    /// `budget`.
    fn states(&self, budget: usize) -> Result<Vec<Self::State>>;

    fn step(&self, s: &Self::State) -> Self::State;

    fn statistic(&self, s: &Self::State, stat: &CellStatistic) -> Result<i64>;

    /// One-line rendering used for orbit representatives.
    fn render(&self, s: &Self::State) -> String;
}

fn within_budget<T>(iter: impl Iterator<Item = T>, budget: usize) -> Result<Vec<T>> {
    let all: Vec<T> = iter.take(budget.saturating_add(1)).collect();
    if all.len() > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    Ok(all)
}

fn inline_grid(text: &str) -> String {
    text.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("/")
}

/// `SSYT_k(λ)` under promotion.
pub struct SsytSystem {
    pub shape: Partition,
    pub ceiling: u32,
}

impl DynamicalSystem for SsytSystem {
    type State = Tableau;

    fn description(&self) -> String {
        format!("SSYT_{}({}) under promotion", self.ceiling, self.shape)
    }

    fn states(&self, budget: usize) -> Result<Vec<Tableau>> {
        within_budget(enumerate_ssyt(&self.shape, self.ceiling), budget)
    }

    fn step(&self, s: &Tableau) -> Tableau {
        promote(s)
    }

    fn statistic(&self, s: &Tableau, stat: &CellStatistic) -> Result<i64> {
        sigma(s, stat)
    }

    fn render(&self, s: &Tableau) -> String {
        s.to_inline()
    }
}

/// `SYT(P)` under poset promotion.
pub struct LinearExtensionSystem {
    pub poset: FinitePoset,
    pub name: String,
}

impl LinearExtensionSystem {
    pub fn new(poset: FinitePoset, name: impl Into<String>) -> Self {
        LinearExtensionSystem {
            poset,
            name: name.into(),
        }
    }
}

impl DynamicalSystem for LinearExtensionSystem {
    type State = LinearExtension;

    fn description(&self) -> String {
        format!("SYT({}) under promotion", self.name)
    }

    fn states(&self, budget: usize) -> Result<Vec<LinearExtension>> {
        within_budget(linear_extensions(&self.poset), budget)
    }

    fn step(&self, s: &LinearExtension) -> LinearExtension {
        poset_promote(&self.poset, s)
    }

    fn statistic(&self, s: &LinearExtension, stat: &CellStatistic) -> Result<i64> {
        sigma_labels(&self.poset, s.labels(), stat)
    }

    fn render(&self, s: &LinearExtension) -> String {
        inline_grid(&render_labels(&self.poset, s.labels()))
    }
}

/// `Inc^q(P)` under K-promotion.
pub struct IncreasingSystem {
    pub poset: FinitePoset,
    pub deficiency: usize,
    pub name: String,
}

impl IncreasingSystem {
    pub fn new(poset: FinitePoset, deficiency: usize, name: impl Into<String>) -> Self {
        IncreasingSystem {
            poset,
            deficiency,
            name: name.into(),
        }
    }
}

impl DynamicalSystem for IncreasingSystem {
    type State = IncreasingTableau;

    fn description(&self) -> String {
        format!("Inc^{}({}) under K-promotion", self.deficiency, self.name)
    }

    fn states(&self, budget: usize) -> Result<Vec<IncreasingTableau>> {
        within_budget(enumerate_increasing(&self.poset, self.deficiency)?, budget)
    }

    fn step(&self, s: &IncreasingTableau) -> IncreasingTableau {
        k_promote(&self.poset, s)
    }

    fn statistic(&self, s: &IncreasingTableau, stat: &CellStatistic) -> Result<i64> {
        sigma_labels(&self.poset, s.labels(), stat)
    }

    fn render(&self, s: &IncreasingTableau) -> String {
        inline_grid(&render_labels(&self.poset, s.labels()))
    }
}

/// The exact average of `stat` over an orbit.
pub fn orbit_average<D: DynamicalSystem>(system: &D, orbit: &[D::State], stat: &CellStatistic) -> Result<Rational> {
    let values = orbit
        .iter()
        .map(|s| system.statistic(s, stat))
        .collect::<Result<Vec<_>>>()?;
    Ok(mean(&values))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub size: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub average: Rational,
    pub representative: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Homomesic,
    Violated,
}

/// Two orbits, by index into the report's table, with different averages.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub orbits: [usize; 2],
    #[serde(serialize_with = "serialize_fractions")]
    pub averages: [Rational; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomesyReport {
    pub system: String,
    pub statistic: String,
    pub orbits: Vec<OrbitSummary>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl HomomesyReport {
    pub fn is_homomesic(&self) -> bool {
        self.verdict == Verdict::Homomesic
    }

    /// The shared orbit average, when there is one.
    pub fn common_average(&self) -> Option<Rational> {
        match self.verdict {
            Verdict::Homomesic => self.orbits.first().map(|o| o.average),
            Verdict::Violated => None,
        }
    }

    pub fn total_states(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }
}

/// The orbit of `start`, if `start` is its least element.
fn orbit_if_minimal<D: DynamicalSystem>(system: &D, start: &D::State) -> Option<Vec<D::State>> {
    let mut orbit = vec![start.clone()];
    loop {
        let next = system.step(orbit.last().expect("non-empty"));
        if next == *start {
            return Some(orbit);
        }
        if next < *start {
            return None;
        }
        orbit.push(next);
    }
}

/// All orbits of `system`, each starting at its least element, sorted.
///
/// Every state traces its own orbit in parallel and keeps it only when it is
/// the orbit's minimum, so the result does not depend on scheduling.
pub fn orbits<D: DynamicalSystem>(system: &D, budget: usize) -> Result<Vec<Vec<D::State>>> {
    let states = system.states(budget)?;
    let mut found: Vec<Vec<D::State>> = states.par_iter().filter_map(|s| orbit_if_minimal(system, s)).collect();
    found.sort_unstable_by(|a, b| a[0].cmp(&b[0]));
    Ok(found)
}

/// Partitions the system into orbits and compares the exact orbit averages
/// of `stat` against the first orbit's.
pub fn verify_homomesy<D: DynamicalSystem>(system: &D, stat: &CellStatistic, budget: usize) -> Result<HomomesyReport> {
    let orbits = orbits(system, budget)?;
    let summaries = orbits
        .par_iter()
        .map(|o| {
            Ok(OrbitSummary {
                size: o.len(),
                average: orbit_average(system, o, stat)?,
                representative: system.render(&o[0]),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let witness = summaries
        .iter()
        .position(|o| o.average != summaries[0].average)
        .map(|j| Witness {
            orbits: [0, j],
            averages: [summaries[0].average, summaries[j].average],
        });
    Ok(HomomesyReport {
        system: system.description(),
        statistic: stat.name.clone(),
        orbits: summaries,
        verdict: if witness.is_some() {
            Verdict::Violated
        } else {
            Verdict::Homomesic
        },
        witness,
    })
}

/// Every support `S` with `rotate(S) = S`, as cells of the embedding, in
/// order of the bitmask over `rotate`-orbits.
pub fn symmetric_subsets(p: &FinitePoset) -> Result<Vec<CellStatistic>> {
    let r = rotate(p)?;
    let cells = p.embedding().ok_or(Error::NoEmbedding)?;
    let classes: Vec<Vec<usize>> = (0..p.size())
        .filter(|&x| r.apply(x) >= x)
        .map(|x| if r.apply(x) == x { vec![x] } else { vec![x, r.apply(x)] })
        .collect();
    if classes.len() >= 32 {
        return Err(Error::BudgetExceeded { budget: 1 << 31 });
    }
    Ok((0u64..1 << classes.len())
        .map(|mask| {
            let chosen = classes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, c)| c.iter().map(|&x| cells[x]))
                .collect();
            CellStatistic::cells(chosen)
        })
        .collect())
}

/// Symmetric supports of an `m × n` rectangle.
pub fn symmetric_rectangle_subsets(rows: usize, cols: usize) -> Vec<CellStatistic> {
    let p = crate::posets::CominusculeFamily::Rectangle { rows, cols }
        .build()
        .expect("positive sides");
    symmetric_subsets(&p).expect("rectangles carry an embedding")
}
