//! Increasing tableaux and K-promotion.
//!
//! An increasing tableau on a poset `P` is a strictly order-preserving
//! surjection onto `1..=d`; `Inc^q(P)` collects those with `d = |P| − q`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homomesy::{fraction_string, mean, orbits, sigma_labels, CellStatistic, IncreasingSystem, Rational};
use crate::posets::{labels_from_tableau, labels_to_tableau, CominusculeFamily, FinitePoset};
use crate::shape::Cell;
use crate::tableau::Tableau;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct IncreasingTableau {
    labels: Vec<u32>,
}

impl IncreasingTableau {
    pub fn new(p: &FinitePoset, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != p.size() {
            return Err(Error::NotIncreasing);
        }
        let d = labels.iter().copied().max().unwrap_or(0);
        let mut present = vec![false; d as usize + 1];
        for &v in &labels {
            present[v as usize] = true;
        }
        let surjective = !present[0] && present[1..].iter().all(|&b| b);
        let strict = p.covers().iter().all(|&(x, y)| labels[x] < labels[y]);
        if !surjective || !strict {
            return Err(Error::NotIncreasing);
        }
        Ok(IncreasingTableau { labels })
    }

    pub fn from_tableau(p: &FinitePoset, t: &Tableau) -> Result<Self> {
        Self::new(p, labels_from_tableau(p, t)?)
    }

    pub fn to_tableau(&self, p: &FinitePoset) -> Result<Tableau> {
        labels_to_tableau(p, &self.labels, self.max_label().max(1))
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// `d`, the largest label.
    pub fn max_label(&self) -> u32 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    /// `q = |P| − d`.
    pub fn deficiency(&self) -> usize {
        self.labels.len() - self.max_label() as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SwitchLabel {
    Value(u32),
    Bullet,
}

impl fmt::Display for SwitchLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwitchLabel::Value(v) => write!(f, "{v}"),
            SwitchLabel::Bullet => f.write_str("•"),
        }
    }
}

/// A labelling partway through K-promotion; need not be increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SwitchState {
    pub labels: Vec<SwitchLabel>,
}

/// `switch_{a,b}`: simultaneously, elements labelled `a` adjacent in the
/// cover graph to one labelled `b` become `b`, and vice versa.
pub fn switch(p: &FinitePoset, s: &SwitchState, a: SwitchLabel, b: SwitchLabel) -> SwitchState {
    let mask_of = |l: SwitchLabel| -> u64 {
        s.labels
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == l)
            .fold(0, |m, (x, _)| m | 1 << x)
    };
    let (with_a, with_b) = (mask_of(a), mask_of(b));
    let labels = s
        .labels
        .iter()
        .enumerate()
        .map(|(x, &v)| {
            let near = p.neighbours_mask(x);
            if v == a && near & with_b != 0 {
                b
            } else if v == b && near & with_a != 0 {
                a
            } else {
                v
            }
        })
        .collect();
    SwitchState { labels }
}

fn bulletize(t: &IncreasingTableau, label: u32) -> SwitchState {
    SwitchState {
        labels: t
            .labels
            .iter()
            .map(|&v| {
                if v == label {
                    SwitchLabel::Bullet
                } else {
                    SwitchLabel::Value(v)
                }
            })
            .collect(),
    }
}

fn finish(s: SwitchState, shift: impl Fn(u32) -> u32, bullet: u32) -> IncreasingTableau {
    IncreasingTableau {
        labels: s
            .labels
            .into_iter()
            .map(|l| match l {
                SwitchLabel::Value(v) => shift(v),
                SwitchLabel::Bullet => bullet,
            })
            .collect(),
    }
}

/// The intermediate states of K-promotion: after bulletizing the 1s, then
/// after each `switch_{i,•}` for `i = 2..=d`.
pub fn k_promote_steps(p: &FinitePoset, t: &IncreasingTableau) -> Vec<SwitchState> {
    let mut steps = vec![bulletize(t, 1)];
    for i in 2..=t.max_label() {
        let next = switch(
            p,
            steps.last().expect("non-empty"),
            SwitchLabel::Value(i),
            SwitchLabel::Bullet,
        );
        steps.push(next);
    }
    steps
}

/// `P_K`.
pub fn k_promote(p: &FinitePoset, t: &IncreasingTableau) -> IncreasingTableau {
    let d = t.max_label();
    if d == 0 {
        return t.clone();
    }
    let last = k_promote_steps(p, t).pop().expect("non-empty");
    finish(last, |v| v - 1, d)
}

/// `P_K⁻¹`: bulletize the `d`s, switch with `d − 1, …, 1`, increment, and
/// relabel bullets `1`.
pub fn k_promote_inverse(p: &FinitePoset, t: &IncreasingTableau) -> IncreasingTableau {
    let d = t.max_label();
    if d == 0 {
        return t.clone();
    }
    let mut s = bulletize(t, d);
    for i in (1..d).rev() {
        s = switch(p, &s, SwitchLabel::Value(i), SwitchLabel::Bullet);
    }
    finish(s, |v| v + 1, 1)
}

pub fn k_promote_power(p: &FinitePoset, t: &IncreasingTableau, n: usize) -> IncreasingTableau {
    (0..n).fold(t.clone(), |cur, _| k_promote(p, &cur))
}

/// The order ideals `P_K^{d−j}(T)_{≤j}` for `0 ≤ j ≤ d`, as bitmasks.
pub fn k_evacuation_chain(p: &FinitePoset, t: &IncreasingTableau) -> Vec<u64> {
    let d = t.max_label() as usize;
    let mut powers = vec![t.clone()];
    for _ in 0..d {
        let next = k_promote(p, powers.last().expect("non-empty"));
        powers.push(next);
    }
    (0..=d)
        .map(|j| {
            powers[d - j]
                .labels
                .iter()
                .enumerate()
                .filter(|(_, &v)| v as usize <= j)
                .fold(0u64, |m, (x, _)| m | 1 << x)
        })
        .collect()
}

/// `E_K`, decoded from [`k_evacuation_chain`].
pub fn k_evacuate(p: &FinitePoset, t: &IncreasingTableau) -> Result<IncreasingTableau> {
    let chain = k_evacuation_chain(p, t);
    let nested = chain.windows(2).all(|w| w[0] & !w[1] == 0);
    let ideals = chain.iter().all(|&m| p.is_order_ideal(m));
    if chain[0] != 0 || *chain.last().expect("non-empty") != p.all_mask() || !nested || !ideals {
        return Err(Error::BadEvacuationChain);
    }
    let labels = (0..p.size())
        .map(|x| {
            chain
                .iter()
                .position(|m| m >> x & 1 == 1)
                .expect("last ideal is everything") as u32
        })
        .collect();
    let e = IncreasingTableau::new(p, labels).map_err(|_| Error::BadEvacuationChain)?;
    if e.max_label() != t.max_label() {
        return Err(Error::BadEvacuationChain);
    }
    Ok(e)
}

/// `x ↦ d + 1 − T(rotate(x))`.
pub fn rotate_reverse_increasing(r: &crate::posets::RotateMap, t: &IncreasingTableau) -> IncreasingTableau {
    let d = t.max_label();
    IncreasingTableau {
        labels: (0..t.labels.len()).map(|x| d + 1 - t.labels[r.apply(x)]).collect(),
    }
}

/// Every element of `Inc^q(P)`. Each label class is a non-empty set of
/// minimal elements of what remains; branches that cannot finish with the
/// labels left are cut.
pub fn enumerate_increasing(p: &FinitePoset, q: usize) -> Result<std::vec::IntoIter<IncreasingTableau>> {
    let n = p.size();
    if q > n {
        return Err(Error::DeficiencyTooLarge { deficiency: q, size: n });
    }
    let d = (n - q) as u32;
    let mut out = Vec::new();
    let mut labels = vec![0u32; n];
    fn go(p: &FinitePoset, d: u32, j: u32, mask: u64, labels: &mut Vec<u32>, out: &mut Vec<IncreasingTableau>) {
        let rest = p.all_mask() & !mask;
        if j > d {
            if rest == 0 {
                out.push(IncreasingTableau { labels: labels.clone() });
            }
            return;
        }
        let left = (d - j + 1) as usize;
        if (rest.count_ones() as usize) < left || p.height_within(rest) > left {
            return;
        }
        let minimal = (0..p.size())
            .filter(|&x| rest >> x & 1 == 1 && p.below_mask(x) & !mask == 0)
            .fold(0u64, |m, x| m | 1 << x);
        // submasks of `minimal`, ascending
        let mut sub = 0u64;
        loop {
            sub = sub.wrapping_sub(minimal) & minimal;
            if sub == 0 {
                break;
            }
            for x in (0..p.size()).filter(|&x| sub >> x & 1 == 1) {
                labels[x] = j;
            }
            go(p, d, j + 1, mask | sub, labels, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(IncreasingTableau { labels: Vec::new() });
        }
    } else if d > 0 {
        go(p, d, 1, 0, &mut labels, &mut out);
    }
    Ok(out.into_iter())
}

#[derive(Clone, Debug, Serialize)]
pub struct KOrderReport {
    pub width: usize,
    pub deficiency: usize,
    pub expected_order: usize,
    pub tableaux: usize,
    /// Orbit size ↦ number of orbits.
    pub orbit_sizes: BTreeMap<usize, usize>,
    pub passed: bool,
}

/// Checks every `P_K`-orbit on `Inc^q(2×n)` has size dividing `2n − q`.
pub fn k_orbit_order_check(width: usize, q: usize, budget: usize) -> Result<KOrderReport> {
    let family = CominusculeFamily::Rectangle { rows: 2, cols: width };
    let p = family.build()?;
    let expected_order = 2 * width - q.min(2 * width);
    let system = IncreasingSystem::new(p, q, family.to_string());
    let all = orbits(&system, budget)?;
    let mut orbit_sizes = BTreeMap::new();
    for o in &all {
        *orbit_sizes.entry(o.len()).or_insert(0) += 1;
    }
    let passed = expected_order > 0 && orbit_sizes.keys().all(|s| expected_order.is_multiple_of(*s));
    Ok(KOrderReport {
        width,
        deficiency: q,
        expected_order,
        tableaux: all.iter().map(Vec::len).sum(),
        orbit_sizes,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleOrbit {
    pub start: String,
    pub size: usize,
    pub values: Vec<i64>,
    #[serde(serialize_with = "crate::homomesy::serialize_rational")]
    pub average: Rational,
    pub orbit: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub support: Vec<Cell>,
    pub first: CounterexampleOrbit,
    pub second: CounterexampleOrbit,
}

impl CounterexampleReport {
    pub fn averages_differ(&self) -> bool {
        self.first.average != self.second.average
    }
}

fn k_orbit(p: &FinitePoset, t: &IncreasingTableau) -> Vec<IncreasingTableau> {
    let mut orbit = vec![t.clone()];
    loop {
        let next = k_promote(p, orbit.last().expect("non-empty"));
        if next == *t {
            return orbit;
        }
        orbit.push(next);
    }
}

/// Two `P_K`-orbits in `Inc^3(3×4)` of size 9 whose averages of `σ_S`,
/// `S = {(2,2),(2,3)}`, are `91/9` and `10`. Any other outcome is an error.
pub fn inc3_rectangle_counterexample() -> Result<CounterexampleReport> {
    let p = CominusculeFamily::Rectangle { rows: 3, cols: 4 }.build()?;
    let support = vec![Cell::new(2, 2), Cell::new(2, 3)];
    let stat = CellStatistic::cells(support.clone());
    let build = |rows: Vec<Vec<u32>>| -> Result<CounterexampleOrbit> {
        let t = IncreasingTableau::from_tableau(&p, &Tableau::from_rows(rows, 9)?)?;
        let orbit = k_orbit(&p, &t);
        let values = orbit
            .iter()
            .map(|x| sigma_labels(&p, x.labels(), &stat))
            .collect::<Result<Vec<_>>>()?;
        let render = |x: &IncreasingTableau| x.to_tableau(&p).map(|t| t.to_inline());
        Ok(CounterexampleOrbit {
            start: render(&t)?,
            size: orbit.len(),
            average: mean(&values),
            values,
            orbit: orbit.iter().map(render).collect::<Result<_>>()?,
        })
    };
    let first = build(vec![vec![1, 2, 3, 5], vec![2, 4, 5, 7], vec![3, 6, 8, 9]])?;
    let second = build(vec![vec![1, 4, 5, 6], vec![2, 6, 7, 8], vec![3, 7, 8, 9]])?;
    let expected = [(9, Rational::new(91, 9)), (9, Rational::from_integer(10))];
    for (o, (size, avg)) in [&first, &second].into_iter().zip(expected) {
        if o.size != size || o.average != avg {
            return Err(Error::Reproduction(format!(
                "orbit of {} has size {} and average {}, expected {} and {}",
                o.start,
                o.size,
                fraction_string(&o.average),
                size,
                fraction_string(&avg)
            )));
        }
    }
    Ok(CounterexampleReport { support, first, second })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{evacuate, promote};
    use crate::enumerate::enumerate_syt;
    use crate::growth::encode_chain;
    use crate::posets::rotate;
    use crate::shape::Partition;

    fn rect(m: usize, n: usize) -> FinitePoset {
        CominusculeFamily::Rectangle { rows: m, cols: n }.build().unwrap()
    }

    fn inc(p: &FinitePoset, rows: &[&[u32]]) -> IncreasingTableau {
        let d = rows.iter().flat_map(|r| r.iter()).copied().max().unwrap();
        let t = Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect(), d).unwrap();
        IncreasingTableau::from_tableau(p, &t).unwrap()
    }

    fn show(p: &FinitePoset, t: &IncreasingTableau) -> Vec<Vec<u32>> {
        t.to_tableau(p).unwrap().rows().to_vec()
    }

    #[test]
    fn k_promotion_of_three_rows() {
        let p = rect(3, 2);
        let t = inc(&p, &[&[1, 3], &[2, 4], &[4, 5]]);
        let steps = k_promote_steps(&p, &t);
        use SwitchLabel::{Bullet as B, Value as V};
        assert_eq!(steps[0].labels, vec![B, V(3), V(2), V(4), V(4), V(5)]);
        assert_eq!(steps[1].labels, vec![V(2), V(3), B, V(4), V(4), V(5)]);
        assert_eq!(steps[2].labels, steps[1].labels);
        assert_eq!(steps[3].labels, vec![V(2), V(3), V(4), B, B, V(5)]);
        assert_eq!(steps[4].labels, vec![V(2), V(3), V(4), V(5), V(5), B]);
        let pk = k_promote(&p, &t);
        assert_eq!(show(&p, &pk), vec![vec![1, 2], vec![3, 4], vec![4, 5]]);
        assert_eq!(k_promote_inverse(&p, &pk), t);

        let as_ssyt = Tableau::from_rows(vec![vec![1, 3], vec![2, 4], vec![4, 5]], 5).unwrap();
        let sp = promote(&as_ssyt);
        assert_eq!(sp.rows(), &[vec![1, 2], vec![3, 3], vec![4, 5]]);
        assert_ne!(sp, pk.to_tableau(&p).unwrap());
    }

    #[test]
    fn k_evacuation_chain_decodes() {
        let p = rect(3, 2);
        let t = inc(&p, &[&[1, 3], &[2, 4], &[4, 5]]);
        let e = k_evacuate(&p, &t).unwrap();
        let et = e.to_tableau(&p).unwrap();
        assert_eq!(et.rows(), &[vec![1, 2], vec![2, 4], vec![3, 5]]);
        let chain: Vec<String> = encode_chain(&et).diagrams().iter().map(|d| d.to_string()).collect();
        assert_eq!(chain, ["∅", "(1)", "(2,1)", "(2,1,1)", "(2,2,1)", "(2,2,2)"]);
    }

    #[test]
    fn switch_basics() {
        let p = rect(1, 3);
        use SwitchLabel::{Bullet as B, Value as V};
        let s = SwitchState {
            labels: vec![V(1), V(2), B],
        };
        assert_eq!(switch(&p, &s, V(1), B), s);
        let once = switch(&p, &s, V(2), B);
        assert_eq!(once.labels, vec![V(1), B, V(2)]);
        assert_eq!(switch(&p, &once, V(2), B), s);
    }

    #[test]
    fn enumeration_counts() {
        let p = rect(2, 3);
        assert_eq!(enumerate_increasing(&p, 0).unwrap().count(), 5);
        let brute = |p: &FinitePoset, q: usize| -> usize {
            let n = p.size();
            let d = (n - q) as u32;
            let mut count = 0;
            let mut labels = vec![1u32; n];
            loop {
                if IncreasingTableau::new(p, labels.clone()).is_ok_and(|t| t.max_label() == d) {
                    count += 1;
                }
                let mut i = 0;
                while i < n && labels[i] == d {
                    labels[i] = 1;
                    i += 1;
                }
                if i == n {
                    break;
                }
                labels[i] += 1;
            }
            count
        };
        let sq = rect(2, 2);
        assert_eq!(enumerate_increasing(&sq, 1).unwrap().count(), brute(&sq, 1));
        for q in 0..=4 {
            assert_eq!(
                enumerate_increasing(&rect(2, 3), q).unwrap().count(),
                brute(&rect(2, 3), q)
            );
        }
        assert_eq!(enumerate_increasing(&sq, 3).unwrap().count(), 0);
        let anti = FinitePoset::new(3, []).unwrap();
        assert_eq!(enumerate_increasing(&anti, 2).unwrap().count(), 1);
        assert!(enumerate_increasing(&sq, 5).is_err());
    }

    #[test]
    fn standard_bridge() {
        for (m, n) in [(2, 3), (2, 2), (3, 2)] {
            let p = rect(m, n);
            for t in enumerate_syt(&Partition::rectangle(m, n)) {
                let i = IncreasingTableau::from_tableau(&p, &t).unwrap();
                assert_eq!(k_promote(&p, &i).to_tableau(&p).unwrap(), promote(&t));
                assert_eq!(k_evacuate(&p, &i).unwrap().to_tableau(&p).unwrap(), evacuate(&t));
            }
        }
    }

    #[test]
    fn two_row_relations() {
        for n in 1..=4 {
            let p = rect(2, n);
            let r = rotate(&p).unwrap();
            for q in 0..2 * n {
                let order = 2 * n - q;
                for t in enumerate_increasing(&p, q).unwrap() {
                    let pk = k_promote(&p, &t);
                    assert!(IncreasingTableau::new(&p, pk.labels().to_vec()).is_ok());
                    assert_eq!(pk.deficiency(), q);
                    assert_eq!(k_promote_inverse(&p, &pk), t);
                    assert_eq!(k_promote_inverse(&p, &t), k_promote_power(&p, &t, order - 1));
                    let e = k_evacuate(&p, &t).unwrap();
                    assert_eq!(k_evacuate(&p, &e).unwrap(), t);
                    assert_eq!(e, rotate_reverse_increasing(&r, &t));
                    assert_eq!(k_evacuate(&p, &pk).unwrap(), k_promote_inverse(&p, &e));
                }
            }
        }
    }

    #[test]
    fn order_checks() {
        for (n, q) in [(3, 1), (4, 2), (3, 0), (2, 3)] {
            let r = k_orbit_order_check(n, q, 100_000).unwrap();
            assert!(r.passed, "n={n} q={q}: {r:?}");
        }
        let r = k_orbit_order_check(3, 0, 100_000).unwrap();
        assert_eq!(r.expected_order, 6);
        assert_eq!(r.tableaux, 5);
    }

    #[test]
    fn counterexample_reproduces() {
        let r = inc3_rectangle_counterexample().unwrap();
        assert_eq!(r.first.size, 9);
        assert_eq!(r.second.size, 9);
        assert_eq!(r.first.average, Rational::new(91, 9));
        assert_eq!(r.second.average, Rational::from_integer(10));
        assert_eq!(r.first.values[0], 9);
        assert!(r.averages_differ());
        let p = rect(3, 4);
        let rot = rotate(&p).unwrap();
        let s: Vec<usize> = r.support.iter().map(|&c| p.element_at(c).unwrap()).collect();
        assert!(rot.fixes(&s));
    }
}
