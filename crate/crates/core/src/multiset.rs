use std::fmt;

use serde::Serialize;

/// A finite multiset of small integers, stored sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Multiset(Vec<u32>);

impl Multiset {
    pub fn new() -> Self {
        Multiset(Vec::new())
    }

    pub fn insert(&mut self, v: u32) {
        let at = self.0.partition_point(|&x| x <= v);
        self.0.insert(at, v);
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, v: u32) -> usize {
        self.0.iter().filter(|&&x| x == v).count()
    }

    /// Multiset sum.
    pub fn union(&self, other: &Multiset) -> Multiset {
        other.0.iter().copied().chain(self.0.iter().copied()).collect()
    }

    /// `{k + 1 − x : x ∈ self}`.
    pub fn complement(&self, k: u32) -> Multiset {
        self.0.iter().map(|&x| k + 1 - x).collect()
    }
}

impl FromIterator<u32> for Multiset {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut v: Vec<u32> = iter.into_iter().collect();
        v.sort_unstable();
        Multiset(v)
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
