//! Orbits of a bijection on a finite set.

/// A cycle `x, f(x), f²(x), …` of a bijection `f`, rotated so that the
/// least element under `Ord` comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit<T> {
    elements: Vec<T>,
}

impl<T: Clone + Ord> Orbit<T> {
    /// Follows `step` from `start` until it returns to `start`.
    ///
    /// `step` must be a bijection with finite orbits; a non-bijective map
    /// whose trajectory from `start` never returns would loop forever.
    pub fn trace(start: &T, mut step: impl FnMut(&T) -> T) -> Self {
        let mut elements = vec![start.clone()];
        loop {
            let next = step(elements.last().expect("non-empty"));
            if next == *start {
                break;
            }
            elements.push(next);
        }
        let min_at = elements
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(i, _)| i)
            .expect("non-empty");
        elements.rotate_left(min_at);
        Orbit { elements }
    }

    /// Canonical representative: the least element.
    pub fn representative(&self) -> &T {
        &self.elements[0]
    }
}

impl<T> Orbit<T> {
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn period(&self) -> usize {
        self.elements.len()
    }

    pub fn into_elements(self) -> Vec<T> {
        self.elements
    }
}
