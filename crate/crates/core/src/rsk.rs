//! Reading words and RSK row insertion.

use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// A word over the alphabet `1..=ceiling`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
    ceiling: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, ceiling: u32) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > ceiling) {
            return Err(Error::EntryAboveCeiling { entry: bad, ceiling });
        }
        Ok(Word { letters, ceiling })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn ceiling(&self) -> u32 {
        self.ceiling
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `w⁺`: reverse the word and replace each letter `i` by `k + 1 − i`.
    pub fn complement_reverse(&self) -> Word {
        let k = self.ceiling;
        Word {
            letters: self.letters.iter().rev().map(|&l| k + 1 - l).collect(),
            ceiling: k,
        }
    }

    /// Every word of length `len` over `1..=ceiling`, lexicographically.
    pub fn all(len: usize, ceiling: u32) -> impl Iterator<Item = Word> {
        let total = (ceiling as usize).pow(len as u32);
        (0..total).map(move |mut code| {
            let mut letters = vec![0; len];
            for slot in letters.iter_mut().rev() {
                *slot = (code % ceiling as usize) as u32 + 1;
                code /= ceiling as usize;
            }
            Word { letters, ceiling }
        })
    }
}

/// Row word: rows read bottom to top, each left to right.
pub fn reading_word(t: &Tableau) -> Word {
    let letters = t
        .rows()
        .iter()
        .rev()
        .flat_map(|row| row.iter().copied().filter(|&v| v != 0))
        .collect();
    Word {
        letters,
        ceiling: t.ceiling(),
    }
}

/// Insertion tableau of `w` under RSK row insertion.
pub fn rsk_insert(w: &Word) -> Tableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &letter in &w.letters {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            let row = &mut rows[r];
            // bump the leftmost entry strictly greater than x
            let pos = row.partition_point(|&v| v <= x);
            if pos == row.len() {
                row.push(x);
                break;
            }
            x = std::mem::replace(&mut row[pos], x);
            r += 1;
        }
    }
    Tableau::from_raw_unchecked(rows, w.ceiling)
}

pub fn word_complement_reverse(w: &Word) -> Word {
    w.complement_reverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u32]], k: u32) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect(), k).unwrap()
    }

    fn w(letters: &[u32], k: u32) -> Word {
        Word::new(letters.to_vec(), k).unwrap()
    }

    #[test]
    fn reading_words() {
        assert_eq!(reading_word(&t(&[&[1, 2], &[3, 4]], 4)).letters(), &[3, 4, 1, 2]);
        assert_eq!(reading_word(&t(&[&[1, 1, 2]], 2)).letters(), &[1, 1, 2]);
        assert_eq!(
            reading_word(&t(&[&[1, 2, 3], &[3, 4, 4]], 5)).letters(),
            &[3, 4, 4, 1, 2, 3]
        );
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(rsk_insert(&w(&[], 3)), Tableau::empty(3));
        assert_eq!(rsk_insert(&w(&[1, 1, 2], 2)), t(&[&[1, 1, 2]], 2));
        assert_eq!(rsk_insert(&w(&[3, 4, 4, 1, 2, 3], 5)), t(&[&[1, 2, 3], &[3, 4, 4]], 5));
    }

    #[test]
    fn complement_reverse_examples() {
        assert_eq!(w(&[1], 1).complement_reverse(), w(&[1], 1));
        assert_eq!(w(&[1, 2], 3).complement_reverse(), w(&[2, 3], 3));
        assert_eq!(
            w(&[3, 4, 4, 1, 2, 3], 5).complement_reverse(),
            w(&[3, 4, 5, 2, 2, 3], 5)
        );
    }

    #[test]
    fn word_enumeration_size() {
        assert_eq!(Word::all(3, 4).count(), 64);
        assert_eq!(Word::all(0, 4).count(), 1);
    }

    #[test]
    fn rejects_out_of_alphabet() {
        assert!(Word::new(vec![0], 2).is_err());
        assert!(Word::new(vec![3], 2).is_err());
    }
}
