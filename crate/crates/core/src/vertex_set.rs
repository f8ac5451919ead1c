use alloc::vec::Vec;
use core::fmt;

use crate::Vertex;

/// A set of vertices stored as a bitset. Iteration is in ascending id order.
#[derive(Clone, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    fn trimmed(&self) -> &[u64] {
        let len = self
            .words
            .iter()
            .rposition(|&w| w != 0)
            .map_or(0, |i| i + 1);
        &self.words[..len]
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for VertexSet {}

impl core::hash::Hash for VertexSet {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        VertexSet {
            words: alloc::vec![0; n.div_ceil(64)],
        }
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::with_capacity(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Builds a set from the low `n` bits of a mask.
    pub fn from_mask(mask: u64) -> Self {
        VertexSet {
            words: alloc::vec![mask],
        }
    }

    /// The set as a single word, if every member is below 64.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.iter().skip(1).all(|&w| w == 0) {
            true => Some(self.words.first().copied().unwrap_or(0)),
            false => None,
        }
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let (w, b) = (v / 64, v % 64);
        match self.words.get_mut(w) {
            Some(word) if *word & (1 << b) != 0 => {
                *word &= !(1 << b);
                true
            }
            _ => false,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a Vertex>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_and_iterate() {
        let mut s = VertexSet::new();
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(70);
        s.insert(0);
        assert_eq!(s.to_vec(), alloc::vec![0, 3, 70]);
        assert_eq!(s.len(), 3);
        assert!(s.remove(70));
        assert!(!s.contains(70));
        assert_eq!(s.as_mask(), Some(0b1001));
    }

    #[test]
    fn equality_ignores_trailing_zero_words() {
        let mut a = VertexSet::with_capacity(200);
        a.insert(1);
        let b: VertexSet = [1usize].iter().collect();
        assert_eq!(a, b);
        assert!(a.is_subset(&b) && b.is_subset(&a));
    }
}
