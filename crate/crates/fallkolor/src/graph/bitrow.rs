//! Fixed-length bit vectors used for adjacency rows, vertex sets, and color
//! classes. Length is rounded up to 64-bit words; bits past `len` are kept
//! zero so that equality and popcount are safe on the raw words.

use std::fmt;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(WORD_BITS)] }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut row = Self::zeros(len);
        for &i in indices {
            row.set(i);
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] & (1 << (i % WORD_BITS)) != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub fn set_all(&mut self) {
        for w in &mut self.words {
            *w = u64::MAX;
        }
        self.mask_tail();
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn first_set(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Index of the lowest clear bit below `len`.
    pub fn first_unset(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != u64::MAX {
                let i = wi * WORD_BITS + (!w).trailing_zeros() as usize;
                return (i < self.len).then_some(i);
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Removes every bit set in `other`.
    pub fn difference_with(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersects(&self, other: &BitRow) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &BitRow) -> bool {
        !self.intersects(other)
    }

    pub fn is_subset_of(&self, other: &BitRow) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Ascending indices of set bits.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + bit)
                }
            })
        })
    }

    fn mask_tail(&mut self) {
        let used = self.len % WORD_BITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
        if self.len == 0 {
            self.words.clear();
        }
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_count() {
        let mut r = BitRow::zeros(130);
        r.set(0);
        r.set(64);
        r.set(129);
        assert!(r.get(0) && r.get(64) && r.get(129));
        assert!(!r.get(1));
        assert_eq!(r.count_ones(), 3);
        assert_eq!(r.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        r.clear(64);
        assert_eq!(r.count_ones(), 2);
    }

    #[test]
    fn set_all_respects_length() {
        let mut r = BitRow::zeros(70);
        r.set_all();
        assert_eq!(r.count_ones(), 70);
        assert_eq!(r, BitRow::from_indices(70, &(0..70).collect::<Vec<_>>()));
    }

    #[test]
    fn set_ops() {
        let a = BitRow::from_indices(10, &[1, 3, 5]);
        let b = BitRow::from_indices(10, &[3, 4]);
        assert!(a.intersects(&b));
        assert!(!a.is_disjoint(&b));
        let mut u = a.clone();
        u.union_with(&b);
        assert_eq!(u, BitRow::from_indices(10, &[1, 3, 4, 5]));
        let mut i = a.clone();
        i.intersect_with(&b);
        assert_eq!(i, BitRow::from_indices(10, &[3]));
        let mut d = a.clone();
        d.difference_with(&b);
        assert_eq!(d, BitRow::from_indices(10, &[1, 5]));
        assert!(BitRow::from_indices(10, &[3]).is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert_eq!(a.first_set(), Some(1));
        assert_eq!(BitRow::zeros(10).first_set(), None);
    }

    #[test]
    fn first_unset_skips_full_words() {
        let mut r = BitRow::zeros(70);
        assert_eq!(r.first_unset(), Some(0));
        r.set_all();
        assert_eq!(r.first_unset(), None);
        r.clear(65);
        assert_eq!(r.first_unset(), Some(65));
    }
}
