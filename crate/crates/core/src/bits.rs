//! Fixed-width bitsets used for element sets and graph adjacency rows.

use alloc::vec;
use alloc::vec::Vec;

/// A set over `0..len` backed by `u64` words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0u64; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut s = Self::new(len);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    /// Number of indices the set ranges over (not the cardinality).
    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn clear(&mut self) {
        for w in self.words.iter_mut() {
            *w = 0;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
    }

    pub fn subtract(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
    }

    /// Flips every bit in range; bits past `len` stay zero.
    pub fn invert(&mut self) {
        for w in self.words.iter_mut() {
            *w = !*w;
        }
        self.trim();
    }

    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Lowest set index, if any.
    pub fn first(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some((k << 6) + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Lowest set index strictly greater than `i`.
    pub fn next_after(&self, i: usize) -> Option<usize> {
        let mut k = i >> 6;
        if k >= self.words.len() {
            return None;
        }
        let mut w = self.words[k] & !((1u64 << (i & 63)) | ((1u64 << (i & 63)) - 1));
        loop {
            if w != 0 {
                return Some((k << 6) + w.trailing_zeros() as usize);
            }
            k += 1;
            if k >= self.words.len() {
                return None;
            }
            w = self.words[k];
        }
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            set: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn trim(&mut self) {
        let tail = self.len & 63;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

pub struct BitIter<'a> {
    set: &'a BitSet,
    word: usize,
    bits: u64,
}

impl<'a> Iterator for BitIter<'a> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some((self.word << 6) + b);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iterate_count() {
        let mut s = BitSet::new(200);
        for i in [0usize, 1, 63, 64, 65, 128, 199] {
            s.insert(i);
        }
        assert_eq!(s.count(), 7);
        assert_eq!(s.to_vec(), vec![0, 1, 63, 64, 65, 128, 199]);
        assert!(s.contains(64));
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.count(), 6);
    }

    #[test]
    fn full_and_invert_respect_width() {
        let mut s = BitSet::full(70);
        assert_eq!(s.count(), 70);
        s.invert();
        assert!(s.is_empty());
        s.invert();
        assert_eq!(s.count(), 70);
    }

    #[test]
    fn next_after_walks_words() {
        let s = BitSet::from_indices(150, &[3, 64, 149]);
        assert_eq!(s.next_after(0), Some(3));
        assert_eq!(s.next_after(3), Some(64));
        assert_eq!(s.next_after(64), Some(149));
        assert_eq!(s.next_after(149), None);
    }

    #[test]
    fn set_algebra() {
        let a = BitSet::from_indices(100, &[1, 2, 3, 70]);
        let b = BitSet::from_indices(100, &[2, 3, 99]);
        let mut u = a.clone();
        u.union_with(&b);
        assert_eq!(u.to_vec(), vec![1, 2, 3, 70, 99]);
        let mut i = a.clone();
        i.intersect_with(&b);
        assert_eq!(i.to_vec(), vec![2, 3]);
        assert!(i.is_subset_of(&a) && i.is_subset_of(&b));
        assert_eq!(a.intersection_count(&b), 2);
        let mut d = a.clone();
        d.subtract(&b);
        assert_eq!(d.to_vec(), vec![1, 70]);
    }
}
