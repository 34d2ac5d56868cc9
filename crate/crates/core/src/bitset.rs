//! Dense bit-vector subsets of a finite indexed carrier.

use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of `{0, .., len-1}` stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubSet {
    len: usize,
    words: Vec<u64>,
}

impl SubSet {
    pub fn empty(len: usize) -> Self {
        SubSet {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut set = SubSet::empty(len);
        for i in 0..len {
            set.insert(i);
        }
        set
    }

    pub fn singleton(len: usize, index: usize) -> Self {
        let mut set = SubSet::empty(len);
        set.insert(index);
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut set = SubSet::empty(len);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Carrier size, not the number of members.
    pub fn carrier_len(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < self.len);
        self.words[index / WORD_BITS] |= 1 << (index % WORD_BITS);
    }

    pub fn remove(&mut self, index: usize) {
        debug_assert!(index < self.len);
        self.words[index / WORD_BITS] &= !(1 << (index % WORD_BITS));
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.len && self.words[index / WORD_BITS] >> (index % WORD_BITS) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn union(&self, other: &SubSet) -> SubSet {
        debug_assert_eq!(self.len, other.len);
        SubSet {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &SubSet) -> SubSet {
        debug_assert_eq!(self.len, other.len);
        SubSet {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &SubSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    /// Image of the set under a pointwise map of the carrier.
    pub fn map<F: Fn(usize) -> usize>(&self, f: F) -> SubSet {
        let mut out = SubSet::empty(self.len);
        for i in self.iter() {
            out.insert(f(i));
        }
        out
    }

    /// Canonical `0`/`1` string, lowest index first.
    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for SubSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
