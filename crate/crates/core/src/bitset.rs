//! Fixed-capacity bit vector used for vertex sets, adjacency rows and
//! alive masks. Two inline words cover graphs up to 128 vertices without
//! heap allocation; larger sets spill transparently with identical
//! semantics.

use smallvec::SmallVec;

const WORD_BITS: usize = 64;

/// A set of vertex indices in `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    nbits: usize,
    words: SmallVec<[u64; 2]>,
}

impl Bitset {
    pub fn new(nbits: usize) -> Self {
        let nwords = (nbits + WORD_BITS - 1) / WORD_BITS;
        Bitset {
            nbits,
            words: smallvec::smallvec![0u64; nwords.max(1)],
        }
    }

    /// All bits in `0..nbits` set.
    pub fn full(nbits: usize) -> Self {
        let mut s = Self::new(nbits);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.mask_tail();
        s
    }

    pub fn singleton(nbits: usize, v: usize) -> Self {
        let mut s = Self::new(nbits);
        s.insert(v);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, it: I) -> Self {
        let mut s = Self::new(nbits);
        for v in it {
            s.insert(v);
        }
        s
    }

    fn mask_tail(&mut self) {
        let rem = self.nbits % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
        if self.nbits == 0 {
            self.words[0] = 0;
        }
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.nbits);
        self.words[v / WORD_BITS] & (1u64 << (v % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.nbits);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.nbits);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    /// Number of set bits.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
    }

    pub fn subtract(&mut self, other: &Bitset) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &Bitset) -> Bitset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &Bitset) -> Bitset {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn intersects(&self, other: &Bitset) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &Bitset) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Bitset) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> BitsetIter<'_> {
        BitsetIter {
            set: self,
            word: 0,
            bits: self.words[0],
        }
    }
}

impl std::fmt::Debug for Bitset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitsetIter<'a> {
    set: &'a Bitset,
    word: usize,
    bits: u64,
}

impl Iterator for BitsetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD_BITS + b);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}
