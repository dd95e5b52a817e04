//! Subsets of `{0, .., n-1}` as packed bit vectors.
//!
//! Set union and intersection are the additive and multiplicative operations
//! of the operator algebra, so they must be word operations. A subset of a
//! ground set of size `n` occupies `ceil(n/64)` words; for `n <= 64` every
//! operation touches a single word.

use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of the ground set `{0, .., n-1}`.
///
/// All binary operations require both operands to share the same ground-set
/// size `n`; this is asserted in debug builds.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    n: usize,
    words: Vec<u64>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

impl Subset {
    /// The empty subset of `{0, .., n-1}`.
    pub fn empty(n: usize) -> Self {
        Subset {
            n,
            words: vec![0; word_count(n)],
        }
    }

    /// The full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD_BITS;
            let in_range = n.saturating_sub(lo).min(WORD_BITS);
            *w = if in_range == WORD_BITS {
                u64::MAX
            } else {
                (1u64 << in_range) - 1
            };
        }
        s
    }

    /// Builds a subset from 0-based element indices. Panics on out-of-range elements.
    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for e in elements {
            s.insert(e);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.n, "element {e} out of range for ground set of size {}", self.n);
        self.words[e / WORD_BITS] |= 1u64 << (e % WORD_BITS);
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.n && self.words[e / WORD_BITS] >> (e % WORD_BITS) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Least element, if the subset is non-empty.
    pub fn min_element(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersect(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union_with(&mut self, other: &Subset) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Keeps only elements `< m`, shrinking the ground set to `m`.
    pub fn restrict(&self, m: usize) -> Subset {
        debug_assert!(m <= self.n);
        let mut s = Subset {
            n: m,
            words: self.words[..word_count(m)].to_vec(),
        };
        let tail = m % WORD_BITS;
        if tail != 0 {
            if let Some(last) = s.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        s
    }

    /// Iterates elements in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = i * WORD_BITS;
            BitIter { word: w }.map(move |b| base + b)
        })
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
