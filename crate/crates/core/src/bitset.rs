//! Fixed-width vertex sets.
//!
//! Every graph in this crate stores its adjacency as one machine word per
//! vertex, so vertex sets are single words. The default width is 64 bits;
//! building with the `wide` feature switches to 128-bit words. The runtime
//! capacity can be lowered (never raised past the word width) through the
//! `ROMDOM_MAX_WIDTH` environment variable.

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

#[cfg(not(feature = "wide"))]
pub type Word = u64;
#[cfg(feature = "wide")]
pub type Word = u128;

/// Number of bits in a [`Word`].
pub const WORD_BITS: usize = Word::BITS as usize;

/// Environment variable overriding the vertex-set capacity.
pub const MAX_WIDTH_ENV: &str = "ROMDOM_MAX_WIDTH";

#[inline(always)]
pub const fn bit(v: usize) -> Word {
    (1 as Word) << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub const fn low_mask(n: usize) -> Word {
    if n >= WORD_BITS {
        Word::MAX
    } else {
        bit(n) - 1
    }
}

#[inline(always)]
pub fn popcount(w: Word) -> usize {
    w.count_ones() as usize
}

/// Largest vertex count a graph may have in this process.
pub fn capacity() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(MAX_WIDTH_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&w| w >= 1)
            .map_or(WORD_BITS, |w| w.min(WORD_BITS))
    })
}

/// Iterator over the set bits of a word, ascending.
#[derive(Clone, Copy, Debug)]
pub struct Ones(Word);

impl Ones {
    #[inline]
    pub fn new(w: Word) -> Self {
        Ones(w)
    }
}

impl Iterator for Ones {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = popcount(self.0);
        (c, Some(c))
    }
}

impl ExactSizeIterator for Ones {}

/// A subset of `0..n`.
///
/// Ordering compares the underlying bit pattern as an unsigned integer, which
/// is the order used for enumerated sets and functions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: Word,
    n: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= WORD_BITS);
        VertexSet { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            bits: low_mask(n),
            n,
        }
    }

    /// Panics if `bits` has a bit at or above `n`.
    pub fn from_bits(n: usize, bits: Word) -> Self {
        assert!(n <= WORD_BITS, "vertex set width {n} exceeds word size");
        assert_eq!(bits & !low_mask(n), 0, "bits outside 0..{n}");
        VertexSet { bits, n }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut s = VertexSet::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn bits(&self) -> Word {
        self.bits
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.bits |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.bits &= !bit(v);
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        popcount(self.bits)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn iter(&self) -> Ones {
        Ones(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            bits: !self.bits & low_mask(self.n),
            n: self.n,
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_iterates_ascending() {
        let v: Vec<usize> = Ones::new(0b1010_0110).collect();
        assert_eq!(v, vec![1, 2, 5, 7]);
    }

    #[test]
    fn full_and_complement() {
        let s = VertexSet::from_vertices(5, [0, 3]);
        assert_eq!(s.complement().to_vec(), vec![1, 2, 4]);
        assert_eq!(VertexSet::full(5).len(), 5);
        assert_eq!(low_mask(WORD_BITS), Word::MAX);
    }

    #[test]
    #[should_panic]
    fn from_bits_rejects_out_of_range() {
        VertexSet::from_bits(3, 0b1000);
    }

    #[test]
    fn serializes_as_index_array() {
        let s = VertexSet::from_vertices(6, [4, 1]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,4]");
    }
}
