use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A subset of `{0, .., n-1}` for a fixed universe size `n`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

pub(crate) fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.words[v / 64] |= 1 << (v % 64);
        }
        set
    }

    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            set.words[v / 64] |= 1 << (v % 64);
        }
        Ok(set)
    }

    /// Builds a set from a bitmask; bits at or above `universe` are dropped.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64, "mask sets need a universe of at most 64");
        let mut set = Self::empty(universe);
        if universe > 0 {
            let keep = if universe == 64 {
                u64::MAX
            } else {
                (1u64 << universe) - 1
            };
            set.words[0] = mask & keep;
        }
        set
    }

    /// The bitmask of this set, when the universe fits in one word.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.universe {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.universe,
            });
        }
        self.words[v / 64] |= 1 << (v % 64);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| BitIter(w).map(move |b| i * 64 + b))
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(&a, &b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(&a, &b)| a & !b == 0)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Iterates the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
