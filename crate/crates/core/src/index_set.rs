use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result, MAX_N};

/// A strictly increasing set of row indices drawn from `1..=n`.
///
/// Both tableau columns and delta variables are index sets; the bitmask keeps
/// them `Copy` and makes membership tests cheap.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSet {
    n: u8,
    bits: u32,
}

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if (2..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidRank(n))
    }
}

impl IndexSet {
    /// Builds the set from strictly increasing indices in `1..=n`.
    pub fn new(n: usize, indices: &[usize]) -> Result<Self> {
        check_rank(n)?;
        let mut bits = 0u32;
        let mut prev = 0usize;
        for &i in indices {
            if i == 0 || i > n {
                return Err(invalid(n, indices, "index out of range"));
            }
            if i <= prev {
                return Err(invalid(n, indices, "indices must be strictly increasing"));
            }
            prev = i;
            bits |= 1 << (i - 1);
        }
        Ok(IndexSet { n: n as u8, bits })
    }

    /// Sorts an arbitrary index sequence, returning the sign of the sorting
    /// permutation, or `None` when an index repeats (the minor vanishes).
    pub fn from_unsorted(n: usize, indices: &[usize]) -> Result<Option<(i8, Self)>> {
        check_rank(n)?;
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > n {
                return Err(invalid(n, indices, "index out of range"));
            }
            if bits & (1 << (i - 1)) != 0 {
                return Ok(None);
            }
            bits |= 1 << (i - 1);
        }
        let mut inversions = 0usize;
        for a in 0..indices.len() {
            for b in a + 1..indices.len() {
                if indices[a] > indices[b] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Ok(Some((sign, IndexSet { n: n as u8, bits })))
    }

    pub(crate) fn from_bits(n: usize, bits: u32) -> Self {
        IndexSet { n: n as u8, bits }
    }

    /// The initial segment `{1, ..., s}`.
    pub fn initial(n: usize, s: usize) -> Result<Self> {
        check_rank(n)?;
        if s > n {
            return Err(invalid(n, &[], "segment longer than n"));
        }
        Ok(IndexSet { n: n as u8, bits: low_bits(s) })
    }

    /// The final segment `{n+1-s, ..., n}`.
    pub fn terminal(n: usize, s: usize) -> Result<Self> {
        check_rank(n)?;
        if s > n {
            return Err(invalid(n, &[], "segment longer than n"));
        }
        Ok(IndexSet { n: n as u8, bits: low_bits(s) << (n - s) })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n() && self.bits & (1 << (i - 1)) != 0
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        (1..=self.n()).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `{1, ..., s}` where `s` is the length.
    pub fn is_initial(&self) -> bool {
        self.bits == low_bits(self.len())
    }

    /// `{n+1-s, ..., n}` where `s` is the length.
    pub fn is_terminal(&self) -> bool {
        let s = self.len();
        self.bits == low_bits(s) << (self.n() - s)
    }

    /// Image under `i -> n+1-i`, with the sign of re-sorting the reversed
    /// sequence, `(-1)^(s(s-1)/2)`.
    pub fn reflect(&self) -> (i8, IndexSet) {
        let n = self.n();
        let mut bits = 0u32;
        for i in self.iter() {
            bits |= 1 << (n - i);
        }
        let s = self.len();
        let sign = if (s * (s.saturating_sub(1)) / 2) % 2 == 0 { 1 } else { -1 };
        (sign, IndexSet { n: self.n, bits })
    }

    /// Replaces index `old` by `new` in place, re-sorting. Returns `None` when
    /// `old` is absent or `new` is already present.
    pub fn substitute(&self, old: usize, new: usize) -> Option<(i8, IndexSet)> {
        if !self.contains(old) || self.contains(new) {
            return None;
        }
        let seq: Vec<usize> = self.iter().map(|i| if i == old { new } else { i }).collect();
        IndexSet::from_unsorted(self.n(), &seq).ok().flatten()
    }

    /// Compares entry sequences starting from the last (largest) index.
    pub(crate) fn cmp_from_top(&self, other: &IndexSet) -> Ordering {
        let mut a = self.iter().rev();
        let mut b = other.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                (Some(_), Some(_)) => continue,
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
            }
        }
    }
}

fn low_bits(s: usize) -> u32 {
    if s >= 32 {
        u32::MAX
    } else {
        (1u32 << s) - 1
    }
}

fn invalid(n: usize, indices: &[usize], reason: &'static str) -> Error {
    Error::InvalidIndexSet { n, indices: indices.to_vec(), reason }
}

/// Height first, then the index sequences lexicographically.
impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then(self.len().cmp(&other.len())).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}
