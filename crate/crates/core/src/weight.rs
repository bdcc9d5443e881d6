use alloc::vec::Vec;
use core::fmt;

use crate::index_set::check_rank;
use crate::{Error, Result};

/// An integral weight `Σ a_i ω_i` of `sl(n)`, stored by its fundamental
/// coordinates `a_1, ..., a_{n-1}`.
///
/// Shapes of Young diagrams are dominant weights: `a_s` counts the columns
/// of height `s`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    /// Weight of `sl(n)` with the given fundamental coordinates; `n` is
    /// `coords.len() + 1`.
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        check_rank(coords.len() + 1)?;
        Ok(Weight { coords })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Weight::new(alloc::vec![0; n.saturating_sub(1)])
    }

    /// The fundamental weight `ω_s`.
    pub fn fundamental(n: usize, s: usize) -> Result<Self> {
        let mut w = Weight::zero(n)?;
        if s == 0 || s >= n {
            return Err(Error::InvalidWeight(alloc::format!("no fundamental weight ω{s} for n = {n}")));
        }
        w.coords[s - 1] = 1;
        Ok(w)
    }

    /// Weight from multiplicities `c_i` of the index `i` (the θ-form
    /// `Σ c_i θ_i`, taken modulo `Σ θ_i`).
    pub fn from_theta(counts: &[i64]) -> Result<Self> {
        check_rank(counts.len())?;
        Weight::new(counts.windows(2).map(|w| w[0] - w[1]).collect())
    }

    pub fn n(&self) -> usize {
        self.coords.len() + 1
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// `a_s`, 1-based.
    pub fn get(&self, s: usize) -> i64 {
        self.coords[s - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&a| a >= 0)
    }

    /// Number of boxes of the Young diagram, `Σ s · a_s`.
    pub fn box_count(&self) -> i64 {
        self.coords.iter().enumerate().map(|(i, &a)| (i as i64 + 1) * a).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Weight) -> bool {
        self.n() == other.n() && self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// Row lengths `λ_i = a_i + ... + a_{n-1}` (the θ coordinates, with
    /// `λ_n = 0`).
    pub fn theta(&self) -> Vec<i64> {
        let mut out = alloc::vec![0i64; self.n()];
        for i in (0..self.coords.len()).rev() {
            out[i] = out[i + 1] + self.coords[i];
        }
        out
    }

    /// Dominant weight of the transposed diagram, `(a_{n-1}, ..., a_1)`.
    pub fn transpose(&self) -> Weight {
        Weight { coords: self.coords.iter().rev().copied().collect() }
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.same_rank(other)?;
        Ok(Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() })
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.same_rank(other)?;
        Ok(Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() })
    }

    /// The root `θ_i - θ_j`.
    pub fn root(n: usize, i: usize, j: usize) -> Result<Weight> {
        check_rank(n)?;
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::InvalidWeight(alloc::format!("no root θ{i} - θ{j} for n = {n}")));
        }
        let mut counts = alloc::vec![0i64; n];
        counts[i - 1] += 1;
        counts[j - 1] -= 1;
        Weight::from_theta(&counts)
    }

    fn same_rank(&self, other: &Weight) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.n(), other.n()))
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn theta_round_trip() {
        let w = Weight::new(vec![1, 0, 2]).unwrap();
        assert_eq!(w.theta(), vec![3, 2, 2, 0]);
        assert_eq!(Weight::from_theta(&w.theta()).unwrap(), w);
        assert_eq!(w.box_count(), 7);
        assert_eq!(w.transpose().coords(), &[2, 0, 1]);
    }

    #[test]
    fn roots() {
        assert_eq!(Weight::root(3, 1, 2).unwrap().coords(), &[2, -1]);
        assert_eq!(Weight::root(3, 1, 3).unwrap().coords(), &[1, 1]);
    }
}
