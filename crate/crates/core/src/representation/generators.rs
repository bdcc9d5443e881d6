use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A Chevalley generator of `sl(n)` (or a Cartan element given by its
/// diagonal).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GeneratorLabel {
    /// The elementary matrix `E_{ij}`, `i != j` (1-based). Raising when
    /// `i < j`.
    E(usize, usize),
    /// The diagonal matrix with entries `θ_1(H), ..., θ_n(H)`.
    H(Vec<i64>),
}

impl GeneratorLabel {
    pub fn e(n: usize, i: usize, j: usize) -> Result<Self> {
        let g = GeneratorLabel::E(i, j);
        g.validate(n)?;
        Ok(g)
    }

    /// `X_{α_k} = E_{k,k+1}`.
    pub fn simple_raising(n: usize, k: usize) -> Result<Self> {
        GeneratorLabel::e(n, k, k + 1)
    }

    /// `Y_{α_k} = E_{k+1,k}`.
    pub fn simple_lowering(n: usize, k: usize) -> Result<Self> {
        GeneratorLabel::e(n, k + 1, k)
    }

    /// `H_{α_k} = E_{kk} - E_{k+1,k+1}`.
    pub fn simple_coroot(n: usize, k: usize) -> Result<Self> {
        GeneratorLabel::coroot(n, k, k + 1)
    }

    /// `E_{ii} - E_{jj}`.
    pub fn coroot(n: usize, i: usize, j: usize) -> Result<Self> {
        GeneratorLabel::e(n, i, j)?;
        let mut theta = alloc::vec![0; n];
        theta[i - 1] = 1;
        theta[j - 1] = -1;
        Ok(GeneratorLabel::H(theta))
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            GeneratorLabel::E(i, j) if *i >= 1 && *j >= 1 && *i <= n && *j <= n && i != j => Ok(()),
            GeneratorLabel::H(theta) if theta.len() == n && theta.iter().sum::<i64>() == 0 => Ok(()),
            _ => Err(Error::InadmissibleGenerator(alloc::format!("{self} for n = {n}"))),
        }
    }

    pub fn is_raising(&self) -> bool {
        matches!(self, GeneratorLabel::E(i, j) if i < j)
    }

    pub fn is_lowering(&self) -> bool {
        matches!(self, GeneratorLabel::E(i, j) if i > j)
    }

    /// Image under `τ`: `E_{ij} -> E_{n+1-i, n+1-j}`, `θ` reversed.
    pub fn tau(&self, n: usize) -> GeneratorLabel {
        match self {
            GeneratorLabel::E(i, j) => GeneratorLabel::E(n + 1 - i, n + 1 - j),
            GeneratorLabel::H(theta) => GeneratorLabel::H(theta.iter().rev().copied().collect()),
        }
    }

    /// Reads `e12`, `e:3,11` or `h:1,-1,0`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let bad = || Error::Parse(alloc::format!("cannot read generator {text:?}"));
        let t = text.trim().to_ascii_lowercase();
        let g = if let Some(rest) = t.strip_prefix("h:") {
            GeneratorLabel::H(rest.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?)
        } else if let Some(rest) = t.strip_prefix("e:") {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            GeneratorLabel::E(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
        } else if let Some(rest) = t.strip_prefix('e') {
            let digits: Vec<usize> =
                rest.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(bad)?;
            match digits[..] {
                [i, j] => GeneratorLabel::E(i, j),
                _ => return Err(bad()),
            }
        } else {
            return Err(bad());
        };
        g.validate(n)?;
        Ok(g)
    }

    pub fn label(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorLabel::E(i, j) if *i < 10 && *j < 10 => write!(f, "e{i}{j}"),
            GeneratorLabel::E(i, j) => write!(f, "e:{i},{j}"),
            GeneratorLabel::H(theta) => {
                write!(f, "h:")?;
                for (k, t) in theta.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
        }
    }
}
