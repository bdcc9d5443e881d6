use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::variable::{column_for_variable, variable_for_column, DeltaVariable};
use crate::tableaux::YoungTableau;
use crate::{Error, Result};

/// A product of delta variables with positive exponents.
///
/// The derived ordering is only a container order; use
/// [`MonomialOrder`](super::MonomialOrder) for term orders.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: BTreeMap<DeltaVariable, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: DeltaVariable) -> Self {
        Monomial::pow(v, 1)
    }

    pub fn pow(v: DeltaVariable, e: u32) -> Self {
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(v, e);
        }
        Monomial { exps }
    }

    pub fn from_vars(vars: impl IntoIterator<Item = DeltaVariable>) -> Self {
        let mut m = Monomial::one();
        for v in vars {
            *m.exps.entry(v).or_insert(0) += 1;
        }
        m
    }

    /// `δ^T`: one variable per column.
    pub fn from_tableau(t: &YoungTableau) -> Self {
        Monomial::from_vars(
            t.columns().iter().map(|c| variable_for_column(c).expect("tableau columns have height < n")),
        )
    }

    /// The tableau picturing this monomial.
    pub fn tableau(&self, n: usize) -> Result<YoungTableau> {
        if let Some(v) = self.exps.keys().find(|v| v.n() != n) {
            return Err(Error::RankMismatch(n, v.n()));
        }
        let cols =
            self.exps.iter().flat_map(|(v, &e)| core::iter::repeat(column_for_variable(v)).take(e as usize)).collect();
        YoungTableau::new(n, cols)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: &DeltaVariable) -> u32 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    /// `(variable, exponent)` pairs in container order.
    pub fn iter(&self) -> impl Iterator<Item = (&DeltaVariable, u32)> + '_ {
        self.exps.iter().map(|(v, &e)| (v, e))
    }

    pub fn variables(&self) -> impl Iterator<Item = &DeltaVariable> + '_ {
        self.exps.keys()
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    /// Rank of the variables, if any.
    pub fn n(&self) -> Option<usize> {
        self.exps.keys().next().map(DeltaVariable::n)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, &e) in &other.exps {
            *exps.entry(*v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, &e)| other.exponent(v) >= e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = self.exps.clone();
        for (v, &e) in &other.exps {
            let left = exps[v] - e;
            if left == 0 {
                exps.remove(v);
            } else {
                exps.insert(*v, left);
            }
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, &e) in &other.exps {
            let slot = exps.entry(*v).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial { exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.keys().all(|v| !other.exps.contains_key(v))
    }

    /// Removes every variable matching `drop`.
    pub fn without(&self, drop: impl Fn(&DeltaVariable) -> bool) -> Monomial {
        Monomial { exps: self.exps.iter().filter(|(v, _)| !drop(v)).map(|(v, &e)| (*v, e)).collect() }
    }

    /// Letter word such as `UDW`, largest variable first in the reduced
    /// order; `None` when some variable has no letter.
    pub fn letters(&self) -> Option<String> {
        if self.is_one() {
            return Some(String::from("1"));
        }
        let n = self.n()?;
        let order = super::MonomialOrder::new(super::OrderKind::ReducedGraded, n).ok()?;
        let mut vars: Vec<(&DeltaVariable, u32)> = self.iter().collect();
        vars.sort_by(|a, b| order.compare_variables(b.0, a.0));
        let mut s = String::new();
        for (v, e) in vars {
            let c = v.letter()?;
            for _ in 0..e {
                s.push(c);
            }
        }
        Some(s)
    }

    /// Reads a letter word (`"UDW"`, `"1"` for the unit).
    pub fn parse_letters(n: usize, word: &str) -> Result<Monomial> {
        if word == "1" {
            return Ok(Monomial::one());
        }
        word.chars().map(|c| DeltaVariable::from_letter(n, c)).collect::<Result<Vec<_>>>().map(Monomial::from_vars)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
