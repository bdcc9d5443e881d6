use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::index_set::check_rank;
use crate::tableaux::Column;
use crate::{Error, IndexSet, Result};

/// The minor `δ^{(s)}_I` on rows `I` and columns `1..s`, with `|I| = s < n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaVariable(IndexSet);

const LETTERS_2: [(&[usize], char); 1] = [(&[2], 'X')];
const LETTERS_3: [(&[usize], char); 4] = [(&[2], 'X'), (&[3], 'U'), (&[1, 3], 'Y'), (&[2, 3], 'E')];
const LETTERS_4: [(&[usize], char); 11] = [
    (&[2], 'X'),
    (&[3], 'U'),
    (&[4], 'A'),
    (&[1, 3], 'Y'),
    (&[1, 4], 'V'),
    (&[2, 3], 'E'),
    (&[2, 4], 'D'),
    (&[3, 4], 'B'),
    (&[1, 2, 4], 'Z'),
    (&[1, 3, 4], 'W'),
    (&[2, 3, 4], 'C'),
];

fn letter_table(n: usize) -> &'static [(&'static [usize], char)] {
    match n {
        2 => &LETTERS_2,
        3 => &LETTERS_3,
        4 => &LETTERS_4,
        _ => &[],
    }
}

impl DeltaVariable {
    pub fn new(n: usize, indices: &[usize]) -> Result<Self> {
        DeltaVariable::from_set(IndexSet::new(n, indices)?)
    }

    pub fn from_set(set: IndexSet) -> Result<Self> {
        if set.is_empty() || set.len() >= set.n() {
            return Err(Error::InvalidIndexSet {
                n: set.n(),
                indices: set.to_vec(),
                reason: "a variable needs 1 <= |I| < n",
            });
        }
        Ok(DeltaVariable(set))
    }

    pub fn set(&self) -> IndexSet {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.0.to_vec()
    }

    /// `I = {1, ..., s}`: the variable is set to one in the reduced ring.
    pub fn is_trivial(&self) -> bool {
        self.0.is_initial()
    }

    /// `I = {n+1-s, ..., n}`.
    pub fn is_anti_trivial(&self) -> bool {
        self.0.is_terminal()
    }

    /// Canonical name such as `d2_13`; for `n >= 10` the indices are
    /// separated by underscores (`d2_3_11`).
    pub fn name(&self) -> String {
        let sep = if self.n() >= 10 { "_" } else { "" };
        let parts: Vec<String> = self.0.iter().map(|i| alloc::format!("{i}")).collect();
        alloc::format!("d{}_{}", self.height(), parts.join(sep))
    }

    /// Inverse of [`DeltaVariable::name`].
    pub fn parse(n: usize, name: &str) -> Result<Self> {
        let bad = || Error::Parse(alloc::format!("cannot read variable {name:?} for n = {n}"));
        let body = name.strip_prefix('d').ok_or_else(bad)?;
        let (height, rest) = body.split_once('_').ok_or_else(bad)?;
        let height: usize = height.parse().map_err(|_| bad())?;
        let indices: Vec<usize> = if rest.contains('_') || n >= 10 {
            rest.split('_').map(|t| t.parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            rest.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        if indices.len() != height {
            return Err(bad());
        }
        DeltaVariable::new(n, &indices)
    }

    /// Letter alias used for `n <= 4` (`X, U, A, Y, V, E, D, B, Z, W, C`).
    pub fn letter(&self) -> Option<char> {
        let idx = self.indices();
        letter_table(self.n()).iter().find(|(set, _)| *set == &idx[..]).map(|&(_, c)| c)
    }

    pub fn from_letter(n: usize, letter: char) -> Result<Self> {
        let (set, _) = letter_table(n)
            .iter()
            .find(|&&(_, c)| c == letter)
            .ok_or_else(|| Error::Parse(alloc::format!("no variable named {letter:?} for n = {n}")))?;
        DeltaVariable::new(n, set)
    }
}

impl fmt::Debug for DeltaVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for DeltaVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// All `2^n - 2` variables for rank `n`, ascending in the container order.
pub fn all_variables(n: usize) -> Result<Vec<DeltaVariable>> {
    check_rank(n)?;
    let mut vars: Vec<DeltaVariable> =
        (1u32..(1u32 << n) - 1).map(|bits| DeltaVariable(IndexSet::from_bits(n, bits))).collect();
    vars.sort();
    Ok(vars)
}

/// The column picturing a variable.
pub fn column_for_variable(v: &DeltaVariable) -> Column {
    Column::from_set(v.0).expect("variables are non-empty")
}

/// The variable of a column; fails for columns of height `n`.
pub fn variable_for_column(c: &Column) -> Result<DeltaVariable> {
    DeltaVariable::from_set(c.set())
}
