//! Young tableaux as products of columns, semistandard and quasi-standard
//! predicates, and the extraction of trivial columns.
//!
//! A tableau is stored as its multiset of columns in canonical order:
//! heights decreasing, and equal heights compared from the bottom entry
//! upward with the smaller column first. Two tableaux differing by a
//! permutation of equal-height columns are the same value, matching the
//! commutativity of the monomial `δ^T`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::index_set::check_rank;
use crate::polyring::{Monomial, MonomialOrder, OrderKind};
use crate::{Error, IndexSet, Result, Weight};

/// A column of a Young tableau: strictly increasing entries from `1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column(IndexSet);

impl Column {
    pub fn new(n: usize, entries: &[usize]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidTableau("empty column".to_string()));
        }
        Ok(Column(IndexSet::new(n, entries)?))
    }

    pub fn from_set(set: IndexSet) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::InvalidTableau("empty column".to_string()));
        }
        Ok(Column(set))
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

    pub fn entries(&self) -> Vec<usize> {
        self.0.to_vec()
    }

    /// `(1, 2, ..., s)`.
    pub fn is_trivial(&self) -> bool {
        self.0.is_initial()
    }

    /// `(n+1-s, ..., n)`.
    pub fn is_anti_trivial(&self) -> bool {
        self.0.is_terminal()
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// Canonical left-to-right column order.
pub fn canonical_cmp(a: &Column, b: &Column) -> Ordering {
    b.height().cmp(&a.height()).then_with(|| a.0.cmp_from_top(&b.0))
}

/// A Young tableau whose columns all have height `< n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungTableau {
    n: u8,
    columns: Vec<Column>,
}

impl YoungTableau {
    /// Builds a tableau from columns in any order. Columns of height `n`
    /// are erased since their minor is the determinant.
    pub fn new(n: usize, columns: Vec<Column>) -> Result<Self> {
        check_rank(n)?;
        let mut kept = Vec::with_capacity(columns.len());
        for c in columns {
            if c.n() != n {
                return Err(Error::RankMismatch(n, c.n()));
            }
            if c.height() < n {
                kept.push(c);
            }
        }
        kept.sort_by(canonical_cmp);
        Ok(YoungTableau { n: n as u8, columns: kept })
    }

    pub fn empty(n: usize) -> Result<Self> {
        YoungTableau::new(n, Vec::new())
    }

    /// Convenience constructor from column entry lists.
    pub fn from_columns(n: usize, columns: &[&[usize]]) -> Result<Self> {
        let cols = columns.iter().map(|c| Column::new(n, c)).collect::<Result<Vec<_>>>()?;
        YoungTableau::new(n, cols)
    }

    /// Builds a tableau from its rows (top row first). Row lengths must be
    /// non-increasing and columns strictly increasing.
    pub fn from_rows(n: usize, rows: &[Vec<usize>]) -> Result<Self> {
        check_rank(n)?;
        for w in rows.windows(2) {
            if w[1].len() > w[0].len() {
                return Err(Error::InvalidTableau("row lengths must be non-increasing".to_string()));
            }
        }
        let width = rows.first().map_or(0, |r| r.len());
        let mut cols = Vec::with_capacity(width);
        for j in 0..width {
            let entries: Vec<usize> = rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect();
            let col = Column::new(n, &entries).map_err(|_| {
                Error::InvalidTableau(alloc::format!("column {} is not strictly increasing in 1..={n}", j + 1))
            })?;
            cols.push(col);
        }
        YoungTableau::new(n, cols)
    }

    /// Parses either the row form `"1 2 3/3 4"` or the column form
    /// `"cols[(1,3),(2,4),(3)]"`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(body) = text.strip_prefix("cols[").and_then(|t| t.strip_suffix(']')) {
            let mut cols = Vec::new();
            let mut rest = body.trim();
            while !rest.is_empty() {
                let open = rest.strip_prefix('(').ok_or_else(|| parse_err(text))?;
                let close = open.find(')').ok_or_else(|| parse_err(text))?;
                let entries = parse_numbers(&open[..close], ',').ok_or_else(|| parse_err(text))?;
                cols.push(Column::new(n, &entries)?);
                rest = open[close + 1..].trim_start();
                rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
            }
            return YoungTableau::new(n, cols);
        }
        if text.is_empty() {
            return YoungTableau::empty(n);
        }
        let rows = text
            .split('/')
            .map(|r| parse_numbers(r, ' ').ok_or_else(|| parse_err(text)))
            .collect::<Result<Vec<_>>>()?;
        YoungTableau::from_rows(n, &rows)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// `a_s` = number of columns of height `s`.
    pub fn shape(&self) -> Weight {
        let mut coords = alloc::vec![0i64; self.n() - 1];
        for c in &self.columns {
            coords[c.height() - 1] += 1;
        }
        Weight::new(coords).expect("rank checked at construction")
    }

    /// Rows, top first.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let depth = self.columns.first().map_or(0, |c| c.height());
        let mut rows = alloc::vec![Vec::new(); depth];
        for c in &self.columns {
            for (i, e) in c.set().iter().enumerate() {
                rows[i].push(e);
            }
        }
        rows
    }

    /// Entry in row `i`, column `j` (both 1-based).
    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        self.columns.get(j.checked_sub(1)?)?.set().iter().nth(i.checked_sub(1)?)
    }

    pub fn has_trivial_column(&self) -> bool {
        self.columns.iter().any(Column::is_trivial)
    }

    pub fn without_trivial_columns(&self) -> YoungTableau {
        YoungTableau { n: self.n, columns: self.columns.iter().copied().filter(|c| !c.is_trivial()).collect() }
    }

    /// Multiset union of columns.
    pub fn concat(&self, other: &YoungTableau) -> Result<YoungTableau> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        let mut cols = self.columns.clone();
        cols.extend_from_slice(&other.columns);
        YoungTableau::new(self.n(), cols)
    }

    /// `cols[(1,3),(2,4),(3)]`.
    pub fn column_notation(&self) -> String {
        let mut s = String::from("cols[");
        for (k, c) in self.columns.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{c:?}"));
        }
        s.push(']');
        s
    }
}

fn parse_err(text: &str) -> Error {
    Error::Parse(alloc::format!("cannot read tableau {text:?}"))
}

fn parse_numbers(text: &str, sep: char) -> Option<Vec<usize>> {
    text.split(sep).filter(|t| !t.trim().is_empty()).map(|t| t.trim().parse().ok()).collect()
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (k, e) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.column_notation())
    }
}

/// Rows weakly increase left to right in canonical order.
pub fn is_semistandard(t: &YoungTableau) -> bool {
    t.columns.windows(2).all(|w| row_compatible(&w[0], &w[1]))
}

/// `left` may stand directly left of `right` in a semistandard tableau.
pub fn row_compatible(left: &Column, right: &Column) -> bool {
    left.height() >= right.height() && left.set().iter().zip(right.set().iter()).all(|(a, b)| a <= b)
}

/// First row where the pair violates semistandardness, 1-based.
pub fn violation_row(left: &Column, right: &Column) -> Option<usize> {
    left.set().iter().zip(right.set().iter()).position(|(a, b)| a > b).map(|r| r + 1)
}

/// The smallest `j` and, for it, the largest `s` making `t` reducible.
///
/// Reducible at `(j, s)` means: column `j` starts with `1..s`, some column at
/// or after `j` has height exactly `s`, and for every later column `k` with
/// `c_{k-1} > s` and `c_k >= s` the entry below the cut in column `k-1`
/// exceeds the cut entry of column `k`.
pub fn is_reducible(t: &YoungTableau) -> Option<(usize, usize)> {
    let heights: Vec<usize> = t.columns.iter().map(Column::height).collect();
    let cols: Vec<Vec<usize>> = t.columns.iter().map(Column::entries).collect();
    for j in 0..cols.len() {
        for s in (1..=heights[j]).rev() {
            if cols[j][s - 1] != s {
                continue;
            }
            if !heights[j..].contains(&s) {
                continue;
            }
            let shifts_ok = (j + 1..cols.len())
                .filter(|&k| heights[k - 1] > s && heights[k] >= s)
                .all(|k| cols[k - 1][s] > cols[k][s - 1]);
            if shifts_ok {
                return Some((j + 1, s));
            }
        }
    }
    None
}

/// Semistandard and irreducible.
pub fn is_quasi_standard(t: &YoungTableau) -> bool {
    is_semistandard(t) && is_reducible(t).is_none()
}

/// A pair `(L, R)` with `L` made of trivial columns and `R` irreducible.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperTableau {
    left: YoungTableau,
    right: YoungTableau,
}

impl SuperTableau {
    pub fn new(left: YoungTableau, right: YoungTableau) -> Result<Self> {
        if left.n() != right.n() {
            return Err(Error::RankMismatch(left.n(), right.n()));
        }
        if !left.columns.iter().all(Column::is_trivial) {
            return Err(Error::InvalidTableau(alloc::format!("left part {left:?} has a non-trivial column")));
        }
        if is_reducible(&right).is_some() {
            return Err(Error::InvalidTableau(alloc::format!("right part {right:?} is reducible")));
        }
        Ok(SuperTableau { left, right })
    }

    pub fn left(&self) -> &YoungTableau {
        &self.left
    }

    pub fn right(&self) -> &YoungTableau {
        &self.right
    }
}

impl fmt::Debug for SuperTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} | {:?})", self.left, self.right)
    }
}

/// One extraction step at `(j, s)`: drop the top `s` entries of column `j`
/// and shift the first `s` rows of the later columns left.
fn extract_once(t: &YoungTableau, j: usize, s: usize) -> Result<YoungTableau> {
    let mut rows = t.rows();
    for row in rows.iter_mut().take(s) {
        row.remove(j - 1);
    }
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    YoungTableau::from_rows(t.n(), &rows)
}

/// The map `f`: repeatedly extracts trivial columns until the remainder is
/// irreducible. Returns the pair and the `(j, s)` of every step.
pub fn extract_trivial_columns(t: &YoungTableau) -> Result<(SuperTableau, Vec<(usize, usize)>)> {
    let n = t.n();
    let mut current = t.clone();
    let mut left = Vec::new();
    let mut steps = Vec::new();
    while let Some((j, s)) = is_reducible(&current) {
        current = extract_once(&current, j, s)?;
        left.push(Column::from_set(IndexSet::initial(n, s)?)?);
        steps.push((j, s));
    }
    let pair = SuperTableau::new(YoungTableau::new(n, left)?, current)?;
    Ok((pair, steps))
}

/// The map `g`: row `i` of the result is `i` repeated once per trivial
/// column of height `>= i`, followed by row `i` of `R`.
pub fn insert_trivial_columns(st: &SuperTableau) -> Result<YoungTableau> {
    let n = st.left.n();
    let lrows = st.left.rows();
    let rrows = st.right.rows();
    let depth = lrows.len().max(rrows.len());
    let mut rows = Vec::with_capacity(depth);
    for i in 0..depth {
        let mut row = lrows.get(i).cloned().unwrap_or_default();
        row.extend_from_slice(rrows.get(i).map_or(&[][..], |r| &r[..]));
        rows.push(row);
    }
    YoungTableau::from_rows(n, &rows)
}

/// All `s`-subsets of `1..=n` as columns, in increasing [`IndexSet`] order.
pub fn columns_of_height(n: usize, s: usize) -> Result<Vec<Column>> {
    check_rank(n)?;
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << n) {
        if bits.count_ones() as usize == s {
            out.push(Column(IndexSet::from_bits(n, bits)));
        }
    }
    out.sort();
    Ok(out)
}

/// Every tableau of the given shape satisfying `keep`, ascending in the
/// full-ring `shape_lex` order.
pub fn enumerate_tableaux(shape: &Weight, n: usize, keep: impl Fn(&YoungTableau) -> bool) -> Result<Vec<YoungTableau>> {
    if shape.n() != n {
        return Err(Error::RankMismatch(n, shape.n()));
    }
    if !shape.is_dominant() {
        return Err(Error::InvalidWeight(alloc::format!("shape {shape} is not dominant")));
    }
    let mut partial: Vec<Vec<Column>> = alloc::vec![Vec::new()];
    for s in 1..n {
        let count = shape.get(s) as usize;
        let choices = columns_of_height(n, s)?;
        let multisets = multisets(&choices, count);
        let mut next = Vec::with_capacity(partial.len() * multisets.len());
        for p in &partial {
            for m in &multisets {
                let mut cols = p.clone();
                cols.extend_from_slice(m);
                next.push(cols);
            }
        }
        partial = next;
    }
    let mut out = Vec::new();
    for cols in partial {
        let t = YoungTableau::new(n, cols)?;
        if keep(&t) {
            out.push(t);
        }
    }
    let order = MonomialOrder::new(OrderKind::ShapeLex, n)?;
    let mut keyed: Vec<(Monomial, YoungTableau)> = out.into_iter().map(|t| (Monomial::from_tableau(&t), t)).collect();
    keyed.sort_by(|a, b| order.compare_monomials(&a.0, &b.0));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

fn multisets(choices: &[Column], size: usize) -> Vec<Vec<Column>> {
    fn go(choices: &[Column], start: usize, size: usize, cur: &mut Vec<Column>, out: &mut Vec<Vec<Column>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for k in start..choices.len() {
            cur.push(choices[k]);
            go(choices, k, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(choices, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Adds trivial columns until the shape is `target`.
pub fn complete_to_shape(t: &YoungTableau, target: &Weight) -> Result<YoungTableau> {
    let n = t.n();
    if target.n() != n {
        return Err(Error::RankMismatch(n, target.n()));
    }
    let shape = t.shape();
    if !shape.le(target) {
        return Err(Error::InvalidWeight(alloc::format!("shape {shape} does not fit inside {target}")));
    }
    let mut cols = t.columns.clone();
    for s in 1..n {
        for _ in 0..(target.get(s) - shape.get(s)) {
            cols.push(Column(IndexSet::initial(n, s)?));
        }
    }
    YoungTableau::new(n, cols)
}

/// A phase `sign · ε_n^k`, where `ε_n = e^{iπ/n}` when `⌊n/2⌋` is odd and
/// `ε_n = 1` otherwise. The exponent is kept modulo `2n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Phase {
    n: u8,
    sign: i8,
    eps_power: u32,
}

impl Phase {
    pub fn identity(n: usize) -> Self {
        Phase { n: n as u8, sign: 1, eps_power: 0 }
    }

    pub fn new(n: usize, sign: i8, eps_power: u32) -> Self {
        let mut p = Phase { n: n as u8, sign: if sign < 0 { -1 } else { 1 }, eps_power: 0 };
        p.add_eps(eps_power);
        p
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn eps_power(&self) -> u32 {
        self.eps_power
    }

    /// Whether `ε_n` is a nontrivial root of unity.
    pub fn eps_is_nontrivial(n: usize) -> bool {
        (n / 2) % 2 == 1
    }

    fn add_eps(&mut self, k: u32) {
        let n = self.n as u32;
        self.eps_power = if Phase::eps_is_nontrivial(self.n as usize) { (self.eps_power + k) % (2 * n) } else { 0 };
    }
}

impl core::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, other: Phase) -> Phase {
        let mut p = Phase { n: self.n, sign: self.sign * other.sign, eps_power: self.eps_power };
        p.add_eps(other.eps_power);
        p
    }
}

/// The symmetry `τ`: every entry `i` becomes `n+1-i`, each column is
/// re-sorted (collecting the permutation sign) and contributes `ε_n^s`.
pub fn tau_tableau(t: &YoungTableau) -> (Phase, YoungTableau) {
    let n = t.n();
    let mut phase = Phase::identity(n);
    let mut cols = Vec::with_capacity(t.width());
    for c in &t.columns {
        let (sign, set) = c.0.reflect();
        phase = phase * Phase::new(n, sign, c.height() as u32);
        cols.push(Column(set));
    }
    (phase, YoungTableau::new(n, cols).expect("reflection preserves heights"))
}
