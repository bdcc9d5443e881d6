use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use super::{DeltaVariable, Monomial};
use crate::index_set::check_rank;
use crate::{Error, Result};

/// The available term orders.
///
/// All of them put shorter columns first (height one is greatest). Within a
/// height the entries are compared from the last one downward; `ShapeLex`
/// makes the smaller index greater, the others the larger index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum OrderKind {
    /// Pure lexicographic order.
    ShapeLex,
    /// Degree, then reverse lexicographic.
    ShapeGrevlex,
    /// Number of non-trivial factors, then degree, then reverse
    /// lexicographic.
    ReducedGraded,
    /// `ShapeLex` after the reflection `i -> n+1-i`.
    AntiShapeLex,
    /// `ReducedGraded` after the reflection, counting non-anti-trivial
    /// factors.
    AntiReducedGraded,
}

impl OrderKind {
    pub const ALL: [OrderKind; 5] = [
        OrderKind::ShapeLex,
        OrderKind::ShapeGrevlex,
        OrderKind::ReducedGraded,
        OrderKind::AntiShapeLex,
        OrderKind::AntiReducedGraded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::ShapeLex => "shape_lex",
            OrderKind::ShapeGrevlex => "shape_grevlex",
            OrderKind::ReducedGraded => "reduced_graded",
            OrderKind::AntiShapeLex => "anti_shape_lex",
            OrderKind::AntiReducedGraded => "anti_reduced_graded",
        }
    }

    fn is_anti(self) -> bool {
        matches!(self, OrderKind::AntiShapeLex | OrderKind::AntiReducedGraded)
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        OrderKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::Parse(alloc::format!("unknown order {s:?}")))
    }
}

/// A term order on monomials in the delta variables of rank `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MonomialOrder {
    kind: OrderKind,
    n: usize,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(MonomialOrder { kind, n })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Variable comparison; `Greater` means `a` is the larger variable.
    pub fn compare_variables(&self, a: &DeltaVariable, b: &DeltaVariable) -> Ordering {
        let (sa, sb) =
            if self.kind.is_anti() { (a.set().reflect().1, b.set().reflect().1) } else { (a.set(), b.set()) };
        let by_height = sb.len().cmp(&sa.len());
        if by_height != Ordering::Equal {
            return by_height;
        }
        let from_top = sa.cmp_from_top(&sb);
        match self.kind {
            OrderKind::ShapeLex | OrderKind::AntiShapeLex => from_top.reverse(),
            _ => from_top,
        }
    }

    /// Like [`MonomialOrder::compare_variables`], rejecting other ranks.
    pub fn checked_compare_variables(&self, a: &DeltaVariable, b: &DeltaVariable) -> Result<Ordering> {
        for v in [a, b] {
            if v.n() != self.n {
                return Err(Error::RankMismatch(self.n, v.n()));
            }
        }
        Ok(self.compare_variables(a, b))
    }

    /// Monomial comparison; `Greater` means `a` is the larger monomial.
    pub fn compare_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::ShapeLex | OrderKind::AntiShapeLex => self.lex(a, b),
            OrderKind::ShapeGrevlex => a.degree().cmp(&b.degree()).then_with(|| self.revlex(a, b)),
            OrderKind::ReducedGraded | OrderKind::AntiReducedGraded => self
                .nontrivial_degree(a)
                .cmp(&self.nontrivial_degree(b))
                .then_with(|| a.degree().cmp(&b.degree()))
                .then_with(|| self.revlex(a, b)),
        }
    }

    pub fn checked_compare_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if let Some(v) = m.variables().find(|v| v.n() != self.n) {
                return Err(Error::RankMismatch(self.n, v.n()));
            }
        }
        Ok(self.compare_monomials(a, b))
    }

    /// Degree counting only the factors that survive the reduction
    /// (non-trivial, or non-anti-trivial for the anti orders).
    pub fn nontrivial_degree(&self, m: &Monomial) -> u32 {
        let anti = self.kind.is_anti();
        m.iter().filter(|(v, _)| if anti { !v.is_anti_trivial() } else { !v.is_trivial() }).map(|(_, e)| e).sum()
    }

    fn sorted_desc<'a>(&self, m: &'a Monomial) -> Vec<(&'a DeltaVariable, u32)> {
        let mut v: Vec<_> = m.iter().collect();
        v.sort_by(|x, y| self.compare_variables(y.0, x.0));
        v
    }

    fn lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (va, vb) = (self.sorted_desc(a), self.sorted_desc(b));
        let mut i = 0;
        loop {
            match (va.get(i), vb.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(x, ex)), Some(&(y, ey))) => match self.compare_variables(x, y) {
                    Ordering::Equal if ex == ey => i += 1,
                    Ordering::Equal => return ex.cmp(&ey),
                    other => return other,
                },
            }
        }
    }

    /// Reverse lexicographic tie-break: the larger exponent on the smallest
    /// distinguishing variable makes the monomial smaller.
    fn revlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (mut va, mut vb) = (self.sorted_desc(a), self.sorted_desc(b));
        va.reverse();
        vb.reverse();
        let mut i = 0;
        loop {
            match (va.get(i), vb.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some(&(x, ex)), Some(&(y, ey))) => match self.compare_variables(x, y) {
                    Ordering::Equal if ex == ey => i += 1,
                    Ordering::Equal => return ey.cmp(&ex),
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                },
            }
        }
    }
}
