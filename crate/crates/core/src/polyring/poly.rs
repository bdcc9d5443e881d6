use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{DeltaVariable, Monomial, MonomialOrder, OrderKind};
use crate::index_set::check_rank;
use crate::{Error, Rational, Result};

/// Which quotient the polynomial lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum RingKind {
    /// All `2^n - 2` minors.
    Full,
    /// Trivial minors `δ_{1..s}` set to one.
    ReducedPlus,
    /// Anti-trivial minors set to one (in the descending row order
    /// `δ_{n, n-1, ..., n+1-s} = 1`).
    ReducedMinus,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Full => "full",
            RingKind::ReducedPlus => "reduced_plus",
            RingKind::ReducedMinus => "reduced_minus",
        }
    }

    /// The order the paper's theorems are stated for.
    pub fn paper_order(self) -> OrderKind {
        match self {
            RingKind::Full => OrderKind::ShapeGrevlex,
            RingKind::ReducedPlus => OrderKind::ReducedGraded,
            RingKind::ReducedMinus => OrderKind::AntiReducedGraded,
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "full" => Ok(RingKind::Full),
            "reduced_plus" | "reduced" => Ok(RingKind::ReducedPlus),
            "reduced_minus" => Ok(RingKind::ReducedMinus),
            _ => Err(Error::Parse(alloc::format!("unknown ring {s:?}"))),
        }
    }
}

/// A polynomial ring in delta variables of rank `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Ring {
    pub kind: RingKind,
    pub n: usize,
}

impl Ring {
    pub fn new(kind: RingKind, n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Ring { kind, n })
    }

    pub fn full(n: usize) -> Result<Self> {
        Ring::new(RingKind::Full, n)
    }

    pub fn reduced_plus(n: usize) -> Result<Self> {
        Ring::new(RingKind::ReducedPlus, n)
    }

    pub fn has_variable(&self, v: &DeltaVariable) -> bool {
        v.n() == self.n
            && match self.kind {
                RingKind::Full => true,
                RingKind::ReducedPlus => !v.is_trivial(),
                RingKind::ReducedMinus => !v.is_anti_trivial(),
            }
    }

    pub fn paper_order(&self) -> MonomialOrder {
        MonomialOrder::new(self.kind.paper_order(), self.n).expect("rank checked")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.kind, self.n)
    }
}

/// A polynomial with exact rational coefficients in the delta variables of
/// one ring. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DeltaPolynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl DeltaPolynomial {
    pub fn zero(ring: Ring) -> Self {
        DeltaPolynomial { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: Ring) -> Self {
        DeltaPolynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: Ring, c: Rational) -> Self {
        let mut p = DeltaPolynomial::zero(ring);
        p.add_term(Monomial::one(), c);
        p
    }

    /// `c · m`; every variable must belong to the ring.
    pub fn term(ring: Ring, m: Monomial, c: Rational) -> Result<Self> {
        if let Some(v) = m.variables().find(|v| !ring.has_variable(v)) {
            return Err(Error::RingMismatch(alloc::format!("{v} is not a variable of {ring}")));
        }
        let mut p = DeltaPolynomial::zero(ring);
        p.add_term(m, c);
        Ok(p)
    }

    pub fn monomial(ring: Ring, m: Monomial) -> Result<Self> {
        DeltaPolynomial::term(ring, m, Rational::one())
    }

    pub fn variable(ring: Ring, v: DeltaVariable) -> Result<Self> {
        DeltaPolynomial::monomial(ring, Monomial::var(v))
    }

    /// Builds from `(coefficient, monomial)` pairs, merging repeats.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Rational, Monomial)>) -> Result<Self> {
        let mut p = DeltaPolynomial::zero(ring);
        for (c, m) in terms {
            p = p.checked_add(&DeltaPolynomial::term(ring, m, c)?)?;
        }
        Ok(p)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self += c · m · other`.
    pub(crate) fn add_scaled(&mut self, c: &Rational, m: &Monomial, other: &DeltaPolynomial) {
        for (om, oc) in &other.terms {
            self.add_term(m.mul(om), c * oc);
        }
    }

    fn same_ring(&self, other: &DeltaPolynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(alloc::format!("{} vs {}", self.ring, other.ring)))
        }
    }

    pub fn checked_add(&self, other: &DeltaPolynomial) -> Result<DeltaPolynomial> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &DeltaPolynomial) -> Result<DeltaPolynomial> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &DeltaPolynomial) -> Result<DeltaPolynomial> {
        self.same_ring(other)?;
        let mut out = DeltaPolynomial::zero(self.ring);
        for (m, c) in &self.terms {
            out.add_scaled(c, m, other);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> DeltaPolynomial {
        let mut out = DeltaPolynomial::zero(self.ring);
        if !c.is_zero() {
            for (m, k) in &self.terms {
                out.terms.insert(m.clone(), k * c);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> DeltaPolynomial {
        DeltaPolynomial { ring: self.ring, terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Terms sorted from the largest monomial down.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare_monomials(b.0, a.0));
        v
    }

    /// Leading monomial and coefficient.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare_monomials(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Result<DeltaPolynomial> {
        let (_, c) = self.leading_term(order)?;
        Ok(self.scale(&c.recip()))
    }

    /// Multiplies by `-1` when the leading coefficient is negative.
    pub fn sign_normalized(&self, order: &MonomialOrder) -> DeltaPolynomial {
        match self.leading_term(order) {
            Ok((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Maps every variable through `f` (a ring homomorphism given on
    /// generators) into `target`.
    pub fn substitute(
        &self,
        target: Ring,
        f: impl Fn(&DeltaVariable) -> Result<DeltaPolynomial>,
    ) -> Result<DeltaPolynomial> {
        let mut cache: BTreeMap<DeltaVariable, DeltaPolynomial> = BTreeMap::new();
        let mut out = DeltaPolynomial::zero(target);
        for (m, c) in &self.terms {
            let mut prod = DeltaPolynomial::constant(target, c.clone());
            for (v, e) in m.iter() {
                if !cache.contains_key(v) {
                    let image = f(v)?;
                    image.same_ring(&prod)?;
                    cache.insert(*v, image);
                }
                for _ in 0..e {
                    prod = prod.checked_mul(&cache[v])?;
                }
            }
            out = out.checked_add(&prod)?;
        }
        Ok(out)
    }

    /// Projection to the reduced ring: trivial minors become one.
    pub fn substitute_trivial(&self) -> Result<DeltaPolynomial> {
        self.expect_kind(RingKind::Full)?;
        let target = Ring::new(RingKind::ReducedPlus, self.ring.n)?;
        Ok(self.project(target, |v| v.is_trivial().then(Rational::one)))
    }

    /// Projection to the mirrored reduced ring: `δ_{n,...,n+1-s} = 1`, so
    /// the sorted anti-trivial minor becomes `(-1)^(s(s-1)/2)`.
    pub fn substitute_anti_trivial(&self) -> Result<DeltaPolynomial> {
        self.expect_kind(RingKind::Full)?;
        let target = Ring::new(RingKind::ReducedMinus, self.ring.n)?;
        Ok(self.project(target, |v| v.is_anti_trivial().then(|| reversal_sign(v.height()))))
    }

    fn project(&self, target: Ring, value: impl Fn(&DeltaVariable) -> Option<Rational>) -> DeltaPolynomial {
        let mut out = DeltaPolynomial::zero(target);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept = Monomial::one();
            for (v, e) in m.iter() {
                match value(v) {
                    Some(x) => {
                        for _ in 0..e {
                            coeff *= &x;
                        }
                    }
                    None => kept = kept.mul(&Monomial::pow(*v, e)),
                }
            }
            out.add_term(kept, coeff);
        }
        out
    }

    /// The reflection `δ_I -> δ_{n+1-I}` taken in the descending row order,
    /// i.e. `δ_I -> (-1)^(s(s-1)/2) δ_{sorted}`. It swaps the two reduced
    /// rings and acts on the full ring.
    pub fn mirror(&self) -> Result<DeltaPolynomial> {
        let target = Ring {
            kind: match self.ring.kind {
                RingKind::Full => RingKind::Full,
                RingKind::ReducedPlus => RingKind::ReducedMinus,
                RingKind::ReducedMinus => RingKind::ReducedPlus,
            },
            n: self.ring.n,
        };
        let mut out = DeltaPolynomial::zero(target);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut image = Monomial::one();
            for (v, e) in m.iter() {
                let (sign, set) = v.set().reflect();
                if sign < 0 && e % 2 == 1 {
                    coeff = -coeff;
                }
                image = image.mul(&Monomial::pow(DeltaVariable::from_set(set)?, e));
            }
            out.add_term(image, coeff);
        }
        Ok(out)
    }

    fn expect_kind(&self, kind: RingKind) -> Result<()> {
        if self.ring.kind == kind {
            Ok(())
        } else {
            Err(Error::RingMismatch(alloc::format!("expected a {kind} polynomial, got {}", self.ring)))
        }
    }

    /// Same coefficients viewed in another ring with the same rank; fails if
    /// a variable is missing from the target.
    pub fn with_ring(&self, ring: Ring) -> Result<DeltaPolynomial> {
        for m in self.terms.keys() {
            if let Some(v) = m.variables().find(|v| !ring.has_variable(v)) {
                return Err(Error::RingMismatch(alloc::format!("{v} is not a variable of {ring}")));
            }
        }
        Ok(DeltaPolynomial { ring, terms: self.terms.clone() })
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms rendered with letter aliases when every variable has one.
    pub fn to_letter_string(&self, order: &MonomialOrder) -> Option<String> {
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let word = m.letters()?;
            push_term(&mut s, k == 0, c, &word, m.is_one());
        }
        if s.is_empty() {
            s.push('0');
        }
        Some(s)
    }

    /// Terms rendered with variable names, largest first.
    pub fn to_display_string(&self, order: &MonomialOrder) -> String {
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            push_term(&mut s, k == 0, c, &alloc::format!("{m}"), m.is_one());
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

fn push_term(s: &mut String, first: bool, c: &Rational, word: &str, is_one: bool) {
    let neg = c.is_negative();
    if first {
        if neg {
            s.push('-');
        }
    } else {
        s.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    if is_one {
        s.push_str(&alloc::format!("{a}"));
    } else if a.is_one() {
        s.push_str(word);
    } else {
        s.push_str(&alloc::format!("{a}*{word}"));
    }
}

pub(crate) fn reversal_sign(s: usize) -> Rational {
    if (s * s.saturating_sub(1) / 2) % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

impl fmt::Debug for DeltaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ring, self.to_display_string(&self.ring.paper_order()))
    }
}

impl fmt::Display for DeltaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_display_string(&self.ring.paper_order()))
    }
}

impl Neg for &DeltaPolynomial {
    type Output = DeltaPolynomial;

    fn neg(self) -> DeltaPolynomial {
        DeltaPolynomial { ring: self.ring, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for DeltaPolynomial {
    type Output = DeltaPolynomial;

    fn neg(self) -> DeltaPolynomial {
        -&self
    }
}

/// Panics on a ring mismatch; use `checked_add` to get an error instead.
impl Add for &DeltaPolynomial {
    type Output = DeltaPolynomial;

    fn add(self, rhs: &DeltaPolynomial) -> DeltaPolynomial {
        self.checked_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

/// Panics on a ring mismatch; use `checked_sub` to get an error instead.
impl Sub for &DeltaPolynomial {
    type Output = DeltaPolynomial;

    fn sub(self, rhs: &DeltaPolynomial) -> DeltaPolynomial {
        self.checked_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

/// Panics on a ring mismatch; use `checked_mul` to get an error instead.
impl Mul for &DeltaPolynomial {
    type Output = DeltaPolynomial;

    fn mul(self, rhs: &DeltaPolynomial) -> DeltaPolynomial {
        self.checked_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}
