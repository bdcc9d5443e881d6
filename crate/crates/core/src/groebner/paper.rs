use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use super::{buchberger, reduce, GroebnerBasis};
use crate::plucker_ideals::{generating_set, plucker_relation, PluckerSpec};
use crate::polyring::{DeltaPolynomial, Monomial, Ring, RingKind};
use crate::tableaux::{is_quasi_standard, is_reducible, is_semistandard, violation_row, Column, YoungTableau};
use crate::{Error, Rational, Result};

/// Cap on rewriting steps; the procedures terminate in theory, this turns
/// a bug into an error instead of a hang.
const STEP_LIMIT: usize = 200_000;

/// Groebner bases of the shape algebras of one rank, computed once and
/// shared by every operation that needs normal forms.
#[derive(Clone, Debug)]
pub struct ShapeContext {
    n: usize,
    reduced: GroebnerBasis,
    mirrored: GroebnerBasis,
    full: Option<GroebnerBasis>,
}

impl ShapeContext {
    /// Computes the reduced basis only.
    pub fn new(n: usize) -> Result<Self> {
        let reduced = buchberger(&generating_set(n, RingKind::ReducedPlus)?, RingKind::ReducedPlus.paper_order())?;
        ShapeContext::from_bases(reduced, None)
    }

    /// Computes both the reduced and the full basis.
    pub fn with_full(n: usize) -> Result<Self> {
        let full = buchberger(&generating_set(n, RingKind::Full)?, RingKind::Full.paper_order())?;
        let mut ctx = ShapeContext::new(n)?;
        ctx.full = Some(full);
        Ok(ctx)
    }

    /// Builds the context from bases computed elsewhere. The mirrored basis
    /// is the image of the reduced one under the reflection.
    pub fn from_bases(reduced: GroebnerBasis, full: Option<GroebnerBasis>) -> Result<Self> {
        let n = reduced.ring().n;
        if reduced.ring().kind != RingKind::ReducedPlus || reduced.order().kind() != RingKind::ReducedPlus.paper_order()
        {
            return Err(Error::RingMismatch(alloc::format!("expected the reduced basis, got {}", reduced.ring())));
        }
        if let Some(f) = &full {
            if f.ring() != Ring::full(n)? || f.order().kind() != RingKind::Full.paper_order() {
                return Err(Error::RingMismatch(alloc::format!("expected the full basis, got {}", f.ring())));
            }
        }
        let mirrored = mirror_basis(&reduced)?;
        Ok(ShapeContext { n, reduced, mirrored, full })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The basis for `kind`; the full one only if it was computed.
    pub fn basis(&self, kind: RingKind) -> Result<&GroebnerBasis> {
        match kind {
            RingKind::ReducedPlus => Ok(&self.reduced),
            RingKind::ReducedMinus => Ok(&self.mirrored),
            RingKind::Full => self
                .full
                .as_ref()
                .ok_or_else(|| Error::RingMismatch(alloc::format!("no full-ring basis computed for n = {}", self.n))),
        }
    }
}

/// Image of the reduced basis under `δ_I -> δ_{n+1-I}`; the anti orders are
/// defined so that this is again a reduced Groebner basis.
pub(crate) fn mirror_basis(basis: &GroebnerBasis) -> Result<GroebnerBasis> {
    let ring = Ring::new(RingKind::ReducedMinus, basis.ring().n)?;
    let order = crate::polyring::MonomialOrder::new(RingKind::ReducedMinus.paper_order(), ring.n)?;
    let elements = basis.elements().iter().map(DeltaPolynomial::mirror).collect::<Result<Vec<_>>>()?;
    GroebnerBasis::from_reduced(ring, order, elements)
}

fn full_monomial(t: &YoungTableau) -> Result<DeltaPolynomial> {
    DeltaPolynomial::monomial(Ring::full(t.n())?, Monomial::from_tableau(t))
}

/// `δ_I δ_J` minus the relation for `(I, J, r)`: the exchange terms.
fn exchange_terms(n: usize, i: &Column, j: &Column, r: usize) -> Result<DeltaPolynomial> {
    let spec = PluckerSpec::new(n, &i.entries(), &j.entries(), r)?;
    let rel = plucker_relation(&spec)?;
    let pair = full_monomial(&YoungTableau::new(n, alloc::vec![*i, *j])?)?;
    pair.checked_sub(&rel)
}

fn poly_times_columns(p: &DeltaPolynomial, cols: &[Column]) -> Result<DeltaPolynomial> {
    let n = p.ring().n;
    let rest = YoungTableau::new(n, cols.to_vec())?;
    Ok(p.mul_monomial(&Monomial::from_tableau(&rest)))
}

/// Writes `δ^T` in the semistandard basis of the full ring.
///
/// The first adjacent pair of columns that breaks a row, say at row `r`,
/// is replaced through the relation exchanging the top `r` entries of the
/// right column with `r`-subsets of the left one; every produced tableau is
/// straightened recursively.
pub fn full_straighten(t: &YoungTableau) -> Result<DeltaPolynomial> {
    let mut memo = BTreeMap::new();
    let mut steps = 0usize;
    straighten_rec(t, &mut memo, &mut steps)
}

fn straighten_rec(
    t: &YoungTableau,
    memo: &mut BTreeMap<YoungTableau, DeltaPolynomial>,
    steps: &mut usize,
) -> Result<DeltaPolynomial> {
    if let Some(p) = memo.get(t) {
        return Ok(p.clone());
    }
    *steps += 1;
    if *steps > STEP_LIMIT {
        return Err(Error::IterationLimit(alloc::format!("straightening {t:?}")));
    }
    if is_semistandard(t) {
        return full_monomial(t);
    }
    let n = t.n();
    let cols = t.columns();
    let j = (0..cols.len() - 1).find(|&j| violation_row(&cols[j], &cols[j + 1]).is_some()).expect("not semistandard");
    let r = violation_row(&cols[j], &cols[j + 1]).expect("violation");
    let rest: Vec<Column> = cols.iter().enumerate().filter(|&(k, _)| k != j && k != j + 1).map(|(_, c)| *c).collect();
    let swapped = poly_times_columns(&exchange_terms(n, &cols[j], &cols[j + 1], r)?, &rest)?;
    let mut out = DeltaPolynomial::zero(Ring::full(n)?);
    for (m, c) in swapped.terms() {
        let part = straighten_rec(&m.tableau(n)?, memo, steps)?;
        out = out.checked_add(&part.scale(c))?;
    }
    memo.insert(t.clone(), out.clone());
    Ok(out)
}

/// One rewriting step in the reduced ring for a tableau without trivial
/// columns that is not quasi-standard. The result equals `δ^T` modulo the
/// reduced ideal.
fn reduced_rewrite(t: &YoungTableau) -> Result<DeltaPolynomial> {
    let n = t.n();
    let cols = t.columns();
    if !is_semistandard(t) {
        let j =
            (0..cols.len() - 1).find(|&j| violation_row(&cols[j], &cols[j + 1]).is_some()).expect("not semistandard");
        let pair = YoungTableau::new(n, alloc::vec![cols[j], cols[j + 1]])?;
        let rest: Vec<Column> =
            cols.iter().enumerate().filter(|&(k, _)| k != j && k != j + 1).map(|(_, c)| *c).collect();
        return poly_times_columns(&full_straighten(&pair)?, &rest)?.substitute_trivial();
    }
    let (j, s) = is_reducible(t).ok_or(Error::AlreadyStandard)?;
    // shift the top s entries of each column one step left, starting at j,
    // until a column of height s turns into the trivial column 1..s
    let mut done: Vec<Column> = cols[..j - 1].to_vec();
    let mut current = cols[j - 1];
    let mut acc = DeltaPolynomial::zero(Ring::full(n)?);
    let mut k = j;
    loop {
        let next = cols[k];
        let i_entries = current.entries();
        let j_entries = next.entries();
        let mut moved = j_entries[..s].to_vec();
        moved.extend_from_slice(&i_entries[s..]);
        let mut kept: Vec<usize> = (1..=s).collect();
        kept.extend_from_slice(&j_entries[s..]);
        let new_left = Column::new(n, &moved)?;
        let new_right = Column::new(n, &kept)?;
        let mut others = exchange_terms(n, &current, &next, s)?;
        let main = Monomial::from_tableau(&YoungTableau::new(n, alloc::vec![new_left, new_right])?);
        let main_coeff = others.coefficient(&main);
        if main_coeff != Rational::one() {
            return Err(Error::Mismatch(alloc::format!("cascade step on {t:?} has coefficient {main_coeff}")));
        }
        others.add_term(main, -Rational::one());
        let mut frame = done.clone();
        frame.extend_from_slice(&cols[k + 1..]);
        acc = acc.checked_add(&poly_times_columns(&others, &frame)?)?;
        done.push(new_left);
        current = new_right;
        k += 1;
        if next.height() == s || k == cols.len() {
            break;
        }
    }
    if !current.is_trivial() {
        return Err(Error::Mismatch(alloc::format!("cascade on {t:?} did not end on a trivial column")));
    }
    done.push(current);
    done.extend_from_slice(&cols[k..]);
    let last = full_monomial(&YoungTableau::new(n, done)?)?;
    acc.checked_add(&last)?.substitute_trivial()
}

/// Rewrites `δ^T` (reduced ring, no trivial columns) into quasi-standard
/// monomials by repeating the explicit steps on the largest remaining
/// non-quasi-standard monomial.
pub fn reduced_cascade(t: &YoungTableau) -> Result<DeltaPolynomial> {
    let n = t.n();
    let ring = Ring::reduced_plus(n)?;
    let order = ring.paper_order();
    let mut work = DeltaPolynomial::monomial(ring, Monomial::from_tableau(t))?;
    let mut done = DeltaPolynomial::zero(ring);
    let mut rewrites: BTreeMap<Monomial, DeltaPolynomial> = BTreeMap::new();
    for _ in 0..STEP_LIMIT {
        if work.is_zero() {
            return Ok(done);
        }
        let (m, c) = work.leading_term(&order)?;
        work.add_term(m.clone(), -c.clone());
        let tab = m.tableau(n)?;
        if is_quasi_standard(&tab) {
            done.add_term(m, c);
            continue;
        }
        if !rewrites.contains_key(&m) {
            rewrites.insert(m.clone(), reduced_rewrite(&tab)?);
        }
        work = work.checked_add(&rewrites[&m].scale(&c))?;
    }
    Err(Error::IterationLimit(alloc::format!("reduced rewriting of {t:?}")))
}

/// The element attached to a tableau that is not standard for the ring:
/// `δ^T` minus its rewriting into standard monomials.
///
/// In the full ring the tail is semistandard; in the reduced ring `T` must
/// not contain trivial columns and the tail is quasi-standard.
pub fn construct_paper_element(t: &YoungTableau, kind: RingKind) -> Result<DeltaPolynomial> {
    match kind {
        RingKind::Full => {
            if is_semistandard(t) {
                return Err(Error::AlreadyStandard);
            }
            full_monomial(t)?.checked_sub(&full_straighten(t)?)
        }
        RingKind::ReducedPlus => {
            if t.has_trivial_column() {
                return Err(Error::InvalidTableau(alloc::format!("{t:?} has a trivial column")));
            }
            if is_quasi_standard(t) {
                return Err(Error::AlreadyStandard);
            }
            let ring = Ring::reduced_plus(t.n())?;
            DeltaPolynomial::monomial(ring, Monomial::from_tableau(t))?.checked_sub(&reduced_cascade(t)?)
        }
        RingKind::ReducedMinus => Err(Error::RingMismatch(alloc::string::String::from(
            "the mirrored ring is reached through the reflection of the reduced ring",
        ))),
    }
}

/// Normal form of `δ^T` in the ring, using the context's Groebner basis.
/// In the reduced rings the trivial (anti-trivial) columns are dropped
/// first.
pub fn straighten(t: &YoungTableau, kind: RingKind, ctx: &ShapeContext) -> Result<DeltaPolynomial> {
    if t.n() != ctx.n() {
        return Err(Error::RankMismatch(ctx.n(), t.n()));
    }
    let p = full_monomial(t)?;
    let p = match kind {
        RingKind::Full => p,
        RingKind::ReducedPlus => p.substitute_trivial()?,
        RingKind::ReducedMinus => p.substitute_anti_trivial()?,
    };
    reduce(&p, ctx.basis(kind)?)
}
