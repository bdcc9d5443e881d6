//! Buchberger's algorithm, normal forms and the explicit construction of
//! the basis elements attached to non-standard tableaux.

mod paper;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Zero;

use crate::plucker_ideals::IdealPresentation;
use crate::polyring::{DeltaPolynomial, Monomial, MonomialOrder, OrderKind, Ring};
use crate::{Error, Rational, Result};

pub use paper::{construct_paper_element, full_straighten, reduced_cascade, straighten, ShapeContext};

/// A reduced Groebner basis: monic elements, sorted by leading monomial
/// from the largest down, no leading monomial dividing another term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<DeltaPolynomial>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    /// Wraps elements already known to form a reduced basis (for example
    /// read back from a cache); they are made monic and re-sorted.
    pub fn from_reduced(ring: Ring, order: MonomialOrder, elements: Vec<DeltaPolynomial>) -> Result<Self> {
        if order.n() != ring.n {
            return Err(Error::RankMismatch(ring.n, order.n()));
        }
        let mut elements = elements
            .into_iter()
            .map(|p| {
                if p.ring() != ring {
                    return Err(Error::RingMismatch(alloc::format!("{} in a basis of {ring}", p.ring())));
                }
                p.monic(&order)
            })
            .collect::<Result<Vec<_>>>()?;
        sort_by_leading(&mut elements, &order);
        let leading = elements.iter().map(|p| p.leading_term(&order).expect("nonzero").0).collect();
        Ok(GroebnerBasis { ring, order, elements, leading })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[DeltaPolynomial] {
        &self.elements
    }

    pub fn leading_terms(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether `m` is a standard monomial (divisible by no leading term).
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading.iter().any(|l| l.divides(m))
    }

    /// Ideal membership.
    pub fn contains(&self, p: &DeltaPolynomial) -> Result<bool> {
        Ok(reduce(p, self)?.is_zero())
    }

    /// Every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> Result<bool> {
        for a in 0..self.elements.len() {
            for b in a + 1..self.elements.len() {
                let s = s_polynomial(&self.elements[a], &self.elements[b], &self.order)?;
                if !reduce(&s, self)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn sort_by_leading(elements: &mut [DeltaPolynomial], order: &MonomialOrder) {
    elements.sort_by(|a, b| {
        let la = a.leading_term(order).expect("nonzero").0;
        let lb = b.leading_term(order).expect("nonzero").0;
        order.compare_monomials(&lb, &la)
    });
}

/// `lcm / LT(f) · f / LC(f) - lcm / LT(g) · g / LC(g)`.
pub fn s_polynomial(f: &DeltaPolynomial, g: &DeltaPolynomial, order: &MonomialOrder) -> Result<DeltaPolynomial> {
    let (mf, cf) = f.leading_term(order)?;
    let (mg, cg) = g.leading_term(order)?;
    let l = mf.lcm(&mg);
    let a = f.mul_monomial(&l.checked_div(&mf).expect("lcm")).scale(&cf.recip());
    let b = g.mul_monomial(&l.checked_div(&mg).expect("lcm")).scale(&cg.recip());
    a.checked_sub(&b)
}

/// Multivariate division. Returns one quotient per basis element and the
/// fully reduced remainder, so that `p = Σ q_k g_k + r`. At each step the
/// divisor with the largest leading monomial is used.
pub fn divide(p: &DeltaPolynomial, basis: &GroebnerBasis) -> Result<(Vec<DeltaPolynomial>, DeltaPolynomial)> {
    divide_by(p, &basis.elements, &basis.leading, &basis.order, true)
}

/// Normal form of `p` modulo the basis.
pub fn reduce(p: &DeltaPolynomial, basis: &GroebnerBasis) -> Result<DeltaPolynomial> {
    Ok(divide_by(p, &basis.elements, &basis.leading, &basis.order, false)?.1)
}

fn divide_by(
    p: &DeltaPolynomial,
    divisors: &[DeltaPolynomial],
    leading: &[Monomial],
    order: &MonomialOrder,
    track: bool,
) -> Result<(Vec<DeltaPolynomial>, DeltaPolynomial)> {
    let ring = p.ring();
    if let Some(g) = divisors.first() {
        if g.ring() != ring {
            return Err(Error::RingMismatch(alloc::format!("reducing {} modulo a basis of {}", ring, g.ring())));
        }
    }
    let lead_coeffs: Vec<Rational> = divisors.iter().map(|g| g.leading_term(order).expect("nonzero").1).collect();
    let mut quotients = if track { alloc::vec![DeltaPolynomial::zero(ring); divisors.len()] } else { Vec::new() };
    let mut work = p.clone();
    let mut rest = DeltaPolynomial::zero(ring);
    while !work.is_zero() {
        let (m, c) = work.leading_term(order)?;
        let divisor = (0..divisors.len())
            .filter(|&k| leading[k].divides(&m))
            .max_by(|&a, &b| order.compare_monomials(&leading[a], &leading[b]));
        match divisor {
            Some(k) => {
                let factor = m.checked_div(&leading[k]).expect("divides");
                let coeff = &c / &lead_coeffs[k];
                work.add_scaled(&-&coeff, &factor, &divisors[k]);
                if track {
                    quotients[k].add_term(factor, coeff);
                }
            }
            None => {
                work.add_term(m.clone(), -c.clone());
                rest.add_term(m, c);
            }
        }
    }
    Ok((quotients, rest))
}

/// Statistics of a Buchberger run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_considered: usize,
    pub pairs_reduced: usize,
    pub skipped_coprime: usize,
    pub skipped_chain: usize,
}

/// Reduced Groebner basis of the ideal, with the given order.
pub fn buchberger(ideal: &IdealPresentation, kind: OrderKind) -> Result<GroebnerBasis> {
    Ok(buchberger_with_stats(ideal.ring, &ideal.generators, kind)?.0)
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first), the coprime criterion and the chain criterion.
pub fn buchberger_with_stats(
    ring: Ring,
    generators: &[DeltaPolynomial],
    kind: OrderKind,
) -> Result<(GroebnerBasis, BuchbergerStats)> {
    let order = MonomialOrder::new(kind, ring.n)?;
    let mut stats = BuchbergerStats::default();
    let mut basis: Vec<DeltaPolynomial> = Vec::new();
    let mut leading: Vec<Monomial> = Vec::new();
    for g in generators {
        if g.ring() != ring {
            return Err(Error::RingMismatch(alloc::format!("generator in {} for an ideal of {ring}", g.ring())));
        }
        let r = divide_by(g, &basis, &leading, &order, false)?.1;
        if !r.is_zero() {
            let r = r.monic(&order)?;
            leading.push(r.leading_term(&order)?.0);
            basis.push(r);
        }
    }
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pending.iter().min_by(|a, b| compare_pairs(&order, &leading, **a, **b)) {
        pending.remove(&(i, j));
        stats.pairs_considered += 1;
        if leading[i].is_coprime(&leading[j]) {
            stats.skipped_coprime += 1;
            continue;
        }
        let l = leading[i].lcm(&leading[j]);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leading[k].divides(&l)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            stats.skipped_chain += 1;
            continue;
        }
        stats.pairs_reduced += 1;
        let s = s_polynomial(&basis[i], &basis[j], &order)?;
        let r = divide_by(&s, &basis, &leading, &order, false)?.1;
        if r.is_zero() {
            continue;
        }
        let r = r.monic(&order)?;
        let k = basis.len();
        leading.push(r.leading_term(&order)?.0);
        basis.push(r);
        for i in 0..k {
            pending.insert((i, k));
        }
    }
    Ok((interreduce(ring, order, basis)?, stats))
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn compare_pairs(order: &MonomialOrder, leading: &[Monomial], a: (usize, usize), b: (usize, usize)) -> Ordering {
    let la = leading[a.0].lcm(&leading[a.1]);
    let lb = leading[b.0].lcm(&leading[b.1]);
    order.compare_monomials(&la, &lb).then(a.cmp(&b))
}

/// Turns any Groebner basis into the reduced one.
fn interreduce(ring: Ring, order: MonomialOrder, basis: Vec<DeltaPolynomial>) -> Result<GroebnerBasis> {
    let mut lead: Vec<(Monomial, DeltaPolynomial)> =
        basis.into_iter().map(|p| (p.leading_term(&order).expect("nonzero").0, p)).collect();
    lead.sort_by(|a, b| order.compare_monomials(&a.0, &b.0));
    let mut minimal: Vec<(Monomial, DeltaPolynomial)> = Vec::new();
    for (m, p) in lead {
        if !minimal.iter().any(|(l, _)| l.divides(&m)) {
            minimal.push((m, p));
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<DeltaPolynomial> =
            minimal.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, (_, p))| p.clone()).collect();
        let others_lead: Vec<Monomial> =
            minimal.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, (m, _))| m.clone()).collect();
        let (m, p) = &minimal[k];
        let (_, c) = p.leading_term(&order)?;
        let tail = p.checked_sub(&DeltaPolynomial::term(ring, m.clone(), c.clone())?)?;
        let tail = divide_by(&tail, &others, &others_lead, &order, false)?.1;
        let mut q = tail;
        q.add_term(m.clone(), c);
        reduced.push(q);
    }
    GroebnerBasis::from_reduced(ring, order, reduced)
}

/// Checks `p - reduce(p) = Σ q_k g_k` with the recorded quotients.
pub fn division_identity_holds(p: &DeltaPolynomial, basis: &GroebnerBasis) -> Result<bool> {
    let (quotients, rest) = divide(p, basis)?;
    let mut acc = rest;
    for (q, g) in quotients.iter().zip(basis.elements()) {
        acc = acc.checked_add(&q.checked_mul(g)?)?;
    }
    Ok(acc.checked_sub(p)?.is_zero())
}

/// Coefficient of `m` in `p`, as a convenience for callers assembling
/// matrices.
pub fn coefficient_of(p: &DeltaPolynomial, m: &Monomial) -> Option<Rational> {
    let c = p.coefficient(m);
    (!c.is_zero()).then_some(c)
}
