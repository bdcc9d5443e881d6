//! Quadratic Plücker relations among the minors and their reductions.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::One;

use crate::polyring::{DeltaPolynomial, DeltaVariable, Monomial, Ring, RingKind};
use crate::{Error, IndexSet, Rational, Result};

/// Data of one exchange relation.
///
/// `i` is a `p`-subset, `j` an ordered sequence of `q <= p` distinct
/// indices, and the first `r` entries of `j` are exchanged with every
/// `r`-subset of `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PluckerSpec {
    pub n: usize,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub r: usize,
}

impl PluckerSpec {
    pub fn new(n: usize, i: &[usize], j: &[usize], r: usize) -> Result<Self> {
        IndexSet::new(n, i)?;
        if IndexSet::from_unsorted(n, j)?.is_none() {
            return Err(Error::InvalidPlucker(alloc::format!("J = {j:?} repeats an index")));
        }
        let (p, q) = (i.len(), j.len());
        if p >= n || q == 0 {
            return Err(Error::InvalidPlucker(alloc::format!("heights {p}, {q} must lie in 1..{n}")));
        }
        if q > p {
            return Err(Error::InvalidPlucker(alloc::format!("|I| = {p} must be at least |J| = {q}")));
        }
        if r == 0 || r > q {
            return Err(Error::InvalidPlucker(alloc::format!("r = {r} must lie in 1..={q}")));
        }
        Ok(PluckerSpec { n, i: i.to_vec(), j: j.to_vec(), r })
    }
}

/// `δ` of an index sequence as a signed variable, `None` when it vanishes.
fn signed_var(n: usize, seq: &[usize]) -> Result<Option<(i8, DeltaVariable)>> {
    Ok(match IndexSet::from_unsorted(n, seq)? {
        Some((sign, set)) => Some((sign, DeltaVariable::from_set(set)?)),
        None => None,
    })
}

/// `δ_I δ_J - Σ_A δ_{I'} δ_{J'}` in the full ring, where `I'` replaces the
/// entries of `A ⊂ I` in place by `j_1..j_r` and `J' = (A, j_{r+1}..j_q)`.
pub fn plucker_relation(spec: &PluckerSpec) -> Result<DeltaPolynomial> {
    let n = spec.n;
    let ring = Ring::full(n)?;
    let mut rel = DeltaPolynomial::zero(ring);
    let mut push = |sign: i8, a: &[usize], b: &[usize]| -> Result<()> {
        if let (Some((sa, va)), Some((sb, vb))) = (signed_var(n, a)?, signed_var(n, b)?) {
            let c = Rational::from_integer((sign * sa * sb).into());
            rel.add_term(Monomial::from_vars([va, vb]), c);
        }
        Ok(())
    };
    push(1, &spec.i, &spec.j)?;
    for positions in subsets(spec.i.len(), spec.r) {
        let mut i2 = spec.i.clone();
        let mut j2 = Vec::with_capacity(spec.j.len());
        for (k, &pos) in positions.iter().enumerate() {
            j2.push(spec.i[pos]);
            i2[pos] = spec.j[k];
        }
        j2.extend_from_slice(&spec.j[spec.r..]);
        push(-1, &i2, &j2)?;
    }
    Ok(rel)
}

/// All `r`-subsets of `0..m` as increasing position lists.
pub(crate) fn subsets(m: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for k in start..m {
            cur.push(k);
            go(m, r, k + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, r, 0, &mut Vec::new(), &mut out);
    out
}

/// A finite generating set of an ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealPresentation {
    pub ring: Ring,
    pub generators: Vec<DeltaPolynomial>,
}

/// The quadratic generators of the Plücker ideal of `ring`.
///
/// For the full ring these are the `r = 1` exchange relations for every
/// pair of heights `p >= q`, every `I`, `J` and every choice of the
/// exchanged entry of `J`. The reduced rings get their images under the
/// trivial (or anti-trivial) substitution. Each generator is made monic in
/// the ring's default order and duplicates are removed.
pub fn generating_set(n: usize, kind: RingKind) -> Result<IdealPresentation> {
    let ring = Ring::new(kind, n)?;
    let order = ring.paper_order();
    let mut seen = BTreeSet::new();
    let mut generators = Vec::new();
    for p in 1..n {
        for q in 1..=p {
            for i in subsets(n, p) {
                let i: Vec<usize> = i.iter().map(|x| x + 1).collect();
                for j in subsets(n, q) {
                    let j: Vec<usize> = j.iter().map(|x| x + 1).collect();
                    for lead in 0..q {
                        let mut seq = j.clone();
                        seq.swap(0, lead);
                        let rel = plucker_relation(&PluckerSpec::new(n, &i, &seq, 1)?)?;
                        let image = match kind {
                            RingKind::Full => rel,
                            RingKind::ReducedPlus => rel.substitute_trivial()?,
                            RingKind::ReducedMinus => rel.substitute_anti_trivial()?,
                        };
                        if image.is_zero() {
                            continue;
                        }
                        let image = image.monic(&order)?;
                        if seen.insert(key(&image)) {
                            generators.push(image);
                        }
                    }
                }
            }
        }
    }
    generators.sort_by(|a, b| {
        let (la, _) = a.leading_term(&order).expect("nonzero");
        let (lb, _) = b.leading_term(&order).expect("nonzero");
        order.compare_monomials(&lb, &la).then_with(|| key(a).cmp(&key(b)))
    });
    Ok(IdealPresentation { ring, generators })
}

fn key(p: &DeltaPolynomial) -> Vec<(Monomial, Rational)> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// `δ` of a single index sequence in the full ring, with its sorting sign.
pub fn delta(n: usize, seq: &[usize]) -> Result<DeltaPolynomial> {
    let ring = Ring::full(n)?;
    match signed_var(n, seq)? {
        Some((sign, v)) => DeltaPolynomial::term(ring, Monomial::var(v), Rational::from_integer(sign.into())),
        None => Ok(DeltaPolynomial::zero(ring)),
    }
}

/// The constant polynomial one in the full ring.
pub fn unit(n: usize) -> Result<DeltaPolynomial> {
    Ok(DeltaPolynomial::constant(Ring::full(n)?, Rational::one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, seq: &[usize]) -> DeltaPolynomial {
        delta(n, seq).unwrap()
    }

    #[test]
    fn sl3_relation() {
        let rel = plucker_relation(&PluckerSpec::new(3, &[1, 2], &[3], 1).unwrap()).unwrap();
        let expected =
            &(&(&d(3, &[1, 2]) * &d(3, &[3])) + &(&d(3, &[2, 3]) * &d(3, &[1]))) - &(&d(3, &[1, 3]) * &d(3, &[2]));
        assert_eq!(rel, expected);
    }

    #[test]
    fn counts() {
        assert_eq!(generating_set(2, RingKind::Full).unwrap().generators.len(), 0);
        assert_eq!(generating_set(3, RingKind::Full).unwrap().generators.len(), 1);
        assert_eq!(generating_set(4, RingKind::Full).unwrap().generators.len(), 10);
        assert_eq!(generating_set(4, RingKind::ReducedPlus).unwrap().generators.len(), 10);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(PluckerSpec::new(4, &[1], &[2, 3], 1).is_err());
        assert!(PluckerSpec::new(4, &[1, 2], &[3], 2).is_err());
        assert!(PluckerSpec::new(4, &[1, 2], &[3, 3], 1).is_err());
        assert!(PluckerSpec::new(3, &[1, 2, 3], &[1], 1).is_err());
    }
}
