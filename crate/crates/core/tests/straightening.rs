//! Trivial-column extraction and the two straightening routes.

use shapes_core::groebner::{
    buchberger, construct_paper_element, full_straighten, reduced_cascade, straighten, ShapeContext,
};
use shapes_core::plucker_ideals::generating_set;
use shapes_core::polyring::{Monomial, OrderKind, Ring, RingKind};
use shapes_core::representation::weyl_dimension;
use shapes_core::tableaux::*;
use shapes_core::{IndexSet, Weight};

fn shapes_below(n: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 1..n {
        out = out.into_iter().flat_map(|p: Vec<i64>| (0..=max).map(move |a| [p.clone(), vec![a]].concat())).collect();
    }
    out.into_iter().map(|c| Weight::new(c).unwrap()).collect()
}

fn trivial_tableau(shape: &Weight) -> YoungTableau {
    let n = shape.n();
    let mut cols = Vec::new();
    for s in 1..n {
        for _ in 0..shape.get(s) {
            cols.push(Column::from_set(IndexSet::initial(n, s).unwrap()).unwrap());
        }
    }
    YoungTableau::new(n, cols).unwrap()
}

fn check_bijection(lambda: &Weight) -> usize {
    let n = lambda.n();
    let ss = enumerate_tableaux(lambda, n, is_semistandard).unwrap();
    for t in &ss {
        let (pair, _) = extract_trivial_columns(t).unwrap();
        assert!(is_quasi_standard(pair.right()));
        assert_eq!(pair.left().shape().checked_add(&pair.right().shape()).unwrap(), *lambda);
        assert_eq!(&insert_trivial_columns(&pair).unwrap(), t, "g(f(T)) for {t}");
    }
    let mut pairs = 0;
    for mu in shapes_below(n, *lambda.coords().iter().max().unwrap_or(&0)) {
        if !mu.le(lambda) {
            continue;
        }
        let left = trivial_tableau(&lambda.checked_sub(&mu).unwrap());
        for r in enumerate_tableaux(&mu, n, is_quasi_standard).unwrap() {
            let pair = SuperTableau::new(left.clone(), r).unwrap();
            let t = insert_trivial_columns(&pair).unwrap();
            assert!(is_semistandard(&t));
            assert_eq!(extract_trivial_columns(&t).unwrap().0, pair, "f(g(L, R)) for {t}");
            pairs += 1;
        }
    }
    assert_eq!(pairs, ss.len());
    assert_eq!(weyl_dimension(lambda).unwrap(), ss.len().into());
    ss.len()
}

#[test]
fn bijection_lemma_sl3() {
    for lambda in shapes_below(3, 3) {
        check_bijection(&lambda);
    }
}

#[test]
fn bijection_lemma_sl4_small() {
    for lambda in shapes_below(4, 1) {
        check_bijection(&lambda);
    }
}

#[test]
fn bijection_lemma_sl5_fundamentals() {
    for s in 1..5 {
        check_bijection(&Weight::fundamental(5, s).unwrap());
    }
}

// Non-quasi-standard tableaux without trivial columns: the explicit cascade
// and the Groebner normal form agree, since the quasi-standard monomials
// are exactly the standard ones.
#[test]
fn cascade_agrees_with_groebner_normal_form() {
    for n in [3, 4] {
        let ctx = ShapeContext::new(n).unwrap();
        let mut checked = 0;
        for lambda in shapes_below(n, 2).into_iter().filter(|l| l.coords().iter().sum::<i64>() <= 3) {
            let candidates =
                enumerate_tableaux(&lambda, n, |t| !t.has_trivial_column() && !is_quasi_standard(t)).unwrap();
            for t in candidates {
                let cascade = reduced_cascade(&t).unwrap();
                assert_eq!(cascade, straighten(&t, RingKind::ReducedPlus, &ctx).unwrap(), "{t}");
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn full_straightening_agrees_with_groebner_normal_form() {
    for n in [3, 4] {
        let ctx = ShapeContext::with_full(n).unwrap();
        for lambda in shapes_below(n, 1) {
            for t in enumerate_tableaux(&lambda, n, |t| !is_semistandard(t)).unwrap() {
                assert_eq!(full_straighten(&t).unwrap(), straighten(&t, RingKind::Full, &ctx).unwrap(), "{t}");
            }
        }
    }
}

// The reduced elements attached to two-column non-quasi-standard tableaux
// generate the reduced ideal and their leading terms are the tableaux.
#[test]
fn reduced_paper_elements_sl4() {
    let order = Ring::reduced_plus(4).unwrap().paper_order();
    let gb = buchberger(&generating_set(4, RingKind::ReducedPlus).unwrap(), OrderKind::ReducedGraded).unwrap();
    for lambda in shapes_below(4, 2).into_iter().filter(|l| l.coords().iter().sum::<i64>() == 2) {
        for t in enumerate_tableaux(&lambda, 4, |t| !t.has_trivial_column() && !is_quasi_standard(t)).unwrap() {
            let f = construct_paper_element(&t, RingKind::ReducedPlus).unwrap();
            assert_eq!(f.leading_term(&order).unwrap().0, Monomial::from_tableau(&t));
            assert!(gb.contains(&f).unwrap());
        }
    }
}

#[test]
fn tau_tableau_is_an_involution() {
    for n in [3, 4, 5] {
        for lambda in shapes_below(n, 1) {
            for t in enumerate_tableaux(&lambda, n, |_| true).unwrap() {
                let (p1, once) = tau_tableau(&t);
                let (p2, twice) = tau_tableau(&once);
                assert_eq!(twice, t);
                let total = p1 * p2;
                assert_eq!(total.sign(), 1);
                assert_eq!(total.eps_power(), Phase::new(n, 1, 2 * lambda.box_count() as u32).eps_power());
            }
        }
    }
}
