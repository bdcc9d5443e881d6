//! Plücker relations checked against exact minors of SL(n) points.

use num_traits::Zero;
use shapes_core::matrix_oracle::{evaluate_poly, random_sl_point, unipotent_point, UnipotentCoords};
use shapes_core::plucker_ideals::{delta, generating_set, plucker_relation, PluckerSpec};
use shapes_core::polyring::{DeltaPolynomial, Monomial, RingKind};
use shapes_core::Rational;

fn d(n: usize, seq: &[usize]) -> DeltaPolynomial {
    delta(n, seq).unwrap()
}

fn prod(a: &DeltaPolynomial, b: &DeltaPolynomial) -> DeltaPolynomial {
    a * b
}

#[test]
fn generators_vanish_on_random_points() {
    for n in 2..=5 {
        let ideal = generating_set(n, RingKind::Full).unwrap();
        for seed in 0..12 {
            let g = random_sl_point(n, 1000 * n as u64 + seed).unwrap();
            for rel in &ideal.generators {
                assert!(evaluate_poly(rel, &g).unwrap().is_zero(), "n = {n}, seed = {seed}: {rel}");
            }
        }
    }
}

#[test]
fn higher_exchange_relations_vanish() {
    for seed in 0..5 {
        let g = random_sl_point(5, seed).unwrap();
        for (i, j, r) in [
            (&[1, 2, 4][..], &[2, 3, 5][..], 2),
            (&[1, 3, 4, 5][..], &[2, 4][..], 2),
            (&[2, 3, 4][..], &[5, 1, 3][..], 3),
        ] {
            let rel = plucker_relation(&PluckerSpec::new(5, i, j, r).unwrap()).unwrap();
            assert!(evaluate_poly(&rel, &g).unwrap().is_zero());
        }
    }
}

#[test]
fn counts_match() {
    let counts: Vec<usize> = (2..=5).map(|n| generating_set(n, RingKind::Full).unwrap().generators.len()).collect();
    assert_eq!(&counts[..3], &[0, 1, 10]);
    assert_eq!(counts[3], 66);
}

#[test]
fn sl4_list_matches_the_ten_displayed_relations() {
    let n = 4;
    let two = |a: &[usize], b: &[usize], c: &[usize], e: &[usize], f: &[usize], g: &[usize]| {
        let x = prod(&d(n, a), &d(n, b));
        let y = prod(&d(n, c), &d(n, e));
        let z = prod(&d(n, f), &d(n, g));
        &(&x - &y) + &z
    };
    let mut displayed = vec![
        two(&[1], &[2, 3], &[2], &[1, 3], &[3], &[1, 2]),
        two(&[2], &[3, 4], &[3], &[2, 4], &[4], &[2, 3]),
        two(&[1], &[3, 4], &[3], &[1, 4], &[4], &[1, 3]),
        two(&[1], &[2, 4], &[2], &[1, 4], &[4], &[1, 2]),
        two(&[1, 4], &[2, 3, 4], &[2, 4], &[1, 3, 4], &[3, 4], &[1, 2, 4]),
        two(&[1, 2], &[1, 3, 4], &[1, 3], &[1, 2, 4], &[1, 4], &[1, 2, 3]),
        two(&[1, 2], &[2, 3, 4], &[2, 3], &[1, 2, 4], &[2, 4], &[1, 2, 3]),
        two(&[1, 3], &[2, 3, 4], &[2, 3], &[1, 3, 4], &[3, 4], &[1, 2, 3]),
        two(&[1, 2], &[3, 4], &[1, 3], &[2, 4], &[1, 4], &[2, 3]),
    ];
    let last = &two(&[1], &[2, 3, 4], &[2], &[1, 3, 4], &[3], &[1, 2, 4]) - &prod(&d(n, &[4]), &d(n, &[1, 2, 3]));
    displayed.push(last);
    let ideal = generating_set(n, RingKind::Full).unwrap();
    let order = ideal.ring.paper_order();
    let mut ours: Vec<String> = ideal.generators.iter().map(|p| format!("{:?}", p.monic(&order).unwrap())).collect();
    let mut theirs: Vec<String> = displayed.iter().map(|p| format!("{:?}", p.monic(&order).unwrap())).collect();
    ours.sort();
    theirs.sort();
    assert_eq!(ours, theirs);
}

#[test]
fn sl3_relation_sign() {
    // δ12 δ3 - δ23 δ1 + δ13 δ2 is nonzero on SL(3); the vanishing
    // combination is δ1 δ23 - δ2 δ13 + δ3 δ12.
    let n = 3;
    let wrong =
        &(&prod(&d(n, &[1, 2]), &d(n, &[3])) - &prod(&d(n, &[2, 3]), &d(n, &[1]))) + &prod(&d(n, &[1, 3]), &d(n, &[2]));
    let right =
        &(&prod(&d(n, &[1]), &d(n, &[2, 3])) - &prod(&d(n, &[2]), &d(n, &[1, 3]))) + &prod(&d(n, &[3]), &d(n, &[1, 2]));
    let q = |a: i64| Rational::from_integer(a.into());
    let c = UnipotentCoords::named(3, &[('x', q(2)), ('y', q(3)), ('u', q(5))]).unwrap();
    let g = unipotent_point(3, &c).unwrap();
    // 2u + xy at the unipotent point
    assert_eq!(evaluate_poly(&wrong, &g).unwrap(), q(16));
    assert!(evaluate_poly(&right, &g).unwrap().is_zero());
    let rel = plucker_relation(&PluckerSpec::new(3, &[1, 2], &[3], 1).unwrap()).unwrap();
    assert_eq!(rel, right);
}

#[test]
fn reduced_pluck_list() {
    // the displayed reduced relations with B for P, W for W1
    let words: [&[(i64, &str)]; 10] = [
        &[(1, "U"), (-1, "XY"), (1, "E")],
        &[(1, "D"), (-1, "XV"), (1, "A")],
        &[(1, "B"), (-1, "UV"), (1, "YA")],
        &[(1, "XB"), (-1, "UD"), (1, "AE")],
        &[(1, "B"), (-1, "YD"), (1, "EV")],
        &[(1, "C"), (-1, "XW"), (1, "UZ"), (-1, "A")],
        &[(1, "VC"), (-1, "DW"), (1, "BZ")],
        &[(1, "W"), (-1, "YZ"), (1, "V")],
        &[(1, "C"), (-1, "EZ"), (1, "D")],
        &[(1, "YC"), (-1, "EW"), (1, "B")],
    ];
    let ideal = generating_set(4, RingKind::ReducedPlus).unwrap();
    let order = ideal.ring.paper_order();
    let mut theirs: Vec<String> = words
        .iter()
        .map(|terms| {
            let p = DeltaPolynomial::from_terms(
                ideal.ring,
                terms.iter().map(|&(c, w)| (Rational::from_integer(c.into()), Monomial::parse_letters(4, w).unwrap())),
            )
            .unwrap();
            format!("{:?}", p.monic(&order).unwrap())
        })
        .collect();
    let mut ours: Vec<String> = ideal.generators.iter().map(|p| format!("{p:?}")).collect();
    ours.sort();
    theirs.sort();
    assert_eq!(ours, theirs);
}
