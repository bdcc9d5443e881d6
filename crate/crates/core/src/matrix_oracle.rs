//! Exact matrices over `Q`: points of `SL(n)`, minors and one-parameter
//! flows. This is the independent oracle the algebra is checked against.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::index_set::check_rank;
use crate::polyring::{DeltaPolynomial, DeltaVariable, RingKind};
use crate::representation::GeneratorLabel;
use crate::{Error, IndexSet, Rational, Result};

/// A square matrix with rational entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        QMatrix { n, data: alloc::vec![Rational::zero(); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Mismatch(alloc::format!("matrix is not square ({n} rows)")));
        }
        Ok(QMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.n + j] = value;
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        let n = self.n;
        let mut out = QMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        QMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    /// Minor on `rows` and the first `rows.len()` columns (rows 1-based),
    /// by Gaussian elimination.
    pub fn leading_minor(&self, rows: &[usize]) -> Rational {
        let s = rows.len();
        let mut a: Vec<Vec<Rational>> =
            rows.iter().map(|&r| (0..s).map(|c| self.get(r - 1, c).clone()).collect()).collect();
        determinant(&mut a)
    }

    pub fn det(&self) -> Rational {
        let rows: Vec<usize> = (1..=self.n).collect();
        self.leading_minor(&rows)
    }
}

fn determinant(a: &mut [Vec<Rational>]) -> Rational {
    let s = a.len();
    let mut det = Rational::one();
    for col in 0..s {
        let Some(pivot) = (col..s).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..s {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            let (top, bottom) = a.split_at_mut(r);
            for (x, pivot) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * pivot;
            }
        }
    }
    det
}

/// A matrix of determinant one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPoint(QMatrix);

impl GroupPoint {
    pub fn new(m: QMatrix) -> Result<Self> {
        check_rank(m.n())?;
        let det = m.det();
        if !det.is_one() {
            return Err(Error::NotSpecialLinear(alloc::format!("determinant {det}")));
        }
        Ok(GroupPoint(m))
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn mul(&self, other: &GroupPoint) -> GroupPoint {
        GroupPoint(self.0.mul(&other.0))
    }

    /// `J g`, with `J` the antidiagonal matrix of ones (up to the sign that
    /// makes it unimodular it is the matrix `Ω` without its phase).
    pub fn flip_rows(&self) -> QMatrix {
        let n = self.n();
        let mut out = QMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.0.get(n - 1 - i, j).clone());
            }
        }
        out
    }
}

/// Coordinates of a strictly lower triangular matrix, keyed by 1-based
/// `(row, column)` with `row > column`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UnipotentCoords {
    entries: BTreeMap<(usize, usize), Rational>,
}

impl UnipotentCoords {
    pub fn new() -> Self {
        UnipotentCoords::default()
    }

    pub fn with(mut self, row: usize, col: usize, value: Rational) -> Self {
        self.entries.insert((row, col), value);
        self
    }

    /// Named coordinates for `n = 3` (`x, y, u`) and `n = 4`
    /// (`x, y, z, u, v, w`).
    pub fn named(n: usize, values: &[(char, Rational)]) -> Result<Self> {
        let mut c = UnipotentCoords::new();
        for (name, v) in values {
            let pos = match (n, name) {
                (_, 'x') => (2, 1),
                (_, 'y') => (3, 2),
                (4, 'z') => (4, 3),
                (_, 'u') => (3, 1),
                (4, 'v') => (4, 2),
                (4, 'w') => (4, 1),
                _ => return Err(Error::Parse(alloc::format!("no coordinate {name:?} for n = {n}"))),
            };
            c.entries.insert(pos, v.clone());
        }
        Ok(c)
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(Rational::zero)
    }
}

/// `exp(X)` for the strictly lower triangular `X` with the given entries.
pub fn unipotent_point(n: usize, coords: &UnipotentCoords) -> Result<GroupPoint> {
    check_rank(n)?;
    let mut x = QMatrix::zero(n);
    for (&(r, c), v) in &coords.entries {
        if r <= c || r > n {
            return Err(Error::Mismatch(alloc::format!("({r}, {c}) is not strictly lower triangular for n = {n}")));
        }
        x.set(r - 1, c - 1, v.clone());
    }
    let mut result = QMatrix::identity(n);
    let mut power = QMatrix::identity(n);
    let mut factorial = BigInt::one();
    for k in 1..n {
        power = power.mul(&x);
        factorial *= BigInt::from(k);
        result = result.add(&power.scale(&Rational::from_integer(factorial.clone()).recip()));
    }
    GroupPoint::new(result)
}

/// `δ_I(g)`.
pub fn evaluate_delta(v: &DeltaVariable, g: &GroupPoint) -> Result<Rational> {
    if v.n() != g.n() {
        return Err(Error::RankMismatch(v.n(), g.n()));
    }
    Ok(g.0.leading_minor(&v.indices()))
}

/// Evaluates `p` at `g` by substituting minors. For the reduced rings the
/// point must satisfy the reduction (trivial minors equal to one, or the
/// mirrored condition); this is checked.
pub fn evaluate_poly(p: &DeltaPolynomial, g: &GroupPoint) -> Result<Rational> {
    let ring = p.ring();
    if ring.n != g.n() {
        return Err(Error::RankMismatch(ring.n, g.n()));
    }
    for s in 1..ring.n {
        let (set, expected) = match ring.kind {
            RingKind::Full => continue,
            RingKind::ReducedPlus => (IndexSet::initial(ring.n, s)?, Rational::one()),
            RingKind::ReducedMinus => (IndexSet::terminal(ring.n, s)?, crate::polyring::reversal_sign_of(s)),
        };
        if g.0.leading_minor(&set.to_vec()) != expected {
            return Err(Error::Mismatch(alloc::format!("point is off the reduced locus of {ring}")));
        }
    }
    let mut cache: BTreeMap<DeltaVariable, Rational> = BTreeMap::new();
    let mut total = Rational::zero();
    for (m, c) in p.terms() {
        let mut term = c.clone();
        for (v, e) in m.iter() {
            let value = match cache.get(v) {
                Some(x) => x.clone(),
                None => {
                    let x = evaluate_delta(v, g)?;
                    cache.insert(*v, x.clone());
                    x
                }
            };
            for _ in 0..e {
                term *= &value;
            }
        }
        total += term;
    }
    Ok(total)
}

fn random_small(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-7..=7);
    let den: i64 = rng.gen_range(1..=7);
    Rational::new(num.into(), den.into())
}

/// A seeded point of `SL(n)`: a product of `3n` elementary shears
/// `I + c E_{ij}` with `c = p/q`, `|p|, q <= 7`.
pub fn random_sl_point(n: usize, seed: u64) -> Result<GroupPoint> {
    check_rank(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = QMatrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let mut shear = QMatrix::identity(n);
        shear.set(i, j, random_small(&mut rng));
        g = g.mul(&shear);
    }
    GroupPoint::new(g)
}

/// A seeded point of `N^-` (lower unipotent) with small rational entries.
pub fn random_unipotent_point(n: usize, seed: u64) -> Result<GroupPoint> {
    check_rank(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = QMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            m.set(i, j, random_small(&mut rng));
        }
    }
    GroupPoint::new(m)
}

/// A seeded full-ring polynomial with up to `terms` terms of degree at most
/// `max_degree` and integer coefficients in `-5..=5`.
pub fn random_polynomial(n: usize, seed: u64, terms: usize, max_degree: u32) -> Result<DeltaPolynomial> {
    let vars = crate::polyring::all_variables(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = crate::polyring::Ring::full(n)?;
    let mut p = DeltaPolynomial::zero(ring);
    for _ in 0..terms {
        let degree = rng.gen_range(0..=max_degree);
        let m = crate::polyring::Monomial::from_vars((0..degree).map(|_| vars[rng.gen_range(0..vars.len())]));
        let c: i64 = rng.gen_range(-5..=5);
        p.add_term(m, Rational::from_integer(c.into()));
    }
    Ok(p)
}

/// `g = g' n'` with `g'` lower triangular and `n'` upper unitriangular.
///
/// The diagonal of `g'` is `Δ_k / Δ_{k-1}` for the leading principal minors
/// `Δ_k`, so every one of them must be nonzero.
pub fn gauss_decompose(g: &GroupPoint) -> Result<(QMatrix, QMatrix)> {
    let n = g.n();
    let a = &g.0;
    let mut lower = QMatrix::zero(n);
    let mut upper = QMatrix::identity(n);
    for k in 0..n {
        for i in k..n {
            let mut v = a.get(i, k).clone();
            for m in 0..k {
                v -= lower.get(i, m) * upper.get(m, k);
            }
            lower.set(i, k, v);
        }
        let pivot = lower.get(k, k).clone();
        if pivot.is_zero() {
            return Err(Error::SingularMinor(k + 1));
        }
        for j in k + 1..n {
            let mut v = a.get(k, j).clone();
            for m in 0..k {
                v -= lower.get(k, m) * upper.get(m, j);
            }
            upper.set(k, j, v / &pivot);
        }
    }
    Ok((lower, upper))
}

/// `a + b ε` with `ε² = 0`: first-order jets in the flow parameter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dual {
    pub re: Rational,
    pub eps: Rational,
}

impl Dual {
    pub fn real(re: Rational) -> Self {
        Dual { re, eps: Rational::zero() }
    }

    fn zero() -> Self {
        Dual::real(Rational::zero())
    }

    fn one() -> Self {
        Dual::real(Rational::one())
    }
}

impl Add for &Dual {
    type Output = Dual;
    fn add(self, o: &Dual) -> Dual {
        Dual { re: &self.re + &o.re, eps: &self.eps + &o.eps }
    }
}

impl Sub for &Dual {
    type Output = Dual;
    fn sub(self, o: &Dual) -> Dual {
        Dual { re: &self.re - &o.re, eps: &self.eps - &o.eps }
    }
}

impl Mul for &Dual {
    type Output = Dual;
    fn mul(self, o: &Dual) -> Dual {
        Dual { re: &self.re * &o.re, eps: &self.re * &o.eps + &self.eps * &o.re }
    }
}

/// Determinant by cofactor expansion along the last column; needs no
/// division, so it works over the dual numbers.
fn laplace(m: &[Vec<Dual>], rows: &[usize], cols: usize) -> Dual {
    if cols == 0 {
        return Dual::one();
    }
    let last = cols - 1;
    let mut total = Dual::zero();
    for (k, &r) in rows.iter().enumerate() {
        let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let term = &m[r][last] * &laplace(m, &rest, last);
        let sign_negative = (k + last) % 2 == 1;
        total = if sign_negative { &total - &term } else { &total + &term };
    }
    total
}

/// Checks `(X f)(g) = d/ds f(exp(s ᵗX) g)` at `s = 0`, computing the
/// right-hand side from the first-order flow `(I + s ᵗX) g` over the dual
/// numbers and the left-hand side from the derivation
/// [`act_generator`](crate::representation::act_generator).
pub fn derivation_consistency(x: &GeneratorLabel, f: &DeltaPolynomial, g: &GroupPoint) -> Result<bool> {
    let lhs = evaluate_poly(&crate::representation::act_generator(x, f)?, g)?;
    Ok(lhs == flow_derivative(x, f, g)?)
}

/// `d/ds f((I + s ᵗX) g)` at `s = 0`.
pub fn flow_derivative(x: &GeneratorLabel, f: &DeltaPolynomial, g: &GroupPoint) -> Result<Rational> {
    let n = g.n();
    x.validate(n)?;
    let mut flow: Vec<Vec<Dual>> = (0..n)
        .map(|i| (0..n).map(|j| Dual::real(if i == j { Rational::one() } else { Rational::zero() })).collect())
        .collect();
    match x {
        GeneratorLabel::E(i, j) => flow[*j - 1][*i - 1].eps = Rational::one(),
        GeneratorLabel::H(theta) => {
            for (k, t) in theta.iter().enumerate() {
                flow[k][k].eps = Rational::from_integer((*t).into());
            }
        }
    }
    let point: Vec<Vec<Dual>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Dual::zero();
                    for (k, f) in flow[i].iter().enumerate() {
                        acc = &acc + &(f * &Dual::real(g.0.get(k, j).clone()));
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let mut total = Dual::zero();
    let mut cache: BTreeMap<DeltaVariable, Dual> = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut term = Dual::real(c.clone());
        for (v, e) in m.iter() {
            let value = cache
                .entry(*v)
                .or_insert_with(|| {
                    let rows: Vec<usize> = v.indices().iter().map(|r| r - 1).collect();
                    laplace(&point, &rows, rows.len())
                })
                .clone();
            for _ in 0..e {
                term = &term * &value;
            }
        }
        total = &total + &term;
    }
    Ok(total.eps)
}
