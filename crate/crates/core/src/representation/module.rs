use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use super::{act_generator, module_weight, weight_of_monomial, GeneratorLabel};
use crate::groebner::{reduce, ShapeContext};
use crate::polyring::{DeltaPolynomial, Monomial, MonomialOrder, Ring, RingKind};
use crate::tableaux::{
    complete_to_shape, enumerate_tableaux, extract_trivial_columns, is_quasi_standard, is_semistandard, tau_tableau,
    Phase, YoungTableau,
};
use crate::{Error, Rational, Result, Weight};

/// Which realization of `V^λ` a basis lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum ModuleKind {
    /// Semistandard tableaux of shape `λ` in the full shape algebra.
    SemistandardFull,
    /// Quasi-standard tableaux of every shape `μ <= λ` in the reduced shape
    /// algebra (the diamond cone slice).
    QuasiStandardCone,
}

impl ModuleKind {
    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::SemistandardFull => "semistandard_full",
            ModuleKind::QuasiStandardCone => "quasi_standard_cone",
        }
    }

    pub fn ring_kind(self) -> RingKind {
        match self {
            ModuleKind::SemistandardFull => RingKind::Full,
            ModuleKind::QuasiStandardCone => RingKind::ReducedPlus,
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "semistandard_full" | "full" => Ok(ModuleKind::SemistandardFull),
            "quasi_standard_cone" | "cone" => Ok(ModuleKind::QuasiStandardCone),
            _ => Err(Error::Parse(alloc::format!("unknown module kind {s:?}"))),
        }
    }
}

/// An ordered monomial basis of `V^λ`, ascending in the ring's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBasis {
    highest: Weight,
    kind: ModuleKind,
    elements: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl ModuleBasis {
    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.highest.n()
    }

    pub fn ring(&self) -> Ring {
        Ring { kind: self.kind.ring_kind(), n: self.n() }
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn tableau(&self, k: usize) -> Result<YoungTableau> {
        self.elements[k].tableau(self.n())
    }

    /// Weight of the `k`-th basis vector in `V^λ`.
    pub fn weight(&self, k: usize) -> Result<Weight> {
        match self.kind {
            ModuleKind::SemistandardFull => Ok(weight_of_monomial(&self.elements[k], self.n())),
            ModuleKind::QuasiStandardCone => module_weight(&self.elements[k], &self.highest),
        }
    }

    /// Coordinates of `p` in this basis; any foreign monomial is an error.
    pub fn coordinates(&self, p: &DeltaPolynomial) -> Result<Vec<Rational>> {
        let mut out = alloc::vec![Rational::zero(); self.len()];
        for (m, c) in p.terms() {
            let k = self.position(m).ok_or_else(|| Error::BasisClosure(m.to_string()))?;
            out[k] = c.clone();
        }
        Ok(out)
    }

    /// The polynomial with the given coordinates.
    pub fn vector(&self, coords: &[Rational]) -> Result<DeltaPolynomial> {
        DeltaPolynomial::from_terms(
            self.ring(),
            coords.iter().zip(&self.elements).filter(|(c, _)| !c.is_zero()).map(|(c, m)| (c.clone(), m.clone())),
        )
    }

    fn from_elements(highest: Weight, kind: ModuleKind, mut elements: Vec<Monomial>) -> Result<Self> {
        let n = highest.n();
        let order = MonomialOrder::new(kind.ring_kind().paper_order(), n)?;
        elements.sort_by(|a, b| order.compare_monomials(a, b));
        let index = elements.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        Ok(ModuleBasis { highest, kind, elements, index })
    }
}

/// The basis of `V^λ` in the requested realization.
///
/// The cone basis is the set of residues `R` of `f(T) = (L, R)` over the
/// semistandard tableaux `T` of shape `λ`, that is every quasi-standard
/// tableau of shape `μ <= λ`.
pub fn module_basis(lambda: &Weight, kind: ModuleKind) -> Result<ModuleBasis> {
    let n = lambda.n();
    if !lambda.is_dominant() {
        return Err(Error::InvalidWeight(alloc::format!("{lambda} is not dominant")));
    }
    let tableaux = enumerate_tableaux(lambda, n, is_semistandard)?;
    let elements = match kind {
        ModuleKind::SemistandardFull => tableaux.iter().map(Monomial::from_tableau).collect(),
        ModuleKind::QuasiStandardCone => {
            let mut set = BTreeSet::new();
            for t in &tableaux {
                let (pair, _) = extract_trivial_columns(t)?;
                debug_assert!(is_quasi_standard(pair.right()));
                set.insert(Monomial::from_tableau(pair.right()));
            }
            set.into_iter().collect()
        }
    };
    ModuleBasis::from_elements(lambda.clone(), kind, elements)
}

/// A square matrix on a module basis: column `k` holds the coordinates of
/// the image of `basis[k]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepresentationMatrix {
    basis: Vec<Monomial>,
    entries: Vec<Vec<Rational>>,
}

impl RepresentationMatrix {
    pub fn zero(basis: Vec<Monomial>) -> Self {
        let d = basis.len();
        RepresentationMatrix { basis, entries: alloc::vec![alloc::vec![Rational::zero(); d]; d] }
    }

    pub fn identity(basis: Vec<Monomial>) -> Self {
        let mut m = RepresentationMatrix::zero(basis);
        for k in 0..m.dim() {
            m.entries[k][k] = Rational::one();
        }
        m
    }

    /// Assembles the matrix from its columns.
    pub fn from_columns(basis: Vec<Monomial>, columns: Vec<Vec<Rational>>) -> Result<Self> {
        let d = basis.len();
        if columns.len() != d || columns.iter().any(|c| c.len() != d) {
            return Err(Error::Mismatch(alloc::format!("expected {d} columns of length {d}")));
        }
        let mut m = RepresentationMatrix::zero(basis);
        for (c, col) in columns.into_iter().enumerate() {
            for (r, v) in col.into_iter().enumerate() {
                m.entries[r][c] = v;
            }
        }
        Ok(m)
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        self.entries.iter().map(|r| r[col].clone()).collect()
    }

    fn same_basis(&self, other: &RepresentationMatrix) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Mismatch("matrices on different bases".into()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &RepresentationMatrix) -> Result<RepresentationMatrix> {
        self.same_basis(other)?;
        let d = self.dim();
        let mut out = RepresentationMatrix::zero(self.basis.clone());
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &RepresentationMatrix) -> Result<RepresentationMatrix> {
        self.same_basis(other)?;
        let mut out = self.clone();
        for (r, row) in out.entries.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v += &other.entries[r][c];
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> RepresentationMatrix {
        let mut out = self.clone();
        out.entries.iter_mut().flatten().for_each(|v| *v *= c);
        out
    }

    pub fn sub(&self, other: &RepresentationMatrix) -> Result<RepresentationMatrix> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &RepresentationMatrix) -> Result<RepresentationMatrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(|v| v.is_integer())
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, v)| r == c || v.is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.dim()).map(|k| self.entries[k][k].clone()).collect()
    }

    /// Image of a coordinate vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.entries.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Nonzero entries as `(row, col, value)`, column by column.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for c in 0..self.dim() {
            for r in 0..self.dim() {
                if !self.entries[r][c].is_zero() {
                    out.push((r, c, self.entries[r][c].clone()));
                }
            }
        }
        out
    }
}

/// A basis of the common kernel of the matrices, in reduced echelon form.
pub fn common_kernel(matrices: &[&RepresentationMatrix]) -> Vec<Vec<Rational>> {
    let Some(first) = matrices.first() else {
        return Vec::new();
    };
    let d = first.dim();
    let mut rows: Vec<Vec<Rational>> = matrices.iter().flat_map(|m| m.entries.iter().cloned()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r].iter_mut().for_each(|v| *v *= &inv);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![Rational::zero(); d];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

fn cone_basis_check(basis: &ModuleBasis, ctx: &ShapeContext) -> Result<()> {
    if basis.n() != ctx.n() {
        return Err(Error::RankMismatch(ctx.n(), basis.n()));
    }
    Ok(())
}

fn h_eigenvalue(theta: &[i64], w: &Weight) -> Rational {
    let counts = w.theta();
    let s: i64 = theta.iter().zip(&counts).map(|(t, c)| t * c).sum();
    // θ-forms are defined modulo Σθ_i, and H is traceless.
    Rational::from_integer(s.into())
}

/// Column `k` of the matrix of `g`: coordinates of `g · basis[k]`.
///
/// On the cone, `H` acts through the weight of the completed tableau and
/// lowering generators are rejected; use [`lowering_matrix`] for them.
pub fn generator_column(
    g: &GeneratorLabel,
    basis: &ModuleBasis,
    k: usize,
    ctx: &ShapeContext,
) -> Result<Vec<Rational>> {
    cone_basis_check(basis, ctx)?;
    g.validate(basis.n())?;
    let ring = basis.ring();
    if let (ModuleKind::QuasiStandardCone, GeneratorLabel::H(theta)) = (basis.kind(), g) {
        let mut col = alloc::vec![Rational::zero(); basis.len()];
        col[k] = h_eigenvalue(theta, &basis.weight(k)?);
        return Ok(col);
    }
    let p = DeltaPolynomial::monomial(ring, basis.elements[k].clone())?;
    let image = act_generator(g, &p)?;
    let nf = reduce(&image, ctx.basis(ring.kind)?)?;
    basis.coordinates(&nf)
}

/// Matrix of `g` on the basis of `V^λ` of the given kind.
pub fn matrix_of_generator(
    g: &GeneratorLabel,
    lambda: &Weight,
    kind: ModuleKind,
    ctx: &ShapeContext,
) -> Result<RepresentationMatrix> {
    let basis = module_basis(lambda, kind)?;
    matrix_on_basis(g, &basis, ctx)
}

/// As [`matrix_of_generator`], on a basis computed beforehand.
pub fn matrix_on_basis(g: &GeneratorLabel, basis: &ModuleBasis, ctx: &ShapeContext) -> Result<RepresentationMatrix> {
    let cols = (0..basis.len()).map(|k| generator_column(g, basis, k, ctx)).collect::<Result<Vec<_>>>()?;
    RepresentationMatrix::from_columns(basis.elements.clone(), cols)
}

/// `τ^λ` on a cone basis monomial: complete to shape `λ`, apply `τ` to the
/// tableau, drop the trivial columns and reduce.
///
/// Every column of the completed tableau contributes `ε_n^s`, so the phase
/// carries the same power `ε_n^{|λ|}` for every basis vector; that uniform
/// scalar is dropped and only the sign is kept.
pub fn tau_module(m: &Monomial, lambda: &Weight, ctx: &ShapeContext) -> Result<DeltaPolynomial> {
    let n = lambda.n();
    if n != ctx.n() {
        return Err(Error::RankMismatch(ctx.n(), n));
    }
    let t = m.tableau(n)?;
    if !is_quasi_standard(&t) || !t.shape().le(lambda) || !lambda.is_dominant() {
        return Err(Error::BasisClosure(alloc::format!("{m} in V^{lambda}")));
    }
    let full = complete_to_shape(&t, lambda)?;
    let (phase, image) = tau_tableau(&full);
    let uniform = Phase::new(n, 1, lambda.box_count() as u32);
    if phase.eps_power() != uniform.eps_power() {
        return Err(Error::Mismatch(alloc::format!("non-uniform ε power {} for {m}", phase.eps_power())));
    }
    let sign = Rational::from_integer(phase.sign().into());
    let p = DeltaPolynomial::term(Ring::full(n)?, Monomial::from_tableau(&image), sign)?;
    reduce(&p.substitute_trivial()?, ctx.basis(RingKind::ReducedPlus)?)
}

/// Column `k` of the matrix of `τ^λ` on a cone basis.
pub fn tau_column(basis: &ModuleBasis, k: usize, ctx: &ShapeContext) -> Result<Vec<Rational>> {
    cone_basis_check(basis, ctx)?;
    basis.coordinates(&tau_module(&basis.elements[k], basis.highest_weight(), ctx)?)
}

fn require_cone(basis: &ModuleBasis) -> Result<()> {
    if basis.kind() != ModuleKind::QuasiStandardCone {
        return Err(Error::Mismatch(alloc::format!("expected a cone basis, got {}", basis.kind())));
    }
    Ok(())
}

/// Matrix of `τ^λ` on the cone basis; it is an involution.
pub fn tau_matrix(basis: &ModuleBasis, ctx: &ShapeContext) -> Result<RepresentationMatrix> {
    require_cone(basis)?;
    let cols = (0..basis.len()).map(|k| tau_column(basis, k, ctx)).collect::<Result<Vec<_>>>()?;
    RepresentationMatrix::from_columns(basis.elements.clone(), cols)
}

/// The raising generator conjugate to the lowering `E(p, q)` under `τ`.
pub fn tau_partner(g: &GeneratorLabel, n: usize) -> Result<GeneratorLabel> {
    g.validate(n)?;
    if !g.is_lowering() {
        return Err(Error::InadmissibleGenerator(alloc::format!("{g} is not a lowering generator")));
    }
    Ok(g.tau(n))
}

/// `Y = T X T` from precomputed matrices of `τ^λ` and of the partner raising
/// generator.
pub fn conjugate_by_tau(tau: &RepresentationMatrix, raising: &RepresentationMatrix) -> Result<RepresentationMatrix> {
    if !tau.mul(tau)?.sub(&RepresentationMatrix::identity(tau.basis.clone()))?.is_zero() {
        return Err(Error::Mismatch("τ is not an involution on this basis".into()));
    }
    tau.mul(raising)?.mul(tau)
}

/// Matrix of the lowering generator `Y_η = E(j, i)`, `i < j`, on the cone
/// basis of `V^λ`, as `τ^λ ∘ X_{τη} ∘ τ^λ`.
pub fn lowering_matrix(i: usize, j: usize, lambda: &Weight, ctx: &ShapeContext) -> Result<RepresentationMatrix> {
    let n = lambda.n();
    if i >= j {
        return Err(Error::InadmissibleGenerator(alloc::format!("expected i < j, got ({i}, {j})")));
    }
    let y = GeneratorLabel::e(n, j, i)?;
    let basis = module_basis(lambda, ModuleKind::QuasiStandardCone)?;
    let tau = tau_matrix(&basis, ctx)?;
    let x = matrix_on_basis(&tau_partner(&y, n)?, &basis, ctx)?;
    conjugate_by_tau(&tau, &x)
}

/// `H_η = [X_η, Y_η]` on the cone basis.
pub fn cartan_matrix(i: usize, j: usize, lambda: &Weight, ctx: &ShapeContext) -> Result<RepresentationMatrix> {
    let x = matrix_of_generator(&GeneratorLabel::e(lambda.n(), i, j)?, lambda, ModuleKind::QuasiStandardCone, ctx)?;
    x.commutator(&lowering_matrix(i, j, lambda, ctx)?)
}

/// Column `k` of `g` on the cone computed through the full ring: act on the
/// completed tableau `δ^{compl(T)}`, then set trivial minors to 1 and
/// reduce. Valid for every generator, lowering ones included.
pub fn transported_column(
    g: &GeneratorLabel,
    basis: &ModuleBasis,
    k: usize,
    ctx: &ShapeContext,
) -> Result<Vec<Rational>> {
    require_cone(basis)?;
    cone_basis_check(basis, ctx)?;
    let n = basis.n();
    let full = complete_to_shape(&basis.tableau(k)?, basis.highest_weight())?;
    let p = DeltaPolynomial::monomial(Ring::full(n)?, Monomial::from_tableau(&full))?;
    let image = act_generator(g, &p)?.substitute_trivial()?;
    basis.coordinates(&reduce(&image, ctx.basis(RingKind::ReducedPlus)?)?)
}

/// Matrix of any generator on the cone, through the full ring.
pub fn transported_matrix(g: &GeneratorLabel, lambda: &Weight, ctx: &ShapeContext) -> Result<RepresentationMatrix> {
    let basis = module_basis(lambda, ModuleKind::QuasiStandardCone)?;
    let cols = (0..basis.len()).map(|k| transported_column(g, &basis, k, ctx)).collect::<Result<Vec<_>>>()?;
    RepresentationMatrix::from_columns(basis.elements.clone(), cols)
}

/// Checks `C · M_full = M_cone · C` for the raising generator `g`, where
/// `C` sends `δ^T` to the normal form of its image in the reduced ring.
/// Needs the full-ring basis in the context.
pub fn realizations_agree(g: &GeneratorLabel, lambda: &Weight, ctx: &ShapeContext) -> Result<bool> {
    let full = module_basis(lambda, ModuleKind::SemistandardFull)?;
    let cone = module_basis(lambda, ModuleKind::QuasiStandardCone)?;
    let reduced = ctx.basis(RingKind::ReducedPlus)?;
    let change: Vec<Vec<Rational>> = full
        .elements()
        .iter()
        .map(|m| {
            let p = DeltaPolynomial::monomial(Ring::full(lambda.n())?, m.clone())?.substitute_trivial()?;
            cone.coordinates(&reduce(&p, reduced)?)
        })
        .collect::<Result<_>>()?;
    let m_full = matrix_on_basis(g, &full, ctx)?;
    let m_cone = matrix_on_basis(g, &cone, ctx)?;
    // change[k] is column k of C.
    for k in 0..full.len() {
        let lhs: Vec<Rational> =
            (0..cone.len()).map(|r| (0..full.len()).map(|j| &change[j][r] * m_full.get(j, k)).sum()).collect();
        let rhs = m_cone.apply(&change[k]);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A word in the given matrices (indices, applied left to right) taking
/// basis vector `start` to a nonzero multiple of basis vector `goal`.
/// Words longer than `max_len` are not explored.
pub fn reaching_word(
    matrices: &[&RepresentationMatrix],
    start: usize,
    goal: usize,
    max_len: usize,
) -> Option<Vec<usize>> {
    let d = matrices.first()?.dim();
    let mut v = alloc::vec![Rational::zero(); d];
    v[start] = Rational::one();
    let mut word = Vec::new();
    search(matrices, &v, goal, max_len, &mut word).then_some(word)
}

fn search(matrices: &[&RepresentationMatrix], v: &[Rational], goal: usize, left: usize, word: &mut Vec<usize>) -> bool {
    if !v[goal].is_zero() && v.iter().enumerate().all(|(k, c)| k == goal || c.is_zero()) {
        return true;
    }
    if left == 0 {
        return false;
    }
    for (k, m) in matrices.iter().enumerate() {
        let w = m.apply(v);
        if w.iter().all(Zero::is_zero) {
            continue;
        }
        word.push(k);
        if search(matrices, &w, goal, left - 1, word) {
            return true;
        }
        word.pop();
    }
    false
}

impl fmt::Display for RepresentationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
