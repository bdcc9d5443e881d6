//! Actions of `sl(n)` on the shape algebras, module bases, representation
//! matrices, the symmetry `τ` and the diamond cone.

mod diamond;
mod generators;
mod module;
pub mod wildberger;

pub use diamond::{diamond_graph, DiamondEdge, DiamondGraph, DiamondNode};
pub use generators::GeneratorLabel;
pub use module::{
    cartan_matrix, common_kernel, conjugate_by_tau, generator_column, lowering_matrix, matrix_of_generator,
    matrix_on_basis, module_basis, reaching_word, realizations_agree, tau_column, tau_matrix, tau_module, tau_partner,
    transported_column, transported_matrix, ModuleBasis, ModuleKind, RepresentationMatrix,
};
pub use wildberger::{wildberger_index, wildberger_map, WildbergerIndex};

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::polyring::{DeltaPolynomial, DeltaVariable, Monomial, RingKind};
use crate::tableaux::complete_to_shape;
use crate::{Error, Rational, Result, Weight};

/// Multiplicity of each index `1..=n` among the column entries of `m`.
pub fn theta_counts(m: &Monomial, n: usize) -> Vec<i64> {
    let mut counts = alloc::vec![0i64; n];
    for (v, e) in m.iter() {
        for i in v.indices() {
            counts[i - 1] += i64::from(e);
        }
    }
    counts
}

/// The weight `Σ_i c_i θ_i` of `δ^m`, where `c_i` counts the entries equal
/// to `i`; `H` acts on `δ^m` by `Σ_i c_i θ_i(H)`.
pub fn weight_of_monomial(m: &Monomial, n: usize) -> Weight {
    Weight::from_theta(&theta_counts(m, n)).expect("rank checked by the monomial")
}

/// Weight of a cone vector of `V^λ`: the weight of its completion to shape
/// `λ`.
pub fn module_weight(m: &Monomial, lambda: &Weight) -> Result<Weight> {
    let t = complete_to_shape(&m.tableau(lambda.n())?, lambda)?;
    Ok(weight_of_monomial(&Monomial::from_tableau(&t), lambda.n()))
}

/// Dimension of `V^λ` by Weyl's formula `Π_{i<j} (l_i - l_j) / (j - i)`,
/// with `l_i = λ_i + n - i` for the row lengths `λ_i`.
pub fn weyl_dimension(lambda: &Weight) -> Result<BigUint> {
    if !lambda.is_dominant() {
        return Err(Error::InvalidWeight(alloc::format!("{lambda} is not dominant")));
    }
    let n = lambda.n();
    let rows = lambda.theta();
    let shifted: Vec<u64> = rows.iter().enumerate().map(|(i, &r)| (r + (n - i) as i64) as u64).collect();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..n {
        for j in i + 1..n {
            num *= shifted[i] - shifted[j];
            den *= (j - i) as u64;
        }
    }
    Ok(num / den)
}

/// Image of a single variable under a generator, as a polynomial in the
/// same ring.
fn act_on_variable(x: &GeneratorLabel, v: &DeltaVariable, p: &DeltaPolynomial) -> Result<DeltaPolynomial> {
    let ring = p.ring();
    match x {
        GeneratorLabel::H(theta) => {
            let weight: i64 = v.indices().iter().map(|&i| theta[i - 1]).sum();
            DeltaPolynomial::term(ring, Monomial::var(*v), Rational::from_integer(weight.into()))
        }
        GeneratorLabel::E(i, j) => {
            let Some((sign, set)) = v.set().substitute(*j, *i) else {
                return Ok(DeltaPolynomial::zero(ring));
            };
            let image = DeltaVariable::from_set(set)?;
            let sign = Rational::from_integer(sign.into());
            let full = crate::polyring::Ring::full(ring.n)?;
            let term = DeltaPolynomial::term(full, Monomial::var(image), sign)?;
            match ring.kind {
                RingKind::Full => Ok(term),
                RingKind::ReducedPlus => term.substitute_trivial(),
                RingKind::ReducedMinus => term.substitute_anti_trivial(),
            }
        }
    }
}

/// The derivation of `x` on `p`.
///
/// `E_{ij}` sends `δ_I` (with `j ∈ I`, `i ∉ I`) to `δ_I` with `j` replaced
/// by `i` in place, and kills it otherwise; `H` multiplies `δ_I` by
/// `Σ_{i∈I} θ_i(H)`. On the reduced ring only raising generators and `H`
/// are admissible (lowering ones for the mirrored ring).
pub fn act_generator(x: &GeneratorLabel, p: &DeltaPolynomial) -> Result<DeltaPolynomial> {
    let ring = p.ring();
    x.validate(ring.n)?;
    let admissible = match ring.kind {
        RingKind::Full => true,
        RingKind::ReducedPlus => !x.is_lowering(),
        RingKind::ReducedMinus => !x.is_raising(),
    };
    if !admissible {
        return Err(Error::InadmissibleGenerator(alloc::format!("{x} on {ring}")));
    }
    let mut out = DeltaPolynomial::zero(ring);
    for (m, c) in p.terms() {
        for (v, e) in m.iter() {
            let image = act_on_variable(x, v, p)?;
            if image.is_zero() {
                continue;
            }
            let rest = m.checked_div(&Monomial::var(*v)).expect("variable of the monomial");
            let coeff = c * Rational::from_integer(e.into());
            out.add_scaled(&coeff, &rest, &image);
        }
    }
    Ok(out)
}
