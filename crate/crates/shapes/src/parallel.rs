//! Matrix assembly with one rayon task per column.
//!
//! Columns are collected in basis order, so the matrices are identical to
//! the sequential ones in the core crate.

use rayon::prelude::*;
use shapes_core::groebner::ShapeContext;
use shapes_core::representation::{
    conjugate_by_tau, generator_column, module_basis, tau_column, tau_partner, DiamondGraph, GeneratorLabel,
    ModuleBasis, ModuleKind, RepresentationMatrix,
};
use shapes_core::{Error, Result, Weight};

pub fn matrix_on_basis(g: &GeneratorLabel, basis: &ModuleBasis, ctx: &ShapeContext) -> Result<RepresentationMatrix> {
    let cols =
        (0..basis.len()).into_par_iter().map(|k| generator_column(g, basis, k, ctx)).collect::<Result<Vec<_>>>()?;
    RepresentationMatrix::from_columns(basis.elements().to_vec(), cols)
}

pub fn tau_matrix(basis: &ModuleBasis, ctx: &ShapeContext) -> Result<RepresentationMatrix> {
    if basis.kind() != ModuleKind::QuasiStandardCone {
        return Err(Error::Mismatch(format!("expected a cone basis, got {}", basis.kind())));
    }
    let cols = (0..basis.len()).into_par_iter().map(|k| tau_column(basis, k, ctx)).collect::<Result<Vec<_>>>()?;
    RepresentationMatrix::from_columns(basis.elements().to_vec(), cols)
}

/// Any generator on a module basis. Lowering generators on the cone go
/// through `τ^λ`; everything else is computed directly.
pub fn generator_matrix(g: &GeneratorLabel, basis: &ModuleBasis, ctx: &ShapeContext) -> Result<RepresentationMatrix> {
    if basis.kind() == ModuleKind::QuasiStandardCone && g.is_lowering() {
        let tau = tau_matrix(basis, ctx)?;
        let x = matrix_on_basis(&tau_partner(g, basis.n())?, basis, ctx)?;
        return conjugate_by_tau(&tau, &x);
    }
    matrix_on_basis(g, basis, ctx)
}

/// Same graph as the core `diamond_graph`.
pub fn diamond_graph(lambda: &Weight, ctx: &ShapeContext) -> Result<DiamondGraph> {
    let n = lambda.n();
    let basis = module_basis(lambda, ModuleKind::QuasiStandardCone)?;
    let tau = tau_matrix(&basis, ctx)?;
    let mut matrices = Vec::new();
    for k in 1..n {
        let x = GeneratorLabel::simple_raising(n, k)?;
        let m = matrix_on_basis(&x, &basis, ctx)?;
        matrices.push((x, m));
    }
    for k in 1..n {
        let y = GeneratorLabel::simple_lowering(n, k)?;
        let x = matrix_on_basis(&tau_partner(&y, n)?, &basis, ctx)?;
        matrices.push((y, conjugate_by_tau(&tau, &x)?));
    }
    DiamondGraph::from_matrices(&basis, &matrices)
}
