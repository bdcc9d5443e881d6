use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use super::{
    conjugate_by_tau, matrix_on_basis, module_basis, tau_matrix, tau_partner, GeneratorLabel, ModuleBasis, ModuleKind,
    RepresentationMatrix,
};
use crate::groebner::ShapeContext;
use crate::polyring::Monomial;
use crate::tableaux::YoungTableau;
use crate::{Error, Rational, Result, Weight};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiamondNode {
    pub monomial: Monomial,
    pub tableau: YoungTableau,
    pub weight: Weight,
}

/// `coefficient` is the coordinate of `target` in `generator · source`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiamondEdge {
    pub source: usize,
    pub target: usize,
    pub generator: GeneratorLabel,
    pub coefficient: Rational,
}

/// The cone basis of `V^λ` with the action of the simple generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiamondGraph {
    pub highest_weight: Weight,
    pub nodes: Vec<DiamondNode>,
    pub edges: Vec<DiamondEdge>,
}

impl DiamondGraph {
    /// Builds the graph from a cone basis and the matrices of some
    /// generators. Edge weights are checked: the target of an `E(i, j)` edge
    /// has the weight of the source plus `θ_i - θ_j`.
    pub fn from_matrices(basis: &ModuleBasis, matrices: &[(GeneratorLabel, RepresentationMatrix)]) -> Result<Self> {
        let n = basis.n();
        let nodes = (0..basis.len())
            .map(|k| {
                Ok(DiamondNode {
                    monomial: basis.elements()[k].clone(),
                    tableau: basis.tableau(k)?,
                    weight: basis.weight(k)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut edges = Vec::new();
        for (g, m) in matrices {
            let GeneratorLabel::E(i, j) = *g else {
                return Err(Error::InadmissibleGenerator(alloc::format!("{g} has no edges")));
            };
            let root = Weight::root(n, i, j)?;
            for (target, source, coefficient) in m.nonzero_entries() {
                if nodes[source].weight.checked_add(&root)? != nodes[target].weight {
                    return Err(Error::Mismatch(alloc::format!(
                        "{g} edge {} -> {} breaks the weight grading",
                        nodes[source].monomial,
                        nodes[target].monomial
                    )));
                }
                edges.push(DiamondEdge { source, target, generator: g.clone(), coefficient });
            }
        }
        Ok(DiamondGraph { highest_weight: basis.highest_weight().clone(), nodes, edges })
    }

    /// Graphviz text. Nodes carry the tableau rows and the weight, edges
    /// `gen:coeff`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph diamond {{");
        let _ = writeln!(out, "  label=\"V{}\";", self.highest_weight);
        for (k, node) in self.nodes.iter().enumerate() {
            let text = if node.tableau.is_empty() { "1".to_string() } else { node.tableau.to_string() };
            let _ = writeln!(out, "  n{k} [label=\"{} {}\"];", text, node.weight);
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}:{}\"];", e.source, e.target, e.generator, e.coefficient);
        }
        out.push_str("}\n");
        out
    }
}

/// The diamond graph of `V^λ`: raising edges for every simple `X_{α_k}`,
/// lowering edges for every `Y_{α_k}` obtained through `τ^λ`.
pub fn diamond_graph(lambda: &Weight, ctx: &ShapeContext) -> Result<DiamondGraph> {
    let n = lambda.n();
    let basis = module_basis(lambda, ModuleKind::QuasiStandardCone)?;
    let mut matrices = Vec::new();
    for k in 1..n {
        let x = GeneratorLabel::simple_raising(n, k)?;
        let m = matrix_on_basis(&x, &basis, ctx)?;
        matrices.push((x, m));
    }
    let tau = tau_matrix(&basis, ctx)?;
    for k in 1..n {
        let y = GeneratorLabel::simple_lowering(n, k)?;
        let x = matrix_on_basis(&tau_partner(&y, n)?, &basis, ctx)?;
        matrices.push((y, conjugate_by_tau(&tau, &x)?));
    }
    DiamondGraph::from_matrices(&basis, &matrices)
}
