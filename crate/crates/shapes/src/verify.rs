//! The oracle suite behind `shapes verify`.

use serde::Serialize;
use serde_json::{json, Value};
use shapes_core::groebner::{reduce, ShapeContext};
use shapes_core::matrix_oracle::{
    evaluate_delta, evaluate_poly, flow_derivative, random_polynomial, random_sl_point, random_unipotent_point,
    GroupPoint, QMatrix,
};
use shapes_core::plucker_ideals::generating_set;
use shapes_core::polyring::{all_variables, DeltaVariable, RingKind};
use shapes_core::representation::{act_generator, GeneratorLabel};
use shapes_core::tableaux::{tau_tableau, Column, YoungTableau};
use shapes_core::{Rational, Result};

use crate::format::{polynomial_doc, rational_to_string};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckSummary {
    pub name: &'static str,
    pub cases: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub checks: Vec<CheckSummary>,
}

/// The first failing case of a check.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub detail: Value,
}

pub enum Outcome {
    Passed(VerifyReport),
    Failed(Counterexample),
}

fn matrix_json(m: &QMatrix) -> Value {
    let rows: Vec<Vec<String>> =
        (0..m.n()).map(|i| (0..m.n()).map(|j| rational_to_string(m.get(i, j))).collect()).collect();
    json!(rows)
}

fn point_json(g: &GroupPoint) -> Value {
    matrix_json(g.matrix())
}

/// Runs every check with `samples` seeded cases; stops at the first
/// counterexample.
pub fn run(n: usize, seed: u64, samples: usize, ctx: &ShapeContext) -> Result<Outcome> {
    let mut checks = Vec::new();
    macro_rules! check {
        ($f:expr) => {
            match $f? {
                Ok(summary) => checks.push(summary),
                Err(c) => return Ok(Outcome::Failed(c)),
            }
        };
    }
    check!(plucker_vanishing(n, seed, samples));
    check!(derivation_flow(n, seed, samples));
    check!(normal_forms_preserve_values(n, seed, samples, ctx));
    check!(theta_tau_coherence(n, seed, samples));
    Ok(Outcome::Passed(VerifyReport { n, seed, samples, passed: true, checks }))
}

type CheckResult = Result<std::result::Result<CheckSummary, Counterexample>>;

fn plucker_vanishing(n: usize, seed: u64, samples: usize) -> CheckResult {
    let name = "plucker_vanishing";
    let relations = generating_set(n, RingKind::Full)?.generators;
    let mut cases = 0;
    for s in 0..samples as u64 {
        let g = random_sl_point(n, seed.wrapping_add(s))?;
        for r in &relations {
            let value = evaluate_poly(r, &g)?;
            if !num_traits::Zero::is_zero(&value) {
                let detail = json!({"relation": polynomial_doc(r), "point": point_json(&g), "value": rational_to_string(&value)});
                return Ok(Err(Counterexample { check: name, detail }));
            }
            cases += 1;
        }
    }
    Ok(Ok(CheckSummary { name, cases }))
}

fn generators(n: usize) -> Result<Vec<GeneratorLabel>> {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                gens.push(GeneratorLabel::e(n, i, j)?);
            }
        }
    }
    for k in 1..n {
        gens.push(GeneratorLabel::simple_coroot(n, k)?);
    }
    Ok(gens)
}

fn derivation_flow(n: usize, seed: u64, samples: usize) -> CheckResult {
    let name = "derivation_flow";
    let gens = generators(n)?;
    let mut cases = 0;
    for s in 0..samples as u64 {
        let f = random_polynomial(n, seed.wrapping_add(s), 4, 3)?;
        let g = random_sl_point(n, seed.wrapping_add(s).wrapping_add(1 << 32))?;
        for x in &gens {
            let lhs = evaluate_poly(&act_generator(x, &f)?, &g)?;
            let rhs = flow_derivative(x, &f, &g)?;
            if lhs != rhs {
                let detail = json!({
                    "generator": x.label(),
                    "polynomial": polynomial_doc(&f),
                    "point": point_json(&g),
                    "derivation": rational_to_string(&lhs),
                    "flow": rational_to_string(&rhs),
                });
                return Ok(Err(Counterexample { check: name, detail }));
            }
            cases += 1;
        }
    }
    Ok(Ok(CheckSummary { name, cases }))
}

fn normal_forms_preserve_values(n: usize, seed: u64, samples: usize, ctx: &ShapeContext) -> CheckResult {
    let name = "normal_form_values";
    let gb = ctx.basis(RingKind::ReducedPlus)?;
    let mut cases = 0;
    for s in 0..samples as u64 {
        let p = random_polynomial(n, seed.wrapping_add(s), 5, 3)?.substitute_trivial()?;
        let nf = reduce(&p, gb)?;
        let g = random_unipotent_point(n, seed.wrapping_add(s))?;
        let (before, after) = (evaluate_poly(&p, &g)?, evaluate_poly(&nf, &g)?);
        if before != after {
            let detail = json!({
                "polynomial": polynomial_doc(&p),
                "normal_form": polynomial_doc(&nf),
                "point": point_json(&g),
                "value": rational_to_string(&before),
                "normal_form_value": rational_to_string(&after),
            });
            return Ok(Err(Counterexample { check: name, detail }));
        }
        cases += 1;
    }
    Ok(Ok(CheckSummary { name, cases }))
}

// Row reversal of g against τ on single columns, up to the tracked sign.
fn theta_tau_coherence(n: usize, seed: u64, samples: usize) -> CheckResult {
    let name = "theta_tau_coherence";
    let mut cases = 0;
    for s in 0..samples as u64 {
        let g = random_sl_point(n, seed.wrapping_add(s))?;
        let flipped = g.flip_rows();
        for v in all_variables(n)? {
            let col = Column::from_set(v.set())?;
            let (phase, image) = tau_tableau(&YoungTableau::new(n, vec![col])?);
            let reflected = DeltaVariable::from_set(image.columns()[0].set())?;
            let lhs = flipped.leading_minor(&v.indices());
            let rhs = Rational::from_integer(phase.sign().into()) * evaluate_delta(&reflected, &g)?;
            if lhs != rhs {
                let detail = json!({
                    "variable": v.name(),
                    "point": point_json(&g),
                    "flipped_minor": rational_to_string(&lhs),
                    "signed_reflection": rational_to_string(&rhs),
                });
                return Ok(Err(Counterexample { check: name, detail }));
            }
            cases += 1;
        }
    }
    Ok(Ok(CheckSummary { name, cases }))
}
