//! JSON documents for polynomials, tableaux, bases, matrices and graphs.
//!
//! Rationals are written as decimal strings `"p/q"` (or `"p"`), monomials as
//! objects from variable names to exponents. Every document is built from
//! ordered containers so the output is byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use shapes_core::groebner::GroebnerBasis;
use shapes_core::polyring::{DeltaPolynomial, DeltaVariable, Monomial, MonomialOrder, OrderKind, Ring, RingKind};
use shapes_core::representation::{DiamondGraph, ModuleBasis, RepresentationMatrix};
use shapes_core::tableaux::{Phase, SuperTableau, YoungTableau};
use shapes_core::{Error, Rational, Result, Weight};

pub type MonomialDoc = BTreeMap<String, u32>;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    pub monomial: MonomialDoc,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub ring: String,
    pub n: usize,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableauDoc {
    pub n: usize,
    pub columns: Vec<Vec<usize>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RelationsDoc {
    pub relations: Vec<PolynomialDoc>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroebnerDoc {
    pub ring: String,
    pub n: usize,
    pub order: String,
    pub elements: Vec<PolynomialDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub leading_terms: Option<Vec<MonomialDoc>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StraightenDoc {
    pub tableau: TableauDoc,
    pub normal_form: PolynomialDoc,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExtractDoc {
    pub tableau: TableauDoc,
    pub left: TableauDoc,
    pub right: TableauDoc,
    /// `(j, s)` of each extraction step, 1-based column and row.
    pub steps: Vec<(usize, usize)>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PhaseDoc {
    pub sign: i8,
    pub eps_power: u32,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TauDoc {
    pub tableau: TableauDoc,
    pub image: TableauDoc,
    pub phase: PhaseDoc,
    /// `τ^λ` of the tableau as a cone vector, when a weight was given.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub module_image: Option<PolynomialDoc>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BasisElementDoc {
    pub monomial: MonomialDoc,
    pub tableau: String,
    pub weight: Vec<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BasisDoc {
    pub n: usize,
    pub highest_weight: Vec<i64>,
    pub kind: String,
    pub dimension: usize,
    pub elements: Vec<BasisElementDoc>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub n: usize,
    pub highest_weight: Vec<i64>,
    pub kind: String,
    pub generator: String,
    pub basis: Vec<MonomialDoc>,
    /// Row-major; column `k` holds the coordinates of `g · basis[k]`.
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NodeDoc {
    pub id: usize,
    pub monomial: MonomialDoc,
    pub tableau: String,
    pub weight: Vec<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub source: usize,
    pub target: usize,
    pub generator: String,
    pub coeff: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub highest_weight: Vec<i64>,
    pub nodes: Vec<NodeDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ErrorDoc {
    pub error: ErrorBody,
}

pub fn rational_to_string(q: &Rational) -> String {
    q.to_string()
}

pub fn rational_from_str(s: &str) -> Result<Rational> {
    s.trim().parse().map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
}

pub fn monomial_doc(m: &Monomial) -> MonomialDoc {
    m.iter().map(|(v, e)| (v.name(), e)).collect()
}

pub fn monomial_from_doc(n: usize, doc: &MonomialDoc) -> Result<Monomial> {
    let mut m = Monomial::one();
    for (name, &e) in doc {
        m = m.mul(&Monomial::pow(DeltaVariable::parse(n, name)?, e));
    }
    Ok(m)
}

/// Terms are listed from the leading one down in the ring's paper order.
pub fn polynomial_doc(p: &DeltaPolynomial) -> PolynomialDoc {
    let ring = p.ring();
    let order = ring.paper_order();
    polynomial_doc_in(p, &order)
}

pub fn polynomial_doc_in(p: &DeltaPolynomial, order: &MonomialOrder) -> PolynomialDoc {
    let ring = p.ring();
    let terms = p
        .sorted_terms(order)
        .into_iter()
        .map(|(m, c)| TermDoc { coeff: rational_to_string(c), monomial: monomial_doc(m) })
        .collect();
    PolynomialDoc { ring: ring.kind.name().to_string(), n: ring.n, terms }
}

pub fn polynomial_from_doc(doc: &PolynomialDoc) -> Result<DeltaPolynomial> {
    let kind: RingKind = doc.ring.parse()?;
    let ring = Ring::new(kind, doc.n)?;
    let terms = doc
        .terms
        .iter()
        .map(|t| Ok((rational_from_str(&t.coeff)?, monomial_from_doc(doc.n, &t.monomial)?)))
        .collect::<Result<Vec<_>>>()?;
    DeltaPolynomial::from_terms(ring, terms)
}

pub fn tableau_doc(t: &YoungTableau) -> TableauDoc {
    TableauDoc { n: t.n(), columns: t.columns().iter().map(|c| c.entries()).collect() }
}

pub fn tableau_from_doc(doc: &TableauDoc) -> Result<YoungTableau> {
    let cols: Vec<&[usize]> = doc.columns.iter().map(Vec::as_slice).collect();
    YoungTableau::from_columns(doc.n, &cols)
}

pub fn relations_doc(relations: &[DeltaPolynomial]) -> RelationsDoc {
    RelationsDoc { relations: relations.iter().map(polynomial_doc).collect() }
}

pub fn groebner_doc(gb: &GroebnerBasis, emit_lt: bool) -> GroebnerDoc {
    let ring = gb.ring();
    GroebnerDoc {
        ring: ring.kind.name().to_string(),
        n: ring.n,
        order: gb.order().kind().name().to_string(),
        elements: gb.elements().iter().map(|p| polynomial_doc_in(p, gb.order())).collect(),
        leading_terms: emit_lt.then(|| gb.leading_terms().iter().map(monomial_doc).collect()),
    }
}

/// Reads a basis document back; the elements are trusted to be a reduced
/// basis (this is how cached bases are loaded).
pub fn groebner_from_doc(doc: &GroebnerDoc) -> Result<GroebnerBasis> {
    let kind: RingKind = doc.ring.parse()?;
    let order_kind: OrderKind = doc.order.parse()?;
    let elements = doc.elements.iter().map(polynomial_from_doc).collect::<Result<Vec<_>>>()?;
    GroebnerBasis::from_reduced(Ring::new(kind, doc.n)?, MonomialOrder::new(order_kind, doc.n)?, elements)
}

pub fn extract_doc(t: &YoungTableau, pair: &SuperTableau, steps: &[(usize, usize)]) -> ExtractDoc {
    ExtractDoc {
        tableau: tableau_doc(t),
        left: tableau_doc(pair.left()),
        right: tableau_doc(pair.right()),
        steps: steps.to_vec(),
    }
}

pub fn phase_doc(p: &Phase) -> PhaseDoc {
    PhaseDoc { sign: p.sign(), eps_power: p.eps_power() }
}

fn tableau_text(t: &YoungTableau) -> String {
    if t.is_empty() {
        "1".to_string()
    } else {
        t.to_string()
    }
}

pub fn basis_doc(basis: &ModuleBasis) -> Result<BasisDoc> {
    let elements = (0..basis.len())
        .map(|k| {
            Ok(BasisElementDoc {
                monomial: monomial_doc(&basis.elements()[k]),
                tableau: tableau_text(&basis.tableau(k)?),
                weight: basis.weight(k)?.coords().to_vec(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisDoc {
        n: basis.n(),
        highest_weight: basis.highest_weight().coords().to_vec(),
        kind: basis.kind().name().to_string(),
        dimension: basis.len(),
        elements,
    })
}

pub fn matrix_doc(basis: &ModuleBasis, generator: &str, m: &RepresentationMatrix) -> MatrixDoc {
    MatrixDoc {
        n: basis.n(),
        highest_weight: basis.highest_weight().coords().to_vec(),
        kind: basis.kind().name().to_string(),
        generator: generator.to_string(),
        basis: m.basis().iter().map(monomial_doc).collect(),
        rows: m.rows().iter().map(|r| r.iter().map(rational_to_string).collect()).collect(),
    }
}

pub fn graph_doc(g: &DiamondGraph) -> GraphDoc {
    GraphDoc {
        n: g.highest_weight.n(),
        highest_weight: g.highest_weight.coords().to_vec(),
        nodes: g
            .nodes
            .iter()
            .enumerate()
            .map(|(id, node)| NodeDoc {
                id,
                monomial: monomial_doc(&node.monomial),
                tableau: tableau_text(&node.tableau),
                weight: node.weight.coords().to_vec(),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|e| EdgeDoc {
                source: e.source,
                target: e.target,
                generator: e.generator.label(),
                coeff: rational_to_string(&e.coefficient),
            })
            .collect(),
    }
}

/// Snake-case name of the error variant.
pub fn error_kind(e: &Error) -> String {
    let debug = format!("{e:?}");
    let name: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
    let mut out = String::new();
    for (k, c) in name.chars().enumerate() {
        if c.is_uppercase() {
            if k > 0 {
                out.push('_');
            }
            out.extend(c.to_lowercase());
        } else {
            out.push(c);
        }
    }
    out
}

pub fn error_doc(e: &Error) -> ErrorDoc {
    ErrorDoc { error: ErrorBody { kind: error_kind(e), message: e.to_string() } }
}

pub fn weight_from_list(n: usize, text: &str) -> std::result::Result<Weight, String> {
    let coords = text
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("cannot read weight {text:?}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if coords.len() + 1 != n {
        return Err(format!("weight {text:?} has {} entries, expected {} for n = {n}", coords.len(), n - 1));
    }
    Weight::new(coords).map_err(|e| e.to_string())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use shapes_core::plucker_ideals::generating_set;

    #[test]
    fn polynomial_round_trip() {
        let gens = generating_set(4, RingKind::Full).unwrap().generators;
        for p in &gens {
            let doc = polynomial_doc(p);
            let text = serde_json::to_string(&doc).unwrap();
            let back: PolynomialDoc = serde_json::from_str(&text).unwrap();
            assert_eq!(&polynomial_from_doc(&back).unwrap(), p);
        }
    }

    #[test]
    fn schema_shape() {
        let p = polynomial_doc(&generating_set(3, RingKind::ReducedPlus).unwrap().generators[0]);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["ring"], "reduced_plus");
        assert_eq!(v["n"], 3);
        assert!(v["terms"][0]["coeff"].is_string());
        assert!(v["terms"][0]["monomial"].is_object());
    }

    #[test]
    fn tableau_json_form() {
        let t = YoungTableau::parse(4, "1 2 3/3 4").unwrap();
        let doc = tableau_doc(&t);
        assert_eq!(serde_json::to_string(&doc).unwrap(), r#"{"n":4,"columns":[[1,3],[2,4],[3]]}"#);
        assert_eq!(tableau_from_doc(&doc).unwrap(), t);
    }

    #[test]
    fn rationals() {
        let q = rational_from_str("-3/6").unwrap();
        assert_eq!(rational_to_string(&q), "-1/2");
        assert_eq!(rational_to_string(&rational_from_str("4").unwrap()), "4");
        assert!(rational_from_str("x").is_err());
    }

    #[test]
    fn error_kinds() {
        assert_eq!(error_kind(&Error::InvalidWeight("w".into())), "invalid_weight");
        assert_eq!(error_kind(&Error::ZeroPolynomial), "zero_polynomial");
    }
}
