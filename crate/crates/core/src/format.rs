//! JSON documents for algebras, subspaces, flags and morphisms.
//!
//! Scalars and levels are exact strings (`"3"`, `"-1/2"`); basis indices
//! are 0-based. Unknown keys are rejected.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::fuzzy::{FuzzyFlag, Level};
use crate::hom_lie::{HomLieAlgebra, Morphism};
use crate::linalg::{Matrix, Subspace, Vector};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub field: Value,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub brackets: Vec<(usize, usize, Vec<String>)>,
    pub alpha: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainEntryDoc {
    pub level: String,
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub chain: Vec<ChainEntryDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub baseline: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceDoc {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

/// Morphism document; `source` and `target` name algebra files.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub source: String,
    pub target: String,
    pub matrix: Vec<Vec<String>>,
}

/// A list of (algebra, flag) components, used to store search findings.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub components: Vec<ComponentDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub algebra: AlgebraDoc,
    pub flag: FlagDoc,
}

fn from_text<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn field_to_json(field: FieldSpec) -> Value {
    match field {
        FieldSpec::Rationals => json!("Q"),
        FieldSpec::Prime(p) => json!({ "gf": p }),
    }
}

pub fn field_from_json(value: &Value) -> Result<FieldSpec> {
    match value {
        Value::String(s) if s == "Q" => Ok(FieldSpec::Rationals),
        Value::Object(map) if map.len() == 1 => match map.get("gf").and_then(Value::as_u64) {
            Some(p) => FieldSpec::prime(p),
            None => Err(Error::invariant(format!("unrecognized field {value}"))),
        },
        _ => Err(Error::invariant(format!(
            "field must be \"Q\" or {{\"gf\": p}}, got {value}"
        ))),
    }
}

fn parse_row(field: FieldSpec, dim: usize, row: &[String], what: &str) -> Result<Vector> {
    if row.len() != dim {
        return Err(Error::invariant(format!(
            "{what}: row has {} entries, expected {dim}",
            row.len()
        )));
    }
    let coords = row
        .iter()
        .map(|s| field.parse_scalar(s))
        .collect::<Result<Vec<_>>>()?;
    Vector::new(field, coords)
}

fn row_strings(v: &Vector) -> Vec<String> {
    v.coords().iter().map(ToString::to_string).collect()
}

fn parse_matrix(field: FieldSpec, rows: usize, cols: usize, doc: &[Vec<String>], what: &str) -> Result<Matrix> {
    if doc.len() != rows {
        return Err(Error::invariant(format!(
            "{what}: {} rows, expected {rows}",
            doc.len()
        )));
    }
    let rows = doc
        .iter()
        .map(|r| parse_row(field, cols, r, what))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, cols, rows)
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors().iter().map(row_strings).collect()
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<HomLieAlgebra> {
    let field = field_from_json(&doc.field)?;
    let alpha = parse_matrix(field, doc.dim, doc.dim, &doc.alpha, "alpha")?;
    let brackets = doc
        .brackets
        .iter()
        .map(|(i, j, c)| Ok((*i, *j, parse_row(field, doc.dim, c, "bracket")?)))
        .collect::<Result<Vec<_>>>()?;
    HomLieAlgebra::new(field, doc.dim, brackets, alpha, doc.name.clone())
}

pub fn algebra_to_doc(a: &HomLieAlgebra) -> AlgebraDoc {
    AlgebraDoc {
        field: field_to_json(a.field()),
        dim: a.dim(),
        name: a.name().map(str::to_owned),
        brackets: a
            .structure()
            .map(|(i, j, v)| (i, j, row_strings(v)))
            .collect(),
        alpha: matrix_strings(a.alpha()),
    }
}

pub fn parse_algebra(text: &str) -> Result<HomLieAlgebra> {
    algebra_from_doc(&from_text(text)?)
}

pub fn serialize_algebra(a: &HomLieAlgebra) -> String {
    pretty(&algebra_to_doc(a))
}

pub fn parse_subspace(text: &str, field: FieldSpec) -> Result<Subspace> {
    let doc: SubspaceDoc = from_text(text)?;
    let rows = doc
        .basis
        .iter()
        .map(|r| parse_row(field, doc.dim, r, "basis"))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(field, doc.dim, rows)
}

pub fn subspace_to_json(s: &Subspace) -> Value {
    json!({
        "dim": s.ambient_dim(),
        "basis": s.basis().iter().map(row_strings).collect::<Vec<_>>(),
    })
}

pub fn serialize_subspace(s: &Subspace) -> String {
    pretty(&subspace_to_json(s))
}

/// Parses a flag document. `context` supplies the field and dimension of
/// the algebra the flag lives on; when the document carries its own they
/// must agree.
pub fn flag_from_doc(doc: &FlagDoc, context: Option<(FieldSpec, usize)>) -> Result<FuzzyFlag> {
    let doc_field = doc.field.as_ref().map(field_from_json).transpose()?;
    let field = match (context, doc_field) {
        (Some((f, _)), Some(g)) if f != g => return Err(Error::FieldMismatch),
        (Some((f, _)), _) => f,
        (None, Some(g)) => g,
        (None, None) => FieldSpec::Rationals,
    };
    let inferred = doc
        .chain
        .iter()
        .flat_map(|e| e.basis.first())
        .map(Vec::len)
        .next();
    let dim = match (context, doc.dim) {
        (Some((_, n)), Some(m)) if n != m => return Err(Error::dims(n, m)),
        (Some((_, n)), _) => n,
        (None, Some(m)) => m,
        (None, None) => inferred
            .ok_or_else(|| Error::invariant("cannot infer the flag dimension; add \"dim\""))?,
    };
    let chain = doc
        .chain
        .iter()
        .map(|e| {
            let level: Level = e.level.parse()?;
            let rows = e
                .basis
                .iter()
                .map(|r| parse_row(field, dim, r, "chain basis"))
                .collect::<Result<Vec<_>>>()?;
            Ok((Subspace::span(field, dim, rows)?, level))
        })
        .collect::<Result<Vec<_>>>()?;
    let baseline = doc.baseline.as_deref().map(str::parse).transpose()?;
    FuzzyFlag::new(field, dim, chain, baseline)
}

pub fn flag_to_doc(mu: &FuzzyFlag) -> FlagDoc {
    FlagDoc {
        field: Some(field_to_json(mu.field())),
        dim: Some(mu.dim()),
        chain: mu
            .proper_chain()
            .iter()
            .map(|(s, t)| ChainEntryDoc {
                level: t.to_string(),
                basis: s.basis().iter().map(row_strings).collect(),
            })
            .collect(),
        baseline: mu.baseline().map(ToString::to_string),
    }
}

pub fn parse_flag(text: &str, context: Option<(FieldSpec, usize)>) -> Result<FuzzyFlag> {
    flag_from_doc(&from_text(text)?, context)
}

pub fn serialize_flag(mu: &FuzzyFlag) -> String {
    pretty(&flag_to_doc(mu))
}

pub fn parse_morphism_doc(text: &str) -> Result<MorphismDoc> {
    from_text(text)
}

/// Builds the (uncertified) morphism described by `doc`.
pub fn morphism_from_doc(doc: &MorphismDoc, source: HomLieAlgebra, target: HomLieAlgebra) -> Result<Morphism> {
    if source.field() != target.field() {
        return Err(Error::FieldMismatch);
    }
    let m = parse_matrix(source.field(), target.dim(), source.dim(), &doc.matrix, "matrix")?;
    Ok(Morphism::new(source, target, m))
}

pub fn morphism_to_doc(f: &Morphism, source: &str, target: &str) -> MorphismDoc {
    MorphismDoc {
        source: source.to_owned(),
        target: target.to_owned(),
        matrix: matrix_strings(f.matrix()),
    }
}

pub fn serialize_morphism(f: &Morphism, source: &str, target: &str) -> String {
    pretty(&morphism_to_doc(f, source, target))
}

pub fn instance_to_doc(components: &[(&HomLieAlgebra, &FuzzyFlag)]) -> InstanceDoc {
    InstanceDoc {
        components: components
            .iter()
            .map(|(a, mu)| ComponentDoc {
                algebra: algebra_to_doc(a),
                flag: flag_to_doc(mu),
            })
            .collect(),
    }
}

pub fn instance_from_doc(doc: &InstanceDoc) -> Result<Vec<(HomLieAlgebra, FuzzyFlag)>> {
    doc.components
        .iter()
        .map(|c| {
            let a = algebra_from_doc(&c.algebra)?;
            let mu = flag_from_doc(&c.flag, Some((a.field(), a.dim())))?;
            Ok((a, mu))
        })
        .collect()
}

pub fn parse_instance(text: &str) -> Result<Vec<(HomLieAlgebra, FuzzyFlag)>> {
    instance_from_doc(&from_text(text)?)
}

pub fn serialize_instance(components: &[(&HomLieAlgebra, &FuzzyFlag)]) -> String {
    pretty(&instance_to_doc(components))
}
