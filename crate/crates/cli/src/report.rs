//! JSON views of library results.

use fuzzy_homlie::format::{flag_to_doc, subspace_to_json};
use fuzzy_homlie::hom_lie::{AxiomFailure, AxiomKind, ClosureViolation};
use fuzzy_homlie::oracle::{Finding, FindingKind, PointwiseFailure, SuiteReport};
use fuzzy_homlie::{FlagReport, FuzzyFlag, Subspace, Vector};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Serialize)]
pub struct InputRecord {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputRecord>,
    pub verdict: String,
    pub details: Value,
    pub timing_ms: u64,
}

pub fn vector(v: &Vector) -> Value {
    json!(v.coords().iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn axiom_failure(f: &AxiomFailure) -> Value {
    let kind = match f.kind {
        AxiomKind::SkewSymmetry => "skew-symmetry",
        AxiomKind::HomJacobi => "hom-jacobi",
    };
    json!({ "kind": kind, "witness": f.witness, "defect": vector(&f.defect) })
}

pub fn violation(v: &ClosureViolation) -> Value {
    match v {
        ClosureViolation::Twist { basis_index } => json!({ "kind": "twist", "basis_index": basis_index }),
        ClosureViolation::Bracket { left, right } => {
            json!({ "kind": "bracket", "left": left, "right": right })
        }
    }
}

pub fn flag_report(r: &FlagReport) -> Value {
    json!({
        "holds": r.holds,
        "failure": r.failure.as_ref().map(|f| json!({
            "chain_index": f.chain_index,
            "level": f.level.to_string(),
            "violation": violation(&f.violation),
        })),
    })
}

pub fn pointwise_failure(f: &PointwiseFailure) -> Value {
    json!({
        "condition": f.condition.to_string(),
        "x": f.x,
        "y": f.y,
        "scalar": f.scalar,
        "lhs": f.lhs.to_string(),
        "rhs": f.rhs.to_string(),
    })
}

pub fn subspace(s: &Subspace) -> Value {
    subspace_to_json(s)
}

pub fn flag(mu: &FuzzyFlag) -> Value {
    serde_json::to_value(flag_to_doc(mu)).expect("flag documents serialize")
}

pub fn suite(report: &SuiteReport) -> Value {
    json!(report
        .tallies
        .iter()
        .map(|t| json!({
            "id": t.id,
            "asserted": t.asserted,
            "instances": t.instances,
            "agreements": t.agreements,
            "disagreements": t.disagreements,
            "witnesses": t.witnesses,
        }))
        .collect::<Vec<_>>())
}

pub fn finding(f: &Finding) -> Value {
    let kind = match f.kind {
        FindingKind::Counterexample => "counterexample",
        FindingKind::Exhausted => "exhausted",
    };
    let instance = f
        .instance
        .as_deref()
        .map(|text| serde_json::from_str::<Value>(text).expect("stored instances are JSON"));
    json!({
        "kind": kind,
        "checked_count": f.checked_count,
        "instance": instance,
        "witness": f.witness.as_ref().map(pointwise_failure),
    })
}
