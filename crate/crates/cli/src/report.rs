//! Canonical JSON pieces for reports. Keys are sorted, scalars are strings, subspaces are their
//! reduced echelon bases.

use jforge::identity::Violation;
use jforge::scalar::{self, Scalar};
use jforge::{Matrix, Subspace};
use serde_json::{json, Value};

use crate::files::{sparse_operator, sparse_vector, InputError};

pub fn scalar(c: &Scalar) -> Value {
    Value::String(scalar::format(c))
}

pub fn vector(names: &[String], v: &[Scalar]) -> Value {
    json!(sparse_vector(names, v))
}

pub fn operator(names: &[String], m: &Matrix) -> Value {
    json!(sparse_operator(names, m))
}

/// Dense rows.
pub fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| scalar(&m[(i, j)])).collect())).collect())
}

pub fn subspace(names: &[String], s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| vector(names, v)).collect())
}

pub fn labels(names: &[String], idx: &[usize]) -> Value {
    json!(idx.iter().map(|&i| names[i].clone()).collect::<Vec<_>>())
}

pub fn violation(names: &[String], v: &Violation) -> Value {
    let indices: Vec<Vec<String>> = v.indices.iter().map(|m| m.iter().map(|&i| names[i].clone()).collect()).collect();
    json!({
        "condition": v.condition,
        "indices": indices,
        "left": vector(names, &v.left),
        "right": vector(names, &v.right),
    })
}

/// Outcome of a command: the report and whether every checked property held.
pub struct Outcome {
    pub report: Value,
    pub pass: bool,
}

impl Outcome {
    pub fn pass(report: Value) -> Self {
        Outcome { report, pass: true }
    }

    pub fn fail(report: Value) -> Self {
        Outcome { report, pass: false }
    }
}

pub type CmdResult = Result<Outcome, InputError>;

/// Library errors split into bad input and failed properties.
pub fn lib_error(e: jforge::Error, context: Value) -> CmdResult {
    use jforge::Error::*;
    match e {
        DimensionMismatch(_) | UnknownName(_) | BadParams(_) => Err(InputError(e.to_string())),
        other => {
            let mut r = context;
            r["ok"] = json!(false);
            r["error"] = json!(other.to_string());
            Ok(Outcome::fail(r))
        }
    }
}
