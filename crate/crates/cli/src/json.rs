//! JSON forms of rings, matrices, pairs and reports.
//!
//! A matrix is `{"ring": {...}, "size": k, "rows": [[...], ...]}`. Entries
//! are written in the ring's text grammar; on input plain JSON integers are
//! accepted as well.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use suslin_core::check::Report;
use suslin_core::{Elem, Mat, Ring, SuslinPair};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingJson {
    Integer,
    Modular { modulus: u64 },
    Poly { variables: Vec<String> },
}

impl From<&Ring> for RingJson {
    fn from(ring: &Ring) -> Self {
        match ring {
            Ring::Integer => RingJson::Integer,
            Ring::Modular(m) => RingJson::Modular { modulus: *m },
            Ring::Poly(vars) => RingJson::Poly {
                variables: vars.names().to_vec(),
            },
        }
    }
}

impl RingJson {
    pub fn to_ring(&self) -> Result<Ring, CliError> {
        Ok(match self {
            RingJson::Integer => Ring::Integer,
            RingJson::Modular { modulus } => Ring::modular(*modulus)?,
            RingJson::Poly { variables } => Ring::poly(variables)?,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatJson {
    pub ring: RingJson,
    pub size: usize,
    pub rows: Vec<Vec<Entry>>,
}

impl From<&Mat> for MatJson {
    fn from(m: &Mat) -> Self {
        MatJson {
            ring: m.ring().into(),
            size: m.size(),
            rows: m
                .rows()
                .map(|row| row.iter().map(|e| Entry::Text(e.to_string())).collect())
                .collect(),
        }
    }
}

impl MatJson {
    pub fn to_mat(&self) -> Result<Mat, CliError> {
        let ring = self.ring.to_ring()?;
        if self.rows.len() != self.size || self.rows.iter().any(|r| r.len() != self.size) {
            return Err(CliError::Usage(format!("matrix rows do not match size {}", self.size)));
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, e)| match e {
                        Entry::Int(k) => Ok(ring.int(*k)),
                        Entry::Text(s) => ring
                            .parse(s)
                            .map_err(|err| CliError::Usage(format!("entry ({i}, {j}): {err}"))),
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<Elem>>, _>>()?;
        Ok(Mat::from_rows(&ring, rows)?)
    }
}

pub fn mat_to_value(m: &Mat) -> Value {
    serde_json::to_value(MatJson::from(m)).expect("matrix serializes")
}

pub fn mat_from_str(text: &str) -> Result<Mat, CliError> {
    let parsed: MatJson = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad matrix JSON: {e}")))?;
    parsed.to_mat()
}

pub fn read_mat(path: &std::path::Path) -> Result<Mat, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    mat_from_str(&text)
}

pub fn pair_to_value(p: &SuslinPair) -> Value {
    let strs = |xs: &[Elem]| xs.iter().map(|e| e.to_string()).collect::<Vec<_>>();
    json!({
        "ring": RingJson::from(&p.ring()),
        "v": strs(p.v()),
        "w": strs(p.w()),
    })
}

/// `{"suite", "passed", "seed", "checks": [...]}` plus `wall_time_ms` when
/// timings are requested.
pub fn report_to_value(report: &Report, seed: u64, wall_time_ms: Option<u128>) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            let mut obj = Map::new();
            obj.insert("name".into(), c.name.clone().into());
            obj.insert("status".into(), if c.passed { "pass" } else { "fail" }.into());
            if let Some(cx) = &c.counterexample {
                let inputs: Map<String, Value> = cx.inputs.iter().map(|(k, v)| (k.clone(), v.clone().into())).collect();
                obj.insert(
                    "counterexample".into(),
                    json!({ "ring": cx.ring, "inputs": inputs, "lhs": cx.lhs, "rhs": cx.rhs }),
                );
            }
            Value::Object(obj)
        })
        .collect();
    let mut out = json!({
        "suite": report.suite,
        "passed": report.passed(),
        "seed": seed,
        "checks": checks,
    });
    if let Some(ms) = wall_time_ms {
        out["wall_time_ms"] = json!(ms as u64);
    }
    out
}
