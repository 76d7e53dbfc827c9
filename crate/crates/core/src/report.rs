//! Degree-table emission: JSON objects with a provenance block, and CSV with
//! `degree,dim` columns. Output is byte-stable: keys are ordered and nothing
//! time-dependent is included.

use serde::Serialize;
use std::collections::BTreeMap;

/// A degree -> dimension table plus the inputs that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeTable {
    pub dims: BTreeMap<i64, usize>,
    pub provenance: Provenance,
}

/// Everything needed to reproduce a report. Flags echo back exactly as
/// parsed; the only tool metadata is the fixed version string.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<(i64, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_l: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word_cap: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub betti_files: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub external_vanishing: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Provenance {
    pub fn new(command: &str) -> Self {
        Provenance {
            tool: "brieskorn".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            ..Default::default()
        }
    }
}

impl DegreeTable {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("degree table serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,dim\n");
        for (degree, dim) in &self.dims {
            out.push_str(&format!("{degree},{dim}\n"));
        }
        out
    }
}
