//! Report schema and byte-stable serialization.
//!
//! Reports are plain data with every number preformatted as a string
//! (rationals reduced, reals at 15 significant digits), so JSON and CSV
//! output is byte-identical across runs, platforms, and worker counts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One audited row (a claim, possibly specialized to a sigma variant or a
/// majorization index).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRow {
    pub id: String,
    pub tested: u64,
    pub holds: u64,
    pub violated: u64,
    pub boundary: u64,
    pub undefined: u64,
    pub min_slack: Option<String>,
    pub max_slack: Option<String>,
    /// First violations, in corpus order (at most [`super::claims::WITNESS_CAP`]).
    pub witnesses: Vec<String>,
    /// Witness of the smallest slack over all tested instances.
    pub tightest: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Absolute band for comparisons involving a float.
    pub float_absolute: String,
    /// Policy for rational/integer comparisons.
    pub exact: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsBlock {
    pub alpha: String,
    pub beta: String,
}

/// A previously reported figure shown beside what direct evaluation gives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkedExample {
    pub context: String,
    pub quantity: String,
    pub reported: String,
    pub computed: String,
    pub note: String,
}

/// Feasibility statistics for the alpha/beta-parameterized claim: the
/// smallest alpha making the first inequality hold corpus-wide, and the
/// smallest beta making the second hold given the configured alpha.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaBetaRow {
    pub row: String,
    pub alpha_min_feasible: Option<String>,
    pub beta_min_feasible: Option<String>,
}

/// Extremal value of one index in one direction over a fixed-sequence
/// corpus, with its attaining tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceExtreme {
    pub index: String,
    pub direction: String,
    pub value: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub version: String,
    pub corpus: String,
    pub truncated: bool,
    pub tolerances: Tolerances,
    pub params: ParamsBlock,
    pub claims: Vec<ClaimRow>,
    /// Empty unless the alpha/beta claim was audited.
    pub alpha_beta: Vec<AlphaBetaRow>,
    /// Empty unless the corpus is a fixed degree sequence.
    pub sequence_extremes: Vec<SequenceExtreme>,
    pub worked_examples: Vec<WorkedExample>,
}

impl AuditReport {
    /// Pretty JSON plus a trailing newline; byte-stable for equal reports.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<AuditReport> {
        serde_json::from_str(text).map_err(|e| Error::ParseError(format!("bad report JSON: {e}")))
    }

    /// One CSV row per claim row under the fixed header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,tested,holds,violated,boundary,undefined,min_slack,max_slack\n");
        for row in &self.claims {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                row.id,
                row.tested,
                row.holds,
                row.violated,
                row.boundary,
                row.undefined,
                row.min_slack.as_deref().unwrap_or(""),
                row.max_slack.as_deref().unwrap_or(""),
            ));
        }
        out
    }
}
