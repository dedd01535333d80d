//! Claim auditing: declarative inequality claims, corpus-wide evaluation,
//! and deterministic machine-readable reports.
//!
//! A [`Claim`] states one or more inequalities over index symbols, a scope,
//! and a sigma-variant policy. [`audit`] evaluates every expanded claim row
//! over a corpus of trees and aggregates counts, slack extremes, and
//! violation witnesses into an [`AuditReport`] whose serialized form is
//! byte-stable across runs and thread counts.

mod claims;
mod expr;
mod report;
mod run;

pub use claims::{
    builtin_claims, claims_by_ids, evaluate_claim, expand_rows, Claim, ClaimBody, ClaimEvaluation,
    Inequality, Relation, RowTask, Scope, Status, VariantPolicy, FLOAT_TOLERANCE,
    MAJORIZATION_INDICES, WITNESS_CAP,
};
pub use expr::{EvalContext, Expr, SequenceFacts, SigmaVariant, Symbol, Value};
pub use report::{
    AlphaBetaRow, AuditReport, ClaimRow, WorkedExample, ParamsBlock, SequenceExtreme, Tolerances,
};
pub use run::{audit, reevaluate_witness, AuditOptions};
