//! Audit runner: evaluates claim rows over a corpus and assembles reports.
//!
//! Per-sequence quantities (derived parameters, realization extremes,
//! construction values) are precomputed sequentially into a memo keyed by
//! degree sequence; tree instances then evaluate in parallel with
//! order-preserving collection, so reports are byte-identical regardless of
//! worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use num::{BigInt, ToPrimitive};
use rayon::prelude::*;

use crate::canon::CanonicalCode;
use crate::construct::{extremal_construction, majorizes, parse_degree_sequence};
use crate::degrees::DegreeSequence;
use crate::enumerate::{corpus, realizations, CorpusSpec, EnumLimits};
use crate::error::{Error, Result};
use crate::fmt;
use crate::indices::{
    albertson, derived_params, sigma_edge, sigma_moment, sombor, sombor_closed_form, DerivedParams,
    IndexKind, IndexValue, Rational,
};
use crate::tree::Tree;

use super::claims::{
    builtin_claims, evaluate_claim, evaluate_majorization, expand_rows, majorization_witness,
    Claim, ClaimBody, ClaimEvaluation, RowTask, Status, WITNESS_CAP,
};
use super::expr::{Expr, SequenceFacts, SigmaVariant, Symbol, Value};
use super::report::{
    AlphaBetaRow, AuditReport, ClaimRow, WorkedExample, ParamsBlock, SequenceExtreme, Tolerances,
};

/// Runner configuration.
#[derive(Debug, Clone)]
pub struct AuditOptions {
    pub alpha: Rational,
    pub beta: Rational,
    pub limits: EnumLimits,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            alpha: Rational::from_integer(BigInt::from(2)),
            beta: Rational::from_integer(BigInt::from(4)),
            limits: EnumLimits::default(),
        }
    }
}

fn to_value(v: IndexValue) -> Value {
    match v {
        IndexValue::Int(i) => Value::from_int(i),
        IndexValue::Exact(r) => Value::Exact(r),
        IndexValue::Real(x) => Value::Real(x),
    }
}

fn expr_uses(e: &Expr, s: Symbol) -> bool {
    match e {
        Expr::Int(_) => false,
        Expr::Sym(x) => *x == s,
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            expr_uses(a, s) || expr_uses(b, s)
        }
        Expr::Sqrt(a) | Expr::Floor(a) => expr_uses(a, s),
    }
}

fn claim_uses(c: &Claim, s: Symbol) -> bool {
    match &c.body {
        ClaimBody::Conjunction(v) => v.iter().any(|i| expr_uses(&i.lhs, s) || expr_uses(&i.rhs, s)),
        ClaimBody::Informational(q) => expr_uses(q, s),
        ClaimBody::MajorizationPairs => false,
    }
}

/// Exact per-index extremes over the realizations of one sequence.
pub(crate) struct ExtremesMemo {
    entries: Vec<IndexExtremeEntry>,
    so_max: f64,
}

struct IndexExtremeEntry {
    kind: IndexKind,
    min: Value,
    min_witness: String,
    max: Value,
    max_witness: String,
}

impl ExtremesMemo {
    pub(crate) fn max_of(&self, kind: IndexKind) -> Value {
        self.entries
            .iter()
            .find(|e| e.kind == kind)
            .map(|e| e.max.clone())
            .expect("extremes cover every audited index")
    }
}

use super::claims::MAJORIZATION_INDICES;

/// Enumerates realizations and folds min/max per index; ties keep the
/// smaller canonical code (realizations stream sorted by code).
pub(crate) fn compute_extremes(d: &DegreeSequence, limits: &EnumLimits) -> Result<ExtremesMemo> {
    let trees = realizations(d, usize::MAX, limits)?.trees;
    let evaluated: Vec<(String, Vec<Value>)> = trees
        .iter()
        .map(|t| {
            let code = t.canonical_code().to_string();
            let vals = MAJORIZATION_INDICES.iter().map(|k| to_value(k.value_of(t))).collect();
            (code, vals)
        })
        .collect();
    let mut entries = Vec::with_capacity(MAJORIZATION_INDICES.len());
    for (i, kind) in MAJORIZATION_INDICES.iter().enumerate() {
        let mut min: Option<(f64, &Value, &str)> = None;
        let mut max: Option<(f64, &Value, &str)> = None;
        for (code, vals) in &evaluated {
            let f = vals[i].as_f64();
            if min.as_ref().map_or(true, |(bf, _, _)| f < *bf) {
                min = Some((f, &vals[i], code));
            }
            if max.as_ref().map_or(true, |(bf, _, _)| f > *bf) {
                max = Some((f, &vals[i], code));
            }
        }
        let (_, min_v, min_w) = min.expect("realizable sequences have trees");
        let (_, max_v, max_w) = max.expect("realizable sequences have trees");
        entries.push(IndexExtremeEntry {
            kind: *kind,
            min: min_v.clone(),
            min_witness: min_w.to_string(),
            max: max_v.clone(),
            max_witness: max_w.to_string(),
        });
    }
    let so_max = entries
        .iter()
        .find(|e| e.kind == IndexKind::Sombor)
        .map(|e| e.max.as_f64())
        .expect("sombor is audited");
    Ok(ExtremesMemo { entries, so_max })
}

/// Builds the per-sequence memo a claim set needs. Extremes that blow the
/// enumeration budget leave their fields `None` (instances go undefined)
/// instead of failing the audit.
pub(crate) fn build_sequence_facts(
    d: &DegreeSequence,
    needs_extremes: bool,
    needs_construction: bool,
    limits: &EnumLimits,
) -> (SequenceFacts, Option<ExtremesMemo>) {
    let mut facts = SequenceFacts {
        params: derived_params(d).ok(),
        ..SequenceFacts::default()
    };
    if needs_construction {
        if let Some(p) = facts.params.clone() {
            let (x, y, mu) = (p.x as u64, p.y as u64, p.mu as u64);
            let leaves = d.len() as u64;
            facts.so_closed_form = sombor_closed_form(x, y, leaves, mu).ok();
            facts.so_constructed = extremal_construction(x, y, leaves, mu).ok().map(|t| sombor(&t));
        }
    }
    let mut memo = None;
    if needs_extremes {
        if let Ok(m) = compute_extremes(d, limits) {
            facts.so_realization_max = Some(m.so_max);
            memo = Some(m);
        }
    }
    (facts, memo)
}

#[derive(Default)]
struct RowAgg {
    tested: u64,
    holds: u64,
    violated: u64,
    boundary: u64,
    undefined: u64,
    min_slack: Option<(f64, Value, String)>,
    max_slack: Option<(f64, Value)>,
    violations: Vec<String>,
}

impl RowAgg {
    fn absorb(&mut self, witness: &str, ev: &ClaimEvaluation) {
        match ev.status {
            Status::Undefined => {
                self.undefined += 1;
                return;
            }
            Status::Holds => {
                self.tested += 1;
                self.holds += 1;
                if ev.boundary {
                    self.boundary += 1;
                }
            }
            Status::Violated => {
                self.tested += 1;
                self.violated += 1;
                if self.violations.len() < WITNESS_CAP {
                    self.violations.push(witness.to_string());
                }
            }
        }
        if let Some(s) = &ev.slack {
            let f = s.as_f64();
            if f.is_nan() {
                return;
            }
            if self.min_slack.as_ref().map_or(true, |(bf, _, _)| f < *bf) {
                self.min_slack = Some((f, s.clone(), witness.to_string()));
            }
            if self.max_slack.as_ref().map_or(true, |(bf, _)| f > *bf) {
                self.max_slack = Some((f, s.clone()));
            }
        }
    }

    fn into_row(self, id: String) -> ClaimRow {
        ClaimRow {
            id,
            tested: self.tested,
            holds: self.holds,
            violated: self.violated,
            boundary: self.boundary,
            undefined: self.undefined,
            min_slack: self.min_slack.as_ref().map(|(_, v, _)| v.display()),
            max_slack: self.max_slack.as_ref().map(|(_, v)| v.display()),
            witnesses: self.violations,
            tightest: self.min_slack.map(|(_, _, w)| w),
        }
    }
}

/// Runs `claims` over the corpus described by `spec`.
pub fn audit(claims: &[Claim], spec: &CorpusSpec, opts: &AuditOptions) -> Result<AuditReport> {
    let corpus = corpus(spec, &opts.limits)?;
    let rows = expand_rows(claims);
    let has_majorization = rows.iter().any(|r| matches!(r, RowTask::Majorization { .. }));
    let needs_extremes = has_majorization
        || claims.iter().any(|c| claim_uses(c, Symbol::SoRealizationMax))
        || matches!(spec, CorpusSpec::FixedSequence { .. });
    let needs_construction = claims
        .iter()
        .any(|c| claim_uses(c, Symbol::SoClosedForm) || claim_uses(c, Symbol::SoConstructed));

    let sequences: BTreeSet<DegreeSequence> =
        corpus.trees.iter().map(Tree::degree_sequence).collect();
    let mut facts_map: BTreeMap<DegreeSequence, SequenceFacts> = BTreeMap::new();
    let mut extremes_map: BTreeMap<DegreeSequence, Option<ExtremesMemo>> = BTreeMap::new();
    for d in sequences {
        let (facts, memo) = build_sequence_facts(&d, needs_extremes, needs_construction, &opts.limits);
        facts_map.insert(d.clone(), facts);
        extremes_map.insert(d, memo);
    }

    // Tree instances: parallel evaluation, order-preserving collect.
    let evals: Vec<(String, Vec<Option<ClaimEvaluation>>)> = corpus
        .trees
        .par_iter()
        .map(|t| {
            let facts = &facts_map[&t.degree_sequence()];
            let code = t.canonical_code().to_string();
            let evs = rows
                .iter()
                .map(|row| match row {
                    RowTask::Tree { claim, variant, .. } => {
                        Some(evaluate_claim(claim, *variant, t, &opts.alpha, &opts.beta, facts))
                    }
                    RowTask::Majorization { .. } => None,
                })
                .collect();
            (code, evs)
        })
        .collect();

    let mut aggs: Vec<RowAgg> = rows.iter().map(|_| RowAgg::default()).collect();
    for (code, evs) in &evals {
        for (agg, ev) in aggs.iter_mut().zip(evs) {
            if let Some(ev) = ev {
                agg.absorb(code, ev);
            }
        }
    }

    // Majorization instances: ordered pairs of distinct sequences of equal
    // order, walked in sequence order.
    if has_majorization {
        let mut by_len: BTreeMap<usize, Vec<&DegreeSequence>> = BTreeMap::new();
        for d in facts_map.keys() {
            by_len.entry(d.len()).or_default().push(d);
        }
        for seqs in by_len.values() {
            for (ia, &a) in seqs.iter().enumerate() {
                for (ib, &b) in seqs.iter().enumerate() {
                    if ia == ib || !matches!(majorizes(a, b), Ok(true)) {
                        continue;
                    }
                    let witness = majorization_witness(a, b);
                    for (agg, row) in aggs.iter_mut().zip(&rows) {
                        let RowTask::Majorization { kind, .. } = row else { continue };
                        match (&extremes_map[a], &extremes_map[b]) {
                            (Some(ea), Some(eb)) => {
                                let (status, boundary, slack) =
                                    evaluate_majorization(&ea.max_of(*kind), &eb.max_of(*kind));
                                agg.absorb(
                                    &witness,
                                    &ClaimEvaluation {
                                        status,
                                        boundary,
                                        slack: Some(slack),
                                        sides: Vec::new(),
                                    },
                                );
                            }
                            _ => agg.undefined += 1,
                        }
                    }
                }
            }
        }
    }

    let mut claim_rows: Vec<ClaimRow> = rows
        .iter()
        .zip(aggs)
        .map(|(row, agg)| agg.into_row(row.row_id().to_string()))
        .collect();
    claim_rows.sort_by(|a, b| a.id.cmp(&b.id));

    let alpha_beta = if claims.iter().any(|c| c.uses_alpha_beta) {
        alpha_beta_stats(&corpus.trees, &facts_map, opts)
    } else {
        Vec::new()
    };

    let mut sequence_extremes = Vec::new();
    if let CorpusSpec::FixedSequence { sequence } = spec {
        if let Some(Some(memo)) = extremes_map.get(sequence) {
            for e in &memo.entries {
                sequence_extremes.push(SequenceExtreme {
                    index: e.kind.name().to_string(),
                    direction: "max".to_string(),
                    value: e.max.display(),
                    witness: e.max_witness.clone(),
                });
                sequence_extremes.push(SequenceExtreme {
                    index: e.kind.name().to_string(),
                    direction: "min".to_string(),
                    value: e.min.display(),
                    witness: e.min_witness.clone(),
                });
            }
        }
    }

    Ok(AuditReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        corpus: spec.describe(),
        truncated: corpus.truncated,
        tolerances: Tolerances {
            float_absolute: "1e-9".to_string(),
            exact: "no band".to_string(),
        },
        params: ParamsBlock {
            alpha: Value::Exact(opts.alpha.clone()).display(),
            beta: Value::Exact(opts.beta.clone()).display(),
        },
        claims: claim_rows,
        alpha_beta,
        sequence_extremes,
        worked_examples: builtin_worked_examples(&opts.limits),
    })
}

/// Smallest alpha making the first sandwich inequality hold over the corpus,
/// and smallest beta making the second hold at the configured alpha.
fn alpha_beta_stats(
    trees: &[Tree],
    facts_map: &BTreeMap<DegreeSequence, SequenceFacts>,
    opts: &AuditOptions,
) -> Vec<AlphaBetaRow> {
    let sqrt2 = 2f64.sqrt();
    let alpha_f = opts.alpha.to_f64().unwrap_or(f64::NAN);
    let mut out = Vec::new();
    for variant in [SigmaVariant::Edge, SigmaVariant::Moment] {
        let mut alpha_min: Option<f64> = None;
        let mut beta_min: Option<f64> = None;
        let mut sigma_zero = false;
        for t in trees {
            let facts = &facts_map[&t.degree_sequence()];
            let Some(p) = &facts.params else { continue };
            let mu = p.mu as f64;
            let sigma = match variant {
                SigmaVariant::Edge => sigma_edge(t) as f64,
                SigmaVariant::Moment => sigma_moment(t).to_f64().unwrap_or(f64::NAN),
            };
            let so_irr = sombor(t) + albertson(t) as f64;
            let a_cand = sigma * mu / (sqrt2 * so_irr);
            alpha_min = Some(alpha_min.map_or(a_cand, |x| x.max(a_cand)));
            if sigma > 0.0 {
                let b_cand = alpha_f * so_irr / sigma;
                beta_min = Some(beta_min.map_or(b_cand, |x| x.max(b_cand)));
            } else {
                sigma_zero = true;
            }
        }
        out.push(AlphaBetaRow {
            row: format!("C-SANDWICH-ALPHA-BETA[{}]", variant.name()),
            alpha_min_feasible: alpha_min.map(fmt::real),
            beta_min_feasible: if sigma_zero { None } else { beta_min.map(fmt::real) },
        });
    }
    out
}

fn floor_to_string(v: Rational) -> String {
    Value::Exact(v.floor()).display()
}

/// The side-by-side worked-example block: reported figures for two fully
/// worked sequences next to direct exact evaluation.
fn builtin_worked_examples(limits: &EnumLimits) -> Vec<WorkedExample> {
    let mut out = Vec::new();
    let three = Rational::from_integer(BigInt::from(3));

    let sandwich_lower = |p: &DerivedParams, n: i64, delta: i64| -> String {
        let diff = Rational::from_integer(BigInt::from(p.eta - n));
        let denom = &p.k * Rational::from_integer(BigInt::from(delta));
        floor_to_string(&three * &diff * &diff / denom)
    };

    // Worked example 1: sequence 2^11,10 (completed to order 22).
    if let Ok(d) = parse_degree_sequence("2^11,10")
        .and_then(|s| crate::construct::complete_with_leaves(&s))
    {
        let ctx = "degree sequence 2^11,10 completed to order 22";
        if let Ok(p) = derived_params(&d) {
            let n = d.len() as i64;
            out.push(WorkedExample {
                context: ctx.to_string(),
                quantity: "sandwich lower bound".to_string(),
                reported: "573".to_string(),
                computed: sandwich_lower(&p, n, d.max_degree() as i64),
                note: "exact evaluation of floor(3(eta-n)^2/(k*Delta))".to_string(),
            });
            if p.mu == 1 {
                out.push(WorkedExample {
                    context: ctx.to_string(),
                    quantity: "sandwich upper bound".to_string(),
                    reported: "8208".to_string(),
                    computed: (p.eta * 2 * n).to_string(),
                    note: "eta(2n*mu^2 + eta*mu*(mu-1)*irr) with mu = 1".to_string(),
                });
            }
        }
        if let Ok(r) = realizations(&d, usize::MAX, limits) {
            let max_sigma = r.trees.iter().map(sigma_edge).max().unwrap_or(0);
            out.push(WorkedExample {
                context: ctx.to_string(),
                quantity: "max sigma_edge over realizations".to_string(),
                reported: "794".to_string(),
                computed: max_sigma.to_string(),
                note: "attained by the spider with nine leaves on the center".to_string(),
            });
            let irrs: BTreeSet<i64> = r.trees.iter().map(albertson).collect();
            let computed = if irrs.len() == 1 {
                irrs.first().unwrap().to_string()
            } else {
                "varies".to_string()
            };
            out.push(WorkedExample {
                context: ctx.to_string(),
                quantity: "albertson on every realization".to_string(),
                reported: "90".to_string(),
                computed,
                note: format!("constant across all {} realizations", r.trees.len()),
            });
        }
    }

    // Worked example 2: sequence 2^18,3,10 (completed to order 31).
    if let Ok(d) = parse_degree_sequence("2^18,3,10")
        .and_then(|s| crate::construct::complete_with_leaves(&s))
    {
        let ctx = "degree sequence 2^18,3,10 completed to order 31";
        if let Ok(p) = derived_params(&d) {
            let n = d.len() as i64;
            let m = n - 1;
            let delta = d.max_degree() as i64;
            out.push(WorkedExample {
                context: ctx.to_string(),
                quantity: "eta".to_string(),
                reported: "1755".to_string(),
                computed: p.eta.to_string(),
                note: "floor(k*n/2) with k = 192/21".to_string(),
            });
            out.push(WorkedExample {
                context: ctx.to_string(),
                quantity: "sandwich lower bound".to_string(),
                reported: "2858".to_string(),
                computed: sandwich_lower(&p, n, delta),
                note: "exact evaluation of floor(3(eta-n)^2/(k*Delta))".to_string(),
            });
            if p.mu == 1 {
                out.push(WorkedExample {
                    context: ctx.to_string(),
                    quantity: "sandwich upper bound".to_string(),
                    reported: "70200".to_string(),
                    computed: (p.eta * 2 * n).to_string(),
                    note: "eta(2n*mu^2 + eta*mu*(mu-1)*irr) with mu = 1".to_string(),
                });
            }
            out.push(WorkedExample {
                context: ctx.to_string(),
                quantity: "sigma_edge".to_string(),
                reported: "5178".to_string(),
                computed: format!("<= {}", m * (delta - 1) * (delta - 1)),
                note: "no tree with this sequence exceeds m(Delta-1)^2".to_string(),
            });
            out.push(WorkedExample {
                context: ctx.to_string(),
                quantity: "albertson".to_string(),
                reported: "310".to_string(),
                computed: format!("<= {}", m * (delta - 1)),
                note: "no tree with this sequence exceeds m(Delta-1)".to_string(),
            });
        }
    }
    out
}

/// Re-evaluates one exported witness against its claim row from scratch.
///
/// Tree rows take a canonical code; majorization rows take the exported
/// `"<a>|<b>"` sequence pair.
pub fn reevaluate_witness(row_id: &str, witness: &str, opts: &AuditOptions) -> Result<ClaimEvaluation> {
    let (base, suffix) = match row_id.split_once('[') {
        Some((b, s)) => (b, Some(s.trim_end_matches(']'))),
        None => (row_id, None),
    };
    let claims = builtin_claims();
    let claim = claims
        .iter()
        .find(|c| c.id == base)
        .ok_or_else(|| Error::ParseError(format!("unknown claim row {row_id:?}")))?;

    if matches!(claim.body, ClaimBody::MajorizationPairs) {
        let kind = IndexKind::from_str(
            suffix.ok_or_else(|| Error::ParseError("majorization rows need an index suffix".into()))?,
        )?;
        let (a_str, b_str) = witness
            .split_once('|')
            .ok_or_else(|| Error::ParseError("majorization witness must be \"a|b\"".into()))?;
        let a = parse_degree_sequence(a_str)?.to_sequence()?;
        let b = parse_degree_sequence(b_str)?.to_sequence()?;
        if !majorizes(&a, &b)? {
            return Err(Error::DomainError(
                "witness pair is not ordered by majorization".into(),
            ));
        }
        let ea = compute_extremes(&a, &opts.limits)?;
        let eb = compute_extremes(&b, &opts.limits)?;
        let (ma, mb) = (ea.max_of(kind), eb.max_of(kind));
        let (status, boundary, slack) = evaluate_majorization(&ma, &mb);
        return Ok(ClaimEvaluation {
            status,
            boundary,
            slack: Some(slack),
            sides: vec![(mb.display(), ma.display())],
        });
    }

    let variant = match suffix {
        None => None,
        Some("edge") => Some(SigmaVariant::Edge),
        Some("moment") => Some(SigmaVariant::Moment),
        Some(other) => return Err(Error::ParseError(format!("unknown sigma variant {other:?}"))),
    };
    let tree = CanonicalCode::from_str(witness)?.decode()?;
    let d = tree.degree_sequence();
    let needs_ext = claim_uses(claim, Symbol::SoRealizationMax);
    let needs_con =
        claim_uses(claim, Symbol::SoClosedForm) || claim_uses(claim, Symbol::SoConstructed);
    let (facts, _) = build_sequence_facts(&d, needs_ext, needs_con, &opts.limits);
    Ok(evaluate_claim(claim, variant, &tree, &opts.alpha, &opts.beta, &facts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_trees(lo: usize, hi: usize) -> CorpusSpec {
        CorpusSpec::AllTrees { n_min: lo, n_max: hi }
    }

    #[test]
    fn audit_small_corpus_counts_are_consistent() {
        let claims = builtin_claims();
        let opts = AuditOptions::default();
        let report = audit(&claims, &all_trees(2, 7), &opts).unwrap();
        assert_eq!(report.claims.len(), 26);
        let total_trees = 1 + 1 + 2 + 3 + 6 + 11;
        for row in &report.claims {
            if row.id.starts_with("C-MAJORIZATION") {
                continue;
            }
            assert_eq!(
                row.tested + row.undefined,
                total_trees as u64,
                "row {}",
                row.id
            );
            assert_eq!(row.tested, row.holds + row.violated, "row {}", row.id);
            assert!(row.boundary <= row.holds, "row {}", row.id);
        }
        // Rows are sorted by id.
        let ids: Vec<_> = report.claims.iter().map(|r| r.id.clone()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn certain_claims_have_zero_violations() {
        let claims = builtin_claims();
        let opts = AuditOptions::default();
        let report = audit(&claims, &all_trees(2, 8), &opts).unwrap();
        for id in ["C-IRR-SIGMA-CS", "C-SO-IRR-M1", "C-SO-TWOSIDED[moment]"] {
            let row = report.claims.iter().find(|r| r.id == id).unwrap();
            assert_eq!(row.violated, 0, "row {id}");
            assert!(row.tested > 0, "row {id}");
        }
    }

    #[test]
    fn known_violations_show_up_with_witnesses() {
        let claims = builtin_claims();
        let opts = AuditOptions::default();
        let report = audit(&claims, &all_trees(2, 6), &opts).unwrap();
        let range_edge = report.claims.iter().find(|r| r.id == "C-SIGMA-RANGE[edge]").unwrap();
        assert!(range_edge.violated >= 1);
        assert!(range_edge.witnesses.contains(&Tree::star(4).canonical_code().to_string()));
        let diff_edge = report.claims.iter().find(|r| r.id == "C-SO-SIGMA-DIFF[edge]").unwrap();
        assert!(diff_edge.violated >= 1);
        assert!(diff_edge.witnesses.contains(&Tree::path(6).canonical_code().to_string()));
    }

    #[test]
    fn witnesses_reproduce_their_status() {
        let claims = builtin_claims();
        let opts = AuditOptions::default();
        let report = audit(&claims, &all_trees(2, 6), &opts).unwrap();
        let mut checked = 0;
        for row in &report.claims {
            for w in &row.witnesses {
                let ev = reevaluate_witness(&row.id, w, &opts).unwrap();
                assert_eq!(ev.status, Status::Violated, "row {} witness {}", row.id, w);
                checked += 1;
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn worked_example_block_shows_both_numbers() {
        let examples = builtin_worked_examples(&EnumLimits::default());
        let lower = examples
            .iter()
            .find(|e| e.quantity == "sandwich lower bound" && e.reported == "573")
            .unwrap();
        assert_eq!(lower.computed, "331");
        let upper = examples
            .iter()
            .find(|e| e.quantity == "sandwich upper bound" && e.reported == "8208")
            .unwrap();
        assert_eq!(upper.computed, "6204");
        let eta = examples.iter().find(|e| e.quantity == "eta").unwrap();
        assert_eq!((eta.reported.as_str(), eta.computed.as_str()), ("1755", "141"));
        let sig = examples
            .iter()
            .find(|e| e.quantity == "max sigma_edge over realizations")
            .unwrap();
        assert_eq!((sig.reported.as_str(), sig.computed.as_str()), ("794", "794"));
    }

    #[test]
    fn fixed_sequence_report_lists_extremes() {
        let claims = builtin_claims();
        let opts = AuditOptions::default();
        let d = parse_degree_sequence("3,2^2,1^3").unwrap().to_sequence().unwrap();
        let report = audit(
            &claims,
            &CorpusSpec::FixedSequence { sequence: d },
            &opts,
        )
        .unwrap();
        assert_eq!(report.sequence_extremes.len(), 8);
        assert!(report
            .sequence_extremes
            .iter()
            .all(|e| !e.value.is_empty() && !e.witness.is_empty()));
    }

    #[test]
    fn majorization_rows_cover_pairs() {
        let claims = builtin_claims();
        let opts = AuditOptions::default();
        let report = audit(&claims, &all_trees(5, 5), &opts).unwrap();
        // Order 5 sequences: (4,1^4) majorizes (3,2,1^3) majorizes (2,2,2,1,1):
        // three comparable ordered pairs.
        let row = report
            .claims
            .iter()
            .find(|r| r.id == "C-MAJORIZATION[sombor]")
            .unwrap();
        assert_eq!(row.tested + row.undefined, 3);
        let fidelity = &row.witnesses;
        for w in fidelity {
            assert!(w.contains('|'));
        }
    }

    #[test]
    fn alpha_beta_stats_present_with_defaults() {
        let claims = builtin_claims();
        let opts = AuditOptions::default();
        let report = audit(&claims, &all_trees(2, 6), &opts).unwrap();
        assert_eq!(report.alpha_beta.len(), 2);
        for row in &report.alpha_beta {
            assert!(row.alpha_min_feasible.is_some());
            assert!(row.beta_min_feasible.is_some());
        }
        assert_eq!(report.params.alpha, "2");
        assert_eq!(report.params.beta, "4");
    }
}
