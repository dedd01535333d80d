//! The builtin claim registry and single-instance evaluation.
//!
//! Each claim is a conjunction of inequalities over the expression language
//! (or an informational quantity that is only reported, never judged; or the
//! pair-based majorization claim, which the runner expands over sequence
//! pairs instead of trees). Sigma-ambiguous claims carry a `Both` variant
//! policy and are audited as two separate rows.

use crate::degrees::DegreeSequence;
use crate::error::{Error, Result};
use crate::indices::{IndexKind, Rational};
use crate::tree::Tree;

use super::expr::{
    add, div, eval, exact_difference, exact_is_negative, floor, int, mul, slack, sqrt, square,
    sub, sym, EvalContext, Expr, SequenceFacts, SigmaVariant, Symbol, Value,
};

/// Absolute band applied to float comparisons; exact comparisons use none.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// How many violation witnesses a report row keeps.
pub const WITNESS_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
}

#[derive(Debug, Clone)]
pub struct Inequality {
    pub lhs: Expr,
    pub rel: Relation,
    pub rhs: Expr,
}

fn le(lhs: Expr, rhs: Expr) -> Inequality {
    Inequality { lhs, rel: Relation::Le, rhs }
}

fn lt(lhs: Expr, rhs: Expr) -> Inequality {
    Inequality { lhs, rel: Relation::Lt, rhs }
}

/// Which trees a claim applies to; everything else counts as undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    MinOrder(usize),
    /// Requires the derived sequence parameters (k, eta, mu, x, y) to exist.
    ParamsDefined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantPolicy {
    NotApplicable,
    Both,
}

#[derive(Debug, Clone)]
pub enum ClaimBody {
    /// All inequalities must hold.
    Conjunction(Vec<Inequality>),
    /// Reported quantity; always counted as holding, slack carries the value.
    Informational(Expr),
    /// Expanded over majorization-related sequence pairs by the runner.
    MajorizationPairs,
}

#[derive(Debug, Clone)]
pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    pub scope: Scope,
    pub variants: VariantPolicy,
    pub body: ClaimBody,
    /// True for the claim parameterized by alpha/beta (enables the
    /// feasibility-statistics block in reports).
    pub uses_alpha_beta: bool,
}

/// Index rows the majorization claim reports on.
pub const MAJORIZATION_INDICES: [IndexKind; 4] = [
    IndexKind::SigmaEdge,
    IndexKind::SigmaMoment,
    IndexKind::Albertson,
    IndexKind::Sombor,
];

/// The complete registry, in report order of base ids.
pub fn builtin_claims() -> Vec<Claim> {
    use Symbol::*;
    let claim = |id, description, scope, variants, body| Claim {
        id,
        description,
        scope,
        variants,
        body,
        uses_alpha_beta: false,
    };

    vec![
        claim(
            "C-IRR-DELTA",
            "delta*(Delta-delta)^2*n/(Delta+1) < irr",
            Scope::All,
            VariantPolicy::NotApplicable,
            ClaimBody::Conjunction(vec![lt(
                div(
                    mul(sym(MinDeg), mul(square(sub(sym(MaxDeg), sym(MinDeg))), sym(N))),
                    add(sym(MaxDeg), int(1)),
                ),
                sym(Irr),
            )]),
        ),
        claim(
            "C-IRR-STAR-MAX",
            "irr <= (n-2)(n-1) for n >= 3",
            Scope::MinOrder(3),
            VariantPolicy::NotApplicable,
            ClaimBody::Conjunction(vec![le(sym(Irr), mul(sub(sym(N), int(2)), sub(sym(N), int(1))))]),
        ),
        claim(
            "C-SIGMA-RANGE",
            "0 <= sigma <= (n-1)(n-2) for n >= 3",
            Scope::MinOrder(3),
            VariantPolicy::Both,
            ClaimBody::Conjunction(vec![
                le(int(0), sym(Sigma)),
                le(sym(Sigma), mul(sub(sym(N), int(1)), sub(sym(N), int(2)))),
            ]),
        ),
        claim(
            "C-SO-PATH-MIN",
            "SO(P_n) <= SO over trees of the same order",
            Scope::MinOrder(3),
            VariantPolicy::NotApplicable,
            ClaimBody::Conjunction(vec![le(sym(SoPath), sym(So))]),
        ),
        claim(
            "C-SIGMA-SANDWICH",
            "floor(3(eta-n)^2/(k*Delta)) <= sigma <= eta(2n*mu^2 + eta*mu*(mu-1)*irr)",
            Scope::ParamsDefined,
            VariantPolicy::Both,
            ClaimBody::Conjunction(vec![
                le(
                    floor(div(
                        mul(int(3), square(sub(sym(Eta), sym(N)))),
                        mul(sym(K), sym(MaxDeg)),
                    )),
                    sym(Sigma),
                ),
                le(
                    sym(Sigma),
                    mul(
                        sym(Eta),
                        add(
                            mul(int(2), mul(sym(N), square(sym(Mu)))),
                            mul(mul(sym(Eta), sym(Mu)), mul(sub(sym(Mu), int(1)), sym(Irr))),
                        ),
                    ),
                ),
            ]),
        ),
        claim(
            "C-IRR-ETA-SIGMA",
            "irr < eta < sigma",
            Scope::ParamsDefined,
            VariantPolicy::Both,
            ClaimBody::Conjunction(vec![lt(sym(Irr), sym(Eta)), lt(sym(Eta), sym(Sigma))]),
        ),
        claim(
            "C-SO-EXTREMAL",
            "SO <= max SO over realizations of the same degree sequence",
            Scope::All,
            VariantPolicy::NotApplicable,
            ClaimBody::Conjunction(vec![le(sym(So), sym(SoRealizationMax))]),
        ),
        claim(
            "C-SO-EXTREMAL-FORM",
            "gap: closed-form extremal SO minus SO of the constructed tree",
            Scope::ParamsDefined,
            VariantPolicy::NotApplicable,
            ClaimBody::Informational(sub(sym(SoClosedForm), sym(SoConstructed))),
        ),
        claim(
            "C-MAJORIZATION",
            "if a majorizes b then max index over realizations of a >= that of b",
            Scope::All,
            VariantPolicy::NotApplicable,
            ClaimBody::MajorizationPairs,
        ),
        Claim {
            id: "C-SANDWICH-ALPHA-BETA",
            description: "sigma <= (alpha*sqrt(2)/mu)(SO + irr) <= (beta*sqrt(2)/mu)*sigma",
            scope: Scope::ParamsDefined,
            variants: VariantPolicy::Both,
            body: ClaimBody::Conjunction(vec![
                le(
                    sym(Sigma),
                    mul(div(mul(sym(Alpha), sqrt(int(2))), sym(Mu)), add(sym(So), sym(Irr))),
                ),
                le(
                    mul(div(mul(sym(Alpha), sqrt(int(2))), sym(Mu)), add(sym(So), sym(Irr))),
                    mul(div(mul(sym(Beta), sqrt(int(2))), sym(Mu)), sym(Sigma)),
                ),
            ]),
            uses_alpha_beta: true,
        },
        claim(
            "C-SO-SIGMA-DIFF",
            "SO - sigma <= 2n-2 and sigma - irr <= 2(n+Delta)-2",
            Scope::All,
            VariantPolicy::Both,
            ClaimBody::Conjunction(vec![
                le(sub(sym(So), sym(Sigma)), sub(mul(int(2), sym(N)), int(2))),
                le(
                    sub(sym(Sigma), sym(Irr)),
                    sub(mul(int(2), add(sym(N), sym(MaxDeg))), int(2)),
                ),
            ]),
        ),
        claim(
            "C-SO-UPPER-MIX",
            "SO <= (2m/n)sqrt(Delta^2+delta^2) + (sqrt(2)/3)sigma + 2n - 2",
            Scope::All,
            VariantPolicy::Both,
            ClaimBody::Conjunction(vec![le(
                sym(So),
                add(
                    add(
                        mul(
                            div(mul(int(2), sym(M)), sym(N)),
                            sqrt(add(square(sym(MaxDeg)), square(sym(MinDeg)))),
                        ),
                        mul(div(sqrt(int(2)), int(3)), sym(Sigma)),
                    ),
                    sub(mul(int(2), sym(N)), int(2)),
                ),
            )]),
        ),
        claim(
            "C-SO-TWOSIDED",
            "(1/sqrt(2))(sigma + 4m^2/n) <= SO <= sigma + 4m^2/n",
            Scope::All,
            VariantPolicy::Both,
            ClaimBody::Conjunction(vec![
                le(
                    mul(
                        div(int(1), sqrt(int(2))),
                        add(sym(Sigma), div(mul(int(4), square(sym(M))), sym(N))),
                    ),
                    sym(So),
                ),
                le(sym(So), add(sym(Sigma), div(mul(int(4), square(sym(M))), sym(N)))),
            ]),
        ),
        claim(
            "C-SO-IRR-M1",
            "irr <= SO <= sqrt(2)*irr + M1",
            Scope::All,
            VariantPolicy::NotApplicable,
            ClaimBody::Conjunction(vec![
                le(sym(Irr), sym(So)),
                le(sym(So), add(mul(sqrt(int(2)), sym(Irr)), sym(M1))),
            ]),
        ),
        claim(
            "C-IRR-SIGMA-CS",
            "sigma_edge <= irr^2 <= m*sigma_edge",
            Scope::All,
            VariantPolicy::NotApplicable,
            ClaimBody::Conjunction(vec![
                le(sym(SigmaEdge), square(sym(Irr))),
                le(square(sym(Irr)), mul(sym(M), sym(SigmaEdge))),
            ]),
        ),
        claim(
            "C-THETA-RATIO",
            "ratio statistics: SO / (irr + M1)",
            Scope::All,
            VariantPolicy::NotApplicable,
            ClaimBody::Informational(div(sym(So), add(sym(Irr), sym(M1)))),
        ),
    ]
}

/// Filters the registry by base id, preserving registry order.
pub fn claims_by_ids(ids: &[String]) -> Result<Vec<Claim>> {
    let all = builtin_claims();
    for id in ids {
        if !all.iter().any(|c| c.id == id) {
            return Err(Error::ParseError(format!("unknown claim id {id:?}")));
        }
    }
    Ok(all.into_iter().filter(|c| ids.iter().any(|i| i == c.id)).collect())
}

/// One audited row: a claim under one sigma variant, or one majorization
/// index. Row ids get a `[...]` suffix when a claim expands.
#[derive(Debug, Clone)]
pub enum RowTask {
    Tree { claim: Claim, variant: Option<SigmaVariant>, row_id: String },
    Majorization { kind: IndexKind, row_id: String },
}

impl RowTask {
    pub fn row_id(&self) -> &str {
        match self {
            RowTask::Tree { row_id, .. } => row_id,
            RowTask::Majorization { row_id, .. } => row_id,
        }
    }
}

/// Expands claims into report rows.
pub fn expand_rows(claims: &[Claim]) -> Vec<RowTask> {
    let mut rows = Vec::new();
    for claim in claims {
        match (&claim.body, claim.variants) {
            (ClaimBody::MajorizationPairs, _) => {
                for kind in MAJORIZATION_INDICES {
                    rows.push(RowTask::Majorization {
                        kind,
                        row_id: format!("{}[{}]", claim.id, kind.name()),
                    });
                }
            }
            (_, VariantPolicy::Both) => {
                for variant in [SigmaVariant::Edge, SigmaVariant::Moment] {
                    rows.push(RowTask::Tree {
                        claim: claim.clone(),
                        variant: Some(variant),
                        row_id: format!("{}[{}]", claim.id, variant.name()),
                    });
                }
            }
            (_, VariantPolicy::NotApplicable) => rows.push(RowTask::Tree {
                claim: claim.clone(),
                variant: None,
                row_id: claim.id.to_string(),
            }),
        }
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Violated,
    Undefined,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::Undefined => "undefined",
        }
    }
}

/// Result of evaluating one claim row at one tree (or pair).
#[derive(Debug, Clone)]
pub struct ClaimEvaluation {
    pub status: Status,
    pub boundary: bool,
    /// Oriented slack `rhs - lhs`, minimized over conjuncts; for
    /// informational rows this is the reported quantity itself.
    pub slack: Option<Value>,
    /// Formatted (lhs, rhs) per conjunct, for diagnostics.
    pub sides: Vec<(String, String)>,
}

impl ClaimEvaluation {
    fn undefined() -> ClaimEvaluation {
        ClaimEvaluation { status: Status::Undefined, boundary: false, slack: None, sides: Vec::new() }
    }
}

fn scope_allows(scope: Scope, tree: &Tree, facts: &SequenceFacts) -> bool {
    match scope {
        Scope::All => true,
        Scope::MinOrder(k) => tree.order() >= k,
        Scope::ParamsDefined => facts.params.is_some(),
    }
}

/// Evaluates one claim row at one tree.
pub fn evaluate_claim(
    claim: &Claim,
    variant: Option<SigmaVariant>,
    tree: &Tree,
    alpha: &Rational,
    beta: &Rational,
    facts: &SequenceFacts,
) -> ClaimEvaluation {
    if !scope_allows(claim.scope, tree, facts) {
        return ClaimEvaluation::undefined();
    }
    let ctx = EvalContext { tree, variant, alpha, beta, facts };
    match &claim.body {
        ClaimBody::Conjunction(conjuncts) => evaluate_conjunction(conjuncts, &ctx),
        ClaimBody::Informational(quantity) => match eval(quantity, &ctx) {
            None => ClaimEvaluation::undefined(),
            Some(v) => ClaimEvaluation {
                status: Status::Holds,
                boundary: false,
                slack: Some(v),
                sides: Vec::new(),
            },
        },
        // Pair-based claims have no per-tree reading.
        ClaimBody::MajorizationPairs => ClaimEvaluation::undefined(),
    }
}

fn evaluate_conjunction(conjuncts: &[Inequality], ctx: &EvalContext<'_>) -> ClaimEvaluation {
    let mut evaluated = Vec::with_capacity(conjuncts.len());
    for c in conjuncts {
        match (eval(&c.lhs, ctx), eval(&c.rhs, ctx)) {
            (Some(l), Some(r)) => evaluated.push((l, r, c.rel)),
            _ => return ClaimEvaluation::undefined(),
        }
    }
    let mut status = Status::Holds;
    let mut boundary = false;
    let mut min_slack: Option<Value> = None;
    let mut sides = Vec::with_capacity(evaluated.len());
    for (l, r, rel) in evaluated {
        let (ok, near) = compare(&l, &r, rel);
        if !ok {
            status = Status::Violated;
        }
        boundary |= near;
        let s = slack(&l, &r);
        let replace = match &min_slack {
            None => true,
            Some(prev) => s.as_f64() < prev.as_f64(),
        };
        if replace {
            min_slack = Some(s);
        }
        sides.push((l.display(), r.display()));
    }
    if status == Status::Violated {
        boundary = false;
    }
    ClaimEvaluation { status, boundary, slack: min_slack, sides }
}

/// Decides one inequality: `(holds, boundary)`.
///
/// Exact sides compare exactly with no band (a strict inequality failing at
/// equality is a genuine violation, flagged boundary-free). Once a float is
/// involved, violations within [`FLOAT_TOLERANCE`] are forgiven and flagged
/// as boundary cases instead.
fn compare(lhs: &Value, rhs: &Value, rel: Relation) -> (bool, bool) {
    if let Some(d) = exact_difference(lhs, rhs) {
        use num::Zero;
        return match rel {
            Relation::Le => {
                if d.is_zero() {
                    (true, true)
                } else {
                    (exact_is_negative(&d), false)
                }
            }
            Relation::Lt => (exact_is_negative(&d), false),
        };
    }
    let diff = lhs.as_f64() - rhs.as_f64();
    match rel {
        Relation::Le => {
            if diff <= 0.0 {
                (true, false)
            } else if diff <= FLOAT_TOLERANCE {
                (true, true)
            } else {
                (false, false)
            }
        }
        Relation::Lt => {
            if diff < 0.0 {
                (true, false)
            } else if diff <= FLOAT_TOLERANCE {
                (true, true)
            } else {
                (false, false)
            }
        }
    }
}

/// Evaluates one majorization instance: given `a` majorizing `b`, checks
/// that the exact maximum of `kind` over realizations of `a` dominates the
/// one over `b`. The maxima are supplied by the runner's memo.
pub fn evaluate_majorization(
    max_a: &Value,
    max_b: &Value,
) -> (Status, bool, Value) {
    let (ok, near) = compare(max_b, max_a, Relation::Le);
    let s = slack(max_b, max_a);
    (
        if ok { Status::Holds } else { Status::Violated },
        if ok { near } else { false },
        s,
    )
}

/// Majorization witness format: `"<a>|<b>"` where `a` majorizes `b`.
pub fn majorization_witness(a: &DegreeSequence, b: &DegreeSequence) -> String {
    format!("{a}|{b}")
}
