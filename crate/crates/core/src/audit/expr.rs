//! Expression language for claim sides.
//!
//! Claims are small arithmetic expressions over tree invariants. Evaluation
//! is exact (arbitrary-precision rational) as long as every operation stays
//! in the rationals; a square root drops the value into `f64`. Comparisons
//! downstream pick their tolerance policy based on whether both sides stayed
//! exact.

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::degrees::DegreeSequence;
use crate::fmt;
use crate::indices::{
    albertson, derived_params, sigma_edge, sigma_moment, sombor, sombor_path_closed, zagreb1,
    zagreb2, DerivedParams, Rational,
};
use crate::tree::Tree;

/// Which reading of the Sigma index a claim row uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SigmaVariant {
    Edge,
    Moment,
}

impl SigmaVariant {
    pub fn name(self) -> &'static str {
        match self {
            SigmaVariant::Edge => "edge",
            SigmaVariant::Moment => "moment",
        }
    }
}

/// A computed quantity: exact rational or double.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Rational),
    Real(f64),
}

impl Value {
    pub fn from_int(v: i64) -> Value {
        Value::Exact(Rational::from_integer(BigInt::from(v)))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Value::Real(x) => *x,
        }
    }

    /// Stable display: reduced rational (`"22"`, `"154/12"` never appears —
    /// rationals are canonical, so that one prints `"77/6"`) or a
    /// 15-significant-digit decimal.
    pub fn display(&self) -> String {
        match self {
            Value::Exact(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Value::Real(x) => fmt::real(*x),
        }
    }

    fn binary(self, other: Value, exact: impl Fn(Rational, Rational) -> Rational, real: impl Fn(f64, f64) -> f64) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(exact(a, b)),
            (a, b) => Value::Real(real(a.as_f64(), b.as_f64())),
        }
    }

    pub fn add(self, other: Value) -> Value {
        self.binary(other, |a, b| a + b, |a, b| a + b)
    }

    pub fn sub(self, other: Value) -> Value {
        self.binary(other, |a, b| a - b, |a, b| a - b)
    }

    pub fn mul(self, other: Value) -> Value {
        self.binary(other, |a, b| a * b, |a, b| a * b)
    }

    /// Division; `None` on an exact zero denominator.
    pub fn div(self, other: Value) -> Option<Value> {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => {
                if b.is_zero() {
                    None
                } else {
                    Some(Value::Exact(a / b))
                }
            }
            (a, b) => {
                let d = b.as_f64();
                if d == 0.0 {
                    None
                } else {
                    Some(Value::Real(a.as_f64() / d))
                }
            }
        }
    }

    /// Square root; always leaves the exact domain. `None` when negative.
    pub fn sqrt(self) -> Option<Value> {
        let x = self.as_f64();
        if x < 0.0 || x.is_nan() {
            None
        } else {
            Some(Value::Real(x.sqrt()))
        }
    }

    pub fn floor(self) -> Value {
        match self {
            Value::Exact(r) => Value::Exact(r.floor()),
            Value::Real(x) => Value::Real(x.floor()),
        }
    }
}

/// Symbols a claim may reference. Per-tree symbols come straight from the
/// tree; per-sequence symbols (derived parameters, realization extremes,
/// construction values) come from [`SequenceFacts`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    /// Albertson index.
    Irr,
    /// Sigma index in the row's variant.
    Sigma,
    /// Sigma index, edge form, regardless of the row's variant.
    SigmaEdge,
    So,
    M1,
    M2,
    N,
    M,
    MaxDeg,
    MinDeg,
    K,
    Eta,
    Mu,
    X,
    Y,
    /// Closed-form Sombor index of the path on n vertices.
    SoPath,
    /// Maximum Sombor index over all realizations of the tree's sequence.
    SoRealizationMax,
    /// Closed-form Sombor value of the extremal family at the tree's
    /// derived parameters.
    SoClosedForm,
    /// Sombor index of the tree the extremal construction actually builds.
    SoConstructed,
    Alpha,
    Beta,
}

/// Expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(i64),
    Sym(Symbol),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Sqrt(Box<Expr>),
    Floor(Box<Expr>),
}

pub fn int(v: i64) -> Expr {
    Expr::Int(v)
}

pub fn sym(s: Symbol) -> Expr {
    Expr::Sym(s)
}

pub fn add(a: Expr, b: Expr) -> Expr {
    Expr::Add(Box::new(a), Box::new(b))
}

pub fn sub(a: Expr, b: Expr) -> Expr {
    Expr::Sub(Box::new(a), Box::new(b))
}

pub fn mul(a: Expr, b: Expr) -> Expr {
    Expr::Mul(Box::new(a), Box::new(b))
}

pub fn div(a: Expr, b: Expr) -> Expr {
    Expr::Div(Box::new(a), Box::new(b))
}

pub fn sqrt(a: Expr) -> Expr {
    Expr::Sqrt(Box::new(a))
}

pub fn floor(a: Expr) -> Expr {
    Expr::Floor(Box::new(a))
}

pub fn square(a: Expr) -> Expr {
    mul(a.clone(), a)
}

/// Facts about one degree sequence, shared by every tree realizing it.
/// Fields are `None` when the quantity is undefined (degenerate parameters)
/// or was not computed within budget.
#[derive(Debug, Clone, Default)]
pub struct SequenceFacts {
    pub params: Option<DerivedParams>,
    pub so_realization_max: Option<f64>,
    pub so_closed_form: Option<f64>,
    pub so_constructed: Option<f64>,
}

impl SequenceFacts {
    /// Derived parameters only; extremes and construction values are filled
    /// in by the audit runner when a claim needs them.
    pub fn basic(d: &DegreeSequence) -> SequenceFacts {
        SequenceFacts {
            params: derived_params(d).ok(),
            ..SequenceFacts::default()
        }
    }
}

/// Everything needed to evaluate an expression at one tree.
pub struct EvalContext<'a> {
    pub tree: &'a Tree,
    pub variant: Option<SigmaVariant>,
    pub alpha: &'a Rational,
    pub beta: &'a Rational,
    pub facts: &'a SequenceFacts,
}

impl<'a> EvalContext<'a> {
    fn symbol(&self, s: Symbol) -> Option<Value> {
        let t = self.tree;
        Some(match s {
            Symbol::Irr => Value::from_int(albertson(t)),
            Symbol::Sigma => match self.variant? {
                SigmaVariant::Edge => Value::from_int(sigma_edge(t)),
                SigmaVariant::Moment => Value::Exact(sigma_moment(t)),
            },
            Symbol::SigmaEdge => Value::from_int(sigma_edge(t)),
            Symbol::So => Value::Real(sombor(t)),
            Symbol::M1 => Value::from_int(zagreb1(t)),
            Symbol::M2 => Value::from_int(zagreb2(t)),
            Symbol::N => Value::from_int(t.order() as i64),
            Symbol::M => Value::from_int(t.size() as i64),
            Symbol::MaxDeg => Value::from_int(t.max_degree() as i64),
            Symbol::MinDeg => Value::from_int(t.min_degree() as i64),
            Symbol::K => Value::Exact(self.facts.params.as_ref()?.k.clone()),
            Symbol::Eta => Value::from_int(self.facts.params.as_ref()?.eta),
            Symbol::Mu => Value::from_int(self.facts.params.as_ref()?.mu),
            Symbol::X => Value::from_int(self.facts.params.as_ref()?.x),
            Symbol::Y => Value::from_int(self.facts.params.as_ref()?.y),
            Symbol::SoPath => Value::Real(sombor_path_closed(t.order()).ok()?),
            Symbol::SoRealizationMax => Value::Real(self.facts.so_realization_max?),
            Symbol::SoClosedForm => Value::Real(self.facts.so_closed_form?),
            Symbol::SoConstructed => Value::Real(self.facts.so_constructed?),
            Symbol::Alpha => Value::Exact(self.alpha.clone()),
            Symbol::Beta => Value::Exact(self.beta.clone()),
        })
    }
}

/// Evaluates `expr`; `None` means undefined at this tree (degenerate
/// parameters, out-of-domain closed form, exhausted budget).
pub fn eval(expr: &Expr, ctx: &EvalContext<'_>) -> Option<Value> {
    match expr {
        Expr::Int(v) => Some(Value::from_int(*v)),
        Expr::Sym(s) => ctx.symbol(*s),
        Expr::Add(a, b) => Some(eval(a, ctx)?.add(eval(b, ctx)?)),
        Expr::Sub(a, b) => Some(eval(a, ctx)?.sub(eval(b, ctx)?)),
        Expr::Mul(a, b) => Some(eval(a, ctx)?.mul(eval(b, ctx)?)),
        Expr::Div(a, b) => eval(a, ctx)?.div(eval(b, ctx)?),
        Expr::Sqrt(a) => eval(a, ctx)?.sqrt(),
        Expr::Floor(a) => Some(eval(a, ctx)?.floor()),
    }
}

/// Exact comparison key when both values are exact, else `None`.
pub fn exact_difference(lhs: &Value, rhs: &Value) -> Option<Rational> {
    match (lhs, rhs) {
        (Value::Exact(a), Value::Exact(b)) => Some(a - b),
        _ => None,
    }
}

/// Signed slack `rhs - lhs`, exact when both sides are.
pub fn slack(lhs: &Value, rhs: &Value) -> Value {
    match exact_difference(rhs, lhs) {
        Some(d) => Value::Exact(d),
        None => Value::Real(rhs.as_f64() - lhs.as_f64()),
    }
}

/// True when an exact value is negative (used for exact comparisons).
pub fn exact_is_negative(r: &Rational) -> bool {
    r.is_negative()
}
