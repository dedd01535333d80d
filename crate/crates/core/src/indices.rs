//! Degree-based topological indices and derived sequence parameters.
//!
//! Integer-valued indices return `i64`, the Sombor index returns `f64`, and
//! everything that can leave the integers (the moment form of sigma, the
//! Criado index, the parameter `k`) is computed in exact rational arithmetic.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::degrees::DegreeSequence;
use crate::error::{Error, Result};
use crate::fmt as numfmt;
use crate::tree::Tree;

/// Exact rational; always reduced with positive denominator.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The indices this crate computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    /// Albertson irregularity: sum of |d(u) - d(v)| over edges.
    Albertson,
    /// Sigma, edge form: sum of (d(u) - d(v))^2 over edges.
    SigmaEdge,
    /// Sigma, moment form: sum of (d(v) - 2m/n)^2 over vertices.
    SigmaMoment,
    /// Criado irregularity: (1/n) * sum of |d(v) - 2m/n| over vertices.
    Criado,
    /// Sombor: sum of sqrt(d(u)^2 + d(v)^2) over edges.
    Sombor,
    /// First Zagreb: sum of d(v)^2 over vertices.
    Zagreb1,
    /// Second Zagreb: sum of d(u) * d(v) over edges.
    Zagreb2,
}

impl IndexKind {
    pub const ALL: [IndexKind; 7] = [
        IndexKind::Albertson,
        IndexKind::SigmaEdge,
        IndexKind::SigmaMoment,
        IndexKind::Criado,
        IndexKind::Sombor,
        IndexKind::Zagreb1,
        IndexKind::Zagreb2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Albertson => "albertson",
            IndexKind::SigmaEdge => "sigma_edge",
            IndexKind::SigmaMoment => "sigma_moment",
            IndexKind::Criado => "criado",
            IndexKind::Sombor => "sombor",
            IndexKind::Zagreb1 => "zagreb1",
            IndexKind::Zagreb2 => "zagreb2",
        }
    }

    /// Value of this index on a tree.
    pub fn value_of(self, t: &Tree) -> IndexValue {
        match self {
            IndexKind::Albertson => IndexValue::Int(albertson(t)),
            IndexKind::SigmaEdge => IndexValue::Int(sigma_edge(t)),
            IndexKind::SigmaMoment => IndexValue::Exact(sigma_moment(t)),
            IndexKind::Criado => IndexValue::Exact(criado(t)),
            IndexKind::Sombor => IndexValue::Real(sombor(t)),
            IndexKind::Zagreb1 => IndexValue::Int(zagreb1(t)),
            IndexKind::Zagreb2 => IndexValue::Int(zagreb2(t)),
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<IndexKind> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::ParseError(format!("unknown index {s:?}")))
    }
}

/// An index value: integer, exact rational, or floating-point real.
#[derive(Debug, Clone, PartialEq)]
pub enum IndexValue {
    Int(i64),
    Exact(Rational),
    Real(f64),
}

impl IndexValue {
    /// Numeric view for comparisons and search; exact values convert.
    pub fn as_f64(&self) -> f64 {
        match self {
            IndexValue::Int(v) => *v as f64,
            IndexValue::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            IndexValue::Real(v) => *v,
        }
    }

    /// Stable textual form (rationals as `num/den`, reals with 15 significant
    /// digits).
    pub fn display(&self) -> String {
        match self {
            IndexValue::Int(v) => v.to_string(),
            IndexValue::Exact(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            IndexValue::Real(v) => numfmt::real(*v),
        }
    }
}

// ---- the indices ---------------------------------------------------------

/// Albertson irregularity `irr`.
pub fn albertson(t: &Tree) -> i64 {
    t.edges()
        .iter()
        .map(|&e| {
            let (a, b) = t.edge_degrees(e);
            (a as i64 - b as i64).abs()
        })
        .sum()
}

/// Sigma in edge form: squared degree differences over edges.
pub fn sigma_edge(t: &Tree) -> i64 {
    t.edges()
        .iter()
        .map(|&e| {
            let (a, b) = t.edge_degrees(e);
            let d = a as i64 - b as i64;
            d * d
        })
        .sum()
}

/// Sigma in moment form: `sum_v (d(v) - 2m/n)^2`, exactly. Equals
/// `M1 - 4m^2/n`; note there is no `1/n` in front of the sum.
pub fn sigma_moment(t: &Tree) -> Rational {
    let n = BigInt::from(t.order());
    let m = BigInt::from(t.size());
    let mean = BigRational::new(2 * m, n);
    t.degrees()
        .iter()
        .map(|&d| {
            let diff = BigRational::from(BigInt::from(d)) - &mean;
            &diff * &diff
        })
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// Criado irregularity: `(1/n) sum_v |d(v) - 2m/n|`, exactly.
pub fn criado(t: &Tree) -> Rational {
    let n = BigInt::from(t.order());
    let m = BigInt::from(t.size());
    let mean = BigRational::new(2 * m, n.clone());
    let total = t
        .degrees()
        .iter()
        .map(|&d| (BigRational::from(BigInt::from(d)) - &mean).abs())
        .fold(BigRational::zero(), |acc, x| acc + x);
    total / BigRational::from(n)
}

/// Sombor index `SO`.
pub fn sombor(t: &Tree) -> f64 {
    t.edges()
        .iter()
        .map(|&e| {
            let (a, b) = t.edge_degrees(e);
            ((a as f64).powi(2) + (b as f64).powi(2)).sqrt()
        })
        .sum()
}

/// First Zagreb index `M1`.
pub fn zagreb1(t: &Tree) -> i64 {
    t.degrees().iter().map(|&d| (d as i64) * (d as i64)).sum()
}

/// Second Zagreb index `M2`.
pub fn zagreb2(t: &Tree) -> i64 {
    t.edges()
        .iter()
        .map(|&e| {
            let (a, b) = t.edge_degrees(e);
            a as i64 * b as i64
        })
        .sum()
}

// ---- derived parameters --------------------------------------------------

/// Parameters derived from a degree sequence:
///
/// * `k = (sum of d^2) / (n - max_deg)`, exact;
/// * `eta = floor(k * n / 2)`;
/// * `mu = floor((eta - 2) / (eta - n))`;
/// * `x = eta - mu * (eta - n) - 2` and `y = mu * (eta - n) - n + 2`,
///   which always satisfy `x + y = eta - n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedParams {
    pub k: Rational,
    pub eta: i64,
    pub mu: i64,
    pub x: i64,
    pub y: i64,
}

/// Computes [`DerivedParams`] for a tree-realizable sequence.
///
/// Errors with `DegenerateParams` when `n = max_deg` (division by zero in
/// `k`) or `eta = n` (division by zero in `mu`).
pub fn derived_params(d: &DegreeSequence) -> Result<DerivedParams> {
    d.require_tree_realizable()?;
    let n = d.len() as i64;
    let delta = d.max_degree() as i64;
    if n == delta {
        return Err(Error::DegenerateParams(format!(
            "sequence {d}: n equals the maximum degree"
        )));
    }
    let sum_sq = BigInt::from(d.sum_of_squares());
    let k = BigRational::new(sum_sq, BigInt::from(n - delta));
    let eta_big = (&k * BigRational::new(BigInt::from(n), BigInt::from(2))).floor();
    let eta = eta_big
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::DomainError("eta overflows i64".into()))?;
    if eta == n {
        return Err(Error::DegenerateParams(format!("sequence {d}: eta equals n")));
    }
    let mu = (eta - 2).div_euclid(eta - n);
    let x = eta - mu * (eta - n) - 2;
    let y = mu * (eta - n) - n + 2;
    Ok(DerivedParams { k, eta, mu, x, y })
}

// ---- closed forms --------------------------------------------------------

/// Sombor index of the path on `n >= 3` vertices: `2*sqrt(5) + 2(n-3)*sqrt(2)`.
pub fn sombor_path_closed(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::BadOrder(format!("closed form needs n >= 3, got {n}")));
    }
    Ok(2.0 * 5f64.sqrt() + 2.0 * (n as f64 - 3.0) * 2f64.sqrt())
}

/// Closed-form expression attached to the extremal-tree construction:
///
/// `xy*sqrt(2mu^2+6mu+5) + x*leaves*sqrt(mu^2+4mu+5) + y*leaves*sqrt(mu^2+2mu+2)`.
///
/// The value is the expression as stated; it generally does not equal the
/// Sombor index of the tree built by
/// [`extremal_construction`](crate::construct::extremal_construction), a gap
/// the audit reports rather than repairs.
pub fn sombor_closed_form(x: u64, y: u64, leaves: u64, mu: u64) -> Result<f64> {
    if mu < 1 {
        return Err(Error::DomainError("mu must be at least 1".into()));
    }
    let (x, y, l, mu) = (x as f64, y as f64, leaves as f64, mu as f64);
    Ok(x * y * (2.0 * mu * mu + 6.0 * mu + 5.0).sqrt()
        + x * l * (mu * mu + 4.0 * mu + 5.0).sqrt()
        + y * l * (mu * mu + 2.0 * mu + 2.0).sqrt())
}
