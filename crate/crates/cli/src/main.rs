//! `treedex`: compute tree indices, derive sequence parameters, realize and
//! enumerate trees, search for extremal realizations, audit inequality
//! claims, and emit figure data.
//!
//! Exit codes: 0 success, 1 domain error (one `error: Kind: detail` line on
//! stderr), 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde::Serialize;

use treedex::audit::{audit, builtin_claims, claims_by_ids, AuditOptions};
use treedex::construct::{
    complete_with_leaves, extremal_construction, parse_degree_sequence, realize_canonical,
};
use treedex::enumerate::{corpus, free_trees, realizations, CorpusSpec, EnumLimits, Family};
use treedex::indices::{albertson, derived_params, sombor, zagreb1};
use treedex::search::{extremal, Goal, SearchMode};
use treedex::{DegreeSequence, Error, IndexKind, Rational, Result, Tree};

#[derive(Parser)]
#[command(name = "treedex", version, about = "Degree-based topological indices of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute indices of a tree given as an edge-list file.
    Compute {
        /// Edge-list file: first line n, then one "u v" edge per line.
        #[arg(long)]
        tree: PathBuf,
        /// Comma-separated index names (default: all).
        #[arg(long)]
        indices: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Derive the sequence parameters k, eta, mu, x, y.
    Params {
        /// Degree sequence, e.g. "2^11,10"; leaves are appended automatically.
        #[arg(long)]
        sequence: String,
        /// Use the sequence exactly as given instead of completing it.
        #[arg(long)]
        no_complete: bool,
    },
    /// Build one realization of a degree sequence.
    Realize {
        #[arg(long)]
        sequence: String,
        /// Build the extremal configuration "x,y,leaves,mu" instead of the
        /// greedy realization; the values must match the sequence's derived
        /// parameters.
        #[arg(long)]
        extremal: Option<String>,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count (and with --codes, list) non-isomorphic trees.
    #[command(group(ArgGroup::new("what").required(true).args(["order", "sequence"])))]
    Enumerate {
        /// Enumerate all trees of this order.
        #[arg(long)]
        order: Option<usize>,
        /// Enumerate the realizations of this degree sequence.
        #[arg(long)]
        sequence: Option<String>,
        /// List canonical codes, one per line, after the count.
        #[arg(long)]
        codes: bool,
        /// Keep at most this many trees.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Find a realization extremizing an index.
    Search {
        #[arg(long)]
        sequence: String,
        /// Index name, e.g. "sombor".
        #[arg(long)]
        index: String,
        /// "max" or "min".
        #[arg(long)]
        direction: String,
        /// "exact" (exhaustive) or "local" (seeded restarts).
        #[arg(long, default_value = "exact")]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        restarts: u32,
    },
    /// Evaluate inequality claims over a corpus of trees.
    #[command(group(ArgGroup::new("corpus").required(true).args(["order_range", "sequence"])))]
    Audit {
        /// Comma-separated claim ids (default: all builtin).
        #[arg(long)]
        claims: Option<String>,
        /// Order range "A..B": all trees with A <= n <= B.
        #[arg(long)]
        order_range: Option<String>,
        /// Audit the realizations of one degree sequence.
        #[arg(long)]
        sequence: Option<String>,
        /// Rational sandwich coefficient, e.g. "2" or "3/2".
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 1 if any of these claim ids records a violation.
        #[arg(long)]
        fail_on_violation: Option<String>,
    },
    /// Emit index-growth data for tree families as CSV.
    Figure {
        /// Comma-separated families: path, star, spider.
        #[arg(long)]
        families: String,
        /// Order range "A..B".
        #[arg(long)]
        order_range: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Compute { tree, indices, format } => cmd_compute(&tree, indices.as_deref(), format),
        Command::Params { sequence, no_complete } => cmd_params(&sequence, no_complete),
        Command::Realize { sequence, extremal, out } => {
            cmd_realize(&sequence, extremal.as_deref(), out.as_deref())
        }
        Command::Enumerate { order, sequence, codes, cap } => {
            cmd_enumerate(order, sequence.as_deref(), codes, cap)
        }
        Command::Search { sequence, index, direction, strategy, seed, restarts } => {
            cmd_search(&sequence, &index, &direction, &strategy, seed, restarts)
        }
        Command::Audit {
            claims,
            order_range,
            sequence,
            alpha,
            beta,
            format,
            out,
            fail_on_violation,
        } => cmd_audit(
            claims.as_deref(),
            order_range.as_deref(),
            sequence.as_deref(),
            alpha.as_deref(),
            beta.as_deref(),
            format,
            out.as_deref(),
            fail_on_violation.as_deref(),
        ),
        Command::Figure { families, order_range, out } => {
            cmd_figure(&families, &order_range, out.as_deref())
        }
    }
}

/// Resolves a sequence argument: parse, then append the balancing leaves
/// (a no-op when the sequence is already realizable as written).
fn resolve_sequence(s: &str) -> Result<DegreeSequence> {
    complete_with_leaves(&parse_degree_sequence(s)?)
}

fn parse_rational(s: &str) -> Result<Rational> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse()
            .map_err(|_| Error::ParseError(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == BigInt::from(0) {
                return Err(Error::ParseError("zero denominator".into()));
            }
            Ok(Rational::new(parse_int(num)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

fn parse_order_range(s: &str) -> Result<(usize, usize)> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| Error::ParseError(format!("order range {s:?} must look like A..B")))?;
    let parse = |t: &str| -> Result<usize> {
        t.trim()
            .parse()
            .map_err(|_| Error::ParseError(format!("bad order in range {s:?}")))
    };
    Ok((parse(lo)?, parse(hi)?))
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output structs serialize");
    s.push('\n');
    s
}

// ---- compute ---------------------------------------------------------------

#[derive(Serialize)]
struct ComputeOutput {
    order: usize,
    size: usize,
    degree_sequence: String,
    values: Vec<IndexEntry>,
}

#[derive(Serialize)]
struct IndexEntry {
    index: String,
    value: String,
}

fn cmd_compute(path: &std::path::Path, indices: Option<&str>, format: OutputFormat) -> Result<i32> {
    let text = fs::read_to_string(path)?;
    let tree = Tree::parse_edge_list(&text)?;
    let kinds: Vec<IndexKind> = match indices {
        Some(list) => list
            .split(',')
            .map(|s| IndexKind::from_str(s.trim()))
            .collect::<Result<_>>()?,
        None => IndexKind::ALL.to_vec(),
    };
    let values: Vec<IndexEntry> = kinds
        .iter()
        .map(|k| IndexEntry {
            index: k.name().to_string(),
            value: k.value_of(&tree).display(),
        })
        .collect();
    let text = match format {
        OutputFormat::Json => to_pretty_json(&ComputeOutput {
            order: tree.order(),
            size: tree.size(),
            degree_sequence: tree.degree_sequence().to_string(),
            values,
        }),
        OutputFormat::Csv => {
            let mut s = String::from("index,value\n");
            for e in &values {
                s.push_str(&format!("{},{}\n", e.index, e.value));
            }
            s
        }
    };
    print!("{text}");
    Ok(0)
}

// ---- params ----------------------------------------------------------------

#[derive(Serialize)]
struct ParamsOutput {
    sequence: String,
    resolved: String,
    n: usize,
    k: RationalOutput,
    eta: i64,
    mu: i64,
    x: i64,
    y: i64,
}

#[derive(Serialize)]
struct RationalOutput {
    num: String,
    den: String,
}

fn cmd_params(sequence: &str, no_complete: bool) -> Result<i32> {
    let spec = parse_degree_sequence(sequence)?;
    let d = if no_complete { spec.to_sequence()? } else { complete_with_leaves(&spec)? };
    let p = derived_params(&d)?;
    // k as written by the defining formula: sum of squares over n - max degree.
    let k = RationalOutput {
        num: d.sum_of_squares().to_string(),
        den: (d.len() as u64 - d.max_degree() as u64).to_string(),
    };
    print!(
        "{}",
        to_pretty_json(&ParamsOutput {
            sequence: sequence.to_string(),
            resolved: d.to_string(),
            n: d.len(),
            k,
            eta: p.eta,
            mu: p.mu,
            x: p.x,
            y: p.y,
        })
    );
    Ok(0)
}

// ---- realize ---------------------------------------------------------------

fn cmd_realize(sequence: &str, extremal_args: Option<&str>, out: Option<&std::path::Path>) -> Result<i32> {
    let d = resolve_sequence(sequence)?;
    let tree = match extremal_args {
        None => realize_canonical(&d)?,
        Some(args) => {
            let parts: Vec<u64> = args
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| Error::ParseError(format!("bad extremal component {s:?}")))
                })
                .collect::<Result<_>>()?;
            let [x, y, leaves, mu] = parts[..] else {
                return Err(Error::ParseError("--extremal needs exactly x,y,leaves,mu".into()));
            };
            let p = derived_params(&d)?;
            let derived = (p.x as u64, p.y as u64, d.len() as u64, p.mu as u64);
            if (x, y, leaves, mu) != derived {
                return Err(Error::DomainError(format!(
                    "extremal parameters ({x},{y},{leaves},{mu}) do not match the sequence's \
                     derived values ({},{},{},{})",
                    derived.0, derived.1, derived.2, derived.3
                )));
            }
            extremal_construction(x, y, leaves, mu)?
        }
    };
    emit(&tree.to_edge_list(), out)?;
    Ok(0)
}

// ---- enumerate -------------------------------------------------------------

fn cmd_enumerate(order: Option<usize>, sequence: Option<&str>, codes: bool, cap: Option<usize>) -> Result<i32> {
    let limits = EnumLimits::from_env();
    let cap = cap.unwrap_or(usize::MAX);
    if cap == 0 {
        return Err(Error::DomainError("cap must be at least 1".into()));
    }
    let (trees, truncated) = match (order, sequence) {
        (Some(n), None) => {
            let all = free_trees(n, &limits)?;
            let truncated = all.len() > cap;
            (all.into_iter().take(cap).collect::<Vec<_>>(), truncated)
        }
        (None, Some(s)) => {
            let r = realizations(&resolve_sequence(s)?, cap, &limits)?;
            (r.trees, r.truncated)
        }
        _ => unreachable!("clap enforces exactly one of --order/--sequence"),
    };
    let mut text = format!("count: {}\n", trees.len());
    if truncated {
        text.push_str("truncated: true\n");
    }
    if codes {
        for t in &trees {
            text.push_str(&format!("{}\n", t.canonical_code()));
        }
    }
    print!("{text}");
    Ok(0)
}

// ---- search ----------------------------------------------------------------

#[derive(Serialize)]
struct SearchOutput {
    sequence: String,
    index: String,
    direction: String,
    best_value: String,
    best_tree_code: String,
    method: String,
    trees_visited: u64,
    certified: bool,
}

fn cmd_search(
    sequence: &str,
    index: &str,
    direction: &str,
    strategy: &str,
    seed: u64,
    restarts: u32,
) -> Result<i32> {
    let d = resolve_sequence(sequence)?;
    let kind = IndexKind::from_str(index)?;
    let goal = Goal::from_str(direction)?;
    let mode = match strategy {
        "exact" => SearchMode::Exact,
        "local" => SearchMode::Local { restarts, seed },
        other => {
            return Err(Error::ParseError(format!(
                "unknown strategy {other:?}, expected exact or local"
            )))
        }
    };
    let limits = EnumLimits::from_env();
    let result = extremal(&d, kind, goal, mode, &limits)?;
    print!(
        "{}",
        to_pretty_json(&SearchOutput {
            sequence: d.to_string(),
            index: kind.name().to_string(),
            direction: goal.name().to_string(),
            best_value: result.value.display(),
            best_tree_code: result.tree.canonical_code().to_string(),
            method: strategy.to_string(),
            trees_visited: result.evaluations,
            certified: result.certified,
        })
    );
    Ok(0)
}

// ---- audit -----------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn cmd_audit(
    claims: Option<&str>,
    order_range: Option<&str>,
    sequence: Option<&str>,
    alpha: Option<&str>,
    beta: Option<&str>,
    format: OutputFormat,
    out: Option<&std::path::Path>,
    fail_on_violation: Option<&str>,
) -> Result<i32> {
    let selected = match claims {
        Some(list) => {
            let ids: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            claims_by_ids(&ids)?
        }
        None => builtin_claims(),
    };
    let spec = match (order_range, sequence) {
        (Some(range), None) => {
            let (n_min, n_max) = parse_order_range(range)?;
            CorpusSpec::AllTrees { n_min, n_max }
        }
        (None, Some(s)) => CorpusSpec::FixedSequence { sequence: resolve_sequence(s)? },
        _ => unreachable!("clap enforces exactly one of --order-range/--sequence"),
    };
    let mut opts = AuditOptions {
        limits: EnumLimits::from_env(),
        ..AuditOptions::default()
    };
    if let Some(a) = alpha {
        opts.alpha = parse_rational(a)?;
    }
    if let Some(b) = beta {
        opts.beta = parse_rational(b)?;
    }
    let report = audit(&selected, &spec, &opts)?;
    let text = match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    };
    emit(&text, out)?;

    if let Some(ids) = fail_on_violation {
        for id in ids.split(',').map(str::trim) {
            let matched: Vec<_> = report
                .claims
                .iter()
                .filter(|r| r.id == id || r.id.split('[').next() == Some(id))
                .collect();
            if matched.is_empty() {
                return Err(Error::ParseError(format!("unknown claim id {id:?}")));
            }
            if matched.iter().any(|r| r.violated > 0) {
                eprintln!("error: ClaimViolated: {id} recorded violations");
                return Ok(1);
            }
        }
    }
    Ok(0)
}

// ---- figure ----------------------------------------------------------------

fn cmd_figure(families: &str, order_range: &str, out: Option<&std::path::Path>) -> Result<i32> {
    let families: Vec<Family> = families
        .split(',')
        .map(|s| Family::from_str(s.trim()))
        .collect::<Result<_>>()?;
    let (lo, hi) = parse_order_range(order_range)?;
    let limits = EnumLimits::from_env();
    let mut text = String::from("family,n,SO,irr,M1\n");
    for family in families {
        let members_of = |n: usize| -> Result<Vec<Tree>> {
            match family {
                Family::Path => Ok(vec![Tree::path(n)]),
                Family::Star => Ok(vec![Tree::star(n)]),
                Family::Spider => {
                    let spec = CorpusSpec::NamedFamily { family, n_min: n, n_max: n };
                    Ok(corpus(&spec, &limits)?.trees)
                }
            }
        };
        if lo < 2 || lo > hi {
            return Err(Error::DomainError(format!(
                "order range {lo}..{hi} must satisfy 2 <= lo <= hi"
            )));
        }
        for n in lo..=hi {
            for t in members_of(n)? {
                text.push_str(&format!(
                    "{},{},{},{},{}\n",
                    family.name(),
                    n,
                    treedex::fmt::real(sombor(&t)),
                    albertson(&t),
                    zagreb1(&t)
                ));
            }
        }
    }
    emit(&text, out)?;
    Ok(0)
}
