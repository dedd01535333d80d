//! Extremal realizations of a degree sequence.
//!
//! [`extremal`] finds the tree maximizing or minimizing an index over the
//! realizations of a degree sequence, either exactly (exhaustive
//! enumeration) or by steepest-ascent local search over the 2-exchange
//! neighborhood with seeded random restarts. Local search is a heuristic;
//! the exact mode is the reference.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use std::collections::BTreeMap;

use crate::canon::CanonicalCode;
use crate::construct::realize_canonical;
use crate::degrees::DegreeSequence;
use crate::enumerate::{realizations, EnumLimits};
use crate::error::{Error, Result};
use crate::indices::{IndexKind, IndexValue};
use crate::pruefer::{from_pruefer, PrueferSeq};
use crate::tree::Tree;

/// Two objective values within this distance are treated as ties (broken by
/// canonical code), and an ascent step must clear it to count as progress.
pub const IMPROVEMENT_TOLERANCE: f64 = 1e-9;

/// All trees reachable from `t` by one degree-preserving 2-edge exchange:
/// remove two vertex-disjoint edges and reconnect their endpoints the other
/// two ways. Results that fall apart, duplicate an edge, or are isomorphic
/// to `t` are dropped; survivors are deduplicated and sorted by canonical
/// code (canonical representatives are returned).
pub fn degree_preserving_moves(t: &Tree) -> Vec<Tree> {
    let own = t.canonical_code();
    let edges = t.edges();
    let n = t.order();
    let mut seen: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            for (e1, e2) in [((a, c), (b, d)), ((a, d), (b, c))] {
                let mut next: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
                for (k, &e) in edges.iter().enumerate() {
                    if k != i && k != j {
                        next.push(e);
                    }
                }
                next.push(e1);
                next.push(e2);
                if let Ok(candidate) = Tree::new(n, &next) {
                    let code = candidate.canonical_code();
                    if code != own {
                        seen.entry(code).or_insert(candidate);
                    }
                }
            }
        }
    }
    seen.into_iter()
        .map(|(code, _)| code.decode().expect("canonical codes decode"))
        .collect()
}

/// Predicted Sombor change of an exchange described by three degrees
/// `du >= dv >= dw >= 1`: an edge of degrees `(du, dv)` and one of
/// `(dw, 1)` become `(du, 1)` and `(dv, dw)`.
///
/// The prediction is never positive: writing
/// `h(r) = sqrt(r^2 + dv^2) - sqrt(r^2 + 1)`, the value is
/// `h(du) - h(dw)` and `h` is nonincreasing, so ordering the arguments the
/// other way is what a Sombor-increasing rewiring would need. Equality holds
/// exactly when `du == dw` or `dv == 1`.
pub fn exchange_gain(du: u32, dv: u32, dw: u32) -> Result<f64> {
    if !(du >= dv && dv >= dw && dw >= 1) {
        return Err(Error::DomainError(format!(
            "exchange gain needs du >= dv >= dw >= 1, got ({du}, {dv}, {dw})"
        )));
    }
    let sq = |a: u32, b: u32| ((a as f64).powi(2) + (b as f64).powi(2)).sqrt();
    Ok(sq(du, dv) + sq(dw, 1) - sq(du, 1) - sq(dv, dw))
}

/// Search direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Goal {
    Maximize,
    Minimize,
}

impl Goal {
    pub fn name(self) -> &'static str {
        match self {
            Goal::Maximize => "max",
            Goal::Minimize => "min",
        }
    }

    fn oriented(self, value: f64) -> f64 {
        match self {
            Goal::Maximize => value,
            Goal::Minimize => -value,
        }
    }
}

impl std::str::FromStr for Goal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Goal> {
        match s {
            "max" | "maximize" => Ok(Goal::Maximize),
            "min" | "minimize" => Ok(Goal::Minimize),
            _ => Err(Error::ParseError(format!("unknown goal {s:?}, expected max or min"))),
        }
    }
}

/// Search strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Exhaustive: enumerate every realization and take the best.
    Exact,
    /// Steepest-ascent 2-exchange walks: one start from the canonical
    /// realization, the remaining `restarts - 1` from shuffled starts.
    Local { restarts: u32, seed: u64 },
}

/// Outcome of an extremal search.
#[derive(Debug, Clone)]
pub struct ExtremalResult {
    /// Canonical representative of the best tree found.
    pub tree: Tree,
    /// Index value at `tree`.
    pub value: IndexValue,
    /// Number of index evaluations performed.
    pub evaluations: u64,
    /// True when the result is provably optimal (exact mode).
    pub certified: bool,
}

/// Finds a realization of `d` extremizing `kind`.
///
/// Exact mode is deterministic and optimal but bounded by the enumeration
/// budget. Local mode is deterministic for a fixed seed and returns the best
/// local optimum over all restarts; ties anywhere are broken toward the
/// smaller canonical code.
pub fn extremal(
    d: &DegreeSequence,
    kind: IndexKind,
    goal: Goal,
    mode: SearchMode,
    limits: &EnumLimits,
) -> Result<ExtremalResult> {
    d.require_tree_realizable()?;
    match mode {
        SearchMode::Exact => exact_extremal(d, kind, goal, limits),
        SearchMode::Local { restarts, seed } => {
            if restarts == 0 {
                return Err(Error::DomainError("local search needs at least one restart".into()));
            }
            local_extremal(d, kind, goal, restarts, seed)
        }
    }
}

fn exact_extremal(
    d: &DegreeSequence,
    kind: IndexKind,
    goal: Goal,
    limits: &EnumLimits,
) -> Result<ExtremalResult> {
    let all = realizations(d, usize::MAX, limits)?;
    let mut best: Option<(f64, CanonicalCode, Tree)> = None;
    let mut evaluations = 0u64;
    for t in all.trees {
        let v = goal.oriented(kind.value_of(&t).as_f64());
        evaluations += 1;
        let better = match &best {
            None => true,
            Some((bv, bc, _)) => v > *bv || (v == *bv && t.canonical_code() < *bc),
        };
        if better {
            let code = t.canonical_code();
            best = Some((v, code, t));
        }
    }
    let (_, _, tree) = best.expect("realizable sequences have at least one tree");
    let value = kind.value_of(&tree);
    Ok(ExtremalResult { tree, value, evaluations, certified: true })
}

fn local_extremal(
    d: &DegreeSequence,
    kind: IndexKind,
    goal: Goal,
    restarts: u32,
    seed: u64,
) -> Result<ExtremalResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut evaluations = 0u64;
    let mut best: Option<(f64, CanonicalCode, Tree)> = None;
    for restart in 0..restarts {
        let start = if restart == 0 {
            realize_canonical(d)?
        } else {
            random_realization(d, &mut rng)
        };
        let (tree, oriented) = climb(start, kind, goal, &mut evaluations);
        let code = tree.canonical_code();
        let better = match &best {
            None => true,
            Some((bv, bc, _)) => {
                oriented > bv + IMPROVEMENT_TOLERANCE
                    || ((oriented - bv).abs() <= IMPROVEMENT_TOLERANCE && code < *bc)
            }
        };
        if better {
            best = Some((oriented, code, tree));
        }
    }
    let (_, _, tree) = best.expect("at least one restart ran");
    let value = kind.value_of(&tree);
    Ok(ExtremalResult { tree, value, evaluations, certified: false })
}

/// A uniform-ish random labeled realization: shuffle the Prüfer multiset in
/// which vertex `i` appears `d_i - 1` times and decode.
fn random_realization(d: &DegreeSequence, rng: &mut ChaCha8Rng) -> Tree {
    let n = d.len();
    if n == 2 {
        return Tree::path(2);
    }
    let mut multiset: Vec<u32> = Vec::with_capacity(n - 2);
    for (v, &deg) in d.degrees().iter().enumerate() {
        multiset.extend(std::iter::repeat(v as u32).take(deg as usize - 1));
    }
    multiset.shuffle(rng);
    let seq = PrueferSeq::new(multiset, n).expect("multiset length matches the order");
    from_pruefer(&seq).expect("every sequence decodes to a tree")
}

/// Steepest ascent to a local optimum; ties toward the smaller code.
fn climb(start: Tree, kind: IndexKind, goal: Goal, evaluations: &mut u64) -> (Tree, f64) {
    let mut current = start;
    let mut current_value = goal.oriented(kind.value_of(&current).as_f64());
    *evaluations += 1;
    loop {
        let mut step: Option<(f64, CanonicalCode, Tree)> = None;
        for neighbor in degree_preserving_moves(&current) {
            let v = goal.oriented(kind.value_of(&neighbor).as_f64());
            *evaluations += 1;
            let better = match &step {
                None => true,
                Some((bv, bc, _)) => {
                    v > bv + IMPROVEMENT_TOLERANCE
                        || ((v - bv).abs() <= IMPROVEMENT_TOLERANCE
                            && neighbor.canonical_code() < *bc)
                }
            };
            if better {
                let code = neighbor.canonical_code();
                step = Some((v, code, neighbor));
            }
        }
        match step {
            Some((v, _, t)) if v > current_value + IMPROVEMENT_TOLERANCE => {
                current = t;
                current_value = v;
            }
            _ => return (current, current_value),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{free_trees, tree_degree_sequences};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn seq(v: &[u32]) -> DegreeSequence {
        DegreeSequence::from_degrees(v.to_vec())
    }

    #[test]
    fn exchange_gain_frozen_value() {
        let g = exchange_gain(3, 2, 1).unwrap();
        assert_relative_eq!(g, -0.3785807998310849, epsilon = 1e-12);
        let direct = 13f64.sqrt() + 2f64.sqrt() - 10f64.sqrt() - 5f64.sqrt();
        assert_relative_eq!(g, direct, epsilon = 0.0);
    }

    #[test]
    fn exchange_gain_domain() {
        assert!(exchange_gain(2, 3, 1).is_err());
        assert!(exchange_gain(3, 1, 2).is_err());
        assert!(exchange_gain(3, 2, 0).is_err());
        assert!(exchange_gain(1, 1, 1).is_ok());
    }

    #[test]
    fn exchange_gain_is_never_positive() {
        for du in 1..=50u32 {
            for dv in 1..=du {
                for dw in 1..=dv {
                    let g = exchange_gain(du, dv, dw).unwrap();
                    assert!(g <= 1e-12, "gain({du},{dv},{dw}) = {g}");
                    if du == dw || dv == 1 {
                        assert!(g.abs() <= 1e-12, "expected zero at ({du},{dv},{dw})");
                    }
                }
            }
        }
    }

    #[test]
    fn moves_preserve_degrees_and_exclude_self() {
        let spider = Tree::new(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        let own = spider.canonical_code();
        let moves = degree_preserving_moves(&spider);
        assert!(!moves.is_empty());
        for m in &moves {
            assert_eq!(m.degree_sequence(), spider.degree_sequence());
            assert_ne!(m.canonical_code(), own);
        }
        let codes: Vec<_> = moves.iter().map(Tree::canonical_code).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(codes, sorted);
    }

    #[test]
    fn moves_of_rigid_trees_are_empty() {
        assert!(degree_preserving_moves(&Tree::path(4)).is_empty());
        assert!(degree_preserving_moves(&Tree::star(6)).is_empty());
        assert!(degree_preserving_moves(&Tree::path(2)).is_empty());
    }

    #[test]
    fn moves_reach_the_other_realization() {
        // Degrees (3,2,2,1,1,1) has two realizations; each sees the other.
        let spider221 = Tree::new(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        let moves = degree_preserving_moves(&spider221);
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].max_degree(), 3);
    }

    #[test]
    fn exact_matches_brute_force_over_free_trees() {
        let limits = EnumLimits::default();
        for n in 2..=7 {
            let all = free_trees(n, &limits).unwrap();
            for d in tree_degree_sequences(n) {
                let brute = all
                    .iter()
                    .filter(|t| t.degree_sequence() == d)
                    .map(|t| IndexKind::Sombor.value_of(t).as_f64())
                    .fold(f64::NEG_INFINITY, f64::max);
                let got = extremal(&d, IndexKind::Sombor, Goal::Maximize, SearchMode::Exact, &limits)
                    .unwrap();
                assert_relative_eq!(got.value.as_f64(), brute, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn local_matches_exact_on_small_orders() {
        let limits = EnumLimits::default();
        let mode = SearchMode::Local { restarts: 5, seed: 0xC0FFEE };
        for n in 2..=7 {
            for d in tree_degree_sequences(n) {
                for goal in [Goal::Maximize, Goal::Minimize] {
                    let exact =
                        extremal(&d, IndexKind::Sombor, goal, SearchMode::Exact, &limits).unwrap();
                    let local = extremal(&d, IndexKind::Sombor, goal, mode, &limits).unwrap();
                    assert_relative_eq!(
                        local.value.as_f64(),
                        exact.value.as_f64(),
                        epsilon = IMPROVEMENT_TOLERANCE
                    );
                }
            }
        }
    }

    #[test]
    fn local_is_deterministic_for_a_seed() {
        let limits = EnumLimits::default();
        let d = seq(&[3, 3, 2, 2, 1, 1, 1, 1]);
        let mode = SearchMode::Local { restarts: 3, seed: 7 };
        let a = extremal(&d, IndexKind::Albertson, Goal::Maximize, mode, &limits).unwrap();
        let b = extremal(&d, IndexKind::Albertson, Goal::Maximize, mode, &limits).unwrap();
        assert_eq!(a.tree.canonical_code(), b.tree.canonical_code());
        assert_eq!(a.evaluations, b.evaluations);
    }

    #[test]
    fn single_restart_is_seed_independent() {
        // The first start is always the canonical realization, so one restart
        // ignores the seed entirely.
        let limits = EnumLimits::default();
        let d = seq(&[3, 3, 2, 1, 1, 1, 1]);
        let a = extremal(
            &d,
            IndexKind::Sombor,
            Goal::Maximize,
            SearchMode::Local { restarts: 1, seed: 1 },
            &limits,
        )
        .unwrap();
        let b = extremal(
            &d,
            IndexKind::Sombor,
            Goal::Maximize,
            SearchMode::Local { restarts: 1, seed: 99 },
            &limits,
        )
        .unwrap();
        assert_eq!(a.tree.canonical_code(), b.tree.canonical_code());
        assert!(!a.certified);
    }

    #[test]
    fn exact_results_are_certified() {
        let limits = EnumLimits::default();
        let d = seq(&[2, 2, 1, 1]);
        let r = extremal(&d, IndexKind::Sombor, Goal::Maximize, SearchMode::Exact, &limits).unwrap();
        assert!(r.certified);
    }

    #[test]
    fn zero_restarts_rejected() {
        let limits = EnumLimits::default();
        let d = seq(&[2, 1, 1]);
        let mode = SearchMode::Local { restarts: 0, seed: 1 };
        assert!(extremal(&d, IndexKind::Sombor, Goal::Maximize, mode, &limits).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn local_never_beats_exact(seed in any::<u64>(), pick in 0usize..100) {
            let limits = EnumLimits::default();
            let sequences: Vec<_> = (2..=7).flat_map(tree_degree_sequences).collect();
            let d = &sequences[pick % sequences.len()];
            let exact = extremal(d, IndexKind::Sombor, Goal::Maximize, SearchMode::Exact, &limits)
                .unwrap();
            let local = extremal(
                d,
                IndexKind::Sombor,
                Goal::Maximize,
                SearchMode::Local { restarts: 2, seed },
                &limits,
            )
            .unwrap();
            prop_assert!(local.value.as_f64() <= exact.value.as_f64() + 1e-9);
            prop_assert_eq!(local.tree.degree_sequence(), d.clone());
        }
    }
}
