//! Constructive versions of the existence arguments.
//!
//! Each entry point checks its hypotheses, then follows the inductive case
//! analysis literally, recording every step in a [`ProofTrace`]:
//!
//! - [`lemma1_construct`]: rainbow graphs with `n >= 5s`.
//! - [`lemma2_construct`]: rainbow `k`-uniform hypergraphs with `n >= 3k²s`.
//! - [`theorem1_construct`]: properly colored `k`-uniform hypergraphs with
//!   `n >= 3k²s`.
//!
//! All three require every member to have more than
//! `C(n, k) - C(n - s + 1, k)` edges. Every recursive call re-checks the
//! hypotheses of its callee; a failure there is reported as a
//! [`ProofError::Precondition`] at a positive depth and means the
//! arithmetic chain was broken somewhere.

mod engine;
mod thresholds;
mod trace;

use std::fmt;

use thiserror::Error;

use crate::hypergraph::{ColoredEdge, HypergraphFamily};
use crate::matching::RainbowMatching;

use engine::{Engine, Procedure};
pub use thresholds::{thresholds_for, ProofThresholds};
pub use trace::{CaseLabel, ProofTrace, TraceEntry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    /// The hypotheses of a procedure do not hold. At depth 0 this is bad
    /// input; deeper, it is a violated step of the argument.
    #[error("precondition of {procedure} failed at depth {depth}: {reason}")]
    Precondition {
        depth: usize,
        procedure: &'static str,
        reason: String,
    },
    /// A step the argument guarantees came up empty.
    #[error("internal contradiction at depth {depth}: {reason}")]
    InternalContradiction { depth: usize, reason: String },
}

impl ProofError {
    pub fn is_input_error(&self) -> bool {
        matches!(self, ProofError::Precondition { depth: 0, .. })
    }
}

/// A failed construction together with the steps taken before it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ProofFailure {
    pub error: ProofError,
    pub trace: ProofTrace,
}

impl fmt::Display for ProofFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.error.fmt(f)
    }
}

/// How the extension step (recurse without member `i`, then scan `H_i`)
/// of the uniform case is triggered.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ExtensionPolicy {
    /// Try every member in order and fall through to the link descent only
    /// when every scan fails.
    #[default]
    Attempt,
    /// Try member `i` only when its `s`-th largest degree is at most
    /// `d_low`, where the counting argument guarantees success; otherwise go
    /// straight to the link descent.
    DegreeCondition,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ProofOptions {
    pub extension: ExtensionPolicy,
}

pub type ProofResult = Result<(RainbowMatching, ProofTrace), ProofFailure>;

fn construct(family: &HypergraphFamily, proc: Procedure, options: ProofOptions) -> ProofResult {
    let mut engine = Engine::new(options);
    let outcome = engine.run(proc, family.members(), 0);
    let trace = ProofTrace { entries: std::mem::take(&mut engine.entries) };
    let edges = match outcome {
        Ok(edges) => edges,
        Err(error) => return Err(ProofFailure { error, trace }),
    };
    match to_matching(family, &edges) {
        Ok(m) => Ok((m, trace)),
        Err(error) => Err(ProofFailure { error, trace }),
    }
}

fn to_matching(family: &HypergraphFamily, edges: &[ColoredEdge]) -> Result<RainbowMatching, ProofError> {
    let picks = edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            family.member(i).position_of(e).map(|idx| (i, idx)).ok_or_else(|| {
                ProofError::InternalContradiction {
                    depth: 0,
                    reason: format!("edge {e} returned for member {i} is not one of its edges"),
                }
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RainbowMatching { picks })
}

/// Rainbow graphs, `n >= 5s`.
pub fn lemma1_construct(family: &HypergraphFamily) -> ProofResult {
    construct(family, Procedure::Lemma1, ProofOptions::default())
}

/// Rainbow `k`-uniform members, `n >= 3k²s`; graphs are handed to
/// [`lemma1_construct`]'s procedure.
pub fn lemma2_construct(family: &HypergraphFamily) -> ProofResult {
    lemma2_construct_with(family, ProofOptions::default())
}

pub fn lemma2_construct_with(family: &HypergraphFamily, options: ProofOptions) -> ProofResult {
    construct(family, Procedure::Lemma2, options)
}

/// Properly colored `k`-uniform members, `n >= 3k²s`.
pub fn theorem1_construct(family: &HypergraphFamily) -> ProofResult {
    theorem1_construct_with(family, ProofOptions::default())
}

pub fn theorem1_construct_with(family: &HypergraphFamily, options: ProofOptions) -> ProofResult {
    construct(family, Procedure::Theorem, options)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::threshold;
    use crate::constructions::{cover_construction, greedy_proper_coloring, k_subsets, random_family, ColoringMode};
    use crate::hypergraph::{Color, ColoredHypergraph};
    use crate::matching::check_rainbow_matching;
    use crate::solver::find_rainbow_matching;

    fn complete(n: usize, k: usize) -> ColoredHypergraph {
        cover_construction(n, k, n + 1).unwrap()
    }

    fn assert_valid(family: &HypergraphFamily, result: ProofResult) -> ProofTrace {
        let (m, trace) = result.unwrap_or_else(|f| panic!("{}\n{}", f, f.trace.to_log()));
        check_rainbow_matching(family, &m).unwrap();
        assert_wellformed(&trace);
        trace
    }

    /// Each step that spawns a call must be followed by that call's first
    /// entry, one level deeper, with the expected parameters.
    fn assert_wellformed(trace: &ProofTrace) {
        let es = &trace.entries;
        for (idx, e) in es.iter().enumerate() {
            let spawns = e.case.reduces_s()
                || e.case == CaseLabel::LinkDescent
                || (e.case == CaseLabel::ExtendScan && e.detail.ends_with("recurse"));
            if !spawns {
                continue;
            }
            let next = &es[idx + 1];
            assert_eq!(next.depth, e.depth + 1, "entry {idx}: {e}");
            match e.case {
                CaseLabel::LinkDescent => {
                    assert_eq!((next.n, next.k, next.s), (e.n - e.s, e.k - 1, e.s), "entry {idx}: {e}");
                }
                CaseLabel::HighDegreeVertex => assert_eq!((next.n, next.k, next.s), (e.n - 1, e.k, e.s - 1)),
                CaseLabel::ArbitraryEdge => assert_eq!((next.n, next.k, next.s), (e.n - 2, e.k, e.s - 1)),
                _ => assert_eq!((next.n, next.k, next.s), (e.n, e.k, e.s - 1)),
            }
        }
    }

    #[test]
    fn single_member_takes_first_edge() {
        let g = complete(5, 2);
        let f = HypergraphFamily::new(vec![g.clone()]).unwrap();
        let (m, trace) = lemma1_construct(&f).unwrap();
        assert_eq!(m.picks, vec![(0, 0)]);
        assert_eq!(trace.entries[0].case, CaseLabel::Base);
        let f = HypergraphFamily::new(vec![complete(12, 2)]).unwrap();
        assert_eq!(lemma2_construct(&f).unwrap().0.picks, vec![(0, 0)]);
        assert_eq!(theorem1_construct(&f).unwrap().0.picks, vec![(0, 0)]);
    }

    #[test]
    fn lemma1_on_complete_graphs() {
        let f = HypergraphFamily::repeated(&complete(10, 2), 2).unwrap();
        // C(10, 2) - C(9, 2) = 45 - 36.
        assert_eq!(threshold(10, 2, 2).unwrap(), 9);
        let trace = assert_valid(&f, lemma1_construct(&f));
        assert_eq!(trace.entries[0].case, CaseLabel::HighDegreeVertex);
        assert!(find_rainbow_matching(&f).unwrap().found);
    }

    #[test]
    fn lemma1_requires_strict_edge_count() {
        let prefix = |m: usize| ColoredHypergraph::new_unchecked(10, 2, complete(10, 2).edges()[..m].to_vec());
        let f = HypergraphFamily::repeated(&prefix(9), 2).unwrap();
        let err = lemma1_construct(&f).unwrap_err();
        assert!(err.error.is_input_error(), "{}", err.error);
        let f = HypergraphFamily::repeated(&prefix(10), 2).unwrap();
        assert_valid(&f, lemma1_construct(&f));
    }

    #[test]
    fn lemma1_rejects_non_rainbow_and_small_n() {
        let g = greedy_proper_coloring(10, 2, &k_subsets(10, 2).collect::<Vec<_>>());
        let f = HypergraphFamily::repeated(&g, 2).unwrap();
        assert!(lemma1_construct(&f).unwrap_err().error.is_input_error());
        let f = HypergraphFamily::repeated(&complete(9, 2), 2).unwrap();
        assert!(lemma1_construct(&f).unwrap_err().error.is_input_error());
    }

    /// A 3-regular rainbow graph on 24 vertices: no vertex above 3(s-1) = 3 and
    /// no color class above 2, so the arbitrary-edge deletion fires.
    fn cubic_circulant(n: usize, offset_color: u64) -> ColoredHypergraph {
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push(vec![i, (i + 1) % n]);
        }
        for i in 0..n / 2 {
            edges.push(vec![i, i + n / 2]);
        }
        ColoredHypergraph::new(
            n,
            2,
            edges
                .into_iter()
                .enumerate()
                .map(|(c, e)| ColoredEdge::new(e, Color(c as u64 + offset_color)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn arbitrary_edge_branch_fires_on_sparse_graphs() {
        let f = HypergraphFamily::new(vec![cubic_circulant(24, 0), cubic_circulant(24, 5)]).unwrap();
        let trace = assert_valid(&f, theorem1_construct(&f));
        assert_eq!(trace.entries[0].case, CaseLabel::ArbitraryEdge);
        let trace = assert_valid(&f, lemma1_construct(&f));
        assert_eq!(trace.entries[0].case, CaseLabel::ArbitraryEdge);
    }

    #[test]
    fn color_class_branch_fires() {
        // Member 0: the circulant with its 12 chords recolored to one class.
        let base = cubic_circulant(24, 0);
        let edges = base
            .edges()
            .iter()
            .map(|e| {
                let chord = e.vertices[1] - e.vertices[0] == 12;
                ColoredEdge::new(e.vertices.clone(), if chord { Color(1000) } else { e.color })
            })
            .collect();
        let member0 = ColoredHypergraph::new(24, 2, edges).unwrap();
        assert!(member0.is_properly_colored());
        let f = HypergraphFamily::new(vec![member0, cubic_circulant(24, 3)]).unwrap();
        let trace = assert_valid(&f, theorem1_construct(&f));
        assert_eq!(trace.entries[0].case, CaseLabel::ColorClass);
        assert!(trace.entries[0].detail.contains("color=1000"));
    }

    #[test]
    fn theorem_on_random_graph_families() {
        let n = 24;
        let m = threshold(24, 2, 2).unwrap() as usize + 1;
        for seed in 0..40 {
            for mode in [ColoringMode::Rainbow, ColoringMode::GreedyProper] {
                let f = random_family(n, 2, 2, m, seed, mode).unwrap();
                assert_valid(&f, theorem1_construct(&f));
            }
        }
    }

    #[test]
    fn lemma2_on_complete_three_uniform() {
        let f = HypergraphFamily::repeated(&complete(54, 3), 2).unwrap();
        let trace = assert_valid(&f, lemma2_construct(&f));
        assert_eq!(trace.entries[0].case, CaseLabel::HighDegreeVertex);
        assert!(find_rainbow_matching(&f).unwrap().found);
        let small = HypergraphFamily::repeated(&complete(53, 3), 2).unwrap();
        assert!(lemma2_construct(&small).unwrap_err().error.is_input_error());
    }

    /// Hubs 0 and 1 of degree 150 each (above d_low = 105, below
    /// d_high = 157) plus random filler, so the degree-conditioned policy
    /// descends to the links.
    fn hub_member(seed: u64, mode: ColoringMode) -> ColoredHypergraph {
        let n = 54;
        let class = |e: &Vec<usize>| (e.contains(&0), e.contains(&1));
        let thin = |want: (bool, bool), count: usize, salt: u64| {
            let mut keyed: Vec<(u64, Vec<usize>)> = k_subsets(n, 3)
                .filter(|e| class(e) == want)
                .enumerate()
                .map(|(i, e)| (crate::constructions::mix64(seed ^ salt ^ (i as u64) << 20), e))
                .collect();
            keyed.sort();
            keyed.into_iter().take(count).map(|(_, e)| e).collect::<Vec<_>>()
        };
        let mut subsets = thin((true, false), 150, 1);
        subsets.extend(thin((false, true), 150, 2));
        subsets.extend(thin((false, false), 1379 - 300, 3));
        crate::constructions::color_subsets(n, 3, subsets, mode)
    }

    #[test]
    fn link_descent_under_degree_condition() {
        for mode in [ColoringMode::Rainbow, ColoringMode::GreedyProper] {
            let f = HypergraphFamily::new(vec![hub_member(11, mode), hub_member(12, mode)]).unwrap();
            for m in f.members() {
                let max = *m.degrees().iter().max().unwrap();
                assert!(max <= 157, "max degree {max}");
            }
            let options = ProofOptions { extension: ExtensionPolicy::DegreeCondition };
            let result = if mode == ColoringMode::Rainbow {
                lemma2_construct_with(&f, options)
            } else {
                theorem1_construct_with(&f, options)
            };
            let trace = assert_valid(&f, result);
            assert_eq!(trace.count(CaseLabel::LinkDescent), 1, "{}", trace.to_log());
            let link = trace.entries.iter().find(|e| e.case == CaseLabel::LinkDescent).unwrap();
            assert!(link.detail.starts_with("vertices=[0, 1]"), "{link}");
            assert_eq!(trace.count(CaseLabel::Lemma1Call), 1);
            if mode == ColoringMode::GreedyProper {
                assert_eq!(trace.count(CaseLabel::Lemma2Call), 1);
            }
            // Under the default policy the extension attempt succeeds first.
            let trace = assert_valid(&f, theorem1_construct(&f));
            assert_eq!(trace.count(CaseLabel::LinkDescent), 0);
        }
    }

    #[test]
    fn theorem_rejects_improper_members() {
        let e = |v: &[usize], c| ColoredEdge::new(v.to_vec(), Color(c));
        let mut edges = complete(24, 2).edges().to_vec();
        edges[1] = e(&edges[1].vertices.clone(), 0);
        let h = ColoredHypergraph::new(24, 2, edges).unwrap();
        assert!(!h.is_properly_colored());
        let f = HypergraphFamily::repeated(&h, 2).unwrap();
        let err = theorem1_construct(&f).unwrap_err();
        assert!(err.error.is_input_error());
        assert!(err.to_string().contains("properly colored"));
    }

    #[test]
    fn trace_log_format() {
        let f = HypergraphFamily::repeated(&complete(10, 2), 2).unwrap();
        let (_, trace) = lemma1_construct(&f).unwrap();
        let log = trace.to_log();
        let first = log.lines().next().unwrap();
        assert!(first.starts_with("0 high-degree-vertex 10 2 2 member=0 vertex=0"), "{first}");
        assert!(log.lines().any(|l| l.starts_with("1 base 9 2 1")));
    }
}
