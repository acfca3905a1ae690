//! Rainbow matchings and the independent witness checker.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{ColoredEdge, HypergraphFamily};

/// One edge per family member: `picks[j] = (member, edge index)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowMatching {
    pub picks: Vec<(usize, usize)>,
}

impl RainbowMatching {
    /// Builds a matching from per-member edge indices, member `i` at position `i`.
    pub fn from_edge_indices(indices: &[usize]) -> Self {
        RainbowMatching {
            picks: indices.iter().copied().enumerate().collect(),
        }
    }

    /// The chosen edges, in pick order.
    pub fn edges<'a>(&self, family: &'a HypergraphFamily) -> Vec<&'a ColoredEdge> {
        self.picks
            .iter()
            .map(|&(i, e)| &family.member(i).edges()[e])
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingViolation {
    #[error("expected {expected} picks, found {found}")]
    WrongSize { expected: usize, found: usize },
    #[error("member {0} is picked more than once or not at all")]
    MemberCoverage(usize),
    #[error("pick ({member}, {edge}) does not name an edge")]
    NoSuchEdge { member: usize, edge: usize },
    #[error("picks {0} and {1} share a vertex")]
    SharedVertex(usize, usize),
    #[error("picks {0} and {1} share a color")]
    SharedColor(usize, usize),
}

/// Checks a witness against the family from scratch.
///
/// This deliberately shares nothing with the solvers: it looks up each pick
/// and compares every pair directly.
pub fn check_rainbow_matching(
    family: &HypergraphFamily,
    matching: &RainbowMatching,
) -> Result<(), MatchingViolation> {
    let s = family.size();
    if matching.picks.len() != s {
        return Err(MatchingViolation::WrongSize {
            expected: s,
            found: matching.picks.len(),
        });
    }
    let mut covered = vec![0usize; s];
    for &(member, _) in &matching.picks {
        if member >= s {
            return Err(MatchingViolation::MemberCoverage(member));
        }
        covered[member] += 1;
    }
    if let Some(i) = covered.iter().position(|&c| c != 1) {
        return Err(MatchingViolation::MemberCoverage(i));
    }
    let mut edges = Vec::with_capacity(s);
    for &(member, edge) in &matching.picks {
        match family.member(member).edges().get(edge) {
            Some(e) => edges.push(e),
            None => return Err(MatchingViolation::NoSuchEdge { member, edge }),
        }
    }
    for a in 0..s {
        for b in a + 1..s {
            if edges[a].vertices.iter().any(|v| edges[b].vertices.contains(v)) {
                return Err(MatchingViolation::SharedVertex(a, b));
            }
            if edges[a].color == edges[b].color {
                return Err(MatchingViolation::SharedColor(a, b));
            }
        }
    }
    Ok(())
}

impl fmt::Display for RainbowMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in &self.picks {
            writeln!(f, "{i} {e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{Color, ColoredHypergraph};

    fn family() -> HypergraphFamily {
        let e = |v: &[usize], c| ColoredEdge::new(v.to_vec(), Color(c));
        let a = ColoredHypergraph::new(5, 2, vec![e(&[0, 1], 0), e(&[1, 2], 1)]).unwrap();
        let b = ColoredHypergraph::new(5, 2, vec![e(&[2, 3], 0), e(&[2, 4], 5)]).unwrap();
        HypergraphFamily::new(vec![a, b]).unwrap()
    }

    #[test]
    fn accepts_valid_witness() {
        let m = RainbowMatching { picks: vec![(1, 1), (0, 0)] };
        assert_eq!(check_rainbow_matching(&family(), &m), Ok(()));
    }

    #[test]
    fn rejects_each_kind_of_violation() {
        let f = family();
        let check = |picks: Vec<(usize, usize)>| check_rainbow_matching(&f, &RainbowMatching { picks });
        assert_eq!(check(vec![(0, 0)]), Err(MatchingViolation::WrongSize { expected: 2, found: 1 }));
        assert_eq!(check(vec![(0, 0), (0, 1)]), Err(MatchingViolation::MemberCoverage(0)));
        assert_eq!(check(vec![(0, 0), (1, 9)]), Err(MatchingViolation::NoSuchEdge { member: 1, edge: 9 }));
        assert_eq!(check(vec![(0, 1), (1, 1)]), Err(MatchingViolation::SharedVertex(0, 1)));
        assert_eq!(check(vec![(0, 0), (1, 0)]), Err(MatchingViolation::SharedColor(0, 1)));
    }
}
