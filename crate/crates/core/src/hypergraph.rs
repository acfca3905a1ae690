//! Colored k-uniform hypergraphs and the elementary operations on them.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::HypergraphError;

/// A vertex id, dense and 0-based within its hypergraph.
pub type Vertex = usize;

/// An opaque color id, global across a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub u64);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A k-subset of vertices carrying one color.
///
/// Vertices are kept sorted. Duplicates are not removed here so that
/// malformed input survives long enough for [`validate`] to report it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub vertices: Vec<Vertex>,
    pub color: Color,
}

impl ColoredEdge {
    pub fn new(mut vertices: Vec<Vertex>, color: Color) -> Self {
        vertices.sort_unstable();
        ColoredEdge { vertices, color }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Vertex-disjointness; colors are not compared.
    pub fn is_vertex_disjoint(&self, other: &ColoredEdge) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

impl fmt::Display for ColoredEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}:{}", self.color)
    }
}

/// Relabeling produced by operations that compact vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    new_to_old: Vec<Vertex>,
    old_to_new: Vec<Option<Vertex>>,
}

impl VertexMap {
    /// The map keeping every vertex of `0..old_n` except those in `removed`.
    pub fn removing(old_n: usize, removed: &[Vertex]) -> Self {
        let mut old_to_new = vec![None; old_n];
        let mut new_to_old = Vec::with_capacity(old_n);
        for (v, slot) in old_to_new.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        VertexMap {
            new_to_old,
            old_to_new,
        }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap::removing(n, &[])
    }

    pub fn new_len(&self) -> usize {
        self.new_to_old.len()
    }

    pub fn to_old(&self, v: Vertex) -> Vertex {
        self.new_to_old[v]
    }

    pub fn to_new(&self, v: Vertex) -> Option<Vertex> {
        self.old_to_new.get(v).copied().flatten()
    }

    /// Maps an edge expressed in new ids back to old ids.
    pub fn edge_to_old(&self, edge: &ColoredEdge) -> ColoredEdge {
        ColoredEdge::new(
            edge.vertices.iter().map(|&v| self.to_old(v)).collect(),
            edge.color,
        )
    }

    /// `self` maps a middle universe to an outer one, `inner` maps an inner
    /// universe to the middle one. The result maps inner ids to outer ids.
    pub fn compose(&self, inner: &VertexMap) -> VertexMap {
        let new_to_old: Vec<Vertex> = inner.new_to_old.iter().map(|&m| self.to_old(m)).collect();
        let mut old_to_new = vec![None; self.old_to_new.len()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        VertexMap {
            new_to_old,
            old_to_new,
        }
    }
}

/// A k-uniform hypergraph on `0..n` whose edges carry colors.
///
/// Values are immutable; every operation builds a new hypergraph. The
/// per-vertex incidence index is computed on first use.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoredHypergraph {
    n: usize,
    k: usize,
    edges: Vec<ColoredEdge>,
    #[serde(skip)]
    incidence: OnceLock<Vec<Vec<usize>>>,
}

impl PartialEq for ColoredHypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.edges == other.edges
    }
}

impl Eq for ColoredHypergraph {}

impl ColoredHypergraph {
    /// Builds a hypergraph, rejecting structural violations.
    ///
    /// Proper coloring is not required here; see [`is_properly_colored`].
    pub fn new(n: usize, k: usize, edges: Vec<ColoredEdge>) -> Result<Self, HypergraphError> {
        let h = ColoredHypergraph::new_unchecked(n, k, edges);
        let report = validate(&h);
        match report.violations.into_iter().find(|v| v.is_structural()) {
            Some(v) => Err(HypergraphError::Invalid(v.to_string())),
            None => Ok(h),
        }
    }

    /// Builds a hypergraph without any checks. Use [`validate`] to inspect it.
    pub fn new_unchecked(n: usize, k: usize, edges: Vec<ColoredEdge>) -> Self {
        ColoredHypergraph {
            n,
            k,
            edges,
            incidence: OnceLock::new(),
        }
    }

    pub fn empty(n: usize, k: usize) -> Self {
        ColoredHypergraph::new_unchecked(n, k, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    /// Number of edges, `e(H)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Indices of the edges containing `v`, in stored order.
    pub fn incident(&self, v: Vertex) -> Result<&[usize], HypergraphError> {
        self.check_vertex(v)?;
        Ok(&self.incidence()[v])
    }

    fn incidence(&self) -> &Vec<Vec<usize>> {
        self.incidence.get_or_init(|| {
            let mut inc = vec![Vec::new(); self.n];
            for (i, e) in self.edges.iter().enumerate() {
                for &v in &e.vertices {
                    if v < self.n && inc[v].last() != Some(&i) {
                        inc[v].push(i);
                    }
                }
            }
            inc
        })
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), HypergraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: Vertex) -> Result<usize, HypergraphError> {
        Ok(self.incident(v)?.len())
    }

    /// All degrees, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.incidence().iter().map(Vec::len).collect()
    }

    pub fn colors(&self) -> Vec<Color> {
        let set: std::collections::BTreeSet<Color> = self.edges.iter().map(|e| e.color).collect();
        set.into_iter().collect()
    }

    /// Edge count of every color class, keyed by color.
    pub fn color_class_sizes(&self) -> BTreeMap<Color, usize> {
        let mut sizes = BTreeMap::new();
        for e in &self.edges {
            *sizes.entry(e.color).or_insert(0) += 1;
        }
        sizes
    }

    /// True iff at every vertex the incident edges carry distinct colors.
    pub fn is_properly_colored(&self) -> bool {
        self.first_coloring_conflict().is_none()
    }

    fn first_coloring_conflict(&self) -> Option<(Vertex, Color)> {
        for (v, incident) in self.incidence().iter().enumerate() {
            let mut seen = HashSet::with_capacity(incident.len());
            for &i in incident {
                if !seen.insert(self.edges[i].color) {
                    return Some((v, self.edges[i].color));
                }
            }
        }
        None
    }

    /// True iff all edge colors are pairwise distinct.
    pub fn is_rainbow(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|e| seen.insert(e.color))
    }

    /// The hypergraph induced on all vertices but `v`, with ids compacted.
    pub fn delete_vertex(&self, v: Vertex) -> Result<(ColoredHypergraph, VertexMap), HypergraphError> {
        self.check_vertex(v)?;
        Ok(self.delete_vertices(&[v]))
    }

    /// Removes several vertices at once. Ids outside `0..n` are ignored.
    pub(crate) fn delete_vertices(&self, removed: &[Vertex]) -> (ColoredHypergraph, VertexMap) {
        let map = VertexMap::removing(self.n, removed);
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.vertices.iter().any(|v| removed.contains(v)))
            .map(|e| {
                ColoredEdge::new(
                    e.vertices.iter().map(|&u| map.to_new(u).expect("kept vertex")).collect(),
                    e.color,
                )
            })
            .collect();
        (
            ColoredHypergraph::new_unchecked(map.new_len(), self.k, edges),
            map,
        )
    }

    /// Drops every edge of color `c`; an absent color is a no-op.
    pub fn delete_color(&self, c: Color) -> ColoredHypergraph {
        let edges = self.edges.iter().filter(|e| e.color != c).cloned().collect();
        ColoredHypergraph::new_unchecked(self.n, self.k, edges)
    }

    /// The link of `v` avoiding `forbidden`.
    ///
    /// Edges are `e \ {v}` for every `e` containing `v` that meets
    /// `forbidden` only in `v`, each keeping its color. The result lives on
    /// the `n - |forbidden|` vertices outside `forbidden`, compacted.
    pub fn link(
        &self,
        v: Vertex,
        forbidden: &[Vertex],
    ) -> Result<(ColoredHypergraph, VertexMap), HypergraphError> {
        self.check_vertex(v)?;
        if let Some(&bad) = forbidden.iter().find(|&&u| u >= self.n) {
            return Err(HypergraphError::VertexOutOfRange { vertex: bad, n: self.n });
        }
        if !forbidden.contains(&v) {
            return Err(HypergraphError::LinkVertexNotForbidden(v));
        }
        if self.k < 2 {
            return Err(HypergraphError::LinkUndefined(self.k));
        }
        let map = VertexMap::removing(self.n, forbidden);
        let edges = self.incidence()[v]
            .iter()
            .map(|&i| &self.edges[i])
            .filter(|e| e.vertices.iter().all(|u| *u == v || !forbidden.contains(u)))
            .map(|e| {
                ColoredEdge::new(
                    e.vertices
                        .iter()
                        .filter(|&&u| u != v)
                        .map(|&u| map.to_new(u).expect("kept vertex"))
                        .collect(),
                    e.color,
                )
            })
            .collect();
        Ok((
            ColoredHypergraph::new_unchecked(map.new_len(), self.k - 1, edges),
            map,
        ))
    }

    /// Index of the edge with exactly these vertices and this color.
    pub fn position_of(&self, edge: &ColoredEdge) -> Option<usize> {
        self.edges.iter().position(|e| e == edge)
    }
}

/// `s` hypergraphs over one vertex universe and one color space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphFamily {
    n: usize,
    k: usize,
    members: Vec<ColoredHypergraph>,
}

impl HypergraphFamily {
    pub fn new(members: Vec<ColoredHypergraph>) -> Result<Self, HypergraphError> {
        let first = members.first().ok_or(HypergraphError::EmptyFamily)?;
        let (n, k) = (first.n(), first.k());
        for (i, m) in members.iter().enumerate() {
            if m.n() != n || m.k() != k {
                return Err(HypergraphError::FamilyMismatch {
                    member: i,
                    n: m.n(),
                    k: m.k(),
                    expected_n: n,
                    expected_k: k,
                });
            }
        }
        Ok(HypergraphFamily { n, k, members })
    }

    /// `s` copies of one hypergraph.
    pub fn repeated(h: &ColoredHypergraph, s: usize) -> Result<Self, HypergraphError> {
        HypergraphFamily::new(vec![h.clone(); s])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The number of members, `s`.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[ColoredHypergraph] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &ColoredHypergraph {
        &self.members[i]
    }

    pub fn into_members(self) -> Vec<ColoredHypergraph> {
        self.members
    }
}

/// One problem found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The edge does not have exactly `k` distinct vertices.
    Arity { edge: usize, expected: usize, distinct: usize, len: usize },
    VertexOutOfRange { edge: usize, vertex: Vertex, n: usize },
    /// Same vertex set and same color as an earlier edge.
    DuplicateEdge { edge: usize, first: usize },
    /// Same vertex set as an earlier edge, different color.
    ParallelEdge { edge: usize, first: usize },
    /// Two edges at `vertex` share `color`.
    ImproperColoring { vertex: Vertex, color: Color, edges: (usize, usize) },
    InvalidUniformity,
}

impl Violation {
    pub fn is_structural(&self) -> bool {
        !matches!(self, Violation::ImproperColoring { .. })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Arity { edge, expected, distinct, len } => write!(
                f,
                "edge {edge}: arity violation, {len} vertices ({distinct} distinct), expected {expected}"
            ),
            Violation::VertexOutOfRange { edge, vertex, n } => {
                write!(f, "edge {edge}: vertex {vertex} out of range 0..{n}")
            }
            Violation::DuplicateEdge { edge, first } => {
                write!(f, "edge {edge}: exact duplicate of edge {first}")
            }
            Violation::ParallelEdge { edge, first } => {
                write!(f, "edge {edge}: same vertex set as edge {first}")
            }
            Violation::ImproperColoring { vertex, color, edges } => write!(
                f,
                "vertex {vertex}: edges {} and {} both have color {color}",
                edges.0, edges.1
            ),
            Violation::InvalidUniformity => write!(f, "uniformity k must be at least 1"),
        }
    }
}

/// Everything wrong with a hypergraph; empty iff valid and properly colored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_structurally_valid(&self) -> bool {
        self.violations.iter().all(|v| !v.is_structural())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Lists every structural and proper-coloring violation of `h`.
pub fn validate(h: &ColoredHypergraph) -> ValidationReport {
    let mut violations = Vec::new();
    if h.k() == 0 {
        violations.push(Violation::InvalidUniformity);
    }
    let mut seen: HashMap<&[Vertex], usize> = HashMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        let mut distinct = e.vertices.clone();
        distinct.dedup();
        if e.vertices.len() != h.k() || distinct.len() != e.vertices.len() {
            violations.push(Violation::Arity {
                edge: i,
                expected: h.k(),
                distinct: distinct.len(),
                len: e.vertices.len(),
            });
        }
        for &v in &distinct {
            if v >= h.n() {
                violations.push(Violation::VertexOutOfRange { edge: i, vertex: v, n: h.n() });
            }
        }
        if let Some(&first) = seen.get(e.vertices.as_slice()) {
            if h.edges()[first].color == e.color {
                violations.push(Violation::DuplicateEdge { edge: i, first });
            } else {
                violations.push(Violation::ParallelEdge { edge: i, first });
            }
        } else {
            seen.insert(&e.vertices, i);
        }
    }
    for (v, incident) in h.incidence().iter().enumerate() {
        let mut by_color: HashMap<Color, usize> = HashMap::new();
        for &i in incident {
            let c = h.edges()[i].color;
            if let Some(&j) = by_color.get(&c) {
                violations.push(Violation::ImproperColoring { vertex: v, color: c, edges: (j, i) });
            } else {
                by_color.insert(c, i);
            }
        }
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(vs: &[Vertex], c: u64) -> ColoredEdge {
        ColoredEdge::new(vs.to_vec(), Color(c))
    }

    fn graph(n: usize, es: &[(&[Vertex], u64)]) -> ColoredHypergraph {
        ColoredHypergraph::new(n, es[0].0.len(), es.iter().map(|(v, c)| edge(v, *c)).collect())
            .unwrap()
    }

    fn rainbow_k4() -> ColoredHypergraph {
        graph(
            4,
            &[(&[0, 1], 0), (&[0, 2], 1), (&[0, 3], 2), (&[1, 2], 3), (&[1, 3], 4), (&[2, 3], 5)],
        )
    }

    // K4 split into its three perfect matchings.
    fn k4_one_factorization() -> ColoredHypergraph {
        graph(
            4,
            &[(&[0, 1], 0), (&[2, 3], 0), (&[0, 2], 1), (&[1, 3], 1), (&[0, 3], 2), (&[1, 2], 2)],
        )
    }

    #[test]
    fn proper_coloring_examples() {
        let bad = graph(3, &[(&[0, 1], 0), (&[1, 2], 1), (&[0, 2], 0)]);
        assert!(!bad.is_properly_colored());
        let good = graph(3, &[(&[0, 1], 0), (&[1, 2], 1), (&[0, 2], 2)]);
        assert!(good.is_properly_colored());
        assert!(ColoredHypergraph::empty(5, 3).is_properly_colored());
    }

    #[test]
    fn rainbow_examples() {
        assert!(!graph(6, &[(&[0, 1, 2], 0), (&[3, 4, 5], 0)]).is_rainbow());
        assert!(graph(6, &[(&[0, 1, 2], 0), (&[3, 4, 5], 1)]).is_rainbow());
        assert!(graph(6, &[(&[0, 1, 2], 7)]).is_rainbow());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(rainbow_k4().degree(0).unwrap(), 3);
        assert_eq!(ColoredHypergraph::empty(5, 2).degree(4).unwrap(), 0);
        assert!(matches!(
            rainbow_k4().degree(4),
            Err(HypergraphError::VertexOutOfRange { vertex: 4, n: 4 })
        ));
    }

    #[test]
    fn delete_vertex_examples() {
        let k4 = rainbow_k4();
        let (tri, map) = k4.delete_vertex(3).unwrap();
        assert_eq!(tri.n(), 3);
        assert_eq!(tri.edge_count(), 3);
        let colors: Vec<u64> = tri.edges().iter().map(|e| e.color.0).collect();
        assert_eq!(colors, vec![0, 1, 3]);
        assert_eq!(map.to_old(2), 2);

        let star = graph(4, &[(&[0, 1], 0), (&[0, 2], 1), (&[0, 3], 2)]);
        let (rest, map) = star.delete_vertex(0).unwrap();
        assert!(rest.is_empty());
        assert_eq!(rest.n(), 3);
        assert_eq!(map.to_old(0), 1);
        assert!(k4.delete_vertex(9).is_err());
    }

    #[test]
    fn delete_color_examples() {
        let path = graph(4, &[(&[0, 1], 0), (&[1, 2], 1), (&[2, 3], 0)]);
        let rest = path.delete_color(Color(0));
        assert_eq!(rest.edges(), &[edge(&[1, 2], 1)]);
        assert_eq!(rainbow_k4().delete_color(Color(3)).edge_count(), 5);
        assert_eq!(rainbow_k4().delete_color(Color(99)).edge_count(), 6);
        assert_eq!(k4_one_factorization().delete_color(Color(1)).edge_count(), 4);
    }

    #[test]
    fn link_examples() {
        let h = graph(5, &[(&[0, 1, 2], 0), (&[0, 3, 4], 1), (&[1, 3, 4], 2)]);
        let (l, map) = h.link(0, &[0]).unwrap();
        assert_eq!(l.k(), 2);
        assert_eq!(l.n(), 4);
        let back: Vec<ColoredEdge> = l.edges().iter().map(|e| map.edge_to_old(e)).collect();
        assert_eq!(back, vec![edge(&[1, 2], 0), edge(&[3, 4], 1)]);

        let (l, map) = h.link(0, &[0, 1]).unwrap();
        let back: Vec<ColoredEdge> = l.edges().iter().map(|e| map.edge_to_old(e)).collect();
        assert_eq!(back, vec![edge(&[3, 4], 1)]);
        assert_eq!(l.n(), 3);
    }

    #[test]
    fn link_errors() {
        let h = graph(5, &[(&[0, 1, 2], 0)]);
        assert!(matches!(h.link(0, &[1]), Err(HypergraphError::LinkVertexNotForbidden(0))));
        assert!(h.link(0, &[0, 7]).is_err());
        let one = ColoredHypergraph::new(3, 1, vec![edge(&[0], 0)]).unwrap();
        assert!(matches!(one.link(0, &[0]), Err(HypergraphError::LinkUndefined(1))));
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&k4_one_factorization()).is_empty());

        let h = ColoredHypergraph::new_unchecked(3, 3, vec![edge(&[0, 0, 1], 0)]);
        let report = validate(&h);
        assert!(matches!(report.violations[..], [Violation::Arity { edge: 0, .. }]));

        let h = ColoredHypergraph::new_unchecked(3, 2, vec![edge(&[0, 1], 0), edge(&[0, 2], 0)]);
        let report = validate(&h);
        assert_eq!(
            report.violations,
            vec![Violation::ImproperColoring { vertex: 0, color: Color(0), edges: (0, 1) }]
        );
        assert!(report.is_structurally_valid());
    }

    #[test]
    fn validate_reports_range_and_duplicates() {
        let h = ColoredHypergraph::new_unchecked(
            3,
            2,
            vec![edge(&[0, 1], 0), edge(&[0, 1], 0), edge(&[1, 5], 2)],
        );
        let report = validate(&h);
        assert!(report.violations.contains(&Violation::DuplicateEdge { edge: 1, first: 0 }));
        assert!(report
            .violations
            .contains(&Violation::VertexOutOfRange { edge: 2, vertex: 5, n: 3 }));
        assert!(ColoredHypergraph::new(3, 2, h.edges().to_vec()).is_err());
    }

    #[test]
    fn parallel_edges_are_rejected() {
        let es = vec![edge(&[0, 1], 0), edge(&[0, 1], 1)];
        let h = ColoredHypergraph::new_unchecked(3, 2, es.clone());
        assert_eq!(validate(&h).violations, vec![Violation::ParallelEdge { edge: 1, first: 0 }]);
        // The colors differ at both endpoints, so this alone is not a coloring conflict.
        assert!(h.is_properly_colored());
        assert!(ColoredHypergraph::new(3, 2, es).is_err());
    }

    #[test]
    fn family_requires_shared_universe() {
        let a = ColoredHypergraph::empty(4, 2);
        let b = ColoredHypergraph::empty(5, 2);
        assert!(HypergraphFamily::new(vec![a.clone(), b]).is_err());
        assert!(HypergraphFamily::new(vec![]).is_err());
        assert_eq!(HypergraphFamily::repeated(&a, 3).unwrap().size(), 3);
    }

    #[test]
    fn vertex_map_composition() {
        let outer = VertexMap::removing(6, &[1]);
        let inner = VertexMap::removing(5, &[0, 3]);
        let both = outer.compose(&inner);
        assert_eq!(both.new_len(), 3);
        assert_eq!((0..3).map(|v| both.to_old(v)).collect::<Vec<_>>(), vec![2, 3, 5]);
        assert_eq!(both.to_new(4), None);
        assert_eq!(both.to_new(5), Some(2));
    }
}
