//! The recursive case analysis.
//!
//! Every call works on a slice of members sharing `n` and `k`, with
//! `s = members.len()`, and returns one edge per member in that member's
//! own vertex ids. Callers that recurse on relabeled members map the
//! returned edges back through the [`VertexMap`] they built.

use crate::binomial::threshold;
use crate::hypergraph::{Color, ColoredEdge, ColoredHypergraph, Vertex, VertexMap};

use super::thresholds::thresholds_for;
use super::trace::{CaseLabel, TraceEntry};
use super::{ExtensionPolicy, ProofError, ProofOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Procedure {
    /// Rainbow graphs, `n >= 5s`.
    Lemma1,
    /// Rainbow k-uniform hypergraphs, `n >= 3k²s`.
    Lemma2,
    /// Properly colored k-uniform hypergraphs, `n >= 3k²s`.
    Theorem,
}

impl Procedure {
    fn name(self) -> &'static str {
        match self {
            Procedure::Lemma1 => "lemma1",
            Procedure::Lemma2 => "lemma2",
            Procedure::Theorem => "theorem1",
        }
    }
}

type Edges = Vec<ColoredEdge>;

pub(crate) struct Engine {
    pub(crate) entries: Vec<TraceEntry>,
    options: ProofOptions,
}

fn dims(members: &[ColoredHypergraph]) -> (usize, usize, usize) {
    (members[0].n(), members[0].k(), members.len())
}

fn without(members: &[ColoredHypergraph], i: usize) -> Vec<ColoredHypergraph> {
    members
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, m)| m.clone())
        .collect()
}

/// Puts `edge` back at position `i` among the other members' edges.
fn insert_at(mut rest: Edges, i: usize, edge: ColoredEdge) -> Edges {
    rest.insert(i, edge);
    rest
}

/// First candidate vertex-disjoint from and color-distinct to `partial`.
fn extension<'a>(
    candidates: impl IntoIterator<Item = &'a ColoredEdge>,
    partial: &[ColoredEdge],
) -> Option<ColoredEdge> {
    candidates
        .into_iter()
        .find(|e| {
            partial
                .iter()
                .all(|p| p.color != e.color && e.is_vertex_disjoint(p))
        })
        .cloned()
}

fn count_u128(x: usize) -> u128 {
    x as u128
}

impl Engine {
    pub(crate) fn new(options: ProofOptions) -> Self {
        Engine { entries: Vec::new(), options }
    }

    fn record(&mut self, depth: usize, case: CaseLabel, members: &[ColoredHypergraph], detail: String) {
        let (n, k, s) = dims(members);
        self.entries.push(TraceEntry { depth, case, n, k, s, detail });
    }

    fn contradiction(depth: usize, reason: String) -> ProofError {
        ProofError::InternalContradiction { depth, reason }
    }

    /// Checks the hypotheses of `proc` for this call.
    fn check(&self, proc: Procedure, members: &[ColoredHypergraph], depth: usize) -> Result<(), ProofError> {
        let fail = |reason: String| ProofError::Precondition {
            depth,
            procedure: proc.name(),
            reason,
        };
        if members.is_empty() {
            return Err(fail("the family is empty".into()));
        }
        let (n, k, s) = dims(members);
        if members.iter().any(|m| m.n() != n || m.k() != k) {
            return Err(fail("members do not share n and k".into()));
        }
        if k < 2 {
            return Err(fail(format!("k = {k}, need k >= 2")));
        }
        if proc == Procedure::Lemma1 && k != 2 {
            return Err(fail(format!("lemma 1 is for graphs, got k = {k}")));
        }
        let min_n = match proc {
            Procedure::Lemma1 => 5 * s,
            Procedure::Lemma2 | Procedure::Theorem => 3 * k * k * s,
        };
        if n < min_n {
            return Err(fail(format!("n = {n} < {min_n}")));
        }
        let bound = threshold(n as u64, k as u64, s as u64)
            .map_err(|e| fail(e.to_string()))?;
        for (i, m) in members.iter().enumerate() {
            if count_u128(m.edge_count()) <= bound {
                return Err(fail(format!(
                    "member {i} has {} edges, need more than threshold({n}, {k}, {s}) = {bound}",
                    m.edge_count()
                )));
            }
            let colored_ok = match proc {
                Procedure::Lemma1 | Procedure::Lemma2 => m.is_rainbow(),
                Procedure::Theorem => m.is_properly_colored(),
            };
            if !colored_ok {
                let want = if proc == Procedure::Theorem { "properly colored" } else { "rainbow" };
                return Err(fail(format!("member {i} is not {want}")));
            }
        }
        Ok(())
    }

    pub(crate) fn run(&mut self, proc: Procedure, members: &[ColoredHypergraph], depth: usize) -> Result<Edges, ProofError> {
        self.check(proc, members, depth)?;
        let (_, k, s) = dims(members);
        if s == 1 {
            let e = members[0].edges()[0].clone();
            self.record(depth, CaseLabel::Base, members, format!("edge={e}"));
            return Ok(vec![e]);
        }
        match (proc, k) {
            (Procedure::Lemma1, _) => self.lemma1_steps(members, depth),
            (Procedure::Lemma2, 2) => {
                // Pure dispatch: same level, marked in the trace.
                self.record(depth, CaseLabel::Lemma1Call, members, String::new());
                self.run(Procedure::Lemma1, members, depth)
            }
            (Procedure::Theorem, 2) => self.graph_steps(members, depth),
            (Procedure::Lemma2 | Procedure::Theorem, _) => self.uniform_steps(proc, members, depth),
        }
    }

    /// Branch A, shared by every procedure: some member `i` has a vertex `v`
    /// of degree above `bound`. Solve the others without `v`, then extend by
    /// an edge of `H_i` at `v`.
    fn high_degree(
        &mut self,
        proc: Procedure,
        members: &[ColoredHypergraph],
        depth: usize,
        bound: u128,
    ) -> Result<Option<Edges>, ProofError> {
        let found = members.iter().enumerate().find_map(|(i, m)| {
            m.degrees()
                .iter()
                .position(|&d| count_u128(d) > bound)
                .map(|v| (i, v, m.degrees()[v]))
        });
        let Some((i, v, degree)) = found else {
            return Ok(None);
        };
        self.record(
            depth,
            CaseLabel::HighDegreeVertex,
            members,
            format!("member={i} vertex={v} degree={degree} bound={bound}"),
        );
        let map = VertexMap::removing(members[i].n(), &[v]);
        let reduced: Vec<ColoredHypergraph> = without(members, i)
            .iter()
            .map(|m| m.delete_vertices(&[v]).0)
            .collect();
        let partial: Edges = self
            .run(proc, &reduced, depth + 1)?
            .iter()
            .map(|e| map.edge_to_old(e))
            .collect();
        let h = &members[i];
        let at_v = h.incident(v).expect("vertex in range").iter().map(|&j| &h.edges()[j]);
        match extension(at_v, &partial) {
            Some(e) => {
                self.record(depth, CaseLabel::ExtendScan, members, format!("member={i} edge={e} ok"));
                Ok(Some(insert_at(partial, i, e)))
            }
            None => Err(Self::contradiction(
                depth,
                format!("no edge at vertex {v} of member {i} (degree {degree} > {bound}) extends the partial matching"),
            )),
        }
    }

    /// Checks `e(H) > threshold(n, k, s)` for members built inside a branch;
    /// failing it would hand the recursive call a false hypothesis.
    fn assert_transfer(
        &self,
        proc: Procedure,
        built: &[ColoredHypergraph],
        depth: usize,
        step: &str,
    ) -> Result<(), ProofError> {
        let (n, k, s) = dims(built);
        let bound = threshold(n as u64, k as u64, s as u64).map_err(|e| ProofError::Precondition {
            depth: depth + 1,
            procedure: proc.name(),
            reason: e.to_string(),
        })?;
        for (j, m) in built.iter().enumerate() {
            if count_u128(m.edge_count()) <= bound {
                return Err(ProofError::Precondition {
                    depth: depth + 1,
                    procedure: proc.name(),
                    reason: format!(
                        "edge-count transfer after {step}: member {j} kept {} edges, need more than threshold({n}, {k}, {s}) = {bound}",
                        m.edge_count()
                    ),
                });
            }
        }
        Ok(())
    }

    /// Rainbow graphs: branch A at `3(s-1)`, else fix the first edge `uv` of
    /// the first member, remove `u`, `v` and the single edge colored `c(uv)`
    /// from every other member, recurse at `(n-2, s-1)`.
    fn lemma1_steps(&mut self, members: &[ColoredHypergraph], depth: usize) -> Result<Edges, ProofError> {
        let (n, k, s) = dims(members);
        let t = thresholds_for(n, k, s).map_err(|e| Self::contradiction(depth, e.to_string()))?;
        if let Some(edges) = self.high_degree(Procedure::Lemma1, members, depth, t.graph_deg)? {
            return Ok(edges);
        }
        let uv = members[0].edges()[0].clone();
        self.record(depth, CaseLabel::ArbitraryEdge, members, format!("member=0 edge={uv}"));
        let map = VertexMap::removing(n, &uv.vertices);
        let mut reduced = Vec::with_capacity(s - 1);
        for (j, m) in members.iter().enumerate().skip(1) {
            let same_color: Vec<usize> = (0..m.edge_count()).filter(|&x| m.edges()[x].color == uv.color).collect();
            if same_color.len() > 1 {
                return Err(Self::contradiction(
                    depth,
                    format!("member {j} is rainbow but has {} edges colored {}", same_color.len(), uv.color),
                ));
            }
            let kept: Edges = m
                .edges()
                .iter()
                .enumerate()
                .filter(|(x, _)| !same_color.contains(x))
                .map(|(_, e)| e.clone())
                .collect();
            reduced.push(ColoredHypergraph::new_unchecked(n, k, kept).delete_vertices(&uv.vertices).0);
        }
        self.assert_transfer(Procedure::Lemma1, &reduced, depth, "arbitrary-edge deletion")?;
        let rest: Edges = self
            .run(Procedure::Lemma1, &reduced, depth + 1)?
            .iter()
            .map(|e| map.edge_to_old(e))
            .collect();
        Ok(insert_at(rest, 0, uv))
    }

    /// Properly colored graphs: branch A at `3(s-1)`; branch B for a color
    /// class larger than `2(s-1)`; otherwise branch C deletes `u`, `v` and
    /// every edge colored `c(uv)` from the other members.
    fn graph_steps(&mut self, members: &[ColoredHypergraph], depth: usize) -> Result<Edges, ProofError> {
        let (n, k, s) = dims(members);
        let t = thresholds_for(n, k, s).map_err(|e| Self::contradiction(depth, e.to_string()))?;
        if let Some(edges) = self.high_degree(Procedure::Theorem, members, depth, t.graph_deg)? {
            return Ok(edges);
        }

        let classes: Vec<(usize, Color, usize)> = members
            .iter()
            .enumerate()
            .flat_map(|(i, m)| {
                m.color_class_sizes()
                    .into_iter()
                    .filter(|&(_, size)| count_u128(size) > t.graph_color)
                    .map(move |(c, size)| (i, c, size))
            })
            .collect();
        for (i, c, size) in classes {
            self.record(
                depth,
                CaseLabel::ColorClass,
                members,
                format!("member={i} color={c} size={size} bound={}", t.graph_color),
            );
            let reduced: Vec<ColoredHypergraph> = without(members, i).iter().map(|m| m.delete_color(c)).collect();
            let partial = self.run(Procedure::Theorem, &reduced, depth + 1)?;
            let class = members[i].edges().iter().filter(|e| e.color == c);
            match extension(class, &partial) {
                Some(e) => {
                    self.record(depth, CaseLabel::ExtendScan, members, format!("member={i} edge={e} ok"));
                    return Ok(insert_at(partial, i, e));
                }
                None => {
                    self.record(depth, CaseLabel::ExtendScan, members, format!("member={i} color={c} none"));
                }
            }
        }

        let uv = members[0].edges()[0].clone();
        self.record(depth, CaseLabel::ArbitraryEdge, members, format!("member=0 edge={uv}"));
        let map = VertexMap::removing(n, &uv.vertices);
        let reduced: Vec<ColoredHypergraph> = members[1..]
            .iter()
            .map(|m| m.delete_color(uv.color).delete_vertices(&uv.vertices).0)
            .collect();
        self.assert_transfer(Procedure::Theorem, &reduced, depth, "arbitrary-edge deletion")?;
        let rest: Edges = self
            .run(Procedure::Theorem, &reduced, depth + 1)?
            .iter()
            .map(|e| map.edge_to_old(e))
            .collect();
        Ok(insert_at(rest, 0, uv))
    }

    /// `k >= 3` (and rainbow `k >= 3` for lemma 2): branch A at `d_high`,
    /// branch B extension attempts, then branch C link descent.
    fn uniform_steps(&mut self, proc: Procedure, members: &[ColoredHypergraph], depth: usize) -> Result<Edges, ProofError> {
        let (n, k, s) = dims(members);
        let t = thresholds_for(n, k, s).map_err(|e| Self::contradiction(depth, e.to_string()))?;
        if let Some(edges) = self.high_degree(proc, members, depth, t.d_high)? {
            return Ok(edges);
        }

        for i in 0..s {
            let degree_condition = || {
                let mut d = members[i].degrees();
                d.sort_unstable_by(|a, b| b.cmp(a));
                count_u128(d.get(s - 1).copied().unwrap_or(0)) <= t.d_low
            };
            let guaranteed = match self.options.extension {
                ExtensionPolicy::Attempt => false,
                ExtensionPolicy::DegreeCondition => {
                    if !degree_condition() {
                        continue;
                    }
                    true
                }
            };
            self.record(depth, CaseLabel::ExtendScan, members, format!("member={i} recurse"));
            let partial = self.run(proc, &without(members, i), depth + 1)?;
            match extension(members[i].edges(), &partial) {
                Some(e) => {
                    self.record(depth, CaseLabel::ExtendScan, members, format!("member={i} edge={e} ok"));
                    return Ok(insert_at(partial, i, e));
                }
                None if guaranteed => {
                    return Err(Self::contradiction(
                        depth,
                        format!("member {i} has s-th largest degree <= {} but no extending edge", t.d_low),
                    ))
                }
                None => {
                    self.record(depth, CaseLabel::ExtendScan, members, format!("member={i} none"));
                }
            }
        }

        // Greedy distinct vertices v_i with degree above d_low in H_i.
        let mut chosen: Vec<Vertex> = Vec::with_capacity(s);
        for (i, m) in members.iter().enumerate() {
            let degrees = m.degrees();
            let v = (0..n).find(|v| !chosen.contains(v) && count_u128(degrees[*v]) > t.d_low);
            match v {
                Some(v) => chosen.push(v),
                None => {
                    return Err(Self::contradiction(
                        depth,
                        format!("member {i} has no free vertex of degree above {}", t.d_low),
                    ))
                }
            }
        }
        let map = VertexMap::removing(n, &chosen);
        let mut links = Vec::with_capacity(s);
        for (i, m) in members.iter().enumerate() {
            let (link, _) = m.link(chosen[i], &chosen).expect("chosen vertices are in range");
            if !link.is_rainbow() {
                return Err(Self::contradiction(
                    depth,
                    format!("link of member {i} at vertex {} is not rainbow", chosen[i]),
                ));
            }
            links.push(link);
        }
        let sizes: Vec<String> = links.iter().map(|l| l.edge_count().to_string()).collect();
        self.record(
            depth,
            CaseLabel::LinkDescent,
            members,
            format!("vertices={chosen:?} link_edges=[{}]", sizes.join(",")),
        );
        self.assert_transfer(Procedure::Lemma2, &links, depth, "link descent")?;
        if proc == Procedure::Theorem {
            self.record(depth + 1, CaseLabel::Lemma2Call, &links, String::new());
        }
        let linked = self.run(Procedure::Lemma2, &links, depth + 1)?;
        Ok(linked
            .iter()
            .zip(&chosen)
            .map(|(e, &v)| {
                let mut vs: Vec<Vertex> = e.vertices.iter().map(|&u| map.to_old(u)).collect();
                vs.push(v);
                ColoredEdge::new(vs, e.color)
            })
            .collect())
    }
}
