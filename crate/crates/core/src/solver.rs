//! Exact search for s-rainbow matchings, ν and ν_r.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::hypergraph::{Color, ColoredEdge, ColoredHypergraph, HypergraphFamily};
use crate::matching::RainbowMatching;

/// Default cap on `∏ e(H_i)` for [`brute_force_matching`].
pub const DEFAULT_BRUTE_FORCE_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("member {member} is not properly colored: {detail}")]
    ImproperlyColored { member: usize, detail: String },
    #[error("brute force would enumerate {product} tuples, above the cap of {cap}")]
    TooLarge { product: u128, cap: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub found: bool,
    pub matching: Option<RainbowMatching>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Reject families with an improperly colored member.
    pub require_proper_coloring: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { require_proper_coloring: true }
    }
}

fn check_proper(family: &HypergraphFamily) -> Result<(), SolveError> {
    for (i, m) in family.members().iter().enumerate() {
        let report = crate::hypergraph::validate(m);
        if let Some(v) = report.violations.first() {
            return Err(SolveError::ImproperlyColored { member: i, detail: v.to_string() });
        }
    }
    Ok(())
}

/// Finds an s-rainbow matching, if one exists, by exhaustive backtracking.
pub fn find_rainbow_matching(family: &HypergraphFamily) -> Result<SolveOutcome, SolveError> {
    find_rainbow_matching_with(family, SolverOptions::default())
}

pub fn find_rainbow_matching_with(
    family: &HypergraphFamily,
    options: SolverOptions,
) -> Result<SolveOutcome, SolveError> {
    if options.require_proper_coloring {
        check_proper(family)?;
    }
    let start = Instant::now();
    let mut order: Vec<usize> = (0..family.size()).collect();
    order.sort_by_key(|&i| family.member(i).edge_count());
    let mut search = Backtrack {
        members: order.iter().map(|&i| family.member(i).edges()).collect(),
        used_vertex: vec![false; family.n()],
        used_colors: Vec::with_capacity(family.size()),
        chosen: Vec::with_capacity(family.size()),
        nodes: 0,
    };
    let found = search.run(0);
    let matching = found.then(|| {
        let mut picks: Vec<(usize, usize)> =
            order.iter().zip(&search.chosen).map(|(&m, &e)| (m, e)).collect();
        picks.sort_unstable();
        RainbowMatching { picks }
    });
    Ok(SolveOutcome {
        found,
        matching,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    })
}

struct Backtrack<'a> {
    /// Member edge lists in search order.
    members: Vec<&'a [ColoredEdge]>,
    used_vertex: Vec<bool>,
    used_colors: Vec<Color>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl Backtrack<'_> {
    fn fits(&self, e: &ColoredEdge) -> bool {
        !self.used_colors.contains(&e.color) && e.vertices.iter().all(|&v| !self.used_vertex[v])
    }

    fn set(&mut self, e: &ColoredEdge, on: bool) {
        for &v in &e.vertices {
            self.used_vertex[v] = on;
        }
        if on {
            self.used_colors.push(e.color);
        } else {
            self.used_colors.pop();
        }
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.members.len() {
            return true;
        }
        let edges = self.members[depth];
        for (idx, e) in edges.iter().enumerate() {
            if !self.fits(e) {
                continue;
            }
            self.nodes += 1;
            self.set(e, true);
            // Fail first: every later member still needs a compatible edge.
            let viable = self.members[depth + 1..]
                .iter()
                .all(|rest| rest.iter().any(|f| self.fits(f)));
            if viable {
                self.chosen.push(idx);
                if self.run(depth + 1) {
                    self.set(e, false);
                    return true;
                }
                self.chosen.pop();
            }
            self.set(e, false);
        }
        false
    }
}

/// Enumerates every tuple in `E(H_1) × … × E(H_s)`. Used as an oracle.
pub fn brute_force_matching(family: &HypergraphFamily, cap: u128) -> Result<SolveOutcome, SolveError> {
    let start = Instant::now();
    let sizes: Vec<usize> = family.members().iter().map(|m| m.edge_count()).collect();
    let product = sizes
        .iter()
        .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128))
        .unwrap_or(u128::MAX);
    if product > cap {
        return Err(SolveError::TooLarge { product, cap });
    }
    let s = sizes.len();
    let mut nodes = 0u64;
    if product == 0 {
        return Ok(SolveOutcome { found: false, matching: None, nodes_explored: 0, elapsed: start.elapsed() });
    }
    let mut idx = vec![0usize; s];
    loop {
        nodes += 1;
        let edges: Vec<&ColoredEdge> = (0..s).map(|i| &family.member(i).edges()[idx[i]]).collect();
        let ok = (0..s).all(|a| {
            (a + 1..s).all(|b| {
                edges[a].color != edges[b].color
                    && !edges[a].vertices.iter().any(|v| edges[b].vertices.contains(v))
            })
        });
        if ok {
            return Ok(SolveOutcome {
                found: true,
                matching: Some(RainbowMatching::from_edge_indices(&idx)),
                nodes_explored: nodes,
                elapsed: start.elapsed(),
            });
        }
        // Odometer step, last member fastest.
        let mut pos = s;
        loop {
            if pos == 0 {
                return Ok(SolveOutcome { found: false, matching: None, nodes_explored: nodes, elapsed: start.elapsed() });
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < sizes[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// ν(H): the largest number of pairwise vertex-disjoint edges.
pub fn matching_number(h: &ColoredHypergraph) -> usize {
    MaxMatching::new(h, false).solve()
}

/// ν_r(H): the largest number of pairwise vertex-disjoint, color-distinct edges.
pub fn rainbow_matching_number(h: &ColoredHypergraph) -> usize {
    MaxMatching::new(h, true).solve()
}

struct MaxMatching<'a> {
    edges: &'a [ColoredEdge],
    k: usize,
    colors: bool,
    used_vertex: Vec<bool>,
    used_colors: Vec<Color>,
    free: usize,
    best: usize,
    ceiling: usize,
}

impl<'a> MaxMatching<'a> {
    fn new(h: &'a ColoredHypergraph, colors: bool) -> Self {
        let mut ceiling = if h.k() == 0 { 0 } else { h.n() / h.k() };
        ceiling = ceiling.min(h.edge_count());
        if colors {
            ceiling = ceiling.min(h.colors().len());
        }
        MaxMatching {
            edges: h.edges(),
            k: h.k().max(1),
            colors,
            used_vertex: vec![false; h.n()],
            used_colors: Vec::new(),
            free: h.n(),
            best: 0,
            ceiling,
        }
    }

    fn solve(mut self) -> usize {
        self.dfs(0, 0);
        self.best
    }

    fn dfs(&mut self, i: usize, size: usize) {
        if size > self.best {
            self.best = size;
        }
        if self.best == self.ceiling || i == self.edges.len() {
            return;
        }
        let bound = size + (self.edges.len() - i).min(self.free / self.k);
        if bound <= self.best {
            return;
        }
        let e = &self.edges[i];
        let fits = e.vertices.iter().all(|&v| !self.used_vertex[v])
            && (!self.colors || !self.used_colors.contains(&e.color));
        if fits {
            for &v in &e.vertices {
                self.used_vertex[v] = true;
            }
            self.used_colors.push(e.color);
            self.free -= self.k;
            self.dfs(i + 1, size + 1);
            self.free += self.k;
            self.used_colors.pop();
            for &v in &e.vertices {
                self.used_vertex[v] = false;
            }
        }
        self.dfs(i + 1, size);
    }
}
