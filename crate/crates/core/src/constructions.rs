//! Generators: the two extremal configurations, the complement-pair
//! counterexample, seeded random instances and first-fit proper colorings.
//!
//! Subsets are enumerated in colexicographic order. Random instances use
//! `ChaCha8Rng` seeded with `seed_from_u64`, draw `m` distinct ranks in
//! `0..C(n, k)` with `rand::seq::index::sample`, and unrank each one.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::binomial::binomial;
use crate::error::InputError;
use crate::hypergraph::{Color, ColoredEdge, ColoredHypergraph, HypergraphFamily, Vertex};

/// How generated edges are colored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringMode {
    /// Color `i` for the `i`-th generated edge.
    Rainbow,
    /// First-fit over the generated edge order.
    #[serde(alias = "greedy-proper")]
    GreedyProper,
}

impl ColoringMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ColoringMode::Rainbow => "rainbow",
            ColoringMode::GreedyProper => "greedy_proper",
        }
    }
}

impl std::str::FromStr for ColoringMode {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rainbow" => Ok(ColoringMode::Rainbow),
            "greedy_proper" | "greedy-proper" => Ok(ColoringMode::GreedyProper),
            other => Err(InputError(format!("unknown coloring mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomInstanceSpec {
    pub n: usize,
    pub k: usize,
    /// Target edge count.
    pub m: usize,
    pub seed: u64,
    pub coloring_mode: ColoringMode,
}

fn binom(n: usize, k: usize) -> Result<u128, InputError> {
    Ok(binomial(n as u64, k as u64)?)
}

/// Colex rank of a sorted subset: `sum C(v_i, i + 1)`.
pub fn colex_rank(subset: &[Vertex]) -> u128 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &v)| binomial(v as u64, i as u64 + 1).expect("rank fits"))
        .sum()
}

/// The `k`-subset with colex rank `rank`.
pub fn colex_unrank(k: usize, mut rank: u128) -> Vec<Vertex> {
    let mut out = vec![0; k];
    for i in (1..=k).rev() {
        // Largest c with C(c, i) <= rank; c >= i - 1 since C(i - 1, i) = 0.
        let mut c = i - 1;
        while binomial(c as u64 + 1, i as u64).expect("rank fits") <= rank {
            c += 1;
        }
        rank -= binomial(c as u64, i as u64).expect("rank fits");
        out[i - 1] = c;
    }
    out
}

/// All `k`-subsets of `0..n` in colex order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<Vertex>> {
    let mut next: Option<Vec<Vertex>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let cur = next.take()?;
        // Colex successor: bump the first position that can move up.
        let mut succ = cur.clone();
        let mut i = 0;
        loop {
            if i == k {
                break;
            }
            let limit = if i + 1 < k { succ[i + 1] } else { n };
            if succ[i] + 1 < limit {
                succ[i] += 1;
                for (j, slot) in succ.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                next = Some(succ);
                break;
            }
            i += 1;
        }
        Some(cur)
    })
}

/// Every `k`-subset of `0..n` meeting `{0, ..., s - 2}`, each with a fresh color.
///
/// Has exactly `C(n, k) - C(n - s + 1, k)` edges and no `s` pairwise disjoint ones.
pub fn cover_construction(n: usize, k: usize, s: usize) -> Result<ColoredHypergraph, InputError> {
    if k == 0 || k > n || s == 0 || s - 1 > n {
        return Err(InputError(format!(
            "cover construction needs 1 <= k <= n, s >= 1, s - 1 <= n; got n={n}, k={k}, s={s}"
        )));
    }
    let edges = k_subsets(n, k)
        .filter(|e| e[0] < s - 1)
        .enumerate()
        .map(|(i, e)| ColoredEdge::new(e, Color(i as u64)))
        .collect();
    Ok(ColoredHypergraph::new_unchecked(n, k, edges))
}

/// Every `k`-subset of `{0, ..., ks - 2}`, each with a fresh color, on `n` vertices.
pub fn clique_construction(n: usize, k: usize, s: usize) -> Result<ColoredHypergraph, InputError> {
    let span = (k * s).checked_sub(1).filter(|&w| k >= 1 && w <= n && k <= w);
    let Some(span) = span else {
        return Err(InputError(format!(
            "clique construction needs k <= ks - 1 <= n; got n={n}, k={k}, s={s}"
        )));
    };
    let edges = k_subsets(span, k)
        .enumerate()
        .map(|(i, e)| ColoredEdge::new(e, Color(i as u64)))
        .collect();
    Ok(ColoredHypergraph::new_unchecked(n, k, edges))
}

/// Two rainbow copies of the complete `k`-uniform hypergraph on `2k`
/// vertices, the second coloring each edge with the first one's color of
/// its complement. Disjoint pairs then always collide in color.
pub fn complement_pair(k: usize) -> Result<HypergraphFamily, InputError> {
    if k < 2 {
        return Err(InputError(format!("complement pair needs k >= 2, got {k}")));
    }
    let n = 2 * k;
    let subsets: Vec<Vec<Vertex>> = k_subsets(n, k).collect();
    let first: Vec<ColoredEdge> = subsets
        .iter()
        .enumerate()
        .map(|(i, e)| ColoredEdge::new(e.clone(), Color(i as u64)))
        .collect();
    let second: Vec<ColoredEdge> = subsets
        .iter()
        .map(|e| {
            let complement: Vec<Vertex> = (0..n).filter(|v| !e.contains(v)).collect();
            let c = colex_rank(&complement) as u64;
            ColoredEdge::new(e.clone(), Color(c))
        })
        .collect();
    Ok(HypergraphFamily::new(vec![
        ColoredHypergraph::new_unchecked(n, k, first),
        ColoredHypergraph::new_unchecked(n, k, second),
    ])?)
}

/// First-fit coloring in the given order: each edge takes the smallest color
/// unused by earlier edges sharing a vertex with it.
///
/// Edges must be valid `k`-subsets of `0..n`.
pub fn greedy_proper_coloring(n: usize, k: usize, edges: &[Vec<Vertex>]) -> ColoredHypergraph {
    let mut used: Vec<Vec<u64>> = vec![Vec::new(); n];
    let mut out = Vec::with_capacity(edges.len());
    let mut blocked: Vec<u64> = Vec::new();
    for e in edges {
        debug_assert_eq!(e.len(), k);
        blocked.clear();
        for &v in e {
            blocked.extend_from_slice(&used[v]);
        }
        blocked.sort_unstable();
        blocked.dedup();
        let color = blocked
            .iter()
            .enumerate()
            .find(|&(i, &c)| c != i as u64)
            .map_or(blocked.len() as u64, |(i, _)| i as u64);
        for &v in e {
            used[v].push(color);
        }
        out.push(ColoredEdge::new(e.clone(), Color(color)));
    }
    ColoredHypergraph::new_unchecked(n, k, out)
}

/// `m` distinct uniformly sampled `k`-subsets, colored by `coloring_mode`.
/// The output is a pure function of the fields, seed included.
pub fn random_instance(spec: &RandomInstanceSpec) -> Result<ColoredHypergraph, InputError> {
    let RandomInstanceSpec { n, k, m, seed, coloring_mode } = *spec;
    if k == 0 || k > n {
        return Err(InputError(format!("random instance needs 1 <= k <= n; got n={n}, k={k}")));
    }
    let total = binom(n, k)?;
    if m as u128 > total {
        return Err(InputError(format!("m = {m} exceeds C({n}, {k}) = {total}")));
    }
    let total = usize::try_from(total)
        .map_err(|_| InputError(format!("C({n}, {k}) is too large to sample from")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let subsets: Vec<Vec<Vertex>> = rand::seq::index::sample(&mut rng, total, m)
        .into_iter()
        .map(|r| colex_unrank(k, r as u128))
        .collect();
    Ok(color_subsets(n, k, subsets, coloring_mode))
}

pub(crate) fn color_subsets(
    n: usize,
    k: usize,
    subsets: Vec<Vec<Vertex>>,
    mode: ColoringMode,
) -> ColoredHypergraph {
    match mode {
        ColoringMode::Rainbow => ColoredHypergraph::new_unchecked(
            n,
            k,
            subsets
                .into_iter()
                .enumerate()
                .map(|(i, e)| ColoredEdge::new(e, Color(i as u64)))
                .collect(),
        ),
        ColoringMode::GreedyProper => greedy_proper_coloring(n, k, &subsets),
    }
}

/// A family of `s` independent random members, member `i` seeded with
/// `member_seed(seed, i)`.
pub fn random_family(
    n: usize,
    k: usize,
    s: usize,
    m: usize,
    seed: u64,
    coloring_mode: ColoringMode,
) -> Result<HypergraphFamily, InputError> {
    let members = (0..s)
        .map(|i| {
            random_instance(&RandomInstanceSpec {
                n,
                k,
                m,
                seed: member_seed(seed, i as u64),
                coloring_mode,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HypergraphFamily::new(members)?)
}

/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn member_seed(seed: u64, member: u64) -> u64 {
    mix64(seed ^ mix64(member.wrapping_add(0x6D65_6D62)))
}
