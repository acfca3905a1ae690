//! Reproducible batch experiments.
//!
//! [`sweep`] draws random properly colored families over a grid of
//! `(n, k, s)` points and runs the solver, the proof engine or both on each.
//! [`tightness_check`] and [`counterexample_check`] replay the two fixed
//! configurations that bound the threshold from below.
//!
//! Trial `t` of grid point `g` uses the seed `trial_seed(base, g, t)`;
//! member `i` of that trial is then generated from `member_seed(seed, i)`.
//! Any single record can be regenerated from its `seed` column alone.

mod config;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::binomial::{binomial, threshold};
use crate::constructions::{self, mix64, ColoringMode};
use crate::error::InputError;
use crate::hypergraph::HypergraphFamily;
use crate::matching::{check_rainbow_matching, RainbowMatching};
use crate::proof::{theorem1_construct, ProofError};
use crate::solver::{self, SolveError};

pub use config::{EdgeCount, Engine, EngineChoice, SweepConfig};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("report output: {0}")]
    Output(String),
}

/// Seed of trial `trial` at grid index `grid`.
pub fn trial_seed(base: u64, grid: usize, trial: usize) -> u64 {
    mix64(mix64(base ^ mix64(grid as u64)) ^ trial as u64)
}

/// One engine run on one generated family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub trial: usize,
    pub seed: u64,
    pub coloring_mode: ColoringMode,
    pub engine: Engine,
    /// Edges per member.
    pub edges: usize,
    pub threshold: u128,
    pub found: bool,
    /// The witness passed the independent checker. Never true without `found`.
    pub valid: bool,
    /// At or below the threshold, or outside `n >= 3k²s`: not covered by
    /// the existence guarantee.
    pub exploratory: bool,
    pub witness: Option<RainbowMatching>,
    /// Engine error or checker complaint, if any.
    pub diagnostic: Option<String>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub records: usize,
    pub found: usize,
    pub valid: usize,
    pub exploratory: usize,
    /// Non-exploratory records without a valid witness.
    pub misses: usize,
    pub diagnostics: usize,
    /// Non-exploratory trials where the solver and the proof engine
    /// disagree on existence.
    pub disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub records: Vec<TrialRecord>,
    pub summary: SweepSummary,
}

pub const CSV_HEADER: &str = "n,k,s,seed,engine,edges,found,valid,elapsed_ms";

impl SweepReport {
    pub fn to_csv(&self) -> Result<String, HarnessError> {
        let out = |e: csv::Error| HarnessError::Output(e.to_string());
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER.split(',')).map_err(out)?;
        for r in &self.records {
            w.write_record([
                r.n.to_string(),
                r.k.to_string(),
                r.s.to_string(),
                r.seed.to_string(),
                r.engine.to_string(),
                r.edges.to_string(),
                r.found.to_string(),
                r.valid.to_string(),
                format!("{:.3}", r.elapsed_ms),
            ])
            .map_err(out)?;
        }
        let bytes = w.into_inner().map_err(|e| HarnessError::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| HarnessError::Output(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with every `elapsed_ms` set to zero, the form in which
    /// reruns are byte-identical.
    pub fn without_timings(&self) -> SweepReport {
        let mut r = self.clone();
        for rec in &mut r.records {
            rec.elapsed_ms = 0.0;
        }
        r
    }
}

fn in_guaranteed_range(n: usize, k: usize, s: usize) -> bool {
    n >= 3 * k * k * s
}

struct Trial {
    grid: usize,
    trial: usize,
    n: usize,
    k: usize,
    s: usize,
    edges: usize,
}

fn run_engine(engine: Engine, family: &HypergraphFamily) -> (Option<RainbowMatching>, Option<String>) {
    match engine {
        Engine::Solver => match solver::find_rainbow_matching(family) {
            Ok(out) => (out.matching, None),
            Err(e) => (None, Some(e.to_string())),
        },
        Engine::ProofEngine => match theorem1_construct(family) {
            Ok((m, _)) => (Some(m), None),
            Err(f) => {
                let note = match &f.error {
                    ProofError::Precondition { depth: 0, .. } => format!("hypotheses not met: {}", f.error),
                    _ => f.error.to_string(),
                };
                (None, Some(note))
            }
        },
    }
}

fn run_trial(config: &SweepConfig, t: &Trial) -> Result<Vec<TrialRecord>, InputError> {
    let seed = trial_seed(config.seed, t.grid, t.trial);
    let thr = threshold(t.n as u64, t.k as u64, t.s as u64)?;
    let family = constructions::random_family(t.n, t.k, t.s, t.edges, seed, config.coloring_mode)?;
    let exploratory = t.edges as u128 <= thr || !in_guaranteed_range(t.n, t.k, t.s);
    let mut records = Vec::new();
    for &engine in config.engine.engines() {
        let start = Instant::now();
        let (witness, mut diagnostic) = run_engine(engine, &family);
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        let valid = match &witness {
            Some(m) => match check_rainbow_matching(&family, m) {
                Ok(()) => true,
                Err(v) => {
                    diagnostic = Some(format!("witness rejected: {v}"));
                    false
                }
            },
            None => false,
        };
        records.push(TrialRecord {
            n: t.n,
            k: t.k,
            s: t.s,
            trial: t.trial,
            seed,
            coloring_mode: config.coloring_mode,
            engine,
            edges: t.edges,
            threshold: thr,
            found: witness.is_some(),
            valid,
            exploratory,
            witness,
            diagnostic,
            elapsed_ms,
        });
    }
    Ok(records)
}

fn summarize(config: &SweepConfig, records: &[TrialRecord]) -> SweepSummary {
    let mut s = SweepSummary {
        records: records.len(),
        ..Default::default()
    };
    for r in records {
        s.found += r.found as usize;
        s.valid += r.valid as usize;
        s.exploratory += r.exploratory as usize;
        s.misses += (!r.exploratory && !r.valid) as usize;
        s.diagnostics += r.diagnostic.is_some() as usize;
    }
    if config.engine == EngineChoice::Both {
        s.disagreements = records
            .chunks(2)
            .filter(|pair| !pair[0].exploratory && pair[0].found != pair[1].found)
            .count();
    }
    s
}

/// Runs every trial of the sweep. Trials run in parallel; records come back
/// in `(grid, trial, engine)` order.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport, HarnessError> {
    config.validate()?;
    let mut trials = Vec::new();
    for (g, &(n, k, s)) in config.grid.iter().enumerate() {
        let edges = config.edges.resolve(n, k, s)?;
        for trial in 0..config.trials {
            trials.push(Trial { grid: g, trial, n, k, s, edges });
        }
    }
    let per_trial = trials
        .par_iter()
        .map(|t| run_trial(config, t))
        .collect::<Result<Vec<_>, _>>()?;
    let records: Vec<TrialRecord> = per_trial.into_iter().flatten().collect();
    Ok(SweepReport {
        config: config.clone(),
        summary: summarize(config, &records),
        records,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightnessReport {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    /// Edge count of the (identical) members.
    pub edges: usize,
    pub threshold: u128,
    pub found: bool,
    pub nodes_explored: u64,
}

impl TightnessReport {
    pub fn edges_match_threshold(&self) -> bool {
        self.edges as u128 == self.threshold
    }

    pub fn holds(&self) -> bool {
        self.edges_match_threshold() && !self.found
    }
}

/// `s` copies of the cover construction: exactly `threshold(n, k, s)` edges
/// each and no s-rainbow matching.
pub fn tightness_check(n: usize, k: usize, s: usize) -> Result<TightnessReport, HarnessError> {
    if k == 0 || s == 0 || n < k * s {
        return Err(InputError(format!("tightness check needs k, s >= 1 and n >= ks; got ({n}, {k}, {s})")).into());
    }
    let member = constructions::cover_construction(n, k, s)?;
    let family = HypergraphFamily::repeated(&member, s).map_err(InputError::from)?;
    let out = solver::find_rainbow_matching(&family)?;
    Ok(TightnessReport {
        n,
        k,
        s,
        edges: member.edge_count(),
        threshold: threshold(n as u64, k as u64, s as u64).map_err(InputError::from)?,
        found: out.found,
        nodes_explored: out.nodes_explored,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub k: usize,
    /// `e(H_1)` and `e(H_2)`.
    pub edges: [usize; 2],
    /// `C(2k, k)`.
    pub full: u128,
    /// `C(2k - 1, k)`.
    pub threshold: u128,
    pub members_rainbow: bool,
    pub found: bool,
    pub tuples_examined: u64,
}

impl CounterexampleReport {
    pub fn holds(&self) -> bool {
        self.edges.iter().all(|&e| e as u128 == self.full)
            && self.full > self.threshold
            && self.members_rainbow
            && !self.found
    }
}

pub fn counterexample_check(k: usize) -> Result<CounterexampleReport, HarnessError> {
    counterexample_check_with_cap(k, solver::DEFAULT_BRUTE_FORCE_CAP)
}

/// The complement pair on `2k` vertices, searched exhaustively.
pub fn counterexample_check_with_cap(k: usize, cap: u128) -> Result<CounterexampleReport, HarnessError> {
    let family = constructions::complement_pair(k)?;
    let out = solver::brute_force_matching(&family, cap)?;
    let two_k = 2 * k as u64;
    Ok(CounterexampleReport {
        k,
        edges: [family.member(0).edge_count(), family.member(1).edge_count()],
        full: binomial(two_k, k as u64).map_err(InputError::from)?,
        threshold: binomial(two_k - 1, k as u64).map_err(InputError::from)?,
        members_rainbow: family.members().iter().all(|m| m.is_rainbow()),
        found: out.found,
        tuples_examined: out.nodes_explored,
    })
}
