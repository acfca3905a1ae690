use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, threshold};
use crate::constructions::ColoringMode;
use crate::error::InputError;

/// Which procedures a sweep runs on each generated family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EngineChoice {
    Solver,
    #[serde(alias = "proof_engine")]
    ProofEngine,
    Both,
}

impl EngineChoice {
    pub fn engines(self) -> &'static [Engine] {
        match self {
            EngineChoice::Solver => &[Engine::Solver],
            EngineChoice::ProofEngine => &[Engine::ProofEngine],
            EngineChoice::Both => &[Engine::Solver, Engine::ProofEngine],
        }
    }
}

/// A single procedure, as recorded in a sweep row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Solver,
    ProofEngine,
}

impl Engine {
    pub fn as_str(self) -> &'static str {
        match self {
            Engine::Solver => "solver",
            Engine::ProofEngine => "proof-engine",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Edges per generated member: a fixed count, or an offset from
/// `threshold(n, k, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeCount {
    Exact(u64),
    Threshold(i64),
}

impl Default for EdgeCount {
    fn default() -> Self {
        EdgeCount::Threshold(1)
    }
}

impl EdgeCount {
    pub fn resolve(self, n: usize, k: usize, s: usize) -> Result<usize, InputError> {
        let m = match self {
            EdgeCount::Exact(m) => m as i128,
            EdgeCount::Threshold(d) => threshold(n as u64, k as u64, s as u64)? as i128 + d as i128,
        };
        let total = binomial(n as u64, k as u64)?;
        if m < 0 || m as u128 > total {
            return Err(InputError(format!(
                "edge count {m} for ({n}, {k}, {s}) is outside 0..=C({n}, {k}) = {total}"
            )));
        }
        usize::try_from(m).map_err(|_| InputError(format!("edge count {m} does not fit in memory")))
    }
}

impl FromStr for EdgeCount {
    type Err = InputError;

    /// Accepts `123`, `threshold`, `threshold+D` and `threshold-D`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || InputError(format!("edge count {text:?} is not `N`, `threshold` or `threshold±D`"));
        if let Some(rest) = t.strip_prefix("threshold") {
            if rest.is_empty() {
                return Ok(EdgeCount::Threshold(0));
            }
            let d: i64 = rest.strip_prefix('+').unwrap_or(rest).parse().map_err(|_| bad())?;
            return Ok(EdgeCount::Threshold(d));
        }
        t.parse().map(EdgeCount::Exact).map_err(|_| bad())
    }
}

impl fmt::Display for EdgeCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EdgeCount::Exact(m) => write!(f, "{m}"),
            EdgeCount::Threshold(0) => f.write_str("threshold"),
            EdgeCount::Threshold(d) => write!(f, "threshold{d:+}"),
        }
    }
}

impl Serialize for EdgeCount {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match *self {
            EdgeCount::Exact(m) => ser.serialize_u64(m),
            other => ser.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for EdgeCount {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(u64),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Number(m) => Ok(EdgeCount::Exact(m)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Sweep configuration, read from TOML:
///
/// ```toml
/// grid = [[24, 2, 2], [54, 3, 2]]
/// trials = 50
/// edges = "threshold+1"   # optional; also an integer or "threshold-3"
/// coloring_mode = "rainbow"
/// seed = 7
/// engine = "both"
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    /// `(n, k, s)` triples.
    pub grid: Vec<(usize, usize, usize)>,
    pub trials: usize,
    #[serde(default)]
    pub edges: EdgeCount,
    pub coloring_mode: ColoringMode,
    pub seed: u64,
    pub engine: EngineChoice,
}

impl SweepConfig {
    pub fn from_toml(text: &str) -> Result<Self, InputError> {
        let config: SweepConfig =
            toml::from_str(text).map_err(|e| InputError(format!("sweep config: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<(), InputError> {
        if self.trials == 0 {
            return Err(InputError("sweep config: trials must be at least 1".into()));
        }
        if self.grid.is_empty() {
            return Err(InputError("sweep config: grid is empty".into()));
        }
        for &(n, k, s) in &self.grid {
            if k == 0 || s == 0 || k > n {
                return Err(InputError(format!(
                    "sweep config: grid point ({n}, {k}, {s}) needs 1 <= k <= n and s >= 1"
                )));
            }
            self.edges.resolve(n, k, s)?;
        }
        Ok(())
    }
}
