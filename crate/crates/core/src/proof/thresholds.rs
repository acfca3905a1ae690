use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, ArithmeticError};

/// Degree and color-class bounds that drive the case analysis.
///
/// `d_high` and `d_low` serve the uniform (`k >= 3`) steps; the graph steps
/// use `graph_deg` and `graph_color` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofThresholds {
    /// `k(s-1)·C(n-2, k-2) + (s-1)`
    pub d_high: u128,
    /// `2(s-1)·C(n-2, k-2) + (s-1)`
    pub d_low: u128,
    /// `3(s-1)`
    pub graph_deg: u128,
    /// `2(s-1)`
    pub graph_color: u128,
}

/// Computes the four bounds for `(n, k, s)`; requires `k >= 2`, `s >= 1`, `n >= 2`.
pub fn thresholds_for(n: usize, k: usize, s: usize) -> Result<ProofThresholds, ArithmeticError> {
    if k < 2 || s < 1 || n < 2 {
        return Err(ArithmeticError::InvalidParameters(format!(
            "thresholds need k >= 2, s >= 1, n >= 2; got n={n}, k={k}, s={s}"
        )));
    }
    let overflow = || ArithmeticError::Overflow(format!("thresholds for n={n}, k={k}, s={s}"));
    let base = binomial((n - 2) as u64, (k - 2) as u64)?;
    let sm1 = (s - 1) as u128;
    let scaled = |factor: u128| -> Result<u128, ArithmeticError> {
        factor
            .checked_mul(sm1)
            .and_then(|x| x.checked_mul(base))
            .and_then(|x| x.checked_add(sm1))
            .ok_or_else(overflow)
    };
    Ok(ProofThresholds {
        d_high: scaled(k as u128)?,
        d_low: scaled(2)?,
        graph_deg: 3 * sm1,
        graph_color: 2 * sm1,
    })
}
