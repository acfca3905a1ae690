//! Exact binomial arithmetic and the edge-count threshold.

use thiserror::Error;

/// Failure of exact integer arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("integer overflow while computing {0}")]
    Overflow(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `C(n, k)` with overflow detection. `C(n, k) = 0` when `k > n`.
///
/// Each step multiplies by `(n - i)` and divides by `(i + 1)`, reducing by
/// the gcd first so intermediate values only overflow when the true
/// result of the step does.
pub fn binomial(n: u64, k: u64) -> Result<u128, ArithmeticError> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        let mut num = u128::from(n - i);
        let mut den = u128::from(i + 1);
        let g = gcd(num, den);
        num /= g;
        den /= g;
        // acc * num is divisible by den; den is coprime to num after reduction.
        let g2 = gcd(acc, den);
        let reduced = acc / g2;
        den /= g2;
        debug_assert_eq!(den, 1);
        acc = reduced
            .checked_mul(num)
            .ok_or_else(|| ArithmeticError::Overflow(format!("C({n}, {k})")))?;
    }
    Ok(acc)
}

/// `C(n, k)` where `n` may be negative, in which case the value is 0.
pub fn binomial_signed(n: i64, k: u64) -> Result<u128, ArithmeticError> {
    if n < 0 {
        Ok(0)
    } else {
        binomial(n as u64, k)
    }
}

/// The edge-count threshold `C(n, k) - C(n - s + 1, k)`.
///
/// Every member of a family exceeding this count (with `n >= 3k^2 s`)
/// forces an `s`-rainbow matching; the cover construction attains it
/// exactly without one.
pub fn threshold(n: u64, k: u64, s: u64) -> Result<u128, ArithmeticError> {
    if k > n {
        return Err(ArithmeticError::InvalidParameters(format!(
            "threshold needs k <= n, got n={n}, k={k}"
        )));
    }
    if s == 0 {
        return Err(ArithmeticError::InvalidParameters(
            "threshold needs s >= 1".into(),
        ));
    }
    let full = binomial(n, k)?;
    let rest = binomial_signed(n as i64 - s as i64 + 1, k)?;
    Ok(full - rest)
}
