//! Exact combinatorial primitives.
//!
//! Everything here works on unbounded integers. Binomial coefficients use the
//! combinatorial convention: `C(m, k)` is zero whenever `m < 0` or `m < k`,
//! never the polynomial extension. The counting formulas built on top rely on
//! that, since terms with a negative upper index have to vanish.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

/// Exact signed integer of unbounded magnitude.
pub type ExactInt = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("index k = {k} is outside 0..={max} for Eulerian row n = {n}")]
    EulerianIndex { n: usize, k: i64, max: usize },
    #[error("Eulerian numbers are defined here for n >= 1")]
    ZeroRow,
}

/// `C(m, k)` with the combinatorial convention (zero for `m < 0` or `m < k`).
pub fn binomial(m: i64, k: u64) -> ExactInt {
    if m < 0 || (m as u64) < k {
        return BigInt::zero();
    }
    let m = m as u64;
    let k = k.min(m - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (m - i) is divisible by (i + 1) at every step
        acc *= m - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> ExactInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `x^n` for `x >= 0`, and zero for negative `x`.
///
/// This is the power convention under which the alternating Eulerian and
/// ceiling formulas agree with direct counting.
pub fn truncated_pow(x: i64, n: usize) -> ExactInt {
    if x < 0 {
        BigInt::zero()
    } else {
        Pow::pow(BigInt::from(x), n)
    }
}

/// Triangular table of Eulerian numbers, `rows[n - 1] = [E(n, 0), ..., E(n, n - 1)]`.
///
/// `E(n, k)` counts permutations of `{0, ..., n - 1}` with exactly `k`
/// positions where `p_i < i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EulerianTable {
    rows: Vec<Vec<ExactInt>>,
}

impl EulerianTable {
    /// Builds rows `1..=max_n` from the recursion
    /// `E(n, k) = (k + 1) E(n - 1, k) + (n - k) E(n - 1, k - 1)`, `E(1, 0) = 1`.
    pub fn new(max_n: usize) -> Self {
        let mut table = EulerianTable::default();
        table.extend_to(max_n);
        table
    }

    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    pub fn extend_to(&mut self, max_n: usize) {
        while self.rows.len() < max_n {
            let n = self.rows.len() + 1;
            let row = match self.rows.last() {
                None => vec![BigInt::one()],
                Some(prev) => (0..n)
                    .map(|k| {
                        let stay = prev.get(k).map(|e| e * (k + 1)).unwrap_or_default();
                        let rise = if k == 0 {
                            BigInt::zero()
                        } else {
                            &prev[k - 1] * (n - k)
                        };
                        stay + rise
                    })
                    .collect(),
            };
            self.rows.push(row);
        }
    }

    /// Row `n` (1-based), if it has been computed.
    pub fn row(&self, n: usize) -> Option<&[ExactInt]> {
        n.checked_sub(1)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    /// `E(n, k)`, zero outside `0 <= k <= n - 1`. `None` if row `n` is not in the table.
    pub fn get(&self, n: usize, k: i64) -> Option<ExactInt> {
        let row = self.row(n)?;
        Some(
            usize::try_from(k)
                .ok()
                .and_then(|k| row.get(k).cloned())
                .unwrap_or_default(),
        )
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactInt]> {
        self.rows.iter().map(Vec::as_slice)
    }
}

static EULERIAN_CACHE: LazyLock<RwLock<EulerianTable>> =
    LazyLock::new(|| RwLock::new(EulerianTable::default()));

fn cached_row(n: usize) -> Vec<ExactInt> {
    assert!(n >= 1, "Eulerian rows start at n = 1");
    {
        let table = EULERIAN_CACHE.read().unwrap_or_else(|e| e.into_inner());
        if let Some(row) = table.row(n) {
            return row.to_vec();
        }
    }
    let mut table = EULERIAN_CACHE.write().unwrap_or_else(|e| e.into_inner());
    table.extend_to(n);
    table.row(n).expect("row was just computed").to_vec()
}

/// `E(n, k)` via the recursion (memoised process-wide). Zero for `k < 0` or `k >= n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn eulerian(n: usize, k: i64) -> ExactInt {
    assert!(n >= 1, "Eulerian numbers are defined here for n >= 1");
    match usize::try_from(k) {
        Ok(k) if k < n => {
            let table = EULERIAN_CACHE.read().unwrap_or_else(|e| e.into_inner());
            if let Some(row) = table.row(n) {
                return row[k].clone();
            }
            drop(table);
            cached_row(n)[k].clone()
        }
        _ => BigInt::zero(),
    }
}

/// `[E(n, 0), ..., E(n, n - 1)]`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn eulerian_row(n: usize) -> Vec<ExactInt> {
    cached_row(n)
}

/// `E(n, k) = sum_{i=0}^{n} (-1)^i C(n, i) [(k - i + 1)^n - (k - i)^n]`,
/// with negative bases contributing zero (see [`truncated_pow`]).
pub fn eulerian_explicit(n: usize, k: i64) -> Result<ExactInt, MathError> {
    if n == 0 {
        return Err(MathError::ZeroRow);
    }
    if k < 0 || k >= n as i64 {
        return Err(MathError::EulerianIndex { n, k, max: n - 1 });
    }
    Ok(alternating_power_sum(n, k, 1))
}

/// `sum_{i=0}^{n} (-1)^i C(n, i) [(x - i*step + 1)^n - (x - i*step)^n]` with
/// truncated powers. Shared by the explicit Eulerian formula (`step = 1`) and
/// the ceiling `a*n - 1` closed form (`step = a`).
pub(crate) fn alternating_power_sum(n: usize, x: i64, step: i64) -> ExactInt {
    let mut total = BigInt::zero();
    for i in 0..=n {
        let base = x - i as i64 * step;
        if base < 0 {
            // every later term is zero as well
            break;
        }
        let term =
            binomial(n as i64, i as u64) * (truncated_pow(base + 1, n) - truncated_pow(base, n));
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `B(n, b)`: number of `n`-tuples of nonnegative integers summing to `b`.
pub fn compositions(n: usize, b: i64) -> ExactInt {
    if b < 0 {
        return BigInt::zero();
    }
    binomial(n as i64 + b - 1, n as u64 - 1)
}

/// `B(n, b, a)`: number of `n`-tuples of integers in `0..=a` summing to `b`,
/// by inclusion-exclusion over the entries that exceed `a`.
pub fn bounded_compositions(n: usize, b: i64, a: i64) -> ExactInt {
    if b < 0 || a < 0 {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    for i in 0..=n as i64 {
        let top = n as i64 + b - 1 - i * (a + 1);
        if top < 0 {
            break;
        }
        let term = binomial(n as i64, i as u64) * binomial(top, n as u64 - 1);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Right-hand side of Worpitzky's identity, `sum_k E(n, k) C(x + k, n)`.
/// Equals `x^n`.
pub fn worpitzky_rhs(x: u64, n: usize) -> ExactInt {
    eulerian_row(n)
        .iter()
        .enumerate()
        .map(|(k, e)| e * binomial(x as i64 + k as i64, n as u64))
        .sum()
}
