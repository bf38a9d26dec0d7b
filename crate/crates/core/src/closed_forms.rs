//! Counting formulas for `J(n, b, c)`, the number of period-`n` patterns with
//! `b` balls and every height at most `c`, and a dispatcher that picks one.
//!
//! Branches, in the order [`count`] tries them:
//!
//! | branch            | applies when                               | value                         |
//! |-------------------|--------------------------------------------|-------------------------------|
//! | `unbounded`       | fixed `b`, no ceiling or `c >= b*n`         | `(b+1)^n - b^n`               |
//! | `theorem1-sum`    | fixed `b`, `c = a*n - 1` with `a >= 2`      | `sum_k E(n,k) B(n, b-k, a-1)` |
//! | `eulerian`        | fixed `b`, `c = n - 1`                      | `E(n, b)`                     |
//! | `factorial`       | all balls, `c = n - 1`                      | `n!`                          |
//! | `rook-derangement`| all balls, `c = n - 2`                      | derangements of `n`           |
//! | `rook-menage`     | all balls, `c = n - 3`                      | ménage numbers                |
//! | `rook-oracle`     | all balls, `c < n - 3`                      | `rook(n - c - 1, n)` by search|
//! | `pattern-oracle`  | anything else                               | exhaustive enumeration        |
//!
//! With [`Method::ClosedForm`] the ceiling `a*n - 1` branch evaluates the
//! alternating power sum instead (`theorem1-closed`). Negative bases in that
//! sum contribute zero; with plain signed powers it disagrees with direct
//! counting (for example `J(2, 1, 1)` would come out as 0 instead of 1).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact_math::{
    alternating_power_sum, binomial, bounded_compositions, eulerian, factorial, ExactInt,
};
use crate::oracle::{
    count_patterns_oracle, rook_oracle_with_budget, Balls, EnumerationSpec, OracleError,
    DEFAULT_NODE_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("no closed form covers this query")]
    NoClosedForm,
    #[error("{what} needs {requirement}")]
    OutOfRange {
        what: &'static str,
        requirement: &'static str,
    },
    #[error("cross-check failed: {branch} gave {closed}, enumeration gave {oracle}")]
    Mismatch {
        branch: Branch,
        closed: ExactInt,
        oracle: ExactInt,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    #[default]
    Auto,
    #[serde(rename = "closed")]
    ClosedForm,
    Oracle,
    Both,
}

/// Which formula produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Unbounded,
    #[serde(rename = "theorem1-sum")]
    Theorem1Sum,
    #[serde(rename = "theorem1-closed")]
    Theorem1Closed,
    Eulerian,
    Factorial,
    RookDerangement,
    RookMenage,
    RookOracle,
    PatternOracle,
}

impl Branch {
    pub fn tag(self) -> &'static str {
        match self {
            Branch::Unbounded => "unbounded",
            Branch::Theorem1Sum => "theorem1-sum",
            Branch::Theorem1Closed => "theorem1-closed",
            Branch::Eulerian => "eulerian",
            Branch::Factorial => "factorial",
            Branch::RookDerangement => "rook-derangement",
            Branch::RookMenage => "rook-menage",
            Branch::RookOracle => "rook-oracle",
            Branch::PatternOracle => "pattern-oracle",
        }
    }

    /// Branches that are formulas rather than searches.
    pub fn is_closed_form(self) -> bool {
        !matches!(self, Branch::RookOracle | Branch::PatternOracle)
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountQuery {
    pub period: usize,
    pub balls: Balls,
    pub ceiling: Option<u64>,
    pub method: Method,
    /// Node budget handed to any search the query runs.
    pub budget: u64,
}

impl CountQuery {
    pub fn fixed(period: usize, balls: u64) -> Self {
        CountQuery {
            period,
            balls: Balls::Fixed(balls),
            ceiling: None,
            method: Method::Auto,
            budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn all_balls(period: usize, ceiling: u64) -> Self {
        CountQuery {
            period,
            balls: Balls::All,
            ceiling: Some(ceiling),
            method: Method::Auto,
            budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn with_ceiling(mut self, ceiling: u64) -> Self {
        self.ceiling = Some(ceiling);
        self
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn enumeration_spec(&self) -> EnumerationSpec {
        EnumerationSpec {
            period: self.period,
            balls: self.balls,
            ceiling: self.ceiling,
            budget: self.budget,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub count: ExactInt,
    pub branch: Branch,
    /// True when an independent enumeration confirmed the count.
    pub cross_checked: bool,
}

/// `J(n, b) = (b + 1)^n - b^n`, all period-`n` patterns with `b` balls.
pub fn count_unbounded(n: usize, b: u64) -> ExactInt {
    Pow::pow(BigInt::from(b) + 1u32, n) - Pow::pow(BigInt::from(b), n)
}

/// `J(n, b, a*n - 1)` as `sum_{k=0}^{n-1} E(n, k) B(n, b - k, a - 1)`.
///
/// Each pattern is a permutation with `k` descents, each lifted by one full
/// period, plus a free vector with entries at most `a - 1` summing to `b - k`.
pub fn count_ceiling_multiple(n: usize, b: u64, a: u64) -> ExactInt {
    let b = b as i64;
    (0..n as i64)
        .map(|k| eulerian(n, k) * bounded_compositions(n, b - k, a as i64 - 1))
        .sum()
}

/// `J(n, b, a*n - 1)` as `sum_{i=0}^{n} (-1)^i C(n, i) [(b - ia + 1)^n - (b - ia)^n]`
/// where negative bases contribute zero.
pub fn count_ceiling_multiple_closed(n: usize, b: u64, a: u64) -> ExactInt {
    alternating_power_sum(n, b as i64, a as i64)
}

/// Number of derangements of `n` symbols, `sum_k (-1)^k C(n, k) (n - k)!`.
pub fn derangement_count(n: usize) -> ExactInt {
    let mut total = BigInt::zero();
    for k in 0..=n {
        let term = binomial(n as i64, k as u64) * factorial((n - k) as u64);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Ménage number `sum_k (-1)^k 2n/(2n - k) C(2n - k, k) (n - k)!` for `n >= 3`.
///
/// Each term is formed as an integer product and divided by `2n - k` last;
/// the division is checked to be exact.
pub fn menage_count(n: usize) -> Result<ExactInt, CountError> {
    if n < 3 {
        return Err(CountError::OutOfRange {
            what: "menage_count",
            requirement: "n >= 3",
        });
    }
    let two_n = 2 * n as i64;
    let mut total = BigInt::zero();
    for k in 0..=n as i64 {
        let numerator =
            BigInt::from(two_n) * binomial(two_n - k, k as u64) * factorial((n as i64 - k) as u64);
        let (term, rem) = numerator.div_rem(&BigInt::from(two_n - k));
        assert!(rem.is_zero(), "inexact menage term at n = {n}, k = {k}");
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// `J(n, *, c)` for `c <= n - 1`: every pattern under the ceiling, any ball count.
pub fn count_all_balls_small_ceiling(n: usize, c: u64) -> Result<ExactInt, CountError> {
    small_ceiling(n, c, DEFAULT_NODE_BUDGET).map(|(count, _)| count)
}

fn small_ceiling(n: usize, c: u64, budget: u64) -> Result<(ExactInt, Branch), CountError> {
    if n == 0 {
        return Err(OracleError::ZeroPeriod.into());
    }
    if c >= n as u64 {
        return Err(CountError::OutOfRange {
            what: "count_all_balls_small_ceiling",
            requirement: "ceiling <= n - 1",
        });
    }
    let gap = n - 1 - c as usize;
    Ok(match gap {
        0 => (factorial(n as u64), Branch::Factorial),
        1 => (derangement_count(n), Branch::RookDerangement),
        2 => (menage_count(n)?, Branch::RookMenage),
        s => (rook_oracle_with_budget(s, n, budget)?, Branch::RookOracle),
    })
}

/// The non-enumeration branch for `query`, or `None` when only the pattern
/// oracle applies.
fn direct_branch(query: &CountQuery) -> Result<Option<(ExactInt, Branch)>, CountError> {
    let n = query.period;
    if n == 0 {
        return Err(OracleError::ZeroPeriod.into());
    }
    match (query.balls, query.ceiling) {
        (Balls::All, None) => Err(OracleError::UnboundedAllBalls.into()),
        (Balls::Fixed(b), None) => Ok(Some((count_unbounded(n, b), Branch::Unbounded))),
        (Balls::Fixed(b), Some(c)) => {
            let n64 = n as u64;
            if b.checked_mul(n64).is_some_and(|max| c >= max) {
                return Ok(Some((count_unbounded(n, b), Branch::Unbounded)));
            }
            let a = (c + 1) / n64;
            if (c + 1) % n64 == 0 && a >= 2 {
                return Ok(Some(if query.method == Method::ClosedForm {
                    (
                        count_ceiling_multiple_closed(n, b, a),
                        Branch::Theorem1Closed,
                    )
                } else {
                    (count_ceiling_multiple(n, b, a), Branch::Theorem1Sum)
                }));
            }
            if c + 1 == n64 {
                let e = i64::try_from(b).map_or_else(|_| BigInt::zero(), |b| eulerian(n, b));
                return Ok(Some((e, Branch::Eulerian)));
            }
            Ok(None)
        }
        (Balls::All, Some(c)) if c < n as u64 => small_ceiling(n, c, query.budget).map(Some),
        (Balls::All, Some(_)) => Ok(None),
    }
}

fn pattern_oracle(query: &CountQuery) -> Result<ExactInt, CountError> {
    Ok(count_patterns_oracle(&query.enumeration_spec())?)
}

/// Counts the patterns described by `query`, reporting which branch ran.
pub fn count(query: &CountQuery) -> Result<CountResult, CountError> {
    match query.method {
        Method::Oracle => {
            direct_branch(query)?;
            Ok(CountResult {
                count: pattern_oracle(query)?,
                branch: Branch::PatternOracle,
                cross_checked: false,
            })
        }
        Method::Auto => {
            let (count, branch) = match direct_branch(query)? {
                Some(found) => found,
                None => (pattern_oracle(query)?, Branch::PatternOracle),
            };
            Ok(CountResult {
                count,
                branch,
                cross_checked: false,
            })
        }
        Method::ClosedForm => match direct_branch(query)? {
            Some((count, branch)) if branch.is_closed_form() => Ok(CountResult {
                count,
                branch,
                cross_checked: false,
            }),
            _ => Err(CountError::NoClosedForm),
        },
        Method::Both => {
            let (direct, oracle) = rayon::join(|| direct_branch(query), || pattern_oracle(query));
            let oracle = oracle?;
            match direct? {
                Some((count, branch)) => {
                    if count != oracle {
                        return Err(CountError::Mismatch {
                            branch,
                            closed: count,
                            oracle,
                        });
                    }
                    Ok(CountResult {
                        count,
                        branch,
                        cross_checked: true,
                    })
                }
                None => Ok(CountResult {
                    count: oracle,
                    branch: Branch::PatternOracle,
                    cross_checked: false,
                }),
            }
        }
    }
}
