//! Brute-force ground truth.
//!
//! [`enumerate_patterns`] walks every height tuple under a ceiling depth-first,
//! pruning on landing-slot collisions and on the running height sum, and yields
//! valid patterns in ascending lexicographic order. [`rook_oracle`] counts
//! permutations that avoid a band of circular super-diagonals by exhaustive
//! search. Every closed-form count in [`crate::closed_forms`] is checked
//! against these.
//!
//! Both searches refuse to start when their raw search space exceeds a node
//! budget ([`DEFAULT_NODE_BUDGET`] unless overridden).

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::exact_math::ExactInt;
use crate::pattern::JugglingPattern;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("period must be at least 1")]
    ZeroPeriod,
    #[error("counting all ball numbers needs a finite ceiling")]
    UnboundedAllBalls,
    #[error("search space of {space} candidates exceeds the node budget of {budget}")]
    BudgetExceeded { space: String, budget: u64 },
    #[error("default ceiling b*n overflows for b = {balls}, n = {period}")]
    CeilingOverflow { balls: u64, period: usize },
    #[error("rook(s, n) needs 0 <= s <= n - 1, got s = {s}, n = {n}")]
    RookRange { s: usize, n: usize },
}

/// Ball-number part of a query: a fixed `b`, or every `b` at once (`*`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Balls {
    Fixed(u64),
    All,
}

/// What to enumerate: period, ball spec and height ceiling.
///
/// With fixed balls and no ceiling the ceiling defaults to `b * n`, the largest
/// height such a pattern can contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub period: usize,
    pub balls: Balls,
    pub ceiling: Option<u64>,
    pub budget: u64,
}

impl EnumerationSpec {
    pub fn fixed(period: usize, balls: u64) -> Self {
        EnumerationSpec {
            period,
            balls: Balls::Fixed(balls),
            ceiling: None,
            budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn all_balls(period: usize, ceiling: u64) -> Self {
        EnumerationSpec {
            period,
            balls: Balls::All,
            ceiling: Some(ceiling),
            budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn with_ceiling(mut self, ceiling: u64) -> Self {
        self.ceiling = Some(ceiling);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// The finite ceiling the search will use.
    pub fn effective_ceiling(&self) -> Result<u64, OracleError> {
        match (self.ceiling, self.balls) {
            (Some(c), _) => Ok(c),
            (None, Balls::All) => Err(OracleError::UnboundedAllBalls),
            (None, Balls::Fixed(b)) => {
                b.checked_mul(self.period as u64)
                    .ok_or(OracleError::CeilingOverflow {
                        balls: b,
                        period: self.period,
                    })
            }
        }
    }

    fn plan(&self) -> Result<Plan, OracleError> {
        if self.period == 0 {
            return Err(OracleError::ZeroPeriod);
        }
        let ceiling = self.effective_ceiling()?;
        let grid = (ceiling as u128 + 1).checked_pow(self.period as u32);
        match grid {
            Some(g) if g <= self.budget as u128 => {}
            _ => {
                return Err(OracleError::BudgetExceeded {
                    space: format!("({} + 1)^{}", ceiling, self.period),
                    budget: self.budget,
                })
            }
        }
        let target = match self.balls {
            Balls::Fixed(b) => Some(b as u128 * self.period as u128),
            Balls::All => None,
        };
        Ok(Plan {
            n: self.period,
            ceiling,
            target,
        })
    }
}

#[derive(Debug, Clone, Copy)]
struct Plan {
    n: usize,
    ceiling: u64,
    /// Required height sum, `b * n`, when the ball number is fixed.
    target: Option<u128>,
}

impl Plan {
    /// Height range allowed at `depth` given the sum of the heights before it.
    fn bounds(&self, depth: usize, sum: u128) -> Option<(u64, u64)> {
        let c = self.ceiling as u128;
        match self.target {
            None => Some((0, self.ceiling)),
            Some(target) => {
                let need = target.checked_sub(sum)?;
                let after = (self.n - depth - 1) as u128;
                let lo = need.saturating_sub(after * c);
                let hi = need.min(c);
                (lo <= hi).then_some((lo as u64, hi as u64))
            }
        }
    }

    fn slot(&self, depth: usize, h: u64) -> usize {
        ((depth as u64 + h % self.n as u64) % self.n as u64) as usize
    }

    fn balls_of(&self, heights: &[u64]) -> u64 {
        let sum: u128 = heights.iter().map(|&h| h as u128).sum();
        (sum / self.n as u128) as u64
    }

    /// Heights allowed for the first throw.
    fn first_heights(&self) -> impl Iterator<Item = u64> {
        let range = self.bounds(0, 0);
        range.into_iter().flat_map(|(lo, hi)| lo..=hi)
    }

    fn count_from(&self, depth: usize, sum: u128, used: &mut [bool]) -> u128 {
        let Some((lo, hi)) = self.bounds(depth, sum) else {
            return 0;
        };
        let last = depth + 1 == self.n;
        let mut total = 0;
        for h in lo..=hi {
            let slot = self.slot(depth, h);
            if used[slot] {
                continue;
            }
            if last {
                total += 1;
            } else {
                used[slot] = true;
                total += self.count_from(depth + 1, sum + h as u128, used);
                used[slot] = false;
            }
        }
        total
    }

    fn count_with_first(&self, h0: u64) -> u128 {
        let mut used = vec![false; self.n];
        if self.n == 1 {
            return 1;
        }
        used[self.slot(0, h0)] = true;
        self.count_from(1, h0 as u128, &mut used)
    }
}

/// Depth-first stream of valid patterns in ascending lexicographic order.
#[derive(Debug, Clone)]
pub struct PatternIter {
    plan: Plan,
    heights: Vec<u64>,
    used: Vec<bool>,
    sum: u128,
    /// Next height to try at each depth.
    cursor: Vec<u64>,
    depth: usize,
    /// Restricts the search to one first-throw subtree.
    only_first: Option<u64>,
    finished: bool,
}

impl PatternIter {
    fn new(plan: Plan) -> Self {
        PatternIter {
            plan,
            heights: vec![0; plan.n],
            used: vec![false; plan.n],
            sum: 0,
            cursor: vec![0; plan.n],
            depth: 0,
            only_first: None,
            finished: false,
        }
    }

    /// Only the subtree with `h_0 = first`.
    fn with_first(plan: Plan, first: u64) -> Self {
        let mut it = PatternIter::new(plan);
        it.cursor[0] = first;
        it.only_first = Some(first);
        it
    }

    fn leaf(&self) -> JugglingPattern {
        JugglingPattern::from_parts_unchecked(
            self.heights.clone(),
            self.plan.balls_of(&self.heights),
        )
    }
}

impl Iterator for PatternIter {
    type Item = JugglingPattern;

    fn next(&mut self) -> Option<JugglingPattern> {
        while !self.finished {
            let d = self.depth;
            let found = self.plan.bounds(d, self.sum).and_then(|(lo, hi)| {
                let mut h = self.cursor[d].max(lo);
                while h <= hi {
                    if !self.used[self.plan.slot(d, h)] {
                        return Some(h);
                    }
                    h += 1;
                }
                None
            });
            let found = found.filter(|&h| d > 0 || self.only_first.is_none_or(|f| h == f));
            match found {
                Some(h) => {
                    self.cursor[d] = h + 1;
                    self.heights[d] = h;
                    if d + 1 == self.plan.n {
                        return Some(self.leaf());
                    }
                    self.used[self.plan.slot(d, h)] = true;
                    self.sum += h as u128;
                    self.depth += 1;
                    self.cursor[self.depth] = 0;
                }
                None => {
                    if d == 0 {
                        self.finished = true;
                    } else {
                        self.depth -= 1;
                        let h = self.heights[self.depth];
                        self.used[self.plan.slot(self.depth, h)] = false;
                        self.sum -= h as u128;
                    }
                }
            }
        }
        None
    }
}

/// Every pattern matching `spec`, in ascending lexicographic order of heights.
pub fn enumerate_patterns(spec: &EnumerationSpec) -> Result<PatternIter, OracleError> {
    Ok(PatternIter::new(spec.plan()?))
}

/// Same output as [`enumerate_patterns`], materialised, with the search split
/// across threads by first throw height and merged back in order.
pub fn collect_patterns_parallel(
    spec: &EnumerationSpec,
) -> Result<Vec<JugglingPattern>, OracleError> {
    let plan = spec.plan()?;
    let firsts: Vec<u64> = plan.first_heights().collect();
    let chunks: Vec<Vec<JugglingPattern>> = firsts
        .into_par_iter()
        .map(|h0| PatternIter::with_first(plan, h0).collect())
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Number of patterns [`enumerate_patterns`] would yield, without building them.
pub fn count_patterns_oracle(spec: &EnumerationSpec) -> Result<ExactInt, OracleError> {
    let plan = spec.plan()?;
    let firsts: Vec<u64> = plan.first_heights().collect();
    let total: u128 = firsts
        .into_par_iter()
        .map(|h0| plan.count_with_first(h0))
        .sum();
    Ok(BigInt::from(total))
}

/// Single-threaded variant of [`count_patterns_oracle`].
pub fn count_patterns_sequential(spec: &EnumerationSpec) -> Result<ExactInt, OracleError> {
    let plan = spec.plan()?;
    let mut used = vec![false; plan.n];
    Ok(BigInt::from(plan.count_from(0, 0, &mut used)))
}

/// `rook(s, n)` with the default budget.
pub fn rook_oracle(s: usize, n: usize) -> Result<ExactInt, OracleError> {
    rook_oracle_with_budget(s, n, DEFAULT_NODE_BUDGET)
}

/// Number of permutations `p` of `{0, ..., n - 1}` with
/// `p(i) != (i + t) mod n` for every row `i` and every `1 <= t <= s`.
///
/// The raw search space is `n!`; the call is refused when that exceeds `budget`.
pub fn rook_oracle_with_budget(s: usize, n: usize, budget: u64) -> Result<ExactInt, OracleError> {
    if n == 0 {
        return Err(OracleError::ZeroPeriod);
    }
    if s >= n {
        return Err(OracleError::RookRange { s, n });
    }
    let mut space: u128 = 1;
    for i in 2..=n as u128 {
        space = space.saturating_mul(i);
        if space > budget as u128 {
            return Err(OracleError::BudgetExceeded {
                space: format!("{n}!"),
                budget,
            });
        }
    }

    fn place(row: usize, n: usize, s: usize, used: &mut [bool]) -> u128 {
        if row == n {
            return 1;
        }
        let mut total = 0;
        for col in 0..n {
            let offset = (col + n - row) % n;
            if used[col] || (1..=s).contains(&offset) {
                continue;
            }
            used[col] = true;
            total += place(row + 1, n, s, used);
            used[col] = false;
        }
        total
    }

    let mut used = vec![false; n];
    Ok(BigInt::from(place(0, n, s, &mut used)))
}
