//! Throw sequences, the two validity conditions, and the `P - Q + nB`
//! decomposition.
//!
//! Patterns are ordered tuples: rotations of a pattern are distinct patterns,
//! and the all-zeros sequence is a valid zero-ball pattern of every period.
//! Indexing is 0-based, so `Q = (0, 1, ..., n - 1)`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("a throw sequence needs at least one throw")]
    Empty,
    #[error("not a permutation of 0..{len}: {reason}")]
    NotAPermutation { len: usize, reason: String },
    #[error("perm has length {perm} but bvec has length {bvec}")]
    LengthMismatch { perm: usize, bvec: usize },
    #[error("b_{index} must be ≥ 1 at descent position (p_{index} = {value} < {index})")]
    MissingLift { index: usize, value: usize },
    #[error("height overflow at position {index}")]
    Overflow { index: usize },
    #[error("not a valid pattern: {0}")]
    Invalid(ValidationReport),
}

/// Ordered list of throw heights; may or may not be a valid pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ThrowSequence {
    heights: Vec<u64>,
}

impl ThrowSequence {
    pub fn new(heights: Vec<u64>) -> Result<Self, PatternError> {
        if heights.is_empty() {
            return Err(PatternError::Empty);
        }
        Ok(ThrowSequence { heights })
    }

    pub fn heights(&self) -> &[u64] {
        &self.heights
    }

    pub fn period(&self) -> usize {
        self.heights.len()
    }

    pub fn into_heights(self) -> Vec<u64> {
        self.heights
    }

    /// Beat (mod period) at which each throw lands.
    pub fn landing_slots(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.period() as u64;
        self.heights
            .iter()
            .enumerate()
            .map(move |(i, &h)| ((i as u64 % n + h % n) % n) as usize)
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }
}

impl fmt::Display for ThrowSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, h) in self.heights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Throws `first` and `second` land on the same beat `slot` (mod period).
    LandingCollision {
        first: usize,
        second: usize,
        slot: usize,
    },
    /// The height sum is not a multiple of the period.
    NonDivisibleSum {
        sum: u128,
        period: usize,
        remainder: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LandingCollision {
                first,
                second,
                slot,
            } => write!(f, "landing collision ({first},{second}) at beat {slot}"),
            Violation::NonDivisibleSum {
                sum,
                period,
                remainder,
            } => write!(
                f,
                "sum {sum} is not divisible by period {period} (remainder {remainder})"
            ),
        }
    }
}

/// Outcome of checking both conditions. Lists every violation found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub balls: Option<u64>,
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "valid with {} balls", self.balls.unwrap_or(0));
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks the landing condition and the average condition.
pub fn validate(seq: &ThrowSequence) -> ValidationReport {
    let n = seq.period();
    let mut first_at_slot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, slot) in seq.landing_slots().enumerate() {
        first_at_slot[slot].push(i);
    }
    let mut violations = Vec::new();
    let mut collisions: Vec<(usize, usize, usize)> = Vec::new();
    for (slot, throws) in first_at_slot.iter().enumerate() {
        for (x, &first) in throws.iter().enumerate() {
            for &second in &throws[x + 1..] {
                collisions.push((first, second, slot));
            }
        }
    }
    collisions.sort_unstable();
    violations.extend(collisions.into_iter().map(|(first, second, slot)| {
        Violation::LandingCollision {
            first,
            second,
            slot,
        }
    }));

    let sum: u128 = seq.heights.iter().map(|&h| h as u128).sum();
    let remainder = (sum % n as u128) as u64;
    if remainder != 0 {
        violations.push(Violation::NonDivisibleSum {
            sum,
            period: n,
            remainder,
        });
    }
    let valid = violations.is_empty();
    ValidationReport {
        valid,
        balls: valid.then(|| (sum / n as u128) as u64),
        violations,
    }
}

/// A throw sequence known to satisfy both validity conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JugglingPattern {
    sequence: ThrowSequence,
    balls: u64,
}

impl JugglingPattern {
    pub fn sequence(&self) -> &ThrowSequence {
        &self.sequence
    }

    pub fn heights(&self) -> &[u64] {
        self.sequence.heights()
    }

    pub fn period(&self) -> usize {
        self.sequence.period()
    }

    /// Mean throw height.
    pub fn balls(&self) -> u64 {
        self.balls
    }

    /// Trusted constructor for callers that have already established validity.
    pub(crate) fn from_parts_unchecked(heights: Vec<u64>, balls: u64) -> Self {
        debug_assert!(
            validate(&ThrowSequence {
                heights: heights.clone()
            })
            .valid
        );
        JugglingPattern {
            sequence: ThrowSequence { heights },
            balls,
        }
    }
}

impl TryFrom<ThrowSequence> for JugglingPattern {
    type Error = PatternError;

    fn try_from(sequence: ThrowSequence) -> Result<Self, Self::Error> {
        let report = validate(&sequence);
        match report.balls {
            Some(balls) if report.valid => Ok(JugglingPattern { sequence, balls }),
            _ => Err(PatternError::Invalid(report)),
        }
    }
}

impl From<JugglingPattern> for ThrowSequence {
    fn from(p: JugglingPattern) -> Self {
        p.sequence
    }
}

impl fmt::Display for JugglingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.sequence.fmt(f)
    }
}

pub fn ball_count(p: &JugglingPattern) -> u64 {
    p.balls
}

/// A permutation of `{0, ..., n - 1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, PatternError> {
        let len = values.len();
        if len == 0 {
            return Err(PatternError::NotAPermutation {
                len,
                reason: "empty".into(),
            });
        }
        let mut seen = vec![false; len];
        for &v in &values {
            if v >= len {
                return Err(PatternError::NotAPermutation {
                    len,
                    reason: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PatternError::NotAPermutation {
                    len,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positions `i` with `p_i < i`, i.e. where `P - Q` is negative.
    pub fn descent_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, &p)| p < i)
            .map(|(i, _)| i)
    }
}

pub fn descent_count(perm: &Permutation) -> usize {
    perm.descent_positions().count()
}

/// A pattern split as `P - Q + nB`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub perm: Permutation,
    pub b_vec: Vec<u64>,
    pub descents: usize,
}

impl Decomposition {
    pub fn balls(&self) -> u64 {
        self.b_vec.iter().sum()
    }
}

/// Builds `h_i = p_i - i + n * b_i`.
///
/// `b_i` must be at least 1 wherever `p_i < i`, otherwise the height would be
/// negative.
pub fn construct(perm: &Permutation, b_vec: &[u64]) -> Result<JugglingPattern, PatternError> {
    let n = perm.len();
    if b_vec.len() != n {
        return Err(PatternError::LengthMismatch {
            perm: n,
            bvec: b_vec.len(),
        });
    }
    let mut heights = Vec::with_capacity(n);
    for (i, (&p, &b)) in perm.as_slice().iter().zip(b_vec).enumerate() {
        if p < i && b == 0 {
            return Err(PatternError::MissingLift { index: i, value: p });
        }
        let lift = (n as u64)
            .checked_mul(b)
            .and_then(|v| v.checked_add(p as u64))
            .ok_or(PatternError::Overflow { index: i })?;
        heights.push(lift - i as u64);
    }
    let balls = b_vec
        .iter()
        .try_fold(0u64, |acc, &b| acc.checked_add(b))
        .ok_or(PatternError::Overflow { index: n - 1 })?;
    Ok(JugglingPattern {
        sequence: ThrowSequence { heights },
        balls,
    })
}

/// Inverse of [`construct`]: `p_i = (i + h_i) mod n`, `b_i = (h_i + i - p_i) / n`.
pub fn decompose(pattern: &JugglingPattern) -> Decomposition {
    let n = pattern.period() as u64;
    let mut perm = Vec::with_capacity(pattern.period());
    let mut b_vec = Vec::with_capacity(pattern.period());
    for (i, &h) in pattern.heights().iter().enumerate() {
        let i = i as u64;
        let p = (i + h % n) % n;
        perm.push(p as usize);
        // h + i - p is a nonnegative multiple of n; split to avoid overflow
        b_vec.push(h / n + (h % n + i - p) / n);
    }
    let perm = Permutation(perm);
    let descents = descent_count(&perm);
    Decomposition {
        perm,
        b_vec,
        descents,
    }
}
