//! Exact counting, validation, construction and enumeration of siteswap
//! juggling patterns.
//!
//! A period-`n` siteswap is a tuple of throw heights `(h_0, ..., h_{n-1})`
//! such that the landing beats `(i + h_i) mod n` are pairwise distinct and
//! the heights sum to `b * n`, where `b` is the number of balls.
//!
//! The crate is organised by capability:
//!
//! - [`exact_math`]: big-integer binomials, factorials, Eulerian numbers,
//!   (bounded) compositions and Worpitzky's identity.
//! - [`pattern`]: throw sequences, validation, and the `P - Q + nB`
//!   construction/decomposition.
//! - [`notation`]: compact (`"5551"`) and list (`"20,0,0,0"`) text forms.
//! - [`oracle`]: brute-force enumeration of patterns and of restricted rook
//!   placements, the ground truth for every closed form.
//! - [`closed_forms`]: the counting formulas and a dispatcher that picks the
//!   right one for a query.
//! - [`cli`]: the command-line front end used by the `siteswap` binary.
//!
//! ```
//! use siteswap::closed_forms::count_unbounded;
//!
//! // five-ball patterns of period four
//! assert_eq!(count_unbounded(4, 5), 671u32.into());
//! ```

pub mod cli;
pub mod closed_forms;
pub mod exact_math;
pub mod notation;
pub mod oracle;
pub mod pattern;

pub use closed_forms::{count, Branch, CountError, CountQuery, CountResult, Method};
pub use exact_math::{EulerianTable, ExactInt};
pub use notation::{parse, render, NotationForm};
pub use oracle::{Balls, EnumerationSpec, OracleError};
pub use pattern::{Decomposition, JugglingPattern, Permutation, ThrowSequence};
