//! Exact interval-set algebra and verification tools for 3-sum-free sets.
//!
//! A set `A` is k-sum-free when no `x, y, z ∈ A` satisfy `x + y = k z`
//! (`x = y` allowed). The largest 3-sum-free subsets of `[0, 1]` have measure
//! 77/177, attained by `(8/177, 4/59) ∪ (28/177, 14/59) ∪ (2/3, 1)`.
//!
//! All numbers are exact rationals; there is no floating point in any
//! feasibility or measure decision.

pub mod bounds;
pub mod cli;
pub mod discrete;
pub mod error;
pub mod generate;
pub mod interval;
pub mod par;
pub mod rational;
pub mod set;
pub mod sumfree;
pub mod sweep;
mod text;

pub use error::{Error, Result};
pub use interval::Interval;
pub use par::Execution;
pub use rational::Rational;
pub use set::IntervalSet;
pub use text::parse_set;
