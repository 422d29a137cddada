use super::{require_nonnegative, require_sum_free};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::set::IntervalSet;
use crate::sumfree::{a0, construct_extremal, optimal_measure};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    /// `μ(A) = 77/177`.
    pub is_extremal: bool,
    /// `μ(A Δ A₀)`, computed only for extremal sets.
    pub symmetric_difference: Option<Rational>,
    /// Indices `i` in 1..=7 with `A ⊂ A_i`.
    pub containers: Vec<usize>,
    /// An extremal set that is not contained in any `A_i`, or differs from A₀
    /// by positive measure. Never observed on a valid set.
    pub violation: bool,
}

impl ExtremalReport {
    /// The smallest containing index.
    pub fn container(&self) -> Option<usize> {
        self.containers.first().copied()
    }
}

/// Classifies a 3-sum-free `A ⊂ [0, 1]`: when `μ(A) = 77/177`, confirms that
/// `A` agrees with A₀ up to measure zero and lies inside some `A_i`.
pub fn check_extremal_containment(set: &IntervalSet) -> Result<ExtremalReport> {
    if !set.is_empty() {
        require_nonnegative(set)?;
        if set.sup()? > int(1) {
            return Err(Error::Precondition("set must lie in [0, 1]".into()));
        }
    }
    require_sum_free(set)?;
    if set.measure() != optimal_measure() {
        return Ok(ExtremalReport {
            is_extremal: false,
            symmetric_difference: None,
            containers: Vec::new(),
            violation: false,
        });
    }
    let symmetric_difference = set.symmetric_difference(&a0()).measure();
    let containers: Vec<usize> =
        (1..=7).filter(|&i| set.is_subset(&construct_extremal(i).expect("valid index"))).collect();
    let violation = containers.is_empty() || symmetric_difference != int(0);
    Ok(ExtremalReport { is_extremal: true, symmetric_difference: Some(symmetric_difference), containers, violation })
}
