//! k-sum-free predicates, the forbidden-region operator and the extremal
//! three-interval family of measure 77/177.

use std::fmt;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{format_rational, int, midpoint, rat, Rational};
use crate::set::IntervalSet;

/// A solution of `x + y = k z` with `x, y, z` in the tested set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub k: u32,
}

impl Witness {
    /// Checks the equation exactly and that all three values lie in `set`.
    pub fn is_valid_for(&self, set: &IntervalSet) -> bool {
        &self.x + &self.y == int(self.k.into()) * &self.z
            && set.contains(&self.x)
            && set.contains(&self.y)
            && set.contains(&self.z)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x={} y={} z={} ({} + {} = {}*{})",
            format_rational(&self.x),
            format_rational(&self.y),
            format_rational(&self.z),
            format_rational(&self.x),
            format_rational(&self.y),
            self.k,
            format_rational(&self.z)
        )
    }
}

/// The points of `set` that can play the role of `z`: `set ∩ (1/k)(set + set)`.
pub fn conflict_set(set: &IntervalSet, k: u32) -> IntervalSet {
    assert!(k >= 1, "k must be positive");
    let sums = set.minkowski_sum(set);
    let scaled = sums.dilate(&rat(1, k.into())).expect("1/k > 0");
    set.intersect(&scaled)
}

/// Returns a solution of `x + y = k z` inside `set`, or `None` when the set
/// is k-sum-free.
///
/// The witness is deterministic: `z` is the midpoint of the first conflict
/// component, and `x` the midpoint of `I ∩ (kz − J)` for the first component
/// pair `(I, J)` (in `i <= j` order) whose sum contains `kz`.
pub fn sum_free_witness(set: &IntervalSet, k: u32) -> Option<Witness> {
    let conflicts = conflict_set(set, k);
    let first = conflicts.components().first()?;
    let z = midpoint(&first.lo, &first.hi);
    let target = int(k.into()) * &z;
    let comps = set.components();
    for (i, left) in comps.iter().enumerate() {
        for right in &comps[i..] {
            if !left.sum(right).contains(&target) {
                continue;
            }
            let partner = right.scale(&int(-1)).shift(&target);
            let overlap = left.intersect(&partner);
            if overlap.is_empty() {
                continue;
            }
            let x = midpoint(&overlap.lo, &overlap.hi);
            let y = &target - &x;
            return Some(Witness { x, y, z, k });
        }
    }
    unreachable!("a conflict point always has a contributing component pair")
}

pub fn is_k_sum_free(set: &IntervalSet, k: u32) -> bool {
    conflict_set(set, k).is_empty()
}

/// `(1/3)(A + A) ∪ ((3·A) − A)`: every point of this region would complete a
/// solution of `x + y = 3z` together with points of `A`.
pub fn forbidden_set(set: &IntervalSet) -> Result<IntervalSet> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let thirds = set.minkowski_sum(set).dilate(&rat(1, 3))?;
    let tripled = set.dilate(&int(3))?.minkowski_difference(set);
    Ok(thirds.union(&tripled))
}

/// The three intervals of the optimal configuration, in increasing order.
pub fn a0_intervals() -> [Interval; 3] {
    [
        Interval::open(rat(8, 177), rat(4, 59)),
        Interval::open(rat(28, 177), rat(14, 59)),
        Interval::open(rat(2, 3), int(1)),
    ]
}

/// `(8/177, 4/59) ∪ (28/177, 14/59) ∪ (2/3, 1)`, measure 77/177.
pub fn a0() -> IntervalSet {
    IntervalSet::normalize(a0_intervals())
}

/// The optimal value 77/177.
pub fn optimal_measure() -> Rational {
    rat(77, 177)
}

/// A₀ plus one endpoint of each interval. Bit 2 (most significant) picks the
/// endpoint of the first interval, bit 0 that of the third; a clear bit means
/// the left endpoint.
pub fn endpoint_augmentation(code: u8) -> IntervalSet {
    assert!(code < 8, "endpoint code is a 3-bit number");
    let points = a0_intervals().into_iter().enumerate().map(|(i, iv)| {
        let right = code >> (2 - i) & 1 == 1;
        Interval::point(if right { iv.hi } else { iv.lo })
    });
    a0().union(&IntervalSet::normalize(points))
}

/// The one endpoint combination `{8/177, 14/59, 2/3}` that is not
/// 3-sum-free, since `8/177 + 2/3 = 3 · 14/59`.
pub const EXCLUDED_CODE: u8 = 0b010;

/// Codes of A₁…A₇ in index order: the 3-bit codes ascending, skipping
/// [`EXCLUDED_CODE`].
pub const FAMILY_CODES: [u8; 7] = [0, 1, 3, 4, 5, 6, 7];

/// A member of the extremal family: index 0 is A₀ itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalFamily {
    pub index: usize,
    pub set: IntervalSet,
}

/// A₀ for `index == 0`, otherwise A_index from [`FAMILY_CODES`].
pub fn construct_extremal(index: usize) -> Result<IntervalSet> {
    let set = match index {
        0 => a0(),
        1..=7 => endpoint_augmentation(FAMILY_CODES[index - 1]),
        _ => return Err(Error::IndexOutOfRange(index)),
    };
    if let Some(witness) = sum_free_witness(&set, 3) {
        return Err(Error::NotSumFree { k: 3, witness: Box::new(witness) });
    }
    Ok(set)
}

pub fn extremal_family() -> Vec<ExtremalFamily> {
    (0..=7)
        .map(|index| ExtremalFamily { index, set: construct_extremal(index).expect("family members are 3-sum-free") })
        .collect()
}

/// Asymptotic density `(k−2)/(k²−2) · (k + 8/(k(k⁴−2k²−4)))` of the known
/// k-sum-free three-interval sets of integers, for `k >= 4`.
pub fn cg_density(k: u32) -> Result<Rational> {
    if k < 4 {
        return Err(Error::Precondition(format!("the density formula applies to k >= 4, got k = {k}")));
    }
    let k = int(k.into());
    let k2 = &k * &k;
    let k4 = &k2 * &k2;
    let inner = &k4 - int(2) * &k2 - int(4);
    let lead = (&k - int(2)) / (&k2 - int(2));
    Ok(lead * (&k + int(8) / (&k * inner)))
}
