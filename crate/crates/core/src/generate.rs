//! Seeded random 3-sum-free subsets of [0, 1] for property testing.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::interval::Interval;
use crate::rational::{int, rat, Rational};
use crate::set::IntervalSet;
use crate::sumfree::{a0_intervals, conflict_set};

/// Repair rounds before the generator gives up and returns the empty set.
pub const REPAIR_ROUND_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedSet {
    pub seed: u64,
    pub set: IntervalSet,
    /// Conflict components removed before the fixed point was reached.
    pub rounds: usize,
    /// False when the round cap was hit; `set` is then empty.
    pub converged: bool,
}

/// Removes conflicting `z`-points until `A ∩ (1/3)(A + A)` is empty.
///
/// Each round deletes only the lowest component of the conflict set, since
/// shrinking `A` also shrinks `(1/3)(A + A)` and may resolve other conflicts
/// for free. Returns the repaired set and the number of rounds, or `None` if
/// `cap` rounds were not enough.
pub fn repair(mut set: IntervalSet, cap: usize) -> Option<(IntervalSet, usize)> {
    for round in 0..=cap {
        let conflicts = conflict_set(&set, 3);
        let Some(lowest) = conflicts.components().first() else {
            return Some((set, round));
        };
        if round == cap {
            break;
        }
        set = set.difference(&IntervalSet::from(lowest.clone()));
    }
    None
}

/// Samples a random interval union in [0, 1] and repairs it into a 3-sum-free
/// set. The output depends only on `seed` and `max_components`.
pub fn random_sum_free(seed: u64, max_components: usize) -> GeneratedSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_components = max_components.max(1);
    let raw = match rng.gen_range(0..3) {
        0 => uniform_pieces(&mut rng, max_components),
        1 => perturbed_optimum(&mut rng, max_components),
        _ => top_heavy(&mut rng, max_components),
    };
    let sample = IntervalSet::normalize(raw);
    match repair(sample, REPAIR_ROUND_CAP) {
        Some((set, rounds)) => GeneratedSet { seed, set, rounds, converged: true },
        None => GeneratedSet { seed, set: IntervalSet::empty(), rounds: REPAIR_ROUND_CAP, converged: false },
    }
}

fn unit_point<R: Rng>(rng: &mut R, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    rat(rng.gen_range(0..=den), den)
}

fn random_interval<R: Rng>(rng: &mut R, lo: Rational, hi: Rational) -> Interval {
    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    Interval::new(lo, rng.gen_bool(0.5), hi, rng.gen_bool(0.5))
}

fn uniform_pieces<R: Rng>(rng: &mut R, max_components: usize) -> Vec<Interval> {
    let count = rng.gen_range(1..=max_components);
    (0..count)
        .map(|_| {
            let lo = unit_point(rng, 60);
            let hi = unit_point(rng, 60);
            random_interval(rng, lo, hi)
        })
        .collect()
}

/// The optimal configuration with jittered endpoints, an optional global
/// shrink, and a few random extra pieces.
fn perturbed_optimum<R: Rng>(rng: &mut R, max_components: usize) -> Vec<Interval> {
    let shrink = if rng.gen_bool(0.5) { int(1) } else { rat(rng.gen_range(900..=1000), 1000) };
    let jitter = |rng: &mut R, x: &Rational| -> Rational {
        let delta = rat(rng.gen_range(-20..=20), 10_000);
        let y = (x + delta) * &shrink;
        y.clamp(int(0), int(1))
    };
    let mut pieces: Vec<Interval> = a0_intervals()
        .iter()
        .map(|iv| {
            let lo = jitter(rng, &iv.lo);
            let hi = jitter(rng, &iv.hi);
            random_interval(rng, lo, hi)
        })
        .collect();
    let extra = rng.gen_range(0..=max_components.saturating_sub(3).min(2));
    for _ in 0..extra {
        let lo = unit_point(rng, 240);
        let hi = &lo + rat(rng.gen_range(1..=10), 1000);
        pieces.push(random_interval(rng, lo, hi.min(int(1))));
    }
    pieces
}

fn top_heavy<R: Rng>(rng: &mut R, max_components: usize) -> Vec<Interval> {
    let start = rat(rng.gen_range(500..=800), 1000);
    let mut pieces = vec![random_interval(rng, start, int(1))];
    for _ in 1..rng.gen_range(1..=max_components) {
        let lo = unit_point(rng, 120) * rat(2, 3);
        let hi = &lo + rat(rng.gen_range(1..=60), 1000);
        pieces.push(random_interval(rng, lo, hi));
    }
    pieces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumfree::{is_k_sum_free, optimal_measure};

    #[test]
    fn outputs_are_sum_free_and_bounded() {
        for seed in 0..300 {
            let g = random_sum_free(seed, 5);
            assert!(is_k_sum_free(&g.set, 3), "seed {seed}: {}", g.set);
            assert!(g.set.measure() <= optimal_measure());
            if let (Ok(lo), Ok(hi)) = (g.set.inf(), g.set.sup()) {
                assert!(lo >= int(0) && hi <= int(1));
            }
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(random_sum_free(42, 4), random_sum_free(42, 4));
    }

    #[test]
    fn repair_of_unit_interval() {
        let (set, rounds) = repair(IntervalSet::from(Interval::open(int(0), int(1))), REPAIR_ROUND_CAP).unwrap();
        assert_eq!(set, IntervalSet::from(Interval::new(rat(2, 3), true, int(1), false)));
        assert_eq!(rounds, 1);
    }

    #[test]
    fn repair_gives_up_at_cap() {
        assert!(repair(IntervalSet::from(Interval::open(int(0), int(1))), 0).is_none());
    }
}
