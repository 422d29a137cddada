//! Simulated annealing over unions of at most `m` intervals in [0, 1].
//!
//! Every visited state is exactly 3-sum-free: a proposal is repaired by
//! deleting conflicting `z`-points before it is scored, so the measure
//! ceiling of 77/177 can be asserted exactly on anything the search returns.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::generate::{repair, REPAIR_ROUND_CAP};
use crate::interval::Interval;
use crate::par::{self, Execution};
use crate::rational::{best_approximation, height_bits, int, rat, to_f64, Rational};
use crate::set::IntervalSet;
use crate::sumfree::{conflict_set, is_k_sum_free};

/// Endpoints taller than this many bits are rounded inward to a dyadic grid.
const MAX_ENDPOINT_BITS: u64 = 96;
const ROUNDING_BITS: u32 = 64;
const START_TEMPERATURE: f64 = 5e-3;
const END_TEMPERATURE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizeConfig {
    /// Maximum number of components of a state.
    pub max_components: usize,
    pub seed: u64,
    /// Total proposals, split evenly across chains.
    pub iterations: u64,
    /// Independent annealing chains (restarts).
    pub chains: usize,
    pub exec: Execution,
}

impl OptimizeConfig {
    pub fn new(max_components: usize, seed: u64, iterations: u64) -> Self {
        Self { max_components, seed, iterations, chains: 8, exec: Execution::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizeResult {
    pub best: IntervalSet,
    pub measure: Rational,
    /// Index of the chain that produced `best` (lowest index wins ties).
    pub chain: usize,
    /// Accepted proposals summed over chains.
    pub accepted: u64,
}

/// Searches for a large 3-sum-free union of at most `m` intervals. The result
/// is a pure function of `(m, seed, iterations)`.
pub fn optimize(m: usize, seed: u64, iterations: u64) -> OptimizeResult {
    optimize_with(&OptimizeConfig::new(m, seed, iterations))
}

pub fn optimize_with(config: &OptimizeConfig) -> OptimizeResult {
    let m = config.max_components.max(1);
    let chains = config.chains.max(1);
    let per_chain = config.iterations / chains as u64;
    let mut master = ChaCha8Rng::seed_from_u64(config.seed);
    let seeds: Vec<u64> = (0..chains).map(|_| master.gen()).collect();
    let runs = par::map(config.exec, seeds, |s| run_chain(m, s, per_chain));
    let accepted = runs.iter().map(|r| r.1).sum();
    let (chain, (best, _)) = runs
        .into_iter()
        .enumerate()
        .fold(None::<(usize, (IntervalSet, u64))>, |acc, (i, run)| match acc {
            Some((j, prev)) if prev.0.measure() >= run.0.measure() => Some((j, prev)),
            _ => Some((i, run)),
        })
        .expect("at least one chain");
    assert!(is_k_sum_free(&best, 3), "optimizer produced an infeasible set");
    let measure = best.measure();
    OptimizeResult { best, measure, chain, accepted }
}

fn run_chain(m: usize, seed: u64, iterations: u64) -> (IntervalSet, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = feasible(random_start(&mut rng, m), m);
    let mut current_measure = current.measure();
    let mut best = current.clone();
    let mut best_measure = current_measure.clone();
    let mut accepted = 0;
    let ratio = END_TEMPERATURE / START_TEMPERATURE;
    for step in 0..iterations {
        let progress = step as f64 / iterations.max(1) as f64;
        let temperature = START_TEMPERATURE * ratio.powf(progress);
        // Finest step size grows from 2^-8 to 2^-40 over the run.
        let finest = 8 + (32.0 * progress) as u32;
        let candidate = feasible(propose(&mut rng, &current, m, finest), m);
        let measure = candidate.measure();
        let gain = to_f64(&(&measure - &current_measure));
        let accept = gain >= 0.0 || rng.gen::<f64>() < (gain / temperature).exp();
        if !accept {
            continue;
        }
        accepted += 1;
        current = candidate;
        current_measure = measure;
        if current_measure > best_measure {
            best = current.clone();
            best_measure = current_measure.clone();
        }
    }
    (best, accepted)
}

fn random_start<R: Rng>(rng: &mut R, m: usize) -> Vec<Interval> {
    (0..rng.gen_range(1..=m))
        .map(|_| {
            let a = rat(rng.gen_range(0..=64), 64);
            let b = rat(rng.gen_range(0..=64), 64);
            Interval::open(a.clone().min(b.clone()), a.max(b))
        })
        .collect()
}

fn step<R: Rng>(rng: &mut R, finest: u32) -> Rational {
    let k = rng.gen_range(2..=finest.max(2));
    let magnitude = Rational::new(BigInt::from(rng.gen_range(1..=3)), BigInt::one() << k);
    if rng.gen_bool(0.5) {
        magnitude
    } else {
        -magnitude
    }
}

fn clamp_unit(x: Rational) -> Rational {
    x.clamp(Rational::zero(), Rational::one())
}

/// Produces a raw (possibly infeasible) neighbour of `state`.
fn propose<R: Rng>(rng: &mut R, state: &IntervalSet, m: usize, finest: u32) -> Vec<Interval> {
    let mut comps = state.components().to_vec();
    if comps.is_empty() {
        return random_start(rng, m);
    }
    let i = rng.gen_range(0..comps.len());
    match rng.gen_range(0..100) {
        0..=54 => {
            let delta = step(rng, finest);
            let c = &mut comps[i];
            if rng.gen_bool(0.5) {
                c.lo = clamp_unit(&c.lo + delta);
            } else {
                c.hi = clamp_unit(&c.hi + delta);
            }
        }
        55..=69 => {
            let max_den = BigInt::from(10u32).pow(rng.gen_range(1..=7));
            let c = &mut comps[i];
            if rng.gen_bool(0.5) {
                c.lo = best_approximation(&c.lo, &max_den);
            } else {
                c.hi = best_approximation(&c.hi, &max_den);
            }
        }
        70..=79 => {
            let delta = step(rng, finest);
            let c = &mut comps[i];
            c.lo = clamp_unit(&c.lo + &delta);
            c.hi = clamp_unit(&c.hi + &delta);
        }
        80..=87 => {
            // Stretch about the origin, clipped to [0, 1].
            let factor = int(1) + step(rng, finest).abs();
            let factor = if rng.gen_bool(0.5) { factor } else { factor.recip() };
            for c in &mut comps {
                c.lo = clamp_unit(&c.lo * &factor);
                c.hi = clamp_unit(&c.hi * &factor);
            }
        }
        88..=93 if comps.len() < m => {
            let lo = rat(rng.gen_range(0..=1000), 1000);
            let hi = clamp_unit(&lo + step(rng, finest).abs());
            comps.push(Interval::open(lo, hi));
        }
        88..=93 if i + 1 < comps.len() => {
            let next = comps.remove(i + 1);
            comps[i].hi = next.hi;
            comps[i].hi_closed = next.hi_closed;
        }
        _ => {
            let c = &mut comps[i];
            c.lo_closed = !c.lo_closed;
            c.hi_closed = rng.gen_bool(0.5);
        }
    }
    for c in &mut comps {
        round_inward(c);
    }
    comps
}

fn round_inward(c: &mut Interval) {
    let grid = Rational::from_integer(BigInt::one() << ROUNDING_BITS);
    if height_bits(&c.lo) > MAX_ENDPOINT_BITS {
        c.lo = (&c.lo * &grid).ceil() / &grid;
        c.lo_closed = false;
    }
    if height_bits(&c.hi) > MAX_ENDPOINT_BITS {
        c.hi = (&c.hi * &grid).floor() / &grid;
        c.hi_closed = false;
    }
}

/// Keeps the `m` longest components (earlier ones win ties).
fn cap_components(set: IntervalSet, m: usize) -> IntervalSet {
    if set.len() <= m {
        return set;
    }
    let mut comps: Vec<(usize, Interval)> = set.into_components().into_iter().enumerate().collect();
    comps.sort_by(|(i, a), (j, b)| b.length().cmp(&a.length()).then(i.cmp(j)));
    comps.truncate(m);
    IntervalSet::normalize(comps.into_iter().map(|(_, c)| c))
}

/// Normalizes, caps and repairs a proposal into a feasible state.
fn feasible(raw: Vec<Interval>, m: usize) -> IntervalSet {
    let set = cap_components(IntervalSet::normalize(raw), m);
    let repaired = match repair(set.clone(), REPAIR_ROUND_CAP) {
        Some((s, _)) => s,
        None => set.difference(&conflict_set(&set, 3)),
    };
    let capped = cap_components(repaired, m);
    debug_assert!(is_k_sum_free(&capped, 3));
    capped
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumfree::optimal_measure;

    #[test]
    fn single_interval_reaches_one_third() {
        let r = optimize(1, 7, 4_000);
        assert_eq!(r.measure, rat(1, 3));
        assert!(r.best.len() <= 1);
        assert!(is_k_sum_free(&r.best, 3));
    }

    #[test]
    fn deterministic_across_execution_modes() {
        let mut cfg = OptimizeConfig::new(3, 11, 2_000);
        cfg.exec = Execution::Sequential;
        let seq = optimize_with(&cfg);
        cfg.exec = Execution::Parallel;
        let par = optimize_with(&cfg);
        assert_eq!(seq, par);
        assert!(seq.measure <= optimal_measure());
        assert!(seq.best.len() <= 3);
    }

    #[test]
    fn inward_rounding_shrinks() {
        let tall = Rational::new(BigInt::one(), BigInt::from(3).pow(80));
        let mut c = Interval::closed(tall.clone(), int(1) - &tall);
        round_inward(&mut c);
        assert!(c.lo >= tall && c.hi <= int(1) - tall);
        assert!(!c.lo_closed && !c.hi_closed);
    }

    #[test]
    fn cap_keeps_longest() {
        let set = IntervalSet::normalize([
            Interval::open(rat(0, 1), rat(1, 10)),
            Interval::open(rat(2, 10), rat(5, 10)),
            Interval::open(rat(6, 10), rat(8, 10)),
        ]);
        let capped = cap_components(set, 2);
        assert_eq!(capped.measure(), rat(5, 10));
    }
}
