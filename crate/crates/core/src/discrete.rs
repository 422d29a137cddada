//! Maximum k-sum-free subsets of `{1, …, n}` by exhaustive branch and bound.

use std::fmt;

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::rational::{rat, Rational};
use crate::set::IntervalSet;
use crate::sumfree::cg_density;

/// Largest `n` the bitmask search can represent.
pub const MAX_SEARCH_N: u32 = 64;
pub const DEFAULT_BUDGET: u32 = 34;
pub const DEFAULT_STORE_CAP: usize = 10_000;

/// A set of integers in `[1, n]`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntSet {
    pub n: u32,
    elements: Vec<u32>,
}

impl IntSet {
    /// Sorts and deduplicates; panics on elements outside `[1, n]`.
    pub fn new(n: u32, mut elements: Vec<u32>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        assert!(elements.iter().all(|&e| (1..=n).contains(&e)), "elements must lie in [1, {n}]");
        Self { n, elements }
    }

    pub fn odds(n: u32) -> Self {
        Self::new(n, (1..=n).step_by(2).collect())
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    fn from_mask(n: u32, mask: u64) -> Self {
        Self { n, elements: (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect() }
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Returns `(x, y, z)` with `x <= y`, `x + y = k z`, all in `set`, or `None`.
/// Triples are scanned by increasing `z`, then increasing `x`.
pub fn is_k_sum_free_int(set: &IntSet, k: u32) -> Option<(u32, u32, u32)> {
    assert!(k >= 1, "k must be positive");
    for &z in set.elements() {
        let target = u64::from(k) * u64::from(z);
        for &x in set.elements() {
            let x64 = u64::from(x);
            if 2 * x64 > target {
                break;
            }
            let y = target - x64;
            if y <= u64::from(set.n) && set.contains(y as u32) {
                return Some((x, y as u32, z));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `n` accepted; beyond it the search refuses to run.
    pub budget: u32,
    /// Maximum number of extremal sets kept when enumerating.
    pub store_cap: usize,
    pub exec: Execution,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, store_cap: DEFAULT_STORE_CAP, exec: Execution::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub n: u32,
    pub k: u32,
    pub max_size: usize,
    /// Exact number of k-sum-free sets of size `max_size`.
    pub extremal_count: u64,
    /// Up to `store_cap` extremal sets in search order, when enumerating.
    pub extremal_sets: Option<Vec<IntSet>>,
    pub nodes_explored: u64,
}

/// Precomputed conflict structure for `{1..n}` and a fixed `k`.
struct Problem {
    n: u32,
    k: u64,
    /// Pairs `{x, y}` that form a solution on their own, as bit masks.
    pair_edges: Vec<u64>,
}

impl Problem {
    fn new(n: u32, k: u32) -> Self {
        let k = u64::from(k);
        let mut pair_edges = Vec::new();
        for x in 1..=u64::from(n) {
            // x + x = k y
            if (2 * x) % k == 0 {
                let y = 2 * x / k;
                if y != x && (1..=u64::from(n)).contains(&y) {
                    pair_edges.push(bit(x) | bit(y));
                }
            }
            // x + y = k x
            let y = (k - 1) * x;
            if y != x && (1..=u64::from(n)).contains(&y) {
                pair_edges.push(bit(x) | bit(y));
            }
        }
        pair_edges.sort_unstable();
        pair_edges.dedup();
        Self { n, k, pair_edges }
    }

    fn contains(mask: u64, v: u64) -> bool {
        (1..=64).contains(&v) && mask & bit(v) != 0
    }

    /// Whether `c` can join `chosen` without creating a solution.
    fn can_add(&self, chosen: u64, c: u64) -> bool {
        let with = chosen | bit(c);
        // c as z: x + y = k c.
        let target = self.k * c;
        let mut rest = with;
        while rest != 0 {
            let x = u64::from(rest.trailing_zeros()) + 1;
            rest &= rest - 1;
            if 2 * x > target {
                break;
            }
            if Self::contains(with, target - x) {
                return false;
            }
        }
        // c as x (or both x and y): c + y = k z with z in the new set.
        let mut rest = with;
        while rest != 0 {
            let z = u64::from(rest.trailing_zeros()) + 1;
            rest &= rest - 1;
            let kz = self.k * z;
            if kz > c && Self::contains(with, kz - c) {
                return false;
            }
        }
        true
    }

    /// `|candidates|` minus a greedy matching of self-contained pair conflicts.
    fn upper_bound(&self, candidates: u64) -> u32 {
        let mut free = candidates;
        let mut matched = 0;
        for &edge in &self.pair_edges {
            if free & edge == edge {
                free &= !edge;
                matched += 1;
            }
        }
        candidates.count_ones() - matched
    }

    fn greedy_lower_bound(&self) -> u32 {
        let mut best = 0;
        let starts: [Box<dyn Fn(u64) -> bool>; 2] = [Box::new(|_| true), Box::new(|x| x % 2 == 1)];
        for keep in starts.iter() {
            let mut chosen = 0u64;
            for c in (1..=u64::from(self.n)).rev().filter(|&c| keep(c)) {
                if self.can_add(chosen, c) {
                    chosen |= bit(c);
                }
            }
            best = best.max(chosen.count_ones());
        }
        best
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn filter(&self, chosen: u64, candidates: u64) -> u64 {
        let mut out = 0;
        let mut rest = candidates;
        while rest != 0 {
            let c = u64::from(rest.trailing_zeros()) + 1;
            rest &= rest - 1;
            if self.can_add(chosen, c) {
                out |= bit(c);
            }
        }
        out
    }
}

fn bit(v: u64) -> u64 {
    1u64 << (v - 1)
}

fn highest(mask: u64) -> u64 {
    64 - u64::from(mask.leading_zeros())
}

#[derive(Clone, Copy)]
struct Node {
    chosen: u64,
    candidates: u64,
}

struct Tally {
    best: u32,
    count: u64,
    sets: Vec<u64>,
    nodes: u64,
    cap: usize,
    keep_sets: bool,
}

impl Tally {
    fn record(&mut self, chosen: u64) {
        let size = chosen.count_ones();
        if size > self.best {
            self.best = size;
            self.count = 0;
            self.sets.clear();
        }
        if size == self.best {
            self.count += 1;
            if self.keep_sets && self.sets.len() < self.cap {
                self.sets.push(chosen);
            }
        }
    }

    fn search(&mut self, problem: &Problem, node: Node) {
        self.nodes += 1;
        if node.candidates == 0 {
            self.record(node.chosen);
            return;
        }
        if node.chosen.count_ones() + problem.upper_bound(node.candidates) < self.best {
            return;
        }
        let c = highest(node.candidates);
        let rest = node.candidates & !bit(c);
        let chosen = node.chosen | bit(c);
        self.search(problem, Node { chosen, candidates: problem.filter(chosen, rest) });
        self.search(problem, Node { chosen: node.chosen, candidates: rest });
    }
}

/// Expands the top of the tree breadth-first into independent subproblems.
fn split(problem: &Problem, root: Node, floor: u32, target: usize) -> (Vec<Node>, u64) {
    let mut frontier = vec![root];
    let mut nodes = 0;
    while frontier.len() < target {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        let mut grew = false;
        for node in frontier {
            if node.candidates == 0 || node.chosen.count_ones() + problem.upper_bound(node.candidates) < floor {
                next.push(node);
                continue;
            }
            grew = true;
            nodes += 1;
            let c = highest(node.candidates);
            let rest = node.candidates & !bit(c);
            let chosen = node.chosen | bit(c);
            next.push(Node { chosen, candidates: problem.filter(chosen, rest) });
            next.push(Node { chosen: node.chosen, candidates: rest });
        }
        frontier = next;
        if !grew {
            break;
        }
    }
    (frontier, nodes)
}

/// Exact maximum size (and number) of k-sum-free subsets of `{1..n}`.
///
/// Results, including `nodes_explored`, do not depend on `config.exec`.
pub fn max_k_sum_free(n: u32, k: u32, enumerate: bool, config: &SearchConfig) -> Result<SearchResult> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let budget = config.budget.min(MAX_SEARCH_N);
    if n > budget {
        return Err(Error::BudgetExceeded { n, budget });
    }
    let problem = Problem::new(n, k);
    let floor = problem.greedy_lower_bound();
    let root = Node { chosen: 0, candidates: problem.filter(0, problem.full_mask()) };
    let (tasks, split_nodes) = split(&problem, root, floor, 256);
    let tallies = par::map(config.exec, tasks, |node| {
        let mut t =
            Tally { best: floor, count: 0, sets: Vec::new(), nodes: 0, cap: config.store_cap, keep_sets: enumerate };
        t.search(&problem, node);
        t
    });
    let max = tallies.iter().filter(|t| t.count > 0).map(|t| t.best).max().unwrap_or(floor);
    let mut count = 0;
    let mut sets = Vec::new();
    let mut nodes = split_nodes;
    for t in tallies {
        nodes += t.nodes;
        if t.best == max {
            count += t.count;
            for s in t.sets {
                if sets.len() < config.store_cap {
                    sets.push(IntSet::from_mask(n, s));
                }
            }
        }
    }
    Ok(SearchResult {
        n,
        k,
        max_size: max as usize,
        extremal_count: count,
        extremal_sets: enumerate.then_some(sets),
        nodes_explored: nodes,
    })
}

/// `{ i in 1..=n : i/n in A }`.
pub fn discretize(set: &IntervalSet, n: u32) -> IntSet {
    let elements = (1..=n).filter(|&i| set.contains(&rat(i.into(), n.into()))).collect();
    IntSet::new(n, elements)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub k: u32,
    pub n: u32,
    pub max_size: usize,
    /// `max_size / n`.
    pub ratio: Rational,
    pub cg_density: Rational,
}

/// Exhaustive maximum density at a finite `n` next to the asymptotic density
/// formula. The two are not expected to agree at small `n`.
pub fn density_report(k: u32, n: u32, config: &SearchConfig) -> Result<DensityReport> {
    let cg_density = cg_density(k)?;
    let result = max_k_sum_free(n, k, false, config)?;
    Ok(DensityReport { k, n, max_size: result.max_size, ratio: rat(result.max_size as i64, n.into()), cg_density })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;
    use crate::rational::int;

    fn naive(n: u32, k: u32) -> (usize, u64) {
        let mut best = 0;
        let mut count = 0;
        for mask in 0u64..(1 << n) {
            let set = IntSet::from_mask(n, mask);
            if is_k_sum_free_int(&set, k).is_some() {
                continue;
            }
            match set.len().cmp(&best) {
                std::cmp::Ordering::Greater => {
                    best = set.len();
                    count = 1;
                }
                std::cmp::Ordering::Equal => count += 1,
                std::cmp::Ordering::Less => {}
            }
        }
        (best, count)
    }

    #[test]
    fn predicate_examples() {
        let odds = IntSet::odds(10);
        assert_eq!(is_k_sum_free_int(&odds, 3), None);
        assert_eq!(is_k_sum_free_int(&IntSet::new(2, vec![1, 2]), 3), Some((1, 2, 1)));
        assert_eq!(is_k_sum_free_int(&IntSet::new(4, vec![1, 3, 4]), 3), None);
        assert_eq!(is_k_sum_free_int(&IntSet::new(5, vec![5]), 2), Some((5, 5, 5)));
    }

    #[test]
    fn small_cases_match_naive() {
        let cfg = SearchConfig::default();
        for k in 1..=5 {
            for n in 1..=12 {
                let r = max_k_sum_free(n, k, true, &cfg).unwrap();
                assert_eq!((r.max_size, r.extremal_count), naive(n, k), "n={n} k={k}");
                let sets = r.extremal_sets.unwrap();
                assert_eq!(sets.len() as u64, r.extremal_count);
                assert!(sets.iter().all(|s| s.len() == r.max_size && is_k_sum_free_int(s, k).is_none()));
            }
        }
    }

    #[test]
    fn anomaly_at_four() {
        let r = max_k_sum_free(4, 3, true, &SearchConfig::default()).unwrap();
        assert_eq!(r.max_size, 3);
        assert!(r.extremal_sets.unwrap().contains(&IntSet::new(4, vec![1, 3, 4])));
    }

    #[test]
    fn ten_gives_five() {
        assert_eq!(max_k_sum_free(10, 3, false, &SearchConfig::default()).unwrap().max_size, 5);
    }

    #[test]
    fn refuses_beyond_budget() {
        let cfg = SearchConfig { budget: 20, ..SearchConfig::default() };
        assert_eq!(max_k_sum_free(21, 3, false, &cfg), Err(Error::BudgetExceeded { n: 21, budget: 20 }));
    }

    #[test]
    fn execution_mode_does_not_change_results() {
        let seq = SearchConfig { exec: Execution::Sequential, ..SearchConfig::default() };
        let par = SearchConfig { exec: Execution::Parallel, ..SearchConfig::default() };
        assert_eq!(max_k_sum_free(18, 3, true, &seq).unwrap(), max_k_sum_free(18, 3, true, &par).unwrap());
    }

    #[test]
    fn discretize_examples() {
        let top = IntervalSet::from(Interval::open(rat(2, 3), int(1)));
        assert_eq!(discretize(&top, 9), IntSet::new(9, vec![7, 8]));
        assert!(discretize(&IntervalSet::empty(), 17).is_empty());
        let a0 = crate::sumfree::a0();
        let d = discretize(&a0, 177);
        assert_eq!(is_k_sum_free_int(&d, 3), None);
        assert!(rat(d.len() as i64, 177) <= rat(77, 177));
    }

    #[test]
    fn density_examples() {
        let cfg = SearchConfig::default();
        let r = density_report(4, 1, &cfg).unwrap();
        assert_eq!((r.max_size, r.ratio.clone()), (1, int(1)));
        assert_eq!(r.cg_density, rat(63, 110));
        assert!(density_report(5, 12, &cfg).is_ok());
        assert!(density_report(3, 12, &cfg).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(IntSet::odds(9).to_string(), "{1,3,5,7,9}");
        assert_eq!(IntSet::new(3, vec![]).to_string(), "{}");
    }
}
