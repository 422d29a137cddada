//! Batch verification over many generated sets.

use std::ops::Range;

use crate::bounds::{check_extremal_containment, lemma_report, trace_theorem1, TraceCase};
use crate::generate::random_sum_free;
use crate::par::{self, Execution};
use crate::rational::{rat, Rational};
use crate::sumfree::{is_k_sum_free, optimal_measure};

/// Outcome of checking one generated set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedOutcome {
    pub seed: u64,
    pub measure: Rational,
    pub converged: bool,
    pub checks: usize,
    pub traced: bool,
    pub extremal: bool,
    /// Descriptions of every failed check; empty on success.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub sets: usize,
    pub converged: usize,
    pub checks: usize,
    /// Sets with measure at least 5/12 after rescaling (full trace run).
    pub traced: usize,
    pub extremal: usize,
    pub max_measure: Rational,
    pub failures: Vec<(u64, String)>,
}

impl SweepSummary {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Generates one set per seed and runs every applicable check on it.
pub fn check_seed(seed: u64, max_components: usize) -> SeedOutcome {
    let generated = random_sum_free(seed, max_components);
    let set = generated.set;
    let measure = set.measure();
    let mut failures = Vec::new();
    let mut checks = 2;
    let mut traced = false;
    let mut extremal = false;
    if !is_k_sum_free(&set, 3) {
        failures.push(format!("generated set {set} is not 3-sum-free"));
    }
    if measure > optimal_measure() {
        failures.push(format!("measure of {set} exceeds 77/177"));
    }
    if !set.is_empty() && set.measure() > rat(0, 1) {
        match lemma_report(&set, true) {
            Ok(report) => {
                checks += report.checks.len();
                failures.extend(report.checks.iter().filter(|c| !c.pass).map(|c| c.to_string()));
                match trace_theorem1(&report.set, false) {
                    Ok(trace) => {
                        checks += trace.checks.len();
                        traced = trace.case != TraceCase::EarlyExit;
                        failures.extend(trace.checks.iter().filter(|c| !c.pass).map(|c| c.to_string()));
                    }
                    Err(e) => failures.push(format!("trace: {e}")),
                }
            }
            Err(e) => failures.push(format!("lemmas: {e}")),
        }
        match check_extremal_containment(&set) {
            Ok(r) => {
                checks += 1;
                extremal = r.is_extremal;
                if r.violation {
                    failures.push(format!("extremal set {set} escapes every A_i"));
                }
            }
            Err(e) => failures.push(format!("extremal: {e}")),
        }
    }
    SeedOutcome { seed, measure, converged: generated.converged, checks, traced, extremal, failures }
}

pub fn sweep_generated(seeds: Range<u64>, max_components: usize, exec: Execution) -> SweepSummary {
    let outcomes = par::map(exec, seeds.collect(), |s| check_seed(s, max_components));
    let mut summary = SweepSummary {
        sets: outcomes.len(),
        converged: 0,
        checks: 0,
        traced: 0,
        extremal: 0,
        max_measure: rat(0, 1),
        failures: Vec::new(),
    };
    for o in outcomes {
        summary.converged += usize::from(o.converged);
        summary.checks += o.checks;
        summary.traced += usize::from(o.traced);
        summary.extremal += usize::from(o.extremal);
        if o.measure > summary.max_measure {
            summary.max_measure = o.measure;
        }
        summary.failures.extend(o.failures.into_iter().map(|f| (o.seed, f)));
    }
    summary
}
