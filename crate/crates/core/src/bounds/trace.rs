use std::collections::BTreeMap;

use num_traits::Zero;

use super::lemmas::{check_lem0, check_lem_mr, check_majreste, lem0_internal_checks, lem0_internal_sets};
use super::{prepare, Check, LemmaContext};
use crate::error::Result;
use crate::interval::Interval;
use crate::rational::{int, rat, Rational};
use crate::set::IntervalSet;
use crate::sumfree::optimal_measure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceCase {
    /// `μ(A) < 5/12`: nothing to trace.
    EarlyExit,
    /// `μ(R) = 0`; the bound `μ(A) <= 1/3` follows directly.
    Degenerate,
    /// `eta1 + 2 eta2 <= 1/3` and `R₀ = ∅`.
    Case1R0Empty,
    /// `eta1 + 2 eta2 <= 1/3` and `R₀ ≠ ∅`.
    Case1R0Nonempty,
    /// `eta1 + 2 eta2 > 1/3`.
    Case2,
}

impl TraceCase {
    pub fn label(self) -> &'static str {
        match self {
            TraceCase::EarlyExit => "early-exit",
            TraceCase::Degenerate => "degenerate",
            TraceCase::Case1R0Empty => "Case1-R0-empty",
            TraceCase::Case1R0Nonempty => "Case1-R0-nonempty",
            TraceCase::Case2 => "Case2",
        }
    }
}

/// Every quantity and inequality of the 77/177 upper-bound argument,
/// evaluated exactly on one set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    pub set: IntervalSet,
    pub rescaled: bool,
    pub context: LemmaContext,
    pub case: TraceCase,
    /// `R = A ∩ [a, 2/9 + a/3]`.
    pub lower_block: IntervalSet,
    /// `r = sup R`.
    pub r: Option<Rational>,
    pub eta1: Option<Rational>,
    pub eta2: Option<Rational>,
    /// `R₀ = R ∩ [a, 2r/9 + a/3]`.
    pub lower_core: Option<IntervalSet>,
    /// `b = sup R₀`.
    pub b: Option<Rational>,
    pub internal_sets: BTreeMap<String, IntervalSet>,
    pub checks: Vec<Check>,
    /// Upper bounds on `μ(A)` produced along the way, by name.
    pub bounds: Vec<(String, Rational)>,
    /// The smallest of `bounds`.
    pub final_bound: Rational,
}

impl ProofTrace {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// True when the final bound equals `μ(A)`.
    pub fn is_tight(&self) -> bool {
        self.final_bound == self.set.measure()
    }
}

/// `η₁ = inf S₁ − 2/3`, `η₂ = 1/3 − η₁ − μ(S₁)` for `S₁ = S ∩ [2/3, 1]`,
/// with the empty-`S₁` convention of [`LemmaContext`].
fn eta_pair(scaled: &IntervalSet) -> (Rational, Rational) {
    let top = scaled.intersect_interval(Interval::closed(rat(2, 3), int(1)));
    let eta1 = top.inf().unwrap_or_else(|_| int(1)) - rat(2, 3);
    let eta2 = rat(1, 3) - &eta1 - top.measure();
    (eta1, eta2)
}

/// Traces the optimality argument on a 3-sum-free `A ⊂ [0, 1]`.
///
/// With `auto_rescale`, `A` is first dilated so that `sup A = 1`.
pub fn trace_theorem1(set: &IntervalSet, auto_rescale: bool) -> Result<ProofTrace> {
    let (set, rescaled) = prepare(set, auto_rescale)?;
    let context = LemmaContext::new(&set)?;
    let mu_a = set.measure();
    let a = context.a.clone();
    let third = rat(1, 3);

    let internal_sets: BTreeMap<String, IntervalSet> =
        lem0_internal_sets(&set, &context).into_iter().map(|(n, s)| (n.to_string(), s)).collect();
    let lower_block = set.intersect_interval(Interval::closed(a.clone(), context.cut()));
    let mut trace = ProofTrace {
        set: set.clone(),
        rescaled,
        context: context.clone(),
        case: TraceCase::EarlyExit,
        lower_block: lower_block.clone(),
        r: None,
        eta1: None,
        eta2: None,
        lower_core: None,
        b: None,
        internal_sets,
        checks: Vec::new(),
        bounds: vec![("optimum".into(), optimal_measure())],
        final_bound: optimal_measure(),
    };

    if mu_a < rat(5, 12) {
        trace.checks.push(Check::lt("mu(A) < 5/12", mu_a, rat(5, 12)));
        trace.bounds.push(("mu(A) < 5/12".into(), rat(5, 12)));
        return Ok(finish(trace));
    }

    trace.checks.push(check_lem_mr(&set)?);
    let lem0 = check_lem0(&set)?;
    trace.checks.push(Check::le("lemrec: eps1 + 2 eps2 <= 1/3", &context.eps1 + int(2) * &context.eps2, third.clone()));
    trace.checks.push(Check::le("lem0: mu(A above cut) <= lem0 bound", lem0.value.clone(), lem0.bound));
    trace.checks.push(Check::le("lemrec: mu(A above cut) <= 1/3", lem0.value, third.clone()));
    trace.checks.extend(lem0_internal_checks(&set, &context));

    let mu_r = lower_block.measure();
    trace.checks.push(Check::le("mu(A) <= 1/3 + mu(R)", mu_a.clone(), &third + &mu_r));
    let block_room = rat(2, 9) - int(2) * &a / int(3);
    trace.checks.push(Check::le("mu(R) <= 2/9 - 2a/3", mu_r.clone(), block_room.clone()));
    trace.bounds.push(("1/3 + mu(R)".into(), &third + &mu_r));
    trace.bounds.push(("1/3 + 2/9 - 2a/3".into(), &third + &block_room));

    if mu_r.is_zero() {
        trace.case = TraceCase::Degenerate;
        return Ok(finish(trace));
    }

    let r = lower_block.sup()?;
    let scaled = lower_block.dilate(&r.recip())?;
    let (eta1, eta2) = eta_pair(&scaled);
    trace.r = Some(r.clone());
    trace.eta1 = Some(eta1.clone());
    trace.eta2 = Some(eta2.clone());

    if &eta1 + int(2) * &eta2 <= third {
        case_one(&mut trace, &scaled, &r, &mu_r)?;
    } else {
        case_two(&mut trace, &scaled, &r, &mu_r, &eta1, &eta2)?;
    }
    Ok(finish(trace))
}

fn case_one(trace: &mut ProofTrace, scaled: &IntervalSet, r: &Rational, mu_r: &Rational) -> Result<()> {
    let a = trace.context.a.clone();
    let third = rat(1, 3);

    // The upper-part bound applied to R' = R / r.
    let inner = check_lem0(scaled)?;
    trace.checks.push(Check::le("lem0(R'): mu(R' above cut) <= lem0 bound", inner.value.clone(), inner.bound.clone()));
    let inner_cut = rat(2, 9) + &a / (int(3) * r);
    let inner_low = scaled.intersect_interval(Interval::closed(&a / r, inner_cut)).measure();
    trace.checks.push(Check::le(
        "mu(R') <= 1/3 + mu(R' cap [a/r, 2/9 + a/(3r)])",
        scaled.measure(),
        &third + inner_low,
    ));

    let core_top = int(2) * r / int(9) + &a / int(3);
    let core = trace.lower_block.intersect_interval(Interval::closed(a.clone(), core_top));
    let mu_core = core.measure();
    trace.checks.push(Check::le("mu(R) <= r/3 + mu(R0)", mu_r.clone(), r / int(3) + &mu_core));
    trace.bounds.push(("1/3 + r/3 + mu(R0)".into(), &third + r / int(3) + &mu_core));

    if core.is_empty() {
        trace.case = TraceCase::Case1R0Empty;
        let room = (r / int(3)).min(rat(2, 9) - int(2) * &a / int(3));
        trace.checks.push(Check::le("mu(R) <= min(r/3, 2/9 - 2a/3)", mu_r.clone(), room.clone()));
        trace.checks.push(Check::le("min(r/3, 2/9 - 2a/3) <= 2/21", room.clone(), rat(2, 21)));
        trace.bounds.push(("1/3 + min(r/3, 2/9 - 2a/3)".into(), &third + room));
        trace.bounds.push(("3/7".into(), rat(3, 7)));
        trace.lower_core = Some(core);
        return Ok(());
    }

    trace.case = TraceCase::Case1R0Nonempty;
    let b = core.sup()?;
    let mut on_core = check_majreste(&core)?;
    on_core.name = "majreste(R0): mu(R0) <= (2 sup R0 - inf R0)/4".into();
    trace.checks.push(on_core);
    let core_room = ((int(2) * &b - &a) / int(4)).min(&b - &a);
    trace.checks.push(Check::le("mu(R0) <= min((2b - a)/4, b - a)", mu_core.clone(), core_room.clone()));
    let core_room_r = (r / int(9) - &a / int(12)).min(int(2) * r / int(9) - int(2) * &a / int(3));
    trace.checks.push(Check::le(
        "min((2b - a)/4, b - a) <= min(r/9 - a/12, 2r/9 - 2a/3)",
        core_room.clone(),
        core_room_r,
    ));
    let block_r = (int(4) * r / int(9) - &a / int(12)).min(int(5) * r / int(9) - int(2) * &a / int(3));
    trace.checks.push(Check::le("mu(R) <= min(4r/9 - a/12, 5r/9 - 2a/3)", mu_r.clone(), block_r.clone()));
    let block_a = (rat(8, 81) + rat(7, 108) * &a).min(rat(10, 81) - rat(13, 27) * &a);
    trace.checks.push(Check::le(
        "min(4r/9 - a/12, 5r/9 - 2a/3) <= min(8/81 + 7a/108, 10/81 - 13a/27)",
        block_r.clone(),
        block_a.clone(),
    ));
    trace.checks.push(Check::le(
        "1/3 + min(8/81 + 7a/108, 10/81 - 13a/27) <= 77/177",
        &third + &block_a,
        optimal_measure(),
    ));
    trace.bounds.push(("1/3 + r/3 + min((2b - a)/4, b - a)".into(), &third + r / int(3) + core_room));
    trace.bounds.push(("1/3 + min(4r/9 - a/12, 5r/9 - 2a/3)".into(), &third + block_r));
    trace.bounds.push(("1/3 + min(8/81 + 7a/108, 10/81 - 13a/27)".into(), &third + block_a));
    trace.lower_core = Some(core);
    trace.b = Some(b);
    Ok(())
}

fn case_two(
    trace: &mut ProofTrace,
    scaled: &IntervalSet,
    r: &Rational,
    mu_r: &Rational,
    eta1: &Rational,
    eta2: &Rational,
) -> Result<()> {
    trace.case = TraceCase::Case2;
    let a = trace.context.a.clone();
    let third = rat(1, 3);

    trace.checks.push(Check::lt("eta1 + eta2 > 1/6", rat(1, 6), eta1 + eta2));
    let mr = check_lem_mr(scaled)?;
    trace.checks.push(Check::le("lemMR(R'): mu(R') <= 1/3 + mu(R'1)/2", mr.lhs.clone(), mr.rhs.clone()));
    trace.checks.push(Check::le("mu(R') <= 5/12", mr.lhs, rat(5, 12)));
    let five_r = int(5) * r / int(12);
    trace.checks.push(Check::le("mu(R) <= 5r/12", mu_r.clone(), five_r.clone()));
    let spread = ((r - &a) / int(2)).max((int(2) * r - &a) / int(6));
    trace.checks.push(Check::le("mu(R) <= max((r - a)/2, (2r - a)/6)", mu_r.clone(), spread.clone()));

    let concrete = spread.min(five_r);
    let in_a = (rat(1, 9) - &a / int(3)).max(rat(2, 27) - &a / int(18)).min(rat(5, 54) + rat(5, 36) * &a);
    trace.checks.push(Check::le(
        "min(max((r-a)/2, (2r-a)/6), 5r/12) <= min(max(1/9 - a/3, 2/27 - a/18), 5/54 + 5a/36)",
        concrete.clone(),
        in_a.clone(),
    ));
    trace.checks.push(Check::le("case 2 bound <= 22/51", &third + &in_a, rat(22, 51)));
    trace.bounds.push(("1/3 + min(max((r-a)/2, (2r-a)/6), 5r/12)".into(), &third + concrete));
    trace.bounds.push(("1/3 + min(max(1/9 - a/3, 2/27 - a/18), 5/54 + 5a/36)".into(), &third + in_a));
    trace.bounds.push(("22/51".into(), rat(22, 51)));
    Ok(())
}

fn finish(mut trace: ProofTrace) -> ProofTrace {
    trace.final_bound = trace.bounds.iter().map(|(_, b)| b).min().cloned().expect("at least the optimum bound");
    let mu = trace.set.measure();
    trace.checks.push(Check::le("mu(A) <= final bound", mu, trace.final_bound.clone()));
    trace.checks.push(Check::le("final bound <= 77/177", trace.final_bound.clone(), optimal_measure()));
    trace
}
