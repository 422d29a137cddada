use num_traits::Zero;

use super::{prepare, require_nonnegative, require_sum_free, Check, LemmaContext};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{int, rat, Rational};
use crate::set::IntervalSet;

/// `μ(A) <= (2 sup A − inf A) / 4` for a bounded 3-sum-free `A ⊂ [0, ∞)`.
pub fn check_majreste(set: &IntervalSet) -> Result<Check> {
    require_nonnegative(set)?;
    require_sum_free(set)?;
    let bound = (int(2) * set.sup()? - set.inf()?) / int(4);
    Ok(Check::le("majreste: mu(A) <= (2 sup A - inf A)/4", set.measure(), bound))
}

/// `μ(A) <= 1/3 + μ(A ∩ [2/3, 1]) / 2` for `A ⊂ [0, 1]` with `sup A = 1`.
pub fn check_lem_mr(set: &IntervalSet) -> Result<Check> {
    let (set, _) = prepare(set, false)?;
    let ctx = LemmaContext::new(&set)?;
    let bound = rat(1, 3) + ctx.top.measure() / int(2);
    Ok(Check::le("lemMR: mu(A) <= 1/3 + mu(A1)/2", set.measure(), bound))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lem0Branch {
    /// `eps1 <= 2a/3`: bound `1/3 − eps1/6`.
    SmallEps1,
    /// `eps1 > 2a/3`: bound `1/3 − (eps1 − 2a/3)/24`.
    LargeEps1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lem0Report {
    pub context: LemmaContext,
    /// `eps1 + 2 eps2 <= 1/3`.
    pub applicable: bool,
    pub branch: Lem0Branch,
    /// The piecewise bound; meaningful only when `applicable`.
    pub bound: Rational,
    /// `μ(A ∩ [2/9 + a/3, 1])`.
    pub value: Rational,
    /// `value <= bound`, or vacuously true when not applicable.
    pub pass: bool,
}

pub(crate) fn lem0_bound(ctx: &LemmaContext) -> (Lem0Branch, Rational) {
    let two_a_thirds = int(2) * &ctx.a / int(3);
    if ctx.eps1 <= two_a_thirds {
        (Lem0Branch::SmallEps1, rat(1, 3) - &ctx.eps1 / int(6))
    } else {
        (Lem0Branch::LargeEps1, rat(1, 3) - (&ctx.eps1 - two_a_thirds) / int(24))
    }
}

/// `μ(A ∩ [2/9 + a/3, 1])`.
pub(crate) fn upper_part_measure(set: &IntervalSet, ctx: &LemmaContext) -> Rational {
    set.intersect_interval(Interval::closed(ctx.cut(), int(1))).measure()
}

/// Piecewise upper bound on the measure of `A` above `2/9 + a/3`.
pub fn check_lem0(set: &IntervalSet) -> Result<Lem0Report> {
    let (set, _) = prepare(set, false)?;
    let context = LemmaContext::new(&set)?;
    let applicable = context.lem0_applicable();
    let (branch, bound) = lem0_bound(&context);
    let value = upper_part_measure(&set, &context);
    let pass = !applicable || value <= bound;
    Ok(Lem0Report { context, applicable, branch, bound, value, pass })
}

/// The auxiliary windows used to split `A ∩ [2/9 + a/3, 2/3]`.
pub fn lem0_internal_sets(set: &IntervalSet, ctx: &LemmaContext) -> Vec<(&'static str, IntervalSet)> {
    let (a, e1) = (&ctx.a, &ctx.eps1);
    let window = |lo: Rational, hi: Rational| set.intersect_interval(Interval::closed(lo, hi));
    vec![
        ("A_2/3", window(rat(4, 9) + int(2) * e1 / int(3), rat(2, 3))),
        ("A_4/9", window(rat(1, 3) + e1 / int(2), rat(4, 9) + e1 / int(6))),
        ("A_1/3", window(rat(2, 9) + (a + e1) / int(3), rat(1, 3) + a / int(3))),
        ("B_1/3", window(rat(1, 3) + a / int(3), rat(1, 3) + e1 / int(2))),
        ("C_1/3", window(rat(2, 9) + int(2) * a / int(9), rat(2, 9) + e1 / int(3))),
    ]
}

/// Measure bounds on the auxiliary windows. Empty unless
/// `eps1 + 2 eps2 <= 1/3`; the `B`/`C` bounds only apply when `eps1 > 2a/3`.
pub fn lem0_internal_checks(set: &IntervalSet, ctx: &LemmaContext) -> Vec<Check> {
    if !ctx.lem0_applicable() {
        return Vec::new();
    }
    let sets = lem0_internal_sets(set, ctx);
    let mu = |name: &str| sets.iter().find(|(n, _)| *n == name).map(|(_, s)| s.measure()).expect("known window");
    let third_eps2 = &ctx.eps2 / int(3);
    let mut checks = vec![
        Check::le("lem0: mu(A_2/3) <= eps2/3", mu("A_2/3"), third_eps2.clone()),
        Check::le("lem0: mu(A_4/9) <= eps2/3", mu("A_4/9"), third_eps2.clone()),
        Check::le("lem0: mu(A_1/3) <= eps2/3", mu("A_1/3"), third_eps2),
    ];
    if lem0_bound(ctx).0 == Lem0Branch::LargeEps1 {
        let (a, e1) = (&ctx.a, &ctx.eps1);
        let (b, c) = (mu("B_1/3"), mu("C_1/3"));
        checks.push(Check::le(
            "lem0: mu(B_1/3) <= 3/4 (eps1/2 - a/3)",
            b.clone(),
            rat(3, 4) * (e1 / int(2) - a / int(3)),
        ));
        checks.push(Check::le(
            "lem0: 2/3 mu(B_1/3) + mu(C_1/3) <= eps1/3 - 2a/9",
            rat(2, 3) * &b + &c,
            e1 / int(3) - int(2) * a / int(9),
        ));
        checks.push(Check::le(
            "lem0: mu(B_1/3) + mu(C_1/3) <= 11 eps1/24 - 11a/36",
            b + c,
            rat(11, 24) * e1 - rat(11, 36) * a,
        ));
    }
    checks
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lem1Report {
    /// `μ(A ∩ [2/9 + a/3, 1]) = 1/3`.
    pub triggered: bool,
    /// `eps1 = eps2 = 0`.
    pub eps_zero: bool,
    /// Triggered without `eps1 = eps2 = 0`. Never observed on a valid set.
    pub violation: bool,
}

/// Equality case of the upper-part bound: measure exactly 1/3 above the cut
/// forces `eps1 = eps2 = 0`. Requires `a > 0` and `eps1 + 2 eps2 <= 1/3`.
pub fn check_lem1_equality(set: &IntervalSet) -> Result<Lem1Report> {
    let (set, _) = prepare(set, false)?;
    let ctx = LemmaContext::new(&set)?;
    if ctx.a <= Rational::zero() {
        return Err(Error::Precondition("equality case requires inf A > 0".into()));
    }
    if !ctx.lem0_applicable() {
        return Err(Error::Precondition("equality case requires eps1 + 2 eps2 <= 1/3".into()));
    }
    let triggered = upper_part_measure(&set, &ctx) == rat(1, 3);
    let eps_zero = ctx.eps1.is_zero() && ctx.eps2.is_zero();
    Ok(Lem1Report { triggered, eps_zero, violation: triggered && !eps_zero })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemrecReport {
    /// `μ(A) >= 5/12`.
    pub applicable: bool,
    /// `μ(A ∩ [inf A / 3 + 2/9, 1])`.
    pub value: Rational,
    pub pass: bool,
}

/// For `μ(A) >= 5/12`: at most 1/3 of measure lies above `inf A / 3 + 2/9`.
pub fn check_lemrec(set: &IntervalSet) -> Result<LemrecReport> {
    let (set, _) = prepare(set, false)?;
    let ctx = LemmaContext::new(&set)?;
    let applicable = set.measure() >= rat(5, 12);
    let value = upper_part_measure(&set, &ctx);
    let pass = !applicable || value <= rat(1, 3);
    Ok(LemrecReport { applicable, value, pass })
}

/// `μ(A + B) >= μ(A) + μ(B)`.
pub fn check_brunn_minkowski(a: &IntervalSet, b: &IntervalSet) -> Result<Check> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(Check::ge("brunn-minkowski: mu(A+B) >= mu(A) + mu(B)", a.minkowski_sum(b).measure(), a.measure() + b.measure()))
}

/// `μ(A + B) >= min(2μ(A) + μ(B), μ(A) + diam B)`, with the arguments
/// ordered so that `μ(A) <= μ(B)`.
pub fn check_ruzsa(a: &IntervalSet, b: &IntervalSet) -> Result<Check> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let (small, large) = if a.measure() <= b.measure() { (a, b) } else { (b, a) };
    let (ms, ml) = (small.measure(), large.measure());
    let rhs = (int(2) * &ms + &ml).min(&ms + large.diameter()?);
    Ok(Check::ge("ruzsa: mu(A+B) >= min(2 mu(A) + mu(B), mu(A) + diam B)", small.minkowski_sum(large).measure(), rhs))
}

/// Every applicable lemma evaluated on one set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub set: IntervalSet,
    /// True when the input was dilated to bring `sup` to 1.
    pub rescaled: bool,
    pub context: LemmaContext,
    pub checks: Vec<Check>,
    /// Lemmas whose hypotheses do not hold for this set.
    pub skipped: Vec<String>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn lemma_report(set: &IntervalSet, auto_rescale: bool) -> Result<LemmaReport> {
    let (set, rescaled) = prepare(set, auto_rescale)?;
    let context = LemmaContext::new(&set)?;
    let mut checks = vec![check_majreste(&set)?, check_lem_mr(&set)?];
    let mut skipped = Vec::new();

    let lem0 = check_lem0(&set)?;
    if lem0.applicable {
        checks.push(Check::le(
            match lem0.branch {
                Lem0Branch::SmallEps1 => "lem0: mu(A above cut) <= 1/3 - eps1/6",
                Lem0Branch::LargeEps1 => "lem0: mu(A above cut) <= 1/3 - (eps1 - 2a/3)/24",
            },
            lem0.value.clone(),
            lem0.bound.clone(),
        ));
        checks.extend(lem0_internal_checks(&set, &context));
    } else {
        skipped.push("lem0: eps1 + 2 eps2 > 1/3".into());
    }

    match check_lem1_equality(&set) {
        Ok(r) if r.triggered => {
            checks.push(Check::eq("lem1: eps1 == 0", context.eps1.clone(), Rational::zero()));
            checks.push(Check::eq("lem1: eps2 == 0", context.eps2.clone(), Rational::zero()));
        }
        Ok(_) => skipped.push("lem1: measure above cut is below 1/3".into()),
        Err(Error::Precondition(why)) => skipped.push(format!("lem1: {why}")),
        Err(e) => return Err(e),
    }

    let lemrec = check_lemrec(&set)?;
    if lemrec.applicable {
        checks.push(Check::le("lemrec: mu(A above cut) <= 1/3", lemrec.value, rat(1, 3)));
    } else {
        skipped.push("lemrec: mu(A) < 5/12".into());
    }

    checks.push(check_brunn_minkowski(&set, &set)?);
    checks.push(check_ruzsa(&set, &set)?);
    let comps = set.components();
    for (i, left) in comps.iter().enumerate() {
        for right in &comps[i + 1..] {
            let (l, r) = (IntervalSet::from(left.clone()), IntervalSet::from(right.clone()));
            checks.push(check_ruzsa(&l, &r)?);
        }
    }
    let lower = set.intersect_interval(Interval::closed(int(0), context.cut()));
    let upper = set.difference(&lower);
    if !lower.is_empty() && !upper.is_empty() {
        checks.push(check_brunn_minkowski(&lower, &upper)?);
        checks.push(check_ruzsa(&lower, &upper)?);
    }

    Ok(LemmaReport { set, rescaled, context, checks, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumfree::a0;

    fn top() -> IntervalSet {
        IntervalSet::from(Interval::open(rat(2, 3), int(1)))
    }

    #[test]
    fn majreste_examples() {
        let c = check_majreste(&a0()).unwrap();
        assert_eq!(c.rhs, rat(173, 354));
        assert!(c.pass);
        let c = check_majreste(&top()).unwrap();
        assert_eq!(c.rhs, rat(1, 3));
        assert!(c.pass && c.is_tight());
        let c = check_majreste(&IntervalSet::from(Interval::point(int(1)))).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(0), rat(1, 4)));
        let bad = IntervalSet::from(Interval::open(int(0), int(1)));
        assert!(matches!(check_majreste(&bad), Err(Error::NotSumFree { .. })));
    }

    #[test]
    fn lem_mr_examples() {
        assert_eq!(check_lem_mr(&a0()).unwrap().rhs, rat(1, 2));
        assert_eq!(check_lem_mr(&top()).unwrap().rhs, rat(1, 2));
        let half = a0().dilate(&rat(1, 2)).unwrap();
        assert!(matches!(check_lem_mr(&half), Err(Error::Precondition(_))));
    }

    #[test]
    fn lem0_on_a0_is_tight() {
        let r = check_lem0(&a0()).unwrap();
        assert!(r.applicable);
        assert_eq!(r.branch, Lem0Branch::SmallEps1);
        assert_eq!(r.context.eps1, int(0));
        assert_eq!(r.context.eps2, int(0));
        assert_eq!(r.context.cut(), rat(14, 59));
        assert_eq!(r.bound, rat(1, 3));
        assert_eq!(r.value, rat(1, 3));
        assert!(r.pass);
    }

    #[test]
    fn lem0_on_top_third() {
        let r = check_lem0(&top()).unwrap();
        assert_eq!(r.context.a, rat(2, 3));
        assert!(r.applicable && r.pass);
        assert_eq!(r.bound, rat(1, 3));
    }

    #[test]
    fn lem0_with_raised_top() {
        // (1/10, 1/8) ∪ (5/6, 1): eps1 = 1/6 > 2a/3 = 1/15.
        let set = IntervalSet::normalize([Interval::open(rat(1, 10), rat(1, 8)), Interval::open(rat(5, 6), int(1))]);
        assert!(crate::sumfree::is_k_sum_free(&set, 3));
        let r = check_lem0(&set).unwrap();
        assert_eq!(r.context.eps1, rat(1, 6));
        assert_eq!(r.context.eps2, int(0));
        assert!(r.applicable);
        assert_eq!(r.branch, Lem0Branch::LargeEps1);
        assert_eq!(r.bound, rat(1, 3) - (rat(1, 6) - rat(1, 15)) / int(24));
        assert_eq!(r.value, rat(1, 6));
        assert!(r.pass);
        let checks = lem0_internal_checks(&set, &r.context);
        assert_eq!(checks.len(), 6);
        assert!(checks.iter().all(|c| c.pass));
    }

    #[test]
    fn lem1_examples() {
        let r = check_lem1_equality(&a0()).unwrap();
        assert!(r.triggered && r.eps_zero && !r.violation);
        let r = check_lem1_equality(&top()).unwrap();
        assert!(r.triggered && r.eps_zero);
        let shortened = a0().difference(&top()).union(&IntervalSet::from(Interval::open(rat(2, 3), rat(99, 100))));
        let (scaled, rescaled) = super::super::rescale_to_unit_sup(&shortened).unwrap();
        assert!(rescaled);
        let r = check_lem1_equality(&scaled).unwrap();
        assert!(!r.triggered);
        // {0} forces 0 + 0 = 3 * 0, so an infimum of 0 is caught as a conflict.
        let zero_inf = IntervalSet::normalize([Interval::point(int(0)), Interval::open(rat(2, 3), int(1))]);
        assert!(matches!(check_lem1_equality(&zero_inf), Err(Error::NotSumFree { .. })));
    }

    #[test]
    fn lemrec_examples() {
        // 77/177 >= 5/12 since 77 * 12 = 924 > 885 = 5 * 177.
        let r = check_lemrec(&a0()).unwrap();
        assert!(r.applicable && r.pass);
        assert_eq!(r.value, rat(1, 3));
        assert!(!check_lemrec(&top()).unwrap().applicable);
    }

    #[test]
    fn full_report_on_a0() {
        let report = lemma_report(&a0(), false).unwrap();
        assert!(report.all_pass(), "{:#?}", report.checks);
        assert!(!report.rescaled);
        assert!(report.skipped.is_empty(), "{:?}", report.skipped);
    }

    #[test]
    fn report_rescales_when_asked() {
        let half = a0().dilate(&rat(1, 2)).unwrap();
        assert!(lemma_report(&half, false).is_err());
        let report = lemma_report(&half, true).unwrap();
        assert!(report.rescaled);
        assert_eq!(report.set, a0());
    }
}
