//! Executable versions of the measure inequalities for 3-sum-free sets, a
//! tracer that evaluates the optimality argument on a concrete set, the
//! extremal-containment check, and a local-search optimizer.

mod extremal;
mod lemmas;
mod optimize;
mod trace;

use std::fmt;

use num_traits::{One, Zero};

pub use extremal::{check_extremal_containment, ExtremalReport};
pub use lemmas::{
    check_brunn_minkowski, check_lem0, check_lem1_equality, check_lem_mr, check_lemrec, check_majreste, check_ruzsa,
    lem0_internal_checks, lem0_internal_sets, lemma_report, Lem0Branch, Lem0Report, Lem1Report, LemmaReport,
    LemrecReport,
};
pub use optimize::{optimize, optimize_with, OptimizeConfig, OptimizeResult};
pub use trace::{trace_theorem1, ProofTrace, TraceCase};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{format_rational, int, rat, Rational};
use crate::set::IntervalSet;
use crate::sumfree::sum_free_witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
    Eq,
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "==",
            Relation::Ge => ">=",
        }
    }
}

/// One exact inequality evaluated on a concrete set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub lhs: Rational,
    pub relation: Relation,
    pub rhs: Rational,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: Rational, relation: Relation, rhs: Rational) -> Self {
        let pass = relation.holds(&lhs, &rhs);
        Self { name: name.into(), lhs, relation, rhs, pass }
    }

    pub fn le(name: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        Self::new(name, lhs, Relation::Le, rhs)
    }

    pub fn lt(name: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        Self::new(name, lhs, Relation::Lt, rhs)
    }

    pub fn eq(name: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        Self::new(name, lhs, Relation::Eq, rhs)
    }

    pub fn ge(name: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        Self::new(name, lhs, Relation::Ge, rhs)
    }

    /// Whether the inequality holds with equality.
    pub fn is_tight(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.name,
            format_rational(&self.lhs),
            self.relation.symbol(),
            format_rational(&self.rhs),
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

/// Quantities shared by the lemmas for a set with `sup A = 1`.
///
/// When `A ∩ [2/3, 1]` is empty its infimum is taken to be 1, so that
/// `eps1 = 1/3`, `eps2 = 0`, and `eps2 = 1/3 − eps1 − μ(A₁)` still holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaContext {
    /// `inf A`.
    pub a: Rational,
    /// `A ∩ [2/3, 1]`.
    pub top: IntervalSet,
    /// `inf A₁ − 2/3`.
    pub eps1: Rational,
    /// `1/3 − eps1 − μ(A₁)`.
    pub eps2: Rational,
}

impl LemmaContext {
    pub fn new(set: &IntervalSet) -> Result<Self> {
        require_unit_sup(set)?;
        let a = set.inf()?;
        let top = set.intersect_interval(Interval::closed(rat(2, 3), int(1)));
        let top_inf = top.inf().unwrap_or_else(|_| Rational::one());
        let eps1 = top_inf - rat(2, 3);
        let eps2 = rat(1, 3) - &eps1 - top.measure();
        Ok(Self { a, top, eps1, eps2 })
    }

    /// `eps1 + 2 eps2 <= 1/3`, the hypothesis of the refined upper-part bound.
    pub fn lem0_applicable(&self) -> bool {
        &self.eps1 + int(2) * &self.eps2 <= rat(1, 3)
    }

    /// `2/9 + a/3`, the cut between the lower block `R` and the rest.
    pub fn cut(&self) -> Rational {
        rat(2, 9) + &self.a / int(3)
    }
}

pub(crate) fn require_sum_free(set: &IntervalSet) -> Result<()> {
    match sum_free_witness(set, 3) {
        Some(witness) => Err(Error::NotSumFree { k: 3, witness: Box::new(witness) }),
        None => Ok(()),
    }
}

pub(crate) fn require_nonnegative(set: &IntervalSet) -> Result<()> {
    if set.inf()? < Rational::zero() {
        return Err(Error::Precondition("set must lie in [0, inf)".into()));
    }
    Ok(())
}

pub(crate) fn require_unit_sup(set: &IntervalSet) -> Result<()> {
    let sup = set.sup()?;
    if !sup.is_one() {
        return Err(Error::Precondition(format!("sup(A) must be 1, got {}", format_rational(&sup))));
    }
    Ok(())
}

/// Dilates by `1 / sup(A)` when needed. The flag reports whether a rescale
/// happened.
pub fn rescale_to_unit_sup(set: &IntervalSet) -> Result<(IntervalSet, bool)> {
    let sup = set.sup()?;
    if sup.is_one() {
        return Ok((set.clone(), false));
    }
    if sup <= Rational::zero() {
        return Err(Error::Precondition("sup(A) must be positive to rescale".into()));
    }
    Ok((set.dilate(&sup.recip())?, true))
}

/// Validates a lemma input in `[0, 1]` with `sup = 1`, optionally rescaling
/// first.
pub(crate) fn prepare(set: &IntervalSet, auto_rescale: bool) -> Result<(IntervalSet, bool)> {
    require_nonnegative(set)?;
    let (set, rescaled) = if auto_rescale { rescale_to_unit_sup(set)? } else { (set.clone(), false) };
    require_unit_sup(&set)?;
    require_sum_free(&set)?;
    Ok((set, rescaled))
}
