use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::rational::{format_rational, Rational};

/// One connected piece of the real line with rational endpoints.
///
/// An interval is *empty* when `lo > hi`, or when `lo == hi` and not both
/// endpoints are closed. Empty intervals may be constructed freely; they are
/// dropped when collected into an [`IntervalSet`](crate::IntervalSet).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Rational, lo_closed: bool, hi: Rational, hi_closed: bool) -> Self {
        Self { lo, hi, lo_closed, hi_closed }
    }

    pub fn open(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, false, hi, false)
    }

    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, true, hi, true)
    }

    pub fn point(x: Rational) -> Self {
        Self::new(x.clone(), true, x, true)
    }

    pub fn is_empty(&self) -> bool {
        match self.lo.cmp(&self.hi) {
            Ordering::Less => false,
            Ordering::Equal => !(self.lo_closed && self.hi_closed),
            Ordering::Greater => true,
        }
    }

    pub fn is_point(&self) -> bool {
        !self.is_empty() && self.lo == self.hi
    }

    pub fn length(&self) -> Rational {
        if self.is_empty() {
            Rational::zero()
        } else {
            &self.hi - &self.lo
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = match x.cmp(&self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Less => false,
        };
        above
            && match x.cmp(&self.hi) {
                Ordering::Less => true,
                Ordering::Equal => self.hi_closed,
                Ordering::Greater => false,
            }
    }

    /// Point-set sum `{x + y}`; an endpoint is closed iff both contributing
    /// endpoints are closed.
    pub fn sum(&self, other: &Interval) -> Interval {
        Interval::new(
            &self.lo + &other.lo,
            self.lo_closed && other.lo_closed,
            &self.hi + &other.hi,
            self.hi_closed && other.hi_closed,
        )
    }

    /// `{ factor * x }`. A negative factor swaps the endpoints.
    pub fn scale(&self, factor: &Rational) -> Interval {
        let lo = &self.lo * factor;
        let hi = &self.hi * factor;
        if factor < &Rational::zero() {
            Interval::new(hi, self.hi_closed, lo, self.lo_closed)
        } else {
            Interval::new(lo, self.lo_closed, hi, self.hi_closed)
        }
    }

    pub fn shift(&self, t: &Rational) -> Interval {
        Interval::new(&self.lo + t, self.lo_closed, &self.hi + t, self.hi_closed)
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            Ordering::Greater => (self.lo.clone(), self.lo_closed),
            Ordering::Less => (other.lo.clone(), other.lo_closed),
            Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            Ordering::Less => (self.hi.clone(), self.hi_closed),
            Ordering::Greater => (other.hi.clone(), other.hi_closed),
            Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Interval::new(lo, lo_closed, hi, hi_closed)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            format_rational(&self.lo),
            format_rational(&self.hi),
            if self.hi_closed { ']' } else { ')' }
        )
    }
}
