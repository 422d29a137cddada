//! Canonical finite unions of rational intervals.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{midpoint, Rational};

/// A finite union of intervals in canonical form.
///
/// Components are nonempty, sorted by `lo`, pairwise disjoint and
/// non-adjacent: two pieces sharing an endpoint that either side contains
/// are always merged. The representation is therefore unique, and derived
/// `PartialEq` is point-set equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    components: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Canonicalizes an arbitrary list of intervals. Empty pieces are dropped.
    pub fn normalize<I: IntoIterator<Item = Interval>>(raw: I) -> Self {
        let mut pieces: Vec<Interval> = raw.into_iter().filter(|i| !i.is_empty()).collect();
        // Closed lower endpoints sort first among equal `lo`.
        pieces.sort_by(|a, b| a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
        let mut out: Vec<Interval> = Vec::with_capacity(pieces.len());
        for next in pieces {
            if let Some(cur) = out.last_mut() {
                let joins = match next.lo.cmp(&cur.hi) {
                    Ordering::Less => true,
                    Ordering::Equal => cur.hi_closed || next.lo_closed,
                    Ordering::Greater => false,
                };
                if joins {
                    match next.hi.cmp(&cur.hi) {
                        Ordering::Greater => {
                            cur.hi = next.hi;
                            cur.hi_closed = next.hi_closed;
                        }
                        Ordering::Equal => cur.hi_closed |= next.hi_closed,
                        Ordering::Less => {}
                    }
                    continue;
                }
            }
            out.push(next);
        }
        Self { components: out }
    }

    pub fn from_interval(i: Interval) -> Self {
        Self::normalize([i])
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Interval> {
        self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Lebesgue measure: the exact sum of component lengths.
    pub fn measure(&self) -> Rational {
        self.components.iter().fold(Rational::zero(), |acc, c| acc + (&c.hi - &c.lo))
    }

    pub fn inf(&self) -> Result<Rational> {
        self.components.first().map(|c| c.lo.clone()).ok_or(Error::EmptySet)
    }

    pub fn sup(&self) -> Result<Rational> {
        self.components.last().map(|c| c.hi.clone()).ok_or(Error::EmptySet)
    }

    pub fn diameter(&self) -> Result<Rational> {
        Ok(self.sup()? - self.inf()?)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let idx = self.components.partition_point(|c| &c.lo < x);
        if idx < self.components.len() && self.components[idx].contains(x) {
            return true;
        }
        idx > 0 && self.components[idx - 1].contains(x)
    }

    /// `{ alpha * x : x in self }` for `alpha > 0`.
    pub fn dilate(&self, alpha: &Rational) -> Result<Self> {
        if alpha <= &Rational::zero() {
            return Err(Error::NonPositiveFactor(alpha.to_string()));
        }
        if alpha.is_one() {
            return Ok(self.clone());
        }
        Ok(Self { components: self.components.iter().map(|c| c.scale(alpha)).collect() })
    }

    /// `{ -x : x in self }`.
    pub fn reflect(&self) -> Self {
        let minus_one = -Rational::one();
        Self { components: self.components.iter().rev().map(|c| c.scale(&minus_one)).collect() }
    }

    pub fn translate(&self, t: &Rational) -> Self {
        Self { components: self.components.iter().map(|c| c.shift(t)).collect() }
    }

    /// Minkowski sum: the normalized union of all pairwise component sums.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return Self::empty();
        }
        if self == other {
            return self.sum_with_self();
        }
        let mut raw = Vec::with_capacity(self.len() * other.len());
        for a in &self.components {
            for b in &other.components {
                raw.push(a.sum(b));
            }
        }
        Self::normalize(raw)
    }

    fn sum_with_self(&self) -> Self {
        let n = self.len();
        let mut raw = Vec::with_capacity(n * (n + 1) / 2);
        for (i, a) in self.components.iter().enumerate() {
            for b in &self.components[i..] {
                raw.push(a.sum(b));
            }
        }
        Self::normalize(raw)
    }

    /// `self - other = { x - y }`.
    pub fn minkowski_difference(&self, other: &Self) -> Self {
        self.minkowski_sum(&other.reflect())
    }

    pub fn union(&self, other: &Self) -> Self {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        Self::normalize(self.components.iter().chain(&other.components).cloned())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return Self::empty();
        }
        // Two-pointer sweep; components are sorted and disjoint on both sides.
        let (a, b) = (&self.components, &other.components);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            let piece = a[i].intersect(&b[j]);
            if !piece.is_empty() {
                out.push(piece);
            }
            let a_ends_first = match a[i].hi.cmp(&b[j].hi) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => !a[i].hi_closed || b[j].hi_closed,
            };
            if a_ends_first {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self::normalize(out)
    }

    pub fn intersect_interval(&self, window: Interval) -> Self {
        self.intersect(&Self::from_interval(window))
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.intersect(other).is_empty()
    }

    pub fn difference(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return self.clone();
        }
        self.combine(other, |a, b| a && !b)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a != b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// Generic Boolean combination by sweeping every endpoint of both sets:
    /// membership is constant on each critical point and on each open gap
    /// between consecutive critical points.
    fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let mut points: Vec<&Rational> =
            self.components.iter().chain(&other.components).flat_map(|c| [&c.lo, &c.hi]).collect();
        points.sort();
        points.dedup();
        let mut out = Vec::new();
        for (k, p) in points.iter().enumerate() {
            if op(self.contains(p), other.contains(p)) {
                out.push(Interval::point((*p).clone()));
            }
            if let Some(q) = points.get(k + 1) {
                let m = midpoint(p, q);
                if op(self.contains(&m), other.contains(&m)) {
                    out.push(Interval::open((*p).clone(), (*q).clone()));
                }
            }
        }
        Self::normalize(out)
    }
}

impl From<Interval> for IntervalSet {
    fn from(i: Interval) -> Self {
        Self::from_interval(i)
    }
}

impl FromIterator<Interval> for IntervalSet {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        Self::normalize(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn a0() -> IntervalSet {
        crate::sumfree::a0()
    }

    #[test]
    fn normalize_keeps_open_touching_pieces_apart() {
        let s = IntervalSet::normalize([Interval::open(int(0), rat(1, 2)), Interval::open(rat(1, 2), int(1))]);
        assert_eq!(s.len(), 2);
        assert!(!s.contains(&rat(1, 2)));
    }

    #[test]
    fn normalize_merges_at_closed_shared_point() {
        let s =
            IntervalSet::normalize([Interval::new(int(0), false, rat(1, 2), true), Interval::open(rat(1, 2), int(1))]);
        assert_eq!(s, IntervalSet::from(Interval::open(int(0), int(1))));
    }

    #[test]
    fn normalize_reduces_fractions() {
        let s = IntervalSet::normalize([Interval::open(rat(3, 6), rat(2, 2))]);
        assert_eq!(s.components()[0].lo, rat(1, 2));
        assert_eq!(s.components()[0].hi, int(1));
    }

    #[test]
    fn normalize_drops_degenerate_and_nested() {
        let s = IntervalSet::normalize([
            Interval::open(int(1), int(1)),
            Interval::closed(int(0), int(3)),
            Interval::open(int(1), int(2)),
            Interval::new(int(3), false, int(4), false),
        ]);
        assert_eq!(s, IntervalSet::from(Interval::new(int(0), true, int(4), false)));
    }

    #[test]
    fn measure_examples() {
        assert_eq!(a0().measure(), rat(77, 177));
        assert_eq!(IntervalSet::empty().measure(), int(0));
        let u = IntervalSet::from(Interval::open(rat(8, 177), rat(4, 59)));
        assert_eq!(u.measure(), rat(4, 177));
    }

    #[test]
    fn dilate_examples() {
        let s = IntervalSet::from(Interval::open(rat(2, 3), int(1)));
        assert_eq!(s.dilate(&int(3)).unwrap(), IntervalSet::from(Interval::open(int(2), int(3))));
        assert_eq!(a0().dilate(&int(1)).unwrap(), a0());
        assert_eq!(a0().dilate(&int(59)).unwrap().measure(), rat(77, 3));
        assert!(a0().dilate(&int(0)).is_err());
        assert!(a0().dilate(&int(-2)).is_err());
    }

    #[test]
    fn minkowski_examples() {
        let top = IntervalSet::from(Interval::open(rat(2, 3), int(1)));
        assert_eq!(top.minkowski_sum(&top), IntervalSet::from(Interval::open(rat(4, 3), int(2))));
        let u = IntervalSet::from(Interval::open(rat(8, 177), rat(4, 59)));
        assert_eq!(u.minkowski_sum(&top), IntervalSet::from(Interval::open(rat(42, 59), rat(63, 59))));
        let zero = IntervalSet::from(Interval::point(int(0)));
        assert_eq!(zero.minkowski_sum(&a0()), a0());
        assert!(IntervalSet::empty().minkowski_sum(&a0()).is_empty());
    }

    #[test]
    fn translate_examples() {
        let s = IntervalSet::from(Interval::open(int(0), int(1)));
        assert_eq!(s.translate(&rat(1, 3)), IntervalSet::from(Interval::open(rat(1, 3), rat(4, 3))));
        assert!(IntervalSet::empty().translate(&int(5)).is_empty());
        let p = IntervalSet::from(Interval::point(rat(1, 2)));
        assert_eq!(p.translate(&rat(1, 2)), IntervalSet::from(Interval::point(int(1))));
    }

    #[test]
    fn boolean_examples() {
        let closed_top = IntervalSet::from(Interval::closed(rat(2, 3), int(1)));
        let open_top = IntervalSet::from(Interval::open(rat(2, 3), int(1)));
        assert_eq!(a0().intersect(&closed_top), open_top);
        assert_eq!(a0().union(&IntervalSet::empty()), a0());
        assert_eq!(
            closed_top.difference(&open_top),
            IntervalSet::normalize([Interval::point(rat(2, 3)), Interval::point(int(1))])
        );
    }

    #[test]
    fn extrema() {
        assert_eq!(a0().inf().unwrap(), rat(8, 177));
        assert_eq!(a0().sup().unwrap(), int(1));
        let s = IntervalSet::normalize([Interval::open(rat(1, 4), rat(1, 2)), Interval::open(rat(3, 4), int(1))]);
        assert_eq!(s.diameter().unwrap(), rat(3, 4));
        assert_eq!(IntervalSet::empty().inf(), Err(Error::EmptySet));
        assert_eq!(IntervalSet::empty().sup(), Err(Error::EmptySet));
        assert_eq!(IntervalSet::empty().diameter(), Err(Error::EmptySet));
    }

    #[test]
    fn intersect_handles_shared_endpoints() {
        let a = IntervalSet::from(Interval::new(int(0), true, int(1), true));
        let b = IntervalSet::normalize([Interval::new(int(1), true, int(2), false), Interval::point(int(-1))]);
        assert_eq!(a.intersect(&b), IntervalSet::from(Interval::point(int(1))));
        let c = IntervalSet::from(Interval::new(int(1), false, int(2), false));
        assert!(a.intersect(&c).is_empty());
    }

    #[test]
    fn reflect_and_difference_of_sets() {
        let v = IntervalSet::from(Interval::open(rat(28, 177), rat(14, 59)));
        let u = IntervalSet::from(Interval::open(rat(8, 177), rat(4, 59)));
        let three_u_minus_u = u.dilate(&int(3)).unwrap().minkowski_difference(&u);
        assert_eq!(three_u_minus_u, IntervalSet::from(Interval::open(rat(4, 59), rat(28, 177))));
        assert!(v.reflect().sup().unwrap() < int(0));
    }
}
