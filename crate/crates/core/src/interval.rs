//! Clopen intervals of a compact ordinal space `[0, top]`.
//!
//! Both shapes used here, `[0, hi]` and `(lo, hi]`, are closed and open in the
//! order topology of `[0, top]` whenever `hi <= top`: `(lo, hi]` equals
//! `[lo + 1, hi]` and `(lo, hi + 1)` at once. Every construction that only
//! glues such intervals along translations is therefore continuous and open.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::ordinal::Ordinal;
use crate::space::CanonicalSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("empty interval ({lo}, {hi}]")]
    EmptyHalfOpen { lo: Ordinal, hi: Ordinal },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Interval {
    /// `[0, hi]`
    FromZero { hi: Ordinal },
    /// `(lo, hi]` with `lo < hi`
    HalfOpen { lo: Ordinal, hi: Ordinal },
}

impl Interval {
    pub fn from_zero(hi: Ordinal) -> Interval {
        Interval::FromZero { hi }
    }

    pub fn half_open(lo: Ordinal, hi: Ordinal) -> Result<Interval, IntervalError> {
        if lo >= hi {
            return Err(IntervalError::EmptyHalfOpen { lo, hi });
        }
        Ok(Interval::HalfOpen { lo, hi })
    }

    pub fn hi(&self) -> &Ordinal {
        match self {
            Interval::FromZero { hi } | Interval::HalfOpen { hi, .. } => hi,
        }
    }

    /// Exclusive lower bound; `None` for intervals starting at 0.
    pub fn lo(&self) -> Option<&Ordinal> {
        match self {
            Interval::FromZero { .. } => None,
            Interval::HalfOpen { lo, .. } => Some(lo),
        }
    }

    /// Point that offsets are measured from.
    pub fn origin(&self) -> Ordinal {
        self.lo().cloned().unwrap_or_default()
    }

    pub fn is_from_zero(&self) -> bool {
        matches!(self, Interval::FromZero { .. })
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        x <= self.hi() && self.lo().is_none_or(|lo| lo < x)
    }

    /// Left difference `hi − origin`: two intervals of the same shape and
    /// length are order isomorphic by translation.
    pub fn length(&self) -> Ordinal {
        match self {
            Interval::FromZero { hi } => hi.clone(),
            Interval::HalfOpen { lo, hi } => lo.left_subtract(hi).expect("half-open interval has lo < hi"),
        }
    }

    /// The `t` with `origin + t = x`, if `x` lies in the interval.
    pub fn offset_of(&self, x: &Ordinal) -> Option<Ordinal> {
        if !self.contains(x) {
            return None;
        }
        Some(self.origin().left_subtract(x).expect("contained point"))
    }

    pub fn at_offset(&self, t: &Ordinal) -> Ordinal {
        &self.origin() + t
    }

    /// Least element.
    pub fn first_point(&self) -> Ordinal {
        match self {
            Interval::FromZero { .. } => Ordinal::zero(),
            Interval::HalfOpen { lo, .. } => lo.successor(),
        }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = match (self.lo(), other.lo()) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a),
            (Some(a), Some(b)) => Some(a.max(b)),
        };
        let hi = self.hi().min(other.hi()).clone();
        match lo {
            None => Some(Interval::FromZero { hi }),
            Some(lo) if lo < &hi => Some(Interval::HalfOpen { lo: lo.clone(), hi }),
            Some(_) => None,
        }
    }

    /// Homeomorphism class of the interval with its order topology.
    ///
    /// Points keep their rank inside the interval: for `t > 0` the trailing
    /// exponent of `lo + t` is that of `t`.
    pub fn canonical(&self) -> CanonicalSpace {
        let (length, extra) = match self {
            Interval::FromZero { hi } => (hi.clone(), 1),
            Interval::HalfOpen { .. } => (self.length(), 0),
        };
        match length.as_finite() {
            Some(n) => CanonicalSpace::finite(n + extra),
            None => CanonicalSpace::new(
                length.leading_exponent().expect("infinite").clone(),
                length.leading_coefficient().expect("infinite"),
            )
            .expect("positive coefficient"),
        }
    }

    /// Orders intervals by their least element.
    pub fn cmp_start(&self, other: &Interval) -> Ordering {
        match (self.lo(), other.lo()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Interval::FromZero { hi } => write!(f, "[0, {hi}]"),
            Interval::HalfOpen { lo, hi } => write!(f, "({lo}, {hi}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn membership_and_offsets() {
        let piece = Interval::half_open(o("w"), o("w*2")).unwrap();
        assert!(!piece.contains(&o("w")));
        assert!(piece.contains(&o("w+3")));
        assert!(piece.contains(&o("w*2")));
        assert_eq!(piece.length(), o("w"));
        assert_eq!(piece.offset_of(&o("w+3")), Some(o("3")));
        assert_eq!(piece.at_offset(&o("3")), o("w+3"));
        assert_eq!(piece.first_point(), o("w+1"));
        assert!(Interval::half_open(o("w"), o("w")).is_err());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(
            Interval::from_zero(o("w^2")).canonical(),
            CanonicalSpace::new(o("2"), 1).unwrap()
        );
        assert_eq!(Interval::from_zero(o("0")).canonical(), CanonicalSpace::finite(1));
        assert_eq!(Interval::from_zero(o("4")).canonical(), CanonicalSpace::finite(5));
        assert_eq!(
            Interval::half_open(o("3"), o("7")).unwrap().canonical(),
            CanonicalSpace::finite(4)
        );
        assert_eq!(
            Interval::half_open(o("w"), o("w^2*3 + w")).unwrap().canonical(),
            CanonicalSpace::new(o("2"), 3).unwrap()
        );
    }

    #[test]
    fn intersections() {
        let a = Interval::from_zero(o("w*2"));
        let b = Interval::half_open(o("w"), o("w*3")).unwrap();
        assert_eq!(
            a.intersect(&b),
            Some(Interval::half_open(o("w"), o("w*2")).unwrap())
        );
        let c = Interval::half_open(o("w*2"), o("w*3")).unwrap();
        assert_eq!(a.intersect(&c), None);
        assert_eq!(
            a.intersect(&Interval::from_zero(o("5"))),
            Some(Interval::from_zero(o("5")))
        );
    }
}
