//! Compact countable Hausdorff spaces up to homeomorphism.
//!
//! Every such space is either empty or homeomorphic to the ordinal interval
//! `[0, ω^α·d]` for a unique pair `(α, d)` with `d ≥ 1`. We store that pair as
//! `(cb_star, degree)`: the space has Cantor-Bendixson rank `α + 1` and exactly
//! `d` points of top rank `α`. For `α = 0` the space is the discrete space with
//! `d` points (the ordinal `d`, not `d + 1`), so the derivative of `(1, d)` is
//! exactly `(0, d)`.
//!
//! Disjoint union and product act on these pairs in closed form, which makes
//! the pairs a commutative semiring with `Empty` as zero and the one-point
//! space `(0, 1)` as unit.

use std::cmp::Ordering;
use std::fmt;
use std::num::NonZeroU64;

use thiserror::Error;

use crate::cardinality::Cardinality;
use crate::interval::Interval;
use crate::ordinal::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("the empty space has no {0}")]
    Empty(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CanonicalSpace {
    Empty,
    Compact { cb_star: Ordinal, degree: NonZeroU64 },
}

/// Point counts per rank of a nonempty canonical space.
///
/// Ranks below `top_rank` are countably infinite (except in the finite
/// discrete case, where `top_rank` is 0 and there is nothing below), ranks
/// above are empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub top_rank: Ordinal,
    pub top_count: u64,
}

impl RankProfile {
    pub fn count_at(&self, rank: &Ordinal) -> Cardinality {
        match rank.cmp(&self.top_rank) {
            Ordering::Less => Cardinality::CountablyInfinite,
            Ordering::Equal => Cardinality::Finite(self.top_count),
            Ordering::Greater => Cardinality::ZERO,
        }
    }
}

/// A rank at which two spaces have strata of different size class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumDifference {
    pub rank: Ordinal,
    pub left: Cardinality,
    pub right: Cardinality,
}

impl CanonicalSpace {
    pub fn new(cb_star: Ordinal, degree: u64) -> Result<CanonicalSpace, SpaceError> {
        let degree = NonZeroU64::new(degree).ok_or(SpaceError::ZeroDegree)?;
        Ok(CanonicalSpace::Compact { cb_star, degree })
    }

    /// Discrete space with `n` points; empty for `n = 0`.
    pub fn finite(n: u64) -> CanonicalSpace {
        match NonZeroU64::new(n) {
            None => CanonicalSpace::Empty,
            Some(degree) => CanonicalSpace::Compact {
                cb_star: Ordinal::zero(),
                degree,
            },
        }
    }

    /// The one-point space, unit of the product.
    pub fn point() -> CanonicalSpace {
        CanonicalSpace::finite(1)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, CanonicalSpace::Empty)
    }

    pub fn cb_star(&self) -> Option<&Ordinal> {
        match self {
            CanonicalSpace::Empty => None,
            CanonicalSpace::Compact { cb_star, .. } => Some(cb_star),
        }
    }

    /// Least `α` with `X^α` empty.
    pub fn cb_rank(&self) -> Ordinal {
        self.cb_star().map_or_else(Ordinal::zero, Ordinal::successor)
    }

    /// Supremum of the sizes of rough partitions; 0 for the empty space.
    pub fn degree(&self) -> u64 {
        match self {
            CanonicalSpace::Empty => 0,
            CanonicalSpace::Compact { degree, .. } => degree.get(),
        }
    }

    /// Disjoint union: the summand of larger rank wins, equal ranks add
    /// their top points.
    pub fn sum(&self, other: &CanonicalSpace) -> CanonicalSpace {
        match (self, other) {
            (CanonicalSpace::Empty, s) | (s, CanonicalSpace::Empty) => s.clone(),
            (
                CanonicalSpace::Compact {
                    cb_star: a,
                    degree: m,
                },
                CanonicalSpace::Compact {
                    cb_star: b,
                    degree: n,
                },
            ) => match a.cmp(b) {
                Ordering::Greater => self.clone(),
                Ordering::Less => other.clone(),
                Ordering::Equal => CanonicalSpace::Compact {
                    cb_star: a.clone(),
                    degree: m.checked_add(n.get()).expect("degree overflow"),
                },
            },
        }
    }

    /// Product: ranks combine by natural sum, degrees multiply.
    pub fn product(&self, other: &CanonicalSpace) -> CanonicalSpace {
        match (self, other) {
            (CanonicalSpace::Empty, _) | (_, CanonicalSpace::Empty) => CanonicalSpace::Empty,
            (
                CanonicalSpace::Compact {
                    cb_star: a,
                    degree: m,
                },
                CanonicalSpace::Compact {
                    cb_star: b,
                    degree: n,
                },
            ) => CanonicalSpace::Compact {
                cb_star: a.natural_sum(b),
                degree: m.checked_mul(*n).expect("degree overflow"),
            },
        }
    }

    /// Set of limit points.
    pub fn derivative(&self) -> CanonicalSpace {
        self.iterated_derivative(&Ordinal::one())
    }

    /// `X^β`: the space of points of rank at least `β`.
    pub fn iterated_derivative(&self, beta: &Ordinal) -> CanonicalSpace {
        match self {
            CanonicalSpace::Empty => CanonicalSpace::Empty,
            CanonicalSpace::Compact { cb_star, degree } => match beta.left_subtract(cb_star) {
                Ok(rest) => CanonicalSpace::Compact {
                    cb_star: rest,
                    degree: *degree,
                },
                Err(_) => CanonicalSpace::Empty,
            },
        }
    }

    /// `X ≃ Y`: a finite rank-preserving correspondence exists. Degree is not
    /// an invariant, since a finite correspondence may relate `m` top points
    /// to `n` top points.
    pub fn equivalent(&self, other: &CanonicalSpace) -> bool {
        self.cb_star() == other.cb_star()
    }

    pub fn rank_profile(&self) -> Result<RankProfile, SpaceError> {
        match self {
            CanonicalSpace::Empty => Err(SpaceError::Empty("rank profile")),
            CanonicalSpace::Compact { cb_star, degree } => Ok(RankProfile {
                top_rank: cb_star.clone(),
                top_count: degree.get(),
            }),
        }
    }

    /// Number of points of rank `rank`.
    pub fn count_at(&self, rank: &Ordinal) -> Cardinality {
        self.rank_profile()
            .map_or(Cardinality::ZERO, |p| p.count_at(rank))
    }

    /// Highest rank whose strata differ in size class, if any.
    ///
    /// For canonical forms this is the larger top rank whenever the top ranks
    /// differ: one side has top points there, the other has none.
    pub fn stratum_difference(&self, other: &CanonicalSpace) -> Option<StratumDifference> {
        if self.equivalent(other) {
            return None;
        }
        let rank = match (self.cb_star(), other.cb_star()) {
            (Some(a), Some(b)) => a.max(b).clone(),
            (Some(a), None) | (None, Some(a)) => a.clone(),
            (None, None) => unreachable!("empty spaces are equivalent"),
        };
        Some(StratumDifference {
            left: self.count_at(&rank),
            right: other.count_at(&rank),
            rank,
        })
    }

    /// Greatest point of the underlying ordinal space: `ω^α·d` for `α ≥ 1`,
    /// `d − 1` for the discrete space.
    pub fn top_point(&self) -> Option<Ordinal> {
        match self {
            CanonicalSpace::Empty => None,
            CanonicalSpace::Compact { cb_star, degree } => Some(if cb_star.is_zero() {
                Ordinal::from(degree.get() - 1)
            } else {
                Ordinal::term(cb_star.clone(), degree.get())
            }),
        }
    }

    /// `degree` pairwise disjoint clopen intervals covering the space, each
    /// homeomorphic to `(cb_star, 1)`.
    pub fn rough_partition(&self) -> Result<Vec<Interval>, SpaceError> {
        let CanonicalSpace::Compact { cb_star, degree } = self else {
            return Err(SpaceError::Empty("rough partition"));
        };
        let step = |i: u64| {
            if cb_star.is_zero() {
                Ordinal::from(i - 1)
            } else {
                Ordinal::term(cb_star.clone(), i)
            }
        };
        let mut pieces = vec![Interval::from_zero(step(1))];
        for i in 2..=degree.get() {
            pieces.push(Interval::HalfOpen {
                lo: step(i - 1),
                hi: step(i),
            });
        }
        Ok(pieces)
    }
}

impl fmt::Display for CanonicalSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::format_canonical(self))
    }
}
