//! Symbolic points of expression spaces and their Cantor-Bendixson ranks.
//!
//! A point of `Canonical(α, d)` is an ordinal `x` of the underlying space
//! (`x ≤ ω^α·d`, or `x < d` for the discrete case). Points of unions are tagged
//! with their side, points of products are pairs, and points of derivatives
//! wrap a point of the inner space whose rank clears the floor.
//!
//! Ranks are computed structurally:
//!
//! - in an ordinal space, `x > 0` has rank equal to its trailing exponent;
//! - in a product, `rank(p, q) = rank(p) ⊕ rank(q)`;
//! - in `X^β`, a point of rank `r ≥ β` in `X` has rank `γ` with `β + γ = r`.
//!
//! # Enumeration
//!
//! Every rank stratum is indexed by `0..n` when finite and by ℕ otherwise.
//! In `[0, ω^α·d]` a point of rank `β < α` is uniquely `ω^(β+1)·w + ω^β·k` with
//! `k ≥ 1` and `w < ω^ζ·d` where `β + 1 + ζ = α`; its index pairs the index of
//! `w` among the ordinals below `ω^ζ·d` with `k − 1` (see [`crate::indexing`]).
//! The point `0` is index 0 of the rank-0 stratum. Unions and products combine
//! the indexings of their factors, products summing over the finitely many
//! splittings `β = β₁ ⊕ β₂` with each part at most the largest rank of its
//! factor. The order is fixed, not meaningful.

use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::cardinality::Cardinality;
use crate::expr::SpaceExpr;
use crate::indexing::{self, Overflow};
use crate::ordinal::Ordinal;
use crate::space::CanonicalSpace;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Ord(Ordinal),
    InLeft(Box<Point>),
    InRight(Box<Point>),
    Pair(Box<Point>, Box<Point>),
    Sub(Box<Point>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointError {
    #[error("{point} is not a point of {space}")]
    Invalid { point: String, space: String },
    #[error("{point} has rank {actual}, not {expected}")]
    WrongRank {
        point: String,
        expected: Ordinal,
        actual: Ordinal,
    },
    #[error("index {index} is outside the stratum of rank {rank} ({size} points)")]
    IndexOutOfRange {
        index: BigUint,
        rank: Ordinal,
        size: Cardinality,
    },
    #[error("index {0} is too large to decode")]
    IndexTooLarge(BigUint),
}

impl Point {
    pub fn ord(x: Ordinal) -> Point {
        Point::Ord(x)
    }

    pub fn left(p: Point) -> Point {
        Point::InLeft(Box::new(p))
    }

    pub fn right(p: Point) -> Point {
        Point::InRight(Box::new(p))
    }

    pub fn pair(p: Point, q: Point) -> Point {
        Point::Pair(Box::new(p), Box::new(q))
    }

    pub fn sub(p: Point) -> Point {
        Point::Sub(Box::new(p))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Ord(x) => write!(f, "{x}"),
            Point::InLeft(p) => write!(f, "inl({p})"),
            Point::InRight(p) => write!(f, "inr({p})"),
            Point::Pair(p, q) => write!(f, "<{p}, {q}>"),
            Point::Sub(p) => write!(f, "sub({p})"),
        }
    }
}

fn invalid(p: &Point, e: &SpaceExpr) -> PointError {
    PointError::Invalid {
        point: p.to_string(),
        space: e.to_string(),
    }
}

/// Rank of the ordinal point `x` inside `[0, ω^α·d]` (or the discrete space).
fn ordinal_point_rank(space: &CanonicalSpace, x: &Ordinal) -> Option<Ordinal> {
    let top = space.top_point()?;
    if x > &top {
        return None;
    }
    match x.last_exponent() {
        Ok(e) if !space.cb_star()?.is_zero() => Some(e.clone()),
        _ => Some(Ordinal::zero()),
    }
}

/// All `(β₁, β₂)` with `β₁ ⊕ β₂ = β`, in a fixed order.
pub fn natural_splits(beta: &Ordinal) -> Vec<(Ordinal, Ordinal)> {
    type Terms = Vec<(Ordinal, u64)>;
    let mut splits: Vec<(Terms, Terms)> = vec![(Vec::new(), Vec::new())];
    for t in beta.terms() {
        let mut next = Vec::with_capacity(splits.len() * (t.coefficient() as usize + 1));
        for (l, r) in &splits {
            for a in 0..=t.coefficient() {
                let (mut l, mut r) = (l.clone(), r.clone());
                if a > 0 {
                    l.push((t.exponent().clone(), a));
                }
                if a < t.coefficient() {
                    r.push((t.exponent().clone(), t.coefficient() - a));
                }
                next.push((l, r));
            }
        }
        splits = next;
    }
    splits
        .into_iter()
        .map(|(l, r)| {
            (
                Ordinal::from_terms(l).expect("subsequence of a normal form"),
                Ordinal::from_terms(r).expect("subsequence of a normal form"),
            )
        })
        .collect()
}

/// Terms of `o` with exponent at least `floor`.
fn truncate(o: &Ordinal, floor: &Ordinal) -> Ordinal {
    let terms = o
        .terms()
        .iter()
        .take_while(|t| t.exponent() >= floor)
        .map(|t| (t.exponent().clone(), t.coefficient()))
        .collect();
    Ordinal::from_terms(terms).expect("prefix of a normal form")
}

/// Calls `visit` on every `(β₁, β₂)` with `β₁ ⊕ β₂ = β`, `β₁ ≤ left` and
/// `β₂ ≤ right`, in the order of [`natural_splits`], until it breaks.
///
/// Choices are made term by term from the leading exponent down; a side
/// whose prefix already fell below its bound is no longer compared.
fn for_each_bounded_split(
    beta: &Ordinal,
    left: &Ordinal,
    right: &Ordinal,
    visit: &mut dyn FnMut(Ordinal, Ordinal) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn go(
        terms: &[crate::ordinal::Term],
        bounds: [&Ordinal; 2],
        tight: [bool; 2],
        acc: &mut [Vec<(Ordinal, u64)>; 2],
        visit: &mut dyn FnMut(Ordinal, Ordinal) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let Some((t, rest)) = terms.split_first() else {
            let build = |v: &Vec<(Ordinal, u64)>| {
                Ordinal::from_terms(v.clone()).expect("subsequence of a normal form")
            };
            return visit(build(&acc[0]), build(&acc[1]));
        };
        for a in 0..=t.coefficient() {
            let parts = [a, t.coefficient() - a];
            let mut next = tight;
            let mut feasible = true;
            for side in 0..2 {
                if parts[side] > 0 {
                    acc[side].push((t.exponent().clone(), parts[side]));
                }
                if tight[side] {
                    let mine = Ordinal::from_terms(acc[side].clone()).expect("subsequence of a normal form");
                    match mine.cmp(&truncate(bounds[side], t.exponent())) {
                        std::cmp::Ordering::Greater => feasible = false,
                        std::cmp::Ordering::Less => next[side] = false,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            let flow = if feasible {
                go(rest, bounds, next, acc, visit)
            } else {
                ControlFlow::Continue(())
            };
            for side in 0..2 {
                if parts[side] > 0 {
                    acc[side].pop();
                }
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
    go(
        beta.terms(),
        [left, right],
        [true, true],
        &mut [Vec::new(), Vec::new()],
        visit,
    )
}

impl SpaceExpr {
    /// Cantor-Bendixson rank of `p` in this space.
    pub fn point_rank(&self, p: &Point) -> Result<Ordinal, PointError> {
        match (self, p) {
            (SpaceExpr::Canonical(s), Point::Ord(x)) => {
                ordinal_point_rank(s, x).ok_or_else(|| invalid(p, self))
            }
            (SpaceExpr::Union(l, _), Point::InLeft(q)) => l.point_rank(q),
            (SpaceExpr::Union(_, r), Point::InRight(q)) => r.point_rank(q),
            (SpaceExpr::Product(l, r), Point::Pair(a, b)) => {
                Ok(l.point_rank(a)?.natural_sum(&r.point_rank(b)?))
            }
            (SpaceExpr::Derivative(e), Point::Sub(q)) => {
                e.point_rank(q)?.drop_one().map_err(|_| invalid(p, self))
            }
            (SpaceExpr::IteratedDerivative(e, beta), Point::Sub(q)) => beta
                .left_subtract(&e.point_rank(q)?)
                .map_err(|_| invalid(p, self)),
            _ => Err(invalid(p, self)),
        }
    }

    /// Largest rank of a point, read off the point-rank rules; `None` when
    /// the space has no points.
    pub fn rank_ceiling(&self) -> Option<Ordinal> {
        match self {
            SpaceExpr::Canonical(s) => s.cb_star().cloned(),
            SpaceExpr::Union(l, r) => match (l.rank_ceiling(), r.rank_ceiling()) {
                (Some(a), Some(b)) => Some(a.max(b)),
                (a, b) => a.or(b),
            },
            SpaceExpr::Product(l, r) => Some(l.rank_ceiling()?.natural_sum(&r.rank_ceiling()?)),
            SpaceExpr::Derivative(e) => {
                let c = e.rank_ceiling()?;
                (!c.is_zero()).then(|| c.drop_one().expect("positive"))
            }
            SpaceExpr::IteratedDerivative(e, beta) => beta.left_subtract(&e.rank_ceiling()?).ok(),
        }
    }

    /// Splits of `beta` over the factors of a product that can carry points.
    fn product_splits(l: &SpaceExpr, r: &SpaceExpr, beta: &Ordinal) -> Vec<(Ordinal, Ordinal)> {
        let mut out = Vec::new();
        if let (Some(cl), Some(cr)) = (l.rank_ceiling(), r.rank_ceiling()) {
            let _ = for_each_bounded_split(beta, &cl, &cr, &mut |a, b| {
                out.push((a, b));
                ControlFlow::Continue(())
            });
        }
        out
    }

    pub fn is_valid_point(&self, p: &Point) -> bool {
        self.point_rank(p).is_ok()
    }

    /// A point is isolated iff it has rank 0.
    pub fn is_isolated(&self, p: &Point) -> Result<bool, PointError> {
        Ok(self.point_rank(p)?.is_zero())
    }

    /// Number of points of rank exactly `beta`.
    pub fn count_points_of_rank(&self, beta: &Ordinal) -> Cardinality {
        match self {
            SpaceExpr::Canonical(s) => s.count_at(beta),
            SpaceExpr::Union(l, r) => l.count_points_of_rank(beta) + r.count_points_of_rank(beta),
            SpaceExpr::Product(l, r) => {
                let (Some(cl), Some(cr)) = (l.rank_ceiling(), r.rank_ceiling()) else {
                    return Cardinality::ZERO;
                };
                let mut total = Cardinality::ZERO;
                let _ = for_each_bounded_split(beta, &cl, &cr, &mut |a, b| {
                    total = total + l.count_points_of_rank(&a) * r.count_points_of_rank(&b);
                    if total.is_finite() {
                        ControlFlow::Continue(())
                    } else {
                        ControlFlow::Break(())
                    }
                });
                total
            }
            SpaceExpr::Derivative(e) => e.count_points_of_rank(&(&Ordinal::one() + beta)),
            SpaceExpr::IteratedDerivative(e, gamma) => e.count_points_of_rank(&(gamma + beta)),
        }
    }

    /// The `index`-th point of the rank-`beta` stratum.
    pub fn enumerate_points_of_rank(&self, beta: &Ordinal, index: &BigUint) -> Result<Point, PointError> {
        let out_of_range = || PointError::IndexOutOfRange {
            index: index.clone(),
            rank: beta.clone(),
            size: self.count_points_of_rank(beta),
        };
        let too_large = |_: Overflow| PointError::IndexTooLarge(index.clone());
        match self {
            SpaceExpr::Canonical(s) => {
                if let Cardinality::Finite(n) = s.count_at(beta) {
                    if index >= &BigUint::from(n) {
                        return Err(out_of_range());
                    }
                }
                canonical_nth(s, beta, index).map_err(too_large)
            }
            SpaceExpr::Union(l, r) => {
                let sizes = [l.count_points_of_rank(beta), r.count_points_of_rank(beta)];
                match indexing::union_locate(&sizes, index) {
                    Some((0, i)) => Ok(Point::left(l.enumerate_points_of_rank(beta, &i)?)),
                    Some((_, i)) => Ok(Point::right(r.enumerate_points_of_rank(beta, &i)?)),
                    None => Err(out_of_range()),
                }
            }
            SpaceExpr::Product(l, r) => {
                let splits = SpaceExpr::product_splits(l, r, beta);
                let sizes = split_sizes(l, r, &splits);
                let (k, local) = indexing::union_locate(&sizes, index).ok_or_else(out_of_range)?;
                let (b1, b2) = &splits[k];
                let (c1, c2) = (l.count_points_of_rank(b1), r.count_points_of_rank(b2));
                let (i1, i2) = indexing::product_split(c1, c2, &local).expect("index within part");
                Ok(Point::pair(
                    l.enumerate_points_of_rank(b1, &i1)?,
                    r.enumerate_points_of_rank(b2, &i2)?,
                ))
            }
            SpaceExpr::Derivative(e) => e
                .enumerate_points_of_rank(&(&Ordinal::one() + beta), index)
                .map(Point::sub)
                .map_err(|err| rebase(err, beta)),
            SpaceExpr::IteratedDerivative(e, gamma) => e
                .enumerate_points_of_rank(&(gamma + beta), index)
                .map(Point::sub)
                .map_err(|err| rebase(err, beta)),
        }
    }

    /// Inverse of [`SpaceExpr::enumerate_points_of_rank`].
    pub fn index_of_point(&self, beta: &Ordinal, p: &Point) -> Result<BigUint, PointError> {
        let rank = self.point_rank(p)?;
        if &rank != beta {
            return Err(PointError::WrongRank {
                point: p.to_string(),
                expected: beta.clone(),
                actual: rank,
            });
        }
        Ok(self.index_unchecked(beta, p))
    }

    fn index_unchecked(&self, beta: &Ordinal, p: &Point) -> BigUint {
        match (self, p) {
            (SpaceExpr::Canonical(s), Point::Ord(x)) => canonical_index(s, beta, x),
            (SpaceExpr::Union(l, r), Point::InLeft(q)) | (SpaceExpr::Union(l, r), Point::InRight(q)) => {
                let sizes = [l.count_points_of_rank(beta), r.count_points_of_rank(beta)];
                let (part, local) = match p {
                    Point::InLeft(_) => (0, l.index_unchecked(beta, q)),
                    _ => (1, r.index_unchecked(beta, q)),
                };
                indexing::union_index(&sizes, part, &local)
            }
            (SpaceExpr::Product(l, r), Point::Pair(a, b)) => {
                let (b1, b2) = (
                    l.point_rank(a).expect("validated"),
                    r.point_rank(b).expect("validated"),
                );
                let splits = SpaceExpr::product_splits(l, r, beta);
                let sizes = split_sizes(l, r, &splits);
                let k = splits
                    .iter()
                    .position(|(x, y)| x == &b1 && y == &b2)
                    .expect("ranks split beta");
                let (c1, c2) = (l.count_points_of_rank(&b1), r.count_points_of_rank(&b2));
                let local =
                    indexing::product_index(c1, c2, &l.index_unchecked(&b1, a), &r.index_unchecked(&b2, b));
                indexing::union_index(&sizes, k, &local)
            }
            (SpaceExpr::Derivative(e), Point::Sub(q)) => e.index_unchecked(&(&Ordinal::one() + beta), q),
            (SpaceExpr::IteratedDerivative(e, gamma), Point::Sub(q)) => e.index_unchecked(&(gamma + beta), q),
            _ => unreachable!("point validated against expression"),
        }
    }

    /// Sends `p` to the point of the same rank and stratum index in the
    /// canonical form, reducing the index modulo the target stratum size when
    /// that stratum is finite.
    pub fn map_point_to_canonical(&self, p: &Point) -> Result<Point, PointError> {
        let beta = self.point_rank(p)?;
        let index = self.index_unchecked(&beta, p);
        let target = SpaceExpr::Canonical(self.canonicalize());
        let index = match target.count_points_of_rank(&beta) {
            Cardinality::Finite(n) => index.mod_floor(&BigUint::from(n)),
            Cardinality::CountablyInfinite => index,
        };
        target.enumerate_points_of_rank(&beta, &index)
    }
}

fn split_sizes(l: &SpaceExpr, r: &SpaceExpr, splits: &[(Ordinal, Ordinal)]) -> Vec<Cardinality> {
    splits
        .iter()
        .map(|(a, b)| l.count_points_of_rank(a) * r.count_points_of_rank(b))
        .collect()
}

fn rebase(err: PointError, beta: &Ordinal) -> PointError {
    match err {
        PointError::IndexOutOfRange { index, size, .. } => PointError::IndexOutOfRange {
            index,
            rank: beta.clone(),
            size,
        },
        other => other,
    }
}

/// Data for the rank-`β` stratum of `[0, ω^α·d]` when `β < α`: the multiplier
/// `ω^(β+1)` and the bound `ω^ζ·d` on `w`.
fn lower_stratum(alpha: &Ordinal, degree: u64, beta: &Ordinal) -> (Ordinal, Ordinal) {
    let step = beta.successor();
    let zeta = step.left_subtract(alpha).expect("beta < alpha");
    (Ordinal::omega_pow(step), Ordinal::term(zeta, degree))
}

fn canonical_nth(s: &CanonicalSpace, beta: &Ordinal, index: &BigUint) -> Result<Point, Overflow> {
    let (alpha, degree) = match s {
        CanonicalSpace::Empty => unreachable!("empty strata are rejected by the caller"),
        CanonicalSpace::Compact { cb_star, degree } => (cb_star, degree.get()),
    };
    let small = || index.to_u64().ok_or(Overflow);
    if alpha.is_zero() {
        return Ok(Point::Ord(Ordinal::from(small()?)));
    }
    if beta == alpha {
        return Ok(Point::Ord(Ordinal::term(alpha.clone(), small()? + 1)));
    }
    let mut j = index.clone();
    if beta.is_zero() {
        if j.is_zero() {
            return Ok(Point::Ord(Ordinal::zero()));
        }
        j -= 1u32;
    }
    let (multiplier, bound) = lower_stratum(alpha, degree, beta);
    let (wi, k) = indexing::product_split(indexing::below_size(&bound), Cardinality::CountablyInfinite, &j)
        .expect("infinite stratum");
    let w = indexing::below_nth(&wi, &bound)?;
    let k = k.to_u64().and_then(|k| k.checked_add(1)).ok_or(Overflow)?;
    Ok(Point::Ord(&(&multiplier * &w) + &Ordinal::term(beta.clone(), k)))
}

fn canonical_index(s: &CanonicalSpace, beta: &Ordinal, x: &Ordinal) -> BigUint {
    let (alpha, degree) = match s {
        CanonicalSpace::Empty => unreachable!("validated point"),
        CanonicalSpace::Compact { cb_star, degree } => (cb_star, degree.get()),
    };
    if alpha.is_zero() {
        return BigUint::from(x.as_finite().expect("finite point"));
    }
    if beta == alpha {
        return BigUint::from(x.leading_coefficient().expect("top point") - 1);
    }
    if x.is_zero() {
        return BigUint::zero();
    }
    let (_, bound) = lower_stratum(alpha, degree, beta);
    let step = beta.successor();
    let k = x.terms().last().expect("nonzero").coefficient();
    let w = Ordinal::from_terms(
        x.without_last_term()
            .terms()
            .iter()
            .map(|t| {
                let e = step.left_subtract(t.exponent()).expect("exponent above beta");
                (e, t.coefficient())
            })
            .collect(),
    )
    .expect("left division keeps the order of exponents");
    let index = indexing::product_index(
        indexing::below_size(&bound),
        Cardinality::CountablyInfinite,
        &indexing::below_index(&w, &bound),
        &BigUint::from(k - 1),
    );
    if beta.is_zero() {
        index + 1u32
    } else {
        index
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn e(s: &str) -> SpaceExpr {
        s.parse().unwrap()
    }

    fn big(i: u32) -> BigUint {
        BigUint::from(i)
    }

    #[test]
    fn rank_examples() {
        let x = e("can(2,1)");
        assert_eq!(x.point_rank(&Point::Ord(o("0"))).unwrap(), o("0"));
        assert_eq!(x.point_rank(&Point::Ord(o("w*3"))).unwrap(), o("1"));
        assert_eq!(x.point_rank(&Point::Ord(o("w^2"))).unwrap(), o("2"));
        assert!(x.point_rank(&Point::Ord(o("w^2+1"))).is_err());
        let p = e("can(1,1) x can(1,1)");
        let top = Point::pair(Point::Ord(o("w")), Point::Ord(o("w")));
        assert_eq!(p.point_rank(&top).unwrap(), o("2"));
        let d = e("can(0,3)");
        assert_eq!(d.point_rank(&Point::Ord(o("2"))).unwrap(), o("0"));
        assert!(d.point_rank(&Point::Ord(o("3"))).is_err());
    }

    #[test]
    fn derivative_points_need_rank_floor() {
        let x = e("D(can(2,1))");
        assert!(x.point_rank(&Point::sub(Point::Ord(o("5")))).is_err());
        assert_eq!(x.point_rank(&Point::sub(Point::Ord(o("w^2")))).unwrap(), o("1"));
        let y = e("D[w](can(w*2,1))");
        let p = Point::sub(Point::Ord(o("w^(w*2)")));
        assert_eq!(y.point_rank(&p).unwrap(), o("w"));
        assert!(y.point_rank(&Point::sub(Point::Ord(o("w^5")))).is_err());
    }

    #[test]
    fn isolation_examples() {
        let x = e("can(1,1)");
        assert!(x.is_isolated(&Point::Ord(o("7"))).unwrap());
        assert!(!x.is_isolated(&Point::Ord(o("w"))).unwrap());
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            e("can(2,3)").count_points_of_rank(&o("2")),
            Cardinality::Finite(3)
        );
        assert_eq!(e("can(2,3)").count_points_of_rank(&o("5")), Cardinality::ZERO);
        assert_eq!(
            e("can(1,2) x can(1,3)").count_points_of_rank(&o("2")),
            Cardinality::Finite(6)
        );
        assert_eq!(
            e("can(1,1) (+) can(1,1)").count_points_of_rank(&o("1")),
            Cardinality::Finite(2)
        );
    }

    #[test]
    fn bounded_splits_match_filtered_splits() {
        for (beta, l, r) in [
            ("w^2*2+w*3+2", "w^2+w", "w^2*3"),
            ("w^2*2+w*3+2", "w^2*2+w*3+2", "0"),
            ("w*4+3", "w*2+5", "w*2+1"),
            ("w^w+w^3*2", "w^3", "w^w+1"),
            ("5", "2", "2"),
        ] {
            let (beta, l, r) = (o(beta), o(l), o(r));
            let mut got = Vec::new();
            let _ = for_each_bounded_split(&beta, &l, &r, &mut |a, b| {
                got.push((a, b));
                ControlFlow::Continue(())
            });
            let want: Vec<_> = natural_splits(&beta)
                .into_iter()
                .filter(|(a, b)| a <= &l && b <= &r)
                .collect();
            assert_eq!(got, want, "{beta} {l} {r}");
        }
    }

    #[test]
    fn natural_splits_of_small_ordinals() {
        assert_eq!(natural_splits(&o("0")), vec![(o("0"), o("0"))]);
        assert_eq!(natural_splits(&o("w*2+1")).len(), 6);
        for (a, b) in natural_splits(&o("w^2+w*2+3")) {
            assert_eq!(a.natural_sum(&b), o("w^2+w*2+3"));
        }
    }

    #[test]
    fn enumerate_examples() {
        let x = e("can(2,3)");
        for k in 0..3u32 {
            let p = x.enumerate_points_of_rank(&o("2"), &big(k)).unwrap();
            assert_eq!(p, Point::Ord(Ordinal::term(o("2"), u64::from(k) + 1)));
        }
        assert!(matches!(
            x.enumerate_points_of_rank(&o("2"), &big(3)),
            Err(PointError::IndexOutOfRange { .. })
        ));
        let y = e("can(1,1)");
        for i in 0..10u32 {
            let p = y.enumerate_points_of_rank(&o("0"), &big(i)).unwrap();
            assert_eq!(p, Point::Ord(Ordinal::from(u64::from(i))));
        }
    }

    #[test]
    fn enumeration_round_trips() {
        for (expr, ranks) in [
            ("can(3,2)", vec!["0", "1", "2", "3"]),
            ("can(w+1,2)", vec!["0", "1", "w", "w+1"]),
            ("can(1,1) (+) can(2,1)", vec!["0", "1", "2"]),
            ("can(1,2) x can(w,1)", vec!["0", "1", "w", "w+1"]),
            ("D(can(w,2)) x can(0,3)", vec!["0", "5", "w"]),
            ("D[w](can(w*2,1)) (+) empty", vec!["0", "w"]),
        ] {
            let x = e(expr);
            for r in ranks {
                let r = o(r);
                let limit = match x.count_points_of_rank(&r) {
                    Cardinality::Finite(n) => n.min(60) as u32,
                    Cardinality::CountablyInfinite => 60,
                };
                for i in 0..limit {
                    let p = x.enumerate_points_of_rank(&r, &big(i)).unwrap();
                    assert_eq!(x.point_rank(&p).unwrap(), r, "{expr} at {r}: {p}");
                    assert_eq!(x.index_of_point(&r, &p).unwrap(), big(i), "{expr}: {p}");
                }
            }
        }
    }

    #[test]
    fn index_of_given_points() {
        let x = e("can(w^2,3)");
        for p in [
            "w^2*5+w*3+7",
            "w^(w+1)*2+w^w",
            "w^w^2*2+w^7",
            "w^w^2*2",
            "0",
            "w^3*9",
        ] {
            let p = Point::Ord(o(p));
            let r = x.point_rank(&p).unwrap();
            let i = x.index_of_point(&r, &p).unwrap();
            assert_eq!(x.enumerate_points_of_rank(&r, &i).unwrap(), p);
        }
        let wrong = x.index_of_point(&o("1"), &Point::Ord(o("w^2")));
        assert!(matches!(wrong, Err(PointError::WrongRank { .. })));
    }

    #[test]
    fn map_to_canonical_examples() {
        let x = e("can(2,1)");
        let p = Point::Ord(o("w*4+2"));
        assert_eq!(x.map_point_to_canonical(&p).unwrap(), p);
        let u = e("can(1,1) (+) can(1,1)");
        let q = u
            .map_point_to_canonical(&Point::right(Point::Ord(o("w"))))
            .unwrap();
        assert_eq!(q, Point::Ord(o("w*2")));
        let q = u
            .map_point_to_canonical(&Point::left(Point::Ord(o("w"))))
            .unwrap();
        assert_eq!(q, Point::Ord(o("w")));
    }
}
