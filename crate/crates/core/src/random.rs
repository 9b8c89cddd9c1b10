//! Seeded generators for ordinals, spaces, expressions, points and
//! correspondences.

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::correspondence::{Piece, PiecewiseCorrespondence};
use crate::expr::SpaceExpr;
use crate::interval::Interval;
use crate::ordinal::Ordinal;
use crate::point::Point;
use crate::space::CanonicalSpace;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size limits for generated values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Exponent nesting: 0 gives finite ordinals, 1 polynomials in `w`, ...
    pub max_nesting: usize,
    pub max_coeff: u64,
    /// Expression tree height, a leaf counting as 1.
    pub max_depth: usize,
    pub max_terms: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_nesting: 3,
            max_coeff: 5,
            max_depth: 4,
            max_terms: 3,
        }
    }
}

pub fn ordinal<R: Rng>(rng: &mut R, bounds: &Bounds) -> Ordinal {
    ordinal_nested(rng, bounds.max_nesting, bounds)
}

pub fn ordinal_nested<R: Rng>(rng: &mut R, nesting: usize, bounds: &Bounds) -> Ordinal {
    let max_coeff = bounds.max_coeff.max(1);
    if nesting == 0 || rng.gen_bool(0.25) {
        return Ordinal::from(rng.gen_range(0..=max_coeff));
    }
    let count = rng.gen_range(1..=bounds.max_terms.max(1));
    let mut exponents: Vec<Ordinal> = (0..count)
        .map(|_| ordinal_nested(rng, nesting - 1, bounds))
        .collect();
    exponents.sort_unstable_by(|a, b| b.cmp(a));
    exponents.dedup();
    let terms = exponents
        .into_iter()
        .map(|e| (e, rng.gen_range(1..=max_coeff)))
        .collect();
    Ordinal::from_terms(terms).expect("exponents sorted and distinct")
}

/// A random ordinal in `[1, bound]`; `bound` must be positive.
pub fn ordinal_in<R: Rng>(rng: &mut R, bound: &Ordinal) -> Ordinal {
    assert!(!bound.is_zero(), "empty range");
    let terms = bound.terms();
    let k = rng.gen_range(0..terms.len());
    let mut out: Vec<(Ordinal, u64)> = terms[..k]
        .iter()
        .map(|t| (t.exponent().clone(), t.coefficient()))
        .collect();
    let t = &terms[k];
    let c = rng.gen_range(1..=t.coefficient());
    out.push((t.exponent().clone(), c));
    let mut result = Ordinal::from_terms(out).expect("prefix of a normal form");
    if c < t.coefficient() && !t.exponent().is_zero() && rng.gen_bool(0.5) {
        let e = ordinal_below(rng, t.exponent());
        result = &result + &Ordinal::term(e, rng.gen_range(1..=3));
    }
    result
}

/// A random ordinal in `[0, bound)`; `bound` must be positive.
pub fn ordinal_below<R: Rng>(rng: &mut R, bound: &Ordinal) -> Ordinal {
    if rng.gen_bool(0.2) {
        return Ordinal::zero();
    }
    let x = ordinal_in(rng, bound);
    if &x == bound {
        x.without_last_term()
    } else {
        x
    }
}

/// A nonempty canonical space.
pub fn space<R: Rng>(rng: &mut R, bounds: &Bounds) -> CanonicalSpace {
    let cb_star = ordinal(rng, bounds);
    CanonicalSpace::new(cb_star, rng.gen_range(1..=bounds.max_coeff.max(1))).expect("positive degree")
}

/// A canonical space that is empty one time in ten.
pub fn space_or_empty<R: Rng>(rng: &mut R, bounds: &Bounds) -> CanonicalSpace {
    if rng.gen_bool(0.1) {
        CanonicalSpace::Empty
    } else {
        space(rng, bounds)
    }
}

pub fn expr<R: Rng>(rng: &mut R, bounds: &Bounds) -> SpaceExpr {
    expr_of_depth(rng, bounds.max_depth.max(1), bounds)
}

fn expr_of_depth<R: Rng>(rng: &mut R, depth: usize, bounds: &Bounds) -> SpaceExpr {
    if depth <= 1 || rng.gen_bool(0.3) {
        return SpaceExpr::Canonical(space_or_empty(rng, bounds));
    }
    let child = |rng: &mut R| Box::new(expr_of_depth(rng, depth - 1, bounds));
    match rng.gen_range(0..4) {
        0 => SpaceExpr::Union(child(rng), child(rng)),
        1 => SpaceExpr::Product(child(rng), child(rng)),
        2 => SpaceExpr::Derivative(child(rng)),
        _ => {
            let inner = child(rng);
            let beta = ordinal_nested(rng, bounds.max_nesting.min(2), bounds);
            SpaceExpr::IteratedDerivative(inner, beta)
        }
    }
}

/// A rank at which `e` has points, if it has any.
pub fn rank_of<R: Rng>(rng: &mut R, e: &SpaceExpr) -> Option<Ordinal> {
    let top = e.canonicalize().cb_star()?.clone();
    for _ in 0..8 {
        let beta = if top.is_zero() || rng.gen_bool(0.3) {
            top.clone()
        } else {
            ordinal_below(rng, &top)
        };
        if !e.count_points_of_rank(&beta).is_zero() {
            return Some(beta);
        }
    }
    Some(top)
}

/// A random valid point of `e`, if `e` is nonempty.
pub fn point<R: Rng>(rng: &mut R, e: &SpaceExpr) -> Option<Point> {
    let beta = rank_of(rng, e)?;
    let index = match e.count_points_of_rank(&beta).finite() {
        Some(n) => rng.gen_range(0..n),
        None => {
            if rng.gen_bool(0.5) {
                rng.gen_range(0..16)
            } else {
                rng.gen_range(0..1_000_000)
            }
        }
    };
    e.enumerate_points_of_rank(&beta, &BigUint::from(index)).ok()
}

/// A random valid piecewise correspondence between `x` and `y`, which must
/// be equivalent and of positive `cb_star`.
///
/// Starts from a rough-partition pairing, splits pieces at random offsets
/// and adds a few extra pieces joining initial segments of two pieces.
pub fn piecewise<R: Rng>(rng: &mut R, x: &CanonicalSpace, y: &CanonicalSpace) -> PiecewiseCorrespondence {
    let xs = x.rough_partition().expect("nonempty source");
    let ys = y.rough_partition().expect("nonempty target");
    let alpha = x.cb_star().expect("nonempty source").clone();
    let surplus = |rng: &mut R, pieces: &[Interval], k: usize| match pieces.len() {
        1 => Interval::HalfOpen {
            lo: Ordinal::zero(),
            hi: Ordinal::omega_pow(alpha.clone()),
        },
        len if k < len => pieces[k].clone(),
        len => pieces[rng.gen_range(1..len)].clone(),
    };
    let mut pieces = vec![Piece::new(xs[0].clone(), ys[0].clone())];
    for k in 1..xs.len().max(ys.len()) {
        let src = surplus(rng, &xs, k);
        let dst = surplus(rng, &ys, k);
        pieces.push(Piece::new(src, dst));
    }
    for _ in 0..rng.gen_range(0..3) {
        let i = rng.gen_range(0..pieces.len());
        if let Some((a, b)) = split(rng, &pieces[i]) {
            pieces[i] = a;
            pieces.push(b);
        }
    }
    for _ in 0..rng.gen_range(0..3) {
        let src = pieces.choose(rng).expect("nonempty").src.clone();
        let dst = pieces.choose(rng).expect("nonempty").dst.clone();
        let bound = src.length().min(dst.length());
        if bound.is_zero() {
            continue;
        }
        let t = ordinal_in(rng, &bound);
        let segment = |iv: &Interval| Interval::HalfOpen {
            lo: iv.origin(),
            hi: iv.at_offset(&t),
        };
        pieces.push(Piece::new(segment(&src), segment(&dst)));
    }
    pieces.shuffle(rng);
    PiecewiseCorrespondence::new(x.clone(), y.clone(), pieces)
}

/// Cuts a piece at a common offset strictly inside it.
fn split<R: Rng>(rng: &mut R, piece: &Piece) -> Option<(Piece, Piece)> {
    let length = piece.src.length();
    if length.is_zero() {
        return None;
    }
    let floor = if piece.src.is_from_zero() { 0 } else { 1 };
    let t = ordinal_below(rng, &length);
    if t < Ordinal::from(floor) {
        return None;
    }
    let head = |iv: &Interval| match iv {
        Interval::FromZero { .. } => Interval::from_zero(iv.at_offset(&t)),
        Interval::HalfOpen { lo, .. } => Interval::HalfOpen {
            lo: lo.clone(),
            hi: iv.at_offset(&t),
        },
    };
    let tail = |iv: &Interval| Interval::HalfOpen {
        lo: iv.at_offset(&t),
        hi: iv.hi().clone(),
    };
    Some((
        Piece::new(head(&piece.src), head(&piece.dst)),
        Piece::new(tail(&piece.src), tail(&piece.dst)),
    ))
}
