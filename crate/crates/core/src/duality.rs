//! Multiplicative shrinking operators and pre-derivations on finite sets.
//!
//! An operator `f` with `f(S) ⊆ S` that is multiplicative on rectangles,
//! `f(S×T) = f(S)×f(T)`, has a complement `f̄(S) = S \ f(S)` satisfying the
//! pre-derivation rule `f̄(S×T) = f̄(S)×T ∪ S×f̄(T)`. Taking `f` to be "isolated
//! points" gives the product rule for the derivative.
//!
//! [`check_pre_derivation_duality`] verifies the rule exhaustively on every
//! rectangle of two small universes.

use std::collections::BTreeSet;

use thiserror::Error;

/// Largest universe enumerated exhaustively.
pub const MAX_UNIVERSE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("operator on the {side} universe does not shrink subset #{subset:b}")]
    NotShrinking { side: &'static str, subset: u64 },
    #[error("universe of {0} elements exceeds the exhaustive limit")]
    UniverseTooLarge(usize),
}

/// Checks the pre-derivation rule for the complement of the multiplicative
/// extension of `fa` and `fb` on all rectangles `S×T`.
///
/// Returns `Ok(false)` if the rule fails on some rectangle.
pub fn check_pre_derivation_duality<A, B, FA, FB>(
    universe_a: &[A],
    universe_b: &[B],
    fa: FA,
    fb: FB,
) -> Result<bool, DualityError>
where
    A: Ord + Clone,
    B: Ord + Clone,
    FA: Fn(&BTreeSet<A>) -> BTreeSet<A>,
    FB: Fn(&BTreeSet<B>) -> BTreeSet<B>,
{
    let subsets_a = tabulate(universe_a, &fa, "first")?;
    let subsets_b = tabulate(universe_b, &fb, "second")?;

    for (s, fs) in &subsets_a {
        let bar_s: BTreeSet<A> = s.difference(fs).cloned().collect();
        for (t, ft) in &subsets_b {
            let bar_t: BTreeSet<B> = t.difference(ft).cloned().collect();
            let whole = rectangle(s, t);
            let kept = rectangle(fs, ft);
            let lhs: BTreeSet<(A, B)> = whole.difference(&kept).cloned().collect();
            let mut rhs = rectangle(&bar_s, t);
            rhs.extend(rectangle(s, &bar_t));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn rectangle<A: Ord + Clone, B: Ord + Clone>(s: &BTreeSet<A>, t: &BTreeSet<B>) -> BTreeSet<(A, B)> {
    s.iter()
        .flat_map(|a| t.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

type Tabulated<T> = Vec<(BTreeSet<T>, BTreeSet<T>)>;

fn tabulate<T, F>(universe: &[T], f: &F, side: &'static str) -> Result<Tabulated<T>, DualityError>
where
    T: Ord + Clone,
    F: Fn(&BTreeSet<T>) -> BTreeSet<T>,
{
    if universe.len() > MAX_UNIVERSE {
        return Err(DualityError::UniverseTooLarge(universe.len()));
    }
    (0u64..1 << universe.len())
        .map(|mask| {
            let subset: BTreeSet<T> = universe
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, x)| x.clone())
                .collect();
            let image = f(&subset);
            if !image.is_subset(&subset) {
                return Err(DualityError::NotShrinking { side, subset: mask });
            }
            Ok((subset, image))
        })
        .collect()
}
