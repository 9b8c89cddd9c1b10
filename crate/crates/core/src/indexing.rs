//! Bijections between countable sets built from ordinals and the naturals.
//!
//! Every set here is indexed by `0..n` when finite and by all of ℕ when
//! infinite, and every `*_index` function has an exact inverse `*_nth`.
//!
//! - Pairs use the Cantor pairing `π(x, y) = (x+y)(x+y+1)/2 + y`.
//! - Fixed-length tuples pair their two halves recursively, so the bit length
//!   of a code grows linearly with the tuple length.
//! - Finite sequences are `0` when empty, else `1 + π(len − 1, tuple)`.
//! - `Below(η)`, the ordinals `< η`, splits along the leading term
//!   `η = ω^e·c + r` into `[0, c) × Below(ω^e)` and the tail `ω^e·c + Below(r)`.
//!   Finite parts come first, two infinite parts alternate.
//! - `Below(ω^m)` for finite `m` is `ℕ^m` through the coefficient vector.
//!   For infinite `e`, an ordinal below `ω^e` is the finite set of its terms,
//!   coded as the sequence of `π(gap, coefficient − 1)` where the gaps are taken
//!   between the sorted indices of its exponents in `Below(e)`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::cardinality::Cardinality;
use crate::ordinal::Ordinal;

/// An index too large to be decoded into a value (a sequence length or a
/// coefficient that does not fit the machine types).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

pub fn pair(x: &BigUint, y: &BigUint) -> BigUint {
    let s = x + y;
    ((&s * (&s + 1u32)) >> 1) + y
}

pub fn unpair(z: &BigUint) -> (BigUint, BigUint) {
    let disc: BigUint = (z << 3u32) + 1u32;
    let w = (disc.sqrt() - 1u32) >> 1u32;
    let t = (&w * (&w + 1u32)) >> 1;
    let y = z - t;
    let x = w - &y;
    (x, y)
}

pub fn tuple_index(xs: &[BigUint]) -> BigUint {
    match xs {
        [] => BigUint::zero(),
        [x] => x.clone(),
        _ => {
            let (l, r) = xs.split_at(xs.len() / 2);
            pair(&tuple_index(l), &tuple_index(r))
        }
    }
}

pub fn tuple_nth(z: &BigUint, len: usize) -> Vec<BigUint> {
    match len {
        0 => Vec::new(),
        1 => vec![z.clone()],
        _ => {
            let (a, b) = unpair(z);
            let mut out = tuple_nth(&a, len / 2);
            out.extend(tuple_nth(&b, len - len / 2));
            out
        }
    }
}

pub fn sequence_index(xs: &[BigUint]) -> BigUint {
    if xs.is_empty() {
        return BigUint::zero();
    }
    pair(&BigUint::from(xs.len() - 1), &tuple_index(xs)) + 1u32
}

pub fn sequence_nth(z: &BigUint) -> Result<Vec<BigUint>, Overflow> {
    if z.is_zero() {
        return Ok(Vec::new());
    }
    let (len, tuple) = unpair(&(z - 1u32));
    let len = len.to_usize().filter(|l| *l < 1 << 16).ok_or(Overflow)? + 1;
    Ok(tuple_nth(&tuple, len))
}

/// Number of ordinals below `eta`.
pub fn below_size(eta: &Ordinal) -> Cardinality {
    match eta.as_finite() {
        Some(n) => Cardinality::Finite(n),
        None => Cardinality::CountablyInfinite,
    }
}

/// Splits an infinite `eta` into `(e, c, r)` with `eta = ω^e·c + r`.
fn split_leading(eta: &Ordinal) -> (Ordinal, u64, Ordinal) {
    let head = &eta.terms()[0];
    (
        head.exponent().clone(),
        head.coefficient(),
        eta.without_leading_term(),
    )
}

/// Index of `x` in `Below(eta)`; requires `x < eta`.
pub fn below_index(x: &Ordinal, eta: &Ordinal) -> BigUint {
    debug_assert!(x < eta);
    if let Some(n) = x.as_finite().filter(|_| eta.is_finite()) {
        return BigUint::from(n);
    }
    let (e, c, rest) = split_leading(eta);
    let block = Ordinal::term(e.clone(), c);
    let tail_size = below_size(&rest);
    if x >= &block {
        let local = below_index(&block.left_subtract(x).expect("x >= block"), &rest);
        return match tail_size {
            Cardinality::Finite(_) => local,
            Cardinality::CountablyInfinite => (local << 1) + 1u32,
        };
    }
    let j = x.coefficient_of(&e);
    let below_power = if j > 0 {
        x.without_leading_term()
    } else {
        x.clone()
    };
    let local = BigUint::from(j) + BigUint::from(c) * power_index(&below_power, &e);
    match tail_size {
        Cardinality::Finite(s) => local + s,
        Cardinality::CountablyInfinite => local << 1,
    }
}

/// The `i`-th ordinal of `Below(eta)`; `i` must be below `below_size(eta)`.
pub fn below_nth(i: &BigUint, eta: &Ordinal) -> Result<Ordinal, Overflow> {
    if let Some(n) = eta.as_finite() {
        let i = i.to_u64().filter(|i| *i < n).ok_or(Overflow)?;
        return Ok(Ordinal::from(i));
    }
    let (e, c, rest) = split_leading(eta);
    let block = Ordinal::term(e.clone(), c);
    let in_block = |k: &BigUint| -> Result<Ordinal, Overflow> {
        let (q, j) = k.div_rem(&BigUint::from(c));
        let j = j.to_u64().expect("remainder below c");
        Ok(&Ordinal::term(e.clone(), j) + &power_nth(&q, &e)?)
    };
    match below_size(&rest) {
        Cardinality::Finite(s) => {
            let s = BigUint::from(s);
            if i < &s {
                Ok(&block + &below_nth(i, &rest)?)
            } else {
                in_block(&(i - s))
            }
        }
        Cardinality::CountablyInfinite => {
            let (half, odd) = i.div_rem(&BigUint::from(2u32));
            if odd.is_one() {
                Ok(&block + &below_nth(&half, &rest)?)
            } else {
                in_block(&half)
            }
        }
    }
}

/// Index of `z < ω^e` for `e ≥ 1`.
fn power_index(z: &Ordinal, e: &Ordinal) -> BigUint {
    if let Some(m) = e.as_finite() {
        let coefficients: Vec<BigUint> = (0..m)
            .rev()
            .map(|k| BigUint::from(z.coefficient_of(&Ordinal::from(k))))
            .collect();
        return tuple_index(&coefficients);
    }
    let mut keyed: Vec<(BigUint, u64)> = z
        .terms()
        .iter()
        .map(|t| (below_index(t.exponent(), e), t.coefficient()))
        .collect();
    keyed.sort();
    let mut previous: Option<BigUint> = None;
    let codes: Vec<BigUint> = keyed
        .into_iter()
        .map(|(g, c)| {
            let gap = match &previous {
                None => g.clone(),
                Some(p) => &g - p - 1u32,
            };
            previous = Some(g);
            pair(&gap, &BigUint::from(c - 1))
        })
        .collect();
    sequence_index(&codes)
}

fn power_nth(i: &BigUint, e: &Ordinal) -> Result<Ordinal, Overflow> {
    if let Some(m) = e.as_finite() {
        let m = usize::try_from(m).map_err(|_| Overflow)?;
        let coefficients = tuple_nth(i, m);
        let mut terms = Vec::new();
        for (k, c) in coefficients.iter().enumerate() {
            let c = c.to_u64().ok_or(Overflow)?;
            if c > 0 {
                terms.push((Ordinal::from((m - 1 - k) as u64), c));
            }
        }
        return Ok(Ordinal::from_terms(terms).expect("decreasing exponents"));
    }
    let mut g: Option<BigUint> = None;
    let mut terms = Vec::new();
    for code in sequence_nth(i)? {
        let (gap, c) = unpair(&code);
        let next = match g {
            None => gap,
            Some(p) => p + gap + 1u32,
        };
        let c = c.to_u64().and_then(|c| c.checked_add(1)).ok_or(Overflow)?;
        terms.push((below_nth(&next, e)?, c));
        g = Some(next);
    }
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(Ordinal::from_terms(terms).expect("distinct exponents"))
}

/// Locates global index `i` in a disjoint union of parts with the given
/// sizes: finite parts first in order, then the infinite parts round robin.
pub fn union_locate(sizes: &[Cardinality], i: &BigUint) -> Option<(usize, BigUint)> {
    let mut offset = BigUint::zero();
    for (k, size) in sizes.iter().enumerate() {
        if let Cardinality::Finite(n) = size {
            let end = &offset + *n;
            if i < &end {
                return Some((k, i - &offset));
            }
            offset = end;
        }
    }
    let infinite: Vec<usize> = (0..sizes.len()).filter(|k| !sizes[*k].is_finite()).collect();
    if infinite.is_empty() {
        return None;
    }
    let (q, r) = (i - offset).div_rem(&BigUint::from(infinite.len()));
    Some((infinite[r.to_usize().expect("small remainder")], q))
}

pub fn union_index(sizes: &[Cardinality], part: usize, local: &BigUint) -> BigUint {
    match sizes[part] {
        Cardinality::Finite(_) => {
            let before: u64 = sizes[..part].iter().filter_map(|s| s.finite()).sum();
            local + before
        }
        Cardinality::CountablyInfinite => {
            let finite: u64 = sizes.iter().filter_map(|s| s.finite()).sum();
            let infinite = sizes.iter().filter(|s| !s.is_finite()).count();
            let slot = sizes[..part].iter().filter(|s| !s.is_finite()).count();
            local * infinite + slot + finite
        }
    }
}

/// Splits index `i` of a product `A × B`.
pub fn product_split(a: Cardinality, b: Cardinality, i: &BigUint) -> Option<(BigUint, BigUint)> {
    if let Cardinality::Finite(total) = a * b {
        if i >= &BigUint::from(total) {
            return None;
        }
    }
    match (a, b) {
        (Cardinality::Finite(n), _) => {
            let (q, r) = i.div_rem(&BigUint::from(n));
            Some((r, q))
        }
        (_, Cardinality::Finite(n)) => {
            let (q, r) = i.div_rem(&BigUint::from(n));
            Some((q, r))
        }
        _ => Some(unpair(i)),
    }
}

pub fn product_index(a: Cardinality, b: Cardinality, ia: &BigUint, ib: &BigUint) -> BigUint {
    match (a, b) {
        (Cardinality::Finite(n), _) => ib * n + ia,
        (_, Cardinality::Finite(n)) => ia * n + ib,
        _ => pair(ia, ib),
    }
}
