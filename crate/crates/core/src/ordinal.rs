//! Countable ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a finite list of terms `ω^e·c` with strictly decreasing
//! exponents `e` (themselves ordinals) and coefficients `c ≥ 1`. The empty
//! list is zero. Normal forms are unique, so equality and ordering are
//! structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("left subtraction requires {left} <= {right}")]
    NotAPrefix { left: Ordinal, right: Ordinal },
    #[error("zero has no terms")]
    Zero,
    #[error("coefficient must be positive")]
    ZeroCoefficient,
    #[error("exponents must strictly decrease")]
    Unordered,
}

/// One summand `ω^exponent · coefficient` of a normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    exponent: Ordinal,
    coefficient: u64,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }
}

/// An ordinal in Cantor normal form.
///
/// The derived order is the ordinal order: terms compare by exponent and then
/// coefficient, and a proper prefix is smaller.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from(1)
    }

    /// The ordinal ω.
    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// The single-term ordinal `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal::term(exponent, 1)
    }

    /// `ω^exponent · coefficient`; zero when the coefficient is zero.
    pub fn term(exponent: Ordinal, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs that are already
    /// in normal form.
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Result<Self, OrdinalError> {
        for pair in terms.windows(2) {
            if pair[0].0 <= pair[1].0 {
                return Err(OrdinalError::Unordered);
            }
        }
        if terms.iter().any(|(_, c)| *c == 0) {
            return Err(OrdinalError::ZeroCoefficient);
        }
        Ok(Ordinal {
            terms: terms
                .into_iter()
                .map(|(exponent, coefficient)| Term {
                    exponent,
                    coefficient,
                })
                .collect(),
        })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    /// The natural number this ordinal equals, if it is finite.
    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn successor(&self) -> Ordinal {
        self + &Ordinal::one()
    }

    /// True for nonzero ordinals without a last element below them.
    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    /// Exponent of the leading term.
    pub fn leading_exponent(&self) -> Result<&Ordinal, OrdinalError> {
        self.terms.first().map(|t| &t.exponent).ok_or(OrdinalError::Zero)
    }

    pub fn leading_coefficient(&self) -> Result<u64, OrdinalError> {
        self.terms
            .first()
            .map(|t| t.coefficient)
            .ok_or(OrdinalError::Zero)
    }

    /// Exponent of the trailing term. For a point `x > 0` of an ordinal space
    /// this is its Cantor-Bendixson rank.
    pub fn last_exponent(&self) -> Result<&Ordinal, OrdinalError> {
        self.terms.last().map(|t| &t.exponent).ok_or(OrdinalError::Zero)
    }

    /// Coefficient of `ω^exponent`, zero if the term is absent.
    pub fn coefficient_of(&self, exponent: &Ordinal) -> u64 {
        self.terms
            .iter()
            .find(|t| &t.exponent == exponent)
            .map_or(0, |t| t.coefficient)
    }

    /// Ordinal sum `self + other`. Terms of `self` below the leading exponent
    /// of `other` are absorbed.
    pub fn ordinal_add(&self, other: &Ordinal) -> Ordinal {
        let Some(head) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut carry = 0;
        for t in &self.terms {
            match t.exponent.cmp(&head.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => carry = t.coefficient,
                Ordering::Less => break,
            }
        }
        terms.push(Term {
            exponent: head.exponent.clone(),
            coefficient: checked(carry.checked_add(head.coefficient)),
        });
        terms.extend(other.terms[1..].iter().cloned());
        Ordinal { terms }
    }

    /// Natural (Hessenberg) sum: coefficients of matching exponents add.
    pub fn natural_sum(&self, other: &Ordinal) -> Ordinal {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.exponent.cmp(&b.exponent) {
                Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    terms.push(Term {
                        exponent: a.exponent.clone(),
                        coefficient: checked(a.coefficient.checked_add(b.coefficient)),
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(other.terms[j..].iter().cloned());
        Ordinal { terms }
    }

    /// Ordinal product `self · other`, expanded left-distributively over the
    /// terms of `other`.
    pub fn ordinal_mul(&self, other: &Ordinal) -> Ordinal {
        let Some(lead) = self.terms.first() else {
            return Ordinal::zero();
        };
        let mut acc = Ordinal::zero();
        for t in &other.terms {
            let piece = if t.exponent.is_zero() {
                // self · n scales only the leading coefficient
                let mut terms = self.terms.clone();
                terms[0].coefficient = checked(lead.coefficient.checked_mul(t.coefficient));
                Ordinal { terms }
            } else {
                Ordinal::term(lead.exponent.ordinal_add(&t.exponent), t.coefficient)
            };
            acc = acc.ordinal_add(&piece);
        }
        acc
    }

    /// The unique `c` with `self + c = other`; requires `self <= other`.
    pub fn left_subtract(&self, other: &Ordinal) -> Result<Ordinal, OrdinalError> {
        let not_prefix = || OrdinalError::NotAPrefix {
            left: self.clone(),
            right: other.clone(),
        };
        for (i, b) in other.terms.iter().enumerate() {
            let Some(a) = self.terms.get(i) else {
                return Ok(Ordinal {
                    terms: other.terms[i..].to_vec(),
                });
            };
            if a == b {
                continue;
            }
            return match a.exponent.cmp(&b.exponent) {
                Ordering::Less => Ok(Ordinal {
                    terms: other.terms[i..].to_vec(),
                }),
                Ordering::Equal if a.coefficient < b.coefficient => {
                    let mut terms = other.terms[i..].to_vec();
                    terms[0].coefficient -= a.coefficient;
                    Ok(Ordinal { terms })
                }
                _ => Err(not_prefix()),
            };
        }
        if self.terms.len() == other.terms.len() {
            Ok(Ordinal::zero())
        } else {
            Err(not_prefix())
        }
    }

    /// The unique `γ` with `1 + γ = self` (the rank shift of a derivative):
    /// `self − 1` for finite ordinals, `self` for infinite ones.
    pub fn drop_one(&self) -> Result<Ordinal, OrdinalError> {
        Ordinal::one().left_subtract(self)
    }

    /// `self` with its leading term removed.
    pub fn without_leading_term(&self) -> Ordinal {
        Ordinal {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    /// `self` with its trailing term removed.
    pub fn without_last_term(&self) -> Ordinal {
        let mut terms = self.terms.clone();
        terms.pop();
        Ordinal { terms }
    }

    /// Nesting depth of exponents: 0 for zero, 1 for finite nonzero ordinals.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.depth())
            .max()
            .unwrap_or(0)
    }
}

fn checked(v: Option<u64>) -> u64 {
    v.expect("ordinal coefficient overflow")
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::term(Ordinal::zero(), n)
    }
}

impl Add for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        self.ordinal_add(rhs)
    }
}

impl Add for Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: Ordinal) -> Ordinal {
        self.ordinal_add(&rhs)
    }
}

impl Mul for &Ordinal {
    type Output = Ordinal;

    fn mul(self, rhs: &Ordinal) -> Ordinal {
        self.ordinal_mul(rhs)
    }
}

impl Mul for Ordinal {
    type Output = Ordinal;

    fn mul(self, rhs: Ordinal) -> Ordinal {
        self.ordinal_mul(&rhs)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::format_ordinal(self))
    }
}

impl FromStr for Ordinal {
    type Err = crate::syntax::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::syntax::parse_ordinal(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn n(k: u64) -> Ordinal {
        Ordinal::from(k)
    }

    fn wpow(e: u64, c: u64) -> Ordinal {
        Ordinal::term(n(e), c)
    }

    #[test]
    fn compare_examples() {
        assert_eq!(w().cmp(&w()), Ordering::Equal);
        let lhs = &wpow(1, 2) + &n(1);
        assert_eq!(lhs.cmp(&wpow(1, 3)), Ordering::Less);
        let ww = Ordinal::omega_pow(w());
        assert_eq!(ww.cmp(&wpow(2, 9)), Ordering::Greater);
    }

    #[test]
    fn add_examples() {
        assert_eq!(&n(1) + &w(), w());
        assert_eq!(
            &w() + &n(1),
            Ordinal::from_terms(vec![(n(1), 1), (n(0), 1)]).unwrap()
        );
        let a = &wpow(2, 1) + &w();
        let b = &wpow(1, 3) + &n(5);
        let expected = Ordinal::from_terms(vec![(n(2), 1), (n(1), 4), (n(0), 5)]).unwrap();
        assert_eq!(&a + &b, expected);
    }

    #[test]
    fn natural_sum_examples() {
        let a = &w() + &n(1);
        assert_eq!(a.natural_sum(&Ordinal::zero()), a);
        assert_eq!(a.natural_sum(&a), &wpow(1, 2) + &n(2));
        assert_eq!(wpow(2, 1).natural_sum(&wpow(1, 5)), &wpow(2, 1) + &wpow(1, 5));
    }

    #[test]
    fn mul_examples() {
        let a = &wpow(2, 3) + &n(4);
        assert_eq!(&a * &n(1), a);
        assert_eq!(&n(2) * &w(), w());
        assert_eq!(&(&w() + &n(1)) * &w(), wpow(2, 1));
        // (ω+1)·2 = ω·2 + 1
        assert_eq!(&(&w() + &n(1)) * &n(2), &wpow(1, 2) + &n(1));
        assert_eq!(&Ordinal::zero() * &w(), Ordinal::zero());
        assert_eq!(&w() * &Ordinal::zero(), Ordinal::zero());
    }

    #[test]
    fn left_subtract_examples() {
        let a = &wpow(3, 2) + &n(7);
        assert_eq!(a.left_subtract(&a).unwrap(), Ordinal::zero());
        let wp1 = &w() + &n(1);
        assert_eq!(n(1).left_subtract(&wp1).unwrap(), wp1);
        assert_eq!(w().left_subtract(&wpow(1, 2)).unwrap(), w());
        assert_eq!(n(3).left_subtract(&n(7)).unwrap(), n(4));
        assert!(matches!(
            wpow(1, 2).left_subtract(&w()),
            Err(OrdinalError::NotAPrefix { .. })
        ));
        assert!(w().left_subtract(&n(5)).is_err());
        assert!((&w() + &n(1)).left_subtract(&w()).is_err());
    }

    #[test]
    fn structural_queries() {
        assert_eq!(Ordinal::omega_pow(Ordinal::zero()), n(1));
        assert!(wpow(1, 2).is_limit());
        assert!(!(&w() + &n(3)).is_limit());
        assert!(!Ordinal::zero().is_limit());
        let a = &wpow(2, 3) + &wpow(1, 7);
        assert_eq!(a.last_exponent().unwrap(), &n(1));
        assert_eq!(Ordinal::zero().last_exponent(), Err(OrdinalError::Zero));
        assert_eq!(n(5).successor(), n(6));
        assert_eq!(w().drop_one().unwrap(), w());
        assert_eq!(n(4).drop_one().unwrap(), n(3));
        assert!(Ordinal::zero().drop_one().is_err());
    }

    #[test]
    fn from_terms_rejects_bad_input() {
        assert_eq!(
            Ordinal::from_terms(vec![(n(1), 1), (n(1), 1)]),
            Err(OrdinalError::Unordered)
        );
        assert_eq!(
            Ordinal::from_terms(vec![(n(1), 0)]),
            Err(OrdinalError::ZeroCoefficient)
        );
    }
}
