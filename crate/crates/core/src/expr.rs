//! Expressions over canonical spaces.

use std::fmt;
use std::str::FromStr;

use crate::ordinal::Ordinal;
use crate::space::{CanonicalSpace, SpaceError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpaceExpr {
    Canonical(CanonicalSpace),
    /// Topological disjoint union.
    Union(Box<SpaceExpr>, Box<SpaceExpr>),
    Product(Box<SpaceExpr>, Box<SpaceExpr>),
    Derivative(Box<SpaceExpr>),
    IteratedDerivative(Box<SpaceExpr>, Ordinal),
}

impl SpaceExpr {
    pub fn can(cb_star: Ordinal, degree: u64) -> Result<SpaceExpr, SpaceError> {
        CanonicalSpace::new(cb_star, degree).map(SpaceExpr::Canonical)
    }

    pub fn union(left: SpaceExpr, right: SpaceExpr) -> SpaceExpr {
        SpaceExpr::Union(Box::new(left), Box::new(right))
    }

    pub fn product(left: SpaceExpr, right: SpaceExpr) -> SpaceExpr {
        SpaceExpr::Product(Box::new(left), Box::new(right))
    }

    pub fn derivative(inner: SpaceExpr) -> SpaceExpr {
        SpaceExpr::Derivative(Box::new(inner))
    }

    pub fn iterated(inner: SpaceExpr, beta: Ordinal) -> SpaceExpr {
        SpaceExpr::IteratedDerivative(Box::new(inner), beta)
    }

    /// Homeomorphism class of the space the expression denotes.
    pub fn canonicalize(&self) -> CanonicalSpace {
        match self {
            SpaceExpr::Canonical(s) => s.clone(),
            SpaceExpr::Union(l, r) => l.canonicalize().sum(&r.canonicalize()),
            SpaceExpr::Product(l, r) => l.canonicalize().product(&r.canonicalize()),
            SpaceExpr::Derivative(e) => e.canonicalize().derivative(),
            SpaceExpr::IteratedDerivative(e, beta) => e.canonicalize().iterated_derivative(beta),
        }
    }

    /// Height of the expression tree; a canonical leaf has depth 1.
    pub fn depth(&self) -> usize {
        match self {
            SpaceExpr::Canonical(_) => 1,
            SpaceExpr::Union(l, r) | SpaceExpr::Product(l, r) => 1 + l.depth().max(r.depth()),
            SpaceExpr::Derivative(e) | SpaceExpr::IteratedDerivative(e, _) => 1 + e.depth(),
        }
    }
}

impl From<CanonicalSpace> for SpaceExpr {
    fn from(s: CanonicalSpace) -> Self {
        SpaceExpr::Canonical(s)
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::format_space(self))
    }
}

impl FromStr for SpaceExpr {
    type Err = crate::syntax::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::syntax::parse_space(s)
    }
}
