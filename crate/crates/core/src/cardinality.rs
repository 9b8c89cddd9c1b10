use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};

use serde::Serialize;

/// Size of a rank stratum: finite or countably infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cardinality {
    Finite(u64),
    CountablyInfinite,
}

/// Coarse classes that a finite correspondence cannot mix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SizeClass {
    Empty,
    Finite,
    Infinite,
}

impl Cardinality {
    pub const ZERO: Cardinality = Cardinality::Finite(0);

    pub fn is_zero(self) -> bool {
        self == Cardinality::ZERO
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Cardinality::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Cardinality::Finite(n) => Some(n),
            Cardinality::CountablyInfinite => None,
        }
    }

    pub fn class(self) -> SizeClass {
        match self {
            Cardinality::Finite(0) => SizeClass::Empty,
            Cardinality::Finite(_) => SizeClass::Finite,
            Cardinality::CountablyInfinite => SizeClass::Infinite,
        }
    }
}

impl Add for Cardinality {
    type Output = Cardinality;

    fn add(self, rhs: Cardinality) -> Cardinality {
        match (self, rhs) {
            (Cardinality::Finite(a), Cardinality::Finite(b)) => {
                Cardinality::Finite(a.checked_add(b).expect("cardinality overflow"))
            }
            _ => Cardinality::CountablyInfinite,
        }
    }
}

impl Mul for Cardinality {
    type Output = Cardinality;

    fn mul(self, rhs: Cardinality) -> Cardinality {
        match (self, rhs) {
            (Cardinality::Finite(0), _) | (_, Cardinality::Finite(0)) => Cardinality::ZERO,
            (Cardinality::Finite(a), Cardinality::Finite(b)) => {
                Cardinality::Finite(a.checked_mul(b).expect("cardinality overflow"))
            }
            _ => Cardinality::CountablyInfinite,
        }
    }
}

impl Sum for Cardinality {
    fn sum<I: Iterator<Item = Cardinality>>(iter: I) -> Self {
        iter.fold(Cardinality::ZERO, Add::add)
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::CountablyInfinite => f.write_str("countably infinite"),
        }
    }
}
