//! Finitely presented correspondences between canonical spaces.
//!
//! A [`PiecewiseCorrespondence`] is a finite list of pieces, each relating a
//! clopen interval of the source to a clopen interval of the target by
//! translation. Intervals of the form `[0, b]` and `(a, b]` are both open and
//! closed in an ordinal interval `[0, top]` with the order topology, and a
//! translation `a + t ↦ a' + t` between intervals of equal left difference is
//! an order isomorphism, hence a homeomorphism. So the preimage of an open set
//! is a finite union of open subsets of clopen pieces and is open, and the
//! same holds for images: every valid piecewise correspondence is continuous
//! and open. Validation therefore only checks bounds, lengths and coverage.
//!
//! A [`BlockCorrespondence`] relates whole rank strata. It is used between
//! finite discrete spaces, where every relation is continuous and open.

mod block;
mod piecewise;
mod relation;
mod witness;

use thiserror::Error;

use crate::ordinal::Ordinal;
use crate::space::CanonicalSpace;

pub use block::{Block, BlockCorrespondence, BlockFailure, BlockMode, BlockReport};
pub use piecewise::{Failure, Lemma1Report, Piece, PiecewiseCorrespondence, Side, ValidityReport};
pub use relation::FiniteRelation;
pub use witness::{generate_witness, CheckReport, Witness, WitnessError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error("invalid correspondence: {0}")]
    Invalid(ValidityReport),
    #[error("point {0} lies outside the source")]
    PointOutsideSource(Ordinal),
    #[error("{x} and {y} are not equivalent")]
    NotEquivalent { x: CanonicalSpace, y: CanonicalSpace },
}
