//! Symbolic calculus for compact countable Hausdorff spaces.
//!
//! Spaces are handled through their homeomorphism classes `ω^α·d + 1`
//! ([`CanonicalSpace`]), which form a commutative semiring under disjoint
//! union and product. The Cantor-Bendixson derivative acts on it as a
//! derivation modulo the equivalence of finite rank-preserving
//! correspondences. Ordinals are exact Cantor normal forms ([`Ordinal`]);
//! point-level ranks and strata ([`Point`]) give an independent check on
//! every closed-form rule, and [`correspondence`] builds and verifies explicit
//! witnesses of the equivalence.

pub mod cardinality;
pub mod cli;
pub mod correspondence;
pub mod duality;
pub mod expr;
pub mod indexing;
pub mod interval;
pub mod laws;
pub mod ordinal;
pub mod point;
pub mod random;
pub mod space;
pub mod syntax;

pub use cardinality::Cardinality;
pub use expr::SpaceExpr;
pub use interval::Interval;
pub use ordinal::Ordinal;
pub use point::Point;
pub use space::{CanonicalSpace, RankProfile};
