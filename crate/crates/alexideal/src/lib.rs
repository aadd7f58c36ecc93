//! Exact computer algebra for Alexander ideals of surface knots in S^4.
//!
//! The pipeline: group presentations with abelianization weights ([`fox`])
//! feed Fox free differential calculus, whose minor determinants generate
//! elementary ideals of Z[t, t^-1] ([`zideal`]). Ideal arithmetic is exact,
//! built on strong Groebner bases over the integers, and decides
//! membership, equality, principality, maximality, quotient cardinality and
//! ideal-class equivalence. On top sit the knot constructions of interest
//! (twist spins, connected sums, ribbon realizations; [`knots`]) and the
//! 0-concordance obstruction reports and certificates ([`obstruct`]).
//! [`text`] holds the parsers and printers shared with the CLI.

pub mod fox;
pub mod knots;
pub mod laurent;
pub mod obstruct;
pub mod text;
pub mod zideal;

pub use laurent::{EvalPoint, LaurentPoly};
pub use zideal::{IdealClass, LaurentIdeal, MaximalFactorization, QuotientSize};
