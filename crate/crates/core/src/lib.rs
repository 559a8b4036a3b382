//! Exact decision procedures for containment properties of ideal powers:
//! reductions, basic ideals, C-ideals, big and upper big ideals,
//! Ratliff-Rush closure and strong stability.
//!
//! Four kernels supply the rings:
//!
//! * [`series`]: graded modules inside `K[[X]]` (numerical semigroup rings,
//!   `D + M` constructions) given by a subspace table with a constant tail;
//! * [`monomial`]: monomial ideals in `N^d`;
//! * [`finite`]: explicit finite commutative rings, including idealizations
//!   `A ⋉ E`, plus split ideals of `Z ⋉ E`;
//! * [`field`]: the exact linear algebra underneath the series kernel.
//!
//! The [`predicates`] module states every property once, generically over
//! the [`predicates::Ideal`] trait, and returns [`predicates::Verdict`]s that
//! carry re-checkable witnesses.

pub mod error;
pub mod field;
pub mod cli;
pub mod finite;
pub mod monomial;
pub mod predicates;
pub mod series;

pub use error::{AlgebraError, Result};
