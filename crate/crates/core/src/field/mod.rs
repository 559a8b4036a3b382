//! Exact scalar and linear algebra: `Q`, prime fields, simple extensions of
//! degree at most four, and subspaces of those extensions.

mod base;
mod extension;
pub mod linalg;
mod subspace;

pub use base::{format_scalar, is_prime, BaseField, Scalar};
pub use extension::{is_irreducible, Element, ExtensionField};
pub use subspace::{intermediate_subspaces, Subspace};
pub(crate) use subspace::same_field;
