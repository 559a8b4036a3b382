//! Graded modules inside `K[[X]]` and the rings among them.

mod enumerate;
mod exponents;
mod profile;
mod ring;

pub use enumerate::{enumerate_submodules, enumerate_supermodules};
pub use exponents::ExponentSet;
pub use profile::ProfileModule;
pub use ring::{submodule_power_escapes, SeriesRing, StrongStability};
