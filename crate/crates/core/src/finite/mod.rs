//! Explicit finite commutative rings and their ideals, plus split ideals of
//! `Z ⋉ E` for a finite abelian group `E`.

mod ideal;
mod module;
mod ring;
mod split_z;

pub use ideal::{enumerate_ideals, split_ideal, FiniteIdeal, DEFAULT_MAX_SIZE};
pub use module::{FiniteModule, Submodule};
pub use ring::{FiniteRing, Provenance, VERIFY_LIMIT};
pub use split_z::{CyclicProduct, SplitIdealZ};
