//! Kernel-generic predicates on ideals.
//!
//! Each predicate runs over an explicit list of candidates and records what
//! it decided for every one of them; see [`Verdict`].

mod checks;
mod handle;
mod ideal;
mod lattice;
mod verdict;

pub use checks::{
    big_ideal_ring, check_rr_implies_upper_big, is_basic, is_big, is_c_ideal, is_reduction, is_upper_big,
    ratliff_rush, BigIdealRing, Candidates, RatliffRush, RrUpperBig,
};
pub use handle::{IdealHandle, RingHandle, SuperAmbient};
pub use ideal::{first_equal_power, reduction_index, ColonIdeal, Ideal};
pub use lattice::{forall_powers_strict, lattice_table, LatticeRow, LatticeTable};
pub use verdict::{Checked, Outcome, PowerCheck, ReductionVerdict, Scope, Verdict};
