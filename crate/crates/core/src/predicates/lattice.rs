use std::sync::Arc;

use super::checks::{big_ideal_ring, is_basic, is_big, is_c_ideal, is_upper_big, BigIdealRing, Candidates};
use super::ideal::first_equal_power;
use super::verdict::{Checked, Scope, Verdict};
use crate::error::{AlgebraError, Result};
use crate::finite::{enumerate_ideals, FiniteIdeal, FiniteRing};

/// Decides `J^n ⊊ I^n` for every `n ≥ 1` exactly, for `J ⊊ I`.
pub fn forall_powers_strict(j: &FiniteIdeal, i: &FiniteIdeal) -> Result<Verdict<FiniteIdeal>> {
    if j == i || !i.contains(j)? {
        return Err(AlgebraError::Precondition(format!("{j} is not a proper subideal of {i}")));
    }
    let decided = first_equal_power(j, i, 1)?;
    Ok(Verdict::from_transcript(vec![Checked { candidate: j.clone(), decided }], Scope::Complete, 0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeRow {
    pub ideal: FiniteIdeal,
    pub big: bool,
    pub upper_big: bool,
    pub basic: bool,
    pub c_ideal: bool,
    pub nilpotent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTable {
    pub ring: Arc<FiniteRing>,
    pub rows: Vec<LatticeRow>,
    pub big_ideal_ring: bool,
}

/// Every ideal of a finite ring with its flags, all decided exactly.
pub fn lattice_table(ring: &Arc<FiniteRing>, max_size: usize) -> Result<LatticeTable> {
    let ideals = enumerate_ideals(ring, max_size)?;
    let mut rows = Vec::with_capacity(ideals.len());
    for i in &ideals {
        let mut below = Vec::new();
        let mut above = Vec::new();
        for j in &ideals {
            if i.contains(j)? {
                below.push(j.clone());
            }
            if j.contains(i)? {
                above.push(j.clone());
            }
        }
        let (below, above) = (Candidates::complete(below), Candidates::complete(above));
        let exact = |v: Verdict<FiniteIdeal>| {
            debug_assert!(v.fails() || v.is_exhaustive());
            v.holds()
        };
        rows.push(LatticeRow {
            ideal: i.clone(),
            big: exact(is_big(i, &below, 1)?),
            upper_big: exact(is_upper_big(i, &above, 1)?),
            basic: exact(is_basic(i, &below, 1)?),
            c_ideal: exact(is_c_ideal(i, &above, 1)?),
            nilpotent: i.is_nilpotent(),
        });
    }
    let big_ring = big_ideal_ring(&ideals, 1)? == BigIdealRing::Holds;
    Ok(LatticeTable { ring: ring.clone(), rows, big_ideal_ring: big_ring })
}
