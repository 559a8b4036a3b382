use std::collections::HashSet;

use super::ideal::{first_equal_power, reduction_index, ColonIdeal, Ideal};
use super::verdict::{Checked, PowerCheck, ReductionVerdict, Scope, Verdict};
use crate::error::{AlgebraError, Result};

/// Candidate ideals together with how much of the ring they cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidates<W> {
    pub items: Vec<W>,
    pub scope: Scope,
}

impl<W> Candidates<W> {
    pub fn complete(items: Vec<W>) -> Self {
        Candidates { items, scope: Scope::Complete }
    }

    pub fn window(items: Vec<W>, window: usize) -> Self {
        Candidates { items, scope: Scope::Window(window) }
    }

    pub fn supplied(items: Vec<W>) -> Self {
        let scope = Scope::Supplied(items.len());
        Candidates { items, scope }
    }
}

fn reduction_check(r: ReductionVerdict) -> PowerCheck {
    match r {
        ReductionVerdict::Index(n) => PowerCheck::EqualAt(n),
        ReductionVerdict::NotWithin(n) => PowerCheck::StrictThrough(n),
        ReductionVerdict::Never => PowerCheck::StrictForAll,
    }
}

/// Proper subideals among the candidates; the target itself is skipped and
/// anything not inside it is an error.
fn proper_below<'a, W: Ideal>(i: &W, cands: &'a Candidates<W>) -> Result<Vec<&'a W>> {
    let mut out = Vec::new();
    for j in &cands.items {
        if j == i {
            continue;
        }
        if !i.contains(j)? {
            return Err(AlgebraError::Precondition(format!("candidate {j} is not inside {i}")));
        }
        out.push(j);
    }
    Ok(out)
}

fn proper_above<'a, W: Ideal>(i: &W, cands: &'a Candidates<W>) -> Result<Vec<&'a W>> {
    let mut out = Vec::new();
    for j in &cands.items {
        if j == i {
            continue;
        }
        if !j.contains(i)? {
            return Err(AlgebraError::Precondition(format!("candidate {j} does not contain {i}")));
        }
        out.push(j);
    }
    Ok(out)
}

/// `J` is a reduction of `I` when `J·I^n = I^(n+1)` for some `n`.
pub fn is_reduction<W: Ideal>(j: &W, i: &W, n_max: usize) -> Result<ReductionVerdict> {
    reduction_index(j, i, n_max)
}

/// Big: every proper subideal `J` has `J^n ⊊ I^n` for all `n`. Fails with
/// the candidate whose powers meet `I`'s soonest.
pub fn is_big<W: Ideal>(i: &W, cands: &Candidates<W>, n_max: usize) -> Result<Verdict<W>> {
    let transcript = proper_below(i, cands)?
        .into_iter()
        .map(|j| Ok(Checked { candidate: j.clone(), decided: first_equal_power(j, i, n_max)? }))
        .collect::<Result<_>>()?;
    Ok(Verdict::from_transcript(transcript, cands.scope, n_max))
}

/// Upper big: every proper superideal `J` has `I^n ⊊ J^n` for all `n`.
pub fn is_upper_big<W: Ideal>(i: &W, cands: &Candidates<W>, n_max: usize) -> Result<Verdict<W>> {
    let transcript = proper_above(i, cands)?
        .into_iter()
        .map(|j| Ok(Checked { candidate: j.clone(), decided: first_equal_power(i, j, n_max)? }))
        .collect::<Result<_>>()?;
    Ok(Verdict::from_transcript(transcript, cands.scope, n_max))
}

/// Basic: no proper subideal is a reduction. On failure `n` is the
/// reduction index of the witness.
pub fn is_basic<W: Ideal>(i: &W, cands: &Candidates<W>, n_max: usize) -> Result<Verdict<W>> {
    let transcript = proper_below(i, cands)?
        .into_iter()
        .map(|j| Ok(Checked { candidate: j.clone(), decided: reduction_check(reduction_index(j, i, n_max)?) }))
        .collect::<Result<_>>()?;
    Ok(Verdict::from_transcript(transcript, cands.scope, n_max))
}

/// C-ideal: not a reduction of any proper superideal. On failure `n` is the
/// reduction index of `I` in the witness.
pub fn is_c_ideal<W: Ideal>(i: &W, cands: &Candidates<W>, n_max: usize) -> Result<Verdict<W>> {
    let transcript = proper_above(i, cands)?
        .into_iter()
        .map(|j| Ok(Checked { candidate: j.clone(), decided: reduction_check(reduction_index(i, j, n_max)?) }))
        .collect::<Result<_>>()?;
    Ok(Verdict::from_transcript(transcript, cands.scope, n_max))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatliffRush<W> {
    /// `∪ (I^(n+1) : I^n) ∩ R` over the computed range.
    pub closure: W,
    /// The partial unions `U_1, U_2, …`.
    pub chain: Vec<W>,
    /// Least `n` with `U_n` equal to every later computed term, when the
    /// chain ends with at least two equal terms.
    pub stabilized_at: Option<usize>,
    /// The closure is known to be the full union.
    pub exact: bool,
}

/// Ratliff-Rush closure through `n_max`. For periodic kernels the loop runs
/// until `I^n` repeats, which covers every colon in the union.
pub fn ratliff_rush<W: ColonIdeal>(i: &W, unit: &W, n_max: usize) -> Result<RatliffRush<W>> {
    let periodic = i.periodic_powers();
    let mut seen = HashSet::new();
    let mut chain: Vec<W> = Vec::new();
    let mut p = i.clone();
    let mut n = 1;
    loop {
        let next = p.product(i)?;
        let term = next.colon(&p)?.intersect(unit)?;
        let union = match chain.last() {
            Some(u) => u.sum(&term)?,
            None => term,
        };
        chain.push(union);
        if periodic {
            if !seen.insert(p.clone()) {
                break;
            }
        } else if n >= n_max.max(2) {
            break;
        }
        p = next;
        n += 1;
    }
    let last = chain.last().expect("at least one term").clone();
    let first_equal = chain.iter().position(|u| *u == last).expect("last term is present");
    let stabilized_at = (first_equal + 1 < chain.len()).then_some(first_equal + 1);
    Ok(RatliffRush { closure: last, exact: periodic || stabilized_at.is_some(), stabilized_at, chain })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrUpperBig<W> {
    pub closure: RatliffRush<W>,
    pub verdict: Verdict<W>,
    /// A Ratliff-Rush closed ideal failed to be upper big within scope.
    pub alarm: bool,
}

/// Runs the upper-big test on a Ratliff-Rush closed ideal; any failure is
/// flagged rather than raised.
pub fn check_rr_implies_upper_big<W: ColonIdeal>(
    i: &W,
    unit: &W,
    cands: &Candidates<W>,
    n_max: usize,
) -> Result<RrUpperBig<W>> {
    let closure = ratliff_rush(i, unit, n_max)?;
    if !closure.exact || closure.closure != *i {
        return Err(AlgebraError::Precondition(format!("{i} is not verified Ratliff-Rush closed")));
    }
    let verdict = is_upper_big(i, cands, n_max)?;
    let alarm = verdict.fails();
    Ok(RrUpperBig { closure, verdict, alarm })
}

/// Every ideal is big, over a complete list of the ring's ideals.
/// `Undecided` when some ideal is big only within bounds.
pub fn big_ideal_ring<W: Ideal>(ideals: &[W], n_max: usize) -> Result<BigIdealRing<W>> {
    for i in ideals {
        let mut below = Vec::new();
        for j in ideals {
            if i.contains(j)? {
                below.push(j.clone());
            }
        }
        let v = is_big(i, &Candidates::complete(below), n_max)?;
        match v.witness() {
            Some((j, n)) => return Ok(BigIdealRing::Fails { ideal: i.clone(), witness: j.clone(), n }),
            None if !v.is_exhaustive() => return Ok(BigIdealRing::Undecided),
            None => {}
        }
    }
    Ok(BigIdealRing::Holds)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BigIdealRing<W> {
    Holds,
    Fails { ideal: W, witness: W, n: usize },
    Undecided,
}
