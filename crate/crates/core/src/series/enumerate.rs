use super::profile::ProfileModule;
use super::ring::SeriesRing;
use crate::error::{AlgebraError, Result};
use crate::field::{intermediate_subspaces, Subspace};

/// Every `R`-submodule `J ⊆ I` with `J(n) = I(n)` for `n ≥ window`, in a
/// fixed depth-first order. Needs a prime base field or a degree-one ambient
/// (otherwise the subspace lattice is infinite).
pub fn enumerate_submodules(i: &ProfileModule, ring: &SeriesRing, window: usize) -> Result<Vec<ProfileModule>> {
    if i.is_zero() {
        return Ok(Vec::new());
    }
    let zero = ProfileModule::zero(i.ambient());
    enumerate_between(&zero, i, i, ring, window)
}

/// Every `R`-module `J` with `I ⊆ J ⊆ ambient` and `J(n) = I(n)` for
/// `n ≥ window`.
pub fn enumerate_supermodules(
    i: &ProfileModule,
    ambient: &ProfileModule,
    ring: &SeriesRing,
    window: usize,
) -> Result<Vec<ProfileModule>> {
    if !ambient.contains(i)? {
        return Err(AlgebraError::Precondition("ambient module must contain the ideal".into()));
    }
    enumerate_between(i, ambient, i, ring, window)
}

fn enumerate_between(
    lower: &ProfileModule,
    upper: &ProfileModule,
    fixed: &ProfileModule,
    ring: &SeriesRing,
    window: usize,
) -> Result<Vec<ProfileModule>> {
    if window < fixed.conductor() {
        return Err(AlgebraError::Precondition(format!(
            "window {window} is below the conductor {}",
            fixed.conductor()
        )));
    }
    let k = fixed.ambient();
    let r = ring.profile();
    let admissible = |j: &ProfileModule| -> Result<bool> {
        Ok(j.is_module_over(r)? && upper.contains(j)? && j.contains(lower)?)
    };
    if window == 0 {
        return Ok(if admissible(fixed)? { vec![fixed.clone()] } else { Vec::new() });
    }
    let mut out = Vec::new();
    let mut chosen: Vec<Subspace> = Vec::with_capacity(window);
    let mut stack: Vec<(usize, Vec<Subspace>)> = Vec::new();

    // Candidates at exponent n given the choices below n.
    let options = |chosen: &[Subspace]| -> Result<Vec<Subspace>> {
        let n = chosen.len();
        let mut low = lower.at(n).clone();
        for (j, s) in chosen.iter().enumerate() {
            low = low.sum(&r.at(n - j).product(s)?)?;
        }
        let high = upper.at(n);
        if !high.contains(&low)? {
            return Ok(Vec::new());
        }
        let r0 = r.at(0);
        let mut opts = Vec::new();
        for s in intermediate_subspaces(&low, high)? {
            if s.contains(&r0.product(&s)?)? {
                opts.push(s);
            }
        }
        // Reverse so that popping yields the lattice order.
        opts.reverse();
        Ok(opts)
    };

    stack.push((0, options(&chosen)?));
    while let Some((depth, opts)) = stack.last_mut() {
        let depth = *depth;
        let Some(s) = opts.pop() else {
            stack.pop();
            continue;
        };
        chosen.truncate(depth);
        chosen.push(s);
        if depth + 1 == window {
            let table = chosen.iter().cloned().chain((window..=fixed.conductor()).map(|n| fixed.at(n).clone()));
            let j = ProfileModule::new(k, table.collect(), fixed.tail().clone())?;
            if admissible(&j)? {
                out.push(j);
            }
        } else {
            let next = options(&chosen)?;
            stack.push((depth + 1, next));
        }
    }
    Ok(out)
}
