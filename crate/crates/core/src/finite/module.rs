use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use bitvec::prelude::*;

use super::ideal::FiniteIdeal;
use super::ring::{FiniteRing, VERIFY_LIMIT};
use crate::error::{AlgebraError, Result};

/// A finite module over a [`FiniteRing`], by addition and action tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    size: usize,
    add: Vec<u32>,
    act: Vec<u32>,
    zero: usize,
    labels: Vec<String>,
    name: String,
}

impl FiniteModule {
    fn build(
        ring: &Arc<FiniteRing>,
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        act: impl Fn(usize, usize) -> usize,
        zero: usize,
        labels: Vec<String>,
        name: String,
    ) -> Result<Self> {
        let add_t = (0..size * size).map(|k| add(k / size, k % size) as u32).collect();
        let act_t = (0..ring.size() * size).map(|k| act(k / size, k % size) as u32).collect();
        let m = FiniteModule { ring: ring.clone(), size, add: add_t, act: act_t, zero, labels, name };
        if ring.size() * size <= VERIFY_LIMIT * VERIFY_LIMIT {
            m.verify()?;
        }
        Ok(m)
    }

    /// Module axioms, by a full table scan.
    pub fn verify(&self) -> Result<()> {
        let r = &self.ring;
        let fail = |what: &str| Err(AlgebraError::NotAModule(what.to_string()));
        for e in 0..self.size {
            if self.add(e, self.zero) != e || self.act(r.one(), e) != e {
                return fail("identity");
            }
            if !(0..self.size).any(|f| self.add(e, f) == self.zero) {
                return fail("additive inverse");
            }
            for f in 0..self.size {
                if self.add(e, f) != self.add(f, e) {
                    return fail("commutativity");
                }
                for g in 0..self.size {
                    if self.add(self.add(e, f), g) != self.add(e, self.add(f, g)) {
                        return fail("associativity");
                    }
                }
                for a in 0..r.size() {
                    if self.act(a, self.add(e, f)) != self.add(self.act(a, e), self.act(a, f)) {
                        return fail("distributivity over module addition");
                    }
                }
            }
            for a in 0..r.size() {
                for b in 0..r.size() {
                    if self.act(r.add(a, b), e) != self.add(self.act(a, e), self.act(b, e)) {
                        return fail("distributivity over ring addition");
                    }
                    if self.act(r.mul(a, b), e) != self.act(a, self.act(b, e)) {
                        return fail("compatibility");
                    }
                }
            }
        }
        Ok(())
    }

    /// The ring as a module over itself.
    pub fn regular(ring: &Arc<FiniteRing>) -> Self {
        let labels = (0..ring.size()).map(|a| ring.label(a).to_string()).collect();
        FiniteModule::build(
            ring,
            ring.size(),
            |a, b| ring.add(a, b),
            |a, b| ring.mul(a, b),
            ring.zero(),
            labels,
            ring.to_string(),
        )
        .expect("a ring is a module over itself")
    }

    /// `A / I`, indexed by the smallest representative of each coset.
    pub fn quotient(ring: &Arc<FiniteRing>, ideal: &FiniteIdeal) -> Result<Self> {
        if **ideal.ring() != **ring {
            return Err(AlgebraError::RingMismatch);
        }
        let members = ideal.members();
        let mut class = vec![usize::MAX; ring.size()];
        let mut reps = Vec::new();
        for a in 0..ring.size() {
            if class[a] == usize::MAX {
                for &i in &members {
                    class[ring.add(a, i)] = reps.len();
                }
                reps.push(a);
            }
        }
        let labels = reps.iter().map(|&a| ring.label(a).to_string()).collect();
        let name = if ideal.is_zero() { ring.to_string() } else { format!("{ring}/{ideal}") };
        FiniteModule::build(
            ring,
            reps.len(),
            |x, y| class[ring.add(reps[x], reps[y])],
            |a, x| class[ring.mul(a, reps[x])],
            class[ring.zero()],
            labels,
            name,
        )
    }

    /// `E_1 ⊕ … ⊕ E_k`, labelled `[e_1,…,e_k]`.
    pub fn direct_sum(parts: &[&FiniteModule]) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(AlgebraError::Precondition("direct sum of no modules".into()));
        };
        if parts.iter().any(|p| p.ring != first.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let size: usize = parts.iter().map(|p| p.size).product();
        // Mixed radix, last summand fastest.
        let digits = |mut x: usize| {
            let mut d = vec![0; parts.len()];
            for (k, p) in parts.iter().enumerate().rev() {
                d[k] = x % p.size;
                x /= p.size;
            }
            d
        };
        let join = |d: Vec<usize>| d.iter().zip(parts).fold(0, |acc, (&x, p)| acc * p.size + x);
        let labels = (0..size)
            .map(|x| {
                let d = digits(x);
                let parts: Vec<&str> = d.iter().zip(parts).map(|(&e, p)| p.label(e)).collect();
                format!("[{}]", parts.join(","))
            })
            .collect();
        let name = parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ⊕ ");
        FiniteModule::build(
            &first.ring,
            size,
            |x, y| join(digits(x).into_iter().zip(digits(y)).zip(parts).map(|((a, b), p)| p.add(a, b)).collect()),
            |a, x| join(digits(x).into_iter().zip(parts).map(|(e, p)| p.act(a, e)).collect()),
            join(parts.iter().map(|p| p.zero).collect()),
            labels,
            name,
        )
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, e: usize, f: usize) -> usize {
        self.add[e * self.size + f] as usize
    }

    pub fn act(&self, a: usize, e: usize) -> usize {
        self.act[a * self.size + e] as usize
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    /// Every submodule, by closing sums of cyclic submodules.
    pub fn submodules(self: &Arc<Self>) -> Vec<Submodule> {
        let cyclic: Vec<Submodule> = (0..self.size).map(|e| Submodule::generated(self, &[e])).collect();
        let mut found = vec![Submodule::zero(self)];
        let mut seen: std::collections::HashSet<Submodule> = found.iter().cloned().collect();
        let mut next = 0;
        while next < found.len() {
            let base = found[next].clone();
            for c in &cyclic {
                let s = base.sum(c);
                if seen.insert(s.clone()) {
                    found.push(s);
                }
            }
            next += 1;
        }
        found
    }

    /// Nonzero with no submodules besides `0` and itself.
    pub fn is_simple(self: &Arc<Self>) -> bool {
        self.size > 1 && self.submodules().len() == 2
    }
}

impl fmt::Display for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// A submodule `F ⊆ E`, as a member set.
#[derive(Debug, Clone)]
pub struct Submodule {
    module: Arc<FiniteModule>,
    members: BitVec,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && (Arc::ptr_eq(&self.module, &other.module) || self.module == other.module)
    }
}

impl Eq for Submodule {}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Submodule {
    pub fn zero(module: &Arc<FiniteModule>) -> Self {
        let mut members = bitvec![0; module.size];
        members.set(module.zero, true);
        Submodule { module: module.clone(), members }
    }

    pub fn full(module: &Arc<FiniteModule>) -> Self {
        Submodule { module: module.clone(), members: bitvec![1; module.size] }
    }

    /// The submodule generated by `elements`.
    pub fn generated(module: &Arc<FiniteModule>, elements: &[usize]) -> Self {
        let mut s = Submodule::zero(module);
        for &e in elements {
            let mut cyclic = bitvec![0; module.size];
            for a in 0..module.ring.size() {
                cyclic.set(module.act(a, e), true);
            }
            s = s.sum(&Submodule { module: module.clone(), members: cyclic });
        }
        s
    }

    /// Member indices given as a set, rejected unless closed.
    pub fn from_members(module: &Arc<FiniteModule>, members: &[usize]) -> Result<Self> {
        let s = Submodule::generated(module, members);
        if s.size() != members.iter().collect::<std::collections::BTreeSet<_>>().len() {
            return Err(AlgebraError::NotAModule("member set is not a submodule".into()));
        }
        Ok(s)
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn contains_element(&self, e: usize) -> bool {
        self.members[e]
    }

    pub fn members(&self) -> Vec<usize> {
        self.members.iter_ones().collect()
    }

    pub fn size(&self) -> usize {
        self.members.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.size() == 1
    }

    pub fn is_full(&self) -> bool {
        self.members.all()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Submodule) -> bool {
        other.members.iter_ones().all(|e| self.members[e])
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        let m = &self.module;
        let mut members = bitvec![0; m.size];
        for e in self.members.iter_ones() {
            for f in other.members.iter_ones() {
                members.set(m.add(e, f), true);
            }
        }
        Submodule { module: m.clone(), members }
    }

    /// `I·F`, generated by the products `a·f`.
    pub fn scale_by(&self, ideal: &FiniteIdeal) -> Submodule {
        let products: Vec<usize> = ideal
            .members()
            .into_iter()
            .flat_map(|a| self.members.iter_ones().map(move |f| self.module.act(a, f)))
            .collect();
        Submodule::generated(&self.module, &products)
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else if self.is_full() {
            write!(f, "E")
        } else {
            let parts: Vec<&str> = self.members.iter_ones().map(|e| self.module.label(e)).collect();
            write!(f, "{{{}}}", parts.join(", "))
        }
    }
}
