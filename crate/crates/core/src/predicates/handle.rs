use std::fmt;
use std::sync::Arc;

use super::checks::Candidates;
use super::ideal::{ColonIdeal, Ideal};
use crate::error::{AlgebraError, Result};
use crate::finite::{enumerate_ideals, CyclicProduct, FiniteIdeal, FiniteRing, SplitIdealZ, DEFAULT_MAX_SIZE};
use crate::monomial::MonomialIdeal;
use crate::series::{enumerate_submodules, enumerate_supermodules, ProfileModule, SeriesRing};

/// An ideal from one of the kernels. Operations on two handles route to
/// their common kernel; mixing kernels is an error.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IdealHandle {
    Series(ProfileModule),
    Monomial(MonomialIdeal),
    Finite(FiniteIdeal),
    SplitZ(SplitIdealZ),
}

/// The ring an [`IdealHandle`] lives in, which supplies unit ideals and
/// candidate streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingHandle {
    Series(SeriesRing),
    Monomial { dim: usize },
    Finite(Arc<FiniteRing>),
    SplitZ(CyclicProduct),
}

/// Where superideal candidates of a series ideal may range.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum SuperAmbient {
    /// `K[[X]]`.
    #[default]
    PowerSeries,
    /// The ring itself.
    Ring,
    Module(ProfileModule),
}

impl IdealHandle {
    pub fn kernel(&self) -> &'static str {
        match self {
            IdealHandle::Series(_) => "series",
            IdealHandle::Monomial(_) => "monomial",
            IdealHandle::Finite(_) => "finite",
            IdealHandle::SplitZ(_) => "split_z",
        }
    }

    pub fn as_series(&self) -> Option<&ProfileModule> {
        match self {
            IdealHandle::Series(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteIdeal> {
        match self {
            IdealHandle::Finite(i) => Some(i),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<&MonomialIdeal> {
        match self {
            IdealHandle::Monomial(i) => Some(i),
            _ => None,
        }
    }

    pub fn as_split_z(&self) -> Option<&SplitIdealZ> {
        match self {
            IdealHandle::SplitZ(i) => Some(i),
            _ => None,
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (IdealHandle::Monomial(a), IdealHandle::Monomial(b)) => Ok(IdealHandle::Monomial(a.sum(b)?)),
            (IdealHandle::SplitZ(a), IdealHandle::SplitZ(b)) => Ok(IdealHandle::SplitZ(a.sum(b)?)),
            _ => ColonIdeal::sum(self, other),
        }
    }
}

macro_rules! same_kernel {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (IdealHandle::Series($x), IdealHandle::Series($y)) => Ok(IdealHandle::Series($body?)),
            (IdealHandle::Monomial($x), IdealHandle::Monomial($y)) => Ok(IdealHandle::Monomial($body?)),
            (IdealHandle::Finite($x), IdealHandle::Finite($y)) => Ok(IdealHandle::Finite($body?)),
            (IdealHandle::SplitZ($x), IdealHandle::SplitZ($y)) => Ok(IdealHandle::SplitZ($body?)),
            _ => Err(AlgebraError::KernelMismatch),
        }
    };
}

impl Ideal for IdealHandle {
    fn contains(&self, other: &Self) -> Result<bool> {
        match (self, other) {
            (IdealHandle::Series(a), IdealHandle::Series(b)) => Ideal::contains(a, b),
            (IdealHandle::Monomial(a), IdealHandle::Monomial(b)) => Ideal::contains(a, b),
            (IdealHandle::Finite(a), IdealHandle::Finite(b)) => Ideal::contains(a, b),
            (IdealHandle::SplitZ(a), IdealHandle::SplitZ(b)) => Ideal::contains(a, b),
            _ => Err(AlgebraError::KernelMismatch),
        }
    }

    fn product(&self, other: &Self) -> Result<Self> {
        same_kernel!(self, other, |a, b| Ideal::product(a, b))
    }

    fn periodic_powers(&self) -> bool {
        matches!(self, IdealHandle::Finite(_))
    }
}

impl ColonIdeal for IdealHandle {
    fn colon(&self, by: &Self) -> Result<Self> {
        match (self, by) {
            (IdealHandle::Series(a), IdealHandle::Series(b)) => Ok(IdealHandle::Series(a.colon(b)?)),
            (IdealHandle::Finite(a), IdealHandle::Finite(b)) => Ok(IdealHandle::Finite(a.colon(b)?)),
            (a, b) if a.kernel() != b.kernel() => Err(AlgebraError::KernelMismatch),
            _ => Err(AlgebraError::Unsupported("colon ideals in this kernel")),
        }
    }

    fn sum(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (IdealHandle::Series(a), IdealHandle::Series(b)) => Ok(IdealHandle::Series(ColonIdeal::sum(a, b)?)),
            (IdealHandle::Finite(a), IdealHandle::Finite(b)) => Ok(IdealHandle::Finite(ColonIdeal::sum(a, b)?)),
            (a, b) if a.kernel() != b.kernel() => Err(AlgebraError::KernelMismatch),
            _ => Err(AlgebraError::Unsupported("sums in this kernel")),
        }
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (IdealHandle::Series(a), IdealHandle::Series(b)) => Ok(IdealHandle::Series(a.intersection(b)?)),
            (IdealHandle::Finite(a), IdealHandle::Finite(b)) => Ok(IdealHandle::Finite(a.intersection(b)?)),
            (a, b) if a.kernel() != b.kernel() => Err(AlgebraError::KernelMismatch),
            _ => Err(AlgebraError::Unsupported("intersections in this kernel")),
        }
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealHandle::Series(p) => write!(f, "{p}"),
            IdealHandle::Monomial(i) => write!(f, "{i}"),
            IdealHandle::Finite(i) => write!(f, "{i}"),
            IdealHandle::SplitZ(i) => write!(f, "{i}"),
        }
    }
}

impl RingHandle {
    pub fn kernel(&self) -> &'static str {
        match self {
            RingHandle::Series(_) => "series",
            RingHandle::Monomial { .. } => "monomial",
            RingHandle::Finite(_) => "finite",
            RingHandle::SplitZ(_) => "split_z",
        }
    }

    pub fn unit(&self) -> IdealHandle {
        match self {
            RingHandle::Series(r) => IdealHandle::Series(r.profile().clone()),
            RingHandle::Monomial { dim } => IdealHandle::Monomial(MonomialIdeal::unit(*dim)),
            RingHandle::Finite(r) => IdealHandle::Finite(FiniteIdeal::unit(r)),
            RingHandle::SplitZ(e) => IdealHandle::SplitZ(SplitIdealZ::full(e, 1)),
        }
    }

    pub fn zero(&self) -> IdealHandle {
        match self {
            RingHandle::Series(r) => IdealHandle::Series(ProfileModule::zero(r.ambient())),
            RingHandle::Monomial { dim } => IdealHandle::Monomial(MonomialIdeal::zero(*dim)),
            RingHandle::Finite(r) => IdealHandle::Finite(FiniteIdeal::zero(r)),
            RingHandle::SplitZ(e) => IdealHandle::SplitZ(SplitIdealZ::new(e, 0, &[]).expect("zero ideal")),
        }
    }

    fn kernel_of(&self, i: &IdealHandle) -> Result<()> {
        if self.kernel() == i.kernel() {
            Ok(())
        } else {
            Err(AlgebraError::KernelMismatch)
        }
    }

    fn series_window(i: &ProfileModule, window: Option<usize>) -> usize {
        window.unwrap_or(i.conductor())
    }

    /// Every subideal of `i`: complete for finite rings, windowed for series
    /// rings. The other kernels need supplied candidates.
    pub fn sub_candidates(&self, i: &IdealHandle, window: Option<usize>) -> Result<Candidates<IdealHandle>> {
        self.kernel_of(i)?;
        match (self, i) {
            (RingHandle::Series(r), IdealHandle::Series(p)) => {
                let w = RingHandle::series_window(p, window);
                let items = enumerate_submodules(p, r, w)?.into_iter().map(IdealHandle::Series).collect();
                Ok(Candidates::window(items, w))
            }
            (RingHandle::Finite(r), IdealHandle::Finite(ideal)) => {
                let all = enumerate_ideals(r, r.size().max(DEFAULT_MAX_SIZE))?;
                let mut items = Vec::new();
                for j in all {
                    if ideal.contains(&j)? {
                        items.push(IdealHandle::Finite(j));
                    }
                }
                Ok(Candidates::complete(items))
            }
            _ => Err(AlgebraError::Unsupported("exhaustive candidates in this kernel; supply candidates")),
        }
    }

    /// Every superideal of `i`; for series rings, every `R`-module between
    /// `i` and the chosen ambient.
    pub fn super_candidates(
        &self,
        i: &IdealHandle,
        window: Option<usize>,
        ambient: &SuperAmbient,
    ) -> Result<Candidates<IdealHandle>> {
        self.kernel_of(i)?;
        match (self, i) {
            (RingHandle::Series(r), IdealHandle::Series(p)) => {
                let w = RingHandle::series_window(p, window);
                let top = match ambient {
                    SuperAmbient::PowerSeries => ProfileModule::full(r.ambient()),
                    SuperAmbient::Ring => r.profile().clone(),
                    SuperAmbient::Module(m) => m.clone(),
                };
                let items = enumerate_supermodules(p, &top, r, w)?.into_iter().map(IdealHandle::Series).collect();
                Ok(Candidates::window(items, w))
            }
            (RingHandle::Finite(r), IdealHandle::Finite(ideal)) => {
                let all = enumerate_ideals(r, r.size().max(DEFAULT_MAX_SIZE))?;
                let mut items = Vec::new();
                for j in all {
                    if j.contains(ideal)? {
                        items.push(IdealHandle::Finite(j));
                    }
                }
                Ok(Candidates::complete(items))
            }
            _ => Err(AlgebraError::Unsupported("exhaustive candidates in this kernel; supply candidates")),
        }
    }
}
