//! Turns a parsed [`Scene`] into kernel objects.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::BigInt;

use super::scene::*;
use crate::error::AlgebraError;
use crate::field::{BaseField, Element, ExtensionField, Scalar, Subspace};
use crate::finite::{split_ideal, CyclicProduct, FiniteIdeal, FiniteModule, FiniteRing, SplitIdealZ, Submodule};
use crate::monomial::MonomialIdeal;
use crate::predicates::{ColonIdeal, Ideal, IdealHandle, RingHandle};
use crate::series::{ExponentSet, ProfileModule, SeriesRing};

/// A problem with the input, with the place it was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub location: String,
    pub message: String,
}

impl InputError {
    pub fn new(location: impl Into<String>, message: impl fmt::Display) -> Self {
        InputError { location: location.into(), message: message.to_string() }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.location.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.location, self.message)
        }
    }
}

impl std::error::Error for InputError {}

type Built<T> = std::result::Result<T, String>;

fn err(e: AlgebraError) -> String {
    e.to_string()
}

/// The ring of a scene with its named ideals.
#[derive(Debug, Clone)]
pub struct World {
    pub ring: RingHandle,
    /// Variable names for monomial rings.
    pub vars: Option<Vec<String>>,
    pub ideals: Vec<(String, IdealHandle)>,
    index: HashMap<String, usize>,
}

impl World {
    pub fn get(&self, name: &str) -> Option<&IdealHandle> {
        self.index.get(name).map(|&k| &self.ideals[k].1)
    }

    /// The first named ideal equal to `i`.
    pub fn name_of(&self, i: &IdealHandle) -> Option<&str> {
        self.ideals.iter().find(|(_, j)| j == i).map(|(n, _)| n.as_str())
    }

    pub fn ambient(&self) -> Option<&Arc<ExtensionField>> {
        match &self.ring {
            RingHandle::Series(r) => Some(r.ambient()),
            _ => None,
        }
    }
}

pub fn parse_scalar(base: BaseField, c: &Coord) -> Built<Scalar> {
    let q = match c {
        Coord::Int(n) => Scalar::from_integer(BigInt::from(*n)),
        Coord::Text(s) => s.trim().parse::<Scalar>().map_err(|_| format!("not a rational number: {s:?}"))?,
    };
    base.embed(&q).map_err(err)
}

fn scalars(base: BaseField, v: &[Coord]) -> Built<Vec<Scalar>> {
    v.iter().map(|c| parse_scalar(base, c)).collect()
}

fn base_field(b: &BaseSpec) -> Built<BaseField> {
    match b {
        BaseSpec::Q => Ok(BaseField::Rationals),
        BaseSpec::Prime(p) => BaseField::prime(*p).map_err(err),
    }
}

fn extension(base: BaseField, spec: Option<&ExtensionSpec>) -> Built<ExtensionField> {
    match spec {
        None => Ok(ExtensionField::trivial(base)),
        Some(ExtensionSpec::Minpoly { coeffs, names }) => {
            ExtensionField::from_minpoly(base, &scalars(base, coeffs)?, names.clone()).map_err(err)
        }
        Some(ExtensionSpec::Table { names, products }) => {
            let table = products
                .iter()
                .map(|row| row.iter().map(|v| scalars(base, v)).collect::<Built<Vec<Element>>>())
                .collect::<Built<_>>()?;
            ExtensionField::from_table(base, names.clone(), table).map_err(err)
        }
        Some(ExtensionSpec::Biquadratic { a, b }) => ExtensionField::biquadratic(base, *a, *b).map_err(err),
    }
}

pub fn subspace(ambient: &Arc<ExtensionField>, spec: &SubspaceSpec) -> Built<Subspace> {
    match spec {
        SubspaceSpec::Zero => Ok(Subspace::zero(ambient)),
        SubspaceSpec::Full => Ok(Subspace::full(ambient)),
        SubspaceSpec::Scalars => Ok(Subspace::scalars(ambient)),
        SubspaceSpec::Span(vectors) => {
            let base = ambient.base();
            let rows = vectors.iter().map(|v| scalars(base, v)).collect::<Built<Vec<_>>>()?;
            Subspace::try_span(ambient, &rows).map_err(err)
        }
    }
}

fn profile(ambient: &Arc<ExtensionField>, spec: &ProfileSpec) -> Built<ProfileModule> {
    match spec {
        ProfileSpec::Zero => Ok(ProfileModule::zero(ambient)),
        ProfileSpec::Full => Ok(ProfileModule::full(ambient)),
        ProfileSpec::Graded { table, tail } => {
            let table = table.iter().map(|s| subspace(ambient, s)).collect::<Built<Vec<_>>>()?;
            ProfileModule::new(ambient, table, subspace(ambient, tail)?).map_err(err)
        }
        ProfileSpec::Exponents { members, from } => {
            Ok(ProfileModule::from_exponents(ambient, &ExponentSet::from_members(members, *from)))
        }
        ProfileSpec::Semigroup(gens) => {
            Ok(ProfileModule::from_exponents(ambient, &ExponentSet::semigroup(gens).map_err(err)?))
        }
    }
}

fn finite_ring(spec: &RingSpec) -> Built<Arc<FiniteRing>> {
    let ring = match spec {
        RingSpec::Zmod(n) => FiniteRing::zmod(*n).map_err(err)?,
        RingSpec::Gf(p) => FiniteRing::gf(*p).map_err(err)?,
        RingSpec::Product(parts) => {
            let mut parts = parts.iter().map(finite_ring).collect::<Built<Vec<_>>>()?.into_iter();
            let first = parts.next().ok_or("product of no rings")?;
            return parts.try_fold(first, |acc, r| FiniteRing::product(&acc, &r).map(Arc::new).map_err(err));
        }
        RingSpec::Idealization { ring, module: m } => {
            let a = finite_ring(ring)?;
            let e = Arc::new(module(&a, m)?);
            FiniteRing::idealization(&a, &e).map_err(err)?
        }
        _ => return Err("expected a finite ring (zmod, gf, product or idealization)".into()),
    };
    Ok(Arc::new(ring))
}

fn module(a: &Arc<FiniteRing>, spec: &ModuleSpec) -> Built<FiniteModule> {
    match spec {
        ModuleSpec::Regular => Ok(FiniteModule::regular(a)),
        ModuleSpec::Quotient(gens) => {
            let idx = gens.iter().map(|g| ring_element(a, g)).collect::<Built<Vec<_>>>()?;
            FiniteModule::quotient(a, &FiniteIdeal::generated(a, &idx)).map_err(err)
        }
        ModuleSpec::DirectSum(parts) => {
            let parts = parts.iter().map(|p| module(a, p)).collect::<Built<Vec<_>>>()?;
            FiniteModule::direct_sum(&parts.iter().collect::<Vec<_>>()).map_err(err)
        }
    }
}

fn label_of(r: &ElemRef) -> String {
    match r {
        ElemRef::Index(n) => n.to_string(),
        ElemRef::Label(s) => s.clone(),
    }
}

fn ring_element(a: &FiniteRing, r: &ElemRef) -> Built<usize> {
    let label = label_of(r);
    a.index_of(&label).ok_or_else(|| format!("no element labelled {label:?} in {a}"))
}

fn module_element(e: &FiniteModule, r: &ElemRef) -> Built<usize> {
    let label = label_of(r);
    (0..e.size()).find(|&x| e.label(x) == label).ok_or_else(|| format!("no element labelled {label:?} in {e}"))
}

fn ring(spec: &RingSpec) -> Built<(RingHandle, Option<Vec<String>>)> {
    Ok(match spec {
        RingSpec::Semigroup { gens, base } => {
            let k = Arc::new(ExtensionField::trivial(base_field(base)?));
            (RingHandle::Series(SeriesRing::semigroup(&k, gens).map_err(err)?), None)
        }
        RingSpec::Series { base, extension: ext, profile: p } => {
            let k = Arc::new(extension(base_field(base)?, ext.as_ref())?);
            (RingHandle::Series(SeriesRing::new(profile(&k, p)?).map_err(err)?), None)
        }
        RingSpec::Monomial { dim, vars } => {
            if let Some(v) = vars {
                if v.len() != *dim {
                    return Err(format!("{} variable names for dimension {dim}", v.len()));
                }
            }
            (RingHandle::Monomial { dim: *dim }, vars.clone())
        }
        RingSpec::SplitZ { module } => (RingHandle::SplitZ(CyclicProduct::new(module.clone()).map_err(err)?), None),
        finite => (RingHandle::Finite(finite_ring(finite)?), None),
    })
}

fn wrong_kernel(spec: &str, ring: &RingHandle) -> String {
    format!("{spec} ideals do not exist in the {} kernel", ring.kernel())
}

fn named<'w>(world: &'w World, name: &str) -> Built<&'w IdealHandle> {
    world.get(name).ok_or_else(|| format!("unknown ideal {name:?}"))
}

fn fold(world: &World, names: &[String], op: impl Fn(&IdealHandle, &IdealHandle) -> crate::Result<IdealHandle>) -> Built<IdealHandle> {
    let (first, rest) = names.split_first().ok_or("needs at least one ideal")?;
    rest.iter().try_fold(named(world, first)?.clone(), |acc, n| op(&acc, named(world, n)?).map_err(err))
}

fn ideal(world: &World, spec: &IdealSpec) -> Built<IdealHandle> {
    let r = &world.ring;
    let with_vars = |i: MonomialIdeal| match &world.vars {
        Some(v) => i.with_vars(v.clone()).map_err(err),
        None => Ok(i),
    };
    match (spec, r) {
        (IdealSpec::Unit, RingHandle::Monomial { dim }) => Ok(IdealHandle::Monomial(with_vars(MonomialIdeal::unit(*dim))?)),
        (IdealSpec::Zero, RingHandle::Monomial { dim }) => Ok(IdealHandle::Monomial(with_vars(MonomialIdeal::zero(*dim))?)),
        (IdealSpec::Unit, _) => Ok(r.unit()),
        (IdealSpec::Zero, _) => Ok(r.zero()),
        (IdealSpec::Profile(p), RingHandle::Series(ring)) => {
            let m = profile(ring.ambient(), p)?;
            if !m.is_module_over(ring.profile()).map_err(err)? {
                return Err(format!("{m} is not a module over the ring"));
            }
            Ok(IdealHandle::Series(m))
        }
        (IdealSpec::Principal { coeff, shift }, RingHandle::Series(ring)) => {
            let k = ring.ambient();
            let x = match coeff {
                Some(c) => k.element(&scalars(k.base(), c)?).map_err(err)?,
                None => k.one(),
            };
            if k.is_zero(&x) {
                return Err("principal generator is zero".into());
            }
            Ok(IdealHandle::Series(ring.principal(&x, *shift)))
        }
        (IdealSpec::Gens(gens), RingHandle::Monomial { dim }) => {
            Ok(IdealHandle::Monomial(with_vars(MonomialIdeal::new(*dim, gens.clone()).map_err(err)?)?))
        }
        (IdealSpec::Generated(gens), RingHandle::Finite(a)) => {
            let idx = gens.iter().map(|g| ring_element(a, g)).collect::<Built<Vec<_>>>()?;
            Ok(IdealHandle::Finite(FiniteIdeal::generated(a, &idx)))
        }
        (IdealSpec::Members(members), RingHandle::Finite(a)) => {
            let idx = members.iter().map(|g| ring_element(a, g)).collect::<Built<Vec<_>>>()?;
            Ok(IdealHandle::Finite(FiniteIdeal::from_members(a, &idx).map_err(err)?))
        }
        (IdealSpec::Split { base, module: f }, RingHandle::Finite(r)) => {
            let (a, e) = r.idealization_parts().map_err(err)?;
            let idx = base.iter().map(|g| ring_element(a, g)).collect::<Built<Vec<_>>>()?;
            let i = FiniteIdeal::generated(a, &idx);
            let f = match f {
                SubmoduleSpec::Zero => Submodule::zero(e),
                SubmoduleSpec::Full => Submodule::full(e),
                SubmoduleSpec::Generated(gens) => {
                    let idx = gens.iter().map(|g| module_element(e, g)).collect::<Built<Vec<_>>>()?;
                    Submodule::generated(e, &idx)
                }
                SubmoduleSpec::Vectors(_) => return Err("module vectors are for split_z rings; use generated".into()),
            };
            Ok(IdealHandle::Finite(split_ideal(r, &i, &f).map_err(err)?))
        }
        (IdealSpec::SplitZ { n, module: f }, RingHandle::SplitZ(e)) => Ok(IdealHandle::SplitZ(match f {
            SubmoduleSpec::Zero => SplitIdealZ::new(e, *n, &[]).map_err(err)?,
            SubmoduleSpec::Full => SplitIdealZ::full(e, *n),
            SubmoduleSpec::Vectors(v) => SplitIdealZ::new(e, *n, v).map_err(err)?,
            SubmoduleSpec::Generated(_) => return Err("split_z module parts are given as vectors".into()),
        })),
        (IdealSpec::Sum(names), _) => fold(world, names, |a, b| a.sum(b)),
        (IdealSpec::Product(names), _) => fold(world, names, |a, b| a.product(b)),
        (IdealSpec::Intersection(names), _) => fold(world, names, |a, b| a.intersect(b)),
        (IdealSpec::Power { of, n }, _) => named(world, of)?.power(*n).map_err(err),
        (IdealSpec::Colon(a, b), _) => named(world, a)?.colon(named(world, b)?).map_err(err),
        (IdealSpec::Shift { of, by }, _) => match named(world, of)? {
            IdealHandle::Series(p) => Ok(IdealHandle::Series(p.shift(*by))),
            _ => Err(wrong_kernel("shifted", r)),
        },
        (IdealSpec::Profile(_) | IdealSpec::Principal { .. }, _) => Err(wrong_kernel("series", r)),
        (IdealSpec::Gens(_), _) => Err(wrong_kernel("monomial", r)),
        (IdealSpec::Generated(_) | IdealSpec::Members(_) | IdealSpec::Split { .. }, _) => Err(wrong_kernel("finite", r)),
        (IdealSpec::SplitZ { .. }, _) => Err(wrong_kernel("split_z", r)),
    }
}

/// Builds the ring and every named ideal, in order.
pub fn build(scene: &Scene) -> std::result::Result<World, InputError> {
    if scene.schema != SCHEMA_VERSION {
        return Err(InputError::new("schema", format!("unsupported schema version {} (expected {SCHEMA_VERSION})", scene.schema)));
    }
    let (ring, vars) = ring(&scene.ring).map_err(|m| InputError::new("ring", m))?;
    let mut world = World { ring, vars, ideals: Vec::new(), index: HashMap::new() };
    for (k, n) in scene.ideals.iter().enumerate() {
        let at = || format!("ideals[{k}] ({:?})", n.name);
        if world.index.contains_key(&n.name) {
            return Err(InputError::new(at(), "duplicate ideal name"));
        }
        let i = ideal(&world, &n.ideal).map_err(|m| InputError::new(at(), m))?;
        world.index.insert(n.name.clone(), world.ideals.len());
        world.ideals.push((n.name.clone(), i));
    }
    for (k, c) in scene.checks.iter().enumerate() {
        let at = format!("checks[{k}] ({})", c.predicate.name());
        let mut refs = c.predicate.references();
        if let Some(CandidateSource::Supplied(names)) = &c.candidates {
            refs.extend(names.iter().map(String::as_str));
        }
        if let Some(AmbientSpec::Module(m)) = &c.ambient {
            refs.push(m);
        }
        for r in refs {
            if world.get(r).is_none() {
                return Err(InputError::new(at, format!("unknown ideal {r:?}")));
            }
        }
        if c.expect.witness.iter().chain(&c.expect.equals).any(|w| world.get(w).is_none()) {
            return Err(InputError::new(at, "expectation names an unknown ideal"));
        }
    }
    Ok(world)
}


pub(super) fn finite_ring_of(spec: &RingSpec) -> Built<Arc<FiniteRing>> {
    finite_ring(spec)
}
