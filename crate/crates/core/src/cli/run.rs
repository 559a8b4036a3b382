//! Evaluates checks and assembles reports.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use super::build::{build, subspace, InputError, World};
use super::scene::*;
use crate::field::{Scalar, Subspace};
use crate::finite::{enumerate_ideals, DEFAULT_MAX_SIZE};
use crate::predicates::{
    big_ideal_ring, check_rr_implies_upper_big, is_basic, is_big, is_c_ideal, is_reduction, is_upper_big,
    ratliff_rush, BigIdealRing, Candidates, Ideal, IdealHandle, Outcome, ReductionVerdict, RingHandle, SuperAmbient,
    Verdict,
};
use crate::series::submodule_power_escapes;

pub const DEFAULT_N_MAX: usize = 8;

/// Settings shared by every check of a run.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Replaces the default `n_max` for checks that do not set one.
    pub n_max: Option<usize>,
    /// Leave out wall-clock times.
    pub stable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultOutcome {
    /// Decided by a direct exact computation.
    Holds,
    HoldsExhaustive,
    HoldsWithinBounds,
    Fails,
    /// Neither settled nor refuted within the bounds.
    Undecided,
}

/// An object in human-readable and machine forms. The machine form is
/// accepted back as a scene ideal (or subspace).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rendered {
    pub display: String,
    pub machine: Value,
    /// A scene ideal equal to this one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub outcome: ResultOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Rendered>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scope: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    /// Candidates examined.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    /// A computed object: a closure, an endomorphism ring, an offending ideal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Rendered>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilized_at: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alarm: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    pub detail: String,
}

impl CheckResult {
    fn new(outcome: ResultOutcome, detail: impl Into<String>) -> Self {
        CheckResult {
            outcome,
            n: None,
            witness: None,
            scope: None,
            n_max: None,
            candidates: None,
            index: None,
            value: None,
            stabilized_at: None,
            exact: None,
            alarm: None,
            count: None,
            detail: detail.into(),
        }
    }

    fn exact(holds: bool, detail: impl Into<String>) -> Self {
        CheckResult::new(if holds { ResultOutcome::Holds } else { ResultOutcome::Fails }, detail)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub index: usize,
    pub summary: String,
    pub input: Check,
    pub result: CheckResult,
    pub matches: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SceneReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scene: Option<String>,
    pub schema: u32,
    pub ring: String,
    pub checks: Vec<CheckReport>,
    pub all_match: bool,
}

fn coord(q: &Scalar) -> Value {
    if q.is_integer() {
        if let Ok(n) = q.to_integer().to_string().parse::<i64>() {
            return json!(n);
        }
    }
    json!(q.to_string())
}

fn subspace_machine(s: &Subspace) -> Value {
    if s.is_zero() {
        json!("zero")
    } else if s.is_full() {
        json!("full")
    } else {
        let rows: Vec<Value> = s.basis().iter().map(|v| Value::Array(v.iter().map(coord).collect())).collect();
        json!({ "span": rows })
    }
}

pub fn machine_form(i: &IdealHandle) -> Value {
    match i {
        IdealHandle::Series(p) => match p.exponent_set().filter(|_| p.ambient().degree() == 1) {
            Some(set) => {
                let members = set.members_below(set.conductor());
                if set.is_cofinite() {
                    json!({ "profile": { "exponents": { "members": members, "from": set.conductor() } } })
                } else {
                    json!({ "profile": { "exponents": { "members": members } } })
                }
            }
            None => {
                let table: Vec<Value> = p.table().iter().map(subspace_machine).collect();
                json!({ "profile": { "graded": { "table": table, "tail": subspace_machine(p.tail()) } } })
            }
        },
        IdealHandle::Monomial(m) => json!({ "gens": m.gens() }),
        IdealHandle::Finite(f) => {
            let labels: Vec<&str> = f.members().into_iter().map(|x| f.ring().label(x)).collect();
            json!({ "members": labels })
        }
        IdealHandle::SplitZ(s) => {
            let vectors: Vec<&[u64]> = s.module_part().collect();
            json!({ "split_z": { "n": s.multiplier(), "module": { "vectors": vectors } } })
        }
    }
}

fn render(world: &World, i: &IdealHandle) -> Rendered {
    Rendered { display: i.to_string(), machine: machine_form(i), name: world.name_of(i).map(str::to_string) }
}

fn render_subspace(s: &Subspace) -> Rendered {
    Rendered { display: s.to_string(), machine: subspace_machine(s), name: None }
}

fn target<'w>(world: &'w World, name: &str) -> &'w IdealHandle {
    world.get(name).expect("references are resolved when the scene is built")
}

fn sub_candidates(world: &World, t: &IdealHandle, check: &Check) -> crate::Result<Candidates<IdealHandle>> {
    match &check.candidates {
        Some(CandidateSource::Supplied(names)) => {
            Ok(Candidates::supplied(names.iter().map(|n| target(world, n).clone()).collect()))
        }
        _ => world.ring.sub_candidates(t, check.window),
    }
}

fn super_candidates(world: &World, t: &IdealHandle, check: &Check) -> crate::Result<Candidates<IdealHandle>> {
    match &check.candidates {
        Some(CandidateSource::Supplied(names)) => {
            Ok(Candidates::supplied(names.iter().map(|n| target(world, n).clone()).collect()))
        }
        _ => {
            let ambient = match &check.ambient {
                None | Some(AmbientSpec::PowerSeries) => SuperAmbient::PowerSeries,
                Some(AmbientSpec::Ring) => SuperAmbient::Ring,
                Some(AmbientSpec::Module(m)) => match target(world, m) {
                    IdealHandle::Series(p) => SuperAmbient::Module(p.clone()),
                    _ => return Err(crate::AlgebraError::Unsupported("ambient modules outside the series kernel")),
                },
            };
            world.ring.super_candidates(t, check.window, &ambient)
        }
    }
}

fn from_verdict(world: &World, v: &Verdict<IdealHandle>, n_max: usize) -> CheckResult {
    let mut r = match &v.outcome {
        Outcome::HoldsExhaustive => CheckResult::new(ResultOutcome::HoldsExhaustive, format!("{}", v.outcome)),
        Outcome::HoldsWithinBounds { scope, .. } => {
            let mut r = CheckResult::new(ResultOutcome::HoldsWithinBounds, format!("{}", v.outcome));
            r.scope = Some(scope.to_string());
            r.n_max = Some(n_max);
            r
        }
        Outcome::Fails { witness, n } => {
            let mut r = CheckResult::new(ResultOutcome::Fails, format!("{}", v.outcome));
            r.n = Some(*n);
            r.witness = Some(render(world, witness));
            r
        }
    };
    r.candidates = Some(v.transcript.len());
    r
}

fn evaluate(world: &World, check: &Check, n_max: usize) -> crate::Result<CheckResult> {
    let t = |name: &str| target(world, name);
    Ok(match &check.predicate {
        Predicate::Contains { target: a, other: b, strict } => {
            let (a, b) = (t(a), t(b));
            let holds = a.contains(b)? && (!*strict || a != b);
            let rel = if *strict { "⊋" } else { "⊇" };
            CheckResult::exact(holds, format!("{a} {rel} {b}: {holds}"))
        }
        Predicate::Equal { target: a, other: b, power } => {
            let p = power.unwrap_or(1);
            let (x, y) = (t(a).power(p)?, t(b).power(p)?);
            let holds = x == y;
            let mut r = CheckResult::exact(holds, format!("power {p}: {x} vs {y}"));
            r.value = Some(render(world, &x));
            r
        }
        Predicate::Member { target: a, exponent } => match t(a) {
            IdealHandle::Monomial(m) => {
                let holds = m.member(exponent)?;
                CheckResult::exact(holds, format!("{exponent:?} in {m}: {holds}"))
            }
            _ => return Err(crate::AlgebraError::Unsupported("membership outside the monomial kernel")),
        },
        Predicate::IsReduction { target: j, of } => {
            let v = is_reduction(t(j), t(of), n_max)?;
            let mut r = match v {
                ReductionVerdict::Index(k) => {
                    let mut r = CheckResult::new(ResultOutcome::Holds, v.to_string());
                    r.index = Some(k);
                    r
                }
                ReductionVerdict::Never => CheckResult::new(ResultOutcome::Fails, v.to_string()),
                ReductionVerdict::NotWithin(_) => CheckResult::new(ResultOutcome::Undecided, v.to_string()),
            };
            r.n_max = Some(n_max);
            r
        }
        Predicate::IsBig { target: a } => from_verdict(world, &is_big(t(a), &sub_candidates(world, t(a), check)?, n_max)?, n_max),
        Predicate::IsBasic { target: a } => {
            from_verdict(world, &is_basic(t(a), &sub_candidates(world, t(a), check)?, n_max)?, n_max)
        }
        Predicate::IsUpperBig { target: a } => {
            from_verdict(world, &is_upper_big(t(a), &super_candidates(world, t(a), check)?, n_max)?, n_max)
        }
        Predicate::IsCIdeal { target: a } => {
            from_verdict(world, &is_c_ideal(t(a), &super_candidates(world, t(a), check)?, n_max)?, n_max)
        }
        Predicate::RatliffRush { target: a } => {
            let rr = ratliff_rush(t(a), &world.ring.unit(), n_max)?;
            let closed = rr.closure == *t(a);
            let outcome = match (closed, rr.exact) {
                (false, _) => ResultOutcome::Fails,
                (true, true) => ResultOutcome::Holds,
                (true, false) => ResultOutcome::HoldsWithinBounds,
            };
            let mut r = CheckResult::new(outcome, format!("closure {}", rr.closure));
            r.value = Some(render(world, &rr.closure));
            r.stabilized_at = rr.stabilized_at;
            r.exact = Some(rr.exact);
            r.n_max = Some(n_max);
            r
        }
        Predicate::RrImpliesUpperBig { target: a } => {
            let cands = super_candidates(world, t(a), check)?;
            let out = check_rr_implies_upper_big(t(a), &world.ring.unit(), &cands, n_max)?;
            let mut r = from_verdict(world, &out.verdict, n_max);
            r.alarm = Some(out.alarm);
            r.stabilized_at = out.closure.stabilized_at;
            r
        }
        Predicate::IsStronglyStable { target: a } => match (&world.ring, t(a)) {
            (RingHandle::Series(ring), IdealHandle::Series(p)) => {
                let s = ring.is_strongly_stable(p)?;
                let endo = IdealHandle::Series(s.endomorphisms().profile().clone());
                let detail = match s.generator_display() {
                    Some(g) => format!("I = {g}·(I:I), (I:I) = {endo}"),
                    None => format!("I is not principal over (I:I) = {endo}"),
                };
                let mut r = CheckResult::exact(s.holds(), detail);
                r.value = Some(render(world, &endo));
                r
            }
            _ => return Err(crate::AlgebraError::Unsupported("strong stability outside the series kernel")),
        },
        Predicate::PowerEscapes { subspace: w } => {
            let k = world.ambient().ok_or(crate::AlgebraError::Unsupported("subspaces outside the series kernel"))?;
            let w = subspace(k, w).map_err(crate::AlgebraError::Precondition)?;
            let v = submodule_power_escapes(&w, n_max)?;
            let mut r = match &v.outcome {
                Outcome::Fails { n, .. } => {
                    let mut r = CheckResult::new(ResultOutcome::Holds, format!("{w} has power K at n = {n}"));
                    r.n = Some(*n);
                    r.witness = Some(render_subspace(&w));
                    r
                }
                Outcome::HoldsExhaustive => CheckResult::new(ResultOutcome::Fails, format!("the powers of {w} stay proper")),
                Outcome::HoldsWithinBounds { .. } => {
                    CheckResult::new(ResultOutcome::Undecided, format!("no power of {w} is K for n <= {n_max}"))
                }
            };
            r.n_max = Some(n_max);
            r
        }
        Predicate::BigIdealRing => {
            let ring = finite_ring(world)?;
            let ideals: Vec<IdealHandle> =
                enumerate_ideals(ring, DEFAULT_MAX_SIZE.max(ring.size()))?.into_iter().map(IdealHandle::Finite).collect();
            match big_ideal_ring(&ideals, n_max)? {
                BigIdealRing::Holds => CheckResult::new(ResultOutcome::HoldsExhaustive, "every ideal is big"),
                BigIdealRing::Fails { ideal, witness, n } => {
                    let mut r = CheckResult::new(ResultOutcome::Fails, format!("{ideal} is not big: {witness} at n = {n}"));
                    r.n = Some(n);
                    r.witness = Some(render(world, &witness));
                    r.value = Some(render(world, &ideal));
                    r
                }
                BigIdealRing::Undecided => CheckResult::new(ResultOutcome::Undecided, "some ideal is big only within bounds"),
            }
        }
        Predicate::IdealCount => {
            let ring = finite_ring(world)?;
            let count = enumerate_ideals(ring, DEFAULT_MAX_SIZE.max(ring.size()))?.len();
            let mut r = CheckResult::new(ResultOutcome::Holds, format!("{count} ideals"));
            r.count = Some(count);
            r
        }
    })
}

fn finite_ring(world: &World) -> crate::Result<&std::sync::Arc<crate::finite::FiniteRing>> {
    match &world.ring {
        RingHandle::Finite(r) => Ok(r),
        _ => Err(crate::AlgebraError::Unsupported("ideal lattices outside the finite kernel")),
    }
}

fn outcome_matches(expected: ExpectedOutcome, got: ResultOutcome) -> bool {
    use ResultOutcome as R;
    match expected {
        ExpectedOutcome::Holds => matches!(got, R::Holds | R::HoldsExhaustive | R::HoldsWithinBounds),
        ExpectedOutcome::HoldsExhaustive => matches!(got, R::Holds | R::HoldsExhaustive),
        ExpectedOutcome::HoldsWithinBounds => got == R::HoldsWithinBounds,
        ExpectedOutcome::Fails => got == R::Fails,
    }
}

fn tag<T: Serialize>(t: &T) -> String {
    match serde_json::to_value(t) {
        Ok(Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

fn compare(world: &World, expect: &Expect, r: &CheckResult) -> Vec<String> {
    let mut out = Vec::new();
    let mut field = |what: &str, want: String, got: String| {
        if want != got {
            out.push(format!("{what}: expected {want}, got {got}"));
        }
    };
    let show = |v: Option<usize>| v.map_or("none".to_string(), |n| n.to_string());
    if let Some(o) = expect.outcome {
        if !outcome_matches(o, r.outcome) {
            field("outcome", tag(&o), tag(&r.outcome));
        }
    }
    if let Some(n) = expect.n {
        field("n", n.to_string(), show(r.n));
    }
    if let Some(k) = expect.index {
        field("index", k.to_string(), show(r.index));
    }
    if let Some(k) = expect.stabilized_at {
        field("stabilized_at", k.to_string(), show(r.stabilized_at));
    }
    if let Some(k) = expect.count {
        field("count", k.to_string(), show(r.count));
    }
    if let Some(a) = expect.alarm {
        field("alarm", a.to_string(), r.alarm.map_or("none".into(), |b| b.to_string()));
    }
    for (what, name, got) in [("witness", &expect.witness, &r.witness), ("value", &expect.equals, &r.value)] {
        if let Some(name) = name {
            let want = machine_form(target(world, name));
            if got.as_ref().map(|g| &g.machine) != Some(&want) {
                let got = got.as_ref().map_or("none".to_string(), |g| g.display.clone());
                field(what, format!("{name} = {}", target(world, name)), got);
            }
        }
    }
    out
}

fn ring_display(r: &RingHandle) -> String {
    match r {
        RingHandle::Series(s) => format!("series ring {s}"),
        RingHandle::Monomial { dim } => format!("monomial ideals in {dim} variables"),
        RingHandle::Finite(f) => format!("{f} (order {})", f.size()),
        RingHandle::SplitZ(e) => format!("Z ⋉ {e}"),
    }
}

/// Builds a scene and runs its checks in order.
pub fn run_scene(scene: &Scene, opts: RunOptions) -> Result<SceneReport, InputError> {
    let world = build(scene)?;
    let mut checks = Vec::with_capacity(scene.checks.len());
    for (k, check) in scene.checks.iter().enumerate() {
        let n_max = check.n_max.or(opts.n_max).unwrap_or(DEFAULT_N_MAX);
        let start = Instant::now();
        let result = evaluate(&world, check, n_max)
            .map_err(|e| InputError::new(format!("checks[{k}] ({})", check.predicate.summary()), e))?;
        let elapsed = start.elapsed().as_millis() as u64;
        let mismatches = compare(&world, &check.expect, &result);
        checks.push(CheckReport {
            index: k,
            summary: check.label.clone().unwrap_or_else(|| check.predicate.summary()),
            input: check.clone(),
            result,
            matches: mismatches.is_empty(),
            mismatches,
            wall_time_ms: (!opts.stable).then_some(elapsed),
        });
    }
    let all_match = checks.iter().all(|c| c.matches);
    Ok(SceneReport {
        scene: scene.name.clone(),
        schema: scene.schema,
        ring: ring_display(&world.ring),
        checks,
        all_match,
    })
}

pub fn format_text(report: &SceneReport) -> String {
    let mut s = String::new();
    let name = report.scene.as_deref().unwrap_or("scene");
    let _ = writeln!(s, "{name}: {}", report.ring);
    for c in &report.checks {
        let mark = if c.matches { "ok" } else { "MISMATCH" };
        let _ = writeln!(s, "  [{mark}] {}: {}", c.summary, c.result.detail);
        for m in &c.mismatches {
            let _ = writeln!(s, "      {m}");
        }
    }
    let ok = report.checks.iter().filter(|c| c.matches).count();
    let _ = writeln!(s, "  {ok}/{} checks as expected", report.checks.len());
    s
}
