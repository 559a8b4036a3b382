//! The scene file format, version 1.
//!
//! A scene names one ring, a list of ideals built in order (later ideals may
//! refer to earlier ones by name) and a list of checks with expectations.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub ring: RingSpec,
    #[serde(default)]
    pub ideals: Vec<NamedIdeal>,
    #[serde(default)]
    pub checks: Vec<Check>,
}

/// A rational or mod-p coordinate: an integer, or a string such as `"-3/4"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Int(i64),
    Text(String),
}

/// An element of a finite ring or module, by index or by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRef {
    Index(i64),
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseSpec {
    Q,
    Prime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ExtensionSpec {
    /// Monic, constant term first.
    Minpoly {
        coeffs: Vec<Coord>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    /// `products[i][j]` are the coordinates of `e_i e_j`.
    Table { names: Vec<String>, products: Vec<Vec<Vec<Coord>>> },
    Biquadratic { a: i64, b: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubspaceSpec {
    Zero,
    Full,
    /// The base field inside `K`.
    Scalars,
    Span(Vec<Vec<Coord>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ProfileSpec {
    Zero,
    Full,
    /// Subspaces at `X^0, X^1, …`, then `tail` from the table's end on.
    Graded { table: Vec<SubspaceSpec>, tail: SubspaceSpec },
    /// A degree-one profile: `members` below `from`, everything from `from` on.
    /// Without `from` the set is finite.
    Exponents {
        members: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        from: Option<usize>,
    },
    Semigroup(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleSpec {
    Regular,
    /// `A / (generators)`.
    Quotient(Vec<ElemRef>),
    DirectSum(Vec<ModuleSpec>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    Semigroup {
        gens: Vec<usize>,
        #[serde(default = "default_base")]
        base: BaseSpec,
    },
    Series {
        base: BaseSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        extension: Option<ExtensionSpec>,
        profile: ProfileSpec,
    },
    Monomial {
        dim: usize,
        #[serde(default, alias = "gens", skip_serializing_if = "Option::is_none")]
        vars: Option<Vec<String>>,
    },
    Zmod(u64),
    Gf(u64),
    Product(Vec<RingSpec>),
    Idealization { ring: Box<RingSpec>, module: ModuleSpec },
    /// `Z ⋉ (Z/m_1 × … × Z/m_k)`.
    SplitZ { module: Vec<u64> },
}

fn default_base() -> BaseSpec {
    BaseSpec::Q
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubmoduleSpec {
    Zero,
    Full,
    /// Generated by module elements, by label.
    Generated(Vec<ElemRef>),
    /// Generated by vectors of `Z/m_1 × … × Z/m_k`.
    Vectors(Vec<Vec<u64>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum IdealSpec {
    Unit,
    Zero,
    /// Series kernel.
    Profile(ProfileSpec),
    /// `x·X^k·R`; `coeff` defaults to `1`.
    Principal {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coeff: Option<Vec<Coord>>,
        shift: usize,
    },
    /// Monomial kernel: exponent vectors of the generators.
    Gens(Vec<Vec<u32>>),
    /// Finite kernel: the ideal generated by these elements.
    Generated(Vec<ElemRef>),
    /// Finite kernel: an explicit member set, which must be an ideal.
    Members(Vec<ElemRef>),
    /// `I ⋉ F` in an idealization, with `I` generated in the base ring.
    Split { base: Vec<ElemRef>, module: SubmoduleSpec },
    /// `nZ ⋉ F`, with `F` generated by vectors of the module.
    SplitZ { n: u64, module: SubmoduleSpec },
    Sum(Vec<String>),
    Product(Vec<String>),
    Power { of: String, n: usize },
    Intersection(Vec<String>),
    /// `(a : b)`.
    Colon(String, String),
    /// `X^k·I`.
    Shift { of: String, by: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedIdeal {
    pub name: String,
    pub ideal: IdealSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateSource {
    Exhaustive,
    Supplied(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AmbientSpec {
    PowerSeries,
    Ring,
    Module(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "predicate", rename_all = "snake_case")]
pub enum Predicate {
    /// `other ⊆ target`, optionally strictly.
    Contains {
        target: String,
        other: String,
        #[serde(default, skip_serializing_if = "is_false")]
        strict: bool,
    },
    /// `target^power = other^power`, power 1 by default.
    Equal {
        target: String,
        other: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        power: Option<usize>,
    },
    Member { target: String, exponent: Vec<u32> },
    IsReduction { target: String, of: String },
    IsBasic { target: String },
    IsCIdeal { target: String },
    IsBig { target: String },
    IsUpperBig { target: String },
    RatliffRush { target: String },
    RrImpliesUpperBig { target: String },
    IsStronglyStable { target: String },
    PowerEscapes { subspace: SubspaceSpec },
    BigIdealRing,
    IdealCount,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(flatten)]
    pub predicate: Predicate,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<CandidateSource>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<AmbientSpec>,
    #[serde(default, skip_serializing_if = "Expect::is_empty")]
    pub expect: Expect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedOutcome {
    /// Either kind of hold.
    Holds,
    HoldsExhaustive,
    HoldsWithinBounds,
    Fails,
}

/// Every field present must match the result.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcome: Option<ExpectedOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Name of the ideal expected as witness.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    /// Name of the ideal a computed closure should equal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equals: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilized_at: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alarm: Option<bool>,
}

impl Expect {
    pub fn is_empty(&self) -> bool {
        *self == Expect::default()
    }
}

impl Predicate {
    pub fn name(&self) -> &'static str {
        match self {
            Predicate::Contains { .. } => "contains",
            Predicate::Equal { .. } => "equal",
            Predicate::Member { .. } => "member",
            Predicate::IsReduction { .. } => "is_reduction",
            Predicate::IsBasic { .. } => "is_basic",
            Predicate::IsCIdeal { .. } => "is_c_ideal",
            Predicate::IsBig { .. } => "is_big",
            Predicate::IsUpperBig { .. } => "is_upper_big",
            Predicate::RatliffRush { .. } => "ratliff_rush",
            Predicate::RrImpliesUpperBig { .. } => "rr_implies_upper_big",
            Predicate::IsStronglyStable { .. } => "is_strongly_stable",
            Predicate::PowerEscapes { .. } => "power_escapes",
            Predicate::BigIdealRing => "big_ideal_ring",
            Predicate::IdealCount => "ideal_count",
        }
    }

    /// Every ideal name the predicate refers to.
    pub fn references(&self) -> Vec<&str> {
        match self {
            Predicate::Contains { target, other, .. } | Predicate::Equal { target, other, .. } => {
                vec![target, other]
            }
            Predicate::IsReduction { target, of } => vec![target, of],
            Predicate::Member { target, .. }
            | Predicate::IsBasic { target }
            | Predicate::IsCIdeal { target }
            | Predicate::IsBig { target }
            | Predicate::IsUpperBig { target }
            | Predicate::RatliffRush { target }
            | Predicate::RrImpliesUpperBig { target }
            | Predicate::IsStronglyStable { target } => vec![target],
            Predicate::PowerEscapes { .. } | Predicate::BigIdealRing | Predicate::IdealCount => vec![],
        }
    }

    /// A short rendering such as `is_big(N)`.
    pub fn summary(&self) -> String {
        let args = match self {
            Predicate::PowerEscapes { .. } => vec!["W".to_string()],
            other => other.references().iter().map(|s| s.to_string()).collect(),
        };
        format!("{}({})", self.name(), args.join(", "))
    }
}

impl IdealSpec {
    pub fn references(&self) -> Vec<&str> {
        match self {
            IdealSpec::Sum(v) | IdealSpec::Product(v) | IdealSpec::Intersection(v) => {
                v.iter().map(String::as_str).collect()
            }
            IdealSpec::Power { of, .. } | IdealSpec::Shift { of, .. } => vec![of],
            IdealSpec::Colon(a, b) => vec![a, b],
            _ => vec![],
        }
    }
}
