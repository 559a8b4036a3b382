use std::fmt;

/// How far a candidate stream reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    /// Every candidate in the ring.
    Complete,
    /// Every candidate agreeing with the target beyond this exponent.
    Window(usize),
    /// A caller-supplied list of this many candidates.
    Supplied(usize),
    /// A single direct computation, no candidates involved.
    Direct,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Complete => write!(f, "complete"),
            Scope::Window(w) => write!(f, "window {w}"),
            Scope::Supplied(k) => write!(f, "{k} supplied"),
            Scope::Direct => write!(f, "direct"),
        }
    }
}

/// What was decided for one candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowerCheck {
    /// Equality first holds at this exponent (a power, or a reduction index).
    EqualAt(usize),
    /// Strict for every exponent up to the bound.
    StrictThrough(usize),
    /// Strict for every exponent, decided exactly.
    StrictForAll,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<W> {
    HoldsExhaustive,
    HoldsWithinBounds { n_max: usize, scope: Scope },
    Fails { witness: W, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checked<W> {
    pub candidate: W,
    pub decided: PowerCheck,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<W> {
    pub outcome: Outcome<W>,
    pub transcript: Vec<Checked<W>>,
}

impl<W: Clone> Verdict<W> {
    /// Folds per-candidate decisions into an outcome. The witness is the
    /// candidate with the smallest exponent, earliest in stream order on ties.
    pub fn from_transcript(transcript: Vec<Checked<W>>, scope: Scope, n_max: usize) -> Self {
        let mut best: Option<(usize, &Checked<W>)> = None;
        for c in &transcript {
            if let PowerCheck::EqualAt(n) = c.decided {
                if best.is_none_or(|(m, _)| n < m) {
                    best = Some((n, c));
                }
            }
        }
        let outcome = match best {
            Some((n, c)) => Outcome::Fails { witness: c.candidate.clone(), n },
            None if scope == Scope::Complete
                && transcript.iter().all(|c| c.decided == PowerCheck::StrictForAll) =>
            {
                Outcome::HoldsExhaustive
            }
            None => Outcome::HoldsWithinBounds { n_max, scope },
        };
        Verdict { outcome, transcript }
    }

    pub fn holds(&self) -> bool {
        !self.fails()
    }

    pub fn fails(&self) -> bool {
        matches!(self.outcome, Outcome::Fails { .. })
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self.outcome, Outcome::HoldsExhaustive)
    }

    pub fn witness(&self) -> Option<(&W, usize)> {
        match &self.outcome {
            Outcome::Fails { witness, n } => Some((witness, *n)),
            _ => None,
        }
    }

    pub fn map<V>(self, f: impl Fn(W) -> V) -> Verdict<V> {
        let outcome = match self.outcome {
            Outcome::HoldsExhaustive => Outcome::HoldsExhaustive,
            Outcome::HoldsWithinBounds { n_max, scope } => Outcome::HoldsWithinBounds { n_max, scope },
            Outcome::Fails { witness, n } => Outcome::Fails { witness: f(witness), n },
        };
        let transcript = self
            .transcript
            .into_iter()
            .map(|c| Checked { candidate: f(c.candidate), decided: c.decided })
            .collect();
        Verdict { outcome, transcript }
    }
}

impl<W: fmt::Display> fmt::Display for Outcome<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::HoldsExhaustive => write!(f, "holds (exhaustive)"),
            Outcome::HoldsWithinBounds { n_max, scope } => write!(f, "holds for n <= {n_max} ({scope})"),
            Outcome::Fails { witness, n } => write!(f, "fails at n = {n}, witness {witness}"),
        }
    }
}

/// Outcome of a reduction test `J·I^n = I^(n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionVerdict {
    /// `J` is a reduction with this least index.
    Index(usize),
    /// Not a reduction for any index up to the bound.
    NotWithin(usize),
    /// Never a reduction, decided exactly.
    Never,
}

impl ReductionVerdict {
    pub fn index(&self) -> Option<usize> {
        match self {
            ReductionVerdict::Index(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for ReductionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionVerdict::Index(n) => write!(f, "reduction with index {n}"),
            ReductionVerdict::NotWithin(n) => write!(f, "no reduction index <= {n}"),
            ReductionVerdict::Never => write!(f, "not a reduction"),
        }
    }
}
