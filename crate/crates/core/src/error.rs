use thiserror::Error;

use crate::deductive::AttackKind;

/// Every failure the toolkit reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("invalid argument identifier `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidIdentifier(String),

    #[error("{what}: size {size} exceeds the configured cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("support does not entail the claim")]
    NotEntailed,

    #[error("support is inconsistent")]
    InconsistentSupport,

    #[error("support is not minimal: {0} already entails the claim")]
    NonMinimalSupport(String),

    #[error("no model of {0} over the given atoms")]
    EmptyModels(&'static str),

    #[error("atom set must be non-empty")]
    EmptyAtomSet,

    #[error("arc ({attacker}, {target}) is not a {kind}")]
    AttackVerificationFailed {
        attacker: String,
        target: String,
        kind: AttackKind,
    },

    #[error("arguments `{0}` and `{1}` carry the same support and claim")]
    DuplicateArgument(String, String),

    #[error("no attack relation holds for arc ({0}, {1})")]
    NoAttack(String, String),

    #[error("argument `{0}` is already committed")]
    AlreadyCommitted(String),

    #[error("answering `{query}` in would force `{neighbour}` out, but it is committed in")]
    CommitmentConflict { query: String, neighbour: String },

    #[error("no undecided arguments left to query")]
    NoUndecided,

    #[error("history is empty")]
    EmptyHistory,

    #[error("measure `{0}` needs an instantiated graph")]
    NeedsInstantiation(String),

    #[error("unknown measure `{0}`")]
    UnknownMeasure(String),

    #[error("argument tree has a zero denominator for variant {0}")]
    DegenerateTree(u8),

    #[error("invalid argument tree root: {0}")]
    InvalidRoot(String),

    #[error("labelling does not cover the graph: {0}")]
    LabellingMismatch(String),
}

impl Error {
    /// Stable kebab-case identifier for machine-readable error output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownArgument(_) => "unknown-argument",
            Error::InvalidIdentifier(_) => "invalid-identifier",
            Error::ResourceLimit { .. } => "resource-limit",
            Error::Parse { .. } => "parse-error",
            Error::NotEntailed => "not-entailed",
            Error::InconsistentSupport => "inconsistent-support",
            Error::NonMinimalSupport(_) => "non-minimal-support",
            Error::EmptyModels(_) => "empty-models",
            Error::EmptyAtomSet => "empty-atom-set",
            Error::AttackVerificationFailed { .. } => "attack-verification-failed",
            Error::DuplicateArgument(..) => "duplicate-argument",
            Error::NoAttack(..) => "no-attack",
            Error::AlreadyCommitted(_) => "already-committed",
            Error::CommitmentConflict { .. } => "commitment-conflict",
            Error::NoUndecided => "no-undecided",
            Error::EmptyHistory => "empty-history",
            Error::NeedsInstantiation(_) => "needs-instantiation",
            Error::UnknownMeasure(_) => "unknown-measure",
            Error::DegenerateTree(_) => "degenerate-tree",
            Error::InvalidRoot(_) => "invalid-root",
            Error::LabellingMismatch(_) => "labelling-mismatch",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
