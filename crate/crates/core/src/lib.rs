//! Inconsistency measures for abstract and logic-instantiated argument graphs.
//!
//! The crate covers argumentation semantics, structure- and extension-based
//! measures, a propositional logic layer with deductive arguments and
//! Dalal-based degrees of undercut, argument trees, and the commitment-driven
//! resolution process that uses the measures to pick the next query.

pub mod deductive;
pub mod error;
pub mod extension;
pub mod graph;
pub mod instantiated;
pub mod io;
pub mod logic;
pub mod measure;
pub mod par;
pub mod properties;
pub mod resolution;
pub mod semantics;
pub mod structure;
pub mod tree;
pub mod value;

pub use deductive::{AttackKind, ClassicalArgument, InstantiatedGraph};
pub use error::{Error, Result};
pub use graph::{id, ArgumentGraph, ArgumentId};
pub use logic::{Formula, KnowledgeBase};
pub use measure::MeasureId;
pub use par::{Config, Execution, Limits};
pub use resolution::{Answer, CommitmentState};
pub use semantics::{Extension, Label, Labelling, SemanticsKind};
pub use value::MeasureValue;
