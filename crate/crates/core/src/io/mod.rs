//! Text formats for graphs, instantiated graphs and knowledgebases, plus the JSON measure report.

mod apx;
mod inst;
mod kb;
mod report;
mod tgf;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use apx::{parse_apx, render_apx};
pub use inst::{parse_instantiated, render_instantiated, INST_HEADER};
pub use kb::{parse_kb, render_kb};
pub use report::{MeasureReport, Timing};
pub use tgf::{parse_tgf, render_tgf};

use crate::error::{Error, Result};
use crate::deductive::InstantiatedGraph;
use crate::graph::{ArgumentGraph, ArgumentId};
use crate::resolution::CommitmentState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Tgf,
    Apx,
}

impl GraphFormat {
    /// Guesses the format from a file extension, defaulting to TGF.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("apx") => GraphFormat::Apx,
            _ => GraphFormat::Tgf,
        }
    }

    /// Guesses the format from content: APX statements start with `arg(` or `att(`.
    pub fn sniff(text: &str) -> GraphFormat {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('%'));
        match first {
            Some(l) if l.starts_with("arg(") || l.starts_with("att(") => GraphFormat::Apx,
            _ => GraphFormat::Tgf,
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::Tgf => "tgf",
            GraphFormat::Apx => "apx",
        })
    }
}

impl FromStr for GraphFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tgf" => Ok(GraphFormat::Tgf),
            "apx" => Ok(GraphFormat::Apx),
            other => Err(format!("unknown graph format `{other}` (expected tgf or apx)")),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<ArgumentGraph> {
    match format {
        GraphFormat::Tgf => parse_tgf(text),
        GraphFormat::Apx => parse_apx(text),
    }
}

pub fn render_graph(g: &ArgumentGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Tgf => render_tgf(g),
        GraphFormat::Apx => render_apx(g),
    }
}

/// Any document a resolution session or the CLI can start from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentFormat {
    Tgf,
    Apx,
    Inst,
}

impl DocumentFormat {
    /// Instantiated documents open with their header; graphs are sniffed as TGF or APX.
    pub fn sniff(text: &str) -> DocumentFormat {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
        if first == Some(INST_HEADER) {
            return DocumentFormat::Inst;
        }
        match GraphFormat::sniff(text) {
            GraphFormat::Tgf => DocumentFormat::Tgf,
            GraphFormat::Apx => DocumentFormat::Apx,
        }
    }

    pub fn from_path(path: &Path) -> Option<DocumentFormat> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("tgf") => Some(DocumentFormat::Tgf),
            Some("apx") => Some(DocumentFormat::Apx),
            Some("inst") => Some(DocumentFormat::Inst),
            _ => None,
        }
    }
}

impl FromStr for DocumentFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tgf" => Ok(DocumentFormat::Tgf),
            "apx" => Ok(DocumentFormat::Apx),
            "inst" => Ok(DocumentFormat::Inst),
            other => Err(format!("unknown document format `{other}` (expected tgf, apx or inst)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Abstract(ArgumentGraph),
    Instantiated(InstantiatedGraph),
}

impl Document {
    pub fn graph(&self) -> &ArgumentGraph {
        match self {
            Document::Abstract(g) => g,
            Document::Instantiated(ig) => ig.graph(),
        }
    }

    /// A fresh all-undecided resolution state over the document.
    pub fn into_state(self) -> CommitmentState {
        match self {
            Document::Abstract(g) => CommitmentState::new(g),
            Document::Instantiated(ig) => CommitmentState::instantiated(&ig),
        }
    }
}

/// Parses `text` as `format`, or as the sniffed format when none is given.
pub fn parse_document(text: &str, format: Option<DocumentFormat>) -> Result<Document> {
    match format.unwrap_or_else(|| DocumentFormat::sniff(text)) {
        DocumentFormat::Tgf => parse_tgf(text).map(Document::Abstract),
        DocumentFormat::Apx => parse_apx(text).map(Document::Abstract),
        DocumentFormat::Inst => parse_instantiated(text).map(Document::Instantiated),
    }
}

pub(crate) fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Whitespace-separated words of a line with their 1-based character columns.
pub(crate) fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let mut col = 0;
    for (byte, ch) in line.char_indices() {
        col += 1;
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col, byte)),
            (true, Some((c, b))) => {
                out.push((c, &line[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &line[b..]));
    }
    out
}

pub(crate) fn ident(line: usize, column: usize, text: &str) -> Result<ArgumentId> {
    ArgumentId::new(text).map_err(|e| parse_error(line, column, e.to_string()))
}

/// Column just past the leading `n` characters of `line`, skipping whitespace after them.
pub(crate) fn rest_after(line: &str, n: usize) -> (usize, &str) {
    let tail: String = line.chars().skip(n).collect();
    let lead = tail.chars().take_while(|c| c.is_whitespace()).count();
    let start = line.char_indices().nth(n + lead).map(|(b, _)| b).unwrap_or(line.len());
    (n + lead + 1, &line[start..])
}
