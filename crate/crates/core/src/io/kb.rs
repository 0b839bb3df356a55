//! Knowledgebase files: one formula per line, `#` comments.

use crate::error::Result;
use crate::logic::{parse_formula_at, KnowledgeBase};

use super::rest_after;

pub fn parse_kb(text: &str) -> Result<KnowledgeBase> {
    let mut kb = KnowledgeBase::new();
    for (i, line) in text.lines().enumerate() {
        let (col, rest) = rest_after(line, 0);
        if rest.trim().is_empty() || rest.starts_with('#') {
            continue;
        }
        kb.insert(parse_formula_at(rest, i + 1, col)?);
    }
    Ok(kb)
}

pub fn render_kb(kb: &KnowledgeBase) -> String {
    kb.iter().map(|f| format!("{f}\n")).collect()
}
