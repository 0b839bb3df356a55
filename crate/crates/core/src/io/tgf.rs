//! Trivial Graph Format: node lines, a `#` separator, then arc lines.

use crate::error::Result;
use crate::graph::ArgumentGraph;

use super::{ident, parse_error, words};

/// Node lines may carry a label after the identifier; labels are ignored.
pub fn parse_tgf(text: &str) -> Result<ArgumentGraph> {
    let mut g = ArgumentGraph::empty();
    let mut in_arcs = false;
    for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        let ws = words(line);
        let Some(&(col, first)) = ws.first() else { continue };
        if first == "#" && ws.len() == 1 {
            if in_arcs {
                return Err(parse_error(n, col, "second `#` separator"));
            }
            in_arcs = true;
            continue;
        }
        if !in_arcs {
            g.insert_node(ident(n, col, first)?);
            continue;
        }
        if ws.len() < 2 {
            return Err(parse_error(n, col, "arc line needs a source and a target"));
        }
        let mut ends = Vec::with_capacity(2);
        for &(c, w) in &ws[..2] {
            let a = ident(n, c, w)?;
            if !g.contains(&a) {
                return Err(parse_error(n, c, format!("arc mentions undeclared node `{a}`")));
            }
            ends.push(a);
        }
        let b = ends.pop().expect("two ends");
        let a = ends.pop().expect("two ends");
        g.insert_arc(a, b)?;
    }
    Ok(g)
}

pub fn render_tgf(g: &ArgumentGraph) -> String {
    let mut out = String::new();
    for a in g.nodes() {
        out.push_str(a.as_str());
        out.push('\n');
    }
    out.push_str("#\n");
    for (a, b) in g.arcs() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
