//! Instantiated graph documents.
//!
//! ```text
//! argmeter-inst v1
//! node A1
//!   support alpha
//!   support beta
//!   claim alpha & beta
//! node A2
//!   support !alpha | !beta
//!   claim !(alpha & beta)
//! arc A2 A1 canonical-undercut
//! ```
//!
//! Lines starting with `#` are comments. A node may have no support lines when its claim is a tautology.

use std::collections::BTreeMap;

use crate::deductive::{AttackKind, Binding, ClassicalArgument, InstantiatedGraph};
use crate::error::Result;
use crate::graph::ArgumentId;
use crate::logic::{parse_formula_at, Formula, KnowledgeBase};

use super::{ident, parse_error, rest_after, words};

pub const INST_HEADER: &str = "argmeter-inst v1";

struct NodeBlock {
    line: usize,
    support: KnowledgeBase,
    claim: Option<Formula>,
}

pub fn parse_instantiated(text: &str) -> Result<InstantiatedGraph> {
    let mut header_seen = false;
    let mut order: Vec<ArgumentId> = Vec::new();
    let mut nodes: BTreeMap<ArgumentId, NodeBlock> = BTreeMap::new();
    let mut arcs = Vec::new();
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        last_line = n;
        let ws = words(line);
        let Some(&(col, head)) = ws.first() else { continue };
        if head.starts_with('#') {
            continue;
        }
        if !header_seen {
            if line.trim() != INST_HEADER {
                return Err(parse_error(n, col, format!("expected header `{INST_HEADER}`")));
            }
            header_seen = true;
            continue;
        }
        match head {
            "node" => {
                let &[_, (c, name)] = ws.as_slice() else {
                    return Err(parse_error(n, col, "expected `node <id>`"));
                };
                let a = ident(n, c, name)?;
                if nodes.contains_key(&a) {
                    return Err(parse_error(n, c, format!("node `{a}` declared twice")));
                }
                order.push(a.clone());
                nodes.insert(a, NodeBlock { line: n, support: KnowledgeBase::new(), claim: None });
            }
            "support" | "claim" => {
                let Some(block) = order.last().and_then(|a| nodes.get_mut(a)) else {
                    return Err(parse_error(n, col, format!("`{head}` outside a node block")));
                };
                let (fc, rest) = rest_after(line, col - 1 + head.chars().count());
                if rest.trim().is_empty() {
                    return Err(parse_error(n, fc, format!("`{head}` needs a formula")));
                }
                let f = parse_formula_at(rest, n, fc)?;
                if head == "support" {
                    block.support.insert(f);
                } else if block.claim.replace(f).is_some() {
                    return Err(parse_error(n, col, "node has two claims"));
                }
            }
            "arc" => {
                let &[_, (ca, a), (cb, b), (ck, k)] = ws.as_slice() else {
                    return Err(parse_error(n, col, "expected `arc <source> <target> <attack-kind>`"));
                };
                let (a, b) = (ident(n, ca, a)?, ident(n, cb, b)?);
                for (c, x) in [(ca, &a), (cb, &b)] {
                    if !nodes.contains_key(x) {
                        return Err(parse_error(n, c, format!("arc mentions undeclared node `{x}`")));
                    }
                }
                let kind: AttackKind = k.parse().map_err(|e: String| parse_error(n, ck, e))?;
                arcs.push((a, b, kind));
            }
            other => return Err(parse_error(n, col, format!("unknown directive `{other}`"))),
        }
    }
    if !header_seen {
        return Err(parse_error(last_line.max(1), 1, format!("missing header `{INST_HEADER}`")));
    }
    let mut binding = Binding::new();
    for (a, block) in nodes {
        let claim = block
            .claim
            .ok_or_else(|| parse_error(block.line, 1, format!("node `{a}` has no claim")))?;
        let arg = ClassicalArgument::new(block.support, claim)
            .map_err(|e| parse_error(block.line, 1, format!("node `{a}`: {e}")))?;
        binding.insert(a, arg);
    }
    InstantiatedGraph::new(binding, arcs)
}

pub fn render_instantiated(ig: &InstantiatedGraph) -> String {
    let mut out = format!("{INST_HEADER}\n");
    for (a, arg) in ig.binding() {
        out.push_str(&format!("node {a}\n"));
        for f in arg.support() {
            out.push_str(&format!("  support {f}\n"));
        }
        out.push_str(&format!("  claim {}\n", arg.claim()));
    }
    for (a, b, kind) in ig.attacks() {
        out.push_str(&format!("arc {a} {b} {kind}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::id;

    const FLIGHT: &str = "argmeter-inst v1
# ticket check
node A1
  support fly
  claim fly
node A2
  support !fly
  claim !fly
node A3
  support fly
  support fly -> ticket
  claim ticket
arc A2 A1 canonical-undercut
arc A2 A3 undercut
";

    #[test]
    fn parses_and_round_trips() {
        let ig = parse_instantiated(FLIGHT).unwrap();
        assert_eq!(ig.kind(&id("A2"), &id("A1")), Some(AttackKind::CanonicalUndercut));
        assert_eq!(parse_instantiated(&render_instantiated(&ig)).unwrap(), ig);
    }

    #[test]
    fn rejects_false_declarations() {
        let bad = FLIGHT.replace("A3 undercut", "A3 rebuttal");
        assert!(matches!(parse_instantiated(&bad), Err(Error::AttackVerificationFailed { .. })));
    }

    #[test]
    fn positions() {
        let e = parse_instantiated("argmeter-inst v1\nnode A\n  claim a &\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, column: 12, .. }), "{e:?}");
        let e = parse_instantiated("node A\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 1, .. }));
        let e = parse_instantiated("argmeter-inst v1\nnode A\n  claim a\n  support a\narc A B rebuttal\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, column: 7, .. }), "{e:?}");
        let e = parse_instantiated("argmeter-inst v1\nnode A\n  support b\n  claim a\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        let e = parse_instantiated("argmeter-inst v1\nnode A\n  claim a\narc A A nope\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, column: 9, .. }), "{e:?}");
    }
}
