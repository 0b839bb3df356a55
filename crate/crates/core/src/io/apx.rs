//! ASPARTIX facts: `arg(a).` and `att(a,b).`, any number per line, `%` comments.

use crate::error::Result;
use crate::graph::{ArgumentGraph, ArgumentId};

use super::{ident, parse_error};

struct Cursor {
    chars: Vec<char>,
    at: usize,
    line: usize,
    column: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor { chars: text.chars().collect(), at: 0, line: 1, column: 1 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.at += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_blank(&mut self) {
        while let Some(c) = self.peek() {
            if c == '%' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_blank();
        let (line, column) = (self.line, self.column);
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(parse_error(line, column, format!("expected `{want}`, found `{c}`"))),
            None => Err(parse_error(line, column, format!("expected `{want}`, found end of input"))),
        }
    }

    fn word(&mut self) -> (usize, usize, String) {
        self.skip_blank();
        let (line, column) = (self.line, self.column);
        let mut w = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_alphanumeric() || *c == '_') {
            w.push(c);
            self.bump();
        }
        (line, column, w)
    }

    fn id(&mut self) -> Result<(usize, usize, ArgumentId)> {
        let (line, column, w) = self.word();
        if w.is_empty() {
            let found = self.peek().map_or("end of input".to_string(), |c| format!("`{c}`"));
            return Err(parse_error(line, column, format!("expected an argument name, found {found}")));
        }
        Ok((line, column, ident(line, column, &w)?))
    }
}

pub fn parse_apx(text: &str) -> Result<ArgumentGraph> {
    let mut cur = Cursor::new(text);
    let mut g = ArgumentGraph::empty();
    let mut arcs = Vec::new();
    loop {
        cur.skip_blank();
        if cur.peek().is_none() {
            break;
        }
        let (line, column, head) = cur.word();
        match head.as_str() {
            "arg" => {
                cur.expect('(')?;
                let (_, _, a) = cur.id()?;
                cur.expect(')')?;
                g.insert_node(a);
            }
            "att" => {
                cur.expect('(')?;
                let a = cur.id()?;
                cur.expect(',')?;
                let b = cur.id()?;
                cur.expect(')')?;
                arcs.push([a, b]);
            }
            "" => {
                let c = cur.peek().unwrap_or(' ');
                return Err(parse_error(line, column, format!("unexpected `{c}`")));
            }
            other => return Err(parse_error(line, column, format!("unknown predicate `{other}`"))),
        }
        cur.expect('.')?;
    }
    for ends in arcs {
        for (line, column, x) in &ends {
            if !g.contains(x) {
                return Err(parse_error(*line, *column, format!("attack mentions undeclared argument `{x}`")));
            }
        }
        let [(_, _, a), (_, _, b)] = ends;
        g.insert_arc(a, b)?;
    }
    Ok(g)
}

pub fn render_apx(g: &ArgumentGraph) -> String {
    let mut out = String::new();
    for a in g.nodes() {
        out.push_str(&format!("arg({a}).\n"));
    }
    for (a, b) in g.arcs() {
        out.push_str(&format!("att({a},{b}).\n"));
    }
    out
}
