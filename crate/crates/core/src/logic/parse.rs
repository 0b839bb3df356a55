//! Recursive-descent parser for the formula text syntax.
//!
//! Precedence from tightest: `!`, `&`, `|`, `->`, `<->`. `&`, `|` and `<->`
//! associate to the left, `->` to the right. The Unicode connectives
//! `¬ ∧ ∨ → ↔ ⊤ ⊥` are accepted as input aliases.

use crate::error::{Error, Result};

use super::formula::Formula;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Top,
    Bottom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Top => "`$true`".into(),
            Tok::Bottom => "`$false`".into(),
            Tok::Not => "`!`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn err(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn lex(text: &str, origin: Pos) -> Result<(Vec<(Tok, Pos)>, Pos)> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut pos = origin;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let here = pos;
        let rest: String = chars[i..chars.len().min(i + 6)].iter().collect();
        let (tok, width) = if c == '\n' {
            pos.line += 1;
            pos.column = 1;
            i += 1;
            continue;
        } else if c.is_whitespace() {
            pos.column += 1;
            i += 1;
            continue;
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let ident: String = chars[i..]
                .iter()
                .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                .collect();
            let w = ident.chars().count();
            (Tok::Ident(ident), w)
        } else if rest.starts_with("$true") {
            (Tok::Top, 5)
        } else if rest.starts_with("$false") {
            (Tok::Bottom, 6)
        } else if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else if rest.starts_with("->") {
            (Tok::Implies, 2)
        } else {
            let tok = match c {
                '!' | '¬' | '~' => Tok::Not,
                '&' | '∧' => Tok::And,
                '|' | '∨' => Tok::Or,
                '→' => Tok::Implies,
                '↔' => Tok::Iff,
                '⊤' => Tok::Top,
                '⊥' => Tok::Bottom,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => return Err(err(here, format!("unexpected character `{other}`"))),
            };
            (tok, 1)
        };
        out.push((tok, here));
        i += width;
        pos.column += width;
    }
    Ok((out, pos))
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.implies()?;
        while self.eat(&Tok::Iff) {
            lhs = Formula::iff(lhs, self.implies()?);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if self.eat(&Tok::Implies) {
            Ok(Formula::implies(lhs, self.implies()?))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(err(pos, "unexpected end of formula"));
        };
        self.at += 1;
        match tok {
            Tok::Not => Ok(Formula::not(self.unary()?)),
            Tok::Ident(s) => Ok(Formula::Atom(s)),
            Tok::Top => Ok(Formula::Top),
            Tok::Bottom => Ok(Formula::Bottom),
            Tok::LParen => {
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(err(self.pos(), "expected `)`"));
                }
                Ok(inner)
            }
            other => Err(err(pos, format!("unexpected {}", other.describe()))),
        }
    }
}

/// Parses `text`, reporting positions relative to `line`/`column`.
pub(crate) fn parse_formula_at(text: &str, line: usize, column: usize) -> Result<Formula> {
    let (toks, end) = lex(text, Pos { line, column })?;
    let mut p = Parser { toks, at: 0, end };
    let f = p.iff()?;
    if let Some(t) = p.peek() {
        return Err(err(p.pos(), format!("unexpected {} after formula", t.describe())));
    }
    Ok(f)
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    parse_formula_at(text, 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn a(s: &str) -> Formula {
        Formula::atom(s)
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(p("a & b | c"), Formula::or(Formula::and(a("a"), a("b")), a("c")));
        assert_eq!(p("a -> b -> c"), Formula::implies(a("a"), Formula::implies(a("b"), a("c"))));
        assert_eq!(p("a & b & c"), Formula::and(Formula::and(a("a"), a("b")), a("c")));
        assert_eq!(p("!a & b"), Formula::and(Formula::not(a("a")), a("b")));
        assert_eq!(p("a <-> b <-> c"), Formula::iff(Formula::iff(a("a"), a("b")), a("c")));
        assert_eq!(p("a | b -> c <-> d"), Formula::iff(Formula::implies(Formula::or(a("a"), a("b")), a("c")), a("d")));
        assert_eq!(p("!(a & b)"), Formula::not(Formula::and(a("a"), a("b"))));
    }

    #[test]
    fn rendering_round_trips() {
        for s in [
            "a & b | c",
            "a -> b -> c",
            "(a -> b) -> c",
            "a & (b & c)",
            "!(a & b)",
            "!!a",
            "(a <-> b) -> c",
            "a <-> (b <-> c)",
            "a <-> b <-> c",
            "$true & !$false",
            "lowCostFly & luxFly -> goodFly",
        ] {
            let f = p(s);
            assert_eq!(f.to_string(), s);
            assert_eq!(p(&f.to_string()), f);
        }
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(p("¬a ∨ ¬b"), p("!a | !b"));
        assert_eq!(p("a → b ↔ ⊤"), p("a -> b <-> $true"));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_formula("a & ") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("{other:?}"),
        }
        match parse_formula("(a | b") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 7),
            other => panic!("{other:?}"),
        }
        match parse_formula_at("a ? b", 3, 4) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 6)),
            other => panic!("{other:?}"),
        }
        assert!(parse_formula("a b").is_err());
        assert!(parse_formula("").is_err());
    }
}
