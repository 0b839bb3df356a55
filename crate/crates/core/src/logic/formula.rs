use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Propositional formula. Equality is syntactic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Formula {
    Top,
    Bottom,
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Panics if `name` is not an identifier; use the parser for untrusted text.
    pub fn atom(name: &str) -> Formula {
        assert!(crate::graph::is_identifier(name), "invalid atom `{name}`");
        Formula::Atom(name.to_string())
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Left-nested conjunction; `Top` for no operands.
    pub fn conj<I: IntoIterator<Item = Formula>>(fs: I) -> Formula {
        fs.into_iter().reduce(Formula::and).unwrap_or(Formula::Top)
    }

    /// Left-nested disjunction; `Bottom` for no operands.
    pub fn disj<I: IntoIterator<Item = Formula>>(fs: I) -> Formula {
        fs.into_iter().reduce(Formula::or).unwrap_or(Formula::Bottom)
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Top | Formula::Bottom => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Truth value under `val`, which answers for every atom.
    pub fn eval(&self, val: &impl Fn(&str) -> bool) -> bool {
        match self {
            Formula::Top => true,
            Formula::Bottom => false,
            Formula::Atom(a) => val(a),
            Formula::Not(f) => !f.eval(val),
            Formula::And(a, b) => a.eval(val) && b.eval(val),
            Formula::Or(a, b) => a.eval(val) || b.eval(val),
            Formula::Implies(a, b) => !a.eval(val) || b.eval(val),
            Formula::Iff(a, b) => a.eval(val) == b.eval(val),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(_) => 5,
            Formula::Top | Formula::Bottom | Formula::Atom(_) => 6,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, parens: bool) -> fmt::Result {
        if parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        let (op, a, b, right_assoc) = match self {
            Formula::Top => return f.write_str("$true"),
            Formula::Bottom => return f.write_str("$false"),
            Formula::Atom(a) => return f.write_str(a),
            Formula::Not(x) => {
                f.write_str("!")?;
                return x.write_child(f, x.precedence() < p);
            }
            Formula::And(a, b) => ("&", a, b, false),
            Formula::Or(a, b) => ("|", a, b, false),
            Formula::Implies(a, b) => ("->", a, b, true),
            Formula::Iff(a, b) => ("<->", a, b, false),
        };
        let (left_parens, right_parens) = if right_assoc {
            (a.precedence() <= p, b.precedence() < p)
        } else {
            (a.precedence() < p, b.precedence() <= p)
        };
        a.write_child(f, left_parens)?;
        write!(f, " {op} ")?;
        b.write_child(f, right_parens)
    }
}

impl FromStr for Formula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        super::parse::parse_formula(s)
    }
}

impl TryFrom<String> for Formula {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<Formula> for String {
    fn from(f: Formula) -> String {
        f.to_string()
    }
}

/// Finite set of formulas; syntactic duplicates collapse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KnowledgeBase(BTreeSet<Formula>);

impl KnowledgeBase {
    pub fn new() -> Self {
        KnowledgeBase::default()
    }

    pub fn formulas(&self) -> &BTreeSet<Formula> {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Formula> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.0.contains(f)
    }

    pub fn insert(&mut self, f: Formula) -> bool {
        self.0.insert(f)
    }

    pub fn union(&self, other: &KnowledgeBase) -> KnowledgeBase {
        KnowledgeBase(self.0.union(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &KnowledgeBase) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for f in &self.0 {
            f.collect_atoms(&mut out);
        }
        out
    }

    /// Conjunction of the members in their canonical order.
    pub fn conjunction(&self) -> Formula {
        Formula::conj(self.0.iter().cloned())
    }

    /// Parses each string as a formula.
    pub fn parse<'a>(texts: impl IntoIterator<Item = &'a str>) -> Result<Self, Error> {
        texts.into_iter().map(str::parse).collect()
    }
}

impl FromIterator<Formula> for KnowledgeBase {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        KnowledgeBase(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a KnowledgeBase {
    type Item = &'a Formula;
    type IntoIter = std::collections::btree_set::Iter<'a, Formula>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for KnowledgeBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
