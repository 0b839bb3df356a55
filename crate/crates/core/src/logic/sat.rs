//! Satisfiability by Tseitin encoding and DPLL with unit propagation.

use std::collections::HashMap;

use super::formula::Formula;

/// Literal: variable index + 1, negated when negative.
type Lit = i32;

#[derive(Default)]
struct Encoder {
    atoms: HashMap<String, Lit>,
    vars: i32,
    top: Option<Lit>,
    clauses: Vec<Vec<Lit>>,
}

impl Encoder {
    fn fresh(&mut self) -> Lit {
        self.vars += 1;
        self.vars
    }

    fn top(&mut self) -> Lit {
        if let Some(t) = self.top {
            return t;
        }
        let t = self.fresh();
        self.clauses.push(vec![t]);
        self.top = Some(t);
        t
    }

    fn encode(&mut self, f: &Formula) -> Lit {
        match f {
            Formula::Top => self.top(),
            Formula::Bottom => -self.top(),
            Formula::Atom(a) => {
                if let Some(&v) = self.atoms.get(a) {
                    return v;
                }
                let v = self.fresh();
                self.atoms.insert(a.clone(), v);
                v
            }
            Formula::Not(x) => -self.encode(x),
            Formula::And(a, b) => {
                let (a, b) = (self.encode(a), self.encode(b));
                let v = self.fresh();
                self.clauses.extend([vec![-v, a], vec![-v, b], vec![v, -a, -b]]);
                v
            }
            Formula::Or(a, b) => {
                let (a, b) = (self.encode(a), self.encode(b));
                self.or_gate(a, b)
            }
            Formula::Implies(a, b) => {
                let (a, b) = (self.encode(a), self.encode(b));
                self.or_gate(-a, b)
            }
            Formula::Iff(a, b) => {
                let (a, b) = (self.encode(a), self.encode(b));
                let v = self.fresh();
                self.clauses.extend([
                    vec![-v, -a, b],
                    vec![-v, a, -b],
                    vec![v, a, b],
                    vec![v, -a, -b],
                ]);
                v
            }
        }
    }

    fn or_gate(&mut self, a: Lit, b: Lit) -> Lit {
        let v = self.fresh();
        self.clauses.extend([vec![v, -a], vec![v, -b], vec![-v, a, b]]);
        v
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Val {
    Unset,
    True,
    False,
}

struct Solver {
    clauses: Vec<Vec<Lit>>,
    vals: Vec<Val>,
}

impl Solver {
    fn value(&self, l: Lit) -> Val {
        match self.vals[l.unsigned_abs() as usize] {
            Val::Unset => Val::Unset,
            v if (v == Val::True) == (l > 0) => Val::True,
            _ => Val::False,
        }
    }

    fn assign(&mut self, l: Lit, trail: &mut Vec<usize>) {
        let v = l.unsigned_abs() as usize;
        self.vals[v] = if l > 0 { Val::True } else { Val::False };
        trail.push(v);
    }

    /// Returns false on a conflict.
    fn propagate(&mut self, trail: &mut Vec<usize>) -> bool {
        loop {
            let mut changed = false;
            for ci in 0..self.clauses.len() {
                let mut unit = None;
                let mut open = 0;
                let mut sat = false;
                for &l in &self.clauses[ci] {
                    match self.value(l) {
                        Val::True => {
                            sat = true;
                            break;
                        }
                        Val::Unset => {
                            open += 1;
                            unit = Some(l);
                        }
                        Val::False => {}
                    }
                }
                if sat {
                    continue;
                }
                match open {
                    0 => return false,
                    1 => {
                        self.assign(unit.expect("one open literal"), trail);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn branch_literal(&self) -> Option<Lit> {
        self.clauses.iter().find_map(|c| {
            if c.iter().any(|&l| self.value(l) == Val::True) {
                None
            } else {
                c.iter().copied().find(|&l| self.value(l) == Val::Unset)
            }
        })
    }

    fn solve(&mut self) -> bool {
        let mut trail = Vec::new();
        if !self.propagate(&mut trail) {
            self.undo(trail);
            return false;
        }
        let Some(l) = self.branch_literal() else {
            return true;
        };
        for choice in [l, -l] {
            let mut inner = Vec::new();
            self.assign(choice, &mut inner);
            if self.solve() {
                return true;
            }
            self.undo(inner);
        }
        self.undo(trail);
        false
    }

    fn undo(&mut self, trail: Vec<usize>) {
        for v in trail {
            self.vals[v] = Val::Unset;
        }
    }
}

/// Whether the conjunction of `fs` has a model.
pub(crate) fn satisfiable<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> bool {
    let mut enc = Encoder::default();
    for f in fs {
        let l = enc.encode(f);
        enc.clauses.push(vec![l]);
    }
    let mut solver = Solver {
        vals: vec![Val::Unset; enc.vars as usize + 1],
        clauses: enc.clauses,
    };
    solver.solve()
}
