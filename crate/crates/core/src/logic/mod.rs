//! Propositional logic: formulas, satisfiability, restricted models and minimal
//! inconsistent subsets.

mod formula;
mod models;
mod mus;
mod parse;
mod sat;

use std::collections::BTreeSet;

pub use formula::{Formula, KnowledgeBase};
pub use models::{conflict, conflict_with, dalal, restricted_models, restricted_models_with, AtomSet, World};
pub use mus::{i_m, i_sharp, min_inconsistent_subsets, min_inconsistent_subsets_with};
pub use parse::parse_formula;
pub(crate) use parse::parse_formula_at;

use crate::error::{Error, Result};
use crate::par::Limits;

pub(crate) fn check_atoms<'a>(fs: impl IntoIterator<Item = &'a Formula>, limits: &Limits) -> Result<()> {
    let mut atoms = BTreeSet::new();
    for f in fs {
        f.collect_atoms(&mut atoms);
    }
    if atoms.len() > limits.max_atoms {
        return Err(Error::ResourceLimit {
            what: "satisfiability check",
            size: atoms.len(),
            cap: limits.max_atoms,
        });
    }
    Ok(())
}

/// Whether the conjunction of `fs` has a model.
pub fn is_satisfiable<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> Result<bool> {
    let fs: Vec<&Formula> = fs.into_iter().collect();
    check_atoms(fs.iter().copied(), &Limits::default())?;
    Ok(sat::satisfiable(fs))
}

pub fn is_consistent(kb: &KnowledgeBase) -> Result<bool> {
    is_satisfiable(kb.iter())
}

/// Every model of `premises` satisfies `f`.
pub fn entails<'a>(premises: impl IntoIterator<Item = &'a Formula>, f: &Formula) -> Result<bool> {
    let negated = Formula::not(f.clone());
    let mut all: Vec<&Formula> = premises.into_iter().collect();
    all.push(&negated);
    Ok(!is_satisfiable(all)?)
}

pub fn equivalent(f1: &Formula, f2: &Formula) -> Result<bool> {
    Ok(!is_satisfiable([&Formula::not(Formula::iff(f1.clone(), f2.clone()))])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::MeasureValue;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    fn kb(xs: &[&str]) -> KnowledgeBase {
        KnowledgeBase::parse(xs.iter().copied()).unwrap()
    }

    fn pi(xs: &[&str]) -> AtomSet {
        AtomSet::new(xs.iter().copied()).unwrap()
    }

    #[test]
    fn entailment() {
        assert!(entails(kb(&["a", "a -> b"]).iter(), &f("b")).unwrap());
        assert!(!entails(kb(&["a"]).iter(), &f("b")).unwrap());
        assert!(entails(kb(&["multipleOfTen77 -> even77", "!even77"]).iter(), &f("!multipleOfTen77")).unwrap());
        assert!(entails(kb(&["a", "!a"]).iter(), &f("zzz")).unwrap());
        assert!(entails(kb(&[]).iter(), &f("a | !a")).unwrap());
    }

    #[test]
    fn consistency_and_equivalence() {
        assert!(is_consistent(&kb(&[])).unwrap());
        assert!(!is_consistent(&kb(&["a", "!a"])).unwrap());
        assert!(!is_consistent(&kb(&["alpha", "!alpha | !beta", "beta", "!gamma", "!gamma -> !alpha"])).unwrap());
        assert!(equivalent(&f("!a | !b"), &f("!(a & b)")).unwrap());
        assert!(!equivalent(&f("!a"), &f("!(a & b)")).unwrap());
        assert!(equivalent(&f("!(b | c)"), &f("!b & !c")).unwrap());
        assert!(equivalent(&f("$true"), &f("a -> a")).unwrap());
        assert!(!is_satisfiable([&f("$false")]).unwrap());
    }

    #[test]
    fn dalal_distance() {
        let w1 = World::new(["alpha", "gamma", "delta"]);
        let w2 = World::new(["beta", "gamma"]);
        assert_eq!(dalal(&w1, &w2), 3);
        assert_eq!(dalal(&w1, &w1), 0);
        assert_eq!(dalal(&World::default(), &World::new(["a", "b", "c"])), 3);
    }

    #[test]
    fn closed_world_models() {
        let phi = kb(&["alpha & delta", "!phi", "gamma | delta", "!psi", "beta | gamma"]);
        let got = restricted_models(phi.iter(), &pi(&["alpha", "beta", "gamma", "delta", "phi"])).unwrap();
        let want: BTreeSet<World> = [
            World::new(["alpha", "beta", "gamma", "delta"]),
            World::new(["alpha", "beta", "delta"]),
            World::new(["alpha", "gamma", "delta"]),
        ]
        .into();
        assert_eq!(got, want);
        assert_eq!(restricted_models([], &pi(&["a", "b", "c"])).unwrap().len(), 8);
        assert!(restricted_models([&f("$false")], &pi(&["a"])).unwrap().is_empty());
        assert!(matches!(AtomSet::new(Vec::<String>::new()), Err(Error::EmptyAtomSet)));
    }

    #[test]
    fn degree_of_conflict() {
        let p = pi(&["alpha", "beta", "gamma", "delta"]);
        let all = f("alpha & beta & gamma & delta");
        let c = |s: &str| conflict([&all], [&f(s)], &p).unwrap();
        assert_eq!(c("!alpha | !beta | !gamma"), MeasureValue::new(1, 4));
        assert_eq!(c("!(alpha | beta)"), MeasureValue::new(2, 4));
        assert_eq!(c("!alpha & !beta & !gamma"), MeasureValue::new(3, 4));
        assert_eq!(conflict([&all], [&all], &p).unwrap(), MeasureValue::ZERO);
        assert!(matches!(conflict([&f("$false")], [&all], &p), Err(Error::EmptyModels(_))));
    }

    #[test]
    fn minimal_inconsistent_subsets() {
        let k = kb(&["alpha", "!alpha | !beta", "beta", "!gamma", "!gamma -> !alpha"]);
        let got = min_inconsistent_subsets(&k).unwrap();
        let want: BTreeSet<KnowledgeBase> = [
            kb(&["alpha", "!alpha | !beta", "beta"]),
            kb(&["alpha", "!gamma", "!gamma -> !alpha"]),
        ]
        .into();
        assert_eq!(got, want);
        assert_eq!(i_m(&k).unwrap(), MeasureValue::integer(2));
        assert_eq!(i_sharp(&k).unwrap(), MeasureValue::new(2, 3));
        assert!(min_inconsistent_subsets(&kb(&["a", "b"])).unwrap().is_empty());
        let two = min_inconsistent_subsets(&kb(&["a", "!a", "b", "!b"])).unwrap();
        assert_eq!(two, [kb(&["a", "!a"]), kb(&["b", "!b"])].into());
        assert_eq!(i_m(&kb(&["a", "!a"])).unwrap(), MeasureValue::ONE);
        assert_eq!(i_sharp(&kb(&["a", "!a"])).unwrap(), MeasureValue::new(1, 2));
        assert_eq!(min_inconsistent_subsets(&kb(&["$false", "a"])).unwrap(), [kb(&["$false"])].into());
    }
}
