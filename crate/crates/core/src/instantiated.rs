//! Measures over graphs instantiated with classical arguments.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::deductive::{Binding, ClassicalArgument, InstantiatedGraph};
use crate::error::{Error, Result};
use crate::graph::{ArgumentGraph, ArgumentId};
use crate::logic::{self, AtomSet, KnowledgeBase};
use crate::measure::{self, MeasureId};
use crate::par::{self, Config};
use crate::value::MeasureValue;

/// Dalal-based conflict between the supports over the atoms they mention.
///
/// Supports with no atoms at all cannot disagree, so their degree is zero.
pub fn degree_of_undercut(a1: &ClassicalArgument, a2: &ClassicalArgument) -> Result<MeasureValue> {
    degree_of_undercut_with(a1, a2, &Config::default())
}

pub fn degree_of_undercut_with(a1: &ClassicalArgument, a2: &ClassicalArgument, cfg: &Config) -> Result<MeasureValue> {
    let atoms = a1.support().union(a2.support()).atoms();
    if atoms.is_empty() {
        return Ok(MeasureValue::ZERO);
    }
    let pi = AtomSet::new(atoms)?;
    logic::conflict_with(a1.support().iter(), a2.support().iter(), &pi, cfg)
}

fn bound<'a>(binding: &'a Binding, a: &ArgumentId) -> Result<&'a ClassicalArgument> {
    binding.get(a).ok_or_else(|| Error::UnknownArgument(a.to_string()))
}

/// Sum of the degree of undercut over every arc of `g`, reading arguments from `binding`.
pub fn i_cu_on(g: &ArgumentGraph, binding: &Binding, cfg: &Config) -> Result<MeasureValue> {
    let arcs: Vec<_> = g.arcs().iter().collect();
    let degrees = par::map(cfg.exec, &arcs, |(a, b)| {
        degree_of_undercut_with(bound(binding, a)?, bound(binding, b)?, cfg)
    });
    degrees.into_iter().collect::<Result<Vec<_>>>().map(|v| v.into_iter().sum())
}

pub fn i_cu(ig: &InstantiatedGraph) -> Result<MeasureValue> {
    i_cu_on(ig.graph(), ig.binding(), &Config::default())
}

/// Built-in logic-based measures usable as the base of the attack and support measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseMeasure {
    #[serde(rename = "M")]
    M,
    #[serde(rename = "#")]
    Sharp,
}

impl BaseMeasure {
    pub fn eval(self, kb: &KnowledgeBase) -> Result<MeasureValue> {
        match self {
            BaseMeasure::M => logic::i_m(kb),
            BaseMeasure::Sharp => logic::i_sharp(kb),
        }
    }
}

impl fmt::Display for BaseMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseMeasure::M => "M",
            BaseMeasure::Sharp => "#",
        })
    }
}

impl FromStr for BaseMeasure {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "M" => Ok(BaseMeasure::M),
            "#" => Ok(BaseMeasure::Sharp),
            other => Err(format!("unknown base measure `{other}` (expected M or #)")),
        }
    }
}

/// Sum over arcs of `base` applied to the union of the two supports.
pub fn i_attack_by<F>(g: &ArgumentGraph, binding: &Binding, base: F) -> Result<MeasureValue>
where
    F: Fn(&KnowledgeBase) -> Result<MeasureValue>,
{
    let mut total = MeasureValue::ZERO;
    for (a, b) in g.arcs() {
        let joint = bound(binding, a)?.support().union(bound(binding, b)?.support());
        total = total + base(&joint)?;
    }
    Ok(total)
}

pub fn i_attack(ig: &InstantiatedGraph, base: BaseMeasure) -> Result<MeasureValue> {
    i_attack_by(ig.graph(), ig.binding(), |kb| base.eval(kb))
}

/// `base` applied to the union of the given supports.
pub fn i_support_of<'a, F>(supports: impl IntoIterator<Item = &'a KnowledgeBase>, base: F) -> Result<MeasureValue>
where
    F: Fn(&KnowledgeBase) -> Result<MeasureValue>,
{
    let union = supports
        .into_iter()
        .fold(KnowledgeBase::new(), |acc, s| acc.union(s));
    base(&union)
}

/// `base` applied to the union of the supports of every node of `g`.
pub fn i_support_by<F>(g: &ArgumentGraph, binding: &Binding, base: F) -> Result<MeasureValue>
where
    F: Fn(&KnowledgeBase) -> Result<MeasureValue>,
{
    let supports = g
        .nodes()
        .iter()
        .map(|a| bound(binding, a).map(ClassicalArgument::support))
        .collect::<Result<Vec<_>>>()?;
    i_support_of(supports, base)
}

pub fn i_support(ig: &InstantiatedGraph, base: BaseMeasure) -> Result<MeasureValue> {
    i_support_by(ig.graph(), ig.binding(), |kb| base.eval(kb))
}

/// Evaluates any registered measure on a graph whose nodes are bound to arguments.
pub fn measure_bound(g: &ArgumentGraph, binding: &Binding, m: MeasureId, cfg: &Config) -> Result<MeasureValue> {
    match m {
        MeasureId::Cu => i_cu_on(g, binding, cfg),
        MeasureId::CM => i_attack_by(g, binding, |kb| BaseMeasure::M.eval(kb)),
        MeasureId::CSharp => i_attack_by(g, binding, |kb| BaseMeasure::Sharp.eval(kb)),
        MeasureId::SM => i_support_by(g, binding, |kb| BaseMeasure::M.eval(kb)),
        MeasureId::SSharp => i_support_by(g, binding, |kb| BaseMeasure::Sharp.eval(kb)),
        abstract_measure => measure::measure_graph_with(g, abstract_measure, cfg),
    }
}

pub fn measure_instantiated(ig: &InstantiatedGraph, m: MeasureId) -> Result<MeasureValue> {
    measure_bound(ig.graph(), ig.binding(), m, &Config::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deductive::AttackKind;
    use crate::graph::id;

    fn arg(support: &[&str], claim: &str) -> ClassicalArgument {
        ClassicalArgument::parse(support.iter().copied(), claim).unwrap()
    }

    fn v(n: i64, d: i64) -> MeasureValue {
        MeasureValue::new(n, d)
    }

    #[test]
    fn degrees_against_three_premises() {
        let root = arg(&["alpha", "beta", "gamma"], "alpha & beta & gamma");
        let d = |s: &str| degree_of_undercut(&root, &arg(&[s], s)).unwrap();
        assert_eq!(d("!alpha & !beta & !gamma"), v(1, 1));
        assert_eq!(d("!alpha & !beta"), v(2, 3));
        assert_eq!(d("!alpha | !beta | !gamma"), v(1, 3));
        assert_eq!(d("!alpha"), v(1, 3));
        let a = arg(&["a"], "a");
        assert_eq!(degree_of_undercut(&a, &a).unwrap(), MeasureValue::ZERO);
    }

    #[test]
    fn degree_closed_forms() {
        for n in 2..=5 {
            let atoms: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
            let conj = atoms.join(" & ");
            let negconj = format!("!({conj})");
            let a1 = arg(&[&format!("!({})", atoms.join(" | "))], &negconj);
            let a2 = arg(&[&atoms.iter().map(|a| format!("!{a}")).collect::<Vec<_>>().join(" | ")], &negconj);
            let a3 = arg(&["!a1"], &negconj);
            let a4 = arg(&[&conj], "a1");
            assert_eq!(degree_of_undercut(&a4, &a1).unwrap(), v(n, n));
            assert_eq!(degree_of_undercut(&a4, &a2).unwrap(), v(1, n));
            assert_eq!(degree_of_undercut(&a4, &a3).unwrap(), v(1, n));
        }
    }

    fn undercut_fan() -> InstantiatedGraph {
        let binding: Binding = [
            (id("A1"), arg(&["alpha", "beta", "gamma"], "alpha & beta & gamma")),
            (id("A2"), arg(&["!alpha | !beta | !gamma"], "!(alpha & beta & gamma)")),
            (id("A3"), arg(&["!alpha & !beta"], "!(alpha & beta & gamma)")),
            (id("A4"), arg(&["!alpha & !beta & !gamma & delta"], "!(alpha & beta & gamma)")),
        ]
        .into();
        let arcs = ["A2", "A3", "A4"].map(|a| (id(a), id("A1"), AttackKind::CanonicalUndercut));
        InstantiatedGraph::new(binding, arcs).unwrap()
    }

    #[test]
    fn cumulative_undercut() {
        let ig = undercut_fan();
        assert_eq!(i_cu(&ig).unwrap(), v(7, 4));
        let silent = ig.induced([id("A1")].iter()).unwrap();
        assert!(i_cu(&silent).unwrap().is_zero());
    }

    #[test]
    fn attack_and_support_measures() {
        let binding: Binding = [(id("P"), arg(&["a"], "a")), (id("N"), arg(&["!a"], "!a"))].into();
        let ig = InstantiatedGraph::new(binding.clone(), [(id("P"), id("N"), AttackKind::Rebuttal)]).unwrap();
        assert_eq!(i_attack(&ig, BaseMeasure::M).unwrap(), v(1, 1));
        assert_eq!(i_attack(&ig, BaseMeasure::Sharp).unwrap(), v(1, 2));
        assert_eq!(i_support(&ig, BaseMeasure::M).unwrap(), v(1, 1));
        let silent = InstantiatedGraph::new(binding, []).unwrap();
        assert!(i_attack(&silent, BaseMeasure::M).unwrap().is_zero());
        assert_eq!(measure_instantiated(&ig, MeasureId::In).unwrap(), v(1, 1));
        assert_eq!(measure_instantiated(&ig, MeasureId::SSharp).unwrap(), v(1, 2));
    }
}
