//! Classical deductive arguments, the attack relations between them and
//! argument graphs instantiated with them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{Arc, ArgumentGraph, ArgumentId};
use crate::logic::{self, Formula, KnowledgeBase};
use crate::par::{self, Config};

/// A support/claim pair whose support is consistent, entails the claim, and is
/// minimal for doing so.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClassicalArgument {
    support: KnowledgeBase,
    claim: Formula,
}

fn subset_masks_by_size(n: usize) -> Vec<Vec<u64>> {
    let mut levels = vec![Vec::new(); n + 1];
    for m in 0u64..1 << n {
        levels[m.count_ones() as usize].push(m);
    }
    levels
}

fn pick<'a, 'b>(fs: &'b [&'a Formula], m: u64) -> impl Iterator<Item = &'a Formula> + Clone + 'b {
    (0..fs.len()).filter(move |i| m >> i & 1 == 1).map(move |i| fs[i])
}

fn check_formula_cap(n: usize, cfg: &Config, what: &'static str) -> Result<()> {
    if n > cfg.limits.max_formulas {
        return Err(Error::ResourceLimit {
            what,
            size: n,
            cap: cfg.limits.max_formulas,
        });
    }
    Ok(())
}

impl ClassicalArgument {
    /// Validates consistency, then entailment, then minimality.
    pub fn new(support: KnowledgeBase, claim: Formula) -> Result<Self> {
        check_formula_cap(support.len(), &Config::default(), "argument support")?;
        if !logic::is_consistent(&support)? {
            return Err(Error::InconsistentSupport);
        }
        if !logic::entails(support.iter(), &claim)? {
            return Err(Error::NotEntailed);
        }
        let fs: Vec<&Formula> = support.iter().collect();
        let levels = subset_masks_by_size(fs.len());
        for level in &levels[..fs.len()] {
            for &m in level {
                if logic::entails(pick(&fs, m), &claim)? {
                    let smaller: KnowledgeBase = pick(&fs, m).cloned().collect();
                    return Err(Error::NonMinimalSupport(smaller.to_string()));
                }
            }
        }
        Ok(ClassicalArgument { support, claim })
    }

    /// Parses support and claim from text before validating.
    pub fn parse<'a>(support: impl IntoIterator<Item = &'a str>, claim: &str) -> Result<Self> {
        ClassicalArgument::new(KnowledgeBase::parse(support)?, claim.parse()?)
    }

    pub fn support(&self) -> &KnowledgeBase {
        &self.support
    }

    pub fn claim(&self) -> &Formula {
        &self.claim
    }

    /// Deterministic node name derived from the support and claim.
    pub fn canonical_id(&self) -> ArgumentId {
        let mut h = Sha256::new();
        for f in self.support.iter() {
            h.update(f.to_string().as_bytes());
            h.update(b"\n");
        }
        h.update(b"=>");
        h.update(self.claim.to_string().as_bytes());
        let digest = h.finalize();
        let hex: String = digest.iter().take(5).map(|b| format!("{b:02x}")).collect();
        ArgumentId::new(format!("arg_{hex}")).expect("hex digits form an identifier")
    }
}

impl fmt::Display for ClassicalArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.support, self.claim)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum AttackKind {
    Defeater,
    DirectDefeater,
    Undercut,
    DirectUndercut,
    CanonicalUndercut,
    Rebuttal,
    DefeatingRebuttal,
}

impl AttackKind {
    pub const ALL: [AttackKind; 7] = [
        AttackKind::Defeater,
        AttackKind::DirectDefeater,
        AttackKind::Undercut,
        AttackKind::DirectUndercut,
        AttackKind::CanonicalUndercut,
        AttackKind::Rebuttal,
        AttackKind::DefeatingRebuttal,
    ];

    /// Pairs `(narrower, wider)` where every attack of the first kind is one of the second.
    pub const CONTAINMENTS: [(AttackKind, AttackKind); 7] = [
        (AttackKind::CanonicalUndercut, AttackKind::Undercut),
        (AttackKind::DirectUndercut, AttackKind::Undercut),
        (AttackKind::DirectUndercut, AttackKind::DirectDefeater),
        (AttackKind::Undercut, AttackKind::Defeater),
        (AttackKind::DirectDefeater, AttackKind::Defeater),
        (AttackKind::Rebuttal, AttackKind::DefeatingRebuttal),
        (AttackKind::DefeatingRebuttal, AttackKind::Defeater),
    ];

    pub fn code(self) -> &'static str {
        match self {
            AttackKind::Defeater => "defeater",
            AttackKind::DirectDefeater => "direct-defeater",
            AttackKind::Undercut => "undercut",
            AttackKind::DirectUndercut => "direct-undercut",
            AttackKind::CanonicalUndercut => "canonical-undercut",
            AttackKind::Rebuttal => "rebuttal",
            AttackKind::DefeatingRebuttal => "defeating-rebuttal",
        }
    }

    pub fn is_undercut(self) -> bool {
        matches!(
            self,
            AttackKind::Undercut | AttackKind::DirectUndercut | AttackKind::CanonicalUndercut
        )
    }
}

impl fmt::Display for AttackKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for AttackKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        AttackKind::ALL
            .into_iter()
            .find(|k| k.code() == s)
            .ok_or_else(|| format!("unknown attack kind `{s}`"))
    }
}

impl TryFrom<String> for AttackKind {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<AttackKind> for String {
    fn from(k: AttackKind) -> String {
        k.code().to_string()
    }
}

fn neg_conj<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> Formula {
    Formula::not(Formula::conj(fs.into_iter().cloned()))
}

/// Whether `a` stands in relation `kind` to `b`.
pub fn has_attack(a: &ClassicalArgument, b: &ClassicalArgument, kind: AttackKind) -> Result<bool> {
    let claim = a.claim();
    let support: Vec<&Formula> = b.support().iter().collect();
    check_formula_cap(support.len(), &Config::default(), "undercut search")?;
    match kind {
        AttackKind::Defeater => logic::entails([claim], &neg_conj(support)),
        AttackKind::DirectDefeater => {
            for phi in support {
                if logic::entails([claim], &Formula::not(phi.clone()))? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        AttackKind::Undercut => {
            // smallest subsets first, stopping at the first match
            for level in subset_masks_by_size(support.len()).iter().skip(1) {
                for &m in level {
                    if logic::equivalent(claim, &neg_conj(pick(&support, m)))? {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
        AttackKind::DirectUndercut => {
            for phi in support {
                if logic::equivalent(claim, &Formula::not(phi.clone()))? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        AttackKind::CanonicalUndercut => logic::equivalent(claim, &neg_conj(support)),
        AttackKind::Rebuttal => logic::equivalent(claim, &Formula::not(b.claim().clone())),
        AttackKind::DefeatingRebuttal => logic::entails([claim], &Formula::not(b.claim().clone())),
    }
}

/// Every attack kind that `a` stands in to `b`.
pub fn classify_attack(a: &ClassicalArgument, b: &ClassicalArgument) -> Result<BTreeSet<AttackKind>> {
    let mut out = BTreeSet::new();
    for kind in AttackKind::ALL {
        if has_attack(a, b, kind)? {
            out.insert(kind);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentViolation {
    pub attacker: ClassicalArgument,
    pub target: ClassicalArgument,
    pub narrower: AttackKind,
    pub wider: AttackKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentReport {
    pub pairs_checked: usize,
    pub violations: Vec<ContainmentViolation>,
}

/// Checks every containment between attack kinds on the given pairs.
pub fn check_containment(pairs: &[(ClassicalArgument, ClassicalArgument)]) -> Result<ContainmentReport> {
    let mut violations = Vec::new();
    for (a, b) in pairs {
        let kinds = classify_attack(a, b)?;
        for (narrower, wider) in AttackKind::CONTAINMENTS {
            if kinds.contains(&narrower) && !kinds.contains(&wider) {
                violations.push(ContainmentViolation {
                    attacker: a.clone(),
                    target: b.clone(),
                    narrower,
                    wider,
                });
            }
        }
    }
    Ok(ContainmentReport {
        pairs_checked: pairs.len(),
        violations,
    })
}

/// Arguments whose support is drawn from `kb`.
///
/// With a claim filter, every minimal consistent support entailing the claim
/// yields an argument carrying that claim. Without one, every non-empty support
/// yields `<Φ, ∧Φ>` when that pair is a valid argument.
pub fn enumerate_arguments(kb: &KnowledgeBase, claim_filter: Option<&Formula>) -> Result<BTreeSet<ClassicalArgument>> {
    enumerate_arguments_with(kb, claim_filter, &Config::default())
}

pub fn enumerate_arguments_with(
    kb: &KnowledgeBase,
    claim_filter: Option<&Formula>,
    cfg: &Config,
) -> Result<BTreeSet<ClassicalArgument>> {
    check_formula_cap(kb.len(), cfg, "argument enumeration")?;
    logic::check_atoms(kb.iter().chain(claim_filter), &cfg.limits)?;
    let fs: Vec<&Formula> = kb.iter().collect();
    let levels = subset_masks_by_size(fs.len());
    let mut out = BTreeSet::new();
    match claim_filter {
        Some(claim) => {
            let mut found: Vec<u64> = Vec::new();
            for level in &levels {
                let fresh: Vec<u64> = level
                    .iter()
                    .copied()
                    .filter(|&m| !found.iter().any(|&f| f & m == f))
                    .collect();
                let hits = par::filter_map(cfg.exec, &fresh, |&m| {
                    let sup = pick(&fs, m);
                    let ok = logic::entails(sup.clone(), claim).ok()? && logic::is_satisfiable(sup).ok()?;
                    ok.then_some(m)
                });
                found.extend(hits);
            }
            for m in found {
                out.insert(ClassicalArgument {
                    support: pick(&fs, m).cloned().collect(),
                    claim: claim.clone(),
                });
            }
        }
        None => {
            let all: Vec<u64> = levels.into_iter().skip(1).flatten().collect();
            let args = par::filter_map(cfg.exec, &all, |&m| {
                let support: KnowledgeBase = pick(&fs, m).cloned().collect();
                let claim = support.conjunction();
                ClassicalArgument::new(support, claim).ok()
            });
            out.extend(args);
        }
    }
    Ok(out)
}

pub type Binding = BTreeMap<ArgumentId, ClassicalArgument>;

/// An argument graph whose nodes are classical arguments and whose arcs carry a
/// verified attack kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstantiatedGraph {
    graph: ArgumentGraph,
    binding: Binding,
    attack_kind: BTreeMap<Arc, AttackKind>,
}

impl InstantiatedGraph {
    /// Builds the graph, rejecting duplicate arguments and arcs whose declared kind does not hold.
    pub fn new(binding: Binding, arcs: impl IntoIterator<Item = (ArgumentId, ArgumentId, AttackKind)>) -> Result<Self> {
        let mut seen: BTreeMap<&ClassicalArgument, &ArgumentId> = BTreeMap::new();
        for (name, arg) in &binding {
            if let Some(prev) = seen.insert(arg, name) {
                return Err(Error::DuplicateArgument(prev.to_string(), name.to_string()));
            }
        }
        let mut graph = ArgumentGraph::new(binding.keys().cloned(), [])?;
        let mut attack_kind = BTreeMap::new();
        for (a, b, kind) in arcs {
            let (Some(src), Some(dst)) = (binding.get(&a), binding.get(&b)) else {
                let missing = if binding.contains_key(&a) { b } else { a };
                return Err(Error::UnknownArgument(missing.to_string()));
            };
            if !has_attack(src, dst, kind)? {
                return Err(Error::AttackVerificationFailed {
                    attacker: a.to_string(),
                    target: b.to_string(),
                    kind,
                });
            }
            graph.insert_arc(a.clone(), b.clone())?;
            attack_kind.insert((a, b), kind);
        }
        Ok(InstantiatedGraph {
            graph,
            binding,
            attack_kind,
        })
    }

    /// Names each argument canonically and adds an arc wherever `kind` holds.
    pub fn derive(args: impl IntoIterator<Item = ClassicalArgument>, kind: AttackKind) -> Result<Self> {
        let binding: Binding = args.into_iter().map(|a| (a.canonical_id(), a)).collect();
        let mut arcs = Vec::new();
        for (x, ax) in &binding {
            for (y, ay) in &binding {
                if has_attack(ax, ay, kind)? {
                    arcs.push((x.clone(), y.clone(), kind));
                }
            }
        }
        InstantiatedGraph::new(binding, arcs)
    }

    pub fn graph(&self) -> &ArgumentGraph {
        &self.graph
    }

    pub fn binding(&self) -> &Binding {
        &self.binding
    }

    pub fn argument(&self, a: &ArgumentId) -> Option<&ClassicalArgument> {
        self.binding.get(a)
    }

    pub fn kind(&self, a: &ArgumentId, b: &ArgumentId) -> Option<AttackKind> {
        self.attack_kind.get(&(a.clone(), b.clone())).copied()
    }

    pub fn attacks(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId, AttackKind)> {
        self.attack_kind.iter().map(|((a, b), k)| (a, b, *k))
    }

    /// Union of every argument's support.
    pub fn support_union(&self) -> KnowledgeBase {
        self.binding
            .values()
            .fold(KnowledgeBase::new(), |acc, a| acc.union(a.support()))
    }

    /// The instantiated graph restricted to `keep`.
    pub fn induced<'a>(&self, keep: impl IntoIterator<Item = &'a ArgumentId>) -> Result<Self> {
        let graph = self.graph.induced(keep)?;
        let binding = self
            .binding
            .iter()
            .filter(|(k, _)| graph.contains(k))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let attack_kind = self
            .attack_kind
            .iter()
            .filter(|(arc, _)| graph.arcs().contains(*arc))
            .map(|(arc, k)| (arc.clone(), *k))
            .collect();
        Ok(InstantiatedGraph {
            graph,
            binding,
            attack_kind,
        })
    }
}

/// Joint support inconsistency implies at least one attack.
pub fn is_reflective(ig: &InstantiatedGraph) -> Result<bool> {
    Ok(ig.graph().arc_count() > 0 || logic::is_consistent(&ig.support_union())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::id;

    fn arg(support: &[&str], claim: &str) -> ClassicalArgument {
        ClassicalArgument::parse(support.iter().copied(), claim).unwrap()
    }

    fn kinds(a: &ClassicalArgument, b: &ClassicalArgument) -> BTreeSet<AttackKind> {
        classify_attack(a, b).unwrap()
    }

    #[test]
    fn validation_order() {
        assert!(ClassicalArgument::parse(["a", "a -> b"], "b").is_ok());
        assert_eq!(ClassicalArgument::parse(["a", "!a"], "b"), Err(Error::InconsistentSupport));
        assert_eq!(ClassicalArgument::parse(["a"], "b"), Err(Error::NotEntailed));
        match ClassicalArgument::parse(["a", "b"], "a") {
            Err(Error::NonMinimalSupport(s)) => assert_eq!(s, "{a}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn attack_kinds_on_mixed_pairs() {
        let target = arg(&["a", "b", "c"], "a & b & c");
        assert!(kinds(&arg(&["!a & !b"], "!(a & b)"), &target).contains(&AttackKind::Undercut));
        assert!(kinds(&arg(&["!a & !b"], "!a"), &target).contains(&AttackKind::DirectUndercut));
        assert!(kinds(&arg(&["!a & !b"], "!(a & b & c)"), &target).contains(&AttackKind::CanonicalUndercut));
        let defeater = arg(&["a | b", "c"], "(a | b) & c");
        assert!(kinds(&defeater, &arg(&["!a", "!b"], "!a & !b")).contains(&AttackKind::Defeater));
        assert!(kinds(&defeater, &arg(&["!a & !b"], "!a & !b")).contains(&AttackKind::DirectDefeater));
        let neg = arg(&["!a & !b", "!c"], "!(b | c)");
        assert!(kinds(&arg(&["a", "a -> b"], "b | c"), &neg).contains(&AttackKind::Rebuttal));
        assert!(kinds(&arg(&["a", "a -> b"], "b"), &neg).contains(&AttackKind::DefeatingRebuttal));
    }

    #[test]
    fn undercut_that_is_neither_direct_nor_canonical() {
        let a1 = arg(&["lowCostFly", "luxFly", "lowCostFly & luxFly -> goodFly"], "goodFly");
        let a2 = arg(&["!lowCostFly | !luxFly"], "!lowCostFly | !luxFly");
        let k = kinds(&a2, &a1);
        assert!(k.contains(&AttackKind::Undercut));
        assert!(!k.contains(&AttackKind::DirectUndercut));
        assert!(!k.contains(&AttackKind::CanonicalUndercut));
    }

    #[test]
    fn rebuttal_without_undercut() {
        let a1 = arg(&["goodDish"], "goodDish");
        let a2 = arg(&["containsGarlic", "containsGarlic -> !goodDish"], "!goodDish");
        let k = kinds(&a1, &a2);
        assert!(k.contains(&AttackKind::Rebuttal));
        assert!(!k.contains(&AttackKind::Undercut));
    }

    #[test]
    fn defeater_without_rebuttal() {
        let kb = KnowledgeBase::parse(["!containsGarlic & goodDish", "!goodDish"]).unwrap();
        let target = arg(&["!containsGarlic & goodDish"], "!containsGarlic");
        let all = enumerate_arguments(&kb, None).unwrap();
        let attacks: Vec<BTreeSet<AttackKind>> = all.iter().map(|a| kinds(a, &target)).collect();
        assert!(attacks.iter().any(|k| k.contains(&AttackKind::Defeater)));
        assert!(attacks.iter().all(|k| !k.contains(&AttackKind::Rebuttal)));
    }

    #[test]
    fn enumeration_with_filter() {
        let kb = KnowledgeBase::parse(["a", "!a"]).unwrap();
        let neg: Formula = "!a".parse().unwrap();
        assert_eq!(enumerate_arguments(&kb, Some(&neg)).unwrap(), [arg(&["!a"], "!a")].into());
        let single = KnowledgeBase::parse(["a"]).unwrap();
        assert!(enumerate_arguments(&single, Some(&neg)).unwrap().is_empty());
        let k = KnowledgeBase::parse(["alpha", "!alpha", "!alpha | beta", "beta", "!beta"]).unwrap();
        let na: Formula = "!alpha".parse().unwrap();
        let got = enumerate_arguments(&k, Some(&na)).unwrap();
        assert!(got.contains(&arg(&["!alpha"], "!alpha")));
        assert!(got.contains(&arg(&["!alpha | beta", "!beta"], "!alpha")));
        for a in &got {
            assert!(ClassicalArgument::new(a.support().clone(), a.claim().clone()).is_ok());
        }
    }

    #[test]
    fn instantiated_graph_verification() {
        let a1 = arg(&["lowCostFly", "luxFly", "lowCostFly & luxFly -> goodFly"], "goodFly");
        let a2 = arg(&["!lowCostFly | !luxFly"], "!lowCostFly | !luxFly");
        let binding: Binding = [(id("A1"), a1.clone()), (id("A2"), a2.clone())].into();
        let ig = InstantiatedGraph::new(binding.clone(), [(id("A2"), id("A1"), AttackKind::Undercut)]).unwrap();
        assert_eq!(ig.kind(&id("A2"), &id("A1")), Some(AttackKind::Undercut));
        assert!(is_reflective(&ig).unwrap());
        let bad = InstantiatedGraph::new(binding.clone(), [(id("A2"), id("A1"), AttackKind::Rebuttal)]);
        assert!(matches!(bad, Err(Error::AttackVerificationFailed { .. })));
        let silent = InstantiatedGraph::new(binding, []).unwrap();
        assert!(!is_reflective(&silent).unwrap());
        let dup = InstantiatedGraph::new([(id("X"), a1.clone()), (id("Y"), a1.clone())].into(), []);
        assert!(matches!(dup, Err(Error::DuplicateArgument(..))));
        assert_eq!(a1.canonical_id(), a1.clone().canonical_id());
        assert_ne!(a1.canonical_id(), a2.canonical_id());
    }

    #[test]
    fn containment_on_fixed_pairs() {
        let target = arg(&["a", "b", "c"], "a & b & c");
        let pairs = vec![
            (arg(&["!a & !b"], "!(a & b)"), target.clone()),
            (arg(&["!a & !b"], "!a"), target.clone()),
            (arg(&["!a & !b"], "!(a & b & c)"), target),
            (arg(&["a", "a -> b"], "b"), arg(&["!a & !b", "!c"], "!(b | c)")),
        ];
        let report = check_containment(&pairs).unwrap();
        assert_eq!(report.pairs_checked, 4);
        assert!(report.violations.is_empty());
    }
}
