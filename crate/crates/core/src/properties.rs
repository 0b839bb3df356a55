//! Randomized checks of the measure axioms and optional properties, and order-compatibility search.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::deductive::{AttackKind, Binding, ClassicalArgument, InstantiatedGraph};
use crate::error::Result;
use crate::graph::{id, Arc, ArgumentGraph, ArgumentId};
use crate::instantiated::measure_bound;
use crate::measure::{measure_graph_with, MeasureId};
use crate::par::{self, Config};
use crate::value::MeasureValue;

pub const DEFAULT_SEED: u64 = 0x5eed_2017;

/// The optional properties a graph-based measure may satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Monotonicity,
    Inversion,
    IsomorphicInvariance,
    DisjointAdditivity,
    SuperAdditivity,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::Monotonicity,
        Property::Inversion,
        Property::IsomorphicInvariance,
        Property::DisjointAdditivity,
        Property::SuperAdditivity,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Property::Monotonicity => "monotonicity",
            Property::Inversion => "inversion",
            Property::IsomorphicInvariance => "isomorphic-invariance",
            Property::DisjointAdditivity => "disjoint-additivity",
            Property::SuperAdditivity => "super-additivity",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Property {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Property::ALL
            .into_iter()
            .find(|p| p.code() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

/// Graphs that break a property together with their measure values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graphs: Vec<ArgumentGraph>,
    pub values: Vec<MeasureValue>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub cases: usize,
    pub violations: usize,
    /// The first few violations, in corpus order.
    pub witnesses: Vec<Violation>,
}

impl CheckReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

const KEPT_WITNESSES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    /// Random cases drawn per corpus graph where exhaustive enumeration is too large.
    pub samples: usize,
    pub cfg: Config,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { seed: DEFAULT_SEED, samples: 6, cfg: Config::default() }
    }
}

fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn names(n: usize) -> Vec<ArgumentId> {
    (1..=n).map(|i| id(&format!("A{i}"))).collect()
}

/// Erdős–Rényi style digraph on `A1..An`; self-attacks are drawn at a third of `density`.
pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> ArgumentGraph {
    let nodes = names(n);
    let mut arcs = Vec::new();
    for a in &nodes {
        for b in &nodes {
            let p = if a == b { density / 3.0 } else { density };
            if rng.random_bool(p) {
                arcs.push((a.clone(), b.clone()));
            }
        }
    }
    ArgumentGraph::new(nodes, arcs).expect("arcs use declared nodes")
}

/// `count` random graphs with 1 to `max_nodes` nodes and densities in `[0.1, 0.6)`.
pub fn random_corpus(seed: u64, count: usize, max_nodes: usize) -> Vec<ArgumentGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_nodes);
            let density = rng.random_range(0.1..0.6);
            random_graph(&mut rng, n, density)
        })
        .collect()
}

fn g(arcs: &[(&str, &str)]) -> ArgumentGraph {
    ArgumentGraph::from_names([], arcs.iter().copied()).expect("valid names")
}

fn mutual_pairs(k: usize) -> ArgumentGraph {
    let mut arcs = Vec::new();
    let labels: Vec<(String, String)> = (0..k).map(|i| (format!("P{i}"), format!("Q{i}"))).collect();
    for (p, q) in &labels {
        arcs.push((p.as_str(), q.as_str()));
        arcs.push((q.as_str(), p.as_str()));
    }
    g(&arcs)
}

/// Small graphs from the known counterexamples for the structure and extension measures.
pub fn known_witnesses() -> Vec<ArgumentGraph> {
    let self_loops = g(&[("S1", "S1"), ("S2", "S2"), ("S3", "S3")]);
    let mut blocked = self_loops.clone();
    blocked.insert_node(id("D"));
    for s in ["S1", "S2", "S3"] {
        blocked.insert_arc(id("D"), id(s)).expect("declared on insert");
    }
    let mut pair_and_loops = mutual_pairs(1);
    for a in self_loops.arcs() {
        pair_and_loops.insert_node(a.0.clone());
        pair_and_loops.insert_arc(a.0.clone(), a.1.clone()).expect("valid");
    }
    vec![
        g(&[("A", "C"), ("B", "C")]),
        g(&[("C", "A"), ("C", "B")]),
        g(&[("A", "B"), ("B", "C")]),
        g(&[("A", "B"), ("C", "D")]),
        g(&[("A", "B"), ("B", "C"), ("C", "D"), ("C", "B"), ("D", "C"), ("E", "D")]),
        g(&[("A", "B"), ("B", "A"), ("C", "A")]),
        g(&[("C", "A"), ("C", "B"), ("A", "B"), ("B", "A")]),
        mutual_pairs(1),
        mutual_pairs(2),
        mutual_pairs(3),
        self_loops,
        blocked,
        pair_and_loops,
        g(&[("A", "B"), ("B", "C"), ("C", "A")]),
        g(&[("A", "B"), ("B", "C"), ("C", "D"), ("D", "A")]),
    ]
}

/// Complete graphs (self-attacks included) on 1 to `max` nodes.
pub fn complete_graphs(max: usize) -> Vec<ArgumentGraph> {
    (1..=max).map(|n| ArgumentGraph::complete(&names(n))).collect()
}

/// The default property corpus: `count` random graphs of at most eight nodes, then the known witnesses.
pub fn property_corpus(seed: u64, count: usize) -> Vec<ArgumentGraph> {
    let mut corpus = random_corpus(seed, count, 8);
    corpus.extend(known_witnesses());
    corpus
}

/// Abstract measure as a plain function.
pub fn abstract_measure(m: MeasureId, cfg: Config) -> impl Fn(&ArgumentGraph) -> Result<MeasureValue> + Sync {
    move |g| measure_graph_with(g, m, &cfg)
}

fn fresh_name(g: &ArgumentGraph) -> ArgumentId {
    (0..)
        .map(|i| id(&format!("Fresh{i}")))
        .find(|a| !g.contains(a))
        .expect("unbounded names")
}

struct Case {
    graphs: Vec<ArgumentGraph>,
    detail: &'static str,
}

/// Evaluates `cases` (collected per corpus graph) and folds them into a report.
fn run_cases<F, C>(name: &str, corpus: &[ArgumentGraph], opts: &CheckOptions, make: C, f: &F, broken: impl Fn(&[MeasureValue]) -> bool + Sync) -> Result<CheckReport>
where
    F: Fn(&ArgumentGraph) -> Result<MeasureValue> + Sync,
    C: Fn(usize, &ArgumentGraph) -> Vec<Case> + Sync,
{
    let indexed: Vec<(usize, &ArgumentGraph)> = corpus.iter().enumerate().collect();
    let per_graph = par::map(opts.cfg.exec, &indexed, |&(i, g)| -> Result<(usize, Vec<Violation>)> {
        let cases = make(i, g);
        let mut bad = Vec::new();
        for case in &cases {
            let values = case.graphs.iter().map(f).collect::<Result<Vec<_>>>()?;
            if broken(&values) {
                bad.push(Violation { graphs: case.graphs.clone(), values, detail: case.detail.to_string() });
            }
        }
        Ok((cases.len(), bad))
    });
    let mut report = CheckReport { check: name.to_string(), cases: 0, violations: 0, witnesses: Vec::new() };
    for r in per_graph {
        let (n, bad) = r?;
        report.cases += n;
        report.violations += bad.len();
        let room = KEPT_WITNESSES.saturating_sub(report.witnesses.len());
        report.witnesses.extend(bad.into_iter().take(room));
    }
    Ok(report)
}

/// Consistency on each graph's arcless version and freeness under one added unattacking node.
pub fn check_basic_axioms_by<F>(f: &F, corpus: &[ArgumentGraph], opts: &CheckOptions) -> Result<Vec<CheckReport>>
where
    F: Fn(&ArgumentGraph) -> Result<MeasureValue> + Sync,
{
    let consistency = run_cases(
        "consistency",
        corpus,
        opts,
        |_, g| vec![Case { graphs: vec![g.without_arcs()], detail: "arcless graph" }],
        f,
        |v| !v[0].is_zero(),
    )?;
    let freeness = run_cases(
        "freeness",
        corpus,
        opts,
        |_, g| {
            let mut bigger = g.clone();
            bigger.insert_node(fresh_name(g));
            vec![Case { graphs: vec![g.clone(), bigger], detail: "graph and graph with an isolated node" }]
        },
        f,
        |v| v[0] != v[1],
    )?;
    Ok(vec![consistency, freeness])
}

pub fn check_basic_axioms(m: MeasureId, corpus: &[ArgumentGraph], opts: &CheckOptions) -> Result<Vec<CheckReport>> {
    check_basic_axioms_by(&abstract_measure(m, opts.cfg), corpus, opts)
}

fn subsets_of<T: Clone>(items: &[T], mask: u64) -> Vec<T> {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, x)| x.clone())
        .collect()
}

fn build(nodes: impl IntoIterator<Item = ArgumentId>, arcs: impl IntoIterator<Item = Arc>) -> ArgumentGraph {
    let mut out = ArgumentGraph::new(nodes, []).expect("no arcs yet");
    for (a, b) in arcs {
        out.insert_node(a.clone());
        out.insert_node(b.clone());
        out.insert_arc(a, b).expect("endpoints inserted");
    }
    out
}

const EXHAUSTIVE_NODES: usize = 5;
const EXHAUSTIVE_ARCS: usize = 6;

/// Subgraphs of `g`: every one when `g` is small, otherwise random node sets with random arc subsets.
fn subgraphs(g: &ArgumentGraph, rng: &mut ChaCha8Rng, samples: usize) -> Vec<ArgumentGraph> {
    let nodes: Vec<ArgumentId> = g.nodes().iter().cloned().collect();
    let arcs: Vec<Arc> = g.arcs().iter().cloned().collect();
    if nodes.len() <= EXHAUSTIVE_NODES && arcs.len() <= EXHAUSTIVE_ARCS {
        let mut out = Vec::new();
        for nm in 0u64..1 << nodes.len() {
            let keep: BTreeSet<ArgumentId> = subsets_of(&nodes, nm).into_iter().collect();
            let inner: Vec<Arc> = arcs
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .cloned()
                .collect();
            for am in 0u64..1 << inner.len() {
                out.push(build(keep.iter().cloned(), subsets_of(&inner, am)));
            }
        }
        return out;
    }
    (0..samples)
        .map(|_| {
            let keep: BTreeSet<ArgumentId> = nodes.iter().filter(|_| rng.random_bool(0.7)).cloned().collect();
            let inner = arcs
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b) && rng.random_bool(0.7))
                .cloned();
            build(keep.iter().cloned(), inner)
        })
        .collect()
}

/// Splits of `g` into two arc-disjoint graphs whose composition is `g`.
fn arc_splits(g: &ArgumentGraph, rng: &mut ChaCha8Rng, samples: usize) -> Vec<(ArgumentGraph, ArgumentGraph)> {
    let arcs: Vec<Arc> = g.arcs().iter().cloned().collect();
    let split = |side: &dyn Fn(usize) -> bool, extra: &dyn Fn(&ArgumentId) -> (bool, bool)| {
        let mut left = ArgumentGraph::empty();
        let mut right = ArgumentGraph::empty();
        for (i, (a, b)) in arcs.iter().enumerate() {
            let target = if side(i) { &mut left } else { &mut right };
            target.insert_node(a.clone());
            target.insert_node(b.clone());
            target.insert_arc(a.clone(), b.clone()).expect("endpoints inserted");
        }
        for n in g.nodes() {
            if !left.contains(n) && !right.contains(n) {
                let (l, r) = extra(n);
                if l || !r {
                    left.insert_node(n.clone());
                }
                if r {
                    right.insert_node(n.clone());
                }
            }
        }
        (left, right)
    };
    if arcs.len() <= EXHAUSTIVE_ARCS {
        return (0u64..1 << arcs.len())
            .map(|m| split(&|i| m >> i & 1 == 1, &|_| (true, false)))
            .collect();
    }
    (0..samples)
        .map(|_| {
            let sides: Vec<bool> = (0..arcs.len()).map(|_| rng.random_bool(0.5)).collect();
            let extras: BTreeMap<ArgumentId, (bool, bool)> = g
                .nodes()
                .iter()
                .map(|n| (n.clone(), (rng.random_bool(0.5), rng.random_bool(0.5))))
                .collect();
            split(&|i| sides[i], &|n| extras[n])
        })
        .collect()
}

/// Splits of the node set into two parts, keeping only arcs inside each part.
fn node_partitions(g: &ArgumentGraph, rng: &mut ChaCha8Rng, samples: usize) -> Vec<(ArgumentGraph, ArgumentGraph)> {
    let nodes: Vec<ArgumentId> = g.nodes().iter().cloned().collect();
    let part = |left: BTreeSet<ArgumentId>| {
        let right: Vec<&ArgumentId> = nodes.iter().filter(|n| !left.contains(*n)).collect();
        (
            g.induced(left.iter()).expect("subset of nodes"),
            g.induced(right).expect("subset of nodes"),
        )
    };
    if nodes.len() <= EXHAUSTIVE_NODES {
        return (0u64..1 << nodes.len())
            .map(|m| part(subsets_of(&nodes, m).into_iter().collect()))
            .collect();
    }
    (0..samples)
        .map(|_| part(nodes.iter().filter(|_| rng.random_bool(0.5)).cloned().collect()))
        .collect()
}

fn permuted(g: &ArgumentGraph, rng: &mut ChaCha8Rng) -> ArgumentGraph {
    let from: Vec<ArgumentId> = g.nodes().iter().cloned().collect();
    let mut to = from.clone();
    to.shuffle(rng);
    g.relabel(&from.into_iter().zip(to).collect())
}

/// Searches the corpus for violations of `property`.
///
/// Monotonicity compares subgraphs with the graph; inversion and isomorphic
/// invariance compare with the inverted and a permuted graph; disjoint
/// additivity splits the node set (and, when `renaming` is allowed, also
/// adds a disjoint renamed copy of the next corpus graph); super-additivity
/// splits the arcs into two arc-disjoint graphs that may share nodes.
pub fn check_optional_property_by<F>(
    f: &F,
    property: Property,
    corpus: &[ArgumentGraph],
    opts: &CheckOptions,
    renaming: bool,
) -> Result<CheckReport>
where
    F: Fn(&ArgumentGraph) -> Result<MeasureValue> + Sync,
{
    let seed = opts.seed ^ property as u64;
    let samples = opts.samples;
    let sum_of_parts = |v: &[MeasureValue]| v[1] + v[2];
    match property {
        Property::Monotonicity => run_cases(
            property.code(),
            corpus,
            opts,
            |i, g| {
                subgraphs(g, &mut rng_for(seed, i), samples)
                    .into_iter()
                    .map(|s| Case { graphs: vec![s, g.clone()], detail: "subgraph and graph" })
                    .collect()
            },
            f,
            |v| v[0] > v[1],
        ),
        Property::Inversion => run_cases(
            property.code(),
            corpus,
            opts,
            |_, g| vec![Case { graphs: vec![g.clone(), g.invert()], detail: "graph and inverted graph" }],
            f,
            |v| v[0] != v[1],
        ),
        Property::IsomorphicInvariance => run_cases(
            property.code(),
            corpus,
            opts,
            |i, g| {
                let mut rng = rng_for(seed, i);
                (0..samples.max(1))
                    .map(|_| Case { graphs: vec![g.clone(), permuted(g, &mut rng)], detail: "graph and relabelled graph" })
                    .collect()
            },
            f,
            |v| v[0] != v[1],
        ),
        Property::DisjointAdditivity => run_cases(
            property.code(),
            corpus,
            opts,
            |i, g| {
                let mut out: Vec<Case> = node_partitions(g, &mut rng_for(seed, i), samples)
                    .into_iter()
                    .map(|(l, r)| Case { graphs: vec![l.compose(&r), l, r], detail: "composition and node-disjoint parts" })
                    .collect();
                if renaming && !corpus.is_empty() {
                    let other = corpus[(i + 1) % corpus.len()].prefixed("R_");
                    out.push(Case { graphs: vec![g.compose(&other), g.clone(), other], detail: "composition and renamed copy" });
                }
                out
            },
            f,
            |v| v[0] != sum_of_parts(v),
        ),
        Property::SuperAdditivity => run_cases(
            property.code(),
            corpus,
            opts,
            |i, g| {
                let mut out: Vec<Case> = arc_splits(g, &mut rng_for(seed, i), samples)
                    .into_iter()
                    .map(|(l, r)| Case { graphs: vec![l.compose(&r), l, r], detail: "composition and arc-disjoint parts" })
                    .collect();
                if corpus.len() > 1 {
                    let next = &corpus[(i + 1) % corpus.len()];
                    let fresh: Vec<Arc> = next.arcs().difference(g.arcs()).cloned().collect();
                    if renaming || next.nodes().is_subset(g.nodes()) {
                        let other = build(next.nodes().iter().cloned(), fresh);
                        out.push(Case { graphs: vec![g.compose(&other), g.clone(), other], detail: "composition with an overlapping graph" });
                    }
                }
                out
            },
            f,
            |v| v[0] < sum_of_parts(v),
        ),
    }
}

pub fn check_optional_property(m: MeasureId, property: Property, corpus: &[ArgumentGraph], opts: &CheckOptions) -> Result<CheckReport> {
    check_optional_property_by(&abstract_measure(m, opts.cfg), property, corpus, opts, true)
}

/// A pair on which two measures disagree about which graph is more inconsistent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderWitness<G> {
    pub first: G,
    pub second: G,
    pub m1: (MeasureValue, MeasureValue),
    pub m2: (MeasureValue, MeasureValue),
}

/// Indices `(i, j)` where `v1[i] < v1[j]` and `v2[i] < v2[j]` disagree.
pub fn order_disagreement(v1: &[MeasureValue], v2: &[MeasureValue]) -> Option<(usize, usize)> {
    let n = v1.len().min(v2.len());
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| (v1[i] < v1[j]) != (v2[i] < v2[j]))
}

fn witness<G: Clone>(corpus: &[G], v1: &[MeasureValue], v2: &[MeasureValue]) -> Option<OrderWitness<G>> {
    order_disagreement(v1, v2).map(|(i, j)| OrderWitness {
        first: corpus[i].clone(),
        second: corpus[j].clone(),
        m1: (v1[i], v1[j]),
        m2: (v2[i], v2[j]),
    })
}

/// A witness that `m1` and `m2` rank some pair of corpus graphs differently, if there is one.
pub fn order_compatibility(m1: MeasureId, m2: MeasureId, corpus: &[ArgumentGraph], cfg: &Config) -> Result<Option<OrderWitness<ArgumentGraph>>> {
    let eval = |m: MeasureId| -> Result<Vec<MeasureValue>> {
        par::map(cfg.exec, corpus, |g| measure_graph_with(g, m, cfg)).into_iter().collect()
    };
    Ok(witness(corpus, &eval(m1)?, &eval(m2)?))
}

/// As [`order_compatibility`], for any measures over instantiated graphs.
pub fn order_compatibility_instantiated(
    m1: MeasureId,
    m2: MeasureId,
    corpus: &[InstantiatedGraph],
    cfg: &Config,
) -> Result<Option<OrderWitness<InstantiatedGraph>>> {
    let eval = |m: MeasureId| -> Result<Vec<MeasureValue>> {
        par::map(cfg.exec, corpus, |ig| measure_bound(ig.graph(), ig.binding(), m, cfg))
            .into_iter()
            .collect()
    };
    Ok(witness(corpus, &eval(m1)?, &eval(m2)?))
}

/// The order-compatibility corpus: random graphs of up to six nodes, the known witnesses and complete graphs up to twelve nodes.
pub fn order_corpus(seed: u64, count: usize) -> Vec<ArgumentGraph> {
    let mut corpus = random_corpus(seed, count, 6);
    corpus.extend(known_witnesses());
    corpus.extend(complete_graphs(12));
    corpus
}

fn arg(support: &[&str], claim: &str) -> ClassicalArgument {
    ClassicalArgument::parse(support.iter().copied(), claim).expect("well-formed argument")
}

fn named(pairs: Vec<(&str, ClassicalArgument)>, arcs: &[(&str, &str, AttackKind)]) -> InstantiatedGraph {
    let binding: Binding = pairs.into_iter().map(|(n, a)| (id(n), a)).collect();
    InstantiatedGraph::new(binding, arcs.iter().map(|&(a, b, k)| (id(a), id(b), k))).expect("verified arcs")
}

/// The freeness counterexample for the support measure: adding an unattacking argument adds a minimal inconsistent subset.
pub fn support_freeness_pair() -> (InstantiatedGraph, InstantiatedGraph) {
    let base = vec![("A1", arg(&["a & b"], "a & b")), ("A2", arg(&["!a"], "!a"))];
    let arcs = [("A2", "A1", AttackKind::Defeater)];
    let mut bigger = base.clone();
    bigger.push(("A3", arg(&["!b"], "!b")));
    (named(base, &arcs), named(bigger, &arcs))
}

/// Hand-built instantiated graphs used to separate the logic-based measures from the rest.
pub fn known_instantiated_witnesses() -> Vec<InstantiatedGraph> {
    let (small, big) = support_freeness_pair();
    vec![
        named(
            vec![("P", arg(&["a"], "a")), ("N", arg(&["!a"], "!a"))],
            &[("P", "N", AttackKind::Rebuttal), ("N", "P", AttackKind::Rebuttal)],
        ),
        named(
            vec![
                ("P", arg(&["a & b & c"], "a & b & c")),
                ("N", arg(&["!a | !b | !c"], "!(a & b & c)")),
            ],
            &[("P", "N", AttackKind::Defeater), ("N", "P", AttackKind::CanonicalUndercut)],
        ),
        named(
            vec![("P", arg(&["a", "b"], "a & b")), ("N", arg(&["!a & !b"], "!a & !b"))],
            &[("N", "P", AttackKind::Defeater)],
        ),
        small,
        big,
    ]
}

fn argument_pool() -> Vec<ClassicalArgument> {
    [
        (&["a"][..], "a"),
        (&["!a"], "!a"),
        (&["b"], "b"),
        (&["!b"], "!b"),
        (&["a & b"], "a & b"),
        (&["!a | !b"], "!(a & b)"),
        (&["!a & !b"], "!a & !b"),
        (&["c"], "c"),
        (&["!c"], "!c"),
        (&["a", "a -> c"], "c"),
        (&["b", "b -> !c"], "!c"),
        (&["a & b & c"], "a & b & c"),
        (&["!a | !b | !c"], "!(a & b & c)"),
    ]
    .into_iter()
    .map(|(s, c)| arg(s, c))
    .collect()
}

/// Random instantiated graphs: subsets of a fixed argument pool with every defeater arc, then the known witnesses.
pub fn instantiated_corpus(seed: u64, count: usize) -> Result<Vec<InstantiatedGraph>> {
    let pool = argument_pool();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count + 5);
    for _ in 0..count {
        let k = rng.random_range(1..=4);
        let picked: Vec<ClassicalArgument> = pool.choose_multiple(&mut rng, k).cloned().collect();
        out.push(InstantiatedGraph::derive(picked, AttackKind::Defeater)?);
    }
    out.extend(known_instantiated_witnesses());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible() {
        assert_eq!(random_corpus(7, 20, 8), random_corpus(7, 20, 8));
        assert_ne!(random_corpus(7, 20, 8), random_corpus(8, 20, 8));
        assert!(random_corpus(1, 50, 8).iter().all(|g| g.node_count() <= 8 && g.node_count() >= 1));
    }

    #[test]
    fn splits_recompose() {
        let mut rng = rng_for(1, 0);
        for g in random_corpus(3, 30, 7) {
            for (l, r) in arc_splits(&g, &mut rng, 4) {
                assert_eq!(l.compose(&r), g);
                assert!(l.arcs().is_disjoint(r.arcs()));
            }
            for (l, r) in node_partitions(&g, &mut rng, 4) {
                assert!(l.is_disjoint(&r));
                assert!(l.compose(&r).is_subgraph_of(&g));
            }
            for s in subgraphs(&g, &mut rng, 4) {
                assert!(s.is_subgraph_of(&g));
            }
        }
    }

    #[test]
    fn broken_measure_fails_freeness() {
        let node_count = |g: &ArgumentGraph| Ok(MeasureValue::from_count(g.node_count()));
        let reports = check_basic_axioms_by(&node_count, &random_corpus(2, 10, 5), &CheckOptions::default()).unwrap();
        assert_eq!(reports[1].check, "freeness");
        assert_eq!(reports[1].violations, 10);
    }

    #[test]
    fn disagreement_search() {
        let v = |xs: &[i64]| xs.iter().map(|&x| MeasureValue::integer(x)).collect::<Vec<_>>();
        assert_eq!(order_disagreement(&v(&[1, 2, 3]), &v(&[5, 6, 7])), None);
        assert_eq!(order_disagreement(&v(&[1, 2]), &v(&[2, 1])), Some((0, 1)));
        assert_eq!(order_disagreement(&v(&[1, 1]), &v(&[1, 2])), Some((0, 1)));
    }
}
