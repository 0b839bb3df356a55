#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use argmeter::io::{parse_graph, parse_instantiated, parse_kb, GraphFormat};
use argmeter::{id, ArgumentGraph, ArgumentId, Formula, InstantiatedGraph, KnowledgeBase};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn graph_fixture(name: &str) -> ArgumentGraph {
    let path = fixture_path(name);
    parse_graph(&fixture_text(name), GraphFormat::from_path(&path)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn inst_fixture(name: &str) -> InstantiatedGraph {
    parse_instantiated(&fixture_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn kb_fixture(name: &str) -> KnowledgeBase {
    parse_kb(&fixture_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn graph(nodes: &[&str], arcs: &[(&str, &str)]) -> ArgumentGraph {
    ArgumentGraph::from_names(nodes.iter().copied(), arcs.iter().copied()).unwrap()
}

pub fn set(xs: &[&str]) -> BTreeSet<ArgumentId> {
    xs.iter().map(|x| id(x)).collect()
}

/// Truth-table satisfiability over the atoms of `fs`.
pub fn brute_satisfiable(fs: &[&Formula]) -> bool {
    let atoms: Vec<String> = fs.iter().flat_map(|f| f.atoms()).collect::<BTreeSet<_>>().into_iter().collect();
    (0u64..1 << atoms.len()).any(|w| {
        let val = |a: &str| atoms.iter().position(|x| x == a).is_some_and(|i| w >> i & 1 == 1);
        fs.iter().all(|f| f.eval(&val))
    })
}

/// Extensions straight from the definitions by scanning every subset.
pub mod subset_oracle {
    use super::*;

    fn members(nodes: &[ArgumentId], mask: u32) -> BTreeSet<ArgumentId> {
        (0..nodes.len()).filter(|i| mask >> i & 1 == 1).map(|i| nodes[i].clone()).collect()
    }

    fn attacks(g: &ArgumentGraph, s: &BTreeSet<ArgumentId>, a: &ArgumentId) -> bool {
        s.iter().any(|b| g.has_arc(b, a))
    }

    fn conflict_free(g: &ArgumentGraph, s: &BTreeSet<ArgumentId>) -> bool {
        s.iter().all(|a| !attacks(g, s, a))
    }

    fn defended(g: &ArgumentGraph, s: &BTreeSet<ArgumentId>) -> BTreeSet<ArgumentId> {
        g.nodes()
            .iter()
            .filter(|a| g.nodes().iter().filter(|b| g.has_arc(b, a)).all(|b| attacks(g, s, b)))
            .cloned()
            .collect()
    }

    pub fn complete(g: &ArgumentGraph) -> Vec<BTreeSet<ArgumentId>> {
        let nodes: Vec<ArgumentId> = g.nodes().iter().cloned().collect();
        (0u32..1 << nodes.len())
            .map(|m| members(&nodes, m))
            .filter(|s| conflict_free(g, s) && defended(g, s) == *s)
            .collect()
    }

    pub fn grounded(g: &ArgumentGraph) -> BTreeSet<BTreeSet<ArgumentId>> {
        let co = complete(g);
        co.iter().filter(|s| co.iter().all(|t| t == *s || !t.is_subset(s))).cloned().collect()
    }

    pub fn preferred(g: &ArgumentGraph) -> BTreeSet<BTreeSet<ArgumentId>> {
        let co = complete(g);
        co.iter().filter(|s| co.iter().all(|t| t == *s || !s.is_subset(t))).cloned().collect()
    }

    pub fn stable(g: &ArgumentGraph) -> BTreeSet<BTreeSet<ArgumentId>> {
        preferred(g)
            .into_iter()
            .filter(|s| g.nodes().iter().all(|a| s.contains(a) || attacks(g, s, a)))
            .collect()
    }
}

/// Minimum Hamming distance between models of the two sets over their joint atoms, over the atom count.
pub fn brute_degree(s1: &[&Formula], s2: &[&Formula]) -> Option<(i64, i64)> {
    let atoms: Vec<String> = s1.iter().chain(s2).flat_map(|f| f.atoms()).collect::<BTreeSet<_>>().into_iter().collect();
    if atoms.is_empty() {
        return Some((0, 1));
    }
    let models = |fs: &[&Formula]| -> Vec<u64> {
        (0u64..1 << atoms.len())
            .filter(|w| {
                let val = |a: &str| atoms.iter().position(|x| x == a).is_some_and(|i| w >> i & 1 == 1);
                fs.iter().all(|f| f.eval(&val))
            })
            .collect()
    };
    let (m1, m2) = (models(s1), models(s2));
    let best = m1.iter().flat_map(|x| m2.iter().map(move |y| (x ^ y).count_ones())).min()?;
    Some((best as i64, atoms.len() as i64))
}
