//! Argument graphs and their structural subroutines.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Config, Execution};

/// Name of an argument: a non-empty string over `[A-Za-z0-9_]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(ArgumentId(name))
        } else {
            Err(Error::InvalidIdentifier(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for ArgumentId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ArgumentId::new(s)
    }
}

impl TryFrom<String> for ArgumentId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        ArgumentId::new(s)
    }
}

impl From<ArgumentId> for String {
    fn from(id: ArgumentId) -> String {
        id.0
    }
}

impl AsRef<str> for ArgumentId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Shorthand for building ids from literals in tests and fixtures.
///
/// Panics on an invalid name.
pub fn id(name: &str) -> ArgumentId {
    ArgumentId::new(name).expect("valid argument identifier")
}

pub type Arc = (ArgumentId, ArgumentId);

/// A finite directed graph whose nodes are arguments and whose arcs are attacks.
///
/// Equality is structural. Self-loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct ArgumentGraph {
    nodes: BTreeSet<ArgumentId>,
    arcs: BTreeSet<Arc>,
}

impl ArgumentGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(
        nodes: impl IntoIterator<Item = ArgumentId>,
        arcs: impl IntoIterator<Item = Arc>,
    ) -> Result<Self> {
        let nodes: BTreeSet<_> = nodes.into_iter().collect();
        let arcs: BTreeSet<_> = arcs.into_iter().collect();
        for (a, b) in &arcs {
            for end in [a, b] {
                if !nodes.contains(end) {
                    return Err(Error::UnknownArgument(end.to_string()));
                }
            }
        }
        Ok(ArgumentGraph { nodes, arcs })
    }

    /// Graph from string names; arc endpoints are added as nodes implicitly.
    pub fn from_names<'a>(
        nodes: impl IntoIterator<Item = &'a str>,
        arcs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut g = ArgumentGraph::empty();
        for n in nodes {
            g.nodes.insert(ArgumentId::new(n)?);
        }
        for (a, b) in arcs {
            let (a, b) = (ArgumentId::new(a)?, ArgumentId::new(b)?);
            g.nodes.insert(a.clone());
            g.nodes.insert(b.clone());
            g.arcs.insert((a, b));
        }
        Ok(g)
    }

    /// The complete graph (with self-loops) on the given names.
    pub fn complete(names: &[ArgumentId]) -> Self {
        let nodes: BTreeSet<_> = names.iter().cloned().collect();
        let arcs = nodes
            .iter()
            .flat_map(|a| nodes.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        ArgumentGraph { nodes, arcs }
    }

    pub fn nodes(&self) -> &BTreeSet<ArgumentId> {
        &self.nodes
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn contains(&self, a: &ArgumentId) -> bool {
        self.nodes.contains(a)
    }

    pub fn has_arc(&self, a: &ArgumentId, b: &ArgumentId) -> bool {
        self.arcs.contains(&(a.clone(), b.clone()))
    }

    pub fn insert_node(&mut self, a: ArgumentId) -> bool {
        self.nodes.insert(a)
    }

    pub fn insert_arc(&mut self, a: ArgumentId, b: ArgumentId) -> Result<bool> {
        for end in [&a, &b] {
            self.require(end)?;
        }
        Ok(self.arcs.insert((a, b)))
    }

    pub fn remove_arc(&mut self, a: &ArgumentId, b: &ArgumentId) -> bool {
        self.arcs.remove(&(a.clone(), b.clone()))
    }

    fn require(&self, a: &ArgumentId) -> Result<()> {
        if self.nodes.contains(a) {
            Ok(())
        } else {
            Err(Error::UnknownArgument(a.to_string()))
        }
    }

    /// Arguments attacking `a`.
    pub fn attackers<'a>(&'a self, a: &'a ArgumentId) -> impl Iterator<Item = &'a ArgumentId> + 'a {
        self.arcs.iter().filter(move |(_, t)| t == a).map(|(s, _)| s)
    }

    /// Arguments attacked by `a`.
    pub fn attackees<'a>(&'a self, a: &'a ArgumentId) -> impl Iterator<Item = &'a ArgumentId> + 'a {
        self.arcs.iter().filter(move |(s, _)| s == a).map(|(_, t)| t)
    }

    pub fn indegree(&self, a: &ArgumentId) -> Result<usize> {
        self.require(a)?;
        Ok(self.attackers(a).count())
    }

    pub fn outdegree(&self, a: &ArgumentId) -> Result<usize> {
        self.require(a)?;
        Ok(self.attackees(a).count())
    }

    /// `self ⊑ other`.
    pub fn is_subgraph_of(&self, other: &ArgumentGraph) -> bool {
        self.nodes.is_subset(&other.nodes)
            && self.arcs.iter().all(|arc| {
                other.arcs.contains(arc) && self.nodes.contains(&arc.0) && self.nodes.contains(&arc.1)
            })
    }

    pub fn induced<'a>(&self, xs: impl IntoIterator<Item = &'a ArgumentId>) -> Result<ArgumentGraph> {
        let mut nodes = BTreeSet::new();
        for x in xs {
            self.require(x)?;
            nodes.insert(x.clone());
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|(a, b)| nodes.contains(a) && nodes.contains(b))
            .cloned()
            .collect();
        Ok(ArgumentGraph { nodes, arcs })
    }

    /// The graph without the given nodes (and their arcs). Unknown names are ignored.
    pub fn without<'a>(&self, xs: impl IntoIterator<Item = &'a ArgumentId>) -> ArgumentGraph {
        let drop: BTreeSet<&ArgumentId> = xs.into_iter().collect();
        let keep: Vec<&ArgumentId> = self.nodes.iter().filter(|n| !drop.contains(n)).collect();
        self.induced(keep).expect("kept nodes belong to the graph")
    }

    pub fn compose(&self, other: &ArgumentGraph) -> ArgumentGraph {
        ArgumentGraph {
            nodes: self.nodes.union(&other.nodes).cloned().collect(),
            arcs: self.arcs.union(&other.arcs).cloned().collect(),
        }
    }

    pub fn invert(&self) -> ArgumentGraph {
        ArgumentGraph {
            nodes: self.nodes.clone(),
            arcs: self.arcs.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    /// Every ordered pair, including `(A, A)`, is an arc.
    pub fn is_complete(&self) -> bool {
        self.arcs.len() == self.nodes.len() * self.nodes.len()
    }

    pub fn is_disjoint(&self, other: &ArgumentGraph) -> bool {
        self.nodes.is_disjoint(&other.nodes)
    }

    /// Same arcs with nodes renamed through `map`; unmapped nodes keep their name.
    pub fn relabel(&self, map: &BTreeMap<ArgumentId, ArgumentId>) -> ArgumentGraph {
        let f = |a: &ArgumentId| map.get(a).cloned().unwrap_or_else(|| a.clone());
        ArgumentGraph {
            nodes: self.nodes.iter().map(f).collect(),
            arcs: self.arcs.iter().map(|(a, b)| (f(a), f(b))).collect(),
        }
    }

    /// Same graph with every node name prefixed; used to build disjoint copies.
    pub fn prefixed(&self, prefix: &str) -> ArgumentGraph {
        let map = self
            .nodes
            .iter()
            .map(|n| (n.clone(), ArgumentId(format!("{prefix}{n}"))))
            .collect();
        self.relabel(&map)
    }

    pub fn without_arcs(&self) -> ArgumentGraph {
        ArgumentGraph {
            nodes: self.nodes.clone(),
            arcs: BTreeSet::new(),
        }
    }

    /// All node subsets that carry a directed Hamiltonian cycle in their induced subgraph.
    pub fn cycles(&self) -> Result<BTreeSet<BTreeSet<ArgumentId>>> {
        self.cycles_with(&Config::default())
    }

    pub fn cycles_with(&self, cfg: &Config) -> Result<BTreeSet<BTreeSet<ArgumentId>>> {
        let ix = Indexed::with_cap(self, cfg.limits.max_nodes, "cycle enumeration")?;
        Ok(cycle_masks(&ix, cfg.exec)
            .into_iter()
            .map(|m| ix.names_of(m))
            .collect())
    }

    /// Weakly connected maximal induced subgraphs with at least two nodes.
    pub fn multi_node_components(&self) -> BTreeSet<ArgumentGraph> {
        let mut parent: BTreeMap<&ArgumentId, &ArgumentId> = self.nodes.iter().map(|n| (n, n)).collect();
        fn find<'a>(parent: &mut BTreeMap<&'a ArgumentId, &'a ArgumentId>, x: &'a ArgumentId) -> &'a ArgumentId {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent.insert(cur, root);
                cur = next;
            }
            root
        }
        for (a, b) in &self.arcs {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent.insert(ra.max(rb), ra.min(rb));
            }
        }
        let mut groups: BTreeMap<&ArgumentId, Vec<&ArgumentId>> = BTreeMap::new();
        for n in &self.nodes {
            let r = find(&mut parent, n);
            groups.entry(r).or_default().push(n);
        }
        groups
            .into_values()
            .filter(|members| members.len() >= 2)
            .map(|members| self.induced(members).expect("members are nodes"))
            .collect()
    }

    /// An arc-preserving bijection onto `other`, if one exists.
    pub fn isomorphism(&self, other: &ArgumentGraph) -> Result<Option<BTreeMap<ArgumentId, ArgumentId>>> {
        self.isomorphism_with(other, &Config::default())
    }

    pub fn isomorphism_with(
        &self,
        other: &ArgumentGraph,
        cfg: &Config,
    ) -> Result<Option<BTreeMap<ArgumentId, ArgumentId>>> {
        if self.node_count() != other.node_count() || self.arc_count() != other.arc_count() {
            return Ok(None);
        }
        let cap = cfg.limits.max_nodes;
        let a = Indexed::with_cap(self, cap, "isomorphism search")?;
        let b = Indexed::with_cap(other, cap, "isomorphism search")?;
        let sig = |ix: &Indexed, i: usize| {
            (
                ix.pred[i].count_ones(),
                ix.succ[i].count_ones(),
                ix.succ[i] >> i & 1 == 1,
            )
        };
        let sig_a: Vec<_> = (0..a.len()).map(|i| sig(&a, i)).collect();
        let sig_b: Vec<_> = (0..b.len()).map(|i| sig(&b, i)).collect();
        let mut sorted_a = sig_a.clone();
        let mut sorted_b = sig_b.clone();
        sorted_a.sort_unstable();
        sorted_b.sort_unstable();
        if sorted_a != sorted_b {
            return Ok(None);
        }
        // Most constrained first: rarest signature, then highest degree.
        let mut order: Vec<usize> = (0..a.len()).collect();
        order.sort_by_key(|&i| {
            let rarity = sig_b.iter().filter(|s| **s == sig_a[i]).count();
            (rarity, std::cmp::Reverse(sig_a[i].0 + sig_a[i].1), i)
        });
        let mut mapping = vec![usize::MAX; a.len()];
        let mut used = 0u64;
        fn extend(
            k: usize,
            order: &[usize],
            a: &Indexed,
            b: &Indexed,
            sig_a: &[(u32, u32, bool)],
            sig_b: &[(u32, u32, bool)],
            mapping: &mut [usize],
            used: &mut u64,
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let i = order[k];
            for j in 0..b.len() {
                if *used >> j & 1 == 1 || sig_a[i] != sig_b[j] {
                    continue;
                }
                let consistent = order[..k].iter().all(|&p| {
                    let q = mapping[p];
                    (a.succ[i] >> p & 1) == (b.succ[j] >> q & 1) && (a.succ[p] >> i & 1) == (b.succ[q] >> j & 1)
                });
                if !consistent {
                    continue;
                }
                mapping[i] = j;
                *used |= 1 << j;
                if extend(k + 1, order, a, b, sig_a, sig_b, mapping, used) {
                    return true;
                }
                *used &= !(1 << j);
                mapping[i] = usize::MAX;
            }
            false
        }
        if !extend(0, &order, &a, &b, &sig_a, &sig_b, &mut mapping, &mut used) {
            return Ok(None);
        }
        Ok(Some(
            mapping
                .iter()
                .enumerate()
                .map(|(i, &j)| (a.names[i].clone(), b.names[j].clone()))
                .collect(),
        ))
    }
}

impl fmt::Display for ArgumentGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<&str> = self.nodes.iter().map(|n| n.as_str()).collect();
        let arcs: Vec<String> = self.arcs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "({{{}}}, {{{}}})", nodes.join(","), arcs.join(","))
    }
}

/// Bitmask view of a graph with at most 64 nodes, indexed in name order.
#[derive(Debug, Clone)]
pub struct Indexed {
    pub names: Vec<ArgumentId>,
    /// `succ[i]` has bit `j` set iff `(i, j)` is an arc.
    pub succ: Vec<u64>,
    /// `pred[i]` has bit `j` set iff `(j, i)` is an arc.
    pub pred: Vec<u64>,
}

impl Indexed {
    pub fn with_cap(g: &ArgumentGraph, cap: usize, what: &'static str) -> Result<Self> {
        let cap = cap.min(64);
        if g.node_count() > cap {
            return Err(Error::ResourceLimit {
                what,
                size: g.node_count(),
                cap,
            });
        }
        let names: Vec<ArgumentId> = g.nodes.iter().cloned().collect();
        let pos: BTreeMap<&ArgumentId, usize> = names.iter().enumerate().map(|(i, n)| (n, i)).collect();
        let mut succ = vec![0u64; names.len()];
        let mut pred = vec![0u64; names.len()];
        for (a, b) in &g.arcs {
            let (i, j) = (pos[a], pos[b]);
            succ[i] |= 1 << j;
            pred[j] |= 1 << i;
        }
        Ok(Indexed { names, succ, pred })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn full(&self) -> u64 {
        mask_of_len(self.len())
    }

    pub fn index_of(&self, a: &ArgumentId) -> Option<usize> {
        self.names.binary_search(a).ok()
    }

    pub fn mask_of<'a>(&self, xs: impl IntoIterator<Item = &'a ArgumentId>) -> Result<u64> {
        let mut m = 0u64;
        for x in xs {
            let i = self.index_of(x).ok_or_else(|| Error::UnknownArgument(x.to_string()))?;
            m |= 1 << i;
        }
        Ok(m)
    }

    pub fn names_of(&self, mask: u64) -> BTreeSet<ArgumentId> {
        bits(mask).map(|i| self.names[i].clone()).collect()
    }

    /// Union of the attackees of every member of `s`.
    pub fn attacked_by(&self, s: u64) -> u64 {
        bits(s).fold(0, |acc, i| acc | self.succ[i])
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(|m| m.count_ones() as usize).sum()
    }
}

pub(crate) fn mask_of_len(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of the set bits, ascending.
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Bitmasks of every cycle subset, ascending.
///
/// For each start node `s` (the lowest member of the subset), a subset DP over
/// nodes `>= s` records which end nodes are reachable by a path from `s`
/// visiting exactly that subset; the subset is a cycle when some end has an
/// arc back to `s`.
pub(crate) fn cycle_masks(ix: &Indexed, exec: Execution) -> Vec<u64> {
    let n = ix.len();
    let starts: Vec<usize> = (0..n).collect();
    let per_start = par::map(exec, &starts, |&s| cycles_from(ix, s));
    let mut all: Vec<u64> = per_start.into_iter().flatten().collect();
    all.sort_unstable();
    all
}

fn cycles_from(ix: &Indexed, s: usize) -> Vec<u64> {
    let m = ix.len() - s;
    let local = mask_of_len(m);
    let succ: Vec<u64> = (s..ix.len()).map(|i| (ix.succ[i] >> s) & local).collect();
    let back_to_start = (ix.pred[s] >> s) & local;
    let mut ends = vec![0u64; 1usize << m];
    ends[1] = 1;
    let mut found = Vec::new();
    for mask in (1..(1usize << m)).step_by(2) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        if e & back_to_start != 0 {
            found.push((mask as u64) << s);
        }
        for v in bits(e) {
            for w in bits(succ[v] & !(mask as u64)) {
                ends[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    found
}
