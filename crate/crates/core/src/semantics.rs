//! Extension-based and labelling-based argumentation semantics.
//!
//! The two routes are computed independently: extensions by filtering the
//! subset lattice with the `Defended` operator, labellings by a backtracking
//! search over in/out/undec assignments checked against the labelling
//! conditions. Tests cross-validate them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, ArgumentGraph, ArgumentId, Indexed};
use crate::par::{self, Config, Execution};

pub type Extension = BTreeSet<ArgumentId>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SemanticsKind {
    #[serde(rename = "co")]
    Complete,
    #[serde(rename = "gr")]
    Grounded,
    #[serde(rename = "pr")]
    Preferred,
    #[serde(rename = "st")]
    Stable,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 4] = [
        SemanticsKind::Complete,
        SemanticsKind::Grounded,
        SemanticsKind::Preferred,
        SemanticsKind::Stable,
    ];

    pub fn code(self) -> &'static str {
        match self {
            SemanticsKind::Complete => "co",
            SemanticsKind::Grounded => "gr",
            SemanticsKind::Preferred => "pr",
            SemanticsKind::Stable => "st",
        }
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for SemanticsKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "co" | "complete" => Ok(SemanticsKind::Complete),
            "gr" | "grounded" => Ok(SemanticsKind::Grounded),
            "pr" | "preferred" => Ok(SemanticsKind::Preferred),
            "st" | "stable" => Ok(SemanticsKind::Stable),
            other => Err(format!("unknown semantics `{other}` (expected co, gr, pr or st)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    In,
    Out,
    Undec,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::In => "in",
            Label::Out => "out",
            Label::Undec => "undec",
        })
    }
}

impl FromStr for Label {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "in" => Ok(Label::In),
            "out" => Ok(Label::Out),
            "undec" => Ok(Label::Undec),
            other => Err(format!("unknown label `{other}`")),
        }
    }
}

/// Total map from arguments to labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labelling(BTreeMap<ArgumentId, Label>);

impl Labelling {
    pub fn uniform<'a>(nodes: impl IntoIterator<Item = &'a ArgumentId>, label: Label) -> Self {
        Labelling(nodes.into_iter().map(|n| (n.clone(), label)).collect())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (ArgumentId, Label)>) -> Self {
        Labelling(pairs.into_iter().collect())
    }

    pub fn get(&self, a: &ArgumentId) -> Option<Label> {
        self.0.get(a).copied()
    }

    pub fn set(&mut self, a: ArgumentId, label: Label) {
        self.0.insert(a, label);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ArgumentId, Label)> {
        self.0.iter().map(|(a, l)| (a, *l))
    }

    pub fn with(&self, label: Label) -> BTreeSet<ArgumentId> {
        self.iter().filter(|(_, l)| *l == label).map(|(a, _)| a.clone()).collect()
    }

    pub fn in_set(&self) -> BTreeSet<ArgumentId> {
        self.with(Label::In)
    }

    pub fn out_set(&self) -> BTreeSet<ArgumentId> {
        self.with(Label::Out)
    }

    pub fn undec_set(&self) -> BTreeSet<ArgumentId> {
        self.with(Label::Undec)
    }

    pub fn domain(&self) -> impl Iterator<Item = &ArgumentId> {
        self.0.keys()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Errors unless the domain is exactly the node set of `g`.
    pub fn check_domain(&self, g: &ArgumentGraph) -> Result<()> {
        if self.0.keys().eq(g.nodes().iter()) {
            Ok(())
        } else {
            Err(Error::LabellingMismatch(format!(
                "labelled {} arguments, graph has {}",
                self.0.len(),
                g.node_count()
            )))
        }
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(a, l)| format!("{a}={l}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn labelling_to_extension(l: &Labelling) -> Extension {
    l.in_set()
}

fn require_all<'a>(g: &ArgumentGraph, xs: impl IntoIterator<Item = &'a ArgumentId>) -> Result<()> {
    for x in xs {
        if !g.contains(x) {
            return Err(Error::UnknownArgument(x.to_string()));
        }
    }
    Ok(())
}

/// Some member of `s` attacks `a`.
pub fn attacks(g: &ArgumentGraph, s: &Extension, a: &ArgumentId) -> Result<bool> {
    require_all(g, s.iter().chain(Some(a)))?;
    Ok(g.attackers(a).any(|b| s.contains(b)))
}

/// Every attacker of `a` is attacked by `s`.
pub fn defends(g: &ArgumentGraph, s: &Extension, a: &ArgumentId) -> Result<bool> {
    require_all(g, s.iter().chain(Some(a)))?;
    for b in g.attackers(a) {
        if !attacks(g, s, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_conflict_free(g: &ArgumentGraph, s: &Extension) -> Result<bool> {
    require_all(g, s)?;
    Ok(!g.arcs().iter().any(|(a, b)| s.contains(a) && s.contains(b)))
}

pub fn is_admissible(g: &ArgumentGraph, s: &Extension) -> Result<bool> {
    if !is_conflict_free(g, s)? {
        return Ok(false);
    }
    for a in s {
        if !defends(g, s, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Conflict-free and equal to the set of arguments it defends.
pub fn is_complete_extension(g: &ArgumentGraph, s: &Extension) -> Result<bool> {
    if !is_conflict_free(g, s)? {
        return Ok(false);
    }
    for a in g.nodes() {
        if defends(g, s, a)? != s.contains(a) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_stable_extension(g: &ArgumentGraph, s: &Extension) -> Result<bool> {
    if !is_conflict_free(g, s)? {
        return Ok(false);
    }
    for a in g.nodes() {
        if !s.contains(a) && !attacks(g, s, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---- bitmask kernels -------------------------------------------------------

pub(crate) fn conflict_free_mask(ix: &Indexed, s: u64) -> bool {
    ix.attacked_by(s) & s == 0
}

pub(crate) fn defended_mask(ix: &Indexed, s: u64) -> u64 {
    let hit = ix.attacked_by(s);
    (0..ix.len())
        .filter(|&a| ix.pred[a] & !hit == 0)
        .fold(0, |acc, a| acc | 1 << a)
}

pub(crate) fn complete_masks(ix: &Indexed, exec: Execution) -> Vec<u64> {
    let space = 1u64 << ix.len();
    par::filter_range(exec, 0..space, |s| conflict_free_mask(ix, s) && defended_mask(ix, s) == s)
}

/// Least fixpoint of `Defended` starting from the empty set.
pub(crate) fn grounded_mask(ix: &Indexed) -> u64 {
    let mut s = 0u64;
    loop {
        let next = defended_mask(ix, s);
        if next == s {
            return s;
        }
        s = next;
    }
}

fn maximal(masks: &[u64]) -> Vec<u64> {
    masks
        .iter()
        .copied()
        .filter(|&m| !masks.iter().any(|&o| o != m && o & m == m))
        .collect()
}

fn minimal(masks: &[u64]) -> Vec<u64> {
    masks
        .iter()
        .copied()
        .filter(|&m| !masks.iter().any(|&o| o != m && o & m == o))
        .collect()
}

pub(crate) fn preferred_masks(ix: &Indexed, exec: Execution) -> Vec<u64> {
    maximal(&complete_masks(ix, exec))
}

/// Preferred extensions that attack every outsider.
pub(crate) fn stable_masks(ix: &Indexed, exec: Execution) -> Vec<u64> {
    let full = ix.full();
    preferred_masks(ix, exec)
        .into_iter()
        .filter(|&s| ix.attacked_by(s) | s == full)
        .collect()
}

pub(crate) fn extension_masks(ix: &Indexed, kind: SemanticsKind, exec: Execution) -> Vec<u64> {
    match kind {
        SemanticsKind::Complete => complete_masks(ix, exec),
        SemanticsKind::Grounded => vec![grounded_mask(ix)],
        SemanticsKind::Preferred => preferred_masks(ix, exec),
        SemanticsKind::Stable => stable_masks(ix, exec),
    }
}

pub fn extensions(g: &ArgumentGraph, kind: SemanticsKind) -> Result<BTreeSet<Extension>> {
    extensions_with(g, kind, &Config::default())
}

pub fn extensions_with(g: &ArgumentGraph, kind: SemanticsKind, cfg: &Config) -> Result<BTreeSet<Extension>> {
    let ix = Indexed::with_cap(g, cfg.limits.max_nodes, "extension enumeration")?;
    Ok(extension_masks(&ix, kind, cfg.exec)
        .into_iter()
        .map(|m| ix.names_of(m))
        .collect())
}

/// The grounded extension by fixpoint iteration; polynomial, so uncapped beyond 64 nodes.
pub fn grounded_extension(g: &ArgumentGraph) -> Result<Extension> {
    let ix = Indexed::with_cap(g, 64, "grounded extension")?;
    Ok(ix.names_of(grounded_mask(&ix)))
}

// ---- labellings ------------------------------------------------------------

/// Checks the admissibility and completeness conditions of a labelling pointwise.
pub fn is_complete_labelling(g: &ArgumentGraph, l: &Labelling) -> Result<bool> {
    l.check_domain(g)?;
    for a in g.nodes() {
        let label = l.get(a).expect("domain checked");
        let attackers: Vec<Label> = g.attackers(a).map(|b| l.get(b).expect("domain checked")).collect();
        let ok = match label {
            Label::Out => attackers.contains(&Label::In),
            Label::In => attackers.iter().all(|&x| x == Label::Out),
            Label::Undec => !attackers.contains(&Label::In) && attackers.iter().any(|&x| x != Label::Out),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

struct LabelSearch<'a> {
    ix: &'a Indexed,
    labels: Vec<Option<Label>>,
    out: Vec<Vec<Label>>,
}

impl LabelSearch<'_> {
    /// Local consistency of node `j` given the labels assigned so far.
    fn locally_ok(&self, j: usize) -> bool {
        let Some(lj) = self.labels[j] else { return true };
        let mut any_in = false;
        let mut any_not_out = false;
        let mut all_assigned = true;
        for b in bits(self.ix.pred[j]) {
            match self.labels[b] {
                Some(Label::In) => any_in = true,
                Some(Label::Undec) => any_not_out = true,
                Some(Label::Out) => {}
                None => {
                    all_assigned = false;
                    any_not_out = true;
                }
            }
        }
        match lj {
            Label::In => !any_in && !(any_not_out && all_assigned),
            Label::Out => any_in || !all_assigned,
            Label::Undec => !any_in && any_not_out,
        }
    }

    fn run(&mut self, k: usize) {
        if k == self.ix.len() {
            self.out.push(self.labels.iter().map(|l| l.expect("assigned")).collect());
            return;
        }
        for label in [Label::In, Label::Out, Label::Undec] {
            self.labels[k] = Some(label);
            // k itself plus everything k attacks may be affected
            let touched = self.ix.succ[k] | 1 << k;
            if bits(touched).all(|j| self.locally_ok(j)) {
                self.run(k + 1);
            }
        }
        self.labels[k] = None;
    }
}

fn complete_labellings(ix: &Indexed) -> Vec<Vec<Label>> {
    let mut search = LabelSearch {
        ix,
        labels: vec![None; ix.len()],
        out: Vec::new(),
    };
    search.run(0);
    search.out
}

pub fn labellings(g: &ArgumentGraph, kind: SemanticsKind) -> Result<BTreeSet<Labelling>> {
    labellings_with(g, kind, &Config::default())
}

pub fn labellings_with(g: &ArgumentGraph, kind: SemanticsKind, cfg: &Config) -> Result<BTreeSet<Labelling>> {
    let ix = Indexed::with_cap(g, cfg.limits.max_nodes, "labelling enumeration")?;
    let all = complete_labellings(&ix);
    let in_mask = |ls: &Vec<Label>| {
        ls.iter()
            .enumerate()
            .filter(|(_, l)| **l == Label::In)
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    };
    let masks: Vec<u64> = all.iter().map(in_mask).collect();
    let keep: Vec<bool> = match kind {
        SemanticsKind::Complete => vec![true; all.len()],
        SemanticsKind::Grounded => {
            let mins = minimal(&masks);
            masks.iter().map(|m| mins.contains(m)).collect()
        }
        SemanticsKind::Preferred => {
            let maxs = maximal(&masks);
            masks.iter().map(|m| maxs.contains(m)).collect()
        }
        SemanticsKind::Stable => all.iter().map(|ls| !ls.contains(&Label::Undec)).collect(),
    };
    Ok(all
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(ls, _)| Labelling(ix.names.iter().cloned().zip(ls).collect()))
        .collect())
}
