//! Measures derived from the extensions of a graph.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{ArgumentGraph, ArgumentId, Indexed};
use crate::par::{self, Config};
use crate::semantics::{self, Extension, SemanticsKind};
use crate::value::MeasureValue;

/// Witness for [`i_ust`]: removing `removed` leaves a graph with the given stable extension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalCertificate {
    pub removed: BTreeSet<ArgumentId>,
    pub remaining_stable_extension: Extension,
}

impl RemovalCertificate {
    /// Re-checks the certificate against `g` with the extension enumerator.
    pub fn validate(&self, g: &ArgumentGraph) -> Result<bool> {
        let reduced = g.without(&self.removed);
        let stable = semantics::extensions(&reduced, SemanticsKind::Stable)?;
        Ok(stable.contains(&self.remaining_stable_extension))
    }
}

/// Number of preferred extensions minus one.
pub fn i_pr(g: &ArgumentGraph) -> Result<MeasureValue> {
    i_pr_with(g, &Config::default())
}

pub fn i_pr_with(g: &ArgumentGraph, cfg: &Config) -> Result<MeasureValue> {
    let ix = Indexed::with_cap(g, cfg.limits.max_nodes, "preferred extensions")?;
    let n = semantics::preferred_masks(&ix, cfg.exec).len();
    Ok(MeasureValue::from_count(n - 1))
}

/// Arguments neither in the grounded extension nor attacked by it.
pub fn i_ngr(g: &ArgumentGraph) -> Result<MeasureValue> {
    let ix = Indexed::with_cap(g, 64, "grounded extension")?;
    let gr = semantics::grounded_mask(&ix);
    let settled = gr | ix.attacked_by(gr);
    Ok(MeasureValue::from(ix.len() - settled.count_ones() as usize))
}

/// A stable extension of the subgraph induced on `keep`, if any.
fn stable_within(ix: &Indexed, keep: u64) -> Option<u64> {
    let mut s = keep;
    loop {
        let hit = ix.attacked_by(s);
        if hit & s == 0 && (hit | s) & keep == keep {
            return Some(s);
        }
        if s == 0 {
            return None;
        }
        s = (s - 1) & keep;
    }
}

/// Removal sets of size `k` over `n` elements, in lexicographic order of their
/// sorted index sequences.
fn combinations(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | 1 << i));
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            return out;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Minimum number of arguments whose removal leaves a stable extension, with a
/// witness. Among minimum removal sets the lexicographically smallest is chosen.
pub fn i_ust(g: &ArgumentGraph) -> Result<(MeasureValue, RemovalCertificate)> {
    i_ust_with(g, &Config::default())
}

pub fn i_ust_with(g: &ArgumentGraph, cfg: &Config) -> Result<(MeasureValue, RemovalCertificate)> {
    let ix = Indexed::with_cap(g, cfg.limits.max_nodes, "stable removal search")?;
    let full = ix.full();
    for k in 0..=ix.len() {
        let candidates = combinations(ix.len(), k);
        let hits = par::filter_map(cfg.exec, &candidates, |&y| {
            stable_within(&ix, full & !y).map(|s| (y, s))
        });
        if let Some(&(y, s)) = hits.first() {
            let cert = RemovalCertificate {
                removed: ix.names_of(y),
                remaining_stable_extension: ix.names_of(s),
            };
            return Ok((MeasureValue::from_count(k), cert));
        }
    }
    unreachable!("removing every argument leaves the empty graph, whose stable extension is empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::id;

    fn g(nodes: &[&str], arcs: &[(&str, &str)]) -> ArgumentGraph {
        ArgumentGraph::from_names(nodes.iter().copied(), arcs.iter().copied()).unwrap()
    }

    fn int(n: i64) -> MeasureValue {
        MeasureValue::integer(n)
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2), vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(combinations(3, 0), vec![0]);
        assert_eq!(combinations(2, 2), vec![0b11]);
    }

    #[test]
    fn preferred_count() {
        assert_eq!(i_pr(&g(&["a", "b"], &[])).unwrap(), int(0));
        assert_eq!(i_pr(&g(&[], &[("A4", "A5"), ("A5", "A4")])).unwrap(), int(1));
        let three = g(
            &[],
            &[("a", "b"), ("b", "a"), ("c", "d"), ("d", "c"), ("e", "f"), ("f", "e")],
        );
        assert_eq!(i_pr(&three).unwrap(), int(7));
    }

    #[test]
    fn not_grounded() {
        assert_eq!(i_ngr(&g(&["a"], &[])).unwrap(), int(0));
        assert_eq!(i_ngr(&g(&[], &[("A4", "A5"), ("A5", "A4")])).unwrap(), int(2));
        assert_eq!(i_ngr(&g(&[], &[("A1", "A2"), ("A2", "A1"), ("A3", "A2")])).unwrap(), int(0));
    }

    #[test]
    fn unstable_count_with_certificates() {
        let tri = g(&[], &[("A", "B"), ("B", "C"), ("C", "A")]);
        let (v, cert) = i_ust(&tri).unwrap();
        assert_eq!(v, int(1));
        assert_eq!(cert.removed, [id("A")].into());
        assert!(cert.validate(&tri).unwrap());

        let loops = g(&[], &[("a", "a"), ("b", "b"), ("c", "c")]);
        let (v, cert) = i_ust(&loops).unwrap();
        assert_eq!(v, int(3));
        assert!(cert.remaining_stable_extension.is_empty());
        assert!(cert.validate(&loops).unwrap());

        let rescued = g(&[], &[("a", "a"), ("b", "b"), ("c", "c"), ("d", "a"), ("d", "b"), ("d", "c")]);
        let (v, cert) = i_ust(&rescued).unwrap();
        assert_eq!(v, int(0));
        assert_eq!(cert.remaining_stable_extension, [id("d")].into());

        let (v, _) = i_ust(&ArgumentGraph::empty()).unwrap();
        assert_eq!(v, int(0));
    }

    #[test]
    fn inversion_changes_unstable_count() {
        let fan = g(&[], &[("d", "a"), ("d", "b"), ("a", "a"), ("b", "b")]);
        assert_eq!(i_ust(&fan).unwrap().0, int(0));
        assert_eq!(i_ust(&fan.invert()).unwrap().0, int(2));
    }
}
