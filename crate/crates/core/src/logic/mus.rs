//! Minimal inconsistent subsets and the measures built on them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::par::{self, Config};
use crate::value::MeasureValue;

use super::formula::{Formula, KnowledgeBase};
use super::sat;

fn combinations(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for m in 0u64..1 << n {
        if m.count_ones() as usize == k {
            out.push(m);
        }
    }
    out
}

/// All subset-minimal inconsistent subsets of `kb`, found level by level.
///
/// A candidate at size `k` that contains no smaller inconsistent subset found
/// earlier has only consistent proper subsets, so inconsistency alone makes it minimal.
pub fn min_inconsistent_subsets(kb: &KnowledgeBase) -> Result<BTreeSet<KnowledgeBase>> {
    min_inconsistent_subsets_with(kb, &Config::default())
}

pub fn min_inconsistent_subsets_with(kb: &KnowledgeBase, cfg: &Config) -> Result<BTreeSet<KnowledgeBase>> {
    let cap = cfg.limits.max_formulas;
    if kb.len() > cap {
        return Err(Error::ResourceLimit {
            what: "minimal inconsistent subset enumeration",
            size: kb.len(),
            cap,
        });
    }
    super::check_atoms(kb.iter(), &cfg.limits)?;
    let fs: Vec<&Formula> = kb.iter().collect();
    let pick = |m: u64| (0..fs.len()).filter(move |i| m >> i & 1 == 1).map(|i| fs[i]);
    if sat::satisfiable(fs.iter().copied()) {
        return Ok(BTreeSet::new());
    }
    let mut found: Vec<u64> = Vec::new();
    for k in 1..=fs.len() {
        let fresh: Vec<u64> = combinations(fs.len(), k)
            .into_iter()
            .filter(|&m| !found.iter().any(|&f| f & m == f))
            .collect();
        let hits = par::filter_map(cfg.exec, &fresh, |&m| (!sat::satisfiable(pick(m))).then_some(m));
        found.extend(hits);
    }
    Ok(found
        .into_iter()
        .map(|m| pick(m).cloned().collect())
        .collect())
}

/// Number of minimal inconsistent subsets.
pub fn i_m(kb: &KnowledgeBase) -> Result<MeasureValue> {
    Ok(MeasureValue::from_count(min_inconsistent_subsets(kb)?.len()))
}

/// Sum of `1/|X|` over minimal inconsistent subsets `X`.
pub fn i_sharp(kb: &KnowledgeBase) -> Result<MeasureValue> {
    Ok(min_inconsistent_subsets(kb)?
        .iter()
        .map(|x| MeasureValue::new(1, x.len() as i64))
        .sum())
}
