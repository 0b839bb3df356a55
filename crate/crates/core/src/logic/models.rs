//! Worlds over a restricted atom set, the Dalal distance and the degree of conflict.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::bits;
use crate::par::{self, Config};
use crate::value::MeasureValue;

use super::formula::Formula;

/// Non-empty set of atoms that worlds range over.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtomSet(BTreeSet<String>);

impl AtomSet {
    pub fn new<S: Into<String>>(atoms: impl IntoIterator<Item = S>) -> Result<Self> {
        let set: BTreeSet<String> = atoms.into_iter().map(Into::into).collect();
        if set.is_empty() {
            Err(Error::EmptyAtomSet)
        } else {
            Ok(AtomSet(set))
        }
    }

    pub fn atoms(&self) -> &BTreeSet<String> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn indexed(&self) -> Vec<&str> {
        self.0.iter().map(String::as_str).collect()
    }
}

/// The atoms assigned true; every other atom, inside or outside the atom set, is false.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct World(BTreeSet<String>);

impl World {
    pub fn new<S: Into<String>>(atoms: impl IntoIterator<Item = S>) -> Self {
        World(atoms.into_iter().map(Into::into).collect())
    }

    pub fn true_atoms(&self) -> &BTreeSet<String> {
        &self.0
    }

    pub fn satisfies(&self, f: &Formula) -> bool {
        f.eval(&|a| self.0.contains(a))
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(String::as_str).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Size of the symmetric difference of the true-atom sets.
pub fn dalal(w1: &World, w2: &World) -> usize {
    w1.0.symmetric_difference(&w2.0).count()
}

fn check_width(pi: &AtomSet, cfg: &Config) -> Result<()> {
    if pi.len() > cfg.limits.max_atoms {
        return Err(Error::ResourceLimit {
            what: "restricted model enumeration",
            size: pi.len(),
            cap: cfg.limits.max_atoms,
        });
    }
    Ok(())
}

/// Bitmask models of `phi` over `atoms` under the closed-world valuation.
fn model_masks(phi: &[&Formula], atoms: &[&str], cfg: &Config) -> Vec<u64> {
    let space = 1u64 << atoms.len();
    let index: HashMap<&str, usize> = atoms.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    par::filter_range(cfg.exec, 0..space, |w| {
        let val = |a: &str| index.get(a).is_some_and(|i| w >> i & 1 == 1);
        phi.iter().all(|f| f.eval(&val))
    })
}

/// All subsets of `pi` whose closed-world valuation satisfies every formula of `phi`.
pub fn restricted_models<'a>(phi: impl IntoIterator<Item = &'a Formula>, pi: &AtomSet) -> Result<BTreeSet<World>> {
    restricted_models_with(phi, pi, &Config::default())
}

pub fn restricted_models_with<'a>(
    phi: impl IntoIterator<Item = &'a Formula>,
    pi: &AtomSet,
    cfg: &Config,
) -> Result<BTreeSet<World>> {
    check_width(pi, cfg)?;
    let phi: Vec<&Formula> = phi.into_iter().collect();
    let atoms = pi.indexed();
    Ok(model_masks(&phi, &atoms, cfg)
        .into_iter()
        .map(|m| World(bits(m).map(|i| atoms[i].to_string()).collect()))
        .collect())
}

/// Minimum Dalal distance between restricted models of `phi` and `psi`, over `|pi|`.
pub fn conflict<'a, 'b>(
    phi: impl IntoIterator<Item = &'a Formula>,
    psi: impl IntoIterator<Item = &'b Formula>,
    pi: &AtomSet,
) -> Result<MeasureValue> {
    conflict_with(phi, psi, pi, &Config::default())
}

pub fn conflict_with<'a, 'b>(
    phi: impl IntoIterator<Item = &'a Formula>,
    psi: impl IntoIterator<Item = &'b Formula>,
    pi: &AtomSet,
    cfg: &Config,
) -> Result<MeasureValue> {
    check_width(pi, cfg)?;
    let atoms = pi.indexed();
    let phi: Vec<&Formula> = phi.into_iter().collect();
    let psi: Vec<&Formula> = psi.into_iter().collect();
    let left = model_masks(&phi, &atoms, cfg);
    if left.is_empty() {
        return Err(Error::EmptyModels("the first formula set"));
    }
    let right = model_masks(&psi, &atoms, cfg);
    if right.is_empty() {
        return Err(Error::EmptyModels("the second formula set"));
    }
    let best = par::map(cfg.exec, &left, |l| {
        right.iter().map(|r| (l ^ r).count_ones()).min().expect("non-empty")
    })
    .into_iter()
    .min()
    .expect("non-empty");
    Ok(MeasureValue::new(best as i64, pi.len() as i64))
}
