//! Measures computed from the shape of the attack graph alone.

use crate::error::Result;
use crate::graph::{cycle_masks, ArgumentGraph, Indexed};
use crate::par::Config;
use crate::value::MeasureValue;

/// 1 if there is any attack, 0 otherwise.
pub fn i_dr(g: &ArgumentGraph) -> MeasureValue {
    if g.arc_count() > 0 {
        MeasureValue::ONE
    } else {
        MeasureValue::ZERO
    }
}

/// Sum of indegrees, which is the number of arcs.
pub fn i_in(g: &ArgumentGraph) -> MeasureValue {
    g.nodes()
        .iter()
        .map(|a| MeasureValue::from_count(g.attackers(a).count()))
        .sum()
}

fn inverse_degree_sum(degrees: impl Iterator<Item = usize>) -> MeasureValue {
    degrees
        .filter(|&d| d > 0)
        .map(|d| MeasureValue::new(1, d as i64))
        .sum()
}

/// Sum of `1/indegree` over attacked nodes.
pub fn i_win(g: &ArgumentGraph) -> MeasureValue {
    inverse_degree_sum(g.nodes().iter().map(|a| g.attackers(a).count()))
}

/// Sum of `1/outdegree` over attacking nodes.
pub fn i_wou(g: &ArgumentGraph) -> MeasureValue {
    inverse_degree_sum(g.nodes().iter().map(|a| g.attackees(a).count()))
}

fn cycle_sizes(g: &ArgumentGraph, cfg: &Config) -> Result<Vec<u32>> {
    let ix = Indexed::with_cap(g, cfg.limits.max_nodes, "cycle enumeration")?;
    Ok(cycle_masks(&ix, cfg.exec).into_iter().map(u64::count_ones).collect())
}

/// Number of node subsets carrying a directed cycle through all their members.
pub fn i_cc(g: &ArgumentGraph) -> Result<MeasureValue> {
    i_cc_with(g, &Config::default())
}

pub fn i_cc_with(g: &ArgumentGraph, cfg: &Config) -> Result<MeasureValue> {
    Ok(MeasureValue::from_count(cycle_sizes(g, cfg)?.len()))
}

/// Sum of `1/|C|` over cycles `C`.
pub fn i_wcc(g: &ArgumentGraph) -> Result<MeasureValue> {
    i_wcc_with(g, &Config::default())
}

pub fn i_wcc_with(g: &ArgumentGraph, cfg: &Config) -> Result<MeasureValue> {
    Ok(cycle_sizes(g, cfg)?
        .into_iter()
        .map(|k| MeasureValue::new(1, k as i64))
        .sum())
}

/// Sum of `(|X| - 1)^2` over multi-node components `X`.
pub fn i_ic(g: &ArgumentGraph) -> MeasureValue {
    g.multi_node_components()
        .iter()
        .map(|c| {
            let k = c.node_count() as i64 - 1;
            MeasureValue::integer(k * k)
        })
        .sum()
}
