//! Registry of measure identifiers shared by the CLI, the service and the property checkers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension;
use crate::graph::ArgumentGraph;
use crate::par::Config;
use crate::structure;
use crate::value::MeasureValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum MeasureId {
    Dr,
    In,
    Win,
    Wou,
    Cc,
    Wcc,
    Ic,
    Pr,
    Ngr,
    Ust,
    Cu,
    CM,
    CSharp,
    SM,
    SSharp,
}

impl MeasureId {
    pub const ALL: [MeasureId; 15] = [
        MeasureId::Dr,
        MeasureId::In,
        MeasureId::Win,
        MeasureId::Wou,
        MeasureId::Cc,
        MeasureId::Wcc,
        MeasureId::Ic,
        MeasureId::Pr,
        MeasureId::Ngr,
        MeasureId::Ust,
        MeasureId::Cu,
        MeasureId::CM,
        MeasureId::CSharp,
        MeasureId::SM,
        MeasureId::SSharp,
    ];

    pub const STRUCTURE: [MeasureId; 7] = [
        MeasureId::Dr,
        MeasureId::In,
        MeasureId::Win,
        MeasureId::Wou,
        MeasureId::Cc,
        MeasureId::Wcc,
        MeasureId::Ic,
    ];

    pub const EXTENSION: [MeasureId; 3] = [MeasureId::Pr, MeasureId::Ngr, MeasureId::Ust];

    pub const INSTANTIATED: [MeasureId; 5] =
        [MeasureId::Cu, MeasureId::CM, MeasureId::CSharp, MeasureId::SM, MeasureId::SSharp];

    pub fn code(self) -> &'static str {
        match self {
            MeasureId::Dr => "dr",
            MeasureId::In => "in",
            MeasureId::Win => "win",
            MeasureId::Wou => "wou",
            MeasureId::Cc => "cc",
            MeasureId::Wcc => "wcc",
            MeasureId::Ic => "ic",
            MeasureId::Pr => "pr",
            MeasureId::Ngr => "ngr",
            MeasureId::Ust => "ust",
            MeasureId::Cu => "cu",
            MeasureId::CM => "C_M",
            MeasureId::CSharp => "C_#",
            MeasureId::SM => "S_M",
            MeasureId::SSharp => "S_#",
        }
    }

    /// Whether the measure reads only the attack graph.
    pub fn is_abstract(self) -> bool {
        !MeasureId::INSTANTIATED.contains(&self)
    }

    /// Parses a comma-separated list such as `dr,in,win`.
    pub fn parse_list(s: &str) -> Result<Vec<MeasureId>> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse())
            .collect()
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for MeasureId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MeasureId::ALL
            .into_iter()
            .find(|m| m.code() == s)
            .ok_or_else(|| Error::UnknownMeasure(s.to_string()))
    }
}

impl TryFrom<String> for MeasureId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<MeasureId> for String {
    fn from(m: MeasureId) -> String {
        m.code().to_string()
    }
}

/// Evaluates an abstract measure on `g`.
pub fn measure_graph(g: &ArgumentGraph, m: MeasureId) -> Result<MeasureValue> {
    measure_graph_with(g, m, &Config::default())
}

pub fn measure_graph_with(g: &ArgumentGraph, m: MeasureId, cfg: &Config) -> Result<MeasureValue> {
    match m {
        MeasureId::Dr => Ok(structure::i_dr(g)),
        MeasureId::In => Ok(structure::i_in(g)),
        MeasureId::Win => Ok(structure::i_win(g)),
        MeasureId::Wou => Ok(structure::i_wou(g)),
        MeasureId::Cc => structure::i_cc_with(g, cfg),
        MeasureId::Wcc => structure::i_wcc_with(g, cfg),
        MeasureId::Ic => Ok(structure::i_ic(g)),
        MeasureId::Pr => extension::i_pr_with(g, cfg),
        MeasureId::Ngr => extension::i_ngr(g),
        MeasureId::Ust => extension::i_ust_with(g, cfg).map(|(v, _)| v),
        other => Err(Error::NeedsInstantiation(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        for m in MeasureId::ALL {
            assert_eq!(m.code().parse::<MeasureId>().unwrap(), m);
        }
        assert_eq!(MeasureId::parse_list("dr, in,C_#").unwrap(), vec![MeasureId::Dr, MeasureId::In, MeasureId::CSharp]);
        assert!(matches!("foo".parse::<MeasureId>(), Err(Error::UnknownMeasure(_))));
    }

    #[test]
    fn instantiated_measures_need_instantiation() {
        let g = ArgumentGraph::empty();
        assert!(matches!(measure_graph(&g, MeasureId::Cu), Err(Error::NeedsInstantiation(_))));
        assert!(measure_graph(&g, MeasureId::Ust).unwrap().is_zero());
    }
}
