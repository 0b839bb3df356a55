//! JSON measure reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::measure::MeasureId;
use crate::value::MeasureValue;

/// Wall-clock cost per measure in microseconds; omitted unless requested so output stays reproducible.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub total_us: u128,
    pub per_measure_us: BTreeMap<String, u128>,
}

/// Measure values keyed by measure code, as exact fractions and decimals.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub graph: String,
    pub values: BTreeMap<String, String>,
    pub approx: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<Timing>,
}

impl MeasureReport {
    pub fn new(graph: impl Into<String>) -> Self {
        MeasureReport { graph: graph.into(), ..Default::default() }
    }

    pub fn insert(&mut self, m: MeasureId, v: MeasureValue) {
        self.values.insert(m.code().to_string(), v.to_string());
        self.approx.insert(m.code().to_string(), v.approx());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned `measure  fraction  decimal` rows in insertion-independent key order.
    pub fn to_table(&self) -> String {
        let width = self.values.keys().map(String::len).max().unwrap_or(0).max(7);
        let mut out = format!("{:<width$}  {:>10}  {:>12}\n", "measure", "value", "approx");
        for (k, v) in &self.values {
            out.push_str(&format!("{k:<width$}  {v:>10}  {:>12.6}\n", self.approx[k]));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_canonical_json() {
        let mut r = MeasureReport::new("g.tgf");
        r.insert(MeasureId::Win, MeasureValue::new(2, 4));
        r.insert(MeasureId::In, MeasureValue::integer(3));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["values"]["in"], "3/1");
        assert_eq!(json["values"]["win"], "1/2");
        assert!(json.get("timing").is_none());
        let keys: Vec<_> = json["values"].as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["in", "win"]);
    }
}
