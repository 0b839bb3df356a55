//! Resolution through commitment: querying undecided arguments and measuring what remains.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize, Serializer};

use crate::deductive::{Binding, InstantiatedGraph};
use crate::error::{Error, Result};
use crate::graph::{ArgumentGraph, ArgumentId};
use crate::instantiated::measure_bound;
use crate::measure::{measure_graph_with, MeasureId};
use crate::par::Config;
use crate::semantics::{Label, Labelling};
use crate::value::{MeasureValue, WireFraction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    In,
    Out,
}

impl Answer {
    pub fn label(self) -> Label {
        match self {
            Answer::In => Label::In,
            Answer::Out => Label::Out,
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::In => "in",
            Answer::Out => "out",
        })
    }
}

impl FromStr for Answer {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "in" => Ok(Answer::In),
            "out" => Ok(Answer::Out),
            other => Err(format!("unknown answer `{other}` (expected in or out)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub query: ArgumentId,
    pub answer: Answer,
    pub prior: Labelling,
}

/// A graph, the labelling committed so far, and how it got there.
///
/// When built from an instantiated graph the binding is kept so that
/// logic-based measures can be evaluated on the reduced graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommitmentState {
    graph: ArgumentGraph,
    binding: Option<Binding>,
    labelling: Labelling,
    history: Vec<Step>,
}

/// Every argument is labelled `in` or `out`.
pub fn is_committed(l: &Labelling) -> bool {
    l.iter().all(|(_, label)| label != Label::Undec)
}

/// No `in` argument attacks an argument that is not `out`.
pub fn is_strict(g: &ArgumentGraph, l: &Labelling) -> bool {
    g.arcs()
        .iter()
        .all(|(a, b)| l.get(a) != Some(Label::In) || l.get(b) == Some(Label::Out))
}

/// Drops `out` arguments and every arc touching them.
pub fn new_graph(g: &ArgumentGraph, l: &Labelling) -> ArgumentGraph {
    let out = l.out_set();
    g.without(out.iter())
}

impl CommitmentState {
    pub fn new(graph: ArgumentGraph) -> Self {
        let labelling = Labelling::uniform(graph.nodes(), Label::Undec);
        CommitmentState { graph, binding: None, labelling, history: Vec::new() }
    }

    pub fn instantiated(ig: &InstantiatedGraph) -> Self {
        CommitmentState { binding: Some(ig.binding().clone()), ..Self::new(ig.graph().clone()) }
    }

    pub fn graph(&self) -> &ArgumentGraph {
        &self.graph
    }

    pub fn binding(&self) -> Option<&Binding> {
        self.binding.as_ref()
    }

    pub fn labelling(&self) -> &Labelling {
        &self.labelling
    }

    pub fn history(&self) -> &[Step] {
        &self.history
    }

    pub fn is_committed(&self) -> bool {
        is_committed(&self.labelling)
    }

    pub fn is_strict(&self) -> bool {
        is_strict(&self.graph, &self.labelling)
    }

    pub fn reduced(&self) -> ArgumentGraph {
        new_graph(&self.graph, &self.labelling)
    }

    pub fn undecided(&self) -> impl Iterator<Item = &ArgumentId> {
        self.labelling
            .iter()
            .filter(|(_, l)| *l == Label::Undec)
            .map(|(a, _)| a)
    }

    fn labelling_after(&self, query: &ArgumentId, answer: Answer) -> Result<Labelling> {
        match self.labelling.get(query) {
            None => return Err(Error::UnknownArgument(query.to_string())),
            Some(Label::Undec) => {}
            Some(_) => return Err(Error::AlreadyCommitted(query.to_string())),
        }
        let mut next = self.labelling.clone();
        next.set(query.clone(), answer.label());
        if answer == Answer::In {
            let neighbours: Vec<&ArgumentId> = self
                .graph
                .attackers(query)
                .chain(self.graph.attackees(query))
                .collect();
            for n in neighbours {
                if n == query || self.labelling.get(n) == Some(Label::In) {
                    return Err(Error::CommitmentConflict { query: query.to_string(), neighbour: n.to_string() });
                }
                next.set(n.clone(), Label::Out);
            }
        }
        Ok(next)
    }

    /// Commits `query` to `answer`; an `in` answer also commits its attackers and attackees `out`.
    pub fn apply_answer(&self, query: &ArgumentId, answer: Answer) -> Result<CommitmentState> {
        let labelling = self.labelling_after(query, answer)?;
        let mut history = self.history.clone();
        history.push(Step { query: query.clone(), answer, prior: self.labelling.clone() });
        Ok(CommitmentState { graph: self.graph.clone(), binding: self.binding.clone(), labelling, history })
    }

    /// The state before the last answer.
    pub fn undo(&self) -> Result<CommitmentState> {
        let mut history = self.history.clone();
        let last = history.pop().ok_or(Error::EmptyHistory)?;
        Ok(CommitmentState { graph: self.graph.clone(), binding: self.binding.clone(), labelling: last.prior, history })
    }

    /// Replays `steps` from the all-undecided start.
    pub fn replay<'a>(&self, steps: impl IntoIterator<Item = (&'a ArgumentId, Answer)>) -> Result<CommitmentState> {
        let mut state = CommitmentState {
            labelling: Labelling::uniform(self.graph.nodes(), Label::Undec),
            history: Vec::new(),
            ..self.clone()
        };
        for (q, a) in steps {
            state = state.apply_answer(q, a)?;
        }
        Ok(state)
    }

    fn measure_graph(&self, g: &ArgumentGraph, m: MeasureId, cfg: &Config) -> Result<MeasureValue> {
        match &self.binding {
            Some(b) => measure_bound(g, b, m, cfg),
            None => measure_graph_with(g, m, cfg),
        }
    }

    /// The measure on the reduced graph.
    pub fn measure(&self, m: MeasureId) -> Result<MeasureValue> {
        self.measure_with(m, &Config::default())
    }

    pub fn measure_with(&self, m: MeasureId, cfg: &Config) -> Result<MeasureValue> {
        self.measure_graph(&self.reduced(), m, cfg)
    }

    pub fn evaluate_query(&self, query: &ArgumentId, m: MeasureId) -> Result<QueryEvaluation> {
        self.evaluate_query_with(query, m, &Config::default())
    }

    /// Measures the reduced graph under both hypothetical answers.
    ///
    /// An `in` answer that would clash with an existing `in` commitment, or
    /// with a self-attack, is impossible; the expected reduction then rests
    /// on the `out` answer alone.
    pub fn evaluate_query_with(&self, query: &ArgumentId, m: MeasureId, cfg: &Config) -> Result<QueryEvaluation> {
        let current = self.measure_with(m, cfg)?;
        let value_if_in = match self.labelling_after(query, Answer::In) {
            Ok(l) => Some(self.measure_graph(&new_graph(&self.graph, &l), m, cfg)?),
            Err(Error::CommitmentConflict { .. }) => None,
            Err(e) => return Err(e),
        };
        let out = self.labelling_after(query, Answer::Out)?;
        let value_if_out = self.measure_graph(&new_graph(&self.graph, &out), m, cfg)?;
        let expected = match value_if_in {
            Some(vin) => (vin.ratio() + value_if_out.ratio()) / Rational64::from_integer(2),
            None => value_if_out.ratio(),
        };
        Ok(QueryEvaluation {
            argument: query.clone(),
            current,
            value_if_in,
            value_if_out,
            expected_reduction: current.ratio() - expected,
        })
    }

    pub fn recommend_query(&self, m: MeasureId) -> Result<Recommendation> {
        self.recommend_query_with(m, &Config::default())
    }

    /// Scores every undecided argument; the best is the largest expected
    /// reduction, ties going to the smallest identifier.
    pub fn recommend_query_with(&self, m: MeasureId, cfg: &Config) -> Result<Recommendation> {
        let candidates = self
            .undecided()
            .map(|q| self.evaluate_query_with(q, m, cfg))
            .collect::<Result<Vec<_>>>()?;
        let best = candidates
            .iter()
            .fold(None::<&QueryEvaluation>, |best, c| match best {
                Some(b) if b.expected_reduction >= c.expected_reduction => Some(b),
                _ => Some(c),
            })
            .ok_or(Error::NoUndecided)?
            .clone();
        Ok(Recommendation { measure: m, best, candidates })
    }
}

fn signed<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    WireFraction::from_ratio(*r).serialize(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QueryEvaluation {
    pub argument: ArgumentId,
    pub current: MeasureValue,
    /// `None` when committing the argument `in` is impossible.
    pub value_if_in: Option<MeasureValue>,
    pub value_if_out: MeasureValue,
    /// Current value minus the mean over possible answers; negative when a query is expected to raise it.
    #[serde(serialize_with = "signed")]
    pub expected_reduction: Rational64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Recommendation {
    pub measure: MeasureId,
    pub best: QueryEvaluation,
    pub candidates: Vec<QueryEvaluation>,
}
