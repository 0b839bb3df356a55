use std::collections::BTreeMap;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use argmeter::io::{parse_document, DocumentFormat};
use argmeter::resolution::Step;
use argmeter::{Answer, ArgumentGraph, ArgumentId, CommitmentState, Config, Labelling, MeasureId, MeasureValue};
use serde::{Deserialize, Serialize};

use crate::error::{ApiError, ApiResult};

pub fn now_ms() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_millis() as u64).unwrap_or(0)
}

pub fn fresh_id() -> String {
    format!("{:032x}", rand::random::<u128>())
}

/// The measures used when a request names none.
pub const DEFAULT_MEASURES: [MeasureId; 1] = [MeasureId::In];

/// One resolution session: the document it started from and the current commitment state.
#[derive(Debug, Clone)]
pub struct Session {
    pub id: String,
    pub document: String,
    pub format: DocumentFormat,
    pub measures: Vec<MeasureId>,
    pub state: CommitmentState,
    pub version: u64,
    pub created: u64,
    pub updated: u64,
}

impl Session {
    /// Parses the document and checks every selected measure applies to it.
    pub fn create(
        id: String,
        document: String,
        format: Option<DocumentFormat>,
        measures: Vec<MeasureId>,
        cfg: &Config,
    ) -> ApiResult<Session> {
        let format = format.unwrap_or_else(|| DocumentFormat::sniff(&document));
        let doc = parse_document(&document, Some(format))?;
        if doc.graph().node_count() == 0 {
            return Err(ApiError::new(
                axum::http::StatusCode::BAD_REQUEST,
                "empty-graph",
                "the document has no arguments to resolve",
            ));
        }
        let measures = if measures.is_empty() { DEFAULT_MEASURES.to_vec() } else { dedup(measures) };
        let state = doc.into_state();
        for &m in &measures {
            state.measure_with(m, cfg)?;
        }
        let t = now_ms();
        Ok(Session { id, document, format, measures, state, version: 0, created: t, updated: t })
    }

    pub fn commit(&mut self, state: CommitmentState) {
        self.state = state;
        self.version += 1;
        self.updated = now_ms();
    }

    pub fn values(&self, cfg: &Config) -> ApiResult<BTreeMap<MeasureId, MeasureValue>> {
        values_of(&self.state, &self.measures, cfg)
    }

    pub fn view(&self, cfg: &Config) -> ApiResult<SessionView> {
        Ok(SessionView {
            id: self.id.clone(),
            version: self.version,
            format: self.format,
            measures: self.measures.clone(),
            graph: self.state.graph().clone(),
            labelling: self.state.labelling().clone(),
            reduced: self.state.reduced(),
            values: self.values(cfg)?,
            committed: self.state.is_committed(),
            history: self.state.history().iter().map(HistoryEntry::from).collect(),
            created: self.created,
            updated: self.updated,
        })
    }

    /// Measure values after each answered step, replayed from the start.
    pub fn transcript(&self, cfg: &Config) -> ApiResult<Vec<TranscriptEntry>> {
        let steps: Vec<(&ArgumentId, Answer)> = self.state.history().iter().map(|s| (&s.query, s.answer)).collect();
        let mut state = self.state.replay([])?;
        let mut out = Vec::with_capacity(steps.len());
        for (i, &(q, a)) in steps.iter().enumerate() {
            state = state.apply_answer(q, a)?;
            out.push(TranscriptEntry {
                step: i + 1,
                query: q.clone(),
                answer: a,
                measures: values_of(&state, &self.measures, cfg)?,
            });
        }
        Ok(out)
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot {
            id: self.id.clone(),
            document: self.document.clone(),
            format: self.format,
            measures: self.measures.clone(),
            steps: self.state.history().iter().map(HistoryEntry::from).collect(),
            created: self.created,
            updated: self.updated,
        }
    }

    /// Rebuilds a session by replaying the recorded answers.
    pub fn restore(snap: Snapshot, cfg: &Config) -> ApiResult<Session> {
        let mut s = Session::create(snap.id, snap.document, Some(snap.format), snap.measures, cfg)?;
        let steps: Vec<(&ArgumentId, Answer)> = snap.steps.iter().map(|e| (&e.query, e.answer)).collect();
        s.state = s.state.replay(steps)?;
        s.version = snap.steps.len() as u64;
        s.created = snap.created;
        s.updated = snap.updated;
        Ok(s)
    }
}

fn dedup(measures: Vec<MeasureId>) -> Vec<MeasureId> {
    let mut out = Vec::with_capacity(measures.len());
    for m in measures {
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn values_of(state: &CommitmentState, measures: &[MeasureId], cfg: &Config) -> ApiResult<BTreeMap<MeasureId, MeasureValue>> {
    measures.iter().map(|&m| Ok((m, state.measure_with(m, cfg)?))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub query: ArgumentId,
    pub answer: Answer,
}

impl From<&Step> for HistoryEntry {
    fn from(s: &Step) -> Self {
        HistoryEntry { query: s.query.clone(), answer: s.answer }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SessionView {
    pub id: String,
    pub version: u64,
    pub format: DocumentFormat,
    pub measures: Vec<MeasureId>,
    pub graph: ArgumentGraph,
    pub labelling: Labelling,
    pub reduced: ArgumentGraph,
    pub values: BTreeMap<MeasureId, MeasureValue>,
    pub committed: bool,
    pub history: Vec<HistoryEntry>,
    pub created: u64,
    pub updated: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TranscriptEntry {
    pub step: usize,
    pub query: ArgumentId,
    pub answer: Answer,
    pub measures: BTreeMap<MeasureId, MeasureValue>,
}

/// What is persisted per session: enough to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub id: String,
    pub document: String,
    pub format: DocumentFormat,
    pub measures: Vec<MeasureId>,
    pub steps: Vec<HistoryEntry>,
    pub created: u64,
    pub updated: u64,
}

impl Snapshot {
    pub fn write(&self, dir: &Path) -> std::io::Result<()> {
        let path = dir.join(format!("{}.json", self.id));
        let tmp = dir.join(format!(".{}.json.tmp", self.id));
        std::fs::write(&tmp, serde_json::to_vec_pretty(self).map_err(std::io::Error::other)?)?;
        std::fs::rename(tmp, path)
    }

    pub fn read_dir(dir: &Path) -> std::io::Result<Vec<Snapshot>> {
        let mut out = Vec::new();
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("json") {
                continue;
            }
            let bytes = std::fs::read(&path)?;
            let snap: Snapshot = serde_json::from_slice(&bytes)
                .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, format!("{}: {e}", path.display())))?;
            out.push(snap);
        }
        out.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(out)
    }
}
