//! HTTP+JSON service running commitment-driven resolution sessions.
//!
//! Sessions live in memory and can be snapshotted to a directory. Mutations
//! of one session are serialized behind its lock and guarded by a version
//! counter that clients may pass as `expected_version`.

pub mod error;
pub mod session;

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, RwLock};

use argmeter::io::DocumentFormat;
use argmeter::resolution::Recommendation;
use argmeter::{Answer, ArgumentId, Config, MeasureId};
use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, HeaderValue, Method, StatusCode};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use tower_http::cors::{AllowOrigin, CorsLayer};
use tower_http::services::ServeDir;

pub use error::{ApiError, ApiResult, ErrorBody};
pub use session::{Session, SessionView, Snapshot, TranscriptEntry};

type Shared = Arc<Mutex<Session>>;

#[derive(Clone)]
pub struct AppState {
    inner: Arc<Inner>,
}

struct Inner {
    sessions: RwLock<HashMap<String, Shared>>,
    snapshot_dir: Option<PathBuf>,
    cfg: Config,
}

impl AppState {
    pub fn new(cfg: Config, snapshot_dir: Option<PathBuf>) -> Self {
        AppState { inner: Arc::new(Inner { sessions: RwLock::default(), snapshot_dir, cfg }) }
    }

    /// Creates the snapshot directory if needed and replays every snapshot in it.
    pub fn load(cfg: Config, snapshot_dir: Option<PathBuf>) -> std::io::Result<Self> {
        let state = AppState::new(cfg, snapshot_dir.clone());
        if let Some(dir) = &snapshot_dir {
            std::fs::create_dir_all(dir)?;
            for snap in Snapshot::read_dir(dir)? {
                let id = snap.id.clone();
                let session = Session::restore(snap, &state.inner.cfg)
                    .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, format!("{id}: {}", e.body.message)))?;
                state.insert(session);
            }
        }
        Ok(state)
    }

    pub fn session_count(&self) -> usize {
        self.inner.sessions.read().expect("session table poisoned").len()
    }

    /// Starts a session on `document` and returns its initial view.
    pub fn create_session(&self, document: String, format: Option<DocumentFormat>, measures: Vec<MeasureId>) -> ApiResult<SessionView> {
        let session = Session::create(session::fresh_id(), document, format, measures, &self.inner.cfg)?;
        let view = session.view(&self.inner.cfg)?;
        self.persist(&session)?;
        self.insert(session);
        Ok(view)
    }

    fn insert(&self, session: Session) {
        let id = session.id.clone();
        self.inner.sessions.write().expect("session table poisoned").insert(id, Arc::new(Mutex::new(session)));
    }

    fn get(&self, id: &str) -> ApiResult<Shared> {
        self.inner
            .sessions
            .read()
            .expect("session table poisoned")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::not_found(id))
    }

    fn persist(&self, session: &Session) -> ApiResult<()> {
        match &self.inner.snapshot_dir {
            Some(dir) => session.snapshot().write(dir).map_err(|e| ApiError::internal(format!("snapshot: {e}"))),
            None => Ok(()),
        }
    }
}

/// Listen address, CORS origin, snapshot directory and static UI directory.
#[derive(Debug, Clone)]
pub struct ServiceConfig {
    pub host: String,
    pub port: u16,
    pub allow_origin: Option<String>,
    pub snapshot_dir: Option<PathBuf>,
    pub ui_dir: Option<PathBuf>,
    pub engine: Config,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            host: "127.0.0.1".into(),
            port: 8080,
            allow_origin: None,
            snapshot_dir: None,
            ui_dir: None,
            engine: Config::default(),
        }
    }
}

/// The API routes plus optional CORS and static UI serving.
pub fn app(state: AppState, allow_origin: Option<&str>, ui_dir: Option<PathBuf>) -> Result<Router, String> {
    let mut router = router(state);
    if let Some(dir) = ui_dir {
        router = router.fallback_service(ServeDir::new(dir));
    }
    if let Some(origin) = allow_origin {
        let allow = if origin == "*" {
            AllowOrigin::any()
        } else {
            AllowOrigin::exact(HeaderValue::from_str(origin).map_err(|e| format!("--allow-origin `{origin}`: {e}"))?)
        };
        router = router.layer(
            CorsLayer::new()
                .allow_origin(allow)
                .allow_methods([Method::GET, Method::POST])
                .allow_headers([header::CONTENT_TYPE]),
        );
    }
    Ok(router)
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/recommendation", get(recommendation))
        .route("/sessions/{id}/answers", post(answer))
        .route("/sessions/{id}/undo", post(undo))
        .route("/sessions/{id}/transcript", get(transcript))
        .with_state(state)
}

/// Binds, serves until ctrl-c, and returns.
pub async fn serve(cfg: ServiceConfig) -> std::io::Result<()> {
    serve_state(AppState::load(cfg.engine, cfg.snapshot_dir.clone())?, cfg).await
}

/// Serves an already loaded state, e.g. one with preloaded sessions.
pub async fn serve_state(state: AppState, cfg: ServiceConfig) -> std::io::Result<()> {
    let app = app(state, cfg.allow_origin.as_deref(), cfg.ui_dir.clone())
        .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidInput, e))?;
    let listener = tokio::net::TcpListener::bind((cfg.host.as_str(), cfg.port)).await?;
    let addr: SocketAddr = listener.local_addr()?;
    eprintln!("argmeter service listening on http://{addr}");
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}

fn parse_body<T: DeserializeOwned>(body: &Bytes) -> ApiResult<T> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("invalid request body: {e}")))
}

fn lock(s: &Shared) -> ApiResult<std::sync::MutexGuard<'_, Session>> {
    s.lock().map_err(|_| ApiError::internal("session lock poisoned"))
}

async fn health() -> Json<serde_json::Value> {
    Json(serde_json::json!({ "status": "ok" }))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateRequest {
    document: String,
    #[serde(default)]
    format: Option<DocumentFormat>,
    #[serde(default)]
    measures: Vec<MeasureId>,
}

#[derive(Debug, Serialize)]
struct Created {
    id: String,
    state: SessionView,
}

async fn create_session(State(app): State<AppState>, body: Bytes) -> ApiResult<(StatusCode, Json<Created>)> {
    let req: CreateRequest = parse_body(&body)?;
    let view = app.create_session(req.document, req.format, req.measures)?;
    Ok((StatusCode::CREATED, Json(Created { id: view.id.clone(), state: view })))
}

async fn get_session(State(app): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<SessionView>> {
    let shared = app.get(&id)?;
    let s = lock(&shared)?;
    Ok(Json(s.view(&app.inner.cfg)?))
}

#[derive(Debug, Deserialize)]
struct RecommendationQuery {
    measure: Option<String>,
}

async fn recommendation(
    State(app): State<AppState>,
    Path(id): Path<String>,
    Query(q): Query<RecommendationQuery>,
) -> ApiResult<Json<Recommendation>> {
    let shared = app.get(&id)?;
    let s = lock(&shared)?;
    let m = match q.measure {
        Some(code) => code.parse::<MeasureId>()?,
        None => s.measures[0],
    };
    Ok(Json(s.state.recommend_query_with(m, &app.inner.cfg)?))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AnswerRequest {
    argument: String,
    answer: Answer,
    #[serde(default)]
    expected_version: Option<u64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct UndoRequest {
    #[serde(default)]
    expected_version: Option<u64>,
}

fn check_version(s: &Session, expected: Option<u64>) -> ApiResult<()> {
    match expected {
        Some(v) if v != s.version => Err(ApiError::version_conflict(v, s.version)),
        _ => Ok(()),
    }
}

async fn answer(State(app): State<AppState>, Path(id): Path<String>, body: Bytes) -> ApiResult<Json<SessionView>> {
    let req: AnswerRequest = parse_body(&body)?;
    let shared = app.get(&id)?;
    let mut s = lock(&shared)?;
    check_version(&s, req.expected_version)?;
    let query: ArgumentId = req.argument.parse()?;
    let next = s.state.apply_answer(&query, req.answer)?;
    s.commit(next);
    app.persist(&s)?;
    Ok(Json(s.view(&app.inner.cfg)?))
}

async fn undo(State(app): State<AppState>, Path(id): Path<String>, body: Bytes) -> ApiResult<Json<SessionView>> {
    let req: UndoRequest = if body.iter().all(u8::is_ascii_whitespace) { UndoRequest::default() } else { parse_body(&body)? };
    let shared = app.get(&id)?;
    let mut s = lock(&shared)?;
    check_version(&s, req.expected_version)?;
    let prev = s.state.undo()?;
    s.commit(prev);
    app.persist(&s)?;
    Ok(Json(s.view(&app.inner.cfg)?))
}

async fn transcript(State(app): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<Vec<TranscriptEntry>>> {
    let shared = app.get(&id)?;
    let s = lock(&shared)?;
    Ok(Json(s.transcript(&app.inner.cfg)?))
}
