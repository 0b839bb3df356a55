use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde::Serialize;

/// JSON error body: a stable machine code, a human message and, for parse errors, the location.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorBody {
    pub error: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApiError {
    pub status: StatusCode,
    pub body: ErrorBody,
}

impl ApiError {
    pub fn new(status: StatusCode, error: &'static str, message: impl Into<String>) -> Self {
        ApiError { status, body: ErrorBody { error, message: message.into(), line: None, column: None } }
    }

    pub fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, "bad-request", message)
    }

    pub fn not_found(id: &str) -> Self {
        Self::new(StatusCode::NOT_FOUND, "not-found", format!("no session `{id}`"))
    }

    pub fn version_conflict(expected: u64, actual: u64) -> Self {
        Self::new(
            StatusCode::CONFLICT,
            "version-conflict",
            format!("expected version {expected}, session is at {actual}"),
        )
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", message)
    }
}

impl From<argmeter::Error> for ApiError {
    fn from(e: argmeter::Error) -> Self {
        use argmeter::Error as E;
        let message = e.to_string();
        let status = match &e {
            E::AlreadyCommitted(_) | E::CommitmentConflict { .. } | E::NoUndecided | E::EmptyHistory => StatusCode::CONFLICT,
            E::DegenerateTree(_) | E::EmptyModels(_) | E::EmptyAtomSet | E::LabellingMismatch(_) => {
                StatusCode::UNPROCESSABLE_ENTITY
            }
            _ => StatusCode::BAD_REQUEST,
        };
        let mut err = ApiError::new(status, e.code(), message);
        if let E::Parse { line, column, .. } = e {
            err.body.line = Some(line);
            err.body.column = Some(column);
        }
        err
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

pub type ApiResult<T> = Result<T, ApiError>;
