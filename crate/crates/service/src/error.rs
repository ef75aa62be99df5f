use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde::Serialize;
use syllogism_core::game::{GameError, RankingError};
use syllogism_core::model::MalformedSyllogism;
use syllogism_core::notation::{NotationError, ParseError};

/// Body of every non-2xx response.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ErrorBody {
    /// Stable machine-readable code, e.g. `parse-error`.
    pub error: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<&'static str>,
}

#[derive(Debug, Clone)]
pub struct ApiError {
    pub status: StatusCode,
    pub body: ErrorBody,
}

impl ApiError {
    pub fn new(status: StatusCode, error: &'static str, message: impl Into<String>) -> Self {
        ApiError {
            status,
            body: ErrorBody {
                error,
                message: message.into(),
                position: None,
                expected: Vec::new(),
                field: None,
            },
        }
    }

    pub fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, "bad-request", message)
    }

    pub fn session_not_found(id: &str) -> Self {
        Self::new(StatusCode::NOT_FOUND, "unknown-session", format!("no session {id:?}"))
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", message)
    }

    pub fn in_field(mut self, field: &'static str) -> Self {
        self.body.field = Some(field);
        self
    }

    pub fn parse(e: &ParseError) -> Self {
        let mut err = Self::new(StatusCode::BAD_REQUEST, "parse-error", e.to_string());
        err.body.position = Some(e.position);
        err.body.expected = e.expected.iter().map(|x| x.to_string()).collect();
        err
    }

    /// Three-term syllogisms whose premises sit in the wrong slots are
    /// well-formed but not in standard form (422); anything that is not a
    /// three-term syllogism at all is a bad request (400).
    pub fn malformed(e: &MalformedSyllogism) -> Self {
        match e {
            MalformedSyllogism::MajorLacksPredicate(_) | MalformedSyllogism::MinorLacksSubject(_) => Self::new(
                StatusCode::UNPROCESSABLE_ENTITY,
                "non-standard-form",
                e.to_string(),
            ),
            _ => Self::new(StatusCode::BAD_REQUEST, "malformed-syllogism", e.to_string()),
        }
    }
}

impl From<NotationError> for ApiError {
    fn from(e: NotationError) -> Self {
        match &e {
            NotationError::Parse(p) => ApiError::parse(p),
            NotationError::Malformed(m) => ApiError::malformed(m),
        }
    }
}

impl From<GameError> for ApiError {
    fn from(e: GameError) -> Self {
        let (status, code) = match &e {
            GameError::BadCount(_) => (StatusCode::BAD_REQUEST, "bad-count"),
            GameError::UnknownMode(_) => (StatusCode::BAD_REQUEST, "unknown-mode"),
            GameError::UnknownChallenge(_) => (StatusCode::BAD_REQUEST, "unknown-challenge"),
            GameError::AnswerKindMismatch(_) => (StatusCode::BAD_REQUEST, "answer-kind-mismatch"),
            GameError::BadPlayerName => (StatusCode::BAD_REQUEST, "bad-player-name"),
            GameError::DuplicateAnswer(_) => (StatusCode::CONFLICT, "duplicate-answer"),
            GameError::SessionFinished => (StatusCode::CONFLICT, "session-finished"),
            GameError::SessionNotComplete(_) => (StatusCode::CONFLICT, "session-not-complete"),
            GameError::UnknownTopic(_) => (StatusCode::NOT_FOUND, "unknown-topic"),
        };
        ApiError::new(status, code, e.to_string())
    }
}

impl From<RankingError> for ApiError {
    fn from(e: RankingError) -> Self {
        match e {
            RankingError::Game(g) => g.into(),
            other => {
                let mut message = other.to_string();
                let mut source = std::error::Error::source(&other);
                while let Some(cause) = source {
                    message = format!("{message}: {cause}");
                    source = cause.source();
                }
                tracing::error!(error = %message, "ranking store failure");
                ApiError::internal(message)
            }
        }
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> Self {
        ApiError::new(StatusCode::BAD_REQUEST, "bad-json", e.body_text())
    }
}

impl From<QueryRejection> for ApiError {
    fn from(e: QueryRejection) -> Self {
        ApiError::new(StatusCode::BAD_REQUEST, "bad-query", e.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}
