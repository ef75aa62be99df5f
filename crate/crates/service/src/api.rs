use std::sync::Arc;

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::Json;
use serde::{Deserialize, Serialize};
use syllogism_core::diagram::{self, Diagram, Edge, FailureReason, InterlockTrace, Verdict};
use syllogism_core::game::{
    draw_syllogism, learning_content, Answer, AnswerOutcome, AnswerRecord, ChallengeView, GameSession, LearningPage,
    Mode, ScoreEntry, SessionState,
};
use syllogism_core::model::{Form, Mood, Proposition, Syllogism, Term};
use syllogism_core::notation::{parse_proposition, parse_syllogism};
use syllogism_core::semantics::{oracle_decide, Model};

use crate::error::ApiError;
use crate::AppState;

type ApiResult<T> = Result<T, ApiError>;
type Shared = State<Arc<AppState>>;

fn body<T>(payload: Result<Json<T>, JsonRejection>) -> ApiResult<T> {
    Ok(payload?.0)
}

#[derive(Debug, Clone, Deserialize)]
pub struct DecideRequest {
    pub syllogism: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecideResponse {
    pub syllogism: Syllogism,
    pub mood: Mood,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mnemonic: Option<&'static str>,
    pub verdict: Verdict,
    pub trace: InterlockTrace,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub countermodel: Option<Model>,
    /// Major, minor and conclusion pieces.
    pub pieces: [Diagram; 3],
}

pub async fn decide(payload: Result<Json<DecideRequest>, JsonRejection>) -> ApiResult<Json<DecideResponse>> {
    let req = body(payload)?;
    let s = parse_syllogism(&req.syllogism).map_err(|e| ApiError::from(e).in_field("syllogism"))?;
    let decision = diagram::decide(&s).map_err(|e| ApiError::malformed(&e))?;
    let mood = s.mood().map_err(|e| ApiError::malformed(&e))?;
    let countermodel = match decision.verdict {
        Verdict::Valid => None,
        Verdict::Invalid => oracle_decide(&s).countermodel,
    };
    Ok(Json(DecideResponse {
        syllogism: s,
        mood,
        mnemonic: mood.mnemonic(),
        verdict: decision.verdict,
        trace: decision.trace,
        countermodel,
        pieces: decision.pieces,
    }))
}

#[derive(Debug, Clone, Deserialize)]
pub struct InterlockRequest {
    pub major: String,
    pub minor: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InterlockResponse {
    pub interlocks: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_reason: Option<FailureReason>,
    pub middle_term: Term,
    pub major_edge: Edge,
    pub minor_edge: Edge,
    /// `A(M, M)` when the edges interlock.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<Proposition>,
    /// Major and minor pieces.
    pub pieces: [Diagram; 2],
}

fn shared_terms(a: &Proposition, b: &Proposition) -> Vec<Term> {
    let mut shared: Vec<Term> = Vec::new();
    for t in [&a.subject, &a.predicate] {
        if b.contains(t) && !shared.contains(t) {
            shared.push(t.clone());
        }
    }
    shared
}

pub async fn interlock(payload: Result<Json<InterlockRequest>, JsonRejection>) -> ApiResult<Json<InterlockResponse>> {
    let req = body(payload)?;
    let major = parse_proposition(&req.major).map_err(|e| ApiError::parse(&e).in_field("major"))?;
    let minor = parse_proposition(&req.minor).map_err(|e| ApiError::parse(&e).in_field("minor"))?;
    let middle = match shared_terms(&major, &minor).as_slice() {
        [one] => one.clone(),
        [] => {
            return Err(ApiError::new(
                StatusCode::UNPROCESSABLE_ENTITY,
                "no-shared-term",
                format!("{major} and {minor} share no term"),
            ))
        }
        _ => {
            return Err(ApiError::new(
                StatusCode::UNPROCESSABLE_ENTITY,
                "multiple-shared-terms",
                format!("{major} and {minor} share both terms, so the middle term is ambiguous"),
            ))
        }
    };
    let pieces = [diagram::encode(&major), diagram::encode(&minor)];
    let junction = diagram::middle_interlocks(&pieces[0], &pieces[1], &middle)
        .map_err(|e| ApiError::internal(e.to_string()))?;
    let interlocks = junction.interlocks();
    Ok(Json(InterlockResponse {
        interlocks,
        failure_reason: junction.failure,
        identity: interlocks.then(|| Proposition::new(Form::A, middle.clone(), middle.clone())),
        middle_term: middle,
        major_edge: junction.major_edge,
        minor_edge: junction.minor_edge,
        pieces,
    }))
}

#[derive(Debug, Clone, Deserialize)]
pub struct NewSessionRequest {
    pub mode: String,
    pub seed: Option<u64>,
    pub count: Option<usize>,
}

pub const DEFAULT_COUNT: usize = 10;

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SessionResponse {
    pub session_id: String,
    pub mode: Mode,
    pub seed: u64,
    pub state: SessionState,
    pub abandoned: bool,
    pub score: u64,
    pub streak: u32,
    pub pending: usize,
    pub challenges: Vec<ChallengeView>,
    pub answers: Vec<AnswerRecord>,
}

impl From<&GameSession> for SessionResponse {
    fn from(s: &GameSession) -> Self {
        SessionResponse {
            session_id: s.id().to_owned(),
            mode: s.mode(),
            seed: s.seed(),
            state: s.state(),
            abandoned: s.is_abandoned(),
            score: s.score(),
            streak: s.streak(),
            pending: s.pending().count(),
            challenges: s.challenges().iter().map(|c| c.view()).collect(),
            answers: s.answers().to_vec(),
        }
    }
}

pub async fn create_session(
    State(state): Shared,
    payload: Result<Json<NewSessionRequest>, JsonRejection>,
) -> ApiResult<(StatusCode, Json<SessionResponse>)> {
    let req = body(payload)?;
    let mode: Mode = req.mode.parse()?;
    let seed = req.seed.unwrap_or_else(rand::random);
    let session = GameSession::new(mode, seed, req.count.unwrap_or(DEFAULT_COUNT))?;
    let response = SessionResponse::from(&session);
    state.insert(session);
    Ok((StatusCode::CREATED, Json(response)))
}

fn lookup(state: &AppState, id: &str) -> ApiResult<Arc<std::sync::Mutex<GameSession>>> {
    state.get(id).ok_or_else(|| ApiError::session_not_found(id))
}

pub async fn get_session(State(state): Shared, Path(id): Path<String>) -> ApiResult<Json<SessionResponse>> {
    let session = lookup(&state, &id)?;
    let session = session.lock().expect("session poisoned");
    Ok(Json(SessionResponse::from(&*session)))
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SubmitAnswerRequest {
    pub challenge_id: String,
    pub answer: Answer,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnswerResponse {
    #[serde(flatten)]
    pub outcome: AnswerOutcome,
    pub pending: usize,
}

pub async fn submit_answer(
    State(state): Shared,
    Path(id): Path<String>,
    payload: Result<Json<SubmitAnswerRequest>, JsonRejection>,
) -> ApiResult<Json<AnswerResponse>> {
    let session = lookup(&state, &id)?;
    let req = body(payload)?;
    let mut session = session.lock().expect("session poisoned");
    let outcome = session.submit_answer(&req.challenge_id, req.answer, req.elapsed_ms)?;
    Ok(Json(AnswerResponse {
        outcome,
        pending: session.pending().count(),
    }))
}

#[derive(Debug, Clone, Deserialize)]
pub struct FinishRequest {
    pub player: String,
    #[serde(default)]
    pub abandon: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FinishResponse {
    pub entry: ScoreEntry,
    /// 1-based position among entries of the same mode.
    pub rank: usize,
}

pub async fn finish(
    State(state): Shared,
    Path(id): Path<String>,
    payload: Result<Json<FinishRequest>, JsonRejection>,
) -> ApiResult<Json<FinishResponse>> {
    let session = lookup(&state, &id)?;
    let req = body(payload)?;
    let mut session = session.lock().expect("session poisoned");
    let mut closed = session.clone();
    let entry = closed.finish(&req.player, req.abandon)?;
    state.store().append(&entry)?;
    *session = closed;
    let rank = state
        .store()
        .top(Some(entry.mode), usize::MAX)
        .iter()
        .position(|e| e.session_id == entry.session_id)
        .map_or(0, |i| i + 1);
    Ok(Json(FinishResponse { entry, rank }))
}

#[derive(Debug, Clone, Deserialize)]
pub struct RankingsQuery {
    pub mode: Option<String>,
    pub limit: Option<usize>,
}

pub const DEFAULT_LIMIT: usize = 10;

#[derive(Debug, Clone, Serialize)]
pub struct RankingsResponse {
    pub entries: Vec<ScoreEntry>,
}

pub async fn rankings(
    State(state): Shared,
    query: Result<Query<RankingsQuery>, QueryRejection>,
) -> ApiResult<Json<RankingsResponse>> {
    let Query(q) = query?;
    let mode = q.mode.as_deref().filter(|m| !m.is_empty()).map(str::parse::<Mode>).transpose()?;
    Ok(Json(RankingsResponse {
        entries: state.store().top(mode, q.limit.unwrap_or(DEFAULT_LIMIT)),
    }))
}

pub async fn learning(Path(topic): Path<String>) -> ApiResult<Json<LearningPage>> {
    Ok(Json(learning_content(&topic)?))
}

#[derive(Debug, Clone, Deserialize)]
pub struct RandomQuery {
    pub seed: Option<u64>,
    pub valid: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RandomResponse {
    pub seed: u64,
    pub syllogism: Syllogism,
    pub mood: Mood,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mnemonic: Option<&'static str>,
    pub verdict: Verdict,
    pub pieces: [Diagram; 3],
}

pub async fn random(query: Result<Query<RandomQuery>, QueryRejection>) -> ApiResult<Json<RandomResponse>> {
    let Query(q) = query?;
    let seed = q.seed.unwrap_or_else(rand::random);
    let s = draw_syllogism(seed, q.valid);
    let decision = diagram::decide(&s).map_err(|e| ApiError::internal(e.to_string()))?;
    let mood = s.mood().map_err(|e| ApiError::internal(e.to_string()))?;
    Ok(Json(RandomResponse {
        seed,
        mood,
        mnemonic: mood.mnemonic(),
        verdict: decision.verdict,
        pieces: decision.pieces,
        syllogism: s,
    }))
}
