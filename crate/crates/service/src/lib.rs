//! HTTP JSON API over the syllogism engine.
//!
//! Routes (all under `/api`):
//!
//! | method | path | |
//! |---|---|---|
//! | POST | `/decide` | verdict, interlock trace, countermodel when invalid |
//! | POST | `/interlock` | middle-term snap test for two premise pieces |
//! | POST | `/sessions` | create an arcade or learning-quiz session |
//! | GET | `/sessions/{id}` | session state |
//! | POST | `/sessions/{id}/answers` | submit one answer |
//! | POST | `/sessions/{id}/finish` | close the session and record the score |
//! | GET | `/rankings?mode=&limit=` | leaderboard |
//! | GET | `/learning/{topic}` | learning-mode content |
//! | GET | `/syllogisms/random?seed=&valid=` | seeded draw |
//!
//! Sessions live in memory and are dropped after an idle period; rankings
//! are appended to a line-delimited JSON file.

mod api;
mod error;

use std::collections::HashMap;
use std::env;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use axum::http::HeaderValue;
use axum::routing::{get, post};
use axum::Router;
use syllogism_core::game::{GameSession, RankingError, RankingStore};
use tower_http::cors::{AllowOrigin, Any, CorsLayer};

pub use api::{
    DecideRequest, DecideResponse, FinishRequest, FinishResponse, InterlockRequest, InterlockResponse,
    NewSessionRequest, RandomResponse, RankingsResponse, SessionResponse, SubmitAnswerRequest,
};
pub use error::{ApiError, ErrorBody};

pub const DEFAULT_PORT: u16 = 8787;
pub const DEFAULT_RANKINGS: &str = "rankings.jsonl";
pub const DEFAULT_SESSION_TTL: Duration = Duration::from_secs(60 * 60);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub port: u16,
    pub rankings: PathBuf,
    /// `*` allows any origin; `None` adds no CORS headers.
    pub cors_origin: Option<String>,
    pub session_ttl: Duration,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            port: DEFAULT_PORT,
            rankings: PathBuf::from(DEFAULT_RANKINGS),
            cors_origin: Some("*".into()),
            session_ttl: DEFAULT_SESSION_TTL,
        }
    }
}

impl Config {
    /// Defaults overridden by `SYLLOGISM_PORT`, `SYLLOGISM_RANKINGS` and
    /// `SYLLOGISM_CORS_ORIGIN`.
    pub fn from_env() -> Result<Config, String> {
        let mut c = Config::default();
        if let Ok(port) = env::var("SYLLOGISM_PORT") {
            c.port = port
                .parse()
                .map_err(|_| format!("SYLLOGISM_PORT is not a port number: {port:?}"))?;
        }
        if let Ok(path) = env::var("SYLLOGISM_RANKINGS") {
            c.rankings = path.into();
        }
        if let Ok(origin) = env::var("SYLLOGISM_CORS_ORIGIN") {
            c.cors_origin = (!origin.is_empty()).then_some(origin);
        }
        Ok(c)
    }
}

struct Slot {
    session: Arc<Mutex<GameSession>>,
    last_touched: Instant,
}

/// Shared server state: live sessions plus the ranking store.
pub struct AppState {
    sessions: Mutex<HashMap<String, Slot>>,
    store: RankingStore,
    session_ttl: Duration,
}

impl AppState {
    pub fn new(store: RankingStore, session_ttl: Duration) -> AppState {
        AppState {
            sessions: Mutex::new(HashMap::new()),
            store,
            session_ttl,
        }
    }

    pub fn open(config: &Config) -> Result<AppState, RankingError> {
        Ok(AppState::new(RankingStore::open(&config.rankings)?, config.session_ttl))
    }

    pub fn store(&self) -> &RankingStore {
        &self.store
    }

    pub fn session_count(&self) -> usize {
        let mut map = self.sessions.lock().expect("session map poisoned");
        self.evict(&mut map);
        map.len()
    }

    fn evict(&self, map: &mut HashMap<String, Slot>) {
        let ttl = self.session_ttl;
        map.retain(|_, slot| slot.last_touched.elapsed() < ttl);
    }

    fn insert(&self, session: GameSession) -> Arc<Mutex<GameSession>> {
        let id = session.id().to_owned();
        let session = Arc::new(Mutex::new(session));
        let mut map = self.sessions.lock().expect("session map poisoned");
        self.evict(&mut map);
        map.insert(
            id,
            Slot {
                session: session.clone(),
                last_touched: Instant::now(),
            },
        );
        session
    }

    fn get(&self, id: &str) -> Option<Arc<Mutex<GameSession>>> {
        let mut map = self.sessions.lock().expect("session map poisoned");
        self.evict(&mut map);
        let slot = map.get_mut(id)?;
        slot.last_touched = Instant::now();
        Some(slot.session.clone())
    }
}

fn cors(origin: &str) -> Result<CorsLayer, String> {
    let allow = if origin == "*" {
        AllowOrigin::from(Any)
    } else {
        let value = HeaderValue::from_str(origin).map_err(|_| format!("bad CORS origin {origin:?}"))?;
        AllowOrigin::exact(value)
    };
    Ok(CorsLayer::new().allow_origin(allow).allow_methods(Any).allow_headers(Any))
}

/// The API router over `state`.
pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/api/decide", post(api::decide))
        .route("/api/interlock", post(api::interlock))
        .route("/api/sessions", post(api::create_session))
        .route("/api/sessions/{id}", get(api::get_session))
        .route("/api/sessions/{id}/answers", post(api::submit_answer))
        .route("/api/sessions/{id}/finish", post(api::finish))
        .route("/api/rankings", get(api::rankings))
        .route("/api/learning/{topic}", get(api::learning))
        .route("/api/syllogisms/random", get(api::random))
        .with_state(state)
}

#[derive(Debug, thiserror::Error)]
pub enum ServeError {
    #[error(transparent)]
    Ranking(#[from] RankingError),
    #[error("{0}")]
    Config(String),
    #[error("cannot bind port {port}: {source}")]
    Bind {
        port: u16,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A bound, not yet running server.
pub struct Server {
    listener: tokio::net::TcpListener,
    app: Router,
    state: Arc<AppState>,
}

impl Server {
    /// Opens the ranking store and binds `0.0.0.0:port` (port 0 picks a
    /// free port).
    pub async fn bind(config: &Config) -> Result<Server, ServeError> {
        let state = Arc::new(AppState::open(config)?);
        let mut app = router(state.clone());
        if let Some(origin) = &config.cors_origin {
            app = app.layer(cors(origin).map_err(ServeError::Config)?);
        }
        let addr = SocketAddr::from(([0, 0, 0, 0], config.port));
        let listener = tokio::net::TcpListener::bind(addr)
            .await
            .map_err(|source| ServeError::Bind {
                port: config.port,
                source,
            })?;
        Ok(Server { listener, app, state })
    }

    pub fn local_addr(&self) -> std::io::Result<SocketAddr> {
        self.listener.local_addr()
    }

    pub fn state(&self) -> Arc<AppState> {
        self.state.clone()
    }

    pub async fn run(self) -> std::io::Result<()> {
        tracing::info!(addr = ?self.listener.local_addr()?, "listening");
        axum::serve(self.listener, self.app).await
    }
}
