//! HTTP front end for interactive sessions.
//!
//! | method | path | body / result |
//! |---|---|---|
//! | `POST` | `/sessions` | [`SessionSpec`] → `{id, view}` |
//! | `GET` | `/sessions/{id}` | [`SessionView`] |
//! | `POST` | `/sessions/{id}/moves` | `{vertex, edge, color}` → [`Transition`] |
//! | `POST` | `/sessions/{id}/step` | spectate mode: one Bob move and Alice's reply |
//! | `GET` | `/sessions/{id}/hints` | [`Hints`] |
//! | `GET` | `/sessions/{id}/transcript` | JSON Lines transcript |
//! | `GET` | `/sessions/{id}/events?from=n` | server-sent events, one per log entry |
//! | `GET` | `/bounds?delta=d&arboricity=a[&degeneracy=k]` | bound calculator |
//!
//! Rejected moves answer `422` with `{error, message}` and leave the session
//! untouched.

use std::collections::HashMap;
use std::convert::Infallible;
use std::sync::{Arc, Mutex, MutexGuard};

use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::sse::{KeepAlive, Sse};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use futures::stream::{self, Stream, StreamExt};
use icg_core::game::{Event, GameError, IncidenceRef};
use icg_core::harness::{andres_bounds, AndresBounds, lower_bound, theorem_bound, trivial_upper_bound};
use icg_core::session::{Hints, Session, SessionError, SessionSpec, SessionView, Transition};
use icg_core::Color;
use serde::{Deserialize, Serialize};
use tokio::sync::broadcast;

pub const MAX_SESSIONS: usize = 1024;

struct Entry {
    session: Session,
    events: broadcast::Sender<(usize, Event)>,
}

#[derive(Clone, Default)]
pub struct AppState {
    inner: Arc<Mutex<Registry>>,
}

#[derive(Default)]
struct Registry {
    next_id: u64,
    sessions: HashMap<u64, Entry>,
}

impl AppState {
    fn lock(&self) -> MutexGuard<'_, Registry> {
        self.inner.lock().unwrap_or_else(|e| e.into_inner())
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ApiError {
    pub error: String,
    pub message: String,
}

pub struct Failure(StatusCode, ApiError);

impl Failure {
    fn new(status: StatusCode, error: &str, message: impl Into<String>) -> Self {
        Failure(status, ApiError { error: error.into(), message: message.into() })
    }

    fn not_found(id: u64) -> Self {
        Failure::new(StatusCode::NOT_FOUND, "unknown_session", format!("no session {id}"))
    }
}

impl IntoResponse for Failure {
    fn into_response(self) -> Response {
        (self.0, Json(self.1)).into_response()
    }
}

fn game_error_name(e: &GameError) -> &'static str {
    match e {
        GameError::BadPalette(_) => "bad_palette",
        GameError::UnknownIncidence(_) => "unknown_incidence",
        GameError::Occupied(_) => "occupied",
        GameError::ColorOutOfRange { .. } => "color_out_of_range",
        GameError::Unavailable { .. } => "unavailable_color",
        GameError::NotYourTurn { .. } => "not_your_turn",
        GameError::GameOver => "game_over",
    }
}

impl From<SessionError> for Failure {
    fn from(e: SessionError) -> Self {
        let message = e.to_string();
        let (status, name) = match &e {
            SessionError::Illegal(g) => (StatusCode::UNPROCESSABLE_ENTITY, game_error_name(g)),
            SessionError::UnknownIncidence { .. } => (StatusCode::UNPROCESSABLE_ENTITY, "unknown_incidence"),
            SessionError::Spectating | SessionError::NotSpectating => (StatusCode::CONFLICT, "wrong_mode"),
            SessionError::Strategy(_) => (StatusCode::INTERNAL_SERVER_ERROR, "strategy_failure"),
            _ => (StatusCode::BAD_REQUEST, "invalid_session"),
        };
        Failure::new(status, name, message)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Created {
    pub id: u64,
    pub view: SessionView,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveRequest {
    pub vertex: usize,
    pub edge: usize,
    pub color: Color,
}

#[derive(Debug, Deserialize)]
pub struct BoundsQuery {
    pub delta: usize,
    pub arboricity: usize,
    pub degeneracy: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BoundsReply {
    pub theorem: usize,
    pub lower: usize,
    pub trivial_upper: usize,
    pub andres: Option<AndresBounds>,
}

#[derive(Debug, Deserialize)]
pub struct EventsQuery {
    #[serde(default)]
    pub from: usize,
}

pub fn router() -> Router {
    router_with(AppState::default())
}

pub fn router_with(state: AppState) -> Router {
    Router::new()
        .route("/sessions", post(create))
        .route("/sessions/{id}", get(view))
        .route("/sessions/{id}/moves", post(submit))
        .route("/sessions/{id}/step", post(step))
        .route("/sessions/{id}/hints", get(hints))
        .route("/sessions/{id}/transcript", get(transcript))
        .route("/sessions/{id}/events", get(events))
        .route("/bounds", get(bounds))
        .with_state(state)
}

/// Serves until the process is stopped.
pub async fn serve(addr: std::net::SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router()).await
}

async fn create(State(app): State<AppState>, Json(spec): Json<SessionSpec>) -> Result<Json<Created>, Failure> {
    let session = Session::create(spec)?;
    let view = session.view();
    let mut reg = app.lock();
    if reg.sessions.len() >= MAX_SESSIONS {
        return Err(Failure::new(StatusCode::SERVICE_UNAVAILABLE, "too_many_sessions", "session limit reached"));
    }
    let id = reg.next_id;
    reg.next_id += 1;
    let (tx, _) = broadcast::channel(256);
    reg.sessions.insert(id, Entry { session, events: tx });
    Ok(Json(Created { id, view }))
}

fn with_session<T>(app: &AppState, id: u64, f: impl FnOnce(&mut Entry) -> Result<T, Failure>) -> Result<T, Failure> {
    let mut reg = app.lock();
    let entry = reg.sessions.get_mut(&id).ok_or(Failure::not_found(id))?;
    f(entry)
}

fn publish(entry: &Entry, t: &Transition) {
    for (n, e) in t.events.iter().enumerate() {
        let _ = entry.events.send((t.first_event + n, e.clone()));
    }
}

async fn view(State(app): State<AppState>, Path(id): Path<u64>) -> Result<Json<SessionView>, Failure> {
    with_session(&app, id, |e| Ok(Json(e.session.view())))
}

async fn submit(
    State(app): State<AppState>,
    Path(id): Path<u64>,
    Json(m): Json<MoveRequest>,
) -> Result<Json<Transition>, Failure> {
    with_session(&app, id, |e| {
        let t = e.session.submit_bob_move(IncidenceRef { vertex: m.vertex, edge: m.edge }, m.color)?;
        publish(e, &t);
        Ok(Json(t))
    })
}

async fn step(State(app): State<AppState>, Path(id): Path<u64>) -> Result<Json<Transition>, Failure> {
    with_session(&app, id, |e| {
        let t = e.session.step()?;
        publish(e, &t);
        Ok(Json(t))
    })
}

async fn hints(State(app): State<AppState>, Path(id): Path<u64>) -> Result<Json<Hints>, Failure> {
    with_session(&app, id, |e| Ok(Json(e.session.hints())))
}

async fn transcript(State(app): State<AppState>, Path(id): Path<u64>) -> Result<Response, Failure> {
    let body = with_session(&app, id, |e| Ok(e.session.transcript().to_jsonl()))?;
    Ok(([(header::CONTENT_TYPE, "application/x-ndjson")], body).into_response())
}

fn sse_event(n: usize, e: &Event) -> axum::response::sse::Event {
    axum::response::sse::Event::default()
        .id(n.to_string())
        .json_data(e)
        .expect("events serialize")
}

async fn events(
    State(app): State<AppState>,
    Path(id): Path<u64>,
    Query(q): Query<EventsQuery>,
) -> Result<Sse<impl Stream<Item = Result<axum::response::sse::Event, Infallible>>>, Failure> {
    // Subscribe and copy the backlog under one lock so nothing falls between.
    let (backlog, rx) = with_session(&app, id, |e| {
        let log = e.session.events();
        let backlog: Vec<_> = log.iter().enumerate().skip(q.from).map(|(n, ev)| (n, ev.clone())).collect();
        Ok((backlog, e.events.subscribe()))
    })?;
    let mut next = backlog.last().map_or(q.from, |(n, _)| n + 1);
    let live = stream::unfold(rx, |mut rx| async move {
        loop {
            match rx.recv().await {
                Ok(item) => return Some((item, rx)),
                Err(broadcast::error::RecvError::Lagged(_)) => continue,
                Err(broadcast::error::RecvError::Closed) => return None,
            }
        }
    })
    .filter(move |(n, _)| {
        let fresh = *n >= next;
        if fresh {
            next = n + 1;
        }
        futures::future::ready(fresh)
    });
    let all = stream::iter(backlog).chain(live).map(|(n, e)| Ok(sse_event(n, &e)));
    Ok(Sse::new(all).keep_alive(KeepAlive::default()))
}

async fn bounds(Query(q): Query<BoundsQuery>) -> Result<Json<BoundsReply>, Failure> {
    let theorem = theorem_bound(q.delta, q.arboricity)
        .map_err(|e| Failure::new(StatusCode::BAD_REQUEST, "invalid_bound", e.to_string()))?;
    let andres = match q.degeneracy {
        Some(k) => Some(andres_bounds(q.delta, k).map_err(|e| Failure::new(StatusCode::BAD_REQUEST, "invalid_bound", e.to_string()))?),
        None => None,
    };
    Ok(Json(BoundsReply {
        theorem,
        lower: lower_bound(q.delta),
        trivial_upper: trivial_upper_bound(q.delta),
        andres,
    }))
}
