use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use icg_core::game::{IncidenceRef, Status};
use icg_core::session::{Hints, SessionView, Transition};
use icg_core::IncidenceId;
use icg_service::{router, ApiError, BoundsReply, Created};
use rand::{Rng, SeedableRng};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Vec<u8>) {
    let req = Request::builder().method(method).uri(uri).header("content-type", "application/json");
    let req = req.body(body.map_or_else(Body::empty, |b| Body::from(b.to_string()))).unwrap();
    let res = app.clone().oneshot(req).await.unwrap();
    let status = res.status();
    (status, res.into_body().collect().await.unwrap().to_bytes().to_vec())
}

async fn call_json<T: DeserializeOwned>(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, T) {
    let (status, bytes) = call(app, method, uri, body).await;
    let parsed = serde_json::from_slice(&bytes).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&bytes)));
    (status, parsed)
}

async fn star_session(app: &Router) -> Created {
    let (status, created) = call_json(app, "POST", "/sessions", Some(json!({"family": "star", "params": [4]}))).await;
    assert_eq!(status, StatusCode::OK);
    created
}

fn lowest_legal(hints: &Hints) -> (usize, usize, u16) {
    let h = hints.incidences.iter().filter(|h| h.color.is_none()).find(|h| !h.available.is_empty()).expect("a legal move");
    (h.vertex, h.edge, h.available[0])
}

#[tokio::test]
async fn scripted_star_game_runs_to_alice_win() {
    let app = router();
    let created = star_session(&app).await;
    assert_eq!(created.view.palette, 12);
    assert_eq!(created.view.history.len(), 1);
    let id = created.id;
    loop {
        let (_, view): (_, SessionView) = call_json(&app, "GET", &format!("/sessions/{id}"), None).await;
        if view.status != Status::Ongoing {
            assert_eq!(view.status, Status::AliceWins);
            assert_eq!(view.history.len(), 8);
            break;
        }
        let (_, hints): (_, Hints) = call_json(&app, "GET", &format!("/sessions/{id}/hints"), None).await;
        let (vertex, edge, color) = lowest_legal(&hints);
        let (status, t): (_, Transition) =
            call_json(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"vertex": vertex, "edge": edge, "color": color}))).await;
        assert_eq!(status, StatusCode::OK);
        assert!(!t.moves.is_empty());
    }
    let (status, body) = call(&app, "GET", &format!("/sessions/{id}/transcript"), None).await;
    assert_eq!(status, StatusCode::OK);
    let transcript = icg_core::game::Transcript::from_jsonl(std::str::from_utf8(&body).unwrap()).unwrap();
    assert_eq!(transcript.outcome(), Some(Status::AliceWins));
    assert_eq!(transcript.replay().unwrap().status(), Status::AliceWins);
}

#[tokio::test]
async fn fuzzed_illegal_moves_are_rejected_and_change_nothing() {
    let app = router();
    let id = call_json::<Created>(&app, "POST", "/sessions", Some(json!({"family": "wheel", "params": [5]}))).await.1.id;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
    let mut rejected = 0;
    while rejected < 200 {
        let (_, before): (_, SessionView) = call_json(&app, "GET", &format!("/sessions/{id}"), None).await;
        if before.status != Status::Ongoing {
            break;
        }
        let graph = icg_core::Graph::parse_text(&before.graph).unwrap();
        let state = icg_core::game::Transcript::from_jsonl(
            std::str::from_utf8(&call(&app, "GET", &format!("/sessions/{id}/transcript"), None).await.1).unwrap(),
        )
        .unwrap()
        .replay()
        .unwrap();
        let vertex = rng.random_range(0..graph.vertex_count() + 2);
        let edge = rng.random_range(0..graph.edge_count() + 2);
        let color: u16 = rng.random_range(0..=before.palette + 2);
        let legal = IncidenceRef { vertex, edge }
            .resolve(&graph)
            .is_some_and(|i: IncidenceId| state.validate_move(icg_core::game::Mover::Bob, i, color).is_ok());
        let (status, bytes) =
            call(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"vertex": vertex, "edge": edge, "color": color}))).await;
        if legal {
            assert_eq!(status, StatusCode::OK);
            continue;
        }
        assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY, "{vertex} {edge} {color}");
        let err: ApiError = serde_json::from_slice(&bytes).unwrap();
        assert!(!err.error.is_empty() && !err.message.is_empty());
        let (_, after): (_, SessionView) = call_json(&app, "GET", &format!("/sessions/{id}"), None).await;
        assert_eq!(after, before);
        rejected += 1;
    }
    assert_eq!(rejected, 200);
}

#[tokio::test]
async fn hints_match_engine_availability() {
    let app = router();
    let id = call_json::<Created>(&app, "POST", "/sessions", Some(json!({"family": "cycle", "params": [5]}))).await.1.id;
    for _ in 0..3 {
        let (_, hints): (_, Hints) = call_json(&app, "GET", &format!("/sessions/{id}/hints"), None).await;
        let body = call(&app, "GET", &format!("/sessions/{id}/transcript"), None).await.1;
        let state = icg_core::game::Transcript::from_jsonl(std::str::from_utf8(&body).unwrap()).unwrap().replay().unwrap();
        assert_eq!(hints.incidences.len(), state.graph().incidence_count());
        for h in &hints.incidences {
            let expected: Vec<u16> =
                state.available_colors(IncidenceId(h.id)).map(|s| s.iter().collect()).unwrap_or_default();
            assert_eq!(h.available, expected);
            assert_eq!(h.color, state.color_of(IncidenceId(h.id)));
        }
        let (vertex, edge, color) = lowest_legal(&hints);
        call(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"vertex": vertex, "edge": edge, "color": color}))).await;
    }
}

#[tokio::test]
async fn errors_and_modes() {
    let app = router();
    let (status, err): (_, ApiError) = call_json(&app, "GET", "/sessions/99", None).await;
    assert_eq!((status, err.error.as_str()), (StatusCode::NOT_FOUND, "unknown_session"));
    let (status, _) = call(&app, "POST", "/sessions", Some(json!({"graph": "2 1\n0 0\n"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call(&app, "POST", "/sessions", Some(json!({"family": "star", "params": [3], "bogus": 1}))).await;
    assert!(status.is_client_error());
    let created = star_session(&app).await;
    let (status, _) = call(&app, "POST", &format!("/sessions/{}/step", created.id), None).await;
    assert_eq!(status, StatusCode::CONFLICT);

    let (_, spectated): (_, Created) =
        call_json(&app, "POST", "/sessions", Some(json!({"family": "path", "params": [5], "spectate": "spoiler"}))).await;
    let mut steps = 0;
    loop {
        let (status, t): (_, Value) = call_json(&app, "POST", &format!("/sessions/{}/step", spectated.id), None).await;
        if status != StatusCode::OK {
            assert_eq!(t["error"], "game_over");
            break;
        }
        steps += 1;
    }
    assert!(steps >= 4);
}

#[tokio::test]
async fn bound_calculator() {
    let app = router();
    let (status, b): (_, BoundsReply) = call_json(&app, "GET", "/bounds?delta=4&arboricity=1&degeneracy=1", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!((b.theorem, b.lower, b.trivial_upper), (12, 6, 11));
    assert!(b.andres.is_some());
    let (status, _) = call(&app, "GET", "/bounds?delta=2&arboricity=3", None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn event_stream_replays_the_log_then_follows_moves() {
    let app = router();
    let created = star_session(&app).await;
    let id = created.id;
    let req = Request::builder().uri(format!("/sessions/{id}/events")).body(Body::empty()).unwrap();
    let res = app.clone().oneshot(req).await.unwrap();
    assert_eq!(res.headers()["content-type"], "text/event-stream");
    let mut body = res.into_body();
    let mut text = String::new();
    while !text.contains("\"type\":\"move\"") {
        let frame = body.frame().await.unwrap().unwrap();
        if let Ok(d) = frame.into_data() {
            text.push_str(std::str::from_utf8(&d).unwrap());
        }
    }
    assert!(text.starts_with("id: 0\ndata: {\"type\":\"header\""), "{text}");
    let (_, hints): (_, Hints) = call_json(&app, "GET", &format!("/sessions/{id}/hints"), None).await;
    let (vertex, edge, color) = lowest_legal(&hints);
    let (_, t): (_, Transition) =
        call_json(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"vertex": vertex, "edge": edge, "color": color}))).await;
    let last = t.first_event + t.events.len() - 1;
    let marker = format!("id: {last}\n");
    while !text.contains(&marker) {
        let frame = body.frame().await.unwrap().unwrap();
        if let Ok(d) = frame.into_data() {
            text.push_str(std::str::from_utf8(&d).unwrap());
        }
    }
    let ids: Vec<usize> = text.lines().filter_map(|l| l.strip_prefix("id: ")).map(|n| n.parse().unwrap()).collect();
    assert_eq!(ids, (0..=last).collect::<Vec<_>>());
}
