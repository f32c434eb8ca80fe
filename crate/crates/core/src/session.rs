//! Interactive sessions: a human (or an engine, in spectate mode) plays Bob
//! against the activation strategy, one validated move at a time.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alice::ActivationStrategy;
use crate::color::Color;
use crate::forest::{analyze, DecompositionError, Kind, OrientedForestDecomposition, Relations, RootPolicy};
use crate::game::{
    Event, GameError, GameState, IncidenceRef, MoveRecord, Mover, Status, Strategy, StrategyFailure, Transcript,
    SCHEMA_VERSION,
};
use crate::graph::{Family, Graph, GraphError, IncidenceId, Vertex};
use crate::harness::{BobPlayer, BoundError, Lookahead, PaletteRule};

pub const MAX_SESSION_VERTICES: usize = 60;

/// How to build a session. Exactly one of `graph` (edge-list text) and
/// `family` must be given.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SessionSpec {
    pub graph: Option<String>,
    pub family: Option<String>,
    pub params: Vec<f64>,
    pub palette: PaletteRule,
    pub seed: u64,
    pub root: RootPolicy,
    /// Set for spectate mode: the engine Bob that plays on each step.
    pub spectate: Option<BobPlayer>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SessionError {
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("give exactly one of a graph text and a family")]
    GraphSource,
    #[error("graph has {0} vertices; sessions allow at most {MAX_SESSION_VERTICES}")]
    TooLarge(usize),
    #[error("{0}")]
    Decomposition(#[from] DecompositionError),
    #[error("{0}")]
    Bound(#[from] BoundError),
    #[error("palette rule must name a single palette")]
    PaletteRule,
    #[error("no incidence ({vertex}, e{edge})")]
    UnknownIncidence { vertex: Vertex, edge: usize },
    #[error("{0}")]
    Illegal(#[from] GameError),
    #[error("Alice failed: {0}")]
    Strategy(#[from] StrategyFailure),
    #[error("session is not in spectate mode")]
    NotSpectating,
    #[error("session is in spectate mode; use step")]
    Spectating,
}

/// New events and moves produced by one transition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Transition {
    /// Index in the session event log of the first new event.
    pub first_event: usize,
    pub events: Vec<Event>,
    pub moves: Vec<MoveRecord>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IncidenceHint {
    pub id: usize,
    pub vertex: Vertex,
    pub edge: usize,
    pub kind: Kind,
    pub forest: usize,
    pub color: Option<Color>,
    /// Empty for colored incidences.
    pub available: Vec<Color>,
    pub active: bool,
    pub climbs: u8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hints {
    pub palette: Color,
    pub status: Status,
    pub turn: Mover,
    pub incidences: Vec<IncidenceHint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeView {
    pub id: usize,
    pub endpoints: [Vertex; 2],
    pub forest: usize,
    /// `(tail, head)`, the tail closer to the tree root.
    pub orientation: (Vertex, Vertex),
}

/// Snapshot of a session for clients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionView {
    pub graph: String,
    pub vertices: usize,
    pub edges: Vec<EdgeView>,
    pub forests: usize,
    pub roots: Vec<(usize, Vertex)>,
    pub max_degree: usize,
    pub palette: Color,
    pub palette_rule: PaletteRule,
    pub status: Status,
    pub turn: Mover,
    pub coloring: Vec<Option<Color>>,
    pub history: Vec<MoveRecord>,
    pub event_count: usize,
    pub spectate: Option<BobPlayer>,
}

pub struct Session {
    spec: SessionSpec,
    graph: Arc<Graph>,
    decomposition: OrientedForestDecomposition,
    relations: Arc<Relations>,
    state: GameState,
    alice: ActivationStrategy,
    bob: Option<Box<dyn Strategy + Send>>,
    events: Vec<Event>,
}

impl std::fmt::Debug for Session {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Session").field("spec", &self.spec).field("state", &self.state).finish_non_exhaustive()
    }
}

impl Session {
    /// Builds the game and plays Alice's first move.
    pub fn create(spec: SessionSpec) -> Result<Self, SessionError> {
        let graph = match (&spec.graph, &spec.family) {
            (Some(text), None) => Graph::parse_text(text)?,
            (None, Some(name)) => crate::graph::generate(&Family::from_name(name, &spec.params)?, spec.seed)?,
            _ => return Err(SessionError::GraphSource),
        };
        if graph.vertex_count() > MAX_SESSION_VERTICES {
            return Err(SessionError::TooLarge(graph.vertex_count()));
        }
        let graph = Arc::new(graph);
        let (decomposition, relations) = analyze(&graph, spec.root)?;
        let palettes = spec.palette.palettes(graph.max_degree(), relations.forest_count())?;
        let [(_, palette)] = palettes[..] else {
            return Err(SessionError::PaletteRule);
        };
        let state = GameState::new(graph.clone(), palette.max(1))?;
        let relations = Arc::new(relations);
        let bob = spec.spectate.map(|b| b.build(&relations, Lookahead::default(), spec.seed));
        let header = Event::Header {
            schema: SCHEMA_VERSION,
            graph: graph.to_text(),
            palette: state.palette(),
            alice: "activation".into(),
            bob: spec.spectate.map_or_else(|| "human".to_string(), |b| b.to_string()),
            seed: spec.seed,
        };
        let mut session = Session {
            alice: ActivationStrategy::new(relations.clone()),
            spec,
            graph,
            decomposition,
            relations,
            state,
            bob,
            events: vec![header],
        };
        let mut first = session.clone_state();
        first.alice_reply()?;
        session.commit(first);
        Ok(session)
    }

    fn clone_state(&self) -> Pending {
        Pending {
            state: self.state.clone(),
            alice: self.alice.clone(),
            events: Vec::new(),
            moves: Vec::new(),
        }
    }

    fn commit(&mut self, p: Pending) -> Transition {
        let first_event = self.events.len();
        self.state = p.state;
        self.alice = p.alice;
        self.events.extend(p.events.iter().cloned());
        Transition { first_event, events: p.events, moves: p.moves, status: self.state.status() }
    }

    pub fn spec(&self) -> &SessionSpec {
        &self.spec
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn relations(&self) -> &Arc<Relations> {
        &self.relations
    }

    pub fn decomposition(&self) -> &OrientedForestDecomposition {
        &self.decomposition
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }

    pub fn status(&self) -> Status {
        self.state.status()
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// The event log so far, with an outcome line once the game is over.
    pub fn transcript(&self) -> Transcript {
        let mut events = self.events.clone();
        let status = self.state.status();
        if status != Status::Ongoing {
            events.push(Event::Outcome { status, moves: self.state.history().len() });
        }
        Transcript { events }
    }

    pub fn resolve(&self, r: IncidenceRef) -> Result<IncidenceId, SessionError> {
        r.resolve(&self.graph).ok_or(SessionError::UnknownIncidence { vertex: r.vertex, edge: r.edge })
    }

    /// Applies Bob's move and Alice's reply as one transition. On error the
    /// session is unchanged.
    pub fn submit_bob_move(&mut self, incidence: IncidenceRef, color: Color) -> Result<Transition, SessionError> {
        if self.bob.is_some() {
            return Err(SessionError::Spectating);
        }
        let i = self.resolve(incidence)?;
        let mut p = self.clone_state();
        p.bob_move(i, color)?;
        if p.state.status() == Status::Ongoing {
            p.alice_reply()?;
        }
        Ok(self.commit(p))
    }

    /// Spectate mode: the engine Bob moves, then Alice replies.
    pub fn step(&mut self) -> Result<Transition, SessionError> {
        let Some(bob) = self.bob.as_mut() else {
            return Err(SessionError::NotSpectating);
        };
        if self.state.status() != Status::Ongoing {
            return Err(GameError::GameOver.into());
        }
        let mut p = Pending { state: self.state.clone(), alice: self.alice.clone(), events: Vec::new(), moves: Vec::new() };
        let (i, c) = bob.choose(&p.state, &mut p.events)?;
        p.bob_move(i, c)?;
        if p.state.status() == Status::Ongoing {
            p.alice_reply()?;
        }
        Ok(self.commit(p))
    }

    pub fn hints(&self) -> Hints {
        let incidences = self
            .relations
            .ordered()
            .map(|i| {
                let inc = self.graph.incidence(i);
                IncidenceHint {
                    id: i.0,
                    vertex: inc.vertex,
                    edge: inc.edge.0,
                    kind: self.relations.kind(i),
                    forest: self.decomposition.forest_of[inc.edge.0],
                    color: self.state.color_of(i),
                    available: self.state.available_colors(i).map(|s| s.iter().collect()).unwrap_or_default(),
                    active: self.alice.is_active(&self.state, i),
                    climbs: self.alice.climb_counts()[i.0],
                }
            })
            .collect();
        Hints { palette: self.state.palette(), status: self.state.status(), turn: self.state.turn(), incidences }
    }

    pub fn view(&self) -> SessionView {
        let d = &self.decomposition;
        SessionView {
            graph: self.graph.to_text(),
            vertices: self.graph.vertex_count(),
            edges: self
                .graph
                .edges()
                .map(|(e, endpoints)| EdgeView {
                    id: e.0,
                    endpoints,
                    forest: d.forest_of[e.0],
                    orientation: d.orientation[e.0],
                })
                .collect(),
            forests: d.forest_count,
            roots: d.roots.clone(),
            max_degree: self.graph.max_degree(),
            palette: self.state.palette(),
            palette_rule: self.spec.palette.clone(),
            status: self.state.status(),
            turn: self.state.turn(),
            coloring: self.graph.incidence_ids().map(|i| self.state.color_of(i)).collect(),
            history: self.state.history().to_vec(),
            event_count: self.events.len(),
            spectate: self.spec.spectate,
        }
    }
}

/// A transition being built on copies of the session state.
struct Pending {
    state: GameState,
    alice: ActivationStrategy,
    events: Vec<Event>,
    moves: Vec<MoveRecord>,
}

impl Pending {
    fn record(&mut self, mover: Mover, i: IncidenceId, color: Color) -> Result<(), GameError> {
        let m = *self.state.apply_move(mover, i, color)?;
        let r = IncidenceRef::of(self.state.graph(), i);
        self.events.push(Event::Move { index: m.index, mover, vertex: r.vertex, edge: r.edge, color });
        self.moves.push(m);
        Ok(())
    }

    fn bob_move(&mut self, i: IncidenceId, color: Color) -> Result<(), GameError> {
        self.record(Mover::Bob, i, color)
    }

    fn alice_reply(&mut self) -> Result<(), SessionError> {
        if self.state.status() != Status::Ongoing {
            return Ok(());
        }
        let (i, c) = self.alice.choose(&self.state, &mut self.events)?;
        self.record(Mover::Alice, i, c)?;
        Ok(())
    }
}
