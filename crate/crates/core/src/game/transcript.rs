//! Game transcripts and their JSON Lines form.
//!
//! A transcript starts with a `header` event carrying the graph text, palette,
//! player names and seed, followed by move events with strategy trace and
//! monitor events interleaved, and ends with an `outcome` event.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::state::{GameError, GameState, Mover, Status};
use crate::color::Color;
use crate::graph::{EdgeId, Graph, GraphError, Incidence, IncidenceId, Vertex};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IncidenceRef {
    pub vertex: Vertex,
    pub edge: usize,
}

impl IncidenceRef {
    pub fn of(graph: &Graph, i: IncidenceId) -> Self {
        let inc = graph.incidence(i);
        IncidenceRef { vertex: inc.vertex, edge: inc.edge.0 }
    }

    pub fn resolve(&self, graph: &Graph) -> Option<IncidenceId> {
        graph.incidence_id(Incidence { vertex: self.vertex, edge: EdgeId(self.edge) })
    }
}

/// Which rule of the activation strategy selected Alice's move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// First move on a fatherless incidence.
    #[serde(rename = "R1")]
    FirstMove,
    /// Bob colored a down incidence with colored down-fathers; Alice answers
    /// on an uncolored down-brother.
    #[serde(rename = "R2.2.1")]
    DownBrother,
    /// Same trigger, no uncolored down-brother left.
    #[serde(rename = "R2.2.2")]
    DownFallback,
    /// Any other Bob move: Alice climbs it.
    #[serde(rename = "R3")]
    Climb,
    /// The climb reached an active incidence and colors it.
    #[serde(rename = "R3.1")]
    ColorActive,
    /// The climb ran out of uncolored fathers.
    #[serde(rename = "R3.2")]
    ClimbExhausted,
    /// A non-strategy player (baseline or mutant) chose the move.
    #[serde(rename = "other")]
    Other,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Event {
    Header { schema: u32, graph: String, palette: Color, alice: String, bob: String, seed: u64 },
    Move { index: usize, mover: Mover, vertex: Vertex, edge: usize, color: Color },
    Rule { rule: Rule },
    Climb { vertex: Vertex, edge: usize, count: u8 },
    Activate { vertex: Vertex, edge: usize },
    NeutralMove { cycle: Vec<IncidenceRef> },
    /// How Alice picked the color of her next move; `from_down_brothers`
    /// marks a color reused from the down-brothers.
    ColorChoice { vertex: Vertex, edge: usize, color: Color, from_down_brothers: bool },
    /// Alice colors something neither neutral nor active; the candidate set
    /// that was chosen from is recorded in `reason`.
    Choice { vertex: Vertex, edge: usize, reason: String },
    Snapshot { check: String, evaluations: u64, violations: u64 },
    Outcome { status: Status, moves: usize },
}

impl Event {
    pub fn incidence(&self, graph: &Graph) -> Option<IncidenceId> {
        match *self {
            Event::Move { vertex, edge, .. }
            | Event::Climb { vertex, edge, .. }
            | Event::Activate { vertex, edge }
            | Event::ColorChoice { vertex, edge, .. }
            | Event::Choice { vertex, edge, .. } => IncidenceRef { vertex, edge }.resolve(graph),
            _ => None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum TranscriptError {
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("transcript has no header")]
    MissingHeader,
    #[error("bad graph in header: {0}")]
    Graph(#[from] GraphError),
    #[error("move {index} does not name an incidence of the graph")]
    UnknownIncidence { index: usize },
    #[error("move {index} is illegal on replay: {source}")]
    Illegal { index: usize, source: GameError },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transcript {
    pub events: Vec<Event>,
}

impl Transcript {
    pub fn header(&self) -> Option<&Event> {
        self.events.first().filter(|e| matches!(e, Event::Header { .. }))
    }

    pub fn outcome(&self) -> Option<Status> {
        self.events.iter().rev().find_map(|e| match e {
            Event::Outcome { status, .. } => Some(*status),
            _ => None,
        })
    }

    pub fn move_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Move { .. })).count()
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for e in &self.events {
            out.push_str(&serde_json::to_string(e).expect("events serialize"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Self, TranscriptError> {
        let events = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(n, l)| serde_json::from_str(l).map_err(|source| TranscriptError::Json { line: n + 1, source }))
            .collect::<Result<Vec<Event>, _>>()?;
        Ok(Transcript { events })
    }

    /// Rebuilds the final state by replaying every move event.
    pub fn replay(&self) -> Result<GameState, TranscriptError> {
        let Some(Event::Header { graph, palette, .. }) = self.header() else {
            return Err(TranscriptError::MissingHeader);
        };
        let graph = Arc::new(Graph::parse_text(graph)?);
        let mut state = GameState::new(graph.clone(), *palette as usize)
            .map_err(|source| TranscriptError::Illegal { index: 0, source })?;
        for e in &self.events {
            if let Event::Move { index, mover, vertex, edge, color } = *e {
                let i = IncidenceRef { vertex, edge }.resolve(&graph).ok_or(TranscriptError::UnknownIncidence { index })?;
                state.apply_move(mover, i, color).map_err(|source| TranscriptError::Illegal { index, source })?;
            }
        }
        Ok(state)
    }
}
