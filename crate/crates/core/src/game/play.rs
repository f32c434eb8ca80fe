use std::sync::Arc;

use super::state::{GameError, GameState, Mover, Status};
use super::transcript::{Event, Transcript, SCHEMA_VERSION};
use crate::color::Color;
use crate::graph::{Graph, IncidenceId};

/// Why a player could not produce a move.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrategyFailure {
    #[error("no available color for incidence {incidence}")]
    NoColor { incidence: usize },
    #[error("down incidence {incidence} has {distinct} down-brother colors but none is available")]
    DownBrotherColorsExhausted { incidence: usize, distinct: usize },
    #[error("no legal move")]
    NoMove,
    #[error("internal strategy error: {0}")]
    Internal(String),
}

/// A player of either side.
pub trait Strategy {
    fn name(&self) -> String;

    /// Picks a move for the side to play. Trace events pushed onto `trace`
    /// are recorded before the move itself.
    fn choose(&mut self, state: &GameState, trace: &mut Vec<Event>) -> Result<(IncidenceId, Color), StrategyFailure>;
}

/// Receives every event as it is recorded.
pub trait EventSink {
    fn record(&mut self, graph: &Graph, event: &Event);
}

#[derive(Debug, thiserror::Error)]
pub enum PlayErrorKind {
    #[error("strategy failure: {0}")]
    Strategy(#[from] StrategyFailure),
    #[error("illegal move: {0}")]
    Illegal(#[from] GameError),
}

#[derive(Debug, thiserror::Error)]
#[error("{mover:?} failed: {kind}")]
pub struct PlayError {
    pub mover: Mover,
    pub kind: PlayErrorKind,
    pub transcript: Box<Transcript>,
}

/// Plays one game from the empty coloring.
pub fn play(
    graph: Arc<Graph>,
    palette: usize,
    alice: &mut dyn Strategy,
    bob: &mut dyn Strategy,
    seed: u64,
    mut sink: Option<&mut dyn EventSink>,
) -> Result<Transcript, PlayError> {
    let mut events = Vec::new();
    let emit = |events: &mut Vec<Event>, e: Event, sink: &mut Option<&mut dyn EventSink>| {
        if let Some(s) = sink.as_deref_mut() {
            s.record(&graph, &e);
        }
        events.push(e);
    };
    emit(
        &mut events,
        Event::Header {
            schema: SCHEMA_VERSION,
            graph: graph.to_text(),
            palette: palette.min(u16::MAX as usize) as Color,
            alice: alice.name(),
            bob: bob.name(),
            seed,
        },
        &mut sink,
    );
    let mut state = match GameState::new(graph.clone(), palette) {
        Ok(s) => s,
        Err(e) => {
            return Err(PlayError { mover: Mover::Alice, kind: e.into(), transcript: Box::new(Transcript { events }) })
        }
    };
    loop {
        let status = state.status();
        if status != Status::Ongoing {
            emit(&mut events, Event::Outcome { status, moves: state.history().len() }, &mut sink);
            return Ok(Transcript { events });
        }
        let mover = state.turn();
        let player: &mut dyn Strategy = match mover {
            Mover::Alice => &mut *alice,
            Mover::Bob => &mut *bob,
        };
        let mut trace = Vec::new();
        let choice = player.choose(&state, &mut trace);
        for e in trace {
            emit(&mut events, e, &mut sink);
        }
        let (i, color) = match choice {
            Ok(m) => m,
            Err(f) => return Err(PlayError { mover, kind: f.into(), transcript: Box::new(Transcript { events }) }),
        };
        if let Err(e) = state.apply_move(mover, i, color) {
            return Err(PlayError { mover, kind: e.into(), transcript: Box::new(Transcript { events }) });
        }
        let inc = graph.incidence(i);
        emit(
            &mut events,
            Event::Move { index: state.history().len() - 1, mover, vertex: inc.vertex, edge: inc.edge.0, color },
            &mut sink,
        );
    }
}
