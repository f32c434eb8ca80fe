//! Rules of the incidence coloring game.

mod play;
mod state;
mod transcript;

pub use play::{play, EventSink, PlayError, PlayErrorKind, Strategy, StrategyFailure};
pub use state::{GameError, GameState, MoveRecord, Mover, Status};
pub use transcript::{Event, IncidenceRef, Rule, Transcript, TranscriptError, SCHEMA_VERSION};
