//! Engine, activation strategy, exact solvers and verification harness for
//! the incidence coloring game.
//!
//! Two players alternately color the incidences of a graph with colors
//! `1..=k`, Alice first, keeping the coloring proper. Alice wins when every
//! incidence is colored. [`alice::ActivationStrategy`] plays Alice's
//! arboricity-based strategy over a rooted forest decomposition; the
//! [`harness`] runs campaigns against several Bob players and checks the
//! counting bounds the strategy is meant to maintain.

pub mod alice;
pub mod color;
pub mod forest;
pub mod game;
pub mod graph;
pub mod harness;
pub mod opponents;
pub mod session;

pub use color::{Color, ColorSet};
pub use graph::{EdgeId, Graph, Incidence, IncidenceId, Vertex};
