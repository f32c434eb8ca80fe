use crate::color::Color;
use crate::game::{Event, GameState, Rule, Strategy, StrategyFailure};
use crate::graph::IncidenceId;

/// Control strategy: lowest uncolored incidence, lowest available color.
#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyAlice;

impl Strategy for GreedyAlice {
    fn name(&self) -> String {
        "greedy".into()
    }

    fn choose(&mut self, state: &GameState, trace: &mut Vec<Event>) -> Result<(IncidenceId, Color), StrategyFailure> {
        let i = state.uncolored().next().ok_or(StrategyFailure::NoMove)?;
        let c = state.available_colors(i).ok().and_then(|a| a.min()).ok_or(StrategyFailure::NoColor { incidence: i.0 })?;
        trace.push(Event::Rule { rule: Rule::Other });
        Ok((i, c))
    }
}
