use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::color::Color;
use crate::game::{Event, GameState, Strategy, StrategyFailure};
use crate::graph::IncidenceId;

/// Uniform over the legal (incidence, color) pairs.
#[derive(Debug, Clone)]
pub struct RandomBob {
    rng: ChaCha8Rng,
}

impl RandomBob {
    pub fn new(seed: u64) -> Self {
        RandomBob { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl Strategy for RandomBob {
    fn name(&self) -> String {
        "random".into()
    }

    fn choose(&mut self, state: &GameState, _: &mut Vec<Event>) -> Result<(IncidenceId, Color), StrategyFailure> {
        let moves = state.legal_moves();
        if moves.is_empty() {
            return Err(StrategyFailure::NoMove);
        }
        Ok(moves[self.rng.random_range(0..moves.len())])
    }
}
