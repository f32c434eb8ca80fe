//! Liveness of the monitors: each mutant of the activation strategy is run
//! until the monitor it should trip reports a violation.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::campaign::{run_game_with, GameSetup, Instance};
use super::monitor::Check;
use super::players::{AlicePlayer, BobPlayer, Lookahead};
use crate::alice::mutants::{sabotage, Mutation};
use crate::color::Color;
use crate::forest::Relations;
use crate::game::{Event, GameState, Strategy, StrategyFailure};
use crate::graph::IncidenceId;

/// The monitors each mutation is expected to trip.
pub fn targets(m: Mutation) -> &'static [Check] {
    match m {
        Mutation::SkipClimb => &[Check::DownConflicts],
        Mutation::NoActivation => &[Check::ClimbLimit],
        Mutation::AvoidDownBrotherColors => &[Check::DownBrotherColors],
        Mutation::ColorLowestUncolored => &[Check::NeutralOrActive],
        Mutation::Saboteur => &[Check::DownBrotherReuse, Check::DownAvailable],
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutantFinding {
    pub mutation: Mutation,
    pub target: Check,
    /// Game id of the first firing, if any.
    pub fired_in: Option<String>,
    pub games: usize,
}

/// Bob playing the saboteur's moves too, else the lowest legal move that
/// leaves every down incidence alone.
#[derive(Debug, Clone)]
pub struct Accomplice {
    relations: Arc<Relations>,
}

impl Accomplice {
    pub fn new(relations: Arc<Relations>) -> Self {
        Accomplice { relations }
    }
}

impl Strategy for Accomplice {
    fn name(&self) -> String {
        "accomplice".into()
    }

    fn choose(&mut self, state: &GameState, _: &mut Vec<Event>) -> Result<(IncidenceId, Color), StrategyFailure> {
        if let Some(m) = sabotage(&self.relations, state) {
            return Ok(m);
        }
        let moves = state.legal_moves();
        moves
            .iter()
            .find(|(i, _)| !self.relations.is_down(*i))
            .or(moves.first())
            .copied()
            .ok_or(StrategyFailure::NoMove)
    }
}

/// Who plays Bob against a mutant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Partner {
    Bob(BobPlayer),
    Accomplice,
}

/// Plays the mutant at each instance's theorem palette against each partner
/// in turn and stops at the first game where `check` fires.
pub fn hunt(mutation: Mutation, check: Check, instances: &[Instance], partners: &[Partner], seeds: u64) -> MutantFinding {
    let mut games = 0;
    for inst in instances.iter().filter(|i| i.graph.edge_count() > 0) {
        for &partner in partners {
            for seed in 0..seeds {
                games += 1;
                let (bob, label) = match partner {
                    Partner::Bob(b) => (b, b.to_string()),
                    Partner::Accomplice => (BobPlayer::Random, "accomplice".to_string()),
                };
                let setup = GameSetup {
                    id: format!("{}-{mutation:?}-{label}-s{seed}", inst.label),
                    palette_rule: "theorem".into(),
                    palette: inst.theorem_bound(),
                    alice: AlicePlayer::Mutant(mutation),
                    bob,
                    lookahead: Lookahead::default(),
                    game_seed: seed,
                    monitors: true,
                };
                let alice = setup.alice.build(&inst.relations);
                let opponent: Box<dyn Strategy + Send> = match partner {
                    Partner::Bob(b) => b.build(&inst.relations, setup.lookahead, seed),
                    Partner::Accomplice => Box::new(Accomplice::new(inst.relations.clone())),
                };
                let result = run_game_with(inst, &setup, alice, opponent);
                if result.invariants.get(check).violations > 0 {
                    return MutantFinding { mutation, target: check, fired_in: Some(setup.id), games };
                }
            }
        }
    }
    MutantFinding { mutation, target: check, fired_in: None, games }
}
