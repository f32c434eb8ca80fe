use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

#[cfg(feature = "mutants")]
use crate::alice::mutants::Mutation;
use crate::alice::ActivationStrategy;
use crate::forest::Relations;
use crate::game::Strategy;
use crate::opponents::{ExactPlayer, GreedyAlice, LookaheadBob, RandomBob, SpoilerBob};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlicePlayer {
    #[default]
    Activation,
    Greedy,
    Exact,
    #[cfg(feature = "mutants")]
    Mutant(Mutation),
}

impl AlicePlayer {
    /// Whether this is the activation strategy, mutated or not.
    pub fn follows_strategy(self) -> bool {
        match self {
            AlicePlayer::Activation => true,
            #[cfg(feature = "mutants")]
            AlicePlayer::Mutant(_) => true,
            _ => false,
        }
    }

    pub fn build(self, relations: &Arc<Relations>) -> Box<dyn Strategy + Send> {
        match self {
            AlicePlayer::Activation => Box::new(ActivationStrategy::new(relations.clone())),
            AlicePlayer::Greedy => Box::new(GreedyAlice),
            AlicePlayer::Exact => Box::new(ExactPlayer::default()),
            #[cfg(feature = "mutants")]
            AlicePlayer::Mutant(m) => Box::new(ActivationStrategy::with_mutation(relations.clone(), m)),
        }
    }
}

impl fmt::Display for AlicePlayer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlicePlayer::Activation => f.write_str("activation"),
            AlicePlayer::Greedy => f.write_str("greedy"),
            AlicePlayer::Exact => f.write_str("exact"),
            #[cfg(feature = "mutants")]
            AlicePlayer::Mutant(m) => write!(f, "mutant:{m:?}"),
        }
    }
}

impl FromStr for AlicePlayer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "activation" | "strategy" => Ok(AlicePlayer::Activation),
            "greedy" => Ok(AlicePlayer::Greedy),
            "exact" => Ok(AlicePlayer::Exact),
            other => Err(format!("unknown Alice player {other:?} (expected strategy, greedy or exact)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BobPlayer {
    Random,
    Spoiler,
    /// Depth-limited minimax over the spoiler score.
    Minimax,
    /// Full-game solver; only for graphs inside the solver limits.
    Exact,
}

impl BobPlayer {
    pub const CAMPAIGN: [BobPlayer; 3] = [BobPlayer::Random, BobPlayer::Spoiler, BobPlayer::Minimax];

    pub fn build(self, relations: &Arc<Relations>, lookahead: Lookahead, seed: u64) -> Box<dyn Strategy + Send> {
        match self {
            BobPlayer::Random => Box::new(RandomBob::new(seed)),
            BobPlayer::Spoiler => Box::new(SpoilerBob::new(relations.clone())),
            BobPlayer::Minimax => Box::new(LookaheadBob::new(relations.clone(), lookahead.plies, lookahead.beam)),
            BobPlayer::Exact => Box::new(ExactPlayer::default()),
        }
    }
}

impl fmt::Display for BobPlayer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BobPlayer::Random => "random",
            BobPlayer::Spoiler => "spoiler",
            BobPlayer::Minimax => "minimax",
            BobPlayer::Exact => "exact",
        })
    }
}

impl FromStr for BobPlayer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random" => Ok(BobPlayer::Random),
            "spoiler" => Ok(BobPlayer::Spoiler),
            "minimax" | "lookahead" => Ok(BobPlayer::Minimax),
            "exact" => Ok(BobPlayer::Exact),
            other => Err(format!("unknown Bob player {other:?} (expected random, spoiler, minimax or exact)")),
        }
    }
}

/// Search shape of the depth-limited minimax Bob.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lookahead {
    pub plies: usize,
    pub beam: usize,
}

impl Default for Lookahead {
    fn default() -> Self {
        Lookahead { plies: 3, beam: 4 }
    }
}
