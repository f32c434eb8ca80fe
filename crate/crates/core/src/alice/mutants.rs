//! Deliberately broken variants of the activation strategy, used to show
//! that each invariant monitor can fire.

use serde::{Deserialize, Serialize};

use super::ActivationStrategy;
use crate::color::{Color, ColorSet};
use crate::forest::{Relation, Relations};
use crate::game::{Event, GameState, Rule};
use crate::graph::IncidenceId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutation {
    /// Answers a climb-triggering move with a neutral or active incidence
    /// without climbing.
    SkipClimb,
    /// Climbs without activating anything.
    NoActivation,
    /// Down incidences avoid the colors of their down-brothers.
    AvoidDownBrotherColors,
    /// Always colors the lowest uncolored incidence.
    ColorLowestUncolored,
    /// Spends its moves spreading fresh colors over the down-brothers of a
    /// down incidence, copying them onto that incidence's sons and uncles,
    /// and then giving its sons colors it does not see yet.
    Saboteur,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::SkipClimb,
        Mutation::NoActivation,
        Mutation::AvoidDownBrotherColors,
        Mutation::ColorLowestUncolored,
        Mutation::Saboteur,
    ];
}

/// Mutations that replace the whole move. `None` defers to the strategy.
pub(super) fn whole_move(
    alice: &ActivationStrategy,
    mutation: Mutation,
    state: &GameState,
    trace: &mut Vec<Event>,
) -> Option<(IncidenceId, Color)> {
    let choice = match mutation {
        Mutation::ColorLowestUncolored => {
            let i = alice.relations.ordered().find(|&i| !state.is_colored(i))?;
            Some((i, state.available_colors(i).ok()?.min()?))
        }
        Mutation::Saboteur => sabotage(&alice.relations, state),
        _ => None,
    }?;
    trace.push(Event::Rule { rule: Rule::Other });
    Some(choice)
}

/// The saboteur's move for whoever is to play, if it has one.
pub fn sabotage(rel: &Relations, state: &GameState) -> Option<(IncidenceId, Color)> {
    let targets: Vec<IncidenceId> = rel.ordered().filter(|&i| rel.is_down(i) && !state.is_colored(i)).collect();
    // Copy a down-brother color onto an uncolored son or uncle, shrinking what
    // is left for the target.
    for &i in &targets {
        let brothers = rel.colors_of(state.coloring(), i, Relation::DownBrothers);
        let open = brothers.intersection(&state.available_colors(i).ok()?);
        for r in [Relation::TopSons, Relation::DownSons, Relation::TopUncles, Relation::DownUncles] {
            for &s in rel.get(i, r) {
                if state.is_colored(s) {
                    continue;
                }
                if let Some(c) = open.intersection(&state.available_colors(s).ok()?).min() {
                    return Some((s, c));
                }
            }
        }
    }
    // Otherwise give a down-brother a color none of its brothers carry.
    for &i in &targets {
        let brothers = rel.colors_of(state.coloring(), i, Relation::DownBrothers);
        for &b in rel.get(i, Relation::DownBrothers) {
            if state.is_colored(b) {
                continue;
            }
            let fresh: ColorSet = state.available_colors(b).ok()?.difference(&brothers);
            if let Some(c) = fresh.min() {
                return Some((b, c));
            }
        }
    }
    // Otherwise give a son a color the target does not see yet.
    for &i in &targets {
        let seen = rel.forbidden_colors(state.coloring(), i);
        for r in [Relation::TopSons, Relation::DownSons] {
            for &s in rel.get(i, r) {
                if state.is_colored(s) {
                    continue;
                }
                if let Some(c) = state.available_colors(s).ok()?.difference(&seen).min() {
                    return Some((s, c));
                }
            }
        }
    }
    None
}
