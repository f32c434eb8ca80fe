use std::sync::Arc;

use super::pressure::Pressure;
use crate::color::Color;
use crate::forest::{Relation, Relations};
use crate::game::{Event, GameState, Mover, Strategy, StrategyFailure};
use crate::graph::IncidenceId;

fn score(p: Option<u32>) -> u32 {
    p.unwrap_or(u32::MAX)
}

/// Legal moves with the tightest available count each leaves, best for
/// `mover` first.
fn ranked_moves(state: &GameState, relations: &Relations, mover: Mover) -> Vec<(u32, IncidenceId, Color)> {
    let mut pressure = Pressure::of(state);
    let mut moves = Vec::new();
    for i in state.uncolored() {
        for c in pressure.available(i).clone().iter() {
            moves.push((score(pressure.after(state, i, c)), i, c));
        }
    }
    let stresses_r2 = |i: IncidenceId| {
        relations.is_down(i) && relations.get(i, Relation::DownFathers).iter().all(|&f| state.is_colored(f))
    };
    match mover {
        Mover::Bob => moves.sort_by_key(|&(s, i, c)| (s, !stresses_r2(i), i.0, c)),
        Mover::Alice => moves.sort_by_key(|&(s, i, c)| (std::cmp::Reverse(s), i.0, c)),
    }
    moves
}

/// One-step greedy Bob: the move leaving the fewest available colors on
/// some uncolored incidence. Ties go to down incidences whose down-fathers
/// are all colored, then to the lowest incidence and color.
#[derive(Debug, Clone)]
pub struct SpoilerBob {
    relations: Arc<Relations>,
}

impl SpoilerBob {
    pub fn new(relations: Arc<Relations>) -> Self {
        SpoilerBob { relations }
    }
}

impl Strategy for SpoilerBob {
    fn name(&self) -> String {
        "spoiler".into()
    }

    fn choose(&mut self, state: &GameState, _: &mut Vec<Event>) -> Result<(IncidenceId, Color), StrategyFailure> {
        ranked_moves(state, &self.relations, Mover::Bob)
            .first()
            .map(|&(_, i, c)| (i, c))
            .ok_or(StrategyFailure::NoMove)
    }
}

/// Depth-limited minimax Bob over the spoiler score. Each side considers
/// only its `beam` best moves by immediate score; the leaf value is the
/// smallest available count.
#[derive(Debug, Clone)]
pub struct LookaheadBob {
    relations: Arc<Relations>,
    plies: usize,
    beam: usize,
}

impl LookaheadBob {
    pub fn new(relations: Arc<Relations>, plies: usize, beam: usize) -> Self {
        LookaheadBob { relations, plies: plies.max(1), beam: beam.max(1) }
    }

    fn value(&self, state: &GameState, plies: usize, mover: Mover) -> u32 {
        let moves = ranked_moves(state, &self.relations, mover);
        let Some(&(first, _, _)) = moves.first() else {
            return score(Pressure::of(state).min());
        };
        if plies == 1 || first == 0 || first == u32::MAX {
            return first;
        }
        let children = moves.iter().take(self.beam).map(|&(s, i, c)| {
            if s == 0 || s == u32::MAX {
                return s;
            }
            let next = state.with_move(mover, i, c).expect("legal move");
            self.value(&next, plies - 1, mover.other())
        });
        match mover {
            Mover::Bob => children.min(),
            Mover::Alice => children.max(),
        }
        .expect("nonempty beam")
    }
}

impl Strategy for LookaheadBob {
    fn name(&self) -> String {
        format!("minimax(plies={},beam={})", self.plies, self.beam)
    }

    fn choose(&mut self, state: &GameState, _: &mut Vec<Event>) -> Result<(IncidenceId, Color), StrategyFailure> {
        let moves = ranked_moves(state, &self.relations, Mover::Bob);
        let mut best: Option<(u32, IncidenceId, Color)> = None;
        for &(s, i, c) in moves.iter().take(self.beam) {
            let v = if s == 0 || s == u32::MAX || self.plies == 1 {
                s
            } else {
                let next = state.with_move(Mover::Bob, i, c).expect("legal move");
                self.value(&next, self.plies - 1, Mover::Alice)
            };
            if best.is_none_or(|(b, _, _)| v < b) {
                best = Some((v, i, c));
            }
            if v == 0 {
                break;
            }
        }
        best.map(|(_, i, c)| (i, c)).ok_or(StrategyFailure::NoMove)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{analyze, RootPolicy};
    use crate::graph::{generate, Family, Graph};

    fn setup(g: Graph, k: usize) -> (GameState, Arc<Relations>) {
        let g = Arc::new(g);
        let (_, rel) = analyze(&g, RootPolicy::FirstVertex).unwrap();
        (GameState::new(g, k).unwrap(), Arc::new(rel))
    }

    #[test]
    fn spoilers_take_an_immediate_win() {
        use rand::{Rng, SeedableRng};
        let (start, rel) = setup(generate(&Family::Wheel { spokes: 4 }, 0).unwrap(), 7);
        let mut found = 0;
        for seed in 0..200 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut s = start.clone();
            while s.status() == crate::game::Status::Ongoing {
                if s.turn() == Mover::Bob {
                    let killers = s
                        .legal_moves()
                        .into_iter()
                        .filter(|&(i, c)| s.with_move(Mover::Bob, i, c).unwrap().status() == crate::game::Status::BobWins)
                        .count();
                    if killers > 0 {
                        found += 1;
                        for bob in [&mut SpoilerBob::new(rel.clone()) as &mut dyn Strategy, &mut LookaheadBob::new(rel.clone(), 3, 4)] {
                            let (i, c) = bob.choose(&s, &mut Vec::new()).unwrap();
                            assert_eq!(s.with_move(Mover::Bob, i, c).unwrap().status(), crate::game::Status::BobWins);
                        }
                    }
                }
                let moves = s.legal_moves();
                let (i, c) = moves[rng.random_range(0..moves.len())];
                s.apply_move(s.turn(), i, c).unwrap();
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn spoiler_tie_break_is_deterministic() {
        let (s, rel) = setup(generate(&Family::Star { leaves: 4 }, 0).unwrap(), 12);
        let a = SpoilerBob::new(rel.clone()).choose(&s, &mut Vec::new()).unwrap();
        let b = SpoilerBob::new(rel.clone()).choose(&s, &mut Vec::new()).unwrap();
        assert_eq!(a, b);
        // On the empty board every move leaves the same minimum.
        assert!(rel.is_down(a.0));
    }

    #[test]
    fn ranked_scores_match_recomputation() {
        let (mut s, rel) = setup(generate(&Family::Gnp { n: 7, p: 0.5, max_degree: None }, 4).unwrap(), 9);
        let seq = [(0usize, 1), (3, 2), (5, 1)];
        for (n, &(i, c)) in seq.iter().enumerate() {
            let mover = if n % 2 == 0 { Mover::Alice } else { Mover::Bob };
            if s.validate_move(mover, IncidenceId(i), c).is_ok() {
                s.apply_move(mover, IncidenceId(i), c).unwrap();
            } else {
                break;
            }
        }
        let mover = s.turn();
        for (score, i, c) in ranked_moves(&s, &rel, mover) {
            let next = s.with_move(mover, i, c).unwrap();
            let direct = next.uncolored().map(|j| next.available_colors(j).unwrap().len() as u32).min();
            assert_eq!(score, direct.unwrap_or(u32::MAX));
        }
    }
}
