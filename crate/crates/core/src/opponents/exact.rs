//! Full-game minimax for tiny graphs.
//!
//! A position is a coloring; the side to move follows from how many
//! incidences are colored. Positions are memoized up to a renaming of the
//! colors: the canonical form relabels colors in order of first appearance
//! along the incidence order. Colors never used so far are interchangeable,
//! so only the lowest of them is tried as a move.

use std::collections::HashMap;
use std::ops::RangeInclusive;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::color::Color;
use crate::game::{Event, GameState, Mover, Rule, Strategy, StrategyFailure};
use crate::graph::{Graph, IncidenceId};
use crate::harness::{lower_bound, trivial_upper_bound};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveLimits {
    pub max_incidences: usize,
    pub max_palette: usize,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits { max_incidences: 12, max_palette: 8 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("{incidences} incidences with {palette} colors exceeds the solver limits ({} incidences, {} colors)", limits.max_incidences, limits.max_palette)]
    TooLarge { incidences: usize, palette: usize, limits: SolveLimits },
    #[error("palette must have at least one color")]
    EmptyPalette,
    #[error("empty palette range")]
    EmptyRange,
}

/// Exact winner of the game on one graph with one palette size.
#[derive(Debug, Clone)]
pub struct Solver {
    graph: Arc<Graph>,
    palette: usize,
    conflicts: Vec<Vec<usize>>,
    /// Nothing can ever run out of colors.
    trivial: bool,
    memo: Option<HashMap<u64, bool>>,
    nodes: u64,
}

impl Solver {
    pub fn new(graph: Arc<Graph>, palette: usize, limits: SolveLimits) -> Result<Self, SolveError> {
        if palette == 0 {
            return Err(SolveError::EmptyPalette);
        }
        let conflicts: Vec<Vec<usize>> =
            graph.incidence_ids().map(|i| graph.conflicts(i).iter().map(|j| j.0).collect()).collect();
        let max_conflicts = conflicts.iter().map(Vec::len).max().unwrap_or(0);
        let trivial = palette > max_conflicts;
        let n = graph.incidence_count();
        if !trivial && (n > limits.max_incidences || palette > limits.max_palette || n > 16 || palette > 15) {
            return Err(SolveError::TooLarge { incidences: n, palette, limits });
        }
        Ok(Solver { graph, palette, conflicts, trivial, memo: Some(HashMap::new()), nodes: 0 })
    }

    /// Same search with memoization switched off.
    pub fn without_memo(mut self) -> Self {
        self.memo = None;
        self
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    /// Search nodes expanded so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Whether every incidence has more colors than conflicting incidences,
    /// which makes every play a win for Alice.
    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    fn forbidden_mask(&self, col: &[u8], i: usize) -> u32 {
        self.conflicts[i].iter().fold(0, |m, &j| if col[j] != 0 { m | 1 << col[j] } else { m })
    }

    fn full_mask(&self) -> u32 {
        ((1u32 << (self.palette + 1)) - 1) & !1
    }

    fn key(col: &[u8]) -> u64 {
        let mut relabel = [0u8; 16];
        let mut next = 1u8;
        let mut key = 0u64;
        for &c in col {
            let label = if c == 0 {
                0
            } else {
                if relabel[c as usize] == 0 {
                    relabel[c as usize] = next;
                    next += 1;
                }
                relabel[c as usize]
            };
            key = key << 4 | u64::from(label);
        }
        key
    }

    /// Alice wins from a position with no dead incidence and at least one
    /// uncolored incidence.
    fn search(&mut self, col: &mut [u8], colored: usize) -> bool {
        let key = Self::key(col);
        if let Some(&v) = self.memo.as_ref().and_then(|m| m.get(&key)) {
            return v;
        }
        self.nodes += 1;
        let alice = colored.is_multiple_of(2);
        let full = self.full_mask();
        let used = col.iter().fold(0u32, |m, &c| if c != 0 { m | 1 << c } else { m });
        let fresh = full & !used;
        let allowed = used | (fresh & fresh.wrapping_neg());
        let n = col.len();
        let mut result = !alice;
        'moves: for i in 0..n {
            if col[i] != 0 {
                continue;
            }
            let mut candidates = full & !self.forbidden_mask(col, i) & allowed;
            while candidates != 0 {
                let c = candidates.trailing_zeros() as u8;
                candidates &= candidates - 1;
                col[i] = c;
                let alice_wins = if colored + 1 == n {
                    true
                } else if self.conflicts[i].iter().any(|&j| col[j] == 0 && full & !self.forbidden_mask(col, j) == 0) {
                    false
                } else {
                    self.search(col, colored + 1)
                };
                col[i] = 0;
                if alice_wins == alice {
                    result = alice;
                    break 'moves;
                }
            }
        }
        if let Some(m) = self.memo.as_mut() {
            m.insert(key, result);
        }
        result
    }

    /// Winner under optimal play from `coloring` (`0` = uncolored), with the
    /// side to move given by the number of colored incidences.
    pub fn winner_from(&mut self, coloring: &[Color]) -> Mover {
        if self.trivial {
            return Mover::Alice;
        }
        let mut col: Vec<u8> = coloring.iter().map(|&c| c as u8).collect();
        let full = self.full_mask();
        let colored = col.iter().filter(|&&c| c != 0).count();
        if (0..col.len()).any(|i| col[i] == 0 && full & !self.forbidden_mask(&col, i) == 0) {
            return Mover::Bob;
        }
        if colored == col.len() || self.search(&mut col, colored) {
            Mover::Alice
        } else {
            Mover::Bob
        }
    }

    pub fn winner(&mut self) -> Mover {
        let empty = vec![0; self.graph.incidence_count()];
        self.winner_from(&empty)
    }

    /// A move that keeps the position won for the side to move, if any.
    pub fn winning_move(&mut self, state: &GameState) -> Option<(IncidenceId, Color)> {
        let mover = state.turn();
        state.legal_moves().into_iter().find(|&(i, c)| {
            let mut next = state.coloring().to_vec();
            next[i.0] = c;
            self.winner_from(&next) == mover
        })
    }
}

/// Exact winner on the empty board with default limits.
pub fn minimax_wins(graph: &Graph, palette: usize) -> Result<Mover, SolveError> {
    Ok(Solver::new(Arc::new(graph.clone()), palette, SolveLimits::default())?.winner())
}

/// Winners over a range of palette sizes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub wins: Vec<(usize, Mover)>,
    /// Smallest palette size in the range at which Alice wins.
    pub minimal_winning_k: Option<usize>,
    /// Whether Alice, once winning, wins at every larger size in the range.
    pub monotone: bool,
    pub nodes: u64,
    pub elapsed_ms: f64,
}

impl SolveResult {
    pub fn winner_at(&self, k: usize) -> Option<Mover> {
        self.wins.iter().find(|w| w.0 == k).map(|w| w.1)
    }
}

/// `⌈3Δ/2⌉ - 1 ..= 3Δ`, one past the known bracket on each side.
pub fn default_k_range(max_degree: usize) -> RangeInclusive<usize> {
    let lo = lower_bound(max_degree).saturating_sub(1).max(1);
    let hi = (trivial_upper_bound(max_degree) + 1).max(lo);
    lo..=hi
}

pub fn exact_ig(graph: &Graph, k_range: RangeInclusive<usize>, limits: SolveLimits) -> Result<SolveResult, SolveError> {
    if k_range.is_empty() {
        return Err(SolveError::EmptyRange);
    }
    let start = Instant::now();
    let graph = Arc::new(graph.clone());
    let solvers =
        k_range.clone().map(|k| Solver::new(graph.clone(), k, limits)).collect::<Result<Vec<_>, _>>()?;
    let solve = |mut s: Solver| {
        let w = s.winner();
        (s.palette(), w, s.nodes())
    };
    #[cfg(feature = "parallel")]
    let solved: Vec<(usize, Mover, u64)> = {
        use rayon::prelude::*;
        solvers.into_par_iter().map(solve).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let solved: Vec<(usize, Mover, u64)> = solvers.into_iter().map(solve).collect();
    let wins: Vec<(usize, Mover)> = solved.iter().map(|&(k, w, _)| (k, w)).collect();
    let minimal_winning_k = wins.iter().find(|w| w.1 == Mover::Alice).map(|w| w.0);
    let monotone = wins.iter().skip_while(|w| w.1 == Mover::Bob).all(|w| w.1 == Mover::Alice);
    Ok(SolveResult {
        wins,
        minimal_winning_k,
        monotone,
        nodes: solved.iter().map(|s| s.2).sum(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Plays a winning move from the solver whenever one exists, else the
/// lowest legal move.
#[derive(Debug, Clone)]
pub struct ExactPlayer {
    limits: SolveLimits,
    solver: Option<Solver>,
}

impl ExactPlayer {
    pub fn new(limits: SolveLimits) -> Self {
        ExactPlayer { limits, solver: None }
    }
}

impl Default for ExactPlayer {
    fn default() -> Self {
        ExactPlayer::new(SolveLimits::default())
    }
}

impl Strategy for ExactPlayer {
    fn name(&self) -> String {
        "exact".into()
    }

    fn choose(&mut self, state: &GameState, trace: &mut Vec<Event>) -> Result<(IncidenceId, Color), StrategyFailure> {
        let fits = self
            .solver
            .as_ref()
            .is_some_and(|s| Arc::ptr_eq(s.graph(), state.graph()) && s.palette() == state.palette() as usize);
        if !fits {
            let solver = Solver::new(state.graph().clone(), state.palette() as usize, self.limits)
                .map_err(|e| StrategyFailure::Internal(e.to_string()))?;
            self.solver = Some(solver);
        }
        if state.turn() == Mover::Alice {
            trace.push(Event::Rule { rule: Rule::Other });
        }
        let solver = self.solver.as_mut().expect("just built");
        match solver.winning_move(state) {
            Some(m) => Ok(m),
            None => state.legal_moves().first().copied().ok_or(StrategyFailure::NoMove),
        }
    }
}
