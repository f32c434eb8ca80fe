use crate::color::{Color, ColorSet};
use crate::game::GameState;
use crate::graph::IncidenceId;

/// Available-color counts of every uncolored incidence, for scoring moves
/// by the tightest incidence they leave behind.
#[derive(Debug, Clone)]
pub struct Pressure {
    available: Vec<ColorSet>,
    count: Vec<u32>,
    /// Uncolored incidences by ascending count.
    by_count: Vec<IncidenceId>,
    stamp: Vec<u32>,
    tick: u32,
}

impl Pressure {
    pub fn of(state: &GameState) -> Self {
        let n = state.graph().incidence_count();
        let mut available = vec![ColorSet::empty(); n];
        let mut count = vec![u32::MAX; n];
        let mut by_count = Vec::new();
        for i in state.uncolored() {
            available[i.0] = state.available_colors(i).expect("uncolored");
            count[i.0] = available[i.0].len() as u32;
            by_count.push(i);
        }
        by_count.sort_by_key(|i| (count[i.0], i.0));
        Pressure { available, count, by_count, stamp: vec![0; n], tick: 0 }
    }

    /// Smallest available count, `None` when everything is colored.
    pub fn min(&self) -> Option<u32> {
        self.by_count.first().map(|i| self.count[i.0])
    }

    pub fn available(&self, i: IncidenceId) -> &ColorSet {
        &self.available[i.0]
    }

    /// Smallest available count after coloring `i` with `c`, `None` when
    /// that move completes the coloring.
    pub fn after(&mut self, state: &GameState, i: IncidenceId, c: Color) -> Option<u32> {
        self.tick += 1;
        let mut best = u32::MAX;
        let mut any = false;
        self.stamp[i.0] = self.tick;
        for &j in state.graph().conflicts(i) {
            self.stamp[j.0] = self.tick;
            if !state.is_colored(j) {
                any = true;
                best = best.min(self.count[j.0] - u32::from(self.available[j.0].contains(c)));
            }
        }
        if let Some(j) = self.by_count.iter().find(|j| self.stamp[j.0] != self.tick) {
            any = true;
            best = best.min(self.count[j.0]);
        }
        any.then_some(best)
    }
}
