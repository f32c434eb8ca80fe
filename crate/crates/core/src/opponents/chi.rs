//! Exact static incidence chromatic number by backtracking.

use serde::{Deserialize, Serialize};

use crate::color::Color;
use crate::graph::Graph;

pub const DEFAULT_CHI_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChiError {
    #[error("{incidences} incidences exceeds the cap of {cap}")]
    TooLarge { incidences: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiResult {
    pub chi: usize,
    /// A proper coloring with `chi` colors, indexed by incidence id.
    pub coloring: Vec<Color>,
    /// Nodes of the exhaustive search showing `chi - 1` colors do not suffice.
    pub refutation_nodes: u64,
}

struct Search<'a> {
    conflicts: &'a [Vec<usize>],
    col: Vec<Color>,
    nodes: u64,
}

impl Search<'_> {
    fn forbidden(&self, i: usize) -> u64 {
        self.conflicts[i].iter().fold(0, |m, &j| if self.col[j] != 0 { m | 1 << self.col[j] } else { m })
    }

    /// Colors the rest with `1..=k`, always branching on the uncolored
    /// incidence with the fewest options and trying at most one new color.
    fn extend(&mut self, k: usize, used: usize) -> bool {
        self.nodes += 1;
        let full = ((1u64 << (k + 1)) - 1) & !1;
        let mut pick: Option<(usize, u64)> = None;
        for i in 0..self.col.len() {
            if self.col[i] != 0 {
                continue;
            }
            let options = full & !self.forbidden(i);
            if pick.is_none_or(|(_, o)| options.count_ones() < o.count_ones()) {
                pick = Some((i, options));
            }
        }
        let Some((i, options)) = pick else {
            return true;
        };
        let limit = (used + 1).min(k);
        for c in 1..=limit {
            if options & 1 << c == 0 {
                continue;
            }
            self.col[i] = c as Color;
            if self.extend(k, used.max(c)) {
                return true;
            }
        }
        self.col[i] = 0;
        false
    }
}

/// Smallest number of colors admitting a proper incidence coloring.
pub fn static_chi_i(graph: &Graph, cap: usize) -> Result<ChiResult, ChiError> {
    let n = graph.incidence_count();
    if n > cap {
        return Err(ChiError::TooLarge { incidences: n, cap });
    }
    if n == 0 {
        return Ok(ChiResult { chi: 0, coloring: Vec::new(), refutation_nodes: 0 });
    }
    let conflicts: Vec<Vec<usize>> =
        graph.incidence_ids().map(|i| graph.conflicts(i).iter().map(|j| j.0).collect()).collect();
    let run = |k: usize| {
        let mut s = Search { conflicts: &conflicts, col: vec![0; n], nodes: 0 };
        let ok = s.extend(k, 0);
        (ok, s.col, s.nodes)
    };
    let mut k = graph.max_degree() + 1;
    loop {
        let (ok, coloring, _) = run(k);
        if ok {
            let refutation_nodes = run(k - 1).2;
            return Ok(ChiResult { chi: k, coloring, refutation_nodes });
        }
        k += 1;
    }
}
