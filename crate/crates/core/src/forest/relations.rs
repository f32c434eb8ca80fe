//! The relation sets around each incidence induced by an oriented forest
//! decomposition.
//!
//! For an incidence `i` on an edge oriented `u -> v`:
//! fathers come from edges `w -> u`, sons from edges `v -> w`, brothers from
//! the other edges `u -> w` and uncles from the other edges `w -> v`. Each
//! group is split into its top incidences (at the tail) and down incidences
//! (at the head).

use serde::{Deserialize, Serialize};

use super::orient::OrientedForestDecomposition;
use crate::color::{Color, ColorSet};
use crate::graph::{EdgeId, Graph, IncidenceId, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Top,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    TopFathers,
    DownFathers,
    TopSons,
    DownSons,
    TopBrothers,
    DownBrothers,
    TopUncles,
    DownUncles,
}

impl Relation {
    pub const ALL: [Relation; 8] = [
        Relation::TopFathers,
        Relation::DownFathers,
        Relation::TopSons,
        Relation::DownSons,
        Relation::TopBrothers,
        Relation::DownBrothers,
        Relation::TopUncles,
        Relation::DownUncles,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            Relation::TopFathers => "tF",
            Relation::DownFathers => "dF",
            Relation::TopSons => "tS",
            Relation::DownSons => "dS",
            Relation::TopBrothers => "tB",
            Relation::DownBrothers => "dB",
            Relation::TopUncles => "tU",
            Relation::DownUncles => "dU",
        }
    }
}

/// Relation sets of one incidence, each sorted by [`Relations::order_key`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Neighborhood {
    pub sets: [Vec<IncidenceId>; 8],
}

impl Neighborhood {
    pub fn get(&self, r: Relation) -> &[IncidenceId] {
        &self.sets[r as usize]
    }
}

#[derive(Debug, Clone)]
pub struct Relations {
    kind: Vec<Kind>,
    hoods: Vec<Neighborhood>,
    top_of: Vec<IncidenceId>,
    forest_count: usize,
    max_degree: usize,
}

impl Relations {
    pub fn new(graph: &Graph, dec: &OrientedForestDecomposition) -> Self {
        let n = graph.vertex_count();
        let mut outgoing: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
        let mut incoming: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
        for (e, _) in graph.edges() {
            let (t, h) = dec.orientation[e.0];
            outgoing[t].push(e);
            incoming[h].push(e);
        }
        let top = |e: EdgeId| -> IncidenceId { graph.incidence_id(crate::graph::Incidence { vertex: dec.tail(e), edge: e }).unwrap() };
        let down = |e: EdgeId| -> IncidenceId { top(e).sibling() };
        let top_of: Vec<IncidenceId> = graph.edges().map(|(e, _)| top(e)).collect();
        let kind: Vec<Kind> = graph
            .incidence_ids()
            .map(|i| if top_of[i.edge().0] == i { Kind::Top } else { Kind::Down })
            .collect();
        let key = |i: &IncidenceId| 2 * i.edge().0 + (kind[i.0] == Kind::Down) as usize;
        let collect = |edges: &[EdgeId], skip: Option<EdgeId>, pick: &dyn Fn(EdgeId) -> IncidenceId, exclude: IncidenceId| {
            let mut v: Vec<IncidenceId> =
                edges.iter().filter(|&&f| Some(f) != skip).map(|&f| pick(f)).filter(|&j| j != exclude).collect();
            v.sort_by_key(key);
            v
        };
        let hoods = graph
            .incidence_ids()
            .map(|i| {
                let e = i.edge();
                let (u, v): (Vertex, Vertex) = dec.orientation[e.0];
                let sets = [
                    collect(&incoming[u], None, &top, i),
                    collect(&incoming[u], None, &down, i),
                    collect(&outgoing[v], None, &top, i),
                    collect(&outgoing[v], None, &down, i),
                    collect(&outgoing[u], None, &top, i),
                    collect(&outgoing[u], None, &down, i),
                    collect(&incoming[v], Some(e), &top, i),
                    collect(&incoming[v], Some(e), &down, i),
                ];
                Neighborhood { sets }
            })
            .collect();
        Relations { kind, hoods, top_of, forest_count: dec.forest_count, max_degree: graph.max_degree() }
    }

    pub fn incidence_count(&self) -> usize {
        self.kind.len()
    }

    /// Number of forests `a` of the underlying decomposition.
    pub fn forest_count(&self) -> usize {
        self.forest_count
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn kind(&self, i: IncidenceId) -> Kind {
        self.kind[i.0]
    }

    pub fn is_down(&self, i: IncidenceId) -> bool {
        self.kind[i.0] == Kind::Down
    }

    pub fn top(&self, e: EdgeId) -> IncidenceId {
        self.top_of[e.0]
    }

    pub fn down(&self, e: EdgeId) -> IncidenceId {
        self.top_of[e.0].sibling()
    }

    /// Tie-break order: by edge id, top before down.
    pub fn order_key(&self, i: IncidenceId) -> usize {
        2 * i.edge().0 + self.is_down(i) as usize
    }

    /// All incidences in tie-break order.
    pub fn ordered(&self) -> impl Iterator<Item = IncidenceId> + '_ {
        (0..self.top_of.len()).flat_map(move |e| [self.top_of[e], self.top_of[e].sibling()])
    }

    pub fn get(&self, i: IncidenceId, r: Relation) -> &[IncidenceId] {
        self.hoods[i.0].get(r)
    }

    pub fn neighborhood(&self, i: IncidenceId) -> &Neighborhood {
        &self.hoods[i.0]
    }

    /// `F(i) = tF(i) ∪ dF(i)`.
    pub fn fathers(&self, i: IncidenceId) -> impl Iterator<Item = IncidenceId> + '_ {
        self.get(i, Relation::TopFathers).iter().chain(self.get(i, Relation::DownFathers)).copied()
    }

    /// The relation groups whose colors are forbidden for `i`.
    pub fn forbidding_relations(&self, i: IncidenceId) -> &'static [Relation] {
        use Relation::*;
        match self.kind(i) {
            Kind::Top => &[TopFathers, DownFathers, TopBrothers, DownBrothers, TopSons, DownUncles],
            Kind::Down => &[DownFathers, TopBrothers, TopSons, DownSons, TopUncles, DownUncles],
        }
    }

    /// Colors of `φ(F ∪ B ∪ tS ∪ dU)` for a top incidence and of
    /// `φ(dF ∪ tB ∪ S ∪ U)` for a down incidence. `coloring` uses 0 for
    /// uncolored.
    pub fn forbidden_colors(&self, coloring: &[Color], i: IncidenceId) -> ColorSet {
        let mut set = ColorSet::empty();
        for &r in self.forbidding_relations(i) {
            for &j in self.get(i, r) {
                if coloring[j.0] != 0 {
                    set.insert(coloring[j.0]);
                }
            }
        }
        set
    }

    /// `φ(R(i))` for a single relation.
    pub fn colors_of(&self, coloring: &[Color], i: IncidenceId, r: Relation) -> ColorSet {
        self.get(i, r).iter().map(|j| coloring[j.0]).filter(|&c| c != 0).collect()
    }

    /// `|R_c(i)|`, the number of colored members.
    pub fn colored_count(&self, coloring: &[Color], i: IncidenceId, r: Relation) -> usize {
        self.get(i, r).iter().filter(|j| coloring[j.0] != 0).count()
    }
}
