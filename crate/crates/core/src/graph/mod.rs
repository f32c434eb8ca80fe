//! Simple undirected graphs and their incidences.
//!
//! Every edge `e = {u, v}` contributes two incidences, `(u, e)` and `(v, e)`.
//! Incidences are indexed densely: edge `e` owns ids `2e` (first endpoint as
//! given at construction) and `2e + 1` (second endpoint).

mod families;
mod oracle;
mod subdivision;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use families::{generate, Family};
pub use oracle::{arboricity_oracle, degeneracy, ArboricityError, DEFAULT_ORACLE_CAP};
pub use subdivision::{
    full_subdivision, incidence_coloring_to_subdivision, is_strong_edge_coloring,
    is_valid_incidence_coloring, Subdivision,
};

pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

/// Dense index of an incidence, `2 * edge + side`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IncidenceId(pub usize);

impl IncidenceId {
    pub fn edge(self) -> EdgeId {
        EdgeId(self.0 / 2)
    }

    /// The other incidence of the same edge.
    pub fn sibling(self) -> IncidenceId {
        IncidenceId(self.0 ^ 1)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

/// A pair `(vertex, edge)` with `vertex` an endpoint of `edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Incidence {
    pub vertex: Vertex,
    pub edge: EdgeId,
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, e{})", self.vertex, self.edge.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("endpoint {endpoint} out of range for {vertex_count} vertices")]
    EndpointOutOfRange { endpoint: Vertex, vertex_count: usize },
    #[error("malformed graph text: {0}")]
    Parse(String),
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
}

/// Simple undirected graph with stable vertex and edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<[Vertex; 2]>,
    adjacency: Vec<Vec<EdgeId>>,
    edge_index: HashMap<(Vertex, Vertex), EdgeId>,
    conflicts: Vec<Vec<IncidenceId>>,
}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph on `0..vertex_count`. Edge ids follow input order.
    pub fn new(vertex_count: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut edge_index = HashMap::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            for endpoint in [u, v] {
                if endpoint >= vertex_count {
                    return Err(GraphError::EndpointOutOfRange { endpoint, vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let id = EdgeId(edges.len());
            if edge_index.insert(key(u, v), id).is_some() {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            edges.push([u, v]);
            adjacency[u].push(id);
            adjacency[v].push(id);
        }
        let mut graph = Graph { vertex_count, edges, adjacency, edge_index, conflicts: Vec::new() };
        graph.conflicts = (0..graph.incidence_count())
            .map(|i| graph.compute_conflicts(IncidenceId(i)))
            .collect();
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn incidence_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count
    }

    pub fn endpoints(&self, e: EdgeId) -> [Vertex; 2] {
        self.edges[e.0]
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, [Vertex; 2])> + '_ {
        self.edges.iter().enumerate().map(|(i, &uv)| (EdgeId(i), uv))
    }

    pub fn incident_edges(&self, v: Vertex) -> &[EdgeId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.edge_index.get(&key(u, v)).copied()
    }

    pub fn other_endpoint(&self, e: EdgeId, v: Vertex) -> Vertex {
        let [a, b] = self.edges[e.0];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[v].iter().map(move |&e| self.other_endpoint(e, v))
    }

    pub fn incidence(&self, id: IncidenceId) -> Incidence {
        let edge = id.edge();
        Incidence { vertex: self.edges[edge.0][id.0 & 1], edge }
    }

    pub fn incidence_id(&self, inc: Incidence) -> Option<IncidenceId> {
        let [a, b] = *self.edges.get(inc.edge.0)?;
        if inc.vertex == a {
            Some(IncidenceId(2 * inc.edge.0))
        } else if inc.vertex == b {
            Some(IncidenceId(2 * inc.edge.0 + 1))
        } else {
            None
        }
    }

    /// Incidence ids in canonical order: by edge id, then endpoint order.
    pub fn incidence_ids(&self) -> impl Iterator<Item = IncidenceId> {
        (0..self.incidence_count()).map(IncidenceId)
    }

    pub fn incidences(&self) -> Vec<Incidence> {
        self.incidence_ids().map(|i| self.incidence(i)).collect()
    }

    /// True iff the incidences share a vertex, share an edge, or the edge
    /// joining their vertices is one of their edges.
    pub fn incidences_adjacent(&self, i: Incidence, j: Incidence) -> bool {
        if i == j {
            return false;
        }
        if i.vertex == j.vertex || i.edge == j.edge {
            return true;
        }
        match self.edge_between(i.vertex, j.vertex) {
            Some(vw) => vw == i.edge || vw == j.edge,
            None => false,
        }
    }

    /// Precomputed list of incidences adjacent to `i`, sorted by id.
    pub fn conflicts(&self, i: IncidenceId) -> &[IncidenceId] {
        &self.conflicts[i.0]
    }

    fn compute_conflicts(&self, id: IncidenceId) -> Vec<IncidenceId> {
        let Incidence { vertex: v, edge: e } = self.incidence(id);
        let w = self.other_endpoint(e, v);
        let mut out = Vec::new();
        // Same vertex, plus the far incidences of edges at v.
        for &f in &self.adjacency[v] {
            out.push(self.side(f, v));
            out.push(self.side(f, self.other_endpoint(f, v)));
        }
        // Incidences at the other endpoint of e.
        for &f in &self.adjacency[w] {
            out.push(self.side(f, w));
        }
        out.sort_unstable();
        out.dedup();
        out.retain(|&j| j != id);
        out
    }

    fn side(&self, e: EdgeId, v: Vertex) -> IncidenceId {
        if self.edges[e.0][0] == v {
            IncidenceId(2 * e.0)
        } else {
            IncidenceId(2 * e.0 + 1)
        }
    }

    /// Serializes as `n m` followed by one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for [u, v] in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| GraphError::Parse("missing header line".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(GraphError::Parse(format!("expected {m} edge lines, found {}", edges.len())));
        }
        if let Some(extra) = lines.next() {
            return Err(GraphError::Parse(format!("unexpected trailing line {extra:?}")));
        }
        Graph::new(n, &edges)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse(format!("line {line:?}: expected two integers")))?;
        tok.parse().map_err(|_| GraphError::Parse(format!("line {line:?}: bad integer {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(GraphError::Parse(format!("line {line:?}: expected two integers")));
    }
    Ok((a, b))
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse_text(s)
    }
}
