use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::decompose::ForestPartition;
use crate::graph::{EdgeId, Graph, Vertex};

/// How the root of each tree is picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "policy", content = "seed")]
pub enum RootPolicy {
    /// Lowest vertex id of the tree.
    #[default]
    FirstVertex,
    /// Largest degree inside the tree, lowest id on ties.
    MaxDegree,
    Random(u64),
}

impl std::str::FromStr for RootPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first_vertex" | "first" => Ok(RootPolicy::FirstVertex),
            "max_degree" => Ok(RootPolicy::MaxDegree),
            other => match other.strip_prefix("random:").or_else(|| other.strip_prefix("random=")) {
                Some(seed) => seed.parse().map(RootPolicy::Random).map_err(|_| format!("bad seed in {other:?}")),
                None if other == "random" => Ok(RootPolicy::Random(0)),
                None => Err(format!("unknown root policy {other:?}")),
            },
        }
    }
}

/// Forest partition with rooted trees and every edge oriented away from its
/// root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedForestDecomposition {
    pub forest_count: usize,
    pub forest_of: Vec<usize>,
    /// `parent[forest][v]`, absent at roots and at vertices outside the forest.
    pub parent: Vec<Vec<Option<Vertex>>>,
    pub roots: Vec<(usize, Vertex)>,
    /// `(tail, head)` per edge; the tail is the endpoint closer to the root.
    pub orientation: Vec<(Vertex, Vertex)>,
    /// Depth of each vertex in each forest's tree, `None` outside the forest.
    pub depth: Vec<Vec<Option<usize>>>,
}

impl OrientedForestDecomposition {
    pub fn tail(&self, e: EdgeId) -> Vertex {
        self.orientation[e.0].0
    }

    pub fn head(&self, e: EdgeId) -> Vertex {
        self.orientation[e.0].1
    }

    /// One line per edge: `u v forest tail`, endpoints as stored in the graph.
    pub fn dump(&self, graph: &Graph) -> String {
        let mut out = String::new();
        for (e, [u, v]) in graph.edges() {
            out.push_str(&format!("{u} {v} {} {}\n", self.forest_of[e.0], self.tail(e)));
        }
        out
    }
}

pub fn root_and_orient(
    graph: &Graph,
    partition: &ForestPartition,
    policy: RootPolicy,
) -> OrientedForestDecomposition {
    let n = graph.vertex_count();
    let mut rng = match policy {
        RootPolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut parent = vec![vec![None; n]; partition.forest_count];
    let mut depth = vec![vec![None; n]; partition.forest_count];
    let mut roots = Vec::new();
    let mut orientation = vec![(0, 0); graph.edge_count()];
    for forest in 0..partition.forest_count {
        let mut adjacency: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
        for e in partition.edges_in(forest) {
            let [u, v] = graph.endpoints(e);
            adjacency[u].push(e);
            adjacency[v].push(e);
        }
        let mut component = vec![usize::MAX; n];
        for start in 0..n {
            if adjacency[start].is_empty() || component[start] != usize::MAX {
                continue;
            }
            let mut members = Vec::new();
            let mut queue = VecDeque::from([start]);
            component[start] = start;
            while let Some(x) = queue.pop_front() {
                members.push(x);
                for &e in &adjacency[x] {
                    let y = graph.other_endpoint(e, x);
                    if component[y] == usize::MAX {
                        component[y] = start;
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            let root = match policy {
                RootPolicy::FirstVertex => members[0],
                RootPolicy::MaxDegree => {
                    *members.iter().max_by_key(|&&v| (adjacency[v].len(), std::cmp::Reverse(v))).expect("nonempty tree")
                }
                RootPolicy::Random(_) => {
                    let rng = rng.as_mut().expect("seeded");
                    members[rng.random_range(0..members.len())]
                }
            };
            roots.push((forest, root));
            depth[forest][root] = Some(0);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &e in &adjacency[x] {
                    let y = graph.other_endpoint(e, x);
                    if depth[forest][y].is_none() {
                        depth[forest][y] = Some(depth[forest][x].unwrap() + 1);
                        parent[forest][y] = Some(x);
                        orientation[e.0] = (x, y);
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    OrientedForestDecomposition {
        forest_count: partition.forest_count,
        forest_of: partition.forest_of.clone(),
        parent,
        roots,
        orientation,
        depth,
    }
}
