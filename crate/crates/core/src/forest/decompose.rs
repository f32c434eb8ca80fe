//! Exact forest partition by matroid-union augmentation.
//!
//! Edges are inserted one at a time. An edge that closes a cycle in every
//! forest is routed through a shortest exchange chain: it enters some forest
//! `i`, displacing an edge on the cycle it closes there, which in turn is
//! placed elsewhere. When no chain exists, the edges inserted so far cannot be
//! covered by the current forests and a new forest is opened, so the final
//! count equals the arboricity.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionError {
    #[error("graph has no edges")]
    Edgeless,
    #[error("forest {forest} contains a cycle after augmentation")]
    CycleInForest { forest: usize },
}

/// Edge partition into `forest_count` forests (indices `0..forest_count`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestPartition {
    pub forest_count: usize,
    pub forest_of: Vec<usize>,
}

impl ForestPartition {
    pub fn edges_in(&self, forest: usize) -> impl Iterator<Item = EdgeId> + '_ {
        self.forest_of.iter().enumerate().filter(move |(_, &f)| f == forest).map(|(e, _)| EdgeId(e))
    }

    /// Checks every class with a union-find pass.
    pub fn verify(&self, graph: &Graph) -> Result<(), DecompositionError> {
        for forest in 0..self.forest_count {
            let mut uf = UnionFind::new(graph.vertex_count());
            for e in self.edges_in(forest) {
                let [u, v] = graph.endpoints(e);
                if !uf.union(u, v) {
                    return Err(DecompositionError::CycleInForest { forest });
                }
            }
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

struct Builder<'g> {
    graph: &'g Graph,
    forest_count: usize,
    forest_of: Vec<Option<usize>>,
    // adjacency[forest][vertex] = edges of that forest at the vertex
    adjacency: Vec<Vec<Vec<EdgeId>>>,
}

impl<'g> Builder<'g> {
    fn new(graph: &'g Graph) -> Self {
        Builder { graph, forest_count: 0, forest_of: vec![None; graph.edge_count()], adjacency: Vec::new() }
    }

    fn open_forest(&mut self) -> usize {
        self.adjacency.push(vec![Vec::new(); self.graph.vertex_count()]);
        self.forest_count += 1;
        self.forest_count - 1
    }

    fn assign(&mut self, e: EdgeId, forest: Option<usize>) {
        let [u, v] = self.graph.endpoints(e);
        if let Some(old) = self.forest_of[e.0] {
            self.adjacency[old][u].retain(|&f| f != e);
            self.adjacency[old][v].retain(|&f| f != e);
        }
        if let Some(new) = forest {
            self.adjacency[new][u].push(e);
            self.adjacency[new][v].push(e);
        }
        self.forest_of[e.0] = forest;
    }

    /// Edges of the `from`-`to` path inside `forest`, or `None` when the
    /// endpoints lie in different trees.
    fn forest_path(&self, forest: usize, from: Vertex, to: Vertex) -> Option<Vec<EdgeId>> {
        let n = self.graph.vertex_count();
        let mut via: Vec<Option<EdgeId>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = Vec::new();
                let mut cur = to;
                while cur != from {
                    let e = via[cur].expect("bfs parent");
                    path.push(e);
                    cur = self.graph.other_endpoint(e, cur);
                }
                return Some(path);
            }
            for &e in &self.adjacency[forest][x] {
                let y = self.graph.other_endpoint(e, x);
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some(e);
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Tries to place `e` with the current number of forests.
    fn augment(&mut self, e: EdgeId) -> bool {
        let m = self.graph.edge_count();
        // label[y] = (x, i): x enters forest i, pushing y out of it.
        let mut label: Vec<Option<(EdgeId, usize)>> = vec![None; m];
        let mut visited = vec![false; m];
        visited[e.0] = true;
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            let [u, v] = self.graph.endpoints(x);
            for forest in 0..self.forest_count {
                if self.forest_of[x.0] == Some(forest) {
                    continue;
                }
                match self.forest_path(forest, u, v) {
                    None => {
                        self.apply_chain(x, forest, e, &label);
                        return true;
                    }
                    Some(cycle) => {
                        for y in cycle {
                            if !visited[y.0] {
                                visited[y.0] = true;
                                label[y.0] = Some((x, forest));
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn apply_chain(&mut self, last: EdgeId, forest: usize, start: EdgeId, label: &[Option<(EdgeId, usize)>]) {
        let mut moves = vec![(last, forest)];
        let mut cur = last;
        while cur != start {
            let (prev, into) = label[cur.0].expect("chain label");
            moves.push((prev, into));
            cur = prev;
        }
        for (edge, into) in moves {
            self.assign(edge, Some(into));
        }
    }
}

/// Partitions the edges of `graph` into the minimum number of forests.
pub fn decompose_into_forests(graph: &Graph) -> Result<ForestPartition, DecompositionError> {
    if graph.edge_count() == 0 {
        return Err(DecompositionError::Edgeless);
    }
    let mut b = Builder::new(graph);
    for (e, _) in graph.edges() {
        if !b.augment(e) {
            let f = b.open_forest();
            b.assign(e, Some(f));
        }
    }
    let partition = ForestPartition {
        forest_count: b.forest_count,
        forest_of: b.forest_of.into_iter().map(|f| f.expect("every edge placed")).collect(),
    };
    partition.verify(graph)?;
    Ok(partition)
}
