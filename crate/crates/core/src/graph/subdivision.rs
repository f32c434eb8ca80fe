//! Full subdivision and the incidence-coloring / strong-edge-coloring
//! correspondence.

use super::{EdgeId, Graph, IncidenceId};
use crate::color::Color;

/// `S(G)`: vertex `x_e = n + e` is inserted on every edge `e`. Incidence
/// `(v, e)` with id `i` maps to the edge `{v, x_e}`, which has edge id `i` in
/// `S(G)`.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub graph: Graph,
    pub edge_of: Vec<EdgeId>,
}

impl Subdivision {
    pub fn edge_for(&self, i: IncidenceId) -> EdgeId {
        self.edge_of[i.0]
    }
}

pub fn full_subdivision(graph: &Graph) -> Subdivision {
    let n = graph.vertex_count();
    let edges: Vec<_> = graph
        .incidence_ids()
        .map(|i| {
            let inc = graph.incidence(i);
            (inc.vertex, n + inc.edge.0)
        })
        .collect();
    let sub = Graph::new(n + graph.edge_count(), &edges).expect("subdivision of a simple graph is simple");
    let edge_of = (0..edges.len()).map(EdgeId).collect();
    Subdivision { graph: sub, edge_of }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("edge coloring is partial: edge {0} is uncolored")]
pub struct PartialColoring(pub usize);

/// True iff equal-colored distinct edges are never at line-graph distance
/// one or two.
pub fn is_strong_edge_coloring(graph: &Graph, coloring: &[Option<Color>]) -> Result<bool, PartialColoring> {
    if coloring.len() < graph.edge_count() {
        return Err(PartialColoring(coloring.len()));
    }
    let colors: Vec<Color> = coloring[..graph.edge_count()]
        .iter()
        .enumerate()
        .map(|(e, c)| c.ok_or(PartialColoring(e)))
        .collect::<Result<_, _>>()?;
    for (e, [a, b]) in graph.edges() {
        for (f, [c, d]) in graph.edges().skip(e.0 + 1) {
            if colors[e.0] != colors[f.0] {
                continue;
            }
            let touching = [a, b].iter().any(|x| [c, d].contains(x));
            let bridged = [a, b].iter().any(|&x| [c, d].iter().any(|&y| graph.edge_between(x, y).is_some()));
            if touching || bridged {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Translates a total incidence coloring of `graph` into an edge coloring of
/// `S(G)` through the subdivision bijection.
pub fn incidence_coloring_to_subdivision(
    graph: &Graph,
    coloring: &[Color],
) -> (Subdivision, Vec<Option<Color>>) {
    let sub = full_subdivision(graph);
    let mut colors = vec![None; sub.graph.edge_count()];
    for i in graph.incidence_ids() {
        colors[sub.edge_for(i).0] = Some(coloring[i.0]);
    }
    (sub, colors)
}

/// Checks every pair of colored incidences; uncolored entries are ignored.
pub fn is_valid_incidence_coloring(graph: &Graph, coloring: &[Option<Color>]) -> bool {
    let ids: Vec<_> = graph.incidence_ids().filter(|i| coloring[i.0].is_some()).collect();
    for (x, &i) in ids.iter().enumerate() {
        for &j in &ids[x + 1..] {
            if coloring[i.0] == coloring[j.0] && graph.incidences_adjacent(graph.incidence(i), graph.incidence(j)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use std::collections::VecDeque;

    /// Line-graph BFS: distance between edges `e` and `f`, capped at 3.
    fn line_distance(graph: &Graph, e: usize, f: usize) -> usize {
        let m = graph.edge_count();
        let adjacent = |x: usize, y: usize| {
            let [a, b] = graph.endpoints(EdgeId(x));
            let [c, d] = graph.endpoints(EdgeId(y));
            x != y && (a == c || a == d || b == c || b == d)
        };
        let mut dist = vec![usize::MAX; m];
        dist[e] = 0;
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            for y in 0..m {
                if dist[y] == usize::MAX && adjacent(x, y) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist[f].min(3)
    }

    fn strong_by_bfs(graph: &Graph, colors: &[Color]) -> bool {
        let m = graph.edge_count();
        (0..m).all(|e| (e + 1..m).all(|f| colors[e] != colors[f] || line_distance(graph, e, f) >= 3))
    }

    #[test]
    fn subdivision_shapes() {
        let p2 = generate(&Family::Path { n: 2 }, 0).unwrap();
        let s = full_subdivision(&p2);
        assert_eq!((s.graph.vertex_count(), s.graph.edge_count(), s.graph.max_degree()), (3, 2, 2));
        let c3 = generate(&Family::Cycle { n: 3 }, 0).unwrap();
        let s = full_subdivision(&c3);
        assert_eq!((s.graph.vertex_count(), s.graph.edge_count()), (6, 6));
        assert!(s.graph.vertices().all(|v| s.graph.degree(v) == 2));
        // (u, uv) maps to {u, x_uv}
        for i in c3.incidence_ids() {
            let inc = c3.incidence(i);
            let [a, b] = s.graph.endpoints(s.edge_for(i));
            assert_eq!((a, b), (inc.vertex, 3 + inc.edge.0));
        }
    }

    #[test]
    fn strong_edge_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(is_strong_edge_coloring(&p3, &[Some(1), Some(2)]), Ok(true));
        assert_eq!(is_strong_edge_coloring(&p3, &[Some(1), Some(1)]), Ok(false));
        assert_eq!(is_strong_edge_coloring(&p3, &[Some(1), None]), Err(PartialColoring(1)));
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let colors = [1, 2, 3, 1];
        assert!(strong_by_bfs(&p5, &colors));
        let opt: Vec<_> = colors.iter().map(|&c| Some(c)).collect();
        assert_eq!(is_strong_edge_coloring(&p5, &opt), Ok(true));
        let bad = [Some(1), Some(2), Some(1), Some(3)];
        assert_eq!(is_strong_edge_coloring(&p5, &bad), Ok(false));
    }

    #[test]
    fn strong_check_matches_bfs() {
        for seed in 0..20 {
            let g = generate(&Family::Gnp { n: 7, p: 0.4, max_degree: None }, seed).unwrap();
            let m = g.edge_count();
            for shift in 0..5u16 {
                let colors: Vec<Color> = (0..m).map(|e| (e as u16 * 7 + shift) % 4 + 1).collect();
                let opt: Vec<_> = colors.iter().map(|&c| Some(c)).collect();
                assert_eq!(is_strong_edge_coloring(&g, &opt).unwrap(), strong_by_bfs(&g, &colors));
            }
        }
    }

    #[test]
    fn incidence_coloring_validity() {
        let g = generate(&Family::Cycle { n: 4 }, 0).unwrap();
        let distinct: Vec<_> = (1..=8).map(Some).collect();
        assert!(is_valid_incidence_coloring(&g, &distinct));
        let mut same_edge = vec![None; 8];
        same_edge[0] = Some(1);
        same_edge[1] = Some(1);
        assert!(!is_valid_incidence_coloring(&g, &same_edge));
        // Arbitrary total coloring; both predicates must agree on it.
        let total: Vec<Color> = g.incidence_ids().map(|i| (g.incidence(i).vertex * 2 + (i.0 & 1)) as u16 % 4 + 1).collect();
        let opt: Vec<_> = total.iter().map(|&c| Some(c)).collect();
        let (sub, translated) = incidence_coloring_to_subdivision(&g, &total);
        assert_eq!(is_valid_incidence_coloring(&g, &opt), is_strong_edge_coloring(&sub.graph, &translated).unwrap());
    }
}
