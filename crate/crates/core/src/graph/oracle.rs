//! Exhaustive oracles used to check the fast algorithms.

use super::Graph;

pub const DEFAULT_ORACLE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArboricityError {
    #[error("graph has {vertices} vertices, oracle cap is {cap}")]
    TooLarge { vertices: usize, cap: usize },
}

/// Arboricity by the Nash-Williams formula, maximising
/// `ceil(|E(H)| / (|V(H)| - 1))` over every vertex subset with at least two
/// vertices. Exponential; refuses graphs above `cap` vertices.
pub fn arboricity_oracle(graph: &Graph, cap: usize) -> Result<usize, ArboricityError> {
    let n = graph.vertex_count();
    if n > cap || n >= 32 {
        return Err(ArboricityError::TooLarge { vertices: n, cap });
    }
    if graph.edge_count() == 0 {
        return Ok(0);
    }
    let edge_masks: Vec<u32> = graph.edges().map(|(_, [u, v])| (1u32 << u) | (1u32 << v)).collect();
    let mut best = 0;
    for subset in 1u32..(1u32 << n) {
        let size = subset.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let inside = edge_masks.iter().filter(|&&m| m & subset == m).count();
        best = best.max(inside.div_ceil(size - 1));
    }
    Ok(best)
}

/// Smallest `k` such that repeatedly deleting a minimum-degree vertex never
/// deletes a vertex of degree above `k`.
pub fn degeneracy(graph: &Graph) -> usize {
    let n = graph.vertex_count();
    let mut degree: Vec<usize> = graph.vertices().map(|v| graph.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| degree[v]).expect("vertex left");
        k = k.max(degree[v]);
        removed[v] = true;
        for w in graph.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    k
}
