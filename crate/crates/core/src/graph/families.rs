use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Vertex};

/// Graph families used by the CLI, the campaigns and the demo.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// Path on `n` vertices (`path(2)` is a single edge).
    Path { n: usize },
    Cycle { n: usize },
    /// `K_{1,leaves}` with the center at vertex 0.
    Star { leaves: usize },
    /// Hub 0 joined to a `spokes`-cycle on `1..=spokes`.
    Wheel { spokes: usize },
    Complete { n: usize },
    RandomTree { n: usize, max_degree: Option<usize> },
    /// Union of `forests` random forests on `n` vertices, degrees capped.
    RandomForestUnion { forests: usize, n: usize, max_degree: usize },
    Gnp { n: usize, p: f64, max_degree: Option<usize> },
}

impl Family {
    /// Parses a family name with positional numeric parameters, as used on the
    /// command line: `path 5`, `random_forest_union 2,10,5`, `gnp 10,0.3,6`.
    pub fn from_name(name: &str, params: &[f64]) -> Result<Self, GraphError> {
        let want = |count: usize| -> Result<(), GraphError> {
            if params.len() < count {
                Err(GraphError::InvalidParams(format!("{name} needs {count} parameter(s)")))
            } else {
                Ok(())
            }
        };
        let int = |i: usize| -> Result<usize, GraphError> {
            let x = params[i];
            if x < 0.0 || x.fract() != 0.0 {
                return Err(GraphError::InvalidParams(format!("parameter {x} must be a nonnegative integer")));
            }
            Ok(x as usize)
        };
        let opt_int = |i: usize| -> Result<Option<usize>, GraphError> {
            if params.len() > i {
                int(i).map(Some)
            } else {
                Ok(None)
            }
        };
        Ok(match name {
            "path" => {
                want(1)?;
                Family::Path { n: int(0)? }
            }
            "cycle" => {
                want(1)?;
                Family::Cycle { n: int(0)? }
            }
            "star" => {
                want(1)?;
                Family::Star { leaves: int(0)? }
            }
            "wheel" => {
                want(1)?;
                Family::Wheel { spokes: int(0)? }
            }
            "complete" => {
                want(1)?;
                Family::Complete { n: int(0)? }
            }
            "random_tree" => {
                want(1)?;
                Family::RandomTree { n: int(0)?, max_degree: opt_int(1)? }
            }
            "random_forest_union" => {
                want(3)?;
                Family::RandomForestUnion { forests: int(0)?, n: int(1)?, max_degree: int(2)? }
            }
            "gnp" => {
                want(2)?;
                Family::Gnp { n: int(0)?, p: params[1], max_degree: opt_int(2)? }
            }
            other => return Err(GraphError::InvalidParams(format!("unknown family {other:?}"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Star { .. } => "star",
            Family::Wheel { .. } => "wheel",
            Family::Complete { .. } => "complete",
            Family::RandomTree { .. } => "random_tree",
            Family::RandomForestUnion { .. } => "random_forest_union",
            Family::Gnp { .. } => "gnp",
        }
    }

    /// Compact parameter string, e.g. `2,10,5`.
    pub fn params_label(&self) -> String {
        let opt = |x: &Option<usize>| x.map(|d| format!(",{d}")).unwrap_or_default();
        match self {
            Family::Path { n } | Family::Cycle { n } | Family::Complete { n } => n.to_string(),
            Family::Star { leaves } => leaves.to_string(),
            Family::Wheel { spokes } => spokes.to_string(),
            Family::RandomTree { n, max_degree } => format!("{n}{}", opt(max_degree)),
            Family::RandomForestUnion { forests, n, max_degree } => format!("{forests},{n},{max_degree}"),
            Family::Gnp { n, p, max_degree } => format!("{n},{p}{}", opt(max_degree)),
        }
    }
}

/// Builds a member of `family`; deterministic for a fixed `seed`.
pub fn generate(family: &Family, seed: u64) -> Result<Graph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let invalid = |msg: &str| Err(GraphError::InvalidParams(msg.to_string()));
    let edges: Vec<(Vertex, Vertex)>;
    let n;
    match *family {
        Family::Path { n: count } => {
            if count == 0 {
                return invalid("path needs at least one vertex");
            }
            n = count;
            edges = (1..n).map(|v| (v - 1, v)).collect();
        }
        Family::Cycle { n: count } => {
            if count < 3 {
                return invalid("cycle needs at least 3 vertices");
            }
            n = count;
            edges = (0..n).map(|v| (v, (v + 1) % n)).collect();
        }
        Family::Star { leaves } => {
            if leaves == 0 {
                return invalid("star needs at least one leaf");
            }
            n = leaves + 1;
            edges = (1..n).map(|v| (0, v)).collect();
        }
        Family::Wheel { spokes } => {
            if spokes < 3 {
                return invalid("wheel needs at least 3 spokes");
            }
            n = spokes + 1;
            let mut list: Vec<_> = (1..n).map(|v| (0, v)).collect();
            list.extend((1..n).map(|v| (v, v % spokes + 1)));
            edges = list;
        }
        Family::Complete { n: count } => {
            if count == 0 {
                return invalid("complete graph needs at least one vertex");
            }
            n = count;
            edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        }
        Family::RandomTree { n: count, max_degree } => {
            if count == 0 {
                return invalid("tree needs at least one vertex");
            }
            if (count > 2 && max_degree.is_some_and(|d| d < 2)) || (count == 2 && max_degree == Some(0)) {
                return invalid("max_degree too small for a tree on this many vertices");
            }
            n = count;
            let cap = max_degree.unwrap_or(usize::MAX);
            let mut order: Vec<Vertex> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut degree = vec![0usize; n];
            let mut list = Vec::with_capacity(n.saturating_sub(1));
            for idx in 1..n {
                let v = order[idx];
                let candidates: Vec<Vertex> = order[..idx].iter().copied().filter(|&u| degree[u] < cap).collect();
                // Every prefix tree has a leaf, so candidates is nonempty.
                let u = candidates[rng.random_range(0..candidates.len())];
                degree[u] += 1;
                degree[v] += 1;
                list.push((u, v));
            }
            edges = list;
        }
        Family::RandomForestUnion { forests, n: count, max_degree } => {
            if forests == 0 || count < 2 || max_degree == 0 {
                return invalid("random_forest_union needs forests >= 1, n >= 2, max_degree >= 1");
            }
            n = count;
            let mut degree = vec![0usize; n];
            let mut present = std::collections::HashSet::new();
            let mut list = Vec::new();
            for _ in 0..forests {
                let mut order: Vec<Vertex> = (0..n).collect();
                order.shuffle(&mut rng);
                for idx in 1..n {
                    let v = order[idx];
                    if degree[v] >= max_degree {
                        continue;
                    }
                    let u = order[rng.random_range(0..idx)];
                    let key = (u.min(v), u.max(v));
                    if degree[u] >= max_degree || present.contains(&key) {
                        continue;
                    }
                    present.insert(key);
                    degree[u] += 1;
                    degree[v] += 1;
                    list.push((u, v));
                }
            }
            edges = list;
        }
        Family::Gnp { n: count, p, max_degree } => {
            if count == 0 || !(0.0..=1.0).contains(&p) {
                return invalid("gnp needs n >= 1 and 0 <= p <= 1");
            }
            n = count;
            let cap = max_degree.unwrap_or(usize::MAX);
            let mut degree = vec![0usize; n];
            let mut list = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) && degree[u] < cap && degree[v] < cap {
                        degree[u] += 1;
                        degree[v] += 1;
                        list.push((u, v));
                    }
                }
            }
            edges = list;
        }
    }
    Graph::new(n, &edges)
}
