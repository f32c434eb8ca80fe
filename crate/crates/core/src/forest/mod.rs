//! Rooted forest decompositions and the incidence relations they induce.

mod decompose;
mod orient;
mod relations;

pub use decompose::{decompose_into_forests, DecompositionError, ForestPartition};
pub use orient::{root_and_orient, OrientedForestDecomposition, RootPolicy};
pub use relations::{Kind, Neighborhood, Relation, Relations};

use crate::graph::Graph;

/// Decomposes, roots and orients `graph`, then materializes the relations.
/// An edgeless graph gets zero forests.
pub fn analyze(
    graph: &Graph,
    policy: RootPolicy,
) -> Result<(OrientedForestDecomposition, Relations), DecompositionError> {
    let partition = match decompose_into_forests(graph) {
        Err(DecompositionError::Edgeless) => ForestPartition { forest_count: 0, forest_of: Vec::new() },
        other => other?,
    };
    let dec = root_and_orient(graph, &partition, policy);
    let rel = Relations::new(graph, &dec);
    Ok((dec, rel))
}
