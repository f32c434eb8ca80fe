//! Palette bounds for the incidence coloring game.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("arboricity {a} exceeds maximum degree {delta}")]
    ArboricityAboveDegree { delta: usize, a: usize },
    #[error("a graph with edges has arboricity at least 1")]
    ZeroArboricity,
    #[error("degeneracy must be at least 1")]
    ZeroDegeneracy,
}

/// `⌊(3Δ - a)/2⌋ + 8a - 1` colors suffice for Alice on a graph of maximum
/// degree `Δ` and arboricity `a`. An edgeless graph needs none.
pub fn theorem_bound(delta: usize, a: usize) -> Result<usize, BoundError> {
    if delta == 0 {
        return if a == 0 { Ok(0) } else { Err(BoundError::ArboricityAboveDegree { delta, a }) };
    }
    if a == 0 {
        return Err(BoundError::ZeroArboricity);
    }
    if a > delta {
        return Err(BoundError::ArboricityAboveDegree { delta, a });
    }
    Ok((3 * delta - a) / 2 + 8 * a - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlaggedBound {
    pub value: usize,
    pub applicable: bool,
}

/// The three older bounds for `k`-degenerate graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AndresBounds {
    /// `2Δ + 4k - 2`, always applicable.
    pub general: FlaggedBound,
    /// `2Δ + 3k - 1` when `Δ ≥ 5k - 1`.
    pub large_degree: FlaggedBound,
    /// `Δ + 8k - 2` when `Δ ≤ 5k - 1`.
    pub small_degree: FlaggedBound,
}

impl AndresBounds {
    /// Smallest applicable value.
    pub fn best(&self) -> usize {
        [self.general, self.large_degree, self.small_degree]
            .iter()
            .filter(|b| b.applicable)
            .map(|b| b.value)
            .min()
            .expect("the general bound always applies")
    }
}

pub fn andres_bounds(delta: usize, k: usize) -> Result<AndresBounds, BoundError> {
    if k == 0 {
        return Err(BoundError::ZeroDegeneracy);
    }
    let threshold = 5 * k - 1;
    Ok(AndresBounds {
        general: FlaggedBound { value: 2 * delta + 4 * k - 2, applicable: true },
        large_degree: FlaggedBound { value: 2 * delta + 3 * k - 1, applicable: delta >= threshold },
        small_degree: FlaggedBound { value: delta + 8 * k - 2, applicable: delta <= threshold },
    })
}

/// `⌈3Δ/2⌉`, a lower bound on the game number of any graph with an edge.
pub fn lower_bound(delta: usize) -> usize {
    (3 * delta).div_ceil(2)
}

/// `3Δ - 1`, an upper bound on the game number of any graph with an edge.
pub fn trivial_upper_bound(delta: usize) -> usize {
    (3 * delta).saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn special_classes() {
        assert_eq!(theorem_bound(4, 1), Ok(12));
        assert_eq!(theorem_bound(5, 2), Ok(21));
        assert_eq!(theorem_bound(6, 3), Ok(30));
        assert_eq!(theorem_bound(20, 1), Ok(36));
        assert_eq!(theorem_bound(0, 0), Ok(0));
        assert!(theorem_bound(2, 3).is_err());
        assert!(theorem_bound(2, 0).is_err());
    }

    #[test]
    fn older_bounds() {
        let b = andres_bounds(6, 1).unwrap();
        assert_eq!((b.general.value, b.large_degree.value, b.small_degree.value), (14, 14, 12));
        assert!(b.large_degree.applicable && !b.small_degree.applicable);
        assert_eq!(andres_bounds(20, 1).unwrap().general.value, 42);
        let b = andres_bounds(4, 1).unwrap();
        assert!(b.small_degree.applicable && b.large_degree.applicable);
        assert!(andres_bounds(3, 0).is_err());
    }
}
