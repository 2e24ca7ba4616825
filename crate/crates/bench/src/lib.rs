//! Inputs shared by the benchmarks.

use gridfree_core::{GridSpec, Point, PointSet};

/// `[1, n] x rows`, the base grid of the alteration constructions.
pub fn strip(n: i64, rows: &[u64]) -> PointSet {
    (1..=n)
        .flat_map(|x| rows.iter().map(move |&y| Point::new(x, y as i64)))
        .collect()
}

/// Deterministic pseudo-random subset of `[1, n]^2` keeping about `1/keep_one_in`
/// of the points.
pub fn sparse_grid(n: u32, keep_one_in: u64) -> PointSet {
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    GridSpec::new(n)
        .expect("positive side")
        .points()
        .filter(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state % keep_one_in == 0
        })
        .collect()
}
