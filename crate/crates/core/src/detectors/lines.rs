//! Collinear k-tuples, grouped per anchor by primitive direction.

use std::ops::ControlFlow;

use super::pairs::primitive;
use super::{binomial, Visitor};
use crate::grid::{Point, PointSet};

/// For every anchor `i`, the later points grouped by direction from it. Each
/// collinear tuple is seen exactly once, from its smallest point.
fn for_each_anchor_line(ps: &PointSet, mut f: impl FnMut(usize, &[(Point, u32)]) -> ControlFlow<()>) -> ControlFlow<()> {
    let points = ps.points();
    let mut dirs: Vec<(Point, u32)> = Vec::with_capacity(points.len());
    for (i, &a) in points.iter().enumerate() {
        dirs.clear();
        dirs.extend(
            points[i + 1..]
                .iter()
                .enumerate()
                .map(|(k, &b)| (primitive(b - a), (i + 1 + k) as u32)),
        );
        dirs.sort_unstable();
        for run in dirs.chunk_by(|x, y| x.0 == y.0) {
            f(i, run)?;
        }
    }
    ControlFlow::Continue(())
}

pub(crate) fn count_collinear(ps: &PointSet, k: usize) -> u64 {
    let mut total = 0u64;
    let _ = for_each_anchor_line(ps, |_, run| {
        total += binomial(run.len() as u64, k as u64 - 1);
        ControlFlow::Continue(())
    });
    total
}

pub(crate) fn visit_collinear(ps: &PointSet, k: usize, f: Visitor<'_>) -> ControlFlow<()> {
    let points = ps.points();
    for_each_anchor_line(ps, |i, run| {
        let mut tuple = [points[i]; 4];
        match k {
            3 => {
                for a in 0..run.len() {
                    for b in a + 1..run.len() {
                        tuple[1] = points[run[a].1 as usize];
                        tuple[2] = points[run[b].1 as usize];
                        f(&tuple[..3])?;
                    }
                }
            }
            _ => {
                for a in 0..run.len() {
                    for b in a + 1..run.len() {
                        for c in b + 1..run.len() {
                            tuple[1] = points[run[a].1 as usize];
                            tuple[2] = points[run[b].1 as usize];
                            tuple[3] = points[run[c].1 as usize];
                            f(&tuple)?;
                        }
                    }
                }
            }
        }
        ControlFlow::Continue(())
    })
}
