//! Exhaustive enumeration of all k-subsets, checked with the tuple
//! predicates. Independent of every fast path; used as the counting oracle.

use std::ops::ControlFlow;

use super::Visitor;
use crate::grid::{ConfigClass, Point, PointSet};
use crate::predicates::holds;

/// Visits subsets in lexicographic order of their canonical indices.
pub(crate) fn visit(ps: &PointSet, class: ConfigClass, f: Visitor<'_>) -> ControlFlow<()> {
    let points = ps.points();
    let n = points.len();
    let k = class.arity();
    if n < k {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut tuple: Vec<Point> = vec![Point::new(0, 0); k];
    loop {
        for (slot, &i) in tuple.iter_mut().zip(&idx) {
            *slot = points[i];
        }
        if holds(class, &tuple) {
            f(&tuple)?;
        }
        // next combination
        let mut pos = k;
        while pos > 0 && idx[pos - 1] == n - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return ControlFlow::Continue(());
        }
        idx[pos - 1] += 1;
        for q in pos..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

pub(crate) fn count(ps: &PointSet, class: ConfigClass) -> u64 {
    let mut total = 0;
    let _ = visit(ps, class, &mut |_| {
        total += 1;
        ControlFlow::Continue(())
    });
    total
}
