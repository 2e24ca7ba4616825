//! Configurations with axis-parallel structure: axis squares, rectangles,
//! corners, axis kites and axis isosceles trapezoids. Everything here works on
//! rows (points sharing a y-coordinate) or columns.

use std::collections::HashMap;
use std::ops::ControlFlow;

use super::{binomial, Visitor};
use crate::grid::{Point, PointSet};

/// Points grouped by y, each row sorted by x; rows in increasing y.
fn rows(ps: &PointSet) -> Vec<(i64, Vec<i64>)> {
    let mut by_y: Vec<Point> = ps.points().to_vec();
    by_y.sort_unstable_by_key(|p| (p.y, p.x));
    let mut out: Vec<(i64, Vec<i64>)> = Vec::new();
    for p in by_y {
        match out.last_mut() {
            Some((y, xs)) if *y == p.y => xs.push(p.x),
            _ => out.push((p.y, vec![p.x])),
        }
    }
    out
}

/// Points grouped by x, each column sorted by y; columns in increasing x.
fn columns(ps: &PointSet) -> Vec<(i64, Vec<i64>)> {
    let mut out: Vec<(i64, Vec<i64>)> = Vec::new();
    for p in ps.iter() {
        match out.last_mut() {
            Some((x, ys)) if *x == p.x => ys.push(p.y),
            _ => out.push((p.x, vec![p.y])),
        }
    }
    out
}

fn transposed(ps: &PointSet) -> PointSet {
    PointSet::new(ps.iter().map(Point::transpose))
}

fn untranspose(t: &[Point], buf: &mut [Point; 4]) {
    for (slot, p) in buf.iter_mut().zip(t) {
        *slot = p.transpose();
    }
}

pub(crate) fn count_axis_squares(ps: &PointSet) -> u64 {
    let mut total = 0;
    let _ = visit_axis_squares(ps, &mut |_| {
        total += 1;
        ControlFlow::Continue(())
    });
    total
}

/// Each square is reported once, from its lower edge.
pub(crate) fn visit_axis_squares(ps: &PointSet, f: Visitor<'_>) -> ControlFlow<()> {
    for (y, xs) in rows(ps) {
        for (a, &xa) in xs.iter().enumerate() {
            for &xb in &xs[a + 1..] {
                let d = xb - xa;
                let (p, q) = (Point::new(xa, y + d), Point::new(xb, y + d));
                if ps.contains(p) && ps.contains(q) {
                    f(&[Point::new(xa, y), Point::new(xb, y), p, q])?;
                }
            }
        }
    }
    ControlFlow::Continue(())
}

/// Column pairs `(y1 < y2)` with the x of their column, sorted.
fn column_spans(ps: &PointSet) -> Vec<((i64, i64), i64)> {
    let mut spans = Vec::new();
    for (x, ys) in columns(ps) {
        for (a, &y1) in ys.iter().enumerate() {
            for &y2 in &ys[a + 1..] {
                spans.push(((y1, y2), x));
            }
        }
    }
    spans.sort_unstable();
    spans
}

pub(crate) fn count_axis_rectangles(ps: &PointSet) -> u64 {
    column_spans(ps)
        .chunk_by(|a, b| a.0 == b.0)
        .map(|run| binomial(run.len() as u64, 2))
        .sum()
}

pub(crate) fn visit_axis_rectangles(ps: &PointSet, f: Visitor<'_>) -> ControlFlow<()> {
    let spans = column_spans(ps);
    for run in spans.chunk_by(|a, b| a.0 == b.0) {
        let (y1, y2) = run[0].0;
        for (a, &(_, x1)) in run.iter().enumerate() {
            for &(_, x2) in &run[a + 1..] {
                f(&[
                    Point::new(x1, y1),
                    Point::new(x1, y2),
                    Point::new(x2, y1),
                    Point::new(x2, y2),
                ])?;
            }
        }
    }
    ControlFlow::Continue(())
}

pub(crate) fn count_corners(ps: &PointSet) -> u64 {
    let mut total = 0;
    let _ = visit_corners(ps, &mut |_| {
        total += 1;
        ControlFlow::Continue(())
    });
    total
}

/// `{(a, b), (a + d, b), (a, b + d)}`: the apex and `d` come from an ordered
/// pair of points in one row.
pub(crate) fn visit_corners(ps: &PointSet, f: Visitor<'_>) -> ControlFlow<()> {
    for (y, xs) in rows(ps) {
        for &xa in &xs {
            for &xb in &xs {
                if xa == xb {
                    continue;
                }
                let top = Point::new(xa, y + (xb - xa));
                if ps.contains(top) {
                    f(&[Point::new(xa, y), Point::new(xb, y), top])?;
                }
            }
        }
    }
    ControlFlow::Continue(())
}

/// Mirror pairs `{(x0 - s, b), (x0 + s, b)}` as `(x0, b)`.
fn mirror_pair_centers(rows: &[(i64, Vec<i64>)]) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for (y, xs) in rows {
        for (a, &xa) in xs.iter().enumerate() {
            for &xb in &xs[a + 1..] {
                if (xa + xb) % 2 == 0 {
                    out.push(((xa + xb) / 2, *y));
                }
            }
        }
    }
    out
}

/// Kites whose symmetry axis is vertical.
fn count_vertical_kites(ps: &PointSet, allow_flat: bool) -> u64 {
    let cols: HashMap<i64, u64> = columns(ps).into_iter().map(|(x, ys)| (x, ys.len() as u64)).collect();
    let mut total = 0;
    for (x0, b) in mirror_pair_centers(&rows(ps)) {
        let Some(&c) = cols.get(&x0) else { continue };
        total += binomial(c, 2);
        if !allow_flat && ps.contains(Point::new(x0, b)) {
            total -= c - 1;
        }
    }
    total
}

/// Kites with both a vertical and a horizontal symmetry axis: the two
/// symmetric pairs share their midpoint.
fn count_doubly_symmetric(ps: &PointSet) -> u64 {
    let mut horizontal: HashMap<(i64, i64), u64> = HashMap::new();
    for c in mirror_pair_centers(&rows(ps)) {
        *horizontal.entry(c).or_default() += 1;
    }
    let t = transposed(ps);
    let mut total = 0;
    for c in mirror_pair_centers(&rows(&t)) {
        if let Some(h) = horizontal.get(&c.transpose_pair()) {
            total += h;
        }
    }
    total
}

trait TransposePair {
    fn transpose_pair(self) -> Self;
}

impl TransposePair for (i64, i64) {
    fn transpose_pair(self) -> Self {
        (self.1, self.0)
    }
}

pub(crate) fn count_axis_kites(ps: &PointSet, allow_flat: bool) -> u64 {
    let t = transposed(ps);
    count_vertical_kites(ps, allow_flat) + count_vertical_kites(&t, allow_flat) - count_doubly_symmetric(ps)
}

/// Vertical-axis kites. With `skip_doubly_symmetric`, kites that are also
/// symmetric about the horizontal line through the mirror pair are skipped.
fn visit_vertical_kites(
    ps: &PointSet,
    allow_flat: bool,
    skip_doubly_symmetric: bool,
    f: &mut dyn FnMut(&[Point]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let cols: HashMap<i64, Vec<i64>> = columns(ps).into_iter().collect();
    for (y, xs) in rows(ps) {
        for (a, &xa) in xs.iter().enumerate() {
            for &xb in &xs[a + 1..] {
                if (xa + xb) % 2 != 0 {
                    continue;
                }
                let x0 = (xa + xb) / 2;
                let Some(axis) = cols.get(&x0) else { continue };
                for (i, &ya) in axis.iter().enumerate() {
                    for &yc in &axis[i + 1..] {
                        if !allow_flat && (ya == y || yc == y) {
                            continue;
                        }
                        if skip_doubly_symmetric && ya + yc == 2 * y {
                            continue;
                        }
                        f(&[
                            Point::new(x0, ya),
                            Point::new(x0, yc),
                            Point::new(xa, y),
                            Point::new(xb, y),
                        ])?;
                    }
                }
            }
        }
    }
    ControlFlow::Continue(())
}

pub(crate) fn visit_axis_kites(ps: &PointSet, allow_flat: bool, f: Visitor<'_>) -> ControlFlow<()> {
    visit_vertical_kites(ps, allow_flat, false, &mut *f)?;
    let t = transposed(ps);
    let mut buf = [Point::new(0, 0); 4];
    visit_vertical_kites(&t, allow_flat, true, &mut |q| {
        untranspose(q, &mut buf);
        f(&buf)
    })
}

/// Horizontal chords keyed by `x1 + x2`, as `(sum, y, width)`, sorted.
fn chords(ps: &PointSet) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for (y, xs) in rows(ps) {
        for (a, &xa) in xs.iter().enumerate() {
            for &xb in &xs[a + 1..] {
                out.push((xa + xb, y, xb - xa));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Trapezoids with horizontal bases. `equal_widths` admits rectangles.
fn count_horizontal_trapezoids(ps: &PointSet, equal_widths: bool) -> u64 {
    let mut total = 0;
    for group in chords(ps).chunk_by(|a, b| a.0 == b.0) {
        let t = group.len() as u64;
        // group is sorted by y, so same-row chords are contiguous
        let same_row: u64 = group.chunk_by(|a, b| a.1 == b.1).map(|r| binomial(r.len() as u64, 2)).sum();
        let mut widths: Vec<i64> = group.iter().map(|c| c.2).collect();
        widths.sort_unstable();
        let same_width: u64 = widths.chunk_by(|a, b| a == b).map(|r| binomial(r.len() as u64, 2)).sum();
        // a chord is fixed by (sum, y, width), so no pair shares both row and width
        total += binomial(t, 2) - same_row;
        if !equal_widths {
            total -= same_width;
        }
    }
    total
}

pub(crate) fn count_axis_iso_trapezoids(ps: &PointSet, include_equal_sides: bool) -> u64 {
    count_horizontal_trapezoids(ps, include_equal_sides) + count_horizontal_trapezoids(&transposed(ps), false)
}

fn visit_horizontal_trapezoids(
    ps: &PointSet,
    equal_widths: bool,
    f: &mut dyn FnMut(&[Point]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let chords = chords(ps);
    for group in chords.chunk_by(|a, b| a.0 == b.0) {
        for (a, &(s, y1, w1)) in group.iter().enumerate() {
            for &(_, y2, w2) in &group[a + 1..] {
                if y1 == y2 || (!equal_widths && w1 == w2) {
                    continue;
                }
                // x1 + x2 = s and x2 - x1 = w
                let (l1, l2) = ((s - w1) / 2, (s - w2) / 2);
                f(&[
                    Point::new(l1, y1),
                    Point::new(l1 + w1, y1),
                    Point::new(l2, y2),
                    Point::new(l2 + w2, y2),
                ])?;
            }
        }
    }
    ControlFlow::Continue(())
}

/// Rectangles, when included, are reported with their horizontal bases only.
pub(crate) fn visit_axis_iso_trapezoids(ps: &PointSet, include_equal_sides: bool, f: Visitor<'_>) -> ControlFlow<()> {
    visit_horizontal_trapezoids(ps, include_equal_sides, &mut *f)?;
    let t = transposed(ps);
    let mut buf = [Point::new(0, 0); 4];
    visit_horizontal_trapezoids(&t, false, &mut |q| {
        untranspose(q, &mut buf);
        f(&buf)
    })
}
