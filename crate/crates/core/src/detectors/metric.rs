//! Classes defined by distances and angles in any orientation: squares,
//! isosceles and isosceles right triangles, concyclic quadruples.

use std::ops::ControlFlow;

use rayon::prelude::*;

use super::{binomial, Visitor};
use crate::grid::{Point, PointSet};
use crate::predicates::is_collinear;

/// Counts every square four times, once per counter-clockwise edge.
pub(crate) fn count_squares(ps: &PointSet) -> u64 {
    let points = ps.points();
    let ccw_edges: u64 = points
        .par_iter()
        .map(|&a| {
            points
                .iter()
                .filter(|&&b| {
                    let r = (b - a).rot90();
                    b != a && ps.contains(b + r) && ps.contains(a + r)
                })
                .count() as u64
        })
        .sum();
    ccw_edges / 4
}

/// Each square is reported once, from its smallest vertex.
pub(crate) fn visit_squares(ps: &PointSet, f: Visitor<'_>) -> ControlFlow<()> {
    let points = ps.points();
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i + 1..] {
            let r = (b - a).rot90();
            let (c, d) = (b + r, a + r);
            if c > a && d > a && ps.contains(c) && ps.contains(d) {
                f(&[a, b, c, d])?;
            }
        }
    }
    ControlFlow::Continue(())
}

/// Other points sorted by squared distance from `apex`.
fn by_distance(points: &[Point], apex: usize, out: &mut Vec<(i64, u32)>) {
    out.clear();
    out.extend(
        points
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != apex)
            .map(|(k, &p)| (p.dist2(points[apex]), k as u32)),
    );
    out.sort_unstable();
}

/// Triples `a, m, b` of the set with `m` the midpoint of `a` and `b`.
fn count_three_term_progressions(ps: &PointSet) -> u64 {
    let points = ps.points();
    points
        .par_iter()
        .enumerate()
        .map(|(i, &a)| {
            points[i + 1..]
                .iter()
                .filter(|&&b| {
                    let s = a + b;
                    s.x % 2 == 0 && s.y % 2 == 0 && ps.contains(Point::new(s.x / 2, s.y / 2))
                })
                .count() as u64
        })
        .sum()
}

/// The lattice has no equilateral triangles, so every isosceles triangle has
/// a single apex and is counted once.
pub(crate) fn count_isosceles(ps: &PointSet, allow_flat: bool) -> u64 {
    let points = ps.points();
    let all: u64 = (0..points.len())
        .into_par_iter()
        .map_init(Vec::new, |buf, apex| {
            by_distance(points, apex, buf);
            buf.chunk_by(|a, b| a.0 == b.0).map(|r| binomial(r.len() as u64, 2)).sum::<u64>()
        })
        .sum();
    if allow_flat {
        all
    } else {
        all - count_three_term_progressions(ps)
    }
}

pub(crate) fn visit_isosceles(ps: &PointSet, allow_flat: bool, f: Visitor<'_>) -> ControlFlow<()> {
    let points = ps.points();
    let mut buf = Vec::new();
    for (apex, &a) in points.iter().enumerate() {
        by_distance(points, apex, &mut buf);
        for run in buf.chunk_by(|x, y| x.0 == y.0) {
            for (k, &(_, b)) in run.iter().enumerate() {
                for &(_, c) in &run[k + 1..] {
                    let (b, c) = (points[b as usize], points[c as usize]);
                    if !allow_flat && is_collinear(a, b, c) {
                        continue;
                    }
                    f(&[a, b, c])?;
                }
            }
        }
    }
    ControlFlow::Continue(())
}

pub(crate) fn count_iso_right(ps: &PointSet) -> u64 {
    let mut total = 0;
    let _ = visit_iso_right(ps, &mut |_| {
        total += 1;
        ControlFlow::Continue(())
    });
    total
}

/// Right-angle vertex `a` and legs `u`, `rot90(u)`; the counter-clockwise
/// leg order makes the pair unique per triangle.
pub(crate) fn visit_iso_right(ps: &PointSet, f: Visitor<'_>) -> ControlFlow<()> {
    let points = ps.points();
    for &a in points {
        for &b in points {
            if a == b {
                continue;
            }
            let c = a + (b - a).rot90();
            if ps.contains(c) {
                f(&[a, b, c])?;
            }
        }
    }
    ControlFlow::Continue(())
}

/// Largest set accepted by fast concyclic counting, which is cubic.
pub const CONCYCLIC_FAST_LIMIT: usize = 300;

/// Identifies the circle (or line) through `p`, `q` and `k` among all circles
/// through `p` and `q`: the cotangent of the directed angle `p k q`, which is
/// constant along such a circle by the inscribed angle theorem.
fn circle_key(p: Point, q: Point, k: Point) -> (i128, i128) {
    let (u, v) = (p - k, q - k);
    let dot = u.x as i128 * v.x as i128 + u.y as i128 * v.y as i128;
    let cross = u.x as i128 * v.y as i128 - u.y as i128 * v.x as i128;
    if cross == 0 {
        return (1, 0);
    }
    let g = gcd_wide(dot.unsigned_abs(), cross.unsigned_abs()) as i128;
    if cross < 0 {
        (-dot / g, -cross / g)
    } else {
        (dot / g, cross / g)
    }
}

fn gcd_wide(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// For the pair `(i, j)`, later points grouped by the circle through `i, j`.
/// Each concyclic quadruple is seen once, from its two smallest points.
fn for_each_pair_circle(
    ps: &PointSet,
    mut f: impl FnMut(usize, usize, &[((i128, i128), u32)]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let points = ps.points();
    let mut keys = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            keys.clear();
            keys.extend(
                (j + 1..points.len()).map(|k| (circle_key(points[i], points[j], points[k]), k as u32)),
            );
            keys.sort_unstable();
            for run in keys.chunk_by(|a, b| a.0 == b.0) {
                if run.len() >= 2 {
                    f(i, j, run)?;
                }
            }
        }
    }
    ControlFlow::Continue(())
}

pub(crate) fn count_concyclic(ps: &PointSet) -> u64 {
    let mut total = 0;
    let _ = for_each_pair_circle(ps, |_, _, run| {
        total += binomial(run.len() as u64, 2);
        ControlFlow::Continue(())
    });
    total
}

pub(crate) fn visit_concyclic(ps: &PointSet, f: Visitor<'_>) -> ControlFlow<()> {
    let points = ps.points();
    for_each_pair_circle(ps, |i, j, run| {
        for (a, &(_, k)) in run.iter().enumerate() {
            for &(_, l) in &run[a + 1..] {
                f(&[points[i], points[j], points[k as usize], points[l as usize]])?;
            }
        }
        ControlFlow::Continue(())
    })
}
