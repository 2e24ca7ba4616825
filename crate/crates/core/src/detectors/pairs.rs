//! Midpoint buckets: unordered point pairs grouped by coordinate sum.
//!
//! Pairs are produced one x-sum at a time so memory stays proportional to the
//! largest x-sum group rather than to all `N^2/2` pairs. Inside a group the
//! pairs are bucketed by y-sum, which yields the common-midpoint buckets used
//! for parallelograms and rhombuses.

use std::ops::ControlFlow;

use rayon::prelude::*;

use super::{gcd, Visitor};
use crate::grid::{Point, PointSet};

/// One unordered pair `(points[i], points[j])` with `i < j` in canonical order.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Pair {
    pub sy: i64,
    pub i: u32,
    pub j: u32,
}

/// Column pairs are materialized in windows of about this many entries.
const WINDOW_PAIRS: usize = 1 << 20;

pub(crate) struct PairBuckets<'a> {
    points: &'a [Point],
    /// `col_start[c]..col_start[c + 1]` indexes the points with x = `col_x[c]`.
    col_start: Vec<usize>,
    col_x: Vec<i64>,
    min_y: i64,
    max_y: i64,
}

impl<'a> PairBuckets<'a> {
    pub fn new(ps: &'a PointSet) -> Self {
        let points = ps.points();
        let mut col_start = Vec::new();
        let mut col_x = Vec::new();
        for (idx, p) in points.iter().enumerate() {
            if col_x.last() != Some(&p.x) {
                col_start.push(idx);
                col_x.push(p.x);
            }
        }
        col_start.push(points.len());
        let min_y = points.iter().map(|p| p.y).min().unwrap_or(0);
        let max_y = points.iter().map(|p| p.y).max().unwrap_or(0);
        PairBuckets {
            points,
            col_start,
            col_x,
            min_y,
            max_y,
        }
    }

    pub fn points(&self) -> &'a [Point] {
        self.points
    }

    /// Column pairs `(c1 <= c2)` grouped by x-sum, in increasing x-sum order,
    /// delivered one window at a time.
    fn for_each_window(&self, mut f: impl FnMut(Vec<(i64, Vec<(u32, u32)>)>) -> ControlFlow<()>) -> ControlFlow<()> {
        let ncol = self.col_x.len();
        if ncol == 0 {
            return ControlFlow::Continue(());
        }
        let lo_sum = 2 * self.col_x[0];
        let hi_sum = 2 * self.col_x[ncol - 1];
        let total = ncol * (ncol + 1) / 2;
        let windows = total.div_ceil(WINDOW_PAIRS).max(1) as i64;
        let span = hi_sum - lo_sum + 1;
        let width = (span + windows - 1) / windows;
        let mut start = lo_sum;
        while start <= hi_sum {
            let end = start.saturating_add(width).min(hi_sum + 1);
            let mut flat: Vec<(i64, u32, u32)> = Vec::new();
            for c1 in 0..ncol {
                let x1 = self.col_x[c1];
                if 2 * x1 >= end {
                    break;
                }
                // c2 >= c1 with start <= x1 + x2 < end
                let from = self.col_x[c1..].partition_point(|&x| x1 + x < start) + c1;
                let to = self.col_x[c1..].partition_point(|&x| x1 + x < end) + c1;
                for c2 in from..to {
                    flat.push((x1 + self.col_x[c2], c1 as u32, c2 as u32));
                }
            }
            flat.sort_unstable();
            let mut groups: Vec<(i64, Vec<(u32, u32)>)> = Vec::new();
            for (sum, c1, c2) in flat {
                match groups.last_mut() {
                    Some((s, v)) if *s == sum => v.push((c1, c2)),
                    _ => groups.push((sum, vec![(c1, c2)])),
                }
            }
            f(groups)?;
            start = end;
        }
        ControlFlow::Continue(())
    }

    /// Fills `out` with all pairs of the x-sum group, ordered by y-sum. Pairs
    /// sharing a y-sum keep generation order.
    fn fill_group(&self, cols: &[(u32, u32)], raw: &mut Vec<Pair>, out: &mut Vec<Pair>) {
        raw.clear();
        for &(c1, c2) in cols {
            let a = self.col_start[c1 as usize]..self.col_start[c1 as usize + 1];
            if c1 == c2 {
                for i in a.clone() {
                    for j in i + 1..a.end {
                        raw.push(Pair {
                            sy: self.points[i].y + self.points[j].y,
                            i: i as u32,
                            j: j as u32,
                        });
                    }
                }
            } else {
                let b = self.col_start[c2 as usize]..self.col_start[c2 as usize + 1];
                for i in a.clone() {
                    let yi = self.points[i].y;
                    for j in b.clone() {
                        raw.push(Pair {
                            sy: yi + self.points[j].y,
                            i: i as u32,
                            j: j as u32,
                        });
                    }
                }
            }
        }
        out.clear();
        let range = (2 * (self.max_y - self.min_y) + 1) as usize;
        if raw.len() >= 2 && range <= 4 * raw.len() + 1024 {
            // counting sort on y-sum, stable
            let base = 2 * self.min_y;
            let mut counts = vec![0usize; range + 1];
            for p in raw.iter() {
                counts[(p.sy - base) as usize + 1] += 1;
            }
            for k in 1..counts.len() {
                counts[k] += counts[k - 1];
            }
            out.resize(raw.len(), Pair { sy: 0, i: 0, j: 0 });
            for p in raw.iter() {
                let slot = &mut counts[(p.sy - base) as usize];
                out[*slot] = *p;
                *slot += 1;
            }
        } else {
            out.extend_from_slice(raw);
            out.sort_by_key(|p| p.sy);
        }
    }

    /// Visits every bucket of at least two pairs sharing a midpoint, in
    /// increasing (x-sum, y-sum) order.
    pub fn visit_buckets(&self, mut f: impl FnMut(&[Pair]) -> ControlFlow<()>) -> ControlFlow<()> {
        let mut raw = Vec::new();
        let mut sorted = Vec::new();
        self.for_each_window(|groups| {
            for (_, cols) in &groups {
                self.fill_group(cols, &mut raw, &mut sorted);
                for bucket in sorted.chunk_by(|a, b| a.sy == b.sy) {
                    if bucket.len() >= 2 {
                        f(bucket)?;
                    }
                }
            }
            ControlFlow::Continue(())
        })
    }

    /// Sums `f` over all buckets of at least two pairs. Parallel over x-sum
    /// groups; the result does not depend on the worker count.
    pub fn sum_buckets<F>(&self, f: F) -> u64
    where
        F: Fn(&[Pair], &mut Scratch) -> u64 + Sync,
    {
        let mut total = 0u64;
        let _ = self.for_each_window(|groups| {
            total += groups
                .par_iter()
                .map_init(
                    || (Vec::new(), Vec::new(), Scratch::default()),
                    |(raw, sorted, scratch), (_, cols)| {
                        self.fill_group(cols, raw, sorted);
                        sorted
                            .chunk_by(|a, b| a.sy == b.sy)
                            .filter(|b| b.len() >= 2)
                            .map(|b| f(b, scratch))
                            .sum::<u64>()
                    },
                )
                .sum::<u64>();
            ControlFlow::Continue(())
        });
        total
    }
}

/// Reusable per-worker buffers.
#[derive(Default)]
pub(crate) struct Scratch {
    dirs: Vec<(Point, u32)>,
}

/// Primitive direction of `j - i`. Since `i < j` in canonical order the
/// vector already has its first nonzero component positive.
#[inline]
pub(crate) fn pair_direction(points: &[Point], p: &Pair) -> Point {
    primitive(points[p.j as usize] - points[p.i as usize])
}

/// Reduces `v` to a primitive vector with first nonzero component positive.
#[inline]
pub(crate) fn primitive(v: Point) -> Point {
    let g = gcd(v.x.unsigned_abs(), v.y.unsigned_abs()) as i64;
    let (x, y) = (v.x / g, v.y / g);
    if x < 0 || (x == 0 && y < 0) {
        Point::new(-x, -y)
    } else {
        Point::new(x, y)
    }
}

/// Normalized direction perpendicular to a normalized direction.
#[inline]
pub(crate) fn perpendicular(d: Point) -> Point {
    let r = d.rot90();
    if r.x < 0 || (r.x == 0 && r.y < 0) {
        Point::new(-r.x, -r.y)
    } else {
        r
    }
}

/// Sorts the bucket's pairs by diagonal direction; the `u32` is the position
/// inside the bucket.
fn directions<'s>(points: &[Point], bucket: &[Pair], scratch: &'s mut Scratch) -> &'s [(Point, u32)] {
    scratch.dirs.clear();
    scratch
        .dirs
        .extend(bucket.iter().enumerate().map(|(k, p)| (pair_direction(points, p), k as u32)));
    scratch.dirs.sort_unstable();
    &scratch.dirs
}

fn choose2(t: u64) -> u64 {
    t * t.saturating_sub(1) / 2
}

pub(crate) fn count_parallelograms(ps: &PointSet, allow_degenerate: bool) -> u64 {
    let buckets = PairBuckets::new(ps);
    let points = buckets.points();
    buckets.sum_buckets(|bucket, scratch| {
        let all = choose2(bucket.len() as u64);
        if allow_degenerate {
            return all;
        }
        let dirs = directions(points, bucket, scratch);
        let collinear: u64 = dirs.chunk_by(|a, b| a.0 == b.0).map(|r| choose2(r.len() as u64)).sum();
        all - collinear
    })
}

pub(crate) fn visit_parallelograms(ps: &PointSet, allow_degenerate: bool, f: Visitor<'_>) -> ControlFlow<()> {
    let buckets = PairBuckets::new(ps);
    let points = buckets.points();
    let quad = |p: &Pair, q: &Pair| {
        [
            points[p.i as usize],
            points[p.j as usize],
            points[q.i as usize],
            points[q.j as usize],
        ]
    };
    if allow_degenerate {
        return buckets.visit_buckets(|bucket| {
            for (a, p) in bucket.iter().enumerate() {
                for q in &bucket[a + 1..] {
                    f(&quad(p, q))?;
                }
            }
            ControlFlow::Continue(())
        });
    }
    // diagonals through a common midpoint span a non-degenerate
    // parallelogram exactly when their directions differ
    let mut scratch = Scratch::default();
    buckets.visit_buckets(|bucket| {
        let dirs = directions(points, bucket, &mut scratch);
        let mut start = 0;
        for run in dirs.chunk_by(|a, b| a.0 == b.0) {
            start += run.len();
            for &(_, a) in run {
                for &(_, b) in &dirs[start..] {
                    f(&quad(&bucket[a as usize], &bucket[b as usize]))?;
                }
            }
        }
        ControlFlow::Continue(())
    })
}

pub(crate) fn count_rhombuses(ps: &PointSet) -> u64 {
    let buckets = PairBuckets::new(ps);
    let points = buckets.points();
    buckets.sum_buckets(|bucket, scratch| {
        let dirs = directions(points, bucket, scratch);
        let mut twice = 0u64;
        for run in dirs.chunk_by(|a, b| a.0 == b.0) {
            let perp = perpendicular(run[0].0);
            let lo = dirs.partition_point(|d| d.0 < perp);
            let hi = dirs.partition_point(|d| d.0 <= perp);
            twice += run.len() as u64 * (hi - lo) as u64;
        }
        twice / 2
    })
}

/// Rhombuses as quadruples of canonical indices.
pub(crate) fn visit_rhombus_indices(
    ps: &PointSet,
    mut f: impl FnMut([u32; 4]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let buckets = PairBuckets::new(ps);
    let points = buckets.points();
    let mut scratch = Scratch::default();
    buckets.visit_buckets(|bucket| {
        let dirs = directions(points, bucket, &mut scratch);
        for run in dirs.chunk_by(|a, b| a.0 == b.0) {
            let perp = perpendicular(run[0].0);
            if perp <= run[0].0 {
                continue;
            }
            let lo = dirs.partition_point(|d| d.0 < perp);
            let hi = dirs.partition_point(|d| d.0 <= perp);
            for &(_, a) in run {
                for &(_, b) in &dirs[lo..hi] {
                    let (p, q) = (bucket[a as usize], bucket[b as usize]);
                    f([p.i, p.j, q.i, q.j])?;
                }
            }
        }
        ControlFlow::Continue(())
    })
}

pub(crate) fn visit_rhombuses(ps: &PointSet, f: Visitor<'_>) -> ControlFlow<()> {
    let points = ps.points();
    visit_rhombus_indices(ps, |q| f(&q.map(|k| points[k as usize])))
}
