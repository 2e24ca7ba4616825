//! Rhombus-free sets by random sampling and deletion inside `[1, n] x S`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::ops::ControlFlow;

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use super::{check_n, Builder, Construction};
use crate::additive::{b2_minus_g_set, difference_multiplicity, sidon_in_interval, ResidueSet};
use crate::detectors::pairs::visit_rhombus_indices;
use crate::error::{Error, Result};
use crate::grid::{ConfigClass, Point, PointSet};

/// Default largest `n` accepted by the alteration constructions.
pub const RHOMBUS_ALTERATION_LIMIT: u32 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlterationOptions {
    pub max_n: u32,
}

impl Default for AlterationOptions {
    fn default() -> Self {
        AlterationOptions {
            max_n: RHOMBUS_ALTERATION_LIMIT,
        }
    }
}

pub fn rhombus_free_random(n: u32, seed: u64) -> Result<Construction> {
    rhombus_free_random_with(n, seed, AlterationOptions::default())
}

pub fn rhombus_free_random_with(n: u32, seed: u64, opts: AlterationOptions) -> Result<Construction> {
    check_n(n, 7, "rhombus_free_random")?;
    guard(n, opts)?;
    let rows = sidon_in_interval(n as u64)?;
    alteration(Builder::new("rhombus_free_random", n), &rows, seed)
}

pub fn rhombus_free_b2g(n: u32, g: u64, seed: u64) -> Result<Construction> {
    rhombus_free_b2g_with(n, g, seed, AlterationOptions::default())
}

pub fn rhombus_free_b2g_with(n: u32, g: u64, seed: u64, opts: AlterationOptions) -> Result<Construction> {
    check_n(n, 7, "rhombus_free_b2g")?;
    guard(n, opts)?;
    let rows = b2_minus_g_set(n as u64, g)?;
    let mut b = Builder::new("rhombus_free_b2g", n);
    b.param("g", g);
    alteration(b, &rows, seed)
}

fn guard(n: u32, opts: AlterationOptions) -> Result<()> {
    if n > opts.max_n {
        return Err(Error::GuardExceeded {
            what: "rhombus alteration".into(),
            size: n as usize,
            limit: opts.max_n as usize,
        });
    }
    Ok(())
}

fn alteration(mut b: Builder, rows: &ResidueSet, seed: u64) -> Result<Construction> {
    let n = b.n;
    let base: PointSet = (1..=n as i64)
        .flat_map(|x| rows.elements().iter().map(move |&y| Point::new(x, y as i64)))
        .collect();
    let r = count_product_rhombuses(n as u64, rows.elements());
    let p = if r == 0 {
        1.0
    } else {
        (base.len() as f64 / (4.0 * r as f64)).cbrt().min(1.0)
    };

    let mut rng = SplitMix64::seed_from_u64(seed);
    let sample = base.filter(|_| unit_draw(&mut rng) < p);
    let (kept, rhombi) = greedy_delete(&sample);

    let nf = n as f64;
    b.seed = Some(seed);
    b.param("row_set_size", rows.len())
        .param("row_multiplicity", difference_multiplicity(rows))
        .param("rhombus_count", r)
        .param("p", p)
        .param("fitted_constant", r as f64 / (nf * nf * nf.ln()))
        .param("sample_size", sample.len())
        .param("rhombi_in_sample", rhombi);
    let base_size = base.len();
    let deleted = base_size - kept.len();
    b.finish(kept, ConfigClass::Rhombus, base_size, deleted)
}

/// Uniform in `[0, 1)` from the top 53 bits of one draw.
fn unit_draw(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Repeatedly removes the point lying in the most surviving rhombuses
/// (smallest point on ties) until none is left. Also returns the number of
/// rhombuses in `ps`.
fn greedy_delete(ps: &PointSet) -> (PointSet, usize) {
    let mut rhombi: Vec<[u32; 4]> = Vec::new();
    let _ = visit_rhombus_indices(ps, |q| {
        rhombi.push(q);
        ControlFlow::Continue(())
    });
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); ps.len()];
    for (k, q) in rhombi.iter().enumerate() {
        for &i in q {
            incident[i as usize].push(k as u32);
        }
    }
    let mut degree: Vec<usize> = incident.iter().map(Vec::len).collect();
    let mut alive = vec![true; rhombi.len()];
    let mut removed = vec![false; ps.len()];
    let mut heap: BinaryHeap<(usize, Reverse<u32>)> = degree
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d > 0)
        .map(|(i, &d)| (d, Reverse(i as u32)))
        .collect();
    while let Some((d, Reverse(i))) = heap.pop() {
        let i = i as usize;
        if removed[i] || degree[i] != d || d == 0 {
            continue;
        }
        removed[i] = true;
        for &k in &incident[i] {
            if !std::mem::replace(&mut alive[k as usize], false) {
                continue;
            }
            for &j in &rhombi[k as usize] {
                let j = j as usize;
                if j != i {
                    degree[j] -= 1;
                    if degree[j] > 0 {
                        heap.push((degree[j], Reverse(j as u32)));
                    }
                }
            }
        }
        degree[i] = 0;
    }
    let points = ps.points();
    let kept = PointSet::new((0..points.len()).filter(|&i| !removed[i]).map(|i| points[i]));
    (kept, rhombi.len())
}

/// Exact number of rhombuses in `[1, n] x rows`.
///
/// A rhombus is a pair of perpendicular diagonals with a common midpoint. A
/// diagonal joining rows `s1 <= s2` at x-sum `X` has direction `(u, s2 - s1)`
/// where `u = X - 2 x1` ranges over the integers of the parity of `X` with
/// `|u| <= min(X - 2, 2n - X)`. Diagonals in one bucket share `X` and
/// `s1 + s2`; they are perpendicular when `u1 u2 = -(s2 - s1)(s2' - s1')`, or
/// when one is horizontal and the other vertical.
pub(crate) fn count_product_rhombuses(n: u64, rows: &[u64]) -> u64 {
    if n < 2 {
        return 0;
    }
    let n = n as i64;
    // number of X in [2, 2n] with the given parity and room for |u| <= m
    let x_count = |m: i64, parity: i64| -> i64 {
        let (lo, hi) = (m + 2, 2 * n - m);
        if lo > hi {
            return 0;
        }
        let first = if lo.rem_euclid(2) == parity { lo } else { lo + 1 };
        if first > hi {
            0
        } else {
            (hi - first) / 2 + 1
        }
    };
    // ordered (u1, u2) pairs with u1 u2 = -product, summed over all X
    let solutions = |product: i64| -> i64 {
        let mut total = 0;
        let lo = (product + n - 2) / (n - 1).max(1);
        for a in lo.max(1)..n {
            if product % a != 0 {
                continue;
            }
            let b = product / a;
            if b >= n || (a - b) % 2 != 0 {
                continue;
            }
            total += 2 * x_count(a.max(b), a % 2);
        }
        total
    };

    let mut by_sum: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for (k, &s1) in rows.iter().enumerate() {
        for &s2 in &rows[k + 1..] {
            by_sum.entry((s1 + s2) as i64).or_default().push((s2 as i64 - s1 as i64).abs());
        }
    }
    let mut total: i64 = 0;
    for deltas in by_sum.values() {
        for (k, &d1) in deltas.iter().enumerate() {
            total += solutions(d1 * d1) / 2;
            for &d2 in &deltas[k + 1..] {
                total += solutions(d1 * d2);
            }
        }
    }
    // horizontal diagonal in row s, vertical one between rows s - d and s + d
    let horizontal: i64 = (1..n).map(|x| 2 * x).map(|x| horizontal_spans(x, n)).sum();
    for &s in rows {
        if let Some(deltas) = by_sum.get(&(2 * s as i64)) {
            total += deltas.len() as i64 * horizontal;
        }
    }
    total as u64
}

/// Horizontal diagonals with x-sum `x` (even) and positive even width.
fn horizontal_spans(x: i64, n: i64) -> i64 {
    (x - 2).min(2 * n - x) / 2
}
