//! Explicit large subsets of `[1, n]^2` avoiding a given configuration. Every
//! constructor checks its output with the detectors before returning.

mod alteration;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::additive::{
    behrend_set, largest_singer_order, max_modular_sidon, singer_difference_set,
};
use crate::detectors::find_any;
use crate::error::{Error, Result};
use crate::grid::{ConfigClass, GridSpec, Point, PointSet};

pub use alteration::{
    rhombus_free_b2g, rhombus_free_b2g_with, rhombus_free_random, rhombus_free_random_with,
    AlterationOptions, RHOMBUS_ALTERATION_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub name: String,
    pub n: u32,
    pub parameters: BTreeMap<String, Value>,
    pub seed: Option<u64>,
    pub base_size: usize,
    pub deleted: usize,
    pub final_size: usize,
    pub verified: bool,
    pub elapsed: Duration,
}

/// A constructed point set with its report.
#[derive(Debug, Clone)]
pub struct Construction {
    pub points: PointSet,
    pub report: ConstructionReport,
}

struct Builder {
    name: &'static str,
    n: u32,
    parameters: BTreeMap<String, Value>,
    seed: Option<u64>,
    start: Instant,
}

impl Builder {
    fn new(name: &'static str, n: u32) -> Self {
        Builder {
            name,
            n,
            parameters: BTreeMap::new(),
            seed: None,
            start: Instant::now(),
        }
    }

    fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    /// Checks `points` against `class` and assembles the report.
    fn finish(self, points: PointSet, class: ConfigClass, base_size: usize, deleted: usize) -> Result<Construction> {
        let grid = GridSpec::new(self.n)?;
        let points = points.with_bound(grid)?;
        if let Some(w) = find_any(&points, class) {
            return Err(Error::VerificationFailed {
                name: self.name.to_string(),
                class,
                witness: w.points,
            });
        }
        let report = ConstructionReport {
            name: self.name.to_string(),
            n: self.n,
            parameters: self.parameters,
            seed: self.seed,
            base_size,
            deleted,
            final_size: points.len(),
            verified: true,
            elapsed: self.start.elapsed(),
        };
        Ok(Construction { points, report })
    }
}

fn check_n(n: u32, min: u32, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::InvalidArgument(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// The bottom row and the left column: `2n - 1` points with no
/// non-degenerate parallelogram.
pub fn l_shape_nd_para_free(n: u32) -> Result<Construction> {
    check_n(n, 1, "l_shape_nd_para_free")?;
    let b = Builder::new("l_shape_nd_para_free", n);
    let n = n as i64;
    let points: PointSet = (1..=n)
        .map(|x| Point::new(x, 1))
        .chain((2..=n).map(|y| Point::new(1, y)))
        .collect();
    let size = points.len();
    b.finish(points, ConfigClass::ND_PARALLELOGRAM, size, 0)
}

/// `S x S` for a 3-AP-free `S`: a vertical-axis kite would put a 3-AP in the
/// row coordinates, a horizontal-axis one in the column coordinates.
pub fn axis_kite_free(n: u32) -> Result<Construction> {
    check_n(n, 1, "axis_kite_free")?;
    let mut b = Builder::new("axis_kite_free", n);
    let s = behrend_set(n as u64)?;
    b.param("behrend_size", s.len());
    let points = product(s.elements(), s.elements());
    let size = points.len();
    b.finish(points, ConfigClass::AXIS_KITE, size, 0)
}

fn product(xs: &[u64], ys: &[u64]) -> PointSet {
    xs.iter()
        .flat_map(|&x| ys.iter().map(move |&y| Point::new(x as i64, y as i64)))
        .collect()
}

/// The kite-free product `S x S` over `[1, n/2]`, turned by 45 degrees:
/// `(u, v) -> (u + v, u - v + n/2)`. Axis squares become squares with
/// axis-parallel diagonals, which are kites.
fn rotated_product(n: u32) -> Result<(PointSet, usize)> {
    let h = (n / 2) as i64;
    let s = behrend_set(h as u64)?;
    let e = s.elements();
    let points = e
        .iter()
        .flat_map(|&u| e.iter().map(move |&v| Point::new(u as i64 + v as i64, u as i64 - v as i64 + h)))
        .collect();
    Ok((points, s.len()))
}

pub fn axis_square_free(n: u32) -> Result<Construction> {
    check_n(n, 2, "axis_square_free")?;
    let mut b = Builder::new("axis_square_free", n);
    let (points, behrend) = rotated_product(n)?;
    b.param("h", n / 2).param("behrend_size", behrend);
    let size = points.len();
    b.finish(points, ConfigClass::AxisSquare, size, 0)
}

/// Keeps the points of the axis-square-free set whose x-coordinate lies in
/// the best translate of a Singer set, so that tilted squares are excluded as
/// well.
pub fn square_free(n: u32) -> Result<Construction> {
    check_n(n, 7, "square_free")?;
    let mut b = Builder::new("square_free", n);
    let q = largest_singer_order(n as u64).ok_or(Error::NoPrimePowerInRange(n as u64))?;
    let m = q * q + q + 1;
    let (p1, _) = rotated_product(m as u32)?;
    let d = singer_difference_set(q)?;
    let mut column_weight = vec![0usize; m as usize];
    for p in p1.iter() {
        column_weight[(p.x - 1) as usize] += 1;
    }
    // translate t keeps columns (e + t) mod m + 1 for e in D
    let score = |t: u64| -> usize {
        d.elements().iter().map(|&e| column_weight[((e + t) % m) as usize]).sum()
    };
    let (best_t, best_score) = (0..m).map(|t| (t, score(t))).fold((0, 0), |acc, cur| {
        if cur.1 > acc.1 {
            cur
        } else {
            acc
        }
    });
    let keep: Vec<bool> = {
        let mut keep = vec![false; m as usize];
        for &e in d.elements() {
            keep[((e + best_t) % m) as usize] = true;
        }
        keep
    };
    let points = p1.filter(|p| keep[(p.x - 1) as usize]);
    debug_assert_eq!(points.len(), best_score);
    b.param("q", q)
        .param("m", m)
        .param("m_over_n", m as f64 / n as f64)
        .param("in_half_window", 2 * m > n as u64)
        .param("translate", best_t)
        .param("p1_size", p1.len())
        .param("averaging_bound", (q + 1) as f64 * p1.len() as f64 / m as f64);
    let size = p1.len();
    let deleted = size - points.len();
    b.finish(points, ConfigClass::Square, size, deleted)
}

/// `{(i + 1, j + 1) : (i + j) mod m in D}` for a difference set `D` whose
/// nonzero differences are distinct modulo `m`: two columns share at most one
/// row. A Singer set for the largest `q` with `q^2 + q + 1 <= n`, or an
/// exhaustive modular Sidon set when `n < 7`.
pub fn rectangle_free(n: u32) -> Result<Construction> {
    check_n(n, 1, "rectangle_free")?;
    let mut b = Builder::new("rectangle_free", n);
    let (d, m) = match largest_singer_order(n as u64) {
        Some(q) => {
            b.param("q", q);
            (singer_difference_set(q)?.elements().to_vec(), q * q + q + 1)
        }
        None => (max_modular_sidon(n as u64), n as u64),
    };
    b.param("m", m).param("difference_set", d.clone());
    let mut in_d = vec![false; m as usize];
    for &e in &d {
        in_d[e as usize] = true;
    }
    let points: PointSet = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| in_d[((i + j) % m) as usize])
        .map(|(i, j)| Point::new(i as i64 + 1, j as i64 + 1))
        .collect();
    let size = points.len();
    b.finish(points, ConfigClass::AxisRectangle, size, 0)
}

/// Splits by the parity of `x + y`: (even, odd).
pub fn parity_partition(ps: &PointSet) -> (PointSet, PointSet) {
    (ps.filter(|p| (p.x + p.y) % 2 == 0), ps.filter(|p| (p.x + p.y) % 2 != 0))
}

/// `(x, y) -> ((x + y) / 2, (y - x) / 2 + shift)` on a part of fixed parity
/// of `x + y`: the 45-degree rescaling, integral on each part.
pub fn rotate_half(ps: &PointSet, shift: i64) -> PointSet {
    ps.iter()
        .map(|p| {
            let (s, t) = (p.x + p.y, p.y - p.x);
            Point::new(s.div_euclid(2), t.div_euclid(2) + shift)
        })
        .collect()
}

/// Builds the named construction.
pub fn construct(class: ConfigClass, n: u32, seed: Option<u64>, g: Option<u64>) -> Result<Construction> {
    match class {
        ConfigClass::ND_PARALLELOGRAM => l_shape_nd_para_free(n),
        ConfigClass::Rhombus => match g {
            Some(g) => rhombus_free_b2g(n, g, seed.unwrap_or(0)),
            None => rhombus_free_random(n, seed.unwrap_or(0)),
        },
        ConfigClass::AxisKite { .. } => axis_kite_free(n),
        ConfigClass::AxisSquare => axis_square_free(n),
        ConfigClass::Square => square_free(n),
        ConfigClass::AxisRectangle => rectangle_free(n),
        other => Err(Error::InvalidArgument(format!("no construction for `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive::{is_3ap_free, ResidueSet};
    use crate::detectors::verify_free;

    #[test]
    fn l_shape_sizes() {
        assert_eq!(l_shape_nd_para_free(1).unwrap().points.points(), &[Point::new(1, 1)]);
        assert_eq!(l_shape_nd_para_free(3).unwrap().points.len(), 5);
        let c = l_shape_nd_para_free(100).unwrap();
        assert_eq!(c.report.final_size, 199);
        assert!(c.report.verified);
        assert!(l_shape_nd_para_free(0).is_err());
    }

    #[test]
    fn kite_free_examples() {
        let c = axis_kite_free(8).unwrap();
        assert_eq!(c.points.len(), 16);
        assert_eq!(axis_kite_free(1).unwrap().points.points(), &[Point::new(1, 1)]);
        for n in [8, 20, 64, 100] {
            let c = axis_kite_free(n).unwrap();
            let s = behrend_set(n as u64).unwrap();
            assert!(c.report.verified);
            assert_eq!(c.points.len(), s.len() * s.len());
        }
    }

    #[test]
    fn kite_free_has_no_diagonal_squares() {
        let c = axis_kite_free(40).unwrap();
        let ps = &c.points;
        for a in ps.iter() {
            for d in 1..40 {
                let (top, left, right) = (Point::new(a.x, a.y + 2 * d), Point::new(a.x - d, a.y + d), Point::new(a.x + d, a.y + d));
                assert!(!(ps.contains(top) && ps.contains(left) && ps.contains(right)));
            }
        }
    }

    #[test]
    fn axis_square_free_examples() {
        for n in [2, 3, 16, 33, 100] {
            let c = axis_square_free(n).unwrap();
            let h = (n / 2) as i64;
            assert!(c.points.iter().all(|p| (2..=2 * h).contains(&p.x) && (1..2 * h).contains(&p.y)));
            let parity = (c.points.points()[0].x + c.points.points()[0].y).rem_euclid(2);
            assert!(c.points.iter().all(|p| (p.x + p.y).rem_euclid(2) == parity));
            let s = behrend_set(h as u64).unwrap();
            assert_eq!(c.points.len(), s.len() * s.len());
        }
    }

    #[test]
    fn square_free_examples() {
        for n in [7, 13, 50, 100] {
            let c = square_free(n).unwrap();
            let q = c.report.parameters["q"].as_u64().unwrap();
            let m = c.report.parameters["m"].as_u64().unwrap();
            let p1 = c.report.parameters["p1_size"].as_u64().unwrap();
            assert!(c.points.len() as u64 * m >= (q + 1) * p1, "n = {n}");
            assert!(verify_free(&c.points, ConfigClass::Square).free);
            let mut xs: Vec<u64> = c.points.iter().map(|p| p.x as u64).collect();
            xs.dedup();
            let columns = ResidueSet::interval(xs);
            assert!(crate::additive::difference_multiplicity(&columns) <= 1);
        }
        assert!(matches!(square_free(6), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn rectangle_free_meets_reiman() {
        for (n, size) in [(7u32, 21usize), (13, 52), (21, 105), (31, 186)] {
            let c = rectangle_free(n).unwrap();
            let bound = (n as f64 / 2.0 * (1.0 + (4.0 * n as f64 - 3.0).sqrt())).floor() as usize;
            assert_eq!(c.points.len(), size);
            assert_eq!(size, bound);
        }
        for n in 1..7 {
            let c = rectangle_free(n).unwrap();
            assert!(c.report.verified);
            assert!(!c.points.is_empty());
        }
        assert_eq!(rectangle_free(3).unwrap().points.len(), 6);
    }

    #[test]
    fn parity_parts() {
        let g = GridSpec::new(2).unwrap().full();
        let (even, odd) = parity_partition(&g);
        assert_eq!((even.len(), odd.len()), (2, 2));
        let g = GridSpec::new(9).unwrap().full();
        let (even, odd) = parity_partition(&g);
        assert_eq!(even.len() + odd.len(), g.len());
        assert!(even.iter().all(|p| !odd.contains(p)));
        for (part, shift) in [(&even, 5), (&odd, 5)] {
            let r = rotate_half(part, shift);
            assert_eq!(r.len(), part.len());
            assert!(r.iter().all(|p| (1..=9).contains(&p.x) && (1..=9).contains(&p.y)));
        }
    }

    #[test]
    fn behrend_rows_are_ap_free() {
        let c = axis_kite_free(30).unwrap();
        let xs: Vec<u64> = c.points.iter().map(|p| p.x as u64).collect();
        assert!(is_3ap_free(&ResidueSet::interval(xs)));
    }
}
