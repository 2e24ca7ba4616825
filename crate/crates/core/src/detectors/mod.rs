//! Set-level search and counting of forbidden configurations.
//!
//! Every class has a fast counter and a fast enumerator; brute-force subset
//! enumeration is kept as an independent oracle. Counts are of unordered
//! point subsets.

mod axis;
mod brute;
mod lines;
mod metric;
pub(crate) mod pairs;
mod pyth;

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{ConfigClass, Point, PointSet, Witness};

pub use metric::CONCYCLIC_FAST_LIMIT;
pub use pyth::{pythagorean_pairs, PythPair};

pub(crate) type Visitor<'a> = &'a mut dyn FnMut(&[Point]) -> ControlFlow<()>;

/// Largest set accepted by brute-force counting.
pub const BRUTE_LIMIT: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    Fast,
    Brute,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Fast => "fast",
            CountMethod::Brute => "brute",
        })
    }
}

impl FromStr for CountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(CountMethod::Fast),
            "brute" => Ok(CountMethod::Brute),
            other => Err(Error::InvalidArgument(format!("unknown count method `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountReport {
    pub class: ConfigClass,
    pub count: u64,
    pub method: CountMethod,
    pub elapsed: Duration,
}

/// Outcome of a freeness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeCheck {
    pub free: bool,
    pub witness: Option<Witness>,
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn check_class(class: ConfigClass) -> Result<()> {
    match class {
        ConfigClass::Collinear { k } if k != 3 && k != 4 => Err(Error::InvalidArgument(format!(
            "collinear tuples must have 3 or 4 points, got {k}"
        ))),
        _ => Ok(()),
    }
}

/// Fast enumeration of every configuration of `class` in `ps`, each reported
/// once, in a deterministic order. Stops when `f` breaks.
pub fn for_each_config(ps: &PointSet, class: ConfigClass, mut f: impl FnMut(&[Point]) -> ControlFlow<()>) {
    let f: Visitor<'_> = &mut f;
    let _ = match class {
        ConfigClass::Collinear { k } => lines::visit_collinear(ps, k as usize, f),
        ConfigClass::Parallelogram { allow_degenerate } => pairs::visit_parallelograms(ps, allow_degenerate, f),
        ConfigClass::Rhombus => pairs::visit_rhombuses(ps, f),
        ConfigClass::AxisKite { allow_flat } => axis::visit_axis_kites(ps, allow_flat, f),
        ConfigClass::AxisSquare => axis::visit_axis_squares(ps, f),
        ConfigClass::Square => metric::visit_squares(ps, f),
        ConfigClass::AxisRectangle => axis::visit_axis_rectangles(ps, f),
        ConfigClass::IsoscelesTriangle { allow_flat } => metric::visit_isosceles(ps, allow_flat, f),
        ConfigClass::Corner => axis::visit_corners(ps, f),
        ConfigClass::IsoscelesRightTriangle => metric::visit_iso_right(ps, f),
        ConfigClass::Concyclic4 => metric::visit_concyclic(ps, f),
        ConfigClass::AxisIsoTrapezoid { include_equal_sides } => {
            axis::visit_axis_iso_trapezoids(ps, include_equal_sides, f)
        }
    };
}

/// Brute-force counterpart of [`for_each_config`], visiting subsets in
/// lexicographic order.
pub fn for_each_config_brute(ps: &PointSet, class: ConfigClass, mut f: impl FnMut(&[Point]) -> ControlFlow<()>) {
    let _ = brute::visit(ps, class, &mut f);
}

/// All configurations as witnesses, in enumeration order.
pub fn witnesses(ps: &PointSet, class: ConfigClass) -> Vec<Witness> {
    let mut out = Vec::new();
    for_each_config(ps, class, |t| {
        out.push(Witness::new(class, t));
        ControlFlow::Continue(())
    });
    out
}

/// The first configuration in enumeration order, if any.
pub fn find_any(ps: &PointSet, class: ConfigClass) -> Option<Witness> {
    let mut found = None;
    for_each_config(ps, class, |t| {
        found = Some(Witness::new(class, t));
        ControlFlow::Break(())
    });
    found
}

pub fn verify_free(ps: &PointSet, class: ConfigClass) -> FreeCheck {
    let witness = find_any(ps, class);
    FreeCheck {
        free: witness.is_none(),
        witness,
    }
}

fn count_fast(ps: &PointSet, class: ConfigClass) -> Result<u64> {
    let count = match class {
        ConfigClass::Collinear { k } => lines::count_collinear(ps, k as usize),
        ConfigClass::Parallelogram { allow_degenerate } => pairs::count_parallelograms(ps, allow_degenerate),
        ConfigClass::Rhombus => pairs::count_rhombuses(ps),
        ConfigClass::AxisKite { allow_flat } => axis::count_axis_kites(ps, allow_flat),
        ConfigClass::AxisSquare => axis::count_axis_squares(ps),
        ConfigClass::Square => metric::count_squares(ps),
        ConfigClass::AxisRectangle => axis::count_axis_rectangles(ps),
        ConfigClass::IsoscelesTriangle { allow_flat } => metric::count_isosceles(ps, allow_flat),
        ConfigClass::Corner => axis::count_corners(ps),
        ConfigClass::IsoscelesRightTriangle => metric::count_iso_right(ps),
        ConfigClass::Concyclic4 => {
            if ps.len() > CONCYCLIC_FAST_LIMIT {
                return Err(Error::GuardExceeded {
                    what: "concyclic counting".into(),
                    size: ps.len(),
                    limit: CONCYCLIC_FAST_LIMIT,
                });
            }
            metric::count_concyclic(ps)
        }
        ConfigClass::AxisIsoTrapezoid { include_equal_sides } => {
            axis::count_axis_iso_trapezoids(ps, include_equal_sides)
        }
    };
    Ok(count)
}

/// Exact number of unordered subsets of `ps` forming a `class` configuration.
pub fn count_all(ps: &PointSet, class: ConfigClass, method: CountMethod) -> Result<CountReport> {
    check_class(class)?;
    let start = Instant::now();
    let count = match method {
        CountMethod::Fast => count_fast(ps, class)?,
        CountMethod::Brute => {
            if ps.len() > BRUTE_LIMIT {
                return Err(Error::BruteGuardExceeded {
                    size: ps.len(),
                    limit: BRUTE_LIMIT,
                });
            }
            brute::count(ps, class)
        }
    };
    Ok(CountReport {
        class,
        count,
        method,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;

    fn set(raw: &[(i64, i64)]) -> PointSet {
        raw.iter().map(|&p| Point::from(p)).collect()
    }

    #[test]
    fn gcd_and_binomial() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(gcd(17, 5), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(60, 4), 487_635);
    }

    #[test]
    fn l_shape_has_no_nondegenerate_parallelogram() {
        let n = 4;
        let l: PointSet = (1..=n).map(|x| Point::new(x, 1)).chain((1..=n).map(|y| Point::new(1, y))).collect();
        assert!(find_any(&l, ConfigClass::ND_PARALLELOGRAM).is_none());
        assert!(find_any(&l, ConfigClass::PARALLELOGRAM).is_some());
    }

    #[test]
    fn unit_grid_axis_square() {
        let g = GridSpec::new(2).unwrap().full();
        let w = find_any(&g, ConfigClass::AxisSquare).unwrap();
        assert_eq!(w.points, set(&[(1, 1), (1, 2), (2, 1), (2, 2)]).points());
        let check = verify_free(&g, ConfigClass::AxisSquare);
        assert!(!check.free);
        assert_eq!(check.witness, Some(w));
    }

    #[test]
    fn single_rhombus_found() {
        let ps = set(&[(0, 0), (5, 0), (8, 4), (3, 4)]);
        let w = find_any(&ps, ConfigClass::Rhombus).unwrap();
        assert_eq!(w.points, ps.points());
        assert!(verify_free(&set(&[(0, 0), (2, 0), (3, 1), (1, 1)]), ConfigClass::Rhombus).free);
    }

    #[test]
    fn count_examples() {
        let g = GridSpec::new(2).unwrap().full();
        for method in [CountMethod::Fast, CountMethod::Brute] {
            assert_eq!(count_all(&g, ConfigClass::PARALLELOGRAM, method).unwrap().count, 1);
        }
        let tri = set(&[(0, 0), (2, 0), (1, 5)]);
        assert_eq!(count_all(&tri, ConfigClass::ISOSCELES, CountMethod::Fast).unwrap().count, 1);
    }

    #[test]
    fn sidon_strip_rhombus_counts_agree() {
        let ps: PointSet = (1..=8)
            .flat_map(|x| [1, 2, 5, 7].map(|y| Point::new(x, y)))
            .collect();
        let fast = count_all(&ps, ConfigClass::Rhombus, CountMethod::Fast).unwrap().count;
        let brute = count_all(&ps, ConfigClass::Rhombus, CountMethod::Brute).unwrap().count;
        assert_eq!(fast, brute);
        assert!(fast > 0);
    }

    #[test]
    fn guards() {
        let big = GridSpec::new(45).unwrap().full();
        assert!(matches!(
            count_all(&big, ConfigClass::Rhombus, CountMethod::Brute),
            Err(Error::BruteGuardExceeded { size: 2025, limit: 2000 })
        ));
        let mid = GridSpec::new(18).unwrap().full();
        assert!(matches!(
            count_all(&mid, ConfigClass::Concyclic4, CountMethod::Fast),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(count_all(&mid, ConfigClass::Collinear { k: 5 }, CountMethod::Fast).is_err());
    }

    #[test]
    fn enumeration_matches_count_on_grid() {
        let g = GridSpec::new(5).unwrap().full();
        for class in ConfigClass::ALL {
            let counted = count_all(&g, class, CountMethod::Fast).unwrap().count;
            let listed = witnesses(&g, class);
            assert_eq!(listed.len() as u64, counted, "{class}");
            let mut uniq = listed.clone();
            uniq.sort_by(|a, b| a.points.cmp(&b.points));
            uniq.dedup();
            assert_eq!(uniq.len(), listed.len(), "{class} duplicates");
            assert!(listed.iter().all(|w| crate::predicates::holds(class, &w.points)), "{class}");
        }
    }
}
