//! Points, point sets and the configuration taxonomy shared by every module.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An integer lattice point. Ordering is lexicographic by `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Squared Euclidean norm of the point seen as a vector.
    #[inline]
    pub fn norm2(self) -> i64 {
        self.x * self.x + self.y * self.y
    }

    #[inline]
    pub fn dist2(self, other: Point) -> i64 {
        (self - other).norm2()
    }

    #[inline]
    pub fn dot(self, other: Point) -> i64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn cross(self, other: Point) -> i64 {
        self.x * other.y - self.y * other.x
    }

    /// Counter-clockwise quarter turn.
    #[inline]
    pub fn rot90(self) -> Point {
        Point::new(-self.y, self.x)
    }

    #[inline]
    pub fn transpose(self) -> Point {
        Point::new(self.y, self.x)
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The `n x n` grid `[1, n]^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    n: u32,
}

impl GridSpec {
    pub fn new(n: u32) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidArgument("grid side must be positive".into()));
        }
        Ok(GridSpec { n })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn contains(self, p: Point) -> bool {
        let n = self.n as i64;
        (1..=n).contains(&p.x) && (1..=n).contains(&p.y)
    }

    /// All grid points in canonical order.
    pub fn points(self) -> impl Iterator<Item = Point> {
        let n = self.n as i64;
        (1..=n).flat_map(move |x| (1..=n).map(move |y| Point::new(x, y)))
    }

    pub fn full(self) -> PointSet {
        PointSet::from_sorted_unique(self.points().collect(), Some(self))
    }
}

/// Largest bounding-box area for which membership uses a bitmap.
const DENSE_AREA_LIMIT: u64 = 1 << 26;

#[derive(Debug, Clone)]
enum Membership {
    Dense {
        min: Point,
        height: u64,
        bits: Vec<u64>,
    },
    Sparse(HashSet<Point>),
}

impl Membership {
    fn build(points: &[Point]) -> Self {
        if points.is_empty() {
            return Membership::Sparse(HashSet::new());
        }
        let (mut min_y, mut max_y) = (i64::MAX, i64::MIN);
        for p in points {
            min_y = min_y.min(p.y);
            max_y = max_y.max(p.y);
        }
        let min_x = points[0].x;
        let max_x = points[points.len() - 1].x;
        let width = (max_x as i128 - min_x as i128 + 1) as u128;
        let height = (max_y as i128 - min_y as i128 + 1) as u128;
        let area = width.saturating_mul(height);
        if area <= DENSE_AREA_LIMIT as u128 {
            let height = height as u64;
            let mut bits = vec![0u64; (area as usize).div_ceil(64)];
            for p in points {
                let idx = (p.x - min_x) as u64 * height + (p.y - min_y) as u64;
                bits[(idx / 64) as usize] |= 1 << (idx % 64);
            }
            Membership::Dense {
                min: Point::new(min_x, min_y),
                height,
                bits,
            }
        } else {
            Membership::Sparse(points.iter().copied().collect())
        }
    }

    #[inline]
    fn contains(&self, p: Point) -> bool {
        match self {
            Membership::Dense { min, height, bits } => {
                if p.x < min.x || p.y < min.y {
                    return false;
                }
                let dx = (p.x - min.x) as u64;
                let dy = (p.y - min.y) as u64;
                if dy >= *height {
                    return false;
                }
                let idx = dx.saturating_mul(*height).saturating_add(dy);
                bits.get((idx / 64) as usize)
                    .is_some_and(|w| w >> (idx % 64) & 1 == 1)
            }
            Membership::Sparse(set) => set.contains(&p),
        }
    }
}

/// A finite set of distinct points, stored in canonical (lexicographic)
/// order with constant-time membership. Serializes as its point list.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(from = "Vec<Point>", into = "Vec<Point>")]
pub struct PointSet {
    points: Vec<Point>,
    bound: Option<GridSpec>,
    membership: Membership,
}

impl From<Vec<Point>> for PointSet {
    fn from(points: Vec<Point>) -> Self {
        PointSet::new(points)
    }
}

impl From<PointSet> for Vec<Point> {
    fn from(ps: PointSet) -> Self {
        ps.points
    }
}

impl PointSet {
    /// Builds a set from arbitrary points; duplicates collapse.
    pub fn new(points: impl IntoIterator<Item = Point>) -> Self {
        let mut points: Vec<Point> = points.into_iter().collect();
        points.sort_unstable();
        points.dedup();
        Self::from_sorted_unique(points, None)
    }

    /// Builds a set that must lie inside `bound`.
    pub fn bounded(points: impl IntoIterator<Item = Point>, bound: GridSpec) -> Result<Self, Error> {
        let set = Self::new(points);
        if let Some(p) = set.points.iter().find(|p| !bound.contains(**p)) {
            return Err(Error::OutOfBounds { point: *p, n: bound.n() });
        }
        Ok(PointSet { bound: Some(bound), ..set })
    }

    pub(crate) fn from_sorted_unique(points: Vec<Point>, bound: Option<GridSpec>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        let membership = Membership::build(&points);
        PointSet {
            points,
            bound,
            membership,
        }
    }

    pub fn empty() -> Self {
        Self::from_sorted_unique(Vec::new(), None)
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        self.membership.contains(p)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in canonical order.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.points.iter().copied()
    }

    pub fn bound(&self) -> Option<GridSpec> {
        self.bound
    }

    pub fn with_bound(self, bound: GridSpec) -> Result<Self, Error> {
        PointSet::bounded(self.points, bound)
    }

    /// Position of `p` in canonical order.
    pub fn index_of(&self, p: Point) -> Option<usize> {
        self.points.binary_search(&p).ok()
    }

    /// Keeps the points for which `keep` returns true.
    pub fn filter(&self, mut keep: impl FnMut(Point) -> bool) -> PointSet {
        let points = self.points.iter().copied().filter(|p| keep(*p)).collect();
        Self::from_sorted_unique(points, self.bound)
    }

    /// Smallest `n` such that every point lies in `[1, n]^2`, if any.
    pub fn enclosing_side(&self) -> Option<u32> {
        let mut side = 1i64;
        for p in &self.points {
            if p.x < 1 || p.y < 1 {
                return None;
            }
            side = side.max(p.x).max(p.y);
        }
        u32::try_from(side).ok()
    }
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for PointSet {}

impl FromIterator<Point> for PointSet {
    fn from_iter<T: IntoIterator<Item = Point>>(iter: T) -> Self {
        PointSet::new(iter)
    }
}

/// Returns the points of `ps` sorted lexicographically by `(x, y)`.
pub fn canonical_order(ps: &PointSet) -> Vec<Point> {
    ps.points().to_vec()
}

/// The forbidden configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConfigClass {
    /// `k` points on a common line (`k` is 3 or 4).
    Collinear { k: u8 },
    /// Four distinct points with `p1 + p3 = p2 + p4`.
    Parallelogram { allow_degenerate: bool },
    Rhombus,
    /// Kite whose diagonals are horizontal and vertical.
    AxisKite { allow_flat: bool },
    AxisSquare,
    /// Square in any orientation.
    Square,
    AxisRectangle,
    IsoscelesTriangle { allow_flat: bool },
    /// `{(a, b), (a + d, b), (a, b + d)}` with `d != 0`.
    Corner,
    IsoscelesRightTriangle,
    /// Four points on a common circle or line.
    Concyclic4,
    /// Isosceles trapezoid with a horizontal or vertical pair of parallel sides.
    AxisIsoTrapezoid { include_equal_sides: bool },
}

impl ConfigClass {
    pub const PARALLELOGRAM: ConfigClass = ConfigClass::Parallelogram { allow_degenerate: true };
    pub const ND_PARALLELOGRAM: ConfigClass = ConfigClass::Parallelogram { allow_degenerate: false };
    pub const AXIS_KITE: ConfigClass = ConfigClass::AxisKite { allow_flat: true };
    pub const ISOSCELES: ConfigClass = ConfigClass::IsoscelesTriangle { allow_flat: true };
    pub const AXIS_ISO_TRAPEZOID: ConfigClass =
        ConfigClass::AxisIsoTrapezoid { include_equal_sides: false };

    /// Every class with every flag combination.
    pub const ALL: [ConfigClass; 17] = [
        ConfigClass::Collinear { k: 3 },
        ConfigClass::Collinear { k: 4 },
        ConfigClass::Parallelogram { allow_degenerate: true },
        ConfigClass::Parallelogram { allow_degenerate: false },
        ConfigClass::Rhombus,
        ConfigClass::AxisKite { allow_flat: true },
        ConfigClass::AxisKite { allow_flat: false },
        ConfigClass::AxisSquare,
        ConfigClass::Square,
        ConfigClass::AxisRectangle,
        ConfigClass::IsoscelesTriangle { allow_flat: true },
        ConfigClass::IsoscelesTriangle { allow_flat: false },
        ConfigClass::Corner,
        ConfigClass::IsoscelesRightTriangle,
        ConfigClass::Concyclic4,
        ConfigClass::AxisIsoTrapezoid { include_equal_sides: false },
        ConfigClass::AxisIsoTrapezoid { include_equal_sides: true },
    ];

    /// Number of points in one configuration.
    pub fn arity(self) -> usize {
        match self {
            ConfigClass::Collinear { k } => k as usize,
            ConfigClass::Corner
            | ConfigClass::IsoscelesTriangle { .. }
            | ConfigClass::IsoscelesRightTriangle => 3,
            _ => 4,
        }
    }

    /// The CLI label of this class.
    pub fn label(self) -> &'static str {
        match self {
            ConfigClass::Collinear { k: 3 } => "3-collinear",
            ConfigClass::Collinear { .. } => "4-collinear",
            ConfigClass::Parallelogram { allow_degenerate: true } => "parallelogram",
            ConfigClass::Parallelogram { allow_degenerate: false } => "nd-parallelogram",
            ConfigClass::Rhombus => "rhombus",
            ConfigClass::AxisKite { allow_flat: true } => "axis-kite",
            ConfigClass::AxisKite { allow_flat: false } => "axis-kite-nonflat",
            ConfigClass::AxisSquare => "axis-square",
            ConfigClass::Square => "square",
            ConfigClass::AxisRectangle => "axis-rectangle",
            ConfigClass::IsoscelesTriangle { allow_flat: true } => "isosceles",
            ConfigClass::IsoscelesTriangle { allow_flat: false } => "isosceles-nonflat",
            ConfigClass::Corner => "corner",
            ConfigClass::IsoscelesRightTriangle => "iso-right",
            ConfigClass::Concyclic4 => "concyclic",
            ConfigClass::AxisIsoTrapezoid { include_equal_sides: false } => "axis-iso-trapezoid",
            ConfigClass::AxisIsoTrapezoid { include_equal_sides: true } => {
                "axis-iso-trapezoid-with-rectangles"
            }
        }
    }
}

impl fmt::Display for ConfigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ConfigClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let class = match s {
            "3-collinear" | "collinear3" => ConfigClass::Collinear { k: 3 },
            "4-collinear" | "collinear4" => ConfigClass::Collinear { k: 4 },
            _ => match ConfigClass::ALL.iter().find(|c| c.label() == s) {
                Some(c) => *c,
                None => return Err(Error::UnknownClass(s.to_string())),
            },
        };
        Ok(class)
    }
}

/// A concrete configuration found in a point set. Points are stored in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub class: ConfigClass,
    pub points: Vec<Point>,
}

impl Witness {
    pub fn new(class: ConfigClass, points: &[Point]) -> Self {
        debug_assert_eq!(points.len(), class.arity());
        let mut points = points.to_vec();
        points.sort_unstable();
        Witness { class, points }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.class)?;
        for p in &self.points {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}
