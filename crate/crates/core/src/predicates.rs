//! Exact tuple-level tests. Every predicate takes an unordered tuple and
//! searches over labelings internally; no floating point is involved.

use crate::grid::{ConfigClass, Point};

/// The three ways to split four points into two pairs.
const SPLITS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];

fn distinct(pts: &[Point]) -> bool {
    (0..pts.len()).all(|i| (i + 1..pts.len()).all(|j| pts[i] != pts[j]))
}

pub fn is_collinear(a: Point, b: Point, c: Point) -> bool {
    (b - a).cross(c - a) == 0
}

fn any_three_collinear(p: &[Point; 4]) -> bool {
    is_collinear(p[0], p[1], p[2])
        || is_collinear(p[0], p[1], p[3])
        || is_collinear(p[0], p[2], p[3])
        || is_collinear(p[1], p[2], p[3])
}

fn all_collinear(p: &[Point]) -> bool {
    p[2..].iter().all(|&q| is_collinear(p[0], p[1], q))
}

/// Splits of `p` into diagonal pairs `{p, r}`, `{q, s}` sharing a midpoint.
fn midpoint_splits(p: &[Point; 4]) -> impl Iterator<Item = [Point; 4]> + '_ {
    SPLITS.iter().filter_map(move |s| {
        let (a, c, b, d) = (p[s[0]], p[s[1]], p[s[2]], p[s[3]]);
        (a + c == b + d).then_some([a, c, b, d])
    })
}

pub fn is_parallelogram(a: Point, b: Point, c: Point, d: Point, allow_degenerate: bool) -> bool {
    let p = [a, b, c, d];
    if !distinct(&p) || midpoint_splits(&p).next().is_none() {
        return false;
    }
    allow_degenerate || !any_three_collinear(&p)
}

/// Four equal sides, i.e. a parallelogram with perpendicular diagonals.
/// Squares count.
pub fn is_rhombus(a: Point, b: Point, c: Point, d: Point) -> bool {
    let p = [a, b, c, d];
    distinct(&p)
        && midpoint_splits(&p).any(|[p, r, q, s]| (r - p).dot(s - q) == 0)
}

pub fn is_square(a: Point, b: Point, c: Point, d: Point) -> bool {
    let p = [a, b, c, d];
    distinct(&p)
        && midpoint_splits(&p)
            .any(|[p, r, q, s]| (r - p).dot(s - q) == 0 && (r - p).norm2() == (s - q).norm2())
}

pub fn is_axis_square(a: Point, b: Point, c: Point, d: Point) -> bool {
    is_axis_rectangle(a, b, c, d) && {
        let xs = minmax([a.x, b.x, c.x, d.x]);
        let ys = minmax([a.y, b.y, c.y, d.y]);
        xs.1 - xs.0 == ys.1 - ys.0
    }
}

fn minmax(v: [i64; 4]) -> (i64, i64) {
    let lo = v.iter().copied().min().unwrap();
    let hi = v.iter().copied().max().unwrap();
    (lo, hi)
}

pub fn is_axis_rectangle(a: Point, b: Point, c: Point, d: Point) -> bool {
    let p = [a, b, c, d];
    if !distinct(&p) {
        return false;
    }
    let (x1, x2) = minmax([a.x, b.x, c.x, d.x]);
    let (y1, y2) = minmax([a.y, b.y, c.y, d.y]);
    if x1 == x2 || y1 == y2 {
        return false;
    }
    // four distinct points drawn from the four corners must be all of them
    p.iter()
        .all(|q| (q.x == x1 || q.x == x2) && (q.y == y1 || q.y == y2))
}

/// Kite symmetric across a vertical line through two of its points.
fn is_vertical_axis_kite(p: &[Point; 4], allow_flat: bool) -> bool {
    for (i, j) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        if p[i].x != p[j].x {
            continue;
        }
        let rest: Vec<Point> = (0..4).filter(|&k| k != i && k != j).map(|k| p[k]).collect();
        let (b, d) = (rest[0], rest[1]);
        let x0 = p[i].x;
        if b.y == d.y && b.x + d.x == 2 * x0 && b.x != x0 {
            if !allow_flat && (b.y == p[i].y || b.y == p[j].y) {
                return false;
            }
            return true;
        }
    }
    false
}

pub fn is_axis_kite(a: Point, b: Point, c: Point, d: Point, allow_flat: bool) -> bool {
    let p = [a, b, c, d];
    if !distinct(&p) {
        return false;
    }
    let t = p.map(Point::transpose);
    is_vertical_axis_kite(&p, allow_flat) || is_vertical_axis_kite(&t, allow_flat)
}

pub fn is_isosceles(a: Point, b: Point, c: Point, allow_flat: bool) -> bool {
    if !distinct(&[a, b, c]) {
        return false;
    }
    let (ab, bc, ca) = (a.dist2(b), b.dist2(c), c.dist2(a));
    let iso = ab == bc || bc == ca || ca == ab;
    iso && (allow_flat || !is_collinear(a, b, c))
}

pub fn is_corner(a: Point, b: Point, c: Point) -> bool {
    let p = [a, b, c];
    if !distinct(&p) {
        return false;
    }
    (0..3).any(|i| {
        let apex = p[i];
        let u = p[(i + 1) % 3] - apex;
        let v = p[(i + 2) % 3] - apex;
        let is = |h: Point, w: Point| h.y == 0 && w.x == 0 && h.x == w.y && h.x != 0;
        is(u, v) || is(v, u)
    })
}

/// Right angle between two legs of equal length, any orientation.
pub fn is_iso_right(a: Point, b: Point, c: Point) -> bool {
    let p = [a, b, c];
    if !distinct(&p) {
        return false;
    }
    (0..3).any(|i| {
        let u = p[(i + 1) % 3] - p[i];
        let v = p[(i + 2) % 3] - p[i];
        u.dot(v) == 0 && u.norm2() == v.norm2()
    })
}

/// Vanishing of the determinant with rows `(x^2 + y^2, x, y, 1)`; collinear
/// quadruples count as concyclic.
pub fn is_concyclic4(a: Point, b: Point, c: Point, d: Point) -> bool {
    let p = [a, b, c, d];
    if !distinct(&p) {
        return false;
    }
    // Translate so `a` is the origin; the determinant reduces to 3x3.
    let rows: Vec<[i128; 3]> = p[1..]
        .iter()
        .map(|&q| {
            let v = q - a;
            [v.norm2() as i128, v.x as i128, v.y as i128]
        })
        .collect();
    det3(&rows) == 0
}

fn det3(m: &[[i128; 3]]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Horizontal bases `(x1,y1)-(x2,y1)` and `(x3,y2)-(x4,y2)` sharing a
/// perpendicular bisector.
fn is_horizontal_iso_trapezoid(p: &[Point; 4], include_equal_sides: bool) -> bool {
    midpoint_free_pairings(p).any(|([a, b], [c, d])| {
        a.y == b.y
            && c.y == d.y
            && a.y != c.y
            && a.x != b.x
            && c.x != d.x
            && a.x + b.x == c.x + d.x
            && (include_equal_sides || (a.x - b.x).abs() != (c.x - d.x).abs())
    })
}

fn midpoint_free_pairings(p: &[Point; 4]) -> impl Iterator<Item = ([Point; 2], [Point; 2])> + '_ {
    SPLITS
        .iter()
        .map(move |s| ([p[s[0]], p[s[1]]], [p[s[2]], p[s[3]]]))
}

pub fn is_axis_iso_trapezoid(a: Point, b: Point, c: Point, d: Point, include_equal_sides: bool) -> bool {
    let p = [a, b, c, d];
    if !distinct(&p) {
        return false;
    }
    let t = p.map(Point::transpose);
    is_horizontal_iso_trapezoid(&p, include_equal_sides)
        || is_horizontal_iso_trapezoid(&t, include_equal_sides)
}

/// Applies the predicate of `class` to a tuple of matching arity. Returns
/// false on arity mismatch.
pub fn holds(class: ConfigClass, pts: &[Point]) -> bool {
    if pts.len() != class.arity() {
        return false;
    }
    match (class, pts) {
        (ConfigClass::Collinear { .. }, _) => distinct(pts) && all_collinear(pts),
        (ConfigClass::IsoscelesTriangle { allow_flat }, &[a, b, c]) => is_isosceles(a, b, c, allow_flat),
        (ConfigClass::Corner, &[a, b, c]) => is_corner(a, b, c),
        (ConfigClass::IsoscelesRightTriangle, &[a, b, c]) => is_iso_right(a, b, c),
        (ConfigClass::Parallelogram { allow_degenerate }, &[a, b, c, d]) => {
            is_parallelogram(a, b, c, d, allow_degenerate)
        }
        (ConfigClass::Rhombus, &[a, b, c, d]) => is_rhombus(a, b, c, d),
        (ConfigClass::AxisKite { allow_flat }, &[a, b, c, d]) => is_axis_kite(a, b, c, d, allow_flat),
        (ConfigClass::AxisSquare, &[a, b, c, d]) => is_axis_square(a, b, c, d),
        (ConfigClass::Square, &[a, b, c, d]) => is_square(a, b, c, d),
        (ConfigClass::AxisRectangle, &[a, b, c, d]) => is_axis_rectangle(a, b, c, d),
        (ConfigClass::Concyclic4, &[a, b, c, d]) => is_concyclic4(a, b, c, d),
        (ConfigClass::AxisIsoTrapezoid { include_equal_sides }, &[a, b, c, d]) => {
            is_axis_iso_trapezoid(a, b, c, d, include_equal_sides)
        }
        _ => false,
    }
}
