//! Every predicate against a second definition written from scratch, on
//! random tuples from a small box so that hits are frequent.

use gridfree_core::predicates::holds;
use gridfree_core::{ConfigClass, Point};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn p(x: i64, y: i64) -> Point {
    Point::new(x, y)
}

fn distinct(pts: &[Point]) -> bool {
    let mut v = pts.to_vec();
    v.sort();
    v.dedup();
    v.len() == pts.len()
}

fn d2(a: Point, b: Point) -> i64 {
    (a.x - b.x).pow(2) + (a.y - b.y).pow(2)
}

/// Twice the signed area.
fn area2(a: Point, b: Point, c: Point) -> i64 {
    a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y)
}

fn permutations(pts: &[Point]) -> Vec<Vec<Point>> {
    if pts.len() <= 1 {
        return vec![pts.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..pts.len() {
        let mut rest = pts.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn sorted(pts: &[Point]) -> Vec<Point> {
    let mut v = pts.to_vec();
    v.sort();
    v
}

/// Image of `q` under reflection in the line `x = c / 2`, or `y = c / 2`
/// when `horizontal`.
fn reflect(q: Point, c: i64, horizontal: bool) -> Point {
    if horizontal {
        p(q.x, c - q.y)
    } else {
        p(c - q.x, q.y)
    }
}

/// Axes of mirror symmetry of `pts` parallel to a grid axis, with the number
/// of points fixed by each.
fn axis_symmetries(pts: &[Point]) -> Vec<(i64, bool, usize)> {
    let mut out = Vec::new();
    for horizontal in [false, true] {
        let coord = |q: &Point| if horizontal { q.y } else { q.x };
        let mut axes: Vec<i64> = Vec::new();
        for a in pts {
            for b in pts {
                axes.push(coord(a) + coord(b));
            }
        }
        axes.sort();
        axes.dedup();
        for c in axes {
            let image = sorted(&pts.iter().map(|&q| reflect(q, c, horizontal)).collect::<Vec<_>>());
            if image == sorted(pts) {
                let fixed = pts.iter().filter(|&&q| 2 * coord(&q) == c).count();
                out.push((c, horizontal, fixed));
            }
        }
    }
    out
}

fn oracle(class: ConfigClass, pts: &[Point]) -> bool {
    if !distinct(pts) {
        return false;
    }
    match class {
        ConfigClass::Collinear { .. } => pts[2..].iter().all(|&q| area2(pts[0], pts[1], q) == 0),
        ConfigClass::Parallelogram { allow_degenerate } => {
            let closes = permutations(pts).iter().any(|o| o[1] - o[0] == o[2] - o[3]);
            let flat = (0..4).any(|skip| {
                let t: Vec<Point> = (0..4).filter(|&k| k != skip).map(|k| pts[k]).collect();
                area2(t[0], t[1], t[2]) == 0
            });
            closes && (allow_degenerate || !flat)
        }
        ConfigClass::Rhombus => permutations(pts).iter().any(|o| {
            let s = d2(o[0], o[1]);
            d2(o[1], o[2]) == s && d2(o[2], o[3]) == s && d2(o[3], o[0]) == s
        }),
        ConfigClass::Square => permutations(pts).iter().any(|o| {
            let s = d2(o[0], o[1]);
            d2(o[1], o[2]) == s
                && d2(o[2], o[3]) == s
                && d2(o[3], o[0]) == s
                && d2(o[0], o[2]) == d2(o[1], o[3])
        }),
        ConfigClass::AxisRectangle | ConfigClass::AxisSquare => {
            let xs: Vec<i64> = pts.iter().map(|q| q.x).collect();
            let ys: Vec<i64> = pts.iter().map(|q| q.y).collect();
            let (x1, x2) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
            let (y1, y2) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
            let corners = sorted(&[p(x1, y1), p(x1, y2), p(x2, y1), p(x2, y2)]);
            let rect = x1 < x2 && y1 < y2 && corners == sorted(pts);
            rect && (class == ConfigClass::AxisRectangle || x2 - x1 == y2 - y1)
        }
        ConfigClass::AxisKite { allow_flat } => {
            axis_symmetries(pts).into_iter().any(|(c, horizontal, fixed)| {
                if fixed != 2 {
                    return false;
                }
                let coord = |q: Point| if horizontal { q.y } else { q.x };
                let off: Vec<Point> = pts.iter().copied().filter(|&q| 2 * coord(q) != c).collect();
                if c % 2 != 0 {
                    return true;
                }
                let mid = if horizontal {
                    p(off[0].x, (off[0].y + off[1].y) / 2)
                } else {
                    p((off[0].x + off[1].x) / 2, off[0].y)
                };
                allow_flat || !pts.contains(&mid)
            })
        }
        ConfigClass::IsoscelesTriangle { allow_flat } => {
            let (a, b, c) = (pts[0], pts[1], pts[2]);
            let apex = d2(a, b) == d2(a, c) || d2(b, a) == d2(b, c) || d2(c, a) == d2(c, b);
            apex && (allow_flat || area2(a, b, c) != 0)
        }
        ConfigClass::Corner => pts.iter().any(|&o| {
            pts.iter().any(|&q| {
                let d = q.x - o.x;
                d != 0 && sorted(pts) == sorted(&[o, p(o.x + d, o.y), p(o.x, o.y + d)])
            })
        }),
        ConfigClass::IsoscelesRightTriangle => {
            let mut s = [d2(pts[0], pts[1]), d2(pts[1], pts[2]), d2(pts[0], pts[2])];
            s.sort();
            s[0] == s[1] && s[0] + s[1] == s[2]
        }
        ConfigClass::Concyclic4 => concyclic(pts),
        ConfigClass::AxisIsoTrapezoid { include_equal_sides } => {
            axis_symmetries(pts).into_iter().any(|(c, horizontal, fixed)| {
                if fixed != 0 {
                    return false;
                }
                let across = |q: Point| if horizontal { q.x } else { q.y };
                let along = |q: Point| if horizontal { q.y } else { q.x };
                let a = pts[0];
                let b = reflect(a, c, horizontal);
                let rest: Vec<Point> = pts.iter().copied().filter(|&q| q != a && q != b).collect();
                let separate = across(a) != across(rest[0]);
                let widths = ((along(a) - along(b)).abs(), (along(rest[0]) - along(rest[1])).abs());
                separate && (include_equal_sides || widths.0 != widths.1)
            })
        }
    }
}

/// Circumcentre test in exact arithmetic; lines count as circles.
fn concyclic(pts: &[Point]) -> bool {
    let triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    if triples.iter().any(|t| area2(pts[t[0]], pts[t[1]], pts[t[2]]) == 0) {
        return pts[2..].iter().all(|&q| area2(pts[0], pts[1], q) == 0);
    }
    let (a, b, c, d) = (pts[0], pts[1], pts[2], pts[3]);
    let den = 2 * area2(a, b, c) as i128;
    let sq = |q: Point| (q.x * q.x + q.y * q.y) as i128;
    let ux = sq(a) * (b.y - c.y) as i128 + sq(b) * (c.y - a.y) as i128 + sq(c) * (a.y - b.y) as i128;
    let uy = sq(a) * (c.x - b.x) as i128 + sq(b) * (a.x - c.x) as i128 + sq(c) * (b.x - a.x) as i128;
    let r2 = |q: Point| (ux - q.x as i128 * den).pow(2) + (uy - q.y as i128 * den).pow(2);
    r2(a) == r2(d)
}

#[test]
fn predicates_agree_with_independent_definitions() {
    let mut rng = StdRng::seed_from_u64(20);
    let mut hits = vec![0usize; ConfigClass::ALL.len()];
    for _ in 0..10_000 {
        let side = rng.gen_range(2..=5);
        let pts: Vec<Point> = (0..4)
            .map(|_| p(rng.gen_range(0..side), rng.gen_range(0..side)))
            .collect();
        for (k, &class) in ConfigClass::ALL.iter().enumerate() {
            let mut tuple = pts[..class.arity()].to_vec();
            let want = oracle(class, &tuple);
            tuple.shuffle(&mut rng);
            assert_eq!(holds(class, &tuple), want, "{class} on {tuple:?}");
            hits[k] += want as usize;
        }
    }
    for (class, h) in ConfigClass::ALL.iter().zip(hits) {
        assert!(h > 0, "{class} never held; the sample is too thin");
    }
}

#[test]
fn hand_picked_cases() {
    let tri = [p(0, 0), p(2, 0), p(1, 5)];
    assert!(holds(ConfigClass::ISOSCELES, &tri));
    let flat = [p(0, 0), p(1, 0), p(2, 0)];
    assert!(holds(ConfigClass::ISOSCELES, &flat));
    assert!(!holds(ConfigClass::IsoscelesTriangle { allow_flat: false }, &flat));
    let tilted = [p(0, 0), p(2, 1), p(1, 3), p(-1, 2)];
    assert!(holds(ConfigClass::Square, &tilted));
    assert!(!holds(ConfigClass::AxisSquare, &tilted));
    let line = [p(0, 0), p(1, 1), p(2, 2), p(5, 5)];
    assert!(holds(ConfigClass::Concyclic4, &line));
    assert!(holds(ConfigClass::Collinear { k: 4 }, &line));
    let arrow = [p(0, 0), p(0, 2), p(-1, 1), p(1, 1)];
    assert!(holds(ConfigClass::AXIS_KITE, &arrow));
    let dart = [p(0, 0), p(0, 1), p(-1, 1), p(1, 1)];
    assert!(holds(ConfigClass::AXIS_KITE, &dart));
    assert!(!holds(ConfigClass::AxisKite { allow_flat: false }, &dart));
    assert!(!holds(ConfigClass::Rhombus, &[p(0, 0), p(0, 0), p(1, 1), p(1, 0)]));
    assert!(!holds(ConfigClass::Corner, &tri[..2]));
}
