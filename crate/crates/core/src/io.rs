//! Point-set text files and SVG rendering.
//!
//! A point file holds one point per line as `x y` (decimal, one space).
//! Lines starting with `#` and blank lines are skipped when reading; writing
//! emits the points in canonical order with nothing else.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grid::{Point, PointSet};

pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut points = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse = |field: Option<&str>| -> Result<i64> {
            let field = field.ok_or_else(|| Error::Parse {
                line: k + 1,
                message: format!("expected two integers, got `{line}`"),
            })?;
            field.parse().map_err(|_| Error::Parse {
                line: k + 1,
                message: format!("`{field}` is not an integer"),
            })
        };
        let mut fields = line.split_whitespace();
        let (x, y) = (parse(fields.next())?, parse(fields.next())?);
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: k + 1,
                message: format!("expected two integers, got `{line}`"),
            });
        }
        points.push(Point::new(x, y));
    }
    Ok(PointSet::new(points))
}

pub fn format_points(ps: &PointSet) -> String {
    let mut out = String::with_capacity(ps.len() * 8);
    for p in ps.iter() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

/// Pixels between neighbouring grid lines.
const CELL: i64 = 12;

/// One circle per point over the grid lines of the bounding box. `side`
/// fixes the box to `[1, side]^2` instead.
pub fn render_svg(ps: &PointSet, side: Option<u32>) -> String {
    let (lo_x, lo_y, hi_x, hi_y) = match side {
        Some(n) => (1, 1, n as i64, n as i64),
        None => {
            let pts = ps.points();
            let xs = || pts.iter().map(|p| p.x);
            let ys = || pts.iter().map(|p| p.y);
            (
                xs().min().unwrap_or(1),
                ys().min().unwrap_or(1),
                xs().max().unwrap_or(1),
                ys().max().unwrap_or(1),
            )
        }
    };
    let (w, h) = ((hi_x - lo_x + 2) * CELL, (hi_y - lo_y + 2) * CELL);
    let px = |x: i64| (x - lo_x + 1) * CELL;
    // y grows upwards in the grid and downwards in SVG
    let py = |y: i64| (hi_y - y + 1) * CELL;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(out, r##"<g stroke="#cccccc" stroke-width="1">"##);
    for x in lo_x..=hi_x {
        let _ = writeln!(out, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(x), py(hi_y), py(lo_y));
    }
    for y in lo_y..=hi_y {
        let _ = writeln!(out, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, py(y), px(lo_x), px(hi_x));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="black">"#);
    for p in ps.iter() {
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, px(p.x), py(p.y), CELL / 3);
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "1 1\n1 2\n3 1\n";
        let ps = parse_points(text).unwrap();
        assert_eq!(format_points(&ps), text);
        let messy = "# header\n\n3 1\n 1 2 \n1 1\n1 1\n";
        assert_eq!(format_points(&parse_points(messy).unwrap()), text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_points("1 1\n3 x\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_points("5\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_points("# c\n1 2 3\n"), Err(Error::Parse { line: 2, .. })));
        let e = parse_points("\n\n3 x").unwrap_err();
        assert!(e.to_string().contains("parse error line 3"));
    }

    #[test]
    fn svg_has_one_circle_per_point() {
        let ps = parse_points("1 1\n2 3\n4 4\n").unwrap();
        let svg = render_svg(&ps, None);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<line").count(), 8);
        assert_eq!(render_svg(&ps, Some(5)).matches("<line").count(), 10);
        assert_eq!(render_svg(&PointSet::empty(), None).matches("<circle").count(), 0);
    }
}
