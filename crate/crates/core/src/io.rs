//! Line-oriented text formats for point sets and colorings.
//!
//! Point set:
//!
//! ```text
//! points 3
//! 0 0
//! 1 5
//! 2 -1
//! ```
//!
//! Coloring (`coloring L Q N`, then one line per L-subset in lexicographic
//! order, vertices followed by the color):
//!
//! ```text
//! coloring 2 2 3
//! 0 1 0
//! 0 2 1
//! 1 2 0
//! ```
//!
//! `#` starts a comment in both formats.

use std::fmt::Write as _;

use crate::coloring::{binomial, Color, EdgeColoring, HyperColoring};
use crate::error::{ColoringError, ParseError};
use crate::geometry::{Coord, ExactPoint};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_num<N: std::str::FromStr>(line: usize, field: &str) -> Result<N, ParseError> {
    field
        .parse()
        .map_err(|_| syntax(line, format!("cannot parse {field:?} as an integer")))
}

pub fn parse_points<T: Coord>(text: &str) -> Result<Vec<ExactPoint<T>>, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| syntax(0, "missing header"))?;
    if header.len() != 2 || header[0] != "points" {
        return Err(syntax(line, "expected header \"points N\""));
    }
    let expected: usize = parse_num(line, header[1])?;
    let mut points = Vec::with_capacity(expected);
    for (line, fields) in lines {
        if fields.len() != 2 {
            return Err(syntax(line, "expected \"x y\""));
        }
        points.push(ExactPoint::new(
            parse_num(line, fields[0])?,
            parse_num(line, fields[1])?,
        ));
    }
    if points.len() != expected {
        return Err(ParseError::Count {
            expected,
            found: points.len(),
        });
    }
    Ok(points)
}

pub fn write_points<T: Coord>(points: &[ExactPoint<T>]) -> String {
    let mut out = format!("points {}\n", points.len());
    for p in points {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

/// Parses a coloring. Subsets may appear in any order but each must appear
/// exactly once.
pub fn parse_coloring(text: &str) -> Result<EdgeColoring, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| syntax(0, "missing header"))?;
    if header.len() != 4 || header[0] != "coloring" {
        return Err(syntax(line, "expected header \"coloring L Q N\""));
    }
    let arity: usize = parse_num(line, header[1])?;
    let colors: u32 = parse_num(line, header[2])?;
    let vertices: usize = parse_num(line, header[3])?;
    let mut coloring = EdgeColoring::uniform(arity, colors, vertices, 0)?;
    let expected = binomial(vertices as u128, arity as u128) as usize;
    let mut seen = std::collections::HashSet::with_capacity(expected);
    for (line, fields) in lines {
        if fields.len() != arity + 1 {
            return Err(syntax(line, format!("expected {} vertices and a color", arity)));
        }
        let subset = fields[..arity]
            .iter()
            .map(|f| parse_num::<usize>(line, f))
            .collect::<Result<Vec<_>, _>>()?;
        let color: Color = parse_num(line, fields[arity])?;
        coloring.set(&subset, color).map_err(|e| syntax(line, e.to_string()))?;
        if !seen.insert(subset.clone()) {
            return Err(syntax(line, format!("subset {subset:?} listed twice")));
        }
    }
    if seen.len() != expected {
        return Err(ColoringError::NotTotal {
            expected,
            got: seen.len(),
        }
        .into());
    }
    Ok(coloring)
}

pub fn write_coloring(coloring: &EdgeColoring) -> String {
    let mut out = format!(
        "coloring {} {} {}\n",
        coloring.arity(),
        coloring.color_count(),
        coloring.vertex_count()
    );
    for (subset, color) in coloring.entries() {
        for v in subset {
            let _ = write!(out, "{v} ");
        }
        let _ = writeln!(out, "{color}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn points_with_comments() {
        let text = "# sample\npoints 2\n0 0 # origin\n\n123456789012345678901234567890 -7\n";
        let pts: Vec<ExactPoint<BigInt>> = parse_points(text).unwrap();
        assert_eq!(pts[1].x, "123456789012345678901234567890".parse::<BigInt>().unwrap());
        assert_eq!(write_points(&pts), "points 2\n0 0\n123456789012345678901234567890 -7\n");
    }

    #[test]
    fn points_errors() {
        assert!(matches!(
            parse_points::<i64>("points 3\n0 0\n"),
            Err(ParseError::Count { .. })
        ));
        assert!(matches!(
            parse_points::<i64>("pts 1\n0 0\n"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_points::<i64>("points 1\n0 x\n"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(parse_points::<i64>(""), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn coloring_round_trip() {
        let text = "coloring 2 2 3\n0 1 0\n0 2 1\n1 2 0\n";
        let c = parse_coloring(text).unwrap();
        assert_eq!(c.pair(0, 2), 1);
        assert_eq!(write_coloring(&c), text);
    }

    #[test]
    fn coloring_must_be_total() {
        let missing = "coloring 2 2 3\n0 1 0\n1 2 0\n";
        assert!(matches!(
            parse_coloring(missing),
            Err(ParseError::Coloring(ColoringError::NotTotal { expected: 3, got: 2 }))
        ));
        let dup = "coloring 2 2 3\n0 1 0\n0 1 1\n1 2 0\n";
        assert!(matches!(parse_coloring(dup), Err(ParseError::Syntax { line: 3, .. })));
        let bad_color = "coloring 2 2 2\n0 1 2\n";
        assert!(matches!(parse_coloring(bad_color), Err(ParseError::Syntax { .. })));
        let unordered = "coloring 2 2 2\n1 0 0\n";
        assert!(matches!(parse_coloring(unordered), Err(ParseError::Syntax { .. })));
    }
}
