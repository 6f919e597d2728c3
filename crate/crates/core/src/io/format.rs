//! Polytope files.
//!
//! Plain format: a header line `n k`, then `k` rows of `n` whitespace
//! separated scalars. `#` starts a comment that runs to the end of the line;
//! blank lines are ignored.
//!
//! ```text
//! # unit triangle
//! 2 3
//! 0 0
//! 1 0
//! 0 1/2
//! ```
//!
//! Structured format: a JSON object `{"dim": 2, "points": [["0", "1/2"], [1, 0]]}`
//! where each coordinate is an integer or a scalar string. Other keys are
//! ignored, so a structured sum report is itself a readable polytope file.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, ParseError, Result};
use crate::geometry::{Point, VPolytope};
use crate::scalar::Scalar;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError {
        line,
        message: message.into(),
    })
}

/// Parses either format; text whose first non-blank character is `{` is
/// read as structured.
pub fn parse_polytope(text: &str) -> Result<VPolytope> {
    if text.trim_start().starts_with('{') {
        parse_structured(text)
    } else {
        parse_plain(text)
    }
}

pub fn parse_plain(text: &str) -> Result<VPolytope> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line \"n k\""))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(
            header_line,
            format!("header must be \"n k\", found {header:?}"),
        ));
    }
    let dim: usize = fields[0]
        .parse()
        .map_err(|_| parse_err(header_line, format!("bad dimension {:?}", fields[0])))?;
    let count: usize = fields[1]
        .parse()
        .map_err(|_| parse_err(header_line, format!("bad point count {:?}", fields[1])))?;
    if dim == 0 {
        return Err(parse_err(header_line, "dimension must be positive"));
    }
    if count == 0 {
        return Err(parse_err(header_line, "point list is empty"));
    }

    let mut points = Vec::with_capacity(count);
    let mut lines_of = Vec::with_capacity(count);
    for (line, row) in lines.by_ref() {
        if points.len() == count {
            return Err(parse_err(line, format!("more rows than the {count} declared")));
        }
        let tokens: Vec<&str> = row.split_whitespace().collect();
        if tokens.len() != dim {
            return Err(parse_err(
                line,
                format!("expected {dim} coordinates, found {}", tokens.len()),
            ));
        }
        let coords = tokens
            .iter()
            .map(|t| t.parse::<Scalar>().map_err(|e| parse_err(line, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        points.push(Point::new(coords));
        lines_of.push(line);
    }
    if points.len() != count {
        let last = text.lines().count().max(1);
        return Err(parse_err(
            last,
            format!("expected {count} rows, found {}", points.len()),
        ));
    }
    build(dim, points, &lines_of)
}

#[derive(Deserialize)]
struct StructuredPolytope {
    dim: usize,
    points: Vec<Vec<Scalar>>,
}

pub fn parse_structured(text: &str) -> Result<VPolytope> {
    let raw: StructuredPolytope = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    if raw.dim == 0 {
        return Err(parse_err(1, "dimension must be positive"));
    }
    if raw.points.is_empty() {
        return Err(parse_err(1, "point list is empty"));
    }
    for (i, row) in raw.points.iter().enumerate() {
        if row.len() != raw.dim {
            return Err(parse_err(
                i + 1,
                format!(
                    "point row {} has {} coordinates, expected {}",
                    i + 1,
                    row.len(),
                    raw.dim
                ),
            ));
        }
    }
    let rows: Vec<usize> = (1..=raw.points.len()).collect();
    build(raw.dim, raw.points.into_iter().map(Point::new).collect(), &rows)
}

fn build(dim: usize, points: Vec<Point>, lines: &[usize]) -> Result<VPolytope> {
    let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if let Some(&first) = seen.get(p) {
            return Err(parse_err(
                lines[i],
                format!("duplicate point {p}, first given on line {}", lines[first]),
            ));
        }
        seen.insert(p, i);
    }
    VPolytope::new(dim, points)
}

/// Writes the plain format with canonical scalars.
pub fn write_plain(polytope: &VPolytope) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", polytope.dim(), polytope.len()).unwrap();
    for p in polytope.points() {
        write_row(&mut out, p);
    }
    out
}

pub(crate) fn write_row(out: &mut String, p: &Point) {
    for (i, c) in p.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{c}").unwrap();
    }
    out.push('\n');
}

/// Writes the structured format with canonical scalar strings, one point
/// per line.
pub fn write_structured(polytope: &VPolytope) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    write_structured_fields(&mut out, polytope.dim(), polytope.points());
    out.push_str("\n}\n");
    out
}

/// `"dim": n,` and `"points": [...]` without the enclosing braces or a
/// trailing newline.
pub(crate) fn write_structured_fields(out: &mut String, dim: usize, points: &[Point]) {
    writeln!(out, "  \"dim\": {dim},").unwrap();
    out.push_str("  \"points\": [");
    for (i, p) in points.iter().enumerate() {
        out.push_str(if i == 0 { "\n    " } else { ",\n    " });
        out.push_str(&serde_json::to_string(p).expect("point serialises"));
    }
    if !points.is_empty() {
        out.push_str("\n  ");
    }
    out.push(']');
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse(p) => p.line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn triangle() {
        let p = parse_polytope("2 3\n0 0\n1 0\n0 1").unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn decimal_tokens_are_exact() {
        let p = parse_polytope("1 2\n0.25\n-3/6\n").unwrap();
        assert_eq!(p.points()[0][0], Scalar::new(1, 4));
        assert_eq!(p.points()[1][0], Scalar::new(-1, 2));
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_polytope("# header follows\n\n2 2  # two points\n0 0\n# skip\n1 1 # trailing\n").unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(line_of(parse_polytope("1 2\n0\n0").unwrap_err()), 3);
        assert_eq!(line_of(parse_polytope("2 2\n0 0\n1 x\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_polytope("2 2\n0 0\n1\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_polytope("2 0\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_polytope("2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_polytope("2 1\n0 0\n1 1\n").unwrap_err()), 3);
        assert!(matches!(parse_polytope("2 3\n0 0\n1 1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_polytope(""), Err(Error::Parse(_))));
    }

    #[test]
    fn structured_input() {
        let p = parse_polytope(r#"{"dim": 2, "points": [["0", "1/2"], [1, 0]], "note": "ignored"}"#).unwrap();
        assert_eq!(p.points()[0][1], Scalar::new(1, 2));
        assert_eq!(
            line_of(parse_polytope(r#"{"dim": 1, "points": [[0], ["0/5"]]}"#).unwrap_err()),
            2
        );
        assert_eq!(
            line_of(parse_polytope(r#"{"dim": 2, "points": [[0, 1], [1]]}"#).unwrap_err()),
            2
        );
        assert!(matches!(
            parse_polytope(r#"{"dim": 2, "points": []}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_polytope(r#"{"dim": 2, "points": [["a", 1]]}"#),
            Err(Error::Parse(_))
        ));
    }

    fn arb_polytope() -> impl Strategy<Value = VPolytope> {
        (1usize..4).prop_flat_map(|dim| {
            proptest::collection::vec(proptest::collection::vec((-50i64..50, 1i64..9), dim), 1..8).prop_map(
                move |rows| {
                    let set: std::collections::BTreeSet<Point> = rows
                        .iter()
                        .map(|r| Point::new(r.iter().map(|&(p, q)| Scalar::new(p, q)).collect()))
                        .collect();
                    VPolytope::new(dim, set.into_iter().collect()).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn round_trips(p in arb_polytope()) {
            prop_assert_eq!(&parse_polytope(&write_plain(&p)).unwrap(), &p);
            prop_assert_eq!(&parse_polytope(&write_structured(&p)).unwrap(), &p);
        }
    }
}
