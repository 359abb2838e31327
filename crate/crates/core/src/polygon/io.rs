//! Plain-text polygon files: one `x y` pair per line, `#` comments.

use std::fmt::Write as _;

use num_rational::BigRational;

use super::Polygon;
use crate::error::{Error, Result};
use crate::exact_geom::Point;
use crate::scalar::{parse_rational, Scalar};

/// Parses the vertex list without validating it.
pub fn parse_points(text: &str) -> Result<Vec<Point<BigRational>>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split_once('#').map_or(raw, |(b, _)| b).trim();
        if body.is_empty() {
            continue;
        }
        let mut tokens = body.split_whitespace();
        let (Some(x), Some(y), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::Parse { line, message: "expected two coordinates".into() });
        };
        let coord = |t: &str| {
            parse_rational(t).ok_or_else(|| Error::Parse {
                line,
                message: format!("bad coordinate {t:?}"),
            })
        };
        out.push(Point::new(coord(x)?, coord(y)?));
    }
    Ok(out)
}

/// Parses and validates a polygon in scalar type `T`.
pub fn parse_polygon<T: Scalar>(text: &str) -> Result<Polygon<T>> {
    let raw = parse_points(text)?
        .iter()
        .map(|p| Point::try_from_rational(p).ok_or_else(|| Error::Unrepresentable(p.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Polygon::validate(raw)
}

/// Canonical clockwise text form. `parse_polygon(emit_polygon(p)) == p` up to
/// the reversal flag.
pub fn emit_polygon<T: Scalar>(poly: &Polygon<T>) -> String {
    let mut out = String::with_capacity(poly.len() * 16);
    for p in poly.vertices() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn parse_examples() {
        let sq: Polygon<i64> = parse_polygon("0 0\n0 1\n1 1\n1 0\n").unwrap();
        assert_eq!(sq.len(), 4);
        assert!(!sq.was_reversed());

        let diamond: Polygon<Rational64> =
            parse_polygon("1/2 0\n0 1/2\n-1/2 0\n0 -1/2\n").unwrap();
        assert!(diamond.was_reversed());
        assert_eq!(diamond.vertex(1), &Point::new(Rational64::new(0, 1), Rational64::new(-1, 2)));

        assert_eq!(parse_polygon::<i64>("0 0\n0 1\n"), Err(Error::TooFewVertices(2)));
    }

    #[test]
    fn comments_blank_lines_and_errors() {
        let text = "# square\n\n0 0   # origin\n0 1\n\n1 1\n1 0\n";
        assert_eq!(parse_points(text).unwrap().len(), 4);
        assert!(matches!(parse_points("0 0\n1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_points("0 0 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_points("0 x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_polygon::<i64>("1/2 0\n0 1\n1 1\n"),
            Err(Error::Unrepresentable(_))
        ));
    }

    #[test]
    fn emit_round_trips() {
        let p: Polygon<BigRational> = parse_polygon("1/2 0\n0 1/2\n-1/2 0\n0 -1/3\n").unwrap();
        let text = emit_polygon(&p);
        assert_eq!(text.lines().next(), Some("1/2 0"));
        let q: Polygon<BigRational> = parse_polygon(&text).unwrap();
        assert_eq!(q.vertices(), p.vertices());
        assert!(!q.was_reversed());
    }
}
