//! Minimum-area enclosing triangles. A locally minimal enclosing triangle
//! touches the polygon at the midpoints of its sides, and those midpoints
//! form a generally 3-stable triangle; conversely every generally 3-stable
//! triangle `ABC` yields an enclosing triangle with side midpoints `A, B, C`.

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_geom::{on_segment, orientation, triangle_area, Point};
use crate::general_stable::{enumerate_g3stable, GTriangle};
use crate::polygon::{Polygon, Unit};
use crate::scalar::Scalar;

type Pt = Point<BigRational>;

/// The triangle whose side midpoints are `A, B, C`: `a = B + C - A` and so on.
pub fn anticomplementary(a: &Pt, b: &Pt, c: &Pt) -> Result<(Pt, Pt, Pt)> {
    if orientation(a, b, c) == 0 {
        return Err(Error::CollinearMidpoints);
    }
    let opp = |p: &Pt, q: &Pt, r: &Pt| Point::new(&q.x + &r.x - &p.x, &q.y + &r.y - &p.y);
    Ok((opp(a, b, c), opp(b, c, a), opp(c, a, b)))
}

/// Every vertex lies in the closed triangle `(a, b, c)`.
pub fn contains<T: Scalar>(poly: &Polygon<T>, a: &Pt, b: &Pt, c: &Pt) -> bool {
    let sign = orientation(a, b, c);
    if sign == 0 {
        return false;
    }
    poly.vertices().iter().all(|v| {
        let v = v.to_rational();
        [(a, b), (b, c), (c, a)].iter().all(|(p, q)| orientation(p, q, &v) * sign >= 0)
    })
}

/// `p` lies on the polygon boundary.
pub fn on_boundary<T: Scalar>(poly: &Polygon<T>, p: &Pt) -> bool {
    (0..poly.len()).any(|i| on_segment(&poly.vertex(i).to_rational(), &poly.vertex(i + 1).to_rational(), p))
}

/// An enclosing triangle with its generating inscribed triangle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EnclosingTriangle {
    pub a: Pt,
    pub b: Pt,
    pub c: Pt,
    pub area: BigRational,
    pub source: GTriangle,
}

impl EnclosingTriangle {
    /// Fails only for a degenerate source.
    pub fn from_source(source: GTriangle) -> Result<Self> {
        let [pa, pb, pc] = source.points();
        let (a, b, c) = anticomplementary(pa, pb, pc)?;
        let area = triangle_area(&a, &b, &c);
        Ok(EnclosingTriangle { a, b, c, area, source })
    }

    /// The same triangle with the source's units in input numbering.
    pub fn to_input<T>(&self, poly: &Polygon<T>) -> EnclosingTriangle {
        EnclosingTriangle { source: self.source.to_input(poly), ..self.clone() }
    }
}

impl Serialize for EnclosingTriangle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pair = |p: &Pt| [p.x.to_string(), p.y.to_string()];
        let mut st = s.serialize_struct("EnclosingTriangle", 5)?;
        st.serialize_field("a", &pair(&self.a))?;
        st.serialize_field("b", &pair(&self.b))?;
        st.serialize_field("c", &pair(&self.c))?;
        st.serialize_field("area", &self.area.to_string())?;
        st.serialize_field("source", &self.source)?;
        st.end()
    }
}

/// Each side of the anticomplementary triangle runs through a corner of the
/// source parallel to the opposite side. It supports the polygon when no
/// neighbour of the corner's unit rises above it, which by convexity is a
/// constant-time test.
fn supports<T: Scalar>(poly: &Polygon<T>, source: &GTriangle) -> bool {
    let n = poly.len();
    let pts = source.points();
    (0..3).all(|q| {
        let (x, b, c) = (pts[q], pts[(q + 1) % 3], pts[(q + 2) % 3]);
        let h = |p: &Pt| -((&c.x - &b.x) * (&p.y - &b.y) - (&c.y - &b.y) * (&p.x - &b.x));
        let hx = h(x);
        let (before, after) = match source.units()[q] {
            Unit::Vertex(i) => (i + n - 1, i + 1),
            Unit::Edge(i) => (i + n - 1, i + 2),
        };
        [before, after].iter().all(|&i| h(&poly.vertex(i).to_rational()) <= hx)
    })
}

/// Enclosing triangles built from every generally 3-stable triangle.
pub fn enclosing_candidates<T: Scalar>(poly: &Polygon<T>) -> Result<Vec<EnclosingTriangle>> {
    candidates_from(poly, &enumerate_g3stable(poly)?)
}

/// As [`enclosing_candidates`], from an enumeration already in hand.
pub fn candidates_from<T: Scalar>(poly: &Polygon<T>, g3: &BTreeSet<GTriangle>) -> Result<Vec<EnclosingTriangle>> {
    g3.iter()
        .filter(|t| supports(poly, t))
        .cloned()
        .map(EnclosingTriangle::from_source)
        .collect()
}

/// The minimum-area enclosing triangle and every candidate attaining it,
/// deduplicated by vertex coordinates.
pub fn min_enclosing_triangle<T: Scalar>(
    poly: &Polygon<T>,
) -> Result<(EnclosingTriangle, Vec<EnclosingTriangle>)> {
    minimum(enclosing_candidates(poly)?)
}

/// The least-area candidates, deduplicated by vertex coordinates.
pub fn minimum(candidates: Vec<EnclosingTriangle>) -> Result<(EnclosingTriangle, Vec<EnclosingTriangle>)> {
    let best = candidates.iter().map(|t| &t.area).min().cloned().ok_or(Error::NoCandidate)?;
    let mut seen = BTreeSet::new();
    let mut minima: Vec<EnclosingTriangle> = candidates
        .into_iter()
        .filter(|t| t.area == best)
        .filter(|t| {
            let mut key = [t.a.clone(), t.b.clone(), t.c.clone()];
            key.sort();
            seen.insert(key)
        })
        .collect();
    minima.sort();
    Ok((minima[0].clone(), minima))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::parse_polygon;

    fn p(x: i64, y: i64) -> Pt {
        Point::new(BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))
    }

    #[test]
    fn anticomplementary_examples() {
        assert_eq!(anticomplementary(&p(0, 0), &p(2, 0), &p(0, 2)).unwrap(), (p(2, 2), p(-2, 2), p(2, -2)));
        let (a, b, c) = anticomplementary(&p(0, 0), &p(1, 0), &p(0, 1)).unwrap();
        assert_eq!((a, b, c), (p(1, 1), p(-1, 1), p(1, -1)));
        assert_eq!(
            anticomplementary(&p(0, 0), &p(1, 1), &p(2, 2)),
            Err(Error::CollinearMidpoints)
        );
    }

    #[test]
    fn area_quadruples() {
        let (a, b, c) = (p(3, -1), p(7, 5), p(-2, 4));
        let (x, y, z) = anticomplementary(&a, &b, &c).unwrap();
        let four = BigRational::from_integer(4.into());
        assert_eq!(triangle_area(&x, &y, &z), triangle_area(&a, &b, &c) * four);
    }

    #[test]
    fn containment_examples() {
        let sq: Polygon<i64> = parse_polygon("0 0\n0 1\n1 1\n1 0\n").unwrap();
        assert!(contains(&sq, &p(-1, -1), &p(3, -1), &p(-1, 3)));
        assert!(!contains(&sq, &p(0, 0), &p(1, 0), &p(0, 1)));
        assert!(contains(&sq, &p(0, 0), &p(2, 0), &p(0, 2)));
        assert!(!contains(&sq, &p(0, 0), &p(1, 0), &p(0, 3) ));
    }

    #[test]
    fn square_and_triangle_minima() {
        let sq: Polygon<i64> = parse_polygon("0 0\n0 1\n1 1\n1 0\n").unwrap();
        let (best, all) = min_enclosing_triangle(&sq).unwrap();
        assert_eq!(best.area, BigRational::from_integer(2.into()));
        for t in &all {
            assert!(contains(&sq, &t.a, &t.b, &t.c));
        }
        let tri: Polygon<i64> = parse_polygon("0 0\n1 3\n3 0\n").unwrap();
        let (best, _) = min_enclosing_triangle(&tri).unwrap();
        assert_eq!(best.area, BigRational::new(9.into(), 2.into()));
    }
}
