//! Generally 3-stable triangles: corners anywhere on the boundary, each
//! farthest from the opposite side.
//!
//! A unit-pair sweep ([`generalized_rotate_and_kill`]) visits every pair of
//! vertices or of edges that can carry two corners of such a triangle. The
//! final step tries the few units that can carry the third corner and builds
//! each candidate in constant time with [`gadget_g3stable`].

mod enumerate;
mod gadget;
mod sweep;

use num_rational::BigRational;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::exact_geom::{triangle_area, Point};
use crate::polygon::{Polygon, Unit};
use crate::scalar::Scalar;
use crate::three_stable::VertexTriangle;

pub use enumerate::{enumerate_g3stable, enumerate_g3stable_detailed, GEnumeration};
pub use gadget::{gadget_g3stable, Mode};
pub use sweep::{collect_visit_pairs, generalized_rotate_and_kill, VisitRecord};

pub type Corner = (Unit, Point<BigRational>);

/// Three boundary corners in clockwise order, each tagged with the unit
/// carrying it, rotated so the corner on the earliest unit comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GTriangle {
    corners: [Corner; 3],
}

impl GTriangle {
    /// `corners` must be clockwise.
    pub fn new(corners: [Corner; 3]) -> Self {
        let m = (0..3).min_by_key(|&i| corners[i].0.position()).unwrap_or(0);
        let mut corners = corners;
        corners.rotate_left(m);
        GTriangle { corners }
    }

    pub fn corners(&self) -> &[Corner; 3] {
        &self.corners
    }

    pub fn units(&self) -> [Unit; 3] {
        [0, 1, 2].map(|i| self.corners[i].0)
    }

    pub fn points(&self) -> [&Point<BigRational>; 3] {
        [0, 1, 2].map(|i| &self.corners[i].1)
    }

    pub fn area(&self) -> BigRational {
        let [a, b, c] = self.points();
        triangle_area(a, b, c)
    }

    pub fn vertex_corners(&self) -> usize {
        self.units().iter().filter(|u| u.is_vertex()).count()
    }

    /// The vertex triangle, when every corner is on a vertex.
    pub fn as_vertex_triangle(&self, n: usize) -> Option<VertexTriangle> {
        match self.units() {
            [Unit::Vertex(a), Unit::Vertex(b), Unit::Vertex(c)] => Some(VertexTriangle::new(a, b, c, n)),
            _ => None,
        }
    }

    /// Clockwise boundary positions usable with [`crate::interleave`]: the
    /// unit position, then the offset along an edge.
    pub fn boundary_keys<T: Scalar>(&self, poly: &Polygon<T>) -> [(usize, BigRational); 3] {
        [0, 1, 2].map(|i| {
            let (u, p) = &self.corners[i];
            let offset = match *u {
                Unit::Vertex(_) => BigRational::from_integer(0.into()),
                Unit::Edge(e) => {
                    let a = poly.vertex(e).to_rational();
                    let b = poly.vertex(e + 1).to_rational();
                    (&p.x - &a.x) * (&b.x - &a.x) + (&p.y - &a.y) * (&b.y - &a.y)
                }
            };
            (u.position(), offset)
        })
    }

    /// The same triangle with units named by the caller's input numbering.
    pub fn to_input<T>(&self, poly: &Polygon<T>) -> GTriangle {
        let mut corners = self.corners.clone();
        for c in &mut corners {
            c.0 = poly.input_unit(c.0);
        }
        if poly.was_reversed() {
            corners.reverse();
        }
        GTriangle::new(corners)
    }
}

struct CornerJson<'a>(&'a Corner);

impl Serialize for CornerJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Corner", 2)?;
        st.serialize_field("unit", &self.0 .0)?;
        st.serialize_field("point", &[self.0 .1.x.to_string(), self.0 .1.y.to_string()])?;
        st.end()
    }
}

impl Serialize for GTriangle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let corners: Vec<CornerJson<'_>> = self.corners.iter().map(CornerJson).collect();
        let mut st = s.serialize_struct("GTriangle", 2)?;
        st.serialize_field("corners", &corners)?;
        st.serialize_field("area", &self.area().to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counters::Counters;
    use crate::polygon::parse_polygon;

    #[test]
    fn json_shape() {
        let t: Polygon<i64> = parse_polygon("0 0\n1 3\n3 0\n").unwrap();
        let all = enumerate_g3stable(&t).unwrap();
        let first = all.iter().next().unwrap();
        let json = serde_json::to_string(first).unwrap();
        assert_eq!(
            json,
            r#"{"corners":[{"unit":{"kind":"vertex","index":0},"point":["0","0"]},{"unit":{"kind":"vertex","index":1},"point":["1","3"]},{"unit":{"kind":"vertex","index":2},"point":["3","0"]}],"area":"9/2"}"#
        );
    }

    #[test]
    fn triangle_sweep_ends_at_seed_edge() {
        let t: Polygon<i64> = parse_polygon("0 0\n1 3\n3 0\n").unwrap();
        let v = generalized_rotate_and_kill(&t, 0, 1, 2, &mut Counters::default()).unwrap();
        assert_eq!(v[0].pair.first(), Unit::Vertex(1));
        assert_eq!(v[0].pair.second(), Unit::Vertex(2));
        let end = v.last().unwrap();
        assert_eq!((end.pair.first(), end.pair.second()), (Unit::Vertex(2), Unit::Vertex(0)));
        assert!(v.len() <= 2 * (2 + 2) + 1);
        for r in &v {
            if let (Unit::Vertex(j), Unit::Vertex(k)) = (r.pair.first(), r.pair.second()) {
                assert_eq!((r.a_first, r.a_last), (3 - j - k, 3 - j - k));
            }
        }
    }

    #[test]
    fn square_contains_vertex_triangles() {
        let sq: Polygon<i64> = parse_polygon("0 0\n0 1\n1 1\n1 0\n").unwrap();
        let all = enumerate_g3stable(&sq).unwrap();
        let vvv: Vec<_> = all.iter().filter_map(|t| t.as_vertex_triangle(4)).collect();
        assert_eq!(vvv.len(), 4);
    }
}
