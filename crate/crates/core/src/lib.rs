//! Extremal triangles of convex polygons in linear time.
//!
//! For a strictly convex polygon this crate enumerates every 3-stable
//! inscribed triangle (all corners on vertices, each corner farthest from
//! the opposite side), from which the maximum-area inscribed triangle
//! follows; extends the enumeration to corners on open edges; and derives
//! the minimum-area enclosing triangle from the latter. All predicates are
//! exact.
//!
//! The algorithms are generic over [`Scalar`]. `i64` input runs on machine
//! integers with an overflow-checked fallback to big rationals; arbitrary
//! rationals use [`ExactPolygon`].

pub mod counters;
pub mod enclosing;
pub mod error;
pub mod exact_geom;
mod kernel;
pub mod general_stable;
pub mod interleave;
pub mod oracle;
pub mod polygon;
pub mod scalar;
pub mod three_stable;

pub use counters::Counters;
pub use enclosing::{anticomplementary, contains, min_enclosing_triangle, EnclosingTriangle};
pub use error::{Error, Result};
pub use exact_geom::{ExtendedPoint, Point};
pub use general_stable::{enumerate_g3stable, GTriangle};
pub use polygon::{emit_polygon, parse_polygon, random_convex, validate, Polygon, Unit, UnitPair};
pub use scalar::Scalar;
pub use three_stable::{enumerate_all_3stable, max_area_triangle, VertexTriangle};

/// Exact rational coordinate.
pub type Coord = num_rational::BigRational;
/// Polygon over arbitrary-precision rationals.
pub type ExactPolygon = Polygon<Coord>;
/// Polygon over machine integers.
pub type IntPolygon = Polygon<i64>;
