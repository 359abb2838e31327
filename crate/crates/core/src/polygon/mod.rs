//! Validated convex polygons, vertex/edge units and index arithmetic.
//!
//! Internally vertices are stored clockwise (y up). Counterclockwise input is
//! reversed with the bijection `i -> (n - i) mod n`, so input vertex 0 stays
//! vertex 0; [`Polygon::input_index`] and [`Polygon::input_unit`] undo it.

mod generate;
mod io;

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_geom::{orientation, Point};
use crate::scalar::Scalar;

pub use generate::random_convex;
pub use io::{emit_polygon, parse_points, parse_polygon};

/// A vertex, or the open edge `Edge(i)` from `v_i` to `v_{i+1}` (both
/// endpoints excluded).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "lowercase")]
pub enum Unit {
    Vertex(usize),
    Edge(usize),
}

impl Unit {
    /// Position on the clockwise unit cycle: `v_i -> 2i`, `e_i -> 2i + 1`.
    pub fn position(self) -> usize {
        match self {
            Unit::Vertex(i) => 2 * i,
            Unit::Edge(i) => 2 * i + 1,
        }
    }

    /// Inverse of [`Unit::position`], reducing modulo the cycle length `2n`.
    pub fn from_position(pos: usize, n: usize) -> Unit {
        let p = pos % (2 * n);
        if p.is_multiple_of(2) {
            Unit::Vertex(p / 2)
        } else {
            Unit::Edge(p / 2)
        }
    }

    pub fn index(self) -> usize {
        match self {
            Unit::Vertex(i) | Unit::Edge(i) => i,
        }
    }

    pub fn is_vertex(self) -> bool {
        matches!(self, Unit::Vertex(_))
    }
}

impl PartialOrd for Unit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Unit {
    fn cmp(&self, other: &Self) -> Ordering {
        self.position().cmp(&other.position())
    }
}

/// Two distinct units, in the order the sweep holds them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnitPair {
    first: Unit,
    second: Unit,
}

impl UnitPair {
    pub fn new(first: Unit, second: Unit) -> Option<Self> {
        (first != second).then_some(UnitPair { first, second })
    }

    pub fn first(&self) -> Unit {
        self.first
    }

    pub fn second(&self) -> Unit {
        self.second
    }
}

/// A strictly convex polygon with clockwise vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon<T> {
    vertices: Vec<Point<T>>,
    reversed: bool,
}

#[allow(clippy::len_without_is_empty)]
impl<T> Polygon<T> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    /// Vertex `i mod n`, so unwrapped sweep positions can be used directly.
    #[inline]
    pub fn vertex(&self, i: usize) -> &Point<T> {
        &self.vertices[i % self.vertices.len()]
    }

    /// `true` when the input was counterclockwise and has been reversed.
    pub fn was_reversed(&self) -> bool {
        self.reversed
    }

    /// Position of internal vertex `i` in the caller's input.
    pub fn input_index(&self, i: usize) -> usize {
        let n = self.len();
        if self.reversed {
            (n - i % n) % n
        } else {
            i % n
        }
    }

    /// The caller's name for an internal unit. A reversed edge keeps its
    /// point set but is named after its other endpoint.
    pub fn input_unit(&self, u: Unit) -> Unit {
        let n = self.len();
        match u {
            Unit::Vertex(i) => Unit::Vertex(self.input_index(i)),
            Unit::Edge(i) if self.reversed => Unit::Edge((2 * n - i % n - 1) % n),
            Unit::Edge(i) => Unit::Edge(i % n),
        }
    }

    /// `TermEnd`: a vertex is its own terminal vertex; an edge ends at its head.
    pub fn term_end(&self, u: Unit) -> usize {
        match u {
            Unit::Vertex(i) => i % self.len(),
            Unit::Edge(i) => (i + 1) % self.len(),
        }
    }

    /// Clockwise successor on the unit cycle.
    pub fn next_unit(&self, u: Unit) -> Unit {
        match u {
            Unit::Vertex(i) => Unit::Edge(i % self.len()),
            Unit::Edge(i) => Unit::Vertex((i + 1) % self.len()),
        }
    }

    /// Maps every vertex through `f`. The caller guarantees that `f`
    /// preserves clockwise strict convexity (e.g. a positive-determinant
    /// affine map); use [`Polygon::validate`] otherwise.
    pub fn map_vertices<U>(&self, f: impl FnMut(&Point<T>) -> Point<U>) -> Polygon<U> {
        Polygon {
            vertices: self.vertices.iter().map(f).collect(),
            reversed: self.reversed,
        }
    }
}

impl<T: Scalar> Polygon<T> {
    /// Checks strict convexity and canonicalises to clockwise order.
    pub fn validate(raw: Vec<Point<T>>) -> Result<Self> {
        let n = raw.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if raw[i] == raw[j] {
                return Err(Error::DuplicateVertex { first: i.min(j), index: i.max(j) });
            }
        }

        let turn = |i: usize| orientation(&raw[(i + n - 1) % n], &raw[i], &raw[(i + 1) % n]);
        let sign = turn(0);
        let bad = (0..n).find(|&i| {
            let s = turn(i);
            s == 0 || s != sign
        });
        if let Some(i) = bad {
            return Err(find_duplicate(&raw).unwrap_or(Error::NotConvex(i)));
        }

        // Edge directions turn monotonically; the polygon is simple iff they
        // wind exactly once, i.e. cross from the lower to the upper
        // half-plane exactly once.
        let upper = |i: usize| {
            let (p, q) = (&raw[i], &raw[(i + 1) % n]);
            q.y > p.y || (q.y == p.y && q.x > p.x)
        };
        let crossings = (0..n).filter(|&i| !upper(i) && upper((i + 1) % n)).count();
        if crossings != 1 {
            return Err(find_duplicate(&raw).unwrap_or(Error::NotConvex(0)));
        }

        let mut vertices = raw;
        let reversed = sign > 0;
        if reversed {
            vertices[1..].reverse();
        }
        Ok(Polygon { vertices, reversed })
    }

    /// Unwrapped index of the mirror image of `i` under the orientation
    /// reversal `i -> -i`.
    pub(crate) fn mirror(&self, i: usize) -> usize {
        let n = self.len();
        (n - i % n) % n
    }
}

/// Free-function form of [`Polygon::validate`].
pub fn validate<T: Scalar>(raw: Vec<Point<T>>) -> Result<Polygon<T>> {
    Polygon::validate(raw)
}

fn find_duplicate<T: Scalar>(raw: &[Point<T>]) -> Option<Error> {
    let mut seen: HashMap<&Point<T>, usize> = HashMap::with_capacity(raw.len());
    for (index, p) in raw.iter().enumerate() {
        if let Some(&first) = seen.get(p) {
            return Some(Error::DuplicateVertex { first, index });
        }
        seen.insert(p, index);
    }
    None
}
