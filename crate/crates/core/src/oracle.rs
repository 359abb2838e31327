//! Slow reference implementations straight from the definitions. They share
//! nothing with the sweeps beyond the exact predicates and the candidate
//! constructions of the gadget, and refuse inputs above a size cap.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_rational::BigRational;

use crate::enclosing::{contains, minimum, EnclosingTriangle};
use crate::error::{Error, Result};
use crate::exact_geom::{area_cmp, height_cmp};
use crate::general_stable::{gadget_g3stable, GTriangle, Mode};
use crate::polygon::{Polygon, Unit, UnitPair};
use crate::scalar::Scalar;
use crate::three_stable::VertexTriangle;

pub const MAX_TRIANGLE_CAP: usize = 60;
pub const THREE_STABLE_CAP: usize = 40;
pub const G3STABLE_CAP: usize = 30;

fn cap<T>(poly: &Polygon<T>, cap: usize) -> Result<usize> {
    let n = poly.len();
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    Ok(n)
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

/// Every maximum-area vertex triangle.
pub fn brute_max_triangles<T: Scalar>(poly: &Polygon<T>) -> Result<Vec<VertexTriangle>> {
    let n = cap(poly, MAX_TRIANGLE_CAP)?;
    let v = |i: usize| poly.vertex(i);
    let mut best: Vec<(usize, usize, usize)> = Vec::new();
    for (i, j, k) in triples(n) {
        let ord = match best.first() {
            None => Ordering::Greater,
            Some(&(a, b, c)) => area_cmp(v(i), v(j), v(k), v(a), v(b), v(c)),
        };
        match ord {
            Ordering::Greater => best = vec![(i, j, k)],
            Ordering::Equal => best.push((i, j, k)),
            Ordering::Less => {}
        }
    }
    Ok(best.into_iter().map(|(i, j, k)| VertexTriangle::new(i, j, k, n)).collect())
}

/// The lexicographically smallest maximum-area triangle and its area.
pub fn brute_max_triangle<T: Scalar>(poly: &Polygon<T>) -> Result<(VertexTriangle, BigRational)> {
    let best = brute_max_triangles(poly)?.into_iter().min().ok_or(Error::NoCandidate)?;
    Ok((best, best.area(poly)))
}

/// Every corner is at least as far from the opposite side as every vertex
/// on the corner's side of it.
pub fn is_3stable_definitional<T: Scalar>(poly: &Polygon<T>, t: VertexTriangle) -> bool {
    let n = poly.len();
    let [a, b, c] = t.indices();
    let v = |i: usize| poly.vertex(i);
    [(a, b, c), (b, c, a), (c, a, b)].iter().all(|&(x, p, q)| {
        (0..n).all(|y| height_cmp(v(p), v(q), v(x), v(y)) != Ordering::Less)
    })
}

pub fn brute_3stable_set<T: Scalar>(poly: &Polygon<T>) -> Result<BTreeSet<VertexTriangle>> {
    let n = cap(poly, THREE_STABLE_CAP)?;
    Ok(triples(n)
        .map(|(i, j, k)| VertexTriangle::new(i, j, k, n))
        .filter(|&t| is_3stable_definitional(poly, t))
        .collect())
}

/// The gadget on every clockwise triple of units, verified against all
/// vertices.
pub fn brute_g3stable_set<T: Scalar>(poly: &Polygon<T>) -> Result<BTreeSet<GTriangle>> {
    let n = cap(poly, G3STABLE_CAP)?;
    let m = 2 * n;
    let mut out = BTreeSet::new();
    for (x, y, z) in triples(m) {
        let [a, b, c] = [x, y, z].map(|p| Unit::from_position(p, n));
        out.extend(gadget_g3stable(poly, a, b, c, Mode::Definitional));
    }
    Ok(out)
}

/// Minimum over all brute-force candidates that pass the full containment
/// test.
pub fn brute_min_enclosing<T: Scalar>(poly: &Polygon<T>) -> Result<(EnclosingTriangle, Vec<EnclosingTriangle>)> {
    let mut candidates = Vec::new();
    for t in brute_g3stable_set(poly)? {
        let e = EnclosingTriangle::from_source(t)?;
        if contains(poly, &e.a, &e.b, &e.c) {
            candidates.push(e);
        }
    }
    minimum(candidates)
}

/// Vertex pairs `(B, C)` that are an edge of some 3-stable triangle.
pub fn alive_vertex_pairs(stable: &BTreeSet<VertexTriangle>) -> HashSet<(usize, usize)> {
    let mut out = HashSet::new();
    for t in stable {
        let [a, b, c] = t.indices();
        out.extend([(b, c), (c, a), (a, b)]);
    }
    out
}

/// Unit pairs `(u1, u2)` holding two consecutive corners of some generally
/// 3-stable triangle.
pub fn alive_unit_pairs(stable: &BTreeSet<GTriangle>) -> HashSet<UnitPair> {
    let mut out = HashSet::new();
    for t in stable {
        let [a, b, c] = t.units();
        for (x, y) in [(b, c), (c, a), (a, b)] {
            out.extend(UnitPair::new(x, y));
        }
    }
    out
}
