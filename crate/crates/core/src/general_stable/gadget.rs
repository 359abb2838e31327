//! Constant-time construction of the generally 3-stable triangle carried by
//! a clockwise triple of units, followed by verification.
//!
//! Candidates are built and checked in homogeneous integer coordinates,
//! which avoids normalising rationals on every operation; only accepted
//! corners are converted to reduced rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::GTriangle;
use crate::counters::Counters;
use crate::exact_geom::{exact, height_cmp, MidMeetInside, ParallelMeetInside, Point};
use crate::kernel::Kernel;
use crate::polygon::{Polygon, Unit};
use crate::scalar::Scalar;

/// How corner stability is verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Compare against the neighbouring vertices only. Heights over a line
    /// are unimodal along a convex boundary, so this is exact.
    Local,
    /// Compare against every vertex.
    Definitional,
}

/// A point `(x / w, y / w)` with `w > 0`, or a line `x X + y Y + w W = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Hp {
    x: BigInt,
    y: BigInt,
    w: BigInt,
}

impl Hp {
    fn from_rational(px: &BigRational, py: &BigRational) -> Hp {
        Hp {
            x: px.numer() * py.denom(),
            y: py.numer() * px.denom(),
            w: px.denom() * py.denom(),
        }
    }

    fn vertex<T: Scalar>(poly: &Polygon<T>, i: usize) -> Hp {
        let v = poly.vertex(i);
        Hp::from_rational(&v.x.to_rational(), &v.y.to_rational())
    }

    fn to_point(&self) -> Point<BigRational> {
        Point::new(
            BigRational::new(self.x.clone(), self.w.clone()),
            BigRational::new(self.y.clone(), self.w.clone()),
        )
    }

    /// Cross product of the 3-vectors: the line through two points, or the
    /// meet of two lines.
    fn join(&self, o: &Hp) -> Hp {
        Hp {
            x: &self.y * &o.w - &self.w * &o.y,
            y: &self.w * &o.x - &self.x * &o.w,
            w: &self.x * &o.y - &self.y * &o.x,
        }
    }

    /// A point from a meet, `None` at infinity.
    fn normalised(self) -> Option<Hp> {
        match self.w.sign() {
            num_bigint::Sign::NoSign => None,
            num_bigint::Sign::Plus => Some(self),
            num_bigint::Sign::Minus => Some(Hp { x: -self.x, y: -self.y, w: -self.w }),
        }
    }

    /// The line through this point parallel to `line`.
    fn parallel(&self, line: &Hp) -> Hp {
        Hp {
            x: &line.x * &self.w,
            y: &line.y * &self.w,
            w: -(&line.x * &self.x + &line.y * &self.y),
        }
    }

    fn midpoint(&self, o: &Hp) -> Hp {
        Hp {
            x: &self.x * &o.w + &o.x * &self.w,
            y: &self.y * &o.w + &o.y * &self.w,
            w: BigInt::from(2) * &self.w * &o.w,
        }
    }
}

/// `cross(q - p, r - p)` scaled by the positive factor `p.w q.w r.w`.
fn det(p: &Hp, q: &Hp, r: &Hp) -> BigInt {
    &p.x * (&q.y * &r.w - &q.w * &r.y) - &p.y * (&q.x * &r.w - &q.w * &r.x) + &p.w * (&q.x * &r.y - &q.y * &r.x)
}

/// `dot(q - p, r - p)` scaled by a positive factor.
fn dot_from(p: &Hp, q: &Hp, r: &Hp) -> BigInt {
    let ux = &q.x * &p.w - &p.x * &q.w;
    let uy = &q.y * &p.w - &p.y * &q.w;
    let vx = &r.x * &p.w - &p.x * &r.w;
    let vy = &r.y * &p.w - &p.y * &r.w;
    ux * vx + uy * vy
}

/// All generally 3-stable triangles with corners in `u1, u2, u3` (clockwise).
/// At most two are returned: two vertex corners on a chord parallel to the
/// third unit's edge leave a segment of choices, whose endpoints are the
/// representatives.
pub fn gadget_g3stable<T: Scalar>(
    poly: &Polygon<T>,
    u1: Unit,
    u2: Unit,
    u3: Unit,
    mode: Mode,
) -> Vec<GTriangle> {
    let mut out = Vec::new();
    gadget(poly, [u1, u2, u3], mode, &mut Counters::default(), &mut out);
    out
}

pub(crate) fn gadget<T: Scalar>(
    poly: &Polygon<T>,
    units: [Unit; 3],
    mode: Mode,
    counters: &mut Counters,
    out: &mut Vec<GTriangle>,
) {
    counters.gadget_calls += 1;
    let n = poly.len();
    let units = units.map(|u| Unit::from_position(u.position(), n));
    let [p0, p1, p2] = units.map(Unit::position);
    let clockwise = (p0 < p1 && p1 < p2) || (p1 < p2 && p2 < p0) || (p2 < p0 && p0 < p1);
    if !clockwise {
        return;
    }
    let edges: Vec<usize> = (0..3).filter(|&q| !units[q].is_vertex()).collect();
    let candidates: Vec<[Hp; 3]> = match edges.len() {
        0 => {
            let [a, b, c] = units.map(Unit::index);
            if mode == Mode::Local && !Kernel::new(poly, counters).stable(a, b, c) {
                return;
            }
            vec![[a, b, c].map(|i| Hp::vertex(poly, i))]
        }
        1 => one_edge(poly, units, edges[0], mode, counters),
        2 => {
            let q = (0..3).find(|&q| units[q].is_vertex()).unwrap_or(0);
            let (a, j, k) = (units[q].index(), units[(q + 1) % 3].index(), units[(q + 2) % 3].index());
            let e = |i: usize| (poly.vertex(i), poly.vertex(i + 1));
            let ((j0, j1), (k0, k1)) = (e(j), e(k));
            counters.predicate_evals += 2;
            if !exact(&ParallelMeetInside, [j0, j1, k0, k1, poly.vertex(a)])
                || !exact(&ParallelMeetInside, [k0, k1, j0, j1, poly.vertex(a)])
            {
                return;
            }
            two_edges(poly, units, q).into_iter().collect()
        }
        _ => {
            let e = units.map(|u| (poly.vertex(u.index()), poly.vertex(u.index() + 1)));
            counters.predicate_evals += 3;
            let inside = [(0, 1, 2), (1, 0, 2), (2, 1, 0)]
                .iter()
                .all(|&(a, b, c)| exact(&MidMeetInside, [e[a].0, e[a].1, e[b].0, e[b].1, e[c].0, e[c].1]));
            if !inside {
                return;
            }
            three_edges(poly, units).into_iter().collect()
        }
    };
    for pts in candidates {
        if verify(poly, &units, &pts, mode, counters) {
            out.push(GTriangle::new([0, 1, 2].map(|q| (units[q], pts[q].to_point()))));
        }
    }
}

/// Two vertex corners `v_j, v_k` and a corner on edge `e_i`. The edge must
/// be parallel to the chord; the admissible positions on it form a closed
/// interval whose interior endpoints are returned.
fn one_edge<T: Scalar>(
    poly: &Polygon<T>,
    units: [Unit; 3],
    q: usize,
    mode: Mode,
    counters: &mut Counters,
) -> Vec<[Hp; 3]> {
    type Q = BigRational;
    let n = poly.len();
    let i = units[q].index();
    let (j, k) = (units[(q + 1) % 3].index(), units[(q + 2) % 3].index());
    counters.predicate_evals += 1;
    if height_cmp(poly.vertex(j), poly.vertex(k), poly.vertex(i), poly.vertex(i + 1)) != Ordering::Equal {
        return Vec::new();
    }
    let v = |x: usize| poly.vertex(x).to_rational();
    let sub = |a: &Point<Q>, b: &Point<Q>| Point::new(&a.x - &b.x, &a.y - &b.y);
    let cross = |a: &Point<Q>, b: &Point<Q>| &a.x * &b.y - &a.y * &b.x;
    let (p0, vj, vk) = (v(i), v(j), v(k));
    let d = sub(&v(i + 1), &p0);
    let witnesses = |c: usize| -> Vec<usize> {
        match mode {
            Mode::Local => vec![c + n - 1, c + 1],
            Mode::Definitional => (0..n).collect(),
        }
    };
    // Each witness x gives alpha + lambda * beta >= 0 for A = p0 + lambda d.
    let mut constraints = Vec::new();
    for x in witnesses(j) {
        let w = sub(&v(x), &vj);
        constraints.push((cross(&sub(&p0, &vk), &w), cross(&d, &w)));
    }
    for x in witnesses(k) {
        let w = sub(&v(x), &vk);
        constraints.push((cross(&sub(&vj, &p0), &w), -cross(&d, &w)));
    }
    let (mut lo, mut hi) = (Q::zero(), Q::one());
    for (alpha, beta) in constraints {
        if beta.is_zero() {
            if alpha.is_negative() {
                return Vec::new();
            }
            continue;
        }
        let bound = -alpha / &beta;
        if beta.is_positive() {
            lo = lo.max(bound);
        } else {
            hi = hi.min(bound);
        }
    }
    if lo > hi {
        return Vec::new();
    }
    let mut ends = vec![lo.clone()];
    if hi != lo {
        ends.push(hi);
    }
    let (hj, hk) = (Hp::vertex(poly, j), Hp::vertex(poly, k));
    ends.into_iter()
        .filter(|t| t.is_positive() && *t < Q::one())
        .map(|t| {
            let mut pts = [hj.clone(), hj.clone(), hk.clone()];
            pts[q] = Hp::from_rational(&(&p0.x + &t * &d.x), &(&p0.y + &t * &d.y));
            pts[(q + 1) % 3] = hj.clone();
            pts[(q + 2) % 3] = hk.clone();
            pts
        })
        .collect()
}

fn edge_line<T: Scalar>(poly: &Polygon<T>, i: usize) -> Hp {
    Hp::vertex(poly, i).join(&Hp::vertex(poly, i + 1))
}

/// A vertex corner `v_i` followed by corners on edges `e_j`, `e_k`: each
/// edge corner sits where the parallel through `v_i` to the other edge
/// meets it.
fn two_edges<T: Scalar>(poly: &Polygon<T>, units: [Unit; 3], q: usize) -> Option<[Hp; 3]> {
    let a = Hp::vertex(poly, units[q].index());
    let lj = edge_line(poly, units[(q + 1) % 3].index());
    let lk = edge_line(poly, units[(q + 2) % 3].index());
    let b = lj.join(&a.parallel(&lk)).normalised()?;
    let c = lk.join(&a.parallel(&lj)).normalised()?;
    let mut pts = [a.clone(), a.clone(), a];
    pts[(q + 1) % 3] = b;
    pts[(q + 2) % 3] = c;
    Some(pts)
}

/// Three edge corners: each is the midpoint of the intersections of its
/// edge line with the other two.
fn three_edges<T: Scalar>(poly: &Polygon<T>, units: [Unit; 3]) -> Option<[Hp; 3]> {
    let lines = units.map(|u| edge_line(poly, u.index()));
    let x = |a: usize, b: usize| lines[a].join(&lines[b]).normalised();
    let (i01, i12, i20) = (x(0, 1)?, x(1, 2)?, x(2, 0)?);
    Some([i01.midpoint(&i20), i01.midpoint(&i12), i12.midpoint(&i20)])
}

fn verify<T: Scalar>(
    poly: &Polygon<T>,
    units: &[Unit; 3],
    pts: &[Hp; 3],
    mode: Mode,
    counters: &mut Counters,
) -> bool {
    if !det(&pts[0], &pts[1], &pts[2]).is_negative() {
        return false;
    }
    let on_units = units.iter().zip(pts).all(|(u, p)| match *u {
        Unit::Vertex(i) => {
            let v = Hp::vertex(poly, i);
            &p.x * &v.w == &v.x * &p.w && &p.y * &v.w == &v.y * &p.w
        }
        Unit::Edge(i) => {
            let (a, b) = (Hp::vertex(poly, i), Hp::vertex(poly, i + 1));
            det(&a, &b, p).is_zero() && dot_from(&a, &b, p).is_positive() && dot_from(&b, &a, p).is_positive()
        }
    });
    if !on_units {
        return false;
    }
    (0..3).all(|q| {
        let (x, b, c) = (&pts[q], &pts[(q + 1) % 3], &pts[(q + 2) % 3]);
        counters.predicate_evals += 1;
        stable_corner(poly, units[q], x, b, c, mode)
    })
}

/// `x` is at least as high over `b -> c` as every point of the polygon.
fn stable_corner<T: Scalar>(poly: &Polygon<T>, unit: Unit, x: &Hp, b: &Hp, c: &Hp, mode: Mode) -> bool {
    let n = poly.len();
    // Heights are -det(b, c, p) / p.w up to a common positive factor.
    let dx = det(b, c, x);
    let cmp = |i: usize| {
        let v = Hp::vertex(poly, i);
        (&dx * &v.w).cmp(&(det(b, c, &v) * &x.w))
    };
    let below = |i: usize| cmp(i) != Ordering::Greater;
    match mode {
        Mode::Definitional => (0..n).all(below),
        Mode::Local => match unit {
            Unit::Vertex(i) => below(i + n - 1) && below(i + 1),
            Unit::Edge(i) => cmp(i) == Ordering::Equal && cmp(i + 1) == Ordering::Equal && below(i + n - 1) && below(i + 2),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::parse_polygon;

    type Q = BigRational;

    fn q(a: i64, b: i64) -> Q {
        Q::new(a.into(), b.into())
    }

    #[test]
    fn vvv_on_triangle() {
        let t: Polygon<i64> = parse_polygon("0 0\n1 3\n3 0\n").unwrap();
        for mode in [Mode::Local, Mode::Definitional] {
            let got = gadget_g3stable(&t, Unit::Vertex(0), Unit::Vertex(1), Unit::Vertex(2), mode);
            assert_eq!(got.len(), 1);
            assert_eq!(got[0].area(), q(9, 2));
        }
        // Counterclockwise unit order is rejected.
        assert!(gadget_g3stable(&t, Unit::Vertex(0), Unit::Vertex(2), Unit::Vertex(1), Mode::Local).is_empty());
    }

    #[test]
    fn vve_needs_parallel_edge() {
        let sq: Polygon<i64> = parse_polygon("0 0\n0 1\n1 1\n1 0\n").unwrap();
        // Diagonal (0,0)-(1,1) against edge (1,1)-(1,0): not parallel.
        let got = gadget_g3stable(&sq, Unit::Vertex(0), Unit::Vertex(1), Unit::Edge(2), Mode::Definitional);
        assert!(got.is_empty());
    }

    #[test]
    fn eee_with_parallel_lines_is_empty() {
        let sq: Polygon<i64> = parse_polygon("0 0\n0 1\n1 1\n1 0\n").unwrap();
        assert!(gadget_g3stable(&sq, Unit::Edge(0), Unit::Edge(1), Unit::Edge(2), Mode::Local).is_empty());
    }

    #[test]
    fn eee_on_truncated_triangle() {
        // The triangle (0,0),(0,12),(12,0) with its corners cut off. The
        // medial triangle (0,6),(6,6),(6,0) has one corner on each long edge.
        let p: Polygon<i64> = parse_polygon("0 1\n0 11\n1 11\n11 1\n11 0\n1 0\n").unwrap();
        for mode in [Mode::Local, Mode::Definitional] {
            let got = gadget_g3stable(&p, Unit::Edge(0), Unit::Edge(2), Unit::Edge(4), mode);
            assert_eq!(got.len(), 1, "{mode:?}");
            let pts: Vec<_> = got[0].corners().iter().map(|c| c.1.clone()).collect();
            let expect = [(0, 6), (6, 6), (6, 0)].map(|(x, y)| Point::new(q(x, 1), q(y, 1)));
            assert_eq!(pts, expect);
        }
    }

    #[test]
    fn local_and_definitional_agree() {
        for seed in 0..6 {
            let p = crate::polygon::random_convex(9, seed, 30).unwrap();
            let units: Vec<Unit> = (0..18).map(|x| Unit::from_position(x, 9)).collect();
            for &a in &units {
                for &b in &units {
                    for &c in &units {
                        assert_eq!(
                            gadget_g3stable(&p, a, b, c, Mode::Local),
                            gadget_g3stable(&p, a, b, c, Mode::Definitional),
                            "{a:?} {b:?} {c:?}"
                        );
                    }
                }
            }
        }
    }
}
