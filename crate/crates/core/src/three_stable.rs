//! 3-stable triangles: corners on vertices, each farthest from the line
//! through the opposite side among the points on its side.
//!
//! [`find_one_3stable`] grows a largest rooted triangle until all corners are
//! stable. [`rotate_and_kill`] then moves an edge `(B, C)` of candidate
//! triangles monotonically around the polygon, discarding one endpoint per
//! step, and reports every 3-stable triangle with `B` between the seed's
//! second and third corners. Three seeded runs cover all of them.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::exact_geom::{area_cmp, exact, orientation, ray_intersect, triangle_area, CmpDist, ExtendedPoint, Point};
use crate::kernel::{Corner, Kernel};
use crate::polygon::Polygon;
use crate::scalar::Scalar;

/// Three vertex indices in clockwise order, rotated so the smallest comes
/// first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 3]", from = "[usize; 3]")]
pub struct VertexTriangle([usize; 3]);

impl VertexTriangle {
    /// `a, b, c` must already be in clockwise order; indices are taken
    /// modulo `n`.
    pub fn new(a: usize, b: usize, c: usize, n: usize) -> Self {
        let v = [a % n, b % n, c % n];
        let m = (0..3).min_by_key(|&i| v[i]).unwrap_or(0);
        VertexTriangle([v[m], v[(m + 1) % 3], v[(m + 2) % 3]])
    }

    pub fn indices(&self) -> [usize; 3] {
        self.0
    }

    /// The same triangle named by the caller's input indices.
    pub fn to_input<T>(&self, poly: &Polygon<T>) -> VertexTriangle {
        let [a, b, c] = self.0.map(|i| poly.input_index(i));
        VertexTriangle::new(a, b, c, poly.len())
    }

    pub fn points<'a, T>(&self, poly: &'a Polygon<T>) -> [&'a Point<T>; 3] {
        self.0.map(|i| poly.vertex(i))
    }

    pub fn area<T: Scalar>(&self, poly: &Polygon<T>) -> BigRational {
        let [a, b, c] = self.points(poly).map(Point::to_rational);
        triangle_area(&a, &b, &c)
    }
}

impl From<VertexTriangle> for [usize; 3] {
    fn from(t: VertexTriangle) -> Self {
        t.0
    }
}

impl From<[usize; 3]> for VertexTriangle {
    fn from(v: [usize; 3]) -> Self {
        VertexTriangle(v)
    }
}

/// Corners of the region where the third corner of a stable triangle over
/// `(v_j, v_k)` must lie.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCorners {
    pub h: ExtendedPoint<BigRational>,
    pub i: ExtendedPoint<BigRational>,
    pub j: ExtendedPoint<BigRational>,
    pub k: ExtendedPoint<BigRational>,
}

/// Constructs the four corners explicitly. The sweeps never do this; they
/// compare against corners without building them.
pub fn q_corners<T: Scalar>(poly: &Polygon<T>, j: usize, k: usize) -> QCorners {
    let n = poly.len();
    let q = |i: usize| poly.vertex(i).to_rational();
    let build = |corner: Corner| {
        let ((a0, a1), (b0, b1)) = corner.rays(n, j, k);
        let dir = |p: usize, q_: usize| {
            let (p, q_) = (q(p), q(q_));
            Point::new(&q_.x - &p.x, &q_.y - &p.y)
        };
        ray_intersect(&q(j), &dir(a0, a1), &q(k), &dir(b0, b1))
            .expect("consecutive vertices are distinct")
    };
    QCorners { h: build(Corner::H), i: build(Corner::I), j: build(Corner::J), k: build(Corner::K) }
}

/// `(v_j, v_k)` is illegal when `v_{k+1}` is strictly closer than `v_k` to
/// the line through edge `e_j`.
pub fn is_legal<T: Scalar>(poly: &Polygon<T>, j: usize, k: usize) -> bool {
    let mut counters = Counters::default();
    Kernel::new(poly, &mut counters).height(j, j + 1, k + 1, k) != Ordering::Less
}

/// Clockwise-first vertex farthest from the line `v_j v_k` among vertices
/// strictly right of `v_j -> v_k`, climbing from `hint`. The hint must not
/// lie past the answer; a hint outside the right chain starts the climb at
/// the chain's first vertex. The flag reports a tie with the next vertex.
pub fn farthest_on_right<T: Scalar>(
    poly: &Polygon<T>,
    j: usize,
    k: usize,
    hint: usize,
) -> Result<(usize, bool)> {
    let n = poly.len();
    let (j, k) = (j % n, k % n);
    let span = (j + n - k) % n;
    if j == k || span < 2 {
        return Err(Error::EmptyRightChain(j, k));
    }
    let (first, last) = (k + 1, k + span - 1);
    let h = k + (hint % n + n - k) % n;
    let start = if (first..=last).contains(&h) { h } else { first };
    let mut counters = Counters::default();
    let mut kern = Kernel::new(poly, &mut counters);
    let a = kern.climb_height(j, k, start, last);
    let tied = a < last && kern.height(j, k, a + 1, a) == Ordering::Equal;
    Ok((a % n, tied))
}

/// Local stability of all three corners of `t` (equivalent to the global
/// definition on a strictly convex polygon).
pub fn is_3stable<T: Scalar>(poly: &Polygon<T>, t: VertexTriangle) -> bool {
    let [a, b, c] = t.indices();
    let mut counters = Counters::default();
    Kernel::new(poly, &mut counters).stable(a, b, c)
}

/// `(b, c)` maximising the area of `(root, b, c)`, smallest `(b, c)` on ties.
pub fn largest_rooted_triangle<T: Scalar>(poly: &Polygon<T>, root: usize) -> (usize, usize) {
    largest_rooted(poly, root % poly.len(), &mut Counters::default())
}

fn largest_rooted<T: Scalar>(poly: &Polygon<T>, a: usize, counters: &mut Counters) -> (usize, usize) {
    let n = poly.len();
    let mut kern = Kernel::new(poly, counters);
    let last = a + n - 1;
    let (mut best_b, mut best_c) = (a + 1, a + 2);
    let mut c = a + 2;
    for b in a + 1..=a + n - 2 {
        c = c.max(b + 1);
        c = kern.climb_height(a, b, c, last);
        kern.counters.cursor_advances += 1;
        kern.counters.predicate_evals += 1;
        let (pa, pb, pc) = (kern.v(a), kern.v(b), kern.v(c));
        if area_cmp(pa, pb, pc, pa, kern.v(best_b), kern.v(best_c)) == Ordering::Greater {
            (best_b, best_c) = (b, c);
        }
    }
    (best_b % n, best_c % n)
}

/// Vertex access through an optional orientation reversal `i -> -i`.
struct View<'a, T> {
    poly: &'a Polygon<T>,
    mirrored: bool,
}

impl<T: Scalar> View<'_, T> {
    fn at(&self, i: usize) -> &Point<T> {
        if self.mirrored {
            self.poly.vertex(self.poly.mirror(i))
        } else {
            self.poly.vertex(i)
        }
    }

    /// `x` strictly farther than `y` from the line through `p` and `q`.
    fn farther(&self, x: usize, y: usize, p: usize, q: usize, counters: &mut Counters) -> bool {
        counters.predicate_evals += 1;
        exact(&CmpDist, [self.at(p), self.at(q), self.at(x), self.at(y)]) == Ordering::Greater
    }

    /// Clockwise triangle of this view as a clockwise triangle of the polygon.
    fn to_poly(&self, (a, b, c): (usize, usize, usize)) -> (usize, usize, usize) {
        if self.mirrored {
            let m = |i| self.poly.mirror(i);
            (m(a), m(c), m(b))
        } else {
            let n = self.poly.len();
            (a % n, b % n, c % n)
        }
    }
}

fn climb_in<T: Scalar>(
    view: &View<'_, T>,
    (mut a, mut b, mut c): (usize, usize, usize),
    counters: &mut Counters,
) -> (usize, usize, usize) {
    a += 1;
    counters.cursor_advances += 1;
    loop {
        let mut moved = false;
        while view.farther(b + 1, b, a, c, counters) {
            b += 1;
            moved = true;
            counters.cursor_advances += 1;
        }
        while view.farther(c + 1, c, a, b, counters) {
            c += 1;
            moved = true;
            counters.cursor_advances += 1;
        }
        if !moved {
            return (a, b, c);
        }
    }
}

/// One climbing round: `a` steps once, then `b` and `c` move clockwise
/// while the next vertex is strictly farther from the line through the
/// other two corners. Requires `a + 1` strictly farther than `a` from the
/// line `bc` and `b`, `c` stable.
pub fn climb<T: Scalar>(poly: &Polygon<T>, a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let n = poly.len();
    let a = a % n;
    let b = a + (b + n - a) % n;
    let c = b + (c + n - b) % n;
    let view = View { poly, mirrored: false };
    view.to_poly(climb_in(&view, (a, b, c), &mut Counters::default()))
}

/// Some 3-stable triangle.
pub fn find_one_3stable<T: Scalar>(poly: &Polygon<T>) -> Result<VertexTriangle> {
    find_one(poly, &mut Counters::default())
}

pub(crate) fn find_one<T: Scalar>(poly: &Polygon<T>, counters: &mut Counters) -> Result<VertexTriangle> {
    let n = poly.len();
    let (b, c) = largest_rooted(poly, 0, counters);
    let mut kern = Kernel::new(poly, counters);
    if kern.stable(0, b, c) {
        return Ok(VertexTriangle::new(0, b, c, n));
    }
    // Climb towards whichever neighbour of the root is farther from bc; the
    // counterclockwise case runs the same loop on the mirrored view.
    let forward = kern.height(b, c, 1, 0) == Ordering::Greater;
    let view = View { poly, mirrored: !forward };
    let mut tri = if forward { (0, b, c) } else { (0, n - c, n - b) };
    for _ in 0..=4 * n {
        tri = climb_in(&view, tri, counters);
        let (p, q, r) = view.to_poly(tri);
        if Kernel::new(poly, counters).stable(p, q, r) {
            return Ok(VertexTriangle::new(p, q, r, n));
        }
    }
    Err(Error::InvariantViolation("climbing did not converge".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Decision {
    KillB,
    KillC,
}

/// One iteration of [`rotate_and_kill`]. `a` is the farthest vertex from
/// `bc` found in this iteration (or the idle cursor when no vertex lies
/// right of `b -> c`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    #[serde(rename = "B")]
    pub b: usize,
    #[serde(rename = "C")]
    pub c: usize,
    #[serde(rename = "A")]
    pub a: usize,
    pub decision: Decision,
    pub reported: Vec<VertexTriangle>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepTrace {
    pub records: Vec<SweepRecord>,
}

impl SweepTrace {
    /// JSON Lines, indices translated to the caller's input numbering.
    pub fn to_jsonl<T>(&self, poly: &Polygon<T>) -> String {
        let mut out = String::new();
        for r in &self.records {
            let rec = SweepRecord {
                b: poly.input_index(r.b),
                c: poly.input_index(r.c),
                a: poly.input_index(r.a),
                decision: r.decision,
                reported: r.reported.iter().map(|t| t.to_input(poly)).collect(),
            };
            out.push_str(&serde_json::to_string(&rec).expect("plain data serialises"));
            out.push('\n');
        }
        out
    }
}

/// Sweeps `(B, C)` from `(v_s, v_t)` to `(v_t, v_r)`, reporting every
/// 3-stable triangle met on the way.
pub fn rotate_and_kill<T: Scalar>(
    poly: &Polygon<T>,
    r: usize,
    s: usize,
    t: usize,
    counters: &mut Counters,
) -> Result<(BTreeSet<VertexTriangle>, SweepTrace)> {
    let n = poly.len();
    let (r, s, t) = (r % n, s % n, t % n);
    check_seed(poly, r, s, t)?;
    let (s0, t0, r0) = unwrap_seed(n, r, s, t);

    let mut kern = Kernel::new(poly, counters);
    let mut found = BTreeSet::new();
    let mut trace = SweepTrace::default();
    let (mut a, mut b, mut c) = (r0, s0, t0);
    while (b, c) != (t0, r0) {
        let last = b + n - 1;
        let mut reported = Vec::new();
        let decision = if c < last {
            a = kern.climb_height(b, c, a, last);
            for x in [a, a + 1] {
                if x <= last && kern.stable(x, b, c) {
                    reported.push(VertexTriangle::new(x, b, c, n));
                }
            }
            match kern.corner(Corner::I, b, c, a) {
                Some(Ordering::Greater) => Decision::KillC,
                _ => Decision::KillB,
            }
        } else {
            // Nothing lies right of (v_s, v_r); only C = v_r can be here.
            Decision::KillB
        };
        trace.records.push(SweepRecord { b: b % n, c: c % n, a: a % n, decision, reported: reported.clone() });
        found.extend(reported);
        match decision {
            Decision::KillB if b < t0 => b += 1,
            Decision::KillC if c < r0 => c += 1,
            _ => {
                return Err(Error::InvariantViolation(format!(
                    "sweep left its range at B = {}, C = {}",
                    b % n,
                    c % n
                )))
            }
        }
        kern.counters.cursor_advances += 1;
    }
    Ok((found, trace))
}

fn check_seed<T: Scalar>(poly: &Polygon<T>, r: usize, s: usize, t: usize) -> Result<()> {
    let ok = r != s
        && s != t
        && t != r
        && orientation(poly.vertex(r), poly.vertex(s), poly.vertex(t)) < 0
        && Kernel::new(poly, &mut Counters::default()).stable(r, s, t);
    if ok {
        Ok(())
    } else {
        Err(Error::NotThreeStable(r, s, t))
    }
}

/// Unwrapped positions `s0 < t0 < r0 < s0 + n` of a clockwise seed.
pub(crate) fn unwrap_seed(n: usize, r: usize, s: usize, t: usize) -> (usize, usize, usize) {
    let t0 = s + (t + n - s) % n;
    let r0 = t0 + (r + n - t) % n;
    (s, t0, r0)
}

/// Everything produced by a full enumeration.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub seed: VertexTriangle,
    pub triangles: BTreeSet<VertexTriangle>,
    pub traces: Vec<SweepTrace>,
    pub counters: Counters,
}

/// All 3-stable triangles.
pub fn enumerate_all_3stable<T: Scalar>(poly: &Polygon<T>) -> Result<BTreeSet<VertexTriangle>> {
    Ok(enumerate_all_3stable_detailed(poly)?.triangles)
}

pub fn enumerate_all_3stable_detailed<T: Scalar>(poly: &Polygon<T>) -> Result<Enumeration> {
    let mut counters = Counters::default();
    let seed = find_one(poly, &mut counters)?;
    let [r, s, t] = seed.indices();
    let mut triangles = BTreeSet::new();
    let mut traces = Vec::with_capacity(3);
    for (x, y, z) in [(r, s, t), (s, t, r), (t, r, s)] {
        let (found, trace) = rotate_and_kill(poly, x, y, z, &mut counters)?;
        triangles.extend(found);
        traces.push(trace);
    }
    Ok(Enumeration { seed, triangles, traces, counters })
}

/// A maximum-area inscribed triangle with its exact area; the smallest
/// canonical triple among ties.
pub fn max_area_triangle<T: Scalar>(poly: &Polygon<T>) -> Result<(VertexTriangle, BigRational)> {
    let all = enumerate_all_3stable(poly)?;
    let best = largest(poly, &all).ok_or(Error::NoCandidate)?;
    Ok((best, best.area(poly)))
}

pub(crate) fn largest<'a, T: Scalar>(
    poly: &Polygon<T>,
    triangles: impl IntoIterator<Item = &'a VertexTriangle>,
) -> Option<VertexTriangle> {
    let mut best: Option<VertexTriangle> = None;
    for &t in triangles {
        let better = match best {
            None => true,
            Some(b) => {
                let [p, q, r] = t.points(poly);
                let [x, y, z] = b.points(poly);
                area_cmp(p, q, r, x, y, z) == Ordering::Greater
            }
        };
        if better {
            best = Some(t);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::{parse_polygon, random_convex};

    fn square() -> Polygon<i64> {
        parse_polygon("0 0\n0 1\n1 1\n1 0\n").unwrap()
    }

    fn tri() -> Polygon<i64> {
        parse_polygon("0 0\n1 3\n3 0\n").unwrap()
    }

    #[test]
    fn canonical_triangle_rotation() {
        assert_eq!(VertexTriangle::new(5, 1, 3, 6).indices(), [1, 3, 5]);
        assert_eq!(VertexTriangle::new(7, 9, 2, 8).indices(), [1, 2, 7]);
    }

    #[test]
    fn q_corner_examples() {
        let sq = square();
        // (0,0) is vertex 0 and (1,1) is vertex 2.
        let q = q_corners(&sq, 0, 2);
        assert!(q.i.is_infinite());
        assert!(q.h.is_infinite());
    }

    #[test]
    fn legality_examples() {
        let p = random_convex(11, 3, 200).unwrap();
        for j in 0..11 {
            assert!(is_legal(&p, j, j + 1));
            assert!(!is_legal(&p, j, j + 10));
        }
        assert!(is_legal(&square(), 0, 2));
    }

    #[test]
    fn farthest_examples() {
        let sq = square();
        // Chord (0,1) -> (1,0) has right chain {(0,0)}.
        assert_eq!(farthest_on_right(&sq, 1, 3, 2).unwrap(), (0, false));
        // Chord (1,0) -> (0,1): right chain {(1,1)}.
        assert_eq!(farthest_on_right(&sq, 3, 1, 0).unwrap(), (2, false));
        assert_eq!(farthest_on_right(&tri(), 1, 2, 0).unwrap(), (0, false));
        assert_eq!(farthest_on_right(&sq, 0, 3, 0), Err(Error::EmptyRightChain(0, 3)));
        // A horizontal chord in a hexagon with a horizontal top edge.
        let hex: Polygon<i64> = parse_polygon("0 0\n-1 1\n0 2\n2 2\n3 1\n2 0\n").unwrap();
        assert_eq!(farthest_on_right(&hex, 5, 0, 0).unwrap(), (2, true));
    }

    #[test]
    fn stability_examples() {
        assert!(is_3stable(&tri(), VertexTriangle::new(0, 1, 2, 3)));
        assert!(is_3stable(&square(), VertexTriangle::new(0, 1, 2, 4)));
        let p = random_convex(9, 5, 50).unwrap();
        assert!(!is_3stable(&p, VertexTriangle::new(0, 1, 2, 9)));
    }

    #[test]
    fn rooted_examples() {
        assert_eq!(largest_rooted_triangle(&tri(), 0), (1, 2));
        let sq = square();
        let (b, c) = largest_rooted_triangle(&sq, 0);
        assert_eq!(VertexTriangle::new(0, b, c, 4).area(&sq), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn climb_restores_stability_of_b_and_c() {
        for seed in 0..40 {
            let p = random_convex(15, seed, 1000).unwrap();
            let (b, c) = largest_rooted_triangle(&p, 0);
            let mut counters = Counters::default();
            let mut k = Kernel::new(&p, &mut counters);
            if k.height(b, c, 1, 0) != Ordering::Greater {
                continue;
            }
            let (a1, b1, c1) = climb(&p, 0, b, c);
            assert_eq!(a1, 1);
            assert!(k.locally_highest(b1, c1, a1) && k.locally_highest(c1, a1, b1));
            assert_eq!(orientation(p.vertex(a1), p.vertex(b1), p.vertex(c1)), -1);
        }
    }

    #[test]
    fn small_enumerations() {
        let t = enumerate_all_3stable(&tri()).unwrap();
        assert_eq!(t.into_iter().collect::<Vec<_>>(), vec![VertexTriangle::new(0, 1, 2, 3)]);
        let sq = square();
        let all = enumerate_all_3stable(&sq).unwrap();
        assert_eq!(all.len(), 4);
        for t in &all {
            assert_eq!(t.area(&sq), BigRational::new(1.into(), 2.into()));
        }
        assert_eq!(max_area_triangle(&tri()).unwrap().1, BigRational::new(9.into(), 2.into()));
    }

    #[test]
    fn bad_seed_is_rejected() {
        let p = random_convex(9, 5, 50).unwrap();
        assert_eq!(
            rotate_and_kill(&p, 0, 1, 2, &mut Counters::default()).map(|_| ()),
            Err(Error::NotThreeStable(0, 1, 2))
        );
    }

    #[test]
    fn trace_jsonl_shape() {
        let e = enumerate_all_3stable_detailed(&tri()).unwrap();
        let line = e.traces[0].to_jsonl(&tri());
        let first = line.lines().next().unwrap();
        assert!(first.starts_with(r#"{"B":"#), "{first}");
        assert!(first.contains(r#""decision":"KillC""#) || first.contains(r#""decision":"KillB""#));
    }
}
