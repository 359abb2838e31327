//! The unit-pair sweep: like the vertex sweep, but the cursors step through
//! vertices and open edges alternately, and the kill test depends on which
//! kinds of unit the cursors hold.

use std::cmp::Ordering;

use serde::Serialize;

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::kernel::{Corner, Kernel};
use crate::polygon::{Polygon, Unit, UnitPair};
use crate::scalar::Scalar;
use crate::three_stable::{find_one, unwrap_seed, VertexTriangle};

/// One visited unit pair with its farthest-vertex annotation.
///
/// For a vertex pair `(v_j, v_k)`, `a_first..=a_last` are the clockwise-first
/// and clockwise-last vertices farthest from the chord `v_j v_k`. For an edge
/// pair `(e_j, e_k)`, `a_first` is the first farthest from `v_j v_k` and
/// `a_last` the last farthest from `v_{j+1} v_{k+1}`. Mixed pairs carry the
/// annotation of the chord between their terminal vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VisitRecord {
    pub pair: UnitPair,
    pub a_first: usize,
    pub a_last: usize,
    pub rotation: usize,
}

/// Sweeps `(u1, u2)` from `(v_s, v_t)` to `(v_t, v_r)`, returning every
/// visited pair in order.
pub fn generalized_rotate_and_kill<T: Scalar>(
    poly: &Polygon<T>,
    r: usize,
    s: usize,
    t: usize,
    counters: &mut Counters,
) -> Result<Vec<VisitRecord>> {
    sweep(poly, r, s, t, 0, counters)
}

fn sweep<T: Scalar>(
    poly: &Polygon<T>,
    r: usize,
    s: usize,
    t: usize,
    rotation: usize,
    counters: &mut Counters,
) -> Result<Vec<VisitRecord>> {
    let n = poly.len();
    let (r, s, t) = (r % n, s % n, t % n);
    if r == s || s == t || t == r || !Kernel::new(poly, counters).stable(r, s, t) {
        return Err(Error::NotThreeStable(r, s, t));
    }
    let (s0, t0, r0) = unwrap_seed(n, r, s, t);
    let (end1, end2) = (2 * t0, 2 * r0);

    let mut kern = Kernel::new(poly, counters);
    let mut visits = Vec::new();
    let (mut u1, mut u2) = (2 * s0, 2 * t0);
    let mut a = r0;
    // Farthest vertex from the chord between the tails of an edge pair.
    let mut a_tail = 0;
    loop {
        let (j, k) = (u1.div_ceil(2), u2.div_ceil(2));
        if k <= j {
            return Err(Error::InvariantViolation(format!(
                "generalized sweep reached a pair with no right chain at ({u1}, {u2})"
            )));
        }
        let last = j + n - 1;
        let empty = k >= last;
        let (mut a_first, mut a_last) = (a, a);
        if !empty {
            a = kern.climb_height(j, k, a.max(k), last);
            (a_first, a_last) = (a, a);
            // The cursor may start on the second of two tied vertices.
            if a > k + 1 && kern.height(j, k, a - 1, a) == Ordering::Equal {
                a_first = a - 1;
            } else if a < last && kern.height(j, k, a + 1, a) == Ordering::Equal {
                a_last = a + 1;
            }
        }
        let (first, second) = (Unit::from_position(u1, n), Unit::from_position(u2, n));
        if u1 % 2 == 1 && u2 % 2 == 1 && k - 1 < j + n - 2 {
            a_tail = kern.climb_height(j - 1, k - 1, a_tail.max(k), j + n - 2);
            a_first = a_tail;
        }
        visits.push(VisitRecord {
            pair: UnitPair::new(first, second).expect("cursors hold distinct units"),
            a_first: a_first % n,
            a_last: a_last % n,
            rotation,
        });
        if (u1, u2) == (end1, end2) {
            return Ok(visits);
        }

        let kill_first = empty || {
            let (corner, strict) = match (first.is_vertex(), second.is_vertex()) {
                (true, true) => (Corner::I, false),
                (false, false) => (Corner::H, false),
                (true, false) => (Corner::J, true),
                (false, true) => (Corner::K, false),
            };
            match kern.corner(corner, j, k, a) {
                None | Some(Ordering::Less) => true,
                Some(Ordering::Equal) => !strict,
                Some(Ordering::Greater) => false,
            }
        };
        if kill_first && u1 < end1 {
            u1 += 1;
        } else if !kill_first && u2 < end2 {
            u2 += 1;
        } else {
            return Err(Error::InvariantViolation(format!(
                "generalized sweep left its range at {first:?}, {second:?}"
            )));
        }
        kern.counters.cursor_advances += 1;
    }
}

/// The three seeded sweeps, tagged by rotation.
pub fn collect_visit_pairs<T: Scalar>(poly: &Polygon<T>, counters: &mut Counters) -> Result<Vec<VisitRecord>> {
    let seed = find_one(poly, counters)?;
    collect_from_seed(poly, seed, counters)
}

pub(crate) fn collect_from_seed<T: Scalar>(
    poly: &Polygon<T>,
    seed: VertexTriangle,
    counters: &mut Counters,
) -> Result<Vec<VisitRecord>> {
    let [r, s, t] = seed.indices();
    let mut all = Vec::new();
    for (rotation, (x, y, z)) in [(r, s, t), (s, t, r), (t, r, s)].into_iter().enumerate() {
        all.extend(sweep(poly, x, y, z, rotation, counters)?);
    }
    Ok(all)
}
