//! Random strictly convex lattice polygons (Valtr's construction).
//!
//! Two random point sets on a line are each split into a lower and an upper
//! chain, giving `m` coordinate increments per axis that sum to zero. Pairing
//! them at random and sorting the vectors by angle yields a convex polygon.
//! Parallel vectors are summed, then random angular neighbours are summed
//! until exactly `n` remain.

use std::cmp::Ordering;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Polygon;
use crate::error::{Error, Result};
use crate::exact_geom::Point;

const ATTEMPTS: u32 = 12;
/// Keeps every coordinate sum and degree-2 predicate inside `i128`.
const MAX_BOUND: i64 = 1 << 61;

/// A deterministic strictly convex clockwise `n`-gon with integer
/// coordinates in `[-bound, bound]`.
pub fn random_convex(n: usize, seed: u64, bound: i64) -> Result<Polygon<i64>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    if bound < n as i64 || bound > MAX_BOUND {
        return Err(Error::InvalidArgument(format!(
            "bound must lie in [n, 2^61], got {bound} for n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..ATTEMPTS {
        let extra = (n / 32 + 4) << attempt.min(6);
        if let Some(poly) = try_once(n, n + extra, bound, &mut rng) {
            return Ok(poly);
        }
    }
    Err(Error::GenerationFailure { n, bound })
}

fn try_once(n: usize, m: usize, bound: i64, rng: &mut ChaCha8Rng) -> Option<Polygon<i64>> {
    let xs = increments(m, bound, rng);
    let mut ys = increments(m, bound, rng);
    ys.shuffle(rng);

    let mut vecs: Vec<(i64, i64)> =
        xs.into_iter().zip(ys).filter(|&(x, y)| x != 0 || y != 0).collect();
    vecs.sort_unstable_by(angle_cmp);
    vecs.dedup_by(|next, kept| {
        let parallel = angle_cmp(next, kept) == Ordering::Equal;
        if parallel {
            kept.0 += next.0;
            kept.1 += next.1;
        }
        parallel
    });
    if vecs.len() < n {
        return None;
    }

    // Sum random runs of angular neighbours. The last vector never merges
    // forward, so runs never wrap.
    let len = vecs.len();
    let mut merge = vec![false; len];
    for i in index::sample(rng, len - 1, len - n) {
        merge[i] = true;
    }
    let mut points = Vec::with_capacity(n);
    let (mut x, mut y) = (0i64, 0i64);
    let mut acc = (0i64, 0i64);
    for (i, v) in vecs.into_iter().enumerate() {
        acc = (acc.0 + v.0, acc.1 + v.1);
        if !merge[i] {
            points.push((x, y));
            x += acc.0;
            y += acc.1;
            acc = (0, 0);
        }
    }

    let (min_x, max_x) = min_max(points.iter().map(|p| p.0));
    let (min_y, max_y) = min_max(points.iter().map(|p| p.1));
    let (cx, cy) = (min_x + (max_x - min_x) / 2, min_y + (max_y - min_y) / 2);
    // Sorted by increasing angle the polygon is counterclockwise; validation
    // reverses it.
    let raw = points.into_iter().map(|(x, y)| Point::new(x - cx, y - cy)).collect();
    let mut poly = Polygon::validate(raw).ok()?;
    poly.reversed = false;
    Some(poly)
}

/// `m` increments summing to zero whose absolute values sum to at most
/// `2 * bound`.
fn increments(m: usize, bound: i64, rng: &mut ChaCha8Rng) -> Vec<i64> {
    let mut v: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=bound)).collect();
    v.sort_unstable();
    let (min, max) = (v[0], v[m - 1]);
    let mut out = Vec::with_capacity(m);
    let (mut top, mut bottom) = (min, min);
    for &x in &v[1..m - 1] {
        if rng.gen::<bool>() {
            out.push(x - top);
            top = x;
        } else {
            out.push(bottom - x);
            bottom = x;
        }
    }
    out.push(max - top);
    out.push(bottom - max);
    out
}

fn upper(v: &(i64, i64)) -> bool {
    v.1 > 0 || (v.1 == 0 && v.0 > 0)
}

/// Counterclockwise angle order starting at the positive x axis.
fn angle_cmp(a: &(i64, i64), b: &(i64, i64)) -> Ordering {
    match (upper(a), upper(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => {
            let cross = i128::from(a.0) * i128::from(b.1) - i128::from(a.1) * i128::from(b.0);
            0.cmp(&cross)
        }
    }
}

fn min_max(it: impl Iterator<Item = i64>) -> (i64, i64) {
    it.fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)))
}
