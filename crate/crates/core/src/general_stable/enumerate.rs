//! Final enumeration over the visited pairs. Vertex pairs try the units
//! between their two farthest vertices. Edge pairs are processed in runs
//! sharing an edge: the candidate third corners of consecutive pairs fall
//! into disjoint parallel stripes, so a run needs one scan of the units.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use super::gadget::{gadget, Mode};
use super::sweep::{collect_from_seed, VisitRecord};
use super::GTriangle;
use crate::counters::Counters;
use crate::error::Result;
use crate::exact_geom::height_cmp;
use crate::polygon::{Polygon, Unit};
use crate::scalar::Scalar;
use crate::three_stable::find_one;

/// Everything produced by a full generalized enumeration.
#[derive(Clone, Debug)]
pub struct GEnumeration {
    pub triangles: BTreeSet<GTriangle>,
    pub visits: Vec<VisitRecord>,
    pub counters: Counters,
}

/// All generally 3-stable triangles (representatives for segment classes).
pub fn enumerate_g3stable<T: Scalar>(poly: &Polygon<T>) -> Result<BTreeSet<GTriangle>> {
    Ok(enumerate_g3stable_detailed(poly)?.triangles)
}

pub fn enumerate_g3stable_detailed<T: Scalar>(poly: &Polygon<T>) -> Result<GEnumeration> {
    let n = poly.len();
    let mut counters = Counters::default();
    let seed = find_one(poly, &mut counters)?;
    let visits = collect_from_seed(poly, seed, &mut counters)?;
    let mut out = Vec::new();

    let mut seen = HashSet::with_capacity(visits.len());
    let mut edge_pairs = Vec::new();
    for rec in &visits {
        if !seen.insert(rec.pair) {
            continue;
        }
        match (rec.pair.first(), rec.pair.second()) {
            (Unit::Vertex(j), Unit::Vertex(k)) => {
                let span = (rec.a_last + n - rec.a_first) % n;
                for pos in 2 * rec.a_first..=2 * (rec.a_first + span) {
                    let u = Unit::from_position(pos, n);
                    gadget(poly, [u, Unit::Vertex(j), Unit::Vertex(k)], Mode::Local, &mut counters, &mut out);
                }
            }
            (Unit::Edge(j), Unit::Edge(k)) => edge_pairs.push((j, k, rec.a_first, rec.a_last)),
            _ => {}
        }
    }

    for run in runs(&edge_pairs) {
        batch(poly, run, &mut counters, &mut out);
    }
    Ok(GEnumeration { triangles: out.into_iter().collect(), visits, counters })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Axis {
    Row,
    Column,
}

/// Splits edge pairs, in visit order, into maximal runs sharing the first
/// edge (rows) or the second edge (columns).
/// `(j, k, a_first, a_last)` for a visited edge pair.
type EdgePair = (usize, usize, usize, usize);

fn runs(pairs: &[EdgePair]) -> Vec<(Axis, &[EdgePair])> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < pairs.len() {
        let mut end = start + 1;
        let axis = match pairs.get(end) {
            Some(p) if p.1 == pairs[start].1 => Axis::Column,
            _ => Axis::Row,
        };
        while end < pairs.len() {
            let same = match axis {
                Axis::Row => pairs[end].0 == pairs[start].0,
                Axis::Column => pairs[end].1 == pairs[start].1,
            };
            if !same {
                break;
            }
            end += 1;
        }
        out.push((axis, &pairs[start..end]));
        start = end;
    }
    out
}

/// A unit's range of heights: a single vertex, or the open range between an
/// edge's endpoints (given as `(low, high)` vertices).
#[derive(Clone, Copy)]
enum Span {
    At(usize),
    Open(usize, usize),
}

fn batch<T: Scalar>(
    poly: &Polygon<T>,
    (axis, run): (Axis, &[EdgePair]),
    counters: &mut Counters,
    out: &mut Vec<GTriangle>,
) {
    let n = poly.len();
    let (j0, k0, first, _) = run[0];
    let last = run[run.len() - 1].3;
    // Heights over the shared edge, oriented so that candidate units descend
    // clockwise and stripes are taken in decreasing pair index.
    let (b, c) = match axis {
        Axis::Row => (j0, j0 + 1),
        Axis::Column => (k0 + 1, k0),
    };
    let (pb, pc) = (poly.vertex(b), poly.vertex(c));
    let cmp = |x: usize, y: usize| height_cmp(pb, pc, poly.vertex(x), poly.vertex(y));

    let mut stripes: Vec<(usize, usize, usize)> = run
        .iter()
        .map(|&(j, k, _, _)| match axis {
            Axis::Row => (k, j, k),
            Axis::Column => (j, j, k),
        })
        .filter(|&(x, _, _)| {
            counters.predicate_evals += 1;
            cmp(x, x + 1) == Ordering::Less
        })
        .collect();
    stripes.reverse();

    let span = (last + n - first) % n;
    let end = 2 * (first + span);
    let mut pos = 2 * first;
    // Next candidate unit at or after `pos` on the descending side.
    let advance = |pos: &mut usize, counters: &mut Counters| -> Option<(Span, usize)> {
        while *pos <= end {
            let p = *pos;
            *pos += 1;
            counters.scan_moves += 1;
            counters.predicate_evals += 1;
            let span = match Unit::from_position(p, n) {
                Unit::Vertex(i) => (cmp(i + n - 1, i) == Ordering::Greater).then_some(Span::At(i)),
                Unit::Edge(i) => (cmp(i, i + 1) == Ordering::Greater).then_some(Span::Open(i + 1, i)),
            };
            if let Some(span) = span {
                return Some((span, p));
            }
        }
        None
    };

    let mut si = 0;
    let mut cur = advance(&mut pos, counters);
    while let (Some((span, upos)), Some(&(x, j, k))) = (cur, stripes.get(si)) {
        // Stripe: open range between the heights of v_x and v_{x+1}.
        let (lo, hi) = (x, x + 1);
        counters.predicate_evals += 2;
        let overlaps = match span {
            Span::At(v) => cmp(lo, v) == Ordering::Less && cmp(v, hi) == Ordering::Less,
            Span::Open(a, z) => cmp(lo, z) == Ordering::Less && cmp(a, hi) == Ordering::Less,
        };
        if overlaps {
            let u = Unit::from_position(upos, n);
            gadget(poly, [u, Unit::Edge(j), Unit::Edge(k)], Mode::Local, counters, out);
        }
        let low = match span {
            Span::At(v) | Span::Open(v, _) => v,
        };
        counters.scan_moves += 1;
        if cmp(low, lo) == Ordering::Less {
            si += 1;
        } else {
            cur = advance(&mut pos, counters);
        }
    }
}
