//! Index-addressed predicates shared by the sweeps. Indices may be unwrapped
//! (any non-negative integer); they are reduced modulo `n` on access.

use std::cmp::Ordering;

use crate::counters::Counters;
use crate::exact_geom::{exact, height_cmp, CmpCorner, Point};
use crate::polygon::Polygon;
use crate::scalar::Scalar;

/// The four corners of the region bounded by the rays
/// `r1 = v_j + t e_{k-1}`, `r2 = v_j + t e_k`, `r1' = v_k - s e_{j-1}` and
/// `r2' = v_k - s e_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Corner {
    /// `r1` meets `r1'`.
    H,
    /// `r2` meets `r2'`.
    I,
    /// `r1` meets `r2'`.
    J,
    /// `r2` meets `r1'`.
    K,
}

impl Corner {
    /// `((a0, a1), (b0, b1))`: the ray from `v_j` runs along `a1 - a0`, the
    /// ray from `v_k` along `b1 - b0`.
    pub(crate) fn rays(self, n: usize, j: usize, k: usize) -> ((usize, usize), (usize, usize)) {
        let before_k = (k + n - 1, k);
        let after_k = (k, k + 1);
        let before_j = (j, j + n - 1);
        let after_j = (j + 1, j);
        match self {
            Corner::H => (before_k, before_j),
            Corner::I => (after_k, after_j),
            Corner::J => (before_k, after_j),
            Corner::K => (after_k, before_j),
        }
    }
}

pub(crate) struct Kernel<'a, T> {
    pub poly: &'a Polygon<T>,
    pub n: usize,
    pub counters: &'a mut Counters,
}

impl<'a, T: Scalar> Kernel<'a, T> {
    pub fn new(poly: &'a Polygon<T>, counters: &'a mut Counters) -> Self {
        Kernel { poly, n: poly.len(), counters }
    }

    #[inline]
    pub fn v(&self, i: usize) -> &'a Point<T> {
        self.poly.vertex(i)
    }

    /// Height of `x` against `y` over the directed line `b -> c`.
    #[inline]
    pub fn height(&mut self, b: usize, c: usize, x: usize, y: usize) -> Ordering {
        self.counters.predicate_evals += 1;
        height_cmp(self.v(b), self.v(c), self.v(x), self.v(y))
    }

    /// Height of vertex `x` against `corner` of the pair `(j, k)`, over
    /// `v_j -> v_k`; `None` when the corner is at infinity.
    pub fn corner(&mut self, corner: Corner, j: usize, k: usize, x: usize) -> Option<Ordering> {
        self.counters.predicate_evals += 1;
        let ((a0, a1), (b0, b1)) = corner.rays(self.n, j, k);
        let pts = [j, k, a0, a1, b0, b1, x].map(|i| self.v(i));
        exact(&CmpCorner, pts)
    }

    /// `a` is at least as high over `b -> c` as both of its neighbours.
    #[inline]
    pub fn locally_highest(&mut self, a: usize, b: usize, c: usize) -> bool {
        let n = self.n;
        self.height(b, c, a, a + n - 1) != Ordering::Less
            && self.height(b, c, a, a + 1) != Ordering::Less
    }

    /// Local stability of the clockwise vertex triangle `(a, b, c)`. By
    /// unimodality of heights along a convex chain this equals the global
    /// definition.
    pub fn stable(&mut self, a: usize, b: usize, c: usize) -> bool {
        self.locally_highest(a, b, c) && self.locally_highest(b, c, a) && self.locally_highest(c, a, b)
    }

    /// Moves `a` clockwise while the next vertex is strictly higher over
    /// `b -> c`, never past `limit`.
    pub fn climb_height(&mut self, b: usize, c: usize, mut a: usize, limit: usize) -> usize {
        while a < limit && self.height(b, c, a + 1, a) == Ordering::Greater {
            a += 1;
            self.counters.cursor_advances += 1;
        }
        a
    }
}
