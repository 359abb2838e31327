//! Exact planar primitives.
//!
//! Conventions: `orientation(p, q, r) = +1` when `r` is left of the directed
//! line `p -> q`. The *signed height* of a point `x` over a directed line
//! `b -> c` is `-cross(c - b, x - b)`, positive on the right. Heights are never
//! normalised by `|c - b|`; comparisons over a common line share that factor.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T> Point<T> {
    pub const fn new(x: T, y: T) -> Self {
        Point { x, y }
    }
}

impl<T: Scalar> Point<T> {
    pub fn to_rational(&self) -> Point<BigRational> {
        Point::new(self.x.to_rational(), self.y.to_rational())
    }

    pub fn try_from_rational(p: &Point<BigRational>) -> Option<Self> {
        Some(Point::new(T::from_rational(&p.x)?, T::from_rational(&p.y)?))
    }
}

impl<T: fmt::Display> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A finite point or the point at infinity of a pair of rays that never meet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedPoint<T> {
    Finite(Point<T>),
    AtInfinity,
}

impl<T> ExtendedPoint<T> {
    pub fn finite(&self) -> Option<&Point<T>> {
        match self {
            ExtendedPoint::Finite(p) => Some(p),
            ExtendedPoint::AtInfinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedPoint::AtInfinity)
    }
}

/// Convert an [`Ordering`] into `-1`, `0`, `+1`.
pub fn sign_of(ord: Ordering) -> i8 {
    ord as i8
}

// ---------------------------------------------------------------------------
// Predicate kernel
// ---------------------------------------------------------------------------

pub(crate) type RPoint<'a, R> = [&'a R; 2];

/// A polynomial predicate over `N` points, evaluable in any exact ring.
/// `eval` returns `None` only on arithmetic overflow.
pub(crate) trait Predicate<const N: usize> {
    type Output;
    fn eval<R: Ring>(&self, pts: [RPoint<'_, R>; N]) -> Option<Self::Output>;
}

/// Evaluate `pred` in the scalar's wide ring, falling back to big rationals.
#[inline]
pub(crate) fn exact<T: Scalar, P: Predicate<N>, const N: usize>(
    pred: &P,
    pts: [&Point<T>; N],
) -> P::Output {
    let wide = pts.map(|p| [p.x.widen(), p.y.widen()]);
    if let Some(out) = pred.eval(wide.each_ref().map(|[x, y]| [&**x, &**y])) {
        return out;
    }
    let big = pts.map(|p| [p.x.to_rational(), p.y.to_rational()]);
    pred.eval(big.each_ref().map(|[x, y]| [x, y]))
        .expect("rational arithmetic does not overflow")
}

#[inline]
pub(crate) fn sub<R: Ring>(a: &R, b: &R) -> Option<R> {
    a.checked_sub(b)
}

#[inline]
pub(crate) fn mul<R: Ring>(a: &R, b: &R) -> Option<R> {
    a.checked_mul(b)
}

/// `cross(q - p, r - s)`.
#[inline]
pub(crate) fn cross4<R: Ring>(
    p: RPoint<'_, R>,
    q: RPoint<'_, R>,
    s: RPoint<'_, R>,
    r: RPoint<'_, R>,
) -> Option<R> {
    let ux = sub(q[0], p[0])?;
    let uy = sub(q[1], p[1])?;
    let vx = sub(r[0], s[0])?;
    let vy = sub(r[1], s[1])?;
    mul(&ux, &vy)?.checked_sub(&mul(&uy, &vx)?)
}

#[inline]
pub(crate) fn cmp_zero<R: Ring>(v: &R) -> Ordering {
    if v.is_positive() {
        Ordering::Greater
    } else if v.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

pub(crate) struct Orient;

impl Predicate<3> for Orient {
    type Output = Ordering;
    #[inline]
    fn eval<R: Ring>(&self, [p, q, r]: [RPoint<'_, R>; 3]) -> Option<Ordering> {
        Some(cmp_zero(&cross4(p, q, p, r)?))
    }
}

/// Compares signed heights of `x` and `y` over the directed line `b -> c`.
/// `h(x) - h(y) = cross(c - b, y - x)`.
pub(crate) struct CmpHeight;

impl Predicate<4> for CmpHeight {
    type Output = Ordering;
    #[inline]
    fn eval<R: Ring>(&self, [b, c, x, y]: [RPoint<'_, R>; 4]) -> Option<Ordering> {
        Some(cmp_zero(&cross4(b, c, x, y)?))
    }
}

/// Compares unsigned distances of `x` and `y` to the line through `b`, `c`.
pub(crate) struct CmpDist;

impl Predicate<4> for CmpDist {
    type Output = Ordering;
    fn eval<R: Ring>(&self, [b, c, x, y]: [RPoint<'_, R>; 4]) -> Option<Ordering> {
        let dx = cross4(b, c, b, x)?.abs();
        let dy = cross4(b, c, b, y)?.abs();
        Some(dx.cmp(&dy))
    }
}

/// Compares `|cross(q - p, r - p)|` with `|cross(q2 - p2, r2 - p2)|`.
pub(crate) struct CmpArea;

impl Predicate<6> for CmpArea {
    type Output = Ordering;
    fn eval<R: Ring>(&self, [p, q, r, p2, q2, r2]: [RPoint<'_, R>; 6]) -> Option<Ordering> {
        let a = cross4(p, q, p, r)?.abs();
        let b = cross4(p2, q2, p2, r2)?.abs();
        Some(a.cmp(&b))
    }
}

/// Signed height of `x` over `vj -> vk` compared against the height of the
/// intersection of the ray from `vj` along `a1 - a0` with the ray from `vk`
/// along `b1 - b0`. `None` when the rays do not meet (the corner is at
/// infinity).
pub(crate) struct CmpCorner;

impl Predicate<7> for CmpCorner {
    type Output = Option<Ordering>;
    fn eval<R: Ring>(
        &self,
        [vj, vk, a0, a1, b0, b1, x]: [RPoint<'_, R>; 7],
    ) -> Option<Option<Ordering>> {
        // vj + t*a = vk + s*b with w = vk - vj:
        //   t = cross(w, b) / cross(a, b),  s = cross(w, a) / cross(a, b).
        let den = cross4(a0, a1, b0, b1)?;
        let den_sign = cmp_zero(&den);
        if den_sign == Ordering::Equal {
            return Some(None);
        }
        let t_num = cross4(vj, vk, b0, b1)?;
        let s_num = cross4(vj, vk, a0, a1)?;
        if cmp_zero(&t_num) == den_sign.reverse() || cmp_zero(&s_num) == den_sign.reverse() {
            return Some(None);
        }
        // h(corner) = -t_num * s_num / den and h(x) = -cross(w, x - vj); both
        // sides are negated, so compare the un-negated values and reverse.
        let hx = cross4(vj, vk, vj, x)?;
        let ord = R::cmp_products(&hx, &den, &t_num, &s_num)?;
        Some(Some(if den_sign == Ordering::Less { ord } else { ord.reverse() }))
    }
}

/// `0 < num / den < 1`, given signs and the comparison of `|num|` with `|den|`.
#[inline]
fn unit_open<R: Ring>(num: &R, den: &R) -> bool {
    let d = cmp_zero(den);
    d != Ordering::Equal && cmp_zero(num) == d && num.abs() < den.abs()
}

/// The line through `x` parallel to `b0 -> b1` meets the segment `a0 a1`
/// strictly between its endpoints.
pub(crate) struct ParallelMeetInside;

impl Predicate<5> for ParallelMeetInside {
    type Output = bool;
    fn eval<R: Ring>(&self, [a0, a1, b0, b1, x]: [RPoint<'_, R>; 5]) -> Option<bool> {
        let den = cross4(a0, a1, b0, b1)?;
        let num = cross4(a0, x, b0, b1)?;
        Some(unit_open(&num, &den))
    }
}

/// The midpoint of the intersections of line `a0 a1` with lines `b0 b1` and
/// `c0 c1` lies strictly inside the segment `a0 a1`.
pub(crate) struct MidMeetInside;

impl Predicate<6> for MidMeetInside {
    type Output = bool;
    fn eval<R: Ring>(&self, [a0, a1, b0, b1, c0, c1]: [RPoint<'_, R>; 6]) -> Option<bool> {
        // Parameters along a0 -> a1 are n1 / d1 and n2 / d2; their mean lies
        // in (0, 1) iff 0 < (n1 d2 + n2 d1) / (2 d1 d2) < 1.
        let d1 = cross4(a0, a1, b0, b1)?;
        let d2 = cross4(a0, a1, c0, c1)?;
        let (s1, s2) = (cmp_zero(&d1), cmp_zero(&d2));
        if s1 == Ordering::Equal || s2 == Ordering::Equal {
            return Some(false);
        }
        let n1 = cross4(a0, b0, b0, b1)?;
        let n2 = cross4(a0, c0, c0, c1)?;
        let positive = s1 == s2;
        let want = if positive { Ordering::Greater } else { Ordering::Less };
        let above_zero = R::cmp_products(&n1, &d2, &R::zero().checked_sub(&n2)?, &d1)? == want;
        let below_one = R::cmp_products(&d2, &sub(&n1, &d1)?, &d1, &sub(&d2, &n2)?)? == want.reverse();
        Some(above_zero && below_one)
    }
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

/// Sign of `cross(q - p, r - p)`: `+1` counterclockwise, `-1` clockwise.
pub fn orientation<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> i8 {
    sign_of(exact(&Orient, [p, q, r]))
}

/// Orders the distances of `x` and `y` to the line through `b` and `c`.
pub fn dist_compare<T: Scalar>(
    b: &Point<T>,
    c: &Point<T>,
    x: &Point<T>,
    y: &Point<T>,
) -> Result<Ordering> {
    if b == c {
        return Err(Error::DegenerateLine);
    }
    Ok(exact(&CmpDist, [b, c, x, y]))
}

/// As [`dist_compare`], with a point at infinity being farther than any
/// finite point.
pub fn dist_compare_ext<T: Scalar>(
    b: &Point<T>,
    c: &Point<T>,
    x: &Point<T>,
    y: &ExtendedPoint<T>,
) -> Result<Ordering> {
    match y {
        ExtendedPoint::Finite(y) => dist_compare(b, c, x, y),
        ExtendedPoint::AtInfinity if b == c => Err(Error::DegenerateLine),
        ExtendedPoint::AtInfinity => Ok(Ordering::Less),
    }
}

/// Intersection of the rays `o1 + t*d1` and `o2 + s*d2` (`t, s >= 0`).
/// Parallel rays never meet, even when collinear.
pub fn ray_intersect(
    o1: &Point<BigRational>,
    d1: &Point<BigRational>,
    o2: &Point<BigRational>,
    d2: &Point<BigRational>,
) -> Result<ExtendedPoint<BigRational>> {
    if (d1.x.is_zero() && d1.y.is_zero()) || (d2.x.is_zero() && d2.y.is_zero()) {
        return Err(Error::ZeroDirection);
    }
    let cross = |ax: &BigRational, ay: &BigRational, bx: &BigRational, by: &BigRational| {
        ax * by - ay * bx
    };
    let den = cross(&d1.x, &d1.y, &d2.x, &d2.y);
    if den.is_zero() {
        return Ok(ExtendedPoint::AtInfinity);
    }
    let wx = &o2.x - &o1.x;
    let wy = &o2.y - &o1.y;
    let t = cross(&wx, &wy, &d2.x, &d2.y) / &den;
    let s = cross(&wx, &wy, &d1.x, &d1.y) / &den;
    if t.is_negative() || s.is_negative() {
        return Ok(ExtendedPoint::AtInfinity);
    }
    Ok(ExtendedPoint::Finite(Point::new(
        &o1.x + &t * &d1.x,
        &o1.y + &t * &d1.y,
    )))
}

/// Orders the signed heights of `x` and `y` over the directed line `b -> c`.
#[inline]
pub fn height_cmp<T: Scalar>(b: &Point<T>, c: &Point<T>, x: &Point<T>, y: &Point<T>) -> Ordering {
    exact(&CmpHeight, [b, c, x, y])
}

/// Orders the unsigned areas of triangles `(a, b, c)` and `(d, e, f)`.
pub fn area_cmp<T: Scalar>(
    a: &Point<T>,
    b: &Point<T>,
    c: &Point<T>,
    d: &Point<T>,
    e: &Point<T>,
    f: &Point<T>,
) -> Ordering {
    exact(&CmpArea, [a, b, c, d, e, f])
}

/// Twice the signed area of `(a, b, c)`; positive for counterclockwise.
pub fn double_area(a: &Point<BigRational>, b: &Point<BigRational>, c: &Point<BigRational>) -> BigRational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Unsigned area of a triangle.
pub fn triangle_area(a: &Point<BigRational>, b: &Point<BigRational>, c: &Point<BigRational>) -> BigRational {
    double_area(a, b, c).abs() / BigRational::from_integer(2.into())
}

/// Midpoint of `p` and `q`.
pub fn midpoint(p: &Point<BigRational>, q: &Point<BigRational>) -> Point<BigRational> {
    let two = BigRational::from_integer(2.into());
    Point::new((&p.x + &q.x) / &two, (&p.y + &q.y) / &two)
}

/// `true` when `p` lies on the closed segment `[a, b]`.
pub fn on_segment(a: &Point<BigRational>, b: &Point<BigRational>, p: &Point<BigRational>) -> bool {
    orientation(a, b, p) == 0
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(x: i64, y: i64) -> Point<i64> {
        Point::new(x, y)
    }

    fn q(x: i64, y: i64) -> Point<BigRational> {
        Point::new(
            BigRational::from_integer(BigInt::from(x)),
            BigRational::from_integer(BigInt::from(y)),
        )
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), 1);
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(2, 0)), 0);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 1)), -1);
    }

    #[test]
    fn dist_compare_examples() {
        let cmp = |b, c, x, y| dist_compare(&b, &c, &x, &y).unwrap();
        assert_eq!(cmp(p(0, 0), p(1, 0), p(5, 2), p(-3, 1)), Ordering::Greater);
        assert_eq!(cmp(p(0, 0), p(1, 0), p(0, 3), p(9, -3)), Ordering::Equal);
        assert_eq!(cmp(p(0, 0), p(0, 1), p(1, 7), p(2, -4)), Ordering::Less);
        assert_eq!(dist_compare(&p(1, 1), &p(1, 1), &p(0, 0), &p(2, 2)), Err(Error::DegenerateLine));
    }

    #[test]
    fn dist_compare_ext_examples() {
        let b = p(0, 0);
        let c = p(1, 0);
        assert_eq!(dist_compare_ext(&b, &c, &p(0, 100), &ExtendedPoint::AtInfinity), Ok(Ordering::Less));
        assert_eq!(
            dist_compare_ext(&b, &c, &p(0, 2), &ExtendedPoint::Finite(p(3, 1))),
            Ok(Ordering::Greater)
        );
        assert_eq!(
            dist_compare_ext(&b, &c, &p(5, 1), &ExtendedPoint::Finite(p(0, 1))),
            Ok(Ordering::Equal)
        );
        assert_eq!(
            dist_compare_ext(&b, &b, &p(5, 1), &ExtendedPoint::AtInfinity),
            Err(Error::DegenerateLine)
        );
    }

    #[test]
    fn ray_intersect_examples() {
        assert_eq!(
            ray_intersect(&q(0, 0), &q(1, 0), &q(0, 1), &q(1, -1)).unwrap(),
            ExtendedPoint::Finite(q(1, 0))
        );
        assert!(ray_intersect(&q(0, 0), &q(1, 0), &q(0, 1), &q(1, 0)).unwrap().is_infinite());
        assert!(ray_intersect(&q(0, 0), &q(1, 0), &q(-1, 1), &q(-1, -1)).unwrap().is_infinite());
        assert_eq!(ray_intersect(&q(0, 0), &q(0, 0), &q(0, 1), &q(1, 0)), Err(Error::ZeroDirection));
    }

    #[test]
    fn overflow_falls_back_to_rationals() {
        // Products of these differences exceed i128 in the degree-4 kernel.
        let big = i64::MAX / 2;
        let b = p(-big, -big);
        let c = p(big, -big + 1);
        let x = p(0, big);
        let y = p(1, big);
        let fast = height_cmp(&b, &c, &x, &y);
        let slow = height_cmp(&b.to_rational(), &c.to_rational(), &x.to_rational(), &y.to_rational());
        assert_eq!(fast, slow);

        let corner = exact(&CmpCorner, [&b, &c, &x, &y, &c, &b, &x]);
        let corner_big = exact(
            &CmpCorner,
            [&b, &c, &x, &y, &c, &b, &x].map(|pt| pt.to_rational()).each_ref(),
        );
        assert_eq!(corner, corner_big);
    }

    #[test]
    fn area_comparison() {
        assert_eq!(area_cmp(&p(0, 0), &p(2, 0), &p(0, 2), &p(0, 0), &p(0, 1), &p(4, 0)), Ordering::Equal);
        assert_eq!(area_cmp(&p(0, 0), &p(2, 0), &p(0, 3), &p(0, 0), &p(0, 1), &p(4, 0)), Ordering::Greater);
    }

    #[test]
    fn corner_kernel_matches_constructed_intersection() {
        // Ray from (0,0) along +x meets ray from (0,1) along (1,-1) at (1,0).
        let vj = p(0, 0);
        let vk = p(0, 1);
        let a0 = p(0, 0);
        let a1 = p(1, 0);
        let b0 = p(0, 0);
        let b1 = p(1, -1);
        // Height over vj -> vk (pointing up) is positive on the right (+x).
        for (x, expect) in [(p(1, 5), Ordering::Equal), (p(2, 0), Ordering::Greater), (p(0, 3), Ordering::Less)] {
            assert_eq!(exact(&CmpCorner, [&vj, &vk, &a0, &a1, &b0, &b1, &x]), Some(expect));
        }
        // Parallel directions.
        assert_eq!(exact(&CmpCorner, [&vj, &vk, &a0, &a1, &a0, &a1, &p(1, 1)]), None);
    }
}
