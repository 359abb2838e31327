//! Coordinate types.
//!
//! Every algorithm in this crate is generic over [`Scalar`], an exact
//! ordered ring. Predicates are evaluated in the scalar's [`Scalar::Wide`]
//! type with checked arithmetic; when that overflows, the same polynomial is
//! re-evaluated over [`BigRational`]. Both routes are exact, so the outcome of
//! a predicate never depends on which one ran.
//!
//! Floating-point types are deliberately not scalars.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio, Rational64};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive};

/// Exact ring in which predicate polynomials are evaluated.
pub trait Ring: Clone + Ord + Debug + Signed + CheckedAdd + CheckedSub + CheckedMul {
    /// Orders `a * b` against `c * d`; `None` on overflow.
    fn cmp_products(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Ordering> {
        Some(a.checked_mul(b)?.cmp(&c.checked_mul(d)?))
    }
}

impl Ring for BigInt {}
impl Ring for BigRational {}
impl Ring for Ratio<i128> {}

impl Ring for i128 {
    /// Exact for every input: products are formed in 256 bits.
    fn cmp_products(a: &i128, b: &i128, c: &i128, d: &i128) -> Option<Ordering> {
        let left = a.signum() * b.signum();
        let right = c.signum() * d.signum();
        if left != right {
            return Some(left.cmp(&right));
        }
        let lm = widening_mul(a.unsigned_abs(), b.unsigned_abs());
        let rm = widening_mul(c.unsigned_abs(), d.unsigned_abs());
        Some(if left < 0 { rm.cmp(&lm) } else { lm.cmp(&rm) })
    }
}

/// Full 256-bit product as `(high, low)`.
fn widening_mul(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (a1, a0) = (a >> 64, a & MASK);
    let (b1, b0) = (b >> 64, b & MASK);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & MASK) + (p10 & MASK);
    let low = (p00 & MASK) | (mid << 64);
    let high = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (high, low)
}

/// An exact coordinate type.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + Send + Sync + Signed + CheckedAdd + CheckedSub + CheckedMul + 'static
{
    /// Type wide enough that degree-4 predicates over typical inputs do not
    /// overflow. Overflow is still detected and handled.
    type Wide: Ring;

    fn widen(&self) -> Cow<'_, Self::Wide>;

    /// Lossless conversion to an arbitrary-precision rational.
    fn to_rational(&self) -> BigRational;

    /// `None` when `value` is not representable.
    fn from_rational(value: &BigRational) -> Option<Self>;

    /// Lossy conversion for rendering only.
    fn to_f64(&self) -> f64;
}

impl Scalar for i64 {
    type Wide = i128;

    #[inline]
    fn widen(&self) -> Cow<'_, i128> {
        Cow::Owned(i128::from(*self))
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(*self))
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        if value.is_integer() {
            value.to_integer().to_i64()
        } else {
            None
        }
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for i128 {
    type Wide = i128;

    #[inline]
    fn widen(&self) -> Cow<'_, i128> {
        Cow::Borrowed(self)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(*self))
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        if value.is_integer() {
            value.to_integer().to_i128()
        } else {
            None
        }
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for BigInt {
    type Wide = BigInt;

    fn widen(&self) -> Cow<'_, BigInt> {
        Cow::Borrowed(self)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        value.is_integer().then(|| value.to_integer())
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for Rational64 {
    type Wide = Ratio<i128>;

    fn widen(&self) -> Cow<'_, Ratio<i128>> {
        Cow::Owned(Ratio::new_raw(
            i128::from(*self.numer()),
            i128::from(*self.denom()),
        ))
    }

    fn to_rational(&self) -> BigRational {
        BigRational::new_raw(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        Some(Rational64::new_raw(
            value.numer().to_i64()?,
            value.denom().to_i64()?,
        ))
    }

    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

impl Scalar for BigRational {
    type Wide = BigRational;

    fn widen(&self) -> Cow<'_, BigRational> {
        Cow::Borrowed(self)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        Some(value.clone())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Parse `"p"` or `"p/q"` (optionally signed) into a reduced rational.
pub fn parse_rational(token: &str) -> Option<BigRational> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) if !d.starts_with(['+', '-']) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::from(1),
    };
    if den == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_parse_reduced() {
        let half = parse_rational("2/4").unwrap();
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(half.denom(), &BigInt::from(2));
        assert_eq!(parse_rational("-3").unwrap(), BigRational::from_integer((-3).into()));
        assert_eq!(parse_rational("+3/-1"), None);
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("1/2/3"), None);
    }

    proptest::proptest! {
        #[test]
        fn wide_product_comparison_is_exact(a: i128, b: i128, c: i128, d: i128) {
            let big = |v: i128| BigInt::from(v);
            let expect = (big(a) * big(b)).cmp(&(big(c) * big(d)));
            proptest::prop_assert_eq!(i128::cmp_products(&a, &b, &c, &d), Some(expect));
        }
    }

    #[test]
    fn wide_product_extremes() {
        let m = i128::MIN;
        assert_eq!(i128::cmp_products(&m, &m, &i128::MAX, &i128::MAX), Some(Ordering::Greater));
        assert_eq!(i128::cmp_products(&m, &1, &i128::MAX, &-1), Some(Ordering::Less));
        assert_eq!(i128::cmp_products(&0, &m, &m, &0), Some(Ordering::Equal));
    }

    #[test]
    fn i64_round_trips_only_integers() {
        let r = parse_rational("7/2").unwrap();
        assert_eq!(i64::from_rational(&r), None);
        assert_eq!(i64::from_rational(&parse_rational("-9").unwrap()), Some(-9));
        assert_eq!(Rational64::from_rational(&r), Some(Rational64::new(7, 2)));
    }
}
