use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// An exact integer ring element usable by the normal-form routines.
///
/// Implemented for `BigInt` (the default everywhere in the crate) and for
/// the fixed-width signed integers. Arithmetic in this module goes through
/// [`add`], [`sub`] and [`mul`], which panic on overflow instead of wrapping,
/// so a fixed-width instantiation either gives the exact answer or aborts.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("scalar cannot represent i64 value")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}

#[inline]
pub fn add<T: Scalar>(a: &T, b: &T) -> T {
    a.checked_add(b).expect("integer overflow in exact arithmetic")
}

#[inline]
pub fn sub<T: Scalar>(a: &T, b: &T) -> T {
    a.checked_sub(b).expect("integer overflow in exact arithmetic")
}

#[inline]
pub fn mul<T: Scalar>(a: &T, b: &T) -> T {
    a.checked_mul(b).expect("integer overflow in exact arithmetic")
}

/// `a - q * b`
#[inline]
pub fn sub_mul<T: Scalar>(a: &T, q: &T, b: &T) -> T {
    sub(a, &mul(q, b))
}

/// Euclidean remainder in `[0, |m|)`.
#[inline]
pub fn modulo<T: Scalar>(a: &T, m: &T) -> T {
    a.mod_floor(&m.abs())
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| add(&acc, &mul(x, y)))
}

/// Gcd of all entries; zero for the zero vector.
pub fn content<T: Scalar>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |g, x| g.gcd(x))
}

/// Divides by the content so the entries are coprime. The zero vector is
/// returned unchanged.
pub fn make_primitive<T: Scalar>(v: &mut [T]) {
    let g = content(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = x.div_floor(&g);
        }
    }
}

/// Extended gcd returning `(g, s, t)` with `s*a + t*b = g >= 0`.
pub fn xgcd<T: Scalar>(a: &T, b: &T) -> (T, T, T) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (T::one(), T::zero());
    let (mut t0, mut t1) = (T::zero(), T::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = sub_mul(&r0, &q, &r1);
        let s2 = sub_mul(&s0, &q, &s1);
        let t2 = sub_mul(&t0, &q, &t1);
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn xgcd_bezout() {
        for a in -20i64..20 {
            for b in -20i64..20 {
                let (g, s, t) = xgcd(&a, &b);
                assert_eq!(g, a.gcd(&b));
                assert_eq!(s * a + t * b, g);
            }
        }
    }

    #[test]
    fn primitive_vector() {
        let mut v: Vec<BigInt> = [4, 0, -4].iter().map(|&x| BigInt::from(x)).collect();
        make_primitive(&mut v);
        assert_eq!(v, [1, 0, -1].map(BigInt::from));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn fixed_width_overflow_panics() {
        let _ = mul(&i64::MAX, &2i64);
    }
}
