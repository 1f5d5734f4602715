//! Exact computations on the Kunz cone: numerical semigroups and their Kunz
//! nilsemigroups, the face lattice of the cone, and the decision of which
//! faces contain numerical semigroups, with witnesses and certificates.
//!
//! The linear algebra in [`exactla`] is generic over an exact integer
//! [`Scalar`](exactla::Scalar); the rest of the crate works over [`Int`].

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod exactla;
pub mod kunzcone;
pub mod nilsemigroup;
pub mod numsemigroup;

pub use error::{KunzError, Result};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = num_bigint::BigInt;
/// Exact rational number.
pub type Rational = num_rational::BigRational;
/// Integer matrix over [`Int`].
pub type IntegerMatrix = exactla::Matrix<Int>;
/// Sublattice of `Z^n` over [`Int`] in canonical Hermite form.
pub type LatticeBasis = exactla::Lattice<Int>;

/// Integer multiple of `x` by the least common denominator of its entries.
pub fn clear_denominators(x: &[Rational]) -> Vec<Int> {
    use num_integer::Integer;
    let l = x.iter().fold(Int::from(1), |acc, q| acc.lcm(q.denom()));
    x.iter().map(|q| (q * Rational::from_integer(l.clone())).to_integer()).collect()
}

/// Serializes integers as decimal strings so no precision is lost in JSON.
pub fn serialize_ints<S: serde::Serializer>(v: &[Int], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}
