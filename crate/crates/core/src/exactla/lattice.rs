use num_rational::Ratio;
use num_traits::Zero;

use super::matrix::Matrix;
use super::normal_form::{hermite_normal_form, hermite_with_transform, smith_normal_form};
use super::scalar::{self, Scalar};
use crate::error::{KunzError, Result};

/// A sublattice of `Z^n`, stored by its canonical Hermite basis.
///
/// Equal lattices have identical stored bases, so `==` is lattice equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice<T> {
    ambient_dim: usize,
    basis: Matrix<T>,
}

impl<T: Scalar> Lattice<T> {
    /// The lattice spanned by the rows of `generators`.
    pub fn from_generators(generators: &Matrix<T>) -> Self {
        let (basis, _) = hermite_normal_form(generators);
        Lattice { ambient_dim: generators.ncols(), basis }
    }

    pub fn from_rows<R: AsRef<[T]>>(ambient_dim: usize, rows: &[R]) -> Result<Self> {
        Ok(Self::from_generators(&Matrix::from_rows(ambient_dim, rows)?))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Lattice { ambient_dim, basis: Matrix::empty(ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Lattice { ambient_dim, basis: Matrix::identity(ambient_dim) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[T]> {
        self.basis.row_iter()
    }

    fn pivots(&self) -> Vec<usize> {
        self.basis_rows()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero"))
            .collect()
    }

    fn check_len(&self, v: &[T]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(KunzError::DimensionMismatch { expected: self.ambient_dim, got: v.len() });
        }
        Ok(())
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains(&self, v: &[T]) -> Result<bool> {
        self.check_len(v)?;
        let mut rest = v.to_vec();
        for (row, p) in self.basis_rows().zip(self.pivots()) {
            if !rest[p].is_multiple_of(&row[p]) {
                return Ok(false);
            }
            let q = rest[p].div_floor(&row[p]);
            for (x, b) in rest.iter_mut().zip(row) {
                *x = scalar::sub_mul(x, &q, b);
            }
        }
        Ok(rest.iter().all(|x| x.is_zero()))
    }

    /// Whether `other` is a sublattice of `self`.
    pub fn contains_lattice(&self, other: &Lattice<T>) -> Result<bool> {
        for r in other.basis_rows() {
            if !self.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The smallest positive `n` with `n * v` in the lattice, or `None` when
    /// `v` is outside the rational span.
    pub fn multiplier_of(&self, v: &[T]) -> Result<Option<T>> {
        self.check_len(v)?;
        let mut rest: Vec<Ratio<T>> = v.iter().map(|x| Ratio::from_integer(x.clone())).collect();
        let mut denominator = T::one();
        for (row, p) in self.basis_rows().zip(self.pivots()) {
            let c = rest[p].clone() / Ratio::from_integer(row[p].clone());
            if c.is_zero() {
                continue;
            }
            denominator = denominator.lcm(c.denom());
            for (x, b) in rest.iter_mut().zip(row) {
                *x = x.clone() - c.clone() * Ratio::from_integer(b.clone());
            }
        }
        if rest.iter().all(|x| x.is_zero()) {
            Ok(Some(denominator))
        } else {
            Ok(None)
        }
    }

    /// `span_Q(L) ∩ Z^n`.
    ///
    /// Computed from the Smith form `U B V = D`: the rows of `V^-1` that
    /// match nonzero invariants span the same rational space as `B` and are
    /// part of a unimodular matrix, hence saturated.
    pub fn saturate(&self) -> Self {
        if self.rank() == 0 {
            return self.clone();
        }
        let smith = smith_normal_form(&self.basis);
        let r = smith.invariants.len();
        let rows: Vec<Vec<T>> = (0..r).map(|i| smith.right_inverse.row(i).to_vec()).collect();
        Self::from_rows(self.ambient_dim, &rows).expect("row width preserved")
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    /// `{ v in Z^n : v . w = 0 for all w in L }`.
    ///
    /// The transform rows that annihilate `B^T` in its Hermite form give a
    /// basis of the integer kernel.
    pub fn orthogonal_complement(&self) -> Self {
        let n = self.ambient_dim;
        if self.rank() == 0 {
            return Self::full(n);
        }
        let h = hermite_with_transform(&self.basis.transpose());
        let rows: Vec<Vec<T>> = (h.rank..n).map(|i| h.transform.row(i).to_vec()).collect();
        Self::from_rows(n, &rows).expect("row width preserved")
    }

    /// Image of the coordinate embedding `Z^k -> Z^n` that places
    /// coordinate `i` at position `positions[i]`.
    pub fn embed(&self, ambient_dim: usize, positions: &[usize]) -> Result<Self> {
        if positions.len() != self.ambient_dim {
            return Err(KunzError::DimensionMismatch { expected: self.ambient_dim, got: positions.len() });
        }
        let rows: Vec<Vec<T>> = self
            .basis_rows()
            .map(|r| {
                let mut out = vec![T::zero(); ambient_dim];
                for (x, &p) in r.iter().zip(positions) {
                    out[p] = x.clone();
                }
                out
            })
            .collect();
        Self::from_rows(ambient_dim, &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lat(n: usize, rows: &[&[i64]]) -> Lattice<BigInt> {
        Lattice::from_rows(n, &rows.iter().map(|r| v(r)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn saturate_examples() {
        assert_eq!(lat(3, &[&[4, 0, -4]]).saturate(), lat(3, &[&[1, 0, -1]]));
        assert_eq!(lat(2, &[&[2, 0], &[0, 2]]).saturate(), Lattice::full(2));
        let l = lat(8, &[&[0, 3, 0, 1, 0, -2, 0, 0], &[0, 1, 0, 3, 0, 0, -2, 0]]);
        let target = v(&[0, 2, 0, 2, 0, -1, -1, 0]);
        assert!(!l.contains(&target).unwrap());
        let sat = l.saturate();
        assert!(sat.contains(&target).unwrap());
        assert_eq!(sat.rank(), 2);
        assert!(!l.is_saturated());
        assert!(sat.is_saturated());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(lat(2, &[&[2, 0]]).orthogonal_complement(), lat(2, &[&[0, 1]]));
        assert_eq!(Lattice::<BigInt>::zero(3).orthogonal_complement(), Lattice::full(3));
        let c = lat(3, &[&[1, 0, -1]]).orthogonal_complement();
        assert_eq!(c, lat(3, &[&[1, 0, 1], &[0, 1, 0]]));
        for r in c.basis_rows() {
            assert_eq!(scalar::dot(r, &v(&[1, 0, -1])), BigInt::from(0));
        }
    }

    #[test]
    fn membership() {
        let l = lat(3, &[&[2, 0, 0], &[0, 3, 0]]);
        assert!(l.contains(&v(&[0, 0, 0])).unwrap());
        assert!(l.contains(&v(&[4, -3, 0])).unwrap());
        assert!(!l.contains(&v(&[1, 0, 0])).unwrap());
        assert!(!l.contains(&v(&[0, 0, 1])).unwrap());
        assert!(matches!(l.contains(&v(&[1, 2])), Err(KunzError::DimensionMismatch { .. })));
    }

    #[test]
    fn multipliers() {
        let l = lat(3, &[&[3, -1, -1], &[-1, -1, 3]]);
        assert_eq!(l.multiplier_of(&v(&[1, 0, -1])).unwrap(), Some(BigInt::from(4)));
        assert_eq!(l.multiplier_of(&v(&[1, 0, 0])).unwrap(), None);
        assert_eq!(l.multiplier_of(&v(&[0, 0, 0])).unwrap(), Some(BigInt::from(1)));
    }

    #[test]
    fn generic_over_machine_integers() {
        let l = Lattice::<i64>::from_rows(2, &[vec![2, 0]]).unwrap();
        assert_eq!(l.orthogonal_complement().basis().to_rows(), vec![vec![0, 1]]);
        assert_eq!(l.saturate().basis().to_rows(), vec![vec![1, 0]]);
    }
}
