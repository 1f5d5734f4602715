use std::fmt;

use super::scalar::{self, Scalar};
use crate::error::{KunzError, Result};

/// Dense row-major matrix over an exact integer scalar.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// A matrix with no rows and `cols` columns.
    pub fn empty(cols: usize) -> Self {
        Self::zeros(0, cols)
    }

    pub fn from_rows<R: AsRef<[T]>>(cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(KunzError::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_i64_rows(cols: usize, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<T>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| <T as Scalar>::from_i64(x)).collect())
            .collect();
        Self::from_rows(cols, &rows)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    pub fn push_row(&mut self, r: &[T]) -> Result<()> {
        if r.len() != self.cols {
            return Err(KunzError::DimensionMismatch { expected: self.cols, got: r.len() });
        }
        self.data.extend_from_slice(r);
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_matrix(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(KunzError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = scalar::add(&out[(i, j)], &scalar::mul(a, &other[(k, j)]));
                    out[(i, j)] = v;
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `v * self`.
    pub fn left_mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.rows {
            return Err(KunzError::DimensionMismatch { expected: self.rows, got: v.len() });
        }
        let mut out = vec![T::zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.row(i)) {
                *o = scalar::add(o, &scalar::mul(c, x));
            }
        }
        Ok(out)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] -= q * row[src]`
    pub fn row_sub_mul(&mut self, dst: usize, q: &T, src: usize) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = scalar::sub_mul(&self[(dst, j)], q, &self[(src, j)]);
            self[(dst, j)] = v;
        }
    }

    /// `col[dst] -= q * col[src]`
    pub fn col_sub_mul(&mut self, dst: usize, q: &T, src: usize) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = scalar::sub_mul(&self[(i, dst)], q, &self[(i, src)]);
            self[(i, dst)] = v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for x in self.row_mut(i) {
            *x = -x.clone();
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }

    /// Replaces rows `a`, `b` by `(s*a + t*b, u*a + v*b)`.
    pub fn combine_rows(&mut self, a: usize, b: usize, [s, t, u, v]: [&T; 4]) {
        for j in 0..self.cols {
            let (x, y) = (self[(a, j)].clone(), self[(b, j)].clone());
            self[(a, j)] = scalar::add(&scalar::mul(s, &x), &scalar::mul(t, &y));
            self[(b, j)] = scalar::add(&scalar::mul(u, &x), &scalar::mul(v, &y));
        }
    }

    /// Replaces columns `a`, `b` by `(s*a + t*b, u*a + v*b)`.
    pub fn combine_cols(&mut self, a: usize, b: usize, [s, t, u, v]: [&T; 4]) {
        for i in 0..self.rows {
            let (x, y) = (self[(i, a)].clone(), self[(i, b)].clone());
            self[(i, a)] = scalar::add(&scalar::mul(s, &x), &scalar::mul(t, &y));
            self[(i, b)] = scalar::add(&scalar::mul(u, &x), &scalar::mul(v, &y));
        }
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(|x| x.is_zero())
    }

    /// Rank over the rationals, by fraction-free elimination with rows kept
    /// primitive.
    pub fn rank(&self) -> usize {
        let mut work: Vec<Vec<T>> = self.to_rows();
        rank_of_rows(&mut work, self.cols)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

/// Rank of a list of rows; `rows` is used as scratch space.
fn rank_of_rows<T: Scalar>(rows: &mut [Vec<T>], cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pv = &pivot_row[c];
        for r in tail.iter_mut() {
            if r[c].is_zero() {
                continue;
            }
            let g = pv.gcd(&r[c]);
            let a = pv.div_floor(&g);
            let b = r[c].div_floor(&g);
            for j in c..cols {
                r[j] = scalar::sub(&scalar::mul(&a, &r[j]), &scalar::mul(&b, &pivot_row[j]));
            }
            scalar::make_primitive(r);
        }
        rank += 1;
    }
    rank
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cols == 0 {
            return write!(f, "[{} x 0]", self.rows);
        }
        f.debug_list().entries(self.data.chunks(self.cols)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small() {
        let m = Matrix::<i64>::from_i64_rows(3, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(Matrix::<i64>::empty(4).rank(), 0);
        assert_eq!(Matrix::<i64>::identity(5).rank(), 5);
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::<i64>::from_i64_rows(2, &[&[1, 2], &[3, 4]]).unwrap();
        let p = a.mul_matrix(&a.transpose()).unwrap();
        assert_eq!(p.to_rows(), vec![vec![5, 11], vec![11, 25]]);
        assert_eq!(a.left_mul_vec(&[1, -1]).unwrap(), vec![-2, -2]);
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows: Vec<Vec<i64>> = vec![vec![1, 2], vec![3]];
        assert!(Matrix::from_rows(2, &rows).is_err());
    }
}
