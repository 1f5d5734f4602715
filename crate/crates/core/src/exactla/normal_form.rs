//! Hermite and Smith normal forms.

use super::matrix::Matrix;
use super::scalar::{self, Scalar};

/// Row Hermite normal form together with the unimodular transform.
#[derive(Clone, Debug)]
pub struct Hermite<T> {
    /// `transform * input`; nonzero rows first, zero rows at the bottom.
    pub form: Matrix<T>,
    pub transform: Matrix<T>,
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
}

/// Row-style Hermite normal form with the zero rows dropped.
///
/// Pivots are positive and every entry above a pivot lies in `[0, pivot)`,
/// so two generating sets of the same row lattice produce identical output.
pub fn hermite_normal_form<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, usize) {
    let h = hermite_with_transform(m);
    let rows: Vec<Vec<T>> = (0..h.rank).map(|i| h.form.row(i).to_vec()).collect();
    (Matrix::from_rows(m.ncols(), &rows).expect("row width preserved"), h.rank)
}

pub fn hermite_with_transform<T: Scalar>(m: &Matrix<T>) -> Hermite<T> {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut h = m.clone();
    let mut u = Matrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid down the column until a single nonzero entry remains at row r.
        while let Some(best) = (r..rows)
            .filter(|&i| !h[(i, c)].is_zero())
            .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()).then(a.cmp(&b)))
        {
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            let mut clean = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                h.row_sub_mul(i, &q, r);
                u.row_sub_mul(i, &q, r);
                if !h[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h[(r, c)].clone();
        for i in 0..r {
            let q = h[(i, c)].div_floor(&pivot);
            h.row_sub_mul(i, &q, r);
            u.row_sub_mul(i, &q, r);
        }
        pivots.push(c);
        r += 1;
    }
    Hermite { form: h, transform: u, rank: r, pivots }
}

/// Smith normal form `left * input * right = diag(invariants)`.
#[derive(Clone, Debug)]
pub struct Smith<T> {
    /// Nonzero invariant factors, each dividing the next.
    pub invariants: Vec<T>,
    pub left: Matrix<T>,
    pub right: Matrix<T>,
    pub right_inverse: Matrix<T>,
}

/// Smith normal form by alternating row and column elimination.
pub fn smith_normal_form<T: Scalar>(m: &Matrix<T>) -> Smith<T> {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut d = m.clone();
    let mut left = Matrix::identity(rows);
    let mut right = Matrix::identity(cols);
    let mut right_inv = Matrix::identity(cols);
    let mut invariants = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &d[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Smith { invariants, left, right, right_inverse: right_inv };
            };
            d.swap_rows(t, bi);
            left.swap_rows(t, bi);
            d.swap_cols(t, bj);
            right.swap_cols(t, bj);
            right_inv.swap_rows(t, bj);

            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                d.row_sub_mul(i, &q, t);
                left.row_sub_mul(i, &q, t);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                d.col_sub_mul(j, &q, t);
                right.col_sub_mul(j, &q, t);
                // inverse of the column operation: row_t += q * row_j
                right_inv.row_sub_mul(t, &-q.clone(), j);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    // row_t += row_i, then the next pass reduces the remainder
                    d.row_sub_mul(t, &-T::one(), i);
                    left.row_sub_mul(t, &-T::one(), i);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
        invariants.push(d[(t, t)].clone());
    }
    Smith { invariants, left, right, right_inverse: right_inv }
}

/// Solves `y * d ≡ g (mod m)` for `y`, if possible.
pub(crate) fn solve_linear_congruence<T: Scalar>(d: &T, g: &T, m: &T) -> Option<T> {
    let (g0, s, _) = scalar::xgcd(&scalar::modulo(d, m), m);
    if !g.is_multiple_of(&g0) {
        return None;
    }
    let reduced_m = m.div_floor(&g0);
    let y = scalar::mul(&s, &g.div_floor(&g0));
    Some(scalar::modulo(&y, &reduced_m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(rows: &[&[i64]], cols: usize) -> Matrix<BigInt> {
        Matrix::from_i64_rows(cols, rows).unwrap()
    }

    #[test]
    fn hnf_already_reduced() {
        let (h, r) = hermite_normal_form(&big(&[&[4, 0, -4]], 3));
        assert_eq!(r, 1);
        assert_eq!(h, big(&[&[4, 0, -4]], 3));
    }

    #[test]
    fn hnf_drops_redundant_row() {
        let (h, r) = hermite_normal_form(&big(&[&[2, 0], &[0, 2], &[2, 2]], 2));
        assert_eq!(r, 2);
        assert_eq!(h, big(&[&[2, 0], &[0, 2]], 2));
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let (h, _) = hermite_normal_form(&big(&[&[1, 5], &[0, 3]], 2));
        assert_eq!(h, big(&[&[1, 2], &[0, 3]], 2));
    }

    #[test]
    fn hnf_transform_is_consistent() {
        let m = big(&[&[3, -1, -1], &[-1, -1, 3], &[2, 4, 6]], 3);
        let h = hermite_with_transform(&m);
        assert_eq!(h.transform.mul_matrix(&m).unwrap(), h.form);
    }

    #[test]
    fn snf_diagonal_and_divisibility() {
        let m = big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]], 3);
        let s = smith_normal_form(&m);
        assert_eq!(s.invariants, [2, 6, 12].map(BigInt::from));
        let d = s.left.mul_matrix(&m).unwrap().mul_matrix(&s.right).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { s.invariants[i].clone() } else { BigInt::from(0) };
                assert_eq!(d[(i, j)], expect);
            }
        }
        assert_eq!(s.right.mul_matrix(&s.right_inverse).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn congruence_solver() {
        assert_eq!(solve_linear_congruence(&3i64, &1, &7), Some(5));
        assert_eq!(solve_linear_congruence(&2i64, &1, &4), None);
        let y = solve_linear_congruence(&2i64, &2, &4).unwrap();
        assert_eq!((2 * y) % 4, 2);
    }
}
