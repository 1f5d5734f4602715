//! Double description: extreme rays of `{ x : a . x >= 0 }` in exact
//! integer arithmetic.
//!
//! Starts from the whole space, held as a lineality basis, and intersects
//! one half-space at a time. While the current cone still has lineality a
//! constraint that is nonzero on it just turns one lineality direction into
//! a ray; afterwards the usual pairing of positive and negative rays runs,
//! restricted to combinatorially adjacent pairs.

use crate::bitset::BitSet;
use crate::error::{KunzError, Result};
use crate::exactla::scalar::{self, Scalar};

struct Ray<T> {
    v: Vec<T>,
    zeros: BitSet,
}

/// Primitive extreme rays of the pointed cone `{ x in R^dim : a . x >= 0 }`,
/// sorted lexicographically. Errors if the cone contains a line.
pub fn extreme_rays<T: Scalar>(dim: usize, inequalities: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    let k = inequalities.len();
    for a in inequalities {
        if a.len() != dim {
            return Err(KunzError::DimensionMismatch { expected: dim, got: a.len() });
        }
    }
    let mut lineality: Vec<Vec<T>> = (0..dim)
        .map(|i| {
            let mut e = vec![T::zero(); dim];
            e[i] = T::one();
            e
        })
        .collect();
    let mut rays: Vec<Ray<T>> = Vec::new();

    for (idx, a) in inequalities.iter().enumerate() {
        if let Some(li) = lineality.iter().position(|l| !scalar::dot(a, l).is_zero()) {
            let mut l = lineality.swap_remove(li);
            let mut al = scalar::dot(a, &l);
            if al.is_negative() {
                l.iter_mut().for_each(|x| *x = -x.clone());
                al = -al;
            }
            for other in lineality.iter_mut() {
                let ao = scalar::dot(a, other);
                project(other, &l, &al, &ao);
            }
            for r in rays.iter_mut() {
                let ar = scalar::dot(a, &r.v);
                project(&mut r.v, &l, &al, &ar);
                r.zeros.insert(idx);
            }
            let mut zeros = BitSet::full(idx);
            zeros.grow(k);
            rays.push(Ray { v: l, zeros });
            continue;
        }

        let values: Vec<T> = rays.iter().map(|r| scalar::dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, val) in rays.iter_mut().zip(&values) {
                if val.is_zero() {
                    r.zeros.insert(idx);
                }
            }
            continue;
        }

        // Two rays of a pointed cone of dimension d are adjacent only if
        // they share at least d - 2 tight constraints.
        let pointed_dim = dim - lineality.len();
        let min_common = pointed_dim.saturating_sub(2);
        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.intersection(&rays[n].zeros);
                if common.len() < min_common {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == n || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let mut v: Vec<T> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xn, xp)| scalar::sub(&scalar::mul(&values[p], xn), &scalar::mul(&values[n], xp)))
                    .collect();
                scalar::make_primitive(&mut v);
                let mut zeros = common;
                zeros.insert(idx);
                created.push(Ray { v, zeros });
            }
        }
        let mut next: Vec<Ray<T>> = Vec::with_capacity(rays.len() + created.len());
        for (r, val) in rays.into_iter().zip(values) {
            if val.is_negative() {
                continue;
            }
            let mut r = r;
            if val.is_zero() {
                r.zeros.insert(idx);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    if !lineality.is_empty() {
        return Err(KunzError::InvalidInput(format!(
            "cone is not pointed: lineality space of dimension {}",
            lineality.len()
        )));
    }
    let mut out: Vec<Vec<T>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `v <- al * v - av * l`, made primitive; zeroes the component of `v` along `a`.
fn project<T: Scalar>(v: &mut [T], l: &[T], al: &T, av: &T) {
    if av.is_zero() {
        return;
    }
    for (x, y) in v.iter_mut().zip(l) {
        *x = scalar::sub(&scalar::mul(al, x), &scalar::mul(av, y));
    }
    scalar::make_primitive(v);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(r: &[&[i64]]) -> Vec<Vec<i64>> {
        r.iter().map(|x| x.to_vec()).collect()
    }

    #[test]
    fn orthant() {
        let r = extreme_rays(3, &rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(r, rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
    }

    #[test]
    fn square_cone() {
        // x >= |y|, x >= |z|: four rays (1, +-1, +-1)
        let ineq = rows(&[&[1, 1, 0], &[1, -1, 0], &[1, 0, 1], &[1, 0, -1]]);
        let r = extreme_rays(3, &ineq).unwrap();
        assert_eq!(r, rows(&[&[1, -1, -1], &[1, -1, 1], &[1, 1, -1], &[1, 1, 1]]));
    }

    #[test]
    fn lower_dimensional_pointed_cone() {
        // x = y (as two inequalities), x >= 0, z >= 0
        let ineq = rows(&[&[1, -1, 0], &[-1, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let r = extreme_rays(3, &ineq).unwrap();
        assert_eq!(r, rows(&[&[0, 0, 1], &[1, 1, 0]]));
    }

    #[test]
    fn redundant_constraints() {
        let ineq = rows(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1]]);
        assert_eq!(extreme_rays(2, &ineq).unwrap(), rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn line_is_rejected() {
        assert!(extreme_rays(2, &rows(&[&[1, 0]])).is_err());
    }

    #[test]
    fn kunz_cone_three() {
        // 2x1 >= x2, 2x2 >= x1
        let r = extreme_rays(2, &rows(&[&[2, -1], &[-1, 2]])).unwrap();
        assert_eq!(r, rows(&[&[1, 2], &[2, 1]]));
    }
}
