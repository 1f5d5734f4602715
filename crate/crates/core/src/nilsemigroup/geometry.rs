//! The face of `C_m` cut out by a nilsemigroup's tight pairs, computed in
//! the coordinates of its own linear span rather than from the whole cone.
//!
//! On the span of the face every coordinate is determined by the atom
//! coordinates through any factorization, and the atom coordinates range
//! over the orthogonal complement of the presentation lattice. The face is
//! the cone cut out there by the remaining Kunz inequalities.

use num_traits::Zero;

use super::KunzNilsemigroup;
use crate::error::Result;
use crate::exactla::scalar;
use crate::kunzcone::{dd, facet_functional, kunz_facets};
use crate::{Int, IntegerMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceGeometry {
    pub m: u32,
    /// Primitive extreme rays in `Z^{m-1}`, sorted.
    pub rays: Vec<Vec<Int>>,
    /// Kunz facets containing every ray.
    pub equality_set: Vec<(u32, u32)>,
    pub degenerate: bool,
    pub dim: usize,
}

impl FaceGeometry {
    /// Sum of the extreme rays, a point of the relative interior.
    pub fn interior_point(&self) -> Vec<Int> {
        let mut s = vec![Int::zero(); self.m as usize - 1];
        for r in &self.rays {
            for (a, b) in s.iter_mut().zip(r) {
                *a += b;
            }
        }
        s
    }

    /// `None` when the face is non-degenerate and its tight pairs are
    /// exactly those of `n`; otherwise the reason it is not.
    pub fn realizability_failure(&self, n: &KunzNilsemigroup) -> Option<String> {
        if self.rays.is_empty() {
            return Some("the equalities force the zero point".into());
        }
        if self.degenerate {
            return Some("the face is degenerate".into());
        }
        if self.equality_set != n.tight_pairs() {
            let extra: Vec<_> = self.equality_set.iter().filter(|p| !n.tight_pairs().contains(p)).collect();
            return Some(format!("the face also forces the sums {extra:?}"));
        }
        None
    }
}

/// Extreme rays and closure of the face `{ x in C_m : x_a + x_b = x_{a+b} }`
/// over the tight pairs of `n`.
pub fn face_geometry(n: &KunzNilsemigroup) -> Result<FaceGeometry> {
    let m = n.m();
    let dim_x = m as usize - 1;
    // x = Φ y: row p is a factorization of p.
    let phi: Vec<&Vec<u32>> = (1..m).map(|p| &n.factorizations[p as usize][0]).collect();
    let kernel = n.presentation_lattice().orthogonal_complement();
    // Basis of the span of the face in x-coordinates.
    let span_basis: Vec<Vec<Int>> = kernel
        .basis_rows()
        .map(|kv| phi.iter().map(|z| z.iter().zip(kv).map(|(&zi, ki)| Int::from(zi) * ki).sum()).collect())
        .collect();

    let facets = kunz_facets(m);
    let mut constraints: Vec<Vec<Int>> = Vec::new();
    for &(i, j) in &facets {
        let g = facet_functional(m, i, j);
        constraints.push(span_basis.iter().map(|b| scalar::dot(&g, b)).collect());
    }
    for p in 0..dim_x {
        constraints.push(span_basis.iter().map(|b| b[p].clone()).collect());
    }

    let param_rays = if span_basis.is_empty() { Vec::new() } else { dd::extreme_rays(span_basis.len(), &constraints)? };
    let mut rays: Vec<Vec<Int>> = param_rays
        .iter()
        .map(|t| {
            let mut x = vec![Int::zero(); dim_x];
            for (c, b) in t.iter().zip(&span_basis) {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += c * bi;
                }
            }
            scalar::make_primitive(&mut x);
            x
        })
        .collect();
    rays.sort();

    let equality_set: Vec<(u32, u32)> = facets
        .iter()
        .copied()
        .filter(|&(i, j)| {
            let g = facet_functional(m, i, j);
            rays.iter().all(|r| scalar::dot(&g, r).is_zero())
        })
        .collect();
    let degenerate = (0..dim_x).any(|p| rays.iter().all(|r| r[p].is_zero()));
    let dim = IntegerMatrix::from_rows(dim_x, &rays).expect("ray width").rank();
    Ok(FaceGeometry { m, rays, equality_set, degenerate, dim })
}
