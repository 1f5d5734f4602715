//! The Kunz cone `C_m`: facets, extreme rays, faces, and the face lattice.

pub mod census;
pub mod dd;

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use census::{classify, classify_with_limit, face_is_apery, Census, CensusRow, Convention};

use crate::bitset::BitSet;
use crate::error::{KunzError, Result};
use crate::exactla::scalar;
use crate::nilsemigroup::{FaceGeometry, KunzNilsemigroup};
use crate::{Int, IntegerMatrix, Rational};

/// Largest `m` enumerated without an explicit override.
pub const DEFAULT_MAX_M: u32 = 12;

/// Environment variable raising [`DEFAULT_MAX_M`].
pub const MAX_M_ENV: &str = "KUNZ_MAX_M";

/// Unordered pairs `(i, j)`, `1 <= i <= j < m`, `i + j ≢ 0 (mod m)`, in
/// lexicographic order.
pub fn kunz_facets(m: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 1..m {
        for j in i..m {
            if (i + j) % m != 0 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Coefficients of `x_i + x_j - x_{i+j}` on `Z^{m-1}`.
pub fn facet_functional(m: u32, i: u32, j: u32) -> Vec<Int> {
    let mut g = vec![Int::zero(); m as usize - 1];
    g[i as usize - 1] += 1;
    g[j as usize - 1] += 1;
    g[((i + j) % m) as usize - 1] -= 1;
    g
}

#[derive(Clone, Debug)]
pub struct KunzCone {
    pub m: u32,
    pub facets: Vec<(u32, u32)>,
    /// Primitive extreme rays, sorted.
    pub rays: Vec<Vec<Int>>,
    /// For each facet, the rays on which it is tight.
    pub incidence: Vec<BitSet>,
}

/// Facets and extreme rays of `C_m`.
pub fn build_cone(m: u32) -> Result<KunzCone> {
    if m < 2 {
        return Err(KunzError::InvalidInput("modulus must be at least 2".into()));
    }
    let dim = m as usize - 1;
    let facets = kunz_facets(m);
    let mut constraints: Vec<Vec<Int>> = facets.iter().map(|&(i, j)| facet_functional(m, i, j)).collect();
    for p in 0..dim {
        let mut e = vec![Int::zero(); dim];
        e[p] = Int::from(1);
        constraints.push(e);
    }
    let rays = dd::extreme_rays(dim, &constraints)?;
    let incidence = constraints[..facets.len()]
        .iter()
        .map(|g| {
            let mut s = BitSet::new(rays.len());
            for (r, ray) in rays.iter().enumerate() {
                if scalar::dot(g, ray).is_zero() {
                    s.insert(r);
                }
            }
            s
        })
        .collect();
    Ok(KunzCone { m, facets, rays, incidence })
}

impl KunzCone {
    pub fn dim(&self) -> usize {
        self.m as usize - 1
    }

    /// Rays lying on every listed facet.
    pub fn rays_on(&self, pairs: &[(u32, u32)]) -> Result<BitSet> {
        let mut s = BitSet::full(self.rays.len());
        for p in pairs {
            let f = self
                .facets
                .binary_search(p)
                .map_err(|_| KunzError::InvalidInput(format!("{p:?} is not a facet of C_{}", self.m)))?;
            s.intersect_with(&self.incidence[f]);
        }
        Ok(s)
    }

    /// The face spanned by the given rays.
    pub fn face_from_rays(&self, rays: &BitSet) -> Face {
        let equality_set: Vec<(u32, u32)> = self
            .facets
            .iter()
            .zip(&self.incidence)
            .filter(|(_, inc)| rays.is_subset(inc))
            .map(|(p, _)| *p)
            .collect();
        let members: Vec<&Vec<Int>> = rays.iter().map(|r| &self.rays[r]).collect();
        let dim = IntegerMatrix::from_rows(self.dim(), &members).expect("ray width").rank();
        let degenerate = (0..self.dim()).any(|p| members.iter().all(|r| r[p].is_zero()));
        let nilsemigroup = if degenerate {
            None
        } else {
            Some(KunzNilsemigroup::from_tight_pairs(self.m, equality_set.clone()).expect("faces induce nilsemigroups"))
        };
        Face { m: self.m, equality_set, ray_indices: Some(rays.clone()), dim, degenerate, nilsemigroup }
    }
}

#[derive(Clone, Debug)]
pub struct Face {
    pub m: u32,
    /// Closed set of tight pairs, sorted.
    pub equality_set: Vec<(u32, u32)>,
    /// Extreme rays of the cone on this face; absent when the face was
    /// computed without the whole cone.
    pub ray_indices: Option<BitSet>,
    pub dim: usize,
    pub degenerate: bool,
    /// Absent exactly when the face is degenerate.
    pub nilsemigroup: Option<KunzNilsemigroup>,
}

/// Serialized form of a face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRecord {
    pub m: u32,
    pub equalities: Vec<[u32; 2]>,
    pub dim: usize,
    pub degenerate: bool,
}

impl Face {
    /// A face computed in its own span, without the rays of the cone.
    pub fn from_geometry(geometry: &FaceGeometry, n: &KunzNilsemigroup) -> Face {
        Face {
            m: geometry.m,
            equality_set: geometry.equality_set.clone(),
            ray_indices: None,
            dim: geometry.dim,
            degenerate: geometry.degenerate,
            nilsemigroup: (!geometry.degenerate).then(|| n.clone()),
        }
    }

    pub fn record(&self) -> FaceRecord {
        FaceRecord {
            m: self.m,
            equalities: self.equality_set.iter().map(|&(i, j)| [i, j]).collect(),
            dim: self.dim,
            degenerate: self.degenerate,
        }
    }

    pub fn embedding_dimension(&self) -> Option<usize> {
        self.nilsemigroup.as_ref().map(|n| n.embedding_dimension())
    }
}

/// Smallest face containing `x`, which therefore has `x` in its relative
/// interior.
pub fn face_from_point(cone: &KunzCone, x: &[Rational]) -> Result<Face> {
    if x.len() != cone.dim() {
        return Err(KunzError::DimensionMismatch { expected: cone.dim(), got: x.len() });
    }
    if let Some(i) = x.iter().position(|q| q.is_negative()) {
        return Err(KunzError::InvalidInput(format!("coordinate {} is negative", i + 1)));
    }
    let mut tight = Vec::new();
    for &(i, j) in &cone.facets {
        let slack = &x[i as usize - 1] + &x[j as usize - 1] - &x[((i + j) % cone.m) as usize - 1];
        if slack.is_negative() {
            return Err(KunzError::ViolatedInequality { i, j });
        }
        if slack.is_zero() {
            tight.push((i, j));
        }
    }
    let rays = cone.rays_on(&tight)?;
    Ok(cone.face_from_rays(&rays))
}

/// The face with the positive integer point `x` in its relative interior,
/// without the rays of the cone: its span is cut out by the facets tight at
/// `x`, so `dim = (m - 1) - rank(H_F)`.
pub fn face_of_point(x: &[Int]) -> Result<Face> {
    let n = KunzNilsemigroup::from_integer_point(x)?;
    let m = n.m();
    let rows: Vec<Vec<Int>> = n.tight_pairs().iter().map(|&(i, j)| facet_functional(m, i, j)).collect();
    let rank = IntegerMatrix::from_rows(x.len(), &rows)?.rank();
    Ok(Face {
        m,
        equality_set: n.tight_pairs().to_vec(),
        ray_indices: None,
        dim: x.len() - rank,
        degenerate: false,
        nilsemigroup: Some(n),
    })
}

/// As [`face_of_point`] for a rational point.
pub fn face_of_rational_point(x: &[Rational]) -> Result<Face> {
    face_of_point(&crate::clear_denominators(x))
}

/// The face whose Kunz nilsemigroup is `n`, or `None` if there is none.
pub fn face_of_nilsemigroup(cone: &KunzCone, n: &KunzNilsemigroup) -> Option<Face> {
    if n.m() != cone.m {
        return None;
    }
    let rays = cone.rays_on(n.tight_pairs()).ok()?;
    if rays.is_empty() {
        return None;
    }
    let face = cone.face_from_rays(&rays);
    (!face.degenerate && face.equality_set == n.tight_pairs()).then_some(face)
}

/// Largest `m` allowed by the environment, defaulting to [`DEFAULT_MAX_M`].
pub fn max_m_from_env() -> u32 {
    std::env::var(MAX_M_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_M)
}

/// Refuses work on `C_m` beyond `limit`.
pub fn check_resource_limit(m: u32, limit: u32) -> Result<()> {
    if m > limit {
        return Err(KunzError::ResourceLimit { m, limit });
    }
    Ok(())
}

/// Every face of dimension at least one, ordered by dimension then ray set.
/// Degenerate faces are included on request. Refuses `m` above
/// [`max_m_from_env`].
pub fn enumerate_faces(cone: &KunzCone, include_degenerate: bool) -> Result<Vec<Face>> {
    enumerate_faces_with_limit(cone, include_degenerate, max_m_from_env())
}

pub fn enumerate_faces_with_limit(cone: &KunzCone, include_degenerate: bool, limit: u32) -> Result<Vec<Face>> {
    check_resource_limit(cone.m, limit)?;
    let mut seen: BTreeSet<BitSet> = BTreeSet::new();
    let top = BitSet::full(cone.rays.len());
    seen.insert(top.clone());
    let mut frontier = vec![top];
    while !frontier.is_empty() {
        let children: Vec<BitSet> = frontier
            .par_iter()
            .flat_map_iter(|parent| {
                cone.incidence.iter().filter_map(move |inc| {
                    let child = parent.intersection(inc);
                    (!child.is_empty() && child != *parent).then_some(child)
                })
            })
            .collect();
        frontier = children.into_iter().filter(|c| seen.insert(c.clone())).collect();
        frontier.sort();
        frontier.dedup();
    }
    let mut faces: Vec<Face> = seen
        .into_par_iter()
        .map(|rays| cone.face_from_rays(&rays))
        .filter(|f| include_degenerate || !f.degenerate)
        .collect();
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.ray_indices.cmp(&b.ray_indices)));
    Ok(faces)
}
