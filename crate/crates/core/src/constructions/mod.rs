//! Explicit points realizing prescribed (embedding dimension, dimension)
//! pairs, the faces of arithmetical semigroups, and a pinned gallery of
//! worked examples.

mod gallery;

use serde::Serialize;

pub use gallery::{gallery, Fact, GalleryEntry};

use crate::error::{KunzError, Result};
use crate::kunzcone::{build_cone, enumerate_faces_with_limit, face_of_point, Face};
use crate::nilsemigroup::{apery_certificate, apery_witness_from_interior, CheckStrategy};
use crate::numsemigroup::{AperyTuple, NumericalSemigroup};
use crate::{Int, LatticeBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ConstructionSpec {
    /// The interior of `C_m`, containing `<m, m+1, ..., 2m-1>`.
    Full { m: u32 },
    /// `x = (2^k, 4, 3, ..., 3)`, `1 <= k <= m - 2`.
    B { m: u32, k: u32 },
    /// `x = (1, 2, 1, ..., 1)` for even `m >= 8`.
    BEven { m: u32 },
    /// The four-branch point with `h = m - e - 1`, `3 <= e <= m - 3`,
    /// `2 <= k <= e - 1`, adjusted when `k = e - 1`.
    C { m: u32, e: u32, k: u32 },
    /// The face of `<m, m+1, ..., m+e>`, `2 <= e <= m - 3`.
    Arithmetical { m: u32, e: u32 },
}

impl ConstructionSpec {
    pub fn m(&self) -> u32 {
        match *self {
            Self::Full { m } | Self::B { m, .. } | Self::BEven { m } | Self::C { m, .. } | Self::Arithmetical { m, .. } => m,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Self::Full { m } => m >= 2,
            Self::B { m, k } => m >= 3 && (1..=m - 2).contains(&k),
            Self::BEven { m } => m >= 8 && m % 2 == 0,
            Self::C { m, e, k } => m >= 6 && (3..=m - 3).contains(&e) && (2..e).contains(&k),
            Self::Arithmetical { m, e } => m >= 5 && (2..=m - 3).contains(&e),
        };
        if ok {
            Ok(())
        } else {
            Err(KunzError::InvalidInput(format!("parameters out of range: {self:?}")))
        }
    }

    /// Claimed `(e(F), dim F, Apéry)`.
    pub fn claim(&self) -> (usize, usize, bool) {
        match *self {
            Self::Full { m } => (m as usize - 1, m as usize - 1, true),
            Self::B { m, k } => (m as usize - 2, (m - 2 - (k - 1) / 2) as usize, true),
            Self::BEven { m } => (m as usize - 2, m as usize / 2 - 1, false),
            Self::C { e, k, .. } => (e as usize, (e - k + 2) as usize, true),
            Self::Arithmetical { e, .. } => (e as usize, 2, true),
        }
    }

    /// The construction's point of `Z^{m-1}`.
    pub fn point(&self) -> Result<Vec<Int>> {
        self.validate()?;
        let coords: Vec<u64> = match *self {
            Self::Full { m } => (1..m as u64).map(|i| m as u64 + i).collect(),
            Self::B { m, k } => (1..m)
                .map(|i| match i {
                    i if i <= k => 2,
                    i if i == k + 1 => 4,
                    _ => 3,
                })
                .collect(),
            Self::BEven { m } => (1..m).map(|i| if i == 2 { 2 } else { 1 }).collect(),
            Self::C { m, e, k } if k + 1 < e => {
                let h = (m - e - 1) as u64;
                (1..m)
                    .map(|i| match i {
                        i if i <= k => h,
                        i if i <= k + 2 => 2 * h,
                        i if i <= e + 1 => 2 * h - 1,
                        i => 2 * (m - i) as u64,
                    })
                    .collect()
            }
            // With k = e - 1 the point above also has x_{m-1} + x_{e+2} =
            // x_{e+1}; doubling it and lowering the first e + 1 coordinates
            // keeps only the intended equalities.
            Self::C { m, e, k } => {
                let h = (m - e - 1) as u64;
                (1..m)
                    .map(|i| match i {
                        i if i <= k => 2 * h - 1,
                        i if i <= k + 2 => 4 * h - 2,
                        i => 4 * (m - i) as u64,
                    })
                    .collect()
            }
            Self::Arithmetical { m, e } => return Ok(arithmetical_tuple(m, e)?.as_point()),
        };
        Ok(coords.into_iter().map(Int::from).collect())
    }
}

fn arithmetical_tuple(m: u32, e: u32) -> Result<AperyTuple> {
    let gens: Vec<u64> = (0..=e as u64).map(|i| m as u64 + i).collect();
    Ok(NumericalSemigroup::from_generators(&gens)?.apery_tuple())
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub spec: ConstructionSpec,
    pub embedding_dimension: usize,
    pub dim: usize,
    pub apery: bool,
    /// Witness Apéry tuple when the face is Apéry.
    pub witness: Option<AperyTuple>,
    #[serde(serialize_with = "serialize_opt_ints")]
    pub certificate: Option<Vec<Int>>,
    /// For family `c`: whether `L_N = L_{N'} x {0}^{e-k}`.
    pub lattice_product: Option<bool>,
}

fn serialize_opt_ints<S: serde::Serializer>(v: &Option<Vec<Int>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => crate::serialize_ints(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub point: Vec<Int>,
    pub face: Face,
    pub report: ConstructionReport,
}

/// Builds the point, its face, and checks every claimed property, failing
/// with an internal error if one does not hold.
pub fn construct(spec: ConstructionSpec) -> Result<Construction> {
    let point = spec.point()?;
    let face = face_of_point(&point)?;
    let n = face.nilsemigroup.as_ref().expect("positive points give non-degenerate faces");
    let embedding_dimension = n.embedding_dimension();
    if face.dim != embedding_dimension - n.minimal_presentation().matrix().rank() {
        return Err(KunzError::Internal("face dimension disagrees with the presentation rank".into()));
    }
    let certificate = apery_certificate(n, CheckStrategy::Full);
    let witness = match certificate {
        None => Some(apery_witness_from_interior(n, &point)?),
        Some(_) => None,
    };
    let lattice_product = match spec {
        ConstructionSpec::C { e, k, .. } => {
            let inner = arithmetical_tuple(k + 3, k)?;
            let n_inner = crate::nilsemigroup::KunzNilsemigroup::from_apery_tuple(&inner)?;
            let positions: Vec<usize> = (0..k as usize).collect();
            let expected: LatticeBasis = n_inner.presentation_lattice().embed(e as usize, &positions)?;
            Some(n.atoms()[..k as usize] == n_inner.atoms()[..] && n.presentation_lattice() == expected)
        }
        _ => None,
    };
    let report = ConstructionReport {
        spec,
        embedding_dimension,
        dim: face.dim,
        apery: certificate.is_none(),
        witness,
        certificate,
        lattice_product,
    };
    let claim = spec.claim();
    if (report.embedding_dimension, report.dim, report.apery) != claim || report.lattice_product == Some(false) {
        return Err(KunzError::Internal(format!(
            "{spec:?}: claimed (e, d, apery) = {claim:?}, found ({}, {}, {}), lattice product {:?}",
            report.embedding_dimension, report.dim, report.apery, report.lattice_product
        )));
    }
    Ok(Construction { point, face, report })
}

/// The face of `<m, m+1, ..., m+e>`.
pub fn arithmetical_face(m: u32, e: u32) -> Result<Face> {
    Ok(construct(ConstructionSpec::Arithmetical { m, e })?.face)
}

/// Every valid spec for `m`, in a fixed order.
pub fn all_specs(m: u32) -> Vec<ConstructionSpec> {
    let mut out = vec![ConstructionSpec::Full { m }];
    out.extend((1..=m.saturating_sub(2)).map(|k| ConstructionSpec::B { m, k }));
    out.push(ConstructionSpec::BEven { m });
    for e in 3..=m.saturating_sub(3) {
        out.extend((2..e).map(|k| ConstructionSpec::C { m, e, k }));
    }
    out.extend((2..=m.saturating_sub(3)).map(|e| ConstructionSpec::Arithmetical { m, e }));
    out.retain(|s| s.validate().is_ok());
    out
}

/// One `(e, d)` pair and how it was realized.
#[derive(Clone, Debug, Serialize)]
pub struct AttainedPair {
    pub e: usize,
    pub d: usize,
    pub apery: bool,
    pub spec: ConstructionSpec,
}

/// Faces of `C_m` with one of the two pairs that admit no Apéry face.
#[derive(Clone, Debug, Serialize)]
pub struct ExcludedPair {
    pub e: usize,
    pub d: usize,
    pub faces: usize,
    pub apery_faces: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Sweep {
    pub m: u32,
    pub attained: Vec<AttainedPair>,
    /// Present when `m` is small enough to enumerate.
    pub excluded: Option<Vec<ExcludedPair>>,
}

/// Largest `m` for which the sweep also enumerates the whole cone.
pub const SWEEP_ENUMERATION_MAX_M: u32 = 9;

/// Realizes every claimed pair for `m >= 7` and, for small `m`, confirms by
/// enumeration that the excluded pairs have no Apéry face.
pub fn attainability_sweep(m: u32) -> Result<Sweep> {
    if m < 7 {
        return Err(KunzError::InvalidInput("the sweep needs m >= 7".into()));
    }
    let mut attained: Vec<AttainedPair> = Vec::new();
    for spec in all_specs(m) {
        let c = construct(spec)?;
        let (e, d) = (c.report.embedding_dimension, c.report.dim);
        if !attained.iter().any(|p| (p.e, p.d) == (e, d)) {
            attained.push(AttainedPair { e, d, apery: c.report.apery, spec });
        }
    }
    attained.sort_by_key(|p| (p.e, p.d));
    let mu = m as usize;
    let mut claimed: Vec<(usize, usize)> = vec![(mu - 1, mu - 1)];
    claimed.extend(((mu - 1) / 2..=mu - 2).map(|d| (mu - 2, d)));
    for e in 2..=mu - 3 {
        claimed.extend((2..=e).map(|d| (e, d)));
    }
    for (e, d) in claimed {
        let excluded = mu.is_multiple_of(2) && e == mu - 2 && d == mu / 2 - 1;
        match attained.iter().find(|p| (p.e, p.d) == (e, d)) {
            Some(p) if p.apery != excluded => {}
            _ => return Err(KunzError::Internal(format!("pair (e, d) = ({e}, {d}) not realized as claimed"))),
        }
    }

    let excluded = if m <= SWEEP_ENUMERATION_MAX_M {
        let faces = enumerate_faces_with_limit(&build_cone(m)?, false, m)?;
        let pairs = [(mu - 2, mu / 2 - 1), (mu - 3, 1)];
        let mut out = Vec::new();
        for (e, d) in pairs {
            let hits: Vec<&Face> = faces.iter().filter(|f| f.dim == d && f.embedding_dimension() == Some(e)).collect();
            let apery_faces = hits
                .iter()
                .filter(|f| apery_certificate(f.nilsemigroup.as_ref().expect("non-degenerate"), CheckStrategy::Full).is_none())
                .count();
            if (m % 2 == 1 && !hits.is_empty()) || apery_faces > 0 {
                return Err(KunzError::Internal(format!("pair (e, d) = ({e}, {d}) has an unexpected face")));
            }
            out.push(ExcludedPair { e, d, faces: hits.len(), apery_faces });
        }
        Some(out)
    } else {
        None
    };
    Ok(Sweep { m, attained, excluded })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn spec_examples() {
        let r = construct(ConstructionSpec::Full { m: 7 }).unwrap().report;
        assert_eq!((r.embedding_dimension, r.dim, r.apery), (6, 6, true));
        let r = construct(ConstructionSpec::B { m: 9, k: 3 }).unwrap().report;
        assert_eq!((r.embedding_dimension, r.dim, r.apery), (7, 6, true));
        let r = construct(ConstructionSpec::BEven { m: 8 }).unwrap().report;
        assert_eq!((r.embedding_dimension, r.dim, r.apery), (6, 3, false));
        let r = construct(ConstructionSpec::C { m: 10, e: 6, k: 3 }).unwrap().report;
        assert_eq!((r.embedding_dimension, r.dim, r.apery, r.lattice_product), (6, 5, true, Some(true)));
        for (m, e) in [(7, 2), (10, 7)] {
            let f = arithmetical_face(m, e).unwrap();
            assert_eq!((f.dim, f.embedding_dimension()), (2, Some(e as usize)));
        }
    }

    #[test]
    fn out_of_range_specs() {
        for spec in [
            ConstructionSpec::Arithmetical { m: 7, e: 5 },
            ConstructionSpec::B { m: 7, k: 6 },
            ConstructionSpec::BEven { m: 9 },
            ConstructionSpec::C { m: 9, e: 5, k: 5 },
        ] {
            assert!(matches!(construct(spec), Err(KunzError::InvalidInput(_))), "{spec:?}");
        }
    }

    #[test]
    fn witness_lies_on_the_face() {
        let c = construct(ConstructionSpec::B { m: 9, k: 1 }).unwrap();
        let w = c.report.witness.unwrap();
        let point = face_of_point(&w.as_point()).unwrap();
        assert_eq!(point.equality_set, c.face.equality_set);
    }

    #[test]
    fn sweep_for_seven() {
        let sweep = attainability_sweep(7).unwrap();
        assert!(sweep.attained.iter().filter(|p| p.e <= 4 && p.d >= 2).all(|p| p.apery));
        let excluded = sweep.excluded.unwrap();
        assert!(excluded.iter().all(|p| p.faces == 0));
    }

    #[test]
    fn points_are_zero_free() {
        for m in 7..=9 {
            for spec in all_specs(m) {
                assert!(spec.point().unwrap().iter().all(|x| !x.is_zero()));
            }
        }
    }
}
