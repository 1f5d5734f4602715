//! Deciding whether the face of a nilsemigroup contains Apéry points.
//!
//! The face is Apéry exactly when every vector of the saturated
//! presentation lattice is orthogonal to the atom vector modulo `m`. A
//! failing basis vector is the refutation certificate; otherwise a witness
//! Apéry tuple is built on the span of the face and pushed into its
//! relative interior.

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{face_geometry, KunzNilsemigroup};
use crate::error::{KunzError, Result};
use crate::exactla::{scalar, solve_residue_point, ResidueSolution};
use crate::kunzcone::facet_functional;
use crate::numsemigroup::{AperyTuple, NumericalSemigroup};
use crate::{Int, LatticeBasis};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum AperyVerdict {
    /// A witness Apéry tuple in the relative interior of the face.
    Apery { witness: AperyTuple },
    /// `v` in the saturated presentation lattice with `v . α ≢ 0 (mod m)`.
    NotApery {
        #[serde(serialize_with = "crate::serialize_ints")]
        certificate: Vec<Int>,
    },
}

impl AperyVerdict {
    pub fn is_apery(&self) -> bool {
        matches!(self, AperyVerdict::Apery { .. })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CheckStrategy {
    /// Always saturate and test the whole basis.
    Full,
    /// Try the cheap sufficient conditions first, then fall back to `Full`.
    #[default]
    FastPaths,
}

fn failing_vector(lattice: &LatticeBasis, alpha: &[Int], m: &Int) -> Option<Vec<Int>> {
    lattice
        .basis_rows()
        .find(|v| !scalar::modulo(&scalar::dot(v, alpha), m).is_zero())
        .map(|v| v.to_vec())
}

/// `None` if the face of `n` is Apéry, otherwise a certificate vector.
pub fn apery_certificate(n: &KunzNilsemigroup, strategy: CheckStrategy) -> Option<Vec<Int>> {
    let alpha = n.atom_vector();
    let m = Int::from(n.m());
    let presentation = n.minimal_presentation();
    if strategy == CheckStrategy::FastPaths {
        if presentation.is_empty() {
            return None;
        }
        let lattice = presentation.lattice();
        let saturated = lattice.saturate();
        if saturated == lattice {
            return None;
        }
        // n (e_i - e_j) in L_N for some n >= 2
        let k = alpha.len();
        for i in 0..k {
            for j in i + 1..k {
                let mut v = vec![Int::zero(); k];
                v[i] = Int::one();
                v[j] = -Int::one();
                if let Ok(Some(mult)) = lattice.multiplier_of(&v) {
                    if mult > Int::one() {
                        return Some(v);
                    }
                }
            }
        }
        return failing_vector(&saturated, &alpha, &m);
    }
    failing_vector(&presentation.lattice().saturate(), &alpha, &m)
}

/// Apéry decision with a witness or a certificate.
pub fn is_apery(n: &KunzNilsemigroup) -> Result<AperyVerdict> {
    match apery_certificate(n, CheckStrategy::default()) {
        Some(certificate) => Ok(AperyVerdict::NotApery { certificate }),
        None => Ok(AperyVerdict::Apery { witness: apery_witness(n)? }),
    }
}

/// An Apéry tuple whose Kunz nilsemigroup is `n`, using the sum of the
/// face's extreme rays as the interior direction.
pub fn apery_witness(n: &KunzNilsemigroup) -> Result<AperyTuple> {
    let geometry = face_geometry(n)?;
    if let Some(reason) = geometry.realizability_failure(n) {
        return Err(KunzError::NotRealizable(reason));
    }
    apery_witness_from_interior(n, &geometry.interior_point())
}

/// As [`apery_witness`], with a caller-supplied point of the relative
/// interior as the push direction.
pub fn apery_witness_from_interior(n: &KunzNilsemigroup, interior: &[Int]) -> Result<AperyTuple> {
    let m = n.m();
    let dim_x = m as usize - 1;
    if interior.len() != dim_x {
        return Err(KunzError::DimensionMismatch { expected: dim_x, got: interior.len() });
    }
    if apery_certificate(n, CheckStrategy::default()).is_some() {
        return Err(KunzError::ContractViolation("witness requested for a non-Apéry nilsemigroup".into()));
    }
    let m_int = Int::from(m);

    // Saturated lattice of integer points on the span of the face.
    let equalities: Vec<Vec<Int>> = n.tight_pairs().iter().map(|&(i, j)| facet_functional(m, i, j)).collect();
    let span = LatticeBasis::from_rows(dim_x, &equalities)?.orthogonal_complement();
    let target: Vec<Int> = (1..m).map(Int::from).collect();
    let base = match solve_residue_point(&span, &target, &m_int)? {
        ResidueSolution::Point(p) => p,
        ResidueSolution::Obstruction(w) => {
            return Err(KunzError::Internal(format!("no Apéry point on the span of an Apéry face (obstruction {w:?})")))
        }
    };

    let direction: Vec<Int> = interior.iter().map(|x| x * &m_int).collect();
    let loose: Vec<Vec<Int>> = crate::kunzcone::kunz_facets(m)
        .into_iter()
        .filter(|p| !n.tight_pairs().contains(p))
        .map(|(i, j)| facet_functional(m, i, j))
        .collect();
    let mut lambda = Int::one();
    let point = loop {
        let x: Vec<Int> = base.iter().zip(&direction).map(|(b, s)| b + &lambda * s).collect();
        let interior_ok = loose.iter().all(|g| scalar::dot(g, &x).is_positive());
        if interior_ok && x.iter().all(|xi| xi > &m_int) {
            break x;
        }
        if lambda.bits() > 64 {
            return Err(KunzError::Internal("interior push did not terminate".into()));
        }
        lambda *= 2;
    };

    let entries = point
        .iter()
        .map(|x| x.to_u64().ok_or_else(|| KunzError::Internal("witness coordinate exceeds u64".into())))
        .collect::<Result<Vec<u64>>>()?;
    let witness = AperyTuple::new(m, entries)?;
    if KunzNilsemigroup::from_apery_tuple(&witness)? != *n {
        return Err(KunzError::Internal("witness lies outside the relative interior".into()));
    }
    if NumericalSemigroup::from_apery_tuple(&witness)?.kunz_nilsemigroup()? != *n {
        return Err(KunzError::Internal("witness semigroup has a different Kunz nilsemigroup".into()));
    }
    Ok(witness)
}
