//! Per-dimension counts of non-Apéry faces.

use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_faces_with_limit, max_m_from_env, Face, KunzCone};
use crate::error::Result;
use crate::nilsemigroup::{apery_certificate, CheckStrategy};

/// Whether degenerate faces, which never contain Apéry points, enter the
/// tally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    IncludeDegenerate,
    ExcludeDegenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub m: u32,
    pub d: usize,
    /// All faces of dimension `d`.
    pub total: usize,
    pub degenerate: usize,
    pub non_apery: usize,
    /// Non-Apéry faces not strictly contained in another non-Apéry face.
    pub non_apery_maximal: usize,
    /// `100 * non_apery / counted`, rounded half up to tenths and then half
    /// up to an integer, where `counted` drops degenerate faces under
    /// [`Convention::ExcludeDegenerate`].
    pub percent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub m: u32,
    pub include_degenerate: Vec<CensusRow>,
    pub exclude_degenerate: Vec<CensusRow>,
}

impl Census {
    pub fn rows(&self, convention: Convention) -> &[CensusRow] {
        match convention {
            Convention::IncludeDegenerate => &self.include_degenerate,
            Convention::ExcludeDegenerate => &self.exclude_degenerate,
        }
    }

    /// CSV with a header line.
    pub fn to_csv(&self, convention: Convention) -> String {
        let mut s = String::from("m,d,total,degenerate,non_apery,non_apery_maximal,percent\n");
        for r in self.rows(convention) {
            s.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.m, r.d, r.total, r.degenerate, r.non_apery, r.non_apery_maximal, r.percent
            ));
        }
        s
    }
}

fn rounded_percent(part: usize, whole: usize) -> u32 {
    if whole == 0 {
        return 0;
    }
    // Tenths first, then whole percent, each rounded half up.
    let tenths = (2000 * part + whole) / (2 * whole);
    ((tenths + 5) / 10) as u32
}

/// Census of `C_m` under both conventions, refusing `m` above the
/// environment limit.
pub fn classify(cone: &KunzCone) -> Result<Census> {
    classify_with_limit(cone, max_m_from_env())
}

pub fn classify_with_limit(cone: &KunzCone, limit: u32) -> Result<Census> {
    let faces = enumerate_faces_with_limit(cone, true, limit)?;
    let apery: Vec<bool> = faces.par_iter().map(face_is_apery).collect();
    Ok(Census {
        m: cone.m,
        include_degenerate: tally(cone.m, &faces, &apery, Convention::IncludeDegenerate),
        exclude_degenerate: tally(cone.m, &faces, &apery, Convention::ExcludeDegenerate),
    })
}

/// Degenerate faces are never Apéry.
pub fn face_is_apery(face: &Face) -> bool {
    match &face.nilsemigroup {
        Some(n) => apery_certificate(n, CheckStrategy::FastPaths).is_none(),
        None => false,
    }
}

fn tally(m: u32, faces: &[Face], apery: &[bool], convention: Convention) -> Vec<CensusRow> {
    let counted = |f: &Face| convention == Convention::IncludeDegenerate || !f.degenerate;
    let bad: Vec<usize> = (0..faces.len()).filter(|&i| !apery[i] && counted(&faces[i])).collect();
    let maximal: Vec<bool> = bad
        .par_iter()
        .map(|&i| {
            let ri = faces[i].ray_indices.as_ref().expect("enumerated faces carry rays");
            !bad.iter().any(|&j| {
                faces[j].dim > faces[i].dim && ri.is_subset(faces[j].ray_indices.as_ref().expect("enumerated faces carry rays"))
            })
        })
        .collect();
    (1..m as usize)
        .map(|d| {
            let in_dim: Vec<&Face> = faces.iter().filter(|f| f.dim == d).collect();
            let total = in_dim.len();
            let degenerate = in_dim.iter().filter(|f| f.degenerate).count();
            let non_apery = bad.iter().filter(|&&i| faces[i].dim == d).count();
            let non_apery_maximal = bad.iter().zip(&maximal).filter(|(&i, &mx)| mx && faces[i].dim == d).count();
            let denominator = match convention {
                Convention::IncludeDegenerate => total,
                Convention::ExcludeDegenerate => total - degenerate,
            };
            CensusRow { m, d, total, degenerate, non_apery, non_apery_maximal, percent: rounded_percent(non_apery, denominator) }
        })
        .collect()
}
