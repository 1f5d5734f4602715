//! Checks shared by the property tests and the acceptance run. Each returns
//! `Err` with a description of the first counterexample.

#![allow(dead_code)]

use kunz_core::exactla::{scalar, Lattice, Matrix};
use kunz_core::kunzcone::{build_cone, classify, enumerate_faces, face_is_apery, facet_functional, Convention, Face, KunzCone};
use kunz_core::nilsemigroup::{apery_certificate, is_apery, AperyVerdict, CheckStrategy, KunzNilsemigroup, TieBreak};
use kunz_core::{Int, Rational};
use num_traits::Zero;

pub type Check = Result<(), String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Enumerated cone together with its non-degenerate faces.
pub struct Corpus {
    pub cone: KunzCone,
    pub faces: Vec<Face>,
}

pub fn corpus(m: u32) -> Corpus {
    let cone = build_cone(m).expect("cone");
    let faces = enumerate_faces(&cone, false).expect("faces");
    Corpus { cone, faces }
}

pub fn nil(face: &Face) -> &KunzNilsemigroup {
    face.nilsemigroup.as_ref().expect("non-degenerate face")
}

// ---- lattices -------------------------------------------------------------

pub fn duality(l: &Lattice<i64>) -> Check {
    let twice = l.orthogonal_complement().orthogonal_complement();
    ensure(twice == l.saturate(), || format!("perp perp differs from saturation for {:?}", l.basis().to_rows()))
}

fn encode(v: &[i64], m: i64) -> usize {
    v.iter().rev().fold(0usize, |acc, x| acc * m as usize + x.rem_euclid(m) as usize)
}

/// Image of the lattice in `Z_m^n` as a membership table over `m^n` codes.
fn image_mod(l: &Lattice<i64>, m: i64) -> Vec<bool> {
    let n = l.ambient_dim();
    let basis = l.basis().to_rows();
    let mut seen = vec![false; (m as usize).pow(n as u32)];
    let mut coeffs = vec![0i64; basis.len()];
    loop {
        let mut v = vec![0i64; n];
        for (c, b) in coeffs.iter().zip(&basis) {
            for (x, y) in v.iter_mut().zip(b) {
                *x = (*x + c * y).rem_euclid(m);
            }
        }
        seen[encode(&v, m)] = true;
        let mut i = 0;
        loop {
            if i == coeffs.len() {
                return seen;
            }
            coeffs[i] += 1;
            if coeffs[i] < m {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// For saturated `l`: its image mod `m` has `m^rank` elements and the image
/// of `l^⊥` equals the orthogonal of the image, both found by exhaustion.
pub fn reduction_mod(l: &Lattice<i64>, m: i64) -> Check {
    let n = l.ambient_dim();
    let image = image_mod(l, m);
    let size = image.iter().filter(|&&b| b).count();
    ensure(size == (m as usize).pow(l.rank() as u32), || {
        format!("image of {:?} mod {m} has {size} elements", l.basis().to_rows())
    })?;
    let perp_image = image_mod(&l.orthogonal_complement(), m);
    let basis = l.basis().to_rows();
    let mut y = vec![0i64; n];
    for (code, &in_perp_image) in perp_image.iter().enumerate() {
        let mut c = code;
        for yi in y.iter_mut() {
            *yi = (c % m as usize) as i64;
            c /= m as usize;
        }
        let orthogonal = basis.iter().all(|b| b.iter().zip(&y).map(|(a, b)| a * b).sum::<i64>().rem_euclid(m) == 0);
        ensure(orthogonal == in_perp_image, || {
            format!("{y:?} mod {m}: orthogonal to the image {orthogonal}, in the image of the complement {in_perp_image}")
        })?;
    }
    Ok(())
}

/// Saturated sublattices of `Z^n`, `n <= 4`, spanned by one or two small
/// vectors, closed under orthogonal complement.
pub fn small_saturated_lattices() -> Vec<Lattice<i64>> {
    let mut out = std::collections::BTreeSet::new();
    for n in 1..=4usize {
        let singles = vectors(n, if n <= 3 { -2 } else { -1 }, 2);
        let pair_range = if n <= 3 { (-1, 2) } else { (-1, 1) };
        let pairs = vectors(n, pair_range.0, pair_range.1);
        let mut add = |rows: &[&Vec<i64>]| {
            let l = Lattice::from_rows(n, rows).expect("rows").saturate();
            out.insert(key(&l));
            out.insert(key(&l.orthogonal_complement()));
        };
        add(&[]);
        for v in &singles {
            add(&[v]);
        }
        for (i, v) in pairs.iter().enumerate() {
            for w in &pairs[i + 1..] {
                add(&[v, w]);
            }
        }
    }
    out.into_iter().map(|(n, rows)| Lattice::from_rows(n, &rows).expect("rows")).collect()
}

fn key(l: &Lattice<i64>) -> (usize, Vec<Vec<i64>>) {
    (l.ambient_dim(), l.basis().to_rows())
}

fn vectors(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (lo..=hi).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

// ---- verdicts -------------------------------------------------------------

fn to_rational(x: &[Int]) -> Vec<Rational> {
    x.iter().cloned().map(Rational::from_integer).collect()
}

/// The verdict of `n` is backed by a witness whose semigroup has `n` as its
/// Kunz nilsemigroup, or by a certificate in `Sat(L_N)` with
/// `v . atoms ≢ 0 (mod m)`.
pub fn verdict_sound(n: &KunzNilsemigroup) -> Result<bool, String> {
    let verdict = is_apery(n).map_err(|e| format!("{:?}: {e}", n.tight_sums()))?;
    match &verdict {
        AperyVerdict::Apery { witness } => {
            ensure(witness.has_multiplicity_m(), || format!("witness {witness:?} has smaller multiplicity"))?;
            let back = KunzNilsemigroup::from_interior_point(&to_rational(&witness.as_point())).map_err(|e| e.to_string())?;
            ensure(&back == n, || format!("witness {witness:?} lies on another face than {:?}", n.tight_sums()))?;
        }
        AperyVerdict::NotApery { certificate } => {
            let sat = n.presentation_lattice().saturate();
            ensure(sat.contains(certificate).unwrap_or(false), || format!("certificate {certificate:?} not in Sat(L_N)"))?;
            let dot = scalar::dot(certificate, &n.atom_vector());
            ensure(!scalar::modulo(&dot, &Int::from(n.m())).is_zero(), || {
                format!("certificate {certificate:?} has dot {dot} divisible by {}", n.m())
            })?;
        }
    }
    let fast = apery_certificate(n, CheckStrategy::FastPaths).is_none();
    let full = apery_certificate(n, CheckStrategy::Full).is_none();
    ensure(fast == full && full == verdict.is_apery(), || format!("strategies disagree on {:?}", n.tight_sums()))?;
    Ok(verdict.is_apery())
}

// ---- face invariants ------------------------------------------------------

pub fn presentation_independent(n: &KunzNilsemigroup) -> Check {
    let lattice = n.presentation_lattice();
    for policy in [TieBreak::Descending, TieBreak::Ascending, TieBreak::Chain] {
        let p = n.presentation_with(policy);
        ensure(p.lattice() == lattice, || format!("{policy:?} lattice differs on {:?}", n.tight_sums()))?;
        ensure(p.len() == n.minimal_presentation().len(), || format!("{policy:?} size differs on {:?}", n.tight_sums()))?;
    }
    Ok(())
}

/// Ray rank, `e - rk M_ρ` and `(m-1) - rk H_F` all equal the face dimension.
pub fn dimension_triple(cone: &KunzCone, face: &Face) -> Check {
    let m = face.m;
    let rays: Vec<Vec<Int>> = face.ray_indices.as_ref().expect("rays").iter().map(|i| cone.rays[i].clone()).collect();
    let ray_rank = Matrix::from_rows(m as usize - 1, &rays).expect("rays").rank();
    let n = nil(face);
    let by_presentation = n.embedding_dimension() - n.minimal_presentation().matrix().rank();
    let h: Vec<Vec<Int>> = face.equality_set.iter().map(|&(i, j)| facet_functional(m, i, j)).collect();
    let by_facets = (m as usize - 1) - Matrix::from_rows(m as usize - 1, &h).expect("facets").rank();
    ensure(ray_rank == face.dim && by_presentation == face.dim && by_facets == face.dim, || {
        format!("{:?}: dim {} rays {ray_rank} presentation {by_presentation} facets {by_facets}", face.equality_set, face.dim)
    })
}

pub fn dimension_lower_bound(face: &Face) -> Check {
    let n = nil(face);
    let slack: usize = (1..n.m()).map(|p| n.factorizations(p).map(|z| z.len().saturating_sub(1)).unwrap_or(0)).sum();
    ensure(face.dim + slack >= n.embedding_dimension(), || {
        format!("{:?}: dim {} < e {} - {slack}", face.equality_set, face.dim, n.embedding_dimension())
    })
}

fn coordinate_sum(z: &[u32]) -> u32 {
    z.iter().sum()
}

pub fn coordinate_sum_two(n: &KunzNilsemigroup) -> Check {
    let (m, e) = (n.m() as usize, n.embedding_dimension());
    for p in 1..n.m() {
        let Ok(zs) = n.factorizations(p) else { continue };
        let a = zs.iter().filter(|z| coordinate_sum(z) == 2).count();
        let fail = |part: &str| format!("{:?}, p = {p}, |A| = {a}: part {part}", n.tight_sums());
        ensure(a <= e / 2 + 1, || fail("a"))?;
        if m % 2 == 1 && e % 2 == 0 {
            ensure(a <= e / 2, || fail("b"))?;
        }
        if m % 2 == 0 && a == e / 2 + 1 {
            ensure((1..n.m()).any(|q| n.add(q, q) == Some(p)), || fail("c"))?;
        }
    }
    Ok(())
}

/// The bounds on `d` for `e` in `{m-1, m-2, m-3}`, the two pairs without
/// Apéry faces, and the bound from a coordinate-sum-3 factorization.
pub fn extremal_embedding_dimension(face: &Face) -> Check {
    let n = nil(face);
    let (m, e, d) = (face.m as usize, n.embedding_dimension(), face.dim);
    let fail = |what: &str| format!("{:?}: m {m}, e {e}, d {d}: {what}", face.equality_set);
    ensure(d <= e, || fail("d > e"))?;
    if e == m - 1 {
        ensure(d == m - 1, || fail("e = m-1 needs d = m-1"))?;
    }
    if e == m - 2 {
        ensure((m - 1) / 2 <= d, || fail("e = m-2 needs d >= (m-1)/2"))?;
    }
    if e == m - 3 && m % 2 == 1 {
        ensure(d >= 2, || fail("odd m, e = m-3 needs d >= 2"))?;
    }
    if e == m - 3 {
        let has_three = (1..face.m).any(|p| n.factorizations(p).map(|zs| zs.iter().any(|z| coordinate_sum(z) == 3)).unwrap_or(false));
        if has_three {
            ensure(d >= (m - 3) / 2, || fail("a coordinate-sum-3 factorization needs d >= (m-3)/2"))?;
        }
    }
    if (e == m - 2 && 2 * d + 2 == m) || (e == m - 3 && d == 1) {
        ensure(m % 2 == 0, || fail("excluded pair at odd m"))?;
        ensure(!face_is_apery(face), || fail("excluded pair is Apéry"))?;
    }
    Ok(())
}

// ---- census ---------------------------------------------------------------

pub struct TableColumn {
    pub m: u32,
    pub non_apery: &'static [usize],
    pub maximal: &'static [usize],
    pub percent: &'static [u32],
}

pub const TABLE: [TableColumn; 3] = [
    TableColumn { m: 6, non_apery: &[6, 6, 2], maximal: &[2, 0, 2], percent: &[75, 21, 7] },
    TableColumn { m: 8, non_apery: &[23, 83, 93, 34, 3], maximal: &[2, 0, 2, 0, 3], percent: &[54, 34, 20, 9, 2] },
    TableColumn { m: 9, non_apery: &[48, 111, 68, 12], maximal: &[0, 13, 0, 12], percent: &[40, 14, 4, 1] },
];

pub fn census_matches(column: &TableColumn) -> Result<String, String> {
    let cone = build_cone(column.m).map_err(|e| e.to_string())?;
    let census = classify(&cone).map_err(|e| e.to_string())?;
    let rows = census.rows(Convention::ExcludeDegenerate);
    let k = column.non_apery.len();
    let got = |f: fn(&kunz_core::kunzcone::CensusRow) -> usize| rows.iter().map(f).collect::<Vec<_>>();
    let non_apery = got(|r| r.non_apery);
    let maximal = got(|r| r.non_apery_maximal);
    let percent: Vec<u32> = rows.iter().map(|r| r.percent).collect();
    ensure(
        non_apery[..k] == *column.non_apery
            && maximal[..k] == *column.maximal
            && percent[..k] == *column.percent
            && non_apery[k..].iter().all(|&c| c == 0),
        || format!("non-Apéry {non_apery:?}, maximal {maximal:?}, percent {percent:?}"),
    )?;
    let total: usize = rows.iter().map(|r| r.total).sum();
    Ok(format!("{total} faces, non-Apéry {:?}, maximal {:?}, percent {:?}", column.non_apery, column.maximal, column.percent))
}

