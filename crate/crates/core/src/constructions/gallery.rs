//! Worked examples with their expected verdicts, recomputed on each run.

use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::exactla::scalar;
use crate::nilsemigroup::{apery_certificate, is_apery, AperyVerdict, CheckStrategy, KunzNilsemigroup};
use crate::numsemigroup::NumericalSemigroup;
use crate::{Int, LatticeBasis};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub claim: String,
    pub holds: bool,
}

fn fact(claim: impl Into<String>, holds: bool) -> Fact {
    Fact { claim: claim.into(), holds }
}

#[derive(Clone, Copy, Debug)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub summary: &'static str,
    check: fn() -> Result<Vec<Fact>>,
}

impl GalleryEntry {
    /// Recomputes every fact of the entry.
    pub fn run(&self) -> Result<Vec<Fact>> {
        (self.check)()
    }
}

pub fn gallery() -> Vec<GalleryEntry> {
    vec![
        GalleryEntry {
            name: "six-seven-eight-nine",
            summary: "<6,7,8,9>: tight sums 1+3, 2+2, 2+3; one trade; dimension 2; Apéry",
            check: six_seven_eight_nine,
        },
        GalleryEntry {
            name: "doubled-atoms-mod-6",
            summary: "two faces of C_6 where 2 or 4 is a sum of two distinct doubles; neither is Apéry",
            check: doubled_atoms,
        },
        GalleryEntry {
            name: "atoms-1-4-7-mod-8",
            summary: "(4,0,-4) in L_N, certificate (1,0,-1) with dot -6 mod 8",
            check: atoms_1_4_7,
        },
        GalleryEntry {
            name: "prime-multiplicity-11",
            summary: "3t1 + 6t2 + t3 + 2t4 = (11,0,-11,0,0), so (1,0,-1,0,0) is in Sat(L)",
            check: prime_multiplicity,
        },
        GalleryEntry {
            name: "unsaturated-but-apery-18",
            summary: "<18,41,43,83,85,92,96,99,106>: (0,2,0,2,0,-1,-1,0) in Sat(L_N) but not L_N; Apéry",
            check: unsaturated_but_apery,
        },
    ]
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn certificate_facts(n: &KunzNilsemigroup) -> Result<Vec<Fact>> {
    let mut out = Vec::new();
    match is_apery(n)? {
        AperyVerdict::NotApery { certificate } => {
            let sat = n.presentation_lattice().saturate();
            let dot = scalar::dot(&certificate, &n.atom_vector());
            out.push(fact("verdict is NotApery", true));
            out.push(fact(format!("certificate {certificate:?} lies in Sat(L_N)"), sat.contains(&certificate)?));
            out.push(fact(format!("certificate dot atoms = {dot} is nonzero mod {}", n.m()), !scalar::modulo(&dot, &Int::from(n.m())).is_zero()));
        }
        AperyVerdict::Apery { .. } => out.push(fact("verdict is NotApery", false)),
    }
    Ok(out)
}

fn six_seven_eight_nine() -> Result<Vec<Fact>> {
    let n = NumericalSemigroup::from_generators(&[6, 7, 8, 9])?.kunz_nilsemigroup()?;
    let mut out = vec![
        fact("tight sums {1+3=4, 2+2=4, 2+3=5}", n.tight_sums() == [(1, 3, 4), (2, 2, 4), (2, 3, 5)]),
        fact("Z(4) = {(0,2,0), (1,0,1)}", n.factorizations(4)? == [vec![0, 2, 0], vec![1, 0, 1]]),
        fact("rho = {((1,0,1),(0,2,0))}", n.minimal_presentation().trades == [(vec![1, 0, 1], vec![0, 2, 0])]),
        fact("dimension 2", n.dimension() == 2),
    ];
    match is_apery(&n)? {
        AperyVerdict::Apery { witness } => {
            out.push(fact("verdict is Apery", true));
            out.push(fact("witness lies in the same face", KunzNilsemigroup::from_apery_tuple(&witness)? == n));
        }
        AperyVerdict::NotApery { .. } => out.push(fact("verdict is Apery", false)),
    }
    Ok(out)
}

fn doubled_atoms() -> Result<Vec<Fact>> {
    let n = KunzNilsemigroup::from_tight_sums(6, &[(1, 1, 2), (4, 4, 2)])?;
    let n2 = KunzNilsemigroup::from_tight_sums(6, &[(1, 1, 2), (3, 5, 2), (5, 5, 4), (1, 3, 4)])?;
    let mut out = vec![
        fact("first table has atoms {1,3,4,5}", n.atoms() == [1, 3, 4, 5]),
        fact("2 = 1+1 = 4+4", n.factorizations(2)?.len() == 2),
    ];
    out.extend(certificate_facts(&n)?);
    out.push(fact("second table has atoms {1,3,5}", n2.atoms() == [1, 3, 5]));
    out.extend(certificate_facts(&n2)?);
    Ok(out)
}

fn atoms_1_4_7() -> Result<Vec<Fact>> {
    let n = KunzNilsemigroup::from_tight_sums(8, &[(1, 1, 2), (1, 2, 3), (4, 7, 3), (7, 7, 6), (6, 7, 5), (1, 4, 5)])?;
    let rho = n.minimal_presentation();
    let mut out = vec![
        fact("atoms (1,4,7)", n.atoms() == [1, 4, 7]),
        fact(
            "rho = {((3,0,0),(0,1,1)), ((0,0,3),(1,1,0))} up to orientation",
            rho.lattice() == LatticeBasis::from_rows(3, &[ints(&[3, -1, -1]), ints(&[-1, -1, 3])])?,
        ),
        fact("(4,0,-4) in L_N", n.presentation_lattice().contains(&ints(&[4, 0, -4]))?),
        fact("dimension 1", n.dimension() == 1),
    ];
    let certificate = apery_certificate(&n, CheckStrategy::Full);
    out.push(fact("certificate (1,0,-1)", certificate == Some(ints(&[1, 0, -1]))));
    out.push(fact("(1,0,-1) . (1,4,7) = -6", scalar::dot(&ints(&[1, 0, -1]), &n.atom_vector()) == Int::from(-6)));
    out.extend(certificate_facts(&n)?);
    Ok(out)
}

fn prime_multiplicity() -> Result<Vec<Fact>> {
    let trades = [ints(&[1, -2, 0, 0, 1]), ints(&[1, 1, -2, 0, 0]), ints(&[0, 0, 1, -2, 1]), ints(&[1, 0, 0, 1, -2])];
    let lattice = LatticeBasis::from_rows(5, &trades)?;
    let mut combination = vec![Int::zero(); 5];
    for (c, t) in [3, 6, 1, 2].into_iter().zip(&trades) {
        for (a, b) in combination.iter_mut().zip(t) {
            *a += Int::from(c) * b;
        }
    }
    let v = ints(&[1, 0, -1, 0, 0]);
    Ok(vec![
        fact("3t1 + 6t2 + t3 + 2t4 = (11,0,-11,0,0)", combination == ints(&[11, 0, -11, 0, 0])),
        fact("(11,0,-11,0,0) in L", lattice.contains(&combination)?),
        fact("(1,0,-1,0,0) in Sat(L)", lattice.saturate().contains(&v)?),
        fact("11 is the least multiple of (1,0,-1,0,0) in L", lattice.multiplier_of(&v)? == Some(Int::from(11))),
    ])
}

fn unsaturated_but_apery() -> Result<Vec<Fact>> {
    let s = NumericalSemigroup::from_generators(&[18, 41, 43, 83, 85, 92, 96, 99, 106])?;
    let n = s.kunz_nilsemigroup()?;
    let lattice = n.presentation_lattice();
    let extra = ints(&[0, 2, 0, 2, 0, -1, -1, 0]);
    let rho = n.minimal_presentation().matrix().to_rows();
    let witness_ok = match is_apery(&n)? {
        AperyVerdict::Apery { witness } => KunzNilsemigroup::from_apery_tuple(&witness)? == n,
        AperyVerdict::NotApery { .. } => false,
    };
    Ok(vec![
        fact("atoms (2,5,6,7,9,11,13,16)", n.atoms() == [2, 5, 6, 7, 9, 11, 13, 16]),
        fact(
            "rho = {(0,3,0,1,0,-2,0,0), (0,1,0,3,0,0,-2,0)}",
            rho == [ints(&[0, 3, 0, 1, 0, -2, 0, 0]), ints(&[0, 1, 0, 3, 0, 0, -2, 0])],
        ),
        fact("(0,2,0,2,0,-1,-1,0) not in L_N", !lattice.contains(&extra)?),
        fact("(0,2,0,2,0,-1,-1,0) in Sat(L_N)", lattice.saturate().contains(&extra)?),
        fact("L_N is not saturated", !lattice.is_saturated()),
        fact("(0,2,0,2,0,-1,-1,0) . atoms = 0", scalar::dot(&extra, &n.atom_vector()).is_zero()),
        fact("verdict is Apery with a witness in the face", witness_ok),
    ])
}
