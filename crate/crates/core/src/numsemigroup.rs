//! Numerical semigroups: minimal generators, Apéry sets and tuples, the
//! Kunz nilsemigroup quotient, and a bounded enumeration of Apéry tuples.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{KunzError, Result};
use crate::nilsemigroup::KunzNilsemigroup;

/// A cofinite additive submonoid of the non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    multiplicity: u64,
    /// `members[n]` for `0 <= n <= max Apéry element`.
    members: Vec<bool>,
    /// Apéry set with respect to the multiplicity, indexed by residue.
    apery: Vec<u64>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens` and reduces them to the
    /// minimal generating set.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(KunzError::InvalidInput("generator list is empty".into()));
        }
        if gens.contains(&0) {
            return Err(KunzError::InvalidInput("generators must be positive".into()));
        }
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(KunzError::NotCofinite(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0];

        // Membership table, filled until every residue class mod m is hit.
        let mut members = vec![true];
        let mut apery = vec![u64::MAX; m as usize];
        apery[0] = 0;
        let mut missing = m - 1;
        let mut n = 0u64;
        while missing > 0 {
            n += 1;
            let hit = sorted.iter().take_while(|&&g| g <= n).any(|&g| members[(n - g) as usize]);
            members.push(hit);
            let r = (n % m) as usize;
            if hit && apery[r] == u64::MAX {
                apery[r] = n;
                missing -= 1;
            }
        }

        let mut generators = vec![m];
        for r in 1..m as usize {
            let w = apery[r];
            let decomposes = (1..m as usize).any(|s| {
                let a = apery[s];
                a < w && {
                    let rest = w - a;
                    rest % m != 0 && apery[(rest % m) as usize] == rest
                }
            });
            if !decomposes {
                generators.push(w);
            }
        }
        generators.sort_unstable();
        Ok(NumericalSemigroup { generators, multiplicity: m, members, apery })
    }

    /// The semigroup generated by `m` and the entries of an Apéry tuple.
    pub fn from_apery_tuple(tuple: &AperyTuple) -> Result<Self> {
        let mut gens = vec![tuple.m as u64];
        gens.extend_from_slice(&tuple.entries);
        Self::from_generators(&gens)
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, n: u64) -> bool {
        match self.members.get(n as usize) {
            Some(&b) => b,
            None => n >= self.apery[(n % self.multiplicity) as usize],
        }
    }

    /// `(a_1, ..., a_{m-1})` with respect to the multiplicity.
    pub fn apery_tuple(&self) -> AperyTuple {
        AperyTuple { m: self.multiplicity as u32, entries: self.apery[1..].to_vec() }
    }

    /// Apéry set `{ s in S : s - n not in S }` indexed by residue mod `n`,
    /// by shortest paths on the residues mod `n`.
    pub fn apery_set_wrt(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 || !self.contains(n) {
            return Err(KunzError::InvalidInput(format!("{n} is not a positive element of the semigroup")));
        }
        let mut dist = vec![u64::MAX; n as usize];
        dist[0] = 0;
        let mut heap = BinaryHeap::from([Reverse((0u64, 0u64))]);
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > dist[r as usize] {
                continue;
            }
            for &g in &self.generators {
                let (nd, nr) = (d + g, (r + g) % n);
                if nd < dist[nr as usize] {
                    dist[nr as usize] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        Ok(dist)
    }

    /// Apéry tuple with respect to an arbitrary element `n >= 2` of `S`.
    pub fn apery_tuple_wrt(&self, n: u64) -> Result<AperyTuple> {
        if n < 2 {
            return Err(KunzError::InvalidInput("modulus must be at least 2".into()));
        }
        let set = self.apery_set_wrt(n)?;
        Ok(AperyTuple { m: n as u32, entries: set[1..].to_vec() })
    }

    /// Kunz nilsemigroup: `a + b` is non-nil exactly when `a_a + a_b = a_{a+b}`.
    pub fn kunz_nilsemigroup(&self) -> Result<KunzNilsemigroup> {
        if self.multiplicity < 2 {
            return Err(KunzError::InvalidInput("the semigroup N has no Kunz nilsemigroup".into()));
        }
        KunzNilsemigroup::from_apery_tuple(&self.apery_tuple())
    }
}

/// Minimal elements in each nonzero residue class modulo `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AperyTuple {
    pub m: u32,
    #[serde(rename = "apery")]
    pub entries: Vec<u64>,
}

impl AperyTuple {
    /// Validates residues and the Kunz inequalities.
    pub fn new(m: u32, entries: Vec<u64>) -> Result<Self> {
        if m < 2 {
            return Err(KunzError::InvalidInput("modulus must be at least 2".into()));
        }
        if entries.len() != m as usize - 1 {
            return Err(KunzError::DimensionMismatch { expected: m as usize - 1, got: entries.len() });
        }
        for (i, &a) in entries.iter().enumerate() {
            if a % m as u64 != (i + 1) as u64 {
                return Err(KunzError::InvalidInput(format!(
                    "entry {a} at index {} is not congruent to {} mod {m}",
                    i + 1,
                    i + 1
                )));
            }
        }
        let t = AperyTuple { m, entries };
        if let Some((i, j)) = t.first_violation() {
            return Err(KunzError::ViolatedInequality { i, j });
        }
        Ok(t)
    }

    pub fn get(&self, i: u32) -> u64 {
        self.entries[i as usize - 1]
    }

    fn first_violation(&self) -> Option<(u32, u32)> {
        let m = self.m;
        for i in 1..m {
            for j in i..m {
                let s = (i + j) % m;
                if s != 0 && self.get(i) + self.get(j) < self.get(s) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// True when every entry exceeds `m`, i.e. the generated semigroup has
    /// multiplicity exactly `m`.
    pub fn has_multiplicity_m(&self) -> bool {
        self.entries.iter().all(|&a| a > self.m as u64)
    }

    pub fn as_point(&self) -> Vec<crate::Int> {
        self.entries.iter().map(|&a| crate::Int::from(a)).collect()
    }
}

/// Apéry points `a_i = i + m x_i` with `0 <= x_i <= kmax` that satisfy
/// every Kunz inequality, in lexicographic order of `(x_1, ..., x_{m-1})`.
///
/// Tuples with some `x_i = 0` belong to semigroups of smaller multiplicity;
/// they are yielded too and can be told apart with
/// [`AperyTuple::has_multiplicity_m`].
pub fn enumerate_with_bounded_kunz(m: u32, kmax: u64) -> Result<BoundedKunzTuples> {
    if m < 2 {
        return Err(KunzError::InvalidInput("modulus must be at least 2".into()));
    }
    Ok(BoundedKunzTuples { m, kmax, prefix: Vec::new(), next_value: 0, exhausted: false })
}

pub struct BoundedKunzTuples {
    m: u32,
    kmax: u64,
    /// Assigned `a_1, ..., a_t`.
    prefix: Vec<u64>,
    /// Next `x` value to try at position `t + 1`.
    next_value: u64,
    exhausted: bool,
}

impl BoundedKunzTuples {
    /// Checks the inequalities whose indices are all at most `t` and that
    /// involve `t`, the last assigned position.
    fn prefix_consistent(&self) -> bool {
        let m = self.m;
        let t = self.prefix.len() as u32;
        let a = |i: u32| self.prefix[i as usize - 1];
        for i in 1..=t {
            for j in i..=t {
                let s = (i + j) % m;
                if s == 0 || s > t || (i != t && j != t && s != t) {
                    continue;
                }
                if a(i) + a(j) < a(s) {
                    return false;
                }
            }
        }
        true
    }

    fn pop(&mut self) {
        match self.prefix.pop() {
            Some(a) => {
                let i = self.prefix.len() as u64 + 1;
                self.next_value = (a - i) / self.m as u64 + 1;
            }
            None => self.exhausted = true,
        }
    }
}

impl Iterator for BoundedKunzTuples {
    type Item = AperyTuple;

    fn next(&mut self) -> Option<AperyTuple> {
        let n = self.m as usize - 1;
        loop {
            if self.exhausted {
                return None;
            }
            if self.prefix.len() == n {
                let out = AperyTuple { m: self.m, entries: self.prefix.clone() };
                self.pop();
                return Some(out);
            }
            if self.next_value > self.kmax {
                self.pop();
                continue;
            }
            let i = self.prefix.len() as u64 + 1;
            self.prefix.push(i + self.m as u64 * self.next_value);
            if self.prefix_consistent() {
                self.next_value = 0;
            } else {
                self.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_generators() {
        let s = NumericalSemigroup::from_generators(&[6, 7, 8, 9]).unwrap();
        assert_eq!(s.generators(), &[6, 7, 8, 9]);
        assert_eq!(s.multiplicity(), 6);
        let s = NumericalSemigroup::from_generators(&[9, 13, 7, 6, 8]).unwrap();
        assert_eq!(s.generators(), &[6, 7, 8, 9]);
    }

    #[test]
    fn generator_errors() {
        assert_eq!(NumericalSemigroup::from_generators(&[4, 6]), Err(KunzError::NotCofinite(2)));
        assert!(matches!(NumericalSemigroup::from_generators(&[]), Err(KunzError::InvalidInput(_))));
        assert!(matches!(NumericalSemigroup::from_generators(&[0, 1]), Err(KunzError::InvalidInput(_))));
    }

    #[test]
    fn apery_tuples() {
        let s = NumericalSemigroup::from_generators(&[6, 7, 8, 9]).unwrap();
        assert_eq!(s.apery_tuple().entries, vec![7, 8, 9, 16, 17]);
        let s = NumericalSemigroup::from_generators(&(7..14).collect::<Vec<_>>()).unwrap();
        assert_eq!(s.apery_tuple().entries, vec![8, 9, 10, 11, 12, 13]);
    }

    #[test]
    fn apery_wrt_matches_table() {
        let s = NumericalSemigroup::from_generators(&[18, 41, 43, 83, 85, 92, 96, 99, 106]).unwrap();
        assert_eq!(s.apery_tuple(), s.apery_tuple_wrt(18).unwrap());
        let minimal_residues: Vec<u64> = s.generators()[1..].iter().map(|g| g % 18).collect();
        assert_eq!(minimal_residues, vec![5, 7, 11, 13, 2, 6, 9, 16]);
    }

    #[test]
    fn membership() {
        let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        let gaps: Vec<u64> = (0..20).filter(|&n| !s.contains(n)).collect();
        assert_eq!(gaps, vec![1, 2, 4, 7]);
    }

    #[test]
    fn tuple_validation() {
        assert!(AperyTuple::new(6, vec![7, 8, 9, 16, 17]).is_ok());
        assert!(matches!(AperyTuple::new(6, vec![7, 8, 9, 22, 17]), Err(KunzError::ViolatedInequality { .. })));
        assert!(AperyTuple::new(6, vec![7, 8, 9, 16]).is_err());
        assert!(AperyTuple::new(6, vec![8, 8, 9, 16, 17]).is_err());
    }

    #[test]
    fn bounded_enumeration_small_cases() {
        let m2: Vec<Vec<u64>> = enumerate_with_bounded_kunz(2, 3).unwrap().map(|t| t.entries).collect();
        assert_eq!(m2, vec![vec![1], vec![3], vec![5], vec![7]]);
        let m6: Vec<AperyTuple> = enumerate_with_bounded_kunz(6, 0).unwrap().collect();
        assert_eq!(m6.len(), 1);
        assert_eq!(m6[0].entries, vec![1, 2, 3, 4, 5]);
        let m6: Vec<Vec<u64>> = enumerate_with_bounded_kunz(6, 2).unwrap().map(|t| t.entries).collect();
        assert!(m6.contains(&vec![7, 8, 9, 10, 11]));
        assert!(m6.contains(&vec![7, 8, 9, 16, 17]));
    }

    /// Brute force over the full box agrees with the pruned search.
    #[test]
    fn bounded_enumeration_matches_brute_force() {
        for m in 2..=6u32 {
            for kmax in 0..=2u64 {
                let n = m as usize - 1;
                let mut expected = Vec::new();
                let total = (kmax + 1).pow(n as u32);
                for code in 0..total {
                    let mut c = code;
                    let mut xs = vec![0u64; n];
                    for k in (0..n).rev() {
                        xs[k] = c % (kmax + 1);
                        c /= kmax + 1;
                    }
                    let entries: Vec<u64> = (0..n).map(|i| (i + 1) as u64 + m as u64 * xs[i]).collect();
                    if AperyTuple::new(m, entries.clone()).is_ok() {
                        expected.push(entries);
                    }
                }
                let got: Vec<Vec<u64>> = enumerate_with_bounded_kunz(m, kmax).unwrap().map(|t| t.entries).collect();
                assert_eq!(got, expected, "m={m} kmax={kmax}");
            }
        }
    }

    #[test]
    fn round_trip_through_semigroup() {
        for t in enumerate_with_bounded_kunz(5, 3).unwrap() {
            let s = NumericalSemigroup::from_apery_tuple(&t).unwrap();
            assert_eq!(s.apery_tuple_wrt(5).unwrap(), t);
            assert_eq!(s.multiplicity() == 5, t.has_multiplicity_m());
        }
    }
}
