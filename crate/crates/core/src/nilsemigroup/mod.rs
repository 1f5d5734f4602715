//! Kunz nilsemigroups: the operation table on `Z_m ∪ {∞}`, atoms,
//! factorizations, the divisibility poset, presentations, and the Apéry
//! decision.

mod apery;
mod geometry;
mod presentation;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{Signed, Zero};

pub use apery::{apery_certificate, apery_witness, apery_witness_from_interior, is_apery, AperyVerdict, CheckStrategy};
pub use geometry::{face_geometry, FaceGeometry};
pub use presentation::{Presentation, TieBreak};

use crate::error::{KunzError, Result};
use crate::numsemigroup::AperyTuple;
use crate::{Int, Rational};

/// Factorization vector over the atoms, in ascending atom order.
pub type Factorization = Vec<u32>;

/// `Z_m ∪ {∞}` where `a ⊕ b = a + b` for the listed tight pairs and `∞`
/// otherwise.
///
/// Values of this type always satisfy associativity, partial
/// cancellativity and nilpotency. Values built by
/// [`from_tight_sums`](Self::from_tight_sums) are also checked to be the
/// Kunz nilsemigroup of some non-degenerate face; the other constructors
/// start from a point of the cone, where that holds by construction.
#[derive(Clone, Debug)]
pub struct KunzNilsemigroup {
    m: u32,
    /// Unordered tight pairs `(a, b)`, `a <= b`, sorted.
    tight: Vec<(u32, u32)>,
    /// `m * m` table; `None` is `∞`.
    table: Vec<Option<u32>>,
    atoms: Vec<u32>,
    /// Factorization sets indexed by element, each sorted ascending.
    factorizations: Vec<Vec<Factorization>>,
}

impl PartialEq for KunzNilsemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.tight == other.tight
    }
}

impl Eq for KunzNilsemigroup {}

impl KunzNilsemigroup {
    /// Builds the nilsemigroup with exactly the listed sums `a + b = c`
    /// non-nil and checks that it is the Kunz nilsemigroup of a face.
    pub fn from_tight_sums(m: u32, sums: &[(u32, u32, u32)]) -> Result<Self> {
        if m < 2 {
            return Err(KunzError::InvalidInput("modulus must be at least 2".into()));
        }
        let mut pairs = Vec::with_capacity(sums.len());
        for &(a, b, c) in sums {
            let in_range = |x: u32| x >= 1 && x < m;
            if !(in_range(a) && in_range(b) && in_range(c)) || (a + b) % m != c {
                return Err(KunzError::ResidueMismatch { m, a, b, c });
            }
            pairs.push((a.min(b), a.max(b)));
        }
        let n = Self::from_tight_pairs(m, pairs)?;
        let geometry = face_geometry(&n)?;
        if let Some(reason) = geometry.realizability_failure(&n) {
            return Err(KunzError::NotRealizable(reason));
        }
        Ok(n)
    }

    /// Structural validation only; callers guarantee realizability.
    pub(crate) fn from_tight_pairs(m: u32, mut pairs: Vec<(u32, u32)>) -> Result<Self> {
        pairs.iter_mut().for_each(|p| *p = (p.0.min(p.1), p.0.max(p.1)));
        pairs.sort_unstable();
        pairs.dedup();
        let mu = m as usize;
        let mut table = vec![None; mu * mu];
        for a in 0..m {
            table[a as usize] = Some(a);
            table[a as usize * mu] = Some(a);
        }
        for &(a, b) in &pairs {
            if a == 0 || b >= m || (a + b) % m == 0 {
                return Err(KunzError::InvalidInput(format!("({a}, {b}) is not a valid tight pair mod {m}")));
            }
            let c = Some((a + b) % m);
            table[a as usize * mu + b as usize] = c;
            table[b as usize * mu + a as usize] = c;
        }
        let mut n = KunzNilsemigroup { m, tight: pairs, table, atoms: Vec::new(), factorizations: Vec::new() };
        n.validate_structure()?;
        n.atoms = (1..m)
            .filter(|&p| !(1..m).any(|b| (1..m).any(|c| n.add(b, c) == Some(p))))
            .collect();
        n.factorizations = n.compute_factorizations()?;
        Ok(n)
    }

    /// Kunz nilsemigroup of the face whose relative interior contains `x`.
    pub fn from_interior_point(x: &[Rational]) -> Result<Self> {
        let m = x.len() as u32 + 1;
        if m < 2 {
            return Err(KunzError::InvalidInput("point must have at least one coordinate".into()));
        }
        Self::from_integer_point(&crate::clear_denominators(x))
    }

    pub fn from_integer_point(x: &[Int]) -> Result<Self> {
        let m = x.len() as u32 + 1;
        if m < 2 {
            return Err(KunzError::InvalidInput("point must have at least one coordinate".into()));
        }
        for (i, xi) in x.iter().enumerate() {
            if xi.is_negative() {
                return Err(KunzError::InvalidInput(format!("coordinate {} is negative", i + 1)));
            }
            if xi.is_zero() {
                return Err(KunzError::ZeroCoordinate(i as u32 + 1));
            }
        }
        let coord = |i: u32| &x[i as usize - 1];
        let mut pairs = Vec::new();
        for i in 1..m {
            for j in i..m {
                let s = (i + j) % m;
                if s == 0 {
                    continue;
                }
                let lhs = coord(i) + coord(j);
                match lhs.cmp(coord(s)) {
                    std::cmp::Ordering::Less => return Err(KunzError::ViolatedInequality { i, j }),
                    std::cmp::Ordering::Equal => pairs.push((i, j)),
                    std::cmp::Ordering::Greater => {}
                }
            }
        }
        Self::from_tight_pairs(m, pairs)
    }

    pub fn from_apery_tuple(t: &AperyTuple) -> Result<Self> {
        Self::from_integer_point(&t.as_point())
    }

    fn validate_structure(&self) -> Result<()> {
        let m = self.m;
        let op = |a: Option<u32>, b: Option<u32>| match (a, b) {
            (Some(a), Some(b)) => self.add(a, b),
            _ => None,
        };
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if op(self.add(a, b), Some(c)) != op(Some(a), self.add(b, c)) {
                        return Err(KunzError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in b + 1..m {
                    if let (Some(x), Some(y)) = (self.add(a, b), self.add(a, c)) {
                        if x == y {
                            return Err(KunzError::NotCancellative { a, b, c });
                        }
                    }
                }
            }
        }
        for a in 1..m {
            let mut p = Some(a);
            let mut steps = 0;
            while let Some(q) = p {
                steps += 1;
                if steps > m {
                    return Err(KunzError::NotNilpotent(a));
                }
                p = self.add(q, a);
                if p == Some(0) {
                    return Err(KunzError::NotNilpotent(a));
                }
            }
        }
        Ok(())
    }

    fn compute_factorizations(&self) -> Result<Vec<Vec<Factorization>>> {
        let k = self.atoms.len();
        let mut memo: Vec<Option<Vec<Factorization>>> = vec![None; self.m as usize];
        memo[0] = Some(vec![vec![0; k]]);
        for p in 1..self.m {
            self.factorize(p, &mut memo, 0)?;
        }
        Ok(memo.into_iter().map(|z| z.expect("every element factored")).collect())
    }

    fn factorize(&self, p: u32, memo: &mut Vec<Option<Vec<Factorization>>>, depth: u32) -> Result<()> {
        if memo[p as usize].is_some() {
            return Ok(());
        }
        if depth > self.m {
            return Err(KunzError::Internal("cyclic divisibility relation".into()));
        }
        let mut out = Vec::new();
        for (i, &a) in self.atoms.iter().enumerate() {
            let q = (p + self.m - a) % self.m;
            if self.add(a, q) != Some(p) {
                continue;
            }
            self.factorize(q, memo, depth + 1)?;
            for z in memo[q as usize].as_ref().expect("just computed") {
                let mut z = z.clone();
                z[i] += 1;
                out.push(z);
            }
        }
        out.sort_unstable();
        out.dedup();
        if out.is_empty() {
            return Err(KunzError::Internal(format!("element {p} has no factorization")));
        }
        memo[p as usize] = Some(out);
        Ok(())
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `a ⊕ b` for residues `a, b`; `None` is `∞`.
    pub fn add(&self, a: u32, b: u32) -> Option<u32> {
        self.table[(a % self.m) as usize * self.m as usize + (b % self.m) as usize]
    }

    pub fn tight_pairs(&self) -> &[(u32, u32)] {
        &self.tight
    }

    /// Tight sums as `(a, b, a + b mod m)`.
    pub fn tight_sums(&self) -> Vec<(u32, u32, u32)> {
        self.tight.iter().map(|&(a, b)| (a, b, (a + b) % self.m)).collect()
    }

    /// Atoms in ascending order; this order indexes every factorization.
    pub fn atoms(&self) -> &[u32] {
        &self.atoms
    }

    pub fn embedding_dimension(&self) -> usize {
        self.atoms.len()
    }

    /// `α = (a_1, ..., a_k)`.
    pub fn atom_vector(&self) -> Vec<Int> {
        self.atoms.iter().map(|&a| Int::from(a)).collect()
    }

    /// Complete factorization set of `p`, sorted lexicographically.
    pub fn factorizations(&self, p: u32) -> Result<&[Factorization]> {
        if p >= self.m {
            return Err(KunzError::InvalidInput(format!("{p} is not an element of Z_{}", self.m)));
        }
        Ok(&self.factorizations[p as usize])
    }

    /// Whether `a` divides `b`, i.e. `a ⊕ c = b` for some `c`.
    pub fn divides(&self, a: u32, b: u32) -> bool {
        (0..self.m).any(|c| self.add(a, c) == Some(b))
    }

    /// Covering relations `(a, b)`, `a ≺ b`, of the divisibility poset on
    /// the non-nil elements, sorted.
    pub fn hasse_diagram(&self) -> Vec<(u32, u32)> {
        let m = self.m;
        let below = |a: u32, b: u32| a != b && self.divides(a, b);
        let mut covers = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if below(a, b) && !(0..m).any(|t| below(a, t) && below(t, b)) {
                    covers.push((a, b));
                }
            }
        }
        covers
    }

    /// Length of the longest chain from `0` to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.m as usize];
        for (p, zs) in self.factorizations.iter().enumerate() {
            h[p] = zs.iter().map(|z| z.iter().sum::<u32>() as usize).max().unwrap_or(0);
        }
        h
    }

    /// Graphviz rendering of the divisibility poset, layered by height,
    /// with edges pointing up along covers.
    pub fn to_dot(&self) -> String {
        let heights = self.heights();
        let mut layers: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for p in 0..self.m {
            layers.entry(heights[p as usize]).or_default().push(p);
        }
        let mut s = String::new();
        let _ = writeln!(s, "digraph kunz_poset {{");
        let _ = writeln!(s, "  rankdir=BT;");
        let _ = writeln!(s, "  node [shape=circle];");
        for nodes in layers.values() {
            let names: Vec<String> = nodes.iter().map(|p| format!("{p};")).collect();
            let _ = writeln!(s, "  {{ rank=same; {} }}", names.join(" "));
        }
        for (a, b) in self.hasse_diagram() {
            let _ = writeln!(s, "  {a} -> {b};");
        }
        s.push_str("}\n");
        s
    }
}
