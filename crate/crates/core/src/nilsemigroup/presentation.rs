use super::{Factorization, KunzNilsemigroup};
use crate::{Int, IntegerMatrix, LatticeBasis};

/// How trades are chosen when several spanning choices exist. Every policy
/// yields a presentation; the presentation lattice does not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Factorizations in descending lexicographic order; every other
    /// component is joined to the component of the first factorization
    /// through the first vertex of each.
    #[default]
    Descending,
    /// As `Descending`, with ascending lexicographic order.
    Ascending,
    /// Ascending order; each component is joined to the previous one
    /// through the last vertex of each.
    Chain,
}

/// A set of trades `(z, z')` between factorizations of the same non-nil
/// element that generates the factorization congruence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub atoms: Vec<u32>,
    pub trades: Vec<(Factorization, Factorization)>,
}

impl Presentation {
    pub fn len(&self) -> usize {
        self.trades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trades.is_empty()
    }

    /// Rows `z - z'`, one per trade.
    pub fn matrix(&self) -> IntegerMatrix {
        let k = self.atoms.len();
        let rows: Vec<Vec<Int>> = self
            .trades
            .iter()
            .map(|(z, w)| z.iter().zip(w).map(|(&a, &b)| Int::from(a) - Int::from(b)).collect())
            .collect();
        IntegerMatrix::from_rows(k, &rows).expect("trade vectors have one entry per atom")
    }

    pub fn lattice(&self) -> LatticeBasis {
        LatticeBasis::from_generators(&self.matrix())
    }
}

fn share_support(z: &[u32], w: &[u32]) -> bool {
    z.iter().zip(w).any(|(&a, &b)| a > 0 && b > 0)
}

/// Connected components of the factorization graph, each listed in the
/// order of `zs`, ordered by their first vertex.
fn components(zs: &[&Factorization]) -> Vec<Vec<usize>> {
    let n = zs.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        let mut stack = vec![start];
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in 0..n {
                if comp[w] == usize::MAX && share_support(zs[v], zs[w]) {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

impl KunzNilsemigroup {
    /// Minimal presentation read off the factorization graphs: for every
    /// element, one trade per extra connected component.
    pub fn minimal_presentation(&self) -> Presentation {
        self.presentation_with(TieBreak::default())
    }

    pub fn presentation_with(&self, policy: TieBreak) -> Presentation {
        let mut trades = Vec::new();
        for zs in &self.factorizations {
            if zs.len() < 2 {
                continue;
            }
            let mut ordered: Vec<&Factorization> = zs.iter().collect();
            if policy == TieBreak::Descending {
                ordered.reverse();
            }
            let comps = components(&ordered);
            for (i, c) in comps.iter().enumerate().skip(1) {
                let (u, v) = match policy {
                    TieBreak::Descending | TieBreak::Ascending => (comps[0][0], c[0]),
                    TieBreak::Chain => (*comps[i - 1].last().unwrap(), *c.last().unwrap()),
                };
                trades.push((ordered[u].clone(), ordered[v].clone()));
            }
        }
        Presentation { atoms: self.atoms.clone(), trades }
    }

    /// `L_N`, the integer span of the trade differences of any presentation.
    pub fn presentation_lattice(&self) -> LatticeBasis {
        self.minimal_presentation().lattice()
    }

    /// `e(F) - rank(M_ρ)`.
    pub fn dimension(&self) -> usize {
        self.embedding_dimension() - self.minimal_presentation().matrix().rank()
    }
}
