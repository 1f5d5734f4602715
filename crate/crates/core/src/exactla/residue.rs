use super::lattice::Lattice;
use super::normal_form::{smith_normal_form, solve_linear_congruence};
use super::scalar::{self, Scalar};
use crate::error::{KunzError, Result};

/// Outcome of [`solve_residue_point`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResidueSolution<T> {
    /// A lattice point congruent to the target modulo `m`.
    Point(Vec<T>),
    /// A vector `w` of the orthogonal complement with `w . target ≢ 0 (mod m)`.
    Obstruction(Vec<T>),
}

/// Finds `v` in the saturated lattice `lattice` with `v ≡ target (mod m)`
/// componentwise.
///
/// Writes `U B V = D` for the basis `B` and solves the diagonal system
/// `y D ≡ target V (mod m)`; then `v = y U B`. The returned point is reduced
/// modulo `m * lattice` so that its pivot coordinates stay small. When no
/// point exists, the first canonical basis vector of the orthogonal
/// complement that fails the congruence is returned instead.
pub fn solve_residue_point<T: Scalar>(lattice: &Lattice<T>, target: &[T], m: &T) -> Result<ResidueSolution<T>> {
    let n = lattice.ambient_dim();
    if target.len() != n {
        return Err(KunzError::DimensionMismatch { expected: n, got: target.len() });
    }
    if *m < <T as Scalar>::from_i64(2) {
        return Err(KunzError::InvalidInput(format!("modulus must be at least 2, got {m}")));
    }
    if !lattice.is_saturated() {
        return Err(KunzError::ContractViolation("residue solving requires a saturated lattice".into()));
    }

    if let Some(point) = solve_via_smith(lattice, target, m) {
        return Ok(ResidueSolution::Point(reduce_mod_lattice(lattice, point, m)));
    }
    let complement = lattice.orthogonal_complement();
    for w in complement.basis_rows() {
        if !scalar::modulo(&scalar::dot(w, target), m).is_zero() {
            return Ok(ResidueSolution::Obstruction(w.to_vec()));
        }
    }
    Err(KunzError::Internal("residue system unsolvable but no obstruction in the complement".into()))
}

fn solve_via_smith<T: Scalar>(lattice: &Lattice<T>, target: &[T], m: &T) -> Option<Vec<T>> {
    let n = lattice.ambient_dim();
    let d = lattice.rank();
    if d == 0 {
        return target.iter().all(|x| scalar::modulo(x, m).is_zero()).then(|| vec![T::zero(); n]);
    }
    let smith = smith_normal_form(lattice.basis());
    // g = target * V
    let mut g = vec![T::zero(); n];
    for (i, t) in target.iter().enumerate() {
        for (j, gj) in g.iter_mut().enumerate() {
            *gj = scalar::add(gj, &scalar::mul(t, &smith.right[(i, j)]));
        }
    }
    if g[d..].iter().any(|x| !scalar::modulo(x, m).is_zero()) {
        return None;
    }
    let mut y = Vec::with_capacity(d);
    for (di, gi) in smith.invariants.iter().zip(&g) {
        y.push(solve_linear_congruence(di, &scalar::modulo(gi, m), m)?);
    }
    // v = y U B
    let coeffs = smith.left.left_mul_vec(&y).ok()?;
    lattice.basis().left_mul_vec(&coeffs).ok()
}

fn reduce_mod_lattice<T: Scalar>(lattice: &Lattice<T>, mut v: Vec<T>, m: &T) -> Vec<T> {
    for row in lattice.basis_rows() {
        let p = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
        let step = scalar::mul(m, &row[p]);
        let q = v[p].div_floor(&step);
        if q.is_zero() {
            continue;
        }
        let mq = scalar::mul(&q, m);
        for (x, b) in v.iter_mut().zip(row) {
            *x = scalar::sub_mul(x, &mq, b);
        }
    }
    v
}
