//! Structure-constant algebras, the quadratic-relation engine, and
//! representations via semidirect products.
//!
//! A multiplication is a rank-3 tensor `c[i][j][k]` meaning
//! `e_i ∘ e_j = Σ_k c[i][j][k] e_k`.  A `RelationSet` holds quadratic
//! relations as 12-vectors over the frozen term order
//!
//! ```text
//! k1 (x∘y)∘z + k2 (x∘z)∘y + k3 x∘(y∘z) + k4 x∘(z∘y)
//! + k5 (y∘z)∘x + k6 (y∘x)∘z + k7 y∘(z∘x) + k8 y∘(x∘z)
//! + k9 (z∘x)∘y + k10 (z∘y)∘x + k11 z∘(x∘y) + k12 z∘(y∘x) = 0
//! ```
//!
//! together with an optional symmetry flag for the degree-1 constraint
//! a bracket needs.

use std::collections::BTreeMap;

use crate::linalg::{self, Matrix, Tensor3, Vector};
use crate::scalar::{self, Scalar};
use crate::splitting::TypeMatrix;
use crate::{Error, Result};
use num::Zero;

/// Default cap on stored violations; ok-ness is always computed in full.
pub const DEFAULT_VIOLATION_CAP: usize = 100;

/// A finite-dimensional algebra with one or more named multiplications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub dim: usize,
    pub basis_labels: Option<Vec<String>>,
    pub mults: BTreeMap<String, Tensor3>,
}

impl Algebra {
    pub fn new(dim: usize) -> Self {
        Algebra {
            dim,
            basis_labels: None,
            mults: BTreeMap::new(),
        }
    }

    pub fn with_mult(mut self, name: &str, t: Tensor3) -> Self {
        assert_eq!(
            t.dims(),
            (self.dim, self.dim, self.dim),
            "multiplication tensor shape mismatch"
        );
        self.mults.insert(name.to_string(), t);
        self
    }

    pub fn with_labels(mut self, labels: &[&str]) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.basis_labels = Some(labels.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn mult(&self, name: &str) -> Result<&Tensor3> {
        self.mults
            .get(name)
            .ok_or_else(|| Error::UnknownMult(name.to_string()))
    }

    /// `u ∘ v` in coordinates, for the named multiplication.
    pub fn multiply(&self, name: &str, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.mult(name)?.contract(u, v)
    }

    /// Left-multiplication matrix `L(e_i)`: entry `[k][j] = c[i][j][k]`.
    pub fn left_mult_matrix(&self, name: &str, i: usize) -> Result<Matrix> {
        let t = self.mult(name)?;
        Ok(Matrix::from_fn(self.dim, self.dim, |k, j| {
            t.at(i, j, k).clone()
        }))
    }

    /// Right-multiplication matrix `R(e_i)`: entry `[k][j] = c[j][i][k]`.
    pub fn right_mult_matrix(&self, name: &str, i: usize) -> Result<Matrix> {
        let t = self.mult(name)?;
        Ok(Matrix::from_fn(self.dim, self.dim, |k, j| {
            t.at(j, i, k).clone()
        }))
    }

    /// The adjoint pair `(L, R)` of the named multiplication as a `Rep` on A itself.
    pub fn adjoint_rep(&self, name: &str) -> Result<Rep> {
        let left = (0..self.dim)
            .map(|i| self.left_mult_matrix(name, i))
            .collect::<Result<Vec<_>>>()?;
        let right = (0..self.dim)
            .map(|i| self.right_mult_matrix(name, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Rep {
            vdim: self.dim,
            left,
            right,
        })
    }
}

/// Degree-1 constraint on a multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    None,
    Symmetric,
    Antisymmetric,
}

/// Quadratic relations plus a symmetry flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    pub relations: Vec<[Scalar; 12]>,
    pub symmetry: Symmetry,
}

fn coeffs(pairs: &[(usize, i64)]) -> [Scalar; 12] {
    let mut k: [Scalar; 12] = std::array::from_fn(|_| scalar::zero());
    for &(idx, v) in pairs {
        k[idx - 1] = scalar::int(v);
    }
    k
}

impl RelationSet {
    pub fn new(relations: Vec<[Scalar; 12]>, symmetry: Symmetry) -> Self {
        RelationSet {
            relations,
            symmetry,
        }
    }

    /// Left Leibniz identity `x∘(y∘z) = (x∘y)∘z + y∘(x∘z)`, written as
    /// `(x∘y)∘z − x∘(y∘z) + y∘(x∘z) = 0`, i.e. `k1=1, k3=−1, k8=1`.
    pub fn leibniz() -> Self {
        RelationSet::new(vec![coeffs(&[(1, 1), (3, -1), (8, 1)])], Symmetry::None)
    }

    /// Antisymmetric bracket with the Jacobi identity encoded as the cycle
    /// of left-nested products `(x∘y)∘z + (y∘z)∘x + (z∘x)∘y = 0`, i.e.
    /// `k1=k5=k9=1`.  Any 12-vector with the same zero set on antisymmetric
    /// multiplications would do; this is the one we fix.
    pub fn lie() -> Self {
        RelationSet::new(
            vec![coeffs(&[(1, 1), (5, 1), (9, 1)])],
            Symmetry::Antisymmetric,
        )
    }
}

/// A representation candidate: families of vdim×vdim matrices indexed by
/// the algebra basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub vdim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl Rep {
    pub fn zero(dim: usize, vdim: usize) -> Self {
        Rep {
            vdim,
            left: vec![Matrix::zeros(vdim, vdim); dim],
            right: vec![Matrix::zeros(vdim, vdim); dim],
        }
    }
}

/// A single failed identity, with the exact residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Relation {
        relation: usize,
        triple: (usize, usize, usize),
        residual: Vector,
    },
    Symmetry {
        pair: (usize, usize),
        residual: Vector,
    },
}

/// Outcome of a relation check.  `ok` reflects every basis triple even when
/// the stored list is truncated at `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub truncated: bool,
}

impl ViolationReport {
    fn collector(cap: usize) -> (Self, usize) {
        (
            ViolationReport {
                ok: true,
                violations: Vec::new(),
                truncated: false,
            },
            cap,
        )
    }

    fn push(&mut self, cap: usize, v: Violation) {
        self.ok = false;
        if self.violations.len() < cap {
            self.violations.push(v);
        } else {
            self.truncated = true;
        }
    }
}

/// `(e_a ∘ e_b) ∘ e_c` under the tensor `t`.
fn left_nested(t: &Tensor3, a: usize, b: usize, c: usize) -> Vector {
    let n = t.dims().2;
    let mut out = linalg::zero_vec(n);
    for (m, w) in t.fibre(a, b).iter().enumerate() {
        if !w.is_zero() {
            linalg::vec_axpy(&mut out, w, t.fibre(m, c));
        }
    }
    out
}

/// `e_a ∘ (e_b ∘ e_c)` under the tensor `t`.
fn right_nested(t: &Tensor3, a: usize, b: usize, c: usize) -> Vector {
    let n = t.dims().2;
    let mut out = linalg::zero_vec(n);
    for (m, w) in t.fibre(b, c).iter().enumerate() {
        if !w.is_zero() {
            linalg::vec_axpy(&mut out, w, t.fibre(a, m));
        }
    }
    out
}

/// Residual of one 12-term relation on the basis triple `(i, j, k)`.
fn relation_residual(t: &Tensor3, ks: &[Scalar; 12], i: usize, j: usize, k: usize) -> Vector {
    let n = t.dims().2;
    let mut out = linalg::zero_vec(n);
    // Frozen term order: each entry is ((a,b,c), nested-left?) for the
    // corresponding coefficient.
    let terms: [(usize, usize, usize, bool); 12] = [
        (i, j, k, true),
        (i, k, j, true),
        (i, j, k, false),
        (i, k, j, false),
        (j, k, i, true),
        (j, i, k, true),
        (j, k, i, false),
        (j, i, k, false),
        (k, i, j, true),
        (k, j, i, true),
        (k, i, j, false),
        (k, j, i, false),
    ];
    for (coef, &(a, b, c, left)) in ks.iter().zip(&terms) {
        if coef.is_zero() {
            continue;
        }
        let v = if left {
            left_nested(t, a, b, c)
        } else {
            right_nested(t, a, b, c)
        };
        linalg::vec_axpy(&mut out, coef, &v);
    }
    out
}

/// Check every relation on all ordered basis triples, and the symmetry flag
/// on all basis pairs.
pub fn check_relations(a: &Algebra, mult: &str, rs: &RelationSet) -> Result<ViolationReport> {
    check_relations_capped(a, mult, rs, DEFAULT_VIOLATION_CAP)
}

pub fn check_relations_capped(
    a: &Algebra,
    mult: &str,
    rs: &RelationSet,
    cap: usize,
) -> Result<ViolationReport> {
    let t = a.mult(mult)?;
    let n = a.dim;
    let (mut report, cap) = ViolationReport::collector(cap);
    match rs.symmetry {
        Symmetry::None => {}
        Symmetry::Symmetric | Symmetry::Antisymmetric => {
            let sign = if rs.symmetry == Symmetry::Symmetric {
                scalar::int(-1)
            } else {
                scalar::one()
            };
            for i in 0..n {
                for j in 0..n {
                    let mut res: Vector = t.fibre(i, j).to_vec();
                    linalg::vec_axpy(&mut res, &sign, t.fibre(j, i));
                    if !linalg::vec_is_zero(&res) {
                        report.push(
                            cap,
                            Violation::Symmetry {
                                pair: (i, j),
                                residual: res,
                            },
                        );
                    }
                }
            }
        }
    }
    for (ridx, ks) in rs.relations.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let res = relation_residual(t, ks, i, j, k);
                    if !linalg::vec_is_zero(&res) {
                        report.push(
                            cap,
                            Violation::Relation {
                                relation: ridx,
                                triple: (i, j, k),
                                residual: res,
                            },
                        );
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Semidirect product `A ⋉ V`:
/// `(x+u) ∘_d (y+v) = x∘y + l(x)v + r(y)u`, with A in the first `dim`
/// coordinates and V in the last `vdim`.
pub fn semidirect_product(a: &Algebra, mult: &str, rep: &Rep) -> Result<Algebra> {
    let t = a.mult(mult)?;
    let n = a.dim;
    let m = rep.vdim;
    if rep.left.len() != n || rep.right.len() != n {
        return Err(Error::DimMismatch(format!(
            "rep has {} left / {} right matrices for a dim-{n} algebra",
            rep.left.len(),
            rep.right.len()
        )));
    }
    for mat in rep.left.iter().chain(&rep.right) {
        if (mat.rows(), mat.cols()) != (m, m) {
            return Err(Error::DimMismatch(format!(
                "rep matrix is {}x{}, expected {m}x{m}",
                mat.rows(),
                mat.cols()
            )));
        }
    }
    let mut d = Tensor3::zeros(n + m, n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                *d.at_mut(i, j, k) = t.at(i, j, k).clone();
            }
        }
    }
    for i in 0..n {
        for v in 0..m {
            for w in 0..m {
                // e_i ∘ u_v = l(e_i) u_v
                *d.at_mut(i, n + v, n + w) = rep.left[i].at(w, v).clone();
                // u_v ∘ e_i = r(e_i) u_v
                *d.at_mut(n + v, i, n + w) = rep.right[i].at(w, v).clone();
            }
        }
    }
    Ok(Algebra::new(n + m).with_mult(mult, d))
}

/// A pair `(l, r, V)` is a representation exactly when the semidirect
/// product satisfies the same relations as the algebra.
pub fn is_representation(
    a: &Algebra,
    mult: &str,
    rs: &RelationSet,
    rep: &Rep,
) -> Result<ViolationReport> {
    let sd = semidirect_product(a, mult, rep)?;
    check_relations(&sd, mult, rs)
}

/// Dual of a representation: every matrix maps to its negated transpose.
pub fn dual_rep(rep: &Rep) -> Rep {
    Rep {
        vdim: rep.vdim,
        left: rep.left.iter().map(|m| m.transpose().neg()).collect(),
        right: rep.right.iter().map(|m| m.transpose().neg()).collect(),
    }
}

/// `(α, β) · M = (a1 α + a2 β, b1 α + b2 β)` as a Rep.
pub fn combine_reps(alpha: &[Matrix], beta: &[Matrix], m: &TypeMatrix) -> Result<Rep> {
    if alpha.len() != beta.len() {
        return Err(Error::DimMismatch(format!(
            "combine_reps: {} vs {} matrices",
            alpha.len(),
            beta.len()
        )));
    }
    let vdim = alpha.first().map(|mt| mt.rows()).unwrap_or(0);
    for mt in alpha.iter().chain(beta) {
        if (mt.rows(), mt.cols()) != (vdim, vdim) {
            return Err(Error::DimMismatch("combine_reps: ragged matrix shapes".into()));
        }
    }
    let left = alpha
        .iter()
        .zip(beta)
        .map(|(f, g)| f.scale(&m.a1).add(&g.scale(&m.a2)))
        .collect();
    let right = alpha
        .iter()
        .zip(beta)
        .map(|(f, g)| f.scale(&m.b1).add(&g.scale(&m.b2)))
        .collect();
    Ok(Rep { vdim, left, right })
}

/// True iff `phi` is invertible and intertwines both families:
/// `phi · l1(x) = l2(x) · phi` and likewise on the right family.
pub fn rep_equivalent(r1: &Rep, r2: &Rep, phi: &Matrix) -> bool {
    if r1.left.len() != r2.left.len() || !phi.is_invertible() {
        return false;
    }
    r1.left
        .iter()
        .zip(&r2.left)
        .chain(r1.right.iter().zip(&r2.right))
        .all(|(m1, m2)| phi.mul(m1) == m2.mul(phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::sl2;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn zero_algebra(n: usize) -> Algebra {
        Algebra::new(n).with_mult("circ", Tensor3::zeros(n, n, n))
    }

    /// Independent oracle: the Leibniz identity coded directly.
    fn leibniz_loop_ok(t: &Tensor3) -> bool {
        let n = t.dims().0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut res = right_nested(t, i, j, k);
                    let lhs = left_nested(t, i, j, k);
                    let cross = right_nested(t, j, i, k);
                    for m in 0..n {
                        res[m] = &res[m] - &lhs[m] - &cross[m];
                    }
                    if !linalg::vec_is_zero(&res) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Independent oracle: antisymmetry plus Jacobi coded directly.
    fn lie_loop_ok(t: &Tensor3) -> bool {
        let n = t.dims().0;
        for i in 0..n {
            for j in 0..n {
                let mut res = t.fibre(i, j).to_vec();
                linalg::vec_axpy(&mut res, &scalar::one(), t.fibre(j, i));
                if !linalg::vec_is_zero(&res) {
                    return false;
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut res = left_nested(t, i, j, k);
                    let b = left_nested(t, j, k, i);
                    let c = left_nested(t, k, i, j);
                    for m in 0..n {
                        res[m] = &res[m] + &b[m] + &c[m];
                    }
                    if !linalg::vec_is_zero(&res) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn sl2_bracket_is_lie() {
        let a = sl2::bracket_algebra();
        assert!(check_relations(&a, "bracket", &RelationSet::lie())
            .unwrap()
            .ok);
        assert!(lie_loop_ok(a.mult("bracket").unwrap()));
    }

    #[test]
    fn sl2_bracket_multiply() {
        let a = sl2::bracket_algebra();
        let h = linalg::basis_vec(3, 1);
        let y = linalg::basis_vec(3, 2);
        // [h, y] = -2y
        assert_eq!(
            a.multiply("bracket", &h, &y).unwrap(),
            linalg::vec_scale(&int(-2), &y)
        );
        assert!(linalg::vec_is_zero(
            &a.multiply("bracket", &linalg::zero_vec(3), &y).unwrap()
        ));
    }

    #[test]
    fn sl2_induced_leibniz_table() {
        let a = sl2::leibniz_algebra();
        let x = linalg::basis_vec(3, 0);
        // x ∘ x = 4x − 4h
        let mut expect = linalg::zero_vec(3);
        expect[0] = int(4);
        expect[1] = int(-4);
        assert_eq!(a.multiply("circ", &x, &x).unwrap(), expect);
        assert!(check_relations(&a, "circ", &RelationSet::leibniz())
            .unwrap()
            .ok);
    }

    #[test]
    fn zero_mult_satisfies_everything() {
        let a = zero_algebra(3);
        assert!(check_relations(&a, "circ", &RelationSet::leibniz())
            .unwrap()
            .ok);
        assert!(check_relations(&a, "circ", &RelationSet::lie()).unwrap().ok);
    }

    #[test]
    fn nilpotent_two_dim_is_leibniz() {
        // e1 ∘ e1 = e2, all other products zero
        let mut t = Tensor3::zeros(2, 2, 2);
        *t.at_mut(0, 0, 1) = int(1);
        let a = Algebra::new(2).with_mult("circ", t);
        assert!(check_relations(&a, "circ", &RelationSet::leibniz())
            .unwrap()
            .ok);
    }

    #[test]
    fn unknown_mult_errors() {
        let a = zero_algebra(2);
        assert!(matches!(
            check_relations(&a, "nope", &RelationSet::leibniz()),
            Err(Error::UnknownMult(_))
        ));
    }

    #[test]
    fn relation_engine_matches_direct_loops() {
        // Cross-validate the 12-term engine against directly coded
        // identities on random multiplications plus known positives.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked_ok = 0;
        for trial in 0..100 {
            let t = if trial == 0 {
                sl2::leibniz_algebra().mult("circ").unwrap().clone()
            } else if trial == 1 {
                Tensor3::zeros(3, 3, 3)
            } else {
                Tensor3::from_fn(3, 3, 3, |_, _, _| {
                    if rng.gen_bool(0.3) {
                        int(rng.gen_range(-2..=2))
                    } else {
                        int(0)
                    }
                })
            };
            let a = Algebra::new(3).with_mult("circ", t.clone());
            let engine = check_relations(&a, "circ", &RelationSet::leibniz())
                .unwrap()
                .ok;
            assert_eq!(engine, leibniz_loop_ok(&t), "trial {trial}");
            let engine_lie = check_relations(&a, "circ", &RelationSet::lie()).unwrap().ok;
            assert_eq!(engine_lie, lie_loop_ok(&t), "trial {trial} (lie)");
            if engine {
                checked_ok += 1;
            }
        }
        assert!(checked_ok >= 2, "need positive instances in the sample");
    }

    #[test]
    fn violation_report_is_capped_but_ok_is_global() {
        let mut t = Tensor3::zeros(3, 3, 3);
        *t.at_mut(0, 0, 0) = int(1); // e1∘e1 = e1 is not Leibniz-compatible alone? check
        *t.at_mut(0, 1, 1) = int(1);
        let a = Algebra::new(3).with_mult("circ", t);
        let full = check_relations(&a, "circ", &RelationSet::leibniz()).unwrap();
        if !full.ok {
            let capped = check_relations_capped(&a, "circ", &RelationSet::leibniz(), 1).unwrap();
            assert!(!capped.ok);
            assert_eq!(capped.violations.len(), 1);
            assert_eq!(capped.truncated, full.violations.len() > 1);
        }
    }

    #[test]
    fn semidirect_with_zero_rep_is_direct_sum() {
        let a = sl2::leibniz_algebra();
        let sd = semidirect_product(&a, "circ", &Rep::zero(3, 2)).unwrap();
        assert_eq!(sd.dim, 5);
        let t = sd.mult("circ").unwrap();
        // A-block reproduces the original product
        let orig = a.mult("circ").unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.fibre(i, j)[..3], *orig.fibre(i, j));
            }
        }
        // V is a zero ideal
        for v in 3..5 {
            for j in 0..5 {
                assert!(linalg::vec_is_zero(t.fibre(v, j)));
                assert!(linalg::vec_is_zero(t.fibre(j, v)));
            }
        }
    }

    #[test]
    fn adjoint_rep_of_sl2_leibniz_is_a_rep() {
        let a = sl2::leibniz_algebra();
        let adj = a.adjoint_rep("circ").unwrap();
        let report = is_representation(&a, "circ", &RelationSet::leibniz(), &adj).unwrap();
        assert!(report.ok);
        let sd = semidirect_product(&a, "circ", &adj).unwrap();
        assert_eq!(sd.dim, 6);
    }

    #[test]
    fn coadjoint_rep_of_sl2_bracket_is_a_rep() {
        let a = sl2::bracket_algebra();
        let adj = a.adjoint_rep("bracket").unwrap();
        let coadj = dual_rep(&adj);
        assert!(
            is_representation(&a, "bracket", &RelationSet::lie(), &coadj)
                .unwrap()
                .ok
        );
    }

    #[test]
    fn dual_of_adjoint_combination_is_a_leibniz_rep() {
        // (L*∘, −L*∘ − R*∘) is a representation of a Leibniz algebra.
        let a = sl2::leibniz_algebra();
        let adj = a.adjoint_rep("circ").unwrap();
        let dual = dual_rep(&adj);
        let rep = Rep {
            vdim: 3,
            left: dual.left.clone(),
            right: dual
                .left
                .iter()
                .zip(&dual.right)
                .map(|(l, r)| l.neg().sub(r))
                .collect(),
        };
        assert!(is_representation(&a, "circ", &RelationSet::leibniz(), &rep)
            .unwrap()
            .ok);
        // whereas (L∘, L∘) is not
        let bad = Rep {
            vdim: 3,
            left: adj.left.clone(),
            right: adj.left.clone(),
        };
        assert!(!is_representation(&a, "circ", &RelationSet::leibniz(), &bad)
            .unwrap()
            .ok);
    }

    #[test]
    fn dual_rep_is_involutive() {
        let a = sl2::bracket_algebra();
        let adj = a.adjoint_rep("bracket").unwrap();
        assert_eq!(dual_rep(&dual_rep(&adj)), adj);
        let z = Rep::zero(3, 2);
        assert_eq!(dual_rep(&z), z);
    }

    #[test]
    fn dual_rep_of_ad_h() {
        let a = sl2::bracket_algebra();
        let adj = a.adjoint_rep("bracket").unwrap();
        // ad(h) = diag(2, 0, −2) on (x, h, y)
        let adh = &adj.left[1];
        let expect = Matrix::from_fn(3, 3, |r, c| match (r, c) {
            (0, 0) => int(2),
            (2, 2) => int(-2),
            _ => int(0),
        });
        assert_eq!(*adh, expect);
        assert_eq!(dual_rep(&adj).left[1], expect.neg());
    }

    #[test]
    fn combine_reps_examples() {
        let a = sl2::leibniz_algebra();
        let adj = a.adjoint_rep("circ").unwrap();
        let id = TypeMatrix::identity();
        let c = combine_reps(&adj.left, &adj.right, &id).unwrap();
        assert_eq!(c, adj);
        // M = [[0,−1],[1,1]] → (β, −α + β)
        let m = TypeMatrix::from_int(0, -1, 1, 1);
        let c = combine_reps(&adj.left, &adj.right, &m).unwrap();
        assert_eq!(c.left, adj.right);
        for (got, (l, r)) in c.right.iter().zip(adj.left.iter().zip(&adj.right)) {
            assert_eq!(*got, r.sub(l));
        }
        // M = [[1,−1],[−1,0]] → (α − β, −α)
        let m = TypeMatrix::from_int(1, -1, -1, 0);
        let c = combine_reps(&adj.left, &adj.right, &m).unwrap();
        for (got, (l, r)) in c.left.iter().zip(adj.left.iter().zip(&adj.right)) {
            assert_eq!(*got, l.sub(r));
        }
        for (got, l) in c.right.iter().zip(&adj.left) {
            assert_eq!(*got, l.neg());
        }
    }

    #[test]
    fn rep_equivalence_basics() {
        let a = sl2::leibniz_algebra();
        let adj = a.adjoint_rep("circ").unwrap();
        assert!(rep_equivalent(&adj, &adj, &Matrix::identity(3)));
        assert!(!rep_equivalent(&adj, &dual_rep(&adj), &Matrix::identity(3)));
        assert!(!rep_equivalent(&adj, &adj, &Matrix::zeros(3, 3)));
    }

    #[test]
    fn lie_rep_with_right_equals_minus_left() {
        // For an antisymmetric bracket, (ρ, −ρ) is a representation iff ρ is
        // a Lie module; exercised on the sl(2) adjoint.
        let a = sl2::bracket_algebra();
        let adj = a.adjoint_rep("bracket").unwrap();
        let rep = Rep {
            vdim: 3,
            left: adj.left.clone(),
            right: adj.left.iter().map(|m| m.neg()).collect(),
        };
        assert!(is_representation(&a, "bracket", &RelationSet::lie(), &rep)
            .unwrap()
            .ok);
        assert_eq!(rep, adj); // for a bracket, R = −L already
    }
}
