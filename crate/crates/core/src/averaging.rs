//! Averaging operators on Lie algebras, admissible pairs, adjoint maps
//! under invariant forms, the induced Leibniz and SDPL structures, and the
//! `End(A) ⊕ A` double of an arbitrary algebra.

use crate::algebra::{check_relations, is_representation, Algebra, Rep, RelationSet};
use crate::leibniz::SDPLAlgebra;
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::splitting::{combine_family, BilinearForm, SplitAlgebra};
use crate::{Error, Result};

/// Default cap on the total dimension of `endo_double` output.
pub const DEFAULT_ENDO_CAP: usize = 64;

/// A Lie algebra carrying an averaging operator `P` and, optionally, an
/// admissible companion `Q`.  The struct itself is plain data; call
/// [`AveragingLieAlgebra::is_admissible`] (or [`check_averaging`] /
/// [`check_admissible`]) to validate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AveragingLieAlgebra {
    pub lie: Algebra,
    pub p: Matrix,
    pub q: Option<Matrix>,
}

impl AveragingLieAlgebra {
    pub fn new(lie: Algebra, p: Matrix) -> Self {
        AveragingLieAlgebra { lie, p, q: None }
    }

    pub fn with_q(mut self, q: Matrix) -> Self {
        self.q = Some(q);
        self
    }

    pub fn dim(&self) -> usize {
        self.lie.dim
    }

    /// True iff `P` is averaging and, when `Q` is present, the pair
    /// satisfies both admissibility equalities.
    pub fn is_admissible(&self) -> Result<bool> {
        if !averaging_identity(&self.lie, "bracket", &self.p)? {
            return Ok(false);
        }
        match &self.q {
            None => Ok(true),
            Some(q) => admissible_identity(&self.lie, "bracket", &self.p, q),
        }
    }
}

fn require_lie(lie: &Algebra, mult: &str) -> Result<()> {
    if !check_relations(lie, mult, &RelationSet::lie())?.ok {
        return Err(Error::NotLie);
    }
    Ok(())
}

fn averaging_identity(lie: &Algebra, mult: &str, p: &Matrix) -> Result<bool> {
    let t = lie.mult(mult)?;
    let n = lie.dim;
    if p.rows() != n || p.cols() != n {
        return Err(Error::DimMismatch("operator shape".into()));
    }
    let p_cols: Vec<Vector> = (0..n).map(|i| p.col(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = t.contract(&p_cols[i], &p_cols[j])?;
            let inner = t.contract(&p_cols[i], &crate::linalg::basis_vec(n, j))?;
            if lhs != p.matvec(&inner) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn admissible_identity(lie: &Algebra, mult: &str, p: &Matrix, q: &Matrix) -> Result<bool> {
    let t = lie.mult(mult)?;
    let n = lie.dim;
    if q.rows() != n || q.cols() != n {
        return Err(Error::DimMismatch("operator shape".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let x = crate::linalg::basis_vec(n, i);
            let y = crate::linalg::basis_vec(n, j);
            // [P(x), Q(y)] = Q([P(x), y]) = Q([x, Q(y)])
            let lhs = t.contract(&p.col(i), &q.col(j))?;
            let mid = q.matvec(&t.contract(&p.col(i), &y)?);
            let rhs = q.matvec(&t.contract(&x, &q.col(j))?);
            if lhs != mid || mid != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Does `P` satisfy `[P(x), P(y)] = P([P(x), y])`?
pub fn check_averaging(lie: &Algebra, p: &Matrix) -> Result<bool> {
    require_lie(lie, "bracket")?;
    averaging_identity(lie, "bracket", p)
}

/// Does `(P, Q)` satisfy `[P(x), Q(y)] = Q([P(x), y]) = Q([x, Q(y)])`?
/// Requires `P` to be averaging.
pub fn check_admissible(lie: &Algebra, p: &Matrix, q: &Matrix) -> Result<bool> {
    if !check_averaging(lie, p)? {
        return Err(Error::NotAveraging);
    }
    admissible_identity(lie, "bracket", p, q)
}

/// The induced Leibniz algebra `x ∘ y = [P(x), y]`, under mult name
/// `"circ"`.
pub fn induced_leibniz(al: &AveragingLieAlgebra) -> Result<Algebra> {
    let t = al.lie.mult("bracket")?;
    let n = al.dim();
    let mut circ = Tensor3::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            let prod = t.contract(&al.p.col(i), &crate::linalg::basis_vec(n, j))?;
            for k in 0..n {
                *circ.at_mut(i, j, k) = prod[k].clone();
            }
        }
    }
    Ok(Algebra::new(n).with_mult("circ", circ))
}

/// The adjoint `P̂` of `P` with respect to a nondegenerate form, defined by
/// `B(P(x), y) = B(x, P̂(y))`; in matrix terms `P̂ = B⁻¹ Pᵀ B`.
pub fn adjoint_map(p: &Matrix, b: &BilinearForm) -> Result<Matrix> {
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let bm = b.matrix();
    Ok(bm.invert()?.mul(&p.transpose()).mul(bm))
}

/// Check the averaging-representation identity
/// `ρ(Px)α = α ρ(Px) = α ρ(x) α` for a Lie module `(ρ, V)` carrying the
/// operator `α`.  The pair `(ρ, −ρ)` must be a Lie representation.
pub fn check_avg_rep(al: &AveragingLieAlgebra, rho: &[Matrix], alpha: &Matrix) -> Result<bool> {
    let rep = lie_rep(rho);
    if !is_representation(&al.lie, "bracket", &RelationSet::lie(), &rep)?.ok {
        return Err(Error::NotLieRep);
    }
    let n = al.dim();
    if rho.len() != n {
        return Err(Error::DimMismatch("family length".into()));
    }
    for i in 0..n {
        let rho_px = combine_family(rho, &al.p.col(i));
        let lhs = rho_px.mul(alpha);
        let mid = alpha.mul(&rho_px);
        let rhs = alpha.mul(&rho[i]).mul(alpha);
        if lhs != mid || mid != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The same verdict obtained by forming the semidirect Lie algebra
/// `A ⋉_ρ V` and testing `P ⊕ α` for the averaging identity there.
pub fn check_avg_rep_via_semidirect(
    al: &AveragingLieAlgebra,
    rho: &[Matrix],
    alpha: &Matrix,
) -> Result<bool> {
    let rep = lie_rep(rho);
    if !is_representation(&al.lie, "bracket", &RelationSet::lie(), &rep)?.ok {
        return Err(Error::NotLieRep);
    }
    let mut double = crate::algebra::semidirect_product(&al.lie, "bracket", &rep)?;
    let t = double.mults.remove("bracket").expect("semidirect mult");
    let double = Algebra::new(al.dim() + rep.vdim).with_mult("bracket", t);
    let big_p = block_diag(&al.p, alpha);
    averaging_identity(&double, "bracket", &big_p)
}

fn lie_rep(rho: &[Matrix]) -> Rep {
    let vdim = rho.first().map_or(0, |m| m.rows());
    Rep {
        vdim,
        left: rho.to_vec(),
        right: rho.iter().map(|m| m.neg()).collect(),
    }
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.rows(), b.rows());
    Matrix::from_fn(n + m, n + m, |r, c| {
        if r < n && c < n {
            a.at(r, c).clone()
        } else if r >= n && c >= n {
            b.at(r - n, c - n).clone()
        } else {
            crate::scalar::zero()
        }
    })
}

/// The SDPL algebra `x ≻ y = [P(x), y] − Q([x, y])`, `x ≺ y = Q([x, y])`
/// of an admissible pair.
pub fn sdpl_from_admissible(al: &AveragingLieAlgebra) -> Result<SDPLAlgebra> {
    let q = al
        .q
        .as_ref()
        .ok_or_else(|| Error::BadShape("admissible companion Q is required".into()))?;
    if !al.is_admissible()? {
        return Err(Error::NotAveraging);
    }
    require_lie(&al.lie, "bracket")?;
    let t = al.lie.mult("bracket")?;
    let n = al.dim();
    let mut succ = Tensor3::zeros(n, n, n);
    let mut prec = Tensor3::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            let y = crate::linalg::basis_vec(n, j);
            let bracket = t.fibre(i, j);
            let circ = t.contract(&al.p.col(i), &y)?;
            let qb = q.matvec(bracket);
            for k in 0..n {
                *succ.at_mut(i, j, k) = &circ[k] - &qb[k];
                *prec.at_mut(i, j, k) = qb[k].clone();
            }
        }
    }
    SDPLAlgebra::new(SplitAlgebra::new(succ, prec)?)
}

/// The averaging Lie algebra on `End(A) ⊕ A` of an arbitrary algebra
/// `(A, ∘)`: bracket `[f+x, g+y] = [f,g] + f(y) − g(x)`,
/// `P(f+x) = L∘(x)`, `Q(f+x) = −R∘(x)`.  `End(A)` is flattened row-major
/// (`E_{ab}` at index `a·n + b`), followed by the `A` block.  The result
/// is returned unvalidated; its admissibility verdict equals the Leibniz
/// verdict of the input multiplication.
pub fn endo_double(a: &Algebra, mult: &str) -> Result<AveragingLieAlgebra> {
    endo_double_with_cap(a, mult, DEFAULT_ENDO_CAP)
}

/// As [`endo_double`], with an explicit cap on the total dimension.
pub fn endo_double_with_cap(a: &Algebra, mult: &str, cap: usize) -> Result<AveragingLieAlgebra> {
    let n = a.dim;
    let total = n * n + n;
    if total > cap {
        return Err(Error::CapExceeded(cap));
    }
    a.mult(mult)?;
    let e = |r: usize, c: usize| r * n + c; // index of E_{rc}
    let mut t = Tensor3::zeros(total, total, total);
    for r in 0..n {
        for c in 0..n {
            // [E_{rc}, E_{uv}] = δ_{cu} E_{rv} − δ_{vr} E_{uc}
            for u in 0..n {
                for v in 0..n {
                    if c == u {
                        *t.at_mut(e(r, c), e(u, v), e(r, v)) += crate::scalar::one();
                    }
                    if v == r {
                        *t.at_mut(e(r, c), e(u, v), e(u, c)) -= crate::scalar::one();
                    }
                }
            }
            // [E_{rc}, e_j] = δ_{cj} e_r ; [e_i, E_{rc}] = −δ_{ci} e_r
            *t.at_mut(e(r, c), n * n + c, n * n + r) += crate::scalar::one();
            *t.at_mut(n * n + c, e(r, c), n * n + r) -= crate::scalar::one();
        }
    }
    let lie = Algebra::new(total).with_mult("bracket", t);
    let mut p = Matrix::zeros(total, total);
    let mut q = Matrix::zeros(total, total);
    for i in 0..n {
        let l = a.left_mult_matrix(mult, i)?;
        let r = a.right_mult_matrix(mult, i)?;
        for row in 0..n {
            for col in 0..n {
                *p.at_mut(e(row, col), n * n + i) = l.at(row, col).clone();
                *q.at_mut(e(row, col), n * n + i) = -r.at(row, col);
            }
        }
    }
    Ok(AveragingLieAlgebra::new(lie, p).with_q(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::{check_sdpl, is_left_invariant, sdpl_from_form};
    use crate::scalar::int;
    use crate::sl2;

    fn sl2_avg() -> AveragingLieAlgebra {
        AveragingLieAlgebra::new(sl2::bracket_algebra(), sl2::averaging_p())
            .with_q(sl2::averaging_p())
    }

    #[test]
    fn identity_is_averaging() {
        let lie = sl2::bracket_algebra();
        assert!(check_averaging(&lie, &Matrix::identity(3)).unwrap());
    }

    #[test]
    fn sl2_operator_is_averaging() {
        let al = sl2_avg();
        assert!(check_averaging(&al.lie, &al.p).unwrap());
        assert!(al.is_admissible().unwrap());
    }

    #[test]
    fn ad_h_is_not_averaging() {
        let lie = sl2::bracket_algebra();
        let ad_h = lie.left_mult_matrix("bracket", 1).unwrap();
        assert!(!check_averaging(&lie, &ad_h).unwrap());
    }

    #[test]
    fn non_lie_input_is_refused() {
        let a = Algebra::new(3).with_mult(
            "bracket",
            sl2::leibniz_algebra().mult("circ").unwrap().clone(),
        );
        assert!(matches!(
            check_averaging(&a, &Matrix::identity(3)),
            Err(Error::NotLie)
        ));
    }

    #[test]
    fn induced_leibniz_matches_sl2_table() {
        let al = sl2_avg();
        let circ = induced_leibniz(&al).unwrap();
        assert_eq!(
            circ.mult("circ").unwrap(),
            sl2::leibniz_algebra().mult("circ").unwrap()
        );
        assert!(check_relations(&circ, "circ", &RelationSet::leibniz())
            .unwrap()
            .ok);
    }

    #[test]
    fn zero_operator_induces_zero_mult() {
        let al = AveragingLieAlgebra::new(sl2::bracket_algebra(), Matrix::zeros(3, 3));
        assert!(induced_leibniz(&al).unwrap().mult("circ").unwrap().is_zero());
    }

    #[test]
    fn admissible_pairs() {
        let lie = sl2::bracket_algebra();
        let p = sl2::averaging_p();
        assert!(check_admissible(&lie, &p, &p).unwrap());
        assert!(check_admissible(&lie, &p, &Matrix::zeros(3, 3)).unwrap());
        assert!(!check_admissible(&lie, &p, &Matrix::identity(3)).unwrap());
        let ad_h = lie.left_mult_matrix("bracket", 1).unwrap();
        assert!(matches!(
            check_admissible(&lie, &ad_h, &p),
            Err(Error::NotAveraging)
        ));
    }

    #[test]
    fn adjoint_map_basics() {
        let p = sl2::averaging_p();
        let id_form = BilinearForm::new(Matrix::identity(3));
        assert_eq!(adjoint_map(&p, &id_form).unwrap(), p.transpose());
        // sl(2): the adjoint of P under the invariant form is P itself
        let b = sl2::form();
        let p_hat = adjoint_map(&p, &b).unwrap();
        assert_eq!(p_hat, p);
        // defining identity B(P(x), y) = B(x, P̂(y))
        for i in 0..3 {
            for j in 0..3 {
                let x = crate::linalg::basis_vec(3, i);
                let y = crate::linalg::basis_vec(3, j);
                assert_eq!(b.apply(&p.matvec(&x), &y), b.apply(&x, &p_hat.matvec(&y)));
            }
        }
        // double adjoint under a symmetric form is the identity transport
        assert_eq!(adjoint_map(&p_hat, &b).unwrap(), p);
        assert!(matches!(
            adjoint_map(&p, &BilinearForm::new(Matrix::zeros(3, 3))),
            Err(Error::DegenerateForm)
        ));
    }

    #[test]
    fn invariant_form_transfers_to_left_invariance() {
        // the form is invariant on the Lie algebra and left-invariant on
        // the induced Leibniz algebra
        let al = sl2_avg();
        let b = sl2::form();
        assert!(is_left_invariant(&al.lie, "bracket", &b).unwrap());
        let circ = induced_leibniz(&al).unwrap();
        assert!(is_left_invariant(&circ, "circ", &b).unwrap());
    }

    #[test]
    fn adjoint_pair_is_admissible() {
        // (P, P̂) is admissible whenever B is invariant and P averaging
        let lie = sl2::bracket_algebra();
        let p = sl2::averaging_p();
        let p_hat = adjoint_map(&p, &sl2::form()).unwrap();
        assert!(check_admissible(&lie, &p, &p_hat).unwrap());
    }

    #[test]
    fn avg_rep_checks() {
        let al = sl2_avg();
        let ad: Vec<Matrix> = (0..3)
            .map(|i| al.lie.left_mult_matrix("bracket", i).unwrap())
            .collect();
        // adjoint representation with α = P
        assert!(check_avg_rep(&al, &ad, &al.p).unwrap());
        assert!(check_avg_rep_via_semidirect(&al, &ad, &al.p).unwrap());
        // α = 0 is always fine
        assert!(check_avg_rep(&al, &ad, &Matrix::zeros(3, 3)).unwrap());
        // coadjoint with α = Qᵀ is an averaging rep iff (P, Q) admissible
        let coad: Vec<Matrix> = ad.iter().map(|m| m.transpose().neg()).collect();
        assert!(check_avg_rep(&al, &coad, &al.p.transpose()).unwrap());
        let bad_q = Matrix::identity(3);
        assert!(!check_admissible(&al.lie, &al.p, &bad_q).unwrap());
        assert!(!check_avg_rep(&al, &coad, &bad_q.transpose()).unwrap());
        // a non-Lie-rep family is refused
        let junk = vec![Matrix::identity(3); 3];
        assert!(matches!(
            check_avg_rep(&al, &junk, &al.p),
            Err(Error::NotLieRep)
        ));
    }

    #[test]
    fn avg_rep_direct_and_semidirect_agree_on_failures() {
        let al = sl2_avg();
        let ad: Vec<Matrix> = (0..3)
            .map(|i| al.lie.left_mult_matrix("bracket", i).unwrap())
            .collect();
        let alpha = Matrix::identity(3);
        assert_eq!(
            check_avg_rep(&al, &ad, &alpha).unwrap(),
            check_avg_rep_via_semidirect(&al, &ad, &alpha).unwrap()
        );
    }

    #[test]
    fn sdpl_from_admissible_reproduces_sl2_table() {
        let al = sl2_avg();
        let s = sdpl_from_admissible(&al).unwrap();
        assert_eq!(s.split(), &sl2::split_algebra());
        assert!(check_sdpl(s.split()).unwrap());
        // agreement with the form route when Q = adjoint of P
        let circ = induced_leibniz(&al).unwrap();
        let via_form = sdpl_from_form(&circ, "circ", &sl2::form()).unwrap();
        assert_eq!(via_form.split(), s.split());
    }

    #[test]
    fn sdpl_from_admissible_with_zero_q() {
        let al = AveragingLieAlgebra::new(sl2::bracket_algebra(), sl2::averaging_p())
            .with_q(Matrix::zeros(3, 3));
        let s = sdpl_from_admissible(&al).unwrap();
        assert!(s.prec().is_zero());
        assert_eq!(
            s.succ(),
            sl2::leibniz_algebra().mult("circ").unwrap()
        );
    }

    #[test]
    fn sdpl_from_admissible_requires_admissibility() {
        let al = AveragingLieAlgebra::new(sl2::bracket_algebra(), sl2::averaging_p())
            .with_q(Matrix::identity(3));
        assert!(matches!(sdpl_from_admissible(&al), Err(Error::NotAveraging)));
        let no_q = AveragingLieAlgebra::new(sl2::bracket_algebra(), sl2::averaging_p());
        assert!(matches!(sdpl_from_admissible(&no_q), Err(Error::BadShape(_))));
    }

    #[test]
    fn endo_double_one_dim_zero_mult() {
        // zero multiplication: P = Q = 0, double is admissible
        let a = Algebra::new(1).with_mult("circ", Tensor3::zeros(1, 1, 1));
        let d = endo_double(&a, "circ").unwrap();
        assert_eq!(d.dim(), 2);
        assert!(d.p.is_zero());
        assert!(d.q.as_ref().unwrap().is_zero());
        assert!(d.is_admissible().unwrap());
        // the bracket itself: [E, e] = e, [e, E] = −e, rest zero
        let t = d.lie.mult("bracket").unwrap();
        assert_eq!(*t.at(0, 1, 1), int(1));
        assert_eq!(*t.at(1, 0, 1), int(-1));
        assert!(check_relations(&d.lie, "bracket", &RelationSet::lie())
            .unwrap()
            .ok);
    }

    #[test]
    fn endo_double_verdict_tracks_leibniz() {
        // e∘e = e is not Leibniz, so its double is not admissible
        let mut t = Tensor3::zeros(1, 1, 1);
        *t.at_mut(0, 0, 0) = int(1);
        let a = Algebra::new(1).with_mult("circ", t.clone());
        assert!(!check_relations(&a, "circ", &RelationSet::leibniz()).unwrap().ok);
        let d = endo_double(&a, "circ").unwrap();
        // P(e) = L(e) = E, Q(e) = −E
        assert_eq!(*d.p.at(0, 1), int(1));
        assert_eq!(*d.q.as_ref().unwrap().at(0, 1), int(-1));
        assert!(!d.is_admissible().unwrap());
        // a genuine Leibniz input (2-dim nilpotent) gives an admissible double
        let mut nil = Tensor3::zeros(2, 2, 2);
        *nil.at_mut(0, 0, 1) = int(1);
        let b = Algebra::new(2).with_mult("circ", nil);
        assert!(check_relations(&b, "circ", &RelationSet::leibniz()).unwrap().ok);
        let d = endo_double(&b, "circ").unwrap();
        assert_eq!(d.dim(), 6);
        assert!(d.is_admissible().unwrap());
    }

    #[test]
    fn endo_double_cap() {
        let a = Algebra::new(8).with_mult("circ", Tensor3::zeros(8, 8, 8));
        assert!(matches!(
            endo_double(&a, "circ"),
            Err(Error::CapExceeded(DEFAULT_ENDO_CAP))
        ));
        assert!(endo_double_with_cap(&a, "circ", 72).is_ok());
    }
}
