//! Leibniz-specific layer: hand-coded representation identities, the
//! L-matrix dualization, the type-a / dual type-b / explicit-identity
//! tri-route, SDPL algebras (special type-a pre-Leibniz algebras: `≺`
//! anticommutative with the compatibility chain) and their
//! representations, and the correspondence with left-invariant forms.

use crate::algebra::{check_relations, Algebra, RelationSet, Rep};
use crate::linalg::{self, Matrix, Tensor3};
use crate::splitting::{
    check_type_m_pre, splitting_from_form, BilinearForm, SplitAlgebra, TypeMatrix,
};
use crate::{Error, Result};

/// The three equivalent characterizations of a type-a split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeARoute {
    TypeA,
    DualTypeB,
    Identities,
}

fn is_leibniz(t: &Tensor3) -> Result<bool> {
    let n = t.dims().0;
    let a = Algebra::new(n).with_mult("circ", t.clone());
    Ok(check_relations(&a, "circ", &RelationSet::leibniz())?.ok)
}

fn is_antisymmetric(t: &Tensor3) -> bool {
    let (n, _, _) = t.dims();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if *t.at(i, j, k) != -t.at(j, i, k) {
                    return false;
                }
            }
        }
    }
    true
}

/// The derived bullet product `x • y = x ≻ y − y ≺ x`.
pub fn bullet_tensor(s: &SplitAlgebra) -> Tensor3 {
    let n = s.dim();
    let succ = s.succ();
    let prec = s.prec();
    Tensor3::from_fn(n, n, n, |i, j, k| succ.at(i, j, k) - prec.at(j, i, k))
}

/// Check the three hand-coded Leibniz representation identities:
/// `l(x∘y) = [l(x), l(y)]`, `r(x∘y) = l(x)r(y) − r(y)l(x)`,
/// `r(y)l(x) = −r(y)r(x)`.
pub fn check_leibniz_rep(a: &Algebra, mult: &str, rep: &Rep) -> Result<bool> {
    let t = a.mult(mult)?;
    if !is_leibniz(t)? {
        return Err(Error::NotLeibniz);
    }
    let n = a.dim;
    if rep.left.len() != n || rep.right.len() != n {
        return Err(Error::DimMismatch("rep family length".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let lxy = crate::splitting::combine_family(&rep.left, t.fibre(i, j));
            let rxy = crate::splitting::combine_family(&rep.right, t.fibre(i, j));
            let (li, lj) = (&rep.left[i], &rep.left[j]);
            let (ri, rj) = (&rep.right[i], &rep.right[j]);
            if lxy != li.mul(lj).sub(&lj.mul(li)) {
                return Ok(false);
            }
            if rxy != li.mul(rj).sub(&rj.mul(li)) {
                return Ok(false);
            }
            if rj.mul(li) != rj.mul(ri).neg() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The L-matrix dualization `(l, r) ↦ (l*, −l* − r*)`.
pub fn dualize_leibniz_rep(rep: &Rep) -> Rep {
    let dual = crate::algebra::dual_rep(rep);
    Rep {
        vdim: rep.vdim,
        right: dual
            .left
            .iter()
            .zip(&dual.right)
            .map(|(l, r)| l.neg().sub(r))
            .collect(),
        left: dual.left,
    }
}

/// Is the split a type-a pre-Leibniz algebra, judged along the chosen
/// route?  All three routes have the same verdict.
pub fn check_type_a(s: &SplitAlgebra, route: TypeARoute) -> Result<bool> {
    let rs = RelationSet::leibniz();
    match route {
        TypeARoute::TypeA => Ok(check_type_m_pre(s, &rs, &TypeMatrix::type_a(), false)?.ok),
        TypeARoute::DualTypeB => Ok(check_type_m_pre(s, &rs, &TypeMatrix::type_b(), true)?.ok),
        TypeARoute::Identities => {
            let circ = s.succ().add(s.prec());
            if !is_leibniz(&circ)? {
                return Ok(false);
            }
            let bullet = bullet_tensor(s);
            let prec = s.prec();
            let n = s.dim();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let x = linalg::basis_vec(n, i);
                        let y = linalg::basis_vec(n, j);
                        let z = linalg::basis_vec(n, k);
                        // (x∘y)•z = x•(y•z) − y•(x•z)
                        let lhs = bullet.contract(circ.fibre(i, j), &z)?;
                        let rhs = linalg::vec_sub(
                            &bullet.contract(&x, bullet.fibre(j, k))?,
                            &bullet.contract(&y, bullet.fibre(i, k))?,
                        );
                        if lhs != rhs {
                            return Ok(false);
                        }
                        // z≺(x∘y) = x•(z≺y) − (x•z)≺y
                        let lhs = prec.contract(&z, circ.fibre(i, j))?;
                        let x_bullet_zy = bullet.contract(&x, prec.fibre(k, j))?;
                        let rhs = linalg::vec_sub(
                            &x_bullet_zy,
                            &prec.contract(bullet.fibre(i, k), &y)?,
                        );
                        if lhs != rhs {
                            return Ok(false);
                        }
                        // x•(z≺y) = −(z≺y)≺x
                        let neg_rhs = prec.contract(prec.fibre(k, j), &x)?;
                        if !linalg::vec_is_zero(&linalg::vec_add(&x_bullet_zy, &neg_rhs)) {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
    }
}

/// SDPL verdict on a raw split: `≺` anticommutative, `∘` Leibniz, and the
/// chain `x∘(y≺z) = (x∘y)≺z + y≺(x∘z) = x≺(y≺z)`.
pub fn check_sdpl(s: &SplitAlgebra) -> Result<bool> {
    let prec = s.prec();
    if !is_antisymmetric(prec) {
        return Ok(false);
    }
    let circ = s.succ().add(s.prec());
    if !is_leibniz(&circ)? {
        return Ok(false);
    }
    let n = s.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let x = linalg::basis_vec(n, i);
                let y = linalg::basis_vec(n, j);
                let z = linalg::basis_vec(n, k);
                let lhs = circ.contract(&x, prec.fibre(j, k))?;
                let mid = linalg::vec_add(
                    &prec.contract(circ.fibre(i, j), &z)?,
                    &prec.contract(&y, circ.fibre(i, k))?,
                );
                if lhs != mid {
                    return Ok(false);
                }
                if lhs != prec.contract(&x, prec.fibre(j, k))? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A validated SDPL algebra; the invariants hold for the lifetime of the
/// value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SDPLAlgebra {
    split: SplitAlgebra,
}

impl SDPLAlgebra {
    pub fn new(split: SplitAlgebra) -> Result<Self> {
        if !is_antisymmetric(split.prec()) {
            return Err(Error::InvalidSplit("prec is not anticommutative".into()));
        }
        if !is_leibniz(split.circ())? {
            return Err(Error::NotLeibniz);
        }
        if !check_sdpl(&split)? {
            return Err(Error::InvalidSplit(
                "the SDPL compatibility chain fails".into(),
            ));
        }
        Ok(SDPLAlgebra { split })
    }

    pub fn split(&self) -> &SplitAlgebra {
        &self.split
    }

    pub fn dim(&self) -> usize {
        self.split.dim()
    }

    pub fn succ(&self) -> &Tensor3 {
        self.split.succ()
    }

    pub fn prec(&self) -> &Tensor3 {
        self.split.prec()
    }

    pub fn circ(&self) -> &Tensor3 {
        self.split.circ()
    }

    /// The sub-adjacent Leibniz algebra, with mult `"circ"`.
    pub fn leibniz_algebra(&self) -> Algebra {
        Algebra::new(self.dim()).with_mult("circ", self.circ().clone())
    }
}

/// Left-invariance `B(x∘y, z) + B(y, x∘z) = 0`.
pub fn is_left_invariant(a: &Algebra, mult: &str, b: &BilinearForm) -> Result<bool> {
    let t = a.mult(mult)?;
    let n = a.dim;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let y = linalg::basis_vec(n, j);
                let z = linalg::basis_vec(n, k);
                let v = b.apply(t.fibre(i, j), &z) + b.apply(&y, t.fibre(i, k));
                if !num::Zero::is_zero(&v) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The expanded invariance `B(x∘y,z) = −B(y, x∘z + z∘x) − B(x, z∘y)`.
pub fn check_left_inv1(a: &Algebra, mult: &str, b: &BilinearForm) -> Result<bool> {
    let t = a.mult(mult)?;
    let n = a.dim;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let x = linalg::basis_vec(n, i);
                let y = linalg::basis_vec(n, j);
                let z = linalg::basis_vec(n, k);
                let lhs = b.apply(t.fibre(i, j), &z);
                let rhs = -b.apply(&y, &linalg::vec_add(t.fibre(i, k), t.fibre(k, i)))
                    - b.apply(&x, t.fibre(k, j));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The two-sided consequence `B(x∘y,z) = −B(y, x∘z) = −B(x∘z, y)`.
pub fn check_1825(a: &Algebra, mult: &str, b: &BilinearForm) -> Result<bool> {
    let t = a.mult(mult)?;
    let n = a.dim;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let y = linalg::basis_vec(n, j);
                let z = linalg::basis_vec(n, k);
                let lhs = b.apply(t.fibre(i, j), &z);
                let mid = -b.apply(&y, t.fibre(i, k));
                let rhs = -b.apply(t.fibre(i, k), &y);
                if lhs != mid || mid != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Build the SDPL structure from a nondegenerate symmetric left-invariant
/// form, solving `B(x≻y,z) = −B(y, x∘z + z∘x)` and
/// `B(x≺y,z) = −B(x, z∘y)` (the M = b specialization of the generic
/// form-induced splitting).
pub fn sdpl_from_form(a: &Algebra, mult: &str, b: &BilinearForm) -> Result<SDPLAlgebra> {
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !is_left_invariant(a, mult, b)? {
        return Err(Error::NotLeftInvariant);
    }
    let split = splitting_from_form(a, mult, &RelationSet::leibniz(), b, &TypeMatrix::type_b())?;
    SDPLAlgebra::new(split)
}

/// Is `B` an invariant (quadratic) form of the SDPL algebra, i.e.
/// symmetric, nondegenerate and satisfying `B(x≺y,z) = −B(x, z∘y)`?
pub fn quadratic_form_of(s: &SDPLAlgebra, b: &BilinearForm) -> bool {
    if !b.is_symmetric() || !b.is_nondegenerate() {
        return false;
    }
    let prec = s.prec();
    let circ = s.circ();
    let n = s.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let x = linalg::basis_vec(n, i);
                let z = linalg::basis_vec(n, k);
                if b.apply(prec.fibre(i, j), &z) != -b.apply(&x, circ.fibre(k, j)) {
                    return false;
                }
            }
        }
    }
    true
}

/// A representation quadruple `(l≻, r≻, l≺, V)` of an SDPL algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SDPLRep {
    pub vdim: usize,
    pub l_succ: Vec<Matrix>,
    pub r_succ: Vec<Matrix>,
    pub l_prec: Vec<Matrix>,
}

impl SDPLRep {
    /// `l∘ = l≻ + l≺`.
    pub fn l_circ(&self) -> Vec<Matrix> {
        self.l_succ
            .iter()
            .zip(&self.l_prec)
            .map(|(a, b)| a.add(b))
            .collect()
    }

    /// `r∘ = r≻ − l≺`.
    pub fn r_circ(&self) -> Vec<Matrix> {
        self.r_succ
            .iter()
            .zip(&self.l_prec)
            .map(|(a, b)| a.sub(b))
            .collect()
    }
}

/// The adjoint quadruple `(L≻, R≻, L≺, A)`.
pub fn adjoint_sdpl_rep(s: &SDPLAlgebra) -> SDPLRep {
    let n = s.dim();
    let base = s.split().base();
    SDPLRep {
        vdim: n,
        l_succ: (0..n)
            .map(|i| base.left_mult_matrix("succ", i).expect("succ"))
            .collect(),
        r_succ: (0..n)
            .map(|i| base.right_mult_matrix("succ", i).expect("succ"))
            .collect(),
        l_prec: (0..n)
            .map(|i| base.left_mult_matrix("prec", i).expect("prec"))
            .collect(),
    }
}

/// Check the SDPL representation conditions: `(l∘, r∘, V)` is a Leibniz
/// representation and the two chains
/// `l∘(x)l≺(y) = l≺(x∘y) + l≺(y)l∘(x) = l≺(x)l≺(y)` and
/// `r∘(x≺y) = l≺(x)r∘(y) − l≺(y)r∘(x) = −l≺(x≺y)` hold.
pub fn check_sdpl_rep(s: &SDPLAlgebra, rep: &SDPLRep) -> Result<bool> {
    let a = s.leibniz_algebra();
    let lc = rep.l_circ();
    let rc = rep.r_circ();
    let circ_rep = Rep {
        vdim: rep.vdim,
        left: lc.clone(),
        right: rc.clone(),
    };
    if !check_leibniz_rep(&a, "circ", &circ_rep)? {
        return Ok(false);
    }
    let circ = s.circ();
    let prec = s.prec();
    let n = s.dim();
    for i in 0..n {
        for j in 0..n {
            let lp_xy = crate::splitting::combine_family(&rep.l_prec, circ.fibre(i, j));
            let first = lc[i].mul(&rep.l_prec[j]);
            if first != lp_xy.add(&rep.l_prec[j].mul(&lc[i])) {
                return Ok(false);
            }
            if first != rep.l_prec[i].mul(&rep.l_prec[j]) {
                return Ok(false);
            }
            let rc_prec = crate::splitting::combine_family(&rc, prec.fibre(i, j));
            let mid = rep.l_prec[i].mul(&rc[j]).sub(&rep.l_prec[j].mul(&rc[i]));
            if rc_prec != mid {
                return Ok(false);
            }
            let lp_prec = crate::splitting::combine_family(&rep.l_prec, prec.fibre(i, j));
            if rc_prec != lp_prec.neg() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The dualization transport `(l≻, r≻, l≺) ↦ (l*≻ + r*≻, −r*≻, −r*∘)`.
pub fn dualize_sdpl_rep(rep: &SDPLRep) -> SDPLRep {
    let star = |m: &Matrix| m.transpose().neg();
    let r_circ = rep.r_circ();
    SDPLRep {
        vdim: rep.vdim,
        l_succ: rep
            .l_succ
            .iter()
            .zip(&rep.r_succ)
            .map(|(l, r)| star(l).add(&star(r)))
            .collect(),
        r_succ: rep.r_succ.iter().map(|r| star(r).neg()).collect(),
        l_prec: r_circ.iter().map(|r| star(r).neg()).collect(),
    }
}

/// The coadjoint representation `(L*≻ + R*≻, −R*≻, −R*∘, A*)`.
pub fn coadjoint_sdpl_rep(s: &SDPLAlgebra) -> SDPLRep {
    dualize_sdpl_rep(&adjoint_sdpl_rep(s))
}
