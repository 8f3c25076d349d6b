//! Coalgebras by dualization, SDPL coalgebras and bialgebras, matched
//! pairs, doubles, Manin triples (Leibniz, SDPL, Lie, averaging-Lie), and
//! the averaging-Lie-bialgebra → SDPL-bialgebra induction.
//!
//! A comultiplication is stored as a rank-3 tensor `d[k][i][j]` meaning
//! `η(e_k) = Σ d[k][i][j] e_i ⊗ e_j`; its slice at `k` is the coefficient
//! matrix of `η(e_k)` with rows indexing the first tensor leg.

use crate::algebra::{
    check_relations, is_representation, Algebra, RelationSet, Rep, ViolationReport,
};
use crate::averaging::{check_averaging, sdpl_from_admissible, AveragingLieAlgebra};
use crate::leibniz::{check_sdpl, is_left_invariant, SDPLAlgebra};
use crate::linalg::{self, Matrix, Tensor3, Vector};
use crate::scalar::{zero, Scalar};
use crate::splitting::{dual_family, BilinearForm, SplitAlgebra};
use crate::{Error, Result};

/// A comultiplication `A → A ⊗ A` in coefficient form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comult {
    tensor: Tensor3,
}

impl Comult {
    pub fn new(tensor: Tensor3) -> Result<Self> {
        let (a, b, c) = tensor.dims();
        if a != b || b != c {
            return Err(Error::BadShape("comultiplication tensor must be cubic".into()));
        }
        Ok(Comult { tensor })
    }

    pub fn zero(dim: usize) -> Self {
        Comult {
            tensor: Tensor3::zeros(dim, dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.tensor.dims().0
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.tensor
    }

    pub fn at(&self, k: usize, i: usize, j: usize) -> &Scalar {
        self.tensor.at(k, i, j)
    }

    /// The coefficient matrix of `η(e_k)`.
    pub fn slice(&self, k: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| self.tensor.at(k, i, j).clone())
    }

    pub fn from_slices(slices: &[Matrix]) -> Result<Self> {
        let n = slices.len();
        for s in slices {
            if s.rows() != n || s.cols() != n {
                return Err(Error::BadShape("comultiplication slice shape".into()));
            }
        }
        Ok(Comult {
            tensor: Tensor3::from_fn(n, n, n, |k, i, j| slices[k].at(i, j).clone()),
        })
    }

    /// The coefficient matrix of `η(v)` for a coordinate vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (k, c) in v.iter().enumerate() {
            if num::Zero::is_zero(c) {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let e = self.tensor.at(k, i, j);
                    if !num::Zero::is_zero(e) {
                        *out.at_mut(i, j) += c * e;
                    }
                }
            }
        }
        out
    }

    /// The flipped comultiplication `τ ∘ η`.
    pub fn tau(&self) -> Self {
        let n = self.dim();
        Comult {
            tensor: Tensor3::from_fn(n, n, n, |k, i, j| self.tensor.at(k, j, i).clone()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Comult {
            tensor: self.tensor.add(&other.tensor),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }

    /// Is `η = −τη`?
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if *self.tensor.at(k, i, j) != -self.tensor.at(k, j, i) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// View a multiplication tensor as a comultiplication (index
/// transposition `m[i][j][k] → d[k][i][j]`).
pub fn dualize_mult(m: &Tensor3) -> Comult {
    let (n, _, _) = m.dims();
    Comult {
        tensor: Tensor3::from_fn(n, n, n, |k, i, j| m.at(i, j, k).clone()),
    }
}

/// The inverse transposition `d[k][i][j] → m[i][j][k]`.
pub fn dualize_comult(c: &Comult) -> Tensor3 {
    let n = c.dim();
    Tensor3::from_fn(n, n, n, |i, j, k| c.tensor.at(k, i, j).clone())
}

// --- triple-tensor helpers: results index e_a ⊗ e_b ⊗ e_c -------------

/// `(outer ⊗ id) inner(e_k)`.
fn comp_first(outer: &Comult, inner: &Comult, k: usize) -> Tensor3 {
    let n = inner.dim();
    Tensor3::from_fn(n, n, n, |a, b, c| {
        (0..n)
            .map(|i| inner.tensor.at(k, i, c) * outer.tensor.at(i, a, b))
            .sum()
    })
}

/// `(id ⊗ outer) inner(e_k)`.
fn comp_second(outer: &Comult, inner: &Comult, k: usize) -> Tensor3 {
    let n = inner.dim();
    Tensor3::from_fn(n, n, n, |a, b, c| {
        (0..n)
            .map(|j| inner.tensor.at(k, a, j) * outer.tensor.at(j, b, c))
            .sum()
    })
}

/// `(τ ⊗ id)`: swap the first two legs.
fn swap12(t: &Tensor3) -> Tensor3 {
    let (n, _, _) = t.dims();
    Tensor3::from_fn(n, n, n, |a, b, c| t.at(b, a, c).clone())
}

/// The cyclic rotation `σ(x⊗y⊗z) = z⊗x⊗y` in coefficient form.
fn rotate(t: &Tensor3) -> Tensor3 {
    let (n, _, _) = t.dims();
    Tensor3::from_fn(n, n, n, |a, b, c| t.at(b, c, a).clone())
}

/// The co-Leibniz identity
/// `(η⊗id)η + (τ⊗id)(id⊗η)η − (id⊗η)η = 0`.
pub fn check_leibniz_coalgebra(c: &Comult) -> bool {
    let n = c.dim();
    for k in 0..n {
        let second = comp_second(c, c, k);
        let lhs = comp_first(c, c, k).add(&swap12(&second)).sub(&second);
        if !lhs.is_zero() {
            return false;
        }
    }
    true
}

/// The SDPL-coalgebra conditions: `η = ϑ + θ` is a Leibniz coalgebra,
/// `θ = −τθ`, `(id⊗θ)η = (η⊗id)θ + (τ⊗id)(id⊗η)θ`, and `(id⊗θ)ϑ = 0`.
pub fn check_sdpl_coalgebra(vartheta: &Comult, theta: &Comult) -> bool {
    if !theta.is_antisymmetric() {
        return false;
    }
    let eta = vartheta.add(theta);
    if !check_leibniz_coalgebra(&eta) {
        return false;
    }
    let n = eta.dim();
    for k in 0..n {
        let lhs = comp_second(theta, &eta, k);
        let rhs = comp_first(&eta, theta, k).add(&swap12(&comp_second(&eta, theta, k)));
        if lhs != rhs {
            return false;
        }
        if !comp_second(theta, vartheta, k).is_zero() {
            return false;
        }
    }
    true
}

/// Raw SDPL-bialgebra verdict on an unvalidated split: the split is SDPL,
/// `(ϑ, θ)` is an SDPL coalgebra, and the four compatibility identities
/// hold.
pub fn sdpl_bialgebra_verdict(
    s: &SplitAlgebra,
    vartheta: &Comult,
    theta: &Comult,
) -> Result<bool> {
    if !check_sdpl(s)? {
        return Ok(false);
    }
    if !check_sdpl_coalgebra(vartheta, theta) {
        return Ok(false);
    }
    bialgebra_identities(s, vartheta, theta)
}

fn bialgebra_identities(s: &SplitAlgebra, vartheta: &Comult, theta: &Comult) -> Result<bool> {
    let n = s.dim();
    if vartheta.dim() != n || theta.dim() != n {
        return Err(Error::DimMismatch("comultiplication dimension".into()));
    }
    let eta = vartheta.add(theta);
    let base = s.base();
    let circ = s.circ();
    let prec = s.prec();
    let anti = |m: &Matrix| m.sub(&m.transpose());
    for i in 0..n {
        let l_prec_i = base.left_mult_matrix("prec", i)?;
        let l_circ_i = base.left_mult_matrix("circ", i)?;
        let eta_i = eta.slice(i);
        let theta_i = theta.slice(i);
        for j in 0..n {
            let r_prec_j = base.right_mult_matrix("prec", j)?;
            let r_circ_j = base.right_mult_matrix("circ", j)?;
            let l_circ_j = base.left_mult_matrix("circ", j)?;
            let l_prec_j = base.left_mult_matrix("prec", j)?;
            let eta_j = eta.slice(j);
            let theta_j = theta.slice(j);
            // η(x≺y) = (id−τ)(id⊗L≺(x))η(y) + (id−τ)(id⊗R≺(y))η(x)
            let lhs1 = eta.apply(prec.fibre(i, j));
            let rhs1 = anti(&eta_j.mul(&l_prec_i.transpose()))
                .add(&anti(&eta_i.mul(&r_prec_j.transpose())));
            if lhs1 != rhs1 {
                return Ok(false);
            }
            // (L∘(x)⊗id)η(y) = (L≺(x)⊗id)η(y) + (id⊗R∘(y))η(x) − (id⊗R∘(y))θ(x)
            let lhs2 = l_circ_i.mul(&eta_j);
            let rhs2 = l_prec_i
                .mul(&eta_j)
                .add(&eta_i.mul(&r_circ_j.transpose()))
                .sub(&theta_i.mul(&r_circ_j.transpose()));
            if lhs2 != rhs2 {
                return Ok(false);
            }
            // θ(x∘y) = (id⊗L∘(x) + L∘(x)⊗id)θ(y) − (id⊗L∘(y) + L∘(y)⊗id)θ(x)
            let lhs3 = theta.apply(circ.fibre(i, j));
            let rhs3 = theta_j
                .mul(&l_circ_i.transpose())
                .add(&l_circ_i.mul(&theta_j))
                .sub(&theta_i.mul(&l_circ_j.transpose()))
                .sub(&l_circ_j.mul(&theta_i));
            if lhs3 != rhs3 {
                return Ok(false);
            }
            // η(x∘y) = (id⊗R∘(y))η(x) + (id⊗L∘(x) + L≺(x)⊗id)η(y) − (L≺(y)⊗id)θ(x)
            let lhs4 = eta.apply(circ.fibre(i, j));
            let rhs4 = eta_i
                .mul(&r_circ_j.transpose())
                .add(&eta_j.mul(&l_circ_i.transpose()))
                .add(&l_prec_i.mul(&eta_j))
                .sub(&l_prec_j.mul(&theta_i));
            if lhs4 != rhs4 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// SDPL-bialgebra verdict for a validated SDPL algebra; the coalgebra
/// precondition failing is an error.
pub fn check_sdpl_bialgebra(s: &SDPLAlgebra, vartheta: &Comult, theta: &Comult) -> Result<bool> {
    if !check_sdpl_coalgebra(vartheta, theta) {
        return Err(Error::NotCoalgebra);
    }
    bialgebra_identities(s.split(), vartheta, theta)
}

/// A validated SDPL bialgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SDPLBialgebra {
    pub sdpl: SDPLAlgebra,
    pub vartheta: Comult,
    pub theta: Comult,
}

impl SDPLBialgebra {
    pub fn new(sdpl: SDPLAlgebra, vartheta: Comult, theta: Comult) -> Result<Self> {
        if !check_sdpl_bialgebra(&sdpl, &vartheta, &theta)? {
            return Err(Error::NotBialgebra);
        }
        Ok(SDPLBialgebra {
            sdpl,
            vartheta,
            theta,
        })
    }

    /// The dual split on `A*` (succ dual to ϑ, prec dual to θ).
    pub fn dual_split(&self) -> Result<SplitAlgebra> {
        SplitAlgebra::new(dualize_comult(&self.vartheta), dualize_comult(&self.theta))
    }
}

// --- matched pairs and doubles ----------------------------------------

/// Two algebras with four families of cross actions, candidate data for a
/// matched pair on `A ⊕ B`.
#[derive(Debug, Clone)]
pub struct MatchedPairData {
    pub a: Algebra,
    pub amult: String,
    pub b: Algebra,
    pub bmult: String,
    /// `l_A, r_A : A → End(B)`, indexed by the basis of `A`.
    pub la: Vec<Matrix>,
    pub ra: Vec<Matrix>,
    /// `l_B, r_B : B → End(A)`, indexed by the basis of `B`.
    pub lb: Vec<Matrix>,
    pub rb: Vec<Matrix>,
}

/// The candidate product on `A ⊕ B`
/// `(x+a)∘(y+b) = x∘y + l_B(a)y + r_B(b)x + a∘b + l_A(x)b + r_A(y)a`,
/// built unconditionally (`A` occupies the leading coordinates).
pub fn build_matched_double(d: &MatchedPairData) -> Result<Algebra> {
    let n = d.a.dim;
    let m = d.b.dim;
    let ta = d.a.mult(&d.amult)?;
    let tb = d.b.mult(&d.bmult)?;
    if d.la.len() != n || d.ra.len() != n || d.lb.len() != m || d.rb.len() != m {
        return Err(Error::DimMismatch("cross-action family length".into()));
    }
    let total = n + m;
    let mut t = Tensor3::zeros(total, total, total);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                *t.at_mut(i, j, k) = ta.at(i, j, k).clone();
            }
        }
        for q in 0..m {
            // x ∘ b = l_A(x) b ;  b ∘ x has r_B/l_B parts below
            for bb in 0..m {
                *t.at_mut(i, n + q, n + bb) = d.la[i].at(bb, q).clone();
            }
            // x ∘ b also receives r_B(b) x in the A component
            for k in 0..n {
                *t.at_mut(i, n + q, k) = d.rb[q].at(k, i).clone();
            }
        }
    }
    for p in 0..m {
        for q in 0..m {
            for bb in 0..m {
                *t.at_mut(n + p, n + q, n + bb) = tb.at(p, q, bb).clone();
            }
        }
        for j in 0..n {
            // a ∘ y = l_B(a) y + r_A(y) a
            for k in 0..n {
                *t.at_mut(n + p, j, k) = d.lb[p].at(k, j).clone();
            }
            for bb in 0..m {
                *t.at_mut(n + p, j, n + bb) = d.ra[j].at(bb, p).clone();
            }
        }
    }
    Ok(Algebra::new(total).with_mult("circ", t))
}

/// Check the matched-pair conditions directly: `(l_A, r_A, B)` and
/// `(l_B, r_B, A)` are representations with respect to the given relation
/// sets, and the six compatibility identities hold.
pub fn check_matched_pair(
    d: &MatchedPairData,
    rs_a: &RelationSet,
    rs_b: &RelationSet,
) -> Result<bool> {
    let rep_a = Rep {
        vdim: d.b.dim,
        left: d.la.clone(),
        right: d.ra.clone(),
    };
    if !is_representation(&d.a, &d.amult, rs_a, &rep_a)?.ok {
        return Ok(false);
    }
    let rep_b = Rep {
        vdim: d.a.dim,
        left: d.lb.clone(),
        right: d.rb.clone(),
    };
    if !is_representation(&d.b, &d.bmult, rs_b, &rep_b)?.ok {
        return Ok(false);
    }
    let ta = d.a.mult(&d.amult)?;
    let tb = d.b.mult(&d.bmult)?;
    let n = d.a.dim;
    let m = d.b.dim;
    // x = e_i, y = e_j in A;  a = ε_p, b = ε_q in B
    for i in 0..n {
        for p in 0..m {
            for q in 0..m {
                let ea = linalg::basis_vec(m, p);
                let eb = linalg::basis_vec(m, q);
                let ab = tb.fibre(p, q);
                // mp1
                let v = linalg::vec_sub(
                    &d.ra[i].matvec(ab),
                    &tb.contract(&ea, &d.ra[i].col(q))?,
                );
                let v = linalg::vec_add(&v, &tb.contract(&eb, &d.ra[i].col(p))?);
                let v = linalg::vec_sub(
                    &v,
                    &crate::splitting::combine_family(&d.ra, &d.lb[q].col(i)).col(p),
                );
                let v = linalg::vec_add(
                    &v,
                    &crate::splitting::combine_family(&d.ra, &d.lb[p].col(i)).col(q),
                );
                if !linalg::vec_is_zero(&v) {
                    return Ok(false);
                }
                // mp2
                let v = linalg::vec_sub(
                    &d.la[i].matvec(ab),
                    &tb.contract(&d.la[i].col(p), &eb)?,
                );
                let v = linalg::vec_sub(&v, &tb.contract(&ea, &d.la[i].col(q))?);
                let v = linalg::vec_sub(
                    &v,
                    &crate::splitting::combine_family(&d.la, &d.rb[p].col(i)).col(q),
                );
                let v = linalg::vec_sub(
                    &v,
                    &crate::splitting::combine_family(&d.ra, &d.rb[q].col(i)).col(p),
                );
                if !linalg::vec_is_zero(&v) {
                    return Ok(false);
                }
                // mp3
                let v = linalg::vec_add(
                    &tb.contract(&d.la[i].col(p), &eb)?,
                    &crate::splitting::combine_family(&d.la, &d.rb[p].col(i)).col(q),
                );
                let v = linalg::vec_add(&v, &tb.contract(&d.ra[i].col(p), &eb)?);
                let v = linalg::vec_add(
                    &v,
                    &crate::splitting::combine_family(&d.la, &d.lb[p].col(i)).col(q),
                );
                if !linalg::vec_is_zero(&v) {
                    return Ok(false);
                }
            }
        }
    }
    for p in 0..m {
        for i in 0..n {
            for j in 0..n {
                let ex = linalg::basis_vec(n, i);
                let ey = linalg::basis_vec(n, j);
                let xy = ta.fibre(i, j);
                // mp4
                let v = linalg::vec_sub(
                    &d.rb[p].matvec(xy),
                    &ta.contract(&ex, &d.rb[p].col(j))?,
                );
                let v = linalg::vec_add(&v, &ta.contract(&ey, &d.rb[p].col(i))?);
                let v = linalg::vec_sub(
                    &v,
                    &crate::splitting::combine_family(&d.rb, &d.la[j].col(p)).col(i),
                );
                let v = linalg::vec_add(
                    &v,
                    &crate::splitting::combine_family(&d.rb, &d.la[i].col(p)).col(j),
                );
                if !linalg::vec_is_zero(&v) {
                    return Ok(false);
                }
                // mp5
                let v = linalg::vec_sub(
                    &d.lb[p].matvec(xy),
                    &ta.contract(&d.lb[p].col(i), &ey)?,
                );
                let v = linalg::vec_sub(&v, &ta.contract(&ex, &d.lb[p].col(j))?);
                let v = linalg::vec_sub(
                    &v,
                    &crate::splitting::combine_family(&d.lb, &d.ra[i].col(p)).col(j),
                );
                let v = linalg::vec_sub(
                    &v,
                    &crate::splitting::combine_family(&d.rb, &d.ra[j].col(p)).col(i),
                );
                if !linalg::vec_is_zero(&v) {
                    return Ok(false);
                }
                // mp6
                let v = linalg::vec_add(
                    &ta.contract(&d.lb[p].col(i), &ey)?,
                    &crate::splitting::combine_family(&d.lb, &d.ra[i].col(p)).col(j),
                );
                let v = linalg::vec_add(&v, &ta.contract(&d.rb[p].col(i), &ey)?);
                let v = linalg::vec_add(
                    &v,
                    &crate::splitting::combine_family(&d.lb, &d.la[i].col(p)).col(j),
                );
                if !linalg::vec_is_zero(&v) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn left_family(a: &Algebra, mult: &str) -> Result<Vec<Matrix>> {
    (0..a.dim).map(|i| a.left_mult_matrix(mult, i)).collect()
}

fn right_family(a: &Algebra, mult: &str) -> Result<Vec<Matrix>> {
    (0..a.dim).map(|i| a.right_mult_matrix(mult, i)).collect()
}

/// The Leibniz double on `A ⊕ A*`:
/// `(x+a*)∘_d(y+b*) = x∘y + L*∘(a*)y − L*≺(b*)x + a*∘b* + L*∘(x)b* − L*≺(y)a*`,
/// built unconditionally from the two splits.
pub fn build_leibniz_double(sa: &SplitAlgebra, sastar: &SplitAlgebra) -> Result<Algebra> {
    if sa.dim() != sastar.dim() {
        return Err(Error::DimMismatch("the two splits must have equal dimension".into()));
    }
    let a = sa.base().clone();
    let b = sastar.base().clone();
    let la = dual_family(&left_family(&a, "circ")?);
    let ra: Vec<Matrix> = dual_family(&left_family(&a, "prec")?)
        .iter()
        .map(|x| x.neg())
        .collect();
    let lb = dual_family(&left_family(&b, "circ")?);
    let rb: Vec<Matrix> = dual_family(&left_family(&b, "prec")?)
        .iter()
        .map(|x| x.neg())
        .collect();
    build_matched_double(&MatchedPairData {
        a,
        amult: "circ".into(),
        b,
        bmult: "circ".into(),
        la,
        ra,
        lb,
        rb,
    })
}

/// The SDPL double on `A ⊕ A*` with
/// `≻_d` via `(L*≻ + R*≻, −R*≻)` and `≺_d` via `(−R*∘, R*∘)` cross
/// actions, built unconditionally.
pub fn build_sdpl_double(sa: &SplitAlgebra, sastar: &SplitAlgebra) -> Result<SplitAlgebra> {
    if sa.dim() != sastar.dim() {
        return Err(Error::DimMismatch("the two splits must have equal dimension".into()));
    }
    let a = sa.base().clone();
    let b = sastar.base().clone();
    let succ_cross = |alg: &Algebra| -> Result<(Vec<Matrix>, Vec<Matrix>)> {
        let ls = dual_family(&left_family(alg, "succ")?);
        let rs = dual_family(&right_family(alg, "succ")?);
        let l: Vec<Matrix> = ls.iter().zip(&rs).map(|(x, y)| x.add(y)).collect();
        let r: Vec<Matrix> = rs.iter().map(|x| x.neg()).collect();
        Ok((l, r))
    };
    let prec_cross = |alg: &Algebra| -> Result<(Vec<Matrix>, Vec<Matrix>)> {
        let rc = dual_family(&right_family(alg, "circ")?);
        let l: Vec<Matrix> = rc.iter().map(|x| x.neg()).collect();
        Ok((l, rc))
    };
    let (la_s, ra_s) = succ_cross(&a)?;
    let (lb_s, rb_s) = succ_cross(&b)?;
    let succ = build_matched_double(&MatchedPairData {
        a: a.clone(),
        amult: "succ".into(),
        b: b.clone(),
        bmult: "succ".into(),
        la: la_s,
        ra: ra_s,
        lb: lb_s,
        rb: rb_s,
    })?;
    let (la_p, ra_p) = prec_cross(&a)?;
    let (lb_p, rb_p) = prec_cross(&b)?;
    let prec = build_matched_double(&MatchedPairData {
        a,
        amult: "prec".into(),
        b,
        bmult: "prec".into(),
        la: la_p,
        ra: ra_p,
        lb: lb_p,
        rb: rb_p,
    })?;
    SplitAlgebra::new(
        succ.mult("circ")?.clone(),
        prec.mult("circ")?.clone(),
    )
}

/// The canonical pairing form on `A ⊕ A*`:
/// `B_d(x+a*, y+b*) = ⟨x, b*⟩ + ⟨a*, y⟩`.
pub fn bd_form(n: usize) -> BilinearForm {
    let m = Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if r + n == c || c + n == r {
            crate::scalar::one()
        } else {
            zero()
        }
    });
    BilinearForm::new(m)
}

fn half_closed(t: &Tensor3, offset: usize, n: usize) -> bool {
    let (total, _, _) = t.dims();
    for i in offset..offset + n {
        for j in offset..offset + n {
            for k in 0..total {
                if (k < offset || k >= offset + n) && !num::Zero::is_zero(t.at(i, j, k)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Manin-triple verdict for a Leibniz double of even dimension `2n` with
/// the leading half designated as `A`: the double is Leibniz, both halves
/// are subalgebras, and `B_d` is left-invariant.
pub fn check_manin_triple_leibniz(double: &Algebra) -> Result<bool> {
    let total = double.dim;
    if total % 2 != 0 {
        return Err(Error::BadShape("double must have even dimension".into()));
    }
    let n = total / 2;
    let t = double.mult("circ")?;
    if !half_closed(t, 0, n) || !half_closed(t, n, n) {
        return Ok(false);
    }
    if !check_relations(double, "circ", &RelationSet::leibniz())?.ok {
        return Ok(false);
    }
    is_left_invariant(double, "circ", &bd_form(n))
}

/// Manin-triple verdict for an SDPL double: the split is SDPL, both
/// halves are closed under `≻` and `≺`, and `B_d` satisfies the
/// quadratic-form identity `B(u≺v, w) = −B(u, w∘v)`.
pub fn check_manin_triple_sdpl(s: &SplitAlgebra) -> Result<bool> {
    let total = s.dim();
    if total % 2 != 0 {
        return Err(Error::BadShape("double must have even dimension".into()));
    }
    let n = total / 2;
    for t in [s.succ(), s.prec()] {
        if !half_closed(t, 0, n) || !half_closed(t, n, n) {
            return Ok(false);
        }
    }
    if !check_sdpl(s)? {
        return Ok(false);
    }
    let b = bd_form(n);
    let circ = s.circ();
    let prec = s.prec();
    for i in 0..total {
        for j in 0..total {
            for k in 0..total {
                let u = linalg::basis_vec(total, i);
                let w = linalg::basis_vec(total, k);
                if b.apply(prec.fibre(i, j), &w) != -b.apply(&u, circ.fibre(k, j)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The five equivalent conditions of the Manin-triple theorem, evaluated
/// independently on a pair of raw splits (`A`-side and `A*`-side):
/// bialgebra, Leibniz Manin triple, SDPL Manin triple, double-is-Leibniz,
/// double-is-SDPL.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ManinChainVerdicts {
    pub bialgebra: bool,
    pub leibniz_manin: bool,
    pub sdpl_manin: bool,
    pub double_leibniz: bool,
    pub double_sdpl: bool,
}

pub fn manin_chain_verdicts(
    sa: &SplitAlgebra,
    sastar: &SplitAlgebra,
) -> Result<ManinChainVerdicts> {
    let vartheta = dualize_mult(sastar.succ());
    let theta = dualize_mult(sastar.prec());
    let bialgebra = check_sdpl(sastar)? && sdpl_bialgebra_verdict(sa, &vartheta, &theta)?;
    let circ_d = build_leibniz_double(sa, sastar)?;
    let split_d = build_sdpl_double(sa, sastar)?;
    Ok(ManinChainVerdicts {
        bialgebra,
        leibniz_manin: check_manin_triple_leibniz(&circ_d)?,
        sdpl_manin: check_manin_triple_sdpl(&split_d)?,
        double_leibniz: check_relations(&circ_d, "circ", &RelationSet::leibniz())?.ok,
        double_sdpl: check_sdpl(&split_d)?,
    })
}

// --- Lie bialgebras and the averaging layer ---------------------------

fn lie_coalgebra_holds(delta: &Comult) -> bool {
    if !delta.is_antisymmetric() {
        return false;
    }
    let n = delta.dim();
    for k in 0..n {
        let s = comp_second(delta, delta, k);
        let total = s.add(&rotate(&s)).add(&rotate(&rotate(&s)));
        if !total.is_zero() {
            return false;
        }
    }
    true
}

fn cocycle_holds(lie: &Algebra, delta: &Comult) -> Result<bool> {
    let t = lie.mult("bracket")?;
    let n = lie.dim;
    for i in 0..n {
        let ad_i = lie.left_mult_matrix("bracket", i)?;
        let h_i = delta.slice(i);
        for j in 0..n {
            let ad_j = lie.left_mult_matrix("bracket", j)?;
            let h_j = delta.slice(j);
            let lhs = delta.apply(t.fibre(i, j));
            let rhs = ad_i
                .mul(&h_j)
                .add(&h_j.mul(&ad_i.transpose()))
                .sub(&ad_j.mul(&h_i))
                .sub(&h_i.mul(&ad_j.transpose()));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lie-bialgebra verdict: `δ = −τδ`, co-Jacobi, and the 1-cocycle
/// condition.  The bracket must itself be Lie.
pub fn check_lie_bialgebra(lie: &Algebra, delta: &Comult) -> Result<bool> {
    if !check_relations(lie, "bracket", &RelationSet::lie())?.ok {
        return Err(Error::NotLie);
    }
    Ok(lie_coalgebra_holds(delta) && cocycle_holds(lie, delta)?)
}

/// The Lie double on `A ⊕ A*`:
/// `[x+a*, y+b*]_d = [x,y] + ad*(a*)y − ad*(b*)x + [a*,b*] + ad*(x)b* − ad*(y)a*`,
/// built unconditionally.
pub fn lie_double(lie: &Algebra, lie_star: &Algebra) -> Result<Algebra> {
    if lie.dim != lie_star.dim {
        return Err(Error::DimMismatch("the two brackets must have equal dimension".into()));
    }
    let la = dual_family(&left_family(lie, "bracket")?);
    let ra: Vec<Matrix> = la.iter().map(|m| m.neg()).collect();
    let lb = dual_family(&left_family(lie_star, "bracket")?);
    let rb: Vec<Matrix> = lb.iter().map(|m| m.neg()).collect();
    let mut double = build_matched_double(&MatchedPairData {
        a: lie.clone(),
        amult: "bracket".into(),
        b: lie_star.clone(),
        bmult: "bracket".into(),
        la,
        ra,
        lb,
        rb,
    })?;
    let t = double.mults.remove("circ").expect("matched double mult");
    Ok(Algebra::new(lie.dim * 2).with_mult("bracket", t))
}

/// An averaging-Lie-bialgebra candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvgLieBialgebra {
    pub lie: Algebra,
    pub delta: Comult,
    pub p: Matrix,
    pub q: Matrix,
}

impl AvgLieBialgebra {
    /// The bracket on `A*` dual to `δ`.
    pub fn star_algebra(&self) -> Algebra {
        Algebra::new(self.lie.dim).with_mult("bracket", dualize_comult(&self.delta))
    }

    /// `P + Q*` on `A ⊕ A*` (block diagonal, `Q*` acting as `Qᵀ`).
    pub fn p_plus_q_star(&self) -> Matrix {
        block_diag(&self.p, &self.q.transpose())
    }

    /// `Q + P*` on `A ⊕ A*`, the adjoint of `P + Q*` under `B_d`.
    pub fn q_plus_p_star(&self) -> Matrix {
        block_diag(&self.q, &self.p.transpose())
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
            zero()
        }
    })
}

/// Averaging-Lie-bialgebra verdict: the bracket is Lie, `(A, [−,−], δ)`
/// is a Lie bialgebra, `(P, Q)` is an admissible averaging pair, and the
/// two coalgebra-side averaging identities hold.
pub fn check_avg_lie_bialgebra(b: &AvgLieBialgebra) -> Result<bool> {
    if !check_relations(&b.lie, "bracket", &RelationSet::lie())?.ok {
        return Ok(false);
    }
    if !lie_coalgebra_holds(&b.delta) || !cocycle_holds(&b.lie, &b.delta)? {
        return Ok(false);
    }
    let al = AveragingLieAlgebra::new(b.lie.clone(), b.p.clone()).with_q(b.q.clone());
    if !al.is_admissible()? {
        return Ok(false);
    }
    let n = b.lie.dim;
    for k in 0..n {
        let h = b.delta.slice(k);
        // (Q⊗Q)δ(x) = (Q⊗id)δ(Qx)
        let lhs = b.q.mul(&h).mul(&b.q.transpose());
        let rhs = b.q.mul(&b.delta.apply(&b.q.col(k)));
        if lhs != rhs {
            return Ok(false);
        }
        // (Q⊗P)δ(x) = (Q⊗id)δ(Px) = (id⊗P)δ(Px)
        let h_px = b.delta.apply(&b.p.col(k));
        let first = b.q.mul(&h).mul(&b.p.transpose());
        let second = b.q.mul(&h_px);
        let third = h_px.mul(&b.p.transpose());
        if first != second || second != third {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Manin-triple route to the same verdict: the Lie-bialgebra checks
/// plus `P + Q*` averaging on the Lie double.
pub fn check_avg_lie_bialgebra_via_double(b: &AvgLieBialgebra) -> Result<bool> {
    match check_lie_bialgebra(&b.lie, &b.delta) {
        Err(Error::NotLie) => return Ok(false),
        Err(e) => return Err(e),
        Ok(false) => return Ok(false),
        Ok(true) => {}
    }
    let double = lie_double(&b.lie, &b.star_algebra())?;
    check_averaging(&double, &b.p_plus_q_star())
}

/// The SDPL bialgebra induced from an averaging Lie bialgebra:
/// multiplications from the admissible pair, comultiplications
/// `ϑ(x) = (Q⊗id)δ(x) − δ(Px)`, `θ(x) = δ(Px)`.
pub fn induce_sdpl_bialgebra(b: &AvgLieBialgebra) -> Result<SDPLBialgebra> {
    if !check_avg_lie_bialgebra(b)? {
        return Err(Error::NotAvgLieBialgebra);
    }
    let al = AveragingLieAlgebra::new(b.lie.clone(), b.p.clone()).with_q(b.q.clone());
    let sdpl = sdpl_from_admissible(&al)?;
    let n = b.lie.dim;
    let mut theta_slices = Vec::with_capacity(n);
    let mut vartheta_slices = Vec::with_capacity(n);
    for k in 0..n {
        let h_px = b.delta.apply(&b.p.col(k));
        let vt = b.q.mul(&b.delta.slice(k)).sub(&h_px);
        theta_slices.push(h_px);
        vartheta_slices.push(vt);
    }
    SDPLBialgebra::new(
        sdpl,
        Comult::from_slices(&vartheta_slices)?,
        Comult::from_slices(&theta_slices)?,
    )
}

/// The `A*`-side SDPL products of the induction,
/// `a*≻b* = [Q*a*, b*] − P*([a*,b*])`, `a*≺b* = P*([a*,b*])`, as a split
/// on `A*`.
pub fn induced_star_split(b: &AvgLieBialgebra) -> Result<SplitAlgebra> {
    let star = b.star_algebra();
    let al = AveragingLieAlgebra::new(star, b.q.transpose()).with_q(b.p.transpose());
    let t = al.lie.mult("bracket")?;
    let n = al.dim();
    let mut succ = Tensor3::zeros(n, n, n);
    let mut prec = Tensor3::zeros(n, n, n);
    let p_star = al.q.as_ref().unwrap();
    for i in 0..n {
        for j in 0..n {
            let y = linalg::basis_vec(n, j);
            let circ: Vector = t.contract(&al.p.col(i), &y)?;
            let pb = p_star.matvec(t.fibre(i, j));
            for k in 0..n {
                *succ.at_mut(i, j, k) = &circ[k] - &pb[k];
                *prec.at_mut(i, j, k) = pb[k].clone();
            }
        }
    }
    SplitAlgebra::new(succ, prec)
}

/// The Manin-triple transport: from an averaging Lie bialgebra, the
/// Leibniz double `u ∘_d v = [(P+Q*)u, v]_d` and the SDPL split
/// `u ≺_d v = (Q+P*)([u,v]_d)`, `≻_d = ∘_d − ≺_d`.
pub fn avg_manin_to_leibniz_manin(
    b: &AvgLieBialgebra,
) -> Result<(Algebra, SplitAlgebra)> {
    if !check_avg_lie_bialgebra(b)? {
        return Err(Error::NotAvgLieBialgebra);
    }
    let double = lie_double(&b.lie, &b.star_algebra())?;
    let t = double.mult("bracket")?;
    let total = double.dim;
    let big_p = b.p_plus_q_star();
    let big_q = b.q_plus_p_star();
    let mut circ = Tensor3::zeros(total, total, total);
    let mut prec = Tensor3::zeros(total, total, total);
    for i in 0..total {
        for j in 0..total {
            let y = linalg::basis_vec(total, j);
            let c = t.contract(&big_p.col(i), &y)?;
            let pr = big_q.matvec(t.fibre(i, j));
            for k in 0..total {
                *circ.at_mut(i, j, k) = c[k].clone();
                *prec.at_mut(i, j, k) = pr[k].clone();
            }
        }
    }
    let succ = circ.sub(&prec);
    Ok((
        Algebra::new(total).with_mult("circ", circ),
        SplitAlgebra::new(succ, prec)?,
    ))
}

/// Exhibit the first violated co-Leibniz residual of a comultiplication,
/// if any, as `(basis index, residual tensor)`.
pub fn leibniz_coalgebra_residual(c: &Comult) -> Option<(usize, Tensor3)> {
    let n = c.dim();
    for k in 0..n {
        let second = comp_second(c, c, k);
        let lhs = comp_first(c, c, k).add(&swap12(&second)).sub(&second);
        if !lhs.is_zero() {
            return Some((k, lhs));
        }
    }
    None
}

/// Convenience: report of a relation check, re-exported shape.
pub type Report = ViolationReport;
