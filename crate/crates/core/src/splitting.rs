//! Generalized splittings: type-M and dual type-M pre-structures, (dual)
//! type-M O-operators and Rota-Baxter operators, and splittings induced
//! from invertible operators and from bilinear forms.

use crate::algebra::{
    check_relations, combine_reps, is_representation, Algebra, RelationSet, ViolationReport,
};
use crate::linalg::{self, Matrix, Tensor3, Vector};
use crate::scalar::{self, Scalar};
use crate::{Error, Result};
use num::Zero;

/// A 2x2 scalar matrix `((a1, b1), (a2, b2))` acting on pairs of maps by
/// `(f, g)M = (a1 f + a2 g, b1 f + b2 g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeMatrix {
    pub a1: Scalar,
    pub b1: Scalar,
    pub a2: Scalar,
    pub b2: Scalar,
}

impl TypeMatrix {
    pub fn new(a1: Scalar, b1: Scalar, a2: Scalar, b2: Scalar) -> Self {
        TypeMatrix { a1, b1, a2, b2 }
    }

    pub fn from_int(a1: i64, b1: i64, a2: i64, b2: i64) -> Self {
        TypeMatrix::new(
            scalar::int(a1),
            scalar::int(b1),
            scalar::int(a2),
            scalar::int(b2),
        )
    }

    pub fn identity() -> Self {
        TypeMatrix::from_int(1, 0, 0, 1)
    }

    /// `a = ((1, -1), (-1, 0))`.
    pub fn type_a() -> Self {
        TypeMatrix::from_int(1, -1, -1, 0)
    }

    /// `b = ((1, 0), (-1, 1))`; note `b = a·L`.
    pub fn type_b() -> Self {
        TypeMatrix::from_int(1, 0, -1, 1)
    }

    /// `L = ((1, -1), (0, -1))`.
    pub fn type_l() -> Self {
        TypeMatrix::from_int(1, -1, 0, -1)
    }

    pub fn det(&self) -> Scalar {
        &self.a1 * &self.b2 - &self.a2 * &self.b1
    }

    pub fn is_singular(&self) -> bool {
        self.det().is_zero()
    }

    /// Ordinary 2x2 matrix product.
    pub fn mul(&self, other: &TypeMatrix) -> TypeMatrix {
        TypeMatrix::new(
            &self.a1 * &other.a1 + &self.b1 * &other.a2,
            &self.a1 * &other.b1 + &self.b1 * &other.b2,
            &self.a2 * &other.a1 + &self.b2 * &other.a2,
            &self.a2 * &other.b1 + &self.b2 * &other.b2,
        )
    }

    pub fn inverse(&self) -> Result<TypeMatrix> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::SingularTypeMatrix);
        }
        let inv = d.recip();
        Ok(TypeMatrix::new(
            &self.b2 * &inv,
            -(&self.b1 * &inv),
            -(&self.a2 * &inv),
            &self.a1 * &inv,
        ))
    }
}

/// A pair of multiplications with the cached sum `circ = succ + prec`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitAlgebra {
    algebra: Algebra,
}

impl SplitAlgebra {
    pub fn new(succ: Tensor3, prec: Tensor3) -> Result<Self> {
        if succ.dims() != prec.dims() || succ.dims().0 != succ.dims().1 {
            return Err(Error::BadShape(format!(
                "split tensors {:?} vs {:?}",
                succ.dims(),
                prec.dims()
            )));
        }
        let dim = succ.dims().0;
        let circ = succ.add(&prec);
        Ok(SplitAlgebra {
            algebra: Algebra::new(dim)
                .with_mult("succ", succ)
                .with_mult("prec", prec)
                .with_mult("circ", circ),
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn base(&self) -> &Algebra {
        &self.algebra
    }

    pub fn succ(&self) -> &Tensor3 {
        self.algebra.mult("succ").expect("succ present")
    }

    pub fn prec(&self) -> &Tensor3 {
        self.algebra.mult("prec").expect("prec present")
    }

    pub fn circ(&self) -> &Tensor3 {
        self.algebra.mult("circ").expect("circ present")
    }

    /// The family `L≻(e_i)`.
    pub fn succ_left_family(&self) -> Vec<Matrix> {
        (0..self.dim())
            .map(|i| self.algebra.left_mult_matrix("succ", i).expect("succ"))
            .collect()
    }

    /// The family `R≺(e_i)`.
    pub fn prec_right_family(&self) -> Vec<Matrix> {
        (0..self.dim())
            .map(|i| self.algebra.right_mult_matrix("prec", i).expect("prec"))
            .collect()
    }
}

/// A bilinear form `B(u, v) = uᵀ · matrix · v`, so `matrix[i][j] = B(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "bilinear form must be square");
        BilinearForm { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// The Gram matrix, with `B(u, v) = uᵀ · B · v`.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let bv = self.matrix.matvec(v);
        u.iter().zip(&bv).map(|(a, b)| a * b).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.matrix == self.matrix.transpose().neg()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.rank() == self.dim()
    }

    /// The matrix of `B♮: A → A*` defined by `B(u, v) = ⟨B♮(u), v⟩`, which
    /// is the transpose of the Gram matrix.
    pub fn natural_matrix(&self) -> Matrix {
        self.matrix.transpose()
    }
}

/// Negate-transpose every matrix of a family (the dual family on V*).
pub fn dual_family(family: &[Matrix]) -> Vec<Matrix> {
    family.iter().map(|m| m.transpose().neg()).collect()
}

/// `Σ_i x_i · family_i`: the matrix of `α(x)` from the basis family.
pub fn combine_family(family: &[Matrix], x: &[Scalar]) -> Matrix {
    assert_eq!(family.len(), x.len());
    let dim = family.first().map(|m| m.rows()).unwrap_or(0);
    let mut out = Matrix::zeros(dim, dim);
    for (c, m) in x.iter().zip(family) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

fn merge_reports(mut a: ViolationReport, b: ViolationReport) -> ViolationReport {
    a.ok = a.ok && b.ok;
    a.truncated = a.truncated || b.truncated;
    a.violations.extend(b.violations);
    a
}

/// Is the split a (dual) type-M pre-structure for the given relation set?
/// Checks admissibility of `circ` and that the (dualized) combined pair
/// `(L≻, R≺)·M` is a representation of the sum algebra.
pub fn check_type_m_pre(
    s: &SplitAlgebra,
    rs: &RelationSet,
    m: &TypeMatrix,
    dual: bool,
) -> Result<ViolationReport> {
    // Recompute the sum instead of trusting the cache.
    let circ = s.succ().add(s.prec());
    let base = Algebra::new(s.dim()).with_mult("circ", circ);
    let admissible = check_relations(&base, "circ", rs)?;
    let mut alpha = s.succ_left_family();
    let mut beta = s.prec_right_family();
    if dual {
        alpha = dual_family(&alpha);
        beta = dual_family(&beta);
    }
    let rep = combine_reps(&alpha, &beta, m)?;
    let rep_ok = is_representation(&base, "circ", rs, &rep)?;
    Ok(merge_reports(admissible, rep_ok))
}

/// Does `(Tu)∘(Tv) = T(α(Tu)v + β(Tv)u)` hold on all basis pairs of V?
pub fn check_o_operator(
    a: &Algebra,
    mult: &str,
    alpha: &[Matrix],
    beta: &[Matrix],
    t_map: &Matrix,
) -> Result<bool> {
    let n = a.dim;
    let vdim = t_map.cols();
    if t_map.rows() != n || alpha.len() != n || beta.len() != n {
        return Err(Error::DimMismatch(format!(
            "O-operator data: T is {}x{}, families of {}/{} matrices, algebra dim {n}",
            t_map.rows(),
            t_map.cols(),
            alpha.len(),
            beta.len()
        )));
    }
    for m in alpha.iter().chain(beta) {
        if (m.rows(), m.cols()) != (vdim, vdim) {
            return Err(Error::DimMismatch(format!(
                "action matrix is {}x{}, expected {vdim}x{vdim}",
                m.rows(),
                m.cols()
            )));
        }
    }
    for u in 0..vdim {
        for v in 0..vdim {
            let tu = t_map.col(u);
            let tv = t_map.col(v);
            let lhs = a.multiply(mult, &tu, &tv)?;
            let mut inner = combine_family(alpha, &tu).col(v);
            let bu = combine_family(beta, &tv).col(u);
            for (x, y) in inner.iter_mut().zip(&bu) {
                *x += y;
            }
            if lhs != t_map.matvec(&inner) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Full (dual) type-M O-operator verdict: the operator identity holds and
/// the (dualized) combination `(α, β)M` is a representation.
#[allow(clippy::too_many_arguments)]
pub fn classify_o_operator(
    a: &Algebra,
    mult: &str,
    rs: &RelationSet,
    alpha: &[Matrix],
    beta: &[Matrix],
    t_map: &Matrix,
    m: &TypeMatrix,
    dual: bool,
) -> Result<bool> {
    if !check_o_operator(a, mult, alpha, beta, t_map)? {
        return Ok(false);
    }
    let (fa, fb) = if dual {
        (dual_family(alpha), dual_family(beta))
    } else {
        (alpha.to_vec(), beta.to_vec())
    };
    let rep = combine_reps(&fa, &fb, m)?;
    Ok(is_representation(a, mult, rs, &rep)?.ok)
}

/// The multiplication `u ∘_V v = α(Tu)v + β(Tv)u` on V.
fn v_side_mult(alpha: &[Matrix], beta: &[Matrix], t_map: &Matrix) -> Tensor3 {
    let vdim = t_map.cols();
    let mut t = Tensor3::zeros(vdim, vdim, vdim);
    for u in 0..vdim {
        for v in 0..vdim {
            let au = combine_family(alpha, &t_map.col(u)).col(v);
            let bv = combine_family(beta, &t_map.col(v)).col(u);
            for k in 0..vdim {
                *t.at_mut(u, v, k) = &au[k] + &bv[k];
            }
        }
    }
    t
}

/// An O-operator is strong when `∘_V` satisfies the relation set.
pub fn check_strong(
    a: &Algebra,
    mult: &str,
    rs: &RelationSet,
    alpha: &[Matrix],
    beta: &[Matrix],
    t_map: &Matrix,
) -> Result<bool> {
    if !check_o_operator(a, mult, alpha, beta, t_map)? {
        return Err(Error::NotAnOperator);
    }
    let v = Algebra::new(t_map.cols()).with_mult("circ", v_side_mult(alpha, beta, t_map));
    Ok(check_relations(&v, "circ", rs)?.ok)
}

/// Splitting induced by an invertible O-operator:
/// `x ≻ y = T(α(x)T⁻¹y)`, `x ≺ y = T(β(y)T⁻¹x)`.
pub fn induce_splitting(
    a: &Algebra,
    mult: &str,
    alpha: &[Matrix],
    beta: &[Matrix],
    t_map: &Matrix,
) -> Result<SplitAlgebra> {
    let t_inv = t_map.invert()?;
    if !check_o_operator(a, mult, alpha, beta, t_map)? {
        return Err(Error::NotAnOperator);
    }
    let n = a.dim;
    let mut succ = Tensor3::zeros(n, n, n);
    let mut prec = Tensor3::zeros(n, n, n);
    for i in 0..n {
        // T·α(e_i)·T⁻¹ gives all products e_i ≻ e_j at once; analogously
        // T·β(e_j)·T⁻¹ gives the e_i ≺ e_j column family.
        let sa = t_map
            .mul(&combine_family(alpha, &linalg::basis_vec(n, i)))
            .mul(&t_inv);
        let pb = t_map
            .mul(&combine_family(beta, &linalg::basis_vec(n, i)))
            .mul(&t_inv);
        for j in 0..n {
            for k in 0..n {
                *succ.at_mut(i, j, k) = sa.at(k, j).clone();
                *prec.at_mut(j, i, k) = pb.at(k, j).clone();
            }
        }
    }
    let split = SplitAlgebra::new(succ, prec)?;
    if split.circ() != a.mult(mult)? {
        return Err(Error::InvalidSplit(
            "induced products do not sum to the original multiplication".into(),
        ));
    }
    Ok(split)
}

/// V-side splitting `u ≻ v = α(Tu)v`, `u ≺ v = β(Tv)u` for a (not
/// necessarily invertible) O-operator.
pub fn induce_splitting_on_v(
    a: &Algebra,
    mult: &str,
    alpha: &[Matrix],
    beta: &[Matrix],
    t_map: &Matrix,
) -> Result<SplitAlgebra> {
    if !check_o_operator(a, mult, alpha, beta, t_map)? {
        return Err(Error::NotAnOperator);
    }
    let vdim = t_map.cols();
    let mut succ = Tensor3::zeros(vdim, vdim, vdim);
    let mut prec = Tensor3::zeros(vdim, vdim, vdim);
    for u in 0..vdim {
        let au = combine_family(alpha, &t_map.col(u));
        let bu = combine_family(beta, &t_map.col(u));
        for v in 0..vdim {
            for k in 0..vdim {
                *succ.at_mut(u, v, k) = au.at(k, v).clone();
                *prec.at_mut(v, u, k) = bu.at(k, v).clone();
            }
        }
    }
    SplitAlgebra::new(succ, prec)
}

/// The bracket-weighted product
/// `x ⋆ y = b2 R(x)∘y − a2 y∘R(x) + a1 x∘R(y) − b1 R(y)∘x`.
fn star_mult(a: &Algebra, mult: &str, r: &Matrix, m: &TypeMatrix) -> Result<Tensor3> {
    let n = a.dim;
    let mut star = Tensor3::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            let x = linalg::basis_vec(n, i);
            let y = linalg::basis_vec(n, j);
            let rx = r.col(i);
            let ry = r.col(j);
            let mut acc = linalg::zero_vec(n);
            linalg::vec_axpy(&mut acc, &m.b2, &a.multiply(mult, &rx, &y)?);
            linalg::vec_axpy(&mut acc, &-&m.a2, &a.multiply(mult, &y, &rx)?);
            linalg::vec_axpy(&mut acc, &m.a1, &a.multiply(mult, &x, &ry)?);
            linalg::vec_axpy(&mut acc, &-&m.b1, &a.multiply(mult, &ry, &x)?);
            for (k, c) in acc.into_iter().enumerate() {
                *star.at_mut(i, j, k) = c;
            }
        }
    }
    Ok(star)
}

/// Type-M Rota-Baxter verdict: `|M| R(x)∘R(y) = R(x ⋆ y)` on all basis
/// pairs; with `strong`, additionally `⋆` must satisfy the relation set.
pub fn check_type_m_rota_baxter(
    a: &Algebra,
    mult: &str,
    rs: &RelationSet,
    r: &Matrix,
    m: &TypeMatrix,
    strong: bool,
) -> Result<bool> {
    if m.is_singular() {
        return Err(Error::SingularTypeMatrix);
    }
    let det = m.det();
    let star = star_mult(a, mult, r, m)?;
    let n = a.dim;
    for i in 0..n {
        for j in 0..n {
            let lhs = linalg::vec_scale(&det, &a.multiply(mult, &r.col(i), &r.col(j))?);
            if lhs != r.matvec(star.fibre(i, j)) {
                return Ok(false);
            }
        }
    }
    if strong {
        let sa = Algebra::new(n).with_mult("star", star);
        if !check_relations(&sa, "star", rs)?.ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The pair `(L≻, R≺) = (L∘, R∘)·M⁻¹`, realized as the multiplications
/// `x≻y = |M|⁻¹(b2 x∘y − a2 y∘x)` and `x≺y = |M|⁻¹(a1 x∘y − b1 y∘x)`.
/// Note the two products sum to `circ` of the returned value, which in
/// general differs from the input multiplication.
pub fn mults_from_m_inverse(a: &Algebra, mult: &str, m: &TypeMatrix) -> Result<SplitAlgebra> {
    if m.is_singular() {
        return Err(Error::SingularTypeMatrix);
    }
    let det_inv = m.det().recip();
    let t = a.mult(mult)?;
    let n = a.dim;
    let mut succ = Tensor3::zeros(n, n, n);
    let mut prec = Tensor3::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let xy = t.at(i, j, k);
                let yx = t.at(j, i, k);
                *succ.at_mut(i, j, k) = (&m.b2 * xy - &m.a2 * yx) * &det_inv;
                *prec.at_mut(i, j, k) = (&m.a1 * xy - &m.b1 * yx) * &det_inv;
            }
        }
    }
    SplitAlgebra::new(succ, prec)
}

/// Type-M invariance of a bilinear form:
/// `|M| B(x∘y, z) = B(x, b1 y∘z − a1 z∘y) + B(y, a2 z∘x − b2 x∘z)`.
pub fn check_type_m_invariance(
    a: &Algebra,
    mult: &str,
    b: &BilinearForm,
    m: &TypeMatrix,
) -> Result<bool> {
    if m.is_singular() {
        return Err(Error::SingularTypeMatrix);
    }
    let det = m.det();
    let t = a.mult(mult)?;
    let n = a.dim;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let x = linalg::basis_vec(n, i);
                let y = linalg::basis_vec(n, j);
                let z = linalg::basis_vec(n, k);
                let lhs = &det * b.apply(t.fibre(i, j), &z);
                let mut w1 = linalg::vec_scale(&m.b1, t.fibre(j, k));
                linalg::vec_axpy(&mut w1, &-&m.a1, t.fibre(k, j));
                let mut w2 = linalg::vec_scale(&m.a2, t.fibre(k, i));
                linalg::vec_axpy(&mut w2, &-&m.b2, t.fibre(i, k));
                if lhs != b.apply(&x, &w1) + b.apply(&y, &w2) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Solve `|M| B(x≻y, z) = B(y, a2 z∘x − b2 x∘z)` and
/// `|M| B(x≺y, z) = B(x, b1 y∘z − a1 z∘y)` for the split products via
/// `B♮⁻¹`; the result is a dual type-M pre-structure.
pub fn splitting_from_form(
    a: &Algebra,
    mult: &str,
    rs: &RelationSet,
    b: &BilinearForm,
    m: &TypeMatrix,
) -> Result<SplitAlgebra> {
    if m.is_singular() {
        return Err(Error::SingularTypeMatrix);
    }
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    if !check_type_m_invariance(a, mult, b, m)? {
        return Err(Error::NotInvariant);
    }
    let det_inv = m.det().recip();
    let nat_inv = b.natural_matrix().invert()?;
    let t = a.mult(mult)?;
    let n = a.dim;
    let mut succ = Tensor3::zeros(n, n, n);
    let mut prec = Tensor3::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            let y = linalg::basis_vec(n, j);
            let x = linalg::basis_vec(n, i);
            // functional f(e_k) = B(y, a2 e_k∘x − b2 x∘e_k)
            let f_succ: Vector = (0..n)
                .map(|k| {
                    let mut w = linalg::vec_scale(&m.a2, t.fibre(k, i));
                    linalg::vec_axpy(&mut w, &-&m.b2, t.fibre(i, k));
                    b.apply(&y, &w)
                })
                .collect();
            // functional g(e_k) = B(x, b1 y∘e_k − a1 e_k∘y)
            let f_prec: Vector = (0..n)
                .map(|k| {
                    let mut w = linalg::vec_scale(&m.b1, t.fibre(j, k));
                    linalg::vec_axpy(&mut w, &-&m.a1, t.fibre(k, j));
                    b.apply(&x, &w)
                })
                .collect();
            let sv = linalg::vec_scale(&det_inv, &nat_inv.matvec(&f_succ));
            let pv = linalg::vec_scale(&det_inv, &nat_inv.matvec(&f_prec));
            for k in 0..n {
                *succ.at_mut(i, j, k) = sv[k].clone();
                *prec.at_mut(i, j, k) = pv[k].clone();
            }
        }
    }
    let split = SplitAlgebra::new(succ, prec)?;
    if split.circ() != t {
        return Err(Error::InvalidSplit(
            "form-induced products do not sum to the multiplication".into(),
        ));
    }
    if !check_type_m_pre(&split, rs, m, true)?.ok {
        return Err(Error::InvalidSplit(
            "form-induced split is not a dual type-M pre-structure".into(),
        ));
    }
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_rep, rep_equivalent};
    use crate::scalar::int;
    use crate::sl2;

    fn sl2_leibniz() -> Algebra {
        sl2::leibniz_algebra()
    }

    /// The e:leib1 split: x≻y = x∘y − y∘x, x≺y = y∘x.
    fn commutator_split(a: &Algebra, mult: &str) -> SplitAlgebra {
        let t = a.mult(mult).unwrap();
        let n = a.dim;
        let succ = Tensor3::from_fn(n, n, n, |i, j, k| t.at(i, j, k) - t.at(j, i, k));
        let prec = Tensor3::from_fn(n, n, n, |i, j, k| t.at(j, i, k).clone());
        SplitAlgebra::new(succ, prec).unwrap()
    }

    #[test]
    fn type_matrix_constants() {
        assert_eq!(
            TypeMatrix::type_a().mul(&TypeMatrix::type_l()),
            TypeMatrix::type_b()
        );
        assert_eq!(TypeMatrix::type_b().det(), int(1));
        assert_eq!(TypeMatrix::type_a().det(), int(-1));
        let m = TypeMatrix::from_int(0, -1, 1, 1);
        assert_eq!(m.mul(&TypeMatrix::type_l()), TypeMatrix::from_int(0, 1, 1, -2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), TypeMatrix::identity());
        assert!(TypeMatrix::from_int(1, 2, 2, 4).inverse().is_err());
    }

    #[test]
    fn commutator_split_is_type_m_and_dual_type_ml() {
        let a = sl2_leibniz();
        let s = commutator_split(&a, "circ");
        assert_eq!(s.circ(), a.mult("circ").unwrap());
        let m = TypeMatrix::from_int(0, -1, 1, 1);
        assert!(check_type_m_pre(&s, &RelationSet::leibniz(), &m, false)
            .unwrap()
            .ok);
        let ml = m.mul(&TypeMatrix::type_l());
        assert_eq!(ml, TypeMatrix::from_int(0, 1, 1, -2));
        assert!(check_type_m_pre(&s, &RelationSet::leibniz(), &ml, true)
            .unwrap()
            .ok);
    }

    #[test]
    fn zero_split_passes_everything() {
        let s = SplitAlgebra::new(Tensor3::zeros(2, 2, 2), Tensor3::zeros(2, 2, 2)).unwrap();
        let m = TypeMatrix::from_int(3, 1, -2, 5);
        assert!(check_type_m_pre(&s, &RelationSet::leibniz(), &m, false)
            .unwrap()
            .ok);
        assert!(check_type_m_pre(&s, &RelationSet::leibniz(), &m, true)
            .unwrap()
            .ok);
    }

    #[test]
    fn o_operator_basics() {
        let a = sl2_leibniz();
        let s = sl2::split_algebra();
        let alpha = s.succ_left_family();
        let beta = s.prec_right_family();
        // T = 0
        assert!(check_o_operator(&a, "circ", &alpha, &beta, &Matrix::zeros(3, 3)).unwrap());
        // T = id with (L≻, R≺) of a split of circ
        let id = Matrix::identity(3);
        assert!(check_o_operator(&a, "circ", &alpha, &beta, &id).unwrap());
        // round-trip through induce_splitting
        let back = induce_splitting(&a, "circ", &alpha, &beta, &id).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn averaging_map_is_not_a_classical_o_operator_for_adjoint() {
        // The averaging identity makes P satisfy the raw operator
        // equation with (ad, 0), but (ad, 0) is not a Lie representation,
        // so the classical (M = I) classification rejects it.
        let a = sl2::bracket_algebra();
        let adj = a.adjoint_rep("bracket").unwrap();
        let zero = vec![Matrix::zeros(3, 3); 3];
        let p = sl2::averaging_p();
        assert!(check_o_operator(&a, "bracket", &adj.left, &zero, &p).unwrap());
        assert!(!classify_o_operator(
            &a,
            "bracket",
            &RelationSet::lie(),
            &adj.left,
            &zero,
            &p,
            &TypeMatrix::identity(),
            false,
        )
        .unwrap());
    }

    #[test]
    fn classical_scalar_o_operators_are_strong() {
        // λ·id is a classical O-operator for the rep (L∘, 0) of a Leibniz
        // algebra; classical operators are automatically strong.
        let a = sl2_leibniz();
        let adj = a.adjoint_rep("circ").unwrap();
        let zero = vec![Matrix::zeros(3, 3); 3];
        for lambda in [-2i64, 1, 3] {
            let t = Matrix::identity(3).scale(&int(lambda));
            assert!(classify_o_operator(
                &a,
                "circ",
                &RelationSet::leibniz(),
                &adj.left,
                &zero,
                &t,
                &TypeMatrix::identity(),
                false,
            )
            .unwrap());
            assert!(
                check_strong(&a, "circ", &RelationSet::leibniz(), &adj.left, &zero, &t).unwrap()
            );
        }
    }

    #[test]
    fn strong_check_requires_an_operator() {
        let a = sl2::bracket_algebra();
        let adj = a.adjoint_rep("bracket").unwrap();
        let zero = vec![Matrix::zeros(3, 3); 3];
        // T = diag(1, 0, 0) breaks the operator identity on (x, h).
        let t = Matrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert!(!check_o_operator(&a, "bracket", &adj.left, &zero, &t).unwrap());
        assert!(matches!(
            check_strong(&a, "bracket", &RelationSet::lie(), &adj.left, &zero, &t),
            Err(Error::NotAnOperator)
        ));
    }

    #[test]
    fn form_operator_from_sl2() {
        // (α, β) of the form construction: α = (b2 L*∘ − a2 R*∘)/|M|,
        // β = (a1 R*∘ − b1 L*∘)/|M| on A*, with T = B♮⁻¹.
        let a = sl2_leibniz();
        let rs = RelationSet::leibniz();
        let m = TypeMatrix::type_b();
        let det_inv = m.det().recip();
        let adj = a.adjoint_rep("circ").unwrap();
        let dual = dual_rep(&adj);
        let alpha: Vec<Matrix> = dual
            .left
            .iter()
            .zip(&dual.right)
            .map(|(l, r)| l.scale(&m.b2).sub(&r.scale(&m.a2)).scale(&det_inv))
            .collect();
        let beta: Vec<Matrix> = dual
            .left
            .iter()
            .zip(&dual.right)
            .map(|(l, r)| r.scale(&m.a1).sub(&l.scale(&m.b1)).scale(&det_inv))
            .collect();
        let t = sl2::form().natural_matrix().invert().unwrap();
        assert!(check_o_operator(&a, "circ", &alpha, &beta, &t).unwrap());
        assert!(classify_o_operator(&a, "circ", &rs, &alpha, &beta, &t, &m, true).unwrap());
        // invertible operators are strong
        assert!(check_strong(&a, "circ", &rs, &alpha, &beta, &t).unwrap());
        // and induce exactly the worked-example split
        let split = induce_splitting(&a, "circ", &alpha, &beta, &t).unwrap();
        assert_eq!(split, sl2::split_algebra());
    }

    #[test]
    fn rota_baxter_basics() {
        let a = sl2_leibniz();
        let rs = RelationSet::leibniz();
        let m = TypeMatrix::type_b();
        assert!(
            check_type_m_rota_baxter(&a, "circ", &rs, &Matrix::zeros(3, 3), &m, true).unwrap()
        );
        assert!(matches!(
            check_type_m_rota_baxter(
                &a,
                "circ",
                &rs,
                &Matrix::zeros(3, 3),
                &TypeMatrix::from_int(1, 1, 1, 1),
                false
            ),
            Err(Error::SingularTypeMatrix)
        ));
        // classical case M = I: the identity map is not Rota-Baxter here
        // (R=id requires x∘y = 2x∘y), but R=0 and the equivalence with the
        // O-operator route are exercised below and in the acceptance suite.
        let s = mults_from_m_inverse(&a, "circ", &TypeMatrix::identity()).unwrap();
        assert_eq!(s.succ(), a.mult("circ").unwrap());
        assert_eq!(s.prec(), a.mult("circ").unwrap());
    }

    #[test]
    fn mults_from_m_inverse_matches_matrix_families() {
        let a = sl2_leibniz();
        let m = TypeMatrix::from_int(2, 1, -1, 3);
        let s = mults_from_m_inverse(&a, "circ", &m).unwrap();
        // (L≻, R≺) must equal (L∘, R∘)·M⁻¹
        let adj = a.adjoint_rep("circ").unwrap();
        let minv = m.inverse().unwrap();
        let expect = crate::algebra::combine_reps(&adj.left, &adj.right, &minv).unwrap();
        assert_eq!(s.succ_left_family(), expect.left);
        assert_eq!(s.prec_right_family(), expect.right);
        // M = ((1,0),(−1,1)): x≻y = x∘y + y∘x
        let s = mults_from_m_inverse(&a, "circ", &TypeMatrix::type_b()).unwrap();
        let t = a.mult("circ").unwrap();
        let expect = Tensor3::from_fn(3, 3, 3, |i, j, k| t.at(i, j, k) + t.at(j, i, k));
        assert_eq!(*s.succ(), expect);
        assert_eq!(s.prec(), t);
    }

    #[test]
    fn sl2_form_invariance_and_splitting() {
        let a = sl2_leibniz();
        let b = sl2::form();
        assert!(b.is_symmetric() && b.is_nondegenerate());
        let m = TypeMatrix::type_b();
        assert!(check_type_m_invariance(&a, "circ", &b, &m).unwrap());
        let rs = RelationSet::leibniz();
        let s = splitting_from_form(&a, "circ", &rs, &b, &m).unwrap();
        assert_eq!(s, sl2::split_algebra());
        // φ with matrix B intertwines the adjoint pair with the dualized
        // combined pair
        let adj = a.adjoint_rep("circ").unwrap();
        let alpha = dual_family(&s.succ_left_family());
        let beta = dual_family(&s.prec_right_family());
        let combined = combine_reps(&alpha, &beta, &m).unwrap();
        assert!(rep_equivalent(&adj, &combined, &b.matrix));
    }

    #[test]
    fn zero_mult_splitting_from_form_is_zero() {
        let a = Algebra::new(3).with_mult("circ", Tensor3::zeros(3, 3, 3));
        let b = sl2::form();
        let s = splitting_from_form(
            &a,
            "circ",
            &RelationSet::leibniz(),
            &b,
            &TypeMatrix::type_b(),
        )
        .unwrap();
        assert!(s.succ().is_zero() && s.prec().is_zero());
    }

    #[test]
    fn antisymmetric_invariant_form_has_type_0_1_1_m2_invariance() {
        // On a Leibniz algebra with zero multiplication any antisymmetric
        // nondegenerate form is invariant; a nontrivial case is covered by
        // the randomized suites.
        let a = Algebra::new(2).with_mult("circ", Tensor3::zeros(2, 2, 2));
        let omega = BilinearForm::new(Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]));
        assert!(omega.is_antisymmetric());
        let m = TypeMatrix::from_int(0, 1, 1, -2);
        assert!(check_type_m_invariance(&a, "circ", &omega, &m).unwrap());
    }

    #[test]
    fn degenerate_form_is_refused() {
        let a = sl2_leibniz();
        let b = BilinearForm::new(Matrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
        assert!(matches!(
            splitting_from_form(&a, "circ", &RelationSet::leibniz(), &b, &TypeMatrix::type_b()),
            Err(Error::DegenerateForm)
        ));
    }
}
