//! Deterministic, seeded generators of randomized instances: basis
//! changes of the golden example, brute-force and nullspace searches for
//! forms, operators and comultiplications.  Used by the property suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::bialgebra::Comult;
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::scalar::{int, Scalar};
use crate::sl2;
use crate::splitting::{BilinearForm, SplitAlgebra, TypeMatrix};
use crate::Result;

/// A fresh deterministic generator.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random integer-entry matrix with entries in `lo..=hi`.
pub fn rand_matrix(r: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Matrix {
    Matrix::from_fn(n, n, |_, _| int(r.gen_range(lo..=hi)))
}

/// A random invertible integer-entry matrix (entries in `-2..=2`).
pub fn rand_invertible(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = rand_matrix(r, n, -2, 2);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A random multiplication tensor with entries in `lo..=hi`, keeping each
/// entry zero with the given percent chance.
pub fn rand_mult(r: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64, zero_percent: u32) -> Tensor3 {
    Tensor3::from_fn(n, n, n, |_, _, _| {
        if r.gen_range(0..100) < zero_percent {
            crate::scalar::zero()
        } else {
            int(r.gen_range(lo..=hi))
        }
    })
}

/// Transport a multiplication along an invertible basis change:
/// `x ∘' y = S⁻¹((Sx) ∘ (Sy))`.
pub fn conjugate_tensor(t: &Tensor3, s: &Matrix) -> Result<Tensor3> {
    let n = s.rows();
    let s_inv = s.invert()?;
    let mut out = Tensor3::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            let prod = s_inv.matvec(&t.contract(&s.col(i), &s.col(j))?);
            for k in 0..n {
                *out.at_mut(i, j, k) = prod[k].clone();
            }
        }
    }
    Ok(out)
}

/// Transport an operator along the same basis change: `P' = S⁻¹ P S`.
pub fn conjugate_operator(p: &Matrix, s: &Matrix) -> Result<Matrix> {
    Ok(s.invert()?.mul(p).mul(s))
}

/// Transport a bilinear form: `B'(x, y) = B(Sx, Sy)`, i.e. `Sᵀ B S`.
pub fn conjugate_form(b: &BilinearForm, s: &Matrix) -> BilinearForm {
    BilinearForm::new(s.transpose().mul(b.matrix()).mul(s))
}

/// Transport both multiplications of a split.
pub fn conjugate_split(sp: &SplitAlgebra, s: &Matrix) -> Result<SplitAlgebra> {
    SplitAlgebra::new(
        conjugate_tensor(sp.succ(), s)?,
        conjugate_tensor(sp.prec(), s)?,
    )
}

/// A random 3-dim Leibniz algebra (mult `"circ"`): a basis change of the
/// golden example, or occasionally the zero algebra.
pub fn random_leibniz_3d(r: &mut ChaCha8Rng) -> Algebra {
    if r.gen_range(0..5) == 0 {
        return Algebra::new(3).with_mult("circ", Tensor3::zeros(3, 3, 3));
    }
    let s = rand_invertible(r, 3);
    let t = conjugate_tensor(sl2::leibniz_algebra().mult("circ").unwrap(), &s)
        .expect("invertible basis change");
    Algebra::new(3).with_mult("circ", t)
}

/// A random 3-dim Lie algebra (mult `"bracket"`): a basis change of
/// `sl(2)`, or occasionally abelian.
pub fn random_lie_3d(r: &mut ChaCha8Rng) -> Algebra {
    if r.gen_range(0..5) == 0 {
        return Algebra::new(3).with_mult("bracket", Tensor3::zeros(3, 3, 3));
    }
    let s = rand_invertible(r, 3);
    let t = conjugate_tensor(sl2::bracket_algebra().mult("bracket").unwrap(), &s)
        .expect("invertible basis change");
    Algebra::new(3).with_mult("bracket", t)
}

/// A random valid SDPL split in dimension 3: a basis change of the golden
/// split, or occasionally zero.
pub fn random_sdpl_split_3d(r: &mut ChaCha8Rng) -> SplitAlgebra {
    if r.gen_range(0..5) == 0 {
        return SplitAlgebra::new(Tensor3::zeros(3, 3, 3), Tensor3::zeros(3, 3, 3)).unwrap();
    }
    let s = rand_invertible(r, 3);
    conjugate_split(&sl2::split_algebra(), &s).expect("invertible basis change")
}

/// Add a random small value to one random entry of one of the two
/// multiplications.
pub fn perturb_split(r: &mut ChaCha8Rng, sp: &SplitAlgebra) -> SplitAlgebra {
    let n = sp.dim();
    let mut succ = sp.succ().clone();
    let mut prec = sp.prec().clone();
    let (i, j, k) = (
        r.gen_range(0..n),
        r.gen_range(0..n),
        r.gen_range(0..n),
    );
    let bump = int(r.gen_range(1..=3));
    if r.gen_bool(0.5) {
        *succ.at_mut(i, j, k) += bump;
    } else {
        *prec.at_mut(i, j, k) += bump;
    }
    SplitAlgebra::new(succ, prec).unwrap()
}

/// A random type matrix with entries in `-3..=3`.
pub fn random_type_matrix(r: &mut ChaCha8Rng) -> TypeMatrix {
    TypeMatrix::from_int(
        r.gen_range(-3..=3),
        r.gen_range(-3..=3),
        r.gen_range(-3..=3),
        r.gen_range(-3..=3),
    )
}

/// A random nonsingular type matrix.
pub fn random_invertible_type_matrix(r: &mut ChaCha8Rng) -> TypeMatrix {
    loop {
        let m = random_type_matrix(r);
        if !m.is_singular() {
            return m;
        }
    }
}

fn form_space(rows: Vec<Vector>, n: usize) -> Vec<Matrix> {
    let system = Matrix::from_fn(rows.len(), n * n, |r, c| rows[r][c].clone());
    system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |u, w| v[u * n + w].clone()))
        .collect()
}

/// Basis of the space of bilinear forms satisfying the left-invariance
/// identity `B(x∘y, z) + B(y, x∘z) = 0` (unknowns `B[u][v]`).
pub fn left_invariant_form_space(a: &Algebra, mult: &str) -> Result<Vec<Matrix>> {
    let t = a.mult(mult)?;
    let n = a.dim;
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![crate::scalar::zero(); n * n];
                for u in 0..n {
                    row[u * n + k] += t.at(i, j, u);
                    row[j * n + u] += t.at(i, k, u);
                }
                rows.push(row);
            }
        }
    }
    Ok(form_space(rows, n))
}

/// Basis of the space of forms satisfying the type-M invariance
/// `|M| B(x∘y,z) = B(x, b₁ y∘z − a₁ z∘y) + B(y, a₂ z∘x − b₂ x∘z)`.
pub fn type_m_invariant_form_space(
    a: &Algebra,
    mult: &str,
    m: &TypeMatrix,
) -> Result<Vec<Matrix>> {
    let t = a.mult(mult)?;
    let n = a.dim;
    let det = m.det();
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![crate::scalar::zero(); n * n];
                for u in 0..n {
                    row[u * n + k] += &det * t.at(i, j, u);
                    row[i * n + u] -= &m.b1 * t.at(j, k, u);
                    row[i * n + u] += &m.a1 * t.at(k, j, u);
                    row[j * n + u] -= &m.a2 * t.at(k, i, u);
                    row[j * n + u] += &m.b2 * t.at(i, k, u);
                }
                rows.push(row);
            }
        }
    }
    Ok(form_space(rows, n))
}

/// A random nondegenerate form from the span of the given basis, with an
/// optional symmetry filter; `None` if no combination passes after a
/// bounded number of tries.
pub fn random_nondegenerate_combo(
    r: &mut ChaCha8Rng,
    basis: &[Matrix],
    symmetric: Option<bool>,
) -> Option<BilinearForm> {
    if basis.is_empty() {
        return None;
    }
    let n = basis[0].rows();
    for _ in 0..60 {
        let mut m = Matrix::zeros(n, n);
        for b in basis {
            let c: Scalar = int(r.gen_range(-3..=3));
            if !num::Zero::is_zero(&c) {
                m = m.add(&b.scale(&c));
            }
        }
        let form = BilinearForm::new(m);
        if !form.is_nondegenerate() {
            continue;
        }
        match symmetric {
            Some(true) if !form.is_symmetric() => continue,
            Some(false) if !form.is_antisymmetric() => continue,
            _ => {}
        }
        return Some(form);
    }
    None
}

/// An invertible type-M O-operator manufactured from a valid split by
/// conjugation: `T` together with `α(x) = T⁻¹ L≻(x) T`,
/// `β(y) = T⁻¹ R≺(y) T`, which is an O-operator of the sub-adjacent
/// multiplication by construction.
pub struct ConjugatedOperator {
    pub algebra: Algebra,
    pub alpha: Vec<Matrix>,
    pub beta: Vec<Matrix>,
    pub t: Matrix,
}

pub fn conjugated_o_operator(
    r: &mut ChaCha8Rng,
    sp: &SplitAlgebra,
) -> Result<ConjugatedOperator> {
    let n = sp.dim();
    let t_op = rand_invertible(r, n);
    let t_inv = t_op.invert()?;
    let base = sp.base();
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    for i in 0..n {
        alpha.push(t_inv.mul(&base.left_mult_matrix("succ", i)?).mul(&t_op));
        beta.push(t_inv.mul(&base.right_mult_matrix("prec", i)?).mul(&t_op));
    }
    Ok(ConjugatedOperator {
        algebra: Algebra::new(n).with_mult("circ", sp.circ().clone()),
        alpha,
        beta,
        t: t_op,
    })
}

/// Basis of the space of antisymmetric 1-cocycles `δ` of a Lie algebra
/// (candidate Lie-bialgebra comultiplications; co-Jacobi must be checked
/// separately by the caller).
pub fn cocycle_space(lie: &Algebra) -> Result<Vec<Comult>> {
    let t = lie.mult("bracket")?;
    let n = lie.dim;
    let idx = |k: usize, i: usize, j: usize| (k * n + i) * n + j;
    let mut rows: Vec<Vector> = Vec::new();
    // antisymmetry d[k][i][j] + d[k][j][i] = 0
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![crate::scalar::zero(); n * n * n];
                row[idx(k, i, j)] += int(1);
                row[idx(k, j, i)] += int(1);
                rows.push(row);
            }
        }
    }
    // cocycle: δ([e_p, e_q]) = (ad_p⊗id + id⊗ad_p)δ(e_q) − (ad_q⊗id + id⊗ad_q)δ(e_p)
    for p in 0..n {
        let ad_p = lie.left_mult_matrix("bracket", p)?;
        for q in 0..n {
            let ad_q = lie.left_mult_matrix("bracket", q)?;
            for a in 0..n {
                for b in 0..n {
                    let mut row = vec![crate::scalar::zero(); n * n * n];
                    for k in 0..n {
                        let c = t.at(p, q, k);
                        if !num::Zero::is_zero(c) {
                            row[idx(k, a, b)] += c;
                        }
                    }
                    for u in 0..n {
                        row[idx(q, u, b)] -= ad_p.at(a, u);
                        row[idx(q, a, u)] -= ad_p.at(b, u);
                        row[idx(p, u, b)] += ad_q.at(a, u);
                        row[idx(p, a, u)] += ad_q.at(b, u);
                    }
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_fn(rows.len(), n * n * n, |r, c| rows[r][c].clone());
    Ok(system
        .nullspace()
        .into_iter()
        .map(|v| {
            Comult::new(Tensor3::from_fn(n, n, n, |k, i, j| v[idx(k, i, j)].clone()))
                .expect("cubic tensor")
        })
        .collect())
}
