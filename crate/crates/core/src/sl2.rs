//! The 3-dimensional simple Lie algebra worked example, with the Leibniz
//! algebra induced by its averaging operator, the associated quadratic
//! form, and the resulting split products.
//!
//! Basis order throughout: `(x, h, y)` with brackets `[h,x]=2x`,
//! `[h,y]=-2y`, `[x,y]=h`.

use crate::algebra::Algebra;
use crate::linalg::{Matrix, Tensor3};
use crate::scalar::int;
use crate::splitting::{BilinearForm, SplitAlgebra};

fn tensor_from_table(table: [[[i64; 3]; 3]; 3]) -> Tensor3 {
    Tensor3::from_fn(3, 3, 3, |i, j, k| int(table[i][j][k]))
}

/// The Lie bracket as a structure-constant algebra (mult `"bracket"`).
pub fn bracket_algebra() -> Algebra {
    let mut t = Tensor3::zeros(3, 3, 3);
    *t.at_mut(1, 0, 0) = int(2); // [h,x] = 2x
    *t.at_mut(0, 1, 0) = int(-2);
    *t.at_mut(1, 2, 2) = int(-2); // [h,y] = -2y
    *t.at_mut(2, 1, 2) = int(2);
    *t.at_mut(0, 2, 1) = int(1); // [x,y] = h
    *t.at_mut(2, 0, 1) = int(-1);
    Algebra::new(3)
        .with_labels(&["x", "h", "y"])
        .with_mult("bracket", t)
}

/// The averaging operator P on the bracket algebra, columns = images of
/// (x, h, y).
pub fn averaging_p() -> Matrix {
    Matrix::from_int_rows(&[&[2, 2, 1], &[2, 2, 1], &[4, 4, 2]])
}

/// The induced Leibniz multiplication `x ∘ y = [P(x), y]` (mult `"circ"`).
pub fn leibniz_algebra() -> Algebra {
    let table = [
        // x ∘ _
        [[4, -4, 0], [-4, 0, 8], [0, 2, -4]],
        // h ∘ _
        [[4, -4, 0], [-4, 0, 8], [0, 2, -4]],
        // y ∘ _
        [[2, -2, 0], [-2, 0, 4], [0, 1, -2]],
    ];
    Algebra::new(3)
        .with_labels(&["x", "h", "y"])
        .with_mult("circ", tensor_from_table(table))
}

/// The symmetric invariant form: B(x,y) = 1, B(h,h) = 2, all else zero.
pub fn form() -> BilinearForm {
    BilinearForm::new(Matrix::from_int_rows(&[&[0, 0, 1], &[0, 2, 0], &[1, 0, 0]]))
}

/// The split products induced on the Leibniz algebra by the form.
pub fn split_algebra() -> SplitAlgebra {
    let succ = [
        [[4, -4, 0], [0, 4, 16], [-2, 0, -8]],
        [[0, -8, -8], [-4, 0, 8], [2, 4, 0]],
        [[4, 0, 4], [-4, -2, 0], [0, 1, -2]],
    ];
    let prec = [
        [[0, 0, 0], [-4, -4, -8], [2, 2, 4]],
        [[4, 4, 8], [0, 0, 0], [-2, -2, -4]],
        [[-2, -2, -4], [2, 2, 4], [0, 0, 0]],
    ];
    SplitAlgebra::new(tensor_from_table(succ), tensor_from_table(prec)).unwrap()
}
