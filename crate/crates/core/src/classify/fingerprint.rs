//! Isomorphism invariants used to route classification.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{centers, leib_ideal, product_subspaces, require_leibniz, Algebra};
use crate::analysis::{series_unchecked, SeriesKind};
use crate::error::Result;
use crate::linalg::{int, kernel, Matrix, Scalar, Subspace};

use super::Parameter;

/// Eigenvalue data of `L_w` on `A²` for `w` outside `A²`, up to scaling `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectral {
    pub nilpotent: bool,
    pub zero_eigenvalue: bool,
    /// Over the algebraic closure.
    pub diagonalizable: bool,
    /// `λ1/λ2 + λ2/λ1 = (tr² - 2 det) / det` when both eigenvalues are nonzero.
    pub ratio_t: Option<Parameter>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub is_lie: bool,
    pub dim_derived: usize,
    pub dim_leib: usize,
    pub dim_left_center: usize,
    pub dim_right_center: usize,
    pub nilpotent: bool,
    pub class: Option<usize>,
    pub solvable: bool,
    /// `n - dim{u : [u, v] + [v, u] = 0 for all v}`
    pub square_form_rank: usize,
    /// Present when `A²` has codimension 1 and dimension at most 2.
    pub spectral: Option<Spectral>,
}

/// Matrix of `v ↦ [w, v]` on the ideal `n`, in `n`'s canonical coordinates.
pub(crate) fn restricted_left(alg: &Algebra, w: &crate::linalg::Vector, n: &Subspace) -> Matrix {
    let cols: Vec<_> = n
        .vectors()
        .iter()
        .map(|v| n.coordinates(&alg.left(w).mul_vec(v)).expect("n is a left ideal"))
        .collect();
    Matrix::from_columns(n.dim(), &cols)
}

fn spectral(m: &Matrix) -> Spectral {
    match m.rows() {
        1 => {
            let zero = m[(0, 0)].is_zero();
            Spectral {
                nilpotent: zero,
                zero_eigenvalue: zero,
                diagonalizable: true,
                ratio_t: None,
            }
        }
        _ => {
            let (tr, det) = (m.trace(), m.determinant());
            let disc = &tr * &tr - &det * int(4);
            let scalar = m[(0, 1)].is_zero() && m[(1, 0)].is_zero() && m[(0, 0)] == m[(1, 1)];
            Spectral {
                nilpotent: tr.is_zero() && det.is_zero(),
                zero_eigenvalue: det.is_zero(),
                diagonalizable: !disc.is_zero() || scalar,
                ratio_t: (!det.is_zero())
                    .then(|| Parameter::Rational((&tr * &tr - &det * int(2)) / &det)),
            }
        }
    }
}

pub fn fingerprint(alg: &Algebra) -> Result<Fingerprint> {
    require_leibniz(alg)?;
    let n = alg.dim();
    let full = Subspace::full(n);
    let derived = product_subspaces(alg, &full, &full)?;
    let leib = leib_ideal(alg);
    let c = centers(alg);
    let lcs = series_unchecked(alg, SeriesKind::LowerCentral);
    let class = lcs.reaches_zero().then(|| lcs.terms.len() - 1);
    let blocks: Vec<Matrix> = alg
        .basis_vectors()
        .iter()
        .map(|e| &alg.left(e) + &alg.right(e))
        .collect();
    let sym_radical = if n == 0 {
        Subspace::zero(0)
    } else {
        kernel(&Matrix::vstack(n, &blocks))
    };
    let spectral = (derived.dim() + 1 == n && (1..=2).contains(&derived.dim())).then(|| {
        let w = alg.basis_vector(derived.complement_indices()[0]);
        spectral(&restricted_left(alg, &w, &derived))
    });
    Ok(Fingerprint {
        dim: n,
        is_lie: leib.is_zero(),
        dim_derived: derived.dim(),
        dim_leib: leib.dim(),
        dim_left_center: c.left.dim(),
        dim_right_center: c.right.dim(),
        nilpotent: class.is_some(),
        class,
        solvable: series_unchecked(alg, SeriesKind::Derived).reaches_zero(),
        square_form_rank: n - sym_radical.dim(),
        spectral,
    })
}

/// `x^2 - tr x + det` has rational roots; returned in decreasing order.
pub(crate) fn rational_eigenvalues(m: &Matrix) -> Option<(Scalar, Scalar)> {
    let (tr, det) = (m.trace(), m.determinant());
    let r = crate::linalg::rational_sqrt(&(&tr * &tr - &det * int(4)))?;
    Some(((&tr + &r) / int(2), (&tr - &r) / int(2)))
}
