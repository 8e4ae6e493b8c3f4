//! The Killing form `κ(a, b) = tr(L_a L_b)` and the trace criterion for solvability.

use crate::algebra::{leib_ideal, product_subspaces, require_leibniz, Algebra};
use crate::error::Result;
use crate::linalg::{kernel, Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingData {
    /// `gram[i][j] = tr(L_{e_i} L_{e_j})`
    pub gram: Matrix,
    /// `A^⊥`
    pub radical: Subspace,
    /// `A^⊥ = Leib(A)`. This is weaker than the gram matrix being invertible.
    pub nondegenerate: bool,
}

/// Gram matrix of the Killing form, with no identity check.
pub(crate) fn killing_gram(alg: &Algebra) -> Matrix {
    let ls = alg.left_basis_operators();
    let n = alg.dim();
    let mut rows = vec![Vec::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            rows[i].push(ls[i].trace_of_product(&ls[j]));
        }
    }
    Matrix::from_rows_with_cols(rows, n)
}

pub fn killing(alg: &Algebra) -> Result<KillingData> {
    require_leibniz(alg)?;
    let gram = killing_gram(alg);
    let radical = kernel(&gram);
    let nondegenerate = radical == leib_ideal(alg);
    Ok(KillingData {
        gram,
        radical,
        nondegenerate,
    })
}

/// `tr(L_u L_{e_j}) = 0` for every `u` in a basis of `[A, A]` and every basis vector `e_j`.
pub fn cartan_solvable(alg: &Algebra) -> Result<bool> {
    require_leibniz(alg)?;
    let full = Subspace::full(alg.dim());
    let derived = product_subspaces(alg, &full, &full)?;
    let ls = alg.left_basis_operators();
    Ok(derived.vectors().iter().all(|u| {
        let lu = alg.left(u);
        ls.iter().all(|l| lu.trace_of_product(l) == num_traits::zero())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, Vector};

    fn example_5_8() -> Algebra {
        Algebra::from_table(
            &["x", "y"],
            &[("y", "x", &[("x", int(1))]), ("y", "y", &[("x", int(1))])],
        )
        .unwrap()
    }

    #[test]
    fn example_5_8_is_nondegenerate() {
        let k = killing(&example_5_8()).unwrap();
        assert_eq!(k.gram, Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        assert_eq!(k.radical, Subspace::span(2, &[Vector::from_ints(&[1, 0])]));
        assert!(k.nondegenerate);
        assert!(cartan_solvable(&example_5_8()).unwrap());
    }

    #[test]
    fn nilpotent_gram_vanishes() {
        let n3_1 = Algebra::from_table(
            &["x", "y", "z"],
            &[("x", "x", &[("y", int(1))]), ("x", "y", &[("z", int(1))])],
        )
        .unwrap();
        assert!(killing(&n3_1).unwrap().gram.is_zero());
    }

    #[test]
    fn sl2_fails_the_trace_criterion() {
        let sl2 = Algebra::from_table(
            &["h", "e", "f"],
            &[
                ("h", "e", &[("e", int(2))]),
                ("e", "h", &[("e", int(-2))]),
                ("h", "f", &[("f", int(-2))]),
                ("f", "h", &[("f", int(2))]),
                ("e", "f", &[("h", int(1))]),
                ("f", "e", &[("h", int(-1))]),
            ],
        )
        .unwrap();
        assert!(!cartan_solvable(&sl2).unwrap());
        let k = killing(&sl2).unwrap();
        // the usual 8, 4, 4 entries of the sl2 Killing form
        assert_eq!(k.gram, Matrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
        assert!(k.radical.is_zero());
        assert!(k.nondegenerate);
    }

    #[test]
    fn abelian_is_trivially_solvable() {
        let ab = Algebra::abelian(&["p", "q"]).unwrap();
        assert!(cartan_solvable(&ab).unwrap());
        assert!(killing(&ab).unwrap().radical.is_full());
    }
}
