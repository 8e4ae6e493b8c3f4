use std::fmt;

use num_traits::Zero;

use super::{kernel, pivot_columns, rref, Matrix, Scalar, Vector};
use crate::error::Error;

/// A subspace of a fixed coordinate space `Q^ambient`.
///
/// The basis is stored in canonical reduced row-echelon form, one basis
/// vector per row, so two subspaces are equal exactly when their stored
/// bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let rows = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
                v.to_vec()
            })
            .collect();
        Self::from_matrix(&Matrix::from_rows_with_cols(rows, ambient))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (red, rank) = rref(m);
        let pivots = pivot_columns(&red, rank);
        let rows = (0..rank).map(|r| red.row(r).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows_with_cols(rows, m.cols()),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots of the canonical basis; the unit
    /// vectors at these positions span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// `v` minus its component along the canonical basis, i.e. the normal
    /// form of `v` modulo the subspace (zero at every pivot coordinate).
    pub fn reduce(&self, v: &Vector) -> Vector {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.clone();
        for (row, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let c = -r[p].clone();
            r.add_scaled(&c, &self.basis.row_vector(row));
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector of the ambient space with the given coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        let mut v = Vector::zeros(self.ambient);
        for (r, c) in coords.iter().enumerate() {
            v.add_scaled(c, &self.basis.row_vector(r));
        }
        v
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, Error> {
        self.check_ambient(other)?;
        Ok(self.vectors().iter().all(|v| other.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        Ok(Subspace::from_matrix(&Matrix::vstack(
            self.ambient,
            &[self.basis.clone(), other.basis.clone()],
        )))
    }

    /// Intersection, computed from the kernel of `[U^T | -V^T]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let (p, q) = (self.dim(), other.dim());
        let mut cols = self.vectors();
        cols.extend(other.vectors().iter().map(|v| -v));
        let system = Matrix::from_columns(self.ambient, &cols);
        let solutions = kernel(&system);
        let vectors: Vec<Vector> = solutions
            .vectors()
            .iter()
            .map(|s| {
                let coords: &[Scalar] = s;
                self.combine(&coords[..p])
            })
            .collect();
        debug_assert!(solutions.ambient_dim() == p + q);
        Ok(Subspace::span(self.ambient, &vectors))
    }

    /// Matrix whose kernel is exactly this subspace (rows span the annihilator).
    pub fn annihilator(&self) -> Matrix {
        let ann = kernel(&self.basis);
        ann.basis.clone()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, v) in self.vectors().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, rat};
    use proptest::prelude::*;

    fn span(n: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::span(n, &rows.iter().map(|r| Vector::from_ints(r)).collect::<Vec<_>>())
    }

    #[test]
    fn lattice_examples() {
        let u = span(2, &[&[1, 0]]);
        let v = span(2, &[&[0, 1]]);
        assert_eq!(u.sum(&v).unwrap(), Subspace::full(2));
        assert_eq!(u.intersection(&v).unwrap(), Subspace::zero(2));

        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersection(&u).unwrap(), u);

        let a = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersection(&b).unwrap(), span(3, &[&[0, 1, 0]]));
        assert!(a.intersection(&b).unwrap().is_subspace_of(&a).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let err = Subspace::full(2).sum(&Subspace::full(3)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        assert!(Subspace::full(2).intersection(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn canonical_basis_makes_equality_structural() {
        let a = span(3, &[&[2, 4, 0], &[1, 1, 1]]);
        let b = span(3, &[&[3, 5, 1], &[-1, -3, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
        assert_eq!(a.complement_indices(), vec![2]);
    }

    #[test]
    fn coordinates_round_trip() {
        let s = span(3, &[&[1, 0, 2], &[0, 1, -1]]);
        let v: Vector = vec![rat(1, 2), int(3), int(-2)].into();
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.combine(&c), v);
        assert!(s.coordinates(&Vector::from_ints(&[0, 0, 1])).is_none());
    }

    fn small_rational() -> impl Strategy<Value = Scalar> {
        (-3i64..=3, 1i64..=2).prop_map(|(n, d)| rat(n, d))
    }

    fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
        prop::collection::vec(prop::collection::vec(small_rational(), n), 0..=n).prop_map(
            move |rows| Subspace::span(n, &rows.into_iter().map(Vector::from).collect::<Vec<_>>()),
        )
    }

    fn matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec(prop::collection::vec(small_rational(), c), r)
            .prop_map(move |rows| Matrix::from_rows_with_cols(rows, c))
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 64, rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

        #[test]
        fn dimension_formula(u in subspace(4), v in subspace(4)) {
            let s = u.sum(&v).unwrap();
            let i = u.intersection(&v).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            prop_assert!(i.is_subspace_of(&u).unwrap() && i.is_subspace_of(&v).unwrap());
            prop_assert!(u.is_subspace_of(&s).unwrap() && v.is_subspace_of(&s).unwrap());
        }

        #[test]
        fn rref_is_idempotent_and_rank_nullity(m in matrix(3, 4)) {
            let (r, k) = rref(&m);
            prop_assert_eq!(rref(&r), (r.clone(), k));
            prop_assert_eq!(k + kernel(&m).dim(), m.cols());
            for v in kernel(&m).vectors() {
                prop_assert!(m.mul_vec(&v).is_zero());
            }
        }

        #[test]
        fn fitting_null_is_invariant(m in matrix(4, 4)) {
            let f = crate::linalg::fitting_null(&m);
            for v in f.vectors() {
                prop_assert!(f.contains(&m.mul_vec(&v)));
            }
        }

        #[test]
        fn annihilator_cuts_out_subspace(u in subspace(4)) {
            prop_assert_eq!(kernel(&u.annihilator()), u);
        }
    }
}
