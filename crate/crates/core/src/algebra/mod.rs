//! Finite-dimensional algebras given by structure constants.
//!
//! An [`Algebra`] stores the products of basis vectors, `[e_i, e_j] = Σ_k c_ij^k e_k`.
//! Nothing about the Leibniz identity is assumed at construction; use
//! [`check_left_leibniz`] to certify an algebra before running the analyses
//! that need it.

mod expr;
mod identity;
mod structure;

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Vector};

pub use expr::{eval_combination, eval_expr, left_norm, parse_expr, BracketExpr, LinearCombination};
pub use identity::{
    check_left_leibniz, check_representation, check_right_leibniz, derivation_check,
    left_normed_product, require_leibniz, DerivationViolation, RepresentationPair,
    RepresentationViolation, Violation,
};
pub use structure::{
    centers, change_basis, closures, leib_ideal, normalizers, product_subspaces, quotient,
    restrict, same_constants, subspace_status, Centers, Closures, Normalizers, Quotient, SubspaceStatus,
};

/// A bilinear product on `Q^n` with named basis vectors.
#[derive(Clone, Debug)]
pub struct Algebra {
    names: Vec<String>,
    /// `table[i * n + j] = [e_i, e_j]`
    table: Vec<Vector>,
    /// `table` over a common denominator, for `mul`.
    integral: IntegerTable,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.table == other.table
    }
}

impl Eq for Algebra {}

/// `table[idx][k] = nums[idx * n + k] / den`
#[derive(Clone, Debug)]
struct IntegerTable {
    den: BigInt,
    nums: Vec<BigInt>,
}

impl IntegerTable {
    fn of(table: &[Vector], n: usize) -> Self {
        let den = table
            .iter()
            .flat_map(|v| v.iter())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut nums = Vec::with_capacity(table.len() * n);
        for v in table {
            nums.extend(v.iter().map(|c| c.numer() * (&den / c.denom())));
        }
        IntegerTable { den, nums }
    }
}

/// Common denominator and scaled numerators of `v`.
fn integral(v: &Vector) -> (BigInt, Vec<BigInt>) {
    if v.iter().all(|c| c.denom().is_one()) {
        return (BigInt::one(), v.iter().map(|c| c.numer().clone()).collect());
    }
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (den, nums)
}

/// Product entry used by [`Algebra::from_table`]: `(left, right, [(basis name, coefficient)])`.
pub type ProductSpec<'a> = (&'a str, &'a str, &'a [(&'a str, Scalar)]);

impl Algebra {
    /// The abelian algebra on the given basis names.
    pub fn abelian<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || a.chars().any(|c| c.is_whitespace() || ",[]".contains(c)) {
                return Err(Error::InvalidName(a.clone()));
            }
            if names[..i].contains(a) {
                return Err(Error::DuplicateName(a.clone()));
            }
        }
        let n = names.len();
        Ok(Algebra {
            names,
            table: vec![Vector::zeros(n); n * n],
            integral: IntegerTable {
                den: BigInt::one(),
                nums: vec![BigInt::zero(); n * n * n],
            },
        })
    }

    /// Builds an algebra from its nonzero products; omitted pairs are zero.
    pub fn from_table(names: &[&str], products: &[ProductSpec<'_>]) -> Result<Self> {
        let mut alg = Self::abelian(names)?;
        for (l, r, terms) in products {
            let i = alg.index_of(l)?;
            let j = alg.index_of(r)?;
            let mut v = Vector::zeros(alg.dim());
            for (name, c) in terms.iter() {
                let k = alg.index_of(name)?;
                v[k] += c;
            }
            alg.set_product(i, j, v);
        }
        Ok(alg)
    }

    /// Builds an algebra from a dense constant tensor `c[i][j][k]`.
    pub fn from_constants<S: AsRef<str>>(names: &[S], constants: &[Vec<Vector>]) -> Result<Self> {
        let mut alg = Self::abelian(names)?;
        let n = alg.dim();
        if constants.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: constants.len(),
            });
        }
        for (i, row) in constants.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: v.len(),
                    });
                }
                alg.set_product(i, j, v.clone());
            }
        }
        Ok(alg)
    }

    pub fn set_product(&mut self, i: usize, j: usize, value: Vector) {
        let n = self.dim();
        assert_eq!(value.len(), n);
        let idx = i * n + j;
        if value.iter().all(|c| self.integral.den.is_multiple_of(c.denom())) {
            for (k, c) in value.iter().enumerate() {
                self.integral.nums[idx * n + k] = c.numer() * (&self.integral.den / c.denom());
            }
            self.table[idx] = value;
        } else {
            self.table[idx] = value;
            self.integral = IntegerTable::of(&self.table, n);
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// `[e_i, e_j]`
    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim() + j]
    }

    /// The structure constant `c_ij^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.product(i, j)[k]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.dim(), i)
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.dim()).map(|i| self.basis_vector(i)).collect()
    }

    fn check_len(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `[a, b]`, extended bilinearly from the structure constants.
    pub fn bracket(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mul(a, b))
    }

    /// Unchecked bracket for vectors known to have the right length.
    /// Accumulates over a common denominator and reduces once per coordinate.
    pub(crate) fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        debug_assert!(a.len() == self.dim() && b.len() == self.dim());
        let n = self.dim();
        let (da, na) = integral(a);
        let (db, nb) = integral(b);
        let mut acc = vec![BigInt::zero(); n];
        for (i, ai) in na.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in nb.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let row = &self.integral.nums[(i * n + j) * n..(i * n + j + 1) * n];
                if row.iter().all(Zero::is_zero) {
                    continue;
                }
                let ab = ai * bj;
                for (x, c) in acc.iter_mut().zip(row) {
                    if !c.is_zero() {
                        *x += &ab * c;
                    }
                }
            }
        }
        let den = da * db * &self.integral.den;
        Vector::from(
            acc.into_iter()
                .map(|x| Scalar::new(x, den.clone()))
                .collect::<Vec<_>>(),
        )
    }

    /// Matrix of `L_a : b ↦ [a, b]`.
    pub fn left_mult(&self, a: &Vector) -> Result<Matrix> {
        self.check_len(a)?;
        Ok(self.left(a))
    }

    /// Matrix of `R_a : b ↦ [b, a]`.
    pub fn right_mult(&self, a: &Vector) -> Result<Matrix> {
        self.check_len(a)?;
        Ok(self.right(a))
    }

    pub(crate) fn left(&self, a: &Vector) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim())
            .map(|j| self.mul(a, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    pub(crate) fn right(&self, a: &Vector) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim())
            .map(|j| self.mul(&self.basis_vector(j), a))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// `L_{e_i}` for every basis vector.
    pub fn left_basis_operators(&self) -> Vec<Matrix> {
        self.basis_vectors().iter().map(|e| self.left(e)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vector::is_zero)
    }

    /// Antisymmetric constants: `[e_i, e_i] = 0` and `[e_i, e_j] = -[e_j, e_i]`.
    /// For a Leibniz algebra this is the same as `Leib(A) = 0`, i.e. being Lie.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            self.product(i, i).is_zero()
                && (i + 1..n).all(|j| (self.product(i, j) + self.product(j, i)).is_zero())
        })
    }

    /// Nonzero products in basis order.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &Vector)> + '_ {
        let n = self.dim();
        (0..n * n).filter_map(move |idx| {
            let v = &self.table[idx];
            (!v.is_zero()).then_some((idx / n, idx % n, v))
        })
    }

    /// Renders `v` as a combination of basis names, e.g. `x - 1/2*y`.
    pub fn format_vector(&self, v: &Vector) -> String {
        format_combination(v.iter().zip(&self.names))
    }

    /// Same algebra with different basis names.
    pub fn renamed<S: AsRef<str>>(&self, names: &[S]) -> Result<Algebra> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: names.len(),
            });
        }
        let mut alg = Algebra::abelian(names)?;
        alg.table = self.table.clone();
        alg.integral = self.integral.clone();
        Ok(alg)
    }
}

pub(crate) fn format_combination<'a, N: AsRef<str> + 'a>(
    terms: impl Iterator<Item = (&'a Scalar, N)>,
) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let name = name.as_ref();
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(name);
        } else {
            let _ = write!(out, "{mag}*{name}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
