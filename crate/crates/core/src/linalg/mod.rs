//! Exact linear algebra over the rationals: row reduction, kernels,
//! Fitting null components and the subspace lattice.

mod matrix;
pub mod scalar;
mod subspace;
mod vector;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use matrix::Matrix;
pub use scalar::{int, rat, rational_sqrt, Scalar};
pub use subspace::Subspace;
pub use vector::Vector;

/// Reduced row-echelon form of `m` together with its rank.
///
/// The result is the unique RREF: pivots are 1, pivot columns are otherwise
/// zero, and pivot columns strictly increase down the rows. Zero rows are
/// kept at the bottom so the shape of `m` is preserved.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let (rows, cols) = (m.rows(), m.cols());
    // Rows are scaled to primitive integer vectors, which keeps the row space,
    // and eliminated fraction-free; pivots are normalized at the end.
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|r| primitive_row(m.row(r))).collect();
    let mut pivots = Vec::new();
    for c in 0..cols {
        let rank = pivots.len();
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot_row = std::mem::take(&mut a[rank]);
        let pv = &pivot_row[c];
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * pv - &f * y;
            }
            make_primitive(row);
        }
        a[rank] = pivot_row;
        pivots.push(c);
    }
    let mut out = Matrix::zeros(rows, cols);
    for (r, &c) in pivots.iter().enumerate() {
        let pv = &a[r][c];
        for k in c..cols {
            if !a[r][k].is_zero() {
                out[(r, k)] = Scalar::new(a[r][k].clone(), pv.clone());
            }
        }
    }
    (out, pivots.len())
}

/// `row` scaled to integers with gcd 1 (a zero row stays zero).
fn primitive_row(row: &[Scalar]) -> Vec<BigInt> {
    let den = row
        .iter()
        .filter(|x| !x.denom().is_one())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if !g.is_zero() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Pivot column of each nonzero row of a matrix already in RREF.
pub(crate) fn pivot_columns(reduced: &Matrix, rank: usize) -> Vec<usize> {
    (0..rank)
        .map(|r| {
            (0..reduced.cols())
                .find(|&c| !reduced[(r, c)].is_zero())
                .expect("nonzero row in RREF")
        })
        .collect()
}

/// `{v : m v = 0}` as a canonical subspace of the column space.
pub fn kernel(m: &Matrix) -> Subspace {
    let (red, rank) = rref(m);
    let pivots = pivot_columns(&red, rank);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<Vector> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = Vector::zeros(n);
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red[(r, f)].clone();
            }
            v
        })
        .collect();
    Subspace::span(n, &basis)
}

/// Fitting null component of a square map: `kernel(m^n)` with `n` its size.
pub fn fitting_null(m: &Matrix) -> Subspace {
    assert!(m.is_square(), "Fitting null component needs a square matrix");
    kernel(&m.pow(m.rows() as u32))
}
