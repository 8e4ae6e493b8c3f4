//! Seeded generators for small rational test data. Everything here is
//! deterministic in the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{rat, Matrix, Scalar, Vector};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `p` in `-3..=3` and `q` in `1..=2`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Scalar {
    rat(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

pub fn small_vector<R: Rng>(rng: &mut R, n: usize) -> Vector {
    (0..n).map(|_| small_rational(rng)).collect()
}

/// A random matrix with small rational entries, redrawn until invertible.
pub fn invertible_matrix<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let rows = (0..n).map(|_| small_vector(rng, n).into_inner()).collect();
        let m = Matrix::from_rows_with_cols(rows, n);
        if m.is_invertible() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let a = small_vector(&mut seeded(7), 5);
        let b = small_vector(&mut seeded(7), 5);
        assert_eq!(a, b);
        assert!(invertible_matrix(&mut seeded(1), 3).is_invertible());
    }
}
