use std::fmt;
use std::ops::{Add, Deref, Index, IndexMut, Neg, Sub};

use num_traits::Zero;

use super::scalar::{int, Scalar};

/// Coordinate vector over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn zeros(len: usize) -> Self {
        Vector(vec![Scalar::zero(); len])
    }

    /// The `i`-th standard basis vector of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = int(1);
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn into_inner(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector(v)
    }
}

impl FromIterator<Scalar> for Vector {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl Deref for Vector {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.len(), rhs.len());
        self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect()
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.len(), rhs.len());
        self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect()
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.0.iter().map(|a| -a).collect()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
