//! Congruence classes `M ~ P^T M P` of 2×2 bilinear forms, detected through
//! the cosquare `M^{-T} M`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{int, kernel, rational_sqrt, Matrix, Scalar, Vector};

use super::Parameter;

/// The five canonical forms:
///
/// ```text
/// skew        [[0, 1], [-1, 0]]
/// rank1       [[1, 0], [ 0, 0]]
/// symmetric   [[0, 1], [ 1, 0]]
/// parabolic   [[0, 1], [-1, 1]]
/// generic     [[0, 1], [ c, 0]],  c ≠ ±1,  t = c + 1/c
/// ```
///
/// A rank-one form that is not symmetric is `generic` with `c = 0`, reported
/// as `t = infinity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum CanonicalForm2 {
    Skew,
    Rank1,
    Symmetric,
    Parabolic,
    Generic { t: Parameter },
}

impl CanonicalForm2 {
    pub fn label(&self) -> &'static str {
        match self {
            CanonicalForm2::Skew => "skew(i)",
            CanonicalForm2::Rank1 => "rank1(ii)",
            CanonicalForm2::Symmetric => "symmetric(iii)",
            CanonicalForm2::Parabolic => "parabolic(iv)",
            CanonicalForm2::Generic { .. } => "generic(v)",
        }
    }
}

/// `P^T M P = scale · canonical`, with `P` invertible and `scale ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceWitness {
    pub p: Matrix,
    pub scale: Scalar,
    pub canonical: Matrix,
    /// `c` of the generic form, when rational.
    pub c: Option<Scalar>,
}

fn check_shape(m: &Matrix) -> Result<()> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a 2x2 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if m.is_zero() {
        return Err(Error::InvalidArgument("the zero form has no canonical form".into()));
    }
    Ok(())
}

pub fn cosquare(m: &Matrix) -> Option<Matrix> {
    Some(&m.transpose().inverse()? * m)
}

pub fn congruence_class_2x2(m: &Matrix) -> Result<CanonicalForm2> {
    check_shape(m)?;
    if m.rank() == 1 {
        return Ok(if *m == m.transpose() {
            CanonicalForm2::Rank1
        } else {
            CanonicalForm2::Generic {
                t: Parameter::Infinity,
            }
        });
    }
    let c = cosquare(m).expect("rank 2");
    let id = Matrix::identity(2);
    Ok(if c == id {
        CanonicalForm2::Symmetric
    } else if c == -&id {
        CanonicalForm2::Skew
    } else if c.trace() == int(-2) {
        CanonicalForm2::Parabolic
    } else {
        CanonicalForm2::Generic {
            t: Parameter::Rational(c.trace()),
        }
    })
}

fn form(m: &Matrix, u: &Vector, v: &Vector) -> Scalar {
    u.dot(&m.mul_vec(v))
}

fn first_kernel_vector(m: &Matrix) -> Vector {
    kernel(m).vectors().into_iter().next().expect("singular matrix")
}

fn not_parallel_to(v: &Vector) -> Vector {
    if v[1].is_zero() {
        Vector::from_ints(&[0, 1])
    } else {
        Vector::from_ints(&[1, 0])
    }
}

fn eigenvector(m: &Matrix, lambda: &Scalar) -> Vector {
    first_kernel_vector(&(m - &Matrix::identity(2).scale(lambda)))
}

/// A rational change of basis onto the canonical form, when one exists.
///
/// Over `Q` this fails exactly when the symmetric form is anisotropic or the
/// generic form's `c` is irrational; the class is still determined.
pub fn canonicalize(m: &Matrix) -> Result<(CanonicalForm2, Option<CongruenceWitness>)> {
    let class = congruence_class_2x2(m)?;
    let (x, y, c) = match &class {
        CanonicalForm2::Skew => (Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1]), None),
        CanonicalForm2::Rank1 => {
            let y = first_kernel_vector(m);
            let x = [Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])]
                .into_iter()
                .find(|u| !form(m, u, u).is_zero())
                .expect("symmetric rank one");
            (x, y, None)
        }
        CanonicalForm2::Generic {
            t: Parameter::Infinity,
        } => (first_kernel_vector(m), first_kernel_vector(&m.transpose()), Some(Scalar::zero())),
        CanonicalForm2::Symmetric => {
            let (a, b, d) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 1)]);
            let Some(r) = rational_sqrt(&-m.determinant()) else {
                return Ok((class, None));
            };
            if a.is_zero() {
                (Vector::from_ints(&[1, 0]), Vector::from(vec![-d, b * int(2)]), None)
            } else {
                let root = |s: &Scalar| Vector::from(vec![(s - b) / a, Scalar::one()]);
                (root(&r), root(&-&r), None)
            }
        }
        CanonicalForm2::Parabolic => {
            let x0 = first_kernel_vector(&(m + &m.transpose()));
            let y0 = not_parallel_to(&x0);
            let (p, q) = (form(m, &x0, &y0), form(m, &y0, &y0));
            (x0.scale(&(q / p)), y0, None)
        }
        CanonicalForm2::Generic {
            t: Parameter::Rational(t),
        } => {
            let Some(r) = rational_sqrt(&(t * t - int(4))) else {
                return Ok((class, None));
            };
            let c = (t + r) / int(2);
            let cs = cosquare(m).expect("rank 2");
            (eigenvector(&cs, &c), eigenvector(&cs, &c.recip()), Some(c))
        }
    };
    let p = Matrix::from_columns(2, &[x.clone(), y.clone()]);
    let scale = form(m, &x, &y);
    let canonical = match &class {
        CanonicalForm2::Skew => Matrix::from_ints(&[&[0, 1], &[-1, 0]]),
        CanonicalForm2::Rank1 => Matrix::from_ints(&[&[1, 0], &[0, 0]]),
        CanonicalForm2::Symmetric => Matrix::from_ints(&[&[0, 1], &[1, 0]]),
        CanonicalForm2::Parabolic => Matrix::from_ints(&[&[0, 1], &[-1, 1]]),
        CanonicalForm2::Generic { .. } => {
            let c = c.clone().expect("rational c");
            Matrix::from_rows(vec![vec![int(0), int(1)], vec![c, int(0)]])
        }
    };
    let scale = if class == CanonicalForm2::Rank1 {
        form(m, &x, &x)
    } else {
        scale
    };
    let witness = CongruenceWitness {
        p,
        scale,
        canonical,
        c,
    };
    let image = &(&witness.p.transpose() * m) * &witness.p;
    if witness.scale.is_zero()
        || !witness.p.is_invertible()
        || image != witness.canonical.scale(&witness.scale)
    {
        return Err(Error::CandidateFailed(format!(
            "congruence recipe for {} did not reproduce the canonical form",
            class.label()
        )));
    }
    Ok((class, Some(witness)))
}

/// `t = trace(cosquare)` for rank-2 forms; `None` otherwise.
pub fn invariant_t(m: &Matrix) -> Option<Scalar> {
    (m.rows() == 2 && m.rank() == 2).then(|| cosquare(m).expect("rank 2").trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::random::{invertible_matrix, seeded};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows)
    }

    #[test]
    fn classes_of_the_canonical_matrices() {
        assert_eq!(congruence_class_2x2(&m(&[&[0, 1], &[-1, 0]])).unwrap(), CanonicalForm2::Skew);
        assert_eq!(congruence_class_2x2(&m(&[&[1, 0], &[0, 0]])).unwrap(), CanonicalForm2::Rank1);
        assert_eq!(
            congruence_class_2x2(&m(&[&[0, 1], &[1, 0]])).unwrap(),
            CanonicalForm2::Symmetric
        );
        assert_eq!(
            congruence_class_2x2(&m(&[&[0, 1], &[-1, 1]])).unwrap(),
            CanonicalForm2::Parabolic
        );
        assert_eq!(
            congruence_class_2x2(&m(&[&[0, 2], &[6, 0]])).unwrap(),
            CanonicalForm2::Generic {
                t: Parameter::Rational(rat(10, 3))
            }
        );
        assert_eq!(
            congruence_class_2x2(&m(&[&[0, 1], &[0, 0]])).unwrap(),
            CanonicalForm2::Generic {
                t: Parameter::Infinity
            }
        );
        assert!(congruence_class_2x2(&Matrix::zeros(2, 2)).is_err());
        assert!(congruence_class_2x2(&Matrix::identity(3)).is_err());
    }

    #[test]
    fn cosquare_of_the_generic_example() {
        let c = cosquare(&m(&[&[0, 2], &[6, 0]])).unwrap();
        assert_eq!(
            c,
            Matrix::from_rows(vec![vec![int(3), int(0)], vec![int(0), rat(1, 3)]])
        );
    }

    #[test]
    fn t_is_a_congruence_invariant() {
        let base = m(&[&[0, 1], &[3, 0]]);
        let mut rng = seeded(11);
        for _ in 0..100 {
            let p = invertible_matrix(&mut rng, 2);
            let image = &(&p.transpose() * &base) * &p;
            assert_eq!(invariant_t(&image), Some(rat(10, 3)));
        }
    }

    #[test]
    fn witnesses_reach_the_canonical_matrix() {
        let mut rng = seeded(5);
        let samples = [
            m(&[&[1, 0], &[0, 0]]),
            m(&[&[0, 1], &[0, 0]]),
            m(&[&[0, 1], &[1, 0]]),
            m(&[&[1, 0], &[0, -1]]),
            m(&[&[0, 1], &[-1, 1]]),
            m(&[&[0, 1], &[2, 0]]),
            m(&[&[0, 1], &[-3, 0]]),
        ];
        for base in samples {
            for _ in 0..20 {
                let p = invertible_matrix(&mut rng, 2);
                let image = &(&p.transpose() * &base) * &p;
                let (class, witness) = canonicalize(&image).unwrap();
                assert_eq!(class, congruence_class_2x2(&base).unwrap());
                assert!(witness.is_some(), "{base}");
            }
        }
    }

    #[test]
    fn anisotropic_symmetric_form_has_no_rational_witness() {
        let (class, witness) = canonicalize(&Matrix::identity(2)).unwrap();
        assert_eq!(class, CanonicalForm2::Symmetric);
        assert!(witness.is_none());
        // t = 1, so c is a primitive sixth root of unity
        let (class, witness) = canonicalize(&m(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(
            class,
            CanonicalForm2::Generic {
                t: Parameter::Rational(int(1))
            }
        );
        assert!(witness.is_none());
    }
}
