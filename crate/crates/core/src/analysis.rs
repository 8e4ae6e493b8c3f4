//! Derived and lower central series, solvability, nilpotency, radical.

use crate::algebra::{leib_ideal, product_subspaces, quotient, require_leibniz, Algebra};
use crate::error::Result;
use crate::forms::killing_gram;
use crate::linalg::{kernel, Matrix, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// `terms[0] = A`. Derived: `terms[i] = A^(i)`. Lower central: `terms[i] = A^(i+1)`.
    pub terms: Vec<Subspace>,
    /// The series reached a nonzero fixed point instead of zero.
    pub stabilized: bool,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// True when the last term is zero.
    pub fn reaches_zero(&self) -> bool {
        self.terms.last().is_some_and(Subspace::is_zero)
    }
}

fn series(alg: &Algebra, kind: SeriesKind) -> Result<SeriesReport> {
    require_leibniz(alg)?;
    Ok(series_unchecked(alg, kind))
}

/// The series without the identity check, for callers that already ran it.
pub(crate) fn series_unchecked(alg: &Algebra, kind: SeriesKind) -> SeriesReport {
    let full = Subspace::full(alg.dim());
    let mut terms = vec![full.clone()];
    let mut stabilized = false;
    // dimensions drop at every step until zero or a repeat
    for _ in 0..=alg.dim() {
        let last = terms.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = match kind {
            SeriesKind::Derived => product_subspaces(alg, last, last),
            SeriesKind::LowerCentral => product_subspaces(alg, &full, last),
        }
        .expect("same ambient space");
        if next == *last {
            stabilized = true;
            break;
        }
        terms.push(next);
    }
    SeriesReport {
        kind,
        terms,
        stabilized,
    }
}

/// `A^(0) = A`, `A^(i+1) = [A^(i), A^(i)]`.
pub fn derived_series(alg: &Algebra) -> Result<SeriesReport> {
    series(alg, SeriesKind::Derived)
}

/// `A^1 = A`, `A^(i+1) = [A, A^i]`.
pub fn lower_central_series(alg: &Algebra) -> Result<SeriesReport> {
    series(alg, SeriesKind::LowerCentral)
}

pub fn is_solvable(alg: &Algebra) -> Result<bool> {
    Ok(derived_series(alg)?.reaches_zero())
}

pub fn is_nilpotent(alg: &Algebra) -> Result<bool> {
    Ok(lower_central_series(alg)?.reaches_zero())
}

/// The `c` with `A^(c+1) = 0` and `A^c ≠ 0`, or `None` if `A` is not nilpotent.
/// The zero algebra has class 0.
pub fn nilpotency_class(alg: &Algebra) -> Result<Option<usize>> {
    let lcs = lower_central_series(alg)?;
    Ok(lcs.reaches_zero().then(|| lcs.terms.len() - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub radical: Subspace,
    pub leib: Subspace,
    /// `rad(A) = Leib(A)`
    pub semisimple: bool,
}

/// The maximal solvable ideal.
///
/// `Leib(A)` is a solvable ideal, so `rad(A)` is the preimage of the radical
/// of the Lie algebra `q = A / Leib(A)`, and over a field of characteristic
/// zero `rad(q)` is the Killing-orthogonal complement of `[q, q]`.
pub fn radical(alg: &Algebra) -> Result<RadicalReport> {
    require_leibniz(alg)?;
    let n = alg.dim();
    let leib = leib_ideal(alg);
    let q = quotient(alg, &leib)?;
    let qa = &q.algebra;
    let m = qa.dim();
    let gram = killing_gram(qa);
    let derived = product_subspaces(qa, &Subspace::full(m), &Subspace::full(m))?;
    // x ∈ rad(q) iff κ(d, x) = 0 for every basis vector d of [q, q]
    let constraints: Vec<Vector> = derived
        .vectors()
        .iter()
        .map(|d| gram.transpose().mul_vec(d))
        .collect();
    let lie_radical = if constraints.is_empty() {
        Subspace::full(m)
    } else {
        kernel(&Matrix::from_rows_with_cols(
            constraints.into_iter().map(Vector::into_inner).collect(),
            m,
        ))
    };
    let lifted: Vec<Vector> = lie_radical
        .vectors()
        .iter()
        .map(|v| {
            let mut w = Vector::zeros(n);
            for (k, &c) in q.complement.iter().enumerate() {
                w[c] = v[k].clone();
            }
            w
        })
        .collect();
    let radical = Subspace::span(n, &lifted).sum(&leib)?;
    let semisimple = radical == leib;
    Ok(RadicalReport {
        radical,
        leib,
        semisimple,
    })
}

pub fn is_semisimple(alg: &Algebra) -> Result<bool> {
    Ok(radical(alg)?.semisimple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{restrict, subspace_status};
    use crate::linalg::int;

    fn table(names: &[&str], products: &[(&str, &str, &[(&str, i64)])]) -> Algebra {
        let owned: Vec<(&str, &str, Vec<(&str, crate::linalg::Scalar)>)> = products
            .iter()
            .map(|(l, r, t)| (*l, *r, t.iter().map(|(k, c)| (*k, int(*c))).collect()))
            .collect();
        let specs: Vec<crate::algebra::ProductSpec<'_>> =
            owned.iter().map(|(l, r, t)| (*l, *r, t.as_slice())).collect();
        Algebra::from_table(names, &specs).unwrap()
    }

    fn example_5_8() -> Algebra {
        table(&["x", "y"], &[("y", "x", &[("x", 1)]), ("y", "y", &[("x", 1)])])
    }

    fn sl2_v1() -> Algebra {
        table(
            &["h", "e", "f", "x0", "x1"],
            &[
                ("h", "e", &[("e", 2)]),
                ("e", "h", &[("e", -2)]),
                ("h", "f", &[("f", -2)]),
                ("f", "h", &[("f", 2)]),
                ("e", "f", &[("h", 1)]),
                ("f", "e", &[("h", -1)]),
                ("h", "x0", &[("x0", 1)]),
                ("h", "x1", &[("x1", -1)]),
                ("f", "x0", &[("x1", 1)]),
                ("e", "x1", &[("x0", 1)]),
            ],
        )
    }

    #[test]
    fn derived_series_examples() {
        let s = derived_series(&example_5_8()).unwrap();
        assert_eq!(s.dims(), vec![2, 1, 0]);
        assert!(!s.stabilized);
        assert!(is_solvable(&example_5_8()).unwrap());

        let ab = Algebra::abelian(&["p", "q", "r"]).unwrap();
        assert_eq!(derived_series(&ab).unwrap().dims(), vec![3, 0]);

        let s = derived_series(&sl2_v1()).unwrap();
        assert_eq!(s.dims(), vec![5]);
        assert!(s.stabilized);
        assert!(!is_solvable(&sl2_v1()).unwrap());
    }

    #[test]
    fn nilpotency_classes() {
        let n3_1 = table(&["x", "y", "z"], &[("x", "x", &[("y", 1)]), ("x", "y", &[("z", 1)])]);
        assert_eq!(nilpotency_class(&n3_1).unwrap(), Some(3));
        let n3_3 = table(&["x", "y", "z"], &[("x", "y", &[("z", 1)]), ("y", "x", &[("z", 1)])]);
        assert_eq!(nilpotency_class(&n3_3).unwrap(), Some(2));
        let s3_1 = table(&["x", "y", "z"], &[("z", "x", &[("x", 1)])]);
        assert!(!is_nilpotent(&s3_1).unwrap());
        assert_eq!(nilpotency_class(&s3_1).unwrap(), None);
        assert_eq!(lower_central_series(&s3_1).unwrap().dims(), vec![3, 1]);
    }

    #[test]
    fn non_leibniz_input_is_rejected() {
        let bad = table(&["x"], &[("x", "x", &[("x", 1)])]);
        assert!(derived_series(&bad).is_err());
        assert!(radical(&bad).is_err());
    }

    #[test]
    fn radical_examples() {
        let r = radical(&sl2_v1()).unwrap();
        assert_eq!(r.radical, r.leib);
        assert_eq!(r.radical.dim(), 2);
        assert!(r.semisimple);

        let r = radical(&example_5_8()).unwrap();
        assert!(r.radical.is_full());
        assert!(!r.semisimple);

        let r = radical(&Algebra::abelian(&["p", "q"]).unwrap()).unwrap();
        assert!(r.radical.is_full());
        assert!(!r.semisimple);
    }

    #[test]
    fn radical_is_a_solvable_ideal() {
        for alg in [sl2_v1(), example_5_8()] {
            let r = radical(&alg).unwrap();
            assert!(subspace_status(&alg, &r.radical).unwrap().is_ideal);
            assert!(is_solvable(&restrict(&alg, &r.radical).unwrap()).unwrap());
        }
    }
}
