//! Engel subalgebras, Cartan subalgebras and invertible Leibniz derivations.

use crate::algebra::{derivation_check, normalizers, require_leibniz, restrict, Algebra};
use crate::analysis::{is_nilpotent, lower_central_series, nilpotency_class};
use crate::error::{Error, Result};
use crate::linalg::{fitting_null, int, Matrix, Subspace, Vector};
use crate::random::{seeded, small_vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngelResult {
    pub element: Vector,
    /// `E_A(a)`, the Fitting null component of `L_a`.
    pub subalgebra: Subspace,
    /// Whether `a ∈ E_A(a)`; this can fail in a Leibniz algebra.
    pub contains_element: bool,
}

pub fn engel_subalgebra(alg: &Algebra, a: &Vector) -> Result<EngelResult> {
    require_leibniz(alg)?;
    let subalgebra = fitting_null(&alg.left_mult(a)?);
    debug_assert!(crate::algebra::subspace_status(alg, &subalgebra)
        .expect("same ambient")
        .is_subalgebra);
    Ok(EngelResult {
        element: a.clone(),
        contains_element: subalgebra.contains(a),
        subalgebra,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanResult {
    pub subalgebra: Subspace,
    /// An element whose Engel subalgebra is `subalgebra`.
    pub witness_element: Vector,
    /// Number of Engel subalgebras computed.
    pub attempts_used: usize,
    pub seed: u64,
}

/// Nilpotent and equal to its own normalizer `N(H) = N^l(H) ∩ N^r(H)`.
pub fn is_cartan(alg: &Algebra, h: &Subspace) -> Result<bool> {
    let Ok(norm) = normalizers(alg, h) else {
        return Ok(false);
    };
    Ok(norm.both == *h && is_nilpotent(&restrict(alg, h)?)?)
}

/// Searches for a Cartan subalgebra among Engel subalgebras.
///
/// Candidates are the basis vectors followed by `attempts` seeded random
/// combinations. Engel subalgebras are tried in order of dimension and the
/// first one that passes [`is_cartan`] is returned.
pub fn find_cartan(alg: &Algebra, seed: u64, attempts: usize) -> Result<CartanResult> {
    require_leibniz(alg)?;
    if attempts == 0 {
        return Err(Error::InvalidArgument("attempts must be at least 1".into()));
    }
    let mut rng = seeded(seed);
    let candidates: Vec<Vector> = alg
        .basis_vectors()
        .into_iter()
        .chain((0..attempts).map(|_| small_vector(&mut rng, alg.dim())))
        .collect();
    let mut engels: Vec<(Subspace, Vector)> = Vec::new();
    for a in &candidates {
        let e = fitting_null(&alg.left(a));
        if !engels.iter().any(|(s, _)| *s == e) {
            engels.push((e, a.clone()));
        }
    }
    engels.sort_by_key(|(s, _)| s.dim());
    for (subalgebra, witness_element) in engels {
        if is_cartan(alg, &subalgebra)? {
            return Ok(CartanResult {
                subalgebra,
                witness_element,
                attempts_used: candidates.len(),
                seed,
            });
        }
    }
    Err(Error::NoCartanFound {
        attempts: candidates.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentDerivation {
    pub map: Matrix,
    /// `⌊c/2⌋ + 1` for class `c`.
    pub order: usize,
    pub class: usize,
}

/// Complement of `lower` inside `upper`: the canonical basis vectors of
/// `upper` at positions that are not pivots of `lower` written in `upper`'s coordinates.
fn complement_in(upper: &Subspace, lower: &Subspace) -> Vec<Vector> {
    let coords: Vec<Vector> = lower
        .vectors()
        .iter()
        .map(|v| upper.coordinates(v).expect("nested subspaces"))
        .collect();
    let inner = Subspace::span(upper.dim(), &coords);
    let basis = upper.vectors();
    inner
        .complement_indices()
        .into_iter()
        .map(|k| basis[k].clone())
        .collect()
}

/// `D = P diag(weights) P^{-1}` for the basis `P` given by `blocks`, with
/// `D` acting as `i` on the `i`-th block.
fn graded_map(n: usize, blocks: &[Vec<Vector>]) -> Option<Matrix> {
    let mut cols = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for (i, block) in blocks.iter().enumerate() {
        for v in block {
            cols.push(v.clone());
            weights.push(int(i as i64 + 1));
        }
    }
    if cols.len() != n {
        return None;
    }
    let p = Matrix::from_columns(n, &cols);
    let inv = p.inverse()?;
    let diag = Matrix::from_rows_with_cols(
        (0..n)
            .map(|k| {
                let mut row = vec![int(0); n];
                row[k] = weights[k].clone();
                row
            })
            .collect(),
        n,
    );
    Some(&(&p * &diag) * &inv)
}

/// The second candidate: `W_1` as before, and `W_i` chosen among left-normed
/// products of length `i` of `W_1`.
fn product_blocks(alg: &Algebra, terms: &[Subspace], w1: &[Vector]) -> Vec<Vec<Vector>> {
    let n = alg.dim();
    let mut blocks = vec![w1.to_vec()];
    let mut layer = w1.to_vec();
    for i in 1..terms.len() - 1 {
        layer = w1
            .iter()
            .flat_map(|g| layer.iter().map(move |u| (g, u)))
            .map(|(g, u)| alg.mul(g, u))
            .collect();
        let mut chosen: Vec<Vector> = Vec::new();
        let mut span = terms[i + 1].clone();
        for v in &layer {
            if !span.contains(v) {
                chosen.push(v.clone());
                span = span.sum(&Subspace::span(n, std::slice::from_ref(v))).expect("same ambient");
            }
        }
        blocks.push(chosen);
    }
    blocks
}

/// An invertible Leibniz derivation of order `⌊c/2⌋ + 1` for a nilpotent
/// algebra of class `c`.
///
/// The candidate acts as `i` on a complement `W_i` of `A^(i+1)` in `A^i`. Only
/// verified maps are returned; [`Error::CandidateFailed`] means neither
/// candidate passed.
pub fn nilpotent_derivation(alg: &Algebra) -> Result<NilpotentDerivation> {
    let class = nilpotency_class(alg)?.ok_or(Error::NotNilpotent)?;
    let n = alg.dim();
    let order = class / 2 + 1;
    let terms = lower_central_series(alg)?.terms;
    let blocks: Vec<Vec<Vector>> = terms
        .windows(2)
        .map(|w| complement_in(&w[0], &w[1]))
        .collect();
    let mut candidates = vec![blocks.clone()];
    if let Some(w1) = blocks.first() {
        candidates.push(product_blocks(alg, &terms, w1));
    }
    // order 1 is vacuous, so check the ordinary derivation law there as well
    let check_order = order.max(2);
    for blocks in candidates {
        let Some(map) = graded_map(n, &blocks) else {
            continue;
        };
        if derivation_check(alg, &map, check_order)?.is_empty() {
            return Ok(NilpotentDerivation { map, order, class });
        }
    }
    Err(Error::CandidateFailed(format!(
        "no graded candidate is a Leibniz derivation of order {order}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Scalar;

    fn alg(names: &[&str], products: &[(&str, &str, &[(&str, i64)])]) -> Algebra {
        let owned: Vec<(&str, &str, Vec<(&str, Scalar)>)> = products
            .iter()
            .map(|(l, r, t)| (*l, *r, t.iter().map(|(k, c)| (*k, int(*c))).collect()))
            .collect();
        let specs: Vec<crate::algebra::ProductSpec<'_>> =
            owned.iter().map(|(l, r, t)| (*l, *r, t.as_slice())).collect();
        Algebra::from_table(names, &specs).unwrap()
    }

    fn cyclic2() -> Algebra {
        alg(&["a", "a2"], &[("a", "a", &[("a2", 1)]), ("a", "a2", &[("a2", 1)])])
    }

    #[test]
    fn engel_of_the_generator_misses_it() {
        let a = cyclic2();
        let r = engel_subalgebra(&a, &a.basis_vector(0)).unwrap();
        assert_eq!(r.subalgebra, Subspace::span(2, &[Vector::from_ints(&[1, -1])]));
        assert!(!r.contains_element);
    }

    #[test]
    fn cartan_of_the_cyclic_algebra() {
        let a = cyclic2();
        let c = find_cartan(&a, 0, 4).unwrap();
        assert_eq!(c.subalgebra, Subspace::span(2, &[Vector::from_ints(&[1, -1])]));
        assert_eq!(c.attempts_used, 6);
        let norm = normalizers(&a, &c.subalgebra).unwrap();
        assert!(norm.left.is_full());
        assert_eq!(norm.right, c.subalgebra);
        assert!(find_cartan(&a, 0, 0).is_err());
    }

    #[test]
    fn nilpotent_algebras_are_their_own_cartan() {
        let a = alg(&["x", "y", "z"], &[("x", "x", &[("y", 1)]), ("x", "y", &[("z", 1)])]);
        assert!(find_cartan(&a, 3, 1).unwrap().subalgebra.is_full());
    }

    #[test]
    fn graded_derivations() {
        let a = alg(&["x", "y", "z"], &[("x", "x", &[("y", 1)]), ("x", "y", &[("z", 1)])]);
        let d = nilpotent_derivation(&a).unwrap();
        assert_eq!(d.map, Matrix::from_ints(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]));
        assert_eq!((d.class, d.order), (3, 2));

        let b = alg(&["x", "y", "z"], &[("x", "y", &[("z", 1)]), ("y", "x", &[("z", 1)])]);
        let d = nilpotent_derivation(&b).unwrap();
        assert_eq!(d.map, Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]));
        assert_eq!(d.order, 2);

        let ab = Algebra::abelian(&["p", "q"]).unwrap();
        let d = nilpotent_derivation(&ab).unwrap();
        assert_eq!(d.map, Matrix::identity(2));
        assert_eq!(d.order, 1);

        assert!(matches!(nilpotent_derivation(&cyclic2()), Err(Error::NotNilpotent)));
    }
}
