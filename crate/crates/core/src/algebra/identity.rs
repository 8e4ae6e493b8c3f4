//! Identity checkers: Leibniz identities, representation axioms and
//! Leibniz derivations of higher order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};

/// A basis triple where an identity fails.
///
/// `discrepancy` is the expanded side minus the single term, so for the left
/// identity it is `[[a,b],c] + [b,[a,c]] - [a,[b,c]]` and for the right
/// identity `[[a,c],b] + [a,[b,c]] - [[a,b],c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub indices: (usize, usize, usize),
    pub discrepancy: Vector,
}

/// Every basis triple violating `[a,[b,c]] = [[a,b],c] + [b,[a,c]]`, in
/// lexicographic order. Multilinearity makes basis triples sufficient.
pub fn check_left_leibniz(alg: &Algebra) -> Vec<Violation> {
    check_triples(alg, |a, b, c| {
        let single = alg.mul(a, &alg.mul(b, c));
        let expanded = &alg.mul(&alg.mul(a, b), c) + &alg.mul(b, &alg.mul(a, c));
        &expanded - &single
    })
}

/// Every basis triple violating `[[a,b],c] = [[a,c],b] + [a,[b,c]]`.
pub fn check_right_leibniz(alg: &Algebra) -> Vec<Violation> {
    check_triples(alg, |a, b, c| {
        let single = alg.mul(&alg.mul(a, b), c);
        let expanded = &alg.mul(&alg.mul(a, c), b) + &alg.mul(a, &alg.mul(b, c));
        &expanded - &single
    })
}

fn check_triples(alg: &Algebra, discrepancy: impl Fn(&Vector, &Vector, &Vector) -> Vector) -> Vec<Violation> {
    let basis = alg.basis_vectors();
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let d = discrepancy(&basis[i], &basis[j], &basis[k]);
                if !d.is_zero() {
                    out.push(Violation {
                        indices: (i, j, k),
                        discrepancy: d,
                    });
                }
            }
        }
    }
    out
}

/// Fails with the first violation if `alg` is not a left Leibniz algebra.
pub fn require_leibniz(alg: &Algebra) -> Result<()> {
    if integer_left_leibniz(alg) == Some(true) {
        return Ok(());
    }
    match check_left_leibniz(alg).into_iter().next() {
        Some(v) => Err(Error::NotLeibniz(v)),
        None => Ok(()),
    }
}

/// The left identity on the structure constants scaled to integers, or `None`
/// when they do not fit in machine words. The identity is homogeneous
/// quadratic, so clearing denominators does not change the answer.
fn integer_left_leibniz(alg: &Algebra) -> Option<bool> {
    let n = alg.dim();
    let den = alg
        .nonzero_products()
        .flat_map(|(_, _, v)| v.iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    // products stay below 2^80 and sums of n of them below 2^127
    let bound = 1i64 << 40;
    let mut c = vec![0i128; n * n * n];
    for (i, j, v) in alg.nonzero_products() {
        for (k, x) in v.iter().enumerate() {
            let scaled = (x.numer() * (&den / x.denom())).to_i64()?;
            if scaled.abs() >= bound {
                return None;
            }
            c[(i * n + j) * n + k] = scaled as i128;
        }
    }
    let at = |i: usize, j: usize, k: usize| c[(i * n + j) * n + k];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let mut d = 0i128;
                    for p in 0..n {
                        d += at(i, j, p) * at(p, k, m) + at(i, k, p) * at(j, p, m)
                            - at(j, k, p) * at(i, p, m);
                    }
                    if d != 0 {
                        return Some(false);
                    }
                }
            }
        }
    }
    Some(true)
}

/// A pair `(T, S)` of linear maps from the algebra into `End(M)`, given on
/// basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationPair {
    pub space_dim: usize,
    pub t: Vec<Matrix>,
    pub s: Vec<Matrix>,
}

impl RepresentationPair {
    /// The adjoint pair `T_a = L_a`, `S_a = R_a`.
    pub fn adjoint(alg: &Algebra) -> Self {
        let basis = alg.basis_vectors();
        RepresentationPair {
            space_dim: alg.dim(),
            t: basis.iter().map(|e| alg.left(e)).collect(),
            s: basis.iter().map(|e| alg.right(e)).collect(),
        }
    }

    pub fn zero(alg: &Algebra, space_dim: usize) -> Self {
        RepresentationPair {
            space_dim,
            t: vec![Matrix::zeros(space_dim, space_dim); alg.dim()],
            s: vec![Matrix::zeros(space_dim, space_dim); alg.dim()],
        }
    }

    fn combine(maps: &[Matrix], coeffs: &Vector, size: usize) -> Matrix {
        let mut acc = Matrix::zeros(size, size);
        for (m, c) in maps.iter().zip(coeffs.iter()) {
            acc = &acc + &m.scale(c);
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationViolation {
    /// 1: `S_b S_a = S_[a,b] - T_a S_b`, 2: `S_b T_a = T_a S_b - S_[a,b]`,
    /// 3: `T_[a,b] = T_a T_b - T_b T_a`.
    pub axiom: u8,
    pub pair: (usize, usize),
    /// Right-hand side minus left-hand side.
    pub discrepancy: Matrix,
}

/// Checks the three representation axioms on all basis pairs `(a, b)`.
pub fn check_representation(alg: &Algebra, rep: &RepresentationPair) -> Result<Vec<RepresentationViolation>> {
    let n = alg.dim();
    let m = rep.space_dim;
    if rep.t.len() != n || rep.s.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rep.t.len().min(rep.s.len()),
        });
    }
    if let Some(bad) = rep.t.iter().chain(&rep.s).find(|x| x.rows() != m || x.cols() != m) {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: bad.rows(),
        });
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = alg.product(a, b);
            let s_ab = RepresentationPair::combine(&rep.s, ab, m);
            let t_ab = RepresentationPair::combine(&rep.t, ab, m);
            let (ta, tb, sa, sb) = (&rep.t[a], &rep.t[b], &rep.s[a], &rep.s[b]);
            let checks = [
                (1, sb * sa, &s_ab - &(ta * sb)),
                (2, sb * ta, &(ta * sb) - &s_ab),
                (3, t_ab, &(ta * tb) - &(tb * ta)),
            ];
            for (axiom, lhs, rhs) in checks {
                let d = &rhs - &lhs;
                if !d.is_zero() {
                    out.push(RepresentationViolation {
                        axiom,
                        pair: (a, b),
                        discrepancy: d,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Left-normed product `[x_1, [x_2, [..., [x_{s-1}, x_s]...]]]`.
pub fn left_normed_product(alg: &Algebra, xs: &[Vector]) -> Vector {
    let (last, init) = xs.split_last().expect("at least one factor");
    init.iter().rev().fold(last.clone(), |acc, x| alg.mul(x, &acc))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationViolation {
    pub tuple: Vec<usize>,
    pub discrepancy: Vector,
}

/// Checks `D[x_1,...,x_s] = Σ_j [x_1,...,D x_j,...,x_s]` on all basis
/// `s`-tuples (left-normed products). Order 2 is the ordinary derivation law.
pub fn derivation_check(alg: &Algebra, d: &Matrix, order: usize) -> Result<Vec<DerivationViolation>> {
    let n = alg.dim();
    if order < 2 {
        return Err(Error::InvalidArgument(format!(
            "derivation order must be at least 2, got {order}"
        )));
    }
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: d.rows(),
        });
    }
    let basis = alg.basis_vectors();
    let images: Vec<Vector> = (0..n).map(|j| d.column(j)).collect();
    let mut out = Vec::new();
    let mut tuple = vec![0usize; order];
    if n == 0 {
        return Ok(out);
    }
    loop {
        let xs: Vec<Vector> = tuple.iter().map(|&i| basis[i].clone()).collect();
        let lhs = d.mul_vec(&left_normed_product(alg, &xs));
        let mut rhs = Vector::zeros(n);
        for (pos, &i) in tuple.iter().enumerate() {
            let mut ys = xs.clone();
            ys[pos] = images[i].clone();
            rhs = &rhs + &left_normed_product(alg, &ys);
        }
        let disc = &rhs - &lhs;
        if !disc.is_zero() {
            out.push(DerivationViolation {
                tuple: tuple.clone(),
                discrepancy: disc,
            });
        }
        // odometer increment, last index fastest
        let mut p = order;
        loop {
            if p == 0 {
                return Ok(out);
            }
            p -= 1;
            tuple[p] += 1;
            if tuple[p] < n {
                break;
            }
            tuple[p] = 0;
        }
    }
}
