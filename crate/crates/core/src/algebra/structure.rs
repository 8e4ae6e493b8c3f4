//! Subspace-valued constructions: Leib(A), centers, ideals, normalizers,
//! closures, quotients, basis changes and restrictions.

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix, Subspace, Vector};

/// `Leib(A) = span{[a, a]}`, computed by polarization: the span of the
/// squares `[e_i, e_i]` and the symmetrized products `[e_i, e_j] + [e_j, e_i]`.
pub fn leib_ideal(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    let mut gens = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        gens.push(alg.product(i, i).clone());
        for j in i + 1..n {
            gens.push(alg.product(i, j) + alg.product(j, i));
        }
    }
    Subspace::span(n, &gens)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centers {
    /// `Z^l(A) = {x : [x, a] = 0 for all a}`
    pub left: Subspace,
    /// `Z^r(A) = {x : [a, x] = 0 for all a}`
    pub right: Subspace,
    pub center: Subspace,
}

pub fn centers(alg: &Algebra) -> Centers {
    let n = alg.dim();
    let basis = alg.basis_vectors();
    let rights: Vec<Matrix> = basis.iter().map(|e| alg.right(e)).collect();
    let lefts: Vec<Matrix> = basis.iter().map(|e| alg.left(e)).collect();
    let left = kernel(&Matrix::vstack(n, &rights));
    let right = kernel(&Matrix::vstack(n, &lefts));
    let center = left.intersection(&right).expect("same ambient space");
    Centers {
        left,
        right,
        center,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspaceStatus {
    pub is_subalgebra: bool,
    pub is_left_ideal: bool,
    pub is_right_ideal: bool,
    pub is_ideal: bool,
}

fn check_ambient(alg: &Algebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: s.ambient_dim(),
        });
    }
    Ok(())
}

pub fn subspace_status(alg: &Algebra, s: &Subspace) -> Result<SubspaceStatus> {
    check_ambient(alg, s)?;
    let vs = s.vectors();
    let basis = alg.basis_vectors();
    let closed = |f: &dyn Fn(&Vector, &Vector) -> Vector, lhs: &[Vector], rhs: &[Vector]| {
        lhs.iter()
            .all(|a| rhs.iter().all(|b| s.contains(&f(a, b))))
    };
    let mul = |a: &Vector, b: &Vector| alg.mul(a, b);
    let is_subalgebra = closed(&mul, &vs, &vs);
    let is_left_ideal = closed(&mul, &basis, &vs);
    let is_right_ideal = closed(&mul, &vs, &basis);
    Ok(SubspaceStatus {
        is_subalgebra,
        is_left_ideal,
        is_right_ideal,
        is_ideal: is_left_ideal && is_right_ideal,
    })
}

/// `[I, J] = span{[u, v] : u ∈ I, v ∈ J}`
pub fn product_subspaces(alg: &Algebra, i: &Subspace, j: &Subspace) -> Result<Subspace> {
    check_ambient(alg, i)?;
    check_ambient(alg, j)?;
    let (iv, jv) = (i.vectors(), j.vectors());
    let gens: Vec<Vector> = iv
        .iter()
        .flat_map(|u| jv.iter().map(move |v| (u, v)))
        .map(|(u, v)| alg.mul(u, v))
        .collect();
    Ok(Subspace::span(alg.dim(), &gens))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalizers {
    /// `N^l(H) = {x : [x, h] ∈ H for all h ∈ H}`
    pub left: Subspace,
    /// `N^r(H) = {x : [h, x] ∈ H for all h ∈ H}`
    pub right: Subspace,
    /// `N(H) = N^l(H) ∩ N^r(H)`
    pub both: Subspace,
}

/// Left, right and two-sided normalizers of a subalgebra.
///
/// Each is the kernel of the stacked maps `x ↦ π([x, h])` (resp. `π([h, x])`)
/// over a basis of `H`, with `π` the projection onto `A / H`.
pub fn normalizers(alg: &Algebra, h: &Subspace) -> Result<Normalizers> {
    if !subspace_status(alg, h)?.is_subalgebra {
        return Err(Error::NotSubalgebra);
    }
    let n = alg.dim();
    let proj = h.annihilator();
    let hv = h.vectors();
    let stack = |f: &dyn Fn(&Vector) -> Matrix| {
        let blocks: Vec<Matrix> = hv.iter().map(|v| &proj * &f(v)).collect();
        kernel(&Matrix::vstack(n, &blocks))
    };
    let left = if hv.is_empty() { Subspace::full(n) } else { stack(&|v| alg.right(v)) };
    let right = if hv.is_empty() { Subspace::full(n) } else { stack(&|v| alg.left(v)) };
    let both = left.intersection(&right)?;
    Ok(Normalizers { left, right, both })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closures {
    /// Smallest subalgebra containing the subspace.
    pub subalgebra: Subspace,
    /// Smallest two-sided ideal containing the subspace.
    pub ideal: Subspace,
}

pub fn closures(alg: &Algebra, s: &Subspace) -> Result<Closures> {
    check_ambient(alg, s)?;
    let full = Subspace::full(alg.dim());
    let fix = |step: &dyn Fn(&Subspace) -> Result<Subspace>| -> Result<Subspace> {
        let mut cur = s.clone();
        loop {
            let next = cur.sum(&step(&cur)?)?;
            if next.dim() == cur.dim() {
                return Ok(cur);
            }
            cur = next;
        }
    };
    let subalgebra = fix(&|x| product_subspaces(alg, x, x))?;
    let ideal = fix(&|x| product_subspaces(alg, &full, x)?.sum(&product_subspaces(alg, x, &full)?))?;
    Ok(Closures { subalgebra, ideal })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: Algebra,
    /// `(dim A / I) × (dim A)` matrix sending a vector to its coset coordinates.
    pub projection: Matrix,
    /// Coordinates of `A` whose unit vectors represent the quotient basis.
    pub complement: Vec<usize>,
}

/// `A / I` for an ideal `I`, on the complement spanned by the non-pivot
/// coordinates of `I`'s canonical basis.
pub fn quotient(alg: &Algebra, i: &Subspace) -> Result<Quotient> {
    if !subspace_status(alg, i)?.is_ideal {
        return Err(Error::NotIdeal);
    }
    let n = alg.dim();
    let complement = i.complement_indices();
    let m = complement.len();
    let project = |v: &Vector| -> Vector {
        let r = i.reduce(v);
        complement.iter().map(|&c| r[c].clone()).collect()
    };
    let proj_cols: Vec<Vector> = (0..n).map(|j| project(&alg.basis_vector(j))).collect();
    let projection = Matrix::from_columns(m, &proj_cols);
    let names: Vec<&str> = complement.iter().map(|&c| alg.name(c)).collect();
    let mut q = Algebra::abelian(&names)?;
    for (a, &ca) in complement.iter().enumerate() {
        for (b, &cb) in complement.iter().enumerate() {
            q.set_product(a, b, project(alg.product(ca, cb)));
        }
    }
    Ok(Quotient {
        algebra: q,
        projection,
        complement,
    })
}

/// Rewrites the constants in the basis `e'_i = Σ_j p_ji e_j` (columns of `p`).
pub fn change_basis(alg: &Algebra, p: &Matrix) -> Result<Algebra> {
    let n = alg.dim();
    if p.rows() != n || p.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.rows(),
        });
    }
    let inv = p.inverse().ok_or(Error::Singular)?;
    let cols: Vec<Vector> = (0..n).map(|j| p.column(j)).collect();
    let mut out = alg.clone();
    for i in 0..n {
        for j in 0..n {
            let v = alg.mul(&cols[i], &cols[j]);
            out.set_product(i, j, inv.mul_vec(&v));
        }
    }
    Ok(out)
}

/// The algebra structure on a subalgebra, in its canonical basis. Basis
/// vectors are named `s1, s2, ...`.
pub fn restrict(alg: &Algebra, h: &Subspace) -> Result<Algebra> {
    if !subspace_status(alg, h)?.is_subalgebra {
        return Err(Error::NotSubalgebra);
    }
    let hv = h.vectors();
    let names: Vec<String> = (1..=hv.len()).map(|k| format!("s{k}")).collect();
    let mut out = Algebra::abelian(&names)?;
    for (a, u) in hv.iter().enumerate() {
        for (b, v) in hv.iter().enumerate() {
            let w = alg.mul(u, v);
            let coords = h.coordinates(&w).expect("closed under the bracket");
            out.set_product(a, b, coords);
        }
    }
    Ok(out)
}

/// True when every basis product of `a` and `b` agrees exactly.
pub fn same_constants(a: &Algebra, b: &Algebra) -> bool {
    a.dim() == b.dim()
        && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.product(i, j) == b.product(i, j)))
}
