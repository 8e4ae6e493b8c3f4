//! Classification of non-Lie Leibniz algebras of dimension 2 and 3.
//!
//! Invariants from [`fingerprint`] pick a family; a deterministic recipe then
//! builds a basis in which the constants equal the catalog table, and the
//! result is checked with [`change_basis`]. Where the isomorphism needs an
//! irrational change of basis the family is still reported, certified by
//! invariants that are complete over the algebraic closure.
//!
//! Parameters: `n3_5` and `s3_5` carry `t = α + 1/α`, since `α` and `1/α` give
//! isomorphic algebras (swap `x` and `y`; for `s3_5` also rescale `z`). `s3_2`
//! carries `α` itself.

mod catalog;
mod congruence;
mod fingerprint;

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::{change_basis, leib_ideal, same_constants, Algebra};
use crate::error::Result;
use crate::linalg::{int, kernel, Matrix, Scalar, Subspace, Vector};

pub use catalog::{
    catalog_table, cyclic, fixture_specs, from_associative, generate, parameter_grid, sl2, sl2_module,
    FIXTURE_NAMES,
};
pub use congruence::{
    canonicalize, congruence_class_2x2, cosquare, invariant_t, CanonicalForm2, CongruenceWitness,
};
pub use fingerprint::{fingerprint, Fingerprint, Spectral};

use fingerprint::{rational_eigenvalues, restricted_left};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Dim2NilpotentCyclic,
    Dim2SolvableCyclic,
    N3_1,
    N3_2,
    N3_3,
    N3_4,
    N3_5,
    S3_1,
    S3_2,
    S3_3,
    S3_4,
    S3_5,
    S3_6,
    S3_7,
    Lie,
    Unclassified,
}

impl Family {
    /// Every family with a multiplication table.
    pub const CATALOG: [Family; 14] = [
        Family::Dim2NilpotentCyclic,
        Family::Dim2SolvableCyclic,
        Family::N3_1,
        Family::N3_2,
        Family::N3_3,
        Family::N3_4,
        Family::N3_5,
        Family::S3_1,
        Family::S3_2,
        Family::S3_3,
        Family::S3_4,
        Family::S3_5,
        Family::S3_6,
        Family::S3_7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Dim2NilpotentCyclic => "dim2_nilpotent_cyclic",
            Family::Dim2SolvableCyclic => "dim2_solvable_cyclic",
            Family::N3_1 => "n3_1",
            Family::N3_2 => "n3_2",
            Family::N3_3 => "n3_3",
            Family::N3_4 => "n3_4",
            Family::N3_5 => "n3_5",
            Family::S3_1 => "s3_1",
            Family::S3_2 => "s3_2",
            Family::S3_3 => "s3_3",
            Family::S3_4 => "s3_4",
            Family::S3_5 => "s3_5",
            Family::S3_6 => "s3_6",
            Family::S3_7 => "s3_7",
            Family::Lie => "lie",
            Family::Unclassified => "unclassified",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::CATALOG.into_iter().find(|f| f.name() == name)
    }

    /// Families whose table takes `alpha`.
    pub fn has_parameter(self) -> bool {
        matches!(self, Family::N3_5 | Family::S3_2 | Family::S3_5)
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A rational invariant, or infinity for `t = c + 1/c` at `c = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Parameter {
    Rational(Scalar),
    Infinity,
}

impl Parameter {
    /// `α + 1/α`
    pub fn t_of(alpha: &Scalar) -> Parameter {
        if alpha.is_zero() {
            Parameter::Infinity
        } else {
            Parameter::Rational(alpha + alpha.recip())
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Rational(x) => write!(f, "{x}"),
            Parameter::Infinity => write!(f, "infinity"),
        }
    }
}

impl Serialize for Parameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CatalogId {
    pub family: Family,
    pub parameter: Option<Parameter>,
}

impl CatalogId {
    pub fn plain(family: Family) -> Self {
        CatalogId {
            family,
            parameter: None,
        }
    }

    /// The id that `catalog_table(family, alpha)` classifies to.
    pub fn of_table(family: Family, alpha: Option<&Scalar>) -> Self {
        let parameter = match (family, alpha) {
            (Family::N3_5 | Family::S3_5, Some(a)) => Some(Parameter::t_of(a)),
            (Family::S3_2, Some(a)) => Some(Parameter::Rational(a.clone())),
            _ => None,
        };
        CatalogId { family, parameter }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.name())?;
        if let Some(p) = &self.parameter {
            let key = if self.family == Family::S3_2 { "alpha" } else { "t" };
            write!(f, " {key}={p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `change_basis(A, p)` has exactly the constants of `catalog_table(family, alpha)`.
    Isomorphism { p: Matrix, alpha: Option<Scalar> },
    /// No rational isomorphism exists; the listed invariants determine the
    /// class over the algebraic closure.
    Invariants(String),
    /// Antisymmetric constants.
    Antisymmetric,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub id: CatalogId,
    pub fingerprint: Fingerprint,
    pub certificate: Certificate,
}

/// Outcome of a recipe.
enum Found {
    Iso(CatalogId, Matrix, Option<Scalar>),
    Invariants(CatalogId, String),
}

fn certify(alg: &Algebra, family: Family, alpha: Option<Scalar>, cols: &[Vector]) -> Option<Found> {
    let p = Matrix::from_columns(alg.dim(), cols);
    let image = change_basis(alg, &p).ok()?;
    let target = catalog_table(family, alpha.as_ref()).ok()?;
    same_constants(&image, &target)
        .then(|| Found::Iso(CatalogId::of_table(family, alpha.as_ref()), p, alpha))
}

/// `λ` with `v = λ base`, if any.
fn ratio(v: &Vector, base: &Vector) -> Option<Scalar> {
    let k = base.iter().position(|c| !c.is_zero())?;
    let lambda = &v[k] / &base[k];
    (base.scale(&lambda) == *v).then_some(lambda)
}

fn combo(alg: &Algebra, terms: &[(&Scalar, &Vector)]) -> Vector {
    let mut out = Vector::zeros(alg.dim());
    for (c, v) in terms {
        out.add_scaled(c, v);
    }
    out
}

fn dim2(alg: &Algebra) -> Option<Found> {
    let (e0, e1) = (alg.basis_vector(0), alg.basis_vector(1));
    let sum = &e0 + &e1;
    let a = [e0, e1, sum].into_iter().find(|a| !alg.mul(a, a).is_zero())?;
    let a2 = alg.mul(&a, &a);
    let alpha = ratio(&alg.mul(&a, &a2), &a2)?;
    if alpha.is_zero() {
        return certify(alg, Family::Dim2NilpotentCyclic, None, &[a, a2]);
    }
    let a = a.scale(&alpha.recip());
    let a2 = alg.mul(&a, &a);
    certify(alg, Family::Dim2SolvableCyclic, None, &[a, a2])
}

fn nilpotent3(alg: &Algebra, derived: &Subspace) -> Option<Found> {
    if derived.dim() == 2 {
        // any element outside A² generates
        let w = alg.basis_vector(derived.complement_indices()[0]);
        let w2 = alg.mul(&w, &w);
        let w3 = alg.mul(&w, &w2);
        return certify(alg, Family::N3_1, None, &[w, w2, w3]);
    }
    let z0 = derived.vectors().pop()?;
    let v = derived.complement_indices();
    let rows: Vec<Vec<Scalar>> = v
        .iter()
        .map(|&i| {
            v.iter()
                .map(|&j| ratio(alg.product(i, j), &z0))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<_>>()?;
    let m = Matrix::from_rows(rows);
    let (form, witness) = canonicalize(&m).ok()?;
    let family = match &form {
        CanonicalForm2::Skew => return None,
        CanonicalForm2::Rank1 => Family::N3_2,
        CanonicalForm2::Symmetric => Family::N3_3,
        CanonicalForm2::Parabolic => Family::N3_4,
        CanonicalForm2::Generic { .. } => Family::N3_5,
    };
    let Some(w) = witness else {
        let id = CatalogId {
            family,
            parameter: match &form {
                CanonicalForm2::Generic { t } => Some(t.clone()),
                _ => None,
            },
        };
        return Some(Found::Invariants(
            id,
            format!(
                "form on a complement of A^2 has congruence class {} with no rational canonical basis",
                form.label()
            ),
        ));
    };
    let (ei, ej) = (alg.basis_vector(v[0]), alg.basis_vector(v[1]));
    let col = |k: usize| combo(alg, &[(&w.p[(0, k)], &ei), (&w.p[(1, k)], &ej)]);
    let alpha = (family == Family::N3_5).then(|| w.c.clone().expect("generic witness"));
    certify(alg, family, alpha, &[col(0), col(1), z0.scale(&w.scale)])
}

/// `dim A² = 1`: `L_a` acts on `A² = span{x0}` by a nonzero functional `λ`.
fn s3_1(alg: &Algebra, derived: &Subspace) -> Option<Found> {
    let x0 = derived.vectors().pop()?;
    let lambdas: Vec<Scalar> = alg
        .basis_vectors()
        .iter()
        .map(|e| ratio(&alg.mul(e, &x0), &x0))
        .collect::<Option<_>>()?;
    let k = lambdas.iter().position(|l| !l.is_zero())?;
    let z = alg.basis_vector(k).scale(&lambdas[k].recip());
    let tau = ratio(&alg.mul(&z, &z), &x0)?;
    let z = combo(alg, &[(&int(1), &z), (&-tau, &x0)]);
    // y spans ker λ modulo x0
    let functional = Matrix::from_rows(vec![lambdas]);
    let y = kernel(&functional)
        .vectors()
        .into_iter()
        .find(|v| !derived.contains(v))?;
    let mu = ratio(&alg.mul(&z, &y), &x0)?;
    let y = combo(alg, &[(&int(1), &y), (&-mu, &x0)]);
    certify(alg, Family::S3_1, None, &[x0, y, z])
}

/// `dim Leib = 1`: `x0` spans `Leib`, `y` is an eigenvector of `L_z` for 1
/// whose antisymmetric partner `[y, z] = -y` fixes the scale of `z`.
fn solvable_leib1(alg: &Algebra, derived: &Subspace, leib: &Subspace, family: Family) -> Option<Found> {
    let x0 = leib.vectors().pop()?;
    let w = alg.basis_vector(derived.complement_indices()[0]);
    let lam = ratio(&alg.mul(&w, &x0), &x0)?;
    let mu = restricted_left(alg, &w, derived).trace() - &lam;
    if mu.is_zero() {
        return None;
    }
    let z = w.scale(&mu.recip());
    let alpha = lam / &mu;
    let shifted = &restricted_left(alg, &z, derived) - &Matrix::identity(2);
    let y = kernel(&shifted)
        .vectors()
        .iter()
        .map(|c| derived.combine(c))
        .find(|v| !leib.contains(v))?;
    let kappa = ratio(&(&alg.mul(&y, &z) + &y), &x0)?;
    let sigma = ratio(&alg.mul(&y, &y), &x0)?;
    let tau = ratio(&alg.mul(&z, &z), &x0)?;
    let one = Scalar::one();
    match family {
        Family::S3_3 if alpha.is_zero() && !tau.is_zero() => {
            certify(alg, family, None, &[x0.scale(&tau), y, z])
        }
        Family::S3_4 if !sigma.is_zero() => {
            let b = (&sigma - &tau) / int(2);
            let z = combo(alg, &[(&one, &z), (&b, &x0)]);
            certify(alg, family, None, &[x0.scale(&sigma), y, z])
        }
        Family::S3_2 if sigma.is_zero() && !alpha.is_zero() => {
            let y = combo(alg, &[(&one, &y), (&-kappa, &x0)]);
            let z = combo(alg, &[(&one, &z), (&-(tau / &alpha), &x0)]);
            certify(alg, family, Some(alpha), &[x0, y, z])
        }
        _ => None,
    }
}

/// `dim Leib = 2`: `A² = Leib` is left central, so only `L_z` on `A²` and
/// `[z, z]` matter, and `z ↦ z + n` moves `[z, z]` by `L_z n`.
fn solvable_leib2(alg: &Algebra, derived: &Subspace, spectral: &Spectral) -> Option<Found> {
    let w = alg.basis_vector(derived.complement_indices()[0]);
    let m = restricted_left(alg, &w, derived);
    let id = Matrix::identity(2);
    let coords = |v: &Vector| derived.coordinates(v);
    let lift = |c: &Vector| derived.combine(c);
    if !spectral.diagonalizable {
        let mu = m.trace() / int(2);
        let z = w.scale(&mu.recip());
        let lz = m.scale(&mu.recip());
        let shifted = &lz - &id;
        let xv = (0..2).map(|k| Vector::unit(2, k)).find(|v| !shifted.mul_vec(v).is_zero())?;
        let yv = shifted.mul_vec(&xv);
        let n = lz.inverse()?.mul_vec(&coords(&alg.mul(&z, &z))?).scale(&int(-1));
        let z = &z + &lift(&n);
        return certify(alg, Family::S3_6, None, &[lift(&xv), lift(&yv), z]);
    }
    if spectral.zero_eigenvalue {
        let mu = m.trace();
        let z = w.scale(&mu.recip());
        let lz = m.scale(&mu.recip());
        let zz = coords(&alg.mul(&z, &z))?;
        let k1 = lz.mul_vec(&zz);
        let k0 = &zz - &k1;
        if k0.is_zero() {
            return None;
        }
        let y1 = kernel(&(&lz - &id)).vectors().pop()?;
        let x = &k0 + &y1;
        let n = &y1 - &k1;
        let z = &z + &lift(&n);
        return certify(alg, Family::S3_7, None, &[lift(&x), lift(&y1), z]);
    }
    let Some((l1, l2)) = rational_eigenvalues(&m) else {
        let id = CatalogId {
            family: Family::S3_5,
            parameter: spectral.ratio_t.clone(),
        };
        return Some(Found::Invariants(
            id,
            "L_w on A^2 has irrational eigenvalues; their ratio class is the invariant".into(),
        ));
    };
    let z = w.scale(&l2.recip());
    let lz = m.scale(&l2.recip());
    let (xv, yv) = if l1 == l2 {
        (Vector::unit(2, 0), Vector::unit(2, 1))
    } else {
        let eig = |l: &Scalar| kernel(&(&m - &id.scale(l))).vectors().pop();
        (eig(&l1)?, eig(&l2)?)
    };
    let n = lz.inverse()?.mul_vec(&coords(&alg.mul(&z, &z))?).scale(&int(-1));
    let z = &z + &lift(&n);
    certify(alg, Family::S3_5, Some(l1 / l2), &[lift(&xv), lift(&yv), z])
}

fn route(alg: &Algebra, fp: &Fingerprint) -> Option<Found> {
    let n = alg.dim();
    let full = Subspace::full(n);
    let derived = crate::algebra::product_subspaces(alg, &full, &full).ok()?;
    match (n, fp.nilpotent, fp.solvable) {
        (2, _, _) => dim2(alg),
        (3, true, _) => nilpotent3(alg, &derived),
        (3, false, true) => {
            if derived.dim() == 1 {
                return s3_1(alg, &derived);
            }
            if derived.dim() != 2 {
                return None;
            }
            match fp.dim_leib {
                1 => {
                    let family = match fp.square_form_rank {
                        1 => Family::S3_3,
                        2 => Family::S3_2,
                        3 => Family::S3_4,
                        _ => return None,
                    };
                    solvable_leib1(alg, &derived, &leib_ideal(alg), family)
                }
                2 => solvable_leib2(alg, &derived, fp.spectral.as_ref()?),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Classifies a left Leibniz algebra.
///
/// Lie algebras (antisymmetric constants) are reported as `lie` in any
/// dimension; non-Lie algebras outside dimensions 2 and 3, and any input that
/// no recipe certifies, as `unclassified`.
pub fn classify(alg: &Algebra) -> Result<Classification> {
    let fingerprint = fingerprint(alg)?;
    if alg.is_antisymmetric() {
        return Ok(Classification {
            id: CatalogId::plain(Family::Lie),
            fingerprint,
            certificate: Certificate::Antisymmetric,
        });
    }
    let (id, certificate) = match route(alg, &fingerprint) {
        Some(Found::Iso(id, p, alpha)) => (id, Certificate::Isomorphism { p, alpha }),
        Some(Found::Invariants(id, why)) => (id, Certificate::Invariants(why)),
        None => (CatalogId::plain(Family::Unclassified), Certificate::None),
    };
    Ok(Classification {
        id,
        fingerprint,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::random::{invertible_matrix, seeded};

    fn grid() -> Vec<Scalar> {
        vec![int(2), int(3), int(-2), rat(1, 2)]
    }

    fn catalog() -> Vec<(Family, Option<Scalar>)> {
        let mut out = Vec::new();
        for f in Family::CATALOG {
            if f.has_parameter() {
                out.extend(grid().into_iter().map(|a| (f, Some(a))));
            } else {
                out.push((f, None));
            }
        }
        out
    }

    #[test]
    fn tables_classify_to_themselves() {
        for (f, a) in catalog() {
            let alg = catalog_table(f, a.as_ref()).unwrap();
            let c = classify(&alg).unwrap();
            assert_eq!(c.id, CatalogId::of_table(f, a.as_ref()), "{f:?} {a:?}");
            assert!(matches!(c.certificate, Certificate::Isomorphism { .. }));
        }
    }

    #[test]
    fn classification_survives_basis_changes() {
        let mut rng = seeded(2024);
        for (f, a) in catalog() {
            let alg = catalog_table(f, a.as_ref()).unwrap();
            for _ in 0..10 {
                let p = invertible_matrix(&mut rng, alg.dim());
                let moved = change_basis(&alg, &p).unwrap();
                let c = classify(&moved).unwrap();
                assert_eq!(c.id, CatalogId::of_table(f, a.as_ref()), "{f:?} {a:?}");
                let Certificate::Isomorphism { p, alpha } = &c.certificate else {
                    panic!("{f:?} {a:?} not certified: {:?}", c.certificate);
                };
                let target = catalog_table(f, alpha.as_ref()).unwrap();
                assert!(same_constants(&change_basis(&moved, p).unwrap(), &target));
            }
        }
    }

    #[test]
    fn small_worked_examples() {
        let xyz = ["x", "y", "z"];
        let only = |l: &str, r: &str, k: &str| {
            Algebra::from_table(&xyz, &[(l, r, &[(k, int(1))])]).unwrap()
        };
        assert_eq!(classify(&only("x", "x", "z")).unwrap().id.family, Family::N3_2);
        assert_eq!(classify(&only("z", "x", "x")).unwrap().id.family, Family::S3_1);
        // [x, y] = z alone is the alpha = 0 member of n3_5
        assert_eq!(
            classify(&only("x", "y", "z")).unwrap().id,
            CatalogId {
                family: Family::N3_5,
                parameter: Some(Parameter::Infinity)
            }
        );
        assert_eq!(classify(&sl2()).unwrap().id.family, Family::Lie);
        let heis = Algebra::from_table(
            &xyz,
            &[("x", "y", &[("z", int(1))]), ("y", "x", &[("z", int(-1))])],
        )
        .unwrap();
        assert_eq!(classify(&heis).unwrap().id.family, Family::Lie);
        let big = generate("example_2_4", &[]).unwrap();
        assert_eq!(classify(&big).unwrap().id.family, Family::Unclassified);
        let e22 = generate("example_2_2", &[]).unwrap();
        assert_eq!(classify(&e22).unwrap().id.family, Family::S3_1);
    }

    #[test]
    fn alpha_and_its_inverse_agree() {
        for f in [Family::N3_5, Family::S3_5] {
            let a = classify(&catalog_table(f, Some(&int(2))).unwrap()).unwrap();
            let b = classify(&catalog_table(f, Some(&rat(1, 2))).unwrap()).unwrap();
            assert_eq!(a.id, b.id);
            assert_eq!(a.id.parameter, Some(Parameter::Rational(rat(5, 2))));
        }
    }

    #[test]
    fn irrational_parameters_fall_back_to_invariants() {
        // L_z on A² with eigenvalues 1 ± √2
        let alg = Algebra::from_table(
            &["x", "y", "z"],
            &[("z", "x", &[("x", int(1)), ("y", int(1))]), ("z", "y", &[("x", int(2)), ("y", int(1))])],
        )
        .unwrap();
        let c = classify(&alg).unwrap();
        assert_eq!(c.id.family, Family::S3_5);
        // t = (tr² - 2det)/det = (4 + 2)/(-1)
        assert_eq!(c.id.parameter, Some(Parameter::Rational(int(-6))));
        assert!(matches!(c.certificate, Certificate::Invariants(_)));

        let aniso = Algebra::from_table(
            &["x", "y", "z"],
            &[("x", "x", &[("z", int(1))]), ("y", "y", &[("z", int(1))])],
        )
        .unwrap();
        let c = classify(&aniso).unwrap();
        assert_eq!(c.id.family, Family::N3_3);
        assert!(matches!(c.certificate, Certificate::Invariants(_)));
    }

    #[test]
    fn fingerprints_are_basis_independent() {
        let mut rng = seeded(99);
        for (f, a) in catalog() {
            let alg = catalog_table(f, a.as_ref()).unwrap();
            let fp = fingerprint(&alg).unwrap();
            for _ in 0..5 {
                let p = invertible_matrix(&mut rng, alg.dim());
                assert_eq!(fingerprint(&change_basis(&alg, &p).unwrap()).unwrap(), fp, "{f:?}");
            }
        }
    }
}
