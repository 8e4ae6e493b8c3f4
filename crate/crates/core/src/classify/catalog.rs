//! Multiplication tables of the catalog and of the worked examples.

use num_traits::{ToPrimitive, Zero};

use crate::algebra::{Algebra, ProductSpec};
use crate::error::{Error, Result};
use crate::linalg::{int, rat, Matrix, Scalar, Vector};

use super::Family;

/// Names accepted by [`generate`] besides the catalog families.
pub const FIXTURE_NAMES: &[&str] = &[
    "example_2_1",
    "example_2_2",
    "example_2_3",
    "example_2_4",
    "example_2_5",
    "example_5_6",
    "example_5_8",
    "cyclic",
    "sl2",
    "sl2_module",
    "abelian",
];

fn illegal(family: &str, reason: impl Into<String>) -> Error {
    Error::IllegalParameter {
        family: family.to_string(),
        reason: reason.into(),
    }
}

fn table(names: &[&str], products: &[(&str, &str, &[(&str, i64)])]) -> Algebra {
    let owned: Vec<(&str, &str, Vec<(&str, Scalar)>)> = products
        .iter()
        .map(|(l, r, t)| (*l, *r, t.iter().map(|(k, c)| (*k, int(*c))).collect()))
        .collect();
    let specs: Vec<ProductSpec<'_>> = owned.iter().map(|(l, r, t)| (*l, *r, t.as_slice())).collect();
    Algebra::from_table(names, &specs).expect("static table")
}

const XYZ: &[&str] = &["x", "y", "z"];

fn set(alg: &mut Algebra, l: &str, r: &str, terms: &[(&str, Scalar)]) {
    let (i, j) = (alg.index_of(l).unwrap(), alg.index_of(r).unwrap());
    let mut v = Vector::zeros(alg.dim());
    for (k, c) in terms {
        v[alg.index_of(k).unwrap()] += c;
    }
    alg.set_product(i, j, v);
}

fn expect_params(family: &str, params: &[Scalar], count: usize) -> Result<()> {
    if params.len() != count {
        return Err(illegal(
            family,
            format!("expected {count} parameter(s), got {}", params.len()),
        ));
    }
    Ok(())
}

fn small_count(family: &str, p: &Scalar, min: usize) -> Result<usize> {
    let n = p
        .is_integer()
        .then(|| p.to_integer().to_usize())
        .flatten()
        .filter(|&n| n >= min && n <= 64)
        .ok_or_else(|| illegal(family, format!("expected an integer in {min}..=64, got {p}")))?;
    Ok(n)
}

/// The table of a catalog family. `alpha` is required for `n3_5`, `s3_2` and `s3_5`.
pub fn catalog_table(family: Family, alpha: Option<&Scalar>) -> Result<Algebra> {
    let name = family.name();
    let needs_alpha = matches!(family, Family::N3_5 | Family::S3_2 | Family::S3_5);
    let alpha = match (needs_alpha, alpha) {
        (true, Some(a)) => a.clone(),
        (true, None) => return Err(illegal(name, "missing parameter alpha")),
        (false, Some(_)) => return Err(illegal(name, "takes no parameter")),
        (false, None) => Scalar::zero(),
    };
    let alg = match family {
        Family::Dim2NilpotentCyclic => table(&["a", "a2"], &[("a", "a", &[("a2", 1)])]),
        Family::Dim2SolvableCyclic => table(
            &["a", "a2"],
            &[("a", "a", &[("a2", 1)]), ("a", "a2", &[("a2", 1)])],
        ),
        Family::N3_1 => table(XYZ, &[("x", "x", &[("y", 1)]), ("x", "y", &[("z", 1)])]),
        Family::N3_2 => table(XYZ, &[("x", "x", &[("z", 1)])]),
        Family::N3_3 => table(XYZ, &[("x", "y", &[("z", 1)]), ("y", "x", &[("z", 1)])]),
        Family::N3_4 => table(
            XYZ,
            &[
                ("x", "y", &[("z", 1)]),
                ("y", "x", &[("z", -1)]),
                ("y", "y", &[("z", 1)]),
            ],
        ),
        Family::N3_5 => {
            if alpha == int(1) || alpha == int(-1) {
                return Err(illegal(name, "alpha must not be 1 or -1"));
            }
            let mut a = table(XYZ, &[("x", "y", &[("z", 1)])]);
            set(&mut a, "y", "x", &[("z", alpha)]);
            a
        }
        Family::S3_1 => table(XYZ, &[("z", "x", &[("x", 1)])]),
        Family::S3_2 => {
            if alpha.is_zero() {
                return Err(illegal(name, "alpha must be nonzero"));
            }
            let mut a = table(XYZ, &[("z", "y", &[("y", 1)]), ("y", "z", &[("y", -1)])]);
            set(&mut a, "z", "x", &[("x", alpha)]);
            a
        }
        Family::S3_3 => table(
            XYZ,
            &[
                ("z", "y", &[("y", 1)]),
                ("y", "z", &[("y", -1)]),
                ("z", "z", &[("x", 1)]),
            ],
        ),
        Family::S3_4 => table(
            XYZ,
            &[
                ("z", "x", &[("x", 2)]),
                ("y", "y", &[("x", 1)]),
                ("z", "y", &[("y", 1)]),
                ("y", "z", &[("y", -1)]),
                ("z", "z", &[("x", 1)]),
            ],
        ),
        Family::S3_5 => {
            if alpha.is_zero() {
                return Err(illegal(name, "alpha must be nonzero"));
            }
            let mut a = table(XYZ, &[("z", "y", &[("y", 1)])]);
            set(&mut a, "z", "x", &[("x", alpha)]);
            a
        }
        Family::S3_6 => table(XYZ, &[("z", "x", &[("x", 1), ("y", 1)]), ("z", "y", &[("y", 1)])]),
        Family::S3_7 => table(
            XYZ,
            &[
                ("z", "x", &[("y", 1)]),
                ("z", "y", &[("y", 1)]),
                ("z", "z", &[("x", 1)]),
            ],
        ),
        Family::Lie | Family::Unclassified => {
            return Err(illegal(name, "not a catalog table"));
        }
    };
    Ok(alg)
}

/// Cyclic algebra on `a, a2, ..., an` with `[a, a^k] = a^(k+1)` for `k < n`
/// and `[a, a^n] = Σ_{k≥2} α_k a^k`; `α_1 = 0` is forced by the identity.
pub fn cyclic(n: usize, alphas: &[Scalar]) -> Result<Algebra> {
    if n == 0 {
        return Err(illegal("cyclic", "dimension must be positive"));
    }
    if alphas.len() > n.saturating_sub(1) {
        return Err(illegal("cyclic", format!("at most {} coefficients", n - 1)));
    }
    let names: Vec<String> = (1..=n)
        .map(|k| if k == 1 { "a".to_string() } else { format!("a{k}") })
        .collect();
    let mut alg = Algebra::abelian(&names)?;
    for k in 0..n.saturating_sub(1) {
        alg.set_product(0, k, Vector::unit(n, k + 1));
    }
    if n >= 2 {
        let mut last = Vector::zeros(n);
        for (k, a) in alphas.iter().enumerate() {
            last[k + 1] = a.clone();
        }
        alg.set_product(0, n - 1, last);
    }
    Ok(alg)
}

pub fn sl2() -> Algebra {
    table(
        &["h", "e", "f"],
        &[
            ("h", "e", &[("e", 2)]),
            ("e", "h", &[("e", -2)]),
            ("h", "f", &[("f", -2)]),
            ("f", "h", &[("f", 2)]),
            ("e", "f", &[("h", 1)]),
            ("f", "e", &[("h", -1)]),
        ],
    )
}

/// `sl2 ∔ V(m_1) ⊕ ... ⊕ V(m_r)` with `sl2` acting on the left and the right action zero:
/// `h·v_i = (m - 2i) v_i`, `f·v_i = v_(i+1)`, `e·v_i = i(m + 1 - i) v_(i-1)`.
pub fn sl2_module(ms: &[usize]) -> Result<Algebra> {
    if ms.is_empty() || ms.contains(&0) {
        return Err(illegal("sl2_module", "need at least one module V(m) with m >= 1"));
    }
    let mut names: Vec<String> = vec!["h".into(), "e".into(), "f".into()];
    for (k, &m) in ms.iter().enumerate() {
        for i in 0..=m {
            names.push(if ms.len() == 1 {
                format!("v{i}")
            } else {
                format!("v{}_{i}", k + 1)
            });
        }
    }
    let base = sl2();
    let mut alg = Algebra::abelian(&names)?;
    let n = alg.dim();
    let embed = |v: &Vector| -> Vector {
        let mut w = Vector::zeros(n);
        for (i, c) in v.iter().enumerate() {
            w[i] = c.clone();
        }
        w
    };
    for i in 0..3 {
        for j in 0..3 {
            alg.set_product(i, j, embed(base.product(i, j)));
        }
    }
    let mut offset = 3;
    for &m in ms {
        for i in 0..=m {
            let col = offset + i;
            alg.set_product(0, col, Vector::unit(n, col).scale(&int(m as i64 - 2 * i as i64)));
            if i < m {
                alg.set_product(2, col, Vector::unit(n, col + 1));
            }
            if i > 0 {
                alg.set_product(1, col, Vector::unit(n, col - 1).scale(&int((i * (m + 1 - i)) as i64)));
            }
        }
        offset += m + 1;
    }
    Ok(alg)
}

/// `[a, b] = (Ta)b - b(Ta)` on an associative algebra with an idempotent `T`.
/// The associative product is given as an [`Algebra`] table.
pub fn from_associative(assoc: &Algebra, t: &Matrix) -> Result<Algebra> {
    let n = assoc.dim();
    if t.rows() != n || t.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: t.rows(),
        });
    }
    if &(t * t) != t {
        return Err(illegal("example_2_2", "T is not idempotent"));
    }
    let basis = assoc.basis_vectors();
    for a in &basis {
        for b in &basis {
            for c in &basis {
                let ab = assoc.mul(a, b);
                let bc = assoc.mul(b, c);
                if assoc.mul(&ab, c) != assoc.mul(a, &bc) {
                    return Err(Error::InvalidArgument("product is not associative".into()));
                }
            }
        }
    }
    let mut out = Algebra::abelian(assoc.names())?;
    for (i, a) in basis.iter().enumerate() {
        let ta = t.mul_vec(a);
        for (j, b) in basis.iter().enumerate() {
            out.set_product(i, j, &assoc.mul(&ta, b) - &assoc.mul(b, &ta));
        }
    }
    Ok(out)
}

fn upper_triangular_2x2() -> Algebra {
    table(
        &["e11", "e12", "e22"],
        &[
            ("e11", "e11", &[("e11", 1)]),
            ("e11", "e12", &[("e12", 1)]),
            ("e12", "e22", &[("e12", 1)]),
            ("e22", "e22", &[("e22", 1)]),
        ],
    )
}

fn example(name: &str) -> Algebra {
    match name {
        "example_2_1" | "example_5_8" => table(
            &["x", "y"],
            &[("y", "x", &[("x", 1)]), ("y", "y", &[("x", 1)])],
        ),
        "example_2_2" => {
            // T projects onto the diagonal
            let t = Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
            from_associative(&upper_triangular_2x2(), &t).expect("idempotent")
        }
        "example_2_3" => cyclic(3, &[]).expect("valid"),
        "example_2_4" => table(
            &["x", "a", "b", "c", "d"],
            &[
                ("a", "b", &[("c", 1)]),
                ("b", "a", &[("d", 1)]),
                ("x", "a", &[("a", 1)]),
                ("a", "x", &[("a", -1)]),
                ("x", "c", &[("c", 1)]),
                ("x", "d", &[("d", 1)]),
                ("c", "x", &[("d", 1)]),
                ("d", "x", &[("d", -1)]),
            ],
        ),
        // w stands for n^2
        "example_2_5" => table(
            &["u", "n", "k", "w"],
            &[
                ("u", "n", &[("u", 1)]),
                ("n", "u", &[("u", -1), ("k", 1)]),
                ("u", "w", &[("k", 1)]),
                ("n", "k", &[("k", -1)]),
                ("n", "n", &[("w", 1)]),
            ],
        ),
        "example_5_6" => sl2_module(&[1])
            .and_then(|a| a.renamed(&["h", "e", "f", "x0", "x1"]))
            .expect("valid"),
        _ => unreachable!("unknown example {name}"),
    }
}

/// Builds a catalog table or a named fixture.
///
/// Parameters: `alpha` for `n3_5`, `s3_2`, `s3_5`; `n, α_2, ..., α_n` for
/// `cyclic`; `m_1, ..., m_r` for `sl2_module`; `n` for `abelian`.
pub fn generate(name: &str, params: &[Scalar]) -> Result<Algebra> {
    if let Some(family) = Family::from_name(name) {
        let needs_alpha = matches!(family, Family::N3_5 | Family::S3_2 | Family::S3_5);
        expect_params(name, params, usize::from(needs_alpha))?;
        return catalog_table(family, params.first());
    }
    match name {
        "cyclic" => {
            let (n, alphas) = params
                .split_first()
                .ok_or_else(|| illegal(name, "missing dimension"))?;
            cyclic(small_count(name, n, 1)?, alphas)
        }
        "sl2" => {
            expect_params(name, params, 0)?;
            Ok(sl2())
        }
        "sl2_module" => {
            let ms = params
                .iter()
                .map(|p| small_count(name, p, 1))
                .collect::<Result<Vec<_>>>()?;
            sl2_module(&ms)
        }
        "abelian" => {
            expect_params(name, params, 1)?;
            let n = small_count(name, &params[0], 0)?;
            let names: Vec<String> = (1..=n).map(|k| format!("e{k}")).collect();
            Algebra::abelian(&names)
        }
        _ if FIXTURE_NAMES.contains(&name) => {
            expect_params(name, params, 0)?;
            Ok(example(name))
        }
        _ => Err(Error::InvalidArgument(format!("unknown algebra name {name:?}"))),
    }
}

/// `α` values on which parametrized families are exercised.
pub fn parameter_grid() -> Vec<Scalar> {
    vec![int(2), int(3), int(-2), rat(1, 2)]
}

fn stem_of(alpha: &Scalar) -> String {
    alpha.to_string().replace('-', "m").replace('/', "_")
}

/// The shipped fixture set as `(file stem, generator name, parameters)`:
/// the named examples, every catalog table on the parameter grid, and a few
/// parametrized constructions.
pub fn fixture_specs() -> Vec<(String, &'static str, Vec<Scalar>)> {
    let mut out: Vec<(String, &'static str, Vec<Scalar>)> = FIXTURE_NAMES
        .iter()
        .filter(|n| !matches!(**n, "cyclic" | "sl2_module" | "abelian"))
        .map(|n| (n.to_string(), *n, vec![]))
        .collect();
    out.push(("cyclic_2_solvable".into(), "cyclic", vec![int(2), int(1)]));
    out.push(("cyclic_3".into(), "cyclic", vec![int(3)]));
    out.push(("cyclic_4".into(), "cyclic", vec![int(4)]));
    out.push(("sl2_module_2".into(), "sl2_module", vec![int(2)]));
    out.push(("abelian_2".into(), "abelian", vec![int(2)]));
    for family in Family::CATALOG {
        if family.has_parameter() {
            for a in parameter_grid() {
                out.push((format!("{}_alpha_{}", family.name(), stem_of(&a)), family.name(), vec![a]));
            }
        } else {
            out.push((family.name().to_string(), family.name(), vec![]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_left_leibniz, leib_ideal, product_subspaces};
    use crate::linalg::Subspace;

    #[test]
    fn every_table_is_left_leibniz() {
        let grid = [int(2), int(3), int(-2), rat(1, 2)];
        for family in Family::CATALOG {
            let params: Vec<Option<&Scalar>> = if family.has_parameter() {
                grid.iter().map(Some).collect()
            } else {
                vec![None]
            };
            for p in params {
                let alg = catalog_table(family, p).unwrap();
                assert!(check_left_leibniz(&alg).is_empty(), "{family:?} {p:?}");
            }
        }
        for name in FIXTURE_NAMES {
            let params = match *name {
                "cyclic" => vec![int(4), int(1), int(2)],
                "sl2_module" => vec![int(2), int(1)],
                "abelian" => vec![int(2)],
                _ => vec![],
            };
            let alg = generate(name, &params).unwrap();
            assert!(check_left_leibniz(&alg).is_empty(), "{name}");
        }
    }

    #[test]
    fn example_2_1_table() {
        let a = generate("example_2_1", &[]).unwrap();
        assert_eq!(a.names(), ["x", "y"]);
        assert_eq!(a.nonzero_products().count(), 2);
        assert_eq!(a.product(1, 0), &Vector::from_ints(&[1, 0]));
        assert_eq!(a.product(1, 1), &Vector::from_ints(&[1, 0]));
    }

    #[test]
    fn cyclic_two_with_zero_alpha_is_nilpotent() {
        let a = generate("cyclic", &[int(2), int(0)]).unwrap();
        assert_eq!(a, catalog_table(Family::Dim2NilpotentCyclic, None).unwrap());
    }

    #[test]
    fn sl2_module_one_is_perfect_with_two_dimensional_leib() {
        let a = generate("sl2_module", &[int(1)]).unwrap();
        let leib = leib_ideal(&a);
        assert_eq!(
            leib,
            Subspace::span(5, &[Vector::unit(5, 3), Vector::unit(5, 4)])
        );
        let full = Subspace::full(5);
        assert!(product_subspaces(&a, &full, &full).unwrap().is_full());
    }

    #[test]
    fn example_2_2_products() {
        let a = generate("example_2_2", &[]).unwrap();
        // [e11, e12] = e12, [e22, e12] = -e12, nothing else
        assert_eq!(a.nonzero_products().count(), 2);
        assert_eq!(a.product(0, 1), &Vector::from_ints(&[0, 1, 0]));
        assert_eq!(a.product(2, 1), &Vector::from_ints(&[0, -1, 0]));
    }

    #[test]
    fn illegal_parameters() {
        assert!(matches!(
            generate("n3_5", &[int(1)]),
            Err(Error::IllegalParameter { .. })
        ));
        assert!(generate("n3_5", &[int(-1)]).is_err());
        assert!(generate("s3_2", &[int(0)]).is_err());
        assert!(generate("s3_1", &[int(0)]).is_err());
        assert!(generate("cyclic", &[int(2), int(1), int(1)]).is_err());
        assert!(generate("nope", &[]).is_err());
        let t = Matrix::from_ints(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        assert!(matches!(
            from_associative(&upper_triangular_2x2(), &t),
            Err(Error::IllegalParameter { .. })
        ));
    }

    #[test]
    fn identity_operator_gives_the_commutator_algebra() {
        let a = from_associative(&upper_triangular_2x2(), &Matrix::identity(3)).unwrap();
        assert!(a.is_antisymmetric());
    }
}
