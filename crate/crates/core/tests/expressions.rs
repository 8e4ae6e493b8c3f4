//! Left-normed rewriting against direct evaluation.

use std::collections::HashMap;

use leibniz::algebra::{eval_combination, eval_expr, left_norm, parse_expr, BracketExpr};
use leibniz::classify::{catalog_table, Family};
use leibniz::linalg::{int, rat, Scalar, Vector};
use proptest::prelude::*;

const NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn expr() -> impl Strategy<Value = BracketExpr> {
    let leaf = prop::sample::select(&NAMES[..]).prop_map(BracketExpr::leaf);
    leaf.prop_recursive(4, 16, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| BracketExpr::node(l, r))
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2).prop_map(|(p, q)| rat(p, q))
}

fn binding(dim: usize) -> impl Strategy<Value = HashMap<String, Vector>> {
    prop::collection::vec(prop::collection::vec(scalar(), dim), NAMES.len()).prop_map(|vs| {
        NAMES
            .iter()
            .zip(vs)
            .map(|(n, v)| (n.to_string(), Vector::from(v)))
            .collect()
    })
}

fn dim3_catalog() -> impl Strategy<Value = (Family, Option<Scalar>)> {
    let families: Vec<Family> = Family::CATALOG
        .into_iter()
        .filter(|f| catalog_table(*f, Some(&int(2))).map(|a| a.dim() == 3).unwrap_or(false))
        .collect();
    prop::sample::select(families).prop_flat_map(|f| {
        let alpha = if f.has_parameter() {
            prop::sample::select(vec![int(2), int(3), int(-2), rat(1, 2)]).prop_map(Some).boxed()
        } else {
            Just(None).boxed()
        };
        (Just(f), alpha)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn display_parses_back(e in expr()) {
        prop_assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn words_permute_the_leaves(e in expr()) {
        let mut leaves: Vec<&str> = e.leaves();
        leaves.sort_unstable();
        for (_, w) in left_norm(&e).terms() {
            let mut letters: Vec<&str> = w.iter().map(String::as_str).collect();
            letters.sort_unstable();
            prop_assert_eq!(&letters, &leaves);
        }
    }

    #[test]
    fn left_norm_preserves_values(
        (family, alpha) in dim3_catalog(),
        e in expr(),
        bind in binding(3),
    ) {
        let alg = catalog_table(family, alpha.as_ref()).unwrap();
        let direct = eval_expr(&alg, &e, &bind).unwrap();
        let normed = eval_combination(&alg, &left_norm(&e), &bind).unwrap();
        prop_assert_eq!(direct, normed);
    }
}

#[test]
fn whitespace_is_insignificant() {
    assert_eq!(
        parse_expr(" [ [a , b] ,c ]").unwrap(),
        parse_expr("[[a,b],c]").unwrap()
    );
}
