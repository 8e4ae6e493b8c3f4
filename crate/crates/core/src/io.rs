//! JSON algebra files and report documents.
//!
//! Rationals are always strings (`"3"`, `"-1/2"`) in lowest terms.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "basis": ["x", "y"],
//!   "brackets": [
//!     {"left": "y", "right": "x", "value": {"x": "1"}}
//!   ]
//! }
//! ```

use std::collections::HashSet;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algebra::{check_left_leibniz, check_right_leibniz, leib_ideal, Algebra};
use crate::analysis::{derived_series, lower_central_series, nilpotency_class, radical};
use crate::classify::{CatalogId, Certificate, Classification};
use crate::error::{Error, Result};
use crate::forms::{cartan_solvable, killing};
use crate::linalg::scalar::{format_rational, parse_rational};
use crate::linalg::{Matrix, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub value: IndexMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraFile {
    /// Canonical form: brackets sorted by basis position of `(left, right)`,
    /// zero products dropped, value keys in basis order, zero terms dropped.
    pub fn from_algebra(alg: &Algebra) -> Self {
        let brackets = alg
            .nonzero_products()
            .map(|(i, j, v)| BracketEntry {
                left: alg.name(i).to_string(),
                right: alg.name(j).to_string(),
                value: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| (alg.name(k).to_string(), format_rational(c)))
                    .collect(),
            })
            .collect();
        AlgebraFile {
            dim: alg.dim(),
            basis: alg.names().to_vec(),
            brackets,
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        if self.basis.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: self.basis.len(),
            });
        }
        let mut alg = Algebra::abelian(&self.basis)?;
        let mut seen = HashSet::new();
        for entry in &self.brackets {
            let i = alg.index_of(&entry.left)?;
            let j = alg.index_of(&entry.right)?;
            if !seen.insert((i, j)) {
                return Err(Error::File(format!(
                    "duplicate bracket [{}, {}]",
                    entry.left, entry.right
                )));
            }
            let mut v = Vector::zeros(self.dim);
            for (name, text) in &entry.value {
                v[alg.index_of(name)?] = parse_rational(text)?;
            }
            alg.set_product(i, j, v);
        }
        Ok(alg)
    }
}

/// Parses an algebra file. Syntax errors carry the JSON line and column.
pub fn parse_algebra_file(text: &str) -> Result<Algebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| {
        Error::File(format!("line {} column {}: {e}", e.line(), e.column()))
    })?;
    file.to_algebra()
}

/// Canonical pretty-printed JSON, newline terminated.
pub fn serialize_algebra(alg: &Algebra) -> String {
    let mut out = serde_json::to_string_pretty(&AlgebraFile::from_algebra(alg))
        .expect("plain strings and integers");
    out.push('\n');
    out
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rational(&m[(i, j)])).collect())
        .collect()
}

pub fn vector_strings(v: &Vector) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// The `analyze` report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReportFile {
    pub is_left_leibniz: bool,
    pub is_right_leibniz: bool,
    pub is_lie: bool,
    pub leib_dim: usize,
    pub derived_dims: Vec<usize>,
    pub lcs_dims: Vec<usize>,
    pub solvable: bool,
    pub solvable_cartan: bool,
    pub nilpotent: bool,
    pub class: Option<usize>,
    pub killing_gram: Vec<Vec<String>>,
    pub killing_radical_dim: usize,
    pub killing_nondegenerate: bool,
    pub semisimple: bool,
    pub radical_dim: usize,
    pub classification: CatalogId,
}

/// Builds the report for a left Leibniz algebra.
///
/// A disagreement between the series test and the trace criterion, or a
/// violation of `nilpotent ⇒ solvable` or `semisimple ⇒ nondegenerate`, is
/// reported as an error rather than emitted.
pub fn analysis_report(alg: &Algebra) -> Result<AnalysisReportFile> {
    let left = check_left_leibniz(alg);
    if let Some(v) = left.into_iter().next() {
        return Err(Error::NotLeibniz(v));
    }
    let derived = derived_series(alg)?;
    let lcs = lower_central_series(alg)?;
    let class = nilpotency_class(alg)?;
    let solvable = derived.reaches_zero();
    let solvable_cartan = cartan_solvable(alg)?;
    let k = killing(alg)?;
    let rad = radical(alg)?;
    let leib = leib_ideal(alg);
    let classification = crate::classify::classify(alg)?.id;
    let report = AnalysisReportFile {
        is_left_leibniz: true,
        is_right_leibniz: check_right_leibniz(alg).is_empty(),
        is_lie: leib.is_zero(),
        leib_dim: leib.dim(),
        derived_dims: derived.dims(),
        lcs_dims: lcs.dims(),
        solvable,
        solvable_cartan,
        nilpotent: class.is_some(),
        class,
        killing_gram: matrix_strings(&k.gram),
        killing_radical_dim: k.radical.dim(),
        killing_nondegenerate: k.nondegenerate,
        semisimple: rad.semisimple,
        radical_dim: rad.radical.dim(),
        classification,
    };
    let consistent = report.solvable == report.solvable_cartan
        && (!report.nilpotent || report.solvable)
        && (!report.semisimple || report.killing_nondegenerate);
    if !consistent {
        return Err(Error::CandidateFailed(
            "analysis flags contradict each other".into(),
        ));
    }
    Ok(report)
}

/// The `classify` document: id, fingerprint and certificate.
pub fn classification_json(alg: &Algebra, c: &Classification) -> serde_json::Value {
    let certificate = match &c.certificate {
        Certificate::Isomorphism { p, alpha } => json!({
            "kind": "isomorphism",
            "alpha": alpha.as_ref().map(format_rational),
            "basis": (0..p.cols())
                .map(|k| alg.format_vector(&p.column(k)))
                .collect::<Vec<_>>(),
            "matrix": matrix_strings(p),
        }),
        Certificate::Invariants(why) => json!({"kind": "invariants", "reason": why}),
        Certificate::Antisymmetric => json!({"kind": "antisymmetric"}),
        Certificate::None => json!({"kind": "none"}),
    };
    json!({
        "id": c.id,
        "label": c.id.to_string(),
        "fingerprint": c.fingerprint,
        "certificate": certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{fixture_specs, generate, Family};

    const EXAMPLE_2_1: &str = r#"{
        "dim": 2,
        "basis": ["x", "y"],
        "brackets": [
            {"left": "y", "right": "y", "value": {"x": "1"}},
            {"left": "y", "right": "x", "value": {"x": "1"}}
        ]
    }"#;

    #[test]
    fn parses_and_canonicalizes() {
        let alg = parse_algebra_file(EXAMPLE_2_1).unwrap();
        assert_eq!(alg.nonzero_products().count(), 2);
        let text = serialize_algebra(&alg);
        let file: AlgebraFile = serde_json::from_str(&text).unwrap();
        // sorted by (left, right) basis position
        assert_eq!((file.brackets[0].right.as_str(), file.brackets[1].right.as_str()), ("x", "y"));
        assert_eq!(serialize_algebra(&parse_algebra_file(&text).unwrap()), text);
    }

    #[test]
    fn empty_brackets_give_the_abelian_algebra() {
        let alg = parse_algebra_file(r#"{"dim": 2, "basis": ["p", "q"], "brackets": []}"#).unwrap();
        assert!(alg.is_abelian());
    }

    #[test]
    fn rejects_bad_files() {
        let with = |value: &str, extra: &str| {
            format!(
                r#"{{"dim": 2, "basis": ["x", "z"], "brackets": [{{"left": "x", "right": "x", "value": {value}}}{extra}]}}"#
            )
        };
        assert!(matches!(
            parse_algebra_file(&with(r#"{"z": "2/4"}"#, "")),
            Err(Error::MalformedRational { .. })
        ));
        assert!(matches!(
            parse_algebra_file(&with(r#"{"w": "1"}"#, "")),
            Err(Error::UnknownName(_))
        ));
        let dup = with(
            r#"{"z": "1"}"#,
            r#", {"left": "x", "right": "x", "value": {"z": "2"}}"#,
        );
        assert!(matches!(parse_algebra_file(&dup), Err(Error::File(_))));
        assert!(matches!(
            parse_algebra_file(r#"{"dim": 3, "basis": ["x"], "brackets": []}"#),
            Err(Error::DimensionMismatch { .. })
        ));
        let Err(Error::File(msg)) = parse_algebra_file("{\n  \"dim\": 2,\n  oops\n}") else {
            panic!("syntax error expected");
        };
        assert!(msg.starts_with("line 3 column"), "{msg}");
    }

    #[test]
    fn generated_algebras_round_trip() {
        for (stem, name, params) in fixture_specs() {
            let alg = generate(name, &params).unwrap();
            let text = serialize_algebra(&alg);
            let back = parse_algebra_file(&text).unwrap();
            assert_eq!(back, alg, "{stem}");
            assert_eq!(serialize_algebra(&back), text);
        }
    }

    #[test]
    fn report_of_s3_1() {
        let r = analysis_report(&generate("s3_1", &[]).unwrap()).unwrap();
        assert!(!r.nilpotent && r.solvable && r.solvable_cartan);
        assert_eq!(r.classification.family, Family::S3_1);
        assert_eq!(r.derived_dims, vec![3, 1, 0]);
    }
}
