#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use leibniz::io::parse_algebra_file;
use leibniz::Algebra;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn load(stem: &str) -> Algebra {
    let path = fixture_dir().join(format!("{stem}.json"));
    let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_algebra_file(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Every shipped fixture, sorted by file name.
pub fn all() -> Vec<(String, Algebra)> {
    let mut stems: Vec<String> = fs::read_dir(fixture_dir())
        .expect("fixture directory")
        .filter_map(|e| {
            let p = e.ok()?.path();
            if p.extension()? != "json" {
                return None;
            }
            Some(p.file_stem()?.to_string_lossy().into_owned())
        })
        .collect();
    stems.sort();
    stems
        .into_iter()
        .map(|s| {
            let a = load(&s);
            (s, a)
        })
        .collect()
}
