//! Golden matrices transcribed from the worked examples. The JSON files in
//! `fixtures/` are compiled in, so the checks need no files at run time.

use serde::{Deserialize, Serialize};

use crate::construct::{build_even, dispatch_with, extend_even_to_4k1, BuildOptions, BuildReport, Theorem};
use crate::error::{BuildError, IoError};
use crate::graph::build_amalgam;
use crate::magic::{MagicMethod, MagicRectangle};
use crate::matrix::{LabelingMatrix, MatrixKind};
use crate::verify::{check, matrix_to_labeling};

const SOURCES: [(&str, &str); 10] = [
    ("3k6.json", include_str!("../fixtures/3k6.json")),
    ("a_3k6_k1.json", include_str!("../fixtures/a_3k6_k1.json")),
    ("3k5.json", include_str!("../fixtures/3k5.json")),
    ("a_2k7_k3.json", include_str!("../fixtures/a_2k7_k3.json")),
    ("a_3k7_k4.json", include_str!("../fixtures/a_3k7_k4.json")),
    ("a_2k7_k4.json", include_str!("../fixtures/a_2k7_k4.json")),
    ("2k7.json", include_str!("../fixtures/2k7.json")),
    ("2k9.json", include_str!("../fixtures/2k9.json")),
    ("a_2k9_k1.json", include_str!("../fixtures/a_2k9_k1.json")),
    ("a_2k7_k2.json", include_str!("../fixtures/a_2k7_k2.json")),
];

/// A printed value that is wrong, with the value the fixture uses instead.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub location: String,
    pub printed: u64,
    pub corrected: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Fixture {
    pub name: String,
    /// Which worked example the data was transcribed from.
    pub source: String,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub theorem: Theorem,
    /// The printed magic rectangle, for builders that take one.
    pub omega: Option<Vec<Vec<u64>>>,
    pub entries: Vec<Vec<Option<u64>>>,
    pub weights: Vec<u64>,
    pub diag_sum: Option<u64>,
    pub colors: usize,
    /// The color count is the stated value, not just a bound.
    pub exact: bool,
    pub errata: Vec<Erratum>,
    pub notes: String,
}

impl Fixture {
    pub fn matrix(&self) -> Result<LabelingMatrix, IoError> {
        let g = build_amalgam(self.m, self.n, self.r)?;
        let kind = if self.entries.first().and_then(|r| r.first()).is_some_and(Option::is_some) {
            MatrixKind::Total
        } else {
            MatrixKind::EdgeOnly
        };
        LabelingMatrix::from_rows(g, kind, self.entries.clone())
            .ok_or_else(|| IoError::Malformed(format!("{}: entries do not fit the graph", self.name)))
    }

    pub fn omega(&self) -> Option<MagicRectangle> {
        self.omega.clone().map(|rows| MagicRectangle::from_rows(rows).expect("fixture omega is rectangular"))
    }

    /// Runs the builder this fixture documents. The printed `Ω` is injected
    /// when `inject` is set and the fixture has one.
    pub fn build(&self, inject: bool, method: MagicMethod) -> Result<BuildReport, BuildError> {
        if self.theorem == Theorem::EvenExtended {
            return extend_even_to_4k1(&build_even(self.m, self.n - 1, 0)?);
        }
        let opts = match self.omega() {
            Some(o) if inject => BuildOptions::with_omega(o),
            _ => BuildOptions::with_method(method),
        };
        dispatch_with(self.m, self.n, self.r, &opts)
    }
}

/// Every fixture, in a fixed order.
pub fn all() -> Vec<Fixture> {
    SOURCES
        .iter()
        .map(|(file, text)| serde_json::from_str(text).unwrap_or_else(|e| panic!("fixture {file}: {e}")))
        .collect()
}

pub fn by_name(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}

/// Result of checking one fixture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub failures: Vec<String>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the stored data on its own, then the builder against it: with the
/// printed `Ω` the matrix must match cell for cell, and with a generated
/// rectangle the weights must still match.
pub fn check_fixture(f: &Fixture, method: MagicMethod) -> FixtureOutcome {
    let mut failures = Vec::new();
    let mut fail = |s: String| failures.push(s);
    match f.matrix() {
        Err(e) => fail(format!("stored matrix: {e}")),
        Ok(mat) => match matrix_to_labeling(&mat, mat.graph()).and_then(|l| check(mat.graph(), &l)) {
            Err(e) => fail(format!("stored matrix: {e}")),
            Ok(rep) => {
                if !rep.is_valid() {
                    fail(format!("stored matrix is not a valid labeling ({} violations)", rep.violations.len()));
                }
                if rep.weights != f.weights {
                    fail("stored weights disagree with stored matrix".into());
                }
                if rep.colors != f.colors {
                    fail(format!("stored matrix has {} colors, expected {}", rep.colors, f.colors));
                }
            }
        },
    }
    match f.build(true, method) {
        Err(e) => fail(format!("build: {e}")),
        Ok(rep) => {
            if rep.theorem != f.theorem {
                fail(format!("built with {}, expected {}", rep.theorem, f.theorem));
            }
            if rep.matrix.rows() != f.entries {
                fail("built matrix differs from the stored matrix".into());
            }
            if rep.weights != f.weights {
                fail("built weights differ".into());
            }
            if f.diag_sum.is_some() && rep.diag_sum != f.diag_sum {
                fail(format!("diagonal sum {:?}, expected {:?}", rep.diag_sum, f.diag_sum));
            }
            if rep.colors != f.colors || rep.is_exact() != f.exact {
                fail(format!(
                    "{} colors (exact: {}), expected {} (exact: {})",
                    rep.colors,
                    rep.is_exact(),
                    f.colors,
                    f.exact
                ));
            }
        }
    }
    if f.omega.is_some() {
        match f.build(false, method) {
            Err(e) => fail(format!("build with generated rectangle: {e}")),
            Ok(rep) => {
                if rep.weights != f.weights {
                    fail("weights depend on the magic rectangle".into());
                }
            }
        }
    }
    FixtureOutcome { name: f.name.clone(), failures }
}
