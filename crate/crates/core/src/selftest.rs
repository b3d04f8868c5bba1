//! Golden fixtures plus a property sweep over small parameters, usable from
//! tests and from the command line.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::{build_even, dispatch_with, extend_even_to_4k1, BuildOptions, BuildReport, Exactness, Theorem};
use crate::error::BuildError;
use crate::fixtures::{self, check_fixture, FixtureOutcome};
use crate::magic::MagicMethod;
use crate::verify::{check, matrix_to_labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Fixtures,
    Properties,
    All,
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fixtures" => Ok(Scope::Fixtures),
            "properties" => Ok(Scope::Properties),
            "all" => Ok(Scope::All),
            _ => Err(format!("unknown scope {s:?}; use fixtures, properties or all")),
        }
    }
}

/// Parameter ranges for the property sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sweep {
    pub copies: Vec<usize>,
    pub orders: Vec<usize>,
}

impl Default for Sweep {
    fn default() -> Self {
        Sweep { copies: vec![2, 3, 4], orders: (2..=10).collect() }
    }
}

impl Sweep {
    /// Every `(m, n, r)` with `r < n`.
    pub fn cases(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for &m in &self.copies {
            for &n in &self.orders {
                out.extend((0..n).map(|r| (m, n, r)));
            }
        }
        out
    }
}

/// A parameter triple `(m, n, r)` with no builder, and the reason.
pub type Skipped = ((usize, usize, usize), String);

/// One builder output and the invariants it broke.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub theorem: Theorem,
    pub colors: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub fixtures: Vec<FixtureOutcome>,
    pub properties: Vec<PropertyOutcome>,
    /// Parameter triples no builder covers, with the reason.
    pub skipped: Vec<Skipped>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.fixtures.iter().all(FixtureOutcome::passed) && self.properties.iter().all(|p| p.failures.is_empty())
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.fixtures {
            let status = if o.passed() { "ok" } else { "FAILED" };
            writeln!(f, "fixture {:<10} {status}", o.name)?;
            for msg in &o.failures {
                writeln!(f, "    {msg}")?;
            }
        }
        for p in self.properties.iter().filter(|p| !p.failures.is_empty()) {
            writeln!(f, "({},{},{}) {}: {}", p.m, p.n, p.r, p.theorem, p.failures.join("; "))?;
        }
        if !self.properties.is_empty() {
            let bad = self.properties.iter().filter(|p| !p.failures.is_empty()).count();
            writeln!(
                f,
                "properties: {} outputs checked, {bad} failed, {} skipped",
                self.properties.len(),
                self.skipped.len()
            )?;
        }
        let fx_bad = self.fixtures.iter().filter(|o| !o.passed()).count();
        if !self.fixtures.is_empty() {
            writeln!(f, "fixtures: {} checked, {fx_bad} failed", self.fixtures.len())?;
        }
        Ok(())
    }
}

/// Checks one builder output against the invariants every builder promises.
pub fn check_properties(rep: &BuildReport) -> Vec<String> {
    let mut failures = Vec::new();
    let g = *rep.graph();
    let (m, n, k) = (g.m(), g.n(), g.private_per_copy());
    match matrix_to_labeling(&rep.matrix, &g).and_then(|l| check(&g, &l)) {
        Err(e) => failures.push(format!("verification: {e}")),
        Ok(v) => {
            if !v.bijective {
                failures.push("labels are not a bijection".into());
            }
            if !v.proper {
                failures.push(format!("{} adjacent pairs share a weight", v.violations.len()));
            }
            if v.weights != rep.weights {
                failures.push("reported weights differ from recomputed weights".into());
            }
        }
    }
    // the bound theorems let the last vertex of each copy vary
    let invariant_rows = match rep.theorem {
        Theorem::Mkn4k3 | Theorem::Mkn4k1 => k - 1,
        _ => k,
    };
    for j in 1..=invariant_rows {
        if (2..=m).any(|i| rep.weight_of(i, j) != rep.weight_of(1, j)) {
            failures.push(format!("weight of local vertex {j} depends on the copy"));
        }
    }
    for i in 1..=m {
        if (2..=n).any(|j| rep.weight_of(i, j) <= rep.weight_of(i, j - 1)) {
            failures.push(format!("weights of copy {i} do not strictly increase"));
        }
    }
    if !rep.meets_bound() {
        let rel = if rep.exactness == Exactness::Exact { "exactly" } else { "at most" };
        failures.push(format!("{} colors, theorem promises {rel} {}", rep.colors, rep.bound));
    }
    failures
}

fn sweep_one(m: usize, n: usize, r: usize, opts: &BuildOptions) -> Result<Vec<BuildReport>, BuildError> {
    let mut out = vec![dispatch_with(m, n, r, opts)?];
    if r == 0 && n.is_multiple_of(4) {
        out.push(extend_even_to_4k1(&build_even(m, n, 0)?)?);
    }
    Ok(out)
}

/// Builds every case of the sweep and checks its invariants. Parameter
/// triples outside every builder's range are reported as skipped.
pub fn property_sweep(sweep: &Sweep, method: MagicMethod) -> (Vec<PropertyOutcome>, Vec<Skipped>) {
    let opts = BuildOptions::with_method(method);
    let results: Vec<_> =
        sweep.cases().into_par_iter().map(|(m, n, r)| ((m, n, r), sweep_one(m, n, r, &opts))).collect();
    let mut outcomes = Vec::new();
    let mut skipped = Vec::new();
    for ((m, n, r), res) in results {
        match res {
            Ok(reports) => {
                for rep in reports {
                    let g = *rep.graph();
                    outcomes.push(PropertyOutcome {
                        m: g.m(),
                        n: g.n(),
                        r: g.r(),
                        theorem: rep.theorem,
                        colors: rep.colors,
                        failures: check_properties(&rep),
                    });
                }
            }
            Err(BuildError::UnsupportedParameters { reason, .. }) => skipped.push(((m, n, r), reason)),
            Err(e) => outcomes.push(PropertyOutcome {
                m,
                n,
                r,
                theorem: Theorem::Even,
                colors: 0,
                failures: vec![format!("build failed: {e}")],
            }),
        }
    }
    (outcomes, skipped)
}

pub fn selftest(scope: Scope, method: MagicMethod) -> Summary {
    let mut summary = Summary::default();
    if matches!(scope, Scope::Fixtures | Scope::All) {
        summary.fixtures = fixtures::all().iter().map(|f| check_fixture(f, method)).collect();
    }
    if matches!(scope, Scope::Properties | Scope::All) {
        let (properties, skipped) = property_sweep(&Sweep::default(), method);
        summary.properties = properties;
        summary.skipped = skipped;
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_holds() {
        let sweep = Sweep { copies: vec![2, 3], orders: (2..=7).collect() };
        let (out, skipped) = property_sweep(&sweep, MagicMethod::Auto);
        let bad: Vec<_> = out.iter().filter(|p| !p.failures.is_empty()).collect();
        assert!(bad.is_empty(), "{bad:?}");
        assert!(skipped.is_empty());
        assert!(out.iter().any(|p| p.theorem == Theorem::EvenExtended));
    }

    #[test]
    fn fixtures_scope() {
        let s = selftest(Scope::Fixtures, MagicMethod::Auto);
        assert_eq!(s.fixtures.len(), 10);
        assert!(s.passed(), "{s}");
        assert!(s.properties.is_empty());
    }

    #[test]
    fn broken_report_is_caught() {
        let mut rep = build_even(2, 4, 0).unwrap();
        rep.bound = 3;
        assert_eq!(check_properties(&rep).len(), 1);
    }

    #[test]
    fn scope_parses() {
        assert_eq!("all".parse::<Scope>(), Ok(Scope::All));
        assert!("most".parse::<Scope>().is_err());
    }
}
