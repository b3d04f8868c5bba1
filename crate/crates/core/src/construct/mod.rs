//! Staged builders that fill the labeling matrix of `A(mK_n, K_r)` and
//! report the induced weights.
//!
//! Every builder follows the same pattern: a guide matrix decides, cell by
//! cell, which label block and which direction supplies copy `i`'s label;
//! the shared block `A` (and any magic rectangle) is filled afterwards from
//! the labels that remain.

mod bound;
mod even;
mod guide;
mod lift;
mod odd;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::BuildError;
use crate::graph::{build_amalgam, AmalgamGraph};
use crate::magic::{magic_rectangle_with, verify_magic, MagicMethod, MagicRectangle};
use crate::matrix::{LabelingMatrix, MatrixKind};
use crate::sequences::{BlockFamily, Direction};

pub use bound::{build_amalgam_k1_odd, build_amalgam_k2, build_mkn_4k1, build_mkn_4k3};
pub use even::{build_even, extend_even_to_4k1};
pub use guide::{guide_even, guide_odd, guide_with, DiagonalRule, GuideMatrix};
pub use lift::lift_to_join;
pub use odd::{
    build_odd_r_even_m_even, build_odd_r_even_m_even_with, build_odd_r_even_m_odd, build_odd_r_even_m_odd_with,
    build_odd_r_odd, build_odd_r_odd_with,
};

/// Which result a report realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "even")]
    Even,
    #[serde(rename = "even-extended")]
    EvenExtended,
    #[serde(rename = "odd-r-odd")]
    OddROdd,
    #[serde(rename = "odd-r-even-m-odd")]
    OddREvenMOdd,
    #[serde(rename = "odd-r-even-m-even")]
    OddREvenMEven,
    #[serde(rename = "mkn-4k3")]
    Mkn4k3,
    #[serde(rename = "mkn-4k1")]
    Mkn4k1,
    #[serde(rename = "amalgam-k1-odd")]
    AmalgamK1Odd,
    #[serde(rename = "amalgam-k2")]
    AmalgamK2,
    #[serde(rename = "apex-lift")]
    ApexLift,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::Even,
        Theorem::EvenExtended,
        Theorem::OddROdd,
        Theorem::OddREvenMOdd,
        Theorem::OddREvenMEven,
        Theorem::Mkn4k3,
        Theorem::Mkn4k1,
        Theorem::AmalgamK1Odd,
        Theorem::AmalgamK2,
        Theorem::ApexLift,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Even => "even",
            Theorem::EvenExtended => "even-extended",
            Theorem::OddROdd => "odd-r-odd",
            Theorem::OddREvenMOdd => "odd-r-even-m-odd",
            Theorem::OddREvenMEven => "odd-r-even-m-even",
            Theorem::Mkn4k3 => "mkn-4k3",
            Theorem::Mkn4k1 => "mkn-4k1",
            Theorem::AmalgamK1Odd => "amalgam-k1-odd",
            Theorem::AmalgamK2 => "amalgam-k2",
            Theorem::ApexLift => "apex-lift",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL.into_iter().find(|t| t.tag() == s).ok_or_else(|| format!("unknown theorem tag {s:?}"))
    }
}

/// Whether the color count is proven minimal or only an upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Exactness {
    Exact,
    UpperBound,
}

/// Label budgets shared by the builders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterSet {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    /// `p + q` of `A(mK_n, K_r)`.
    pub big_n: u64,
    /// `(n+r+1)(n-r)/2`
    pub n1: u64,
    /// `(n-r)(n-r+1)/2`
    pub n2: u64,
    /// `(n-r+3)(n-r)/2`
    pub n3: u64,
    /// `n(n-1)/2`
    pub n4: u64,
    /// `(n-2)(n+1)/2`
    pub n5: u64,
    /// `(n-r)(n-r+1)/2`
    pub z1: u64,
    /// `Z1 + (n-r)r`
    pub z2: u64,
}

impl ParameterSet {
    pub fn new(m: usize, n: usize, r: usize) -> Self {
        let (mu, nu, ru) = (m as u64, n as u64, r as u64);
        let d = nu - ru;
        let z1 = d * (d + 1) / 2;
        ParameterSet {
            m,
            n,
            r,
            big_n: mu * nu * (nu + 1) / 2 - (mu - 1) * ru * (ru + 1) / 2,
            n1: (nu + ru + 1) * d / 2,
            n2: d * (d + 1) / 2,
            n3: (d + 3) * d / 2,
            n4: nu * (nu - 1) / 2,
            n5: (nu.saturating_sub(2)) * (nu + 1) / 2,
            z1,
            z2: z1 + d * ru,
        }
    }
}

/// Optional knobs for the builders that need a magic rectangle.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// A caller-supplied rectangle used instead of the generated one. It
    /// must have the shape and value range the builder expects.
    pub omega: Option<MagicRectangle>,
    pub method: MagicMethod,
}

impl BuildOptions {
    pub fn with_omega(omega: MagicRectangle) -> Self {
        BuildOptions { omega: Some(omega), method: MagicMethod::Auto }
    }

    pub fn with_method(method: MagicMethod) -> Self {
        BuildOptions { omega: None, method }
    }

    fn omega(&self, rows: usize, cols: usize, lo: u64) -> Result<MagicRectangle, BuildError> {
        match &self.omega {
            None => Ok(magic_rectangle_with(rows, cols, lo, self.method)?),
            Some(o) => {
                if (o.rows(), o.cols()) != (rows, cols) {
                    return Err(BuildError::InvalidOmega(format!(
                        "expected {rows}x{cols}, got {}x{}",
                        o.rows(),
                        o.cols()
                    )));
                }
                if o.lo() != lo {
                    return Err(BuildError::InvalidOmega(format!("expected smallest entry {lo}, got {}", o.lo())));
                }
                if !verify_magic(o) {
                    return Err(BuildError::InvalidOmega("line sums are not constant".into()));
                }
                Ok(o.clone())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub matrix: LabelingMatrix,
    /// Row sums, in matrix order.
    pub weights: Vec<u64>,
    /// Number of distinct weights.
    pub colors: usize,
    /// `D(M)`; absent for edge-only matrices.
    pub diag_sum: Option<u64>,
    pub exactness: Exactness,
    pub theorem: Theorem,
    /// The color count the theorem promises: equal to it when exact, at
    /// most it otherwise.
    pub bound: usize,
}

impl BuildReport {
    pub fn new(matrix: LabelingMatrix, exactness: Exactness, theorem: Theorem, bound: usize) -> Self {
        let weights = matrix.row_sums();
        let colors = weights.iter().collect::<BTreeSet<_>>().len();
        let diag_sum = (matrix.kind() == MatrixKind::Total).then(|| matrix.diag_sum());
        BuildReport { matrix, weights, colors, diag_sum, exactness, theorem, bound }
    }

    pub fn graph(&self) -> &AmalgamGraph {
        self.matrix.graph()
    }

    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }

    /// Weight of local vertex `j` of copy `i` (both 1-based).
    pub fn weight_of(&self, i: usize, j: usize) -> u64 {
        self.weights[self.graph().idx(i, j)]
    }

    /// Whether the color count satisfies the theorem's promise.
    pub fn meets_bound(&self) -> bool {
        match self.exactness {
            Exactness::Exact => self.colors == self.bound,
            Exactness::UpperBound => self.colors <= self.bound,
        }
    }
}

pub(crate) fn check_params(builder: &'static str, ok: bool, reason: impl FnOnce() -> String) -> Result<(), BuildError> {
    if ok {
        Ok(())
    } else {
        Err(BuildError::InvalidParameters { builder, reason: reason() })
    }
}

/// Fills copy `i`'s cells `(j, k)`, `j <= k`, that the guide covers: the
/// label is the `i`-th term of block `|g|` read upward for `g > 0` and
/// downward for `g < 0`.
pub(crate) fn apply_guide(
    mat: &mut LabelingMatrix,
    guide: &GuideMatrix,
    family: &BlockFamily,
    rows: usize,
) -> Result<(), BuildError> {
    let m = mat.graph().m();
    for i in 1..=m {
        for j in 1..=rows.min(guide.rows()) {
            for k in j..=guide.cols() {
                if let Some(g) = guide.get(j, k) {
                    let label = family.pick(g.unsigned_abs() as usize, Direction::from_sign(g), i)?;
                    mat.set_local(i, j, k, label);
                }
            }
        }
    }
    Ok(())
}

/// Writes consecutive labels from `start` into the shared block cells
/// `(j, k)` (1-based within `A`) in the order given. Returns the next label.
pub(crate) fn fill_shared(mat: &mut LabelingMatrix, cells: &[(usize, usize)], start: u64) -> u64 {
    let k0 = mat.graph().private_per_copy();
    let mut next = start;
    for &(j, k) in cells {
        mat.set_local(1, k0 + j, k0 + k, next);
        next += 1;
    }
    next
}

/// Upper off-diagonal cells of an `r x r` block in lexicographic order.
pub(crate) fn upper_cells(r: usize) -> Vec<(usize, usize)> {
    (1..=r).flat_map(|j| (j + 1..=r).map(move |k| (j, k))).collect()
}

pub(crate) fn diagonal_cells(r: usize) -> Vec<(usize, usize)> {
    (1..=r).map(|j| (j, j)).collect()
}

pub(crate) fn graph_for(m: usize, n: usize, r: usize) -> Result<AmalgamGraph, BuildError> {
    Ok(build_amalgam(m, n, r)?)
}

/// Routes `(m, n, r)` to the builder that covers it.
pub fn dispatch(m: usize, n: usize, r: usize) -> Result<BuildReport, BuildError> {
    dispatch_with(m, n, r, &BuildOptions::default())
}

pub fn dispatch_with(m: usize, n: usize, r: usize, opts: &BuildOptions) -> Result<BuildReport, BuildError> {
    if m < 2 {
        return Err(BuildError::UnsupportedParameters { m, n, r, reason: "builders need at least two copies".into() });
    }
    if n < 2 || r >= n {
        return Err(BuildError::InvalidParameters {
            builder: "dispatch",
            reason: format!("need n >= 2 and 0 <= r < n, got n={n}, r={r}"),
        });
    }
    if n.is_multiple_of(2) {
        return build_even(m, n, r);
    }
    match r {
        0 if n % 4 == 3 => build_mkn_4k3(m, n),
        0 => build_mkn_4k1(m, n),
        1 => build_amalgam_k1_odd(m, n),
        2 if m <= 3 => build_amalgam_k2(m, n),
        2 => Err(BuildError::UnsupportedParameters {
            m,
            n,
            r,
            reason: "odd n with a shared edge and four or more copies is an open case".into(),
        }),
        _ if r % 2 == 1 => build_odd_r_odd_with(m, n, r, opts),
        _ if m % 2 == 1 => build_odd_r_even_m_odd_with(m, n, r, opts),
        _ => build_odd_r_even_m_even_with(m, n, r, opts),
    }
}
