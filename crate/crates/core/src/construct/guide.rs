use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::BuildError;
use crate::signs::{sign_even, sign_odd, SignMatrix};

/// How the diagonal of a guide is numbered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiagonalRule {
    /// Continue after the last off-diagonal magnitude.
    Next,
    /// Start at the given magnitude.
    From(u64),
    /// Leave the diagonal empty; it is filled by another stage.
    Hole,
}

/// A `rows x cols` signed template. Cell `(j, k)` holds `±a`: the label
/// comes from block `a`, ascending for `+` and descending for `-`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuideMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Option<i64>>,
}

impl GuideMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 1-based access; `None` for a hole.
    pub fn get(&self, j: usize, k: usize) -> Option<i64> {
        self.entries[(j - 1) * self.cols + (k - 1)]
    }

    /// The largest magnitude used.
    pub fn max_magnitude(&self) -> u64 {
        self.entries.iter().flatten().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    /// The guide with only its first `rows` rows.
    pub fn truncated(&self, rows: usize) -> GuideMatrix {
        let rows = rows.min(self.rows);
        GuideMatrix { rows, cols: self.cols, entries: self.entries[..rows * self.cols].to_vec() }
    }
}

impl fmt::Display for GuideMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> =
            self.entries.iter().map(|c| c.map_or_else(|| "*".to_string(), |v| format!("{v:+}"))).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.cols) {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", padded.join(" "))?;
        }
        Ok(())
    }
}

/// Numbers the upper off-diagonal cells `(j, k)`, `j < k`, `j <= rows`,
/// `k <= cols` lexicographically from 1, applies `diag` to the diagonal,
/// mirrors the square part, and takes signs from `sign`.
pub fn guide_with(sign: &SignMatrix, rows: usize, cols: usize, diag: DiagonalRule) -> GuideMatrix {
    assert!(rows <= cols && cols <= sign.order(), "guide {rows}x{cols} needs a sign matrix of order >= {cols}");
    let mut magnitude = vec![None; rows * cols];
    let mut next = 1u64;
    for j in 1..=rows {
        for k in j + 1..=cols {
            magnitude[(j - 1) * cols + (k - 1)] = Some(next);
            next += 1;
        }
    }
    let mut start = match diag {
        DiagonalRule::Next => Some(next),
        DiagonalRule::From(s) => Some(s),
        DiagonalRule::Hole => None,
    };
    for j in 1..=rows {
        magnitude[(j - 1) * cols + (j - 1)] = start;
        start = start.map(|s| s + 1);
    }
    for j in 1..=rows {
        for k in 1..j {
            magnitude[(j - 1) * cols + (k - 1)] = magnitude[(k - 1) * cols + (j - 1)];
        }
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for j in 1..=rows {
        for k in 1..=cols {
            let s = i64::from(sign.get(j, k).signum());
            entries.push(magnitude[(j - 1) * cols + (k - 1)].map(|a| s * a as i64));
        }
    }
    GuideMatrix { rows, cols, entries }
}

/// `(n-r) x n` guide for even `n`: signs from `S_n` with the last `r` rows
/// removed, diagonal numbered right after the off-diagonal cells.
pub fn guide_even(n: usize, r: usize) -> Result<GuideMatrix, BuildError> {
    if n % 2 == 1 || r >= n {
        return Err(BuildError::InvalidParameters {
            builder: "guide_even",
            reason: format!("need even n and r < n, got n={n}, r={r}"),
        });
    }
    Ok(guide_with(&sign_even(n)?, n - r, n, DiagonalRule::Next))
}

/// `n x n` guide for odd `n >= 3` with an empty diagonal.
pub fn guide_odd(n: usize) -> Result<GuideMatrix, BuildError> {
    Ok(guide_with(&sign_odd(n)?, n, n, DiagonalRule::Hole))
}
