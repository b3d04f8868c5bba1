//! The symmetric labeling matrix of an amalgam: vertex labels on the
//! diagonal (or holes when only edges are labeled), edge labels off the
//! diagonal, holes for non-adjacent pairs. Row `a` sums to the weight of
//! vertex `a`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::AmalgamGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKind {
    /// Vertices and edges labeled, onto `[1, p+q]`.
    Total,
    /// Edges only, onto `[1, q]`; every diagonal cell is a hole.
    EdgeOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingMatrix {
    graph: AmalgamGraph,
    kind: MatrixKind,
    cells: Vec<Option<u64>>,
}

impl LabelingMatrix {
    /// All cells start as holes.
    pub fn empty(graph: AmalgamGraph, kind: MatrixKind) -> Self {
        let p = graph.p();
        LabelingMatrix { graph, kind, cells: vec![None; p * p] }
    }

    /// Wraps explicit rows. Only the dimensions are checked here; use
    /// [`LabelingMatrix::hole_mismatch`] or the verifier for the rest.
    pub fn from_rows(graph: AmalgamGraph, kind: MatrixKind, rows: Vec<Vec<Option<u64>>>) -> Option<Self> {
        let p = graph.p();
        if rows.len() != p || rows.iter().any(|r| r.len() != p) {
            return None;
        }
        Some(LabelingMatrix { graph, kind, cells: rows.concat() })
    }

    pub fn graph(&self) -> &AmalgamGraph {
        &self.graph
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.graph.p()
    }

    /// 0-based access.
    pub fn get(&self, a: usize, b: usize) -> Option<u64> {
        self.cells[a * self.order() + b]
    }

    /// Writes both `(a,b)` and `(b,a)`.
    pub fn set(&mut self, a: usize, b: usize, v: u64) {
        let p = self.order();
        self.cells[a * p + b] = Some(v);
        self.cells[b * p + a] = Some(v);
    }

    /// Writes the cell for local vertices `j`, `k` (1-based) of copy `i`.
    pub(crate) fn set_local(&mut self, i: usize, j: usize, k: usize, v: u64) {
        let (a, b) = (self.graph.idx(i, j), self.graph.idx(i, k));
        debug_assert!(
            self.get(a, b).is_none_or(|old| old == v),
            "cell ({a},{b}) of copy {i} rewritten with a different label"
        );
        self.set(a, b, v);
    }

    /// Reads the cell for local vertices `j`, `k` (1-based) of copy `i`.
    pub fn get_local(&self, i: usize, j: usize, k: usize) -> Option<u64> {
        self.get(self.graph.idx(i, j), self.graph.idx(i, k))
    }

    pub fn rows(&self) -> Vec<Vec<Option<u64>>> {
        self.cells.chunks(self.order()).map(<[Option<u64>]>::to_vec).collect()
    }

    /// Row sum with holes counted as zero.
    pub fn row_sum(&self, a: usize) -> u64 {
        let p = self.order();
        self.cells[a * p..(a + 1) * p].iter().flatten().sum()
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.order()).map(|a| self.row_sum(a)).collect()
    }

    /// Sum of the main diagonal (holes as zero).
    pub fn diag_sum(&self) -> u64 {
        (0..self.order()).filter_map(|a| self.get(a, a)).sum()
    }

    /// The labels in the upper triangle, diagonal included, row by row.
    pub fn labels(&self) -> Vec<u64> {
        let p = self.order();
        (0..p).flat_map(|a| (a..p).filter_map(move |b| self.get(a, b))).collect()
    }

    /// True iff the labels are exactly `1..=expected` where `expected` is
    /// `p+q` (total) or `q` (edge-only).
    pub fn is_bijective(&self) -> bool {
        let expected = match self.kind {
            MatrixKind::Total => self.graph.total_elements(),
            MatrixKind::EdgeOnly => self.graph.q(),
        };
        let mut l = self.labels();
        l.sort_unstable();
        l.len() == expected && l.iter().enumerate().all(|(k, &v)| v == k as u64 + 1)
    }

    /// First cell whose hole status disagrees with adjacency, if any.
    pub fn hole_mismatch(&self) -> Option<(usize, usize)> {
        let p = self.order();
        for a in 0..p {
            for b in 0..p {
                let want = if a == b { self.kind == MatrixKind::Total } else { self.graph.adjacent_idx(a, b) };
                if self.get(a, b).is_some() != want {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        let p = self.order();
        (0..p).all(|a| (a + 1..p).all(|b| self.get(a, b) == self.get(b, a)))
    }

    /// `M_i`: the `n x n` matrix of copy `i` (1-based) in local order,
    /// shared vertices last.
    pub fn copy_block(&self, i: usize) -> Vec<Vec<Option<u64>>> {
        let n = self.graph.n();
        (1..=n).map(|j| (1..=n).map(|k| self.get_local(i, j, k)).collect()).collect()
    }

    /// `L_i`: the private part of copy `i`.
    pub fn l_block(&self, i: usize) -> Vec<Vec<Option<u64>>> {
        let k = self.graph.private_per_copy();
        (1..=k).map(|j| (1..=k).map(|c| self.get_local(i, j, c)).collect()).collect()
    }

    /// `B_i`: rows of copy `i`'s private vertices, columns of the shared ones.
    pub fn b_block(&self, i: usize) -> Vec<Vec<Option<u64>>> {
        let (n, k) = (self.graph.n(), self.graph.private_per_copy());
        (1..=k).map(|j| (k + 1..=n).map(|c| self.get_local(i, j, c)).collect()).collect()
    }

    /// `A`: the shared block.
    pub fn a_block(&self) -> Vec<Vec<Option<u64>>> {
        let (n, k) = (self.graph.n(), self.graph.private_per_copy());
        (k + 1..=n).map(|j| (k + 1..=n).map(|c| self.get_local(1, j, c)).collect()).collect()
    }
}

impl fmt::Display for LabelingMatrix {
    /// Plain text table with `*` for holes and the row sum after `|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.cells.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        for (a, row) in self.rows().iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Some(v) => format!("{v:>width$}"),
                    None => format!("{:>width$}", "*"),
                })
                .collect();
            writeln!(f, "{} | {}", cells.join(" "), self.row_sum(a))?;
        }
        Ok(())
    }
}

/// Unwraps a block that is known to have no holes.
pub fn dense(block: &[Vec<Option<u64>>]) -> Option<Vec<Vec<u64>>> {
    block.iter().map(|r| r.iter().copied().collect::<Option<Vec<u64>>>()).collect()
}
