//! Independent checking of labelings. Nothing here trusts builder metadata:
//! weights are recomputed from the raw assignment.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::VerifyError;
use crate::graph::{AmalgamGraph, Graph};
use crate::matrix::{LabelingMatrix, MatrixKind};

/// A total labeling (vertices and edges) or an edge-only labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub kind: MatrixKind,
    /// One label per vertex; empty for edge-only labelings.
    pub vertices: Vec<u64>,
    /// Edge `(a, b)` with `a < b` and its label. Serialized as a list of
    /// `[a, b, label]` triples.
    #[serde(with = "edge_triples")]
    pub edges: BTreeMap<(usize, usize), u64>,
}

mod edge_triples {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(edges: &BTreeMap<(usize, usize), u64>, s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<(usize, usize, u64)> = edges.iter().map(|(&(a, b), &v)| (a, b, v)).collect();
        list.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, usize), u64>, D::Error> {
        let list = Vec::<(usize, usize, u64)>::deserialize(d)?;
        Ok(list.into_iter().map(|(a, b, v)| ((a.min(b), a.max(b)), v)).collect())
    }
}

impl Labeling {
    pub fn total(vertices: Vec<u64>, edges: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        Labeling { kind: MatrixKind::Total, vertices, edges: normalized(edges) }
    }

    pub fn edge_only(edges: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        Labeling { kind: MatrixKind::EdgeOnly, vertices: Vec::new(), edges: normalized(edges) }
    }

    pub fn labels(&self) -> impl Iterator<Item = u64> + '_ {
        self.vertices.iter().copied().chain(self.edges.values().copied())
    }
}

fn normalized(edges: impl IntoIterator<Item = ((usize, usize), u64)>) -> BTreeMap<(usize, usize), u64> {
    edges.into_iter().map(|((a, b), v)| ((a.min(b), a.max(b)), v)).collect()
}

/// Two adjacent vertices with the same weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub u_name: String,
    pub v_name: String,
    pub weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub weights: Vec<u64>,
    pub colors: usize,
    /// No adjacent pair shares a weight.
    pub proper: bool,
    pub violations: Vec<Violation>,
    /// Labels are exactly `1..=p+q` (total) or `1..=q` (edge-only).
    pub bijective: bool,
}

impl VerificationReport {
    /// Proper and bijective: a local antimagic (total) labeling.
    pub fn is_valid(&self) -> bool {
        self.proper && self.bijective
    }
}

fn check_domain<G: Graph + ?Sized>(g: &G, f: &Labeling) -> Result<(), VerifyError> {
    let p = g.order();
    match f.kind {
        MatrixKind::Total if f.vertices.len() != p => {
            return Err(VerifyError::DomainMismatch(format!("{} vertex labels for {p} vertices", f.vertices.len())));
        }
        MatrixKind::EdgeOnly if !f.vertices.is_empty() => {
            return Err(VerifyError::DomainMismatch("edge-only labeling carries vertex labels".into()));
        }
        _ => {}
    }
    let want: BTreeSet<(usize, usize)> = g.edge_list().into_iter().collect();
    let have: BTreeSet<(usize, usize)> = f.edges.keys().copied().collect();
    if let Some(e) = have.difference(&want).next() {
        return Err(VerifyError::DomainMismatch(format!("labeled pair {e:?} is not an edge")));
    }
    if let Some(e) = want.difference(&have).next() {
        return Err(VerifyError::DomainMismatch(format!("edge {e:?} has no label")));
    }
    Ok(())
}

/// `w(u) = f(u) + Σ f(uv)` for total labelings, `Σ f(uv)` for edge-only.
pub fn weights<G: Graph + ?Sized>(g: &G, f: &Labeling) -> Result<Vec<u64>, VerifyError> {
    check_domain(g, f)?;
    let mut w = match f.kind {
        MatrixKind::Total => f.vertices.clone(),
        MatrixKind::EdgeOnly => vec![0; g.order()],
    };
    for (&(a, b), &v) in &f.edges {
        w[a] += v;
        w[b] += v;
    }
    Ok(w)
}

pub fn check<G: Graph + ?Sized>(g: &G, f: &Labeling) -> Result<VerificationReport, VerifyError> {
    let w = weights(g, f)?;
    let violations: Vec<Violation> = g
        .edge_list()
        .into_iter()
        .filter(|&(a, b)| w[a] == w[b])
        .map(|(a, b)| Violation { u: a, v: b, u_name: g.vertex_name(a), v_name: g.vertex_name(b), weight: w[a] })
        .collect();
    let mut labels: Vec<u64> = f.labels().collect();
    labels.sort_unstable();
    let bijective = labels.iter().enumerate().all(|(k, &v)| v == k as u64 + 1);
    let colors = w.iter().collect::<BTreeSet<_>>().len();
    Ok(VerificationReport { weights: w, colors, proper: violations.is_empty(), violations, bijective })
}

/// Reads the labeling off a matrix. Shared vertices and edges appear once
/// in the matrix, so they are read once.
pub fn matrix_to_labeling(mat: &LabelingMatrix, g: &AmalgamGraph) -> Result<Labeling, VerifyError> {
    if mat.graph() != g {
        return Err(VerifyError::DomainMismatch(format!("matrix is for {}, not {g}", mat.graph())));
    }
    if let Some((row, col)) = mat.hole_mismatch() {
        return Err(VerifyError::HolePatternMismatch { row, col });
    }
    if !mat.is_symmetric() {
        return Err(VerifyError::DomainMismatch("matrix is not symmetric".into()));
    }
    let p = g.p();
    let vertices = match mat.kind() {
        MatrixKind::Total => (0..p).map(|a| mat.get(a, a).expect("checked")).collect(),
        MatrixKind::EdgeOnly => Vec::new(),
    };
    let edges = g.edges().into_iter().map(|(a, b)| ((a, b), mat.get(a, b).expect("checked")));
    Ok(Labeling { kind: mat.kind(), vertices, edges: edges.collect() })
}

pub fn labeling_to_matrix(f: &Labeling, g: &AmalgamGraph) -> Result<LabelingMatrix, VerifyError> {
    check_domain(g, f)?;
    let mut mat = LabelingMatrix::empty(*g, f.kind);
    for (a, &v) in f.vertices.iter().enumerate() {
        mat.set(a, a, v);
    }
    for (&(a, b), &v) in &f.edges {
        mat.set(a, b, v);
    }
    Ok(mat)
}

/// Which hypothesis of the row-sum lemma a matrix breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hypothesis {
    /// More rows than columns, or ragged rows.
    Shape,
    /// `m[k][j] != m[j][k]` for `j < k` inside the square part.
    Symmetry { j: usize, k: usize },
    /// The diagonal is not strictly increasing at row `j`.
    DiagonalOrder { j: usize },
    /// Upper cells are not strictly increasing in lexicographic order.
    Lexicographic { first: (usize, usize), second: (usize, usize) },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonotoneOutcome {
    /// Hypotheses hold and the row sums strictly increase.
    Increasing,
    HypothesisFailed(Hypothesis),
    /// Hypotheses hold but row `row` (0-based) does not exceed the previous
    /// one. The lemma rules this out, so seeing it means a bug.
    NotIncreasing {
        row: usize,
    },
}

/// Checks the hypotheses of the row-sum lemma on an `a x b` matrix
/// (`a <= b`, 0-based) and then that its row sums strictly increase.
pub fn check_row_monotone(rows: &[Vec<u64>]) -> MonotoneOutcome {
    let a = rows.len();
    let b = rows.first().map_or(0, Vec::len);
    if a > b || rows.iter().any(|r| r.len() != b) {
        return MonotoneOutcome::HypothesisFailed(Hypothesis::Shape);
    }
    for (j, row) in rows.iter().enumerate() {
        for k in j + 1..a {
            if row[k] != rows[k][j] {
                return MonotoneOutcome::HypothesisFailed(Hypothesis::Symmetry { j, k });
            }
        }
    }
    for j in 1..a {
        if rows[j][j] <= rows[j - 1][j - 1] {
            return MonotoneOutcome::HypothesisFailed(Hypothesis::DiagonalOrder { j });
        }
    }
    let upper: Vec<(usize, usize)> = (0..a).flat_map(|j| (j + 1..b).map(move |k| (j, k))).collect();
    for w in upper.windows(2) {
        let ((j1, k1), (j2, k2)) = (w[0], w[1]);
        if rows[j2][k2] <= rows[j1][k1] {
            return MonotoneOutcome::HypothesisFailed(Hypothesis::Lexicographic { first: w[0], second: w[1] });
        }
    }
    let sums: Vec<u64> = rows.iter().map(|r| r.iter().sum()).collect();
    match (1..a).find(|&j| sums[j] <= sums[j - 1]) {
        Some(row) => MonotoneOutcome::NotIncreasing { row },
        None => MonotoneOutcome::Increasing,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_even, build_odd_r_even_m_odd, dispatch};
    use crate::graph::{build_amalgam, SimpleGraph};
    use crate::matrix::dense;

    #[test]
    fn k2_weights() {
        let g = build_amalgam(1, 2, 0).unwrap();
        let f = Labeling::total(vec![1, 2], [((0, 1), 3)]);
        assert_eq!(weights(&g, &f).unwrap(), vec![4, 5]);
        let rep = check(&g, &f).unwrap();
        assert!(rep.is_valid());
        assert_eq!(rep.colors, 2);
    }

    #[test]
    fn labeling_json_uses_triples() {
        let f = Labeling::total(vec![1, 2], [((1, 0), 3)]);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"kind":"total","vertices":[1,2],"edges":[[0,1,3]]}"#);
        assert_eq!(serde_json::from_str::<Labeling>(&text).unwrap(), f);
    }

    #[test]
    fn domain_errors() {
        let g = build_amalgam(1, 3, 0).unwrap();
        let f = Labeling::total(vec![1, 2], [((0, 1), 3)]);
        assert!(matches!(weights(&g, &f), Err(VerifyError::DomainMismatch(_))));
        let f = Labeling::edge_only([((0, 1), 1), ((1, 2), 2)]);
        assert!(matches!(weights(&g, &f), Err(VerifyError::DomainMismatch(_))));
        let p3 = SimpleGraph::path(3);
        let f = Labeling::edge_only([((0, 1), 1), ((1, 2), 2), ((0, 2), 3)]);
        assert!(matches!(weights(&p3, &f), Err(VerifyError::DomainMismatch(_))));
    }

    #[test]
    fn three_k6_round_trip() {
        let rep = build_even(3, 6, 0).unwrap();
        let g = *rep.graph();
        let f = matrix_to_labeling(&rep.matrix, &g).unwrap();
        assert_eq!(f.labels().count(), 63);
        let v = check(&g, &f).unwrap();
        assert!(v.is_valid());
        assert_eq!(v.colors, 6);
        assert_eq!(v.weights[..6], [87, 138, 171, 192, 207, 222]);
        assert_eq!(labeling_to_matrix(&f, &g).unwrap(), rep.matrix);
    }

    #[test]
    fn swapped_labels_create_violations() {
        // swap the labels of edges v11v12 (3) and v11v13 (4) in copy 1: vertex
        // v12 gains 1 and v13 loses 1
        let rep = build_even(3, 6, 0).unwrap();
        let g = *rep.graph();
        let mut f = matrix_to_labeling(&rep.matrix, &g).unwrap();
        let (e12, e13) = ((0, 1), (0, 2));
        let (x, y) = (f.edges[&e12], f.edges[&e13]);
        f.edges.insert(e12, y);
        f.edges.insert(e13, x);
        let v = check(&g, &f).unwrap();
        assert!(v.bijective);
        assert_eq!(v.weights[1], 139);
        assert_eq!(v.weights[2], 170);
        assert!(v.proper);
        // now force a tie: relabel so that v12 and v13 in copy 1 collide
        let mut f2 = matrix_to_labeling(&rep.matrix, &g).unwrap();
        f2.vertices[1] += 33;
        let v2 = check(&g, &f2).unwrap();
        assert!(!v2.proper);
        assert_eq!(v2.violations.len(), 1);
        assert_eq!((v2.violations[0].u, v2.violations[0].v, v2.violations[0].weight), (1, 2, 171));
        assert_eq!(v2.violations[0].u_name, "v(1,2)");
        assert!(!v2.bijective);
    }

    #[test]
    fn sum_identity_on_builder_outputs() {
        for (m, n, r) in [(3, 6, 0), (2, 7, 3), (3, 7, 4), (2, 7, 4), (2, 7, 0), (2, 9, 0), (2, 7, 2), (2, 9, 1)] {
            let rep = dispatch(m, n, r).unwrap();
            let f = matrix_to_labeling(&rep.matrix, rep.graph()).unwrap();
            let w = weights(rep.graph(), &f).unwrap();
            let vsum: u64 = f.vertices.iter().sum();
            let esum: u64 = f.edges.values().sum();
            assert_eq!(w.iter().sum::<u64>(), vsum + 2 * esum);
        }
    }

    #[test]
    fn hole_mismatch_is_reported() {
        let rep = build_even(2, 4, 1).unwrap();
        let mut rows = rep.matrix.rows();
        rows[0][3] = Some(99);
        rows[3][0] = Some(99);
        let bad = LabelingMatrix::from_rows(*rep.graph(), MatrixKind::Total, rows).unwrap();
        assert_eq!(matrix_to_labeling(&bad, rep.graph()), Err(VerifyError::HolePatternMismatch { row: 0, col: 3 }));
    }

    #[test]
    fn row_monotone_cases() {
        let rep = build_even(3, 6, 1).unwrap();
        let m3 = dense(&rep.matrix.copy_block(3)).unwrap();
        assert_eq!(check_row_monotone(&m3), MonotoneOutcome::Increasing);
        let rep = build_odd_r_even_m_odd(3, 7, 4).unwrap();
        let a = dense(&rep.matrix.a_block()).unwrap();
        assert_eq!(check_row_monotone(&a), MonotoneOutcome::Increasing);
        let bad = vec![vec![5, 1, 2], vec![1, 4, 3]];
        assert_eq!(check_row_monotone(&bad), MonotoneOutcome::HypothesisFailed(Hypothesis::DiagonalOrder { j: 1 }));
        let bad = vec![vec![1, 2], vec![3, 4]];
        assert_eq!(check_row_monotone(&bad), MonotoneOutcome::HypothesisFailed(Hypothesis::Symmetry { j: 0, k: 1 }));
        let bad = vec![vec![10, 3, 2], vec![3, 11, 4]];
        assert_eq!(
            check_row_monotone(&bad),
            MonotoneOutcome::HypothesisFailed(Hypothesis::Lexicographic { first: (0, 1), second: (0, 2) })
        );
        assert_eq!(check_row_monotone(&[vec![1], vec![2]]), MonotoneOutcome::HypothesisFailed(Hypothesis::Shape));
    }
}
