//! JSON, CSV and TeX renderings of a build report.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::construct::{BuildReport, Exactness, Theorem};
use crate::error::IoError;
use crate::graph::{apex_join, build_amalgam, AmalgamGraph, Vertex};
use crate::matrix::{LabelingMatrix, MatrixKind};

/// The JSON document for a report. `apex` and `bound` extend the base
/// schema so that lifted reports and theorem bounds survive a round trip.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub apex: bool,
    /// `p x p`, `null` where two vertices are not adjacent (and on the
    /// diagonal of an edge-only matrix).
    pub entries: Vec<Vec<Option<u64>>>,
    pub weights: Vec<u64>,
    pub colors: usize,
    pub diag_sum: Option<u64>,
    pub exact: bool,
    pub theorem: Theorem,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

impl ReportDocument {
    pub fn from_report(report: &BuildReport) -> Self {
        let g = report.graph();
        ReportDocument {
            m: g.m(),
            n: g.n(),
            r: g.r(),
            apex: g.has_apex(),
            entries: report.matrix.rows(),
            weights: report.weights.clone(),
            colors: report.colors,
            diag_sum: report.diag_sum,
            exact: report.is_exact(),
            theorem: report.theorem,
            bound: Some(report.bound),
        }
    }

    pub fn graph(&self) -> Result<AmalgamGraph, IoError> {
        let g = build_amalgam(self.m, self.n, self.r)?;
        Ok(if self.apex { apex_join(g)? } else { g })
    }

    /// The labeling matrix. Edge-only when every diagonal entry is null.
    pub fn matrix(&self) -> Result<LabelingMatrix, IoError> {
        let g = self.graph()?;
        let p = g.p();
        if self.entries.len() != p || self.entries.iter().any(|r| r.len() != p) {
            return Err(IoError::Malformed(format!("{g} needs a {p}x{p} entries array")));
        }
        let diagonal: Vec<bool> = (0..p).map(|a| self.entries[a][a].is_some()).collect();
        let kind = if diagonal.iter().all(|&d| d) {
            MatrixKind::Total
        } else if diagonal.iter().all(|&d| !d) {
            MatrixKind::EdgeOnly
        } else {
            return Err(IoError::Malformed("diagonal is partly filled".into()));
        };
        LabelingMatrix::from_rows(g, kind, self.entries.clone())
            .ok_or_else(|| IoError::Malformed("entries do not fit the graph".into()))
    }

    /// Rebuilds the report and checks that the stored summary matches the
    /// entries.
    pub fn into_report(self) -> Result<BuildReport, IoError> {
        let matrix = self.matrix()?;
        if let Some((row, col)) = matrix.hole_mismatch() {
            return Err(crate::error::VerifyError::HolePatternMismatch { row, col }.into());
        }
        if !matrix.is_symmetric() {
            return Err(IoError::Malformed("entries are not symmetric".into()));
        }
        let exactness = if self.exact { Exactness::Exact } else { Exactness::UpperBound };
        let bound = self.bound.unwrap_or(self.colors);
        let report = BuildReport::new(matrix, exactness, self.theorem, bound);
        if report.weights != self.weights || report.colors != self.colors || report.diag_sum != self.diag_sum {
            return Err(IoError::Malformed("weights, colors or diagSum disagree with the entries".into()));
        }
        Ok(report)
    }
}

pub fn to_json(report: &BuildReport) -> Result<String, IoError> {
    Ok(serde_json::to_string_pretty(&ReportDocument::from_report(report))?)
}

pub fn from_json(text: &str) -> Result<BuildReport, IoError> {
    serde_json::from_str::<ReportDocument>(text)?.into_report()
}

/// One record per matrix row, empty fields for non-adjacent pairs.
pub fn to_csv(report: &BuildReport) -> Result<String, IoError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in report.matrix.rows() {
        w.write_record(row.iter().map(|c| c.map_or_else(String::new, |v| v.to_string())))?;
    }
    let bytes = w.into_inner().map_err(|e| IoError::Io(e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| IoError::Malformed(e.to_string()))
}

/// Reads a matrix written by [`to_csv`] back into rows.
pub fn rows_from_csv(text: &str) -> Result<Vec<Vec<Option<u64>>>, IoError> {
    let mut rd = csv::ReaderBuilder::new().has_headers(false).from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let row = rec
            .iter()
            .map(|f| {
                let f = f.trim();
                if f.is_empty() {
                    Ok(None)
                } else {
                    f.parse::<u64>().map(Some).map_err(|_| IoError::Malformed(format!("bad cell {f:?}")))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(rows)
}

fn tex_name(g: &AmalgamGraph, a: usize) -> String {
    let k = g.private_per_copy();
    match g.vertex_at(a) {
        Ok(Vertex::Local { copy, local }) if local <= k => format!("v_{{{copy},{local}}}"),
        Ok(Vertex::Local { local, .. }) => format!("u_{{{local}}}"),
        _ => "x".to_string(),
    }
}

fn tex_table(
    g: &AmalgamGraph,
    title: &str,
    rows: &[usize],
    cols: &[usize],
    cell: impl Fn(usize, usize) -> Option<u64>,
    sums: &[u64],
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "\\begin{{array}}{{c||*{{{}}}{{c|}}|c}}", cols.len());
    let head: Vec<String> = cols.iter().map(|&b| tex_name(g, b)).collect();
    let _ = writeln!(s, "{title} & {} & \\mbox{{sum}}\\\\\\hline\\hline", head.join(" & "));
    for (&a, sum) in rows.iter().zip(sums) {
        let cells: Vec<String> =
            cols.iter().map(|&b| cell(a, b).map_or_else(|| "*".to_string(), |v| v.to_string())).collect();
        let _ = writeln!(s, "{} & {} & {sum} \\\\\\hline", tex_name(g, a), cells.join(" & "));
    }
    s.push_str("\\end{array}\n");
    s
}

/// The full matrix as a TeX array with a row-sum column; `*` marks
/// non-adjacent pairs.
pub fn to_tex(report: &BuildReport) -> String {
    let g = report.graph();
    let all: Vec<usize> = (0..g.p()).collect();
    tex_table(g, "M", &all, &all, |a, b| report.matrix.get(a, b), &report.weights)
}

/// Copy `i`'s square block (its private and shared vertices) with the full
/// row sums, laid out like the per-copy tables `M_i`.
pub fn to_tex_copy(report: &BuildReport, i: usize) -> String {
    let g = report.graph();
    let idx: Vec<usize> = (1..=g.n()).map(|j| g.idx(i, j)).collect();
    let sums: Vec<u64> = idx.iter().map(|&a| report.weights[a]).collect();
    tex_table(g, &format!("M_{i}"), &idx, &idx, |a, b| report.matrix.get(a, b), &sums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_even, build_odd_r_odd, dispatch, extend_even_to_4k1, lift_to_join};

    #[test]
    fn json_round_trip() {
        let base = build_even(3, 6, 1).unwrap();
        for rep in [
            base.clone(),
            lift_to_join(&base).unwrap(),
            extend_even_to_4k1(&build_even(2, 4, 0).unwrap()).unwrap(),
            dispatch(2, 7, 0).unwrap(),
        ] {
            let text = to_json(&rep).unwrap();
            assert_eq!(from_json(&text).unwrap(), rep);
        }
    }

    #[test]
    fn json_schema_keys() {
        let rep = build_even(2, 2, 0).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json(&rep).unwrap()).unwrap();
        for key in ["m", "n", "r", "entries", "weights", "colors", "diagSum", "exact", "theorem"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert!(v.get("apex").is_none());
        assert_eq!(v["theorem"], "even");
        assert_eq!(v["entries"][0][2], serde_json::Value::Null);
    }

    #[test]
    fn tampered_json_is_rejected() {
        let rep = build_even(2, 4, 0).unwrap();
        let mut doc = ReportDocument::from_report(&rep);
        doc.weights[0] += 1;
        assert!(matches!(doc.clone().into_report(), Err(IoError::Malformed(_))));
        let mut doc = ReportDocument::from_report(&rep);
        doc.entries[0][5] = Some(1);
        doc.entries[5][0] = Some(1);
        assert!(matches!(doc.into_report(), Err(IoError::Verify(_))));
        assert!(from_json("{\"m\": 2}").is_err());
    }

    #[test]
    fn csv_has_one_row_per_vertex() {
        let rep = build_odd_r_odd(2, 7, 3).unwrap();
        let text = to_csv(&rep).unwrap();
        assert_eq!(text.lines().count(), 11);
        let rows = rows_from_csv(&text).unwrap();
        assert_eq!(rows, rep.matrix.rows());
        // private vertices of different copies are not adjacent
        assert_eq!(rows[0][4], None);
        assert!(text.lines().next().unwrap().contains(",,"));
    }

    #[test]
    fn tex_copy_table() {
        let rep = build_even(3, 6, 0).unwrap();
        let tex = to_tex_copy(&rep, 1);
        let lines: Vec<&str> = tex.lines().collect();
        assert_eq!(lines[0], "\\begin{array}{c||*{6}{c|}|c}");
        assert!(lines[1].starts_with("M_1 & v_{1,1} & v_{1,2}"));
        assert_eq!(lines[2], "v_{1,1} & 46 & 3 & 4 & 9 & 10 & 15 & 87 \\\\\\hline");
        assert_eq!(lines[7], "v_{1,6} & 15 & 25 & 36 & 40 & 45 & 61 & 222 \\\\\\hline");
        let full = to_tex(&rep);
        assert_eq!(full.lines().count(), 18 + 3);
        assert!(full.contains(" * "));
    }
}
