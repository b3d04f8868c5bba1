use crate::error::BuildError;
use crate::graph::build_amalgam;
use crate::matrix::{LabelingMatrix, MatrixKind};
use crate::sequences::BlockFamily;

use super::{
    apply_guide, check_params, diagonal_cells, fill_shared, graph_for, guide_even, upper_cells, BuildReport, Exactness,
    ParameterSet, Theorem,
};

/// Even clique order: exactly `n` colors.
///
/// Copy `i` takes the `i`-th term of each guide block over `[1, mN1]`; the
/// shared block gets the rest, off-diagonal cells first.
pub fn build_even(m: usize, n: usize, r: usize) -> Result<BuildReport, BuildError> {
    check_params("build_even", m >= 2 && n >= 2 && n.is_multiple_of(2) && r < n, || {
        format!("need m >= 2, even n >= 2, r < n; got m={m}, n={n}, r={r}")
    })?;
    let ps = ParameterSet::new(m, n, r);
    let g = graph_for(m, n, r)?;
    let mut mat = LabelingMatrix::empty(g, MatrixKind::Total);
    let guide = guide_even(n, r)?;
    apply_guide(&mut mat, &guide, &BlockFamily::interval(m, ps.n1 as usize, 0), n - r)?;
    if r > 0 {
        let next = fill_shared(&mut mat, &upper_cells(r), m as u64 * ps.n1 + 1);
        let last = fill_shared(&mut mat, &diagonal_cells(r), next);
        debug_assert_eq!(last - 1, ps.big_n);
    }
    Ok(BuildReport::new(mat, Exactness::Exact, Theorem::Even, n))
}

/// Turns a total labeling of `mK_{4k}` into an edge labeling of
/// `mK_{4k+1}`: the diagonal of each copy moves to the edges of a new
/// vertex, whose weight is then the same in every copy.
pub fn extend_even_to_4k1(report: &BuildReport) -> Result<BuildReport, BuildError> {
    let g = *report.graph();
    let (m, n) = (g.m(), g.n());
    if report.theorem != Theorem::Even || g.r() != 0 || n % 4 != 0 || g.has_apex() {
        return Err(BuildError::WrongShape(format!("expected an even-theorem report for mK_4k, got {g}")));
    }
    let h = build_amalgam(m, n + 1, 0)?;
    let mut out = LabelingMatrix::empty(h, MatrixKind::EdgeOnly);
    for i in 1..=m {
        for j in 1..=n {
            for k in j..=n {
                let v = report.matrix.get_local(i, j, k).expect("complete matrix");
                if j == k {
                    out.set_local(i, j, n + 1, v);
                } else {
                    out.set_local(i, j, k, v);
                }
            }
        }
    }
    Ok(BuildReport::new(out, Exactness::Exact, Theorem::EvenExtended, n + 1))
}
