//! Odd clique order with at most two shared vertices. The disjoint union
//! only gets an upper bound; one or two shared vertices are exact.
//!
//! Off-diagonal cells follow the odd guide over `[1, mN4]`. Diagonal `j`
//! (for `j < n`) takes the `i`-th term of the interleaved block `T(j)`,
//! ascending or descending with the sign of the `±2` on the sign matrix
//! diagonal, so consecutive copies differ by exactly that sign along every
//! row.

use std::collections::BTreeSet;

use crate::error::BuildError;
use crate::matrix::{LabelingMatrix, MatrixKind};
use crate::sequences::{t_pick, u_compound_4k1, u_compound_4k3, BlockFamily, Direction};
use crate::signs::sign_odd;

use super::{
    apply_guide, check_params, fill_shared, graph_for, guide_odd, BuildReport, Exactness, ParameterSet, Theorem,
};

/// Fills guide cells and the first `diag_rows` diagonals of each copy.
fn odd_guide_stage(
    mat: &mut LabelingMatrix,
    n: usize,
    rows: usize,
    blocks: u64,
    diag_rows: usize,
) -> Result<(), BuildError> {
    let m = mat.graph().m();
    let guide = guide_odd(n)?.truncated(rows);
    apply_guide(mat, &guide, &BlockFamily::interval(m, blocks as usize, 0), rows)?;
    let sign = sign_odd(n)?;
    let offset = m as u64 * blocks;
    for i in 1..=m {
        for j in 1..=diag_rows {
            let dir = Direction::from_sign(i64::from(sign.get(j, j)));
            mat.set_local(i, j, j, t_pick(m, offset, n - 1, j, dir, i)?);
        }
    }
    Ok(())
}

/// `mK_n` with the corner labels `U` (one per copy) still to be chosen.
fn mkn_matrix(m: usize, n: usize, corner: &[u64]) -> Result<LabelingMatrix, BuildError> {
    let ps = ParameterSet::new(m, n, 0);
    let mut mat = LabelingMatrix::empty(graph_for(m, n, 0)?, MatrixKind::Total);
    odd_guide_stage(&mut mat, n, n, ps.n4, n - 1)?;
    for (i, &v) in corner.iter().enumerate() {
        mat.set_local(i + 1, n, n, v);
    }
    Ok(mat)
}

fn corner_base(m: usize, n: usize) -> u64 {
    let ps = ParameterSet::new(m, n, 0);
    m as u64 * ps.n4 + ((n - 1) * m) as u64
}

/// `n = 4k+3`: at most `n+1` colors. The corner labels step by 2 between
/// consecutive copies except once, so the last vertex takes two weights.
pub fn build_mkn_4k3(m: usize, n: usize) -> Result<BuildReport, BuildError> {
    check_params("build_mkn_4k3", m >= 2 && n % 4 == 3, || format!("need m >= 2, n = 4k+3; got m={m}, n={n}"))?;
    let corner = u_compound_4k3(m, corner_base(m, n))?;
    let mat = mkn_matrix(m, n, &corner)?;
    Ok(BuildReport::new(mat, Exactness::UpperBound, Theorem::Mkn4k3, n + 1))
}

/// `n = 4k+1 >= 5`: at most `min(n+3, n-1+m)` colors.
pub fn build_mkn_4k1(m: usize, n: usize) -> Result<BuildReport, BuildError> {
    check_params("build_mkn_4k1", m >= 2 && n >= 5 && n % 4 == 1, || {
        format!("need m >= 2, n = 4k+1 >= 5; got m={m}, n={n}")
    })?;
    let corner = u_compound_4k1(m, corner_base(m, n))?;
    let mat = mkn_matrix(m, n, &corner)?;
    Ok(BuildReport::new(mat, Exactness::UpperBound, Theorem::Mkn4k1, (n + 3).min(n - 1 + m)))
}

/// One shared vertex, odd `n`: the corner labels of `mK_n` are the `m`
/// largest, so they merge into a single vertex labeled `N`.
pub fn build_amalgam_k1_odd(m: usize, n: usize) -> Result<BuildReport, BuildError> {
    check_params("build_amalgam_k1_odd", m >= 2 && n >= 3 && n % 2 == 1, || {
        format!("need m >= 2, odd n >= 3; got m={m}, n={n}")
    })?;
    let ps = ParameterSet::new(m, n, 1);
    let base = mkn_matrix(m, n, &vec![0; m])?;
    let mut mat = LabelingMatrix::empty(graph_for(m, n, 1)?, MatrixKind::Total);
    for i in 1..=m {
        for j in 1..=n {
            for k in j..=n {
                if (j, k) != (n, n) {
                    mat.set_local(i, j, k, base.get_local(i, j, k).expect("filled"));
                }
            }
        }
    }
    mat.set_local(1, n, n, ps.big_n);
    Ok(BuildReport::new(mat, Exactness::Exact, Theorem::AmalgamK1Odd, n))
}

/// Two shared vertices, odd `n`, two or three copies: the odd guide without
/// its last two rows, diagonals from the interleaved blocks, and the three
/// leftover labels in `A_{1,2}`, `A_{1,1}`, `A_{2,2}`.
pub fn build_amalgam_k2(m: usize, n: usize) -> Result<BuildReport, BuildError> {
    check_params("build_amalgam_k2", (2..=3).contains(&m) && n >= 3 && n % 2 == 1, || {
        format!("need m in {{2, 3}}, odd n >= 3; got m={m}, n={n}")
    })?;
    let ps = ParameterSet::new(m, n, 2);
    let mut mat = LabelingMatrix::empty(graph_for(m, n, 2)?, MatrixKind::Total);
    odd_guide_stage(&mut mat, n, n - 2, ps.n5, n - 2)?;
    let used: BTreeSet<u64> = mat.labels().into_iter().collect();
    let left: Vec<u64> = (1..=ps.big_n).filter(|v| !used.contains(v)).collect();
    if left.len() != 3 {
        return Err(BuildError::InvalidParameters {
            builder: "build_amalgam_k2",
            reason: format!("expected 3 unused labels, found {}", left.len()),
        });
    }
    // fill_shared hands out consecutive labels, so place them one at a time
    for (cell, v) in [(1, 2), (1, 1), (2, 2)].into_iter().zip(left) {
        fill_shared(&mut mat, &[cell], v);
    }
    Ok(BuildReport::new(mat, Exactness::Exact, Theorem::AmalgamK2, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::dense;

    fn row_weights(rep: &BuildReport, i: usize) -> Vec<u64> {
        let n = rep.graph().n();
        (1..=n).map(|j| rep.weight_of(i, j)).collect()
    }

    #[test]
    fn two_k7() {
        let rep = build_mkn_4k3(2, 7).unwrap();
        assert_eq!(row_weights(&rep, 1), vec![83, 134, 171, 194, 211, 222, 235]);
        assert_eq!(row_weights(&rep, 2), vec![83, 134, 171, 194, 211, 222, 234]);
        assert_eq!(rep.colors, 8);
        let l1 = dense(&rep.matrix.copy_block(1)).unwrap();
        let diag: Vec<u64> = (0..7).map(|j| l1[j][j]).collect();
        assert_eq!(diag, vec![43, 44, 49, 50, 51, 52, 55]);
        assert_eq!(l1[0], vec![43, 2, 3, 6, 7, 10, 12]);
    }

    #[test]
    fn two_k9() {
        let rep = build_mkn_4k1(2, 9).unwrap();
        assert_eq!(row_weights(&rep, 1), vec![142, 241, 318, 373, 414, 441, 462, 477, 495]);
        assert_eq!(row_weights(&rep, 2), vec![142, 241, 318, 373, 414, 441, 462, 477, 492]);
        assert_eq!(rep.colors, 10);
        let corners: Vec<_> = (1..=2).map(|i| rep.matrix.get_local(i, 9, 9).unwrap()).collect();
        assert_eq!(corners, vec![89, 90]);
    }

    #[test]
    fn one_point_union_of_two_k9() {
        let rep = build_amalgam_k1_odd(2, 9).unwrap();
        assert_eq!(rep.matrix.get_local(1, 9, 9), Some(89));
        assert_eq!(rep.colors, 9);
        assert!(rep.matrix.is_bijective());
    }

    #[test]
    fn shared_edge_2k7() {
        let rep = build_amalgam_k2(2, 7).unwrap();
        assert_eq!(rep.weight_of(1, 6), 357);
        assert_eq!(rep.weight_of(1, 7), 378);
        assert_eq!(rep.weight_of(1, 1), 81);
        assert_eq!(rep.weight_of(2, 1), 81);
        let a = dense(&rep.matrix.a_block()).unwrap();
        assert_eq!((a[0][1], a[0][0], a[1][1]), (50, 52, 53));
        assert_eq!(rep.colors, 7);
        assert!(build_amalgam_k2(4, 7).is_err());
    }
}
