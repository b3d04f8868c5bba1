//! Odd clique order with at least three shared vertices. Each variant places
//! a magic rectangle `Ω` so that every private vertex gains the same amount
//! from the shared columns.

use crate::error::BuildError;
use crate::matrix::{LabelingMatrix, MatrixKind};
use crate::sequences::BlockFamily;
use crate::signs::sign_even;

use super::{
    apply_guide, check_params, diagonal_cells, fill_shared, graph_for, guide_even, guide_with, upper_cells,
    BuildOptions, BuildReport, DiagonalRule, Exactness, ParameterSet, Theorem,
};

fn odd_params(builder: &'static str, m: usize, n: usize, r: usize, ok: bool) -> Result<(), BuildError> {
    check_params(builder, m >= 2 && n % 2 == 1 && r >= 3 && r < n && ok, || {
        format!("m={m}, n={n}, r={r} is outside this builder's range")
    })
}

/// Writes row block `i` of `omega` (rows `(i-1)(n-r)..i(n-r)`) into copy
/// `i`'s private rows at shared columns `first_col..`.
fn place_row_blocks(mat: &mut LabelingMatrix, omega: &crate::magic::MagicRectangle, first_col: usize) {
    let g = *mat.graph();
    let k = g.private_per_copy();
    for i in 1..=g.m() {
        for j in 1..=k {
            for c in 0..omega.cols() {
                mat.set_local(i, j, first_col + c, omega.get((i - 1) * k + j - 1, c));
            }
        }
    }
}

/// Odd `r >= 3`: `Ω` is `(m(n-r)+1) x r`; its row blocks are the `B_i` and
/// its last row is the diagonal of `A`.
pub fn build_odd_r_odd(m: usize, n: usize, r: usize) -> Result<BuildReport, BuildError> {
    build_odd_r_odd_with(m, n, r, &BuildOptions::default())
}

pub fn build_odd_r_odd_with(m: usize, n: usize, r: usize, opts: &BuildOptions) -> Result<BuildReport, BuildError> {
    odd_params("build_odd_r_odd", m, n, r, r % 2 == 1)?;
    let ps = ParameterSet::new(m, n, r);
    let k = n - r;
    let mut mat = LabelingMatrix::empty(graph_for(m, n, r)?, MatrixKind::Total);
    let guide = guide_even(k, 0)?;
    apply_guide(&mut mat, &guide, &BlockFamily::interval(m, ps.n2 as usize, 0), k)?;

    let lo = m as u64 * ps.n2 + 1;
    let omega = opts.omega(m * k + 1, r, lo)?;
    place_row_blocks(&mut mat, &omega, k + 1);
    for c in 0..r {
        mat.set_local(1, k + 1 + c, k + 1 + c, omega.get(m * k, c));
    }
    let start = lo + ((m * k + 1) * r) as u64;
    let last = fill_shared(&mut mat, &upper_cells(r), start);
    debug_assert_eq!(last - 1, ps.big_n);
    Ok(BuildReport::new(mat, Exactness::Exact, Theorem::OddROdd, n))
}

/// Even `r >= 4`, odd `m`: the guide has one extra column `β` and its
/// diagonal is numbered from `Z2 - (n-r) + 1`, which leaves the blocks in
/// between for the `m(n-r) x (r-1)` rectangle of the `X_i`.
pub fn build_odd_r_even_m_odd(m: usize, n: usize, r: usize) -> Result<BuildReport, BuildError> {
    build_odd_r_even_m_odd_with(m, n, r, &BuildOptions::default())
}

pub fn build_odd_r_even_m_odd_with(
    m: usize,
    n: usize,
    r: usize,
    opts: &BuildOptions,
) -> Result<BuildReport, BuildError> {
    odd_params("build_odd_r_even_m_odd", m, n, r, r.is_multiple_of(2) && m % 2 == 1)?;
    let ps = ParameterSet::new(m, n, r);
    let k = n - r;
    let mut mat = LabelingMatrix::empty(graph_for(m, n, r)?, MatrixKind::Total);
    let guide = guide_with(&sign_even(k + 1)?, k, k + 1, DiagonalRule::From(ps.z2 - k as u64 + 1));
    apply_guide(&mut mat, &guide, &BlockFamily::interval(m, ps.z2 as usize, 0), k)?;

    let omega = opts.omega(m * k, r - 1, m as u64 * ps.z1 + 1)?;
    place_row_blocks(&mut mat, &omega, k + 2);
    let next = fill_shared(&mut mat, &upper_cells(r), m as u64 * ps.z2 + 1);
    let last = fill_shared(&mut mat, &diagonal_cells(r), next);
    debug_assert_eq!(last - 1, ps.big_n);
    Ok(BuildReport::new(mat, Exactness::Exact, Theorem::OddREvenMOdd, n))
}

/// Even `r >= 4`, even `m`: `Ω` is `(m(n-r)+1) x (r-1)` starting at
/// `mN3 + 2`; its last row `α` becomes `A_{1,2..r}` and `A_{1,1} = mN3 + 1`.
pub fn build_odd_r_even_m_even(m: usize, n: usize, r: usize) -> Result<BuildReport, BuildError> {
    build_odd_r_even_m_even_with(m, n, r, &BuildOptions::default())
}

pub fn build_odd_r_even_m_even_with(
    m: usize,
    n: usize,
    r: usize,
    opts: &BuildOptions,
) -> Result<BuildReport, BuildError> {
    odd_params("build_odd_r_even_m_even", m, n, r, r.is_multiple_of(2) && m.is_multiple_of(2))?;
    let ps = ParameterSet::new(m, n, r);
    let k = n - r;
    let mut mat = LabelingMatrix::empty(graph_for(m, n, r)?, MatrixKind::Total);
    let guide = guide_with(&sign_even(k + 1)?, k, k + 1, DiagonalRule::From(ps.z1 + 1));
    apply_guide(&mut mat, &guide, &BlockFamily::interval(m, ps.n3 as usize, 0), k)?;

    let base = m as u64 * ps.n3;
    let omega = opts.omega(m * k + 1, r - 1, base + 2)?;
    place_row_blocks(&mut mat, &omega, k + 2);
    mat.set_local(1, k + 1, k + 1, base + 1);
    for c in 0..r - 1 {
        mat.set_local(1, k + 1, k + 2 + c, omega.get(m * k, c));
    }
    let rest: Vec<(usize, usize)> = (2..=r).flat_map(|j| (j..=r).map(move |c| (j, c))).collect();
    let last = fill_shared(&mut mat, &rest, base + ((m * k + 1) * (r - 1)) as u64 + 2);
    debug_assert_eq!(last - 1, ps.big_n);
    Ok(BuildReport::new(mat, Exactness::Exact, Theorem::OddREvenMEven, n))
}
