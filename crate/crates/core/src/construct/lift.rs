use crate::error::BuildError;
use crate::graph::apex_join;
use crate::matrix::{LabelingMatrix, MatrixKind};

use super::{BuildReport, Theorem};

/// Moves every vertex label onto the edge from that vertex to a new apex.
/// Old weights are unchanged and the apex weighs `D(M)`, so the result is a
/// local antimagic edge labeling of `G ∨ K1` as long as `D(M)` differs from
/// every old weight.
pub fn lift_to_join(report: &BuildReport) -> Result<BuildReport, BuildError> {
    if report.matrix.kind() != MatrixKind::Total {
        return Err(BuildError::WrongShape("lifting needs a total labeling matrix".into()));
    }
    let g = *report.graph();
    let joined = apex_join(g)?;
    let apex = g.p();
    let diag_sum = report.matrix.diag_sum();
    if let Some(vertex) = report.weights.iter().position(|&w| w == diag_sum) {
        return Err(BuildError::DiagonalCollision { diag_sum, vertex });
    }
    let mut out = LabelingMatrix::empty(joined, MatrixKind::EdgeOnly);
    for a in 0..apex {
        for b in a..apex {
            if let Some(v) = report.matrix.get(a, b) {
                if a == b {
                    out.set(a, apex, v);
                } else {
                    out.set(a, b, v);
                }
            }
        }
    }
    Ok(BuildReport::new(out, report.exactness, Theorem::ApexLift, report.bound + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_even, build_odd_r_even_m_odd, build_odd_r_odd};

    #[test]
    fn apex_weights_from_examples() {
        for (rep, apex, colors) in [
            (build_even(3, 6, 0).unwrap(), 981, 7),
            (build_even(3, 6, 1).unwrap(), 856, 7),
            (build_odd_r_odd(2, 7, 3).unwrap(), 234, 8),
            (build_odd_r_even_m_odd(3, 7, 4).unwrap(), 700, 8),
        ] {
            let lifted = lift_to_join(&rep).unwrap();
            assert_eq!(*lifted.weights.last().unwrap(), apex);
            assert_eq!(lifted.colors, colors);
            assert_eq!(lifted.weights[..rep.weights.len()], rep.weights[..]);
            assert!(lifted.matrix.is_bijective());
            assert_eq!(lifted.matrix.hole_mismatch(), None);
        }
    }

    #[test]
    fn collision_is_reported() {
        // K3 with vertex labels 6, 1, 2 and edges 01:3, 02:4, 12:5 gives
        // weights 13, 9, 11 and D(M) = 9
        let g = crate::graph::build_amalgam(1, 3, 0).unwrap();
        let mut m = LabelingMatrix::empty(g, MatrixKind::Total);
        for (a, b, v) in [(0, 0, 6), (1, 1, 1), (2, 2, 2), (0, 1, 3), (0, 2, 4), (1, 2, 5)] {
            m.set(a, b, v);
        }
        let rep = BuildReport::new(m, super::super::Exactness::Exact, Theorem::Even, 3);
        assert_eq!(lift_to_join(&rep), Err(BuildError::DiagonalCollision { diag_sum: 9, vertex: 1 }));
        assert!(lift_to_join(&lift_to_join(&build_even(2, 2, 0).unwrap()).unwrap()).is_err());
    }
}
