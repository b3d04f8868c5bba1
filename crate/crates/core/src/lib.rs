//! Local antimagic total labelings of amalgamated complete graphs.
//!
//! `A(mK_n, K_r)` is `m` copies of `K_n` glued along a common `K_r`. The
//! builders in [`construct`] fill its labeling matrix so that the induced
//! vertex weights use as few distinct values as the theory allows; the
//! [`verify`] module recomputes everything from the raw labels, and the
//! [`oracle`] finds exact optima on small graphs by exhaustive search.
//!
//! ```
//! use amalgam_lat::{dispatch, lift_to_join};
//!
//! let report = dispatch(3, 6, 1).unwrap();
//! assert_eq!(report.colors, 6);
//! assert_eq!(report.diag_sum, Some(856));
//! assert_eq!(lift_to_join(&report).unwrap().colors, 7);
//! ```

pub mod construct;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod graph;
pub mod magic;
pub mod matrix;
pub mod oracle;
pub mod selftest;
pub mod sequences;
pub mod signs;
pub mod verify;

pub use construct::{
    build_amalgam_k1_odd, build_amalgam_k2, build_even, build_mkn_4k1, build_mkn_4k3, build_odd_r_even_m_even,
    build_odd_r_even_m_odd, build_odd_r_odd, dispatch, dispatch_with, extend_even_to_4k1, lift_to_join, BuildOptions,
    BuildReport, Exactness, ParameterSet, Theorem,
};
pub use error::{BuildError, GraphError, IoError, MagicError, OracleError, SequenceError, SignError, VerifyError};
pub use graph::{apex_join, build_amalgam, AmalgamGraph, Graph, SimpleGraph, Vertex};
pub use magic::{magic_rectangle, magic_rectangle_with, verify_magic, MagicMethod, MagicRectangle};
pub use matrix::{LabelingMatrix, MatrixKind};
pub use oracle::{cross_check, exact_chi_la, exact_chi_lat, OracleResult, SearchLimits};
pub use signs::{sign_even, sign_odd, SignMatrix};
pub use verify::{
    check, check_row_monotone, matrix_to_labeling, weights, Labeling, MonotoneOutcome, VerificationReport,
};
