//! Builds a labeling of A(mK_n, K_r) and prints its matrix.
//!
//!     cargo run --example construct -- 3 7 4

use amalgam_lat::dispatch;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (m, n, r) = match args[..] {
        [m, n, r] => (m, n, r),
        [] => (3, 7, 4),
        _ => panic!("usage: construct M N R"),
    };
    let report = match dispatch(m, n, r) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(3);
        }
    };
    let g = report.graph();
    println!("{g}: p = {}, q = {}, labels 1..={}", g.p(), g.q(), g.total_elements());
    println!("{}", report.matrix);
    let relation = if report.is_exact() { "=" } else { "<=" };
    println!("theorem {}: chi_lat {relation} {} (uses {} colors)", report.theorem, report.bound, report.colors);
    println!("weights: {:?}", report.weights);
}
