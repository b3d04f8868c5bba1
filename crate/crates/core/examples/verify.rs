//! Recomputes weights from raw labels and shows what a broken labeling
//! looks like to the checker.

use amalgam_lat::{check, dispatch, matrix_to_labeling};

fn main() {
    let report = dispatch(2, 5, 0).unwrap();
    let g = *report.graph();
    let mut f = matrix_to_labeling(&report.matrix, &g).unwrap();
    let ok = check(&g, &f).unwrap();
    println!("{g}: proper = {}, bijective = {}, {} colors", ok.proper, ok.bijective, ok.colors);

    // lower the label of v(1,3) until its weight meets v(1,2)'s, and hand its
    // old label to the element that held the new one
    let gap = ok.weights[2] - ok.weights[1];
    let (old, new) = (f.vertices[2], f.vertices[2] - gap);
    f.vertices[2] = new;
    if let Some(v) = f.vertices.iter_mut().skip(3).find(|v| **v == new) {
        *v = old;
    }
    for label in f.edges.values_mut().filter(|l| **l == new) {
        *label = old;
    }
    let bad = check(&g, &f).unwrap();
    println!("after the swap: proper = {}, bijective = {}", bad.proper, bad.bijective);
    for v in &bad.violations {
        println!("  {} and {} both weigh {}", v.u_name, v.v_name, v.weight);
    }
}
