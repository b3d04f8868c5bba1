//! Joins a new vertex to every vertex of the amalgam and moves the diagonal
//! labels onto the new edges, and turns mK_4k labelings into mK_(4k+1) ones.

use amalgam_lat::{build_even, dispatch, extend_even_to_4k1, lift_to_join};

fn main() {
    let base = dispatch(3, 6, 1).unwrap();
    let up = lift_to_join(&base).unwrap();
    println!("{}: {} colors, diagonal sum {:?}", base.graph(), base.colors, base.diag_sum);
    println!("{}: {} colors, apex weight {}", up.graph(), up.colors, up.weights.last().unwrap());

    let even = build_even(2, 8, 0).unwrap();
    let odd = extend_even_to_4k1(&even).unwrap();
    println!("{} -> {}: {} colors, theorem {}", even.graph(), odd.graph(), odd.colors, odd.theorem);
}
