//! Exact chi_la and chi_lat of the smallest amalgams by exhaustive search,
//! compared with what the builders achieve.

use amalgam_lat::{build_amalgam, cross_check, exact_chi_la, SearchLimits};

fn main() {
    let limits = SearchLimits { max_elems: 16, ..SearchLimits::default() };
    for (m, n, r) in [(2, 3, 0), (2, 3, 1), (2, 3, 2), (3, 3, 2), (3, 3, 1)] {
        let c = cross_check(m, n, r, &limits).unwrap();
        let exact = c.oracle.value.map_or("?".into(), |v| v.to_string());
        println!(
            "{}: builder {} ({:?}), oracle {exact} after {} nodes",
            build_amalgam(m, n, r).unwrap(),
            c.builder_colors,
            c.exactness,
            c.oracle.nodes
        );
        assert!(c.consistent);
    }

    let g = build_amalgam(2, 4, 1).unwrap();
    let res = exact_chi_la(&g, &limits).unwrap();
    println!("chi_la({g}) = {:?}, witness edges {:?}", res.value, res.witness.unwrap().edges);
}
