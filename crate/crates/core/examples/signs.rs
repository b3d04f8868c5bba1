//! Sign matrices: symmetric integer matrices whose rows and columns sum to
//! zero, entries ±1 off the diagonal.

use amalgam_lat::{sign_even, sign_odd};

fn main() {
    for n in [4, 6, 7, 9] {
        let s = if n % 2 == 0 { sign_even(n) } else { sign_odd(n) }.unwrap();
        println!("order {n}, diagonal {:?}", s.diagonal());
        print!("{s}");
        assert!(s.row_sums().iter().all(|&x| x == 0));
        println!();
    }
}
