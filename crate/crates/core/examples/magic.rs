//! Magic rectangles on consecutive integers.

use amalgam_lat::{magic_rectangle, verify_magic};

fn main() {
    for (a, b, lo) in [(3, 3, 1), (3, 5, 1), (5, 7, 20), (9, 3, 19)] {
        let rect = magic_rectangle(a, b, lo).unwrap();
        assert!(verify_magic(&rect));
        println!("{a}x{b} from {lo}: rows sum to {}, columns to {}", rect.row_sums()[0], rect.col_sums()[0]);
        print!("{rect}");
        println!();
    }
    println!("{}", magic_rectangle(1, 4, 1).unwrap_err());
}
