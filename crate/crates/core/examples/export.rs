//! Writes one labeling as JSON, CSV and LaTeX, and reads the JSON back.

use amalgam_lat::dispatch;
use amalgam_lat::export::{from_json, to_csv, to_json, to_tex_copy};

fn main() {
    let report = dispatch(2, 4, 1).unwrap();
    let json = to_json(&report).unwrap();
    println!("{json}\n");
    println!("{}", to_csv(&report).unwrap());
    println!("{}", to_tex_copy(&report, 1));
    assert_eq!(from_json(&json).unwrap(), report);
}
