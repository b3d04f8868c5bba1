//! Checks the transcribed reference labelings and the builder invariants
//! over small parameters.

use amalgam_lat::fixtures;
use amalgam_lat::selftest::{selftest, Scope};
use amalgam_lat::MagicMethod;

fn main() {
    for f in fixtures::all() {
        for e in &f.errata {
            println!("{}: {} printed {}, corrected to {} ({})", f.name, e.location, e.printed, e.corrected, e.reason);
        }
    }
    let summary = selftest(Scope::All, MagicMethod::Auto);
    print!("{summary}");
    for ((m, n, r), why) in &summary.skipped {
        println!("skipped ({m},{n},{r}): {why}");
    }
    std::process::exit(if summary.passed() { 0 } else { 1 });
}
