//! Acceptance criteria A1 to A12 at their full orders and tolerances.
//!
//! Runs without the libtest harness so that one line per criterion is always
//! printed, whether or not output capture is on.

use affine_jack::suite::{run_acceptance, Settings};

fn main() {
    let lines = run_acceptance(&Settings::full());
    for l in &lines {
        println!("{l}");
    }
    let failed: Vec<&str> = lines.iter().filter(|l| !l.passed).map(|l| l.id.as_str()).collect();
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", lines.len(), lines.len());
    } else {
        println!("acceptance: failed {failed:?}");
        std::process::exit(1);
    }
}
