//! The acceptance checks at reduced orders, as a library call.
//!
//! Run with `cargo run --example acceptance_quick`.
use affine_jack::suite::{run_acceptance, Settings};

fn main() {
    for line in run_acceptance(&Settings::quick()) {
        println!("{line}");
    }
}
