//! Affine Jack polynomials at level 2, coupling 2, through p^4.
//!
//! Run with `cargo run --example jack_series`.
use affine_jack::jack::{jack_series, JackLabel};

fn main() -> affine_jack::Result<()> {
    for label in JackLabel::all(2, 2)? {
        let r = jack_series(label, 4)?;
        println!("l = {}: alpha = {}, eigenvalue = {}", label.l, r.alpha, r.eigenvalue);
        println!("  J = {}", r.normalized);
    }
    Ok(())
}
