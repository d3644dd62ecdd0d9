//! Transition matrices from characters to Jack polynomials and the first
//! order heat equation they satisfy.
//!
//! Run with `cargo run --example heat_equation`.
use affine_jack::jack::{heat_check, transition_matrix};

fn main() -> affine_jack::Result<()> {
    let b = transition_matrix(1, 2, 3)?;
    for (lambda, row) in b.iter().enumerate() {
        for (mu, entry) in row.iter().enumerate() {
            println!("b[{lambda}][{mu}] = {entry}");
        }
    }
    for (level, k) in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)] {
        let r = heat_check(level, k, 8)?;
        match r.failure {
            None => println!("K={level} k={k}: holds through order 8"),
            Some((row, e, j, v)) => println!("K={level} k={k}: row {row} leaves {v} x^{j} p^{e}"),
        }
    }
    Ok(())
}
