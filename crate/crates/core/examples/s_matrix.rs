//! The matrix S(K,k) three ways, and the projective relations of S^J.
//!
//! Run with `cargo run --example s_matrix`.
use affine_jack::modular::{build_s_macdonald, build_s_product, build_sj, fixture, relations};

fn main() -> affine_jack::Result<()> {
    let (level, k) = (3, 2);
    let s = build_s_product(level, k)?;
    println!("S({level},{k}) from the sine product:\n{}", s.to_text());
    let (d, m, l) = s.max_deviation(&build_s_macdonald(level, k)?);
    println!("Macdonald form: max deviation {d:.1e} at ({m},{l})");
    let (d, _, _) = s.max_deviation(&fixture(level, k)?);
    println!("closed table:   max deviation {d:.1e}");

    let sj = build_sj(2, 2)?;
    println!("\nS^J(2,2) = tau^({}) times\n{}", sj.weight, sj.constant.to_text());
    for (level, k) in [(1, 2), (2, 3), (4, 2)] {
        let r = relations(level, k)?;
        println!(
            "K={level} k={k}: (S^J)^2 = {:.6} I, (S^J T^J)^3 = {:.6} (S^J)^2, residual {:.1e}",
            r.s2_scalar,
            r.st3_scalar,
            r.max_residual()
        );
    }
    Ok(())
}
