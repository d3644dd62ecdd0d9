//! Selberg integrals (closed form and quadrature) and the normalization
//! factors g built from them.
//!
//! Run with `cargo run --example selberg_gfactor`.
use affine_jack::modular::{g_factor, selberg_b, GMode, SelbergMode};

fn main() -> affine_jack::Result<()> {
    for (n, a, b, g) in [(1, 2.0, 3.0, 1.0), (2, 1.5, 1.2, 0.3), (2, 2.0, 2.0, 1.0)] {
        let closed = selberg_b(n, a, b, g, SelbergMode::Closed)?;
        let quad = selberg_b(n, a, b, g, SelbergMode::Quadrature)?;
        println!("B_{n}({a}, {b}, {g}) = {closed:.15} (quadrature {quad:.15})");
    }
    println!();
    let (level, k) = (3, 2);
    for m in k..=level + k {
        let abs = g_factor(level, k, m, GMode::Absolute)?;
        let ratio = g_factor(level, k, m, GMode::Ratio(k - m))?;
        println!("K={level} k={k} m={m}: g = {abs:.10}, g_m/g_k = {:.10}", ratio.re);
    }
    Ok(())
}
