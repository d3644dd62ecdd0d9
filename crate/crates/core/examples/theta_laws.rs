//! Theta function transformation laws at a sample point, and the Jacobi
//! triple product as an exact series identity.
//!
//! Run with `cargo run --example theta_laws`.
use affine_jack::affine::shifted_weyl_denominator;
use affine_jack::qseries::rat;
use affine_jack::theta::{law_residual, theta_jacobi_series, ThetaKind, ThetaLaw};
use num_complex::Complex64;

fn main() -> affine_jack::Result<()> {
    let v = Complex64::new(0.31, 0.12);
    let z = Complex64::new(-0.2, 0.07);
    let tau = Complex64::new(0.23, 0.91);
    let laws = [
        ThetaLaw::Theta1S,
        ThetaLaw::Theta1PrimeS,
        ThetaLaw::ES,
        ThetaLaw::GS,
        ThetaLaw::LevelS { m: 2, kappa: 5 },
        ThetaLaw::Theta1T,
        ThetaLaw::LevelT { m: 3, kappa: 5 },
    ];
    for law in laws {
        println!("{:<22} residual {:.2e}", law.name(), law_residual(law, v, z, tau)?);
    }

    let order = 6;
    let delta = shifted_weyl_denominator(1, order).with_level(0);
    let theta = theta_jacobi_series(ThetaKind::Theta1, 2, &rat(1, 1), order)?;
    println!("\np^(1/8) delta = {delta}");
    println!("theta_1(2z)   = {theta}");
    Ok(())
}
