use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::sj::{build_sj, fit_scalar};
use crate::error::{Error, Result};
use crate::jack::{jack_normalized, JackLabel};
use crate::qseries::{to_f64, NomeSeries};

/// Outcome of the numeric check
/// `J_m(z/τ, u - z²/τ, -1/τ) = sum_l S^J_{m,l}(τ) J_l(z, u, τ)`.
#[derive(Clone, Debug, Serialize)]
pub struct ModularReport {
    #[serde(rename = "K")]
    pub level: i64,
    pub k: i64,
    pub order: u32,
    /// Fitted global constant `c` with `lhs ≈ c rhs`.
    pub phase: [f64; 2],
    /// `| |c| - 1 |`.
    pub phase_modulus_defect: f64,
    /// `max_m |lhs_m - c rhs_m|`.
    pub max_deviation: f64,
    /// Estimated truncation error, largest over all series and both sides.
    pub tail: f64,
    pub entries: Vec<EntryReport>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub m: i64,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub deviation: f64,
}

fn pair(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

/// Mass of the terms of `f` in the `unit`-th whole p-unit counted from the end.
fn unit_mass(f: &NomeSeries, z: Complex64, tau: Complex64, unit: usize) -> f64 {
    let grid = f.grid() as usize;
    let len = f.coeffs().len();
    let hi = len.saturating_sub(unit * grid);
    let lo = hi.saturating_sub(grid);
    let xabs = (-2.0 * std::f64::consts::PI * z.im).exp();
    let pabs = (-2.0 * std::f64::consts::PI * tau.im).exp();
    let mut m = 0.0;
    for n in lo..hi {
        let e = to_f64(&f.exponent(n));
        for (j, c) in f.coeffs()[n].iter() {
            m += to_f64(c).abs() * xabs.powi(j as i32) * pabs.powf(e);
        }
    }
    m
}

/// Geometric extrapolation from the last two p-units.
fn tail(f: &NomeSeries, z: Complex64, tau: Complex64) -> f64 {
    let last = unit_mass(f, z, tau, 0);
    let prev = unit_mass(f, z, tau, 1);
    if last == 0.0 {
        return 0.0;
    }
    let r = if prev > 0.0 { last / prev } else { 1.0 };
    if r >= 1.0 {
        f64::INFINITY
    } else {
        last * r / (1.0 - r)
    }
}

/// Evaluates both sides from the normalized Jack series truncated at `order`.
///
/// The comparison allows one global constant per `(K, k)`; it is fitted by
/// least squares and reported together with how far its modulus is from 1.
pub fn verify_modular_numeric(
    level: i64,
    k: i64,
    z: Complex64,
    u: Complex64,
    tau: Complex64,
    order: u32,
    tol: f64,
) -> Result<ModularReport> {
    if tau.im <= 0.0 {
        return Err(Error::TauNotInUpperHalfPlane(format!("{tau}")));
    }
    let labels = JackLabel::all(level, k)?;
    let series: Vec<NomeSeries> = labels.iter().map(|l| jack_normalized(*l, order)).collect::<Result<_>>()?;
    let tau_s = -1.0 / tau;
    let z_s = z / tau;
    let u_s = u - z * z / tau;
    let mut worst_tail: f64 = 0.0;
    for f in &series {
        worst_tail = worst_tail.max(tail(f, z, tau)).max(tail(f, z_s, tau_s));
    }
    if worst_tail > tol / 10.0 {
        return Err(Error::TailBound { bound: worst_tail, limit: tol / 10.0, order });
    }
    let n = labels.len();
    let lhs = DMatrix::from_iterator(n, 1, series.iter().map(|f| f.eval(z_s, u_s, tau_s)).collect::<Result<Vec<_>>>()?);
    let rhs_vec =
        DMatrix::from_iterator(n, 1, series.iter().map(|f| f.eval(z, u, tau)).collect::<Result<Vec<_>>>()?);
    let sj = build_sj(level, k)?;
    let rhs = sj.at(tau) * rhs_vec;
    let (c, dev) = fit_scalar(&lhs, &rhs);
    let entries = labels
        .iter()
        .enumerate()
        .map(|(a, l)| EntryReport {
            m: l.l,
            lhs: pair(lhs[a]),
            rhs: pair(rhs[a]),
            deviation: (lhs[a] - c * rhs[a]).norm(),
        })
        .collect();
    let defect = (c.norm() - 1.0).abs();
    Ok(ModularReport {
        level,
        k,
        order,
        phase: pair(c),
        phase_modulus_defect: defect,
        max_deviation: dev,
        tail: worst_tail,
        entries,
        passed: dev < tol && defect < tol,
    })
}
