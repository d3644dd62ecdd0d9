use num_complex::Complex64;

use super::selberg::{gamma, selberg_b, SelbergMode};
use super::check_params;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GMode {
    /// The closed form of `g_m` itself, through `B_{k-1}`.
    Absolute,
    /// `g_m / g_{m+n}` as a Gamma product.
    Ratio(i64),
}

fn check_index(level: i64, k: i64, m: i64) -> Result<()> {
    check_params(level, k)?;
    if m < k || m > level + k {
        return Err(Error::InvalidParameter(format!("need {k} <= m <= {}, got m={m}", level + k)));
    }
    Ok(())
}

/// `g_m / g_{m+n}` for `n >= 0`:
///
/// `prod_{j=m+1-k}^{m+n-k} Γ(j/κ)Γ((K+k-j)/κ) / prod_{j'=0}^{n-1} Γ((m+j')/κ)Γ((K+k-m-j')/κ)`.
///
/// Negative `n` is handled by inversion.
pub fn g_ratio(level: i64, k: i64, m: i64, n: i64) -> Result<f64> {
    check_index(level, k, m)?;
    check_index(level, k, m + n)?;
    if n < 0 {
        return Ok(1.0 / g_ratio(level, k, m + n, -n)?);
    }
    let kappa = (level + 2 * k) as f64;
    let top = (level + k) as f64;
    let mut r = 1.0;
    for j in (m + 1 - k)..=(m + n - k) {
        let j = j as f64;
        r *= gamma(j / kappa)? * gamma((top - j) / kappa)?;
    }
    for jp in 0..n {
        let x = (m + jp) as f64;
        r /= gamma(x / kappa)? * gamma((top - x) / kappa)?;
    }
    Ok(r)
}

/// `g_m` from
/// `g_m^{-1} = e^{pi i (k-1)(1/κ+1)} (2i)^{k-1} prod_{n=0}^{k-2} sin(pi((1-m+n)/κ + 1))
///   prod_{n'=1}^{k-2} [sum_{j=0}^{n'} e^{pi i (n'-2j)/κ}] B_{k-1}((1-m)/κ + 1, -2(k-1)/κ, 1/κ)`.
pub fn g_absolute(level: i64, k: i64, m: i64) -> Result<Complex64> {
    check_index(level, k, m)?;
    let kappa = (level + 2 * k) as f64;
    let pi = std::f64::consts::PI;
    let km1 = (k - 1) as f64;
    let mut v = Complex64::from_polar(1.0, pi * km1 * (1.0 / kappa + 1.0)) * Complex64::new(0.0, 2.0).powi(k as i32 - 1);
    for n in 0..(k - 1) {
        v *= (pi * ((1 - m + n) as f64 / kappa + 1.0)).sin();
    }
    for np in 1..(k - 1) {
        let s: Complex64 = (0..=np).map(|j| Complex64::from_polar(1.0, pi * (np - 2 * j) as f64 / kappa)).sum();
        v *= s;
    }
    let b = selberg_b((k - 1) as u32, (1 - m) as f64 / kappa + 1.0, -2.0 * km1 / kappa, 1.0 / kappa, SelbergMode::Closed)?;
    v *= b;
    if v.norm() == 0.0 {
        return Err(Error::GammaPole(0.0));
    }
    Ok(1.0 / v)
}

pub fn g_factor(level: i64, k: i64, m: i64, mode: GMode) -> Result<Complex64> {
    match mode {
        GMode::Absolute => g_absolute(level, k, m),
        GMode::Ratio(n) => Ok(Complex64::new(g_ratio(level, k, m, n)?, 0.0)),
    }
}

/// `g_m / g_l` for any two labels.
pub(crate) fn g_over(level: i64, k: i64, m: i64, l: i64) -> Result<f64> {
    g_ratio(level, k, m, l - m)
}
