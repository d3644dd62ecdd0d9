use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_params, sin_kappa, SMatrix};
use crate::error::{Error, Result};

/// `U_{m,l} = e^{-pi i m l / kappa}` over `Z/2kappa`.
fn u_matrix(kappa: i64) -> DMatrix<Complex64> {
    let n = (2 * kappa) as usize;
    DMatrix::from_fn(n, n, |m, l| {
        let ph = -std::f64::consts::PI * ((m * l) as i64 % (2 * kappa)) as f64 / kappa as f64;
        Complex64::from_polar(1.0, ph)
    })
}

/// `A_{m,m-1} = 1/(2 s(m))`, `A_{m,m+1} = -1/(2 s(m))`, indices mod `2kappa`.
/// Rows with `s(m) = 0` are left empty; they only ever meet fused-away entries.
fn a_matrix(kappa: i64) -> DMatrix<Complex64> {
    let n = 2 * kappa;
    let mut a = DMatrix::zeros(n as usize, n as usize);
    for m in 0..n {
        if m % kappa == 0 {
            continue;
        }
        let c = 1.0 / (2.0 * sin_kappa(kappa, m));
        a[(m as usize, (m - 1).rem_euclid(n) as usize)] += Complex64::new(c, 0.0);
        a[(m as usize, (m + 1).rem_euclid(n) as usize)] -= Complex64::new(c, 0.0);
    }
    a
}

/// Fusion zeros at stage `band`: `j_{-n}` vanishes for `n` within `band` of `0`
/// or of `kappa` (mod `2kappa`).
fn fusion_projector(kappa: i64, band: i64) -> DMatrix<Complex64> {
    let n = 2 * kappa;
    DMatrix::from_fn(n as usize, n as usize, |a, b| {
        let a = a as i64;
        if a != b as i64 {
            return Complex64::new(0.0, 0.0);
        }
        let d0 = a.min(n - a);
        let d1 = (a - kappa).abs();
        if d0 <= band || d1 <= band {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(1.0, 0.0)
        }
    })
}

/// `S(K,k)` from the `2kappa`-periodic product `U P_0 A P_1 A ... P_{k-2} A`,
/// where `P_b` imposes the fusion zeros, followed by the reduction
/// `j_{-l} -> (i/2)(j_{-l} - j_{l})` to the band `k..=kappa-k`.
pub fn build_s_product(level: i64, k: i64) -> Result<SMatrix> {
    check_params(level, k)?;
    let kappa = level + 2 * k;
    let n2 = 2 * kappa;
    let a = a_matrix(kappa);
    let mut prod = u_matrix(kappa);
    for band in 0..(k - 1) {
        prod *= fusion_projector(kappa, band);
        for z in [0, kappa] {
            if prod.column(z as usize).iter().any(|c| c.norm() > 0.0) {
                return Err(Error::ZeroSine(z));
            }
        }
        prod *= &a;
    }
    let size = (level + 1) as usize;
    let half_i = Complex64::new(0.0, 0.5);
    let entries = DMatrix::from_fn(size, size, |r, c| {
        let m = (k + r as i64) as usize;
        let l = k + c as i64;
        half_i * (prod[(m, l as usize)] - prod[(m, (n2 - l) as usize)])
    });
    SMatrix::new(level, k, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_zero_scalar() {
        for k in 1..6 {
            let s = build_s_product(0, k).unwrap();
            let want = (-1f64).powi(k as i32 - 1) * (k as f64).sqrt();
            assert!((s.get(k, k) - Complex64::new(want, 0.0)).norm() < 1e-12, "k={k}");
        }
    }

    #[test]
    fn k_one_is_sine_matrix() {
        for level in 0..5 {
            let kappa = level + 2;
            let s = build_s_product(level, 1).unwrap();
            for m in 1..=level + 1 {
                for l in 1..=level + 1 {
                    let want = sin_kappa(kappa, m * l);
                    assert!((s.get(m, l) - Complex64::new(want, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn level_two_corner() {
        for k in 1..5 {
            let kappa = 2 + 2 * k;
            let s = build_s_product(2, k).unwrap();
            let want = (-1f64).powi(k as i32 - 1) * (kappa as f64 / 8.0).sqrt() * 2.0 * sin_kappa(kappa, k);
            assert!((s.get(k + 1, k) - Complex64::new(want, 0.0)).norm() < 1e-12);
        }
    }
}
