//! Closed-form `S(K,k)` for `K <= 4`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_params, sin_kappa, SMatrix};
use crate::error::{Error, Result};

fn real_matrix(level: i64, k: i64, scale: f64, rows: &[&[f64]]) -> Result<SMatrix> {
    let n = rows.len();
    let entries = DMatrix::from_fn(n, n, |a, b| Complex64::new(scale * rows[a][b], 0.0));
    SMatrix::new(level, k, entries)
}

fn sign(k: i64) -> f64 {
    if (k - 1) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// The fixture table for `S(K,k)`, `K` in `0..=4`.
///
/// `K = 3` uses `b' = s(3)/s(1)`, `c' = s(k+1)/s(k)`; `K = 4` uses
/// `b = s(4)/s(1)`, `d = s(k+1)/s(k)`, `e = s(2)/s(1)`, `g = 1/s(k)` and
/// `c = s(k+1)s(k)/(s(1)s(2)) P^{(k)}_2(k)`.
pub fn fixture(level: i64, k: i64) -> Result<SMatrix> {
    check_params(level, k)?;
    let kappa = level + 2 * k;
    let kf = kappa as f64;
    let s = |j: i64| sin_kappa(kappa, j);
    let sg = sign(k);
    match level {
        0 => real_matrix(0, k, sg * (kf / 2.0).sqrt(), &[&[1.0]]),
        1 => real_matrix(1, k, sg * (kf / 4.0).sqrt(), &[&[1.0, 1.0], &[1.0, -1.0]]),
        2 => {
            let (a, b) = (1.0 / s(k), 2.0 * s(k));
            real_matrix(2, k, sg * (kf / 8.0).sqrt(), &[&[1.0, a, 1.0], &[b, 0.0, -b], &[1.0, -a, 1.0]])
        }
        3 => {
            let b = s(3) / s(1);
            let c = s(k + 1) / s(k);
            real_matrix(
                3,
                k,
                sg * 0.5 * (kf / (1.0 + b * c)).sqrt(),
                &[&[1.0, c, c, 1.0], &[b, 1.0, -1.0, -b], &[b, -1.0, -1.0, b], &[1.0, -c, c, -1.0]],
            )
        }
        4 => {
            let r = k4_relations(k);
            let (b, c, d, e, g) = (r.b, r.c, r.d, r.e, r.g);
            real_matrix(
                4,
                k,
                sg * (kf / (8.0 * e * e)).sqrt(),
                &[
                    &[1.0, d, g, d, 1.0],
                    &[b, e, 0.0, -e, -b],
                    &[c, 0.0, -2.0, 0.0, c],
                    &[b, -e, 0.0, e, -b],
                    &[1.0, -d, g, -d, 1.0],
                ],
            )
        }
        _ => Err(Error::InvalidParameter(format!("fixture tables cover K <= 4, got K={level}"))),
    }
}

/// The second displayed form of `S(3,k)`, with `a'' = s(1)`, `b'' = s(2k)`,
/// `c'' = s(k+1)s(1)/s(k)`.
pub fn fixture_s3_alternate(k: i64) -> Result<SMatrix> {
    check_params(3, k)?;
    let kappa = 3 + 2 * k;
    let s = |j: i64| sin_kappa(kappa, j);
    let (a, b, c) = (s(1), s(2 * k), s(k + 1) * s(1) / s(k));
    real_matrix(
        3,
        k,
        sign(k) * (kappa as f64 / (4.0 * (a * a + b * c))).sqrt(),
        &[&[a, c, c, a], &[b, a, -a, -b], &[b, -a, -a, b], &[a, -c, c, -a]],
    )
}

/// The scalars of the `K = 4` table.
#[derive(Clone, Copy, Debug)]
pub struct K4Relations {
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub g: f64,
    pub s_k: f64,
}

impl K4Relations {
    /// Residuals of `gc + 2 = 2bd`, `2bd = 2e^2` and `c = 2 s(k)(e^2 - 1)`.
    pub fn residuals(&self) -> [f64; 3] {
        [
            (self.g * self.c + 2.0 - 2.0 * self.b * self.d).abs(),
            (2.0 * self.b * self.d - 2.0 * self.e * self.e).abs(),
            (self.c - 2.0 * self.s_k * (self.e * self.e - 1.0)).abs(),
        ]
    }
}

pub fn k4_relations(k: i64) -> K4Relations {
    let kappa = 4 + 2 * k;
    let s = |j: i64| sin_kappa(kappa, j);
    let q = Complex64::from_polar(1.0, std::f64::consts::PI / kappa as f64);
    let qk = q.powi(2 * k as i32);
    let p2 = qk + 1.0 / qk + (1.0 + q * q) * (1.0 - qk) / (1.0 - qk * q * q);
    K4Relations {
        b: s(4) / s(1),
        c: s(k + 1) * s(k) / (s(1) * s(2)) * p2.re,
        d: s(k + 1) / s(k),
        e: s(2) / s(1),
        g: 1.0 / s(k),
        s_k: s(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_is_real() {
        for k in 1..8 {
            let kappa = 4 + 2 * k;
            let q = Complex64::from_polar(1.0, std::f64::consts::PI / kappa as f64);
            let qk = q.powi(2 * k);
            let p2 = qk + 1.0 / qk + (1.0 + q * q) * (1.0 - qk) / (1.0 - qk * q * q);
            assert!(p2.im.abs() < 1e-12);
        }
    }

    #[test]
    fn out_of_range() {
        assert!(fixture(5, 1).is_err());
    }
}
