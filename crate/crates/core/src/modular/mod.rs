//! Modular transformation data for the normalized affine Jack polynomials.
//!
//! Indices follow the shifted convention: rows and columns of every matrix
//! run over `k..=kappa-k`, `kappa = K + 2k`, and index `l` corresponds to the
//! label with dominant weight `(l - k) Lambda1bar + K Lambda0`.

mod fixtures;
mod gfactor;
mod macdonald;
mod selberg;
mod sj;
mod smatrix;
mod verify;

use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub use fixtures::{fixture, fixture_s3_alternate, k4_relations, K4Relations};
pub use gfactor::{g_absolute, g_factor, g_ratio, GMode};
pub use macdonald::{
    build_s_macdonald, fsv_residual, macdonald_one_row, macdonald_special, sigma, sigma_residual,
};
pub use selberg::{selberg_b, SelbergMode};
pub use sj::{build_sj, corollary_sj, relations, t_matrix, t_phase, Relations, SJ};
pub use smatrix::build_s_product;
pub use verify::{verify_modular_numeric, ModularReport};

/// `s(j) = sin(pi j / kappa)` with `kappa = K + 2k`.
pub fn sinq(level: i64, k: i64, j: i64) -> f64 {
    sin_kappa(level + 2 * k, j)
}

pub(crate) fn sin_kappa(kappa: i64, j: i64) -> f64 {
    (std::f64::consts::PI * j.rem_euclid(2 * kappa) as f64 / kappa as f64).sin()
}

pub(crate) fn check_params(level: i64, k: i64) -> Result<()> {
    if level < 0 || k < 1 {
        return Err(Error::InvalidParameter(format!("need K >= 0 and k >= 1, got K={level}, k={k}")));
    }
    Ok(())
}

/// A square complex matrix indexed by `k..=kappa-k` on both sides.
#[derive(Clone, Debug, PartialEq)]
pub struct SMatrix {
    pub level: i64,
    pub k: i64,
    pub entries: DMatrix<Complex64>,
}

#[derive(Serialize)]
struct ComplexJson {
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct SMatrixJson {
    #[serde(rename = "K")]
    level: i64,
    k: i64,
    rows: Vec<i64>,
    entries: Vec<Vec<ComplexJson>>,
}

impl SMatrix {
    pub fn new(level: i64, k: i64, entries: DMatrix<Complex64>) -> Result<Self> {
        check_params(level, k)?;
        let n = (level + 1) as usize;
        if entries.nrows() != n || entries.ncols() != n {
            return Err(Error::InvalidParameter(format!(
                "matrix for K={level} must be {n}x{n}, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        Ok(SMatrix { level, k, entries })
    }

    pub fn kappa(&self) -> i64 {
        self.level + 2 * self.k
    }

    /// The index labels `k..=kappa-k`.
    pub fn rows(&self) -> Vec<i64> {
        (self.k..=self.kappa() - self.k).collect()
    }

    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    /// Entry at labels `(m, l)`.
    pub fn get(&self, m: i64, l: i64) -> Complex64 {
        self.entries[((m - self.k) as usize, (l - self.k) as usize)]
    }

    /// Largest entrywise modulus of `self - other`, with the labels where it occurs.
    pub fn max_deviation(&self, other: &SMatrix) -> (f64, i64, i64) {
        let mut best = (0.0, self.k, self.k);
        for (a, m) in self.rows().into_iter().enumerate() {
            for (b, l) in self.rows().into_iter().enumerate() {
                let d = (self.entries[(a, b)] - other.entries[(a, b)]).norm();
                if d > best.0 {
                    best = (d, m, l);
                }
            }
        }
        best
    }

    pub fn to_json(&self) -> String {
        let n = self.size();
        let j = SMatrixJson {
            level: self.level,
            k: self.k,
            rows: self.rows(),
            entries: (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| ComplexJson { re: clean(self.entries[(a, b)].re), im: clean(self.entries[(a, b)].im) })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string(&j).expect("plain data serializes")
    }

    /// One line per entry: `m,l,re,im`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,l,re,im\n");
        for (a, m) in self.rows().into_iter().enumerate() {
            for (b, l) in self.rows().into_iter().enumerate() {
                let z = self.entries[(a, b)];
                writeln!(out, "{m},{l},{:.15e},{:.15e}", clean(z.re), clean(z.im)).unwrap();
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("K={} k={} rows {:?}\n", self.level, self.k, self.rows());
        for a in 0..self.size() {
            let row: Vec<String> = (0..self.size())
                .map(|b| {
                    let z = self.entries[(a, b)];
                    format!("{:>12.8}{:+.8}i", clean(z.re), clean(z.im))
                })
                .collect();
            writeln!(out, "{}", row.join("  ")).unwrap();
        }
        out
    }
}

/// Maps negative zero and sub-1e-15 noise to `0.0` so output is stable.
pub(crate) fn clean(x: f64) -> f64 {
    if x.abs() < 1e-15 {
        0.0
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_values() {
        assert!((sinq(4, 2, 2) - 0.5f64.sqrt()).abs() < 1e-15);
        for j in 0..8 {
            assert!((sinq(4, 2, 8 - j) - sinq(4, 2, j)).abs() < 1e-15);
        }
        assert!(sinq(4, 2, 8).abs() < 1e-15);
    }

    #[test]
    fn json_shape() {
        let s = build_s_product(1, 1).unwrap();
        let j = s.to_json();
        assert!(j.starts_with("{\"K\":1,\"k\":1,\"rows\":[1,2],\"entries\":[[{\"re\":"));
        assert_eq!(s.to_csv().lines().count(), 5);
    }
}
