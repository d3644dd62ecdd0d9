use nalgebra::DMatrix;
use num_complex::Complex64;

use super::gfactor::g_over;
use super::smatrix::build_s_product;
use super::{check_params, SMatrix};
use crate::error::Result;
use crate::qseries::{rat, Rational};

/// `S^J(K,k)` split into its constant matrix and the power of `tau`.
#[derive(Clone, Debug, PartialEq)]
pub struct SJ {
    /// `(-1)^{k-1} e^{(pi i/2)(k-1)K/2κ} (2/sqrt(2κ)) G S G^{-1}`.
    pub constant: SMatrix,
    /// `-(k-1)K/(2κ)`.
    pub weight: Rational,
}

impl SJ {
    /// The full matrix at `tau`, with `tau^weight` on the principal branch.
    pub fn at(&self, tau: Complex64) -> DMatrix<Complex64> {
        let w = crate::qseries::to_f64(&self.weight);
        self.constant.entries.map(|c| c * tau.powf(w))
    }
}

pub fn build_sj(level: i64, k: i64) -> Result<SJ> {
    check_params(level, k)?;
    let kappa = level + 2 * k;
    let s = build_s_product(level, k)?;
    let sign = if (k - 1) % 2 == 0 { 1.0 } else { -1.0 };
    let phase = Complex64::from_polar(
        sign * 2.0 / (2.0 * kappa as f64).sqrt(),
        std::f64::consts::FRAC_PI_2 * ((k - 1) * level) as f64 / (2 * kappa) as f64,
    );
    let n = s.size();
    let mut g = DMatrix::from_element(n, n, 1.0);
    for a in 0..n {
        for b in 0..n {
            g[(a, b)] = g_over(level, k, k + a as i64, k + b as i64)?;
        }
    }
    let entries = DMatrix::from_fn(n, n, |a, b| phase * g[(a, b)] * s.entries[(a, b)]);
    Ok(SJ { constant: SMatrix::new(level, k, entries)?, weight: rat(-(k - 1) * level, 2 * kappa) })
}

/// `e^{2 pi i (-k κ + 2 l^2)/(8 κ)}`, the `tau -> tau + 1` multiplier of `J_l`.
pub fn t_phase(level: i64, k: i64, l: i64) -> Complex64 {
    let kappa = level + 2 * k;
    let num = -k * kappa + 2 * l * l;
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * num as f64 / (8 * kappa) as f64)
}

pub fn t_matrix(level: i64, k: i64) -> Result<SMatrix> {
    check_params(level, k)?;
    let n = (level + 1) as usize;
    let mut d = DMatrix::zeros(n, n);
    for a in 0..n {
        d[(a, a)] = t_phase(level, k, k + a as i64);
    }
    SMatrix::new(level, k, d)
}

/// The constant part of `S^J(1,k)` and `S^J(2,k)` in closed form.
pub fn corollary_sj(level: i64, k: i64) -> Result<SMatrix> {
    check_params(level, k)?;
    let kappa = level + 2 * k;
    let phase = Complex64::from_polar(
        1.0,
        std::f64::consts::FRAC_PI_2 * ((k - 1) * level) as f64 / (2 * kappa) as f64,
    );
    let rows: Vec<Vec<f64>> = match level {
        1 => {
            let h = 0.5f64.sqrt();
            vec![vec![h, h], vec![h, -h]]
        }
        2 => {
            let e = (k - 1) as f64 / (k + 1) as f64;
            let up = 2f64.sqrt().powf(1.0 + e) / 2.0;
            let dn = 2f64.sqrt().powf(1.0 - e) / 2.0;
            vec![vec![0.5, up, 0.5], vec![dn, 0.0, -dn], vec![0.5, -up, 0.5]]
        }
        _ => {
            return Err(crate::Error::InvalidParameter(format!(
                "closed S^J is available for K = 1, 2, got K={level}"
            )))
        }
    };
    let n = rows.len();
    SMatrix::new(level, k, DMatrix::from_fn(n, n, |a, b| phase * rows[a][b]))
}

/// Measured projective relations of the constant parts.
#[derive(Clone, Debug)]
pub struct Relations {
    /// `c` in `(S^J)^2 = c I`.
    pub s2_scalar: Complex64,
    pub s2_residual: f64,
    /// `d` in `(S^J T^J)^3 = d (S^J)^2`.
    pub st3_scalar: Complex64,
    pub st3_residual: f64,
}

impl Relations {
    pub fn max_residual(&self) -> f64 {
        self.s2_residual
            .max(self.st3_residual)
            .max((self.s2_scalar.norm() - 1.0).abs())
            .max((self.st3_scalar.norm() - 1.0).abs())
    }
}

/// Least-squares scalar `c` with `a ≈ c b`, and `max |a - c b|`.
pub(crate) fn fit_scalar(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> (Complex64, f64) {
    let num: Complex64 = b.iter().zip(a.iter()).map(|(x, y)| x.conj() * y).sum();
    let den: f64 = b.iter().map(|x| x.norm_sqr()).sum();
    let c = num / den;
    let res = a.iter().zip(b.iter()).map(|(y, x)| (y - c * x).norm()).fold(0.0, f64::max);
    (c, res)
}

pub fn relations(level: i64, k: i64) -> Result<Relations> {
    let s = build_sj(level, k)?.constant.entries;
    let t = t_matrix(level, k)?.entries;
    let s2 = &s * &s;
    let id = DMatrix::identity(s.nrows(), s.ncols());
    let (c, r1) = fit_scalar(&s2, &id);
    let st = &s * &t;
    let st3 = &st * &st * &st;
    let (d, r2) = fit_scalar(&st3, &s2);
    Ok(Relations { s2_scalar: c, s2_residual: r1, st3_scalar: d, st3_residual: r2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_closed_forms() {
        for level in [1, 2] {
            for k in 1..6 {
                let a = build_sj(level, k).unwrap().constant;
                let b = corollary_sj(level, k).unwrap();
                assert!(a.max_deviation(&b).0 < 1e-10, "K={level} k={k}");
            }
        }
    }

    #[test]
    fn projective() {
        for level in 0..5 {
            for k in 1..5 {
                let r = relations(level, k).unwrap();
                assert!(r.max_residual() < 1e-8, "K={level} k={k}: {r:?}");
            }
        }
    }

    #[test]
    fn t_phase_values() {
        let want = Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI / 24.0);
        assert!((t_phase(1, 1, 1) - want).norm() < 1e-15);
        assert!((t_phase(3, 2, 4).norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn k_one_is_real_orthogonal() {
        for level in 0..6 {
            let s = build_sj(level, 1).unwrap().constant.entries;
            assert!(s.iter().all(|c| c.im.abs() < 1e-12));
            assert!((s.transpose() - &s).iter().all(|c| c.norm() < 1e-12));
            let p = &s * s.transpose();
            let id = DMatrix::<Complex64>::identity(s.nrows(), s.ncols());
            assert!((p - id).iter().all(|c| c.norm() < 1e-12));
        }
    }
}
