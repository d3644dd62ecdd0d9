use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_params, sin_kappa, SMatrix};
use crate::error::Result;

/// `(a; q)_n`.
fn poch(a: Complex64, q: Complex64, n: i64) -> Complex64 {
    let mut r = Complex64::new(1.0, 0.0);
    let mut qi = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        r *= Complex64::new(1.0, 0.0) - a * qi;
        qi *= q;
    }
    r
}

/// The two-variable Macdonald polynomial `P_{(n)}(x1, x2; q, t)`:
///
/// `(q;q)_n/(t;q)_n sum_r (t;q)_r (t;q)_{n-r} / ((q;q)_r (q;q)_{n-r}) x1^r x2^{n-r}`.
pub fn macdonald_one_row(n: i64, q: Complex64, t: Complex64, x1: Complex64, x2: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for r in 0..=n {
        acc += poch(t, q, r) / poch(q, q, r) * poch(t, q, n - r) / poch(q, q, n - r) * x1.powi(r as i32)
            * x2.powi((n - r) as i32);
    }
    acc * poch(q, q, n) / poch(t, q, n)
}

/// `P^{(k)}_n(m)`: the one-row polynomial at `(x1, x2) = (q^{-m}, q^m)` with
/// parameters `(q^2, q^{2k})`, `q = e^{pi i / kappa}`.
pub fn macdonald_special(kappa: i64, k: i64, n: i64, m: i64) -> Complex64 {
    let q = Complex64::from_polar(1.0, std::f64::consts::PI / kappa as f64);
    macdonald_one_row(n, q * q, q.powi(2 * k as i32), q.powi(-m as i32), q.powi(m as i32))
}

/// `S(K,k) = (-2)^{k-1} diag(prod_{j=1}^{k-1} s(m-j)) [P^{(k)}_{m-k}(l)] diag(s(l))`.
pub fn build_s_macdonald(level: i64, k: i64) -> Result<SMatrix> {
    check_params(level, k)?;
    let kappa = level + 2 * k;
    let size = (level + 1) as usize;
    let pre = (-2f64).powi(k as i32 - 1);
    let entries = DMatrix::from_fn(size, size, |r, c| {
        let m = k + r as i64;
        let l = k + c as i64;
        let left: f64 = (1..k).map(|j| sin_kappa(kappa, m - j)).product();
        macdonald_special(kappa, k, m - k, l) * (pre * left * sin_kappa(kappa, l))
    });
    SMatrix::new(level, k, entries)
}

/// `sigma^{(k)}_{n,m} = 2^{k-1} s(m) prod_{j=1}^{k-1} s(j-n) P^{(k)}_{n-k}(m)` at fixed `kappa`.
pub fn sigma(kappa: i64, k: i64, n: i64, m: i64) -> Complex64 {
    let left: f64 = (1..k).map(|j| sin_kappa(kappa, j - n)).product();
    macdonald_special(kappa, k, n - k, m) * (2f64.powi(k as i32 - 1) * sin_kappa(kappa, m) * left)
}

/// Residual of `sigma^{(k)}_{n,m} = sigma^{(k-1)}_{n,m+1}/2s(m+1) - sigma^{(k-1)}_{n,m-1}/2s(m-1)`.
pub fn sigma_residual(kappa: i64, k: i64, n: i64, m: i64) -> Complex64 {
    let rhs = sigma(kappa, k - 1, n, m + 1) / (2.0 * sin_kappa(kappa, m + 1))
        - sigma(kappa, k - 1, n, m - 1) / (2.0 * sin_kappa(kappa, m - 1));
    sigma(kappa, k, n, m) - rhs
}

/// Residual of `P^{(k)}_n(x+1) - P^{(k)}_n(x-1) = 4 s(-n) s(x) P^{(k+1)}_{n-1}(x)`.
///
/// Meaningful for `n + k < kappa`; beyond that the Pochhammer denominators
/// vanish at roots of unity.
pub fn fsv_residual(kappa: i64, k: i64, n: i64, x: i64) -> Complex64 {
    let lhs = macdonald_special(kappa, k, n, x + 1) - macdonald_special(kappa, k, n, x - 1);
    let rhs = macdonald_special(kappa, k + 1, n - 1, x) * (4.0 * sin_kappa(kappa, -n) * sin_kappa(kappa, x));
    lhs - rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Two-variable Macdonald operator
    /// `D f = sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) f(.., q x_i, ..)`,
    /// whose eigenvalue on `P_{(n)}` is `t q^n + 1`.
    #[test]
    fn eigenfunction_of_macdonald_operator() {
        let q = c(0.3, 0.4);
        let t = c(-0.2, 0.7);
        let (x1, x2) = (c(1.1, -0.3), c(0.4, 0.9));
        for n in 0..6 {
            let p = |a: Complex64, b: Complex64| macdonald_one_row(n, q, t, a, b);
            let d = (t * x1 - x2) / (x1 - x2) * p(q * x1, x2) + (t * x2 - x1) / (x2 - x1) * p(x1, q * x2);
            let ev = t * q.powi(n as i32) + 1.0;
            assert!((d - ev * p(x1, x2)).norm() < 1e-12, "n={n}");
            // monic in the monomial basis: coefficient of x1^n is 1
            let lead = (p(c(2.0, 0.0), c(1e-9, 0.0)) / 2f64.powi(n as i32) - 1.0).norm();
            assert!(lead < 1e-6);
        }
    }

    #[test]
    fn special_values() {
        for kappa in 3..9 {
            for k in 1..3 {
                for m in 0..kappa {
                    assert!((macdonald_special(kappa, k, 0, m) - 1.0).norm() < 1e-14);
                    let want = 2.0 * (std::f64::consts::PI * m as f64 / kappa as f64).cos();
                    assert!((macdonald_special(kappa, k, 1, m) - want).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn second_special_value() {
        for k in 1..6 {
            let kappa = 4 + 2 * k;
            let q = Complex64::from_polar(1.0, std::f64::consts::PI / kappa as f64);
            let qk = q.powi(2 * k as i32);
            let want = qk + 1.0 / qk + (1.0 + q * q) * (1.0 - qk) / (1.0 - qk * q * q);
            assert!((macdonald_special(kappa, k, 2, k) - want).norm() < 1e-12);
        }
    }

    #[test]
    fn recurrences() {
        for kappa in 4..11 {
            for k in 1..4 {
                for n in (1..5).filter(|n| n + k < kappa) {
                    for x in -3..kappa + 3 {
                        assert!(fsv_residual(kappa, k, n, x).norm() < 1e-10);
                    }
                }
            }
            for k in 2..=(kappa / 2) {
                for n in k..=kappa - k {
                    for m in k..=kappa - k {
                        assert!(sigma_residual(kappa, k, n, m).norm() < 1e-10, "kappa={kappa} k={k} n={n} m={m}");
                    }
                }
            }
        }
    }
}
