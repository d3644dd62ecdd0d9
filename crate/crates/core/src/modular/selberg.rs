use statrs::function::gamma::gamma as gamma_raw;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelbergMode {
    Closed,
    Quadrature,
}

/// Gamma function with poles reported as errors.
pub(crate) fn gamma(x: f64) -> Result<f64> {
    if x <= 0.0 && (x - x.round()).abs() < 1e-12 {
        return Err(Error::GammaPole(x));
    }
    Ok(gamma_raw(x))
}

/// `B_n(alpha, beta, gamma)`: the integral over `0 <= t_n < ... < t_1 <= 1` of
/// `prod t_j^{alpha-1} (1-t_j)^{beta-1} prod_{j<k} (t_j - t_k)^{2 gamma}`.
///
/// The closed form is
/// `(1/n!) prod_{j=0}^{n-1} Γ(1+(1+j)γ) Γ(α+jγ) Γ(β+jγ) / (Γ(1+γ) Γ(α+β+(n+j-1)γ))`;
/// quadrature is available for `n <= 2` and positive parameters.
pub fn selberg_b(n: u32, a: f64, b: f64, g: f64, mode: SelbergMode) -> Result<f64> {
    match mode {
        SelbergMode::Closed => {
            let mut r = 1.0;
            for i in 1..=n {
                r /= i as f64;
            }
            for j in 0..n {
                let j = j as f64;
                r *= gamma(1.0 + (1.0 + j) * g)? * gamma(a + j * g)? * gamma(b + j * g)?
                    / (gamma(1.0 + g)? * gamma(a + b + (n as f64 + j - 1.0) * g)?);
            }
            Ok(r)
        }
        SelbergMode::Quadrature => {
            if n > 2 || a <= 0.0 || b <= 0.0 || g <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "quadrature needs n <= 2 and positive parameters, got n={n}, ({a}, {b}, {g})"
                )));
            }
            let w = |t: f64| t.powf(a - 1.0) * (1.0 - t).powf(b - 1.0);
            match n {
                0 => Ok(1.0),
                1 => integrate(&|t: f64| Ok(w(t)), 0.0, 1.0, 1e-12),
                _ => integrate(
                    &|t1: f64| {
                        let inner = integrate(&|t2: f64| Ok(w(t2) * (t1 - t2).powf(2.0 * g)), 0.0, t1, 1e-13)?;
                        Ok(w(t1) * inner)
                    },
                    0.0,
                    1.0,
                    1e-12,
                ),
            }
        }
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// 7-point Gauss / 15-point Kronrod on `[a, b]`: (estimate, error).
fn gk15<F: Fn(f64) -> Result<f64>>(f: &F, a: f64, b: f64) -> Result<(f64, f64)> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c)?;
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x)? + f(c + x)?;
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    Ok((k * h, ((k - g) * h).abs()))
}

fn adaptive<F: Fn(f64) -> Result<f64>>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    let mut stack = vec![(a, b, gk15(f, a, b)?)];
    let mut done = Vec::new();
    let mut evals = 0;
    while let Some((lo, hi, (v, e))) = stack.pop() {
        evals += 1;
        if evals > 20_000 {
            return Err(Error::Quadrature(format!("no convergence on [{a}, {b}]")));
        }
        if e <= tol * (hi - lo).max(1e-300) / (b - a) || hi - lo < 1e-12 * (b - a) {
            done.push(v);
            continue;
        }
        let mid = 0.5 * (lo + hi);
        stack.push((lo, mid, gk15(f, lo, mid)?));
        stack.push((mid, hi, gk15(f, mid, hi)?));
    }
    done.sort_by(|x, y| x.abs().total_cmp(&y.abs()));
    let total: f64 = done.iter().sum();
    if !total.is_finite() {
        return Err(Error::Quadrature("non-finite integrand".into()));
    }
    Ok(total)
}

fn integrate<F>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if b <= a {
        return Ok(0.0);
    }
    adaptive(f, a, b, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_beta() {
        for (a, b) in [(1.0, 1.0), (2.0, 3.0), (0.5, 0.7), (1.3, 2.2)] {
            let want = gamma(a).unwrap() * gamma(b).unwrap() / gamma(a + b).unwrap();
            let got = selberg_b(1, a, b, 0.9, SelbergMode::Closed).unwrap();
            assert!((got / want - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn small_exact_values() {
        // n = 2, (1,1,1): ∫∫_{t2<t1} (t1 - t2)^2 = 1/12
        let c = selberg_b(2, 1.0, 1.0, 1.0, SelbergMode::Closed).unwrap();
        assert!((c - 1.0 / 12.0).abs() < 1e-13);
        let q = selberg_b(2, 1.0, 1.0, 1.0, SelbergMode::Quadrature).unwrap();
        assert!((q - 1.0 / 12.0).abs() < 1e-10);
        // n = 2, γ = 1/2: ∫∫ (t1 - t2) = 1/6
        let q = selberg_b(2, 1.0, 1.0, 0.5, SelbergMode::Quadrature).unwrap();
        assert!((q - 1.0 / 6.0).abs() < 1e-10);
    }

    #[test]
    fn closed_agrees_with_quadrature() {
        for (a, b, g) in [(1.0, 1.0, 1.0), (1.0, 1.0, 0.5), (2.0, 2.0, 1.0), (1.5, 1.2, 0.3)] {
            for n in 1..=2 {
                let c = selberg_b(n, a, b, g, SelbergMode::Closed).unwrap();
                let q = selberg_b(n, a, b, g, SelbergMode::Quadrature).unwrap();
                assert!((q / c - 1.0).abs() < 1e-8, "n={n} ({a},{b},{g}): {c} vs {q}");
            }
        }
    }

    #[test]
    fn poles_and_domain() {
        assert!(matches!(gamma(-2.0), Err(Error::GammaPole(_))));
        assert!(selberg_b(3, 1.0, 1.0, 1.0, SelbergMode::Quadrature).is_err());
        assert!(selberg_b(1, -1.0, 1.0, 1.0, SelbergMode::Closed).is_err());
    }
}
