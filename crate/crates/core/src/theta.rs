//! Jacobi theta functions, level-`m` theta functions and the Dedekind eta
//! function, both as exact nome series and as numeric functions; the
//! elliptic factors `E` and `G`.
//!
//! Conventions: `p = e^{2 pi i tau}`, `x = e^{2 pi i z}`.
//!
//! ```text
//! theta_1(v|tau) = i sum (-1)^n e^{i pi tau (n-1/2)^2} e^{i pi v (2n-1)}
//! theta_2(v|tau) =   sum        e^{i pi tau (n-1/2)^2} e^{i pi v (2n-1)}
//! theta_3(v|tau) =   sum        e^{i pi tau n^2}       e^{2 i pi v n}
//! theta_0(v|tau) =   sum (-1)^n e^{i pi tau n^2}       e^{2 i pi v n}
//! theta_{n,m}(v|tau) = sum_{l in Z + n/2m} p^{m l^2} e^{2 pi i m l v}
//! ```
//!
//! In series mode the argument is `v = c z` for an integer multiplier `c`,
//! and the nome argument is `s tau` for a rational `s`. A combination whose
//! powers of `x` would be fractional is rejected rather than rounded.

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::qseries::{int, rat, NomeSeries, Prefactor, Rational, ScaledSeries};

const PI: f64 = std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaKind {
    Theta0,
    Theta1,
    Theta2,
    Theta3,
}

impl ThetaKind {
    pub const ALL: [ThetaKind; 4] = [ThetaKind::Theta0, ThetaKind::Theta1, ThetaKind::Theta2, ThetaKind::Theta3];

    fn half_integral(self) -> bool {
        matches!(self, ThetaKind::Theta1 | ThetaKind::Theta2)
    }

    fn alternating(self) -> bool {
        matches!(self, ThetaKind::Theta0 | ThetaKind::Theta1)
    }
}

/// Label of `theta_{n,m}`; `n` only matters modulo `2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LevelThetaLabel {
    pub n: i64,
    pub m: i64,
}

impl LevelThetaLabel {
    pub fn new(n: i64, m: i64) -> Result<Self> {
        if m <= 0 {
            return Err(Error::InvalidParameter(format!("theta level must be positive, got {m}")));
        }
        Ok(LevelThetaLabel { n, m })
    }

    /// Representative of `n` in `0..2m`.
    pub fn reduced(self) -> Self {
        LevelThetaLabel { n: self.n.rem_euclid(2 * self.m), m: self.m }
    }
}

/// Exclusive p-bound for a series with the given lead, grid and order.
fn bound_for(lead: &Rational, grid: u64, order: u32) -> Rational {
    lead + int(order as i64) + rat(1, grid as i64)
}

/// `theta(c z | s tau)` as a series, known through `lead + order`.
///
/// `theta_1` carries its factor `i` in the returned prefactor; the rest
/// are rational. The result has level 0.
pub fn theta_jacobi_series(kind: ThetaKind, c: i64, s: &Rational, order: u32) -> Result<ScaledSeries> {
    if !s.is_positive() {
        return Err(Error::InvalidParameter(format!("nome scale must be positive, got {s}")));
    }
    if kind.half_integral() && c % 2 != 0 {
        return Err(Error::NonIntegralXExponent(rat(c, 2)));
    }
    // the exponent of p is s * a^2 / 8 with a = 2n-1 (half-integral kinds)
    // or s * n^2 / 2
    let (lead, grid) = if kind.half_integral() {
        (s * rat(1, 8), s.denom().to_u64().unwrap_or(1))
    } else {
        (Rational::zero(), (s * rat(1, 2)).denom().to_u64().unwrap_or(1))
    };
    let bound = bound_for(&lead, grid, order);
    let mut terms = Vec::new();
    for n in lattice_range(&bound, s, kind.half_integral()) {
        let (e, j) = if kind.half_integral() {
            let a = 2 * n - 1;
            (s * rat(a * a, 8), c * a / 2)
        } else {
            (s * rat(n * n, 2), c * n)
        };
        let sign = if kind.alternating() && n.rem_euclid(2) == 1 { -1 } else { 1 };
        terms.push((e, j, int(sign)));
    }
    let series = NomeSeries::from_sparse(0, grid, lead, bound, terms)?;
    let pre = if kind == ThetaKind::Theta1 { Prefactor::i() } else { Prefactor::one() };
    Ok(ScaledSeries::new(pre, series))
}

/// Range of lattice indices whose exponent can fall below `bound`.
fn lattice_range(bound: &Rational, s: &Rational, half: bool) -> std::ops::RangeInclusive<i64> {
    // s n^2 / 2 < bound  (or s (n-1/2)^2 / 2 < bound)
    let b = (bound / s * int(2)).to_f64().unwrap_or(0.0).max(0.0);
    let r = b.sqrt().ceil() as i64 + 2;
    if half {
        -r..=r + 1
    } else {
        -r..=r
    }
}

/// `theta_{n,m}(c z | tau)` as a series of level 0, known through `lead + order`.
///
/// The exponents of `p` are `(n + 2 m t)^2 / (4m)` and differ by integers, so
/// the grid is 1; the power of `x` is `c (n + 2mt) / 2`.
pub fn theta_level_series(label: LevelThetaLabel, c: i64, order: u32) -> Result<NomeSeries> {
    let LevelThetaLabel { n, m } = label.reduced();
    // representative of n + 2mZ closest to zero gives the lead
    let a0 = if n > m { n - 2 * m } else { n };
    let lead = rat(a0 * a0, 4 * m);
    let bound = bound_for(&lead, 1, order);
    let mut terms = Vec::new();
    let reach = ((bound.to_f64().unwrap_or(0.0) * 4.0 * m as f64).sqrt() / (2 * m) as f64).ceil() as i64 + 2;
    for t in -reach..=reach {
        let a = n + 2 * m * t;
        let e = rat(a * a, 4 * m);
        if e >= bound {
            continue;
        }
        if (c * a) % 2 != 0 {
            return Err(Error::NonIntegralXExponent(rat(c * a, 2)));
        }
        terms.push((e, c * a / 2, Rational::one()));
    }
    NomeSeries::from_sparse(0, 1, lead, bound, terms)
}

/// `eta(s tau)` as a series, `s` a positive rational.
///
/// Uses Euler's pentagonal expansion of `prod (1 - q^j)` with `q = p^s`.
pub fn eta_series(s: &Rational, order: u32) -> Result<NomeSeries> {
    if !s.is_positive() {
        return Err(Error::InvalidParameter(format!("nome scale must be positive, got {s}")));
    }
    let lead = s * rat(1, 24);
    let grid = s.denom().to_u64().unwrap_or(1);
    let bound = bound_for(&lead, grid, order);
    let mut terms = Vec::new();
    let mut k: i64 = 0;
    loop {
        let mut any = false;
        for kk in if k == 0 { vec![0] } else { vec![k, -k] } {
            let e = &lead + s * rat(kk * (3 * kk - 1), 2);
            if e < bound {
                any = true;
                let sign = if kk.rem_euclid(2) == 1 { -1 } else { 1 };
                terms.push((e, 0, int(sign)));
            }
        }
        if !any && k > 0 {
            break;
        }
        k += 1;
    }
    NomeSeries::from_sparse(0, grid, lead, bound, terms)
}

/// Sum of `term(a)` over `a` in `offset + Z`, starting at the peak of the
/// Gaussian envelope and stopping once it has decayed below `e^{-40}`.
fn gaussian_sum<F: Fn(f64) -> Complex64>(center: f64, offset: f64, term: F, tau_im: f64) -> Complex64 {
    // terms are indexed by a = n + offset, with |term| ~ exp(-pi Im(tau) (a - center)^2)
    let n0 = (center - offset).round() as i64;
    let mut acc = term(n0 as f64 + offset);
    let spread = (40.0 / (PI * tau_im)).sqrt().ceil() as i64 + 2;
    for d in 1..=spread.max(3) {
        acc += term((n0 + d) as f64 + offset);
        acc += term((n0 - d) as f64 + offset);
    }
    acc
}

fn check_tau(tau: Complex64) -> Result<()> {
    if tau.im <= 0.0 || !tau.im.is_finite() {
        return Err(Error::TauNotInUpperHalfPlane(format!("{tau}")));
    }
    Ok(())
}

/// Numeric `theta_kind(v | tau)`.
pub fn theta_jacobi(kind: ThetaKind, v: Complex64, tau: Complex64) -> Result<Complex64> {
    check_tau(tau)?;
    let i = Complex64::i();
    let offset = if kind.half_integral() { -0.5 } else { 0.0 };
    let center = -v.im / tau.im;
    let alternating = kind.alternating();
    let sum = gaussian_sum(
        center,
        offset,
        |a| {
            let n = (a - offset).round() as i64;
            let sign = if alternating && n.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
            (i * PI * (tau * a * a + v * 2.0 * a)).exp() * sign
        },
        tau.im,
    );
    Ok(if kind == ThetaKind::Theta1 { i * sum } else { sum })
}

/// `theta_1'(0 | tau)` by the differentiated sum.
pub fn theta1_prime0(tau: Complex64) -> Result<Complex64> {
    check_tau(tau)?;
    let i = Complex64::i();
    let sum = gaussian_sum(
        0.0,
        -0.5,
        |a| {
            let n = (a + 0.5).round() as i64;
            let sign = if n.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
            (i * PI * tau * a * a).exp() * (sign * 2.0 * a)
        },
        tau.im,
    );
    // d/dv of i e^{i pi v (2n-1)} at 0 is i * i pi (2n-1)
    Ok(-sum * PI)
}

/// Numeric `theta_{n,m}(v | tau)`.
pub fn theta_level(label: LevelThetaLabel, v: Complex64, tau: Complex64) -> Result<Complex64> {
    check_tau(tau)?;
    let LevelThetaLabel { n, m } = label.reduced();
    let mf = m as f64;
    let i = Complex64::i();
    // l = t + n/2m; |term| ~ exp(-2 pi m Im(tau) l^2 - 2 pi m Im(v) l)
    let center = -v.im / (2.0 * tau.im);
    let offset = n as f64 / (2.0 * mf);
    Ok(gaussian_sum(
        center,
        offset,
        |l| (i * 2.0 * PI * mf * (tau * l * l + v * l)).exp(),
        2.0 * mf * tau.im,
    ))
}

/// Numeric `eta(tau)` by the product, truncated when `|p|^j` is negligible.
pub fn eta(tau: Complex64) -> Result<Complex64> {
    check_tau(tau)?;
    let p = (Complex64::i() * 2.0 * PI * tau).exp();
    let mut acc = (Complex64::i() * 2.0 * PI * tau / 24.0).exp();
    let mut pj = p;
    for _ in 0..100_000 {
        if pj.norm() < 1e-18 {
            break;
        }
        acc *= Complex64::one() - pj;
        pj *= p;
    }
    Ok(acc)
}

/// `E(v | tau) = 2 pi i theta_1(v) / theta_1'(0)`.
pub fn ell_e(v: Complex64, tau: Complex64) -> Result<Complex64> {
    Ok(Complex64::i() * 2.0 * PI * theta_jacobi(ThetaKind::Theta1, v, tau)? / theta1_prime0(tau)?)
}

/// Whether `w` lies within `eps` of the lattice `Z + Z tau`.
pub fn is_lattice_point(w: Complex64, tau: Complex64, eps: f64) -> bool {
    let b = w.im / tau.im;
    let a = w.re - b * tau.re;
    (b - b.round()).abs() < eps && (a - a.round()).abs() < eps
}

/// `G(v; z | tau) = theta_1'(0) theta_1(v + 2z) / (theta_1(2z) theta_1(v))`.
pub fn ell_g(v: Complex64, z: Complex64, tau: Complex64) -> Result<Complex64> {
    check_tau(tau)?;
    if is_lattice_point(v, tau, 1e-12) {
        return Err(Error::Pole(format!("v = {v} is a lattice point")));
    }
    if is_lattice_point(2.0 * z, tau, 1e-12) {
        return Err(Error::Pole(format!("2z = {} is a lattice point", 2.0 * z)));
    }
    let t1 = |w| theta_jacobi(ThetaKind::Theta1, w, tau);
    Ok(theta1_prime0(tau)? * t1(v + 2.0 * z)? / (t1(2.0 * z)? * t1(v)?))
}

/// Principal square root of `tau / i`; equals 1 at `tau = i` and is
/// continuous on the upper half plane.
pub fn sqrt_tau_over_i(tau: Complex64) -> Complex64 {
    (tau / Complex64::i()).sqrt()
}

/// A modular transformation law checked numerically by [`law_residual`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaLaw {
    /// `theta_1(v/tau | -1/tau) = -i sqrt(tau/i) e^{i pi v^2/tau} theta_1(v|tau)`.
    Theta1S,
    /// `theta_1'(0 | -1/tau) = (tau/i) sqrt(tau/i) theta_1'(0|tau)`.
    Theta1PrimeS,
    /// `E(-v/tau | -1/tau) = tau^{-1} e^{i pi v^2/tau} E(-v|tau)`.
    ES,
    /// `G(v/tau; z/tau | -1/tau) = tau e^{4 pi i v z/tau} G(v; z|tau)`.
    GS,
    /// `theta_{-m,kappa}(v/tau | -1/tau) = sqrt(tau/i) e^{i pi kappa v^2/(2tau)} (2kappa)^{-1/2}
    ///   sum_{l=0}^{2kappa-1} e^{-pi i m l/kappa} theta_{-l,kappa}(v|tau)`.
    LevelS { m: i64, kappa: i64 },
    /// `theta_1(v | tau+1) = e^{i pi/4} theta_1(v|tau)`.
    Theta1T,
    /// `theta_{m,kappa}(v | tau+1) = e^{pi i m^2/(2kappa)} theta_{m,kappa}(v|tau)`.
    LevelT { m: i64, kappa: i64 },
}

impl ThetaLaw {
    pub fn name(&self) -> String {
        match self {
            ThetaLaw::Theta1S => "theta1 S".into(),
            ThetaLaw::Theta1PrimeS => "theta1' S".into(),
            ThetaLaw::ES => "E S".into(),
            ThetaLaw::GS => "G S".into(),
            ThetaLaw::LevelS { m, kappa } => format!("theta_{{-{m},{kappa}}} S"),
            ThetaLaw::Theta1T => "theta1 T".into(),
            ThetaLaw::LevelT { m, kappa } => format!("theta_{{{m},{kappa}}} T"),
        }
    }

    pub fn is_s_law(&self) -> bool {
        !matches!(self, ThetaLaw::Theta1T | ThetaLaw::LevelT { .. })
    }
}

/// Both sides of `law` at `(v, z, tau)`.
pub fn law_sides(law: ThetaLaw, v: Complex64, z: Complex64, tau: Complex64) -> Result<(Complex64, Complex64)> {
    check_tau(tau)?;
    let i = Complex64::i();
    let st = -1.0 / tau;
    let sq = sqrt_tau_over_i(tau);
    let t1 = ThetaKind::Theta1;
    Ok(match law {
        ThetaLaw::Theta1S => {
            (theta_jacobi(t1, v / tau, st)?, -i * sq * (i * PI * v * v / tau).exp() * theta_jacobi(t1, v, tau)?)
        }
        ThetaLaw::Theta1PrimeS => (theta1_prime0(st)?, tau / i * sq * theta1_prime0(tau)?),
        ThetaLaw::ES => (ell_e(-v / tau, st)?, (i * PI * v * v / tau).exp() / tau * ell_e(-v, tau)?),
        ThetaLaw::GS => (ell_g(v / tau, z / tau, st)?, tau * (i * 4.0 * PI * v * z / tau).exp() * ell_g(v, z, tau)?),
        ThetaLaw::LevelS { m, kappa } => {
            let mut acc = Complex64::zero();
            for l in 0..2 * kappa {
                let ph = (-i * PI * (m * l) as f64 / kappa as f64).exp();
                acc += ph * theta_level(LevelThetaLabel::new(-l, kappa)?, v, tau)?;
            }
            let pre = sq * (i * PI * kappa as f64 * v * v / (2.0 * tau)).exp() / (2.0 * kappa as f64).sqrt();
            (theta_level(LevelThetaLabel::new(-m, kappa)?, v / tau, st)?, pre * acc)
        }
        ThetaLaw::Theta1T => {
            (theta_jacobi(t1, v, tau + 1.0)?, (i * PI / 4.0).exp() * theta_jacobi(t1, v, tau)?)
        }
        ThetaLaw::LevelT { m, kappa } => {
            let lab = LevelThetaLabel::new(m, kappa)?;
            let ph = (i * PI * (m * m) as f64 / (2.0 * kappa as f64)).exp();
            (theta_level(lab, v, tau + 1.0)?, ph * theta_level(lab, v, tau)?)
        }
    })
}

/// `|lhs - rhs| / max(1, |rhs|)` for `law` at `(v, z, tau)`.
pub fn law_residual(law: ThetaLaw, v: Complex64, z: Complex64, tau: Complex64) -> Result<f64> {
    let (a, b) = law_sides(law, v, z, tau)?;
    Ok((a - b).norm() / b.norm().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::LaurentX;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn theta3_series_leading_terms() {
        let t = theta_jacobi_series(ThetaKind::Theta3, 1, &int(1), 2).unwrap();
        let s = t.as_rational().unwrap();
        assert_eq!(s.coeff_at(&int(0)).unwrap(), LaurentX::one());
        let y = LaurentX::from_terms([(1, int(1)), (-1, int(1))]);
        assert_eq!(s.coeff_at(&rat(1, 2)).unwrap(), y);
        assert!(s.coeff_at(&int(1)).unwrap().is_zero());
    }

    #[test]
    fn odd_multiplier_rejected_for_half_integral_kinds() {
        assert!(theta_jacobi_series(ThetaKind::Theta1, 1, &int(1), 2).is_err());
        assert!(theta_level_series(LevelThetaLabel::new(1, 2).unwrap(), 1, 2).is_err());
    }

    #[test]
    fn theta1_vanishes_at_zero() {
        let v = theta_jacobi(ThetaKind::Theta1, c(0.0, 0.0), c(0.1, 1.0)).unwrap();
        assert!(v.norm() < 1e-15);
    }

    #[test]
    fn theta1_series_matches_numeric() {
        // theta_1(2z | tau) at z = 0.15 gives v = 0.3
        let tau = c(0.0, 1.0);
        let z = c(0.15, 0.0);
        let s = theta_jacobi_series(ThetaKind::Theta1, 2, &int(1), 12).unwrap();
        let a = s.eval(z, c(0.0, 0.0), tau).unwrap();
        let b = theta_jacobi(ThetaKind::Theta1, c(0.3, 0.0), tau).unwrap();
        assert!((a - b).norm() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn level_theta_first_terms() {
        // theta_{0,1}(v) = 1 + p (y + 1/y) + p^4 (y^2 + 1/y^2) + ... with y = e^{2 pi i v}
        let s = theta_level_series(LevelThetaLabel::new(0, 1).unwrap(), 1, 4).unwrap();
        assert_eq!(s.coeff_at(&int(0)).unwrap(), LaurentX::one());
        assert_eq!(s.coeff_at(&int(1)).unwrap(), LaurentX::from_terms([(1, int(1)), (-1, int(1))]));
        assert!(s.coeff_at(&int(2)).unwrap().is_zero());
        assert_eq!(s.coeff_at(&int(4)).unwrap(), LaurentX::from_terms([(2, int(1)), (-2, int(1))]));
        let shifted = theta_level_series(LevelThetaLabel::new(-6, 3).unwrap(), 2, 4).unwrap();
        let base = theta_level_series(LevelThetaLabel::new(0, 3).unwrap(), 2, 4).unwrap();
        assert_eq!(shifted, base);
    }

    #[test]
    fn eta_series_and_value() {
        let e = eta_series(&int(1), 3).unwrap();
        assert_eq!(e.lead(), &rat(1, 24));
        let want = [1, -1, -1, 0];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(e.coeff_at(&(rat(1, 24) + int(n as i64))).unwrap(), LaurentX::monomial(0, int(*w)));
        }
        let half = eta_series(&rat(1, 2), 4).unwrap();
        assert_eq!(half.lead(), &rat(1, 48));
        let two = eta_series(&int(2), 4).unwrap();
        assert_eq!(two.lead(), &rat(1, 12));
        assert_eq!(two.grid(), 1);
        let v = eta(c(0.0, 1.0)).unwrap();
        assert!((v.re - 0.768_225_422_326_056_7).abs() < 1e-15 && v.im.abs() < 1e-15);
        let sv = e.eval(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)).unwrap();
        assert!((sv - v).norm() < 1e-12);
    }

    #[test]
    fn elliptic_factors() {
        let tau = c(0.2, 1.1);
        assert!(ell_e(c(0.0, 0.0), tau).unwrap().norm() < 1e-15);
        let v = c(0.31, 0.07);
        assert!((ell_e(-v, tau).unwrap() + ell_e(v, tau).unwrap()).norm() < 1e-13);
        assert!(matches!(ell_g(c(0.0, 0.0), c(0.1, 0.0), tau), Err(Error::Pole(_))));
        let z = c(0.13, 0.02);
        let g0 = ell_g(v, z, tau).unwrap();
        let g1 = ell_g(v + 1.0, z, tau).unwrap();
        assert!((g0 - g1).norm() < 1e-10 * g0.norm());
    }

    #[test]
    fn transformation_laws() {
        let tau = c(0.3, 1.1);
        let (v, z) = (c(0.21, 0.13), c(0.11, -0.07));
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
            assert!(law_residual(law, v, z, tau).unwrap() < 1e-11, "{}", law.name());
        }
    }

    #[test]
    fn level_theta_t_law() {
        let tau = c(0.3, 0.8);
        let v = c(0.21, -0.05);
        for (n, m) in [(1, 3), (2, 4), (5, 3), (0, 2)] {
            let lab = LevelThetaLabel::new(n, m).unwrap();
            let a = theta_level(lab, v, tau + 1.0).unwrap();
            let b = theta_level(lab, v, tau).unwrap();
            let ph = (Complex64::i() * PI * (n * n) as f64 / (2.0 * m as f64)).exp();
            assert!((a - ph * b).norm() < 1e-12);
        }
    }
}
