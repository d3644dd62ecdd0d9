//! Weights of affine `sl_2`, orbit sums, the Weyl denominator and the
//! integrable characters.
//!
//! A weight `j Lambda1bar - n delta + K Lambda0` is written `(j, n, K)` and
//! corresponds to the monomial `x^j p^n e^{2 pi i K u}` in series coordinates.
//! `n` is called the depth.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qseries::{as_i64, int, rat, LaurentX, NomeSeries, Rational};
use crate::theta::{theta_level_series, LevelThetaLabel};

/// A series whose level tag records the `e^{2 pi i K u}` dependence.
pub type LevelKFunction = NomeSeries;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight {
    pub j: i64,
    pub n: Rational,
    pub level: i64,
}

impl AffineWeight {
    pub fn new(j: i64, n: Rational, level: i64) -> Self {
        AffineWeight { j, n, level }
    }

    /// `rho-hat = Lambda1bar + 2 Lambda0`.
    pub fn rho() -> Self {
        AffineWeight::new(1, Rational::zero(), 2)
    }

    /// `(lambda, lambda)`.
    pub fn norm(&self) -> Rational {
        form(self, self)
    }
}

/// The invariant form: `(j L + a delta + K L0, j' L + a' delta + K' L0) = j j'/2 + a K' + a' K`
/// with `a = -n`.
pub fn form(a: &AffineWeight, b: &AffineWeight) -> Rational {
    rat(a.j * b.j, 2) - &a.n * int(b.level) - &b.n * int(a.level)
}

/// `mu <= lambda` in the dominance order: `lambda - mu = a alpha_0 + b alpha_1`
/// with non-negative integers `a`, `b`.
pub fn dominance_leq(mu: &AffineWeight, lambda: &AffineWeight) -> Result<bool> {
    if mu.level != lambda.level {
        return Err(Error::LevelMismatch(mu.level, lambda.level));
    }
    // alpha_1 = (2, 0, 0), alpha_0 = (-2, -1, 0) in (j, n, K) coordinates
    let a = match as_i64(&(&mu.n - &lambda.n)) {
        Some(a) if a >= 0 => a,
        _ => return Ok(false),
    };
    let dj = lambda.j - mu.j;
    if dj.rem_euclid(2) != 0 {
        return Ok(false);
    }
    Ok(a + dj / 2 >= 0)
}

/// Orbit of the dominant weight `(l, 0, K)` under the affine Weyl group,
/// restricted to depths `< bound`.
///
/// The orbit is `{(s l + 2Kb, ((s l + 2Kb)^2 - l^2)/(4K))}` for `s = +-1`,
/// `b` in `Z`; coincident weights (at `l = 0` or `l = K`) appear once.
pub fn orbit(l: i64, level: i64, bound: &Rational) -> Result<Vec<AffineWeight>> {
    if level < 1 || l < 0 || l > level {
        return Err(Error::InvalidParameter(format!("orbit needs 0 <= l <= K with K >= 1, got l={l}, K={level}")));
    }
    let mut out = Vec::new();
    let bmax = {
        let b = bound.clone().max(Rational::zero());
        let d = (&b * int(4 * level) + int(l * l)).ceil().to_integer();
        let d: i64 = d.try_into().unwrap_or(i64::MAX / 4);
        ((d as f64).sqrt() / (2 * level) as f64).ceil() as i64 + 1
    };
    for s in [1, -1] {
        for b in -bmax..=bmax {
            let j = s * l + 2 * level * b;
            let n = rat(j * j - l * l, 4 * level);
            if n < *bound {
                out.push(AffineWeight::new(j, n, level));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The orbit sum `m_{l Lambda1bar + K Lambda0}`, known through depth `order`.
pub fn orbit_sum(l: i64, level: i64, order: u32) -> Result<LevelKFunction> {
    let bound = int(order as i64 + 1);
    let weights = orbit(l, level, &bound)?;
    NomeSeries::from_sparse(
        level,
        1,
        Rational::zero(),
        bound,
        weights.into_iter().map(|w| (w.n, w.j, Rational::one())),
    )
}

/// The Weyl denominator
/// `delta-hat = x (1 - x^{-2}) prod_{r>=1} (1 - p^r)(1 - x^{-2} p^r)(1 - x^2 p^r)`
/// raised to `power`, at level `2 power`, known through `p^order`.
pub fn weyl_denominator(power: u32, order: u32) -> NomeSeries {
    let mut d = NomeSeries::monomial(2, Rational::zero(), LaurentX::from_terms([(1, int(1)), (-1, int(-1))]), order);
    for r in 1..=order as i64 {
        for j in [0, -2, 2] {
            let f = NomeSeries::from_sparse(
                0,
                1,
                Rational::zero(),
                int(order as i64 + 1),
                [(int(0), 0, int(1)), (int(r), j, int(-1))],
            )
            .expect("integral exponents");
            d = d.mul(&f);
        }
    }
    d.pow_int(power)
}

/// `(p^{1/8} delta-hat)^power`, which equals `(i theta_1(2z|tau))^power`.
pub fn shifted_weyl_denominator(power: u32, order: u32) -> NomeSeries {
    weyl_denominator(power, order).shift_p(&rat(power as i64, 8))
}

/// Normalized character of the integrable module of highest weight
/// `l Lambda1bar + K Lambda0`, known through `lead + order`.
///
/// Computed as the quotient
/// `(theta_{l+1,K+2} - theta_{-(l+1),K+2}) / (theta_{1,2} - theta_{-1,2})`
/// with every theta function evaluated at `2z`; the leading term is
/// `x^l p^{h_l - c/24}`.
pub fn character(l: i64, level: i64, order: u32) -> Result<LevelKFunction> {
    if level < 0 || l < 0 || l > level {
        return Err(Error::InvalidParameter(format!("character needs 0 <= l <= K, got l={l}, K={level}")));
    }
    let m = level + 2;
    let num = theta_level_series(LevelThetaLabel::new(l + 1, m)?, 2, order)?
        .sub(&theta_level_series(LevelThetaLabel::new(-(l + 1), m)?, 2, order)?)?
        .with_level(m);
    let den = character_denominator(order)?;
    let q = num.div_exact(&den)?;
    Ok(q.truncate_order(&int(order as i64)))
}

/// `theta_{1,2}(2z) - theta_{-1,2}(2z)` at level 2; equal to `p^{1/8} delta-hat`.
pub fn character_denominator(order: u32) -> Result<NomeSeries> {
    Ok(theta_level_series(LevelThetaLabel::new(1, 2)?, 2, order)?
        .sub(&theta_level_series(LevelThetaLabel::new(-1, 2)?, 2, order)?)?
        .with_level(2))
}

/// `h_l - c/24` for the level-`K` module with highest weight `l`.
pub fn character_lead(l: i64, level: i64) -> Rational {
    rat((l + 1) * (l + 1), 4 * (level + 2)) - rat(1, 8)
}

/// Dominant weights of level `K` at depth 0, i.e. `j` in `0..=K`.
pub fn dominant_range(level: i64) -> std::ops::RangeInclusive<i64> {
    0..=level
}

/// True if every coefficient of `f` is invariant under `x -> 1/x`.
pub fn is_weyl_symmetric(f: &LevelKFunction) -> bool {
    f.is_reflection_symmetric()
}

/// Every monomial `x^j p^n` present in `f`, as weights of level `f.level()`.
pub fn support(f: &LevelKFunction) -> Vec<AffineWeight> {
    let mut out = Vec::new();
    for (e, c) in f.terms() {
        for (j, _) in c.iter() {
            out.push(AffineWeight::new(j, e.clone(), f.level()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(j: i64, n: i64, k: i64) -> AffineWeight {
        AffineWeight::new(j, int(n), k)
    }

    #[test]
    fn bilinear_form() {
        assert_eq!(form(&w(3, 2, 5), &w(3, 2, 5)), rat(9, 2) - int(20));
        assert_eq!(form(&w(0, 1, 0), &w(0, 0, 1)), int(-1));
        assert_eq!(AffineWeight::rho().norm(), rat(1, 2));
    }

    #[test]
    fn dominance() {
        let l = w(3, 1, 2);
        assert!(dominance_leq(&l, &l).unwrap());
        assert!(dominance_leq(&w(1, 1, 2), &l).unwrap());
        assert!(dominance_leq(&w(5, 2, 2), &l).unwrap());
        assert!(!dominance_leq(&w(5, 1, 2), &l).unwrap());
        assert!(!dominance_leq(&w(2, 1, 2), &l).unwrap());
        assert!(dominance_leq(&w(1, 1, 1), &l).is_err());
    }

    #[test]
    fn orbit_sum_examples() {
        let m0 = orbit_sum(0, 1, 1).unwrap();
        assert_eq!(m0.coeff_at(&int(0)).unwrap(), LaurentX::one());
        assert_eq!(m0.coeff_at(&int(1)).unwrap(), LaurentX::from_terms([(2, int(1)), (-2, int(1))]));
        let m1 = orbit_sum(1, 1, 2).unwrap();
        assert_eq!(m1.coeff_at(&int(0)).unwrap(), LaurentX::from_terms([(1, int(1)), (-1, int(1))]));
        assert!(m1.coeff_at(&int(1)).unwrap().is_zero());
        assert_eq!(m1.coeff_at(&int(2)).unwrap(), LaurentX::from_terms([(3, int(1)), (-3, int(1))]));
        assert!(orbit_sum(3, 2, 1).is_err());
    }

    #[test]
    fn orbit_norms_are_constant() {
        for k in 1..5 {
            for l in 0..=k {
                let seed = w(l, 0, k);
                for o in orbit(l, k, &int(30)).unwrap() {
                    assert_eq!(o.norm(), seed.norm());
                }
            }
        }
    }

    #[test]
    fn weyl_denominator_against_product() {
        let d = weyl_denominator(1, 1);
        assert_eq!(d.coeff_at(&int(0)).unwrap(), LaurentX::from_terms([(1, int(1)), (-1, int(-1))]));
        // (x - 1/x)(-(1 + x^2 + x^{-2})) = -(x^3 - x^{-3})
        assert_eq!(d.coeff_at(&int(1)).unwrap(), LaurentX::from_terms([(3, int(-1)), (-3, int(1))]));
        let d2 = weyl_denominator(2, 0);
        assert_eq!(d2.coeff_at(&int(0)).unwrap(), LaurentX::from_terms([(2, int(1)), (0, int(-2)), (-2, int(1))]));
        assert_eq!(d2.level(), 4);
    }

    #[test]
    fn level_one_vacuum_character() {
        let c = character(0, 1, 1).unwrap();
        assert_eq!(c.lead(), &rat(-1, 24));
        assert_eq!(c.coeff_at(&rat(-1, 24)).unwrap(), LaurentX::one());
        assert_eq!(
            c.coeff_at(&rat(23, 24)).unwrap(),
            LaurentX::from_terms([(2, int(1)), (0, int(1)), (-2, int(1))])
        );
        let c1 = character(1, 1, 1).unwrap();
        assert_eq!(c1.coeffs()[0], LaurentX::from_terms([(1, int(1)), (-1, int(1))]));
    }

    #[test]
    fn character_leads() {
        for k in 0..5 {
            for l in 0..=k {
                let c = character(l, k, 2).unwrap();
                assert_eq!(c.lead(), &character_lead(l, k));
                assert_eq!(c.level(), k);
                assert_eq!(c.coeffs()[0].max_exponent(), Some(l));
                assert!(c.is_reflection_symmetric());
            }
        }
    }
}
