//! The affine Calogero–Sutherland operators in series coordinates, the
//! affine Jack polynomials and their closed forms at levels 1 and 2.
//!
//! For `lambda = (l-k) Lambda1bar + K Lambda0` the polynomial `Ĵ` is the
//! unique Weyl-invariant series `m_lambda + sum_{mu < lambda} c_mu m_mu` with
//! `M_k Ĵ = (lambda, lambda + 2k rho) Ĵ`. Its normalized version is
//! `J = p^{-alpha} Ĵ`, `alpha = k/8 - l^2/(4 kappa)`, `kappa = K + 2k`.

use num_traits::{One, Signed, Zero};

use crate::affine::{self, LevelKFunction};
use crate::error::{Error, Result};
use crate::qseries::{int, rat, LaurentX, NomeSeries, Prefactor, Rational, ScaledSeries};
use crate::theta::eta_series;

/// `(K, k, l)` with `k <= l <= kappa - k`, `kappa = K + 2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JackLabel {
    pub level: i64,
    pub k: i64,
    pub l: i64,
}

impl JackLabel {
    pub fn new(level: i64, k: i64, l: i64) -> Result<Self> {
        if level < 0 || k < 1 {
            return Err(Error::InvalidParameter(format!("need K >= 0 and k >= 1, got K={level}, k={k}")));
        }
        if l < k || l > level + k {
            return Err(Error::InvalidParameter(format!("need {k} <= l <= {}, got l={l}", level + k)));
        }
        Ok(JackLabel { level, k, l })
    }

    /// Every label at `(K, k)`, in increasing `l`.
    pub fn all(level: i64, k: i64) -> Result<Vec<JackLabel>> {
        (k..=level + k).map(|l| JackLabel::new(level, k, l)).collect()
    }

    pub fn kappa(&self) -> i64 {
        self.level + 2 * self.k
    }

    /// `j` of the dominant weight, `l - k`.
    pub fn weight_j(&self) -> i64 {
        self.l - self.k
    }

    /// `(lambda, lambda + 2k rho) = (l^2 - k^2)/2`.
    pub fn eigenvalue(&self) -> Rational {
        rat(self.l * self.l - self.k * self.k, 2)
    }

    /// `alpha = k/8 - l^2/(4 kappa)`.
    pub fn alpha(&self) -> Rational {
        rat(self.k, 8) - rat(self.l * self.l, 4 * self.kappa())
    }
}

/// Output of [`jack_series`].
#[derive(Clone, Debug, PartialEq)]
pub struct JackResult {
    pub label: JackLabel,
    pub unnormalized: LevelKFunction,
    pub alpha: Rational,
    pub normalized: NomeSeries,
    pub eigenvalue: Rational,
}

/// `Δ̂`: multiplies the monomial `x^j p^n` (level `K`) by `j^2/2 - 2 n K`.
pub fn apply_delta(f: &LevelKFunction) -> LevelKFunction {
    let level = int(f.level());
    f.map_diagonal(|j, n| rat(j * j, 2) - int(2) * n * &level)
}

/// Diagonal part of `M_k` on `x^j p^n` at level `K`:
/// `(mu, mu) + 2k (rho, mu) = j^2/2 - 2nK + kj - 4kn`.
fn m_diagonal(j: i64, n: &Rational, level: i64, k: i64) -> Rational {
    rat(j * j, 2) + int(k * j) - n * int(2 * level + 4 * k)
}

/// Number of grid steps in an integral depth shift `d`.
fn steps(d: i64, grid: u64) -> usize {
    (d as u64 * grid) as usize
}

/// `M_k f`.
///
/// With `1/(1 - e^a) = -sum_{m>=1} e^{-m a}` each positive root `a` moves a
/// source `x^j p^n` to `x^j p^n e^{-m a}` with weight `2k (a, source)`:
///
/// * `alpha + r delta`: to `x^{j-2m} p^{n+mr}`, weight `2k (j + rK)`;
/// * `-alpha + r delta` (`r >= 1`): to `x^{j+2m} p^{n+mr}`, weight `2k (-j + rK)`;
/// * `r delta` (`r >= 1`): to `x^j p^{n+mr}`, weight `2k rK`.
///
/// The `r = 0` sum stays at the same depth and is resummed as
/// `2k x^{-2} (∂ f_n) / (1 - x^{-2})`, which terminates on Weyl-invariant input.
pub fn apply_m(f: &LevelKFunction, k: i64) -> Result<LevelKFunction> {
    let level = f.level();
    let grid = f.grid();
    let two_k = int(2 * k);
    let src = f.coeffs();
    let mut out = Vec::with_capacity(src.len());
    for (t, ft) in src.iter().enumerate() {
        let n = f.exponent(t);
        let mut acc = ft.map_diagonal(|j| m_diagonal(j, &n, level, k));
        if !ft.is_zero() {
            let d = ft.map_diagonal(int);
            let q = d.div_one_minus_x_inv2().ok_or_else(|| Error::NonTerminating(n.clone()))?;
            acc.add_scaled_shifted(&q, &two_k, -2);
        }
        // r >= 1, m >= 1 with source t - m r grid steps
        let max_shift = t as u64 / grid;
        for r in 1..=max_shift as i64 {
            for m in 1..=(max_shift as i64 / r) {
                let s = t - steps(m * r, grid);
                for (j, c) in src[s].iter() {
                    let c2 = c * &two_k;
                    acc.add_term(j - 2 * m, &c2 * int(j + r * level));
                    acc.add_term(j + 2 * m, &c2 * int(-j + r * level));
                    acc.add_term(j, &c2 * int(r * level));
                }
            }
        }
        out.push(acc);
    }
    Ok(NomeSeries::new(level, grid, f.lead().clone(), out))
}

/// Coefficient of `x^j p^n` in `M_k f`, as a finite sum over the sources.
pub fn m_coeff_at(f: &LevelKFunction, k: i64, j: i64, n: &Rational) -> Rational {
    let level = f.level();
    let at = |jj: i64, nn: &Rational| -> Rational {
        f.coeff_at(nn).map(|c| c.coeff(jj)).unwrap_or_else(Rational::zero)
    };
    let mut acc = m_diagonal(j, n, level, k) * at(j, n);
    let two_k = int(2 * k);
    if let Some(fc) = f.coeff_at(n) {
        for (js, c) in fc.iter() {
            if js > j && (js - j) % 2 == 0 {
                acc += &two_k * int(js) * c;
            }
        }
    }
    let depth = n - f.lead();
    if depth.is_positive() {
        let max_shift = depth.floor().to_integer();
        let max_shift: i64 = max_shift.try_into().unwrap_or(0);
        for r in 1..=max_shift {
            for m in 1..=(max_shift / r) {
                let ns = n - int(m * r);
                let up = at(j + 2 * m, &ns);
                let down = at(j - 2 * m, &ns);
                let same = at(j, &ns);
                acc += &two_k
                    * (up * int(j + 2 * m + r * level) + down * int(-(j - 2 * m) + r * level) + same * int(r * level));
            }
        }
    }
    acc
}

/// `L_k g = Δ̂ g - 2k(k-1) V g` with the potential
/// `V = sum_{n in Z} p^n e^alpha / (1 - p^n e^alpha)^2` expanded as
/// `x^{-2}/(1 - x^{-2})^2 + sum_{n,m >= 1} m p^{nm} (x^{2m} + x^{-2m})`.
///
/// The `n = 0` term is applied by exact division, so `g` must be divisible
/// by `(1 - x^{-2})^2` coefficientwise when `k >= 2` (true for `δ̂^k f`).
pub fn apply_l(g: &NomeSeries, k: i64) -> Result<NomeSeries> {
    let base = apply_delta(g);
    let pot = k * (k - 1);
    if pot == 0 {
        return Ok(base);
    }
    let grid = g.grid();
    let src = g.coeffs();
    let mut out = Vec::with_capacity(src.len());
    for (t, gt) in src.iter().enumerate() {
        let n = g.exponent(t);
        let mut v = LaurentX::zero();
        if !gt.is_zero() {
            let q = gt
                .div_one_minus_x_inv2()
                .and_then(|q| q.div_one_minus_x_inv2())
                .ok_or_else(|| Error::NonTerminating(n.clone()))?;
            v.add_scaled_shifted(&q, &Rational::one(), -2);
        }
        let max_shift = t as u64 / grid;
        for nn in 1..=max_shift as i64 {
            for m in 1..=(max_shift as i64 / nn) {
                let s = t - steps(nn * m, grid);
                v.add_scaled_shifted(&src[s], &int(m), 2 * m);
                v.add_scaled_shifted(&src[s], &int(m), -2 * m);
            }
        }
        let mut acc = base.coeffs()[t].clone();
        acc.add_scaled_shifted(&v, &int(-2 * pot), 0);
        out.push(acc);
    }
    Ok(NomeSeries::new(g.level(), grid, g.lead().clone(), out))
}

/// Orbit sum of the dominant weight `(j, depth)` at level `K`, truncated
/// below the absolute exponent `bound`, on integer steps from `lead`.
fn shifted_orbit(j: i64, level: i64, depth: &Rational, lead: &Rational, bound: &Rational) -> Result<NomeSeries> {
    let rel = bound - depth;
    let weights = if level == 0 {
        vec![affine::AffineWeight::new(0, Rational::zero(), 0)]
    } else {
        affine::orbit(j, level, &rel)?
    };
    NomeSeries::from_sparse(
        level,
        1,
        lead.clone(),
        bound.clone(),
        weights.into_iter().filter(|w| w.n < rel).map(|w| (&w.n + depth, w.j, Rational::one())),
    )
}

/// `Ĵ` for the weight `(l-k) Lambda1bar - d0 delta + K Lambda0`, known through `p^{d0 + order}`.
///
/// Dominant weights `(j', d0 + d)` below the seed are visited by increasing
/// `d`, then decreasing `j'`; every source of `M_k` at such a weight is
/// already final when it is reached.
pub fn jack_series_at_depth(label: JackLabel, d0: &Rational, order: u32) -> Result<LevelKFunction> {
    let JackLabel { level, k, .. } = label;
    let kappa = label.kappa();
    let jl = label.weight_j();
    let bound = d0 + int(order as i64 + 1);
    let energy = |j: i64, d: &Rational| rat((j + k) * (j + k) - k * k, 2) - d * int(2 * kappa);
    let e_lambda = energy(jl, d0);
    let mut f = shifted_orbit(jl, level, d0, d0, &bound)?;
    for d in 0..=order as i64 {
        let depth = d0 + int(d);
        let top = if d == 0 { jl - 1 } else { (jl + 2 * d).min(level) };
        let mut j = top;
        while j >= 0 {
            if (j - jl).rem_euclid(2) == 0 {
                let target = m_coeff_at(&f, k, j, &depth);
                if !target.is_zero() {
                    let den = &e_lambda - energy(j, &depth);
                    if den.is_zero() {
                        return Err(Error::Resonance { j, depth });
                    }
                    let c = target / den;
                    let orb = shifted_orbit(j, level, &depth, d0, &bound)?;
                    f = f.add(&orb.scale(&c))?;
                }
            }
            j -= 1;
        }
    }
    Ok(f)
}

/// `Ĵ`, normalized `J` and the associated data, known through `order` beyond the lead.
pub fn jack_series(label: JackLabel, order: u32) -> Result<JackResult> {
    let unnormalized = jack_series_at_depth(label, &Rational::zero(), order)?;
    let alpha = label.alpha();
    let normalized = unnormalized.clone().shift_p(&-alpha.clone());
    Ok(JackResult { label, unnormalized, alpha, normalized, eigenvalue: label.eigenvalue() })
}

/// `J = p^{-alpha} Ĵ`.
pub fn jack_normalized(label: JackLabel, order: u32) -> Result<NomeSeries> {
    Ok(jack_series(label, order)?.normalized)
}

fn eta_pow(s: &Rational, c: &Rational, order: u32) -> Result<NomeSeries> {
    eta_series(s, order)?.pow_rational(c)
}

/// Closed form of `J` at level 1 or 2 in terms of characters and eta quotients.
///
/// * `K = 1`: `J = eta^{-(k-1)/kappa} chi_{l-k}`.
/// * `K = 2`, `e = (k-1)/(k+1)`:
///   `J_0 = (chi_0 + chi_2)/(2 h_1) + (chi_0 - chi_2)/(2 h_2)`,
///   `J_1 = 2^{-e/2} chi_1 / h_3`,
///   `J_2 = (chi_0 + chi_2)/(2 h_1) - (chi_0 - chi_2)/(2 h_2)`, where
///   `h_1 = (eta(tau/2) eta(2tau)/eta)^e`, `h_2 = (eta^2/eta(tau/2))^e`,
///   `h_3 = (2^{-1/2} eta^2/eta(2tau))^e`.
///
/// Powers of 2 are carried exactly in the [`ScaledSeries`] prefactors.
pub fn closed_form(label: JackLabel, order: u32) -> Result<ScaledSeries> {
    let JackLabel { level, k, .. } = label;
    let lam = label.weight_j();
    match level {
        1 => {
            let e = rat(-(k - 1), label.kappa());
            let chi = affine::character(lam, 1, order)?;
            Ok(ScaledSeries::rational(chi.mul(&eta_pow(&int(1), &e, order)?)))
        }
        2 => {
            let e = rat(k - 1, k + 1);
            if lam == 1 {
                let chi1 = affine::character(1, 2, order)?;
                let pre = Prefactor::two_pow(-&e / int(2));
                let h3_pre = Prefactor::two_pow(-&e / int(2));
                let h3 = eta_pow(&int(1), &(&e * int(2)), order)?.mul(&eta_pow(&int(2), &-e.clone(), order)?);
                let num = ScaledSeries::new(pre.mul(&h3_pre.recip()?), chi1);
                return num.div_series(&h3);
            }
            let (b_same, b_cross) = level_two_transition(k, order)?;
            let chi0 = affine::character(0, 2, order)?;
            let chi2 = affine::character(2, 2, order)?;
            let (own, other) = if lam == 0 { (chi0, chi2) } else { (chi2, chi0) };
            let j = b_same.mul(&own).add(&b_cross.mul(&other))?;
            Ok(ScaledSeries::rational(j))
        }
        _ => Err(Error::InvalidParameter(format!("closed forms exist for K in {{1, 2}}, got K={level}"))),
    }
}

/// `(h_1, h_2, eta^2/eta(2tau))` raised to `e = (k-1)/(k+1)`.
fn level_two_h(k: i64, order: u32) -> Result<(NomeSeries, NomeSeries, NomeSeries)> {
    let e = rat(k - 1, k + 1);
    let half = rat(1, 2);
    let h1 = eta_pow(&half, &e, order)?.mul(&eta_pow(&int(2), &e, order)?).mul(&eta_pow(&int(1), &-e.clone(), order)?);
    let h2 = eta_pow(&int(1), &(&e * int(2)), order)?.mul(&eta_pow(&half, &-e.clone(), order)?);
    let h3 = eta_pow(&int(1), &(&e * int(2)), order)?.mul(&eta_pow(&int(2), &-e.clone(), order)?);
    Ok((h1, h2, h3))
}

/// `b_{00} = b_{22} = 1/(2h_1) + 1/(2h_2)` and `b_{02} = b_{20} = 1/(2h_1) - 1/(2h_2)`.
fn level_two_transition(k: i64, order: u32) -> Result<(NomeSeries, NomeSeries)> {
    let (h1, h2, _) = level_two_h(k, order)?;
    let a = h1.invert()?.scale(&rat(1, 2));
    let b = h2.invert()?.scale(&rat(1, 2));
    Ok((a.add(&b)?, a.sub(&b)?))
}

/// Transition matrix `b_{lambda,mu}` with `J_lambda = sum_mu b_{lambda,mu} chi_mu`,
/// indexed by `j = l - k` and `j' = mu`; only for `K` in `{1, 2}`.
///
/// At level 2 the middle entry is `(eta^2/eta(2tau))^{-e}`: the powers of
/// two in `2^{-e/2} / h_3` cancel.
pub fn transition_matrix(level: i64, k: i64, order: u32) -> Result<Vec<Vec<NomeSeries>>> {
    let zero = || NomeSeries::constant(Rational::zero(), order);
    match level {
        1 => {
            let b = eta_pow(&int(1), &rat(-(k - 1), 1 + 2 * k), order)?;
            Ok(vec![vec![b.clone(), zero()], vec![zero(), b]])
        }
        2 => {
            let (same, cross) = level_two_transition(k, order)?;
            let (_, _, h3) = level_two_h(k, order)?;
            let mid = h3.invert()?;
            Ok(vec![
                vec![same.clone(), zero(), cross.clone()],
                vec![zero(), mid, zero()],
                vec![cross, zero(), same],
            ])
        }
        _ => Err(Error::InvalidParameter(format!("transition matrices exist for K in {{1, 2}}, got K={level}"))),
    }
}

/// Outcome of [`heat_check`]: the first nonzero coefficient, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct HeatReport {
    pub level: i64,
    pub k: i64,
    pub order: u32,
    /// `(row j, p-exponent, x-exponent, value)` of the first nonzero entry.
    pub failure: Option<(i64, Rational, i64, Rational)>,
}

impl HeatReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `sum_mu (k-1) b_{lambda,mu} Δ̂ chi_mu + 2 kappa (p ∂_p b_{lambda,mu}) chi_mu = 0`
/// for every row `lambda`, through `order` beyond the lead.
pub fn heat_check(level: i64, k: i64, order: u32) -> Result<HeatReport> {
    let b = transition_matrix(level, k, order)?;
    let kappa = level + 2 * k;
    let chis: Vec<NomeSeries> = (0..=level).map(|mu| affine::character(mu, level, order)).collect::<Result<_>>()?;
    let dchis: Vec<NomeSeries> = chis.iter().map(apply_delta).collect();
    for (row, brow) in b.iter().enumerate() {
        let mut acc: Option<NomeSeries> = None;
        for (mu, bm) in brow.iter().enumerate() {
            if bm.is_zero() {
                continue;
            }
            let t1 = bm.mul(&dchis[mu]).scale(&int(k - 1));
            let t2 = bm.p_dp().mul(&chis[mu]).scale(&int(2 * kappa));
            let term = t1.add(&t2)?;
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
        }
        if let Some(a) = acc {
            if let Some((e, j, v)) = a
                .terms()
                .next()
                .map(|(e, c)| {
                    let (j, v) = c.iter().next_back().map(|(j, v)| (j, v.clone())).expect("nonzero");
                    (e, j, v)
                })
            {
                return Ok(HeatReport { level, k, order, failure: Some((row as i64, e, j, v)) });
            }
        }
    }
    Ok(HeatReport { level, k, order, failure: None })
}

/// For `k = 1`, `φ = δ̂ Ĵ` is an alternating theta sum and has integer coefficients.
pub fn phi_is_integral(label: JackLabel, order: u32) -> Result<bool> {
    let j = jack_series(label, order)?.unnormalized;
    let phi = affine::weyl_denominator(label.k as u32, order).mul(&j);
    Ok(phi.coeffs().iter().all(|c| c.iter().all(|(_, v)| v.is_integer())))
}

/// Structural checks on `Ĵ`: eigen residual, triangularity, Weyl symmetry,
/// leading coefficient and the `δ`-shift. Returns a description of the first
/// failure.
pub fn structure_check(label: JackLabel, order: u32, shift: &Rational) -> Result<Option<String>> {
    let res = jack_series(label, order)?;
    let jhat = &res.unnormalized;
    let mj = apply_m(jhat, label.k)?;
    let resid = mj.sub(&jhat.scale(&res.eigenvalue))?;
    if let Some((e, c)) = resid.terms().next() {
        return Ok(Some(format!("eigen residual nonzero at p^{e}: {c}")));
    }
    let top = affine::AffineWeight::new(label.weight_j(), Rational::zero(), label.level);
    if jhat.coeff_at(&Rational::zero()).map(|c| c.coeff(top.j)) != Some(Rational::one()) {
        return Ok(Some("leading coefficient is not 1".into()));
    }
    for w in affine::support(jhat) {
        if !affine::dominance_leq(&w, &top)? {
            return Ok(Some(format!("weight ({}, {}) not below the seed", w.j, w.n)));
        }
    }
    if !jhat.is_reflection_symmetric() {
        return Ok(Some("not invariant under x -> 1/x".into()));
    }
    let shifted = jack_series_at_depth(label, shift, order)?;
    if !shifted.agrees_with(&jhat.clone().shift_p(shift)) {
        return Ok(Some(format!("delta shift by {shift} is not multiplication by p^{shift}")));
    }
    Ok(None)
}

/// Checks `L_k(δ̂^k f) - (k^2/2) δ̂^k f = δ̂^k M_k f` for `f = m_{j Lambda1bar + K Lambda0}`.
pub fn conjugation_check(level: i64, k: i64, j: i64, order: u32) -> Result<bool> {
    let f = if level == 0 {
        NomeSeries::one(order)
    } else {
        affine::orbit_sum(j, level, order)?
    };
    let dk = affine::weyl_denominator(k as u32, order);
    let g = dk.mul(&f);
    let lhs = apply_l(&g, k)?.sub(&g.scale(&rat(k * k, 2)))?;
    let rhs = dk.mul(&apply_m(&f, k)?);
    Ok(lhs.agrees_with(&rhs))
}

/// `x^j p^n` coefficient of `f`, or zero.
pub fn coefficient(f: &NomeSeries, n: &Rational, j: i64) -> Rational {
    f.coeff_at(n).map(|c| c.coeff(j)).unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_data() {
        let l = JackLabel::new(1, 1, 1).unwrap();
        assert_eq!(l.alpha(), rat(1, 24));
        assert_eq!(l.eigenvalue(), int(0));
        let z = JackLabel::new(0, 3, 3).unwrap();
        assert_eq!(z.alpha(), int(0));
        assert!(JackLabel::new(1, 2, 4).is_err());
        assert!(JackLabel::new(1, 2, 1).is_err());
        assert_eq!(JackLabel::new(1, 2, 2).unwrap().alpha(), rat(1, 4) - rat(4, 20));
    }

    #[test]
    fn delta_examples() {
        let one = NomeSeries::one(2).with_level(3);
        assert!(apply_delta(&one).is_zero());
        let x = NomeSeries::monomial(1, int(0), LaurentX::monomial(1, int(1)), 1);
        assert_eq!(apply_delta(&x).coeffs()[0], LaurentX::monomial(1, rat(1, 2)));
        let px2 = NomeSeries::monomial(1, int(1), LaurentX::monomial(2, int(1)), 1);
        assert!(apply_delta(&px2).is_zero());
    }

    #[test]
    fn m_on_single_weight() {
        // diagonal coefficient at Lambda1bar + Lambda0 for k = 1 is 1/2 + 1 = 3/2
        let f = NomeSeries::monomial(1, int(0), LaurentX::monomial(1, int(1)), 0);
        assert_eq!(m_coeff_at(&f, 1, 1, &int(0)), rat(3, 2));
        let c = NomeSeries::one(3);
        assert!(apply_m(&c, 2).unwrap().is_zero());
    }

    #[test]
    fn level_zero_is_constant() {
        for k in 1..4 {
            let r = jack_series(JackLabel::new(0, k, k).unwrap(), 5).unwrap();
            assert!(r.unnormalized.agrees_with(&NomeSeries::one(5)));
            assert_eq!(r.alpha, int(0));
        }
    }

    #[test]
    fn k_one_is_the_character() {
        for l in 1..=2 {
            let label = JackLabel::new(1, 1, l).unwrap();
            let j = jack_normalized(label, 8).unwrap();
            let chi = affine::character(l - 1, 1, 8).unwrap();
            assert!(j.agrees_with(&chi), "{j}\n{chi}");
        }
    }

    #[test]
    fn k_two_level_one_coefficients() {
        // J_{0,1} for k = 2 is eta^{-1/5} chi_0
        let j = jack_series(JackLabel::new(1, 2, 2).unwrap(), 3).unwrap().unnormalized;
        assert_eq!(coefficient(&j, &int(1), 0), rat(6, 5));
        assert_eq!(coefficient(&j, &int(2), 0), rat(63, 25));
        assert_eq!(coefficient(&j, &int(3), 0), rat(506, 125));
    }

    #[test]
    fn residual_and_structure() {
        for (kk, k) in [(1, 2), (2, 2), (3, 1)] {
            for label in JackLabel::all(kk, k).unwrap() {
                assert_eq!(structure_check(label, 6, &rat(-5, 12)).unwrap(), None, "{label:?}");
            }
        }
    }

    #[test]
    fn conjugation_small() {
        for k in 1..=3 {
            for j in 0..=2 {
                assert!(conjugation_check(2, k, j, 5).unwrap(), "k={k} j={j}");
            }
        }
    }

    #[test]
    fn heat_equation_vanishes() {
        for level in 1..=2 {
            for k in 1..=3 {
                let r = heat_check(level, k, 6).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn closed_forms_match_small_order() {
        for level in 1..=2 {
            for k in 1..=3 {
                for label in JackLabel::all(level, k).unwrap() {
                    let j = ScaledSeries::rational(jack_normalized(label, 5).unwrap());
                    let c = closed_form(label, 5).unwrap();
                    assert!(j.agrees_with(&c), "{label:?}: {:?}", j.first_difference(&c));
                }
            }
        }
    }

    #[test]
    fn phi_integral_for_k_one() {
        for level in 0..=2 {
            for label in JackLabel::all(level, 1).unwrap() {
                assert!(phi_is_integral(label, 6).unwrap());
            }
        }
    }
}
