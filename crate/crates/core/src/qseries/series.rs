use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{as_i64, denom_u64, int, lcm, rational_pow, to_f64, LaurentX, Rational};
use crate::error::{Error, Result};

/// Truncated series `e^{2 pi i K u} p^lead sum_{n=0}^{N} c_n(x) p^{n/D}`.
///
/// The coefficients `c_0..c_N` are known exactly; nothing is claimed about
/// exponents at or beyond `lead + (N+1)/D`. Arithmetic tracks that bound, so
/// the result of any operation is exact as far as it reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NomeSeries {
    level: i64,
    grid: u64,
    lead: Rational,
    coeffs: Vec<LaurentX>,
}

impl NomeSeries {
    /// Raw constructor. `coeffs` must be non-empty and `grid >= 1`.
    pub fn new(level: i64, grid: u64, lead: Rational, coeffs: Vec<LaurentX>) -> Self {
        assert!(grid >= 1, "grid denominator must be positive");
        assert!(!coeffs.is_empty(), "a series needs at least one known coefficient");
        NomeSeries { level, grid, lead, coeffs }
    }

    /// The series for `c(x) p^lead`, known through `lead + order`.
    pub fn monomial(level: i64, lead: Rational, c: LaurentX, order: u32) -> Self {
        let mut coeffs = vec![LaurentX::zero(); order as usize + 1];
        coeffs[0] = c;
        NomeSeries::new(level, 1, lead, coeffs)
    }

    /// The constant `1` at level 0, known through `p^order`.
    pub fn one(order: u32) -> Self {
        Self::monomial(0, Rational::zero(), LaurentX::one(), order)
    }

    pub fn constant(c: Rational, order: u32) -> Self {
        Self::monomial(0, Rational::zero(), LaurentX::monomial(0, c), order)
    }

    /// Builds a series from sparse `(p-exponent, x-exponent, coefficient)` terms.
    ///
    /// Terms at or beyond `bound` (exclusive, absolute p-exponent) are dropped;
    /// every exponent must lie on `lead + Z/grid`.
    pub fn from_sparse<I>(level: i64, grid: u64, lead: Rational, bound: Rational, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, i64, Rational)>,
    {
        let n_terms = steps_below(&lead, grid, &bound).max(1);
        let mut coeffs = vec![LaurentX::zero(); n_terms as usize];
        let g = int(grid as i64);
        for (e, j, c) in terms {
            if e >= bound {
                continue;
            }
            let idx = (&e - &lead) * &g;
            let idx = as_i64(&idx).filter(|i| *i >= 0).ok_or_else(|| {
                Error::InvalidParameter(format!("exponent {e} is not on the grid of the series"))
            })?;
            coeffs[idx as usize].add_term(j, c);
        }
        Ok(NomeSeries { level, grid, lead, coeffs })
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn grid(&self) -> u64 {
        self.grid
    }

    pub fn lead(&self) -> &Rational {
        &self.lead
    }

    /// The truncation index `N`: coefficients `0..=N` are known.
    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentX] {
        &self.coeffs
    }

    /// Exclusive bound: the first p-exponent not known.
    pub fn bound(&self) -> Rational {
        &self.lead + Rational::new((self.coeffs.len() as i64).into(), (self.grid as i64).into())
    }

    /// Absolute p-exponent of coefficient index `n`.
    pub fn exponent(&self, n: usize) -> Rational {
        &self.lead + Rational::new((n as i64).into(), (self.grid as i64).into())
    }

    /// Coefficient of `p^e`; `None` if `e` is beyond the known range.
    pub fn coeff_at(&self, e: &Rational) -> Option<LaurentX> {
        if *e >= self.bound() {
            return None;
        }
        if *e < self.lead {
            return Some(LaurentX::zero());
        }
        let idx = (e - &self.lead) * int(self.grid as i64);
        match as_i64(&idx) {
            Some(i) => Some(self.coeffs[i as usize].clone()),
            None => Some(LaurentX::zero()),
        }
    }

    /// Iterates `(p-exponent, coefficient)` over nonzero known coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &LaurentX)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(n, c)| (self.exponent(n), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentX::is_zero)
    }

    pub fn with_level(mut self, level: i64) -> Self {
        self.level = level;
        self
    }

    /// Multiplies by `p^e`.
    pub fn shift_p(mut self, e: &Rational) -> Self {
        self.lead += e;
        self
    }

    /// Multiplies by `x^j`.
    pub fn shift_x(&self, j: i64) -> Self {
        self.map_coeffs(|c| c.shift(j))
    }

    /// Substitutes `x -> x^c`.
    pub fn dilate_x(&self, c: i64) -> Self {
        self.map_coeffs(|p| p.dilate(c))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(s))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    fn map_coeffs<F: Fn(&LaurentX) -> LaurentX>(&self, f: F) -> Self {
        NomeSeries {
            level: self.level,
            grid: self.grid,
            lead: self.lead.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Re-expresses on grid `grid` (a multiple of the current one) with the given lead.
    ///
    /// The new lead must not exceed the current one and must differ from it by
    /// a multiple of `1/grid`.
    fn regrid(&self, grid: u64, lead: &Rational) -> Self {
        debug_assert!(grid.is_multiple_of(self.grid) && *lead <= self.lead);
        let step = (grid / self.grid) as usize;
        let offset = as_i64(&((&self.lead - lead) * int(grid as i64))).expect("alignable lead") as usize;
        let len = offset + self.coeffs.len() * step;
        let mut coeffs = vec![LaurentX::zero(); len];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[offset + n * step] = c.clone();
        }
        NomeSeries { level: self.level, grid, lead: lead.clone(), coeffs }
    }

    /// Drops everything at or beyond the absolute exponent `bound`.
    pub fn truncate_at(&self, bound: &Rational) -> Self {
        let keep = steps_below(&self.lead, self.grid, bound).clamp(1, self.coeffs.len() as i64);
        let mut out = self.clone();
        out.coeffs.truncate(keep as usize);
        out
    }

    /// Keeps the series known through `lead + order` only.
    pub fn truncate_order(&self, order: &Rational) -> Self {
        let bound = &self.lead + order + Rational::new(1.into(), (self.grid as i64).into());
        self.truncate_at(&bound)
    }

    /// Moves the lead to the first nonzero coefficient and shrinks the grid
    /// to the smallest one carrying every known term.
    pub fn normalize(&self) -> Self {
        let first = match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => i,
            None => return self.clone(),
        };
        let g = self
            .coeffs
            .iter()
            .enumerate()
            .skip(first)
            .filter(|(_, c)| !c.is_zero())
            .fold(self.grid, |g, (n, _)| num_integer::gcd(g, (n - first) as u64));
        // the bound must stay representable on the coarser grid
        let g = num_integer::gcd(g, (self.coeffs.len() - first) as u64);
        let coeffs: Vec<LaurentX> = self.coeffs[first..].iter().step_by(g as usize).cloned().collect();
        NomeSeries { level: self.level, grid: self.grid / g, lead: self.exponent(first), coeffs }
    }

    fn check_level(&self, other: &NomeSeries) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        Ok(())
    }

    /// Common grid for two series: both leads and both grids must sit on it.
    fn common_grid(&self, other: &NomeSeries) -> u64 {
        let diff = &self.lead - &other.lead;
        lcm(lcm(self.grid, other.grid), denom_u64(&diff))
    }

    pub fn add(&self, other: &NomeSeries) -> Result<NomeSeries> {
        self.check_level(other)?;
        let grid = self.common_grid(other);
        let lead = self.lead.clone().min(other.lead.clone());
        let bound = self.bound().min(other.bound());
        let a = self.regrid(grid, &lead);
        let b = other.regrid(grid, &lead);
        let n = steps_below(&lead, grid, &bound).max(1) as usize;
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = a.coeffs.get(i).cloned().unwrap_or_default();
            if let Some(d) = b.coeffs.get(i) {
                c.add_assign_ref(d);
            }
            coeffs.push(c);
        }
        Ok(NomeSeries { level: self.level, grid, lead, coeffs })
    }

    pub fn sub(&self, other: &NomeSeries) -> Result<NomeSeries> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &NomeSeries) -> NomeSeries {
        let grid = lcm(self.grid, other.grid);
        let a = self.regrid(grid, &self.lead);
        let b = other.regrid(grid, &other.lead);
        let lead = &self.lead + &other.lead;
        let n = a.coeffs.len().min(b.coeffs.len());
        let mut coeffs = vec![LaurentX::zero(); n];
        for (i, ai) in a.coeffs.iter().enumerate().take(n) {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate().take(n - i) {
                if bj.is_zero() {
                    continue;
                }
                let prod = ai * bj;
                coeffs[i + j].add_assign_ref(&prod);
            }
        }
        NomeSeries { level: self.level + other.level, grid, lead, coeffs }
    }

    /// Multiplies every coefficient by the Laurent polynomial `c`.
    pub fn mul_laurent(&self, c: &LaurentX) -> NomeSeries {
        self.map_coeffs(|a| a * c)
    }

    /// Exact quotient `self / other`.
    ///
    /// The leading coefficient of `other` need not be a monomial; the
    /// quotient exists when every step of the long division is exact in the
    /// Laurent polynomial ring.
    pub fn div_exact(&self, other: &NomeSeries) -> Result<NomeSeries> {
        let num = self.normalize();
        let den = other.normalize();
        if den.coeffs[0].is_zero() {
            return Err(Error::ZeroSeries);
        }
        let grid = lcm(num.grid, den.grid);
        let a = num.regrid(grid, &num.lead);
        let b = den.regrid(grid, &den.lead);
        let n = a.coeffs.len().min(b.coeffs.len());
        let b0 = &b.coeffs[0];
        let monomial = b0.as_monomial().map(|(j, c)| (j, c.recip()));
        let mut q: Vec<LaurentX> = Vec::with_capacity(n);
        for i in 0..n {
            let mut r = a.coeffs[i].clone();
            for (t, bt) in b.coeffs.iter().enumerate().take(i + 1).skip(1) {
                if bt.is_zero() || q[i - t].is_zero() {
                    continue;
                }
                let prod = bt * &q[i - t];
                r.add_scaled_shifted(&prod, &-Rational::one(), 0);
            }
            let qi = match &monomial {
                Some((j, inv)) => r.shift(-j).scale(inv),
                None => r.div_exact(b0).ok_or(Error::NotDivisible)?,
            };
            q.push(qi);
        }
        Ok(NomeSeries {
            level: num.level - den.level,
            grid,
            lead: &num.lead - &den.lead,
            coeffs: q,
        })
    }

    /// Multiplicative inverse; the leading coefficient must be a monomial.
    pub fn invert(&self) -> Result<NomeSeries> {
        let a = self.normalize();
        if a.coeffs[0].is_zero() {
            return Err(Error::ZeroSeries);
        }
        if a.coeffs[0].as_monomial().is_none() {
            return Err(Error::NonMonomialLead(a.coeffs[0].to_string()));
        }
        let mut one = vec![LaurentX::zero(); a.coeffs.len()];
        one[0] = LaurentX::one();
        let unit = NomeSeries { level: 0, grid: a.grid, lead: Rational::zero(), coeffs: one };
        unit.div_exact(&a)
    }

    /// `self^c` for rational `c`.
    ///
    /// After factoring out `p^lead` the leading coefficient must be a single
    /// term `a x^j` with `a^c` rational (so `a = 1` unless `c` is an integer);
    /// `j c` and `level c` must be integers.
    pub fn pow_rational(&self, c: &Rational) -> Result<NomeSeries> {
        let a = self.normalize();
        let (j, a0) = match a.coeffs[0].as_monomial() {
            Some((j, a0)) => (j, a0.clone()),
            None if a.coeffs[0].is_zero() => return Err(Error::ZeroSeries),
            None => return Err(Error::LeadNotReducible(a.coeffs[0].to_string())),
        };
        let scalar = rational_pow(&a0, c).ok_or_else(|| Error::LeadNotReducible(a.coeffs[0].to_string()))?;
        let xj = as_i64(&(int(j) * c)).ok_or_else(|| Error::NonIntegralXExponent(int(j) * c))?;
        let level = as_i64(&(int(a.level) * c))
            .ok_or_else(|| Error::NonIntegralLevel { level: a.level, exponent: c.clone() })?;
        // h_i = c_i / c_0, so that a = c_0 p^lead (1 + sum h_i p^{i/D})
        let inv0 = a0.recip();
        let h: Vec<LaurentX> = a.coeffs.iter().map(|ci| ci.shift(-j).scale(&inv0)).collect();
        let n = h.len();
        let mut g: Vec<LaurentX> = Vec::with_capacity(n);
        g.push(LaurentX::one());
        let c1 = c + Rational::one();
        for m in 1..n {
            let mut acc = LaurentX::zero();
            for i in 1..=m {
                if h[i].is_zero() || g[m - i].is_zero() {
                    continue;
                }
                let w = &c1 * int(i as i64) - int(m as i64);
                if w.is_zero() {
                    continue;
                }
                let prod = &h[i] * &g[m - i];
                acc.add_scaled_shifted(&prod, &w, 0);
            }
            g.push(acc.scale(&Rational::new(1.into(), (m as i64).into())));
        }
        let coeffs = g.into_iter().map(|gi| gi.shift(xj).scale(&scalar)).collect();
        Ok(NomeSeries { level, grid: a.grid, lead: &a.lead * c, coeffs })
    }

    pub fn pow_int(&self, e: u32) -> NomeSeries {
        let mut out = self.clone();
        for _ in 1..e {
            out = out.mul(self);
        }
        if e == 0 {
            let mut one = vec![LaurentX::zero(); self.coeffs.len()];
            one[0] = LaurentX::one();
            return NomeSeries { level: 0, grid: self.grid, lead: Rational::zero(), coeffs: one };
        }
        out
    }

    /// Applies `p d/dp`: the coefficient at `p^e` is multiplied by `e`.
    pub fn p_dp(&self) -> NomeSeries {
        NomeSeries {
            level: self.level,
            grid: self.grid,
            lead: self.lead.clone(),
            coeffs: self.coeffs.iter().enumerate().map(|(n, c)| c.scale(&self.exponent(n))).collect(),
        }
    }

    /// Applies `x^j p^e -> f(j, e) x^j p^e`.
    pub fn map_diagonal<F: Fn(i64, &Rational) -> Rational>(&self, f: F) -> NomeSeries {
        NomeSeries {
            level: self.level,
            grid: self.grid,
            lead: self.lead.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    let e = self.exponent(n);
                    c.map_diagonal(|j| f(j, &e))
                })
                .collect(),
        }
    }

    /// First point of disagreement within the common known range, as
    /// `(p-exponent, x-exponent, lhs coefficient, rhs coefficient)`.
    pub fn first_difference(&self, other: &NomeSeries) -> Option<(Rational, i64, Rational, Rational)> {
        if self.level != other.level {
            return Some((self.lead.clone().min(other.lead.clone()), 0, Rational::zero(), Rational::zero()));
        }
        let grid = self.common_grid(other);
        let lead = self.lead.clone().min(other.lead.clone());
        let bound = self.bound().min(other.bound());
        let a = self.regrid(grid, &lead);
        let b = other.regrid(grid, &lead);
        let n = steps_below(&lead, grid, &bound).max(0) as usize;
        let empty = LaurentX::zero();
        for i in 0..n {
            let ca = a.coeffs.get(i).unwrap_or(&empty);
            let cb = b.coeffs.get(i).unwrap_or(&empty);
            if ca != cb {
                let d = ca - cb;
                let j = d.max_exponent().unwrap_or(0);
                return Some((a.exponent(i), j, ca.coeff(j), cb.coeff(j)));
            }
        }
        None
    }

    /// Exact equality on the common known range (levels must match).
    pub fn agrees_with(&self, other: &NomeSeries) -> bool {
        self.first_difference(other).is_none()
    }

    /// Numeric value at `(z, u, tau)`: `e^{2 pi i K u} p^lead sum c_n(x) p^{n/D}`.
    pub fn eval(&self, z: Complex64, u: Complex64, tau: Complex64) -> Result<Complex64> {
        if tau.im <= 0.0 {
            return Err(Error::TauNotInUpperHalfPlane(format!("{tau}")));
        }
        let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
        let step = (two_pi_i * tau / self.grid as f64).exp();
        let mut acc = Complex64::zero();
        let mut pw = Complex64::new(1.0, 0.0);
        for c in &self.coeffs {
            if !c.is_zero() {
                acc += c.eval_at_z(z) * pw;
            }
            pw *= step;
        }
        let pre = (two_pi_i * (u * self.level as f64 + tau * to_f64(&self.lead))).exp();
        Ok(acc * pre)
    }

    /// Size of the first omitted term, estimated as `|p|^{bound} * max|c_n|`
    /// over the known coefficients (after the lead is factored out).
    pub fn tail_estimate(&self, tau: Complex64) -> f64 {
        let q = (-2.0 * std::f64::consts::PI * tau.im).exp();
        let growth = self.coeffs.iter().map(|c| c.max_abs() * c.len().max(1) as f64).fold(1.0, f64::max);
        q.powf(to_f64(&(self.bound() - &self.lead))) * growth
    }

    /// The known range measured in whole p-units beyond the lead, rounded down.
    pub fn order(&self) -> u32 {
        let r = Rational::new(((self.coeffs.len() - 1) as i64).into(), (self.grid as i64).into());
        r.floor().to_integer().to_u32().unwrap_or(0)
    }

    /// True when every coefficient is invariant under `x -> 1/x`.
    pub fn is_reflection_symmetric(&self) -> bool {
        self.coeffs.iter().all(LaurentX::is_reflection_symmetric)
    }
}

/// Number of grid points `lead + n/grid` (n >= 0) strictly below `bound`.
fn steps_below(lead: &Rational, grid: u64, bound: &Rational) -> i64 {
    let x = (bound - lead) * int(grid as i64);
    if !x.is_positive() {
        return 0;
    }
    x.ceil().to_integer().to_i64().expect("series length fits in i64")
}

impl fmt::Display for NomeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level != 0 {
            write!(f, "[level {}] ", self.level)?;
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*p^({e})")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(p^({}))", self.bound())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rat;

    fn lp(terms: &[(i64, i64)]) -> LaurentX {
        LaurentX::from_terms(terms.iter().map(|&(j, c)| (j, int(c))))
    }

    /// Integer-grid series at level 0 from `[(p-power, x-power, coeff)]`.
    fn ser(order: u32, terms: &[(i64, i64, i64)]) -> NomeSeries {
        NomeSeries::from_sparse(
            0,
            1,
            Rational::zero(),
            int(order as i64 + 1),
            terms.iter().map(|&(e, j, c)| (int(e), j, int(c))),
        )
        .unwrap()
    }

    #[test]
    fn cancellation_on_add() {
        let a = ser(3, &[(0, 0, 1), (1, 0, -1)]);
        let b = ser(3, &[(1, 0, 1)]);
        assert!(a.add(&b).unwrap().agrees_with(&NomeSeries::one(3)));
    }

    #[test]
    fn shared_fractional_lead() {
        let a = NomeSeries::monomial(0, rat(1, 8), lp(&[(0, 1)]), 2);
        let b = NomeSeries::monomial(0, rat(1, 8), lp(&[(2, 1)]), 2);
        let s = a.add(&b).unwrap();
        assert_eq!(s.lead(), &rat(1, 8));
        assert_eq!(s.coeffs()[0], lp(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn level_mismatch_is_rejected() {
        let a = NomeSeries::one(2).with_level(1);
        let b = NomeSeries::one(2).with_level(2);
        assert_eq!(a.add(&b), Err(Error::LevelMismatch(1, 2)));
    }

    #[test]
    fn products() {
        let a = ser(4, &[(0, 0, 1), (1, 0, -1)]);
        let b = ser(4, &[(0, 0, 1), (1, 0, 1)]);
        assert!(a.mul(&b).agrees_with(&ser(4, &[(0, 0, 1), (2, 0, -1)])));
        let c = NomeSeries::monomial(0, int(0), lp(&[(1, 1), (-1, -1)]), 0);
        let d = NomeSeries::monomial(0, int(0), lp(&[(1, 1), (-1, 1)]), 0);
        assert_eq!(c.mul(&d).coeffs()[0], lp(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn geometric_inverse() {
        let a = ser(5, &[(0, 0, 1), (1, 0, -1)]);
        let inv = a.invert().unwrap();
        let all: Vec<(i64, i64, i64)> = (0..=5).map(|n| (n, 0, 1)).collect();
        assert!(inv.agrees_with(&ser(5, &all)));
    }

    #[test]
    fn inverse_with_monomial_lead() {
        // x (1 - p x^{-2}) -> x^{-1}(1 + p x^{-2} + p^2 x^{-4} + ...)
        let a = ser(3, &[(0, 1, 1), (1, -1, -1)]);
        let expected = ser(3, &[(0, -1, 1), (1, -3, 1), (2, -5, 1), (3, -7, 1)]);
        assert!(a.invert().unwrap().agrees_with(&expected));
    }

    #[test]
    fn inverse_of_symmetric_correction() {
        let a = ser(2, &[(0, 0, 1), (1, 2, 1), (1, -2, 1)]);
        let inv = a.invert().unwrap();
        let expected = ser(2, &[(0, 0, 1), (1, 2, -1), (1, -2, -1), (2, 4, 1), (2, 0, 2), (2, -4, 1)]);
        assert!(inv.agrees_with(&expected));
        assert!(a.mul(&inv).agrees_with(&NomeSeries::one(2)));
    }

    #[test]
    fn non_monomial_lead_cannot_be_inverted() {
        let a = ser(2, &[(0, 1, 1), (0, -1, -1)]);
        assert!(matches!(a.invert(), Err(Error::NonMonomialLead(_))));
    }

    #[test]
    fn square_root_of_one_minus_p() {
        let a = ser(6, &[(0, 0, 1), (1, 0, -1)]);
        let r = a.pow_rational(&rat(1, 2)).unwrap();
        assert_eq!(r.coeffs()[1], LaurentX::monomial(0, rat(-1, 2)));
        assert_eq!(r.coeffs()[2], LaurentX::monomial(0, rat(-1, 8)));
        assert!(r.mul(&r).agrees_with(&a));
        let inv = a.pow_rational(&int(-1)).unwrap();
        assert!(inv.agrees_with(&a.invert().unwrap()));
        assert!(a.pow_rational(&int(0)).unwrap().agrees_with(&NomeSeries::one(6)));
    }

    #[test]
    fn pow_rejects_non_unit_lead_for_fractional_exponent() {
        let a = ser(2, &[(0, 0, 2), (1, 0, 1)]);
        assert!(matches!(a.pow_rational(&rat(1, 2)), Err(Error::LeadNotReducible(_))));
        assert!(a.pow_rational(&int(2)).is_ok());
    }

    #[test]
    fn exact_division_by_non_monomial_lead() {
        let den = ser(4, &[(0, 1, 1), (0, -1, -1), (1, 3, -1), (1, -3, 1)]);
        let q = ser(4, &[(0, 1, 1), (0, -1, 1), (2, 0, 3)]);
        let num = den.mul(&q);
        assert!(num.div_exact(&den).unwrap().agrees_with(&q));
        let bad = ser(4, &[(0, 0, 1)]);
        assert_eq!(bad.div_exact(&den), Err(Error::NotDivisible));
    }

    #[test]
    fn eval_examples() {
        let tau = Complex64::new(0.0, 1.0);
        let z = Complex64::new(0.3, 0.1);
        let one = NomeSeries::one(0).eval(z, z, tau).unwrap();
        assert!((one - 1.0).norm() < 1e-15);
        let p8 = NomeSeries::monomial(0, rat(1, 8), LaurentX::one(), 0);
        let v = p8.eval(z, z, tau).unwrap();
        assert!((v - (-std::f64::consts::FRAC_PI_4).exp()).norm() < 1e-15);
        assert!(p8.eval(z, z, Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn bounds_follow_the_shorter_operand() {
        let a = ser(2, &[(0, 0, 1), (1, 0, 1)]);
        let b = ser(5, &[(0, 0, 1), (3, 0, 1)]);
        assert_eq!(a.mul(&b).bound(), int(3));
        assert_eq!(a.add(&b).unwrap().bound(), int(3));
    }

    #[test]
    fn normalize_finds_minimal_grid() {
        let s = NomeSeries::from_sparse(0, 6, rat(1, 6), rat(25, 6), [(rat(1, 2), 0, int(1)), (rat(3, 2), 0, int(1))])
            .unwrap();
        let n = s.normalize();
        assert_eq!(n.lead(), &rat(1, 2));
        assert!(n.grid() <= 3);
        assert!(n.agrees_with(&s));
    }
}
