use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::{int, to_f64, NomeSeries, Rational};
use crate::error::{Error, Result};

/// Scalar `coeff * i^{i_power} * 2^{two_exp}` with `i_power` in `{0, 1}` and
/// `two_exp` in `[0, 1)`.
///
/// Every constructor folds integer parts of the exponents back into `coeff`,
/// so equal scalars have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prefactor {
    coeff: Rational,
    i_power: u8,
    two_exp: Rational,
}

impl Prefactor {
    pub fn new(coeff: Rational, i_power: i64, two_exp: Rational) -> Self {
        let fl = two_exp.floor();
        let rest = &two_exp - &fl;
        let mut coeff = coeff * two_to_int(&fl);
        let ip = i_power.rem_euclid(4);
        if ip >= 2 {
            coeff = -coeff;
        }
        Prefactor { coeff, i_power: (ip % 2) as u8, two_exp: rest }
    }

    pub fn rational(c: Rational) -> Self {
        Self::new(c, 0, Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn i() -> Self {
        Self::new(Rational::one(), 1, Rational::zero())
    }

    /// `2^e`.
    pub fn two_pow(e: Rational) -> Self {
        Self::new(Rational::one(), 0, e)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn i_power(&self) -> u8 {
        self.i_power
    }

    pub fn two_exp(&self) -> &Rational {
        &self.two_exp
    }

    pub fn mul(&self, other: &Prefactor) -> Prefactor {
        Prefactor::new(
            &self.coeff * &other.coeff,
            (self.i_power + other.i_power) as i64,
            &self.two_exp + &other.two_exp,
        )
    }

    pub fn recip(&self) -> Result<Prefactor> {
        if self.coeff.is_zero() {
            return Err(Error::ZeroSeries);
        }
        Ok(Prefactor::new(self.coeff.recip(), -(self.i_power as i64), -self.two_exp.clone()))
    }

    pub fn to_complex(&self) -> Complex64 {
        let mag = to_f64(&self.coeff) * 2f64.powf(to_f64(&self.two_exp));
        if self.i_power == 1 {
            Complex64::new(0.0, mag)
        } else {
            Complex64::new(mag, 0.0)
        }
    }

    /// The component key `(i_power, two_exp)` and the rational weight.
    fn split(&self) -> ((u8, Rational), Rational) {
        ((self.i_power, self.two_exp.clone()), self.coeff.clone())
    }
}

fn two_to_int(e: &Rational) -> Rational {
    let n: i64 = super::as_i64(e).expect("integer exponent");
    let p = num_traits::pow::pow(int(2), n.unsigned_abs() as usize);
    if n < 0 {
        p.recip()
    } else {
        p
    }
}

impl fmt::Display for Prefactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.i_power == 1 {
            write!(f, "*i")?;
        }
        if !self.two_exp.is_zero() {
            write!(f, "*2^({})", self.two_exp)?;
        }
        Ok(())
    }
}

/// A finite sum `sum_b b * S_b` where each `b` is a basis scalar
/// `i^{a} 2^{e}` (`a` in `{0,1}`, `e` in `[0,1)`) and each `S_b` is a rational
/// [`NomeSeries`].
///
/// Equality is componentwise, which is equality over `Q(i, 2^{1/N})`: the
/// basis scalars are linearly independent over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledSeries {
    parts: BTreeMap<(u8, Rational), NomeSeries>,
}

impl ScaledSeries {
    pub fn new(prefactor: Prefactor, series: NomeSeries) -> Self {
        let (key, c) = prefactor.split();
        let mut parts = BTreeMap::new();
        parts.insert(key, series.scale(&c));
        ScaledSeries { parts }
    }

    pub fn rational(series: NomeSeries) -> Self {
        Self::new(Prefactor::one(), series)
    }

    /// The components, keyed by `(i_power, two_exp)`.
    pub fn parts(&self) -> impl Iterator<Item = (Prefactor, &NomeSeries)> + '_ {
        self.parts
            .iter()
            .map(|((ip, e), s)| (Prefactor::new(Rational::one(), *ip as i64, e.clone()), s))
    }

    /// The series itself when the only component is the rational one.
    pub fn as_rational(&self) -> Option<&NomeSeries> {
        if self.parts.len() == 1 {
            self.parts.get(&(0, Rational::zero()))
        } else {
            None
        }
    }

    pub fn scale(&self, pre: &Prefactor) -> ScaledSeries {
        let mut out = ScaledSeries { parts: BTreeMap::new() };
        for ((ip, e), s) in &self.parts {
            let b = Prefactor::new(Rational::one(), *ip as i64, e.clone()).mul(pre);
            let (key, c) = b.split();
            out.insert(key, s.scale(&c)).expect("same level within one object");
        }
        out
    }

    fn insert(&mut self, key: (u8, Rational), s: NomeSeries) -> Result<()> {
        match self.parts.remove(&key) {
            Some(old) => {
                self.parts.insert(key, old.add(&s)?);
            }
            None => {
                self.parts.insert(key, s);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &ScaledSeries) -> Result<ScaledSeries> {
        let mut out = self.clone();
        for (k, s) in &other.parts {
            out.insert(k.clone(), s.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ScaledSeries) -> Result<ScaledSeries> {
        self.add(&other.scale(&Prefactor::rational(-Rational::one())))
    }

    pub fn mul(&self, other: &ScaledSeries) -> ScaledSeries {
        let mut out = ScaledSeries { parts: BTreeMap::new() };
        for ((ia, ea), sa) in &self.parts {
            for ((ib, eb), sb) in &other.parts {
                let b = Prefactor::new(Rational::one(), (*ia + *ib) as i64, ea + eb);
                let (key, c) = b.split();
                out.insert(key, sa.mul(sb).scale(&c)).expect("products share a level");
            }
        }
        out
    }

    /// Multiplies every component by the rational series `s`.
    pub fn mul_series(&self, s: &NomeSeries) -> ScaledSeries {
        ScaledSeries { parts: self.parts.iter().map(|(k, a)| (k.clone(), a.mul(s))).collect() }
    }

    /// Divides every component by the rational series `s`.
    pub fn div_series(&self, s: &NomeSeries) -> Result<ScaledSeries> {
        let mut parts = BTreeMap::new();
        for (k, a) in &self.parts {
            parts.insert(k.clone(), a.div_exact(s)?);
        }
        Ok(ScaledSeries { parts })
    }

    pub fn level(&self) -> Option<i64> {
        self.parts.values().next().map(NomeSeries::level)
    }

    /// Componentwise comparison. Components missing on one side count as zero.
    ///
    /// Returns the offending basis scalar with the series-level difference.
    pub fn first_difference(
        &self,
        other: &ScaledSeries,
    ) -> Option<(Prefactor, (Rational, i64, Rational, Rational))> {
        let mut keys: Vec<&(u8, Rational)> = self.parts.keys().chain(other.parts.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let a = self.parts.get(k);
            let b = other.parts.get(k);
            let diff = match (a, b) {
                (Some(a), Some(b)) => a.first_difference(b),
                (Some(a), None) | (None, Some(a)) => {
                    let z = a.scale(&Rational::zero());
                    a.first_difference(&z)
                }
                (None, None) => None,
            };
            if let Some(d) = diff {
                let (ip, e) = k.clone();
                return Some((Prefactor::new(Rational::one(), ip as i64, e), d));
            }
        }
        None
    }

    pub fn agrees_with(&self, other: &ScaledSeries) -> bool {
        self.first_difference(other).is_none()
    }

    pub fn eval(&self, z: Complex64, u: Complex64, tau: Complex64) -> Result<Complex64> {
        let mut acc = Complex64::zero();
        for (b, s) in self.parts() {
            acc += b.to_complex() * s.eval(z, u, tau)?;
        }
        Ok(acc)
    }

    /// Drops components that are identically zero on their known range.
    pub fn prune(&self) -> ScaledSeries {
        ScaledSeries {
            parts: self
                .parts
                .iter()
                .filter(|(k, s)| !s.is_zero() || (k.0 == 0 && k.1.is_zero()))
                .map(|(k, s)| (k.clone(), s.clone()))
                .collect(),
        }
    }

    /// Basis scalars present, for diagnostics.
    pub fn basis(&self) -> Vec<Prefactor> {
        self.parts.keys().map(|(ip, e)| Prefactor::new(Rational::one(), *ip as i64, e.clone())).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for ScaledSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, s) in self.parts() {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{b} * [{s}]")?;
        }
        Ok(())
    }
}

impl Prefactor {
    /// True if the scalar is a positive rational times a power of two.
    pub fn is_positive_real(&self) -> bool {
        self.i_power == 0 && self.coeff.is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{rat, LaurentX};

    #[test]
    fn prefactor_canonical_form() {
        let a = Prefactor::new(int(3), 3, rat(5, 4));
        assert_eq!(a.coeff(), &int(-6));
        assert_eq!(a.i_power(), 1);
        assert_eq!(a.two_exp(), &rat(1, 4));
        let b = Prefactor::two_pow(rat(-1, 2)).mul(&Prefactor::two_pow(rat(1, 2)));
        assert_eq!(b, Prefactor::one());
        assert_eq!(Prefactor::i().mul(&Prefactor::i()), Prefactor::rational(int(-1)));
        let c = Prefactor::two_pow(rat(-1, 6));
        assert!((c.to_complex().re - 2f64.powf(-1.0 / 6.0)).abs() < 1e-15);
    }

    #[test]
    fn components_cancel_exactly() {
        let s = NomeSeries::monomial(0, int(0), LaurentX::one(), 2);
        let a = ScaledSeries::new(Prefactor::two_pow(rat(1, 3)), s.clone());
        let b = ScaledSeries::new(Prefactor::two_pow(rat(-2, 3)), s.scale(&int(2)));
        assert!(a.agrees_with(&b));
        let c = ScaledSeries::new(Prefactor::two_pow(rat(1, 6)), s.clone());
        assert!(a.first_difference(&c).is_some());
        let prod = a.mul(&ScaledSeries::new(Prefactor::two_pow(rat(2, 3)), s.clone()));
        assert!(prod.agrees_with(&ScaledSeries::rational(s.scale(&int(2)))));
    }
}
