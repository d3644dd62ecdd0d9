use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::{to_f64, Rational};

/// Laurent polynomial in `x = e^{2 pi i z}` with rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentX {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentX {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    pub fn monomial(j: i64, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(j, c);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (j, c) in terms {
            p.add_term(j, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^j` (zero when absent).
    pub fn coeff(&self, j: i64) -> Rational {
        self.terms.get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn get(&self, j: i64) -> Option<&Rational> {
        self.terms.get(&j)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(j, c)| (*j, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, j: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(j) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentX) {
        for (j, c) in other.iter() {
            self.add_term(j, c.clone());
        }
    }

    /// Adds `scale * x^shift * other` in place.
    pub fn add_scaled_shifted(&mut self, other: &LaurentX, scale: &Rational, shift: i64) {
        if scale.is_zero() {
            return;
        }
        for (j, c) in other.iter() {
            self.add_term(j + shift, c * scale);
        }
    }

    pub fn scale(&self, s: &Rational) -> LaurentX {
        if s.is_zero() {
            return LaurentX::zero();
        }
        LaurentX { terms: self.terms.iter().map(|(j, c)| (*j, c * s)).collect() }
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: i64) -> LaurentX {
        LaurentX { terms: self.terms.iter().map(|(j, c)| (j + shift, c.clone())).collect() }
    }

    /// Substitutes `x -> x^factor`.
    pub fn dilate(&self, factor: i64) -> LaurentX {
        assert!(factor != 0, "dilation factor must be nonzero");
        LaurentX::from_terms(self.terms.iter().map(|(j, c)| (j * factor, c.clone())))
    }

    /// Applies `x^j -> f(j) x^j` to every term.
    pub fn map_diagonal<F: Fn(i64) -> Rational>(&self, f: F) -> LaurentX {
        LaurentX::from_terms(self.terms.iter().map(|(j, c)| (*j, c * f(*j))))
    }

    /// `Some((j, c))` when the polynomial is the single term `c x^j`.
    pub fn as_monomial(&self) -> Option<(i64, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(j, c)| (*j, c))
        } else {
            None
        }
    }

    /// `c(x) = c(1/x)`.
    pub fn is_reflection_symmetric(&self) -> bool {
        self.terms.iter().all(|(j, c)| self.terms.get(&-j) == Some(c))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentX) -> Option<LaurentX> {
        let (dmax, dlead) = match divisor.terms.iter().next_back() {
            Some((j, c)) => (*j, c.clone()),
            None => return None,
        };
        let dmin = divisor.min_exponent().unwrap_or(dmax);
        let mut rem = self.clone();
        let mut quot = LaurentX::zero();
        while let Some(rmax) = rem.max_exponent() {
            let rmin = rem.min_exponent().unwrap_or(rmax);
            if rmax - rmin < dmax - dmin {
                return None;
            }
            let q = rem.coeff(rmax) / &dlead;
            let shift = rmax - dmax;
            rem.add_scaled_shifted(divisor, &-q.clone(), shift);
            quot.add_term(shift, q);
        }
        Some(quot)
    }

    /// `self / (1 - x^{-2})` when the quotient is again a Laurent polynomial.
    ///
    /// The quotient satisfies `q_j = c_j + q_{j+2}`; it terminates iff the
    /// running sums of each parity class vanish below the lowest exponent.
    pub fn div_one_minus_x_inv2(&self) -> Option<LaurentX> {
        let (lo, hi) = match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Some(LaurentX::zero()),
        };
        let mut q = LaurentX::zero();
        let mut run = [Rational::zero(), Rational::zero()];
        let mut j = hi;
        while j >= lo {
            let slot = j.rem_euclid(2) as usize;
            run[slot] += self.coeff(j);
            q.add_term(j, run[slot].clone());
            j -= 1;
        }
        if run.iter().all(|r| r.is_zero()) {
            Some(q)
        } else {
            None
        }
    }

    /// `sum_j c_j x^j` at complex `x = e^{2 pi i z}`.
    pub fn eval_at_z(&self, z: Complex64) -> Complex64 {
        let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
        self.terms
            .iter()
            .map(|(j, c)| (two_pi_i * z * (*j as f64)).exp() * to_f64(c))
            .sum()
    }

    /// Largest absolute coefficient, as f64.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| to_f64(&c.abs())).fold(0.0, f64::max)
    }
}

impl fmt::Display for LaurentX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*x^{j}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentX> for &'a LaurentX {
    type Output = LaurentX;
    fn add(self, rhs: &'a LaurentX) -> LaurentX {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a LaurentX> for &'a LaurentX {
    type Output = LaurentX;
    fn sub(self, rhs: &'a LaurentX) -> LaurentX {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &-Rational::one(), 0);
        out
    }
}

impl Neg for &LaurentX {
    type Output = LaurentX;
    fn neg(self) -> LaurentX {
        self.scale(&-Rational::one())
    }
}

impl<'a> Mul<&'a LaurentX> for &'a LaurentX {
    type Output = LaurentX;
    fn mul(self, rhs: &'a LaurentX) -> LaurentX {
        let mut out = LaurentX::zero();
        for (j, c) in self.iter() {
            out.add_scaled_shifted(rhs, c, j);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{int, rat};

    fn lp(terms: &[(i64, i64)]) -> LaurentX {
        LaurentX::from_terms(terms.iter().map(|&(j, c)| (j, int(c))))
    }

    #[test]
    fn product_of_binomials() {
        let a = lp(&[(1, 1), (-1, -1)]);
        let b = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn zero_terms_are_not_stored() {
        let mut a = lp(&[(3, 2)]);
        a.add_term(3, int(-2));
        assert!(a.is_zero());
        assert_eq!(a.len(), 0);
    }

    #[test]
    fn exact_division() {
        let num = lp(&[(2, 1), (-2, -1)]);
        let den = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(num.div_exact(&den), Some(lp(&[(1, 1), (-1, 1)])));
        assert_eq!(lp(&[(2, 1)]).div_exact(&den), None);
    }

    #[test]
    fn geometric_division_terminates_only_when_divisible() {
        // (1 - x^{-2})^2 / (1 - x^{-2}) = 1 - x^{-2}
        let sq = lp(&[(0, 1), (-2, -2), (-4, 1)]);
        assert_eq!(sq.div_one_minus_x_inv2(), Some(lp(&[(0, 1), (-2, -1)])));
        assert_eq!(lp(&[(0, 1)]).div_one_minus_x_inv2(), None);
        // antisymmetric polynomials are always divisible
        let anti = lp(&[(3, 1), (-3, -1)]);
        let q = anti.div_one_minus_x_inv2().unwrap();
        assert_eq!(&q * &lp(&[(0, 1), (-2, -1)]), anti);
    }

    #[test]
    fn symmetric_detection_and_dilation() {
        let a = LaurentX::from_terms([(2, rat(1, 2)), (-2, rat(1, 2)), (0, int(3))]);
        assert!(a.is_reflection_symmetric());
        assert!(!lp(&[(1, 1)]).is_reflection_symmetric());
        assert_eq!(lp(&[(1, 1), (-1, 1)]).dilate(2), lp(&[(2, 1), (-2, 1)]));
    }
}
