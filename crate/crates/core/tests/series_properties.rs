use affine_jack::affine::{form, orbit, AffineWeight};
use affine_jack::qseries::{rat, LaurentX, NomeSeries, Rational};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

const ORDER: usize = 5;

fn laurent() -> impl Strategy<Value = LaurentX> {
    prop::collection::vec((-3i64..=3, -6i64..=6, 1i64..=4), 0..4)
        .prop_map(|ts| LaurentX::from_terms(ts.into_iter().map(|(j, n, d)| (j, rat(n, d)))))
}

/// Level-0 series on the integer grid, known through `p^ORDER`.
fn series() -> impl Strategy<Value = NomeSeries> {
    (prop::collection::vec(laurent(), ORDER + 1), -2i64..=2)
        .prop_map(|(cs, lead)| NomeSeries::new(0, 1, rat(lead, 1), cs))
}

/// Series with leading coefficient `c x^j`, `c != 0`, so that it is invertible.
fn unit_series() -> impl Strategy<Value = NomeSeries> {
    (series(), -2i64..=2, prop::sample::select(vec![1i64, -1, 2, -3, 5]))
        .prop_map(|(s, j, c)| {
            let mut cs = s.coeffs().to_vec();
            cs[0] = LaurentX::monomial(j, rat(c, 1));
            NomeSeries::new(0, 1, s.lead().clone(), cs)
        })
}

/// Leading coefficient exactly `1`, so rational powers stay rational.
fn one_lead_series() -> impl Strategy<Value = NomeSeries> {
    series().prop_map(|s| {
        let mut cs = s.coeffs().to_vec();
        cs[0] = LaurentX::one();
        NomeSeries::new(0, 1, s.lead().clone(), cs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes_and_associates(a in series(), b in series(), c in series()) {
        prop_assert!(a.add(&b).unwrap().agrees_with(&b.add(&a).unwrap()));
        let l = a.add(&b).unwrap().add(&c).unwrap();
        let r = a.add(&b.add(&c).unwrap()).unwrap();
        prop_assert!(l.agrees_with(&r));
        prop_assert!(a.sub(&a).unwrap().normalize().is_zero());
    }

    #[test]
    fn multiplication_is_a_commutative_ring(a in series(), b in series(), c in series()) {
        prop_assert!(a.mul(&b).agrees_with(&b.mul(&a)));
        prop_assert!(a.mul(&b).mul(&c).agrees_with(&a.mul(&b.mul(&c))));
        let l = a.mul(&b.add(&c).unwrap());
        let r = a.mul(&b).add(&a.mul(&c)).unwrap();
        prop_assert!(l.agrees_with(&r));
        prop_assert!(a.mul(&NomeSeries::one(ORDER as u32)).agrees_with(&a));
    }

    #[test]
    fn inverse_is_two_sided(a in unit_series()) {
        let inv = a.invert().unwrap();
        prop_assert!(a.mul(&inv).agrees_with(&NomeSeries::one(ORDER as u32)));
        prop_assert!(inv.invert().unwrap().agrees_with(&a));
    }

    #[test]
    fn exact_division_undoes_multiplication(a in series(), b in unit_series()) {
        prop_assert!(a.mul(&b).div_exact(&b).unwrap().agrees_with(&a));
    }

    #[test]
    fn rational_powers_add(a in one_lead_series(), p in -4i64..=4, q in -4i64..=4, d in 1i64..=3) {
        let (r, s) = (rat(p, d), rat(q, d));
        let lhs = a.pow_rational(&r).unwrap().mul(&a.pow_rational(&s).unwrap());
        let rhs = a.pow_rational(&(r + s)).unwrap();
        prop_assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn integer_power_matches_rational_power(a in unit_series(), e in 0u32..4) {
        let r = a.pow_rational(&Rational::from_integer(e.into())).unwrap();
        prop_assert!(a.pow_int(e).agrees_with(&r));
    }

    #[test]
    fn evaluation_is_multiplicative(a in series(), b in series(), zr in -0.5f64..0.5, zi in -0.05f64..0.05, tr in -0.5f64..0.5) {
        let (z, u, tau) = (Complex64::new(zr, zi), Complex64::new(0.0, 0.0), Complex64::new(tr, 2.5));
        // The product is known through p^ORDER beyond its lead; the omitted
        // cross terms are O(|p|^{ORDER+1}) once the leads are divided out,
        // far below rounding at Im tau = 2.5.
        let ab = a.mul(&b);
        let unlead = (Complex64::new(0.0, -2.0 * std::f64::consts::PI) * tau * (a.lead() + b.lead()).to_f64().unwrap()).exp();
        let full = |s: &NomeSeries| s.eval(z, u, tau).unwrap();
        let lhs = full(&ab) * unlead;
        let rhs = full(&a) * full(&b) * unlead;
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()), "{lhs} vs {rhs}");
    }

    #[test]
    fn orbit_is_reflection_symmetric_and_isotropic(level in 1i64..6, l0 in 0i64..6, depth in 1i64..8) {
        let l = l0 % (level + 1);
        let ws = orbit(l, level, &rat(depth, 1)).unwrap();
        let lambda = AffineWeight::new(l, Rational::zero(), level);
        for w in &ws {
            let mirror = AffineWeight::new(-w.j, w.n.clone(), level);
            prop_assert!(ws.contains(&mirror));
            prop_assert!(w.n >= Rational::zero());
            // Weyl group elements preserve the invariant form.
            prop_assert_eq!(form(w, w), form(&lambda, &lambda));
            prop_assert!((w.j - l).rem_euclid(2 * level) == 0 || (w.j + l).rem_euclid(2 * level) == 0);
        }
        prop_assert!(ws.contains(&lambda));
    }
}
