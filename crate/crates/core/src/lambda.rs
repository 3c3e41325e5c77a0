//! Symmetric powers, the plethystic exponential and the power structure.
//!
//! Line elements are `l^k` with `l = -L^(1/2)`, so `sigma^n(l^k) = l^(kn)`.
//! A coefficient `a L^(k/2)` is `(-1)^k a l^k`, and
//! `Exp(sum c_{n,k} l^k t^n) = prod (1 - l^k t^n)^(-c_{n,k})`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::motive::{half_power, MotiveClass};
use crate::series::MotiveSeries;

fn check_constant(a: &MotiveSeries, want_one: bool) -> Result<()> {
    let c0 = a.coeff(0);
    let ok = if want_one { c0.is_one() } else { c0.is_zero() };
    if ok {
        Ok(())
    } else {
        Err(Error::ConstantTerm {
            expected: if want_one { "1" } else { "0" },
            found: c0.to_string(),
        })
    }
}

/// `acc *= (1 - l^k t^n)^(-c)` in place.
fn mul_line_factor(acc: &mut MotiveSeries, n: usize, k: i64, c: &BigInt) {
    let order = acc.order();
    let steps = order / n;
    if steps == 0 || c.is_zero() {
        return;
    }
    // binomial coefficients of (1 - u)^(-c): a_j = a_{j-1} (c + j - 1) / j
    let mut factor: Vec<(usize, MotiveClass)> = Vec::with_capacity(steps);
    let mut a = BigInt::one();
    for j in 1..=steps {
        a = a * (c + BigInt::from(j - 1)) / BigInt::from(j);
        if a.is_zero() {
            break;
        }
        let e = k * j as i64;
        let sign_flip = e.rem_euclid(2) == 1;
        let coeff = if sign_flip { -a.clone() } else { a.clone() };
        factor.push((n * j, MotiveClass::monomial(coeff, e)));
    }
    let old = acc.coeffs().to_vec();
    for m in (1..=order).rev() {
        let mut add = MotiveClass::zero();
        for (deg, f) in &factor {
            if *deg > m {
                break;
            }
            let src = &old[m - deg];
            if !src.is_zero() {
                add += src * f;
            }
        }
        if !add.is_zero() {
            let mut cur = old[m].clone();
            cur += add;
            acc.set_coeff(m, cur);
        }
    }
}

/// `acc *= Exp(b t^n)`.
fn mul_exp_term(acc: &mut MotiveSeries, n: usize, b: &MotiveClass) {
    for (k, a) in b.terms() {
        let c = if k.rem_euclid(2) == 1 { -a } else { a.clone() };
        mul_line_factor(acc, n, k, &c);
    }
}

/// Plethystic exponential of a series with zero constant term.
pub fn exp(a: &MotiveSeries) -> Result<MotiveSeries> {
    check_constant(a, false)?;
    let mut acc = MotiveSeries::one(a.order());
    for n in 1..=a.order() {
        mul_exp_term(&mut acc, n, a.coeff(n));
    }
    Ok(acc)
}

/// Inverse of [`exp`] on series with constant term 1.
pub fn log(a: &MotiveSeries) -> Result<MotiveSeries> {
    check_constant(a, true)?;
    let order = a.order();
    let mut out = MotiveSeries::zero(order);
    let mut running = MotiveSeries::one(order);
    for n in 1..=order {
        let b = a.coeff(n) - running.coeff(n);
        mul_exp_term(&mut running, n, &b);
        out.set_coeff(n, b);
    }
    Ok(out)
}

/// `A(t)^x = Exp(x Log A(t))`.
pub fn power(a: &MotiveSeries, x: &MotiveClass) -> Result<MotiveSeries> {
    exp(&log(a)?.scale(x))
}

/// `sigma^n(x)`, the `t^n` coefficient of `Exp(x t)`.
pub fn sigma_n(x: &MotiveClass, n: usize) -> MotiveClass {
    zeta(x, n).coeff(n).clone()
}

/// Kapranov zeta function `(1 - t)^(-x) = sum sigma^n(x) t^n`.
pub fn zeta(x: &MotiveClass, order: usize) -> MotiveSeries {
    exp(&MotiveSeries::monomial(x.clone(), 1, order)).expect("zero constant term")
}

/// Closed form `(1 + L^(1/2) t)^(2g) / ((1 - t)(1 - L t))`, expanded by plain series arithmetic.
pub fn macdonald_curve_zeta(genus: u32, order: usize) -> MotiveSeries {
    let one = MotiveClass::one();
    let line = |c: MotiveClass| MotiveSeries::from_coeffs(vec![one.clone(), c], order);
    let mut num = MotiveSeries::one(order);
    let f = line(half_power(1));
    for _ in 0..2 * genus {
        num = &num * &f;
    }
    let den = &line(MotiveClass::from(-1)) * &line(-MotiveClass::lefschetz());
    &num * &den.inverse().expect("unit constant term")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::curve_class;
    use proptest::prelude::*;

    fn t(order: usize) -> MotiveSeries {
        MotiveSeries::monomial(MotiveClass::one(), 1, order)
    }

    fn geometric(order: usize) -> MotiveSeries {
        MotiveSeries::from_coeffs(vec![MotiveClass::one(); order + 1], order)
    }

    fn macmahon_exponent(order: usize) -> MotiveSeries {
        MotiveSeries::from_fn(order, |m| MotiveClass::from(m as i64))
    }

    #[test]
    fn exp_of_t_is_geometric() {
        assert_eq!(exp(&t(9)).unwrap(), geometric(9));
        assert_eq!(log(&geometric(9)).unwrap(), t(9));
    }

    #[test]
    fn exp_of_negative_half_power() {
        let arg = MotiveSeries::monomial(-half_power(-1), 1, 8);
        let want = MotiveSeries::from_coeffs(vec![MotiveClass::one(), half_power(-1)], 8)
            .inverse()
            .unwrap();
        assert_eq!(exp(&arg).unwrap(), want);
    }

    #[test]
    fn exp_of_macmahon_exponent() {
        let m = exp(&macmahon_exponent(7)).unwrap();
        let want = [1, 1, 3, 6, 13, 24, 48, 86];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(m.coeff(n), &MotiveClass::from(*w));
        }
        assert_eq!(log(&m).unwrap(), macmahon_exponent(7));
    }

    #[test]
    fn log_of_one_plus_t() {
        let a = MotiveSeries::from_coeffs(vec![MotiveClass::one(), MotiveClass::one()], 5);
        let l = log(&a).unwrap();
        assert_eq!(l.coeff(1), &MotiveClass::one());
        assert_eq!(l.coeff(2), &MotiveClass::from(-1));
        for n in 3..=5 {
            assert!(l.coeff(n).is_zero());
        }
    }

    #[test]
    fn constant_term_errors() {
        assert!(exp(&MotiveSeries::one(3)).is_err());
        assert!(log(&MotiveSeries::zero(3)).is_err());
        assert!(power(&MotiveSeries::constant(MotiveClass::from(2), 3), &MotiveClass::one()).is_err());
    }

    #[test]
    fn power_examples() {
        let a = exp(&macmahon_exponent(6)).unwrap();
        assert_eq!(power(&a, &MotiveClass::zero()).unwrap(), MotiveSeries::one(6));
        let one_minus_t = MotiveSeries::from_coeffs(vec![MotiveClass::one(), MotiveClass::from(-1)], 8);
        let p1 = MotiveClass::poly_in_l(&[1, 1]);
        let got = power(&one_minus_t, &-&p1).unwrap();
        for n in 0..=8 {
            assert_eq!(got.coeff(n), &MotiveClass::poly_in_l(&vec![1; n + 1]));
        }
        assert_eq!(got, macdonald_curve_zeta(0, 8));
    }

    #[test]
    fn sigma_examples() {
        let l = -half_power(1);
        for n in 0..6 {
            assert_eq!(sigma_n(&l, n), l.pow(n as i64).unwrap());
        }
        assert_eq!(sigma_n(&half_power(6), 2), half_power(12));
        assert_eq!(sigma_n(&MotiveClass::poly_in_l(&[3, 0, 1]), 0), MotiveClass::one());
        // half-power of odd degree is minus a line element
        assert_eq!(sigma_n(&half_power(1), 2), MotiveClass::zero());
    }

    #[test]
    fn zeta_examples() {
        let z = zeta(&MotiveClass::lefschetz(), 6);
        for n in 0..=6 {
            assert_eq!(z.coeff(n), &half_power(2 * n as i64));
        }
        assert_eq!(zeta(&MotiveClass::zero(), 6), MotiveSeries::one(6));
        assert_eq!(zeta(&curve_class(0), 6), macdonald_curve_zeta(0, 6));
    }

    #[test]
    fn macdonald_matches_kapranov() {
        for g in 0..=3 {
            let m = macdonald_curve_zeta(g, 8);
            assert_eq!(m, zeta(&curve_class(g), 8), "genus {g}");
        }
        assert_eq!(macdonald_curve_zeta(1, 3).coeff(1), &curve_class(1));
    }

    fn arb_class() -> impl Strategy<Value = MotiveClass> {
        prop::collection::vec((-3i64..4, -2i64..3), 0..3).prop_map(MotiveClass::from_terms)
    }

    fn arb_series(order: usize) -> impl Strategy<Value = MotiveSeries> {
        prop::collection::vec(arb_class(), order).prop_map(move |c| {
            let mut v = vec![MotiveClass::zero()];
            v.extend(c);
            MotiveSeries::from_coeffs(v, order)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn exp_log_inverse(a in arb_series(6)) {
            let e = exp(&a).unwrap();
            prop_assert_eq!(log(&e).unwrap(), a.clone());
            let one_plus = &MotiveSeries::one(6) + &a;
            prop_assert_eq!(exp(&log(&one_plus).unwrap()).unwrap(), one_plus);
        }

        #[test]
        fn exp_is_a_homomorphism(a in arb_series(6), b in arb_series(6)) {
            prop_assert_eq!(exp(&(&a + &b)).unwrap(), &exp(&a).unwrap() * &exp(&b).unwrap());
        }

        #[test]
        fn lambda_relation(a in arb_class(), b in arb_class(), n in 0usize..7) {
            let diff = &a - &b;
            let za = zeta(&diff, n);
            let zb = zeta(&b, n);
            let lhs: MotiveClass = (0..=n).map(|i| za.coeff(i) * zb.coeff(n - i)).sum();
            prop_assert_eq!(lhs, sigma_n(&a, n));
        }

        #[test]
        fn exp_of_effective_is_effective(
            raw in prop::collection::vec(prop::collection::vec((-3i64..4, 0i64..3), 0..3), 6)
        ) {
            // nonnegative coefficients in the line-element basis
            let coeffs: Vec<MotiveClass> = std::iter::once(MotiveClass::zero())
                .chain(raw.into_iter().map(|terms| {
                    MotiveClass::from_terms(terms.into_iter().map(|(k, c)| (k, if k.rem_euclid(2) == 1 { -c } else { c })))
                }))
                .collect();
            let a = MotiveSeries::from_coeffs(coeffs, 6);
            prop_assume!(a.coeffs().iter().all(MotiveClass::is_effective));
            let e = exp(&a).unwrap();
            prop_assert!(e.coeffs().iter().all(MotiveClass::is_effective));
        }

        #[test]
        fn euler_specialization_commutes_with_exp(a in arb_series(6)) {
            let lhs = exp(&a).unwrap().specialize_euler();
            let ints = MotiveSeries::from_coeffs(
                a.coeffs().iter().map(|c| MotiveClass::from_integer(c.specialize_euler())).collect(),
                6,
            );
            let rhs: Vec<BigInt> = exp(&ints).unwrap().coeffs().iter().map(|c| c.coeff(0)).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
