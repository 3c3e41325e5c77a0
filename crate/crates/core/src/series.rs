//! Truncated power series with [`MotiveClass`] coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::motive::MotiveClass;

/// `sum_{n <= order} c_n t^n`. Coefficients past `order` are unknown, not zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MotiveSeries {
    coeffs: Vec<MotiveClass>,
}

impl MotiveSeries {
    pub fn zero(order: usize) -> Self {
        MotiveSeries {
            coeffs: vec![MotiveClass::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(MotiveClass::one(), order)
    }

    pub fn constant(c: MotiveClass, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^k`, truncated at `order`.
    pub fn monomial(c: MotiveClass, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads with zeros or truncates so that exactly `order + 1` coefficients are kept.
    pub fn from_coeffs(mut coeffs: Vec<MotiveClass>, order: usize) -> Self {
        coeffs.resize(order + 1, MotiveClass::zero());
        MotiveSeries { coeffs }
    }

    /// `sum_{n=1}^{order} f(n) t^n`.
    pub fn from_fn<F: FnMut(usize) -> MotiveClass>(order: usize, mut f: F) -> Self {
        let mut s = Self::zero(order);
        for n in 1..=order {
            s.coeffs[n] = f(n);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MotiveClass {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MotiveClass] {
        &self.coeffs
    }

    /// Sets the `t^n` coefficient; terms past the order are dropped.
    pub fn set_coeff(&mut self, n: usize, c: MotiveClass) {
        if let Some(slot) = self.coeffs.get_mut(n) {
            *slot = c;
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        MotiveSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MotiveClass::is_zero)
    }

    /// Smallest `n` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Index of the first coefficient where the two series differ, over the common order.
    pub fn first_difference(&self, other: &MotiveSeries) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    pub fn scale(&self, c: &MotiveClass) -> Self {
        MotiveSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be a unit `±L^(j/2)`.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse()?;
        let n = self.order();
        let mut out = vec![MotiveClass::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = MotiveClass::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !out[k - j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -(&acc * &inv0);
        }
        Ok(MotiveSeries { coeffs: out })
    }

    /// `t -> c t^k` for a monomial `c = a L^(j/2)`.
    pub fn substitute_t(&self, c: &MotiveClass, k: usize) -> Result<Self> {
        if c.num_terms() != 1 {
            return Err(Error::NotMonomial(c.to_string()));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("substitution degree must be positive".into()));
        }
        let n = self.order();
        let mut out = Self::zero(n);
        let mut power = MotiveClass::one();
        for i in 0..=n / k {
            out.coeffs[i * k] = &self.coeffs[i] * &power;
            power = &power * c;
        }
        Ok(out)
    }

    /// `t -> -t`.
    pub fn negate_t(&self) -> Self {
        MotiveSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Divide by `t`, dropping the constant term; the order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(
                "cannot divide by t: constant term is nonzero".into(),
            ));
        }
        if self.order() == 0 {
            return Err(Error::InvalidArgument("order-0 series has no t^1 coefficient".into()));
        }
        Ok(MotiveSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiply by `t`, keeping the order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(MotiveClass::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        MotiveSeries { coeffs }
    }

    pub fn map_coeffs<F: FnMut(&MotiveClass) -> MotiveClass>(&self, f: F) -> Self {
        MotiveSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Euler characteristic realization of every coefficient.
    pub fn specialize_euler(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(MotiveClass::specialize_euler).collect()
    }

    /// JSON export: array of rendered coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let arr = value
            .as_array()
            .filter(|a| !a.is_empty())
            .ok_or_else(|| Error::InvalidArgument("expected a nonempty JSON array".into()))?;
        let coeffs = arr
            .iter()
            .map(|v| {
                v.as_str()
                    .ok_or_else(|| Error::InvalidArgument("expected string coefficients".into()))?
                    .parse()
            })
            .collect::<Result<Vec<MotiveClass>>>()?;
        let order = coeffs.len() - 1;
        Ok(Self::from_coeffs(coeffs, order))
    }

    fn zip_with<F: Fn(&MotiveClass, &MotiveClass) -> MotiveClass>(&self, rhs: &Self, f: F) -> Self {
        MotiveSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

/// `prod_i base_i^{x_i}` through the power structure.
pub fn product_expand(factors: &[(MotiveSeries, MotiveClass)], order: usize) -> Result<MotiveSeries> {
    let mut acc = MotiveSeries::one(order);
    for (base, x) in factors {
        if base.coeffs()[1..].iter().all(MotiveClass::is_zero) {
            continue;
        }
        if base.order() < order {
            return Err(Error::InvalidArgument(format!(
                "factor truncated at order {} but {} requested",
                base.order(),
                order
            )));
        }
        acc = &acc * &crate::lambda::power(&base.truncate(order), x)?;
    }
    Ok(acc)
}

impl Add<&MotiveSeries> for &MotiveSeries {
    type Output = MotiveSeries;
    fn add(self, rhs: &MotiveSeries) -> MotiveSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&MotiveSeries> for &MotiveSeries {
    type Output = MotiveSeries;
    fn sub(self, rhs: &MotiveSeries) -> MotiveSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&MotiveSeries> for &MotiveSeries {
    type Output = MotiveSeries;
    fn mul(self, rhs: &MotiveSeries) -> MotiveSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![MotiveClass::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        MotiveSeries { coeffs: out }
    }
}

impl Neg for &MotiveSeries {
    type Output = MotiveSeries;
    fn neg(self) -> MotiveSeries {
        self.map_coeffs(|c| -c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MotiveSeries> for MotiveSeries {
            type Output = MotiveSeries;
            fn $f(self, rhs: MotiveSeries) -> MotiveSeries {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MotiveSeries> for MotiveSeries {
            type Output = MotiveSeries;
            fn $f(self, rhs: &MotiveSeries) -> MotiveSeries {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MotiveSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl fmt::Debug for MotiveSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotiveSeries[{self}]")
    }
}

/// Series in a point variable `s` (index `i`) and a curve variable `T` (index `j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedSeries {
    order_s: usize,
    order_curve: usize,
    /// `slices[j]` is the coefficient of `T^j`.
    slices: Vec<MotiveSeries>,
}

impl BigradedSeries {
    pub fn zero(order_s: usize, order_curve: usize) -> Self {
        BigradedSeries {
            order_s,
            order_curve,
            slices: vec![MotiveSeries::zero(order_s); order_curve + 1],
        }
    }

    pub fn one(order_s: usize, order_curve: usize) -> Self {
        Self::from_point_series(&MotiveSeries::one(order_s), order_curve)
    }

    /// Embed a series independent of `T`.
    pub fn from_point_series(s: &MotiveSeries, order_curve: usize) -> Self {
        let mut out = Self::zero(s.order(), order_curve);
        out.slices[0] = s.clone();
        out
    }

    pub fn order_s(&self) -> usize {
        self.order_s
    }

    pub fn order_curve(&self) -> usize {
        self.order_curve
    }

    pub fn coeff(&self, i: usize, j: usize) -> &MotiveClass {
        self.slices[j].coeff(i)
    }

    pub fn add_to_coeff(&mut self, i: usize, j: usize, c: &MotiveClass) {
        if i <= self.order_s && j <= self.order_curve {
            let mut cur = self.slices[j].coeff(i).clone();
            cur += c;
            self.slices[j].set_coeff(i, cur);
        }
    }

    /// The coefficient of `T^j` as a series in `s`.
    pub fn curve_slice(&self, j: usize) -> MotiveSeries {
        self.slices
            .get(j)
            .cloned()
            .unwrap_or_else(|| MotiveSeries::zero(self.order_s))
    }

    /// The `T^1` slice.
    pub fn extract_curve_linear(&self) -> MotiveSeries {
        self.curve_slice(1)
    }

    pub fn mul(&self, rhs: &BigradedSeries) -> BigradedSeries {
        let os = self.order_s.min(rhs.order_s);
        let oc = self.order_curve.min(rhs.order_curve);
        let mut out = Self::zero(os, oc);
        for j1 in 0..=oc {
            let a = self.slices[j1].truncate(os);
            if a.is_zero() {
                continue;
            }
            for j2 in 0..=oc - j1 {
                let b = rhs.slices[j2].truncate(os);
                if !b.is_zero() {
                    out.slices[j1 + j2] = &out.slices[j1 + j2] + &(&a * &b);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::half_power;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn geometric(order: usize) -> MotiveSeries {
        MotiveSeries::from_coeffs(vec![MotiveClass::one(); order + 1], order)
    }

    fn arb_series(order: usize) -> impl Strategy<Value = MotiveSeries> {
        prop::collection::vec(
            prop::collection::vec((-4i64..5, -3i64..4), 0..3).prop_map(MotiveClass::from_terms),
            order + 1,
        )
        .prop_map(move |c| MotiveSeries::from_coeffs(c, order))
    }

    #[test]
    fn one_minus_t_times_geometric() {
        let a = MotiveSeries::from_coeffs(vec![MotiveClass::one(), MotiveClass::from(-1)], 8);
        assert_eq!(&a * &geometric(8), MotiveSeries::one(8));
        assert_eq!(a.inverse().unwrap(), geometric(8));
    }

    #[test]
    fn half_power_binomial_inverse() {
        let a = MotiveSeries::from_coeffs(vec![MotiveClass::one(), half_power(-1)], 6);
        assert_eq!(&a * &a.inverse().unwrap(), MotiveSeries::one(6));
    }

    #[test]
    fn non_unit_constant_term_is_not_invertible() {
        let a = MotiveSeries::constant(MotiveClass::poly_in_l(&[1, 1]), 3);
        assert!(matches!(a.inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn min_order_rule() {
        let a = geometric(3);
        let b = geometric(7);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
    }

    #[test]
    fn substitution_examples() {
        let a = MotiveSeries::from_coeffs(vec![MotiveClass::one(), MotiveClass::one()], 4);
        let c = -half_power(1);
        let b = a.substitute_t(&c, 1).unwrap();
        assert_eq!(b.coeff(1), &c);
        let sq = geometric(6).substitute_t(&MotiveClass::one(), 2).unwrap();
        for n in 0..=6 {
            let want = if n % 2 == 0 { MotiveClass::one() } else { MotiveClass::zero() };
            assert_eq!(sq.coeff(n), &want);
        }
        assert!(a.substitute_t(&MotiveClass::poly_in_l(&[1, 1]), 1).is_err());
    }

    #[test]
    fn rendering() {
        let a = MotiveSeries::from_coeffs(vec![MotiveClass::one(), half_power(3), MotiveClass::zero(), MotiveClass::from(-2)], 3);
        assert_eq!(a.to_string(), "1 + (L^(3/2))*t + (-2)*t^3 + O(t^4)");
        assert_eq!(MotiveSeries::zero(1).to_string(), "0 + O(t^2)");
    }

    #[test]
    fn json_round_trip() {
        let a = MotiveSeries::from_coeffs(vec![MotiveClass::one(), half_power(-3), MotiveClass::poly_in_l(&[1, 0, 3])], 2);
        let j = a.to_json();
        assert_eq!(j, serde_json::json!(["1", "L^(-3/2)", "3*L^2 + 1"]));
        assert_eq!(MotiveSeries::from_json(&j).unwrap(), a);
    }

    #[test]
    fn bigraded_slices() {
        let mut a = BigradedSeries::one(3, 1);
        a.add_to_coeff(1, 1, &MotiveClass::from(-1));
        assert_eq!(a.extract_curve_linear().coeff(1), &MotiveClass::from(-1));
        assert!(BigradedSeries::one(3, 1).extract_curve_linear().is_zero());
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(1, 1), &MotiveClass::from(-2));
        assert_eq!(sq.curve_slice(0), MotiveSeries::one(3));
    }

    proptest! {
        #[test]
        fn series_ring_axioms(a in arb_series(5), b in arb_series(5), c in arb_series(5)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn substitution_round_trip(a in arb_series(6), j in -5i64..6, neg in any::<bool>()) {
            let c = MotiveClass::monomial(if neg { -1 } else { 1 }, j);
            let back = a.substitute_t(&c, 1).unwrap().substitute_t(&c.inverse().unwrap(), 1).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn inverse_is_two_sided(a in arb_series(6), j in -4i64..5) {
            let mut a = a;
            a.set_coeff(0, MotiveClass::monomial(-1, j));
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, MotiveSeries::one(6));
        }
    }

    #[test]
    fn constant_coefficients_behave_like_integers() {
        let a = MotiveSeries::from_coeffs(vec![MotiveClass::one(), MotiveClass::from(2)], 3);
        let sq = &a * &a;
        assert_eq!(sq.coeff(2).coeff(0), BigInt::from(4));
        assert!(sq.coeff(3).is_zero());
        assert!(BigInt::one() == sq.coeff(0).coeff(0));
        assert!(BigInt::zero() == sq.coeff(0).coeff(1));
    }
}
