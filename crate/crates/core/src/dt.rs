//! Closed-form generating functions for points and curves in 3-folds.
//!
//! Functions whose names end in `_neg` (and [`z0`], [`f_curv`],
//! [`q_l_exp_form`]) return the series in the variable `-t`, which is the
//! convention in which the plethystic formulas are stated. [`z_hilb`],
//! [`q_quot`] and [`q_quot_factored`] return the series in `t`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lambda::{exp, power, zeta};
use crate::motive::{curve_class, half_power, MotiveClass};
use crate::series::{BigradedSeries, MotiveSeries};

/// Realization-level classes of a 3-fold `Y` and a smooth curve `C` in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryInput {
    pub class_y: MotiveClass,
    pub class_c: MotiveClass,
    pub chi_y: i64,
    pub chi_c: i64,
    pub bps: i64,
}

impl GeometryInput {
    /// Validates that the Euler characteristics match the classes.
    pub fn new(class_y: MotiveClass, class_c: MotiveClass, chi_y: i64, chi_c: i64, bps: i64) -> Result<Self> {
        let ey = class_y.specialize_euler();
        let ec = class_c.specialize_euler();
        if ey != BigInt::from(chi_y) {
            return Err(Error::Geometry(format!("chi(Y) = {chi_y} but [Y] = {class_y} has chi {ey}")));
        }
        if ec != BigInt::from(chi_c) {
            return Err(Error::Geometry(format!("chi(C) = {chi_c} but [C] = {class_c} has chi {ec}")));
        }
        Ok(GeometryInput { class_y, class_c, chi_y, chi_c, bps })
    }

    /// Euler characteristics read off the classes; BPS number 1.
    pub fn from_classes(class_y: MotiveClass, class_c: MotiveClass) -> Self {
        let chi = |c: &MotiveClass| {
            i64::try_from(c.specialize_euler()).expect("Euler characteristic fits in i64")
        };
        GeometryInput {
            chi_y: chi(&class_y),
            chi_c: chi(&class_c),
            class_y,
            class_c,
            bps: 1,
        }
    }

    /// A line `L` in `A^3`.
    pub fn affine_line() -> Self {
        Self::from_classes(half_power(6), MotiveClass::lefschetz())
    }

    /// The exceptional curve `C_0 = P^1` in the resolved conifold `X`.
    pub fn conifold() -> Self {
        Self::from_classes(class_conifold(), curve_class(0))
    }

    /// A genus `g` proxy curve in a 3-fold of class `class_y`.
    pub fn with_curve_genus(class_y: MotiveClass, genus: u32) -> Self {
        Self::from_classes(class_y, curve_class(genus))
    }

    pub fn with_bps(mut self, bps: i64) -> Self {
        self.bps = bps;
        self
    }

    pub fn complement_class(&self) -> MotiveClass {
        &self.class_y - &self.class_c
    }
}

/// `[X] = L^3 + L^2` for the resolved conifold.
pub fn class_conifold() -> MotiveClass {
    MotiveClass::poly_in_l(&[0, 0, 1, 1])
}

fn binomial_line(c: MotiveClass, order: usize) -> MotiveSeries {
    MotiveSeries::from_coeffs(vec![MotiveClass::one(), c], order)
}

/// `t / ((1 + L^(-1/2) t)(1 + L^(1/2) t))` by plain series inversion.
fn point_kernel(order: usize) -> MotiveSeries {
    let d = &binomial_line(half_power(-1), order) * &binomial_line(half_power(1), order);
    d.inverse().expect("unit constant term").shift_up()
}

/// `Z_0(-t) = Exp(-L^(-3/2) t / ((1 + L^(-1/2) t)(1 + L^(1/2) t)))`.
pub fn z0(order: usize) -> MotiveSeries {
    exp(&point_kernel(order).scale(&-half_power(-3))).expect("zero constant term")
}

/// `(-1)^n L^(-3/2) (L^(n/2) - L^(-n/2)) / (L^(1/2) - L^(-1/2))`.
pub fn omega_bbs(n: usize) -> Result<MotiveClass> {
    if n < 1 {
        return Err(Error::InvalidArgument("omega_bbs needs n >= 1".into()));
    }
    let n = n as i64;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    Ok(MotiveClass::from_terms((0..n).map(|j| (n - 4 - 2 * j, sign))))
}

/// `-L^(-1/2) - L^(-3/2)` for `n = 1`, otherwise [`omega_bbs`].
pub fn omega_curv(n: usize) -> Result<MotiveClass> {
    match n {
        0 => Err(Error::InvalidArgument("omega_curv needs n >= 1".into())),
        1 => Ok(MotiveClass::from_terms([(-1, -1), (-3, -1)])),
        _ => omega_bbs(n),
    }
}

/// `sum_{n=1}^N omega(n) t^n`.
pub fn omega_series<F: Fn(usize) -> Result<MotiveClass>>(order: usize, omega: F) -> MotiveSeries {
    MotiveSeries::from_fn(order, |n| omega(n).expect("n >= 1"))
}

/// `F_curv(-t) = Z_0(-t) (1 + L^(-1/2) t)^(-1)`.
pub fn f_curv(order: usize) -> MotiveSeries {
    &z0(order) * &binomial_line(half_power(-1), order).inverse().expect("unit")
}

/// `Z_X(t)` for a 3-fold of class `x`: `Z_0(-t)^x`, then `t -> -t`.
pub fn z_hilb(x: &MotiveClass, order: usize) -> MotiveSeries {
    z_hilb_neg(x, order).negate_t()
}

/// `Z_X(-t) = Z_0(-t)^x`.
pub fn z_hilb_neg(x: &MotiveClass, order: usize) -> MotiveSeries {
    power(&z0(order), x).expect("constant term 1")
}

/// `Q_{C/Y}(-t) = Z_{Y \ C}(-t) F_curv(-t)^[C]`.
pub fn q_quot_neg(geo: &GeometryInput, order: usize) -> MotiveSeries {
    let pts = z_hilb_neg(&geo.complement_class(), order);
    let crv = power(&f_curv(order), &geo.class_c).expect("constant term 1");
    &pts * &crv
}

/// `Q_{C/Y}(t)`.
pub fn q_quot(geo: &GeometryInput, order: usize) -> MotiveSeries {
    q_quot_neg(geo, order).negate_t()
}

/// `Z_C(t)`: Kapranov zeta of `[C]` with `t -> L^(-1/2) t`.
pub fn curve_zeta(class_c: &MotiveClass, order: usize) -> MotiveSeries {
    zeta(class_c, order)
        .substitute_t(&half_power(-1), 1)
        .expect("monomial")
}

/// `Z_Y(t) Z_C(t)`, evaluated without the curve factor `F_curv`.
pub fn q_quot_factored(geo: &GeometryInput, order: usize) -> MotiveSeries {
    &z_hilb(&geo.class_y, order) * &curve_zeta(&geo.class_c, order)
}

/// `Q_{L/A^3}(-t) = Exp(-L^(3/2) t / ((1 + L^(-1/2) t)(1 + L^(1/2) t)) - L^(1/2) t)`.
pub fn q_l_exp_form(order: usize) -> MotiveSeries {
    let arg = &point_kernel(order).scale(&-half_power(3))
        - &MotiveSeries::monomial(half_power(1), 1, order);
    exp(&arg).expect("zero constant term")
}

/// `Z_{A^3 \ L}(-t) F_curv(-t)^L`.
pub fn q_l_local_product(order: usize) -> MotiveSeries {
    let l = MotiveClass::lefschetz();
    let pts = z_hilb_neg(&(&half_power(6) - &l), order);
    &pts * &power(&f_curv(order), &l).expect("constant term 1")
}

/// `(1 - c t^m)^(-x)`, read as the zeta function of `x` under `t -> c t^m`.
pub fn zeta_substituted(x: &MotiveClass, c: &MotiveClass, m: usize, order: usize) -> Result<MotiveSeries> {
    zeta(x, order).substitute_t(c, m)
}

/// `prod_m prod_{k<m} (1 - L^(k-1-m/2) t^m)^(-[Y]) (1 - L^(-1/2) t)^(-[C])`.
pub fn q_quot_product_form(geo: &GeometryInput, order: usize) -> MotiveSeries {
    let mut acc = zeta_substituted(&geo.class_c, &half_power(-1), 1, order).expect("monomial");
    for m in 1..=order {
        for k in 0..m {
            let c = half_power(2 * k as i64 - 2 - m as i64);
            let f = zeta_substituted(&geo.class_y, &c, m, order).expect("monomial");
            acc = &acc * &f;
        }
    }
    acc
}

/// `[U]_vir = L^(-dim/2) [U]`.
pub fn virtual_class(class: &MotiveClass, dim: u32) -> MotiveClass {
    class.shifted(-(dim as i64), false)
}

/// `Exp(-t [Y]_vir Exp(-t [P^1]_vir) - t [C]_vir)`, to compare with `Q_{C/Y}(-t)`.
pub fn q_quot_exp_form_neg(geo: &GeometryInput, order: usize) -> MotiveSeries {
    let p1_vir = virtual_class(&curve_class(0), 1);
    let inner = exp(&MotiveSeries::monomial(-p1_vir, 1, order)).expect("zero constant term");
    let y_part = inner.shift_up().scale(&-virtual_class(&geo.class_y, 3));
    let c_part = MotiveSeries::monomial(-virtual_class(&geo.class_c, 1), 1, order);
    exp(&(&y_part + &c_part)).expect("zero constant term")
}

/// `Z_PT(-s, T) = prod_{m>=1} prod_{j<m} (1 + L^(-m/2 + 1/2 + j) (-s)^m T)`.
pub fn z_pt_conifold(order_s: usize, order_curve: usize) -> BigradedSeries {
    let mut acc = BigradedSeries::one(order_s, order_curve);
    for m in 1..=order_s {
        for j in 0..m {
            let sign = if m % 2 == 1 { -1 } else { 1 };
            let c = MotiveClass::monomial(sign, 1 - m as i64 + 2 * j as i64);
            let mut f = BigradedSeries::one(order_s, order_curve);
            f.add_to_coeff(m, 1, &c);
            acc = acc.mul(&f);
        }
    }
    acc
}

/// `Z_DT(-s, T) = Z_X(-s) Z_PT(-s, T)`.
pub fn z_dt_conifold(order_s: usize, order_curve: usize) -> BigradedSeries {
    let zx = BigradedSeries::from_point_series(&z_hilb_neg(&class_conifold(), order_s), order_curve);
    zx.mul(&z_pt_conifold(order_s, order_curve))
}

/// Outcome of the conifold DT/PT comparison.
#[derive(Clone, Debug)]
pub struct WallCrossReport {
    /// `-s^(-1)` times the `T`-linear part of `Z_DT(-s, T)`.
    pub dt_side: MotiveSeries,
    /// `Z_X(-s) (1 + L^(-1/2) s)^(-(L+1))`.
    pub product_side: MotiveSeries,
    /// `Q_{C_0/X}(-s)`.
    pub quot_side: MotiveSeries,
}

impl WallCrossReport {
    pub fn first_failure(&self) -> Option<(usize, &MotiveSeries, &MotiveSeries)> {
        if let Some(n) = self.dt_side.first_difference(&self.product_side) {
            return Some((n, &self.dt_side, &self.product_side));
        }
        self.product_side
            .first_difference(&self.quot_side)
            .map(|n| (n, &self.product_side, &self.quot_side))
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }
}

pub fn conifold_wallcross_check(order: usize) -> WallCrossReport {
    let dt = z_dt_conifold(order + 1, 1).extract_curve_linear();
    let dt_side = -&dt.shift_down().expect("no constant T-term");
    let curve = power(
        &binomial_line(half_power(-1), order),
        &-curve_class(0),
    )
    .expect("constant term 1");
    let product_side = &z_hilb_neg(&class_conifold(), order) * &curve;
    let quot_side = q_quot_neg(&GeometryInput::conifold(), order);
    WallCrossReport {
        dt_side,
        product_side,
        quot_side,
    }
}

fn int_binomial_factor(acc: &mut [BigInt], m: usize, u: &BigInt, c: &BigInt) {
    // acc *= (1 - u t^m)^(-c)
    let order = acc.len() - 1;
    let mut coeffs = Vec::new();
    let mut a = BigInt::one();
    let mut up = BigInt::one();
    for j in 1..=order / m {
        a = a * (c + BigInt::from(j - 1)) / BigInt::from(j);
        up *= u;
        coeffs.push((m * j, &a * &up));
    }
    let old = acc.to_vec();
    for n in 1..=order {
        for (deg, f) in &coeffs {
            if *deg > n {
                break;
            }
            acc[n] += &old[n - deg] * f;
        }
    }
}

/// `DT^n_C` from `sum DT^n t^n = bps M(-t)^chi_Y (1 + t)^(-chi_C)`.
pub fn dt_numbers(chi_y: i64, chi_c: i64, bps: i64, order: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::from(bps);
    for m in 1..=order {
        // M(-t) = prod (1 - (-1)^m t^m)^(-m)
        let u = if m % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        int_binomial_factor(&mut acc, m, &u, &BigInt::from(m as i64 * chi_y));
    }
    int_binomial_factor(&mut acc, 1, &-BigInt::one(), &BigInt::from(chi_c));
    acc
}

/// `L^(-2) (1 + L^(-1) + ... + L^(1-n))`.
pub fn omega_twisted(n: usize) -> MotiveClass {
    MotiveClass::from_terms((0..n as i64).map(|i| (-4 - 2 * i, 1)))
}

/// Outcome of the shifted-generator comparison.
#[derive(Clone, Debug)]
pub struct TwistedReport {
    /// First `n` where `(-1)^n L^(-n/2) omega_bbs(n)` differs from [`omega_twisted`].
    pub omega_mismatch: Option<(usize, MotiveClass, MotiveClass)>,
    /// `Q_{L/A^3}(L^(-1/2) t)`.
    pub shifted_quot: MotiveSeries,
    /// `Exp(sum L^3 omega_twisted(n) t^n + t)`.
    pub twisted_exp: MotiveSeries,
    /// Graded dimensions of the free symmetric algebra on the shifted generators.
    pub graded_dims: MotiveSeries,
}

impl TwistedReport {
    pub fn passed(&self) -> bool {
        self.omega_mismatch.is_none()
            && self.shifted_quot == self.twisted_exp
            && self.twisted_exp == self.graded_dims
    }
}

/// Generators `(n, w)` of weight `L^w` in degree `n`: `w = 3 + i` for `i = -2, ..., -1-n`, and `(1, 0)`.
pub fn twisted_generators(order: usize) -> Vec<(usize, i64)> {
    let mut g: Vec<(usize, i64)> = (1..=order)
        .flat_map(|n| (1..=n as i64).map(move |k| (n, 3 - 1 - k)))
        .collect();
    if order >= 1 {
        g.push((1, 0));
    }
    g
}

pub fn twisted_omega_check(order: usize) -> TwistedReport {
    let omega_mismatch = (1..=order).find_map(|n| {
        let sign = n % 2 == 1;
        let lhs = omega_bbs(n).expect("n >= 1").shifted(-(n as i64), sign);
        let rhs = omega_twisted(n);
        (lhs != rhs).then_some((n, lhs, rhs))
    });
    let shifted_quot = q_quot(&GeometryInput::affine_line(), order)
        .substitute_t(&half_power(-1), 1)
        .expect("monomial");
    let arg = &MotiveSeries::from_fn(order, |n| omega_twisted(n).shifted(6, false))
        + &MotiveSeries::monomial(MotiveClass::one(), 1, order);
    let twisted_exp = exp(&arg).expect("zero constant term");
    let mut graded_dims = MotiveSeries::one(order);
    for (n, w) in twisted_generators(order) {
        let mut f = MotiveSeries::one(order);
        f.set_coeff(n, -half_power(2 * w));
        graded_dims = &graded_dims * &f.inverse().expect("unit");
    }
    TwistedReport {
        omega_mismatch,
        shifted_quot,
        twisted_exp,
        graded_dims,
    }
}
