//! The realization ring `Z[L^(1/2), L^(-1/2)]`.
//!
//! A [`MotiveClass`] is a Laurent polynomial in the half Lefschetz class.
//! Exponents are stored doubled, so the key `3` means `L^(3/2)`. Every class
//! that enters the local formulas for `A^3`, a line, the resolved conifold and
//! its exceptional curve is polynomial in `L`, so computations with those
//! inputs are exact. Other varieties are represented by a user supplied
//! Laurent polynomial (typically the pullback of a weight polynomial).
//!
//! Line elements for the lambda structure are the powers of `-L^(1/2)`; see
//! [`MotiveClass::effective_decompose`].

use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Laurent polynomial in `L^(1/2)` with arbitrary precision coefficients.
///
/// Keys are doubled exponents. No stored coefficient is zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MotiveClass {
    coeffs: BTreeMap<i64, BigInt>,
}

/// Rewrite of a class in the basis `{(-L^(1/2))^k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectiveDecomposition {
    /// `k -> c_k` with the class equal to `sum c_k (-L^(1/2))^k`.
    pub coeffs_in_neg_half_basis: BTreeMap<i64, BigInt>,
    /// True iff every `c_k` is nonnegative.
    pub is_effective: bool,
}

impl EffectiveDecomposition {
    /// Reassemble the class `sum c_k (-L^(1/2))^k`.
    pub fn reassemble(&self) -> MotiveClass {
        let mut out = MotiveClass::zero();
        for (&k, c) in &self.coeffs_in_neg_half_basis {
            let c = if k.rem_euclid(2) == 1 { -c } else { c.clone() };
            out.add_term(k, c);
        }
        out
    }
}

/// Laurent polynomial in `q^(1/2)`, the image of the weight polynomial
/// realization. Keys are doubled exponents of `q`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl WeightPolynomial {
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, doubled_exp: i64) -> BigInt {
        self.coeffs.get(&doubled_exp).cloned().unwrap_or_default()
    }

    /// Evaluate at `q^(1/2) = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            add_into(&mut coeffs, e, c);
        }
        WeightPolynomial { coeffs }
    }
}

fn add_into(map: &mut BTreeMap<i64, BigInt>, exp: i64, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match map.entry(exp) {
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

impl MotiveClass {
    pub fn zero() -> Self {
        MotiveClass::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * L^(doubled_exp / 2)`.
    pub fn monomial<C: Into<BigInt>>(c: C, doubled_exp: i64) -> Self {
        let mut out = MotiveClass::zero();
        out.add_term(doubled_exp, c.into());
        out
    }

    /// The Lefschetz class `L = [A^1]`.
    pub fn lefschetz() -> Self {
        half_power(2)
    }

    pub fn from_integer<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// Build from `(doubled exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = MotiveClass::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// Polynomial in `L` with integer exponents: `coeffs[i]` multiplies `L^i`.
    pub fn poly_in_l(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (2 * i as i64, c)))
    }

    pub fn add_term(&mut self, doubled_exp: i64, c: BigInt) {
        add_into(&mut self.coeffs, doubled_exp, c);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `L^(doubled_exp / 2)`.
    pub fn coeff(&self, doubled_exp: i64) -> BigInt {
        self.coeffs.get(&doubled_exp).cloned().unwrap_or_default()
    }

    /// If the class is `±L^(j/2)`, return `(sign, j)`.
    pub fn as_unit_monomial(&self) -> Option<(i8, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (&e, c) = self.coeffs.iter().next()?;
        if c.is_one() {
            Some((1, e))
        } else if (-c).is_one() {
            Some((-1, e))
        } else {
            None
        }
    }

    /// Multiply by `sign * L^(shift / 2)`.
    pub fn shifted(&self, shift: i64, negate: bool) -> Self {
        MotiveClass {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + shift, if negate { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        if c.is_zero() {
            return MotiveClass::zero();
        }
        MotiveClass {
            coeffs: self.coeffs.iter().map(|(&e, a)| (e, a * &c)).collect(),
        }
    }

    /// Inverse of a unit monomial `±L^(j/2)`.
    pub fn inverse(&self) -> Result<Self> {
        match self.as_unit_monomial() {
            Some((s, e)) => Ok(MotiveClass::monomial(s, -e)),
            None => Err(Error::NotInvertible(self.to_string())),
        }
    }

    /// Integer power; negative exponents require a unit monomial.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.inverse()?.pow(-exp);
        }
        let mut base = self.clone();
        let mut acc = MotiveClass::one();
        let mut k = exp as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Unique rewrite `sum c_k (-L^(1/2))^k`, with `c_k = (-1)^k a_k`.
    pub fn effective_decompose(&self) -> EffectiveDecomposition {
        let coeffs: BTreeMap<i64, BigInt> = self
            .coeffs
            .iter()
            .map(|(&k, a)| (k, if k.rem_euclid(2) == 1 { -a } else { a.clone() }))
            .collect();
        let is_effective = coeffs.values().all(|c| !c.is_negative());
        EffectiveDecomposition {
            coeffs_in_neg_half_basis: coeffs,
            is_effective,
        }
    }

    pub fn is_effective(&self) -> bool {
        self.effective_decompose().is_effective
    }

    /// Euler characteristic realization, `L^(1/2) -> -1`.
    pub fn specialize_euler(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&e, c)| if e.rem_euclid(2) == 1 { -c } else { c.clone() })
            .sum()
    }

    /// Weight polynomial realization, `L^(1/2) -> -q^(1/2)`.
    pub fn specialize_weight(&self) -> WeightPolynomial {
        WeightPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e, if e.rem_euclid(2) == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Largest doubled exponent, or `None` for zero.
    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }
}

/// The monomial `L^(j/2)`.
pub fn half_power(j: i64) -> MotiveClass {
    MotiveClass::monomial(1, j)
}

/// Realization proxy `1 + 2g L^(1/2) + L` for a smooth projective curve of genus `g`.
pub fn curve_class(genus: u32) -> MotiveClass {
    MotiveClass::from_terms([(0, 1i64), (1, 2 * genus as i64), (2, 1)])
}

// ---------------------------------------------------------------------------
// arithmetic

impl Add<&MotiveClass> for &MotiveClass {
    type Output = MotiveClass;
    fn add(self, rhs: &MotiveClass) -> MotiveClass {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&MotiveClass> for MotiveClass {
    fn add_assign(&mut self, rhs: &MotiveClass) {
        for (&e, c) in &rhs.coeffs {
            add_into(&mut self.coeffs, e, c.clone());
        }
    }
}

impl Sub<&MotiveClass> for &MotiveClass {
    type Output = MotiveClass;
    fn sub(self, rhs: &MotiveClass) -> MotiveClass {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&MotiveClass> for MotiveClass {
    fn sub_assign(&mut self, rhs: &MotiveClass) {
        for (&e, c) in &rhs.coeffs {
            add_into(&mut self.coeffs, e, -c);
        }
    }
}

impl Mul<&MotiveClass> for &MotiveClass {
    type Output = MotiveClass;
    fn mul(self, rhs: &MotiveClass) -> MotiveClass {
        let mut out = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                add_into(&mut out, e1 + e2, c1 * c2);
            }
        }
        MotiveClass { coeffs: out }
    }
}

impl MulAssign<&MotiveClass> for MotiveClass {
    fn mul_assign(&mut self, rhs: &MotiveClass) {
        *self = &*self * rhs;
    }
}

impl Neg for &MotiveClass {
    type Output = MotiveClass;
    fn neg(self) -> MotiveClass {
        MotiveClass {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for MotiveClass {
    type Output = MotiveClass;
    fn neg(mut self) -> MotiveClass {
        for c in self.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MotiveClass> for MotiveClass {
            type Output = MotiveClass;
            fn $f(self, rhs: MotiveClass) -> MotiveClass {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MotiveClass> for MotiveClass {
            type Output = MotiveClass;
            fn $f(self, rhs: &MotiveClass) -> MotiveClass {
                (&self).$f(rhs)
            }
        }
        impl $tr<MotiveClass> for &MotiveClass {
            type Output = MotiveClass;
            fn $f(self, rhs: MotiveClass) -> MotiveClass {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<MotiveClass> for MotiveClass {
    fn add_assign(&mut self, rhs: MotiveClass) {
        *self += &rhs;
    }
}

impl Sum for MotiveClass {
    fn sum<I: Iterator<Item = MotiveClass>>(iter: I) -> Self {
        iter.fold(MotiveClass::zero(), |acc, x| acc + x)
    }
}

impl Product for MotiveClass {
    fn product<I: Iterator<Item = MotiveClass>>(iter: I) -> Self {
        iter.fold(MotiveClass::one(), |acc, x| acc * x)
    }
}

impl From<i64> for MotiveClass {
    fn from(c: i64) -> Self {
        MotiveClass::from_integer(c)
    }
}

// ---------------------------------------------------------------------------
// text

fn render_exponent(symbol: &str, doubled: i64) -> String {
    match doubled {
        0 => String::new(),
        2 => symbol.to_string(),
        e if e % 2 == 0 && e > 0 => format!("{symbol}^{}", e / 2),
        e if e % 2 == 0 => format!("{symbol}^({})", e / 2),
        e => format!("{symbol}^({e}/2)"),
    }
}

fn render_laurent(
    f: &mut fmt::Formatter<'_>,
    coeffs: &BTreeMap<i64, BigInt>,
    symbol: &str,
) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    for (i, (&e, c)) in coeffs.iter().rev().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let abs = c.abs();
        let base = render_exponent(symbol, e);
        if base.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&base)?;
        } else {
            write!(f, "{abs}*{base}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_laurent(f, &self.coeffs, "L")
    }
}

impl fmt::Debug for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotiveClass({self})")
    }
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_laurent(f, &self.coeffs, "q")
    }
}

impl fmt::Debug for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightPolynomial({self})")
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.next().map(|(_, c)| c)
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            None
        } else {
            digits.parse().ok()
        }
    }
}

fn parse_doubled_exponent(lx: &mut Lexer<'_>) -> std::result::Result<i64, String> {
    let parenthesized = lx.peek() == Some('(');
    if parenthesized {
        lx.bump();
    }
    let negative = lx.sign().unwrap_or(false);
    let num = lx
        .integer()
        .ok_or_else(|| "expected exponent".to_string())?;
    let den = if parenthesized && lx.peek() == Some('/') {
        lx.bump();
        lx.integer().ok_or_else(|| "expected denominator".to_string())?
    } else {
        BigInt::one()
    };
    if parenthesized && lx.bump() != Some(')') {
        return Err("expected ')'".into());
    }
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    let doubled = num * 2u32;
    let (q, r) = doubled.div_rem(&den);
    if !r.is_zero() {
        return Err("exponent must be a multiple of 1/2".into());
    }
    let q = if negative { -q } else { q };
    q.to_i64().ok_or_else(|| "exponent out of range".to_string())
}

impl FromStr for MotiveClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syntax = |reason: String| Error::MotiveSyntax {
            input: s.to_string(),
            reason,
        };
        let mut lx = Lexer {
            chars: s.char_indices().peekable(),
        };
        let mut out = MotiveClass::zero();
        let mut first = true;
        loop {
            if lx.peek().is_none() {
                if first {
                    return Err(syntax("empty input".into()));
                }
                break;
            }
            let negative = match lx.sign() {
                Some(n) => n,
                None if first => false,
                None => return Err(syntax("expected '+' or '-' between terms".into())),
            };
            first = false;
            let coeff = lx.integer();
            let has_star = if coeff.is_some() && lx.peek() == Some('*') {
                lx.bump();
                true
            } else {
                false
            };
            let exp = if lx.peek() == Some('L') {
                lx.bump();
                if lx.peek() == Some('^') {
                    lx.bump();
                    parse_doubled_exponent(&mut lx).map_err(syntax)?
                } else {
                    2
                }
            } else if has_star || coeff.is_none() {
                return Err(syntax("expected 'L'".into()));
            } else {
                0
            };
            let c = coeff.unwrap_or_else(BigInt::one);
            out.add_term(exp, if negative { -c } else { c });
        }
        Ok(out)
    }
}
