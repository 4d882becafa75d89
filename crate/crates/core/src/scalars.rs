//! Exact scalars: arbitrary-precision rationals and power series in the
//! deformation parameter `h`, truncated at a fixed order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always normalized (lowest terms, positive denominator).
pub type Rational = num_rational::BigRational;

/// Default truncation order: series are exact modulo `h^(N+1)`.
pub const DEFAULT_ORDER: usize = 6;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}

/// Generalized binomial coefficient `binom(alpha, k)`.
pub fn binomial(alpha: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * (alpha - int(j as i64)) / int(j as i64 + 1);
    }
    acc
}

/// Writes a rational the way the CLI prints it: `p` or `p/q`.
pub fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Truncated power series `c_0 + c_1 h + ... + c_N h^N`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HSeries {
    coeffs: Vec<Rational>,
}

impl HSeries {
    pub fn zero(order: usize) -> Self {
        HSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        Self::monomial(order, 0, c)
    }

    /// `c * h^power`; vanishes when `power > order`.
    pub fn monomial(order: usize, power: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero,
    /// extra ones are truncated away.
    pub fn from_coeffs(order: usize, coeffs: &[Rational]) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Lowest power of `h` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(HSeries { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(HSeries { coeffs })
    }

    /// Cauchy product truncated at `h^N`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse modulo `h^(N+1)`.
    pub fn inv(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonUnitSeries);
        }
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = a0.recip();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out.coeffs[k - j];
            }
            out.coeffs[k] = -acc / a0;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        HSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `h^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Drops every coefficient above `h^k` (keeps the stored order).
    pub fn truncate_above(&self, k: usize) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut().skip(k + 1) {
            *c = Rational::zero();
        }
        out
    }

    /// Re-expresses the series at another truncation order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(order, &self.coeffs)
    }

    /// Formats the nonzero terms without the truncation marker.
    pub fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => fmt_rational(&mag, f)?,
                (_, true) => {}
                (_, false) if mag.is_integer() => write!(f, "{}*", mag.numer())?,
                (_, false) => write!(f, "({}/{})*", mag.numer(), mag.denom())?,
            }
            match k {
                0 => {}
                1 => f.write_str("h")?,
                _ => write!(f, "h^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)?;
        write!(f, " + O(h^{})", self.order() + 1)
    }
}

impl<'a> Add<&'a HSeries> for &'a HSeries {
    type Output = HSeries;
    fn add(self, rhs: &'a HSeries) -> HSeries {
        self.try_add(rhs).expect("series orders agree")
    }
}

impl<'a> Sub<&'a HSeries> for &'a HSeries {
    type Output = HSeries;
    fn sub(self, rhs: &'a HSeries) -> HSeries {
        self.try_sub(rhs).expect("series orders agree")
    }
}

impl<'a> Mul<&'a HSeries> for &'a HSeries {
    type Output = HSeries;
    fn mul(self, rhs: &'a HSeries) -> HSeries {
        self.try_mul(rhs).expect("series orders agree")
    }
}

impl Neg for &HSeries {
    type Output = HSeries;
    fn neg(self) -> HSeries {
        HSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl AddAssign<&HSeries> for HSeries {
    fn add_assign(&mut self, rhs: &HSeries) {
        assert_eq!(self.order(), rhs.order(), "series orders agree");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&HSeries> for HSeries {
    fn sub_assign(&mut self, rhs: &HSeries) {
        assert_eq!(self.order(), rhs.order(), "series orders agree");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn s(order: usize, cs: &[i64]) -> HSeries {
        let v: Vec<Rational> = cs.iter().map(|&c| int(c)).collect();
        HSeries::from_coeffs(order, &v)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&s(6, &[1, 1]) + &s(6, &[1, -1]), s(6, &[2]));
        let x = s(6, &[3, 0, 5]);
        assert_eq!(&HSeries::zero(6) + &x, x);
        assert_eq!(&s(6, &[0, 1, 1]) + &s(6, &[0, 0, 1]), s(6, &[0, 1, 2]));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&s(6, &[1, 1]) * &s(6, &[1, -1]), s(6, &[1, 0, -1]));
        let hn = HSeries::monomial(4, 4, int(1));
        assert!((&hn * &s(4, &[0, 1])).is_zero());
        assert_eq!(s(6, &[1, 2]).pow(2), s(6, &[1, 4, 4]));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let err = s(3, &[1]).try_add(&s(4, &[1])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 3, right: 4 });
        assert!(s(3, &[1]).try_mul(&s(5, &[1])).is_err());
    }

    // Long division of 1 by (1 - 2h), done digit by digit on plain integers.
    fn long_division_inverse_of_one_minus_2h(order: usize) -> Vec<i64> {
        let mut remainder = vec![0i64; order + 1];
        remainder[0] = 1;
        let mut quotient = vec![0i64; order + 1];
        for k in 0..=order {
            quotient[k] = remainder[k];
            if k < order {
                remainder[k + 1] += 2 * quotient[k];
            }
        }
        quotient
    }

    #[test]
    fn inverse_matches_long_division() {
        let q = long_division_inverse_of_one_minus_2h(3);
        assert_eq!(q, vec![1, 2, 4, 8]);
        let a = s(3, &[1, -2]);
        let b = a.inv().unwrap();
        assert_eq!(b, s(3, &q));
        assert!((&a * &b).is_one());
        assert!(s(3, &[1]).inv().unwrap().is_one());
        assert_eq!(s(3, &[0, 1]).inv().unwrap_err(), Error::NonUnitSeries);
        assert_eq!(Error::NonUnitSeries.to_string(), "non-unit series");
    }

    #[test]
    fn display_shows_truncation_marker() {
        let a = HSeries::from_coeffs(3, &[int(1), rat(-1, 2), int(0), int(3)]);
        assert_eq!(a.to_string(), "1 - (1/2)*h + 3*h^3 + O(h^4)");
        assert_eq!(HSeries::zero(2).to_string(), "0 + O(h^3)");
    }

    #[test]
    fn shift_and_truncate() {
        assert_eq!(s(3, &[1, 2, 3, 4]).shift(2), s(3, &[0, 0, 1, 2]));
        assert_eq!(s(3, &[1, 2, 3, 4]).truncate_above(1), s(3, &[1, 2]));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
    }

    fn series() -> impl Strategy<Value = HSeries> {
        proptest::collection::vec((-6i64..6, 1i64..4), 5).prop_map(|v| {
            let cs: Vec<Rational> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
            HSeries::from_coeffs(4, &cs)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in series(), b in series(), c in series()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn inverse_is_two_sided(a in series()) {
            prop_assume!(!a.coeff(0).is_zero());
            let b = a.inv().unwrap();
            prop_assert!((&a * &b).is_one());
        }
    }
}
