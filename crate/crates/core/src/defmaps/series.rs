use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pbw::{Alphabet, Element, Monomial};
use crate::scalars::{binomial, factorial, int, HSeries, Rational};

/// Truncated series in `h` whose coefficients are polynomials in one
/// variable: `J+` for the classical alphabet, `X` for the deformed one.
///
/// Only the `h`-degree is truncated. Every function used by the maps is a
/// series in `h*v` (times powers of `h` or `v`), so each `h^i` coefficient
/// stays a finite polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FnSeries {
    alphabet: Alphabet,
    coeffs: Vec<Vec<Rational>>,
}

impl FnSeries {
    pub fn zero(alphabet: Alphabet, order: usize) -> Self {
        FnSeries { alphabet, coeffs: vec![Vec::new(); order + 1] }
    }

    pub fn one(alphabet: Alphabet, order: usize) -> Self {
        Self::constant(alphabet, order, Rational::one())
    }

    pub fn constant(alphabet: Alphabet, order: usize, c: Rational) -> Self {
        Self::monomial(alphabet, order, 0, 0, c)
    }

    /// `c h^i v^j`
    pub fn monomial(alphabet: Alphabet, order: usize, i: usize, j: usize, c: Rational) -> Self {
        let mut s = Self::zero(alphabet, order);
        if i <= order {
            s.set(i, j, c);
        }
        s
    }

    /// The variable `v` itself.
    pub fn var(alphabet: Alphabet, order: usize) -> Self {
        Self::monomial(alphabet, order, 0, 1, Rational::one())
    }

    /// `sum_k c_k (h v)^k`.
    pub fn of_hv(alphabet: Alphabet, order: usize, c: &[Rational]) -> Self {
        let mut s = Self::zero(alphabet, order);
        for (k, ck) in c.iter().enumerate().take(order + 1) {
            s.set(k, k, ck.clone());
        }
        s
    }

    /// `exp(lambda h v)`
    pub fn exp_hv(alphabet: Alphabet, order: usize, lambda: &Rational) -> Self {
        Self::of_hv(alphabet, order, &exp_coeffs(order, lambda))
    }

    pub fn cosh_hv(alphabet: Alphabet, order: usize, lambda: &Rational) -> Self {
        let mut c = exp_coeffs(order, lambda);
        c.iter_mut().skip(1).step_by(2).for_each(|x| *x = Rational::zero());
        Self::of_hv(alphabet, order, &c)
    }

    pub fn sinh_hv(alphabet: Alphabet, order: usize, lambda: &Rational) -> Self {
        let mut c = exp_coeffs(order, lambda);
        c.iter_mut().step_by(2).for_each(|x| *x = Rational::zero());
        Self::of_hv(alphabet, order, &c)
    }

    /// `sinh(lambda h v) / h`, exact to `h^order`.
    pub fn sinh_hv_over_h(alphabet: Alphabet, order: usize, lambda: &Rational) -> Self {
        Self::sinh_hv(alphabet, order + 1, lambda).div_h().expect("odd series")
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs.get(i).and_then(|p| p.get(j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Polynomial in `v` multiplying `h^i`.
    pub fn h_coefficient(&self, i: usize) -> &[Rational] {
        &self.coeffs[i]
    }

    fn set(&mut self, i: usize, j: usize, c: Rational) {
        let p = &mut self.coeffs[i];
        if p.len() <= j {
            p.resize(j + 1, Rational::zero());
        }
        p[j] = c;
        trim(p);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Vec::is_empty)
    }

    fn check(&self, other: &FnSeries) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::MixedAlphabet);
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &FnSeries) -> Result<FnSeries> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, q) in out.coeffs.iter_mut().zip(&other.coeffs) {
            if p.len() < q.len() {
                p.resize(q.len(), Rational::zero());
            }
            for (a, b) in p.iter_mut().zip(q) {
                *a += b;
            }
            trim(p);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &FnSeries) -> Result<FnSeries> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &FnSeries) -> Result<FnSeries> {
        self.check(other)?;
        let n = self.order();
        let mut out = Self::zero(self.alphabet, n);
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_empty() {
                continue;
            }
            for (k, q) in other.coeffs[..=n - i].iter().enumerate() {
                if q.is_empty() {
                    continue;
                }
                let r = &mut out.coeffs[i + k];
                if r.len() < p.len() + q.len() - 1 {
                    r.resize(p.len() + q.len() - 1, Rational::zero());
                }
                for (a, x) in p.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (b, y) in q.iter().enumerate() {
                        r[a + b] += x * y;
                    }
                }
            }
        }
        out.coeffs.iter_mut().for_each(trim);
        Ok(out)
    }

    pub fn neg(&self) -> FnSeries {
        self.scale(&int(-1))
    }

    pub fn scale(&self, c: &Rational) -> FnSeries {
        let mut out = self.clone();
        for p in &mut out.coeffs {
            p.iter_mut().for_each(|a| *a *= c);
            trim(p);
        }
        out
    }

    /// Multiplies by `h^k`.
    pub fn shift_h(&self, k: usize) -> FnSeries {
        let n = self.order();
        let mut out = Self::zero(self.alphabet, n);
        for i in 0..=n {
            if i + k <= n {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Exact division by `h`; the result has order one lower.
    pub fn div_h(&self) -> Result<FnSeries> {
        if !self.coeffs[0].is_empty() {
            return Err(Error::NotDivisible);
        }
        Ok(FnSeries { alphabet: self.alphabet, coeffs: self.coeffs[1..].to_vec() })
    }

    pub fn mul_var(&self) -> FnSeries {
        let mut out = self.clone();
        for p in &mut out.coeffs {
            if !p.is_empty() {
                p.insert(0, Rational::zero());
            }
        }
        out
    }

    /// Exact division by the variable.
    pub fn div_var(&self) -> Result<FnSeries> {
        let mut out = self.clone();
        for p in &mut out.coeffs {
            if p.is_empty() {
                continue;
            }
            if !p[0].is_zero() {
                return Err(Error::NotDivisible);
            }
            p.remove(0);
        }
        Ok(out)
    }

    /// `d/dv`
    pub fn deriv(&self) -> FnSeries {
        let mut out = self.clone();
        for p in &mut out.coeffs {
            if p.is_empty() {
                continue;
            }
            let d: Vec<Rational> = p.iter().enumerate().skip(1).map(|(j, a)| a * int(j as i64)).collect();
            *p = d;
            trim(p);
        }
        out
    }

    /// `v d/dv`
    pub fn euler(&self) -> FnSeries {
        self.deriv().mul_var()
    }

    /// Value at `h = 0`, which must be a plain constant for inversion.
    fn leading_constant(&self) -> Option<Rational> {
        match self.coeffs[0].len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0][0].clone()),
            _ => None,
        }
    }

    /// The series with its `h^0` part removed.
    fn tail(&self) -> FnSeries {
        let mut t = self.clone();
        t.coeffs[0].clear();
        t
    }

    pub fn inv(&self) -> Result<FnSeries> {
        let c0 = self.leading_constant().ok_or(Error::NonUnitSeries)?;
        if c0.is_zero() {
            return Err(Error::NonUnitSeries);
        }
        let r = c0.recip();
        // 1/(c0 + g) = r * sum_k (-r g)^k
        let g = self.tail().scale(&-&r);
        let mut acc = Self::one(self.alphabet, self.order());
        let mut term = acc.clone();
        for _ in 0..self.order() {
            term = term.try_mul(&g)?;
            acc = acc.try_add(&term)?;
        }
        Ok(acc.scale(&r))
    }

    pub fn try_div(&self, other: &FnSeries) -> Result<FnSeries> {
        self.try_mul(&other.inv()?)
    }

    /// `self^alpha` for a series equal to 1 at `h = 0`.
    pub fn pow_rational(&self, alpha: &Rational) -> Result<FnSeries> {
        if self.leading_constant() != Some(Rational::one()) {
            return Err(Error::NonUnitSeries);
        }
        let g = self.tail();
        let coeffs: Vec<Rational> = (0..=self.order()).map(|k| binomial(alpha, k)).collect();
        g.compose(&coeffs)
    }

    pub fn sqrt(&self) -> Result<FnSeries> {
        self.pow_rational(&crate::scalars::rat(1, 2))
    }

    pub fn powi(&self, k: usize) -> FnSeries {
        let mut acc = Self::one(self.alphabet, self.order());
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same shape");
        }
        acc
    }

    /// `sum_k c_k self^k` for a series vanishing at `h = 0`.
    pub fn compose(&self, c: &[Rational]) -> Result<FnSeries> {
        if !self.coeffs[0].is_empty() {
            return Err(Error::NonUnitSeries);
        }
        let mut acc = Self::zero(self.alphabet, self.order());
        let mut power = Self::one(self.alphabet, self.order());
        for (k, ck) in c.iter().enumerate().take(self.order() + 1) {
            if k > 0 {
                power = power.try_mul(self)?;
            }
            if !ck.is_zero() {
                acc = acc.try_add(&power.scale(ck))?;
            }
        }
        Ok(acc)
    }

    pub fn with_order(&self, order: usize) -> FnSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Vec::new());
        FnSeries { alphabet: self.alphabet, coeffs }
    }

    /// `sum c_ij h^i v^j` as an element, `v` placed in the `X`/`J+` slot.
    pub fn to_element(&self) -> Element {
        let n = self.order();
        let mut e = Element::zero(self.alphabet, n);
        for (i, p) in self.coeffs.iter().enumerate() {
            for (j, c) in p.iter().enumerate() {
                if !c.is_zero() {
                    let m = Monomial::from_exponents(0, 0, 0, 0, j as u16);
                    e.add_term(m, &HSeries::monomial(n, i, c.clone()));
                }
            }
        }
        e
    }

    /// Reads a polynomial in `v` with series coefficients back from an element.
    pub fn from_element(e: &Element) -> Result<FnSeries> {
        let mut s = Self::zero(e.alphabet(), e.order());
        for (m, c) in e.terms() {
            let j = m.exp(crate::pbw::Gen::X) as usize;
            if m.degree() != j {
                return Err(Error::WrongAlphabet("not a function of X or J+ alone"));
            }
            for (i, a) in c.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    s.set(i, j, a.clone());
                }
            }
        }
        Ok(s)
    }
}

impl fmt::Display for FnSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(h^{})", self.to_element(), self.order() + 1)
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// `lambda^k / k!`
pub fn exp_coeffs(order: usize, lambda: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut p = Rational::one();
    for k in 0..=order {
        out.push(&p / factorial(k));
        p *= lambda;
    }
    out
}

/// `arcsinh(z) = sum (-1)^n (2n)! / (4^n (n!)^2 (2n+1)) z^(2n+1)`
pub fn arcsinh_coeffs(order: usize) -> Vec<Rational> {
    (0..=order)
        .map(|k| {
            if k % 2 == 0 {
                return Rational::zero();
            }
            let n = (k - 1) / 2;
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            let four_n = (0..n).fold(Rational::one(), |a, _| a * int(4));
            sign * factorial(2 * n) / (four_n * factorial(n) * factorial(n) * int(k as i64))
        })
        .collect()
}

/// `-ln(1 - z) = sum z^k / k`
pub fn neg_log_one_minus_coeffs(order: usize) -> Vec<Rational> {
    (0..=order).map(|k| if k == 0 { Rational::zero() } else { int(k as i64).recip() }).collect()
}

/// `arctanh(z) = sum z^(2k+1) / (2k+1)`
pub fn arctanh_coeffs(order: usize) -> Vec<Rational> {
    (0..=order).map(|k| if k % 2 == 1 { int(k as i64).recip() } else { Rational::zero() }).collect()
}

/// `ln(1 + z) = sum (-1)^(k+1) z^k / k`
pub fn log_one_plus_coeffs(order: usize) -> Vec<Rational> {
    (0..=order)
        .map(|k| match k {
            0 => Rational::zero(),
            _ if k % 2 == 1 => int(k as i64).recip(),
            _ => -int(k as i64).recip(),
        })
        .collect()
}
