use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{Alphabet, Gen, Monomial, Parity};
use crate::error::{Error, Result};
use crate::scalars::{HSeries, Rational};

/// Finite linear combination of PBW monomials with series coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    alphabet: Alphabet,
    order: usize,
    terms: BTreeMap<Monomial, HSeries>,
}

impl Element {
    pub fn zero(alphabet: Alphabet, order: usize) -> Self {
        Element { alphabet, order, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet, order: usize) -> Self {
        Self::scalar(alphabet, HSeries::one(order))
    }

    pub fn scalar(alphabet: Alphabet, c: HSeries) -> Self {
        Self::term(alphabet, Monomial::ONE, c)
    }

    pub fn gen(alphabet: Alphabet, order: usize, g: Gen) -> Self {
        Self::term(alphabet, Monomial::gen(g), HSeries::one(order))
    }

    pub fn term(alphabet: Alphabet, m: Monomial, c: HSeries) -> Self {
        let mut e = Element::zero(alphabet, c.order());
        e.add_term(m, &c);
        e
    }

    /// `sum_k c_k X^k` for a list of series coefficients.
    pub fn x_polynomial(alphabet: Alphabet, coeffs: &[HSeries]) -> Self {
        let order = coeffs.first().map_or(0, HSeries::order);
        let mut e = Element::zero(alphabet, order);
        for (k, c) in coeffs.iter().enumerate() {
            e.add_term(Monomial::from_exponents(0, 0, 0, 0, k as u16), c);
        }
        e
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &HSeries)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> HSeries {
        self.terms.get(m).cloned().unwrap_or_else(|| HSeries::zero(self.order))
    }

    pub fn add_term(&mut self, m: Monomial, c: &HSeries) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Element, c: &HSeries) {
        for (m, a) in &other.terms {
            self.add_term(*m, &(a * c));
        }
    }

    pub fn add_scaled_rational(&mut self, other: &Element, c: &Rational) {
        for (m, a) in &other.terms {
            self.add_term(*m, &a.scale(c));
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Element {
        Element {
            alphabet: self.alphabet,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &HSeries) -> Element {
        let mut out = Element::zero(self.alphabet, self.order);
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Element {
        let mut out = Element::zero(self.alphabet, self.order);
        out.add_scaled_rational(self, c);
        out
    }

    pub(crate) fn compatible(&self, other: &Element) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::MixedAlphabet);
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    /// Parity if every monomial has the same parity; `Some(Even)` for zero.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Drops every coefficient above `h^k`.
    pub fn truncate_above(&self, k: usize) -> Element {
        let mut out = Element::zero(self.alphabet, self.order);
        for (m, c) in &self.terms {
            out.add_term(*m, &c.truncate_above(k));
        }
        out
    }

    /// Coefficient of `h^k` as an element with constant coefficients.
    pub fn h_coefficient(&self, k: usize) -> Element {
        let mut out = Element::zero(self.alphabet, self.order);
        for (m, c) in &self.terms {
            out.add_term(*m, &HSeries::constant(self.order, c.coeff(k).clone()));
        }
        out
    }

    /// Sets `h = 0` and renames into the classical alphabet.
    pub fn classical_limit(&self) -> Element {
        self.h_coefficient(0).with_alphabet(Alphabet::Classical)
    }

    pub fn with_alphabet(&self, alphabet: Alphabet) -> Element {
        Element { alphabet, order: self.order, terms: self.terms.clone() }
    }

    pub fn with_order(&self, order: usize) -> Element {
        let mut out = Element::zero(self.alphabet, order);
        for (m, c) in &self.terms {
            out.add_term(*m, &c.with_order(order));
        }
        out
    }

    /// Constant part (coefficient of the empty monomial).
    pub fn constant_term(&self) -> HSeries {
        self.coefficient(&Monomial::ONE)
    }

    /// Largest total degree among stored monomials.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Pretty form as a parseable expression, one term per `(h^k, monomial)`.
    pub fn to_expr_string(&self) -> String {
        alloc::format!("{self}")
    }

    fn sorted_atoms(&self) -> Vec<(usize, &Monomial, &Rational)> {
        let mut atoms: Vec<(usize, &Monomial, &Rational)> = Vec::new();
        for (m, c) in &self.terms {
            for (k, r) in c.coeffs().iter().enumerate() {
                if !r.is_zero() {
                    atoms.push((k, m, r));
                }
            }
        }
        atoms.sort_by(|a, b| (a.0, a.1.degree(), a.1).cmp(&(b.0, b.1.degree(), b.1)));
        atoms
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms = self.sorted_atoms();
        if atoms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, m, r)) in atoms.into_iter().enumerate() {
            let neg = r.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = r.abs();
            let mut wrote = false;
            if !mag.is_one() || (k == 0 && m.is_one()) {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
                wrote = true;
            }
            if k > 0 {
                if wrote {
                    f.write_str("*")?;
                }
                if k == 1 {
                    f.write_str("h")?;
                } else {
                    write!(f, "h^{k}")?;
                }
                wrote = true;
            }
            if !m.is_one() {
                if wrote {
                    f.write_str("*")?;
                }
                m.fmt_in(self.alphabet, f)?;
            }
        }
        Ok(())
    }
}
