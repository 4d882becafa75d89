use alloc::vec;
use alloc::vec::Vec;

use super::{Alphabet, Element, Gen};
use crate::error::{Error, Result};
use crate::scalars::{HSeries, Rational};

/// An algebra into which words over the generators can be evaluated
/// homomorphically: the engine itself, tensor powers via the coproduct,
/// matrix representations, or another alphabet through a deformation map.
pub trait Target {
    type Value: Clone;

    /// Alphabet of the generators this target accepts.
    fn source(&self) -> Alphabet;
    fn unit(&self) -> Self::Value;
    fn zero(&self) -> Self::Value;
    fn image(&self, g: Gen) -> Result<Self::Value>;
    fn product(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// `acc += c * v`
    fn accumulate(&self, acc: &mut Self::Value, v: &Self::Value, c: &HSeries);
}

/// Unreduced noncommutative polynomial: a sum of scaled words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordPoly {
    alphabet: Alphabet,
    order: usize,
    terms: Vec<(HSeries, Vec<Gen>)>,
}

impl WordPoly {
    pub fn zero(alphabet: Alphabet, order: usize) -> Self {
        WordPoly { alphabet, order, terms: Vec::new() }
    }

    pub fn scalar(alphabet: Alphabet, c: HSeries) -> Self {
        let order = c.order();
        WordPoly { alphabet, order, terms: vec![(c, Vec::new())] }
    }

    pub fn one(alphabet: Alphabet, order: usize) -> Self {
        Self::scalar(alphabet, HSeries::one(order))
    }

    pub fn word(alphabet: Alphabet, order: usize, word: &[Gen]) -> Self {
        WordPoly { alphabet, order, terms: vec![(HSeries::one(order), word.to_vec())] }
    }

    pub fn gen(alphabet: Alphabet, order: usize, g: Gen) -> Self {
        Self::word(alphabet, order, &[g])
    }

    /// `sum_k c_k g^k`
    pub fn power_series(alphabet: Alphabet, g: Gen, coeffs: &[HSeries]) -> Self {
        let order = coeffs.first().map_or(0, HSeries::order);
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), vec![g; k]))
            .collect();
        WordPoly { alphabet, order, terms }
    }

    pub fn from_element(e: &Element) -> Self {
        let terms = e.terms().map(|(m, c)| (c.clone(), m.word())).collect();
        WordPoly { alphabet: e.alphabet(), order: e.order(), terms }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &[(HSeries, Vec<Gen>)] {
        &self.terms
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    pub fn add(&self, other: &WordPoly) -> WordPoly {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out
    }

    pub fn sub(&self, other: &WordPoly) -> WordPoly {
        self.add(&other.scale_rational(&crate::scalars::int(-1)))
    }

    pub fn scale(&self, c: &HSeries) -> WordPoly {
        let terms =
            self.terms.iter().map(|(a, w)| (a * c, w.clone())).filter(|(a, _)| !a.is_zero()).collect();
        WordPoly { alphabet: self.alphabet, order: self.order, terms }
    }

    pub fn scale_rational(&self, c: &Rational) -> WordPoly {
        self.scale(&HSeries::constant(self.order, c.clone()))
    }

    /// Concatenation product.
    pub fn mul(&self, other: &WordPoly) -> WordPoly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let c = a * b;
                if c.is_zero() {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                terms.push((c, w));
            }
        }
        WordPoly { alphabet: self.alphabet, order: self.order, terms }
    }

    /// `[a, b]` for even-even pairs, `{a, b}` otherwise, taken literally
    /// with parity read off the first word of each operand.
    pub fn super_bracket(&self, other: &WordPoly) -> WordPoly {
        let odd = |p: &WordPoly| {
            p.terms.first().is_some_and(|(_, w)| w.iter().filter(|g| g.parity().is_odd()).count() % 2 == 1)
        };
        let ab = self.mul(other);
        let ba = other.mul(self);
        if odd(self) && odd(other) {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    /// Homomorphic image of the polynomial in `target`.
    pub fn eval<T: Target>(&self, target: &T) -> Result<T::Value> {
        if target.source() != self.alphabet {
            return Err(Error::MixedAlphabet);
        }
        let mut images: [Option<T::Value>; 5] = Default::default();
        let mut acc = target.zero();
        for (c, word) in &self.terms {
            let mut v = target.unit();
            for &g in word {
                if images[g.index()].is_none() {
                    images[g.index()] = Some(target.image(g)?);
                }
                let img = images[g.index()].as_ref().expect("cached");
                v = target.product(&v, img);
            }
            target.accumulate(&mut acc, &v, c);
        }
        Ok(acc)
    }
}
