use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pbw::{Alphabet, Element, Engine, Monomial, Parity};
use crate::scalars::{HSeries, Rational};

/// Graded tensor of rank 2 or 3 over PBW monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    alphabet: Alphabet,
    order: usize,
    rank: usize,
    terms: BTreeMap<Vec<Monomial>, HSeries>,
}

impl Tensor {
    pub fn zero(alphabet: Alphabet, order: usize, rank: usize) -> Self {
        Tensor { alphabet, order, rank, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`
    pub fn unit(alphabet: Alphabet, order: usize, rank: usize) -> Self {
        let mut t = Self::zero(alphabet, order, rank);
        t.add_term(vec![Monomial::ONE; rank], &HSeries::one(order));
        t
    }

    /// Outer product `a_1 ⊗ a_2 ⊗ ...` of elements (no signs: plain tensor product).
    pub fn outer(legs: &[&Element]) -> Result<Self> {
        let first = legs.first().expect("at least one leg");
        for leg in legs {
            first.compatible(leg)?;
        }
        let mut t = Self::zero(first.alphabet(), first.order(), legs.len());
        t.add_outer(legs, &HSeries::one(first.order()));
        Ok(t)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &HSeries)> {
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

    pub fn coefficient(&self, key: &[Monomial]) -> HSeries {
        self.terms.get(key).cloned().unwrap_or_else(|| HSeries::zero(self.order))
    }

    pub fn add_term(&mut self, key: Vec<Monomial>, c: &HSeries) {
        debug_assert_eq!(key.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor, c: &HSeries) {
        for (k, a) in &other.terms {
            self.add_term(k.clone(), &(a * c));
        }
    }

    pub(crate) fn compatible(&self, other: &Tensor) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::MixedAlphabet);
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Tensor) -> Result<Tensor> {
        self.compatible(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &HSeries::one(self.order));
        Ok(out)
    }

    pub fn try_sub(&self, other: &Tensor) -> Result<Tensor> {
        self.compatible(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-&HSeries::one(self.order));
        Ok(out)
    }

    pub fn scale(&self, c: &HSeries) -> Tensor {
        let mut out = Tensor::zero(self.alphabet, self.order, self.rank);
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Tensor {
        self.scale(&HSeries::constant(self.order, c.clone()))
    }

    pub fn truncate_above(&self, k: usize) -> Tensor {
        let mut out = Tensor::zero(self.alphabet, self.order, self.rank);
        for (key, c) in &self.terms {
            out.add_term(key.clone(), &c.truncate_above(k));
        }
        out
    }

    /// Coefficient of `h^k`, as a tensor with constant coefficients.
    pub fn h_coefficient(&self, k: usize) -> Tensor {
        let mut out = Tensor::zero(self.alphabet, self.order, self.rank);
        for (key, c) in &self.terms {
            out.add_term(key.clone(), &HSeries::constant(self.order, c.coeff(k).clone()));
        }
        out
    }

    pub fn with_order(&self, order: usize) -> Tensor {
        let mut out = Tensor::zero(self.alphabet, order, self.rank);
        for (key, c) in &self.terms {
            out.add_term(key.clone(), &c.with_order(order));
        }
        out
    }

    /// Inserts a unit leg at `position`: `t ⊗ 1` for `position = rank`,
    /// `1 ⊗ t` for `position = 0`. The unit is even, so no signs arise.
    pub fn insert_unit_leg(&self, position: usize) -> Tensor {
        assert!(position <= self.rank, "leg position out of range");
        let mut out = Tensor::zero(self.alphabet, self.order, self.rank + 1);
        for (key, c) in &self.terms {
            let mut k = key.clone();
            k.insert(position, Monomial::ONE);
            out.terms.insert(k, c.clone());
        }
        out
    }

    /// Parity of the whole tensor if homogeneous.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|k| k.iter().fold(Parity::Even, |p, m| p + m.parity()));
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Graded flip `a ⊗ b -> (-1)^{p(a)p(b)} b ⊗ a` (rank 2).
    pub fn flip(&self) -> Tensor {
        assert_eq!(self.rank, 2, "flip acts on rank-2 tensors");
        let mut out = Tensor::zero(self.alphabet, self.order, 2);
        for (k, c) in &self.terms {
            let sign = k[0].parity().koszul(k[1].parity());
            let c = if sign < 0 { -c } else { c.clone() };
            out.add_term(vec![k[1], k[0]], &c);
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut atoms: Vec<(usize, &Vec<Monomial>, &Rational)> = Vec::new();
        for (k, c) in &self.terms {
            for (p, r) in c.coeffs().iter().enumerate() {
                if !r.is_zero() {
                    atoms.push((p, k, r));
                }
            }
        }
        atoms.sort_by(|a, b| {
            let da: usize = a.1.iter().map(Monomial::degree).sum();
            let db: usize = b.1.iter().map(Monomial::degree).sum();
            (a.0, da).cmp(&(b.0, db)).then_with(|| b.1.cmp(a.1))
        });
        if atoms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, key, r)) in atoms.into_iter().enumerate() {
            let neg = r.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = r.abs();
            let scaled = !mag.is_one() || p > 0;
            if !mag.is_one() {
                crate::scalars::fmt_rational(&mag, f)?;
                if p > 0 {
                    f.write_str("*")?;
                }
            }
            match p {
                0 => {}
                1 => f.write_str("h")?,
                _ => write!(f, "h^{p}")?,
            }
            if scaled {
                f.write_str("*(")?;
            }
            for (j, m) in key.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ⊗ ")?;
                }
                m.fmt_in(self.alphabet, f)?;
            }
            if scaled {
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

impl Tensor {
    /// `self += c * (legs[0] ⊗ legs[1] ⊗ ...)`
    pub(crate) fn add_outer(&mut self, legs: &[&Element], c: &HSeries) {
        debug_assert_eq!(legs.len(), self.rank);
        let mut stack: Vec<(Vec<Monomial>, HSeries)> = vec![(Vec::new(), c.clone())];
        for leg in legs {
            let mut next = Vec::with_capacity(stack.len() * leg.len());
            for (key, a) in &stack {
                for (m, b) in leg.terms() {
                    let coeff = a * b;
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut k = key.clone();
                    k.push(*m);
                    next.push((k, coeff));
                }
            }
            stack = next;
        }
        for (k, coeff) in stack {
            self.add_term(k, &coeff);
        }
    }
}

/// Koszul sign of `(a_1 ⊗ ... )(b_1 ⊗ ... )`: every `b_j` moves past `a_i`, `i > j`.
pub(crate) fn crossing_sign(a: &[Monomial], b: &[Monomial]) -> bool {
    let mut odd = false;
    for (i, ai) in a.iter().enumerate() {
        if !ai.parity().is_odd() {
            continue;
        }
        for bj in &b[..i] {
            if bj.parity().is_odd() {
                odd = !odd;
            }
        }
    }
    odd
}

/// Graded product of tensors of equal rank, legs reduced in `engine`.
pub fn tensor_multiply(engine: &Engine, a: &Tensor, b: &Tensor) -> Result<Tensor> {
    a.compatible(b)?;
    if engine.alphabet() != a.alphabet() {
        return Err(Error::MixedAlphabet);
    }
    if engine.order() != a.order() {
        return Err(Error::OrderMismatch { left: engine.order(), right: a.order() });
    }
    let mut out = Tensor::zero(a.alphabet, a.order, a.rank);
    for (ka, ca) in &a.terms {
        for (kb, cb) in &b.terms {
            let mut c = ca * cb;
            if c.is_zero() {
                continue;
            }
            if crossing_sign(ka, kb) {
                c = -&c;
            }
            let legs: Vec<_> = ka.iter().zip(kb).map(|(x, y)| engine.mono_product(*x, *y)).collect();
            let refs: Vec<&Element> = legs.iter().map(|e| e.as_ref()).collect();
            out.add_outer(&refs, &c);
        }
    }
    Ok(out)
}
