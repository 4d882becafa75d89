use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use core::cell::RefCell;

use super::{Alphabet, Element, Gen, Generator, Monomial, Presentation, Target, WordPoly};
use crate::error::{Error, Result};
use crate::report::{sort_checks, Check};
use crate::scalars::{int, HSeries, Rational};

/// Rewriting engine for one presentation.
///
/// Products are reduced by right-multiplying PBW monomials one generator at
/// a time: when the new letter sits below the last letter of the monomial,
/// the adjacent pair is swapped with its rule and both pieces are reduced
/// recursively. Every `(monomial, generator)` and `(monomial, monomial)`
/// product is memoized, so derived rules such as `X^k V-` or
/// `cosh(hX) V-` are generated once per engine.
///
/// The memo tables live behind a `RefCell`: an engine can be sent to another
/// thread but not shared; parallel callers build one engine each.
pub struct Engine {
    pres: Presentation,
    gen_memo: RefCell<BTreeMap<(Monomial, Gen), Arc<Element>>>,
    pair_memo: RefCell<BTreeMap<(Monomial, Monomial), Arc<Element>>>,
    rule_memo: RefCell<BTreeMap<(Gen, Gen), Arc<Element>>>,
}

impl Engine {
    pub fn new(alphabet: Alphabet, order: usize) -> Self {
        Self::from_presentation(Presentation::new(alphabet, order))
    }

    pub fn deformed(order: usize) -> Self {
        Self::new(Alphabet::Deformed, order)
    }

    pub fn classical(order: usize) -> Self {
        Self::new(Alphabet::Classical, order)
    }

    pub fn from_presentation(pres: Presentation) -> Self {
        Engine {
            pres,
            gen_memo: RefCell::new(BTreeMap::new()),
            pair_memo: RefCell::new(BTreeMap::new()),
            rule_memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.pres.alphabet()
    }

    pub fn order(&self) -> usize {
        self.pres.order()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.alphabet(), self.order())
    }

    pub fn one(&self) -> Element {
        Element::one(self.alphabet(), self.order())
    }

    pub fn gen(&self, g: Gen) -> Element {
        Element::gen(self.alphabet(), self.order(), g)
    }

    pub fn scalar(&self, c: Rational) -> Element {
        Element::scalar(self.alphabet(), HSeries::constant(self.order(), c))
    }

    pub fn series(&self, c: HSeries) -> Element {
        Element::scalar(self.alphabet(), c)
    }

    pub fn monomial(&self, m: Monomial) -> Element {
        self.mul_mono_mono(Monomial::ONE, m).as_ref().clone()
    }

    fn own(&self, e: &Element) -> Result<()> {
        if e.alphabet() != self.alphabet() {
            return Err(Error::MixedAlphabet);
        }
        if e.order() != self.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: e.order() });
        }
        Ok(())
    }

    /// PBW normal form of a scaled word.
    pub fn normal_form(&self, word: &[Generator], coeff: &HSeries) -> Result<Element> {
        let mut cur = self.series(coeff.clone());
        for g in word {
            if g.alphabet != self.alphabet() {
                return Err(Error::MixedAlphabet);
            }
            cur = self.mul_gen(&cur, g.gen);
        }
        Ok(cur)
    }

    /// Normal form of a word polynomial.
    pub fn reduce(&self, p: &WordPoly) -> Result<Element> {
        p.eval(self)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.own(a)?;
        self.own(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &Element, b: &Element) -> Element {
        let mut out = self.zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let c = ca * cb;
                if c.is_zero() {
                    continue;
                }
                out.add_scaled(&self.mul_mono_mono(*ma, *mb), &c);
            }
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn product(&self, factors: &[&Element]) -> Result<Element> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &Element, k: usize) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Right multiplication by a single generator.
    pub fn mul_gen(&self, a: &Element, g: Gen) -> Element {
        let mut out = self.zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.mul_mono_gen(*m, g), c);
        }
        out
    }

    /// `ab - (-1)^{p(a)p(b)} ba` for homogeneous `a`, `b`.
    pub fn super_bracket(&self, a: &Element, b: &Element) -> Result<Element> {
        let pa = a.parity().ok_or(Error::NonHomogeneous)?;
        let pb = b.parity().ok_or(Error::NonHomogeneous)?;
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        let mut out = ab;
        out.add_scaled_rational(&ba, &int(-pa.koszul(pb)));
        Ok(out)
    }

    /// Plain commutator `ab - ba`, regardless of parity.
    pub fn commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        self.mul(a, b)?.try_sub(&self.mul(b, a)?)
    }

    /// Plain anticommutator `ab + ba`.
    pub fn anticommutator(&self, a: &Element, b: &Element) -> Result<Element> {
        self.mul(a, b)?.try_add(&self.mul(b, a)?)
    }

    /// `exp(lambda h X)` expanded up to `h^N`.
    pub fn series_of_x(&self, lambda: &Rational) -> Element {
        let coeffs = super::presentation::exp_hx(self.order(), lambda);
        Element::x_polynomial(self.alphabet(), &coeffs)
    }

    /// `sum_k c_k X^k`.
    pub fn x_function(&self, coeffs: &[HSeries]) -> Element {
        Element::x_polynomial(self.alphabet(), coeffs)
    }

    /// Normal form of the product of two PBW monomials.
    pub(crate) fn mono_product(&self, m: Monomial, n: Monomial) -> Arc<Element> {
        self.mul_mono_mono(m, n)
    }

    fn mul_mono_gen(&self, m: Monomial, g: Gen) -> Arc<Element> {
        if let Some(hit) = self.gen_memo.borrow().get(&(m, g)) {
            return hit.clone();
        }
        let result = match m.strip_last() {
            None => self.gen(g),
            Some((_, last)) if g > last || (g == last && !g.parity().is_odd()) => {
                Element::term(self.alphabet(), m.push_ordered(g), HSeries::one(self.order()))
            }
            Some((rest, last)) if g == last => {
                let sq = self.rule(last, g);
                self.mul_mono_elem(rest, &sq)
            }
            Some((rest, last)) => {
                let sign = self.pres.swap(last, g).expect("swap rule for every descent").sign;
                let swapped = self.mul_gen(&self.mul_mono_gen(rest, g), last);
                let mut out = swapped.scale_rational(&int(sign));
                let corr = self.rule(last, g);
                out.add_scaled(&self.mul_mono_elem(rest, &corr), &HSeries::one(self.order()));
                out
            }
        };
        let result = Arc::new(result);
        self.gen_memo.borrow_mut().insert((m, g), result.clone());
        result
    }

    /// Normal form of a swap correction (`left > right`) or of a square (`left == right`).
    fn rule(&self, left: Gen, right: Gen) -> Arc<Element> {
        if let Some(hit) = self.rule_memo.borrow().get(&(left, right)) {
            return hit.clone();
        }
        let poly = if left == right {
            self.pres.square(left).expect("odd generator square").clone()
        } else {
            self.pres.swap(left, right).expect("swap rule").correction.clone()
        };
        let nf = Arc::new(poly.eval(self).expect("presentation words share the alphabet"));
        self.rule_memo.borrow_mut().insert((left, right), nf.clone());
        nf
    }

    fn mul_mono_elem(&self, m: Monomial, e: &Element) -> Element {
        let mut out = self.zero();
        for (n, c) in e.terms() {
            out.add_scaled(&self.mul_mono_mono(m, *n), c);
        }
        out
    }

    fn mul_mono_mono(&self, m: Monomial, n: Monomial) -> Arc<Element> {
        let one = HSeries::one(self.order());
        // already ordered: concatenate directly
        let first_n = Gen::ALL.into_iter().find(|g| n.exp(*g) > 0);
        match (m.last(), first_n) {
            (None, _) => return Arc::new(Element::term(self.alphabet(), n, one)),
            (_, None) => return Arc::new(Element::term(self.alphabet(), m, one)),
            (Some(l), Some(f)) if l < f || (l == f && !l.parity().is_odd()) => {
                let mut e = m;
                for (slot, add) in e.0.iter_mut().zip(n.0) {
                    *slot += add;
                }
                return Arc::new(Element::term(self.alphabet(), e, one));
            }
            _ => {}
        }
        if let Some(hit) = self.pair_memo.borrow().get(&(m, n)) {
            return hit.clone();
        }
        let (rest, g) = n.strip_last().expect("non-empty");
        let result = Arc::new(self.mul_gen(&self.mul_mono_mono(m, rest), g));
        self.pair_memo.borrow_mut().insert((m, n), result.clone());
        result
    }
}

impl Target for Engine {
    type Value = Element;

    fn source(&self) -> Alphabet {
        self.alphabet()
    }

    fn unit(&self) -> Element {
        self.one()
    }

    fn zero(&self) -> Element {
        Engine::zero(self)
    }

    fn image(&self, g: Gen) -> Result<Element> {
        Ok(self.gen(g))
    }

    fn product(&self, a: &Element, b: &Element) -> Element {
        self.mul_unchecked(a, b)
    }

    fn accumulate(&self, acc: &mut Element, v: &Element, c: &HSeries) {
        acc.add_scaled(v, c);
    }
}

/// Normal form of every defining relation's residual, in both alphabets.
pub fn check_relations(order: usize) -> alloc::vec::Vec<Check> {
    let mut out = alloc::vec::Vec::new();
    for alphabet in [Alphabet::Deformed, Alphabet::Classical] {
        let engine = Engine::new(alphabet, order);
        let tag = match alphabet {
            Alphabet::Deformed => "deformed",
            Alphabet::Classical => "classical",
        };
        for rel in engine.presentation().relations() {
            let id = alloc::format!("relations/{tag}/{}", rel.id);
            out.push(match engine.reduce(&rel.residual()) {
                Ok(r) => Check::residual(id, order, r.is_zero(), &r),
                Err(e) => Check::fail(id, order, alloc::format!("{e}")),
            });
        }
    }
    sort_checks(&mut out);
    out
}
