//! Hopf superalgebra structure: coproduct, counit and antipode on both
//! alphabets, graded tensor products, and the axiom verifiers.
//!
//! The deformed coproduct is generated from
//!
//! ```text
//! Δ(X)  = X ⊗ 1 + 1 ⊗ X
//! Δ(V±) = V± ⊗ T^{-1/2} + T^{1/2} ⊗ V±
//! Δ(H)  = H ⊗ T^{-1} + T ⊗ H + 2h V+T^{1/2} ⊗ V+T^{-1/2}
//! Δ(Y)  = Y ⊗ T^{-1} + T ⊗ Y + 2h V+T^{1/2} ⊗ T^{-1/2}V- + 2h T^{1/2}V- ⊗ V+T^{-1/2}
//! ```
//!
//! with `T = exp(hX)`. The classical algebra carries the primitive coproduct.

mod bialgebra;
mod tensor;

pub use bialgebra::{
    bialgebra_checks, check_hopf_axioms, classical_cocommutator, classical_r, first_order_cocommutator,
    generator_checks, measure_kappa, relation_checks,
};
pub use tensor::{tensor_multiply, Tensor};

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::{Error, Result};
use crate::pbw::{Alphabet, Element, Engine, Gen, Monomial, Target};
use crate::scalars::{int, rat, HSeries};

/// Coproduct, counit and antipode over one engine.
pub struct Hopf<'e> {
    engine: &'e Engine,
    delta_gens: Vec<Tensor>,
    s_gens: Vec<Element>,
    delta_memo: RefCell<BTreeMap<Monomial, Arc<Tensor>>>,
    s_memo: RefCell<BTreeMap<Monomial, Arc<Element>>>,
}

impl<'e> Hopf<'e> {
    pub fn new(engine: &'e Engine) -> Self {
        let (delta_gens, s_gens) = match engine.alphabet() {
            Alphabet::Deformed => deformed_tables(engine),
            Alphabet::Classical => primitive_tables(engine),
        };
        Hopf {
            engine,
            delta_gens,
            s_gens,
            delta_memo: RefCell::new(BTreeMap::new()),
            s_memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn engine(&self) -> &'e Engine {
        self.engine
    }

    pub fn order(&self) -> usize {
        self.engine.order()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.engine.alphabet()
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

    pub fn tensor_multiply(&self, a: &Tensor, b: &Tensor) -> Result<Tensor> {
        tensor_multiply(self.engine, a, b)
    }

    pub fn unit(&self, rank: usize) -> Tensor {
        Tensor::unit(self.alphabet(), self.order(), rank)
    }

    /// Deformed coproduct; classical elements go through [`Hopf::classical_coproduct`].
    pub fn coproduct(&self, el: &Element) -> Result<Tensor> {
        if el.alphabet() != Alphabet::Deformed {
            return Err(Error::WrongAlphabet("coproduct expects deformed generators"));
        }
        self.delta(el)
    }

    /// Primitive extension `g -> g ⊗ 1 + 1 ⊗ g` on the classical algebra.
    pub fn classical_coproduct(&self, el: &Element) -> Result<Tensor> {
        if el.alphabet() != Alphabet::Classical {
            return Err(Error::WrongAlphabet("classical coproduct expects classical generators"));
        }
        self.delta(el)
    }

    /// Coproduct in whichever structure this engine carries.
    pub fn delta(&self, el: &Element) -> Result<Tensor> {
        self.own(el)?;
        let mut out = Tensor::zero(self.alphabet(), self.order(), 2);
        for (m, c) in el.terms() {
            out.add_scaled(&self.delta_monomial(*m), c);
        }
        Ok(out)
    }

    pub fn delta_gen(&self, g: Gen) -> &Tensor {
        &self.delta_gens[g.index()]
    }

    fn delta_monomial(&self, m: Monomial) -> Arc<Tensor> {
        if let Some(hit) = self.delta_memo.borrow().get(&m) {
            return hit.clone();
        }
        let value = match m.strip_last() {
            None => self.unit(2),
            Some((rest, g)) => {
                let left = self.delta_monomial(rest);
                tensor_multiply(self.engine, &left, self.delta_gen(g)).expect("same engine")
            }
        };
        let value = Arc::new(value);
        self.delta_memo.borrow_mut().insert(m, value.clone());
        value
    }

    /// Trivial character: the constant term.
    pub fn counit(&self, el: &Element) -> HSeries {
        el.constant_term()
    }

    pub fn antipode(&self, el: &Element) -> Result<Element> {
        self.own(el)?;
        let mut out = self.engine.zero();
        for (m, c) in el.terms() {
            out.add_scaled(&self.antipode_monomial(*m), c);
        }
        Ok(out)
    }

    pub fn antipode_gen(&self, g: Gen) -> &Element {
        &self.s_gens[g.index()]
    }

    /// `S(u g) = (-1)^{p(u)p(g)} S(g) S(u)`.
    fn antipode_monomial(&self, m: Monomial) -> Arc<Element> {
        if let Some(hit) = self.s_memo.borrow().get(&m) {
            return hit.clone();
        }
        let value = match m.strip_last() {
            None => self.engine.one(),
            Some((rest, g)) => {
                let s_rest = self.antipode_monomial(rest);
                let p = self.engine.mul_unchecked(self.antipode_gen(g), &s_rest);
                if rest.parity().is_odd() && g.parity().is_odd() {
                    p.neg()
                } else {
                    p
                }
            }
        };
        let value = Arc::new(value);
        self.s_memo.borrow_mut().insert(m, value.clone());
        value
    }

    /// `(Δ ⊗ id)` on a rank-2 tensor.
    pub fn delta_left(&self, t: &Tensor) -> Tensor {
        self.extend_leg(t, 0)
    }

    /// `(id ⊗ Δ)` on a rank-2 tensor.
    pub fn delta_right(&self, t: &Tensor) -> Tensor {
        self.extend_leg(t, 1)
    }

    fn extend_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        assert_eq!(t.rank(), 2, "leg coproduct acts on rank-2 tensors");
        let mut out = Tensor::zero(t.alphabet(), t.order(), 3);
        for (key, c) in t.terms() {
            let d = self.delta_monomial(key[leg]);
            for (dk, dc) in d.terms() {
                let k = if leg == 0 { vec![dk[0], dk[1], key[1]] } else { vec![key[0], dk[0], dk[1]] };
                out.add_term(k, &(c * dc));
            }
        }
        out
    }

    /// `(ε ⊗ id)` on a rank-2 tensor.
    pub fn counit_left(&self, t: &Tensor) -> Element {
        self.contract(t, |m, n| (m.is_one()).then(|| self.engine.monomial(n)))
    }

    /// `(id ⊗ ε)` on a rank-2 tensor.
    pub fn counit_right(&self, t: &Tensor) -> Element {
        self.contract(t, |m, n| (n.is_one()).then(|| self.engine.monomial(m)))
    }

    /// `μ(S ⊗ id)` on a rank-2 tensor.
    pub fn antipode_left(&self, t: &Tensor) -> Element {
        self.contract(t, |m, n| {
            Some(self.engine.mul_unchecked(&self.antipode_monomial(m), &self.engine.monomial(n)))
        })
    }

    /// `μ(id ⊗ S)` on a rank-2 tensor.
    pub fn antipode_right(&self, t: &Tensor) -> Element {
        self.contract(t, |m, n| {
            Some(self.engine.mul_unchecked(&self.engine.monomial(m), &self.antipode_monomial(n)))
        })
    }

    fn contract(&self, t: &Tensor, f: impl Fn(Monomial, Monomial) -> Option<Element>) -> Element {
        assert_eq!(t.rank(), 2, "contraction acts on rank-2 tensors");
        let mut out = self.engine.zero();
        for (key, c) in t.terms() {
            if let Some(e) = f(key[0], key[1]) {
                out.add_scaled(&e, c);
            }
        }
        out
    }

    /// Evaluates words into `A ⊗ A` through the coproduct.
    pub fn coproduct_target(&self) -> CoproductTarget<'_, 'e> {
        CoproductTarget(self)
    }

    /// Evaluates words through the antipode, as an anti-homomorphism.
    pub fn antipode_target(&self) -> AntipodeTarget<'_, 'e> {
        AntipodeTarget(self)
    }
}

pub struct CoproductTarget<'a, 'e>(&'a Hopf<'e>);

impl Target for CoproductTarget<'_, '_> {
    type Value = Tensor;

    fn source(&self) -> Alphabet {
        self.0.alphabet()
    }

    fn unit(&self) -> Tensor {
        self.0.unit(2)
    }

    fn zero(&self) -> Tensor {
        Tensor::zero(self.0.alphabet(), self.0.order(), 2)
    }

    fn image(&self, g: Gen) -> Result<Tensor> {
        Ok(self.0.delta_gen(g).clone())
    }

    fn product(&self, a: &Tensor, b: &Tensor) -> Tensor {
        self.0.tensor_multiply(a, b).expect("same engine")
    }

    fn accumulate(&self, acc: &mut Tensor, v: &Tensor, c: &HSeries) {
        acc.add_scaled(v, c);
    }
}

pub struct AntipodeTarget<'a, 'e>(&'a Hopf<'e>);

impl Target for AntipodeTarget<'_, '_> {
    type Value = Element;

    fn source(&self) -> Alphabet {
        self.0.alphabet()
    }

    fn unit(&self) -> Element {
        self.0.engine.one()
    }

    fn zero(&self) -> Element {
        self.0.engine.zero()
    }

    fn image(&self, g: Gen) -> Result<Element> {
        Ok(self.0.antipode_gen(g).clone())
    }

    /// `S(u) * S(g) -> (-1)^{p(u)p(g)} S(g) S(u)`; parity of `S(u)` is that of `u`.
    fn product(&self, a: &Element, b: &Element) -> Element {
        let p = self.0.engine.mul_unchecked(b, a);
        let odd = |e: &Element| e.parity().is_some_and(|p| p.is_odd());
        if odd(a) && odd(b) {
            p.neg()
        } else {
            p
        }
    }

    fn accumulate(&self, acc: &mut Element, v: &Element, c: &HSeries) {
        acc.add_scaled(v, c);
    }
}

fn primitive_tables(engine: &Engine) -> (Vec<Tensor>, Vec<Element>) {
    let one = engine.one();
    let deltas = Gen::ALL
        .iter()
        .map(|&g| {
            let e = engine.gen(g);
            let mut t = Tensor::outer(&[&e, &one]).expect("same engine");
            t.add_scaled(&Tensor::outer(&[&one, &e]).expect("same engine"), &HSeries::one(engine.order()));
            t
        })
        .collect();
    let antipodes = Gen::ALL.iter().map(|&g| engine.gen(g).neg()).collect();
    (deltas, antipodes)
}

fn deformed_tables(engine: &Engine) -> (Vec<Tensor>, Vec<Element>) {
    let n = engine.order();
    let mul = |a: &Element, b: &Element| engine.mul_unchecked(a, b);
    let outer = |a: &Element, b: &Element| Tensor::outer(&[a, b]).expect("same engine");
    let one = engine.one();
    let t = engine.series_of_x(&int(1));
    let t_inv = engine.series_of_x(&int(-1));
    let t_half = engine.series_of_x(&rat(1, 2));
    let t_mhalf = engine.series_of_x(&rat(-1, 2));
    let (y, vm, h, vp, x) = (
        engine.gen(Gen::Y),
        engine.gen(Gen::VMinus),
        engine.gen(Gen::H),
        engine.gen(Gen::VPlus),
        engine.gen(Gen::X),
    );
    let two_h = HSeries::monomial(n, 1, int(2));
    let one_s = HSeries::one(n);

    let vp_th = mul(&vp, &t_half);
    let vp_tmh = mul(&vp, &t_mhalf);

    let mut d_h = outer(&h, &t_inv);
    d_h.add_scaled(&outer(&t, &h), &one_s);
    d_h.add_scaled(&outer(&vp_th, &vp_tmh), &two_h);

    let mut d_x = outer(&x, &one);
    d_x.add_scaled(&outer(&one, &x), &one_s);

    let mut d_y = outer(&y, &t_inv);
    d_y.add_scaled(&outer(&t, &y), &one_s);
    d_y.add_scaled(&outer(&vp_th, &mul(&t_mhalf, &vm)), &two_h);
    d_y.add_scaled(&outer(&mul(&t_half, &vm), &vp_tmh), &two_h);

    let odd = |v: &Element| {
        let mut d = outer(v, &t_mhalf);
        d.add_scaled(&outer(&t_half, v), &one_s);
        d
    };
    let d_vm = odd(&vm);
    let d_vp = odd(&vp);

    let vp2 = mul(&vp, &vp);
    let h_s = |k: usize, c| HSeries::monomial(n, k, c);
    let mut s_h = h.neg();
    s_h.add_scaled(&vp2, &h_s(1, int(-2)));
    let mut s_vm = vm.neg();
    s_vm.add_scaled(&vp, &h_s(1, rat(1, 2)));
    let mut s_y = y.neg();
    s_y.add_scaled(&h, &h_s(1, int(1)));
    s_y.add_scaled(&vp2, &h_s(2, int(1)));

    // Gen order: Y, V-, H, V+, X
    let deltas = vec![d_y, d_vm, d_h, d_vp, d_x];
    let antipodes = vec![s_y, s_vm, s_h, vp.neg(), x.neg()];
    (deltas, antipodes)
}

#[cfg(test)]
mod tests;
