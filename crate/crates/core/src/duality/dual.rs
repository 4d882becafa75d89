use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use super::borel::{BorelElement, BorelIndex};
use super::tables::StructureConstants;
use crate::error::{Error, Result};
use crate::hopf::Hopf;
use crate::pbw::{Element, Engine, Monomial, Parity};
use crate::scalars::{factorial, int, HSeries, Rational};

/// Generators `x = e^{100}`, `y = e^{010}`, `z = e^{001}` of the dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DualGen {
    X,
    Y,
    Z,
}

impl DualGen {
    pub const ALL: [DualGen; 3] = [DualGen::X, DualGen::Y, DualGen::Z];

    pub fn index(self) -> BorelIndex {
        match self {
            DualGen::X => BorelIndex::H,
            DualGen::Y => BorelIndex::X,
            DualGen::Z => BorelIndex::V,
        }
    }

    pub fn parity(self) -> Parity {
        self.index().parity()
    }

    pub fn name(self) -> &'static str {
        match self {
            DualGen::X => "x",
            DualGen::Y => "y",
            DualGen::Z => "z",
        }
    }
}

/// Sign rule for `<a ⊗ b, u ⊗ v>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingSign {
    /// `<a, u><b, v>`
    Plain,
    /// `(-1)^{p(b)p(u)} <a, u><b, v>`
    Koszul,
}

impl PairingSign {
    fn sign(self, b: Parity, u: Parity) -> i64 {
        match self {
            PairingSign::Plain => 1,
            PairingSign::Koszul => b.koszul(u),
        }
    }
}

fn word_parity(w: &[DualGen]) -> Parity {
    Parity::from_count(w.iter().filter(|g| **g == DualGen::Z).count())
}

/// Noncommutative polynomial in `x, y, z` with series coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPoly {
    order: usize,
    terms: BTreeMap<Vec<DualGen>, HSeries>,
}

impl DualPoly {
    pub fn zero(order: usize) -> Self {
        DualPoly { order, terms: BTreeMap::new() }
    }

    pub fn scalar(c: HSeries) -> Self {
        let mut p = DualPoly::zero(c.order());
        p.add_term(Vec::new(), &c);
        p
    }

    pub fn one(order: usize) -> Self {
        DualPoly::scalar(HSeries::one(order))
    }

    pub fn gen(order: usize, g: DualGen) -> Self {
        let mut p = DualPoly::zero(order);
        p.add_term(vec![g], &HSeries::one(order));
        p
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<DualGen>, &HSeries)> {
        self.terms.iter()
    }

    fn add_term(&mut self, w: Vec<DualGen>, c: &HSeries) {
        let entry = self.terms.entry(w).or_insert_with(|| HSeries::zero(self.order));
        *entry += c;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn add(&self, other: &DualPoly) -> DualPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &DualPoly) -> DualPoly {
        self.add(&other.scale(&HSeries::constant(self.order, int(-1))))
    }

    pub fn scale(&self, c: &HSeries) -> DualPoly {
        let mut out = DualPoly::zero(self.order);
        for (w, d) in &self.terms {
            out.add_term(w.clone(), &(d * c));
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> DualPoly {
        self.scale(&HSeries::constant(self.order, c.clone()))
    }

    pub fn mul(&self, other: &DualPoly) -> DualPoly {
        let mut out = DualPoly::zero(self.order);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &(c * d));
            }
        }
        out
    }

    pub fn product(order: usize, factors: &[&DualPoly]) -> DualPoly {
        factors.iter().fold(DualPoly::one(order), |acc, f| acc.mul(f))
    }

    pub fn pow(&self, k: usize) -> DualPoly {
        (0..k).fold(DualPoly::one(self.order), |acc, _| acc.mul(self))
    }

    /// `Σ_k c_k x^k` for `k <= max`.
    pub fn x_series(order: usize, max: usize, coeff: impl Fn(usize) -> Rational) -> DualPoly {
        let mut out = DualPoly::zero(order);
        for k in 0..=max {
            out.add_term(vec![DualGen::X; k], &HSeries::constant(order, coeff(k)));
        }
        out
    }

    /// `exp(λx)` up to `x^max`. Pairings of `x^k` vanish on every `E_{klm}`
    /// with fewer than `k` factors of `H`, so the truncation is exact on
    /// indices of degree at most `max`.
    pub fn exp_x(order: usize, max: usize, lambda: &Rational) -> DualPoly {
        DualPoly::x_series(order, max, |k| pow(lambda, k) / factorial(k))
    }

    pub fn sinh_x(order: usize, max: usize, lambda: &Rational) -> DualPoly {
        DualPoly::x_series(order, max, |k| if k % 2 == 1 { pow(lambda, k) / factorial(k) } else { int(0) })
    }

    pub fn cosh_x(order: usize, max: usize, lambda: &Rational) -> DualPoly {
        DualPoly::x_series(order, max, |k| if k % 2 == 0 { pow(lambda, k) / factorial(k) } else { int(0) })
    }
}

fn pow(r: &Rational, k: usize) -> Rational {
    (0..k).fold(int(1), |acc, _| acc * r)
}

impl fmt::Display for DualPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for g in w {
                write!(f, "*{}", g.name())?;
            }
        }
        Ok(())
    }
}

/// `Σ c u ⊗ v` over words `u, v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTensorPoly {
    order: usize,
    terms: Vec<(HSeries, DualPoly, DualPoly)>,
}

impl DualTensorPoly {
    pub fn zero(order: usize) -> Self {
        DualTensorPoly { order, terms: Vec::new() }
    }

    pub fn outer(u: &DualPoly, v: &DualPoly) -> Self {
        DualTensorPoly { order: u.order, terms: vec![(HSeries::one(u.order), u.clone(), v.clone())] }
    }

    pub fn add(mut self, other: DualTensorPoly) -> Self {
        self.terms.extend(other.terms);
        self
    }

    pub fn scale_rational(mut self, c: &Rational) -> Self {
        for t in &mut self.terms {
            t.0 = t.0.scale(c);
        }
        self
    }
}

/// Pairing values `<E_c, u>` on a window of indices. `cutoff: None` means
/// the values are known everywhere and vanish off the stored support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFunctional {
    order: usize,
    cutoff: Option<usize>,
    values: BTreeMap<BorelIndex, HSeries>,
}

impl DualFunctional {
    /// The dual basis symbol `e^{klm}`.
    pub fn basis(order: usize, i: BorelIndex) -> Self {
        let mut values = BTreeMap::new();
        values.insert(i, HSeries::one(order));
        DualFunctional { order, cutoff: None, values }
    }

    pub fn from_values(order: usize, cutoff: usize, values: BTreeMap<BorelIndex, HSeries>) -> Self {
        let values = values.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        DualFunctional { order, cutoff: Some(cutoff), values }
    }

    pub fn cutoff(&self) -> Option<usize> {
        self.cutoff
    }

    pub fn value(&self, i: BorelIndex) -> Result<HSeries> {
        match self.cutoff {
            Some(d) if i.degree() > d => Err(Error::CutoffExceeded { degree: i.degree(), cutoff: d }),
            _ => Ok(self.values.get(&i).cloned().unwrap_or_else(|| HSeries::zero(self.order))),
        }
    }

    pub fn values(&self) -> impl Iterator<Item = (&BorelIndex, &HSeries)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn try_sub(&self, other: &DualFunctional) -> Result<DualFunctional> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        let mut values = self.values.clone();
        for (i, c) in &other.values {
            let entry = values.entry(*i).or_insert_with(|| HSeries::zero(self.order));
            *entry -= c;
        }
        let cutoff = match (self.cutoff, other.cutoff) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let values = values.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(DualFunctional { order: self.order, cutoff, values })
    }
}

impl fmt::Display for DualFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return f.write_str("0");
        }
        for (n, (i, c)) in self.values.iter().enumerate() {
            if n > 0 {
                f.write_str("; ")?;
            }
            write!(f, "<E{i}> = {c}")?;
        }
        Ok(())
    }
}

/// Pairing values `<E_a ⊗ E_b, t>` for `deg a + deg b <= cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTensorFunctional {
    order: usize,
    cutoff: usize,
    values: BTreeMap<(BorelIndex, BorelIndex), HSeries>,
}

impl DualTensorFunctional {
    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn value(&self, a: BorelIndex, b: BorelIndex) -> HSeries {
        self.values.get(&(a, b)).cloned().unwrap_or_else(|| HSeries::zero(self.order))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn try_sub(&self, other: &DualTensorFunctional) -> Result<DualTensorFunctional> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        let mut values = self.values.clone();
        for (i, c) in &other.values {
            let entry = values.entry(*i).or_insert_with(|| HSeries::zero(self.order));
            *entry -= c;
        }
        let values = values.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(DualTensorFunctional { order: self.order, cutoff: self.cutoff.min(other.cutoff), values })
    }
}

impl fmt::Display for DualTensorFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return f.write_str("0");
        }
        for (n, ((a, b), c)) in self.values.iter().enumerate() {
            if n > 0 {
                f.write_str("; ")?;
            }
            write!(f, "<E{a} ⊗ E{b}> = {c}")?;
        }
        Ok(())
    }
}

fn pairs_up_to(d: usize) -> Vec<(BorelIndex, BorelIndex)> {
    let basis = BorelIndex::up_to(d);
    let mut out = Vec::new();
    for &a in &basis {
        for &b in basis.iter().filter(|b| a.degree() + b.degree() <= d) {
            out.push((a, b));
        }
    }
    out
}

/// `<E_c, uv> = Σ g^{ab}_c <E_a ⊗ E_b, u ⊗ v>` for `deg c <= window`.
pub fn dual_product(
    table: &StructureConstants,
    sign: PairingSign,
    u: &DualFunctional,
    v: &DualFunctional,
    window: usize,
) -> Result<DualFunctional> {
    if window > table.cutoff() {
        return Err(Error::CutoffExceeded { degree: window, cutoff: table.cutoff() });
    }
    let mut values = BTreeMap::new();
    for c in BorelIndex::up_to(window) {
        let mut acc = HSeries::zero(table.order());
        for ((a, b), g) in table.g_row(c).into_iter().flatten() {
            let (ua, vb) = (u.value(*a)?, v.value(*b)?);
            if ua.is_zero() || vb.is_zero() {
                continue;
            }
            let s = int(sign.sign(b.parity(), a.parity()));
            acc += &(&(g * &ua) * &vb).scale(&s);
        }
        values.insert(c, acc);
    }
    Ok(DualFunctional::from_values(table.order(), window, values))
}

/// `<E_a ⊗ E_b, Δ(u)> = Σ f_{ab}^c <E_c, u>` for `deg a + deg b <= window`.
pub fn dual_coproduct(
    table: &StructureConstants,
    u: &DualFunctional,
    window: usize,
) -> Result<DualTensorFunctional> {
    if window > table.cutoff() {
        return Err(Error::CutoffExceeded { degree: window, cutoff: table.cutoff() });
    }
    let mut values = BTreeMap::new();
    for (a, b) in pairs_up_to(window) {
        let mut acc = HSeries::zero(table.order());
        for (c, f) in table.f_row(a, b).into_iter().flatten() {
            acc += &(f * &u.value(*c)?);
        }
        if !acc.is_zero() {
            values.insert((a, b), acc);
        }
    }
    Ok(DualTensorFunctional { order: table.order(), cutoff: window, values })
}

/// Exact pairing of word polynomials in `x, y, z` with the Borel basis,
/// by peeling one generator at a time off the coproduct.
pub struct Pairing<'e> {
    engine: &'e Engine,
    hopf: Hopf<'e>,
    sign: PairingSign,
    memo: RefCell<BTreeMap<(Monomial, Vec<DualGen>), HSeries>>,
}

impl<'e> Pairing<'e> {
    pub fn new(engine: &'e Engine, sign: PairingSign) -> Self {
        Pairing { engine, hopf: Hopf::new(engine), sign, memo: RefCell::new(BTreeMap::new()) }
    }

    pub fn engine(&self) -> &'e Engine {
        self.engine
    }

    pub fn order(&self) -> usize {
        self.engine.order()
    }

    fn word(&self, m: Monomial, w: &[DualGen]) -> HSeries {
        let n = self.order();
        let x_count = w.iter().filter(|g| **g == DualGen::X).count();
        if usize::from(m.exp(crate::pbw::Gen::H)) < x_count || m.parity() != word_parity(w) {
            return HSeries::zero(n);
        }
        match w {
            [] => return if m.is_one() { HSeries::one(n) } else { HSeries::zero(n) },
            [g] => return if m == g.index().monomial() { HSeries::one(n) } else { HSeries::zero(n) },
            _ => {}
        }
        let key = (m, w.to_vec());
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let (first, rest) = (w[0], &w[1..]);
        let target = first.index().monomial();
        let delta = self.hopf.delta(&self.engine.monomial(m)).expect("same engine");
        let mut acc = HSeries::zero(n);
        for (k, c) in delta.terms() {
            if k[0] != target {
                continue;
            }
            let v = self.word(k[1], rest);
            if !v.is_zero() {
                acc += &(c * &v).scale(&int(self.sign.sign(k[1].parity(), first.parity())));
            }
        }
        self.memo.borrow_mut().insert(key, acc.clone());
        acc
    }

    /// `<E_m, p>`.
    pub fn pair(&self, m: Monomial, p: &DualPoly) -> HSeries {
        let mut acc = HSeries::zero(self.order());
        for (w, c) in p.terms() {
            acc += &(c * &self.word(m, w));
        }
        acc
    }

    pub fn pair_element(&self, el: &Element, p: &DualPoly) -> HSeries {
        let mut acc = HSeries::zero(self.order());
        for (m, c) in el.terms() {
            acc += &(c * &self.pair(*m, p));
        }
        acc
    }

    /// `<E_a ⊗ E_b, t>`.
    pub fn pair2(&self, a: BorelIndex, b: BorelIndex, t: &DualTensorPoly) -> HSeries {
        let mut acc = HSeries::zero(self.order());
        for (c, u, v) in &t.terms {
            for (wu, cu) in u.terms() {
                let left = self.word(a.monomial(), wu);
                if left.is_zero() {
                    continue;
                }
                let s = int(self.sign.sign(b.parity(), word_parity(wu)));
                acc += &(&(&(c * cu) * &left) * &self.pair(b.monomial(), v)).scale(&s);
            }
        }
        acc
    }

    /// `p` on every index of degree at most `d`.
    pub fn window(&self, p: &DualPoly, d: usize) -> DualFunctional {
        let values = BorelIndex::up_to(d).into_iter().map(|i| (i, self.pair(i.monomial(), p))).collect();
        DualFunctional::from_values(self.order(), d, values)
    }

    pub fn window2(&self, t: &DualTensorPoly, d: usize) -> DualTensorFunctional {
        let values = pairs_up_to(d)
            .into_iter()
            .map(|(a, b)| ((a, b), self.pair2(a, b, t)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        DualTensorFunctional { order: self.order(), cutoff: d, values }
    }

    /// `<E_a ⊗ E_b, Δ(p)> = <E_a E_b, p>`.
    pub fn coproduct_window(&self, p: &DualPoly, d: usize) -> Result<DualTensorFunctional> {
        let mut values = BTreeMap::new();
        for (a, b) in pairs_up_to(d) {
            let prod =
                self.engine.mul(&self.engine.monomial(a.monomial()), &self.engine.monomial(b.monomial()))?;
            let c = self.pair_element(&prod, p);
            if !c.is_zero() {
                values.insert((a, b), c);
            }
        }
        Ok(DualTensorFunctional { order: self.order(), cutoff: d, values })
    }

    /// `<E_c, S(p)> = <S(E_c), p>`.
    pub fn antipode_window(&self, p: &DualPoly, d: usize) -> Result<DualFunctional> {
        let mut values = BTreeMap::new();
        for i in BorelIndex::up_to(d) {
            let s = self.hopf.antipode(&self.engine.monomial(i.monomial()))?;
            values.insert(i, self.pair_element(&s, p));
        }
        Ok(DualFunctional::from_values(self.order(), d, values))
    }

    /// `<1, p>`.
    pub fn counit(&self, p: &DualPoly) -> HSeries {
        self.pair(Monomial::ONE, p)
    }

    /// The functional of a Borel element's coefficients, for comparisons.
    pub fn borel_window(&self, el: &BorelElement, d: usize) -> DualFunctional {
        let values = el.terms().filter(|(i, _)| i.degree() <= d).map(|(i, c)| (*i, c.clone())).collect();
        DualFunctional::from_values(self.order(), d, values)
    }
}
