use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::series::{neg_log_one_minus_coeffs, FnSeries};
use super::systems::{
    first_f1, first_g1, residual_f_system, residual_g_system, second_f1, second_g1, solve_f_system,
    solve_g_system, x_image, FSolution, GSolution,
};
use crate::error::{Error, Result};
use crate::hopf::{Hopf, Tensor};
use crate::pbw::{Alphabet, Element, Engine, Gen, Monomial, Target, WordPoly};
use crate::report::Check;
use crate::scalars::{int, rat, HSeries};

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MapKind {
    First,
    Second,
}

impl MapKind {
    pub fn name(self) -> &'static str {
        match self {
            MapKind::First => "first",
            MapKind::Second => "second",
        }
    }
}

/// An algebra isomorphism between the deformed and the classical
/// presentations, together with the engines its images live in.
pub struct DeformationMap {
    label: String,
    kind: Option<MapKind>,
    paired: bool,
    f: FSolution,
    g: GSolution,
    classical: Engine,
    deformed: Engine,
    forward: Vec<Element>,
    inverse: Vec<Element>,
    inverse_memo: RefCell<BTreeMap<Monomial, Element>>,
}

impl DeformationMap {
    pub fn new(kind: MapKind, order: usize) -> Result<Self> {
        let (f1, g1) = match kind {
            MapKind::First => (first_f1(order), first_g1(order)),
            MapKind::Second => (second_f1(order), second_g1(order)),
        };
        let mut map = Self::from_series(kind.name(), &f1, &g1)?;
        map.kind = Some(kind);
        map.paired = true;
        Ok(map)
    }

    /// Map built from arbitrary admissible `f1(J+)` and `g1(T)`. The two
    /// halves are mutually inverse only when `f1` and `g1` match.
    pub fn from_series(label: &str, f1: &FnSeries, g1: &FnSeries) -> Result<Self> {
        if f1.order() != g1.order() {
            return Err(Error::OrderMismatch { left: f1.order(), right: g1.order() });
        }
        let order = f1.order();
        let f = solve_f_system(f1)?;
        let g = solve_g_system(g1)?;
        let classical = Engine::classical(order);
        let deformed = Engine::deformed(order);
        let forward = forward_images(&classical, &f)?;
        let inverse = inverse_images(&deformed, &g)?;
        Ok(DeformationMap {
            label: label.into(),
            kind: None,
            paired: false,
            f,
            g,
            classical,
            deformed,
            forward,
            inverse,
            inverse_memo: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> Option<MapKind> {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.deformed.order()
    }

    pub fn f_solution(&self) -> &FSolution {
        &self.f
    }

    pub fn g_solution(&self) -> &GSolution {
        &self.g
    }

    pub fn classical_engine(&self) -> &Engine {
        &self.classical
    }

    pub fn deformed_engine(&self) -> &Engine {
        &self.deformed
    }

    /// Image of a deformed generator, in the classical alphabet.
    pub fn apply_map(&self, g: Gen) -> &Element {
        &self.forward[g.index()]
    }

    /// Image of a classical generator, in the deformed alphabet.
    pub fn apply_inverse(&self, g: Gen) -> &Element {
        &self.inverse[g.index()]
    }

    pub fn forward_target(&self) -> MapTarget<'_> {
        MapTarget { engine: &self.classical, images: &self.forward, source: Alphabet::Deformed }
    }

    pub fn inverse_target(&self) -> MapTarget<'_> {
        MapTarget { engine: &self.deformed, images: &self.inverse, source: Alphabet::Classical }
    }

    /// Deformed element to classical.
    pub fn map_element(&self, e: &Element) -> Result<Element> {
        WordPoly::from_element(e).eval(&self.forward_target())
    }

    /// Classical element to deformed.
    pub fn inverse_element(&self, e: &Element) -> Result<Element> {
        if e.alphabet() != Alphabet::Classical {
            return Err(Error::MixedAlphabet);
        }
        let mut out = self.deformed.zero();
        for (m, c) in e.terms() {
            out.add_scaled(&self.inverse_monomial(*m), c);
        }
        Ok(out)
    }

    fn inverse_monomial(&self, m: Monomial) -> Element {
        if let Some(hit) = self.inverse_memo.borrow().get(&m) {
            return hit.clone();
        }
        let v = match m.strip_last() {
            None => self.deformed.one(),
            Some((rest, g)) => {
                let left = self.inverse_monomial(rest);
                self.deformed.mul(&left, self.apply_inverse(g)).expect("same engine")
            }
        };
        self.inverse_memo.borrow_mut().insert(m, v.clone());
        v
    }

    /// `m^-1 ⊗ m^-1` on a classical tensor.
    pub fn inverse_tensor(&self, t: &Tensor) -> Result<Tensor> {
        if t.alphabet() != Alphabet::Classical {
            return Err(Error::MixedAlphabet);
        }
        let mut out = Tensor::zero(Alphabet::Deformed, t.order(), t.rank());
        for (key, c) in t.terms() {
            let legs: Vec<Element> = key.iter().map(|m| self.inverse_monomial(*m)).collect();
            let refs: Vec<&Element> = legs.iter().collect();
            out.add_outer(&refs, c);
        }
        Ok(out)
    }

    /// `σ = -ln(1 - 2hJ+)` scaled by `lambda` and exponentiated: `(1 - 2hJ+)^(-lambda)`.
    pub fn exp_sigma(&self, lambda: &crate::scalars::Rational) -> Element {
        one_minus_2hj(self.order()).pow_rational(&-lambda).expect("unit series").to_element()
    }

    /// `σ = -ln(1 - 2hJ+)` as a classical element.
    pub fn sigma(&self) -> Element {
        let n = self.order();
        let z = FnSeries::monomial(Alphabet::Classical, n, 1, 1, int(2));
        z.compose(&neg_log_one_minus_coeffs(n)).expect("vanishing argument").to_element()
    }

    /// Residuals of both defining systems, relation images in both
    /// directions, and generator roundtrips when the halves are paired.
    pub fn verify(&self) -> Vec<Check> {
        let n = self.order();
        let tag = &self.label;
        let mut out = Vec::new();
        let series_check = |id: String, r: Result<[FnSeries; 6]>, out: &mut Vec<Check>| match r {
            Ok(rs) => {
                for (k, s) in rs.iter().enumerate() {
                    out.push(Check::residual(format!("{id}/{}", k + 1), n, s.is_zero(), s));
                }
            }
            Err(e) => out.push(Check::fail(id, n, format!("{e}"))),
        };
        series_check(format!("maps/{tag}/f-system"), residual_f_system(&self.f), &mut out);
        series_check(format!("maps/{tag}/g-system"), residual_g_system(&self.g), &mut out);

        for rel in self.deformed.presentation().relations() {
            let id = format!("maps/{tag}/relation/{}", rel.id);
            out.push(match rel.residual().eval(&self.forward_target()) {
                Ok(r) => Check::residual(id, n, r.is_zero(), &r),
                Err(e) => Check::fail(id, n, format!("{e}")),
            });
        }
        for rel in self.classical.presentation().relations() {
            let id = format!("maps/{tag}/inverse-relation/{}", rel.id);
            out.push(match rel.residual().eval(&self.inverse_target()) {
                Ok(r) => Check::residual(id, n, r.is_zero(), &r),
                Err(e) => Check::fail(id, n, format!("{e}")),
            });
        }
        for g in Gen::ALL.into_iter().filter(|_| self.paired) {
            let id = format!("maps/{tag}/roundtrip/{}", g.name(Alphabet::Deformed));
            let back = self.inverse_element(self.apply_map(g)).and_then(|e| e.try_sub(&self.deformed.gen(g)));
            out.push(match back {
                Ok(r) => Check::residual(id, n, r.is_zero(), &r),
                Err(e) => Check::fail(id, n, format!("{e}")),
            });
            let id = format!("maps/{tag}/roundtrip-inverse/{}", g.name(Alphabet::Classical));
            let back =
                self.map_element(self.apply_inverse(g)).and_then(|e| e.try_sub(&self.classical.gen(g)));
            out.push(match back {
                Ok(r) => Check::residual(id, n, r.is_zero(), &r),
                Err(e) => Check::fail(id, n, format!("{e}")),
            });
        }
        if self.kind == Some(MapKind::First) {
            out.extend(self.induced_coproduct_checks());
        }
        out
    }

    /// Induced coproducts of `J0`, `J+`, `v+` and `σ` for the first map,
    /// compared legwise through the inverse map.
    pub fn induced_coproduct_checks(&self) -> Vec<Check> {
        let n = self.order();
        let c = &self.classical;
        let hopf = Hopf::new(&self.deformed);
        let outer = |a: &Element, b: &Element| Tensor::outer(&[a, b]).expect("same engine");
        let one = c.one();
        let (j0, jp, vp) = (c.gen(Gen::H), c.gen(Gen::X), c.gen(Gen::VPlus));
        let sigma = self.sigma();
        let e1 = self.exp_sigma(&int(1));
        let e_half = self.exp_sigma(&rat(1, 2));
        let e_mhalf = self.exp_sigma(&rat(-1, 2));
        let e_m1 = self.exp_sigma(&int(-1));
        let unit = HSeries::one(n);

        let mut d_j0 = outer(&j0, &one);
        d_j0.add_scaled(&outer(&e1, &j0), &unit);
        let vp_e1 = c.mul(&vp, &e1).expect("same engine");
        let vp_eh = c.mul(&vp, &e_half).expect("same engine");
        d_j0.add_scaled(&outer(&vp_e1, &vp_eh), &HSeries::monomial(n, 1, int(2)));

        let mut d_jp = outer(&jp, &e_m1);
        d_jp.add_scaled(&outer(&one, &jp), &unit);

        let mut d_vp = outer(&vp, &e_mhalf);
        d_vp.add_scaled(&outer(&one, &vp), &unit);

        let mut d_sigma = outer(&sigma, &one);
        d_sigma.add_scaled(&outer(&one, &sigma), &unit);

        let cases = [("J0", j0, d_j0), ("J+", jp, d_jp), ("v+", vp, d_vp), ("sigma", sigma, d_sigma)];
        let mut out = Vec::new();
        for (name, phi, claimed) in cases {
            let id = format!("maps/{}/coproduct/{name}", self.label);
            let r = self
                .inverse_element(&phi)
                .and_then(|x| hopf.coproduct(&x))
                .and_then(|lhs| lhs.try_sub(&self.inverse_tensor(&claimed)?));
            out.push(match r {
                Ok(r) => Check::residual(id, n, r.is_zero(), &r),
                Err(e) => Check::fail(id, n, format!("{e}")),
            });
        }
        out
    }
}

fn one_minus_2hj(order: usize) -> FnSeries {
    FnSeries::one(Alphabet::Classical, order)
        .try_sub(&FnSeries::monomial(Alphabet::Classical, order, 1, 1, int(2)))
        .expect("same shape")
}

fn forward_images(c: &Engine, f: &FSolution) -> Result<Vec<Element>> {
    let (vm, j0, vp) = (c.gen(Gen::VMinus), c.gen(Gen::H), c.gen(Gen::VPlus));
    let el = FnSeries::to_element;
    let v_plus = c.mul(&el(&f.f1), &vp)?;
    let h = c.mul(&el(&f.f2), &j0)?;
    let v_minus = c.mul(&el(&f.f3), &vm)?.try_add(&c.mul(&el(&f.u), &vp)?)?.try_add(&c.product(&[
        &el(&f.w),
        &vp,
        &j0,
    ])?)?;
    let x = el(&x_image(&f.f1)?);
    let y = c.mul(&v_minus, &v_minus)?.scale_rational(&int(-4));
    // Gen order: Y, V-, H, V+, X
    Ok(alloc::vec![y, v_minus, h, v_plus, x])
}

fn inverse_images(d: &Engine, g: &GSolution) -> Result<Vec<Element>> {
    let (vm, h, vp) = (d.gen(Gen::VMinus), d.gen(Gen::H), d.gen(Gen::VPlus));
    let el = FnSeries::to_element;
    let v_plus = d.mul(&el(&g.g1), &vp)?;
    let j0 = d.mul(&el(&g.g2), &h)?;
    let v_minus = d.mul(&el(&g.g3), &vm)?.try_add(&d.mul(&el(&g.a), &vp)?)?.try_add(&d.product(&[
        &el(&g.b),
        &vp,
        &h,
    ])?)?;
    let j_plus = d.mul(&v_plus, &v_plus)?.scale_rational(&int(4));
    let j_minus = d.mul(&v_minus, &v_minus)?.scale_rational(&int(-4));
    Ok(alloc::vec![j_minus, v_minus, j0, v_plus, j_plus])
}

/// Homomorphic evaluation through one direction of a map.
pub struct MapTarget<'a> {
    engine: &'a Engine,
    images: &'a [Element],
    source: Alphabet,
}

impl Target for MapTarget<'_> {
    type Value = Element;

    fn source(&self) -> Alphabet {
        self.source
    }

    fn unit(&self) -> Element {
        self.engine.one()
    }

    fn zero(&self) -> Element {
        self.engine.zero()
    }

    fn image(&self, g: Gen) -> Result<Element> {
        Ok(self.images[g.index()].clone())
    }

    fn product(&self, a: &Element, b: &Element) -> Element {
        self.engine.mul(a, b).expect("same engine")
    }

    fn accumulate(&self, acc: &mut Element, v: &Element, c: &HSeries) {
        acc.add_scaled(v, c);
    }
}

/// Verification of both reference maps at order `order`.
pub fn check_maps(order: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for kind in [MapKind::First, MapKind::Second] {
        match DeformationMap::new(kind, order) {
            Ok(map) => out.extend(map.verify()),
            Err(e) => out.push(Check::fail(format!("maps/{}", kind.name()), order, format!("{e}"))),
        }
    }
    crate::report::sort_checks(&mut out);
    out
}
