use alloc::collections::BTreeMap;

use super::borel::{delta_by_factors, BorelElement, BorelIndex};
use crate::error::Result;
use crate::hopf::Hopf;
use crate::pbw::Engine;
use crate::scalars::HSeries;

type Row = BTreeMap<BorelIndex, HSeries>;
type PairRow = BTreeMap<(BorelIndex, BorelIndex), HSeries>;

/// `E_a E_b = f_{ab}^c E_c` for `deg a + deg b <= D`, and
/// `Δ(E_c) = g^{ab}_c E_a ⊗ E_b` for `deg c <= D`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    cutoff: usize,
    order: usize,
    f: BTreeMap<(BorelIndex, BorelIndex), Row>,
    g: BTreeMap<BorelIndex, PairRow>,
}

impl StructureConstants {
    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn f_row(&self, a: BorelIndex, b: BorelIndex) -> Option<&Row> {
        self.f.get(&(a, b))
    }

    pub fn g_row(&self, c: BorelIndex) -> Option<&PairRow> {
        self.g.get(&c)
    }

    pub fn f(&self, a: BorelIndex, b: BorelIndex, c: BorelIndex) -> HSeries {
        self.f_row(a, b).and_then(|r| r.get(&c)).cloned().unwrap_or_else(|| HSeries::zero(self.order))
    }

    pub fn g(&self, a: BorelIndex, b: BorelIndex, c: BorelIndex) -> HSeries {
        self.g_row(c).and_then(|r| r.get(&(a, b))).cloned().unwrap_or_else(|| HSeries::zero(self.order))
    }
}

/// Fills both tables. The coproduct side multiplies generator coproducts
/// in the order `H^k X^l V+^m`, independently of the Hopf layer's memo.
pub fn compute_structure_constants(cutoff: usize, order: usize) -> Result<StructureConstants> {
    let engine = Engine::deformed(order);
    let hopf = Hopf::new(&engine);
    let basis = BorelIndex::up_to(cutoff);
    let mut f = BTreeMap::new();
    for &a in &basis {
        for &b in basis.iter().filter(|b| a.degree() + b.degree() <= cutoff) {
            let p = engine.mul(&engine.monomial(a.monomial()), &engine.monomial(b.monomial()))?;
            let p = BorelElement::from_element(&p)?;
            f.insert((a, b), p.terms().map(|(i, c)| (*i, c.clone())).collect());
        }
    }
    let mut g = BTreeMap::new();
    for &c in &basis {
        let d = delta_by_factors(&hopf, c)?;
        let mut row = PairRow::new();
        for (key, coeff) in d.terms() {
            let a = BorelIndex::from_monomial(key[0]).expect("Borel subalgebra is closed");
            let b = BorelIndex::from_monomial(key[1]).expect("Borel subalgebra is closed");
            row.insert((a, b), coeff.clone());
        }
        g.insert(c, row);
    }
    Ok(StructureConstants { cutoff, order, f, g })
}
