use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::hopf::{Hopf, Tensor};
use crate::pbw::{Alphabet, Element, Engine, Gen, Monomial, Parity};
use crate::scalars::HSeries;

/// Index `(k, l, m)` of `E_{klm} = H^k X^l V+^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BorelIndex {
    pub k: u16,
    pub l: u16,
    pub m: u16,
}

impl BorelIndex {
    pub const ONE: BorelIndex = BorelIndex { k: 0, l: 0, m: 0 };
    pub const H: BorelIndex = BorelIndex { k: 1, l: 0, m: 0 };
    pub const X: BorelIndex = BorelIndex { k: 0, l: 1, m: 0 };
    pub const V: BorelIndex = BorelIndex { k: 0, l: 0, m: 1 };

    pub fn new(k: u16, l: u16, m: u16) -> Self {
        assert!(m <= 1, "V+ exponent is 0 or 1");
        BorelIndex { k, l, m }
    }

    pub fn degree(self) -> usize {
        usize::from(self.k + self.l + self.m)
    }

    pub fn parity(self) -> Parity {
        Parity::from_count(usize::from(self.m))
    }

    /// The same element in the full PBW basis; `X` and `V+` commute.
    pub fn monomial(self) -> Monomial {
        Monomial::from_exponents(0, 0, self.k, self.m, self.l)
    }

    pub fn from_monomial(m: Monomial) -> Option<Self> {
        (m.exp(Gen::Y) == 0 && m.exp(Gen::VMinus) == 0).then(|| BorelIndex {
            k: m.exp(Gen::H),
            l: m.exp(Gen::X),
            m: m.exp(Gen::VPlus),
        })
    }

    /// Every index of total degree at most `d`.
    pub fn up_to(d: usize) -> Vec<BorelIndex> {
        let d = d as u16;
        let mut out = Vec::new();
        for k in 0..=d {
            for l in 0..=d - k {
                for m in 0..=1.min(d - k - l) {
                    out.push(BorelIndex { k, l, m });
                }
            }
        }
        out.sort_by_key(|i| (i.degree(), *i));
        out
    }
}

impl fmt::Display for BorelIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.k, self.l, self.m)
    }
}

/// A combination of `E_{klm}` with series coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelElement {
    order: usize,
    terms: BTreeMap<BorelIndex, HSeries>,
}

impl BorelElement {
    pub fn from_element(el: &Element) -> Result<Self> {
        if el.alphabet() != Alphabet::Deformed {
            return Err(Error::WrongAlphabet("Borel elements are deformed"));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in el.terms() {
            let idx = BorelIndex::from_monomial(*m)
                .ok_or_else(|| Error::GeneratorAbsent(alloc::format!("{m:?}")))?;
            terms.insert(idx, c.clone());
        }
        Ok(BorelElement { order: el.order(), terms })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BorelIndex, &HSeries)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, i: BorelIndex) -> HSeries {
        self.terms.get(&i).cloned().unwrap_or_else(|| HSeries::zero(self.order))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for BorelElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (i, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*E{i}")?;
        }
        Ok(())
    }
}

/// Normal form of a word in `H, X, V+`, in the order `H^k X^l V+^m`.
pub fn borel_normal_form(engine: &Engine, word: &[Gen]) -> Result<BorelElement> {
    let mut out = engine.one();
    for &g in word {
        if !matches!(g, Gen::H | Gen::X | Gen::VPlus) {
            return Err(Error::GeneratorAbsent(g.name(Alphabet::Deformed).to_string()));
        }
        out = engine.mul_gen(&out, g);
    }
    BorelElement::from_element(&out)
}

pub(crate) fn delta_by_factors(hopf: &Hopf<'_>, i: BorelIndex) -> Result<Tensor> {
    let mut out = hopf.unit(2);
    let factors = [(Gen::H, i.k), (Gen::X, i.l), (Gen::VPlus, i.m)];
    for (g, n) in factors {
        for _ in 0..n {
            out = hopf.tensor_multiply(&out, hopf.delta_gen(g))?;
        }
    }
    Ok(out)
}
