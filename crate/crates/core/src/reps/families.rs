use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::matrix::{h_poly, matrix_exp_nilpotent, super_kron, SuperMatrix};
use crate::defmaps::{DeformationMap, MapKind};
use crate::error::{Error, Result};
use crate::hopf::Tensor;
use crate::pbw::{Alphabet, Element, Gen, Parity, Target};
use crate::scalars::{HSeries, Rational};

const E: Parity = Parity::Even;
const O: Parity = Parity::Odd;

/// Basis `(1, 2, 3)` of the fundamental module.
pub const FUNDAMENTAL_PARITIES: [Parity; 3] = [E, O, E];
/// Basis `(J+, v+, J0, v-, J-)` of the adjoint module.
pub const ADJOINT_PARITIES: [Parity; 5] = [E, O, E, O, E];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepTag {
    ClassicalFundamental,
    FirstFundamental,
    SecondFundamental,
    ClassicalAdjoint,
    FirstAdjoint,
    SecondAdjoint,
}

impl RepTag {
    pub const ALL: [RepTag; 6] = [
        RepTag::ClassicalFundamental,
        RepTag::FirstFundamental,
        RepTag::SecondFundamental,
        RepTag::ClassicalAdjoint,
        RepTag::FirstAdjoint,
        RepTag::SecondAdjoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RepTag::ClassicalFundamental => "classical-fundamental",
            RepTag::FirstFundamental => "first-map-fundamental",
            RepTag::SecondFundamental => "second-map-fundamental",
            RepTag::ClassicalAdjoint => "classical-adjoint",
            RepTag::FirstAdjoint => "first-map-adjoint",
            RepTag::SecondAdjoint => "second-map-adjoint",
        }
    }

    pub fn alphabet(self) -> Alphabet {
        match self {
            RepTag::ClassicalFundamental | RepTag::ClassicalAdjoint => Alphabet::Classical,
            _ => Alphabet::Deformed,
        }
    }

    /// The deformation map a deformed family belongs to.
    pub fn map(self) -> Option<MapKind> {
        match self {
            RepTag::FirstFundamental | RepTag::FirstAdjoint => Some(MapKind::First),
            RepTag::SecondFundamental | RepTag::SecondAdjoint => Some(MapKind::Second),
            _ => None,
        }
    }

    /// The classical family with the same module.
    pub fn classical(self) -> RepTag {
        if self.is_adjoint() {
            RepTag::ClassicalAdjoint
        } else {
            RepTag::ClassicalFundamental
        }
    }

    pub fn is_adjoint(self) -> bool {
        matches!(self, RepTag::ClassicalAdjoint | RepTag::FirstAdjoint | RepTag::SecondAdjoint)
    }

    pub fn parities(self) -> &'static [Parity] {
        if self.is_adjoint() {
            &ADJOINT_PARITIES
        } else {
            &FUNDAMENTAL_PARITIES
        }
    }

    pub fn parse(name: &str) -> Option<RepTag> {
        RepTag::ALL.into_iter().find(|t| t.name() == name)
    }
}

/// Sparse literal: one-based `(row, col, [(h-power, num, den)])`.
type Entries<'a> = &'a [(usize, usize, &'a [(usize, i64, i64)])];

fn literal(order: usize, parities: &[Parity], entries: Entries<'_>) -> SuperMatrix {
    let mut m = SuperMatrix::zero(order, parities);
    for &(i, j, c) in entries {
        m.set(i - 1, j - 1, h_poly(order, c));
    }
    m
}

const HALF: &[(usize, i64, i64)] = &[(0, 1, 2)];
const M_HALF: &[(usize, i64, i64)] = &[(0, -1, 2)];
const ONE: &[(usize, i64, i64)] = &[(0, 1, 1)];
const M_ONE: &[(usize, i64, i64)] = &[(0, -1, 1)];
const TWO: &[(usize, i64, i64)] = &[(0, 2, 1)];
const M_TWO: &[(usize, i64, i64)] = &[(0, -2, 1)];

// Fundamental, classical (also the second map's fundamental).
const F_J0: Entries = &[(1, 1, HALF), (3, 3, M_HALF)];
const F_VP: Entries = &[(1, 2, HALF), (2, 3, HALF)];
const F_VM: Entries = &[(2, 1, M_HALF), (3, 2, HALF)];
const F_JP: Entries = &[(1, 3, ONE)];
const F_JM: Entries = &[(3, 1, ONE)];

// Fundamental, first map.
const F1_H: Entries = &[(1, 1, HALF), (1, 3, &[(1, 1, 2)]), (3, 3, M_HALF)];
const F1_VM: Entries = &[(1, 2, &[(1, -1, 4)]), (2, 1, M_HALF), (2, 3, &[(1, -1, 4)]), (3, 2, HALF)];
const F1_Y: Entries = &[(1, 1, &[(1, -1, 2)]), (1, 3, &[(2, -1, 4)]), (3, 1, ONE), (3, 3, &[(1, 1, 2)])];

// Adjoint, classical; basis (J+, v+, J0, v-, J-).
const A_JP: Entries = &[(1, 3, M_ONE), (2, 4, ONE), (3, 5, TWO)];
const A_VP: Entries = &[(1, 2, HALF), (2, 3, M_HALF), (3, 4, M_HALF), (4, 5, M_ONE)];
const A_J0: Entries = &[(1, 1, ONE), (2, 2, HALF), (4, 4, M_HALF), (5, 5, M_ONE)];
const A_VM: Entries = &[(2, 1, M_ONE), (3, 2, M_HALF), (4, 3, HALF), (5, 4, M_HALF)];
const A_JM: Entries = &[(3, 1, M_TWO), (4, 2, ONE), (5, 3, ONE)];

// Adjoint, first map.
const A1_X: Entries = &[(1, 3, M_ONE), (1, 5, &[(1, -2, 1)]), (2, 4, ONE), (3, 5, TWO)];
const A1_VP: Entries = &[
    (1, 2, HALF),
    (1, 4, &[(1, 1, 4)]),
    (2, 3, M_HALF),
    (2, 5, &[(1, -1, 2)]),
    (3, 4, M_HALF),
    (4, 5, M_ONE),
];
const A1_H: Entries = &[
    (1, 1, ONE),
    (1, 5, &[(2, -1, 1)]),
    (2, 2, HALF),
    (2, 4, &[(1, 1, 2)]),
    (3, 5, &[(1, 2, 1)]),
    (4, 4, M_HALF),
    (5, 5, M_ONE),
];
const A1_VM: Entries = &[
    (1, 4, &[(2, -5, 16)]),
    (2, 1, M_ONE),
    (2, 3, &[(1, -1, 4)]),
    (2, 5, &[(2, -1, 8)]),
    (3, 2, M_HALF),
    (3, 4, &[(1, 3, 4)]),
    (4, 3, HALF),
    (4, 5, &[(1, 1, 1)]),
    (5, 4, M_HALF),
];
const A1_Y: Entries = &[
    (1, 3, &[(2, 5, 8)]),
    (1, 5, &[(3, 5, 4)]),
    (2, 2, &[(1, -1, 2)]),
    (2, 4, &[(2, -3, 4)]),
    (3, 1, M_TWO),
    (3, 3, &[(1, -2, 1)]),
    (3, 5, &[(2, -13, 4)]),
    (4, 2, ONE),
    (4, 4, &[(1, 1, 2)]),
    (5, 3, ONE),
    (5, 5, &[(1, 2, 1)]),
];

// Adjoint, second map: X, V+ and H keep their classical form.
const A2_VM: Entries = &[
    (1, 4, &[(2, -1, 16)]),
    (2, 1, M_ONE),
    (2, 5, &[(2, -1, 8)]),
    (3, 2, M_HALF),
    (4, 3, HALF),
    (5, 4, M_HALF),
];
const A2_Y: Entries = &[
    (1, 3, &[(2, 1, 8)]),
    (2, 4, &[(2, -1, 2)]),
    (3, 1, M_TWO),
    (3, 5, &[(2, -1, 4)]),
    (4, 2, ONE),
    (5, 3, ONE),
];

/// Matrices of the five generators in one representation, indexed by the
/// shared generator slots `Y, V-, H, V+, X` (`J-, v-, J0, v+, J+`).
#[derive(Clone, Debug)]
pub struct RepFamily {
    tag: RepTag,
    order: usize,
    gens: Vec<SuperMatrix>,
}

impl RepFamily {
    pub fn tag(&self) -> RepTag {
        self.tag
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alphabet(&self) -> Alphabet {
        self.tag.alphabet()
    }

    pub fn parities(&self) -> &'static [Parity] {
        self.tag.parities()
    }

    pub fn matrix(&self, g: Gen) -> &SuperMatrix {
        &self.gens[g.index()]
    }

    /// Same family with one generator matrix replaced.
    pub fn with_matrix(mut self, g: Gen, m: SuperMatrix) -> RepFamily {
        self.gens[g.index()] = m;
        self
    }

    pub fn identity(&self) -> SuperMatrix {
        SuperMatrix::identity(self.order, self.parities())
    }

    /// Image of an element in normal form.
    pub fn evaluate(&self, el: &Element) -> Result<SuperMatrix> {
        if el.alphabet() != self.alphabet() {
            return Err(Error::MixedAlphabet);
        }
        let mut acc = SuperMatrix::zero(self.order, self.parities());
        for (m, c) in el.terms() {
            let mut v = self.identity();
            for g in m.word() {
                v = v.try_mul(self.matrix(g))?;
            }
            acc = acc.try_add(&v.scale(&c.with_order(self.order)))?;
        }
        Ok(acc)
    }

    /// Image of a tensor in the graded tensor power of this module.
    pub fn evaluate_tensor(&self, t: &Tensor) -> Result<SuperMatrix> {
        if t.alphabet() != self.alphabet() {
            return Err(Error::MixedAlphabet);
        }
        let mut acc: Option<SuperMatrix> = None;
        for (legs, c) in t.terms() {
            let mut v: Option<SuperMatrix> = None;
            for m in legs {
                let leg = self.evaluate(&Element::term(self.alphabet(), *m, HSeries::one(self.order)))?;
                v = Some(match v {
                    None => leg,
                    Some(v) => super_kron(&v, &leg)?,
                });
            }
            let v = v.unwrap_or_else(|| self.identity()).scale(&c.with_order(self.order));
            acc = Some(match acc {
                None => v,
                Some(a) => a.try_add(&v)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.tensor_identity(t.rank()).scale(&HSeries::zero(self.order))))
    }

    /// Identity on the `rank`-fold tensor power.
    pub fn tensor_identity(&self, rank: usize) -> SuperMatrix {
        let mut parities: Vec<Parity> = alloc::vec![Parity::Even];
        for _ in 0..rank {
            parities = parities.iter().flat_map(|&p| self.parities().iter().map(move |&q| p + q)).collect();
        }
        SuperMatrix::identity(self.order, &parities)
    }

    /// `T^λ = exp(λ h X)`; deformed families only.
    pub fn t_power(&self, lambda: &Rational) -> Result<SuperMatrix> {
        if self.alphabet() != Alphabet::Deformed {
            return Err(Error::WrongAlphabet("T lives in the deformed algebra"));
        }
        matrix_exp_nilpotent(self.matrix(Gen::X), lambda)
    }

    pub fn describe(&self, g: Gen) -> String {
        format!("{} in {}", g.name(self.alphabet()), self.tag.name())
    }
}

/// Exact matrices of one of the six families at truncation order `order`.
pub fn build_rep(tag: RepTag, order: usize) -> Result<RepFamily> {
    let p = tag.parities();
    let lit = |e: Entries<'_>| literal(order, p, e);
    let gens = match tag {
        RepTag::ClassicalFundamental => [lit(F_JM), lit(F_VM), lit(F_J0), lit(F_VP), lit(F_JP)],
        RepTag::ClassicalAdjoint => [lit(A_JM), lit(A_VM), lit(A_J0), lit(A_VP), lit(A_JP)],
        RepTag::FirstAdjoint => [lit(A1_Y), lit(A1_VM), lit(A1_H), lit(A1_VP), lit(A1_X)],
        RepTag::SecondAdjoint => [lit(A2_Y), lit(A2_VM), lit(A_J0), lit(A_VP), lit(A_JP)],
        RepTag::FirstFundamental | RepTag::SecondFundamental => {
            // X is not listed for the fundamental families; it is the
            // map's image of X evaluated on the classical matrices.
            let kind = tag.map().expect("deformed family");
            let classical = build_rep(RepTag::ClassicalFundamental, order)?;
            let map = DeformationMap::new(kind, order)?;
            let x = classical.evaluate(map.apply_map(Gen::X))?;
            if kind == MapKind::First {
                [lit(F1_Y), lit(F1_VM), lit(F1_H), lit(F_VP), x]
            } else {
                [lit(F_JM), lit(F_VM), lit(F_J0), lit(F_VP), x]
            }
        }
    };
    Ok(RepFamily { tag, order, gens: gens.into() })
}

impl Target for RepFamily {
    type Value = SuperMatrix;

    fn source(&self) -> Alphabet {
        self.alphabet()
    }

    fn unit(&self) -> SuperMatrix {
        self.identity()
    }

    fn zero(&self) -> SuperMatrix {
        SuperMatrix::zero(self.order, self.parities())
    }

    fn image(&self, g: Gen) -> Result<SuperMatrix> {
        Ok(self.matrix(g).clone())
    }

    fn product(&self, a: &SuperMatrix, b: &SuperMatrix) -> SuperMatrix {
        a.try_mul(b).expect("same module")
    }

    fn accumulate(&self, acc: &mut SuperMatrix, v: &SuperMatrix, c: &HSeries) {
        *acc = acc.try_add(&v.scale(c)).expect("same module");
    }
}

/// Evaluation into `V ⊗ V` through the coproduct.
pub struct CoproductRep<'a> {
    rep: &'a RepFamily,
    images: Vec<SuperMatrix>,
}

impl<'a> CoproductRep<'a> {
    pub fn new(rep: &'a RepFamily, hopf: &crate::hopf::Hopf<'_>) -> Result<Self> {
        let images = crate::pbw::Gen::ALL
            .iter()
            .map(|&g| rep.evaluate_tensor(hopf.delta_gen(g)))
            .collect::<Result<Vec<_>>>()?;
        Ok(CoproductRep { rep, images })
    }
}

impl Target for CoproductRep<'_> {
    type Value = SuperMatrix;

    fn source(&self) -> Alphabet {
        self.rep.alphabet()
    }

    fn unit(&self) -> SuperMatrix {
        self.rep.tensor_identity(2)
    }

    fn zero(&self) -> SuperMatrix {
        self.rep.tensor_identity(2).scale(&HSeries::zero(self.rep.order))
    }

    fn image(&self, g: Gen) -> Result<SuperMatrix> {
        Ok(self.images[g.index()].clone())
    }

    fn product(&self, a: &SuperMatrix, b: &SuperMatrix) -> SuperMatrix {
        a.try_mul(b).expect("same module")
    }

    fn accumulate(&self, acc: &mut SuperMatrix, v: &SuperMatrix, c: &HSeries) {
        *acc = acc.try_add(&v.scale(c)).expect("same module");
    }
}
