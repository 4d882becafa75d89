use alloc::vec::Vec;

use super::{Alphabet, Gen, WordPoly};
use crate::scalars::{factorial, int, rat, HSeries, Rational};

/// `left * right = sign * right * left + correction`, for `left > right` in PBW order.
#[derive(Clone, Debug)]
pub struct SwapRule {
    pub left: Gen,
    pub right: Gen,
    pub sign: i64,
    pub correction: WordPoly,
}

/// A defining relation `lhs = rhs`, kept as unreduced words so that it can
/// be pushed through any homomorphism.
#[derive(Clone, Debug)]
pub struct Relation {
    pub id: &'static str,
    pub lhs: WordPoly,
    pub rhs: WordPoly,
}

impl Relation {
    pub fn residual(&self) -> WordPoly {
        self.lhs.sub(&self.rhs)
    }
}

/// Rewrite data for one alphabet at one truncation order.
#[derive(Clone, Debug)]
pub struct Presentation {
    alphabet: Alphabet,
    order: usize,
    swaps: Vec<SwapRule>,
    squares: [Option<WordPoly>; 5],
}

/// Coefficients of `exp(lambda h X)` in powers of `X`.
pub fn exp_hx(order: usize, lambda: &Rational) -> Vec<HSeries> {
    (0..=order)
        .map(|k| {
            let c = pow_rational(lambda, k) / factorial(k);
            HSeries::monomial(order, k, c)
        })
        .collect()
}

/// Coefficients of `cosh(lambda h X)`.
pub fn cosh_hx(order: usize, lambda: &Rational) -> Vec<HSeries> {
    (0..=order)
        .map(|k| {
            if k % 2 == 1 {
                return HSeries::zero(order);
            }
            HSeries::monomial(order, k, pow_rational(lambda, k) / factorial(k))
        })
        .collect()
}

/// Coefficients of `sinh(lambda h X)`.
pub fn sinh_hx(order: usize, lambda: &Rational) -> Vec<HSeries> {
    (0..=order)
        .map(|k| {
            if k % 2 == 0 {
                return HSeries::zero(order);
            }
            HSeries::monomial(order, k, pow_rational(lambda, k) / factorial(k))
        })
        .collect()
}

/// Coefficients of `sinh(hX) / h`; the `1/h` cancels, leaving `X + h^2 X^3 / 6 + ...`.
pub fn sinh_hx_over_h(order: usize) -> Vec<HSeries> {
    (0..=order + 1)
        .map(|k| {
            if k % 2 == 0 {
                return HSeries::zero(order);
            }
            HSeries::monomial(order, k - 1, factorial(k).recip())
        })
        .collect()
}

pub(crate) fn pow_rational(r: &Rational, k: usize) -> Rational {
    (0..k).fold(int(1), |acc, _| acc * r)
}

/// Builder for the word polynomials of one alphabet, with every
/// `h`-dependence dropped for the classical alphabet.
struct Words {
    alphabet: Alphabet,
    order: usize,
}

impl Words {
    fn fix(&self, coeffs: Vec<HSeries>) -> Vec<HSeries> {
        match self.alphabet {
            Alphabet::Deformed => coeffs,
            Alphabet::Classical => coeffs.into_iter().map(|c| c.truncate_above(0)).collect(),
        }
    }

    fn g(&self, g: Gen) -> WordPoly {
        WordPoly::gen(self.alphabet, self.order, g)
    }

    fn c(&self, r: Rational) -> HSeries {
        HSeries::constant(self.order, r)
    }

    fn h(&self, r: Rational) -> HSeries {
        let s = HSeries::monomial(self.order, 1, r);
        match self.alphabet {
            Alphabet::Deformed => s,
            Alphabet::Classical => HSeries::zero(self.order),
        }
    }

    fn zero(&self) -> WordPoly {
        WordPoly::zero(self.alphabet, self.order)
    }

    fn x_series(&self, coeffs: Vec<HSeries>) -> WordPoly {
        WordPoly::power_series(self.alphabet, Gen::X, &self.fix(coeffs))
    }

    fn cosh(&self) -> WordPoly {
        self.x_series(cosh_hx(self.order, &int(1)))
    }

    fn sinh(&self) -> WordPoly {
        self.x_series(sinh_hx(self.order, &int(1)))
    }

    fn sinh_over_h(&self) -> WordPoly {
        self.x_series(sinh_hx_over_h(self.order))
    }

    /// `V- cosh(hX) + cosh(hX) V-`
    fn sym_cosh(&self, g: Gen) -> WordPoly {
        let c = self.cosh();
        self.g(g).mul(&c).add(&c.mul(&self.g(g)))
    }

    /// Right-hand side of `[H, Y]`.
    fn h_y(&self) -> WordPoly {
        let y_c = self.sym_cosh(Gen::Y).scale(&self.c(rat(-1, 2)));
        let vm = self.g(Gen::VMinus);
        let vp = self.g(Gen::VPlus);
        let s = self.sinh();
        let a = vm.mul(&s).mul(&vp).scale(&self.h(int(1)));
        let b = vp.mul(&s).mul(&vm).scale(&self.h(int(-1)));
        y_c.add(&a).add(&b)
    }
}

impl Presentation {
    pub fn new(alphabet: Alphabet, order: usize) -> Self {
        use Gen::*;
        let w = Words { alphabet, order };
        let swap = |left, right, sign, correction| SwapRule { left, right, sign, correction };
        let swaps = alloc::vec![
            swap(VMinus, Y, 1, w.zero()),
            swap(H, Y, 1, w.h_y()),
            swap(VPlus, Y, 1, w.sym_cosh(VMinus).scale(&w.c(rat(-1, 2)))),
            swap(X, Y, 1, w.g(H).scale(&w.c(int(2)))),
            swap(H, VMinus, 1, w.sym_cosh(VMinus).scale(&w.c(rat(-1, 4)))),
            swap(VPlus, VMinus, -1, w.g(H).scale(&w.c(rat(-1, 2)))),
            swap(X, VMinus, 1, w.g(VPlus)),
            swap(VPlus, H, 1, w.g(VPlus).mul(&w.cosh()).scale(&w.c(rat(-1, 2)))),
            swap(X, H, 1, w.sinh_over_h().scale(&w.c(int(-1)))),
            swap(X, VPlus, 1, w.zero()),
        ];
        let mut squares: [Option<WordPoly>; 5] = Default::default();
        squares[VMinus.index()] = Some(w.g(Y).scale(&w.c(rat(-1, 4))));
        squares[VPlus.index()] = Some(w.sinh_over_h().scale(&w.c(rat(1, 4))));
        Presentation { alphabet, order, swaps, squares }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn swap_rules(&self) -> &[SwapRule] {
        &self.swaps
    }

    pub fn swap(&self, left: Gen, right: Gen) -> Option<&SwapRule> {
        self.swaps.iter().find(|r| r.left == left && r.right == right)
    }

    pub fn square(&self, g: Gen) -> Option<&WordPoly> {
        self.squares[g.index()].as_ref()
    }

    /// The defining relations in this alphabet, in their standard form
    /// (before any normal ordering).
    pub fn relations(&self) -> Vec<Relation> {
        use Gen::*;
        let w = Words { alphabet: self.alphabet, order: self.order };
        let classical = self.alphabet == Alphabet::Classical;
        let id = |d: &'static str, c: &'static str| if classical { c } else { d };
        let rel = |id, lhs, rhs| Relation { id, lhs, rhs };
        let (gy, gvm, gh, gvp, gx) = (w.g(Y), w.g(VMinus), w.g(H), w.g(VPlus), w.g(X));
        alloc::vec![
            rel(id("[H,V+]", "[J0,v+]"), gh.super_bracket(&gvp), gvp.mul(&w.cosh()).scale(&w.c(rat(1, 2))),),
            rel(id("[H,V-]", "[J0,v-]"), gh.super_bracket(&gvm), w.sym_cosh(VMinus).scale(&w.c(rat(-1, 4))),),
            rel(id("{V+,V-}", "{v+,v-}"), gvp.super_bracket(&gvm), gh.scale(&w.c(rat(-1, 2)))),
            rel(id("[H,X]", "[J0,J+]"), gh.super_bracket(&gx), w.sinh_over_h()),
            rel(id("[H,Y]", "[J0,J-]"), gh.super_bracket(&gy), w.h_y()),
            rel(id("[X,Y]", "[J+,J-]"), gx.super_bracket(&gy), gh.scale(&w.c(int(2)))),
            rel(id("V+^2", "J+=4v+^2"), gvp.mul(&gvp), w.sinh_over_h().scale(&w.c(rat(1, 4)))),
            rel(id("V-^2", "J-=-4v-^2"), gvm.mul(&gvm), gy.scale(&w.c(rat(-1, 4)))),
            rel(id("[X,V+]", "[J+,v+]"), gx.super_bracket(&gvp), w.zero()),
            rel(id("[Y,V-]", "[J-,v-]"), gy.super_bracket(&gvm), w.zero()),
            rel(id("[X,V-]", "[J+,v-]"), gx.super_bracket(&gvm), gvp.clone()),
            rel(id("[Y,V+]", "[J-,v+]"), gy.super_bracket(&gvp), w.sym_cosh(VMinus).scale(&w.c(rat(1, 2))),),
        ]
    }
}
