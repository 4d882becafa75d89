//! PBW normal forms for the classical enveloping algebra `U(osp(2/1))` and
//! the deformed algebra `U_h(osp(2/1))`.
//!
//! Both algebras share one set of generator slots. Monomials are stored as
//! exponent vectors in the fixed order
//!
//! ```text
//! deformed:  Y^a  V-^e  H^c  V+^d  X^f
//! classical: J-^a v-^e  J0^c v+^d  J+^f
//! ```
//!
//! with the odd exponents `e, d` restricted to `{0, 1}`.

mod element;
mod engine;
mod presentation;
mod words;

pub use element::Element;
pub use engine::{check_relations, Engine};
pub use presentation::{cosh_hx, exp_hx, sinh_hx, sinh_hx_over_h, Presentation, Relation, SwapRule};
pub use words::{Target, WordPoly};

use core::fmt;
use core::ops::Add;

/// Which set of generator names (and which relations) an object lives in.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Alphabet {
    Classical,
    Deformed,
}

/// Z2 grading.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_count(n: usize) -> Parity {
        if n % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// `(-1)^{p(a) p(b)}` as a small integer.
    pub fn koszul(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Generator slot, named after the deformed generators. The classical
/// alphabet uses the same slots: `Y ↔ J-`, `VMinus ↔ v-`, `H ↔ J0`,
/// `VPlus ↔ v+`, `X ↔ J+`. The declaration order is the PBW order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    Y = 0,
    VMinus = 1,
    H = 2,
    VPlus = 3,
    X = 4,
}

impl Gen {
    pub const ALL: [Gen; 5] = [Gen::Y, Gen::VMinus, Gen::H, Gen::VPlus, Gen::X];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Gen {
        Gen::ALL[i]
    }

    pub fn parity(self) -> Parity {
        match self {
            Gen::VMinus | Gen::VPlus => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn name(self, alphabet: Alphabet) -> &'static str {
        match (alphabet, self) {
            (Alphabet::Deformed, Gen::Y) => "Y",
            (Alphabet::Deformed, Gen::VMinus) => "V-",
            (Alphabet::Deformed, Gen::H) => "H",
            (Alphabet::Deformed, Gen::VPlus) => "V+",
            (Alphabet::Deformed, Gen::X) => "X",
            (Alphabet::Classical, Gen::Y) => "J-",
            (Alphabet::Classical, Gen::VMinus) => "v-",
            (Alphabet::Classical, Gen::H) => "J0",
            (Alphabet::Classical, Gen::VPlus) => "v+",
            (Alphabet::Classical, Gen::X) => "J+",
        }
    }

    pub fn parse(name: &str) -> Option<Generator> {
        [Alphabet::Deformed, Alphabet::Classical].into_iter().find_map(|alphabet| {
            Gen::ALL.into_iter().find(|g| g.name(alphabet) == name).map(|gen| Generator { alphabet, gen })
        })
    }
}

/// A generator together with its alphabet.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    pub alphabet: Alphabet,
    pub gen: Gen,
}

impl Generator {
    pub fn deformed(gen: Gen) -> Self {
        Generator { alphabet: Alphabet::Deformed, gen }
    }

    pub fn classical(gen: Gen) -> Self {
        Generator { alphabet: Alphabet::Classical, gen }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.gen.name(self.alphabet))
    }
}

/// PBW-ordered monomial, stored as its exponent vector.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(pub [u16; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn gen(g: Gen) -> Self {
        let mut m = Self::ONE;
        m.0[g.index()] = 1;
        m
    }

    pub fn from_exponents(y: u16, vm: u16, h: u16, vp: u16, x: u16) -> Self {
        Monomial([y, vm, h, vp, x])
    }

    pub fn exp(&self, g: Gen) -> u16 {
        self.0[g.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 5]
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count((self.0[1] + self.0[3]) as usize)
    }

    /// Number of odd letters in the word.
    pub fn odd_count(&self) -> usize {
        (self.0[1] + self.0[3]) as usize
    }

    /// Rightmost generator of the word, if any.
    pub fn last(&self) -> Option<Gen> {
        (0..5).rev().find(|&i| self.0[i] > 0).map(Gen::from_index)
    }

    /// The monomial with its rightmost letter removed.
    pub fn strip_last(&self) -> Option<(Monomial, Gen)> {
        let g = self.last()?;
        let mut m = *self;
        m.0[g.index()] -= 1;
        Some((m, g))
    }

    /// Appends `g` on the right; only valid when `g` is not below the last letter.
    pub(crate) fn push_ordered(&self, g: Gen) -> Monomial {
        let mut m = *self;
        m.0[g.index()] += 1;
        m
    }

    /// Letters of the monomial, left to right.
    pub fn word(&self) -> alloc::vec::Vec<Gen> {
        let mut w = alloc::vec::Vec::with_capacity(self.degree());
        for g in Gen::ALL {
            for _ in 0..self.exp(g) {
                w.push(g);
            }
        }
        w
    }

    /// Respects the odd-exponent bound.
    pub fn is_valid(&self) -> bool {
        self.0[1] <= 1 && self.0[3] <= 1
    }

    pub fn fmt_in(&self, alphabet: Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in Gen::ALL {
            let e = self.exp(g);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(g.name(alphabet))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
