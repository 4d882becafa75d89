use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::pbw::Parity;
use crate::scalars::{factorial, HSeries, Rational};

/// Square matrix over truncated `h`-series acting on a graded space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    order: usize,
    parities: Vec<Parity>,
    entries: Vec<HSeries>,
}

impl SuperMatrix {
    pub fn zero(order: usize, parities: &[Parity]) -> Self {
        let n = parities.len();
        SuperMatrix { order, parities: parities.to_vec(), entries: vec![HSeries::zero(order); n * n] }
    }

    pub fn identity(order: usize, parities: &[Parity]) -> Self {
        let mut m = Self::zero(order, parities);
        for i in 0..m.dim() {
            m.set(i, i, HSeries::one(order));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    /// Zero-based entry.
    pub fn entry(&self, i: usize, j: usize) -> &HSeries {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: HSeries) {
        let n = self.dim();
        self.entries[i * n + j] = c.with_order(self.order);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HSeries::is_zero)
    }

    fn same_shape(&self, other: &SuperMatrix) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        if self.parities != other.parities {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.same_shape(other)?;
        let n = self.dim();
        let mut out = Self::zero(self.order, &self.parities);
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &HSeries) -> SuperMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = &*a * c;
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> SuperMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.scale(c);
        }
        out
    }

    /// Multiply every entry by `h^k`.
    pub fn shift_h(&self, k: usize) -> SuperMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.shift(k);
        }
        out
    }

    pub fn pow(&self, k: usize) -> SuperMatrix {
        let mut out = Self::identity(self.order, &self.parities);
        for _ in 0..k {
            out = out.try_mul(self).expect("same shape");
        }
        out
    }

    pub fn truncate_above(&self, k: usize) -> SuperMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.truncate_above(k);
        }
        out
    }

    /// Whether every nonzero entry sits where row and column parities
    /// differ by `p`.
    pub fn respects_parity(&self, p: Parity) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.entry(i, j).is_zero() || self.parities[i] + self.parities[j] == p))
    }

    /// Parity of a homogeneous matrix; `None` for mixed ones. The zero
    /// matrix counts as even.
    pub fn parity(&self) -> Option<Parity> {
        if self.respects_parity(Parity::Even) {
            Some(Parity::Even)
        } else if self.respects_parity(Parity::Odd) {
            Some(Parity::Odd)
        } else {
            None
        }
    }

    /// Smallest `k` with `m^k = 0`, if it is at most the dimension.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let mut p = Self::identity(self.order, &self.parities);
        for k in 1..=self.dim() {
            p = p.try_mul(self).expect("same shape");
            if p.is_zero() {
                return Some(k);
            }
        }
        None
    }
}

/// `exp(λ h m)` for nilpotent `m`, as a finite sum.
pub fn matrix_exp_nilpotent(m: &SuperMatrix, lambda: &Rational) -> Result<SuperMatrix> {
    let k = m.nilpotency_index().ok_or(Error::NotNilpotent)?;
    let step = m.shift_h(1).scale_rational(lambda);
    let mut term = SuperMatrix::identity(m.order, &m.parities);
    let mut out = term.clone();
    for j in 1..k {
        term = term.try_mul(&step)?;
        out = out.try_add(&term.scale_rational(&(Rational::one() / factorial(j))))?;
    }
    Ok(out)
}

/// Graded Kronecker product:
/// `(a ⊗ b)[(i,j),(k,l)] = (-1)^{p(b) p(k)} a[i,k] b[j,l]`.
pub fn super_kron(a: &SuperMatrix, b: &SuperMatrix) -> Result<SuperMatrix> {
    if a.order != b.order {
        return Err(Error::OrderMismatch { left: a.order, right: b.order });
    }
    a.parity().ok_or(Error::NonHomogeneous)?;
    let pb = b.parity().ok_or(Error::NonHomogeneous)?;
    let (na, nb) = (a.dim(), b.dim());
    let parities: Vec<Parity> =
        a.parities.iter().flat_map(|&p| b.parities.iter().map(move |&q| p + q)).collect();
    let mut out = SuperMatrix::zero(a.order, &parities);
    let n = na * nb;
    for i in 0..na {
        for k in 0..na {
            let x = a.entry(i, k);
            if x.is_zero() {
                continue;
            }
            let x = if pb.is_odd() && a.parities[k].is_odd() { -x } else { x.clone() };
            for j in 0..nb {
                for l in 0..nb {
                    let y = b.entry(j, l);
                    if !y.is_zero() {
                        out.entries[(i * nb + j) * n + k * nb + l] = &x * y;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Entry literal `Σ c_k h^k` from `(k, num, den)` triples.
pub(crate) fn h_poly(order: usize, terms: &[(usize, i64, i64)]) -> HSeries {
    let mut s = HSeries::zero(order);
    for &(k, n, d) in terms {
        s += &HSeries::monomial(order, k, crate::scalars::rat(n, d));
    }
    s
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let mut first = true;
        for i in 0..n {
            for j in 0..n {
                let e = self.entry(i, j);
                if e.is_zero() {
                    continue;
                }
                if !first {
                    f.write_str(", ")?;
                }
                first = false;
                write!(f, "({},{}): {}", i + 1, j + 1, e)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
