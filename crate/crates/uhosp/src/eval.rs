//! Evaluation of parsed expressions to PBW normal form.

use std::fmt;

use num_traits::{One, Zero};
use uhosp_core::defmaps::{arctanh_coeffs, exp_coeffs, log_one_plus_coeffs};
use uhosp_core::error::Error;
use uhosp_core::pbw::{exp_hx, Alphabet, Element, Engine, Monomial};
use uhosp_core::scalars::{int, HSeries, Rational};

use crate::expr::{Expr, Func, Sign};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EvalError {
    Algebra(Error),
    /// A function applied to an argument outside its supported shape.
    Argument {
        func: &'static str,
        reason: &'static str,
    },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Algebra(e) => write!(f, "{e}"),
            EvalError::Argument { func, reason } => write!(f, "{func}: {reason}"),
        }
    }
}

impl std::error::Error for EvalError {}

impl From<Error> for EvalError {
    fn from(e: Error) -> Self {
        EvalError::Algebra(e)
    }
}

/// Engine for the expression's alphabet (deformed when it has no generators).
pub fn engine_for(e: &Expr, order: usize) -> Engine {
    Engine::new(e.alphabet().unwrap_or(Alphabet::Deformed), order)
}

/// Normal form of `e` at truncation order `order`.
pub fn evaluate(e: &Expr, order: usize) -> Result<Element, EvalError> {
    evaluate_in(&engine_for(e, order), e)
}

pub fn evaluate_in(engine: &Engine, e: &Expr) -> Result<Element, EvalError> {
    let n = engine.order();
    Ok(match e {
        Expr::Num(r) => engine.scalar(r.clone()),
        Expr::H => engine.series(HSeries::monomial(n, 1, Rational::one())),
        Expr::Gen(g) => {
            if g.alphabet != engine.alphabet() {
                return Err(Error::MixedAlphabet.into());
            }
            engine.gen(g.gen)
        }
        Expr::T => {
            if engine.alphabet() != Alphabet::Deformed {
                return Err(Error::WrongAlphabet("T is a deformed generator").into());
            }
            engine.x_function(&exp_hx(n, &Rational::one()))
        }
        Expr::Sum(terms) => {
            let mut acc = engine.zero();
            for (sign, t) in terms {
                let v = evaluate_in(engine, t)?;
                acc = match sign {
                    Sign::Plus => acc.try_add(&v)?,
                    Sign::Minus => acc.try_sub(&v)?,
                };
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = engine.one();
            for f in fs {
                acc = engine.mul(&acc, &evaluate_in(engine, f)?)?;
            }
            acc
        }
        Expr::Pow(b, k) => engine.pow(&evaluate_in(engine, b)?, *k as usize)?,
        Expr::Comm(a, b) => engine.commutator(&evaluate_in(engine, a)?, &evaluate_in(engine, b)?)?,
        Expr::Acomm(a, b) => engine.anticommutator(&evaluate_in(engine, a)?, &evaluate_in(engine, b)?)?,
        Expr::Call(func, a) => apply(engine, *func, &evaluate_in(engine, a)?)?,
    })
}

/// Splits `arg` as `c0 + a M` with `M` a single non-unit monomial (or
/// `M = 1` when `arg` is a pure scalar).
fn split_argument(arg: &Element) -> Option<(HSeries, HSeries, Monomial)> {
    let c0 = arg.coefficient(&Monomial::ONE);
    let mut rest = arg.terms().filter(|(m, _)| !m.is_one());
    match (rest.next(), rest.next()) {
        (None, _) => Some((HSeries::zero(arg.order()), c0, Monomial::ONE)),
        (Some((m, a)), None) => Some((c0, a.clone(), *m)),
        _ => None,
    }
}

/// `sum_k coeffs[k] (a M)^k`, exact once `a` vanishes at `h = 0`.
fn power_series(
    engine: &Engine,
    coeffs: &[Rational],
    a: &HSeries,
    m: Monomial,
) -> Result<Element, EvalError> {
    let base = engine.monomial(m);
    let mut acc = engine.zero();
    let mut power = engine.one();
    let mut scalar = HSeries::one(engine.order());
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            power = engine.mul(&power, &base)?;
            scalar = scalar.try_mul(a)?;
        }
        if !c.is_zero() {
            acc.add_scaled(&power, &scalar.scale(c));
        }
    }
    Ok(acc)
}

fn apply(engine: &Engine, func: Func, arg: &Element) -> Result<Element, EvalError> {
    let n = engine.order();
    let name = func.name();
    let shape = EvalError::Argument {
        func: name,
        reason: "argument must be a scalar multiple of one generator monomial",
    };
    let (c0, a, m) = split_argument(arg).ok_or(shape)?;
    let small = |a: &HSeries| a.coeff(0).is_zero();
    match func {
        Func::Ln => {
            if m.is_one() && a.coeff(0).is_one() {
                let u = a.try_sub(&HSeries::one(n))?;
                return power_series(engine, &log_one_plus_coeffs(n), &u, m);
            }
            if c0.is_one() && small(&a) {
                return power_series(engine, &log_one_plus_coeffs(n), &a, m);
            }
            Err(EvalError::Argument {
                func: name,
                reason: "argument must be 1 + a M with a vanishing at h = 0",
            })
        }
        _ => {
            if !c0.is_zero() || !small(&a) {
                return Err(EvalError::Argument { func: name, reason: "argument must vanish at h = 0" });
            }
            let coeffs = match func {
                Func::Exp => exp_coeffs(n, &int(1)),
                Func::Sinh => parity_part(exp_coeffs(n, &int(1)), 1),
                Func::Cosh => parity_part(exp_coeffs(n, &int(1)), 0),
                Func::Arctanh => arctanh_coeffs(n),
                Func::Ln => unreachable!(),
            };
            power_series(engine, &coeffs, &a, m)
        }
    }
}

fn parity_part(mut c: Vec<Rational>, keep: usize) -> Vec<Rational> {
    for (k, x) in c.iter_mut().enumerate() {
        if k % 2 != keep {
            *x = Rational::zero();
        }
    }
    c
}

#[cfg(test)]
mod tests;
