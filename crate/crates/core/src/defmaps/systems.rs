use super::series::FnSeries;
use crate::error::{Error, Result};
use crate::pbw::Alphabet;
use crate::scalars::{int, rat, Rational};

/// Forward-map functions of `J+`:
/// `V+ = f1 v+`, `H = f2 J0`, `V- = f3 v- + u v+ + w v+ J0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSolution {
    pub f1: FnSeries,
    pub f2: FnSeries,
    pub f3: FnSeries,
    pub u: FnSeries,
    pub w: FnSeries,
}

/// Inverse-map functions of `T = exp(hX)`, stored as series in `X`:
/// `v+ = g1 V+`, `J0 = g2 H`, `v- = g3 V- + a V+ + b V+ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSolution {
    pub g1: FnSeries,
    pub g2: FnSeries,
    pub g3: FnSeries,
    pub a: FnSeries,
    pub b: FnSeries,
}

fn constant(like: &FnSeries, c: Rational) -> FnSeries {
    FnSeries::constant(like.alphabet(), like.order(), c)
}

/// `sqrt(1 + h^2 J+^2 f1^4)`
pub fn sqrt_term(f1: &FnSeries) -> Result<FnSeries> {
    let z = f1.try_mul(f1)?.mul_var().shift_h(1);
    constant(f1, int(1)).try_add(&z.try_mul(&z)?)?.sqrt()
}

/// `sinh(hX) = h J+ f1^2`, so `X = arcsinh(h J+ f1^2) / h`.
pub fn x_image(f1: &FnSeries) -> Result<FnSeries> {
    let n = f1.order();
    let y = f1.try_mul(f1)?.mul_var();
    let z = y.shift_h(1);
    // arcsinh(z)/z as a series in z^2
    let odd = super::series::arcsinh_coeffs(2 * n + 1);
    let even: alloc::vec::Vec<Rational> = odd.iter().skip(1).step_by(2).cloned().collect();
    let q = z.try_mul(&z)?.compose(&even)?;
    y.try_mul(&q)
}

/// Closed-form solution of the forward system for a given `f1`.
pub fn solve_f_system(f1: &FnSeries) -> Result<FSolution> {
    if f1.alphabet() != Alphabet::Classical {
        return Err(Error::WrongAlphabet("f1 is a function of J+"));
    }
    let one = constant(f1, int(1));
    let s = sqrt_term(f1)?;
    let d1 = f1.deriv();
    let f2 = s.try_mul(f1)?.try_div(&f1.try_add(&d1.mul_var().scale(&int(2)))?)?;
    let f3 = f1.inv()?;
    let w = one.try_sub(&f2)?.div_var()?.try_div(f1)?;
    let u = w.scale(&rat(-1, 4)).try_add(&d1.try_mul(&f2)?.try_div(&f1.try_mul(f1)?)?.scale(&rat(1, 2)))?;
    Ok(FSolution { f1: f1.clone(), f2, f3, u, w })
}

/// The six forward equations, with `[J0, f(J+)] = J+ f'(J+)`.
pub fn residual_f_system(sol: &FSolution) -> Result<[FnSeries; 6]> {
    let FSolution { f1, f2, f3, u, w } = sol;
    let s = sqrt_term(f1)?;
    let j = |x: &FnSeries| x.mul_var();
    let d = FnSeries::deriv;
    let half = rat(1, 2);

    let r1 = f2.try_mul(&j(&d(f1)).scale(&int(2)).try_add(f1)?)?.try_sub(&s.try_mul(f1)?)?;

    let r2 = j(&f2.try_mul(&d(f3))?).scale(&int(2)).try_sub(&f2.try_mul(f3)?)?.try_add(&s.try_mul(f3)?)?;

    let f1_cubed = f1.try_mul(f1)?.try_mul(f1)?;
    let r3 = j(&f2.try_mul(&d(u))?)
        .scale(&int(2))
        .try_add(&f2.try_mul(u)?)?
        .try_add(&s.try_mul(u)?)?
        .try_sub(&j(&f1_cubed).shift_h(2).scale(&half))?;

    let r4 = j(&f1.try_mul(w)?).try_sub(&f1.try_mul(f3)?)?.try_add(f2)?;

    let r5 = j(&f1.try_mul(u)?)
        .scale(&int(2))
        .try_add(&j(&j(&d(f1).try_mul(w)?)))?
        .try_sub(&j(&d(f1).try_mul(f3)?))?
        .try_add(&j(&f1.try_mul(w)?).scale(&half))?;

    let r6 = f3
        .try_mul(&d(f2))?
        .try_add(&j(&f2.try_mul(&d(w))?))?
        .try_sub(&j(&w.try_mul(&d(f2))?))?
        .try_add(&f2.try_mul(w)?.scale(&half))?
        .try_add(&s.try_mul(w)?.scale(&half))?;

    Ok([r1, r2, r3, r4, r5, r6])
}

/// `(T^2 - 1) d/dT = (2 sinh(hX) / h) d/dX`
fn t_derivation(g: &FnSeries) -> Result<FnSeries> {
    let s = FnSeries::sinh_hv_over_h(g.alphabet(), g.order(), &int(1));
    s.try_mul(&g.deriv()).map(|x| x.scale(&int(2)))
}

/// Closed-form solution of the inverse system for a given `g1`.
pub fn solve_g_system(g1: &FnSeries) -> Result<GSolution> {
    if g1.alphabet() != Alphabet::Deformed {
        return Err(Error::WrongAlphabet("g1 is a function of X"));
    }
    let (al, n) = (g1.alphabet(), g1.order());
    let one = constant(g1, int(1));
    let c = FnSeries::cosh_hv(al, n, &int(1));
    let g2 = g1.try_div(&c.try_mul(g1)?.try_add(&t_derivation(g1)?)?)?;
    let g3 = g1.inv()?;
    let tanh_half = FnSeries::sinh_hv(al, n, &rat(1, 2)).try_div(&FnSeries::cosh_hv(al, n, &rat(1, 2)))?;
    let a = tanh_half.shift_h(1).scale(&rat(-1, 4)).try_mul(&g3)?;
    // 2h / (T - T^-1) = 1 / (X * sinh(hX)/(hX))
    let sinhc = FnSeries::sinh_hv_over_h(al, n, &int(1)).div_var()?;
    let b = one.try_sub(&g2)?.div_var()?.try_div(&sinhc.try_mul(g1)?)?;
    Ok(GSolution { g1: g1.clone(), g2, g3, a, b })
}

/// The six inverse equations, with `[H, g(T)] = (T^2 - 1) g'(T) / 2`.
pub fn residual_g_system(sol: &GSolution) -> Result<[FnSeries; 6]> {
    let GSolution { g1, g2, g3, a, b } = sol;
    let (al, n) = (g1.alphabet(), g1.order());
    let one = constant(g1, int(1));
    let c = FnSeries::cosh_hv(al, n, &int(1));
    // T - T^-1 = 2 sinh(hX)
    let t_minus = FnSeries::sinh_hv(al, n, &int(1)).scale(&int(2));
    let dt = t_derivation;

    let q1 = dt(g1)?.try_mul(g2)?.try_add(&c.try_mul(g1)?.try_mul(g2)?)?.try_sub(g1)?;

    let q2 = g2.try_mul(&dt(g3)?)?.try_sub(&c.try_mul(g2)?.try_mul(g3)?)?.try_add(g3)?;

    let q3 = g2
        .try_mul(&dt(a)?)?
        .try_add(&one.try_add(&c.try_mul(g2)?)?.try_mul(a)?)?
        .try_add(&t_minus.try_mul(g2)?.try_mul(g3)?.shift_h(1).scale(&rat(1, 4)))?;

    // 2hT g'(T) = 2 dg/dX
    let q4 = g2
        .try_mul(&dt(b)?)?
        .try_add(&one.try_add(&c.try_mul(g2)?)?.try_sub(&dt(g2)?)?.try_mul(b)?)?
        .try_add(&g2.deriv().try_mul(g3)?.scale(&int(2)))?;

    let q5 = t_minus.try_mul(g1)?.try_mul(b)?.try_add(&g2.try_sub(&one)?.shift_h(1).scale(&int(2)))?;

    let q6 = c
        .try_mul(g1)?
        .scale(&int(2))
        .try_add(&dt(g1)?.scale(&int(2)))?
        .try_mul(b)?
        .try_add(&g1.try_mul(a)?.scale(&int(8)))?
        .try_sub(&g1.deriv().try_mul(g3)?.scale(&int(4)))?;

    Ok([q1, q2, q3, q4, q5, q6])
}

/// `f1 = (1 - 2hJ+)^(-1/4)`
pub fn first_f1(order: usize) -> FnSeries {
    let base = FnSeries::one(Alphabet::Classical, order)
        .try_sub(&FnSeries::monomial(Alphabet::Classical, order, 1, 1, int(2)))
        .expect("same shape");
    base.pow_rational(&rat(-1, 4)).expect("unit series")
}

/// `g1 = T^(-1/2)`
pub fn first_g1(order: usize) -> FnSeries {
    FnSeries::exp_hv(Alphabet::Deformed, order, &rat(-1, 2))
}

/// `f1 = (1 - h^2 J+^2 / 4)^(-1/2)`
pub fn second_f1(order: usize) -> FnSeries {
    let base = FnSeries::one(Alphabet::Classical, order)
        .try_sub(&FnSeries::monomial(Alphabet::Classical, order, 2, 2, rat(1, 4)))
        .expect("same shape");
    base.pow_rational(&rat(-1, 2)).expect("unit series")
}

/// `g1 = sech(hX/2)`
pub fn second_g1(order: usize) -> FnSeries {
    FnSeries::cosh_hv(Alphabet::Deformed, order, &rat(1, 2)).inv().expect("unit series")
}
