use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hopf::Hopf;
use crate::pbw::{Element, Engine, Gen, Monomial, Parity};
use crate::report::Check;
use crate::scalars::{int, rat, HSeries};

fn homogeneous(el: &Element) -> Result<Parity> {
    if el.is_zero() {
        return Ok(Parity::Even);
    }
    el.parity().ok_or(Error::NonHomogeneous)
}

/// `ad a(t) = Σ (-1)^{p(a2)p(t)} a1 t S(a2)` over `Δ(a) = Σ a1 ⊗ a2`.
pub fn adjoint_action(hopf: &Hopf<'_>, a: &Element, t: &Element) -> Result<Element> {
    let e = hopf.engine();
    homogeneous(a)?;
    let pt = homogeneous(t)?;
    let delta = hopf.delta(a)?;
    let mut out = e.zero();
    for (key, c) in delta.terms() {
        let left = e.mul(&e.monomial(key[0]), t)?;
        let term = e.mul(&left, &hopf.antipode(&e.monomial(key[1]))?)?;
        let sign = key[1].parity().koszul(pt);
        out.add_scaled(&term, &c.scale(&int(sign)));
    }
    Ok(out)
}

fn t_pow(e: &Engine, num: i64, den: i64) -> Element {
    e.series_of_x(&rat(num, den))
}

/// The closed generator formulas, for the deformed algebra only.
pub fn adjoint_action_closed(e: &Engine, a: Gen, t: &Element) -> Result<Element> {
    let odd = homogeneous(t)?.is_odd();
    let n = e.order();
    let h = |k: i64, d: i64| HSeries::monomial(n, 1, rat(k, d));
    let vp = e.gen(Gen::VPlus);
    // [A, B] for even t, {A, B} for odd t when A is odd
    let bracket = |x: &Element, y: &Element| e.super_bracket(x, y);
    Ok(match a {
        Gen::X => e.commutator(&e.gen(Gen::X), t)?,
        Gen::VPlus | Gen::VMinus => {
            let v = e.mul(&e.gen(a), &t_pow(e, -1, 2))?;
            let half = t_pow(e, 1, 2);
            let mut out = e.mul(&bracket(&v, &e.mul(&half, t)?)?, &half)?;
            if a == Gen::VMinus {
                let tail = e.product(&[&half, t, &vp])?;
                out.add_scaled(&tail, &h(if odd { -1 } else { 1 }, 2));
            }
            out
        }
        Gen::H => ad_h(e, t, odd)?,
        Gen::Y => {
            let (t1, t_inv, half) = (t_pow(e, 1, 1), t_pow(e, -1, 1), t_pow(e, 1, 2));
            let tt = e.mul(&t1, t)?;
            let ht = e.mul(&e.gen(Gen::H), &t_inv)?;
            let mut out = e.mul(&e.commutator(&e.mul(&e.gen(Gen::Y), &t_inv)?, &tt)?, &t1)?;
            out.add_scaled(&e.mul(&e.anticommutator(&ht, &tt)?, &t1)?, &h(1, 2));
            let vm = e.gen(Gen::VMinus);
            let mid = e.product(&[&vp, t, &vm])?.try_add(&e.product(&[&vm, t, &vp])?)?;
            out.add_scaled(&e.product(&[&half, &mid, &half])?, &h(if odd { 2 } else { -2 }, 1));
            out.add_scaled(&ad_h(e, t, odd)?, &h(-1, 2));
            out
        }
    })
}

fn ad_h(e: &Engine, t: &Element, odd: bool) -> Result<Element> {
    let n = e.order();
    let (t1, t_inv, half) = (t_pow(e, 1, 1), t_pow(e, -1, 1), t_pow(e, 1, 2));
    let vp = e.gen(Gen::VPlus);
    let ht = e.mul(&e.gen(Gen::H), &t_inv)?;
    let mut out = e.mul(&e.commutator(&ht, &e.mul(&t1, t)?)?, &t1)?;
    let vph = e.mul(&vp, &half)?;
    let first = e.product(&[&t1, t, &vp, &vp])?;
    let second = e.product(&[&vph, t, &vph])?;
    let inner = if odd { first.try_sub(&second)? } else { first.try_add(&second)? };
    out.add_scaled(&inner, &HSeries::monomial(n, 1, rat(-2, 1)));
    Ok(out)
}

fn basis(max_degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for y in 0..=max_degree as u16 {
        for h in 0..=max_degree as u16 {
            for x in 0..=max_degree as u16 {
                for vm in 0..=1 {
                    for vp in 0..=1 {
                        let m = Monomial::from_exponents(y, vm, h, vp, x);
                        if m.degree() <= max_degree {
                            out.push(m);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Closed formulas against the definition on every PBW monomial up to
/// `max_degree`, one check per generator.
pub fn closed_form_checks(hopf: &Hopf<'_>, max_degree: usize) -> Vec<Check> {
    let e = hopf.engine();
    let n = e.order();
    let monomials = basis(max_degree);
    Gen::ALL
        .into_iter()
        .map(|g| {
            let id = format!("tensorops/closed-form/{}", g.name(e.alphabet()));
            for m in &monomials {
                let t = e.monomial(*m);
                let r = adjoint_action_closed(e, g, &t)
                    .and_then(|c| adjoint_action(hopf, &e.gen(g), &t).and_then(|d| c.try_sub(&d)));
                match r {
                    Ok(r) if r.is_zero() => {}
                    Ok(r) => return Check::fail(id, n, format!("t = {}: {r}", t)),
                    Err(err) => return Check::fail(id, n, format!("t = {}: {err}", t)),
                }
            }
            Check::pass(id, n)
        })
        .collect()
}
