use alloc::format;
use alloc::vec::Vec;

use super::{Hopf, Tensor};
use crate::error::{Error, Result};
use crate::pbw::{Alphabet, Element, Engine, Gen, Monomial};
use crate::report::{sort_checks, Check};
use crate::scalars::{int, HSeries, Rational};

/// `r = H ⊗ X - X ⊗ H - 2 V+ ⊗ V+`, deformed names.
pub fn classical_r(order: usize) -> Tensor {
    let m = Monomial::gen;
    let mut r = Tensor::zero(Alphabet::Deformed, order, 2);
    let c = |k| HSeries::constant(order, int(k));
    r.add_term(alloc::vec![m(Gen::H), m(Gen::X)], &c(1));
    r.add_term(alloc::vec![m(Gen::X), m(Gen::H)], &c(-1));
    r.add_term(alloc::vec![m(Gen::VPlus), m(Gen::VPlus)], &c(-2));
    r
}

/// `δ(g) = [r, g ⊗ 1 + 1 ⊗ g]` in the classical limit (order 0, deformed names).
pub fn classical_cocommutator(g: Gen) -> Tensor {
    let engine = Engine::deformed(0);
    let r = classical_r(0);
    let e = engine.gen(g);
    let one = engine.one();
    let mut prim = Tensor::outer(&[&e, &one]).expect("same engine");
    prim.add_scaled(&Tensor::outer(&[&one, &e]).expect("same engine"), &HSeries::one(0));
    let rp = super::tensor_multiply(&engine, &r, &prim).expect("same engine");
    let pr = super::tensor_multiply(&engine, &prim, &r).expect("same engine");
    // r is even, so the graded bracket is the plain commutator
    rp.try_sub(&pr).expect("same shape")
}

/// Coefficient of `h` in `Δ(g) - τΔ(g)`, at order 0.
pub fn first_order_cocommutator(hopf: &Hopf<'_>, g: Gen) -> Result<Tensor> {
    if hopf.alphabet() != Alphabet::Deformed {
        return Err(Error::WrongAlphabet("cocommutator needs the deformed coproduct"));
    }
    if hopf.order() < 1 {
        return Err(Error::OrderMismatch { left: 1, right: hopf.order() });
    }
    let d = hopf.delta_gen(g);
    Ok(d.try_sub(&d.flip())?.h_coefficient(1).with_order(0))
}

/// The single rational `κ` with `first_order_cocommutator(g) = κ δ(g)` for
/// all generators, or `None` when no such constant exists.
pub fn measure_kappa(hopf: &Hopf<'_>) -> Result<Option<Rational>> {
    let mut kappa: Option<Rational> = None;
    let mut pairs = Vec::new();
    for g in Gen::ALL {
        let delta = classical_cocommutator(g);
        let first = first_order_cocommutator(hopf, g)?;
        if kappa.is_none() {
            if let Some((k, c)) = delta.terms().next() {
                kappa = Some(first.coefficient(k).coeff(0) / c.coeff(0));
            }
        }
        pairs.push((delta, first));
    }
    let Some(kappa) = kappa else { return Ok(None) };
    let uniform = pairs.iter().all(|(d, f)| d.scale_rational(&kappa) == *f);
    Ok(uniform.then_some(kappa))
}

/// Homomorphism residuals of Δ and anti-homomorphism residuals of S on every
/// defining relation.
pub fn relation_checks(hopf: &Hopf<'_>) -> Vec<Check> {
    let n = hopf.order();
    let mut out = Vec::new();
    for rel in hopf.engine().presentation().relations() {
        let res = rel.residual();
        let id = format!("hopf/hom/{}", rel.id);
        out.push(match res.eval(&hopf.coproduct_target()) {
            Ok(t) => Check::residual(id, n, t.is_zero(), &t),
            Err(e) => Check::fail(id, n, format!("{e}")),
        });
        let id = format!("hopf/antipode-hom/{}", rel.id);
        out.push(match res.eval(&hopf.antipode_target()) {
            Ok(s) => Check::residual(id, n, s.is_zero(), &s),
            Err(e) => Check::fail(id, n, format!("{e}")),
        });
    }
    out
}

/// Coassociativity, counit and antipode axioms for one generator.
pub fn generator_checks(hopf: &Hopf<'_>, g: Gen) -> Vec<Check> {
    let n = hopf.order();
    let name = g.name(hopf.alphabet());
    let e = hopf.engine().gen(g);
    let d = hopf.delta_gen(g);
    let mut out = Vec::new();

    let coassoc = hopf.delta_left(d).try_sub(&hopf.delta_right(d)).expect("rank 3");
    out.push(Check::residual(format!("hopf/coassoc/{name}"), n, coassoc.is_zero(), &coassoc));

    let sides: [(&str, Element, Element); 4] = [
        ("counit-left", hopf.counit_left(d), e.clone()),
        ("counit-right", hopf.counit_right(d), e.clone()),
        ("antipode-left", hopf.antipode_left(d), eps_one(hopf, &e)),
        ("antipode-right", hopf.antipode_right(d), eps_one(hopf, &e)),
    ];
    for (what, lhs, rhs) in sides {
        let r = lhs.try_sub(&rhs).expect("same engine");
        out.push(Check::residual(format!("hopf/{what}/{name}"), n, r.is_zero(), &r));
    }
    out
}

fn eps_one(hopf: &Hopf<'_>, e: &Element) -> Element {
    hopf.engine().series(hopf.counit(e))
}

/// Full Hopf suite at truncation order `order`: relation homomorphism,
/// generator axioms, `r` antisymmetry and the cocommutator normalization.
pub fn check_hopf_axioms(order: usize) -> Vec<Check> {
    let engine = Engine::deformed(order);
    let hopf = Hopf::new(&engine);
    let mut out = relation_checks(&hopf);
    for g in Gen::ALL {
        out.extend(generator_checks(&hopf, g));
    }
    out.extend(bialgebra_checks(&hopf));
    sort_checks(&mut out);
    out
}

/// `r + τ(r) = 0` and the measured `κ`.
pub fn bialgebra_checks(hopf: &Hopf<'_>) -> Vec<Check> {
    let n = hopf.order();
    let r = classical_r(0);
    let sym = r.try_add(&r.flip()).expect("same shape");
    let mut out = alloc::vec![Check::residual("hopf/r-antisymmetric", n, sym.is_zero(), &sym)];
    if n == 0 {
        return out;
    }
    match measure_kappa(hopf) {
        Ok(Some(k)) => {
            out.push(Check::pass("hopf/kappa-uniform", n));
            out.push(Check::info("hopf/kappa", n, format!("kappa = {k}")));
        }
        Ok(None) => out.push(Check::fail("hopf/kappa-uniform", n, "no single constant")),
        Err(e) => out.push(Check::fail("hopf/kappa-uniform", n, format!("{e}"))),
    }
    out
}
