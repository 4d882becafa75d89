use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::pbw::{Engine, Gen, Monomial};
use crate::report::Status;
use crate::scalars::{int, rat, HSeries};

fn m(g: Gen) -> Monomial {
    Monomial::gen(g)
}

fn t2(order: usize, terms: &[(i64, i64, Monomial, Monomial)]) -> Tensor {
    let mut t = Tensor::zero(Alphabet::Deformed, order, 2);
    for &(n, d, a, b) in terms {
        t.add_term(vec![a, b], &HSeries::constant(order, rat(n, d)));
    }
    t
}

#[test]
fn delta_of_x_is_primitive() {
    let e = Engine::deformed(6);
    let hopf = Hopf::new(&e);
    let d = hopf.coproduct(&e.gen(Gen::X)).unwrap();
    assert_eq!(d, t2(6, &[(1, 1, m(Gen::X), Monomial::ONE), (1, 1, Monomial::ONE, m(Gen::X))]));
    assert_eq!(d.to_string(), "X ⊗ 1 + 1 ⊗ X");
}

#[test]
fn delta_of_one() {
    let e = Engine::deformed(4);
    let hopf = Hopf::new(&e);
    assert_eq!(hopf.coproduct(&e.one()).unwrap(), Tensor::unit(Alphabet::Deformed, 4, 2));
}

#[test]
fn delta_is_multiplicative_on_v_plus_square() {
    let e = Engine::deformed(6);
    let hopf = Hopf::new(&e);
    let vp = e.gen(Gen::VPlus);
    let d = hopf.coproduct(&vp).unwrap();
    let lhs = hopf.tensor_multiply(&d, &d).unwrap();
    let rhs = hopf.coproduct(&e.mul(&vp, &vp).unwrap()).unwrap();
    assert!(lhs.try_sub(&rhs).unwrap().is_zero());
}

#[test]
fn coproduct_rejects_classical_input() {
    let c = Engine::classical(2);
    let hopf = Hopf::new(&c);
    assert!(matches!(hopf.coproduct(&c.gen(Gen::H)), Err(Error::WrongAlphabet(_))));
    let d = hopf.classical_coproduct(&c.gen(Gen::H)).unwrap();
    assert_eq!(d.to_string(), "J0 ⊗ 1 + 1 ⊗ J0");
}

#[test]
fn counit_examples() {
    let e = Engine::deformed(3);
    let hopf = Hopf::new(&e);
    assert!(hopf.counit(&e.gen(Gen::H)).is_zero());
    let mut a = e.one();
    a.add_scaled(&e.gen(Gen::X), &HSeries::monomial(3, 1, int(1)));
    assert!(hopf.counit(&a).is_one());
    let vv = e.mul(&e.gen(Gen::VPlus), &e.gen(Gen::VMinus)).unwrap();
    // V+V- = -H/2 - V-V+ has no constant term
    assert!(hopf.counit(&vv).is_zero());
}

#[test]
fn antipode_examples() {
    let e = Engine::deformed(6);
    let hopf = Hopf::new(&e);
    let s_h = hopf.antipode(&e.gen(Gen::H)).unwrap();
    let vp2 = e.mul(&e.gen(Gen::VPlus), &e.gen(Gen::VPlus)).unwrap();
    let mut expected = e.gen(Gen::H).neg();
    expected.add_scaled(&vp2, &HSeries::monomial(6, 1, int(-2)));
    assert_eq!(s_h, expected);

    assert_eq!(hopf.antipode(&vp2).unwrap(), vp2.neg());
    // same value through S(X^k) = (-X)^k applied to sinh(hX)/(4h)
    let sinh = e.x_function(&crate::pbw::sinh_hx_over_h(6));
    let s_sinh = hopf.antipode(&sinh.scale_rational(&rat(1, 4))).unwrap();
    assert_eq!(s_sinh, vp2.neg());

    assert_eq!(hopf.antipode(&e.one()).unwrap(), e.one());
}

#[test]
fn tensor_multiply_examples() {
    let e = Engine::deformed(6);
    let vpvp = t2(6, &[(1, 1, m(Gen::VPlus), m(Gen::VPlus))]);
    let sq = tensor_multiply(&e, &vpvp, &vpvp).unwrap();
    let vp2 = e.mul(&e.gen(Gen::VPlus), &e.gen(Gen::VPlus)).unwrap();
    let expected = Tensor::outer(&[&vp2, &vp2]).unwrap().scale_rational(&int(-1));
    assert_eq!(sq, expected);

    let one = Tensor::unit(Alphabet::Deformed, 6, 2);
    assert_eq!(tensor_multiply(&e, &one, &vpvp).unwrap(), vpvp);

    let h1 = t2(6, &[(1, 1, m(Gen::H), Monomial::ONE)]);
    let one_h = t2(6, &[(1, 1, Monomial::ONE, m(Gen::H))]);
    let hh = t2(6, &[(1, 1, m(Gen::H), m(Gen::H))]);
    assert_eq!(tensor_multiply(&e, &h1, &one_h).unwrap(), hh);
}

#[test]
fn tensor_multiply_rejects_mismatch() {
    let e = Engine::deformed(2);
    let a = Tensor::unit(Alphabet::Deformed, 2, 2);
    let b = Tensor::unit(Alphabet::Deformed, 2, 3);
    assert_eq!(tensor_multiply(&e, &a, &b), Err(Error::RankMismatch { left: 2, right: 3 }));
    let c = Tensor::unit(Alphabet::Classical, 2, 2);
    assert_eq!(tensor_multiply(&e, &a, &c), Err(Error::MixedAlphabet));
}

#[test]
fn rank_three_crossing_signs() {
    let e = Engine::deformed(2);
    let mut a = Tensor::zero(Alphabet::Deformed, 2, 3);
    a.add_term(vec![Monomial::ONE, m(Gen::VPlus), m(Gen::VPlus)], &HSeries::one(2));
    let mut b = Tensor::zero(Alphabet::Deformed, 2, 3);
    b.add_term(vec![m(Gen::VMinus), m(Gen::VMinus), Monomial::ONE], &HSeries::one(2));
    // b_1 crosses a_2, a_3; b_2 crosses a_3: three odd crossings
    let p = tensor_multiply(&e, &a, &b).unwrap();
    let vpvm = e.mul(&e.gen(Gen::VPlus), &e.gen(Gen::VMinus)).unwrap();
    let expected =
        Tensor::outer(&[&e.gen(Gen::VMinus), &vpvm, &e.gen(Gen::VPlus)]).unwrap().scale_rational(&int(-1));
    assert_eq!(p, expected);
}

// Reference table of the classical cocommutators.
fn delta_table(g: Gen) -> Tensor {
    let (y, vm, h, vp, x) = (m(Gen::Y), m(Gen::VMinus), m(Gen::H), m(Gen::VPlus), m(Gen::X));
    match g {
        Gen::H => t2(0, &[(-1, 1, h, x), (1, 1, x, h), (2, 1, vp, vp)]),
        Gen::X => Tensor::zero(Alphabet::Deformed, 0, 2),
        Gen::Y => t2(0, &[(1, 1, x, y), (-1, 1, y, x), (2, 1, vp, vm), (2, 1, vm, vp)]),
        Gen::VPlus => t2(0, &[(1, 2, x, vp), (-1, 2, vp, x)]),
        Gen::VMinus => t2(0, &[(1, 2, x, vm), (-1, 2, vm, x)]),
    }
}

#[test]
fn classical_cocommutator_matches_table() {
    for g in Gen::ALL {
        assert_eq!(classical_cocommutator(g), delta_table(g), "{g:?}");
    }
    assert_eq!(classical_cocommutator(Gen::H), classical_r(0).scale_rational(&int(-1)));
}

#[test]
fn r_is_super_antisymmetric() {
    let r = classical_r(0);
    assert!(r.try_add(&r.flip()).unwrap().is_zero());
}

#[test]
fn first_order_cocommutator_is_twice_delta() {
    let e = Engine::deformed(2);
    let hopf = Hopf::new(&e);
    assert!(first_order_cocommutator(&hopf, Gen::X).unwrap().is_zero());
    for g in Gen::ALL {
        let f = first_order_cocommutator(&hopf, g).unwrap();
        assert_eq!(f, delta_table(g).scale_rational(&int(2)), "{g:?}");
    }
    assert_eq!(measure_kappa(&hopf).unwrap(), Some(int(2)));
}

#[test]
fn axioms_hold_at_low_orders() {
    for n in 1..=3 {
        let checks = check_hopf_axioms(n);
        let bad: Vec<_> = checks.iter().filter(|c| c.status == Status::Fail).collect();
        assert!(bad.is_empty(), "order {n}: {bad:?}");
        assert_eq!(checks.iter().filter(|c| c.id.starts_with("hopf/hom/")).count(), 12);
    }
}

#[test]
fn classical_structure_satisfies_axioms() {
    let c = Engine::classical(0);
    let hopf = Hopf::new(&c);
    let mut checks = relation_checks(&hopf);
    for g in Gen::ALL {
        checks.extend(generator_checks(&hopf, g));
    }
    assert!(checks.iter().all(|c| c.status == Status::Pass), "{checks:?}");
}

fn arb_tensor() -> impl Strategy<Value = Tensor> {
    let mono = (0u16..2, 0u16..2, 0u16..2, 0u16..2, 0u16..2)
        .prop_map(|(a, b, c, d, e)| Monomial::from_exponents(a, b, c, d, e));
    prop::collection::vec((mono.clone(), mono, -3i64..=3), 1..4).prop_map(|terms| {
        let mut t = Tensor::zero(Alphabet::Deformed, 2, 2);
        for (a, b, c) in terms {
            t.add_term(vec![a, b], &HSeries::constant(2, int(c)));
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn flip_is_an_involution(a in arb_tensor()) {
        prop_assert_eq!(a.flip().flip(), a);
    }

    #[test]
    fn flip_is_multiplicative(a in arb_tensor(), b in arb_tensor()) {
        let e = Engine::deformed(2);
        let lhs = tensor_multiply(&e, &a, &b).unwrap().flip();
        let rhs = tensor_multiply(&e, &a.flip(), &b.flip()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
