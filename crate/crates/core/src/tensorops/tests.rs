use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::hopf::Hopf;
use crate::pbw::{Element, Engine, Gen, Monomial};
use crate::report::Status;
use crate::scalars::{int, rat, HSeries};

const N: usize = 6;

fn failing(checks: &[crate::report::Check]) -> Vec<&crate::report::Check> {
    checks.iter().filter(|c| c.status == Status::Fail).collect()
}

#[test]
fn definition_examples() {
    let e = Engine::deformed(N);
    let hopf = Hopf::new(&e);
    let t = e.product(&[&e.gen(Gen::Y), &e.gen(Gen::H), &e.gen(Gen::VPlus)]).unwrap();
    assert_eq!(adjoint_action(&hopf, &e.gen(Gen::X), &t).unwrap(), e.commutator(&e.gen(Gen::X), &t).unwrap());
    assert_eq!(adjoint_action(&hopf, &e.one(), &t).unwrap(), t);

    let vp = e.gen(Gen::VPlus);
    let ad = adjoint_action(&hopf, &vp, &vp).unwrap();
    assert_eq!(ad.truncate_above(0), e.pow(&vp, 2).unwrap().scale_rational(&int(2)).truncate_above(0));

    let mixed = e.gen(Gen::H).try_add(&vp).unwrap();
    assert_eq!(adjoint_action(&hopf, &mixed, &t), Err(crate::Error::NonHomogeneous));
}

#[test]
fn closed_form_examples() {
    let e = Engine::deformed(N);
    let hopf = Hopf::new(&e);
    let (h, x) = (e.gen(Gen::H), e.gen(Gen::X));
    assert_eq!(adjoint_action_closed(&e, Gen::X, &h).unwrap(), e.commutator(&x, &h).unwrap());
    assert!(adjoint_action_closed(&e, Gen::H, &e.one()).unwrap().is_zero());
    let vp = e.gen(Gen::VPlus);
    let closed = adjoint_action_closed(&e, Gen::VMinus, &vp).unwrap();
    assert_eq!(closed, adjoint_action(&hopf, &e.gen(Gen::VMinus), &vp).unwrap());
}

#[test]
fn closed_forms_match_definition_up_to_length_three() {
    let e = Engine::deformed(4);
    let checks = closed_form_checks(&Hopf::new(&e), 3);
    assert_eq!(checks.len(), 5);
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
}

#[test]
fn family_examples() {
    let first = build_tensor_ops(FamilyTag::First, N).unwrap();
    let e = Engine::deformed(N);
    let x = e.gen(Gen::X);
    let expected = x.try_sub(&e.pow(&x, 2).unwrap().scale(&HSeries::monomial(N, 1, int(1)))).unwrap();
    assert_eq!(first.op(0).truncate_above(1), expected);

    let second = build_tensor_ops(FamilyTag::Second, N).unwrap();
    for i in 0..3 {
        assert_eq!(first.op(i), second.op(i));
    }
    assert_ne!(first.op(3), second.op(3));

    let classical = build_tensor_ops(FamilyTag::Classical, N).unwrap();
    let c = Engine::classical(N);
    let gens = [Gen::X, Gen::VPlus, Gen::H, Gen::VMinus, Gen::Y];
    for (op, g) in classical.ops.iter().zip(gens) {
        assert_eq!(*op, c.gen(g));
    }
}

#[test]
fn covariance_examples() {
    let first = build_tensor_ops(FamilyTag::First, N).unwrap();
    let e = Engine::deformed(N);
    let hopf = Hopf::new(&e);
    assert!(adjoint_action(&hopf, &e.gen(Gen::X), first.op(1)).unwrap().is_zero());
    assert_eq!(adjoint_action(&hopf, &e.gen(Gen::H), first.op(0)).unwrap(), *first.op(0));
}

#[test]
fn every_family_is_covariant() {
    let checks = check_tensor_ops(N);
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
    for tag in FamilyTag::ALL {
        let prefix = alloc::format!("tensorops/{}/covariance/", tag.name());
        assert_eq!(checks.iter().filter(|c| c.id.starts_with(&prefix)).count(), 25);
    }
    for id in ["tensorops/relation/tau-1/2", "tensorops/relation/tau-1", "tensorops/identical/0"] {
        assert!(checks.iter().any(|c| c.id == id && c.status == Status::Pass), "{id}");
    }
    let twisted: Vec<_> = checks.iter().filter(|c| c.id.contains("/twisted/")).collect();
    assert_eq!(twisted.len(), 10);
    assert!(twisted.iter().all(|c| c.status == Status::Info));
}

#[test]
fn corrupted_operator_is_caught() {
    let mut f = build_tensor_ops(FamilyTag::Second, N).unwrap();
    let e = Engine::deformed(N);
    f.ops[4].add_scaled(&e.gen(Gen::H), &HSeries::monomial(N, 2, rat(1, 3)));
    let bad = covariance_checks(&f, N);
    assert!(bad.iter().any(|c| c.id == "tensorops/second/covariance/X/-1" && c.status == Status::Fail));
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    (0u16..=2, 0u16..=1, 0u16..=2, 0u16..=1, 0u16..=2)
        .prop_map(|(y, vm, h, vp, x)| Monomial::from_exponents(y, vm, h, vp, x))
}

fn ad(hopf: &Hopf<'_>, a: &Element, t: &Element) -> Element {
    adjoint_action(hopf, a, t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ad_is_a_representation(a in 0usize..5, b in 0usize..5, m in arb_monomial()) {
        let e = Engine::deformed(3);
        let hopf = Hopf::new(&e);
        let (a, b) = (e.gen(Gen::from_index(a)), e.gen(Gen::from_index(b)));
        let t = e.monomial(m);
        let ab = e.mul(&a, &b).unwrap();
        prop_assert_eq!(ad(&hopf, &ab, &t), ad(&hopf, &a, &ad(&hopf, &b, &t)));

        let lhs = ad(&hopf, &e.super_bracket(&a, &b).unwrap(), &t);
        let sign = a.parity().unwrap().koszul(b.parity().unwrap());
        let rhs = ad(&hopf, &a, &ad(&hopf, &b, &t))
            .try_sub(&ad(&hopf, &b, &ad(&hopf, &a, &t)).scale_rational(&int(sign)))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
