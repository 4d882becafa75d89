use alloc::string::ToString;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::scalars::{factorial, int, rat, HSeries};

fn word(engine: &Engine, gens: &[Gen]) -> Element {
    let w: Vec<Generator> = gens.iter().map(|&gen| Generator { alphabet: engine.alphabet(), gen }).collect();
    engine.normal_form(&w, &HSeries::one(engine.order())).unwrap()
}

// sinh(hX)/(c h) expanded term by term, independent of the presentation code.
fn sinh_over_h_oracle(order: usize, scale: i64) -> Element {
    let mut e = Element::zero(Alphabet::Deformed, order);
    let mut k = 1;
    while k - 1 <= order {
        let c = HSeries::monomial(order, k - 1, factorial(k).recip() / int(scale));
        e.add_term(Monomial::from_exponents(0, 0, 0, 0, k as u16), &c);
        k += 2;
    }
    e
}

#[test]
fn anticommutator_of_odd_generators() {
    let e = Engine::deformed(6);
    let nf = word(&e, &[Gen::VPlus, Gen::VMinus]);
    assert_eq!(nf.to_string(), "-(1/2)*H - V-*V+");
    let br = e.super_bracket(&e.gen(Gen::VPlus), &e.gen(Gen::VMinus)).unwrap();
    assert_eq!(br, e.gen(Gen::H).scale_rational(&rat(-1, 2)));
}

#[test]
fn x_past_v_minus() {
    let e = Engine::deformed(6);
    let nf = word(&e, &[Gen::X, Gen::VMinus]);
    let expected = word(&e, &[Gen::VMinus, Gen::X]).try_add(&e.gen(Gen::VPlus)).unwrap();
    assert_eq!(nf, expected);
}

#[test]
fn v_plus_square_expands_sinh() {
    let e = Engine::deformed(3);
    let sq = word(&e, &[Gen::VPlus, Gen::VPlus]);
    assert_eq!(sq.to_string(), "(1/4)*X + (1/24)*h^2*X^3");
    let e4 = Engine::deformed(4);
    assert_eq!(word(&e4, &[Gen::VPlus, Gen::VPlus]), sinh_over_h_oracle(4, 4));
}

#[test]
fn bracket_h_x_is_sinh_over_h() {
    let e = Engine::deformed(4);
    let br = e.super_bracket(&e.gen(Gen::H), &e.gen(Gen::X)).unwrap();
    assert_eq!(br, sinh_over_h_oracle(4, 1));
}

#[test]
fn classical_odd_square() {
    let e = Engine::classical(6);
    let br = e.super_bracket(&e.gen(Gen::VPlus), &e.gen(Gen::VPlus)).unwrap();
    assert_eq!(br, e.gen(Gen::X).scale_rational(&rat(1, 2)));
    assert_eq!(br.to_string(), "(1/2)*J+");
}

#[test]
fn empty_word_and_unit() {
    let e = Engine::deformed(6);
    assert_eq!(word(&e, &[]), e.one());
    assert_eq!(e.mul(&e.gen(Gen::H), &e.one()).unwrap(), e.gen(Gen::H));
}

#[test]
fn x_y_commutator() {
    let e = Engine::deformed(6);
    let c = e.commutator(&e.gen(Gen::X), &e.gen(Gen::Y)).unwrap();
    assert_eq!(c, e.gen(Gen::H).scale_rational(&int(2)));
}

#[test]
fn mixed_alphabets_rejected() {
    let e = Engine::deformed(6);
    let w = [Generator::deformed(Gen::H), Generator::classical(Gen::X)];
    assert_eq!(e.normal_form(&w, &HSeries::one(6)), Err(crate::Error::MixedAlphabet));
    let c = Engine::classical(6);
    assert!(e.mul(&e.gen(Gen::H), &c.gen(Gen::H)).is_err());
}

#[test]
fn non_homogeneous_bracket_rejected() {
    let e = Engine::deformed(6);
    let mixed = e.gen(Gen::H).try_add(&e.gen(Gen::VPlus)).unwrap();
    assert_eq!(e.super_bracket(&mixed, &e.gen(Gen::X)), Err(crate::Error::NonHomogeneous));
}

#[test]
fn associativity_instance() {
    let e = Engine::deformed(6);
    let vmvp = word(&e, &[Gen::VMinus, Gen::VPlus]);
    let lhs = e.mul(&vmvp, &vmvp).unwrap();
    let mid = word(&e, &[Gen::VPlus, Gen::VMinus]);
    let rhs = e.product(&[&e.gen(Gen::VMinus), &mid, &e.gen(Gen::VPlus)]).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn series_of_x_examples() {
    let e = Engine::deformed(2);
    assert_eq!(e.series_of_x(&int(0)), e.one());
    assert_eq!(e.series_of_x(&int(1)).to_string(), "1 + h*X + (1/2)*h^2*X^2");
    let e6 = Engine::deformed(6);
    let p = e6.mul(&e6.series_of_x(&int(1)), &e6.series_of_x(&int(-1))).unwrap();
    assert_eq!(p, e6.one());
}

#[test]
fn relations_close_in_both_alphabets() {
    for alphabet in [Alphabet::Deformed, Alphabet::Classical] {
        let e = Engine::new(alphabet, 6);
        let rels = e.presentation().relations();
        assert_eq!(rels.len(), 12);
        for r in rels {
            let res = e.reduce(&r.residual()).unwrap();
            assert!(res.is_zero(), "{}: {}", r.id, res);
        }
    }
}

#[test]
fn normal_form_is_idempotent() {
    let e = Engine::deformed(5);
    let a = word(&e, &[Gen::X, Gen::H, Gen::VPlus, Gen::Y, Gen::VMinus]);
    assert_eq!(e.reduce(&WordPoly::from_element(&a)).unwrap(), a);
    assert!(a.terms().all(|(m, _)| m.is_valid()));
}

fn gen_strategy() -> impl Strategy<Value = Gen> {
    (0usize..5).prop_map(Gen::from_index)
}

fn word_strategy() -> impl Strategy<Value = Vec<Gen>> {
    proptest::collection::vec(gen_strategy(), 0..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_associate(a in word_strategy(), b in word_strategy(), c in word_strategy()) {
        let e = Engine::deformed(4);
        let (a, b, c) = (word(&e, &a), word(&e, &b), word(&e, &c));
        let left = e.mul(&e.mul(&a, &b).unwrap(), &c).unwrap();
        let right = e.mul(&a, &e.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn super_jacobi(a in gen_strategy(), b in gen_strategy(), c in gen_strategy()) {
        let e = Engine::deformed(4);
        let (x, y, z) = (e.gen(a), e.gen(b), e.gen(c));
        let (pa, pb, pc) = (a.parity(), b.parity(), c.parity());
        let t1 = e.super_bracket(&x, &e.super_bracket(&y, &z).unwrap()).unwrap();
        let t2 = e.super_bracket(&y, &e.super_bracket(&z, &x).unwrap()).unwrap();
        let t3 = e.super_bracket(&z, &e.super_bracket(&x, &y).unwrap()).unwrap();
        let mut sum = t1.scale_rational(&int(pa.koszul(pc)));
        sum.add_scaled_rational(&t2, &int(pb.koszul(pa)));
        sum.add_scaled_rational(&t3, &int(pc.koszul(pb)));
        prop_assert!(sum.is_zero(), "{}", sum);
    }

    #[test]
    fn classical_limit_commutes_with_normal_form(w in word_strategy()) {
        let d = Engine::deformed(3);
        let c = Engine::classical(3);
        let limit = word(&d, &w).classical_limit();
        prop_assert_eq!(limit, word(&c, &w));
    }
}
