use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::hopf::Hopf;
use crate::pbw::{Alphabet, Engine, Gen, Parity, WordPoly};
use crate::report::Status;
use crate::scalars::{int, rat, HSeries};

const N: usize = 6;

fn rep(tag: RepTag) -> RepFamily {
    build_rep(tag, N).unwrap()
}

fn failures(checks: &[crate::report::Check]) -> Vec<&crate::report::Check> {
    checks.iter().filter(|c| c.status == Status::Fail).collect()
}

#[test]
fn transcribed_entries() {
    let f1 = rep(RepTag::FirstFundamental);
    assert_eq!(*f1.matrix(Gen::H).entry(0, 2), HSeries::monomial(N, 1, rat(1, 2)));
    let a1 = rep(RepTag::FirstAdjoint);
    assert_eq!(*a1.matrix(Gen::Y).entry(0, 4), HSeries::monomial(N, 3, rat(5, 4)));
    let a2 = rep(RepTag::SecondAdjoint);
    let h = a2.matrix(Gen::H);
    for (i, d) in [int(1), rat(1, 2), int(0), rat(-1, 2), int(-1)].into_iter().enumerate() {
        for j in 0..5 {
            let expected = if i == j { HSeries::constant(N, d.clone()) } else { HSeries::zero(N) };
            assert_eq!(*h.entry(i, j), expected);
        }
    }
}

#[test]
fn fundamental_x_comes_from_the_maps() {
    let j_plus = rep(RepTag::ClassicalFundamental).matrix(Gen::X).clone();
    // J+ squares to zero in the fundamental module, so every X image
    // collapses to its linear term.
    assert_eq!(*rep(RepTag::FirstFundamental).matrix(Gen::X), j_plus);
    assert_eq!(*rep(RepTag::SecondFundamental).matrix(Gen::X), j_plus);
}

#[test]
fn evaluate_examples() {
    let f1 = rep(RepTag::FirstFundamental);
    let (vp, vm) =
        (WordPoly::gen(Alphabet::Deformed, N, Gen::VPlus), WordPoly::gen(Alphabet::Deformed, N, Gen::VMinus));
    let anti = vp.super_bracket(&vm).eval(&f1).unwrap();
    assert_eq!(anti, f1.matrix(Gen::H).scale_rational(&rat(-1, 2)));

    for tag in RepTag::ALL {
        let r = rep(tag);
        let one = Engine::new(tag.alphabet(), N).one();
        assert_eq!(r.evaluate(&one).unwrap(), r.identity());
    }
    assert!(f1.evaluate(&Engine::classical(N).gen(Gen::H)).is_err());

    let x = rep(RepTag::FirstAdjoint).matrix(Gen::X).clone();
    assert_eq!(x.nilpotency_index(), Some(3));
    assert!(x.pow(3).is_zero());
}

#[test]
fn exponential_examples() {
    let a1 = rep(RepTag::FirstAdjoint);
    let zero = SuperMatrix::zero(N, &ADJOINT_PARITIES);
    assert_eq!(matrix_exp_nilpotent(&zero, &int(3)).unwrap(), a1.identity());

    let t = a1.t_power(&int(1)).unwrap();
    let t_inv = a1.t_power(&int(-1)).unwrap();
    assert_eq!(t.try_mul(&t_inv).unwrap(), a1.identity());
    assert_eq!(*t.entry(2, 4).coeff(1), int(2));

    let not_nilpotent = a1.matrix(Gen::H).clone();
    assert_eq!(matrix_exp_nilpotent(&not_nilpotent, &int(1)), Err(crate::Error::NotNilpotent));
}

#[test]
fn super_kron_examples() {
    let i3 = SuperMatrix::identity(N, &FUNDAMENTAL_PARITIES);
    let i9 = super_kron(&i3, &i3).unwrap();
    assert_eq!(i9, SuperMatrix::identity(N, i9.parities()));
    assert_eq!(
        i9.parities(),
        &[
            Parity::Even,
            Parity::Odd,
            Parity::Even,
            Parity::Odd,
            Parity::Even,
            Parity::Odd,
            Parity::Even,
            Parity::Odd,
            Parity::Even,
        ]
    );

    // even operands: plain Kronecker product
    let f = rep(RepTag::ClassicalFundamental);
    let (h, x) = (f.matrix(Gen::H), f.matrix(Gen::X));
    let k = super_kron(h, x).unwrap();
    for (i, kk, j, l) in [(0, 0, 0, 2), (2, 2, 0, 2)] {
        assert_eq!(*k.entry(i * 3 + j, kk * 3 + l), h.entry(i, kk) * x.entry(j, l));
    }

    // odd b picks up the sign of the odd column index of a
    let vp = f.matrix(Gen::VPlus);
    let k = super_kron(vp, vp).unwrap();
    let at = |i: usize, j: usize| i * 3 + j;
    assert_eq!(*k.entry(at(0, 0), at(1, 1)), -&(vp.entry(0, 1) * vp.entry(0, 1)));
    assert_eq!(*k.entry(at(1, 0), at(2, 1)), vp.entry(1, 2) * vp.entry(0, 1));

    let mixed = h.try_add(vp).unwrap();
    assert_eq!(super_kron(&mixed, h), Err(crate::Error::NonHomogeneous));
}

#[test]
fn koszul_product_is_intertwined() {
    let f = rep(RepTag::FirstFundamental);
    let e = Engine::deformed(N);
    let hopf = Hopf::new(&e);
    for a in Gen::ALL {
        for b in Gen::ALL {
            let da = hopf.delta_gen(a);
            let db = hopf.delta_gen(b);
            let lhs = f.evaluate_tensor(&hopf.tensor_multiply(da, db).unwrap()).unwrap();
            let rhs = f.evaluate_tensor(da).unwrap().try_mul(&f.evaluate_tensor(db).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{a:?} {b:?}");
        }
    }
}

#[test]
fn relation_examples() {
    let a1 = rep(RepTag::FirstAdjoint);
    let w = |g| WordPoly::gen(Alphabet::Deformed, N, g);
    let r = w(Gen::X).super_bracket(&w(Gen::Y)).eval(&a1).unwrap();
    assert_eq!(r, a1.matrix(Gen::H).scale_rational(&int(2)));

    let c = rep(RepTag::ClassicalFundamental);
    let w = |g| WordPoly::gen(Alphabet::Classical, N, g);
    let r = w(Gen::X).super_bracket(&w(Gen::Y)).eval(&c).unwrap();
    assert_eq!(r, c.matrix(Gen::H).scale_rational(&int(2)));
}

#[test]
fn every_family_verifies() {
    for tag in RepTag::ALL {
        let checks = verify_family(tag, N);
        assert!(failures(&checks).is_empty(), "{tag:?}: {:?}", failures(&checks));
        assert_eq!(checks.iter().filter(|c| c.id.contains("/relation/")).count(), 12);
        assert_eq!(checks.iter().filter(|c| c.id.contains("/coproduct-relation/")).count(), 12);
        let expected_map = if tag.map().is_some() { 10 } else { 0 };
        let got = checks
            .iter()
            .filter(|c| c.id.contains("/map-image/") || c.id.contains("/classical-limit/"))
            .count();
        assert_eq!(got, expected_map);
    }
}

#[test]
fn corrupted_entry_is_caught() {
    let a1 = rep(RepTag::FirstAdjoint);
    let mut y = a1.matrix(Gen::Y).clone();
    y.set(0, 4, HSeries::monomial(N, 3, rat(1, 1)));
    let broken = a1.with_matrix(Gen::Y, y);
    let bad = verify_relations(&broken);
    assert!(!failures(&bad).is_empty());
    assert!(!failures(&map_consistency_checks(&broken)).is_empty());

    let f = rep(RepTag::ClassicalFundamental);
    let odd_h = f.matrix(Gen::VPlus).clone();
    let broken = f.with_matrix(Gen::H, odd_h);
    let parity = parity_checks(&broken);
    assert!(parity.iter().any(|c| c.id.ends_with("parity/J0") && c.status == Status::Fail));
}

fn arb_word_poly(alphabet: Alphabet) -> impl Strategy<Value = WordPoly> {
    let word = prop::collection::vec(0usize..5, 0..=4);
    prop::collection::vec((word, -3i64..=3, 0usize..3), 1..=3).prop_map(move |terms| {
        let mut p = WordPoly::zero(alphabet, N);
        for (w, c, k) in terms {
            let gens: Vec<Gen> = w.into_iter().map(Gen::from_index).collect();
            p = p.add(&WordPoly::word(alphabet, N, &gens).scale(&HSeries::monomial(N, k, int(c))));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normal_form_and_matrices_agree(d in arb_word_poly(Alphabet::Deformed), c in arb_word_poly(Alphabet::Classical)) {
        for tag in RepTag::ALL {
            let sample = if tag.alphabet() == Alphabet::Deformed { d.clone() } else { c.clone() };
            let check = cross_oracle_check(&rep(tag), &vec![sample]);
            prop_assert_eq!(check.status, Status::Pass, "{}", check.residual);
        }
    }
}
