use super::*;
use crate::expr::parse;
use uhosp_core::pbw::{sinh_hx_over_h, Gen};
use uhosp_core::scalars::rat;

fn nf(text: &str, order: usize) -> Element {
    evaluate(&parse(text).unwrap(), order).unwrap()
}

#[test]
fn relation_examples_vanish() {
    assert!(nf("acomm[V+,V-] + (1/2)*H", 6).is_zero());
    assert!(nf("comm[X,Y] - 2*H", 6).is_zero());
    assert!(nf("acomm[v+,v-] + (1/2)*J0", 6).is_zero());
    assert_eq!(nf("V+*V-", 6).to_string(), "-(1/2)*H - V-*V+");
}

#[test]
fn odd_cube_is_odd_times_square() {
    let e = Engine::deformed(5);
    let square = e.x_function(&sinh_hx_over_h(5)).scale_rational(&rat(1, 4));
    let want = e.mul(&e.gen(Gen::VPlus), &square).unwrap();
    assert_eq!(nf("V+^3", 5), want);
}

#[test]
fn functions_of_one_generator() {
    assert!(nf("exp(h*X) - T", 6).is_zero());
    assert!(nf("cosh(h*X)^2 - sinh(h*X)^2 - 1", 6).is_zero());
    assert!(nf("exp(h*X) - cosh(h*X) - sinh(h*X)", 6).is_zero());
    assert!(nf("ln(1 + h*X) - h*X + (1/2)*h^2*X^2 - (1/3)*h^3*X^3", 3).is_zero());
    assert!(nf("ln(exp(h)) - h", 6).is_zero());
    assert!(nf("arctanh(h*H) - h*H - (1/3)*h^3*H^3 - (1/5)*h^5*H^5", 6).is_zero());
    assert!(nf("exp(2*h) - exp(h)^2", 6).is_zero());
}

#[test]
fn function_arguments_are_restricted() {
    let err = |t: &str| evaluate(&parse(t).unwrap(), 4).unwrap_err();
    assert!(matches!(err("exp(X)"), EvalError::Argument { func: "exp", .. }));
    assert!(matches!(err("sinh(h*X + h*Y)"), EvalError::Argument { func: "sinh", .. }));
    assert!(matches!(err("ln(2 + h*X)"), EvalError::Argument { func: "ln", .. }));
    assert!(matches!(err("ln(T)"), EvalError::Argument { func: "ln", .. }));
}

#[test]
fn scalars_default_to_deformed() {
    let e = nf("h^2 + 1/2", 3);
    assert_eq!(e.alphabet(), Alphabet::Deformed);
    assert_eq!(e.to_string(), "(1/2) + h^2");
}

#[test]
fn classical_commutator() {
    assert!(nf("comm[J0, J+] - J+", 4).is_zero());
    assert!(nf("4*v+^2 - J+", 4).is_zero());
}
