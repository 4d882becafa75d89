use super::*;
use proptest::prelude::*;
use uhosp_core::scalars::{int, rat};

fn gen(name: &str) -> Expr {
    Expr::Gen(Gen::parse(name).unwrap())
}

#[test]
fn precedence_and_signs() {
    let e = parse("-(1/2)*H - V-*V+").unwrap();
    let want = Expr::Sum(vec![
        (Sign::Minus, Expr::Product(vec![Expr::Num(rat(1, 2)), gen("H")])),
        (Sign::Minus, Expr::Product(vec![gen("V-"), gen("V+")])),
    ]);
    assert_eq!(e, want);
    assert_eq!(e.to_string(), "-(1/2)*H - V-*V+");
}

#[test]
fn brackets_functions_and_powers() {
    let e = parse("acomm[V+,V-] + comm[X, Y]^2 * exp(h*X)").unwrap();
    let Expr::Sum(terms) = &e else { panic!("{e:?}") };
    assert!(matches!(terms[0].1, Expr::Acomm(..)));
    let Expr::Product(fs) = &terms[1].1 else { panic!() };
    assert!(matches!(fs[0], Expr::Pow(_, 2)));
    assert!(matches!(fs[1], Expr::Call(Func::Exp, _)));
    assert_eq!(parse(&e.to_string()).unwrap(), e);
}

#[test]
fn classical_names() {
    let e = parse("J+*J- - v+*v- + J0").unwrap();
    assert_eq!(e.alphabet(), Some(Alphabet::Classical));
    assert_eq!(parse("T*h^2 + 3").unwrap().alphabet(), Some(Alphabet::Deformed));
    assert_eq!(
        parse("h + 4/6").unwrap(),
        Expr::Sum(vec![(Sign::Plus, Expr::H), (Sign::Plus, Expr::Num(rat(2, 3)))])
    );
    assert_eq!(parse("7").unwrap(), Expr::Num(int(7)));
}

#[test]
fn errors_carry_positions() {
    let e = parse("X + J0").unwrap_err();
    assert_eq!((e.line, e.column), (1, 5));
    assert!(e.message.contains("mixed"));
    let e = parse("X +\n  * Y").unwrap_err();
    assert_eq!((e.line, e.column), (2, 3));
    let e = parse("X ^ Y").unwrap_err();
    assert_eq!((e.line, e.column), (1, 5));
    let e = parse("comm[X Y]").unwrap_err();
    assert_eq!((e.line, e.column), (1, 8));
    let e = parse("X $ Y").unwrap_err();
    assert_eq!((e.line, e.column), (1, 3));
    assert!(parse("Z").unwrap_err().message.contains("unknown symbol"));
    assert!(parse("(X").unwrap_err().message.contains("')'"));
    assert!(parse("X Y").is_err());
    assert!(parse("").is_err());
}

#[test]
fn nested_sums_keep_parentheses() {
    for t in ["X - (Y - H)", "(X + Y)*(H - 1)", "(X*Y)^3", "-(-X)", "X*(Y*H)", "(1/3)^2"] {
        let e = parse(t).unwrap();
        assert_eq!(parse(&e.to_string()).unwrap(), e, "{t} printed as {e}");
    }
    assert_eq!(parse("X - (Y - H)").unwrap().to_string(), "X - (Y - H)");
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..20, 1i64..6).prop_map(|(n, d)| Expr::Num(rat(n, d))),
        Just(Expr::H),
        Just(Expr::T),
        prop::sample::select(vec!["H", "X", "Y", "V+", "V-"]).prop_map(gen),
    ];
    leaf.prop_recursive(4, 32, 4, |inner| {
        prop_oneof![
            prop::collection::vec((prop::bool::ANY, inner.clone()), 2..4).prop_map(|ts| Expr::Sum(
                ts.into_iter().map(|(s, e)| (if s { Sign::Plus } else { Sign::Minus }, e)).collect()
            )),
            inner.clone().prop_map(|e| Expr::Sum(vec![(Sign::Minus, e)])),
            prop::collection::vec(inner.clone(), 2..4).prop_map(Expr::Product),
            (inner.clone(), 0u32..4).prop_map(|(b, k)| Expr::Pow(Box::new(b), k)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Comm(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Acomm(Box::new(a), Box::new(b))),
            (prop::sample::select(Func::ALL.to_vec()), inner).prop_map(|(f, a)| Expr::Call(f, Box::new(a))),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(e in arb_expr()) {
        let text = e.to_string();
        let back = parse(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(back, e);
    }
}
