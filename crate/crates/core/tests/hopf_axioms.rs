use uhosp_core::hopf::check_hopf_axioms;
use uhosp_core::report::Status;

#[test]
fn hopf_axioms_vanish_through_order_six() {
    for n in 1..=6 {
        let checks = check_hopf_axioms(n);
        let bad: Vec<_> = checks.iter().filter(|c| c.status == Status::Fail).collect();
        assert!(bad.is_empty(), "order {n}: {bad:?}");
    }
}
