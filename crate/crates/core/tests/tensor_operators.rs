use std::time::Instant;

use uhosp_core::report::Status;
use uhosp_core::tensorops::check_tensor_ops;

#[test]
fn tensor_operators_at_order_six() {
    let start = Instant::now();
    let checks = check_tensor_ops(6);
    let failed: Vec<_> = checks.iter().filter(|c| c.status == Status::Fail).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert!(checks.iter().filter(|c| c.id.starts_with("tensorops/closed-form/")).count() == 5);
    println!("{} checks in {:?}", checks.len(), start.elapsed());
}
