use std::time::Instant;

use uhosp_core::duality::{check_duality, DEFAULT_CUTOFF};
use uhosp_core::report::Status;

#[test]
fn duality_at_default_window() {
    let start = Instant::now();
    let checks = check_duality(DEFAULT_CUTOFF, 6);
    let failed: Vec<_> = checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    // the reference right side of [y,z] has the wrong parity
    assert_eq!(failed, ["duality/relation/[y,z]"]);
    assert!(checks.iter().any(|c| c.id == "duality/derived/relation/[y,z]" && c.status == Status::Pass));
    println!("{} checks in {:?}", checks.len(), start.elapsed());
}
