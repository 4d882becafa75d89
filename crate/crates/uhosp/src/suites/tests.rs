use super::*;

#[test]
fn map_involvement() {
    assert_eq!(maps_involved("twist/first/cocycle"), (true, false));
    assert_eq!(maps_involved("reps/second-map-fundamental/relation/[X,Y]"), (false, true));
    assert_eq!(maps_involved("reps/first-map-adjoint/parity/H"), (true, false));
    assert_eq!(maps_involved("twist/similarity/g1"), (true, true));
    assert_eq!(maps_involved("tensorops/relation/tau-1"), (true, true));
    assert_eq!(maps_involved("relations/deformed/[X,Y]"), (false, false));
    assert_eq!(maps_involved("maps/random-03/f-system/1"), (false, false));
}

#[test]
fn sampling_is_seeded() {
    let a = random_words(11, 30, 4, 3);
    let b = random_words(11, 30, 4, 3);
    let c = random_words(12, 30, 4, 3);
    assert_eq!(format!("{a:?}"), format!("{b:?}"));
    assert_ne!(format!("{a:?}"), format!("{c:?}"));
    assert!(a.iter().all(|w| w.terms().iter().all(|(_, g)| (1..=4).contains(&g.len()))));
}

#[test]
fn map_filter_drops_other_map() {
    let s = Settings { order: 2, maps: MapSelection::First, ..Settings::default() };
    let checks = run_suite(Suite::Reps, &s);
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| !c.id.contains("second")));
    assert!(checks.iter().any(|c| c.id.contains("first")));
}

#[test]
fn concurrent_runs_keep_requested_order() {
    let s = Settings { order: 2, ..Settings::default() };
    let runs = run_suites(&[Suite::Hopf, Suite::Relations], &s);
    assert_eq!(runs.iter().map(|r| r.suite).collect::<Vec<_>>(), vec![Suite::Hopf, Suite::Relations]);
    assert_eq!(runs[1].checks, run_suite(Suite::Relations, &s));
}
