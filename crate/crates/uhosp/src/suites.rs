//! Verification suites, seeded sampling and concurrent execution.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uhosp_core::defmaps::{check_maps, DeformationMap, FnSeries};
use uhosp_core::duality::check_duality;
use uhosp_core::hopf::check_hopf_axioms;
use uhosp_core::pbw::{check_relations, Alphabet, Gen, WordPoly};
use uhosp_core::report::{sort_checks, Check};
use uhosp_core::reps::verify_reps;
use uhosp_core::scalars::{rat, HSeries};
use uhosp_core::tensorops::check_tensor_ops;
use uhosp_core::twist::check_twists;

pub const DEFAULT_SEED: u64 = 0x05b2_0001;
pub const CROSS_ORACLE_WORDS: usize = 200;
pub const CROSS_ORACLE_MAX_LEN: usize = 4;
pub const RANDOM_MAPS: usize = 20;

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Suite {
    Relations,
    Hopf,
    Reps,
    Maps,
    Twist,
    Tensorops,
    Duality,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Relations,
        Suite::Hopf,
        Suite::Reps,
        Suite::Maps,
        Suite::Twist,
        Suite::Tensorops,
        Suite::Duality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Hopf => "hopf",
            Suite::Reps => "reps",
            Suite::Maps => "maps",
            Suite::Twist => "twist",
            Suite::Tensorops => "tensorops",
            Suite::Duality => "duality",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum MapSelection {
    First,
    Second,
    Both,
}

impl MapSelection {
    pub fn name(self) -> &'static str {
        match self {
            MapSelection::First => "first",
            MapSelection::Second => "second",
            MapSelection::Both => "both",
        }
    }

    fn allows(self, first: bool, second: bool) -> bool {
        match self {
            MapSelection::Both => true,
            MapSelection::First => !second,
            MapSelection::Second => !first,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub order: usize,
    pub degree: usize,
    pub maps: MapSelection,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { order: 6, degree: 6, maps: MapSelection::Both, seed: DEFAULT_SEED }
    }
}

/// Checks of one suite plus the wall time it took.
#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub ms: u64,
}

/// Which deformation maps a check id depends on.
pub fn maps_involved(id: &str) -> (bool, bool) {
    const BOTH: [&str; 4] =
        ["twist/similarity", "twist/derived", "tensorops/identical", "tensorops/relation"];
    if BOTH.iter().any(|p| id.starts_with(p)) {
        return (true, true);
    }
    let names = |m: &str| id.split('/').any(|s| s == m || s.starts_with(&format!("{m}-")));
    (names("first"), names("second"))
}

/// Random PBW-unordered words of length `1..=max_len`, with small rational
/// coefficients, in the deformed alphabet.
pub fn random_words(seed: u64, count: usize, max_len: usize, order: usize) -> Vec<WordPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            let word: Vec<Gen> = (0..len).map(|_| Gen::ALL[rng.gen_range(0..5)]).collect();
            let c = HSeries::constant(order, rat(rng.gen_range(-3..=3), rng.gen_range(1..=3)));
            WordPoly::word(Alphabet::Deformed, order, &word).scale(&c)
        })
        .collect()
}

/// Unit series `1 + sum c_ij h^i v^j` with a few random low-order terms.
pub fn random_unit_series(rng: &mut ChaCha8Rng, alphabet: Alphabet, order: usize) -> FnSeries {
    let mut s = FnSeries::one(alphabet, order);
    if order == 0 {
        return s;
    }
    for _ in 0..rng.gen_range(1..=4) {
        let i = rng.gen_range(1..=order);
        let j = rng.gen_range(0..=i);
        let c = rat(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        s = s.try_add(&FnSeries::monomial(alphabet, order, i, j, c)).expect("same order");
    }
    s
}

/// Verification of `count` maps built from random unit `f1`, `g1`.
pub fn random_map_checks(seed: u64, count: usize, order: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6d61_7073);
    let mut out = Vec::new();
    for k in 0..count {
        let f1 = random_unit_series(&mut rng, Alphabet::Classical, order);
        let g1 = random_unit_series(&mut rng, Alphabet::Deformed, order);
        let label = format!("random-{k:02}");
        match DeformationMap::from_series(&label, &f1, &g1) {
            Ok(map) => out.extend(map.verify()),
            Err(e) => out.push(Check::fail(format!("maps/{label}"), order, format!("{e}"))),
        }
    }
    out
}

pub fn run_suite(suite: Suite, s: &Settings) -> Vec<Check> {
    let n = s.order;
    let mut checks = match suite {
        Suite::Relations => check_relations(n),
        Suite::Hopf => check_hopf_axioms(n),
        Suite::Reps => verify_reps(n, &random_words(s.seed, CROSS_ORACLE_WORDS, CROSS_ORACLE_MAX_LEN, n)),
        Suite::Maps => {
            let mut c = check_maps(n);
            c.extend(random_map_checks(s.seed, RANDOM_MAPS, n));
            c
        }
        Suite::Twist => check_twists(n, true),
        Suite::Tensorops => check_tensor_ops(n),
        Suite::Duality => check_duality(s.degree, n),
    };
    checks.retain(|c| {
        let (first, second) = maps_involved(&c.id);
        s.maps.allows(first, second)
    });
    sort_checks(&mut checks);
    checks
}

/// Runs the suites on separate threads; results come back in the order given.
pub fn run_suites(suites: &[Suite], s: &Settings) -> Vec<SuiteRun> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let checks = run_suite(suite, s);
                    SuiteRun { suite, checks, ms: start.elapsed().as_millis() as u64 }
                })
            })
            .collect();
        handles
            .into_iter()
            .zip(suites)
            .map(|(h, &suite)| {
                h.join().unwrap_or_else(|_| SuiteRun {
                    suite,
                    checks: vec![Check::fail(format!("{}/aborted", suite.name()), s.order, "suite panicked")],
                    ms: 0,
                })
            })
            .collect()
    })
}

#[cfg(test)]
mod tests;
