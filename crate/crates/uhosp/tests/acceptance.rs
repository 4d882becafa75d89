//! Acceptance suite: one line per criterion, exact residuals, wall-time budgets.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uhosp::eval::evaluate_in;
use uhosp::expr::{parse, Expr, Func, Sign};
use uhosp::suites::{random_map_checks, random_words, DEFAULT_SEED, RANDOM_MAPS};
use uhosp_core::defmaps::check_maps;
use uhosp_core::duality::check_duality;
use uhosp_core::hopf::{bialgebra_checks, check_hopf_axioms, Hopf};
use uhosp_core::pbw::{check_relations, Element, Engine, Gen, Generator, WordPoly};
use uhosp_core::report::{Check, Status};
use uhosp_core::reps::{build_rep, cross_oracle_check, verify_family, RepTag};
use uhosp_core::scalars::{rat, HSeries};
use uhosp_core::tensorops::check_tensor_ops;
use uhosp_core::twist::check_twists;

const N: usize = 6;
const D: usize = 6;

type Verdict = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Verdict);

fn failures(checks: &[Check]) -> Vec<String> {
    checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.clone()).collect()
}

fn count(checks: &[Check], prefix: &str) -> usize {
    checks.iter().filter(|c| c.id.starts_with(prefix)).count()
}

/// All checks pass and every `(prefix, minimum)` is covered.
fn all_pass(checks: &[Check], coverage: &[(&str, usize)]) -> Verdict {
    for &(prefix, min) in coverage {
        let k = count(checks, prefix);
        if k < min {
            return Err(format!("only {k} checks under {prefix}, expected {min}"));
        }
    }
    let bad = failures(checks);
    if bad.is_empty() {
        Ok(format!("{} checks, 0 failures", checks.len()))
    } else {
        Err(format!("{} of {} failing: {}", bad.len(), checks.len(), bad.join(", ")))
    }
}

fn relation_closure() -> Verdict {
    let checks = check_relations(N);
    all_pass(&checks, &[("relations/deformed/", 12), ("relations/classical/", 12)])
}

fn hopf_axioms() -> Verdict {
    let checks = check_hopf_axioms(N);
    all_pass(
        &checks,
        &[
            ("hopf/hom/", 12),
            ("hopf/antipode-hom/", 12),
            ("hopf/coassoc/", 5),
            ("hopf/counit", 10),
            ("hopf/antipode-", 10),
        ],
    )
}

fn representations() -> Verdict {
    let mut checks = Vec::new();
    for tag in RepTag::ALL {
        checks.extend(verify_family(tag, N));
    }
    all_pass(&checks, &[("reps/", 6 * 12), ("reps/classical-adjoint/kron-parity", 1)])?;
    let coproduct = checks.iter().filter(|c| c.id.contains("/coproduct-relation/")).count();
    if coproduct < 6 * 12 {
        return Err(format!("only {coproduct} coproduct-relation checks"));
    }
    Ok(format!("{} checks over {} families, 0 failures", checks.len(), RepTag::ALL.len()))
}

fn deformation_maps() -> Verdict {
    let mut checks = check_maps(N);
    checks.extend(random_map_checks(DEFAULT_SEED, RANDOM_MAPS, N));
    let random =
        (0..RANDOM_MAPS).filter(|k| count(&checks, &format!("maps/random-{k:02}/f-system/")) == 6).count();
    if random != RANDOM_MAPS {
        return Err(format!("only {random} random maps verified"));
    }
    all_pass(
        &checks,
        &[
            ("maps/first/f-system/", 6),
            ("maps/first/g-system/", 6),
            ("maps/second/f-system/", 6),
            ("maps/second/g-system/", 6),
            ("maps/first/roundtrip/", 5),
            ("maps/second/roundtrip/", 5),
            ("maps/first/coproduct/", 4),
            ("maps/first/coproduct/sigma", 1),
        ],
    )
}

/// Appends the status of the `derived` checks to a failure message.
fn with_derived(v: Verdict, checks: &[Check], prefix: &str) -> Verdict {
    let derived: Vec<&Check> =
        checks.iter().filter(|c| c.id.starts_with(prefix) && c.status != Status::Info).collect();
    let ok = derived.iter().all(|c| c.status == Status::Pass);
    v.map_err(|m| format!("{m}; {} {prefix}* checks {}", derived.len(), if ok { "pass" } else { "fail" }))
}

fn twists() -> Verdict {
    let checks = check_twists(N, true);
    let v = all_pass(
        &checks,
        &[
            ("twist/first/map-twist/", 5),
            ("twist/first/cocycle", 1),
            ("twist/second/map-twist/", 5),
            ("twist/second/cocycle", 1),
            ("twist/similarity/", 1),
        ],
    );
    with_derived(v, &checks, "twist/derived/")
}

fn tensor_operators() -> Verdict {
    let checks = check_tensor_ops(N);
    all_pass(
        &checks,
        &[
            ("tensorops/classical/covariance/", 25),
            ("tensorops/first/covariance/", 25),
            ("tensorops/second/covariance/", 25),
            ("tensorops/relation/tau-1/2", 1),
            ("tensorops/relation/tau-1", 2),
            ("tensorops/identical/", 3),
        ],
    )
}

fn duality() -> Verdict {
    let checks = check_duality(D, N);
    for id in ["duality/divided-power", "duality/f-constant"] {
        match checks.iter().find(|c| c.id == id) {
            Some(c) if c.status == Status::Info && !c.residual.is_empty() => {}
            _ => return Err(format!("missing info entry {id}")),
        }
    }
    let v = all_pass(
        &checks,
        &[
            ("duality/relation/", 4),
            ("duality/coproduct/", 3),
            ("duality/counit/", 3),
            ("duality/antipode/", 3),
            ("duality/rho/relation/", 4),
            ("duality/rho/coproduct/", 3),
        ],
    );
    with_derived(v, &checks, "duality/derived/")
}

fn cross_oracle() -> Verdict {
    let samples = random_words(DEFAULT_SEED, 200, 4, N);
    let mut checks = Vec::new();
    for tag in RepTag::ALL {
        let rep = build_rep(tag, N).map_err(|e| format!("{}: {e}", tag.name()))?;
        checks.push(cross_oracle_check(&rep, &samples));
    }
    let engine = Engine::deformed(N);
    let kappa = bialgebra_checks(&Hopf::new(&engine));
    checks.extend(kappa.iter().cloned());
    all_pass(&checks, &[("reps/", 6), ("hopf/kappa-uniform", 1)])?;
    let value = kappa.iter().find(|c| c.id == "hopf/kappa").map(|c| c.residual.clone()).unwrap_or_default();
    Ok(format!("200 words x {} families agree, {value}", RepTag::ALL.len()))
}

fn random_element(rng: &mut ChaCha8Rng, engine: &Engine, max_len: usize) -> Element {
    let len = rng.gen_range(0..=max_len);
    let word: Vec<Gen> = (0..len).map(|_| Gen::ALL[rng.gen_range(0..5)]).collect();
    let c = HSeries::constant(engine.order(), rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
    engine.reduce(&WordPoly::word(engine.alphabet(), engine.order(), &word).scale(&c)).unwrap()
}

fn random_homogeneous(rng: &mut ChaCha8Rng, engine: &Engine) -> Element {
    let len = rng.gen_range(1..=2);
    let word: Vec<Gen> = (0..len).map(|_| Gen::ALL[rng.gen_range(0..5)]).collect();
    engine.reduce(&WordPoly::word(engine.alphabet(), engine.order(), &word)).unwrap()
}

fn random_expr(rng: &mut ChaCha8Rng, depth: usize) -> Expr {
    let leaf = |rng: &mut ChaCha8Rng| match rng.gen_range(0..4) {
        0 => Expr::Num(rat(rng.gen_range(0..12), rng.gen_range(1..5))),
        1 => Expr::H,
        2 => Expr::T,
        _ => Expr::Gen(Generator::deformed(Gen::ALL[rng.gen_range(0..5)])),
    };
    if depth == 0 {
        return leaf(rng);
    }
    let sub = |rng: &mut ChaCha8Rng| Box::new(random_expr(rng, depth - 1));
    match rng.gen_range(0..8) {
        0 => leaf(rng),
        1 => {
            // A lone term only survives parsing when negated.
            let len = rng.gen_range(1..4);
            Expr::Sum(
                (0..len)
                    .map(|_| (if len > 1 && rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }, *sub(rng)))
                    .collect(),
            )
        }
        2 => Expr::Product((0..rng.gen_range(2..4)).map(|_| *sub(rng)).collect()),
        3 => Expr::Pow(sub(rng), rng.gen_range(0..4)),
        4 => Expr::Comm(sub(rng), sub(rng)),
        5 => Expr::Acomm(sub(rng), sub(rng)),
        _ => Expr::Call(Func::ALL[rng.gen_range(0..5)], sub(rng)),
    }
}

fn property_suites() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let engine = Engine::deformed(N);
    for k in 0..1000 {
        let (a, b, c) = (
            random_element(&mut rng, &engine, 3),
            random_element(&mut rng, &engine, 3),
            random_element(&mut rng, &engine, 3),
        );
        let left = engine.mul(&engine.mul(&a, &b).unwrap(), &c).unwrap();
        let right = engine.mul(&a, &engine.mul(&b, &c).unwrap()).unwrap();
        if left != right {
            return Err(format!("associativity triple {k}: ({a}) ({b}) ({c})"));
        }
    }
    for k in 0..300 {
        let (a, b, c) = (
            random_homogeneous(&mut rng, &engine),
            random_homogeneous(&mut rng, &engine),
            random_homogeneous(&mut rng, &engine),
        );
        let br = |x: &Element, y: &Element| engine.super_bracket(x, y).unwrap();
        let sign = a.parity().unwrap().koszul(b.parity().unwrap());
        let lhs = br(&a, &br(&b, &c));
        let rhs = br(&br(&a, &b), &c).try_add(&br(&b, &br(&a, &c)).scale_rational(&rat(sign, 1))).unwrap();
        if lhs != rhs {
            return Err(format!("super-Jacobi triple {k}: {a}, {b}, {c}"));
        }
    }
    for k in 0..500 {
        let e = random_expr(&mut rng, 3);
        let text = e.to_string();
        if parse(&text).as_ref() != Ok(&e) {
            return Err(format!("parser round-trip {k}: {text}"));
        }
    }
    for k in 0..300 {
        let el = random_element(&mut rng, &engine, 4);
        let text = el.to_string();
        let back = parse(&text).map_err(|e| format!("element {k} '{text}': {e}"))?;
        let Ok(again) = evaluate_in(&engine, &back) else {
            return Err(format!("element {k} '{text}' fails to evaluate"));
        };
        if again != el || back.to_string() != parse(&back.to_string()).unwrap().to_string() {
            return Err(format!("element round-trip {k}: {text}"));
        }
    }
    Ok("1000 associativity, 300 super-Jacobi, 500 expression and 300 element round-trips".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("relation closure", 5, relation_closure),
        ("hopf axioms", 60, hopf_axioms),
        ("representations", 10, representations),
        ("deformation maps", 30, deformation_maps),
        ("twists", 120, twists),
        ("tensor operators", 30, tensor_operators),
        ("duality", 120, duality),
        ("cross-oracle coherence", 30, cross_oracle),
        ("property suites", 60, property_suites),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let took = start.elapsed();
        let verdict = match verdict {
            Ok(msg) if took > Duration::from_secs(budget) => Err(format!("{msg}; over budget")),
            v => v,
        };
        let (tag, msg) = match &verdict {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        println!("criterion {} {name}: {tag} ({:.1}s / {budget}s) {msg}", i + 1, took.as_secs_f64());
        failed += usize::from(verdict.is_err());
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
