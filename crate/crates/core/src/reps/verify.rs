use alloc::format;
use alloc::vec::Vec;

use super::families::{build_rep, CoproductRep, RepFamily, RepTag};
use super::matrix::super_kron;
use crate::defmaps::DeformationMap;
use crate::error::Result;
use crate::hopf::Hopf;
use crate::pbw::{Engine, Gen, WordPoly};
use crate::report::{sort_checks, Check};

fn matrix_check(id: alloc::string::String, order: usize, r: Result<super::SuperMatrix>) -> Check {
    match r {
        Ok(m) => Check::residual(id, order, m.is_zero(), &m),
        Err(e) => Check::fail(id, order, format!("{e}")),
    }
}

/// Every relation of the family's presentation as a matrix residual.
pub fn verify_relations(rep: &RepFamily) -> Vec<Check> {
    let n = rep.order();
    let tag = rep.tag().name();
    let engine = Engine::new(rep.alphabet(), n);
    engine
        .presentation()
        .relations()
        .iter()
        .map(|rel| matrix_check(format!("reps/{tag}/relation/{}", rel.id), n, rel.residual().eval(rep)))
        .collect()
}

/// Block structure of each generator matrix, and of their graded
/// Kronecker products.
pub fn parity_checks(rep: &RepFamily) -> Vec<Check> {
    let n = rep.order();
    let tag = rep.tag().name();
    let mut out = Vec::new();
    for g in Gen::ALL {
        let id = format!("reps/{tag}/parity/{}", g.name(rep.alphabet()));
        out.push(if rep.matrix(g).respects_parity(g.parity()) {
            Check::pass(id, n)
        } else {
            Check::fail(id, n, "entries outside the parity blocks")
        });
    }
    let id = format!("reps/{tag}/kron-parity");
    let mut bad = Vec::new();
    for a in Gen::ALL {
        for b in Gen::ALL {
            let ok = super_kron(rep.matrix(a), rep.matrix(b))
                .map(|k| k.respects_parity(a.parity() + b.parity()))
                .unwrap_or(false);
            if !ok {
                bad.push(format!("{}⊗{}", a.name(rep.alphabet()), b.name(rep.alphabet())));
            }
        }
    }
    out.push(if bad.is_empty() { Check::pass(id, n) } else { Check::fail(id, n, bad.join(", ")) });
    out
}

/// Relations evaluated on the coproduct images in `V ⊗ V`.
pub fn coproduct_checks(rep: &RepFamily) -> Vec<Check> {
    let n = rep.order();
    let tag = rep.tag().name();
    let engine = Engine::new(rep.alphabet(), n);
    let hopf = Hopf::new(&engine);
    let target = match CoproductRep::new(rep, &hopf) {
        Ok(t) => t,
        Err(e) => return alloc::vec![Check::fail(format!("reps/{tag}/coproduct"), n, format!("{e}"))],
    };
    engine
        .presentation()
        .relations()
        .iter()
        .map(|rel| {
            matrix_check(format!("reps/{tag}/coproduct-relation/{}", rel.id), n, rel.residual().eval(&target))
        })
        .collect()
}

/// For deformed families: the `h -> 0` limit is the classical family, and
/// the classical matrices pushed through the map reproduce the family.
pub fn map_consistency_checks(rep: &RepFamily) -> Vec<Check> {
    let Some(kind) = rep.tag().map() else {
        return Vec::new();
    };
    let n = rep.order();
    let tag = rep.tag().name();
    let mut out = Vec::new();
    let classical = match build_rep(rep.tag().classical(), n) {
        Ok(c) => c,
        Err(e) => return alloc::vec![Check::fail(format!("reps/{tag}/classical"), n, format!("{e}"))],
    };
    for g in Gen::ALL {
        let id = format!("reps/{tag}/classical-limit/{}", g.name(rep.alphabet()));
        let r = rep.matrix(g).truncate_above(0).try_sub(&classical.matrix(g).truncate_above(0));
        out.push(matrix_check(id, n, r));
    }
    let map = match DeformationMap::new(kind, n) {
        Ok(m) => m,
        Err(e) => {
            out.push(Check::fail(format!("reps/{tag}/map-image"), n, format!("{e}")));
            return out;
        }
    };
    for g in Gen::ALL {
        let id = format!("reps/{tag}/map-image/{}", g.name(rep.alphabet()));
        let r = classical.evaluate(map.apply_map(g)).and_then(|m| m.try_sub(rep.matrix(g)));
        out.push(matrix_check(id, n, r));
    }
    out
}

/// Normal form then evaluation against direct evaluation of the word, for
/// each sample polynomial.
pub fn cross_oracle_check(rep: &RepFamily, samples: &[WordPoly]) -> Check {
    let n = rep.order();
    let id = format!("reps/{}/cross-oracle", rep.tag().name());
    let engine = Engine::new(rep.alphabet(), n);
    for (k, w) in samples.iter().enumerate() {
        let w = w.clone().with_alphabet(rep.alphabet());
        let r = engine
            .reduce(&w)
            .and_then(|nf| rep.evaluate(&nf))
            .and_then(|a| w.eval(rep).and_then(|b| a.try_sub(&b)));
        match r {
            Ok(m) if m.is_zero() => {}
            Ok(m) => return Check::fail(id, n, format!("sample {k}: {m}")),
            Err(e) => return Check::fail(id, n, format!("sample {k}: {e}")),
        }
    }
    Check::pass(id, n)
}

/// Every structural check for one family.
pub fn verify_family(tag: RepTag, order: usize) -> Vec<Check> {
    let rep = match build_rep(tag, order) {
        Ok(r) => r,
        Err(e) => return alloc::vec![Check::fail(format!("reps/{}", tag.name()), order, format!("{e}"))],
    };
    let mut out = verify_relations(&rep);
    out.extend(parity_checks(&rep));
    out.extend(coproduct_checks(&rep));
    out.extend(map_consistency_checks(&rep));
    out
}

/// All six families, with the supplied cross-oracle samples.
pub fn verify_reps(order: usize, samples: &[WordPoly]) -> Vec<Check> {
    let mut out = Vec::new();
    for tag in RepTag::ALL {
        out.extend(verify_family(tag, order));
        if !samples.is_empty() {
            match build_rep(tag, order) {
                Ok(rep) => out.push(cross_oracle_check(&rep, samples)),
                Err(e) => {
                    out.push(Check::fail(format!("reps/{}/cross-oracle", tag.name()), order, format!("{e}")))
                }
            }
        }
    }
    sort_checks(&mut out);
    out
}
