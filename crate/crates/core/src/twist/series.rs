use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::defmaps::{first_g1, second_g1, DeformationMap, MapKind};
use crate::error::Result;
use crate::hopf::{Hopf, Tensor};
use crate::pbw::{Alphabet, Element, Engine, Gen};
use crate::report::{sort_checks, Check};
use crate::reps::{build_rep, super_kron, RepTag, SuperMatrix};
use num_traits::Zero;

use crate::scalars::{factorial, int, rat, HSeries, Rational};

/// Highest power of `h` at which the twisting elements are known.
pub const TWIST_ORDER: usize = 3;

/// `G` for one map, its inverse `F = G^{-1}`, and the reference
/// coefficients `G1, G2, G3` as tensors.
pub struct TwistSeries {
    kind: MapKind,
    engine: Engine,
    coefficients: Vec<Tensor>,
    g: Tensor,
    f: Tensor,
}

impl TwistSeries {
    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    pub fn order(&self) -> usize {
        self.engine.order()
    }

    /// Orders of `h` that are compared: `min(N, TWIST_ORDER)`.
    pub fn cap(&self) -> usize {
        self.order().min(TWIST_ORDER)
    }

    /// `G_k`, with `G_0 = 1 ⊗ 1`.
    pub fn coefficient(&self, k: usize) -> &Tensor {
        &self.coefficients[k]
    }

    pub fn element(&self) -> &Tensor {
        &self.g
    }

    pub fn inverse(&self) -> &Tensor {
        &self.f
    }
}

struct Builder<'e> {
    e: &'e Engine,
}

impl Builder<'_> {
    fn word(&self, gens: &[Gen]) -> Element {
        let mut out = self.e.one();
        for &g in gens {
            out = self.e.mul_gen(&out, g);
        }
        out
    }

    fn t(&self, terms: &[(Rational, &[Gen], &[Gen])]) -> Tensor {
        let mut out = Tensor::zero(Alphabet::Deformed, self.e.order(), 2);
        for (c, a, b) in terms {
            let leg = Tensor::outer(&[&self.word(a), &self.word(b)]).expect("same engine");
            out.add_scaled(&leg, &HSeries::constant(self.e.order(), c.clone()));
        }
        out
    }

    fn mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        crate::hopf::tensor_multiply(self.e, a, b).expect("same engine")
    }
}

const X: Gen = Gen::X;
const H: Gen = Gen::H;
const VP: Gen = Gen::VPlus;

/// The reference twisting element for `kind` at engine order `order`.
pub fn build_twist(kind: MapKind, order: usize) -> Result<TwistSeries> {
    let engine = Engine::deformed(order);
    let b = Builder { e: &engine };
    let n = order;
    let (g1, g2, g3) = match kind {
        MapKind::First => {
            let g1 = b.t(&[(int(2), &[X], &[H]), (int(2), &[VP], &[VP])]);
            let a = b.t(&[(int(2), &[X], &[X, H]), (int(1), &[X, VP], &[VP])]);
            let g1sq = b.mul(&g1, &g1);
            let g2 = g1sq.scale_rational(&rat(1, 2)).try_add(&a)?;
            let tail = b.t(&[
                (int(1), &[X], &[X, X, H]),
                (rat(-1, 4), &[VP], &[X, X, VP]),
                (rat(-1, 12), &[X, X, VP], &[VP]),
                (rat(5, 6), &[X, VP], &[X, VP]),
            ]);
            let g3 = b
                .mul(&g1sq, &g1)
                .scale_rational(&rat(1, 6))
                .try_add(&b.mul(&g1, &a).scale_rational(&rat(1, 2)))?
                .try_add(&b.mul(&a, &g1).scale_rational(&rat(1, 2)))?
                .try_add(&tail)?;
            (g1, g2, g3)
        }
        MapKind::Second => {
            let g1 = b.t(&[(int(1), &[X], &[H]), (int(-1), &[H], &[X]), (int(2), &[VP], &[VP])]);
            let bb = b.t(&[
                (int(1), &[H], &[X, X]),
                (int(1), &[X, X], &[H]),
                (int(2), &[X, VP], &[VP]),
                (int(-2), &[VP], &[X, VP]),
            ]);
            let g1sq = b.mul(&g1, &g1);
            let g2 = g1sq.scale_rational(&rat(1, 2)).try_add(&bb.scale_rational(&rat(1, 4)))?;
            let c = b.t(&[
                (int(2), &[X, H], &[X, X]),
                (int(-2), &[X, X], &[X, H]),
                (int(1), &[X, X, H], &[X]),
                (int(-1), &[X], &[X, X, H]),
                (int(-6), &[X, VP], &[X, VP]),
            ]);
            let d = b.t(&[
                (int(1), &[VP], &[X, X, VP]),
                (int(1), &[X, X, VP], &[VP]),
                (int(2), &[X, VP], &[X, VP]),
            ]);
            let g3 = b
                .mul(&g1sq, &g1)
                .scale_rational(&rat(1, 6))
                .try_add(&b.mul(&g1, &bb).scale_rational(&rat(1, 8)))?
                .try_add(&b.mul(&bb, &g1).scale_rational(&rat(1, 8)))?
                .try_sub(&c.scale_rational(&rat(1, 24)))?
                .try_sub(&d.scale_rational(&rat(1, 12)))?;
            (g1, g2, g3)
        }
    };
    let cap = n.min(TWIST_ORDER);
    let mut g = Tensor::unit(Alphabet::Deformed, n, 2);
    for (k, gk) in [&g1, &g2, &g3].into_iter().enumerate() {
        g.add_scaled(gk, &HSeries::monomial(n, k + 1, int(1)));
    }
    let g = g.truncate_above(cap);
    let f = invert(&engine, &g, cap);
    let coefficients = alloc::vec![Tensor::unit(Alphabet::Deformed, n, 2), g1, g2, g3];
    Ok(TwistSeries { kind, engine, coefficients, g, f })
}

/// `G^{-1} = Σ_j (1 - G)^j`, truncated at `cap`.
fn invert(engine: &Engine, g: &Tensor, cap: usize) -> Tensor {
    let one = Tensor::unit(g.alphabet(), g.order(), g.rank());
    let k = one.try_sub(g).expect("same shape");
    let mut term = one.clone();
    let mut out = one;
    for _ in 0..cap {
        term = crate::hopf::tensor_multiply(engine, &term, &k).expect("same engine").truncate_above(cap);
        out = out.try_add(&term).expect("same shape");
    }
    out
}

/// Series inverse of an arbitrary invertible rank-2 tensor, modulo
/// `h^{TWIST_ORDER + 1}`.
pub fn invert_twist(engine: &Engine, g: &Tensor) -> Tensor {
    invert(engine, g, engine.order().min(TWIST_ORDER))
}

/// Reference `(hX)^3` coefficient in the exponent of `U`.
pub const U_CUBIC: (i64, i64) = (5, 24);

/// `U = exp(Z)`, `Z = (-hX - (hX)²/4 + c (hX)³) H`.
pub struct SimilarityOperator {
    pub cubic: Rational,
    pub z: Element,
    pub u: Element,
    pub u_inv: Element,
}

/// `U` with the reference coefficients.
pub fn similarity_operator(engine: &Engine) -> SimilarityOperator {
    similarity_operator_with(engine, &rat(U_CUBIC.0, U_CUBIC.1))
}

/// `U` with cubic coefficient `cubic`.
pub fn similarity_operator_with(engine: &Engine, cubic: &Rational) -> SimilarityOperator {
    let n = engine.order();
    let poly = engine.x_function(&[
        HSeries::zero(n),
        HSeries::monomial(n, 1, int(-1)),
        HSeries::monomial(n, 2, rat(-1, 4)),
        HSeries::monomial(n, 3, cubic.clone()),
    ]);
    let z = engine.mul_gen(&poly, Gen::H);
    let exp = |z: &Element| {
        let mut term = engine.one();
        let mut out = engine.one();
        for k in 1..=n {
            term = engine.mul(&term, z).expect("same engine");
            out.add_scaled_rational(&term, &(int(1) / factorial(k)));
        }
        out
    };
    let u = exp(&z);
    let u_inv = exp(&z.neg());
    SimilarityOperator { cubic: cubic.clone(), z, u, u_inv }
}

/// `(U^{-1} ⊗ U^{-1}) G Δ(U)`.
pub fn gauge_transform(engine: &Engine, g: &Tensor, s: &SimilarityOperator) -> Result<Tensor> {
    let hopf = Hopf::new(engine);
    let uu = Tensor::outer(&[&s.u_inv, &s.u_inv])?;
    let du = hopf.coproduct(&s.u)?;
    Ok(hopf
        .tensor_multiply(&hopf.tensor_multiply(&uu, g)?, &du)?
        .truncate_above(engine.order().min(TWIST_ORDER)))
}

fn similarity_residuals(
    e: &Engine,
    s: &SimilarityOperator,
    m1: &DeformationMap,
    m2: &DeformationMap,
) -> Result<Vec<Element>> {
    let cap = e.order().min(TWIST_ORDER);
    PHIS.iter()
        .map(|&phi| {
            let l = e.product(&[&s.u_inv, m1.apply_inverse(phi), &s.u])?;
            Ok(l.try_sub(m2.apply_inverse(phi))?.truncate_above(cap))
        })
        .collect()
}

/// Solves for the `(hX)^3` coefficient of `U` that makes
/// `U^{-1} m1^{-1}(φ) U = m2^{-1}(φ)` hold for every generator. The
/// residual is affine in the coefficient at order `h^3`.
pub fn derive_u_cubic(e: &Engine, m1: &DeformationMap, m2: &DeformationMap) -> Result<Option<Rational>> {
    if e.order() < TWIST_ORDER {
        return Ok(None);
    }
    let r0 = similarity_residuals(e, &similarity_operator_with(e, &int(0)), m1, m2)?;
    let r1 = similarity_residuals(e, &similarity_operator_with(e, &int(1)), m1, m2)?;
    let mut c = None;
    'solve: for (a, b) in r0.iter().zip(&r1) {
        let d = b.try_sub(a)?;
        for (m, dc) in d.terms() {
            let slope = dc.coeff(TWIST_ORDER);
            if !slope.is_zero() {
                c = Some(-a.coefficient(m).coeff(TWIST_ORDER).clone() / slope);
                break 'solve;
            }
        }
    }
    let Some(c) = c else { return Ok(None) };
    let r = similarity_residuals(e, &similarity_operator_with(e, &c), m1, m2)?;
    Ok(r.iter().all(Element::is_zero).then_some(c))
}

fn tensor_check(id: String, order: usize, cap: usize, r: Result<Tensor>) -> Check {
    match r {
        Ok(t) => {
            let t = t.truncate_above(cap);
            Check::residual(id, order, t.is_zero(), &t)
        }
        Err(e) => Check::fail(id, order, format!("{e}")),
    }
}

fn element_check(id: String, order: usize, cap: usize, r: Result<Element>) -> Check {
    match r {
        Ok(x) => {
            let x = x.truncate_above(cap);
            Check::residual(id, order, x.is_zero(), &x)
        }
        Err(e) => Check::fail(id, order, format!("{e}")),
    }
}

const PHIS: [Gen; 5] = [Gen::H, Gen::X, Gen::Y, Gen::VPlus, Gen::VMinus];

/// `G Δ(m^{-1} φ) G^{-1} = m^{-1}(φ) ⊗ 1 + 1 ⊗ m^{-1}(φ)` for the classical
/// generators `φ`.
pub fn check_map_twist(t: &TwistSeries, map: &DeformationMap) -> Vec<Check> {
    let hopf = Hopf::new(&t.engine);
    let (n, cap) = (t.order(), t.cap());
    PHIS.iter()
        .map(|&phi| {
            let id = format!("twist/{}/map-twist/{}", t.kind.name(), phi.name(Alphabet::Classical));
            let image = map.apply_inverse(phi);
            let r = hopf.coproduct(image).and_then(|d| {
                let lhs = hopf.tensor_multiply(&hopf.tensor_multiply(&t.g, &d)?, &t.f)?;
                let mut rhs = Tensor::outer(&[image, &t.engine.one()])?;
                rhs.add_scaled(&Tensor::outer(&[&t.engine.one(), image])?, &HSeries::one(n));
                lhs.try_sub(&rhs)
            });
            tensor_check(id, n, cap, r)
        })
        .collect()
}

/// `(G ⊗ 1)(Δ ⊗ id)G = (1 ⊗ G)(id ⊗ Δ)G`.
pub fn check_cocycle(t: &TwistSeries) -> Check {
    let hopf = Hopf::new(&t.engine);
    let (n, cap) = (t.order(), t.cap());
    let id = format!("twist/{}/cocycle", t.kind.name());
    let lhs = hopf.tensor_multiply(&t.g.insert_unit_leg(2), &hopf.delta_left(&t.g));
    let rhs = hopf.tensor_multiply(&t.g.insert_unit_leg(0), &hopf.delta_right(&t.g));
    tensor_check(id, n, cap, lhs.and_then(|l| l.try_sub(&rhs?)))
}

/// Similarity between the two maps with the reference `U`:
/// `U^{-1} g1(T) V+ U = ĝ1(T) V+`, the same conjugation on every
/// inverse-map image, and `Ĝ = (U^{-1} ⊗ U^{-1}) G Δ(U)`.
pub fn check_similarity(
    first: &TwistSeries,
    second: &TwistSeries,
    m1: &DeformationMap,
    m2: &DeformationMap,
) -> Vec<Check> {
    let e = &first.engine;
    let (n, cap) = (first.order(), first.cap());
    let s = similarity_operator(e);
    let mut out = Vec::new();

    let g1 = first_g1(n).to_element();
    let g1_hat = second_g1(n).to_element();
    let lhs = e.product(&[&s.u_inv, &e.mul_gen(&g1, Gen::VPlus), &s.u]);
    let r = lhs.and_then(|l| l.try_sub(&e.mul_gen(&g1_hat, Gen::VPlus)));
    out.push(element_check("twist/similarity/g1".into(), n, cap, r));

    match similarity_residuals(e, &s, m1, m2) {
        Ok(rs) => {
            for (phi, r) in PHIS.iter().zip(rs) {
                let id = format!("twist/similarity/map/{}", phi.name(Alphabet::Classical));
                out.push(Check::residual(id, n, r.is_zero(), &r));
            }
        }
        Err(err) => out.push(Check::fail("twist/similarity/map", n, format!("{err}"))),
    }

    let r = gauge_transform(e, &first.g, &s).and_then(|g| second.g.try_sub(&g));
    out.push(tensor_check("twist/similarity/twist".into(), n, cap, r));
    out
}

/// Derived data for adjudicating the reference `h^3` coefficients: the
/// cubic coefficient of `U` that makes the two maps similar, the gauge
/// transform of the first twist by that `U` checked as a twist for the
/// second map, and its difference from the reference second twist.
pub fn derived_similarity_checks(
    first: &TwistSeries,
    second: &TwistSeries,
    m1: &DeformationMap,
    m2: &DeformationMap,
) -> Vec<Check> {
    let e = &first.engine;
    let (n, cap) = (first.order(), first.cap());
    let reference = rat(U_CUBIC.0, U_CUBIC.1);
    let c = match derive_u_cubic(e, m1, m2) {
        Ok(Some(c)) => c,
        Ok(None) => {
            let note = "no cubic coefficient makes the maps similar at this order";
            return alloc::vec![Check::info("twist/derived/u-cubic", n, note)];
        }
        Err(err) => return alloc::vec![Check::fail("twist/derived/u-cubic", n, format!("{err}"))],
    };
    let mut out = alloc::vec![Check::info(
        "twist/derived/u-cubic",
        n,
        format!("(hX)^3 coefficient of log U solving the similarity: {c} (reference {reference})"),
    )];
    let s = similarity_operator_with(e, &c);
    let g_hat = match gauge_transform(e, &first.g, &s) {
        Ok(g) => g,
        Err(err) => {
            out.push(Check::fail("twist/derived/second", n, format!("{err}")));
            return out;
        }
    };
    let derived = TwistSeries {
        kind: MapKind::Second,
        engine: Engine::deformed(n),
        coefficients: second.coefficients.clone(),
        f: invert(e, &g_hat, cap),
        g: g_hat,
    };
    for mut check in check_map_twist(&derived, m2).into_iter().chain([check_cocycle(&derived)]) {
        check.id = check.id.replacen("twist/second/", "twist/derived/second/", 1);
        out.push(check);
    }
    let delta = derived.g.try_sub(&second.g).expect("same shape");
    out.push(Check::info(
        "twist/derived/second-minus-reference",
        n,
        if delta.is_zero() { "0".into() } else { format!("{delta}") },
    ));
    out
}

fn matrix_check(id: String, order: usize, cap: usize, r: Result<SuperMatrix>) -> Check {
    match r {
        Ok(m) => {
            let m = m.truncate_above(cap);
            Check::residual(id, order, m.is_zero(), &m)
        }
        Err(e) => Check::fail(id, order, format!("{e}")),
    }
}

/// The map-twist, cocycle and similarity residuals recomputed as matrix
/// products in `V ⊗ V` (and `V ⊗ V ⊗ V`) of the first-map adjoint module.
/// Each factor is evaluated separately, so tensor multiplication is not
/// used on this side.
pub fn twist_matrix_checks(
    first: &TwistSeries,
    second: &TwistSeries,
    m1: &DeformationMap,
    m2: &DeformationMap,
) -> Vec<Check> {
    let (n, cap) = (first.order(), first.cap());
    let rep = match build_rep(RepTag::FirstAdjoint, n) {
        Ok(r) => r,
        Err(e) => return alloc::vec![Check::fail("twist/matrix", n, format!("{e}"))],
    };
    let hopf = Hopf::new(&first.engine);
    let mut out = Vec::new();
    for (t, map) in [(first, m1), (second, m2)] {
        let tag = t.kind.name();
        let ev = |x: &Tensor| rep.evaluate_tensor(x);
        let (g, f) = match (ev(&t.g), ev(&t.f)) {
            (Ok(g), Ok(f)) => (g, f),
            (Err(e), _) | (_, Err(e)) => {
                out.push(Check::fail(format!("twist/{tag}/matrix"), n, format!("{e}")));
                continue;
            }
        };
        for phi in PHIS {
            let id = format!("twist/{tag}/matrix/map-twist/{}", phi.name(Alphabet::Classical));
            let image = map.apply_inverse(phi);
            let r = (|| {
                let d = ev(&hopf.coproduct(image)?)?;
                let lhs = g.try_mul(&d)?.try_mul(&f)?;
                let a = rep.evaluate(image)?;
                let rhs = super_kron(&a, &rep.identity())?.try_add(&super_kron(&rep.identity(), &a)?)?;
                lhs.try_sub(&rhs)
            })();
            out.push(matrix_check(id, n, cap, r));
        }
        let id = format!("twist/{tag}/matrix/cocycle");
        let r = (|| {
            let i = rep.identity();
            let lhs = leg_kron(&g, &i, true)?.try_mul(&ev(&hopf.delta_left(&t.g))?)?;
            let rhs = leg_kron(&g, &i, false)?.try_mul(&ev(&hopf.delta_right(&t.g))?)?;
            lhs.try_sub(&rhs)
        })();
        out.push(matrix_check(id, n, cap, r));
    }
    let r = (|| {
        let s = similarity_operator(&first.engine);
        let ui = rep.evaluate(&s.u_inv)?;
        let lhs = rep.evaluate_tensor(&second.g)?;
        let rhs = super_kron(&ui, &ui)?
            .try_mul(&rep.evaluate_tensor(&first.g)?)?
            .try_mul(&rep.evaluate_tensor(&hopf.coproduct(&s.u)?)?)?;
        lhs.try_sub(&rhs)
    })();
    out.push(matrix_check("twist/similarity/matrix/twist".into(), n, cap, r));
    out
}

/// `G ⊗ 1` (`right = true`) or `1 ⊗ G` for an even matrix `G` on `V ⊗ V`.
fn leg_kron(g: &SuperMatrix, i: &SuperMatrix, right: bool) -> Result<SuperMatrix> {
    if right {
        super_kron(g, i)
    } else {
        super_kron(i, g)
    }
}

/// Every twist identity for both maps at engine order `order`.
pub fn check_twists(order: usize, with_matrices: bool) -> Vec<Check> {
    let built = (build_twist(MapKind::First, order), build_twist(MapKind::Second, order));
    let maps = (DeformationMap::new(MapKind::First, order), DeformationMap::new(MapKind::Second, order));
    let (first, second, m1, m2) = match (built, maps) {
        ((Ok(a), Ok(b)), (Ok(c), Ok(d))) => (a, b, c, d),
        _ => return alloc::vec![Check::fail("twist/build", order, "construction failed")],
    };
    let mut out = check_map_twist(&first, &m1);
    out.extend(check_map_twist(&second, &m2));
    out.push(check_cocycle(&first));
    out.push(check_cocycle(&second));
    out.extend(check_similarity(&first, &second, &m1, &m2));
    out.extend(derived_similarity_checks(&first, &second, &m1, &m2));
    if with_matrices {
        out.extend(twist_matrix_checks(&first, &second, &m1, &m2));
    }
    sort_checks(&mut out);
    out
}
