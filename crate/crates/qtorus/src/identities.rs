//! Runnable identity suites for the diagonal adjoint action.
//!
//! Each suite pins one block of displayed equalities used by the reduction
//! of degree-zero derivations to inner form: actions of the weight element
//! `d` and of `e(0,0)` on the symmetric window pairs, the half-combination
//! consequences, the degree-derivation pair actions, the two scaled
//! ladder-action families that define the correcting inner tensors, and
//! the consistency of the `d`/`e(0,0)` action system on instantiated
//! coefficient tables.
//!
//! Identities with free indices are instantiated over every index in the
//! requested window; identities with free coefficient families are
//! instantiated per term with unit data and on seeded random data.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{AlgElement, BasisVector, Degree};
use crate::laurent::RatFunc;
use crate::sample;
use crate::tensor::{act2, Tensor2Element};

/// Identifier of one identity suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteId {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

pub const ALL_SUITES: [SuiteId; 7] =
    [SuiteId::A, SuiteId::B, SuiteId::C, SuiteId::D, SuiteId::E, SuiteId::F, SuiteId::G];

impl SuiteId {
    pub fn key(&self) -> &'static str {
        match self {
            SuiteId::A => "a",
            SuiteId::B => "b",
            SuiteId::C => "c",
            SuiteId::D => "d",
            SuiteId::E => "e",
            SuiteId::F => "f",
            SuiteId::G => "g",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            SuiteId::A => "weight action of d on symmetric window pairs",
            SuiteId::B => "action of e(0,0) on symmetric window pairs",
            SuiteId::C => "half-combination consequences of the e(0,0) action",
            SuiteId::D => "actions of g(0,1) and h(1,0) on degree-derivation pairs",
            SuiteId::E => "scaled diagonal ladder action of g(0,1)",
            SuiteId::F => "axis diagonal ladder action of g(0,1) and h(1,0)",
            SuiteId::G => "consistency of the d / e(0,0) action system",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown identity suite `{0}` (expected one of a..g)")]
pub struct UnknownSuite(pub String);

impl FromStr for SuiteId {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(SuiteId::A),
            "b" => Ok(SuiteId::B),
            "c" => Ok(SuiteId::C),
            "d" => Ok(SuiteId::D),
            "e" => Ok(SuiteId::E),
            "f" => Ok(SuiteId::F),
            "g" => Ok(SuiteId::G),
            other => Err(UnknownSuite(other.to_string())),
        }
    }
}

/// One failed instance, rendered for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteFailure {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub instances: usize,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Ctx {
    report: SuiteReport,
}

impl Ctx {
    fn new(suite: SuiteId) -> Self {
        Self { report: SuiteReport { suite, instances: 0, failures: Vec::new() } }
    }

    fn eq2(&mut self, instance: impl Into<String>, lhs: &Tensor2Element, rhs: &Tensor2Element) {
        self.report.instances += 1;
        if lhs != rhs {
            self.report.failures.push(SuiteFailure {
                instance: instance.into(),
                expected: rhs.to_string(),
                actual: lhs.to_string(),
            });
        }
    }

    fn check(&mut self, instance: impl Into<String>, ok: bool, expected: &str, actual: &str) {
        self.report.instances += 1;
        if !ok {
            self.report.failures.push(SuiteFailure {
                instance: instance.into(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
}

fn nonzero_degrees(radius: i64) -> Vec<Degree> {
    let mut out = Vec::new();
    for a in -radius..=radius {
        for b in -radius..=radius {
            if (a, b) != (0, 0) {
                out.push(Degree(a, b));
            }
        }
    }
    out
}

fn all_degrees(radius: i64) -> Vec<Degree> {
    let mut out = vec![Degree::ZERO];
    out.extend(nonzero_degrees(radius));
    out
}

fn pure(a: BasisVector, b: BasisVector) -> Tensor2Element {
    Tensor2Element::pure(a, b)
}

/// Run one suite over the window of the given radius.
pub fn run_suite(id: SuiteId, radius: i64, seed: u64) -> SuiteReport {
    let mut ctx = Ctx::new(id);
    match id {
        SuiteId::A => suite_a(&mut ctx, radius),
        SuiteId::B => suite_b(&mut ctx, radius),
        SuiteId::C => suite_c(&mut ctx, radius),
        SuiteId::D => suite_d(&mut ctx),
        SuiteId::E => suite_e(&mut ctx, radius, seed),
        SuiteId::F => suite_f(&mut ctx, radius, seed),
        SuiteId::G => suite_g(&mut ctx, radius, seed),
    }
    ctx.report
}

// ---- suite a: d . (pair) = lambda * pair --------------------------------

type PairShape = fn(Degree) -> (BasisVector, BasisVector);

fn suite_a(ctx: &mut Ctx, radius: i64) {
    use BasisVector::*;
    let d = AlgElement::d();
    let scalings: [(&str, PairShape, i64); 8] = [
        ("d.(e(k)xg(-k))", |k| (E(k), G(-k)), 2),
        ("d.(f(k)xg(-k))", |k| (F(k), G(-k)), -2),
        ("d.(g(k)xe(-k))", |k| (G(k), E(-k)), 2),
        ("d.(g(k)xf(-k))", |k| (G(k), F(-k)), -2),
        ("d.(e(k)xh(-k))", |k| (E(k), H(-k)), 2),
        ("d.(f(k)xh(-k))", |k| (F(k), H(-k)), -2),
        ("d.(h(k)xe(-k))", |k| (H(k), E(-k)), 2),
        ("d.(h(k)xf(-k))", |k| (H(k), F(-k)), -2),
    ];
    for (label, make, lambda) in scalings {
        for k in nonzero_degrees(radius) {
            let (a, b) = make(k);
            let t = pure(a, b);
            ctx.eq2(
                format!("{label} at k={k}"),
                &act2(&d, &t),
                &t.scaled(&RatFunc::from_int(lambda)),
            );
        }
    }
    for m in all_degrees(radius) {
        let t = pure(E(m), E(-m));
        ctx.eq2(format!("d.(e(m)xe(-m)) at m={m}"), &act2(&d, &t), &t.scaled(&RatFunc::from_int(4)));
        let t = pure(F(m), F(-m));
        ctx.eq2(
            format!("d.(f(m)xf(-m)) at m={m}"),
            &act2(&d, &t),
            &t.scaled(&RatFunc::from_int(-4)),
        );
    }
    let e0 = E(Degree::ZERO);
    let f0 = F(Degree::ZERO);
    let degree_zero: [(BasisVector, BasisVector, i64); 12] = [
        (e0, D, 2),
        (e0, D1, 2),
        (e0, D2, 2),
        (D, e0, 2),
        (D1, e0, 2),
        (D2, e0, 2),
        (f0, D, -2),
        (f0, D1, -2),
        (f0, D2, -2),
        (D, f0, -2),
        (D1, f0, -2),
        (D2, f0, -2),
    ];
    for (a, b, lambda) in degree_zero {
        let t = pure(a, b);
        ctx.eq2(format!("d.({a}x{b})"), &act2(&d, &t), &t.scaled(&RatFunc::from_int(lambda)));
    }
}

// ---- suite b: e(0,0) . (pair) -------------------------------------------

fn suite_b(ctx: &mut Ctx, radius: i64) {
    use BasisVector::*;
    let e0 = AlgElement::e(0, 0);
    for k in nonzero_degrees(radius) {
        let lhs = act2(&e0, &pure(H(k), G(-k)));
        let rhs = pure(E(k), G(-k)).sub(&pure(H(k), E(-k)));
        ctx.eq2(format!("e0.(h(k)xg(-k)) at k={k}"), &lhs, &rhs);

        let lhs = act2(&e0, &pure(F(k), E(-k)));
        let rhs = pure(G(k), E(-k)).sub(&pure(H(k), E(-k)));
        ctx.eq2(format!("e0.(f(k)xe(-k)) at k={k}"), &lhs, &rhs);

        let lhs = act2(&e0, &pure(G(k), G(-k)));
        let rhs = pure(E(k), G(-k)).neg().sub(&pure(G(k), E(-k)));
        ctx.eq2(format!("e0.(g(k)xg(-k)) at k={k}"), &lhs, &rhs);

        let lhs = act2(&e0, &pure(H(k), H(-k)));
        let rhs = pure(E(k), H(-k)).add(&pure(H(k), E(-k)));
        ctx.eq2(format!("e0.(h(k)xh(-k)) at k={k}"), &lhs, &rhs);
    }
    let ez = E(Degree::ZERO);
    let fz = F(Degree::ZERO);
    let singles: [(&str, (BasisVector, BasisVector), Tensor2Element); 6] = [
        ("e0.(f0xe0)", (fz, ez), pure(D, ez)),
        ("e0.(dxd1)", (D, D1), pure(ez, D1).scaled(&RatFunc::from_int(-2))),
        ("e0.(dxd2)", (D, D2), pure(ez, D2).scaled(&RatFunc::from_int(-2))),
        ("e0.(e0xf0)", (ez, fz), pure(ez, D)),
        ("e0.(d1xd)", (D1, D), pure(D1, ez).scaled(&RatFunc::from_int(-2))),
        ("e0.(d2xd)", (D2, D), pure(D2, ez).scaled(&RatFunc::from_int(-2))),
    ];
    for (label, (a, b), rhs) in singles {
        ctx.eq2(label, &act2(&e0, &pure(a, b)), &rhs);
    }
}

// ---- suite c: half-combination consequences -----------------------------

fn suite_c(ctx: &mut Ctx, radius: i64) {
    use BasisVector::*;
    let e0 = AlgElement::e(0, 0);
    let half = RatFunc::one().div(&RatFunc::from_int(2)).unwrap();
    let neg_half = half.neg();
    for k in nonzero_degrees(radius) {
        let gg = pure(G(k), G(-k));
        let hg = pure(H(k), G(-k));
        let hh = pure(H(k), H(-k));
        let fe = pure(F(k), E(-k));

        let source = gg.add(&hg).add(&hh.scaled(&RatFunc::from_int(2))).add(&fe);
        ctx.eq2(
            format!("e(k)xh(-k) combination at k={k}"),
            &act2(&e0, &source).scaled(&half),
            &pure(E(k), H(-k)),
        );

        let source = gg.add(&fe).add(&hg);
        ctx.eq2(
            format!("h(k)xe(-k) combination at k={k}"),
            &act2(&e0, &source).scaled(&neg_half),
            &pure(H(k), E(-k)),
        );

        let source = gg.add(&fe).sub(&hg);
        ctx.eq2(
            format!("e(k)xg(-k) combination at k={k}"),
            &act2(&e0, &source).scaled(&neg_half),
            &pure(E(k), G(-k)),
        );

        let source = gg.add(&hg).sub(&fe);
        ctx.eq2(
            format!("g(k)xe(-k) combination at k={k}"),
            &act2(&e0, &source).scaled(&neg_half),
            &pure(G(k), E(-k)),
        );
    }
}

// ---- suite d: degree-derivation pairs -----------------------------------

fn suite_d(ctx: &mut Ctx) {
    use BasisVector::*;
    let g01 = AlgElement::g(0, 1);
    let h10 = AlgElement::h(1, 0);
    let bg = G(Degree(0, 1));
    let bh = H(Degree(1, 0));

    let lhs = act2(&g01, &pure(D2, D2));
    let rhs = pure(D2, bg).add(&pure(bg, D2)).neg();
    ctx.eq2("g(0,1).(d2xd2)", &lhs, &rhs);

    let lhs = act2(&g01, &pure(D1, D2));
    ctx.eq2("g(0,1).(d1xd2)", &lhs, &pure(D1, bg).neg());

    let lhs = act2(&g01, &pure(D2, D1));
    ctx.eq2("g(0,1).(d2xd1)", &lhs, &pure(bg, D1).neg());

    let lhs = act2(&h10, &pure(D1, D1));
    let rhs = pure(bh, D1).add(&pure(D1, bh)).neg();
    ctx.eq2("h(1,0).(d1xd1)", &lhs, &rhs);
}

// ---- suite e: scaled diagonal ladder action of g(0,1) -------------------
//
// For the ladder tensor
//
//   u(m,n) = gamma / (q^m - 1) * (g(m,n)+h(m,n)) (x) (g(-m,-n)+h(-m,-n)),
//
// with m != 0, the action of g(0,1) expands to exactly four terms whose
// gxh / hxg components carry the coefficients gamma and
// gamma' = -q^{-m} gamma. Subtracting the corresponding inner derivation
// therefore cancels those two coefficient families wholesale, which is the
// step the degree-zero reduction relies on; the gxg remainder is absorbed
// into the diagonal family handled afterwards.

fn u_term(m: i64, n: i64, gamma: &RatFunc) -> Tensor2Element {
    let left = AlgElement::g(m, n).add(&AlgElement::h(m, n));
    let right = AlgElement::g(-m, -n).add(&AlgElement::h(-m, -n));
    let den = RatFunc::q_pow(m) - RatFunc::from_int(1);
    Tensor2Element::of(&left, &right).scaled(&gamma.div(&den).expect("m != 0"))
}

fn u_action_expected(m: i64, n: i64, gamma: &RatFunc) -> Tensor2Element {
    use BasisVector::*;
    let partner = gamma.scaled_int(-1).mul(&RatFunc::q_pow(-m));
    let mut out = Tensor2Element::zero();
    out = out.add(&pure(G(Degree(m, 1 + n)), H(Degree(-m, -n))).scaled(gamma));
    out = out.add(&pure(H(Degree(m, n)), G(Degree(-m, 1 - n))).scaled(&partner));
    out = out.add(&pure(G(Degree(m, 1 + n)), G(Degree(-m, -n))).scaled(gamma));
    out = out.add(
        &pure(G(Degree(m, n)), G(Degree(-m, 1 - n)))
            .scaled(&gamma.mul(&RatFunc::q_pow(-m)).neg()),
    );
    out
}

fn suite_e(ctx: &mut Ctx, radius: i64, seed: u64) {
    let g01 = AlgElement::g(0, 1);
    for m in -radius..=radius {
        if m == 0 {
            continue;
        }
        for n in -radius..=radius {
            let gamma = RatFunc::one();
            let u = u_term(m, n, &gamma);
            ctx.eq2(
                format!("g(0,1) ladder action at (m,n)=({m},{n})"),
                &act2(&g01, &u),
                &u_action_expected(m, n, &gamma),
            );
        }
    }
    // Random coefficient families over the whole window.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..5 {
        let mut u = Tensor2Element::zero();
        let mut expected = Tensor2Element::zero();
        for m in -radius..=radius {
            if m == 0 {
                continue;
            }
            for n in -radius..=radius {
                let gamma = sample::nonzero_ratfunc(&mut rng);
                u = u.add(&u_term(m, n, &gamma));
                expected = expected.add(&u_action_expected(m, n, &gamma));
            }
        }
        ctx.eq2(format!("g(0,1) ladder action, random family {round}"), &act2(&g01, &u), &expected);
        // The correcting tensor must leave the already-cleared images
        // untouched: the rest of the generating set annihilates it.
        for x in [
            AlgElement::d(),
            AlgElement::d1(),
            AlgElement::d2(),
            AlgElement::e(0, 0),
            AlgElement::f(0, 0),
        ] {
            ctx.eq2(
                format!("ladder tensor fixed by {x}, random family {round}"),
                &act2(&x, &u),
                &Tensor2Element::zero(),
            );
        }
    }
}

// ---- suite f: axis diagonal ladder action -------------------------------
//
// For the axis tensor
//
//   v(n) = c_n * (g(0,n)+h(0,n)) (x) (g(0,-n)+h(0,-n)),   c_n = eta' / (1 - q^n),
//
// with n != 0 and the paired coefficients eta' and eta = -q^{-n} eta',
// the action of g(0,1) vanishes identically (both slots commute with
// g(0,1)), while the action of h(1,0) reproduces the eta'/eta families on
// the mixed slots plus a diagonal remainder. Subtracting the inner
// derivation of v therefore cancels those families without disturbing any
// previously cleared image.

fn v_term(n: i64, eta: &RatFunc) -> Tensor2Element {
    let eta_prime = eta.mul(&RatFunc::q_pow(n)).neg();
    let den = RatFunc::from_int(1) - RatFunc::q_pow(n);
    let c = eta_prime.div(&den).expect("n != 0");
    let left = AlgElement::g(0, n).add(&AlgElement::h(0, n));
    let right = AlgElement::g(0, -n).add(&AlgElement::h(0, -n));
    Tensor2Element::of(&left, &right).scaled(&c)
}

fn v_action_expected(n: i64, eta: &RatFunc) -> Tensor2Element {
    use BasisVector::*;
    let eta_prime = eta.mul(&RatFunc::q_pow(n)).neg();
    let mut out = Tensor2Element::zero();
    out = out.add(&pure(H(Degree(1, n)), G(Degree(0, -n))).scaled(&eta_prime));
    out = out.add(&pure(G(Degree(0, n)), H(Degree(1, -n))).scaled(eta));
    out = out.add(&pure(H(Degree(1, n)), H(Degree(0, -n))).scaled(&eta_prime));
    out = out.add(&pure(H(Degree(0, n)), H(Degree(1, -n))).scaled(eta));
    out
}

fn suite_f(ctx: &mut Ctx, radius: i64, seed: u64) {
    let g01 = AlgElement::g(0, 1);
    let h10 = AlgElement::h(1, 0);
    for n in -radius..=radius {
        if n == 0 {
            continue;
        }
        let eta = RatFunc::one();
        let v = v_term(n, &eta);
        ctx.eq2(
            format!("g(0,1) annihilates the axis tensor at n={n}"),
            &act2(&g01, &v),
            &Tensor2Element::zero(),
        );
        ctx.eq2(
            format!("h(1,0) axis action at n={n}"),
            &act2(&h10, &v),
            &v_action_expected(n, &eta),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..5 {
        let mut v = Tensor2Element::zero();
        let mut expected = Tensor2Element::zero();
        for n in -radius..=radius {
            if n == 0 {
                continue;
            }
            let eta = sample::nonzero_ratfunc(&mut rng);
            v = v.add(&v_term(n, &eta));
            expected = expected.add(&v_action_expected(n, &eta));
        }
        ctx.eq2(
            format!("g(0,1) annihilates the axis tensor, random family {round}"),
            &act2(&g01, &v),
            &Tensor2Element::zero(),
        );
        ctx.eq2(format!("h(1,0) axis action, random family {round}"), &act2(&h10, &v), &expected);
        for x in [
            AlgElement::d(),
            AlgElement::d1(),
            AlgElement::d2(),
            AlgElement::e(0, 0),
            AlgElement::f(0, 0),
        ] {
            ctx.eq2(
                format!("axis tensor fixed by {x}, random family {round}"),
                &act2(&x, &v),
                &Tensor2Element::zero(),
            );
        }
    }
}

// ---- suite g: consistency of the d / e(0,0) action system ---------------
//
// The degree-zero image of d, once the obvious inner parts are removed,
// is parameterized by coefficient families on the pairs
// exf, fxe, gxg, gxh, hxg, hxh, dxd and the d1/d2 block. The derivation
// equation for [d, e(0,0)] = 2 e(0,0) forces the image of e(0,0) to vanish
// and imposes linear relations on those families. This suite instantiates
// the relations with concrete coefficient tables and checks the
// consequences:
//   * every constrained table is annihilated by e(0,0) and by f(0,0);
//   * breaking one relation is detected (the action becomes nonzero);
//   * the reduced shape of the e(0,0) image contains no tensor of weight 2
//     in the window, so scaling by 2 under the d action forces it to zero.

/// Solved form of the relation system: free data `(dd, gg_k, gh_k)` with
/// `hg_k = gh_k`, `ef_k = fe_k = gg_k - gh_k`, `hh_k = gg_k`,
/// `ef_0 = fe_0 = 2 dd`.
fn constrained_table(
    dd: &RatFunc,
    data: &[(Degree, RatFunc, RatFunc)],
    diag: &[RatFunc; 4],
) -> Tensor2Element {
    use BasisVector::*;
    let mut t = Tensor2Element::zero();
    let ez = E(Degree::ZERO);
    let fz = F(Degree::ZERO);
    let two_dd = dd.scaled_int(2);
    t.add_term(ez, fz, two_dd.clone());
    t.add_term(fz, ez, two_dd);
    t.add_term(D, D, dd.clone());
    t.add_term(D1, D1, diag[0].clone());
    t.add_term(D1, D2, diag[1].clone());
    t.add_term(D2, D1, diag[2].clone());
    t.add_term(D2, D2, diag[3].clone());
    for (k, gg, gh) in data {
        let ef = gg.sub(gh);
        t.add_term(E(*k), F(-*k), ef.clone());
        t.add_term(F(*k), E(-*k), ef);
        t.add_term(G(*k), G(-*k), gg.clone());
        t.add_term(G(*k), H(-*k), gh.clone());
        t.add_term(H(*k), G(-*k), gh.clone());
        t.add_term(H(*k), H(-*k), gg.clone());
    }
    t
}

/// Weight of a basis vector under the adjoint action of `d`.
fn weight(b: &BasisVector) -> i64 {
    match b {
        BasisVector::E(_) => 2,
        BasisVector::F(_) => -2,
        _ => 0,
    }
}

fn suite_g(ctx: &mut Ctx, radius: i64, seed: u64) {
    use BasisVector::*;
    let e0 = AlgElement::e(0, 0);
    let f0 = AlgElement::f(0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..6 {
        let dd = sample::ratfunc(&mut rng);
        let diag = [
            sample::ratfunc(&mut rng),
            sample::ratfunc(&mut rng),
            sample::ratfunc(&mut rng),
            sample::ratfunc(&mut rng),
        ];
        let data: Vec<(Degree, RatFunc, RatFunc)> = nonzero_degrees(radius)
            .into_iter()
            .map(|k| (k, sample::ratfunc(&mut rng), sample::ratfunc(&mut rng)))
            .collect();
        let table = constrained_table(&dd, &data, &diag);
        ctx.eq2(
            format!("e(0,0) annihilates a constrained table, round {round}"),
            &act2(&e0, &table),
            &Tensor2Element::zero(),
        );
        ctx.eq2(
            format!("f(0,0) annihilates a constrained table, round {round}"),
            &act2(&f0, &table),
            &Tensor2Element::zero(),
        );
        // Negative control: breaking one relation must be detected.
        let mut broken = table.clone();
        let k = Degree(1, 0);
        broken.add_term(H(k), G(-k), RatFunc::one());
        let moved = act2(&e0, &broken);
        ctx.check(
            format!("broken relation is detected, round {round}"),
            !moved.is_zero(),
            "a nonzero action",
            &moved.to_string(),
        );
    }

    // Weight scan: the reduced shape of the e(0,0) image has no tensor of
    // weight 2 inside the window, so the scaling equation forces it to
    // vanish termwise.
    let fz = F(Degree::ZERO);
    let mut shape: Vec<(BasisVector, BasisVector)> = Vec::new();
    for m in all_degrees(radius) {
        shape.push((E(m), E(-m)));
        shape.push((E(m), F(-m)));
        shape.push((F(m), E(-m)));
        shape.push((F(m), F(-m)));
    }
    for k in nonzero_degrees(radius) {
        shape.push((F(k), G(-k)));
        shape.push((F(k), H(-k)));
        shape.push((G(k), F(-k)));
        shape.push((H(k), F(-k)));
        shape.push((G(k), G(-k)));
        shape.push((G(k), H(-k)));
        shape.push((H(k), G(-k)));
        shape.push((H(k), H(-k)));
    }
    for b in [D, D1, D2] {
        shape.push((fz, b));
        shape.push((b, fz));
    }
    for a in [D, D1, D2] {
        for b in [D, D1, D2] {
            shape.push((a, b));
        }
    }
    for (a, b) in shape {
        let w = weight(&a) + weight(&b);
        ctx.check(
            format!("no weight-2 tensor in the reduced shape: {a}(x){b}"),
            w != 2,
            "weight != 2",
            &format!("weight {w}"),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_radius_two() {
        for id in ALL_SUITES {
            let report = run_suite(id, 2, 99);
            assert!(
                report.passed(),
                "suite {id} failed: {:?}",
                report.failures.first()
            );
            assert!(report.instances > 0);
        }
    }

    #[test]
    fn suite_parsing() {
        assert_eq!("a".parse::<SuiteId>().unwrap(), SuiteId::A);
        assert_eq!(" G ".parse::<SuiteId>().unwrap(), SuiteId::G);
        assert!(matches!("z".parse::<SuiteId>(), Err(UnknownSuite(_))));
    }

    #[test]
    fn instance_counts_scale_with_radius() {
        let small = run_suite(SuiteId::A, 1, 0).instances;
        let large = run_suite(SuiteId::A, 2, 0).instances;
        assert!(large > small);
    }

    #[test]
    fn ladder_action_components_match_the_families() {
        use BasisVector::*;
        // The gxh / hxg components of the ladder action carry exactly the
        // two coefficient families, so subtracting the inner derivation
        // cancels them.
        let gamma = RatFunc::q_pow(2).sub(&RatFunc::from_int(3));
        let (m, n) = (2i64, -1i64);
        let acted = act2(&AlgElement::g(0, 1), &u_term(m, n, &gamma));
        let gh = acted.coeff(&G(Degree(m, 1 + n)), &H(Degree(-m, -n)));
        assert_eq!(gh, gamma);
        let hg = acted.coeff(&H(Degree(m, n)), &G(Degree(-m, 1 - n)));
        assert_eq!(hg, gamma.mul(&RatFunc::q_pow(-m)).neg());
    }

    #[test]
    fn axis_action_components_match_the_families() {
        use BasisVector::*;
        let eta = RatFunc::q_pow(-1).add(&RatFunc::from_int(1));
        let n = 2i64;
        let eta_prime = eta.mul(&RatFunc::q_pow(n)).neg();
        let acted = act2(&AlgElement::h(1, 0), &v_term(n, &eta));
        assert_eq!(acted.coeff(&H(Degree(1, n)), &G(Degree(0, -n))), eta_prime);
        assert_eq!(acted.coeff(&G(Degree(0, n)), &H(Degree(1, -n))), eta);
    }
}
