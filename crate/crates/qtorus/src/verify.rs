//! Verification runners shared by the CLI and the acceptance suite.
//!
//! Every runner performs exact checks and returns a [`VerifyReport`];
//! an empty failure list is the only success signal. Randomized checks
//! take an explicit seed so runs are reproducible.

use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{basis_window, bracket, jacobi_defect, AlgElement};
use crate::bialgebra::{c_of_r, check_cybe, cojacobi_defect, compatibility_defect, delta_r, wedge, RMatrix};
use crate::derivation::{inner_derivation, reduce_to_inner, windowed_faithfulness};
use crate::identities::{run_suite, SuiteId, ALL_SUITES};
use crate::json;
use crate::laurent::RatFunc;
use crate::sample;
use crate::tensor::{act2, act3, is_skew};
use crate::torus::{embed_basis, oracle_bracket_basis};
use crate::BasisVector;

/// One failed check, rendered in the textual formats.
#[derive(Clone, Debug, Serialize)]
pub struct CheckFailure {
    pub context: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification run.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub instances_checked: usize,
    pub failures: Vec<CheckFailure>,
    pub wall_time: f64,
}

impl VerifyReport {
    fn new(suite: &str) -> Self {
        Self { suite: suite.to_string(), instances_checked: 0, failures: Vec::new(), wall_time: 0.0 }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite:     {}", self.suite)?;
        writeln!(f, "checked:   {} instances", self.instances_checked)?;
        writeln!(f, "failures:  {}", self.failures.len())?;
        writeln!(f, "wall time: {:.2}s", self.wall_time)?;
        for failure in self.failures.iter().take(10) {
            writeln!(f, "  FAIL {}", failure.context)?;
            writeln!(f, "    expected: {}", failure.expected)?;
            writeln!(f, "    actual:   {}", failure.actual)?;
        }
        if self.failures.len() > 10 {
            writeln!(f, "  ... and {} more", self.failures.len() - 10)?;
        }
        Ok(())
    }
}

/// The default probe set: the degree derivations, the weight element, and
/// the generators that reach every window index by repeated brackets.
pub fn default_probes() -> Vec<AlgElement> {
    vec![
        AlgElement::d1(),
        AlgElement::d2(),
        AlgElement::d(),
        AlgElement::e(0, 0),
        AlgElement::f(0, 0),
        AlgElement::g(0, 1),
        AlgElement::h(1, 0),
        AlgElement::g(0, -1),
        AlgElement::h(-1, 0),
    ]
}

/// Antisymmetry on all window pairs, the Jacobi identity on all window
/// triples (up to permutation), and seeded bilinearity checks.
pub fn verify_lie_axioms(radius: i64, seed: u64) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("lie-axioms");
    let window = basis_window(radius);
    let n = window.len();

    let mut failures: Vec<CheckFailure> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let window = &window;
            let mut fails = Vec::new();
            let x = AlgElement::basis(window[i]);
            for j in 0..n {
                let y = AlgElement::basis(window[j]);
                let defect = bracket(&x, &y).add(&bracket(&y, &x));
                if !defect.is_zero() {
                    fails.push(CheckFailure {
                        context: format!("antisymmetry at [{}, {}]", window[i], window[j]),
                        expected: "0".to_string(),
                        actual: defect.to_string(),
                    });
                }
            }
            fails
        })
        .collect();
    report.instances_checked += n * n;

    // The Jacobi expression is alternating, so unordered triples suffice
    // once antisymmetry holds.
    failures.par_extend((0..n).into_par_iter().flat_map_iter(|i| {
        let window = &window;
        let mut fails = Vec::new();
        let x = AlgElement::basis(window[i]);
        for j in i..n {
            let y = AlgElement::basis(window[j]);
            for k in j..n {
                let z = AlgElement::basis(window[k]);
                let defect = jacobi_defect(&x, &y, &z);
                if !defect.is_zero() {
                    fails.push(CheckFailure {
                        context: format!(
                            "jacobi at ({}, {}, {})",
                            window[i], window[j], window[k]
                        ),
                        expected: "0".to_string(),
                        actual: defect.to_string(),
                    });
                }
            }
        }
        fails
    }));
    report.instances_checked += n * (n + 1) * (n + 2) / 6;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..50 {
        let a = sample::ratfunc(&mut rng);
        let x = sample::element(&mut rng, radius.min(2), 2);
        let y = sample::element(&mut rng, radius.min(2), 2);
        let z = sample::element(&mut rng, radius.min(2), 2);
        let lhs = bracket(&x.scaled(&a).add(&y), &z);
        let rhs = bracket(&x, &z).scaled(&a).add(&bracket(&y, &z));
        report.instances_checked += 1;
        if lhs != rhs {
            failures.push(CheckFailure {
                context: format!("bilinearity sample {i}"),
                expected: rhs.to_string(),
                actual: lhs.to_string(),
            });
        }
    }

    report.failures = failures;
    report.wall_time = start.elapsed().as_secs_f64();
    report
}

/// Structure constants against the quantum-torus matrix oracle, plus
/// seeded associativity checks of the normal-ordered product.
pub fn verify_oracle(radius: i64, seed: u64) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("oracle");
    let window: Vec<_> = basis_window(radius)
        .into_iter()
        .filter(|b| !matches!(b, BasisVector::D1 | BasisVector::D2))
        .collect();
    let n = window.len();

    let failures: Vec<CheckFailure> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let window = &window;
            let mut fails = Vec::new();
            for j in 0..n {
                let via_oracle = oracle_bracket_basis(&window[i], &window[j])
                    .expect("window excludes the degree derivations");
                let via_table = crate::algebra::bracket_basis(&window[i], &window[j]);
                if via_oracle != via_table {
                    fails.push(CheckFailure {
                        context: format!("bracket at [{}, {}]", window[i], window[j]),
                        expected: via_oracle.to_string(),
                        actual: via_table.to_string(),
                    });
                }
            }
            fails
        })
        .collect();
    report.instances_checked += n * n;
    report.failures = failures;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..100 {
        let a = embed_basis(&sample_matrix_basis(&mut rng, radius)).unwrap();
        let b = embed_basis(&sample_matrix_basis(&mut rng, radius)).unwrap();
        let c = embed_basis(&sample_matrix_basis(&mut rng, radius)).unwrap();
        report.instances_checked += 1;
        let lhs = a.mul(&b).mul(&c);
        let rhs = a.mul(&b.mul(&c));
        if lhs != rhs {
            report.failures.push(CheckFailure {
                context: format!("associativity sample {i}"),
                expected: rhs.to_string(),
                actual: lhs.to_string(),
            });
        }
    }

    report.wall_time = start.elapsed().as_secs_f64();
    report
}

fn sample_matrix_basis(rng: &mut impl rand::Rng, radius: i64) -> BasisVector {
    loop {
        let b = sample::basis(rng, radius);
        if !matches!(b, BasisVector::D1 | BasisVector::D2) {
            return b;
        }
    }
}

/// Bracket-compatibility of the diagonal actions on pairs and triples.
pub fn verify_module_axioms(radius: i64, seed: u64, samples: usize) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("module-axioms");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let x = sample::element(&mut rng, radius, 2);
        let y = sample::element(&mut rng, radius, 2);
        let t2 = sample::tensor2(&mut rng, radius, 3);
        let t3 = sample::tensor3(&mut rng, radius, 2);

        let lhs = act2(&bracket(&x, &y), &t2);
        let rhs = act2(&x, &act2(&y, &t2)).sub(&act2(&y, &act2(&x, &t2)));
        report.instances_checked += 1;
        if lhs != rhs {
            report.failures.push(CheckFailure {
                context: format!("pair action sample {i}"),
                expected: rhs.to_string(),
                actual: lhs.to_string(),
            });
        }

        let lhs = act3(&bracket(&x, &y), &t3);
        let rhs = act3(&x, &act3(&y, &t3)).sub(&act3(&y, &act3(&x, &t3)));
        report.instances_checked += 1;
        if lhs != rhs {
            report.failures.push(CheckFailure {
                context: format!("triple action sample {i}"),
                expected: rhs.to_string(),
                actual: lhs.to_string(),
            });
        }
    }
    report.wall_time = start.elapsed().as_secs_f64();
    report
}

/// Run one identity suite, or all of them.
pub fn verify_identities(radius: i64, seed: u64, suite: Option<SuiteId>) -> VerifyReport {
    let start = Instant::now();
    let suites: Vec<SuiteId> = match suite {
        Some(s) => vec![s],
        None => ALL_SUITES.to_vec(),
    };
    let mut report = VerifyReport::new("identities");
    for id in suites {
        let suite_report = run_suite(id, radius, seed);
        report.instances_checked += suite_report.instances;
        for failure in suite_report.failures {
            report.failures.push(CheckFailure {
                context: format!("suite {id} ({}): {}", id.description(), failure.instance),
                expected: failure.expected,
                actual: failure.actual,
            });
        }
    }
    report.wall_time = start.elapsed().as_secs_f64();
    report
}

/// The bialgebra layer: the co-Jacobi expression against the action on the
/// Yang-Baxter element (for skew `r`), the cocycle property of coboundary
/// cobrackets (for arbitrary `r`), and skewness of the cobracket images.
pub fn verify_bialgebra_axioms(radius: i64, seed: u64, samples: usize) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("bialgebra-axioms");
    let probes = default_probes();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for i in 0..samples {
        let r = RMatrix::new(sample::skew_tensor2(&mut rng, radius, 3));
        let c = c_of_r(&r);
        for x in &probes {
            let lhs = cojacobi_defect(&r, x);
            let rhs = act3(x, &c);
            report.instances_checked += 1;
            if lhs != rhs {
                report.failures.push(CheckFailure {
                    context: format!("co-jacobi route disagrees at sample {i}, probe {x}"),
                    expected: rhs.to_string(),
                    actual: lhs.to_string(),
                });
            }
            let image = delta_r(&r, x);
            report.instances_checked += 1;
            if !is_skew(&image) {
                report.failures.push(CheckFailure {
                    context: format!("cobracket image not skew at sample {i}, probe {x}"),
                    expected: "a skew tensor".to_string(),
                    actual: image.to_string(),
                });
            }
        }
    }

    for i in 0..samples {
        let r = RMatrix::new(sample::tensor2(&mut rng, radius, 3));
        let x = sample::element(&mut rng, radius, 2);
        let y = sample::element(&mut rng, radius, 2);
        let defect = compatibility_defect(&r, &x, &y);
        report.instances_checked += 1;
        if !defect.is_zero() {
            report.failures.push(CheckFailure {
                context: format!("compatibility cocycle sample {i}"),
                expected: "0".to_string(),
                actual: defect.to_string(),
            });
        }
    }

    report.wall_time = start.elapsed().as_secs_f64();
    report
}

/// Round trip of the reduction of homogeneous inner tables.
pub fn verify_inner_roundtrip(radius: i64, seed: u64, samples: usize) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("inner-roundtrip");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let k = sample::nonzero_degree(&mut rng, radius);
        let v = sample::homogeneous_tensor2_of_degree(&mut rng, k, radius, 3);
        let table = inner_derivation(&v, 1);
        report.instances_checked += 1;
        match reduce_to_inner(&table, k) {
            Ok(recovered) if recovered == v => {}
            Ok(recovered) => report.failures.push(CheckFailure {
                context: format!("inner round trip sample {i} at degree {k}"),
                expected: v.to_string(),
                actual: recovered.to_string(),
            }),
            Err(e) => report.failures.push(CheckFailure {
                context: format!("inner round trip sample {i} at degree {k}"),
                expected: v.to_string(),
                actual: format!("error: {e}"),
            }),
        }
    }
    report.wall_time = start.elapsed().as_secs_f64();
    report
}

/// Every nonzero sampled tensor must be moved by some default probe.
/// Homogeneous tensors (the hard case: the degree derivations see nothing
/// special) alternate with general ones.
pub fn verify_faithfulness(radius: i64, seed: u64, samples: usize) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("faithfulness");
    let probes = default_probes();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let v = if i % 2 == 0 {
            sample::nonzero_tensor2(&mut rng, radius, 3)
        } else {
            loop {
                let t = sample::homogeneous_tensor2(&mut rng, radius, 3);
                if !t.is_zero() {
                    break t;
                }
            }
        };
        report.instances_checked += 1;
        if windowed_faithfulness(&v, &probes).is_none() {
            report.failures.push(CheckFailure {
                context: format!("faithfulness sample {i}: no probe moves the tensor"),
                expected: "a witness probe".to_string(),
                actual: json::tensor2_to_string(&v),
            });
        }
    }
    report.wall_time = start.elapsed().as_secs_f64();
    report
}

/// Serialization round trips for every wire format.
pub fn verify_serialization(seed: u64, samples: usize) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("serialization");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let push = |report: &mut VerifyReport, context: String, ok: bool, text: &str| {
        report.instances_checked += 1;
        if !ok {
            report.failures.push(CheckFailure {
                context,
                expected: "bit-exact round trip".to_string(),
                actual: text.to_string(),
            });
        }
    };

    for i in 0..samples {
        let c = sample::ratfunc(&mut rng);
        let text = c.to_string();
        let ok = text.parse::<RatFunc>().map(|back| back == c).unwrap_or(false)
            && text.parse::<RatFunc>().map(|b| b.to_string() == text).unwrap_or(false);
        push(&mut report, format!("coefficient sample {i}"), ok, &text);

        let x = sample::element(&mut rng, 3, 3);
        let text = json::element_to_string(&x);
        let ok = json::parse_element(&text).map(|b| b == x).unwrap_or(false)
            && json::parse_element(&text).map(|b| json::element_to_string(&b) == text).unwrap_or(false);
        push(&mut report, format!("element sample {i}"), ok, &text);

        let t = sample::tensor2(&mut rng, 3, 3);
        let text = json::tensor2_to_string(&t);
        let ok = json::parse_tensor2(&text).map(|b| b == t).unwrap_or(false)
            && json::parse_tensor2(&text).map(|b| json::tensor2_to_string(&b) == text).unwrap_or(false);
        push(&mut report, format!("pair tensor sample {i}"), ok, &text);

        let u = sample::tensor3(&mut rng, 3, 3);
        let text = json::tensor3_to_string(&u);
        let ok = json::parse_tensor3(&text).map(|b| b == u).unwrap_or(false)
            && json::parse_tensor3(&text).map(|b| json::tensor3_to_string(&b) == text).unwrap_or(false);
        push(&mut report, format!("triple tensor sample {i}"), ok, &text);

        let table = inner_derivation(&sample::tensor2(&mut rng, 1, 2), 1);
        let text = json::table_to_string(&table);
        let ok = json::parse_table(&text).map(|b| b == table).unwrap_or(false)
            && json::parse_table(&text).map(|b| json::table_to_string(&b) == text).unwrap_or(false);
        push(&mut report, format!("table sample {i}"), ok, &text);
    }
    report.wall_time = start.elapsed().as_secs_f64();
    report
}

/// End-to-end demonstration on the wedge of `d` with `e(0,0)`: the tensor
/// is skew, satisfies the Yang-Baxter equation, every cobracket image over
/// the radius-2 window is skew, and the co-Jacobi expression vanishes on
/// all window probes, which is exactly the triangular coboundary package.
pub fn demo_triangular(radius: i64) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("demo-triangular");
    let r = RMatrix::new(wedge(&BasisVector::D, &BasisVector::E(crate::Degree(0, 0))));

    report.instances_checked += 1;
    if !r.is_skew() {
        report.failures.push(CheckFailure {
            context: "r is skew".to_string(),
            expected: "a skew tensor".to_string(),
            actual: json::tensor2_to_string(r.value()),
        });
    }

    report.instances_checked += 1;
    if !check_cybe(&r) {
        report.failures.push(CheckFailure {
            context: "Yang-Baxter element vanishes".to_string(),
            expected: "0".to_string(),
            actual: json::tensor3_to_string(&c_of_r(&r)),
        });
    }

    for b in basis_window(radius) {
        let x = AlgElement::basis(b);
        let image = delta_r(&r, &x);
        report.instances_checked += 1;
        if !is_skew(&image) {
            report.failures.push(CheckFailure {
                context: format!("cobracket image at {b} is skew"),
                expected: "a skew tensor".to_string(),
                actual: image.to_string(),
            });
        }
        let defect = cojacobi_defect(&r, &x);
        report.instances_checked += 1;
        if !defect.is_zero() {
            report.failures.push(CheckFailure {
                context: format!("co-jacobi defect at {b}"),
                expected: "0".to_string(),
                actual: defect.to_string(),
            });
        }
    }

    report.wall_time = start.elapsed().as_secs_f64();
    report
}
