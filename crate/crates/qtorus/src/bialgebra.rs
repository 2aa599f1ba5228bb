//! The Lie-bialgebra layer: coboundary cobrackets `x -> x . r`, the
//! classical Yang-Baxter element
//! `c(r) = [r12, r13] + [r12, r23] + [r13, r23]`, and exact checkers for
//! the Yang-Baxter equation, the coalgebra axioms and the cocycle
//! compatibility condition.

use std::sync::OnceLock;

use crate::algebra::{bracket, bracket_basis, AlgElement, BasisVector};
use crate::tensor::{act2, act3, cyclic, is_skew, Tensor2Element, Tensor3Element};

/// A candidate `r` for a coboundary structure.
///
/// Construction does not require skewness, so non-skew tensors can still be
/// fed to the Yang-Baxter machinery for exploration; the skewness flag is
/// computed on first use and cached.
#[derive(Debug, Default)]
pub struct RMatrix {
    value: Tensor2Element,
    skew: OnceLock<bool>,
}

impl Clone for RMatrix {
    fn clone(&self) -> Self {
        Self { value: self.value.clone(), skew: self.skew.clone() }
    }
}

impl PartialEq for RMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for RMatrix {}

impl RMatrix {
    pub fn new(value: Tensor2Element) -> Self {
        Self { value, skew: OnceLock::new() }
    }

    pub fn value(&self) -> &Tensor2Element {
        &self.value
    }

    /// Whether `r` lies in the image of `1 - twist` (checked lazily).
    pub fn is_skew(&self) -> bool {
        *self.skew.get_or_init(|| is_skew(&self.value))
    }
}

impl From<Tensor2Element> for RMatrix {
    fn from(value: Tensor2Element) -> Self {
        Self::new(value)
    }
}

/// The coboundary cobracket `x -> x . r`.
pub fn delta_r(r: &RMatrix, x: &AlgElement) -> Tensor2Element {
    act2(x, &r.value)
}

/// The classical Yang-Baxter element of `r = sum_i a_i (x) b_i`, expanded
/// inside the tensor cube:
///
/// ```text
/// [r12, r13] = sum_ij [a_i, a_j] (x) b_i (x) b_j
/// [r12, r23] = sum_ij a_i (x) [b_i, a_j] (x) b_j
/// [r13, r23] = sum_ij a_i (x) a_j (x) [b_i, b_j]
/// ```
///
/// Each commutator pairs a nontrivial slot of one factor with the unit slot
/// of the other, so the sum lives in the Lie algebra's own tensor cube and
/// no enveloping-algebra model is needed.
pub fn c_of_r(r: &RMatrix) -> Tensor3Element {
    let mut out = Tensor3Element::zero();
    for ((ai, bi), ci) in r.value.terms() {
        for ((aj, bj), cj) in r.value.terms() {
            let scale = ci * cj;
            for (b, c) in bracket_basis(ai, aj).terms() {
                out.add_term(*b, *bi, *bj, c * &scale);
            }
            for (b, c) in bracket_basis(bi, aj).terms() {
                out.add_term(*ai, *b, *bj, c * &scale);
            }
            for (b, c) in bracket_basis(bi, bj).terms() {
                out.add_term(*ai, *aj, *b, c * &scale);
            }
        }
    }
    out
}

/// Exact check of the classical Yang-Baxter equation `c(r) = 0`.
pub fn check_cybe(r: &RMatrix) -> bool {
    c_of_r(r).is_zero()
}

/// The co-Jacobi expression `(1 + cyc + cyc^2)(1 (x) delta_r)(delta_r(x))`,
/// computed purely from the cobracket and the cyclic map.
///
/// For skew `r` this equals `x . c(r)` (checked independently by
/// [`crate::verify`]), so it vanishes for every `x` exactly when `r`
/// satisfies the modified Yang-Baxter equation.
pub fn cojacobi_defect(r: &RMatrix, x: &AlgElement) -> Tensor3Element {
    let dx = delta_r(r, x);
    let mut nested = Tensor3Element::zero();
    for ((a, b), c) in dx.terms() {
        let db = delta_r(r, &AlgElement::basis(*b));
        for ((p, q), k) in db.terms() {
            nested.add_term(*a, *p, *q, k * c);
        }
    }
    let rot1 = cyclic(&nested);
    let rot2 = cyclic(&rot1);
    nested.add(&rot1).add(&rot2)
}

/// Defect of the cocycle compatibility condition:
/// `delta_r([x,y]) - x . delta_r(y) + y . delta_r(x)`.
///
/// This is identically zero for every `r` — coboundaries are 1-cocycles —
/// and the checkers assert exactly that.
pub fn compatibility_defect(r: &RMatrix, x: &AlgElement, y: &AlgElement) -> Tensor2Element {
    delta_r(r, &bracket(x, y))
        .sub(&act2(x, &delta_r(r, y)))
        .add(&act2(y, &delta_r(r, x)))
}

/// Search the probe set for an element whose action detects `c(r) != 0`.
///
/// A returned witness disproves the Yang-Baxter equation for `r`. Absence
/// of a witness over finitely many probes does not prove it: the
/// equivalence of the modified equation with the classical one quantifies
/// over the whole algebra, so callers must report "no witness found" as
/// inconclusive rather than as a proof.
pub fn mybe_witness(r: &RMatrix, probes: &[AlgElement]) -> Option<AlgElement> {
    let c = c_of_r(r);
    if c.is_zero() {
        return None;
    }
    probes.iter().find(|x| !act3(x, &c).is_zero()).cloned()
}

/// Convenience constructor for wedges `a (x) b - b (x) a`.
pub fn wedge(a: &BasisVector, b: &BasisVector) -> Tensor2Element {
    Tensor2Element::pure(*a, *b).sub(&Tensor2Element::pure(*b, *a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Degree;
    use crate::laurent::RatFunc;
    use crate::sample;
    use crate::tensor::Tensor2Element;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use BasisVector::{D, D1, D2, E, F};

    fn e0() -> BasisVector {
        E(Degree(0, 0))
    }

    fn f0() -> BasisVector {
        F(Degree(0, 0))
    }

    fn r_d1_d2() -> RMatrix {
        RMatrix::new(wedge(&D1, &D2))
    }

    fn r_d_e0() -> RMatrix {
        RMatrix::new(wedge(&D, &e0()))
    }

    fn r_e0_f0() -> RMatrix {
        RMatrix::new(wedge(&e0(), &f0()))
    }

    /// The six-term Yang-Baxter element of e0 ^ f0, frozen from a hand
    /// expansion of the nine commutators and cross-checked against the
    /// co-Jacobi route by the acceptance suite.
    fn c_e0_f0() -> Tensor3Element {
        let mut want = Tensor3Element::zero();
        want.add_term(D, e0(), f0(), RatFunc::one());
        want.add_term(D, f0(), e0(), RatFunc::from_int(-1));
        want.add_term(e0(), D, f0(), RatFunc::from_int(-1));
        want.add_term(f0(), D, e0(), RatFunc::one());
        want.add_term(e0(), f0(), D, RatFunc::one());
        want.add_term(f0(), e0(), D, RatFunc::from_int(-1));
        want
    }

    #[test]
    fn delta_r_example() {
        let r = r_d1_d2();
        let x = AlgElement::e(1, 2);
        let got = delta_r(&r, &x);
        let mut want = Tensor2Element::zero();
        want.add_term(E(Degree(1, 2)), D2, RatFunc::from_int(-1));
        want.add_term(D1, E(Degree(1, 2)), RatFunc::from_int(-2));
        want.add_term(E(Degree(1, 2)), D1, RatFunc::from_int(2));
        want.add_term(D2, E(Degree(1, 2)), RatFunc::one());
        assert_eq!(got, want);

        assert!(delta_r(&r, &AlgElement::zero()).is_zero());
        assert!(delta_r(&RMatrix::new(Tensor2Element::zero()), &x).is_zero());
    }

    #[test]
    fn c_of_r_examples() {
        assert!(c_of_r(&r_d1_d2()).is_zero());
        assert!(c_of_r(&r_d_e0()).is_zero());
        assert_eq!(c_of_r(&r_e0_f0()), c_e0_f0());
    }

    #[test]
    fn check_cybe_examples() {
        assert!(check_cybe(&r_d1_d2()));
        assert!(check_cybe(&r_d_e0()));
        assert!(!check_cybe(&r_e0_f0()));
    }

    #[test]
    fn cojacobi_examples() {
        // r satisfying the Yang-Baxter equation: defect vanishes everywhere.
        for x in crate::verify::default_probes() {
            assert!(cojacobi_defect(&r_d_e0(), &x).is_zero());
        }
        assert!(cojacobi_defect(&r_e0_f0(), &AlgElement::zero()).is_zero());
        // d annihilates c(e0 ^ f0) even though c(r) != 0.
        let r = r_e0_f0();
        assert!(act3(&AlgElement::d(), &c_of_r(&r)).is_zero());
        assert!(cojacobi_defect(&r, &AlgElement::d()).is_zero());
    }

    #[test]
    fn cojacobi_matches_action_on_c() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..25 {
            let r = RMatrix::new(sample::skew_tensor2(&mut rng, 2, 3));
            for x in crate::verify::default_probes() {
                assert_eq!(cojacobi_defect(&r, &x), act3(&x, &c_of_r(&r)));
            }
        }
    }

    #[test]
    fn compatibility_defect_examples() {
        let r = r_d1_d2();
        let x = AlgElement::e(0, 0);
        assert!(compatibility_defect(&r, &x, &x).is_zero());
        assert!(compatibility_defect(&r, &x, &AlgElement::f(0, 0)).is_zero());

        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..40 {
            let r = RMatrix::new(sample::tensor2(&mut rng, 2, 3));
            let x = sample::element(&mut rng, 2, 2);
            let y = sample::element(&mut rng, 2, 2);
            assert!(compatibility_defect(&r, &x, &y).is_zero());
        }
    }

    #[test]
    fn image_axiom_for_skew_r() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let r = RMatrix::new(sample::skew_tensor2(&mut rng, 2, 3));
            assert!(r.is_skew());
            for x in crate::verify::default_probes() {
                assert!(is_skew(&delta_r(&r, &x)));
            }
        }
    }

    #[test]
    fn mybe_witness_examples() {
        let probes = crate::verify::default_probes();
        assert_eq!(mybe_witness(&r_d_e0(), &probes), None);

        let witness = mybe_witness(&r_e0_f0(), &probes).expect("c(r) != 0 must be detected");
        // d, d1, d2 all annihilate this c(r); the witness is one of the rest.
        let expected = [
            AlgElement::e(0, 0),
            AlgElement::f(0, 0),
            AlgElement::g(0, 1),
            AlgElement::h(1, 0),
        ];
        assert!(expected.contains(&witness), "unexpected witness {witness}");

        assert_eq!(mybe_witness(&r_d1_d2(), &probes), None);
    }

    #[test]
    fn skewness_is_recorded() {
        let r = r_e0_f0();
        assert!(r.is_skew());
        let not_skew = RMatrix::new(Tensor2Element::pure(D, D));
        assert!(!not_skew.is_skew());
        // Non-skew r can still be explored.
        let _ = c_of_r(&not_skew);
    }
}
