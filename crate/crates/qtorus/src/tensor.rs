//! Tensor square and cube of the algebra as modules under the diagonal
//! adjoint action `x . (a (x) b) = [x,a] (x) b + a (x) [x,b]`, together with
//! the twist and cyclic coordinate maps and the skew-part machinery.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{bracket_basis, AlgElement, BasisVector, Degree};
use crate::laurent::RatFunc;

/// A finite linear combination of ordered pairs of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor2Element {
    terms: BTreeMap<(BasisVector, BasisVector), RatFunc>,
}

/// A finite linear combination of ordered triples of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor3Element {
    terms: BTreeMap<(BasisVector, BasisVector, BasisVector), RatFunc>,
}

impl Tensor2Element {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `a (x) b` for basis vectors (zero when either is a zero symbol).
    pub fn pure(a: BasisVector, b: BasisVector) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, RatFunc::one());
        out
    }

    /// Bilinear outer product of two elements.
    pub fn of(x: &AlgElement, y: &AlgElement) -> Self {
        let mut out = Self::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                out.add_term(*bx, *by, cx * cy);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BasisVector, BasisVector), &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &BasisVector, b: &BasisVector) -> RatFunc {
        self.terms.get(&(*a, *b)).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, a: BasisVector, b: BasisVector, c: RatFunc) {
        if c.is_zero() || a.is_zero_symbol() || b.is_zero_symbol() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(RatFunc::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(*a, *b, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scaled(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for ((a, b), k) in self.terms() {
            out.add_term(*a, *b, k * c);
        }
        out
    }

    /// Total degree of each term; the decomposition sums back to the whole.
    pub fn homogeneous_components(&self) -> BTreeMap<Degree, Tensor2Element> {
        let mut out: BTreeMap<Degree, Tensor2Element> = BTreeMap::new();
        for ((a, b), c) in self.terms() {
            out.entry(a.degree() + b.degree())
                .or_default()
                .add_term(*a, *b, c.clone());
        }
        out
    }

    /// Keep only the terms of total degree `m`.
    pub fn component(&self, m: Degree) -> Tensor2Element {
        let mut out = Tensor2Element::zero();
        for ((a, b), c) in self.terms() {
            if a.degree() + b.degree() == m {
                out.add_term(*a, *b, c.clone());
            }
        }
        out
    }

    /// The common total degree when homogeneous; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<Degree> {
        let mut it = self.terms.keys();
        let (a, b) = it.next()?;
        let first = a.degree() + b.degree();
        it.all(|(a, b)| a.degree() + b.degree() == first).then_some(first)
    }
}

crate::algebra::forward_elem_binop!(Tensor2Element, Add, add, add);
crate::algebra::forward_elem_binop!(Tensor2Element, Sub, sub, sub);

impl Tensor3Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pure(a: BasisVector, b: BasisVector, c: BasisVector) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, c, RatFunc::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(
        &self,
    ) -> impl Iterator<Item = (&(BasisVector, BasisVector, BasisVector), &RatFunc)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, a: BasisVector, b: BasisVector, c: BasisVector, k: RatFunc) {
        if k.is_zero() || a.is_zero_symbol() || b.is_zero_symbol() || c.is_zero_symbol() {
            return;
        }
        let entry = self.terms.entry((a, b, c)).or_insert_with(RatFunc::zero);
        *entry = &*entry + &k;
        if entry.is_zero() {
            self.terms.remove(&(a, b, c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b, c), k) in other.terms() {
            out.add_term(*a, *b, *c, k.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scaled(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for ((a, b, m), k) in self.terms() {
            out.add_term(*a, *b, *m, k * c);
        }
        out
    }
}

crate::algebra::forward_elem_binop!(Tensor3Element, Add, add, add);
crate::algebra::forward_elem_binop!(Tensor3Element, Sub, sub, sub);

impl fmt::Display for Tensor2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{a}(x){b}")?;
            } else {
                write!(f, "[{c}]*{a}(x){b}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Tensor3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, b, c), k)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if k.is_one() {
                write!(f, "{a}(x){b}(x){c}")?;
            } else {
                write!(f, "[{k}]*{a}(x){b}(x){c}")?;
            }
        }
        Ok(())
    }
}

/// Diagonal adjoint action on the tensor square.
pub fn act2(x: &AlgElement, t: &Tensor2Element) -> Tensor2Element {
    let mut out = Tensor2Element::zero();
    for (bx, cx) in x.terms() {
        for ((a, b), ct) in t.terms() {
            let scale = cx * ct;
            for (ba, ca) in bracket_basis(bx, a).terms() {
                out.add_term(*ba, *b, ca * &scale);
            }
            for (bb, cb) in bracket_basis(bx, b).terms() {
                out.add_term(*a, *bb, cb * &scale);
            }
        }
    }
    out
}

/// Diagonal adjoint action on the tensor cube (Leibniz over three slots).
pub fn act3(x: &AlgElement, t: &Tensor3Element) -> Tensor3Element {
    let mut out = Tensor3Element::zero();
    for (bx, cx) in x.terms() {
        for ((a, b, c), ct) in t.terms() {
            let scale = cx * ct;
            for (ba, ca) in bracket_basis(bx, a).terms() {
                out.add_term(*ba, *b, *c, ca * &scale);
            }
            for (bb, cb) in bracket_basis(bx, b).terms() {
                out.add_term(*a, *bb, *c, cb * &scale);
            }
            for (bc, cc) in bracket_basis(bx, c).terms() {
                out.add_term(*a, *b, *bc, cc * &scale);
            }
        }
    }
    out
}

/// Coordinate swap `a (x) b -> b (x) a`.
pub fn twist(t: &Tensor2Element) -> Tensor2Element {
    let mut out = Tensor2Element::zero();
    for ((a, b), c) in t.terms() {
        out.add_term(*b, *a, c.clone());
    }
    out
}

/// Cyclic rotation `a (x) b (x) c -> b (x) c (x) a`.
pub fn cyclic(t: &Tensor3Element) -> Tensor3Element {
    let mut out = Tensor3Element::zero();
    for ((a, b, c), k) in t.terms() {
        out.add_term(*b, *c, *a, k.clone());
    }
    out
}

/// Membership in the image of `1 - twist`, equivalently `twist(t) = -t`.
pub fn is_skew(t: &Tensor2Element) -> bool {
    twist(t).add(t).is_zero()
}

/// Projection `(t - twist(t)) / 2` onto the skew part.
pub fn skew_part(t: &Tensor2Element) -> Tensor2Element {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    t.sub(&twist(t)).scaled(&RatFunc::from_rational(half))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bracket, basis_window};
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn two() -> RatFunc {
        RatFunc::from_int(2)
    }

    #[test]
    fn act2_examples() {
        // d . (e(1,2) (x) g(-1,-2)) = 2 e(1,2) (x) g(-1,-2)
        let t = Tensor2Element::of(&AlgElement::e(1, 2), &AlgElement::g(-1, -2));
        assert_eq!(act2(&AlgElement::d(), &t), t.scaled(&two()));

        // e(0,0) . (f(0,0) (x) e(0,0)) = d (x) e(0,0)
        let t = Tensor2Element::of(&AlgElement::f(0, 0), &AlgElement::e(0, 0));
        let want = Tensor2Element::of(&AlgElement::d(), &AlgElement::e(0, 0));
        assert_eq!(act2(&AlgElement::e(0, 0), &t), want);

        // x . 0 = 0
        assert!(act2(&AlgElement::e(1, 1), &Tensor2Element::zero()).is_zero());

        // e(0,0) . (h(1,1) (x) g(-1,-1)) = e(1,1) (x) g(-1,-1) - h(1,1) (x) e(-1,-1)
        let t = Tensor2Element::of(&AlgElement::h(1, 1), &AlgElement::g(-1, -1));
        let want = Tensor2Element::of(&AlgElement::e(1, 1), &AlgElement::g(-1, -1))
            .sub(&Tensor2Element::of(&AlgElement::h(1, 1), &AlgElement::e(-1, -1)));
        assert_eq!(act2(&AlgElement::e(0, 0), &t), want);
    }

    #[test]
    fn act3_examples() {
        use BasisVector::*;
        // d . (e0 (x) e0 (x) f0) = (2 + 2 - 2) * t
        let t = Tensor3Element::pure(E(Degree(0, 0)), E(Degree(0, 0)), F(Degree(0, 0)));
        assert_eq!(act3(&AlgElement::d(), &t), t.scaled(&two()));

        assert!(act3(&AlgElement::e(1, 0), &Tensor3Element::zero()).is_zero());

        // d1 . (e(1,0) (x) f(2,0) (x) d) = 3 * t
        let t = Tensor3Element::pure(E(Degree(1, 0)), F(Degree(2, 0)), D);
        assert_eq!(act3(&AlgElement::d1(), &t), t.scaled(&RatFunc::from_int(3)));
    }

    #[test]
    fn twist_and_cyclic_examples() {
        use BasisVector::*;
        let e0 = E(Degree(0, 0));
        let f0 = F(Degree(0, 0));
        assert_eq!(twist(&Tensor2Element::pure(e0, f0)), Tensor2Element::pure(f0, e0));
        let t = Tensor2Element::pure(e0, f0).sub(&Tensor2Element::pure(f0, e0).scaled(&two()));
        assert_eq!(twist(&twist(&t)), t);
        assert_eq!(twist(&Tensor2Element::pure(D, D)), Tensor2Element::pure(D, D));

        let t3 = Tensor3Element::pure(e0, f0, D);
        assert_eq!(cyclic(&t3), Tensor3Element::pure(f0, D, e0));
        assert_eq!(cyclic(&cyclic(&cyclic(&t3))), t3);
        let sym = Tensor3Element::pure(D, D, D);
        assert_eq!(cyclic(&sym), sym);
    }

    #[test]
    fn skew_examples() {
        use BasisVector::*;
        let e0 = E(Degree(0, 0));
        let f0 = F(Degree(0, 0));
        let skew = Tensor2Element::pure(e0, f0).sub(&Tensor2Element::pure(f0, e0));
        assert!(is_skew(&skew));
        assert!(!is_skew(&Tensor2Element::pure(D, D)));
        assert!(is_skew(&Tensor2Element::zero()));

        assert!(skew_part(&Tensor2Element::pure(D, D)).is_zero());
        let half = RatFunc::one().div(&two()).unwrap();
        assert_eq!(skew_part(&Tensor2Element::pure(e0, f0)), skew.scaled(&half));
        assert_eq!(skew_part(&skew), skew);
        // Projection is idempotent and lands in the skew part.
        assert_eq!(skew_part(&skew_part(&Tensor2Element::pure(e0, f0))), skew.scaled(&half));
    }

    #[test]
    fn homogeneous_components_sum_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..20 {
            let t = sample::tensor2(&mut rng, 2, 4);
            let comps = t.homogeneous_components();
            let total = comps.values().fold(Tensor2Element::zero(), |a, b| a.add(b));
            assert_eq!(total, t);
            for (deg, part) in comps {
                assert_eq!(part.homogeneous_degree(), Some(deg));
                assert_eq!(t.component(deg), part);
            }
        }
    }

    #[test]
    fn module_axiom_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let x = sample::element(&mut rng, 2, 2);
            let y = sample::element(&mut rng, 2, 2);
            let t = sample::tensor2(&mut rng, 2, 3);
            let lhs = act2(&bracket(&x, &y), &t);
            let rhs = act2(&x, &act2(&y, &t)).sub(&act2(&y, &act2(&x, &t)));
            assert_eq!(lhs, rhs);

            let t3 = sample::tensor3(&mut rng, 2, 3);
            let lhs = act3(&bracket(&x, &y), &t3);
            let rhs = act3(&x, &act3(&y, &t3)).sub(&act3(&y, &act3(&x, &t3)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn twist_equivariance_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..60 {
            let x = sample::element(&mut rng, 2, 2);
            let t = sample::tensor2(&mut rng, 2, 3);
            assert_eq!(twist(&act2(&x, &t)), act2(&x, &twist(&t)));
        }
    }

    #[test]
    fn degree_additivity_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..60 {
            let b = sample::basis(&mut rng, 2);
            let x = AlgElement::basis(b);
            let t = sample::homogeneous_tensor2(&mut rng, 2, 3);
            let Some(td) = t.homogeneous_degree() else { continue };
            let acted = act2(&x, &t);
            if let Some(d) = acted.homogeneous_degree() {
                assert_eq!(d, b.degree() + td);
            } else {
                assert!(acted.is_zero());
            }
        }
    }

    #[test]
    fn windowed_faithfulness_on_probes() {
        // Every nonzero single-pair tensor in the radius-1 window is moved
        // by at least one default probe.
        let probes = crate::verify::default_probes();
        for a in basis_window(1) {
            for b in basis_window(1) {
                let v = Tensor2Element::pure(a, b);
                if v.is_zero() {
                    continue;
                }
                assert!(
                    probes.iter().any(|x| !act2(x, &v).is_zero()),
                    "no probe moves {v}"
                );
            }
        }
    }
}
