//! The Lie algebra itself: graded basis, structure constants, and element
//! arithmetic in canonical form.
//!
//! Basis vectors are `e`, `f`, `g`, `h` indexed by a pair of integers,
//! plus the Cartan element `d` and the two degree derivations `d1`, `d2`.
//! In the matrix realization over the quantum torus (see [`crate::torus`]),
//! `e` and `f` are the strictly upper/lower matrix units, `g` and `h` the
//! diagonal ones, and `d` the trace-split `E11 - E22`. The two derivations
//! act on a homogeneous element by its degree coordinates and have no
//! matrix realization.

use std::collections::BTreeMap;
use std::fmt;

use crate::laurent::RatFunc;

/// A point of the `Z x Z` grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(pub i64, pub i64);

impl Degree {
    pub const ZERO: Degree = Degree(0, 0);

    pub fn is_zero(&self) -> bool {
        *self == Degree::ZERO
    }
}

impl std::ops::Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl std::ops::Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree(-self.0, -self.1)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// One basis vector. The variant order gives the canonical serialization
/// order: `d < d1 < d2 < e < f < g < h`, then lexicographic on the index.
///
/// `G` and `H` at index `(0,0)` are not basis vectors; expressions that
/// formally produce them treat them as zero. The canonicalizing
/// constructors on [`AlgElement`] and the tensor types enforce this.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisVector {
    D,
    D1,
    D2,
    E(Degree),
    F(Degree),
    G(Degree),
    H(Degree),
}

impl BasisVector {
    /// Degree of the basis vector in the `Z x Z` grading.
    pub fn degree(&self) -> Degree {
        match self {
            BasisVector::D | BasisVector::D1 | BasisVector::D2 => Degree::ZERO,
            BasisVector::E(m) | BasisVector::F(m) | BasisVector::G(m) | BasisVector::H(m) => *m,
        }
    }

    /// True for the formally-zero symbols `g(0,0)` and `h(0,0)`.
    pub fn is_zero_symbol(&self) -> bool {
        matches!(self, BasisVector::G(k) | BasisVector::H(k) if k.is_zero())
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisVector::D => write!(f, "d"),
            BasisVector::D1 => write!(f, "d1"),
            BasisVector::D2 => write!(f, "d2"),
            BasisVector::E(m) => write!(f, "e{m}"),
            BasisVector::F(m) => write!(f, "f{m}"),
            BasisVector::G(m) => write!(f, "g{m}"),
            BasisVector::H(m) => write!(f, "h{m}"),
        }
    }
}

/// A finite linear combination of basis vectors with [`RatFunc`]
/// coefficients, in canonical form: no zero coefficients, no zero symbols,
/// terms ordered by the canonical basis order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgElement {
    terms: BTreeMap<BasisVector, RatFunc>,
}

impl AlgElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector as an element; `g(0,0)` and `h(0,0)` give zero.
    pub fn basis(b: BasisVector) -> Self {
        let mut out = Self::zero();
        out.add_term(b, RatFunc::one());
        out
    }

    pub fn e(m1: i64, m2: i64) -> Self {
        Self::basis(BasisVector::E(Degree(m1, m2)))
    }

    pub fn f(m1: i64, m2: i64) -> Self {
        Self::basis(BasisVector::F(Degree(m1, m2)))
    }

    pub fn g(k1: i64, k2: i64) -> Self {
        Self::basis(BasisVector::G(Degree(k1, k2)))
    }

    pub fn h(k1: i64, k2: i64) -> Self {
        Self::basis(BasisVector::H(Degree(k1, k2)))
    }

    pub fn d() -> Self {
        Self::basis(BasisVector::D)
    }

    pub fn d1() -> Self {
        Self::basis(BasisVector::D1)
    }

    pub fn d2() -> Self {
        Self::basis(BasisVector::D2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisVector, &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, b: &BasisVector) -> RatFunc {
        self.terms.get(b).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Add `c * b`, merging with an existing term and dropping zeros.
    pub fn add_term(&mut self, b: BasisVector, c: RatFunc) {
        if c.is_zero() || b.is_zero_symbol() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(RatFunc::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scaled(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for (b, k) in self.terms() {
            out.add_term(*b, k * c);
        }
        out
    }

    /// Partition the terms by degree; the parts sum back to the element.
    pub fn homogeneous_components(&self) -> BTreeMap<Degree, AlgElement> {
        let mut out: BTreeMap<Degree, AlgElement> = BTreeMap::new();
        for (b, c) in self.terms() {
            out.entry(b.degree()).or_default().add_term(*b, c.clone());
        }
        out
    }

    /// The common degree of all terms, if the element is homogeneous.
    /// Zero has every degree; by convention this returns `None` for zero.
    pub fn homogeneous_degree(&self) -> Option<Degree> {
        let mut it = self.terms.keys();
        let first = it.next()?.degree();
        it.all(|b| b.degree() == first).then_some(first)
    }
}

macro_rules! forward_elem_binop {
    ($ty:ty, $trait:ident, $method:ident, $func:ident) => {
        impl std::ops::$trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                <$ty>::$func(self, rhs)
            }
        }
        impl std::ops::$trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                <$ty>::$func(&self, &rhs)
            }
        }
    };
}
pub(crate) use forward_elem_binop;

forward_elem_binop!(AlgElement, Add, add, add);
forward_elem_binop!(AlgElement, Sub, sub, sub);

impl std::ops::Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        AlgElement::neg(self)
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "[{c}]*{b}")?;
            }
        }
        Ok(())
    }
}

/// Bracket of two basis vectors.
///
/// The table covers the canonical orientation of every pair; the rest
/// follows by antisymmetry. Degree derivations act on a basis vector by the
/// matching coordinate of its degree, and the remaining products come from
/// the matrix realization over the torus, which the [`crate::torus`] oracle
/// cross-checks pair by pair.
pub fn bracket_basis(a: &BasisVector, b: &BasisVector) -> AlgElement {
    use BasisVector::*;
    if a.is_zero_symbol() || b.is_zero_symbol() {
        return AlgElement::zero();
    }
    // Orient so the table below only needs one ordering of each pair.
    if table_rank(a) > table_rank(b) {
        return bracket_basis(b, a).neg();
    }
    let mut out = AlgElement::zero();
    match (a, b) {
        // Degree derivations scale by the degree coordinates.
        (D1, x) => {
            let Degree(m1, _) = x.degree();
            out = AlgElement::basis(*x).scaled(&RatFunc::from_int(m1));
        }
        (D2, x) => {
            let Degree(_, m2) = x.degree();
            out = AlgElement::basis(*x).scaled(&RatFunc::from_int(m2));
        }
        // d is the weight element: +2 on e, -2 on f, 0 on g, h, d, d1, d2.
        (D, E(m)) => out.add_term(E(*m), RatFunc::from_int(2)),
        (D, F(m)) => out.add_term(F(*m), RatFunc::from_int(-2)),
        (D, _) => {}
        // e-e and f-f products vanish (nilpotent matrix units).
        (E(_), E(_)) | (F(_), F(_)) => {}
        // e-f products land on the diagonal.
        (E(m), F(mp)) => {
            let s = *m + *mp;
            let ge = RatFunc::q_pow(m.1 * mp.0);
            if s.is_zero() {
                // Both diagonal coefficients coincide when mp = -m, and the
                // balanced diagonal is a multiple of d.
                debug_assert_eq!(m.1 * mp.0, mp.1 * m.0);
                out.add_term(D, ge);
            } else {
                out.add_term(G(s), ge);
                out.add_term(H(s), -RatFunc::q_pow(mp.1 * m.0));
            }
        }
        // Diagonal acting on e and f.
        (E(m), G(k)) => out.add_term(E(*k + *m), -RatFunc::q_pow(k.1 * m.0)),
        (E(m), H(k)) => out.add_term(E(*k + *m), RatFunc::q_pow(k.0 * m.1)),
        (F(m), G(k)) => out.add_term(F(*k + *m), RatFunc::q_pow(k.0 * m.1)),
        (F(m), H(k)) => out.add_term(F(*k + *m), -RatFunc::q_pow(k.1 * m.0)),
        // Diagonal-diagonal products twist by the torus commutation.
        (G(k), G(kp)) | (H(k), H(kp)) => {
            let c = RatFunc::q_pow(k.1 * kp.0) - RatFunc::q_pow(kp.1 * k.0);
            let s = *k + *kp;
            let target = if matches!(a, G(_)) { G(s) } else { H(s) };
            out.add_term(target, c);
        }
        (G(_), H(_)) => {}
        _ => unreachable!("ordering by table_rank covers every pair"),
    }
    out
}

/// Fixed orientation for the basis-level bracket table.
fn table_rank(b: &BasisVector) -> u8 {
    match b {
        BasisVector::D1 => 0,
        BasisVector::D2 => 1,
        BasisVector::D => 2,
        BasisVector::E(_) => 3,
        BasisVector::F(_) => 4,
        BasisVector::G(_) => 5,
        BasisVector::H(_) => 6,
    }
}

/// Bilinear extension of the basis bracket.
pub fn bracket(x: &AlgElement, y: &AlgElement) -> AlgElement {
    let mut out = AlgElement::zero();
    for (bx, cx) in x.terms() {
        for (by, cy) in y.terms() {
            let prod = bracket_basis(bx, by);
            let scale = cx * cy;
            for (b, c) in prod.terms() {
                out.add_term(*b, c * &scale);
            }
        }
    }
    out
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`; zero exactly when the bracket
/// satisfies the Jacobi identity on these arguments.
pub fn jacobi_defect(x: &AlgElement, y: &AlgElement, z: &AlgElement) -> AlgElement {
    let a = bracket(x, &bracket(y, z));
    let b = bracket(y, &bracket(z, x));
    let c = bracket(z, &bracket(x, y));
    a.add(&b).add(&c)
}

/// All basis vectors whose index coordinates lie in `[-radius, radius]`,
/// plus `d`, `d1`, `d2`, in canonical order.
pub fn basis_window(radius: i64) -> Vec<BasisVector> {
    use BasisVector::*;
    let mut out = vec![D, D1, D2];
    for kind in [0u8, 1, 2, 3] {
        for m1 in -radius..=radius {
            for m2 in -radius..=radius {
                let deg = Degree(m1, m2);
                let b = match kind {
                    0 => E(deg),
                    1 => F(deg),
                    2 => G(deg),
                    _ => H(deg),
                };
                if !b.is_zero_symbol() {
                    out.push(b);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_to(n: i64) -> RatFunc {
        RatFunc::q_pow(n)
    }

    #[test]
    fn structure_constant_examples() {
        // [g(1,2), e(3,4)] = q^6 e(4,6)
        let got = bracket(&AlgElement::g(1, 2), &AlgElement::e(3, 4));
        assert_eq!(got, AlgElement::e(4, 6).scaled(&q_to(6)));

        // [e(1,0), f(-1,0)] = d
        let got = bracket(&AlgElement::e(1, 0), &AlgElement::f(-1, 0));
        assert_eq!(got, AlgElement::d());

        // [h(1,0), h(0,1)] = (1-q) h(1,1)
        let got = bracket(&AlgElement::h(1, 0), &AlgElement::h(0, 1));
        assert_eq!(got, AlgElement::h(1, 1).scaled(&(RatFunc::one() - q_to(1))));

        // [e(1,1), f(0,1)] = g(1,2) - q h(1,2)
        let got = bracket(&AlgElement::e(1, 1), &AlgElement::f(0, 1));
        let want = AlgElement::g(1, 2).sub(&AlgElement::h(1, 2).scaled(&q_to(1)));
        assert_eq!(got, want);

        // [d, e] = 2e and [d, f] = -2f regardless of the index.
        let got = bracket(&AlgElement::d(), &AlgElement::e(-2, 5));
        assert_eq!(got, AlgElement::e(-2, 5).scaled(&RatFunc::from_int(2)));
        let got = bracket(&AlgElement::d(), &AlgElement::f(0, 0));
        assert_eq!(got, AlgElement::f(0, 0).scaled(&RatFunc::from_int(-2)));

        // Degree derivations scale by the degree coordinates.
        let got = bracket(&AlgElement::d1(), &AlgElement::h(3, -4));
        assert_eq!(got, AlgElement::h(3, -4).scaled(&RatFunc::from_int(3)));
        let got = bracket(&AlgElement::d2(), &AlgElement::h(3, -4));
        assert_eq!(got, AlgElement::h(3, -4).scaled(&RatFunc::from_int(-4)));
        assert!(bracket(&AlgElement::d1(), &AlgElement::d2()).is_zero());
        assert!(bracket(&AlgElement::d(), &AlgElement::d1()).is_zero());
    }

    #[test]
    fn bracket_is_alternating() {
        let x = AlgElement::e(1, 0)
            .add(&AlgElement::f(0, 1).scaled(&q_to(2)))
            .add(&AlgElement::d());
        assert!(bracket(&x, &x).is_zero());
    }

    #[test]
    fn zero_symbols_collapse() {
        assert!(AlgElement::g(0, 0).is_zero());
        assert!(AlgElement::h(0, 0).is_zero());
        // [g(k), g(-k)] lands on g(0,0) with a vanishing coefficient.
        assert!(bracket(&AlgElement::g(1, 2), &AlgElement::g(-1, -2)).is_zero());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(BasisVector::E(Degree(2, -3)).degree(), Degree(2, -3));
        assert_eq!(BasisVector::D1.degree(), Degree::ZERO);
        assert_eq!(BasisVector::H(Degree(0, 1)).degree(), Degree(0, 1));
    }

    #[test]
    fn jacobi_defect_examples() {
        let cases: [(AlgElement, AlgElement, AlgElement); 3] = [
            (AlgElement::e(1, 0), AlgElement::f(0, 1), AlgElement::g(1, 1)),
            (AlgElement::d1(), AlgElement::d2(), AlgElement::e(5, 5)),
            (AlgElement::d(), AlgElement::e(1, 0), AlgElement::f(0, 0)),
        ];
        for (x, y, z) in cases {
            assert!(jacobi_defect(&x, &y, &z).is_zero(), "jacobi({x}, {y}, {z})");
        }
    }

    #[test]
    fn homogeneous_component_examples() {
        let x = AlgElement::e(1, 0)
            .add(&AlgElement::f(1, 0).scaled(&q_to(1)))
            .add(&AlgElement::d());
        let comps = x.homogeneous_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&Degree(0, 0)], AlgElement::d());
        assert_eq!(
            comps[&Degree(1, 0)],
            AlgElement::e(1, 0).add(&AlgElement::f(1, 0).scaled(&q_to(1)))
        );
        let total = comps.values().fold(AlgElement::zero(), |a, b| a.add(b));
        assert_eq!(total, x);

        assert!(AlgElement::zero().homogeneous_components().is_empty());
        let y = AlgElement::g(1, 2).sub(&AlgElement::h(1, 2));
        assert_eq!(y.homogeneous_components()[&Degree(1, 2)], y);
    }

    #[test]
    fn bilinearity_spot_checks() {
        let a = q_to(2).sub(&RatFunc::one());
        let x = AlgElement::e(1, 1);
        let y = AlgElement::h(0, 1);
        let z = AlgElement::f(0, 1).add(&AlgElement::d());
        let lhs = bracket(&x.scaled(&a).add(&y), &z);
        let rhs = bracket(&x, &z).scaled(&a).add(&bracket(&y, &z));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn window_antisymmetry_small() {
        let window = basis_window(1);
        for a in &window {
            for b in &window {
                let ab = bracket(&AlgElement::basis(*a), &AlgElement::basis(*b));
                let ba = bracket(&AlgElement::basis(*b), &AlgElement::basis(*a));
                assert!(ab.add(&ba).is_zero(), "[{a},{b}] + [{b},{a}] != 0");
            }
        }
    }

    #[test]
    fn degree_additivity_on_window() {
        let window = basis_window(2);
        for a in &window {
            for b in &window {
                let prod = bracket(&AlgElement::basis(*a), &AlgElement::basis(*b));
                let want = a.degree() + b.degree();
                for (t, _) in prod.terms() {
                    assert_eq!(t.degree(), want, "[{a},{b}] has a term off-degree");
                }
            }
        }
    }

    #[test]
    fn basis_window_counts() {
        // 3 distinguished + 4 kinds * 9 indices - 2 zero symbols at radius 1.
        assert_eq!(basis_window(1).len(), 3 + 4 * 9 - 2);
        assert_eq!(basis_window(2).len(), 3 + 4 * 25 - 2);
    }
}
