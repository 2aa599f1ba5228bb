//! Seeded random generators for property checks.
//!
//! Values are deliberately small: a handful of terms, exponents of a few
//! units, single-digit rational coefficients. That keeps the exact
//! arithmetic fast while still exercising every code path.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::algebra::{AlgElement, BasisVector, Degree};
use crate::laurent::{LaurentPoly, RatFunc};
use crate::tensor::{skew_part, Tensor2Element, Tensor3Element};

/// A small nonzero rational.
fn rational(rng: &mut impl Rng) -> BigRational {
    let numer = loop {
        let n = rng.gen_range(-9i64..=9);
        if n != 0 {
            break n;
        }
    };
    let denom = rng.gen_range(1i64..=4);
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A small rational function: a 1–3 term Laurent polynomial, occasionally
/// divided by a nonzero binomial.
pub fn ratfunc(rng: &mut impl Rng) -> RatFunc {
    let mut poly = LaurentPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let exp = rng.gen_range(-3i64..=3);
        poly = poly.add(&LaurentPoly::monomial(exp, rational(rng)));
    }
    let value = RatFunc::from_poly(poly);
    if rng.gen_bool(0.25) {
        let exp = rng.gen_range(1i64..=3);
        let den = RatFunc::q_pow(exp) - RatFunc::from_int(1);
        value.div(&den).expect("q^n - 1 is nonzero")
    } else {
        value
    }
}

pub fn nonzero_ratfunc(rng: &mut impl Rng) -> RatFunc {
    loop {
        let c = ratfunc(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn degree(rng: &mut impl Rng, radius: i64) -> Degree {
    Degree(rng.gen_range(-radius..=radius), rng.gen_range(-radius..=radius))
}

/// A random basis vector with index inside the window (never a zero symbol).
pub fn basis(rng: &mut impl Rng, radius: i64) -> BasisVector {
    loop {
        let b = match rng.gen_range(0..7) {
            0 => BasisVector::D,
            1 => BasisVector::D1,
            2 => BasisVector::D2,
            3 => BasisVector::E(degree(rng, radius)),
            4 => BasisVector::F(degree(rng, radius)),
            5 => BasisVector::G(degree(rng, radius)),
            _ => BasisVector::H(degree(rng, radius)),
        };
        if !b.is_zero_symbol() {
            return b;
        }
    }
}

pub fn element(rng: &mut impl Rng, radius: i64, max_terms: usize) -> AlgElement {
    let mut out = AlgElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.add_term(basis(rng, radius), ratfunc(rng));
    }
    out
}

pub fn tensor2(rng: &mut impl Rng, radius: i64, max_terms: usize) -> Tensor2Element {
    let mut out = Tensor2Element::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.add_term(basis(rng, radius), basis(rng, radius), ratfunc(rng));
    }
    out
}

pub fn nonzero_tensor2(rng: &mut impl Rng, radius: i64, max_terms: usize) -> Tensor2Element {
    loop {
        let t = tensor2(rng, radius, max_terms);
        if !t.is_zero() {
            return t;
        }
    }
}

pub fn tensor3(rng: &mut impl Rng, radius: i64, max_terms: usize) -> Tensor3Element {
    let mut out = Tensor3Element::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.add_term(basis(rng, radius), basis(rng, radius), basis(rng, radius), ratfunc(rng));
    }
    out
}

/// A random element of the image of `1 - twist`.
pub fn skew_tensor2(rng: &mut impl Rng, radius: i64, max_terms: usize) -> Tensor2Element {
    skew_part(&tensor2(rng, radius, max_terms))
}

pub fn nonzero_skew_tensor2(rng: &mut impl Rng, radius: i64, max_terms: usize) -> Tensor2Element {
    loop {
        let t = skew_tensor2(rng, radius, max_terms);
        if !t.is_zero() {
            return t;
        }
    }
}

/// A random homogeneous pair tensor of the given total degree, with both
/// slots inside the window.
fn homogeneous_pair(rng: &mut impl Rng, total: Degree, radius: i64) -> (BasisVector, BasisVector) {
    loop {
        let left = basis(rng, radius);
        let want = Degree(total.0 - left.degree().0, total.1 - left.degree().1);
        if want.0.abs() > radius || want.1.abs() > radius {
            continue;
        }
        let right = if want.is_zero() {
            match rng.gen_range(0..6) {
                0 => BasisVector::D,
                1 => BasisVector::D1,
                2 => BasisVector::D2,
                3 => BasisVector::E(want),
                _ => BasisVector::F(want),
            }
        } else {
            match rng.gen_range(0..4) {
                0 => BasisVector::E(want),
                1 => BasisVector::F(want),
                2 => BasisVector::G(want),
                _ => BasisVector::H(want),
            }
        };
        if !right.is_zero_symbol() {
            return (left, right);
        }
    }
}

/// A random homogeneous tensor of random total degree within the window.
pub fn homogeneous_tensor2(rng: &mut impl Rng, radius: i64, max_terms: usize) -> Tensor2Element {
    let total = degree(rng, radius);
    homogeneous_tensor2_of_degree(rng, total, radius, max_terms)
}

pub fn homogeneous_tensor2_of_degree(
    rng: &mut impl Rng,
    total: Degree,
    radius: i64,
    max_terms: usize,
) -> Tensor2Element {
    let mut out = Tensor2Element::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let (a, b) = homogeneous_pair(rng, total, radius);
        out.add_term(a, b, ratfunc(rng));
    }
    out
}

/// A random nonzero degree for the inner-reduction round trip.
pub fn nonzero_degree(rng: &mut impl Rng, radius: i64) -> Degree {
    loop {
        let d = degree(rng, radius);
        if !d.is_zero() {
            return d;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_are_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(5);
        let mut b = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            assert_eq!(element(&mut a, 2, 3), element(&mut b, 2, 3));
            assert_eq!(tensor3(&mut a, 2, 3), tensor3(&mut b, 2, 3));
        }
    }

    #[test]
    fn homogeneous_generator_is_homogeneous() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let total = degree(&mut rng, 2);
            let t = homogeneous_tensor2_of_degree(&mut rng, total, 2, 4);
            if !t.is_zero() {
                assert_eq!(t.homogeneous_degree(), Some(total));
            }
        }
    }

    #[test]
    fn skew_generator_is_skew() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert!(crate::tensor::is_skew(&skew_tensor2(&mut rng, 2, 4)));
        }
    }
}
