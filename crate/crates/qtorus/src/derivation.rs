//! Derivations of the algebra valued in its tensor square, restricted to a
//! finite window of basis vectors: inner derivations, homogeneous
//! decomposition, the Leibniz defect, and the reduction of nonzero-degree
//! homogeneous derivations to inner form via a degree-derivation probe.
//!
//! Windows bound only the enumeration of the domain; all arithmetic stays
//! exact and unbounded. An evaluation that needs an assignment outside the
//! window fails with [`DerivationError::OutOfWindow`] instead of silently
//! truncating.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{basis_window, AlgElement, BasisVector, Degree};
use crate::laurent::RatFunc;
use crate::tensor::{act2, Tensor2Element};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DerivationError {
    /// The table has no assignment for a basis vector the evaluation needs.
    #[error("basis vector {0} is outside the table window")]
    OutOfWindow(BasisVector),
    /// Degree `(0,0)` has no probe: the pairing with the span of `d1`, `d2`
    /// vanishes identically there.
    #[error("no probe exists for degree (0,0)")]
    ZeroDegree,
}

/// An element `rho = rho1 d1 + rho2 d2` of the span of the two degree
/// derivations, used to probe homogeneous derivations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    pub rho1: BigRational,
    pub rho2: BigRational,
}

impl Probe {
    /// The pairing `rho(m) = m1 rho1 + m2 rho2`.
    pub fn pairing(&self, m: Degree) -> BigRational {
        &self.rho1 * BigRational::from_integer(BigInt::from(m.0))
            + &self.rho2 * BigRational::from_integer(BigInt::from(m.1))
    }

    pub fn element(&self) -> AlgElement {
        AlgElement::d1()
            .scaled(&RatFunc::from_rational(self.rho1.clone()))
            .add(&AlgElement::d2().scaled(&RatFunc::from_rational(self.rho2.clone())))
    }
}

/// Deterministic probe for a nonzero degree: `d1` when the first coordinate
/// is nonzero, otherwise `d2`. Always pairs nontrivially with `k`.
pub fn pick_probe(k: Degree) -> Result<Probe, DerivationError> {
    if k.is_zero() {
        return Err(DerivationError::ZeroDegree);
    }
    if k.0 != 0 {
        Ok(Probe { rho1: BigRational::from_integer(1.into()), rho2: BigRational::zero() })
    } else {
        Ok(Probe { rho1: BigRational::zero(), rho2: BigRational::from_integer(1.into()) })
    }
}

/// A derivation restricted to the basis vectors of a window: a finite map
/// from basis vectors to tensors. Whether the data actually satisfies the
/// Leibniz rule is checked by [`DerivationTable::leibniz_defect`], never
/// assumed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DerivationTable {
    assignments: BTreeMap<BasisVector, Tensor2Element>,
    window: i64,
}

impl DerivationTable {
    pub fn new(window: i64) -> Self {
        Self { assignments: BTreeMap::new(), window }
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn assignments(&self) -> impl Iterator<Item = (&BasisVector, &Tensor2Element)> {
        self.assignments.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.assignments.values().all(Tensor2Element::is_zero)
    }

    pub fn assign(&mut self, b: BasisVector, image: Tensor2Element) {
        if !b.is_zero_symbol() {
            self.assignments.insert(b, image);
        }
    }

    /// Image of a basis vector; missing assignments are out-of-window.
    pub fn image_of(&self, b: &BasisVector) -> Result<&Tensor2Element, DerivationError> {
        self.assignments.get(b).ok_or(DerivationError::OutOfWindow(*b))
    }

    /// Linear extension to an arbitrary element of the window span.
    pub fn apply(&self, x: &AlgElement) -> Result<Tensor2Element, DerivationError> {
        let mut out = Tensor2Element::zero();
        for (b, c) in x.terms() {
            out = out.add(&self.image_of(b)?.scaled(c));
        }
        Ok(out)
    }

    /// `t([x,y]) - x . t(y) + y . t(x)`; zero for a genuine derivation.
    pub fn leibniz_defect(
        &self,
        x: &BasisVector,
        y: &BasisVector,
    ) -> Result<Tensor2Element, DerivationError> {
        let xe = AlgElement::basis(*x);
        let ye = AlgElement::basis(*y);
        let through_bracket = self.apply(&crate::algebra::bracket(&xe, &ye))?;
        let tx = self.apply(&xe)?;
        let ty = self.apply(&ye)?;
        Ok(through_bracket.sub(&act2(&xe, &ty)).add(&act2(&ye, &tx)))
    }

    /// Keep only the degree-`m` part: for a basis vector of degree `n`, the
    /// component of its image in total degree `n + m`. The components over
    /// all occurring `m` sum back to the table.
    pub fn homogeneous_component(&self, m: Degree) -> DerivationTable {
        let mut out = DerivationTable::new(self.window);
        for (b, image) in &self.assignments {
            out.assign(*b, image.component(b.degree() + m));
        }
        out
    }

    /// Every degree at which some assignment has a component.
    pub fn occurring_degrees(&self) -> Vec<Degree> {
        let mut degs = std::collections::BTreeSet::new();
        for (b, image) in &self.assignments {
            for ((p, q), _) in image.terms() {
                let total = p.degree() + q.degree();
                degs.insert(Degree(total.0 - b.degree().0, total.1 - b.degree().1));
            }
        }
        degs.into_iter().collect()
    }

    /// The degree of a homogeneous nonzero table, if consistent.
    pub fn homogeneous_degree(&self) -> Option<Degree> {
        match self.occurring_degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }
}

/// The inner derivation `x -> x . v`, tabulated over a window.
pub fn inner_derivation(v: &Tensor2Element, window: i64) -> DerivationTable {
    let mut out = DerivationTable::new(window);
    for b in basis_window(window) {
        out.assign(b, act2(&AlgElement::basis(b), v));
    }
    out
}

/// Recover `v` from a homogeneous derivation table of nonzero degree `k`:
/// `v = t(rho) / rho(k)` for the deterministic probe `rho`.
///
/// For an inner table this returns the generating tensor exactly; for
/// arbitrary tables the caller should compare `inner_derivation(v)` with
/// the table to measure agreement.
pub fn reduce_to_inner(
    t: &DerivationTable,
    k: Degree,
) -> Result<Tensor2Element, DerivationError> {
    let probe = pick_probe(k)?;
    let image = t.apply(&probe.element())?;
    let pairing = probe.pairing(k);
    debug_assert!(!pairing.is_zero());
    Ok(image.scaled(&RatFunc::from_rational(pairing.recip())))
}

/// Search the probes for an element whose action moves `v`.
///
/// Returns `None` both for `v = 0` (nothing to detect) and for a probe set
/// that fails to see a nonzero `v`; the full faithfulness statement
/// quantifies over the whole algebra, so a miss means the probe set must be
/// extended.
pub fn windowed_faithfulness(v: &Tensor2Element, probes: &[AlgElement]) -> Option<AlgElement> {
    if v.is_zero() {
        return None;
    }
    probes.iter().find(|x| !act2(x, v).is_zero()).cloned()
}

/// Leibniz defect over all pairs whose brackets stay inside the window;
/// pairs that exit the window are skipped, not truncated.
pub fn leibniz_violations(t: &DerivationTable, limit: usize) -> Vec<(BasisVector, BasisVector)> {
    let window = basis_window(t.window);
    let mut bad = Vec::new();
    'outer: for x in &window {
        for y in &window {
            match t.leibniz_defect(x, y) {
                Ok(defect) if !defect.is_zero() => {
                    bad.push((*x, *y));
                    if bad.len() >= limit {
                        break 'outer;
                    }
                }
                _ => {}
            }
        }
    }
    bad
}
