//! Exact symbolic computation in the extended affine Lie algebra built from
//! 2x2 trace-split matrices over a quantum torus, together with two degree
//! derivations.
//!
//! Everything is computed over the fraction field of `Z[q^{±1}]` with `q` a
//! formal parameter, so every check below is an exact polynomial identity:
//!
//! * [`algebra`] — the graded basis, the structure constants, and element
//!   arithmetic;
//! * [`torus`] — an independent realization by matrices over the quantum
//!   torus (`yx = qxy`), used as a brute-force oracle for the bracket;
//! * [`tensor`] — tensor square and cube as modules under the diagonal
//!   adjoint action, with twist/cyclic maps and skew projections;
//! * [`bialgebra`] — coboundary cobrackets, the classical Yang-Baxter
//!   element and its checkers;
//! * [`derivation`] — window-restricted derivations valued in the tensor
//!   square, inner derivations and the reduction of nonzero-degree
//!   components to inner form;
//! * [`identities`] — the runnable identity suites behind the degree-zero
//!   reduction arguments;
//! * [`json`] — the wire formats for elements, tensors and derivation
//!   tables;
//! * [`verify`] — orchestration used by the CLI and the acceptance tests.

pub mod algebra;
pub mod bialgebra;
pub mod derivation;
pub mod identities;
pub mod json;
pub mod laurent;
pub mod sample;
pub mod tensor;
pub mod torus;
pub mod verify;

pub use algebra::{bracket, jacobi_defect, AlgElement, BasisVector, Degree};
pub use bialgebra::RMatrix;
pub use derivation::{DerivationTable, Probe};
pub use laurent::{LaurentPoly, RatFunc};
pub use tensor::{Tensor2Element, Tensor3Element};
pub use torus::TorusElement;
