//! Operator-Schmidt decompositions of operators on `C^{n1} ⊗ C^{n2}`.
//!
//! Two independent routes are provided and meant to check one another:
//!
//! * a generic numerical route ([`schmidt`]): realign the operator into an
//!   `n1² × n2²` matrix and take its singular value decomposition, or
//!   equivalently diagonalise the reduced density superoperator;
//! * a closed form for the quantum Fourier transform `F_{N1×N2}` ([`qft`]),
//!   built from the partition of `Z_{N2}²` into translation classes modulo
//!   `N1·Z²`.
//!
//! [`strength`] derives Hartley and Schmidt strengths and communication
//! bounds from a decomposition.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
mod math;

pub mod linalg;
pub mod qft;
pub mod schmidt;
pub mod strength;
pub mod svd;

pub use error::{Error, Result};
pub use linalg::{BipartiteDims, ComplexMatrix};
pub use num_complex::Complex64;
pub use qft::{EquivalenceClass, SpectrumCase, SpectrumEntry, SpectrumTable};
pub use schmidt::{OperatorSplit, SchmidtDecomposition, SchmidtTerm};
pub use strength::{QuditSchedule, StrengthReport};
pub use svd::SingularTriple;
