//! Exact-arithmetic toolkit for finite-dimensional Leibniz n-algebras given by
//! structure constants over the rationals.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactlin`]: rational matrices, subspaces, characteristic polynomials and
//!   single-operator Fitting decompositions.
//! * [`algebra`]: the structure tensor, multilinear bracket, the fundamental
//!   identity, antisymmetry conditions, right multiplications and derivations.
//! * [`structure`]: subalgebra and ideal closures, the symmetrizer ideals and
//!   quotients.
//! * [`nilpotency`]: slot and full descending series, restriction to a subalgebra.
//! * [`cartan`]: Fitting decomposition for a nilpotent subalgebra, normalizers,
//!   Cartan predicates, regular elements and the quotient theorems.
//! * [`catalog`]: the reference algebras used as fixtures.
//! * [`cli`]: the text file format and the `leibniz` command line.

pub mod algebra;
pub mod cartan;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactlin;
pub mod nilpotency;
pub mod structure;

pub use algebra::{Counterexample, ElementTuple, NAlgebra, Report};
pub use error::{Error, Result};
pub use exactlin::{Matrix, Polynomial, Scalar, Subspace, Vector};
