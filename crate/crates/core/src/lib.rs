//! Equivariant invariants of finite group actions on curves.
//!
//! A finite group `G` acting on a smooth projective curve `X` is described
//! by its character table (with power maps), the genus of the quotient
//! `Y = X/G` and the branch data of `X → Y`. From that the crate computes,
//! in exact cyclotomic arithmetic:
//!
//! * the decomposition of `H⁰(X, Ω_X)` into irreducibles ([`chevalley_weil`]),
//! * equivariant Euler characteristics of bundles described by degree, rank
//!   and local fiber data ([`euler`]),
//! * the kernel-bundle terms `H⁰(⋀ᵖM_Ω ⊗ Ω²)` and virtual Koszul differences
//!   of the canonical embedding ([`koszul`]),
//! * generating functions of the hook Schur functors of `H⁰(Ω_X)` ([`schur`]).
//!
//! Everything is generic over an exact rational scalar ([`Scalar`]); the
//! aliases below fix it to [`BigRational`].

pub mod chevalley_weil;
pub mod cover;
pub mod cyclotomic;
pub mod error;
pub mod euler;
pub mod input;
pub mod koszul;
pub mod reptheory;
pub mod scalar;
pub mod schur;
mod util;

#[cfg(test)]
mod fixtures;

pub use num_rational::{BigRational, Rational64};

pub use cover::{BranchPoint, CoverData, CoverReport, CoverViolation, LocalData};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use euler::BundleDescriptor;
pub use reptheory::{CharacterTable, ClassFunction, ConjugacyClass, TableViolation, VirtualRep};
pub use scalar::Scalar;
pub use schur::{CharPolynomial, GradedRepSeries};
pub use util::binomial;

/// Exact element of a cyclotomic field with arbitrary-precision coefficients.
pub type CycNum = Cyclotomic<BigRational>;
pub type Table = CharacterTable<BigRational>;
pub type ClassFn = ClassFunction<BigRational>;
pub type Cover = CoverData<BigRational>;
pub type CharPoly = CharPolynomial<BigRational>;
