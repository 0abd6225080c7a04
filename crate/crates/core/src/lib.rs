//! Exact arithmetic and checks for anyonic Lie algebras.
//!
//! An anyonic Lie algebra is a graded vector space with a coalgebra structure
//! `(Δ, ε)` and a bracket, where moving one homogeneous element past another
//! picks up a phase `β(|x|, |y|)` from a bicharacter on the grading group.
//! This crate provides:
//!
//! - [`cyclotomic`]: exact numbers in `Q(ζ_m)`.
//! - [`graded`]: grading groups and bicharacters.
//! - [`algebra`] and [`lie_axioms`]: structure constants and the axiom checks.
//! - [`envelope`]: the enveloping algebra, normal forms and `Δ` on products.
//! - [`constructions`]: the matrix family and the central-extension ansatz.
//! - [`anyspace`]: the braided line `C[θ]/θ^n` and its Hopf structure.
//!
//! The crate is `no_std` with `alloc`; the `std` feature (on by default) adds
//! a process-wide cache of cyclotomic field tables.

#![cfg_attr(not(feature = "std"), no_std)]

#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod algebra;
pub mod anyspace;
pub mod constructions;
pub mod cyclotomic;
pub mod envelope;
pub mod graded;
pub mod lie_axioms;

pub use algebra::{AlgebraSpec, BasisElement, Element, SpecError};
pub use cyclotomic::{q_binomial, q_integer, CycError, CycNum, Rational};
pub use envelope::{Poly, QuadRelation, RewriteSystem};
pub use graded::{Bicharacter, Degree, GradingError, GradingGroup};
pub use lie_axioms::{verify_all, Axiom, AxiomReport};
