//! Exact-arithmetic kernels for classifying 2-simple complex tori.
//!
//! The crate is organized around the pipeline
//!
//! * [`exact`] — rationals, dense univariate polynomials, Sturm sequences,
//!   resultants, CRT lifts, and factorization mod p and over the integers;
//! * [`permgrp`] — brute-force permutation-action oracle (closure, orbits on
//!   points / unordered 2-subsets / ordered pairs);
//! * [`galois`] — certified irreducibility and transitivity decision
//!   procedures via resolvents and Dedekind cycle-type witnesses;
//! * [`torus`] — field analysis, torus classification, Hodge multiplicity
//!   enumeration, H² orbit decomposition, and certified field synthesis;
//! * [`lie`] — minuscule dimension tables, the type-A Weyl dimension formula,
//!   the exterior-square plethysm scan, and subset-sum spectrum checks.
//!
//! Everything is exact: no floating point anywhere. All values are immutable
//! after construction and identical inputs produce bit-identical outputs.

pub mod exact;
pub mod galois;
pub mod lie;
pub mod permgrp;
pub mod torus;

pub use exact::poly::{Poly, Rat};
