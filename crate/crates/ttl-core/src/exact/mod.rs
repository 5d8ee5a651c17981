//! Exact arithmetic kernel: arbitrary-precision rationals, dense univariate
//! polynomial algebra, Sturm sequences, resultants, CRT lifts, and
//! factorization mod p and over the integers.
//!
//! All operations are pure functions of their inputs; values are immutable
//! after construction and safe to share between threads. Identical inputs
//! yield bit-identical outputs.

pub mod crt;
pub mod modp;
pub mod poly;
pub mod primes;
pub mod resultant;
pub mod sturm;
pub mod zassenhaus;

use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial must be monic")]
    NonMonic,
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("leading coefficient vanishes mod {0}")]
    LeadingCoefficientVanishesModP(u64),
    #[error("coefficient denominator not invertible mod {0}")]
    DenominatorNotInvertible(u64),
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("moduli are not pairwise coprime")]
    ModuliNotCoprime,
    #[error("polynomial has non-integer coefficients")]
    NonIntegerCoefficients,
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },
}

pub use crt::crt_lift;
pub use modp::{factor_mod_p, is_irreducible_mod_p, FactorizationModP, ModPoly};
pub use poly::{is_eisenstein, Poly, Rat};
pub use primes::{is_prime, Primes};
pub use resultant::{composed_sum, poly_exact_sqrt, resultant};
pub use sturm::{squarefree_part, sturm_real_root_count};
pub use zassenhaus::factor_over_z;

/// Default degree bound for integer factorization (Zassenhaus recombination).
pub const DEFAULT_FACTOR_DEGREE_BOUND: usize = 12;
