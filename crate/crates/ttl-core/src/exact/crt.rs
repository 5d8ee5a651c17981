//! Chinese-remainder lifting to the integer nearest a rational target.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{rat_big, Rat};
use super::ExactError;

/// Combines the congruences and returns the unique solution nearest to
/// `target`, ties resolved toward −∞. With no congruences this is plain
/// nearest-integer rounding.
pub fn crt_lift(residues: &[(BigInt, BigInt)], target: &Rat) -> Result<BigInt, ExactError> {
    let mut c = BigInt::zero();
    let mut m = BigInt::one();
    for (r, modulus) in residues {
        if modulus.abs() <= BigInt::one() {
            return Err(ExactError::ModuliNotCoprime);
        }
        let g = m.gcd(modulus);
        if !g.is_one() {
            return Err(ExactError::ModuliNotCoprime);
        }
        // solve x ≡ c (mod m), x ≡ r (mod modulus)
        let e = modulus.extended_gcd(&m);
        debug_assert!(e.gcd.is_one());
        // e.x·modulus + e.y·m = 1, so (r·e.y·m + c·e.x·modulus) is the combine
        let combined = (r * &e.y * &m + &c * &e.x * modulus).mod_floor(&(&m * modulus));
        m *= modulus;
        c = combined;
    }
    // nearest integer in the class c mod m: k = ceil((target − c)/m − 1/2)
    let q = (target - rat_big(c.clone())) / rat_big(m.clone());
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let k = (q - half).ceil().to_integer();
    Ok(c + k * m)
}
