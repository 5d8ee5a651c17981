//! Polynomials over a prime field, with complete factorization by
//! distinct-degree plus equal-degree splitting.
//!
//! Equal-degree splitting walks a deterministic lexicographic sequence of
//! test polynomials, so factorizations are reproducible run-to-run.

use num_integer::Integer;
use num_traits::Zero;

use super::poly::Poly;
use super::primes::is_prime;
use super::ExactError;

/// Dense polynomial over F_p, residues in [0, p), trailing coefficient nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod_scalar(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2); p is prime and a ≠ 0 mod p.
    debug_assert!(!a.is_multiple_of(p));
    pow_mod_scalar(a, p - 2, p)
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self, ExactError> {
        if !is_prime(p) {
            return Err(ExactError::CompositeModulus(p));
        }
        Ok(Self::new_unchecked(p, coeffs))
    }

    fn new_unchecked(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    /// Reduction of a rational polynomial mod p; denominators must be invertible.
    pub fn from_poly(f: &Poly, p: u64) -> Result<Self, ExactError> {
        if !is_prime(p) {
            return Err(ExactError::CompositeModulus(p));
        }
        let pb = num_bigint::BigInt::from(p);
        let mut coeffs = Vec::with_capacity(f.coeffs().len());
        for c in f.coeffs() {
            let den = c.denom().mod_floor(&pb);
            if den.is_zero() {
                return Err(ExactError::DenominatorNotInvertible(p));
            }
            let num = c.numer().mod_floor(&pb);
            let num_u = u64::try_from(&num).expect("residue fits u64");
            let den_u = u64::try_from(&den).expect("residue fits u64");
            coeffs.push(mul_mod(num_u, inv_mod(den_u, p), p));
        }
        Ok(Self::new_unchecked(p, coeffs))
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new_unchecked(p, vec![c])
    }

    pub fn x(p: u64) -> Self {
        Self::new_unchecked(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixed moduli");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.coeff(i) + other.coeff(i)) % self.p);
        }
        Self::new_unchecked(self.p, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.p + self.coeff(i) - other.coeff(i)) % self.p);
        }
        Self::new_unchecked(self.p, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::new_unchecked(self.p, out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        Self::new_unchecked(
            self.p,
            self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        )
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        self.assert_same_field(div);
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.degree() < div.degree() || self.is_zero() {
            return (Self::zero(self.p), self.clone());
        }
        let p = self.p;
        let dlc_inv = inv_mod(div.leading(), p);
        let dd = div.degree();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.degree() - dd + 1];
        for k in (dd..rem.len()).rev() {
            if rem[k] == 0 {
                continue;
            }
            let q = mul_mod(rem[k], dlc_inv, p);
            for (i, &dc) in div.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = (rem[idx] + p - mul_mod(q, dc, p)) % p;
            }
            quot[k - dd] = q;
        }
        (Self::new_unchecked(p, quot), Self::new_unchecked(p, rem))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.div_rem(div).1
    }

    pub fn exact_div(&self, div: &Self) -> Self {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended gcd: returns (g, s, t) monic with s·self + t·other = g.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(p, 1), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::constant(p, 1));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.leading(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.p);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64) % self.p, self.p))
            .collect();
        Self::new_unchecked(self.p, out)
    }

    /// self^exp mod modulus (u64 exponent).
    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::constant(self.p, 1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            exp >>= 1;
        }
        acc
    }

    /// self^(p^d) mod modulus, by iterated p-th powers.
    fn frobenius_power(&self, d: usize, modulus: &Self) -> Self {
        let mut h = self.rem(modulus);
        for _ in 0..d {
            h = h.pow_mod(self.p, modulus);
        }
        h
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).is_constant()
    }

    /// p-th root of a polynomial in x^p (valid because c^p = c in F_p).
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let mut out = Vec::with_capacity(self.coeffs.len() / p + 1);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                out.push(c);
            } else {
                debug_assert_eq!(c, 0, "not a polynomial in x^p");
            }
        }
        Self::new_unchecked(self.p, out)
    }
}

impl std::fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModPoly[{} mod {}]",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.p
        )
    }
}

/// Deterministic lexicographic enumeration of the monic polynomials of a
/// fixed degree over F_p: constant coefficient varies fastest.
pub fn monic_polys_of_degree(p: u64, degree: usize) -> impl Iterator<Item = ModPoly> {
    let count = (p as u128).pow(degree as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = vec![0u64; degree + 1];
        for c in coeffs.iter_mut().take(degree) {
            *c = (idx % p as u128) as u64;
            idx /= p as u128;
        }
        coeffs[degree] = 1;
        ModPoly::new_unchecked(p, coeffs)
    })
}

/// Test-polynomial sequence for equal-degree splitting: all monic
/// polynomials of degree 1, then 2, and so on.
fn splitting_candidates(p: u64, max_degree: usize) -> impl Iterator<Item = ModPoly> {
    (1..=max_degree.max(1)).flat_map(move |d| monic_polys_of_degree(p, d))
}

/// Irreducibility over F_p by the power-of-Frobenius criterion:
/// x^(p^n) ≡ x mod f, and gcd(x^(p^(n/q)) − x, f) = 1 for each prime q | n.
pub fn is_irreducible_mod_p(f: &ModPoly) -> Result<bool, ExactError> {
    if !f.is_monic() {
        return Err(ExactError::NonMonic);
    }
    if f.is_constant() {
        return Err(ExactError::ConstantPolynomial);
    }
    let n = f.degree();
    if n == 1 {
        return Ok(true);
    }
    let x = ModPoly::x(f.p);
    let xpn = x.frobenius_power(n, f);
    if xpn != x.rem(f) {
        return Ok(false);
    }
    let mut m = n;
    let mut q = 2;
    let mut prime_divisors = vec![];
    while m > 1 {
        if m.is_multiple_of(q) {
            prime_divisors.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    for q in prime_divisors {
        let h = x.frobenius_power(n / q, f);
        let g = f.gcd(&h.sub(&x));
        if !g.is_constant() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Complete factorization of a polynomial mod p into monic irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationModP {
    pub modulus: u64,
    /// Scalar unit u with input ≡ u · ∏ factor^multiplicity (mod p).
    pub lead_unit: u64,
    pub factors: Vec<(ModPoly, u32)>,
}

impl FactorizationModP {
    /// Factor degrees as a sorted multiset (multiplicities expanded).
    pub fn pattern(&self) -> Vec<usize> {
        let mut out = vec![];
        for (g, m) in &self.factors {
            for _ in 0..*m {
                out.push(g.degree());
            }
        }
        out.sort_unstable();
        out
    }

    /// Re-multiplies the factorization; used by certificate verification.
    pub fn product(&self) -> ModPoly {
        let p = self.modulus;
        let mut acc = ModPoly::constant(p, self.lead_unit);
        for (g, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(g);
            }
        }
        acc
    }
}

/// Squarefree decomposition in characteristic p (handles vanishing derivative
/// via p-th roots).
fn squarefree_decomposition(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    debug_assert!(f.is_monic());
    let mut out = vec![];
    if f.is_constant() {
        return out;
    }
    let c0 = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c0);
    let mut c = c0;
    let mut i = 1u32;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.exact_div(&y);
        if !z.is_constant() {
            out.push((z, i));
        }
        c = c.exact_div(&y);
        w = y;
        i += 1;
    }
    if !c.is_constant() {
        for (g, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, m * f.p as u32));
        }
    }
    out
}

/// Distinct-degree factorization of a squarefree monic polynomial:
/// returns (product of degree-d irreducibles, d) pairs.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    debug_assert!(f.is_monic() && f.is_squarefree());
    let mut out = vec![];
    let mut f = f.clone();
    let x = ModPoly::x(f.p);
    let mut h = x.clone();
    let mut d = 0usize;
    while f.degree() > 0 {
        d += 1;
        if 2 * d > f.degree() {
            out.push((f.clone(), f.degree()));
            break;
        }
        h = h.pow_mod(f.p, &f);
        let g = f.gcd(&h.sub(&x));
        if !g.is_constant() {
            out.push((g.clone(), d));
            f = f.exact_div(&g);
            h = h.rem(&f);
        }
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a product of distinct
/// irreducibles of known degree d, over the deterministic candidate sequence.
fn equal_degree(f: &ModPoly, d: usize) -> Vec<ModPoly> {
    if f.degree() == d {
        return vec![f.clone()];
    }
    let p = f.p;
    for a in splitting_candidates(p, f.degree().saturating_sub(1)) {
        let shared = f.gcd(&a);
        let candidate = if !shared.is_constant() && shared.degree() < f.degree() {
            shared
        } else if p == 2 {
            // trace map: a + a^2 + a^4 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut term = a.rem(f);
            for _ in 1..d {
                term = term.mul(&term).rem(f);
                t = t.add(&term);
            }
            f.gcd(&t)
        } else {
            // a^((p^d - 1)/2) - 1
            let exp = (num_bigint::BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            let h = pow_mod_big(&a, &exp, f);
            f.gcd(&h.sub(&ModPoly::constant(p, 1)))
        };
        if !candidate.is_constant() && candidate.degree() < f.degree() {
            let rest = f.exact_div(&candidate);
            let mut out = equal_degree(&candidate, d);
            out.extend(equal_degree(&rest, d));
            return out;
        }
    }
    unreachable!("splitting candidate sequence exhausted");
}

fn pow_mod_big(base: &ModPoly, exp: &num_bigint::BigUint, modulus: &ModPoly) -> ModPoly {
    let mut acc = ModPoly::constant(base.p, 1);
    let mut b = base.rem(modulus);
    for i in 0..exp.bits() {
        if exp.bit(i) {
            acc = acc.mul(&b).rem(modulus);
        }
        b = b.mul(&b).rem(modulus);
    }
    acc
}

/// Complete factorization of f mod p into monic irreducibles with
/// multiplicities. The leading coefficient of f must be invertible mod p.
pub fn factor_mod_p(f: &Poly, p: u64) -> Result<FactorizationModP, ExactError> {
    if !is_prime(p) {
        return Err(ExactError::CompositeModulus(p));
    }
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let reduced = ModPoly::from_poly(f, p)?;
    if reduced.is_zero() || reduced.degree() != f.degree() {
        return Err(ExactError::LeadingCoefficientVanishesModP(p));
    }
    Ok(factor_modpoly(&reduced))
}

/// Factorization of an already-reduced polynomial.
pub fn factor_modpoly(f: &ModPoly) -> FactorizationModP {
    let lead_unit = f.leading();
    let monic = f.make_monic();
    let mut factors: Vec<(ModPoly, u32)> = vec![];
    for (part, mult) in squarefree_decomposition(&monic) {
        for (prod, d) in distinct_degree(&part) {
            for irr in equal_degree(&prod, d) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|a, b| (a.0.degree(), &a.0.coeffs, a.1).cmp(&(b.0.degree(), &b.0.coeffs, b.1)));
    FactorizationModP {
        modulus: f.p,
        lead_unit,
        factors,
    }
}
