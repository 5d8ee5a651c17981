//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored ascending by degree with no trailing zeros; the
//! zero polynomial is the empty coefficient vector. Rationals are kept in
//! lowest terms with positive denominators (num-rational's canonical form),
//! so equality and hashing are structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ExactError;

/// Exact rational scalar.
pub type Rat = num_rational::BigRational;

/// Dense univariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

pub(crate) fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub(crate) fn rat_big(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// c·x^k
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Convenience constructor from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Poly::new(coeffs.iter().cloned().map(rat_big).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True when every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn make_monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    /// Euclidean division: self = q·div + r with deg r < deg div.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.degree() < div.degree() || self.is_zero() {
            return (Poly::zero(), self.clone());
        }
        let dlc = div.leading();
        let dd = div.degree();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.degree() - dd + 1];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &dlc;
            for (i, dc) in div.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = &rem[idx] - &(&q * dc);
            }
            quot[k - dd] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, div: &Poly) -> Poly {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic gcd via the Euclidean algorithm over the rationals.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic()
        }
    }

    /// True iff gcd(f, f') is constant; the zero polynomial is not squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == 0 {
            return true;
        }
        self.gcd(&self.derivative()).degree() == 0
    }

    /// For monic f, the monic polynomial whose roots are t·(roots of f).
    ///
    /// Coefficient a_i goes to a_i · t^(n−i); this is t^n·f(x/t).
    pub fn root_scale(&self, t: &Rat) -> Poly {
        assert!(self.is_monic(), "root_scale requires a monic polynomial");
        assert!(!t.is_zero());
        let n = self.degree();
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut power = Rat::one();
        let mut scaled: Vec<Rat> = Vec::with_capacity(n + 1);
        for i in (0..=n).rev() {
            scaled.push(&self.coeffs[i] * &power);
            power *= t;
        }
        scaled.reverse();
        coeffs.extend(scaled);
        Poly::new(coeffs)
    }

    /// f(a·x + b), expanded exactly.
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> Poly {
        let mut acc = Poly::zero();
        let lin = Poly::new(vec![b.clone(), a.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Smallest positive integer D with D·f ∈ Z[x], plus the scaled coefficients.
    pub fn to_integer_scaled(&self) -> (Vec<BigInt>, BigInt) {
        let mut d = BigInt::one();
        for c in &self.coeffs {
            d = d.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * rat_big(d.clone());
                debug_assert!(scaled.denom().is_one());
                scaled.to_integer()
            })
            .collect();
        (ints, d)
    }

    /// Canonical textual form: ascending coefficients separated by commas.
    pub fn coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(rat_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Canonical rendering of a rational: "p" when integral, else "p/q".
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.coeff_string())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag_one = mag.is_one();
            match i {
                0 => write!(f, "{}", rat_string(&mag))?,
                1 => {
                    if mag_one {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{}x", rat_string(&mag))?;
                    }
                }
                _ => {
                    if mag_one {
                        write!(f, "x^{i}")?;
                    } else {
                        write!(f, "{}x^{i}", rat_string(&mag))?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

/// Eisenstein criterion at p: every non-leading coefficient divisible by p
/// and the constant term not divisible by p².
pub fn is_eisenstein(f: &Poly, p: u64) -> Result<bool, ExactError> {
    if !f.is_monic() {
        return Err(ExactError::NonMonic);
    }
    if !f.is_integer() {
        return Err(ExactError::NonIntegerCoefficients);
    }
    if !super::primes::is_prime(p) {
        return Err(ExactError::CompositeModulus(p));
    }
    let n = f.degree();
    if n == 0 {
        return Ok(false);
    }
    let p_big = BigInt::from(p);
    let p2 = &p_big * &p_big;
    for i in 0..n {
        if !(f.coeff(i).to_integer() % &p_big).is_zero() {
            return Ok(false);
        }
    }
    Ok(!(f.coeff(0).to_integer() % p2).is_zero())
}
