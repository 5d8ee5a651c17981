//! Certified decision procedures for the Galois action on embeddings:
//! irreducibility over Q, almost double transitivity, and double
//! transitivity, via resolvents, Dedekind cycle-type witnesses, and the
//! parity shortcut.
//!
//! Every verdict carries a certificate that can be re-checked with exact
//! primitives alone; `verify_irreducibility_certificate` is that re-check.

use thiserror::Error;

use crate::exact::poly::{rat_int, Poly};
use crate::exact::{
    composed_sum, factor_mod_p, factor_over_z, is_eisenstein, is_irreducible_mod_p, modp::ModPoly,
    poly_exact_sqrt, resultant, sturm_real_root_count, ExactError, Primes,
    DEFAULT_FACTOR_DEGREE_BOUND,
};

/// Default degree bound for transitivity reports (resolvent degree ≤ 56).
pub const DEFAULT_DEGREE_BOUND: usize = 8;
/// Default number of primes scanned for Dedekind patterns.
pub const DEFAULT_PRIME_BUDGET: usize = 25;
/// Tschirnhaus retry schedule for resolvent collisions.
pub const TSCHIRNHAUS_SCHEDULE: [i64; 5] = [1, 2, 3, -1, -2];
/// Parameter schedule for the ordered-pair resolvent.
pub const ORDERED_PAIR_T_SCHEDULE: [i64; 4] = [2, 3, 4, 5];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("resolvent collision unresolved after all Tschirnhaus retries")]
    ResolventCollisionUnresolved,
    #[error("degenerate Tschirnhaus transform for every c in the schedule")]
    DegenerateTransform,
    #[error("parameter t={0} for the ordered-pair resolvent must avoid -1, 0, 1")]
    BadParameter(i64),
    #[error("degree {degree} out of supported range {min}..={max}")]
    DegreeOutOfRange {
        degree: usize,
        min: usize,
        max: usize,
    },
}

/// Machine-checkable evidence that a polynomial is irreducible over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// All non-leading coefficients divisible by p, constant term not by p².
    Eisenstein { p: u64 },
    /// The reduction mod p is irreducible over F_p.
    IrreducibleModP { p: u64 },
    /// Factor-degree patterns whose subset sums jointly exclude every proper
    /// factor degree.
    DegreePatternSieve { patterns: Vec<(u64, Vec<usize>)> },
    /// Complete integer factorization returned a single factor.
    ZassenhausExhaustive,
}

/// Outcome of `certify_irreducible`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityOutcome {
    Irreducible(IrreducibilityCertificate),
    Reducible(Vec<Poly>),
}

fn check_monic_integer_squarefree(f: &Poly) -> Result<(), GaloisError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial.into());
    }
    if !f.is_monic() {
        return Err(ExactError::NonMonic.into());
    }
    if !f.is_integer() {
        return Err(ExactError::NonIntegerCoefficients.into());
    }
    if !f.is_squarefree() {
        return Err(ExactError::NotSquarefree.into());
    }
    Ok(())
}

/// Prime divisors of |n| found by trial division up to the bound; a large
/// rough cofactor is simply not searched (Eisenstein is only the first
/// attempt in the certificate chain).
fn small_prime_divisors(n: &num_bigint::BigInt, bound: u64) -> Vec<u64> {
    use num_integer::Integer;
    use num_traits::{Signed, Zero};
    let mut m = n.abs();
    let mut out = vec![];
    for p in Primes::new() {
        if p > bound {
            break;
        }
        let pb = num_bigint::BigInt::from(p);
        if m.is_multiple_of(&pb) {
            out.push(p);
            while m.is_multiple_of(&pb) {
                m /= &pb;
            }
        }
        if m.is_zero() || m == num_bigint::BigInt::from(1) {
            break;
        }
    }
    out
}

/// All degrees expressible as subset sums of the pattern.
pub fn pattern_subset_sums(pattern: &[usize]) -> Vec<usize> {
    let total: usize = pattern.iter().sum();
    let mut reachable = vec![false; total + 1];
    reachable[0] = true;
    for &d in pattern {
        for s in (0..=total - d).rev() {
            if reachable[s] {
                reachable[s + d] = true;
            }
        }
    }
    (0..=total).filter(|&s| reachable[s]).collect()
}

/// Scans primes in order, skipping those where f mod p is not squarefree,
/// and records the factor-degree multiset at the first `budget` good primes.
/// Each pattern is the cycle type of a Frobenius element (Dedekind).
pub fn dedekind_patterns(
    f: &Poly,
    prime_budget: usize,
) -> Result<Vec<(u64, Vec<usize>)>, GaloisError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial.into());
    }
    if !f.is_monic() {
        return Err(ExactError::NonMonic.into());
    }
    if !f.is_integer() {
        return Err(ExactError::NonIntegerCoefficients.into());
    }
    let mut out = vec![];
    // a squarefree f has nonzero discriminant, so bad primes are finite;
    // the hard cap only guards pathological callers
    for p in Primes::new().take(prime_budget.saturating_mul(40).max(200)) {
        if out.len() >= prime_budget {
            break;
        }
        let fp = match ModPoly::from_poly(f, p) {
            Ok(fp) => fp,
            Err(_) => continue,
        };
        if fp.degree() != f.degree() || !fp.is_squarefree() {
            continue;
        }
        let fac = factor_mod_p(f, p)?;
        out.push((p, fac.pattern()));
    }
    Ok(out)
}

/// Tries, in order: Eisenstein on primes dividing the constant term, mod-p
/// irreducibility over the prime scan, the degree-pattern sieve, and finally
/// complete Zassenhaus factorization.
pub fn certify_irreducible(f: &Poly) -> Result<IrreducibilityOutcome, GaloisError> {
    certify_irreducible_with(f, DEFAULT_PRIME_BUDGET, DEFAULT_FACTOR_DEGREE_BOUND)
}

pub fn certify_irreducible_with(
    f: &Poly,
    prime_budget: usize,
    factor_degree_bound: usize,
) -> Result<IrreducibilityOutcome, GaloisError> {
    check_monic_integer_squarefree(f)?;
    let n = f.degree();
    if n == 0 {
        return Err(ExactError::ConstantPolynomial.into());
    }
    if n == 1 {
        // linear polynomials are irreducible; any good prime certifies
        return Ok(IrreducibilityOutcome::Irreducible(
            IrreducibilityCertificate::IrreducibleModP { p: 2 },
        ));
    }

    // 1. Eisenstein over small primes dividing the constant term
    //    (a zero constant term means x | f and the fallback will factor it)
    let constant = f.coeff(0).to_integer();
    use num_traits::Zero;
    if !constant.is_zero() {
        for p in small_prime_divisors(&constant, 10_000) {
            if is_eisenstein(f, p)? {
                return Ok(IrreducibilityOutcome::Irreducible(
                    IrreducibilityCertificate::Eisenstein { p },
                ));
            }
        }
    }

    // 2. mod-p irreducibility at primes of squarefree reduction,
    //    collecting patterns for the sieve as we go
    let patterns = dedekind_patterns(f, prime_budget)?;
    for (p, pattern) in &patterns {
        if pattern.len() == 1 {
            debug_assert!(is_irreducible_mod_p(&ModPoly::from_poly(f, *p)?)?);
            return Ok(IrreducibilityOutcome::Irreducible(
                IrreducibilityCertificate::IrreducibleModP { p: *p },
            ));
        }
    }

    // 3. degree-pattern sieve: a proper rational factor degree must be a
    //    subset sum of the pattern at every good prime
    if !patterns.is_empty() {
        let mut possible: Vec<usize> = (1..n).collect();
        for (_, pattern) in &patterns {
            let sums = pattern_subset_sums(pattern);
            possible.retain(|d| sums.contains(d));
            if possible.is_empty() {
                return Ok(IrreducibilityOutcome::Irreducible(
                    IrreducibilityCertificate::DegreePatternSieve { patterns },
                ));
            }
        }
    }

    // 4. complete fallback
    let factors = factor_over_z(f, factor_degree_bound)?;
    if factors.len() == 1 {
        Ok(IrreducibilityOutcome::Irreducible(
            IrreducibilityCertificate::ZassenhausExhaustive,
        ))
    } else {
        Ok(IrreducibilityOutcome::Reducible(factors))
    }
}

/// Re-checks a certificate using exact primitives only.
pub fn verify_irreducibility_certificate(
    f: &Poly,
    cert: &IrreducibilityCertificate,
) -> Result<bool, GaloisError> {
    check_monic_integer_squarefree(f)?;
    match cert {
        IrreducibilityCertificate::Eisenstein { p } => Ok(is_eisenstein(f, *p)?),
        IrreducibilityCertificate::IrreducibleModP { p } => {
            if f.degree() == 1 {
                return Ok(true);
            }
            let fp = ModPoly::from_poly(f, *p)?;
            if fp.degree() != f.degree() {
                return Ok(false);
            }
            Ok(is_irreducible_mod_p(&fp)?)
        }
        IrreducibilityCertificate::DegreePatternSieve { patterns } => {
            if patterns.is_empty() {
                return Ok(false);
            }
            let mut possible: Vec<usize> = (1..f.degree()).collect();
            for (p, claimed) in patterns {
                let fac = factor_mod_p(f, *p)?;
                if &fac.pattern() != claimed {
                    return Ok(false);
                }
                let sums = pattern_subset_sums(claimed);
                possible.retain(|d| sums.contains(d));
            }
            Ok(possible.is_empty())
        }
        IrreducibilityCertificate::ZassenhausExhaustive => {
            Ok(factor_over_z(f, f.degree())?.len() == 1)
        }
    }
}

/// Monic polynomial whose roots are α_i + α_j over unordered pairs i < j:
/// composed_sum(f, f) divided by the diagonal factor 2^n·f(x/2), then the
/// exact square root. Collisions (repeated pair sums) are reported.
pub fn pair_sum_resolvent(f: &Poly) -> Result<Poly, GaloisError> {
    if !f.is_monic() {
        return Err(ExactError::NonMonic.into());
    }
    if f.degree() < 2 {
        return Err(GaloisError::DegreeOutOfRange {
            degree: f.degree(),
            min: 2,
            max: usize::MAX,
        });
    }
    if !f.is_squarefree() {
        return Err(ExactError::NotSquarefree.into());
    }
    let cs = composed_sum(f, f)?;
    let diagonal = f.root_scale(&rat_int(2));
    let off_diagonal = cs.exact_div(&diagonal);
    let res = poly_exact_sqrt(&off_diagonal)
        .expect("off-diagonal composed sum is a perfect square by symmetry");
    debug_assert_eq!(res.degree(), f.degree() * (f.degree() - 1) / 2);
    if !res.is_squarefree() {
        return Err(GaloisError::ResolventCollisionUnresolved);
    }
    Ok(res)
}

/// Monic polynomial of degree n(n−1) whose roots are α_i + t·α_j over
/// ordered pairs i ≠ j.
pub fn ordered_pair_resolvent(f: &Poly, t: i64) -> Result<Poly, GaloisError> {
    if t == -1 || t == 0 || t == 1 {
        return Err(GaloisError::BadParameter(t));
    }
    if !f.is_monic() {
        return Err(ExactError::NonMonic.into());
    }
    if f.degree() < 2 {
        return Err(GaloisError::DegreeOutOfRange {
            degree: f.degree(),
            min: 2,
            max: usize::MAX,
        });
    }
    if !f.is_squarefree() {
        return Err(ExactError::NotSquarefree.into());
    }
    let scaled = f.root_scale(&rat_int(t));
    let cs = composed_sum(f, &scaled)?;
    let diagonal = f.root_scale(&rat_int(1 + t));
    let res = cs.exact_div(&diagonal);
    debug_assert_eq!(res.degree(), f.degree() * (f.degree() - 1));
    if !res.is_squarefree() {
        return Err(GaloisError::ResolventCollisionUnresolved);
    }
    Ok(res)
}

/// Minimal-polynomial transform with roots α² + c·α, via
/// Res_y(f(y), x − (y² + c·y)) evaluated by interpolation.
pub fn tschirnhaus(f: &Poly, c: i64) -> Result<Poly, GaloisError> {
    if !f.is_monic() {
        return Err(ExactError::NonMonic.into());
    }
    let n = f.degree();
    let mut xs = Vec::with_capacity(n + 1);
    let mut vs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let x0 = rat_int(k as i64);
        // x0 − y² − c·y as a polynomial in y
        let g = Poly::new(vec![x0.clone(), rat_int(-c), rat_int(-1)]);
        vs.push(resultant(f, &g)?);
        xs.push(x0);
    }
    let out = interpolate_points(&xs, &vs);
    debug_assert_eq!(out.degree(), n);
    debug_assert!(out.is_monic());
    Ok(out)
}

fn interpolate_points(xs: &[crate::exact::Rat], vs: &[crate::exact::Rat]) -> Poly {
    use num_traits::One;
    let n = xs.len();
    let mut table = vs.to_vec();
    let mut newton = Vec::with_capacity(n);
    newton.push(table[0].clone());
    for k in 1..n {
        for i in 0..n - k {
            table[i] = (&table[i + 1] - &table[i]) / (&xs[i + k] - &xs[i]);
        }
        newton.push(table[0].clone());
    }
    let mut acc = Poly::constant(newton[n - 1].clone());
    for k in (0..n - 1).rev() {
        let lin = Poly::new(vec![-xs[k].clone(), crate::exact::Rat::one()]);
        acc = &(&acc * &lin) + &Poly::constant(newton[k].clone());
    }
    acc
}

/// Pair-sum resolvent with the Tschirnhaus collision-escape schedule.
/// Returns the resolvent together with the transform parameter used (None
/// when the original polynomial already worked).
pub fn pair_sum_resolvent_with_retries(f: &Poly) -> Result<(Poly, Option<i64>), GaloisError> {
    match pair_sum_resolvent(f) {
        Ok(r) => return Ok((r, None)),
        Err(GaloisError::ResolventCollisionUnresolved) => {}
        Err(e) => return Err(e),
    }
    for c in TSCHIRNHAUS_SCHEDULE {
        let transformed = tschirnhaus(f, c)?;
        if transformed.degree() != f.degree() || !transformed.is_squarefree() {
            continue;
        }
        match pair_sum_resolvent(&transformed) {
            Ok(r) => return Ok((r, Some(c))),
            Err(GaloisError::ResolventCollisionUnresolved) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(GaloisError::ResolventCollisionUnresolved)
}

/// Verdict plus certificate for one level of the transitivity hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransitiveEvidence {
    Irreducible(IrreducibilityCertificate),
    Reducible(Vec<Poly>),
}

/// Evidence for the almost-doubly-transitive verdict: the 2-subset resolvent
/// and either its irreducibility certificate or its factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostDoublyEvidence {
    /// Tschirnhaus parameter applied before the resolvent, if any.
    pub tschirnhaus_c: Option<i64>,
    pub resolvent: Poly,
    pub outcome: IrreducibilityOutcome,
}

/// Evidence for the doubly-transitive verdict, in rule order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DoublyEvidence {
    /// Ruled out by monotonicity: not almost doubly transitive.
    NotAlmostDoubly,
    /// Dedekind pattern {1, n−1}: an (n−1)-cycle fixing a point, which
    /// together with transitivity forces double transitivity.
    CycleWitness { p: u64, pattern: Vec<usize> },
    /// s ≥ 1 means complex conjugation is an involution, the group order is
    /// even, and an almost doubly transitive action of even order is doubly
    /// transitive.
    ParityShortcut,
    /// Decided by the ordered-pair resolvent at parameter t.
    OrderedPairResolvent {
        t: i64,
        resolvent: Poly,
        outcome: IrreducibilityOutcome,
    },
}

/// Certified verdicts for the transitivity hierarchy of Gal(f) acting on the
/// roots of f. Verdicts are monotone: doubly ⇒ almost_doubly ⇒ transitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityReport {
    pub transitive: bool,
    pub transitive_evidence: TransitiveEvidence,
    pub almost_doubly: bool,
    pub almost_doubly_evidence: Option<AlmostDoublyEvidence>,
    pub doubly: bool,
    pub doubly_evidence: DoublyEvidence,
    pub real_roots: usize,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy)]
pub struct ReportConfig {
    pub max_degree: usize,
    pub prime_budget: usize,
    pub factor_degree_bound: usize,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            max_degree: DEFAULT_DEGREE_BOUND,
            prime_budget: DEFAULT_PRIME_BUDGET,
            factor_degree_bound: 60,
        }
    }
}

/// Assembles the full hierarchy for monic squarefree f of degree 3..=bound.
pub fn transitivity_report(f: &Poly) -> Result<TransitivityReport, GaloisError> {
    transitivity_report_with(f, &ReportConfig::default())
}

pub fn transitivity_report_with(
    f: &Poly,
    config: &ReportConfig,
) -> Result<TransitivityReport, GaloisError> {
    check_monic_integer_squarefree(f)?;
    let n = f.degree();
    if n < 3 || n > config.max_degree {
        return Err(GaloisError::DegreeOutOfRange {
            degree: n,
            min: 3,
            max: config.max_degree,
        });
    }
    let mut notes = vec![];
    let real_roots = sturm_real_root_count(f)?;

    // transitivity ⇔ irreducibility
    let outcome = certify_irreducible_with(f, config.prime_budget, config.factor_degree_bound)?;
    let (transitive, transitive_evidence) = match outcome {
        IrreducibilityOutcome::Irreducible(cert) => (true, TransitiveEvidence::Irreducible(cert)),
        IrreducibilityOutcome::Reducible(factors) => {
            notes.push("polynomial is reducible; the action on roots is not transitive".into());
            (false, TransitiveEvidence::Reducible(factors))
        }
    };

    if !transitive {
        return Ok(TransitivityReport {
            transitive,
            transitive_evidence,
            almost_doubly: false,
            almost_doubly_evidence: None,
            doubly: false,
            doubly_evidence: DoublyEvidence::NotAlmostDoubly,
            real_roots,
            notes,
        });
    }

    // almost double transitivity ⇔ the 2-subset resolvent is irreducible
    let (resolvent, tschirnhaus_c) = pair_sum_resolvent_with_retries(f)?;
    if let Some(c) = tschirnhaus_c {
        notes.push(format!(
            "pair sums collided; used the Tschirnhaus transform with c = {c}"
        ));
    }
    let resolvent_outcome =
        certify_irreducible_with(&resolvent, config.prime_budget, config.factor_degree_bound)?;
    let almost_doubly = matches!(resolvent_outcome, IrreducibilityOutcome::Irreducible(_));
    let almost_doubly_evidence = Some(AlmostDoublyEvidence {
        tschirnhaus_c,
        resolvent,
        outcome: resolvent_outcome,
    });

    // double transitivity, decided by the first applicable rule
    let (doubly, doubly_evidence) = if !almost_doubly {
        (false, DoublyEvidence::NotAlmostDoubly)
    } else if let Some((p, pattern)) = dedekind_patterns(f, config.prime_budget)?
        .into_iter()
        .find(|(_, pattern)| pattern.len() == 2 && pattern[0] == 1 && pattern[1] == n - 1)
    {
        (true, DoublyEvidence::CycleWitness { p, pattern })
    } else if real_roots < n {
        // s ≥ 1: complex conjugation is a nontrivial involution
        (true, DoublyEvidence::ParityShortcut)
    } else {
        let mut decided = None;
        for t in ORDERED_PAIR_T_SCHEDULE {
            match ordered_pair_resolvent(f, t) {
                Ok(res) => {
                    let outcome = certify_irreducible_with(
                        &res,
                        config.prime_budget,
                        config.factor_degree_bound,
                    )?;
                    let verdict = matches!(outcome, IrreducibilityOutcome::Irreducible(_));
                    decided = Some((
                        verdict,
                        DoublyEvidence::OrderedPairResolvent {
                            t,
                            resolvent: res,
                            outcome,
                        },
                    ));
                    break;
                }
                Err(GaloisError::ResolventCollisionUnresolved) => continue,
                Err(e) => return Err(e),
            }
        }
        decided.ok_or(GaloisError::ResolventCollisionUnresolved)?
    };

    debug_assert!(!doubly || almost_doubly, "verdict monotonicity violated");
    debug_assert!(
        !almost_doubly || transitive,
        "verdict monotonicity violated"
    );

    Ok(TransitivityReport {
        transitive,
        transitive_evidence,
        almost_doubly,
        almost_doubly_evidence,
        doubly,
        doubly_evidence,
        real_roots,
        notes,
    })
}
