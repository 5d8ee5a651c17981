//! Field analysis, torus classification, Hodge multiplicity enumeration,
//! H² orbit decomposition, and certified synthesis of number fields with a
//! prescribed signature and a doubly transitive Galois action.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exact::poly::{rat_big, rat_int, Poly};
use crate::exact::{
    crt_lift, factor_mod_p, is_eisenstein, is_irreducible_mod_p,
    modp::{monic_polys_of_degree, ModPoly},
    sturm_real_root_count, ExactError,
};
use crate::galois::{
    certify_irreducible_with, transitivity_report_with, GaloisError, IrreducibilityCertificate,
    IrreducibilityOutcome, ReportConfig, TransitivityReport,
};
use crate::permgrp::{two_subset_orbits, PermError, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("polynomial is reducible, so it does not define a field")]
    ReduciblePolynomial(Vec<Poly>),
    #[error("torus dimension g = {0} must be at least 3")]
    BadDimension(usize),
    #[error("signature (r, s) = ({r}, {s}) inconsistent with degree {degree}")]
    InconsistentSignature { r: usize, s: usize, degree: usize },
    #[error("signature (r, s) must satisfy r + s ≥ 1")]
    EmptySignature,
    #[error("field degree {degree} does not divide 2g = {two_g}")]
    DegreeDoesNotDivide { degree: usize, two_g: usize },
    #[error("automorphism rank d = {d} out of range for g = {g}")]
    RankOutOfRange { g: usize, d: i64 },
    #[error("group acts on {actual} points but the case needs {expected}")]
    WrongPointCount { expected: usize, actual: usize },
    #[error("group action is not transitive")]
    NotTransitive,
    #[error("multiplicity enumeration would produce more than {0} vectors")]
    EnumerationTooLarge(u64),
    #[error("synthesis retry budget exhausted after {attempts} attempts")]
    SynthesisExhausted { attempts: usize },
}

/// A number field presented by a defining polynomial with certified
/// invariants: degree, signature, irreducibility, transitivity hierarchy.
#[derive(Debug, Clone)]
pub struct FieldAnalysis {
    pub f: Poly,
    /// Integer model actually certified, when the input had rational
    /// coefficients (same field: roots are scaled by the denominator lcm).
    pub integer_model: Option<Poly>,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub irreducibility: IrreducibilityCertificate,
    /// None below degree 3, where the hierarchy is not defined.
    pub transitivity: Option<TransitivityReport>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalysisConfig {
    pub report: ReportConfig,
}

/// Degree, signature (by Sturm), irreducibility certificate, and the
/// transitivity report for a monic squarefree polynomial.
pub fn analyze_field(f: &Poly) -> Result<FieldAnalysis, TorusError> {
    analyze_field_with(f, &AnalysisConfig::default())
}

pub fn analyze_field_with(f: &Poly, config: &AnalysisConfig) -> Result<FieldAnalysis, TorusError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial.into());
    }
    if !f.is_monic() {
        return Err(ExactError::NonMonic.into());
    }
    if f.degree() < 1 {
        return Err(ExactError::ConstantPolynomial.into());
    }
    if !f.is_squarefree() {
        return Err(ExactError::NotSquarefree.into());
    }
    let mut notes = vec![];

    // certify on an integer model; root scaling x ↦ Dx preserves the real
    // root count and the Galois action on roots
    let model = if f.is_integer() {
        None
    } else {
        let (_, d) = f.to_integer_scaled();
        let scaled = f.root_scale(&rat_big(d.clone()));
        debug_assert!(scaled.is_integer());
        notes.push(format!(
            "rational coefficients: certified the integer model with roots scaled by {d}"
        ));
        Some(scaled)
    };
    let work = model.as_ref().unwrap_or(f);
    let n = work.degree();

    let r = sturm_real_root_count(work)?;
    debug_assert_eq!((n - r) % 2, 0);
    let s = (n - r) / 2;

    let (irreducibility, transitivity) = if n >= 3 {
        let report = transitivity_report_with(work, &config.report)?;
        match &report.transitive_evidence {
            crate::galois::TransitiveEvidence::Irreducible(cert) => (cert.clone(), Some(report)),
            crate::galois::TransitiveEvidence::Reducible(factors) => {
                return Err(TorusError::ReduciblePolynomial(factors.clone()));
            }
        }
    } else {
        notes.push("transitivity hierarchy is defined for degree ≥ 3 only".into());
        match certify_irreducible_with(
            work,
            config.report.prime_budget,
            config.report.factor_degree_bound,
        )? {
            IrreducibilityOutcome::Irreducible(cert) => (cert, None),
            IrreducibilityOutcome::Reducible(factors) => {
                return Err(TorusError::ReduciblePolynomial(factors));
            }
        }
    };

    Ok(FieldAnalysis {
        f: f.clone(),
        integer_model: model,
        n,
        r,
        s,
        irreducibility,
        transitivity,
        notes,
    })
}

/// Dirichlet unit rank r + s − 1.
pub fn unit_rank(r: usize, s: usize) -> Result<usize, TorusError> {
    if r + s == 0 {
        return Err(TorusError::EmptySignature);
    }
    Ok(r + s - 1)
}

/// Which of the three admissible endomorphism-field degrees applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndoDegree {
    One,
    G,
    TwoG,
    Incompatible { violated: String },
}

/// Structural description of the Hodge group for each branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HodgeGroupKind {
    /// End = Q: the Hodge group is a Q-simple semisimple group.
    QSimpleSemisimple,
    /// Degree-g field: Weil restriction of SL₂, Q-dimension 3g.
    ResSl2 { q_dimension: usize },
    /// Degree-2g field: norm-one torus of dimension 2g−1; simple when the
    /// field is doubly transitive.
    NormOneTorus {
        dimension: usize,
        simple_certified: bool,
    },
}

impl std::fmt::Display for HodgeGroupKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HodgeGroupKind::QSimpleSemisimple => write!(f, "Q-simple semisimple"),
            HodgeGroupKind::ResSl2 { q_dimension } => {
                write!(f, "Res_{{E/Q}} SL2 (Q-dimension {q_dimension})")
            }
            HodgeGroupKind::NormOneTorus {
                dimension,
                simple_certified,
            } => write!(
                f,
                "norm-one torus of dimension {dimension}{}",
                if *simple_certified {
                    ", simple (doubly transitive field)"
                } else {
                    ", simplicity undetermined"
                }
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriVerdict {
    Yes,
    No,
    Undetermined,
}

impl std::fmt::Display for TriVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TriVerdict::Yes => write!(f, "yes"),
            TriVerdict::No => write!(f, "no"),
            TriVerdict::Undetermined => write!(f, "undetermined"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimitivityStatus {
    CertifiedPrimeDegree,
    CertifiedAlmostDoublyTransitive,
    Undetermined,
}

impl std::fmt::Display for PrimitivityStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PrimitivityStatus::CertifiedPrimeDegree => write!(f, "certified (prime degree)"),
            PrimitivityStatus::CertifiedAlmostDoublyTransitive => {
                write!(f, "certified (almost doubly transitive)")
            }
            PrimitivityStatus::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// Which conditions were checked while classifying, and how they came out.
#[derive(Debug, Clone)]
pub struct ConstraintsReport {
    pub primitivity: Option<PrimitivityStatus>,
    pub purely_imaginary: Option<bool>,
    pub subfield_note: Option<String>,
    pub two_simple: TriVerdict,
    pub notes: Vec<String>,
}

/// Endomorphism degree, automorphism structure, and Hodge group shell for a
/// torus of dimension g with the given endomorphism field.
#[derive(Debug, Clone)]
pub struct TorusClassification {
    pub g: usize,
    pub endo_degree: EndoDegree,
    /// Aut(T) ≅ Z^d × {±1}.
    pub aut_rank: usize,
    pub hodge_group: Option<HodgeGroupKind>,
    pub constraints: ConstraintsReport,
}

/// Endomorphism field input: the rationals or an analyzed field.
#[derive(Debug, Clone)]
pub enum FieldInput<'a> {
    Rational,
    Field(&'a FieldAnalysis),
}

/// The degree trichotomy: given g ≥ 3 and an endomorphism field, reports the
/// automorphism rank, the Hodge group shell, and the two-simplicity verdict.
pub fn classify_torus(g: usize, field: FieldInput<'_>) -> Result<TorusClassification, TorusError> {
    if g < 3 {
        return Err(TorusError::BadDimension(g));
    }
    match field {
        FieldInput::Rational => Ok(TorusClassification {
            g,
            endo_degree: EndoDegree::One,
            aut_rank: 0,
            hodge_group: Some(HodgeGroupKind::QSimpleSemisimple),
            constraints: ConstraintsReport {
                primitivity: None,
                purely_imaginary: None,
                subfield_note: None,
                two_simple: TriVerdict::Undetermined,
                notes: vec![
                    "End = Z, Aut = {±1}".into(),
                    "two-simplicity is not decided by the endomorphism field alone".into(),
                ],
            },
        }),
        FieldInput::Field(analysis) => {
            let n = analysis.n;
            if n == g {
                classify_degree_g(g, analysis)
            } else if n == 2 * g {
                classify_degree_2g(g, analysis)
            } else if n == 1 {
                classify_torus(g, FieldInput::Rational)
            } else {
                Ok(TorusClassification {
                    g,
                    endo_degree: EndoDegree::Incompatible {
                        violated: format!("field degree {n} is not in {{1, {g}, {}}}", 2 * g),
                    },
                    aut_rank: 0,
                    hodge_group: None,
                    constraints: ConstraintsReport {
                        primitivity: None,
                        purely_imaginary: None,
                        subfield_note: None,
                        two_simple: TriVerdict::No,
                        notes: vec!["degree trichotomy violated".into()],
                    },
                })
            }
        }
    }
}

fn classify_degree_g(
    g: usize,
    analysis: &FieldAnalysis,
) -> Result<TorusClassification, TorusError> {
    let report = analysis
        .transitivity
        .as_ref()
        .expect("degree g ≥ 3 always has a transitivity report");
    let d = unit_rank(analysis.r, analysis.s)?;
    let mut notes = vec![];
    let primitivity = if crate::exact::primes::is_prime(g as u64) {
        PrimitivityStatus::CertifiedPrimeDegree
    } else if report.almost_doubly {
        PrimitivityStatus::CertifiedAlmostDoublyTransitive
    } else {
        notes.push("primitivity is required for this branch but only sufficient certificates are implemented".into());
        PrimitivityStatus::Undetermined
    };
    let two_simple = if report.almost_doubly {
        TriVerdict::Yes
    } else {
        TriVerdict::No
    };
    notes.push(format!(
        "unit rank d = r + s − 1 = {} + {} − 1 = {d}",
        analysis.r, analysis.s
    ));
    Ok(TorusClassification {
        g,
        endo_degree: EndoDegree::G,
        aut_rank: d,
        hodge_group: Some(HodgeGroupKind::ResSl2 { q_dimension: 3 * g }),
        constraints: ConstraintsReport {
            primitivity: Some(primitivity),
            purely_imaginary: None,
            subfield_note: None,
            two_simple,
            notes,
        },
    })
}

fn classify_degree_2g(
    g: usize,
    analysis: &FieldAnalysis,
) -> Result<TorusClassification, TorusError> {
    if analysis.r != 0 {
        return Ok(TorusClassification {
            g,
            endo_degree: EndoDegree::Incompatible {
                violated: format!(
                    "degree-2g fields must be purely imaginary (r = 0), but r = {}",
                    analysis.r
                ),
            },
            aut_rank: 0,
            hodge_group: None,
            constraints: ConstraintsReport {
                primitivity: None,
                purely_imaginary: Some(false),
                subfield_note: None,
                two_simple: TriVerdict::No,
                notes: vec![],
            },
        });
    }
    let d = unit_rank(0, g)?;
    debug_assert_eq!(d, g - 1);
    let doubly = analysis
        .transitivity
        .as_ref()
        .map(|t| t.doubly)
        .unwrap_or(false);
    let two_simple = if doubly {
        TriVerdict::Yes
    } else {
        TriVerdict::Undetermined
    };
    Ok(TorusClassification {
        g,
        endo_degree: EndoDegree::TwoG,
        aut_rank: d,
        hodge_group: Some(HodgeGroupKind::NormOneTorus {
            dimension: 2 * g - 1,
            simple_certified: doubly,
        }),
        constraints: ConstraintsReport {
            primitivity: None,
            purely_imaginary: Some(true),
            subfield_note: Some(
                "if not primitive, the field has exactly one proper subfield besides Q, of degree g"
                    .into(),
            ),
            two_simple,
            notes: vec![format!("unit rank d = 0 + {g} − 1 = {d}")],
        },
    })
}

/// One admissible multiplicity function n_σ on the embeddings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector {
    pub g: usize,
    pub d_e: usize,
    /// Forced value d_e/2 at each real embedding.
    pub real_entries: Vec<usize>,
    /// (n_σ, n_σ̄) for each conjugate pair.
    pub pair_entries: Vec<(usize, usize)>,
    /// Σ n_σ(n_σ−1)/2 over all embeddings.
    pub h20_dim: u64,
    /// All-or-nothing flag: h20_dim ∈ {0, g(g−1)/2}.
    pub two_simple_compatible: bool,
    /// The degree-2 full-H^{2,0} pattern is excluded for g ≥ 3: the
    /// endomorphism algebra would be a g×g matrix algebra over an imaginary
    /// quadratic field, contradicting simplicity.
    pub ruled_out: Option<String>,
}

impl MultiplicityVector {
    pub fn entries(&self) -> Vec<usize> {
        let mut out = self.real_entries.clone();
        for &(a, b) in &self.pair_entries {
            out.push(a);
            out.push(b);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationOutcome {
    Vectors(Vec<MultiplicityVector>),
    /// No vector exists: d_E odd forces the real-embedding entries to be
    /// non-integral.
    NoVector {
        reason: String,
    },
}

const MAX_ENUMERATION: u64 = 1_000_000;

/// All multiplicity vectors for dimension g, a field degree dividing 2g and
/// signature (r, s): real embeddings are forced to d_E/2, each conjugate
/// pair ranges over n + n̄ = d_E, and Σ n_σ = g holds automatically.
pub fn enumerate_multiplicity_vectors(
    g: usize,
    field_degree: usize,
    r: usize,
    s: usize,
) -> Result<EnumerationOutcome, TorusError> {
    if g < 2 {
        return Err(TorusError::BadDimension(g));
    }
    if field_degree == 0 || r + 2 * s != field_degree {
        return Err(TorusError::InconsistentSignature {
            r,
            s,
            degree: field_degree,
        });
    }
    if !(2 * g).is_multiple_of(field_degree) {
        return Err(TorusError::DegreeDoesNotDivide {
            degree: field_degree,
            two_g: 2 * g,
        });
    }
    let d_e = 2 * g / field_degree;
    if d_e % 2 == 1 && r > 0 {
        return Ok(EnumerationOutcome::NoVector {
            reason: format!("d_E = {d_e} is odd, but each real embedding needs n_σ = d_E/2"),
        });
    }
    let count = (d_e as u64 + 1).checked_pow(s as u32);
    match count {
        Some(c) if c <= MAX_ENUMERATION => {}
        _ => return Err(TorusError::EnumerationTooLarge(MAX_ENUMERATION)),
    }

    let real_entries = vec![d_e / 2; r];
    let full = (g * (g - 1) / 2) as u64;
    let mut vectors = vec![];
    let mut choice = vec![0usize; s];
    loop {
        let pair_entries: Vec<(usize, usize)> = choice.iter().map(|&a| (a, d_e - a)).collect();
        let mut h20: u64 = real_entries
            .iter()
            .map(|&n| (n as u64) * (n as u64 - 1) / 2)
            .sum();
        for &(a, b) in &pair_entries {
            h20 += (a as u64) * (a.saturating_sub(1) as u64) / 2;
            h20 += (b as u64) * (b.saturating_sub(1) as u64) / 2;
        }
        debug_assert_eq!(
            real_entries.iter().sum::<usize>()
                + pair_entries.iter().map(|&(a, b)| a + b).sum::<usize>(),
            g
        );
        let two_simple_compatible = h20 == 0 || h20 == full;
        let ruled_out = if h20 == full && field_degree == 2 && g >= 3 {
            Some(
                "imaginary quadratic with full H^{2,0}: End^0 would be Mat_g(E), \
                 contradicting simplicity"
                    .to_string(),
            )
        } else {
            None
        };
        vectors.push(MultiplicityVector {
            g,
            d_e,
            real_entries: real_entries.clone(),
            pair_entries,
            h20_dim: h20,
            two_simple_compatible,
            ruled_out,
        });
        // next choice, lexicographic
        let mut k = 0;
        loop {
            if k == s {
                return Ok(EnumerationOutcome::Vectors(vectors));
            }
            if choice[k] < d_e {
                choice[k] += 1;
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H2Case {
    DegreeG,
    Degree2G,
}

impl std::fmt::Display for H2Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            H2Case::DegreeG => write!(f, "degree_g"),
            H2Case::Degree2G => write!(f, "degree_2g"),
        }
    }
}

/// Orbit decomposition of H²: the Hodge-invariant dimension plus one moving
/// summand per Galois orbit on unordered 2-subsets of embeddings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2Decomposition {
    pub g: usize,
    pub case: H2Case,
    pub invariant_dim: u64,
    pub moving_summands: Vec<u64>,
    pub two_simple_verdict: bool,
    pub total_dim: u64,
}

/// Degree-g case: the action is on g points; invariants contribute g and
/// each orbit O contributes 4·|O|. Degree-2g case: the action is on 2g
/// points; no invariants, each orbit contributes |O|.
pub fn h2_decomposition(
    g: usize,
    case: H2Case,
    action: &PermGroup,
) -> Result<H2Decomposition, TorusError> {
    if g < 2 {
        return Err(TorusError::BadDimension(g));
    }
    let expected = match case {
        H2Case::DegreeG => g,
        H2Case::Degree2G => 2 * g,
    };
    if action.n() != expected {
        return Err(TorusError::WrongPointCount {
            expected,
            actual: action.n(),
        });
    }
    let profile = crate::permgrp::transitivity_profile(action)?;
    if !profile.transitive {
        return Err(TorusError::NotTransitive);
    }
    let orbits = two_subset_orbits(action)?;
    let (invariant_dim, moving_summands): (u64, Vec<u64>) = match case {
        H2Case::DegreeG => (
            g as u64,
            orbits.iter().map(|o| 4 * o.len() as u64).collect(),
        ),
        H2Case::Degree2G => (0, orbits.iter().map(|o| o.len() as u64).collect()),
    };
    let total: u64 = invariant_dim + moving_summands.iter().sum::<u64>();
    let expected_total = (2 * g as u64) * (2 * g as u64 - 1) / 2;
    debug_assert_eq!(total, expected_total, "H² dimension bookkeeping broke");
    Ok(H2Decomposition {
        g,
        case,
        invariant_dim,
        moving_summands,
        two_simple_verdict: orbits.len() == 1,
        total_dim: total,
    })
}

/// Inverts d = r + s − 1 under r + 2s = g: returns (2(d+1) − g, g − d − 1).
pub fn aut_rank_to_signature(g: usize, d: i64) -> Result<(usize, usize), TorusError> {
    if g < 3 {
        return Err(TorusError::BadDimension(g));
    }
    let r = 2 * (d + 1) - g as i64;
    let s = g as i64 - d - 1;
    if d < 0 || r < 0 || s < 0 {
        return Err(TorusError::RankOutOfRange { g, d });
    }
    Ok((r as usize, s as usize))
}

/// Everything the synthesis pipeline certifies about its output.
#[derive(Debug, Clone)]
pub struct SynthesisResult {
    pub f: Poly,
    pub analysis: FieldAnalysis,
    /// Scale of the archimedean model that succeeded.
    pub scale: BigInt,
    pub attempts: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct SynthesisConfig {
    pub base_scale: u64,
    pub max_attempts: usize,
}

impl Default for SynthesisConfig {
    fn default() -> Self {
        SynthesisConfig {
            base_scale: 64,
            max_attempts: 20,
        }
    }
}

/// Archimedean model: ∏ (x − K·i) · ∏ (x² + (K·j)²), with r real roots and
/// s conjugate pairs, all well separated at scale K.
fn archimedean_model(r: usize, s: usize, scale: &BigInt) -> Poly {
    let mut f = Poly::one();
    for i in 1..=r {
        let root = rat_big(scale * BigInt::from(i as u64));
        f = &f * &Poly::new(vec![-root, rat_int(1)]);
    }
    for j in 1..=s {
        let im = scale * BigInt::from(j as u64);
        let sq = rat_big(&im * &im);
        f = &f * &Poly::new(vec![sq, rat_int(0), rat_int(1)]);
    }
    f
}

/// Lexicographically first monic irreducible of the given degree over F_l.
fn first_irreducible(l: u64, degree: usize) -> ModPoly {
    monic_polys_of_degree(l, degree)
        .find(|f| is_irreducible_mod_p(f).unwrap_or(false))
        .expect("an irreducible polynomial of every degree exists over F_l")
}

/// Builds a monic degree-n field with signature (r, s) and a certified
/// doubly transitive Galois group, by coefficient-wise CRT lifts toward a
/// scaled archimedean model, with a-posteriori certification: Sturm count r,
/// Eisenstein at 2, and the Dedekind pattern {1, n−1} at 3. Failures double
/// the scale and retry.
pub fn synthesize_field(n: usize, r: usize, s: usize) -> Result<SynthesisResult, TorusError> {
    synthesize_field_with(
        n,
        r,
        s,
        &SynthesisConfig::default(),
        &AnalysisConfig::default(),
    )
}

pub fn synthesize_field_with(
    n: usize,
    r: usize,
    s: usize,
    config: &SynthesisConfig,
    analysis_config: &AnalysisConfig,
) -> Result<SynthesisResult, TorusError> {
    if n < 3 || r + 2 * s != n {
        return Err(TorusError::InconsistentSignature { r, s, degree: n });
    }
    let p: u64 = 2;
    let l: u64 = 3;
    // target mod p² = 4: x^n − 2
    let mut hp = vec![BigInt::from(0); n + 1];
    hp[0] = BigInt::from(2); // −2 mod 4
    hp[n] = BigInt::one();
    // target mod 3: x · u_l with u_l irreducible of degree n−1
    let u = first_irreducible(l, n - 1);
    let mut hl = vec![BigInt::from(0); n + 1];
    for (i, &c) in u.coeffs().iter().enumerate() {
        hl[i + 1] = BigInt::from(c);
    }

    let mut scale = BigInt::from(config.base_scale);
    for attempt in 1..=config.max_attempts {
        let model = archimedean_model(r, s, &scale);
        let mut coeffs: Vec<crate::exact::Rat> = Vec::with_capacity(n + 1);
        for i in 0..n {
            let target = model.coeff(i);
            let lifted = crt_lift(
                &[
                    (hp[i].clone(), BigInt::from((p * p) as i64)),
                    (hl[i].clone(), BigInt::from(l as i64)),
                ],
                &target,
            )?;
            coeffs.push(rat_big(lifted));
        }
        coeffs.push(rat_int(1));
        let f = Poly::new(coeffs);

        // a-posteriori certification; never trust the construction
        if !is_eisenstein(&f, p)? {
            scale *= 2;
            continue;
        }
        if sturm_real_root_count(&f)? != r {
            scale *= 2;
            continue;
        }
        let pattern = factor_mod_p(&f, l)?.pattern();
        if pattern != vec![1, n - 1] {
            scale *= 2;
            continue;
        }
        let analysis = analyze_field_with(&f, analysis_config)?;
        let certified = analysis.r == r
            && analysis.s == s
            && analysis
                .transitivity
                .as_ref()
                .map(|t| t.doubly)
                .unwrap_or(false);
        if certified {
            return Ok(SynthesisResult {
                f,
                analysis,
                scale,
                attempts: attempt,
            });
        }
        scale *= 2;
    }
    Err(TorusError::SynthesisExhausted {
        attempts: config.max_attempts,
    })
}

/// Thm-1.9 driver: d ↦ (r, s) ↦ synthesized degree-g field ↦ classification;
/// the output must land in the degree-g branch with Aut rank exactly d.
pub fn synthesize_torus_profile(
    g: usize,
    d: i64,
) -> Result<(SynthesisResult, TorusClassification), TorusError> {
    let (r, s) = aut_rank_to_signature(g, d)?;
    let synth = synthesize_field(g, r, s)?;
    let classification = classify_torus(g, FieldInput::Field(&synth.analysis))?;
    debug_assert_eq!(classification.endo_degree, EndoDegree::G);
    debug_assert_eq!(classification.aut_rank, d as usize);
    Ok((synth, classification))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{group_closure, Perm, DEFAULT_MAX_ORDER};

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn analyze_x3_minus_2() {
        let a = analyze_field(&p(&[-2, 0, 0, 1])).unwrap();
        assert_eq!((a.n, a.r, a.s), (3, 1, 1));
        assert!(a.transitivity.as_ref().unwrap().doubly);
    }

    #[test]
    fn analyze_cyclic_cubic() {
        let a = analyze_field(&p(&[-1, -3, 0, 1])).unwrap();
        assert_eq!((a.n, a.r, a.s), (3, 3, 0));
        let t = a.transitivity.as_ref().unwrap();
        assert!(t.almost_doubly && !t.doubly);
    }

    #[test]
    fn analyze_rejects_reducible() {
        assert!(matches!(
            analyze_field(&p(&[-1, 0, 0, 0, 1])),
            Err(TorusError::ReduciblePolynomial(_))
        ));
    }

    #[test]
    fn unit_rank_examples() {
        assert_eq!(unit_rank(1, 1).unwrap(), 1);
        assert_eq!(unit_rank(0, 3).unwrap(), 2);
        assert_eq!(unit_rank(1, 0).unwrap(), 0);
        assert!(matches!(unit_rank(0, 0), Err(TorusError::EmptySignature)));
    }

    #[test]
    fn classify_rational_input() {
        let c = classify_torus(3, FieldInput::Rational).unwrap();
        assert_eq!(c.endo_degree, EndoDegree::One);
        assert_eq!(c.aut_rank, 0);
        assert_eq!(c.hodge_group, Some(HodgeGroupKind::QSimpleSemisimple));
    }

    #[test]
    fn classify_degree_g_cubic() {
        let a = analyze_field(&p(&[-1, -3, 0, 1])).unwrap();
        let c = classify_torus(3, FieldInput::Field(&a)).unwrap();
        assert_eq!(c.endo_degree, EndoDegree::G);
        assert_eq!(c.aut_rank, 2); // totally real cubic: d = g − 1
        assert_eq!(c.constraints.two_simple, TriVerdict::Yes);
        assert_eq!(
            c.constraints.primitivity,
            Some(PrimitivityStatus::CertifiedPrimeDegree)
        );
    }

    #[test]
    fn classify_degree_2g_needs_purely_imaginary() {
        // x⁶ − 2 has the real roots ±2^(1/6), so r = 2: incompatible.
        let a = analyze_field(&p(&[-2, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(a.r, 2);
        let c = classify_torus(3, FieldInput::Field(&a)).unwrap();
        assert!(matches!(c.endo_degree, EndoDegree::Incompatible { .. }));
        assert_eq!(c.constraints.purely_imaginary, Some(false));
    }

    #[test]
    fn classify_degree_2g_doubly_transitive() {
        // x⁶ + x + 1: no real roots (its minimum is positive) and a doubly
        // transitive group, witnessed by the {1, 5} pattern at p = 7
        let a = analyze_field(&p(&[1, 1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!((a.n, a.r, a.s), (6, 0, 3));
        assert!(a.transitivity.as_ref().unwrap().doubly);
        let c = classify_torus(3, FieldInput::Field(&a)).unwrap();
        assert_eq!(c.endo_degree, EndoDegree::TwoG);
        assert_eq!(c.aut_rank, 2); // g − 1
        assert_eq!(c.constraints.two_simple, TriVerdict::Yes);
        assert_eq!(
            c.hodge_group,
            Some(HodgeGroupKind::NormOneTorus {
                dimension: 5,
                simple_certified: true
            })
        );
    }

    #[test]
    fn classify_degree_2g_not_doubly_leaves_simplicity_open() {
        // x⁶ + 3 is purely imaginary but its group has order 12 < 30, far
        // from doubly transitive: the branch applies, simplicity is open
        let a = analyze_field(&p(&[3, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!((a.n, a.r, a.s), (6, 0, 3));
        assert!(!a.transitivity.as_ref().unwrap().doubly);
        let c = classify_torus(3, FieldInput::Field(&a)).unwrap();
        assert_eq!(c.endo_degree, EndoDegree::TwoG);
        assert_eq!(c.aut_rank, 2);
        assert_eq!(c.constraints.two_simple, TriVerdict::Undetermined);
    }

    #[test]
    fn classify_wrong_degree_is_incompatible() {
        let a = analyze_field(&p(&[1, 1, 0, 0, 1])).unwrap(); // degree 4
        let c = classify_torus(3, FieldInput::Field(&a)).unwrap();
        assert!(matches!(c.endo_degree, EndoDegree::Incompatible { .. }));
    }

    #[test]
    fn multiplicity_vectors_degree_6_g3() {
        // d_E = 1: each pair chooses (0,1) or (1,0); 8 vectors, all h20 = 0
        let out = enumerate_multiplicity_vectors(3, 6, 0, 3).unwrap();
        match out {
            EnumerationOutcome::Vectors(vs) => {
                assert_eq!(vs.len(), 8);
                assert!(vs.iter().all(|v| v.h20_dim == 0 && v.two_simple_compatible));
            }
            _ => panic!("expected vectors"),
        }
    }

    #[test]
    fn multiplicity_vectors_degree_3_totally_real() {
        // d_E = 2: forced (1,1,1); h20 = 0
        let out = enumerate_multiplicity_vectors(3, 3, 3, 0).unwrap();
        match out {
            EnumerationOutcome::Vectors(vs) => {
                assert_eq!(vs.len(), 1);
                assert_eq!(vs[0].real_entries, vec![1, 1, 1]);
                assert_eq!(vs[0].h20_dim, 0);
            }
            _ => panic!("expected vectors"),
        }
    }

    #[test]
    fn multiplicity_vector_rational_field() {
        // degree 1: single real embedding with n_σ = g; h20 = g(g−1)/2
        let out = enumerate_multiplicity_vectors(3, 1, 1, 0).unwrap();
        match out {
            EnumerationOutcome::Vectors(vs) => {
                assert_eq!(vs.len(), 1);
                assert_eq!(vs[0].real_entries, vec![3]);
                assert_eq!(vs[0].h20_dim, 3);
                assert!(vs[0].two_simple_compatible);
                assert!(vs[0].ruled_out.is_none());
            }
            _ => panic!("expected vectors"),
        }
    }

    #[test]
    fn multiplicity_no_vector_when_d_e_odd_with_real() {
        // g = 3, degree 6 with r = 2, s = 2: d_E = 1 odd and r > 0
        let out = enumerate_multiplicity_vectors(3, 6, 2, 2).unwrap();
        assert!(matches!(out, EnumerationOutcome::NoVector { .. }));
    }

    #[test]
    fn multiplicity_imaginary_quadratic_ruled_out() {
        let out = enumerate_multiplicity_vectors(3, 2, 0, 1).unwrap();
        match out {
            EnumerationOutcome::Vectors(vs) => {
                assert_eq!(vs.len(), 4); // (0,3),(1,2),(2,1),(3,0)
                let full: Vec<_> = vs.iter().filter(|v| v.h20_dim == 3).collect();
                assert_eq!(full.len(), 2);
                assert!(full.iter().all(|v| v.ruled_out.is_some()));
            }
            _ => panic!("expected vectors"),
        }
    }

    #[test]
    fn h2_decomposition_cyclic_cubic_action() {
        let c3 = group_closure(
            &[Perm::from_images(vec![1, 2, 0]).unwrap()],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        let d = h2_decomposition(3, H2Case::DegreeG, &c3).unwrap();
        assert_eq!(d.invariant_dim, 3);
        assert_eq!(d.moving_summands, vec![12]);
        assert_eq!(d.total_dim, 15);
        assert!(d.two_simple_verdict);
    }

    #[test]
    fn h2_decomposition_degree_2g_two_transitive() {
        // S₆ on 6 points is 2-transitive: single summand C(6,2) = 15
        let s6 = group_closure(
            &[
                Perm::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap(),
                Perm::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap(),
            ],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        let d = h2_decomposition(3, H2Case::Degree2G, &s6).unwrap();
        assert_eq!(d.invariant_dim, 0);
        assert_eq!(d.moving_summands, vec![15]);
        assert!(d.two_simple_verdict);
    }

    #[test]
    fn h2_decomposition_regular_c6() {
        // regular C₆: distance classes give 2-subset orbits {6, 6, 3}
        let c6 = group_closure(
            &[Perm::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap()],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        let d = h2_decomposition(3, H2Case::Degree2G, &c6).unwrap();
        let mut sums = d.moving_summands.clone();
        sums.sort_unstable();
        assert_eq!(sums, vec![3, 6, 6]);
        assert!(!d.two_simple_verdict);
        assert_eq!(d.total_dim, 15);
    }

    #[test]
    fn h2_decomposition_point_count_enforced() {
        let c3 = group_closure(
            &[Perm::from_images(vec![1, 2, 0]).unwrap()],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        assert!(matches!(
            h2_decomposition(3, H2Case::Degree2G, &c3),
            Err(TorusError::WrongPointCount {
                expected: 6,
                actual: 3
            })
        ));
    }

    #[test]
    fn aut_rank_signature_examples() {
        assert_eq!(aut_rank_to_signature(3, 2).unwrap(), (3, 0));
        assert_eq!(aut_rank_to_signature(4, 1).unwrap(), (0, 2));
        assert!(matches!(
            aut_rank_to_signature(3, 0),
            Err(TorusError::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn aut_rank_round_trip() {
        for g in 3..=8usize {
            for d in 0..=(g as i64) {
                if let Ok((r, s)) = aut_rank_to_signature(g, d) {
                    assert_eq!(r + 2 * s, g);
                    assert_eq!(unit_rank(r, s).unwrap() as i64, d);
                }
            }
        }
    }

    #[test]
    fn synthesize_cubic_mixed_signature() {
        let out = synthesize_field(3, 1, 1).unwrap();
        assert_eq!((out.analysis.n, out.analysis.r, out.analysis.s), (3, 1, 1));
        assert!(out.analysis.transitivity.as_ref().unwrap().doubly);
        assert!(is_eisenstein(&out.f, 2).unwrap());
    }

    #[test]
    fn synthesize_quartic_no_real_roots() {
        let out = synthesize_field(4, 0, 2).unwrap();
        assert_eq!((out.analysis.r, out.analysis.s), (0, 2));
        assert!(out.analysis.transitivity.as_ref().unwrap().doubly);
    }

    #[test]
    fn synthesize_rejects_inconsistent_signature() {
        assert!(matches!(
            synthesize_field(3, 2, 0),
            Err(TorusError::InconsistentSignature { .. })
        ));
    }

    #[test]
    fn torus_profile_g3_d1() {
        let (synth, class) = synthesize_torus_profile(3, 1).unwrap();
        assert_eq!((synth.analysis.r, synth.analysis.s), (1, 1));
        assert_eq!(class.aut_rank, 1);
        assert_eq!(class.endo_degree, EndoDegree::G);
    }
}
