//! Minuscule dimension tables, the type-A Weyl dimension formula, the
//! exterior-square plethysm of the middle fundamental module, subset-sum
//! spectra, and the candidate-type enumeration for Hodge groups.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

use crate::exact::poly::rat_int;
use crate::exact::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("bad rank {rank} for type {type_label}")]
    BadRank { type_label: char, rank: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("eigenvalues must be distinct")]
    EqualEigenvalues,
    #[error("2g = {0} is a perfect power; the type enumeration assumes it is not")]
    PowerGuard(u64),
}

/// Dominant weight of type A in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightA {
    pub rank: usize,
    pub fundamental_coeffs: Vec<u64>,
}

impl WeightA {
    pub fn new(rank: usize, fundamental_coeffs: Vec<u64>) -> Result<Self, LieError> {
        if rank == 0 || fundamental_coeffs.len() != rank {
            return Err(LieError::BadRank {
                type_label: 'A',
                rank,
            });
        }
        Ok(WeightA {
            rank,
            fundamental_coeffs,
        })
    }

    /// ω_j (1-indexed).
    pub fn fundamental(rank: usize, j: usize) -> Result<Self, LieError> {
        if j == 0 || j > rank {
            return Err(LieError::BadParameter(format!(
                "fundamental weight index {j} out of 1..={rank}"
            )));
        }
        let mut coeffs = vec![0u64; rank];
        coeffs[j - 1] = 1;
        WeightA::new(rank, coeffs)
    }

    pub fn zero(rank: usize) -> Result<Self, LieError> {
        WeightA::new(rank, vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.fundamental_coeffs.iter().all(|&c| c == 0)
    }

    /// Partition coordinates λ_i = Σ_{k≥i} c_k, padded with λ_{l+1} = 0.
    pub fn partition(&self) -> Vec<u64> {
        let l = self.rank;
        let mut lambda = vec![0u64; l + 1];
        let mut acc = 0u64;
        for i in (0..l).rev() {
            acc += self.fundamental_coeffs[i];
            lambda[i] = acc;
        }
        lambda
    }

    pub fn label(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = vec![];
        for (i, &c) in self.fundamental_coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c == 1 {
                parts.push(format!("w{}", i + 1));
            } else {
                parts.push(format!("{}w{}", c, i + 1));
            }
        }
        parts.join("+")
    }
}

impl std::fmt::Display for WeightA {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// Exact dimension of the irreducible type-A_l module with highest weight w,
/// by the Weyl product over positive roots in partition coordinates:
/// dim = ∏_{i<j} (λ_i − λ_j + j − i)/(j − i).
pub fn weyl_dim_a(l: usize, w: &WeightA) -> Result<BigUint, LieError> {
    if w.rank != l || l == 0 {
        return Err(LieError::BadRank {
            type_label: 'A',
            rank: l,
        });
    }
    let lambda = w.partition();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..=l {
        for j in (i + 1)..=l {
            num *= BigUint::from(lambda[i] - lambda[j] + (j - i) as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Minuscule weights and their dimensions per classical type.
pub fn minuscule_dims(type_label: char, l: usize) -> Result<Vec<(String, BigUint)>, LieError> {
    match type_label {
        'A' if l >= 1 => Ok((1..=l)
            .map(|j| (format!("w{j}"), binomial(l as u64 + 1, j as u64)))
            .collect()),
        'B' if l >= 1 => Ok(vec![(
            "spin".to_string(),
            BigUint::from(2u32).pow(l as u32),
        )]),
        'C' if l >= 1 => Ok(vec![("w1".to_string(), BigUint::from(2 * l as u64))]),
        'D' if l >= 3 => Ok(vec![
            ("vector".to_string(), BigUint::from(2 * l as u64)),
            (
                "half-spin+".to_string(),
                BigUint::from(2u32).pow(l as u32 - 1),
            ),
            (
                "half-spin-".to_string(),
                BigUint::from(2u32).pow(l as u32 - 1),
            ),
        ]),
        'A' | 'B' | 'C' | 'D' => Err(LieError::BadRank {
            type_label,
            rank: l,
        }),
        _ => Err(LieError::BadParameter(format!(
            "unknown type {type_label:?}; expected A, B, C or D"
        ))),
    }
}

/// How the exterior square of V(ω_m) on A_{2m−1} decomposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wedge2Verdict {
    /// Single nontrivial summand (m = 2).
    Simple,
    /// One nontrivial summand plus the trivial one (m = 3).
    SimplePlusTrivial,
    /// Several summands, none trivial (even m ≥ 4).
    MultipleNontrivial,
    /// Several summands including the trivial one (odd m ≥ 5).
    MultipleWithTrivial,
}

impl std::fmt::Display for Wedge2Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Wedge2Verdict::Simple => write!(f, "simple"),
            Wedge2Verdict::SimplePlusTrivial => write!(f, "simple plus trivial"),
            Wedge2Verdict::MultipleNontrivial => write!(f, "multiple nontrivial summands"),
            Wedge2Verdict::MultipleWithTrivial => {
                write!(f, "multiple summands including a trivial one")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Wedge2Decomposition {
    pub m: usize,
    pub rank: usize,
    pub module_dim: BigUint,
    pub weights: Vec<WeightA>,
    pub dims: Vec<BigUint>,
    pub dimension_check: bool,
    pub has_trivial_summand: bool,
    pub verdict: Wedge2Verdict,
}

/// ∧²V(ω_m) on A_{2m−1} = ⊕ V(ω_{m+i} + ω_{m−i}) over odd i ≤ m, with
/// ω_0 = ω_{2m} = 0. Verifies C(C(2m,m), 2) = Σ of the Weyl dimensions.
pub fn wedge2_omega_m_decomposition(m: usize) -> Result<Wedge2Decomposition, LieError> {
    if m < 2 {
        return Err(LieError::BadParameter(format!("m = {m} must be ≥ 2")));
    }
    let l = 2 * m - 1;
    let mut weights = vec![];
    let mut dims = vec![];
    let mut i = 1;
    while i <= m {
        let mut coeffs = vec![0u64; l];
        // ω_{m+i} and ω_{m−i}; indices 0 and 2m contribute nothing
        if m + i <= l {
            coeffs[m + i - 1] += 1;
        }
        if m - i >= 1 {
            coeffs[m - i - 1] += 1;
        }
        let w = WeightA::new(l, coeffs)?;
        dims.push(weyl_dim_a(l, &w)?);
        weights.push(w);
        i += 2;
    }
    let module_dim = binomial(2 * m as u64, m as u64);
    let expected = {
        // C(dim, 2) for a possibly large dim
        let d = module_dim.clone();
        &d * (&d - BigUint::one()) / BigUint::from(2u32)
    };
    let total: BigUint = dims.iter().sum();
    let dimension_check = total == expected;
    let has_trivial_summand = m % 2 == 1;
    let nontrivial = weights.iter().filter(|w| !w.is_zero()).count();
    let verdict = match (weights.len(), has_trivial_summand, nontrivial) {
        (1, false, 1) => Wedge2Verdict::Simple,
        (2, true, 1) => Wedge2Verdict::SimplePlusTrivial,
        (_, false, _) => Wedge2Verdict::MultipleNontrivial,
        (_, true, _) => Wedge2Verdict::MultipleWithTrivial,
    };
    Ok(Wedge2Decomposition {
        m,
        rank: l,
        module_dim,
        weights,
        dims,
        dimension_check,
        has_trivial_summand,
        verdict,
    })
}

/// Eigenvalue spectrum of the induced operator on the j-th exterior power
/// of an (p+q)-dimensional space whose generator has eigenvalue a with
/// multiplicity p and b with multiplicity q.
#[derive(Debug, Clone)]
pub struct SpectrumAnalysis {
    pub p: usize,
    pub q: usize,
    pub j: usize,
    pub a: Rat,
    pub b: Rat,
    /// value k·a + (j−k)·b ↦ multiplicity C(p,k)·C(q,j−k).
    pub spectrum: BTreeMap<Rat, BigUint>,
}

impl SpectrumAnalysis {
    pub fn total_multiplicity(&self) -> BigUint {
        self.spectrum.values().sum()
    }
}

/// Subset sums t_A = Σ_{i∈A} z_i over j-element subsets of the eigenvalue
/// multiset {a×p, b×q}: value k·a + (j−k)·b with multiplicity
/// C(p,k)·C(q,j−k).
pub fn subset_sum_spectrum(
    p: usize,
    q: usize,
    j: usize,
    a: &Rat,
    b: &Rat,
) -> Result<SpectrumAnalysis, LieError> {
    if p == 0 || q == 0 {
        return Err(LieError::BadParameter("p and q must be positive".into()));
    }
    if j < 1 || j > p + q - 1 {
        return Err(LieError::BadParameter(format!(
            "j = {j} must satisfy 1 ≤ j ≤ p+q−1 = {}",
            p + q - 1
        )));
    }
    if a == b {
        return Err(LieError::EqualEigenvalues);
    }
    let traceless = rat_int(p as i64) * a + rat_int(q as i64) * b;
    if !num_traits::Zero::is_zero(&traceless) {
        return Err(LieError::BadParameter(
            "eigenvalues must satisfy p·a + q·b = 0".into(),
        ));
    }
    let mut spectrum = BTreeMap::new();
    let k_min = j.saturating_sub(q);
    let k_max = j.min(p);
    for k in k_min..=k_max {
        let value = rat_int(k as i64) * a + rat_int((j - k) as i64) * b;
        let mult = binomial(p as u64, k as u64) * binomial(q as u64, (j - k) as u64);
        // distinct k give distinct values because a ≠ b
        let prev = spectrum.insert(value, mult);
        debug_assert!(prev.is_none());
    }
    Ok(SpectrumAnalysis {
        p,
        q,
        j,
        a: a.clone(),
        b: b.clone(),
        spectrum,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedCheck {
    pub p: usize,
    pub q: usize,
    pub j: usize,
    pub l: usize,
    pub balanced: bool,
    /// Present exactly when balanced: l = 2j − 1.
    pub forced_relation: Option<String>,
}

/// Two-eigenvalue balance test with the canonical traceless eigenvalues
/// a = q, b = −p: balanced iff the spectrum has exactly two values of equal
/// multiplicity, which forces l = p + q − 1 = 2j − 1.
pub fn two_value_balanced_check(p: usize, q: usize, j: usize) -> Result<BalancedCheck, LieError> {
    let a = rat_int(q as i64);
    let b = rat_int(-(p as i64));
    let spec = subset_sum_spectrum(p, q, j, &a, &b)?;
    let l = p + q - 1;
    let mults: Vec<&BigUint> = spec.spectrum.values().collect();
    let balanced = mults.len() == 2 && mults[0] == mults[1];
    let forced_relation = if balanced {
        assert_eq!(l, 2 * j - 1, "balanced spectrum must force l = 2j−1");
        Some(format!("l = 2j−1 = {l}"))
    } else {
        None
    };
    Ok(BalancedCheck {
        p,
        q,
        j,
        l,
        balanced,
        forced_relation,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLabel {
    A,
    C,
    D,
}

impl std::fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TypeLabel::A => write!(f, "A"),
            TypeLabel::C => write!(f, "C"),
            TypeLabel::D => write!(f, "D"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepNote {
    Standard,
    ExteriorPower(usize),
}

impl std::fmt::Display for RepNote {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepNote::Standard => write!(f, "standard"),
            RepNote::ExteriorPower(j) => write!(f, "exterior power j={j}"),
        }
    }
}

/// A candidate Hodge-group type for a 2g-dimensional module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HodgeGroupCandidate {
    pub type_label: TypeLabel,
    pub rank: usize,
    pub representation: RepNote,
}

impl std::fmt::Display for HodgeGroupCandidate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{} ({})",
            self.type_label, self.rank, self.representation
        )
    }
}

/// True when n = m^d for some d ≥ 2.
pub fn is_perfect_power(n: u64) -> bool {
    if n < 4 {
        return false;
    }
    for d in 2..=n.ilog2() {
        let mut lo = 2u64;
        let mut hi = 1u64 << (n.ilog2() / d + 1);
        while lo <= hi {
            let mid = lo + (hi - lo) / 2;
            let mut pw: u128 = 1;
            for _ in 0..d {
                pw = pw.saturating_mul(mid as u128);
                if pw > n as u128 {
                    break;
                }
            }
            match pw.cmp(&(n as u128)) {
                std::cmp::Ordering::Equal => return true,
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid - 1,
            }
        }
    }
    false
}

/// The possible absolutely simple Hodge-group types for a 2g-dimensional
/// module when 2g is not a perfect power: always A_{2g−1}, C_g, D_g, plus
/// every A_r whose (r+1 choose j)-dimensional exterior power hits 2g with
/// 1 < r < 2g−1 and 1 < j < 2g−1. Symmetric exterior powers j and r+1−j are
/// the same candidate and are deduplicated.
pub fn bor_tabs_enumerate(g: usize) -> Result<Vec<HodgeGroupCandidate>, LieError> {
    if is_perfect_power(2 * g as u64) {
        return Err(LieError::PowerGuard(2 * g as u64));
    }
    bor_tabs_enumerate_unguarded(g)
}

/// Same enumeration without the perfect-power guard.
pub fn bor_tabs_enumerate_unguarded(g: usize) -> Result<Vec<HodgeGroupCandidate>, LieError> {
    if g < 3 {
        return Err(LieError::BadParameter(format!("g = {g} must be ≥ 3")));
    }
    let target = BigUint::from(2 * g as u64);
    let mut out = vec![
        HodgeGroupCandidate {
            type_label: TypeLabel::A,
            rank: 2 * g - 1,
            representation: RepNote::Standard,
        },
        HodgeGroupCandidate {
            type_label: TypeLabel::C,
            rank: g,
            representation: RepNote::Standard,
        },
        HodgeGroupCandidate {
            type_label: TypeLabel::D,
            rank: g,
            representation: RepNote::Standard,
        },
    ];
    for r in 2..(2 * g - 1) {
        let mut js = vec![];
        for j in 2..r {
            if j >= 2 * g - 1 {
                break;
            }
            if binomial(r as u64 + 1, j as u64) == target {
                let canonical = j.min(r + 1 - j);
                if !js.contains(&canonical) {
                    js.push(canonical);
                }
            }
        }
        for j in js {
            out.push(HodgeGroupCandidate {
                type_label: TypeLabel::A,
                rank: r,
                representation: RepNote::ExteriorPower(j),
            });
        }
    }
    Ok(out)
}

/// Dimensions of the two summands of the exterior square of the standard
/// symplectic module: (C(2g,2) − 1, 1).
pub fn sp_wedge2_dims(g: usize) -> Result<(BigUint, BigUint), LieError> {
    if g < 2 {
        return Err(LieError::BadParameter(format!("g = {g} must be ≥ 2")));
    }
    let total = binomial(2 * g as u64, 2);
    Ok((total - BigUint::one(), BigUint::one()))
}

#[derive(Debug, Clone)]
pub struct Wedge2ScanRow {
    pub m: usize,
    pub two_g: BigUint,
    pub g: BigUint,
    pub verdict: Wedge2Verdict,
    pub dimension_check: bool,
}

#[derive(Debug, Clone)]
pub struct Wedge2Scan {
    pub rows: Vec<Wedge2ScanRow>,
    /// The unique m ≥ 3 with verdict "simple plus trivial" and the g it
    /// forces.
    pub forced_m: usize,
    pub forced_g: BigUint,
}

/// Scans the plethysm for 2 ≤ m ≤ m_max and locates the unique
/// simple-plus-trivial row in the admissible range m ≥ 3; it sits at m = 3
/// and forces g = 10.
pub fn sl_wedge2_verdict_scan(m_max: usize) -> Result<Wedge2Scan, LieError> {
    if m_max < 3 {
        return Err(LieError::BadParameter(format!(
            "m_max = {m_max} must be ≥ 3"
        )));
    }
    let mut rows = vec![];
    let mut forced = None;
    for m in 2..=m_max {
        let dec = wedge2_omega_m_decomposition(m)?;
        let two_g = dec.module_dim.clone();
        let g = &two_g / BigUint::from(2u32);
        if m >= 3 && dec.verdict == Wedge2Verdict::SimplePlusTrivial {
            assert!(forced.is_none(), "simple-plus-trivial must be unique");
            forced = Some((m, g.clone()));
        }
        rows.push(Wedge2ScanRow {
            m,
            two_g,
            g,
            verdict: dec.verdict,
            dimension_check: dec.dimension_check,
        });
    }
    let (forced_m, forced_g) = forced.expect("m = 3 is within every scan with m_max ≥ 3");
    Ok(Wedge2Scan {
        rows,
        forced_m,
        forced_g,
    })
}
