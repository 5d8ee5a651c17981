//! Report schema (version "1") and builders for every subcommand.
//!
//! Reports are byte-stable: struct-free construction with fixed key
//! insertion order, canonical rational rendering "p/q", and polynomials as
//! ascending coefficient arrays of such strings. Text output is a rendering
//! of the same JSON payload, never a separate code path.

use serde_json::{json, Map, Value};

use ttl_core::exact::poly::rat_string;
use ttl_core::exact::{ExactError, Poly, Rat};
use ttl_core::galois::{
    AlmostDoublyEvidence, DoublyEvidence, GaloisError, IrreducibilityCertificate,
    IrreducibilityOutcome, ReportConfig,
};
use ttl_core::lie::{self, LieError};
use ttl_core::permgrp::{self, PermError, PermGroup};
use ttl_core::torus::{
    self, AnalysisConfig, EndoDegree, EnumerationOutcome, FieldAnalysis, FieldInput, H2Case,
    TorusClassification, TorusError,
};

use crate::parser::ParseError;

pub const SCHEMA_VERSION: &str = "1";

/// Errors mapped onto the process exit codes: 2 usage, 3 guard, 4
/// certification failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Guard(String),
    Certification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Certification(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Guard(m) | CliError::Certification(m) => m,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message())
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::DegreeBoundExceeded { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GaloisError> for CliError {
    fn from(e: GaloisError) -> Self {
        match e {
            GaloisError::Exact(inner) => inner.into(),
            GaloisError::DegreeOutOfRange { .. } => CliError::Guard(e.to_string()),
            GaloisError::ResolventCollisionUnresolved | GaloisError::DegenerateTransform => {
                CliError::Certification(e.to_string())
            }
            GaloisError::BadParameter(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<TorusError> for CliError {
    fn from(e: TorusError) -> Self {
        match e {
            TorusError::Exact(inner) => inner.into(),
            TorusError::Galois(inner) => inner.into(),
            TorusError::Perm(inner) => inner.into(),
            TorusError::ReduciblePolynomial(_) | TorusError::SynthesisExhausted { .. } => {
                CliError::Certification(e.to_string())
            }
            TorusError::EnumerationTooLarge(_) => CliError::Guard(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::OrderBoundExceeded(_) => CliError::Guard(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        match e {
            LieError::PowerGuard(_) => CliError::Guard(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub fn poly_json(f: &Poly) -> Value {
    if f.is_zero() {
        return json!(["0"]);
    }
    Value::Array(f.coeffs().iter().map(|c| json!(rat_string(c))).collect())
}

pub fn rat_json(r: &Rat) -> Value {
    json!(rat_string(r))
}

fn obj(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

fn report(command: &str, inputs: Value, results: Value, certificates: Vec<Value>) -> Value {
    obj(vec![
        ("schema_version", json!(SCHEMA_VERSION)),
        ("command", json!(command)),
        ("inputs", inputs),
        ("results", results),
        ("certificates", Value::Array(certificates)),
    ])
}

pub fn certificate_json(cert: &IrreducibilityCertificate) -> Value {
    match cert {
        IrreducibilityCertificate::Eisenstein { p } => {
            obj(vec![("type", json!("eisenstein")), ("p", json!(p))])
        }
        IrreducibilityCertificate::IrreducibleModP { p } => {
            obj(vec![("type", json!("irreducible_mod_p")), ("p", json!(p))])
        }
        IrreducibilityCertificate::DegreePatternSieve { patterns } => obj(vec![
            ("type", json!("degree_pattern_sieve")),
            (
                "patterns",
                Value::Array(patterns.iter().map(|(p, pat)| json!([p, pat])).collect()),
            ),
        ]),
        IrreducibilityCertificate::ZassenhausExhaustive => {
            obj(vec![("type", json!("zassenhaus_exhaustive"))])
        }
    }
}

pub fn outcome_json(outcome: &IrreducibilityOutcome) -> Value {
    match outcome {
        IrreducibilityOutcome::Irreducible(cert) => obj(vec![
            ("verdict", json!("irreducible")),
            ("certificate", certificate_json(cert)),
        ]),
        IrreducibilityOutcome::Reducible(factors) => obj(vec![
            ("verdict", json!("reducible")),
            (
                "factors",
                Value::Array(factors.iter().map(poly_json).collect()),
            ),
        ]),
    }
}

fn almost_doubly_json(ev: &AlmostDoublyEvidence) -> Value {
    obj(vec![
        ("kind", json!("almost_doubly_resolvent")),
        (
            "tschirnhaus_c",
            ev.tschirnhaus_c.map(|c| json!(c)).unwrap_or(Value::Null),
        ),
        ("resolvent", poly_json(&ev.resolvent)),
        ("outcome", outcome_json(&ev.outcome)),
    ])
}

fn doubly_json(ev: &DoublyEvidence) -> Value {
    match ev {
        DoublyEvidence::NotAlmostDoubly => obj(vec![
            ("kind", json!("doubly")),
            ("type", json!("not_almost_doubly")),
        ]),
        DoublyEvidence::CycleWitness { p, pattern } => obj(vec![
            ("kind", json!("doubly")),
            ("type", json!("cycle_witness")),
            ("p", json!(p)),
            ("pattern", json!(pattern)),
        ]),
        DoublyEvidence::ParityShortcut => obj(vec![
            ("kind", json!("doubly")),
            ("type", json!("parity_shortcut")),
        ]),
        DoublyEvidence::OrderedPairResolvent {
            t,
            resolvent,
            outcome,
        } => obj(vec![
            ("kind", json!("doubly")),
            ("type", json!("ordered_pair_resolvent")),
            ("t", json!(t)),
            ("resolvent", poly_json(resolvent)),
            ("outcome", outcome_json(outcome)),
        ]),
    }
}

fn analysis_results_json(a: &FieldAnalysis) -> Value {
    let transitivity = match &a.transitivity {
        Some(t) => obj(vec![
            ("transitive", json!(t.transitive)),
            ("almost_doubly_transitive", json!(t.almost_doubly)),
            ("doubly_transitive", json!(t.doubly)),
        ]),
        None => Value::Null,
    };
    obj(vec![
        ("degree", json!(a.n)),
        ("real_embeddings", json!(a.r)),
        ("complex_pairs", json!(a.s)),
        (
            "certified_polynomial",
            poly_json(a.integer_model.as_ref().unwrap_or(&a.f)),
        ),
        ("transitivity", transitivity),
        (
            "notes",
            Value::Array(a.notes.iter().map(|n| json!(n)).collect()),
        ),
    ])
}

fn analysis_certificates_json(a: &FieldAnalysis) -> Vec<Value> {
    let mut out = vec![obj(vec![
        ("kind", json!("irreducibility")),
        ("certificate", certificate_json(&a.irreducibility)),
    ])];
    if let Some(t) = &a.transitivity {
        out.push(obj(vec![
            ("kind", json!("real_root_count")),
            ("sturm_count", json!(t.real_roots)),
        ]));
        if let Some(ev) = &t.almost_doubly_evidence {
            out.push(almost_doubly_json(ev));
        }
        out.push(doubly_json(&t.doubly_evidence));
    }
    out
}

fn endo_degree_json(d: &EndoDegree) -> Value {
    match d {
        EndoDegree::One => json!("1"),
        EndoDegree::G => json!("g"),
        EndoDegree::TwoG => json!("2g"),
        EndoDegree::Incompatible { violated } => obj(vec![("incompatible", json!(violated))]),
    }
}

pub fn classification_json(c: &TorusClassification) -> Value {
    obj(vec![
        ("g", json!(c.g)),
        ("endo_degree", endo_degree_json(&c.endo_degree)),
        ("aut_rank", json!(c.aut_rank)),
        (
            "aut_structure",
            json!(format!("Z^{} x {{+1,-1}}", c.aut_rank)),
        ),
        (
            "hodge_group",
            c.hodge_group
                .as_ref()
                .map(|h| json!(h.to_string()))
                .unwrap_or(Value::Null),
        ),
        (
            "primitivity",
            c.constraints
                .primitivity
                .map(|p| json!(p.to_string()))
                .unwrap_or(Value::Null),
        ),
        (
            "purely_imaginary",
            c.constraints
                .purely_imaginary
                .map(|b| json!(b))
                .unwrap_or(Value::Null),
        ),
        (
            "subfield_note",
            c.constraints
                .subfield_note
                .as_ref()
                .map(|s| json!(s))
                .unwrap_or(Value::Null),
        ),
        ("two_simple", json!(c.constraints.two_simple.to_string())),
        (
            "notes",
            Value::Array(c.constraints.notes.iter().map(|n| json!(n)).collect()),
        ),
    ])
}

#[derive(Debug, Clone, Copy)]
pub struct CliConfig {
    pub max_degree: usize,
    pub prime_budget: usize,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            max_degree: ttl_core::galois::DEFAULT_DEGREE_BOUND,
            prime_budget: ttl_core::galois::DEFAULT_PRIME_BUDGET,
        }
    }
}

impl CliConfig {
    pub fn analysis(&self) -> AnalysisConfig {
        let default = ReportConfig::default();
        // raising the degree bound must also admit the ordered-pair
        // resolvent of degree n(n−1) into the factorization fallback
        let factor_degree_bound = default
            .factor_degree_bound
            .max(self.max_degree * self.max_degree.saturating_sub(1));
        AnalysisConfig {
            report: ReportConfig {
                max_degree: self.max_degree,
                prime_budget: self.prime_budget,
                factor_degree_bound,
            },
        }
    }
}

/// `ttl analyze POLY [--g G]`
pub fn report_analyze(f: &Poly, g: Option<usize>, config: &CliConfig) -> Result<Value, CliError> {
    let analysis = torus::analyze_field_with(f, &config.analysis()).map_err(CliError::from)?;
    let mut results = analysis_results_json(&analysis);
    let map = results.as_object_mut().unwrap();
    match g {
        Some(2) => {
            map.insert(
                "g2_note".into(),
                json!("every 2-dimensional complex torus is 2-simple"),
            );
        }
        Some(gv) => {
            let class =
                torus::classify_torus(gv, FieldInput::Field(&analysis)).map_err(CliError::from)?;
            map.insert("classification".into(), classification_json(&class));
        }
        None => {}
    }
    let inputs = obj(vec![
        ("poly", poly_json(f)),
        ("g", g.map(|v| json!(v)).unwrap_or(Value::Null)),
    ]);
    Ok(report(
        "analyze",
        inputs,
        results,
        analysis_certificates_json(&analysis),
    ))
}

/// `ttl synthesize --n N --r R --s S`
pub fn report_synthesize_nrs(
    n: usize,
    r: usize,
    s: usize,
    config: &CliConfig,
) -> Result<Value, CliError> {
    let synth = torus::synthesize_field_with(
        n,
        r,
        s,
        &torus::SynthesisConfig::default(),
        &config.analysis(),
    )
    .map_err(CliError::from)?;
    let results = obj(vec![
        ("poly", poly_json(&synth.f)),
        ("scale", json!(synth.scale.to_string())),
        ("attempts", json!(synth.attempts)),
        ("analysis", analysis_results_json(&synth.analysis)),
    ]);
    let inputs = obj(vec![("n", json!(n)), ("r", json!(r)), ("s", json!(s))]);
    Ok(report(
        "synthesize",
        inputs,
        results,
        analysis_certificates_json(&synth.analysis),
    ))
}

/// `ttl synthesize --g G --d D`
pub fn report_synthesize_gd(g: usize, d: i64, config: &CliConfig) -> Result<Value, CliError> {
    let (r, s) = torus::aut_rank_to_signature(g, d).map_err(CliError::from)?;
    let synth = torus::synthesize_field_with(
        g,
        r,
        s,
        &torus::SynthesisConfig::default(),
        &config.analysis(),
    )
    .map_err(CliError::from)?;
    let class =
        torus::classify_torus(g, FieldInput::Field(&synth.analysis)).map_err(CliError::from)?;
    let results = obj(vec![
        ("poly", poly_json(&synth.f)),
        ("signature", json!([r, s])),
        ("scale", json!(synth.scale.to_string())),
        ("attempts", json!(synth.attempts)),
        ("analysis", analysis_results_json(&synth.analysis)),
        ("classification", classification_json(&class)),
    ]);
    let inputs = obj(vec![("g", json!(g)), ("d", json!(d))]);
    Ok(report(
        "synthesize",
        inputs,
        results,
        analysis_certificates_json(&synth.analysis),
    ))
}

/// `ttl hodge --g G --degree N --r R --s S`
pub fn report_hodge(g: usize, degree: usize, r: usize, s: usize) -> Result<Value, CliError> {
    let outcome = torus::enumerate_multiplicity_vectors(g, degree, r, s).map_err(CliError::from)?;
    let trichotomy_note = if degree == 1 || degree == g || degree == 2 * g {
        Value::Null
    } else {
        json!(format!(
            "degree {degree} is incompatible with the endomorphism trichotomy {{1, {g}, {}}}",
            2 * g
        ))
    };
    let results = match outcome {
        EnumerationOutcome::Vectors(vs) => {
            let rows: Vec<Value> = vs
                .iter()
                .map(|v| {
                    obj(vec![
                        (
                            "real_entries",
                            Value::Array(v.real_entries.iter().map(|&e| json!(e)).collect()),
                        ),
                        (
                            "pair_entries",
                            Value::Array(
                                v.pair_entries.iter().map(|&(a, b)| json!([a, b])).collect(),
                            ),
                        ),
                        ("h20_dim", json!(v.h20_dim)),
                        ("two_simple_compatible", json!(v.two_simple_compatible)),
                        (
                            "ruled_out",
                            v.ruled_out
                                .as_ref()
                                .map(|m| json!(m))
                                .unwrap_or(Value::Null),
                        ),
                    ])
                })
                .collect();
            obj(vec![
                ("d_e", json!(2 * g / degree)),
                ("count", json!(rows.len())),
                ("vectors", Value::Array(rows)),
                ("trichotomy_note", trichotomy_note),
            ])
        }
        EnumerationOutcome::NoVector { reason } => obj(vec![
            ("d_e", json!(2 * g / degree)),
            ("count", json!(0)),
            ("no_vector_reason", json!(reason)),
            ("trichotomy_note", trichotomy_note),
        ]),
    };
    let inputs = obj(vec![
        ("g", json!(g)),
        ("degree", json!(degree)),
        ("r", json!(r)),
        ("s", json!(s)),
    ]);
    Ok(report("hodge", inputs, results, vec![]))
}

/// Builds the group a `--group`/`--affine` spec describes.
pub fn group_from_spec(spec: &str, n: usize) -> Result<PermGroup, CliError> {
    let mut gens = vec![];
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        gens.push(permgrp::Perm::parse_cycles(part, n).map_err(CliError::from)?);
    }
    if gens.is_empty() {
        return Err(CliError::Usage("no generators given".into()));
    }
    permgrp::group_closure(&gens, permgrp::DEFAULT_MAX_ORDER).map_err(CliError::from)
}

/// `ttl h2 --g G --case CASE --group "(0 1 2)"`
pub fn report_h2(g: usize, case: H2Case, group_spec: &str) -> Result<Value, CliError> {
    let points = match case {
        H2Case::DegreeG => g,
        H2Case::Degree2G => 2 * g,
    };
    let group = group_from_spec(group_spec, points)?;
    let dec = torus::h2_decomposition(g, case, &group).map_err(CliError::from)?;
    let results = obj(vec![
        ("case", json!(case.to_string())),
        ("group_order", json!(group.order())),
        ("invariant_dim", json!(dec.invariant_dim)),
        (
            "moving_summands",
            Value::Array(dec.moving_summands.iter().map(|&d| json!(d)).collect()),
        ),
        ("total_dim", json!(dec.total_dim)),
        ("two_simple", json!(dec.two_simple_verdict)),
    ]);
    let inputs = obj(vec![
        ("g", json!(g)),
        ("case", json!(case.to_string())),
        ("group", json!(group_spec)),
    ]);
    Ok(report("h2", inputs, results, vec![]))
}

/// `ttl permgrp --affine Q` or `ttl permgrp --generators SPEC --n N`
pub fn report_permgrp(
    affine: Option<u64>,
    generators: Option<(&str, usize)>,
) -> Result<Value, CliError> {
    let (group, inputs) = match (affine, generators) {
        (Some(q), None) => {
            let g = permgrp::affine_half_group(q).map_err(CliError::from)?;
            (
                g,
                obj(vec![
                    ("affine_q", json!(q)),
                    ("generators", Value::Null),
                    ("n", Value::Null),
                ]),
            )
        }
        (None, Some((spec, n))) => {
            let g = group_from_spec(spec, n)?;
            (
                g,
                obj(vec![
                    ("affine_q", Value::Null),
                    ("generators", json!(spec)),
                    ("n", json!(n)),
                ]),
            )
        }
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --affine or --generators/--n".into(),
            ))
        }
    };
    let profile = permgrp::transitivity_profile(&group).map_err(CliError::from)?;
    let results = obj(vec![
        ("n", json!(group.n())),
        ("order", json!(profile.order)),
        ("transitive", json!(profile.transitive)),
        ("two_set_transitive", json!(profile.two_set_transitive)),
        ("two_transitive", json!(profile.two_transitive)),
        (
            "primitive_witness",
            json!(profile.primitive_witness.to_string()),
        ),
        (
            "point_orbit_sizes",
            Value::Array(
                profile
                    .point_orbit_sizes
                    .iter()
                    .map(|&s| json!(s))
                    .collect(),
            ),
        ),
        (
            "two_set_orbit_sizes",
            Value::Array(
                profile
                    .two_set_orbit_sizes
                    .iter()
                    .map(|&s| json!(s))
                    .collect(),
            ),
        ),
        (
            "ordered_pair_orbit_sizes",
            Value::Array(
                profile
                    .ordered_pair_orbit_sizes
                    .iter()
                    .map(|&s| json!(s))
                    .collect(),
            ),
        ),
        (
            "generators",
            Value::Array(
                group
                    .generators()
                    .iter()
                    .map(|p| json!(p.cycle_string()))
                    .collect(),
            ),
        ),
    ]);
    Ok(report("permgrp", inputs, results, vec![]))
}

/// `ttl lie minuscule --type T --rank L`
pub fn report_lie_minuscule(type_label: char, rank: usize) -> Result<Value, CliError> {
    let table = lie::minuscule_dims(type_label, rank).map_err(CliError::from)?;
    let rows: Vec<Value> = table
        .iter()
        .map(|(w, d)| obj(vec![("weight", json!(w)), ("dim", json!(d.to_string()))]))
        .collect();
    let inputs = obj(vec![
        ("type", json!(type_label.to_string())),
        ("rank", json!(rank)),
    ]);
    Ok(report(
        "lie.minuscule",
        inputs,
        obj(vec![("table", Value::Array(rows))]),
        vec![],
    ))
}

/// `ttl lie weyl --rank L --weight c1,...,cl`
pub fn report_lie_weyl(rank: usize, coeffs: &[u64]) -> Result<Value, CliError> {
    let w = lie::WeightA::new(rank, coeffs.to_vec()).map_err(CliError::from)?;
    let dim = lie::weyl_dim_a(rank, &w).map_err(CliError::from)?;
    let inputs = obj(vec![
        ("rank", json!(rank)),
        (
            "weight",
            Value::Array(coeffs.iter().map(|&c| json!(c)).collect()),
        ),
    ]);
    Ok(report(
        "lie.weyl",
        inputs,
        obj(vec![
            ("weight_label", json!(w.label())),
            ("dim", json!(dim.to_string())),
        ]),
        vec![],
    ))
}

/// `ttl lie wedge2-scan --m-max M`
pub fn report_lie_wedge2_scan(m_max: usize) -> Result<Value, CliError> {
    let scan = lie::sl_wedge2_verdict_scan(m_max).map_err(CliError::from)?;
    let rows: Vec<Value> = scan
        .rows
        .iter()
        .map(|r| {
            obj(vec![
                ("m", json!(r.m)),
                ("two_g", json!(r.two_g.to_string())),
                ("g", json!(r.g.to_string())),
                ("verdict", json!(r.verdict.to_string())),
                ("dimension_check", json!(r.dimension_check)),
            ])
        })
        .collect();
    let inputs = obj(vec![("m_max", json!(m_max))]);
    Ok(report(
        "lie.wedge2_scan",
        inputs,
        obj(vec![
            ("rows", Value::Array(rows)),
            ("forced_m", json!(scan.forced_m)),
            ("forced_g", json!(scan.forced_g.to_string())),
        ]),
        vec![],
    ))
}

/// `ttl lie bor-tabs --g G [--relax-power-guard]`
pub fn report_lie_bor_tabs(g: usize, relax_guard: bool) -> Result<Value, CliError> {
    let candidates = if relax_guard {
        lie::bor_tabs_enumerate_unguarded(g).map_err(CliError::from)?
    } else {
        lie::bor_tabs_enumerate(g).map_err(CliError::from)?
    };
    let rows: Vec<Value> = candidates
        .iter()
        .map(|c| {
            obj(vec![
                ("type", json!(c.type_label.to_string())),
                ("rank", json!(c.rank)),
                ("representation", json!(c.representation.to_string())),
            ])
        })
        .collect();
    let inputs = obj(vec![
        ("g", json!(g)),
        ("relax_power_guard", json!(relax_guard)),
    ]);
    Ok(report(
        "lie.bor_tabs",
        inputs,
        obj(vec![("candidates", Value::Array(rows))]),
        vec![],
    ))
}

/// `ttl lie spectrum --p P --q Q --j J` (canonical eigenvalues a = q, b = −p)
pub fn report_lie_spectrum(p: usize, q: usize, j: usize) -> Result<Value, CliError> {
    let a = Rat::from_integer(num_bigint::BigInt::from(q as i64));
    let b = Rat::from_integer(num_bigint::BigInt::from(-(p as i64)));
    let spec = lie::subset_sum_spectrum(p, q, j, &a, &b).map_err(CliError::from)?;
    let rows: Vec<Value> = spec
        .spectrum
        .iter()
        .map(|(v, m)| {
            obj(vec![
                ("value", rat_json(v)),
                ("multiplicity", json!(m.to_string())),
            ])
        })
        .collect();
    let inputs = obj(vec![("p", json!(p)), ("q", json!(q)), ("j", json!(j))]);
    Ok(report(
        "lie.spectrum",
        inputs,
        obj(vec![
            ("a", rat_json(&a)),
            ("b", rat_json(&b)),
            ("values", Value::Array(rows)),
            ("total", json!(spec.total_multiplicity().to_string())),
        ]),
        vec![],
    ))
}

/// `ttl lie balanced --p P --q Q --j J`
pub fn report_lie_balanced(p: usize, q: usize, j: usize) -> Result<Value, CliError> {
    let check = lie::two_value_balanced_check(p, q, j).map_err(CliError::from)?;
    let inputs = obj(vec![("p", json!(p)), ("q", json!(q)), ("j", json!(j))]);
    Ok(report(
        "lie.balanced",
        inputs,
        obj(vec![
            ("l", json!(check.l)),
            ("balanced", json!(check.balanced)),
            (
                "forced_relation",
                check
                    .forced_relation
                    .as_ref()
                    .map(|s| json!(s))
                    .unwrap_or(Value::Null),
            ),
        ]),
        vec![],
    ))
}

/// `ttl lie sp-wedge2 --g G`
pub fn report_lie_sp_wedge2(g: usize) -> Result<Value, CliError> {
    let (irr, triv) = lie::sp_wedge2_dims(g).map_err(CliError::from)?;
    let inputs = obj(vec![("g", json!(g))]);
    Ok(report(
        "lie.sp_wedge2",
        inputs,
        obj(vec![
            ("irreducible_dim", json!(irr.to_string())),
            ("trivial_dim", json!(triv.to_string())),
        ]),
        vec![],
    ))
}

/// Renders the JSON payload as indented text; same data, no second code path.
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    render_value(value, 0, None, &mut out);
    out
}

fn render_value(value: &Value, indent: usize, key: Option<&str>, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            if let Some(k) = key {
                out.push_str(&format!("{pad}{k}:\n"));
            }
            for (k, v) in map {
                render_value(v, indent + usize::from(key.is_some()), Some(k), out);
            }
        }
        Value::Array(items) => {
            let scalars = items.iter().all(|i| !i.is_object() && !i.is_array());
            if scalars {
                let rendered: Vec<String> = items.iter().map(render_scalar).collect();
                out.push_str(&format!(
                    "{pad}{}: [{}]\n",
                    key.unwrap_or("-"),
                    rendered.join(", ")
                ));
            } else {
                out.push_str(&format!("{pad}{}:\n", key.unwrap_or("-")));
                for item in items {
                    render_value(item, indent + 1, Some("-"), out);
                }
            }
        }
        scalar => {
            out.push_str(&format!(
                "{pad}{}: {}\n",
                key.unwrap_or("-"),
                render_scalar(scalar)
            ));
        }
    }
}

fn render_scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

/// Stable serialization used everywhere a report leaves the process.
pub fn to_stable_json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}
