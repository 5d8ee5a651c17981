//! Acceptance suite: one test per criterion, each printing a pass line with
//! its measured runtime. Reports emitted along the way are collected and
//! re-verified wholesale by criterion 11.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use ttl_cli::report::{self, CliConfig};
use ttl_cli::verify::verify_report;
use ttl_core::exact::Poly;
use ttl_core::lie;
use ttl_core::permgrp::{
    affine_half_group, group_closure, transitivity_profile, Perm, PermGroup, DEFAULT_MAX_ORDER,
};
use ttl_core::torus::{self, EnumerationOutcome, H2Case};

fn p(coeffs: &[i64]) -> Poly {
    Poly::from_ints(coeffs)
}

/// 20 irreducible cubics: ten with signature (1,1) and ten totally real.
fn cubic_suite() -> Vec<(Poly, usize)> {
    vec![
        (p(&[-2, 0, 0, 1]), 1),
        (p(&[-3, 0, 0, 1]), 1),
        (p(&[-5, 0, 0, 1]), 1),
        (p(&[-7, 0, 0, 1]), 1),
        (p(&[-11, 0, 0, 1]), 1),
        (p(&[-2, -2, 0, 1]), 1),
        (p(&[-3, -3, 0, 1]), 1),
        (p(&[-1, 1, 0, 1]), 1),
        (p(&[-1, 2, 0, 1]), 1),
        (p(&[1, 1, 0, 1]), 1),
        (p(&[-1, -3, 0, 1]), 3),
        (p(&[1, -3, 0, 1]), 3),
        (p(&[-1, -4, 0, 1]), 3),
        (p(&[1, -4, 0, 1]), 3),
        (p(&[2, -4, 0, 1]), 3),
        (p(&[7, -7, 0, 1]), 3),
        (p(&[1, -2, -1, 1]), 3),
        (p(&[-1, -2, 1, 1]), 3),
        (p(&[2, -6, 0, 1]), 3),
        (p(&[1, -5, 0, 1]), 3),
    ]
}

/// Deterministic random permutation of n points.
fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        images.swap(i, j);
    }
    Perm::from_images(images).unwrap()
}

/// ≥ 500 subgroups of S_n (n ≤ 6) from random generator pairs, fixed seed.
fn random_subgroup_sample() -> &'static Vec<PermGroup> {
    static SAMPLE: OnceLock<Vec<PermGroup>> = OnceLock::new();
    SAMPLE.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7707);
        let mut out = vec![];
        for round in 0..550 {
            let n = 3 + (round % 4); // 3..=6
            let a = random_perm(&mut rng, n);
            let b = random_perm(&mut rng, n);
            out.push(group_closure(&[a, b], DEFAULT_MAX_ORDER).unwrap());
        }
        out
    })
}

/// All (n, r, s) with r + 2s = n for n in 3..=6.
fn signature_targets() -> Vec<(usize, usize, usize)> {
    let mut out = vec![];
    for n in 3..=6usize {
        for s in 0..=n / 2 {
            out.push((n, n - 2 * s, s));
        }
    }
    out
}

const PROFILE_TARGETS: [(usize, i64); 8] = [
    (3, 1),
    (3, 2),
    (4, 1),
    (4, 2),
    (4, 3),
    (5, 2),
    (5, 3),
    (5, 4),
];

/// Synthesis reports, built once and reused by criteria 4, 5 and 11.
fn synthesis_reports() -> &'static Vec<Value> {
    static REPORTS: OnceLock<Vec<Value>> = OnceLock::new();
    REPORTS.get_or_init(|| {
        let config = CliConfig::default();
        let mut out = vec![];
        for (n, r, s) in signature_targets() {
            out.push(report::report_synthesize_nrs(n, r, s, &config).unwrap());
        }
        for (g, d) in PROFILE_TARGETS {
            out.push(report::report_synthesize_gd(g, d, &config).unwrap());
        }
        out
    })
}

/// Analyze reports for the cubic suite, built once (criteria 1 and 11).
fn cubic_reports() -> &'static Vec<Value> {
    static REPORTS: OnceLock<Vec<Value>> = OnceLock::new();
    REPORTS.get_or_init(|| {
        let config = CliConfig::default();
        cubic_suite()
            .iter()
            .map(|(f, _)| report::report_analyze(f, Some(3), &config).unwrap())
            .collect()
    })
}

fn check(cond: bool, label: &str) {
    assert!(cond, "criterion check failed: {label}");
}

fn pass(criterion: usize, detail: &str, elapsed: Duration) {
    println!(
        "criterion {criterion}: PASS — {detail} ({:.2}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_01_cubic_universality() {
    let start = Instant::now();
    let reports = cubic_reports();
    check(reports.len() == 20, "20 cubics analyzed");
    let mut real_counts = vec![];
    for ((f, expected_r), report) in cubic_suite().iter().zip(reports.iter()) {
        let per = Instant::now();
        let analysis = torus::analyze_field(f).unwrap();
        let t = analysis.transitivity.as_ref().unwrap();
        check(t.almost_doubly, &format!("{f} is almost doubly transitive"));
        check(analysis.r == *expected_r, &format!("{f} signature"));
        check(
            per.elapsed() < Duration::from_secs(1),
            &format!("{f} analyzed in under 1 s"),
        );
        real_counts.push(analysis.r);
        let tr = &report["results"]["transitivity"];
        check(
            tr["almost_doubly_transitive"] == Value::Bool(true),
            "report agrees",
        );
    }
    check(real_counts.contains(&1), "suite mixes r = 1");
    check(real_counts.contains(&3), "suite mixes r = 3");
    pass(
        1,
        "20 irreducible cubics, all almost doubly transitive",
        start.elapsed(),
    );
}

#[test]
fn criterion_02_affine_counterexample() {
    let start = Instant::now();
    for (q, order) in [(3u64, 3usize), (7, 21), (11, 55)] {
        let g = affine_half_group(q).unwrap();
        let profile = transitivity_profile(&g).unwrap();
        check(
            profile.order == order,
            &format!("affine({q}) order {order}"),
        );
        check(profile.transitive, "transitive");
        check(profile.two_set_transitive, "transitive on 2-subsets");
        check(!profile.two_transitive, "not doubly transitive");
        let n = q as usize;
        check(
            profile.two_set_orbit_sizes == vec![n * (n - 1) / 2],
            &format!("single 2-subset orbit of size {}", n * (n - 1) / 2),
        );
        check(
            profile.ordered_pair_orbit_sizes.iter().sum::<usize>() == n * (n - 1),
            "ordered pairs total",
        );
        check(
            profile.ordered_pair_orbit_sizes.len() >= 2,
            &format!(
                "order {order} < {} ordered pairs forces ≥ 2 orbits",
                n * (n - 1)
            ),
        );
    }
    check(start.elapsed() < Duration::from_secs(1), "under 1 s");
    pass(2, "affine half groups for q in {3, 7, 11}", start.elapsed());
}

#[test]
fn criterion_03_even_order_parity() {
    let start = Instant::now();
    let sample = random_subgroup_sample();
    check(sample.len() >= 500, "at least 500 sampled subgroups");
    let mut premise_hits = 0;
    for group in sample {
        if group.n() < 3 {
            continue;
        }
        let profile = transitivity_profile(group).unwrap();
        if profile.two_set_transitive && profile.order.is_multiple_of(2) {
            premise_hits += 1;
            check(
                profile.two_transitive,
                "almost doubly transitive with even order, but not doubly transitive",
            );
        }
    }
    check(premise_hits > 50, "the premise is exercised nontrivially");
    check(start.elapsed() < Duration::from_secs(30), "under 30 s");
    pass(
        3,
        &format!(
            "{} random subgroups, {premise_hits} with the even-order premise, no counterexample",
            sample.len()
        ),
        start.elapsed(),
    );
}

#[test]
fn criterion_04_synthesis() {
    let start = Instant::now();
    let reports = synthesis_reports();
    let signatures = signature_targets();
    for (i, (n, r, s)) in signatures.iter().enumerate() {
        let per = Instant::now();
        let synth = torus::synthesize_field(*n, *r, *s).unwrap();
        check(
            synth.analysis.n == *n && synth.analysis.r == *r && synth.analysis.s == *s,
            &format!("synthesis re-analysis certifies exactly ({n}, {r}, {s})"),
        );
        check(
            synth.analysis.transitivity.as_ref().unwrap().doubly,
            "doubly transitive",
        );
        check(
            per.elapsed() < Duration::from_secs(10),
            &format!("({n}, {r}, {s}) synthesized in under 10 s"),
        );
        let rep = &reports[i];
        check(
            rep["results"]["analysis"]["degree"] == *n as u64,
            "report degree echo",
        );
    }
    for (i, (g, d)) in PROFILE_TARGETS.iter().enumerate() {
        let (_, class) = torus::synthesize_torus_profile(*g, *d).unwrap();
        check(
            class.aut_rank == *d as usize,
            &format!("profile ({g}, {d}) yields Aut rank exactly {d}"),
        );
        let rep = &reports[signatures.len() + i];
        check(
            rep["results"]["classification"]["aut_rank"] == *d,
            "report rank echo",
        );
    }
    pass(
        4,
        "12 signatures at n = 3..6 plus 8 (g, d) profiles, all certified",
        start.elapsed(),
    );
}

#[test]
fn criterion_05_resolvent_vs_oracle() {
    let start = Instant::now();
    let mut disagreements = 0;
    let mut compared = 0;
    let mut compare = |report: &ttl_core::galois::TransitivityReport, gens: &[Perm]| {
        let group = group_closure(gens, DEFAULT_MAX_ORDER).unwrap();
        let oracle = transitivity_profile(&group).unwrap();
        if report.transitive != oracle.transitive
            || report.almost_doubly != oracle.two_set_transitive
            || report.doubly != oracle.two_transitive
        {
            disagreements += 1;
        }
        compared += 1;
    };
    let perm = |v: &[usize]| Perm::from_images(v.to_vec()).unwrap();

    // known-group suite
    let s3 = torus::analyze_field(&p(&[-2, 0, 0, 1])).unwrap();
    compare(
        s3.transitivity.as_ref().unwrap(),
        &[perm(&[1, 0, 2]), perm(&[1, 2, 0])],
    );
    let c3 = torus::analyze_field(&p(&[-1, -3, 0, 1])).unwrap();
    compare(c3.transitivity.as_ref().unwrap(), &[perm(&[1, 2, 0])]);
    let quintic = torus::analyze_field(&p(&[-2, 0, 0, 0, 0, 1])).unwrap();
    compare(
        quintic.transitivity.as_ref().unwrap(),
        &[perm(&[1, 2, 3, 4, 0]), perm(&[0, 2, 4, 1, 3])],
    );

    // ten synthesized doubly transitive fields against 2-transitive actions
    for (n, r, s) in signature_targets().into_iter().take(10) {
        let synth = torus::synthesize_field(n, r, s).unwrap();
        let mut transposition: Vec<usize> = (0..n).collect();
        transposition.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        compare(
            synth.analysis.transitivity.as_ref().unwrap(),
            &[perm(&transposition), perm(&cycle)],
        );
    }
    check(compared == 13, "13 comparisons ran");
    check(disagreements == 0, "zero disagreements with the oracle");
    pass(
        5,
        "galois verdicts match the permutation oracle on all 13 fields",
        start.elapsed(),
    );
}

#[test]
fn criterion_06_hodge_trichotomy() {
    let start = Instant::now();
    for g in 3..=6usize {
        for degree in 1..=2 * g {
            if (2 * g) % degree != 0 {
                continue;
            }
            for s in 0..=degree / 2 {
                let r = degree - 2 * s;
                let out = torus::enumerate_multiplicity_vectors(g, degree, r, s).unwrap();
                let vectors = match out {
                    EnumerationOutcome::Vectors(v) => v,
                    EnumerationOutcome::NoVector { .. } => continue,
                };
                let full = (g * (g - 1) / 2) as u64;
                for v in &vectors {
                    if v.h20_dim == full {
                        let imaginary_quadratic = degree == 2 && r == 0 && s == 1;
                        check(
                            degree == 1 || imaginary_quadratic,
                            &format!(
                                "full H^(2,0) only in the degree-1 branch (g={g}, degree={degree})"
                            ),
                        );
                        if imaginary_quadratic && g >= 3 {
                            check(
                                v.ruled_out.is_some(),
                                "imaginary-quadratic full pattern carries its exclusion for g ≥ 3",
                            );
                        }
                    }
                    if v.h20_dim == 0 {
                        check(
                            v.d_e == 1 || v.d_e == 2,
                            &format!("h20 = 0 forces d_E in {{1,2}} (got {})", v.d_e),
                        );
                    }
                }
            }
        }
    }
    check(start.elapsed() < Duration::from_secs(5), "under 5 s");
    pass(
        6,
        "exhaustive multiplicity enumeration for g ≤ 6 over all divisor degrees",
        start.elapsed(),
    );
}

/// Deterministic transitive samples on n points: cyclic, dihedral, full
/// symmetric, and random transitive subgroups.
fn transitive_samples(n: usize, count: usize, seed: u64) -> Vec<PermGroup> {
    let mut out = vec![];
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflect: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    let mut transposition: Vec<usize> = (0..n).collect();
    transposition.swap(0, 1);
    let perm = |v: &[usize]| Perm::from_images(v.to_vec()).unwrap();
    out.push(group_closure(&[perm(&cycle)], DEFAULT_MAX_ORDER).unwrap());
    out.push(group_closure(&[perm(&cycle), perm(&reflect)], DEFAULT_MAX_ORDER).unwrap());
    out.push(group_closure(&[perm(&cycle), perm(&transposition)], DEFAULT_MAX_ORDER).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        let a = random_perm(&mut rng, n);
        let b = random_perm(&mut rng, n);
        let g = group_closure(&[a, b], DEFAULT_MAX_ORDER).unwrap();
        let profile = transitivity_profile(&g).unwrap();
        if profile.transitive {
            out.push(g);
        }
    }
    out
}

#[test]
fn criterion_07_h2_dimension_identities() {
    let start = Instant::now();
    for g in 3..=50u64 {
        check(
            g + 4 * (g * (g - 1) / 2) == (2 * g) * (2 * g - 1) / 2,
            "g + 4·C(g,2) = C(2g,2)",
        );
    }
    for g in 3..=8usize {
        for group in transitive_samples(g, 10, g as u64) {
            let profile = transitivity_profile(&group).unwrap();
            let dec = torus::h2_decomposition(g, H2Case::DegreeG, &group).unwrap();
            let expected: Vec<u64> = profile
                .two_set_orbit_sizes
                .iter()
                .map(|&s| 4 * s as u64)
                .collect();
            check(
                dec.moving_summands == expected,
                "summands are 4·orbit sizes",
            );
            check(
                dec.invariant_dim + dec.moving_summands.iter().sum::<u64>()
                    == (2 * g as u64) * (2 * g as u64 - 1) / 2,
                "degree-g totals",
            );
        }
        // structured degree-2g samples: cyclic and dihedral on 2g points
        let n = 2 * g;
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let reflect: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        let perm = |v: &[usize]| Perm::from_images(v.to_vec()).unwrap();
        for gens in [vec![perm(&cycle)], vec![perm(&cycle), perm(&reflect)]] {
            let group = group_closure(&gens, DEFAULT_MAX_ORDER).unwrap();
            let profile = transitivity_profile(&group).unwrap();
            let dec = torus::h2_decomposition(g, H2Case::Degree2G, &group).unwrap();
            let expected: Vec<u64> = profile
                .two_set_orbit_sizes
                .iter()
                .map(|&s| s as u64)
                .collect();
            check(dec.moving_summands == expected, "summands are orbit sizes");
            check(
                dec.total_dim == (2 * g as u64) * (2 * g as u64 - 1) / 2,
                "degree-2g totals",
            );
        }
    }
    // single-orbit ⇔ 2-simple on the known-group suite
    let perm = |v: &[usize]| Perm::from_images(v.to_vec()).unwrap();
    let known: Vec<(usize, H2Case, Vec<Perm>, bool)> = vec![
        (3, H2Case::DegreeG, vec![perm(&[1, 2, 0])], true), // cyclic cubic
        (
            3,
            H2Case::DegreeG,
            vec![perm(&[1, 0, 2]), perm(&[1, 2, 0])],
            true,
        ), // S₃ cubic
        (
            7,
            H2Case::DegreeG,
            affine_half_group(7).unwrap().generators().to_vec(),
            true,
        ),
        (3, H2Case::Degree2G, vec![perm(&[1, 2, 3, 4, 5, 0])], false), // regular C₆
        (
            3,
            H2Case::Degree2G,
            vec![perm(&[1, 0, 2, 3, 4, 5]), perm(&[1, 2, 3, 4, 5, 0])],
            true,
        ), // S₆ is 2-transitive
    ];
    for (g, case, gens, expected) in known {
        let group = group_closure(&gens, DEFAULT_MAX_ORDER).unwrap();
        let dec = torus::h2_decomposition(g, case, &group).unwrap();
        check(
            dec.two_simple_verdict == expected,
            &format!("single-orbit verdict for g={g} {case}"),
        );
    }
    pass(
        7,
        "identities for g ≤ 50; orbit totals on sampled groups for g ≤ 8",
        start.elapsed(),
    );
}

#[test]
fn criterion_08_lie_numbers() {
    let start = Instant::now();
    let w3 = lie::WeightA::fundamental(5, 3).unwrap();
    check(
        lie::weyl_dim_a(5, &w3).unwrap() == 20u32.into(),
        "dim V(ω₃) on A₅ is 20",
    );
    let adjointish = lie::WeightA::new(5, vec![0, 1, 0, 1, 0]).unwrap();
    check(
        lie::weyl_dim_a(5, &adjointish).unwrap() == 189u32.into(),
        "dim V(ω₄+ω₂) on A₅ is 189",
    );
    check(
        lie::binomial(20, 2) == 190u32.into(),
        "C(20,2) = 190 = 189 + 1",
    );
    for m in 2..=6 {
        let dec = lie::wedge2_omega_m_decomposition(m).unwrap();
        check(
            dec.dimension_check,
            &format!("plethysm dimension identity at m = {m}"),
        );
        if m == 6 {
            check(
                dec.dims.iter().sum::<num_bigint::BigUint>() == 426426u32.into(),
                "largest check C(924,2) = 426426",
            );
        }
    }
    let scan = lie::sl_wedge2_verdict_scan(6).unwrap();
    check(scan.forced_m == 3, "the simple-plus-trivial row is m = 3");
    check(scan.forced_g == 10u32.into(), "m = 3 reports g = 10");
    let other_rows = scan
        .rows
        .iter()
        .filter(|r| r.m >= 3 && r.verdict == lie::Wedge2Verdict::SimplePlusTrivial)
        .count();
    check(other_rows == 1, "no other simple-plus-trivial row");
    check(start.elapsed() < Duration::from_secs(10), "under 10 s");
    pass(8, "plethysm numbers pinned through m = 6", start.elapsed());
}

#[test]
fn criterion_09_bor_tabs_enumeration() {
    let start = Instant::now();
    use lie::{HodgeGroupCandidate, RepNote, TypeLabel};
    let g10 = lie::bor_tabs_enumerate(10).unwrap();
    check(
        g10 == vec![
            HodgeGroupCandidate {
                type_label: TypeLabel::A,
                rank: 19,
                representation: RepNote::Standard,
            },
            HodgeGroupCandidate {
                type_label: TypeLabel::C,
                rank: 10,
                representation: RepNote::Standard,
            },
            HodgeGroupCandidate {
                type_label: TypeLabel::D,
                rank: 10,
                representation: RepNote::Standard,
            },
            HodgeGroupCandidate {
                type_label: TypeLabel::A,
                rank: 5,
                representation: RepNote::ExteriorPower(3),
            },
        ],
        "bor_tabs(10) = {A₁₉, C₁₀, D₁₀, A₅(j=3)}",
    );
    let g3 = lie::bor_tabs_enumerate(3).unwrap();
    check(
        g3.contains(&HodgeGroupCandidate {
            type_label: TypeLabel::A,
            rank: 3,
            representation: RepNote::ExteriorPower(2),
        }),
        "bor_tabs(3) includes A₃ with j = 2",
    );

    // independent perfect-power oracle
    let is_power = |x: u64| -> bool {
        for a in 2..=x {
            if a * a > x {
                break;
            }
            let mut pw = a * a;
            loop {
                if pw == x {
                    return true;
                }
                if pw > x / a {
                    break;
                }
                pw *= a;
            }
        }
        false
    };
    for g in 3..=64usize {
        let guard_fired = matches!(
            lie::bor_tabs_enumerate(g),
            Err(lie::LieError::PowerGuard(_))
        );
        check(
            guard_fired == is_power(2 * g as u64),
            &format!("PowerGuard fires exactly when 2g is a perfect power (g = {g})"),
        );
        if !guard_fired {
            let cands = lie::bor_tabs_enumerate(g).unwrap();
            check(
                cands
                    .iter()
                    .filter(|c| c.representation == RepNote::Standard)
                    .count()
                    == 3,
                "always A_{2g−1}, C_g, D_g and nothing of type B",
            );
        }
    }
    check(start.elapsed() < Duration::from_secs(5), "under 5 s");
    pass(
        9,
        "candidate enumeration exhaustive for g ≤ 64",
        start.elapsed(),
    );
}

#[test]
fn criterion_10_spectrum_equivalence() {
    let start = Instant::now();
    let mut checked = 0;
    for total in 4..=12usize {
        for pp in 1..total {
            let qq = total - pp;
            let l = total - 1;
            for j in 2..l {
                let verdict = lie::two_value_balanced_check(pp, qq, j).unwrap();

                // independent brute force: enumerate all j-subsets of the
                // explicit eigenvalue multiset {q × p-times, −p × q-times}
                let eigen: Vec<i64> = std::iter::repeat_n(qq as i64, pp)
                    .chain(std::iter::repeat_n(-(pp as i64), qq))
                    .collect();
                let mut values: BTreeMap<i64, u64> = BTreeMap::new();
                let mut subset: Vec<usize> = (0..j).collect();
                loop {
                    let sum: i64 = subset.iter().map(|&i| eigen[i]).sum();
                    *values.entry(sum).or_insert(0) += 1;
                    let mut i = j;
                    let mut done = true;
                    while i > 0 {
                        i -= 1;
                        if subset[i] < total - (j - i) {
                            subset[i] += 1;
                            for k in i + 1..j {
                                subset[k] = subset[k - 1] + 1;
                            }
                            done = false;
                            break;
                        }
                    }
                    if done {
                        break;
                    }
                }
                let mults: Vec<u64> = values.values().copied().collect();
                let brute_balanced = mults.len() == 2 && mults[0] == mults[1];
                let closed_form = (pp == 1 || qq == 1) && l == 2 * j - 1;
                check(
                    verdict.balanced == brute_balanced,
                    &format!("spectrum vs brute force at (p,q,j) = ({pp},{qq},{j})"),
                );
                check(
                    verdict.balanced == closed_form,
                    &format!("balanced ⇔ (p=1 ∨ q=1) ∧ l = 2j−1 at ({pp},{qq},{j})"),
                );
                checked += 1;
            }
        }
    }
    check(checked > 200, "the exhaustive range is nontrivial");
    check(start.elapsed() < Duration::from_secs(10), "under 10 s");
    pass(
        10,
        &format!("{checked} (p, q, j) triples, zero mismatches"),
        start.elapsed(),
    );
}

/// Every report the other criteria emit, regenerated deterministically.
fn all_criterion_reports() -> Vec<Value> {
    let config = CliConfig::default();
    let mut out = vec![];

    // criterion 1: the cubic suite
    out.extend(cubic_reports().iter().cloned());

    // criterion 2: affine profiles
    for q in [3u64, 7, 11] {
        out.push(report::report_permgrp(Some(q), None).unwrap());
    }

    // criterion 3: a deterministic slice of the random-subgroup profiles
    for group in random_subgroup_sample().iter().step_by(20) {
        let spec: Vec<String> = group
            .generators()
            .iter()
            .map(|p| p.cycle_string())
            .collect();
        out.push(report::report_permgrp(None, Some((&spec.join(","), group.n()))).unwrap());
    }

    // criteria 4 and 5: synthesis
    out.extend(synthesis_reports().iter().cloned());

    // criterion 6: multiplicity enumerations
    for g in 3..=6usize {
        for degree in 1..=2 * g {
            if (2 * g) % degree != 0 {
                continue;
            }
            for s in 0..=degree / 2 {
                let r = degree - 2 * s;
                out.push(report::report_hodge(g, degree, r, s).unwrap());
            }
        }
    }

    // criterion 7: H² decompositions on the known suite
    out.push(report::report_h2(3, H2Case::DegreeG, "(0 1 2)").unwrap());
    out.push(report::report_h2(3, H2Case::DegreeG, "(0 1),(0 1 2)").unwrap());
    out.push(report::report_h2(3, H2Case::Degree2G, "(0 1 2 3 4 5)").unwrap());
    out.push(report::report_h2(3, H2Case::Degree2G, "(0 1),(0 1 2 3 4 5)").unwrap());
    out.push(report::report_h2(7, H2Case::DegreeG, "(0 1 2 3 4 5 6),(0 2 4 6 1 3 5)").unwrap());

    // criterion 8: plethysm scan and the Weyl numbers behind it
    out.push(report::report_lie_wedge2_scan(6).unwrap());
    out.push(report::report_lie_weyl(5, &[0, 0, 1, 0, 0]).unwrap());
    out.push(report::report_lie_weyl(5, &[0, 1, 0, 1, 0]).unwrap());
    out.push(report::report_lie_minuscule('A', 5).unwrap());
    out.push(report::report_lie_sp_wedge2(3).unwrap());

    // criterion 9: candidate enumerations for every non-guarded g ≤ 64
    for g in 3..=64usize {
        if !lie::is_perfect_power(2 * g as u64) {
            out.push(report::report_lie_bor_tabs(g, false).unwrap());
        }
    }
    out.push(report::report_lie_bor_tabs(4, true).unwrap());

    // criterion 10: spectrum and balance reports over the exhaustive range
    for total in 4..=12usize {
        for pp in 1..total {
            let qq = total - pp;
            for j in 2..total - 1 {
                out.push(report::report_lie_spectrum(pp, qq, j).unwrap());
                out.push(report::report_lie_balanced(pp, qq, j).unwrap());
            }
        }
    }

    let _ = config;
    out
}

#[test]
fn criterion_11_self_verification() {
    let start = Instant::now();
    let reports = all_criterion_reports();
    for report in &reports {
        verify_report(report).unwrap_or_else(|e| {
            panic!(
                "report for command {} failed verification: {e}",
                report["command"]
            )
        });
    }
    let verified = reports.len();
    pass(
        11,
        &format!("{verified} reports re-verified from their certificates"),
        start.elapsed(),
    );
}
