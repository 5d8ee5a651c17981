//! Report verification: acceptance of honest reports, rejection of tampered
//! ones, and the rational-coefficient integer-model path.

use serde_json::json;
use ttl_cli::parser::parse_poly;
use ttl_cli::report::{report_analyze, report_hodge, report_lie_balanced, CliConfig};
use ttl_cli::verify::verify_report;

#[test]
fn accepts_honest_reports() {
    let config = CliConfig::default();
    let f = parse_poly("x^3-2").unwrap();
    let report = report_analyze(&f, Some(3), &config).unwrap();
    verify_report(&report).unwrap();
    verify_report(&report_hodge(3, 6, 0, 3).unwrap()).unwrap();
    verify_report(&report_lie_balanced(1, 5, 3).unwrap()).unwrap();
}

#[test]
fn rejects_swapped_certified_polynomial() {
    let config = CliConfig::default();
    let f = parse_poly("x^3-2").unwrap();
    let mut report = report_analyze(&f, None, &config).unwrap();
    // swap in a different (also genuinely analyzable) polynomial with its
    // own consistent certificates: the input tie must catch it
    let other = report_analyze(&parse_poly("x^3-5").unwrap(), None, &config).unwrap();
    report["results"] = other["results"].clone();
    report["certificates"] = other["certificates"].clone();
    assert!(verify_report(&report).is_err());
}

#[test]
fn rejects_flipped_verdicts_and_counts() {
    let config = CliConfig::default();
    let f = parse_poly("x^3-3x-1").unwrap();
    let honest = report_analyze(&f, None, &config).unwrap();

    let mut flipped = honest.clone();
    flipped["results"]["transitivity"]["doubly_transitive"] = json!(true);
    assert!(verify_report(&flipped).is_err());

    let mut wrong_r = honest.clone();
    wrong_r["results"]["real_embeddings"] = json!(1);
    assert!(verify_report(&wrong_r).is_err());

    let mut wrong_resolvent = honest;
    wrong_resolvent["certificates"][2]["resolvent"] = json!(["1", "0", "1"]);
    assert!(verify_report(&wrong_resolvent).is_err());
}

#[test]
fn rejects_tampered_table_reports() {
    let mut hodge = report_hodge(3, 6, 0, 3).unwrap();
    hodge["results"]["count"] = json!(7);
    assert!(verify_report(&hodge).is_err());

    let mut balanced = report_lie_balanced(2, 4, 3).unwrap();
    balanced["results"]["balanced"] = json!(true);
    assert!(verify_report(&balanced).is_err());
}

#[test]
fn rational_input_uses_its_integer_model() {
    let config = CliConfig::default();
    // x³ − x/4 − 1/4: squarefree, monic, non-integer; the certified model
    // scales the roots by 4
    let f = parse_poly("x^3 - 1/4 x - 1/4").unwrap();
    let report = report_analyze(&f, None, &config).unwrap();
    assert_eq!(
        report["results"]["certified_polynomial"],
        json!(["-16", "-4", "0", "1"])
    );
    verify_report(&report).unwrap();
}
