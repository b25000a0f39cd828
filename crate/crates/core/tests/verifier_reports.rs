use geomcrystal_core::verifier::{run_check, run_suite, CheckSpec, Severity, CATALOG};
use geomcrystal_core::Error;

#[test]
fn report_json_shape() {
    let mut report = run_suite("prop_intertwine_24,explore_sigma_intertwine_k5", 4, 1, 20, false).unwrap();
    report.strip_timing();
    let v = serde_json::to_value(&report).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["suite", "seed", "bound", "checks", "pass"]);
    let check = &v["checks"][0];
    let keys: Vec<&str> = check.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["name", "severity", "trials", "failures", "counterexample", "ms"]);
    assert_eq!(check["severity"], "asserted");
    assert_eq!(v["checks"][1]["severity"], "exploratory");
    assert_eq!(v["pass"], true);
}

#[test]
fn every_asserted_check_passes_briefly() {
    let report = run_suite("all", 3, 2024, 20, true).unwrap();
    assert_eq!(report.checks.len(), CATALOG.len());
    for c in &report.checks {
        assert!(c.passed(), "{}: {:?}", c.name, c.counterexample);
    }
    assert!(report.pass);
}

#[test]
fn unknown_names_are_rejected() {
    assert!(matches!(run_suite("nonsense", 1, 0, 20, false), Err(Error::UnknownCheck(_))));
    assert!(CATALOG.iter().any(|c| c.severity == Severity::Exploratory && c.inapplicable.is_some()));
}
