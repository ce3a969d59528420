use kgturan::harness::{run_golden_suite, CaseStatus, GoldenManifest, GoldenOptions};

#[test]
fn full_manifest_has_no_failures() {
    let m = GoldenManifest::v1();
    let opts = GoldenOptions {
        workers: 4,
        ..GoldenOptions::default()
    };
    let rep = run_golden_suite(&m, &[], &opts);
    println!("{}", rep.to_table());
    assert!(rep.passed);
    for (case, out) in m.cases.iter().zip(&rep.cases) {
        assert_eq!(case.id, out.id);
        if !case.informational {
            assert_eq!(out.status, CaseStatus::Pass, "{}", case.id);
        }
    }
}

#[test]
fn report_round_trips_through_json() {
    let m = GoldenManifest::v1();
    let rep = run_golden_suite(&m, &["kneser-4-2".into()], &GoldenOptions::default());
    let text = serde_json::to_string(&rep).unwrap();
    let back: kgturan::harness::GoldenReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back.cases[0].chi, Some(2));
}
