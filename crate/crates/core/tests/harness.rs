use motivic_dt::harness::{
    check_names, render_json, render_markdown, run_all, run_check, series, render_series, CheckOptions, Realization,
    Status, DEFAULT_SEED, SERIES_NAMES,
};

fn opts() -> CheckOptions {
    CheckOptions {
        seed: DEFAULT_SEED,
        mutate_omega_bbs: false,
    }
}

#[test]
fn every_check_passes_at_order_8() {
    let reports = run_all(8, &opts());
    assert_eq!(reports.len(), check_names().len());
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    let names: Vec<_> = reports.iter().map(|r| r.check.clone()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn mutation_breaks_pushforward_at_first_power() {
    let o = CheckOptions {
        mutate_omega_bbs: true,
        ..opts()
    };
    let r = run_check("thm-newB-pushforward", 6, &o).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.first_discrepancy.unwrap().power, 1);
    assert!(run_check("thm-newB-pushforward", 6, &opts()).unwrap().passed());
}

#[test]
fn unknown_names_are_errors() {
    assert!(run_check("no-such-check", 3, &opts()).is_err());
    assert!(series("no-such-series", 3).is_err());
    assert!("complex".parse::<Realization>().is_err());
}

#[test]
fn named_series_render() {
    for name in SERIES_NAMES {
        let s = series(name, 4).unwrap();
        let text = render_series(&s, Realization::Motivic);
        assert_eq!(text.lines().count(), 5, "{name}");
        render_series(&s, Realization::Weight);
        render_series(&s, Realization::Euler);
    }
    let z = render_series(&series("q-quot-L", 2).unwrap(), Realization::Motivic);
    assert!(z.starts_with("t^0: 1\nt^1: L^(3/2) + L^(1/2)\n"), "{z}");
    let m = render_series(&series("macmahon", 5).unwrap(), Realization::Euler);
    assert_eq!(m, "t^0: 1\nt^1: 1\nt^2: 3\nt^3: 6\nt^4: 13\nt^5: 24\n");
}

#[test]
fn reports_round_trip_and_render() {
    let reports: Vec<_> = ["z0-effective", "kapranov-macdonald"]
        .iter()
        .map(|n| run_check(n, 5, &opts()).unwrap().without_timing())
        .collect();
    let json = render_json(&reports);
    let back: Vec<motivic_dt::harness::CheckReport> = serde_json::from_str(&json).unwrap();
    assert_eq!(back, reports);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let first = &v[0];
    for key in ["check", "order", "status", "seed", "first_discrepancy", "elapsed_ms"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
    assert_eq!(first["status"], "pass");
    let md = render_markdown(&reports);
    assert!(md.contains("| z0-effective | 5 | pass |"));
}
