use std::time::Instant;

use hermitrig::golden::{golden_cases, golden_suite, run_cases};

#[test]
fn golden_suite_passes() {
    let started = Instant::now();
    let report = golden_suite();
    let elapsed = started.elapsed();
    print!("{}", report.render());
    assert!(report.all_passed(), "failing cases:\n{}", report.render());
    assert!(elapsed.as_secs_f64() < 10.0, "suite took {elapsed:?}");
}

#[test]
fn perturbed_golden_value_is_caught() {
    let mut cases = golden_cases();
    let case = cases
        .iter_mut()
        .find(|c| c.id == "closed_form_p1.origin_N3_k1")
        .expect("case present");
    // a_{N-k} for N = 3, k = 1
    case.expected[1] += 1e-6;
    let report = run_cases(&cases);
    let failed: Vec<_> = report.failures().map(|r| r.id).collect();
    assert_eq!(failed, vec!["closed_form_p1.origin_N3_k1"]);
}

#[test]
fn every_operation_has_a_golden_case() {
    let ids: Vec<_> = golden_cases().iter().map(|c| c.id).collect();
    for op in [
        "make_grid",
        "nodes",
        "trig_interp_coeffs",
        "alias_sign",
        "verify_alias",
        "frequency_set",
        "assemble_system",
        "solve_harmonic",
        "closed_form_p1",
        "closed_form_p2",
        "build_hermite",
        "collocation_solve",
        "evaluate",
    ] {
        assert!(
            ids.iter().any(|id| id.starts_with(&format!("{op}."))),
            "{op}"
        );
    }
}
