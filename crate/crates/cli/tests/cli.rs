//! End-to-end runs of the installed binary.

use std::process::{Command, Output};

use poincare_cli::json;

fn poincare(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poincare"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const EXAMPLES: [&[&str]; 9] = [
    &["invariants", "6"],
    &["covariants", "6"],
    &["invariants", "1", "2", "3"],
    &["covariants", "2", "2", "2"],
    &["kernel", "4"],
    &["kernel", "1", "1", "1", "2"],
    &["bivariate", "4"],
    &["multivar-covariants", "1", "1", "2"],
    &["multivar-invariants", "4", "4"],
];

#[test]
fn plain_closed_form() {
    let o = poincare(&["kernel", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(1 - z + z^2)/((1-z)^2*(1-z^2)*(1-z^3))");
}

#[test]
fn series_expansion() {
    let o = poincare(&["invariants", "2", "--series", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 + z^2 + z^4 + z^6");
}

#[test]
fn latex_output() {
    let o = poincare(&["multivar-invariants", "4", "4", "--format", "latex"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("\\frac{"), "{text}");
    assert!(text.contains("z_{1}"), "{text}");
}

#[test]
fn json_round_trips_for_every_example() {
    for args in EXAMPLES {
        let plain = poincare(args);
        let mut with_json = args.to_vec();
        with_json.extend(["--format", "json"]);
        let o = poincare(&with_json);
        assert!(o.status.success(), "{args:?}");
        let f = json::decode(&stdout(&o)).unwrap();
        let again = json::to_string(&f);
        assert!(json::decode(&again).unwrap().equals(&f), "{args:?}");
        assert!(plain.status.success(), "{args:?}");
    }
}

#[test]
fn every_example_passes_its_check() {
    for args in EXAMPLES {
        let mut a = args.to_vec();
        a.extend(["--check", "15"]);
        let o = poincare(&a);
        assert!(
            o.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(String::from_utf8_lossy(&o.stderr).contains("check passed to order 15"));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["invariants"][..],
        &["invariants", "0"],
        &["invariants", "-3"],
        &["invariants", "x"],
        &["frobnicate", "2"],
        &["bivariate", "1", "2"],
        &["bivariate", "4", "--variant", "printed"],
        &["invariants", "2", "--check", "0"],
    ] {
        assert_eq!(poincare(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn printed_reading_fails_the_check() {
    let o = poincare(&["invariants", "2", "--variant", "printed", "--check", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("oracle"));
}
