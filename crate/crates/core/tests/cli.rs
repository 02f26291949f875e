use std::process::{Command, Output};

use hexdet::arith::{parse_rational, Polynomial, RationalFunction};

fn hexdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexdet")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn twenty() {
    let o = hexdet(&["det", "--s", "1", "--t", "1", "--n", "2", "--mu", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "20\n");
}

#[test]
fn vanishing_determinant() {
    assert_eq!(stdout(&hexdet(&["det", "--s", "1", "--t", "0", "--n", "4"])), "0\n");
}

#[test]
fn symbolic_and_numeric_agree() {
    for (s, t, n) in [("1", "1", "3"), ("-1", "2", "3"), ("2", "0", "4")] {
        let json = stdout(&hexdet(&["det", "--s", s, "--t", t, "--n", n, "--json"]));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let symbolic = v["value"].as_str().unwrap().to_string();
        for mu in ["2", "5", "7/3"] {
            let numeric = stdout(&hexdet(&["det", "--s", s, "--t", t, "--n", n, "--mu", mu]));
            let canon = stdout(&hexdet(&["det", "--s", s, "--t", t, "--n", n]));
            assert_eq!(canon.trim(), symbolic);
            let at = parse_rational(numeric.trim()).unwrap();
            let m = hexdet::matrix::build_matrix(&hexdet::matrix::ShiftSpec::new(
                s.parse().unwrap(),
                t.parse().unwrap(),
                n.parse().unwrap(),
            ));
            let f = hexdet::matrix::determinant(&m).unwrap();
            assert_eq!(f.eval(&parse_rational(mu).unwrap()).unwrap(), at);
        }
    }
}

#[test]
fn verify_report_schema() {
    let o = hexdet(&["verify", "thm-kt", "--n-max", "5", "--json", "--workers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["identity"], "thm-kt");
    let points = v["outcomes"].as_array().unwrap();
    assert_eq!(points.len(), 5);
    for (i, p) in points.iter().enumerate() {
        assert_eq!(p["identity"], "thm-kt");
        assert_eq!(p["status"], "pass");
        assert_eq!(p["parameters"], serde_json::json!([{ "name": "n", "value": i + 1 }]));
        assert!(p["millis"].is_u64());
    }
    let again = serde_json::to_string(&v).unwrap();
    assert_eq!(serde_json::from_str::<serde_json::Value>(&again).unwrap(), v);
}

#[test]
fn verify_all_skips_conjectures() {
    let o = hexdet(&["verify", "all", "--n-max", "2", "--r-max", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<_> = v["reports"].as_array().unwrap().iter().map(|r| r["identity"].as_str().unwrap().to_string()).collect();
    assert_eq!(ids.len(), 32);
    assert!(ids.iter().all(|i| !i.starts_with("conj-")));
    let o = hexdet(&["verify", "all", "--n-max", "2", "--r-max", "1", "--include-conjectures"]);
    assert_eq!(stdout(&o).matches("[conjecture]").count(), 3);
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(hexdet(&["det", "--s", "1"]).status.code(), Some(2));
    assert_eq!(hexdet(&["nope"]).status.code(), Some(2));
    assert_eq!(hexdet(&["det", "--s", "1", "--t", "1", "--n", "2", "--engine", "lu"]).status.code(), Some(2));
    let o = hexdet(&["oracle", "--s", "-3", "--t", "0", "--n", "2", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lambda + s"));
    assert_eq!(hexdet(&["oracle", "--s", "0", "--t", "0", "--n", "5", "--lambda", "0"]).status.code(), Some(1));
}

#[test]
fn oracle_and_minors() {
    assert_eq!(stdout(&hexdet(&["oracle", "--s", "1", "--t", "1", "--n", "2", "--lambda", "1"])), "20\n");
    assert_eq!(stdout(&hexdet(&["minors", "--s", "1", "--t", "1", "--n", "2", "--mu", "3"])), "20\n");
}

#[test]
fn formula_values() {
    assert_eq!(stdout(&hexdet(&["formula", "kt", "--n", "1"])), format!("{}\n", Polynomial::mu_plus(2)));
    assert_eq!(stdout(&hexdet(&["formula", "prop-d00", "--n", "1"])), "2\n");
    let half = RationalFunction::from(Polynomial::mu_plus(3)).scale(&hexdet::arith::rat(1, 2));
    assert_eq!(stdout(&hexdet(&["formula", "r00-odd", "--n", "1"])), format!("{half}\n"));
    assert_eq!(hexdet(&["formula", "nope", "--n", "1"]).status.code(), Some(1));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lozenge.svg");
    let o = hexdet(&["render", "--s", "1", "--t", "1", "--n", "2", "--lambda", "1", "--tiling", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"triangle\"").count(), 4);
}

#[test]
fn kernel_json() {
    let o = hexdet(&["kernel", "--s", "1", "--t", "0", "--n", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["certificate"]["coefficients"].as_array().unwrap().last().unwrap(), "1");
}
