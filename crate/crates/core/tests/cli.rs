use std::process::{Command, Output};

fn semisym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semisym")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_first_column_as_json() {
    let o = semisym(&["compute", "R", "--n", "3", "--lambda", "1,0,0", "--basis", "monomial", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"n":3,"terms":[{"exp":[1,0,0],"num":[1],"den":[1]},{"exp":[0,1,0],"num":[-1],"den":[1]},{"exp":[0,0,1],"num":[1],"den":[1]},{"exp":[0,0,0],"num":[0,-1],"den":[1]}]}"#
    );
    let text = semisym(&["compute", "R", "--n", "3", "--lambda", "1,0,0"]);
    assert_eq!(stdout(&text).trim(), "z1 - z2 + z3 - r");
}

#[test]
fn compute_in_other_bases() {
    let o = semisym(&["compute", "R", "--n", "3", "--lambda", "2,1,0", "--basis", "columns"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "C(2,1,0) + (-1/(2r+1))*C(1,1,1)");
    let e = semisym(&["compute", "e", "--n", "2", "--m", "1"]);
    assert_eq!(stdout(&e).trim(), "z1 - z2");
}

#[test]
fn compute_at_a_rational_parameter() {
    let o = semisym(&["compute", "R", "--n", "3", "--lambda", "1,0,0", "--r", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "z1 - z2 + z3 - 1/2");
}

#[test]
fn special_value_agrees() {
    let o = semisym(&["compute", "value", "--n", "3", "--lambda", "2,1,0", "--alpha", "5/2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], serde_json::Value::Bool(true));
}

#[test]
fn verify_eigen_small() {
    let o = semisym(&["verify", "eigen", "--n", "3", "--dmax", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("eigen: "));
}

#[test]
fn verify_rejects_zero_parameter() {
    assert_eq!(semisym(&["verify", "eigen", "--r", "0"]).status.code(), Some(2));
}

#[test]
fn table_matches_golden() {
    let o = semisym(&["table", "--deg", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("R(21) = R(1)R(11) - 1/(2r+1) R(111)"), "{s}");
    assert!(s.ends_with("golden: match\n"));
}

#[test]
fn table_against_a_wrong_golden_fails() {
    let dir = std::env::temp_dir().join(format!("semisym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "R(21) = R(1)R(11)\n").unwrap();
    let o = semisym(&["table", "--deg", "3", "--golden", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn order_relations() {
    let o = semisym(&["order", "--lambda", "2,1,0", "--mu", "2,1,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["subseteq"], serde_json::Value::Bool(true));
    assert_eq!(v["dominance_hom"], serde_json::Value::Bool(false));
    let one = semisym(&["order", "--lambda", "2,1,1", "--mu", "2,1,0", "--rel", "subseteq"]);
    assert_eq!(stdout(&one), "subseteq: false\n");
}

#[test]
fn apply_gives_eigenvalue() {
    let o = semisym(&["apply", "--op", "X", "--n", "3", "--t", "1", "--lambda", "1,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(2r+2)*z1 - (2r+2)*z2 + (2r+2)*z3 - (2r^2+2r)");
}

#[test]
fn apply_reads_json_input() {
    let dir = std::env::temp_dir().join(format!("semisym-apply-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let poly = dir.join("p.json");
    let out = dir.join("out.json");
    let built = semisym(&["compute", "R", "--n", "2", "--lambda", "1,0", "--format", "json", "--out", poly.to_str().unwrap()]);
    assert_eq!(built.status.code(), Some(0));
    let o = semisym(&[
        "apply", "--op", "Y", "--n", "2", "--t", "0", "--input", poly.to_str().unwrap(), "--format", "json", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&out).unwrap().starts_with("{\"n\":2"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(semisym(&["compute", "R", "--n", "3"]).status.code(), Some(2));
    assert_eq!(semisym(&["compute", "R", "--n", "3", "--lambda", "0,1,0"]).status.code(), Some(2));
    assert_eq!(semisym(&["compute", "R", "--n", "3", "--lambda", "1,0,0", "--r", "-1"]).status.code(), Some(2));
    assert_eq!(semisym(&["compute", "R", "--n", "3", "--lambda", "1,0,0", "--basis", "nonsense"]).status.code(), Some(2));
    assert_eq!(semisym(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(semisym(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn identical_requests_give_identical_bytes() {
    let args = ["compute", "R", "--n", "4", "--lambda", "2,1,1,0", "--format", "json"];
    assert_eq!(semisym(&args).stdout, semisym(&args).stdout);
    let v1 = semisym(&["verify", "defining,cutoff", "--report", "json", "--threads", "1"]);
    let v2 = semisym(&["verify", "defining,cutoff", "--report", "json", "--threads", "3"]);
    assert_eq!(v1.stdout, v2.stdout);
}

#[test]
fn top_operator_acts_on_rbar() {
    let rbar = semisym(&["compute", "Rbar", "--n", "3", "--lambda", "2,1,0"]);
    assert_eq!(stdout(&rbar).trim(), "z1*z2 - (1/(2r+1))*z1*z3 - z2^2 + z2*z3");
    let o = semisym(&["apply", "--op", "Xbar", "--n", "3", "--t", "1", "--lambda", "2,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(2r+3)*z1*z2 - (2r+3)/(2r+1)*z1*z3 - (2r+3)*z2^2 + (2r+3)*z2*z3");
}
