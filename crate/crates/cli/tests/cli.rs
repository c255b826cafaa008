use std::process::{Command, Output};

fn dqw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dqw"))
        .args(args)
        .env_remove("DQW_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = dqw(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn weight_of_the_wedge() {
    let v = json(&["weight", "--graph", "1:(X,Y)"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["w_i"], "1/2");
    assert_eq!(v["w_k"], "1/2");
    let o = dqw(&["weight", "--graph", "1:(X,Y)"]);
    assert!(stdout(&o).contains("w_I = 1/2"));
}

#[test]
fn two_graphs_on_one_vertex() {
    let o = dqw(&["graphs", "enumerate", "--n", "1", "--classify"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
    let v = json(&["graphs", "enumerate", "--n", "2"]);
    assert_eq!(v["graphs"].as_array().unwrap().len(), 36);
}

#[test]
fn enumerated_graphs_reparse() {
    let o = dqw(&["graphs", "enumerate", "--n", "2"]);
    for line in stdout(&o).lines() {
        let back = dqw(&["weight", "--graph", line]);
        // loops and non-computable types are refused, never misparsed
        assert_ne!(back.status.code(), Some(2), "{line}");
    }
}

#[test]
fn dot_output() {
    let o = dqw(&["--format", "dot", "graphs", "enumerate", "--n", "1"]);
    let s = stdout(&o);
    assert_eq!(s.matches("digraph").count(), 2);
    let bad = dqw(&["--format", "dot", "bernoulli", "--max", "3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn equivalence_of_uea_and_kontsevich() {
    let o = dqw(&[
        "verify",
        "equiv",
        "--a",
        "uea",
        "--b",
        "kontsevich",
        "--algebra",
        "heisenberg",
        "--degree",
        "5",
        "--order",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("EQUAL"));
}

#[test]
fn inequivalent_products_exit_one() {
    // the independent source leaves order-3 types out, so it must disagree
    let o = dqw(&[
        "verify",
        "equiv",
        "--a",
        "uea",
        "--b",
        "kontsevich",
        "--weights",
        "independent",
        "--algebra",
        "solvable2",
        "--degree",
        "4",
        "--order",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NOT EQUAL"));
}

#[test]
fn bernoulli_values() {
    let v = json(&["bernoulli", "--max", "4"]);
    assert_eq!(
        v["values"],
        serde_json::json!(["1", "-1/2", "1/6", "0", "-1/30"])
    );
    let m = json(&["bernoulli", "--max", "1", "--modified"]);
    assert_eq!(m["values"][1], "1/2");
}

#[test]
fn hausdorff_terms() {
    let o = dqw(&["hausdorff", "--degree", "3"]);
    assert_eq!(
        stdout(&o).trim(),
        "X + Y + 1/2*[X,Y] + 1/12*[X,[X,Y]] + 1/12*[[X,Y],Y]"
    );
    let v = json(&["hausdorff", "--degree", "4", "--linear-in-y"]);
    assert_eq!(
        v["linear_in_y"],
        serde_json::json!(["1", "1/2", "1/12", "0", "-1/720"])
    );
}

#[test]
fn star_products() {
    let v = json(&[
        "star",
        "--method",
        "cbh",
        "--algebra",
        "heisenberg",
        "--f",
        "x1",
        "--g",
        "x2",
        "--order",
        "2",
    ]);
    assert_eq!(v["result"][1]["coeff"], "1/2*x3");
    let m = dqw(&[
        "star",
        "--method",
        "moyal",
        "--algebra",
        "moyal_trick(1)",
        "--f",
        "x1^2",
        "--g",
        "x2^2",
        "--order",
        "2",
    ]);
    assert_eq!(
        stdout(&m).trim(),
        "(x1^2*x2^2) + eps*(2*x1*x2) + eps^2*(1/2) + O(eps^3)"
    );
    let wrong = dqw(&[
        "star",
        "--method",
        "moyal",
        "--algebra",
        "solvable2",
        "--f",
        "x1",
        "--g",
        "x2",
        "--order",
        "2",
    ]);
    assert_eq!(wrong.status.code(), Some(2));
}

#[test]
fn xny_closed_form() {
    let o = dqw(&["xny", "--n", "2", "--method", "uea"]);
    let s = stdout(&o);
    assert!(
        s.starts_with("X^2*Y + eps*X*[X,Y] + eps^2*(1/6)*ad_X^2(Y)"),
        "{s}"
    );
    let a = json(&[
        "xny",
        "--n",
        "3",
        "--method",
        "assembled",
        "--algebra",
        "strictly_upper(4)",
    ]);
    let b = json(&[
        "xny",
        "--n",
        "3",
        "--method",
        "cbh",
        "--algebra",
        "strictly_upper(4)",
    ]);
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn verification_commands() {
    assert!(dqw(&["verify", "identities"]).status.success());
    assert!(dqw(&["verify", "loops"]).status.success());
    let a = dqw(&[
        "verify", "assoc", "--method", "cbh", "--trials", "5", "--seed", "3",
    ]);
    assert!(a.status.success(), "{}", stdout(&a));
}

#[test]
fn determinism_across_thread_counts() {
    let args = [
        "verify",
        "equiv",
        "--a",
        "uea",
        "--b",
        "cbh",
        "--algebra",
        "strictly_upper(4)",
        "--degree",
        "3",
        "--order",
        "3",
        "--format",
        "json",
    ];
    let mut one = vec!["--jobs", "1"];
    one.extend_from_slice(&args);
    let mut four = vec!["--jobs", "4"];
    four.extend_from_slice(&args);
    assert_eq!(dqw(&one).stdout, dqw(&four).stdout);
}

#[test]
fn algebra_files() {
    let dir = env!("CARGO_TARGET_TMPDIR");
    let good = format!("{dir}/heis.json");
    let e = dqw(&["algebra", "export", "heisenberg"]);
    std::fs::write(&good, &e.stdout).unwrap();
    let v = dqw(&["algebra", "validate", &good]);
    assert!(v.status.success());
    assert!(stdout(&v).contains("jacobi: yes"));
    // star accepts the exported file in place of the name
    let s = dqw(&[
        "star",
        "--method",
        "uea",
        "--algebra",
        &good,
        "--f",
        "x1",
        "--g",
        "x2",
        "--order",
        "1",
    ]);
    assert!(stdout(&s).contains("eps*(1/2*x3)"));

    // [x1,x2] = x3, [x2,x3] = x1, [x1,x3] = x1 breaks Jacobi
    let bad = format!("{dir}/bad.json");
    std::fs::write(
        &bad,
        r#"{"dim": 3, "brackets": [
            {"i": 1, "j": 2, "coeffs": {"3": "1"}},
            {"i": 2, "j": 3, "coeffs": {"1": "1"}},
            {"i": 1, "j": 3, "coeffs": {"1": "1"}}]}"#,
    )
    .unwrap();
    let r = dqw(&["algebra", "validate", &bad]);
    assert_eq!(r.status.code(), Some(1));
    assert!(stdout(&r).contains("jacobi: no"));

    let broken = format!("{dir}/broken.json");
    std::fs::write(&broken, "{\"dim\": 2, \"brackets\": [").unwrap();
    assert_eq!(
        dqw(&["algebra", "validate", &broken]).status.code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        dqw(&["weight", "--graph", "1:(X,Q)"]).status.code(),
        Some(2)
    );
    assert_eq!(dqw(&["bogus"]).status.code(), Some(2));
    let o = dqw(&[
        "star",
        "--method",
        "uea",
        "--algebra",
        "heisenberg",
        "--f",
        "x1^",
        "--g",
        "x2",
        "--order",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column"));
}
