//! End-to-end tests against the built binary: byte-exact golden outputs,
//! exit codes and JSON shapes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixshuffle"))
        .args(args)
        .env_remove("MIXSHUFFLE_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn count_golden() {
    let out = run(&["count", "--m", "1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn product_golden() {
    let out = run(&[
        "product", "--lambda", "-1", "--alphabet", "u,v", "1|u", "1|v",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1|u|v + 1|v|u - 1|u*v\n");
}

#[test]
fn baxter_check_golden() {
    let out = run(&[
        "baxter-check",
        "--target",
        "hurwitz",
        "--lambda",
        "0",
        "--samples",
        "50",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "baxter-check target=hurwitz ring=int lambda=0 samples=50 seed=7: ok\n"
    );
}

#[test]
fn output_is_stable_across_runs() {
    for args in [
        vec!["enumerate", "--m", "2", "--n", "2"],
        vec!["enumerate", "--m", "1", "--n", "1", "--l", "1", "--format", "json"],
        vec!["baxter-check", "--target", "sha", "--lambda", "3", "--samples", "20", "--seed", "9"],
        vec!["cartier", "--alphabet", "a,b", "a.[b]", "b.[a,a]"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&first), stdout(&second), "{args:?}");
    }
}

#[test]
fn enumerate_json_schema_fields() {
    let out = run(&["enumerate", "--m", "2", "--n", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["m"], 2);
    assert_eq!(v["n"], 1);
    let items = v["items"].as_array().expect("items array");
    assert_eq!(items.len(), 5);
    for item in items {
        let sigma = item["sigma"].as_array().expect("sigma");
        assert_eq!(sigma.len(), 3);
        let merges = item["merges"].as_array().expect("merges");
        let degree = item["degree"].as_u64().expect("degree");
        assert_eq!(merges.len() as u64, degree);
        for window in merges {
            let w = window.as_array().expect("window");
            assert_eq!(w.len(), 2);
            assert_eq!(
                w[1].as_u64().unwrap(),
                w[0].as_u64().unwrap() + 1,
                "adjacent positions"
            );
        }
    }
}

#[test]
fn product_json_term_list() {
    let out = run(&[
        "product", "--lambda", "-1", "--alphabet", "u,v", "--format", "json", "1|u", "1|v",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let terms = v.as_array().expect("term array");
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[0]["word"], serde_json::json!(["1", "u", "v"]));
    assert_eq!(terms[0]["coeff"], "1");
    assert_eq!(terms[2]["word"], serde_json::json!(["1", "u*v"]));
    assert_eq!(terms[2]["coeff"], "-1");
}

#[test]
fn hurwitz_subcommands() {
    let out = run(&["hurwitz", "mul", "e1+2e3", "e2"]);
    assert_eq!(stdout(&out), "3*e3 + 20*e5\n");
    // (e0 + 3*e2) * e2 = e2 + 3*binom(4,2)*e4.
    let out = run(&["hurwitz", "mul", "--format", "json", "1,0,3", "e2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["coeffs"], serde_json::json!(["0", "0", "1", "0", "18"]));
    let out = run(&["hurwitz", "embed", "--expr", "3*1|1 + 1"]);
    assert_eq!(stdout(&out), "e0 + 3*e1\n");
}

#[test]
fn eval_round_trips_canonical_forms() {
    for (kind, source) in [
        ("bax", "x|y + 2*(1|x*y) - 3"),
        ("plus", "2*() + x|1|y - y"),
        ("cartier", "x.[y,1*y] - 2*y.[]"),
        ("hurwitz", "e0 - 2e3 + e0"),
    ] {
        let first = run(&["eval", "--kind", kind, "--alphabet", "x,y", source]);
        assert_eq!(first.status.code(), Some(0), "{kind}: {source}");
        let rendered = stdout(&first);
        let second = run(&["eval", "--kind", kind, "--alphabet", "x,y", rendered.trim()]);
        assert_eq!(
            stdout(&second),
            rendered,
            "canonical form is a fixed point for {kind}"
        );
    }
}

#[test]
fn identity_failure_exits_one_with_witness() {
    let out = run(&[
        "baxter-check",
        "--target",
        "idop",
        "--lambda",
        "0",
        "--samples",
        "5",
        "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAILED"));
    assert!(text.contains("lhs:"));
    assert!(text.contains("rhs:"));
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let out = run(&["product", "--alphabet", "u,v", "1|w", "1|v"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown generator"));
    assert!(err.contains("position"));

    let out = run(&["count", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["product", "--ring", "float", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // The shift-operator target only exists at weight zero.
    let out = run(&["baxter-check", "--target", "hurwitz", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn format_env_variable_sets_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_mixshuffle"))
        .args(["count", "--m", "1", "--n", "1"])
        .env("MIXSHUFFLE_FORMAT", "json")
        .output()
        .expect("binary runs");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["count"], "3");
    // An explicit flag wins over the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_mixshuffle"))
        .args(["count", "--m", "1", "--n", "1", "--format", "text"])
        .env("MIXSHUFFLE_FORMAT", "json")
        .output()
        .expect("binary runs");
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn modular_ring_and_rational_weights() {
    let out = run(&[
        "product", "--ring", "mod:7", "--lambda", "-1", "--alphabet", "u,v", "1|u", "1|v",
    ]);
    // Minus one is the residue six.
    assert_eq!(stdout(&out), "1|u|v + 1|v|u + 6*1|u*v\n");
    let out = run(&[
        "product", "--ring", "rat", "--lambda", "2/3", "--alphabet", "u,v", "1|u", "1|v",
    ]);
    assert_eq!(stdout(&out), "1|u|v + 1|v|u + 2/3*1|u*v\n");
}

#[test]
fn cartier_embed_matches_weight_minus_one_product() {
    let embedded = run(&["cartier", "--alphabet", "u,v", "--embed", "1.[u]", "1.[v]"]);
    let direct = run(&[
        "product", "--lambda", "-1", "--alphabet", "u,v", "1|u", "1|v",
    ]);
    assert_eq!(stdout(&embedded), stdout(&direct));
}
