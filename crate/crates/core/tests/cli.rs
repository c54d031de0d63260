use std::process::Command;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn gpauto(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gpauto"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = gpauto(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn pcs_lists_round_trip_through_apply() {
    let t16 = fixture("t16.graph");
    let pcs = ok(&["pcs", &t16]);
    assert_eq!(pcs.lines().count(), 46);
    let word = pcs.lines().take(5).collect::<Vec<_>>().join(" ");
    let images = ok(&["apply", &t16, &word]);
    assert_eq!(images.lines().count(), 16);
    for cmd in ["pc0", "lsets"] {
        for line in ok(&[cmd, &t16]).lines() {
            let letters = match line.split_once(':') {
                Some((key, rest)) if key.starts_with('L') => rest.trim(),
                _ => line,
            };
            if !letters.is_empty() {
                ok(&["apply", &t16, letters]);
            }
        }
    }
}

#[test]
fn reduce_prints_identity_as_empty_line() {
    assert_eq!(ok(&["reduce", "--graph", &fixture("p3.graph"), "v1 v1"]), "\n");
    assert_eq!(ok(&["reduce", &fixture("p3.graph"), "v2 v1 v2"]), "v1\n");
    let c = ok(&["reduce", "--cyclic", &fixture("star3.graph"), "v1 v2 v1"]);
    assert!(c.contains("core: v2\n"), "{c}");
}

#[test]
fn apply_to_a_word() {
    let out = ok(&["apply", &fixture("star3.graph"), "x1:3", "v3 v4"]);
    assert_eq!(out, "v1 v3 v1 v4\n");
}

#[test]
fn vcd_and_tree_on_t16() {
    let t16 = fixture("t16.graph");
    assert_eq!(ok(&["vcd", &t16]), "vcd: 7\n");
    let tree = ok(&["tree", &t16]);
    assert!(tree.contains("<L5_0>: Z_m(2) x Out0 W(L5)\n"));
    assert!(tree.contains("ab_kind: finite\n"));
    assert_eq!(ok(&["vcd", &fixture("sq4.graph")]), "vcd: undefined\n");
}

#[test]
fn domain_errors_name_the_module() {
    let (code, out, err) = gpauto(&["tree", &fixture("sq4.graph")]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("structure::NotATree"), "{err}");
    let (code, _, err) = gpauto(&["apply", &fixture("t16.graph"), "x2:8,15"]);
    assert_eq!(code, 1);
    assert!(err.contains("aut_calculus::InvalidDomain"), "{err}");
    let (code, _, err) = gpauto(&["reduce", &fixture("p3.graph"), "v9"]);
    assert_eq!(code, 1);
    assert!(err.contains("graph_core::IndexOutOfRange"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(gpauto(&[]).0, 2);
    assert_eq!(gpauto(&["frobnicate"]).0, 2);
    assert_eq!(gpauto(&["classify", &fixture("star3.graph"), "x1:3"]).0, 2);
    assert_eq!(gpauto(&["pcs", "--format", "yaml", &fixture("p3.graph")]).0, 2);
}

#[test]
fn classify_reports_both_verdicts() {
    let out = ok(&["classify", &fixture("t16.graph"), "x6:7,13,14", "x7:6,12"]);
    assert_eq!(
        out,
        "case: 2\npredicted_commute: no\nbrute_force_commute: no\nagree: yes\n"
    );
}

#[test]
fn structured_output_is_json() {
    let out = ok(&["structure", "--format", "structured", &fixture("t16.graph")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vcd"], 7);
    assert_eq!(v["out0_abelian"], false);
    assert_eq!(v["sil"]["r"], serde_json::json!([4, 8, 15, 16]));
    assert_eq!(v["tree"]["ab_factor"], serde_json::json!(["2", "2", "2", "2", "2"]));
    for key in ["out_w_finite", "aut_w_hyperbolic", "extension_splitting"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let pcs = ok(&["pcs", "--format", "structured", &fixture("p3.graph")]);
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&pcs).unwrap(),
        serde_json::json!(["x1:3", "x3:1"])
    );
}

#[test]
fn output_is_deterministic() {
    for cmd in ["info", "structure", "lsets", "sil", "extensions", "hyperbolic"] {
        let a = ok(&[cmd, &fixture("t16.graph")]);
        let b = ok(&[cmd, &fixture("t16.graph")]);
        assert_eq!(a, b, "{cmd}");
    }
}

#[test]
fn extensions_on_the_reconstructed_fixture() {
    let out = ok(&["extensions", &fixture("one_ended.graph")]);
    assert!(out.contains("one_ended_splitting.all_hold: yes\n"), "{out}");
    let out = ok(&["extensions", &fixture("k3.graph")]);
    assert!(out.contains("extension_splitting.condition1: no\n"));
    assert!(out.contains("one_ended_splitting.separator: none\n"));
}

#[test]
fn hyperbolic_and_sil_commands() {
    let out = ok(&["hyperbolic", &fixture("p3.graph")]);
    assert!(out.starts_with("aut_w_hyperbolic: yes\nout_w_finite: yes\n"));
    let out = ok(&["sil", &fixture("star3.graph")]);
    assert!(out.starts_with("sil: i=1 j=2 R={3}\nout0_abelian: no\nout0_witness: x1:3 x2:3\n"));
}

#[test]
fn enumerate_runs_small_checks() {
    let out = ok(&["enumerate", "--max-n", "4", "--seed", "3"]);
    assert!(out.ends_with("result: pass\n"), "{out}");
    assert!(out.contains("random_trees: 200 trees, seed 3, 0 failures"));
    assert_eq!(gpauto(&["enumerate", "--max-n", "9"]).0, 2);
}
