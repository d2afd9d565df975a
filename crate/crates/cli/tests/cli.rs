use serde_json::Value;
use tsscpp::triangles::Object;
use tsscpp_cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["tsscpp".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn counts_boolean_triangles() {
    let (code, out, _) = call(&["enumerate", "--family", "boolean", "--n", "3", "--count-only"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "7");
}

#[test]
fn enumerated_objects_parse_back() {
    for family in ["asm", "monotone", "magog", "boolean", "nilp", "tsscpp", "permutation"] {
        let (code, out, _) = call(&["enumerate", "--family", family, "--n", "3", "--jsonl"]);
        assert_eq!(code, 0, "{family}");
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), if family == "permutation" { 6 } else { 7 }, "{family}");
        for line in lines {
            Object::from_json(line).unwrap();
        }
        let (_, array, _) = call(&["enumerate", "--family", family, "--n", "3"]);
        let parsed: Vec<Value> = serde_json::from_str(&array).unwrap();
        assert_eq!(parsed.len(), out.lines().count());
    }
}

#[test]
fn converts_the_worked_example() {
    let (code, out, _) = call(&["convert", "--from", "permutation", "--to", "boolean", "463512"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"kind":"boolean_triangle","n":6,"rows":[[1],[0,0],[1,1,0],[0,0,0,0],[1,0,0,0,0]]}"#);
    let (code, back, _) = call(&["convert", "--from", "boolean", "--to", "permutation", out.trim()]);
    assert_eq!(code, 0);
    assert_eq!(back.trim(), r#"{"kind":"permutation","n":6,"sigma":[4,6,3,5,1,2]}"#);
}

#[test]
fn convert_accepts_untagged_input() {
    let (code, out, _) = call(&["convert", "--from", "boolean", "--to", "magog", r#"{"n":3,"rows":[[0],[0,1]]}"#]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"kind":"magog_triangle","n":3,"rows":[[3],[1,3],[1,2,3]]}"#);
}

#[test]
fn convert_rejects_bad_input() {
    let (code, _, err) = call(&["convert", "--from", "boolean", "--to", "asm", r#"{"n":3,"rows":[[0],[0,1]]}"#]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let (code, _, _) = call(&["convert", "--from", "permutation", "--to", "boolean", "4635"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["convert", "--from", "magog", "--to", "boolean", r#"{"kind":"asm","n":1,"rows":[[1]]}"#]);
    assert_eq!(code, 2);
}

#[test]
fn statistics_of_the_worked_example() {
    let (code, out, _) = call(&["stats", "--from", "permutation", "463512"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["inversions"], 11);
    assert_eq!(v["zeros"], 11);
    assert_eq!(v["last_row_zeros"], 4);
    assert_eq!(v["lowest_one_last_diagonal"], 1);
}

#[test]
fn distribution_of_negative_ones() {
    let (code, out, _) = call(&["dist", "--family", "asm", "--n", "4", "--stat", "negative_ones"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"0":24,"1":16,"2":2}"#);
}

#[test]
fn poset_exports() {
    let (code, out, _) = call(&["poset", "--name", "tamari", "--n", "3", "--out", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 5);
    let (code, dot, _) = call(&["poset", "--name", "An", "--n", "3", "--out", "dot"]);
    assert_eq!(code, 0);
    assert!(dot.contains("label=\"2/13/123\""));
    assert_eq!(dot.matches("->").count(), 8);
    for name in ["An", "Tn", "TBool", "TnPerm", "TBoolPerm", "weak", "strong", "tamari", "catalan", "chains", "Pn", "Qn", "JPn", "JQn"] {
        let (code, _, err) = call(&["poset", "--name", name, "--n", "3", "--out", "dot"]);
        assert_eq!(code, 0, "{name}: {err}");
    }
}

#[test]
fn claims_exit_zero_when_they_hold() {
    for claim in ["thm4.2", "thm4.4", "thm4.6", "thm4.9", "thm4.12", "cor4.16", "cor4.17", "lemma4.8", "prop-nonlattice"] {
        let (code, out, err) = call(&["poset-check", "--claim", claim, "--n", "4"]);
        assert_eq!(code, 0, "{claim}: {err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["holds"], true);
        assert_eq!(v["claim"], claim);
    }
}

#[test]
fn a_failing_claim_exits_one_with_its_witness() {
    // at order three the avoider subposets are still ranked
    let (code, out, err) = call(&["poset-check", "--claim", "remark-avoiders", "--n", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("does not hold"));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holds"], false);
}

#[test]
fn verify_all_at_four() {
    let (code, out, err) = call(&["verify-all", "--n", "4"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.lines().all(|l| l.starts_with("PASS")));
    assert!(out.contains("thm4.2  n=4"));
    assert!(out.contains("remark-avoiders  n=4"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&[]).0, 2);
    assert_eq!(call(&["enumerate", "--family", "nope", "--n", "3"]).0, 2);
    assert_eq!(call(&["enumerate", "--family", "boolean", "--n", "40"]).0, 2);
    assert_eq!(call(&["poset-check", "--claim", "thm9.9", "--n", "3"]).0, 2);
    assert_eq!(call(&["verify-all", "--n", "1"]).0, 2);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("enumerate"));
}
