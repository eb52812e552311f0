use std::fs;
use std::process::{Command, Output};

use tempfile::tempdir;

fn bv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bv")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn prove_verdicts_map_to_exit_codes() {
    let yes = bv(&["prove", "[a,~a]"]);
    assert_eq!(code(&yes), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&yes)).unwrap();
    assert_eq!(json["conclusion"], "[a,~a]");
    assert_eq!(code(&bv(&["prove", "(a,~a)"])), 1);
    assert_eq!(code(&bv(&["prove", "[a,"])), 2);
    assert_eq!(code(&bv(&["prove", "S1", "--budget", "5"])), 3);
    assert_eq!(code(&bv(&["no-such-command"])), 2);
}

#[test]
fn proofs_round_trip_through_check_and_files() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("proof.json");
    let proof = bv(&["prove", "[<a;b>,<~a;~b>]"]);
    fs::write(&path, &proof.stdout).unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(code(&bv(&["check", &arg])), 0);
    assert_eq!(code(&bv(&["check", &arg, "--system", "sbv"])), 0);

    let mut json: serde_json::Value = serde_json::from_str(&stdout(&proof)).unwrap();
    let premise = json["steps"][0]["premise"].as_str().unwrap().to_string();
    json["steps"][0]["premise"] = format!("[z,{premise}]").into();
    fs::write(&path, json.to_string()).unwrap();
    let bad = bv(&["check", &arg]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("step 0"), "{}", stdout(&bad));
}

#[test]
fn generated_proofs_check() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("s1.json");
    let out = bv(&["gen-sn", "1", "--derivation"]);
    assert_eq!(code(&out), 0);
    fs::write(&path, &out.stdout).unwrap();
    assert_eq!(code(&bv(&["check", &format!("@{}", path.display())])), 0);
    let s0 = stdout(&bv(&["gen-sn", "0"]));
    assert_eq!(code(&bv(&["equiv", s0.trim(), "[<[a_0,b_0];c_0>,<~a_0;[~b_0,~c_0]>]"])), 0);
}

#[test]
fn first_redex_on_s0_reports_depth_two() {
    let out = bv(&["first-redex", "--goal", "S0", "--json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let provable: Vec<_> = json["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["premise_provable"] == true)
        .collect();
    assert!(!provable.is_empty());
    assert!(provable.iter().all(|c| c["redex_depth"] == 2));
    assert_eq!(json["min_provable_depth"], 2);
}

#[test]
fn equivalence_and_depth() {
    assert_eq!(code(&bv(&["equiv", "[a,(b,c)]", "[(c,b),a,o]"])), 0);
    assert_eq!(code(&bv(&["equiv", "<a;b>", "<b;a>"])), 1);
    assert_eq!(stdout(&bv(&["depth", "[a,b,{}]"])).trim(), "1");
    assert_eq!(stdout(&bv(&["depth", "[<{};c>,<b;c>]"])).trim(), "2");
    assert_eq!(stdout(&bv(&["depth", "a"])).trim(), "0");
}

#[test]
fn web_outputs_and_reconstruction() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("web.json");
    let out = bv(&["web", "[([a,b],c),<d;[e,f]>]", "--json"]);
    fs::write(&path, &out.stdout).unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(code(&bv(&["verify-web", &arg])), 0);
    let back = bv(&["reconstruct", &arg]);
    assert_eq!(code(&back), 0);
    let rebuilt = stdout(&back).lines().last().unwrap().to_string();
    assert_eq!(code(&bv(&["equiv", &rebuilt, "[([a,b],c),<d;[e,f]>]"])), 0);

    let dot = stdout(&bv(&["web", "<a;b>", "--dot"]));
    assert!(dot.starts_with("digraph web {"));
    assert!(dot.contains("n0 -> n1 [color=red];"));
    assert_eq!(code(&bv(&["web", "a", "--json", "--dot"])), 2);
}

#[test]
fn candidates_that_are_not_webs_are_rejected() {
    let triangle = r#"{"occurrences":[
        {"id":0,"atom":"a","neg":false,"index":[]},
        {"id":1,"atom":"b","neg":false,"index":[]},
        {"id":2,"atom":"c","neg":false,"index":[]}],
      "relations":[
        {"a":0,"b":1,"rel":"par"},
        {"a":1,"b":2,"rel":"copar"},
        {"a":0,"b":2,"rel":"seq"}]}"#;
    assert_eq!(code(&bv(&["verify-web", triangle])), 1);
    assert_eq!(code(&bv(&["reconstruct", triangle])), 1);
    assert_eq!(code(&bv(&["verify-web", "{\"occurrences\":[]"])), 2);
}

#[test]
fn delete_pair_from_generated_proof() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("p.json");
    fs::write(&path, bv(&["prove", "[(a,b),~a,~b]"]).stdout).unwrap();
    let arg = format!("@{}", path.display());
    let out = bv(&["delete-pair", &arg, "a"]);
    assert_eq!(code(&out), 0);
    fs::write(&path, &out.stdout).unwrap();
    assert_eq!(code(&bv(&["check", &arg])), 0);
    assert_eq!(code(&bv(&["delete-pair", &arg, "q"])), 1);
    assert_eq!(code(&bv(&["delete-pair", &arg, "[a,b]"])), 2);
}

#[test]
fn shallow_check_diagnostics() {
    let ok = bv(&["shallow-check", "[A,B,(C,C')]", "[A,([B,C],C')]"]);
    assert_eq!(code(&ok), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&ok)).unwrap();
    assert_eq!(json["shallow"], true);
    assert_eq!(json["depth"], 3);

    let bad = bv(&["shallow-check", "<A;B>", "[A,B]"]);
    assert_eq!(code(&bad), 1);
    let json: serde_json::Value = serde_json::from_str(&stdout(&bad)).unwrap();
    assert_eq!(json["clauses"][0]["clause"], 1);
    assert_eq!(code(&bv(&["shallow-check", "[a,~a]", "o"])), 1);
}

#[test]
fn fixtures_run_passes() {
    let out = bv(&["fixtures", "run"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let lines: Vec<_> = stdout(&out).lines().map(str::to_string).collect();
    assert!(lines.len() >= 10);
    assert!(lines.iter().all(|l| l.starts_with("PASS")));
}
