use std::process::{Command, Output};

use serde_json::Value;

fn valdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_valdim")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = valdim(&full);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&out)));
    (code(&out), value)
}

fn joined(list: &Value) -> String {
    list.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect::<Vec<_>>().join(", ")
}

#[test]
fn compare_and_classify() {
    let out = valdim(&["compare", "--matrix", "1,1;1,0", "--expA", "1,2", "--expB", "2,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "(1,2) < (2,1)");

    let (status, value) = json(&["classify", "--matrix", "1,s2"]);
    assert_eq!(status, 0);
    assert_eq!(value["class"]["is_total_order"], true);
    assert_eq!(value["class"]["is_rational"], false);
}

#[test]
fn parse_errors_exit_2() {
    let out = valdim(&["classify", "--matrix", "1,,"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 2"));
    assert_eq!(code(&valdim(&["suite", "--name", "nope"])), 2);
    assert_eq!(code(&valdim(&["witness", "--ring", "V", "--matrix", "1,0;0,1", "--elements", "v, 1/v"])), 2);
    assert_eq!(code(&valdim(&["frobnicate"])), 2);
}

#[test]
fn witness_round_trips_through_verify() {
    for (ring, matrix, elements) in [
        ("V", "1,1;1,0", "v, v^(s2)"),
        ("V", "0,1;1,0", "v^(1/2)+v, v^(3/2)"),
        ("R", "1,0;0,1", "v, u*v^2"),
        ("W", "1,s2", "v, u"),
        ("W", "1,1", "v^2, u*v"),
    ] {
        let (status, value) = json(&["witness", "--ring", ring, "--matrix", matrix, "--elements", elements]);
        assert_eq!(status, 0, "{ring} {matrix}: {value}");
        let w = &value["witness"];
        let out = valdim(&[
            "verify",
            "--ring",
            ring,
            "--matrix",
            w["order"].as_str().unwrap(),
            "--poly",
            w["poly"].as_str().unwrap(),
            "--elements",
            &joined(&w["elements"]),
            "--kind",
            w["kind"].as_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
    }
}

#[test]
fn bad_witness_exits_1() {
    let out = valdim(&["verify", "--matrix", "1,0;0,1", "--poly", "X2^2-X1", "--elements", "v^(s2), v"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not 0"));

    // W has no witnesses under rational total orders.
    let out = valdim(&["witness", "--ring", "W", "--matrix", "1,0;0,1", "--elements", "v, u"]);
    assert_eq!(code(&out), 1);

    // Vanishes, but the smallest monomial has coefficient -1.
    let out = valdim(&["verify", "--matrix", "1,0;0,1", "--poly", "X1-X2", "--elements", "v, v"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn pipelines() {
    let (status, value) = json(&["vdim", "--matrix", "1,1;1,0", "--elements", "v, v^(s2)"]);
    assert_eq!(status, 0, "{value}");
    assert_eq!(value["L"], "0,1;1,-1");

    let (status, value) =
        json(&["overring", "--matrix", "1,1;1,0", "--numerators", "v, 1", "--denominators", "1+v, v^(1/2)"]);
    assert_eq!(status, 0, "{value}");
    assert_eq!(value["witness"]["order"], "1,0;0,1");

    let out = valdim(&["transport", "--matrix", "1,1;1,0", "--elements", "v, v^(s2)"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    let out = valdim(&["homogenize", "--poly", "X1-v^(1/2)*X2", "--elements", "v, v^(1/2)"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn searches() {
    let out = valdim(&["search", "--ring", "V", "--matrix", "1,0;0,1", "--elements", "v, v^(s2)"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("no witness"));

    let (status, value) =
        json(&["search", "--ring", "V", "--matrix", "1,0;0,1", "--elements", "v^2, v", "--max-degree", "2"]);
    assert_eq!(status, 0);
    assert!(value["witness"].is_object(), "{value}");

    let out = valdim(&["search", "--ring", "R", "--homogeneous", "--elements", "v, u*v"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("no homogeneous relation"));
}

#[test]
fn suite_witnesses_verify_from_report() {
    let (status, report) = json(&["suite", "--name", "tDim", "--scale", "2", "--seed", "9"]);
    assert_eq!(status, 0);
    let mut checked = 0;
    for case in report["cases"].as_array().unwrap() {
        assert_eq!(case["verdict"], "pass", "{case}");
        let ring = case["inputs"]["ring"].as_str().unwrap_or("V");
        for w in case["witnesses"].as_array().into_iter().flatten() {
            let out = valdim(&[
                "verify",
                "--ring",
                ring,
                "--matrix",
                w["order"].as_str().unwrap(),
                "--poly",
                w["poly"].as_str().unwrap(),
                "--elements",
                &joined(&w["elements"]),
                "--kind",
                w["kind"].as_str().unwrap(),
            ]);
            assert_eq!(code(&out), 0, "{w}: {}", stdout(&out));
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn suite_seed_from_environment() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_valdim"))
            .args(["--json", "suite", "--name", "lPrelim", "--scale", "5"])
            .env("VALDIM_SEED", seed)
            .output()
            .unwrap()
    };
    let a = run("7");
    let b = run("7");
    let c = run("8");
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["seed"], 7);
    assert_eq!(report["summary"]["total"], 5);
}

#[test]
fn suite_writes_output_file() {
    let path = std::env::temp_dir().join(format!("valdim-suite-{}.json", std::process::id()));
    let out = valdim(&["suite", "--name", "pW", "--scale", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(report["command"]["name"], "pW");
    assert!(report["summary"]["failed"] == 0);
}
