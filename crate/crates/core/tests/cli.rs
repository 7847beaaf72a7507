use std::fs;
use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clique-immersion")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn chromatic_and_alpha() {
    let o = cli(&["chromatic", "Dhc"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["chi"], 3);
    let o = cli(&["alpha", "IheA@GUAo"]);
    assert_eq!(json(&o)["alpha"], 4);
}

#[test]
fn find_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = cli(&["immersion", "find", "--t", "3", "--strong", "--odd", "Dhc"]);
    assert_eq!(o.status.code(), Some(0));
    let cert = dir.path().join("c5.json");
    fs::write(&cert, o.stdout).unwrap();
    let o = cli(&["verify", "--cert", cert.to_str().unwrap(), "Dhc"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["accepted"], true);

    // the same certificate on C5 minus an edge is rejected
    let o = cli(&["verify", "--cert", cert.to_str().unwrap(), "DhC"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["accepted"], false);

    fs::write(&cert, "{\"t\": 2").unwrap();
    assert_eq!(cli(&["verify", "--cert", cert.to_str().unwrap(), "Dhc"]).status.code(), Some(2));
}

#[test]
fn immersion_absent_and_max() {
    // C4 has no odd K3 immersion
    let o = cli(&["immersion", "find", "--t", "3", "--odd", "Cl"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cli(&["immersion", "max", "--strong", "--odd", "Dhc"]);
    assert_eq!(json(&o)["t"], 3);
}

#[test]
fn build_third_trace() {
    let o = cli(&["build-third", "--verbose", "Dhc"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["terminals"], serde_json::json!([2, 3]));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.trim(), "depth=0 n=5 branch=low-degree x=0 t=2");
    // independence number 4
    assert_eq!(cli(&["build-third", "IheA@GUAo"]).status.code(), Some(2));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(cli(&["chromatic", "!!"]).status.code(), Some(2));
    assert_eq!(cli(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cli(&["sweep", "--family", "alpha2", "--n", "4", "--checks", "bogus"]).status.code(), Some(2));
    assert_eq!(cli(&["sweep", "--family", "alpha2", "--n", "12"]).status.code(), Some(2));
    assert_eq!(cli(&["sweep", "--input", "/nonexistent/file.g6"]).status.code(), Some(2));
}

#[test]
fn sweep_family_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a6.csv");
    let o = cli(&[
        "sweep",
        "--family",
        "alpha2",
        "--n",
        "6",
        "--checks",
        "main,appendix,vergara",
        "--out",
        out.to_str().unwrap(),
        "--format",
        "csv",
        "--workers",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 1 + 38);

    let input = dir.path().join("k3.g6");
    fs::write(&input, "Bw\n").unwrap();
    let o = cli(&["sweep", "--input", input.to_str().unwrap(), "--checks", "main"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "graph6,n,alpha,chi,t_max_plain,t_max_strong_odd,main_bound,main_holds\nBw,3,1,3,,3,5,true\n"
    );

    let empty = dir.path().join("empty.g6");
    fs::write(&empty, "").unwrap();
    let o = cli(&["sweep", "--input", empty.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[]");

    let o = cli(&[
        "sweep",
        "--family",
        "random-alpha2",
        "--n",
        "11",
        "--count",
        "5",
        "--seed",
        "9",
        "--checks",
        "appendix",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
}
