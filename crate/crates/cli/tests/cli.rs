use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_prefdomain"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn write_fixture(dir: &Path, name: &str) -> PathBuf {
    let out = run(&["fixtures", name]);
    assert_eq!(code(&out), 0);
    let path = dir.join(format!("{name}.txt"));
    std::fs::write(&path, &out.stdout).unwrap();
    path
}

fn status_of<'a>(report: &'a Value, name: &str) -> &'a str {
    report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == name)
        .unwrap_or_else(|| panic!("no result {name}"))["status"]
        .as_str()
        .unwrap()
}

#[test]
fn fixtures_list_and_round_trip() {
    let list = stdout(&run(&["fixtures", "--list"]));
    for name in ["table1", "table2", "table3", "table4", "table5", "table6"] {
        assert!(list.contains(name), "{list}");
        let text = stdout(&run(&["fixtures", name]));
        let back = run_stdin(&["check", "--json", "--only", "connected", "-"], &text);
        assert_eq!(json(&back)["inputs"][0]["preferences"].as_u64().unwrap() as usize, text.lines().count() - 1);
    }
    let u = run(&["fixtures", "unrestricted", "--m", "3"]);
    assert_eq!(code(&u), 0);
    assert_eq!(stdout(&u).lines().count(), 7);
    assert_eq!(code(&run(&["fixtures", "no-such-domain"])), 2);
}

#[test]
fn check_verdicts_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let t4 = write_fixture(dir.path(), "table4");
    let t5 = write_fixture(dir.path(), "table5");
    let t4s = t4.to_str().unwrap();

    let ok = run(&["check", "--only", "cdn,connected", t4s]);
    assert_eq!(code(&ok), 0, "{}", stdout(&ok));

    let fails = run(&["check", "--json", "--only", "property-p", t5.to_str().unwrap()]);
    assert_eq!(code(&fails), 1);
    let report = json(&fails);
    assert_eq!(status_of(&report, "property_p"), "fails");
    let w = &report["results"][0]["witness"];
    assert_eq!((w["a"].as_u64(), w["b"].as_u64()), (Some(1), Some(2)));
    let mut ends = [w["from"].as_u64().unwrap(), w["to"].as_u64().unwrap()];
    ends.sort_unstable();
    assert_eq!(ends, [3, 12]);

    let t6 = write_fixture(dir.path(), "table6");
    let report = json(&run(&["check", "--json", t6.to_str().unwrap()]));
    assert_eq!(status_of(&report, "cdn"), "fails");
    assert_eq!(status_of(&report, "connected"), "holds");
    assert_eq!(status_of(&report, "disagreement"), "holds");
}

#[test]
fn parse_and_usage_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "alternatives: a b c\na b\n").unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains('2'));
    assert_eq!(code(&run(&["check", "/no/such/file"])), 2);
    assert_eq!(code(&run(&["check"])), 2);
    assert_eq!(code(&run(&["scf", "search", "--n", "2", "-"])), 2);
}

#[test]
fn stdin_domain_matches_file_domain() {
    let dir = TempDir::new().unwrap();
    let t3 = write_fixture(dir.path(), "table3");
    let text = std::fs::read_to_string(&t3).unwrap();
    let from_file = run(&["graph", t3.to_str().unwrap()]);
    let from_stdin = run_stdin(&["graph", "-"], &text);
    assert_eq!(code(&from_file), 0);
    assert_eq!(stdout(&from_file), stdout(&from_stdin));
    // single-peaked on a1 a2 a3 a4: the graph is that path
    let edges: Vec<String> = stdout(&from_file).lines().map(str::to_owned).collect();
    assert_eq!(edges.len(), 3, "{edges:?}");
}

#[test]
fn construct_then_check_pipeline() {
    let dir = TempDir::new().unwrap();
    let t2 = write_fixture(dir.path(), "table2");
    let scf = dir.path().join("rule.scf");
    let (t2s, scfs) = (t2.to_str().unwrap(), scf.to_str().unwrap());

    let mut built = 0;
    for pstar in 1..=7 {
        let ps = pstar.to_string();
        let out = run(&["scf", "construct", "case2", t2s, "--n", "2", "--pstar", &ps, "-o", scfs]);
        if code(&out) != 0 {
            assert_eq!(code(&out), 1, "pstar {pstar}");
            continue;
        }
        built += 1;
        let ok = run(&["scf", "check", "--domain", t2s, "--axioms", "unanimity,local-sp,non-dictatorship", scfs]);
        assert_eq!(code(&ok), 0, "{}", stdout(&ok));
    }
    assert!(built > 0);

    let t1 = write_fixture(dir.path(), "table1");
    let out = run(&["scf", "construct", "case1", t1.to_str().unwrap(), "--n", "3", "-o", scfs]);
    assert_eq!(code(&out), 0);
    let report = json(&run(&["scf", "check", "--json", "--domain", t1.to_str().unwrap(), scfs]));
    assert_eq!(status_of(&report, "unanimity"), "holds");
    assert_eq!(status_of(&report, "local_sp"), "holds");
    assert_eq!(status_of(&report, "sp"), "fails");

    // a rule checked against the wrong domain is rejected
    assert_eq!(code(&run(&["scf", "check", "--domain", t2s, scfs])), 2);
}

#[test]
fn search_outcomes_and_budget() {
    let dir = TempDir::new().unwrap();
    let t4 = write_fixture(dir.path(), "table4");
    let t4s = t4.to_str().unwrap();
    // misspelt flag
    let sp = ["scf", "search", t4s, "--n", "2", "--unanimity", "--sp", "--non-dictorial"];
    assert_eq!(code(&run(&sp)), 2);

    let args = ["scf", "search", t4s, "--n", "2", "--unanimity", "--sp", "--non-dictatorial"];
    assert_eq!(code(&run(&args)), 1);
    let mut expect = args.to_vec();
    expect.extend(["--expect", "exhausted", "--json"]);
    let out = run(&expect);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert!(report.to_string().contains("exhausted"), "{report}");

    let t1 = write_fixture(dir.path(), "table1");
    let found = dir.path().join("found.scf");
    let args = [
        "scf", "search", t1.to_str().unwrap(), "--n", "2", "--unanimity", "--local-sp", "--non-tops-only", "-o",
        found.to_str().unwrap(),
    ];
    assert_eq!(code(&run(&args)), 0);
    let check = run(&[
        "scf", "check", "--domain", t1.to_str().unwrap(), "--axioms", "unanimity,local-sp,non-tops-only",
        found.to_str().unwrap(),
    ]);
    assert_eq!(code(&check), 0, "{}", stdout(&check));

    let u4 = dir.path().join("u4.txt");
    std::fs::write(&u4, &run(&["fixtures", "unrestricted", "--m", "4"]).stdout).unwrap();
    let tight = run(&[
        "scf", "search", u4.to_str().unwrap(), "--n", "3", "--unanimity", "--sp", "--non-dictatorial",
        "--max-nodes", "1",
    ]);
    assert_eq!(code(&tight), 3);
}

#[test]
fn classify_reports_memberships() {
    let dir = TempDir::new().unwrap();
    let t5 = write_fixture(dir.path(), "table5");
    let out = run(&["scf", "classify", "--json", t5.to_str().unwrap()]);
    assert!(code(&out) == 0 || code(&out) == 1);
    let report = json(&out);
    let text = report.to_string();
    for key in ["cdn", "l_tops_only", "intersection_agrees"] {
        assert!(text.contains(key), "{key} missing");
    }
    assert_eq!(report["intersection_agrees"], Value::Bool(true));
}

#[test]
fn witnesses_replay_from_reports() {
    let dir = TempDir::new().unwrap();
    for name in ["table2", "table5", "table6"] {
        let path = write_fixture(dir.path(), name);
        let out = run(&["check", "--json", path.to_str().unwrap()]);
        let report = dir.path().join(format!("{name}.json"));
        std::fs::write(&report, &out.stdout).unwrap();
        let replay = run(&["verify-witness", report.to_str().unwrap()]);
        assert_eq!(code(&replay), 0, "{name}: {}", stdout(&replay));
    }

    // a tampered witness no longer replays
    let t5 = write_fixture(dir.path(), "table5");
    let mut report = json(&run(&["check", "--json", "--only", "property-p", t5.to_str().unwrap()]));
    let replay = report["results"][0]["replay"].clone();
    let mut bad = replay.clone();
    bad["witness"]["b"] = Value::from(3);
    let good = run_stdin(&["verify-witness", "-"], &replay.to_string());
    assert_eq!(code(&good), 0);
    let tampered = run_stdin(&["verify-witness", "-"], &bad.to_string());
    assert_eq!(code(&tampered), 1);
    report["results"][0]["replay"] = bad;
    let whole = run_stdin(&["verify-witness", "-"], &report.to_string());
    assert_eq!(code(&whole), 1);

    assert_eq!(code(&run_stdin(&["verify-witness", "-"], "{not json")), 2);
}
