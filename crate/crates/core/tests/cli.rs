use std::process::{Command, Output};

fn corehooks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corehooks"))
        .args(args)
        .env_remove("COREHOOKS_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_prints_a_bare_number() {
    let o = corehooks(&["count", "--t", "4", "--k", "1", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn count_range_is_csv() {
    let o = corehooks(&["count", "--t", "3", "--k", "1,2", "--n-range", "3..4"]);
    assert_eq!(
        stdout(&o),
        "n,t,k,value\n3,3,1,0\n3,3,2,0\n4,3,1,4\n4,3,2,2\n"
    );
}

#[test]
fn bias_table_has_verdicts() {
    let o = corehooks(&[
        "count",
        "--t",
        "5",
        "--k",
        "1,3,6",
        "--relations",
        "ge,ge",
        "--n-range",
        "7..7",
    ]);
    assert_eq!(stdout(&o), "n,verdict,5.1,5.3,5.6\n7,HOLDS,12,6,2\n");
}

#[test]
fn verify_statement_exits_zero() {
    let o = corehooks(&["verify", "--check", "thm14", "--n-max", "200"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("thm14 HOLDS"));
}

#[test]
fn verify_region_with_report_dir() {
    let dir = tempfile::tempdir().unwrap();
    let o = corehooks(&[
        "verify",
        "--check",
        "region",
        "--n-max",
        "18",
        "--report-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn conjecture_scan_reports_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("seed.jsonl");
    let o = corehooks(&[
        "conj-scan",
        "--n-max",
        "100",
        "--seed-dump",
        dump.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\n93,FAILS,382,384,284\n"));
    let seeds = std::fs::read_to_string(dump).unwrap();
    assert!(!seeds.is_empty());
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(
        corehooks(&["count", "--t", "3", "--k", "1", "--n", "-5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        corehooks(&["count", "--t", "1", "--k", "1", "--n", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        corehooks(&["verify", "--check", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        corehooks(&["--workers", "0", "quadform"]).status.code(),
        Some(2)
    );
}

#[test]
fn series_csv_against_oracle() {
    let o = corehooks(&["series", "--t", "4", "--order", "4", "--against", "triple"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,coefficient\n0,1\n1,1\n2,2\n3,3\n4,1\n");
    let o = corehooks(&["series", "--t", "3", "--order", "10", "--against", "theta"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn quadform_json() {
    let o = corehooks(&["quadform", "--h-max", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["x"], 3);
    assert_eq!(v[0]["s"], 1);
}

#[test]
fn enum_jsonl_lists_cores() {
    let o = corehooks(&["enum", "--n", "4", "--t", "3"]);
    assert_eq!(stdout(&o), "[3,1]\n[2,1,1]\n");
    let o = corehooks(&["enum", "--n", "6", "--exclude", "1", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "partition\n\"[6]\"\n\"[4,2]\"\n\"[3,3]\"\n\"[2,2,2]\"\n"
    );
}

#[test]
fn output_is_independent_of_worker_count() {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_corehooks"))
            .args([
                "count",
                "--t",
                "5",
                "--k",
                "1,3,6",
                "--n-range",
                "0..120",
                "--format",
                "jsonl",
            ])
            .env("COREHOOKS_WORKERS", workers)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.csv");
    let o = corehooks(&["-o", path.to_str().unwrap(), "quadform", "--h-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(path).unwrap(),
        "h,x,y,z,m,r,s\n2,3,1,3,1,0,1\n3,1,1,5,0,0,2\n"
    );
}
