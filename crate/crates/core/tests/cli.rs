use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shape-wilf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("shape-wilf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn count_prints_the_number() {
    let o = run(&[
        "count",
        "--shape",
        "5,5,4",
        "--content",
        "2,2,1",
        "--patterns",
        "231",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "18");
}

#[test]
fn count_json_record() {
    let o = run(&[
        "count",
        "--shape",
        "6,6,6,4",
        "--content",
        "positive-rows",
        "--patterns",
        "312",
        "--out",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["shape"], "6,6,6,4");
    assert_eq!(v["content"], "positive-rows");
    assert_eq!(v["patterns"], "312");
    assert_eq!(v["count"], 429);
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["count", "--shape", "4,5", "--patterns", "231"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a Ferrers shape"));
    assert_eq!(run(&["table", "5"]).status.code(), Some(2));
    assert_eq!(
        run(&["count", "--shape", "3", "--patterns", "13"])
            .status
            .code(),
        Some(2)
    );
    let bad = run(&[
        "count",
        "--shape",
        "5,5,4",
        "--content",
        "2,2",
        "--patterns",
        "231",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn table_four_passes_and_table_one_reports() {
    let o = run(&["table", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.ends_with(" ok")).count(), 36);
    assert!(text.contains("verdict: equal"));
    let o = run(&["table", "1", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let mismatches = v["mismatches"].as_array().unwrap();
    assert_eq!(o.status.code(), Some(1), "{mismatches:?}");
    assert_eq!(v["verdict"], "unequal");
}

#[test]
fn report_is_independent_of_jobs() {
    let one = run(&["table", "2", "--out", "json", "--jobs", "1"]);
    let many = run(&["table", "2", "--out", "json", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn warm_cache_gives_identical_reports() {
    let cache = scratch("warm.jsonl");
    let _ = std::fs::remove_file(&cache);
    let cache = cache.to_str().unwrap();
    let args = [
        "check-equiv",
        "--patterns",
        "231+121",
        "--versus",
        "312+211",
        "--max-cols",
        "5",
        "--max-rows",
        "3",
        "--out",
        "json",
    ];
    let plain = run(&args);
    let mut with_cache = args.to_vec();
    with_cache.extend(["--cache", cache]);
    let cold = run(&with_cache);
    let lines = std::fs::read_to_string(cache).unwrap().lines().count();
    let warm = run(&with_cache);
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(plain.stdout, cold.stdout);
    assert_eq!(cold.stdout, warm.stdout);
    assert!(lines > 0);
    assert_eq!(
        std::fs::read_to_string(cache).unwrap().lines().count(),
        lines
    );
    std::fs::remove_file(cache).unwrap();
}

#[test]
fn equivalence_check_exit_codes() {
    let equal = run(&[
        "check-equiv",
        "--patterns",
        "12",
        "--versus",
        "21",
        "--max-cols",
        "4",
        "--max-rows",
        "4",
    ]);
    assert_eq!(equal.status.code(), Some(0));
    let unequal = run(&[
        "check-equiv",
        "--patterns",
        "231",
        "--versus",
        "312",
        "--max-cols",
        "5",
        "--max-rows",
        "4",
        "--out",
        "json",
    ]);
    assert_eq!(unequal.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&unequal.stdout).unwrap();
    assert_eq!(v["verdict"], "unequal");
    assert_eq!(
        v["scope"]["pattern_sets"],
        serde_json::json!(["231", "312"])
    );
}

#[test]
fn conjecture_scans_report_without_failing() {
    let o = run(&[
        "scan-conj2",
        "--beta",
        "1",
        "--max-length",
        "7",
        "--max-alphabet",
        "5",
        "--out",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let first = &v["mismatches"][0];
    assert_eq!(first["shape"], "7,7,7,7,7");
    assert_eq!(
        (first["count_a"].as_u64(), first["count_b"].as_u64()),
        (Some(67853), Some(67854))
    );
    let o = run(&[
        "scan-conj1",
        "--max-cols",
        "3",
        "--max-rows",
        "3",
        "--out",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "conjecture-consistent");
    let o = run(&[
        "scan-conj2",
        "--beta",
        "-",
        "--max-length",
        "5",
        "--max-alphabet",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: equal"));
}

#[test]
fn bijection_prints_trace() {
    let o = run(&[
        "bijection",
        "--theorem",
        "11",
        "--shape",
        "10,10,10,7,4,4",
        "--content",
        "2,2,3,1,1,1",
        "--filling",
        "1,4,6,5,2,1,3,2,3,3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["theorem"], "11");
    assert_eq!(v["blowup"]["col_to_row"], "1,8,10,9,3,2,5,4,6,7");
    assert_eq!(v["placement"]["col_to_row"], "9,2,1,10,4,8,3,7,6,5");
    assert_eq!(v["output"]["col_to_row"], "5,1,1,6,2,4,2,3,3,3");
    assert_eq!(v["blowup_i"].as_array().unwrap().len(), 21);
    let back = run(&[
        "bijection",
        "--theorem",
        "11",
        "--shape",
        "10,10,10,7,4,4",
        "--content",
        "2,2,3,1,1,1",
        "--filling",
        "5,1,1,6,2,4,2,3,3,3",
        "--inverse",
    ]);
    assert_eq!(back.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&back.stdout).unwrap();
    assert_eq!(v["output"]["col_to_row"], "1,4,6,5,2,1,3,2,3,3");
}

#[test]
fn enumerate_lists_and_csv() {
    let o = run(&[
        "enumerate",
        "--shape",
        "3,3,3",
        "--content",
        "1,1,1",
        "--patterns",
        "231",
    ]);
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = run(&["table", "4", "--out", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next().unwrap(), "shape,patterns,positive-rows");
    assert!(text.contains("\"9,8,7,6,5,4\",312,6303"));
    let o = run(&["count-words", "-n", "4", "-m", "3", "--patterns", "12"]);
    assert_eq!(stdout(&o).trim(), "15");
}
