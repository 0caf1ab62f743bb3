use std::process::{Command, Output};

fn strongmin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strongmin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = strongmin(&full);
    let value = serde_json::from_str(&stdout(&out)).expect("json on stdout");
    (value, out.status.code().unwrap())
}

#[test]
fn classify_reports_status_and_weight() {
    let (v, code) = json(&["classify", "B3", "3,2,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["classification"]["status"], "Strong");
    assert_eq!(v["classification"]["lambda"], serde_json::json!([1, 0, 0]));

    let (v, _) = json(&["classify", "A4", "2,1,2,4,3"]);
    assert_eq!(v["classification"]["status"], "NotMinuscule");
    assert!(v["classification"].get("lambda").is_none());

    let (v, _) = json(&["classify", "A2", ""]);
    assert_eq!(v["classification"]["status"], "DominantNotStrong");
}

#[test]
fn enumerate_counts_and_order() {
    let (v, code) = json(&["enumerate", "C3", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 3);
    assert_eq!(
        v["elements"],
        serde_json::json!([[1, 2, 3], [2, 1, 2, 3], [3, 2, 1, 2, 3]])
    );

    let (v, code) = json(&["enumerate", "E6", "6"]);
    assert_eq!((v["count"].as_u64(), code), (Some(12), 0));
    let (v, _) = json(&["enumerate", "G2", "1"]);
    assert_eq!(v["count"], 1);

    let lens: Vec<u64> = {
        let out = strongmin(&["--format", "tsv", "enumerate", "D6", "1"]);
        stdout(&out)
            .lines()
            .map(|l| l.split('\t').next().unwrap().parse().unwrap())
            .collect()
    };
    assert_eq!(lens.len(), 15);
    assert!(lens.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn output_is_independent_of_worker_count() {
    let one = strongmin(&["--jobs", "1", "--format", "tsv", "enumerate", "E7", "6"]);
    let two = strongmin(&["--jobs", "3", "--format", "tsv", "enumerate", "E7", "6"]);
    assert_eq!(one.stdout, two.stdout);
    assert_eq!(stdout(&one).lines().count(), 43);
}

#[test]
fn demazure_exit_codes() {
    let out = strongmin(&["--format", "tsv", "demazure", "B4", "1"]);
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("B4\t1\t8\t8\n", Some(0)));
    let out = strongmin(&["--format", "tsv", "demazure", "E7", "6"]);
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("E7\t6\t43\t43\n", Some(0)));
    // The count above v_4 is 3 here while the closed form says 4.
    let out = strongmin(&["--format", "tsv", "demazure", "D4", "4"]);
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("D4\t4\t3\t4\n", Some(1)));
    let out = strongmin(&["demazure", "B4", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["classify", "B3", "1,1"],
        vec!["classify", "B3", "9"],
        vec!["classify", "Q3", "1"],
        vec!["enumerate", "C3", "1"],
        vec!["--budget", "0", "verify", "A", "3"],
        vec!["frobnicate"],
    ] {
        let out = strongmin(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_suites() {
    let (v, code) = json(&["verify", "G2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["ok"], true);
    let sweep = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["check"] == "full_sweep")
        .unwrap();
    assert!(sweep["detail"].as_str().unwrap().starts_with("12 elements"));

    for fam in [["A", "5"], ["D", "5"]] {
        let (v, code) = json(&["verify", fam[0], fam[1]]);
        assert_eq!((v["ok"].as_bool(), code), (Some(true), 0), "{v}");
    }

    let out = strongmin(&["--budget", "1000", "--format", "tsv", "verify", "B", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("B5\tfull_sweep\t1\tskipped"));
}

#[test]
fn exceptional_counts_golden() {
    let out = strongmin(&["--format", "tsv", "exceptional-counts"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), include_str!("golden/exceptional_counts.tsv"));
}
