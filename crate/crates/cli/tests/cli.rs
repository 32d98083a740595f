use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centstab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn specht_dimensions() {
    for (mu, field, dim) in [("2,1", "Q", 2), ("4", "Fp:7", 1), ("1,1,1", "Q", 1), ("3,2", "Q", 5)] {
        let doc = json(&["specht", mu, "--field", field]);
        assert_eq!(doc["dim"], dim, "{mu}");
        assert_eq!(doc["schema"], "centstab/1");
        assert_eq!(doc["labels"].as_array().unwrap().len(), dim);
    }
    let o = run(&["specht", "2,1"]);
    assert!(stdout(&o).contains("dim 2"));
}

#[test]
fn stabilize_examples() {
    let dims = |doc: &serde_json::Value| -> Vec<u64> {
        doc["terms"].as_array().unwrap().iter().map(|t| t["dim"].as_u64().unwrap()).collect()
    };
    assert_eq!(dims(&json(&["stabilize", "perm", "--steps", "4"])), vec![1, 2, 3, 4, 5]);
    assert_eq!(dims(&json(&["stabilize", "trivial", "--steps", "4"])), vec![1; 5]);
    let doc = json(&["stabilize", "specht:1,1", "--steps", "3", "--field", "Q"]);
    assert_eq!(dims(&doc), vec![1, 2, 3, 4]);
    for (k, t) in doc["terms"].as_array().unwrap().iter().enumerate() {
        assert_eq!(t["constituents"][0]["partition"], serde_json::json!([k + 1, 1]));
    }
    let via_flag = json(&["stabilize", "--seed-spec", "perm", "--steps", "2"]);
    assert_eq!(dims(&via_flag), vec![1, 2, 3]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["specht", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["specht", "x"]).status.code(), Some(2));
    assert_eq!(run(&["specht", "2", "--field", "Fp:4"]).status.code(), Some(2));
    assert_eq!(run(&["stabilize", "cube"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["stabilize", "trivial", "--steps", "4", "--field", "Fp:3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("semisimple"));
    assert_eq!(
        run(&["stabilize", "trivial", "--steps", "4", "--field", "Fp:3", "--no-decompose"]).status.code(),
        Some(0)
    );
    assert_eq!(run(&["verify", "restriction", "--field", "Fp:5"]).status.code(), Some(3));
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "chain", "--max-n", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let report = json(&["verify", "resolution", "--max-n", "3", "--max-k", "3"]);
    assert_eq!(report["pass"], true);
    let cases = report["cases"].as_array().unwrap();
    let exact: Vec<_> =
        cases.iter().filter(|c| c["case_id"].as_str().unwrap().starts_with("resolution/exact/")).collect();
    assert_eq!(exact.len(), 6 * 3);
    for c in exact {
        assert!(c["homology"].as_array().unwrap().iter().all(|h| h == 0));
        assert!(!c["paper_statement"].as_str().unwrap().is_empty());
    }
    let report = json(&["verify", "dimpoly", "--max-n", "5", "--max-k", "5", "--filter", "dimpoly/count/*"]);
    assert_eq!(report["pass"], true);
    assert_eq!(report["cases"].as_array().unwrap().len(), 18 * 6);
}

#[test]
fn json_output_is_deterministic_and_round_trips() {
    let args = ["verify", "all", "--max-n", "3", "--max-k", "2", "--max-m", "6", "--format", "json", "--field", "Fp:7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: centstab::verify::VerifyReport = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", stdout(&a));
    assert!(report.pass);
}
