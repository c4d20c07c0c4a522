use std::process::{Command, Output};

fn verma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn info_reports_the_longest_element() {
    let out = verma(&["info", "--type", "A2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order           6\n"), "{text}");
    assert!(text.contains("w0              1 2 1\n"), "{text}");

    let out = verma(&["info", "--type", "E8", "--format", "json"]);
    let info: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(info["order"], "696729600");
    assert_eq!(info["longest_length"], 120);
}

#[test]
fn unknown_type_is_a_usage_error() {
    let out = verma(&["info", "--type", "Z9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Z9"));
}

#[test]
fn cartan_file_matches_label() {
    let dir = std::env::temp_dir().join(format!("verma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b2.txt");
    std::fs::write(&path, "# B2\n 2 -2\n-1  2\n").unwrap();
    let from_file = verma(&["table", "--cartan", path.to_str().unwrap(), "--op", "all"]);
    let from_label = verma(&["table", "--type", "B2", "--op", "all"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, from_label.stdout);

    std::fs::write(&path, "[[2, -1], [0, 2]]").unwrap();
    let bad = verma(&["info", "--cartan", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn queries() {
    let cases: [(&[&str], &str); 6] = [
        (&["--op", "ext1", "-v", "e", "-w", "1 2 1"], "2\n"),
        (&["--op", "rpoly", "-v", "e", "-w", "1 2 1"], "[-1, 2, -2, 1]\n"),
        (&["--op", "rpoly", "-v", "p:213", "-w", "p:321"], "[1, -2, 1]\n"),
        (&["--op", "bruhat", "-v", "1", "-w", "2"], "false\n"),
        (&["--op", "hom", "-v", "1", "-w", "1,2"], "1\n"),
        (&["--op", "count-flags", "-v", "e", "-w", "1 2 1"], "p=2: 3; p=3: 14; p=5: 84; p=7: 258\n"),
    ];
    for (args, expected) in cases {
        let mut full = vec!["query", "--type", "A2"];
        full.extend(args);
        let out = verma(&full);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out), expected, "{args:?}");
    }
}

#[test]
fn structured_query_normalizes_words() {
    let out = verma(&[
        "query", "--type", "A2", "-v", "2 1 2", "-w", "2 1 2", "--op", "ext1", "--format", "json-like",
    ]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["v"]["word"], "1 2 1");
    assert_eq!(value["w"]["length"], 3);
    assert_eq!(value["result"], 0);
}

#[test]
fn interpolation_recovers_r() {
    let out = verma(&["query", "--type", "A2", "-w", "p:321", "--op", "interpolate"]);
    assert_eq!(stdout(&out), "[-1, 2, -2, 1]\n");
    let short = verma(&["query", "--type", "A2", "-w", "p:321", "--op", "interpolate", "--primes", "2,3"]);
    assert_eq!(short.status.code(), Some(2));
}

#[test]
fn bad_element_is_a_usage_error() {
    for w in ["1 3", "x", "p:1134"] {
        let out = verma(&["query", "--type", "A2", "-w", w]);
        assert_eq!(out.status.code(), Some(2), "{w}");
    }
}

#[test]
fn flag_counting_limits() {
    let out = verma(&["query", "--type", "B2", "-w", "1 2", "--op", "count-flags"]);
    assert_eq!(out.status.code(), Some(2));
    let out = verma(&[
        "query", "--type", "A3", "-w", "1 2 3", "--op", "count-flags", "--budget", "1000",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn a1_table() {
    let out = verma(&["table", "--type", "A1", "--format", "csv"]);
    assert_eq!(stdout(&out), "v,w,len_v,len_w,ext1\ne,e,0,0,0\ne,1,0,1,1\n1,1,1,1,0\n");
}

#[test]
fn tables_do_not_depend_on_thread_count() {
    for format in ["text", "csv", "json"] {
        let args = |threads| {
            verma(&["--threads", threads, "table", "--type", "B3", "--op", "all", "--format", format])
        };
        let one = args("1");
        let four = args("4");
        assert!(one.status.success());
        assert_eq!(one.stdout, four.stdout, "{format}");
    }
}

#[test]
fn printed_words_parse_back() {
    let out = verma(&["table", "--type", "B3", "--op", "all", "--format", "csv"]);
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut seen = 0;
    for record in reader.records().take(40) {
        let record = record.unwrap();
        let (v, w, ext) = (&record[0], &record[1], &record[4]);
        let again = verma(&["query", "--type", "B3", "-v", v, "-w", w]);
        assert_eq!(stdout(&again).trim(), ext, "{v} {w}");
        seen += 1;
    }
    assert_eq!(seen, 40);
}

#[test]
fn verify_all_suites_on_a2() {
    let out = verma(&["verify", "--type", "A2", "--suites", "all", "--no-timing"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.starts_with("# checks:"));
    for suite in ["observation1", "basecor", "descent", "r-identities", "flag-oracle"] {
        assert!(text.contains(&format!("{suite} A2: PASS")), "{text}");
    }
    assert!(text.contains("elapsed_ms=0"));
}

#[test]
fn verify_json_and_usage_errors() {
    let out = verma(&["verify", "--type", "G2", "--suites", "observation1", "--format", "json"]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0]["sign_calibration"], -1);
    assert_eq!(reports[0]["failures"], serde_json::json!([]));

    let out = verma(&["verify", "--suites", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = verma(&["verify", "--type", "B2", "--suites", "flag-oracle"]);
    assert_eq!(out.status.code(), Some(2));
}
