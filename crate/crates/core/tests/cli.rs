use std::process::{Command, Output};

fn z4codes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z4codes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = z4codes(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn data_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn rank_of_c11() {
    let out = stdout(&["invariants", "--family", "C", "--r1", "1", "--r2", "1", "--rank"]);
    assert!(out.starts_with("# format=1\n"));
    assert_eq!(data_lines(&out), ["rank=13"]);
}

#[test]
fn rank_strategy_can_be_named() {
    let out = stdout(&[
        "invariants", "--family", "C", "--r1", "0", "--r2", "3", "--rank", "enumeration",
    ]);
    assert_eq!(data_lines(&out), ["rank=11"]);
}

#[test]
fn quaternary_words_of_h00() {
    let out = stdout(&["code", "--family", "H", "--r1", "0", "--r2", "0", "--alphabet", "quaternary"]);
    assert_eq!(data_lines(&out), ["0", "1", "2", "3"]);
}

#[test]
fn binary_code_file_round_trips() {
    let dir = std::env::temp_dir().join(format!("z4codes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h11.txt");
    let path_s = path.to_str().unwrap();
    stdout(&["code", "--r1", "1", "--r2", "1", "--out", path_s]);
    let text = std::fs::read_to_string(&path).unwrap();
    let file = z4codes::io::parse_code_file(&text).unwrap();
    assert_eq!(file.words.len(), 32);
    assert_eq!(file.header.n, 8);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn matrix_text_parses_back() {
    let out = stdout(&["matrix", "--r1", "2", "--r2", "0"]);
    let m = z4codes::QuaternaryMatrix::from_text(&out).unwrap();
    assert_eq!(m, z4codes::build_a(2, 0).unwrap());
}

#[test]
fn full_invariants_of_h10() {
    let out = stdout(&["invariants", "--r1", "1", "--r2", "0"]);
    assert_eq!(
        data_lines(&out),
        [
            "length=8",
            "cardinality=16",
            "min_distance=4",
            "kernel_size=16",
            "rank=4",
            "linear=true",
            "weight_distribution=0:1,4:14,8:1",
        ]
    );
}

#[test]
fn projection_of_c02() {
    let out = stdout(&["project", "--family", "C", "--r1", "0", "--r2", "2", "--side", "odd"]);
    assert_eq!(data_lines(&out), ["0000", "1111"]);
}

#[test]
fn construct_reports_invariant_match() {
    let out = stdout(&["construct", "--op", "quadruple", "--r1", "1", "--r2", "0"]);
    assert!(out.contains("target=H(2,0)\nsame_set=true\n"));
    assert!(out.contains("all_match=true"));
}

#[test]
fn classify_k7() {
    let out = stdout(&["classify", "--k", "7"]);
    assert!(out.contains("family=H k=7 N=128 classes=3 expected=3"));
    assert!(out.contains("family=C k=7 N=128 classes=4 expected=4"));
}

#[test]
fn verify_small_passes() {
    let out = stdout(&["verify", "--max-k", "4"]);
    assert!(out.contains("failed=0"));
    assert!(!out.contains("status=fail"));
}

#[test]
fn errors_go_to_stderr_with_nonzero_exit() {
    for args in [
        &["invariants", "--r1", "4", "--r2", "0"][..],
        &["code", "--family", "C", "--r1", "0", "--r2", "5"],
        &["verify", "--max-k", "9"],
        &["code", "--family", "X", "--r1", "0", "--r2", "0"],
    ] {
        let out = z4codes(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
