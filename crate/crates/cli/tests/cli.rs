use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn golden(name: &str) -> Vec<u8> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn run<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diairesis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Vec<u8> {
    let out = run(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn taxonomy_args(cmd: &str, file: &str) -> Vec<String> {
    vec![
        cmd.into(),
        "--input".into(),
        fixture(file).display().to_string(),
        "--order".into(),
        "on_land,unfeathered,biped".into(),
    ]
}

#[test]
fn golden_outputs() {
    let numbers = fixture("numbers.csv").display().to_string();
    let taxonomy = fixture("taxonomy.csv").display().to_string();
    let cases: Vec<(Vec<String>, &str)> = vec![
        (
            vec!["eval".into(), "p & ~p".into(), "p=b".into()],
            "eval_contradiction_both.txt",
        ),
        (
            ["eval", "p | q & ~r", "p=f", "q=t", "r=n"]
                .map(String::from)
                .to_vec(),
            "eval_mixed.txt",
        ),
        (taxonomy_args("tree", "taxonomy.csv"), "tree_taxonomy.txt"),
        (
            vec!["tree".into(), "--input".into(), taxonomy],
            "tree_root_only.txt",
        ),
        (
            vec![
                "tree".into(),
                "--input".into(),
                numbers.clone(),
                "--balanced".into(),
            ],
            "tree_numbers_balanced.txt",
        ),
        (taxonomy_args("dot", "taxonomy.csv"), "dot_taxonomy.dot"),
        (
            ["dot", "--input", &numbers, "--balanced", "--max-depth", "1"]
                .map(String::from)
                .to_vec(),
            "dot_numbers_depth1.dot",
        ),
        (vec!["powerset".into(), "1,2,3".into()], "powerset_123.txt"),
        (vec!["powerset".into(), "".into()], "powerset_empty.txt"),
    ];
    for (args, file) in cases {
        assert_eq!(
            String::from_utf8(stdout_of(&args)).unwrap(),
            String::from_utf8(golden(file)).unwrap(),
            "{args:?}"
        );
    }
}

#[test]
fn csv_and_json_reports_match() {
    for cmd in ["tree", "dot"] {
        let csv = stdout_of(&taxonomy_args(cmd, "taxonomy.csv"));
        let json = stdout_of(&taxonomy_args(cmd, "taxonomy.json"));
        assert_eq!(csv, json);
        let mut explicit = taxonomy_args(cmd, "taxonomy.json");
        explicit.push("--json".into());
        assert_eq!(stdout_of(&explicit), csv);
    }
}

#[test]
fn last_leaf_is_man_at_fifteen() {
    let report = String::from_utf8(stdout_of(&taxonomy_args("tree", "taxonomy.csv"))).unwrap();
    let lines: Vec<&str> = report.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[7], "1111 15 t man");
    assert_eq!(lines[8], "determination b");
}

#[test]
fn classify_subcommand() {
    let mut args = taxonomy_args("classify", "taxonomy.csv");
    args.push("man".into());
    assert_eq!(stdout_of(&args), b"1111 15 t\n");
    let mut args = taxonomy_args("classify", "taxonomy.csv");
    args.push("fish".into());
    assert!(stdout_of(&args).starts_with(b"10"));
    let mut args = taxonomy_args("classify", "taxonomy.csv");
    args.push("griffin".into());
    assert_eq!(run(&args).status.code(), Some(4));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["eval", "p &"]), Some(2));
    assert_eq!(code(&["eval", "p & q", "p=t"]), Some(3));
    assert_eq!(code(&["eval", "p", "p=maybe"]), Some(2));

    let taxonomy = fixture("taxonomy.csv").display().to_string();
    assert_eq!(
        code(&["tree", "--input", &taxonomy, "--order", "wings"]),
        Some(4)
    );
    assert_eq!(
        code(&["tree", "--input", &taxonomy, "--order", "biped,biped"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "tree",
            "--input",
            &taxonomy,
            "--order",
            "biped",
            "--balanced"
        ]),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "id,p\na,maybe\n").unwrap();
    assert_eq!(code(&["tree", "--input", bad.to_str().unwrap()]), Some(2));
    assert_eq!(code(&["dot", "--input", "/no/such/file.csv"]), Some(2));

    let many: Vec<String> = (0..21).map(|i| format!("x{i}")).collect();
    assert_eq!(code(&["powerset", &many.join(",")]), Some(5));

    let out = dir.path().join("f.ppm");
    let out = out.to_str().unwrap();
    assert_eq!(code(&["fractal", "--depth", "0", "--out", out]), Some(2));
    assert_eq!(code(&["fractal", "--depth", "17", "--out", out]), Some(2));
    assert_eq!(
        code(&["fractal", "--depth", "3", "--cell-size", "0", "--out", out]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "fractal",
            "--depth",
            "3",
            "--colormap",
            "plasma",
            "--out",
            out
        ]),
        Some(2)
    );
    assert_eq!(
        code(&["fractal", "--depth", "3", "--out", "/no/such/dir/f.ppm"]),
        Some(6)
    );
}

#[test]
fn fractal_writes_ppm_and_reports_hash() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.ppm");
    let args = [
        "fractal",
        "--depth",
        "3",
        "--cell-size",
        "1",
        "--out",
        path.to_str().unwrap(),
    ];
    let first = String::from_utf8(stdout_of(&args)).unwrap();
    let bytes = std::fs::read(&path).unwrap();
    assert!(first.starts_with("width=8 height=3 sha256="));
    assert!(bytes.starts_with(b"P6\n8 3\n255\n"));
    assert_eq!(bytes.len(), 11 + 8 * 3 * 3);
    // bottom band: 8 cells, rightmost is the all-ones branch
    let bottom = &bytes[11 + 2 * 8 * 3..];
    assert_eq!(&bottom[7 * 3..], &[255, 255, 255]);
    assert_eq!(String::from_utf8(stdout_of(&args)).unwrap(), first);
}
