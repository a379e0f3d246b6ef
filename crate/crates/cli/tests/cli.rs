use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn horn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horn"))
        .args(args)
        .env_remove("HORN_THREADS")
        .output()
        .expect("run horn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn lr_methods_agree() {
    let o = horn(&["lr", "[5,2]", "[3,0]", "[8,2]", "--method", "both"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "classical 1\ndomino 1\nagree\n");
    assert_eq!(stdout(&horn(&["lr", "[1]", "[]", "[1]"])), "1\n");
    assert_eq!(stdout(&horn(&["lr", "[1]", "[1]", "[3]", "--method", "domino"])), "0\n");
    let o = horn(&["lr", "[2,1]", "[2,1]", "[3,2,1]", "--method=both"]);
    assert!(stdout(&o).starts_with("classical 2\ndomino 2\n"));
}

#[test]
fn parse_errors_are_usage_errors() {
    let o = horn(&["lr", "[1,x]", "[1]", "[2]"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("position 3"), "{}", stderr(&o));
    assert_eq!(code(&horn(&["lr", "[1]", "[1]"])), 2);
    assert_eq!(code(&horn(&["verify", "--suite", "nonsense"])), 2);
    assert_eq!(code(&horn(&["spectra", "[1,2]"])), 2);
    assert_eq!(code(&horn(&["spectra", "[1,a]"])), 2);
    assert_eq!(code(&horn(&["lr", "[65]", "[1]", "[66]"])), 2);
}

#[test]
fn enumerate_fixture_and_trivial_cases() {
    let o = horn(&["enumerate", "[10,6,4,0]", "[5,5]", "--yamanouchi"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("word 1112212212 yamanouchi true"));
    let o = horn(&["enumerate", "[2]", "[1]"]);
    assert_eq!(stdout(&o), "# tableau 1 word 1 yamanouchi true\n1L 1R\ncount 1\n");
    let o = horn(&["enumerate", "[1,1]", "[1]"]);
    assert!(stdout(&o).contains("1T\n1B\ncount 1"));
}

fn count_of(o: &Output) -> usize {
    let out = stdout(o);
    let last = out.lines().last().unwrap();
    last.strip_prefix("count ").unwrap().parse().unwrap()
}

#[test]
fn enumerate_strictness_counts() {
    let big = horn(&["enumerate", "[14,14,12,12,8,8,6,6]", "[10,10,8,8,2,2]", "--yamanouchi"]);
    let small = horn(&["enumerate", "[14,12,8,6]", "[10,8,2]", "--yamanouchi"]);
    assert!(count_of(&small) > 0);
    assert!(count_of(&big) > count_of(&small));
}

#[test]
fn enumerate_writes_drawings() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = horn(&["enumerate", "[10,6,4,0]", "[8,2]", "--yamanouchi", "--render", "svg", "--out", out]);
    assert_eq!(code(&o), 0);
    let svg = fs::read_to_string(dir.path().join("tableau_1.svg")).unwrap();
    assert!(svg.contains("<svg") && svg.contains("version=\"1.1\""));
    let o = horn(&["enumerate", "[2,2]", "[1,1]", "--render", "ascii", "--out", out]);
    assert!(stdout(&o).contains("|   1   |"));
    assert!(dir.path().join("tableau_1.txt").exists());
}

#[test]
fn verify_exit_codes() {
    let o = horn(&["verify", "--suite", "prop2", "--max-part", "3", "--p", "2"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("counterexamples=0 complete=true"));
    let o = horn(&["verify", "--suite", "p1p2", "--sigma", "[0,0,0,0]"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("checked=1 "));
    assert_eq!(code(&horn(&["verify", "--suite", "implication", "--max-part", "5"])), 0);
    let o = horn(&["verify", "--suite", "prop2", "--budget", "0"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("complete=false"));
}

#[test]
fn verify_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = horn(&["verify", "--suite", "lpp", "--max-part", "2", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["suite"], "lpp");
    assert_eq!(json["complete"], true);
}

#[test]
fn spectra_runs_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.tsv");
    let b = dir.path().join("b.tsv");
    for path in [&a, &b] {
        let o = horn(&[
            "spectra", "[5,3,2,0]", "--samples", "300", "--seed", "5", "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).contains("inside hull 300/300 (100.00%)"));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(fs::read_to_string(&a).unwrap().lines().count(), 301);
}

#[test]
fn spectra_modes() {
    let o = horn(&["spectra", "[5,3,2,0]", "--samples", "200", "--seed", "1", "--mode", "block"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("max block defect"));
    let o = horn(&["spectra", "[5,3,2,0]", "--samples", "100", "--mode", "rotation"]);
    assert_eq!(code(&o), 0);
    let o = horn(&["spectra", "[2.5,1,0.5,0]", "--samples", "50"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("hull not checked"));

    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("empty.tsv");
    let o = horn(&["spectra", "[5,3,2,0]", "--samples", "0", "--out", dump.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read_to_string(&dump).unwrap().lines().count(), 1);
}

fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().into_string().unwrap(), fs::read(e.path()).unwrap())
        })
        .collect();
    files.sort();
    files
}

#[test]
fn figures_are_written_deterministically() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let o = horn(&["figures", "--out", dir.path().to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        let out = stdout(&o);
        assert!(out.contains("figure1 T1 weight [5,5] word 1112212212"));
        assert!(out.contains("figure1 T4 weight [8,2] word 1111112112"));
        assert!(out.contains("figure3 W weight [10,10,8,8,2,2]"));
    }
    let files = read_dir_sorted(a.path());
    assert_eq!(files, read_dir_sorted(b.path()));
    let names: Vec<&str> = files.iter().map(|(n, _)| n.as_str()).collect();
    for name in ["figure1.txt", "figure1_T4.svg", "figure2_U1.svg", "figure2.json", "figure3_W.svg"] {
        assert!(names.contains(&name), "{name} missing");
    }
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("horn.toml");
    fs::write(&cfg, "max_part_limit = 4\n[verify]\nmax_part = 2\n[spectra]\nsamples = 7\nseed = 3\n").unwrap();
    let c = cfg.to_str().unwrap();

    let o = horn(&["--config", c, "verify", "--suite", "p1p2"]);
    assert_eq!(code(&o), 0);
    let small = stdout(&o);
    let o = horn(&["--config", c, "verify", "--suite", "p1p2", "--max-part", "3"]);
    assert_ne!(stdout(&o), small);
    assert_eq!(code(&horn(&["--config", c, "verify", "--suite", "p1p2", "--max-part", "5"])), 2);
    assert_eq!(code(&horn(&["--config", c, "lr", "[5]", "[1]", "[6]"])), 2);

    let o = horn(&["--config", c, "spectra", "[3,2,1,0]"]);
    assert!(stdout(&o).contains("samples 7\n"));
    let o = horn(&["--config", c, "spectra", "[3,2,1,0]", "--samples", "2"]);
    assert!(stdout(&o).contains("samples 2\n"));

    fs::write(&cfg, "bogus = true\n").unwrap();
    assert_eq!(code(&horn(&["--config", c, "lr", "[1]", "[1]", "[2]"])), 2);
}

#[test]
fn thread_count_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_horn"))
        .args(["verify", "--suite", "fflp", "--max-part", "2", "--p", "1"])
        .env("HORN_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let single = horn(&["--threads", "1", "verify", "--suite", "fflp", "--max-part", "2", "--p", "1"]);
    assert_eq!(stdout(&o), stdout(&single));
}
