use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn boolcube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boolcube"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn fixture_dir() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .to_string_lossy()
        .into_owned()
}

#[test]
fn golden_wlo() {
    let o = boolcube(&["wlo", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1 2 4 8 3 5 6 9 10 12 7 11 13 14 15\n");
}

#[test]
fn golden_search_sample_search() {
    let o = boolcube(&["search", "--n", "4", "--tt", "1001011010101000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "12 2\n");
}

#[test]
fn golden_enumerate() {
    let o = boolcube(&["enumerate", "--seq", "A001142", "--upto", "5", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1\n2 2\n3 9\n4 96\n5 2500\n");
}

#[test]
fn exit_codes() {
    assert_eq!(boolcube(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(boolcube(&["wlo", "--n", "31"]).status.code(), Some(1));
    let o = boolcube(&["search", "--n", "4", "--tt", "/no/such/file"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}

#[test]
fn fixtures_pass_on_committed_set() {
    let o = boolcube(&["fixtures", "--dir", &fixture_dir()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    for id in [
        "A294648", "A305860", "A051459", "A001142", "A000142", "A000120",
    ] {
        assert!(
            out.lines()
                .any(|l| l.starts_with(id) && l.contains(" pass ")),
            "{id}: {out}"
        );
    }
}

// Bumps the value on one data line of `file` inside a copy of the fixture
// directory and expects the CLI to name that index.
fn corrupt_and_check(file: &str, line_index: usize) {
    let dir = tempfile::tempdir().unwrap();
    for entry in fs::read_dir(fixture_dir()).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), dir.path().join(entry.file_name())).unwrap();
    }
    let path = dir.path().join(file);
    let text = fs::read_to_string(&path).unwrap();
    let mut data_seen = 0;
    let mut corrupted_index = None;
    let lines: Vec<String> = text
        .lines()
        .map(|l| {
            if l.starts_with('#') || l.trim().is_empty() {
                return l.to_string();
            }
            let here = data_seen;
            data_seen += 1;
            if here != line_index {
                return l.to_string();
            }
            let (idx, val) = l.split_once(' ').unwrap();
            corrupted_index = Some(idx.to_string());
            // append a digit: always a different nonnegative integer
            format!("{idx} {val}7")
        })
        .collect();
    fs::write(&path, lines.join("\n") + "\n").unwrap();

    let o = boolcube(&["fixtures", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let idx = corrupted_index.unwrap();
    let id = format!("A{}", &file[1..7]);
    let fail = out.lines().find(|l| l.starts_with(&id)).unwrap();
    assert!(fail.contains(&format!("FAIL at index {idx}:")), "{fail}");
    assert_eq!(
        out.lines().filter(|l| l.contains(" pass ")).count(),
        5,
        "{out}"
    );
}

#[test]
fn fixtures_detect_single_corruptions() {
    corrupt_and_check("b294648.txt", 5000);
    corrupt_and_check("b305860.txt", 12);
    corrupt_and_check("b051459.txt", 9);
    corrupt_and_check("b001142.txt", 0);
    corrupt_and_check("b000142.txt", 19);
    corrupt_and_check("b000120.txt", 4095);
}

#[test]
fn masks_and_subsets_commands() {
    let o = boolcube(&["masks", "--n", "3", "--msb-serials"]);
    assert_eq!(stdout(&o), "0 128\n1 104\n2 22\n3 1\n");
    let o = boolcube(&["subsets", "--universe", "a,b,c,d", "--k", "2"]);
    assert_eq!(stdout(&o), "c,d\nb,d\nb,c\na,d\na,c\na,b\n");
}

#[test]
fn bench_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("c.bin");
    let report = dir.path().join("r.csv");
    let c = corpus.to_str().unwrap();
    assert!(
        boolcube(&["bench", "--gen", "--n", "6", "--count", "1000", "--corpus", c])
            .status
            .success()
    );
    let o = boolcube(&[
        "bench",
        "--run",
        "--n",
        "6",
        "--corpus",
        c,
        "--algorithms",
        "wlo,bitwise",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let csv = fs::read_to_string(report).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[1].starts_with("6,1000,wlo,"));
    assert!(rows[2].starts_with("6,1000,bitwise,"));
}
