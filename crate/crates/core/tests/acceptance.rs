//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use boolcube::bench::{self, Algorithm};
use boolcube::enumerate::{self, Relation};
use boolcube::fixtures::{BFile, Sequence};
use boolcube::masks::MaskSet;
use boolcube::search::{self, TruthTable};
use boolcube::{CubeDim, WloSequence};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn dim(n: u32) -> CubeDim {
    CubeDim::new(n).unwrap()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn sort_oracle(n: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (0..1u32 << n).collect();
    v.sort_by_key(|&s| (s.count_ones(), s));
    v
}

fn fixture_values(seq: Sequence) -> Result<Vec<String>, String> {
    let b = BFile::read(fixture_dir().join(seq.file_name())).map_err(|e| e.to_string())?;
    for (i, (index, _)) in b.entries.iter().enumerate() {
        ensure!(*index == i as u64, "{seq}: non-consecutive index {index}");
    }
    Ok(b.entries.into_iter().map(|(_, v)| v.to_string()).collect())
}

fn wlo_sequences() -> Outcome {
    let small_orders: [&[u32]; 5] = [
        &[0, 1],
        &[0, 1, 2, 3],
        &[0, 1, 2, 4, 3, 5, 6, 7],
        &[0, 1, 2, 4, 8, 3, 5, 6, 9, 10, 12, 7, 11, 13, 14, 15],
        &[0, 1, 2, 4, 8, 16, 3, 5, 6, 9, 10, 12, 17, 18, 20, 24, 7],
    ];
    for (i, row) in small_orders.iter().enumerate() {
        let n = i as u32 + 1;
        let b = WloSequence::bucket(dim(n));
        let r = WloSequence::recursive(dim(n));
        ensure!(
            b.order().starts_with(row),
            "bucket n={n} differs from table row"
        );
        ensure!(
            r.order().starts_with(row),
            "recursive n={n} differs from table row"
        );
    }
    for n in 1..=16 {
        let oracle = sort_oracle(n);
        ensure!(
            WloSequence::bucket(dim(n)).order() == oracle,
            "bucket n={n} != sort oracle"
        );
        ensure!(
            WloSequence::recursive(dim(n)).order() == oracle,
            "recursive n={n} != sort oracle"
        );
    }
    // flattened rows 0..=20 from both generators
    let mut flat_b: Vec<u32> = vec![0];
    let mut flat_r: Vec<u32> = vec![0];
    for n in 1..=20 {
        flat_b.extend_from_slice(WloSequence::bucket(dim(n)).order());
        flat_r.extend_from_slice(WloSequence::recursive(dim(n)).order());
    }
    ensure!(flat_b == flat_r, "flattened generators differ");
    let fixture = fixture_values(Sequence::A294648)?;
    ensure!(fixture.len() >= 1000, "A294648 fixture too short");
    for (i, v) in fixture.iter().enumerate() {
        ensure!(*v == flat_r[i].to_string(), "A294648 mismatch at index {i}");
    }
    Ok(format!(
        "golden n=1..5, oracle n<=16, A294648 {} terms",
        fixture.len()
    ))
}

fn masks() -> Outcome {
    for n in 1..=16 {
        let a = MaskSet::from_wlo(&WloSequence::recursive(dim(n)));
        let b = MaskSet::recursive(dim(n));
        ensure!(a == b, "constructions differ at n={n}");
    }
    let table2: [&[&str]; 4] = [
        &["2", "1"],
        &["8", "6", "1"],
        &["128", "104", "22", "1"],
        &["32768", "26752", "5736", "278", "1"],
    ];
    for (i, row) in table2.iter().enumerate() {
        let n = i as u32 + 1;
        for (construction, ms) in [
            ("recursive", MaskSet::recursive(dim(n))),
            ("from_wlo", MaskSet::from_wlo(&WloSequence::bucket(dim(n)))),
        ] {
            let got: Vec<String> = ms
                .masks()
                .iter()
                .map(|m| m.msb_serial().to_string())
                .collect();
            ensure!(got == *row, "{construction} serials n={n}: {got:?}");
        }
    }
    let fixture = fixture_values(Sequence::A305860)?;
    let mut flat = vec!["1".to_string()];
    let mut n = 1;
    while flat.len() < fixture.len() {
        flat.extend(
            MaskSet::recursive(dim(n))
                .masks()
                .iter()
                .map(|m| m.msb_serial().to_string()),
        );
        n += 1;
    }
    for (i, v) in fixture.iter().enumerate() {
        ensure!(*v == flat[i], "A305860 mismatch at index {i}");
    }
    Ok(format!(
        "bit-equal n<=16, golden n=1..4, A305860 {} terms",
        fixture.len()
    ))
}

fn sample_search() -> Outcome {
    let d = dim(4);
    let tt = TruthTable::from_serials(d, [0, 3, 5, 6, 8, 10, 12]).unwrap();
    let seq = WloSequence::recursive(d);
    let ms = MaskSet::recursive(d);
    let w = search::wlo_search_max_traced(&tt, &seq).unwrap();
    let hit = w.value.ok_or("wlo search found nothing")?;
    ensure!(
        (hit.serial.serial(), hit.weight, w.ops) == (12, 2, 6),
        "wlo search: serial {} weight {} probes {}",
        hit.serial,
        hit.weight,
        w.ops
    );
    let b = search::bitwise_search_max_traced(&tt, &ms).unwrap();
    ensure!(
        b.layer == Some(2) && b.rows == 3,
        "bitwise: {:?} after {} rows",
        b.layer,
        b.rows
    );
    let support: Vec<u64> = search::layer_support(&tt, ms.get(2).unwrap())
        .unwrap()
        .iter()
        .map(|s| s.serial())
        .collect();
    ensure!(support == [3, 5, 6, 10, 12], "layer support {support:?}");
    Ok("(12, 2) in 6 probes; layer 2 in 3 rows; witnesses [3,5,6,10,12]".into())
}

fn enumeration() -> Outcome {
    let s = |v: Vec<String>| v.join(",");
    let wo: Vec<String> = (1..=4)
        .map(|n| enumerate::count_weight_orders(n).unwrap().to_string())
        .collect();
    ensure!(s(wo.clone()) == "1,2,36,414720", "A051459 values {wo:?}");
    let ch: Vec<String> = (1..=5)
        .map(|n| enumerate::count_max_chains_wo(n).to_string())
        .collect();
    ensure!(s(ch.clone()) == "1,2,9,96,2500", "A001142 values {ch:?}");

    let fact = fixture_values(Sequence::A000142)?;
    ensure!(fact.len() >= 20, "A000142 fixture has {} terms", fact.len());
    for (n, v) in fact.iter().take(20).enumerate() {
        ensure!(
            enumerate::count_max_chains_precedes(n as u32).to_string() == *v,
            "A000142 n={n}"
        );
    }
    for (seq, f) in [
        (
            Sequence::A051459,
            Box::new(|n| enumerate::count_weight_orders(n).unwrap()) as Box<dyn Fn(u32) -> _>,
        ),
        (Sequence::A001142, Box::new(enumerate::count_max_chains_wo)),
    ] {
        for (n, v) in fixture_values(seq)?.iter().enumerate() {
            ensure!(f(n as u32).to_string() == *v, "{seq} n={n}");
        }
    }

    for n in 1..=5 {
        ensure!(
            enumerate::oracle_count_chains(n, Relation::Precedes).unwrap()
                == enumerate::count_max_chains_precedes(n),
            "precedes chains n={n}"
        );
    }
    for n in 1..=4 {
        ensure!(
            enumerate::oracle_count_chains(n, Relation::WeightOrder).unwrap()
                == enumerate::count_max_chains_wo(n),
            "weight-order chains n={n}"
        );
    }
    for n in 1..=3 {
        ensure!(
            enumerate::oracle_count_linear_extensions(n).unwrap()
                == enumerate::count_weight_orders(n).unwrap(),
            "linear extensions n={n}"
        );
    }
    for n in 1..=10 {
        ensure!(
            enumerate::oracle_count_shortest_paths(n).unwrap()
                == enumerate::count_max_chains_precedes(n),
            "shortest paths n={n}"
        );
    }
    Ok("closed forms, A000142 x20, all four oracle identities".into())
}

fn random_tables(n: u32, count: u64, seed: u64, dir: &Path) -> Vec<TruthTable> {
    let path = dir.join(format!("corpus-{n}-{seed}.bin"));
    let corpus = bench::gen_corpus_for(dim(n), count, seed, &path).unwrap();
    corpus.load(dim(n)).unwrap()
}

fn search_equivalence(dir: &Path) -> Outcome {
    let mut total = 0;
    for n in [4, 6, 8, 10, 12] {
        let d = dim(n);
        let seq = WloSequence::recursive(d);
        let ms = MaskSet::recursive(d);
        let tables = random_tables(n, 10_000, 0x5eed + u64::from(n), dir);
        for (i, tt) in tables.iter().enumerate() {
            let ex = search::exhaustive_max(tt);
            let wl = search::wlo_search_max(tt, &seq).unwrap();
            let bw = search::bitwise_search_max(tt, &ms).unwrap();
            ensure!(
                ex == wl,
                "n={n} function {i}: exhaustive {ex:?} vs wlo {wl:?}"
            );
            ensure!(
                bw == ex.map(|h| h.weight),
                "n={n} function {i}: bitwise {bw:?} vs {ex:?}"
            );
        }
        total += tables.len();
    }
    Ok(format!("{total} functions, 0 mismatches"))
}

fn degree_pipeline(dir: &Path) -> Outcome {
    let mut total = 0;
    for n in 1..=12 {
        let ms = MaskSet::recursive(dim(n));
        for tt in random_tables(n, 1000, 0xde9 + u64::from(n), dir) {
            let anf = search::mobius_transform(&tt);
            ensure!(
                search::mobius_transform(&anf) == tt,
                "involution fails at n={n}"
            );
            let oracle = (0..dim(n).size())
                .filter(|&s| anf.bit(s))
                .map(|s| s.count_ones())
                .max();
            ensure!(
                search::algebraic_degree(&anf, &ms).unwrap() == oracle,
                "degree mismatch at n={n}"
            );
            total += 1;
        }
    }
    Ok(format!("{total} tables, 0 mismatches"))
}

fn performance(dir: &Path) -> Outcome {
    let n = 10;
    let path = dir.join("perf.bin");
    let corpus = bench::gen_corpus_for(dim(n), 100_000, 2024, &path).unwrap();
    let report = bench::run_bench(&corpus, dim(n), &Algorithm::ALL).map_err(|e| e.to_string())?;
    let get = |a| report.result(a).unwrap();
    let (ex, wl, bw) = (
        get(Algorithm::Exhaustive),
        get(Algorithm::Wlo),
        get(Algorithm::Bitwise),
    );
    let wlo_fast = wl.seconds * 10.0 <= ex.seconds;
    let bitwise_fast = bw.seconds * 10.0 <= ex.seconds;
    ensure!(
        wlo_fast,
        "wlo {:.4}s vs exhaustive {:.4}s",
        wl.seconds,
        ex.seconds
    );
    ensure!(
        bitwise_fast,
        "bitwise {:.4}s vs exhaustive {:.4}s",
        bw.seconds,
        ex.seconds
    );
    ensure!(
        wl.median_ops <= u64::from(n) + 2,
        "median wlo probes {}",
        wl.median_ops
    );
    Ok(format!(
        "exhaustive {:.4}s, wlo {:.4}s ({:.0}x), bitwise {:.4}s ({:.0}x), median wlo probes {}",
        ex.seconds,
        wl.seconds,
        ex.seconds / wl.seconds,
        bw.seconds,
        ex.seconds / bw.seconds,
        wl.median_ops
    ))
}

fn run_cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_boolcube"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    ))
}

fn cli() -> Outcome {
    let (code, out) = run_cli(&["wlo", "--n", "4"])?;
    ensure!(
        code == 0 && out.trim_end() == "0 1 2 4 8 3 5 6 9 10 12 7 11 13 14 15",
        "wlo: {out:?}"
    );
    let (code, out) = run_cli(&["search", "--n", "4", "--tt", "1001011010101000"])?;
    ensure!(code == 0 && out.trim_end() == "12 2", "search: {out:?}");
    let (code, out) = run_cli(&["enumerate", "--seq", "A001142", "--upto", "5"])?;
    ensure!(
        code == 0 && out.lines().last() == Some("5 2500"),
        "enumerate: {out:?}"
    );
    let dir = fixture_dir();
    let (code, out) = run_cli(&["fixtures", "--dir", dir.to_str().unwrap()])?;
    ensure!(code == 0, "fixtures exited {code}: {out}");
    ensure!(
        out.lines().count() == 6 && out.lines().all(|l| l.contains(" pass ")),
        "fixtures: {out}"
    );
    Ok("3 golden commands, fixtures 6/6".into())
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let criteria: Vec<Criterion> = vec![
        (
            "wlo-sequences",
            Duration::from_secs(10),
            Box::new(wlo_sequences),
        ),
        ("masks", Duration::from_secs(10), Box::new(masks)),
        (
            "sample-search",
            Duration::from_secs(10),
            Box::new(sample_search),
        ),
        (
            "enumeration",
            Duration::from_secs(60),
            Box::new(enumeration),
        ),
        (
            "search-equivalence",
            Duration::from_secs(60),
            Box::new(|| search_equivalence(dir.path())),
        ),
        (
            "degree-pipeline",
            Duration::from_secs(60),
            Box::new(|| degree_pipeline(dir.path())),
        ),
        (
            "performance",
            Duration::from_secs(120),
            Box::new(|| performance(dir.path())),
        ),
        ("cli", Duration::from_secs(60), Box::new(cli)),
    ];
    let mut failed = 0;
    for (name, limit, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > *limit => Err(format!("{msg}; took {elapsed:.2?} > {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS {name} [{elapsed:.2?}]: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name} [{elapsed:.2?}]: {msg}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
