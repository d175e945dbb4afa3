//! Random truth-table corpora and timed runs of the three max-weight solvers.
//!
//! Corpus files are raw little-endian 64-bit words with no header, next to a
//! `<file>.meta` text sidecar (`count`, `words_per_function`, `seed`). Words
//! come from xoshiro256++ seeded through SplitMix64 (`seed_from_u64`), so a
//! seed fully determines the file.
//!
//! `run_bench` first runs every algorithm untimed over the whole corpus and
//! refuses to report anything unless all of them agree on every function.
//! The timed passes that follow exclude I/O and precomputation.

use std::fmt;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use crate::cube::CubeDim;
use crate::error::{Error, Result};
use crate::masks::MaskSet;
use crate::search::{self, TruthTable};
use crate::wlo::WloSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub path: PathBuf,
    pub word_count: u64,
    pub words_per_function: u64,
    pub seed: u64,
}

impl Corpus {
    pub fn function_count(&self) -> u64 {
        self.word_count / self.words_per_function
    }

    fn meta_path(path: &Path) -> PathBuf {
        let mut p = path.as_os_str().to_owned();
        p.push(".meta");
        PathBuf::from(p)
    }

    /// Reopens a corpus from its sidecar and checks the file size.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let meta = fs::read_to_string(Self::meta_path(path))?;
        let mut count = None;
        let mut wpf = None;
        let mut seed = None;
        for line in meta.lines() {
            let Some((key, value)) = line.split_once('=') else {
                continue;
            };
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad corpus metadata line {line:?}")))?;
            match key.trim() {
                "count" => count = Some(value),
                "words_per_function" => wpf = Some(value),
                "seed" => seed = Some(value),
                _ => {}
            }
        }
        let (Some(count), Some(wpf), Some(seed)) = (count, wpf, seed) else {
            return Err(Error::parse("corpus metadata is incomplete"));
        };
        if wpf == 0 {
            return Err(Error::parse("words_per_function must be positive"));
        }
        let corpus = Corpus {
            path: path.to_path_buf(),
            word_count: count * wpf,
            words_per_function: wpf,
            seed,
        };
        let len = fs::metadata(path)?.len();
        if len != 8 * corpus.word_count {
            return Err(Error::parse(format!(
                "corpus file is {len} bytes, metadata implies {}",
                8 * corpus.word_count
            )));
        }
        Ok(corpus)
    }

    /// Reads every function into memory, clearing unused high bits for
    /// `n < 6`.
    pub fn load(&self, dim: CubeDim) -> Result<Vec<TruthTable>> {
        if self.words_per_function != dim.word_count() as u64 {
            return Err(Error::domain(format!(
                "corpus has {} words per function, n={dim} needs {}",
                self.words_per_function,
                dim.word_count()
            )));
        }
        let mut bytes = Vec::with_capacity(8 * self.word_count as usize);
        BufReader::new(File::open(&self.path)?).read_to_end(&mut bytes)?;
        if bytes.len() as u64 != 8 * self.word_count {
            return Err(Error::parse("corpus file size does not match its metadata"));
        }
        let words: Vec<u64> = bytes
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().expect("8-byte chunk")))
            .collect();
        words
            .chunks_exact(self.words_per_function as usize)
            .map(|chunk| TruthTable::from_words_truncated(dim, chunk.to_vec()))
            .collect()
    }
}

/// Writes `count * words_per_function` seeded random words plus the sidecar.
pub fn gen_corpus(
    count: u64,
    words_per_function: u64,
    seed: u64,
    path: impl AsRef<Path>,
) -> Result<Corpus> {
    write_corpus(count, words_per_function, u64::MAX, seed, path.as_ref())
}

/// Like [`gen_corpus`] with the word count taken from `dim`; for `n < 6` the
/// bits above `2^n` are stored as zero.
pub fn gen_corpus_for(
    dim: CubeDim,
    count: u64,
    seed: u64,
    path: impl AsRef<Path>,
) -> Result<Corpus> {
    let keep = if dim.n() >= 6 {
        u64::MAX
    } else {
        (1u64 << dim.size()) - 1
    };
    write_corpus(count, dim.word_count() as u64, keep, seed, path.as_ref())
}

fn write_corpus(count: u64, wpf: u64, keep: u64, seed: u64, path: &Path) -> Result<Corpus> {
    if count == 0 || wpf == 0 {
        return Err(Error::domain("corpus needs a positive count and word size"));
    }
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut out = BufWriter::new(File::create(path)?);
    for _ in 0..count {
        for j in 0..wpf {
            let mut w = rng.next_u64();
            if j == 0 {
                w &= keep;
            }
            out.write_all(&w.to_le_bytes())?;
        }
    }
    out.flush()?;
    fs::write(
        Corpus::meta_path(path),
        format!("count={count}\nwords_per_function={wpf}\nseed={seed}\n"),
    )?;
    Ok(Corpus {
        path: path.to_path_buf(),
        word_count: count * wpf,
        words_per_function: wpf,
        seed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Exhaustive,
    Wlo,
    Bitwise,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Exhaustive, Algorithm::Wlo, Algorithm::Bitwise];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Exhaustive => "exhaustive",
            Algorithm::Wlo => "wlo",
            Algorithm::Bitwise => "bitwise",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "exhaustive" => Ok(Algorithm::Exhaustive),
            "wlo" => Ok(Algorithm::Wlo),
            "bitwise" => Ok(Algorithm::Bitwise),
            other => Err(Error::parse(format!("unknown algorithm {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmResult {
    pub algorithm: Algorithm,
    /// Pure loop time of the timed pass.
    pub seconds: f64,
    /// Total truth-table probes (exhaustive, wlo) or word ANDs (bitwise).
    pub ops: u64,
    /// `histogram[w]` = functions whose maximal support weight is `w`;
    /// the last slot counts zero functions.
    pub histogram: Vec<u64>,
    /// Median of the per-function op count.
    pub median_ops: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub n: u32,
    pub function_count: u64,
    pub results: Vec<AlgorithmResult>,
}

impl BenchReport {
    pub fn result(&self, algorithm: Algorithm) -> Option<&AlgorithmResult> {
        self.results.iter().find(|r| r.algorithm == algorithm)
    }

    pub fn rows(&self) -> Vec<ReportRow> {
        self.results
            .iter()
            .map(|r| ReportRow {
                n: self.n,
                functions: self.function_count,
                algorithm: r.algorithm.name().to_string(),
                seconds: format_seconds(r.seconds),
                ops: r.ops,
            })
            .collect()
    }
}

/// One CSV line of a report. `seconds` keeps its textual form so a parsed
/// report re-serializes byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: u32,
    pub functions: u64,
    pub algorithm: String,
    pub seconds: String,
    pub ops: u64,
}

pub fn format_seconds(s: f64) -> String {
    format!("{s:.9}")
}

fn histogram_slot(n: u32, weight: Option<u32>) -> usize {
    weight.map_or(n as usize + 1, |w| w as usize)
}

fn median(mut v: Vec<u64>) -> u64 {
    if v.is_empty() {
        return 0;
    }
    let mid = v.len() / 2;
    *v.select_nth_unstable(mid).1
}

struct Prepared {
    seq: WloSequence,
    masks: MaskSet,
}

/// One untimed pass: per-function result weights and op counts.
fn gate_pass(
    alg: Algorithm,
    tables: &[TruthTable],
    pre: &Prepared,
) -> Result<(Vec<Option<u32>>, Vec<u64>)> {
    let mut weights = Vec::with_capacity(tables.len());
    let mut ops = Vec::with_capacity(tables.len());
    for tt in tables {
        let (w, o) = match alg {
            Algorithm::Exhaustive => {
                let t = search::exhaustive_max_traced(tt);
                (t.value.map(|h| h.weight), t.ops)
            }
            Algorithm::Wlo => {
                let t = search::wlo_search_max_traced(tt, &pre.seq)?;
                (t.value.map(|h| h.weight), t.ops)
            }
            Algorithm::Bitwise => {
                let t = search::bitwise_search_max_traced(tt, &pre.masks)?;
                (t.layer, t.word_ops)
            }
        };
        weights.push(w);
        ops.push(o);
    }
    Ok((weights, ops))
}

fn timed_pass(
    alg: Algorithm,
    tables: &[TruthTable],
    pre: &Prepared,
    n: u32,
) -> Result<(f64, Vec<u64>)> {
    let mut histogram = vec![0u64; n as usize + 2];
    let start = Instant::now();
    match alg {
        Algorithm::Exhaustive => {
            for tt in tables {
                let w = search::exhaustive_max(std::hint::black_box(tt)).map(|h| h.weight);
                histogram[histogram_slot(n, w)] += 1;
            }
        }
        Algorithm::Wlo => {
            for tt in tables {
                let w =
                    search::wlo_search_max(std::hint::black_box(tt), &pre.seq)?.map(|h| h.weight);
                histogram[histogram_slot(n, w)] += 1;
            }
        }
        Algorithm::Bitwise => {
            for tt in tables {
                let w = search::bitwise_search_max(std::hint::black_box(tt), &pre.masks)?;
                histogram[histogram_slot(n, w)] += 1;
            }
        }
    }
    Ok((start.elapsed().as_secs_f64(), histogram))
}

/// Runs `algorithms` (duplicates ignored, order kept) over an in-memory set
/// of truth tables.
pub fn run_bench_tables(
    dim: CubeDim,
    tables: &[TruthTable],
    algorithms: &[Algorithm],
) -> Result<BenchReport> {
    let n = dim.n();
    let mut algs: Vec<Algorithm> = Vec::new();
    for &a in algorithms {
        if !algs.contains(&a) {
            algs.push(a);
        }
    }
    let mut report = BenchReport {
        n,
        function_count: tables.len() as u64,
        results: Vec::new(),
    };
    if algs.is_empty() {
        return Ok(report);
    }
    if let Some(tt) = tables.iter().find(|t| t.dim() != dim) {
        return Err(Error::DimensionMismatch {
            left: n,
            right: tt.dim().n(),
        });
    }
    let seq = WloSequence::recursive(dim);
    let masks = MaskSet::recursive(dim);
    let pre = Prepared { seq, masks };

    let mut reference: Option<(Algorithm, Vec<Option<u32>>)> = None;
    let mut gated = Vec::with_capacity(algs.len());
    for &alg in &algs {
        let (weights, ops) = gate_pass(alg, tables, &pre)?;
        if let Some((ref_alg, ref_weights)) = &reference {
            if let Some(i) = ref_weights.iter().zip(&weights).position(|(a, b)| a != b) {
                return Err(Error::Inconsistent(format!(
                    "{alg} and {ref_alg} disagree on function {i}: {:?} vs {:?}",
                    weights[i], ref_weights[i]
                )));
            }
        } else {
            reference = Some((alg, weights.clone()));
        }
        let mut histogram = vec![0u64; n as usize + 2];
        for w in &weights {
            histogram[histogram_slot(n, *w)] += 1;
        }
        gated.push((alg, histogram, ops.iter().sum::<u64>(), median(ops)));
    }

    for (alg, histogram, ops, median_ops) in gated {
        let (seconds, timed_histogram) = timed_pass(alg, tables, &pre, n)?;
        if timed_histogram != histogram {
            return Err(Error::Inconsistent(format!(
                "{alg}: timed pass changed its results"
            )));
        }
        report.results.push(AlgorithmResult {
            algorithm: alg,
            seconds,
            ops,
            histogram,
            median_ops,
        });
    }
    Ok(report)
}

/// Loads the corpus, then times each algorithm's pure loop.
pub fn run_bench(corpus: &Corpus, dim: CubeDim, algorithms: &[Algorithm]) -> Result<BenchReport> {
    if algorithms.is_empty() {
        return Ok(BenchReport {
            n: dim.n(),
            function_count: corpus.function_count(),
            results: Vec::new(),
        });
    }
    let tables = corpus.load(dim)?;
    run_bench_tables(dim, &tables, algorithms)
}

pub fn write_report_to<W: Write>(report: &BenchReport, out: W) -> Result<()> {
    write_rows_to(&report.rows(), out)
}

/// CSV with header `n,functions,algorithm,seconds,ops`.
pub fn write_report(report: &BenchReport, path: impl AsRef<Path>) -> Result<()> {
    write_report_to(report, File::create(path)?)
}

pub fn write_rows_to<W: Write>(rows: &[ReportRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(["n", "functions", "algorithm", "seconds", "ops"])?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_report(path: impl AsRef<Path>) -> Result<Vec<ReportRow>> {
    let mut r = csv::Reader::from_path(path)?;
    let rows = r
        .deserialize()
        .collect::<std::result::Result<Vec<ReportRow>, _>>()?;
    for row in &rows {
        row.seconds.parse::<f64>().map_err(|_| {
            Error::parse(format!("seconds field {:?} is not a decimal", row.seconds))
        })?;
    }
    Ok(rows)
}
