//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain or I/O error, 2 usage error.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bench::{self, Algorithm, Corpus};
use crate::cube::CubeDim;
use crate::enumerate::{self, BigCount, Relation};
use crate::error::{Error, Result};
use crate::fixtures::{self, Sequence};
use crate::masks::MaskSet;
use crate::search::{self, TruthTable};
use crate::subsets::SubsetUniverse;
use crate::wlo::WloSequence;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "boolcube",
    version,
    about = "Weight-lexicographic order, layer masks and max-weight search on the Boolean cube"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the WLO sequence l_N, or its layer K
    Wlo {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        layer: Option<u32>,
        /// Write one serial per line to FILE instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Print the layer masks as 0/1 rows, or as MSB-first serial numbers
    Masks {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        msb_serials: bool,
    },
    /// Find a support vector of maximal (or minimal) weight
    Search {
        #[arg(long)]
        n: u32,
        /// 0/1 string (coordinate 0 first) or a file: raw little-endian words or hex text
        #[arg(long, value_name = "FILE|BITSTRING")]
        tt: String,
        #[arg(long)]
        min: bool,
    },
    /// Algebraic degree from ANF coefficients (or from a truth table)
    Degree {
        #[arg(long)]
        n: u32,
        #[arg(
            long,
            value_name = "FILE|BITSTRING",
            conflicts_with = "tt",
            required_unless_present = "tt"
        )]
        anf: Option<String>,
        /// Truth table; converted with the Möbius transform first
        #[arg(long, value_name = "FILE|BITSTRING")]
        tt: Option<String>,
    },
    /// Print "n value" lines of a counting sequence
    Enumerate {
        #[arg(long, value_name = "A051459|A001142|A000142")]
        seq: String,
        #[arg(long)]
        upto: u32,
        /// Cross-check against the brute-force oracle where it is feasible
        #[arg(long)]
        oracle: bool,
    },
    /// Rank, unrank and list subsets of a universe
    Subsets(SubsetsArgs),
    /// Generate a random corpus or time the search algorithms on one
    Bench(BenchArgs),
    /// Validate the OEIS b-file fixtures in a directory
    Fixtures {
        #[arg(long, value_name = "PATH")]
        dir: PathBuf,
    },
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("action").required(true).args(["all", "k", "rank", "unrank"])))]
struct SubsetsArgs {
    /// Comma-separated labels
    #[arg(long)]
    universe: String,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    k: Option<u32>,
    /// Comma-separated members
    #[arg(long, value_name = "X", allow_hyphen_values = true)]
    rank: Option<String>,
    #[arg(long, value_name = "S")]
    unrank: Option<u64>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["gen", "run"])))]
struct BenchArgs {
    #[arg(long)]
    gen: bool,
    #[arg(long)]
    run: bool,
    #[arg(long)]
    n: u32,
    /// Corpus file (written by --gen, read by --run)
    #[arg(long, value_name = "FILE")]
    corpus: PathBuf,
    /// Number of functions to generate
    #[arg(long, default_value_t = 100_000)]
    count: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Comma-separated subset of exhaustive,wlo,bitwise
    #[arg(long, default_value = "exhaustive,wlo,bitwise")]
    algorithms: String,
    /// Write the CSV report to FILE instead of stdout
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,
}

/// Runs the CLI on `std::env::args_os()`-style arguments (program name
/// first) against the process's stdout and stderr.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = BufWriter::new(stdout.lock());
    let code = run(argv, &mut out, &mut stderr.lock());
    if out.flush().is_err() {
        return EXIT_DOMAIN;
    }
    code
}

/// [`dispatch`] with injectable streams.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Wlo {
            n,
            layer,
            out: file,
        } => cmd_wlo(n, layer, file.as_deref(), out),
        Command::Masks { n, msb_serials } => cmd_masks(n, msb_serials, out),
        Command::Search { n, tt, min } => cmd_search(n, &tt, min, out),
        Command::Degree { n, anf, tt } => cmd_degree(n, anf.as_deref(), tt.as_deref(), out),
        Command::Enumerate { seq, upto, oracle } => cmd_enumerate(&seq, upto, oracle, out, err),
        Command::Subsets(args) => cmd_subsets(&args, out),
        Command::Bench(args) => cmd_bench(&args, out, err),
        Command::Fixtures { dir } => cmd_fixtures(&dir, out),
    }
}

fn cmd_wlo(n: u32, layer: Option<u32>, file: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let seq = WloSequence::recursive(CubeDim::new(n)?);
    let terms = match layer {
        Some(k) => seq.layer_slice(k)?,
        None => seq.order(),
    };
    match file {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            for s in terms {
                writeln!(w, "{s}")?;
            }
            w.flush()?;
        }
        None => {
            let line: Vec<String> = terms.iter().map(u32::to_string).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_masks(n: u32, msb_serials: bool, out: &mut dyn Write) -> Result<i32> {
    let ms = MaskSet::recursive(CubeDim::new(n)?);
    for m in ms.masks() {
        if msb_serials {
            writeln!(out, "{} {}", m.layer(), m.msb_serial())?;
        } else {
            writeln!(out, "{} {}", m.layer(), m.render_bits())?;
        }
    }
    Ok(EXIT_OK)
}

/// A 0/1 string of length `2^n`, else a file: exactly `8 * W` bytes of raw
/// little-endian words, or hex text (bit `i` of the number is coordinate `i`).
fn load_table(dim: CubeDim, arg: &str) -> Result<TruthTable> {
    if arg.len() as u64 == dim.size() && arg.bytes().all(|b| b == b'0' || b == b'1') {
        return TruthTable::from_bitstring(dim, arg);
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(Error::parse(format!(
            "{arg:?} is neither a {}-character 0/1 string nor an existing file",
            dim.size()
        )));
    }
    let bytes = fs::read(path)?;
    let is_text = bytes
        .iter()
        .all(|b| b.is_ascii_hexdigit() || b.is_ascii_whitespace() || *b == b'x');
    if is_text {
        let text = String::from_utf8_lossy(&bytes);
        let trimmed = text.trim();
        if trimmed.len() as u64 == dim.size() && trimmed.bytes().all(|b| b == b'0' || b == b'1') {
            return TruthTable::from_bitstring(dim, trimmed);
        }
        return TruthTable::from_hex(dim, trimmed);
    }
    if bytes.len() == 8 * dim.word_count() {
        let words = bytes
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().expect("8-byte chunk")))
            .collect();
        return TruthTable::from_words(dim, words);
    }
    Err(Error::parse(format!(
        "{arg}: expected {} bytes of words or hex text",
        8 * dim.word_count()
    )))
}

fn cmd_search(n: u32, tt: &str, min: bool, out: &mut dyn Write) -> Result<i32> {
    let dim = CubeDim::new(n)?;
    let tt = load_table(dim, tt)?;
    let seq = WloSequence::recursive(dim);
    let hit = if min {
        search::wlo_search_min(&tt, &seq)?
    } else {
        search::wlo_search_max(&tt, &seq)?
    };
    match hit {
        Some(h) => writeln!(out, "{} {}", h.serial, h.weight)?,
        None => writeln!(out, "none")?,
    }
    Ok(EXIT_OK)
}

fn cmd_degree(n: u32, anf: Option<&str>, tt: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let dim = CubeDim::new(n)?;
    let anf = match (anf, tt) {
        (Some(a), _) => load_table(dim, a)?,
        (None, Some(t)) => search::mobius_transform(&load_table(dim, t)?),
        (None, None) => return Err(Error::domain("one of --anf or --tt is required")),
    };
    let ms = MaskSet::recursive(dim);
    match search::algebraic_degree(&anf, &ms)? {
        Some(d) => writeln!(out, "{d}")?,
        None => writeln!(out, "none")?,
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(
    seq: &str,
    upto: u32,
    oracle: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let seq = Sequence::parse(seq)?;
    type Oracle = fn(u32) -> Result<BigCount>;
    let (closed, check, oracle_max): (fn(u32) -> Result<BigCount>, Oracle, u32) = match seq {
        Sequence::A051459 => (
            enumerate::count_weight_orders,
            enumerate::oracle_count_linear_extensions,
            3,
        ),
        Sequence::A001142 => (
            |n| Ok(enumerate::count_max_chains_wo(n)),
            |n| enumerate::oracle_count_chains(n, Relation::WeightOrder),
            4,
        ),
        Sequence::A000142 => (
            |n| Ok(enumerate::count_max_chains_precedes(n)),
            enumerate::oracle_count_shortest_paths,
            10,
        ),
        other => {
            return Err(Error::domain(format!(
                "{other} is not a counting sequence; use A051459, A001142 or A000142"
            )))
        }
    };
    if upto == 0 {
        return Err(Error::domain("--upto must be at least 1"));
    }
    let mut checked = 0;
    for n in 1..=upto {
        let value = closed(n)?;
        if oracle && n <= oracle_max {
            let brute = check(n)?;
            if brute != value {
                writeln!(
                    err,
                    "oracle mismatch at n={n}: closed form {value}, oracle {brute}"
                )?;
                return Ok(EXIT_DOMAIN);
            }
            checked = n;
        }
        writeln!(out, "{n} {value}")?;
    }
    if oracle {
        writeln!(err, "oracle agrees for n=1..={checked}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_subsets(args: &SubsetsArgs, out: &mut dyn Write) -> Result<i32> {
    let u = SubsetUniverse::parse(&args.universe)?;
    if let Some(members) = &args.rank {
        let labels: Vec<&str> = members
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        writeln!(out, "{}", u.rank(labels)?.serial())?;
    } else if let Some(serial) = args.unrank {
        writeln!(out, "{}", u.unrank(serial)?.join(","))?;
    } else if let Some(k) = args.k {
        for h in u.k_subsets(k)? {
            writeln!(out, "{}", h.members().join(","))?;
        }
    } else {
        for h in u.in_cardinality_order() {
            writeln!(out, "{}", h.members().join(","))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let dim = CubeDim::new(args.n)?;
    if args.gen {
        let c = bench::gen_corpus_for(dim, args.count, args.seed, &args.corpus)?;
        writeln!(
            err,
            "wrote {} functions ({} words) to {}",
            c.function_count(),
            c.word_count,
            c.path.display()
        )?;
        return Ok(EXIT_OK);
    }
    let algorithms = args
        .algorithms
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Algorithm>>>()?;
    let corpus = Corpus::open(&args.corpus)?;
    let report = bench::run_bench(&corpus, dim, &algorithms)?;
    match &args.report {
        Some(path) => bench::write_report(&report, path)?,
        None => bench::write_report_to(&report, &mut *out)?,
    }
    for r in &report.results {
        writeln!(
            err,
            "{}: median ops per function {}",
            r.algorithm, r.median_ops
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_fixtures(dir: &Path, out: &mut dyn Write) -> Result<i32> {
    let reports = fixtures::validate_dir(dir);
    let mut ok = true;
    for r in &reports {
        writeln!(out, "{r}")?;
        ok &= r.passed();
    }
    Ok(if ok { EXIT_OK } else { EXIT_DOMAIN })
}
