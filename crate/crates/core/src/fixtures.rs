//! OEIS b-file fixtures and their validation against the library.
//!
//! A b-file holds one `index value` pair per line; `#` lines and blank lines
//! are skipped. Triangle sequences are flattened row by row starting at
//! row 0.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::cube::{CubeDim, WeightTable};
use crate::enumerate::{self, BigCount};
use crate::error::{Error, Result};
use crate::masks::MaskSet;
use crate::wlo::WloSequence;

/// Largest cube generated when checking the flattened WLO triangle.
const WLO_MAX_ROW: u32 = 20;
/// Mask serials have `2^n` bits; rows past this are not worth rendering.
const MASK_MAX_ROW: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    A294648,
    A305860,
    A051459,
    A001142,
    A000142,
    A000120,
}

impl Sequence {
    pub const ALL: [Sequence; 6] = [
        Sequence::A294648,
        Sequence::A305860,
        Sequence::A051459,
        Sequence::A001142,
        Sequence::A000142,
        Sequence::A000120,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Sequence::A294648 => "A294648",
            Sequence::A305860 => "A305860",
            Sequence::A051459 => "A051459",
            Sequence::A001142 => "A001142",
            Sequence::A000142 => "A000142",
            Sequence::A000120 => "A000120",
        }
    }

    pub fn parse(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|s| s.id().eq_ignore_ascii_case(id.trim()))
            .ok_or_else(|| Error::parse(format!("unknown sequence {id:?}")))
    }

    /// `b294648.txt` style file name.
    pub fn file_name(self) -> String {
        format!("b{}.txt", &self.id()[1..])
    }

    /// The first `count` terms, computed by the library.
    pub fn terms(self, count: usize) -> Result<Vec<BigCount>> {
        match self {
            Sequence::A294648 => wlo_triangle(count),
            Sequence::A305860 => mask_triangle(count),
            Sequence::A051459 => (0..count as u32)
                .map(enumerate::count_weight_orders)
                .collect(),
            Sequence::A001142 => Ok((0..count as u32)
                .map(enumerate::count_max_chains_wo)
                .collect()),
            Sequence::A000142 => Ok((0..count as u32)
                .map(enumerate::count_max_chains_precedes)
                .collect()),
            Sequence::A000120 => weight_terms(count),
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn wlo_triangle(count: usize) -> Result<Vec<BigCount>> {
    let mut out: Vec<BigCount> = Vec::with_capacity(count);
    if count > 0 {
        out.push(BigCount::from(0));
    }
    let mut n = 1;
    while out.len() < count {
        if n > WLO_MAX_ROW {
            return Err(Error::domain(format!(
                "A294648 check stops at row {WLO_MAX_ROW} ({} terms)",
                out.len()
            )));
        }
        let seq = WloSequence::recursive(CubeDim::new(n)?);
        let take = (count - out.len()).min(seq.order().len());
        out.extend(
            seq.order()[..take]
                .iter()
                .map(|&s| BigCount::from(u64::from(s))),
        );
        n += 1;
    }
    Ok(out)
}

fn mask_triangle(count: usize) -> Result<Vec<BigCount>> {
    let mut out: Vec<BigCount> = Vec::with_capacity(count);
    if count > 0 {
        out.push(BigCount::from(1));
    }
    let mut n = 1;
    while out.len() < count {
        if n > MASK_MAX_ROW {
            return Err(Error::domain(format!(
                "A305860 check stops at row {MASK_MAX_ROW} ({} terms)",
                out.len()
            )));
        }
        let ms = MaskSet::recursive(CubeDim::new(n)?);
        for m in ms.masks().iter().take(count - out.len()) {
            out.push(m.msb_serial());
        }
        n += 1;
    }
    Ok(out)
}

fn weight_terms(count: usize) -> Result<Vec<BigCount>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let n = (count as u64).next_power_of_two().trailing_zeros().max(1);
    let table = WeightTable::build(CubeDim::new(n)?);
    Ok(table.as_slice()[..count]
        .iter()
        .map(|&w| BigCount::from(u64::from(w)))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub entries: Vec<(u64, BigCount)>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(index), Some(value), None) = (parts.next(), parts.next(), parts.next())
            else {
                return Err(Error::parse(format!(
                    "line {}: expected \"index value\"",
                    lineno + 1
                )));
            };
            let index: u64 = index
                .parse()
                .map_err(|_| Error::parse(format!("line {}: bad index {index:?}", lineno + 1)))?;
            entries.push((index, value.parse()?));
        }
        Ok(BFile { entries })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    /// Writes the terms with indices starting at `offset`.
    pub fn render(terms: &[BigCount], offset: u64) -> String {
        terms
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{} {v}\n", i as u64 + offset))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureOutcome {
    Pass {
        terms: usize,
    },
    Mismatch {
        index: u64,
        expected: BigCount,
        found: BigCount,
    },
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub sequence: Sequence,
    pub outcome: FixtureOutcome,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, FixtureOutcome::Pass { .. })
    }
}

impl fmt::Display for FixtureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            FixtureOutcome::Pass { terms } => write!(f, "{} pass ({terms} terms)", self.sequence),
            FixtureOutcome::Mismatch {
                index,
                expected,
                found,
            } => write!(
                f,
                "{} FAIL at index {index}: expected {expected}, found {found}",
                self.sequence
            ),
            FixtureOutcome::Malformed(msg) => write!(f, "{} FAIL: {msg}", self.sequence),
        }
    }
}

/// Compares a b-file, whose indices must run consecutively from 0, with the
/// library's terms.
pub fn check_bfile(sequence: Sequence, bfile: &BFile) -> FixtureReport {
    let outcome = (|| {
        for (expect_index, (index, _)) in bfile.entries.iter().enumerate() {
            if *index != expect_index as u64 {
                return FixtureOutcome::Malformed(format!(
                    "index {index} where {expect_index} was expected"
                ));
            }
        }
        let terms = match sequence.terms(bfile.entries.len()) {
            Ok(t) => t,
            Err(e) => return FixtureOutcome::Malformed(e.to_string()),
        };
        for ((index, found), expected) in bfile.entries.iter().zip(terms) {
            if *found != expected {
                return FixtureOutcome::Mismatch {
                    index: *index,
                    expected,
                    found: found.clone(),
                };
            }
        }
        FixtureOutcome::Pass {
            terms: bfile.entries.len(),
        }
    })();
    FixtureReport { sequence, outcome }
}

/// Validates every known sequence whose b-file is found in `dir`.
pub fn validate_dir(dir: impl AsRef<Path>) -> Vec<FixtureReport> {
    let dir = dir.as_ref();
    Sequence::ALL
        .into_iter()
        .map(|seq| {
            let path = dir.join(seq.file_name());
            match BFile::read(&path) {
                Ok(b) if b.entries.is_empty() => FixtureReport {
                    sequence: seq,
                    outcome: FixtureOutcome::Malformed(format!("{} has no terms", path.display())),
                },
                Ok(b) => check_bfile(seq, &b),
                Err(e) => FixtureReport {
                    sequence: seq,
                    outcome: FixtureOutcome::Malformed(format!("{}: {e}", path.display())),
                },
            }
        })
        .collect()
}
