//! Max/min-weight support search and algebraic degree.
//!
//! Three solvers for "find a vector of maximal weight with `f = 1`":
//! a full scan of the truth table, a scan in reverse WLO order that stops at
//! the first hit, and a bitwise pass that ANDs the table with the layer masks
//! from the top layer down. Ties between witnesses of equal weight resolve to
//! the greatest serial, which is what the reverse WLO scan yields naturally.

use crate::cube::{CubeDim, VecSerial};
use crate::error::{Error, Result};
use crate::masks::{LayerMask, MaskSet};
use crate::wlo::WloSequence;

/// A Boolean function of `n` variables, `2^n` bits packed LSB-first into
/// 64-bit words. Bit `i` is `f` at the vector with serial `i`. Also used for
/// ANF coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    dim: CubeDim,
    words: Vec<u64>,
}

fn low_mask(dim: CubeDim) -> u64 {
    if dim.n() >= 6 {
        u64::MAX
    } else {
        (1u64 << dim.size()) - 1
    }
}

impl TruthTable {
    pub fn zero(dim: CubeDim) -> Self {
        TruthTable {
            dim,
            words: vec![0; dim.word_count()],
        }
    }

    pub fn ones(dim: CubeDim) -> Self {
        TruthTable {
            dim,
            words: vec![low_mask(dim); dim.word_count()],
        }
    }

    /// Rejects a wrong word count or stray bits above `2^n` when `n < 6`.
    pub fn from_words(dim: CubeDim, words: Vec<u64>) -> Result<Self> {
        if words.len() != dim.word_count() {
            return Err(Error::parse(format!(
                "n={dim} needs {} words, got {}",
                dim.word_count(),
                words.len()
            )));
        }
        if words[0] & !low_mask(dim) != 0 {
            return Err(Error::parse(format!(
                "bits above coordinate {} are set",
                dim.size() - 1
            )));
        }
        Ok(TruthTable { dim, words })
    }

    /// Like [`from_words`](Self::from_words) but clears bits above `2^n`.
    pub fn from_words_truncated(dim: CubeDim, mut words: Vec<u64>) -> Result<Self> {
        if let Some(w) = words.first_mut() {
            *w &= low_mask(dim);
        }
        Self::from_words(dim, words)
    }

    pub fn from_serials<I: IntoIterator<Item = u64>>(dim: CubeDim, serials: I) -> Result<Self> {
        let mut tt = Self::zero(dim);
        for s in serials {
            tt.set(VecSerial::new(s, dim)?, true);
        }
        Ok(tt)
    }

    /// Parses `2^n` characters `0`/`1`, coordinate 0 first.
    pub fn from_bitstring(dim: CubeDim, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.len() as u64 != dim.size() {
            return Err(Error::parse(format!(
                "bit string for n={dim} must have {} characters, got {}",
                dim.size(),
                text.len()
            )));
        }
        let mut tt = Self::zero(dim);
        for (i, ch) in text.bytes().enumerate() {
            match ch {
                b'0' => {}
                b'1' => tt.words[i >> 6] |= 1u64 << (i & 63),
                other => {
                    return Err(Error::parse(format!(
                        "unexpected character {:?} at position {i}",
                        other as char
                    )))
                }
            }
        }
        Ok(tt)
    }

    /// Parses a hexadecimal number whose bit `i` (LSB = bit 0) is coordinate
    /// `i`. Leading zeros may be omitted; `0x` and whitespace are ignored.
    pub fn from_hex(dim: CubeDim, text: &str) -> Result<Self> {
        let digits: String = text
            .trim()
            .trim_start_matches("0x")
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_')
            .collect();
        if digits.is_empty() {
            return Err(Error::parse("empty hex truth table"));
        }
        let mut words = vec![0u64; dim.word_count()];
        for (pos, ch) in digits.chars().rev().enumerate() {
            let nibble = ch
                .to_digit(16)
                .ok_or_else(|| Error::parse(format!("invalid hex digit {ch:?}")))?
                as u64;
            if nibble == 0 {
                continue;
            }
            let bit = pos * 4;
            if bit / 64 >= words.len() {
                return Err(Error::parse(format!(
                    "hex truth table too long for n={dim}"
                )));
            }
            words[bit / 64] |= nibble << (bit % 64);
        }
        Self::from_words(dim, words)
    }

    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn bit(&self, serial: u64) -> bool {
        self.words[(serial >> 6) as usize] >> (serial & 63) & 1 == 1
    }

    pub fn get(&self, serial: VecSerial) -> Result<bool> {
        self.dim.check_same(serial.dim())?;
        Ok(self.bit(serial.serial()))
    }

    pub fn set(&mut self, serial: VecSerial, value: bool) {
        let s = serial.serial();
        let (w, b) = ((s >> 6) as usize, s & 63);
        if value {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Inverse of [`from_bitstring`](Self::from_bitstring).
    pub fn to_bitstring(&self) -> String {
        (0..self.dim.size())
            .map(|i| if self.bit(i) { '1' } else { '0' })
            .collect()
    }

    /// Ascending serials of the set bits.
    pub fn support(&self) -> Vec<u64> {
        set_bits(self.words.iter().copied())
    }
}

fn set_bits<I: IntoIterator<Item = u64>>(words: I) -> Vec<u64> {
    let mut out = Vec::new();
    for (i, mut w) in words.into_iter().enumerate() {
        while w != 0 {
            let b = u64::from(w.trailing_zeros());
            out.push(((i as u64) << 6) | b);
            w &= w - 1;
        }
    }
    out
}

/// A support vector together with its weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchHit {
    pub serial: VecSerial,
    pub weight: u32,
}

impl SearchHit {
    fn new(serial: u64, dim: CubeDim) -> Self {
        let serial = VecSerial::new_unchecked(serial, dim);
        SearchHit {
            serial,
            weight: serial.weight(),
        }
    }
}

/// Result of a search plus the work it did: truth-table probes for the
/// scanning searches, word ANDs for the bitwise search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Traced<T> {
    pub value: T,
    pub ops: u64,
}

/// Outcome of the bitwise search with both of its work counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitwiseTrace {
    pub layer: Option<u32>,
    /// Masks (layers) examined, counting the one that hit.
    pub rows: u32,
    pub word_ops: u64,
}

/// Checks every coordinate; keeps the heaviest hit, later serials winning
/// ties. Always `2^n` probes.
pub fn exhaustive_max(tt: &TruthTable) -> Option<SearchHit> {
    let size = tt.dim.size();
    let mut found = false;
    let mut best_serial = 0u64;
    let mut best_weight = 0u32;
    for i in 0..size {
        if tt.bit(i) {
            let w = i.count_ones();
            if w >= best_weight {
                best_serial = i;
                best_weight = w;
            }
            found = true;
        }
    }
    found.then(|| SearchHit::new(best_serial, tt.dim))
}

pub fn exhaustive_max_traced(tt: &TruthTable) -> Traced<Option<SearchHit>> {
    Traced {
        value: exhaustive_max(tt),
        ops: tt.dim.size(),
    }
}

/// Walks `l_n` from its last term down and returns the first support vector.
pub fn wlo_search_max(tt: &TruthTable, seq: &WloSequence) -> Result<Option<SearchHit>> {
    wlo_search_max_traced(tt, seq).map(|t| t.value)
}

pub fn wlo_search_max_traced(
    tt: &TruthTable,
    seq: &WloSequence,
) -> Result<Traced<Option<SearchHit>>> {
    tt.dim.check_same(seq.dim())?;
    let order = seq.order();
    for (probes, &s) in order.iter().rev().enumerate() {
        if tt.bit(u64::from(s)) {
            return Ok(Traced {
                value: Some(SearchHit::new(u64::from(s), tt.dim)),
                ops: probes as u64 + 1,
            });
        }
    }
    Ok(Traced {
        value: None,
        ops: order.len() as u64,
    })
}

/// Walks `l_n` upward: the lightest support vector, smallest serial on ties.
pub fn wlo_search_min(tt: &TruthTable, seq: &WloSequence) -> Result<Option<SearchHit>> {
    wlo_search_min_traced(tt, seq).map(|t| t.value)
}

pub fn wlo_search_min_traced(
    tt: &TruthTable,
    seq: &WloSequence,
) -> Result<Traced<Option<SearchHit>>> {
    tt.dim.check_same(seq.dim())?;
    let order = seq.order();
    for (probes, &s) in order.iter().enumerate() {
        if tt.bit(u64::from(s)) {
            return Ok(Traced {
                value: Some(SearchHit::new(u64::from(s), tt.dim)),
                ops: probes as u64 + 1,
            });
        }
    }
    Ok(Traced {
        value: None,
        ops: order.len() as u64,
    })
}

/// Highest layer whose mask meets the support, testing masks from `n` down.
/// Returns only the weight; see [`layer_support`] for the witnesses.
pub fn bitwise_search_max(tt: &TruthTable, ms: &MaskSet) -> Result<Option<u32>> {
    bitwise_search_max_traced(tt, ms).map(|t| t.layer)
}

pub fn bitwise_search_max_traced(tt: &TruthTable, ms: &MaskSet) -> Result<BitwiseTrace> {
    tt.dim.check_same(ms.dim())?;
    let mut word_ops = 0u64;
    let mut rows = 0u32;
    for mask in ms.masks().iter().rev() {
        rows += 1;
        for (f, m) in tt.words.iter().zip(mask.words()) {
            word_ops += 1;
            if f & m != 0 {
                return Ok(BitwiseTrace {
                    layer: Some(mask.layer()),
                    rows,
                    word_ops,
                });
            }
        }
    }
    Ok(BitwiseTrace {
        layer: None,
        rows,
        word_ops,
    })
}

/// Ascending serials of `tt AND mask`.
pub fn layer_support(tt: &TruthTable, mask: &LayerMask) -> Result<Vec<VecSerial>> {
    tt.dim.check_same(mask.dim())?;
    let dim = tt.dim;
    Ok(
        set_bits(tt.words.iter().zip(mask.words()).map(|(f, m)| f & m))
            .into_iter()
            .map(|s| VecSerial::new_unchecked(s, dim))
            .collect(),
    )
}

// Coordinates whose bit `s` is clear, for the in-word strides s = 1..32.
const LOW_HALVES: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Binary Möbius transform over GF(2): truth table to ANF coefficients and
/// back (the transform is an involution).
pub fn mobius_transform(tt: &TruthTable) -> TruthTable {
    let n = tt.dim.n();
    let mut words = tt.words.clone();
    for (step, &low) in LOW_HALVES.iter().enumerate().take(n.min(6) as usize) {
        let stride = 1u32 << step;
        for w in &mut words {
            *w ^= (*w & low) << stride;
        }
    }
    let mut stride = 1usize;
    while stride < words.len() {
        for block in words.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
        stride <<= 1;
    }
    TruthTable { dim: tt.dim, words }
}

/// Maximal weight of a monomial with a nonzero ANF coefficient; `None` for
/// the zero function.
pub fn algebraic_degree(anf: &TruthTable, ms: &MaskSet) -> Result<Option<u32>> {
    bitwise_search_max(anf, ms)
}
