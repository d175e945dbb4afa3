//! Characteristic vectors of the layers, packed into 64-bit words.
//!
//! Coordinate `i` of a mask lives in `words[i / 64]` at bit `i % 64`, the
//! same layout as [`TruthTable`](crate::search::TruthTable), so a layer test
//! is a word-wise AND. The MSB-first "serial number" of a mask is only
//! produced on demand by [`LayerMask::msb_serial`].

use num_bigint::BigUint;

use crate::cube::{CubeDim, VecSerial};
use crate::enumerate::BigCount;
use crate::error::{Error, Result};
use crate::wlo::WloSequence;

/// The characteristic vector `m_{n,k}` of the layer of weight `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerMask {
    dim: CubeDim,
    k: u32,
    words: Vec<u64>,
}

impl LayerMask {
    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    pub fn layer(&self) -> u32 {
        self.k
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Whether coordinate `serial` belongs to the layer.
    pub fn test(&self, serial: VecSerial) -> Result<bool> {
        self.dim.check_same(serial.dim())?;
        let s = serial.serial();
        Ok(self.words[(s >> 6) as usize] >> (s & 63) & 1 == 1)
    }

    /// The integer whose `2^n`-bit MSB-first expansion is the mask, i.e.
    /// coordinate 0 is the most significant bit.
    pub fn msb_serial(&self) -> BigCount {
        let size = self.dim.size();
        let mut reversed: Vec<u64> = self.words.iter().rev().map(|w| w.reverse_bits()).collect();
        if size < 64 {
            reversed[0] >>= 64 - size;
        }
        let bytes: Vec<u8> = reversed.iter().flat_map(|w| w.to_le_bytes()).collect();
        BigCount::from(BigUint::from_bytes_le(&bytes))
    }

    /// 0/1 characters, coordinate 0 first, in space-separated blocks of 8.
    pub fn render_bits(&self) -> String {
        let size = self.dim.size() as usize;
        let mut out = String::with_capacity(size + size / 8);
        for i in 0..size {
            if i > 0 && i % 8 == 0 {
                out.push(' ');
            }
            let bit = self.words[i >> 6] >> (i & 63) & 1;
            out.push(if bit == 1 { '1' } else { '0' });
        }
        out
    }
}

/// All `n + 1` layer masks of a cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskSet {
    dim: CubeDim,
    masks: Vec<LayerMask>,
}

impl MaskSet {
    /// Sets, for every layer, the bits named by the layer's WLO slice.
    pub fn from_wlo(seq: &WloSequence) -> Self {
        let dim = seq.dim();
        let wc = dim.word_count();
        let masks = (0..=dim.n())
            .map(|k| {
                let mut words = vec![0u64; wc];
                for &s in seq.layer_slice(k).expect("k <= n") {
                    words[(s >> 6) as usize] |= 1u64 << (s & 63);
                }
                LayerMask { dim, k, words }
            })
            .collect();
        MaskSet { dim, masks }
    }

    /// Builds `m_{r,i}` from `m_{r-1,i}` (low half) and `m_{r-1,i-1}` (high
    /// half), starting from `m_{1,0} = {0}`, `m_{1,1} = {1}`. Halves are
    /// in-word shifts while `2^r <= 64`, whole-word blocks after that.
    pub fn recursive(dim: CubeDim) -> Self {
        let mut rows: Vec<Vec<u64>> = vec![vec![0b01], vec![0b10]];
        for r in 2..=dim.n() {
            let next: Vec<Vec<u64>> = if r <= 6 {
                let half = 1u32 << (r - 1);
                (0..=r as usize)
                    .map(|i| {
                        let low = rows.get(i).map_or(0, |m| m[0]);
                        let high = if i > 0 { rows[i - 1][0] } else { 0 };
                        vec![low | high << half]
                    })
                    .collect()
            } else {
                let half_words = 1usize << (r - 7);
                (0..=r as usize)
                    .map(|i| {
                        let mut words = Vec::with_capacity(2 * half_words);
                        match rows.get(i) {
                            Some(m) => words.extend_from_slice(m),
                            None => words.resize(half_words, 0),
                        }
                        if i > 0 {
                            words.extend_from_slice(&rows[i - 1]);
                        } else {
                            words.resize(2 * half_words, 0);
                        }
                        words
                    })
                    .collect()
            };
            rows = next;
        }
        let masks = rows
            .into_iter()
            .enumerate()
            .map(|(k, words)| LayerMask {
                dim,
                k: k as u32,
                words,
            })
            .collect();
        MaskSet { dim, masks }
    }

    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    pub fn get(&self, k: u32) -> Result<&LayerMask> {
        self.masks
            .get(k as usize)
            .ok_or_else(|| Error::domain(format!("layer {k} out of range for n={}", self.dim)))
    }

    pub fn masks(&self) -> &[LayerMask] {
        &self.masks
    }
}
