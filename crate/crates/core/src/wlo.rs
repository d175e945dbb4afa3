//! The weight-lexicographic order sequence `l_n`.
//!
//! `l_n` lists all serials of `{0,1}^n` by ascending weight, ascending serial
//! within each weight. Two independent generators are provided: a bucket pass
//! over a weight table and the layer-wise recursion that builds `l_r` from
//! `l_{r-1}`. Both produce the same [`WloSequence`].

use std::io::{self, Write};

use crate::cube::{CubeDim, WeightTable};
use crate::error::{Error, Result};

/// Pascal's triangle up to row `n` and the layer start offsets derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalTables {
    dim: CubeDim,
    binom: Vec<Vec<u64>>,
    subseq_begin: Vec<Vec<u64>>,
}

impl PascalTables {
    pub fn build(dim: CubeDim) -> Self {
        let n = dim.n() as usize;
        let mut binom: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
        binom.push(vec![1]);
        for r in 1..=n {
            let prev = &binom[r - 1];
            let row: Vec<u64> = (0..=r)
                .map(|c| {
                    let left = if c > 0 { prev[c - 1] } else { 0 };
                    let right = prev.get(c).copied().unwrap_or(0);
                    left + right
                })
                .collect();
            binom.push(row);
        }
        let subseq_begin = binom
            .iter()
            .map(|row| {
                row.iter()
                    .scan(0u64, |acc, &b| {
                        let start = *acc;
                        *acc += b;
                        Some(start)
                    })
                    .collect()
            })
            .collect();
        PascalTables {
            dim,
            binom,
            subseq_begin,
        }
    }

    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    /// `C(r, c)`, zero outside the triangle.
    pub fn binom(&self, r: u32, c: u32) -> u64 {
        self.binom
            .get(r as usize)
            .and_then(|row| row.get(c as usize))
            .copied()
            .unwrap_or(0)
    }

    /// Start of layer `c` within `l_r`.
    pub fn subseq_begin(&self, r: u32, c: u32) -> u64 {
        self.subseq_begin
            .get(r as usize)
            .and_then(|row| row.get(c as usize))
            .copied()
            .unwrap_or(0)
    }

    pub fn binom_row(&self, r: u32) -> &[u64] {
        &self.binom[r as usize]
    }

    pub fn subseq_begin_row(&self, r: u32) -> &[u64] {
        &self.subseq_begin[r as usize]
    }
}

/// The sequence `l_n` with its per-layer offsets.
///
/// Serials are stored as `u32` (`n <= 30`), which halves the footprint of
/// the largest sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WloSequence {
    dim: CubeDim,
    order: Vec<u32>,
    layer_offsets: Vec<usize>,
}

impl WloSequence {
    /// Bucket construction: serial `i` goes to bucket `wt(i)` for ascending
    /// `i`. Buckets are contiguous regions of the output, sized from the
    /// binomial row, so concatenation is free.
    pub fn bucket(dim: CubeDim) -> Self {
        let weights = WeightTable::build(dim);
        let pascal = PascalTables::build(dim);
        let mut cursor: Vec<usize> = pascal
            .subseq_begin_row(dim.n())
            .iter()
            .map(|&b| b as usize)
            .collect();
        let mut order = vec![0u32; dim.size() as usize];
        for (serial, &w) in weights.as_slice().iter().enumerate() {
            let slot = &mut cursor[w as usize];
            order[*slot] = serial as u32;
            *slot += 1;
        }
        Self::with_offsets(dim, order, &pascal)
    }

    /// Layer recursion: layer `c` of `l_r` is layer `c` of `l_{r-1}`
    /// followed by layer `c-1` of `l_{r-1}` shifted by `2^{r-1}`.
    ///
    /// Runs in two ping-pong buffers of `2^n` entries.
    pub fn recursive(dim: CubeDim) -> Self {
        let pascal = PascalTables::build(dim);
        let size = dim.size() as usize;
        let mut prev = vec![0u32; size];
        let mut cur = vec![0u32; size];
        prev[1] = 1;
        let mut shift = 2u32;
        for r in 2..=dim.n() {
            cur[0] = 0;
            let mut k = 1usize;
            for c in 1..=r {
                let len = pascal.binom(r - 1, c) as usize;
                let beg = pascal.subseq_begin(r - 1, c) as usize;
                cur[k..k + len].copy_from_slice(&prev[beg..beg + len]);
                k += len;

                let len = pascal.binom(r - 1, c - 1) as usize;
                let beg = pascal.subseq_begin(r - 1, c - 1) as usize;
                for (dst, &src) in cur[k..k + len].iter_mut().zip(&prev[beg..beg + len]) {
                    *dst = src + shift;
                }
                k += len;
            }
            debug_assert_eq!(k, 1usize << r);
            std::mem::swap(&mut prev, &mut cur);
            shift <<= 1;
        }
        Self::with_offsets(dim, prev, &pascal)
    }

    fn with_offsets(dim: CubeDim, order: Vec<u32>, pascal: &PascalTables) -> Self {
        let mut layer_offsets: Vec<usize> = pascal
            .subseq_begin_row(dim.n())
            .iter()
            .map(|&b| b as usize)
            .collect();
        layer_offsets.push(order.len());
        WloSequence {
            dim,
            order,
            layer_offsets,
        }
    }

    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    /// `n + 2` entries; layer `k` occupies `order[offsets[k]..offsets[k+1]]`.
    pub fn layer_offsets(&self) -> &[usize] {
        &self.layer_offsets
    }

    /// The subsequence `l_{n,k}`.
    pub fn layer_slice(&self, k: u32) -> Result<&[u32]> {
        if k > self.dim.n() {
            return Err(Error::domain(format!(
                "layer {k} out of range for n={}",
                self.dim
            )));
        }
        let k = k as usize;
        Ok(&self.order[self.layer_offsets[k]..self.layer_offsets[k + 1]])
    }

    /// One decimal serial per line.
    pub fn write_text<W: Write>(&self, out: &mut W) -> io::Result<()> {
        for s in &self.order {
            writeln!(out, "{s}")?;
        }
        Ok(())
    }
}
