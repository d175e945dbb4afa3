//! Serial numbers, weights, distance and the two vector orders of `{0,1}^n`.
//!
//! A vector `(a_1, ..., a_n)` is identified with the integer whose n-digit
//! binary expansion is `a_1 ... a_n`, `a_1` being the most significant digit.
//! No coordinate-array type exists; everything works on serials.

use std::fmt;

use crate::error::{Error, Result};

/// Number of coordinates of the cube, `1 <= n <= 30`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeDim(u32);

impl CubeDim {
    pub const MAX: u32 = 30;

    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > Self::MAX {
            return Err(Error::domain(format!(
                "cube dimension must be in 1..={}, got {n}",
                Self::MAX
            )));
        }
        Ok(CubeDim(n))
    }

    #[inline]
    pub fn n(self) -> u32 {
        self.0
    }

    /// `2^n`, the number of vectors.
    #[inline]
    pub fn size(self) -> u64 {
        1u64 << self.0
    }

    /// Serial of the all-ones vector.
    #[inline]
    pub fn max_serial(self) -> u64 {
        self.size() - 1
    }

    /// Number of 64-bit words in a packed `2^n`-bit vector.
    #[inline]
    pub fn word_count(self) -> usize {
        if self.0 <= 6 {
            1
        } else {
            1usize << (self.0 - 6)
        }
    }

    pub(crate) fn check_same(self, other: CubeDim) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.0,
                right: other.0,
            })
        }
    }
}

impl fmt::Display for CubeDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A vector of the cube, given by its serial number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VecSerial {
    serial: u64,
    dim: CubeDim,
}

impl VecSerial {
    pub fn new(serial: u64, dim: CubeDim) -> Result<Self> {
        if serial >= dim.size() {
            return Err(Error::domain(format!(
                "serial {serial} out of range for n={dim} (must be < {})",
                dim.size()
            )));
        }
        Ok(VecSerial { serial, dim })
    }

    /// Caller guarantees `serial < 2^n`.
    #[inline]
    pub(crate) fn new_unchecked(serial: u64, dim: CubeDim) -> Self {
        debug_assert!(serial < dim.size());
        VecSerial { serial, dim }
    }

    #[inline]
    pub fn serial(self) -> u64 {
        self.serial
    }

    #[inline]
    pub fn dim(self) -> CubeDim {
        self.dim
    }

    /// Number of 1-coordinates.
    #[inline]
    pub fn weight(self) -> u32 {
        self.serial.count_ones()
    }

    pub fn hamming_distance(self, other: VecSerial) -> Result<u32> {
        self.dim.check_same(other.dim)?;
        Ok((self.serial ^ other.serial).count_ones())
    }

    /// Coordinatewise `self <= other`.
    pub fn precedes(self, other: VecSerial) -> Result<bool> {
        self.dim.check_same(other.dim)?;
        Ok(self.serial & other.serial == self.serial)
    }

    /// Neighbours in the cube graph, split by layer.
    ///
    /// `lower` holds the `wt` vectors obtained by clearing one set bit,
    /// `upper` the `n - wt` vectors obtained by setting one clear bit. Both
    /// are ascending.
    pub fn adjacent_split(self) -> (Vec<VecSerial>, Vec<VecSerial>) {
        let n = self.dim.n();
        let w = self.weight() as usize;
        let mut lower = Vec::with_capacity(w);
        let mut upper = Vec::with_capacity(n as usize - w);
        for bit in 0..n {
            let flipped = self.serial ^ (1u64 << bit);
            let v = VecSerial::new_unchecked(flipped, self.dim);
            if flipped < self.serial {
                lower.push(v);
            } else {
                upper.push(v);
            }
        }
        // Clearing bit 0, 1, ... gives descending values; setting gives ascending.
        lower.reverse();
        (lower, upper)
    }
}

impl fmt::Display for VecSerial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serial)
    }
}

/// Weights of all `2^n` vectors in lexicographic (serial) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    dim: CubeDim,
    weights: Vec<u8>,
}

impl WeightTable {
    /// Doubling recurrence: the second half of each table is the first half
    /// with 1 added to every entry.
    pub fn build(dim: CubeDim) -> Self {
        let size = dim.size() as usize;
        let mut weights = Vec::with_capacity(size);
        weights.push(0u8);
        while weights.len() < size {
            let half = weights.len();
            weights.extend_from_within(..half);
            for w in &mut weights[half..] {
                *w += 1;
            }
        }
        WeightTable { dim, weights }
    }

    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    #[inline]
    pub fn get(&self, serial: u64) -> Option<u32> {
        self.weights.get(serial as usize).map(|&w| u32::from(w))
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.weights
    }
}
