//! Subsets of an ordered n-element universe as characteristic vectors.
//!
//! Element `i` of the universe is coordinate `a_{i+1}`, so the first element
//! is the most significant bit of the serial: in `{a,...,f}` the set
//! `{b,c,e}` has serial `0b011010 = 26`.

use std::collections::HashMap;

use crate::cube::{CubeDim, VecSerial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetUniverse {
    elements: Vec<String>,
    index: HashMap<String, u32>,
    dim: CubeDim,
}

impl SubsetUniverse {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = labels.into_iter().map(Into::into).collect();
        let dim = CubeDim::new(elements.len() as u32)?;
        let mut index = HashMap::with_capacity(elements.len());
        for (i, label) in elements.iter().enumerate() {
            if index.insert(label.clone(), i as u32).is_some() {
                return Err(Error::domain(format!("duplicate label {label:?}")));
            }
        }
        Ok(SubsetUniverse {
            elements,
            index,
            dim,
        })
    }

    /// Splits a comma-separated label list.
    pub fn parse(list: &str) -> Result<Self> {
        Self::new(list.split(',').map(str::trim))
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    fn bit_of(&self, position: u32) -> u64 {
        1u64 << (self.dim.n() - 1 - position)
    }

    /// Characteristic vector of `members`.
    pub fn rank<'u, I, S>(&'u self, members: I) -> Result<SubsetHandle<'u>>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut serial = 0u64;
        for m in members {
            let m = m.as_ref();
            let pos = self
                .index
                .get(m)
                .ok_or_else(|| Error::domain(format!("label {m:?} is not in the universe")))?;
            serial |= self.bit_of(*pos);
        }
        Ok(self.handle_unchecked(serial))
    }

    /// Members of the subset with the given serial, in universe order.
    pub fn unrank(&self, serial: u64) -> Result<Vec<&str>> {
        Ok(self.handle(serial)?.members())
    }

    pub fn handle(&self, serial: u64) -> Result<SubsetHandle<'_>> {
        let serial = VecSerial::new(serial, self.dim)?;
        Ok(SubsetHandle {
            universe: self,
            serial,
        })
    }

    fn handle_unchecked(&self, serial: u64) -> SubsetHandle<'_> {
        SubsetHandle {
            universe: self,
            serial: VecSerial::new_unchecked(serial, self.dim),
        }
    }

    /// All subsets by cardinality, ascending serial within a cardinality.
    ///
    /// Streamed with Gosper's next-same-popcount step; nothing of size `2^n`
    /// is allocated.
    pub fn in_cardinality_order(&self) -> impl Iterator<Item = SubsetHandle<'_>> + '_ {
        (0..=self.dim.n()).flat_map(move |k| self.layer_iter(k))
    }

    /// Subsets of exactly `k` elements, ascending serial.
    pub fn k_subsets(&self, k: u32) -> Result<impl Iterator<Item = SubsetHandle<'_>> + '_> {
        if k > self.dim.n() {
            return Err(Error::domain(format!(
                "k={k} exceeds universe size {}",
                self.dim
            )));
        }
        Ok(self.layer_iter(k))
    }

    fn layer_iter(&self, k: u32) -> impl Iterator<Item = SubsetHandle<'_>> + '_ {
        let limit = self.dim.size();
        let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
        let mut next = Some(first);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                let low = cur & cur.wrapping_neg();
                let ripple = cur + low;
                let succ = (((ripple ^ cur) >> 2) / low) | ripple;
                (succ < limit).then_some(succ)
            };
            Some(self.handle_unchecked(cur))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    /// Complement of the left operand; the right one is ignored.
    ComplementOfA,
    SymmetricDifference,
}

#[derive(Debug, Clone, Copy)]
pub struct SubsetHandle<'u> {
    universe: &'u SubsetUniverse,
    serial: VecSerial,
}

impl PartialEq for SubsetHandle<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.serial == other.serial && self.universe == other.universe
    }
}

impl Eq for SubsetHandle<'_> {}

impl<'u> SubsetHandle<'u> {
    pub fn serial(&self) -> VecSerial {
        self.serial
    }

    pub fn universe(&self) -> &'u SubsetUniverse {
        self.universe
    }

    pub fn cardinality(&self) -> u32 {
        self.serial.weight()
    }

    pub fn members(&self) -> Vec<&'u str> {
        let u = self.universe;
        u.elements
            .iter()
            .enumerate()
            .filter(|(i, _)| self.serial.serial() & u.bit_of(*i as u32) != 0)
            .map(|(_, e)| e.as_str())
            .collect()
    }

    /// Bitwise realization of the set operations.
    pub fn set_op(&self, other: &SubsetHandle<'u>, op: SetOp) -> Result<SubsetHandle<'u>> {
        if !std::ptr::eq(self.universe, other.universe) && self.universe != other.universe {
            return Err(Error::domain("subsets belong to different universes"));
        }
        let (a, b) = (self.serial.serial(), other.serial.serial());
        let full = self.universe.dim.max_serial();
        let serial = match op {
            SetOp::Union => a | b,
            SetOp::Intersection => a & b,
            SetOp::ComplementOfA => !a & full,
            SetOp::SymmetricDifference => a ^ b,
        };
        Ok(self.universe.handle_unchecked(serial))
    }

    /// Subset inclusion, via the "precedes" order on serials.
    pub fn is_subset_of(&self, other: &SubsetHandle<'u>) -> Result<bool> {
        self.serial.precedes(other.serial)
    }
}
