//! Weight-order structure on the n-dimensional Boolean cube.
//!
//! Vectors of `{0,1}^n` are addressed by their serial numbers. The crate
//! builds the weight-lexicographic order (WLO) sequence of the cube, the
//! characteristic vectors (masks) of its layers, and uses both to find a
//! vector of maximal or minimal weight in the support of a Boolean function
//! without scanning the whole truth table. The same search over an ANF
//! coefficient vector yields the algebraic degree.
//!
//! Around that core sit exact enumeration counts with brute-force oracles,
//! a subset ranking layer, a benchmark harness and a CLI.

pub mod bench;
pub mod cli;
pub mod cube;
pub mod enumerate;
mod error;
pub mod fixtures;
pub mod masks;
pub mod search;
pub mod subsets;
pub mod wlo;

pub use cube::{CubeDim, VecSerial, WeightTable};
pub use enumerate::BigCount;
pub use error::{Error, Result};
pub use masks::{LayerMask, MaskSet};
pub use search::{SearchHit, TruthTable};
pub use subsets::{SubsetHandle, SubsetUniverse};
pub use wlo::{PascalTables, WloSequence};
