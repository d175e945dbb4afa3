//! Exact counts attached to the weight order and the "precedes" order, and
//! brute-force oracles that recount them on small cubes.
//!
//! Everything here is integer arithmetic on [`BigCount`].

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::cube::{CubeDim, VecSerial};
use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(BigCount)
            .map_err(|e| Error::parse(format!("invalid integer {s:?}: {e}")))
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which order a chain has to respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// Coordinatewise `<=` (subset inclusion).
    Precedes,
    /// Strictly lighter before heavier.
    WeightOrder,
}

/// Product of `lo..hi` by balanced splitting, so the big multiplications
/// happen between operands of similar size.
fn range_product(lo: u64, hi: u64) -> BigUint {
    match hi.saturating_sub(lo) {
        0 => BigUint::one(),
        1 => BigUint::from(lo),
        2 => BigUint::from(lo) * hi.saturating_sub(1),
        len if len <= 16 => (lo..hi).fold(BigUint::one(), |acc, k| acc * k),
        len => {
            let mid = lo + len / 2;
            range_product(lo, mid) * range_product(mid, hi)
        }
    }
}

fn factorial(n: u64) -> BigUint {
    range_product(1, n + 1)
}

fn binomial_row(n: u32) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 0..n {
        let next = &row[k as usize] * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

/// Number of weight orders of `{0,1}^n`: `prod_k C(n,k)!`.
///
/// `n = 0` yields the empty-cube value 1. The result grows very fast
/// (2.27 million digits at `n = 19`), so `n` is capped at the cube limit.
pub fn count_weight_orders(n: u32) -> Result<BigCount> {
    if n > CubeDim::MAX {
        return Err(Error::Capacity {
            what: "count_weight_orders",
            max: CubeDim::MAX,
            got: n,
        });
    }
    let mut factors: Vec<BigUint> = binomial_row(n)
        .iter()
        .map(|c| {
            let c = c.to_u64_digits().first().copied().unwrap_or(0);
            factorial(c)
        })
        .collect();
    // multiply pairwise so the large factorials meet last
    while factors.len() > 1 {
        factors.sort_by_key(|f| f.bits());
        let a = factors.remove(0);
        let b = factors.remove(0);
        factors.push(a * b);
    }
    Ok(BigCount(factors.pop().unwrap_or_else(BigUint::one)))
}

/// Maximum chains under the weight order: `prod_k C(n,k)`.
pub fn count_max_chains_wo(n: u32) -> BigCount {
    BigCount(binomial_row(n).iter().product())
}

/// Maximum chains under "precedes": `n!`.
pub fn count_max_chains_precedes(n: u32) -> BigCount {
    BigCount(factorial(u64::from(n)))
}

fn capacity(what: &'static str, max: u32, got: u32) -> Result<()> {
    if got == 0 || got > max {
        Err(Error::Capacity { what, max, got })
    } else {
        Ok(())
    }
}

/// Counts maximum chains by depth-first search, one vector per layer, each
/// step related to the previous pick by `relation`.
pub fn oracle_count_chains(n: u32, relation: Relation) -> Result<BigCount> {
    let max = match relation {
        Relation::Precedes => 5,
        Relation::WeightOrder => 4,
    };
    capacity("oracle_count_chains", max, n)?;
    let dim = CubeDim::new(n)?;
    let layers: Vec<Vec<VecSerial>> = (0..=n)
        .map(|k| {
            (0..dim.size())
                .map(|s| VecSerial::new_unchecked(s, dim))
                .filter(|v| v.weight() == k)
                .collect()
        })
        .collect();

    fn related(a: VecSerial, b: VecSerial, relation: Relation) -> bool {
        match relation {
            Relation::Precedes => a.precedes(b).unwrap_or(false),
            Relation::WeightOrder => a.weight() < b.weight(),
        }
    }

    fn dfs(layers: &[Vec<VecSerial>], from: VecSerial, relation: Relation) -> u64 {
        match layers.split_first() {
            None => 1,
            Some((next, rest)) => next
                .iter()
                .filter(|&&v| related(from, v, relation))
                .map(|&v| dfs(rest, v, relation))
                .sum(),
        }
    }

    let total: u64 = layers[0]
        .iter()
        .map(|&start| dfs(&layers[1..], start, relation))
        .sum();
    Ok(BigCount::from(total))
}

fn lighter_than_masks(n: u32) -> Vec<u32> {
    // predecessors[v] = set of u with wt(u) < wt(v), as a bitmask over serials
    let size = 1u32 << n;
    (0..size)
        .map(|v| {
            (0..size)
                .filter(|u| u.count_ones() < v.count_ones())
                .fold(0u32, |acc, u| acc | 1 << u)
        })
        .collect()
}

/// Counts orderings of all `2^n` vectors that place lighter vectors first,
/// by dynamic programming over downsets: the number of ways to list a
/// downset `S` is the sum over its maximal elements `v` of the ways to list
/// `S \ {v}`.
pub fn oracle_count_linear_extensions(n: u32) -> Result<BigCount> {
    capacity("oracle_count_linear_extensions", 3, n)?;
    let size = 1u32 << n;
    let below = lighter_than_masks(n);
    let full = (1u32 << size) - 1;
    let mut ways: Vec<BigUint> = vec![BigUint::zero(); full as usize + 1];
    ways[0] = BigUint::one();
    for set in 0..full {
        if ways[set as usize].is_zero() {
            continue;
        }
        for (v, &lighter) in below.iter().enumerate() {
            let bit = 1u32 << v;
            if set & bit == 0 && lighter & !set == 0 {
                let add = ways[set as usize].clone();
                ways[(set | bit) as usize] += add;
            }
        }
    }
    Ok(BigCount(ways[full as usize].clone()))
}

/// Same count by filtering all `(2^n)!` permutations.
pub fn oracle_count_linear_extensions_by_permutations(n: u32) -> Result<BigCount> {
    capacity("oracle_count_linear_extensions_by_permutations", 3, n)?;
    let size = 1u32 << n;
    let mut perm: Vec<u32> = (0..size).collect();
    let mut count = 0u64;
    // lexicographic next-permutation walk
    loop {
        if perm
            .windows(2)
            .all(|p| p[0].count_ones() <= p[1].count_ones())
        {
            count += 1;
        }
        let Some(i) = (0..perm.len() - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..perm.len())
            .rev()
            .find(|&j| perm[j] > perm[i])
            .unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    Ok(BigCount::from(count))
}

/// Number of shortest paths from `0_n` to `1_n` in the cube graph, by BFS
/// with per-node path counts.
pub fn oracle_count_shortest_paths(n: u32) -> Result<BigCount> {
    capacity("oracle_count_shortest_paths", 10, n)?;
    let dim = CubeDim::new(n)?;
    let size = dim.size() as usize;
    let mut dist = vec![u32::MAX; size];
    let mut paths = vec![BigUint::zero(); size];
    let mut queue = VecDeque::new();
    dist[0] = 0;
    paths[0] = BigUint::one();
    queue.push_back(VecSerial::new_unchecked(0, dim));
    while let Some(v) = queue.pop_front() {
        let d = dist[v.serial() as usize];
        let (lower, upper) = v.adjacent_split();
        for w in lower.into_iter().chain(upper) {
            let wi = w.serial() as usize;
            if dist[wi] == u32::MAX {
                dist[wi] = d + 1;
                queue.push_back(w);
            }
            if dist[wi] == d + 1 {
                let add = paths[v.serial() as usize].clone();
                paths[wi] += add;
            }
        }
    }
    Ok(BigCount(paths[size - 1].clone()))
}
