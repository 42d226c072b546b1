//! Index subsets of `{0, …, n-1}` stored as bitmasks, and their enumeration
//! in size-then-lexicographic order.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient dimension an [`IndexSet`] can describe.
pub const MAX_DIM: usize = 64;

/// A duplicate-free subset of `{0, …, n-1}`.
///
/// Members are zero-based; `Display` prints them one-based (`{1,3}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSet {
    mask: u64,
    n: usize,
}

impl IndexSet {
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        if n > MAX_DIM {
            return Err(Error::IndexOutOfRange {
                index: n,
                n: MAX_DIM,
            });
        }
        let mut mask = 0u64;
        for &i in members {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            mask |= 1 << i;
        }
        Ok(IndexSet { mask, n })
    }

    /// Builds a set from one-based indices, as typed by a user.
    pub fn from_one_based(n: usize, members: &[usize]) -> Result<Self> {
        let zero_based = members
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or(Error::IndexOutOfRange { index: 0, n })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, &zero_based)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_DIM);
        IndexSet {
            mask: full_mask(n),
            n,
        }
    }

    pub fn empty(n: usize) -> Self {
        IndexSet { mask: 0, n }
    }

    /// Panics if bits above `n` are set.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(
            n <= MAX_DIM && mask & !full_mask(n) == 0,
            "mask outside dimension"
        );
        IndexSet { mask, n }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.mask >> i & 1 == 1
    }

    pub fn complement(&self) -> Self {
        IndexSet {
            mask: !self.mask & full_mask(self.n),
            n: self.n,
        }
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.mask & !other.mask == 0
    }

    /// Members in increasing order.
    pub fn members(&self) -> Members {
        Members { rest: self.mask }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members().collect()
    }
}

pub struct Members {
    rest: u64,
}

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.rest == 0 {
            return None;
        }
        let i = self.rest.trailing_zeros() as usize;
        self.rest &= self.rest - 1;
        Some(i)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Bitmasks of all `size`-element subsets of `{0, …, n-1}`, ordered
/// lexicographically by their sorted member lists.
pub fn combinations(n: usize, size: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | 1 << i));
        // advance to the next combination
        let mut pos = size;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] < n - size + pos {
                break;
            }
        }
        idx[pos] += 1;
        for k in pos + 1..size {
            idx[k] = idx[k - 1] + 1;
        }
    }
}

/// Every non-empty subset, smallest first, ties broken lexicographically.
pub fn size_lex_order(n: usize) -> Vec<u64> {
    (1..=n).flat_map(|k| combinations(n, k)).collect()
}
