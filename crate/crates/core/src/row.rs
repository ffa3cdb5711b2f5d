use std::fmt;

use crate::error::{Error, Result};

/// Largest supported `lg N`.
pub const MAX_DIMS: u32 = 30;

/// One row of the hypercube layout: `n = 2^dims` nodes in a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HypercubeRow {
    n: usize,
    dims: u32,
}

impl HypercubeRow {
    /// Builds a row from its node count, which must be a power of two.
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(n));
        }
        Self::from_dims(n.trailing_zeros())
    }

    pub fn from_dims(dims: u32) -> Result<Self> {
        if dims > MAX_DIMS {
            return Err(Error::TooLarge {
                dims,
                max_dims: MAX_DIMS,
            });
        }
        Ok(HypercubeRow {
            n: 1usize << dims,
            dims,
        })
    }

    /// Node count `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `lg N`, also the number of link dimensions and terminal slots per node.
    pub fn dims(&self) -> u32 {
        self.dims
    }

    /// Validates an intercolumn cut index `0..=n`.
    pub fn check_cut(&self, i: usize) -> Result<()> {
        if i > self.n {
            return Err(Error::InvalidCut {
                index: i,
                lo: 0,
                hi: self.n,
            });
        }
        Ok(())
    }

    pub fn check_dim(&self, k: u32) -> Result<()> {
        if k == 0 || k > self.dims {
            return Err(Error::InvalidDimension { k, dims: self.dims });
        }
        Ok(())
    }

    pub(crate) fn require_nontrivial(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Degenerate(self.n));
        }
        Ok(())
    }

    /// Rows `2^lo ..= 2^hi`, in increasing size.
    pub fn range(lo: u32, hi: u32) -> impl Iterator<Item = HypercubeRow> {
        (lo..=hi).map(|d| HypercubeRow::from_dims(d).expect("dims within cap"))
    }
}

impl fmt::Display for HypercubeRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={}", self.n)
    }
}
