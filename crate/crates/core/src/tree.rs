//! Capacity and depth of packed m-ary trees.
//!
//! A tree whose nodes each hold `m` items, every item rooting a further
//! node, holds `m^k` items at depth `k`. Filled to depth `d` it holds
//! `m + m² + … + m^d` items, or `(m^(d+1) − 1)/(m − 1)` once the root item
//! is counted as well. The ternary tree of depth 3 holds 39 items, 40 with
//! its root.

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::error::{Error, Result};

/// Node size and depth of a packed tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TreeSpec {
    node_size: u64,
    depth: u64,
}

impl TreeSpec {
    pub fn new(node_size: u64, depth: u64) -> Result<TreeSpec> {
        if node_size < 2 {
            return Err(Error::InvalidNodeSize(node_size));
        }
        Ok(TreeSpec { node_size, depth })
    }

    pub fn node_size(&self) -> u64 {
        self.node_size
    }

    pub fn depth(&self) -> u64 {
        self.depth
    }

    /// Items held by the tree, closed form.
    pub fn capacity(&self, include_root: bool) -> BigUint {
        let m = BigUint::from(self.node_size);
        let with_root: BigUint = (Pow::pow(&m, self.depth + 1) - 1u32) / (m - 1u32);
        if include_root {
            with_root
        } else {
            with_root - 1u32
        }
    }
}

pub fn capacity(spec: &TreeSpec, include_root: bool) -> BigUint {
    spec.capacity(include_root)
}

/// Smallest depth whose tree, root included, holds at least `total` items.
///
/// For exactly packed totals this is `log_m(1 + (m−1)·total) − 1`; other
/// totals round up to the next depth.
pub fn depth_for(total_with_root: &BigUint, node_size: u64) -> Result<u64> {
    if node_size < 2 {
        return Err(Error::InvalidNodeSize(node_size));
    }
    if total_with_root < &BigUint::one() {
        return Err(Error::EmptyTree);
    }
    let mut depth = 0;
    let mut level = BigUint::one();
    let mut held = BigUint::one();
    while &held < total_with_root {
        level *= node_size;
        held += &level;
        depth += 1;
    }
    Ok(depth)
}
