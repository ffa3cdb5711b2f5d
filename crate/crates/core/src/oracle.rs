//! Brute-force ground truth.
//!
//! Nothing here evaluates a closed-form density expression or reuses the
//! router's range computation. Crossings are decided per wire and per cut
//! from the wire geometry alone, and minimum track counts come from an
//! exhaustive colouring search.

use crate::error::{Error, Result};
use crate::layout::{Netlist, TerminalMode, Wire};
use crate::router::IntervalWire;

/// Largest instance accepted by [`brute_track_count`].
pub const EXACT_TRACK_CAP: usize = 24;

/// Crossing counts at every fine cut of a row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingTable {
    n: usize,
    dims: u32,
    counts: Vec<usize>,
}

impl CrossingTable {
    fn stride(&self) -> usize {
        self.dims as usize + 1
    }

    /// Count at the gap with `i` columns to its left, `0 <= i <= N`.
    pub fn gap(&self, i: usize) -> usize {
        self.counts[i * self.stride()]
    }

    /// Count just right of slot `slot` on column `col`.
    pub fn slot(&self, col: usize, slot: u32) -> usize {
        self.counts[col * self.stride() + slot as usize]
    }

    /// Gap counts for `i = 1..N`.
    pub fn gaps(&self) -> Vec<usize> {
        (1..self.n).map(|i| self.gap(i)).collect()
    }

    pub fn max_gap(&self) -> usize {
        self.gaps().into_iter().max().unwrap_or(0)
    }

    /// Maximum over every cut, gaps and through-node cuts alike.
    pub fn max_fine(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }
}

/// Does `wire` cross the line just right of `slot` on column `col`?
/// `slot == dims + 1` denotes the gap right of the column.
fn crosses(wire: &Wire, mode: TerminalMode, dims: u32, col: usize, slot: u32) -> bool {
    let gap = slot == dims + 1;
    if gap {
        return wire.left_col <= col && col < wire.right_col;
    }
    if wire.left_col < col && col < wire.right_col {
        return true;
    }
    match mode {
        TerminalMode::FreePermutation => false,
        // leaves its left node rightwards from left_slot; enters its right
        // node from the left at right_slot
        TerminalMode::DimensionOrdered => {
            (col == wire.left_col && wire.left_slot <= slot)
                || (col == wire.right_col && slot < wire.right_slot)
        }
    }
}

/// Counts, for every cut, the wires crossing it by testing each wire
/// against each cut position over the columns it touches.
pub fn brute_density_profile(net: &Netlist) -> CrossingTable {
    let n = net.row.n();
    let dims = net.row.dims();
    let stride = dims as usize + 1;
    let mut counts = vec![0usize; n * stride + 1];
    for wire in &net.wires {
        for col in wire.left_col..=wire.right_col {
            for slot in 1..=dims + 1 {
                if crosses(wire, net.mode, dims, col, slot) {
                    counts[col * stride + slot as usize] += 1;
                }
            }
        }
    }
    CrossingTable { n, dims, counts }
}

/// Every gap `i` in `1..N` attaining the largest gap count.
pub fn brute_maximizers(net: &Netlist) -> Vec<usize> {
    let table = brute_density_profile(net);
    let best = table.max_gap();
    (1..net.row.n()).filter(|&i| table.gap(i) == best).collect()
}

/// Largest number of pairwise-overlapping intervals, found by counting,
/// for each interval start, how many intervals contain it.
pub fn clique_bound(intervals: &[IntervalWire]) -> usize {
    intervals
        .iter()
        .map(|a| {
            intervals
                .iter()
                .filter(|b| b.lo <= a.lo && a.lo <= b.hi)
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// Exact minimum number of tracks by backtracking colouring.
///
/// Tries `k = 1, 2, ...` colours until one admits a conflict-free
/// assignment. Capped at [`EXACT_TRACK_CAP`] intervals.
pub fn brute_track_count(intervals: &[IntervalWire]) -> Result<usize> {
    if intervals.len() > EXACT_TRACK_CAP {
        return Err(Error::InstanceTooLarge {
            wires: intervals.len(),
            cap: EXACT_TRACK_CAP,
        });
    }
    let m = intervals.len();
    let adj: Vec<Vec<bool>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| a != b && intervals[a].lo <= intervals[b].hi && intervals[b].lo <= intervals[a].hi)
                .collect()
        })
        .collect();
    for k in 0..=m {
        let mut colour = vec![usize::MAX; m];
        if colourable(0, k, &adj, &mut colour) {
            return Ok(k);
        }
    }
    unreachable!("m colours always suffice")
}

fn colourable(v: usize, k: usize, adj: &[Vec<bool>], colour: &mut [usize]) -> bool {
    if v == colour.len() {
        return true;
    }
    // symmetry: vertex v never needs a colour above the largest used so far + 1
    let used = colour[..v].iter().copied().max().map_or(0, |c| c + 1);
    for c in 0..k.min(used + 1) {
        if (0..v).any(|u| adj[v][u] && colour[u] == c) {
            continue;
        }
        colour[v] = c;
        if colourable(v + 1, k, adj, colour) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}
