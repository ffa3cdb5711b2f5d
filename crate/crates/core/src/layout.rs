//! Wire lists for one row of the hypercube under a node placement and a
//! terminal arrangement.
//!
//! # Cut coordinates
//!
//! Every column carries `lg N` terminal slots. A *fine cut* is either a
//! vertical line just right of slot `s` on the node in column `c`, or the
//! gap between two columns. With `w = lg N + 1` the fine cuts are indexed
//!
//! ```text
//! gap with i columns to its left     i * w
//! just right of slot s on column c   c * w + s        (1 <= s <= lg N)
//! ```
//!
//! so `c * w + w` is the gap right of column `c`, and the whole row spans
//! indices `0 ..= N * w`.
//!
//! # Side attachment
//!
//! A wire leaving its left node from slot `s` crosses the fine cuts right
//! of slots `s..=lg N` on that node. A wire entering its right node at slot
//! `s` crosses the cuts right of slots `1..s` on that node. For a node in
//! column `i - 1` of the normal layout this gives the identity
//! `T(i, p) = S(i) + e(i - 1, p)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bits::BitView;
use crate::density;
use crate::error::{Error, Result};
use crate::row::HypercubeRow;

/// Where each node label goes along the row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PlacementScheme {
    /// Node `u` in column `u`.
    Normal,
    /// Column `j` holds node `j ^ (j >> 1)` (binary-reflected code).
    #[serde(rename = "gray")]
    GrayCode,
}

impl PlacementScheme {
    pub const ALL: [PlacementScheme; 2] = [PlacementScheme::Normal, PlacementScheme::GrayCode];

    /// Node label placed in column `col`.
    pub fn node_at(&self, col: usize) -> usize {
        match self {
            PlacementScheme::Normal => col,
            PlacementScheme::GrayCode => col ^ (col >> 1),
        }
    }

    /// Column holding node `node`.
    pub fn column_of(&self, node: usize) -> usize {
        match self {
            PlacementScheme::Normal => node,
            PlacementScheme::GrayCode => {
                let mut col = node;
                let mut shift = node >> 1;
                while shift != 0 {
                    col ^= shift;
                    shift >>= 1;
                }
                col
            }
        }
    }
}

impl fmt::Display for PlacementScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlacementScheme::Normal => "normal",
            PlacementScheme::GrayCode => "gray",
        })
    }
}

impl FromStr for PlacementScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "normal" => Ok(PlacementScheme::Normal),
            "gray" => Ok(PlacementScheme::GrayCode),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown placement `{other}` (expected normal|gray)"),
            }),
        }
    }
}

/// How terminals are arranged on each node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TerminalMode {
    /// Terminals may be permuted per node; only gaps between columns are
    /// treated as cuts.
    #[serde(rename = "free")]
    FreePermutation,
    /// Every node uses the same slot order (slot `p` carries dimension `p`
    /// unless a custom uniform order is given).
    #[serde(rename = "dim-ordered")]
    DimensionOrdered,
}

impl TerminalMode {
    pub const ALL: [TerminalMode; 2] = [TerminalMode::FreePermutation, TerminalMode::DimensionOrdered];
}

impl fmt::Display for TerminalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TerminalMode::FreePermutation => "free",
            TerminalMode::DimensionOrdered => "dim-ordered",
        })
    }
}

impl FromStr for TerminalMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(TerminalMode::FreePermutation),
            "dim-ordered" => Ok(TerminalMode::DimensionOrdered),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown mode `{other}` (expected free|dim-ordered)"),
            }),
        }
    }
}

/// One hypercube link drawn as a horizontal span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wire {
    pub dim: u32,
    pub left_col: usize,
    pub right_col: usize,
    pub left_slot: u32,
    pub right_slot: u32,
}

impl Wire {
    /// Horizontal length in columns.
    pub fn span(&self) -> usize {
        self.right_col - self.left_col
    }
}

/// Every link of one row, resolved to columns and terminal slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Netlist {
    pub row: HypercubeRow,
    pub placement: PlacementScheme,
    pub mode: TerminalMode,
    /// Sorted by `(dim, left_col)`.
    pub wires: Vec<Wire>,
}

/// Builds the netlist of a row.
///
/// In dimension-ordered mode slot `p` carries dimension `p` on every
/// node. In free mode each node gets its own arrangement: wires leaving
/// to the left occupy the leftmost slots (longest dimension first),
/// followed by wires leaving to the right (shortest dimension first). That
/// arrangement keeps every through-node cut at or below the adjacent gap
/// densities.
pub fn build_netlist(row: HypercubeRow, placement: PlacementScheme, mode: TerminalMode) -> Netlist {
    let mut wires = raw_wires(row, placement, |k| k);
    if mode == TerminalMode::FreePermutation {
        assign_free_slots(row, &mut wires);
    }
    Netlist {
        row,
        placement,
        mode,
        wires,
    }
}

/// Builds a dimension-ordered netlist where every node uses the same
/// terminal order: `order[k - 1]` is the slot carrying dimension `k`.
pub fn build_netlist_with_order(
    row: HypercubeRow,
    placement: PlacementScheme,
    order: &[u32],
) -> Result<Netlist> {
    let dims = row.dims();
    let mut seen = vec![false; dims as usize + 1];
    if order.len() != dims as usize {
        return Err(Error::InvalidOrder { dims });
    }
    for &slot in order {
        if slot == 0 || slot > dims || seen[slot as usize] {
            return Err(Error::InvalidOrder { dims });
        }
        seen[slot as usize] = true;
    }
    let wires = raw_wires(row, placement, |k| order[k as usize - 1]);
    Ok(Netlist {
        row,
        placement,
        mode: TerminalMode::DimensionOrdered,
        wires,
    })
}

fn raw_wires(row: HypercubeRow, placement: PlacementScheme, slot_of: impl Fn(u32) -> u32) -> Vec<Wire> {
    let n = row.n();
    let mut wires = Vec::with_capacity(n / 2 * row.dims() as usize);
    for k in 1..=row.dims() {
        let h = 1usize << (k - 1);
        let start = wires.len();
        for u in (0..n).filter(|u| u & h == 0) {
            let (a, b) = (placement.column_of(u), placement.column_of(u | h));
            let slot = slot_of(k);
            wires.push(Wire {
                dim: k,
                left_col: a.min(b),
                right_col: a.max(b),
                left_slot: slot,
                right_slot: slot,
            });
        }
        wires[start..].sort_unstable_by_key(|w| w.left_col);
    }
    wires
}

fn assign_free_slots(row: HypercubeRow, wires: &mut [Wire]) {
    // Per column: (leaves to the left?, dim, wire index).
    let mut ends: Vec<Vec<(bool, u32, usize)>> = vec![Vec::new(); row.n()];
    for (idx, w) in wires.iter().enumerate() {
        ends[w.left_col].push((false, w.dim, idx));
        ends[w.right_col].push((true, w.dim, idx));
    }
    for list in &mut ends {
        list.sort_unstable_by(|x, y| {
            y.0.cmp(&x.0).then(if x.0 { y.1.cmp(&x.1) } else { x.1.cmp(&y.1) })
        });
        for (pos, &(leftward, _, idx)) in list.iter().enumerate() {
            let slot = pos as u32 + 1;
            if leftward {
                wires[idx].right_slot = slot;
            } else {
                wires[idx].left_slot = slot;
            }
        }
    }
}

/// Sum of wire spans, in columns.
pub fn total_wirelength(net: &Netlist) -> usize {
    net.wires.iter().map(Wire::span).sum()
}

/// Longest wire span, in columns; 0 for an empty row.
pub fn max_wirelength(net: &Netlist) -> usize {
    net.wires.iter().map(Wire::span).max().unwrap_or(0)
}

/// Index of the gap with `i` columns to its left.
pub fn gap_cut(row: &HypercubeRow, i: usize) -> usize {
    i * (row.dims() as usize + 1)
}

/// Index of the cut just right of slot `slot` on column `col`.
pub fn slot_cut(row: &HypercubeRow, col: usize, slot: u32) -> usize {
    col * (row.dims() as usize + 1) + slot as usize
}

/// Number of fine cut indices, `N * (lg N + 1) + 1`.
pub fn fine_cut_count(row: &HypercubeRow) -> usize {
    row.n() * (row.dims() as usize + 1) + 1
}

/// A decoded fine cut index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FineCut {
    Gap(usize),
    Slot { col: usize, slot: u32 },
}

pub fn locate_cut(row: &HypercubeRow, index: usize) -> FineCut {
    let w = row.dims() as usize + 1;
    match index % w {
        0 => FineCut::Gap(index / w),
        s => FineCut::Slot {
            col: index / w,
            slot: s as u32,
        },
    }
}

/// Wires crossing the cut just right of slot `p` on the node in column
/// `i - 1`, for the dimension-ordered normal layout.
///
/// Computed as `S(i) + e(i - 1, p)`; `terminal_density(i, lg N)` is
/// `S(i)`.
pub fn terminal_density(row: &HypercubeRow, i: usize, p: u32) -> Result<usize> {
    if i == 0 || i > row.n() {
        return Err(Error::InvalidCut {
            index: i,
            lo: 1,
            hi: row.n(),
        });
    }
    if p == 0 || p > row.dims() {
        return Err(Error::InvalidSlot {
            slot: p,
            dims: row.dims(),
        });
    }
    let s = density::density_unchecked(row, i) as i64;
    let e = BitView::new(i as u64 - 1, row.dims()).excess(p);
    Ok((s + e) as usize)
}

/// The largest [`terminal_density`] over every `(i, p)` and the positions
/// attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TerminalMax {
    pub value: usize,
    /// `(i, p)` pairs in increasing order of `i`, then `p`.
    pub at: Vec<(usize, u32)>,
}

impl TerminalMax {
    /// Distinct column cuts `i` among the attaining positions.
    pub fn cuts(&self) -> Vec<usize> {
        let mut cuts: Vec<usize> = self.at.iter().map(|&(i, _)| i).collect();
        cuts.dedup();
        cuts
    }
}

pub fn max_terminal_density(row: &HypercubeRow) -> Result<TerminalMax> {
    row.require_nontrivial()?;
    let mut best = TerminalMax {
        value: 0,
        at: Vec::new(),
    };
    for i in 1..=row.n() {
        let s = density::density_unchecked(row, i) as i64;
        let bits = BitView::new(i as u64 - 1, row.dims());
        for p in 1..=row.dims() {
            let t = (s + bits.excess(p)) as usize;
            if t > best.value {
                best.value = t;
                best.at.clear();
            }
            if t == best.value {
                best.at.push((i, p));
            }
        }
    }
    Ok(best)
}

impl Netlist {
    /// Line-oriented text form: a header `N placement mode`, then one
    /// `dim left_col left_slot right_col right_slot` line per wire.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.row.n(), self.placement, self.mode);
        for w in &self.wires {
            out.push_str(&format!(
                "{} {} {} {} {}\n",
                w.dim, w.left_col, w.left_slot, w.right_col, w.right_slot
            ));
        }
        out
    }

    /// Parses [`Netlist::to_text`] output. Blank lines and `#` comments are
    /// skipped; every wire is range-checked against the header.
    pub fn from_text(text: &str) -> Result<Netlist> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(idx, l)| (idx + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [n, placement, mode] = fields[..] else {
            return Err(Error::Parse {
                line: hline,
                msg: "header must be `N placement mode`".into(),
            });
        };
        let n: u64 = parse_num(hline, n)?;
        let row = HypercubeRow::new(n)?;
        let placement = placement.parse().map_err(|e| relabel(e, hline))?;
        let mode = mode.parse().map_err(|e| relabel(e, hline))?;

        let mut wires = Vec::new();
        for (line, body) in lines {
            let nums = body
                .split_whitespace()
                .map(|t| parse_num::<usize>(line, t))
                .collect::<Result<Vec<_>>>()?;
            let [dim, left_col, left_slot, right_col, right_slot] = nums[..] else {
                return Err(Error::Parse {
                    line,
                    msg: "wire must have 5 fields".into(),
                });
            };
            let bad = |msg: &str| Error::Parse {
                line,
                msg: msg.into(),
            };
            let dims = row.dims() as usize;
            if dim == 0 || dim > dims {
                return Err(bad("dimension out of range"));
            }
            if left_col >= right_col || right_col >= row.n() {
                return Err(bad("columns must satisfy left < right < N"));
            }
            if !(1..=dims).contains(&left_slot) || !(1..=dims).contains(&right_slot) {
                return Err(bad("slot out of range"));
            }
            wires.push(Wire {
                dim: dim as u32,
                left_col,
                right_col,
                left_slot: left_slot as u32,
                right_slot: right_slot as u32,
            });
        }
        Ok(Netlist {
            row,
            placement,
            mode,
            wires,
        })
    }
}

fn parse_num<T: FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a nonnegative integer, got `{tok}`"),
    })
}

fn relabel(err: Error, line: usize) -> Error {
    match err {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}
