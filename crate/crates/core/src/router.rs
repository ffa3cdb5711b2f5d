//! Left-edge track assignment for a row channel.
//!
//! Every wire occupies one horizontal track across a contiguous range of
//! fine cuts. There are no vertical constraints between wires, so the
//! greedy left-edge order always uses exactly as many tracks as the
//! channel density.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::error::{Error, Result};
use crate::layout::{gap_cut, slot_cut, Netlist, TerminalMode, Wire};

/// A wire together with the inclusive range of fine cuts it crosses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalWire {
    pub wire: Wire,
    pub lo: usize,
    pub hi: usize,
}

impl IntervalWire {
    pub fn conflicts(&self, other: &IntervalWire) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Maps each netlist wire, in order, to its crossing range.
///
/// Free mode: only the gaps strictly between the endpoint columns, so
/// wires meeting at a node never conflict there. Dimension-ordered mode:
/// the range also reaches into both endpoint nodes according to the
/// terminal slots.
pub fn extract_intervals(net: &Netlist) -> Vec<IntervalWire> {
    let row = &net.row;
    net.wires
        .iter()
        .map(|&wire| {
            let (lo, hi) = match net.mode {
                TerminalMode::FreePermutation => (
                    gap_cut(row, wire.left_col + 1),
                    gap_cut(row, wire.right_col),
                ),
                TerminalMode::DimensionOrdered => (
                    slot_cut(row, wire.left_col, wire.left_slot),
                    slot_cut(row, wire.right_col, wire.right_slot) - 1,
                ),
            };
            assert!(lo <= hi, "empty crossing range for {wire:?}");
            IntervalWire { wire, lo, hi }
        })
        .collect()
}

/// Largest number of intervals covering one cut; 0 for no intervals.
pub fn channel_density(intervals: &[IntervalWire]) -> usize {
    let mut events: Vec<(usize, i32)> = Vec::with_capacity(intervals.len() * 2);
    for iv in intervals {
        events.push((iv.lo, 1));
        events.push((iv.hi + 1, -1));
    }
    // closings sort before openings at the same cut
    events.sort_unstable();
    let mut live = 0i64;
    let mut best = 0i64;
    for (_, delta) in events {
        live += delta as i64;
        best = best.max(live);
    }
    best as usize
}

/// Wire-to-track mapping produced by [`left_edge_route`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackAssignment {
    /// `tracks[w]` is the 0-based track of interval `w`.
    pub tracks: Vec<usize>,
    pub track_count: usize,
    pub density: usize,
}

/// Routes intervals with the left-edge rule.
///
/// Intervals are taken by `(lo, hi, dim, left_col)`; each goes to the
/// lowest-numbered track whose last interval ends strictly before it
/// starts, or opens a new track.
pub fn left_edge_route(intervals: &[IntervalWire]) -> TrackAssignment {
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    order.sort_by_key(|&w| {
        let iv = &intervals[w];
        (iv.lo, iv.hi, iv.wire.dim, iv.wire.left_col)
    });

    let mut tracks = vec![0usize; intervals.len()];
    let mut busy: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    let mut free: BTreeSet<usize> = BTreeSet::new();
    let mut track_count = 0;
    for w in order {
        let iv = &intervals[w];
        while let Some(&Reverse((hi, t))) = busy.peek() {
            if hi >= iv.lo {
                break;
            }
            busy.pop();
            free.insert(t);
        }
        let t = match free.pop_first() {
            Some(t) => t,
            None => {
                track_count += 1;
                track_count - 1
            }
        };
        tracks[w] = t;
        busy.push(Reverse((iv.hi, t)));
    }
    TrackAssignment {
        tracks,
        track_count,
        density: channel_density(intervals),
    }
}

/// Outcome of [`verify_assignment`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Ok,
    /// Two overlapping intervals (by index) share `track`.
    Overlap { first: usize, second: usize, track: usize },
    /// An interval sits on a track numbered at or above `track_count`.
    TrackOutOfRange { wire: usize, track: usize },
    /// More tracks than the channel density.
    Suboptimal { track_count: usize, density: usize },
}

impl Certificate {
    pub fn is_ok(&self) -> bool {
        matches!(self, Certificate::Ok)
    }
}

/// Checks that no track holds two overlapping intervals and that the track
/// count equals the channel density.
pub fn verify_assignment(intervals: &[IntervalWire], assignment: &TrackAssignment) -> Result<Certificate> {
    if assignment.tracks.len() != intervals.len() {
        return Err(Error::IncompleteAssignment {
            assigned: assignment.tracks.len(),
            expected: intervals.len(),
        });
    }
    let mut per_track: Vec<Vec<usize>> = vec![Vec::new(); assignment.track_count];
    for (w, &t) in assignment.tracks.iter().enumerate() {
        if t >= assignment.track_count {
            return Ok(Certificate::TrackOutOfRange { wire: w, track: t });
        }
        per_track[t].push(w);
    }
    for (t, members) in per_track.iter_mut().enumerate() {
        members.sort_by_key(|&w| (intervals[w].lo, w));
        for pair in members.windows(2) {
            if intervals[pair[0]].hi >= intervals[pair[1]].lo {
                return Ok(Certificate::Overlap {
                    first: pair[0],
                    second: pair[1],
                    track: t,
                });
            }
        }
    }
    let density = channel_density(intervals);
    if assignment.track_count != density {
        return Ok(Certificate::Suboptimal {
            track_count: assignment.track_count,
            density,
        });
    }
    Ok(Certificate::Ok)
}

/// A netlist routed and certified in one step.
#[derive(Debug, Clone)]
pub struct RoutedRow {
    pub net: Netlist,
    pub intervals: Vec<IntervalWire>,
    pub assignment: TrackAssignment,
}

impl RoutedRow {
    /// Extracts intervals, routes them and checks the certificate. A
    /// failing certificate is reported as an internal error.
    pub fn route(net: Netlist) -> Result<RoutedRow> {
        let intervals = extract_intervals(&net);
        let assignment = left_edge_route(&intervals);
        match verify_assignment(&intervals, &assignment)? {
            Certificate::Ok => Ok(RoutedRow {
                net,
                intervals,
                assignment,
            }),
            bad => Err(Error::Internal(format!("left-edge certificate failed: {bad:?}"))),
        }
    }

    pub fn track_count(&self) -> usize {
        self.assignment.track_count
    }

    /// `(dim, left_col, right_col, track)` per wire, in netlist order.
    pub fn rows(&self) -> impl Iterator<Item = (u32, usize, usize, usize)> + '_ {
        self.intervals
            .iter()
            .zip(&self.assignment.tracks)
            .map(|(iv, &t)| (iv.wire.dim, iv.wire.left_col, iv.wire.right_col, t))
    }
}

/// One `dim left_col right_col track` line per wire.
pub fn assignment_to_text(intervals: &[IntervalWire], assignment: &TrackAssignment) -> String {
    intervals
        .iter()
        .zip(&assignment.tracks)
        .map(|(iv, t)| format!("{} {} {} {}\n", iv.wire.dim, iv.wire.left_col, iv.wire.right_col, t))
        .collect()
}

/// Parses [`assignment_to_text`] output into `(dim, left_col, right_col, track)` rows.
pub fn assignment_from_text(text: &str) -> Result<Vec<(u32, usize, usize, usize)>> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse {
                line: idx + 1,
                msg: "expected nonnegative integers".into(),
            })?;
        let [dim, l, r, t] = nums[..] else {
            return Err(Error::Parse {
                line: idx + 1,
                msg: "track line must have 4 fields".into(),
            });
        };
        rows.push((dim as u32, l, r, t));
    }
    Ok(rows)
}
