//! Text and SVG pictures of a routed row.
//!
//! Nodes sit in one row at the bottom with their terminal slots in order;
//! tracks are stacked above them, track 0 nearest the nodes. Each wire
//! rises from its terminal, runs along its track and drops into the other
//! terminal.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::router::RoutedRow;

/// Text output is limited to this many character columns.
pub const TEXT_WIDTH_CAP: usize = 512;
/// SVG output is limited to this many node columns.
pub const SVG_COLUMN_CAP: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub cell_width: u32,
    pub cell_height: u32,
    pub show_tracks: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            cell_width: 48,
            cell_height: 24,
            show_tracks: false,
        }
    }
}

fn slot_char(dim: u32) -> char {
    char::from_digit(dim, 36).unwrap_or('?')
}

/// Character art, one character per terminal slot and one per gap.
///
/// Fails with [`Error::RenderTooLarge`] when `N * (lg N + 1)` exceeds
/// [`TEXT_WIDTH_CAP`].
pub fn render_text(routed: &RoutedRow, spec: &RenderSpec) -> Result<String> {
    let row = routed.net.row;
    let stride = row.dims() as usize + 1;
    let width = row.n() * stride;
    if width > TEXT_WIDTH_CAP {
        return Err(Error::RenderTooLarge {
            needed: width,
            cap: TEXT_WIDTH_CAP,
        });
    }
    let tracks = routed.track_count();
    let x_of = |col: usize, slot: u32| col * stride + slot as usize - 1;

    let mut grid = vec![vec![' '; width]; tracks];
    let line_of = |t: usize| tracks - 1 - t;
    // stubs first so the horizontal runs stay continuous
    for (iv, &t) in routed.intervals.iter().zip(&routed.assignment.tracks) {
        let w = &iv.wire;
        for x in [x_of(w.left_col, w.left_slot), x_of(w.right_col, w.right_slot)] {
            for line in grid.iter_mut().skip(line_of(t) + 1) {
                if line[x] == ' ' {
                    line[x] = '|';
                }
            }
        }
    }
    for (iv, &t) in routed.intervals.iter().zip(&routed.assignment.tracks) {
        let w = &iv.wire;
        let (xa, xb) = (x_of(w.left_col, w.left_slot), x_of(w.right_col, w.right_slot));
        let line = &mut grid[line_of(t)];
        line[xa] = '+';
        line[xb] = '+';
        for cell in &mut line[xa + 1..xb] {
            *cell = '-';
        }
    }

    let mut nodes = vec![' '; width];
    let mut slots = vec![0u32; width];
    for w in &routed.net.wires {
        slots[x_of(w.left_col, w.left_slot)] = w.dim;
        slots[x_of(w.right_col, w.right_slot)] = w.dim;
    }
    for (x, &d) in slots.iter().enumerate() {
        if d != 0 {
            nodes[x] = slot_char(d);
        }
    }
    let mut labels = String::new();
    for col in 0..row.n() {
        let node = routed.net.placement.node_at(col);
        let _ = write!(labels, "{:<stride$}", node);
    }

    let margin = if spec.show_tracks {
        format!("{}", tracks.saturating_sub(1)).len() + 1
    } else {
        0
    };
    let mut out = format!(
        "N={} placement={} mode={} tracks={}\n",
        row.n(),
        routed.net.placement,
        routed.net.mode,
        tracks
    );
    for (idx, line) in grid.iter().enumerate() {
        if spec.show_tracks {
            let _ = write!(out, "{:>w$} ", tracks - 1 - idx, w = margin - 1);
        }
        out.push_str(line.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    let pad = " ".repeat(margin);
    let _ = writeln!(out, "{pad}{}", nodes.iter().collect::<String>().trim_end());
    let _ = writeln!(out, "{pad}{}", labels.trim_end());
    Ok(out)
}

/// SVG drawing with one `cell_width` wide cell per node column.
///
/// Each track is a `<g class="track" data-track="t">` group holding one
/// polyline per wire.
pub fn render_svg(routed: &RoutedRow, spec: &RenderSpec) -> Result<String> {
    let row = routed.net.row;
    if row.n() > SVG_COLUMN_CAP {
        return Err(Error::RenderTooLarge {
            needed: row.n(),
            cap: SVG_COLUMN_CAP,
        });
    }
    if spec.cell_width == 0 || spec.cell_height == 0 {
        return Err(Error::Usage("svg cell dimensions must be positive".into()));
    }
    let (cw, ch) = (spec.cell_width as usize, spec.cell_height as usize);
    let pitch = (ch / 2).max(4);
    let margin = 10;
    let tracks = routed.track_count();
    let stride = row.dims() as usize + 1;
    let node_top = margin + tracks * pitch + pitch;
    let width = 2 * margin + row.n() * cw;
    let height = node_top + ch + margin;
    let x_of = |col: usize, slot: u32| margin + col * cw + slot as usize * cw / stride;
    let y_of = |t: usize| margin + (tracks - 1 - t) * pitch + pitch / 2;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        "<title>N={} placement={} mode={} tracks={}</title>",
        row.n(),
        routed.net.placement,
        routed.net.mode,
        tracks
    );
    let _ = writeln!(
        out,
        r#"<style>.wire{{fill:none;stroke:#1f4e8c;stroke-width:1.5}}.guide{{stroke:#ccc;stroke-dasharray:2 3}}.node{{fill:#f4f4f4;stroke:#333}}text{{font:10px monospace}}</style>"#
    );

    let mut by_track: Vec<Vec<usize>> = vec![Vec::new(); tracks];
    for (w, &t) in routed.assignment.tracks.iter().enumerate() {
        by_track[t].push(w);
    }
    for (t, members) in by_track.iter().enumerate() {
        let y = y_of(t);
        let _ = writeln!(out, r#"<g class="track" data-track="{t}">"#);
        if spec.show_tracks {
            let _ = writeln!(
                out,
                r#"<line class="guide" x1="{margin}" y1="{y}" x2="{}" y2="{y}"/>"#,
                width - margin
            );
        }
        for &w in members {
            let wire = &routed.intervals[w].wire;
            let xa = x_of(wire.left_col, wire.left_slot);
            let xb = x_of(wire.right_col, wire.right_slot);
            let _ = writeln!(
                out,
                r#"<polyline class="wire" data-dim="{}" points="{xa},{node_top} {xa},{y} {xb},{y} {xb},{node_top}"/>"#,
                wire.dim
            );
        }
        out.push_str("</g>\n");
    }

    out.push_str("<g class=\"nodes\">\n");
    for col in 0..row.n() {
        let x = margin + col * cw;
        let _ = writeln!(
            out,
            r#"<rect class="node" x="{}" y="{node_top}" width="{}" height="{ch}"/>"#,
            x + cw / (2 * stride),
            cw - cw / stride
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            x + cw / 2,
            node_top + ch / 2 + 4,
            routed.net.placement.node_at(col)
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{build_netlist, PlacementScheme, TerminalMode};
    use crate::row::HypercubeRow;

    fn routed(n: u64, placement: PlacementScheme, mode: TerminalMode) -> RoutedRow {
        RoutedRow::route(build_netlist(HypercubeRow::new(n).unwrap(), placement, mode)).unwrap()
    }

    fn track_lines(text: &str) -> usize {
        // header, tracks, node row, label row
        text.lines().count() - 3
    }

    #[test]
    fn text_track_rows_match_count() {
        let spec = RenderSpec::default();
        let fixed = render_text(&routed(8, PlacementScheme::Normal, TerminalMode::DimensionOrdered), &spec).unwrap();
        assert!(fixed.starts_with("N=8 placement=normal mode=dim-ordered tracks=6\n"));
        assert_eq!(track_lines(&fixed), 6);
        let free = render_text(&routed(8, PlacementScheme::Normal, TerminalMode::FreePermutation), &spec).unwrap();
        assert_eq!(track_lines(&free), 5);
        let two = render_text(&routed(2, PlacementScheme::Normal, TerminalMode::FreePermutation), &spec).unwrap();
        assert_eq!(two, "N=2 placement=normal mode=free tracks=1\n+-+\n1 1\n0 1\n");
    }

    #[test]
    fn text_node_row_lists_slots() {
        let text = render_text(
            &routed(4, PlacementScheme::Normal, TerminalMode::DimensionOrdered),
            &RenderSpec::default(),
        )
        .unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[lines.len() - 2], "12 12 12 12");
        assert_eq!(lines[lines.len() - 1], "0  1  2  3");
    }

    #[test]
    fn text_every_wire_has_two_corners() {
        let r = routed(16, PlacementScheme::GrayCode, TerminalMode::DimensionOrdered);
        let text = render_text(&r, &RenderSpec::default()).unwrap();
        let corners = text.matches('+').count();
        assert_eq!(corners, 2 * r.net.wires.len());
    }

    #[test]
    fn text_show_tracks_labels() {
        let text = render_text(
            &routed(8, PlacementScheme::Normal, TerminalMode::FreePermutation),
            &RenderSpec {
                show_tracks: true,
                ..RenderSpec::default()
            },
        )
        .unwrap();
        let labels: Vec<char> = text.lines().skip(1).take(5).map(|l| l.chars().next().unwrap()).collect();
        assert_eq!(labels, vec!['4', '3', '2', '1', '0']);
    }

    #[test]
    fn text_cap() {
        let r = routed(128, PlacementScheme::Normal, TerminalMode::FreePermutation);
        assert_eq!(
            render_text(&r, &RenderSpec::default()),
            Err(Error::RenderTooLarge {
                needed: 1024,
                cap: TEXT_WIDTH_CAP
            })
        );
        let ok = routed(64, PlacementScheme::Normal, TerminalMode::FreePermutation);
        assert!(render_text(&ok, &RenderSpec::default()).is_ok());
    }

    #[test]
    fn svg_groups_per_track() {
        let r = routed(8, PlacementScheme::Normal, TerminalMode::FreePermutation);
        let svg = render_svg(&r, &RenderSpec::default()).unwrap();
        assert!(svg.starts_with("<svg "));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches(r#"class="track""#).count(), 5);
        assert_eq!(svg.matches("<polyline").count(), 12);
        assert_eq!(svg.matches(r#"class="node""#).count(), 8);
        let bad = RenderSpec {
            cell_width: 0,
            ..RenderSpec::default()
        };
        assert!(matches!(render_svg(&r, &bad), Err(Error::Usage(_))));
    }
}
