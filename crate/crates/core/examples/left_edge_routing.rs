//! Routes a row with the left-edge rule, verifies the result, and prints
//! the wire intervals with their tracks.
//!
//! cargo run --example left_edge_routing -- 8 dim-ordered

use hypercube_layout::router::{assignment_to_text, channel_density, extract_intervals, left_edge_route, verify_assignment};
use hypercube_layout::{build_netlist, HypercubeRow, PlacementScheme, TerminalMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map_or(Ok(8), |s| s.parse())?;
    let mode: TerminalMode = args.next().map_or(Ok(TerminalMode::FreePermutation), |s| s.parse())?;

    let net = build_netlist(HypercubeRow::new(n)?, PlacementScheme::Normal, mode);
    let intervals = extract_intervals(&net);
    let assignment = left_edge_route(&intervals);
    let certificate = verify_assignment(&intervals, &assignment)?;

    println!(
        "{} wires, channel density {}, {} tracks, certificate {certificate:?}",
        intervals.len(),
        channel_density(&intervals),
        assignment.track_count
    );
    for (iv, track) in intervals.iter().zip(&assignment.tracks) {
        println!(
            "  dim {} cols {}..{}  fine cuts [{}, {}]  track {track}",
            iv.wire.dim, iv.wire.left_col, iv.wire.right_col, iv.lo, iv.hi
        );
    }
    println!("\n# dim left_col right_col track");
    print!("{}", assignment_to_text(&intervals, &assignment));
    Ok(())
}
