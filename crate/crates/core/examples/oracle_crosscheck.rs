//! Cross-checks the closed forms and the router against brute force:
//! per-cut crossing counts, exact minimum colourings on small rows, and
//! the full invariant sweep.
//!
//! cargo run --release --example oracle_crosscheck -- 1024

use hypercube_layout::density::{max_density, profile};
use hypercube_layout::oracle::{brute_density_profile, brute_track_count, clique_bound, EXACT_TRACK_CAP};
use hypercube_layout::report::{check, OutputFormat};
use hypercube_layout::router::{extract_intervals, left_edge_route};
use hypercube_layout::{build_netlist, HypercubeRow, PlacementScheme, TerminalMode};

fn main() -> hypercube_layout::Result<()> {
    let max_n: u64 = std::env::args().nth(1).map_or(Ok(256), |s| s.parse()).expect("N must be an integer");

    let row = HypercubeRow::new(16)?;
    let net = build_netlist(row, PlacementScheme::Normal, TerminalMode::FreePermutation);
    assert_eq!(brute_density_profile(&net).gaps(), profile(&row));
    println!("N=16 profile matches the crossing scan, m = {}", max_density(&row));

    for dims in 1..=3 {
        for placement in PlacementScheme::ALL {
            for mode in TerminalMode::ALL {
                let ivs = extract_intervals(&build_netlist(HypercubeRow::from_dims(dims)?, placement, mode));
                if ivs.len() > EXACT_TRACK_CAP {
                    continue;
                }
                println!(
                    "N={:<2} {:>6} {:>11}: left-edge {}, exact {}, clique {}",
                    1 << dims,
                    placement.to_string(),
                    mode.to_string(),
                    left_edge_route(&ivs).track_count,
                    brute_track_count(&ivs)?,
                    clique_bound(&ivs)
                );
            }
        }
    }

    let report = check(HypercubeRow::new(max_n)?)?;
    print!("{}", report.render(OutputFormat::Text)?);
    Ok(())
}
