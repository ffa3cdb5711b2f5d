//! Shows the extra track forced by dimension-ordered terminals: the
//! through-node density table, where its maximum sits, and the track
//! counts of both terminal modes.
//!
//! cargo run --example terminal_penalty -- 16

use hypercube_layout::density::max_density;
use hypercube_layout::layout::{build_netlist, max_terminal_density, terminal_density};
use hypercube_layout::{HypercubeRow, PlacementScheme, RoutedRow, TerminalMode};

fn main() -> hypercube_layout::Result<()> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(8), |s| s.parse()).expect("N must be an integer");
    let row = HypercubeRow::new(n)?;

    println!("through-node density T(i, p) for {row}");
    print!("{:>5}", "i");
    for p in 1..=row.dims() {
        print!(" {:>4}", format!("p={p}"));
    }
    println!();
    for i in 1..=row.n() {
        print!("{i:>5}");
        for p in 1..=row.dims() {
            print!(" {:>4}", terminal_density(&row, i, p)?);
        }
        println!();
    }

    let worst = max_terminal_density(&row)?;
    println!("max T = {} (m = {}) at cuts {:?}", worst.value, max_density(&row), worst.cuts());

    for mode in TerminalMode::ALL {
        let routed = RoutedRow::route(build_netlist(row, PlacementScheme::Normal, mode))?;
        println!("{:>12}: {} tracks", mode.to_string(), routed.track_count());
    }
    Ok(())
}
